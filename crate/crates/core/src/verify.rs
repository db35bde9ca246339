//! Self-checks that tie the catalog, the cover rules and the exact and
//! numeric symbol computations together. Used by `segre verify` and by the
//! acceptance tests.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{format_rational, frac, int, QMatrix, Rational};
use crate::classify::{self, class_degree, row_symbol, table_rows, transition_edges};
use crate::cli::{analyze, parse_quadratic_form, render_form, Verdict};
use crate::cover::{covers_of, CoverBase, VertexPosition};
use crate::error::Error;
use crate::numeric::{numeric_exponent_partitions, DEFAULT_TOL_CLUSTER, DEFAULT_TOL_RANK};
use crate::pencil::{invariant_factors, select_nonsingular_member, QuadricPencil};
use crate::symbol::{build_normal_form, compute_symbol, elementary_structure, p_block, q_block, random_instance, SegreSymbol};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CriterionResult {
    fn new(id: u8, title: &'static str) -> Self {
        CriterionResult {
            id,
            title,
            passed: true,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            self.failures.push(what());
        }
    }

    fn finish(mut self) -> Self {
        self.passed = self.failures.is_empty();
        self
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let ok = self.checked - self.failures.len();
        let mut s = format!("[{status}] {:>2}. {} ({ok}/{})", self.id, self.title, self.checked);
        if let Some(first) = self.failures.first() {
            s.push_str(&format!(": {first}"));
        }
        s
    }
}

pub const CRITERIA: u8 = 11;

pub fn run(id: u8) -> CriterionResult {
    match id {
        1 => catalog_classes(),
        2 => q_star_counts(),
        3 => smooth_quadric_covers(),
        4 => cone_covers(),
        5 => symbol_round_trip(100),
        6 => basis_invariance(100),
        7 => block_divisors(),
        8 => normal_forms(),
        9 => degenerate_pencils(),
        10 => numeric_agreement(50),
        11 => transition_graph(),
        _ => panic!("no criterion {id}"),
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=CRITERIA).map(run).collect()
}

fn sym(s: &str) -> SegreSymbol {
    s.parse().expect("literal symbol")
}

pub fn catalog_classes() -> CriterionResult {
    let mut r = CriterionResult::new(1, "class formula reproduces every table row");
    for row in table_rows() {
        let got = class_degree(row.singularities);
        r.check(got.as_ref().ok() == Some(&row.class), || {
            format!("{}: formula {got:?}, table {}", row.label, row.class)
        });
    }
    r.finish()
}

pub fn q_star_counts() -> CriterionResult {
    let mut r = CriterionResult::new(2, "unbracketed 1s count the quadrics Q* in S*");
    for row in table_rows().iter().filter(|row| row.table == 1) {
        let got = row_symbol(row).unbracketed_ones() as u32;
        r.check(Some(got) == row.q_star, || {
            format!("{}: {got} unbracketed 1s, table {:?}", row.label, row.q_star)
        });
    }
    r.finish()
}

pub fn smooth_quadric_covers() -> CriterionResult {
    let mut r = CriterionResult::new(3, "class = 4 + deg B* over a smooth quadric");
    for row in table_rows().iter().filter(|row| row.table == 1) {
        let covers = match covers_of(&row_symbol(row)) {
            Ok(c) => c,
            Err(e) => {
                r.check(false, || format!("{}: {e}", row.label));
                continue;
            }
        };
        let quadric: Vec<_> = covers.iter().filter(|c| c.base == CoverBase::SmoothQuadric).collect();
        r.check(!quadric.is_empty(), || format!("{}: no smooth-quadric cover", row.label));
        for c in quadric {
            r.check(row.class == 4 + c.branch_dual_degree, || {
                format!(
                    "{}: class {} vs 4 + {} (branch {})",
                    row.label, row.class, c.branch_dual_degree, c.branch_symbol
                )
            });
        }
    }
    r.finish()
}

pub fn cone_covers() -> CriterionResult {
    let mut r = CriterionResult::new(4, "cone covers: class = deg B* + m deg v*");
    let expected: [(&str, u32); 10] = [
        ("[(11)111]", 0),
        ("[(11)12]", 0),
        ("[(11)(11)1]", 0),
        ("[(11)3]", 0),
        ("[(12)(11)]", 0),
        ("[1(13)]", 1),
        ("[(14)]", 1),
        ("[(12)11]", 2),
        ("[(12)2]", 2),
        ("[(11)(12)]", 2),
    ];
    for (label, m) in expected {
        let s = sym(label);
        let class = classify::lookup(&s).map(|e| e.class);
        let covers = covers_of(&s).unwrap_or_default();
        // the printed label picks the cover when a surface has two
        let cover = covers
            .iter()
            .filter(|c| c.base == CoverBase::QuadraticCone)
            .find(|c| c.table_row == Some(label) || covers.iter().filter(|c| c.base == CoverBase::QuadraticCone).count() == 1);
        let (Some(class), Some(cover)) = (class, cover) else {
            r.check(false, || format!("{label}: no cone cover"));
            continue;
        };
        let got = i64::from(class) - i64::from(cover.branch_dual_degree);
        r.check(got == i64::from(m), || format!("{label}: m = {got}, expected {m}"));
        let off = cover.vertex_on_branch == VertexPosition::OffBranch;
        r.check(off == (m == 0), || format!("{label}: vertex {}", cover.vertex_on_branch));
        r.check(cover.section.total() == class, || format!("{label}: section {}", cover.section));
    }
    r.finish()
}

fn catalog_symbols() -> Vec<SegreSymbol> {
    classify::catalog().iter().map(|e| e.symbol.clone()).collect()
}

pub fn symbol_round_trip(per_symbol: u64) -> CriterionResult {
    let mut r = CriterionResult::new(5, "random instances recover their symbol");
    for (i, s) in catalog_symbols().iter().enumerate() {
        for k in 0..per_symbol {
            let seed = 1000 * i as u64 + k;
            let got = random_instance(s, seed).and_then(|p| compute_symbol(&p));
            r.check(got.as_ref().ok() == Some(s), || format!("{s} seed {seed}: {got:?}"));
        }
    }
    r.finish()
}

fn random_basis_change(rng: &mut impl Rng) -> [Rational; 4] {
    loop {
        let v: [i64; 4] = std::array::from_fn(|_| rng.random_range(-3..=3));
        if v[0] * v[3] - v[1] * v[2] != 0 {
            return v.map(int);
        }
    }
}

pub fn basis_invariance(per_symbol: u64) -> CriterionResult {
    let mut r = CriterionResult::new(6, "symbol is invariant under pencil basis changes");
    for (i, s) in catalog_symbols().iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5e9 + i as u64);
        for k in 0..per_symbol {
            let seed = 50_000 + 1000 * i as u64 + k;
            let [a, b, c, d] = random_basis_change(&mut rng);
            let got = random_instance(s, seed)
                .and_then(|p| p.rebase(&a, &b, &c, &d))
                .and_then(|p| compute_symbol(&p));
            r.check(got.as_ref().ok() == Some(s), || {
                format!("{s} seed {seed} basis ({a},{b};{c},{d}): {got:?}")
            });
        }
    }
    r.finish()
}

/// `(P_e(α) ⊕ diag(β), Q_e ⊕ I)` with the padding roots `β` distinct from `α`.
pub fn padded_block(e: usize, alpha: &Rational, size: usize) -> QuadricPencil {
    let mut u_blocks = vec![p_block(e, alpha)];
    let mut v_blocks = vec![q_block(e)];
    let mut beta = alpha.clone();
    for _ in e..size {
        beta += int(1);
        u_blocks.push(QMatrix::diagonal(&[beta.clone()]));
        v_blocks.push(QMatrix::identity(1));
    }
    QuadricPencil::new(QMatrix::block_diagonal(&u_blocks), QMatrix::block_diagonal(&v_blocks))
        .expect("block pencil is symmetric")
}

pub fn block_divisors() -> CriterionResult {
    let mut r = CriterionResult::new(7, "P_e(a) - lQ_e has the single elementary divisor (l - a)^e");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for e in 1..=5usize {
        for _ in 0..5 {
            let alpha = frac(rng.random_range(-40..=40), rng.random_range(1..=9));
            let p = padded_block(e, &alpha, 5);
            let factors = invariant_factors(&p);
            let at_alpha: Option<Vec<u32>> = factors.as_ref().ok().map(|f| {
                f.exponents_at(&alpha).into_iter().filter(|&m| m > 0).collect()
            });
            r.check(at_alpha == Some(vec![e as u32]), || {
                format!("e = {e}, alpha = {alpha}: {factors:?}")
            });
            // the basis element through alpha carries exactly the exponent e
            let structure = factors.and_then(|f| elementary_structure(&f));
            let through = structure.as_ref().ok().and_then(|st| {
                st.iter()
                    .find(|(b, _)| b.eval(&alpha).is_zero())
                    .map(|(_, exps)| exps.clone())
            });
            r.check(through == Some(vec![e as u32]), || {
                format!("e = {e}, alpha = {alpha}: {structure:?}")
            });
        }
    }
    r.finish()
}

/// `c₁·m₁ ± c₂·m₂ ...` in the parser's grammar.
fn expand(terms: &[(Rational, &str)]) -> String {
    let mut out = String::new();
    for (c, monom) in terms {
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(&format!("{}*{monom}", format_rational(&c.abs())));
    }
    out
}

/// Equations of the `[2111]` normal form with the roots substituted.
pub fn equations_2111(a: &[Rational; 4]) -> (String, String) {
    let two = int(2);
    (
        expand(&[
            (&two * &a[0], "X0*X1"),
            (int(1), "X1^2"),
            (a[1].clone(), "X2^2"),
            (a[2].clone(), "X3^2"),
            (a[3].clone(), "X4^2"),
        ]),
        "2*X0*X1 + X2^2 + X3^2 + X4^2".to_string(),
    )
}

/// Equations of the `[32]` normal form with the roots substituted.
pub fn equations_32(a: &[Rational; 2]) -> (String, String) {
    let two = int(2);
    (
        expand(&[
            (&two * &a[0], "X0*X2"),
            (a[0].clone(), "X1^2"),
            (int(2), "X1*X2"),
            (&two * &a[1], "X3*X4"),
            (int(1), "X4^2"),
        ]),
        "2*X0*X2 + X1^2 + 2*X3*X4".to_string(),
    )
}

/// Reference matrices of the `[2111]` normal form.
pub fn matrices_2111(a: &[Rational; 4]) -> (QMatrix, QMatrix) {
    let z = Rational::zero;
    let o = || int(1);
    let u = QMatrix::from_rows(vec![
        vec![z(), a[0].clone(), z(), z(), z()],
        vec![a[0].clone(), o(), z(), z(), z()],
        vec![z(), z(), a[1].clone(), z(), z()],
        vec![z(), z(), z(), a[2].clone(), z()],
        vec![z(), z(), z(), z(), a[3].clone()],
    ]);
    let v = QMatrix::from_ints(&[
        &[0, 1, 0, 0, 0],
        &[1, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0],
        &[0, 0, 0, 1, 0],
        &[0, 0, 0, 0, 1],
    ]);
    (u, v)
}

/// Reference matrices of the `[32]` normal form.
pub fn matrices_32(a: &[Rational; 2]) -> (QMatrix, QMatrix) {
    let z = Rational::zero;
    let o = || int(1);
    let u = QMatrix::from_rows(vec![
        vec![z(), z(), a[0].clone(), z(), z()],
        vec![z(), a[0].clone(), o(), z(), z()],
        vec![a[0].clone(), o(), z(), z(), z()],
        vec![z(), z(), z(), z(), a[1].clone()],
        vec![z(), z(), z(), a[1].clone(), o()],
    ]);
    let v = QMatrix::from_ints(&[
        &[0, 0, 1, 0, 0],
        &[0, 1, 0, 0, 0],
        &[1, 0, 0, 0, 0],
        &[0, 0, 0, 0, 1],
        &[0, 0, 0, 1, 0],
    ]);
    (u, v)
}

fn show(roots: &[Rational]) -> String {
    let parts: Vec<String> = roots.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

pub fn normal_forms() -> CriterionResult {
    let mut r = CriterionResult::new(8, "normal forms [2111] and [32] match the reference matrices and equations");
    let compare = |r: &mut CriterionResult, label: &str, p: &QuadricPencil, mats: (QMatrix, QMatrix), eqs: (String, String)| {
        r.check(*p.u() == mats.0 && *p.v() == mats.1, || format!("{label}: matrices differ"));
        for (m, text) in [(p.u(), &eqs.0), (p.v(), &eqs.1)] {
            let parsed = parse_quadratic_form(text);
            r.check(parsed.as_ref().map(|f| &f.matrix) == Ok(m), || {
                format!("{label}: {text} does not parse to the built matrix")
            });
            let rendered = render_form(m);
            let reparsed = parse_quadratic_form(&rendered).map(|f| f.matrix);
            r.check(reparsed.as_ref() == Ok(m), || format!("{label}: {rendered} does not round-trip"));
        }
    };
    let roots_2111: [[Rational; 4]; 3] = [
        [int(2), int(3), int(4), int(5)],
        [frac(-1, 2), int(0), frac(7, 3), int(-4)],
        [int(1), frac(5, 2), int(-1), frac(-3, 7)],
    ];
    for a in &roots_2111 {
        let label = format!("[2111] {}", show(a));
        match build_normal_form(&sym("[2111]"), a) {
            Ok(p) => compare(&mut r, &label, &p, matrices_2111(a), equations_2111(a)),
            Err(e) => r.check(false, || format!("{label}: {e}")),
        }
    }
    let roots_32: [[Rational; 2]; 3] = [[int(2), int(3)], [frac(1, 3), int(-2)], [int(0), frac(9, 4)]];
    for a in &roots_32 {
        let label = format!("[32] {}", show(a));
        match build_normal_form(&sym("[32]"), a) {
            Ok(p) => compare(&mut r, &label, &p, matrices_32(a), equations_32(a)),
            Err(e) => r.check(false, || format!("{label}: {e}")),
        }
    }
    r.finish()
}

/// Normal pairs of pencils without a smooth member, labelled by the
/// structure of their singular members.
pub fn degenerate_pairs() -> Vec<(&'static str, String)> {
    vec![
        ("[2;1]", "2*X0*X1 + 4*X3*X4 + X4^2; 2*X1*X2 + 2*X3*X4".to_string()),
        ("[11;1]", "2*X0*X1 + 2*X3^2 + 3*X4^2; 2*X1*X2 + X3^2 + X4^2".to_string()),
        ("[(11);1]", "2*X0*X1 + 2*X3^2 + 2*X4^2; 2*X1*X2 + X3^2 + X4^2".to_string()),
        ("[;2]", "2*X0*X1 + 2*X2*X3; 2*X1*X2 + 2*X3*X4".to_string()),
    ]
}

pub fn degenerate_pencils() -> CriterionResult {
    let mut r = CriterionResult::new(9, "pencils without a smooth member are rejected");
    for (label, text) in degenerate_pairs() {
        let p = match crate::cli::pencil_from_forms(&text) {
            Ok(p) => p,
            Err(e) => {
                r.check(false, || format!("{label}: {e}"));
                continue;
            }
        };
        let sel = select_nonsingular_member(&p);
        r.check(matches!(sel, Err(Error::NoSmoothMember)), || format!("{label}: selection {sel:?}"));
        let report = analyze(&p);
        r.check(
            report.as_ref().is_ok_and(|a| a.verdict == Verdict::Degenerate && a.exit_code(false) == 3),
            || format!("{label}: {report:?}"),
        );
    }
    r.finish()
}

pub fn numeric_agreement(instances: usize) -> CriterionResult {
    let mut r = CriterionResult::new(10, "numeric oracle matches exact exponent structure");
    let symbols = catalog_symbols();
    for k in 0..instances {
        let s = &symbols[k % symbols.len()];
        let seed = 90_000 + k as u64;
        let outcome = random_instance(s, seed).and_then(|p| {
            let exact = compute_symbol(&p)?.shape();
            let numeric = numeric_exponent_partitions(&p, DEFAULT_TOL_CLUSTER, DEFAULT_TOL_RANK)?;
            Ok((exact, numeric))
        });
        match outcome {
            Ok((mut exact, numeric)) => {
                exact.sort_unstable_by(|a, b| b.cmp(a));
                let got = numeric.multiset();
                r.check(got == exact, || format!("{s} seed {seed}: numeric {got:?}, exact {exact:?}"));
            }
            Err(e) => r.check(false, || format!("{s} seed {seed}: {e}")),
        }
    }
    r.finish()
}

pub fn transition_graph() -> CriterionResult {
    let mut r = CriterionResult::new(11, "degeneration graph and class changes");
    let expected: [(&str, &str, u32, u32); 8] = [
        ("[11111]", "[2111]", 12, 10),
        ("[2111]", "[311]", 10, 9),
        ("[2111]", "[(11)111]", 10, 8),
        ("[(11)111]", "[(11)21]", 8, 6),
        ("[(11)21]", "[(11)(11)1]", 6, 4),
        ("[221]", "[41]", 8, 8),
        ("[3(11)]", "[(31)1]", 5, 6),
        ("[(12)2]", "[(41)]", 6, 5),
    ];
    let edges = transition_edges();
    r.check(edges.len() == expected.len(), || format!("{} edges", edges.len()));
    for (from, to, c0, c1) in expected {
        let (a, b) = (sym(from), sym(to));
        r.check(edges.iter().any(|(x, y)| *x == a && *y == b), || format!("missing {from} -> {to}"));
        let got = (
            classify::lookup(&a).map(|e| e.class),
            classify::lookup(&b).map(|e| e.class),
        );
        r.check(got == (Some(c0), Some(c1)), || format!("{from} -> {to}: classes {got:?}"));
    }
    r.finish()
}
