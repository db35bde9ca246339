//! Segre symbols: computing them from a pencil, canonical ordering, the
//! string grammar, and realizing a symbol as a normalized pencil.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::arith::{coprime_basis, format_rational, frac, int, squarefree_decomposition, Poly, QMatrix, Rational};
use crate::error::{Error, Result};
use crate::pencil::{invariant_factors, select_nonsingular_member, InvariantFactors, QuadricPencil};

/// Which root of `det(U - λV)` a group belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootDescriptor {
    Rational(Rational),
    /// The `index`-th root (unordered) of an irreducible-or-not coprime basis
    /// element; never evaluated numerically here.
    Symbolic { basis: Poly, index: usize },
    Unspecified,
}

impl fmt::Display for RootDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootDescriptor::Rational(q) => f.write_str(&format_rational(q)),
            RootDescriptor::Symbolic { basis, index } => write!(f, "root #{index} of {basis}"),
            RootDescriptor::Unspecified => f.write_str("?"),
        }
    }
}

/// Elementary-divisor exponents sharing one root.
#[derive(Clone, Debug)]
pub struct Group {
    pub exponents: Vec<u32>,
    pub root: RootDescriptor,
}

impl Group {
    pub fn new(exponents: Vec<u32>) -> Self {
        Group {
            exponents,
            root: RootDescriptor::Unspecified,
        }
    }

    pub fn weight(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_bracketed(&self) -> bool {
        self.exponents.len() >= 2
    }

    fn sort_key(&self) -> (u32, Vec<u32>, usize) {
        let mut seq = self.exponents.clone();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        (self.weight(), seq, self.exponents.len())
    }
}

/// A Segre symbol such as `[2(11)1]`.
///
/// Equality compares the canonical exponent structure only; roots are
/// carried along for reporting.
#[derive(Clone, Debug)]
pub struct SegreSymbol {
    groups: Vec<Group>,
}

impl SegreSymbol {
    pub fn new(groups: Vec<Group>) -> Self {
        SegreSymbol { groups }
    }

    pub fn from_exponents(groups: &[&[u32]]) -> Self {
        Self::new(groups.iter().map(|g| Group::new(g.to_vec())).collect())
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn weight(&self) -> u32 {
        self.groups.iter().map(Group::weight).sum()
    }

    /// Exponents in rendering order, brackets dropped.
    pub fn entries(&self) -> Vec<u32> {
        self.groups.iter().flat_map(|g| g.exponents.iter().copied()).collect()
    }

    /// Canonical exponent structure: groups sorted descending by
    /// `(sum, exponent sequence, size)` with each group sorted descending.
    pub fn shape(&self) -> Vec<Vec<u32>> {
        let mut keys: Vec<_> = self.groups.iter().map(Group::sort_key).collect();
        keys.sort_by(|a, b| b.cmp(a));
        keys.into_iter().map(|(_, seq, _)| seq).collect()
    }

    fn validate(&self) -> Result<()> {
        if self.groups.is_empty() {
            return Err(Error::domain("empty Segre symbol"));
        }
        for g in &self.groups {
            if g.exponents.is_empty() {
                return Err(Error::domain("empty group in Segre symbol"));
            }
            if g.exponents.contains(&0) {
                return Err(Error::domain("Segre symbol exponents must be positive"));
            }
        }
        Ok(())
    }

    pub fn canonicalize(&self) -> Result<SegreSymbol> {
        self.validate()?;
        let mut groups = self.groups.clone();
        for g in &mut groups {
            g.exponents.sort_unstable_by(|a, b| b.cmp(a));
        }
        groups.sort_by_key(|g| Reverse(g.sort_key()));
        Ok(SegreSymbol { groups })
    }

    /// Canonical form with a required total weight `n + 1`.
    pub fn canonicalize_with_weight(&self, weight: u32) -> Result<SegreSymbol> {
        self.check_weight(weight)?;
        self.canonicalize()
    }

    pub fn check_weight(&self, weight: u32) -> Result<()> {
        if self.weight() != weight {
            return Err(Error::domain(format!(
                "Segre symbol {self} has weight {}, expected {weight}",
                self.weight()
            )));
        }
        Ok(())
    }

    pub fn is_canonical(&self) -> bool {
        self.canonicalize().is_ok_and(|c| c.to_string() == self.to_string())
    }

    /// Number of `1` entries outside round brackets.
    pub fn unbracketed_ones(&self) -> usize {
        self.groups.iter().filter(|g| g.exponents == [1]).count()
    }
}

impl PartialEq for SegreSymbol {
    fn eq(&self, other: &Self) -> bool {
        self.shape() == other.shape()
    }
}

impl Eq for SegreSymbol {}

impl fmt::Display for SegreSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for g in &self.groups {
            let digits: String = g.exponents.iter().map(u32::to_string).collect();
            if g.is_bracketed() {
                write!(f, "({digits})")?;
            } else {
                f.write_str(&digits)?;
            }
        }
        f.write_str("]")
    }
}

impl Serialize for SegreSymbol {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `[` group* `]` where a group is a single digit or `(` digit+ `)`.
/// Input order is preserved; call [`SegreSymbol::canonicalize`] to sort.
impl FromStr for SegreSymbol {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |why: &str| Error::domain(format!("malformed Segre symbol {text:?}: {why}"));
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.first() != Some(&'[') || chars.last() != Some(&']') || chars.len() < 2 {
            return Err(bad("expected [ ... ]"));
        }
        let digit = |c: char| match c.to_digit(10) {
            Some(0) => Err(bad("exponent 0")),
            Some(d) => Ok(d),
            None => Err(bad(&format!("unexpected {c:?}"))),
        };
        let mut groups = Vec::new();
        let mut it = chars[1..chars.len() - 1].iter().copied();
        while let Some(c) = it.next() {
            if c == '(' {
                let mut exps = Vec::new();
                loop {
                    match it.next() {
                        Some(')') => break,
                        Some(c) => exps.push(digit(c)?),
                        None => return Err(bad("unclosed bracket")),
                    }
                }
                if exps.is_empty() {
                    return Err(bad("empty brackets"));
                }
                groups.push(Group::new(exps));
            } else {
                groups.push(Group::new(vec![digit(c)?]));
            }
        }
        let s = SegreSymbol { groups };
        s.validate()?;
        Ok(s)
    }
}

/// Elementary-divisor structure read off invariant factors: one entry per
/// coprime-basis element with its exponents across the chain.
pub fn elementary_structure(factors: &InvariantFactors) -> Result<Vec<(Poly, Vec<u32>)>> {
    let mut pieces: Vec<Poly> = Vec::new();
    for d in factors.factors().iter().filter(|d| !d.is_constant()) {
        for (part, _) in squarefree_decomposition(d)? {
            if !pieces.contains(&part) {
                pieces.push(part);
            }
        }
    }
    let basis = coprime_basis(&pieces)?;
    Ok(basis
        .into_iter()
        .map(|b| {
            let mut exps: Vec<u32> = factors
                .factors()
                .iter()
                .filter(|d| !d.is_constant())
                .map(|d| d.multiplicity_of(&b))
                .filter(|&e| e > 0)
                .collect();
            exps.sort_unstable_by(|a, b| b.cmp(a));
            (b, exps)
        })
        .collect())
}

/// The Segre symbol of a pencil, without root finding: every basis element
/// of degree `g` contributes `g` groups with identical exponents.
pub fn compute_symbol(p: &QuadricPencil) -> Result<SegreSymbol> {
    let q = select_nonsingular_member(p).map_err(|e| match e {
        Error::NoSmoothMember => Error::DegeneratePencil,
        other => other,
    })?;
    let factors = invariant_factors(&q)?;
    let mut groups = Vec::new();
    for (basis, exps) in elementary_structure(&factors)? {
        let degree = basis.degree().unwrap_or(0);
        if degree == 1 {
            let root = -&basis.coeffs()[0];
            groups.push(Group {
                exponents: exps,
                root: RootDescriptor::Rational(root),
            });
        } else {
            for index in 0..degree {
                groups.push(Group {
                    exponents: exps.clone(),
                    root: RootDescriptor::Symbolic {
                        basis: basis.clone(),
                        index,
                    },
                });
            }
        }
    }
    let symbol = SegreSymbol { groups }.canonicalize()?;
    if symbol.weight() as usize != p.size() {
        return Err(Error::Consistency(format!(
            "symbol {symbol} has weight {} for a pencil of size {}",
            symbol.weight(),
            p.size()
        )));
    }
    Ok(symbol)
}

/// `P_e(α)`: `α` on the antidiagonal, `1` just below it.
pub fn p_block(e: usize, alpha: &Rational) -> QMatrix {
    let mut m = QMatrix::zeros(e, e);
    for i in 0..e {
        for j in 0..e {
            if i + j + 1 == e {
                m[(i, j)] = alpha.clone();
            } else if i + j == e {
                m[(i, j)] = Rational::one();
            }
        }
    }
    m
}

/// `Q_e`: the antidiagonal identity.
pub fn q_block(e: usize) -> QMatrix {
    let mut m = QMatrix::zeros(e, e);
    for i in 0..e {
        m[(i, e - 1 - i)] = Rational::one();
    }
    m
}

/// Block-diagonal normal pair with one `P_e(α)/Q_e` block per exponent, in
/// the symbol's written order; `roots[i]` is shared by every exponent of
/// group `i`.
pub fn build_normal_form(s: &SegreSymbol, roots: &[Rational]) -> Result<QuadricPencil> {
    s.validate()?;
    if roots.len() != s.groups.len() {
        return Err(Error::domain(format!(
            "{} roots given for the {} groups of {s}",
            roots.len(),
            s.groups.len()
        )));
    }
    for (i, a) in roots.iter().enumerate() {
        if roots[..i].contains(a) {
            return Err(Error::domain(format!(
                "root {} repeated across groups of {s}; groups would merge",
                format_rational(a)
            )));
        }
    }
    let mut p_blocks = Vec::new();
    let mut q_blocks = Vec::new();
    for (g, root) in s.groups.iter().zip(roots) {
        for &e in &g.exponents {
            p_blocks.push(p_block(e as usize, root));
            q_blocks.push(q_block(e as usize));
        }
    }
    QuadricPencil::new(QMatrix::block_diagonal(&p_blocks), QMatrix::block_diagonal(&q_blocks))
}

/// Distinct roots `k/2`, `|k| ≤ 10`, pairwise at least 1 apart.
pub fn random_roots(count: usize, rng: &mut impl Rng) -> Vec<Rational> {
    assert!(count <= 11, "not enough separated half-integers in range");
    let candidates: Vec<i64> = (-10..=10).collect();
    let mut chosen: Vec<i64> = Vec::with_capacity(count);
    while chosen.len() < count {
        let k = *candidates.choose(rng).unwrap();
        if chosen.iter().all(|&c| (c - k).abs() >= 2) {
            chosen.push(k);
        }
    }
    chosen.into_iter().map(|k| frac(k, 2)).collect()
}

/// Invertible matrix with entries in `-3..=3`, resampled until `det ≠ 0`.
pub fn random_congruence(size: usize, rng: &mut impl Rng) -> QMatrix {
    loop {
        let rows = (0..size)
            .map(|_| (0..size).map(|_| int(rng.random_range(-3..=3))).collect())
            .collect();
        let a = QMatrix::from_rows(rows);
        if !a.det().is_zero() {
            return a;
        }
    }
}

/// Normal form with random separated roots, moved by a random rational
/// congruence. Deterministic in `seed`.
pub fn random_instance(s: &SegreSymbol, seed: u64) -> Result<QuadricPencil> {
    s.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let roots = random_roots(s.groups.len(), &mut rng);
    let normal = build_normal_form(s, &roots)?;
    let a = random_congruence(normal.size(), &mut rng);
    normal.congruent(&a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> SegreSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_render() {
        let s = sym("[12(11)]");
        assert_eq!(s.groups().len(), 3);
        assert_eq!(s.to_string(), "[12(11)]");
        assert_eq!(s.weight(), 5);
        assert!(" [ (1 1) 2 ] ".parse::<SegreSymbol>().is_ok());
        for bad in ["12", "[1(2]", "[()]", "[0]", "[1a]", "[", "[1)]"] {
            assert!(bad.parse::<SegreSymbol>().is_err(), "{bad}");
        }
    }

    #[test]
    fn canonical_order() {
        let c = sym("[12(11)]").canonicalize().unwrap();
        assert_eq!(c.to_string(), "[2(11)1]");
        assert_eq!(c, sym("[(11)12]"));
        assert_eq!(c, sym("[(11)21]"));
        assert_eq!(sym("[(11)(11)1]").canonicalize().unwrap().to_string(), "[(11)(11)1]");
        assert_eq!(sym("[11111]").canonicalize().unwrap().to_string(), "[11111]");
        assert_eq!(sym("[(12)(11)]").canonicalize().unwrap().to_string(), "[(21)(11)]");
        assert_eq!(sym("[(14)]").canonicalize().unwrap().to_string(), "[(41)]");
        assert_ne!(sym("[32]"), sym("[(32)]"));
    }

    #[test]
    fn weight_check() {
        assert!(sym("[2111]").canonicalize_with_weight(5).is_ok());
        assert!(sym("[211]").canonicalize_with_weight(5).is_err());
    }

    #[test]
    fn blocks() {
        let a = int(7);
        let p = p_block(3, &a);
        assert_eq!(
            p,
            QMatrix::from_ints(&[&[0, 0, 7], &[0, 7, 1], &[7, 1, 0]])
        );
        assert_eq!(q_block(2), QMatrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(p_block(1, &a), QMatrix::from_ints(&[&[7]]));
    }

    #[test]
    fn single_block_normal_form() {
        let p = build_normal_form(&sym("[5]"), &[int(1)]).unwrap();
        assert_eq!(p.v(), &q_block(5));
        assert_eq!(p.u(), &p_block(5, &int(1)));
    }

    #[test]
    fn duplicate_roots_rejected() {
        let err = build_normal_form(&sym("[2111]"), &[int(1), int(2), int(2), int(3)]);
        assert!(matches!(err, Err(Error::Domain(_))));
        assert!(build_normal_form(&sym("[2111]"), &[int(1)]).is_err());
    }

    #[test]
    fn symbols_of_simple_pencils() {
        let diag = |e: &[i64]| QMatrix::diagonal(&e.iter().map(|&x| int(x)).collect::<Vec<_>>());
        let p = QuadricPencil::new(diag(&[1, 2, 3, 4, 5]), QMatrix::identity(5)).unwrap();
        assert_eq!(compute_symbol(&p).unwrap().to_string(), "[11111]");
        let p = QuadricPencil::new(diag(&[1, 1, 2, 3, 4]), QMatrix::identity(5)).unwrap();
        assert_eq!(compute_symbol(&p).unwrap().to_string(), "[(11)111]");
    }

    #[test]
    fn irrational_roots_give_twin_groups() {
        let u = QMatrix::from_ints(&[&[1, 1, 0, 0], &[1, -1, 0, 0], &[0, 0, 1, 1], &[0, 0, 1, -1]]);
        let s = compute_symbol(&QuadricPencil::new(u, QMatrix::identity(4)).unwrap()).unwrap();
        // eigenvalues ±√2, each twice
        assert_eq!(s.to_string(), "[(11)(11)]");
        assert!(s
            .groups()
            .iter()
            .all(|g| matches!(g.root, RootDescriptor::Symbolic { .. })));
    }

    #[test]
    fn random_instance_is_deterministic() {
        let s = sym("[(14)]");
        assert_eq!(random_instance(&s, 3).unwrap(), random_instance(&s, 3).unwrap());
        assert_ne!(random_instance(&s, 3).unwrap(), random_instance(&s, 4).unwrap());
    }

    #[test]
    fn random_instance_round_trip() {
        let s = sym("[11111]");
        assert_eq!(compute_symbol(&random_instance(&s, 7).unwrap()).unwrap(), s);
        let s = sym("[(14)]");
        assert_eq!(compute_symbol(&random_instance(&s, 0).unwrap()).unwrap(), s);
    }
}
