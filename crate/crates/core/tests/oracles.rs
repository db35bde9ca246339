//! Brute-force oracles, independent of the library's minor tables and
//! interpolation: Leibniz determinants with polynomial entries and
//! invariant factors straight from the gcd-of-minors definition.

use segre::arith::{frac, int, Poly, QMatrix, Rational};
use segre::pencil::{det_poly, invariant_factors, QuadricPencil};
use segre::symbol::{build_normal_form, random_instance, SegreSymbol};
use segre::verify::padded_block;

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(n - 1) {
        // insert n-1 at every position; moving it left past k entries adds k inversions
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let inversions = p.len() - pos;
            out.push((q, odd ^ (inversions % 2 == 1)));
        }
    }
    out
}

fn leibniz(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    let mut total = Poly::zero();
    for (perm, odd) in permutations(n) {
        let mut term = Poly::one();
        for (i, &j) in perm.iter().enumerate() {
            term = &term * &m[i][j];
        }
        total = if odd { &total - &term } else { &total + &term };
    }
    total
}

/// `U - λV` with polynomial entries.
fn pencil_matrix(p: &QuadricPencil) -> Vec<Vec<Poly>> {
    let n = p.size();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Poly::new(vec![p.u()[(i, j)].clone(), -p.v()[(i, j)].clone()]))
                .collect()
        })
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn oracle_invariant_factors(p: &QuadricPencil) -> Vec<Poly> {
    let m = pencil_matrix(p);
    let n = m.len();
    let mut d = vec![Poly::one()];
    for k in 1..=n {
        let mut g = Poly::zero();
        for rows in subsets(n, k) {
            for cols in subsets(n, k) {
                let minor: Vec<Vec<Poly>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect())
                    .collect();
                g = g.gcd(&leibniz(&minor));
            }
        }
        d.push(g.monic());
    }
    d.windows(2).map(|w| w[1].exact_div(&w[0]).expect("chain divides")).collect()
}

fn lin(a: i64) -> Poly {
    Poly::linear(&int(a))
}

fn prod(fs: &[Poly]) -> Poly {
    fs.iter().fold(Poly::one(), |acc, f| &acc * f)
}

fn sym(s: &str) -> SegreSymbol {
    s.parse().unwrap()
}

#[test]
fn leibniz_sign_convention() {
    let m = QMatrix::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
    let polys: Vec<Vec<Poly>> = (0..3)
        .map(|i| (0..3).map(|j| Poly::constant(m[(i, j)].clone())).collect())
        .collect();
    assert_eq!(leibniz(&polys), Poly::constant(m.det()));
    assert_eq!(permutations(4).len(), 24);
}

#[test]
fn determinant_of_normal_forms() {
    let p = build_normal_form(&sym("[2111]"), &[int(2), int(3), int(4), int(5)]).unwrap();
    let oracle = leibniz(&pencil_matrix(&p));
    assert_eq!(det_poly(&p), oracle);
    assert_eq!(oracle.monic(), prod(&[lin(2), lin(2), lin(3), lin(4), lin(5)]));

    let p = build_normal_form(&sym("[32]"), &[int(2), int(3)]).unwrap();
    assert_eq!(det_poly(&p), leibniz(&pencil_matrix(&p)));
}

#[test]
fn invariant_factors_of_2111() {
    let p = build_normal_form(&sym("[2111]"), &[int(2), int(3), int(4), int(5)]).unwrap();
    let f = invariant_factors(&p).unwrap();
    assert_eq!(f.factors(), oracle_invariant_factors(&p).as_slice());
    assert_eq!(f.factors()[4], prod(&[lin(2), lin(2), lin(3), lin(4), lin(5)]));
    assert!(f.factors()[..4].iter().all(Poly::is_one));
}

#[test]
fn invariant_factors_of_32_and_its_cone() {
    let p = build_normal_form(&sym("[32]"), &[int(2), int(3)]).unwrap();
    let f = invariant_factors(&p).unwrap();
    assert_eq!(f.factors(), oracle_invariant_factors(&p).as_slice());
    assert_eq!(f.factors()[4], prod(&[lin(2), lin(2), lin(2), lin(3), lin(3)]));

    // equal roots: two nontrivial factors
    let p = build_normal_form(&sym("[(32)]"), &[int(2)]).unwrap();
    let f = invariant_factors(&p).unwrap();
    assert_eq!(f.factors(), oracle_invariant_factors(&p).as_slice());
    assert_eq!(f.factors()[3], lin(2).pow(2));
    assert_eq!(f.factors()[4], lin(2).pow(3));
}

#[test]
fn invariant_factors_of_random_instances() {
    for (label, seed) in [("[(11)(11)1]", 3), ("[(21)2]", 11), ("[5]", 5), ("[(41)]", 8), ("[2(11)1]", 21)] {
        let p = random_instance(&sym(label), seed).unwrap();
        let f = invariant_factors(&p).unwrap();
        assert_eq!(f.factors(), oracle_invariant_factors(&p).as_slice(), "{label}");
    }
}

#[test]
fn padded_blocks_against_oracle() {
    for e in 1..=5 {
        let alpha: Rational = frac(7 - 3 * e as i64, 4);
        let p = padded_block(e, &alpha, 5);
        let oracle = oracle_invariant_factors(&p);
        let mult: Vec<u32> = oracle
            .iter()
            .map(|d| d.multiplicity_of(&Poly::linear(&alpha)))
            .filter(|&m| m > 0)
            .collect();
        assert_eq!(mult, vec![e as u32]);
        assert_eq!(invariant_factors(&p).unwrap().factors(), oracle.as_slice());
    }
}
