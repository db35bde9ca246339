//! Linear algebra of a pencil `U - λV` of symmetric matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{common_denominator, int, Poly, QMatrix, Rational};
use crate::error::{Error, Result};

/// The pencil of quadrics spanned by `XᵀUX` and `XᵀVX` in `CP_n`, stored as
/// the pair of symmetric `(n+1)×(n+1)` matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadricPencil {
    u: QMatrix,
    v: QMatrix,
}

impl QuadricPencil {
    /// Checks shape and symmetry. Proportional pairs are accepted here (they
    /// are still meaningful as matrix pencils); see [`Self::is_proportional`].
    pub fn new(u: QMatrix, v: QMatrix) -> Result<Self> {
        if !u.is_square() || !v.is_square() || u.rows() != v.rows() || u.rows() == 0 {
            return Err(Error::InvalidPencil(format!(
                "expected two square matrices of equal size, got {}x{} and {}x{}",
                u.rows(),
                u.cols(),
                v.rows(),
                v.cols()
            )));
        }
        if !u.is_symmetric() || !v.is_symmetric() {
            return Err(Error::InvalidPencil("matrices must be symmetric".into()));
        }
        Ok(QuadricPencil { u, v })
    }

    pub fn u(&self) -> &QMatrix {
        &self.u
    }

    pub fn v(&self) -> &QMatrix {
        &self.v
    }

    /// Matrix size `n + 1`.
    pub fn size(&self) -> usize {
        self.u.rows()
    }

    /// Dimension `n` of the ambient projective space.
    pub fn dimension(&self) -> usize {
        self.size() - 1
    }

    /// True when `U` and `V` are linearly dependent, i.e. the pair does not
    /// span a pencil.
    pub fn is_proportional(&self) -> bool {
        let n = self.size();
        let mut stacked = QMatrix::zeros(2, n * n);
        for (k, (a, b)) in self.u.entries().zip(self.v.entries()).enumerate() {
            stacked[(0, k)] = a.clone();
            stacked[(1, k)] = b.clone();
        }
        stacked.rank() < 2
    }

    /// `x·U + y·V`.
    pub fn member(&self, x: &Rational, y: &Rational) -> QMatrix {
        &self.u.scale(x) + &self.v.scale(y)
    }

    /// `(AᵀUA, AᵀVA)`.
    pub fn congruent(&self, a: &QMatrix) -> Result<Self> {
        if a.rows() != self.size() || a.det().is_zero() {
            return Err(Error::domain("congruence matrix must be invertible of matching size"));
        }
        Ok(QuadricPencil {
            u: self.u.congruence(a),
            v: self.v.congruence(a),
        })
    }

    /// `(aU + bV, cU + dV)`; requires `ad - bc ≠ 0`.
    pub fn rebase(&self, a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<Self> {
        if (a * d - b * c).is_zero() {
            return Err(Error::domain("pencil basis change must have ad - bc != 0"));
        }
        Ok(QuadricPencil {
            u: self.member(a, b),
            v: self.member(c, d),
        })
    }

    /// `U - tV`.
    pub fn at(&self, t: &Rational) -> QMatrix {
        self.u.sub_scaled(t, &self.v)
    }
}

/// `det(U - λV)`, exact and not normalized.
///
/// Evaluated at `n + 2` integer points and interpolated.
pub fn det_poly(p: &QuadricPencil) -> Poly {
    let points: Vec<(Rational, Rational)> = (0..=p.size() as i64)
        .map(|t| {
            let t = int(t);
            let d = p.at(&t).det();
            (t, d)
        })
        .collect();
    Poly::interpolate(&points)
}

/// Invariant factors `d_1 | d_2 | ... | d_{n+1}` of `U - λV`, all monic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantFactors {
    #[serde(serialize_with = "serialize_polys")]
    factors: Vec<Poly>,
}

fn serialize_polys<S: serde::Serializer>(ps: &[Poly], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.to_string()))
}

impl InvariantFactors {
    /// # Panics
    /// If the chain is not a monic divisibility chain.
    pub fn new(factors: Vec<Poly>) -> Self {
        assert!(factors.iter().all(Poly::is_monic), "invariant factors must be monic");
        assert!(
            factors.windows(2).all(|w| w[0].divides(&w[1])),
            "invariant factors must form a divisibility chain"
        );
        InvariantFactors { factors }
    }

    pub fn factors(&self) -> &[Poly] {
        &self.factors
    }

    /// Product of all factors; equals the monic determinant.
    pub fn product(&self) -> Poly {
        self.factors.iter().fold(Poly::one(), |acc, d| &acc * d)
    }

    /// Exponents of `λ - α` across the chain, nonzero entries only, ascending.
    pub fn exponents_at(&self, alpha: &Rational) -> Vec<u32> {
        let lin = Poly::linear(alpha);
        self.factors
            .iter()
            .map(|d| d.multiplicity_of(&lin))
            .filter(|&e| e > 0)
            .collect()
    }
}

/// Every `k×k` minor of an integer matrix, indexed by (row mask, column mask).
struct MinorTable {
    n: usize,
    values: Vec<BigInt>,
}

impl MinorTable {
    fn new(m: &[Vec<BigInt>]) -> Self {
        let n = m.len();
        let side = 1usize << n;
        let mut values = vec![BigInt::zero(); side * side];
        values[0] = BigInt::one();
        let mut masks: Vec<usize> = (1..side).collect();
        masks.sort_by_key(|m| m.count_ones());
        for &rows in &masks {
            let k = rows.count_ones();
            let top = rows.trailing_zeros() as usize;
            let rest = rows & !(1 << top);
            for &cols in masks.iter().filter(|c| c.count_ones() == k) {
                let mut acc = BigInt::zero();
                let mut sign_pos = true;
                for c in (0..n).filter(|c| cols & (1 << c) != 0) {
                    let entry = &m[top][c];
                    if !entry.is_zero() {
                        let sub = &values[rest * side + (cols & !(1 << c))];
                        if sign_pos {
                            acc += entry * sub;
                        } else {
                            acc -= entry * sub;
                        }
                    }
                    sign_pos = !sign_pos;
                }
                values[rows * side + cols] = acc;
            }
        }
        MinorTable { n, values }
    }

    fn get(&self, rows: usize, cols: usize) -> &BigInt {
        &self.values[rows * (1 << self.n) + cols]
    }
}

/// Invariant factors via the gcd-of-minors chain `d_i = D_i / D_{i-1}`.
pub fn invariant_factors(p: &QuadricPencil) -> Result<InvariantFactors> {
    let det = det_poly(p);
    if det.is_zero() {
        return Err(Error::DegeneratePencil);
    }
    let size = p.size();
    // Scaling the pencil by a common denominator leaves the monic gcds alone.
    let den = Rational::from_integer(common_denominator(p.u.entries().chain(p.v.entries())));
    let tables: Vec<MinorTable> = (0..=size as i64)
        .map(|t| {
            let w = p.at(&int(t)).scale(&den);
            let rows: Vec<Vec<BigInt>> = (0..size)
                .map(|i| w.row(i).iter().map(|q| q.to_integer()).collect())
                .collect();
            MinorTable::new(&rows)
        })
        .collect();

    let masks_by_size: Vec<Vec<usize>> = (0..=size)
        .map(|k| (0..1usize << size).filter(|m| m.count_ones() as usize == k).collect())
        .collect();

    let mut gcds = vec![Poly::one()];
    for k in 1..=size {
        let mut g = Poly::zero();
        'minors: for &rows in &masks_by_size[k] {
            for &cols in &masks_by_size[k] {
                let values: Vec<&BigInt> = tables[..=k].iter().map(|t| t.get(rows, cols)).collect();
                if values.iter().all(|v| v.is_zero()) {
                    continue;
                }
                let points: Vec<(Rational, Rational)> = values
                    .into_iter()
                    .enumerate()
                    .map(|(t, v)| (int(t as i64), Rational::from_integer(v.clone())))
                    .collect();
                g = g.gcd(&Poly::interpolate(&points));
                if g.is_one() {
                    break 'minors;
                }
            }
        }
        if g.is_zero() {
            // Unreachable for a nonzero determinant.
            return Err(Error::Consistency(format!("all {k}x{k} minors vanish")));
        }
        gcds.push(g);
    }
    if gcds[size] != det.monic() {
        return Err(Error::Consistency(
            "top gcd of minors differs from the monic determinant".into(),
        ));
    }
    let factors = gcds
        .windows(2)
        .map(|w| {
            w[1].exact_div(&w[0])
                .ok_or_else(|| Error::Consistency("gcd-of-minors chain does not divide".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InvariantFactors::new(factors))
}

/// Sweep order for the second basis member: `0, 1, -1, 2, -2, ...`.
fn sweep(count: usize) -> impl Iterator<Item = i64> {
    (0..count as i64).map(|k| if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) })
}

/// An equivalent pencil whose second matrix is nonsingular.
///
/// Returns the input when `det V ≠ 0`; otherwise `(V, U + tV)` for the first
/// `t` of the sweep `0, 1, -1, 2, ...` with `det(U + tV) ≠ 0`. The binary form
/// `det(xU + yV)` has degree `n + 1` and vanishes at `V`, so `n + 1` sweep
/// values decide whether a smooth member exists at all.
pub fn select_nonsingular_member(p: &QuadricPencil) -> Result<QuadricPencil> {
    if !p.v.det().is_zero() {
        return Ok(p.clone());
    }
    for t in sweep(p.size()) {
        let candidate = p.member(&Rational::one(), &int(t));
        if !candidate.det().is_zero() {
            return Ok(QuadricPencil {
                u: p.v.clone(),
                v: candidate,
            });
        }
    }
    Err(Error::NoSmoothMember)
}

/// What can be said about a pencil without a smooth member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegeneracyReport {
    /// Dimension of `ker U ∩ ker V`.
    pub common_radical: usize,
    pub is_cone: bool,
    pub is_segre: bool,
    pub verdict: String,
}

pub fn degeneracy_report(p: &QuadricPencil) -> DegeneracyReport {
    let r0 = p.size() - p.u.vstack(&p.v).rank();
    let verdict = if r0 > 0 {
        format!("cone with a {r0}-dimensional common radical; not a Segre quartic surface")
    } else {
        "no smooth member in the pencil; not a Segre quartic surface".to_string()
    };
    DegeneracyReport {
        common_radical: r0,
        is_cone: r0 > 0,
        is_segre: false,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn diag(entries: &[i64]) -> QMatrix {
        QMatrix::diagonal(&entries.iter().map(|&e| int(e)).collect::<Vec<_>>())
    }

    fn lin(a: i64) -> Poly {
        Poly::linear(&int(a))
    }

    fn pencil(u: QMatrix, v: QMatrix) -> QuadricPencil {
        QuadricPencil::new(u, v).unwrap()
    }

    #[test]
    fn rejects_asymmetric_or_mismatched() {
        let a = QMatrix::from_ints(&[&[1, 2], &[0, 1]]);
        assert!(QuadricPencil::new(a, QMatrix::identity(2)).is_err());
        assert!(QuadricPencil::new(QMatrix::identity(2), QMatrix::identity(3)).is_err());
    }

    #[test]
    fn det_poly_of_diagonal_pencil() {
        let p = pencil(diag(&[1, 2, 3, 4, 5]), QMatrix::identity(5));
        // (1-λ)(2-λ)...(5-λ) = -(λ-1)...(λ-5)
        let expected = -&Poly::from_roots(&[int(1), int(2), int(3), int(4), int(5)]);
        assert_eq!(det_poly(&p), expected);
    }

    #[test]
    fn det_degree_tracks_det_v() {
        let p = pencil(diag(&[1, 2, 3]), diag(&[1, 0, 1]));
        assert_eq!(det_poly(&p).degree(), Some(2));
    }

    #[test]
    fn invariant_factors_of_diagonal_pencil() {
        let p = pencil(diag(&[1, 1, 2, 3, 4]), QMatrix::identity(5));
        let f = invariant_factors(&p).unwrap();
        let one = Poly::one();
        assert_eq!(
            f.factors(),
            &[
                one.clone(),
                one.clone(),
                one,
                lin(1),
                Poly::from_roots(&[int(1), int(2), int(3), int(4)])
            ]
        );
    }

    #[test]
    fn invariant_factors_of_scalar_pencil() {
        let p = pencil(diag(&[2, 2, 2, 2, 2]), QMatrix::identity(5));
        let f = invariant_factors(&p).unwrap();
        assert!(f.factors().iter().all(|d| *d == lin(2)));
    }

    #[test]
    fn degenerate_determinant_is_an_error() {
        let p = pencil(diag(&[1, 2, 0]), diag(&[1, 1, 0]));
        assert_eq!(invariant_factors(&p), Err(Error::DegeneratePencil));
    }

    #[test]
    fn member_selection() {
        let p = pencil(diag(&[1, 2, 3]), QMatrix::identity(3));
        assert_eq!(select_nonsingular_member(&p).unwrap(), p);

        let p = pencil(QMatrix::identity(3), diag(&[1, 0, 1]));
        let q = select_nonsingular_member(&p).unwrap();
        assert_eq!((q.u(), q.v()), (p.v(), p.u()));

        // U and V singular, U + V not: first hit at t = 1.
        let p = pencil(diag(&[1, 0, 1]), diag(&[0, 1, 1]));
        let q = select_nonsingular_member(&p).unwrap();
        assert_eq!(q.u(), p.v());
        assert_eq!(q.v(), &diag(&[1, 1, 2]));
    }

    #[test]
    fn sweep_order() {
        assert_eq!(sweep(6).collect::<Vec<_>>(), vec![0, 1, -1, 2, -2, 3]);
    }

    #[test]
    fn shared_kernel_is_a_cone() {
        let p = pencil(diag(&[1, 2, 0]), diag(&[1, 1, 0]));
        assert_eq!(select_nonsingular_member(&p), Err(Error::NoSmoothMember));
        let r = degeneracy_report(&p);
        assert_eq!(r.common_radical, 1);
        assert!(r.is_cone && !r.is_segre);
    }

    #[test]
    fn proportional_pairs() {
        assert!(pencil(diag(&[2, 2]), QMatrix::identity(2)).is_proportional());
        assert!(!pencil(diag(&[1, 2]), QMatrix::identity(2)).is_proportional());
    }
}
