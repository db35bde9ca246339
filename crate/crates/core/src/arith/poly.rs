use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{common_denominator, format_rational, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial in λ over the rationals, lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and the leading coefficient of any other
/// polynomial is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial λ.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `λ - root`.
    pub fn linear(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), Rational::one()])
    }

    /// Monic polynomial with the given roots (repeated roots allowed).
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                Poly {
                    coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
                }
            }
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Euclidean division.
    ///
    /// # Panics
    /// If `divisor` is the zero polynomial.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(dn) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if dn < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); dn - dd + 1];
        for shift in (0..=dn - dd).rev() {
            let c = &rem[shift + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * d;
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// `Some(self / divisor)` when the division is exact.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.exact_div(self).is_some()
    }

    /// Largest `k` with `factor^k | self`. `factor` must be nonconstant and
    /// `self` nonzero.
    pub fn multiplicity_of(&self, factor: &Poly) -> u32 {
        assert!(!factor.is_constant(), "multiplicity of a constant factor");
        assert!(!self.is_zero(), "multiplicity in the zero polynomial");
        let mut k = 0;
        let mut rest = self.clone();
        while let Some(q) = rest.exact_div(factor) {
            rest = q;
            k += 1;
        }
        k
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    ///
    /// Runs a primitive pseudo-remainder sequence over the integers so that
    /// intermediate coefficients stay small.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        let (mut a, mut b) = (primitive_integer(self), primitive_integer(other));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_remainder(&a, &b);
            a = b;
            b = primitive_part(r);
        }
        Poly::new(a.into_iter().map(Rational::from_integer).collect()).monic()
    }

    /// Interpolates the unique polynomial of degree below `points.len()`
    /// through the given nodes (distinct abscissae required).
    pub fn interpolate(points: &[(Rational, Rational)]) -> Poly {
        // Newton divided differences.
        let n = points.len();
        let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = &points[i].0 - &points[i - level].0;
                assert!(!dx.is_zero(), "interpolation nodes must be distinct");
                table[i] = (&table[i] - &table[i - 1]) / dx;
            }
        }
        let mut acc = Poly::zero();
        for i in (0..n).rev() {
            acc = &(&acc * &Poly::linear(&points[i].0)) + &Poly::constant(table[i].clone());
        }
        acc
    }

    /// Renders the polynomial in the given variable, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coef = format_rational(&mag);
            match i {
                0 => out.push_str(&coef),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&coef);
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("\u{3bb}"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Degree first, then coefficients from the constant term upwards.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    let Some(lead) = v.last() else {
        return v;
    };
    let mut content = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if lead.is_negative() {
        content = -content;
    }
    v.into_iter().map(|c| c / &content).collect()
}

fn primitive_integer(p: &Poly) -> Vec<BigInt> {
    let den = common_denominator(p.coeffs());
    let scaled = p
        .coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    primitive_part(scaled)
}

/// Remainder of `lc(b)^k · a` by `b`, up to a nonzero integer factor.
fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lc;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        trim(&mut r);
        // keep coefficients bounded between steps
        r = primitive_part(r);
    }
    r
}

/// Monic polynomial with the roots of `p`, each simple: `p / gcd(p, p')`.
pub fn squarefree_part(p: &Poly) -> Result<Poly> {
    if p.is_zero() {
        return Err(Error::domain("squarefree part of the zero polynomial"));
    }
    let g = p.gcd(&p.derivative());
    Ok(p.exact_div(&g).expect("gcd divides its argument").monic())
}

/// Yun's squarefree decomposition: pairs `(a_k, k)` of monic, squarefree,
/// pairwise coprime, nonconstant polynomials with `p = lc(p) · Π a_k^k`.
pub fn squarefree_decomposition(p: &Poly) -> Result<Vec<(Poly, u32)>> {
    if p.is_zero() {
        return Err(Error::domain("squarefree decomposition of the zero polynomial"));
    }
    let f = p.monic();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).unwrap();
    let c = df.exact_div(&a0).unwrap();
    let mut d = &c - &b.derivative();
    let mut k = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        let b_next = b.exact_div(&a).unwrap();
        let c_next = d.exact_div(&a).unwrap();
        d = &c_next - &b_next.derivative();
        if !a.is_constant() {
            out.push((a, k));
        }
        b = b_next;
        k += 1;
    }
    Ok(out)
}

/// Pairwise coprime monic polynomials such that every input is the product
/// of a subset of them, found by splitting pairs along their gcd until no
/// pair shares a factor. Sorted by degree, then coefficients.
pub fn coprime_basis(ps: &[Poly]) -> Result<Vec<Poly>> {
    for p in ps {
        if p.is_constant() {
            return Err(Error::domain(format!("coprime basis input {p} is constant")));
        }
        if !p.is_monic() {
            return Err(Error::domain(format!("coprime basis input {p} is not monic")));
        }
        if !p.gcd(&p.derivative()).is_one() {
            return Err(Error::domain(format!("coprime basis input {p} is not squarefree")));
        }
    }
    let mut basis: Vec<Poly> = Vec::new();
    for p in ps {
        if !basis.contains(p) {
            basis.push(p.clone());
        }
    }
    'split: loop {
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let g = basis[i].gcd(&basis[j]);
                if g.is_constant() {
                    continue;
                }
                let a = basis[i].exact_div(&g).unwrap();
                let b = basis[j].exact_div(&g).unwrap();
                basis.remove(j);
                basis.remove(i);
                for part in [g, a, b] {
                    if !part.is_constant() && !basis.contains(&part) {
                        basis.push(part);
                    }
                }
                continue 'split;
            }
        }
        break;
    }
    basis.sort();
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn lin(a: i64) -> Poly {
        Poly::linear(&int(a))
    }

    fn prod(ps: &[Poly]) -> Poly {
        ps.iter().fold(Poly::one(), |acc, p| &acc * p)
    }

    fn x2p1() -> Poly {
        Poly::from_ints(&[1, 0, 1])
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = Poly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Poly::from_ints(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        let p = prod(&[lin(1), lin(1), lin(2)]);
        let q = prod(&[lin(1), lin(3)]);
        assert_eq!(p.gcd(&q), lin(1));
        let (quo, rem) = p.div_rem(&q);
        assert_eq!(&(&quo * &q) + &rem, p);
        assert!(rem.degree() < q.degree());
        assert_eq!(p.gcd(&Poly::zero()), p.monic());
        assert!(Poly::zero().gcd(&Poly::zero()).is_zero());
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let a = Poly::new(vec![crate::arith::frac(1, 3), crate::arith::frac(-7, 2), int(5)]);
        let p = &a * &lin(4);
        let q = &a.scale(&crate::arith::frac(-9, 11)) * &lin(-1);
        assert_eq!(p.gcd(&q), a.monic());
    }

    #[test]
    fn squarefree_part_examples() {
        assert_eq!(
            squarefree_part(&prod(&[lin(1), lin(1), lin(2)])).unwrap(),
            prod(&[lin(1), lin(2)])
        );
        assert_eq!(squarefree_part(&Poly::x().pow(3)).unwrap(), Poly::x());
        let p = (&x2p1() * &lin(3)).scale(&int(-4));
        assert_eq!(squarefree_part(&p).unwrap(), p.monic());
        assert!(squarefree_part(&Poly::zero()).is_err());
    }

    #[test]
    fn yun_decomposition() {
        let p = prod(&[lin(1), lin(1), lin(2), lin(3), lin(3), lin(3)]).scale(&int(5));
        let dec = squarefree_decomposition(&p).unwrap();
        assert_eq!(dec, vec![(lin(2), 1), (lin(1), 2), (lin(3), 3)]);
    }

    #[test]
    fn coprime_basis_examples() {
        let b = coprime_basis(&[prod(&[lin(1), lin(2)]), lin(1)]).unwrap();
        assert_eq!(b, vec![lin(2), lin(1)]);
        let p = prod(&[lin(1), lin(7)]);
        assert_eq!(coprime_basis(std::slice::from_ref(&p)).unwrap(), vec![p]);
        let b = coprime_basis(&[&x2p1() * &lin(3), x2p1()]).unwrap();
        assert_eq!(b, vec![lin(3), x2p1()]);
    }

    #[test]
    fn coprime_basis_rejects_bad_input() {
        assert!(coprime_basis(&[Poly::one()]).is_err());
        assert!(coprime_basis(&[lin(1).scale(&int(2))]).is_err());
        assert!(coprime_basis(&[lin(1).pow(2)]).is_err());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Poly::from_ints(&[3, -1, 0, 2]);
        let pts: Vec<_> = (0..4).map(|t| (int(t), p.eval(&int(t)))).collect();
        assert_eq!(Poly::interpolate(&pts), p);
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[2, -3, 1]).to_string(), "\u{3bb}^2 - 3\u{3bb} + 2");
        assert_eq!(Poly::from_ints(&[0, -1]).to_string(), "-\u{3bb}");
    }
}
