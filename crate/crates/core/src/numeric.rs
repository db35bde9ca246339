//! Floating-point cross-check of the exponent structure: eigenvalue
//! clustering of `V⁻¹U` followed by a rank staircase at each cluster.

use nalgebra::{Complex, DMatrix};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pencil::{select_nonsingular_member, QuadricPencil};

pub const DEFAULT_TOL_CLUSTER: f64 = 1e-6;
pub const DEFAULT_TOL_RANK: f64 = 1e-8;

type C64 = Complex<f64>;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cluster {
    #[serde(serialize_with = "serialize_complex")]
    pub eigenvalue: C64,
    /// Jordan block sizes, descending.
    pub partition: Vec<u32>,
}

fn serialize_complex<S: serde::Serializer>(z: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq([z.re, z.im])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericPartition {
    pub clusters: Vec<Cluster>,
}

impl NumericPartition {
    /// Partitions alone, sorted, for comparison with exact exponent data.
    pub fn multiset(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = self.clusters.iter().map(|c| c.partition.clone()).collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn size(&self) -> u32 {
        self.clusters.iter().flat_map(|c| &c.partition).sum()
    }
}

/// Groups eigenvalues whose spread is explained by a defective eigenvalue
/// perturbed at relative level `tol`: a cluster of `k` values with diameter
/// `d` is accepted when `(d / scale)^k <= tol`.
fn cluster_eigenvalues(values: &[C64], tol: f64) -> Result<Vec<Vec<usize>>> {
    let n = values.len();
    let scale = values.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let link = scale * tol.powf(1.0 / n as f64);
    // single linkage at the loosest radius any accepted cluster could need
    let mut label: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..i {
            if (values[i] - values[j]).norm() <= link {
                let (from, to) = (label[i], label[j]);
                if from != to {
                    label.iter_mut().filter(|l| **l == from).for_each(|l| *l = to);
                }
            }
        }
    }
    let mut ids: Vec<usize> = label.clone();
    ids.sort_unstable();
    ids.dedup();
    let clusters: Vec<Vec<usize>> = ids
        .iter()
        .map(|&id| (0..n).filter(|&i| label[i] == id).collect())
        .collect();

    let spread = |members: &[usize]| {
        let mut d: f64 = 0.0;
        for &i in members {
            for &j in members {
                d = d.max((values[i] - values[j]).norm());
            }
        }
        (d / scale).powi(members.len() as i32)
    };
    for c in &clusters {
        let s = spread(c);
        if s > tol {
            return Err(Error::IllConditioned(format!(
                "{} eigenvalues are too close to separate and too far apart to merge (spread {s:e})",
                c.len()
            )));
        }
    }
    for (a, ca) in clusters.iter().enumerate() {
        for cb in &clusters[a + 1..] {
            let joined: Vec<usize> = ca.iter().chain(cb).copied().collect();
            if spread(&joined) <= 10.0 * tol {
                return Err(Error::IllConditioned(
                    "two eigenvalue clusters lie within ten times the tolerance".into(),
                ));
            }
        }
    }
    Ok(clusters)
}

/// Orthonormal basis (as columns) of the right null space of `a`, using
/// singular values below `threshold`.
fn null_space(a: &DMatrix<C64>, threshold: f64) -> Result<DMatrix<C64>> {
    let n = a.ncols();
    let svd = a.clone().svd(false, true);
    let v_t = svd
        .v_t
        .ok_or_else(|| Error::IllConditioned("singular value decomposition failed".into()))?;
    let small: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] <= threshold)
        .collect();
    let mut basis = DMatrix::<C64>::zeros(n, small.len());
    for (col, &i) in small.iter().enumerate() {
        for r in 0..n {
            basis[(r, col)] = v_t[(i, r)].conj();
        }
    }
    Ok(basis)
}

/// Dimensions of `ker A^j` for `j = 1..`, until they stop growing.
///
/// `ker A^j = {x : Ax ∈ ker A^{j-1}}` is found as the null space of
/// `(I - KK*) A` with `K` an orthonormal basis of `ker A^{j-1}`, so no power
/// of `A` is ever formed.
fn kernel_staircase(a: &DMatrix<C64>, tol_rank: f64, limit: usize) -> Result<Vec<usize>> {
    let n = a.nrows();
    let sigma_max = a.clone().singular_values().max();
    let threshold = tol_rank * sigma_max.max(f64::MIN_POSITIVE);
    let mut dims = vec![0usize];
    let mut projector = DMatrix::<C64>::identity(n, n);
    loop {
        let k = null_space(&(&projector * a), threshold)?;
        let d = k.ncols();
        if d == *dims.last().unwrap() || dims.len() > limit {
            break;
        }
        dims.push(d);
        projector = DMatrix::<C64>::identity(n, n) - &k * k.adjoint();
    }
    Ok(dims)
}

/// Eigenvalues from the diagonal blocks of the real Schur form; 2×2 blocks
/// are solved with a complex square root so that a nearly repeated pair
/// never produces NaN.
fn schur_eigenvalues(m: &DMatrix<f64>) -> Result<Vec<C64>> {
    let n = m.nrows();
    let (_, t) = m
        .clone()
        .try_schur(f64::EPSILON, 0)
        .ok_or_else(|| Error::IllConditioned("Schur iteration did not converge".into()))?
        .unpack();
    let mut out = Vec::with_capacity(n);
    let mut i = 0;
    while i < n {
        if i + 1 < n && t[(i + 1, i)] != 0.0 {
            let (a, b, c, d) = (t[(i, i)], t[(i, i + 1)], t[(i + 1, i)], t[(i + 1, i + 1)]);
            let mean = (a + d) / 2.0;
            let disc = C64::new(((a - d) / 2.0).powi(2) + b * c, 0.0).sqrt();
            out.push(mean + disc);
            out.push(mean - disc);
            i += 2;
        } else {
            out.push(C64::new(t[(i, i)], 0.0));
            i += 1;
        }
    }
    if out.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::IllConditioned("non-finite eigenvalue".into()));
    }
    Ok(out)
}

/// Exponent partitions of `p` recovered in floating point.
pub fn numeric_exponent_partitions(
    p: &QuadricPencil,
    tol_cluster: f64,
    tol_rank: f64,
) -> Result<NumericPartition> {
    let q = select_nonsingular_member(p).map_err(|_| {
        Error::IllConditioned("no nonsingular member to invert".into())
    })?;
    let n = q.size();
    let to_dense = |rows: Vec<Vec<f64>>| DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    let u = to_dense(q.u().to_f64_rows());
    let v = to_dense(q.v().to_f64_rows());
    let v_inv = v
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::IllConditioned("V is numerically singular".into()))?;
    let m = &v_inv * &u;
    if m.iter().any(|x| !x.is_finite()) {
        return Err(Error::IllConditioned("non-finite entries in V^-1 U".into()));
    }
    let eigenvalues = schur_eigenvalues(&m)?;
    let groups = cluster_eigenvalues(&eigenvalues, tol_cluster)?;
    let mc: DMatrix<C64> = m.map(|x| C64::new(x, 0.0));

    let mut clusters = Vec::new();
    for members in groups {
        let k = members.len();
        let alpha = members.iter().map(|&i| eigenvalues[i]).sum::<C64>() / k as f64;
        let shifted = &mc - DMatrix::<C64>::identity(n, n) * alpha;
        let dims = kernel_staircase(&shifted, tol_rank, k)?;
        if *dims.last().unwrap() != k {
            return Err(Error::IllConditioned(format!(
                "rank staircase at {alpha} reaches nullity {} but the cluster has {k} eigenvalues",
                dims.last().unwrap()
            )));
        }
        // at_least[j] = number of blocks of size >= j + 1
        let at_least: Vec<usize> = dims.windows(2).map(|w| w[1] - w[0]).collect();
        let mut partition = Vec::new();
        for (j, &c) in at_least.iter().enumerate() {
            let next = at_least.get(j + 1).copied().unwrap_or(0);
            if c < next {
                return Err(Error::IllConditioned(format!(
                    "rank staircase at {alpha} is not monotone"
                )));
            }
            partition.extend(std::iter::repeat_n(j as u32 + 1, c - next));
        }
        partition.sort_unstable_by(|a, b| b.cmp(a));
        clusters.push(Cluster {
            eigenvalue: alpha,
            partition,
        });
    }
    clusters.sort_by(|a, b| {
        (a.eigenvalue.re, a.eigenvalue.im)
            .partial_cmp(&(b.eigenvalue.re, b.eigenvalue.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(NumericPartition { clusters })
}
