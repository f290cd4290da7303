//! Dense helpers shared by the spectral code paths.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

const EIGEN_MAX_ITER: usize = 10_000;
const DEGENERACY_TOL: f64 = 1e-9;
const ZERO_TOL: f64 = 1e-12;

/// Eigendecomposition of a real symmetric matrix with a reproducible basis.
///
/// Eigenvalues come out in descending order. Inside a degenerate cluster the
/// basis is rebuilt by projecting the unit vectors e_1, e_2, ... onto the
/// eigenspace and orthonormalizing, then each vector is signed so that its
/// first nonzero entry is positive and the cluster is sorted
/// lexicographically. The result does not depend on what the solver returned
/// for the degenerate subspace.
pub fn symmetric_eigen(m: &DMatrix<f64>) -> Result<(DVector<f64>, DMatrix<f64>)> {
    let n = m.nrows();
    let eig = m
        .clone()
        .try_symmetric_eigen(f64::EPSILON, EIGEN_MAX_ITER)
        .ok_or_else(|| Error::NumericFailure("symmetric eigensolver did not converge".into()))?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));

    let scale = eig.eigenvalues.amax().max(1.0);
    let mut values = Vec::with_capacity(n);
    let mut vectors: Vec<DVector<f64>> = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n
            && (eig.eigenvalues[order[start]] - eig.eigenvalues[order[end]]).abs()
                <= DEGENERACY_TOL * scale
        {
            end += 1;
        }
        let cluster: Vec<DVector<f64>> = order[start..end]
            .iter()
            .map(|&k| eig.eigenvectors.column(k).into_owned())
            .collect();
        let mean = order[start..end]
            .iter()
            .map(|&k| eig.eigenvalues[k])
            .sum::<f64>()
            / (end - start) as f64;
        let mut basis = canonical_basis(&cluster, n);
        basis.sort_by(lexicographic);
        for v in basis {
            values.push(if end - start > 1 { mean } else { eig.eigenvalues[order[start]] });
            vectors.push(v);
        }
        start = end;
    }

    let eigenvalues = DVector::from_vec(values);
    let eigenvectors = DMatrix::from_columns(&vectors);
    Ok((eigenvalues, eigenvectors))
}

fn canonical_basis(cluster: &[DVector<f64>], n: usize) -> Vec<DVector<f64>> {
    let k = cluster.len();
    if k == 1 {
        let mut v = cluster[0].clone();
        fix_sign(&mut v);
        return vec![v];
    }
    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(k);
    for unit in 0..n {
        if basis.len() == k {
            break;
        }
        // project e_unit onto the eigenspace
        let mut v = DVector::<f64>::zeros(n);
        for u in cluster {
            v.axpy(u[unit], u, 1.0);
        }
        for b in &basis {
            let c = b.dot(&v);
            v.axpy(-c, b, 1.0);
        }
        let norm = v.norm();
        if norm > 1e-6 {
            v /= norm;
            // one more pass keeps the basis orthogonal to machine precision
            for b in &basis {
                let c = b.dot(&v);
                v.axpy(-c, b, 1.0);
            }
            v /= v.norm();
            fix_sign(&mut v);
            basis.push(v);
        }
    }
    basis
}

fn fix_sign(v: &mut DVector<f64>) {
    if let Some(first) = v.iter().find(|x| x.abs() > ZERO_TOL) {
        if *first < 0.0 {
            v.neg_mut();
        }
    }
}

fn lexicographic(a: &DVector<f64>, b: &DVector<f64>) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        if (x - y).abs() > ZERO_TOL {
            return x.total_cmp(y);
        }
    }
    std::cmp::Ordering::Equal
}

/// `V · diag(f(values)) · Vᵀ`.
pub fn spectral_apply(
    values: &DVector<f64>,
    vectors: &DMatrix<f64>,
    f: impl Fn(f64) -> f64,
) -> DMatrix<f64> {
    let mut scaled = vectors.clone();
    for (k, mut col) in scaled.column_iter_mut().enumerate() {
        col *= f(values[k]);
    }
    scaled * vectors.transpose()
}

pub fn entry_sum(m: &DMatrix<f64>) -> f64 {
    m.iter().sum()
}

pub fn max_abs_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn symmetry_residual(m: &DMatrix<f64>) -> f64 {
    max_abs_diff(m, &m.transpose())
}

/// Relative deviation `|actual − expected| / |expected|`, falling back to the
/// absolute deviation when `expected` is zero.
pub fn relative_error(actual: f64, expected: f64) -> f64 {
    let diff = (actual - expected).abs();
    if expected == 0.0 {
        diff
    } else {
        diff / expected.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_cluster_is_canonical() {
        // all-ones-off-diagonal 3x3: eigenvalues 2, -1, -1
        let m = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0]);
        let (vals, vecs) = symmetric_eigen(&m).unwrap();
        assert!((vals[0] - 2.0).abs() < 1e-12);
        assert!((vals[1] + 1.0).abs() < 1e-12);
        assert!((vals[2] + 1.0).abs() < 1e-12);
        let orth = vecs.transpose() * &vecs;
        assert!(max_abs_diff(&orth, &DMatrix::identity(3, 3)) < 1e-12);
        for col in vecs.column_iter() {
            let first = col.iter().find(|x| x.abs() > 1e-12).unwrap();
            assert!(*first > 0.0);
        }
        // the -1 eigenspace basis is built from e_1, e_2 and sorted
        let s2 = 0.5f64.sqrt();
        let s6 = 6f64.sqrt();
        let expect = [[0.0, s2, -s2], [2.0 / s6, -1.0 / s6, -1.0 / s6]];
        for (k, e) in expect.iter().enumerate() {
            for i in 0..3 {
                assert!((vecs[(i, k + 1)] - e[i]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn spectral_apply_identity_function() {
        let m = DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 3.0]);
        let (vals, vecs) = symmetric_eigen(&m).unwrap();
        let back = spectral_apply(&vals, &vecs, |x| x);
        assert!(max_abs_diff(&back, &m) < 1e-12);
    }
}
