use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::space::FockSpace;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Operator on a truncated Fock space, stored row-compressed.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    space: FockSpace,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<Complex64>,
}

impl FockOperator {
    /// Builds from `(row, col, value)` triplets; duplicates are summed and
    /// exact zeros dropped.
    pub fn from_triplets(
        space: FockSpace,
        triplets: impl IntoIterator<Item = (usize, usize, Complex64)>,
    ) -> Self {
        let dim = space.dim();
        let mut rows: Vec<Vec<(usize, Complex64)>> = vec![Vec::new(); dim];
        for (r, c, v) in triplets {
            rows[r].push((c, v));
        }
        let mut row_ptr = Vec::with_capacity(dim + 1);
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        row_ptr.push(0);
        for mut row in rows {
            row.sort_by_key(|&(c, _)| c);
            let mut iter = row.into_iter().peekable();
            while let Some((c, mut v)) = iter.next() {
                while let Some(&(c2, v2)) = iter.peek() {
                    if c2 != c {
                        break;
                    }
                    v += v2;
                    iter.next();
                }
                if v != ZERO {
                    cols.push(c);
                    vals.push(v);
                }
            }
            row_ptr.push(cols.len());
        }
        Self {
            space,
            row_ptr,
            cols,
            vals,
        }
    }

    pub fn zero(space: FockSpace) -> Self {
        Self::from_triplets(space, std::iter::empty())
    }

    pub fn identity(space: FockSpace) -> Self {
        Self::from_triplets(space, (0..space.dim()).map(|i| (i, i, Complex64::new(1.0, 0.0))))
    }

    pub fn space(&self) -> &FockSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vals.is_empty()
    }

    /// Nonzero entries of one row as `(col, value)`.
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        let span = self.row_ptr[r]..self.row_ptr[r + 1];
        self.cols[span.clone()].iter().copied().zip(self.vals[span].iter().copied())
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        (0..self.dim()).flat_map(move |r| self.row(r).map(move |(c, v)| (r, c, v)))
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.row(r).find(|&(col, _)| col == c).map_or(ZERO, |(_, v)| v)
    }

    fn check_space(&self, other: &FockSpace) -> Result<()> {
        if &self.space != other {
            return Err(Error::Shape {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(())
    }

    pub fn apply(&self, v: &DVector<Complex64>) -> Result<DVector<Complex64>> {
        if v.len() != self.dim() {
            return Err(Error::Shape {
                expected: self.dim(),
                got: v.len(),
            });
        }
        Ok(DVector::from_fn(self.dim(), |r, _| {
            self.row(r).map(|(c, x)| x * v[c]).sum()
        }))
    }

    pub fn adjoint(&self) -> Self {
        Self::from_triplets(self.space, self.triplets().map(|(r, c, v)| (c, r, v.conj())))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_triplets(self.space, self.triplets().map(|(r, c, v)| (r, c, v * s)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_space(&other.space)?;
        Ok(Self::from_triplets(self.space, self.triplets().chain(other.triplets())))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_space(&other.space)?;
        let dim = self.dim();
        let mut acc = vec![ZERO; dim];
        let mut touched: Vec<usize> = Vec::new();
        let mut marker = vec![false; dim];
        let mut triplets = Vec::new();
        for r in 0..dim {
            for (k, a) in self.row(r) {
                for (c, b) in other.row(k) {
                    if !marker[c] {
                        marker[c] = true;
                        touched.push(c);
                    }
                    acc[c] += a * b;
                }
            }
            for &c in &touched {
                triplets.push((r, c, acc[c]));
                acc[c] = ZERO;
                marker[c] = false;
            }
            touched.clear();
        }
        Ok(Self::from_triplets(self.space, triplets))
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::from_element(self.dim(), self.dim(), ZERO);
        for (r, c, v) in self.triplets() {
            m[(r, c)] = v;
        }
        m
    }

    /// Dense block on the given basis indices.
    pub fn submatrix(&self, indices: &[usize]) -> DMatrix<Complex64> {
        let mut position = vec![usize::MAX; self.dim()];
        for (k, &i) in indices.iter().enumerate() {
            position[i] = k;
        }
        let mut m = DMatrix::from_element(indices.len(), indices.len(), ZERO);
        for (k, &r) in indices.iter().enumerate() {
            for (c, v) in self.row(r) {
                if position[c] != usize::MAX {
                    m[(k, position[c])] = v;
                }
            }
        }
        m
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.vals.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// `max |H − H†|` over entries.
    pub fn hermiticity_residual(&self) -> f64 {
        self.sub(&self.adjoint()).map(|d| d.max_abs_entry()).unwrap_or(f64::INFINITY)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn triplets_are_merged() {
        let s = FockSpace::new(1, 2).unwrap();
        let op = FockOperator::from_triplets(
            s,
            [(0, 1, c(1.0, 0.0)), (0, 1, c(2.0, 0.0)), (2, 2, c(1.0, 0.0)), (2, 2, c(-1.0, 0.0))],
        );
        assert_eq!(op.nnz(), 1);
        assert_eq!(op.get(0, 1), c(3.0, 0.0));
        assert_eq!(op.get(2, 2), ZERO);
    }

    #[test]
    fn product_matches_dense() {
        let s = FockSpace::new(1, 3).unwrap();
        let a = FockOperator::from_triplets(s, [(0, 1, c(1.0, 1.0)), (1, 2, c(0.5, 0.0)), (3, 0, c(0.0, 2.0))]);
        let b = FockOperator::from_triplets(s, [(1, 3, c(2.0, 0.0)), (2, 2, c(0.0, -1.0)), (0, 0, c(1.0, 0.0))]);
        let sparse = a.mul(&b).unwrap().to_dense();
        let dense = a.to_dense() * b.to_dense();
        assert!((sparse - dense).iter().all(|x| x.norm() < 1e-15));
        let adj = a.adjoint().to_dense();
        assert!((adj - a.to_dense().adjoint()).iter().all(|x| x.norm() == 0.0));
    }

    #[test]
    fn mismatched_spaces_are_rejected() {
        let a = FockOperator::identity(FockSpace::new(1, 3).unwrap());
        let b = FockOperator::identity(FockSpace::new(2, 1).unwrap());
        assert!(a.mul(&b).is_err());
        assert!(a.add(&b).is_err());
        assert!(a.apply(&DVector::from_element(3, ZERO)).is_err());
    }
}
