//! The cyclic nearest-neighbour coupling matrix and the matrix functions of it
//! that every other module consumes.
//!
//! The squeezing generator `Σ_i (Q_i P_{i+1} + Q_{i+1} P_i)` with `Q_{n+1} = Q_1`
//! is written as `Σ_ij A_ij Q_i P_j`. Every matrix function `f(A)` is evaluated
//! through one symmetric eigendecomposition, `f(A) = V·diag(f(a_k))·Vᵀ`.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::linalg;

/// Largest `|λ|` accepted by [`SqueezeKernel::new`].
pub const LAMBDA_GUARD: f64 = 20.0;

/// Integer adjacency matrix of the cyclic coupling, with its spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct CouplingMatrix {
    n: usize,
    entries: DMatrix<u32>,
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<f64>,
}

impl CouplingMatrix {
    /// Accumulates `A` from the cyclic generator sum.
    ///
    /// For `n = 2` both wraparound terms land on the same pair, so the
    /// off-diagonal entries are 2.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnsupportedModeCount { n, min: 2 });
        }
        let mut entries = DMatrix::<u32>::zeros(n, n);
        for i in 0..n {
            let j = (i + 1) % n;
            // Q_i P_{i+1}
            entries[(i, j)] += 1;
            // Q_{i+1} P_i
            entries[(j, i)] += 1;
        }
        let (eigenvalues, eigenvectors) = linalg::symmetric_eigen(&entries.map(f64::from))?;
        Ok(Self {
            n,
            entries,
            eigenvalues,
            eigenvectors,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &DMatrix<u32> {
        &self.entries
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        self.entries.map(f64::from)
    }

    /// Eigenvalues (descending) and orthonormal eigenvectors (columns).
    pub fn spectrum(&self) -> (&DVector<f64>, &DMatrix<f64>) {
        (&self.eigenvalues, &self.eigenvectors)
    }

    /// `V · diag(f(a_k)) · Vᵀ`.
    pub fn apply_fn(&self, f: impl Fn(f64) -> f64) -> DMatrix<f64> {
        linalg::spectral_apply(&self.eigenvalues, &self.eigenvectors, f)
    }

    /// `Σ_ij [(A + Aᵀ)^power]_ij` in exact integer arithmetic.
    pub fn symmetrized_power_sum(&self, power: u32) -> u128 {
        let n = self.n;
        let sym: Vec<u128> = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                u128::from(self.entries[(i, j)] + self.entries[(j, i)])
            })
            .collect();
        let mut acc: Vec<u128> = (0..n * n)
            .map(|k| u128::from(k / n == k % n))
            .collect();
        for _ in 0..power {
            let mut next = vec![0u128; n * n];
            for i in 0..n {
                for k in 0..n {
                    let a = acc[i * n + k];
                    if a == 0 {
                        continue;
                    }
                    for j in 0..n {
                        next[i * n + j] += a * sym[k * n + j];
                    }
                }
            }
            acc = next;
        }
        acc.iter().sum()
    }
}

/// `λ` together with every matrix function of `A` the squeezing formulas use.
///
/// `A` is symmetric, so `Λ̃ = Λ` and `G = Λ̃Λ = Λ² = e^{−2λA}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SqueezeKernel {
    pub coupling: CouplingMatrix,
    pub lambda: f64,
    /// `Λ = e^{−λA}`
    pub lambda_mat: DMatrix<f64>,
    /// `G = e^{−2λA}`
    pub gram: DMatrix<f64>,
    /// `G⁻¹ = e^{2λA}`
    pub gram_inv: DMatrix<f64>,
    /// `N = (1 + G)/2`
    pub n_mat: DMatrix<f64>,
    pub n_mat_inv: DMatrix<f64>,
    pub det_lambda: f64,
    pub det_n: f64,
}

pub(crate) fn check_lambda(lambda: f64) -> Result<()> {
    if !lambda.is_finite() || lambda.abs() > LAMBDA_GUARD {
        return Err(Error::ParameterOutOfRange {
            name: "lambda",
            value: lambda,
            bound: format!("finite with |lambda| <= {LAMBDA_GUARD}"),
        });
    }
    Ok(())
}

impl SqueezeKernel {
    pub fn new(coupling: CouplingMatrix, lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        let lambda_mat = coupling.apply_fn(|a| (-lambda * a).exp());
        let gram = coupling.apply_fn(|a| (-2.0 * lambda * a).exp());
        let gram_inv = coupling.apply_fn(|a| (2.0 * lambda * a).exp());
        let n_mat = coupling.apply_fn(|a| 0.5 * (1.0 + (-2.0 * lambda * a).exp()));
        let n_mat_inv = coupling.apply_fn(|a| 2.0 / (1.0 + (-2.0 * lambda * a).exp()));
        let (eigenvalues, _) = coupling.spectrum();
        let det_lambda = (-lambda * eigenvalues.sum()).exp();
        let det_n = eigenvalues
            .iter()
            .map(|&a| 0.5 * (1.0 + (-2.0 * lambda * a).exp()))
            .product();
        Ok(Self {
            coupling,
            lambda,
            lambda_mat,
            gram,
            gram_inv,
            n_mat,
            n_mat_inv,
            det_lambda,
            det_n,
        })
    }

    /// Convenience for `SqueezeKernel::new(CouplingMatrix::cyclic(n)?, lambda)`.
    pub fn cyclic(n: usize, lambda: f64) -> Result<Self> {
        Self::new(CouplingMatrix::cyclic(n)?, lambda)
    }

    pub fn n(&self) -> usize {
        self.coupling.n()
    }

    /// All-entries sums `(Σ_ij G_ij, Σ_ij G⁻¹_ij)`.
    pub fn sum_identities(&self) -> (f64, f64) {
        (linalg::entry_sum(&self.gram), linalg::entry_sum(&self.gram_inv))
    }

    /// `Π_k cosh(λ a_k)`.
    pub fn cosh_product(&self) -> f64 {
        let (eigenvalues, _) = self.coupling.spectrum();
        eigenvalues.iter().map(|&a| (self.lambda * a).cosh()).product()
    }
}
