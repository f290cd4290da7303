//! Phase-space view of the squeezed vacuum: Heisenberg transforms, collective
//! quadrature variances and the Gaussian Wigner function.
//!
//! Conventions used throughout the crate:
//!
//! * `Q = (a + a†)/√2`, `P = (a − a†)/(i√2)`, so `[Q, P] = i` and the vacuum
//!   has `⟨Q²⟩ = ⟨P²⟩ = 1/2`.
//! * The collective quadratures are `X₁ = Σ Q_i/√(2n)` and `X₂ = Σ P_i/√(2n)`,
//!   with `[X₁, X₂] = i/2` and vacuum variance 1/4 each.
//! * Complex phase-space coordinates are `α = (q + ip)/√2`.
//! * The Wigner function is normalized to one over `d^n q d^n p`, giving the
//!   vacuum `π^{−n} exp(−|q|² − |p|²)`.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::coupling::{check_lambda, SqueezeKernel};
use crate::error::{Error, Result};
use crate::linalg;

/// Below `exp(UNDERFLOW_LOG)` a Wigner value is reported as zero.
pub const UNDERFLOW_LOG: f64 = -700.0;

/// A phase-space point `(q, p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasePoint {
    q: DVector<f64>,
    p: DVector<f64>,
}

impl PhasePoint {
    pub fn new(q: Vec<f64>, p: Vec<f64>) -> Result<Self> {
        if q.len() != p.len() {
            return Err(Error::Shape {
                expected: q.len(),
                got: p.len(),
            });
        }
        if q.len() < 2 {
            return Err(Error::UnsupportedModeCount { n: q.len(), min: 2 });
        }
        if q.iter().chain(p.iter()).any(|x| !x.is_finite()) {
            return Err(Error::ContractViolation("phase point entries must be finite".into()));
        }
        Ok(Self {
            q: DVector::from_vec(q),
            p: DVector::from_vec(p),
        })
    }

    pub fn origin(n: usize) -> Result<Self> {
        Self::new(vec![0.0; n], vec![0.0; n])
    }

    /// `q_i = √2·Re α_i`, `p_i = √2·Im α_i`.
    pub fn from_alpha(alpha: &[Complex64]) -> Result<Self> {
        Self::new(
            alpha.iter().map(|a| SQRT_2 * a.re).collect(),
            alpha.iter().map(|a| SQRT_2 * a.im).collect(),
        )
    }

    pub fn to_alpha(&self) -> Vec<Complex64> {
        self.q
            .iter()
            .zip(self.p.iter())
            .map(|(&q, &p)| Complex64::new(q, p) * FRAC_1_SQRT_2)
            .collect()
    }

    pub fn n(&self) -> usize {
        self.q.len()
    }

    pub fn q(&self) -> &DVector<f64> {
        &self.q
    }

    pub fn p(&self) -> &DVector<f64> {
        &self.p
    }
}

/// Variances of `X₁` and `X₂`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct VariancePair {
    pub var_x1: f64,
    pub var_x2: f64,
}

impl VariancePair {
    pub fn product(&self) -> f64 {
        self.var_x1 * self.var_x2
    }
}

/// `(e^{−λA}, e^{λA})`: the matrices taking `Q_k` and `P_k` to
/// `S⁻¹Q_kS = Σ_i (e^{−λA})_{ki} Q_i` and `S⁻¹P_kS = Σ_i (e^{λA})_{ki} P_i`.
pub fn heisenberg_transforms(kernel: &SqueezeKernel) -> (DMatrix<f64>, DMatrix<f64>) {
    let lambda = kernel.lambda;
    let q_transform = kernel.lambda_mat.clone();
    let p_transform = kernel.coupling.apply_fn(|a| (lambda * a).exp());
    (q_transform, p_transform)
}

/// Variances as literal all-entries sums of `G` and `G⁻¹`, divided by `4n`.
pub fn variances_matrix_sum(kernel: &SqueezeKernel) -> VariancePair {
    let scale = 4.0 * kernel.n() as f64;
    VariancePair {
        var_x1: linalg::entry_sum(&kernel.gram) / scale,
        var_x2: linalg::entry_sum(&kernel.gram_inv) / scale,
    }
}

/// `(e^{−4λ}/4, e^{4λ}/4)`, independent of the mode count.
pub fn variances_closed(lambda: f64) -> Result<VariancePair> {
    check_lambda(lambda)?;
    Ok(VariancePair {
        var_x1: (-4.0 * lambda).exp() / 4.0,
        var_x2: (4.0 * lambda).exp() / 4.0,
    })
}

/// One Wigner evaluation, carried in log space so that deep tails are
/// distinguishable from underflow noise.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct WignerSample {
    pub value: f64,
    pub log_value: f64,
    pub underflow: bool,
}

/// `W(q, p) = π^{−n} exp(−qᵀ·q_form·q − pᵀ·p_form·p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianWigner {
    pub n: usize,
    /// `(ΛΛ̃)⁻¹ = e^{2λA}`
    pub q_form: DMatrix<f64>,
    /// `ΛΛ̃ = e^{−2λA}`
    pub p_form: DMatrix<f64>,
    pub norm_const: f64,
}

impl GaussianWigner {
    pub fn from_kernel(kernel: &SqueezeKernel) -> Self {
        let n = kernel.n();
        Self {
            n,
            q_form: kernel.gram_inv.clone(),
            p_form: kernel.gram.clone(),
            norm_const: PI.powi(-(n as i32)),
        }
    }

    fn exponent(&self, pt: &PhasePoint) -> Result<f64> {
        if pt.n() != self.n {
            return Err(Error::Shape {
                expected: self.n,
                got: pt.n(),
            });
        }
        let q = pt.q();
        let p = pt.p();
        Ok(q.dot(&(&self.q_form * q)) + p.dot(&(&self.p_form * p)))
    }

    pub fn eval(&self, pt: &PhasePoint) -> Result<WignerSample> {
        let quad = self.exponent(pt)?;
        let log_value = self.norm_const.ln() - quad;
        let underflow = log_value < UNDERFLOW_LOG;
        let value = if underflow {
            0.0
        } else {
            self.norm_const * (-quad).exp()
        };
        Ok(WignerSample {
            value,
            log_value,
            underflow,
        })
    }

    pub fn value(&self, pt: &PhasePoint) -> Result<f64> {
        Ok(self.eval(pt)?.value)
    }

    /// Evaluates at `q = √2·Re α`, `p = √2·Im α`.
    pub fn value_alpha(&self, alpha: &[Complex64]) -> Result<f64> {
        if alpha.len() != self.n {
            return Err(Error::Shape {
                expected: self.n,
                got: alpha.len(),
            });
        }
        self.value(&PhasePoint::from_alpha(alpha)?)
    }

    /// `2n×2n` second-moment matrix ordered `(q₁..q_n, p₁..p_n)`.
    ///
    /// A Gaussian `exp(−xᵀ M x)` has covariance `M⁻¹/2`; the forms here are
    /// inverses of each other, so the blocks are `p_form/2` and `q_form/2`.
    pub fn covariance_matrix(&self) -> DMatrix<f64> {
        let n = self.n;
        let mut cov = DMatrix::<f64>::zeros(2 * n, 2 * n);
        cov.view_mut((0, 0), (n, n)).copy_from(&(&self.p_form * 0.5));
        cov.view_mut((n, n), (n, n)).copy_from(&(&self.q_form * 0.5));
        cov
    }

    /// Marginal over momenta, `π^{−n/2} det(q_form)^{1/2} exp(−qᵀ·q_form·q)`.
    pub fn q_marginal(&self, q: &DVector<f64>) -> Result<f64> {
        if q.len() != self.n {
            return Err(Error::Shape {
                expected: self.n,
                got: q.len(),
            });
        }
        let det = self.q_form.clone().determinant();
        Ok(PI.powf(-(self.n as f64) / 2.0) * det.sqrt() * (-q.dot(&(&self.q_form * q))).exp())
    }
}

/// Projects a covariance matrix onto the collective quadratures.
pub fn collective_variances(cov: &DMatrix<f64>) -> VariancePair {
    let n = cov.nrows() / 2;
    let scale = 2.0 * n as f64;
    let qq = cov.view((0, 0), (n, n));
    let pp = cov.view((n, n), (n, n));
    VariancePair {
        var_x1: qq.sum() / scale,
        var_x2: pp.sum() / scale,
    }
}
