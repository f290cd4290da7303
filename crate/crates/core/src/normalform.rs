//! Normally ordered expansion of the squeezing operator and the two-photon
//! representation of the squeezed vacuum, with the closed three- and
//! four-mode special cases.
//!
//! The operator factorizes as
//!
//! ```text
//! S = prefactor · exp[½ a†ᵀ·cre·a†] · :exp[a†ᵀ·cross·a]: · exp[½ aᵀ·ann·a]
//! ```
//!
//! with `prefactor = (det Λ / det N)^{1/2}`, `cre = ΛN⁻¹Λᵀ − I`,
//! `cross = ΛN⁻¹ − I` and `ann = N⁻¹ − I`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::coupling::{check_lambda, SqueezeKernel};
use crate::error::{Error, Result};
use crate::linalg;

#[derive(Debug, Clone, PartialEq)]
pub struct NormalOrderedForm {
    pub prefactor: f64,
    /// coefficient of the `½ a†ᵀ·a†` block
    pub cre_mat: DMatrix<f64>,
    /// coefficient of the `a†ᵀ·a` block
    pub cross_mat: DMatrix<f64>,
    /// coefficient of the `½ aᵀ·a` block
    pub ann_mat: DMatrix<f64>,
}

impl NormalOrderedForm {
    pub fn from_kernel(kernel: &SqueezeKernel) -> Result<Self> {
        let n = kernel.n();
        let id = DMatrix::<f64>::identity(n, n);
        let lam = &kernel.lambda_mat;
        let n_inv = &kernel.n_mat_inv;
        let residual = linalg::max_abs_diff(&(&kernel.n_mat * n_inv), &id);
        if !residual.is_finite() || residual > 1e-8 {
            return Err(Error::InvariantViolation(format!(
                "N is numerically singular (|N·N⁻¹ − I| = {residual:e})"
            )));
        }
        let cre_mat = lam * n_inv * lam.transpose() - &id;
        let cross_mat = lam * n_inv - &id;
        let ann_mat = n_inv - &id;
        let prefactor = (kernel.det_lambda / kernel.det_n).sqrt();
        Ok(Self {
            prefactor,
            cre_mat,
            cross_mat,
            ann_mat,
        })
    }

    pub fn n(&self) -> usize {
        self.cre_mat.nrows()
    }
}

/// `norm · exp[½ a†ᵀ F a†] |0⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoPhotonState {
    pub n: usize,
    pub norm: f64,
    pub f: DMatrix<f64>,
}

impl TwoPhotonState {
    /// Validates symmetry and normalizability (spectral radius of `F` below 1).
    pub fn new(f: DMatrix<f64>, norm: f64) -> Result<Self> {
        if !f.is_square() {
            return Err(Error::Shape {
                expected: f.nrows(),
                got: f.ncols(),
            });
        }
        if linalg::symmetry_residual(&f) > 1e-12 {
            return Err(Error::ContractViolation("two-photon matrix is not symmetric".into()));
        }
        let state = Self {
            n: f.nrows(),
            norm,
            f,
        };
        let radius = state.spectral_radius();
        if radius.is_nan() || radius >= 1.0 {
            return Err(Error::ContractViolation(format!(
                "two-photon matrix has spectral radius {radius} >= 1"
            )));
        }
        Ok(state)
    }

    pub fn spectral_radius(&self) -> f64 {
        let sym = (&self.f + self.f.transpose()) * 0.5;
        sym.symmetric_eigenvalues().amax()
    }

    /// `det(I − F·Fᵀ)^{1/4}`, the norm a pure Gaussian with this `F` must carry.
    pub fn expected_norm(&self) -> f64 {
        let id = DMatrix::<f64>::identity(self.n, self.n);
        (id - &self.f * self.f.transpose()).determinant().powf(0.25)
    }

    /// Second moments `(⟨QQᵀ⟩, ⟨PPᵀ⟩) = (½(I+F)(I−F)⁻¹, ½(I−F)(I+F)⁻¹)`.
    pub fn quadrature_covariances(&self) -> Result<(DMatrix<f64>, DMatrix<f64>)> {
        let id = DMatrix::<f64>::identity(self.n, self.n);
        let plus = &id + &self.f;
        let minus = &id - &self.f;
        let singular = || Error::NumericFailure("I ± F is singular".into());
        let minus_inv = minus.clone().try_inverse().ok_or_else(singular)?;
        let plus_inv = plus.clone().try_inverse().ok_or_else(singular)?;
        Ok(((plus * minus_inv) * 0.5, (minus * plus_inv) * 0.5))
    }
}

/// Squeezed vacuum `S|0⟩` read off the normal-ordered form.
pub fn squeezed_vacuum(kernel: &SqueezeKernel) -> Result<TwoPhotonState> {
    let form = NormalOrderedForm::from_kernel(kernel)?;
    let f = (&form.cre_mat + form.cre_mat.transpose()) * 0.5;
    TwoPhotonState::new(f, form.prefactor)
}

/// Standard two-mode squeezed vacuum `sech λ · exp[−a₁†a₂† tanh λ]|00⟩`.
pub fn baseline_two_mode(lambda: f64) -> Result<TwoPhotonState> {
    if !lambda.is_finite() {
        return Err(Error::ParameterOutOfRange {
            name: "lambda",
            value: lambda,
            bound: "finite".into(),
        });
    }
    let t = -lambda.tanh();
    TwoPhotonState::new(DMatrix::from_row_slice(2, 2, &[0.0, t, t, 0.0]), 1.0 / lambda.cosh())
}

/// Closed-form three-mode quantities: `G = [[u, v, v], [v, u, v], [v, v, u]]`
/// and `S|000⟩ = A3·exp[(A1/6) Σ a_i†² − (2A2/3) Σ_{i<j} a_i†a_j†]|000⟩`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ThreeModeClosed {
    pub u: f64,
    pub v: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl ThreeModeClosed {
    pub fn new(lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        let l = lambda;
        let u = 2.0 / 3.0 * (2.0 * l).exp() + 1.0 / (3.0 * (4.0 * l).exp());
        let v = 1.0 / (3.0 * (4.0 * l).exp()) - (2.0 * l).exp() / 3.0;
        let a1 = (1.0 - 1.0 / (2.0 * l).cosh()) * l.tanh();
        let a2 = (3.0 * l).sinh() / (2.0 * l.cosh() * (2.0 * l).cosh());
        let a3 = 1.0 / l.cosh() / (2.0 * l).cosh().sqrt();
        Ok(Self { u, v, a1, a2, a3 })
    }

    pub fn two_photon_diagonal(&self) -> f64 {
        self.a1 / 3.0
    }

    pub fn two_photon_off_diagonal(&self) -> f64 {
        -2.0 * self.a2 / 3.0
    }
}

/// Literal evaluation of the closed three-mode Wigner function in `α`
/// coordinates; `+ c.c.` conjugates the whole second brace.
pub fn wigner3_closed(lambda: f64, alpha: &[Complex64]) -> Result<f64> {
    if alpha.len() != 3 {
        return Err(Error::Shape {
            expected: 3,
            got: alpha.len(),
        });
    }
    let (c2, c4) = ((2.0 * lambda).cosh(), (4.0 * lambda).cosh());
    let (s2, s4) = ((2.0 * lambda).sinh(), (4.0 * lambda).sinh());
    let abs_sq: f64 = alpha.iter().map(|a| a.norm_sqr()).sum();
    let sq: Complex64 = alpha.iter().map(|a| a * a).sum();
    let mut cross = Complex64::new(0.0, 0.0);
    for i in 0..3 {
        for j in (i + 1)..3 {
            cross += (c4 - c2) * alpha[i] * alpha[j].conj() + (s2 + s4) * alpha[i] * alpha[j];
        }
    }
    let brace = -(s4 - 2.0 * s2) / 3.0 * sq - 2.0 / 3.0 * cross;
    let exponent = -2.0 / 3.0 * (c4 + 2.0 * c2) * abs_sq + (brace + brace.conj()).re;
    Ok(PI.powi(-3) * exponent.exp())
}

/// Closed-form four-mode quantities: `G` has entries `r` (diagonal), `t`
/// (nearest neighbour) and `s` (opposite mode); `N⁻¹` has diagonal 1,
/// nearest-neighbour `tanh 2λ / 2` and opposite-mode 0.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct FourModeClosed {
    pub r: f64,
    pub s: f64,
    pub t: f64,
    pub n_inv_diag: f64,
    pub n_inv_near: f64,
    pub n_inv_far: f64,
    pub det_n: f64,
    pub state_norm: f64,
    pub state_tanh: f64,
}

impl FourModeClosed {
    pub fn new(lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        let (ch, sh) = ((2.0 * lambda).cosh(), (2.0 * lambda).sinh());
        let th = (2.0 * lambda).tanh();
        Ok(Self {
            r: ch * ch,
            s: sh * sh,
            t: -sh * ch,
            n_inv_diag: 1.0,
            n_inv_near: th / 2.0,
            n_inv_far: 0.0,
            det_n: ch * ch,
            state_norm: 1.0 / ch,
            state_tanh: th,
        })
    }

    /// `F` of the four-mode state: `−tanh 2λ / 2` on the coupled pairs
    /// (1,2), (1,4), (2,3), (3,4), zero elsewhere.
    pub fn two_photon_matrix(&self) -> DMatrix<f64> {
        let x = -self.state_tanh / 2.0;
        DMatrix::from_row_slice(
            4,
            4,
            &[0.0, x, 0.0, x, x, 0.0, x, 0.0, 0.0, x, 0.0, x, x, 0.0, x, 0.0],
        )
    }

    pub fn n_inv_matrix(&self) -> DMatrix<f64> {
        let (d, a, b) = (self.n_inv_diag, self.n_inv_near, self.n_inv_far);
        DMatrix::from_row_slice(4, 4, &[d, a, b, a, a, d, a, b, b, a, d, a, a, b, a, d])
    }
}

/// Closed four-mode Wigner function with `M = α₁α₃* + α₂α₄*` and
/// `R = α₁α₂ + α₁α₄ + α₂α₃ + α₃α₄`.
pub fn wigner4_closed(lambda: f64, alpha: &[Complex64]) -> Result<f64> {
    if alpha.len() != 4 {
        return Err(Error::Shape {
            expected: 4,
            got: alpha.len(),
        });
    }
    let ch2 = (2.0 * lambda).cosh().powi(2);
    let th = (2.0 * lambda).tanh();
    let abs_sq: f64 = alpha.iter().map(|a| a.norm_sqr()).sum();
    let m = alpha[0] * alpha[2].conj() + alpha[1] * alpha[3].conj();
    let r = alpha[0] * alpha[1] + alpha[0] * alpha[3] + alpha[1] * alpha[2] + alpha[2] * alpha[3];
    let bracket = abs_sq + (m + m.conj()).re * th * th + (r + r.conj()).re * th;
    Ok(PI.powi(-4) * (-2.0 * ch2 * bracket).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianWigner;
    use crate::linalg::{max_abs_diff, relative_error};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_lambda_form_is_trivial() {
        for n in 2..=5 {
            let form = NormalOrderedForm::from_kernel(&SqueezeKernel::cyclic(n, 0.0).unwrap()).unwrap();
            assert_eq!(form.prefactor, 1.0);
            for m in [&form.cre_mat, &form.cross_mat, &form.ann_mat] {
                assert!(m.amax() < 1e-14);
            }
            let vac = squeezed_vacuum(&SqueezeKernel::cyclic(n, 0.0).unwrap()).unwrap();
            assert_eq!(vac.norm, 1.0);
            assert!(vac.f.amax() < 1e-14);
        }
    }

    #[test]
    fn two_mode_creation_block() {
        for lambda in [-0.4, 0.15, 0.8] {
            let form = NormalOrderedForm::from_kernel(&SqueezeKernel::cyclic(2, lambda).unwrap()).unwrap();
            let t = -(2.0 * lambda).tanh();
            let expect = DMatrix::from_row_slice(2, 2, &[0.0, t, t, 0.0]);
            assert!(max_abs_diff(&form.cre_mat, &expect) < 1e-14);
        }
    }

    #[test]
    fn four_mode_prefactor() {
        let form = NormalOrderedForm::from_kernel(&SqueezeKernel::cyclic(4, 0.3).unwrap()).unwrap();
        assert!((form.prefactor - 0.843_550_687_621_806_7).abs() < 1e-12);
    }

    #[test]
    fn form_invariants_over_sweep() {
        for n in 2..=8 {
            for lambda in [0.5, -0.5, 0.1, -0.1] {
                let k = SqueezeKernel::cyclic(n, lambda).unwrap();
                let form = NormalOrderedForm::from_kernel(&k).unwrap();
                assert!(linalg::symmetry_residual(&form.cre_mat) < 1e-12);
                assert!(linalg::symmetry_residual(&form.ann_mat) < 1e-12);
                let tanh = k.coupling.apply_fn(|a| -(lambda * a).tanh());
                assert!(max_abs_diff(&form.cre_mat, &tanh) < 1e-10);
                assert!(form.cre_mat.symmetric_eigenvalues().amax() < 1.0);
                let check = form.prefactor.powi(2) * k.det_n / k.det_lambda;
                assert!((check - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn four_mode_state_pattern() {
        let st = squeezed_vacuum(&SqueezeKernel::cyclic(4, 0.3).unwrap()).unwrap();
        let x = -0.268_524_783_499_017_6;
        for i in 0..4 {
            for j in 0..4 {
                let coupled = (i + j) % 2 == 1;
                let expect = if coupled { x } else { 0.0 };
                assert!((st.f[(i, j)] - expect).abs() < 1e-12, "({i},{j})");
            }
        }
        assert!((st.norm - 0.843_550_687_621_806_7).abs() < 1e-12);
    }

    #[test]
    fn three_mode_state_coefficients() {
        let st = squeezed_vacuum(&SqueezeKernel::cyclic(3, 0.2).unwrap()).unwrap();
        assert!((st.f[(0, 0)] - 0.004_933_892_731_527_703).abs() < 1e-12);
        assert!((st.f[(0, 1)] + 0.192_441_427_493_376_34).abs() < 1e-12);
        let closed = ThreeModeClosed::new(0.2).unwrap();
        assert!((closed.a1 - 0.014_801_678_194_583_11).abs() < 1e-14);
        assert!((closed.a2 - 0.288_662_141_240_064_5).abs() < 1e-14);
        assert!((closed.a3 - 0.942_853_074_898_413_6).abs() < 1e-14);
        for lambda in [-0.45, 0.05, 0.2, 0.7] {
            let st = squeezed_vacuum(&SqueezeKernel::cyclic(3, lambda).unwrap()).unwrap();
            let closed = ThreeModeClosed::new(lambda).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    let expect = if i == j {
                        closed.two_photon_diagonal()
                    } else {
                        closed.two_photon_off_diagonal()
                    };
                    assert!((st.f[(i, j)] - expect).abs() < 1e-10);
                }
            }
            assert!((st.norm - closed.a3).abs() < 1e-10);
        }
    }

    #[test]
    fn unit_norm_condition() {
        for n in 2..=7 {
            for lambda in [-0.6, 0.25, 0.9] {
                let st = squeezed_vacuum(&SqueezeKernel::cyclic(n, lambda).unwrap()).unwrap();
                assert!((st.norm - st.expected_norm()).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn baseline_values_and_reduction() {
        let vac = baseline_two_mode(0.0).unwrap();
        assert_eq!(vac.norm, 1.0);
        assert_eq!(vac.f.amax(), 0.0);

        let b = baseline_two_mode(0.6).unwrap();
        assert!((b.f[(0, 1)] + 0.537_049_566_998_035_2).abs() < 1e-15);
        assert!((b.norm - 0.843_550_687_621_806_7).abs() < 1e-15);

        for lambda in [0.05, 0.3, -0.7] {
            let st = squeezed_vacuum(&SqueezeKernel::cyclic(2, lambda).unwrap()).unwrap();
            let b = baseline_two_mode(2.0 * lambda).unwrap();
            assert!(max_abs_diff(&st.f, &b.f) <= 1e-12);
            assert!((st.norm - b.norm).abs() <= 1e-12);
        }
    }

    #[test]
    fn rejects_unnormalizable_matrix() {
        let f = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        assert!(matches!(TwoPhotonState::new(f, 1.0), Err(Error::ContractViolation(_))));
        let f = DMatrix::from_row_slice(2, 2, &[0.0, 0.1, 0.2, 0.0]);
        assert!(matches!(TwoPhotonState::new(f, 1.0), Err(Error::ContractViolation(_))));
    }

    #[test]
    fn three_mode_closed_examples() {
        let zero = ThreeModeClosed::new(0.0).unwrap();
        assert_eq!((zero.u, zero.v, zero.a1, zero.a2, zero.a3), (1.0, 0.0, 0.0, 0.0, 1.0));
        let c1 = ThreeModeClosed::new(0.1).unwrap();
        assert!((c1.u - 1.037_708_520_785_326).abs() < 1e-12);
        assert!((c1.v + 0.183_694_237_374_843).abs() < 1e-12);
        for lambda in [-0.8, 0.1, 0.5] {
            let c = ThreeModeClosed::new(lambda).unwrap();
            assert!((c.u + 2.0 * c.v - (-4.0 * lambda).exp()).abs() < 1e-12);
            let check = c.a3.powi(2) * (2.0 * lambda).cosh() * lambda.cosh().powi(2);
            assert!((check - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn four_mode_closed_examples() {
        let zero = FourModeClosed::new(0.0).unwrap();
        assert_eq!((zero.r, zero.s, zero.t, zero.det_n), (1.0, 0.0, 0.0, 1.0));
        let c = FourModeClosed::new(0.3).unwrap();
        assert!((c.r - 1.405_327_783_662_187).abs() < 1e-12);
        assert!((c.s - 0.405_327_783_662_187_3).abs() < 1e-12);
        assert!((c.t + 0.754_730_677_706_086_2).abs() < 1e-12);
        assert!((c.state_norm - 0.843_550_687_621_806_7).abs() < 1e-12);
        assert!((c.state_tanh - 0.537_049_566_998_035_2).abs() < 1e-12);
        for lambda in [-0.6, 0.3, 1.1] {
            let c = FourModeClosed::new(lambda).unwrap();
            assert!((c.r - c.s - 1.0).abs() < 1e-12 * c.r);
            assert!((c.r + c.s + 2.0 * c.t - (-4.0 * lambda).exp()).abs() < 1e-12 * c.r);
            assert_eq!(c.det_n, c.r);
            let k = SqueezeKernel::cyclic(4, lambda).unwrap();
            assert!(max_abs_diff(&c.n_inv_matrix(), &k.n_mat_inv) < 1e-12);
            assert!(relative_error(k.det_n, c.det_n) < 1e-12);
        }
    }

    #[test]
    fn closed_wigner_trivial_cases() {
        assert_eq!(wigner3_closed(0.3, &[c(0.0, 0.0); 3]).unwrap(), PI.powi(-3));
        assert_eq!(wigner4_closed(0.3, &[c(0.0, 0.0); 4]).unwrap(), PI.powi(-4));
        let a3 = [c(0.2, -0.1), c(0.4, 0.3), c(-0.5, 0.0)];
        let abs3: f64 = a3.iter().map(|a| a.norm_sqr()).sum();
        assert!((wigner3_closed(0.0, &a3).unwrap() - PI.powi(-3) * (-2.0 * abs3).exp()).abs() < 1e-16);
        let a4 = [c(0.2, -0.1), c(0.4, 0.3), c(-0.5, 0.0), c(0.0, 0.9)];
        let abs4: f64 = a4.iter().map(|a| a.norm_sqr()).sum();
        assert!((wigner4_closed(0.0, &a4).unwrap() - PI.powi(-4) * (-2.0 * abs4).exp()).abs() < 1e-16);
        assert!(wigner3_closed(0.1, &a4).is_err());
        assert!(wigner4_closed(0.1, &a3).is_err());
    }

    #[test]
    fn closed_wigner_reference_points() {
        let alpha = [c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert!((wigner3_closed(0.1, &alpha).unwrap() - 0.019_144_546_955_626_2).abs() < 1e-12);
        let alpha4 = [c(0.3, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let w = GaussianWigner::from_kernel(&SqueezeKernel::cyclic(4, 0.2).unwrap());
        let generic = w.value_alpha(&alpha4).unwrap();
        assert!(relative_error(wigner4_closed(0.2, &alpha4).unwrap(), generic) < 1e-10);
    }

    #[test]
    fn closed_wigner_matches_generic_on_seeded_draws() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let lambda = rng.random_range(-0.5..=0.5);
            for n in [3usize, 4] {
                let alpha: Vec<Complex64> = (0..n)
                    .map(|_| c(rng.random_range(-0.6..0.6), rng.random_range(-0.6..0.6)))
                    .collect();
                let w = GaussianWigner::from_kernel(&SqueezeKernel::cyclic(n, lambda).unwrap());
                let generic = w.value_alpha(&alpha).unwrap();
                let closed = if n == 3 {
                    wigner3_closed(lambda, &alpha).unwrap()
                } else {
                    wigner4_closed(lambda, &alpha).unwrap()
                };
                assert!(relative_error(closed, generic) < 1e-10, "n={n} λ={lambda}");
            }
        }
    }

    proptest! {
        #[test]
        fn covariance_from_two_photon_matrix_matches_kernel(n in 2usize..7, lambda in -0.8f64..0.8) {
            let k = SqueezeKernel::cyclic(n, lambda).unwrap();
            let st = squeezed_vacuum(&k).unwrap();
            let (qq, pp) = st.quadrature_covariances().unwrap();
            prop_assert!(max_abs_diff(&qq, &(&k.gram * 0.5)) < 1e-10 * k.gram.amax());
            prop_assert!(max_abs_diff(&pp, &(&k.gram_inv * 0.5)) < 1e-10 * k.gram_inv.amax());
        }
    }
}
