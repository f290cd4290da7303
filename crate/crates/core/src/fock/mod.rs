//! Brute-force verifier in a truncated Fock space.
//!
//! Everything here is built from the truncated ladder matrices alone: the
//! generator is assembled as `λ Σ_ij A_ij Q_i P_j` and exponentiated by a dense
//! Hermitian eigendecomposition, so none of the closed forms in the other
//! modules are used on this side.

mod operator;
mod space;

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub use operator::FockOperator;
pub use space::{FockSpace, MAX_DIM};

use crate::coupling::CouplingMatrix;
use crate::error::{Error, Result};
use crate::normalform::{NormalOrderedForm, TwoPhotonState};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const EIGEN_MAX_ITER: usize = 100_000;

/// Largest block handed to the dense eigensolver.
pub const MAX_DENSE_DIM: usize = 4096;

/// Extra photons per mode added around a state before displacing it.
const DISPLACEMENT_PAD: usize = 12;

/// Largest displaced mass tolerated outside the original cutoff.
pub const DISPLACED_MASS_LIMIT: f64 = 1e-6;

/// Largest norm deficit accepted by [`variance_numeric`].
pub const NORMALIZATION_TOL: f64 = 1e-6;

/// Amplitudes of an `n`-mode state over a truncated basis.
#[derive(Debug, Clone, PartialEq)]
pub struct FockTensor {
    pub space: FockSpace,
    pub amps: DVector<Complex64>,
}

impl FockTensor {
    pub fn vacuum(space: FockSpace) -> Self {
        let mut amps = DVector::from_element(space.dim(), ZERO);
        amps[0] = ONE;
        Self { space, amps }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `1 − ‖ψ‖²`: weight missing from the truncated basis.
    pub fn tail_mass(&self) -> f64 {
        1.0 - self.norm_sqr()
    }

    pub fn amplitude(&self, occupations: &[usize]) -> Result<Complex64> {
        Ok(self.amps[self.space.index(occupations)?])
    }
}

/// Collective quadrature selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quadrature {
    /// `Σ Q_i / √(2n)`
    X1,
    /// `Σ P_i / √(2n)`
    X2,
}

/// Truncated annihilation and creation operators for every mode.
///
/// `a†` loses the matrix element that would leave the space, so `a†` is the
/// exact transpose of `a`.
pub fn ladder_ops(space: &FockSpace) -> (Vec<FockOperator>, Vec<FockOperator>) {
    let mut lowering = Vec::with_capacity(space.n());
    let mut raising = Vec::with_capacity(space.n());
    for mode in 0..space.n() {
        let stride = space.stride(mode);
        let a = FockOperator::from_triplets(
            *space,
            (0..space.dim()).filter_map(|col| {
                let k = space.occupation(col, mode);
                (k > 0).then(|| (col - stride, col, Complex64::new((k as f64).sqrt(), 0.0)))
            }),
        );
        raising.push(FockOperator::from_triplets(*space, a.triplets().map(|(r, c, v)| (c, r, v))));
        lowering.push(a);
    }
    (lowering, raising)
}

/// `(Q_i, P_i)` for every mode.
pub fn quadrature_ops(space: &FockSpace) -> (Vec<FockOperator>, Vec<FockOperator>) {
    let (a, adag) = ladder_ops(space);
    let q = a
        .iter()
        .zip(&adag)
        .map(|(a, ad)| a.add(ad).expect("same space").scale(Complex64::new(FRAC_1_SQRT_2, 0.0)))
        .collect();
    // (a − a†)/(i√2) = −i(a − a†)/√2
    let p = a
        .iter()
        .zip(&adag)
        .map(|(a, ad)| a.sub(ad).expect("same space").scale(Complex64::new(0.0, -FRAC_1_SQRT_2)))
        .collect();
    (q, p)
}

/// `H = λ Σ_ij A_ij Q_i P_j`, so that the squeezer is `exp(iH)`.
pub fn generator(space: &FockSpace, coupling: &CouplingMatrix, lambda: f64) -> Result<FockOperator> {
    let n = coupling.n();
    if space.n() != n {
        return Err(Error::Shape {
            expected: n,
            got: space.n(),
        });
    }
    let (q, p) = quadrature_ops(space);
    let mut h = FockOperator::zero(*space);
    for i in 0..n {
        for j in 0..n {
            let weight = coupling.entries()[(i, j)];
            if weight == 0 {
                continue;
            }
            let term = q[i].mul(&p[j])?.scale(Complex64::new(lambda * f64::from(weight), 0.0));
            h = h.add(&term)?;
        }
    }
    Ok(h)
}

/// Basis states reachable from `start` through nonzero entries of `op`.
fn reachable_from(op: &FockOperator, start: usize) -> Vec<usize> {
    let mut seen = vec![false; op.dim()];
    let mut queue = std::collections::VecDeque::from([start]);
    seen[start] = true;
    while let Some(r) = queue.pop_front() {
        for (c, _) in op.row(r) {
            if !seen[c] {
                seen[c] = true;
                queue.push_back(c);
            }
        }
    }
    (0..op.dim()).filter(|&i| seen[i]).collect()
}

fn hermitian_exp_i(block: DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let dim = block.nrows();
    if dim > MAX_DENSE_DIM {
        return Err(Error::ResourceLimit {
            dim,
            limit: MAX_DENSE_DIM,
        });
    }
    let eig = block
        .try_symmetric_eigen(f64::EPSILON, EIGEN_MAX_ITER)
        .ok_or_else(|| Error::NumericFailure("Hermitian eigensolver did not converge".into()))?;
    let v = &eig.eigenvectors;
    let mut scaled = v.clone();
    for (k, mut col) in scaled.column_iter_mut().enumerate() {
        col *= Complex64::from_polar(1.0, eig.eigenvalues[k]);
    }
    Ok(scaled * v.adjoint())
}

/// `exp(iH)|0⟩`.
///
/// Only the block of basis states connected to the vacuum through `H` is
/// diagonalized; that block is invariant under the truncated `H`, so the
/// result equals the full truncated evolution.
pub fn evolve_vacuum(h: &FockOperator) -> Result<FockTensor> {
    let space = *h.space();
    let block = reachable_from(h, 0);
    let u = hermitian_exp_i(h.submatrix(&block))?;
    let mut amps = DVector::from_element(space.dim(), ZERO);
    for (k, &i) in block.iter().enumerate() {
        // vacuum sits at block position 0
        amps[i] = u[(k, 0)];
    }
    Ok(FockTensor { space, amps })
}

/// Dense `exp(iH)` on the whole truncated space.
pub fn propagator(h: &FockOperator) -> Result<DMatrix<Complex64>> {
    hermitian_exp_i(h.to_dense())
}

/// `Σ_k T^k / k!` for an operator that strictly raises or strictly lowers the
/// total photon number, where the series terminates.
fn nilpotent_exp(t: &FockOperator) -> Result<FockOperator> {
    let space = *t.space();
    let mut result = FockOperator::identity(space);
    let mut term = FockOperator::identity(space);
    let max_terms = space.n() * space.cutoff() + 1;
    for k in 1..=max_terms {
        term = term.mul(t)?.scale(Complex64::new(1.0 / k as f64, 0.0));
        if term.is_zero() {
            return Ok(result);
        }
        result = result.add(&term)?;
    }
    if term.is_zero() {
        Ok(result)
    } else {
        Err(Error::ContractViolation("series operator is not nilpotent".into()))
    }
}

/// `½ Σ_ij M_ij x_i y_j`.
fn quadratic(
    left: &[FockOperator],
    right: &[FockOperator],
    m: &DMatrix<f64>,
    factor: f64,
) -> Result<FockOperator> {
    let space = *left[0].space();
    let mut out = FockOperator::zero(space);
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if m[(i, j)] == 0.0 {
                continue;
            }
            let term = left[i].mul(&right[j])?.scale(Complex64::new(factor * m[(i, j)], 0.0));
            out = out.add(&term)?;
        }
    }
    Ok(out)
}

/// Applies `norm · exp[½ a†ᵀ F a†]` to the vacuum.
///
/// Creation-only products have exact matrix elements inside the truncated
/// space, so the amplitudes kept are exact and the lost weight is reported
/// through [`FockTensor::tail_mass`].
pub fn two_photon_expand(state: &TwoPhotonState, space: &FockSpace) -> Result<FockTensor> {
    if state.n != space.n() {
        return Err(Error::Shape {
            expected: space.n(),
            got: state.n,
        });
    }
    // revalidates symmetry and spectral radius
    let state = TwoPhotonState::new(state.f.clone(), state.norm)?;
    let (_, adag) = ladder_ops(space);
    let pair = quadratic(&adag, &adag, &state.f, 0.5)?;
    let mut term = FockTensor::vacuum(*space).amps;
    let mut amps = term.clone();
    for k in 1.. {
        term = pair.apply(&term)? / Complex64::new(k as f64, 0.0);
        if term.iter().all(|x| *x == ZERO) {
            break;
        }
        amps += &term;
    }
    amps *= Complex64::new(state.norm, 0.0);
    Ok(FockTensor {
        space: *space,
        amps,
    })
}

/// `⟨ψ|X²|ψ⟩ − ⟨ψ|X|ψ⟩²` with truncated quadrature matrices.
pub fn variance_numeric(psi: &FockTensor, which: Quadrature) -> Result<f64> {
    let deficit = (psi.norm_sqr() - 1.0).abs();
    if deficit > NORMALIZATION_TOL {
        return Err(Error::ContractViolation(format!(
            "state norm deviates from 1 by {deficit:e}"
        )));
    }
    let space = psi.space;
    let (q, p) = quadrature_ops(&space);
    let ops = match which {
        Quadrature::X1 => q,
        Quadrature::X2 => p,
    };
    let scale = 1.0 / (2.0 * space.n() as f64).sqrt();
    let mut x = FockOperator::zero(space);
    for op in &ops {
        x = x.add(op)?;
    }
    let x = x.scale(Complex64::new(scale, 0.0));
    let xpsi = x.apply(&psi.amps)?;
    let mean = psi.amps.dotc(&xpsi).re;
    let second = xpsi.norm_squared();
    Ok(second - mean * mean)
}

/// `⟨a|b⟩`, conjugate-linear in `a`.
pub fn overlap(a: &FockTensor, b: &FockTensor) -> Result<Complex64> {
    if a.space != b.space {
        return Err(Error::Shape {
            expected: a.space.dim(),
            got: b.space.dim(),
        });
    }
    Ok(a.amps.dotc(&b.amps))
}

/// Single-mode `D(β) = exp(β a† − β* a)` at the given cutoff.
fn displacement(beta: Complex64, cutoff: usize) -> Result<DMatrix<Complex64>> {
    let dim = cutoff + 1;
    // D(β) = exp(iK) with K = −i(β a† − β* a), Hermitian
    let mut k = DMatrix::from_element(dim, dim, ZERO);
    for m in 1..dim {
        let s = (m as f64).sqrt();
        // ⟨m|a†|m−1⟩ = √m and ⟨m−1|a|m⟩ = √m
        k[(m, m - 1)] = Complex64::new(0.0, -1.0) * beta * s;
        k[(m - 1, m)] = Complex64::new(0.0, 1.0) * beta.conj() * s;
    }
    hermitian_exp_i(k)
}

/// Applies a single-mode matrix to one tensor axis.
fn apply_on_mode(space: &FockSpace, amps: &mut DVector<Complex64>, mode: usize, m: &DMatrix<Complex64>) {
    let base = space.base();
    let stride = space.stride(mode);
    let block = stride * base;
    let mut buf = vec![ZERO; base];
    for outer in (0..space.dim()).step_by(block) {
        for inner in 0..stride {
            let start = outer + inner;
            for (k, slot) in buf.iter_mut().enumerate() {
                *slot = amps[start + k * stride];
            }
            for r in 0..base {
                let mut acc = ZERO;
                for (c, x) in buf.iter().enumerate() {
                    acc += m[(r, c)] * x;
                }
                amps[start + r * stride] = acc;
            }
        }
    }
}

/// `π^{−n} ⟨ψ|D(α)(−1)^N D†(α)|ψ⟩`.
///
/// The state is embedded in a space padded by a few photons per mode before
/// `D(−α)` is applied, and the weight the displaced state puts above the
/// original cutoff must stay below [`DISPLACED_MASS_LIMIT`].
pub fn wigner_numeric(psi: &FockTensor, alpha: &[Complex64]) -> Result<f64> {
    let space = psi.space;
    if alpha.len() != space.n() {
        return Err(Error::Shape {
            expected: space.n(),
            got: alpha.len(),
        });
    }
    let padded = FockSpace::with_limit(space.n(), space.cutoff() + DISPLACEMENT_PAD, 4 * MAX_DIM)?;
    let mut amps = DVector::from_element(padded.dim(), ZERO);
    for (i, a) in psi.amps.iter().enumerate() {
        let occ = space.occupations(i);
        amps[padded.index(&occ)?] = *a;
    }
    for (mode, a) in alpha.iter().enumerate() {
        let d = displacement(-a, padded.cutoff())?;
        apply_on_mode(&padded, &mut amps, mode, &d);
    }
    let mut parity_sum = 0.0;
    let mut outside = 0.0;
    for (i, a) in amps.iter().enumerate() {
        let occ = padded.occupations(i);
        let weight = a.norm_sqr();
        if occ.iter().any(|&k| k > space.cutoff()) {
            outside += weight;
        }
        let total: usize = occ.iter().sum();
        parity_sum += if total.is_multiple_of(2) { weight } else { -weight };
    }
    if outside > DISPLACED_MASS_LIMIT {
        return Err(Error::Truncation {
            mass: outside,
            limit: DISPLACED_MASS_LIMIT,
        });
    }
    Ok(PI.powi(-(space.n() as i32)) * parity_sum)
}

/// Prefactor · exp[½a†ᵀ·cre·a†] · :exp[a†ᵀ·cross·a]: · exp[½aᵀ·ann·a] as a
/// truncated matrix.
///
/// The middle factor is summed term by term, `N_k = Σ_ij cross_ij a_i† N_{k−1} a_j`,
/// which keeps every creator to the left of every annihilator.
pub fn assemble_normal_ordered(space: &FockSpace, form: &NormalOrderedForm) -> Result<FockOperator> {
    if form.n() != space.n() {
        return Err(Error::Shape {
            expected: space.n(),
            got: form.n(),
        });
    }
    let (a, adag) = ladder_ops(space);
    let creation = nilpotent_exp(&quadratic(&adag, &adag, &form.cre_mat, 0.5)?)?;
    let annihilation = nilpotent_exp(&quadratic(&a, &a, &form.ann_mat, 0.5)?)?;

    let mut middle = FockOperator::identity(*space);
    let mut ordered = FockOperator::identity(*space);
    let max_terms = space.n() * space.cutoff();
    for k in 1..=max_terms {
        let mut next = FockOperator::zero(*space);
        for i in 0..space.n() {
            for j in 0..space.n() {
                let x = form.cross_mat[(i, j)];
                if x == 0.0 {
                    continue;
                }
                let term = adag[i].mul(&ordered)?.mul(&a[j])?.scale(Complex64::new(x, 0.0));
                next = next.add(&term)?;
            }
        }
        ordered = next;
        if ordered.is_zero() {
            break;
        }
        let mut factorial = 1.0;
        for m in 2..=k {
            factorial *= m as f64;
        }
        middle = middle.add(&ordered.scale(Complex64::new(1.0 / factorial, 0.0)))?;
    }

    creation
        .mul(&middle)?
        .mul(&annihilation)
        .map(|op| op.scale(Complex64::new(form.prefactor, 0.0)))
}

/// Basis indices with at most `max_total` photons in total.
pub fn low_photon_indices(space: &FockSpace, max_total: usize) -> Vec<usize> {
    (0..space.dim())
        .filter(|&i| space.total_photons(i) <= max_total)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coupling::SqueezeKernel;
    use crate::normalform::{baseline_two_mode, squeezed_vacuum};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn commutator(x: &FockOperator, y: &FockOperator) -> FockOperator {
        x.mul(y).unwrap().sub(&y.mul(x).unwrap()).unwrap()
    }

    #[test]
    fn ladder_matrix_elements() {
        let s = FockSpace::new(2, 4).unwrap();
        let (a, adag) = ladder_ops(&s);
        let vac = FockTensor::vacuum(s);
        // ⟨0|a a†|0⟩ = 1
        let v = a[0].apply(&adag[0].apply(&vac.amps).unwrap()).unwrap();
        assert!((vac.amps.dotc(&v) - ONE).norm() < 1e-15);
        for mode in 0..2 {
            assert_eq!(adag[mode], a[mode].adjoint());
        }
        let idx = s.index(&[3, 1]).unwrap();
        assert!((a[0].get(s.index(&[2, 1]).unwrap(), idx) - c(3f64.sqrt(), 0.0)).norm() < 1e-15);
        assert!((a[1].get(s.index(&[3, 0]).unwrap(), idx) - ONE).norm() < 1e-15);
    }

    #[test]
    fn canonical_commutators() {
        let s = FockSpace::new(2, 5).unwrap();
        let (a, adag) = ladder_ops(&s);
        for i in 0..2 {
            let comm = commutator(&a[i], &adag[i]);
            for r in 0..s.dim() {
                for col in 0..s.dim() {
                    let expect = if r == col && s.occupation(r, i) < s.cutoff() { ONE } else { ZERO };
                    if s.occupation(col, i) < s.cutoff() {
                        assert!((comm.get(r, col) - expect).norm() < 1e-14);
                    }
                }
            }
            for j in 0..2 {
                if i != j {
                    assert!(commutator(&a[i], &adag[j]).is_zero());
                }
            }
        }
    }

    #[test]
    fn quadratures_are_hermitian() {
        let s = FockSpace::new(3, 4).unwrap();
        let (q, p) = quadrature_ops(&s);
        for op in q.iter().chain(&p) {
            assert!(op.hermiticity_residual() < 1e-15);
        }
    }

    #[test]
    fn generator_examples() {
        let s = FockSpace::new(3, 6).unwrap();
        let a3 = CouplingMatrix::cyclic(3).unwrap();
        assert!(generator(&s, &a3, 0.0).unwrap().is_zero());
        let h = generator(&s, &a3, 0.2).unwrap();
        assert!(h.hermiticity_residual() < 1e-12);

        // n = 2: H = 2λ(Q₁P₂ + Q₂P₁)
        let s2 = FockSpace::new(2, 5).unwrap();
        let h2 = generator(&s2, &CouplingMatrix::cyclic(2).unwrap(), 0.3).unwrap();
        let (q, p) = quadrature_ops(&s2);
        let direct = q[0].mul(&p[1]).unwrap().add(&q[1].mul(&p[0]).unwrap()).unwrap().scale(c(0.6, 0.0));
        assert!(h2.sub(&direct).unwrap().max_abs_entry() < 1e-14);

        assert!(generator(&s2, &a3, 0.1).is_err());
    }

    #[test]
    fn vacuum_is_unchanged_at_zero_lambda() {
        let s = FockSpace::new(3, 4).unwrap();
        let h = generator(&s, &CouplingMatrix::cyclic(3).unwrap(), 0.0).unwrap();
        let psi = evolve_vacuum(&h).unwrap();
        assert!((overlap(&FockTensor::vacuum(s), &psi).unwrap() - ONE).norm() < 1e-14);
    }

    #[test]
    fn two_mode_evolution_matches_baseline() {
        let s = FockSpace::new(2, 20).unwrap();
        let h = generator(&s, &CouplingMatrix::cyclic(2).unwrap(), 0.2).unwrap();
        let evolved = evolve_vacuum(&h).unwrap();
        assert!((evolved.norm() - 1.0).abs() < 1e-10);
        let analytic = two_photon_expand(&baseline_two_mode(0.4).unwrap(), &s).unwrap();
        assert!(overlap(&evolved, &analytic).unwrap().norm() >= 0.999_999);
    }

    #[test]
    fn two_photon_expansion_examples() {
        let s = FockSpace::new(2, 10).unwrap();
        let vac_state = TwoPhotonState::new(DMatrix::zeros(2, 2), 1.0).unwrap();
        assert_eq!(two_photon_expand(&vac_state, &s).unwrap(), FockTensor::vacuum(s));

        let b = baseline_two_mode(0.4).unwrap();
        let psi = two_photon_expand(&b, &s).unwrap();
        for k in 0..=10 {
            let expect = (1.0 / 0.4f64.cosh()) * (-(0.4f64.tanh())).powi(k as i32);
            assert!((psi.amplitude(&[k, k]).unwrap() - c(expect, 0.0)).norm() < 1e-14);
        }
        assert!(psi.amplitude(&[1, 0]).unwrap() == ZERO);

        let s4 = FockSpace::new(4, 3).unwrap();
        let st = squeezed_vacuum(&SqueezeKernel::cyclic(4, 0.3).unwrap()).unwrap();
        let psi4 = two_photon_expand(&st, &s4).unwrap();
        let amp = psi4.amplitude(&[1, 1, 0, 0]).unwrap();
        assert!((amp.re + 0.226_514_265_764_093_06).abs() < 1e-12 && amp.im == 0.0);
        assert!(psi4.tail_mass() > 0.0 && psi4.tail_mass() < 1e-2);
    }

    #[test]
    fn two_photon_expansion_rejects_bad_input() {
        let s = FockSpace::new(2, 3).unwrap();
        let st = TwoPhotonState {
            n: 2,
            norm: 1.0,
            f: DMatrix::from_row_slice(2, 2, &[0.0, 0.1, 0.3, 0.0]),
        };
        assert!(matches!(two_photon_expand(&st, &s), Err(Error::ContractViolation(_))));
        let s3 = FockSpace::new(3, 3).unwrap();
        assert!(two_photon_expand(&baseline_two_mode(0.1).unwrap(), &s3).is_err());
    }

    #[test]
    fn vacuum_variances() {
        let psi = FockTensor::vacuum(FockSpace::new(3, 3).unwrap());
        assert!((variance_numeric(&psi, Quadrature::X1).unwrap() - 0.25).abs() < 1e-10);
        assert!((variance_numeric(&psi, Quadrature::X2).unwrap() - 0.25).abs() < 1e-10);
        let mut half = psi.clone();
        half.amps *= c(0.5, 0.0);
        assert!(variance_numeric(&half, Quadrature::X1).is_err());
    }

    #[test]
    fn evolved_variances() {
        let s = FockSpace::new(2, 20).unwrap();
        let h = generator(&s, &CouplingMatrix::cyclic(2).unwrap(), 0.2).unwrap();
        let psi = evolve_vacuum(&h).unwrap();
        let v1 = variance_numeric(&psi, Quadrature::X1).unwrap();
        assert!((v1 - (-0.8f64).exp() / 4.0).abs() < 2e-4, "{v1}");

        let s3 = FockSpace::new(3, 9).unwrap();
        let h3 = generator(&s3, &CouplingMatrix::cyclic(3).unwrap(), 0.15).unwrap();
        let psi3 = evolve_vacuum(&h3).unwrap();
        let v2 = variance_numeric(&psi3, Quadrature::X2).unwrap();
        assert!((v2 - 0.6f64.exp() / 4.0).abs() < 5e-3, "{v2}");
    }

    #[test]
    fn vacuum_wigner() {
        let s = FockSpace::new(2, 20).unwrap();
        let vac = FockTensor::vacuum(s);
        let w0 = wigner_numeric(&vac, &[ZERO, ZERO]).unwrap();
        assert!((w0 - PI.powi(-2)).abs() < 1e-14);
        let w = wigner_numeric(&vac, &[c(0.5, 0.0), ZERO]).unwrap();
        assert!((w - PI.powi(-2) * (-0.5f64).exp()).abs() < 1e-6);
        assert!(wigner_numeric(&vac, &[ZERO]).is_err());
    }

    #[test]
    fn wigner_rejects_large_displacement() {
        let vac = FockTensor::vacuum(FockSpace::new(2, 2).unwrap());
        assert!(matches!(
            wigner_numeric(&vac, &[c(1.5, 0.0), ZERO]),
            Err(Error::Truncation { .. })
        ));
    }

    #[test]
    fn squeezed_wigner_reference_point() {
        let s = FockSpace::new(3, 8).unwrap();
        let h = generator(&s, &CouplingMatrix::cyclic(3).unwrap(), 0.1).unwrap();
        let psi = evolve_vacuum(&h).unwrap();
        let w = wigner_numeric(&psi, &[c(0.5, 0.0), ZERO, ZERO]).unwrap();
        assert!((w - 0.019_144_546_955_626_2).abs() < 1e-3, "{w}");
    }

    #[test]
    fn overlap_properties() {
        let s = FockSpace::new(2, 3).unwrap();
        let vac = FockTensor::vacuum(s);
        assert_eq!(overlap(&vac, &vac).unwrap(), ONE);
        let x = FockTensor {
            space: s,
            amps: DVector::from_fn(s.dim(), |i, _| c(i as f64 * 0.1, 1.0 - i as f64 * 0.05)),
        };
        assert!((overlap(&x, &x).unwrap().re - x.norm_sqr()).abs() < 1e-12);
        let y = x.clone();
        let scaled = FockTensor { space: s, amps: &y.amps * c(0.0, 2.0) };
        // conjugate-linear in the first slot
        let lhs = overlap(&scaled, &x).unwrap();
        let rhs = c(0.0, -2.0) * overlap(&y, &x).unwrap();
        assert!((lhs - rhs).norm() < 1e-12);
        let other = FockTensor::vacuum(FockSpace::new(2, 4).unwrap());
        assert!(overlap(&vac, &other).is_err());
    }

    #[test]
    fn nilpotent_series_terminates() {
        let s = FockSpace::new(1, 4).unwrap();
        let (_, adag) = ladder_ops(&s);
        let e = nilpotent_exp(&adag[0]).unwrap();
        // ⟨k|exp(a†)|0⟩ = 1/√k!
        for k in 0..=4usize {
            let fact: f64 = (1..=k).map(|m| m as f64).product();
            assert!((e.get(k, 0).re - 1.0 / fact.sqrt()).abs() < 1e-14);
        }
    }
}
