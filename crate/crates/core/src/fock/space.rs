use crate::error::{Error, Result};

/// Largest basis accepted by [`FockSpace::new`].
pub const MAX_DIM: usize = 200_000;

/// Product Fock basis with a per-mode photon cutoff (inclusive).
///
/// Flat indices are row-major in the occupations, mode 0 most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockSpace {
    n: usize,
    cutoff: usize,
    dim: usize,
}

impl FockSpace {
    pub fn new(n: usize, cutoff: usize) -> Result<Self> {
        Self::with_limit(n, cutoff, MAX_DIM)
    }

    pub(crate) fn with_limit(n: usize, cutoff: usize, limit: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedModeCount { n, min: 1 });
        }
        let base = cutoff + 1;
        let mut dim: usize = 1;
        for _ in 0..n {
            dim = dim.checked_mul(base).filter(|&d| d <= limit).ok_or(Error::ResourceLimit {
                dim: base.saturating_pow(n as u32),
                limit,
            })?;
        }
        Ok(Self { n, cutoff, dim })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub(crate) fn base(&self) -> usize {
        self.cutoff + 1
    }

    /// Flat-index step for one photon in `mode`.
    pub(crate) fn stride(&self, mode: usize) -> usize {
        self.base().pow((self.n - 1 - mode) as u32)
    }

    pub fn index(&self, occupations: &[usize]) -> Result<usize> {
        if occupations.len() != self.n {
            return Err(Error::Shape {
                expected: self.n,
                got: occupations.len(),
            });
        }
        if let Some(&bad) = occupations.iter().find(|&&k| k > self.cutoff) {
            return Err(Error::ContractViolation(format!(
                "occupation {bad} exceeds cutoff {}",
                self.cutoff
            )));
        }
        Ok(occupations.iter().fold(0, |acc, &k| acc * self.base() + k))
    }

    pub fn occupations(&self, index: usize) -> Vec<usize> {
        let mut occ = vec![0; self.n];
        let mut rest = index;
        for slot in occ.iter_mut().rev() {
            *slot = rest % self.base();
            rest /= self.base();
        }
        occ
    }

    pub(crate) fn occupation(&self, index: usize, mode: usize) -> usize {
        (index / self.stride(mode)) % self.base()
    }

    pub fn total_photons(&self, index: usize) -> usize {
        self.occupations(index).iter().sum()
    }
}
