//! Cyclic n-mode squeezing operators `S_n = exp[iλ Σ_ij A_ij Q_i P_j]`.
//!
//! * [`coupling`]: the cyclic coupling matrix and the derived kernel matrices.
//! * [`gaussian`]: Heisenberg transforms, collective variances, Wigner function.
//! * [`normalform`]: normal-ordered factorization and the squeezed vacuum.
//! * [`fock`]: an independent brute-force check in a truncated Fock space.
//! * [`verify`]: the cross-check suite tying the above together.

pub mod coupling;
pub mod error;
pub mod fock;
pub mod gaussian;
pub mod linalg;
pub mod normalform;
pub mod verify;

pub use coupling::{CouplingMatrix, SqueezeKernel};
pub use error::{Error, Result};
pub use gaussian::{GaussianWigner, PhasePoint, VariancePair};
pub use normalform::{NormalOrderedForm, TwoPhotonState};
