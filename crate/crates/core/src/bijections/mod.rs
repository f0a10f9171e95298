//! Bijections between restricted 132-avoiding permutations and lattice paths.
//!
//! * [`phi`]: the standard map `S_n(132) -> Dyck(n)`, read left to right.
//!   Restricted to `S_n(132, ^12...(p+1))` it hits exactly the paths with no
//!   peak at height `p`.
//! * [`theta`]: the max-split recursion producing an indexed Dyck path.
//!   Restricted to `S_n(132, (p-1)...2^1p)` it hits exactly the paths with no
//!   factor `u d^(p-2) u`.
//! * [`simion_schmidt`]: `S_n(132) -> S_n(123)`, fixing left-to-right minima.
//! * [`psi`]: Motzkin paths of length `n` onto `S_{n+1}(132, 2^13)`.

mod phi;
mod psi;
mod simion_schmidt;
mod theta;

pub use phi::{phi, phi_inverse, phi_recursive, right_greater_counts};
pub use psi::{psi, psi_inverse, GeometricRepresentation};
pub use simion_schmidt::{simion_schmidt, simion_schmidt_inverse};
pub use theta::{label_dyck, theta, theta_inverse, IndexedDyckPath};

use crate::error::{Error, Result};
use crate::pattern::contains_slice;
use crate::perm::Permutation;

pub(crate) fn require_avoids(pi: &Permutation, tau: &[u32], map: &'static str) -> Result<()> {
    if contains_slice(pi.as_slice(), tau) {
        let name: String = tau.iter().map(|v| v.to_string()).collect();
        return Err(Error::domain(map, format!("{pi} contains {name}")));
    }
    Ok(())
}
