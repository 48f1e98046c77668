//! Decoherence of multi-qubit entangled states.
//!
//! Each qubit of an `N`-qubit register is coupled to its own environment and
//! undergoes one of five local noise channels. The crate measures how the
//! multipartite entanglement (negativity averaged over every class of
//! bipartitions) decays with the noise strength `p`, searches for initial
//! states whose entanglement is most robust, and locates windows in which one
//! class of cuts has become PPT while another is still entangled.
//!
//! ```
//! use robust_entanglement::{channels::ChannelKind, entanglement::entanglement_profile, states};
//!
//! let ghz = states::make_ghz(4).unwrap();
//! let noisy = ChannelKind::PhaseDamping.at(0.2).unwrap().apply_all(&ghz.density_matrix());
//! let profile = entanglement_profile(&noisy, false).unwrap();
//! assert!(profile.global < 0.5);
//! ```

pub mod channels;
pub mod cli;
pub mod entanglement;
pub mod error;
pub mod experiments;
pub mod linalg;
pub mod optimizer;
pub mod states;

pub use error::{Error, Result};
