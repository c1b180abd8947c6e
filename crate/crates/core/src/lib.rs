//! Vacuum relative entropy of coherent states of the free scalar field on the
//! Rindler wedge, by a closed-form position-space route and a momentum-space
//! route, with finite-dimensional modular-theory and Fock-space oracles.

pub mod charges;
pub mod cli;
pub mod entropy;
pub mod error;
pub mod fock;
pub mod modular;
pub mod momentum;
pub mod special;

pub use charges::{Component, GaussianTerm, TimeZeroCharge, TruncationMode};
pub use entropy::{EntropyReport, Route};
pub use error::{Error, Result};
pub use momentum::{MomentumGrid, OnShellData};
