//! Translations between natural deductions and sequent proofs, and the
//! port of GB proofs to GLET_J.

mod port;
mod to_nd;
mod to_sequent;

use thiserror::Error;

use crate::nd::NdInvalidAt;
use crate::sequent::{BuildError, InvalidAt};

pub use port::port_gb_to_gletj;
pub use to_nd::{disjunction, sequent_to_nd};
pub use to_sequent::{nd_calculus, nd_to_sequent};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error(transparent)]
    Deduction(#[from] NdInvalidAt),
    #[error(transparent)]
    Proof(#[from] InvalidAt),
    #[error("building the translated proof failed: {0}")]
    Build(#[from] BuildError),
    #[error("{0}")]
    Unsupported(String),
}
