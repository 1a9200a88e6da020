//! Proof theory for the logics of evidence and truth LET_J and LET_F.

pub mod formula;
pub mod sequent;
pub mod search;
pub mod cutelim;
pub mod generate;
pub mod nd;
pub mod translate;
pub mod interchange;
pub mod display;
pub mod batch;
