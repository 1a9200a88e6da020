//! Batch versions of the main operations.
//!
//! With the `parallel` feature (on by default) work is spread over the rayon
//! thread pool; without it, or with [`Execution::Sequential`], items are
//! processed in order on the calling thread. Results are always returned in
//! input order.

use crate::cutelim::{cut_eliminate, CutElimError};
use crate::nd::{normalize, Deduction, NdSystem, Normalization, NormalizeError};
use crate::search::{decide, DecideResult, SearchBudget, SearchError};
use crate::sequent::{check_sequent_proof, CalculusId, InvalidAt, Sequent, SequentProof};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential execution when built without `parallel`.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Apply `f` to every item, in parallel when requested and available.
pub fn map<T, U, F>(items: &[T], exec: Execution, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

pub fn decide_all(
    calc: CalculusId,
    goals: &[Sequent],
    budget: SearchBudget,
    exec: Execution,
) -> Vec<Result<DecideResult, SearchError>> {
    map(goals, exec, |g| decide(calc, g, budget))
}

pub fn check_all(calc: CalculusId, proofs: &[SequentProof], exec: Execution) -> Vec<Result<(), InvalidAt>> {
    map(proofs, exec, |p| check_sequent_proof(calc, p))
}

pub fn cut_eliminate_all(
    calc: CalculusId,
    proofs: &[SequentProof],
    exec: Execution,
) -> Vec<Result<SequentProof, CutElimError>> {
    map(proofs, exec, |p| cut_eliminate(calc, p))
}

pub fn normalize_all(
    system: NdSystem,
    deductions: &[Deduction],
    exec: Execution,
) -> Vec<Result<Normalization, NormalizeError>> {
    map(deductions, exec, |d| normalize(system, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_proof_with_cuts;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn modes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let proofs: Vec<_> = (0..24)
            .map(|_| random_proof_with_cuts(&mut rng, CalculusId::GLETJ, 3, 5))
            .collect();
        let a = cut_eliminate_all(CalculusId::GLETJ, &proofs, Execution::Sequential);
        let b = cut_eliminate_all(CalculusId::GLETJ, &proofs, Execution::Parallel);
        assert_eq!(
            a.into_iter().map(Result::unwrap).collect::<Vec<_>>(),
            b.into_iter().map(Result::unwrap).collect::<Vec<_>>()
        );
    }
}
