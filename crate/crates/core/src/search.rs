//! Terminating cut-free backward proof search.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::formula::{gsf_closure, Formula};
use crate::sequent::{
    rule_instances_backward, weaken_to, BackwardInstance, Calculus, CalculusId, RuleId, Sequent,
    SequentProof,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_visited_sequents: usize,
    pub wall_time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_visited_sequents: 200_000,
            wall_time_limit: Duration::from_secs(10),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Distinct sequents entered.
    pub visited: usize,
    /// Rule instances tried.
    pub expansions: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub enum DecideResult {
    Provable {
        proof: SequentProof,
        stats: SearchStats,
    },
    Unprovable {
        /// Sequents refuted by the search, the goal among them.
        saturation: BTreeSet<Sequent>,
        stats: SearchStats,
    },
    BudgetExceeded {
        stats: SearchStats,
    },
}

impl DecideResult {
    pub fn is_provable(&self) -> bool {
        matches!(self, DecideResult::Provable { .. })
    }

    pub fn stats(&self) -> SearchStats {
        match self {
            DecideResult::Provable { stats, .. }
            | DecideResult::Unprovable { stats, .. }
            | DecideResult::BudgetExceeded { stats } => *stats,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("goal {0} has more than one succedent formula")]
    Arity(Sequent),
    #[error("goal {0} is outside the language of {1}")]
    Language(Sequent, CalculusId),
}

enum Entry {
    OnStack(usize),
    Proved(BackwardInstance),
    Failed,
}

enum Outcome {
    Proved,
    /// `low` is the shallowest stack depth the failure depended on.
    Failed { low: usize },
}

struct OutOfBudget;

struct Search {
    calc: CalculusId,
    budget: SearchBudget,
    start: Instant,
    memo: HashMap<Sequent, Entry>,
    seen: HashSet<Sequent>,
    entries: usize,
    expansions: usize,
}

// Each level of the search recursion is a few hundred bytes; goals built
// from large formulas can nest deep enough to need more than a default
// thread stack.
const SEARCH_STACK: usize = 256 << 20;

/// Decide cut-free provability of `goal`.
///
/// Search is deterministic: rule instances are tried in the fixed order of
/// [`rule_instances_backward`] and the first proof found is kept.
pub fn decide(
    calc: CalculusId,
    goal: &Sequent,
    budget: SearchBudget,
) -> Result<DecideResult, SearchError> {
    if !calc.respects_arity(goal) {
        return Err(SearchError::Arity(goal.clone()));
    }
    if !goal.in_language(calc.language()) {
        return Err(SearchError::Language(goal.clone(), calc));
    }
    let goal = goal.clone();
    let run = move || decide_inner(calc, goal, budget);
    let result = std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size(SEARCH_STACK)
            .spawn_scoped(s, run)
            .expect("spawning search thread")
            .join()
            .expect("search thread panicked")
    });
    Ok(result)
}

fn decide_inner(calc: CalculusId, goal: Sequent, budget: SearchBudget) -> DecideResult {
    let mut search = Search {
        calc,
        budget,
        start: Instant::now(),
        memo: HashMap::new(),
        seen: HashSet::new(),
        entries: 0,
        expansions: 0,
    };
    let outcome = search.prove(&goal, 0);
    let stats = SearchStats {
        visited: search.seen.len(),
        expansions: search.expansions,
        elapsed: search.start.elapsed(),
    };
    match outcome {
        Err(OutOfBudget) => DecideResult::BudgetExceeded { stats },
        Ok(Outcome::Proved) => DecideResult::Provable {
            proof: search.reconstruct(&goal),
            stats,
        },
        Ok(Outcome::Failed { .. }) => DecideResult::Unprovable {
            saturation: search.saturation(),
            stats,
        },
    }
}

impl Search {
    fn prove(&mut self, s: &Sequent, depth: usize) -> Result<Outcome, OutOfBudget> {
        match self.memo.get(s) {
            Some(Entry::Proved(_)) => return Ok(Outcome::Proved),
            Some(Entry::Failed) => return Ok(Outcome::Failed { low: usize::MAX }),
            Some(Entry::OnStack(d)) => return Ok(Outcome::Failed { low: *d }),
            None => {}
        }
        if !self.seen.contains(s) {
            self.seen.insert(s.clone());
        }
        self.entries += 1;
        if self.seen.len() > self.budget.max_visited_sequents
            || (self.entries.is_multiple_of(256) && self.start.elapsed() > self.budget.wall_time_limit)
        {
            return Err(OutOfBudget);
        }
        self.memo.insert(s.clone(), Entry::OnStack(depth));
        let mut low = usize::MAX;
        for inst in rule_instances_backward(self.calc, s) {
            self.expansions += 1;
            let mut closed = true;
            for prem in &inst.premises {
                match self.prove(prem, depth + 1)? {
                    Outcome::Proved => {}
                    Outcome::Failed { low: l } => {
                        low = low.min(l);
                        closed = false;
                        break;
                    }
                }
            }
            if closed {
                self.memo.insert(s.clone(), Entry::Proved(inst));
                return Ok(Outcome::Proved);
            }
        }
        if low >= depth {
            self.memo.insert(s.clone(), Entry::Failed);
        } else {
            // the refutation assumed an ancestor fails; allow re-exploration
            self.memo.remove(s);
        }
        Ok(Outcome::Failed { low })
    }

    /// The largest set of visited, unproved sequents in which every rule
    /// instance has a premise from the set.
    fn saturation(&self) -> BTreeSet<Sequent> {
        let mut sat: BTreeSet<Sequent> = self
            .seen
            .iter()
            .filter(|s| !matches!(self.memo.get(*s), Some(Entry::Proved(_))))
            .cloned()
            .collect();
        let instances: HashMap<Sequent, Vec<BackwardInstance>> = sat
            .iter()
            .map(|s| (s.clone(), rule_instances_backward(self.calc, s)))
            .collect();
        loop {
            let open: Vec<Sequent> = sat
                .iter()
                .filter(|s| {
                    instances[*s]
                        .iter()
                        .any(|i| i.premises.iter().all(|p| !sat.contains(p)))
                })
                .cloned()
                .collect();
            if open.is_empty() {
                return sat;
            }
            for s in open {
                sat.remove(&s);
            }
        }
    }

    fn reconstruct(&self, s: &Sequent) -> SequentProof {
        let Some(Entry::Proved(inst)) = self.memo.get(s) else {
            unreachable!("reconstructing an unproved sequent");
        };
        let principal = inst.principal.clone();
        match inst.rule {
            RuleId::Id => {
                let a = principal.expect("closure formula");
                weaken_to(SequentProof::id(a), s, self.calc).expect("closure weakening")
            }
            RuleId::Exp0 => {
                let circ = principal.expect("closure formula");
                SequentProof::exp0(circ, s.ante.clone(), s.succ.clone()).expect("EXP0 closure")
            }
            RuleId::RW => {
                let below = self.reconstruct(&inst.premises[0]);
                weaken_to(below, s, self.calc).expect("succedent weakening")
            }
            rule => SequentProof {
                sequent: s.clone(),
                rule,
                principal,
                premises: inst.premises.iter().map(|p| self.reconstruct(p)).collect(),
            },
        }
    }
}

/// Upper bound on distinct sequents a search over `goal` can visit:
/// `|P(G)| * (|G| + 1)` for single-conclusion calculi and `|P(G)|^2` for
/// GLET_F, where `G` is the generalized-subformula closure of the goal.
pub fn visited_bound(calc: CalculusId, goal: &Sequent) -> f64 {
    let g = gsf_closure(goal.formulas()).len() as f64;
    let subsets = g.exp2();
    match calc.calculus {
        Calculus::GLETF => subsets * subsets,
        _ => subsets * (g + 1.0),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GsfError {
    #[error("proof uses {rule} at node {path:?}")]
    HasCut { path: Vec<usize>, rule: RuleId },
    #[error("formula {formula} at node {path:?} is not a generalized subformula of the end sequent")]
    CounterexampleAt { path: Vec<usize>, formula: Formula },
}

/// Check that every formula of a cut-free proof is a generalized
/// subformula of its end sequent.
pub fn verify_gsf_property(p: &SequentProof) -> Result<(), GsfError> {
    let closure = gsf_closure(p.sequent.formulas());
    let mut err = None;
    p.visit(&mut |path, node| {
        if err.is_some() {
            return;
        }
        if node.rule.is_cut() {
            err = Some(GsfError::HasCut {
                path: path.to_vec(),
                rule: node.rule,
            });
            return;
        }
        let stray = node
            .sequent
            .formulas()
            .chain(node.principal.iter())
            .find(|f| !closure.contains(*f));
        if let Some(f) = stray {
            err = Some(GsfError::CounterexampleAt {
                path: path.to_vec(),
                formula: f.clone(),
            });
        }
    });
    err.map_or(Ok(()), Err)
}

pub fn is_cut_free(p: &SequentProof) -> bool {
    p.is_cut_free()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Language};
    use crate::sequent::check_sequent_proof;

    fn seq(ante: &[&str], succ: &[&str], lang: Language) -> Sequent {
        Sequent::new(
            ante.iter().map(|s| parse(s, lang).unwrap()),
            succ.iter().map(|s| parse(s, lang).unwrap()),
        )
    }

    fn verdict(calc: CalculusId, s: &Sequent) -> DecideResult {
        decide(calc, s, SearchBudget::default()).unwrap()
    }

    #[test]
    fn small_verdicts() {
        let lj = Language::LJ;
        let proved = verdict(CalculusId::GLETJ, &seq(&["@p", "p", "~p"], &["q"], lj));
        let DecideResult::Provable { proof, .. } = proved else {
            panic!("expected provable");
        };
        assert!(check_sequent_proof(CalculusId::GLETJ, &proof).is_ok());
        assert!(verify_gsf_property(&proof).is_ok());

        let refuted = verdict(CalculusId::GLETJ, &seq(&["p", "~p"], &["q"], lj));
        let DecideResult::Unprovable { saturation, .. } = refuted else {
            panic!("expected unprovable");
        };
        assert!(saturation.contains(&seq(&["p", "~p"], &["q"], lj)));
    }

    #[test]
    fn stray_formula_is_reported() {
        let p = parse("p", Language::LJ).unwrap();
        let r = parse("r", Language::LJ).unwrap();
        let inner = weaken_to(
            SequentProof::id(p.clone()),
            &Sequent::new([p.clone(), r], [p.clone()]),
            CalculusId::GLETJ,
        )
        .unwrap();
        // pretend the weakened sequent is the whole thing, then wrap it
        let outer = SequentProof {
            sequent: Sequent::new([p.clone()], [p]),
            rule: RuleId::LW,
            principal: None,
            premises: vec![inner],
        };
        assert!(matches!(
            verify_gsf_property(&outer),
            Err(GsfError::CounterexampleAt { .. })
        ));
    }

    #[test]
    fn arity_is_checked() {
        let s = seq(&[], &["p", "q"], Language::LJ);
        assert!(decide(CalculusId::GLETJ, &s, SearchBudget::default()).is_err());
    }
}
