//! Cut elimination for GLET_J and GLET_F.
//!
//! The work is done by a mix procedure that takes cut-free proofs of
//! `G => D` and `P => L` and a formula `A` and returns a cut-free proof of
//! `G, (P - A) => (D - A), L`. Recursion follows the usual double
//! induction: every recursive call has either a lighter mix formula or the
//! same formula and a smaller rank, and this is checked as the procedure
//! runs.

use thiserror::Error;

use crate::formula::{weight, Formula};
use crate::sequent::{
    check_sequent_proof, infer, weaken_to, BuildError, Calculus, CalculusId, InvalidAt, RuleId,
    Sequent, SequentProof,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CutElimError {
    #[error("cut elimination is not available for {0}")]
    Unsupported(CalculusId),
    #[error("invalid input proof {0}")]
    Invalid(#[from] InvalidAt),
    #[error("expected a proof whose only cut is its last inference")]
    NotSingleCut,
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error("no reduction applies to a mix on {0}")]
    Stuck(Formula),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankInfo {
    pub rank_left: usize,
    pub rank_right: usize,
    pub rank: usize,
    pub weight: usize,
}

/// Counters gathered while eliminating cuts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MixStats {
    pub calls: usize,
    /// Recursive calls whose (weight, rank) was not below their caller's.
    pub violations: usize,
    pub cuts_eliminated: usize,
}

impl MixStats {
    fn absorb(&mut self, other: MixStats) {
        self.calls += other.calls;
        self.violations += other.violations;
        self.cuts_eliminated += other.cuts_eliminated;
    }
}

/// Longest run of sequents, from the root upward, whose succedent
/// contains `a`.
pub fn rank_succ(p: &SequentProof, a: &Formula) -> usize {
    if !p.sequent.succ.contains(a) {
        return 0;
    }
    1 + p.premises.iter().map(|q| rank_succ(q, a)).max().unwrap_or(0)
}

/// As [`rank_succ`] for the antecedent.
pub fn rank_ante(p: &SequentProof, a: &Formula) -> usize {
    if !p.sequent.ante.contains(a) {
        return 0;
    }
    1 + p.premises.iter().map(|q| rank_ante(q, a)).max().unwrap_or(0)
}

fn cut_parts(p: &SequentProof) -> Result<(&SequentProof, &SequentProof, &Formula), CutElimError> {
    if !p.rule.is_cut() || p.premises.len() != 2 {
        return Err(CutElimError::NotSingleCut);
    }
    let a = p.principal.as_ref().ok_or(CutElimError::NotSingleCut)?;
    let (l, r) = (&p.premises[0], &p.premises[1]);
    if !l.is_cut_free() || !r.is_cut_free() {
        return Err(CutElimError::NotSingleCut);
    }
    Ok((l, r, a))
}

/// Rank and weight of a proof whose only cut is the last inference.
pub fn compute_rank(p: &SequentProof) -> Result<RankInfo, CutElimError> {
    let (l, r, a) = cut_parts(p)?;
    let rank_left = rank_succ(l, a);
    let rank_right = rank_ante(r, a);
    Ok(RankInfo {
        rank_left,
        rank_right,
        rank: rank_left + rank_right,
        weight: weight(a),
    })
}

/// Remove the last inference of `p`, a cut or mix with cut-free premises.
pub fn eliminate_single_cut(
    calc: CalculusId,
    p: &SequentProof,
) -> Result<(SequentProof, MixStats), CutElimError> {
    supported(calc)?;
    let (l, r, a) = cut_parts(p)?;
    let mut m = Mixer {
        calc,
        stats: MixStats::default(),
        stack: Vec::new(),
    };
    let q = m.mix(l, r, a)?;
    m.stats.cuts_eliminated = 1;
    Ok((weaken_to(q, &p.sequent, calc)?, m.stats))
}

/// Eliminate every cut, topmost first and left to right.
pub fn cut_eliminate(calc: CalculusId, p: &SequentProof) -> Result<SequentProof, CutElimError> {
    cut_eliminate_with_stats(calc, p).map(|(q, _)| q)
}

pub fn cut_eliminate_with_stats(
    calc: CalculusId,
    p: &SequentProof,
) -> Result<(SequentProof, MixStats), CutElimError> {
    supported(calc)?;
    check_sequent_proof(calc, p)?;
    let mut stats = MixStats::default();
    let q = eliminate(calc, p, &mut stats)?;
    Ok((q, stats))
}

fn supported(calc: CalculusId) -> Result<(), CutElimError> {
    if calc.calculus == Calculus::GB {
        return Err(CutElimError::Unsupported(calc));
    }
    Ok(())
}

fn eliminate(
    calc: CalculusId,
    p: &SequentProof,
    stats: &mut MixStats,
) -> Result<SequentProof, CutElimError> {
    if p.is_cut_free() {
        return Ok(p.clone());
    }
    let premises = p
        .premises
        .iter()
        .map(|q| eliminate(calc, q, stats))
        .collect::<Result<Vec<_>, _>>()?;
    let node = SequentProof {
        sequent: p.sequent.clone(),
        rule: p.rule,
        principal: p.principal.clone(),
        premises,
    };
    if !node.rule.is_cut() {
        return Ok(node);
    }
    let (q, s) = eliminate_single_cut(calc, &node)?;
    stats.absorb(s);
    Ok(q)
}

struct Mixer {
    calc: CalculusId,
    stats: MixStats,
    /// (weight, rank) of the calls in progress.
    stack: Vec<(usize, usize)>,
}

fn mix_target(l: &Sequent, r: &Sequent, a: &Formula) -> Sequent {
    let mut ante = l.ante.clone();
    ante.extend(r.ante.iter().filter(|f| *f != a).cloned());
    let mut succ: crate::sequent::FormulaSet = l.succ.iter().filter(|f| *f != a).cloned().collect();
    succ.extend(r.succ.iter().cloned());
    Sequent { ante, succ }
}

impl Mixer {
    fn mix(
        &mut self,
        l: &SequentProof,
        r: &SequentProof,
        a: &Formula,
    ) -> Result<SequentProof, CutElimError> {
        self.stats.calls += 1;
        let measure = (weight(a), rank_succ(l, a) + rank_ante(r, a));
        if let Some(parent) = self.stack.last() {
            if measure >= *parent {
                self.stats.violations += 1;
            }
        }
        self.stack.push(measure);
        let out = self.mix_inner(l, r, a);
        self.stack.pop();
        let q = out?;
        let target = mix_target(&l.sequent, &r.sequent, a);
        Ok(weaken_to(q, &target, self.calc)?)
    }

    fn mix_inner(
        &mut self,
        l: &SequentProof,
        r: &SequentProof,
        a: &Formula,
    ) -> Result<SequentProof, CutElimError> {
        let (ls, rs) = (&l.sequent, &r.sequent);
        // the mix formula is absent from one side, or already present in
        // the result through a context
        if !rs.ante.contains(a) || ls.ante.contains(a) {
            return Ok(r.clone());
        }
        if !ls.succ.contains(a) || rs.succ.contains(a) {
            return Ok(l.clone());
        }
        if r.premises.iter().any(|q| q.sequent.ante.contains(a)) {
            return self.reduce_right(l, r, a);
        }
        if l.premises.iter().any(|q| q.sequent.succ.contains(a)) {
            return self.reduce_left(l, r, a);
        }
        // rank 2: `a` is introduced by the last rule on both sides
        if l.rule == RuleId::RW {
            return Ok(l.premises[0].clone());
        }
        if r.rule == RuleId::LW {
            return Ok(r.premises[0].clone());
        }
        self.principal_case(l, r, a)
    }

    /// The right rank exceeds one: push the mix into the premises of the
    /// right proof that still contain the mix formula.
    fn reduce_right(
        &mut self,
        l: &SequentProof,
        r: &SequentProof,
        a: &Formula,
    ) -> Result<SequentProof, CutElimError> {
        if matches!(r.rule, RuleId::LW | RuleId::RW) {
            return self.mix(l, &r.premises[0], a);
        }
        let premises = r
            .premises
            .iter()
            .map(|q| {
                if q.sequent.ante.contains(a) {
                    self.mix(l, q, a)
                } else {
                    Ok(q.clone())
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        let below = infer(self.calc, r.rule, r.principal.clone(), premises)?;
        if below.sequent.ante.contains(a) {
            // the mix formula was principal here; it now has right rank one
            return self.mix(l, &below, a);
        }
        Ok(below)
    }

    /// Mirror image of [`Mixer::reduce_right`] on the left proof.
    fn reduce_left(
        &mut self,
        l: &SequentProof,
        r: &SequentProof,
        a: &Formula,
    ) -> Result<SequentProof, CutElimError> {
        if matches!(l.rule, RuleId::LW | RuleId::RW) {
            return self.mix(&l.premises[0], r, a);
        }
        let kept = premise_keeps_succ(self.calc, l);
        let premises = l
            .premises
            .iter()
            .zip(kept)
            .map(|(q, keep)| {
                if keep && q.sequent.succ.contains(a) {
                    self.mix(q, r, a)
                } else {
                    Ok(q.clone())
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        let below = infer(self.calc, l.rule, l.principal.clone(), premises)?;
        if below.sequent.succ.contains(a) {
            return self.mix(&below, r, a);
        }
        Ok(below)
    }

    fn principal_case(
        &mut self,
        l: &SequentProof,
        r: &SequentProof,
        a: &Formula,
    ) -> Result<SequentProof, CutElimError> {
        use RuleId::*;
        let stuck = || CutElimError::Stuck(a.clone());
        if l.principal.as_ref() != Some(a) || r.principal.as_ref() != Some(a) {
            return Err(stuck());
        }
        let comps = components(a);
        match (l.rule, r.rule) {
            // one premise on each side, up to two components
            (RAnd, LAnd) | (RNegOr, LNegOr) | (RNegTo, LNegTo) => {
                let x = self.mix(&l.premises[0], &r.premises[0], &comps[0])?;
                self.mix(&l.premises[1], &x, &comps[1])
            }
            (ROr1, LOr) | (RNegAnd1, LNegAnd) => {
                self.mix(&l.premises[0], &r.premises[0], &comps[0])
            }
            (ROr2, LOr) | (RNegAnd2, LNegAnd) => {
                self.mix(&l.premises[0], &r.premises[1], &comps[1])
            }
            (ROr, LOr) | (RNegAnd, LNegAnd) => {
                let x = self.mix(&l.premises[0], &r.premises[0], &comps[0])?;
                self.mix(&x, &r.premises[1], &comps[1])
            }
            (RTo, LTo) => {
                let x = self.mix(&r.premises[0], &l.premises[0], &comps[0])?;
                self.mix(&x, &r.premises[1], &comps[1])
            }
            (RNegNeg, LNegNeg) => self.mix(&l.premises[0], &r.premises[0], &comps[0]),
            (RNegCirc, LNegCirc) => {
                let up = match self.calc.negcirc {
                    crate::sequent::NegCircVariant::Corrected => comps[0].clone(),
                    crate::sequent::NegCircVariant::Printed => comps[1].clone(),
                };
                self.mix(&r.premises[0], &l.premises[0], &up)
            }
            _ => Err(stuck()),
        }
    }
}

/// Formulas a principal formula decomposes into, in premise order.
fn components(a: &Formula) -> Vec<Formula> {
    use Formula::*;
    let f = |x: &std::sync::Arc<Formula>| (**x).clone();
    match a {
        And(b, c) | Or(b, c) | Imp(b, c) => vec![f(b), f(c)],
        Neg(x) => match &**x {
            Neg(b) => vec![f(b)],
            Or(b, c) | And(b, c) => vec![f(b).neg(), f(c).neg()],
            Imp(b, c) => vec![f(b), f(c).neg()],
            // ~@B: the corrected premise formula, then the printed one
            Circ(b) => vec![(**x).clone(), f(b)],
            Atom(_) => vec![],
        },
        _ => vec![],
    }
}

/// Which premises of the last inference share the conclusion's succedent.
fn premise_keeps_succ(calc: CalculusId, p: &SequentProof) -> Vec<bool> {
    match crate::sequent::schema(calc, p.rule, p.principal.as_ref()) {
        Ok(s) => s.premises.iter().map(|q| q.keep_succ).collect(),
        Err(_) => vec![false; p.premises.len()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Language};
    use crate::search::verify_gsf_property;
    use crate::sequent::circ_conjunction_gletj_cut_free;

    fn f(s: &str) -> Formula {
        parse(s, Language::LJ).unwrap()
    }

    #[test]
    fn identity_on_the_left_is_absorbed() {
        let calc = CalculusId::GLETJ;
        let right = infer(
            calc,
            RuleId::RNegNeg,
            Some(f("~~p")),
            vec![SequentProof::id(f("p"))],
        )
        .unwrap();
        let cut = infer(calc, RuleId::Cut, Some(f("p")), vec![SequentProof::id(f("p")), right.clone()])
            .unwrap();
        let info = compute_rank(&cut).unwrap();
        assert_eq!(info.rank_left, 1);
        let (q, stats) = eliminate_single_cut(calc, &cut).unwrap();
        assert!(q.is_cut_free());
        assert_eq!(q.sequent, cut.sequent);
        assert_eq!(stats.violations, 0);
    }

    #[test]
    fn principal_neg_or() {
        let calc = CalculusId::GLETJ;
        // ~p, ~q => ~(p | q) against ~(p | q) => ~p
        let left = infer(
            calc,
            RuleId::RNegOr,
            Some(f("~(p | q)")),
            vec![SequentProof::id(f("~p")), SequentProof::id(f("~q"))],
        )
        .unwrap();
        let right = infer(
            calc,
            RuleId::LNegOr,
            Some(f("~(p | q)")),
            vec![weaken_to(
                SequentProof::id(f("~p")),
                &Sequent::new([f("~p"), f("~q")], [f("~p")]),
                calc,
            )
            .unwrap()],
        )
        .unwrap();
        let cut = infer(calc, RuleId::Mix, Some(f("~(p | q)")), vec![left, right]).unwrap();
        let info = compute_rank(&cut).unwrap();
        assert_eq!(info.rank, 2);
        let (q, stats) = eliminate_single_cut(calc, &cut).unwrap();
        assert!(check_sequent_proof(calc, &q).is_ok());
        assert!(q.is_cut_free());
        assert!(verify_gsf_property(&q).is_ok());
        assert_eq!(stats.violations, 0);
    }

    #[test]
    fn cut_free_input_unchanged() {
        let p = circ_conjunction_gletj_cut_free();
        assert_eq!(cut_eliminate(CalculusId::GLETJ, &p).unwrap(), p);
    }

    #[test]
    fn gb_is_rejected() {
        let p = SequentProof::id(f("p"));
        assert!(matches!(
            cut_eliminate(CalculusId::GB, &p),
            Err(CutElimError::Unsupported(_))
        ));
    }
}
