//! Forward construction of proofs.

use thiserror::Error;

use super::check::{check_node, mix_conclusion, InvalidReason};
use super::schema::{schema, SchemaError};
use super::{CalculusId, FormulaSet, RuleId, Sequent, SequentProof};
use crate::formula::Formula;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error("rule {rule} takes {expected} premise(s), got {found}")]
    PremiseCount {
        rule: RuleId,
        expected: usize,
        found: usize,
    },
    #[error("premise {index} of {rule} does not fit: {reason}")]
    BadPremise {
        rule: RuleId,
        index: usize,
        reason: String,
    },
    #[error("cannot weaken {have} to {want}")]
    NotSubsequent { have: Sequent, want: Sequent },
    #[error("built an invalid node: {0}")]
    Invalid(#[from] InvalidReason),
}

/// Apply `rule` below `premises`, weakening the premises so that they share
/// one context. The conclusion is the least sequent the schema allows.
pub fn infer(
    calc: CalculusId,
    rule: RuleId,
    principal: Option<Formula>,
    premises: Vec<SequentProof>,
) -> Result<SequentProof, BuildError> {
    if rule == RuleId::Mix {
        return infer_mix(calc, principal, premises);
    }
    let sch = schema(calc, rule, principal.as_ref())?;
    if sch.premises.len() != premises.len() {
        return Err(BuildError::PremiseCount {
            rule,
            expected: sch.premises.len(),
            found: premises.len(),
        });
    }
    let mut gamma = FormulaSet::new();
    let mut delta = FormulaSet::new();
    for (i, (part, q)) in sch.premises.iter().zip(&premises).enumerate() {
        let add_a: FormulaSet = part.ante.iter().cloned().collect();
        let add_s: FormulaSet = part.succ.iter().cloned().collect();
        gamma.extend(q.sequent.ante.difference(&add_a).cloned());
        let rest: FormulaSet = q.sequent.succ.difference(&add_s).cloned().collect();
        if part.keep_succ {
            delta.extend(rest);
        } else if !rest.is_empty() {
            return Err(BuildError::BadPremise {
                rule,
                index: i,
                reason: format!("succedent of {} has extra formulas", q.sequent),
            });
        }
    }
    let side = |v: &[Formula], ctx: &FormulaSet, keep: bool| -> FormulaSet {
        let mut out: FormulaSet = v.iter().cloned().collect();
        if keep {
            out.extend(ctx.iter().cloned());
        }
        out
    };
    let mut out_premises = Vec::with_capacity(premises.len());
    for (part, q) in sch.premises.iter().zip(premises) {
        let target = Sequent {
            ante: side(&part.ante, &gamma, true),
            succ: side(&part.succ, &delta, part.keep_succ),
        };
        out_premises.push(weaken_to(q, &target, calc)?);
    }
    let c = &sch.conclusion;
    let sequent = Sequent {
        ante: side(&c.ante, &gamma, sch.ante_context),
        succ: side(&c.succ, &delta, c.keep_succ),
    };
    let node = SequentProof {
        sequent,
        rule,
        principal,
        premises: out_premises,
    };
    check_node(calc, &node)?;
    Ok(node)
}

fn infer_mix(
    calc: CalculusId,
    principal: Option<Formula>,
    premises: Vec<SequentProof>,
) -> Result<SequentProof, BuildError> {
    let a = principal.ok_or(SchemaError::MissingPrincipal(RuleId::Mix))?;
    let [l, r]: [SequentProof; 2] =
        premises
            .try_into()
            .map_err(|v: Vec<SequentProof>| BuildError::PremiseCount {
                rule: RuleId::Mix,
                expected: 2,
                found: v.len(),
            })?;
    let sequent = mix_conclusion(&l.sequent, &r.sequent, &a);
    let node = SequentProof {
        sequent,
        rule: RuleId::Mix,
        principal: Some(a),
        premises: vec![l, r],
    };
    check_node(calc, &node)?;
    Ok(node)
}

/// Extend `p` by weakenings until it ends in `target`: left weakenings
/// first, then right weakenings, each in formula order.
pub fn weaken_to(
    p: SequentProof,
    target: &Sequent,
    calc: CalculusId,
) -> Result<SequentProof, BuildError> {
    if !p.sequent.is_subsequent_of(target) || !calc.respects_arity(target) {
        return Err(BuildError::NotSubsequent {
            have: p.sequent.clone(),
            want: target.clone(),
        });
    }
    let extra_a: Vec<Formula> = target.ante.difference(&p.sequent.ante).cloned().collect();
    let extra_s: Vec<Formula> = target.succ.difference(&p.sequent.succ).cloned().collect();
    let mut cur = p;
    for f in extra_a {
        let mut sequent = cur.sequent.clone();
        sequent.ante.insert(f.clone());
        cur = SequentProof {
            sequent,
            rule: RuleId::LW,
            principal: Some(f),
            premises: vec![cur],
        };
    }
    for f in extra_s {
        let mut sequent = cur.sequent.clone();
        sequent.succ.insert(f.clone());
        cur = SequentProof {
            sequent,
            rule: RuleId::RW,
            principal: Some(f),
            premises: vec![cur],
        };
    }
    Ok(cur)
}

/// Cut with the cut formula read off the left premise's succedent.
pub(crate) fn cut_on(
    calc: CalculusId,
    a: Formula,
    left: SequentProof,
    right: SequentProof,
) -> Result<SequentProof, BuildError> {
    infer(calc, RuleId::Cut, Some(a), vec![left, right])
}

#[cfg(test)]
mod tests {
    use super::super::check_sequent_proof;
    use super::*;
    use crate::formula::{parse, Language};

    fn f(s: &str) -> Formula {
        parse(s, Language::LJ).unwrap()
    }

    #[test]
    fn merges_contexts() {
        let l = SequentProof::id(f("p"));
        let r = SequentProof::id(f("q"));
        let p = infer(CalculusId::GLETJ, RuleId::RAnd, Some(f("p & q")), vec![l, r]).unwrap();
        assert_eq!(p.sequent, Sequent::new([f("p"), f("q")], [f("p & q")]));
        assert!(check_sequent_proof(CalculusId::GLETJ, &p).is_ok());
    }

    #[test]
    fn single_conclusion_exp1_weakens_right() {
        // p => p and ~p => ~p give @p, p, ~p =>
        let p = infer(
            CalculusId::GLETJ,
            RuleId::Exp1,
            Some(f("@p")),
            vec![SequentProof::id(f("p")), SequentProof::id(f("~p"))],
        )
        .unwrap();
        assert_eq!(p.sequent, Sequent::new([f("@p"), f("p"), f("~p")], []));
        assert!(check_sequent_proof(CalculusId::GLETJ, &p).is_ok());
    }

    #[test]
    fn left_rule_fills_empty_succedent() {
        // q => q and @p, p, ~p => (from EXP1) merged by LOr get an RW
        let e = infer(
            CalculusId::GLETJ,
            RuleId::Exp1,
            Some(f("@p")),
            vec![SequentProof::id(f("p")), SequentProof::id(f("~p"))],
        )
        .unwrap();
        let q = SequentProof::id(f("q"));
        let l = weaken_to(
            e.clone(),
            &Sequent::new([f("@p"), f("p"), f("~p")], []),
            CalculusId::GLETJ,
        )
        .unwrap();
        let p = infer(
            CalculusId::GLETJ,
            RuleId::LOr,
            Some(f("~p | q")),
            vec![l, q],
        );
        assert!(p.is_ok(), "{p:?}");
        assert!(check_sequent_proof(CalculusId::GLETJ, &p.unwrap()).is_ok());
    }

    #[test]
    fn weaken_rejects_non_subsequent() {
        let p = SequentProof::id(f("p"));
        let t = Sequent::new([f("q")], [f("p")]);
        assert!(weaken_to(p, &t, CalculusId::GLETJ).is_err());
    }
}
