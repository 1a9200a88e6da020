use std::fmt;

use thiserror::Error;

use super::schema::{schema, Part, RuleSchema, SchemaError};
use super::{CalculusId, FormulaSet, RuleId, Sequent, SequentProof};
use crate::formula::Formula;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InvalidReason {
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error("rule {rule} takes {expected} premise(s), found {found}")]
    PremiseCount {
        rule: RuleId,
        expected: usize,
        found: usize,
    },
    #[error("sequent {0} has more than one succedent formula")]
    Arity(Sequent),
    #[error("sequent {0} leaves the language of the calculus")]
    Language(Sequent),
    #[error("{0}")]
    Mismatch(String),
}

/// First failing node in pre-order.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct InvalidAt {
    pub path: Vec<usize>,
    pub reason: InvalidReason,
}

impl fmt::Display for InvalidAt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "at root: {}", self.reason)
        } else {
            let p: Vec<String> = self.path.iter().map(|i| i.to_string()).collect();
            write!(f, "at node {}: {}", p.join("."), self.reason)
        }
    }
}

pub fn check_sequent_proof(calc: CalculusId, p: &SequentProof) -> Result<(), InvalidAt> {
    let mut path = Vec::new();
    go(calc, p, &mut path)
}

fn go(calc: CalculusId, p: &SequentProof, path: &mut Vec<usize>) -> Result<(), InvalidAt> {
    check_node(calc, p).map_err(|reason| InvalidAt {
        path: path.clone(),
        reason,
    })?;
    for (i, q) in p.premises.iter().enumerate() {
        path.push(i);
        go(calc, q, path)?;
        path.pop();
    }
    Ok(())
}

/// Validate one inference against its rule schema.
pub(crate) fn check_node(calc: CalculusId, p: &SequentProof) -> Result<(), InvalidReason> {
    let s = &p.sequent;
    for q in std::iter::once(s).chain(p.premises.iter().map(|q| &q.sequent)) {
        if !calc.respects_arity(q) {
            return Err(InvalidReason::Arity(q.clone()));
        }
        if !q.in_language(calc.language()) {
            return Err(InvalidReason::Language(q.clone()));
        }
    }
    if p.rule == RuleId::Mix {
        if !super::rule_admitted(calc, RuleId::Mix) {
            return Err(SchemaError::NotInCalculus {
                rule: RuleId::Mix,
                calc,
            }
            .into());
        }
        return check_mix(p);
    }
    let sch = schema(calc, p.rule, p.principal.as_ref())?;
    if sch.premises.len() != p.premises.len() {
        return Err(InvalidReason::PremiseCount {
            rule: p.rule,
            expected: sch.premises.len(),
            found: p.premises.len(),
        });
    }
    let seqs: Vec<&Sequent> = p.premises.iter().map(|q| &q.sequent).collect();
    match_schema(&sch, s, &seqs).map_err(InvalidReason::Mismatch)
}

fn set(v: &[Formula]) -> FormulaSet {
    v.iter().cloned().collect()
}

/// Match a conclusion and premises against a schema, choosing the least
/// contexts that could work. Any valid context contains the least one, so
/// failure here means no instantiation exists.
pub(crate) fn match_schema(
    sch: &RuleSchema,
    concl: &Sequent,
    prems: &[&Sequent],
) -> Result<(), String> {
    let parts: Vec<(&Part, &Sequent)> = std::iter::once((&sch.conclusion, concl))
        .chain(sch.premises.iter().zip(prems.iter().copied()))
        .collect();

    let mut gamma = FormulaSet::new();
    let mut delta = FormulaSet::new();
    for (part, seq) in &parts {
        let add_a = set(&part.ante);
        let add_s = set(&part.succ);
        if !add_a.is_subset(&seq.ante) {
            return Err(format!("antecedent of {seq} lacks the rule's formulas"));
        }
        if !add_s.is_subset(&seq.succ) {
            return Err(format!("succedent of {seq} lacks the rule's formulas"));
        }
        gamma.extend(seq.ante.difference(&add_a).cloned());
        if part.keep_succ {
            delta.extend(seq.succ.difference(&add_s).cloned());
        } else if seq.succ != add_s {
            return Err(format!("succedent of {seq} must be exactly the rule's formulas"));
        }
    }
    if !sch.ante_context && !gamma.is_empty() {
        return Err(format!("{concl} is not an axiom instance"));
    }
    for (part, seq) in &parts {
        if !gamma.is_subset(&seq.ante) {
            return Err(format!("antecedent of {seq} does not carry the shared context"));
        }
        if part.keep_succ && !delta.is_subset(&seq.succ) {
            return Err(format!("succedent of {seq} does not carry the shared context"));
        }
    }
    Ok(())
}

fn check_mix(p: &SequentProof) -> Result<(), InvalidReason> {
    let a = p
        .principal
        .as_ref()
        .ok_or(SchemaError::MissingPrincipal(RuleId::Mix))?;
    if p.premises.len() != 2 {
        return Err(InvalidReason::PremiseCount {
            rule: RuleId::Mix,
            expected: 2,
            found: p.premises.len(),
        });
    }
    let (l, r) = (&p.premises[0].sequent, &p.premises[1].sequent);
    if !l.succ.contains(a) || !r.ante.contains(a) {
        return Err(InvalidReason::Mismatch(format!(
            "mix formula {a} must occur in the left succedent and right antecedent"
        )));
    }
    let expected = mix_conclusion(l, r, a);
    if expected != p.sequent {
        return Err(InvalidReason::Mismatch(format!(
            "mix conclusion should be {expected}"
        )));
    }
    Ok(())
}

/// `G, (P - A) => (D - A), L` from `G => D` and `P => L`.
pub(crate) fn mix_conclusion(l: &Sequent, r: &Sequent, a: &Formula) -> Sequent {
    let mut ante = l.ante.clone();
    ante.extend(r.ante.iter().filter(|f| *f != a).cloned());
    let mut succ: FormulaSet = l.succ.iter().filter(|f| *f != a).cloned().collect();
    succ.extend(r.succ.iter().cloned());
    Sequent { ante, succ }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Language};

    fn f(s: &str) -> Formula {
        parse(s, Language::LJ).unwrap()
    }

    #[test]
    fn axioms() {
        let id = SequentProof::id(f("p"));
        assert!(check_sequent_proof(CalculusId::GLETJ, &id).is_ok());

        let exp = SequentProof::exp0(f("@p"), FormulaSet::new(), [f("q")].into()).unwrap();
        assert!(check_sequent_proof(CalculusId::GB, &exp).is_ok());
        let err = check_sequent_proof(CalculusId::GLETJ, &exp).unwrap_err();
        assert!(err.path.is_empty());
        assert!(matches!(
            err.reason,
            InvalidReason::Schema(SchemaError::NotInCalculus { .. })
        ));
    }

    #[test]
    fn id_has_no_context() {
        let mut bad = SequentProof::id(f("p"));
        bad.sequent.ante.insert(f("q"));
        assert!(check_sequent_proof(CalculusId::GLETJ, &bad).is_err());
    }

    #[test]
    fn retained_principal_is_accepted() {
        // p & q, p, q => p from p & q, p, q => p by LAnd
        let s = Sequent::new([f("p & q"), f("p"), f("q")], [f("p")]);
        let premise = SequentProof {
            sequent: s.clone(),
            rule: RuleId::LW,
            principal: Some(f("p & q")),
            premises: vec![SequentProof {
                sequent: Sequent::new([f("p"), f("q")], [f("p")]),
                rule: RuleId::LW,
                principal: Some(f("q")),
                premises: vec![SequentProof::id(f("p"))],
            }],
        };
        let node = SequentProof {
            sequent: s,
            rule: RuleId::LAnd,
            principal: Some(f("p & q")),
            premises: vec![premise],
        };
        assert!(check_sequent_proof(CalculusId::GLETJ, &node).is_ok());
    }

    #[test]
    fn reports_first_bad_node_in_preorder() {
        let leaf = SequentProof {
            sequent: Sequent::new([f("q")], [f("p")]),
            rule: RuleId::Id,
            principal: Some(f("p")),
            premises: vec![],
        };
        let node = SequentProof {
            sequent: Sequent::new([f("q")], [f("p | r")]),
            rule: RuleId::ROr1,
            principal: Some(f("p | r")),
            premises: vec![leaf],
        };
        let err = check_sequent_proof(CalculusId::GLETJ, &node).unwrap_err();
        assert_eq!(err.path, vec![0]);
    }
}
