//! Backward rule application for cut-free search.

use super::schema::{rule_admitted, schema, Part};
use super::{Calculus, CalculusId, FormulaSet, RuleId, Sequent};
use crate::formula::Formula;

/// One way of concluding a sequent. Zero premises means a closed leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BackwardInstance {
    pub rule: RuleId,
    pub principal: Option<Formula>,
    pub premises: Vec<Sequent>,
}

impl BackwardInstance {
    /// The premises without the principal formula in their context. Search
    /// keeps it there, so that contraction never has to be applied.
    pub fn displayed_premises(&self) -> Vec<Sequent> {
        let Some(f) = &self.principal else {
            return self.premises.clone();
        };
        self.premises
            .iter()
            .map(|p| {
                let mut q = p.clone();
                if self.rule.is_left() {
                    q.ante.remove(f);
                } else if self.rule.is_right() {
                    q.succ.remove(f);
                }
                q
            })
            .collect()
    }
}

const LEFT_RULES: [RuleId; 10] = [
    RuleId::LAnd,
    RuleId::LOr,
    RuleId::LNegOr,
    RuleId::LTo,
    RuleId::LNegTo,
    RuleId::LNegAnd,
    RuleId::LNegNeg,
    RuleId::Exp1,
    RuleId::Pem,
    RuleId::LNegCirc,
];

const RIGHT_RULES: [RuleId; 12] = [
    RuleId::RAnd,
    RuleId::ROr1,
    RuleId::ROr2,
    RuleId::ROr,
    RuleId::RNegOr,
    RuleId::RTo,
    RuleId::RNegTo,
    RuleId::RNegAnd1,
    RuleId::RNegAnd2,
    RuleId::RNegAnd,
    RuleId::RNegNeg,
    RuleId::RNegCirc,
];

/// Every cut-free rule instance concluding `s`.
///
/// Premises keep the principal formula (contraction is absorbed), the
/// axioms are generalized to `G, A => A, D` and, in GB, `@A, A, ~A, G => D`,
/// and weakening is never applied backward except for dropping the
/// succedent in GLET_J when the antecedent contains some `@A`. Instances
/// with a premise equal to `s` are omitted. Order is deterministic:
/// closures, then left rules by antecedent formula, then right rules, then
/// the succedent drop.
pub fn rule_instances_backward(calc: CalculusId, s: &Sequent) -> Vec<BackwardInstance> {
    let mut out = Vec::new();
    if let Some(a) = s.ante.intersection(&s.succ).next() {
        out.push(BackwardInstance {
            rule: RuleId::Id,
            principal: Some(a.clone()),
            premises: vec![],
        });
    }
    if calc.calculus == Calculus::GB {
        for f in &s.ante {
            if let Formula::Circ(a) = f {
                if s.ante.contains(&**a) && s.ante.contains(&(**a).clone().neg()) {
                    out.push(BackwardInstance {
                        rule: RuleId::Exp0,
                        principal: Some(f.clone()),
                        premises: vec![],
                    });
                    break;
                }
            }
        }
    }
    for f in &s.ante {
        for rule in LEFT_RULES {
            push_instance(calc, s, rule, f, &mut out);
        }
    }
    for f in &s.succ {
        for rule in RIGHT_RULES {
            push_instance(calc, s, rule, f, &mut out);
        }
    }
    if calc.calculus == Calculus::GLETJ
        && !s.succ.is_empty()
        && s.ante.iter().any(|f| matches!(f, Formula::Circ(_)))
    {
        out.push(BackwardInstance {
            rule: RuleId::RW,
            principal: s.succ.iter().next().cloned(),
            premises: vec![Sequent {
                ante: s.ante.clone(),
                succ: FormulaSet::new(),
            }],
        });
    }
    out
}

fn push_instance(
    calc: CalculusId,
    s: &Sequent,
    rule: RuleId,
    f: &Formula,
    out: &mut Vec<BackwardInstance>,
) {
    if !rule_admitted(calc, rule) {
        return;
    }
    let Ok(sch) = schema(calc, rule, Some(f)) else {
        return;
    };
    // the conclusion part must fit the sequent as it stands
    let c = &sch.conclusion;
    if !c.keep_succ {
        let want: FormulaSet = c.succ.iter().cloned().collect();
        if s.succ != want {
            return;
        }
    }
    let premises: Vec<Sequent> = sch.premises.iter().map(|p| premise(s, p)).collect();
    if premises.iter().any(|p| p == s || !calc.respects_arity(p)) {
        return;
    }
    out.push(BackwardInstance {
        rule,
        principal: Some(f.clone()),
        premises,
    });
}

fn premise(s: &Sequent, part: &Part) -> Sequent {
    let mut ante = s.ante.clone();
    ante.extend(part.ante.iter().cloned());
    let mut succ: FormulaSet = part.succ.iter().cloned().collect();
    if part.keep_succ {
        succ.extend(s.succ.iter().cloned());
    }
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
    fn exp1_instance() {
        let s = Sequent::new([f("@p"), f("q")], []);
        let inst = rule_instances_backward(CalculusId::GLETJ, &s);
        let e = inst.iter().find(|i| i.rule == RuleId::Exp1).unwrap();
        assert_eq!(
            e.premises,
            vec![
                Sequent::new([f("@p"), f("q")], [f("p")]),
                Sequent::new([f("@p"), f("q")], [f("~p")])
            ]
        );
    }

    #[test]
    fn letf_has_both_circ_rules() {
        let s = Sequent::new([f("@p")], [f("q")]);
        let inst = rule_instances_backward(CalculusId::GLETF, &s);
        assert!(inst.iter().any(|i| i.rule == RuleId::Exp1));
        assert!(inst.iter().any(|i| i.rule == RuleId::Pem));
    }

    #[test]
    fn id_closure_and_drop() {
        let s = Sequent::new([f("p")], [f("p")]);
        let inst = rule_instances_backward(CalculusId::GLETJ, &s);
        assert_eq!(inst[0].rule, RuleId::Id);
        assert!(inst[0].premises.is_empty());

        let s = Sequent::new([f("@p")], [f("q")]);
        let inst = rule_instances_backward(CalculusId::GLETJ, &s);
        assert!(inst.iter().any(|i| i.rule == RuleId::RW));
        let s = Sequent::new([f("p")], [f("q")]);
        assert!(rule_instances_backward(CalculusId::GLETJ, &s).is_empty());
    }

    #[test]
    fn single_conclusion_exp1_needs_empty_succedent() {
        let s = Sequent::new([f("@p")], [f("q")]);
        let inst = rule_instances_backward(CalculusId::GLETJ, &s);
        assert!(!inst.iter().any(|i| i.rule == RuleId::Exp1));
    }
}
