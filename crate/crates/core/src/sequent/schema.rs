//! Rule schemas as data.
//!
//! Every rule except `Mix` is described by the formulas it adds to each
//! side of the conclusion and of each premise. The remaining formulas form
//! a shared antecedent context `G` and a succedent context `D`; a side with
//! `keep_succ == false` carries no succedent context and must equal its
//! added formulas exactly.

use thiserror::Error;

use super::{Calculus, CalculusId, NegCircVariant, RuleId};
use crate::formula::Formula;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub ante: Vec<Formula>,
    pub succ: Vec<Formula>,
    pub keep_succ: bool,
}

impl Part {
    fn new(ante: Vec<Formula>, succ: Vec<Formula>, keep_succ: bool) -> Part {
        Part {
            ante,
            succ,
            keep_succ,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSchema {
    pub conclusion: Part,
    pub premises: Vec<Part>,
    /// False only for `Id`, whose conclusion is exactly `A => A`.
    pub ante_context: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("rule {rule} is not a rule of {calc}")]
    NotInCalculus { rule: RuleId, calc: CalculusId },
    #[error("rule {0} needs a principal formula")]
    MissingPrincipal(RuleId),
    #[error("principal formula `{principal}` does not fit rule {rule}")]
    PrincipalShape { rule: RuleId, principal: Formula },
    #[error("rule {0} has no schema (handled separately)")]
    NoSchema(RuleId),
}

/// Whether `rule` belongs to the calculus.
pub fn rule_admitted(calc: CalculusId, rule: RuleId) -> bool {
    use RuleId::*;
    let common = matches!(
        rule,
        Id | LW | RW | Cut | LAnd | RAnd | LOr | LNegOr | RNegOr | LNegAnd | Pem | LNegNeg | RNegNeg
    );
    let single = matches!(
        rule,
        ROr1 | ROr2 | LTo | RTo | LNegTo | RNegTo | RNegAnd1 | RNegAnd2
    );
    match calc.calculus {
        Calculus::GB => common || single || rule == Exp0,
        Calculus::GLETJ => common || single || rule == Exp1 || rule == Mix,
        Calculus::GLETF => {
            common || matches!(rule, ROr | RNegAnd | Exp1 | LNegCirc | RNegCirc | Mix)
        }
    }
}

/// The schema of `rule` instantiated at `principal`.
pub fn schema(
    calc: CalculusId,
    rule: RuleId,
    principal: Option<&Formula>,
) -> Result<RuleSchema, SchemaError> {
    use Formula::*;
    use RuleId::*;
    if !rule_admitted(calc, rule) {
        return Err(SchemaError::NotInCalculus { rule, calc });
    }
    if rule == Mix {
        return Err(SchemaError::NoSchema(rule));
    }
    let p = principal.ok_or(SchemaError::MissingPrincipal(rule))?;
    let multi = calc.is_multi();
    let shape = || SchemaError::PrincipalShape {
        rule,
        principal: p.clone(),
    };
    let f = |x: &std::sync::Arc<Formula>| (**x).clone();

    // left rule: antecedent additions per premise, succedent context kept everywhere
    let left = |prems: Vec<Vec<Formula>>| RuleSchema {
        conclusion: Part::new(vec![p.clone()], vec![], true),
        premises: prems
            .into_iter()
            .map(|a| Part::new(a, vec![], true))
            .collect(),
        ante_context: true,
    };
    // right rule: succedent additions per premise, context only when multi
    let right = |prems: Vec<Vec<Formula>>| RuleSchema {
        conclusion: Part::new(vec![], vec![p.clone()], multi),
        premises: prems
            .into_iter()
            .map(|s| Part::new(vec![], s, multi))
            .collect(),
        ante_context: true,
    };

    let s = match (rule, p) {
        (Id, _) => RuleSchema {
            conclusion: Part::new(vec![p.clone()], vec![p.clone()], false),
            premises: vec![],
            ante_context: false,
        },
        (Exp0, Circ(a)) => RuleSchema {
            conclusion: Part::new(vec![p.clone(), f(a), f(a).neg()], vec![], true),
            premises: vec![],
            ante_context: true,
        },
        (LW, _) => RuleSchema {
            conclusion: Part::new(vec![p.clone()], vec![], true),
            premises: vec![Part::new(vec![], vec![], true)],
            ante_context: true,
        },
        (RW, _) => RuleSchema {
            conclusion: Part::new(vec![], vec![p.clone()], multi),
            premises: vec![Part::new(vec![], vec![], multi)],
            ante_context: true,
        },
        (Cut, _) => RuleSchema {
            conclusion: Part::new(vec![], vec![], true),
            premises: vec![
                Part::new(vec![], vec![p.clone()], multi),
                Part::new(vec![p.clone()], vec![], true),
            ],
            ante_context: true,
        },
        (LAnd, And(a, b)) => left(vec![vec![f(a), f(b)]]),
        (RAnd, And(a, b)) => right(vec![vec![f(a)], vec![f(b)]]),
        (LOr, Or(a, b)) => left(vec![vec![f(a)], vec![f(b)]]),
        (ROr1, Or(a, _)) => right(vec![vec![f(a)]]),
        (ROr2, Or(_, b)) => right(vec![vec![f(b)]]),
        (ROr, Or(a, b)) => right(vec![vec![f(a), f(b)]]),
        (LNegOr, Neg(x)) => match &**x {
            Or(a, b) => left(vec![vec![f(a).neg(), f(b).neg()]]),
            _ => return Err(shape()),
        },
        (RNegOr, Neg(x)) => match &**x {
            Or(a, b) => right(vec![vec![f(a).neg()], vec![f(b).neg()]]),
            _ => return Err(shape()),
        },
        (LTo, Imp(a, b)) => RuleSchema {
            conclusion: Part::new(vec![p.clone()], vec![], true),
            premises: vec![
                Part::new(vec![], vec![f(a)], false),
                Part::new(vec![f(b)], vec![], true),
            ],
            ante_context: true,
        },
        (RTo, Imp(a, b)) => RuleSchema {
            conclusion: Part::new(vec![], vec![p.clone()], false),
            premises: vec![Part::new(vec![f(a)], vec![f(b)], false)],
            ante_context: true,
        },
        (LNegTo, Neg(x)) => match &**x {
            Imp(a, b) => left(vec![vec![f(a), f(b).neg()]]),
            _ => return Err(shape()),
        },
        (RNegTo, Neg(x)) => match &**x {
            Imp(a, b) => right(vec![vec![f(a)], vec![f(b).neg()]]),
            _ => return Err(shape()),
        },
        (LNegAnd, Neg(x)) => match &**x {
            And(a, b) => left(vec![vec![f(a).neg()], vec![f(b).neg()]]),
            _ => return Err(shape()),
        },
        (RNegAnd1, Neg(x)) => match &**x {
            And(a, _) => right(vec![vec![f(a).neg()]]),
            _ => return Err(shape()),
        },
        (RNegAnd2, Neg(x)) => match &**x {
            And(_, b) => right(vec![vec![f(b).neg()]]),
            _ => return Err(shape()),
        },
        (RNegAnd, Neg(x)) => match &**x {
            And(a, b) => right(vec![vec![f(a).neg(), f(b).neg()]]),
            _ => return Err(shape()),
        },
        (Pem, Circ(a)) => left(vec![vec![f(a)], vec![f(a).neg()]]),
        (LNegNeg, Neg(x)) => match &**x {
            Neg(a) => left(vec![vec![f(a)]]),
            _ => return Err(shape()),
        },
        (RNegNeg, Neg(x)) => match &**x {
            Neg(a) => right(vec![vec![f(a)]]),
            _ => return Err(shape()),
        },
        (Exp1, Circ(a)) => RuleSchema {
            conclusion: Part::new(vec![p.clone()], vec![], multi),
            premises: vec![
                Part::new(vec![], vec![f(a)], multi),
                Part::new(vec![], vec![f(a).neg()], multi),
            ],
            ante_context: true,
        },
        (LNegCirc, Neg(x)) => match &**x {
            Circ(a) => {
                let up = match calc.negcirc {
                    NegCircVariant::Corrected => (**x).clone(),
                    NegCircVariant::Printed => f(a),
                };
                RuleSchema {
                    conclusion: Part::new(vec![p.clone()], vec![], true),
                    premises: vec![Part::new(vec![], vec![up], true)],
                    ante_context: true,
                }
            }
            _ => return Err(shape()),
        },
        (RNegCirc, Neg(x)) => match &**x {
            Circ(a) => {
                let up = match calc.negcirc {
                    NegCircVariant::Corrected => (**x).clone(),
                    NegCircVariant::Printed => f(a),
                };
                RuleSchema {
                    conclusion: Part::new(vec![], vec![p.clone()], true),
                    premises: vec![Part::new(vec![up], vec![], true)],
                    ante_context: true,
                }
            }
            _ => return Err(shape()),
        },
        _ => return Err(shape()),
    };
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        assert!(rule_admitted(CalculusId::GB, RuleId::Exp0));
        assert!(!rule_admitted(CalculusId::GLETJ, RuleId::Exp0));
        assert!(rule_admitted(CalculusId::GLETJ, RuleId::Exp1));
        assert!(!rule_admitted(CalculusId::GLETF, RuleId::LTo));
        assert!(!rule_admitted(CalculusId::GLETF, RuleId::ROr1));
        assert!(rule_admitted(CalculusId::GLETF, RuleId::ROr));
        assert!(!rule_admitted(CalculusId::GLETJ, RuleId::LNegCirc));
    }

    #[test]
    fn shape_errors() {
        let p = Formula::atom("p");
        assert!(matches!(
            schema(CalculusId::GLETJ, RuleId::LAnd, Some(&p)),
            Err(SchemaError::PrincipalShape { .. })
        ));
        assert!(matches!(
            schema(CalculusId::GLETJ, RuleId::LAnd, None),
            Err(SchemaError::MissingPrincipal(_))
        ));
    }
}
