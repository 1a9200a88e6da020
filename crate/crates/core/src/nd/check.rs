use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::{Deduction, NdRule, NdSystem};
use crate::formula::Formula;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checked {
    pub conclusion: Formula,
    pub open_assumptions: BTreeSet<Formula>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NdInvalid {
    #[error("{rule} is not a rule of {system}")]
    RuleNotInSystem { rule: NdRule, system: NdSystem },
    #[error("{rule} takes {expected} premises, found {found}")]
    Arity {
        rule: NdRule,
        expected: usize,
        found: usize,
    },
    #[error("{rule} discharges {expected} classes, found {found} markers")]
    MarkerCount {
        rule: NdRule,
        expected: usize,
        found: usize,
    },
    #[error("not an instance of {rule}: {detail}")]
    Schema { rule: NdRule, detail: String },
    #[error("formula {0} is outside the language")]
    Language(Formula),
    #[error("marker {0} is discharged twice")]
    DoubleDischarge(String),
    #[error("assumption marked discharged by {0}, which no inference below discharges")]
    Unbound(String),
    #[error("assumption {found} in class {marker} should be {expected}")]
    ClassMismatch {
        marker: String,
        expected: Formula,
        found: Formula,
    },
    #[error("discharged assumption without a marker")]
    MissingMarker,
    #[error("open assumption carries marker {0}, which an inference discharges")]
    MarkerClash(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("invalid deduction at {path:?}: {reason}")]
pub struct NdInvalidAt {
    pub path: Vec<usize>,
    pub reason: NdInvalid,
}

/// Validate `d` in `system` and return its conclusion and open assumptions.
///
/// Nodes are checked in pre-order and the first failure is reported.
pub fn check_deduction(system: NdSystem, d: &Deduction) -> Result<Checked, NdInvalidAt> {
    let mut discharging = BTreeSet::new();
    let mut dup = None;
    d.visit(&mut |path, n| {
        for m in n.markers() {
            if !discharging.insert(m.clone()) && dup.is_none() {
                dup = Some(NdInvalidAt {
                    path: path.to_vec(),
                    reason: NdInvalid::DoubleDischarge(m.clone()),
                });
            }
        }
    });
    if let Some(e) = dup {
        return Err(e);
    }
    let mut ck = Checker {
        system,
        discharging,
        scope: BTreeMap::new(),
        path: Vec::new(),
    };
    ck.node(d)?;
    Ok(Checked {
        conclusion: d.formula().clone(),
        open_assumptions: d.open_assumptions(),
    })
}

struct Checker {
    system: NdSystem,
    discharging: BTreeSet<String>,
    /// Markers in scope, with the formula their class must consist of.
    /// `None` means any formula is accepted (an unconstrained empty class).
    scope: BTreeMap<String, Option<Formula>>,
    path: Vec<usize>,
}

fn mismatch(rule: NdRule, detail: impl Into<String>) -> NdInvalid {
    NdInvalid::Schema {
        rule,
        detail: detail.into(),
    }
}

impl Checker {
    fn fail(&self, reason: NdInvalid) -> NdInvalidAt {
        NdInvalidAt {
            path: self.path.clone(),
            reason,
        }
    }

    fn node(&mut self, d: &Deduction) -> Result<(), NdInvalidAt> {
        if !d.formula().belongs_to(self.system.language()) {
            return Err(self.fail(NdInvalid::Language(d.formula().clone())));
        }
        match d {
            Deduction::Assumption {
                formula,
                marker,
                discharged,
            } => self.assumption(formula, marker.as_deref(), *discharged),
            Deduction::Inference {
                rule,
                formula,
                premises,
                markers,
            } => {
                let classes = self.inference(*rule, formula, premises, markers)?;
                for (i, p) in premises.iter().enumerate() {
                    let bound: Vec<(String, Option<Formula>)> = classes
                        .iter()
                        .filter(|(idx, _, _)| *idx == i)
                        .map(|(_, m, f)| (m.clone(), f.clone()))
                        .collect();
                    for (m, f) in &bound {
                        self.scope.insert(m.clone(), f.clone());
                    }
                    self.path.push(i);
                    let r = self.node(p);
                    self.path.pop();
                    for (m, _) in &bound {
                        self.scope.remove(m);
                    }
                    r?;
                }
                Ok(())
            }
        }
    }

    fn assumption(
        &self,
        formula: &Formula,
        marker: Option<&str>,
        discharged: bool,
    ) -> Result<(), NdInvalidAt> {
        match (marker, discharged) {
            (None, true) => Err(self.fail(NdInvalid::MissingMarker)),
            (None, false) => Ok(()),
            (Some(m), false) => {
                if self.discharging.contains(m) {
                    Err(self.fail(NdInvalid::MarkerClash(m.to_string())))
                } else {
                    Ok(())
                }
            }
            (Some(m), true) => match self.scope.get(m) {
                None => Err(self.fail(NdInvalid::Unbound(m.to_string()))),
                Some(Some(expected)) if expected != formula => {
                    Err(self.fail(NdInvalid::ClassMismatch {
                        marker: m.to_string(),
                        expected: expected.clone(),
                        found: formula.clone(),
                    }))
                }
                Some(_) => Ok(()),
            },
        }
    }

    /// Check one inference against its schema; returns the classes it
    /// discharges as (premise index, marker, class formula).
    fn inference(
        &self,
        rule: NdRule,
        concl: &Formula,
        premises: &[Deduction],
        markers: &[String],
    ) -> Result<Vec<(usize, String, Option<Formula>)>, NdInvalidAt> {
        use Formula::*;
        if !self.system.has_rule(rule) {
            return Err(self.fail(NdInvalid::RuleNotInSystem {
                rule,
                system: self.system,
            }));
        }
        if premises.len() != rule.arity() {
            return Err(self.fail(NdInvalid::Arity {
                rule,
                expected: rule.arity(),
                found: premises.len(),
            }));
        }
        if markers.len() != rule.discharges() {
            return Err(self.fail(NdInvalid::MarkerCount {
                rule,
                expected: rule.discharges(),
                found: markers.len(),
            }));
        }
        let p: Vec<&Formula> = premises.iter().map(|d| d.formula()).collect();
        let bad = |detail: &str| Err(self.fail(mismatch(rule, detail)));
        let class = |i: usize, f: Formula| (i, markers[i - 1].clone(), Some(f));
        match rule {
            NdRule::AndI => match concl {
                And(a, b) if **a == *p[0] && **b == *p[1] => Ok(vec![]),
                _ => bad("conclusion must be the conjunction of the premises"),
            },
            NdRule::AndE1 => match p[0] {
                And(a, _) if **a == *concl => Ok(vec![]),
                _ => bad("premise must be a conjunction with the conclusion on the left"),
            },
            NdRule::AndE2 => match p[0] {
                And(_, b) if **b == *concl => Ok(vec![]),
                _ => bad("premise must be a conjunction with the conclusion on the right"),
            },
            NdRule::OrI1 => match concl {
                Or(a, _) if **a == *p[0] => Ok(vec![]),
                _ => bad("conclusion must be a disjunction with the premise on the left"),
            },
            NdRule::OrI2 => match concl {
                Or(_, b) if **b == *p[0] => Ok(vec![]),
                _ => bad("conclusion must be a disjunction with the premise on the right"),
            },
            NdRule::OrE => match p[0] {
                Or(a, b) if p[1] == concl && p[2] == concl => {
                    Ok(vec![class(1, (**a).clone()), class(2, (**b).clone())])
                }
                _ => bad("major premise must be a disjunction and minor premises the conclusion"),
            },
            NdRule::ToI => match concl {
                Imp(a, b) if **b == *p[0] => Ok(vec![(0, markers[0].clone(), Some((**a).clone()))]),
                _ => bad("conclusion must be an implication whose consequent is the premise"),
            },
            NdRule::ToE => match p[0] {
                Imp(a, b) if **b == *concl && **a == *p[1] => Ok(vec![]),
                _ => bad("premises must be A -> B and A, concluding B"),
            },
            NdRule::NegAndI1 => match concl {
                Neg(x) => match &**x {
                    And(a, _) if (**a).clone().neg() == *p[0] => Ok(vec![]),
                    _ => bad("conclusion must be ~(A & B) for premise ~A"),
                },
                _ => bad("conclusion must be ~(A & B) for premise ~A"),
            },
            NdRule::NegAndI2 => match concl {
                Neg(x) => match &**x {
                    And(_, b) if (**b).clone().neg() == *p[0] => Ok(vec![]),
                    _ => bad("conclusion must be ~(A & B) for premise ~B"),
                },
                _ => bad("conclusion must be ~(A & B) for premise ~B"),
            },
            NdRule::NegAndE => match p[0] {
                Neg(x) => match &**x {
                    And(a, b) if p[1] == concl && p[2] == concl => Ok(vec![
                        class(1, (**a).clone().neg()),
                        class(2, (**b).clone().neg()),
                    ]),
                    _ => bad("major premise must be ~(A & B) and minor premises the conclusion"),
                },
                _ => bad("major premise must be ~(A & B) and minor premises the conclusion"),
            },
            NdRule::NegOrI => match concl {
                Neg(x) => match &**x {
                    Or(a, b) if (**a).clone().neg() == *p[0] && (**b).clone().neg() == *p[1] => {
                        Ok(vec![])
                    }
                    _ => bad("premises must be ~A and ~B, concluding ~(A | B)"),
                },
                _ => bad("premises must be ~A and ~B, concluding ~(A | B)"),
            },
            NdRule::NegOrE1 | NdRule::NegOrE2 => match p[0] {
                Neg(x) => match &**x {
                    Or(a, b) => {
                        let want = if rule == NdRule::NegOrE1 { a } else { b };
                        if (**want).clone().neg() == *concl {
                            Ok(vec![])
                        } else {
                            bad("conclusion must be the negated disjunct")
                        }
                    }
                    _ => bad("premise must be ~(A | B)"),
                },
                _ => bad("premise must be ~(A | B)"),
            },
            NdRule::NegToI => match concl {
                Neg(x) => match &**x {
                    Imp(a, b) if **a == *p[0] && (**b).clone().neg() == *p[1] => Ok(vec![]),
                    _ => bad("premises must be A and ~B, concluding ~(A -> B)"),
                },
                _ => bad("premises must be A and ~B, concluding ~(A -> B)"),
            },
            NdRule::NegToE1 | NdRule::NegToE2 => match p[0] {
                Neg(x) => match &**x {
                    Imp(a, b) => {
                        let want = if rule == NdRule::NegToE1 {
                            (**a).clone()
                        } else {
                            (**b).clone().neg()
                        };
                        if want == *concl {
                            Ok(vec![])
                        } else {
                            bad("conclusion must be A (first) or ~B (second)")
                        }
                    }
                    _ => bad("premise must be ~(A -> B)"),
                },
                _ => bad("premise must be ~(A -> B)"),
            },
            NdRule::NegNegI => {
                if p[0].clone().neg().neg() == *concl {
                    Ok(vec![])
                } else {
                    bad("conclusion must be the doubly negated premise")
                }
            }
            NdRule::NegNegE => {
                if concl.clone().neg().neg() == *p[0] {
                    Ok(vec![])
                } else {
                    bad("premise must be the doubly negated conclusion")
                }
            }
            NdRule::Exp => match p[0] {
                Circ(a) if (**a).clone().neg() == *p[1] && **a == *p[2] => Ok(vec![]),
                _ => bad("premises must be @A, ~A and A"),
            },
            NdRule::Pem => match p[0] {
                Circ(a) if p[1] == concl && p[2] == concl => Ok(vec![
                    class(1, (**a).clone()),
                    class(2, (**a).clone().neg()),
                ]),
                _ => bad("major premise must be @A and minor premises the conclusion"),
            },
            NdRule::Cons => match (p[0], p[1]) {
                (Circ(_), Neg(n)) if **n == *p[0] => Ok(vec![]),
                _ => bad("premises must be @A and ~@A"),
            },
            NdRule::Comp => {
                if p[0] != concl || p[1] != concl {
                    return bad("both premises must be the conclusion");
                }
                let (u, v) = (&markers[0], &markers[1]);
                let base = comp_base(premises, u, v);
                Ok(vec![
                    (0, u.clone(), base.clone().map(|a| a.circ())),
                    (1, v.clone(), base.map(|a| a.circ().neg())),
                ])
            }
        }
    }
}

/// The formula `A` of a `COMP` application, read off its discharged
/// classes (`@A` above the first premise, `~@A` above the second).
pub(crate) fn comp_base(premises: &[Deduction], u: &str, v: &str) -> Option<Formula> {
    let mut found = None;
    for (d, m, negated) in [(&premises[0], u, false), (&premises[1], v, true)] {
        d.visit(&mut |_, n| {
            if found.is_some() {
                return;
            }
            if let Deduction::Assumption {
                formula,
                marker: Some(mm),
                discharged: true,
            } = n
            {
                if mm == m {
                    let inner = if negated {
                        match formula {
                            Formula::Neg(x) => Some((**x).clone()),
                            _ => None,
                        }
                    } else {
                        Some(formula.clone())
                    };
                    if let Some(Formula::Circ(a)) = inner {
                        found = Some((*a).clone());
                    } else {
                        // malformed class: pin a formula that cannot match
                        found = Some(Formula::atom("").circ());
                    }
                }
            }
        });
        if found.is_some() {
            break;
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Language};

    fn f(s: &str) -> Formula {
        parse(s, Language::LJ).unwrap()
    }

    #[test]
    fn single_assumption() {
        let c = check_deduction(NdSystem::NLETJ, &Deduction::open(f("p"))).unwrap();
        assert_eq!(c.conclusion, f("p"));
        assert_eq!(c.open_assumptions, [f("p")].into());
    }

    #[test]
    fn explosion() {
        let d = Deduction::infer(
            NdRule::Exp,
            f("q"),
            vec![Deduction::open(f("@p")), Deduction::open(f("~p")), Deduction::open(f("p"))],
        );
        let c = check_deduction(NdSystem::NLETJ, &d).unwrap();
        assert_eq!(c.conclusion, f("q"));
        assert_eq!(c.open_assumptions, [f("@p"), f("~p"), f("p")].into());
    }

    #[test]
    fn modus_ponens_minor_must_match() {
        let d = Deduction::infer(
            NdRule::ToE,
            f("q"),
            vec![Deduction::open(f("p -> q")), Deduction::open(f("q"))],
        );
        let e = check_deduction(NdSystem::NLETJ, &d).unwrap_err();
        assert!(matches!(e.reason, NdInvalid::Schema { .. }));
        assert!(e.path.is_empty());
    }

    #[test]
    fn discharge_bookkeeping() {
        let body = Deduction::hyp(f("p"), "u");
        let ok = Deduction::infer_discharging(NdRule::ToI, f("p -> p"), vec![body.clone()], vec!["u".into()]);
        let c = check_deduction(NdSystem::NLETJ, &ok).unwrap();
        assert!(c.open_assumptions.is_empty());

        let wrong = Deduction::infer_discharging(NdRule::ToI, f("q -> p"), vec![body.clone()], vec!["u".into()]);
        assert!(matches!(
            check_deduction(NdSystem::NLETJ, &wrong).unwrap_err().reason,
            NdInvalid::ClassMismatch { .. }
        ));

        let twice = Deduction::infer_discharging(NdRule::ToI, f("p -> p -> p"), vec![ok.clone()], vec!["u".into()]);
        assert!(matches!(
            check_deduction(NdSystem::NLETJ, &twice).unwrap_err().reason,
            NdInvalid::DoubleDischarge(_)
        ));

        assert!(matches!(
            check_deduction(NdSystem::NLETF, &ok).unwrap_err().reason,
            NdInvalid::Language(_)
        ));
    }

    #[test]
    fn comp_classes() {
        let lf = |s: &str| parse(s, Language::LF).unwrap();
        let d = Deduction::infer_discharging(
            NdRule::Comp,
            lf("@p | ~@p"),
            vec![
                Deduction::infer(NdRule::OrI1, lf("@p | ~@p"), vec![Deduction::hyp(lf("@p"), "u")]),
                Deduction::infer(NdRule::OrI2, lf("@p | ~@p"), vec![Deduction::hyp(lf("~@p"), "v")]),
            ],
            vec!["u".into(), "v".into()],
        );
        let c = check_deduction(NdSystem::NLETF, &d).unwrap();
        assert!(c.open_assumptions.is_empty());
        assert!(check_deduction(NdSystem::NLETJ, &d).is_err());
    }
}
