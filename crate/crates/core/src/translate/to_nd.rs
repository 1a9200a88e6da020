use std::cell::Cell;

use super::TranslateError;
use crate::formula::{Formula, RESERVED_ATOM};
use crate::nd::{Deduction, NdRule};
use crate::sequent::{
    check_sequent_proof, CalculusId, FormulaSet, NegCircVariant, RuleId, SequentProof,
};

/// The formula a succedent stands for: the right-nested disjunction of its
/// formulas in set order, or the `bot` expansion when it is empty.
pub fn disjunction(s: &FormulaSet) -> Formula {
    let v: Vec<Formula> = s.iter().cloned().collect();
    if v.is_empty() {
        Formula::bot()
    } else {
        tail(&v, 0)
    }
}

fn tail(v: &[Formula], j: usize) -> Formula {
    if j + 1 == v.len() {
        v[j].clone()
    } else {
        Formula::or(v[j].clone(), tail(v, j + 1))
    }
}

/// A deduction of the disjunction of the succedent from (a subset of) the
/// antecedent of the end sequent of `p`.
///
/// Left rules become eliminations grafted onto the assumptions they
/// introduce, right rules become introductions, weakening on the left pads
/// with a conjunction detour, weakening on the right and `EXP1` explode
/// into the `bot` expansion component by component, and cut grafts the left
/// deduction onto the right one. Multi-formula succedents are handled by
/// case analysis over their disjunctions.
pub fn sequent_to_nd(calc: CalculusId, p: &SequentProof) -> Result<Deduction, TranslateError> {
    check_sequent_proof(calc, p)?;
    if calc.negcirc == NegCircVariant::Printed
        && p.count_rule(|r| matches!(r, RuleId::LNegCirc | RuleId::RNegCirc)) > 0
    {
        return Err(TranslateError::Unsupported(
            "the printed negated-circle rules have no natural-deduction counterpart".into(),
        ));
    }
    let b = Builder { next: Cell::new(0) };
    Ok(b.node(p).uniquify_markers())
}

struct Builder {
    next: Cell<usize>,
}

fn elems(s: &FormulaSet) -> Vec<Formula> {
    s.iter().cloned().collect()
}

fn sub(f: &Formula) -> (Formula, Formula) {
    match f {
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => ((**a).clone(), (**b).clone()),
        Formula::Neg(x) => sub(x),
        _ => unreachable!("checked proof"),
    }
}

fn inner(f: &Formula) -> Formula {
    match f {
        Formula::Neg(a) | Formula::Circ(a) => (**a).clone(),
        _ => unreachable!("checked proof"),
    }
}

fn inf(rule: NdRule, f: Formula, premises: Vec<Deduction>) -> Deduction {
    Deduction::infer(rule, f, premises)
}

/// Replace the open assumptions of `f` in `d` by `by`.
fn graft(d: &Deduction, f: &Formula, by: &Deduction) -> Deduction {
    match d {
        Deduction::Assumption {
            formula,
            discharged: false,
            ..
        } if formula == f => by.clone(),
        Deduction::Assumption { .. } => d.clone(),
        Deduction::Inference {
            rule,
            formula,
            premises,
            markers,
        } => Deduction::Inference {
            rule: *rule,
            formula: formula.clone(),
            premises: premises.iter().map(|p| graft(p, f, by)).collect(),
            markers: markers.clone(),
        },
    }
}

impl Builder {
    fn marker(&self) -> String {
        let n = self.next.get() + 1;
        self.next.set(n);
        format!("t{n}")
    }

    fn discharge(&self, d: &Deduction, f: &Formula, m: &str) -> Deduction {
        graft(d, f, &Deduction::hyp(f.clone(), m))
    }

    /// `s` (proved by `d`) weakened into the disjunction of `set`.
    fn inject(&self, s: &Formula, set: &FormulaSet, d: Deduction) -> Deduction {
        let v = elems(set);
        let i = v.iter().position(|x| x == s).expect("formula of the succedent");
        let mut cur = d;
        if i + 1 < v.len() {
            cur = inf(NdRule::OrI1, tail(&v, i), vec![cur]);
        }
        for j in (0..i).rev() {
            cur = inf(NdRule::OrI2, tail(&v, j), vec![cur]);
        }
        cur
    }

    /// `EXP` or `CONS` concluding `goal`; the `bot` expansion is built from
    /// one application per component.
    fn explode(&self, rule: NdRule, premises: Vec<Deduction>, goal: &Formula) -> Deduction {
        if !goal.is_bot() {
            return inf(rule, goal.clone(), premises);
        }
        let f = Formula::atom(RESERVED_ATOM);
        let part = |t: Formula| inf(rule, t, premises.clone());
        let half = Formula::and(f.clone().circ(), f.clone().neg());
        inf(
            NdRule::AndI,
            goal.clone(),
            vec![
                inf(NdRule::AndI, half, vec![part(f.clone().circ()), part(f.clone().neg())]),
                part(f),
            ],
        )
    }

    /// From `bot` (proved by `d`) to `goal`.
    fn bot_to(&self, d: Deduction, goal: &Formula) -> Deduction {
        if goal.is_bot() {
            return d;
        }
        let f = Formula::atom(RESERVED_ATOM);
        let half = Formula::and(f.clone().circ(), f.clone().neg());
        let left = inf(NdRule::AndE1, half.clone(), vec![d.clone()]);
        inf(
            NdRule::Exp,
            goal.clone(),
            vec![
                inf(NdRule::AndE1, f.clone().circ(), vec![left.clone()]),
                inf(NdRule::AndE2, f.clone().neg(), vec![left]),
                inf(NdRule::AndE2, f, vec![d]),
            ],
        )
    }

    /// Case analysis on `d`, a deduction of the disjunction of `set`:
    /// `branch` receives each member with a deduction of it.
    fn cases(
        &self,
        d: Deduction,
        set: &FormulaSet,
        goal: &Formula,
        branch: &dyn Fn(&Formula, Deduction) -> Deduction,
    ) -> Deduction {
        let v = elems(set);
        if v.is_empty() {
            return self.bot_to(d, goal);
        }
        self.cases_from(d, &v, 0, goal, branch)
    }

    fn cases_from(
        &self,
        d: Deduction,
        v: &[Formula],
        j: usize,
        goal: &Formula,
        branch: &dyn Fn(&Formula, Deduction) -> Deduction,
    ) -> Deduction {
        if j + 1 == v.len() {
            return branch(&v[j], d);
        }
        let (u, w) = (self.marker(), self.marker());
        let here = branch(&v[j], Deduction::hyp(v[j].clone(), &u));
        let rest_f = tail(v, j + 1);
        let rest = self.cases_from(Deduction::hyp(rest_f, &w), v, j + 1, goal, branch);
        Deduction::infer_discharging(NdRule::OrE, goal.clone(), vec![d, here, rest], vec![u, w])
    }

    fn coerce(&self, d: Deduction, from: &FormulaSet, to: &FormulaSet) -> Deduction {
        if from == to {
            return d;
        }
        self.cases(d, from, &disjunction(to), &|s, h| self.inject(s, to, h))
    }

    fn node(&self, p: &SequentProof) -> Deduction {
        use RuleId::*;
        let s = &p.sequent.succ;
        let goal = disjunction(s);
        let pr = p.principal.clone();
        let a = || pr.clone().expect("principal formula");
        let ds: Vec<Deduction> = p.premises.iter().map(|q| self.node(q)).collect();
        let ss: Vec<&FormulaSet> = p.premises.iter().map(|q| &q.sequent.succ).collect();
        let open = |f: Formula| Deduction::open(f);
        // premise i, with its succedent brought to the conclusion's
        let kept = |i: usize| self.coerce(ds[i].clone(), ss[i], s);
        match p.rule {
            Id => open(a()),
            Exp0 => {
                let x = inner(&a());
                self.explode(NdRule::Exp, vec![open(a()), open(x.clone().neg()), open(x)], &goal)
            }
            LW => {
                let pad = Formula::and(goal.clone(), a());
                inf(NdRule::AndE1, goal, vec![inf(NdRule::AndI, pad, vec![ds[0].clone(), open(a())])])
            }
            RW => kept(0),
            Cut | Mix => {
                let x = a();
                self.cases(ds[0].clone(), ss[0], &goal, &|m, h| {
                    if *m == x {
                        self.coerce(graft(&ds[1], &x, &h), ss[1], s)
                    } else {
                        self.inject(m, s, h)
                    }
                })
            }
            LAnd | LNegOr | LNegTo | LNegNeg => {
                let f = a();
                let d = match p.rule {
                    LAnd => {
                        let (x, y) = sub(&f);
                        let d = graft(&ds[0], &x, &inf(NdRule::AndE1, x.clone(), vec![open(f.clone())]));
                        graft(&d, &y, &inf(NdRule::AndE2, y.clone(), vec![open(f.clone())]))
                    }
                    LNegOr => {
                        let (x, y) = sub(&f);
                        let (nx, ny) = (x.neg(), y.neg());
                        let d = graft(&ds[0], &nx, &inf(NdRule::NegOrE1, nx.clone(), vec![open(f.clone())]));
                        graft(&d, &ny, &inf(NdRule::NegOrE2, ny.clone(), vec![open(f.clone())]))
                    }
                    LNegTo => {
                        let (x, y) = sub(&f);
                        let ny = y.neg();
                        let d = graft(&ds[0], &x, &inf(NdRule::NegToE1, x.clone(), vec![open(f.clone())]));
                        graft(&d, &ny, &inf(NdRule::NegToE2, ny.clone(), vec![open(f.clone())]))
                    }
                    _ => {
                        let x = inner(&inner(&f));
                        graft(&ds[0], &x, &inf(NdRule::NegNegE, x.clone(), vec![open(f.clone())]))
                    }
                };
                self.coerce(d, ss[0], s)
            }
            LOr | LNegAnd | Pem => {
                let f = a();
                let (rule, x, y) = match p.rule {
                    LOr => {
                        let (x, y) = sub(&f);
                        (NdRule::OrE, x, y)
                    }
                    LNegAnd => {
                        let (x, y) = sub(&f);
                        (NdRule::NegAndE, x.neg(), y.neg())
                    }
                    _ => {
                        let x = inner(&f);
                        (NdRule::Pem, x.clone(), x.neg())
                    }
                };
                let (u, v) = (self.marker(), self.marker());
                Deduction::infer_discharging(
                    rule,
                    goal,
                    vec![open(f), self.discharge(&kept(0), &x, &u), self.discharge(&kept(1), &y, &v)],
                    vec![u, v],
                )
            }
            LTo => {
                let f = a();
                let (_, y) = sub(&f);
                let app = inf(NdRule::ToE, y.clone(), vec![open(f), ds[0].clone()]);
                self.coerce(graft(&ds[1], &y, &app), ss[1], s)
            }
            RTo => {
                let f = a();
                let (x, _) = sub(&f);
                let u = self.marker();
                Deduction::infer_discharging(NdRule::ToI, f, vec![self.discharge(&ds[0], &x, &u)], vec![u])
            }
            ROr1 | ROr2 | ROr | RNegAnd1 | RNegAnd2 | RNegAnd | RNegNeg => {
                let f = a();
                let intro = |m: &Formula| -> NdRule {
                    match p.rule {
                        ROr1 => NdRule::OrI1,
                        ROr2 => NdRule::OrI2,
                        ROr => {
                            if *m == sub(&f).0 {
                                NdRule::OrI1
                            } else {
                                NdRule::OrI2
                            }
                        }
                        RNegAnd1 => NdRule::NegAndI1,
                        RNegAnd2 => NdRule::NegAndI2,
                        RNegAnd => {
                            if *m == sub(&f).0.neg() {
                                NdRule::NegAndI1
                            } else {
                                NdRule::NegAndI2
                            }
                        }
                        _ => NdRule::NegNegI,
                    }
                };
                self.cases(ds[0].clone(), ss[0], &goal, &|m, h| {
                    if s.contains(m) {
                        self.inject(m, s, h)
                    } else {
                        self.inject(&f, s, inf(intro(m), f.clone(), vec![h]))
                    }
                })
            }
            RAnd | RNegOr | RNegTo => {
                let f = a();
                let rule = match p.rule {
                    RAnd => NdRule::AndI,
                    RNegOr => NdRule::NegOrI,
                    _ => NdRule::NegToI,
                };
                self.cases(ds[0].clone(), ss[0], &goal, &|m1, h1| {
                    if s.contains(m1) {
                        return self.inject(m1, s, h1);
                    }
                    self.cases(ds[1].clone(), ss[1], &goal, &|m2, h2| {
                        if s.contains(m2) {
                            self.inject(m2, s, h2)
                        } else {
                            self.inject(&f, s, inf(rule, f.clone(), vec![h1.clone(), h2]))
                        }
                    })
                })
            }
            Exp1 => {
                let c = a();
                self.cases(ds[0].clone(), ss[0], &goal, &|m1, h1| {
                    if s.contains(m1) {
                        return self.inject(m1, s, h1);
                    }
                    self.cases(ds[1].clone(), ss[1], &goal, &|m2, h2| {
                        if s.contains(m2) {
                            self.inject(m2, s, h2)
                        } else {
                            self.explode(NdRule::Exp, vec![open(c.clone()), h2, h1.clone()], &goal)
                        }
                    })
                })
            }
            LNegCirc => {
                let f = a();
                self.cases(ds[0].clone(), ss[0], &goal, &|m, h| {
                    if s.contains(m) {
                        self.inject(m, s, h)
                    } else {
                        self.explode(NdRule::Cons, vec![h, open(f.clone())], &goal)
                    }
                })
            }
            RNegCirc => {
                let f = a();
                let circ = inner(&f);
                let (u, v) = (self.marker(), self.marker());
                Deduction::infer_discharging(
                    NdRule::Comp,
                    goal,
                    vec![
                        self.discharge(&kept(0), &circ, &u),
                        self.inject(&f, s, Deduction::hyp(f.clone(), &v)),
                    ],
                    vec![u, v],
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Language};
    use crate::nd::{check_deduction, NdSystem};
    use crate::search::{decide, DecideResult, SearchBudget};
    use crate::sequent::{circ_conjunction_gb_with_cuts, circ_conjunction_gletj_cut_free, Sequent};

    fn f(s: &str) -> Formula {
        parse(s, Language::LJ).unwrap()
    }

    fn proved(calc: CalculusId, s: Sequent) -> SequentProof {
        match decide(calc, &s, SearchBudget::default()).unwrap() {
            DecideResult::Provable { proof, .. } => proof,
            other => panic!("{s}: {other:?}"),
        }
    }

    #[test]
    fn identity_is_assumption() {
        let d = sequent_to_nd(CalculusId::GLETJ, &SequentProof::id(f("p"))).unwrap();
        assert_eq!(d, Deduction::open(f("p")));
    }

    #[test]
    fn fixtures_translate() {
        for (calc, p) in [
            (CalculusId::GB, circ_conjunction_gb_with_cuts()),
            (CalculusId::GLETJ, circ_conjunction_gletj_cut_free()),
        ] {
            let d = sequent_to_nd(calc, &p).unwrap();
            let c = check_deduction(NdSystem::NLETJ, &d).unwrap();
            assert!(c.conclusion.is_bot());
            assert!(c.open_assumptions.is_subset(&p.sequent.ante));
        }
    }

    #[test]
    fn neg_implication_left() {
        let p = proved(CalculusId::GLETJ, Sequent::new([f("~(p -> q)")], [f("~q & p")]));
        let d = sequent_to_nd(CalculusId::GLETJ, &p).unwrap();
        assert!(d.count_rule(|r| r == NdRule::NegToE1) > 0);
        assert!(d.count_rule(|r| r == NdRule::NegToE2) > 0);
        let c = check_deduction(NdSystem::NLETJ, &d).unwrap();
        assert_eq!(c.conclusion, f("~q & p"));
    }

    #[test]
    fn pem_and_multi_succedent() {
        let lf = |s: &str| parse(s, Language::LF).unwrap();
        let p = proved(CalculusId::GLETF, Sequent::new([lf("@p")], [lf("p"), lf("~p")]));
        let d = sequent_to_nd(CalculusId::GLETF, &p).unwrap();
        let c = check_deduction(NdSystem::NLETF, &d).unwrap();
        assert_eq!(c.conclusion, disjunction(&[lf("p"), lf("~p")].into()));

        let p = proved(CalculusId::GLETF, Sequent::new([], [lf("@p | ~@p")]));
        let d = sequent_to_nd(CalculusId::GLETF, &p).unwrap();
        assert!(d.count_rule(|r| r == NdRule::Comp) > 0);
        let c = check_deduction(NdSystem::NLETF, &d).unwrap();
        assert!(c.open_assumptions.is_empty());
    }
}
