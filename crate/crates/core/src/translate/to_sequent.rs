use super::TranslateError;
use crate::formula::{Formula, RESERVED_ATOM};
use crate::nd::{check_deduction, comp_base, Deduction, NdRule, NdSystem};
use crate::sequent::{infer, weaken_to, CalculusId, FormulaSet, RuleId, Sequent, SequentProof};

/// The sequent calculus a system translates into: GB for NLET_J and the
/// corrected GLET_F for NLET_F.
pub fn nd_calculus(system: NdSystem) -> CalculusId {
    match system {
        NdSystem::NLETJ => CalculusId::GB,
        NdSystem::NLETF => CalculusId::GLETF,
    }
}

/// A proof of `G => C`, where `G` are the open assumptions of `d` and `C`
/// its conclusion. A deduction of the `bot` expansion yields `G =>`.
///
/// Each inference becomes the matching right rule, or a left rule cut
/// against the translation of its major premise; contexts are merged by
/// weakening. The result may contain cuts.
pub fn nd_to_sequent(system: NdSystem, d: &Deduction) -> Result<SequentProof, TranslateError> {
    let checked = check_deduction(system, d)?;
    let calc = nd_calculus(system);
    let tr = Tr { calc };
    let mut p = tr.node(d)?;
    let mut succ: FormulaSet = [checked.conclusion.clone()].into();
    if checked.conclusion.is_bot() {
        p = tr.cut(Formula::bot(), p, tr.bot_left()?)?;
        succ.clear();
    }
    let target = Sequent {
        ante: checked.open_assumptions,
        succ,
    };
    Ok(weaken_to(p, &target, calc)?)
}

struct Tr {
    calc: CalculusId,
}

fn parts(f: &Formula) -> (Formula, Formula) {
    match f {
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => ((**a).clone(), (**b).clone()),
        Formula::Neg(x) => parts(x),
        _ => unreachable!("checked deduction"),
    }
}

fn inner(f: &Formula) -> Formula {
    match f {
        Formula::Neg(a) | Formula::Circ(a) => (**a).clone(),
        _ => unreachable!("checked deduction"),
    }
}

impl Tr {
    fn inf(
        &self,
        rule: RuleId,
        principal: Formula,
        premises: Vec<SequentProof>,
    ) -> Result<SequentProof, TranslateError> {
        Ok(infer(self.calc, rule, Some(principal), premises)?)
    }

    fn cut(&self, a: Formula, left: SequentProof, right: SequentProof) -> Result<SequentProof, TranslateError> {
        self.inf(RuleId::Cut, a, vec![left, right])
    }

    fn single(&self) -> bool {
        !self.calc.is_multi()
    }

    /// `bot =>`.
    fn bot_left(&self) -> Result<SequentProof, TranslateError> {
        let f = Formula::atom(RESERVED_ATOM);
        let circ = f.clone().circ();
        let leaf = if self.single() {
            SequentProof::exp0(circ.clone(), FormulaSet::new(), FormulaSet::new())
                .expect("circ formula")
        } else {
            self.inf(
                RuleId::Exp1,
                circ.clone(),
                vec![SequentProof::id(f.clone()), SequentProof::id(f.clone().neg())],
            )?
        };
        let half = Formula::and(circ, f.clone().neg());
        let l1 = self.inf(RuleId::LAnd, half, vec![leaf])?;
        self.inf(RuleId::LAnd, Formula::bot(), vec![l1])
    }

    fn node(&self, d: &Deduction) -> Result<SequentProof, TranslateError> {
        use NdRule::*;
        let Deduction::Inference {
            rule,
            formula: c,
            premises,
            markers,
        } = d
        else {
            return Ok(SequentProof::id(d.formula().clone()));
        };
        let ps = premises
            .iter()
            .map(|q| self.node(q))
            .collect::<Result<Vec<_>, _>>()?;
        let major = || premises[0].formula().clone();
        let c = c.clone();
        let id = SequentProof::id;
        let mut ps = ps.into_iter();
        let mut next = || ps.next().expect("arity checked");
        match rule {
            AndI => self.inf(RuleId::RAnd, c, vec![next(), next()]),
            AndE1 | AndE2 => {
                let (a, b) = parts(&major());
                let pick = if *rule == AndE1 { a } else { b };
                let g = self.inf(RuleId::LAnd, major(), vec![id(pick)])?;
                self.cut(major(), next(), g)
            }
            OrI1 | OrI2 => {
                let r = match (self.single(), rule) {
                    (true, OrI1) => RuleId::ROr1,
                    (true, _) => RuleId::ROr2,
                    (false, _) => RuleId::ROr,
                };
                self.inf(r, c, vec![next()])
            }
            OrE | NegAndE | Pem => {
                let r = match rule {
                    OrE => RuleId::LOr,
                    NegAndE => RuleId::LNegAnd,
                    _ => RuleId::Pem,
                };
                let m = next();
                let g = self.inf(r, major(), vec![next(), next()])?;
                self.cut(major(), m, g)
            }
            ToI => self.inf(RuleId::RTo, c, vec![next()]),
            ToE => {
                let m = next();
                let g = self.inf(RuleId::LTo, major(), vec![next(), id(c)])?;
                self.cut(major(), m, g)
            }
            NegAndI1 | NegAndI2 => {
                let r = match (self.single(), rule) {
                    (true, NegAndI1) => RuleId::RNegAnd1,
                    (true, _) => RuleId::RNegAnd2,
                    (false, _) => RuleId::RNegAnd,
                };
                self.inf(r, c, vec![next()])
            }
            NegOrI => self.inf(RuleId::RNegOr, c, vec![next(), next()]),
            NegToI => self.inf(RuleId::RNegTo, c, vec![next(), next()]),
            NegNegI => self.inf(RuleId::RNegNeg, c, vec![next()]),
            NegOrE1 | NegOrE2 | NegToE1 | NegToE2 | NegNegE => {
                let r = match rule {
                    NegOrE1 | NegOrE2 => RuleId::LNegOr,
                    NegToE1 | NegToE2 => RuleId::LNegTo,
                    _ => RuleId::LNegNeg,
                };
                let g = self.inf(r, major(), vec![id(c)])?;
                self.cut(major(), next(), g)
            }
            Exp => {
                let circ = major();
                let a = inner(&circ);
                let (pc, pn, pa) = (next(), next(), next());
                if self.single() {
                    let leaf = SequentProof::exp0(circ.clone(), FormulaSet::new(), [c].into())
                        .expect("circ formula");
                    let s1 = self.cut(circ, pc, leaf)?;
                    let s2 = self.cut(a.clone().neg(), pn, s1)?;
                    self.cut(a, pa, s2)
                } else {
                    let e = self.inf(RuleId::Exp1, circ.clone(), vec![pa, pn])?;
                    let to = Sequent {
                        ante: e.sequent.ante.clone(),
                        succ: [c].into(),
                    };
                    let e = weaken_to(e, &to, self.calc)?;
                    self.cut(circ, pc, e)
                }
            }
            Cons => {
                let circ = major();
                let neg = circ.clone().neg();
                let g = self.inf(RuleId::LNegCirc, neg.clone(), vec![id(circ.clone())])?;
                let to = Sequent {
                    ante: g.sequent.ante.clone(),
                    succ: [c].into(),
                };
                let g = weaken_to(g, &to, self.calc)?;
                let (pc, pn) = (next(), next());
                let s = self.cut(circ, pc, g)?;
                self.cut(neg, pn, s)
            }
            Comp => {
                let (p0, p1) = (next(), next());
                match comp_base(premises, &markers[0], &markers[1]) {
                    None => Ok(p0),
                    Some(a) => {
                        let neg = a.circ().neg();
                        let r = self.inf(RuleId::RNegCirc, neg.clone(), vec![p0])?;
                        self.cut(neg, r, p1)
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Language};
    use crate::sequent::check_sequent_proof;

    fn f(s: &str) -> Formula {
        parse(s, Language::LJ).unwrap()
    }

    #[test]
    fn assumption_is_identity() {
        let p = nd_to_sequent(NdSystem::NLETJ, &Deduction::open(f("p"))).unwrap();
        assert_eq!(p, SequentProof::id(f("p")));
    }

    #[test]
    fn explosion_uses_three_cuts() {
        let d = Deduction::infer(
            NdRule::Exp,
            f("q"),
            vec![Deduction::open(f("@p")), Deduction::open(f("~p")), Deduction::open(f("p"))],
        );
        let p = nd_to_sequent(NdSystem::NLETJ, &d).unwrap();
        assert!(check_sequent_proof(CalculusId::GB, &p).is_ok());
        assert_eq!(p.count_rule(|r| r == RuleId::Cut), 3);
        assert_eq!(p.sequent, Sequent::new([f("@p"), f("~p"), f("p")], [f("q")]));
    }

    #[test]
    fn neg_and_elimination() {
        let d = Deduction::infer_discharging(
            NdRule::NegAndE,
            f("r"),
            vec![
                Deduction::open(f("~(p & q)")),
                Deduction::infer(NdRule::AndE1, f("r"), vec![Deduction::open(f("r & ~p"))]),
                Deduction::open(f("r")),
            ],
            vec!["u".into(), "v".into()],
        );
        let p = nd_to_sequent(NdSystem::NLETJ, &d).unwrap();
        assert!(check_sequent_proof(CalculusId::GB, &p).is_ok(), "{p:?}");
        assert_eq!(p.rule, RuleId::Cut);
        assert_eq!(
            p.sequent,
            Sequent::new([f("~(p & q)"), f("r & ~p"), f("r")], [f("r")])
        );
    }
}
