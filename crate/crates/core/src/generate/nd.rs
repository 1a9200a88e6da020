use rand::Rng;

use super::random_formula;
use crate::formula::Formula;
use crate::nd::{Deduction, NdRule, NdSystem};

/// A random valid deduction of height at most `depth + 1`.
///
/// Construction is goal-directed: each node picks a rule concluding its
/// target, preferring introductions directly above eliminations and del-
/// rules above eliminations, so that the result is rich in cuts.
/// Assumptions reuse a discharged class when one matches the target.
pub fn random_deduction(
    rng: &mut impl Rng,
    system: NdSystem,
    atoms: usize,
    depth: usize,
) -> Deduction {
    let target = random_formula(rng, system.language(), atoms, 2);
    let mut g = NdGen {
        rng,
        system,
        atoms,
        hyps: Vec::new(),
        next: 0,
    };
    g.goal(&target, depth, false)
}

struct NdGen<'a, R: Rng> {
    rng: &'a mut R,
    system: NdSystem,
    atoms: usize,
    hyps: Vec<(Formula, String)>,
    next: usize,
}

impl<R: Rng> NdGen<'_, R> {
    fn small(&mut self) -> Formula {
        random_formula(self.rng, self.system.language(), self.atoms, 1)
    }

    fn marker(&mut self) -> String {
        self.next += 1;
        format!("u{}", self.next)
    }

    fn assume(&mut self, target: &Formula) -> Deduction {
        match self.hyps.iter().rev().find(|(f, _)| f == target) {
            Some((f, m)) => Deduction::hyp(f.clone(), m),
            None => Deduction::open(target.clone()),
        }
    }

    /// A formula related to `target`: itself, one of its components, or a
    /// small random formula.
    fn related(&mut self, target: &Formula) -> Formula {
        let parts: Vec<Formula> = match target {
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                vec![(**a).clone(), (**b).clone()]
            }
            Formula::Neg(a) | Formula::Circ(a) => vec![(**a).clone()],
            Formula::Atom(_) => vec![],
        };
        match self.rng.gen_range(0..3) {
            0 => target.clone(),
            1 if !parts.is_empty() => parts[self.rng.gen_range(0..parts.len())].clone(),
            _ => self.small(),
        }
    }

    fn with_hyps(&mut self, hyps: &[(Formula, String)], target: &Formula, depth: usize) -> Deduction {
        let n = self.hyps.len();
        self.hyps.extend(hyps.iter().cloned());
        let d = self.goal(target, depth, false);
        self.hyps.truncate(n);
        d
    }

    fn goal(&mut self, target: &Formula, depth: usize, major: bool) -> Deduction {
        if depth == 0 {
            return self.assume(target);
        }
        let roll: f64 = self.rng.gen();
        let attempt = if major {
            // a major premise: usually an introduction or a del-rule, which makes a cut
            if roll < 0.55 {
                self.intro(target, depth)
            } else if roll < 0.8 {
                self.del(target, depth)
            } else if roll < 0.9 {
                self.explosion(target, depth)
            } else {
                None
            }
        } else if roll < 0.15 {
            None
        } else if roll < 0.4 {
            self.intro(target, depth)
        } else if roll < 0.7 {
            self.elim(target, depth)
        } else if roll < 0.9 {
            self.del(target, depth)
        } else {
            self.explosion(target, depth)
        };
        attempt.unwrap_or_else(|| self.assume(target))
    }

    fn intro(&mut self, target: &Formula, depth: usize) -> Option<Deduction> {
        use Formula::*;
        let d = depth - 1;
        let t = target.clone();
        let neg = |x: &Formula| x.clone().neg();
        Some(match target {
            And(a, b) => Deduction::infer(NdRule::AndI, t, vec![self.goal(a, d, false), self.goal(b, d, false)]),
            Or(a, b) => {
                if self.rng.gen_bool(0.5) {
                    Deduction::infer(NdRule::OrI1, t, vec![self.goal(a, d, false)])
                } else {
                    Deduction::infer(NdRule::OrI2, t, vec![self.goal(b, d, false)])
                }
            }
            Imp(a, b) => {
                let u = self.marker();
                let body = self.with_hyps(&[((**a).clone(), u.clone())], b, d);
                Deduction::infer_discharging(NdRule::ToI, t, vec![body], vec![u])
            }
            Neg(inner) => match &**inner {
                And(a, b) => {
                    if self.rng.gen_bool(0.5) {
                        Deduction::infer(NdRule::NegAndI1, t, vec![self.goal(&neg(a), d, false)])
                    } else {
                        Deduction::infer(NdRule::NegAndI2, t, vec![self.goal(&neg(b), d, false)])
                    }
                }
                Or(a, b) => Deduction::infer(
                    NdRule::NegOrI,
                    t,
                    vec![self.goal(&neg(a), d, false), self.goal(&neg(b), d, false)],
                ),
                Imp(a, b) => Deduction::infer(
                    NdRule::NegToI,
                    t,
                    vec![self.goal(a, d, false), self.goal(&neg(b), d, false)],
                ),
                Neg(a) => Deduction::infer(NdRule::NegNegI, t, vec![self.goal(a, d, false)]),
                _ => return None,
            },
            _ => return None,
        })
    }

    fn elim(&mut self, target: &Formula, depth: usize) -> Option<Deduction> {
        let d = depth - 1;
        let t = target.clone();
        let j = self.system == NdSystem::NLETJ;
        let x = self.small();
        let mut options: Vec<(NdRule, Formula)> = vec![
            (NdRule::AndE1, Formula::and(t.clone(), x.clone())),
            (NdRule::AndE2, Formula::and(x.clone(), t.clone())),
            (NdRule::NegNegE, t.clone().neg().neg()),
        ];
        if j {
            options.push((NdRule::ToE, Formula::imp(x.clone(), t.clone())));
            options.push((NdRule::NegToE1, Formula::imp(t.clone(), x.clone()).neg()));
        }
        if let Formula::Neg(a) = target {
            let a = (**a).clone();
            options.push((NdRule::NegOrE1, Formula::or(a.clone(), x.clone()).neg()));
            options.push((NdRule::NegOrE2, Formula::or(x.clone(), a.clone()).neg()));
            if j {
                options.push((NdRule::NegToE2, Formula::imp(x.clone(), a).neg()));
            }
        }
        let (rule, major) = options.swap_remove(self.rng.gen_range(0..options.len()));
        let maj = self.goal(&major, d, true);
        let mut premises = vec![maj];
        if rule == NdRule::ToE {
            premises.push(self.goal(&x, d, false));
        }
        Some(Deduction::infer(rule, t, premises))
    }

    fn del(&mut self, target: &Formula, depth: usize) -> Option<Deduction> {
        let d = depth - 1;
        let t = target.clone();
        let kinds: &[NdRule] = match self.system {
            NdSystem::NLETJ => &[NdRule::OrE, NdRule::NegAndE, NdRule::Pem],
            NdSystem::NLETF => &[NdRule::OrE, NdRule::NegAndE, NdRule::Pem, NdRule::Comp],
        };
        let rule = kinds[self.rng.gen_range(0..kinds.len())];
        let a = self.related(target);
        let b = self.related(target);
        let (u, v) = (self.marker(), self.marker());
        let (major, ha, hb) = match rule {
            NdRule::OrE => (Some(Formula::or(a.clone(), b.clone())), a, b),
            NdRule::NegAndE => (
                Some(Formula::and(a.clone(), b.clone()).neg()),
                a.clone().neg(),
                b.clone().neg(),
            ),
            NdRule::Pem => (Some(a.clone().circ()), a.clone(), a.neg()),
            _ => (None, a.clone().circ(), a.circ().neg()),
        };
        let mut premises = Vec::new();
        if let Some(m) = major {
            premises.push(self.goal(&m, d, false));
        }
        premises.push(self.with_hyps(&[(ha, u.clone())], target, d));
        premises.push(self.with_hyps(&[(hb, v.clone())], target, d));
        Some(Deduction::infer_discharging(rule, t, premises, vec![u, v]))
    }

    fn explosion(&mut self, target: &Formula, depth: usize) -> Option<Deduction> {
        let d = depth - 1;
        let a = self.small();
        let cons = self.system == NdSystem::NLETF && self.rng.gen_bool(0.3);
        let premises = if cons {
            let c = a.circ();
            vec![self.goal(&c, d, false), self.goal(&c.clone().neg(), d, false)]
        } else {
            vec![
                self.goal(&a.clone().circ(), d, false),
                self.goal(&a.clone().neg(), d, false),
                self.goal(&a, d, false),
            ]
        };
        let rule = if cons { NdRule::Cons } else { NdRule::Exp };
        Some(Deduction::infer(rule, target.clone(), premises))
    }
}
