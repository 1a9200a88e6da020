use super::{Deduction, Fresh, NdRule};
use crate::formula::Formula;

/// Literals, `@B` and `~@B` may be concluded by `EXP` and `CONS`.
fn allowed(f: &Formula) -> bool {
    match f {
        Formula::Circ(_) => true,
        Formula::Neg(a) => a.is_atom() || matches!(**a, Formula::Circ(_)),
        _ => f.is_literal(),
    }
}

fn offending(d: &Deduction) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    d.visit(&mut |path, n| {
        if n.rule().is_some_and(|r| r.is_explosion()) && !allowed(n.formula()) {
            out.push((path.to_vec(), n.formula().complexity()));
        }
    });
    out
}

/// Whether every `EXP` and `CONS` concludes a literal, `@B` or `~@B`.
pub fn exp_conclusions_lowered(d: &Deduction) -> bool {
    offending(d).is_empty()
}

/// Push every `EXP` (and `CONS`) conclusion down to a literal, `@B` or
/// `~@B` by introducing the conclusion from explosions of its components.
///
/// Each step rewrites an occurrence of highest complexity with no such
/// occurrence above it.
pub fn lower_exp_consequences(d: &Deduction) -> Deduction {
    let mut cur = d.clone();
    let mut fresh = Fresh::for_deduction(d);
    loop {
        let offs = offending(&cur);
        let Some(c) = offs.iter().map(|(_, c)| *c).max() else {
            return cur;
        };
        let (site, _) = offs
            .iter()
            .filter(|(_, k)| *k == c)
            .max_by_key(|(p, _)| p.len())
            .expect("nonempty")
            .clone();
        let node = cur.at(&site).expect("site exists").clone();
        let lowered = lower_one(&node, &mut fresh);
        *cur.at_mut(&site).expect("site exists") = lowered;
    }
}

fn lower_one(node: &Deduction, fresh: &mut Fresh) -> Deduction {
    use Formula::*;
    let Deduction::Inference { rule, premises, .. } = node else {
        unreachable!("explosion is an inference");
    };
    let rule = *rule;
    let first = |f: Formula| Deduction::infer(rule, f, premises.clone());
    let mut again = |f: Formula| {
        let ps = premises.iter().map(|p| fresh.freshen(p)).collect();
        Deduction::infer(rule, f, ps)
    };
    let b = node.formula().clone();
    let neg = |x: &Formula| x.clone().neg();
    match &b {
        And(x, y) => Deduction::infer(NdRule::AndI, b.clone(), vec![first((**x).clone()), again((**y).clone())]),
        Or(x, _) => Deduction::infer(NdRule::OrI1, b.clone(), vec![first((**x).clone())]),
        Imp(_, y) => {
            let u = fresh.marker();
            Deduction::infer_discharging(NdRule::ToI, b.clone(), vec![first((**y).clone())], vec![u])
        }
        Neg(inner) => match &**inner {
            And(x, _) => Deduction::infer(NdRule::NegAndI1, b.clone(), vec![first(neg(x))]),
            Or(x, y) => Deduction::infer(NdRule::NegOrI, b.clone(), vec![first(neg(x)), again(neg(y))]),
            Imp(x, y) => Deduction::infer(NdRule::NegToI, b.clone(), vec![first((**x).clone()), again(neg(y))]),
            Neg(x) => Deduction::infer(NdRule::NegNegI, b.clone(), vec![first((**x).clone())]),
            _ => unreachable!("allowed conclusion"),
        },
        _ => unreachable!("allowed conclusion"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Language};
    use crate::nd::{check_deduction, NdSystem};

    fn f(s: &str) -> Formula {
        parse(s, Language::LJ).unwrap()
    }

    fn exp(concl: &str) -> Deduction {
        Deduction::infer(
            NdRule::Exp,
            f(concl),
            vec![Deduction::open(f("@r")), Deduction::open(f("~r")), Deduction::open(f("r"))],
        )
    }

    #[test]
    fn conjunction_splits() {
        let out = lower_exp_consequences(&exp("p & q"));
        assert_eq!(out.rule(), Some(NdRule::AndI));
        assert_eq!(out.premises()[0], exp("p"));
        assert_eq!(out.premises()[1], exp("q"));
    }

    #[test]
    fn negated_conjunction() {
        let out = lower_exp_consequences(&exp("~(p & q)"));
        assert_eq!(out.rule(), Some(NdRule::NegAndI1));
        assert_eq!(out.premises()[0], exp("~p"));
    }

    #[test]
    fn literal_unchanged_and_nested_lowered() {
        assert_eq!(lower_exp_consequences(&exp("p")), exp("p"));
        let out = lower_exp_consequences(&exp("(p -> ~~q) | ~(p -> @q)"));
        assert!(exp_conclusions_lowered(&out));
        let c = check_deduction(NdSystem::NLETJ, &out).unwrap();
        assert_eq!(c.conclusion, f("(p -> ~~q) | ~(p -> @q)"));
    }
}
