//! Fixed derivations: the interderivability of `EXP0` and `EXP1`, and the
//! two proofs of `@(p & q), p, q, ~p =>`.

use super::build::{cut_on, infer, weaken_to};
use super::{CalculusId, FormulaSet, RuleId, Sequent, SequentProof};
use crate::formula::Formula;

#[derive(Clone, Debug)]
pub struct PropEqDerivations {
    /// Cut-free GLET_J proof of `@A, ~A, A =>`.
    pub exp0_in_gletj: SequentProof,
    /// GB proof of `@A, G =>` from proofs of `G => A` and `G => ~A`, using
    /// two cuts.
    pub exp1_in_gb: SequentProof,
}

fn set<const N: usize>(fs: [Formula; N]) -> FormulaSet {
    fs.into_iter().collect()
}

/// `@A, ~A, A =>` in GLET_J: two identities, two weakenings, one `EXP1`.
pub fn exp0_from_exp1(a: &Formula) -> SequentProof {
    let calc = CalculusId::GLETJ;
    let na = a.clone().neg();
    let both = set([a.clone(), na.clone()]);
    let l = weaken_to(
        SequentProof::id(a.clone()),
        &Sequent {
            ante: both.clone(),
            succ: set([a.clone()]),
        },
        calc,
    )
    .expect("weakening an identity");
    let r = weaken_to(
        SequentProof::id(na.clone()),
        &Sequent {
            ante: both,
            succ: set([na]),
        },
        calc,
    )
    .expect("weakening an identity");
    infer(calc, RuleId::Exp1, Some(a.clone().circ()), vec![l, r]).expect("EXP1 instance")
}

/// `@A, G =>` in GB from `left: G => A` and `right: G => ~A`.
///
/// Returns `None` when the premises do not have that shape.
pub fn exp1_from_exp0(
    a: &Formula,
    left: SequentProof,
    right: SequentProof,
) -> Option<SequentProof> {
    let calc = CalculusId::GB;
    let na = a.clone().neg();
    let circ = a.clone().circ();
    let gamma = left.sequent.ante.clone();
    if left.sequent.succ != set([a.clone()])
        || right.sequent.succ != set([na.clone()])
        || right.sequent.ante != gamma
    {
        return None;
    }
    let with = |extra: &[&Formula]| {
        let mut g = gamma.clone();
        g.extend(extra.iter().map(|f| (*f).clone()));
        g
    };
    let neg_side = weaken_to(
        right,
        &Sequent {
            ante: with(&[&circ]),
            succ: set([na.clone()]),
        },
        calc,
    )
    .ok()?;
    let pos_side = weaken_to(
        left,
        &Sequent {
            ante: with(&[&circ, &na]),
            succ: set([a.clone()]),
        },
        calc,
    )
    .ok()?;
    let axiom = SequentProof::exp0(circ.clone(), with(&[&circ, &na]), FormulaSet::new())?;
    let inner = cut_on(calc, a.clone(), pos_side, axiom).ok()?;
    cut_on(calc, na, neg_side, inner).ok()
}

/// Both directions at one instance of `A`.
///
/// The GB direction needs concrete premises; by default it uses
/// `G = {A & ~A}`, whose premises `A & ~A => A` and `A & ~A => ~A` are
/// proved by an identity, a weakening and `LAnd`.
pub fn build_propeq_derivations(
    a: &Formula,
    premises: Option<(SequentProof, SequentProof)>,
) -> PropEqDerivations {
    let (left, right) = premises.unwrap_or_else(|| default_premises(a));
    PropEqDerivations {
        exp0_in_gletj: exp0_from_exp1(a),
        exp1_in_gb: exp1_from_exp0(a, left, right).expect("premises prove G => A and G => ~A"),
    }
}

fn default_premises(a: &Formula) -> (SequentProof, SequentProof) {
    let calc = CalculusId::GB;
    let na = a.clone().neg();
    let conj = Formula::and(a.clone(), na.clone());
    let both = set([a.clone(), na.clone()]);
    let mk = |target: &Formula| {
        let w = weaken_to(
            SequentProof::id(target.clone()),
            &Sequent {
                ante: both.clone(),
                succ: set([target.clone()]),
            },
            calc,
        )
        .expect("weakening an identity");
        infer(calc, RuleId::LAnd, Some(conj.clone()), vec![w]).expect("LAnd instance")
    };
    (mk(a), mk(&na))
}

fn atom(s: &str) -> Formula {
    Formula::atom(s)
}

/// The GB proof of `@(p & q), p, q, ~p =>` with two cuts. Multi-formula
/// weakening steps are expanded into single weakenings.
pub fn circ_conjunction_gb_with_cuts() -> SequentProof {
    let calc = CalculusId::GB;
    let (p, q) = (atom("p"), atom("q"));
    let np = p.clone().neg();
    let pq = Formula::and(p.clone(), q.clone());
    let npq = pq.clone().neg();
    let cpq = pq.clone().circ();
    let w = |proof: SequentProof, ante: FormulaSet, succ: FormulaSet| {
        weaken_to(proof, &Sequent { ante, succ }, calc).expect("weakening")
    };

    // @(p&q), p, q, ~p => p & q
    let pq_both = set([p.clone(), q.clone()]);
    let left_p = w(SequentProof::id(p.clone()), pq_both.clone(), set([p.clone()]));
    let left_q = w(SequentProof::id(q.clone()), pq_both, set([q.clone()]));
    let rand = infer(calc, RuleId::RAnd, Some(pq.clone()), vec![left_p, left_q]).unwrap();
    let outer_left = w(
        rand,
        set([cpq.clone(), p.clone(), q.clone(), np.clone()]),
        set([pq.clone()]),
    );

    // @(p&q), p&q, ~p => ~(p&q)
    let rnand = infer(
        calc,
        RuleId::RNegAnd1,
        Some(npq.clone()),
        vec![SequentProof::id(np.clone())],
    )
    .unwrap();
    let inner_left = w(
        rnand,
        set([cpq.clone(), pq.clone(), np.clone()]),
        set([npq.clone()]),
    );

    // @(p&q), p&q, ~(p&q) => then weakened by ~p
    let axiom = SequentProof::exp0(cpq.clone(), FormulaSet::new(), FormulaSet::new()).unwrap();
    let inner_right = w(
        axiom,
        set([cpq.clone(), pq.clone(), np.clone(), npq.clone()]),
        FormulaSet::new(),
    );
    let inner = cut_on(calc, npq, inner_left, inner_right).unwrap();
    let outer_right = w(
        inner,
        set([cpq, pq.clone(), p, q, np]),
        FormulaSet::new(),
    );
    cut_on(calc, pq, outer_left, outer_right).unwrap()
}

/// The cut-free GLET_J proof of `@(p & q), p, q, ~p =>` by `EXP1`.
pub fn circ_conjunction_gletj_cut_free() -> SequentProof {
    let calc = CalculusId::GLETJ;
    let (p, q) = (atom("p"), atom("q"));
    let np = p.clone().neg();
    let pq = Formula::and(p.clone(), q.clone());
    let ctx = set([p.clone(), q.clone(), np.clone()]);
    let w = |f: &Formula| {
        weaken_to(
            SequentProof::id(f.clone()),
            &Sequent {
                ante: ctx.clone(),
                succ: set([f.clone()]),
            },
            calc,
        )
        .expect("weakening")
    };
    let rand = infer(calc, RuleId::RAnd, Some(pq.clone()), vec![w(&p), w(&q)]).unwrap();
    let rnand = infer(calc, RuleId::RNegAnd1, Some(pq.clone().neg()), vec![w(&np)]).unwrap();
    infer(calc, RuleId::Exp1, Some(pq.circ()), vec![rand, rnand]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::super::check_sequent_proof;
    use super::*;

    #[test]
    fn fixtures_check() {
        let gb = circ_conjunction_gb_with_cuts();
        assert!(check_sequent_proof(CalculusId::GB, &gb).is_ok(), "{gb:?}");
        assert_eq!(gb.count_rule(|r| r == RuleId::Cut), 2);
        let lj = circ_conjunction_gletj_cut_free();
        assert!(check_sequent_proof(CalculusId::GLETJ, &lj).is_ok());
        assert_eq!(gb.sequent, lj.sequent);
    }

    #[test]
    fn propeq_at_p() {
        let p = atom("p");
        let d = build_propeq_derivations(&p, None);
        assert!(check_sequent_proof(CalculusId::GLETJ, &d.exp0_in_gletj).is_ok());
        assert!(d.exp0_in_gletj.is_cut_free());
        assert_eq!(
            d.exp0_in_gletj.sequent,
            Sequent::new([p.clone().circ(), p.clone().neg(), p.clone()], [])
        );
        assert!(check_sequent_proof(CalculusId::GB, &d.exp1_in_gb).is_ok());
        assert_eq!(d.exp1_in_gb.rule, RuleId::Cut);
    }
}
