//! Random corpora: formulas, goals, forward-built sequent proofs with and
//! without cuts, and natural deductions.
//!
//! Everything is driven by a caller-supplied RNG so corpora are
//! reproducible from a seed.

mod nd;

pub use nd::random_deduction;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::formula::{weight, Formula, Language};
use crate::sequent::{
    infer, rule_admitted, weaken_to, CalculusId, FormulaSet, RuleId, Sequent, SequentProof,
};

const ATOMS: [&str; 3] = ["p", "q", "r"];

fn atom(rng: &mut impl Rng, atoms: usize) -> Formula {
    Formula::atom(ATOMS[rng.gen_range(0..atoms.clamp(1, ATOMS.len()))])
}

/// A random formula of nesting depth at most `depth` over the first
/// `atoms` of `p`, `q`, `r`.
pub fn random_formula(rng: &mut impl Rng, lang: Language, atoms: usize, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        return atom(rng, atoms);
    }
    let binary = if lang == Language::LJ { 5 } else { 4 };
    match rng.gen_range(0..binary) {
        0 => random_formula(rng, lang, atoms, depth - 1).neg(),
        1 => random_formula(rng, lang, atoms, depth - 1).circ(),
        2 => Formula::and(
            random_formula(rng, lang, atoms, depth - 1),
            random_formula(rng, lang, atoms, depth - 1),
        ),
        3 => Formula::or(
            random_formula(rng, lang, atoms, depth - 1),
            random_formula(rng, lang, atoms, depth - 1),
        ),
        _ => Formula::imp(
            random_formula(rng, lang, atoms, depth - 1),
            random_formula(rng, lang, atoms, depth - 1),
        ),
    }
}

/// A random formula whose weight does not exceed `max_weight`.
pub fn random_formula_of_weight(
    rng: &mut impl Rng,
    lang: Language,
    atoms: usize,
    max_weight: usize,
) -> Formula {
    loop {
        let f = random_formula(rng, lang, atoms, 4);
        if weight(&f) <= max_weight {
            return f;
        }
    }
}

/// A random goal respecting the succedent arity of `calc`, with every
/// formula of weight at most `max_weight`.
pub fn random_goal(
    rng: &mut impl Rng,
    calc: CalculusId,
    atoms: usize,
    max_weight: usize,
) -> Sequent {
    let lang = calc.language();
    let n_ante = rng.gen_range(0..=3);
    let n_succ = if calc.is_multi() {
        rng.gen_range(0..=2)
    } else {
        rng.gen_range(0..=1)
    };
    let ante: Vec<Formula> = (0..n_ante)
        .map(|_| random_formula_of_weight(rng, lang, atoms, max_weight))
        .collect();
    let succ: Vec<Formula> = (0..n_succ)
        .map(|_| random_formula_of_weight(rng, lang, atoms, max_weight))
        .collect();
    Sequent::new(ante, succ)
}

const FORWARD_RULES: [RuleId; 24] = [
    RuleId::LAnd,
    RuleId::RAnd,
    RuleId::LOr,
    RuleId::ROr1,
    RuleId::ROr2,
    RuleId::ROr,
    RuleId::LNegOr,
    RuleId::RNegOr,
    RuleId::LTo,
    RuleId::RTo,
    RuleId::LNegTo,
    RuleId::RNegTo,
    RuleId::LNegAnd,
    RuleId::RNegAnd1,
    RuleId::RNegAnd2,
    RuleId::RNegAnd,
    RuleId::Pem,
    RuleId::LNegNeg,
    RuleId::RNegNeg,
    RuleId::Exp1,
    RuleId::LNegCirc,
    RuleId::RNegCirc,
    RuleId::LW,
    RuleId::RW,
];

fn arity(rule: RuleId) -> usize {
    use RuleId::*;
    match rule {
        RAnd | LOr | RNegOr | LTo | RNegTo | LNegAnd | Pem | Exp1 => 2,
        _ => 1,
    }
}

/// Picks component formulas out of the premises so that rules decompose
/// formulas that are already there.
struct Picker<'a, R: Rng> {
    rng: &'a mut R,
    lang: Language,
    atoms: usize,
}

impl<R: Rng> Picker<'_, R> {
    fn from(&mut self, set: &FormulaSet) -> Formula {
        let v: Vec<&Formula> = set.iter().filter(|f| f.size() <= 7).collect();
        match v.choose(self.rng) {
            Some(f) if self.rng.gen_bool(0.85) => (*f).clone(),
            _ => random_formula(self.rng, self.lang, self.atoms, 1),
        }
    }

    /// A formula `x` such that `~x` is in `set`, when there is one.
    fn neg_from(&mut self, set: &FormulaSet) -> Formula {
        let v: Vec<&Formula> = set
            .iter()
            .filter_map(|f| match f {
                Formula::Neg(x) if x.size() <= 6 => Some(&**x),
                _ => None,
            })
            .collect();
        match v.choose(self.rng) {
            Some(f) if self.rng.gen_bool(0.85) => (*f).clone(),
            _ => atom(self.rng, self.atoms),
        }
    }
}

fn principal_for<R: Rng>(rule: RuleId, prems: &[SequentProof], pk: &mut Picker<'_, R>) -> Formula {
    use RuleId::*;
    let ante = |i: usize| &prems[i].sequent.ante;
    let succ = |i: usize| &prems[i].sequent.succ;
    match rule {
        LAnd => {
            let (b, c) = (pk.from(ante(0)), pk.from(ante(0)));
            Formula::and(b, c)
        }
        RAnd => Formula::and(pk.from(succ(0)), pk.from(succ(1))),
        LOr => Formula::or(pk.from(ante(0)), pk.from(ante(1))),
        ROr1 => Formula::or(pk.from(succ(0)), random_formula(pk.rng, pk.lang, pk.atoms, 1)),
        ROr2 => Formula::or(random_formula(pk.rng, pk.lang, pk.atoms, 1), pk.from(succ(0))),
        ROr => Formula::or(pk.from(succ(0)), pk.from(succ(0))),
        LNegOr => Formula::or(pk.neg_from(ante(0)), pk.neg_from(ante(0))).neg(),
        RNegOr => Formula::or(pk.neg_from(succ(0)), pk.neg_from(succ(1))).neg(),
        LTo => Formula::imp(pk.from(succ(0)), pk.from(ante(1))),
        RTo => Formula::imp(pk.from(ante(0)), pk.from(succ(0))),
        LNegTo => Formula::imp(pk.from(ante(0)), pk.neg_from(ante(0))).neg(),
        RNegTo => Formula::imp(pk.from(succ(0)), pk.neg_from(succ(1))).neg(),
        LNegAnd => Formula::and(pk.neg_from(ante(0)), pk.neg_from(ante(1))).neg(),
        RNegAnd1 => Formula::and(pk.neg_from(succ(0)), atom(pk.rng, pk.atoms)).neg(),
        RNegAnd2 => Formula::and(atom(pk.rng, pk.atoms), pk.neg_from(succ(0))).neg(),
        RNegAnd => Formula::and(pk.neg_from(succ(0)), pk.neg_from(succ(0))).neg(),
        Pem => pk.from(ante(0)).circ(),
        Exp1 => pk.from(succ(0)).circ(),
        LNegNeg => pk.from(ante(0)).neg().neg(),
        RNegNeg => pk.from(succ(0)).neg().neg(),
        LNegCirc => match pk.from(succ(0)) {
            c @ Formula::Circ(_) => c.neg(),
            other => other.circ().neg(),
        },
        RNegCirc => match pk.from(ante(0)) {
            c @ Formula::Circ(_) => c.neg(),
            other => other.circ().neg(),
        },
        LW | RW => random_formula(pk.rng, pk.lang, pk.atoms, 2),
        _ => atom(pk.rng, pk.atoms),
    }
}

/// A random valid cut-free proof built forward. `depth` bounds the nesting
/// of rule applications; weakenings inserted to merge premise contexts are
/// not counted.
pub fn random_cut_free_proof(
    rng: &mut impl Rng,
    calc: CalculusId,
    atoms: usize,
    depth: usize,
) -> SequentProof {
    let lang = calc.language();
    if depth <= 1 || rng.gen_bool(0.15) {
        let f = random_formula(rng, lang, atoms, 1);
        return SequentProof::id(f);
    }
    for _ in 0..8 {
        let rule = *FORWARD_RULES.choose(rng).expect("nonempty");
        if !rule_admitted(calc, rule) {
            continue;
        }
        let prems: Vec<SequentProof> = (0..arity(rule))
            .map(|_| random_cut_free_proof(rng, calc, atoms, depth - 1))
            .collect();
        let principal = {
            let mut pk = Picker {
                rng: &mut *rng,
                lang,
                atoms,
            };
            principal_for(rule, &prems, &mut pk)
        };
        if let Ok(p) = infer(calc, rule, Some(principal), prems) {
            return p;
        }
    }
    SequentProof::id(random_formula(rng, lang, atoms, 1))
}

/// A proof of `G => X` (with `G`'s succedent context when multi) whose
/// last rule introduces `X` on the right, together with a proof of
/// `X, G => D` whose last rule introduces `X` on the left.
fn cut_pair(
    rng: &mut impl Rng,
    calc: CalculusId,
    base: &SequentProof,
) -> Option<(Formula, SequentProof, SequentProof)> {
    let s = &base.sequent;
    let gamma: Vec<&Formula> = s.ante.iter().collect();
    if gamma.is_empty() {
        return None;
    }
    let ctx_succ = if calc.is_multi() {
        s.succ.clone()
    } else {
        FormulaSet::new()
    };
    let id_in_ctx = |f: &Formula| {
        let target = Sequent {
            ante: s.ante.clone(),
            succ: {
                let mut x = ctx_succ.clone();
                x.insert(f.clone());
                x
            },
        };
        weaken_to(SequentProof::id(f.clone()), &target, calc).ok()
    };
    let b = (*gamma.choose(rng)?).clone();
    let c = (*gamma.choose(rng)?).clone();
    let choice = rng.gen_range(0..5);
    let (x, left) = match choice {
        0 => {
            let x = Formula::and(b.clone(), c.clone());
            let l = infer(calc, RuleId::RAnd, Some(x.clone()), vec![id_in_ctx(&b)?, id_in_ctx(&c)?]);
            (x, l.ok()?)
        }
        1 => {
            let x = Formula::or(b.clone(), c.clone());
            let rule = if calc.is_multi() { RuleId::ROr } else { RuleId::ROr1 };
            (x.clone(), infer(calc, rule, Some(x), vec![id_in_ctx(&b)?]).ok()?)
        }
        2 => {
            let x = b.clone().neg().neg();
            (x.clone(), infer(calc, RuleId::RNegNeg, Some(x), vec![id_in_ctx(&b)?]).ok()?)
        }
        3 if calc.language() == Language::LJ => {
            let x = Formula::imp(c.clone(), b.clone());
            let prem = weaken_to(
                SequentProof::id(b.clone()),
                &Sequent {
                    ante: s.ante.clone(),
                    succ: [b.clone()].into(),
                },
                calc,
            )
            .ok()?;
            (x.clone(), infer(calc, RuleId::RTo, Some(x), vec![prem]).ok()?)
        }
        _ => {
            // ~(y | z) from ~y, ~z in the context, or ~~b otherwise
            let negs: Vec<Formula> = gamma
                .iter()
                .filter_map(|f| match f {
                    Formula::Neg(y) => Some((**y).clone()),
                    _ => None,
                })
                .collect();
            if let (Some(y), Some(z)) = (negs.choose(rng).cloned(), negs.choose(rng).cloned()) {
                let x = Formula::or(y.clone(), z.clone()).neg();
                let l = infer(
                    calc,
                    RuleId::RNegOr,
                    Some(x.clone()),
                    vec![id_in_ctx(&y.neg())?, id_in_ctx(&z.neg())?],
                );
                (x, l.ok()?)
            } else {
                let x = b.clone().neg().neg();
                (x.clone(), infer(calc, RuleId::RNegNeg, Some(x), vec![id_in_ctx(&b)?]).ok()?)
            }
        }
    };
    let left_rule = match &x {
        Formula::And(..) => RuleId::LAnd,
        Formula::Or(..) => RuleId::LOr,
        Formula::Imp(..) => RuleId::LTo,
        Formula::Neg(y) => match &**y {
            Formula::Neg(_) => RuleId::LNegNeg,
            _ => RuleId::LNegOr,
        },
        _ => return None,
    };
    let right = if left_rule == RuleId::LOr || left_rule == RuleId::LTo {
        // two premises: the base twice, or a proof of the antecedent of the
        // implication and the base
        let extra = if left_rule == RuleId::LTo {
            let Formula::Imp(a, _) = &x else { return None };
            let target = Sequent {
                ante: s.ante.clone(),
                succ: [(**a).clone()].into(),
            };
            weaken_to(SequentProof::id((**a).clone()), &target, calc).ok()?
        } else {
            base.clone()
        };
        infer(calc, left_rule, Some(x.clone()), vec![extra, base.clone()]).ok()?
    } else {
        infer(calc, left_rule, Some(x.clone()), vec![base.clone()]).ok()?
    };
    Some((x, left, right))
}

/// Apply a few rules below `p` that keep `keep` in the antecedent (when
/// `left_side` is false) or the succedent, raising the rank of a later cut.
fn pad(
    rng: &mut impl Rng,
    calc: CalculusId,
    mut p: SequentProof,
    atoms: usize,
    steps: usize,
) -> SequentProof {
    let lang = calc.language();
    for _ in 0..steps {
        let choice = rng.gen_range(0..3);
        let ante: Vec<Formula> = p.sequent.ante.iter().cloned().collect();
        let next = match choice {
            0 => {
                let f = random_formula(rng, lang, atoms, 1);
                infer(calc, RuleId::LW, Some(f), vec![p.clone()])
            }
            1 => match ante.choose(rng) {
                Some(b) => infer(calc, RuleId::LNegNeg, Some(b.clone().neg().neg()), vec![p.clone()]),
                None => continue,
            },
            _ => match (ante.choose(rng), ante.choose(rng)) {
                (Some(b), Some(c)) => infer(
                    calc,
                    RuleId::LAnd,
                    Some(Formula::and(b.clone(), c.clone())),
                    vec![p.clone()],
                ),
                _ => continue,
            },
        };
        if let Ok(q) = next {
            p = q;
        }
    }
    p
}

/// A valid proof carrying `cuts` stacked cuts above a forward-built
/// cut-free proof.
pub fn insert_cuts(
    rng: &mut impl Rng,
    calc: CalculusId,
    base: SequentProof,
    cuts: usize,
    atoms: usize,
) -> SequentProof {
    let mut p = base;
    for _ in 0..cuts {
        let Some((x, left, right)) = cut_pair(rng, calc, &p) else {
            continue;
        };
        let steps_l = rng.gen_range(0..=2);
        let steps_r = rng.gen_range(0..=2);
        let left = pad(rng, calc, left, atoms, steps_l);
        let right = pad(rng, calc, right, atoms, steps_r);
        if let Ok(q) = infer(calc, RuleId::Cut, Some(x), vec![left, right]) {
            p = q;
        }
    }
    p
}

/// A forward-built proof with between one and three cuts.
pub fn random_proof_with_cuts(
    rng: &mut impl Rng,
    calc: CalculusId,
    atoms: usize,
    depth: usize,
) -> SequentProof {
    loop {
        let base = random_cut_free_proof(rng, calc, atoms, depth);
        let n = rng.gen_range(1..=3);
        let p = insert_cuts(rng, calc, base, n, atoms);
        // a cut pair may reuse the proof below it on both sides, which
        // duplicates earlier cuts
        if (1..=3).contains(&p.count_rule(|r| r == RuleId::Cut)) {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequent::check_sequent_proof;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_proofs_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for calc in [CalculusId::GLETJ, CalculusId::GLETF] {
            for _ in 0..50 {
                let p = random_proof_with_cuts(&mut rng, calc, 3, 6);
                assert!(check_sequent_proof(calc, &p).is_ok(), "{p:?}");
                assert!(!p.is_cut_free());
            }
        }
    }
}
