use letproof::cutelim::cut_eliminate;
use letproof::formula::{gsf_closure, gsf_step, parse, render, weight, Formula, Language, RenderFormat};
use letproof::generate::{random_cut_free_proof, random_deduction, random_proof_with_cuts};
use letproof::interchange::{
    deduction_from_str, deduction_to_string, sequent_proof_from_str, sequent_proof_to_string,
};
use letproof::nd::{check_deduction, find_segments, normalize, NdSystem};
use letproof::search::{decide, verify_gsf_property, DecideResult, SearchBudget};
use letproof::sequent::{check_sequent_proof, parse_sequent, CalculusId, Sequent};
use letproof::translate::{disjunction, nd_calculus, nd_to_sequent, sequent_to_nd};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn formula(lang: Language) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just("p"), Just("q"), Just("r")].prop_map(Formula::atom);
    leaf.prop_recursive(4, 24, 2, move |inner| {
        let mut ops = vec![
            inner.clone().prop_map(Formula::neg).boxed(),
            inner.clone().prop_map(Formula::circ).boxed(),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)).boxed(),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)).boxed(),
        ];
        if lang == Language::LJ {
            ops.push((inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)).boxed());
        }
        proptest::strategy::Union::new(ops)
    })
}

fn small_goal(calc: CalculusId) -> impl Strategy<Value = Sequent> {
    let lang = calc.language();
    let succ_max = if calc.is_multi() { 2 } else { 1 };
    (
        prop::collection::vec(formula(lang).prop_filter("light", |f| weight(f) <= 3), 0..3),
        prop::collection::vec(formula(lang).prop_filter("light", |f| weight(f) <= 3), 0..=succ_max),
    )
        .prop_map(|(a, s)| Sequent::new(a, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ascii_round_trip(f in formula(Language::LJ)) {
        let text = render(&f, RenderFormat::Ascii);
        prop_assert_eq!(parse(&text, Language::LJ).unwrap(), f.clone());
        prop_assert!(!render(&f, RenderFormat::Latex).is_empty());
    }

    #[test]
    fn weight_zero_exactly_on_literals(f in formula(Language::LJ)) {
        prop_assert_eq!(weight(&f) == 0, f.is_literal());
    }

    #[test]
    fn gsf_closure_is_closed(f in formula(Language::LJ)) {
        let c = gsf_closure([&f]);
        prop_assert!(c.contains(&f));
        for g in &c {
            for h in gsf_step(g) {
                prop_assert!(c.contains(&h));
            }
        }
    }

    #[test]
    fn sequent_text_round_trip(s in small_goal(CalculusId::GLETF)) {
        prop_assert_eq!(parse_sequent(&s.to_string(), Language::LF).unwrap(), s);
    }

    #[test]
    fn decide_is_sound_and_monotone(s in small_goal(CalculusId::GLETJ), extra in formula(Language::LJ)) {
        let calc = CalculusId::GLETJ;
        let r = decide(calc, &s, SearchBudget::default()).unwrap();
        if let DecideResult::Provable { proof, .. } = r {
            prop_assert!(check_sequent_proof(calc, &proof).is_ok());
            prop_assert!(verify_gsf_property(&proof).is_ok());
            let mut bigger = s.clone();
            bigger.ante.insert(extra);
            prop_assert!(decide(calc, &bigger, SearchBudget::default()).unwrap().is_provable());
        }
    }

    #[test]
    fn decide_letf_proofs_translate(s in small_goal(CalculusId::GLETF)) {
        let calc = CalculusId::GLETF;
        if let DecideResult::Provable { proof, .. } = decide(calc, &s, SearchBudget::default()).unwrap() {
            let d = sequent_to_nd(calc, &proof).unwrap();
            let c = check_deduction(NdSystem::NLETF, &d).unwrap();
            prop_assert_eq!(c.conclusion, disjunction(&s.succ));
            prop_assert!(c.open_assumptions.is_subset(&s.ante));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cut_elimination_preserves_end_sequent(seed in any::<u64>(), multi in any::<bool>()) {
        let calc = if multi { CalculusId::GLETF } else { CalculusId::GLETJ };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_proof_with_cuts(&mut rng, calc, 3, 5);
        let q = cut_eliminate(calc, &p).unwrap();
        prop_assert!(check_sequent_proof(calc, &q).is_ok());
        prop_assert!(q.is_cut_free());
        prop_assert_eq!(&q.sequent, &p.sequent);
    }

    #[test]
    fn normalization_yields_normal_deductions(seed in any::<u64>(), f in any::<bool>()) {
        let system = if f { NdSystem::NLETF } else { NdSystem::NLETJ };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_deduction(&mut rng, system, 3, 6);
        let before = check_deduction(system, &d).unwrap();
        let n = normalize(system, &d).unwrap();
        let after = check_deduction(system, &n.deduction).unwrap();
        prop_assert_eq!(after.conclusion, before.conclusion);
        prop_assert!(after.open_assumptions.is_subset(&before.open_assumptions));
        prop_assert!(find_segments(&n.deduction).iter().all(|s| !s.is_maximal));
    }

    #[test]
    fn deductions_translate_to_sequent_proofs(seed in any::<u64>(), f in any::<bool>()) {
        let system = if f { NdSystem::NLETF } else { NdSystem::NLETJ };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_deduction(&mut rng, system, 3, 6);
        let c = check_deduction(system, &d).unwrap();
        let p = nd_to_sequent(system, &d).unwrap();
        prop_assert!(check_sequent_proof(nd_calculus(system), &p).is_ok());
        prop_assert_eq!(&p.sequent.ante, &c.open_assumptions);
    }

    #[test]
    fn interchange_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_cut_free_proof(&mut rng, CalculusId::GLETF, 3, 5);
        let (calc, q) = sequent_proof_from_str(&sequent_proof_to_string(CalculusId::GLETF, &p), None).unwrap();
        prop_assert_eq!(calc, CalculusId::GLETF);
        prop_assert_eq!(q, p);
        let d = random_deduction(&mut rng, NdSystem::NLETJ, 3, 5);
        let (sys, e) = deduction_from_str(&deduction_to_string(NdSystem::NLETJ, &d), None).unwrap();
        prop_assert_eq!(sys, NdSystem::NLETJ);
        prop_assert_eq!(e, d);
    }
}
