use thiserror::Error;

use super::convert::is_redundant;
use super::segments::measure_of;
use super::{
    apply_conversion, check_deduction, find_segments, lower_exp_consequences, measure,
    ConversionKind, Deduction, NdInvalidAt, NdSystem, NormalizationMeasure, Segment,
};

const STEP_LIMIT: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationStep {
    pub kind: ConversionKind,
    pub site: Vec<usize>,
    pub before: NormalizationMeasure,
    pub after: NormalizationMeasure,
}

#[derive(Clone, Debug)]
pub struct Normalization {
    pub deduction: Deduction,
    /// One entry per conversion, in order.
    pub steps: Vec<NormalizationStep>,
    /// Steps whose measure did not strictly decrease.
    pub violations: usize,
}

impl Normalization {
    /// The measure before the first step followed by the measure after each.
    pub fn trace(&self) -> Vec<NormalizationMeasure> {
        let mut out: Vec<_> = self.steps.first().map(|s| s.before).into_iter().collect();
        out.extend(self.steps.iter().map(|s| s.after));
        if out.is_empty() {
            out.push(measure(&self.deduction));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error(transparent)]
    Invalid(#[from] NdInvalidAt),
    #[error("no normal form within {0} conversions")]
    StepLimit(usize),
}

/// Drop redundant del-rule applications until none is left.
pub fn remove_redundant_dels(d: &Deduction) -> Deduction {
    let mut cur = d.clone();
    loop {
        let mut site = None;
        cur.visit(&mut |path, n| {
            if site.is_none() && n.rule().is_some_and(|r| r.is_del()) && is_redundant(n) {
                site = Some(path.to_vec());
            }
        });
        let Some(site) = site else {
            return cur;
        };
        cur = apply_conversion(&cur, &site, ConversionKind::Simplification)
            .expect("redundant del-rule simplifies");
    }
}

fn is_above(upper: &Segment, lower: &Segment) -> bool {
    let top = lower.top();
    upper
        .path
        .iter()
        .any(|p| p.len() > top.len() && p.starts_with(top))
}

/// Critical cuts in the order they are tried: top cuts from rightmost to
/// leftmost, then the remaining ones the same way.
fn candidates(segs: &[Segment], n: usize) -> Vec<&Segment> {
    let critical: Vec<&Segment> = segs
        .iter()
        .filter(|s| s.is_maximal && s.cutrank == n)
        .collect();
    let (mut top, mut rest): (Vec<&Segment>, Vec<&Segment>) = critical
        .iter()
        .partition(|s| !critical.iter().any(|o| is_above(o, s)));
    top.sort_by(|a, b| b.top().cmp(a.top()));
    rest.sort_by(|a, b| b.top().cmp(a.top()));
    top.extend(rest);
    top
}

/// Normalize a valid deduction.
///
/// `EXP` conclusions are lowered and redundant del-rules dropped first.
/// Then the rightmost top critical cut is converted, by a detour
/// conversion when it has length one and by a permutation otherwise. If
/// that conversion does not decrease `(n, m)` the next critical cut is
/// tried; a step where none does is counted as a violation.
pub fn normalize(system: NdSystem, d: &Deduction) -> Result<Normalization, NormalizeError> {
    check_deduction(system, d)?;
    let mut cur = remove_redundant_dels(&lower_exp_consequences(d));
    let mut steps = Vec::new();
    let mut violations = 0;
    loop {
        let segs = find_segments(&cur);
        let before = measure_of(&segs);
        let cands = candidates(&segs, before.n);
        if cands.is_empty() {
            break;
        }
        if steps.len() >= STEP_LIMIT {
            return Err(NormalizeError::StepLimit(STEP_LIMIT));
        }
        let mut fallback = None;
        let mut chosen = None;
        for s in cands {
            let kind = if s.length == 1 {
                ConversionKind::Detour
            } else {
                ConversionKind::Permutation
            };
            let site = s.elim_site().expect("maximal segment").to_vec();
            let Ok(next) = apply_conversion(&cur, &site, kind) else {
                continue;
            };
            let after = measure(&next);
            let step = NormalizationStep {
                kind,
                site,
                before,
                after,
            };
            if after < before {
                chosen = Some((next, step));
                break;
            }
            if fallback.is_none() {
                fallback = Some((next, step));
            }
        }
        let (next, step) = match chosen {
            Some(c) => c,
            None => {
                violations += 1;
                fallback.expect("some conversion applies to a cut")
            }
        };
        cur = next;
        steps.push(step);
    }
    Ok(Normalization {
        deduction: cur,
        steps,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Formula, Language};
    use crate::nd::NdRule;

    fn f(s: &str) -> Formula {
        parse(s, Language::LJ).unwrap()
    }

    #[test]
    fn and_detour_normalizes_to_assumption() {
        let d = Deduction::infer(
            NdRule::AndE1,
            f("p"),
            vec![Deduction::infer(
                NdRule::AndI,
                f("p & q"),
                vec![Deduction::open(f("p")), Deduction::open(f("q"))],
            )],
        );
        let n = normalize(NdSystem::NLETJ, &d).unwrap();
        assert_eq!(n.deduction, Deduction::open(f("p")));
        assert_eq!(n.trace(), vec![NormalizationMeasure { n: 1, m: 1 }, NormalizationMeasure::default()]);
    }

    #[test]
    fn implication_detour_substitutes() {
        // (p -> p & p) applied to p, then projected
        let body = Deduction::infer(
            NdRule::AndI,
            f("p & p"),
            vec![Deduction::hyp(f("p"), "u"), Deduction::hyp(f("p"), "u")],
        );
        let lam = Deduction::infer_discharging(NdRule::ToI, f("p -> p & p"), vec![body], vec!["u".into()]);
        let app = Deduction::infer(NdRule::ToE, f("p & p"), vec![lam, Deduction::open(f("p"))]);
        let d = Deduction::infer(NdRule::AndE2, f("p"), vec![app]);
        let n = normalize(NdSystem::NLETJ, &d).unwrap();
        assert_eq!(n.deduction, Deduction::open(f("p")));
        assert_eq!(n.violations, 0);
    }

    #[test]
    fn normal_input_unchanged() {
        let d = Deduction::infer(
            NdRule::AndI,
            f("p & q"),
            vec![Deduction::open(f("p")), Deduction::open(f("q"))],
        );
        let n = normalize(NdSystem::NLETJ, &d).unwrap();
        assert_eq!(n.deduction, d);
        assert!(n.steps.is_empty());
    }
}
