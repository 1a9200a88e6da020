use std::fmt;

use thiserror::Error;

use super::{Deduction, Fresh, NdRule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConversionKind {
    /// Remove a cut of length one: an introduction (or `EXP`/`CONS`)
    /// followed by an elimination.
    Detour,
    /// Move an elimination above the del-rule concluding its major premise.
    Permutation,
    /// Drop a del-rule application whose minor premise discharges nothing.
    Simplification,
}

impl fmt::Display for ConversionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConversionKind::Detour => "detour",
            ConversionKind::Permutation => "permutation",
            ConversionKind::Simplification => "simplification",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConversionError {
    #[error("no node at {0:?}")]
    NoNode(Vec<usize>),
    #[error("no {kind} redex at {site:?}: {detail}")]
    Mismatch {
        kind: ConversionKind,
        site: Vec<usize>,
        detail: String,
    },
}

/// Rewrite the redex at `site`.
///
/// For detours and permutations `site` is the elimination whose major
/// premise ends the cut; for simplifications it is the del-rule.
pub fn apply_conversion(
    d: &Deduction,
    site: &[usize],
    kind: ConversionKind,
) -> Result<Deduction, ConversionError> {
    let node = d.at(site).ok_or_else(|| ConversionError::NoNode(site.to_vec()))?;
    let mismatch = |detail: &str| ConversionError::Mismatch {
        kind,
        site: site.to_vec(),
        detail: detail.to_string(),
    };
    let mut fresh = Fresh::for_deduction(d);
    let replacement = match kind {
        ConversionKind::Detour => detour(node, &mut fresh).map_err(mismatch)?,
        ConversionKind::Permutation => permute(node, &mut fresh).map_err(mismatch)?,
        ConversionKind::Simplification => simplify(node).map_err(mismatch)?,
    };
    let mut out = d.clone();
    *out.at_mut(site).expect("site exists") = replacement;
    Ok(out)
}

fn parts(d: &Deduction) -> Option<(NdRule, &[Deduction], &[String])> {
    match d {
        Deduction::Inference {
            rule,
            premises,
            markers,
            ..
        } => Some((*rule, premises, markers)),
        Deduction::Assumption { .. } => None,
    }
}

fn detour(r: &Deduction, fresh: &mut Fresh) -> Result<Deduction, &'static str> {
    use NdRule::*;
    let (er, rp, rm) = parts(r).ok_or("site is an assumption")?;
    if !er.is_elim() {
        return Err("site is not an elimination");
    }
    let (ir, ip, im) = parts(&rp[0]).ok_or("major premise is an assumption")?;
    let out = match (ir, er) {
        (AndI, AndE1) | (NegOrI, NegOrE1) | (NegToI, NegToE1) | (NegNegI, NegNegE) => ip[0].clone(),
        (AndI, AndE2) | (NegOrI, NegOrE2) | (NegToI, NegToE2) => ip[1].clone(),
        (OrI1, OrE) | (NegAndI1, NegAndE) => rp[1].substitute(&rm[0], &ip[0], fresh),
        (OrI2, OrE) | (NegAndI2, NegAndE) => rp[2].substitute(&rm[1], &ip[0], fresh),
        (ToI, ToE) => ip[0].substitute(&im[0], &rp[1], fresh),
        (Exp | Cons, _) => Deduction::infer(ir, r.formula().clone(), ip.to_vec()),
        _ => return Err("major premise is not introduced by the matching rule"),
    };
    Ok(out)
}

fn permute(r: &Deduction, fresh: &mut Fresh) -> Result<Deduction, &'static str> {
    let (er, rp, rm) = parts(r).ok_or("site is an assumption")?;
    if !er.is_elim() {
        return Err("site is not an elimination");
    }
    let (dr, dp, dm) = parts(&rp[0]).ok_or("major premise is an assumption")?;
    if !dr.is_del() {
        return Err("major premise is not concluded by a del-rule");
    }
    let minors = dr.minor_premises();
    let mut premises = dp.to_vec();
    for (k, &i) in minors.iter().enumerate() {
        let mut copy = Deduction::Inference {
            rule: er,
            formula: r.formula().clone(),
            premises: rp.to_vec(),
            markers: rm.to_vec(),
        };
        if k > 0 {
            if let Deduction::Inference { premises, .. } = &mut copy {
                premises[0] = Deduction::open(premises[0].formula().clone());
            }
            copy = fresh.freshen(&copy);
        }
        if let Deduction::Inference { premises: cp, .. } = &mut copy {
            cp[0] = dp[i].clone();
        }
        premises[i] = copy;
    }
    Ok(Deduction::Inference {
        rule: dr,
        formula: r.formula().clone(),
        premises,
        markers: dm.to_vec(),
    })
}

fn simplify(d: &Deduction) -> Result<Deduction, &'static str> {
    let (rule, ps, ms) = parts(d).ok_or("site is an assumption")?;
    if !rule.is_del() {
        return Err("site is not a del-rule");
    }
    for (k, &i) in rule.minor_premises().iter().enumerate() {
        if ps[i].class_size(&ms[k]) == 0 {
            return Ok(ps[i].clone());
        }
    }
    Err("every minor premise discharges an assumption")
}

/// Whether the del-rule at the root of `d` is redundant.
pub(crate) fn is_redundant(d: &Deduction) -> bool {
    simplify(d).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Formula, Language};
    use crate::nd::{check_deduction, NdSystem};

    fn f(s: &str) -> Formula {
        parse(s, Language::LJ).unwrap()
    }

    #[test]
    fn neg_or_detour() {
        let intro = Deduction::infer(
            NdRule::NegOrI,
            f("~(p | q)"),
            vec![Deduction::open(f("~p")), Deduction::open(f("~q"))],
        );
        let d = Deduction::infer(NdRule::NegOrE1, f("~p"), vec![intro]);
        let out = apply_conversion(&d, &[], ConversionKind::Detour).unwrap();
        assert_eq!(out, Deduction::open(f("~p")));
    }

    #[test]
    fn pem_permutation_duplicates_elimination() {
        let pq = f("p & q");
        let pem = Deduction::infer_discharging(
            NdRule::Pem,
            pq.clone(),
            vec![
                Deduction::open(f("@r")),
                Deduction::open(pq.clone()),
                Deduction::open(pq.clone()),
            ],
            vec!["u".into(), "v".into()],
        );
        let d = Deduction::infer(NdRule::AndE1, f("p"), vec![pem]);
        let out = apply_conversion(&d, &[], ConversionKind::Permutation).unwrap();
        assert_eq!(out.rule(), Some(NdRule::Pem));
        assert_eq!(out.premises()[1].rule(), Some(NdRule::AndE1));
        assert_eq!(out.premises()[2].rule(), Some(NdRule::AndE1));
        let c = check_deduction(NdSystem::NLETJ, &out).unwrap();
        assert_eq!(c.conclusion, f("p"));
    }

    #[test]
    fn vacuous_neg_and_elimination_is_dropped() {
        let d = Deduction::infer_discharging(
            NdRule::NegAndE,
            f("r"),
            vec![
                Deduction::open(f("~(p & q)")),
                Deduction::open(f("r")),
                Deduction::hyp(f("~q"), "v"),
            ],
            vec!["u".into(), "v".into()],
        );
        let out = apply_conversion(&d, &[], ConversionKind::Simplification).unwrap();
        assert_eq!(out, Deduction::open(f("r")));
    }

    #[test]
    fn wrong_site_is_rejected() {
        let d = Deduction::open(f("p"));
        assert!(apply_conversion(&d, &[], ConversionKind::Detour).is_err());
        assert!(apply_conversion(&d, &[0], ConversionKind::Detour).is_err());
    }
}
