//! JSON interchange for sequent proofs and deductions.
//!
//! A sequent proof node is
//! `{"rule", "sequent": {"ante", "succ"}, "principal", "premises"}`; a
//! deduction node is `{"kind": "assumption", "formula", "marker",
//! "discharged"}` or `{"kind": "inference", "rule", "formula", "markers",
//! "premises"}`. The root may carry `"system"`. Formulas are strings in the
//! ASCII syntax; the reserved atom `_f` is accepted.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{parse_with, render, Formula, Language, ParseError, ParseOptions, RenderFormat};
use crate::nd::{Deduction, NdRule, NdSystem};
use crate::sequent::{CalculusId, FormulaSet, RuleId, Sequent, SequentProof};

#[derive(Debug, Error)]
pub enum InterchangeError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("formula `{text}`: {source}")]
    Formula { text: String, source: ParseError },
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("unknown system `{0}`")]
    UnknownSystem(String),
    #[error("no system given in the document or by the caller")]
    MissingSystem,
}

/// `GB`, `GLETJ`, `GLETF` or `GLETF-printed`, case-insensitively.
pub fn calculus_from_name(s: &str) -> Option<CalculusId> {
    match s.to_ascii_lowercase().as_str() {
        "gb" => Some(CalculusId::GB),
        "gletj" => Some(CalculusId::GLETJ),
        "gletf" => Some(CalculusId::GLETF),
        "gletf-printed" => Some(CalculusId::GLETF_PRINTED),
        _ => None,
    }
}

pub fn calculus_name(calc: CalculusId) -> String {
    if calc == CalculusId::GLETF_PRINTED {
        "GLETF-printed".into()
    } else {
        calc.name().into()
    }
}

/// `NLETJ` or `NLETF`, case-insensitively.
pub fn nd_system_from_name(s: &str) -> Option<NdSystem> {
    match s.to_ascii_lowercase().as_str() {
        "nletj" => Some(NdSystem::NLETJ),
        "nletf" => Some(NdSystem::NLETF),
        _ => None,
    }
}

#[derive(Serialize, Deserialize)]
struct SeqJson {
    ante: Vec<String>,
    succ: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProofJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    system: Option<String>,
    rule: String,
    sequent: SeqJson,
    #[serde(default)]
    principal: Option<String>,
    #[serde(default)]
    premises: Vec<ProofJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum DedJson {
    Assumption {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        system: Option<String>,
        formula: String,
        #[serde(default)]
        marker: Option<String>,
        /// Defaults to whether a marker is present.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        discharged: Option<bool>,
    },
    Inference {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        system: Option<String>,
        rule: String,
        formula: String,
        #[serde(default)]
        markers: Vec<String>,
        #[serde(default)]
        premises: Vec<DedJson>,
    },
}

fn ascii(f: &Formula) -> String {
    render(f, RenderFormat::Ascii)
}

fn formula(text: &str) -> Result<Formula, InterchangeError> {
    let opts = ParseOptions {
        lang: Language::LJ,
        allow_reserved: true,
    };
    parse_with(text, opts).map_err(|source| InterchangeError::Formula {
        text: text.to_string(),
        source,
    })
}

fn formulas(v: &[String]) -> Result<FormulaSet, InterchangeError> {
    v.iter().map(|t| formula(t)).collect()
}

fn proof_to_json(p: &SequentProof) -> ProofJson {
    ProofJson {
        system: None,
        rule: p.rule.name().to_string(),
        sequent: SeqJson {
            ante: p.sequent.ante.iter().map(ascii).collect(),
            succ: p.sequent.succ.iter().map(ascii).collect(),
        },
        principal: p.principal.as_ref().map(ascii),
        premises: p.premises.iter().map(proof_to_json).collect(),
    }
}

fn proof_from_json(j: &ProofJson) -> Result<SequentProof, InterchangeError> {
    let rule = RuleId::from_name(&j.rule).ok_or_else(|| InterchangeError::UnknownRule(j.rule.clone()))?;
    Ok(SequentProof {
        sequent: Sequent {
            ante: formulas(&j.sequent.ante)?,
            succ: formulas(&j.sequent.succ)?,
        },
        rule,
        principal: j.principal.as_deref().map(formula).transpose()?,
        premises: j.premises.iter().map(proof_from_json).collect::<Result<_, _>>()?,
    })
}

pub fn sequent_proof_to_value(calc: CalculusId, p: &SequentProof) -> serde_json::Value {
    let mut j = proof_to_json(p);
    j.system = Some(calculus_name(calc));
    serde_json::to_value(j).expect("serializable")
}

/// Pretty-printed JSON document for `p`.
pub fn sequent_proof_to_string(calc: CalculusId, p: &SequentProof) -> String {
    let mut j = proof_to_json(p);
    j.system = Some(calculus_name(calc));
    serde_json::to_string_pretty(&j).expect("serializable")
}

/// Read a sequent proof. `system` overrides the document's own system.
pub fn sequent_proof_from_str(
    text: &str,
    system: Option<CalculusId>,
) -> Result<(CalculusId, SequentProof), InterchangeError> {
    let j: ProofJson = serde_json::from_str(text)?;
    let calc = match (system, &j.system) {
        (Some(c), _) => c,
        (None, Some(s)) => calculus_from_name(s).ok_or_else(|| InterchangeError::UnknownSystem(s.clone()))?,
        (None, None) => return Err(InterchangeError::MissingSystem),
    };
    Ok((calc, proof_from_json(&j)?))
}

fn ded_to_json(d: &Deduction) -> DedJson {
    match d {
        Deduction::Assumption {
            formula,
            marker,
            discharged,
        } => DedJson::Assumption {
            system: None,
            formula: ascii(formula),
            marker: marker.clone(),
            discharged: (*discharged != marker.is_some()).then_some(*discharged),
        },
        Deduction::Inference {
            rule,
            formula,
            premises,
            markers,
        } => DedJson::Inference {
            system: None,
            rule: rule.name().to_string(),
            formula: ascii(formula),
            markers: markers.clone(),
            premises: premises.iter().map(ded_to_json).collect(),
        },
    }
}

fn ded_from_json(j: &DedJson) -> Result<Deduction, InterchangeError> {
    Ok(match j {
        DedJson::Assumption {
            formula: f,
            marker,
            discharged,
            ..
        } => Deduction::Assumption {
            formula: formula(f)?,
            marker: marker.clone(),
            discharged: discharged.unwrap_or(marker.is_some()),
        },
        DedJson::Inference {
            rule,
            formula: f,
            markers,
            premises,
            ..
        } => Deduction::Inference {
            rule: NdRule::from_name(rule).ok_or_else(|| InterchangeError::UnknownRule(rule.clone()))?,
            formula: formula(f)?,
            premises: premises.iter().map(ded_from_json).collect::<Result<_, _>>()?,
            markers: markers.clone(),
        },
    })
}

fn rooted(system: NdSystem, d: &Deduction) -> DedJson {
    let mut j = ded_to_json(d);
    let name = Some(system.name().to_string());
    match &mut j {
        DedJson::Assumption { system, .. } | DedJson::Inference { system, .. } => *system = name,
    }
    j
}

pub fn deduction_to_value(system: NdSystem, d: &Deduction) -> serde_json::Value {
    serde_json::to_value(rooted(system, d)).expect("serializable")
}

pub fn deduction_to_string(system: NdSystem, d: &Deduction) -> String {
    serde_json::to_string_pretty(&rooted(system, d)).expect("serializable")
}

/// Read a deduction. `system` overrides the document's own system.
pub fn deduction_from_str(
    text: &str,
    system: Option<NdSystem>,
) -> Result<(NdSystem, Deduction), InterchangeError> {
    let j: DedJson = serde_json::from_str(text)?;
    let own = match &j {
        DedJson::Assumption { system, .. } | DedJson::Inference { system, .. } => system.clone(),
    };
    let sys = match (system, own) {
        (Some(s), _) => s,
        (None, Some(s)) => nd_system_from_name(&s).ok_or(InterchangeError::UnknownSystem(s))?,
        (None, None) => return Err(InterchangeError::MissingSystem),
    };
    Ok((sys, ded_from_json(&j)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequent::circ_conjunction_gb_with_cuts;
    use crate::translate::sequent_to_nd;

    #[test]
    fn sequent_round_trip() {
        let p = circ_conjunction_gb_with_cuts();
        let text = sequent_proof_to_string(CalculusId::GB, &p);
        let (calc, q) = sequent_proof_from_str(&text, None).unwrap();
        assert_eq!(calc, CalculusId::GB);
        assert_eq!(q, p);
    }

    #[test]
    fn deduction_round_trip_with_bot() {
        let d = sequent_to_nd(CalculusId::GB, &circ_conjunction_gb_with_cuts()).unwrap();
        let text = deduction_to_string(NdSystem::NLETJ, &d);
        assert!(text.contains("_f"));
        let (sys, e) = deduction_from_str(&text, None).unwrap();
        assert_eq!(sys, NdSystem::NLETJ);
        assert_eq!(e, d);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            sequent_proof_from_str(r#"{"rule":"Id","sequent":{"ante":["p"],"succ":["p"]}}"#, None),
            Err(InterchangeError::MissingSystem)
        ));
        assert!(matches!(
            sequent_proof_from_str(
                r#"{"system":"GB","rule":"Foo","sequent":{"ante":[],"succ":[]}}"#,
                None
            ),
            Err(InterchangeError::UnknownRule(_))
        ));
        assert!(matches!(
            deduction_from_str(r#"{"kind":"assumption","formula":"p &"}"#, Some(NdSystem::NLETJ)),
            Err(InterchangeError::Formula { .. })
        ));
        let (_, d) = deduction_from_str(
            r#"{"kind":"assumption","formula":"p","marker":"u"}"#,
            Some(NdSystem::NLETJ),
        )
        .unwrap();
        assert_eq!(d, Deduction::hyp(Formula::atom("p"), "u"));
    }
}
