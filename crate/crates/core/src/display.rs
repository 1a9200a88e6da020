//! Plain-text and LaTeX renderings of proofs.
//!
//! LaTeX output uses `bussproofs`: each proof is one `prooftree`
//! environment; a leaf is `\AxiomC`, an inference is `\RightLabel` followed
//! by `\UnaryInfC`, `\BinaryInfC` or `\TrinaryInfC`. Sequent axioms (`Id`,
//! `EXP0`) are drawn as a labelled inference from an empty `\AxiomC{}`.
//! Discharged assumptions are written `[A]^{u}` and the discharging rule
//! label lists its markers as a superscript.

use std::fmt::Write;

use crate::formula::{render, RenderFormat};
use crate::nd::Deduction;
use crate::sequent::SequentProof;

fn infc(arity: usize) -> &'static str {
    match arity {
        1 => "\\UnaryInfC",
        2 => "\\BinaryInfC",
        3 => "\\TrinaryInfC",
        _ => unreachable!("rules have at most three premises"),
    }
}

fn latex_marker(m: &str) -> String {
    m.replace('_', "\\_")
}

/// One line per node, premises indented below their conclusion.
pub fn sequent_proof_text(p: &SequentProof) -> String {
    let mut out = String::new();
    seq_text(p, 0, &mut out);
    out
}

fn seq_text(p: &SequentProof, depth: usize, out: &mut String) {
    let _ = write!(out, "{:indent$}{}  [{}", "", p.sequent, p.rule.name(), indent = 2 * depth);
    if let Some(f) = &p.principal {
        let _ = write!(out, " {}", render(f, RenderFormat::Ascii));
    }
    out.push_str("]\n");
    for q in &p.premises {
        seq_text(q, depth + 1, out);
    }
}

pub fn sequent_proof_latex(p: &SequentProof) -> String {
    let mut out = String::from("\\begin{prooftree}\n");
    seq_latex(p, &mut out);
    out.push_str("\\end{prooftree}\n");
    out
}

fn seq_latex(p: &SequentProof, out: &mut String) {
    if p.premises.is_empty() {
        out.push_str("\\AxiomC{}\n");
    }
    for q in &p.premises {
        seq_latex(q, out);
    }
    let _ = writeln!(out, "\\RightLabel{{\\scriptsize ${}$}}", p.rule.label());
    let _ = writeln!(
        out,
        "{}{{${}$}}",
        infc(p.premises.len().max(1)),
        p.sequent.render(RenderFormat::Latex)
    );
}

/// One line per node, premises indented below their conclusion.
/// Discharged assumptions are shown as `[A]^u`.
pub fn deduction_text(d: &Deduction) -> String {
    let mut out = String::new();
    ded_text(d, 0, &mut out);
    out
}

fn ded_text(d: &Deduction, depth: usize, out: &mut String) {
    let pad = 2 * depth;
    match d {
        Deduction::Assumption {
            formula,
            marker,
            discharged,
        } => {
            let f = render(formula, RenderFormat::Ascii);
            let _ = match (marker, discharged) {
                (Some(m), true) => writeln!(out, "{:pad$}[{f}]^{m}", ""),
                (Some(m), false) => writeln!(out, "{:pad$}{f}  (open, {m})", ""),
                (None, _) => writeln!(out, "{:pad$}{f}  (open)", ""),
            };
        }
        Deduction::Inference {
            rule,
            formula,
            premises,
            markers,
        } => {
            let _ = write!(out, "{:pad$}{}  [{}", "", render(formula, RenderFormat::Ascii), rule.name());
            if !markers.is_empty() {
                let _ = write!(out, " {}", markers.join(","));
            }
            out.push_str("]\n");
            for q in premises {
                ded_text(q, depth + 1, out);
            }
        }
    }
}

pub fn deduction_latex(d: &Deduction) -> String {
    let mut out = String::from("\\begin{prooftree}\n");
    ded_latex(d, &mut out);
    out.push_str("\\end{prooftree}\n");
    out
}

fn ded_latex(d: &Deduction, out: &mut String) {
    match d {
        Deduction::Assumption {
            formula,
            marker,
            discharged,
        } => {
            let f = render(formula, RenderFormat::Latex);
            let _ = match (marker, discharged) {
                (Some(m), true) => writeln!(out, "\\AxiomC{{$[{f}]^{{{}}}$}}", latex_marker(m)),
                _ => writeln!(out, "\\AxiomC{{${f}$}}"),
            };
        }
        Deduction::Inference {
            rule,
            formula,
            premises,
            markers,
        } => {
            for q in premises {
                ded_latex(q, out);
            }
            let label = if markers.is_empty() {
                rule.label().to_string()
            } else {
                let ms: Vec<String> = markers.iter().map(|m| latex_marker(m)).collect();
                format!("{}{{}}$^{{{}}}$", rule.label(), ms.join(","))
            };
            let _ = writeln!(out, "\\RightLabel{{\\scriptsize {label}}}");
            let _ = writeln!(
                out,
                "{}{{${}$}}",
                infc(premises.len()),
                render(formula, RenderFormat::Latex)
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;
    use crate::nd::NdRule;

    #[test]
    fn identity_text_and_latex() {
        let p = SequentProof::id(Formula::atom("p"));
        assert_eq!(sequent_proof_text(&p), "p => p  [Id p]\n");
        assert_eq!(
            sequent_proof_latex(&p),
            "\\begin{prooftree}\n\\AxiomC{}\n\\RightLabel{\\scriptsize $Id$}\n\\UnaryInfC{$p \\Rightarrow p$}\n\\end{prooftree}\n"
        );
    }

    #[test]
    fn discharge_text() {
        let p = Formula::atom("p");
        let d = Deduction::infer_discharging(
            NdRule::ToI,
            Formula::imp(p.clone(), p.clone()),
            vec![Deduction::hyp(p, "u")],
            vec!["u".into()],
        );
        assert_eq!(deduction_text(&d), "p -> p  [ToI u]\n  [p]^u\n");
        assert!(deduction_latex(&d).contains("\\AxiomC{$[p]^{u}$}"));
    }
}
