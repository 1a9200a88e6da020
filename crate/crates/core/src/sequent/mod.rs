//! Set-based sequents and the calculi GB, GLET_J and GLET_F.

mod backward;
mod build;
mod check;
mod derivations;
mod parse;
mod schema;

use std::collections::BTreeSet;
use std::fmt;

use crate::formula::{render, weight, Formula, Language, RenderFormat};

pub use backward::{rule_instances_backward, BackwardInstance};
pub use build::{infer, weaken_to, BuildError};
pub use check::{check_sequent_proof, InvalidAt, InvalidReason};
pub use derivations::{
    build_propeq_derivations, circ_conjunction_gb_with_cuts, circ_conjunction_gletj_cut_free,
    exp0_from_exp1, exp1_from_exp0, PropEqDerivations,
};
pub use parse::{parse_sequent, SequentParseError};
pub use schema::{rule_admitted, schema, Part, RuleSchema, SchemaError};

pub type FormulaSet = BTreeSet<Formula>;

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequent {
    pub ante: FormulaSet,
    pub succ: FormulaSet,
}

impl Sequent {
    pub fn new<A, S>(ante: A, succ: S) -> Sequent
    where
        A: IntoIterator<Item = Formula>,
        S: IntoIterator<Item = Formula>,
    {
        Sequent {
            ante: ante.into_iter().collect(),
            succ: succ.into_iter().collect(),
        }
    }

    /// All formulas of the sequent, antecedent first.
    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.ante.iter().chain(self.succ.iter())
    }

    /// `self` is contained in `other` side by side.
    /// Sum of the weights of the formulas on both sides.
    pub fn weight(&self) -> usize {
        self.formulas().map(weight).sum()
    }

    pub fn is_subsequent_of(&self, other: &Sequent) -> bool {
        self.ante.is_subset(&other.ante) && self.succ.is_subset(&other.succ)
    }

    pub fn in_language(&self, lang: Language) -> bool {
        self.formulas().all(|f| f.belongs_to(lang))
    }

    pub fn render(&self, format: RenderFormat) -> String {
        let side = |set: &FormulaSet| {
            set.iter()
                .map(|f| render(f, format))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let arrow = match format {
            RenderFormat::Ascii => "=>",
            RenderFormat::Unicode => "⇒",
            RenderFormat::Latex => "\\Rightarrow",
        };
        let (a, s) = (side(&self.ante), side(&self.succ));
        match (a.is_empty(), s.is_empty()) {
            (true, true) => arrow.to_string(),
            (true, false) => format!("{arrow} {s}"),
            (false, true) => format!("{a} {arrow}"),
            (false, false) => format!("{a} {arrow} {s}"),
        }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(RenderFormat::Ascii))
    }
}

impl fmt::Debug for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Calculus {
    GB,
    GLETJ,
    GLETF,
}

/// Reading of the GLET_F rules for `~@`.
///
/// `Corrected` uses the premises `G => @A, D` (left) and `@A, G => D`
/// (right); `Printed` uses `G => A, D` and `A, G => D`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum NegCircVariant {
    #[default]
    Corrected,
    Printed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CalculusId {
    pub calculus: Calculus,
    /// Only meaningful for GLET_F.
    pub negcirc: NegCircVariant,
}

impl CalculusId {
    pub const GB: CalculusId = CalculusId {
        calculus: Calculus::GB,
        negcirc: NegCircVariant::Corrected,
    };
    pub const GLETJ: CalculusId = CalculusId {
        calculus: Calculus::GLETJ,
        negcirc: NegCircVariant::Corrected,
    };
    pub const GLETF: CalculusId = CalculusId {
        calculus: Calculus::GLETF,
        negcirc: NegCircVariant::Corrected,
    };
    pub const GLETF_PRINTED: CalculusId = CalculusId {
        calculus: Calculus::GLETF,
        negcirc: NegCircVariant::Printed,
    };

    /// GLET_F allows any number of succedent formulas; GB and GLET_J at most one.
    pub fn is_multi(self) -> bool {
        self.calculus == Calculus::GLETF
    }

    pub fn language(self) -> Language {
        match self.calculus {
            Calculus::GLETF => Language::LF,
            _ => Language::LJ,
        }
    }

    pub fn name(self) -> &'static str {
        match self.calculus {
            Calculus::GB => "GB",
            Calculus::GLETJ => "GLETJ",
            Calculus::GLETF => "GLETF",
        }
    }

    /// Succedent arity constraint of the calculus.
    pub fn respects_arity(self, s: &Sequent) -> bool {
        self.is_multi() || s.succ.len() <= 1
    }
}

impl fmt::Display for CalculusId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        if self.calculus == Calculus::GLETF && self.negcirc == NegCircVariant::Printed {
            f.write_str("(printed)")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    Id,
    Exp0,
    LW,
    RW,
    Cut,
    Mix,
    LAnd,
    RAnd,
    LOr,
    ROr1,
    ROr2,
    ROr,
    LNegOr,
    RNegOr,
    LTo,
    RTo,
    LNegTo,
    RNegTo,
    LNegAnd,
    RNegAnd1,
    RNegAnd2,
    RNegAnd,
    Pem,
    LNegNeg,
    RNegNeg,
    Exp1,
    LNegCirc,
    RNegCirc,
}

impl RuleId {
    pub const ALL: [RuleId; 28] = [
        RuleId::Id,
        RuleId::Exp0,
        RuleId::LW,
        RuleId::RW,
        RuleId::Cut,
        RuleId::Mix,
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
    ];

    /// Name used in the interchange format.
    pub fn name(self) -> &'static str {
        use RuleId::*;
        match self {
            Id => "Id",
            Exp0 => "EXP0",
            LW => "LW",
            RW => "RW",
            Cut => "Cut",
            Mix => "Mix",
            LAnd => "LAnd",
            RAnd => "RAnd",
            LOr => "LOr",
            ROr1 => "ROr1",
            ROr2 => "ROr2",
            ROr => "ROr",
            LNegOr => "LNegOr",
            RNegOr => "RNegOr",
            LTo => "LTo",
            RTo => "RTo",
            LNegTo => "LNegTo",
            RNegTo => "RNegTo",
            LNegAnd => "LNegAnd",
            RNegAnd1 => "RNegAnd1",
            RNegAnd2 => "RNegAnd2",
            RNegAnd => "RNegAnd",
            Pem => "PEM",
            LNegNeg => "LNegNeg",
            RNegNeg => "RNegNeg",
            Exp1 => "EXP1",
            LNegCirc => "LNegCirc",
            RNegCirc => "RNegCirc",
        }
    }

    /// Parse an interchange rule name; `LCirc1`/`LCirc2` are accepted as
    /// aliases of `EXP1`/`PEM`.
    pub fn from_name(s: &str) -> Option<RuleId> {
        match s {
            "LCirc1" => return Some(RuleId::Exp1),
            "LCirc2" => return Some(RuleId::Pem),
            _ => {}
        }
        RuleId::ALL.iter().copied().find(|r| r.name() == s)
    }

    /// Label used when typesetting proofs.
    pub fn label(self) -> &'static str {
        use RuleId::*;
        match self {
            Id => "Id",
            Exp0 => "EXP^\\circ",
            LW => "LW",
            RW => "RW",
            Cut => "Cut",
            Mix => "Mix",
            LAnd => "L\\land",
            RAnd => "R\\land",
            ROr | ROr1 | ROr2 => "R\\lor",
            RNegAnd | RNegAnd1 | RNegAnd2 => "R\\neg\\land",
            LOr => "L\\lor",
            LNegOr => "L\\neg\\lor",
            RNegOr => "R\\neg\\lor",
            LTo => "L\\to",
            RTo => "R\\to",
            LNegTo => "L\\neg\\to",
            RNegTo => "R\\neg\\to",
            LNegAnd => "L\\neg\\land",
            Pem => "PEM^\\circ",
            LNegNeg => "L\\neg\\neg",
            RNegNeg => "R\\neg\\neg",
            Exp1 => "EXP_1^\\circ",
            LNegCirc => "L\\neg\\circ",
            RNegCirc => "R\\neg\\circ",
        }
    }

    pub fn is_cut(self) -> bool {
        matches!(self, RuleId::Cut | RuleId::Mix)
    }

    pub fn is_structural(self) -> bool {
        matches!(
            self,
            RuleId::Id | RuleId::LW | RuleId::RW | RuleId::Cut | RuleId::Mix
        )
    }

    /// Logical rules whose principal formula sits in the antecedent.
    pub fn is_left(self) -> bool {
        use RuleId::*;
        matches!(
            self,
            LAnd | LOr | LNegOr | LTo | LNegTo | LNegAnd | Pem | LNegNeg | Exp1 | LNegCirc | Exp0
        )
    }

    /// Logical rules whose principal formula sits in the succedent.
    pub fn is_right(self) -> bool {
        use RuleId::*;
        matches!(
            self,
            RAnd | ROr1 | ROr2 | ROr | RNegOr | RTo | RNegTo | RNegAnd1 | RNegAnd2 | RNegAnd
                | RNegNeg | RNegCirc
        )
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A rule-labelled proof tree of set sequents.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SequentProof {
    pub sequent: Sequent,
    pub rule: RuleId,
    pub principal: Option<Formula>,
    pub premises: Vec<SequentProof>,
}

impl SequentProof {
    /// The axiom `A => A`.
    pub fn id(a: Formula) -> SequentProof {
        SequentProof {
            sequent: Sequent::new([a.clone()], [a.clone()]),
            rule: RuleId::Id,
            principal: Some(a),
            premises: vec![],
        }
    }

    /// The GB axiom `@A, A, ~A, G => C`; `circ` must be `@A`.
    pub fn exp0(circ: Formula, gamma: FormulaSet, succ: FormulaSet) -> Option<SequentProof> {
        let Formula::Circ(a) = &circ else {
            return None;
        };
        let mut ante = gamma;
        ante.insert((**a).clone());
        ante.insert((**a).clone().neg());
        ante.insert(circ.clone());
        Some(SequentProof {
            sequent: Sequent { ante, succ },
            rule: RuleId::Exp0,
            principal: Some(circ),
            premises: vec![],
        })
    }

    pub fn end_sequent(&self) -> &Sequent {
        &self.sequent
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(|p| p.size()).sum::<usize>()
    }

    /// Length of the longest root-to-leaf path, counting nodes.
    pub fn height(&self) -> usize {
        1 + self.premises.iter().map(|p| p.height()).max().unwrap_or(0)
    }

    pub fn count_rule(&self, pred: impl Fn(RuleId) -> bool + Copy) -> usize {
        usize::from(pred(self.rule))
            + self
                .premises
                .iter()
                .map(|p| p.count_rule(pred))
                .sum::<usize>()
    }

    pub fn is_cut_free(&self) -> bool {
        !self.rule.is_cut() && self.premises.iter().all(|p| p.is_cut_free())
    }

    /// Pre-order visit with the path (premise indices from the root).
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&[usize], &'a SequentProof)) {
        fn go<'a>(
            p: &'a SequentProof,
            path: &mut Vec<usize>,
            f: &mut impl FnMut(&[usize], &'a SequentProof),
        ) {
            f(path, p);
            for (i, q) in p.premises.iter().enumerate() {
                path.push(i);
                go(q, path, f);
                path.pop();
            }
        }
        go(self, &mut Vec::new(), f);
    }

    pub fn at(&self, path: &[usize]) -> Option<&SequentProof> {
        let mut cur = self;
        for &i in path {
            cur = cur.premises.get(i)?;
        }
        Some(cur)
    }

    /// Every formula occurring anywhere in the proof.
    pub fn all_formulas(&self) -> FormulaSet {
        let mut out = FormulaSet::new();
        self.visit(&mut |_, node| {
            out.extend(node.sequent.formulas().cloned());
            if let Some(p) = &node.principal {
                out.insert(p.clone());
            }
        });
        out
    }
}

impl fmt::Debug for SequentProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(p: &SequentProof, depth: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            writeln!(f, "{:indent$}{} [{}]", "", p.sequent, p.rule, indent = depth * 2)?;
            for q in &p.premises {
                go(q, depth + 1, f)?;
            }
            Ok(())
        }
        go(self, 0, f)
    }
}

pub fn is_cut_free(p: &SequentProof) -> bool {
    p.is_cut_free()
}
