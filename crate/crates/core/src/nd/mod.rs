//! Natural deduction for LET_J and LET_F: checking, segments, conversions
//! and normalization.

mod check;
mod convert;
mod lower;
mod normalize;
mod segments;

use std::collections::BTreeSet;
use std::fmt;

use crate::formula::{Formula, Language};

pub use check::{check_deduction, Checked, NdInvalid, NdInvalidAt};
pub(crate) use check::comp_base;
pub use convert::{apply_conversion, ConversionError, ConversionKind};
pub use lower::{exp_conclusions_lowered, lower_exp_consequences};
pub use normalize::{normalize, remove_redundant_dels, NormalizationStep, NormalizeError, Normalization};
pub use segments::{cutrank, find_segments, measure, NormalizationMeasure, Segment};

/// The two natural-deduction systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NdSystem {
    NLETJ,
    NLETF,
}

impl NdSystem {
    pub fn language(self) -> Language {
        match self {
            NdSystem::NLETJ => Language::LJ,
            NdSystem::NLETF => Language::LF,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NdSystem::NLETJ => "NLETJ",
            NdSystem::NLETF => "NLETF",
        }
    }

    pub fn has_rule(self, rule: NdRule) -> bool {
        use NdRule::*;
        match self {
            NdSystem::NLETJ => !matches!(rule, Cons | Comp),
            NdSystem::NLETF => !matches!(rule, ToI | ToE | NegToI | NegToE1 | NegToE2),
        }
    }
}

impl fmt::Display for NdSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NdRule {
    AndI,
    AndE1,
    AndE2,
    OrI1,
    OrI2,
    OrE,
    ToI,
    ToE,
    NegAndI1,
    NegAndI2,
    NegAndE,
    NegOrI,
    NegOrE1,
    NegOrE2,
    NegToI,
    NegToE1,
    NegToE2,
    NegNegI,
    NegNegE,
    Exp,
    Pem,
    Cons,
    Comp,
}

impl NdRule {
    pub const ALL: [NdRule; 23] = [
        NdRule::AndI,
        NdRule::AndE1,
        NdRule::AndE2,
        NdRule::OrI1,
        NdRule::OrI2,
        NdRule::OrE,
        NdRule::ToI,
        NdRule::ToE,
        NdRule::NegAndI1,
        NdRule::NegAndI2,
        NdRule::NegAndE,
        NdRule::NegOrI,
        NdRule::NegOrE1,
        NdRule::NegOrE2,
        NdRule::NegToI,
        NdRule::NegToE1,
        NdRule::NegToE2,
        NdRule::NegNegI,
        NdRule::NegNegE,
        NdRule::Exp,
        NdRule::Pem,
        NdRule::Cons,
        NdRule::Comp,
    ];

    pub fn name(self) -> &'static str {
        use NdRule::*;
        match self {
            AndI => "AndI",
            AndE1 => "AndE1",
            AndE2 => "AndE2",
            OrI1 => "OrI1",
            OrI2 => "OrI2",
            OrE => "OrE",
            ToI => "ToI",
            ToE => "ToE",
            NegAndI1 => "NegAndI1",
            NegAndI2 => "NegAndI2",
            NegAndE => "NegAndE",
            NegOrI => "NegOrI",
            NegOrE1 => "NegOrE1",
            NegOrE2 => "NegOrE2",
            NegToI => "NegToI",
            NegToE1 => "NegToE1",
            NegToE2 => "NegToE2",
            NegNegI => "NegNegI",
            NegNegE => "NegNegE",
            Exp => "EXP",
            Pem => "PEM",
            Cons => "CONS",
            Comp => "COMP",
        }
    }

    pub fn from_name(s: &str) -> Option<NdRule> {
        NdRule::ALL.into_iter().find(|r| r.name() == s)
    }

    /// LaTeX rule label.
    pub fn label(self) -> &'static str {
        use NdRule::*;
        match self {
            AndI => "$\\wedge$I",
            AndE1 | AndE2 => "$\\wedge$E",
            OrI1 | OrI2 => "$\\vee$I",
            OrE => "$\\vee$E",
            ToI => "$\\rightarrow$I",
            ToE => "$\\rightarrow$E",
            NegAndI1 | NegAndI2 => "$\\neg\\wedge$I",
            NegAndE => "$\\neg\\wedge$E",
            NegOrI => "$\\neg\\vee$I",
            NegOrE1 | NegOrE2 => "$\\neg\\vee$E",
            NegToI => "$\\neg\\rightarrow$I",
            NegToE1 | NegToE2 => "$\\neg\\rightarrow$E",
            NegNegI => "$\\neg\\neg$I",
            NegNegE => "$\\neg\\neg$E",
            Exp => "$EXP^\\circ$",
            Pem => "$PEM^\\circ$",
            Cons => "$CONS$",
            Comp => "$COMP$",
        }
    }

    pub fn arity(self) -> usize {
        use NdRule::*;
        match self {
            AndI | ToE | NegOrI | NegToI | Cons | Comp => 2,
            OrE | NegAndE | Exp | Pem => 3,
            _ => 1,
        }
    }

    /// Number of assumption classes the rule discharges.
    pub fn discharges(self) -> usize {
        use NdRule::*;
        match self {
            ToI => 1,
            OrE | NegAndE | Pem | Comp => 2,
            _ => 0,
        }
    }

    pub fn is_del(self) -> bool {
        matches!(self, NdRule::OrE | NdRule::NegAndE | NdRule::Pem | NdRule::Comp)
    }

    /// Rules with a major premise, always premise 0.
    pub fn is_elim(self) -> bool {
        use NdRule::*;
        matches!(
            self,
            AndE1 | AndE2 | OrE | ToE | NegAndE | NegOrE1 | NegOrE2 | NegToE1 | NegToE2 | NegNegE | Pem
        )
    }

    pub fn is_intro(self) -> bool {
        use NdRule::*;
        matches!(
            self,
            AndI | OrI1 | OrI2 | ToI | NegAndI1 | NegAndI2 | NegOrI | NegToI | NegNegI
        )
    }

    /// `EXP` and `CONS`, which conclude an arbitrary formula.
    pub fn is_explosion(self) -> bool {
        matches!(self, NdRule::Exp | NdRule::Cons)
    }

    /// The premise above which the `k`-th discharged class sits.
    pub fn discharge_premise(self, k: usize) -> usize {
        match self {
            NdRule::ToI | NdRule::Comp => k,
            _ => k + 1,
        }
    }

    /// Premise indices that are minor premises of a del-rule.
    pub fn minor_premises(self) -> &'static [usize] {
        match self {
            NdRule::OrE | NdRule::NegAndE | NdRule::Pem => &[1, 2],
            NdRule::Comp => &[0, 1],
            _ => &[],
        }
    }
}

impl fmt::Display for NdRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A natural-deduction tree.
///
/// Discharged assumptions carry the marker of the inference that closes
/// their class; open assumptions may carry a marker, which must not be one
/// that any inference discharges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Deduction {
    Assumption {
        formula: Formula,
        marker: Option<String>,
        discharged: bool,
    },
    Inference {
        rule: NdRule,
        formula: Formula,
        premises: Vec<Deduction>,
        markers: Vec<String>,
    },
}

impl Deduction {
    pub fn open(formula: Formula) -> Deduction {
        Deduction::Assumption {
            formula,
            marker: None,
            discharged: false,
        }
    }

    pub fn hyp(formula: Formula, marker: &str) -> Deduction {
        Deduction::Assumption {
            formula,
            marker: Some(marker.to_string()),
            discharged: true,
        }
    }

    pub fn infer(rule: NdRule, formula: Formula, premises: Vec<Deduction>) -> Deduction {
        Deduction::Inference {
            rule,
            formula,
            premises,
            markers: vec![],
        }
    }

    pub fn infer_discharging(
        rule: NdRule,
        formula: Formula,
        premises: Vec<Deduction>,
        markers: Vec<String>,
    ) -> Deduction {
        Deduction::Inference {
            rule,
            formula,
            premises,
            markers,
        }
    }

    /// The end formula.
    pub fn formula(&self) -> &Formula {
        match self {
            Deduction::Assumption { formula, .. } | Deduction::Inference { formula, .. } => formula,
        }
    }

    pub fn rule(&self) -> Option<NdRule> {
        match self {
            Deduction::Inference { rule, .. } => Some(*rule),
            Deduction::Assumption { .. } => None,
        }
    }

    pub fn premises(&self) -> &[Deduction] {
        match self {
            Deduction::Inference { premises, .. } => premises,
            Deduction::Assumption { .. } => &[],
        }
    }

    pub fn markers(&self) -> &[String] {
        match self {
            Deduction::Inference { markers, .. } => markers,
            Deduction::Assumption { .. } => &[],
        }
    }

    pub fn size(&self) -> usize {
        1 + self.premises().iter().map(|p| p.size()).sum::<usize>()
    }

    /// Longest root-to-leaf path, counting nodes.
    pub fn height(&self) -> usize {
        1 + self.premises().iter().map(|p| p.height()).max().unwrap_or(0)
    }

    pub fn count_rule(&self, pred: impl Fn(NdRule) -> bool + Copy) -> usize {
        usize::from(self.rule().is_some_and(pred))
            + self.premises().iter().map(|p| p.count_rule(pred)).sum::<usize>()
    }

    pub fn at(&self, path: &[usize]) -> Option<&Deduction> {
        let mut cur = self;
        for &i in path {
            cur = cur.premises().get(i)?;
        }
        Some(cur)
    }

    pub(crate) fn at_mut(&mut self, path: &[usize]) -> Option<&mut Deduction> {
        let mut cur = self;
        for &i in path {
            match cur {
                Deduction::Inference { premises, .. } => cur = premises.get_mut(i)?,
                Deduction::Assumption { .. } => return None,
            }
        }
        Some(cur)
    }

    /// Pre-order visit with the path (premise indices from the root).
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&[usize], &'a Deduction)) {
        fn go<'a>(d: &'a Deduction, path: &mut Vec<usize>, f: &mut impl FnMut(&[usize], &'a Deduction)) {
            f(path, d);
            for (i, q) in d.premises().iter().enumerate() {
                path.push(i);
                go(q, path, f);
                path.pop();
            }
        }
        go(self, &mut Vec::new(), f);
    }

    /// Formulas of the assumptions not marked as discharged.
    pub fn open_assumptions(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.visit(&mut |_, d| {
            if let Deduction::Assumption {
                formula,
                discharged: false,
                ..
            } = d
            {
                out.insert(formula.clone());
            }
        });
        out
    }

    /// Every marker mentioned anywhere, on assumptions or inferences.
    pub fn all_markers(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |_, d| match d {
            Deduction::Assumption {
                marker: Some(m), ..
            } => {
                out.insert(m.clone());
            }
            Deduction::Inference { markers, .. } => out.extend(markers.iter().cloned()),
            _ => {}
        });
        out
    }

    /// Number of discharged assumptions carrying `marker`.
    pub fn class_size(&self, marker: &str) -> usize {
        let mut n = 0;
        self.visit(&mut |_, d| {
            if let Deduction::Assumption {
                marker: Some(m),
                discharged: true,
                ..
            } = d
            {
                if m == marker {
                    n += 1;
                }
            }
        });
        n
    }

    /// Replace every discharged assumption with marker `marker` by `by`,
    /// freshening the discharge markers of each copy with `fresh`.
    pub(crate) fn substitute(&self, marker: &str, by: &Deduction, fresh: &mut Fresh) -> Deduction {
        match self {
            Deduction::Assumption {
                marker: Some(m),
                discharged: true,
                ..
            } if m == marker => fresh.freshen(by),
            Deduction::Assumption { .. } => self.clone(),
            Deduction::Inference {
                rule,
                formula,
                premises,
                markers,
            } => Deduction::Inference {
                rule: *rule,
                formula: formula.clone(),
                premises: premises
                    .iter()
                    .map(|p| p.substitute(marker, by, fresh))
                    .collect(),
                markers: markers.clone(),
            },
        }
    }
}

impl Deduction {
    /// Rename discharge markers so that every inference uses its own,
    /// following the lexical binding of each class. Deductions assembled
    /// from copies of one subdeduction become valid again this way.
    pub fn uniquify_markers(&self) -> Deduction {
        fn go(
            d: &Deduction,
            scope: &mut Vec<(String, String)>,
            fresh: &mut Fresh,
        ) -> Deduction {
            match d {
                Deduction::Assumption {
                    formula,
                    marker,
                    discharged,
                } => {
                    let marker = match marker {
                        Some(m) if *discharged => Some(
                            scope
                                .iter()
                                .rev()
                                .find(|(old, _)| old == m)
                                .map(|(_, new)| new.clone())
                                .unwrap_or_else(|| m.clone()),
                        ),
                        other => other.clone(),
                    };
                    Deduction::Assumption {
                        formula: formula.clone(),
                        marker,
                        discharged: *discharged,
                    }
                }
                Deduction::Inference {
                    rule,
                    formula,
                    premises,
                    markers,
                } => {
                    let renamed: Vec<String> = markers.iter().map(|_| fresh.marker()).collect();
                    let premises = premises
                        .iter()
                        .enumerate()
                        .map(|(i, p)| {
                            let n = scope.len();
                            for (k, m) in markers.iter().enumerate() {
                                if rule.discharge_premise(k) == i {
                                    scope.push((m.clone(), renamed[k].clone()));
                                }
                            }
                            let out = go(p, scope, fresh);
                            scope.truncate(n);
                            out
                        })
                        .collect();
                    Deduction::Inference {
                        rule: *rule,
                        formula: formula.clone(),
                        premises,
                        markers: renamed,
                    }
                }
            }
        }
        let mut fresh = Fresh::empty();
        d_open_markers(self, &mut fresh);
        go(self, &mut Vec::new(), &mut fresh)
    }
}

/// Reserve the markers of open assumptions so renaming never captures them.
fn d_open_markers(d: &Deduction, fresh: &mut Fresh) {
    d.visit(&mut |_, n| {
        if let Deduction::Assumption {
            marker: Some(m),
            discharged: false,
            ..
        } = n
        {
            fresh.used.insert(m.clone());
        }
    });
}

/// Fresh discharge markers `u1`, `u2`, ... avoiding a reserved set.
pub(crate) struct Fresh {
    used: BTreeSet<String>,
    next: usize,
}

impl Fresh {
    pub(crate) fn for_deduction(d: &Deduction) -> Fresh {
        Fresh {
            used: d.all_markers(),
            next: 1,
        }
    }

    pub(crate) fn empty() -> Fresh {
        Fresh {
            used: BTreeSet::new(),
            next: 1,
        }
    }

    pub(crate) fn marker(&mut self) -> String {
        loop {
            let m = format!("u{}", self.next);
            self.next += 1;
            if self.used.insert(m.clone()) {
                return m;
            }
        }
    }

    /// A copy of `d` whose discharge markers are all new.
    pub(crate) fn freshen(&mut self, d: &Deduction) -> Deduction {
        let mut renames = Vec::new();
        d.visit(&mut |_, n| {
            if let Deduction::Inference { markers, .. } = n {
                renames.extend(markers.iter().cloned());
            }
        });
        let map: std::collections::BTreeMap<String, String> =
            renames.into_iter().map(|m| (m, self.marker())).collect();
        rename(d, &map)
    }
}

fn rename(d: &Deduction, map: &std::collections::BTreeMap<String, String>) -> Deduction {
    match d {
        Deduction::Assumption {
            formula,
            marker,
            discharged,
        } => Deduction::Assumption {
            formula: formula.clone(),
            marker: match marker {
                Some(m) if *discharged => Some(map.get(m).cloned().unwrap_or_else(|| m.clone())),
                other => other.clone(),
            },
            discharged: *discharged,
        },
        Deduction::Inference {
            rule,
            formula,
            premises,
            markers,
        } => Deduction::Inference {
            rule: *rule,
            formula: formula.clone(),
            premises: premises.iter().map(|p| rename(p, map)).collect(),
            markers: markers
                .iter()
                .map(|m| map.get(m).cloned().unwrap_or_else(|| m.clone()))
                .collect(),
        },
    }
}

impl fmt::Debug for Deduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(d: &Deduction, depth: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match d {
                Deduction::Assumption {
                    formula,
                    marker,
                    discharged,
                } => {
                    let tag = match (marker, discharged) {
                        (Some(m), true) => format!("[{m}]"),
                        (Some(m), false) => format!("({m})"),
                        (None, _) => String::new(),
                    };
                    writeln!(f, "{:indent$}{formula} {tag}", "", indent = depth * 2)
                }
                Deduction::Inference {
                    rule,
                    formula,
                    premises,
                    markers,
                } => {
                    writeln!(
                        f,
                        "{:indent$}{formula} [{rule}{}]",
                        "",
                        markers.iter().map(|m| format!(",{m}")).collect::<String>(),
                        indent = depth * 2
                    )?;
                    for p in premises {
                        go(p, depth + 1, f)?;
                    }
                    Ok(())
                }
            }
        }
        go(self, 0, f)
    }
}
