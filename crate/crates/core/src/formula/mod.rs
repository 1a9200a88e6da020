//! Formulas of the languages L_J and L_F.
//!
//! A [`Formula`] is an immutable tree whose children are shared through
//! [`Arc`], so cloning is cheap and formulas can be moved between threads.
//! Structural equality and the derived total order are used everywhere
//! formulas are compared or stored in sets.

mod parser;
mod render;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use parser::{parse, parse_with, ParseError, ParseOptions};
pub use render::{render, RenderFormat};

/// Name of the atom reserved for the expansion of `bot`.
pub const RESERVED_ATOM: &str = "_f";

/// Which object language a formula (or proof) lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Language {
    /// The language of LET_J: `~`, `@`, `&`, `|`, `->`.
    LJ,
    /// The language of LET_F: as LJ but without `->`.
    LF,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(Arc<str>),
    Neg(Arc<Formula>),
    Circ(Arc<Formula>),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Imp(Arc<Formula>, Arc<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(Arc::from(name))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Formula {
        Formula::Neg(Arc::new(self))
    }

    pub fn circ(self) -> Formula {
        Formula::Circ(Arc::new(self))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Arc::new(a), Arc::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Arc::new(a), Arc::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Arc::new(a), Arc::new(b))
    }

    /// The formula `(@_f & ~_f) & _f` that `bot` abbreviates.
    pub fn bot() -> Formula {
        let f = Formula::atom(RESERVED_ATOM);
        Formula::and(Formula::and(f.clone().circ(), f.clone().neg()), f)
    }

    pub fn is_bot(&self) -> bool {
        *self == Formula::bot()
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    /// An atom or a negated atom.
    pub fn is_literal(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Neg(a) => a.is_atom(),
            _ => false,
        }
    }

    /// True when no `->` occurs anywhere in the formula.
    pub fn is_implication_free(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Neg(a) | Formula::Circ(a) => a.is_implication_free(),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.is_implication_free() && b.is_implication_free()
            }
            Formula::Imp(..) => false,
        }
    }

    pub fn belongs_to(&self, lang: Language) -> bool {
        match lang {
            Language::LJ => true,
            Language::LF => self.is_implication_free(),
        }
    }

    /// Number of nodes in the formula tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) => 1,
            Formula::Neg(a) | Formula::Circ(a) => 1 + a.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Connective count: atoms are 0 and every connective adds one.
    pub fn complexity(&self) -> usize {
        self.size_connectives()
    }

    fn size_connectives(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Neg(a) | Formula::Circ(a) => 1 + a.size_connectives(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                1 + a.size_connectives() + b.size_connectives()
            }
        }
    }

    /// Names of all atoms occurring in the formula.
    pub fn atoms(&self, out: &mut BTreeSet<Arc<str>>) {
        match self {
            Formula::Atom(n) => {
                out.insert(n.clone());
            }
            Formula::Neg(a) | Formula::Circ(a) => a.atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.atoms(out);
                b.atoms(out);
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, RenderFormat::Ascii))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}`", render(self, RenderFormat::Ascii))
    }
}

/// The weight measure used by cut elimination.
///
/// Literals weigh nothing; every other formula weighs one more than the
/// formulas its left and right rules decompose it into:
///
/// * `w(~~A) = w(A) + 1`
/// * `w(A * B) = w(A) + w(B) + 1` for `*` in `&`, `|`, `->`
/// * `w(~(A * B)) = w(~A) + w(~B) + 1`
/// * `w(@A) = w(A) + w(~A) + 1`
/// * `w(~@A) = w(@A) + 1`
pub fn weight(f: &Formula) -> usize {
    use Formula::*;
    match f {
        Atom(_) => 0,
        And(a, b) | Or(a, b) | Imp(a, b) => weight(a) + weight(b) + 1,
        Circ(a) => weight(a) + weight_neg(a) + 1,
        Neg(a) => weight_neg(a),
    }
}

/// Weight of `~a`, without allocating the negation.
fn weight_neg(a: &Formula) -> usize {
    use Formula::*;
    match a {
        Atom(_) => 0,
        Neg(b) => weight(b) + 1,
        And(b, c) | Or(b, c) | Imp(b, c) => weight_neg(b) + weight_neg(c) + 1,
        Circ(_) => weight(a) + 1,
    }
}

/// Formulas one generalized-subformula step below `f`.
pub fn gsf_step(f: &Formula) -> Vec<Formula> {
    use Formula::*;
    match f {
        Atom(_) => vec![],
        Neg(a) => {
            let mut out = vec![(**a).clone()];
            match &**a {
                And(b, c) | Or(b, c) | Imp(b, c) => {
                    out.push((**b).clone().neg());
                    out.push((**c).clone().neg());
                }
                _ => {}
            }
            out
        }
        And(a, b) | Or(a, b) | Imp(a, b) => vec![(**a).clone(), (**b).clone()],
        Circ(a) => vec![(**a).clone(), (**a).clone().neg()],
    }
}

/// Reflexive-transitive closure of the generalized-subformula relation.
pub fn gsf_closure<'a, I>(fs: I) -> BTreeSet<Formula>
where
    I: IntoIterator<Item = &'a Formula>,
{
    let mut out = BTreeSet::new();
    let mut todo: Vec<Formula> = fs.into_iter().cloned().collect();
    while let Some(f) = todo.pop() {
        if out.contains(&f) {
            continue;
        }
        todo.extend(gsf_step(&f).into_iter().filter(|g| !out.contains(g)));
        out.insert(f);
    }
    out
}
