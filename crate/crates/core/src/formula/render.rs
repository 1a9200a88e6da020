use super::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Unicode,
    Latex,
}

struct Symbols {
    not: &'static str,
    circ: &'static str,
    and: &'static str,
    or: &'static str,
    imp: &'static str,
    bot: &'static str,
}

const ASCII: Symbols = Symbols {
    not: "~",
    circ: "@",
    and: " & ",
    or: " | ",
    imp: " -> ",
    bot: "bot",
};

const UNICODE: Symbols = Symbols {
    not: "¬",
    circ: "∘",
    and: " ∧ ",
    or: " ∨ ",
    imp: " → ",
    bot: "⊥",
};

const LATEX: Symbols = Symbols {
    not: "\\neg",
    circ: "\\circ",
    and: " \\land ",
    or: " \\lor ",
    imp: " \\to ",
    bot: "\\bot",
};

// binding strength: higher binds tighter
const PREC_IMP: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_UNARY: u8 = 4;
const PREC_ATOM: u8 = 5;

fn prec(f: &Formula) -> u8 {
    if f.is_bot() {
        return PREC_ATOM;
    }
    match f {
        Formula::Atom(_) => PREC_ATOM,
        Formula::Neg(_) | Formula::Circ(_) => PREC_UNARY,
        Formula::And(..) => PREC_AND,
        Formula::Or(..) => PREC_OR,
        Formula::Imp(..) => PREC_IMP,
    }
}

/// Render a formula. The ASCII form parses back to the same formula.
pub fn render(f: &Formula, format: RenderFormat) -> String {
    let syms = match format {
        RenderFormat::Ascii => &ASCII,
        RenderFormat::Unicode => &UNICODE,
        RenderFormat::Latex => &LATEX,
    };
    let mut out = String::new();
    write(f, syms, format, &mut out);
    out
}

fn write(f: &Formula, s: &Symbols, format: RenderFormat, out: &mut String) {
    if f.is_bot() {
        out.push_str(s.bot);
        return;
    }
    match f {
        Formula::Atom(name) => {
            if format == RenderFormat::Latex {
                out.push_str(&name.replace('_', "\\_"));
            } else {
                out.push_str(name);
            }
        }
        Formula::Neg(a) | Formula::Circ(a) => {
            out.push_str(if matches!(f, Formula::Neg(_)) {
                s.not
            } else {
                s.circ
            });
            let paren = prec(a) < PREC_UNARY;
            if format == RenderFormat::Latex && !paren && starts_with_letter(a, s) {
                out.push(' ');
            }
            child(a, paren, s, format, out);
        }
        Formula::And(a, b) => binary(a, b, s.and, PREC_AND, false, s, format, out),
        Formula::Or(a, b) => binary(a, b, s.or, PREC_OR, false, s, format, out),
        Formula::Imp(a, b) => binary(a, b, s.imp, PREC_IMP, true, s, format, out),
    }
}

#[allow(clippy::too_many_arguments)]
fn binary(
    a: &Formula,
    b: &Formula,
    op: &str,
    level: u8,
    right_assoc: bool,
    s: &Symbols,
    format: RenderFormat,
    out: &mut String,
) {
    let (lp, rp) = if right_assoc {
        (prec(a) <= level, prec(b) < level)
    } else {
        (prec(a) < level, prec(b) <= level)
    };
    child(a, lp, s, format, out);
    out.push_str(op);
    child(b, rp, s, format, out);
}

fn child(f: &Formula, paren: bool, s: &Symbols, format: RenderFormat, out: &mut String) {
    if paren {
        out.push('(');
        write(f, s, format, out);
        out.push(')');
    } else {
        write(f, s, format, out);
    }
}

// LaTeX control words need a separating space before a following letter.
fn starts_with_letter(f: &Formula, s: &Symbols) -> bool {
    if f.is_bot() {
        return s.bot.starts_with(|c: char| c.is_alphabetic());
    }
    matches!(f, Formula::Atom(_))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, parse_with, Language, ParseOptions};

    fn p(s: &str) -> Formula {
        parse(s, Language::LJ).unwrap()
    }

    #[test]
    fn render_examples() {
        assert_eq!(render(&p("@p & ~q"), RenderFormat::Ascii), "@p & ~q");
        assert_eq!(render(&p("@(p & q)"), RenderFormat::Unicode), "∘(p ∧ q)");
        assert_eq!(render(&p("~~p"), RenderFormat::Latex), "\\neg\\neg p");
        assert_eq!(
            render(&p("~(p & q) -> r"), RenderFormat::Latex),
            "\\neg(p \\land q) \\to r"
        );
        assert_eq!(render(&p("bot"), RenderFormat::Ascii), "bot");
        assert_eq!(render(&p("~bot"), RenderFormat::Unicode), "¬⊥");
    }

    #[test]
    fn associativity_round_trips() {
        for s in [
            "a & b & c",
            "a & (b & c)",
            "(a -> b) -> c",
            "a -> b -> c",
            "(a | b) & c",
            "~(a | b) | ~@c",
            "bot & p",
        ] {
            assert_eq!(render(&p(s), RenderFormat::Ascii), s);
        }
    }

    #[test]
    fn reserved_components_render_parsably() {
        let opts = ParseOptions {
            lang: Language::LJ,
            allow_reserved: true,
        };
        let f = Formula::atom("_f").circ();
        let s = render(&f, RenderFormat::Ascii);
        assert_eq!(parse_with(&s, opts).unwrap(), f);
    }
}
