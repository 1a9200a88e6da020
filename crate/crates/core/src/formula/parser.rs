use super::{Formula, Language, RESERVED_ATOM};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("`->` at position {pos} is not part of the LET_F language")]
    ImplicationInLf { pos: usize },
    #[error("reserved atom `_f` at position {pos} cannot be written directly")]
    ReservedAtom { pos: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct ParseOptions {
    pub lang: Language,
    /// Accept the reserved atom `_f`. Interchange files need this because
    /// translated proofs contain the components of `bot`.
    pub allow_reserved: bool,
}

impl ParseOptions {
    pub fn new(lang: Language) -> Self {
        ParseOptions {
            lang,
            allow_reserved: false,
        }
    }
}

/// Parse a formula in the ASCII concrete syntax.
///
/// Precedence from tightest: prefix `~` and `@`, then `&` (left), `|`
/// (left), `->` (right). `bot` abbreviates `(@_f & ~_f) & _f`.
pub fn parse(text: &str, lang: Language) -> Result<Formula, ParseError> {
    parse_with(text, ParseOptions::new(lang))
}

pub fn parse_with(text: &str, opts: ParseOptions) -> Result<Formula, ParseError> {
    let tokens = lex(text, opts)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let f = p.imp()?;
    if let Some((pos, tok)) = p.peek_full() {
        return Err(ParseError::Syntax {
            pos,
            message: format!("unexpected {}", tok.describe()),
        });
    }
    Ok(f)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Bot,
    Not,
    Circ,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("atom `{s}`"),
            Tok::Bot => "`bot`".into(),
            Tok::Not => "`~`".into(),
            Tok::Circ => "`@`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

fn lex(text: &str, opts: ParseOptions) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'~' => {
                out.push((i, Tok::Not));
                i += 1;
            }
            b'@' => {
                out.push((i, Tok::Circ));
                i += 1;
            }
            b'&' => {
                out.push((i, Tok::And));
                i += 1;
            }
            b'|' => {
                out.push((i, Tok::Or));
                i += 1;
            }
            b'(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    if opts.lang == Language::LF {
                        return Err(ParseError::ImplicationInLf { pos: i });
                    }
                    out.push((i, Tok::Arrow));
                    i += 2;
                } else {
                    return Err(ParseError::Syntax {
                        pos: i,
                        message: "expected `->`".into(),
                    });
                }
            }
            b'_' => {
                let start = i;
                i += 1;
                while i < bytes.len() && is_ident_tail(bytes[i]) {
                    i += 1;
                }
                let word = &text[start..i];
                if word != RESERVED_ATOM {
                    return Err(ParseError::Syntax {
                        pos: start,
                        message: format!("invalid atom `{word}`"),
                    });
                }
                if !opts.allow_reserved {
                    return Err(ParseError::ReservedAtom { pos: start });
                }
                out.push((start, Tok::Ident(word.to_string())));
            }
            b'a'..=b'z' => {
                let start = i;
                while i < bytes.len() && is_ident_tail(bytes[i]) {
                    i += 1;
                }
                let word = &text[start..i];
                if word == "bot" {
                    out.push((start, Tok::Bot));
                } else {
                    out.push((start, Tok::Ident(word.to_string())));
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    pos: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        }
    }
    Ok(out)
}

fn is_ident_tail(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_'
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn peek_full(&self) -> Option<(usize, Tok)> {
        self.tokens.get(self.pos).cloned()
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            let rhs = self.imp()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let at = self.here();
        match self.peek_full() {
            Some((_, Tok::Not)) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some((_, Tok::Circ)) => {
                self.pos += 1;
                Ok(self.unary()?.circ())
            }
            Some((_, Tok::Ident(name))) => {
                self.pos += 1;
                Ok(Formula::atom(&name))
            }
            Some((_, Tok::Bot)) => {
                self.pos += 1;
                Ok(Formula::bot())
            }
            Some((_, Tok::LParen)) => {
                self.pos += 1;
                let f = self.imp()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(f)
                    }
                    _ => Err(ParseError::Syntax {
                        pos: self.here(),
                        message: "expected `)`".into(),
                    }),
                }
            }
            Some((_, tok)) => Err(ParseError::Syntax {
                pos: at,
                message: format!("expected a formula, found {}", tok.describe()),
            }),
            None => Err(ParseError::Syntax {
                pos: at,
                message: "unexpected end of input".into(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Formula {
        Formula::atom(s)
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(
            parse("@p & ~q", Language::LJ).unwrap(),
            Formula::and(a("p").circ(), a("q").neg())
        );
        assert_eq!(
            parse("p -> q -> r", Language::LJ).unwrap(),
            Formula::imp(a("p"), Formula::imp(a("q"), a("r")))
        );
        assert_eq!(
            parse("bot", Language::LJ).unwrap(),
            Formula::and(Formula::and(a("_f").circ(), a("_f").neg()), a("_f"))
        );
    }

    #[test]
    fn precedence_and_associativity() {
        let f = parse("a | b & c | d", Language::LJ).unwrap();
        assert_eq!(
            f,
            Formula::or(Formula::or(a("a"), Formula::and(a("b"), a("c"))), a("d"))
        );
        let g = parse("~@(p) & q_1 -> r", Language::LJ).unwrap();
        assert_eq!(
            g,
            Formula::imp(Formula::and(a("p").circ().neg(), a("q_1")), a("r"))
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse("p ->", Language::LJ),
            Err(ParseError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse("p -> q", Language::LF),
            Err(ParseError::ImplicationInLf { pos: 2 })
        ));
        assert!(matches!(
            parse("_f & p", Language::LJ),
            Err(ParseError::ReservedAtom { pos: 0 })
        ));
        assert!(parse("(p & q", Language::LJ).is_err());
        assert!(parse("P", Language::LJ).is_err());
        assert!(parse("", Language::LJ).is_err());
        assert!(parse("p q", Language::LJ).is_err());
    }

    #[test]
    fn reserved_atom_when_allowed() {
        let opts = ParseOptions {
            lang: Language::LJ,
            allow_reserved: true,
        };
        assert_eq!(parse_with("~_f", opts).unwrap(), a("_f").neg());
    }
}
