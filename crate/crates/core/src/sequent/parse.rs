use thiserror::Error;

use super::{FormulaSet, Sequent};
use crate::formula::{parse_with, Language, ParseError, ParseOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequentParseError {
    #[error("expected exactly one `=>`")]
    Arrow,
    #[error("formula `{text}`: {source}")]
    Formula { text: String, source: ParseError },
}

/// Parse `A1, ..., An => B1, ..., Bm`; either side may be empty.
pub fn parse_sequent(text: &str, lang: Language) -> Result<Sequent, SequentParseError> {
    let parts: Vec<&str> = text.split("=>").collect();
    let [ante, succ] = parts[..] else {
        return Err(SequentParseError::Arrow);
    };
    let side = |s: &str| -> Result<FormulaSet, SequentParseError> {
        if s.trim().is_empty() {
            return Ok(FormulaSet::new());
        }
        s.split(',')
            .map(|t| {
                parse_with(t, ParseOptions::new(lang)).map_err(|source| SequentParseError::Formula {
                    text: t.trim().to_string(),
                    source,
                })
            })
            .collect()
    };
    Ok(Sequent {
        ante: side(ante)?,
        succ: side(succ)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    #[test]
    fn sides() {
        let s = parse_sequent("@p, p, ~p => q", Language::LJ).unwrap();
        assert_eq!(s.ante.len(), 3);
        assert_eq!(s.succ, [parse("q", Language::LJ).unwrap()].into());
        assert_eq!(parse_sequent(" => ", Language::LJ).unwrap(), Sequent::default());
        assert_eq!(parse_sequent("p, q", Language::LJ), Err(SequentParseError::Arrow));
        assert!(matches!(
            parse_sequent("p, => q", Language::LJ),
            Err(SequentParseError::Formula { .. })
        ));
        assert!(parse_sequent("p -> q => q", Language::LF).is_err());
    }
}
