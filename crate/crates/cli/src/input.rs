//! Parsers for the three textual encodings.
//!
//! Grammar: `--semigroup "a,b,c"`, `--char "m;b1,b2"`, `--pairs "p,q;p,q"`.
//! Whitespace around integers is ignored. Errors carry the byte offset of the
//! offending character inside the argument.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use unibranch::{CurveInvariantsBig, PairList, PuiseuxCharacteristic};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EncodingKind {
    Semigroup,
    Characteristic,
    Pairs,
}

impl EncodingKind {
    pub fn flag(self) -> &'static str {
        match self {
            EncodingKind::Semigroup => "--semigroup",
            EncodingKind::Characteristic => "--char",
            EncodingKind::Pairs => "--pairs",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EncodingKind::Semigroup => "semigroup",
            EncodingKind::Characteristic => "characteristic",
            EncodingKind::Pairs => "pairs",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: EncodingKind,
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at byte {}: {}",
            self.kind.flag(),
            self.offset,
            self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// Parsed but not yet validated input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Encoding {
    Semigroup(Vec<BigInt>),
    Characteristic(BigInt, Vec<BigInt>),
    Pairs(Vec<(BigInt, BigInt)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputSpec {
    pub kind: EncodingKind,
    pub text: String,
    pub encoding: Encoding,
}

impl InputSpec {
    pub fn parse(kind: EncodingKind, text: &str) -> Result<Self, ParseError> {
        let p = Parser { kind, text };
        let encoding = match kind {
            EncodingKind::Semigroup => Encoding::Semigroup(p.list(0, text.len())?),
            EncodingKind::Characteristic => p.characteristic()?,
            EncodingKind::Pairs => Encoding::Pairs(p.pairs()?),
        };
        Ok(InputSpec {
            kind,
            text: text.to_string(),
            encoding,
        })
    }

    /// Validates against the core invariants and derives all encodings.
    pub fn invariants(&self) -> unibranch::Result<CurveInvariantsBig> {
        match &self.encoding {
            Encoding::Semigroup(elements) => CurveInvariantsBig::from_semigroup_elements(elements),
            Encoding::Characteristic(m, exps) if m.is_one() && exps.is_empty() => {
                Ok(CurveInvariantsBig::smooth())
            }
            Encoding::Characteristic(m, exps) => {
                PuiseuxCharacteristic::new(m.clone(), exps.clone())
                    .map(CurveInvariantsBig::from_characteristic)
            }
            Encoding::Pairs(pairs) => {
                PairList::new(pairs.clone()).map(CurveInvariantsBig::from_pairs)
            }
        }
    }
}

struct Parser<'a> {
    kind: EncodingKind,
    text: &'a str,
}

impl Parser<'_> {
    fn err(&self, offset: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            kind: self.kind,
            offset,
            message: message.into(),
        }
    }

    fn integer(&self, start: usize, end: usize) -> Result<BigInt, ParseError> {
        let field = &self.text[start..end];
        let lead = field.len() - field.trim_start().len();
        let digits = field.trim();
        if digits.is_empty() {
            return Err(self.err(start + lead, "expected an integer"));
        }
        if let Some((i, c)) = digits.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
            return Err(self.err(start + lead + i, format!("unexpected character {c:?}")));
        }
        Ok(digits.parse().expect("ASCII digits"))
    }

    /// Comma-separated integers in `text[start..end]`.
    fn list(&self, start: usize, end: usize) -> Result<Vec<BigInt>, ParseError> {
        split(&self.text[start..end], ',')
            .map(|(a, b)| self.integer(start + a, start + b))
            .collect()
    }

    fn characteristic(&self) -> Result<Encoding, ParseError> {
        let mut semis = self.text.match_indices(';').map(|(i, _)| i);
        let Some(semi) = semis.next() else {
            return Err(self.err(self.text.len(), "expected ';' after the multiplicity"));
        };
        if let Some(extra) = semis.next() {
            return Err(self.err(extra, "only one ';' is allowed"));
        }
        let m = self.integer(0, semi)?;
        let rest = semi + 1;
        let exps = if self.text[rest..].trim().is_empty() {
            Vec::new()
        } else {
            self.list(rest, self.text.len())?
        };
        Ok(Encoding::Characteristic(m, exps))
    }

    fn pairs(&self) -> Result<Vec<(BigInt, BigInt)>, ParseError> {
        if self.text.trim().is_empty() {
            return Ok(Vec::new());
        }
        split(self.text, ';')
            .map(|(a, b)| {
                let field = &self.text[a..b];
                let commas: Vec<usize> = field.match_indices(',').map(|(i, _)| a + i).collect();
                match commas.as_slice() {
                    [] => Err(self.err(b, "expected ',' inside a pair")),
                    [c] => Ok((self.integer(a, *c)?, self.integer(c + 1, b)?)),
                    [_, extra, ..] => Err(self.err(*extra, "a pair has exactly two entries")),
                }
            })
            .collect()
    }
}

/// Byte ranges of the `sep`-separated fields of `s`.
fn split(s: &str, sep: char) -> impl Iterator<Item = (usize, usize)> + '_ {
    let mut start = 0;
    s.split(sep).map(move |field| {
        let range = (start, start + field.len());
        start += field.len() + sep.len_utf8();
        range
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn parses_each_encoding() {
        let s = InputSpec::parse(EncodingKind::Semigroup, "4, 6 ,13").unwrap();
        assert_eq!(s.encoding, Encoding::Semigroup(big(&[4, 6, 13])));
        let c = InputSpec::parse(EncodingKind::Characteristic, "4;6,7").unwrap();
        assert_eq!(
            c.encoding,
            Encoding::Characteristic(BigInt::from(4), big(&[6, 7]))
        );
        let p = InputSpec::parse(EncodingKind::Pairs, "2,3;5,11").unwrap();
        assert_eq!(
            p.encoding,
            Encoding::Pairs(vec![(2.into(), 3.into()), (5.into(), 11.into())])
        );
    }

    #[test]
    fn offsets() {
        let e = InputSpec::parse(EncodingKind::Semigroup, "4,x,13").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = InputSpec::parse(EncodingKind::Semigroup, "4,,13").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = InputSpec::parse(EncodingKind::Pairs, "2,3;5").unwrap_err();
        assert_eq!(e.offset, 5);
        let e = InputSpec::parse(EncodingKind::Pairs, "2,3;5,11,4").unwrap_err();
        assert_eq!(e.offset, 8);
        let e = InputSpec::parse(EncodingKind::Characteristic, "4,6,7").unwrap_err();
        assert_eq!(e.offset, 5);
        let e = InputSpec::parse(EncodingKind::Characteristic, "4;6;7").unwrap_err();
        assert_eq!(e.offset, 3);
        let e = InputSpec::parse(EncodingKind::Characteristic, "4;6,-7").unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(e.to_string().contains("byte 4"));
    }

    #[test]
    fn smooth_spellings() {
        for (kind, text) in [
            (EncodingKind::Semigroup, "1"),
            (EncodingKind::Characteristic, "1;"),
            (EncodingKind::Pairs, ""),
        ] {
            let inv = InputSpec::parse(kind, text).unwrap().invariants().unwrap();
            assert!(inv.is_smooth(), "{text:?}");
        }
    }

    #[test]
    fn validation_is_deferred() {
        let s = InputSpec::parse(EncodingKind::Semigroup, "4,6").unwrap();
        assert!(s.invariants().unwrap_err().to_string().contains("gcd"));
    }
}
