//! Text notation.
//!
//! ```text
//! manifold := "M(" int ";" int ";" [pair ("," pair)*] ")"
//!           | "Sigma(" int ("," int)* ")"
//! pair     := "(" int "," int ")"
//! bundle   := "(" int [";" [int ("," int)*]] ")"
//! ```
//!
//! Whitespace is allowed between tokens. Columns in errors count characters
//! from 1.

use crate::error::{Error, Result};
use crate::orbifold::{BundleData, OrbifoldBase, SeifertFibration};

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { chars: text.chars().collect(), pos: 0, text }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { column: self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => Err(self.error(format!("expected '{c}', found '{found}'"))),
                None => Err(self.error(format!("expected '{c}', found end of input"))),
            }
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        let end = self.pos + word.chars().count();
        if end <= self.chars.len() && self.chars[self.pos..end].iter().copied().eq(word.chars()) {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.chars.get(self.pos), Some('-' | '+' | '\u{2212}')) {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected an integer, found '{c}'")),
                None => self.error("expected an integer, found end of input"),
            });
        }
        let raw: String = self.chars[start..self.pos].iter().collect();
        let raw = raw.replace('\u{2212}', "-");
        raw.parse()
            .map_err(|_| Error::Parse { column: start + 1, message: format!("integer {raw} out of range") })
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected trailing '{c}'"))),
        }
    }

    fn comma_list(&mut self, close: char) -> Result<Vec<i64>> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.integer()?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }
}

/// Parses `M(g;b;(a,b),…)` or `Sigma(a,…)`.
pub fn parse_manifold(text: &str) -> Result<SeifertFibration> {
    let mut cur = Cursor::new(text);
    let y = if cur.keyword("Sigma") || cur.keyword("\u{3a3}") {
        cur.expect('(')?;
        let alphas = cur.comma_list(')')?;
        if alphas.is_empty() {
            return Err(cur.error("Sigma needs at least one multiplicity"));
        }
        cur.finish()?;
        SeifertFibration::brieskorn(&alphas)?
    } else if cur.keyword("M") {
        cur.expect('(')?;
        let genus_col = {
            cur.skip_ws();
            cur.pos + 1
        };
        let genus = cur.integer()?;
        let genus = u32::try_from(genus).map_err(|_| Error::Parse {
            column: genus_col,
            message: format!("genus {genus} must be a non-negative integer"),
        })?;
        cur.expect(';')?;
        let background = cur.integer()?;
        cur.expect(';')?;
        let mut pairs = Vec::new();
        if !cur.eat(')') {
            loop {
                cur.expect('(')?;
                let a = cur.integer()?;
                cur.expect(',')?;
                let b = cur.integer()?;
                cur.expect(')')?;
                pairs.push((a, b));
                if cur.eat(')') {
                    break;
                }
                cur.expect(',')?;
            }
        }
        cur.finish()?;
        SeifertFibration::from_pairs(genus, background, &pairs)?
    } else {
        return Err(cur.error(format!("expected 'M(' or 'Sigma(' in {:?}", cur.text)));
    };
    Ok(y)
}

/// Parses `(e;ε₁,…,εₙ)` over `base`. The smooth case accepts `(e)` and `(e;)`.
pub fn parse_bundle(text: &str, base: &OrbifoldBase) -> Result<BundleData> {
    let mut cur = Cursor::new(text);
    cur.expect('(')?;
    let background = cur.integer()?;
    let locals = if cur.eat(')') {
        Vec::new()
    } else {
        cur.expect(';')?;
        cur.comma_list(')')?
    };
    cur.finish()?;
    BundleData::new(base, background, locals)
}

/// Canonical `M(…)` form; [`parse_manifold`] inverts it.
pub fn format_manifold(y: &SeifertFibration) -> String {
    y.to_string()
}

pub fn format_bundle(e: &BundleData) -> String {
    e.to_string()
}

/// Canonical bundle text as the flat list `[e, ε₁, …]`.
pub fn bundle_list(e: &BundleData) -> Vec<i64> {
    std::iter::once(e.background()).chain(e.locals().iter().copied()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brieskorn_notation() {
        let y = parse_manifold("Sigma(2,3,7)").unwrap();
        assert_eq!(y, SeifertFibration::brieskorn(&[2, 3, 7]).unwrap());
        assert_eq!(parse_manifold(" Sigma( 2 , 3, 7 ) ").unwrap(), y);
        assert_eq!(format_manifold(&y), "M(0;-1;(2,1),(3,1),(7,1))");
        assert_eq!(parse_manifold(&format_manifold(&y)).unwrap(), y);
    }

    #[test]
    fn explicit_notation() {
        let y = parse_manifold("M(0;-1;(2,1),(5,2),(11,1))").unwrap();
        assert_eq!(y, SeifertFibration::brieskorn(&[2, 5, 11]).unwrap());
        let y = parse_manifold("M(1;3;)").unwrap();
        assert_eq!(y, SeifertFibration::smooth(1, 3));
        assert_eq!(format_manifold(&y), "M(1;3;)");
    }

    #[test]
    fn bundles() {
        let y = parse_manifold("Sigma(2,5,11)").unwrap();
        let e = parse_bundle("(0;0,0,1)", y.base()).unwrap();
        assert_eq!(bundle_list(&e), vec![0, 0, 0, 1]);
        assert_eq!(format_bundle(&e), "(0;0,0,1)");
        let smooth = OrbifoldBase::smooth(2);
        assert_eq!(parse_bundle("(1;)", &smooth).unwrap().background(), 1);
        assert_eq!(parse_bundle("(-4)", &smooth).unwrap().background(), -4);
        assert!(matches!(parse_bundle("(0;2,0,0)", y.base()), Err(Error::InvalidData(_))));
    }

    #[test]
    fn errors_carry_columns() {
        let err = parse_manifold("M(0;-1;(2,1)(5,2))").unwrap_err();
        assert_eq!(err, Error::Parse { column: 13, message: "expected ',', found '('".into() });
        let err = parse_manifold("Sigma(2,x)").unwrap_err();
        assert!(matches!(err, Error::Parse { column: 9, .. }));
        let err = parse_manifold("Q(1)").unwrap_err();
        assert!(matches!(err, Error::Parse { column: 1, .. }));
        let err = parse_manifold("M(-1;0;)").unwrap_err();
        assert!(matches!(err, Error::Parse { column: 3, .. }));
        let err = parse_manifold("Sigma(2,3) x").unwrap_err();
        assert!(matches!(err, Error::Parse { column: 12, .. }));
        assert_eq!(parse_manifold("Sigma(2,4)").unwrap_err(), Error::NonCoprime(2, 4));
    }
}
