//! Family patterns such as `2,3,6k-1` with a `--k LO..HI` sweep.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Fixed(i64),
    /// `c·k + r`
    Affine {
        c: i64,
        r: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    slots: Vec<Slot>,
    text: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.column, self.message)
    }
}

fn parse_int(s: &str, column: usize) -> Result<i64, SpecError> {
    s.parse().map_err(|_| SpecError { column, message: format!("expected an integer, found {s:?}") })
}

impl FamilySpec {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let normalized = text.replace('\u{2212}', "-");
        let mut slots = Vec::new();
        let mut column = 1;
        for raw in normalized.split(',') {
            let lead = raw.chars().take_while(|c| c.is_whitespace()).count();
            let item: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
            let at = column + lead;
            let slot = match item.find('k') {
                None => Slot::Fixed(parse_int(&item, at)?),
                Some(pos) => {
                    let c = match &item[..pos] {
                        "" | "+" => 1,
                        "-" => -1,
                        s => parse_int(s, at)?,
                    };
                    let rest = &item[pos + 1..];
                    if !rest.is_empty() && !rest.starts_with(['+', '-']) {
                        return Err(SpecError {
                            column: at + pos + 1,
                            message: format!("expected '+' or '-' after k, found {rest:?}"),
                        });
                    }
                    let r = if rest.is_empty() { 0 } else { parse_int(rest, at + pos + 1)? };
                    Slot::Affine { c, r }
                }
            };
            slots.push(slot);
            column += raw.chars().count() + 1;
        }
        if !slots.iter().any(|s| matches!(s, Slot::Affine { .. })) {
            return Err(SpecError { column: 1, message: "pattern has no slot depending on k".into() });
        }
        Ok(FamilySpec { slots, text: text.to_string() })
    }

    /// `None` on overflow.
    pub fn instantiate(&self, k: i64) -> Option<Vec<i64>> {
        self.slots
            .iter()
            .map(|s| match *s {
                Slot::Fixed(a) => Some(a),
                Slot::Affine { c, r } => c.checked_mul(k)?.checked_add(r),
            })
            .collect()
    }

    pub fn text(&self) -> &str {
        &self.text
    }
}

/// Parses `LO..HI` (inclusive) or a single integer.
pub fn parse_range(text: &str) -> Result<(i64, i64), SpecError> {
    let text = text.trim().replace('\u{2212}', "-");
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            (parse_int(lo, 1)?, parse_int(hi, lo.len() + 3)?)
        }
        None => {
            let k = parse_int(&text, 1)?;
            (k, k)
        }
    };
    if lo > hi {
        return Err(SpecError { column: 1, message: format!("empty range {lo}..{hi}") });
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_slots() {
        let f = FamilySpec::parse("2,3,6k-1").unwrap();
        assert_eq!(f.instantiate(1).unwrap(), vec![2, 3, 5]);
        assert_eq!(f.instantiate(3).unwrap(), vec![2, 3, 17]);
        let f = FamilySpec::parse("3, 5, 15k\u{2212}2").unwrap();
        assert_eq!(f.instantiate(2).unwrap(), vec![3, 5, 28]);
        let f = FamilySpec::parse("2,k,7").unwrap();
        assert_eq!(f.instantiate(5).unwrap(), vec![2, 5, 7]);
    }

    #[test]
    fn spec_errors() {
        assert!(FamilySpec::parse("2,3,5").is_err());
        assert_eq!(FamilySpec::parse("2,x,6k").unwrap_err().column, 3);
        assert_eq!(FamilySpec::parse("2,3,6k*1").unwrap_err().column, 7);
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..8").unwrap(), (1, 8));
        assert_eq!(parse_range("1..=8").unwrap(), (1, 8));
        assert_eq!(parse_range("4").unwrap(), (4, 4));
        assert!(parse_range("5..2").is_err());
    }
}
