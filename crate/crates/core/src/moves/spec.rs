//! Text form of moves:
//!
//! ```text
//! r1:del:<chord>
//! r1:ins:<gap>:<+|->:<hf|tf>
//! r2:del:<c1>,<c2>
//! r2:ins:<head gap>:<tail gap>:<+|->:<x|u>
//! r3:<c1>,<c2>,<c3>[:heads=<a>,<b>]
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Move, Pair, Triple};
use crate::diagram::{ChordLabel, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed move spec {spec:?}: bad {field} {value:?} ({expected})")]
pub struct MoveSpecError {
    pub spec: String,
    pub field: &'static str,
    pub value: String,
    pub expected: &'static str,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::R1Delete { chord } => write!(f, "r1:del:{chord}"),
            Move::R1Insert {
                gap,
                sign,
                head_first,
            } => write!(
                f,
                "r1:ins:{gap}:{sign}:{}",
                if *head_first { "hf" } else { "tf" }
            ),
            Move::R2Delete { chords } => write!(f, "r2:del:{chords}"),
            Move::R2Insert {
                head_gap,
                tail_gap,
                first_sign,
                crossed,
            } => write!(
                f,
                "r2:ins:{head_gap}:{tail_gap}:{first_sign}:{}",
                if *crossed { "x" } else { "u" }
            ),
            Move::R3 { chords, heads } => {
                write!(f, "r3:{chords}")?;
                if let Some(heads) = heads {
                    write!(f, ":heads={heads}")?;
                }
                Ok(())
            }
        }
    }
}

struct Fields<'a> {
    spec: &'a str,
    parts: std::str::Split<'a, char>,
}

impl<'a> Fields<'a> {
    fn error(&self, field: &'static str, value: &str, expected: &'static str) -> MoveSpecError {
        MoveSpecError {
            spec: self.spec.to_string(),
            field,
            value: value.to_string(),
            expected,
        }
    }

    fn next(&mut self, field: &'static str, expected: &'static str) -> Result<&'a str, MoveSpecError> {
        self.parts
            .next()
            .ok_or_else(|| self.error(field, "", expected))
    }

    fn finish(mut self) -> Result<(), MoveSpecError> {
        match self.parts.next() {
            None => Ok(()),
            Some(extra) => Err(self.error("trailing field", extra, "nothing")),
        }
    }

    fn gap(&mut self, field: &'static str) -> Result<usize, MoveSpecError> {
        let value = self.next(field, "a gap index")?;
        value
            .parse()
            .map_err(|_| self.error(field, value, "a nonnegative integer"))
    }

    fn sign(&mut self) -> Result<Sign, MoveSpecError> {
        let value = self.next("sign", "+ or -")?;
        match value {
            "+" => Ok(Sign::Positive),
            "-" | "\u{2212}" => Ok(Sign::Negative),
            _ => Err(self.error("sign", value, "+ or -")),
        }
    }

    fn labels(&self, field: &'static str, value: &str, count: usize) -> Result<Vec<ChordLabel>, MoveSpecError> {
        let expected = if count == 2 {
            "two distinct labels separated by a comma"
        } else {
            "three distinct labels separated by commas"
        };
        let labels = value
            .split(',')
            .map(ChordLabel::new)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| self.error(field, value, expected))?;
        if labels.len() != count {
            return Err(self.error(field, value, expected));
        }
        Ok(labels)
    }

    fn pair(&mut self, field: &'static str) -> Result<Pair, MoveSpecError> {
        let value = self.next(field, "two chord labels")?;
        let mut labels = self.labels(field, value, 2)?;
        let b = labels.pop().unwrap();
        let a = labels.pop().unwrap();
        Pair::new(a, b).map_err(|_| self.error(field, value, "two distinct labels"))
    }
}

impl FromStr for Move {
    type Err = MoveSpecError;

    fn from_str(spec: &str) -> Result<Move, MoveSpecError> {
        let spec = spec.trim();
        let mut fields = Fields {
            spec,
            parts: spec.split(':'),
        };
        let kind = fields.next("move kind", "r1, r2 or r3")?;
        let m = match kind {
            "r1" | "r2" => {
                let action = fields.next("action", "del or ins")?;
                match (kind, action) {
                    ("r1", "del") => {
                        let value = fields.next("chord", "a chord label")?;
                        let chord = ChordLabel::new(value)
                            .map_err(|_| fields.error("chord", value, "a chord label"))?;
                        Move::R1Delete { chord }
                    }
                    ("r1", "ins") => {
                        let gap = fields.gap("gap")?;
                        let sign = fields.sign()?;
                        let value = fields.next("order", "hf or tf")?;
                        let head_first = match value {
                            "hf" => true,
                            "tf" => false,
                            _ => return Err(fields.error("order", value, "hf or tf")),
                        };
                        Move::R1Insert {
                            gap,
                            sign,
                            head_first,
                        }
                    }
                    ("r2", "del") => Move::R2Delete {
                        chords: fields.pair("chords")?,
                    },
                    ("r2", "ins") => {
                        let head_gap = fields.gap("head gap")?;
                        let tail_gap = fields.gap("tail gap")?;
                        let first_sign = fields.sign()?;
                        let value = fields.next("pattern", "x or u")?;
                        let crossed = match value {
                            "x" => true,
                            "u" => false,
                            _ => return Err(fields.error("pattern", value, "x or u")),
                        };
                        Move::R2Insert {
                            head_gap,
                            tail_gap,
                            first_sign,
                            crossed,
                        }
                    }
                    _ => return Err(fields.error("action", action, "del or ins")),
                }
            }
            "r3" => {
                let value = fields.next("chords", "three chord labels")?;
                let mut labels = fields.labels("chords", value, 3)?;
                let c = labels.pop().unwrap();
                let b = labels.pop().unwrap();
                let a = labels.pop().unwrap();
                let chords = Triple::new(a, b, c)
                    .map_err(|_| fields.error("chords", value, "three distinct labels"))?;
                let heads = match fields.parts.next() {
                    None => None,
                    Some(extra) => match extra.strip_prefix("heads=") {
                        Some(pair) => {
                            let mut labels = fields.labels("heads", pair, 2)?;
                            let b = labels.pop().unwrap();
                            let a = labels.pop().unwrap();
                            Some(Pair::new(a, b).map_err(|_| {
                                fields.error("heads", pair, "two distinct labels")
                            })?)
                        }
                        None => return Err(fields.error("heads", extra, "heads=<a>,<b>")),
                    },
                };
                Move::R3 { chords, heads }
            }
            _ => return Err(fields.error("move kind", kind, "r1, r2 or r3")),
        };
        fields.finish()?;
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        for text in [
            "r1:del:7",
            "r1:ins:3:+:hf",
            "r1:ins:0:-:tf",
            "r2:del:1,4",
            "r2:ins:2:5:-:x",
            "r2:ins:0:0:+:u",
            "r3:1,3,4",
            "r3:1,2,3:heads=2,3",
        ] {
            let m: Move = text.parse().unwrap();
            assert_eq!(m.to_string(), text);
        }
    }

    #[test]
    fn normalizes_label_order() {
        let m: Move = "r3:4,1,3".parse().unwrap();
        assert_eq!(m.to_string(), "r3:1,3,4");
        let m: Move = "r2:del:b,a".parse().unwrap();
        assert_eq!(m.to_string(), "r2:del:a,b");
    }

    #[test]
    fn errors_name_the_field() {
        let field = |s: &str| s.parse::<Move>().unwrap_err().field;
        assert_eq!(field("r4:1"), "move kind");
        assert_eq!(field("r1:cut:1"), "action");
        assert_eq!(field("r1:del:"), "chord");
        assert_eq!(field("r1:ins:x:+:hf"), "gap");
        assert_eq!(field("r1:ins:0:*:hf"), "sign");
        assert_eq!(field("r1:ins:0:+:up"), "order");
        assert_eq!(field("r2:del:1"), "chords");
        assert_eq!(field("r2:del:1,1"), "chords");
        assert_eq!(field("r2:ins:0:q:+:x"), "tail gap");
        assert_eq!(field("r2:ins:0:0:+:z"), "pattern");
        assert_eq!(field("r3:1,2"), "chords");
        assert_eq!(field("r3:1,2,3:tails=1,2"), "heads");
        assert_eq!(field("r1:del:1:2"), "trailing field");
    }
}
