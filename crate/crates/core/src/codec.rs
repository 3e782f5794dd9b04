//! Gauss codes and the structured (JSON) interchange format.
//!
//! A Gauss code is a sequence of tokens `<role><label><sign>`: role `O`
//! (over, the chord's tail) or `U` (under, its head), case-insensitive; a
//! label over `[A-Za-z0-9_]`; a sign `+` or `-` (U+2212 is accepted too).
//! Every token ends in a sign, so tokens may be written back to back, as in
//! `O1-O2-U1-U2-`. Whitespace and commas between tokens are ignored.
//! Serialization always emits uppercase roles, ASCII signs and single
//! spaces.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{is_label_char, ChordLabel, DiagramError, Endpoint, GaussDiagram, Role, Sign};

const UNICODE_MINUS: char = '\u{2212}';

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("token {token}: unexpected {found:?} at offset {offset}, expected {expected}")]
    Lexical {
        token: usize,
        offset: usize,
        found: char,
        expected: &'static str,
    },

    #[error("token {token}: input ends early, expected {expected}")]
    UnexpectedEnd { token: usize, expected: &'static str },

    #[error("token {token}: empty chord label at offset {offset}")]
    EmptyLabel { token: usize, offset: usize },

    #[error("token {token}: duplicate {role} for chord {chord}")]
    DuplicateRole {
        token: usize,
        chord: ChordLabel,
        role: Role,
    },

    #[error("token {token}: chord {chord} occurs more than twice")]
    TooManyOccurrences { token: usize, chord: ChordLabel },

    #[error("token {token}: chord {chord} occurs only once")]
    LoneOccurrence { token: usize, chord: ChordLabel },

    #[error("token {token}: sign mismatch for chord {chord} ({first} then {second})")]
    SignMismatch {
        token: usize,
        chord: ChordLabel,
        first: Sign,
        second: Sign,
    },
}

impl CodecError {
    /// Index of the offending token.
    pub fn token(&self) -> usize {
        match self {
            CodecError::Lexical { token, .. }
            | CodecError::UnexpectedEnd { token, .. }
            | CodecError::EmptyLabel { token, .. }
            | CodecError::DuplicateRole { token, .. }
            | CodecError::TooManyOccurrences { token, .. }
            | CodecError::LoneOccurrence { token, .. }
            | CodecError::SignMismatch { token, .. } => *token,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Token {
    role: Role,
    label: ChordLabel,
    sign: Sign,
}

fn lex(text: &str) -> Result<Vec<Token>, CodecError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    loop {
        while i < chars.len() && (chars[i].is_whitespace() || chars[i] == ',') {
            i += 1;
        }
        if i == chars.len() {
            return Ok(tokens);
        }
        let token = tokens.len();

        let role = match chars[i] {
            'O' | 'o' => Role::Tail,
            'U' | 'u' => Role::Head,
            found => {
                return Err(CodecError::Lexical {
                    token,
                    offset: i,
                    found,
                    expected: "role letter O or U",
                })
            }
        };
        i += 1;

        let start = i;
        while i < chars.len() && is_label_char(chars[i]) {
            i += 1;
        }
        if start == i {
            match chars.get(i) {
                Some(&found) if !is_sign_char(found) => {
                    return Err(CodecError::Lexical {
                        token,
                        offset: i,
                        found,
                        expected: "chord label",
                    })
                }
                _ => return Err(CodecError::EmptyLabel { token, offset: i }),
            }
        }
        let label = ChordLabel::new(chars[start..i].iter().collect::<String>())
            .expect("lexed label characters are valid");

        let sign = match chars.get(i) {
            Some('+') => Sign::Positive,
            Some('-') | Some(&UNICODE_MINUS) => Sign::Negative,
            Some(&found) => {
                return Err(CodecError::Lexical {
                    token,
                    offset: i,
                    found,
                    expected: "sign + or -",
                })
            }
            None => {
                return Err(CodecError::UnexpectedEnd {
                    token,
                    expected: "sign + or -",
                })
            }
        };
        i += 1;
        tokens.push(Token { role, label, sign });
    }
}

fn is_sign_char(c: char) -> bool {
    matches!(c, '+' | '-' | UNICODE_MINUS)
}

/// Parses a Gauss code. Token `i` becomes endpoint `i`.
pub fn parse_gauss_code(text: &str) -> Result<GaussDiagram, CodecError> {
    let tokens = lex(text)?;

    struct Seen {
        first_token: usize,
        role: Role,
        sign: Sign,
        count: usize,
    }
    let mut seen: BTreeMap<&ChordLabel, Seen> = BTreeMap::new();
    for (index, token) in tokens.iter().enumerate() {
        match seen.get_mut(&token.label) {
            None => {
                seen.insert(
                    &token.label,
                    Seen {
                        first_token: index,
                        role: token.role,
                        sign: token.sign,
                        count: 1,
                    },
                );
            }
            Some(entry) => {
                if entry.count >= 2 {
                    return Err(CodecError::TooManyOccurrences {
                        token: index,
                        chord: token.label.clone(),
                    });
                }
                if entry.role == token.role {
                    return Err(CodecError::DuplicateRole {
                        token: index,
                        chord: token.label.clone(),
                        role: token.role,
                    });
                }
                if entry.sign != token.sign {
                    return Err(CodecError::SignMismatch {
                        token: index,
                        chord: token.label.clone(),
                        first: entry.sign,
                        second: token.sign,
                    });
                }
                entry.count += 1;
            }
        }
    }
    if let Some((label, entry)) = seen
        .iter()
        .filter(|(_, entry)| entry.count == 1)
        .min_by_key(|(_, entry)| entry.first_token)
    {
        return Err(CodecError::LoneOccurrence {
            token: entry.first_token,
            chord: (*label).clone(),
        });
    }

    let signs = seen
        .iter()
        .map(|(label, entry)| ((*label).clone(), entry.sign))
        .collect();
    let endpoints = tokens
        .into_iter()
        .map(|t| Endpoint::new(t.label, t.role))
        .collect();
    Ok(GaussDiagram::rebuild(endpoints, signs))
}

/// Emits the code from the current basepoint, space separated.
pub fn serialize_gauss_code(d: &GaussDiagram) -> String {
    let mut out = String::new();
    for (i, endpoint) in d.endpoints().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let role = match endpoint.role {
            Role::Tail => 'O',
            Role::Head => 'U',
        };
        let sign = d.sign(&endpoint.chord).expect("endpoint chord has a sign");
        write!(out, "{role}{}{sign}", endpoint.chord).unwrap();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructuredEndpoint {
    pub chord: String,
    pub role: Role,
}

/// The JSON document form: `{"endpoints": [{"chord", "role"}...], "signs":
/// {label: +1|-1}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructuredDiagram {
    pub endpoints: Vec<StructuredEndpoint>,
    pub signs: BTreeMap<ChordLabel, i64>,
}

#[derive(Debug, Error)]
pub enum StructuredError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),

    #[error("sign of chord {chord} must be +1 or -1, got {value}")]
    InvalidSign { chord: ChordLabel, value: i64 },

    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

pub fn to_structured(d: &GaussDiagram) -> StructuredDiagram {
    StructuredDiagram {
        endpoints: d
            .endpoints()
            .iter()
            .map(|e| StructuredEndpoint {
                chord: e.chord.to_string(),
                role: e.role,
            })
            .collect(),
        signs: d
            .signs()
            .into_iter()
            .map(|(label, sign)| (label, sign.value()))
            .collect(),
    }
}

pub fn from_structured(doc: &StructuredDiagram) -> Result<GaussDiagram, StructuredError> {
    let endpoints = doc
        .endpoints
        .iter()
        .map(|e| Ok(Endpoint::new(ChordLabel::new(e.chord.as_str())?, e.role)))
        .collect::<Result<Vec<_>, DiagramError>>()?;
    let signs = doc
        .signs
        .iter()
        .map(|(chord, &value)| {
            Sign::from_value(value)
                .map(|sign| (chord.clone(), sign))
                .ok_or_else(|| StructuredError::InvalidSign {
                    chord: chord.clone(),
                    value,
                })
        })
        .collect::<Result<BTreeMap<_, _>, _>>()?;
    Ok(GaussDiagram::new(endpoints, signs)?)
}

pub fn to_json(d: &GaussDiagram) -> String {
    serde_json::to_string(&to_structured(d)).expect("structured diagrams always serialize")
}

pub fn from_json(text: &str) -> Result<GaussDiagram, StructuredError> {
    let doc: StructuredDiagram = serde_json::from_str(text)?;
    from_structured(&doc)
}
