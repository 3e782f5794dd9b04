//! The Gauss diagram value type.
//!
//! A diagram is a circle carrying one directed, signed chord per classical
//! crossing. We store it as the sequence of chord endpoints read
//! counterclockwise from an arbitrary basepoint, together with one sign per
//! chord. The tail of a chord sits at the overcrossing, the head at the
//! undercrossing.
//!
//! Virtual crossings leave no trace here: the virtual moves only reorder
//! strands without touching the cyclic sequence of classical crossings, so
//! they act as the identity on this type.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};
use smol_str::SmolStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("invalid chord label {0:?}: labels are nonempty strings over [A-Za-z0-9_]")]
    InvalidLabel(String),

    #[error("duplicate {role} for chord {chord}")]
    DuplicateRole {
        chord: ChordLabel,
        role: Role,
        position: usize,
    },

    #[error("chord {chord} has only a {present}; every chord needs one tail and one head")]
    LoneEndpoint { chord: ChordLabel, present: Role },

    #[error("chord {0} has no sign")]
    MissingSign(ChordLabel),

    #[error("sign given for chord {0}, which has no endpoints")]
    ExtraSign(ChordLabel),

    #[error("position {position} is out of range for a diagram with {len} endpoints")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("positions must be distinct, got {0} twice")]
    SamePosition(usize),

    #[error("unknown chord {0}")]
    UnknownChord(ChordLabel),

    #[error("expected distinct chords, got {0} more than once")]
    RepeatedChord(ChordLabel),
}

/// Name of a crossing. Nonempty, drawn from `[A-Za-z0-9_]`.
///
/// Labels order "naturally": purely numeric labels compare by value and
/// sort before everything else, so `2 < 10 < a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ChordLabel {
    /// Value of a numeric label without leading zeros that fits in a
    /// `u64`, else `u64::MAX`.
    rank: u64,
    text: SmolStr,
}

impl ChordLabel {
    pub fn new(text: impl Into<String>) -> Result<Self, DiagramError> {
        let text = text.into();
        if Self::is_valid(&text) {
            Ok(ChordLabel::from_valid(&text))
        } else {
            Err(DiagramError::InvalidLabel(text))
        }
    }

    fn from_valid(text: &str) -> Self {
        let rank = match text.parse::<u64>() {
            Ok(value) if value < u64::MAX && !(text.len() > 1 && text.starts_with('0')) => value,
            _ => u64::MAX,
        };
        ChordLabel {
            rank,
            text: SmolStr::new(text),
        }
    }

    pub fn is_valid(text: &str) -> bool {
        !text.is_empty() && text.chars().all(is_label_char)
    }

    pub fn from_index(index: usize) -> Self {
        ChordLabel {
            rank: index as u64,
            text: SmolStr::new(itoa::Buffer::new().format(index)),
        }
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    fn numeric_key(&self) -> Option<&str> {
        if self.text.bytes().all(|b| b.is_ascii_digit()) {
            Some(self.text.trim_start_matches('0'))
        } else {
            None
        }
    }
}

pub(crate) fn is_label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl Ord for ChordLabel {
    #[inline]
    fn cmp(&self, other: &Self) -> Ordering {
        if self.rank != u64::MAX && other.rank != u64::MAX {
            return self.rank.cmp(&other.rank);
        }
        match (self.numeric_key(), other.numeric_key()) {
            (Some(a), Some(b)) => a
                .len()
                .cmp(&b.len())
                .then_with(|| a.cmp(b))
                .then_with(|| self.text.cmp(&other.text)),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.text.cmp(&other.text),
        }
    }
}

impl PartialOrd for ChordLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ChordLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl TryFrom<String> for ChordLabel {
    type Error = DiagramError;

    fn try_from(text: String) -> Result<Self, Self::Error> {
        ChordLabel::new(text)
    }
}

impl From<ChordLabel> for String {
    fn from(label: ChordLabel) -> String {
        label.text.to_string()
    }
}

impl std::str::FromStr for ChordLabel {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ChordLabel::new(s)
    }
}

/// Which end of a chord an endpoint is. Tails are overcrossings (`O` in a
/// Gauss code), heads are undercrossings (`U`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Tail,
    Head,
}

impl Role {
    pub fn other(self) -> Role {
        match self {
            Role::Tail => Role::Head,
            Role::Head => Role::Tail,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Tail => "tail",
            Role::Head => "head",
        })
    }
}

/// Crossing sign. `Positive < Negative` in the derived order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub chord: ChordLabel,
    pub role: Role,
}

impl Endpoint {
    pub fn new(chord: ChordLabel, role: Role) -> Self {
        Endpoint { chord, role }
    }

    pub fn tail(chord: ChordLabel) -> Self {
        Endpoint::new(chord, Role::Tail)
    }

    pub fn head(chord: ChordLabel) -> Self {
        Endpoint::new(chord, Role::Head)
    }
}

/// Where a chord's two ends sit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChordPlace {
    pub tail: usize,
    pub head: usize,
    pub sign: Sign,
}

impl ChordPlace {
    /// The two positions, smaller first.
    pub fn span(&self) -> (usize, usize) {
        (self.tail.min(self.head), self.tail.max(self.head))
    }

    pub fn position(&self, role: Role) -> usize {
        match role {
            Role::Tail => self.tail,
            Role::Head => self.head,
        }
    }
}

/// Rotation-and-relabeling invariant key. Two diagrams have the same key iff
/// one is a rotated, relabeled presentation of the other.
pub type CanonicalKey = Vec<(Role, u32, Sign)>;

/// Chord places sorted by label. Diagrams are small, so a sorted vector
/// beats a tree map on every operation the moves need.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub(crate) struct ChordTable(Vec<(ChordLabel, ChordPlace)>);

impl ChordTable {
    /// `entries` must already be sorted by label with no repeats.
    fn from_sorted(entries: Vec<(ChordLabel, ChordPlace)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        ChordTable(entries)
    }

    fn find(&self, label: &ChordLabel) -> Result<usize, usize> {
        self.0.binary_search_by(|(l, _)| l.cmp(label))
    }

    pub(crate) fn len(&self) -> usize {
        self.0.len()
    }

    pub(crate) fn get(&self, label: &ChordLabel) -> Option<&ChordPlace> {
        self.find(label).ok().map(|i| &self.0[i].1)
    }

    pub(crate) fn get_mut(&mut self, label: &ChordLabel) -> Option<&mut ChordPlace> {
        self.find(label).ok().map(|i| &mut self.0[i].1)
    }

    pub(crate) fn contains_key(&self, label: &ChordLabel) -> bool {
        self.find(label).is_ok()
    }

    /// Adds or replaces the place of `label`.
    pub(crate) fn insert(&mut self, label: ChordLabel, place: ChordPlace) {
        match self.find(&label) {
            Ok(i) => self.0[i].1 = place,
            Err(i) => self.0.insert(i, (label, place)),
        }
    }

    pub(crate) fn retain(&mut self, mut keep: impl FnMut(&ChordLabel, &mut ChordPlace) -> bool) {
        self.0.retain_mut(|(label, place)| keep(label, place));
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = (&ChordLabel, &ChordPlace)> {
        self.0.iter().map(|(l, p)| (l, p))
    }

    pub(crate) fn keys(&self) -> impl Iterator<Item = &ChordLabel> {
        self.0.iter().map(|(l, _)| l)
    }

    pub(crate) fn values(&self) -> impl Iterator<Item = &ChordPlace> {
        self.0.iter().map(|(_, p)| p)
    }

    pub(crate) fn values_mut(&mut self) -> impl Iterator<Item = &mut ChordPlace> {
        self.0.iter_mut().map(|(_, p)| p)
    }
}

impl std::ops::Index<&ChordLabel> for ChordTable {
    type Output = ChordPlace;

    fn index(&self, label: &ChordLabel) -> &ChordPlace {
        self.get(label).expect("chord is present")
    }
}

/// A validated Gauss diagram. Immutable; every rewrite returns a new value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussDiagram {
    endpoints: Vec<Endpoint>,
    chords: ChordTable,
}

impl GaussDiagram {
    /// Validates and builds a diagram. The given order and basepoint are
    /// preserved.
    pub fn new(
        endpoints: Vec<Endpoint>,
        signs: BTreeMap<ChordLabel, Sign>,
    ) -> Result<Self, DiagramError> {
        let mut order: Vec<(&ChordLabel, Role, usize)> = endpoints
            .iter()
            .enumerate()
            .map(|(position, e)| (&e.chord, e.role, position))
            .collect();
        order.sort_unstable();

        // a repeated role is reported at its later position, earliest first
        let duplicate = order
            .windows(2)
            .filter(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1)
            .min_by_key(|w| w[1].2);
        if let Some(w) = duplicate {
            return Err(DiagramError::DuplicateRole {
                chord: w[1].0.clone(),
                role: w[1].1,
                position: w[1].2,
            });
        }

        // endpoints grouped by label merge against the signs, which are
        // sorted the same way
        let mut signs = signs.into_iter().peekable();
        let mut extra = None;
        let mut places = Vec::with_capacity(order.len() / 2);
        let mut rest = &order[..];
        while let Some(&(label, role, position)) = rest.first() {
            let (tail, head) = match rest.get(1) {
                Some(&(next, _, head)) if next == label && role == Role::Tail => {
                    rest = &rest[2..];
                    (position, head)
                }
                _ => {
                    return Err(DiagramError::LoneEndpoint {
                        chord: label.clone(),
                        present: role,
                    })
                }
            };
            while let Some((unused, _)) = signs.next_if(|(l, _)| l < label) {
                extra.get_or_insert(unused);
            }
            let (label, sign) = signs
                .next_if(|(l, _)| l == label)
                .ok_or_else(|| DiagramError::MissingSign(label.clone()))?;
            places.push((label, ChordPlace { tail, head, sign }));
        }
        if let Some(extra) = extra.or_else(|| signs.next().map(|(l, _)| l)) {
            return Err(DiagramError::ExtraSign(extra));
        }
        let chords = ChordTable::from_sorted(places);

        Ok(GaussDiagram { endpoints, chords })
    }

    pub fn empty() -> Self {
        GaussDiagram {
            endpoints: Vec::new(),
            chords: ChordTable::default(),
        }
    }

    /// Rebuilds from parts produced by a rewrite that already preserves
    /// validity.
    pub(crate) fn rebuild(endpoints: Vec<Endpoint>, signs: BTreeMap<ChordLabel, Sign>) -> Self {
        match GaussDiagram::new(endpoints, signs) {
            Ok(d) => d,
            Err(e) => panic!("rewrite produced an invalid diagram: {e}"),
        }
    }

    /// Assembles a diagram from a rewrite that tracked every chord's new
    /// place itself.
    pub(crate) fn from_parts(endpoints: Vec<Endpoint>, chords: ChordTable) -> Self {
        let d = GaussDiagram { endpoints, chords };
        debug_assert!(d.is_consistent(), "rewrite produced an inconsistent diagram");
        d
    }

    fn is_consistent(&self) -> bool {
        let at = |position: usize, label: &ChordLabel, role: Role| {
            self.endpoints
                .get(position)
                .is_some_and(|e| &e.chord == label && e.role == role)
        };
        self.endpoints.len() == 2 * self.chords.len()
            && self
                .chords
                .iter()
                .all(|(label, place)| at(place.tail, label, Role::Tail) && at(place.head, label, Role::Head))
    }

    /// Number of endpoints, `2n`.
    pub fn len(&self) -> usize {
        self.endpoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.endpoints.is_empty()
    }

    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    pub fn endpoints(&self) -> &[Endpoint] {
        &self.endpoints
    }

    pub fn endpoint(&self, position: usize) -> &Endpoint {
        &self.endpoints[position]
    }

    /// Chord labels in label order.
    pub fn labels(&self) -> impl Iterator<Item = &ChordLabel> {
        self.chords.keys()
    }

    /// Chord labels in order of first appearance from the basepoint.
    pub fn labels_by_position(&self) -> Vec<&ChordLabel> {
        let mut labels: Vec<_> = self.chords.iter().collect();
        labels.sort_by_key(|(_, place)| place.span().0);
        labels.into_iter().map(|(label, _)| label).collect()
    }

    pub fn contains(&self, label: &ChordLabel) -> bool {
        self.chords.contains_key(label)
    }

    pub fn place(&self, label: &ChordLabel) -> Result<&ChordPlace, DiagramError> {
        self.chords
            .get(label)
            .ok_or_else(|| DiagramError::UnknownChord(label.clone()))
    }

    pub fn sign(&self, label: &ChordLabel) -> Result<Sign, DiagramError> {
        self.place(label).map(|p| p.sign)
    }

    pub fn signs(&self) -> BTreeMap<ChordLabel, Sign> {
        self.chords
            .iter()
            .map(|(label, place)| (label.clone(), place.sign))
            .collect()
    }

    pub(crate) fn places(&self) -> &ChordTable {
        &self.chords
    }

    /// True iff `p` and `q` are cyclically consecutive. With two endpoints
    /// the pair is adjacent both ways round.
    pub fn adjacent(&self, p: usize, q: usize) -> Result<bool, DiagramError> {
        let len = self.len();
        for position in [p, q] {
            if position >= len {
                return Err(DiagramError::PositionOutOfRange { position, len });
            }
        }
        if p == q {
            return Err(DiagramError::SamePosition(p));
        }
        Ok(self.adjacent_unchecked(p, q))
    }

    pub(crate) fn adjacent_unchecked(&self, p: usize, q: usize) -> bool {
        let len = self.len();
        (p + 1) % len == q || (q + 1) % len == p
    }

    /// Interleaving test: exactly one end of `b` lies strictly between the
    /// two ends of `a`.
    pub fn chords_cross(&self, a: &ChordLabel, b: &ChordLabel) -> Result<bool, DiagramError> {
        if a == b {
            return Err(DiagramError::RepeatedChord(a.clone()));
        }
        let (lo, hi) = self.place(a)?.span();
        let other = self.place(b)?;
        let inside = |p: usize| lo < p && p < hi;
        Ok(inside(other.tail) != inside(other.head))
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.chords.values().map(|p| p.sign.value()).sum()
    }

    /// Moves the basepoint: the new endpoint `i` is the old endpoint `i + k`.
    pub fn rotate(&self, k: isize) -> GaussDiagram {
        let len = self.len();
        if len == 0 {
            return self.clone();
        }
        let shift = k.rem_euclid(len as isize) as usize;
        let mut endpoints = self.endpoints.clone();
        endpoints.rotate_left(shift);
        let mut chords = self.chords.clone();
        for place in chords.values_mut() {
            place.tail = (place.tail + len - shift) % len;
            place.head = (place.head + len - shift) % len;
        }
        GaussDiagram::from_parts(endpoints, chords)
    }

    /// Smallest positive integer not already used as a label.
    pub fn fresh_label(&self) -> ChordLabel {
        self.fresh_labels(1).remove(0)
    }

    pub fn fresh_labels(&self, count: usize) -> Vec<ChordLabel> {
        // labels with a rank iterate in increasing rank
        let mut used = self
            .chords
            .keys()
            .map(|label| label.rank)
            .filter(|&rank| rank != u64::MAX)
            .peekable();
        let mut out = Vec::with_capacity(count);
        let mut candidate = 1;
        while out.len() < count {
            while used.next_if(|&rank| rank < candidate).is_some() {}
            if used.next_if_eq(&candidate).is_none() {
                out.push(ChordLabel::from_index(candidate as usize));
            }
            candidate += 1;
        }
        out
    }

    fn encode_rotation(&self, shift: usize) -> CanonicalKey {
        let len = self.len();
        let mut numbering: BTreeMap<&ChordLabel, u32> = BTreeMap::new();
        (0..len)
            .map(|i| {
                let endpoint = &self.endpoints[(i + shift) % len];
                let next = numbering.len() as u32 + 1;
                let number = *numbering.entry(&endpoint.chord).or_insert(next);
                (endpoint.role, number, self.chords[&endpoint.chord].sign)
            })
            .collect()
    }

    fn canonical_shift(&self) -> (usize, CanonicalKey) {
        (0..self.len().max(1))
            .map(|shift| (shift, self.encode_rotation(shift)))
            .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
            .expect("at least one rotation")
    }

    /// Key that identifies the diagram up to rotation and relabeling.
    pub fn canonical_key(&self) -> CanonicalKey {
        self.canonical_shift().1
    }

    /// The lexicographically least rotation, with chords renamed `1..n` in
    /// order of first appearance. Ordering per endpoint is role (tail before
    /// head), then chord number, then sign (`+` before `-`). Mirror images
    /// are not identified.
    pub fn canonical(&self) -> GaussDiagram {
        let (_, key) = self.canonical_shift();
        GaussDiagram::from_canonical_key(&key)
    }

    fn from_canonical_key(key: &CanonicalKey) -> GaussDiagram {
        let mut signs = BTreeMap::new();
        let endpoints = key
            .iter()
            .map(|&(role, number, sign)| {
                let label = ChordLabel::from_index(number as usize);
                signs.insert(label.clone(), sign);
                Endpoint::new(label, role)
            })
            .collect();
        GaussDiagram::rebuild(endpoints, signs)
    }

    /// Equality up to basepoint and labels.
    pub fn same_diagram(&self, other: &GaussDiagram) -> bool {
        self.len() == other.len() && self.canonical_key() == other.canonical_key()
    }
}
