//! Matched triples and their 3-signs.
//!
//! Three chords form a matched triple when their six endpoints split into
//! three arcs of two adjacent endpoints each: one arc holding two heads, one
//! holding two tails, and one holding a head and a tail of distinct chords.
//! "Adjacent" is taken in the whole diagram, so no other chord may end
//! inside an arc.
//!
//! Each chord of a matched triple carries three units:
//!
//! * sign: the crossing sign;
//! * parity: `+1` if it crosses an even number of the other two chords;
//! * direction: `+1` if, walking the three arcs counterclockwise, its head
//!   lies on the arc right after its tail's arc.
//!
//! The 3-sign is their product, and a matched triple can be moved by R3
//! exactly when all three 3-signs agree.
//!
//! When the triple owns the whole circle (three chords, six endpoints) the
//! endpoints pair into arcs in two different ways, and each may or may not
//! be matched. [`triple_placements`] reports every matched one;
//! [`analyze_triple`] reads the one cut at the basepoint.

use std::fmt;

use crate::diagram::{ChordLabel, DiagramError, GaussDiagram, Role, Sign};

/// Three distinct chords, kept in label order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple([ChordLabel; 3]);

impl Triple {
    pub fn new(a: ChordLabel, b: ChordLabel, c: ChordLabel) -> Result<Self, DiagramError> {
        let mut chords = [a, b, c];
        chords.sort();
        if chords[0] == chords[1] || chords[1] == chords[2] {
            return Err(DiagramError::RepeatedChord(chords[1].clone()));
        }
        Ok(Triple(chords))
    }

    pub fn chords(&self) -> &[ChordLabel; 3] {
        &self.0
    }

    pub fn contains(&self, label: &ChordLabel) -> bool {
        self.0.contains(label)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

/// Two distinct chords, kept in label order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair([ChordLabel; 2]);

impl Pair {
    pub fn new(a: ChordLabel, b: ChordLabel) -> Result<Self, DiagramError> {
        if a == b {
            return Err(DiagramError::RepeatedChord(a));
        }
        Ok(if a < b { Pair([a, b]) } else { Pair([b, a]) })
    }

    pub fn chords(&self) -> &[ChordLabel; 2] {
        &self.0
    }

    pub fn first(&self) -> &ChordLabel {
        &self.0[0]
    }

    pub fn second(&self) -> &ChordLabel {
        &self.0[1]
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.0[0], self.0[1])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcKind {
    Heads,
    Tails,
    Mixed,
}

/// Two adjacent endpoints; `end` comes right after `start` counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub kind: ArcKind,
    pub start: usize,
    pub end: usize,
}

impl Arc {
    pub fn contains(&self, position: usize) -> bool {
        self.start == position || self.end == position
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordRecord {
    pub chord: ChordLabel,
    pub sign: Sign,
    pub parity: Sign,
    pub direction: Sign,
    pub three_sign: Sign,
}

/// One way of reading the triple as matched: its arcs in counterclockwise
/// order and the per-chord units.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Placement {
    pub arcs: [Arc; 3],
    /// Same order as the triple's labels.
    pub records: [ChordRecord; 3],
    /// The two chords whose heads make up the heads arc.
    pub heads: Pair,
}

impl Placement {
    pub fn movable(&self) -> bool {
        let first = self.records[0].three_sign;
        self.records.iter().all(|r| r.three_sign == first)
    }

    pub fn arc(&self, kind: ArcKind) -> &Arc {
        self.arcs
            .iter()
            .find(|arc| arc.kind == kind)
            .expect("a placement has one arc of each kind")
    }

    pub fn record(&self, chord: &ChordLabel) -> Option<&ChordRecord> {
        self.records.iter().find(|r| &r.chord == chord)
    }
}

/// Verdict on a triple, with its arcs read from the basepoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleAnalysis {
    pub triple: Triple,
    pub placement: Option<Placement>,
}

impl TripleAnalysis {
    pub fn matched(&self) -> bool {
        self.placement.is_some()
    }

    pub fn movable(&self) -> bool {
        self.placement.as_ref().is_some_and(Placement::movable)
    }

    pub fn record(&self, chord: &ChordLabel) -> Option<&ChordRecord> {
        self.placement.as_ref()?.record(chord)
    }
}

fn check_present(d: &GaussDiagram, triple: &Triple) -> Result<(), DiagramError> {
    for chord in triple.chords() {
        d.place(chord)?;
    }
    Ok(())
}

/// Ways of splitting the triple's six endpoints into three adjacent pairs:
/// first the one cut at the lowest position, then the shifted one. Only a
/// triple owning the whole circle can have both.
fn arc_pairings(d: &GaussDiagram, triple: &Triple) -> Vec<[(usize, usize); 3]> {
    let len = d.len();
    let mut positions: Vec<usize> = triple
        .chords()
        .iter()
        .flat_map(|c| {
            let place = d.places()[c];
            [place.tail, place.head]
        })
        .collect();
    positions.sort_unstable();
    let s = &positions;
    [
        [(s[0], s[1]), (s[2], s[3]), (s[4], s[5])],
        [(s[1], s[2]), (s[3], s[4]), (s[5], s[0])],
    ]
    .into_iter()
    .filter(|pairing| pairing.iter().all(|&(a, b)| (a + 1) % len == b))
    .collect()
}

/// Every matched placement of the triple, at most two.
pub fn triple_placements(d: &GaussDiagram, triple: &Triple) -> Result<Vec<Placement>, DiagramError> {
    check_present(d, triple)?;
    Ok(arc_pairings(d, triple)
        .into_iter()
        .filter_map(|pairing| place(d, triple, pairing))
        .collect())
}

fn place(d: &GaussDiagram, triple: &Triple, pairing: [(usize, usize); 3]) -> Option<Placement> {
    let mut arcs = Vec::with_capacity(3);
    for (start, end) in pairing {
        let (a, b) = (d.endpoint(start), d.endpoint(end));
        let kind = match (a.role, b.role) {
            (Role::Head, Role::Head) => ArcKind::Heads,
            (Role::Tail, Role::Tail) => ArcKind::Tails,
            _ if a.chord == b.chord => return None,
            _ => ArcKind::Mixed,
        };
        arcs.push(Arc { kind, start, end });
    }
    let arcs: [Arc; 3] = arcs.try_into().ok()?;
    let has = |kind| arcs.iter().filter(|arc| arc.kind == kind).count() == 1;
    if !(has(ArcKind::Heads) && has(ArcKind::Tails) && has(ArcKind::Mixed)) {
        return None;
    }

    let arc_of = |position: usize| {
        arcs.iter()
            .position(|arc| arc.contains(position))
            .expect("every triple endpoint lies on an arc")
    };
    let records = triple.chords().clone().map(|chord| {
        let place = d.places()[&chord];
        let (tail_arc, head_arc) = (arc_of(place.tail), arc_of(place.head));
        let direction = if head_arc == (tail_arc + 1) % 3 {
            Sign::Positive
        } else {
            Sign::Negative
        };
        let crossings = triple
            .chords()
            .iter()
            .filter(|other| **other != chord)
            .filter(|other| d.chords_cross(&chord, other).expect("chords are present"))
            .count();
        let parity = if crossings % 2 == 0 {
            Sign::Positive
        } else {
            Sign::Negative
        };
        ChordRecord {
            three_sign: place.sign * parity * direction,
            chord,
            sign: place.sign,
            parity,
            direction,
        }
    });

    let heads_arc = arcs.iter().find(|arc| arc.kind == ArcKind::Heads)?;
    let heads = Pair::new(
        d.endpoint(heads_arc.start).chord.clone(),
        d.endpoint(heads_arc.end).chord.clone(),
    )
    .ok()?;
    Some(Placement {
        arcs,
        records,
        heads,
    })
}

/// Analyzes the triple with its arcs read from the basepoint: when the six
/// endpoints fill the whole circle, the circle is cut just before position
/// 0. The verdict is about that reading only; [`triple_placements`] lists
/// every matched reading.
pub fn analyze_triple(d: &GaussDiagram, triple: &Triple) -> Result<TripleAnalysis, DiagramError> {
    check_present(d, triple)?;
    let placement = arc_pairings(d, triple)
        .into_iter()
        .next()
        .and_then(|pairing| place(d, triple, pairing));
    Ok(TripleAnalysis {
        triple: triple.clone(),
        placement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::parse_gauss_code;

    fn label(s: &str) -> ChordLabel {
        ChordLabel::new(s).unwrap()
    }

    fn triple(a: &str, b: &str, c: &str) -> Triple {
        Triple::new(label(a), label(b), label(c)).unwrap()
    }

    #[test]
    fn triples_and_pairs_are_sorted_and_distinct() {
        assert_eq!(triple("3", "1", "10").to_string(), "1,3,10");
        assert!(Triple::new(label("1"), label("2"), label("1")).is_err());
        assert_eq!(Pair::new(label("b"), label("a")).unwrap().to_string(), "a,b");
        assert!(Pair::new(label("a"), label("a")).is_err());
    }

    #[test]
    fn unknown_chord_is_an_error() {
        let d = parse_gauss_code("O1-O2-U1-U2-").unwrap();
        assert_eq!(
            analyze_triple(&d, &triple("1", "2", "3")),
            Err(DiagramError::UnknownChord(label("3")))
        );
    }

    #[test]
    fn movable_figure_configuration() {
        let d = parse_gauss_code("U3+ U2- O1- O2- O3+ U1-").unwrap();
        let a = analyze_triple(&d, &triple("1", "2", "3")).unwrap();
        assert!(a.movable());
        let p = a.placement.as_ref().unwrap();
        let kinds: Vec<_> = p.arcs.iter().map(|arc| arc.kind).collect();
        assert_eq!(kinds, [ArcKind::Heads, ArcKind::Tails, ArcKind::Mixed]);
        let units = |c: &str| {
            let r = a.record(&label(c)).unwrap();
            (r.sign, r.parity, r.direction, r.three_sign)
        };
        use Sign::{Negative as N, Positive as P};
        assert_eq!(units("1"), (N, P, P, N));
        assert_eq!(units("2"), (N, N, N, N));
        assert_eq!(units("3"), (P, N, P, N));
        assert_eq!(p.heads, Pair::new(label("2"), label("3")).unwrap());
    }

    #[test]
    fn same_chord_mixed_arc_is_not_matched() {
        // every arc read from the basepoint holds a head and a tail
        let d = parse_gauss_code("U3+ O2+ O1- U2+ O3+ U1-").unwrap();
        assert!(!analyze_triple(&d, &triple("1", "2", "3")).unwrap().matched());
        // ...but the shifted reading is matched, with unequal 3-signs
        let placements = triple_placements(&d, &triple("1", "2", "3")).unwrap();
        assert_eq!(placements.len(), 1);
        assert!(!placements[0].movable());
        // chord 1's tail and head form an arc of their own in the first pairing.
        let d = parse_gauss_code("O1- U1- U2- O3+ O2- U3+").unwrap();
        let placements = triple_placements(&d, &triple("1", "2", "3")).unwrap();
        assert_eq!(placements.len(), 1);
        assert_eq!(placements[0].arcs[2].start, 5);
        assert_eq!(placements[0].arcs[2].end, 0);
    }

    #[test]
    fn foreign_endpoint_breaks_an_arc() {
        // figure (a) with chord 4 splitting the heads arc and the tails arc
        let d = parse_gauss_code("U3+ O4+ U2- O1- O2- U4+ O3+ U1-").unwrap();
        assert!(!analyze_triple(&d, &triple("1", "2", "3")).unwrap().matched());
        assert!(triple_placements(&d, &triple("1", "2", "3")).unwrap().is_empty());
    }
}
