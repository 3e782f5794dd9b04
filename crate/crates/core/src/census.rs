//! Exhaustive census of R3-movable triples.
//!
//! A matched triple is a triple of chords together with its three arcs, so
//! the census counts placements. In a three-chord diagram the triple owns
//! the whole circle, and some diagrams pair their six endpoints into arcs in
//! two ways; each way is its own matched triple. Whole-diagram counts (at
//! least one matched or movable placement) are reported alongside.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::diagram::{ChordLabel, GaussDiagram, Role, Sign};
use crate::enumerate::{diagram_count, diagram_from_matching, perfect_matchings};
use crate::moves::{triple_placements, Placement, Triple};

pub const MAX_CENSUS_CHORDS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("a census needs at least 3 chords, got {0}")]
    TooFewChords(usize),
    #[error("a census is capped at {MAX_CENSUS_CHORDS} chords, got {0}")]
    TooManyChords(usize),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CensusReport {
    pub chords: usize,
    pub total_diagrams: u64,
    pub matched_placements: u64,
    pub movable_placements: u64,
    /// Movable placements up to rotation and relabeling.
    pub movable_placement_classes: u64,
    pub diagrams_with_matched: u64,
    pub diagrams_with_movable: u64,
    /// Diagrams with a movable placement, up to rotation and relabeling.
    pub movable_diagram_classes: u64,
}

#[derive(Default)]
struct Tally {
    total: u64,
    matched_placements: u64,
    movable_placements: u64,
    diagrams_with_matched: u64,
    diagrams_with_movable: u64,
    placement_keys: HashSet<Vec<u32>>,
    diagram_keys: HashSet<Vec<u32>>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.total += other.total;
        self.matched_placements += other.matched_placements;
        self.movable_placements += other.movable_placements;
        self.diagrams_with_matched += other.diagrams_with_matched;
        self.diagrams_with_movable += other.diagrams_with_movable;
        self.placement_keys.extend(other.placement_keys);
        self.diagram_keys.extend(other.diagram_keys);
        self
    }

    fn add(&mut self, d: &GaussDiagram, triples: &[Triple]) {
        self.total += 1;
        let mut any_matched = false;
        let mut any_movable = false;
        for t in triples {
            for placement in triple_placements(d, t).expect("enumerated triples are present") {
                any_matched = true;
                self.matched_placements += 1;
                if placement.movable() {
                    any_movable = true;
                    self.movable_placements += 1;
                    self.placement_keys.insert(marked_key(d, Some(&placement)));
                }
            }
        }
        self.diagrams_with_matched += any_matched as u64;
        if any_movable {
            self.diagrams_with_movable += 1;
            self.diagram_keys.insert(marked_key(d, None));
        }
    }
}

/// Least rotation of the diagram with arc marks attached to each endpoint
/// (0 outside the placement, 1 at an arc's start, 2 at its end), chords
/// renumbered by first appearance.
fn marked_key(d: &GaussDiagram, placement: Option<&Placement>) -> Vec<u32> {
    let len = d.len();
    let mut marks = vec![0u32; len];
    if let Some(p) = placement {
        for arc in &p.arcs {
            marks[arc.start] = 1;
            marks[arc.end] = 2;
        }
    }
    (0..len.max(1))
        .map(|shift| {
            let mut numbering: BTreeMap<&ChordLabel, u32> = BTreeMap::new();
            let mut key = Vec::with_capacity(len);
            for i in 0..len {
                let at = (i + shift) % len;
                let endpoint = d.endpoint(at);
                let next = numbering.len() as u32 + 1;
                let number = *numbering.entry(&endpoint.chord).or_insert(next);
                let role = (endpoint.role == Role::Head) as u32;
                let sign = (d.sign(&endpoint.chord).unwrap() == Sign::Negative) as u32;
                key.push(role << 24 | number << 8 | sign << 4 | marks[at]);
            }
            key
        })
        .min()
        .expect("at least one rotation")
}

fn all_triples(n: usize) -> Vec<Triple> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                out.push(
                    Triple::new(
                        ChordLabel::from_index(i),
                        ChordLabel::from_index(j),
                        ChordLabel::from_index(k),
                    )
                    .unwrap(),
                );
            }
        }
    }
    out
}

pub fn census_movable_triples(n: usize) -> Result<CensusReport, CensusError> {
    if n < 3 {
        return Err(CensusError::TooFewChords(n));
    }
    if n > MAX_CENSUS_CHORDS {
        return Err(CensusError::TooManyChords(n));
    }
    let triples = all_triples(n);
    let masks = 1u32 << n;
    let tally = perfect_matchings(n)
        .par_iter()
        .map(|matching| {
            let mut tally = Tally::default();
            for orientation in 0..masks {
                for signs in 0..masks {
                    let d = diagram_from_matching(matching, orientation, signs);
                    tally.add(&d, &triples);
                }
            }
            tally
        })
        .reduce(Tally::default, Tally::merge);
    debug_assert_eq!(tally.total, diagram_count(n));

    Ok(CensusReport {
        chords: n,
        total_diagrams: tally.total,
        matched_placements: tally.matched_placements,
        movable_placements: tally.movable_placements,
        movable_placement_classes: tally.placement_keys.len() as u64,
        diagrams_with_matched: tally.diagrams_with_matched,
        diagrams_with_movable: tally.diagrams_with_movable,
        movable_diagram_classes: tally.diagram_keys.len() as u64,
    })
}
