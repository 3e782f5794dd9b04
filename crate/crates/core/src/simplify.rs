//! Searching for simpler presentations.
//!
//! [`reduce_greedy`] only deletes: R2 pairs first, then R1 chords, until
//! nothing is removable. [`simplify`] also walks R3 moves, so it can get
//! past diagrams where a deletion only appears after rearranging a triple.
//! States are deduplicated by canonical form and the frontier is ordered by
//! `(chord count, depth, canonical form)`, so deletions are chased first
//! and the run is deterministic.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::codec::{parse_gauss_code, serialize_gauss_code, CodecError};
use crate::diagram::{CanonicalKey, GaussDiagram};
use crate::moves::{
    apply_move, enumerate_moves, r1_removable_chords, r2_removable_pairs, Move, MoveError,
    MoveSpecError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_states: usize,
    pub allow_insertions: bool,
    /// Upper bound on chord count when insertions are allowed. `None` means
    /// two more than the input.
    pub max_chords: Option<usize>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_states: 100_000,
            allow_insertions: false,
            max_chords: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub mv: Move,
    /// Canonical form of the diagram after the move.
    pub result: GaussDiagram,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveTrace {
    pub steps: Vec<TraceStep>,
}

impl MoveTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn moves(&self) -> impl Iterator<Item = &Move> {
        self.steps.iter().map(|s| &s.mv)
    }

    /// Replays moves from `start`, recording canonical forms.
    pub fn record(start: &GaussDiagram, moves: &[Move]) -> Result<MoveTrace, MoveError> {
        let mut current = start.clone();
        let mut steps = Vec::with_capacity(moves.len());
        for mv in moves {
            current = apply_move(&current, mv)?;
            steps.push(TraceStep {
                mv: mv.clone(),
                result: current.canonical(),
            });
        }
        Ok(MoveTrace { steps })
    }

    /// Parses the line format written by `Display`.
    pub fn parse(text: &str) -> Result<MoveTrace, TraceParseError> {
        let mut steps = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (mv, code) = line
                .split_once("=>")
                .ok_or(TraceParseError::MissingSeparator { line: line_no + 1 })?;
            let mv = mv
                .trim()
                .parse()
                .map_err(|source| TraceParseError::Move {
                    line: line_no + 1,
                    source,
                })?;
            let result = parse_gauss_code(code.trim()).map_err(|source| TraceParseError::Code {
                line: line_no + 1,
                source,
            })?;
            steps.push(TraceStep { mv, result });
        }
        Ok(MoveTrace { steps })
    }
}

/// One line per step: `<move spec> => <canonical Gauss code>`.
impl fmt::Display for MoveTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{} => {}", step.mv, serialize_gauss_code(&step.result))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceParseError {
    #[error("line {line}: missing \" => \" separator")]
    MissingSeparator { line: usize },
    #[error("line {line}: {source}")]
    Move { line: usize, source: MoveSpecError },
    #[error("line {line}: {source}")]
    Code { line: usize, source: CodecError },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplifyResult {
    pub final_diagram: GaussDiagram,
    pub trace: MoveTrace,
    pub states_explored: usize,
    pub limit_hit: bool,
}

pub fn reduce_greedy(d: &GaussDiagram) -> SimplifyResult {
    let mut current = d.clone();
    let mut steps = Vec::new();
    loop {
        let mv = if let Some(chords) = r2_removable_pairs(&current).into_iter().next() {
            Move::R2Delete { chords }
        } else if let Some(chord) = r1_removable_chords(&current).into_iter().next() {
            Move::R1Delete { chord }
        } else {
            break;
        };
        current = apply_move(&current, &mv).expect("detected deletions apply");
        steps.push(TraceStep {
            mv,
            result: current.canonical(),
        });
    }
    SimplifyResult {
        states_explored: steps.len() + 1,
        final_diagram: current,
        trace: MoveTrace { steps },
        limit_hit: false,
    }
}

struct Node {
    diagram: GaussDiagram,
    key: CanonicalKey,
    parent: Option<(usize, Move)>,
}

pub fn simplify(d: &GaussDiagram, limits: SearchLimits) -> SimplifyResult {
    let max_states = limits.max_states.max(1);
    let max_chords = limits.max_chords.unwrap_or(d.chord_count() + 2);

    let start_key = d.canonical_key();
    let mut nodes = vec![Node {
        diagram: d.clone(),
        key: start_key.clone(),
        parent: None,
    }];
    let mut seen: HashSet<CanonicalKey> = HashSet::from([start_key.clone()]);
    let mut frontier = BinaryHeap::from([Reverse((d.chord_count(), 0usize, start_key, 0usize))]);

    let mut explored = 0;
    let mut limit_hit = false;
    'search: while let Some(Reverse((chords, level, _, index))) = frontier.pop() {
        if explored == max_states {
            limit_hit = true;
            break;
        }
        explored += 1;
        if chords == 0 {
            break;
        }
        let current = nodes[index].diagram.clone();
        for mv in enumerate_moves(&current, limits.allow_insertions) {
            let next_chords = (current.chord_count() as isize + mv.chord_delta()) as usize;
            if mv.is_insertion() && next_chords > max_chords {
                continue;
            }
            let next = apply_move(&current, &mv).expect("enumerated moves apply");
            let key = next.canonical_key();
            if seen.contains(&key) {
                continue;
            }
            let child = nodes.len();
            seen.insert(key.clone());
            frontier.push(Reverse((next_chords, level + 1, key.clone(), child)));
            nodes.push(Node {
                diagram: next,
                key,
                parent: Some((index, mv)),
            });
            if next_chords == 0 {
                break 'search;
            }
        }
    }

    let best = (0..nodes.len())
        .min_by(|&a, &b| {
            let (na, nb) = (&nodes[a], &nodes[b]);
            na.diagram
                .chord_count()
                .cmp(&nb.diagram.chord_count())
                .then_with(|| na.key.cmp(&nb.key))
        })
        .expect("the start state is always present");

    let mut path = Vec::new();
    let mut at = best;
    while let Some((parent, mv)) = &nodes[at].parent {
        path.push(TraceStep {
            mv: mv.clone(),
            result: nodes[at].diagram.canonical(),
        });
        at = *parent;
    }
    path.reverse();

    SimplifyResult {
        final_diagram: nodes[best].diagram.clone(),
        trace: MoveTrace { steps: path },
        states_explored: explored,
        limit_hit,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceFailure {
    #[error("step {step}: {source}")]
    NotApplicable { step: usize, source: MoveError },
    #[error("step {step}: result does not match the recorded diagram")]
    Mismatch { step: usize },
}

impl TraceFailure {
    pub fn step(&self) -> usize {
        match self {
            TraceFailure::NotApplicable { step, .. } | TraceFailure::Mismatch { step } => *step,
        }
    }
}

/// Replays `trace` from `start`, checking every recorded diagram.
pub fn verify_trace(start: &GaussDiagram, trace: &MoveTrace) -> Result<GaussDiagram, TraceFailure> {
    let mut current = start.clone();
    for (step, entry) in trace.steps.iter().enumerate() {
        current = apply_move(&current, &entry.mv)
            .map_err(|source| TraceFailure::NotApplicable { step, source })?;
        if !current.same_diagram(&entry.result) {
            return Err(TraceFailure::Mismatch { step });
        }
    }
    Ok(current)
}
