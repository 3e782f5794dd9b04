#![allow(dead_code)]

use gauss_diagram::codec::CodecError;
use gauss_diagram::enumerate::enumerate_diagrams;
use gauss_diagram::moves::{
    apply_move, insertion_moves, triple_placements, Move, Placement, Triple,
};
use gauss_diagram::random::random_diagram;
use gauss_diagram::{ChordLabel, GaussDiagram};

/// Every diagram with at most four chords, then 1000 seeded random ones
/// with at most eight.
pub fn corpus() -> impl Iterator<Item = GaussDiagram> {
    (0..=4)
        .flat_map(enumerate_diagrams)
        .chain((0..1000u64).map(|seed| random_diagram((seed % 9) as usize, seed)))
}

pub fn all_triples(d: &GaussDiagram) -> Vec<Triple> {
    let labels: Vec<ChordLabel> = d.labels().cloned().collect();
    let mut out = Vec::new();
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            for k in j + 1..labels.len() {
                out.push(
                    Triple::new(labels[i].clone(), labels[j].clone(), labels[k].clone()).unwrap(),
                );
            }
        }
    }
    out
}

pub fn movable_placements(d: &GaussDiagram) -> Vec<(Triple, Placement)> {
    all_triples(d)
        .into_iter()
        .flat_map(|t| {
            triple_placements(d, &t)
                .unwrap()
                .into_iter()
                .filter(Placement::movable)
                .map(move |p| (t.clone(), p))
        })
        .collect()
}

/// Checks R3 on one placement: the image keeps the same arcs and the same
/// per-chord units, and moving back restores `d`.
pub fn check_r3(d: &GaussDiagram, triple: &Triple, placement: &Placement) -> Result<(), String> {
    let mv = Move::R3 {
        chords: triple.clone(),
        heads: Some(placement.heads.clone()),
    };
    let image = apply_move(d, &mv).map_err(|e| format!("{mv} on {d:?}: {e}"))?;
    let back = triple_placements(&image, triple)
        .unwrap()
        .into_iter()
        .find(|p| p.heads == placement.heads)
        .ok_or_else(|| format!("{mv}: image lost its placement"))?;
    let starts = |p: &Placement| p.arcs.map(|a| (a.kind, a.start, a.end));
    if starts(&back) != starts(placement) {
        return Err(format!("{mv}: arcs moved"));
    }
    for (before, after) in placement.records.iter().zip(&back.records) {
        if (before.sign, before.parity, before.direction) != (after.sign, after.parity, after.direction) {
            return Err(format!("{mv}: chord {} changed its units", before.chord));
        }
    }
    let again = apply_move(&image, &mv).map_err(|e| format!("{mv} back: {e}"))?;
    if &again != d {
        return Err(format!("{mv} is not an involution on {d:?}"));
    }
    Ok(())
}

/// Checks writhe and chord-count deltas for every non-insertion move and
/// the insert-then-delete roundtrips.
pub fn check_move_invariants(d: &GaussDiagram) -> Result<(), String> {
    let writhe = d.writhe();
    let chords = d.chord_count() as isize;
    for mv in gauss_diagram::enumerate_moves(d, false) {
        let next = apply_move(d, &mv).map_err(|e| format!("{mv}: {e}"))?;
        let expected_writhe = match &mv {
            Move::R1Delete { chord } => writhe - d.sign(chord).unwrap().value(),
            _ => writhe,
        };
        if next.writhe() != expected_writhe {
            return Err(format!("{mv}: writhe {} != {expected_writhe}", next.writhe()));
        }
        let delta = next.chord_count() as isize - chords;
        let expected_delta = match mv {
            Move::R1Delete { .. } => -1,
            Move::R2Delete { .. } => -2,
            _ => 0,
        };
        if delta != expected_delta || delta != mv.chord_delta() {
            return Err(format!("{mv}: chord delta {delta}"));
        }
    }
    for mv in insertion_moves(d) {
        let grown = apply_move(d, &mv).map_err(|e| format!("{mv}: {e}"))?;
        let delta = grown.chord_count() as isize - chords;
        let (expected_delta, expected_writhe, undo) = match &mv {
            Move::R1Insert { sign, .. } => (
                1,
                writhe + sign.value(),
                Move::R1Delete {
                    chord: d.fresh_label(),
                },
            ),
            Move::R2Insert { .. } => {
                let fresh = d.fresh_labels(2);
                (
                    2,
                    writhe,
                    Move::R2Delete {
                        chords: gauss_diagram::moves::Pair::new(fresh[0].clone(), fresh[1].clone())
                            .unwrap(),
                    },
                )
            }
            _ => unreachable!("insertion_moves only inserts"),
        };
        if delta != expected_delta || delta != mv.chord_delta() {
            return Err(format!("{mv}: chord delta {delta}"));
        }
        if grown.writhe() != expected_writhe {
            return Err(format!("{mv}: writhe {} != {expected_writhe}", grown.writhe()));
        }
        let restored = apply_move(&grown, &undo).map_err(|e| format!("{mv} then {undo}: {e}"))?;
        if &restored != d {
            return Err(format!("{mv} then {undo} is not the identity on {d:?}"));
        }
    }
    Ok(())
}

/// Which diagnostic a malformed code must produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diagnostic {
    SignMismatch,
    TooManyOccurrences,
    DuplicateRole,
    LoneOccurrence,
    EmptyLabel,
    Lexical,
    UnexpectedEnd,
}

pub fn diagnostic(e: &CodecError) -> Diagnostic {
    match e {
        CodecError::SignMismatch { .. } => Diagnostic::SignMismatch,
        CodecError::TooManyOccurrences { .. } => Diagnostic::TooManyOccurrences,
        CodecError::DuplicateRole { .. } => Diagnostic::DuplicateRole,
        CodecError::LoneOccurrence { .. } => Diagnostic::LoneOccurrence,
        CodecError::EmptyLabel { .. } => Diagnostic::EmptyLabel,
        CodecError::Lexical { .. } => Diagnostic::Lexical,
        CodecError::UnexpectedEnd { .. } => Diagnostic::UnexpectedEnd,
    }
}

/// Malformed input, expected diagnostic, offending token, full message.
pub const ERROR_TABLE: [(&str, Diagnostic, usize, &str); 20] = [
    ("O1+ U1-", Diagnostic::SignMismatch, 1, "token 1: sign mismatch for chord 1 (+ then -)"),
    ("O1- O2- U1+ U2-", Diagnostic::SignMismatch, 2, "token 2: sign mismatch for chord 1 (- then +)"),
    ("O1+ U1+ O2+ U2-", Diagnostic::SignMismatch, 3, "token 3: sign mismatch for chord 2 (+ then -)"),
    ("O1+ U1+ O1+", Diagnostic::TooManyOccurrences, 2, "token 2: chord 1 occurs more than twice"),
    ("O1+ U1+ U1+", Diagnostic::TooManyOccurrences, 2, "token 2: chord 1 occurs more than twice"),
    ("O1+ U1+ O2+ U2+ O2+", Diagnostic::TooManyOccurrences, 4, "token 4: chord 2 occurs more than twice"),
    ("O1+ O1+", Diagnostic::DuplicateRole, 1, "token 1: duplicate tail for chord 1"),
    ("U2- U2-", Diagnostic::DuplicateRole, 1, "token 1: duplicate head for chord 2"),
    ("O1+", Diagnostic::LoneOccurrence, 0, "token 0: chord 1 occurs only once"),
    ("O1+ U1+ O2-", Diagnostic::LoneOccurrence, 2, "token 2: chord 2 occurs only once"),
    ("Oa+ Ub+ Ua+", Diagnostic::LoneOccurrence, 1, "token 1: chord b occurs only once"),
    ("O+ U1+", Diagnostic::EmptyLabel, 0, "token 0: empty chord label at offset 1"),
    ("O1+ U+", Diagnostic::EmptyLabel, 1, "token 1: empty chord label at offset 5"),
    ("O1+U1+O", Diagnostic::EmptyLabel, 2, "token 2: empty chord label at offset 7"),
    ("X1+ U1+", Diagnostic::Lexical, 0, "token 0: unexpected 'X' at offset 0, expected role letter O or U"),
    ("1+ U1+", Diagnostic::Lexical, 0, "token 0: unexpected '1' at offset 0, expected role letter O or U"),
    ("O1+ U1+ ?", Diagnostic::Lexical, 2, "token 2: unexpected '?' at offset 8, expected role letter O or U"),
    ("O1+ U1*", Diagnostic::Lexical, 1, "token 1: unexpected '*' at offset 6, expected sign + or -"),
    ("O1$+ U1$+", Diagnostic::Lexical, 0, "token 0: unexpected '$' at offset 2, expected sign + or -"),
    ("O1", Diagnostic::UnexpectedEnd, 0, "token 0: input ends early, expected sign + or -"),
];
