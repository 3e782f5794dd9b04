//! Reidemeister moves on Gauss diagrams.
//!
//! * R1 adds or deletes a chord whose two ends are adjacent.
//! * R2 adds or deletes two chords of opposite sign whose heads are adjacent
//!   and whose tails are adjacent.
//! * R3 acts on a matched triple whose 3-signs agree (see [`triple`]) by
//!   swapping the two endpoints on each of its three arcs.
//!
//! Deletions and R3 name chords by label, so a move stays meaningful after
//! the basepoint is moved. Insertions name gaps: gap `g` is the interval
//! just before endpoint `g`, and the empty diagram has the single gap `0`.

mod spec;
pub mod triple;

use thiserror::Error;

use crate::diagram::{ChordLabel, ChordPlace, DiagramError, Endpoint, GaussDiagram, Role, Sign};

pub use spec::MoveSpecError;
pub use triple::{
    analyze_triple, triple_placements, Arc, ArcKind, ChordRecord, Pair, Placement, Triple,
    TripleAnalysis,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    R1Delete {
        chord: ChordLabel,
    },
    /// `head_first`: the head comes immediately before the tail
    /// (counterclockwise) inside the gap.
    R1Insert {
        gap: usize,
        sign: Sign,
        head_first: bool,
    },
    R2Delete {
        chords: Pair,
    },
    /// Inserts fresh chords `x` (sign `first_sign`) and `y` (the opposite
    /// sign). The heads go into `head_gap` as `x, y`; the tails go into
    /// `tail_gap` as `x, y` when `crossed`, else `y, x`. When both gaps are
    /// equal the four endpoints are laid down tails first.
    R2Insert {
        head_gap: usize,
        tail_gap: usize,
        first_sign: Sign,
        crossed: bool,
    },
    /// `heads` picks the placement by the chords on its heads arc. Only a
    /// three-chord diagram can have two placements; `None` means the
    /// unique movable one.
    R3 {
        chords: Triple,
        heads: Option<Pair>,
    },
}

impl Move {
    /// Change in chord count when the move is applied.
    pub fn chord_delta(&self) -> isize {
        match self {
            Move::R1Delete { .. } => -1,
            Move::R1Insert { .. } => 1,
            Move::R2Delete { .. } => -2,
            Move::R2Insert { .. } => 2,
            Move::R3 { .. } => 0,
        }
    }

    pub fn is_insertion(&self) -> bool {
        matches!(self, Move::R1Insert { .. } | Move::R2Insert { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),

    #[error("chord {0}'s endpoints are not adjacent")]
    NotIsolated(ChordLabel),

    #[error("heads of chords {0} are not adjacent")]
    HeadsNotAdjacent(Pair),

    #[error("tails of chords {0} are not adjacent")]
    TailsNotAdjacent(Pair),

    #[error("chords {0} have the same sign")]
    SameSign(Pair),

    #[error("chords {0} do not form a matched triple")]
    NotMatched(Triple),

    #[error("3-signs of chords {0} differ")]
    ThreeSignsDiffer(Triple),

    #[error("chords {0} have two movable placements; name the heads arc")]
    AmbiguousPlacement(Triple),

    #[error("chords {triple} have no matched placement with heads arc {heads}")]
    NoSuchPlacement { triple: Triple, heads: Pair },

    #[error("gap {gap} is out of range for a diagram with {len} endpoints")]
    InvalidGap { gap: usize, len: usize },
}

/// Start of the adjacent pair formed by the chord's ends, if they are
/// adjacent.
fn isolated_at(d: &GaussDiagram, chord: &ChordLabel) -> Option<usize> {
    let place = d.places()[chord];
    if d.len() == 2 {
        Some(0)
    } else if (place.tail + 1) % d.len() == place.head {
        Some(place.tail)
    } else if (place.head + 1) % d.len() == place.tail {
        Some(place.head)
    } else {
        None
    }
}

/// Chords with adjacent ends, ordered by where their adjacent pair starts.
pub fn r1_removable_chords(d: &GaussDiagram) -> Vec<ChordLabel> {
    let mut found: Vec<(usize, &ChordLabel)> = d
        .labels()
        .filter_map(|chord| isolated_at(d, chord).map(|at| (at, chord)))
        .collect();
    found.sort();
    found.into_iter().map(|(_, chord)| chord.clone()).collect()
}

fn check_r2(d: &GaussDiagram, pair: &Pair) -> Result<(), MoveError> {
    let a = d.place(pair.first())?;
    let b = d.place(pair.second())?;
    if !d.adjacent_unchecked(a.head, b.head) {
        return Err(MoveError::HeadsNotAdjacent(pair.clone()));
    }
    if !d.adjacent_unchecked(a.tail, b.tail) {
        return Err(MoveError::TailsNotAdjacent(pair.clone()));
    }
    if a.sign == b.sign {
        return Err(MoveError::SameSign(pair.clone()));
    }
    Ok(())
}

/// Opposite-sign pairs with adjacent heads and adjacent tails, ordered by
/// the first positions of their chords.
pub fn r2_removable_pairs(d: &GaussDiagram) -> Vec<Pair> {
    let labels: Vec<&ChordLabel> = d.labels_by_position();
    let mut out = Vec::new();
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            let pair = Pair::new((*a).clone(), (*b).clone()).expect("labels are distinct");
            if check_r2(d, &pair).is_ok() {
                out.push(pair);
            }
        }
    }
    out
}

/// All chord triples, ordered by the first positions of their chords.
fn triples_by_position(d: &GaussDiagram) -> Vec<Triple> {
    let labels = d.labels_by_position();
    let mut out = Vec::new();
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            for k in j + 1..labels.len() {
                out.push(
                    Triple::new(labels[i].clone(), labels[j].clone(), labels[k].clone())
                        .expect("labels are distinct"),
                );
            }
        }
    }
    out
}

fn movable_placements(d: &GaussDiagram, triple: &Triple) -> Result<Vec<Placement>, DiagramError> {
    Ok(triple_placements(d, triple)?
        .into_iter()
        .filter(Placement::movable)
        .collect())
}

/// Triples with at least one movable placement.
pub fn r3_movable_triples(d: &GaussDiagram) -> Vec<Triple> {
    triples_by_position(d)
        .into_iter()
        .filter(|t| !movable_placements(d, t).expect("triple is present").is_empty())
        .collect()
}

/// The R3 moves available on `d`, one per movable placement. When the
/// triple owns the whole circle the move pins its placement, since the
/// rewritten diagram may admit a second one.
fn r3_moves(d: &GaussDiagram) -> Vec<Move> {
    let whole_circle = d.chord_count() == 3;
    let mut out = Vec::new();
    for chords in triples_by_position(d) {
        let placements = movable_placements(d, &chords).expect("triple is present");
        if placements.len() == 1 && !whole_circle {
            out.push(Move::R3 {
                chords,
                heads: None,
            });
        } else {
            out.extend(placements.into_iter().map(|p| Move::R3 {
                chords: chords.clone(),
                heads: Some(p.heads),
            }));
        }
    }
    out
}

fn select_placement(
    d: &GaussDiagram,
    chords: &Triple,
    heads: Option<&Pair>,
) -> Result<Placement, MoveError> {
    let placements = triple_placements(d, chords)?;
    if placements.is_empty() {
        return Err(MoveError::NotMatched(chords.clone()));
    }
    let chosen = match heads {
        Some(heads) => placements
            .into_iter()
            .find(|p| &p.heads == heads)
            .ok_or_else(|| MoveError::NoSuchPlacement {
                triple: chords.clone(),
                heads: heads.clone(),
            })?,
        None => {
            let mut movable: Vec<_> = placements.into_iter().filter(Placement::movable).collect();
            match movable.len() {
                0 => return Err(MoveError::ThreeSignsDiffer(chords.clone())),
                1 => movable.remove(0),
                _ => return Err(MoveError::AmbiguousPlacement(chords.clone())),
            }
        }
    };
    if !chosen.movable() {
        return Err(MoveError::ThreeSignsDiffer(chords.clone()));
    }
    Ok(chosen)
}

fn check_gap(d: &GaussDiagram, gap: usize) -> Result<(), MoveError> {
    if gap < d.len().max(1) {
        Ok(())
    } else {
        Err(MoveError::InvalidGap { gap, len: d.len() })
    }
}

fn without(d: &GaussDiagram, chords: &[&ChordLabel]) -> GaussDiagram {
    let mut endpoints = Vec::with_capacity(d.len());
    let mut moved_to = Vec::with_capacity(d.len());
    for e in d.endpoints() {
        moved_to.push(endpoints.len());
        if !chords.contains(&&e.chord) {
            endpoints.push(e.clone());
        }
    }
    let mut places = d.places().clone();
    places.retain(|label, _| !chords.contains(&label));
    for place in places.values_mut() {
        place.tail = moved_to[place.tail];
        place.head = moved_to[place.head];
    }
    GaussDiagram::from_parts(endpoints, places)
}

/// Inserts `[before_gap[g] ..., endpoint g]` for every gap with something
/// to insert.
fn insert_at(
    d: &GaussDiagram,
    insertions: &[(usize, Vec<Endpoint>)],
    new_signs: &[(ChordLabel, Sign)],
) -> GaussDiagram {
    let mut endpoints = Vec::with_capacity(d.len() + 4);
    let mut moved_to = Vec::with_capacity(d.len());
    for position in 0..d.len().max(1) {
        for (gap, inserted) in insertions {
            if *gap == position {
                endpoints.extend(inserted.iter().cloned());
            }
        }
        if position < d.len() {
            moved_to.push(endpoints.len());
            endpoints.push(d.endpoint(position).clone());
        }
    }
    let mut places = d.places().clone();
    for place in places.values_mut() {
        place.tail = moved_to[place.tail];
        place.head = moved_to[place.head];
    }
    for (label, sign) in new_signs {
        let at = |role| {
            endpoints
                .iter()
                .position(|e| &e.chord == label && e.role == role)
                .expect("inserted chords have both ends")
        };
        let place = ChordPlace {
            tail: at(Role::Tail),
            head: at(Role::Head),
            sign: *sign,
        };
        places.insert(label.clone(), place);
    }
    GaussDiagram::from_parts(endpoints, places)
}

/// Checks that `m` applies to `d` and returns the rewritten diagram.
pub fn apply_move(d: &GaussDiagram, m: &Move) -> Result<GaussDiagram, MoveError> {
    match m {
        Move::R1Delete { chord } => {
            d.place(chord)?;
            if isolated_at(d, chord).is_none() {
                return Err(MoveError::NotIsolated(chord.clone()));
            }
            Ok(without(d, &[chord]))
        }
        Move::R2Delete { chords } => {
            check_r2(d, chords)?;
            Ok(without(d, &[chords.first(), chords.second()]))
        }
        Move::R3 { chords, heads } => {
            let placement = select_placement(d, chords, heads.as_ref())?;
            let mut endpoints = d.endpoints().to_vec();
            let mut places = d.places().clone();
            for arc in &placement.arcs {
                endpoints.swap(arc.start, arc.end);
                for position in [arc.start, arc.end] {
                    let e = &endpoints[position];
                    let place = places.get_mut(&e.chord).expect("arc endpoints are present");
                    match e.role {
                        Role::Tail => place.tail = position,
                        Role::Head => place.head = position,
                    }
                }
            }
            Ok(GaussDiagram::from_parts(endpoints, places))
        }
        Move::R1Insert {
            gap,
            sign,
            head_first,
        } => {
            check_gap(d, *gap)?;
            let chord = d.fresh_label();
            let (head, tail) = (Endpoint::head(chord.clone()), Endpoint::tail(chord.clone()));
            let inserted = if *head_first {
                vec![head, tail]
            } else {
                vec![tail, head]
            };
            Ok(insert_at(d, &[(*gap, inserted)], &[(chord, *sign)]))
        }
        Move::R2Insert {
            head_gap,
            tail_gap,
            first_sign,
            crossed,
        } => {
            check_gap(d, *head_gap)?;
            check_gap(d, *tail_gap)?;
            let mut fresh = d.fresh_labels(2);
            let y = fresh.pop().unwrap();
            let x = fresh.pop().unwrap();
            let heads = vec![Endpoint::head(x.clone()), Endpoint::head(y.clone())];
            let tails = if *crossed {
                vec![Endpoint::tail(x.clone()), Endpoint::tail(y.clone())]
            } else {
                vec![Endpoint::tail(y.clone()), Endpoint::tail(x.clone())]
            };
            let insertions = if head_gap == tail_gap {
                vec![(*tail_gap, [tails, heads].concat())]
            } else {
                vec![(*tail_gap, tails), (*head_gap, heads)]
            };
            Ok(insert_at(
                d,
                &insertions,
                &[(x, *first_sign), (y, -*first_sign)],
            ))
        }
    }
}

/// Every insertion move at every gap.
pub fn insertion_moves(d: &GaussDiagram) -> Vec<Move> {
    let gaps = d.len().max(1);
    let signs = [Sign::Positive, Sign::Negative];
    let mut out = Vec::new();
    for gap in 0..gaps {
        for sign in signs {
            for head_first in [true, false] {
                out.push(Move::R1Insert {
                    gap,
                    sign,
                    head_first,
                });
            }
        }
    }
    for head_gap in 0..gaps {
        for tail_gap in 0..gaps {
            for first_sign in signs {
                for crossed in [true, false] {
                    out.push(Move::R2Insert {
                        head_gap,
                        tail_gap,
                        first_sign,
                        crossed,
                    });
                }
            }
        }
    }
    out
}

/// R1 deletions, R2 deletions, R3 moves, then (optionally) insertions.
pub fn enumerate_moves(d: &GaussDiagram, include_insertions: bool) -> Vec<Move> {
    let mut out: Vec<Move> = r1_removable_chords(d)
        .into_iter()
        .map(|chord| Move::R1Delete { chord })
        .collect();
    out.extend(
        r2_removable_pairs(d)
            .into_iter()
            .map(|chords| Move::R2Delete { chords }),
    );
    out.extend(r3_moves(d));
    if include_insertions {
        out.extend(insertion_moves(d));
    }
    out
}
