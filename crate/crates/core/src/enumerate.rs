//! Exhaustive enumeration of small diagrams.
//!
//! For `n` chords on positions `0..2n` we walk every perfect matching of the
//! positions, every orientation of each chord and every sign assignment, for
//! `(2n-1)!! * 2^n * 2^n` diagrams in total. Chord `k` is the `k`-th pair of
//! the matching, where pairs are ordered by their smaller position.

use std::collections::BTreeMap;

use crate::diagram::{ChordLabel, Endpoint, GaussDiagram, Role, Sign};

/// All perfect matchings of `0..2n`, each pair `(a, b)` with `a < b`, pairs
/// ordered by `a`.
pub fn perfect_matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn extend(
        free: &mut Vec<usize>,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if free.is_empty() {
            out.push(current.clone());
            return;
        }
        let first = free.remove(0);
        for i in 0..free.len() {
            let partner = free.remove(i);
            current.push((first, partner));
            extend(free, current, out);
            current.pop();
            free.insert(i, partner);
        }
        free.insert(0, first);
    }

    let mut out = Vec::new();
    extend(&mut (0..2 * n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Number of diagrams `enumerate_diagrams(n)` yields.
pub fn diagram_count(n: usize) -> u64 {
    let double_factorial: u64 = (1..2 * n as u64).step_by(2).product();
    double_factorial << (2 * n)
}

/// Builds the diagram for one matching, an orientation mask (bit `k` set
/// means chord `k+1` has its tail at the larger position) and a sign mask
/// (bit `k` set means chord `k+1` is negative).
pub fn diagram_from_matching(
    matching: &[(usize, usize)],
    orientation: u32,
    signs: u32,
) -> GaussDiagram {
    let n = matching.len();
    let mut slots: Vec<Option<Endpoint>> = vec![None; 2 * n];
    let mut sign_map = BTreeMap::new();
    for (k, &(a, b)) in matching.iter().enumerate() {
        let label = ChordLabel::from_index(k + 1);
        let (tail, head) = if orientation >> k & 1 == 0 {
            (a, b)
        } else {
            (b, a)
        };
        slots[tail] = Some(Endpoint::new(label.clone(), Role::Tail));
        slots[head] = Some(Endpoint::new(label.clone(), Role::Head));
        let sign = if signs >> k & 1 == 0 {
            Sign::Positive
        } else {
            Sign::Negative
        };
        sign_map.insert(label, sign);
    }
    let endpoints = slots
        .into_iter()
        .map(|slot| slot.expect("matching covers every position"))
        .collect();
    GaussDiagram::rebuild(endpoints, sign_map)
}

/// Lazy stream over every diagram with `n` chords.
pub struct DiagramEnumerator {
    matchings: Vec<Vec<(usize, usize)>>,
    masks: u32,
    matching: usize,
    orientation: u32,
    signs: u32,
}

impl Iterator for DiagramEnumerator {
    type Item = GaussDiagram;

    fn next(&mut self) -> Option<GaussDiagram> {
        let matching = self.matchings.get(self.matching)?;
        let d = diagram_from_matching(matching, self.orientation, self.signs);
        self.signs += 1;
        if self.signs == self.masks {
            self.signs = 0;
            self.orientation += 1;
            if self.orientation == self.masks {
                self.orientation = 0;
                self.matching += 1;
            }
        }
        Some(d)
    }
}

pub fn enumerate_diagrams(n: usize) -> DiagramEnumerator {
    assert!(n < 16, "enumeration is only meant for small chord counts");
    DiagramEnumerator {
        matchings: perfect_matchings(n),
        masks: 1 << n,
        matching: 0,
        orientation: 0,
        signs: 0,
    }
}
