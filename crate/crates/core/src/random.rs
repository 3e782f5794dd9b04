//! Seeded random diagrams.
//!
//! The generator is ChaCha8 seeded with `seed_from_u64`. A uniform perfect
//! matching comes from a Fisher-Yates shuffle of the positions, read off in
//! consecutive pairs; chords are then numbered by their smaller position so
//! the result is drawn uniformly from the same population as
//! [`enumerate_diagrams`](crate::enumerate::enumerate_diagrams). Each chord
//! then gets a fair coin for orientation and another for its sign.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::GaussDiagram;
use crate::enumerate::diagram_from_matching;

pub fn random_diagram(n: usize, seed: u64) -> GaussDiagram {
    assert!(n <= 32, "random diagrams support at most 32 chords");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut positions: Vec<usize> = (0..2 * n).collect();
    positions.shuffle(&mut rng);
    let mut matching: Vec<(usize, usize)> = positions
        .chunks_exact(2)
        .map(|pair| (pair[0].min(pair[1]), pair[0].max(pair[1])))
        .collect();
    matching.sort_unstable();

    let mut orientation = 0u32;
    let mut signs = 0u32;
    for k in 0..n {
        if rng.random::<bool>() {
            orientation |= 1 << k;
        }
        if rng.random::<bool>() {
            signs |= 1 << k;
        }
    }
    diagram_from_matching(&matching, orientation, signs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_for_zero_chords() {
        assert_eq!(random_diagram(0, 7), GaussDiagram::empty());
    }

    #[test]
    fn deterministic() {
        for seed in 0..20 {
            assert_eq!(random_diagram(6, seed), random_diagram(6, seed));
        }
        assert_ne!(random_diagram(8, 1), random_diagram(8, 2));
    }

    #[test]
    fn has_requested_size() {
        let d = random_diagram(3, 42);
        assert_eq!(d.chord_count(), 3);
        assert_eq!(d.len(), 6);
    }
}
