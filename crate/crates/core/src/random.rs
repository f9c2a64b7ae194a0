//! Uniform-ish random Gauss diagrams for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::gauss::{ChordId, EndpointRef, GaussDiagram, Sign};

/// A diagram with 1..=`max_circles` circles and 0..=`max_chords` chords. The
/// `2n` endpoints are shuffled and cut into circles at random points, so
/// empty circles and linking chords both occur.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, max_circles: usize, max_chords: usize) -> GaussDiagram {
    let k = rng.gen_range(1..=max_circles.max(1));
    let n = rng.gen_range(0..=max_chords);
    random_with(rng, k, n)
}

/// Exactly `circles` circles and `chords` chords.
pub fn random_with<R: Rng + ?Sized>(rng: &mut R, circles: usize, chords: usize) -> GaussDiagram {
    assert!(circles > 0, "at least one circle");
    let mut ends: Vec<EndpointRef> = (1..=chords as u32)
        .flat_map(|i| [EndpointRef::over(ChordId(i)), EndpointRef::under(ChordId(i))])
        .collect();
    ends.shuffle(rng);
    let mut cuts: Vec<usize> = (0..circles - 1).map(|_| rng.gen_range(0..=ends.len())).collect();
    cuts.sort_unstable();
    let mut words = Vec::with_capacity(circles);
    let mut start = 0;
    for cut in cuts.into_iter().chain(std::iter::once(ends.len())) {
        words.push(ends[start..cut].to_vec());
        start = cut;
    }
    let signs = (1..=chords as u32)
        .map(|i| (ChordId(i), if rng.gen() { Sign::Positive } else { Sign::Negative }));
    GaussDiagram::new(words, signs).expect("every chord placed once per role")
}

/// A single random knot diagram with `chords` chords.
pub fn random_knot<R: Rng + ?Sized>(rng: &mut R, chords: usize) -> GaussDiagram {
    random_with(rng, 1, chords)
}
