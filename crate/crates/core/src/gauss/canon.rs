use std::collections::{HashMap, HashSet};

use super::{ChordId, GaussDiagram, Role, Sign};

/// Lexicographically least encoding over all circle orders, rotations and
/// chord relabelings (chords numbered by first appearance).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u64>);

#[derive(Clone)]
struct State {
    used: Vec<bool>,
    names: HashMap<ChordId, u64>,
}

impl State {
    fn key(&self) -> (Vec<bool>, Vec<(ChordId, u64)>) {
        let mut names: Vec<_> = self.names.iter().map(|(&k, &v)| (k, v)).collect();
        names.sort_unstable();
        (self.used.clone(), names)
    }
}

fn encode(d: &GaussDiagram, circle: usize, rot: usize, names: &mut HashMap<ChordId, u64>) -> Vec<u64> {
    let word = &d.circles[circle];
    let n = word.len();
    let mut out = Vec::with_capacity(n + 1);
    out.push(n as u64);
    for k in 0..n {
        let e = word[(rot + k) % n];
        let next = names.len() as u64;
        let name = *names.entry(e.chord).or_insert(next);
        let role = u64::from(e.role == Role::Under);
        let sign = u64::from(d.chords[&e.chord].sign == Sign::Positive);
        out.push(name << 2 | role << 1 | sign);
    }
    out
}

/// Beam search: every surviving state shares the least prefix seen so far,
/// so only ties are ever carried to the next circle.
pub(super) fn canonical_form(d: &GaussDiagram) -> CanonicalForm {
    let k = d.circles.len();
    let mut beam = vec![State { used: vec![false; k], names: HashMap::new() }];
    let mut out = Vec::new();
    for _ in 0..k {
        let mut best: Option<Vec<u64>> = None;
        let mut next: Vec<State> = Vec::new();
        let mut keys = HashSet::new();
        for state in &beam {
            let mut empty_tried = false;
            for ci in (0..k).filter(|&i| !state.used[i]) {
                let n = d.circles[ci].len();
                if n == 0 {
                    // empty circles are interchangeable
                    if empty_tried {
                        continue;
                    }
                    empty_tried = true;
                }
                for rot in 0..n.max(1) {
                    let mut names = state.names.clone();
                    let ext = encode(d, ci, rot, &mut names);
                    let ord = best.as_ref().map(|b| ext.cmp(b));
                    if matches!(ord, Some(std::cmp::Ordering::Greater)) {
                        continue;
                    }
                    if matches!(ord, None | Some(std::cmp::Ordering::Less)) {
                        best = Some(ext);
                        next.clear();
                        keys.clear();
                    }
                    let mut used = state.used.clone();
                    used[ci] = true;
                    let s = State { used, names };
                    if keys.insert(s.key()) {
                        next.push(s);
                    }
                }
            }
        }
        out.extend(best.expect("an unused circle remains"));
        beam = next;
    }
    CanonicalForm(out)
}
