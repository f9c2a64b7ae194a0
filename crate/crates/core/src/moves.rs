//! Reidemeister moves on Gauss diagrams, 1-smoothing, and a random walk
//! through the equivalence class of a diagram.
//!
//! Virtual moves and the semi-virtual move do not change a Gauss diagram, so
//! only R1, the coherent R2 (both strands oriented alike) and R3 have
//! templates. Every move keeps the ids of the chords it does not create or
//! remove, which makes before/after comparisons chord-by-chord possible.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauss::{ChordId, EndpointRef, GaussDiagram, Position, Role, Sign};
use crate::indices::{Convention, IndexTable};

/// The place between two consecutive endpoints of a circle: new endpoints go
/// right before position `index` (`index == len` means after the last one).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gap {
    pub circle: usize,
    pub index: usize,
}

impl Gap {
    pub fn new(circle: usize, index: usize) -> Self {
        Gap { circle, index }
    }

    /// The gap right after the endpoint at `pos`.
    pub fn after(pos: Position) -> Self {
        Gap { circle: pos.circle, index: pos.index + 1 }
    }
}

fn check_gap(d: &GaussDiagram, gap: Gap) -> Result<()> {
    let n = d.circle(gap.circle)?.len();
    if gap.index > n {
        return Err(Error::BadPosition { circle: gap.circle, index: gap.index });
    }
    Ok(())
}

/// Inserts runs of endpoints at gaps. Runs sharing a gap appear in the order
/// given.
fn insert_runs(d: &GaussDiagram, runs: &[(Gap, Vec<EndpointRef>)]) -> Vec<Vec<EndpointRef>> {
    let mut circles: Vec<Vec<EndpointRef>> = d.circles().to_vec();
    let mut order: Vec<usize> = (0..runs.len()).collect();
    // later gaps first, so earlier indices stay valid; stable among ties
    order.sort_by(|&a, &b| runs[b].0.cmp(&runs[a].0).then(b.cmp(&a)));
    for i in order {
        let (gap, run) = &runs[i];
        let word = &mut circles[gap.circle];
        word.splice(gap.index..gap.index, run.iter().copied());
    }
    circles
}

fn remove_chords(d: &GaussDiagram, chords: &[ChordId]) -> Result<GaussDiagram> {
    let circles = d
        .circles()
        .iter()
        .map(|w| w.iter().copied().filter(|e| !chords.contains(&e.chord)).collect())
        .collect();
    d.with_circles(circles)
}

/// Adds a kink: a new chord whose endpoints are adjacent at `gap`.
pub fn r1_insert(
    d: &GaussDiagram,
    gap: Gap,
    sign: Sign,
    over_first: bool,
) -> Result<(GaussDiagram, ChordId)> {
    check_gap(d, gap)?;
    let c = d.next_chord_id();
    let (first, second) = if over_first { (Role::Over, Role::Under) } else { (Role::Under, Role::Over) };
    let circles = insert_runs(d, &[(gap, vec![EndpointRef::new(c, first), EndpointRef::new(c, second)])]);
    let mut signs: Vec<(ChordId, Sign)> = d.chords().map(|ch| (ch.id, ch.sign)).collect();
    signs.push((c, sign));
    Ok((GaussDiagram::new(circles, signs)?, c))
}

pub fn is_kink(d: &GaussDiagram, c: ChordId) -> Result<bool> {
    let (o, u) = (EndpointRef::over(c), EndpointRef::under(c));
    Ok(d.follows(o, u)? || d.follows(u, o)?)
}

pub fn r1_delete(d: &GaussDiagram, c: ChordId) -> Result<GaussDiagram> {
    if !is_kink(d, c)? {
        return Err(Error::NotAKink(c));
    }
    remove_chords(d, &[c])
}

/// Where the two chords of a coherent R2 go.
///
/// The over endpoints of both chords are placed at `over`, the under endpoints
/// at `under`, each pair in the order (first, second). The first chord gets
/// `first_sign`, the second its negative. When both gaps coincide,
/// `unders_first` decides which pair comes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct R2Placement {
    pub over: Gap,
    pub under: Gap,
    pub first_sign: Sign,
    #[serde(default)]
    pub unders_first: bool,
}

pub fn r2a_insert(d: &GaussDiagram, p: R2Placement) -> Result<(GaussDiagram, ChordId, ChordId)> {
    r2_insert_signed(d, p, -p.first_sign)
}

/// Same as [`r2a_insert`] but with an arbitrary second sign. With equal signs
/// the result is generally a different link; used as a negative control.
fn r2_insert_signed(
    d: &GaussDiagram,
    p: R2Placement,
    second_sign: Sign,
) -> Result<(GaussDiagram, ChordId, ChordId)> {
    check_gap(d, p.over)?;
    check_gap(d, p.under)?;
    let a = d.next_chord_id();
    let b = ChordId(a.0 + 1);
    let overs = (p.over, vec![EndpointRef::over(a), EndpointRef::over(b)]);
    let unders = (p.under, vec![EndpointRef::under(a), EndpointRef::under(b)]);
    let runs = if p.unders_first { [unders, overs] } else { [overs, unders] };
    let circles = insert_runs(d, &runs);
    let mut signs: Vec<(ChordId, Sign)> = d.chords().map(|ch| (ch.id, ch.sign)).collect();
    signs.push((a, p.first_sign));
    signs.push((b, second_sign));
    Ok((GaussDiagram::new(circles, signs)?, a, b))
}

/// Whether `a`, `b` (in this order) form a coherent R2 pair: opposite signs,
/// `O_a O_b` adjacent and `U_a U_b` adjacent.
pub fn is_r2a_pair(d: &GaussDiagram, a: ChordId, b: ChordId) -> Result<bool> {
    if a == b {
        return Ok(false);
    }
    Ok(d.sign(a)? == -d.sign(b)?
        && d.follows(EndpointRef::over(a), EndpointRef::over(b))?
        && d.follows(EndpointRef::under(a), EndpointRef::under(b))?)
}

pub fn r2a_delete(d: &GaussDiagram, a: ChordId, b: ChordId) -> Result<GaussDiagram> {
    if !(is_r2a_pair(d, a, b)? || is_r2a_pair(d, b, a)?) {
        return Err(Error::PatternMismatch("not a coherent R2 pair"));
    }
    remove_chords(d, &[a, b])
}

/// The three chords of an R3 triangle, named by strand: `tm` joins the top
/// and middle strands, `tb` top and bottom, `mb` middle and bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct R3Triangle {
    pub tm: ChordId,
    pub tb: ChordId,
    pub mb: ChordId,
}

impl R3Triangle {
    /// The three endpoint pairs swapped by the move, one per strand.
    pub fn pairs(&self) -> [(EndpointRef, EndpointRef); 3] {
        [
            (EndpointRef::over(self.tm), EndpointRef::over(self.tb)),
            (EndpointRef::under(self.tm), EndpointRef::over(self.mb)),
            (EndpointRef::under(self.tb), EndpointRef::under(self.mb)),
        ]
    }
}

/// +1 if `b` directly follows `a`, -1 if `a` directly follows `b`. Pairs on
/// circles of length 2 are ambiguous and rejected.
fn pair_order(d: &GaussDiagram, a: EndpointRef, b: EndpointRef) -> Result<Option<i64>> {
    let pa = d.position(a)?;
    if d.circle(pa.circle)?.len() <= 2 {
        return Ok(None);
    }
    if d.follows(a, b)? {
        Ok(Some(1))
    } else if d.follows(b, a)? {
        Ok(Some(-1))
    } else {
        Ok(None)
    }
}

/// Recognizes an R3 triangle on three chords, in any order.
///
/// Each strand carries two adjacent endpoints. With `σ` the order of each
/// pair (+1 for the order listed in [`R3Triangle::pairs`]) and
/// `k = ε_tm ε_tb ε_mb`, the triangle bounds a face that a strand can slide
/// across exactly when `ε_tm = k σ_t σ_m` and `ε_tb = k σ_t σ_b`.
pub fn r3_match(d: &GaussDiagram, chords: [ChordId; 3]) -> Result<Option<R3Triangle>> {
    for c in chords {
        d.chord(c)?;
    }
    let [x, y, z] = chords;
    if x == y || y == z || x == z {
        return Ok(None);
    }
    for [tm, tb, mb] in [[x, y, z], [x, z, y], [y, x, z], [y, z, x], [z, x, y], [z, y, x]] {
        let tri = R3Triangle { tm, tb, mb };
        let mut sigma = [0i64; 3];
        let mut ok = true;
        for (k, (a, b)) in tri.pairs().into_iter().enumerate() {
            match pair_order(d, a, b)? {
                Some(s) => sigma[k] = s,
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let e = |c: ChordId| d.sign(c).map(Sign::value);
        let (e_tm, e_tb, e_mb) = (e(tm)?, e(tb)?, e(mb)?);
        let k = e_tm * e_tb * e_mb;
        if e_tm == k * sigma[0] * sigma[1] && e_tb == k * sigma[0] * sigma[2] {
            return Ok(Some(tri));
        }
    }
    Ok(None)
}

/// Slides one strand of an R3 triangle across the opposite crossing: each of
/// the three adjacent endpoint pairs is swapped in place, signs unchanged.
pub fn r3a_apply(d: &GaussDiagram, chords: [ChordId; 3]) -> Result<GaussDiagram> {
    let tri = r3_match(d, chords)?.ok_or(Error::PatternMismatch("not an R3 triangle"))?;
    let mut circles = d.circles().to_vec();
    for (a, b) in tri.pairs() {
        let (pa, pb) = (d.position(a)?, d.position(b)?);
        circles[pa.circle][pa.index] = b;
        circles[pb.circle][pb.index] = a;
    }
    d.with_circles(circles)
}

/// Orientation-respecting 1-smoothing at chord `c`.
///
/// A self chord splits its circle in two: the arc strictly between its
/// endpoints in word order stays at the circle's index, the other arc becomes
/// a new circle right after it. A linking chord merges its two circles into
/// one at the lower index.
pub fn smooth(d: &GaussDiagram, c: ChordId) -> Result<GaussDiagram> {
    let chord = *d.chord(c)?;
    let mut circles: Vec<Vec<EndpointRef>> = d.circles().to_vec();
    let (o, u) = (chord.over, chord.under);
    if chord.is_self() {
        let word = &circles[o.circle];
        let (p, q) = (o.index.min(u.index), o.index.max(u.index));
        let inner = word[p + 1..q].to_vec();
        let outer: Vec<EndpointRef> = word[q + 1..].iter().chain(&word[..p]).copied().collect();
        circles[o.circle] = inner;
        circles.insert(o.circle + 1, outer);
    } else {
        let cut = |w: &[EndpointRef], at: usize| -> Vec<EndpointRef> {
            w[at + 1..].iter().chain(&w[..at]).copied().collect()
        };
        let mut merged = cut(&circles[o.circle], o.index);
        merged.extend(cut(&circles[u.circle], u.index));
        let (lo, hi) = (o.circle.min(u.circle), o.circle.max(u.circle));
        circles[lo] = merged;
        circles.remove(hi);
    }
    d.with_circles(circles)
}

/// Kinks, ordered by the position of their first endpoint.
pub fn find_kinks(d: &GaussDiagram) -> Vec<ChordId> {
    let mut out = Vec::new();
    for word in d.circles() {
        for e in word {
            if e.role == Role::Over && is_kink(d, e.chord).unwrap_or(false) {
                out.push(e.chord);
            }
        }
    }
    out
}

/// Coherent R2 pairs `(a, b)`, ordered by the position of `O_a`.
pub fn find_r2a(d: &GaussDiagram) -> Vec<(ChordId, ChordId)> {
    let mut out = Vec::new();
    for word in d.circles() {
        let n = word.len();
        for i in 0..n {
            let (x, y) = (word[i], word[(i + 1) % n]);
            if x.role == Role::Over
                && y.role == Role::Over
                && is_r2a_pair(d, x.chord, y.chord).unwrap_or(false)
                && !out.contains(&(x.chord, y.chord))
                && !out.contains(&(y.chord, x.chord))
            {
                out.push((x.chord, y.chord));
            }
        }
    }
    out
}

fn neighbours(d: &GaussDiagram, e: EndpointRef) -> Vec<EndpointRef> {
    let p = d.position(e).expect("known endpoint");
    let word = &d.circles()[p.circle];
    let n = word.len();
    if n < 2 {
        return Vec::new();
    }
    vec![word[(p.index + 1) % n], word[(p.index + n - 1) % n]]
}

/// R3 triangles, found from adjacent pairs of over endpoints; ordered by
/// position of the first such pair.
pub fn find_r3(d: &GaussDiagram) -> Vec<[ChordId; 3]> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for word in d.circles() {
        let n = word.len();
        for i in 0..n {
            let (x, y) = (word[i], word[(i + 1) % n]);
            if x.role != Role::Over || y.role != Role::Over || x.chord == y.chord {
                continue;
            }
            for (tm, tb) in [(x.chord, y.chord), (y.chord, x.chord)] {
                for m in neighbours(d, EndpointRef::under(tm)) {
                    if m.role != Role::Over || m.chord == tm || m.chord == tb {
                        continue;
                    }
                    let triple = [tm, tb, m.chord];
                    let mut key = triple;
                    key.sort();
                    if seen.contains(&key) {
                        continue;
                    }
                    if let Ok(Some(_)) = r3_match(d, triple) {
                        seen.insert(key);
                        out.push(triple);
                    }
                }
            }
        }
    }
    out
}

/// A single recorded move; replaying it on the same diagram is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Move {
    R1Insert { gap: Gap, sign: Sign, over_first: bool },
    R1Delete { chord: ChordId },
    R2aInsert {
        #[serde(flatten)]
        placement: R2Placement,
        /// Both chords get `first_sign`; not a Reidemeister move.
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        corrupt: bool,
    },
    R2aDelete { first: ChordId, second: ChordId },
    R3a { chords: [ChordId; 3] },
}

impl Move {
    pub fn apply(&self, d: &GaussDiagram) -> Result<GaussDiagram> {
        match *self {
            Move::R1Insert { gap, sign, over_first } => Ok(r1_insert(d, gap, sign, over_first)?.0),
            Move::R1Delete { chord } => r1_delete(d, chord),
            Move::R2aInsert { placement, corrupt } => {
                let second = if corrupt { placement.first_sign } else { -placement.first_sign };
                Ok(r2_insert_signed(d, placement, second)?.0)
            }
            Move::R2aDelete { first, second } => r2a_delete(d, first, second),
            Move::R3a { chords } => r3a_apply(d, chords),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveTrace {
    pub initial: String,
    pub moves: Vec<Move>,
    #[serde(rename = "final")]
    pub final_code: String,
}

impl MoveTrace {
    /// Re-applies every move, returning all intermediate diagrams including
    /// the first and last.
    pub fn replay(&self) -> Result<Vec<GaussDiagram>> {
        let mut d = GaussDiagram::parse(&self.initial)?;
        let mut out = vec![d.clone()];
        for m in &self.moves {
            d = m.apply(&d)?;
            out.push(d.clone());
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub steps: usize,
    pub seed: u64,
    /// Above this many chords only deletions and R3 moves are drawn.
    pub max_chords: usize,
    /// Replace every R2 insertion by an invalid same-sign insertion.
    pub corrupt_r2: bool,
}

impl FuzzConfig {
    pub fn new(steps: usize, seed: u64) -> Self {
        FuzzConfig { steps, seed, max_chords: 24, corrupt_r2: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    R1Insert,
    R1Delete,
    R2Insert,
    R2Delete,
    R3,
    Triangle,
}

fn random_gap<R: Rng + ?Sized>(d: &GaussDiagram, rng: &mut R) -> Gap {
    let weights: Vec<usize> = d.circles().iter().map(|w| w.len() + 1).collect();
    let total: usize = weights.iter().sum();
    let mut pick = rng.gen_range(0..total);
    for (circle, &w) in weights.iter().enumerate() {
        if pick < w {
            return Gap { circle, index: pick };
        }
        pick -= w;
    }
    unreachable!("pick is below the total weight")
}

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

struct Walker<'a, R> {
    d: GaussDiagram,
    moves: Vec<Move>,
    rng: R,
    cfg: &'a FuzzConfig,
}

impl<R: Rng> Walker<'_, R> {
    fn push(&mut self, m: Move) -> Result<()> {
        self.d = m.apply(&self.d)?;
        self.moves.push(m);
        Ok(())
    }

    fn r2_placement(&mut self, over: Gap, under: Gap, first_sign: Sign, free_order: bool) -> Move {
        let unders_first = free_order && over == under && self.rng.gen();
        Move::R2aInsert {
            placement: R2Placement { over, under, first_sign, unders_first },
            corrupt: self.cfg.corrupt_r2,
        }
    }

    /// Three R2 insertions building a triangle, then the R3 across it.
    fn triangle(&mut self) -> Result<()> {
        let s = random_sign(&mut self.rng);
        let (ga, gb) = (random_gap(&self.d, &mut self.rng), random_gap(&self.d, &mut self.rng));
        let x1 = self.d.next_chord_id();
        let m = self.r2_placement(ga, gb, s, true);
        self.push(m)?;

        let x2 = self.d.next_chord_id();
        let over = Gap::after(self.d.position(EndpointRef::over(x1))?);
        let gc = random_gap(&self.d, &mut self.rng);
        // overs first, or the new unders would separate O_x1 from O_x2
        let m = self.r2_placement(over, gc, s, false);
        self.push(m)?;

        let x3 = self.d.next_chord_id();
        let over = Gap::after(self.d.position(EndpointRef::under(x1))?);
        let under = Gap::after(self.d.position(EndpointRef::under(x2))?);
        let m = self.r2_placement(over, under, s, false);
        self.push(m)?;

        if r3_match(&self.d, [x1, x2, x3])?.is_some() {
            self.push(Move::R3a { chords: [x1, x2, x3] })?;
        }
        Ok(())
    }

    fn step(&mut self) -> Result<bool> {
        let grow = self.d.chord_count() < self.cfg.max_chords;
        let table: &[(Kind, u32)] = if grow {
            &[
                (Kind::R1Insert, 2),
                (Kind::R2Insert, 3),
                (Kind::Triangle, 2),
                (Kind::R1Delete, 1),
                (Kind::R2Delete, 1),
                (Kind::R3, 3),
            ]
        } else {
            &[(Kind::R1Delete, 3), (Kind::R2Delete, 3), (Kind::R3, 2), (Kind::R1Insert, 1)]
        };
        let kind = table.choose_weighted(&mut self.rng, |k| k.1).expect("positive weights").0;
        match kind {
            Kind::R1Insert => {
                let gap = random_gap(&self.d, &mut self.rng);
                let sign = random_sign(&mut self.rng);
                let over_first = self.rng.gen();
                self.push(Move::R1Insert { gap, sign, over_first })?;
            }
            Kind::R2Insert => {
                let (a, b) = (random_gap(&self.d, &mut self.rng), random_gap(&self.d, &mut self.rng));
                let s = random_sign(&mut self.rng);
                let m = self.r2_placement(a, b, s, true);
                self.push(m)?;
            }
            Kind::Triangle => self.triangle()?,
            Kind::R1Delete => {
                let Some(&chord) = find_kinks(&self.d).choose(&mut self.rng) else {
                    return Ok(false);
                };
                self.push(Move::R1Delete { chord })?;
            }
            Kind::R2Delete => {
                let Some(&(first, second)) = find_r2a(&self.d).choose(&mut self.rng) else {
                    return Ok(false);
                };
                self.push(Move::R2aDelete { first, second })?;
            }
            Kind::R3 => {
                let Some(&chords) = find_r3(&self.d).choose(&mut self.rng) else {
                    return Ok(false);
                };
                self.push(Move::R3a { chords })?;
            }
        }
        Ok(true)
    }
}

/// Random walk of at least `cfg.steps` moves from `d`. Inapplicable draws are
/// resampled; a diagram without circles admits no move and is returned as is.
///
/// The walk starts from `d` renumbered as in its code, so that the trace
/// replays from [`MoveTrace::initial`].
pub fn fuzz_with(d: &GaussDiagram, cfg: &FuzzConfig) -> Result<MoveTrace> {
    let initial = d.to_code();
    let mut w = Walker {
        d: GaussDiagram::parse(&initial)?,
        moves: Vec::new(),
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        cfg,
    };
    if d.circle_count() > 0 {
        while w.moves.len() < cfg.steps {
            w.step()?;
        }
    }
    Ok(MoveTrace { initial, moves: w.moves, final_code: w.d.to_code() })
}

pub fn fuzz_equivalent(d: &GaussDiagram, steps: usize, seed: u64) -> Result<MoveTrace> {
    fuzz_with(d, &FuzzConfig::new(steps, seed))
}

/// Which weak chord index axiom a move broke.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// The two chords of an R2 have different indices.
    R2Pair,
    /// A chord of an R3 changed its index.
    R3Preserved,
    /// A chord not involved in the move changed its index.
    Uninvolved,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub step: usize,
    pub chord: ChordId,
    pub before: Option<i64>,
    pub after: Option<i64>,
}

/// Chords created, removed or moved by `m`; insertions always use the
/// highest ids of `after`.
fn involved(m: &Move, after: &GaussDiagram) -> Vec<ChordId> {
    let top = after.next_chord_id().0;
    match m {
        Move::R1Insert { .. } => vec![ChordId(top - 1)],
        Move::R2aInsert { .. } => vec![ChordId(top - 2), ChordId(top - 1)],
        Move::R1Delete { chord } => vec![*chord],
        Move::R2aDelete { first, second } => vec![*first, *second],
        Move::R3a { chords } => chords.to_vec(),
    }
}

/// Checks `Ind'` against the weak chord index axioms along a trace.
pub fn certify_ind_prime(trace: &MoveTrace, conv: Convention) -> Result<Vec<AxiomViolation>> {
    let diagrams = trace.replay()?;
    let mut out = Vec::new();
    for (step, m) in trace.moves.iter().enumerate() {
        let (before, after) = (&diagrams[step], &diagrams[step + 1]);
        let (tb, ta) = (IndexTable::new(before, conv), IndexTable::new(after, conv));
        let inv = involved(m, after);
        let pair = match m {
            Move::R2aInsert { .. } => Some((&ta, after)),
            Move::R2aDelete { .. } => Some((&tb, before)),
            _ => None,
        };
        if let Some((t, g)) = pair {
            let (a, b) = (inv[0], inv[1]);
            if g.chord(a)?.is_self() {
                let (ia, ib) = (t.ind_prime(a)?, t.ind_prime(b)?);
                if ia != ib {
                    out.push(AxiomViolation {
                        axiom: Axiom::R2Pair,
                        step,
                        chord: a,
                        before: Some(ia),
                        after: Some(ib),
                    });
                }
            }
        }
        for c in before.classify().self_chords {
            let is_involved = inv.contains(&c);
            if is_involved && !matches!(m, Move::R3a { .. }) {
                continue;
            }
            let (x, y) = (tb.ind_prime(c)?, ta.ind_prime(c)?);
            if x != y {
                out.push(AxiomViolation {
                    axiom: if is_involved { Axiom::R3Preserved } else { Axiom::Uninvolved },
                    step,
                    chord: c,
                    before: Some(x),
                    after: Some(y),
                });
            }
        }
    }
    Ok(out)
}
