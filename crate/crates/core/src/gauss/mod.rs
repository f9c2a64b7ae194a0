//! Gauss diagrams of multi-component virtual links.
//!
//! A diagram is a list of oriented circles, one per component, each read as a
//! cyclic word of chord endpoints. A chord is a real crossing: it runs from its
//! over endpoint to its under endpoint and carries the writhe of the crossing.
//! Virtual crossings leave no trace in this representation.

mod canon;
mod code;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::CanonicalForm;
pub use code::{strip_comments, ParsedCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChordId(pub u32);

impl fmt::Display for ChordId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn opposite(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Role::Over => 'O',
            Role::Under => 'U',
        }
    }
}

/// Writhe of a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EndpointRef {
    pub chord: ChordId,
    pub role: Role,
}

impl EndpointRef {
    pub fn new(chord: ChordId, role: Role) -> Self {
        EndpointRef { chord, role }
    }

    pub fn over(chord: ChordId) -> Self {
        EndpointRef::new(chord, Role::Over)
    }

    pub fn under(chord: ChordId) -> Self {
        EndpointRef::new(chord, Role::Under)
    }
}

/// Address of an endpoint: circle index and index in that circle's word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub circle: usize,
    pub index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chord {
    pub id: ChordId,
    pub sign: Sign,
    pub over: Position,
    pub under: Position,
}

impl Chord {
    pub fn end(&self, role: Role) -> Position {
        match role {
            Role::Over => self.over,
            Role::Under => self.under,
        }
    }

    /// Both endpoints on one circle.
    pub fn is_self(&self) -> bool {
        self.over.circle == self.under.circle
    }
}

/// Self chords `S` and linking chords `M`, each in increasing id order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Classification {
    pub self_chords: Vec<ChordId>,
    pub linking_chords: Vec<ChordId>,
}

/// Structural equality (`==`) compares circle words and ids literally; use
/// [`GaussDiagram::diagram_equal`] for equality up to presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussDiagram {
    circles: Vec<Vec<EndpointRef>>,
    chords: BTreeMap<ChordId, Chord>,
}

impl GaussDiagram {
    /// Builds a diagram from circle words and chord signs, checking that every
    /// chord has exactly one over and one under endpoint and exactly one sign.
    pub fn new<I>(circles: Vec<Vec<EndpointRef>>, signs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ChordId, Sign)>,
    {
        let signs: BTreeMap<ChordId, Sign> = signs.into_iter().collect();
        let mut over: BTreeMap<ChordId, Position> = BTreeMap::new();
        let mut under: BTreeMap<ChordId, Position> = BTreeMap::new();
        for (ci, circle) in circles.iter().enumerate() {
            for (index, e) in circle.iter().enumerate() {
                let slot = match e.role {
                    Role::Over => &mut over,
                    Role::Under => &mut under,
                };
                let pos = Position { circle: ci, index };
                if slot.insert(e.chord, pos).is_some() {
                    return Err(Error::DuplicateRole {
                        label: e.chord.to_string(),
                        role: e.role.letter(),
                    });
                }
            }
        }
        let mut chords = BTreeMap::new();
        for (&id, &o) in &over {
            let u = under
                .get(&id)
                .copied()
                .ok_or_else(|| Error::UnpairedLabel(id.to_string()))?;
            let sign = signs
                .get(&id)
                .copied()
                .ok_or_else(|| Error::UnknownChord(id.to_string()))?;
            chords.insert(id, Chord { id, sign, over: o, under: u });
        }
        if let Some(id) = under.keys().find(|id| !over.contains_key(id)) {
            return Err(Error::UnpairedLabel(id.to_string()));
        }
        if let Some(id) = signs.keys().find(|id| !chords.contains_key(id)) {
            return Err(Error::UnknownChord(id.to_string()));
        }
        Ok(GaussDiagram { circles, chords })
    }

    /// The diagram with no components at all.
    pub fn empty() -> Self {
        GaussDiagram { circles: Vec::new(), chords: BTreeMap::new() }
    }

    /// One circle without chords.
    pub fn unknot() -> Self {
        GaussDiagram::trivial(1)
    }

    /// `n` circles without chords.
    pub fn trivial(n: usize) -> Self {
        GaussDiagram { circles: vec![Vec::new(); n], chords: BTreeMap::new() }
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn circles(&self) -> &[Vec<EndpointRef>] {
        &self.circles
    }

    pub fn circle(&self, i: usize) -> Result<&[EndpointRef]> {
        self.circles
            .get(i)
            .map(Vec::as_slice)
            .ok_or(Error::CircleOutOfRange { index: i, count: self.circles.len() })
    }

    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    pub fn chords(&self) -> impl Iterator<Item = &Chord> + '_ {
        self.chords.values()
    }

    pub fn chord_ids(&self) -> impl Iterator<Item = ChordId> + '_ {
        self.chords.keys().copied()
    }

    pub fn chord(&self, id: ChordId) -> Result<&Chord> {
        self.chords.get(&id).ok_or_else(|| Error::UnknownChord(id.to_string()))
    }

    pub fn contains(&self, id: ChordId) -> bool {
        self.chords.contains_key(&id)
    }

    pub fn endpoint(&self, pos: Position) -> Option<EndpointRef> {
        self.circles.get(pos.circle)?.get(pos.index).copied()
    }

    pub fn position(&self, e: EndpointRef) -> Result<Position> {
        Ok(self.chord(e.chord)?.end(e.role))
    }

    pub fn sign(&self, id: ChordId) -> Result<Sign> {
        Ok(self.chord(id)?.sign)
    }

    /// Sum of the writhes of all crossings.
    pub fn writhe(&self) -> i64 {
        self.chords.values().map(|c| c.sign.value()).sum()
    }

    /// Smallest id not used by any chord, at least 1.
    pub fn next_chord_id(&self) -> ChordId {
        ChordId(self.chords.keys().next_back().map_or(1, |c| c.0 + 1))
    }

    /// Whether `b` immediately follows `a` in the cyclic word of a common circle.
    pub fn follows(&self, a: EndpointRef, b: EndpointRef) -> Result<bool> {
        let pa = self.position(a)?;
        let pb = self.position(b)?;
        if pa.circle != pb.circle {
            return Ok(false);
        }
        let n = self.circles[pa.circle].len();
        Ok((pa.index + 1) % n == pb.index)
    }

    pub fn classify(&self) -> Classification {
        let mut out = Classification::default();
        for c in self.chords.values() {
            if c.is_self() {
                out.self_chords.push(c.id);
            } else {
                out.linking_chords.push(c.id);
            }
        }
        out
    }

    /// Self chords whose endpoints lie on circle `i`.
    pub fn self_chords_on(&self, i: usize) -> impl Iterator<Item = &Chord> + '_ {
        self.chords.values().filter(move |c| c.is_self() && c.over.circle == i)
    }

    /// Component `i` viewed as a knot: one circle holding its self chords in
    /// their original order. Chord ids are preserved.
    pub fn restrict_component(&self, i: usize) -> Result<GaussDiagram> {
        let circle = self.circle(i)?;
        let word: Vec<EndpointRef> = circle
            .iter()
            .copied()
            .filter(|e| self.chords[&e.chord].is_self())
            .collect();
        let signs = word
            .iter()
            .filter(|e| e.role == Role::Over)
            .map(|e| (e.chord, self.chords[&e.chord].sign))
            .collect::<Vec<_>>();
        GaussDiagram::new(vec![word], signs)
    }

    /// Switches crossing `c`: the arrow is reversed and the sign negated.
    pub fn crossing_change(&self, c: ChordId) -> Result<GaussDiagram> {
        let chord = *self.chord(c)?;
        let mut next = self.clone();
        let over = chord.over;
        let under = chord.under;
        next.circles[over.circle][over.index].role = Role::Under;
        next.circles[under.circle][under.index].role = Role::Over;
        next.chords.insert(
            c,
            Chord { id: c, sign: -chord.sign, over: under, under: over },
        );
        Ok(next)
    }

    /// Switches every real crossing.
    pub fn mirror_all(&self) -> GaussDiagram {
        let circles = self
            .circles
            .iter()
            .map(|w| {
                w.iter()
                    .map(|e| EndpointRef::new(e.chord, e.role.opposite()))
                    .collect()
            })
            .collect();
        let chords = self
            .chords
            .values()
            .map(|c| {
                (c.id, Chord { id: c.id, sign: -c.sign, over: c.under, under: c.over })
            })
            .collect();
        GaussDiagram { circles, chords }
    }

    /// Circles of `self` followed by circles of `other`; the chords of
    /// `other` are renumbered above those of `self`.
    pub fn disjoint_union(&self, other: &GaussDiagram) -> GaussDiagram {
        let offset = self.next_chord_id().0 - 1;
        let shift = |id: ChordId| ChordId(id.0 + offset);
        let mut circles = self.circles.clone();
        circles.extend(other.circles.iter().map(|w| {
            w.iter().map(|e| EndpointRef::new(shift(e.chord), e.role)).collect()
        }));
        let n = self.circles.len();
        let mut chords = self.chords.clone();
        for c in other.chords.values() {
            let mv = |p: Position| Position { circle: p.circle + n, index: p.index };
            let id = shift(c.id);
            chords.insert(id, Chord { id, sign: c.sign, over: mv(c.over), under: mv(c.under) });
        }
        GaussDiagram { circles, chords }
    }

    /// Rebuilds a diagram from edited circle words, keeping the signs of the
    /// chords that survive.
    pub(crate) fn with_circles(&self, circles: Vec<Vec<EndpointRef>>) -> Result<GaussDiagram> {
        let signs: Vec<(ChordId, Sign)> = circles
            .iter()
            .flatten()
            .filter(|e| e.role == Role::Over)
            .map(|e| Ok((e.chord, self.sign(e.chord)?)))
            .collect::<Result<_>>()?;
        GaussDiagram::new(circles, signs)
    }

    /// Presentation-independent form: equal for two diagrams exactly when
    /// they differ by rotating circle words, renaming chords and permuting
    /// circles.
    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_form(self)
    }

    pub fn diagram_equal(&self, other: &GaussDiagram) -> bool {
        self.circle_count() == other.circle_count()
            && self.chord_count() == other.chord_count()
            && self.canonical_form() == other.canonical_form()
    }
}
