//! Polynomial invariants of virtual links: the writhe polynomial `W` and its
//! flat version `W̄`, the affine index and odd writhe polynomials of knots,
//! and the smoothing-based sums `L(t,s)`, `B(t,s)` and `B̄(t,s)`.
//!
//! Laurent polynomials carry no variable name; `W̄` of a smoothed link is the
//! same type, read in `s` when used as an exponent.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauss::{ChordId, GaussDiagram};
use crate::indices::{Convention, IndPrime, IndexTable, WeakChordIndex};
use crate::moves::smooth;
use crate::poly::{ExponentSum, FormalSum, LaurentPolynomial};

/// How per-crossing work (one smoothing per chord) is scheduled. Results are
/// identical either way.
/// `Parallel` falls back to sequential when the `parallel` feature is off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

fn map_chords<T, F>(exec: Execution, chords: &[ChordId], f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(ChordId) -> Result<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        use rayon::prelude::*;
        return chords.par_iter().map(|&c| f(c)).collect();
    }
    let _ = exec;
    chords.iter().map(|&c| f(c)).collect()
}

/// Computes invariants under a fixed endpoint-sign convention.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Invariants {
    pub conv: Convention,
    pub exec: Execution,
}

impl Invariants {
    pub fn new(conv: Convention) -> Self {
        Invariants { conv, ..Default::default() }
    }

    pub fn with_execution(self, exec: Execution) -> Self {
        Invariants { exec, ..self }
    }

    pub fn convention(&self) -> Convention {
        self.conv
    }

    fn w_over(&self, d: &GaussDiagram, only: Option<usize>) -> LaurentPolynomial {
        let t = IndexTable::new(d, self.conv);
        let mut out = LaurentPolynomial::zero();
        for c in d.chords().filter(|c| c.is_self() && only.is_none_or(|i| c.over.circle == i)) {
            if t.ind(c.id).expect("self chord") != 0 {
                out.add_term(c.sign.value().into(), t.ind_prime(c.id).expect("self chord"));
            }
        }
        out
    }

    /// `W(t) = Σ ω(c) t^{Ind'(c)}` over self chords with `Ind(c) ≠ 0`.
    pub fn w(&self, d: &GaussDiagram) -> LaurentPolynomial {
        self.w_over(d, None)
    }

    /// The part of `W` coming from each circle's self chords.
    pub fn w_components(&self, d: &GaussDiagram) -> Vec<LaurentPolynomial> {
        (0..d.circle_count()).map(|i| self.w_over(d, Some(i))).collect()
    }

    /// `Σ_i W_i(t) - t^{span_i} W_i(t^{-1})`.
    pub fn wbar(&self, d: &GaussDiagram) -> LaurentPolynomial {
        let spans = IndexTable::new(d, self.conv).spans();
        let mut out = LaurentPolynomial::zero();
        for (wi, span) in self.w_components(d).iter().zip(spans) {
            out += wi;
            out += &(-wi.invert_variable().shift(span));
        }
        out
    }

    fn knot_table<'a>(&self, d: &'a GaussDiagram) -> Result<IndexTable<'a>> {
        if d.circle_count() != 1 {
            return Err(Error::MultiComponent(d.circle_count()));
        }
        Ok(IndexTable::new(d, self.conv))
    }

    /// Affine index polynomial `Σ ω(c) t^{Ind(c)} - ω(K)` of a knot.
    pub fn affine_index_p(&self, d: &GaussDiagram) -> Result<LaurentPolynomial> {
        let t = self.knot_table(d)?;
        let mut out = LaurentPolynomial::monomial(-d.writhe(), 0);
        for c in d.chords() {
            out.add_term(c.sign.value().into(), t.ind(c.id)?);
        }
        Ok(out)
    }

    /// Odd writhe polynomial `Σ ω(c) t^{Ind(c)+1}` over chords of odd index.
    pub fn odd_writhe_f(&self, d: &GaussDiagram) -> Result<LaurentPolynomial> {
        let t = self.knot_table(d)?;
        let mut out = LaurentPolynomial::zero();
        for c in d.chords() {
            let i = t.ind(c.id)?;
            if i.rem_euclid(2) == 1 {
                out.add_term(c.sign.value().into(), i + 1);
            }
        }
        Ok(out)
    }

    /// `Σ ω(c) t^{wci(c)}` over self chords with `Ind(c) ≠ 0`.
    pub fn generic_g<I: WeakChordIndex>(&self, d: &GaussDiagram, wci: &I) -> Result<FormalSum<I::Value>> {
        let t = IndexTable::new(d, self.conv);
        let mut out = FormalSum::zero();
        for c in d.chords().filter(|c| c.is_self()) {
            if t.ind(c.id)? != 0 {
                out.add_term(c.sign.value().into(), wci.index(d, c.id)?);
            }
        }
        Ok(out)
    }

    /// `W̄` of the smoothing at every chord, in chord order.
    pub fn smoothing_wbars(&self, d: &GaussDiagram) -> Result<Vec<(ChordId, LaurentPolynomial)>> {
        let ids: Vec<ChordId> = d.chord_ids().collect();
        let wbars = map_chords(self.exec, &ids, |c| Ok(self.wbar(&smooth(d, c)?)))?;
        Ok(ids.into_iter().zip(wbars).collect())
    }

    fn l_ts_from(&self, d: &GaussDiagram, smoothed: &[(ChordId, LaurentPolynomial)]) -> Result<ExponentSum> {
        let mut out = ExponentSum::term(-d.writhe(), self.wbar(d));
        for (c, g) in smoothed {
            out.add_term(d.sign(*c)?.value().into(), g.clone());
        }
        Ok(out)
    }

    fn b_ts_from(&self, d: &GaussDiagram, smoothed: &[(ChordId, LaurentPolynomial)]) -> Result<ExponentSum> {
        let t = IndexTable::new(d, self.conv);
        let mut out = ExponentSum::zero();
        for (c, g) in smoothed {
            let chord = d.chord(*c)?;
            if !chord.is_self() {
                continue;
            }
            let w = chord.sign.value();
            out.add_term(w.into(), g.scale(&t.ind(*c)?.into()));
            out.add_term((-w).into(), LaurentPolynomial::zero());
        }
        Ok(out)
    }

    /// `L(t,s) = Σ_c ω(c) t^{W̄(L_c)(s)} - ω(L) t^{W̄(L)(s)}` over all chords.
    pub fn l_ts(&self, d: &GaussDiagram) -> Result<ExponentSum> {
        self.l_ts_from(d, &self.smoothing_wbars(d)?)
    }

    /// `weight_c(s) = Ind(c) · W̄(L_c)(s)` for a self chord.
    pub fn weight(&self, d: &GaussDiagram, c: ChordId) -> Result<LaurentPolynomial> {
        let i = IndexTable::new(d, self.conv).ind(c)?;
        Ok(self.wbar(&smooth(d, c)?).scale(&i.into()))
    }

    /// `B(t,s) = Σ_{c self} ω(c) (t^{weight_c(s)} - 1)`.
    pub fn b_ts(&self, d: &GaussDiagram) -> Result<ExponentSum> {
        let selfs = d.classify().self_chords;
        let wbars = map_chords(self.exec, &selfs, |c| Ok(self.wbar(&smooth(d, c)?)))?;
        let smoothed: Vec<_> = selfs.into_iter().zip(wbars).collect();
        self.b_ts_from(d, &smoothed)
    }

    /// `B(t,s) - B(t^{-1},s)`.
    pub fn bbar_ts(&self, d: &GaussDiagram) -> Result<ExponentSum> {
        let b = self.b_ts(d)?;
        Ok(&b - &b.invert_t())
    }

    /// Compares `W` of the mirror image with `-Σ_i t^{span_i} W_i(t^{-1})`,
    /// both computed from scratch.
    pub fn mirror_w_formula_check(&self, d: &GaussDiagram) -> bool {
        let lhs = self.w(&d.mirror_all());
        let spans = IndexTable::new(d, self.conv).spans();
        let mut rhs = LaurentPolynomial::zero();
        for (wi, span) in self.w_components(d).iter().zip(spans) {
            rhs += &(-wi.invert_variable().shift(span));
        }
        lhs == rhs
    }

    /// Lower bound on the number of self crossings: the larger of the
    /// absolute coefficient sums of `W` and of the non-unit terms of `B`.
    pub fn self_crossing_lower_bound(&self, d: &GaussDiagram) -> Result<BigInt> {
        Ok(self_bound(&self.w(d), &self.b_ts(d)?))
    }

    /// Lower bound on the number of real crossings: absolute coefficient sum
    /// of the terms of `L(t,s)` other than `t^{W̄(L)}`.
    pub fn real_crossing_lower_bound(&self, d: &GaussDiagram) -> Result<BigInt> {
        Ok(self.l_ts(d)?.coeff_abs_sum_except(&self.wbar(d)))
    }

    pub fn report(&self, d: &GaussDiagram) -> Result<InvariantReport> {
        let smoothed = self.smoothing_wbars(d)?;
        let w = self.w(d);
        let wbar = self.wbar(d);
        let l_ts = self.l_ts_from(d, &smoothed)?;
        let b = self.b_ts_from(d, &smoothed)?;
        let bbar = &b - &b.invert_t();
        let knot = d.circle_count() == 1;
        let to_u64 = |x: BigInt| x.to_u64().expect("crossing bounds are small");
        Ok(InvariantReport {
            input: d.to_code(),
            components: d.circle_count(),
            spans: IndexTable::new(d, self.conv).spans(),
            w_i: self.w_components(d),
            p: if knot { Some(self.affine_index_p(d)?) } else { None },
            f: if knot { Some(self.odd_writhe_f(d)?) } else { None },
            self_crossing_lower_bound: to_u64(self_bound(&w, &b)),
            real_crossing_lower_bound: to_u64(l_ts.coeff_abs_sum_except(&wbar)),
            nonclassical: !w.is_zero() || !l_ts.is_zero() || !b.is_zero(),
            nontrivial_flat: !wbar.is_zero() || !bbar.is_zero(),
            w,
            wbar,
            l_ts,
            b,
            bbar,
        })
    }
}

fn self_bound(w: &LaurentPolynomial, b: &ExponentSum) -> BigInt {
    w.coeff_abs_sum(false).max(b.coeff_abs_sum(true))
}

/// Everything computed for one diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub input: String,
    pub components: usize,
    pub spans: Vec<i64>,
    #[serde(rename = "W")]
    pub w: LaurentPolynomial,
    #[serde(rename = "Wbar")]
    pub wbar: LaurentPolynomial,
    #[serde(rename = "W_i")]
    pub w_i: Vec<LaurentPolynomial>,
    #[serde(rename = "P")]
    pub p: Option<LaurentPolynomial>,
    pub f: Option<LaurentPolynomial>,
    #[serde(rename = "L_ts")]
    pub l_ts: ExponentSum,
    #[serde(rename = "B")]
    pub b: ExponentSum,
    #[serde(rename = "Bbar")]
    pub bbar: ExponentSum,
    pub self_crossing_lower_bound: u64,
    pub real_crossing_lower_bound: u64,
    pub nonclassical: bool,
    pub nontrivial_flat: bool,
}

impl InvariantReport {
    /// Human-readable form, one invariant per line, ascending exponents.
    pub fn to_text(&self) -> String {
        let opt = |p: &Option<LaurentPolynomial>| p.as_ref().map_or("n/a".to_string(), |p| p.display("t"));
        let mut lines = vec![
            format!("input: {}", self.input),
            format!("components: {}", self.components),
            format!("spans: {:?}", self.spans),
            format!("W: {}", self.w.display("t")),
            format!("Wbar: {}", self.wbar.display("t")),
        ];
        for (i, wi) in self.w_i.iter().enumerate() {
            lines.push(format!("W_{}: {}", i + 1, wi.display("t")));
        }
        lines.extend([
            format!("P: {}", opt(&self.p)),
            format!("f: {}", opt(&self.f)),
            format!("L_ts: {}", self.l_ts),
            format!("B: {}", self.b),
            format!("Bbar: {}", self.bbar),
            format!("self crossing lower bound: {}", self.self_crossing_lower_bound),
            format!("real crossing lower bound: {}", self.real_crossing_lower_bound),
            format!("nonclassical: {}", self.nonclassical),
            format!("nontrivial flat: {}", self.nontrivial_flat),
        ]);
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

pub fn writhe_poly_w(d: &GaussDiagram) -> LaurentPolynomial {
    Invariants::default().w(d)
}

pub fn writhe_poly_components(d: &GaussDiagram) -> Vec<LaurentPolynomial> {
    Invariants::default().w_components(d)
}

pub fn flat_writhe_wbar(d: &GaussDiagram) -> LaurentPolynomial {
    Invariants::default().wbar(d)
}

pub fn affine_index_p(d: &GaussDiagram) -> Result<LaurentPolynomial> {
    Invariants::default().affine_index_p(d)
}

pub fn odd_writhe_f(d: &GaussDiagram) -> Result<LaurentPolynomial> {
    Invariants::default().odd_writhe_f(d)
}

pub fn generic_g<I: WeakChordIndex>(d: &GaussDiagram, wci: &I) -> Result<FormalSum<I::Value>> {
    Invariants::default().generic_g(d, wci)
}

pub fn l_ts(d: &GaussDiagram) -> Result<ExponentSum> {
    Invariants::default().l_ts(d)
}

pub fn weight(d: &GaussDiagram, c: ChordId) -> Result<LaurentPolynomial> {
    Invariants::default().weight(d, c)
}

pub fn b_ts(d: &GaussDiagram) -> Result<ExponentSum> {
    Invariants::default().b_ts(d)
}

pub fn bbar_ts(d: &GaussDiagram) -> Result<ExponentSum> {
    Invariants::default().bbar_ts(d)
}

pub fn mirror_w_formula_check(d: &GaussDiagram) -> bool {
    Invariants::default().mirror_w_formula_check(d)
}

pub fn self_crossing_lower_bound(d: &GaussDiagram) -> Result<BigInt> {
    Invariants::default().self_crossing_lower_bound(d)
}

pub fn real_crossing_lower_bound(d: &GaussDiagram) -> Result<BigInt> {
    Invariants::default().real_crossing_lower_bound(d)
}

pub fn report(d: &GaussDiagram) -> Result<InvariantReport> {
    Invariants::default().report(d)
}

/// `W` through the generic construction with `Ind'` as the index.
pub fn writhe_poly_via_generic(d: &GaussDiagram, conv: Convention) -> Result<LaurentPolynomial> {
    Ok(Invariants::new(conv).generic_g(d, &IndPrime(conv))?.to_laurent())
}
