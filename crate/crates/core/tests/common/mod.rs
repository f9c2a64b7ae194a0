#![allow(dead_code)]

use vlink::gauss::{ChordId, EndpointRef, GaussDiagram, Sign};
use vlink::poly::{ExponentSum, LaurentPolynomial};

/// Closure of a braid on `strands` strands. Generator `i` (1-based) crosses
/// positions `i-1` and `i`; a positive letter puts the left strand over, a
/// negative one the right strand, with crossing sign equal to the letter's.
pub fn braid_closure(word: &[i32], strands: usize) -> GaussDiagram {
    let mut at: Vec<usize> = (0..strands).collect();
    let mut passes: Vec<Vec<EndpointRef>> = vec![Vec::new(); strands];
    let mut signs = Vec::new();
    for (k, &g) in word.iter().enumerate() {
        let i = g.unsigned_abs() as usize;
        assert!(i >= 1 && i < strands, "generator out of range");
        let c = ChordId(k as u32 + 1);
        let (l, r) = (at[i - 1], at[i]);
        let (over, under) = if g > 0 { (l, r) } else { (r, l) };
        passes[over].push(EndpointRef::over(c));
        passes[under].push(EndpointRef::under(c));
        signs.push((c, if g > 0 { Sign::Positive } else { Sign::Negative }));
        at.swap(i - 1, i);
    }
    let mut end = vec![0; strands];
    for (pos, &thread) in at.iter().enumerate() {
        end[thread] = pos;
    }
    let mut seen = vec![false; strands];
    let mut circles = Vec::new();
    for start in 0..strands {
        if seen[start] {
            continue;
        }
        let mut word = Vec::new();
        let mut q = start;
        while !seen[q] {
            seen[q] = true;
            word.extend(passes[q].iter().copied());
            q = end[q];
        }
        circles.push(word);
    }
    GaussDiagram::new(circles, signs).expect("braid closures are valid")
}

pub fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(terms.iter().copied())
}

/// `s^-1 + s - 1 - s^2`
pub fn f() -> LaurentPolynomial {
    lp(&[(-1, 1), (1, 1), (0, -1), (2, -1)])
}

/// `f(s^-1)`
pub fn f_inv() -> LaurentPolynomial {
    f().invert_variable()
}

pub fn es(terms: &[(i64, LaurentPolynomial)]) -> ExponentSum {
    let mut out = ExponentSum::zero();
    for (c, g) in terms {
        out.add_term((*c).into(), g.clone());
    }
    out
}
