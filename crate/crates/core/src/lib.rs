//! Index functions and polynomial invariants of virtual links, computed from
//! Gauss diagrams, with Reidemeister-move rewriting to test their invariance.
//!
//! ```
//! use vlink::{GaussDiagram, invariants};
//!
//! let kishino: GaussDiagram = "U1-O2+O1-U2+U3-O4+O3-U4+".parse().unwrap();
//! let report = invariants::report(&kishino).unwrap();
//! assert!(report.w.is_zero());
//! assert!(!report.bbar.is_zero());
//! ```

pub mod corpus;
pub mod error;
pub mod gauss;
pub mod indices;
pub mod invariants;
pub mod moves;
pub mod poly;
pub mod random;

pub use error::{Error, Result};
pub use gauss::{ChordId, Chord, EndpointRef, GaussDiagram, Position, Role, Sign};
pub use indices::Convention;
pub use invariants::{InvariantReport, Invariants};
pub use poly::{ExponentSum, LaurentPolynomial};
