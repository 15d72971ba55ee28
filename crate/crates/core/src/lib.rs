//! Exact computation with Legendrian front diagrams.
//!
//! The library represents fronts as Morse event lists and provides, on top of
//! that representation:
//!
//! - classical invariants: writhe, Thurston-Bennequin number, rotation number;
//! - normal rulings: smoothing, the normality check, enumeration, and max-tb
//!   certificates;
//! - cables: parallel copies, twist boxes, and the framed cable construction
//!   with its tb formula, each postcondition re-verified on the built front;
//! - skein engines: the Dubrovnik/Kauffman polynomial with its tb bound, and
//!   the Conway polynomial, both exact;
//! - Casson invariant values for 1/n surgeries, and closed-form invariant
//!   tables for the cabled ribbon-knot families.
//!
//! Everything is integer-exact: there is no floating point anywhere.
//!
//! With the default `parallel` feature the brute-force ruling oracle, corpus
//! runner, cable sweeps and consistency grids fan out over rayon; disabling
//! the feature swaps in sequential fallbacks with identical output.

#![forbid(unsafe_code)]

pub mod cable;
pub mod diagram;
pub mod error;
pub mod front;
pub mod orient;
pub mod par;
pub mod poly;
pub mod ruling;
pub mod skein;

pub use cable::{cable_front, p_copy, twist_box, verify_cable_formula, CableParams, CableReport, CabledFront, CopyTag};
pub use diagram::LinkDiagram;
pub use error::{Error, Result};
pub use front::{Event, FrontDiagram, StabSign, ValidationReport};
pub use orient::{components, rotation, tb, writhe, Components, OrientedFront, Sense};
pub use ruling::{
    brute_force_rulings, enumerate_rulings, is_ruling, maxtb_certificate, smooth,
    MaxTbCertificate, Ruling, RulingVerdict, SmoothedDiagram,
};
