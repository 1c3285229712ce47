//! Exact-arithmetic toolkit for the combinatorics of genus-one fibrations
//! on certain rational and Enriques-like surfaces in characteristic 2:
//!
//! * [`dynkin`] — extended Dynkin diagrams with their Kodaira–Néron and
//!   excess cycles;
//! * [`weightings`] — admissible weightings, certificates, and the
//!   excess-results verification;
//! * [`conductrix`] — the quasi-elliptic and elliptic classification
//!   tables, generated from first principles and diffed against frozen
//!   golden copies;
//! * [`q444`] — the `T(4,4,4)` lattice tower `Q ⊂ Q' , Q''`, the flip
//!   isometries, realisability, and the flip-table verification;
//! * [`fibration`] — surface models, the flip graph, and the census of
//!   genus-one fibrations;
//! * [`cli`] — the `genus1` command-line interface.
//!
//! Everything is computed in exact integer/rational arithmetic; no
//! floating point is used anywhere.

pub mod cli;
pub mod conductrix;
pub mod dynkin;
pub mod error;
pub mod fibration;
pub mod linalg;
pub mod q444;
pub mod weightings;

pub use error::Error;

// The book chapters double as documentation tests: every code block in
// them is compiled and run by `cargo test`.
#[doc = include_str!("../../../book/src/diagrams.md")]
mod _book_diagrams {}
#[doc = include_str!("../../../book/src/weightings.md")]
mod _book_weightings {}
#[doc = include_str!("../../../book/src/tables.md")]
mod _book_tables {}
#[doc = include_str!("../../../book/src/lattice.md")]
mod _book_lattice {}
#[doc = include_str!("../../../book/src/fibrations.md")]
mod _book_fibrations {}
