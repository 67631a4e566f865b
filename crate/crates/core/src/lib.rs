//! Rainbow vertex-connection (`rvc`, `srvc`) and rainbow connection (`rc`,
//! `src`) numbers of strongly connected digraphs.
//!
//! The crate is `no_std` with `alloc`. The default `std` feature adds
//! parallel search blocks and wall-clock limits to the exact solver.
//!
//! Module map:
//! - [`digraph`]: storage, distances, strong connectivity, vertex expansion.
//! - [`colouring`] and [`verify`]: colourings and the rainbow-path deciders.
//! - [`solver`]: exact minimisation over canonical colourings, plus the
//!   independent brute-force [`oracle`].
//! - [`families`]: every generator and constructive colouring.
//! - [`predict`]: closed-form values for those families.
//! - [`enumerate`]: small-order digraph and tournament enumeration.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod colouring;
pub mod digraph;
pub mod enumerate;
mod error;
pub mod families;
pub mod oracle;
pub mod predict;
pub mod solver;
pub mod verify;

pub use colouring::{ArcColouring, VertexColouring};
pub use digraph::{Digraph, DistanceMatrix};
pub use error::Error;
pub use predict::{
    BiorientedFamily, FamilyPrediction, Prediction, PredictionForm, TournamentPredictionKind,
};
pub use solver::{Parameter, SolveOptions, SolveResult, SolveStatus};
pub use verify::Verdict;

pub type Result<T, E = Error> = core::result::Result<T, E>;
