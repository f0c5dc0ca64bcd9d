//! Constructive pancyclicity certificates for Hamiltonian graphs.
//!
//! A graph is handled together with a [`CycleLabeling`] that maps a known Hamilton
//! cycle onto `0, 1, ..., n-1`. Cycles of every length are then produced as
//! [`CycleCertificate`]s built from the Hamilton cycle plus a few chords:
//! shortcuts for short and long lengths, crossing pairs for medium lengths and
//! direct search for the smallest ones.

pub mod adversary;
pub mod certificate;
pub mod crossing;
pub mod error;
pub mod finder;
pub mod geometry;
pub mod graph;
pub mod hypergraph;
pub mod random;
pub mod shortcut;

#[cfg(test)]
pub(crate) mod testutil;

pub use adversary::{apply_adversary, AdversaryKind, AdversaryRecord, AdversarySpec};
pub use certificate::{verify_certificate, CycleCertificate};
pub use crossing::{cycles_from_crossing, CrossingPair};
pub use error::{Error, Result};
pub use finder::{
    find_all_cycles, find_medium_cycle, find_shortcut, find_tiny_cycles, good_directions,
    CycleSpectrum, MissingLength, MissingReason, SpectrumRequest,
};
pub use geometry::{
    circ_distance, direction_of, direction_slice, is_close_crossing, is_crossing, DirectionSlice,
};
pub use graph::{CycleLabeling, Edge, Graph, Vertex, VertexSet};
pub use shortcut::{cycles_from_shortcut, validate_shortcut, Shortcut, Variant};
