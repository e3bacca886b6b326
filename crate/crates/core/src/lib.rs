//! Exact analysis of small undirected graphs: graph6 I/O, connectivity and
//! independence invariants, fragment/endfragment enumeration, longest-cycle
//! and dominating-cycle search, cycle-scheme bound audits, extremal path
//! systems, and a statement-checking harness for Dirac-type circumference
//! results.
//!
//! Everything here is exact. Graphs are capped at 64 vertices so adjacency
//! rows fit a single machine word; the exponential searches additionally
//! enforce their own smaller caps and accept node budgets.

pub mod budget;
pub mod census;
pub mod cycle;
pub mod error;
pub mod fragments;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod invariants;
pub mod lemmas;
pub mod pathsys;
pub mod schemes;
pub mod selftest;
pub mod theorems;

pub use error::Error;
pub use graph::{Graph, VertexSet, VERTEX_CAP};
