//! knotscan: a graph-minor laboratory for intrinsic knotting and linking
//! of complete partite graphs and their small edge-deficient relatives.
//!
//! The crate provides immutable simple-graph values with canonical forms,
//! an exhaustive minor-containment engine with verifiable witnesses,
//! triangle-Y family generation, linking/knotting classifiers with
//! machine-checkable certificates, and the table/census/bounds machinery
//! built on top of them.

pub mod cache;
pub mod canon;
pub mod census;
pub mod classify;
pub mod deficient;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod lab;
pub mod memo;
pub mod minor;
pub mod notation;
pub mod planar;
pub mod report;
pub mod tables;
pub mod ty;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use error::{Graph6Error, GraphError};
pub use graph::{complete_multipartite, Graph, PartLabeling, MAX_VERTICES};
