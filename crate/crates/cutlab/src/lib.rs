//! Exact minimum-cut machinery for studying how few distinct values the
//! optima of whole demand families can take.
//!
//! The crate bundles:
//!
//! * weighted-graph primitives with exact (arbitrary-precision) weights,
//!   the cut function, contraction, and a reversible tie-breaking
//!   perturbation ([`graph`], [`weight`], [`partition`], [`demand`]);
//! * exact solvers: max-flow based s-t and group cuts, and enumeration
//!   oracles for multiway and multicut instances at desk scale
//!   ([`solver`]);
//! * flow-equivalent tree construction and all-pairs distinct-value
//!   counting ([`gomory_hu`]);
//! * demand-family enumeration, redundancy reports, and the matching
//!   theoretical upper bounds ([`family`]);
//! * generators for the tight lower-bound graph families
//!   ([`construct`]);
//! * executable GF(2) rank and span certificates for those bounds
//!   ([`certify`]);
//! * succinct cut-evaluation schemes: preprocess once, answer value and
//!   partition queries without the graph ([`scheme`]);
//! * a weight-recovery attack that reconstructs a hidden adversarial
//!   graph from flow-evaluation queries alone, demonstrating the storage
//!   lower bound ([`attack`]).
//!
//! Instance-level loops are data-parallel via rayon when the default
//! `parallel` feature is enabled; results are bitwise identical either
//! way.

pub mod attack;
pub mod certify;
pub mod combin;
pub mod construct;
pub mod demand;
pub mod error;
pub mod exec;
pub mod family;
pub mod gomory_hu;
pub mod graph;
pub mod io;
pub mod partition;
pub mod scheme;
pub mod solver;
pub mod weight;

pub use demand::{agrees, DemandGraph, DemandKind};
pub use error::{Error, Result};
pub use graph::{deperturb, WeightedGraph};
pub use partition::Partition;
pub use weight::Weight;
