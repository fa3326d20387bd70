//! Seidel complementation and the structure of `(P5, House, Bull)`-free graphs.
//!
//! `G * v` inverts every pair between the neighborhood of `v` and the
//! vertices not adjacent to `v`, leaving all other pairs alone.

pub mod error;
pub mod formats;
pub mod graph;
pub mod halfgraph_fast;
pub mod harness;
pub mod modular;
pub mod recognition;
pub mod seidel;
pub mod structure;

pub use error::{GraphError, HarnessError, ParseError, StructureError};
pub use graph::{Bipartition, CanonicalCode, Graph, InducedSubgraph, VertexSet};
pub use halfgraph_fast::HalfGraphDescriptor;
pub use modular::{is_module, is_prime, md_tree, MdNode, ModuleKind};
pub use recognition::{find_induced, is_free, Pattern, PatternMatch};
pub use seidel::{classify_edges, seidel_complement, SeidelEdgeClassification};
pub use structure::{
    classify_prime, find_buoy, make_halfgraph, recognize_halfgraph, BuoyPartition, ClassReport,
    Condition, ConditionWitness, HalfGraphForm,
};
