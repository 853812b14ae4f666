//! Colorings of Delaunay-edges and t-tuples of point sets with respect to
//! geometric region families, together with brute-force verifiers that check
//! every guarantee against canonical enumerations of the regions.

pub mod edges;
pub mod error;
pub mod families;
pub mod generate;
pub mod geometry;
pub mod hypergraph;
pub mod io;
pub mod tuples;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use families::{
    canonical_hyperedges, canonical_regions, delaunay_edges, h_region_reduction, is_shrinkable,
    FamilyKind, HalfspaceSpec, Region,
};
pub use geometry::{Point, PointSet, Q};
pub use hypergraph::{EdgeSet, Hypergraph};
pub use vertex_set::VertexSet;
pub use edges::EdgeColoring;
pub use tuples::TupleColoring;
pub use verify::{Mode, ThresholdKind, VerificationReport};
