//! Bipartite distance-hereditary graphs: recognition, Galois lattices of
//! maximal bicliques, a compact path-arborescence encoding with fast
//! neighborhood queries, and the hypergraph correspondences around them.

pub mod encoding;
pub mod error;
pub mod graph;
pub mod hyper;
pub mod lattice;
pub mod oracle;
pub mod pruning;
pub mod query;

pub use encoding::{encode, verify_encoding, ArborescenceEncoding, PathInterval};
pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Forbidden, Side, Vertex};
pub use hyper::{Hypergraph, SimpleGraph};
pub use lattice::{hasse, maximal_bicliques, Biclique, GaloisLattice, HasseDigraph};
pub use pruning::{generate_bdh, is_bdh, pruning_sequence, GenOptions, PruningSequence, PruningStep, Verdict};
pub use query::QueryStats;
