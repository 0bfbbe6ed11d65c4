//! Algebraic invariants of binomial edge ideals of block graphs, computed
//! purely from the graph.
//!
//! A block graph is a graph whose biconnected components are all cliques.
//! For these graphs the key invariants of the quotient by the binomial edge
//! ideal are combinatorial: depth and projective dimension are `n + c` and
//! `n - c`, the Krull dimension comes out of a single traversal of the
//! block-cut forest, and the Castelnuovo-Mumford regularity follows from
//! locating and peeling flower subgraphs. The ideal itself is never
//! materialized; the graph carries all the data.
//!
//! Every fast path here has an exhaustive counterpart in [`oracle`] that
//! recomputes the same quantity from the definition (enumerating all vertex
//! cutsets, or searching for induced flowers petal by petal). The test
//! suites hold the two sides together; the `--check` CLI flag does the same
//! on demand.
//!
//! ```
//! use bei::{families, validate_block_graph};
//! use bei::{compute_regularity, krull_dim_linear};
//!
//! let g = families::bridged_flowers(2, 3);
//! let bd = validate_block_graph(&g).unwrap();
//! assert_eq!(krull_dim_linear(&bd), 15);
//! assert_eq!(compute_regularity(&bd), 5);
//! ```
//!
//! The `bei` binary exposes the same functionality over edge-list files; see
//! the crate README and `examples/` for entry points.

pub mod blocks;
pub mod cli;
pub mod dim;
pub mod families;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod reg;
pub mod report;

pub use blocks::{validate_block_graph, BlockDecomposition, IndecomposableSplit, NotBlockGraph};
pub use dim::{certify_witness, krull_dim_linear, min_cutset_witness, DimWitness, WitnessRejection};
pub use gen::{generate_block_graph, GenConfig};
pub use graph::{parse_graph, Graph, ParseError, Vertex};
pub use oracle::{cutset_stats, CutSet, MinimalPrimeSummary, Oracle, OracleError};
pub use reg::{
    compute_regularity, depth_projdim, eligible_block_count, find_end_flower, flower_betti,
    is_flower_free, longest_induced_path, reg_bounds, reg_bounds_totals, BettiEntry, BettiPair,
    FlowerSignature, RegBounds,
};
pub use report::{build_report, InvariantReport};
