pub mod graph;
pub mod matroid;
pub mod random;

pub use graph::{cycle_matroid, graph_connectivity, graph_rank, Edge, Graph};
pub use matroid::{
    binary_matroid, free_matroid, matroid_check, polymatroid_from_subsets, uniform_matroid,
    SubsetFamily,
};
pub use random::{
    random_connectivity, random_coverage_polymatroid, random_graph, random_matroid,
    random_multigraph, random_polymatroid, ConnectivitySource,
};
