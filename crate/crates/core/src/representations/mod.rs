//! Certifying representations: interval models, transitive orientations,
//! function diagrams, permutations, subtree models and split orderings.

mod diagram;
mod interval;
mod orientation;
mod permutation;
mod split;
mod subtree;

pub use diagram::{intersection_graph_of_diagram, ordering_from_diagram, FunctionDiagram};
pub use interval::{
    intersection_graph_of_intervals, interval_model_from_ordering, ordering_from_intervals, Interval, IntervalModel,
};
pub use orientation::{orientation_from_ordering, Orientation, OrientationMode};
pub use permutation::{linear_diagram_from_permutation, permutation_from_ordering, permutation_graph, Permutation};
pub use split::split_ordering;
pub use subtree::intersection_graph_of_subtrees;
