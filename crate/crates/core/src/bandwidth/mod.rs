//! Exact bandwidth, lower bounds, and class-specific orderings with their
//! width guarantees.

mod bounds;
mod caterpillar;
mod exact;

pub use bounds::{
    atfree_bandwidth_ordering, cocomp_bandwidth_ordering, interval_bandwidth_ordering, lower_bounds, ordering_width,
    proper_interval_bandwidth_ordering, split_bandwidth_ordering, BoundKind, BoundedOrdering, LowerBounds,
};
pub use caterpillar::{caterpillar_ordering, check_caterpillar_distances, find_spanning_caterpillar, Caterpillar};
pub use exact::{exact_bandwidth, BandwidthResult};
