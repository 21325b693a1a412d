//! Certifying recognition of graph classes through vertex orderings.
//!
//! Interval, proper interval, comparability, co-comparability, permutation,
//! chordal and split graphs are each characterised by an ordering of the
//! vertices in which every triple `i < j < k` satisfies a local implication
//! about the three pairs among them. An ordering passing the check is a
//! certificate that can be re-validated in `O(n^3)` time, and it carries
//! enough structure to build interval models, transitive orientations and
//! permutation realizers, and to bound the bandwidth of the graph.
//!
//! ```
//! use ordercert::{check_ordering, find_ordering, Condition, Graph};
//!
//! let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
//! let conds = [Condition::Comparability, Condition::CoComparability];
//! let ord = find_ordering(&c4, &conds, 16).unwrap().unwrap();
//! assert_eq!(ord.as_slice(), &[0, 2, 1, 3]);
//! assert!(check_ordering(&c4, &ord, Condition::Comparability).unwrap().holds);
//! ```

pub mod bandwidth;
mod bits;
pub mod certificate;
pub mod conditions;
mod error;
pub mod generators;
mod graph;
pub mod io;
pub mod limits;
pub mod rational;
pub mod recognition;
pub mod representations;

pub use bandwidth::{exact_bandwidth, lower_bounds, ordering_width, BandwidthResult, Caterpillar, LowerBounds};
pub use certificate::{verify, Certificate};
pub use conditions::{check_all, check_ordering, prefix_admissible, Condition, Triple, Verdict};
pub use error::{Error, Result};
pub use generators::{gen, FamilySpec};
pub use graph::{Graph, VertexOrdering};
pub use limits::Limits;
pub use rational::Rational;
pub use recognition::{find_ordering, recognize, ClassId, RecognizeOptions};
