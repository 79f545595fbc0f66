//! CIM-based adaptive resonance clustering.
//!
//! The network grows nodes from a stream of instances: each instance is
//! compared with its two most similar nodes under the correntropy-induced
//! metric, and a vigilance threshold `V` decides whether it spawns a new node
//! or refines the winners. Edges between winners carry an age and are pruned
//! when they go stale. Connected components of the resulting graph are the
//! clusters.

mod adaptive;
mod metric;
mod network;
mod train;

pub use adaptive::{adaptive_train_ca, AdaptiveOutcome, ACCEPT_HIGH, ACCEPT_LOW, MAX_SEARCH_PASSES, SMALL_INPUT_THRESHOLD, SMALL_INPUT_VIGILANCE};
pub use metric::{cim, estimate_bandwidth, BANDWIDTH_FLOOR};
pub use network::{connected_components, ClusterLabeling, Edge, Node, TopoNetwork};
pub use train::{learn_case_ii, learn_case_iii, select_winners, train_ca, vigilance_classify, VigilanceCase};
