//! Pseudo-binary search on the vigilance threshold so that the trained
//! network has roughly as many nodes as the population.

use super::network::TopoNetwork;
use super::train::train_ca;

/// Maximum number of training passes in the search branch.
pub const MAX_SEARCH_PASSES: usize = 5;
/// Accepted node counts are `[ACCEPT_LOW·N, ACCEPT_HIGH·N]`.
pub const ACCEPT_LOW: f64 = 0.75;
pub const ACCEPT_HIGH: f64 = 1.25;
/// Inputs of at most `SMALL_INPUT_THRESHOLD·N` instances skip the search.
pub const SMALL_INPUT_THRESHOLD: f64 = 1.25;
/// Threshold used when the search is skipped.
pub const SMALL_INPUT_VIGILANCE: f64 = 0.1;

#[derive(Debug, Clone)]
pub struct AdaptiveOutcome {
    pub network: TopoNetwork,
    /// The threshold the returned network was trained with.
    pub threshold: f64,
    /// Number of training passes performed.
    pub passes: usize,
    /// Whether the search stopped because the node count was in range.
    pub accepted: bool,
}

fn in_range(nodes: usize, population_size: usize) -> bool {
    let k = nodes as f64;
    let n = population_size as f64;
    ACCEPT_LOW * n <= k && k <= ACCEPT_HIGH * n
}

/// Trains a fresh network on `instances`, tuning `V` so that the node count
/// lands in `[0.75N, 1.25N]`.
///
/// For `|X| ≤ 1.25N` a single pass with `V = 0.1` is made. Otherwise `V`
/// starts at the inherited `threshold` with bounds `[0, 1]`: too many nodes
/// raise the lower bound to `V`, too few lower the upper bound, and the next
/// `V` is the midpoint. At most five passes are made.
pub fn adaptive_train_ca<T: AsRef<[f64]>>(
    instances: &[T],
    lambda: usize,
    threshold: f64,
    population_size: usize,
) -> AdaptiveOutcome {
    let train = |v: f64| {
        let mut net = TopoNetwork::new(lambda, v);
        train_ca(instances, &mut net);
        net
    };
    search(instances.len(), threshold, population_size, train)
}

fn search<F: FnMut(f64) -> TopoNetwork>(
    input_len: usize,
    threshold: f64,
    population_size: usize,
    mut train: F,
) -> AdaptiveOutcome {
    if input_len as f64 <= SMALL_INPUT_THRESHOLD * population_size as f64 {
        let network = train(SMALL_INPUT_VIGILANCE);
        let accepted = in_range(network.len(), population_size);
        return AdaptiveOutcome { network, threshold: SMALL_INPUT_VIGILANCE, passes: 1, accepted };
    }

    let (mut lower, mut upper) = (0.0, 1.0);
    let mut v = threshold.clamp(0.0, 1.0);
    let mut pass = 0;
    loop {
        pass += 1;
        let network = train(v);
        let nodes = network.len();
        if in_range(nodes, population_size) {
            return AdaptiveOutcome { network, threshold: v, passes: pass, accepted: true };
        }
        if pass == MAX_SEARCH_PASSES {
            return AdaptiveOutcome { network, threshold: v, passes: pass, accepted: false };
        }
        if (nodes as f64) < ACCEPT_LOW * population_size as f64 {
            upper = v;
        } else {
            lower = v;
        }
        v = 0.5 * (upper + lower);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;
    use rand::{Rng, SeedableRng};

    fn stream(n: usize, seed: u64) -> Vec<Vec<f64>> {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                let a: f64 = rng.gen();
                let b: f64 = rng.gen::<f64>() * (1.0 - a);
                vec![a, b, 1.0 - a - b]
            })
            .collect()
    }

    fn fake_net(nodes: usize) -> TopoNetwork {
        let mut net = TopoNetwork::new(10, 0.0);
        for i in 0..nodes {
            net.add_node(vec![i as f64], 1.0);
        }
        net
    }

    #[test]
    fn too_many_nodes_raises_lower_bound() {
        let mut seen = Vec::new();
        let out = search(400, 0.3, 100, |v| {
            seen.push(v);
            fake_net(if seen.len() == 1 { 200 } else { 100 })
        });
        assert_eq!(seen, vec![0.3, 0.65]);
        assert_eq!(out.threshold, 0.65);
        assert_eq!(out.passes, 2);
        assert!(out.accepted);
    }

    #[test]
    fn too_few_nodes_lowers_upper_bound() {
        let mut seen = Vec::new();
        let out = search(400, 0.4, 100, |v| {
            seen.push(v);
            fake_net(10)
        });
        assert_eq!(seen, vec![0.4, 0.2, 0.1, 0.05, 0.025]);
        assert_eq!(out.passes, MAX_SEARCH_PASSES);
        assert_eq!(out.threshold, 0.025);
        assert!(!out.accepted);
    }

    #[test]
    fn in_range_on_first_pass_exits_immediately() {
        let mut calls = 0;
        let out = search(400, 0.37, 100, |_| {
            calls += 1;
            fake_net(75)
        });
        assert_eq!((calls, out.passes, out.threshold), (1, 1, 0.37));
    }

    #[test]
    fn small_input_resets_threshold() {
        let x = stream(40, 1);
        let out = adaptive_train_ca(&x, 10, 0.7, 40);
        assert_eq!(out.threshold, 0.1);
        assert_eq!(out.passes, 1);
    }

    #[test]
    fn search_stays_within_bounds() {
        let x = stream(300, 2);
        for v in [0.0, 0.05, 0.5, 1.0] {
            let out = adaptive_train_ca(&x, 20, v, 100);
            assert!(out.passes <= MAX_SEARCH_PASSES);
            assert!((0.0..=1.0).contains(&out.threshold));
            if out.accepted {
                assert!(in_range(out.network.len(), 100));
            }
        }
    }

    #[test]
    fn accepted_first_pass_keeps_threshold() {
        let x = stream(300, 3);
        // find a threshold that is accepted on its own, then feed it back
        let first = adaptive_train_ca(&x, 20, 0.1, 100);
        if first.accepted {
            let again = adaptive_train_ca(&x, 20, first.threshold, 100);
            assert_eq!(again.passes, 1);
            assert_eq!(again.threshold, first.threshold);
        }
    }
}
