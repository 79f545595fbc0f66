use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// A prototype node.
#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub y: Vec<f64>,
    /// Kernel bandwidth, fixed when the node is created.
    pub sigma: f64,
    /// Number of instances this node has won (starts at 1).
    pub alpha: u64,
}

/// An undirected, aged edge. `a < b` always holds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub age: f64,
}

/// The learned graph: nodes indexed by creation order plus aged edges.
///
/// Nodes are never deleted, so a node id is its index in [`nodes`](Self::nodes).
#[derive(Debug, Clone, PartialEq)]
pub struct TopoNetwork {
    nodes: Vec<Node>,
    // adjacency[k] maps each neighbor of k to the age of the shared edge;
    // both endpoints hold a copy.
    adjacency: Vec<BTreeMap<usize, f64>>,
    sigma_sum: f64,
    threshold: f64,
    lambda: usize,
}

impl TopoNetwork {
    pub fn new(lambda: usize, threshold: f64) -> Self {
        Self { nodes: Vec::new(), adjacency: Vec::new(), sigma_sum: 0.0, threshold, lambda }
    }

    /// Similarity threshold `V` used by the vigilance test.
    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    /// Bandwidth estimation window length `λ`.
    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &Node {
        &self.nodes[id]
    }

    pub(crate) fn node_mut(&mut self, id: usize) -> &mut Node {
        &mut self.nodes[id]
    }

    pub fn positions(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.nodes.iter().map(|n| n.y.as_slice())
    }

    /// Arithmetic mean of all node bandwidths; `None` for an empty network.
    pub fn mean_bandwidth(&self) -> Option<f64> {
        (!self.nodes.is_empty()).then(|| self.sigma_sum / self.nodes.len() as f64)
    }

    /// Appends a node with winner count 1 and returns its id.
    pub fn add_node(&mut self, y: Vec<f64>, sigma: f64) -> usize {
        self.sigma_sum += sigma;
        self.nodes.push(Node { y, sigma, alpha: 1 });
        self.adjacency.push(BTreeMap::new());
        self.nodes.len() - 1
    }

    pub fn neighbors(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[k].keys().copied()
    }

    pub fn degree(&self, k: usize) -> usize {
        self.adjacency[k].len()
    }

    pub fn edge_age(&self, a: usize, b: usize) -> Option<f64> {
        self.adjacency.get(a)?.get(&b).copied()
    }

    /// Inserts the edge `{a, b}` with age 0, or resets its age if present.
    /// Self-loops are ignored.
    pub fn connect(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.adjacency[a].insert(b, 0.0);
        self.adjacency[b].insert(a, 0.0);
    }

    pub fn disconnect(&mut self, a: usize, b: usize) {
        self.adjacency[a].remove(&b);
        self.adjacency[b].remove(&a);
    }

    /// Adds `delta` to the age of every edge incident to `k`.
    pub(crate) fn age_edges_of(&mut self, k: usize, delta: f64) {
        let neighbors: Vec<usize> = self.adjacency[k].keys().copied().collect();
        for l in neighbors {
            *self.adjacency[k].get_mut(&l).expect("neighbor") += delta;
            *self.adjacency[l].get_mut(&k).expect("mirrored edge") += delta;
        }
    }

    /// All edges, ordered by `(a, b)`.
    pub fn edges(&self) -> Vec<Edge> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, adj)| adj.iter().filter(move |(&b, _)| a < b).map(move |(&b, &age)| Edge { a, b, age }))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeMap::len).sum::<usize>() / 2
    }
}

/// Cluster id of every node. Ids are assigned in order of each component's
/// lowest node id, starting at 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterLabeling {
    pub labels: Vec<usize>,
    pub count: usize,
}

impl ClusterLabeling {
    pub fn label(&self, node: usize) -> usize {
        self.labels[node]
    }
}

/// Connected components of the network graph. Isolated nodes form singleton
/// components.
pub fn connected_components(net: &TopoNetwork) -> ClusterLabeling {
    let n = net.len();
    let mut labels = alloc::vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if labels[start] != usize::MAX {
            continue;
        }
        labels[start] = count;
        stack.push(start);
        while let Some(k) = stack.pop() {
            for l in net.neighbors(k) {
                if labels[l] == usize::MAX {
                    labels[l] = count;
                    stack.push(l);
                }
            }
        }
        count += 1;
    }
    ClusterLabeling { labels, count }
}
