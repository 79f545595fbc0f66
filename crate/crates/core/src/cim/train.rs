
use super::metric::{cim_unchecked, estimate_bandwidth};
use super::network::TopoNetwork;
use crate::error::{Error, Result};

/// Outcome of the vigilance test for an instance against its two winners.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VigilanceCase {
    /// `V < V_k1`: the instance is novel and becomes a new node.
    NewNode,
    /// `V_k1 ≤ V < V_k2`: only the first winner resonates.
    FirstWinner,
    /// `V_k2 ≤ V`: both winners resonate.
    BothWinners,
}

/// Classifies the CIM values of the first and second winner against `V`.
pub fn vigilance_classify(v_k1: f64, v_k2: f64, threshold: f64) -> Result<VigilanceCase> {
    if v_k1 > v_k2 {
        return Err(Error::UnorderedSimilarities { first: v_k1, second: v_k2 });
    }
    Ok(if threshold < v_k1 {
        VigilanceCase::NewNode
    } else if threshold < v_k2 {
        VigilanceCase::FirstWinner
    } else {
        VigilanceCase::BothWinners
    })
}

struct Winners {
    k1: usize,
    v1: f64,
    k2: usize,
    v2: f64,
}

// Strict comparisons keep the lowest id on ties.
fn winners(x: &[f64], net: &TopoNetwork, sigma: f64) -> Winners {
    let mut w = Winners { k1: usize::MAX, v1: f64::INFINITY, k2: usize::MAX, v2: f64::INFINITY };
    for (k, y) in net.positions().enumerate() {
        let v = cim_unchecked(x, y, sigma);
        if v < w.v1 {
            w.k2 = w.k1;
            w.v2 = w.v1;
            w.k1 = k;
            w.v1 = v;
        } else if v < w.v2 {
            w.k2 = k;
            w.v2 = v;
        }
    }
    w
}

/// First and second winner nodes of `x` under the CIM with the network's
/// mean bandwidth. Ties go to the lowest node id.
pub fn select_winners(x: &[f64], net: &TopoNetwork) -> Result<(usize, usize)> {
    if net.len() < 2 {
        return Err(Error::InsufficientNodes(net.len()));
    }
    Error::check_len(net.node(0).y.len(), x.len())?;
    let w = winners(x, net, net.mean_bandwidth().expect("nonempty"));
    Ok((w.k1, w.k2))
}

fn update_first_winner(net: &mut TopoNetwork, k1: usize, x: &[f64]) {
    let degree = net.degree(k1);
    if degree > 0 {
        net.age_edges_of(k1, 1.0 / degree as f64);
    }
    let node = net.node_mut(k1);
    node.alpha += 1;
    let rate = 1.0 / node.alpha as f64;
    for (y, xi) in node.y.iter_mut().zip(x) {
        *y += rate * (xi - *y);
    }
}

/// Learning step when only the first winner resonates: age the winner's
/// edges, increment its count, move it toward `x` by `1/α`, and (re)connect
/// it to the second winner with age 0.
pub fn learn_case_ii(net: &mut TopoNetwork, k1: usize, k2: usize, x: &[f64]) {
    update_first_winner(net, k1, x);
    net.connect(k1, k2);
}

/// Learning step when both winners resonate. On top of the first-winner
/// update, the second winner moves toward `x` by `1/(10·α_k2)`, and the
/// first winner's least similar neighbor loses its edge if that edge's age
/// exceeds the winner's degree. Finally `{k1, k2}` is (re)connected.
pub fn learn_case_iii(net: &mut TopoNetwork, k1: usize, k2: usize, x: &[f64]) {
    update_first_winner(net, k1, x);

    let second = net.node_mut(k2);
    let rate = 1.0 / (10.0 * second.alpha as f64);
    for (y, xi) in second.y.iter_mut().zip(x) {
        *y += rate * (xi - *y);
    }

    let sigma = net.mean_bandwidth().expect("nonempty");
    let y1 = &net.node(k1).y;
    let mut worst: Option<(usize, f64)> = None;
    for l in net.neighbors(k1) {
        let v = cim_unchecked(&net.node(l).y, y1, sigma);
        if worst.is_none_or(|(_, best)| v > best) {
            worst = Some((l, v));
        }
    }
    if let Some((l, _)) = worst {
        let age = net.edge_age(k1, l).expect("neighbor edge");
        if age > net.degree(k1) as f64 {
            net.disconnect(k1, l);
        }
    }
    net.connect(k1, k2);
}

fn present(net: &mut TopoNetwork, x: &[f64], sigma: f64) {
    match net.len() {
        0 => {
            net.add_node(x.to_vec(), sigma);
        }
        1 => {
            // Winners are undefined until two nodes exist; an exact repeat
            // of the only node is absorbed instead of duplicated.
            if net.node(0).y == x {
                net.node_mut(0).alpha += 1;
            } else {
                net.add_node(x.to_vec(), sigma);
            }
        }
        _ => {
            let w = winners(x, net, net.mean_bandwidth().expect("nonempty"));
            let case = vigilance_classify(w.v1, w.v2, net.threshold()).expect("winners are ordered");
            match case {
                VigilanceCase::NewNode => {
                    net.add_node(x.to_vec(), sigma);
                }
                VigilanceCase::FirstWinner => learn_case_ii(net, w.k1, w.k2, x),
                VigilanceCase::BothWinners => learn_case_iii(net, w.k1, w.k2, x),
            }
        }
    }
}

/// One pass of CA learning over `instances` in the given order.
///
/// At every instance index `n` (1-based) that is a multiple of `λ` the
/// bandwidth assigned to new nodes is re-estimated from the trailing `λ`
/// instances. Starting from an empty network with more than `λ` instances,
/// the first `λ` instances only seed the bandwidth and instance `λ + 1`
/// becomes the first node. With `λ` or fewer instances the bandwidth is
/// estimated from all of them and every instance is presented.
pub fn train_ca<T: AsRef<[f64]>>(instances: &[T], net: &mut TopoNetwork) {
    let lambda = net.lambda().max(1);
    let total = instances.len();
    if total == 0 {
        return;
    }
    let bootstrap = net.is_empty() && total > lambda;
    let mut sigma = if bootstrap { 0.0 } else { estimate_bandwidth(&instances[..total.min(lambda)]) };
    for (i, x) in instances.iter().enumerate() {
        let n = i + 1;
        if n % lambda == 0 && n >= lambda {
            sigma = estimate_bandwidth(&instances[n - lambda..n]);
        }
        if bootstrap && n <= lambda {
            continue;
        }
        present(net, x.as_ref(), sigma);
    }
}
