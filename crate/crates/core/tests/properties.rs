use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rveaca_core::cim::{
    cim, connected_components, learn_case_ii, learn_case_iii, train_ca, vigilance_classify, TopoNetwork,
    VigilanceCase,
};
use rveaca_core::indicators::{hv, igd_plus, HvMode};
use rveaca_core::moo::{dominates, nondominated_filter, Individual, Population};
use rveaca_core::rvea::{apd_select, das_dennis, environmental_selection, simplex_lattice, ApdContext};
use rveaca_core::variation::{polynomial_mutation, sbx_crossover, VariationParams};
use rveaca_core::{Bounds, IdealPoint};

fn vecs(m: usize, n: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Vec<f64>>> {
    prop::collection::vec(prop::collection::vec(0.0f64..1.0, m), n)
}

fn population(points: &[Vec<f64>]) -> Population {
    points.iter().enumerate().map(|(i, f)| Individual::evaluated(vec![i as f64], f.clone())).collect()
}

proptest! {
    #[test]
    fn dominance_is_a_strict_order(a in vecs(3, 3..4)) {
        let (x, y, z) = (&a[0], &a[1], &a[2]);
        prop_assert!(!dominates(x, x).unwrap());
        prop_assert!(!(dominates(x, y).unwrap() && dominates(y, x).unwrap()));
        if dominates(x, y).unwrap() && dominates(y, z).unwrap() {
            prop_assert!(dominates(x, z).unwrap());
        }
    }

    #[test]
    fn filter_agrees_with_pairwise_definition(points in vecs(2, 1..30)) {
        let kept = nondominated_filter(&population(&points)).unwrap();
        let expected: Vec<usize> = (0..points.len())
            .filter(|&i| points.iter().all(|q| {
                let le = q.iter().zip(&points[i]).all(|(a, b)| a <= b);
                let lt = q.iter().zip(&points[i]).any(|(a, b)| a < b);
                !(le && lt)
            }))
            .collect();
        let got: Vec<usize> = kept.iter().map(|s| s.x[0] as usize).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn cim_is_bounded_symmetric_and_identifying(
        x in prop::collection::vec(-5.0f64..5.0, 4),
        y in prop::collection::vec(-5.0f64..5.0, 4),
        sigma in 0.01f64..10.0,
    ) {
        let c = cim(&x, &y, sigma).unwrap();
        prop_assert!((0.0..=1.0).contains(&c));
        prop_assert_eq!(c, cim(&y, &x, sigma).unwrap());
        prop_assert_eq!(cim(&x, &x, sigma).unwrap(), 0.0);
    }

    #[test]
    fn vigilance_cases_partition(a in 0.0f64..1.0, b in 0.0f64..1.0, v in 0.0f64..1.0) {
        let (v1, v2) = if a <= b { (a, b) } else { (b, a) };
        let case = vigilance_classify(v1, v2, v).unwrap();
        let expected = if v < v1 {
            VigilanceCase::NewNode
        } else if v < v2 {
            VigilanceCase::FirstWinner
        } else {
            VigilanceCase::BothWinners
        };
        prop_assert_eq!(case, expected);
    }

    #[test]
    fn nodes_stay_in_the_instance_bounding_box(points in vecs(3, 5..120), lambda in 2usize..30, v in 0.01f64..0.9) {
        let mut net = TopoNetwork::new(lambda, v);
        train_ca(&points, &mut net);
        for y in net.positions() {
            for j in 0..3 {
                let lo = points.iter().map(|p| p[j]).fold(f64::INFINITY, f64::min);
                let hi = points.iter().map(|p| p[j]).fold(f64::NEG_INFINITY, f64::max);
                prop_assert!(lo - 1e-12 <= y[j] && y[j] <= hi + 1e-12);
            }
        }
        // every presented instance is counted exactly once by some node
        let presented = if points.len() > lambda { points.len() - lambda } else { points.len() };
        prop_assert_eq!(net.nodes().iter().map(|n| n.alpha).sum::<u64>(), presented as u64);
        // component labels agree with edges
        let c = connected_components(&net);
        for e in net.edges() {
            prop_assert_eq!(c.labels[e.a], c.labels[e.b]);
        }
    }

    #[test]
    fn learning_resets_winner_edge_and_counts(points in vecs(2, 4..6), third in any::<bool>()) {
        let mut net = TopoNetwork::new(10, 0.5);
        for p in &points[..3] {
            net.add_node(p.clone(), 0.3);
        }
        net.connect(0, 1);
        net.connect(0, 2);
        let before = net.node(0).alpha;
        if third { learn_case_iii(&mut net, 0, 1, &points[3]) } else { learn_case_ii(&mut net, 0, 1, &points[3]) }
        prop_assert_eq!(net.edge_age(0, 1), Some(0.0));
        prop_assert_eq!(net.node(0).alpha, before + 1);
        prop_assert_eq!(net.node(1).alpha, 1);
    }

    #[test]
    fn environmental_selection_size(points in vecs(3, 1..60), n in 1usize..40, t in 1usize..10) {
        let pop = population(&points);
        let r = das_dennis(3, 4).unwrap();
        let z = IdealPoint::from_objectives(pop.objectives()).unwrap();
        let ctx = ApdContext { t, t_max: 10, alpha: 2.0, m: 3 };
        let out = environmental_selection(&pop, &r, &ctx, &z, n).unwrap();
        prop_assert_eq!(out.len(), n.min(points.len()));
        let ids: Vec<usize> = out.iter().map(|s| s.x[0] as usize).collect();
        prop_assert!(ids.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn apd_selection_ignores_uniform_scaling(points in vecs(3, 1..40), scale in 0.1f64..100.0) {
        let r = das_dennis(3, 5).unwrap();
        let ctx = ApdContext { t: 3, t_max: 10, alpha: 2.0, m: 3 };
        let scaled: Vec<Vec<f64>> = points.iter().map(|p| p.iter().map(|v| v * scale).collect()).collect();
        prop_assert_eq!(apd_select(&points, &r, &ctx), apd_select(&scaled, &r, &ctx));
    }

    #[test]
    fn hv_never_decreases_when_adding_points(points in vecs(3, 1..15), extra in vecs(3, 1..2)) {
        let q = [1.5; 3];
        let base = hv(&points, &q, HvMode::Exact).unwrap().value;
        let mut more = points.clone();
        more.push(extra[0].clone());
        prop_assert!(hv(&more, &q, HvMode::Exact).unwrap().value >= base - 1e-12);
    }

    #[test]
    fn igd_plus_prefers_dominating_sets(reference in vecs(2, 1..20), worse in vecs(2, 1..20), shift in 0.0f64..0.5) {
        let better: Vec<Vec<f64>> = worse.iter().map(|p| p.iter().map(|v| v - shift).collect()).collect();
        prop_assert!(igd_plus(&better, &reference).unwrap().value <= igd_plus(&worse, &reference).unwrap().value + 1e-12);
    }

    #[test]
    fn variation_stays_in_bounds(p1 in prop::collection::vec(0.0f64..=1.0, 6), p2 in prop::collection::vec(0.0f64..=1.0, 6), seed in any::<u64>()) {
        let b = Bounds::unit(6);
        let params = VariationParams { p_m: 0.5, ..VariationParams::for_dimension(6) };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let child = sbx_crossover(&p1, &p2, &b, &params, &mut rng);
        prop_assert!(b.contains(&child));
        prop_assert!(b.contains(&polynomial_mutation(&child, &b, &params, &mut rng)));
    }
}

#[test]
fn simplex_lattice_counts_and_sums() {
    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    for (m, h) in [(2, 1), (2, 7), (3, 12), (4, 5), (5, 6), (10, 3)] {
        let w = simplex_lattice(m, h);
        assert_eq!(w.len() as u64, binomial((h + m - 1) as u64, (m - 1) as u64));
        for v in &w {
            assert!((v.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
        assert_eq!(das_dennis(m, h).unwrap().len(), w.len());
    }
}

#[test]
fn exact_2d_hv_matches_rasterization() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    use rand::Rng;
    let q = [1.5, 1.5];
    let delta = 1e-3;
    let cells = (1.5 / delta) as usize;
    for _ in 0..5 {
        let pts: Vec<[f64; 2]> = (0..20).map(|_| [rng.gen::<f64>() * 1.6, rng.gen::<f64>() * 1.6]).collect();
        let exact = hv(&pts, &q, HvMode::Exact).unwrap().value;
        // per column, the dominated cells start above the lowest covering point
        let mut covered = 0usize;
        for i in 0..cells {
            let cx = (i as f64 + 0.5) * delta;
            let floor = pts.iter().filter(|p| p[0] <= cx && p[1] < 1.5).map(|p| p[1]).fold(f64::INFINITY, f64::min);
            if floor.is_finite() {
                covered += (0..cells).filter(|&j| (j as f64 + 0.5) * delta >= floor).count();
            }
        }
        let raster = covered as f64 * delta * delta;
        assert!((raster - exact).abs() <= 2e-3, "exact {exact} raster {raster}");
    }
}
