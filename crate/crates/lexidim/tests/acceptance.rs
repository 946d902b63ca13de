//! Acceptance suite: one test per verification criterion, each exact.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion summary lines.

use rayon::prelude::*;

use lexidim::enumerate::{labeled_count, labeled_graph, partitions};
use lexidim::{
    closed_form, dimension, is_resolving, lex_dimension, projection, twin_partition,
    ClosedFormQuery, Graph, LexOptions, RepKind, SearchCaps, VertexSet,
};

fn caps() -> SearchCaps {
    SearchCaps::default()
}

fn beta(g: &Graph) -> usize {
    dimension(g, RepKind::Metric, false, &caps()).expect("metric solve").value
}

fn beta2(g: &Graph) -> usize {
    dimension(g, RepKind::Adjacency, false, &caps())
        .expect("adjacency solve")
        .value
}

/// Every connected labeled base graph of order 2..=4 paired with every
/// labeled inner graph of order 1..=4 (product order <= 16).
fn theorem_pairs() -> Vec<(Graph, Graph)> {
    let mut bases = Vec::new();
    for n in 2..=4 {
        for mask in 0..labeled_count(n) {
            let g = labeled_graph(n, mask);
            if g.is_connected() {
                bases.push(g);
            }
        }
    }
    let mut inners = Vec::new();
    for m in 1..=4 {
        for mask in 0..labeled_count(m) {
            inners.push(labeled_graph(m, mask));
        }
    }
    let mut pairs = Vec::new();
    for g in &bases {
        for h in &inners {
            pairs.push((g.clone(), h.clone()));
        }
    }
    assert_eq!(pairs.len(), 43 * 75);
    pairs
}

#[test]
fn criterion_01_path_and_cycle_adjacency_dimension() {
    for n in 4..=12 {
        let expected = (2 * n + 2) / 5;
        assert_eq!(
            beta2(&Graph::path(n).unwrap()),
            expected,
            "adjacency dimension of the path on {n} vertices"
        );
        assert_eq!(
            beta2(&Graph::cycle(n).unwrap()),
            expected,
            "adjacency dimension of the cycle on {n} vertices"
        );
        assert_eq!(closed_form(&ClosedFormQuery::PathAdjacencyDim { n }), Ok(expected));
        assert_eq!(closed_form(&ClosedFormQuery::CycleAdjacencyDim { n }), Ok(expected));
    }
    println!("criterion 1 (path/cycle adjacency dimension = floor((2n+2)/5), n = 4..=12): PASS");
}

#[test]
fn criterion_02_complete_multipartite_dimensions() {
    let mut checked = 0;
    for m in 2..=8 {
        for parts in partitions(m).into_iter().filter(|p| p.len() >= 2) {
            let g = Graph::complete_multipartite(&parts).unwrap();
            let r = parts.iter().filter(|&&p| p >= 2).count();
            let t = parts.len();
            let expected = if r == t { m - r } else { m - r - 1 };
            assert_eq!(beta(&g), expected, "metric dimension of K_{parts:?}");
            assert_eq!(beta2(&g), expected, "adjacency dimension of K_{parts:?}");
            assert_eq!(
                closed_form(&ClosedFormQuery::MultipartiteDim { parts: parts.clone() }),
                Ok(expected)
            );
            checked += 1;
        }
    }
    println!("criterion 2 (complete multipartite dimensions, order <= 8): PASS — {checked} graphs");
}

#[test]
fn criterion_03_adjacency_dimension_is_complement_invariant() {
    for n in [5usize, 6] {
        let violations: usize = (0..labeled_count(n))
            .into_par_iter()
            .map(|mask| {
                let g = labeled_graph(n, mask);
                usize::from(beta2(&g) != beta2(&g.complement()))
            })
            .sum();
        assert_eq!(violations, 0, "complement invariance fails at order {n}");
    }
    println!(
        "criterion 3 (adjacency dimension equals that of the complement, all {} + {} labeled graphs): PASS",
        labeled_count(5),
        labeled_count(6)
    );
}

#[test]
fn criterion_04_extremal_characterizations() {
    fn is_labeled_path(g: &Graph) -> bool {
        g.is_connected()
            && g.edge_count() + 1 == g.order()
            && (0..g.order()).all(|v| g.degree(v) <= 2)
    }
    let mut total = 0u64;
    for n in 2..=6 {
        let violations: usize = (0..labeled_count(n))
            .into_par_iter()
            .map(|mask| {
                let g = labeled_graph(n, mask);
                let b2 = beta2(&g);
                let unit_expected =
                    n <= 3 && (is_labeled_path(&g) || is_labeled_path(&g.complement()));
                let extreme_expected =
                    g.edge_count() == n * (n - 1) / 2 || g.edge_count() == 0;
                usize::from((b2 == 1) != unit_expected || (b2 == n - 1) != extreme_expected)
            })
            .sum();
        assert_eq!(violations, 0, "characterization fails at order {n}");
        total += labeled_count(n);
    }
    println!("criterion 4 (graphs with adjacency dimension 1 and n-1, {total} labeled graphs of order 2..=6): PASS");
}

#[test]
fn criterion_05_wheel_and_fan_dimension() {
    for n in [4usize, 5, 7, 8, 9, 10, 11, 12] {
        let expected = (2 * n + 2) / 5;
        assert_eq!(beta(&Graph::wheel(n).unwrap()), expected, "wheel on {n}+1 vertices");
        assert_eq!(beta(&Graph::fan(n).unwrap()), expected, "fan on {n}+1 vertices");
        assert_eq!(closed_form(&ClosedFormQuery::WheelDim { n }), Ok(expected));
        assert_eq!(closed_form(&ClosedFormQuery::FanDim { n }), Ok(expected));
    }
    println!("criterion 5 (wheel/fan metric dimension, n in {{4,5,7..12}}): PASS");
}

#[test]
fn criterion_06_product_formula_matches_brute_force() {
    let pairs = theorem_pairs();
    let count = pairs.len();
    let failures: Vec<String> = pairs
        .into_par_iter()
        .filter_map(|(g, h)| {
            let report = lex_dimension(&g, &h, &LexOptions { verify: false, caps: caps() })
                .expect("dispatch succeeds on every pair");
            let product = g.lex_product(&h);
            let oracle = beta(&product);
            (report.formula_value != oracle).then(|| {
                format!(
                    "G={:?} H={:?}: formula {} vs exact {}",
                    g, h, report.formula_value, oracle
                )
            })
        })
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    println!("criterion 6 (product formula equals brute force on {count} pairs): PASS");
}

#[test]
fn criterion_07_path_cycle_product_spot_checks() {
    let wide = SearchCaps { search_order: 20, enumeration_order: 12 };
    let opts = LexOptions { verify: true, caps: wide };

    let r = lex_dimension(&Graph::cycle(5).unwrap(), &Graph::path(2).unwrap(), &opts).unwrap();
    assert_eq!(r.formula_value, 5);
    assert_eq!(r.oracle_value, Some(5));

    let r = lex_dimension(&Graph::path(4).unwrap(), &Graph::path(3).unwrap(), &opts).unwrap();
    assert_eq!(r.formula_value, 4);
    assert_eq!(r.oracle_value, Some(4));

    let r = lex_dimension(
        &Graph::path(4).unwrap(),
        &Graph::path(5).unwrap().complement(),
        &opts,
    )
    .unwrap();
    assert_eq!(r.formula_value, 8);
    assert_eq!(r.oracle_value, Some(8));

    println!("criterion 7 (C5[P2]=5, P4[P3]=4, P4[comp(P5)]=8, all oracle-confirmed): PASS");
}

#[test]
fn criterion_08_multipartite_product_spot_checks() {
    let opts = LexOptions { verify: true, caps: caps() };

    let r = lex_dimension(
        &Graph::complete(2).unwrap(),
        &Graph::complete_multipartite(&[2, 1]).unwrap(),
        &opts,
    )
    .unwrap();
    assert_eq!(r.formula_value, 3);
    assert_eq!(r.oracle_value, Some(3));

    let r = lex_dimension(
        &Graph::complete(3).unwrap(),
        &Graph::complete_multipartite(&[2, 2]).unwrap(),
        &opts,
    )
    .unwrap();
    assert_eq!(r.formula_value, 6);
    assert_eq!(r.oracle_value, Some(6));

    println!("criterion 8 (K2[K(2,1)]=3, K3[K(2,2)]=6, oracle-confirmed): PASS");
}

#[test]
fn criterion_09_constructed_witnesses_are_sound() {
    let pairs = theorem_pairs();
    let count = pairs.len();
    let failures: Vec<String> = pairs
        .into_par_iter()
        .filter_map(|(g, h)| {
            let report = lex_dimension(&g, &h, &LexOptions { verify: false, caps: caps() })
                .expect("dispatch succeeds on every pair");
            let product = g.lex_product(&h);
            let resolving = is_resolving(&product, &report.witness, RepKind::Metric)
                .expect("product of a connected base is connected");
            (!resolving || report.witness.len() != report.formula_value).then(|| {
                format!(
                    "G={:?} H={:?}: witness {} size {} formula {} resolving {}",
                    g,
                    h,
                    report.witness,
                    report.witness.len(),
                    report.formula_value,
                    resolving
                )
            })
        })
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    println!("criterion 9 (constructed witnesses resolve with the formula cardinality, {count} pairs): PASS");
}

#[test]
fn criterion_10_row_projections_and_lower_bound() {
    // Full basis enumeration on 16-vertex products needs a wider
    // enumeration cap than the default.
    let wide = SearchCaps { search_order: 24, enumeration_order: 16 };
    let pairs = theorem_pairs();
    let count = pairs.len();
    let failures: Vec<String> = pairs
        .into_par_iter()
        .filter_map(|(g, h)| {
            let n = g.order();
            let m = h.order();
            let product = g.lex_product(&h);
            let result = dimension(&product, RepKind::Metric, true, &wide)
                .expect("products fit the widened cap");
            // The empty set distinguishes the single vertex of an order-1
            // graph, so its adjacency dimension counts as 0 here.
            let b2 = if m == 1 { 0 } else { beta2(&h) };
            if result.value < n * b2 {
                return Some(format!(
                    "G={g:?} H={h:?}: exact {} below n*beta2 = {}",
                    result.value,
                    n * b2
                ));
            }
            for basis in result.all_bases.expect("enumerating search returns all bases") {
                for i in 0..n {
                    let proj = projection(&basis, i, m);
                    let ok = is_resolving(&h, &proj, RepKind::Adjacency).expect("adjacency kind");
                    if !ok {
                        return Some(format!(
                            "G={g:?} H={h:?}: projection {proj} of basis {basis} row {i} fails"
                        ));
                    }
                }
            }
            None
        })
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    println!("criterion 10 (every optimal-set row projection resolves H; exact value >= n*beta2(H); {count} pairs): PASS");
}

#[test]
fn criterion_11_structural_suites() {
    // Twin swap: replacing one twin by the other inside a resolving set
    // keeps it resolving. Exhaustive over connected graphs of order <= 5
    // and all landmark subsets.
    for n in 2..=5 {
        let violations: usize = (0..labeled_count(n))
            .into_par_iter()
            .map(|mask| {
                let g = labeled_graph(n, mask);
                if !g.is_connected() {
                    return 0;
                }
                let tp = twin_partition(&g);
                let mut twin_pairs = Vec::new();
                for class in tp.classes() {
                    let m = class.members();
                    for (i, &u) in m.iter().enumerate() {
                        for &v in &m[i + 1..] {
                            twin_pairs.push((u, v));
                        }
                    }
                }
                let mut bad = 0;
                for wmask in 1u64..(1 << n) {
                    let w = VertexSet::from_sorted(
                        (0..n).filter(|&v| wmask >> v & 1 == 1).collect(),
                    );
                    if !is_resolving(&g, &w, RepKind::Metric).unwrap() {
                        continue;
                    }
                    for &(u, v) in &twin_pairs {
                        for (inside, outside) in [(u, v), (v, u)] {
                            if w.contains(inside) && !w.contains(outside) {
                                let swapped = VertexSet::from_unsorted(
                                    w.iter().filter(|&x| x != inside).chain([outside]),
                                );
                                if !is_resolving(&g, &swapped, RepKind::Metric).unwrap() {
                                    bad += 1;
                                }
                            }
                        }
                    }
                }
                bad
            })
            .sum();
        assert_eq!(violations, 0, "twin swap fails at order {n}");
    }
    println!("criterion 11a (twin swap preserves resolving, connected order <= 5): PASS");

    // A universal vertex is avoidable: some optimal metric basis excludes it.
    for n in 2..=5 {
        let violations: usize = (0..labeled_count(n))
            .into_par_iter()
            .map(|mask| {
                let g = labeled_graph(n, mask);
                if !g.is_connected() {
                    return 0;
                }
                let universal: Vec<usize> =
                    (0..n).filter(|&v| g.degree(v) == n - 1).collect();
                if universal.is_empty() {
                    return 0;
                }
                let bases = dimension(&g, RepKind::Metric, true, &caps())
                    .unwrap()
                    .all_bases
                    .unwrap();
                universal
                    .iter()
                    .filter(|&&u| !bases.iter().any(|b| !b.contains(u)))
                    .count()
            })
            .sum();
        assert_eq!(violations, 0, "universal-vertex avoidance fails at order {n}");
    }
    println!("criterion 11b (some optimal basis avoids each universal vertex, connected order <= 5): PASS");

    // Twin-class counting identity on every labeled graph of order <= 5.
    for n in 1..=5 {
        for mask in 0..labeled_count(n) {
            let g = labeled_graph(n, mask);
            let tp = twin_partition(&g);
            assert_eq!(
                tp.iota(),
                n - tp.a() - tp.b() + tp.iota_n() + tp.iota_k(),
                "counting identity fails on {g:?}"
            );
        }
    }
    println!("criterion 11c (twin counting identity, all labeled graphs of order <= 5): PASS");

    // Closed-form product distance against BFS on every theorem pair.
    let failures: Vec<String> = theorem_pairs()
        .into_par_iter()
        .filter_map(|(g, h)| {
            let n = g.order();
            let m = h.order();
            let product = g.lex_product(&h);
            let dp = product.distances();
            for i in 0..n {
                for j in 0..m {
                    for r in 0..n {
                        for s in 0..m {
                            let expected = if i != r {
                                g.distances().get(i, r)
                            } else if j == s {
                                0
                            } else if h.is_adjacent(j, s) {
                                1
                            } else {
                                2
                            };
                            if dp.get(i * m + j, r * m + s) != expected {
                                return Some(format!(
                                    "G={g:?} H={h:?}: d(({i},{j}),({r},{s})) = {} expected {expected}",
                                    dp.get(i * m + j, r * m + s)
                                ));
                            }
                        }
                    }
                }
            }
            None
        })
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    println!("criterion 11d (product distance closed form equals BFS, pairs <= 4x4): PASS");
}
