use avd_core::base::{color_even_order, default_w, phi_dist, phi_w, two_vertex_extension, varphi};
use avd_core::graph::odd_lengths;
use avd_core::{
    check_avd, check_gg, check_periodicity, check_proper, CanonicalEdge, CirculantGraph, Color,
    EdgeColoring,
};
use proptest::prelude::*;

fn color_set(c: &EdgeColoring, v: usize) -> Vec<Color> {
    let mut s = c.incident_colors(v);
    s.sort();
    s.dedup();
    s
}

fn even_order_inputs(m: usize) -> Vec<usize> {
    let lo = ((2 * m + 1) * m).max(2 * (m + 1));
    (lo..lo + 10).collect()
}

#[test]
fn varphi_suite() {
    for m in 0..=4 {
        for k in 2..=4 {
            let c = varphi(m, k, 0).unwrap();
            assert!(check_proper(&c).passed, "m = {m}, k = {k}");
            assert!(check_periodicity(&c, 2 * m + 2).unwrap().passed);
            assert_eq!(c.palette().len(), 2 * (m + 1));
            for v in 0..c.n() {
                assert_eq!(color_set(&c, v).len(), 2 * (m + 1));
                assert_eq!(c.missing_color(v), None);
            }
        }
    }
}

#[test]
fn phi_dist_suite() {
    for m in 0..=4 {
        for k in 2..=4 {
            let c = phi_dist(m, k, 0).unwrap();
            let n = c.n();
            assert!(check_proper(&c).passed, "m = {m}, k = {k}");
            assert!(check_periodicity(&c, 2 * m + 3).unwrap().passed);
            assert_eq!(c.palette().len(), 2 * m + 3);
            for i in 0..n {
                assert!(c.missing_color(i).is_some());
                for delta in 1..=(2 * m + 2).min(n / 2) {
                    let j = (i + delta) % n;
                    assert_ne!(
                        color_set(&c, i),
                        color_set(&c, j),
                        "m = {m}, k = {k}, {i} vs {j}"
                    );
                }
            }
        }
    }
}

#[test]
fn phi_dist_is_gg_distinguishing() {
    let c = phi_dist(1, 2, 0).unwrap();
    let g = c.graph().clone();
    let g_prime = CirculantGraph::full(10, 4).unwrap();
    assert!(check_gg(&g, &g_prime, &c).unwrap().passed);
    assert_eq!(check_gg(&g, &g, &c).unwrap().passed, check_avd(&c).passed);
}

#[test]
fn phi_dist_small_cycle() {
    let c = phi_dist(0, 2, 0).unwrap();
    assert_eq!(c.n(), 6);
    assert!(check_avd(&c).passed);
    let colors: Vec<Color> = (0..6).map(|u| c.color(u, 1)).collect();
    assert_eq!(colors[..3], colors[3..]);
}

#[test]
fn color_even_order_suite() {
    for m in 0..=4 {
        for n in even_order_inputs(m) {
            let out = color_even_order(m, n).unwrap();
            assert_eq!(out.coloring.n(), 2 * n);
            assert!(check_proper(&out.coloring).passed, "m = {m}, n = {n}");
            assert_eq!(
                out.coloring.palette().len(),
                2 * (m + 1),
                "m = {m}, n = {n}"
            );
        }
    }
}

#[test]
fn color_even_order_examples() {
    let out = color_even_order(1, 5).unwrap();
    assert_eq!((out.layout.q, out.layout.r), (2, 1));
    assert!(check_proper(&out.coloring).passed);
    let out = color_even_order(0, 4).unwrap();
    assert_eq!(out.coloring.n(), 8);
    assert_eq!(out.coloring.palette().len(), 2);
    let out = color_even_order(2, 10).unwrap();
    assert_eq!((out.layout.q, out.layout.r), (3, 1));
    assert!(check_proper(&out.coloring).passed);
    let out = color_even_order(2, 11).unwrap();
    assert!(!check_periodicity(&out.coloring, 2).unwrap().passed);
}

#[test]
fn extension_on_c8_and_twice_on_c16() {
    let c = varphi(1, 2, 0).unwrap();
    let once = two_vertex_extension(&c, CanonicalEdge { u: 0, d: 1 }).unwrap();
    assert_eq!(once.n(), 10);
    assert!(check_proper(&once).passed);
    assert_eq!(once.palette().len(), 4);

    let c = varphi(1, 4, 0).unwrap();
    let a = two_vertex_extension(&c, CanonicalEdge { u: 8, d: 1 }).unwrap();
    let b = two_vertex_extension(&a, CanonicalEdge { u: 0, d: 1 }).unwrap();
    assert_eq!(b.n(), 20);
    assert!(check_proper(&b).passed);
}

#[test]
fn extension_touches_only_nearby_edges() {
    for m in 1..=3 {
        let c = varphi(m, 4, 0).unwrap();
        let n = c.n();
        let cut = n / 2;
        let ext = two_vertex_extension(&c, CanonicalEdge { u: cut, d: 1 }).unwrap();
        let relabel = |v: usize| if v <= cut { v } else { v + 2 };
        for (e, col) in c.edges() {
            let (a, b) = e.endpoints(n);
            let near = |v: usize| {
                avd_core::arith::cyclic_distance(v, cut, n) <= 2 * m + 1
                    || avd_core::arith::cyclic_distance(v, cut + 1, n) <= 2 * m + 1
            };
            if near(a) && near(b) {
                continue;
            }
            assert_eq!(ext.color_between(relabel(a), relabel(b)), Some(col));
        }
    }
}

#[test]
fn phi_w_examples() {
    let out = phi_w(2, 1, &default_w(2)).unwrap();
    let c = &out.coloring;
    assert_eq!(c.n(), 12);
    assert_eq!(c.palette().len(), 5);
    assert!(check_avd(c).passed);
    for u in 0..12 {
        assert_eq!(c.color(u, 1), c.color(u + 3, 1));
        assert_eq!(c.color(u, 1).class(), 0);
        assert!(matches!(
            c.color(u, 2),
            Color::Left { class: 1, index: 0 } | Color::Right { class: 1, index: 0 }
        ));
    }
    for (radius, k, n) in [(3, 1, 20), (4, 2, 80)] {
        let out = phi_w(radius, k, &default_w(radius)).unwrap();
        assert_eq!(out.coloring.n(), n);
        assert_eq!(out.coloring.palette().len(), 2 * radius + 1);
        assert!(check_avd(&out.coloring).passed);
    }
}

#[test]
fn phi_w_restricts_to_phi_dist_on_odd_lengths() {
    for radius in 1..=10 {
        let out = phi_w(radius, 1, &default_w(radius)).unwrap();
        let c = &out.coloring;
        let m0 = radius.div_ceil(2) - 1;
        let odd = c.restrict(&odd_lengths(m0)).unwrap();
        let reference = phi_dist(m0, c.n() / (2 * m0 + 3), 0).unwrap();
        assert_eq!(odd, reference, "R = {radius}");
    }
}

#[test]
fn phi_w_distinguishes_by_odd_lengths() {
    for radius in 1..=12 {
        for k in 1..=2 {
            let out = phi_w(radius, k, &default_w(radius)).unwrap();
            let c = &out.coloring;
            let n = c.n();
            assert!(check_avd(c).passed, "R = {radius}, k = {k}");
            let per_class = |p: usize| {
                c.palette()
                    .colors()
                    .iter()
                    .filter(|x| x.class() == p)
                    .count()
            };
            assert_eq!(per_class(0), radius.div_ceil(2) * 2 + 1);
            for p in 1..=radius.ilog2() as usize {
                let size = (1..=radius)
                    .filter(|d| d.trailing_zeros() as usize == p)
                    .count();
                assert_eq!(per_class(p), 2 * size);
            }
            let q0 = |v: usize| {
                let mut s: Vec<Color> = c
                    .incident_colors(v)
                    .into_iter()
                    .filter(|x| x.class() == 0)
                    .collect();
                s.sort();
                s
            };
            for u in 0..n {
                for d in 1..=radius {
                    assert_ne!(q0(u), q0((u + d) % n), "R = {radius}, u = {u}, d = {d}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn parallel_rule(m in 0usize..=4, k in 2usize..=4, v0 in 0usize..50, v in 0usize..200) {
        let c = varphi(m, k, v0).unwrap();
        let n = c.n();
        let v = v % n;
        for p in 0..=m {
            prop_assert_eq!(c.color_between((v + n - p) % n, (v + 1 + p) % n), Some(c.color(v, 1)));
        }
        let c = phi_dist(m, k, v0).unwrap();
        let n = c.n();
        let v = v % n;
        for p in 0..=m {
            prop_assert_eq!(c.color_between((v + n - p) % n, (v + 1 + p) % n), Some(c.color(v, 1)));
        }
    }

    #[test]
    fn even_order_always_proper(m in 0usize..=4, extra in 0usize..40) {
        let lo = ((2 * m + 1) * m).max(2 * (m + 1));
        let out = color_even_order(m, lo + extra).unwrap();
        prop_assert!(check_proper(&out.coloring).passed);
        prop_assert_eq!(out.coloring.palette().len(), 2 * (m + 1));
    }
}
