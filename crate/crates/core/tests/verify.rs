use avd_core::{
    avd_color, check_avd, check_gg, check_palette, check_proper, CirculantGraph, Color,
    EdgeColoring, ViolationKind,
};
use proptest::prelude::*;

fn random_coloring(n: usize, lengths: &[usize], k: usize, seeds: &[usize]) -> EdgeColoring {
    let g = CirculantGraph::new(n, lengths.iter().copied()).unwrap();
    EdgeColoring::from_fn(g, |u, d| {
        Color::left(0, seeds[(u * 7 + d) % seeds.len()] % k)
    })
}

#[test]
fn gg_with_edgeless_target_is_properness() {
    let c = avd_color(12, 2).unwrap().coloring;
    let g = c.graph().clone();
    let empty = CirculantGraph::new(12, std::iter::empty::<usize>()).unwrap();
    let r = check_gg(&g, &empty, &c).unwrap();
    assert_eq!(r.passed, check_proper(&c).passed);
    assert!(r.passed);
}

#[test]
fn gg_with_host_as_target_is_avd() {
    let c = avd_color(17, 2).unwrap().coloring;
    let g = c.graph().clone();
    assert!(check_gg(&g, &g, &c).unwrap().passed);
    let bigger = CirculantGraph::full(17, 3).unwrap();
    assert!(check_gg(&bigger, &g, &c).is_err());
}

#[test]
fn palette_check() {
    let c = avd_color(24, 2).unwrap().coloring;
    assert!(check_palette(&c, 5).passed);
    let r = check_palette(&c, 6);
    assert!(!r.passed);
    assert_eq!(r.violations[0].kind, ViolationKind::PaletteSize);
    assert!(r.violations[0].reproduces_on(&c));
}

#[test]
fn single_recolor_is_caught() {
    let good = avd_color(24, 2).unwrap().coloring;
    let (target_u, target_d) = (5, 1);
    let stolen = good.color(target_u, 2);
    let bad = EdgeColoring::from_fn(good.graph().clone(), |u, d| {
        if (u, d) == (target_u, target_d) {
            stolen
        } else {
            good.color(u, d)
        }
    });
    let r = check_avd(&bad);
    assert!(!r.passed);
    assert!(r.violations.iter().all(|v| v.reproduces_on(&bad)));
    assert!(r.violations.iter().all(|v| !v.reproduces_on(&good)));
}

proptest! {
    #[test]
    fn gg_on_host_agrees_with_avd(
        n in 5usize..16,
        r in 1usize..=3,
        k in 2usize..6,
        seeds in prop::collection::vec(0usize..100, 1..30),
    ) {
        let lengths: Vec<usize> = (1..=r.min((n - 1) / 2)).collect();
        let c = random_coloring(n, &lengths, k, &seeds);
        let g = c.graph().clone();
        prop_assert_eq!(check_gg(&g, &g, &c).unwrap().passed, check_avd(&c).passed);
    }

    #[test]
    fn witnesses_reproduce(
        n in 5usize..16,
        k in 2usize..6,
        seeds in prop::collection::vec(0usize..100, 1..30),
    ) {
        let c = random_coloring(n, &[1, 2], k, &seeds);
        let r = check_avd(&c);
        prop_assert_eq!(r.passed, r.violations.is_empty());
        for v in &r.violations {
            prop_assert!(v.reproduces_on(&c), "{:?}", v);
        }
    }
}
