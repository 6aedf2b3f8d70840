//! Construction-blind checks on colored circulant graphs.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::color::{Color, Palette};
use crate::coloring::EdgeColoring;
use crate::graph::CirculantGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("period {period} does not divide n = {n}")]
    PeriodNotDivisor { period: usize, n: usize },
    #[error("graphs have different vertex counts ({0} and {1})")]
    VertexMismatch(usize, usize),
    #[error("coloring is not defined on the given graph")]
    HostMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// Two edges at one vertex share a color.
    Improper,
    /// Two vertices that must be distinguished see the same color set.
    NotDistinguished,
    MissingEdge,
    UnexpectedEdge,
    DuplicateEdge,
    Periodicity,
    PaletteSize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub color: Option<String>,
}

impl Violation {
    /// Re-checks this witness against `c` without consulting anything else.
    pub fn reproduces_on(&self, c: &EdgeColoring) -> bool {
        let n = c.n();
        match self.kind {
            ViolationKind::Improper => {
                let [v] = self.vertices[..] else { return false };
                let [(a1, b1), (a2, b2)] = self.edges[..] else {
                    return false;
                };
                let (Some(c1), Some(c2)) = (c.color_between(a1, b1), c.color_between(a2, b2))
                else {
                    return false;
                };
                (a1 == v || b1 == v) && (a2 == v || b2 == v) && (a1, b1) != (a2, b2) && c1 == c2
            }
            ViolationKind::NotDistinguished => {
                let [u, v] = self.vertices[..] else {
                    return false;
                };
                u != v && color_set(c, u) == color_set(c, v)
            }
            ViolationKind::Periodicity => {
                let [(a1, b1), (a2, b2)] = self.edges[..] else {
                    return false;
                };
                c.color_between(a1, b1) != c.color_between(a2, b2)
            }
            ViolationKind::PaletteSize => self
                .vertices
                .first()
                .is_some_and(|&k| c.palette().len() != k),
            ViolationKind::MissingEdge => self
                .edges
                .iter()
                .all(|&(a, b)| a < n && b < n && c.color_between(a, b).is_none()),
            ViolationKind::UnexpectedEdge | ViolationKind::DuplicateEdge => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub palette_size: usize,
    pub checked_properties: Vec<String>,
}

impl VerificationReport {
    fn new(property: &str, palette_size: usize, violations: Vec<Violation>) -> Self {
        Self {
            passed: violations.is_empty(),
            violations,
            palette_size,
            checked_properties: vec![property.to_string()],
        }
    }

    /// Combines two reports; passes only if both do.
    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.passed &= other.passed;
        self.violations.extend(other.violations);
        self.palette_size = self.palette_size.max(other.palette_size);
        for p in other.checked_properties {
            if !self.checked_properties.contains(&p) {
                self.checked_properties.push(p);
            }
        }
        self
    }
}

fn color_set(c: &EdgeColoring, v: usize) -> Vec<Color> {
    let mut s = c.incident_colors(v);
    s.sort();
    s.dedup();
    s
}

/// Incident color sets as bitsets over palette ids.
struct ColorSets {
    words: usize,
    bits: Vec<u64>,
}

impl ColorSets {
    fn new(c: &EdgeColoring, palette: &Palette) -> Self {
        let words = palette.len().div_ceil(64).max(1);
        let mut bits = vec![0u64; c.n() * words];
        for (e, col) in c.edges() {
            let (a, b) = e.endpoints(c.n());
            let id = palette.id_of(col).expect("palette of c");
            for v in [a, b] {
                bits[v * words + id / 64] |= 1 << (id % 64);
            }
        }
        Self { words, bits }
    }

    fn get(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }
}

/// No two edges at a vertex share a color.
pub fn check_proper(c: &EdgeColoring) -> VerificationReport {
    let palette = c.palette();
    let mut violations = Vec::new();
    for v in 0..c.n() {
        let mut first: Vec<Option<usize>> = vec![None; palette.len()];
        for (w, _, col) in c.incident(v) {
            let id = palette.id_of(col).expect("palette of c");
            match first[id] {
                Some(w0) => violations.push(Violation {
                    kind: ViolationKind::Improper,
                    vertices: vec![v],
                    edges: vec![(v.min(w0), v.max(w0)), (v.min(w), v.max(w))],
                    color: Some(col.to_string()),
                }),
                None => first[id] = Some(w),
            }
        }
    }
    VerificationReport::new("proper", palette.len(), violations)
}

fn distinguishing(
    c: &EdgeColoring,
    pairs: impl Iterator<Item = (usize, usize)>,
    property: &str,
) -> VerificationReport {
    let palette = c.palette();
    let sets = ColorSets::new(c, &palette);
    let violations = pairs
        .filter(|&(a, b)| sets.get(a) == sets.get(b))
        .map(|(a, b)| Violation {
            kind: ViolationKind::NotDistinguished,
            vertices: vec![a, b],
            edges: vec![(a.min(b), a.max(b))],
            color: None,
        })
        .collect();
    check_proper(c).merge(VerificationReport::new(property, palette.len(), violations))
}

/// Proper, and adjacent vertices see different color sets.
pub fn check_avd(c: &EdgeColoring) -> VerificationReport {
    let n = c.n();
    let pairs: Vec<(usize, usize)> = c.graph().edges().map(|e| e.endpoints(n)).collect();
    distinguishing(c, pairs.into_iter(), "avd")
}

/// Proper on `g`, and every pair adjacent in `g_prime` sees different
/// `g`-incident color sets.
pub fn check_gg(
    g: &CirculantGraph,
    g_prime: &CirculantGraph,
    c: &EdgeColoring,
) -> Result<VerificationReport, VerifyError> {
    if g.n() != g_prime.n() {
        return Err(VerifyError::VertexMismatch(g.n(), g_prime.n()));
    }
    if c.graph() != g {
        return Err(VerifyError::HostMismatch);
    }
    let n = g.n();
    let pairs: Vec<(usize, usize)> = g_prime.edges().map(|e| e.endpoints(n)).collect();
    Ok(distinguishing(c, pairs.into_iter(), "gg"))
}

/// The edge set is exactly that of `C_n([1, R])`.
pub fn check_circulant_shape(
    edges: &[(usize, usize)],
    n: usize,
    radius: usize,
) -> VerificationReport {
    let mut violations = Vec::new();
    let mut seen = HashSet::with_capacity(edges.len());
    for &(a, b) in edges {
        let key = (a.min(b), a.max(b));
        let diff = key.1 - key.0;
        let d = diff.min(n.saturating_sub(diff));
        if key.1 >= n || d == 0 || d > radius {
            violations.push(Violation {
                kind: ViolationKind::UnexpectedEdge,
                vertices: vec![],
                edges: vec![key],
                color: None,
            });
        } else if !seen.insert(key) {
            violations.push(Violation {
                kind: ViolationKind::DuplicateEdge,
                vertices: vec![],
                edges: vec![key],
                color: None,
            });
        }
    }
    for u in 0..n {
        for d in 1..=radius.min(n / 2) {
            let w = (u + d) % n;
            let key = (u.min(w), u.max(w));
            if !seen.contains(&key) {
                violations.push(Violation {
                    kind: ViolationKind::MissingEdge,
                    vertices: vec![],
                    edges: vec![key],
                    color: None,
                });
            }
        }
    }
    violations.dedup();
    VerificationReport::new("circulant-shape", 0, violations)
}

/// `color(u + period, d) = color(u, d)` for every edge.
pub fn check_periodicity(
    c: &EdgeColoring,
    period: usize,
) -> Result<VerificationReport, VerifyError> {
    let n = c.n();
    if period == 0 || !n.is_multiple_of(period) {
        return Err(VerifyError::PeriodNotDivisor { period, n });
    }
    let violations = c
        .edges()
        .filter(|&(e, col)| c.color(e.u + period, e.d) != col)
        .map(|(e, _)| {
            let (a, b) = e.endpoints(n);
            let (a2, b2) = ((a + period) % n, (b + period) % n);
            Violation {
                kind: ViolationKind::Periodicity,
                vertices: vec![],
                edges: vec![(a.min(b), a.max(b)), (a2.min(b2), a2.max(b2))],
                color: None,
            }
        })
        .collect();
    Ok(VerificationReport::new(
        "periodicity",
        c.palette().len(),
        violations,
    ))
}

/// Exactly `expected` distinct colors are used.
pub fn check_palette(c: &EdgeColoring, expected: usize) -> VerificationReport {
    let size = c.palette().len();
    let violations = if size == expected {
        Vec::new()
    } else {
        vec![Violation {
            kind: ViolationKind::PaletteSize,
            vertices: vec![expected],
            edges: vec![],
            color: Some(format!("{size} colors used")),
        }]
    };
    VerificationReport::new("palette", size, violations)
}
