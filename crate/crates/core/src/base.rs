//! The periodic colorings of `C_n(U_m)`, the two-vertex extension and the
//! layered coloring `Φ_W` of `C_n([1, R])`.

use thiserror::Error;

use crate::arith::{cyclic_distance, floor_log2};
use crate::color::Color;
use crate::coloring::{ColoringError, EdgeColoring};
use crate::graph::{odd_lengths, CanonicalEdge, CirculantGraph, GraphError, LengthPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaseError {
    #[error("k must be at least 2, got {0}")]
    PeriodCountTooSmall(usize),
    #[error("host graph is not C_N(U_m)")]
    NotOddHost,
    #[error("cut edge {0:?} does not have length 1")]
    CutNotConsecutive(CanonicalEdge),
    #[error("extension at cut {cut} is not proper at vertex {vertex}")]
    ExtensionConflict { cut: usize, vertex: usize },
    #[error("vertices x and y have no common unique missing color at cut {0}")]
    NoClosingColor(usize),
    #[error("no decomposition n = q(m+1) + r for m = {m}, n = {n}")]
    NoDecomposition { m: usize, n: usize },
    #[error("W^{class} must hold {expected} vertices with distinct residues mod {expected}")]
    InvalidAnchors { class: usize, expected: usize },
    #[error("W has {got} classes, expected {expected}")]
    AnchorClassCount { got: usize, expected: usize },
    #[error("an extension in class {class} lies within {limit} of an anchor")]
    AnchorTooClose { class: usize, limit: usize },
    #[error("k must be positive")]
    ZeroPeriods,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Color of consecutive-edge offset `t` in the period-`2m+2` pattern.
fn varphi_pattern(m: usize, t: usize) -> Color {
    if t <= m {
        Color::right(0, t)
    } else {
        Color::left(0, 2 * m + 1 - t)
    }
}

/// Color of offset `t` in the period-`2m+3` pattern.
pub(crate) fn phi_pattern(m: usize, t: usize) -> Color {
    if t == 0 {
        Color::Zero
    } else if t <= m + 1 {
        Color::right(0, t - 1)
    } else {
        Color::left(0, 2 * m + 2 - t)
    }
}

/// The `2(m+1)`-coloring of `C_{2(m+1)k}(U_m)` anchored at `v0`.
pub fn varphi(m: usize, k: usize, v0: usize) -> Result<EdgeColoring, BaseError> {
    if k < 2 {
        return Err(BaseError::PeriodCountTooSmall(k));
    }
    let period = 2 * m + 2;
    let n = period * k;
    let graph = CirculantGraph::odd(n, m)?;
    let v0 = v0 % n;
    Ok(EdgeColoring::from_fn(graph, |a, d| {
        let s = (d - 1) / 2;
        varphi_pattern(m, (a + s + n - v0) % period)
    }))
}

/// The `(2m+3)`-coloring of `C_{(2m+3)k}(U_m)` anchored at `v0`, in which
/// every vertex misses one color.
pub fn phi_dist(m: usize, k: usize, v0: usize) -> Result<EdgeColoring, BaseError> {
    if k < 2 {
        return Err(BaseError::PeriodCountTooSmall(k));
    }
    let period = 2 * m + 3;
    let n = period * k;
    let graph = CirculantGraph::odd(n, m)?;
    let v0 = v0 % n;
    Ok(EdgeColoring::from_fn(graph, |a, d| {
        let s = (d - 1) / 2;
        phi_pattern(m, (a + s + n - v0) % period)
    }))
}

fn odd_host_m(graph: &CirculantGraph) -> Option<usize> {
    let lengths = graph.lengths();
    let m = lengths.len().checked_sub(1)?;
    (lengths == odd_lengths(m).as_slice() && 2 * (2 * m + 1) < graph.n()).then_some(m)
}

/// Inserts two vertices `x`, `y` into the length-1 edge `cut` of a proper
/// `2(m+1)`-coloring of `C_N(U_m)`, giving a proper coloring of `C_{N+2}(U_m)`.
///
/// Vertices after the cut are shifted by two; `x = cut.u + 1`, `y = cut.u + 2`.
pub fn two_vertex_extension(
    c: &EdgeColoring,
    cut: CanonicalEdge,
) -> Result<EdgeColoring, BaseError> {
    let m = odd_host_m(c.graph()).ok_or(BaseError::NotOddHost)?;
    if cut.d != 1 {
        return Err(BaseError::CutNotConsecutive(cut));
    }
    let n = c.n();
    let cu = cut.u % n;
    let (x, y) = (cu + 1, cu + 2);
    let relabel = |v: usize| if v <= cu { v } else { v + 2 };
    let d = 2 * m + 1;

    // Length-d edges crossing the cut, keyed by their left endpoint.
    let crossing = |a: usize| (cu + n - a) % n < d;
    let mut edges = Vec::with_capacity(c.graph().edge_count() + 2 * d + 1);
    for (e, col) in c.edges() {
        if e.d == d && crossing(e.u) {
            continue;
        }
        let (a, b) = e.endpoints(n);
        edges.push((relabel(a), relabel(b), col));
    }
    let mut touched = vec![x, y];
    for ja in 0..d {
        let a = (cu + n - ja) % n;
        let b = (a + d) % n;
        let ib = d - 1 - ja;
        let col = c.color(a, d);
        let to_a = if ja % 2 == 0 { x } else { y };
        let to_b = if ib % 2 == 0 { y } else { x };
        edges.push((relabel(a), to_a, col));
        edges.push((relabel(b), to_b, col));
        touched.push(relabel(a));
        touched.push(relabel(b));
    }

    let palette = c.palette();
    let missing_at = |v: usize| {
        let mut seen = vec![false; palette.len()];
        for &(a, b, col) in &edges {
            if a == v || b == v {
                if let Some(id) = palette.id_of(col) {
                    if seen[id] {
                        return Err(BaseError::ExtensionConflict { cut: cu, vertex: v });
                    }
                    seen[id] = true;
                }
            }
        }
        let absent: Vec<usize> = (0..palette.len()).filter(|&i| !seen[i]).collect();
        Ok(absent)
    };
    let mx = missing_at(x)?;
    let my = missing_at(y)?;
    if mx.len() != 1 || mx != my {
        return Err(BaseError::NoClosingColor(cu));
    }
    edges.push((x, y, palette.get(mx[0]).expect("palette id")));

    let graph = CirculantGraph::odd(n + 2, m)?;
    let out = EdgeColoring::from_edges(graph, edges)?;
    for v in touched {
        let cols = out.incident_colors(v);
        let mut sorted = cols.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != cols.len() {
            return Err(BaseError::ExtensionConflict { cut: cu, vertex: v });
        }
    }
    Ok(out)
}

/// Where the two-vertex extensions of `color_even_order(m, n)` go.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenOrderLayout {
    pub m: usize,
    pub n: usize,
    /// Number of `varphi` periods in the base.
    pub q: usize,
    /// Number of two-vertex extensions.
    pub r: usize,
    /// Cut positions in base coordinates, ascending.
    pub cuts: Vec<usize>,
}

impl EvenOrderLayout {
    pub fn new(m: usize, n: usize) -> Result<Self, BaseError> {
        if m == 0 {
            if n < 2 {
                return Err(BaseError::NoDecomposition { m, n });
            }
            return Ok(Self {
                m,
                n,
                q: n,
                r: 0,
                cuts: Vec::new(),
            });
        }
        let r = n % (m + 1);
        let q = n / (m + 1);
        if q < 2 || 2 * m * r > q * (m + 1) {
            return Err(BaseError::NoDecomposition { m, n });
        }
        let base = 2 * q * (m + 1);
        let cuts = if r == 0 {
            Vec::new()
        } else {
            let gap = if r * (4 * m + 2) <= base {
                4 * m + 2
            } else {
                base / r
            };
            let start = base / 2 - ((r - 1) * gap) / 2;
            (0..r).map(|k| start + k * gap).collect()
        };
        Ok(Self { m, n, q, r, cuts })
    }

    /// Vertices of `C_{2n}(U_m)` whose incident edges differ from the plain
    /// `varphi` pattern.
    pub fn touched(&self) -> Vec<usize> {
        let order = 2 * self.n;
        let m = self.m;
        let mut out: Vec<usize> = self
            .cuts
            .iter()
            .enumerate()
            .flat_map(|(k, &c)| {
                let lo = c + 2 * k + order - 2 * m;
                (lo..=lo + 4 * m + 3).map(move |t| t % order)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// A proper `2(m+1)`-coloring of `C_{2n}(U_m)`, with the vertices perturbed
/// by two-vertex extensions.
#[derive(Debug, Clone)]
pub struct EvenOrderColoring {
    pub coloring: EdgeColoring,
    pub layout: EvenOrderLayout,
}

pub fn color_even_order(m: usize, n: usize) -> Result<EvenOrderColoring, BaseError> {
    let layout = EvenOrderLayout::new(m, n)?;
    let mut coloring = varphi(m, if m == 0 { n } else { layout.q }, 0)?;
    for &c in layout.cuts.iter().rev() {
        coloring = two_vertex_extension(&coloring, CanonicalEdge { u: c, d: 1 })?;
    }
    debug_assert_eq!(coloring.n(), 2 * n);
    Ok(EvenOrderColoring { coloring, layout })
}

/// The anchor sets `W⁰, ..., W^e`, one vertex per component of `C_N(Q^p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorSequence {
    sets: Vec<Vec<usize>>,
}

impl AnchorSequence {
    pub fn new(sets: Vec<Vec<usize>>) -> Result<Self, BaseError> {
        for (p, set) in sets.iter().enumerate() {
            let size = 1usize << p;
            let mut residues: Vec<usize> = set.iter().map(|v| v % size).collect();
            residues.sort_unstable();
            residues.dedup();
            if set.len() != size || residues.len() != size {
                return Err(BaseError::InvalidAnchors {
                    class: p,
                    expected: size,
                });
            }
        }
        Ok(Self { sets })
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }
}

/// `W⁰ = {0}` and `W^p = [2^{p-1}+1, 3·2^{p-1}]`.
pub fn default_w(radius: usize) -> AnchorSequence {
    let top = floor_log2(radius.max(1)) as usize;
    let mut sets = vec![vec![0]];
    for p in 1..=top {
        let h = 1usize << (p - 1);
        sets.push((h + 1..=3 * h).collect());
    }
    AnchorSequence { sets }
}

/// `q`: `R+1` for even `R`, `R+2` for odd `R`.
pub fn block_size(radius: usize) -> usize {
    if radius.is_multiple_of(2) {
        radius + 1
    } else {
        radius + 2
    }
}

/// Order of `Φ_W` with `k` periods: `k·q·2^{1+e}`.
pub fn phi_w_order(radius: usize, k: usize) -> usize {
    (k * block_size(radius)) << (1 + floor_log2(radius))
}

/// A `Φ_W` coloring and the vertices perturbed by its internal extensions.
#[derive(Debug, Clone)]
pub struct PhiW {
    pub coloring: EdgeColoring,
    pub touched: Vec<usize>,
}

struct ClassLayout {
    p: usize,
    component_order: usize,
    anchors: Vec<usize>,
    layout: EvenOrderLayout,
}

fn class_layouts(
    radius: usize,
    k: usize,
    w: &AnchorSequence,
) -> Result<(LengthPartition, Vec<ClassLayout>), BaseError> {
    if k == 0 {
        return Err(BaseError::ZeroPeriods);
    }
    let partition = LengthPartition::new(radius)?;
    if w.sets().len() != partition.class_count() {
        return Err(BaseError::AnchorClassCount {
            got: w.sets().len(),
            expected: partition.class_count(),
        });
    }
    let n = phi_w_order(radius, k);
    let mut out = Vec::new();
    for p in 1..partition.class_count() {
        let m = partition.class(p).len() - 1;
        let component_order = n >> p;
        let layout = EvenOrderLayout::new(m, component_order / 2)?;
        let limit = 2 * (m + 1);
        if layout
            .touched()
            .iter()
            .any(|&t| cyclic_distance(t, 0, component_order) < limit)
        {
            return Err(BaseError::AnchorTooClose {
                class: p,
                limit: limit << p,
            });
        }
        let mut anchors = vec![0; 1 << p];
        for &v in &w.sets()[p] {
            let v = v % n;
            anchors[v % (1 << p)] = v >> p;
        }
        out.push(ClassLayout {
            p,
            component_order,
            anchors,
            layout,
        });
    }
    Ok((partition, out))
}

fn lift_touched(n: usize, class: &ClassLayout) -> Vec<usize> {
    let local = class.layout.touched();
    let mut out = Vec::with_capacity(local.len() << class.p);
    for (rho, &t0) in class.anchors.iter().enumerate() {
        for &t in &local {
            let t = (t + t0) % class.component_order;
            out.push((rho + (t << class.p)) % n);
        }
    }
    out
}

/// Vertices of `Φ_W` perturbed by two-vertex extensions, without building
/// the coloring.
pub fn phi_w_touched(radius: usize, k: usize, w: &AnchorSequence) -> Result<Vec<usize>, BaseError> {
    let n = phi_w_order(radius, k);
    let (_, classes) = class_layouts(radius, k, w)?;
    let mut out: Vec<usize> = classes.iter().flat_map(|c| lift_touched(n, c)).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// The `(2R+1)`-AVD coloring `Φ_W` of `C_N([1, R])`, `N = k·q·2^{1+e}`.
pub fn phi_w(radius: usize, k: usize, w: &AnchorSequence) -> Result<PhiW, BaseError> {
    let n = phi_w_order(radius, k);
    let (partition, classes) = class_layouts(radius, k, w)?;
    let m0 = partition.class(0).len() - 1;
    let p0 = 2 * m0 + 3;
    let v0 = w.sets()[0][0] % n;
    let components = classes
        .iter()
        .map(|c| color_even_order(c.layout.m, c.layout.n).map(|e| e.coloring))
        .collect::<Result<Vec<_>, _>>()?;
    let graph = CirculantGraph::full(n, radius)?;
    let coloring = EdgeColoring::from_fn(graph, |a, d| {
        let p = d.trailing_zeros() as usize;
        if p == 0 {
            let s = (d - 1) / 2;
            return phi_pattern(m0, (a + s + n - v0) % p0);
        }
        let class = &classes[p - 1];
        let rho = a & ((1 << p) - 1);
        let t = a >> p;
        let l = class.component_order;
        let local = (t + l - class.anchors[rho]) % l;
        components[p - 1].color(local, d >> p).with_class(p)
    });
    let mut touched: Vec<usize> = classes.iter().flat_map(|c| lift_touched(n, c)).collect();
    touched.sort_unstable();
    touched.dedup();
    Ok(PhiW { coloring, touched })
}
