//! Splicing colored cliques `K_{2R+1}` into a `Φ_W` base, the count
//! arithmetic choosing how many, and the top-level `avd_color`.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{floor_log2, gcd, mod_inverse};
use crate::base::{
    block_size, default_w, phi_pattern, phi_w, phi_w_order, phi_w_touched, AnchorSequence,
    BaseError,
};
use crate::clique::{psi, sequence_c, CliqueError};
use crate::color::Color;
use crate::coloring::EdgeColoring;
use crate::graph::{CirculantGraph, GraphError, LengthPartition};

/// Derived constants of the construction for a given `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub radius: usize,
    /// `R+1` for even `R`, `R+2` for odd `R`.
    pub q: usize,
    /// `floor(log2 R)`.
    pub exponent: u32,
    /// Base period `M = q·2^{1+e}`.
    pub period: usize,
    pub clique_size: usize,
    /// `gcd(2R+1, M)`.
    pub gcd: usize,
}

impl ConstructionParams {
    pub fn new(radius: usize) -> Result<Self, AvdError> {
        if radius == 0 {
            return Err(AvdError::ZeroRadius);
        }
        let q = block_size(radius);
        let exponent = floor_log2(radius);
        let period = phi_w_order(radius, 1);
        let clique_size = 2 * radius + 1;
        Ok(Self {
            radius,
            q,
            exponent,
            period,
            clique_size,
            gcd: gcd(clique_size, period),
        })
    }

    /// Spacing between clique cuts: `2^e` for even `R`, `2^{e+1}` for odd `R`.
    pub fn cut_step(&self) -> usize {
        if self.radius.is_multiple_of(2) {
            1 << self.exponent
        } else {
            1 << (self.exponent + 1)
        }
    }

    /// True for `R = 1 mod 6`, where only orders divisible by 3 are reachable.
    pub fn needs_multiple_of_three(&self) -> bool {
        self.radius % 6 == 1
    }

    /// Smallest order from which a construction is guaranteed.
    ///
    /// For `R = 1 mod 6` this is `3n'` for the smallest admissible `n'`.
    pub fn threshold(&self) -> usize {
        let r = self.radius;
        let e = self.exponent;
        if self.needs_multiple_of_three() && r > 1 {
            let q3 = self.q / 3;
            let bound = (q3 << (1 + e)) * (r + (q3 << e)) - 2 * r;
            3 * bound
        } else {
            self.period * (r + (self.q << e)) - 2 * r
        }
    }

    /// Largest order with `u > 2vq` in the count arithmetic.
    pub fn z_max(&self) -> usize {
        self.period * (self.radius + (self.q << self.exponent)) - self.clique_size
    }

    /// The unique `u < M/g` and `v` with `n = u(2R+1) + vM`, accepted when
    /// `v >= 1` and `u <= 2vq`.
    pub fn solve(&self, n: usize) -> Result<CountSolution, NotCovered> {
        let g = self.gcd;
        if !n.is_multiple_of(g) {
            return Err(NotCovered::Divisibility { n, gcd: g });
        }
        let modulus = (self.period / g) as i64;
        let inv = mod_inverse((self.clique_size / g) as i64, modulus).expect("coprime after gcd");
        let u = (((n / g) as i64 % modulus) * inv % modulus) as usize;
        let rest = n as i64 - (u * self.clique_size) as i64;
        let v = rest / self.period as i64;
        if v < 1 {
            return Err(NotCovered::NoBasePeriod { n, u });
        }
        let v = v as usize;
        let capacity = 2 * v * self.q;
        if u > capacity {
            return Err(NotCovered::Capacity { n, u, v, capacity });
        }
        Ok(CountSolution {
            extensions: u,
            periods: v,
        })
    }
}

/// `n = extensions·(2R+1) + periods·M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountSolution {
    pub extensions: usize,
    pub periods: usize,
}

/// Why an order is outside the construction's reach.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotCovered {
    #[error("C_{n}({{1}}) has a 3-color AVD coloring only when 3 divides n")]
    CycleOrder { n: usize },
    #[error("R = {radius} is 1 mod 6 and n = {n} is not a multiple of 3 (open case)")]
    OpenResidue { n: usize, radius: usize },
    #[error("gcd(2R+1, M) = {gcd} does not divide n = {n}")]
    Divisibility { n: usize, gcd: usize },
    #[error("n = {n} leaves no base period after u = {u} extensions")]
    NoBasePeriod { n: usize, u: usize },
    #[error("n = {n} needs u = {u} extensions but v = {v} periods hold at most {capacity}")]
    Capacity {
        n: usize,
        u: usize,
        v: usize,
        capacity: usize,
    },
    #[error("{needed} extensions requested but only {available} clean cut positions")]
    CutPositions { needed: usize, available: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MergeError {
    #[error("base graph is not C_N([1, R]) with N > 2R+1")]
    BaseShape,
    #[error("clique is not K_{{2R+1}} for R = {0}")]
    CliqueShape(usize),
    #[error("clique vertex {0} has no unique missing color")]
    CliqueMissing(usize),
    #[error("junction edge color {0} is not a Q^0 color")]
    JunctionNotQ0(Color),
    #[error("relabeling sends {from} to both {to} and {existing}")]
    SigmaConflict {
        from: Color,
        to: Color,
        existing: Color,
    },
    #[error("class {class} colors at offset {offset} cannot be matched")]
    Ambiguous { offset: usize, class: usize },
    #[error("clique color {0} is left without an image")]
    Unbound(Color),
    #[error("relabeling is not a bijection onto the base palette")]
    NotBijective,
    #[error("H^c sets differ on the {side:?} side at offset {offset}")]
    HColors { side: Side, offset: usize },
    #[error("H^l set on the {side:?} side at offset {offset} is not [{lo}, {hi}]")]
    HLengths {
        side: Side,
        offset: usize,
        lo: usize,
        hi: usize,
    },
    #[error("slot of vertex {vertex}, length {length} filled twice or unexpectedly")]
    SlotConflict { vertex: usize, length: usize },
    #[error("{0} merged slots left empty")]
    Unfilled(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AvdError {
    #[error("R must be at least 1")]
    ZeroRadius,
    #[error("n = {n} must exceed 2R = {}", 2 * radius)]
    OrderTooSmall { n: usize, radius: usize },
    #[error("not covered: {0}")]
    NotCovered(NotCovered),
    #[error(transparent)]
    Base(#[from] BaseError),
    #[error(transparent)]
    Clique(#[from] CliqueError),
    #[error(transparent)]
    Merge(#[from] MergeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<NotCovered> for AvdError {
    fn from(e: NotCovered) -> Self {
        AvdError::NotCovered(e)
    }
}

impl AvdError {
    pub fn is_not_covered(&self) -> bool {
        matches!(self, AvdError::NotCovered(_))
    }
}

pub fn solve_counts(n: usize, radius: usize) -> Result<CountSolution, AvdError> {
    Ok(ConstructionParams::new(radius)?.solve(n)?)
}

/// Picks `count` cut positions among multiples of `step` whose window
/// `[c-R, c+R+1]` avoids every `reserved` vertex, spread evenly.
pub fn plan_cuts(
    base_order: usize,
    count: usize,
    step: usize,
    radius: usize,
    reserved: &[usize],
) -> Result<Vec<usize>, NotCovered> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let blocked: HashSet<usize> = reserved.iter().map(|v| v % base_order).collect();
    let available: Vec<usize> = (0..base_order)
        .step_by(step.max(1))
        .filter(|&c| {
            (0..=2 * radius + 1)
                .all(|k| !blocked.contains(&((c + base_order + k - radius) % base_order)))
        })
        .collect();
    if count > available.len() {
        return Err(NotCovered::CutPositions {
            needed: count,
            available: available.len(),
        });
    }
    Ok((0..count)
        .map(|k| available[k * available.len() / count])
        .collect())
}

/// Side of the junction a half-edge's nearer endpoint lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// A severed end of a cut edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfEdge {
    pub anchor: usize,
    pub former_partner: usize,
    pub color: Color,
    pub former_length: usize,
}

/// The `H^c`/`H^l` comparison made at one merge step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSetCheck {
    pub side: Side,
    pub offset: usize,
    pub base_colors: Vec<Color>,
    pub extension_colors: Vec<Color>,
    pub lengths: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct SpliceResult {
    pub coloring: EdgeColoring,
    /// Cut positions in the coordinates of the input coloring.
    pub cut_positions: Vec<usize>,
    /// The four vertices on either side of the two junctions, new coordinates.
    pub junction_vertices: Vec<usize>,
    /// Every half-edge created by cutting, new coordinates.
    pub half_edges: Vec<HalfEdge>,
    pub h_sets: Vec<HSetCheck>,
    /// Relabeling applied to the clique colors.
    pub relabeling: Vec<(Color, Color)>,
}

struct SpliceOutcome {
    half_edges: Vec<HalfEdge>,
    h_sets: Vec<HSetCheck>,
    relabeling: Vec<(Color, Color)>,
}

/// Cross-section of a cut: color of the edge from offset `j` left of the
/// junction to offset `i` right of it, for `i + j + 1 <= R`.
struct CrossSection {
    left: BTreeMap<usize, Vec<(Color, usize)>>,
    right: BTreeMap<usize, Vec<(Color, usize)>>,
    symmetric: Vec<Color>,
}

impl CrossSection {
    fn new(radius: usize, color: impl Fn(usize, usize) -> Color) -> Self {
        let mut left: BTreeMap<usize, Vec<(Color, usize)>> = BTreeMap::new();
        let mut right: BTreeMap<usize, Vec<(Color, usize)>> = BTreeMap::new();
        let mut symmetric = Vec::new();
        for j in 0..radius {
            for i in 0..radius - j {
                let c = color(j, i);
                match j.cmp(&i) {
                    std::cmp::Ordering::Less => left.entry(j).or_default().push((c, i)),
                    std::cmp::Ordering::Greater => right.entry(i).or_default().push((c, j)),
                    std::cmp::Ordering::Equal => symmetric.push(c),
                }
            }
        }
        Self {
            left,
            right,
            symmetric,
        }
    }
}

struct Relabeling(HashMap<Color, Color>);

impl Relabeling {
    fn bind(&mut self, from: Color, to: Color) -> Result<(), MergeError> {
        match self.0.insert(from, to) {
            Some(existing) if existing != to => {
                Err(MergeError::SigmaConflict { from, to, existing })
            }
            _ => Ok(()),
        }
    }

    fn get(&self, c: Color) -> Result<Color, MergeError> {
        self.0.get(&c).copied().ok_or(MergeError::Unbound(c))
    }
}

fn derive_relabeling(
    radius: usize,
    partition: &LengthPartition,
    base: &CrossSection,
    ext: &CrossSection,
    clique_palette: &[Color],
) -> Result<Relabeling, MergeError> {
    let mut sigma = Relabeling(HashMap::new());
    let m0 = partition.class(0).len() - 1;
    let pattern: Vec<Color> = (0..2 * m0 + 3).map(|t| phi_pattern(m0, t)).collect();
    let junction = base.symmetric[0];
    let shift = pattern
        .iter()
        .position(|&c| c == junction)
        .ok_or(MergeError::JunctionNotQ0(junction))?;
    for s in 0..pattern.len() {
        sigma.bind(pattern[s], pattern[(s + shift) % pattern.len()])?;
    }
    for (e, b) in ext.symmetric.iter().zip(&base.symmetric) {
        sigma.bind(*e, *b)?;
    }
    for (side_b, side_e) in [(&base.left, &ext.left), (&base.right, &ext.right)] {
        let mut seen_b: HashSet<Color> = HashSet::new();
        let mut seen_e: HashSet<Color> = HashSet::new();
        for (&j, group) in side_b.iter().rev() {
            let egroup = side_e.get(&j).map(Vec::as_slice).unwrap_or(&[]);
            let fresh_b: Vec<Color> = group
                .iter()
                .map(|x| x.0)
                .filter(|c| !seen_b.contains(c))
                .collect();
            let fresh_e: Vec<Color> = egroup
                .iter()
                .map(|x| x.0)
                .filter(|c| !seen_e.contains(c))
                .collect();
            let mut classes: Vec<usize> =
                fresh_b.iter().chain(&fresh_e).map(Color::class).collect();
            classes.sort_unstable();
            classes.dedup();
            for k in classes.into_iter().filter(|&k| k != 0) {
                let bb: Vec<Color> = fresh_b.iter().copied().filter(|c| c.class() == k).collect();
                let ee: Vec<Color> = fresh_e.iter().copied().filter(|c| c.class() == k).collect();
                if bb.len() != 1 || ee.len() != 1 {
                    return Err(MergeError::Ambiguous {
                        offset: j,
                        class: k,
                    });
                }
                sigma.bind(ee[0], bb[0])?;
            }
            seen_b.extend(group.iter().map(|x| x.0));
            seen_e.extend(egroup.iter().map(|x| x.0));
        }
    }
    let mut images = HashSet::new();
    for &c in clique_palette {
        let img = sigma.get(c)?;
        if img.class() != c.class() || !images.insert(img) {
            return Err(MergeError::NotBijective);
        }
    }
    if images.len() != 2 * radius + 1 {
        return Err(MergeError::NotBijective);
    }
    Ok(sigma)
}

/// Position of clique vertex `k` in the spliced sequence, relative to the
/// first inserted vertex.
fn ext_offset(radius: usize, k: usize) -> usize {
    if k > radius {
        k - radius - 1
    } else {
        radius + k
    }
}

/// Splices in place. `slots` holds `R` rightbound colors per vertex of `C_n([1, R])`.
fn splice_slots(
    n: usize,
    slots: &mut Vec<Color>,
    radius: usize,
    cut: usize,
    clique: &EdgeColoring,
    record: bool,
) -> Result<SpliceOutcome, MergeError> {
    let big = 2 * radius + 1;
    if clique.n() != big || clique.graph().is_full_range() != Some(radius) {
        return Err(MergeError::CliqueShape(radius));
    }
    let partition = LengthPartition::new(radius).map_err(|_| MergeError::BaseShape)?;
    let c = cut % n;
    let base_color = |a: usize, d: usize| slots[(a % n) * radius + d - 1];
    let base = CrossSection::new(radius, |j, i| base_color(c + n - j, i + j + 1));
    let ext = CrossSection::new(radius, |j, i| {
        clique
            .color_between(radius - j, radius + 1 + i)
            .expect("complete graph")
    });
    let mut clique_palette = Vec::with_capacity(big);
    for v in 0..big {
        clique_palette.push(
            clique
                .missing_color(v)
                .ok_or(MergeError::CliqueMissing(v))?,
        );
    }
    let sigma = derive_relabeling(radius, &partition, &base, &ext, &clique_palette)?;

    let mut h_sets = Vec::new();
    for (side, side_b, side_e) in [
        (Side::Left, &base.left, &ext.left),
        (Side::Right, &base.right, &ext.right),
    ] {
        for (&j, group) in side_b {
            let egroup = side_e
                .get(&j)
                .ok_or(MergeError::HColors { side, offset: j })?;
            let mut bc: Vec<Color> = group.iter().map(|x| x.0).collect();
            let mut ec = egroup
                .iter()
                .map(|x| sigma.get(x.0))
                .collect::<Result<Vec<_>, _>>()?;
            bc.sort();
            ec.sort();
            if bc != ec {
                return Err(MergeError::HColors { side, offset: j });
            }
            let mut lengths: Vec<usize> = group.iter().map(|x| x.1 + j + 1).collect();
            let mut elengths: Vec<usize> = egroup.iter().map(|x| x.1 + j + 1).collect();
            lengths.sort_unstable();
            elengths.sort_unstable();
            let (lo, hi) = (2 * (j + 1), radius);
            if lengths != (lo..=hi).collect::<Vec<_>>() || elengths != lengths {
                return Err(MergeError::HLengths {
                    side,
                    offset: j,
                    lo,
                    hi,
                });
            }
            if record {
                h_sets.push(HSetCheck {
                    side,
                    offset: j,
                    base_colors: bc,
                    extension_colors: ec,
                    lengths,
                });
            }
        }
    }

    let new_n = n + big;
    // New coordinates: base vertex at offset j left of the junction, offset i
    // right of it, and clique vertex k.
    let left_v = |j: usize| (c + new_n - j) % new_n;
    let right_v = |i: usize| (c + 1 + big + i) % new_n;
    let ext_v = |k: usize| c + 1 + ext_offset(radius, k);

    let mut merged: Vec<(usize, usize, Color)> = Vec::with_capacity(radius * (radius + 1));
    for (j, &x) in base.symmetric.iter().enumerate() {
        merged.push((left_v(j), ext_v(radius + 1 + j), x));
        merged.push((ext_v(radius - j), right_v(j), x));
    }
    for (&j, group) in &base.left {
        let lookup: HashMap<Color, usize> = ext.left[&j]
            .iter()
            .map(|&(x, i2)| Ok((sigma.get(x)?, i2)))
            .collect::<Result<_, MergeError>>()?;
        for &(x, i) in group {
            let i2 = lookup[&x];
            merged.push((left_v(j), ext_v(radius + 1 + i2), x));
            merged.push((ext_v(radius - j), right_v(i), x));
        }
    }
    for (&i, group) in &base.right {
        let lookup: HashMap<Color, usize> = ext.right[&i]
            .iter()
            .map(|&(x, j2)| Ok((sigma.get(x)?, j2)))
            .collect::<Result<_, MergeError>>()?;
        for &(x, j) in group {
            let j2 = lookup[&x];
            merged.push((left_v(j), ext_v(radius + 1 + i), x));
            merged.push((ext_v(radius - j2), right_v(i), x));
        }
    }

    let mut half_edges = Vec::new();
    if record {
        for j in 0..radius {
            for i in 0..radius - j {
                let color = base_color(c + n - j, i + j + 1);
                let former_length = i + j + 1;
                half_edges.push(HalfEdge {
                    anchor: left_v(j),
                    former_partner: right_v(i),
                    color,
                    former_length,
                });
                half_edges.push(HalfEdge {
                    anchor: right_v(i),
                    former_partner: left_v(j),
                    color,
                    former_length,
                });
                let (a, b) = (ext_v(radius - j), ext_v(radius + 1 + i));
                let color = sigma.get(
                    clique
                        .color_between(radius - j, radius + 1 + i)
                        .expect("edge"),
                )?;
                half_edges.push(HalfEdge {
                    anchor: a,
                    former_partner: b,
                    color,
                    former_length,
                });
                half_edges.push(HalfEdge {
                    anchor: b,
                    former_partner: a,
                    color,
                    former_length,
                });
            }
        }
    }

    // Ordered clique vertices and their internal edges.
    let order: Vec<usize> = (radius + 1..big).chain(0..=radius).collect();
    let insert_at = (c + 1) * radius;
    slots.splice(
        insert_at..insert_at,
        std::iter::repeat_n(Color::Zero, big * radius),
    );

    let mut pending: HashSet<usize> = HashSet::with_capacity(big * radius + radius * radius);
    for j in 0..radius {
        let a = left_v(j);
        for d in j + 1..=radius {
            pending.insert(a * radius + d - 1);
        }
    }
    for t in 0..big {
        for d in 1..=radius {
            pending.insert((c + 1 + t) * radius + d - 1);
        }
    }
    let mut put = |a: usize, b: usize, col: Color| -> Result<(), MergeError> {
        let fwd = (b + new_n - a) % new_n;
        let (u, d) = if fwd <= radius {
            (a, fwd)
        } else {
            (b, new_n - fwd)
        };
        if d == 0 || d > radius || !pending.remove(&(u * radius + d - 1)) {
            return Err(MergeError::SlotConflict {
                vertex: u,
                length: d,
            });
        }
        slots[u * radius + d - 1] = col;
        Ok(())
    };
    for t in 0..big {
        for d in 1..=radius {
            if t + d < big {
                let col = clique
                    .color_between(order[t], order[t + d])
                    .expect("complete graph");
                put(c + 1 + t, c + 1 + t + d, sigma.get(col)?)?;
            }
        }
    }
    for (a, b, col) in merged {
        put(a, b, col)?;
    }
    if !pending.is_empty() {
        return Err(MergeError::Unfilled(pending.len()));
    }

    let mut relabeling: Vec<(Color, Color)> = if record {
        clique_palette.iter().map(|&x| (x, sigma.0[&x])).collect()
    } else {
        Vec::new()
    };
    relabeling.sort();
    Ok(SpliceOutcome {
        half_edges,
        h_sets,
        relabeling,
    })
}

/// Inserts the colored clique between vertices `cut` and `cut + 1` of `base`.
///
/// Base vertices after the cut move up by `2R+1`; the clique occupies
/// `cut+1 ..= cut+2R+1` in the order `e_{R+1}, ..., e_{2R}, e_0, ..., e_R`.
pub fn insert_extension(
    base: &EdgeColoring,
    cut: usize,
    clique: &EdgeColoring,
) -> Result<SpliceResult, MergeError> {
    let radius = base.graph().is_full_range().ok_or(MergeError::BaseShape)?;
    let n = base.n();
    if n <= 2 * radius + 1 {
        return Err(MergeError::BaseShape);
    }
    let (_, mut slots) = base.clone().into_raw();
    let outcome = splice_slots(n, &mut slots, radius, cut, clique, true)?;
    let big = 2 * radius + 1;
    let new_n = n + big;
    let graph = CirculantGraph::full(new_n, radius).map_err(|_| MergeError::BaseShape)?;
    let c = cut % n;
    Ok(SpliceResult {
        coloring: EdgeColoring::from_raw(graph, slots),
        cut_positions: vec![c],
        junction_vertices: vec![c, c + 1, c + big, (c + big + 1) % new_n],
        half_edges: outcome.half_edges,
        h_sets: outcome.h_sets,
        relabeling: outcome.relabeling,
    })
}

/// Everything needed to build the coloring for one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionPlan {
    pub n: usize,
    pub radius: usize,
    /// `None` for the plain cycle coloring at `R = 1`.
    pub solution: Option<CountSolution>,
    pub base_order: usize,
    /// Cut positions in base coordinates, ascending.
    pub cuts: Vec<usize>,
    pub anchors: Option<AnchorSequence>,
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub coloring: EdgeColoring,
    pub plan: ConstructionPlan,
}

/// Decides whether the construction reaches `C_n([1, R])` without building it.
pub fn plan_construction(n: usize, radius: usize) -> Result<ConstructionPlan, AvdError> {
    if radius == 0 {
        return Err(AvdError::ZeroRadius);
    }
    if n <= 2 * radius {
        return Err(AvdError::OrderTooSmall { n, radius });
    }
    if radius == 1 {
        if !n.is_multiple_of(3) {
            return Err(NotCovered::CycleOrder { n }.into());
        }
        return Ok(ConstructionPlan {
            n,
            radius,
            solution: None,
            base_order: n,
            cuts: Vec::new(),
            anchors: None,
        });
    }
    let params = ConstructionParams::new(radius)?;
    if params.needs_multiple_of_three() && !n.is_multiple_of(3) {
        return Err(NotCovered::OpenResidue { n, radius }.into());
    }
    let solution = params.solve(n)?;
    let anchors = default_w(radius);
    let base_order = phi_w_order(radius, solution.periods);
    let touched = phi_w_touched(radius, solution.periods, &anchors)?;
    let cuts = plan_cuts(
        base_order,
        solution.extensions,
        params.cut_step(),
        radius,
        &touched,
    )?;
    Ok(ConstructionPlan {
        n,
        radius,
        solution: Some(solution),
        base_order,
        cuts,
        anchors: Some(anchors),
    })
}

/// Builds the coloring described by `plan`.
pub fn build(plan: &ConstructionPlan) -> Result<EdgeColoring, AvdError> {
    let radius = plan.radius;
    let (Some(solution), Some(anchors)) = (plan.solution, plan.anchors.as_ref()) else {
        let graph = CirculantGraph::full(plan.n, radius)?;
        return Ok(EdgeColoring::from_fn(graph, |a, _| phi_pattern(0, a % 3)));
    };
    let base = phi_w(radius, solution.periods, anchors)?.coloring;
    let clique = psi(&sequence_c(radius)?)?;
    let (_, mut slots) = base.into_raw();
    let mut n = plan.base_order;
    for &c in plan.cuts.iter().rev() {
        splice_slots(n, &mut slots, radius, c, &clique, false)?;
        n += 2 * radius + 1;
    }
    debug_assert_eq!(n, plan.n);
    Ok(EdgeColoring::from_raw(
        CirculantGraph::full(n, radius)?,
        slots,
    ))
}

/// A `(2R+1)`-color AVD coloring of `C_n([1, R])`, or the reason none is built.
pub fn avd_color(n: usize, radius: usize) -> Result<Construction, AvdError> {
    let plan = plan_construction(n, radius)?;
    let coloring = build(&plan)?;
    Ok(Construction { coloring, plan })
}

/// Number of `n` in `[lo, hi]` for which `avd_color` succeeds.
pub fn coverage_count(radius: usize, lo: usize, hi: usize) -> usize {
    (lo..=hi)
        .filter(|&n| plan_construction(n, radius).is_ok())
        .count()
}
