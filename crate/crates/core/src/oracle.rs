//! Exact AVD chromatic index of small circulants by backtracking.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::color::Color;
use crate::coloring::EdgeColoring;
use crate::graph::CirculantGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrder {
    /// Canonical `(u, d)` order.
    Lexicographic,
    /// Next edge is the one whose endpoints already have the most ordered edges.
    Saturating,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_colors: usize,
    pub edge_order: EdgeOrder,
    pub time_limit: Option<Duration>,
    pub symmetry_breaking: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_colors: 16,
            edge_order: EdgeOrder::Saturating,
            time_limit: None,
            symmetry_breaking: true,
        }
    }
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found(EdgeColoring),
    Unsat,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search timed out; chi'_a is at least {lower}")]
    Timeout { lower: usize },
    #[error("no AVD coloring with at most {max_colors} colors")]
    LimitReached { max_colors: usize },
    #[error("k = {0} is outside the supported range 1..=64")]
    ColorCount(usize),
    #[error("graph has no edges")]
    Edgeless,
}

struct Search<'a> {
    n: usize,
    k: usize,
    edges: Vec<(usize, usize)>,
    /// Edge ids at each vertex.
    incident: Vec<Vec<usize>>,
    neighbors: Vec<Vec<usize>>,
    degree: Vec<usize>,
    color: Vec<u8>,
    used: Vec<u64>,
    remaining: Vec<usize>,
    cfg: &'a SearchConfig,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

const UNSET: u8 = u8::MAX;

fn edge_order(g: &CirculantGraph, order: EdgeOrder) -> Vec<(usize, usize)> {
    let n = g.n();
    let all: Vec<(usize, usize)> = g.edges().map(|e| e.endpoints(n)).collect();
    match order {
        EdgeOrder::Lexicographic => all,
        EdgeOrder::Saturating => {
            let mut placed = vec![0usize; n];
            let mut taken = vec![false; all.len()];
            let mut out = Vec::with_capacity(all.len());
            for _ in 0..all.len() {
                let best = (0..all.len())
                    .filter(|&i| !taken[i])
                    .max_by_key(|&i| {
                        let (a, b) = all[i];
                        (placed[a] + placed[b], usize::MAX - i)
                    })
                    .expect("edges left");
                taken[best] = true;
                let (a, b) = all[best];
                placed[a] += 1;
                placed[b] += 1;
                out.push(all[best]);
            }
            out
        }
    }
}

impl<'a> Search<'a> {
    fn new(g: &CirculantGraph, k: usize, cfg: &'a SearchConfig) -> Self {
        let n = g.n();
        let edges = edge_order(g, cfg.edge_order);
        let mut incident = vec![Vec::new(); n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            incident[a].push(i);
            incident[b].push(i);
        }
        let neighbors = (0..n)
            .map(|v| {
                let mut w = g.neighbors(v);
                w.sort_unstable();
                w.dedup();
                w
            })
            .collect();
        let degree: Vec<usize> = incident.iter().map(Vec::len).collect();
        Self {
            n,
            k,
            color: vec![UNSET; edges.len()],
            used: vec![0; n],
            remaining: degree.clone(),
            degree,
            edges,
            incident,
            neighbors,
            cfg,
            deadline: cfg.time_limit.map(|t| Instant::now() + t),
            nodes: 0,
            timed_out: false,
        }
    }

    fn full_mask(&self) -> u64 {
        if self.k == 64 {
            u64::MAX
        } else {
            (1u64 << self.k) - 1
        }
    }

    /// Colors still usable on an uncolored edge.
    fn domain(&self, e: usize) -> u64 {
        let (a, b) = self.edges[e];
        self.full_mask() & !(self.used[a] | self.used[b])
    }

    fn vertex_ok(&self, v: usize) -> bool {
        let free = self.k - self.used[v].count_ones() as usize;
        if free < self.remaining[v] {
            return false;
        }
        let mut union = 0u64;
        for &e in &self.incident[v] {
            if self.color[e] == UNSET {
                let d = self.domain(e);
                if d == 0 {
                    return false;
                }
                union |= d;
            }
        }
        if (union.count_ones() as usize) < self.remaining[v] {
            return false;
        }
        if self.remaining[v] == 0 {
            for &w in &self.neighbors[v] {
                if self.remaining[w] == 0 && self.used[w] == self.used[v] {
                    return false;
                }
                if self.forced_equal(w, v) {
                    return false;
                }
            }
        } else {
            for &w in &self.neighbors[v] {
                if self.remaining[w] == 0 && self.forced_equal(v, w) {
                    return false;
                }
            }
        }
        true
    }

    /// True when the unsaturated `w` can only end with the color set of the
    /// saturated `v`.
    fn forced_equal(&self, w: usize, v: usize) -> bool {
        if self.remaining[w] == 0 || self.degree[w] != self.degree[v] {
            return false;
        }
        let target = self.used[v];
        if self.used[w] & !target != 0 {
            return false;
        }
        let mut union = 0u64;
        for &e in &self.incident[w] {
            if self.color[e] == UNSET {
                union |= self.domain(e);
            }
        }
        union & !target == 0
    }

    fn assign(&mut self, e: usize, c: u8) {
        let (a, b) = self.edges[e];
        self.color[e] = c;
        self.used[a] |= 1 << c;
        self.used[b] |= 1 << c;
        self.remaining[a] -= 1;
        self.remaining[b] -= 1;
    }

    fn unassign(&mut self, e: usize) {
        let (a, b) = self.edges[e];
        let c = self.color[e];
        self.color[e] = UNSET;
        self.used[a] &= !(1 << c);
        self.used[b] &= !(1 << c);
        self.remaining[a] += 1;
        self.remaining[b] += 1;
    }

    fn consistent_after(&self, e: usize) -> bool {
        let (a, b) = self.edges[e];
        let mut seen = [a, b].to_vec();
        seen.extend(self.neighbors[a].iter().copied());
        seen.extend(self.neighbors[b].iter().copied());
        seen.iter().all(|&v| self.vertex_ok(v))
    }

    fn run(&mut self, pos: usize, max_used: usize) -> bool {
        if pos == self.edges.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return false;
        }
        let limit = if self.cfg.symmetry_breaking {
            (max_used + 1).min(self.k)
        } else {
            self.k
        };
        let domain = self.domain(pos);
        for c in 0..limit {
            if domain & (1 << c) == 0 {
                continue;
            }
            self.assign(pos, c as u8);
            if self.consistent_after(pos) && self.run(pos + 1, max_used.max(c + 1)) {
                return true;
            }
            self.unassign(pos);
            if self.timed_out {
                return false;
            }
        }
        false
    }

    fn into_coloring(self, g: &CirculantGraph) -> EdgeColoring {
        let triples: Vec<(usize, usize, Color)> = self
            .edges
            .iter()
            .zip(&self.color)
            .map(|(&(a, b), &c)| (a, b, Color::left(0, c as usize)))
            .collect();
        debug_assert_eq!(self.n, g.n());
        EdgeColoring::from_edges(g.clone(), triples).expect("search covers every edge")
    }
}

/// Searches for an AVD coloring of `g` with at most `k` colors.
pub fn exists_avd_k(
    g: &CirculantGraph,
    k: usize,
    cfg: &SearchConfig,
) -> Result<SearchOutcome, OracleError> {
    if k == 0 || k > 64 {
        return Err(OracleError::ColorCount(k));
    }
    if g.edge_count() == 0 {
        return Err(OracleError::Edgeless);
    }
    let mut search = Search::new(g, k, cfg);
    if search.run(0, 0) {
        return Ok(SearchOutcome::Found(search.into_coloring(g)));
    }
    Ok(if search.timed_out {
        SearchOutcome::Timeout
    } else {
        SearchOutcome::Unsat
    })
}

/// `Δ`, or `Δ+1` when two adjacent vertices both have maximum degree.
pub fn lower_bound(g: &CirculantGraph) -> usize {
    // Circulants are regular, so any edge joins two maximum-degree vertices.
    let delta = g.degree();
    if g.edge_count() > 0 {
        delta + 1
    } else {
        delta
    }
}

/// Least `k` admitting an AVD coloring, searched upward from the lower bound.
pub fn chi_a_exact(g: &CirculantGraph, cfg: &SearchConfig) -> Result<usize, OracleError> {
    let start = Instant::now();
    let mut k = lower_bound(g);
    while k <= cfg.max_colors {
        let mut level = *cfg;
        if let Some(limit) = cfg.time_limit {
            let left = limit.checked_sub(start.elapsed());
            match left {
                Some(t) if !t.is_zero() => level.time_limit = Some(t),
                _ => return Err(OracleError::Timeout { lower: k }),
            }
        }
        match exists_avd_k(g, k, &level)? {
            SearchOutcome::Found(_) => return Ok(k),
            SearchOutcome::Unsat => k += 1,
            SearchOutcome::Timeout => return Err(OracleError::Timeout { lower: k }),
        }
    }
    Err(OracleError::LimitReached {
        max_colors: cfg.max_colors,
    })
}
