//! Circulant graphs `C_n(S)`, canonical edges and the length classes `Q^p`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count must be positive")]
    EmptyGraph,
    #[error("length {length} is outside [1, {max}] for n = {n}")]
    LengthOutOfRange { length: usize, n: usize, max: usize },
    #[error("valuation of 0 is undefined")]
    ZeroValuation,
    #[error("R must be at least 1")]
    ZeroRadius,
}

/// 2-adic valuation of `d`.
pub fn valuation(d: usize) -> Result<u32, GraphError> {
    if d == 0 {
        return Err(GraphError::ZeroValuation);
    }
    Ok(d.trailing_zeros())
}

/// The odd lengths `{1, 3, ..., 2m+1}`.
pub fn odd_lengths(m: usize) -> Vec<usize> {
    (0..=m).map(|p| 2 * p + 1).collect()
}

/// Partition of `[1, R]` by 2-adic valuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthPartition {
    radius: usize,
    classes: Vec<Vec<usize>>,
}

impl LengthPartition {
    pub fn new(radius: usize) -> Result<Self, GraphError> {
        if radius == 0 {
            return Err(GraphError::ZeroRadius);
        }
        let top = crate::arith::floor_log2(radius) as usize;
        let mut classes = vec![Vec::new(); top + 1];
        for d in 1..=radius {
            classes[d.trailing_zeros() as usize].push(d);
        }
        Ok(Self { radius, classes })
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, p: usize) -> &[usize] {
        &self.classes[p]
    }

    /// Number of classes, `floor(log2 R) + 1`.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, d: usize) -> Option<usize> {
        (1..=self.radius)
            .contains(&d)
            .then(|| d.trailing_zeros() as usize)
    }
}

pub fn length_partition(radius: usize) -> Result<LengthPartition, GraphError> {
    LengthPartition::new(radius)
}

/// An edge `{u, u+d mod n}` in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalEdge {
    pub u: usize,
    pub d: usize,
}

impl CanonicalEdge {
    pub fn endpoints(&self, n: usize) -> (usize, usize) {
        (self.u, (self.u + self.d) % n)
    }

    /// Endpoints with the smaller id first.
    pub fn sorted_endpoints(&self, n: usize) -> (usize, usize) {
        let (a, b) = self.endpoints(n);
        (a.min(b), a.max(b))
    }
}

/// The circulant graph `C_n(S)` on `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantGraph {
    n: usize,
    lengths: Vec<usize>,
}

impl CirculantGraph {
    pub fn new(n: usize, lengths: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut lengths: Vec<usize> = lengths.into_iter().collect();
        lengths.sort_unstable();
        lengths.dedup();
        for &d in &lengths {
            if d == 0 || d > n / 2 {
                return Err(GraphError::LengthOutOfRange {
                    length: d,
                    n,
                    max: n / 2,
                });
            }
        }
        Ok(Self { n, lengths })
    }

    /// `C_n([1, R])`.
    pub fn full(n: usize, radius: usize) -> Result<Self, GraphError> {
        Self::new(n, 1..=radius)
    }

    /// `C_n(U_m)`.
    pub fn odd(n: usize, m: usize) -> Result<Self, GraphError> {
        Self::new(n, odd_lengths(m))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// True when `S = [1, R]` for some `R`.
    pub fn is_full_range(&self) -> Option<usize> {
        let r = self.lengths.len();
        (self.lengths.iter().enumerate().all(|(k, &d)| d == k + 1)).then_some(r)
    }

    pub fn length_index(&self, d: usize) -> Option<usize> {
        self.lengths.binary_search(&d).ok()
    }

    pub fn has_antipodal(&self) -> bool {
        self.n.is_multiple_of(2) && self.lengths.last() == Some(&(self.n / 2))
    }

    pub fn degree(&self) -> usize {
        2 * self.lengths.len() - usize::from(self.has_antipodal())
    }

    pub fn edge_count(&self) -> usize {
        self.n * self.lengths.len() - if self.has_antipodal() { self.n / 2 } else { 0 }
    }

    /// Circular length of the pair `{a, b}`, `0` when `a = b`.
    pub fn length_between(&self, a: usize, b: usize) -> usize {
        crate::arith::cyclic_distance(a % self.n, b % self.n, self.n)
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        let d = self.length_between(a, b);
        d > 0 && self.length_index(d).is_some()
    }

    /// Canonical form of the pair `{a, b}` if it is an edge.
    pub fn canonical(&self, a: usize, b: usize) -> Option<CanonicalEdge> {
        let (a, b) = (a % self.n, b % self.n);
        let d = self.length_between(a, b);
        if d == 0 || self.length_index(d).is_none() {
            return None;
        }
        let u = if 2 * d == self.n {
            a.min(b)
        } else if (a + d) % self.n == b {
            a
        } else {
            b
        };
        Some(CanonicalEdge { u, d })
    }

    /// All edges in canonical form, ordered by `(u, d)`.
    pub fn edges(&self) -> impl Iterator<Item = CanonicalEdge> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| {
            self.lengths
                .iter()
                .filter(move |&&d| 2 * d != n || u < n / 2)
                .map(move |&d| CanonicalEdge { u, d })
        })
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let n = self.n;
        let mut out = Vec::with_capacity(self.degree());
        for &d in &self.lengths {
            out.push((v + d) % n);
            if 2 * d != n {
                out.push((v + n - d) % n);
            }
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n);
        for e in self.edges() {
            let (a, b) = e.endpoints(self.n);
            uf.union(a, b);
        }
        uf.groups()
    }
}

pub fn build_circulant(
    n: usize,
    lengths: impl IntoIterator<Item = usize>,
) -> Result<CirculantGraph, GraphError> {
    CirculantGraph::new(n, lengths)
}

/// Connected components of the graph on `Z_n` joining `i` and `i + d` for
/// each `d` in `lengths`. Lengths are read modulo `n`, so `d` and `n - d`
/// describe the same edges. Components are sorted and ordered by smallest
/// vertex.
pub fn components_of(
    n: usize,
    lengths: impl IntoIterator<Item = usize>,
) -> Result<Vec<Vec<usize>>, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let folded = lengths
        .into_iter()
        .map(|d| {
            let d = d % n;
            d.min(n - d)
        })
        .filter(|&d| d > 0);
    Ok(CirculantGraph::new(n, folded)?.components())
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }

    fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let r = self.find(v);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(v);
        }
        out
    }
}
