//! Edge colorings of circulant graphs.

use thiserror::Error;

use crate::color::{Color, Palette};
use crate::graph::{CanonicalEdge, CirculantGraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("{{{0}, {1}}} is not an edge of the host graph")]
    NotAnEdge(usize, usize),
    #[error("edge {{{0}, {1}}} colored twice")]
    Duplicate(usize, usize),
    #[error("edge {{{0}, {1}}} has no color")]
    Uncolored(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A total map from the edges of a circulant graph to colors.
///
/// Colors are stored per vertex for its rightbound edges `(v, v + S[k])`.
/// Antipodal edges occupy two slots holding the same color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    graph: CirculantGraph,
    slots: Vec<Color>,
}

impl EdgeColoring {
    /// Colors every canonical edge `(u, d)` with `f(u, d)`.
    pub fn from_fn(graph: CirculantGraph, mut f: impl FnMut(usize, usize) -> Color) -> Self {
        let n = graph.n();
        let s = graph.lengths().len();
        let mut slots = Vec::with_capacity(n * s);
        for u in 0..n {
            for &d in graph.lengths() {
                if 2 * d == n && u >= n / 2 {
                    slots.push(Color::Zero);
                } else {
                    slots.push(f(u, d));
                }
            }
        }
        if graph.has_antipodal() {
            for u in n / 2..n {
                slots[u * s + s - 1] = slots[(u - n / 2) * s + s - 1];
            }
        }
        Self { graph, slots }
    }

    /// Builds a coloring from explicit `(a, b, color)` triples covering every edge once.
    pub fn from_edges(
        graph: CirculantGraph,
        edges: impl IntoIterator<Item = (usize, usize, Color)>,
    ) -> Result<Self, ColoringError> {
        let n = graph.n();
        let s = graph.lengths().len();
        let mut slots: Vec<Option<Color>> = vec![None; n * s];
        for (a, b, c) in edges {
            let e = graph
                .canonical(a, b)
                .ok_or(ColoringError::NotAnEdge(a, b))?;
            let k = graph.length_index(e.d).expect("canonical length");
            let slot = &mut slots[e.u * s + k];
            if slot.is_some() {
                return Err(ColoringError::Duplicate(a, b));
            }
            *slot = Some(c);
        }
        let mut out = Vec::with_capacity(n * s);
        for u in 0..n {
            for (k, &d) in graph.lengths().iter().enumerate() {
                if 2 * d == n && u >= n / 2 {
                    out.push(Color::Zero);
                    continue;
                }
                out.push(slots[u * s + k].ok_or(ColoringError::Uncolored(u, (u + d) % n))?);
            }
        }
        let mut coloring = Self { graph, slots: out };
        coloring.sync_antipodal();
        Ok(coloring)
    }

    pub(crate) fn from_raw(graph: CirculantGraph, slots: Vec<Color>) -> Self {
        debug_assert_eq!(slots.len(), graph.n() * graph.lengths().len());
        let mut c = Self { graph, slots };
        c.sync_antipodal();
        c
    }

    pub(crate) fn into_raw(self) -> (CirculantGraph, Vec<Color>) {
        (self.graph, self.slots)
    }

    fn sync_antipodal(&mut self) {
        if self.graph.has_antipodal() {
            let n = self.graph.n();
            let s = self.graph.lengths().len();
            for u in n / 2..n {
                self.slots[u * s + s - 1] = self.slots[(u - n / 2) * s + s - 1];
            }
        }
    }

    pub fn graph(&self) -> &CirculantGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Color of the edge `(u, u + d)`; `d` must belong to the host's lengths.
    pub fn color(&self, u: usize, d: usize) -> Color {
        let k = self
            .graph
            .length_index(d)
            .unwrap_or_else(|| panic!("length {d} not in the host graph"));
        self.slots[(u % self.n()) * self.graph.lengths().len() + k]
    }

    pub fn edge_color(&self, e: CanonicalEdge) -> Color {
        self.color(e.u, e.d)
    }

    /// Color of the pair `{a, b}`, if it is an edge.
    pub fn color_between(&self, a: usize, b: usize) -> Option<Color> {
        self.graph.canonical(a, b).map(|e| self.edge_color(e))
    }

    pub fn edges(&self) -> impl Iterator<Item = (CanonicalEdge, Color)> + '_ {
        self.graph.edges().map(move |e| (e, self.edge_color(e)))
    }

    /// `(neighbor, length, color)` for every edge at `v`.
    pub fn incident(&self, v: usize) -> Vec<(usize, usize, Color)> {
        let n = self.n();
        let v = v % n;
        let mut out = Vec::with_capacity(self.graph.degree());
        for &d in self.graph.lengths() {
            out.push(((v + d) % n, d, self.color(v, d)));
            if 2 * d != n {
                let w = (v + n - d) % n;
                out.push((w, d, self.color(w, d)));
            }
        }
        out
    }

    pub fn incident_colors(&self, v: usize) -> Vec<Color> {
        self.incident(v).into_iter().map(|(_, _, c)| c).collect()
    }

    /// Distinct colors in use, in stable palette order.
    pub fn palette(&self) -> Palette {
        Palette::from_colors(self.slots.iter().copied())
    }

    /// The unique palette color absent at `v`, if exactly one is absent.
    pub fn missing_color(&self, v: usize) -> Option<Color> {
        missing_in(&self.palette(), &self.incident_colors(v))
    }

    /// Missing color of every vertex, computed against one palette.
    pub fn missing_colors(&self) -> Vec<Option<Color>> {
        let palette = self.palette();
        (0..self.n())
            .map(|v| missing_in(&palette, &self.incident_colors(v)))
            .collect()
    }

    pub fn map_colors(&self, f: impl Fn(Color) -> Color) -> Self {
        Self {
            graph: self.graph.clone(),
            slots: self.slots.iter().map(|&c| f(c)).collect(),
        }
    }

    /// The coloring restricted to the edges whose length lies in `lengths`.
    pub fn restrict(&self, lengths: &[usize]) -> Result<Self, ColoringError> {
        let graph = CirculantGraph::new(
            self.n(),
            lengths
                .iter()
                .copied()
                .filter(|&d| self.graph.length_index(d).is_some()),
        )?;
        Ok(Self::from_fn(graph, |u, d| self.color(u, d)))
    }

    /// `(a, b, color)` with `a < b`, sorted.
    pub fn edge_list(&self) -> Vec<(usize, usize, Color)> {
        let n = self.n();
        let mut out: Vec<_> = self
            .edges()
            .map(|(e, c)| {
                let (a, b) = e.sorted_endpoints(n);
                (a, b, c)
            })
            .collect();
        out.sort_unstable_by_key(|&(a, b, _)| (a, b));
        out
    }
}

fn missing_in(palette: &Palette, present: &[Color]) -> Option<Color> {
    let mut seen = vec![false; palette.len()];
    for c in present {
        if let Some(id) = palette.id_of(*c) {
            seen[id] = true;
        }
    }
    let mut absent = seen.iter().enumerate().filter(|(_, &s)| !s);
    match (absent.next(), absent.next()) {
        (Some((id, _)), None) => palette.get(id),
        _ => None,
    }
}
