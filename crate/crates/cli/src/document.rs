//! On-disk form of a coloring: JSON document, DOT drawing, CSV edge list.

use std::fmt::Write;
use std::str::FromStr;

use avd_core::{CirculantGraph, Color, ColoringError, Construction, EdgeColoring};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported formatVersion {0}")]
    Version(u32),
    #[error("palette entry {position} has id {id}")]
    PaletteId { position: usize, id: usize },
    #[error("palette entry {id}: {source}")]
    ColorName {
        id: usize,
        source: avd_core::ColorError,
    },
    #[error("palette lists a color twice")]
    PaletteDuplicate,
    #[error("edge ({u}, {v}) refers to color id {id} outside the palette")]
    ColorId { u: usize, v: usize, id: usize },
    #[error("edge ({u}, {v}) is not written with u < v < n")]
    EdgeOrder { u: usize, v: usize },
    #[error("graph: {0}")]
    Graph(#[from] avd_core::GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaletteEntry {
    pub id: usize,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Provenance {
    Construction {
        cuts: Vec<usize>,
        u: usize,
        v: usize,
        w: Vec<Vec<usize>>,
    },
    Label(String),
}

impl Provenance {
    pub fn external() -> Self {
        Provenance::Label("external".to_string())
    }
}

/// Fields are declared in key order so the JSON output has sorted keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub edges: Vec<(usize, usize, usize)>,
    #[serde(rename = "formatVersion")]
    pub format_version: u32,
    pub lengths: Vec<usize>,
    pub n: usize,
    pub palette: Vec<PaletteEntry>,
    pub provenance: Provenance,
    pub r: usize,
}

const DOT_COLORS: [&str; 25] = [
    "black",
    "red",
    "blue",
    "forestgreen",
    "orange",
    "purple",
    "brown",
    "deeppink",
    "cyan4",
    "gold3",
    "navy",
    "olivedrab",
    "maroon",
    "darkorchid",
    "teal",
    "chocolate",
    "slateblue",
    "crimson",
    "darkgreen",
    "steelblue",
    "sienna",
    "magenta",
    "darkgoldenrod",
    "indigo",
    "gray40",
];

impl ColoringDocument {
    pub fn from_coloring(c: &EdgeColoring, provenance: Provenance) -> Self {
        let palette = c.palette();
        let edges = c
            .edge_list()
            .into_iter()
            .map(|(a, b, col)| (a, b, palette.id_of(col).expect("own palette")))
            .collect();
        let lengths = c.graph().lengths().to_vec();
        Self {
            edges,
            format_version: FORMAT_VERSION,
            r: lengths.last().copied().unwrap_or(0),
            lengths,
            n: c.n(),
            palette: palette
                .colors()
                .iter()
                .enumerate()
                .map(|(id, col)| PaletteEntry {
                    id,
                    name: col.to_string(),
                })
                .collect(),
            provenance,
        }
    }

    pub fn from_construction(c: &Construction) -> Self {
        let plan = &c.plan;
        let provenance = match (plan.solution, plan.anchors.as_ref()) {
            (Some(s), Some(w)) => Provenance::Construction {
                cuts: plan.cuts.clone(),
                u: s.extensions,
                v: s.periods,
                w: w.sets().to_vec(),
            },
            _ => Provenance::Construction {
                cuts: Vec::new(),
                u: 0,
                v: plan.n / 3,
                w: Vec::new(),
            },
        };
        Self::from_coloring(&c.coloring, provenance)
    }

    /// Parses and checks internal consistency; graph shape is left to the verifier.
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = serde_json::from_str(text)?;
        if doc.format_version != FORMAT_VERSION {
            return Err(DocumentError::Version(doc.format_version));
        }
        doc.colors()?;
        for &(u, v, id) in &doc.edges {
            if u >= v || v >= doc.n {
                return Err(DocumentError::EdgeOrder { u, v });
            }
            if id >= doc.palette.len() {
                return Err(DocumentError::ColorId { u, v, id });
            }
        }
        Ok(doc)
    }

    /// Palette colors indexed by id.
    pub fn colors(&self) -> Result<Vec<Color>, DocumentError> {
        let mut out = Vec::with_capacity(self.palette.len());
        for (position, entry) in self.palette.iter().enumerate() {
            if entry.id != position {
                return Err(DocumentError::PaletteId {
                    position,
                    id: entry.id,
                });
            }
            let color =
                Color::from_str(&entry.name).map_err(|source| DocumentError::ColorName {
                    id: entry.id,
                    source,
                })?;
            if out.contains(&color) {
                return Err(DocumentError::PaletteDuplicate);
            }
            out.push(color);
        }
        Ok(out)
    }

    pub fn graph(&self) -> Result<CirculantGraph, DocumentError> {
        Ok(CirculantGraph::new(self.n, self.lengths.iter().copied())?)
    }

    /// The coloring, if the edges are exactly those of the declared circulant.
    pub fn to_coloring(&self) -> Result<Result<EdgeColoring, ColoringError>, DocumentError> {
        let colors = self.colors()?;
        let graph = self.graph()?;
        Ok(EdgeColoring::from_edges(
            graph,
            self.edges.iter().map(|&(u, v, id)| (u, v, colors[id])),
        ))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph circulant {\n  node [shape=circle];\n");
        for v in 0..self.n {
            writeln!(s, "  {v} [label=\"{v}\"];").unwrap();
        }
        for &(u, v, id) in &self.edges {
            let name = &self.palette[id].name;
            let visual = DOT_COLORS[id % DOT_COLORS.len()];
            writeln!(s, "  {u} -- {v} [color=\"{visual}\", label=\"{name}\"];").unwrap();
        }
        s.push_str("}\n");
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("u,v,color\n");
        for &(u, v, id) in &self.edges {
            writeln!(s, "{u},{v},{}", self.palette[id].name).unwrap();
        }
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Dot => self.to_dot(),
            Format::Csv => self.to_csv(),
        }
    }
}
