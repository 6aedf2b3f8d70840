//! Structured colors `0⁰`, `l^p_i`, `r^p_i`, palettes and color sequences.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::LengthPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Zero,
    Left { class: u8, index: u16 },
    Right { class: u8, index: u16 },
}

impl Color {
    pub fn left(class: usize, index: usize) -> Self {
        Color::Left {
            class: class as u8,
            index: index as u16,
        }
    }

    pub fn right(class: usize, index: usize) -> Self {
        Color::Right {
            class: class as u8,
            index: index as u16,
        }
    }

    pub fn class(&self) -> usize {
        match *self {
            Color::Zero => 0,
            Color::Left { class, .. } | Color::Right { class, .. } => class as usize,
        }
    }

    /// Same side and index, moved to class `p`.
    pub fn with_class(&self, p: usize) -> Self {
        match *self {
            Color::Zero => Color::Zero,
            Color::Left { index, .. } => Color::left(p, index as usize),
            Color::Right { index, .. } => Color::right(p, index as usize),
        }
    }

    /// Sort key matching the stable palette order.
    pub fn order_key(&self) -> (usize, u8, usize) {
        match *self {
            Color::Zero => (0, 0, 0),
            Color::Left { class, index } => (class as usize, 1, index as usize),
            Color::Right { class, index } => (class as usize, 2, index as usize),
        }
    }
}

impl PartialOrd for Color {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Color {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Color::Zero => write!(f, "0^0"),
            Color::Left { class, index } => write!(f, "l^{class}_{index}"),
            Color::Right { class, index } => write!(f, "r^{class}_{index}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("cannot parse color {0:?}")]
    Parse(String),
    #[error("color sequence has even length {0}")]
    EvenLength(usize),
    #[error("color {0} appears twice in the sequence")]
    Duplicate(Color),
}

impl FromStr for Color {
    type Err = ColorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ColorError::Parse(s.to_string());
        let t = s.trim();
        if t == "0^0" || t == "0" {
            return Ok(Color::Zero);
        }
        let (side, rest) = t.split_at(t.chars().next().map_or(0, char::len_utf8));
        let rest = rest.strip_prefix('^').ok_or_else(bad)?;
        let (class, index) = rest.split_once('_').ok_or_else(bad)?;
        let class: u8 = class.parse().map_err(|_| bad())?;
        let index: u16 = index.parse().map_err(|_| bad())?;
        match side {
            "l" => Ok(Color::Left { class, index }),
            "r" => Ok(Color::Right { class, index }),
            _ => Err(bad()),
        }
    }
}

/// A set of colors with stable integer ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    colors: Vec<Color>,
}

impl Palette {
    /// Palette from arbitrary colors: deduplicated and sorted in the stable order.
    pub fn from_colors(colors: impl IntoIterator<Item = Color>) -> Self {
        let mut colors: Vec<Color> = colors.into_iter().collect();
        colors.sort();
        colors.dedup();
        Self { colors }
    }

    /// The `2R+1` colors used on `C_n([1, R])`.
    pub fn for_partition(partition: &LengthPartition) -> Self {
        let mut colors = vec![Color::Zero];
        for (p, class) in partition.classes().iter().enumerate() {
            colors.extend((0..class.len()).map(|i| Color::left(p, i)));
            colors.extend((0..class.len()).map(|i| Color::right(p, i)));
        }
        Self { colors }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn id_of(&self, c: Color) -> Option<usize> {
        self.colors.binary_search(&c).ok()
    }

    pub fn get(&self, id: usize) -> Option<Color> {
        self.colors.get(id).copied()
    }
}

/// A sequence of pairwise distinct colors of odd length `2R+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorSequence(Vec<Color>);

impl ColorSequence {
    pub fn new(colors: Vec<Color>) -> Result<Self, ColorError> {
        if colors.len().is_multiple_of(2) {
            return Err(ColorError::EvenLength(colors.len()));
        }
        let mut seen = HashSet::with_capacity(colors.len());
        for &c in &colors {
            if !seen.insert(c) {
                return Err(ColorError::Duplicate(c));
            }
        }
        Ok(Self(colors))
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `R` for a sequence of length `2R+1`.
    pub fn radius(&self) -> usize {
        self.0.len() / 2
    }

    pub fn map(&self, f: impl Fn(Color) -> Color) -> Result<Self, ColorError> {
        Self::new(self.0.iter().map(|&c| f(c)).collect())
    }
}

impl std::ops::Index<usize> for ColorSequence {
    type Output = Color;

    fn index(&self, i: usize) -> &Color {
        &self.0[i]
    }
}
