//! The vertex-distinguishing coloring `Ψ_C` of `K_{2R+1}` and the sequences
//! `C` used by the extensions.

use thiserror::Error;

use crate::arith::mod_inverse;
use crate::color::{Color, ColorError, ColorSequence};
use crate::coloring::EdgeColoring;
use crate::graph::{CirculantGraph, GraphError, LengthPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliqueError {
    #[error("sequence needs at least 3 colors")]
    TooShort,
    #[error("sequence_c_even needs an even R >= 2, got {0}")]
    NotEven(usize),
    #[error("sequence_c_odd needs an odd R >= 3, got {0}")]
    NotOdd(usize),
    #[error(transparent)]
    Color(#[from] ColorError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `Ψ_C`: edge `{a, b}` of `K_{2R+1}` gets `C[(a+b)/2]`, so vertex `i` misses `C[i]`.
pub fn psi(c: &ColorSequence) -> Result<EdgeColoring, CliqueError> {
    let k = c.len();
    if k < 3 {
        return Err(CliqueError::TooShort);
    }
    let inv2 = mod_inverse(2, k as i64).expect("odd order") as usize;
    let graph = CirculantGraph::full(k, k / 2)?;
    Ok(EdgeColoring::from_fn(graph, |a, d| {
        let b = a + d;
        c[((a + b) * inv2) % k]
    }))
}

/// The middle run of `C`: entry `i` is `l^{p}_{|Q^p| - ceil(2i / 2^{1+p})}` with `p = val(2i)`.
fn interior_line(partition: &LengthPartition, count: usize) -> Vec<Color> {
    (1..=count)
        .map(|i| {
            let p = (2 * i).trailing_zeros() as usize;
            let size = partition.class(p).len();
            let step = 1usize << (1 + p);
            Color::left(p, size - (2 * i).div_ceil(step))
        })
        .collect()
}

fn assemble(radius: usize, head: usize) -> Result<ColorSequence, CliqueError> {
    let partition = LengthPartition::new(radius)?;
    let line = interior_line(&partition, radius / 2);
    let mut out = Vec::with_capacity(2 * radius + 1);
    out.push(Color::Zero);
    out.extend((0..head).map(|i| Color::right(0, i)));
    out.extend(line.iter().copied());
    out.extend(line.iter().rev().map(|c| match *c {
        Color::Left { class, index } => Color::Right { class, index },
        other => other,
    }));
    out.extend((0..head).rev().map(|i| Color::left(0, i)));
    Ok(ColorSequence::new(out)?)
}

pub fn sequence_c_even(radius: usize) -> Result<ColorSequence, CliqueError> {
    if radius < 2 || radius % 2 == 1 {
        return Err(CliqueError::NotEven(radius));
    }
    assemble(radius, radius / 2)
}

pub fn sequence_c_odd(radius: usize) -> Result<ColorSequence, CliqueError> {
    if radius < 3 || radius.is_multiple_of(2) {
        return Err(CliqueError::NotOdd(radius));
    }
    assemble(radius, radius.div_ceil(2))
}

/// The sequence matching the parity of `R`.
pub fn sequence_c(radius: usize) -> Result<ColorSequence, CliqueError> {
    if radius.is_multiple_of(2) {
        sequence_c_even(radius)
    } else {
        sequence_c_odd(radius)
    }
}
