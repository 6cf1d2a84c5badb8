//! Input formats: dense matrix text and the format dispatcher.
//!
//! The dense format is one line with the order `n`, then `n` lines of `n`
//! whitespace-separated scalars in the textual scalar format of the working
//! field (`a` or `a/b` for rationals, decimal residues for GF(p)).

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{adjacency_matrix, parse_edge_list, parse_matrix_market, MatrixMarketContent};
use crate::matrix::Matrix;

/// Input file format selected at the CLI boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Dense,
    Edges,
    MatrixMarket,
}

impl InputFormat {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "dense" => Ok(InputFormat::Dense),
            "edges" => Ok(InputFormat::Edges),
            "mm" => Ok(InputFormat::MatrixMarket),
            other => Err(Error::UnsupportedFormat(format!(
                "'{other}': expected 'dense', 'edges', or 'mm'"
            ))),
        }
    }
}

/// Parses the dense matrix text format.
pub fn parse_dense_matrix<K: Field>(text: &str, ctx: K::Context) -> Result<Matrix<K>> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (first_no, first) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty input".into(),
    })?;
    let order: usize = first.trim().parse().map_err(|_| Error::Parse {
        line: first_no + 1,
        message: "first line must hold the matrix order".into(),
    })?;
    if order == 0 {
        return Err(Error::Validation("matrix order must be positive".into()));
    }
    let mut rows = Vec::with_capacity(order);
    for _ in 0..order {
        let (idx, line) = lines.next().ok_or(Error::Parse {
            line: text.lines().count() + 1,
            message: format!("expected {order} matrix rows"),
        })?;
        let line_no = idx + 1;
        let row: Vec<K> = line
            .split_whitespace()
            .map(|tok| {
                K::parse(ctx, tok).map_err(|e| Error::Parse {
                    line: line_no,
                    message: e.to_string(),
                })
            })
            .collect::<Result<_>>()?;
        if row.len() != order {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected {order} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if let Some((idx, _)) = lines.next() {
        return Err(Error::Parse {
            line: idx + 1,
            message: "trailing content after the matrix rows".into(),
        });
    }
    Matrix::from_rows(rows)
}

/// Loads a matrix from text in any supported input format, mapping graphs
/// to their adjacency matrices.
pub fn load_matrix<K: Field>(
    text: &str,
    format: InputFormat,
    ctx: K::Context,
) -> Result<Matrix<K>> {
    match format {
        InputFormat::Dense => parse_dense_matrix(text, ctx),
        InputFormat::Edges => Ok(adjacency_matrix(&parse_edge_list(text)?, ctx)),
        InputFormat::MatrixMarket => match parse_matrix_market::<K>(text, ctx)? {
            MatrixMarketContent::Graph(g) => Ok(adjacency_matrix(&g, ctx)),
            MatrixMarketContent::Matrix(m) => Ok(m),
        },
    }
}
