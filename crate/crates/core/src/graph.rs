//! Adjacency matrices from edge-list and Matrix Market files.
//!
//! Two input grammars are supported:
//!
//! * Edge list: optional `#` comment lines, then the vertex count on the
//!   first data line, then one `u v` pair per line with `1 <= u, v <= n`
//!   and `u != v`. Undirected, simple graphs only.
//! * Matrix Market coordinate files: `pattern symmetric` becomes an
//!   undirected graph; `integer general` and `integer symmetric` become
//!   exact matrices directly. Anything else is rejected as unsupported.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// A validated simple graph: 1-based vertex indices, normalized edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    directed: bool,
}

impl GraphSpec {
    /// Validates endpoints and normalizes: undirected edges are stored with
    /// the smaller endpoint first and duplicates are dropped.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, directed: bool) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::Validation("vertex count must be positive".into()));
        }
        let mut normalized = BTreeSet::new();
        for (u, v) in edges {
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(Error::Validation(format!(
                    "edge ({u}, {v}) has an endpoint outside 1..={vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::Validation(format!(
                    "loop at vertex {u}: simple graphs only"
                )));
            }
            let edge = if directed || u < v { (u, v) } else { (v, u) };
            normalized.insert(edge);
        }
        Ok(GraphSpec {
            vertex_count,
            edges: normalized.into_iter().collect(),
            directed,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Normalized edge list, sorted ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }
}

/// Parses the edge-list grammar. Blank lines and `#` comments are ignored;
/// the first data line is the vertex count.
pub fn parse_edge_list(text: &str) -> Result<GraphSpec> {
    let mut vertex_count: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match vertex_count {
            None => {
                let n: usize = tokens
                    .next()
                    .expect("nonempty line has a token")
                    .parse()
                    .map_err(|_| Error::Parse {
                        line: line_no,
                        message: "expected the vertex count, a positive integer".into(),
                    })?;
                if tokens.next().is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "vertex-count line must hold a single integer".into(),
                    });
                }
                if n == 0 {
                    return Err(Error::Validation("vertex count must be positive".into()));
                }
                vertex_count = Some(n);
            }
            Some(_) => {
                let parse_endpoint = |tok: Option<&str>| -> Result<usize> {
                    tok.and_then(|t| t.parse().ok()).ok_or(Error::Parse {
                        line: line_no,
                        message: "expected an edge line 'u v'".into(),
                    })
                };
                let u = parse_endpoint(tokens.next())?;
                let v = parse_endpoint(tokens.next())?;
                if tokens.next().is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "edge line must hold exactly two integers".into(),
                    });
                }
                edges.push((u, v));
            }
        }
    }
    let n = vertex_count.ok_or(Error::Parse {
        line: text.lines().count() + 1,
        message: "missing vertex-count line".into(),
    })?;
    GraphSpec::new(n, edges, false)
}

/// What a Matrix Market file denotes: a graph (pattern symmetric) or an
/// exact matrix (integer entries).
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixMarketContent<K: Field> {
    Graph(GraphSpec),
    Matrix(Matrix<K>),
}

/// Parses a Matrix Market coordinate file.
///
/// Supported headers (byte-exact on the keywords):
/// `%%MatrixMarket matrix coordinate pattern symmetric`,
/// `%%MatrixMarket matrix coordinate integer general`, and
/// `%%MatrixMarket matrix coordinate integer symmetric`.
pub fn parse_matrix_market<K: Field>(
    text: &str,
    ctx: K::Context,
) -> Result<MatrixMarketContent<K>> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty input".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 5 || fields[0] != "%%MatrixMarket" || fields[1] != "matrix" {
        return Err(Error::Parse {
            line: 1,
            message: "expected header '%%MatrixMarket matrix coordinate <field> <symmetry>'".into(),
        });
    }
    let (layout, field, symmetry) = (fields[2], fields[3], fields[4]);
    if layout != "coordinate" {
        return Err(Error::UnsupportedFormat(format!(
            "Matrix Market layout '{layout}' (only 'coordinate' is supported)"
        )));
    }
    match (field, symmetry) {
        ("pattern", "symmetric") | ("integer", "general") | ("integer", "symmetric") => {}
        _ => {
            return Err(Error::UnsupportedFormat(format!(
                "Matrix Market variant 'coordinate {field} {symmetry}'"
            )));
        }
    }

    // Size line: first non-comment, non-blank line after the header.
    let mut size_line = None;
    for (idx, raw) in lines.by_ref() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        size_line = Some((idx + 1, line));
        break;
    }
    let (size_no, size_text) = size_line.ok_or(Error::Parse {
        line: text.lines().count(),
        message: "missing size line".into(),
    })?;
    let dims: Vec<usize> = size_text
        .split_whitespace()
        .map(|t| t.parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse {
            line: size_no,
            message: "size line must hold three integers 'rows cols nnz'".into(),
        })?;
    if dims.len() != 3 {
        return Err(Error::Parse {
            line: size_no,
            message: "size line must hold three integers 'rows cols nnz'".into(),
        });
    }
    let (rows, cols, nnz) = (dims[0], dims[1], dims[2]);
    if rows != cols {
        return Err(Error::Validation(format!(
            "matrix must be square, got {rows} x {cols}"
        )));
    }
    if rows == 0 {
        return Err(Error::Validation("matrix order must be positive".into()));
    }

    let pattern = field == "pattern";
    let mirror = symmetry == "symmetric";
    let mut seen = BTreeSet::new();
    let mut entries: Vec<(usize, usize, i64)> = Vec::with_capacity(nnz);
    let mut count = 0usize;
    for (idx, raw) in lines {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let expected = if pattern { 2 } else { 3 };
        if tokens.len() != expected {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected {expected} fields per entry line"),
            });
        }
        let parse_idx = |tok: &str| -> Result<usize> {
            tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid index '{tok}'"),
            })
        };
        let i = parse_idx(tokens[0])?;
        let j = parse_idx(tokens[1])?;
        if i == 0 || j == 0 || i > rows || j > rows {
            return Err(Error::Validation(format!(
                "entry ({i}, {j}) outside the declared {rows} x {rows} shape"
            )));
        }
        if !seen.insert((i, j)) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("duplicate entry ({i}, {j})"),
            });
        }
        let value = if pattern {
            1
        } else {
            tokens[2].parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid integer value '{}'", tokens[2]),
            })?
        };
        entries.push((i, j, value));
        count += 1;
    }
    if count != nnz {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("size line declares {nnz} entries, found {count}"),
        });
    }

    if pattern {
        let edges = entries.iter().map(|&(i, j, _)| (i, j)).collect();
        return Ok(MatrixMarketContent::Graph(GraphSpec::new(
            rows, edges, false,
        )?));
    }

    let mut m = Matrix::zero(rows, ctx);
    for (i, j, value) in entries {
        *m.get_mut(i - 1, j - 1) = K::from_int(ctx, value);
        if mirror && i != j {
            *m.get_mut(j - 1, i - 1) = K::from_int(ctx, value);
        }
    }
    Ok(MatrixMarketContent::Matrix(m))
}

/// The 0/1 adjacency matrix of a graph over the working field: symmetric
/// iff the graph is undirected, zero diagonal always.
pub fn adjacency_matrix<K: Field>(g: &GraphSpec, ctx: K::Context) -> Matrix<K> {
    let mut m = Matrix::zero(g.vertex_count(), ctx);
    for &(u, v) in g.edges() {
        *m.get_mut(u - 1, v - 1) = K::one(ctx);
        if !g.is_directed() {
            *m.get_mut(v - 1, u - 1) = K::one(ctx);
        }
    }
    m
}
