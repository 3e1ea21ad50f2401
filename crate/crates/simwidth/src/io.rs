//! Text formats shared by the CLI and the library: edge lists, branch
//! decompositions, vertex orderings, chord models, and vertex weights.
//! Blank lines and `#` comments are ignored everywhere.

use std::collections::BTreeMap;

use crate::decomposition::{BranchDecomposition, NodeId};
use crate::error::{Error, Result};
use crate::generators::ChordModel;
use crate::graph::{Graph, VertexId};
use crate::solver::Weights;

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<const K: usize>(line: usize, text: &str) -> Result<[u64; K]> {
    let mut out = [0u64; K];
    let mut parts = text.split_whitespace();
    for slot in &mut out {
        let field = parts.next().ok_or(Error::Parse {
            line,
            msg: format!("expected {K} fields"),
        })?;
        *slot = field.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad number {field:?}"),
        })?;
    }
    if parts.next().is_some() {
        return Err(Error::Parse {
            line,
            msg: format!("expected exactly {K} fields"),
        });
    }
    Ok(out)
}

/// Edge-list format: header `n m`, then m lines `u v` with 0-based vertex
/// ids. Duplicate edges and self-loops are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "empty edge list".into(),
    })?;
    let [n, m] = parse_fields::<2>(header_line, header)?;
    let mut edges = Vec::with_capacity(m as usize);
    for _ in 0..m {
        let (line, text) = lines.next().ok_or(Error::Parse {
            line: header_line,
            msg: format!("expected {m} edges"),
        })?;
        let [u, v] = parse_fields::<2>(line, text)?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("vertex out of range 0..{n}"),
            });
        }
        edges.push((u as VertexId, v as VertexId));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            msg: "trailing content after the edge list".into(),
        });
    }
    Graph::from_edges(n as usize, &edges).map_err(|e| Error::Parse {
        line: header_line,
        msg: e.to_string(),
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decomposition format: header `t_nodes t_edges n`, then the tree edges,
/// then n lines `leaf_node graph_vertex`. Node ids are renumbered to
/// 0..t_nodes on write; linearity is inferred, not stored.
pub fn parse_decomposition(text: &str) -> Result<BranchDecomposition> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "empty decomposition".into(),
    })?;
    let [t_nodes, t_edges, n] = parse_fields::<3>(header_line, header)?;
    let mut edges = Vec::with_capacity(t_edges as usize);
    for _ in 0..t_edges {
        let (line, text) = lines.next().ok_or(Error::Parse {
            line: header_line,
            msg: format!("expected {t_edges} tree edges"),
        })?;
        let [x, y] = parse_fields::<2>(line, text)?;
        if x >= t_nodes || y >= t_nodes {
            return Err(Error::Parse {
                line,
                msg: format!("tree node out of range 0..{t_nodes}"),
            });
        }
        edges.push((x as NodeId, y as NodeId));
    }
    let mut leaf_map = BTreeMap::new();
    for _ in 0..n {
        let (line, text) = lines.next().ok_or(Error::Parse {
            line: header_line,
            msg: format!("expected {n} leaf assignments"),
        })?;
        let [leaf, vertex] = parse_fields::<2>(line, text)?;
        if leaf >= t_nodes {
            return Err(Error::Parse {
                line,
                msg: format!("leaf node out of range 0..{t_nodes}"),
            });
        }
        if leaf_map
            .insert(vertex as VertexId, leaf as NodeId)
            .is_some()
        {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {vertex} mapped twice"),
            });
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            msg: "trailing content after the decomposition".into(),
        });
    }
    BranchDecomposition::new(&edges, leaf_map).map_err(|e| Error::Parse {
        line: header_line,
        msg: e.to_string(),
    })
}

pub fn write_decomposition(d: &BranchDecomposition) -> String {
    let renumber: BTreeMap<NodeId, usize> = d.nodes().enumerate().map(|(i, x)| (x, i)).collect();
    let edges = d.edges();
    let mut out = format!("{} {} {}\n", renumber.len(), edges.len(), d.leaf_count());
    for e in &edges {
        out.push_str(&format!("{} {}\n", renumber[&e.0], renumber[&e.1]));
    }
    for (&v, leaf) in d.leaf_map() {
        out.push_str(&format!("{} {}\n", renumber[leaf], v));
    }
    out
}

/// Ordering format: one line of space-separated vertex ids.
pub fn parse_ordering(text: &str) -> Result<Vec<VertexId>> {
    let mut lines = data_lines(text);
    let (line, content) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "empty ordering".into(),
    })?;
    if let Some((extra, _)) = lines.next() {
        return Err(Error::Parse {
            line: extra,
            msg: "ordering must be a single line".into(),
        });
    }
    content
        .split_whitespace()
        .map(|field| {
            field.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("bad vertex id {field:?}"),
            })
        })
        .collect()
}

pub fn write_ordering(order: &[VertexId]) -> String {
    let fields: Vec<String> = order.iter().map(u32::to_string).collect();
    fields.join(" ") + "\n"
}

/// Chord model format: lines `vertex p1 p2` with 1-based circle points; the
/// point count is the header line `points`.
pub fn parse_chord_model(text: &str) -> Result<ChordModel> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "empty chord model".into(),
    })?;
    let [points] = parse_fields::<1>(header_line, header)?;
    let mut chords = BTreeMap::new();
    for (line, text) in lines {
        let [v, p1, p2] = parse_fields::<3>(line, text)?;
        if chords
            .insert(v as VertexId, (p1 as usize, p2 as usize))
            .is_some()
        {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} has two chords"),
            });
        }
    }
    Ok(ChordModel {
        circle_points: points as usize,
        chords,
    })
}

pub fn write_chord_model(model: &ChordModel) -> String {
    let mut out = format!("{}\n", model.circle_points);
    for (&v, &(p1, p2)) in &model.chords {
        out.push_str(&format!("{v} {p1} {p2}\n"));
    }
    out
}

/// Weights format: lines `vertex weight`; unlisted vertices weigh 1.
pub fn parse_weights(text: &str) -> Result<Weights> {
    let mut weights = Weights::new();
    for (line, text) in data_lines(text) {
        let [v, w] = parse_fields::<2>(line, text)?;
        if weights.insert(v as VertexId, w).is_some() {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} weighted twice"),
            });
        }
    }
    Ok(weights)
}
