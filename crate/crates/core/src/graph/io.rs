use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use super::{Graph, VertexId};
use crate::error::{Error, Result};

/// Input flavours accepted by [`load_edge_list`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeListFormat {
    /// One `u v` pair per line (SNAP/KONECT style). Extra numeric columns are ignored.
    EdgeList,
    /// DIMACS: `p` problem line, `e u v` edge lines, `c` comments.
    Dimacs,
}

impl FromStr for EdgeListFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(EdgeListFormat::EdgeList),
            "dimacs" => Ok(EdgeListFormat::Dimacs),
            other => Err(Error::InvalidParameter(format!(
                "unknown format `{other}` (expected edgelist or dimacs)"
            ))),
        }
    }
}

/// A parsed graph together with the original labels of its dense ids.
#[derive(Clone, Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// `original_ids[v]` is the label vertex `v` had in the input.
    pub original_ids: Vec<u64>,
    pub self_loops: usize,
    pub duplicate_edges: usize,
}

fn is_comment(line: &str) -> bool {
    line.starts_with('#') || line.starts_with('%') || line.starts_with('c')
}

fn parse_id(token: &str, line: usize) -> Result<u64> {
    token.parse::<u64>().map_err(|_| Error::Parse {
        line,
        message: format!("`{token}` is not a non-negative integer vertex id"),
    })
}

/// Parses an undirected edge list. Ids are densified in order of first
/// appearance; self-loops and repeated edges are dropped and counted.
pub fn load_edge_list<R: BufRead>(reader: R, format: EdgeListFormat) -> Result<LoadedGraph> {
    let mut dense: HashMap<u64, VertexId> = HashMap::new();
    let mut original_ids = Vec::new();
    let mut edges = Vec::new();
    let mut self_loops = 0;

    let mut intern = |id: u64| -> VertexId {
        *dense.entry(id).or_insert_with(|| {
            original_ids.push(id);
            (original_ids.len() - 1) as VertexId
        })
    };

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || is_comment(trimmed) {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        if format == EdgeListFormat::Dimacs {
            match tokens.next() {
                Some("p") => continue,
                Some("e") | Some("a") => {}
                Some(other) => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("unexpected DIMACS line type `{other}`"),
                    })
                }
                None => continue,
            }
        }
        let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: line_no,
                message: "expected two vertex ids".to_string(),
            });
        };
        let (a, b) = (parse_id(a, line_no)?, parse_id(b, line_no)?);
        let (u, v) = (intern(a), intern(b));
        if u == v {
            self_loops += 1;
        } else {
            edges.push((u.min(v), u.max(v)));
        }
    }

    if edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let listed = edges.len();
    let graph = Graph::from_edges(original_ids.len(), edges);
    Ok(LoadedGraph {
        duplicate_edges: listed - graph.m(),
        graph,
        original_ids,
        self_loops,
    })
}

pub fn read_edge_list_file(path: &Path, format: EdgeListFormat) -> Result<LoadedGraph> {
    let file = File::open(path)?;
    load_edge_list(BufReader::new(file), format)
}

/// Writes one `u v` line per edge. When `labels` is given, vertex `v` is
/// written as `labels[v]`.
pub fn write_edge_list<W: Write>(graph: &Graph, labels: Option<&[u64]>, mut out: W) -> Result<()> {
    for (u, v) in graph.edges() {
        match labels {
            Some(l) => writeln!(out, "{} {}", l[u as usize], l[v as usize])?,
            None => writeln!(out, "{u} {v}")?,
        }
    }
    out.flush()?;
    Ok(())
}
