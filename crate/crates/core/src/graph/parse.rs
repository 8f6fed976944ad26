use std::fmt;

use super::{Graph, GraphDocument};
use crate::error::{Error, Result};

/// Non-fatal findings while reading a graph. The graph is still usable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseWarning {
    DuplicateEdge {
        line: Option<usize>,
        a: String,
        b: String,
    },
}

impl fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseWarning::DuplicateEdge {
                line: Some(l),
                a,
                b,
            } => {
                write!(f, "line {l}: duplicate edge {a} {b} ignored")
            }
            ParseWarning::DuplicateEdge { line: None, a, b } => {
                write!(f, "duplicate edge {a} {b} ignored")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: Vec<ParseWarning>,
}

/// Reads either the edge-list format or the JSON document format.
///
/// Input whose first non-blank character is `{` is treated as JSON.
pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    if text.trim_start().starts_with('{') {
        parse_document(text)
    } else {
        parse_edge_list(text)
    }
}

fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut graph = Graph::empty();
    let mut warnings = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [a, b] => {
                if a == b {
                    return Err(Error::Parse {
                        line,
                        msg: format!("loop edge at vertex `{a}`"),
                    });
                }
                let ia = graph.intern(a)?;
                let ib = graph.intern(b)?;
                if !graph.insert_edge(ia, ib)? {
                    warnings.push(ParseWarning::DuplicateEdge {
                        line: Some(line),
                        a: a.to_string(),
                        b: b.to_string(),
                    });
                }
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected two vertex tokens, found {}", tokens.len()),
                })
            }
        }
    }
    Ok(ParsedGraph { graph, warnings })
}

fn parse_document(text: &str) -> Result<ParsedGraph> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    let mut graph = Graph::empty();
    let explicit = doc.vertices.is_some();
    for v in doc.vertices.iter().flatten() {
        if graph.index_of(v).is_some() {
            return Err(Error::DuplicateVertex(v.clone()));
        }
        graph.intern(v)?;
    }
    let mut warnings = Vec::new();
    for [a, b] in &doc.edges {
        let lookup = |g: &mut Graph, name: &str| -> Result<usize> {
            if explicit {
                g.index_of(name)
                    .ok_or_else(|| Error::UnknownVertex(name.to_string()))
            } else {
                g.intern(name)
            }
        };
        let ia = lookup(&mut graph, a)?;
        let ib = lookup(&mut graph, b)?;
        if !graph.insert_edge(ia, ib)? {
            warnings.push(ParseWarning::DuplicateEdge {
                line: None,
                a: a.clone(),
                b: b.clone(),
            });
        }
    }
    Ok(ParsedGraph { graph, warnings })
}
