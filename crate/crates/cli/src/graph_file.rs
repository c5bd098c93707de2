//! Graph files: a JSON document `{"n": 4, "edges": [[0, 1], ...]}` or a
//! plain edge list whose first line is `n <count>` followed by one `u v`
//! pair per line. Both may carry vertex labels.

use cdgraph::{Graph, GraphError};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("field `{field}`: {msg}")]
    Field { field: String, msg: String },
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("empty input")]
    Empty,
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<&'a [String]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Edgelist,
}

/// A graph with optional per-vertex labels. Labels ride along in every
/// output but never enter a computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub labels: Option<Vec<String>>,
}

impl GraphFile {
    pub fn new(graph: Graph) -> Self {
        GraphFile {
            graph,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, ParseError> {
        let expected = self.graph.vertex_count();
        if labels.len() != expected {
            return Err(ParseError::LabelCount {
                expected,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Picks the format from the first non-blank character.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        match text.trim_start().chars().next() {
            None => Err(ParseError::Empty),
            Some('{') => Self::parse_json(text),
            Some(_) => Self::parse_edgelist(text),
        }
    }

    pub fn parse_json(text: &str) -> Result<Self, ParseError> {
        let doc: Value = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
        let obj = doc
            .as_object()
            .ok_or_else(|| field("$", "expected an object"))?;
        let n = obj
            .get("n")
            .ok_or_else(|| field("n", "missing"))?
            .as_u64()
            .ok_or_else(|| field("n", "expected a non-negative integer"))? as usize;
        let raw_edges = obj
            .get("edges")
            .ok_or_else(|| field("edges", "missing"))?
            .as_array()
            .ok_or_else(|| field("edges", "expected an array of [u, v] pairs"))?;
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (i, e) in raw_edges.iter().enumerate() {
            let name = format!("edges[{i}]");
            let pair = e
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| field(&name, "expected a [u, v] pair"))?;
            let mut ends = [0usize; 2];
            for (k, x) in pair.iter().enumerate() {
                ends[k] = x
                    .as_u64()
                    .ok_or_else(|| field(&name, "vertex must be a non-negative integer"))?
                    as usize;
            }
            check_edge(n, ends[0], ends[1]).map_err(|msg| field(&name, &msg))?;
            edges.push((ends[0], ends[1]));
        }
        let file = GraphFile::new(Graph::new(n, edges)?);
        match obj.get("labels") {
            None | Some(Value::Null) => Ok(file),
            Some(Value::Array(items)) => {
                let labels = items
                    .iter()
                    .enumerate()
                    .map(|(i, v)| match v {
                        Value::String(s) => Ok(s.clone()),
                        Value::Number(x) => Ok(x.to_string()),
                        _ => Err(field(
                            &format!("labels[{i}]"),
                            "expected a string or number",
                        )),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                file.with_labels(labels)
            }
            Some(_) => Err(field("labels", "expected an array")),
        }
    }

    pub fn parse_edgelist(text: &str) -> Result<Self, ParseError> {
        let mut n = None;
        let mut labels = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |msg: &str| ParseError::Line {
                line,
                msg: msg.to_string(),
            };
            let mut words = content.split_whitespace();
            let first = words.next().expect("non-empty");
            let Some(n) = n else {
                if first != "n" {
                    return Err(err("expected header `n <count>`"));
                }
                let count = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .ok_or_else(|| err("header needs a non-negative vertex count"))?;
                if words.next().is_some() {
                    return Err(err("unexpected text after vertex count"));
                }
                n = Some(count);
                continue;
            };
            if first == "labels" {
                let rest = content["labels".len()..].trim();
                labels = Some(split_labels(rest));
                continue;
            }
            let u = first
                .parse::<usize>()
                .map_err(|_| err("expected two vertex indices"))?;
            let v = words
                .next()
                .and_then(|w| w.parse::<usize>().ok())
                .ok_or_else(|| err("expected two vertex indices"))?;
            if words.next().is_some() {
                return Err(err("expected exactly two vertex indices"));
            }
            check_edge(n, u, v).map_err(|msg| err(&msg))?;
            edges.push((u, v));
        }
        let n = n.ok_or(ParseError::Empty)?;
        let file = GraphFile::new(Graph::new(n, edges)?);
        match labels {
            Some(l) => file.with_labels(l),
            None => Ok(file),
        }
    }

    pub fn to_json(&self) -> String {
        let doc = JsonGraph {
            n: self.graph.vertex_count(),
            edges: self.graph.edges().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.as_deref(),
        };
        let mut out = serde_json::to_string(&doc).expect("plain data serializes");
        out.push('\n');
        out
    }

    pub fn to_edgelist(&self) -> String {
        let mut out = format!("n {}\n", self.graph.vertex_count());
        if let Some(labels) = &self.labels {
            out.push_str(&format!("labels {}\n", labels.join(",")));
        }
        for (u, v) in self.graph.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Edgelist => self.to_edgelist(),
        }
    }
}

/// Splits `p,q,r` into labels, trimming blanks.
pub fn split_labels(text: &str) -> Vec<String> {
    text.split(',').map(|s| s.trim().to_string()).collect()
}

fn field(name: &str, msg: &str) -> ParseError {
    ParseError::Field {
        field: name.to_string(),
        msg: msg.to_string(),
    }
}

fn check_edge(n: usize, u: usize, v: usize) -> Result<(), String> {
    if u >= n || v >= n {
        return Err(format!("edge ({u}, {v}) has an endpoint outside 0..{n}"));
    }
    if u == v {
        return Err(format!("self-loop at vertex {u}"));
    }
    Ok(())
}
