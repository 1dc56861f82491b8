//! JSON exchange format for graphs.
//!
//! ```json
//! {"vertices": ["x", "a"], "edges": [["x", "x"], ["x", "a"]], "basepoint": "x"}
//! ```
//!
//! Each edge is listed once; a loop is `["v", "v"]`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{Graph, PointedGraph};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
    #[serde(default)]
    pub basepoint: Option<String>,
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<GraphFile> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph files always serialise")
    }

    pub fn from_graph(g: &Graph) -> GraphFile {
        GraphFile {
            vertices: g.labels().to_vec(),
            edges: g
                .edges()
                .map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()])
                .collect(),
            basepoint: None,
        }
    }

    pub fn from_pointed(g: &PointedGraph) -> GraphFile {
        GraphFile {
            basepoint: Some(g.graph().label(g.basepoint()).to_string()),
            ..GraphFile::from_graph(g.graph())
        }
    }

    /// Validate and build the graph, ignoring any basepoint.
    pub fn to_graph(&self) -> Result<Graph> {
        let g = Graph::empty(self.vertices.clone())?;
        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for [a, b] in &self.edges {
            let u = g.index_of(a).ok_or_else(|| Error::UnknownVertex(a.clone()))?;
            let v = g.index_of(b).ok_or_else(|| Error::UnknownVertex(b.clone()))?;
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(a.clone(), b.clone()));
            }
            edges.push((u, v));
        }
        Graph::from_edges(self.vertices.clone(), &edges)
    }

    pub fn to_pointed(&self) -> Result<PointedGraph> {
        let g = self.to_graph()?;
        let name = self.basepoint.as_ref().ok_or(Error::MissingBasepoint)?;
        let base = g.index_of(name).ok_or_else(|| Error::UnknownVertex(name.clone()))?;
        PointedGraph::new(g, base)
    }
}
