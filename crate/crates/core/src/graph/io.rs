//! On-disk JSON form: `{"vertex_count": N, "edges": [[u, v], ...], "labels": [...]}`.
//! Writers emit every edge as `u < v` in ascending order; readers accept
//! either orientation.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphFile {
    pub fn into_graph(self) -> Result<Graph> {
        let graph = Graph::new(self.vertex_count, self.edges.into_iter().map(|[u, v]| (u, v)))?;
        match self.labels {
            Some(labels) => graph.with_labels(labels),
            None => Ok(graph),
        }
    }
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile {
            vertex_count: g.vertex_count(),
            edges: g.edges().map(|e| [e.u(), e.v()]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphFile::from(self)).expect("graph file serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        serde_json::from_str::<GraphFile>(text)?.into_graph()
    }
}
