use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{GraphError, LabeledGraph, Result};

/// Construction parameters echoed into exports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMetadata {
    /// Graph kind, e.g. `enhanced-power`.
    pub graph: String,
    /// Canonical group spec.
    pub group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<usize>>,
    /// Group element per vertex.
    pub elements: Vec<usize>,
}

/// JSON form: `{"vertices": [labels], "edges": [[i, j], ...]}` with `i < j`,
/// edges sorted, plus optional metadata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<GraphMetadata>,
}

impl LabeledGraph {
    pub fn to_json_value(&self, metadata: Option<GraphMetadata>) -> GraphJson {
        GraphJson {
            vertices: self.labels.clone(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            metadata,
        }
    }

    pub fn to_json(&self, metadata: Option<GraphMetadata>) -> String {
        serde_json::to_string(&self.to_json_value(metadata)).expect("graph JSON serializes")
    }

    /// Rebuilds a graph from its JSON export. Vertex elements come from the
    /// metadata when present, otherwise they are the vertex indices.
    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Self::from_json_value(parsed)
    }

    pub fn from_json_value(parsed: GraphJson) -> Result<Self> {
        let n = parsed.vertices.len();
        let elements = match parsed.metadata {
            Some(meta) if meta.elements.len() != n => {
                return Err(GraphError::SizeMismatch { expected: n, actual: meta.elements.len() })
            }
            Some(meta) => meta.elements,
            None => (0..n).collect(),
        };
        let mut g = LabeledGraph::edgeless(elements, parsed.vertices);
        for [u, v] in parsed.edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graphviz DOT, vertices in index order and edges in lexicographic order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "graph {} {{", quote(name)).unwrap();
        for v in 0..self.order() {
            writeln!(out, "  {v} [label={}];", quote(&self.labels[v])).unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let g = LabeledGraph::from_edges(4, [(2, 3), (0, 1), (1, 3)]).unwrap();
        let text = g.to_json(None);
        assert_eq!(text, r#"{"vertices":["0","1","2","3"],"edges":[[0,1],[1,3],[2,3]]}"#);
        assert_eq!(LabeledGraph::from_json(&text).unwrap(), g);
    }

    #[test]
    fn metadata_carries_elements() {
        let mut g = LabeledGraph::edgeless(vec![0, 5, 7], vec!["e".into(), "a".into(), "b".into()]);
        g.add_edge(0, 2).unwrap();
        let meta = GraphMetadata {
            graph: "custom".into(),
            group: "cyclic:8".into(),
            subgroup: None,
            elements: vec![0, 5, 7],
        };
        let back = LabeledGraph::from_json(&g.to_json(Some(meta))).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn bad_json() {
        assert!(LabeledGraph::from_json("{").is_err());
        assert!(LabeledGraph::from_json(r#"{"vertices":["a"],"edges":[[0,1]]}"#).is_err());
        assert!(LabeledGraph::from_json(r#"{"vertices":["a","b"],"edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn dot_layout() {
        let g = LabeledGraph::path(3);
        assert_eq!(
            g.to_dot("P3"),
            "graph \"P3\" {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  2 [label=\"2\"];\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }
}
