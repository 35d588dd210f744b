use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Decomposition;
use crate::graph::Graph;
use crate::{Error, Result};

const FORMAT: &str = "pidecomp-decomposition";
const VERSION: u32 = 1;

/// On-disk form of a decomposition (JSON). The graph is referenced by the
/// SHA-256 of its canonical edge list so a decomposition cannot be loaded
/// against the wrong graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDocument {
    pub format: String,
    pub version: u32,
    pub vertex_count: usize,
    pub p: usize,
    pub graph_sha256: String,
    /// Sorted vertex lists.
    pub parts: Vec<Vec<usize>>,
}

impl DecompositionDocument {
    pub fn from_decomposition(d: &Decomposition) -> Self {
        DecompositionDocument {
            format: FORMAT.to_string(),
            version: VERSION,
            vertex_count: d.graph().vertex_count(),
            p: d.p(),
            graph_sha256: d.graph().content_hash(),
            parts: d.parts().to_vec(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: DecompositionDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        if doc.format != FORMAT || doc.version != VERSION {
            return Err(Error::input(format!(
                "unsupported document {:?} version {}",
                doc.format, doc.version
            )));
        }
        Ok(doc)
    }

    /// Rebuilds the decomposition, checking that `graph` is the one the
    /// document was written for.
    pub fn into_decomposition(self, graph: Arc<Graph>) -> Result<Decomposition> {
        if graph.vertex_count() != self.vertex_count {
            return Err(Error::input(format!(
                "document is for {} vertices, graph has {}",
                self.vertex_count,
                graph.vertex_count()
            )));
        }
        let hash = graph.content_hash();
        if hash != self.graph_sha256 {
            return Err(Error::input(format!(
                "graph hash mismatch: document {}, graph {hash}",
                self.graph_sha256
            )));
        }
        let mut parts = self.parts;
        for part in parts.iter_mut() {
            part.sort_unstable();
        }
        Decomposition::from_parts(graph, &parts, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn round_trip_and_hash_guard() {
        let g = Arc::new(generate(&FamilySpec::Cycle { n: 6 }).unwrap());
        let d = Decomposition::from_labels(g.clone(), &[0, 1, 2, 0, 1, 2], 2).unwrap();
        let text = DecompositionDocument::from_decomposition(&d).to_json();
        let back = DecompositionDocument::from_json(&text)
            .unwrap()
            .into_decomposition(g)
            .unwrap();
        assert_eq!(back, d);

        let other = Arc::new(generate(&FamilySpec::Path { n: 6 }).unwrap());
        let err = DecompositionDocument::from_json(&text)
            .unwrap()
            .into_decomposition(other)
            .unwrap_err();
        assert!(err.to_string().contains("hash"));
        assert!(DecompositionDocument::from_json("{").is_err());
    }
}
