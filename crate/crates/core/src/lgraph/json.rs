use serde::{Deserialize, Serialize};

use super::{Edge, LabeledGraph};
use crate::error::{Error, Result};
use crate::permgroup::{Domain, Label};

/// Wire form: `{"labels":[...],"edges":[["1","3"],...],"root":"1"}`.
///
/// Edge endpoints are written in label order and edges are sorted; `root`
/// is omitted for unrooted graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub labels: Vec<String>,
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
}

fn parse_at(path: &str, s: &str) -> Result<Label> {
    s.parse()
        .map_err(|e: Error| Error::Format(format!("{path}: {e}")))
}

impl LabeledGraph {
    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            labels: self.labels().iter().map(|l| l.to_string()).collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|e| [e.a().to_string(), e.b().to_string()])
                .collect(),
            root: self.root().map(|r| r.to_string()),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("plain data serializes")
    }

    pub fn from_json(j: &GraphJson) -> Result<LabeledGraph> {
        let labels = j
            .labels
            .iter()
            .enumerate()
            .map(|(k, s)| parse_at(&format!("labels[{k}]"), s))
            .collect::<Result<Vec<_>>>()?;
        let domain = Domain::new(labels).map_err(|e| Error::Format(format!("labels: {e}")))?;
        let mut edges = Vec::with_capacity(j.edges.len());
        for (k, [a, b]) in j.edges.iter().enumerate() {
            let (la, lb) = (
                parse_at(&format!("edges[{k}][0]"), a)?,
                parse_at(&format!("edges[{k}][1]"), b)?,
            );
            for (side, l) in [(0, &la), (1, &lb)] {
                if !domain.contains(l) {
                    return Err(Error::Format(format!(
                        "edges[{k}][{side}]: unknown label `{l}`"
                    )));
                }
            }
            edges.push(Edge::new(la, lb).map_err(|e| Error::Format(format!("edges[{k}]: {e}")))?);
        }
        let root = j.root.as_deref().map(|r| parse_at("root", r)).transpose()?;
        if let Some(r) = &root {
            if !domain.contains(r) {
                return Err(Error::Format(format!("root: unknown label `{r}`")));
            }
        }
        LabeledGraph::new(&domain, edges, root.as_ref()).map_err(|e| match e {
            Error::DuplicateEdge(d) => Error::Format(format!("edges: edge {d} listed twice")),
            other => other,
        })
    }

    /// Parses the JSON graph format; errors name the offending path.
    pub fn from_json_str(text: &str) -> Result<LabeledGraph> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let j: GraphJson = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            if path == "." {
                Error::Format(inner.to_string())
            } else {
                Error::Format(format!("{path}: {inner}"))
            }
        })?;
        LabeledGraph::from_json(&j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let g = LabeledGraph::numbered(3, &[(3, 1), (2, 3)], Some(1)).unwrap();
        assert_eq!(
            g.to_json_string(),
            r#"{"labels":["1","2","3"],"edges":[["1","3"],["2","3"]],"root":"1"}"#
        );
        assert_eq!(LabeledGraph::from_json_str(&g.to_json_string()).unwrap(), g);
        let u = g.unrooted();
        assert_eq!(
            u.to_json_string(),
            r#"{"labels":["1","2","3"],"edges":[["1","3"],["2","3"]]}"#
        );
    }

    #[test]
    fn errors_name_the_path() {
        let bad = r#"{"labels":["1","2"],"edges":[["1","9"]]}"#;
        let e = LabeledGraph::from_json_str(bad).unwrap_err().to_string();
        assert!(e.contains("edges[0][1]"), "{e}");
        let bad = r#"{"labels":["1","2"],"edges":[["1",2]]}"#;
        let e = LabeledGraph::from_json_str(bad).unwrap_err().to_string();
        assert!(e.contains("edges[0][1]"), "{e}");
        let bad = r#"{"edges":[]}"#;
        let e = LabeledGraph::from_json_str(bad).unwrap_err().to_string();
        assert!(e.contains("labels"), "{e}");
        let bad = r#"{"labels":["1","1"],"edges":[]}"#;
        assert!(LabeledGraph::from_json_str(bad).is_err());
        let bad = r#"{"labels":["1","2"],"edges":[["1","1"]]}"#;
        assert!(LabeledGraph::from_json_str(bad).is_err());
    }

    #[test]
    fn pair_labels_round_trip() {
        let j = r#"{"labels":["1.1","2.1","1.2","2.2"],"edges":[["1.1","2.1"],["1.1","1.2"]],"root":"1.1"}"#;
        let g = LabeledGraph::from_json_str(j).unwrap();
        assert!(g.labels()[0].as_pair().is_some());
        assert_eq!(g.to_json_string(), j);
    }
}
