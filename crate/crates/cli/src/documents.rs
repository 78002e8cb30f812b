//! JSON documents read and written by the command line tool.
//!
//! Output is always compact JSON with fields in declaration order, so equal
//! values serialize to identical bytes.

use serde::{Deserialize, Serialize};

use hyperforest::{ForestCode, ForestShape, Hypergraph, RootedForest, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ForestDocument {
    pub n: u32,
    pub b: u32,
    pub edges: Vec<Vec<VertexId>>,
    pub roots: Vec<VertexId>,
}

impl ForestDocument {
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.n, self.b, self.edges.clone(), self.roots.clone())
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        ForestDocument {
            n: h.n(),
            b: h.b(),
            edges: h.edges().iter().map(|e| e.vertices().to_vec()).collect(),
            roots: h.roots().to_vec(),
        }
    }

    pub fn from_forest(forest: &RootedForest) -> Self {
        Self::from_hypergraph(forest.as_hypergraph())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeDocument {
    pub b: u32,
    pub s: u32,
    pub k: u32,
    #[serde(rename = "R")]
    pub roots: Vec<VertexId>,
    #[serde(default)]
    pub r: Option<VertexId>,
    #[serde(rename = "P")]
    pub blocks: Vec<Vec<VertexId>>,
    #[serde(rename = "N")]
    pub links: Vec<VertexId>,
}

impl CodeDocument {
    pub fn to_code(&self) -> hyperforest::Result<ForestCode> {
        let shape = ForestShape::new(self.b, self.s, self.k)?;
        Ok(ForestCode::new(shape, self.roots.clone(), self.r, self.blocks.clone(), self.links.clone()))
    }

    pub fn from_code(code: &ForestCode) -> Self {
        let shape = code.shape();
        CodeDocument {
            b: shape.b(),
            s: shape.s(),
            k: shape.k(),
            roots: code.roots().to_vec(),
            r: code.final_root(),
            blocks: code.blocks().to_vec(),
            links: code.links().to_vec(),
        }
    }
}

/// Hypercycle records carry no roots.
#[derive(Debug, Clone, Serialize)]
pub struct EdgeSetDocument {
    pub n: u32,
    pub b: u32,
    pub edges: Vec<Vec<VertexId>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationDocument {
    pub document: &'static str,
    pub valid: bool,
    pub s: Option<u64>,
    pub k: Option<u64>,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CountDocument {
    pub kind: &'static str,
    pub b: u32,
    pub s: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<&'static str>,
    pub n: u64,
    pub count: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IndexDocument {
    pub b: u32,
    pub s: u32,
    pub k: u32,
    pub index: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdDocument {
    pub index: String,
    pub code: CodeDocument,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumerationSummary {
    pub kind: &'static str,
    pub b: u32,
    pub s: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiset: Option<bool>,
    pub count: String,
    /// The closed formula for the same space, where there is one.
    pub formula: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleClassRecord {
    pub j: u32,
    pub count: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditSummary {
    pub b: u32,
    pub s: u32,
    pub n: u32,
    pub closed_form: String,
    pub sum_form: String,
    pub cycle_length_total: String,
    pub oracle_set: String,
    pub oracle_multiset: String,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary<T> {
    pub summary: T,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorDocument {
    pub error: &'static str,
    pub message: String,
}
