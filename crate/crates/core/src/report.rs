use std::fmt;

use crate::hypergraph::VertexId;

/// One broken invariant of a forest or of a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Uniformity { b: u32, n: u32 },
    MalformedEdge { index: usize, vertices: Vec<VertexId>, reason: String },
    DuplicateEdge { vertices: Vec<VertexId> },
    OverlappingEdges { first: Vec<VertexId>, second: Vec<VertexId> },
    RootOutOfRange { root: VertexId },
    DuplicateRoot { root: VertexId },
    NoRoots,
    ComponentExcess { component: VertexId, excess: i64 },
    ComponentWithoutRoot { component: VertexId },
    ComponentWithSeveralRoots { component: VertexId, roots: Vec<VertexId> },
    ShapeMismatch { n: u64, s: u64, b: u32, roots: u64 },

    RootCount { expected: u64, found: u64 },
    FinalRootMissing,
    FinalRootUnexpected { r: VertexId },
    FinalRootNotInRoots { r: VertexId },
    BlockCount { expected: u64, found: u64 },
    BlockSize { block: Vec<VertexId>, expected: u32 },
    BlockVertexOutOfRange { vertex: VertexId },
    BlockContainsRoot { vertex: VertexId },
    VertexInSeveralBlocks { vertex: VertexId },
    VertexUncovered { vertex: VertexId },
    LinkCount { expected: u64, found: u64 },
    LinkOutOfRange { position: usize, vertex: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            Uniformity { b, n } => write!(f, "uniformity b={b} outside [2, n={n}]"),
            MalformedEdge { index, vertices, reason } => {
                write!(f, "hyperedge #{index} {vertices:?}: {reason}")
            }
            DuplicateEdge { vertices } => write!(f, "duplicate hyperedge {vertices:?}"),
            OverlappingEdges { first, second } => {
                write!(f, "hyperedges {first:?} and {second:?} share more than one vertex")
            }
            RootOutOfRange { root } => write!(f, "root {root} out of range"),
            DuplicateRoot { root } => write!(f, "root {root} listed twice"),
            NoRoots => write!(f, "no roots"),
            ComponentExcess { component, excess } => {
                write!(f, "component excess {excess} ≠ −1 (component of vertex {component})")
            }
            ComponentWithoutRoot { component } => {
                write!(f, "component without root (component of vertex {component})")
            }
            ComponentWithSeveralRoots { component, roots } => write!(
                f,
                "component of vertex {component} holds several roots {roots:?}"
            ),
            ShapeMismatch { n, s, b, roots } => write!(
                f,
                "n={n} ≠ s(b−1)+k+1 with s={s}, b={b}, k+1={roots}"
            ),
            RootCount { expected, found } => write!(f, "|R|={found}, expected k+1={expected}"),
            FinalRootMissing => write!(f, "r is missing although s ≥ 1"),
            FinalRootUnexpected { r } => write!(f, "r={r} given although s = 0"),
            FinalRootNotInRoots { r } => write!(f, "r ∉ R (r={r})"),
            BlockCount { expected, found } => write!(f, "|P|={found} ≠ s={expected}"),
            BlockSize { block, expected } => {
                write!(f, "block {block:?} does not have b−1={expected} distinct vertices")
            }
            BlockVertexOutOfRange { vertex } => write!(f, "block vertex {vertex} out of range"),
            BlockContainsRoot { vertex } => write!(f, "root {vertex} appears in a block"),
            VertexInSeveralBlocks { vertex } => write!(f, "vertex {vertex} in several blocks"),
            VertexUncovered { vertex } => write!(f, "vertex {vertex} is neither a root nor in a block"),
            LinkCount { expected, found } => write!(f, "|N|={found} ≠ s−1={expected}"),
            LinkOutOfRange { position, vertex } => {
                write!(f, "N[{position}]={vertex} out of range")
            }
        }
    }
}

/// Outcome of a validation pass. Violations are collected, never thrown.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Number of hyperedges.
    pub s: u64,
    /// Number of roots minus one, when there is at least one root.
    pub k: Option<u64>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
