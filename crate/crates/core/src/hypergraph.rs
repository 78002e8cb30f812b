//! Labelled uniform hypergraphs with distinguished roots.
//!
//! Vertices are labelled `1..=n`. A [`Hypergraph`] is any candidate input in
//! canonical form; a [`RootedForest`] is one that passed [`validate_forest`]:
//! every component has excess −1 and carries exactly one root.

use crate::error::{Error, Result};
use crate::report::{ValidationReport, Violation};
use crate::shape::ForestShape;

pub type VertexId = u32;

/// A hyperedge, stored with its vertices in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperedge(Vec<VertexId>);

impl Hyperedge {
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        Hyperedge(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }
}

impl From<Vec<VertexId>> for Hyperedge {
    fn from(vertices: Vec<VertexId>) -> Self {
        Hyperedge::new(vertices)
    }
}

/// An unchecked hypergraph on `[1, n]` with a root list, in canonical form:
/// edges sorted internally and lexicographically, roots sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: u32,
    b: u32,
    edges: Vec<Hyperedge>,
    roots: Vec<VertexId>,
}

impl Hypergraph {
    pub fn new<E>(n: u32, b: u32, edges: impl IntoIterator<Item = E>, roots: Vec<VertexId>) -> Self
    where
        E: Into<Hyperedge>,
    {
        let mut edges: Vec<Hyperedge> = edges.into_iter().map(Into::into).collect();
        edges.sort_unstable();
        let mut roots = roots;
        roots.sort_unstable();
        Hypergraph { n, b, edges, roots }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn roots(&self) -> &[VertexId] {
        &self.roots
    }

    fn edge_defect(&self, edge: &Hyperedge) -> Option<String> {
        let v = edge.vertices();
        if v.len() != self.b as usize {
            return Some(format!("has {} vertices, expected b={}", v.len(), self.b));
        }
        if let Some(&x) = v.iter().find(|&&x| x == 0 || x > self.n) {
            return Some(format!("label {x} outside [1, {}]", self.n));
        }
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Some(format!("vertex {} repeated", w[0]));
        }
        None
    }

    /// First malformed edge, if any.
    pub fn check_edges(&self) -> Result<()> {
        for (index, edge) in self.edges.iter().enumerate() {
            if let Some(reason) = self.edge_defect(edge) {
                return Err(Error::MalformedEdge {
                    index,
                    vertices: edge.vertices().to_vec(),
                    reason,
                });
            }
        }
        Ok(())
    }
}

/// One connected component. `edges` index into [`Hypergraph::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<usize>,
    pub excess: i64,
    pub root_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    /// Ordered by smallest vertex.
    pub components: Vec<Component>,
}

struct DisjointSets {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl DisjointSets {
    fn new(len: usize) -> Self {
        DisjointSets { parent: (0..len as u32).collect(), size: vec![1; len] }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a as usize] < self.size[b as usize] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b as usize] = a;
        self.size[a as usize] += self.size[b as usize];
    }
}

/// Splits `h` into connected components; isolated vertices are singletons.
pub fn component_decomposition(h: &Hypergraph) -> Result<ComponentReport> {
    h.check_edges()?;
    Ok(decompose(h))
}

fn decompose(h: &Hypergraph) -> ComponentReport {
    let n = h.n as usize;
    let mut sets = DisjointSets::new(n);
    for edge in &h.edges {
        let v = edge.vertices();
        for &w in &v[1..] {
            sets.union(v[0] - 1, w - 1);
        }
    }

    // Component ids in order of smallest vertex.
    let mut id_of_rep = vec![u32::MAX; n];
    let mut components: Vec<Component> = Vec::new();
    let mut component_of = vec![0u32; n];
    for x in 0..n as u32 {
        let rep = sets.find(x) as usize;
        if id_of_rep[rep] == u32::MAX {
            id_of_rep[rep] = components.len() as u32;
            components.push(Component { vertices: Vec::new(), edges: Vec::new(), excess: 0, root_count: 0 });
        }
        let id = id_of_rep[rep];
        component_of[x as usize] = id;
        components[id as usize].vertices.push(x + 1);
    }
    for (i, edge) in h.edges.iter().enumerate() {
        let id = component_of[(edge.vertices()[0] - 1) as usize];
        components[id as usize].edges.push(i);
    }
    for &root in &h.roots {
        if (1..=h.n).contains(&root) {
            components[component_of[(root - 1) as usize] as usize].root_count += 1;
        }
    }
    for c in &mut components {
        let weight: i64 = c.edges.iter().map(|&i| h.edges[i].len() as i64 - 1).sum();
        c.excess = weight - c.vertices.len() as i64;
    }
    ComponentReport { components }
}

/// Checks every forest invariant and reports all violations found.
pub fn validate_forest(h: &Hypergraph) -> ValidationReport {
    let mut violations = Vec::new();
    let s = h.edges.len() as u64;

    if h.b < 2 || (s > 0 && h.b > h.n) {
        violations.push(Violation::Uniformity { b: h.b, n: h.n });
    }
    for (index, edge) in h.edges.iter().enumerate() {
        if let Some(reason) = h.edge_defect(edge) {
            violations.push(Violation::MalformedEdge { index, vertices: edge.vertices().to_vec(), reason });
        }
    }
    for pair in h.edges.windows(2) {
        if pair[0] == pair[1] {
            violations.push(Violation::DuplicateEdge { vertices: pair[0].vertices().to_vec() });
        }
    }
    if h.roots.is_empty() {
        violations.push(Violation::NoRoots);
    }
    for &root in &h.roots {
        if root == 0 || root > h.n {
            violations.push(Violation::RootOutOfRange { root });
        }
    }
    for pair in h.roots.windows(2) {
        if pair[0] == pair[1] {
            violations.push(Violation::DuplicateRoot { root: pair[0] });
        }
    }
    let roots = h.roots.len() as u64;
    let expected_n = s * u64::from(h.b.saturating_sub(1)) + roots;
    if roots > 0 && expected_n != u64::from(h.n) {
        violations.push(Violation::ShapeMismatch { n: u64::from(h.n), s, b: h.b, roots });
    }

    // Component checks only make sense over well-formed edges.
    let malformed = violations.iter().any(|v| matches!(v, Violation::MalformedEdge { .. }));
    if !malformed {
        let report = decompose(h);
        for c in &report.components {
            let label = c.vertices[0];
            if c.excess != -1 {
                violations.push(Violation::ComponentExcess { component: label, excess: c.excess });
                violations.extend(overlapping_pairs(h, &c.edges));
            }
            match c.root_count {
                0 => violations.push(Violation::ComponentWithoutRoot { component: label }),
                1 => {}
                _ => {
                    let inside: Vec<VertexId> = h
                        .roots
                        .iter()
                        .copied()
                        .filter(|r| c.vertices.binary_search(r).is_ok())
                        .collect();
                    violations.push(Violation::ComponentWithSeveralRoots { component: label, roots: inside });
                }
            }
        }
    }

    ValidationReport { violations, s, k: roots.checked_sub(1) }
}

// A component of excess −1 never has two edges sharing two vertices, so this
// is only consulted for components that already failed the excess check.
fn overlapping_pairs(h: &Hypergraph, edges: &[usize]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (x, &i) in edges.iter().enumerate() {
        for &j in &edges[x + 1..] {
            let (a, b) = (&h.edges[i], &h.edges[j]);
            if a == b {
                continue;
            }
            let shared = a.vertices().iter().filter(|&&v| b.contains(v)).count();
            if shared > 1 {
                out.push(Violation::OverlappingEdges {
                    first: a.vertices().to_vec(),
                    second: b.vertices().to_vec(),
                });
            }
        }
    }
    out
}

/// A hypergraph that passed [`validate_forest`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedForest {
    graph: Hypergraph,
    shape: ForestShape,
}

impl RootedForest {
    pub fn new(graph: Hypergraph) -> Result<Self> {
        let report = validate_forest(&graph);
        if !report.is_valid() {
            return Err(Error::InvalidForest(report));
        }
        let shape = ForestShape::new(graph.b, graph.edges.len() as u32, graph.roots.len() as u32 - 1)?;
        Ok(RootedForest { graph, shape })
    }

    pub fn from_parts(n: u32, b: u32, edges: Vec<Vec<VertexId>>, roots: Vec<VertexId>) -> Result<Self> {
        Self::new(Hypergraph::new(n, b, edges, roots))
    }

    /// Builds a forest that is valid by construction. Only the codec uses this.
    pub(crate) fn from_trusted(shape: ForestShape, edges: Vec<Hyperedge>, roots: Vec<VertexId>) -> Self {
        let graph = Hypergraph::new(shape.n(), shape.b(), edges, roots);
        debug_assert!(validate_forest(&graph).is_valid());
        RootedForest { graph, shape }
    }

    pub fn shape(&self) -> ForestShape {
        self.shape
    }

    pub fn n(&self) -> u32 {
        self.graph.n
    }

    pub fn b(&self) -> u32 {
        self.graph.b
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.graph.edges
    }

    pub fn roots(&self) -> &[VertexId] {
        &self.graph.roots
    }

    pub fn is_root(&self, v: VertexId) -> bool {
        self.graph.roots.binary_search(&v).is_ok()
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.graph
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.graph
    }

    /// Number of hyperedges incident to each vertex, indexed by `label − 1`.
    pub fn incidences(&self) -> Vec<u32> {
        let mut count = vec![0u32; self.n() as usize];
        for edge in self.edges() {
            for &v in edge.vertices() {
                count[(v - 1) as usize] += 1;
            }
        }
        count
    }
}

/// The `b − 1` non-root vertices of a hyperedge that touch no other
/// hyperedge, together with the remaining linking vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeafBlock {
    pub block: Vec<VertexId>,
    pub link: VertexId,
    pub edge: Hyperedge,
}

impl LeafBlock {
    pub fn key(&self) -> VertexId {
        self.block[0]
    }
}

/// Splits `edge` into leaf block and link if it is a leaf, given per-vertex
/// incidence counts and a root test.
pub(crate) fn split_leaf(
    edge: &[VertexId],
    incidence: impl Fn(VertexId) -> u32,
    is_root: impl Fn(VertexId) -> bool,
) -> Option<(Vec<VertexId>, VertexId)> {
    let mut link = None;
    let mut block = Vec::with_capacity(edge.len() - 1);
    for &v in edge {
        if !is_root(v) && incidence(v) == 1 {
            block.push(v);
        } else if link.replace(v).is_some() {
            return None;
        }
    }
    link.map(|l| (block, l))
}

/// Every leaf block of `forest`, ascending by smallest block vertex.
pub fn leaf_blocks(forest: &RootedForest) -> Vec<LeafBlock> {
    let incidence = forest.incidences();
    let mut out: Vec<LeafBlock> = forest
        .edges()
        .iter()
        .filter_map(|edge| {
            split_leaf(edge.vertices(), |v| incidence[(v - 1) as usize], |v| forest.is_root(v))
                .map(|(block, link)| LeafBlock { block, link, edge: edge.clone() })
        })
        .collect();
    out.sort_unstable_by_key(LeafBlock::key);
    out
}
