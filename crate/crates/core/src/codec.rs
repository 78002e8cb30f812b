//! The Prüfer-like code of a rooted forest and its two directions.
//!
//! A forest of shape `(b, s, k)` is coded by `(R, r, P, N)`: the root set `R`,
//! the root `r` the last pruned hyperedge hangs from, the partition `P` of the
//! non-root vertices into `s` blocks of size `b − 1`, and the sequence `N` of
//! the first `s − 1` linking vertices met while pruning smallest leaves.
//!
//! Both directions run in `O((n + s) log s)` with a binary heap keyed by the
//! smallest vertex of each block. Blocks are pairwise disjoint, so that key
//! orders them exactly like the lexicographic order on sorted blocks.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::hypergraph::{split_leaf, Hyperedge, RootedForest, VertexId};
use crate::report::{ValidationReport, Violation};
use crate::shape::ForestShape;

/// The 4-tuple `(R, r, P, N)` together with its shape, in canonical form.
///
/// Construction only canonicalizes (sorts `R`, each block, and the blocks by
/// their smallest vertex); use [`validate_code`] to check it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForestCode {
    shape: ForestShape,
    roots: Vec<VertexId>,
    final_root: Option<VertexId>,
    blocks: Vec<Vec<VertexId>>,
    links: Vec<VertexId>,
}

impl ForestCode {
    pub fn new(
        shape: ForestShape,
        mut roots: Vec<VertexId>,
        final_root: Option<VertexId>,
        mut blocks: Vec<Vec<VertexId>>,
        links: Vec<VertexId>,
    ) -> Self {
        roots.sort_unstable();
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable();
        ForestCode { shape, roots, final_root, blocks, links }
    }

    pub fn shape(&self) -> ForestShape {
        self.shape
    }

    /// `R`.
    pub fn roots(&self) -> &[VertexId] {
        &self.roots
    }

    /// `r`, absent exactly when `s = 0`.
    pub fn final_root(&self) -> Option<VertexId> {
        self.final_root
    }

    /// `P`, ordered by smallest vertex.
    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    /// `N`.
    pub fn links(&self) -> &[VertexId] {
        &self.links
    }
}

/// Checks every code invariant and reports all violations found.
pub fn validate_code(code: &ForestCode) -> ValidationReport {
    let shape = code.shape;
    let n = shape.n();
    let in_range = |v: VertexId| (1..=n).contains(&v);
    let mut violations = Vec::new();

    if code.roots.len() as u64 != u64::from(shape.root_count()) {
        violations.push(Violation::RootCount {
            expected: u64::from(shape.root_count()),
            found: code.roots.len() as u64,
        });
    }
    for &root in &code.roots {
        if !in_range(root) {
            violations.push(Violation::RootOutOfRange { root });
        }
    }
    for pair in code.roots.windows(2) {
        if pair[0] == pair[1] {
            violations.push(Violation::DuplicateRoot { root: pair[0] });
        }
    }
    let is_root = |v: VertexId| code.roots.binary_search(&v).is_ok();

    match (shape.s(), code.final_root) {
        (0, Some(r)) => violations.push(Violation::FinalRootUnexpected { r }),
        (0, None) => {}
        (_, None) => violations.push(Violation::FinalRootMissing),
        (_, Some(r)) => {
            if !is_root(r) {
                violations.push(Violation::FinalRootNotInRoots { r });
            }
        }
    }

    if code.blocks.len() as u64 != u64::from(shape.s()) {
        violations.push(Violation::BlockCount {
            expected: u64::from(shape.s()),
            found: code.blocks.len() as u64,
        });
    }
    let mut covered = vec![false; n as usize];
    for block in &code.blocks {
        let distinct = block.windows(2).all(|w| w[0] != w[1]);
        if block.len() != (shape.b() - 1) as usize || !distinct {
            violations.push(Violation::BlockSize { block: block.clone(), expected: shape.b() - 1 });
        }
        for &v in block {
            if !in_range(v) {
                violations.push(Violation::BlockVertexOutOfRange { vertex: v });
            } else if is_root(v) {
                violations.push(Violation::BlockContainsRoot { vertex: v });
            } else if std::mem::replace(&mut covered[(v - 1) as usize], true) {
                violations.push(Violation::VertexInSeveralBlocks { vertex: v });
            }
        }
    }
    for v in 1..=n {
        if !covered[(v - 1) as usize] && !is_root(v) {
            violations.push(Violation::VertexUncovered { vertex: v });
        }
    }

    if code.links.len() as u64 != u64::from(shape.link_count()) {
        violations.push(Violation::LinkCount {
            expected: u64::from(shape.link_count()),
            found: code.links.len() as u64,
        });
    }
    for (position, &vertex) in code.links.iter().enumerate() {
        if !in_range(vertex) {
            violations.push(Violation::LinkOutOfRange { position, vertex });
        }
    }

    ValidationReport { violations, s: u64::from(shape.s()), k: Some(u64::from(shape.k())) }
}

/// Codes a forest by repeatedly pruning its smallest leaf block.
pub fn encode_forest(forest: &RootedForest) -> Result<ForestCode> {
    let shape = forest.shape();
    let n = forest.n() as usize;
    let b = forest.b() as usize;
    let edges = forest.edges();

    let mut is_root = vec![false; n];
    for &r in forest.roots() {
        is_root[(r - 1) as usize] = true;
    }
    let mut incidence = forest.incidences();
    // XOR of the indices of the edges still incident to each vertex; once a
    // vertex is down to one edge this is that edge.
    let mut incident_xor = vec![0u32; n];
    for (i, edge) in edges.iter().enumerate() {
        for &v in edge.vertices() {
            incident_xor[(v - 1) as usize] ^= i as u32;
        }
    }

    let leafy = |v: VertexId, incidence: &[u32], is_root: &[bool]| {
        !is_root[(v - 1) as usize] && incidence[(v - 1) as usize] == 1
    };
    let mut leafy_count: Vec<u32> = edges
        .iter()
        .map(|e| e.vertices().iter().filter(|&&v| leafy(v, &incidence, &is_root)).count() as u32)
        .collect();

    let smallest_leafy = |edge: &Hyperedge, incidence: &[u32], is_root: &[bool]| {
        edge.vertices().iter().copied().find(|&v| leafy(v, incidence, is_root)).expect("leaf edge")
    };
    let mut heap = BinaryHeap::with_capacity(edges.len());
    for (i, edge) in edges.iter().enumerate() {
        if leafy_count[i] as usize == b - 1 {
            heap.push(Reverse((smallest_leafy(edge, &incidence, &is_root), i)));
        }
    }

    let mut blocks = Vec::with_capacity(edges.len());
    let mut links = Vec::with_capacity(edges.len());
    for round in 0..edges.len() {
        let Reverse((_, i)) = heap
            .pop()
            .ok_or_else(|| Error::Invariant(format!("no leaf block left at pruning round {round}")))?;
        let edge = edges[i].vertices();
        let (block, link) = split_leaf(edge, |v| incidence[(v - 1) as usize], |v| is_root[(v - 1) as usize])
            .ok_or_else(|| Error::Invariant(format!("edge {edge:?} queued but not a leaf")))?;
        for &v in edge {
            incidence[(v - 1) as usize] -= 1;
            incident_xor[(v - 1) as usize] ^= i as u32;
        }
        if leafy(link, &incidence, &is_root) {
            let next = incident_xor[(link - 1) as usize] as usize;
            leafy_count[next] += 1;
            debug_assert!((leafy_count[next] as usize) < b);
            if leafy_count[next] as usize == b - 1 {
                heap.push(Reverse((smallest_leafy(&edges[next], &incidence, &is_root), next)));
            }
        }
        blocks.push(block);
        links.push(link);
    }

    let final_root = links.pop();
    if let Some(r) = final_root {
        if !forest.is_root(r) {
            return Err(Error::Invariant(format!("last linking vertex {r} is not a root")));
        }
    }
    Ok(ForestCode::new(shape, forest.roots().to_vec(), final_root, blocks, links))
}

const NO_BLOCK: u32 = u32::MAX;

/// Rebuilds the forest coded by `code`.
///
/// At step `t` the smallest block none of whose vertices occurs in
/// `N[t..]` (the current entry included) is attached to `N[t]`; the last
/// block is attached to `r`.
pub fn decode_code(code: &ForestCode) -> Result<RootedForest> {
    let report = validate_code(code);
    if !report.is_valid() {
        return Err(Error::InvalidCode(report));
    }
    let shape = code.shape;
    let n = shape.n() as usize;

    let mut pending_occurrences = vec![0u32; n];
    for &v in &code.links {
        pending_occurrences[(v - 1) as usize] += 1;
    }
    let mut block_of = vec![NO_BLOCK; n];
    for (i, block) in code.blocks.iter().enumerate() {
        for &v in block {
            block_of[(v - 1) as usize] = i as u32;
        }
    }
    // Per block: how many of its vertices still occur in the unread suffix.
    let mut blocked: Vec<u32> = code
        .blocks
        .iter()
        .map(|block| block.iter().filter(|&&v| pending_occurrences[(v - 1) as usize] > 0).count() as u32)
        .collect();
    // Blocks are sorted by smallest vertex, so the index is the key.
    let mut eligible: BinaryHeap<Reverse<u32>> =
        (0..code.blocks.len() as u32).filter(|&i| blocked[i as usize] == 0).map(Reverse).collect();

    let mut edges = Vec::with_capacity(code.blocks.len());
    let attach = |block: &[VertexId], link: VertexId| {
        let mut vertices = Vec::with_capacity(block.len() + 1);
        vertices.extend_from_slice(block);
        vertices.push(link);
        Hyperedge::new(vertices)
    };
    for (t, &link) in code.links.iter().enumerate() {
        let Reverse(i) = eligible
            .pop()
            .ok_or_else(|| Error::Invariant(format!("no eligible block at decoding step {t}")))?;
        edges.push(attach(&code.blocks[i as usize], link));

        let slot = &mut pending_occurrences[(link - 1) as usize];
        *slot -= 1;
        if *slot == 0 && block_of[(link - 1) as usize] != NO_BLOCK {
            let j = block_of[(link - 1) as usize] as usize;
            blocked[j] -= 1;
            if blocked[j] == 0 {
                eligible.push(Reverse(j as u32));
            }
        }
    }
    if let Some(r) = code.final_root {
        let Reverse(i) = eligible
            .pop()
            .ok_or_else(|| Error::Invariant("no block left for the final hyperedge".into()))?;
        edges.push(attach(&code.blocks[i as usize], r));
    }
    if !eligible.is_empty() {
        return Err(Error::Invariant(format!("{} blocks left unattached", eligible.len())));
    }

    Ok(RootedForest::from_trusted(shape, edges, code.roots.clone()))
}
