//! Brute-force enumerators over small parameter spaces.
//!
//! Nothing here goes through the codec or the closed formulas: forests come
//! from scanning every set of `s` hyperedges, codes from nested loops over
//! the four components of the tuple, hypercycles from scanning every
//! connected edge set. Spaces larger than the budget are refused rather than
//! truncated.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::codec::ForestCode;
use crate::counting::{binomial, count_hypercycles, hypercycle_classes, ExactCount, HypercycleForm};
use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph, RootedForest, VertexId};
use crate::shape::ForestShape;

/// Default cap on the number of candidates an enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

fn check_budget(required: &BigUint, budget: u64) -> Result<()> {
    if required.to_u64().is_none_or(|r| r > budget) {
        return Err(Error::BudgetExceeded { required: required.to_string(), budget });
    }
    Ok(())
}

fn candidate_edges(n: u32, b: u32) -> Vec<Hyperedge> {
    (1..=n).combinations(b as usize).map(Hyperedge::new).collect()
}

/// Minimal union-find, separate from the one the validator uses.
struct Merger(Vec<usize>);

impl Merger {
    fn new(n: u32) -> Self {
        Merger((0..=n as usize).collect())
    }

    fn root(&mut self, mut v: usize) -> usize {
        while self.0[v] != v {
            self.0[v] = self.0[self.0[v]];
            v = self.0[v];
        }
        v
    }

    /// Joins every vertex of `edge`; `false` if two were already joined.
    fn join_all(&mut self, edge: &[VertexId]) -> bool {
        let mut acyclic = true;
        let first = self.root(edge[0] as usize);
        for &v in &edge[1..] {
            let r = self.root(v as usize);
            if r == first {
                acyclic = false;
            } else {
                let top = self.root(first);
                self.0[r] = top;
            }
        }
        acyclic
    }
}

/// Visits every rooted forest of the shape exactly once; returns the count.
pub fn for_each_forest(
    b: u32,
    s: u32,
    k: u32,
    budget: u64,
    mut visit: impl FnMut(RootedForest),
) -> Result<u64> {
    let shape = ForestShape::new(b, s, k)?;
    let n = shape.n();
    let candidates = candidate_edges(n, b);
    check_budget(&binomial(candidates.len() as u64, u64::from(s)), budget)?;

    let mut total = 0u64;
    for chosen in candidates.iter().combinations(s as usize) {
        let mut merger = Merger::new(n);
        let mut acyclic = true;
        for edge in &chosen {
            // Each edge must meet b distinct current components.
            let mut tops: Vec<usize> = edge.vertices().iter().map(|&v| merger.root(v as usize)).collect();
            tops.sort_unstable();
            tops.dedup();
            if tops.len() != b as usize {
                acyclic = false;
                break;
            }
            merger.join_all(edge.vertices());
        }
        if !acyclic {
            continue;
        }
        let mut components: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for v in 1..=n {
            components.entry(merger.root(v as usize)).or_default().push(v);
        }
        let mut groups: Vec<Vec<VertexId>> = components.into_values().collect();
        groups.sort_unstable_by_key(|g| g[0]);
        if groups.len() != shape.root_count() as usize {
            return Err(Error::Invariant(format!("{} components in an acyclic set", groups.len())));
        }
        let edges: Vec<Hyperedge> = chosen.into_iter().cloned().collect();
        for roots in groups.iter().map(|g| g.iter().copied()).multi_cartesian_product() {
            let forest = RootedForest::new(Hypergraph::new(n, b, edges.clone(), roots))?;
            visit(forest);
            total += 1;
        }
    }
    Ok(total)
}

pub fn enumerate_forests(b: u32, s: u32, k: u32, budget: u64) -> Result<Vec<RootedForest>> {
    let mut out = Vec::new();
    for_each_forest(b, s, k, budget, |f| out.push(f))?;
    Ok(out)
}

fn colex_combinations(items: &[VertexId], size: usize) -> Vec<Vec<VertexId>> {
    let mut all: Vec<Vec<VertexId>> = items.iter().copied().combinations(size).collect();
    all.sort_by(|x, y| x.iter().rev().cmp(y.iter().rev()));
    all
}

/// Partitions of sorted `pool` into blocks of `block` elements, in the
/// order "block of the smallest element first, then colex on its rest".
fn partitions(pool: &[VertexId], block: usize) -> Vec<Vec<Vec<VertexId>>> {
    let Some((&head, rest)) = pool.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for companions in colex_combinations(rest, block - 1) {
        let remaining: Vec<VertexId> = rest.iter().copied().filter(|v| !companions.contains(v)).collect();
        for tail in partitions(&remaining, block) {
            let mut first = vec![head];
            first.extend(&companions);
            let mut p = vec![first];
            p.extend(tail);
            out.push(p);
        }
    }
    out
}

/// Visits every valid code of the shape, in canonical rank order.
pub fn for_each_code(b: u32, s: u32, k: u32, budget: u64, mut visit: impl FnMut(ForestCode)) -> Result<u64> {
    let shape = ForestShape::new(b, s, k)?;
    let n = shape.n();
    let labels: Vec<VertexId> = (1..=n).collect();
    let root_sets = colex_combinations(&labels, shape.root_count() as usize);
    let link_space = num_traits::pow(BigUint::from(n), shape.link_count() as usize);
    check_budget(&(BigUint::from(root_sets.len()) * shape.root_count() * link_space), budget)?;

    let link_sequences: Vec<Vec<VertexId>> = if shape.link_count() == 0 {
        vec![Vec::new()]
    } else {
        (0..shape.link_count()).map(|_| 1..=n).multi_cartesian_product().collect()
    };

    let mut total = 0u64;
    for roots in root_sets {
        let pool: Vec<VertexId> = labels.iter().copied().filter(|v| !roots.contains(v)).collect();
        let all_partitions = if s == 0 { vec![Vec::new()] } else { partitions(&pool, (b - 1) as usize) };
        let finals: Vec<Option<VertexId>> =
            if s == 0 { vec![None] } else { roots.iter().copied().map(Some).collect() };
        for &final_root in &finals {
            for blocks in &all_partitions {
                for links in &link_sequences {
                    visit(ForestCode::new(shape, roots.clone(), final_root, blocks.clone(), links.clone()));
                    total += 1;
                }
            }
        }
    }
    Ok(total)
}

pub fn enumerate_code_space(b: u32, s: u32, k: u32, budget: u64) -> Result<Vec<ForestCode>> {
    let mut out = Vec::new();
    for_each_code(b, s, k, budget, |c| out.push(c))?;
    Ok(out)
}

/// Visits every connected hypergraph on `n = s(b−1)` vertices with `s`
/// `b`-uniform hyperedges (excess 0). With `multiset`, hyperedges may repeat.
pub fn for_each_hypercycle(
    b: u32,
    s: u32,
    multiset: bool,
    budget: u64,
    mut visit: impl FnMut(Hypergraph),
) -> Result<u64> {
    if b < 2 || s < 1 {
        return Err(Error::range(format!("hypercycle space needs b ≥ 2 and s ≥ 1, got b={b}, s={s}")));
    }
    let n = u32::try_from(u64::from(s) * u64::from(b - 1))
        .map_err(|_| Error::range("vertex count does not fit in 32 bits"))?;
    let candidates = candidate_edges(n, b);
    let c = candidates.len() as u64;
    let space = if multiset { binomial(c + u64::from(s) - 1, u64::from(s)) } else { binomial(c, u64::from(s)) };
    check_budget(&space, budget)?;

    let mut total = 0u64;
    let mut consider = |chosen: Vec<&Hyperedge>| {
        let mut merger = Merger::new(n);
        for edge in &chosen {
            merger.join_all(edge.vertices());
        }
        let top = merger.root(1);
        let connected = (2..=n as usize).all(|v| merger.root(v) == top);
        let excess = i64::from(s) * i64::from(b - 1) - i64::from(n);
        if connected && excess == 0 {
            visit(Hypergraph::new(n, b, chosen.into_iter().cloned(), Vec::new()));
            total += 1;
        }
    };
    if multiset {
        candidates.iter().combinations_with_replacement(s as usize).for_each(&mut consider);
    } else {
        candidates.iter().combinations(s as usize).for_each(&mut consider);
    }
    Ok(total)
}

pub fn enumerate_hypercycles(b: u32, s: u32, multiset: bool, budget: u64) -> Result<Vec<Hypergraph>> {
    let mut out = Vec::new();
    for_each_hypercycle(b, s, multiset, budget, |h| out.push(h))?;
    Ok(out)
}

/// Side-by-side hypercycle numbers: the two closed evaluations, the
/// per-cycle-length classes and their total, and both brute-force counts.
/// Records them; does not require them to agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub b: u32,
    pub s: u32,
    pub n: u32,
    pub closed_form: ExactCount,
    pub sum_form: ExactCount,
    pub by_cycle_length: BTreeMap<u32, ExactCount>,
    pub cycle_length_total: ExactCount,
    pub oracle_set: ExactCount,
    pub oracle_multiset: ExactCount,
    pub notes: Vec<String>,
}

fn compare(notes: &mut Vec<String>, what: &str, value: &ExactCount, other: &str, reference: &ExactCount) {
    use num_traits::Zero;
    if value == reference {
        notes.push(format!("{what} equals {other} ({value})"));
    } else if reference.is_zero() {
        notes.push(format!("{what} = {value} while {other} = 0"));
    } else {
        let (q, r) = num_integer::Integer::div_rem(value, reference);
        if r.is_zero() {
            notes.push(format!("{what} = {q} × {other} ({value} vs {reference})"));
        } else {
            notes.push(format!("{what} = {value} differs from {other} = {reference}"));
        }
    }
}

pub fn audit_hypercycles(b: u32, s: u32, budget: u64) -> Result<AuditReport> {
    let closed_form = count_hypercycles(b, s, HypercycleForm::Closed)?;
    let sum_form = count_hypercycles(b, s, HypercycleForm::Sum)?;
    let by_cycle_length = hypercycle_classes(b, s)?;
    let cycle_length_total: ExactCount = by_cycle_length.values().sum();
    let oracle_set = ExactCount::from(for_each_hypercycle(b, s, false, budget, |_| {})?);
    let oracle_multiset = ExactCount::from(for_each_hypercycle(b, s, true, budget, |_| {})?);

    let mut notes = Vec::new();
    compare(&mut notes, "closed form", &closed_form, "sum form", &sum_form);
    compare(&mut notes, "closed form", &closed_form, "set enumeration", &oracle_set);
    compare(&mut notes, "closed form", &closed_form, "multiset enumeration", &oracle_multiset);
    compare(&mut notes, "cycle-length total", &cycle_length_total, "closed form", &closed_form);
    compare(&mut notes, "cycle-length total", &cycle_length_total, "set enumeration", &oracle_set);

    Ok(AuditReport {
        b,
        s,
        n: s * (b - 1),
        closed_form,
        sum_form,
        by_cycle_length,
        cycle_length_total,
        oracle_set,
        oracle_multiset,
        notes,
    })
}
