//! A total order on the code space of a shape, with ranking and unranking.
//!
//! Codes are read as a mixed-radix numeral, most significant digit first:
//!
//! 1. the colexicographic rank of the sorted root set `R` among
//!    `(k+1)`-subsets of `[1, n]` (radix `C(n, k+1)`);
//! 2. the position of `r` in sorted `R` (radix `k + 1`, or 1 when `s = 0`);
//! 3. the rank of the partition `P` (radix `(n−k−1)! / (s!·(b−1)!^s)`);
//! 4. `N` read as a base-`n` numeral with digits `N[t] − 1`.
//!
//! The partition is ranked block by block: take the block holding the
//! smallest unassigned vertex, rank its other `b − 2` members among the
//! remaining pool with the combinatorial number system, drop the block
//! from the pool and continue. Each step contributes a digit of radix
//! `C(pool − 1, b − 2)`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::codec::{validate_code, ForestCode};
use crate::counting::binomial;
use crate::error::{Error, Result};
use crate::hypergraph::VertexId;
use crate::shape::ForestShape;

pub type CodeIndex = BigUint;

/// Combinatorial-number-system rank of sorted 0-based positions.
pub fn colex_rank(positions: &[u64]) -> BigUint {
    positions
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c, i as u64 + 1))
        .sum()
}

/// Inverse of [`colex_rank`]: the `size` positions below `pool` with the given rank.
pub fn colex_unrank(mut rank: BigUint, size: u64, pool: u64) -> Vec<u64> {
    let mut positions = vec![0u64; size as usize];
    let mut bound = pool;
    for i in (1..=size).rev() {
        // Largest c < bound with C(c, i) ≤ rank.
        let mut c = bound - 1;
        let mut value = binomial(c, i);
        while value > rank {
            value = value * (c - i) / c;
            c -= 1;
        }
        rank -= value;
        positions[(i - 1) as usize] = c;
        bound = c;
    }
    positions
}

struct Radices {
    roots: BigUint,
    final_root: u64,
    partition_steps: Vec<BigUint>,
    link_base: u64,
    links: u32,
}

impl Radices {
    fn of(shape: ForestShape) -> Self {
        let n = u64::from(shape.n());
        let roots = u64::from(shape.root_count());
        let block = u64::from(shape.b() - 1);
        let partition_steps = (0..u64::from(shape.s()))
            .map(|step| binomial(n - roots - step * block - 1, block - 1))
            .collect();
        Radices {
            roots: binomial(n, roots),
            final_root: if shape.s() == 0 { 1 } else { roots },
            partition_steps,
            link_base: n,
            links: shape.link_count(),
        }
    }

    fn cardinality(&self) -> BigUint {
        let mut total = &self.roots * self.final_root;
        for step in &self.partition_steps {
            total *= step;
        }
        total * num_traits::pow(BigUint::from(self.link_base), self.links as usize)
    }
}

/// Size of the code space, computed as the product of the ranking radices.
pub fn code_space_size(shape: ForestShape) -> BigUint {
    Radices::of(shape).cardinality()
}

pub fn rank_code(code: &ForestCode) -> Result<CodeIndex> {
    let report = validate_code(code);
    if !report.is_valid() {
        return Err(Error::InvalidCode(report));
    }
    let shape = code.shape();
    let radices = Radices::of(shape);
    let n = u64::from(shape.n());

    let root_positions: Vec<u64> = code.roots().iter().map(|&v| u64::from(v) - 1).collect();
    let mut index = colex_rank(&root_positions);

    let r_digit = match code.final_root() {
        Some(r) => code.roots().binary_search(&r).expect("validated") as u64,
        None => 0,
    };
    index = index * radices.final_root + r_digit;

    let mut pool: Vec<VertexId> = (1..=shape.n()).filter(|v| code.roots().binary_search(v).is_err()).collect();
    let mut blocks: Vec<&[VertexId]> = code.blocks().iter().map(Vec::as_slice).collect();
    blocks.sort_unstable_by_key(|b| b[0]);
    for (block, radix) in blocks.iter().zip(&radices.partition_steps) {
        debug_assert_eq!(block[0], pool[0]);
        let rest = &pool[1..];
        let positions: Vec<u64> =
            block[1..].iter().map(|v| rest.binary_search(v).expect("validated") as u64).collect();
        index = index * radix + colex_rank(&positions);
        pool.retain(|v| block.binary_search(v).is_err());
    }

    for &link in code.links() {
        index = index * n + (u64::from(link) - 1);
    }
    Ok(index)
}

pub fn unrank_code(index: &CodeIndex, shape: ForestShape) -> Result<ForestCode> {
    let radices = Radices::of(shape);
    let size = radices.cardinality();
    if *index >= size {
        return Err(Error::range(format!("index {index} outside [0, {size}) for shape {shape}")));
    }
    let n = u64::from(shape.n());
    let mut rest = index.clone();

    let mut links = vec![0; radices.links as usize];
    for slot in links.iter_mut().rev() {
        let (q, digit) = rest.div_rem(&BigUint::from(n));
        *slot = digit.to_u32().expect("digit below n") + 1;
        rest = q;
    }

    let mut partition_digits = Vec::with_capacity(radices.partition_steps.len());
    for radix in radices.partition_steps.iter().rev() {
        let (q, digit) = rest.div_rem(radix);
        partition_digits.push(digit);
        rest = q;
    }
    partition_digits.reverse();

    let (rest, r_digit) = rest.div_rem(&BigUint::from(radices.final_root));
    let roots: Vec<VertexId> = colex_unrank(rest, u64::from(shape.root_count()), n)
        .into_iter()
        .map(|p| p as VertexId + 1)
        .collect();
    let final_root = (shape.s() > 0).then(|| roots[r_digit.to_usize().expect("digit below k+1")]);

    let mut pool: Vec<VertexId> = (1..=shape.n()).filter(|v| roots.binary_search(v).is_err()).collect();
    let mut blocks = Vec::with_capacity(partition_digits.len());
    let others = u64::from(shape.b() - 2);
    for digit in partition_digits {
        let rest = &pool[1..];
        let mut block = vec![pool[0]];
        block.extend(colex_unrank(digit, others, rest.len() as u64).into_iter().map(|p| rest[p as usize]));
        pool.retain(|v| block.binary_search(v).is_err());
        blocks.push(block);
    }
    debug_assert!(pool.is_empty());

    Ok(ForestCode::new(shape, roots, final_root, blocks, links))
}

/// The first `m` codes of the canonical order. Distinct by construction.
pub fn generate_ids(shape: ForestShape, m: u64) -> Result<Vec<ForestCode>> {
    let size = code_space_size(shape);
    if BigUint::from(m) > size {
        return Err(Error::range(format!("{m} identifiers requested, shape {shape} has only {size}")));
    }
    let mut out = Vec::with_capacity(m.min(1 << 20) as usize);
    let mut index = BigUint::zero();
    for _ in 0..m {
        out.push(unrank_code(&index, shape)?);
        index += 1u32;
    }
    Ok(out)
}
