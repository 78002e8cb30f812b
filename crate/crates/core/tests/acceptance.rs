//! Acceptance suite. Each test checks one criterion at its stated tolerance
//! and prints a single PASS/FAIL line.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use hyperforest::counting::{
    count_forests, count_hypercycles, count_rooted_hypertrees, cycle_sum_identity, hypercycle_class_count,
};
use hyperforest::oracle::{
    audit_hypercycles, enumerate_code_space, enumerate_forests, enumerate_hypercycles, DEFAULT_BUDGET,
};
use hyperforest::rank::code_space_size;
use hyperforest::{
    decode_code, encode_forest, generate_ids, rank_code, unrank_code, ForestCode, ForestSampler, ForestShape,
    HypercycleForm, RootedForest,
};

fn report(id: u32, name: &str, elapsed: Duration, checks: impl FnOnce() -> Result<(), String>) {
    match checks() {
        Ok(()) => println!("criterion {id} [{name}]: PASS ({elapsed:.2?})"),
        Err(why) => {
            println!("criterion {id} [{name}]: FAIL: {why}");
            panic!("criterion {id} failed: {why}");
        }
    }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

/// Shapes swept exhaustively by criteria 2 and 6 (all have n ≤ 9).
fn swept_shapes() -> Vec<ForestShape> {
    let mut shapes = Vec::new();
    for (b, max_s, max_k) in [(2, 4, 2), (3, 3, 1), (4, 2, 1)] {
        for s in 0..=max_s {
            for k in 0..=max_k {
                let shape = ForestShape::new(b, s, k).unwrap();
                assert!(shape.n() <= 9);
                shapes.push(shape);
            }
        }
    }
    shapes
}

#[test]
fn criterion_1_golden_example() {
    let edges: Vec<Vec<u32>> = vec![
        vec![1, 21, 22],
        vec![2, 17, 18],
        vec![3, 13, 19],
        vec![4, 8, 18],
        vec![4, 12, 14],
        vec![6, 7, 13],
        vec![7, 20, 21],
        vec![10, 13, 15],
        vec![11, 18, 21],
    ];
    let roots = vec![5, 9, 13, 16];
    let forest = RootedForest::from_parts(22, 3, edges.clone(), roots.clone()).unwrap();
    let blocks: Vec<Vec<u32>> = vec![
        vec![1, 22],
        vec![2, 17],
        vec![3, 19],
        vec![4, 8],
        vec![6, 7],
        vec![10, 15],
        vec![11, 18],
        vec![12, 14],
        vec![20, 21],
    ];
    let links = vec![21, 18, 13, 13, 4, 18, 21, 7];

    let start = Instant::now();
    let code = encode_forest(&forest).unwrap();
    let decoded = decode_code(&code).unwrap();
    let elapsed = start.elapsed();

    report(1, "golden example", elapsed, || {
        ensure(code.roots() == [5, 9, 13, 16], || format!("R = {:?}", code.roots()))?;
        ensure(code.final_root() == Some(13), || format!("r = {:?}", code.final_root()))?;
        ensure(code.blocks() == blocks.as_slice(), || format!("P = {:?}", code.blocks()))?;
        ensure(code.links() == links.as_slice(), || format!("N = {:?}", code.links()))?;
        let decoded_edges: Vec<Vec<u32>> = decoded.edges().iter().map(|e| e.vertices().to_vec()).collect();
        ensure(decoded_edges == edges, || format!("decoded edges {decoded_edges:?}"))?;
        ensure(decoded.roots() == roots.as_slice(), || format!("decoded roots {:?}", decoded.roots()))?;
        ensure(elapsed < Duration::from_millis(10), || format!("took {elapsed:?}"))
    });
}

#[test]
fn criterion_2_exhaustive_bijection() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for shape in swept_shapes() {
        let (b, s, k) = (shape.b(), shape.s(), shape.k());
        let formula = count_forests(b, s, k).unwrap();
        let forests = enumerate_forests(b, s, k, DEFAULT_BUDGET).unwrap();
        let codes = enumerate_code_space(b, s, k, DEFAULT_BUDGET).unwrap();
        if BigUint::from(forests.len()) != formula || BigUint::from(codes.len()) != formula {
            failures.push(format!("{shape}: {} forests, {} codes, formula {formula}", forests.len(), codes.len()));
            continue;
        }
        let forest_set: HashSet<&RootedForest> = forests.iter().collect();
        let code_set: HashSet<&ForestCode> = codes.iter().collect();

        let mut images = HashSet::with_capacity(codes.len());
        for code in &codes {
            let forest = decode_code(code).unwrap();
            if encode_forest(&forest).unwrap() != *code {
                failures.push(format!("{shape}: encode∘decode ≠ id at {code:?}"));
            }
            images.insert(forest);
        }
        if images.len() != codes.len() {
            failures.push(format!("{shape}: decode not injective ({} images)", images.len()));
        }
        if images.iter().collect::<HashSet<_>>() != forest_set {
            failures.push(format!("{shape}: decode image differs from the forest set"));
        }
        for forest in &forests {
            let code = encode_forest(forest).unwrap();
            if !code_set.contains(&code) || decode_code(&code).unwrap() != *forest {
                failures.push(format!("{shape}: decode∘encode ≠ id at {forest:?}"));
            }
        }
    }
    let elapsed = start.elapsed();
    report(2, "exhaustive bijection", elapsed, || {
        ensure(failures.is_empty(), || failures.join("; "))?;
        ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))
    });
}

#[test]
fn criterion_3_formula_cross_checks() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut expect = |what: String, got: BigUint, want: BigUint| {
        if got != want {
            failures.push(format!("{what}: got {got}, want {want}"));
        }
    };

    expect("count_forests(3,2,0)".into(), count_forests(3, 2, 0).unwrap(), 75u32.into());
    expect("count_forests(2,2,1)".into(), count_forests(2, 2, 1).unwrap(), 48u32.into());
    expect(
        "oracle(3,2,0)".into(),
        BigUint::from(enumerate_forests(3, 2, 0, DEFAULT_BUDGET).unwrap().len()),
        75u32.into(),
    );
    expect(
        "oracle(2,2,1)".into(),
        BigUint::from(enumerate_forests(2, 2, 1, DEFAULT_BUDGET).unwrap().len()),
        48u32.into(),
    );

    for n in 2..=12u32 {
        let cayley = num_traits::pow(BigUint::from(n), (n - 1) as usize);
        expect(format!("rooted trees n={n}"), count_rooted_hypertrees(2, n - 1).unwrap(), cayley.clone());
        if n <= 6 {
            let oracle = enumerate_forests(2, n - 1, 0, DEFAULT_BUDGET).unwrap().len();
            expect(format!("oracle rooted trees n={n}"), BigUint::from(oracle), cayley);
        }
    }

    for b in 2..=6 {
        for s in 1..=12 {
            expect(
                format!("k=0 specialisation b={b} s={s}"),
                count_forests(b, s, 0).unwrap(),
                count_rooted_hypertrees(b, s).unwrap(),
            );
        }
    }
    let elapsed = start.elapsed();
    report(3, "formula cross-checks", elapsed, || ensure(failures.is_empty(), || failures.join("; ")));
}

#[test]
fn criterion_4_cycle_sum_identity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for s in 2..=100u32 {
        let id = cycle_sum_identity(s).unwrap();
        if !id.equal || id.lhs != id.rhs {
            failures.push(format!("identity fails at s={s}: {} vs {}", id.lhs, id.rhs));
        }
        for b in 2..=6 {
            let closed = count_hypercycles(b, s, HypercycleForm::Closed).unwrap();
            let sum = count_hypercycles(b, s, HypercycleForm::Sum).unwrap();
            if closed != sum {
                failures.push(format!("closed ≠ sum at b={b} s={s}"));
            }
        }
    }
    let elapsed = start.elapsed();
    report(4, "closed form = sum form", elapsed, || {
        ensure(failures.is_empty(), || failures.join("; "))?;
        ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))
    });
}

#[test]
fn criterion_5_hypercycle_audit() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut expect = |what: &str, got: &BigUint, want: BigUint| {
        if *got != want {
            failures.push(format!("{what}: got {got}, want {want}"));
        }
    };

    let multiset_32 = enumerate_hypercycles(3, 2, true, DEFAULT_BUDGET).unwrap().len();
    let audit = audit_hypercycles(3, 2, DEFAULT_BUDGET).unwrap();
    expect("(3,2) closed", &audit.closed_form, 12u32.into());
    expect("(3,2) class total", &audit.cycle_length_total, 48u32.into());
    expect("(3,2) set oracle", &audit.oracle_set, 6u32.into());
    expect("(3,2) multiset oracle", &audit.oracle_multiset, multiset_32.into());

    let audit = audit_hypercycles(2, 3, DEFAULT_BUDGET).unwrap();
    expect("(2,3) closed", &audit.closed_form, 9u32.into());
    expect("(2,3) set oracle", &audit.oracle_set, 1u32.into());

    for (b, s) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2)] {
        let audit = audit_hypercycles(b, s, DEFAULT_BUDGET).unwrap();
        let tag = format!("({b},{s})");
        expect(&format!("{tag} closed"), &audit.closed_form, count_hypercycles(b, s, HypercycleForm::Closed).unwrap());
        expect(&format!("{tag} sum"), &audit.sum_form, count_hypercycles(b, s, HypercycleForm::Sum).unwrap());
        let mut total = BigUint::default();
        for j in 2..=s {
            let class = hypercycle_class_count(b, s, j).unwrap();
            let reported = audit.by_cycle_length.get(&j).cloned().unwrap_or_default();
            expect(&format!("{tag} class j={j}"), &reported, class.clone());
            total += class;
        }
        expect(&format!("{tag} class total"), &audit.cycle_length_total, total);
        let set = enumerate_hypercycles(b, s, false, DEFAULT_BUDGET).unwrap().len();
        let multi = enumerate_hypercycles(b, s, true, DEFAULT_BUDGET).unwrap().len();
        expect(&format!("{tag} set oracle"), &audit.oracle_set, set.into());
        expect(&format!("{tag} multiset oracle"), &audit.oracle_multiset, multi.into());
    }
    let elapsed = start.elapsed();
    report(5, "hypercycle audit", elapsed, || ensure(failures.is_empty(), || failures.join("; ")));
}

#[test]
fn criterion_6_rank_unrank() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for shape in swept_shapes() {
        let codes = enumerate_code_space(shape.b(), shape.s(), shape.k(), DEFAULT_BUDGET).unwrap();
        let size = code_space_size(shape);
        if size != BigUint::from(codes.len()) {
            failures.push(format!("{shape}: {size} indices vs {} codes", codes.len()));
            continue;
        }
        for (i, code) in codes.iter().enumerate() {
            let index = BigUint::from(i);
            let unranked = unrank_code(&index, shape).unwrap();
            if rank_code(&unranked).unwrap() != index {
                failures.push(format!("{shape}: rank∘unrank ≠ id at {i}"));
            }
            let ranked = rank_code(code).unwrap();
            if unrank_code(&ranked, shape).unwrap() != *code {
                failures.push(format!("{shape}: unrank∘rank ≠ id at {code:?}"));
            }
        }
        let ids = generate_ids(shape, codes.len() as u64).unwrap();
        let distinct_codes: HashSet<&ForestCode> = ids.iter().collect();
        let distinct_forests: HashSet<RootedForest> = ids.iter().map(|c| decode_code(c).unwrap()).collect();
        if distinct_codes.len() != codes.len() || distinct_forests.len() != codes.len() {
            failures.push(format!(
                "{shape}: {} ids, {} distinct codes, {} distinct forests",
                ids.len(),
                distinct_codes.len(),
                distinct_forests.len()
            ));
        }
    }
    let elapsed = start.elapsed();
    report(6, "rank/unrank bijectivity", elapsed, || ensure(failures.is_empty(), || failures.join("; ")));
}

#[test]
fn criterion_7_sampler_uniformity() {
    const DRAWS: usize = 90_000;
    // 0.999 quantile of the chi-square distribution with 8 degrees of freedom.
    const CHI2_8_999: f64 = 26.124_481_558_376_14;

    let shape = ForestShape::new(2, 2, 0).unwrap();
    let space = enumerate_forests(2, 2, 0, DEFAULT_BUDGET).unwrap();
    let slot: HashMap<&RootedForest, usize> = space.iter().enumerate().map(|(i, f)| (f, i)).collect();

    let start = Instant::now();
    let mut counts = [0usize; 9];
    let mut sampler = ForestSampler::new(shape, 0x5eed_2024);
    let mut unknown = 0;
    for _ in 0..DRAWS {
        let forest = sampler.next_forest().unwrap();
        match slot.get(&forest) {
            Some(&i) => counts[i] += 1,
            None => unknown += 1,
        }
    }
    let expected = DRAWS as f64 / 9.0;
    let chi2: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();

    let first: Vec<RootedForest> = ForestSampler::new(shape, 99).take(1000).collect();
    let second: Vec<RootedForest> = ForestSampler::new(shape, 99).take(1000).collect();
    let elapsed = start.elapsed();

    report(7, "sampler uniformity", elapsed, || {
        ensure(space.len() == 9, || format!("space has {} forests", space.len()))?;
        ensure(unknown == 0, || format!("{unknown} draws outside the space"))?;
        ensure(chi2 < CHI2_8_999, || format!("chi-square {chi2:.3} ≥ {CHI2_8_999:.3} (counts {counts:?})"))?;
        ensure(first == second, || "same seed gave different sequences".into())?;
        println!("  chi-square = {chi2:.3}, counts = {counts:?}");
        Ok(())
    });
}

#[test]
fn criterion_8_linear_time_codec() {
    let shape = ForestShape::new(3, 499_999, 0).unwrap();
    let forest = ForestSampler::new(shape, 8).next_forest().unwrap();

    let start = Instant::now();
    let code = encode_forest(&forest).unwrap();
    let encode_time = start.elapsed();

    let start = Instant::now();
    let decoded = decode_code(&code).unwrap();
    let decode_time = start.elapsed();

    report(8, "codec performance", encode_time + decode_time, || {
        ensure(shape.n() == 999_999, || format!("n = {}", shape.n()))?;
        ensure(decoded == forest, || "round trip differs".into())?;
        ensure(encode_time < Duration::from_secs(5), || format!("encode took {encode_time:?}"))?;
        ensure(decode_time < Duration::from_secs(5), || format!("decode took {decode_time:?}"))?;
        println!("  encode {encode_time:.2?}, decode {decode_time:.2?}, n = {}", shape.n());
        Ok(())
    });
}
