//! Acceptance suite: one line per criterion.
//!
//! A criterion that fails is printed as `[FAIL]`. Some criteria state values
//! that exhaustive checking refutes; for those the suite also checks that the
//! failure is exactly the recorded discrepancy, confirmed by an independent
//! oracle. The process exits nonzero if any criterion fails in any other way.
//!
//! Set `PISTR_BLESS=1` to rewrite the archived `B_n + C_m` truth table from
//! the oracle.

mod common;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use common::*;
use pistr::constructions::{
    apply_injections, direct_sum, l_matrix, l_matrix_k1, m_matrix, named_family, row_profile,
    tilde_matrix, BlockPair, Family, FixedMatrix, InjectionSpec,
};
use pistr::engine::{construct_labeling, Source};
use pistr::graph::{
    add_cross_edge, complete_graph, disjoint_union, matrix_to_labeled_graph, EdgeLabeling, Graph,
    WeightedAdjacencyMatrix,
};
use pistr::solver::{k4_characterization, ps_exact, ps_exact_disconnected, PsValue, SolverConfig};
use pistr::verifier::{check_matrix, is_product_irregular, product_degrees};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TABLE_PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/bc_truth_table.txt");

enum Verdict {
    Pass(String),
    /// Failed; `known` says whether the failure is exactly the recorded one.
    Fail {
        detail: String,
        known: bool,
    },
}

fn run(id: &str, title: &str, limit: Duration, f: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let verdict = f();
    let took = start.elapsed();
    let slow = took > limit;
    let (tag, detail, ok) = match verdict {
        Verdict::Pass(d) if !slow => ("PASS", d, true),
        Verdict::Pass(d) => ("FAIL", format!("{d}; over the {:.0?} limit", limit), false),
        Verdict::Fail { detail, known } => {
            let note = if known { " [recorded discrepancy]" } else { "" };
            ("FAIL", format!("{detail}{note}"), known && !slow)
        }
    };
    println!("[{tag}] {id} {title} ({took:.2?}): {detail}");
    ok
}

fn m(rows: &WeightedAdjacencyMatrix) -> bool {
    check_matrix(rows).map(|r| r.ok).unwrap_or(false)
}

fn sum(blocks: &[WeightedAdjacencyMatrix]) -> WeightedAdjacencyMatrix {
    direct_sum(blocks).unwrap()
}

fn fam(n: usize, f: Family) -> WeightedAdjacencyMatrix {
    named_family(n, f).unwrap()
}

fn fixed(f: FixedMatrix) -> WeightedAdjacencyMatrix {
    f.matrix()
}

/// Library verdict and oracle verdict must agree; returns the verdict.
fn agreed(mat: &WeightedAdjacencyMatrix, disagreements: &mut Vec<String>, name: &str) -> bool {
    let lib = m(mat);
    if oracle_irregular(&rows_of(mat)) != Some(lib) {
        disagreements.push(name.to_string());
    }
    lib
}

fn criterion_1() -> Verdict {
    use Family::*;
    let mut checked = 0usize;
    let mut failures: Vec<String> = Vec::new();
    let mut disagreements = Vec::new();
    let mut check = |name: String, mat: WeightedAdjacencyMatrix, failures: &mut Vec<String>| {
        checked += 1;
        if !agreed(&mat, &mut disagreements, &name) {
            failures.push(name);
        }
    };

    for n in 4..=60 {
        for (x, y, z) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
            let mat = m_matrix(n, x, y, z).unwrap();
            if rows_of(&mat) != oracle_m(n, x, y, z) {
                failures.push(format!("M{n}({x},{y},{z}) entries"));
            }
            check(format!("M{n}({x},{y},{z})"), mat, &mut failures);
        }
    }
    for n in 4..=40 {
        for mm in n..=40 {
            if [(4, 4), (5, 5), (6, 6)].contains(&(n, mm)) {
                continue;
            }
            check(
                format!("A{n} + B{mm}"),
                sum(&[fam(n, A), fam(mm, B)]),
                &mut failures,
            );
        }
    }
    for n in 5..=40 {
        check(
            format!("T + B{n}"),
            sum(&[fixed(FixedMatrix::T), fam(n, B)]),
            &mut failures,
        );
    }
    for n in 4..=40 {
        check(format!("L({n})"), l_matrix(n).unwrap(), &mut failures);
        check(format!("L'({n})"), l_matrix_k1(n).unwrap(), &mut failures);
    }
    for n in 7..=40 {
        for mm in 4..=40 {
            check(
                format!("A{n} + C{mm}"),
                sum(&[fam(n, A), fam(mm, C)]),
                &mut failures,
            );
        }
    }
    // The theorem's hypothesis orders the sizes m >= l >= n >= 7 for
    // A_n + B_m + C_l.
    for n in 7..=25 {
        for l in n..=25 {
            for mm in l..=25 {
                let mat = sum(&[fam(n, A), fam(mm, B), fam(l, C)]);
                check(format!("A{n} + B{mm} + C{l}"), mat, &mut failures);
            }
        }
    }
    for f in FixedMatrix::ALL {
        check(f.name().to_string(), f.matrix(), &mut failures);
    }

    // Published direct sums for a part of size 4, 5 or 6, unrepaired.
    let t5 = || fixed(FixedMatrix::T5);
    let t5t = || fixed(FixedMatrix::T5Tilde);
    let t6 = || fixed(FixedMatrix::T6);
    let t6t = || fixed(FixedMatrix::T6Tilde);
    for k in 4..=6 {
        for n in 7..=25 {
            for mm in n..=25 {
                check(
                    format!("A{n} + B{mm} + C{k}"),
                    sum(&[fam(n, A), fam(mm, B), fam(k, C)]),
                    &mut failures,
                );
            }
        }
    }
    for n in 7..=25 {
        check(
            format!("T6 + T6_TILDE + B{n}"),
            sum(&[t6(), t6t(), fam(n, B)]),
            &mut failures,
        );
        check(
            format!("T6_MOD_567 + T5 + B{n}"),
            sum(&[fixed(FixedMatrix::T6Mod567), t5(), fam(n, B)]),
            &mut failures,
        );
        check(
            format!("T5 + T5_TILDE + B{n}"),
            sum(&[t5(), t5t(), fam(n, B)]),
            &mut failures,
        );
        check(
            format!("A4 + B{n} + T5_TILDE"),
            sum(&[fam(4, A), fam(n, B), t5t()]),
            &mut failures,
        );
    }
    check(
        "T5 + T5_TILDE + P6".into(),
        sum(&[t5(), t5t(), fixed(FixedMatrix::P6)]),
        &mut failures,
    );
    for n in 8..=25 {
        check(
            format!("A4 + B6 + B{n}"),
            sum(&[fam(4, A), fam(6, B), fam(n, B)]),
            &mut failures,
        );
    }
    check(
        "A4 + B7 + T6_TILDE".into(),
        sum(&[fam(4, A), fam(7, B), t6t()]),
        &mut failures,
    );
    check(
        "A4 + T5_TILDE_MOD_456 + B6".into(),
        sum(&[fam(4, A), fixed(FixedMatrix::T5TildeMod456), fam(6, B)]),
        &mut failures,
    );
    let blocks666 = [
        fixed(FixedMatrix::M666Block1),
        fixed(FixedMatrix::M666Block2),
        fixed(FixedMatrix::M666Block3),
    ];
    check(
        "M666_BLOCK1 + M666_BLOCK2 + M666_BLOCK3".into(),
        sum(&blocks666),
        &mut failures,
    );
    let minor = blocks666[0].without_vertex(0).unwrap();
    check(
        "M666_BLOCK1[2..6] + M666_BLOCK2 + M666_BLOCK3".into(),
        sum(&[minor, blocks666[1].clone(), blocks666[2].clone()]),
        &mut failures,
    );

    // Tilde sums with the two injected cross edges of each case.
    use BlockPair::*;
    let inj = InjectionSpec::new;
    let tilde = |sizes: [usize; 3]| -> WeightedAdjacencyMatrix {
        sum(&[
            tilde_matrix(sizes[0], A).unwrap(),
            tilde_matrix(sizes[1], B).unwrap(),
            tilde_matrix(sizes[2], C).unwrap(),
        ])
    };
    let cases: [([usize; 3], [InjectionSpec; 2]); 12] = [
        ([5, 5, 5], [inj(P12, 3, 3, 3), inj(P23, 3, 3, 2)]),
        ([5, 5, 5], [inj(P12, 3, 3, 3), inj(P23, 1, 3, 2)]),
        ([4, 5, 5], [inj(P12, 2, 3, 3), inj(P23, 3, 3, 2)]),
        ([4, 5, 5], [inj(P12, 3, 3, 3), inj(P23, 1, 3, 2)]),
        ([4, 5, 5], [inj(P12, 2, 3, 2), inj(P13, 2, 3, 2)]),
        ([4, 5, 5], [inj(P12, 2, 3, 2), inj(P13, 4, 3, 2)]),
        ([4, 5, 4], [inj(P12, 2, 3, 3), inj(P23, 3, 2, 2)]),
        ([4, 4, 5], [inj(P13, 2, 3, 3), inj(P23, 2, 2, 3)]),
        ([4, 5, 4], [inj(P13, 2, 2, 3), inj(P23, 3, 2, 3)]),
        ([4, 5, 4], [inj(P13, 2, 2, 3), inj(P23, 3, 1, 3)]),
        ([4, 4, 4], [inj(P13, 2, 2, 3), inj(P23, 3, 2, 3)]),
        ([4, 4, 4], [inj(P13, 2, 2, 3), inj(P23, 3, 1, 3)]),
    ];
    for (sizes, specs) in &cases {
        let mat = apply_injections(&tilde(*sizes), sizes, specs).unwrap();
        let name = format!(
            "A{}_TILDE + B{}_TILDE + C{}_TILDE ; {} {}",
            sizes[0], sizes[1], sizes[2], specs[0], specs[1]
        );
        check(name, mat, &mut failures);
    }

    let known: BTreeSet<&str> = [
        "T6 + T6_TILDE + B7",
        "A4 + B7 + T6_TILDE",
        "A4_TILDE + B4_TILDE + C5_TILDE ; T13(2, 3, 3) T23(2, 2, 3)",
    ]
    .into();
    if !disagreements.is_empty() {
        return Verdict::Fail {
            detail: format!("library and oracle disagree on {disagreements:?}"),
            known: false,
        };
    }
    if failures.is_empty() {
        return Verdict::Pass(format!("{checked} matrices product-irregular"));
    }
    let got: BTreeSet<&str> = failures.iter().map(String::as_str).collect();
    Verdict::Fail {
        detail: format!(
            "{} of {checked} not product-irregular: {failures:?}",
            failures.len()
        ),
        known: got == known,
    }
}

fn bc_table(verdict: impl Fn(usize, usize) -> Option<(usize, usize)>) -> String {
    let mut out = String::from("# n m verdict [colliding rows, 1-based]\n");
    for n in 4..=20 {
        for mm in 4..=20 {
            match verdict(n, mm) {
                None => writeln!(out, "{n} {mm} ok").unwrap(),
                Some((u, v)) => writeln!(out, "{n} {mm} fail {} {}", u + 1, v + 1).unwrap(),
            }
        }
    }
    out
}

fn criterion_2() -> Verdict {
    use Family::*;
    let mut problems = Vec::new();
    let expect_fail = [
        ("A4 + B4", sum(&[fam(4, A), fam(4, B)])),
        ("A5 + B5", sum(&[fam(5, A), fam(5, B)])),
        ("A6 + B6", sum(&[fam(6, A), fam(6, B)])),
        ("B5 + C5", sum(&[fam(5, B), fam(5, C)])),
        ("B6 + C6", sum(&[fam(6, B), fam(6, C)])),
    ];
    let mut witnesses = Vec::new();
    for (name, mat) in &expect_fail {
        let r = check_matrix(mat).unwrap();
        match r.witness {
            Some((u, v)) if !r.ok && r.degrees[u] == r.degrees[v] => {
                witnesses.push(format!("{name}@({},{})", u + 1, v + 1))
            }
            _ => problems.push(format!("{name} has no witness")),
        }
    }

    let library = bc_table(|n, mm| {
        check_matrix(&sum(&[fam(n, B), fam(mm, C)]))
            .unwrap()
            .witness
    });
    let oracle = bc_table(|n, mm| {
        let rows = oracle_direct_sum(&[oracle_m(n, 2, 3, 1), oracle_m(mm, 3, 1, 2)]);
        oracle_witness(&oracle_row_products(&rows).unwrap())
    });
    if library != oracle {
        problems.push("library truth table differs from the oracle".into());
    }
    if std::env::var("PISTR_BLESS").is_ok_and(|v| v == "1") {
        std::fs::write(TABLE_PATH, &oracle).unwrap();
    }
    match std::fs::read_to_string(TABLE_PATH) {
        Ok(archived) if archived == oracle => {}
        Ok(_) => problems.push("archived truth table is stale".into()),
        Err(e) => problems.push(format!("archived truth table unreadable: {e}")),
    }
    let failing = library.lines().filter(|l| l.contains("fail")).count();
    if problems.is_empty() {
        Verdict::Pass(format!(
            "witnesses {}; B+C table: {failing} of 289 pairs fail, archived",
            witnesses.join(" ")
        ))
    } else {
        Verdict::Fail {
            detail: problems.join("; "),
            known: false,
        }
    }
}

fn cliques(sizes: &[usize]) -> Graph {
    let mut g = complete_graph(sizes[0]).unwrap();
    for &n in &sizes[1..] {
        g = disjoint_union(&g, &complete_graph(n).unwrap());
    }
    g
}

fn oracle_labeling_ok(lab: &EdgeLabeling) -> bool {
    let edges: Vec<_> = lab.iter().collect();
    let p = oracle_graph_products(lab.graph().order(), &edges);
    oracle_witness(&p).is_none()
}

/// Smallest strength admitting an irregular labeling, by plain enumeration.
fn oracle_brute_ps(g: &Graph, s_max: u32) -> Option<u32> {
    let e = g.size();
    for s in 1..=s_max {
        let total = (s as u64).pow(e as u32);
        for code in 0..total {
            let mut c = code;
            let edges: Vec<_> = g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let w = (c % s as u64) as u32 + 1;
                    c /= s as u64;
                    (u, v, w)
                })
                .collect();
            if oracle_witness(&oracle_graph_products(g.order(), &edges)).is_none() {
                return Some(s);
            }
        }
    }
    None
}

fn criterion_3() -> Verdict {
    let cfg = SolverConfig::default();
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    let mut known_ok = true;
    let second = Duration::from_secs(1);

    let t = Instant::now();
    let k3 = ps_exact(&complete_graph(3).unwrap(), 8, cfg).unwrap();
    let dt = t.elapsed();
    lines.push(format!("ps(K3) = {:?} in {dt:.2?}", k3.value));
    if k3.value != PsValue::Exact(3) || dt > second {
        failures.push("K3");
        known_ok = false;
    }

    let k33 = add_cross_edge(&cliques(&[3, 3]), 0, 3).unwrap();
    let t = Instant::now();
    let r = ps_exact(&k33, 8, cfg).unwrap();
    let dt = t.elapsed();
    lines.push(format!("ps(K3+K3+edge) = {:?} in {dt:.2?}", r.value));
    if r.value != PsValue::Exact(4) || dt > second {
        failures.push("K3+K3+edge");
        // Recorded: value 3, certified, and the oracle agrees.
        let cert_ok = r
            .certificate
            .as_ref()
            .is_some_and(|c| c.strength() <= 3 && oracle_labeling_ok(c));
        known_ok &= r.value == PsValue::Exact(3)
            && cert_ok
            && oracle_brute_ps(&k33, 4) == Some(3)
            && dt <= second;
    }

    let k44 = cliques(&[4, 4]);
    let t = Instant::now();
    let r = ps_exact(&k44, 3, cfg).unwrap();
    let dt = t.elapsed();
    let exact = ps_exact(&k44, 8, cfg).unwrap().value;
    lines.push(format!(
        "ps(K4+K4) at s_max 3 = {:?} in {dt:.2?}, exact {exact:?}",
        r.value
    ));
    if r.value != PsValue::GreaterThan(3) || dt > second {
        failures.push("K4+K4");
        known_ok = false;
    }

    let g = cliques(&[5, 5, 4]);
    let t = Instant::now();
    let r = ps_exact_disconnected(&g, 8, cfg).unwrap();
    let dt = t.elapsed();
    lines.push(format!("ps(K5+K5+K4) = {:?} in {dt:.2?}", r.value));
    if r.value != PsValue::Exact(4) || dt > Duration::from_secs(600) {
        failures.push("K5+K5+K4");
        let cert_ok = r
            .certificate
            .as_ref()
            .is_some_and(|c| c.strength() <= 3 && oracle_labeling_ok(c));
        known_ok &= r.value == PsValue::Exact(3) && cert_ok;
    }

    if failures.is_empty() {
        Verdict::Pass(lines.join("; "))
    } else {
        Verdict::Fail {
            detail: format!("{}; mismatched: {failures:?}", lines.join("; ")),
            known: known_ok && failures == ["K3+K3+edge", "K5+K5+K4"],
        }
    }
}

fn criterion_4() -> Verdict {
    let c = k4_characterization();
    // Oracle: all 729 labelings of K4 by plain enumeration.
    let k4 = complete_graph(4).unwrap();
    let mut irregular = 0;
    let mut converse_failures = 0;
    for code in 0..729u32 {
        let edges: Vec<_> = k4
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| (u, v, code / 3u32.pow(e as u32) % 3 + 1))
            .collect();
        let p = oracle_graph_products(4, &edges);
        let ok = oracle_witness(&p).is_none();
        irregular += usize::from(ok);
        converse_failures += usize::from(!ok && p.contains(&6));
    }
    let detail = format!(
        "{} labelings, {} irregular; irregular implies a (1,1) vertex: {}; a (1,1) vertex implies irregular: {} ({} counterexamples)",
        c.labelings,
        c.irregular,
        c.forward_holds,
        c.converse_holds,
        c.counterexamples.len()
    );
    if c.holds() {
        return Verdict::Pass(detail);
    }
    let known = c.labelings == 729
        && c.irregular == irregular
        && c.forward_holds
        && !c.converse_holds
        && c.counterexamples.len() == converse_failures;
    Verdict::Fail { detail, known }
}

/// Shapes whose labeling comes from a proved construction.
fn theorem_shape(sizes: &[usize]) -> bool {
    let mut s = sizes.to_vec();
    s.sort_unstable();
    match s[..] {
        [n] => n >= 3,
        [n, m] => n + m > 6 && (n, m) != (3, 4) || (n <= 2 && m >= 4),
        [a, b, c] => a >= 4 && !(a == 4 && b == 4 && c >= 6) && (a, b, c) != (4, 6, 6),
        _ => false,
    }
}

fn criterion_5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut problems = Vec::new();
    let (mut theorem, mut fallback) = (0, 0);
    let mut fallback_strengths = BTreeSet::new();
    let mut shape_changes = 0;
    for i in 0..200 {
        let sizes: Vec<usize> = if i < 100 {
            let total = rng.gen_range(7..=60);
            let small = rng.gen_range(1..=total / 2);
            vec![small, total - small]
        } else {
            (0..3).map(|_| rng.gen_range(4..=25)).collect()
        };
        let p_extra = rng.gen_range(0.0..0.05);
        let (g, _) = planted_cliques(&mut rng, &sizes, p_extra);
        let out = match construct_labeling(&g) {
            Ok(o) => o,
            Err(e) => {
                problems.push(format!("{sizes:?}: {e}"));
                continue;
            }
        };
        let cover = &out.case_trace.cover_sizes;
        let mut planted = sizes.clone();
        planted.sort_unstable();
        if *cover != planted {
            shape_changes += 1;
        }
        if !oracle_labeling_ok(&out.labeling) || !is_product_irregular(&out.labeling).unwrap().ok {
            problems.push(format!("{sizes:?}: labeling not irregular"));
        }
        if theorem_shape(cover) {
            theorem += 1;
            if out.source != Source::Theorem || out.strength != 3 {
                problems.push(format!(
                    "{cover:?}: {} strength {}",
                    out.source, out.strength
                ));
            }
        } else {
            fallback += 1;
            fallback_strengths.insert(out.strength);
        }
    }
    // The random sizes rarely hit a fallback shape, so each one is also run
    // on a fixed sample.
    let fallback_shapes: [&[usize]; 8] = [
        &[3, 4],
        &[3, 3],
        &[2, 3],
        &[4, 4, 6],
        &[4, 4, 11],
        &[4, 6, 6],
        &[3, 5, 9],
        &[2, 3, 3],
    ];
    for sizes in fallback_shapes {
        let (g, _) = planted_cliques(&mut rng, sizes, 0.02);
        match construct_labeling(&g) {
            Ok(out) if oracle_labeling_ok(&out.labeling) => {
                if !theorem_shape(&out.case_trace.cover_sizes) {
                    fallback += 1;
                    fallback_strengths.insert(out.strength);
                }
            }
            Ok(_) => problems.push(format!("{sizes:?}: labeling not irregular")),
            Err(e) => problems.push(format!("{sizes:?}: {e}")),
        }
    }
    let detail = format!(
        "{theorem} theorem paths at strength 3, {fallback} fallback shapes with strengths {fallback_strengths:?}, {shape_changes} random covers differ from the planted sizes"
    );
    if problems.is_empty() {
        Verdict::Pass(detail)
    } else {
        Verdict::Fail {
            detail: format!("{detail}; {problems:?}"),
            known: false,
        }
    }
}

fn criterion_6() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let cfg = SolverConfig::default();
    let mut problems = Vec::new();
    for _ in 0..100 {
        let g = random_disconnected(&mut rng, 14);
        let a = ps_exact(&g, 10, cfg).unwrap();
        let b = ps_exact_disconnected(&g, 10, cfg).unwrap();
        if a.value != b.value {
            problems.push(format!("{:?}: {:?} vs {:?}", g.edges(), a.value, b.value));
        }
    }
    let plain = SolverConfig {
        prune: false,
        ..cfg
    };
    let mut max_ps = 0;
    for _ in 0..100 {
        let n = rng.gen_range(3..=7);
        let max_extra = (10 - (n - 1)).min(n * (n - 1) / 2 - (n - 1));
        let extra = rng.gen_range(0..=max_extra);
        let g = random_connected(&mut rng, n, extra);
        let a = ps_exact(&g, 10, cfg).unwrap();
        let b = ps_exact(&g, 10, plain).unwrap();
        if a.value != b.value {
            problems.push(format!(
                "{:?}: pruned {:?} vs plain {:?}",
                g.edges(),
                a.value,
                b.value
            ));
        }
        max_ps = max_ps.max(a.exact().unwrap_or(0));
    }
    if problems.is_empty() {
        Verdict::Pass(format!(
            "100 disconnected graphs agree; 100 graphs with <= 10 edges agree pruned and plain (largest ps {max_ps})"
        ))
    } else {
        Verdict::Fail {
            detail: format!("{problems:?}"),
            known: false,
        }
    }
}

fn criterion_7() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut problems = Vec::new();

    // Row census over the catalog range, with distinct x, y, z.
    let mut rows = 0;
    for n in 4..=60 {
        let lib = m_matrix(n, 5, 7, 11).unwrap();
        for (i, row) in oracle_m(n, 5, 7, 11).iter().enumerate() {
            let p = row_profile(n, i + 1).unwrap();
            let c = value_counts(row);
            let want = (
                c.get(&5).copied().unwrap_or(0),
                c.get(&7).copied().unwrap_or(0),
                c.get(&11).copied().unwrap_or(0),
            );
            let lib_c = value_counts(lib.row(i));
            let lib_counts = (
                lib_c.get(&5).copied().unwrap_or(0),
                lib_c.get(&7).copied().unwrap_or(0),
                lib_c.get(&11).copied().unwrap_or(0),
            );
            if (p.x_count, p.y_count, p.z_count) != want || lib_counts != want {
                problems.push(format!("row profile n={n} i={}", i + 1));
            }
            rows += 1;
        }
    }

    // 1-label transparency.
    let mut extensions = 0;
    while extensions < 500 {
        let n = rng.gen_range(4..=7);
        let extra = rng.gen_range(0..=3);
        let h = random_connected(&mut rng, n, extra);
        let cert = ps_exact(&h, 12, SolverConfig::default())
            .unwrap()
            .certificate
            .unwrap();
        let base = product_degrees(&cert).unwrap();
        for _ in 0..10 {
            let mut g = h.clone();
            for _ in 0..rng.gen_range(1..=4) {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if u != v && !g.has_edge(u, v) {
                    g = add_cross_edge(&g, u, v).unwrap();
                }
            }
            let ext = cert.extend_with_ones(&g).unwrap();
            if product_degrees(&ext).unwrap() != base || !is_product_irregular(&ext).unwrap().ok {
                problems.push(format!("extension of {:?}", h.edges()));
            }
            extensions += 1;
        }
    }

    // Permutation invariance.
    for _ in 0..500 {
        let n = rng.gen_range(3..=9);
        let extra = rng.gen_range(0..=6);
        let g = random_connected(&mut rng, n, extra);
        let labels = (0..g.size()).map(|_| rng.gen_range(1..=4)).collect();
        let lab = EdgeLabeling::new(g, labels).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let moved = lab.permuted(&perm).unwrap();
        let a = is_product_irregular(&lab).unwrap();
        let b = is_product_irregular(&moved).unwrap();
        let permuted_ok = (0..n).all(|v| a.degrees[v] == b.degrees[perm[v]]);
        if a.ok != b.ok || !permuted_ok {
            problems.push(format!("permutation {perm:?}"));
        }
    }

    // Matrix route against graph route and oracle.
    for _ in 0..1000 {
        let order = rng.gen_range(2..=10);
        let raw = random_matrix(&mut rng, order, 4);
        let mat = WeightedAdjacencyMatrix::from_rows(&raw).unwrap();
        let a = check_matrix(&mat);
        let b = matrix_to_labeled_graph(&mat).and_then(|l| is_product_irregular(&l));
        let oracle = oracle_irregular(&rows_of(&mat));
        let same = match (&a, &b) {
            (Ok(x), Ok(y)) => x == y && oracle == Some(x.ok),
            (Err(x), Err(y)) => x == y && oracle.is_none(),
            _ => false,
        };
        if !same {
            problems.push(format!("matrix {raw:?}"));
        }
    }

    if problems.is_empty() {
        Verdict::Pass(format!(
            "{rows} row profiles, {extensions} 1-label extensions, 500 permutations, 1000 matrices"
        ))
    } else {
        Verdict::Fail {
            detail: format!(
                "{} problems, first {:?}",
                problems.len(),
                &problems[..problems.len().min(5)]
            ),
            known: false,
        }
    }
}

fn main() {
    let min = |m: u64| Duration::from_secs(60 * m);
    let results = [
        run("C1", "construction catalog validity", min(1), criterion_1),
        run(
            "C2",
            "exception map and B+C truth table",
            min(1),
            criterion_2,
        ),
        run("C3", "exact values", min(10), criterion_3),
        run(
            "C4",
            "K4 characterization",
            Duration::from_secs(1),
            criterion_4,
        ),
        run("C5", "engine end-to-end", min(10), criterion_5),
        run("C6", "cross-solver equivalence", min(10), criterion_6),
        run("C7", "invariant suites", min(10), criterion_7),
    ];
    if results.iter().any(|ok| !ok) {
        std::process::exit(1);
    }
}
