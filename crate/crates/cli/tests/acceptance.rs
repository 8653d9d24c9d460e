//! Acceptance battery: one PASS/FAIL line per criterion, each with its
//! wall-clock time against the allowed budget. Exits nonzero if any
//! criterion fails or overruns.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use veronese_core::polyseries::{g_vector, is_real_rooted, veronese_series};
use veronese_core::simplicial::{
    check_edgewise_hilbert, is_f_vector, is_m_sequence, revlex_realize_with_budget,
};
use veronese_core::veronese::{
    c_count, check_growth, check_recursion, check_sign_pattern, check_symmetry, column,
    find_positivity_threshold, g, ghat, veronese_g, veronese_h, veronese_numerator,
};
use veronese_core::{IntPolynomial, RationalSeries, Report, SimplicialComplex};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn poly(v: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(v)
}

fn trimmed(v: &[BigInt]) -> &[BigInt] {
    let len = v.iter().rposition(|x| *x != BigInt::from(0)).map_or(1, |i| i + 1);
    &v[..len.min(v.len())]
}

// ---------------------------------------------------------------- 1

const MATRIX_9_4: [[i64; 9]; 5] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [216, 165, 120, 84, 56, 35, 20, 10, 4],
    [456, 480, 489, 480, 456, 420, 375, 324, 270],
    [56, 84, 120, 165, 216, 270, 324, 375, 420],
    [0, 0, 0, 0, 1, 4, 10, 20, 35],
];

fn golden_matrix() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_veronese"))
        .args(["cmatrix", "--r", "9", "--d", "4"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit status {:?}", out.status.code()));
    }
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<i64>> = text
        .lines()
        .map(|l| l.split('\t').map(|c| c.parse().unwrap_or(i64::MIN)).collect())
        .collect();
    let expected: Vec<Vec<i64>> = MATRIX_9_4.iter().map(|r| r.to_vec()).collect();
    if rows != expected {
        return Err(format!("got {rows:?}"));
    }
    Ok("45/45 entries".into())
}

// ---------------------------------------------------------------- 2

struct Row {
    r: usize,
    d: usize,
    k: usize,
    column: Vec<i64>,
    g: Vec<i64>,
    ghat: Vec<i64>,
}

fn small_values_table() -> Vec<Row> {
    let mut rows = Vec::new();
    let row = |r, d, k, c: &[i64], gg: &[i64], gh: &[i64]| Row {
        r,
        d,
        k,
        column: c.to_vec(),
        g: gg.to_vec(),
        ghat: gh.to_vec(),
    };
    for r in 1..=12usize {
        rows.push(row(r, 1, 0, &[1, 0], &[1], &[1, -1]));
        for k in 1..r {
            rows.push(row(r, 1, k, &[0, 1], &[0], &[0, 1]));
        }
    }
    for r in 2..=12usize {
        let ri = r as i64;
        rows.push(row(r, 2, 0, &[1, ri - 1, 0], &[1, ri - 2], &[1, ri - 2, -ri + 1]));
        rows.push(row(r, 2, 1, &[0, ri, 0], &[0, ri], &[0, ri, -ri]));
    }
    for r in [5usize, 9] {
        let ri = r as i64;
        for k in 2..r {
            let ki = k as i64;
            rows.push(row(
                r,
                2,
                k,
                &[0, ri - ki + 1, ki - 1],
                &[0, ri - ki + 1],
                &[0, ri - ki + 1, 2 * ki - ri - 2],
            ));
        }
    }
    rows.push(row(3, 3, 0, &[1, 7, 1, 0], &[1, 6], &[1, 6, -6]));
    rows.push(row(3, 3, 1, &[0, 6, 3, 0], &[0, 6], &[0, 6, -3]));
    rows.push(row(3, 3, 2, &[0, 3, 6, 0], &[0, 3], &[0, 3, 3]));
    rows.push(row(4, 4, 0, &[1, 31, 31, 1, 0], &[1, 30, 0], &[1, 30, 0, -30]));
    rows.push(row(4, 4, 1, &[0, 20, 40, 4, 0], &[0, 20, 20], &[0, 20, 20, -36]));
    rows.push(row(4, 4, 2, &[0, 10, 44, 10, 0], &[0, 10, 34], &[0, 10, 34, -34]));
    rows.push(row(4, 4, 3, &[0, 4, 40, 20, 0], &[0, 4, 36], &[0, 4, 36, -20]));
    rows
}

fn golden_small_values() -> Outcome {
    let table = small_values_table();
    for t in &table {
        let (r, d, k) = (t.r, t.d, t.k);
        if column(r, d, k).entries() != ints(&t.column).as_slice() {
            return Err(format!("column({r},{d},{k}) = {:?}", column(r, d, k).entries()));
        }
        if g(r, d, k).entries() != ints(&t.g).as_slice() {
            return Err(format!("g({r},{d},{k}) = {:?}", g(r, d, k).entries()));
        }
        if ghat(r, d, k).entries() != ints(&t.ghat).as_slice() {
            return Err(format!("ghat({r},{d},{k}) = {:?}", ghat(r, d, k).entries()));
        }
    }
    Ok(format!("{} rows", table.len()))
}

// ---------------------------------------------------------------- 3

/// 200 seeded random numerators (h_0 = 1, degree <= 5, coefficients in
/// 0..=6) followed by every h_0 = 1, degree <= 2, coefficients <= 3.
fn oracle_test_set() -> Vec<IntPolynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0ac1e);
    let mut set = Vec::new();
    for _ in 0..200 {
        let mut h = vec![1i64];
        h.extend((0..5).map(|_| rng.gen_range(0..=6)));
        set.push(poly(&h));
    }
    for h1 in 0..=3 {
        for h2 in 0..=3 {
            set.push(poly(&[1, h1, h2]));
        }
    }
    set
}

fn oracle_equivalence() -> Outcome {
    let set = oracle_test_set();
    let mut cases = 0;
    for h in &set {
        for d in 1..=5 {
            for r in 1..=8 {
                let fast = veronese_h(h, d, r).map_err(|e| e.to_string())?;
                let series = RationalSeries::new(h.clone(), d).map_err(|e| e.to_string())?;
                let slow = veronese_series(&series, r).map_err(|e| e.to_string())?;
                if fast.len() != h.degree_or_zero().max(d) + 1
                    || trimmed(&fast) != slow.numerator().coeffs()
                {
                    return Err(format!("h={h} d={d} r={r}: {fast:?} vs {}", slow.numerator()));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

// ---------------------------------------------------------------- 4

fn identity_suites() -> Outcome {
    let mut all = Report::new("identities");
    let mut cells = 0;
    for r in 1..=12 {
        for d in 1..=r {
            for check in [check_symmetry, check_recursion, check_sign_pattern, check_growth] {
                all.absorb(check(r, d).map_err(|e| e.to_string())?);
            }
            cells += 1;
        }
    }
    let failures: Vec<String> = all
        .failures()
        .map(|c| {
            let p: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("{}({})", c.id, p.join(","))
        })
        .collect();
    if failures.is_empty() {
        Ok(format!("{cells} cells, {} checks", all.checks.len()))
    } else {
        Err(format!(
            "{} of {} checks fail: {}",
            failures.len(),
            all.checks.len(),
            failures.join(" ")
        ))
    }
}

// ---------------------------------------------------------------- 5

fn realizable_g_vectors() -> Outcome {
    let mut cases = 0u64;
    let mut faces = 0u64;
    for code in 0..6u32.pow(4) {
        let mut h = vec![1i64];
        h.extend((0..4).map(|i| i64::from(code / 6u32.pow(i) % 6)));
        let h = poly(&h);
        for d in 1..=6 {
            for r in h.degree_or_zero().max(d)..=10 {
                let gv = veronese_g(&h, d, r).map_err(|e| e.to_string())?;
                if !is_f_vector(gv.entries()) {
                    return Err(format!("h={h} d={d} r={r}: g={gv} is not an f-vector"));
                }
                let complex =
                    revlex_realize_with_budget(gv.entries(), usize::MAX).map_err(|e| e.to_string())?;
                let f = complex.f_vector_with_budget(usize::MAX).map_err(|e| e.to_string())?;
                if f.entries() != trimmed(gv.entries()) {
                    return Err(format!("h={h} d={d} r={r}: g={gv} realized as {f}"));
                }
                faces += f.entries().iter().map(|x| u64::try_from(x).unwrap_or(0)).sum::<u64>();
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases, {faces} faces"))
}

// ---------------------------------------------------------------- 6

fn complex(facets: Vec<Vec<u32>>) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets)
}

fn edgewise_corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out = Vec::new();
    for n in 1..=4u32 {
        out.push((format!("simplex{n}"), complex(vec![(1..=n).collect()])));
    }
    for n in [3u32, 4] {
        let facets = (1..=n).map(|s| (1..=n).filter(|&v| v != s).collect()).collect();
        out.push((format!("boundary{n}"), complex(facets)));
    }
    for n in 2..=5u32 {
        out.push((format!("path{n}"), complex((1..n).map(|v| vec![v, v + 1]).collect())));
    }
    for n in 3..=6u32 {
        out.push((format!("cycle{n}"), complex((1..=n).map(|v| vec![v, v % n + 1]).collect())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut made = 0;
    while made < 20 {
        let count = rng.gen_range(1..=5);
        let facets: Vec<Vec<u32>> = (0..count)
            .map(|_| (1..=5).filter(|_| rng.gen_bool(0.5)).collect())
            .collect();
        let c = complex(facets);
        if c.dim() >= 0 {
            out.push((format!("random{made}"), c));
            made += 1;
        }
    }
    out
}

fn edgewise_cross_check() -> Outcome {
    let corpus = edgewise_corpus();
    for (name, c) in &corpus {
        for r in 1..=4 {
            let check = check_edgewise_hilbert(c, r).map_err(|e| format!("{name}: {e}"))?;
            if !check.pass() {
                return Err(format!(
                    "{name} r={r}: {} vs {}",
                    check.h_edgewise, check.h_veronese
                ));
            }
        }
    }
    Ok(format!("{} complexes x 4 values of r", corpus.len()))
}

// ---------------------------------------------------------------- 7

fn monotonicity() -> Outcome {
    let mut cases = 0;
    for h in &oracle_test_set() {
        for d in 1..=5 {
            let half = Some(d / 2);
            let mut chain = vec![g_vector(h, half)];
            for r in d..=d + 2 {
                let v = veronese_numerator(h, d, r).map_err(|e| e.to_string())?;
                chain.push(g_vector(&v, half));
            }
            if let Some(w) = chain.windows(2).position(|w| !w[0].le_entrywise(&w[1])) {
                let shown: Vec<String> = chain.iter().map(ToString::to_string).collect();
                return Err(format!("h={h} d={d}: step {w} of [{}]", shown.join("] <= [")));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} chains"))
}

// ---------------------------------------------------------------- 8

fn m_sequence_threshold() -> Outcome {
    let h = poly(&[1, -1, 1]);
    let threshold = find_positivity_threshold(&h, 2, 20).map_err(|e| e.to_string())?;
    if threshold != Some(3) {
        return Err(format!("threshold {threshold:?}"));
    }
    for r in 3..=20i64 {
        let v = veronese_numerator(&h, 2, r as usize).map_err(|e| e.to_string())?;
        if v.coeffs() != ints(&[1, r - 2, 1]).as_slice() {
            return Err(format!("r={r}: numerator {v}"));
        }
        if !is_m_sequence(v.coeffs()) {
            return Err(format!("r={r}: {v} not an M-sequence"));
        }
        if r >= 4 && !is_real_rooted(&v) {
            return Err(format!("r={r}: {v} not real-rooted"));
        }
    }
    Ok("R=3; r=3..=20 checked".into())
}

// ---------------------------------------------------------------- 9

fn enumerate_counts(r: usize, d: usize) -> Vec<u64> {
    let mut counts = vec![0u64; d * r + 1];
    let mut x = vec![0usize; d];
    loop {
        counts[x.iter().sum::<usize>()] += 1;
        let Some(pos) = x.iter().position(|&v| v < r) else {
            return counts;
        };
        x[pos] += 1;
        x[..pos].iter_mut().for_each(|v| *v = 0);
    }
}

fn count_oracle() -> Outcome {
    let mut cases = 0;
    for r in 0..=6 {
        for d in 0..=5 {
            let counts = enumerate_counts(r, d);
            for (i, &n) in counts.iter().enumerate() {
                if c_count(r, d, i as i64) != BigInt::from(n) {
                    return Err(format!("C({r},{d},{i}) = {} but {n} enumerated", c_count(r, d, i as i64)));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} values"))
}

// ---------------------------------------------------------------- 10

const MAX_ENTRY: usize = 12;

/// `best[n][m]`: most triangles in a graph on at most `n` vertices with at
/// most `m` edges, for `n, m <= MAX_ENTRY`.
///
/// Depth-first over edge lists in lexicographic order whose vertices
/// appear in label order; every graph without isolated vertices has such
/// a labeling (breadth-first per component), so no graph is missed.
fn triangle_table() -> Vec<Vec<u32>> {
    fn grow(
        last: (usize, usize),
        k: usize,
        e: usize,
        tri: u32,
        adj: &mut [u16; MAX_ENTRY + 2],
        best: &mut [[u32; MAX_ENTRY + 1]; MAX_ENTRY + 1],
    ) {
        best[k][e] = best[k][e].max(tri);
        if e == MAX_ENTRY {
            return;
        }
        for a in last.0..=k {
            let start = if a == last.0 { last.1 + 1 } else { a + 1 };
            for b in start..=k + 1 {
                let fresh = if b < k {
                    0
                } else if b == k && a < k {
                    1
                } else if a == k && b == k + 1 {
                    2
                } else {
                    continue;
                };
                if k + fresh > MAX_ENTRY || adj[a] >> b & 1 == 1 {
                    continue;
                }
                let added = (adj[a] & adj[b]).count_ones();
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
                grow((a, b), k + fresh, e + 1, tri + added, adj, best);
                adj[a] &= !(1 << b);
                adj[b] &= !(1 << a);
            }
        }
    }
    let mut best = [[0u32; MAX_ENTRY + 1]; MAX_ENTRY + 1];
    let mut adj = [0u16; MAX_ENTRY + 2];
    // The first edge is (0, 1); start "before" it.
    grow((0, 0), 0, 0, 0, &mut adj, &mut best);
    let mut table = vec![vec![0u32; MAX_ENTRY + 1]; MAX_ENTRY + 1];
    for n in 0..=MAX_ENTRY {
        for m in 0..=MAX_ENTRY {
            let mut t = best[n][m];
            if n > 0 {
                t = t.max(table[n - 1][m]);
            }
            if m > 0 {
                t = t.max(table[n][m - 1]);
            }
            table[n][m] = t;
        }
    }
    table
}

/// `(1, f0, f1, f2)` and its prefixes are realizable iff the edges fit on
/// the vertices and the triangles fit in some graph with those edges.
fn realizable(v: &[usize], triangles: &[Vec<u32>]) -> bool {
    match v {
        [] => unreachable!(),
        [v0, rest @ ..] if *v0 == 1 => match rest {
            [] | [_] => true,
            [f0, f1] => *f1 <= f0 * f0.saturating_sub(1) / 2,
            [f0, f1, f2] => {
                *f1 <= f0 * f0.saturating_sub(1) / 2 && *f2 as u32 <= triangles[*f0][*f1]
            }
            _ => unreachable!(),
        },
        _ => false,
    }
}

fn kk_batteries() -> Outcome {
    let tagged_f: [(&[i64], bool); 3] =
        [(&[1, 4, 6, 4, 1], true), (&[1, 3, 4], false), (&[1, 5, 7, 2], true)];
    let tagged_m: [(&[i64], bool); 3] =
        [(&[1, 3, 6, 10], true), (&[1, 2, 4], false), (&[1, 0, 0], true)];
    for (v, want) in tagged_f {
        if is_f_vector(&ints(v)) != want {
            return Err(format!("is_f_vector{v:?} != {want}"));
        }
    }
    for (v, want) in tagged_m {
        if is_m_sequence(&ints(v)) != want {
            return Err(format!("is_m_sequence{v:?} != {want}"));
        }
    }
    let triangles = triangle_table();
    // complete graphs and a few hand-counted sparse cases
    for (n, m, t) in [(3, 3, 1), (4, 6, 4), (5, 10, 10), (4, 5, 2), (5, 8, 5), (12, 12, 11), (3, 2, 0)] {
        if triangles[n][m] != t {
            return Err(format!("triangle oracle T({n},{m}) = {}, expected {t}", triangles[n][m]));
        }
    }
    let mut vectors = 0;
    for len in 1..=4u32 {
        let base = MAX_ENTRY + 1;
        for code in 0..base.pow(len) {
            let v: Vec<usize> = (0..len).map(|i| code / base.pow(i) % base).collect();
            let as_big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            if is_f_vector(&as_big) != realizable(&v, &triangles) {
                return Err(format!("{v:?}: is_f_vector disagrees with exhaustive search"));
            }
            vectors += 1;
        }
    }
    Ok(format!("6 tagged examples, {vectors} vectors"))
}

// ----------------------------------------------------------------

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("golden matrix C^{9,4}", 1, golden_matrix),
        ("golden small-values table", 1, golden_small_values),
        ("transform equals expansion oracle", 60, oracle_equivalence),
        ("identity suites on 1 <= d <= r <= 12", 120, identity_suites),
        ("Veronese g-vectors are f-vectors", 120, realizable_g_vectors),
        ("edgewise Hilbert identity", 60, edgewise_cross_check),
        ("g-vector monotonicity chain", 30, monotonicity),
        ("M-sequence threshold for (1,-1,1)", 5, m_sequence_threshold),
        ("brute-force count oracle", 10, count_oracle),
        ("Kruskal-Katona and Macaulay batteries", 60, kk_batteries),
    ];
    let mut failed = 0;
    for (n, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let over = took > Duration::from_secs(*limit);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {limit}s budget")),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {}: {status} [{name}] {detail} ({:.2}s / {limit}s)",
            n + 1,
            took.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
