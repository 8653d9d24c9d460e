//! Property-suite runner behind `verify`.
//!
//! Every suite walks the grid `1 <= d <= r <= rmax`, `d <= dmax`. The
//! `oracle` and `main-theorem` suites add cross-checks against slow
//! reference computations on a fixed family of small numerators.

use num_bigint::BigInt;
use num_traits::Zero;
use veronese_core::polyseries::veronese_series;
use veronese_core::simplicial::{is_f_vector, revlex_realize};
use veronese_core::veronese::{
    c_count, check_growth, check_recursion, check_sign_pattern, check_symmetry, veronese_g,
    veronese_numerator,
};
use veronese_core::{Check, IntPolynomial, RationalSeries, Report, Result};

use crate::args::Suite;

/// Brute-force counting is skipped once `(r+1)^d` exceeds this.
const BRUTE_LIMIT: u64 = 200_000;

const ALL: [Suite; 6] = [
    Suite::Symmetry,
    Suite::Recursion,
    Suite::Signs,
    Suite::Growth,
    Suite::Oracle,
    Suite::MainTheorem,
];

fn name(suite: Suite) -> &'static str {
    match suite {
        Suite::Symmetry => "symmetry",
        Suite::Recursion => "recursion",
        Suite::Signs => "signs",
        Suite::Growth => "growth",
        Suite::Oracle => "oracle",
        Suite::MainTheorem => "main-theorem",
        Suite::All => "all",
    }
}

pub(crate) fn run(suite: Suite, rmax: usize, dmax: usize) -> Result<Report> {
    let suites: &[Suite] = if suite == Suite::All { &ALL } else { std::slice::from_ref(&suite) };
    let small = small_numerators();
    let mut report =
        Report::new(name(suite)).with_grid(&[("rmax", rmax as i64), ("dmax", dmax as i64)]);
    for r in 1..=rmax {
        for d in 1..=r.min(dmax) {
            for &s in suites {
                report.absorb(cell(s, r, d, &small)?);
            }
        }
    }
    report.normalize();
    Ok(report)
}

fn cell(suite: Suite, r: usize, d: usize, small: &[IntPolynomial]) -> Result<Report> {
    match suite {
        Suite::Symmetry => check_symmetry(r, d),
        Suite::Recursion => check_recursion(r, d),
        Suite::Signs => check_sign_pattern(r, d),
        Suite::Growth => check_growth(r, d),
        Suite::Oracle => oracle(r, d, small),
        Suite::MainTheorem => main_theorem(r, d, small),
        Suite::All => unreachable!("expanded by run"),
    }
}

/// Every `h` with `h_0 = 1`, degree at most 2 and coefficients in `0..=3`.
fn small_numerators() -> Vec<IntPolynomial> {
    let mut out = Vec::new();
    for h1 in 0..=3 {
        for h2 in 0..=3 {
            out.push(IntPolynomial::from_i64s(&[1, h1, h2]));
        }
    }
    out
}

fn params(r: usize, d: usize) -> [(&'static str, i64); 2] {
    [("d", d as i64), ("r", r as i64)]
}

fn oracle(r: usize, d: usize, small: &[IntPolynomial]) -> Result<Report> {
    let mut report = Report::new("oracle");
    let mut mismatch = None;
    for h in small {
        let fast = veronese_numerator(h, d, r)?;
        let slow = veronese_series(&RationalSeries::new(h.clone(), d)?, r)?;
        if &fast != slow.numerator() {
            mismatch = Some((h, fast, slow.numerator().clone()));
            break;
        }
    }
    report.push(Check::expect("oracle.expansion", &params(r, d), mismatch.is_none(), || {
        let (h, fast, slow) = mismatch.unwrap();
        vec![
            ("h", h.to_string()),
            ("transform", fast.to_string()),
            ("expansion", slow.to_string()),
        ]
    }));

    let cells = (r as u64 + 1).checked_pow(d as u32);
    if cells.is_some_and(|c| c <= BRUTE_LIMIT) {
        let counts = brute_counts(r, d);
        let bad = (0..counts.len()).find(|&i| c_count(r, d, i as i64) != BigInt::from(counts[i]));
        report.push(Check::expect("oracle.count", &params(r, d), bad.is_none(), || {
            let i = bad.unwrap();
            vec![
                ("i", i.to_string()),
                ("formula", c_count(r, d, i as i64).to_string()),
                ("enumerated", counts[i].to_string()),
            ]
        }));
    }
    Ok(report)
}

/// Number of `x in {0..=r}^d` with each coordinate sum, indexed by sum.
fn brute_counts(r: usize, d: usize) -> Vec<u64> {
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

fn main_theorem(r: usize, d: usize, small: &[IntPolynomial]) -> Result<Report> {
    let mut report = Report::new("main-theorem");
    let mut failure = None;
    for h in small {
        if r < h.degree_or_zero().max(d) {
            continue;
        }
        let g = veronese_g(h, d, r)?;
        if !is_f_vector(g.entries()) {
            failure = Some((h, g.to_string(), "not an f-vector".to_string()));
            break;
        }
        let realized = revlex_realize(g.entries())?.f_vector()?;
        let mut expected = g.entries();
        while let [rest @ .., last] = expected {
            if last.is_zero() && !rest.is_empty() {
                expected = rest;
            } else {
                break;
            }
        }
        if realized.entries() != expected {
            failure = Some((h, g.to_string(), format!("realized {realized}")));
            break;
        }
    }
    report.push(Check::expect("main-theorem.realizable", &params(r, d), failure.is_none(), || {
        let (h, g, why) = failure.unwrap();
        vec![("h", h.to_string()), ("g", g), ("reason", why)]
    }));
    Ok(report)
}
