//! Macaulay representations, the Kruskal–Katona and Macaulay bounds, and
//! the compressed (squashed-order) realization of f-vectors.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::complex::{FacetBuilder, SimplicialComplex, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::polyseries::join_ints;

fn binom_big(n: &BigInt, k: usize) -> BigInt {
    if n < &BigInt::from(k) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// The `i`-binomial representation `n = C(a_i, i) + C(a_{i-1}, i-1) + ...`
/// with `a_i > a_{i-1} > ... >= a_j >= j >= 1`, as `(a, j)` pairs from the
/// top down. Zero has the empty representation.
pub fn binomial_representation(n: &BigInt, i: usize) -> Vec<(BigInt, usize)> {
    assert!(i >= 1, "binomial representation needs i >= 1");
    assert!(!n.is_negative(), "binomial representation needs n >= 0");
    let mut rest = n.clone();
    let mut out = Vec::new();
    for j in (1..=i).rev() {
        if rest.is_zero() {
            break;
        }
        let a = if j == 1 {
            rest.clone()
        } else {
            // Largest a with C(a, j) <= rest.
            let mut hi = BigInt::from(2 * j);
            while binom_big(&hi, j) <= rest {
                hi *= 2;
            }
            let mut lo = BigInt::from(j);
            while &hi - &lo > BigInt::one() {
                let mid: BigInt = (&lo + &hi) / 2;
                if binom_big(&mid, j) <= rest {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            lo
        };
        rest -= binom_big(&a, j);
        out.push((a, j));
    }
    out
}

/// Largest number of `(i+1)`-sets whose shadow fits in `n` sets of size `i`:
/// `sum C(a_j, j+1)`.
pub fn kruskal_katona_bound(n: &BigInt, i: usize) -> BigInt {
    binomial_representation(n, i)
        .iter()
        .map(|(a, j)| binom_big(a, j + 1))
        .sum()
}

/// Macaulay's growth bound `n^<i> = sum C(a_j + 1, j + 1)`.
pub fn macaulay_bound(n: &BigInt, i: usize) -> BigInt {
    binomial_representation(n, i)
        .iter()
        .map(|(a, j)| binom_big(&(a + 1), j + 1))
        .sum()
}

fn bounded_by(v: &[BigInt], bound: impl Fn(&BigInt, usize) -> BigInt) -> bool {
    if !v.first().is_some_and(One::is_one) || v.iter().any(Signed::is_negative) {
        return false;
    }
    (1..v.len().saturating_sub(1)).all(|i| v[i + 1] <= bound(&v[i], i))
}

/// Macaulay's characterization of Hilbert functions of standard graded
/// Artinian algebras.
pub fn is_m_sequence(v: &[BigInt]) -> bool {
    bounded_by(v, macaulay_bound)
}

/// Kruskal–Katona: `v = (1, f_0, f_1, ...)` is the f-vector of a simplicial
/// complex. Trailing zeros are allowed; `(1)` is the complex `{∅}`.
pub fn is_f_vector(v: &[BigInt]) -> bool {
    bounded_by(v, kruskal_katona_bound)
}

/// `(1, α_0, ..., α_{d-1})` is an f-vector dominated entrywise by `f`.
///
/// `alpha` is given as `(0, 1, α_0, ..., α_{d-1})` and `f` as
/// `(1, f_0, ..., f_d)`; both must have length `d + 2`.
pub fn is_basic_admissible(alpha: &[BigInt], f: &[BigInt]) -> Result<bool> {
    if alpha.len() < 2 || alpha.len() != f.len() {
        return Err(Error::domain(format!(
            "alpha and f must both have length d+2, got {} and {}",
            alpha.len(),
            f.len()
        )));
    }
    if !alpha[0].is_zero() || !alpha[1].is_one() {
        return Err(Error::domain("alpha must start with 0,1"));
    }
    if !f[0].is_one() {
        return Err(Error::domain("f must start with 1"));
    }
    let a = &alpha[2..];
    let dominated = a.iter().zip(&f[1..]).all(|(ai, fi)| fi >= ai);
    Ok(dominated && is_f_vector(&alpha[1..]))
}

/// `C(n, k)` in `u128`, saturating; only ever compared against counts that
/// fit in `usize`.
fn binom_sat(n: u32, k: usize) -> u128 {
    if (n as usize) < k {
        return 0;
    }
    let mut acc: u128 = 1;
    for j in 0..k as u128 {
        acc = match acc.checked_mul(n as u128 - j) {
            Some(x) => x / (j + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Number of `(i-1)`-sets in the shadow of the first `m` sets of size `i`
/// in squashed order: `sum C(a_j, j-1)` over the `i`-binomial representation.
fn lower_shadow(m: &BigInt, i: usize) -> BigInt {
    binomial_representation(m, i)
        .iter()
        .map(|(a, j)| binom_big(a, j - 1))
        .sum()
}

/// The set of the given rank in squashed order on `size`-subsets of
/// `{1, 2, ...}`: greedily `rank = sum_j C(c_j - 1, j)`.
fn colex_unrank(mut rank: u128, size: usize, out: &mut Vec<u32>) {
    out.clear();
    out.resize(size, 0);
    for j in (1..=size).rev() {
        // Largest c with C(c - 1, j) <= rank; c >= j.
        let (mut lo, mut hi) = (j as u32, j as u32 + 1);
        while binom_sat(hi - 1, j) <= rank {
            hi = hi.saturating_mul(2);
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if binom_sat(mid - 1, j) <= rank {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        rank -= binom_sat(lo - 1, j);
        out[j - 1] = lo;
    }
}

/// Advances to the next set in squashed order.
fn colex_successor(set: &mut [u32]) {
    let n = set.len();
    let j = (0..n)
        .find(|&j| j + 1 == n || set[j] + 1 < set[j + 1])
        .expect("nonempty set");
    set[j] += 1;
    for (l, slot) in set[..j].iter_mut().enumerate() {
        *slot = l as u32 + 1;
    }
}

pub fn revlex_realize(v: &[BigInt]) -> Result<SimplicialComplex> {
    revlex_realize_with_budget(v, DEFAULT_BUDGET)
}

/// The compressed complex with f-vector `v`: for each size `i` it takes the
/// first `v_i` subsets of `{1, 2, ...}` in squashed order. Facets are the
/// sets not covered by the shadow of the next size up.
pub fn revlex_realize_with_budget(v: &[BigInt], budget: usize) -> Result<SimplicialComplex> {
    if !is_f_vector(v) {
        return Err(Error::NotAnFVector(join_ints(v)));
    }
    let mut counts = Vec::with_capacity(v.len());
    let mut total = 0usize;
    for x in v {
        let c = x.to_usize().ok_or(Error::BudgetExceeded { budget })?;
        total = total.saturating_add(c);
        counts.push(c);
    }
    if total > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    let top = match counts.iter().rposition(|&c| c > 0) {
        Some(t) if t > 0 => t,
        _ => return Ok(SimplicialComplex::empty()),
    };
    // The shadow of an initial squashed segment is again an initial
    // segment, so the facets of each size are a contiguous rank range
    // starting at the size of the shadow from above.
    let mut covered = vec![0usize; top + 1];
    for size in 1..top {
        covered[size] = lower_shadow(&v[size + 1], size + 1)
            .to_usize()
            .ok_or(Error::BudgetExceeded { budget })?;
        if covered[size] > counts[size] {
            return Err(Error::NotAnFVector(join_ints(v)));
        }
    }
    let facets: usize = (1..=top).map(|s| counts[s] - covered[s]).sum();
    let labels: usize = (1..=top).map(|s| (counts[s] - covered[s]) * s).sum();
    let mut builder = FacetBuilder::with_capacity(facets, labels);
    let mut set: Vec<u32> = Vec::with_capacity(top);
    for size in (1..=top).rev() {
        if covered[size] == counts[size] {
            continue;
        }
        colex_unrank(covered[size] as u128, size, &mut set);
        builder.push(&set);
        for _ in covered[size] + 1..counts[size] {
            colex_successor(&mut set);
            builder.push(&set);
        }
    }
    Ok(builder.finish())
}
