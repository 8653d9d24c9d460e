//! Bounded-composition counts and the numerator transform of the Veronese
//! map.
//!
//! `c_count(r, d, i)` counts integer vectors in `[0, r]^d` with coordinate
//! sum `i`. The numerator of the `r`-th Veronese series of `h / (1-t)^d` is
//! `h'_i = sum_j c_count(r - 1, d, i*r - j) * h_j`, and the column vectors
//! below repackage that sum one numerator coefficient at a time.

mod checks;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyseries::{all_positive, binomial, GVectorSeq, IntPolynomial};

pub use checks::{check_growth, check_recursion, check_sign_pattern, check_symmetry};

/// Number of `u` in `[0, r]^d` with `u_1 + ... + u_d = i`; `delta(i, 0)`
/// when `d = 0`.
///
/// Inclusion–exclusion over the coordinates forced above `r`:
/// `sum_k (-1)^k C(d, k) C(i - k(r+1) + d - 1, d - 1)`.
pub fn c_count(r: usize, d: usize, i: i64) -> BigInt {
    if d == 0 {
        return if i == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let (r, d) = (r as i64, d as i64);
    if i < 0 || i > d * r {
        return BigInt::zero();
    }
    let mut total = BigInt::zero();
    for k in 0..=d {
        let rest = i - k * (r + 1);
        if rest < 0 {
            break;
        }
        let term = binomial(d, k) * binomial(rest + d - 1, d - 1);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn count_at(r: usize, d: usize, i: usize, k: usize) -> BigInt {
    c_count(r - 1, d, (i * r) as i64 - k as i64)
}

/// The `(d+1) x r` matrix with entry `(i, j) = C(r-1, d, i*r - j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMatrix {
    r: usize,
    d: usize,
    rows: Vec<Vec<BigInt>>,
}

impl CMatrix {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.rows.iter().map(|row| row[j].clone()).collect()
    }
}

pub fn c_matrix(r: usize, d: usize) -> Result<CMatrix> {
    if d == 0 || r < d {
        return Err(Error::domain(format!(
            "transformation matrix needs r >= d >= 1, got r={r}, d={d}"
        )));
    }
    let rows = (0..=d)
        .map(|i| (0..r).map(|j| count_at(r, d, i, j)).collect())
        .collect();
    Ok(CMatrix { r, d, rows })
}

macro_rules! column_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq)]
        pub struct $name {
            pub r: usize,
            pub d: usize,
            pub k: usize,
            entries: Vec<BigInt>,
        }

        impl $name {
            pub fn entries(&self) -> &[BigInt] {
                &self.entries
            }

            pub fn last(&self) -> &BigInt {
                self.entries.last().expect("column vectors are never empty")
            }
        }
    };
}

column_vector!(
    /// `d + 1` entries `C(r-1, d, i*r - k)`; all zero when `k >= r`.
    CColumn
);
column_vector!(
    /// `floor(d/2) + 2` successive differences of a column; all zero when
    /// `k >= r`.
    GHatVector
);
column_vector!(
    /// A [`GHatVector`] without its last entry.
    GVector
);

fn check_rdk(r: usize, d: usize) {
    assert!(r >= 1 && d >= 1, "column vectors need r >= 1 and d >= 1");
}

pub fn column(r: usize, d: usize, k: usize) -> CColumn {
    check_rdk(r, d);
    let entries = if k >= r {
        vec![BigInt::zero(); d + 1]
    } else {
        (0..=d).map(|i| count_at(r, d, i, k)).collect()
    };
    CColumn { r, d, k, entries }
}

/// Differences of the raw column `C(r-1, d, i*r - k)`, without the
/// zero convention for `k >= r`. This is the form that enters the
/// numerator transform for every `k`.
pub fn ghat_raw(r: usize, d: usize, k: usize) -> Vec<BigInt> {
    check_rdk(r, d);
    let at = |i: usize| c_count(r - 1, d, (i * r) as i64 - k as i64);
    let mut entries = Vec::with_capacity(d / 2 + 2);
    entries.push(at(0));
    for i in 1..=d / 2 + 1 {
        entries.push(at(i) - at(i - 1));
    }
    entries
}

pub fn ghat(r: usize, d: usize, k: usize) -> GHatVector {
    let entries = if k >= r {
        check_rdk(r, d);
        vec![BigInt::zero(); d / 2 + 2]
    } else {
        ghat_raw(r, d, k)
    };
    GHatVector { r, d, k, entries }
}

pub fn g(r: usize, d: usize, k: usize) -> GVector {
    let GHatVector { mut entries, .. } = ghat(r, d, k);
    entries.pop();
    GVector { r, d, k, entries }
}

fn require_nonzero(h: &IntPolynomial) -> Result<usize> {
    h.degree()
        .ok_or_else(|| Error::domain("numerator must be a nonzero polynomial"))
}

/// Numerator of the `r`-th Veronese series of `h / (1-t)^d`, as the full
/// `max(deg h, d) + 1` coefficients including trailing zeros.
pub fn veronese_h(h: &IntPolynomial, d: usize, r: usize) -> Result<Vec<BigInt>> {
    let lambda = require_nonzero(h)?;
    if d == 0 || r == 0 {
        return Err(Error::domain(format!("need d >= 1 and r >= 1, got d={d}, r={r}")));
    }
    let m = lambda.max(d);
    Ok((0..=m)
        .map(|i| {
            h.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, hj)| !hj.is_zero())
                .map(|(j, hj)| hj * c_count(r - 1, d, (i * r) as i64 - j as i64))
                .sum()
        })
        .collect())
}

/// [`veronese_h`] with trailing zeros trimmed.
pub fn veronese_numerator(h: &IntPolynomial, d: usize, r: usize) -> Result<IntPolynomial> {
    veronese_h(h, d, r).map(IntPolynomial::new)
}

/// The `floor(d/2) + 1` leading entries of the g-vector of the `r`-th
/// Veronese series, as `sum_k h_k * g_k` over the raw columns.
///
/// Requires `r >= max(deg h, d)`.
pub fn veronese_g(h: &IntPolynomial, d: usize, r: usize) -> Result<GVectorSeq> {
    let lambda = require_nonzero(h)?;
    if d == 0 || r < lambda.max(d) {
        return Err(Error::domain(format!(
            "g-vector transform needs r >= max(deg h, d) and d >= 1, got r={r}, d={d}, deg h={lambda}"
        )));
    }
    let mut acc = vec![BigInt::zero(); d / 2 + 1];
    for (k, hk) in h.coeffs().iter().enumerate() {
        if hk.is_zero() {
            continue;
        }
        for (slot, v) in acc.iter_mut().zip(ghat_raw(r, d, k)) {
            *slot += hk * v;
        }
    }
    Ok(GVectorSeq::new(acc))
}

/// Smallest `R <= max_r` such that every Veronese numerator for
/// `R <= r <= max_r` has only positive coefficients.
pub fn find_positivity_threshold(
    h: &IntPolynomial,
    d: usize,
    max_r: usize,
) -> Result<Option<usize>> {
    if max_r == 0 {
        return Err(Error::domain("max_r must be at least 1"));
    }
    if h.is_zero() {
        return Ok(None);
    }
    let mut threshold = None;
    for r in (1..=max_r).rev() {
        if !all_positive(&veronese_numerator(h, d, r)?) {
            break;
        }
        threshold = Some(r);
    }
    Ok(threshold)
}
