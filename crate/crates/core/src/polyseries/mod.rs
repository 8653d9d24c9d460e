//! Rational series `h(t) / (1 - t)^d` with integer numerators.
//!
//! The numerator is kept as an [`IntPolynomial`]; coefficients past the
//! stored degree read as zero, so `coeff(i)` is total.

mod sturm;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use sturm::is_real_rooted;

/// Binomial coefficient with the usual out-of-range convention: zero when
/// `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// Renders integers as a comma-separated list, e.g. `1,216,456,56,0`.
pub fn join_ints<'a, I>(values: I) -> String
where
    I: IntoIterator<Item = &'a BigInt>,
{
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Polynomial with integer coefficients, lowest degree first.
///
/// The zero polynomial has no stored coefficients; any other polynomial
/// has a nonzero last coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial treated as degree 0.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Coefficients zero-padded (never truncated) to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<BigInt> {
        let mut out = self.coeffs.clone();
        if out.len() < len {
            out.resize(len, BigInt::zero());
        }
        out
    }

    pub fn derivative(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&join_ints(&self.coeffs))
    }
}

/// `numerator / (1 - t)^pole_order` with `pole_order >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    numerator: IntPolynomial,
    pole_order: usize,
}

impl RationalSeries {
    pub fn new(numerator: IntPolynomial, pole_order: usize) -> Result<Self> {
        if pole_order == 0 {
            return Err(Error::domain("pole order d must be at least 1"));
        }
        Ok(RationalSeries {
            numerator,
            pole_order,
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn pole_order(&self) -> usize {
        self.pole_order
    }
}

/// The coefficients `a_0, ..., a_N` of a series.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesPrefix {
    values: Vec<BigInt>,
}

impl SeriesPrefix {
    pub fn new(values: Vec<BigInt>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("a series prefix needs at least one coefficient"));
        }
        Ok(SeriesPrefix { values })
    }

    pub fn from_i64s(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Keeps `a_0, a_r, a_{2r}, ...`.
    pub fn subsample(&self, r: usize) -> SeriesPrefix {
        assert!(r >= 1, "subsampling step must be positive");
        SeriesPrefix {
            values: self.values.iter().step_by(r).cloned().collect(),
        }
    }
}

/// Successive differences `g_0 = h_0`, `g_i = h_i - h_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GVectorSeq {
    entries: Vec<BigInt>,
}

impl GVectorSeq {
    pub fn new(entries: Vec<BigInt>) -> Self {
        GVectorSeq { entries }
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entrywise `self <= other` on the common length.
    pub fn le_entrywise(&self, other: &GVectorSeq) -> bool {
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a <= b)
    }
}

impl fmt::Display for GVectorSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_ints(&self.entries))
    }
}

/// Coefficients `a_0..=a_n` of `h(t) / (1 - t)^d`.
///
/// Division by `1 - t` is a running sum, so the prefix is obtained by
/// summing the padded numerator `d` times.
pub fn expand(series: &RationalSeries, n: usize) -> SeriesPrefix {
    let mut values = series.numerator.padded(n + 1);
    values.truncate(n + 1);
    for _ in 0..series.pole_order {
        for i in 1..values.len() {
            let prev = values[i - 1].clone();
            values[i] += prev;
        }
    }
    SeriesPrefix { values }
}

/// Recovers the numerator of degree `<= lambda_bound` from a prefix.
///
/// Multiplies the prefix by `(1 - t)^d` and requires every coefficient past
/// `lambda_bound` (there are at least `d` of them) to vanish.
pub fn refit_numerator(
    prefix: &SeriesPrefix,
    d: usize,
    lambda_bound: usize,
) -> Result<IntPolynomial> {
    if d == 0 {
        return Err(Error::domain("pole order d must be at least 1"));
    }
    let needed = lambda_bound + d + 1;
    if prefix.len() < needed {
        return Err(Error::domain(format!(
            "prefix has {} coefficients, refitting with d={d} and bound {lambda_bound} needs {needed}",
            prefix.len()
        )));
    }
    let mut coeffs = prefix.values.clone();
    for _ in 0..d {
        for i in (1..coeffs.len()).rev() {
            let prev = coeffs[i - 1].clone();
            coeffs[i] -= prev;
        }
    }
    if let Some((index, value)) = coeffs
        .iter()
        .enumerate()
        .skip(lambda_bound + 1)
        .find(|(_, c)| !c.is_zero())
    {
        return Err(Error::Consistency {
            lambda_bound,
            index,
            value: value.clone(),
        });
    }
    coeffs.truncate(lambda_bound + 1);
    Ok(IntPolynomial::new(coeffs))
}

/// The `r`-th Veronese series computed the slow way: expand, keep every
/// `r`-th coefficient, refit with the same pole order.
pub fn veronese_by_expansion(
    series: &RationalSeries,
    r: usize,
    lambda_bound: usize,
) -> Result<RationalSeries> {
    if r == 0 {
        return Err(Error::domain("Veronese index r must be at least 1"));
    }
    let d = series.pole_order;
    // Two coefficients beyond the minimum give extra verification terms.
    let len = lambda_bound + d + 3;
    let prefix = expand(series, r * (len - 1)).subsample(r);
    let numerator = refit_numerator(&prefix, d, lambda_bound)?;
    RationalSeries::new(numerator, d)
}

/// `veronese_by_expansion` with the bound `max(deg h, d)`, which always
/// suffices.
pub fn veronese_series(series: &RationalSeries, r: usize) -> Result<RationalSeries> {
    let bound = series.numerator.degree_or_zero().max(series.pole_order);
    veronese_by_expansion(series, r, bound)
}

/// Constant term of the polynomial part `b1` in
/// `a(t) = b1(t) + b2(t) / (1 - t)^d` with `deg b2 < d`.
pub fn characteristic(series: &RationalSeries) -> BigInt {
    let d = series.pole_order;
    let Some(lambda) = series.numerator.degree() else {
        return BigInt::zero();
    };
    if lambda < d {
        return BigInt::zero();
    }
    let divisor: Vec<BigInt> = (0..=d)
        .map(|k| {
            let c = binomial(d as i64, k as i64);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    // Leading coefficient is (-1)^d, so dividing by it is multiplying by it.
    let lead = &divisor[d];
    let mut rem = series.numerator.coeffs.clone();
    let mut quotient_const = BigInt::zero();
    for shift in (0..=lambda - d).rev() {
        let q = &rem[shift + d] * lead;
        if q.is_zero() {
            continue;
        }
        for (k, dk) in divisor.iter().enumerate() {
            rem[shift + k] -= &q * dk;
        }
        if shift == 0 {
            quotient_const = q;
        }
    }
    quotient_const
}

/// g-vector of a numerator. The default length is `floor(deg h / 2) + 1`;
/// `length_bound = Some(l)` yields entries `g_0..=g_l`, reading missing
/// `h_i` as zero.
pub fn g_vector(h: &IntPolynomial, length_bound: Option<usize>) -> GVectorSeq {
    let last = length_bound.unwrap_or(h.degree_or_zero() / 2);
    let entries = (0..=last)
        .map(|i| {
            if i == 0 {
                h.coeff(0)
            } else {
                h.coeff(i) - h.coeff(i - 1)
            }
        })
        .collect();
    GVectorSeq { entries }
}

/// True when every coefficient of a nonzero polynomial is strictly positive.
pub(crate) fn all_positive(p: &IntPolynomial) -> bool {
    !p.is_zero() && p.coeffs.iter().all(Signed::is_positive)
}
