//! Real-rootedness via Sturm chains over exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::IntPolynomial;

/// Dense polynomial over the rationals, lowest degree first, trimmed.
#[derive(Debug, Clone, PartialEq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn from_int(p: &IntPolynomial) -> Self {
        RatPoly(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    fn derivative(&self) -> Self {
        RatPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
        .trim()
    }

    fn neg(self) -> Self {
        RatPoly(self.0.into_iter().map(|c| -c).collect())
    }

    /// Quotient and remainder of Euclidean division by a nonzero divisor.
    fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.0.clone();
        let dd = divisor.degree();
        if rem.len() <= dd {
            return (RatPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        let lead = divisor.lead();
        for shift in (0..quot.len()).rev() {
            let q = &rem[shift + dd] / lead;
            if q.is_zero() {
                continue;
            }
            for (k, c) in divisor.0.iter().enumerate() {
                rem[shift + k] -= &q * c;
            }
            quot[shift] = q;
        }
        rem.truncate(dd);
        (RatPoly(quot).trim(), RatPoly(rem).trim())
    }

    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Sign as `t -> +inf` (`at_plus = true`) or `t -> -inf`.
    fn sign_at_infinity(&self, at_plus: bool) -> i8 {
        let s: i8 = if self.lead().is_positive() { 1 } else { -1 };
        if !at_plus && self.degree() % 2 == 1 {
            -s
        } else {
            s
        }
    }
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for s in signs.filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

/// Number of distinct real roots of a nonzero polynomial.
fn distinct_real_roots(p: &RatPoly) -> usize {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        chain.push(r.neg());
    }
    chain.pop();
    let at_minus = sign_changes(chain.iter().map(|q| q.sign_at_infinity(false)));
    let at_plus = sign_changes(chain.iter().map(|q| q.sign_at_infinity(true)));
    at_minus - at_plus
}

/// True iff every complex root of `p` is real.
///
/// Repeated roots are removed first (division by `gcd(p, p')`); the
/// square-free part is real-rooted exactly when its Sturm count equals its
/// degree. Nonzero constants are real-rooted; the zero polynomial is not.
pub fn is_real_rooted(p: &IntPolynomial) -> bool {
    if p.is_zero() {
        return false;
    }
    let poly = RatPoly::from_int(p);
    if poly.degree() == 0 {
        return true;
    }
    let g = poly.gcd(&poly.derivative());
    let (square_free, _) = poly.div_rem(&g);
    distinct_real_roots(&square_free) == square_free.degree()
}
