//! Property checkers for the bounded-composition counts and their column
//! vectors. Each returns a [`Report`] with one entry per identity family
//! (and per column index `k` where the statement is indexed by `k`).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{c_count, column, g, ghat, ghat_raw};
use crate::error::{Error, Result};
use crate::polyseries::join_ints;
use crate::report::{Check, Report};

fn rd(r: usize, d: usize) -> [(&'static str, i64); 2] {
    [("d", d as i64), ("r", r as i64)]
}

fn rdk(r: usize, d: usize, k: usize) -> [(&'static str, i64); 3] {
    [("d", d as i64), ("r", r as i64), ("k", k as i64)]
}

fn require(cond: bool, what: &str, r: usize, d: usize) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} (r={r}, d={d})")))
    }
}

fn last(v: &[BigInt]) -> &BigInt {
    v.last().expect("nonempty vector")
}

fn le(a: &[BigInt], b: &[BigInt]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Reflection `C(r,d,i) = C(r,d,dr-i)` for every `0 <= i <= dr`, and the
/// shifted-column symmetry
/// `C(r-1,d,ir-j) = C(r-1,d,(d+1-i)r - (r-(j-d)))` for `j >= d+1`.
pub fn check_symmetry(r: usize, d: usize) -> Result<Report> {
    require(r >= 1 && d >= 1, "symmetry check needs r >= 1 and d >= 1", r, d)?;
    let mut report = Report::new("symmetry");
    let top = (d * r) as i64;
    let bad = (0..=top).find(|&i| c_count(r, d, i) != c_count(r, d, top - i));
    report.push(Check::expect("symmetry.reflection", &rd(r, d), bad.is_none(), || {
        let i = bad.unwrap();
        vec![
            ("i", i.to_string()),
            ("left", c_count(r, d, i).to_string()),
            ("right", c_count(r, d, top - i).to_string()),
        ]
    }));

    let (ri, di) = (r as i64, d as i64);
    let mut witness = None;
    'outer: for i in 0..=di {
        for j in (di + 1)..ri {
            let left = c_count(r - 1, d, i * ri - j);
            let right = c_count(r - 1, d, (di + 1 - i) * ri - (ri - (j - di)));
            if left != right {
                witness = Some(vec![
                    ("i", i.to_string()),
                    ("j", j.to_string()),
                    ("left", left.to_string()),
                    ("right", right.to_string()),
                ]);
                break 'outer;
            }
        }
    }
    report.push(Check::expect(
        "symmetry.shifted-columns",
        &rd(r, d),
        witness.is_none(),
        || witness.unwrap(),
    ));
    Ok(report)
}

/// `C(r,d,i) = sum_{m=0}^{r} C(r,d-1,i-m)` for `0 <= i <= dr`, plus the
/// column sums `sum_i C(r-1,d,ir-j) = r^(d-1)` for every `0 <= j < r`.
pub fn check_recursion(r: usize, d: usize) -> Result<Report> {
    require(r >= 1 && d >= 1, "recursion check needs r >= 1 and d >= 1", r, d)?;
    let mut report = Report::new("recursion");
    let bad = (0..=(d * r) as i64).find(|&i| {
        let sum: BigInt = (0..=r as i64).map(|m| c_count(r, d - 1, i - m)).sum();
        sum != c_count(r, d, i)
    });
    report.push(Check::expect("recursion.pascal", &rd(r, d), bad.is_none(), || {
        vec![("i", bad.unwrap().to_string())]
    }));

    let expected = BigInt::from(r).pow(d as u32 - 1);
    for j in 0..r {
        let col = column(r, d, j);
        let sum: BigInt = col.entries().iter().sum();
        report.push(Check::expect(
            "recursion.column-sum",
            &rdk(r, d, j),
            sum == expected,
            || {
                vec![
                    ("column", join_ints(col.entries())),
                    ("sum", sum.to_string()),
                    ("expected", expected.to_string()),
                ]
            },
        ));
    }
    Ok(report)
}

/// Sign structure of the column vectors for `1 <= d <= r`:
///
/// * `g(r,d,k)` is nonnegative for `0 <= k < r`, with last entry zero
///   exactly when (`d` even, `d = r`, `k = 0`) or (`d = 1`, `k > 0`);
/// * for odd `d`, `last(ghat_k)` is positive iff `2k >= d`, negative otherwise;
/// * for even `d`, `last(ghat_k)` is positive for `2k > d + r`, negative for
///   `2k < d + r`, zero at `2k = d + r`;
/// * pairing `last(ghat_k) + last(ghat_{d-k}) = 0` (odd `d`) or
///   `last(ghat_k) + last(g_{d-k}) = 0` (even `d`) for `0 <= k <= d`;
/// * for `d+1 <= k <= r-1`: `last(ghat_k) + last(ghat_{r-(k-d)}) = 0`
///   (even `d`), or `last(ghat_k) + C(r-1,d,(d+1)/2 r + k - d) =
///   C(r-1,d,(d-1)/2 r + k - d)` (odd `d`).
///
/// The pairing for `k <= d` reaches index `d = r` when `d = r`; it uses the
/// raw column there, since the zeroed column makes the pairing false.
pub fn check_sign_pattern(r: usize, d: usize) -> Result<Report> {
    require(d >= 1 && d <= r, "sign pattern check needs 1 <= d <= r", r, d)?;
    let mut report = Report::new("signs");
    let even = d.is_multiple_of(2);

    for k in 0..r {
        let gk = g(r, d, k);
        let hat = ghat(r, d, k);
        let params = rdk(r, d, k);
        let nonneg = gk.entries().iter().all(|v| !v.is_negative());
        report.push(Check::expect("signs.g-nonnegative", &params, nonneg, || {
            vec![("g", join_ints(gk.entries()))]
        }));

        let zero_expected = (even && d == r && k == 0) || (d == 1 && k > 0);
        report.push(Check::expect(
            "signs.g-last-zero",
            &params,
            gk.last().is_zero() == zero_expected,
            || {
                vec![
                    ("g", join_ints(gk.entries())),
                    ("zero_expected", zero_expected.to_string()),
                ]
            },
        ));

        let value = hat.last();
        let ok = if even {
            let (twice, bound) = (2 * k, d + r);
            match twice.cmp(&bound) {
                std::cmp::Ordering::Greater => value.is_positive(),
                std::cmp::Ordering::Less => value.is_negative(),
                std::cmp::Ordering::Equal => value.is_zero(),
            }
        } else if 2 * k >= d {
            value.is_positive()
        } else {
            value.is_negative()
        };
        report.push(Check::expect("signs.ghat-last-sign", &params, ok, || {
            vec![("ghat", join_ints(hat.entries()))]
        }));
    }

    for k in 0..=d {
        let left = ghat_raw(r, d, k);
        let right = ghat_raw(r, d, d - k);
        let partner = if even { &right[right.len() - 2] } else { last(&right) };
        let sum = last(&left) + partner;
        report.push(Check::expect("signs.pairing-low", &rdk(r, d, k), sum.is_zero(), || {
            vec![
                ("ghat_k", join_ints(&left)),
                ("ghat_partner", join_ints(&right)),
            ]
        }));
    }

    let (ri, di) = (r as i64, d as i64);
    for k in (d + 1)..r {
        let hat = ghat(r, d, k);
        let ok = if even {
            let partner = ghat(r, d, r - (k - d));
            (hat.last() + partner.last()).is_zero()
        } else {
            let ki = k as i64;
            let high = c_count(r - 1, d, (di + 1) / 2 * ri + ki - di);
            let low = c_count(r - 1, d, (di - 1) / 2 * ri + ki - di);
            hat.last() + high == low
        };
        report.push(Check::expect("signs.pairing-high", &rdk(r, d, k), ok, || {
            vec![("ghat", join_ints(hat.entries()))]
        }));
    }
    Ok(report)
}

/// Growth in `r` for `1 <= d <= r`:
///
/// * `g(r,d,k) <= g(r+1,d,k)` entrywise for `0 <= k <= r`;
/// * odd `d`, `2k >= d`: `last(ghat(r+1,d,k)) >= last(ghat(r,d,k))`;
/// * even `d`, `k >= d`: `last(ghat(r+1,d,k+1)) >= last(ghat(r,d,k))`;
/// * for `0 <= k <= d-1` the chain `g(1,d,k) <= g(d,d,k) <= ... <= g(r+1,d,k)`.
///
/// The even-`d` statement is checked over its full stated range
/// `d <= k <= r`. It does not hold there in general: for `r = 9, d = 4,
/// k = 4` the two sides are -244 and -240. It does hold for `2k >= d + r`.
pub fn check_growth(r: usize, d: usize) -> Result<Report> {
    require(d >= 1 && d <= r, "growth check needs 1 <= d <= r", r, d)?;
    let mut report = Report::new("growth");
    for k in 0..=r {
        let (a, b) = (g(r, d, k), g(r + 1, d, k));
        report.push(Check::expect(
            "growth.monotone",
            &rdk(r, d, k),
            le(a.entries(), b.entries()),
            || {
                vec![
                    ("g_r", join_ints(a.entries())),
                    ("g_r_plus_1", join_ints(b.entries())),
                ]
            },
        ));
    }

    if d % 2 == 1 {
        for k in (d.div_ceil(2))..=r {
            let (a, b) = (ghat(r, d, k), ghat(r + 1, d, k));
            report.push(Check::expect(
                "growth.last-odd",
                &rdk(r, d, k),
                b.last() >= a.last(),
                || {
                    vec![
                        ("last_r", a.last().to_string()),
                        ("last_r_plus_1", b.last().to_string()),
                    ]
                },
            ));
        }
    } else {
        for k in d..=r {
            let (a, b) = (ghat(r, d, k), ghat(r + 1, d, k + 1));
            report.push(Check::expect(
                "growth.last-even-shifted",
                &rdk(r, d, k),
                b.last() >= a.last(),
                || {
                    vec![
                        ("last_r_k", a.last().to_string()),
                        ("last_r_plus_1_k_plus_1", b.last().to_string()),
                    ]
                },
            ));
        }
    }

    for k in 0..d {
        let chain: Vec<_> = std::iter::once(1)
            .chain(d..=r + 1)
            .map(|s| (s, g(s, d, k)))
            .collect();
        let bad = chain
            .windows(2)
            .find(|w| !le(w[0].1.entries(), w[1].1.entries()));
        report.push(Check::expect("growth.chain", &rdk(r, d, k), bad.is_none(), || {
            let w = bad.unwrap();
            vec![
                ("lower_r", w[0].0.to_string()),
                ("lower", join_ints(w[0].1.entries())),
                ("upper_r", w[1].0.to_string()),
                ("upper", join_ints(w[1].1.entries())),
            ]
        }));
    }
    Ok(report)
}
