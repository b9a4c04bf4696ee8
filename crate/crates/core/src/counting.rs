//! Closed-form counts of Dyck paths by the value of `L`.
//!
//! Every function returns the true count for every `n`, including the values
//! below the range where a formula is usually stated (those are 0, or 1 for
//! the empty path when `k = 1`). Negative-index terms vanish.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::series::{self, ballot_number, check_odd_prime, motzkin_number};
use crate::words::binomial;

fn m(i: i64) -> BigUint {
    motzkin_number(i)
}

fn t(n: i64, k: i64) -> BigUint {
    ballot_number(n, k)
}

/// `C(a, b)`, zero for `a < b` or negative arguments.
fn c(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 {
        return BigUint::zero();
    }
    binomial(a as usize, b as usize)
}

/// `sum_{i=0}^{hi} (i+1) M_i T_{n-4-i,k}`; empty when `hi < 0`.
fn weighted_ballot_sum(n: i64, hi: i64, k: i64) -> BigUint {
    (0..=hi)
        .map(|i| BigUint::from((i + 1) as u64) * m(i) * t(n - 4 - i, k))
        .sum()
}

/// `|D_n^1| = M_{n-1}`.
pub fn count_l1(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    m(n as i64 - 1)
}

/// Paths whose only star column is `(r, s)`.
pub fn count_rs(n: usize, r: usize, s: usize) -> Result<BigUint> {
    if r == 0 || s == 0 {
        return Err(Error::BallotPreconditionViolated(format!(
            "r and s must be positive (got r={r}, s={s})"
        )));
    }
    if n < r + s {
        return Ok(BigUint::zero());
    }
    let (n, k) = (n as i64, (r + s) as i64 - 1);
    Ok(t(n - 2, k) + weighted_ballot_sum(n, n - 2 - k - 1, k))
}

/// `|D_n^2|`: 1 at `n = 2`, 0 at `n = 3`, `(n-3) M_{n-4}` from `n = 4`.
pub fn count_l2(n: usize) -> BigUint {
    match n {
        0 | 1 | 3 => BigUint::zero(),
        2 => BigUint::one(),
        _ => BigUint::from(n - 3) * m(n as i64 - 4),
    }
}

/// `|D_n^p|` for an odd prime `p`.
pub fn count_lp(n: usize, p: u64) -> Result<BigUint> {
    check_odd_prime(p)?;
    let p = p as usize;
    if n < p {
        return Ok(BigUint::zero());
    }
    let (n, k) = (n as i64, p as i64 - 1);
    Ok(BigUint::from(2u32) * (t(n - 2, k) + weighted_ballot_sum(n, n - 2 - p as i64, k)))
}

/// `|D_n^4|`.
pub fn count_l4(n: usize) -> BigUint {
    match n {
        0..=2 => return BigUint::zero(),
        3 => return BigUint::one(),
        _ => {}
    }
    let n = n as i64;
    let two = BigUint::from(2u32);
    let single = &two * (t(n - 2, 3) + weighted_ballot_sum(n, n - 6, 3));
    let type1 = c(n - 5, 2) * m(n - 7);
    let type2 = m(n - 5);
    let pairs: BigUint = (0..=n - 7)
        .map(|i| BigUint::from((i + 1) as u64) * m(i) * m(n - 7 - i))
        .sum();
    single + type1 + type2 + two * pairs
}

/// `|D_n^6|` split into its parts. Only `mixed` comes from enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L6Count {
    /// `2 |D_n^{1,5}|`.
    pub one_five: BigUint,
    /// `|D_n^{2,2}|`.
    pub two_two: BigUint,
    /// Two star columns with binomials 2 and 3, counted by brute force.
    pub mixed: BigUint,
}

impl L6Count {
    pub const BRUTE_FORCED: &'static str = "mixed two-star case";

    pub fn total(&self) -> BigUint {
        &self.one_five + &self.two_two + &self.mixed
    }
}

pub fn count_l6(n: usize, oracle: &Oracle) -> Result<L6Count> {
    Ok(L6Count {
        one_five: BigUint::from(2u32) * count_rs(n, 1, 5)?,
        two_two: count_rs(n, 2, 2)?,
        mixed: BigUint::from(oracle.filter_by_star_signature(n, &[2, 3])?),
    })
}

/// `sum over D in D_n of L(D) 2^returns(D)`, by enumeration.
pub fn weighted_sum_eq1(n: usize, oracle: &Oracle) -> Result<BigUint> {
    let joint = oracle.joint_histogram(n)?;
    Ok(joint
        .iter()
        .map(|((l, h), &count)| l * (BigUint::one() << *h) * BigUint::from(count))
        .sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountTarget {
    /// Paths with `L(D) = k`.
    L(u64),
    /// Paths whose single star column is `(r, s)`.
    Rs(usize, usize),
    /// The weighted sum over all of `D_n`.
    WeightedSum,
}

impl fmt::Display for CountTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountTarget::L(k) => write!(f, "L={k}"),
            CountTarget::Rs(r, s) => write!(f, "rs={r},{s}"),
            CountTarget::WeightedSum => write!(f, "sum-eq1"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountQuery {
    pub n: usize,
    pub target: CountTarget,
}

/// All available routes to one count. `closed_form` is `None` when no
/// formula is implemented for the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub query: CountQuery,
    pub closed_form: Option<BigUint>,
    /// Names the enumerated part of a hybrid closed form.
    pub brute_forced: Option<&'static str>,
    pub gf: Option<BigUint>,
    pub oracle: Option<BigUint>,
}

impl CountReport {
    /// True iff all present values coincide.
    pub fn agree(&self) -> bool {
        let values: Vec<&BigUint> = [&self.closed_form, &self.gf, &self.oracle]
            .into_iter()
            .flatten()
            .collect();
        values.windows(2).all(|w| w[0] == w[1])
    }
}

impl CountQuery {
    pub fn new(n: usize, target: CountTarget) -> Self {
        CountQuery { n, target }
    }

    pub fn closed_form(&self, oracle: &Oracle) -> Result<(Option<BigUint>, Option<&'static str>)> {
        let n = self.n;
        let value = match self.target {
            CountTarget::L(1) => count_l1(n),
            CountTarget::L(2) => count_l2(n),
            CountTarget::L(4) => count_l4(n),
            CountTarget::L(6) => {
                return Ok((
                    Some(count_l6(n, oracle)?.total()),
                    Some(L6Count::BRUTE_FORCED),
                ));
            }
            CountTarget::L(p) if p >= 3 && series::is_prime(p) => count_lp(n, p)?,
            CountTarget::L(_) => return Ok((None, None)),
            CountTarget::Rs(r, s) => count_rs(n, r, s)?,
            CountTarget::WeightedSum => {
                return Ok((
                    Some(weighted_sum_eq1(n, oracle)?),
                    Some("weighted sum over D_n"),
                ));
            }
        };
        Ok((Some(value), None))
    }

    /// Coefficient of `x^n` in the matching generating function, if any.
    pub fn gf_value(&self) -> Result<Option<BigUint>> {
        let n = self.n;
        let series = match self.target {
            CountTarget::L(1) if n >= 1 => series::motzkin_gf(n).shift(1).truncate(n),
            CountTarget::L(2) => series::gf_l2(n),
            CountTarget::L(p) if p >= 3 && series::is_prime(p) => series::gf_lp(p, n)?,
            CountTarget::Rs(r, s) => series::gf_rs(r, s, n)?,
            _ => return Ok(None),
        };
        let coeff = series.coeff(n).cloned().unwrap_or_default();
        Ok(Some(
            coeff
                .to_biguint()
                .expect("counting series have nonnegative coefficients"),
        ))
    }

    /// Count by exhaustive enumeration.
    pub fn oracle_value(&self, oracle: &Oracle) -> Result<BigUint> {
        let n = self.n;
        match self.target {
            CountTarget::L(k) => {
                let hist = oracle.l_histogram(n)?;
                Ok(BigUint::from(
                    hist.get(&BigUint::from(k)).copied().unwrap_or(0),
                ))
            }
            CountTarget::Rs(r, s) => {
                let hits = oracle.tally(n, |d| {
                    let stars: Vec<(usize, usize)> = d
                        .rs_array()
                        .columns
                        .into_iter()
                        .filter(|&(a, b)| a > 0 && b > 0)
                        .collect();
                    (stars == [(r, s)]).then_some(())
                })?;
                Ok(BigUint::from(hits.get(&()).copied().unwrap_or(0)))
            }
            CountTarget::WeightedSum => Ok(BigUint::from(oracle.enum_321_3cycle(3 * n)?)),
        }
    }

    pub fn report(&self, oracle: &Oracle, with_oracle: bool) -> Result<CountReport> {
        let (closed_form, brute_forced) = self.closed_form(oracle)?;
        Ok(CountReport {
            query: *self,
            closed_form,
            brute_forced,
            gf: self.gf_value()?,
            oracle: if with_oracle {
                Some(self.oracle_value(oracle)?)
            } else {
                None
            },
        })
    }
}
