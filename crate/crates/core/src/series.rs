//! Truncated power series with exact integer coefficients, plus the Motzkin
//! and ballot numbers and the generating functions built from them.
//!
//! A series of order `N` knows `c_0..=c_N` exactly and nothing beyond. Every
//! operation reports the largest order it can still vouch for.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::words::binomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// `coeffs` must be non-empty; its length is `order + 1`.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn from_u64s(order: usize, values: &[u64]) -> Self {
        let mut s = Self::zero(order);
        for (c, &v) in s.coeffs.iter_mut().zip(values) {
            *c = BigInt::from(v);
        }
        s
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0)
    }

    /// `x^power`, known through `order`.
    pub fn monomial(order: usize, power: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = BigInt::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Term-by-term derivative; loses one order.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::TruncationUnderflow);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * BigInt::from(n))
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiplication by `x^m`; the result is known through `order + m`.
    pub fn shift(&self, m: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries { coeffs }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{} + O(x^{})", parts.join(", "), self.order() + 1)
    }
}

/// `M_0..=M_order`.
pub fn motzkin_numbers(order: usize) -> Vec<BigUint> {
    let mut m: Vec<BigUint> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let next = if n == 0 {
            BigUint::one()
        } else {
            let mut v = m[n - 1].clone();
            for k in 0..n.saturating_sub(1) {
                v += &m[k] * &m[n - 2 - k];
            }
            v
        };
        m.push(next);
    }
    m
}

/// `M_n`, zero for negative `n`.
pub fn motzkin_number(n: i64) -> BigUint {
    match usize::try_from(n) {
        Ok(n) => motzkin_numbers(n).pop().unwrap_or_default(),
        Err(_) => BigUint::zero(),
    }
}

pub fn motzkin_gf(order: usize) -> TruncatedSeries {
    TruncatedSeries::new(
        motzkin_numbers(order)
            .into_iter()
            .map(BigInt::from)
            .collect(),
    )
}

/// `T_{n,k}`: Motzkin paths of length `n` whose first down is step `k`, with
/// `T_{k-1,k} = 1` for the all-flat path. Zero outside that range.
///
/// Counted directly: the first `k - 1` steps are ups and flats reaching some
/// height `a >= 1`, then a down, then a path from `a - 1` back to the axis.
pub fn ballot_number(n: i64, k: i64) -> BigUint {
    if k < 1 || n < k - 1 {
        return BigUint::zero();
    }
    let (n, k) = (n as usize, k as usize);
    if n == k - 1 {
        return BigUint::one();
    }
    let rest = n - k;
    let descents = paths_to_axis(rest, k);
    (1..k).map(|a| binomial(k - 1, a) * &descents[a - 1]).sum()
}

/// `q[h]` = number of `u/d/h` paths of length `len` from height `h` to 0
/// that stay weakly above the axis, for `h < max_height`.
fn paths_to_axis(len: usize, max_height: usize) -> Vec<BigUint> {
    let width = max_height + len + 2;
    let mut q = vec![BigUint::zero(); width];
    q[0] = BigUint::one();
    for _ in 0..len {
        let mut next = vec![BigUint::zero(); width];
        for h in 0..width - 1 {
            let mut v = &q[h] + &q[h + 1];
            if h > 0 {
                v += &q[h - 1];
            }
            next[h] = v;
        }
        q = next;
    }
    q.truncate(max_height);
    q
}

/// `1 + x m(x)` through `order`.
fn one_plus_xm(order: usize) -> TruncatedSeries {
    &TruncatedSeries::one(order) + &motzkin_gf(order).shift(1)
}

/// `(x m(x))'` through `order`.
fn xm_prime(order: usize) -> TruncatedSeries {
    motzkin_gf(order)
        .shift(1)
        .derivative()
        .expect("x m(x) has order >= 1")
        .truncate(order)
}

/// `x^{k-1} (1 + x m(x))^{k-1}`.
pub fn ballot_gf(k: usize, order: usize) -> Result<TruncatedSeries> {
    if k == 0 {
        return Err(Error::IndexOutOfRange {
            name: "k",
            value: 0,
            low: 1,
            high: usize::MAX,
        });
    }
    let e = exponent(k - 1);
    Ok(one_plus_xm(order).pow(e).shift(k - 1).truncate(order))
}

fn exponent(e: usize) -> u32 {
    u32::try_from(e).expect("exponent fits in u32")
}

/// `x^2 + x^4 (x m(x))'`.
pub fn gf_l2(order: usize) -> TruncatedSeries {
    let tail = xm_prime(order).shift(4);
    (&TruncatedSeries::monomial(order + 4, 2) + &tail).truncate(order)
}

/// `x^{r+s} (1 + x m(x))^{r+s-2} (1 + x^2 (x m(x))')`.
pub fn gf_rs(r: usize, s: usize, order: usize) -> Result<TruncatedSeries> {
    if r == 0 || s == 0 {
        return Err(Error::BallotPreconditionViolated(format!(
            "r and s must be positive (got r={r}, s={s})"
        )));
    }
    let t = r + s;
    let base = one_plus_xm(order).pow(exponent(t - 2));
    let second = &TruncatedSeries::one(order) + &xm_prime(order).shift(2);
    Ok((&base * &second).shift(t).truncate(order))
}

/// `2 x^p (1 + x m(x))^{p-2} (x^2 (x m(x))' + 1)` for an odd prime `p`.
pub fn gf_lp(p: u64, order: usize) -> Result<TruncatedSeries> {
    check_odd_prime(p)?;
    let half = gf_rs(1, p as usize - 1, order)?;
    Ok(half.scale(&BigInt::from(2)))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `NotPrime` unless `p` is a prime `>= 3`.
pub fn check_odd_prime(p: u64) -> Result<()> {
    if p >= 3 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn motzkin_values() {
        let m: Vec<u64> = motzkin_numbers(8)
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect();
        assert_eq!(m, [1, 1, 2, 4, 9, 21, 51, 127, 323]);
        assert_eq!(motzkin_number(-1), BigUint::zero());
        assert_eq!(motzkin_number(0), BigUint::one());
    }

    #[test]
    fn motzkin_functional_equation() {
        let n = 20;
        let m = motzkin_gf(n);
        let rhs = &(&TruncatedSeries::one(n) + &m.shift(1)) + &(&m * &m).shift(2);
        assert_eq!(rhs.truncate(n), m);
    }

    #[test]
    fn ballot_values() {
        assert_eq!(ballot_number(3, 3), BigUint::from(2u32));
        assert_eq!(ballot_number(2, 3), BigUint::one());
        assert_eq!(ballot_number(1, 3), BigUint::zero());
        assert_eq!(ballot_number(-1, 0), BigUint::zero());
        for n in 1..8 {
            assert_eq!(ballot_number(n, 1), BigUint::zero());
        }
        assert_eq!(ballot_number(0, 1), BigUint::one());
        for n in 0..=12i64 {
            let total: BigUint = (1..=n + 1).map(|k| ballot_number(n, k)).sum();
            assert_eq!(total, motzkin_number(n), "n = {n}");
        }
    }

    #[test]
    fn ballot_gf_matches_direct_count() {
        assert_eq!(ints(&ballot_gf(1, 5).unwrap()), [1, 0, 0, 0, 0, 0]);
        for k in 1..=7 {
            let g = ballot_gf(k, 14).unwrap();
            for n in 0..=14 {
                assert_eq!(
                    BigInt::from(ballot_number(n as i64, k as i64)),
                    g.coeffs()[n],
                    "T_({n},{k})"
                );
            }
        }
        assert!(ballot_gf(0, 3).is_err());
    }

    #[test]
    fn arithmetic_rules() {
        let s = TruncatedSeries::from_u64s(4, &[1, 2, 3, 4, 5]);
        assert_eq!(&TruncatedSeries::one(4) * &s, s);
        assert_eq!(ints(&s.derivative().unwrap()), [2, 6, 12, 20]);
        assert_eq!(ints(&s.shift(2)), [0, 0, 1, 2, 3, 4, 5]);
        assert_eq!(s.pow(0), TruncatedSeries::one(4));
        assert_eq!(s.pow(3), &(&s * &s) * &s);
        let short = TruncatedSeries::from_u64s(2, &[1, 1, 1]);
        assert_eq!((&s + &short).order(), 2);
        assert_eq!((&s * &short).order(), 2);
        assert_eq!(
            TruncatedSeries::one(0).derivative(),
            Err(Error::TruncationUnderflow)
        );

        let xm = motzkin_gf(5).shift(1).truncate(6);
        let d: Vec<BigInt> = xm.derivative().unwrap().coeffs().to_vec();
        let expect: Vec<BigInt> = motzkin_numbers(5)
            .into_iter()
            .enumerate()
            .map(|(n, m)| BigInt::from(m) * BigInt::from(n + 1))
            .collect();
        assert_eq!(d, expect);

        let a = one_plus_xm(10);
        assert_eq!(a.pow(2), &a * &a);
    }

    #[test]
    fn generating_function_rows() {
        assert_eq!(ints(&gf_l2(10))[2..], [1, 0, 1, 2, 6, 16, 45, 126, 357]);
        assert_eq!(
            ints(&gf_lp(3, 10).unwrap())[3..],
            [2, 2, 4, 10, 26, 70, 192, 534]
        );
        assert_eq!(
            ints(&gf_lp(5, 12).unwrap())[5..],
            [2, 6, 14, 36, 96, 262, 726, 2034]
        );
        assert_eq!(
            ints(&gf_lp(7, 14).unwrap())[7..],
            [2, 10, 32, 94, 272, 784, 2260, 6524]
        );
        assert_eq!(gf_rs(1, 3, 20).unwrap(), gf_rs(2, 2, 20).unwrap());
        let twice = gf_rs(1, 2, 20).unwrap().scale(&BigInt::from(2));
        assert_eq!(twice, gf_lp(3, 20).unwrap());
        let g = gf_rs(1, 1, 20).unwrap();
        for n in 4..=20 {
            let expect = BigUint::from(n - 3) * motzkin_number(n as i64 - 4);
            assert_eq!(g.coeffs()[n], BigInt::from(expect));
        }
        assert_eq!(gf_l2(0).order(), 0);
    }

    #[test]
    fn primality() {
        assert!(check_odd_prime(3).is_ok());
        assert!(check_odd_prime(13).is_ok());
        for p in [0, 1, 2, 4, 9, 15] {
            assert_eq!(check_odd_prime(p), Err(Error::NotPrime(p)));
        }
        assert_eq!(gf_lp(9, 5), Err(Error::NotPrime(9)));
    }
}
