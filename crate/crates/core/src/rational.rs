//! Small helpers around `BigRational` and `Ratio<i64>` exponents.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponents of q are small rationals with denominators dividing the grading.
pub type Exponent = Ratio<i64>;

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn exponent(num: i64, den: i64) -> Exponent {
    Ratio::new(num, den)
}

pub fn exponent_to_big(e: Exponent) -> BigRational {
    BigRational::new(BigInt::from(*e.numer()), BigInt::from(*e.denom()))
}

/// Generalized binomial coefficient C(x, j) = x (x-1) ... (x-j+1) / j!.
pub fn binomial(x: &BigRational, j: u32) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..j {
        acc *= x - int(i as i64);
        acc /= int(i as i64 + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Returns the integer value of `x`, or an error naming `context`.
pub fn to_integer(x: &BigRational, context: &str) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::NonIntegral {
            value: Box::new(x.clone()),
            context: context.to_string(),
        })
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn parse_exponent(s: &str) -> Result<Exponent> {
    let bad = || Error::InvalidArgument(format!("not a small rational exponent: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Ratio::new(p, q))
        }
        None => Ok(Ratio::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn fmt_exponent(e: Exponent) -> String {
    if *e.denom() == 1 {
        e.numer().to_string()
    } else {
        format!("{}/{}", e.numer(), e.denom())
    }
}

/// `k`-th Bernoulli number (B_1 = -1/2 convention), exact.
pub fn bernoulli(k: usize) -> BigRational {
    // Akiyama-Tanigawa gives B_1 = +1/2; only even k are used here.
    let mut a: Vec<BigRational> = Vec::with_capacity(k + 1);
    for m in 0..=k {
        a.push(rat(1, m as i64 + 1));
        for j in (1..=m).rev() {
            let prev = a[j - 1].clone();
            a[j - 1] = int(j as i64) * (prev - &a[j]);
        }
    }
    if k == 1 {
        -a[0].clone()
    } else {
        a[0].clone()
    }
}

pub fn abs_max(values: impl IntoIterator<Item = BigRational>) -> BigRational {
    values
        .into_iter()
        .map(|v| v.abs())
        .fold(BigRational::zero(), |m, v| if v > m { v } else { m })
}
