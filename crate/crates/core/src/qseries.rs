//! Truncated series in q with exponents in (1/N)Z and exact rational coefficients.
//!
//! A [`FracSeries`] represents `sum c_e q^e + O(q^T)`: every stored exponent is
//! strictly below the truncation order `T`, and nothing is known at or above it.
//! Reading a coefficient in the unknown region is an error, never a silent zero.
//! Finitely many negative exponents are allowed, so quotients such as
//! `Theta / Delta` with a pole at the cusp are representable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_exponent, parse_exponent, parse_rational, Exponent};

#[derive(Clone, Debug)]
pub struct FracSeries {
    /// Grading denominator N: stored exponents are `key / N`.
    denom: i64,
    truncation: Exponent,
    /// Canonical form: no zero values, all keys below `key_limit()`.
    terms: BTreeMap<i64, BigRational>,
}

fn ceil_mul(t: Exponent, n: i64) -> i64 {
    let x = t * Ratio::from_integer(n);
    x.ceil().to_integer()
}

impl FracSeries {
    pub fn zero(denom: i64, truncation: Exponent) -> Self {
        assert!(denom > 0, "grading denominator must be positive");
        FracSeries {
            denom,
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(denom: i64, truncation: Exponent) -> Self {
        Self::monomial(denom, truncation, Exponent::from_integer(0), BigRational::one())
            .expect("0 lies on every grading")
    }

    /// `c q^e`; errors when `e` is not on the (1/N) grid.
    pub fn monomial(denom: i64, truncation: Exponent, e: Exponent, c: BigRational) -> Result<Self> {
        Self::from_terms(denom, truncation, [(e, c)])
    }

    pub fn from_terms(
        denom: i64,
        truncation: Exponent,
        terms: impl IntoIterator<Item = (Exponent, BigRational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(denom, truncation);
        let limit = out.key_limit();
        for (e, c) in terms {
            let scaled = e * Ratio::from_integer(denom);
            if !scaled.is_integer() {
                return Err(Error::InvalidArgument(format!(
                    "exponent {} is not a multiple of 1/{denom}",
                    fmt_exponent(e)
                )));
            }
            let key = scaled.to_integer();
            if key < limit {
                out.add_at(key, c);
            }
        }
        Ok(out)
    }

    /// Builds from integer keys (exponent = key / denom); keys at or beyond the truncation are dropped.
    pub fn from_keys(
        denom: i64,
        truncation: Exponent,
        terms: impl IntoIterator<Item = (i64, BigRational)>,
    ) -> Self {
        let mut out = Self::zero(denom, truncation);
        let limit = out.key_limit();
        for (k, c) in terms {
            if k < limit {
                out.add_at(k, c);
            }
        }
        out
    }

    fn add_at(&mut self, key: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn grading_denominator(&self) -> i64 {
        self.denom
    }

    pub fn truncation(&self) -> Exponent {
        self.truncation
    }

    /// Exclusive upper bound on stored keys.
    fn key_limit(&self) -> i64 {
        ceil_mul(self.truncation, self.denom)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn exp_of(&self, key: i64) -> Exponent {
        Ratio::new(key, self.denom)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &BigRational)> + '_ {
        self.terms.iter().map(|(k, c)| (self.exp_of(*k), c))
    }

    pub fn valuation(&self) -> Option<Exponent> {
        self.terms.keys().next().map(|k| self.exp_of(*k))
    }

    pub fn leading(&self) -> Option<(Exponent, &BigRational)> {
        self.terms.iter().next().map(|(k, c)| (self.exp_of(*k), c))
    }

    /// Coefficient of `q^e`. Fails if `e` is at or beyond the truncation order.
    pub fn coeff(&self, e: Exponent) -> Result<BigRational> {
        if e >= self.truncation {
            return Err(Error::BeyondTruncation {
                exponent: e,
                truncation: self.truncation,
            });
        }
        let scaled = e * Ratio::from_integer(self.denom);
        if !scaled.is_integer() {
            return Ok(BigRational::zero());
        }
        Ok(self
            .terms
            .get(&scaled.to_integer())
            .cloned()
            .unwrap_or_else(BigRational::zero))
    }

    /// Re-expresses the series over the finer grading `denom`, a multiple of the current one.
    pub fn regrade(&self, denom: i64) -> Self {
        assert!(
            denom % self.denom == 0,
            "grading {denom} is not a multiple of {}",
            self.denom
        );
        let f = denom / self.denom;
        FracSeries {
            denom,
            truncation: self.truncation,
            terms: self.terms.iter().map(|(k, c)| (k * f, c.clone())).collect(),
        }
    }

    /// Same series known only below `t` (`t` must not exceed the current truncation).
    pub fn truncate(&self, t: Exponent) -> Self {
        let t = t.min(self.truncation);
        let mut out = Self::zero(self.denom, t);
        let limit = out.key_limit();
        out.terms = self
            .terms
            .range(..limit)
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        out
    }

    /// Multiplies by `q^e`; the truncation order shifts with it.
    pub fn shift(&self, e: Exponent) -> Result<Self> {
        let scaled = e * Ratio::from_integer(self.denom);
        if !scaled.is_integer() {
            return Err(Error::InvalidArgument(format!(
                "shift {} is not a multiple of 1/{}",
                fmt_exponent(e),
                self.denom
            )));
        }
        let s = scaled.to_integer();
        Ok(FracSeries {
            denom: self.denom,
            truncation: self.truncation + e,
            terms: self.terms.iter().map(|(k, c)| (k + s, c.clone())).collect(),
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.denom, self.truncation);
        }
        FracSeries {
            denom: self.denom,
            truncation: self.truncation,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let n = a.denom.lcm(&b.denom);
        (a.regrade(n), b.regrade(n))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = Self::common(self, other);
        let mut out = a.truncate(a.truncation.min(b.truncation));
        let limit = out.key_limit();
        for (k, c) in b.terms.range(..limit) {
            out.add_at(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        FracSeries {
            denom: self.denom,
            truncation: self.truncation,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    /// Valuation used for error propagation: an empty series is `O(q^T)`.
    fn effective_valuation(&self) -> Exponent {
        self.valuation().unwrap_or(self.truncation)
    }

    /// Cauchy product. The result is known below `min(T_a + v_b, T_b + v_a)`.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::common(self, other);
        let t = (a.truncation + b.effective_valuation()).min(b.truncation + a.effective_valuation());
        let mut out = Self::zero(a.denom, t);
        let limit = out.key_limit();
        let mut acc: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let k = ka + kb;
                if k >= limit {
                    break;
                }
                *acc.entry(k).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        out.terms = acc;
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.denom, self.truncation);
        if n == 0 {
            return result;
        }
        let mut base = self.clone();
        let mut e = n;
        let mut first = true;
        while e > 0 {
            if e & 1 == 1 {
                result = if first { base.clone() } else { result.mul(&base) };
                first = false;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiplicative inverse. If `a = c q^v (1 + ...) + O(q^T)` then the inverse is
    /// known below `T - 2v`.
    pub fn invert(&self) -> Result<Self> {
        let (kv, lead) = match self.terms.iter().next() {
            Some((k, c)) => (*k, c.clone()),
            None => return Err(Error::NotInvertible),
        };
        let v = self.exp_of(kv);
        let rel = (self.key_limit() - kv) as usize;
        let lead_inv = lead.recip();
        let unit: Vec<(usize, BigRational)> = self
            .terms
            .iter()
            .skip(1)
            .map(|(k, c)| ((k - kv) as usize, c * &lead_inv))
            .collect();
        let mut w: Vec<BigRational> = vec![BigRational::zero(); rel];
        w[0] = BigRational::one();
        for j in 1..rel {
            let mut s = BigRational::zero();
            for (i, u) in &unit {
                if *i > j {
                    break;
                }
                if !w[j - i].is_zero() {
                    s += u * &w[j - i];
                }
            }
            w[j] = -s;
        }
        let t = self.truncation - v - v;
        Ok(Self::from_keys(
            self.denom,
            t,
            w.into_iter()
                .enumerate()
                .map(|(j, c)| (j as i64 - kv, c * &lead_inv)),
        ))
    }

    /// The operator q d/dq: the coefficient at `q^e` is multiplied by `e`.
    pub fn q_derivative(&self) -> Self {
        let n = BigInt::from(self.denom);
        let mut out = Self::zero(self.denom, self.truncation);
        for (k, c) in &self.terms {
            if *k != 0 {
                out.terms
                    .insert(*k, c * BigRational::new(BigInt::from(*k), n.clone()));
            }
        }
        out
    }

    /// Applies `q d/dq` `r` times.
    pub fn q_derivative_n(&self, r: u32) -> Self {
        (0..r).fold(self.clone(), |f, _| f.q_derivative())
    }

    /// True when every stored exponent lies in `offset + Z`.
    pub fn exponents_in_class(&self, offset: Exponent) -> bool {
        self.terms().all(|(e, _)| (e - offset).is_integer())
    }

    /// Same coefficients and same truncation (independent of grading).
    pub fn same_as(&self, other: &Self) -> bool {
        self.truncation == other.truncation && self.terms().eq(other.terms())
    }

    /// Coefficients agree strictly below `t`.
    pub fn agrees_below(&self, other: &Self, t: Exponent) -> bool {
        self.truncate(t).terms().eq(other.truncate(t).terms())
    }

    pub fn to_json(&self) -> FracSeriesJson {
        FracSeriesJson {
            grading: self.denom,
            trunc: fmt_exponent(self.truncation),
            terms: self
                .terms()
                .map(|(e, c)| (fmt_exponent(e), c.to_string()))
                .collect(),
        }
    }

    pub fn from_json(j: &FracSeriesJson) -> Result<Self> {
        if j.grading <= 0 {
            return Err(Error::InvalidArgument("grading denominator must be positive".into()));
        }
        let t = parse_exponent(&j.trunc)?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for (e, c) in &j.terms {
            let e = parse_exponent(e)?;
            if e >= t {
                return Err(Error::InvalidArgument(format!(
                    "term at q^{} lies beyond truncation {}",
                    fmt_exponent(e),
                    j.trunc
                )));
            }
            terms.push((e, parse_rational(c)?));
        }
        Self::from_terms(j.grading, t, terms)
    }
}

impl PartialEq for FracSeries {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for FracSeries {}

/// Wire form: `{ "N": int, "trunc": "p/q", "terms": [["p/q", "num/den"], ...] }`,
/// terms sorted by ascending exponent.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FracSeriesJson {
    #[serde(rename = "N")]
    pub grading: i64,
    pub trunc: String,
    pub terms: Vec<(String, String)>,
}

impl fmt::Display for FracSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.abs();
            let is_const = e.is_integer() && *e.numer() == 0;
            if is_const {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                if e.is_integer() && *e.numer() == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^({})", fmt_exponent(e))?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^({}))", fmt_exponent(self.truncation))
    }
}

impl Add for &FracSeries {
    type Output = FracSeries;
    fn add(self, rhs: &FracSeries) -> FracSeries {
        FracSeries::add(self, rhs)
    }
}

impl Sub for &FracSeries {
    type Output = FracSeries;
    fn sub(self, rhs: &FracSeries) -> FracSeries {
        FracSeries::sub(self, rhs)
    }
}

impl Mul for &FracSeries {
    type Output = FracSeries;
    fn mul(self, rhs: &FracSeries) -> FracSeries {
        FracSeries::mul(self, rhs)
    }
}

impl Neg for &FracSeries {
    type Output = FracSeries;
    fn neg(self) -> FracSeries {
        FracSeries::neg(self)
    }
}

/// `prod_{n>=1} (1 - q^n)^power` to order `trunc` (integer grading), any integer power.
pub fn euler_product(power: i64, trunc: i64) -> FracSeries {
    let len = trunc.max(0) as usize;
    let mut c: Vec<BigInt> = vec![BigInt::zero(); len];
    if len > 0 {
        c[0] = BigInt::one();
    }
    for n in 1..len {
        for _ in 0..power.unsigned_abs() {
            if power > 0 {
                // multiply by (1 - q^n), descending to reuse the buffer
                for i in (n..len).rev() {
                    let sub = c[i - n].clone();
                    c[i] -= sub;
                }
            } else {
                // divide by (1 - q^n)
                for i in n..len {
                    let add = c[i - n].clone();
                    c[i] += add;
                }
            }
        }
    }
    FracSeries::from_keys(
        1,
        Exponent::from_integer(trunc),
        c.into_iter()
            .enumerate()
            .map(|(i, v)| (i as i64, BigRational::from_integer(v))),
    )
}

/// The discriminant form `Delta(q) = q prod_{n>=1} (1 - q^n)^24`, known below `q^trunc`.
pub fn eta24(trunc: i64) -> FracSeries {
    assert!(trunc >= 1, "eta24 needs trunc >= 1");
    euler_product(24, trunc - 1)
        .shift(Exponent::from_integer(1))
        .expect("integer shift")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{exponent, int, rat};

    fn ser(denom: i64, t: Exponent, terms: &[(i64, i64, i64)]) -> FracSeries {
        FracSeries::from_terms(
            denom,
            t,
            terms.iter().map(|(p, q, c)| (exponent(*p, *q), int(*c))),
        )
        .unwrap()
    }

    #[test]
    fn additive_cancellation() {
        let t = exponent(10, 1);
        let a = ser(1, t, &[(0, 1, 1), (1, 1, 1)]);
        let b = ser(1, t, &[(0, 1, -1)]);
        let s = &a + &b;
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(exponent(1, 1)).unwrap(), int(1));
        assert_eq!(s.coeff(exponent(0, 1)).unwrap(), int(0));
        let z = FracSeries::zero(1, t);
        assert_eq!(&a + &z, a);
    }

    #[test]
    fn fractional_exponent_product() {
        let t = exponent(2, 1);
        let q8 = ser(8, t, &[(1, 8, 1)]);
        let sq = &q8 * &q8;
        assert_eq!(sq.terms().collect::<Vec<_>>(), vec![(exponent(1, 4), &int(1))]);
        let one = FracSeries::one(8, t);
        assert_eq!(&q8 * &one, q8);
    }

    #[test]
    fn grading_lcm_on_mul() {
        let t = exponent(3, 1);
        let a = ser(8, t, &[(1, 8, 1), (0, 1, 1)]);
        let b = ser(12, t, &[(1, 12, 1)]);
        let p = &a * &b;
        assert_eq!(p.grading_denominator(), 24);
        assert_eq!(p.coeff(exponent(5, 24)).unwrap(), int(1));
    }

    #[test]
    fn truncation_through_negative_exponents() {
        // (q^-1 + 1 + O(q^5)) * (1 + q + O(q^5)) is known only below q^4
        let a = ser(1, exponent(5, 1), &[(-1, 1, 1), (0, 1, 1)]);
        let b = ser(1, exponent(5, 1), &[(0, 1, 1), (1, 1, 1)]);
        let p = &a * &b;
        assert_eq!(p.truncation(), exponent(4, 1));
        assert_eq!(p.coeff(exponent(-1, 1)).unwrap(), int(1));
        assert_eq!(p.coeff(exponent(0, 1)).unwrap(), int(2));
        assert_eq!(p.coeff(exponent(1, 1)).unwrap(), int(1));
    }

    #[test]
    fn geometric_series_inverse() {
        let a = ser(1, exponent(8, 1), &[(0, 1, 1), (1, 1, -1)]);
        let b = a.invert().unwrap();
        for k in 0..8 {
            assert_eq!(b.coeff(exponent(k, 1)).unwrap(), int(1));
        }
        assert!(FracSeries::zero(1, exponent(8, 1)).invert().is_err());
    }

    #[test]
    fn inverse_of_leading_power() {
        let a = ser(8, exponent(4, 1), &[(1, 2, 2), (1, 1, 3)]);
        let b = a.invert().unwrap();
        assert_eq!(b.valuation(), Some(exponent(-1, 2)));
        assert_eq!(b.leading().unwrap().1, &rat(1, 2));
        assert_eq!(b.truncation(), exponent(3, 1));
        let p = &a * &b;
        assert_eq!(p, FracSeries::one(8, p.truncation()));
    }

    #[test]
    fn reading_beyond_truncation_is_an_error() {
        let a = ser(8, exponent(2, 1), &[(0, 1, 1)]);
        assert!(a.coeff(exponent(2, 1)).is_err());
        assert!(a.coeff(exponent(17, 8)).is_err());
        assert_eq!(a.coeff(exponent(15, 8)).unwrap(), int(0));
    }

    #[test]
    fn q_derivative_scales_by_exponent() {
        let t = exponent(3, 1);
        assert!(FracSeries::one(8, t).q_derivative().is_zero());
        let a = ser(8, t, &[(1, 8, 1), (9, 8, 2)]);
        let d = a.q_derivative();
        assert_eq!(d.coeff(exponent(1, 8)).unwrap(), rat(1, 8));
        assert_eq!(d.coeff(exponent(9, 8)).unwrap(), rat(9, 4));
    }

    /// Oracle: expand q * prod (1-q^n) by repeated multiplication by the binomials.
    fn eta24_oracle(trunc: i64) -> Vec<BigInt> {
        let len = trunc as usize;
        let mut p = vec![BigInt::zero(); len];
        p[0] = BigInt::one();
        for n in 1..len {
            let mut next = p.clone();
            for i in n..len {
                next[i] -= &p[i - n];
            }
            p = next;
        }
        let mut acc = vec![BigInt::zero(); len];
        acc[0] = BigInt::one();
        for _ in 0..24 {
            let mut next = vec![BigInt::zero(); len];
            for i in 0..len {
                for j in 0..len - i {
                    next[i + j] += &acc[i] * &p[j];
                }
            }
            acc = next;
        }
        let mut shifted = vec![BigInt::zero(); len];
        for i in 1..len {
            shifted[i] = acc[i - 1].clone();
        }
        shifted
    }

    #[test]
    fn eta24_first_terms() {
        let d = eta24(10);
        assert_eq!(d.coeff(exponent(0, 1)).unwrap(), int(0));
        assert_eq!(d.coeff(exponent(1, 1)).unwrap(), int(1));
        assert_eq!(d.coeff(exponent(2, 1)).unwrap(), int(-24));
        assert_eq!(d.coeff(exponent(3, 1)).unwrap(), int(252));
        assert_eq!(d.coeff(exponent(4, 1)).unwrap(), int(-1472));
    }

    #[test]
    fn eta24_matches_repeated_multiplication_to_order_50() {
        let d = eta24(50);
        let oracle = eta24_oracle(50);
        for (k, v) in oracle.iter().enumerate() {
            assert_eq!(
                d.coeff(exponent(k as i64, 1)).unwrap(),
                BigRational::from_integer(v.clone()),
                "q^{k}"
            );
        }
    }

    #[test]
    fn yau_zaslow_from_inverse() {
        let d = eta24(8);
        let inv = d.invert().unwrap();
        assert_eq!(inv.valuation(), Some(exponent(-1, 1)));
        let shifted = inv.shift(exponent(1, 1)).unwrap();
        let expected = [1, 24, 324, 3200, 25650];
        for (h, v) in expected.iter().enumerate() {
            assert_eq!(shifted.coeff(exponent(h as i64, 1)).unwrap(), int(*v));
        }
    }

    #[test]
    fn json_round_trip_and_shape() {
        let a = ser(8, exponent(3, 2), &[(0, 1, -1), (9, 8, 320), (1, 1, 108)]);
        let j = a.to_json();
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(
            text,
            r#"{"N":8,"trunc":"3/2","terms":[["0","-1"],["1","108"],["9/8","320"]]}"#
        );
        let back: FracSeriesJson = serde_json::from_str(&text).unwrap();
        assert_eq!(FracSeries::from_json(&back).unwrap(), a);
    }
}
