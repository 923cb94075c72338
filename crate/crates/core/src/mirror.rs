//! Genus-0 mirror symmetry for the (4,2) hypersurface in P^3 x P^1.
//!
//! Series in `q1 = e^{t1}`, `q2 = e^{t2}` are dense and truncated at bidegree
//! `(d1max, d2max)`; every operation below respects that rectangle, so the
//! `q2^0` slice is exact even at `d2max = 0`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bpsk3::{genus0_bps, GvInversion};
use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, int, rat};

/// Truncated power series in `q1, q2` below bidegree `(d1max + 1, d2max + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    d1max: usize,
    d2max: usize,
    c: Vec<BigRational>,
}

impl BiSeries {
    pub fn zero(d1max: usize, d2max: usize) -> Self {
        BiSeries {
            d1max,
            d2max,
            c: vec![BigRational::zero(); (d1max + 1) * (d2max + 1)],
        }
    }

    pub fn constant(d1max: usize, d2max: usize, v: BigRational) -> Self {
        let mut s = Self::zero(d1max, d2max);
        s.c[0] = v;
        s
    }

    pub fn one(d1max: usize, d2max: usize) -> Self {
        Self::constant(d1max, d2max, BigRational::one())
    }

    /// `q1^d1 q2^d2`, or zero when outside the truncation.
    pub fn monomial(d1max: usize, d2max: usize, d1: usize, d2: usize) -> Self {
        let mut s = Self::zero(d1max, d2max);
        if d1 <= d1max && d2 <= d2max {
            s.set(d1, d2, BigRational::one());
        }
        s
    }

    pub fn bounds(&self) -> (usize, usize) {
        (self.d1max, self.d2max)
    }

    fn idx(&self, d1: usize, d2: usize) -> usize {
        d1 * (self.d2max + 1) + d2
    }

    pub fn get(&self, d1: usize, d2: usize) -> &BigRational {
        &self.c[self.idx(d1, d2)]
    }

    pub fn set(&mut self, d1: usize, d2: usize, v: BigRational) {
        let i = self.idx(d1, d2);
        self.c[i] = v;
    }

    fn degrees(&self) -> impl Iterator<Item = (usize, usize)> {
        let d2max = self.d2max;
        (0..=self.d1max).flat_map(move |a| (0..=d2max).map(move |b| (a, b)))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a - b)
    }

    fn zip(&self, o: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        assert_eq!(self.bounds(), o.bounds(), "mismatched truncations");
        BiSeries {
            d1max: self.d1max,
            d2max: self.d2max,
            c: self.c.iter().zip(&o.c).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        BiSeries {
            d1max: self.d1max,
            d2max: self.d2max,
            c: self.c.iter().map(|v| v * k).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.bounds(), o.bounds(), "mismatched truncations");
        let mut out = Self::zero(self.d1max, self.d2max);
        for (a1, a2) in self.degrees() {
            let x = self.get(a1, a2);
            if x.is_zero() {
                continue;
            }
            for b1 in 0..=self.d1max - a1 {
                for b2 in 0..=self.d2max - a2 {
                    let y = o.get(b1, b2);
                    if !y.is_zero() {
                        let i = out.idx(a1 + b1, a2 + b2);
                        out.c[i] += x * y;
                    }
                }
            }
        }
        out
    }

    pub fn invert(&self) -> Result<Self> {
        let c0 = self.c[0].clone();
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = c0.recip();
        let mut g = Self::zero(self.d1max, self.d2max);
        for (d1, d2) in self.degrees() {
            if (d1, d2) == (0, 0) {
                g.c[0] = inv0.clone();
                continue;
            }
            let mut s = BigRational::zero();
            for e1 in 0..=d1 {
                for e2 in 0..=d2 {
                    if (e1, e2) == (0, 0) {
                        continue;
                    }
                    let f = self.get(e1, e2);
                    if !f.is_zero() {
                        s += f * g.get(d1 - e1, d2 - e2);
                    }
                }
            }
            g.set(d1, d2, -s * &inv0);
        }
        Ok(g)
    }

    /// `exp(f)` for `f` without constant term, via `E exp f = (E f) exp f` with `E`
    /// the total-degree operator.
    pub fn exp(&self) -> Result<Self> {
        if !self.c[0].is_zero() {
            return Err(Error::InvalidArgument("exp needs a series without constant term".into()));
        }
        let mut g = Self::one(self.d1max, self.d2max);
        let mut order: Vec<(usize, usize)> = self.degrees().collect();
        order.sort_by_key(|(a, b)| a + b);
        for (d1, d2) in order.into_iter().skip(1) {
            let mut s = BigRational::zero();
            for e1 in 0..=d1 {
                for e2 in 0..=d2 {
                    let f = self.get(e1, e2);
                    if (e1, e2) != (0, 0) && !f.is_zero() {
                        s += f * int((e1 + e2) as i64) * g.get(d1 - e1, d2 - e2);
                    }
                }
            }
            g.set(d1, d2, s / int((d1 + d2) as i64));
        }
        Ok(g)
    }
}

/// Substitution `q_i = Q_i u_i(Q)` with precomputed products `(Q1 u1)^m (Q2 u2)^n`.
pub struct Substitution {
    products: Vec<Vec<BiSeries>>,
}

impl Substitution {
    pub fn new(u1: &BiSeries, u2: &BiSeries) -> Self {
        let (m1, m2) = u1.bounds();
        let x1 = BiSeries::monomial(m1, m2, 1, 0).mul(u1);
        let x2 = BiSeries::monomial(m1, m2, 0, 1).mul(u2);
        let mut p1 = vec![BiSeries::one(m1, m2)];
        for m in 1..=m1 {
            p1.push(p1[m - 1].mul(&x1));
        }
        let mut p2 = vec![BiSeries::one(m1, m2)];
        for n in 1..=m2 {
            p2.push(p2[n - 1].mul(&x2));
        }
        Substitution {
            products: p1.iter().map(|a| p2.iter().map(|b| a.mul(b)).collect()).collect(),
        }
    }

    pub fn apply(&self, f: &BiSeries) -> BiSeries {
        let (m1, m2) = f.bounds();
        let mut out = BiSeries::zero(m1, m2);
        for (a, b) in f.degrees() {
            let c = f.get(a, b);
            if !c.is_zero() {
                out = out.add(&self.products[a][b].scale(c));
            }
        }
        out
    }
}

/// Polynomial in `t1, t2` with [`BiSeries`] coefficients, keyed by `(deg t1, deg t2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogSeries {
    d1max: usize,
    d2max: usize,
    terms: BTreeMap<(usize, usize), BiSeries>,
}

impl LogSeries {
    pub fn zero(d1max: usize, d2max: usize) -> Self {
        LogSeries { d1max, d2max, terms: BTreeMap::new() }
    }

    pub fn from_series(s: BiSeries) -> Self {
        let (d1max, d2max) = s.bounds();
        let mut out = Self::zero(d1max, d2max);
        out.add_term(0, 0, s);
        out
    }

    fn add_term(&mut self, a: usize, b: usize, s: BiSeries) {
        if s.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&(a, b)) {
            Some(prev) => prev.add(&s),
            None => s,
        };
        if !merged.is_zero() {
            self.terms.insert((a, b), merged);
        }
    }

    /// Coefficient of `t1^a t2^b`.
    pub fn coeff(&self, a: usize, b: usize) -> BiSeries {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(|| BiSeries::zero(self.d1max, self.d2max))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BiSeries)> {
        self.terms.iter()
    }

    /// Largest total degree in `t`, or `None` for zero.
    pub fn log_degree(&self) -> Option<usize> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), s) in &o.terms {
            out.add_term(*a, *b, s.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut out = Self::zero(self.d1max, self.d2max);
        for ((a, b), s) in &self.terms {
            out.add_term(*a, *b, s.scale(k));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.d1max, self.d2max);
        for ((a1, b1), s1) in &self.terms {
            for ((a2, b2), s2) in &o.terms {
                out.add_term(a1 + a2, b1 + b2, s1.mul(s2));
            }
        }
        out
    }

    pub fn mul_series(&self, s: &BiSeries) -> Self {
        let mut out = Self::zero(self.d1max, self.d2max);
        for ((a, b), x) in &self.terms {
            out.add_term(*a, *b, x.mul(s));
        }
        out
    }

    /// Substitutes `t_i = T_i - c_i(q)` and returns the result as a polynomial in `T`.
    pub fn shift_logs(&self, c1: &BiSeries, c2: &BiSeries) -> Self {
        let neg_pow = |c: &BiSeries, n: usize| -> BiSeries {
            let m = c.scale(&int(-1));
            (0..n).fold(BiSeries::one(self.d1max, self.d2max), |acc, _| acc.mul(&m))
        };
        let mut out = Self::zero(self.d1max, self.d2max);
        for ((a, b), s) in &self.terms {
            for k in 0..=*a {
                for l in 0..=*b {
                    let coeff = binomial(&int(*a as i64), k as u32) * binomial(&int(*b as i64), l as u32);
                    let term = s.mul(&neg_pow(c1, a - k)).mul(&neg_pow(c2, b - l)).scale(&coeff);
                    out.add_term(k, l, term);
                }
            }
        }
        out
    }

    pub fn substitute(&self, sub: &Substitution) -> Self {
        let mut out = Self::zero(self.d1max, self.d2max);
        for ((a, b), s) in &self.terms {
            out.add_term(*a, *b, sub.apply(s));
        }
        out
    }
}

/// Element of `Q[H1, H2] / (H1^4, H2^2)`, indexed `[i][j]` for `H1^i H2^j`.
#[derive(Clone, Debug, PartialEq)]
struct Nil([[BigRational; 2]; 4]);

impl Nil {
    fn zero() -> Self {
        Nil(std::array::from_fn(|_| std::array::from_fn(|_| BigRational::zero())))
    }

    fn linear(c: BigRational, h1: BigRational, h2: BigRational) -> Self {
        let mut n = Self::zero();
        n.0[0][0] = c;
        n.0[1][0] = h1;
        n.0[0][1] = h2;
        n
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..2 {
                if self.0[i][j].is_zero() {
                    continue;
                }
                for k in 0..4 - i {
                    for l in 0..2 - j {
                        out.0[i + k][j + l] += &self.0[i][j] * &o.0[k][l];
                    }
                }
            }
        }
        out
    }

    /// `(H + r)^{-1} = r^{-1} sum_k (-H/r)^k` for `H` one of the generators.
    fn inverse_shift(r: i64, first: bool) -> Self {
        let mut n = Self::zero();
        let order = if first { 4 } else { 2 };
        for k in 0..order {
            let v = rat(if k % 2 == 0 { 1 } else { -1 }, 1) / int(r).pow(k as i32 + 1);
            if first {
                n.0[k][0] = v;
            } else {
                n.0[0][k] = v;
            }
        }
        n
    }
}

/// `P_d = prod_{r=0}^{4d1+2d2} (4H1+2H2+r) / (prod_{r=1}^{d1} (H1+r)^4 prod_{r=1}^{d2} (H2+r)^2)`.
fn hypergeometric_factor(d1: usize, d2: usize) -> Nil {
    let mut p = Nil::linear(BigRational::one(), BigRational::zero(), BigRational::zero());
    for r in 0..=(4 * d1 + 2 * d2) as i64 {
        p = p.mul(&Nil::linear(int(r), int(4), int(2)));
    }
    for r in 1..=d1 as i64 {
        let inv = Nil::inverse_shift(r, true);
        for _ in 0..4 {
            p = p.mul(&inv);
        }
    }
    for r in 1..=d2 as i64 {
        let inv = Nil::inverse_shift(r, false);
        for _ in 0..2 {
            p = p.mul(&inv);
        }
    }
    p
}

fn multinomial_weight(d1: usize, d2: usize) -> BigInt {
    let f1 = factorial(d1 as u64);
    let f2 = factorial(d2 as u64);
    factorial((4 * d1 + 2 * d2) as u64) / (f1.pow(4) * f2.pow(2))
}

/// `F = sum (4d1+2d2)! / (d1!^4 d2!^2) q1^d1 q2^d2`.
pub fn hyper_f(d1max: usize, d2max: usize) -> BiSeries {
    let mut s = BiSeries::zero(d1max, d2max);
    for (d1, d2) in s.degrees().collect::<Vec<_>>() {
        s.set(d1, d2, BigRational::from_integer(multinomial_weight(d1, d2)));
    }
    s
}

fn harmonic(n: usize) -> BigRational {
    (1..=n as i64).map(|r| rat(1, r)).fold(BigRational::zero(), |a, b| a + b)
}

/// `G_{a,b}`: the summands of `F` weighted by `sum_{r=1}^{a d1 + b d2} 1/r`.
pub fn hyper_g(a: usize, b: usize, d1max: usize, d2max: usize) -> BiSeries {
    let mut s = BiSeries::zero(d1max, d2max);
    for (d1, d2) in s.degrees().collect::<Vec<_>>() {
        let w = BigRational::from_integer(multinomial_weight(d1, d2));
        s.set(d1, d2, w * harmonic(a * d1 + b * d2));
    }
    s
}

/// All eight `I_{i,j}`, `i <= 3`, `j <= 1`.
#[derive(Debug, Clone)]
pub struct MirrorSeries {
    pub d1max: usize,
    pub d2max: usize,
    i: [[LogSeries; 2]; 4],
}

impl MirrorSeries {
    pub fn get(&self, i: usize, j: usize) -> &LogSeries {
        &self.i[i][j]
    }
}

/// Expands `e^{(H1+d1)t1 + (H2+d2)t2} P_d` and collects the `H1^i H2^j` parts.
pub fn i_functions(d1max: usize, d2max: usize) -> MirrorSeries {
    // coefficient of t1^a t2^b q^d in I_{i,j}
    let mut acc: Vec<Vec<BTreeMap<(usize, usize), BiSeries>>> =
        vec![vec![BTreeMap::new(); 2]; 4];
    let inv_fact = |n: usize| BigRational::new(BigInt::one(), factorial(n as u64));
    for d1 in 0..=d1max {
        for d2 in 0..=d2max {
            let p = hypergeometric_factor(d1, d2);
            for i in 0..4 {
                for j in 0..2 {
                    for a in 0..=i {
                        for b in 0..=j {
                            let c = &p.0[i - a][j - b];
                            if c.is_zero() {
                                continue;
                            }
                            let v = c * inv_fact(a) * inv_fact(b);
                            let slot = acc[i][j]
                                .entry((a, b))
                                .or_insert_with(|| BiSeries::zero(d1max, d2max));
                            let cur = slot.get(d1, d2) + v;
                            slot.set(d1, d2, cur);
                        }
                    }
                }
            }
        }
    }
    let i = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut ls = LogSeries::zero(d1max, d2max);
            for ((a, b), s) in std::mem::take(&mut acc[i][j]) {
                ls.add_term(a, b, s);
            }
            ls
        })
    });
    MirrorSeries { d1max, d2max, i }
}

/// `T1 = t1 + c1(q)`, `T2 = t2 + c2(q)`, and `Q_i = q_i e_i(q)` with `e_i = exp(c_i)`.
#[derive(Debug, Clone)]
pub struct MirrorMap {
    pub c1: BiSeries,
    pub c2: BiSeries,
    pub e1: BiSeries,
    pub e2: BiSeries,
}

pub fn mirror_map(d1max: usize, d2max: usize) -> MirrorMap {
    let f_inv = hyper_f(d1max, d2max).invert().expect("F has constant term 1");
    let g42 = hyper_g(4, 2, d1max, d2max);
    let c1 = g42.sub(&hyper_g(1, 0, d1max, d2max)).mul(&f_inv).scale(&int(4));
    let c2 = g42.sub(&hyper_g(0, 1, d1max, d2max)).mul(&f_inv).scale(&int(2));
    let e1 = c1.exp().expect("no constant term");
    let e2 = c2.exp().expect("no constant term");
    MirrorMap { c1, c2, e1, e2 }
}

/// Given `Q_i = q_i e_i(q)`, returns `u_i` with `q_i = Q_i u_i(Q)`.
pub fn invert_map(e1: &BiSeries, e2: &BiSeries) -> Result<(BiSeries, BiSeries)> {
    let (m1, m2) = e1.bounds();
    let mut u1 = BiSeries::one(m1, m2);
    let mut u2 = BiSeries::one(m1, m2);
    for _ in 0..=(m1 + m2 + 1) {
        let sub = Substitution::new(&u1, &u2);
        let n1 = sub.apply(e1).invert()?;
        let n2 = sub.apply(e2).invert()?;
        if n1 == u1 && n2 == u2 {
            break;
        }
        u1 = n1;
        u2 = n2;
    }
    Ok((u1, u2))
}

/// Instanton part of the genus-0 potential, `sum N_{0,(d1,d2)} Q1^d1 Q2^d2`.
#[derive(Debug, Clone)]
pub struct Potential {
    pub instantons: BiSeries,
}

/// Classical cubic `T1^3/3 + 2 T1^2 T2`, keyed like [`LogSeries`].
fn classical(a: usize, b: usize) -> BigRational {
    match (a, b) {
        (3, 0) => rat(1, 3),
        (2, 1) => int(2),
        _ => BigRational::zero(),
    }
}

pub fn potential(d1max: usize, d2max: usize) -> Result<Potential> {
    let is = i_functions(d1max, d2max);
    let i10 = is.get(1, 0);
    if i10.log_degree() != Some(0) {
        return Err(Error::InvalidArgument("I_{1,0} depends on t".into()));
    }
    let inv = i10.coeff(0, 0).invert()?;
    let ratio = |i: usize, j: usize| is.get(i, j).mul_series(&inv);
    let two = int(2);
    let lhs = is.get(1, 1).scale(&two).add(&is.get(2, 0).scale(&int(-1))).mul_series(&inv);
    let rhs = lhs
        .mul(&ratio(3, 0))
        .add(&ratio(2, 0).mul(&ratio(2, 1)).scale(&two))
        .add(&ratio(3, 1).scale(&int(-2)));

    let map = mirror_map(d1max, d2max);
    let (u1, u2) = invert_map(&map.e1, &map.e2)?;
    let sub = Substitution::new(&u1, &u2);
    let in_t = rhs.shift_logs(&map.c1, &map.c2).substitute(&sub);

    for ((a, b), s) in in_t.terms() {
        if (*a, *b) == (0, 0) {
            continue;
        }
        let expected = classical(*a, *b);
        for (d1, d2) in s.degrees() {
            let target = if (d1, d2) == (0, 0) { expected.clone() } else { BigRational::zero() };
            if *s.get(d1, d2) != target {
                return Err(Error::LogCancellation { a: *a, b: *b, d1, d2 });
            }
        }
    }
    for (a, b) in [(3, 0), (2, 1)] {
        if in_t.coeff(a, b).get(0, 0) != &classical(a, b) {
            return Err(Error::LogCancellation { a, b, d1: 0, d2: 0 });
        }
    }
    Ok(Potential { instantons: in_t.coeff(0, 0) })
}

/// Genus-0 invariants of the fiber classes `(d, 0)`, `d = 1..=dmax`.
#[derive(Debug, Clone)]
pub struct FiberInvariants {
    /// `N_{0,(d,0)}` for `d = 1..=dmax`
    pub gw: Vec<BigRational>,
    pub bps: GvInversion,
}

impl FiberInvariants {
    /// `n_{0,d}`
    pub fn bps(&self, d: usize) -> &BigRational {
        self.bps.bps.get(0, d)
    }
}

pub fn fiber_bps(dmax: usize) -> Result<FiberInvariants> {
    let pot = potential(dmax, 0)?;
    let gw: Vec<BigRational> = (1..=dmax).map(|d| pot.instantons.get(d, 0).clone()).collect();
    let bps = genus0_bps(&gw);
    Ok(FiberInvariants { gw, bps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergeometric_coefficients() {
        let f = hyper_f(1, 1);
        assert_eq!(f.get(0, 0), &int(1));
        assert_eq!(f.get(1, 0), &int(24));
        assert_eq!(f.get(1, 1), &int(720));
        assert_eq!(hyper_g(1, 0, 1, 1).get(1, 0), &int(24));
        assert_eq!(hyper_g(4, 2, 1, 1).get(1, 0), &int(50));
        assert!(hyper_g(4, 2, 1, 1).get(0, 0).is_zero());
    }

    #[test]
    fn structure_of_i_functions() {
        let is = i_functions(3, 1);
        assert!(is.get(0, 0).terms().next().is_none());
        let i10 = is.get(1, 0);
        assert_eq!(i10.log_degree(), Some(0));
        assert_eq!(i10.coeff(0, 0), hyper_f(3, 1).scale(&int(4)));
        for i in 0..4 {
            for j in 0..2 {
                if let Some(deg) = is.get(i, j).log_degree() {
                    assert!(deg < i + j.max(1), "I_{{{i},{j}}} has log degree {deg}");
                }
            }
        }
    }

    #[test]
    fn mirror_map_leading_terms() {
        let m = mirror_map(3, 1);
        assert!(m.c1.get(0, 0).is_zero());
        assert_eq!(m.c1.get(1, 0), &int(104));
        assert_eq!(m.c1.get(2, 0), &int(9780));
        assert_eq!(m.c2.get(1, 0), &int(100));
        assert_eq!(m.e1.get(1, 0), &int(104));
        let (u1, _) = invert_map(&m.e1, &m.e2).unwrap();
        assert_eq!(u1.get(0, 0), &int(1));
        assert_eq!(u1.get(1, 0), &int(-104));
        assert_eq!(u1.get(2, 0), &int(6444));
    }

    #[test]
    fn identity_map_inverts_to_identity() {
        let one = BiSeries::one(4, 2);
        let (u1, u2) = invert_map(&one, &one).unwrap();
        assert_eq!(u1, one);
        assert_eq!(u2, one);
    }

    #[test]
    fn exp_and_invert() {
        let mut f = BiSeries::zero(4, 1);
        f.set(1, 0, int(1));
        let e = f.exp().unwrap();
        assert_eq!(e.get(3, 0), &rat(1, 6));
        let mut g = BiSeries::one(4, 1);
        g.set(0, 1, int(3));
        g.set(2, 0, int(-5));
        assert_eq!(g.mul(&g.invert().unwrap()), BiSeries::one(4, 1));
    }

    #[test]
    fn low_degree_invariants() {
        let fib = fiber_bps(3).unwrap();
        assert_eq!(fib.gw[0], int(640));
        assert_eq!(fib.gw[1], int(10112));
        assert_eq!(fib.gw[2], rat(7787008, 27));
        assert_eq!(fib.bps(2), &int(10032));
        assert_eq!(fib.bps(3), &int(288384));
        assert!(fib.bps.warnings.is_empty());
    }
}
