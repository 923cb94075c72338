//! Reduced K3 invariants `r_{g,h}` and the Gopakumar-Vafa change of variables.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qseries::{euler_product, FracSeries};
use crate::rational::{factorial, Exponent};

/// `r_{0,h}` for `h = 0..=hmax`, from `sum r_{0,h} q^h = prod (1 - q^n)^{-24}`.
pub fn yau_zaslow(hmax: usize) -> Vec<BigInt> {
    let s = euler_product(-24, hmax as i64 + 1);
    (0..=hmax)
        .map(|h| {
            s.coeff(Exponent::from_integer(h as i64))
                .expect("within truncation")
                .to_integer()
        })
        .collect()
}

/// `r_{1,h} = -(h/12) r_{0,h}`.
pub fn genus1(h: usize) -> Result<BigInt> {
    let r0 = &yau_zaslow(h)[h];
    genus1_from(h, r0)
}

fn genus1_from(h: usize, r0: &BigInt) -> Result<BigInt> {
    let num = -(r0 * BigInt::from(h));
    let (q, rem) = num.div_rem(&BigInt::from(12));
    if !rem.is_zero() {
        return Err(Error::NonIntegral {
            value: Box::new(BigRational::new(num, BigInt::from(12))),
            context: format!("r_{{1,{h}}}"),
        });
    }
    Ok(q)
}

/// Table of `r_{g,h}` for `0 <= g <= gmax`, `0 <= h <= hmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RTable {
    pub gmax: usize,
    pub hmax: usize,
    /// `values[g][h]`
    pub values: Vec<Vec<BigInt>>,
}

impl RTable {
    /// `r_{g,h}`; classes of negative `h` contribute nothing.
    pub fn get(&self, g: usize, h: i64) -> Option<BigInt> {
        if h < 0 {
            return (g <= self.gmax).then(BigInt::zero);
        }
        self.values.get(g)?.get(h as usize).cloned()
    }
}

/// Laurent polynomials in `y` of degree at most `span`, stored with offset `span`.
fn kkv_product(hmax: usize) -> Vec<Vec<BigInt>> {
    let span = hmax;
    let width = 2 * span + 1;
    let mut c = vec![vec![BigInt::zero(); width]; hmax + 1];
    c[0][span] = BigInt::one();
    for n in 1..=hmax {
        let factors = std::iter::repeat_n(0i64, 20)
            .chain(std::iter::repeat_n(1, 2))
            .chain(std::iter::repeat_n(-1, 2));
        for s in factors {
            // multiply by 1 / (1 - y^s q^n)
            for h in n..=hmax {
                let (lo, hi) = c.split_at_mut(h);
                let src = &lo[h - n];
                let dst = &mut hi[0];
                for (j, v) in src.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let t = j as i64 + s;
                    if (0..width as i64).contains(&t) {
                        dst[t as usize] += v;
                    }
                }
            }
        }
    }
    c
}

/// `z^m = (y - 2 + 1/y)^m` as coefficients of `y^{m-j}`, `j = 0..=2m`.
fn z_power(m: usize) -> Vec<BigInt> {
    let two_m = 2 * m as u64;
    (0..=two_m)
        .map(|j| {
            let b = factorial(two_m) / (factorial(j) * factorial(two_m - j));
            if j % 2 == 1 {
                -b
            } else {
                b
            }
        })
        .collect()
}

/// Writes a symmetric Laurent polynomial (offset `span`) in powers of `z`.
fn to_z_basis(mut p: Vec<BigInt>, span: usize, h: usize) -> Result<Vec<BigInt>> {
    let mut out = vec![BigInt::zero(); span + 1];
    for m in (0..=span).rev() {
        let top = p[span + m].clone();
        if top.is_zero() {
            continue;
        }
        for (j, c) in z_power(m).into_iter().enumerate() {
            p[span + m - j] -= &top * c;
        }
        out[m] = top;
    }
    if p.iter().any(|c| !c.is_zero()) {
        return Err(Error::BasisRemainder { h });
    }
    Ok(out)
}

/// `r_{g,h}` from `sum (-1)^g r_{g,h} (y^{1/2} - y^{-1/2})^{2g} q^h
/// = prod 1 / ((1-q^n)^20 (1-y q^n)^2 (1-q^n/y)^2)`.
pub fn kkv_table(gmax: usize, hmax: usize) -> Result<RTable> {
    let product = kkv_product(hmax);
    let mut values = vec![vec![BigInt::zero(); hmax + 1]; gmax + 1];
    for (h, poly) in product.into_iter().enumerate() {
        let z = to_z_basis(poly, hmax, h)?;
        for (g, row) in values.iter_mut().enumerate() {
            if let Some(c) = z.get(g) {
                row[h] = if g % 2 == 1 { -c.clone() } else { c.clone() };
            }
        }
    }
    Ok(RTable { gmax, hmax, values })
}

/// Rational table indexed by genus `0..=gmax` and degree `1..=dmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusDegreeTable {
    pub gmax: usize,
    pub dmax: usize,
    /// `values[g][d - 1]`
    values: Vec<Vec<BigRational>>,
}

impl GenusDegreeTable {
    pub fn zeros(gmax: usize, dmax: usize) -> Self {
        GenusDegreeTable {
            gmax,
            dmax,
            values: vec![vec![BigRational::zero(); dmax]; gmax + 1],
        }
    }

    pub fn get(&self, g: usize, d: usize) -> &BigRational {
        assert!(g <= self.gmax && (1..=self.dmax).contains(&d), "({g}, {d}) outside table");
        &self.values[g][d - 1]
    }

    pub fn set(&mut self, g: usize, d: usize, v: BigRational) {
        assert!(g <= self.gmax && (1..=self.dmax).contains(&d), "({g}, {d}) outside table");
        self.values[g][d - 1] = v;
    }

    /// Genus `g` row for `d = 1..=dmax`.
    pub fn row(&self, g: usize) -> &[BigRational] {
        &self.values[g]
    }
}

/// Coefficients `s_j` of `(sin x / x)^power = sum s_j x^{2j}`, `j <= jmax`.
pub fn sinc_power(power: i64, jmax: usize) -> Vec<BigRational> {
    let trunc = jmax as i64 + 1;
    let sinc = FracSeries::from_keys(
        1,
        Exponent::from_integer(trunc),
        (0..=jmax).map(|j| {
            let v = BigRational::new(BigInt::one(), factorial(2 * j as u64 + 1));
            (j as i64, if j % 2 == 1 { -v } else { v })
        }),
    );
    let base = if power < 0 {
        sinc.invert().expect("unit constant term")
    } else {
        sinc
    };
    let p = base.pow(power.unsigned_abs() as u32);
    (0..=jmax)
        .map(|j| p.coeff(Exponent::from_integer(j as i64)).expect("within truncation"))
        .collect()
}

/// Multiple-cover coefficient: the `lambda^{2g-2}` coefficient of
/// `lambda^{2g'-2} (1/k) (sin(k lambda/2)/(lambda/2))^{2g'-2}`.
struct CoverCoefficients {
    /// `s[g'][j]`
    sinc: Vec<Vec<BigRational>>,
}

impl CoverCoefficients {
    fn new(gmax: usize) -> Self {
        CoverCoefficients {
            sinc: (0..=gmax).map(|gp| sinc_power(2 * gp as i64 - 2, gmax)).collect(),
        }
    }

    fn get(&self, gp: usize, g: usize, k: usize) -> BigRational {
        let j = g - gp;
        let kk = BigInt::from(k);
        let kpow = if 2 * g >= 3 {
            BigRational::from_integer(kk.pow(2 * g as u32 - 3))
        } else {
            BigRational::new(BigInt::one(), kk.pow(3 - 2 * g as u32))
        };
        let four_j = BigRational::from_integer(BigInt::from(4).pow(j as u32));
        kpow * &self.sinc[gp][j] / four_j
    }
}

/// `N_{g,d} = sum_{k | d} sum_{g' <= g} c(g', g, k) n_{g', d/k}`.
pub fn gv_transform(bps: &GenusDegreeTable, gmax: usize, dmax: usize) -> GenusDegreeTable {
    let gmax = gmax.min(bps.gmax);
    let dmax = dmax.min(bps.dmax);
    let cc = CoverCoefficients::new(gmax);
    let mut out = GenusDegreeTable::zeros(gmax, dmax);
    for g in 0..=gmax {
        for d in 1..=dmax {
            let mut acc = BigRational::zero();
            for k in (1..=d).filter(|k| d % k == 0) {
                for gp in 0..=g {
                    let n = bps.get(gp, d / k);
                    if !n.is_zero() {
                        acc += cc.get(gp, g, k) * n;
                    }
                }
            }
            out.set(g, d, acc);
        }
    }
    out
}

/// A non-integral BPS number produced by [`gv_invert`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityWarning {
    pub g: usize,
    pub d: usize,
    pub value: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GvInversion {
    pub bps: GenusDegreeTable,
    pub warnings: Vec<IntegralityWarning>,
}

/// Inverts [`gv_transform`] by induction on `d`, then on `g`.
pub fn gv_invert(gw: &GenusDegreeTable, gmax: usize, dmax: usize) -> GvInversion {
    let gmax = gmax.min(gw.gmax);
    let dmax = dmax.min(gw.dmax);
    let cc = CoverCoefficients::new(gmax);
    let mut bps = GenusDegreeTable::zeros(gmax, dmax);
    let mut warnings = Vec::new();
    for d in 1..=dmax {
        for g in 0..=gmax {
            let mut acc = gw.get(g, d).clone();
            for k in (1..=d).filter(|k| d % k == 0) {
                for gp in 0..=g {
                    if k == 1 && gp == g {
                        continue;
                    }
                    let n = bps.get(gp, d / k);
                    if !n.is_zero() {
                        acc -= cc.get(gp, g, k) * n;
                    }
                }
            }
            if !acc.is_integer() {
                warnings.push(IntegralityWarning { g, d, value: acc.clone() });
            }
            bps.set(g, d, acc);
        }
    }
    GvInversion { bps, warnings }
}

/// Genus-0 BPS numbers from genus-0 invariants: `N_{0,d} = sum_{k|d} n_{0,d/k} / k^3`.
pub fn genus0_bps(gw: &[BigRational]) -> GvInversion {
    let mut t = GenusDegreeTable::zeros(0, gw.len());
    for (i, v) in gw.iter().enumerate() {
        t.set(0, i + 1, v.clone());
    }
    gv_invert(&t, 0, gw.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|x| BigInt::from(*x)).collect()
    }

    #[test]
    fn yau_zaslow_values() {
        assert_eq!(yau_zaslow(4), ints(&[1, 24, 324, 3200, 25650]));
    }

    #[test]
    fn genus_one_relation() {
        assert_eq!(genus1(0).unwrap(), BigInt::zero());
        assert_eq!(genus1(1).unwrap(), BigInt::from(-2));
        assert_eq!(genus1(4).unwrap(), BigInt::from(-8550));
        assert!(genus1_from(1, &BigInt::from(5)).is_err());
    }

    #[test]
    fn kkv_small_table() {
        let t = kkv_table(4, 4).unwrap();
        assert_eq!(t.values[0], ints(&[1, 24, 324, 3200, 25650]));
        assert_eq!(t.values[1], ints(&[0, -2, -54, -800, -8550]));
        assert_eq!(t.values[2], ints(&[0, 0, 3, 88, 1401]));
        assert_eq!(t.values[3], ints(&[0, 0, 0, -4, -126]));
        assert_eq!(t.values[4], ints(&[0, 0, 0, 0, 5]));
        assert_eq!(t.get(0, -1), Some(BigInt::zero()));
    }

    #[test]
    fn z_basis_rejects_asymmetric_input() {
        // y + 1 is not symmetric
        let p = ints(&[0, 1, 1]);
        assert_eq!(to_z_basis(p, 1, 7), Err(Error::BasisRemainder { h: 7 }));
    }

    #[test]
    fn sinc_coefficients() {
        // (sin x / x)^{-2} = 1 + x^2/3 + x^4/15 + ...
        assert_eq!(sinc_power(-2, 2), vec![int(1), rat(1, 3), rat(1, 15)]);
        assert_eq!(sinc_power(0, 2), vec![int(1), int(0), int(0)]);
    }

    #[test]
    fn genus_zero_multiple_covers() {
        let mut n = GenusDegreeTable::zeros(0, 4);
        n.set(0, 1, int(640));
        n.set(0, 2, int(10032));
        let gw = gv_transform(&n, 0, 4);
        assert_eq!(gw.get(0, 2), &(int(10032) + rat(640, 8)));
        assert_eq!(gw.get(0, 4), &(rat(10032, 8) + rat(640, 64)));
        let back = gv_invert(&gw, 0, 4);
        assert_eq!(back.bps, n);
        assert!(back.warnings.is_empty());
    }

    #[test]
    fn non_integral_input_warns() {
        let mut gw = GenusDegreeTable::zeros(0, 2);
        gw.set(0, 1, int(1));
        gw.set(0, 2, int(1));
        let inv = gv_invert(&gw, 0, 2);
        assert_eq!(inv.warnings.len(), 1);
        assert_eq!(inv.warnings[0].value, rat(7, 8));
    }
}
