//! From Noether-Lefschetz numbers to BPS counts and back.
//!
//! For the quartic pencil the NL numbers are coefficients of a single series
//! `Theta` in `q^{1/8}`: `NL_{h,d} = Theta[Delta_4(h,d)/8]`. Genus-0 BPS numbers
//! of the total space are linear in those coefficients, which lets `Theta` be
//! recovered from mirror-symmetry output as a degree-21 polynomial in the
//! weight-1/2 thetas `A`, `B`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bpsk3::{yau_zaslow, RTable};
use crate::error::{Error, Result};
use crate::lattice::{coset, disc};
use crate::linalg;
use crate::modforms::{nl_lookup, theta_a, theta_b, VVForm};
use crate::qseries::{eta24, FracSeries};
use crate::rational::{exponent, int, Exponent};

/// Largest `h` with `Delta_l(h, d) >= 0`.
pub fn h_top(l: i64, d: i64) -> i64 {
    (d * d).div_euclid(2 * l) + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    FittedModular,
    MirrorSolved,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::FittedModular => "fitted-modular",
            Provenance::MirrorSolved => "mirror-solved",
        }
    }
}

/// `NL_{h,d}` for `1 <= d <= dmax`, `0 <= h <= h_top(d)`, already multiplied by
/// the number of copies of the family.
#[derive(Debug, Clone, PartialEq)]
pub struct NlTable {
    pub level: i64,
    pub multiplier: i64,
    pub provenance: Provenance,
    pub dmax: i64,
    entries: BTreeMap<(i64, i64), BigRational>,
}

/// One row of an NL table.
#[derive(Debug, Clone, PartialEq)]
pub struct NlRow {
    pub h: i64,
    pub d: i64,
    pub disc: i64,
    pub coset: i64,
    pub value: BigRational,
}

impl NlTable {
    fn build(
        level: i64,
        dmax: i64,
        multiplier: i64,
        provenance: Provenance,
        lookup: impl Fn(i64, i64) -> Result<BigRational>,
    ) -> Result<Self> {
        let mut entries = BTreeMap::new();
        let m = int(multiplier);
        for d in 1..=dmax {
            for h in 0..=h_top(level, d) {
                entries.insert((h, d), lookup(h, d)? * &m);
            }
        }
        Ok(NlTable { level, multiplier, provenance, dmax, entries })
    }

    pub fn from_form(form: &VVForm, dmax: i64, multiplier: i64, provenance: Provenance) -> Result<Self> {
        Self::build(form.level(), dmax, multiplier, provenance, |h, d| {
            Ok(nl_lookup(form, h, d)?.value)
        })
    }

    /// Quartic table read off the scalar series: its three components occupy
    /// disjoint classes mod 1, so the scalar determines them.
    pub fn from_quartic_theta(theta: &FracSeries, dmax: i64, multiplier: i64, provenance: Provenance) -> Result<Self> {
        Self::build(4, dmax, multiplier, provenance, |h, d| theta.coeff(exponent(disc(4, h, d), 8)))
    }

    /// `NL_{h,d}`; zero when the discriminant is negative.
    pub fn get(&self, h: i64, d: i64) -> Result<BigRational> {
        if disc(self.level, h, d) < 0 {
            return Ok(BigRational::zero());
        }
        self.entries
            .get(&(h, d))
            .cloned()
            .ok_or(Error::MissingEntry { h, d })
    }

    /// Rows sorted by `(d, h)`.
    pub fn rows(&self) -> Vec<NlRow> {
        let mut rows: Vec<NlRow> = self
            .entries
            .iter()
            .map(|((h, d), v)| NlRow {
                h: *h,
                d: *d,
                disc: disc(self.level, *h, *d),
                coset: coset(self.level, *d),
                value: v.clone(),
            })
            .collect();
        rows.sort_by_key(|r| (r.d, r.h));
        rows
    }
}

/// `n_{g,d} = sum_{h=g}^{h_top(d)} r_{g,h} NL_{h,d}`.
pub fn bps_from_nl(g: usize, nl: &NlTable, r: &RTable, d: i64) -> Result<BigRational> {
    let top = h_top(nl.level, d);
    let mut acc = BigRational::zero();
    for h in g as i64..=top {
        let rgh = r.get(g, h).ok_or(Error::MissingEntry { h, d })?;
        if rgh.is_zero() {
            continue;
        }
        acc += BigRational::from_integer(rgh) * nl.get(h, d)?;
    }
    Ok(acc)
}

/// `Theta` recovered from genus-0 BPS numbers.
#[derive(Debug, Clone)]
pub struct ThetaFit {
    /// Coefficients of `A^{21-k} B^k` in `2^22 Theta`, `k = 0..=21`.
    pub coefficients: Vec<BigRational>,
    pub theta: FracSeries,
    /// Equations assembled (BPS rows, support rows, normalization row).
    pub equations: usize,
    /// Whether the `Theta[0] = -1` normalization was needed to reach full rank.
    pub used_normalization: bool,
}

const DEGREE: usize = 21;

/// Solves for the 22 coefficients of `2^22 Theta = sum c_k A^{21-k} B^k` from
/// `n_{0,d} = sum_h r_{0,h} 2 Theta[Delta_4(h,d)/8]`, `d = 1..=bps.len()`, together
/// with the vanishing of `Theta` away from the classes `0, 1/8, 1/2 mod 1`.
pub fn fit_theta_from_gw(bps: &[BigRational]) -> Result<ThetaFit> {
    let dmax = bps.len() as i64;
    if dmax == 0 {
        return Err(Error::InvalidArgument("no BPS numbers supplied".into()));
    }
    let trunc = Exponent::from_integer((dmax * dmax) / 8 + 2);
    let (a, b) = (theta_a(trunc), theta_b(trunc));
    let mut a_pow = vec![FracSeries::one(8, trunc)];
    let mut b_pow = vec![FracSeries::one(8, trunc)];
    for i in 1..=DEGREE {
        a_pow.push(a_pow[i - 1].mul(&a));
        b_pow.push(b_pow[i - 1].mul(&b));
    }
    let monomials: Vec<FracSeries> = (0..=DEGREE).map(|k| a_pow[DEGREE - k].mul(&b_pow[k])).collect();
    let scale = BigRational::new(BigInt::one(), BigInt::from(2).pow(DEGREE as u32 + 1));
    let coeff_row = |e: Exponent| -> Result<Vec<BigRational>> {
        monomials.iter().map(|m| Ok(m.coeff(e)? * &scale)).collect()
    };

    let r0 = yau_zaslow(h_top(4, dmax) as usize);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (i, n) in bps.iter().enumerate() {
        let d = i as i64 + 1;
        let mut row = vec![BigRational::zero(); DEGREE + 1];
        for h in 0..=h_top(4, d) {
            let weight = BigRational::from_integer(r0[h as usize].clone()) * int(2);
            for (slot, c) in row.iter_mut().zip(coeff_row(exponent(disc(4, h, d), 8))?) {
                *slot += &weight * c;
            }
        }
        rows.push(row);
        rhs.push(n.clone());
    }
    let limit = (trunc * 8).to_integer();
    for key in 1..limit {
        if ![0, 1, 4].contains(&key.rem_euclid(8)) {
            rows.push(coeff_row(exponent(key, 8))?);
            rhs.push(BigRational::zero());
        }
    }
    let used_normalization = linalg::rank(&rows) < DEGREE + 1;
    if used_normalization {
        rows.push(coeff_row(Exponent::zero())?);
        rhs.push(int(-1));
    }
    let x = linalg::solve(&rows, &rhs)?;
    let mut theta = FracSeries::zero(8, trunc);
    for (c, m) in x.iter().zip(&monomials) {
        theta = theta.add(&m.scale(&(c * &scale)));
    }
    Ok(ThetaFit { coefficients: x, theta, equations: rows.len(), used_normalization })
}

/// `2^22 Theta` as a polynomial in `A, B`, evaluated to the given truncation.
pub fn theta_from_coefficients(coefficients: &[BigRational], trunc: Exponent) -> FracSeries {
    let (a, b) = (theta_a(trunc), theta_b(trunc));
    let scale = BigRational::new(BigInt::one(), BigInt::from(2).pow(DEGREE as u32 + 1));
    let mut out = FracSeries::zero(8, trunc);
    for (k, c) in coefficients.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let m = a.pow((DEGREE - k) as u32).mul(&b.pow(k as u32));
        out = out.add(&m.scale(&(c * &scale)));
    }
    out
}

/// `Psi = 108 sum_{n > 0} q^{n^2}`, the nodal-fiber contribution.
pub fn psi(trunc: i64) -> FracSeries {
    let terms = (1..).map(|n: i64| n * n).take_while(|s| *s < trunc).map(|s| (s, int(108)));
    FracSeries::from_keys(1, Exponent::from_integer(trunc), terms)
}

/// Degree of the closure of the NL divisor in the quartic moduli space:
/// `Theta[Delta/8] - Psi[Delta/8]`.
pub fn closure_degree(h: i64, d: i64, theta: &FracSeries) -> Result<BigRational> {
    let delta = disc(4, h, d);
    if delta <= 0 {
        return Err(Error::NonPositiveDiscriminant { disc: delta });
    }
    let e = exponent(delta, 8);
    let psi_trunc = e.to_integer() + 1;
    Ok(theta.coeff(e)? - psi(psi_trunc).coeff(e)?)
}

/// Coefficient comparison of `2 Theta / Delta` against `-2/q + 168 + sum n_{0,d} q^{d^2/8}`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarveyMooreReport {
    pub dmax: i64,
    /// Exponents `-1`, `0`, `d^2/8` compared.
    pub realized_checked: usize,
    /// First realized exponent with a mismatch: `(exponent, expected, found)`.
    pub realized_mismatch: Option<(Exponent, BigRational, BigRational)>,
    /// Other exponents of the window compared against zero.
    pub unrealized_checked: usize,
    pub unrealized_nonzero: Vec<(Exponent, BigRational)>,
}

impl HarveyMooreReport {
    pub fn realized_ok(&self) -> bool {
        self.realized_mismatch.is_none()
    }

    pub fn unrealized_ok(&self) -> bool {
        self.unrealized_nonzero.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.realized_ok() && self.unrealized_ok()
    }
}

/// The series `-2/q + 168 + sum_{d <= dmax} n_{0,d} q^{d^2/8}`.
pub fn g_series(bps: &[BigRational], trunc: Exponent) -> FracSeries {
    let mut terms = vec![(Exponent::from_integer(-1), int(-2)), (Exponent::zero(), int(168))];
    for (i, n) in bps.iter().enumerate() {
        let d = i as i64 + 1;
        terms.push((exponent(d * d, 8), n.clone()));
    }
    FracSeries::from_terms(8, trunc, terms).expect("eighths")
}

/// Compares on the window `[-1, dmax^2/8]` of the `q^{1/8}` grid.
pub fn harvey_moore_check(theta: &FracSeries, bps: &[BigRational], dmax: i64) -> Result<HarveyMooreReport> {
    if (bps.len() as i64) < dmax {
        return Err(Error::InvalidArgument(format!("need {dmax} BPS numbers, got {}", bps.len())));
    }
    let top = exponent(dmax * dmax, 8);
    let delta = eta24(top.to_integer() + 3);
    let ratio = theta.scale(&int(2)).mul(&delta.invert()?);
    let g = g_series(&bps[..dmax as usize], top + exponent(1, 8));
    let realized: Vec<Exponent> = std::iter::once(Exponent::from_integer(-1))
        .chain(std::iter::once(Exponent::zero()))
        .chain((1..=dmax).map(|d| exponent(d * d, 8)))
        .collect();
    let mut report = HarveyMooreReport {
        dmax,
        realized_checked: 0,
        realized_mismatch: None,
        unrealized_checked: 0,
        unrealized_nonzero: Vec::new(),
    };
    for key in -8..=(dmax * dmax) {
        let e = exponent(key, 8);
        let found = ratio.coeff(e)?;
        if realized.contains(&e) {
            report.realized_checked += 1;
            let expected = g.coeff(e)?;
            if found != expected && report.realized_mismatch.is_none() {
                report.realized_mismatch = Some((e, expected, found));
            }
        } else {
            report.unrealized_checked += 1;
            if !found.is_zero() {
                report.unrealized_nonzero.push((e, found));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bpsk3::kkv_table;
    use crate::modforms::{scalarize, Preset};

    fn quartic_theta(trunc: i64) -> FracSeries {
        scalarize(&Preset::Quartic.fit(trunc).unwrap().form)
    }

    #[test]
    fn h_top_bound() {
        assert_eq!(h_top(4, 1), 1);
        assert_eq!(h_top(4, 4), 3);
        for d in 1..10 {
            assert!(disc(4, h_top(4, d), d) >= 0);
            assert!(disc(4, h_top(4, d) + 1, d) < 0);
        }
    }

    #[test]
    fn genus_zero_degree_one() {
        let theta = quartic_theta(3);
        let r = kkv_table(1, 4).unwrap();
        let single = NlTable::from_quartic_theta(&theta, 2, 1, Provenance::FittedModular).unwrap();
        assert_eq!(bps_from_nl(0, &single, &r, 1).unwrap(), int(320));
        let doubled = NlTable::from_quartic_theta(&theta, 2, 2, Provenance::FittedModular).unwrap();
        assert_eq!(bps_from_nl(0, &doubled, &r, 1).unwrap(), int(640));
        assert_eq!(bps_from_nl(0, &doubled, &r, 2).unwrap(), int(10032));
        assert!(bps_from_nl(2, &doubled, &r, 1).unwrap().is_zero());
        assert_eq!(doubled.get(9, 1).unwrap(), BigRational::zero());
        assert_eq!(doubled.get(0, 3), Err(Error::MissingEntry { h: 0, d: 3 }));
    }

    #[test]
    fn modular_and_vector_tables_agree() {
        let fitted = Preset::Quartic.fit(4).unwrap();
        let a = NlTable::from_form(&fitted.form, 4, 1, Provenance::FittedModular).unwrap();
        let b = NlTable::from_quartic_theta(&scalarize(&fitted.form), 4, 1, Provenance::FittedModular).unwrap();
        assert_eq!(a.rows(), b.rows());
    }

    #[test]
    fn closure_degree_values() {
        let theta = quartic_theta(3);
        assert_eq!(closure_degree(1, 3, &theta).unwrap(), int(320));
        assert_eq!(closure_degree(2, 4, &theta).unwrap(), int(0));
        assert!(matches!(closure_degree(1, 0, &theta), Err(Error::NonPositiveDiscriminant { .. })));
        assert!(psi(5).coeff(Exponent::from_integer(2)).unwrap().is_zero());
        assert_eq!(psi(5).coeff(Exponent::from_integer(4)).unwrap(), int(108));
    }

    #[test]
    fn polynomial_reproduces_theta() {
        let mut c = vec![BigRational::zero(); 22];
        c[0] = int(3);
        let t = theta_from_coefficients(&c, Exponent::from_integer(2));
        assert_eq!(t.coeff(Exponent::zero()).unwrap(), BigRational::new(3.into(), BigInt::from(2).pow(22)));
    }
}
