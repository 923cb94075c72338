//! Theta and Eisenstein series, Rankin-Cohen brackets and vector-valued forms
//! for the Weil representation attached to `Z/lZ`.
//!
//! A [`VVForm`] of level `l` stores the components `r = 0..=l/2` only; the
//! remaining ones follow from `f_r = f_{l-r}`. Component `r` lives on the grid
//! `r^2/(2l) + Z`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{coset, disc, vanishing_constraints};
use crate::linalg;
use crate::qseries::{FracSeries, FracSeriesJson};
use crate::rational::{bernoulli, binomial, exponent, fmt_exponent, int, Exponent};

fn ceil_sqrt(x: i64) -> i64 {
    let mut s = (x.max(0) as f64).sqrt() as i64;
    while s * s < x {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= x {
        s -= 1;
    }
    s
}

/// `sum_n sign^n q^{n^2 / denom}` below `q^trunc`.
fn theta_sum(denom: i64, alternate: bool, trunc: Exponent) -> FracSeries {
    let limit = (trunc * denom).ceil().to_integer();
    let bound = ceil_sqrt(limit);
    let terms = (-bound..=bound).filter(|n| n * n < limit).map(|n| {
        let sign = if alternate && n % 2 != 0 { -1 } else { 1 };
        (n * n, int(sign))
    });
    FracSeries::from_keys(denom, trunc, terms)
}

/// `A = sum_n q^{n^2/8}`.
pub fn theta_a(trunc: Exponent) -> FracSeries {
    theta_sum(8, false, trunc)
}

/// `B = sum_n (-1)^n q^{n^2/8}`.
pub fn theta_b(trunc: Exponent) -> FracSeries {
    theta_sum(8, true, trunc)
}

/// `(U, V) = (sum_n q^{n^2/4}, sum_n (-1)^n q^{n^2/4})`.
pub fn theta_uv(trunc: Exponent) -> (FracSeries, FracSeries) {
    (theta_sum(4, false, trunc), theta_sum(4, true, trunc))
}

/// Normalized Eisenstein series `E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n`.
pub fn eisenstein(k: u32, trunc: i64) -> Result<FracSeries> {
    if k < 4 || !k.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "Eisenstein weight must be even and >= 4, got {k}"
        )));
    }
    let factor = -int(2 * k as i64) / bernoulli(k as usize);
    let len = trunc.max(0) as usize;
    let mut sigma = vec![BigInt::zero(); len];
    for dvs in 1..len {
        let p = BigInt::from(dvs).pow(k - 1);
        for m in (dvs..len).step_by(dvs) {
            sigma[m] += &p;
        }
    }
    let terms = sigma.into_iter().enumerate().map(|(n, s)| {
        if n == 0 {
            (0, BigRational::one())
        } else {
            (n as i64, &factor * BigRational::from_integer(s))
        }
    });
    Ok(FracSeries::from_keys(1, Exponent::from_integer(trunc), terms))
}

/// `[f, g]_n = sum_r (-1)^r C(n+k1-1, n-r) C(n+k2-1, r) f^(r) g^(n-r)`, with
/// `f^(r) = (q d/dq)^r f`.
pub fn rc_bracket(
    f: &FracSeries,
    k1: &BigRational,
    g: &FracSeries,
    k2: &BigRational,
    n: u32,
) -> FracSeries {
    let one = BigRational::one();
    let top1 = int(n as i64) + k1 - &one;
    let top2 = int(n as i64) + k2 - &one;
    let mut out: Option<FracSeries> = None;
    for r in 0..=n {
        let mut c = binomial(&top1, n - r) * binomial(&top2, r);
        if r % 2 == 1 {
            c = -c;
        }
        let term = f.q_derivative_n(r).mul(&g.q_derivative_n(n - r)).scale(&c);
        out = Some(match out {
            None => term,
            Some(acc) => acc.add(&term),
        });
    }
    out.expect("at least one term")
}

/// Vector-valued form for the dual Weil representation of `Z/lZ`.
#[derive(Clone, Debug, PartialEq)]
pub struct VVForm {
    level: i64,
    weight2: i64,
    components: Vec<FracSeries>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VVFormJson {
    pub level: i64,
    pub weight: String,
    pub components: Vec<FracSeriesJson>,
}

impl VVForm {
    /// Errors unless there are exactly `l/2 + 1` components, each on its grading class.
    pub fn new(level: i64, weight2: i64, components: Vec<FracSeries>) -> Result<Self> {
        if level <= 0 || level % 2 != 0 {
            return Err(Error::InvalidArgument(format!("level must be even and positive, got {level}")));
        }
        if components.len() != (level / 2 + 1) as usize {
            return Err(Error::InvalidArgument(format!(
                "level {level} needs {} components, got {}",
                level / 2 + 1,
                components.len()
            )));
        }
        let f = VVForm {
            level,
            weight2,
            components: components.into_iter().map(|c| c.regrade(2 * level)).collect(),
        };
        if !f.satisfies_grading() {
            return Err(Error::InvalidArgument("component exponents off their r^2/(2l) class".into()));
        }
        Ok(f)
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    /// Twice the weight.
    pub fn weight2(&self) -> i64 {
        self.weight2
    }

    pub fn weight(&self) -> BigRational {
        BigRational::new(self.weight2.into(), 2.into())
    }

    pub fn components(&self) -> &[FracSeries] {
        &self.components
    }

    /// Component `gamma` of the full `l`-vector, folded to its orbit representative.
    pub fn component(&self, gamma: i64) -> &FracSeries {
        &self.components[coset(self.level, gamma) as usize]
    }

    pub fn truncation(&self) -> Exponent {
        self.components.iter().map(|c| c.truncation()).min().expect("nonempty")
    }

    pub fn coeff(&self, e: Exponent, gamma: i64) -> Result<BigRational> {
        self.component(gamma).coeff(e)
    }

    pub fn satisfies_grading(&self) -> bool {
        self.components
            .iter()
            .enumerate()
            .all(|(r, c)| c.exponents_in_class(exponent((r * r) as i64, 2 * self.level)))
    }

    pub fn is_holomorphic(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.valuation().is_none_or(|v| v >= Exponent::zero()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.map(|s| s.scale(c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.level != other.level || self.weight2 != other.weight2 {
            return Err(Error::InvalidArgument("adding forms of different level or weight".into()));
        }
        Ok(VVForm {
            level: self.level,
            weight2: self.weight2,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    /// Componentwise bracket with a scalar form of weight `k2`.
    pub fn rc_bracket(&self, g: &FracSeries, k2: &BigRational, n: u32) -> Self {
        let k1 = self.weight();
        let mut out = self.map(|c| rc_bracket(c, &k1, g, k2, n));
        out.weight2 = self.weight2 + (int(2) * k2).to_integer().to_i64().expect("small weight") + 4 * n as i64;
        out
    }

    fn map(&self, f: impl Fn(&FracSeries) -> FracSeries) -> Self {
        VVForm {
            level: self.level,
            weight2: self.weight2,
            components: self.components.iter().map(|c| f(c).regrade(2 * self.level)).collect(),
        }
    }

    pub fn to_json(&self) -> VVFormJson {
        VVFormJson {
            level: self.level,
            weight: format!("{}/2", self.weight2),
            components: self.components.iter().map(|c| c.to_json()).collect(),
        }
    }
}

/// Siegel theta `theta^(l)`: component `i` is `sum_{s in Z} q^{(ls+i)^2/(2l)}`.
pub fn siegel_theta(l: i64, trunc: Exponent) -> Result<VVForm> {
    if l <= 0 || l % 2 != 0 {
        return Err(Error::InvalidArgument(format!("level must be even and positive, got {l}")));
    }
    let limit = (trunc * (2 * l)).ceil().to_integer();
    let smax = ceil_sqrt(limit) / l + 2;
    let comps = (0..=l / 2)
        .map(|i| {
            let terms = (-smax..=smax).filter_map(|s| {
                let n = l * s + i;
                (n * n < limit).then(|| (n * n, BigRational::one()))
            });
            FracSeries::from_keys(2 * l, trunc, terms)
        })
        .collect();
    VVForm::new(l, 1, comps)
}

/// Number of basis forms used at level `l`.
pub fn basis_size(l: i64) -> Result<usize> {
    match l {
        2 | 4 | 6 => Ok((l / 2 + 1) as usize),
        8 => Ok(4),
        _ => Err(Error::InvalidArgument(format!("basis forms are available for l in {{2,4,6,8}}, got {l}"))),
    }
}

/// `F^l_n = [theta^(l), E_{10-2n}]_n`, weight 21/2, for `n` below [`basis_size`].
pub fn basis_forms(l: i64, trunc: i64) -> Result<Vec<VVForm>> {
    let count = basis_size(l)?;
    let theta = siegel_theta(l, Exponent::from_integer(trunc))?;
    (0..count as u32)
        .map(|n| {
            let k = 10 - 2 * n;
            let e = eisenstein(k, trunc)?;
            Ok(theta.rc_bracket(&e, &int(k as i64), n))
        })
        .collect()
}

/// Prescribed coefficient `value` at `q^exponent` in component `component`.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub exponent: Exponent,
    pub component: i64,
    pub value: BigRational,
}

impl Constraint {
    pub fn new(exponent: Exponent, component: i64, value: BigRational) -> Self {
        Constraint { exponent, component, value }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FittedForm {
    pub coefficients: Vec<BigRational>,
    pub form: VVForm,
}

/// Solves for the unique combination `sum c_n F^l_n` meeting the constraints.
pub fn fit(l: i64, constraints: &[Constraint], trunc: i64) -> Result<FittedForm> {
    let basis = basis_forms(l, trunc)?;
    fit_in_basis(&basis, constraints)
}

pub fn fit_in_basis(basis: &[VVForm], constraints: &[Constraint]) -> Result<FittedForm> {
    let first = basis
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty basis".into()))?;
    let mut rows = Vec::with_capacity(constraints.len());
    for c in constraints {
        let row = basis
            .iter()
            .map(|f| f.coeff(c.exponent, c.component))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    let rhs: Vec<BigRational> = constraints.iter().map(|c| c.value.clone()).collect();
    let coefficients = linalg::solve(&rows, &rhs)?;
    let mut form = first.scale(&BigRational::zero());
    for (c, f) in coefficients.iter().zip(basis) {
        form = form.add(&f.scale(c))?;
    }
    Ok(FittedForm { coefficients, form })
}

/// Sum of the orbit-representative components.
pub fn scalarize(f: &VVForm) -> FracSeries {
    f.components
        .iter()
        .skip(1)
        .fold(f.components[0].clone(), |acc, c| acc.add(c))
}

#[derive(Debug, Clone, PartialEq)]
pub struct NlValue {
    pub value: BigRational,
    /// Set when the discriminant is negative and the value vanishes by the Hodge index theorem.
    pub hodge_vanishing: bool,
}

/// `NL_{h,d} = f_{d mod l}[Delta_l(h, d) / (2l)]`.
pub fn nl_lookup(f: &VVForm, h: i64, d: i64) -> Result<NlValue> {
    let l = f.level();
    let delta = disc(l, h, d);
    if delta < 0 {
        return Ok(NlValue { value: BigRational::zero(), hodge_vanishing: true });
    }
    Ok(NlValue {
        value: f.coeff(exponent(delta, 2 * l), d)?,
        hodge_vanishing: false,
    })
}

pub type CMatrix = Vec<Vec<Complex64>>;

/// Images of `T` and `S` under the Weil representation of `Z/lZ` (quadratic form
/// `-x^2/(2l)`, signature `(2, 19)`) and under its dual.
#[derive(Debug, Clone)]
pub struct WeilRep {
    pub t: CMatrix,
    pub s: CMatrix,
    pub t_dual: CMatrix,
    pub s_dual: CMatrix,
}

pub fn weil_rep(l: usize) -> WeilRep {
    use std::f64::consts::PI;
    let lf = l as f64;
    let mut t = vec![vec![Complex64::zero(); l]; l];
    for (r, row) in t.iter_mut().enumerate() {
        row[r] = Complex64::from_polar(1.0, -2.0 * PI * ((r * r) % (2 * l)) as f64 / (2.0 * lf));
    }
    let prefactor = Complex64::from_polar(1.0 / lf.sqrt(), 17.0 * PI / 4.0);
    let s: CMatrix = (0..l)
        .map(|dl| {
            (0..l)
                .map(|g| prefactor * Complex64::from_polar(1.0, 2.0 * PI * ((g * dl) % l) as f64 / lf))
                .collect()
        })
        .collect();
    let conj = |m: &CMatrix| -> CMatrix { m.iter().map(|row| row.iter().map(|z| z.conj()).collect()).collect() };
    WeilRep { t_dual: conj(&t), s_dual: conj(&s), t, s }
}

/// Maximum of `|M M^* - I|` over entries.
pub fn unitarity_defect(m: &CMatrix) -> f64 {
    let n = m.len();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex64::zero();
            for k in 0..n {
                acc += m[i][k] * m[j][k].conj();
            }
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((acc - target).norm());
        }
    }
    worst
}

/// Sums the truncated series at `q = exp(2 pi i tau)`.
pub fn evaluate(f: &FracSeries, tau: Complex64) -> Complex64 {
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    f.terms()
        .map(|(e, c)| {
            let ef = e.to_f64().expect("finite exponent");
            c.to_f64().expect("finite coefficient") * (two_pi_i * ef * tau).exp()
        })
        .sum()
}

/// Largest relative residual of `f(-1/tau) = tau^k rho^*(S) f(tau)` over the samples.
pub fn numeric_modularity_check(f: &VVForm, taus: &[Complex64]) -> f64 {
    let l = f.level() as usize;
    let rho = weil_rep(l);
    let k = f.weight2() as f64 / 2.0;
    let mut worst: f64 = 0.0;
    for &tau in taus {
        let at_tau: Vec<Complex64> = (0..l as i64).map(|g| evaluate(f.component(g), tau)).collect();
        let inv = -tau.inv();
        let factor = tau.sqrt().powf(2.0 * k);
        for dl in 0..l {
            let lhs = evaluate(f.component(dl as i64), inv);
            let rhs: Complex64 = factor * (0..l).map(|g| rho.s_dual[dl][g] * at_tau[g]).sum::<Complex64>();
            let scale = lhs.norm().max(1.0);
            worst = worst.max((lhs - rhs).norm() / scale);
        }
    }
    worst
}

/// Named constraint sets for the classical Lefschetz pencils.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Double planes branched along a pencil of sextic curves.
    DoublePlane,
    /// Pencil of quartic surfaces in P^3.
    Quartic,
    /// Fixed quadric, pencil of cubics in P^4.
    SexticCubicPencil,
    /// Fixed cubic, pencil of quadrics in P^4.
    SexticQuadricPencil,
    /// Two fixed quadrics and a pencil of quadrics in P^5.
    Octic,
}

impl Preset {
    pub const ALL: [Preset; 5] = [
        Preset::DoublePlane,
        Preset::Quartic,
        Preset::SexticCubicPencil,
        Preset::SexticQuadricPencil,
        Preset::Octic,
    ];

    pub fn level(self) -> i64 {
        match self {
            Preset::DoublePlane => 2,
            Preset::Quartic => 4,
            Preset::SexticCubicPencil | Preset::SexticQuadricPencil => 6,
            Preset::Octic => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::DoublePlane => "l2-sextic",
            Preset::Quartic => "quartic-pencil",
            Preset::SexticCubicPencil => "l6-family1",
            Preset::SexticQuadricPencil => "l6-family2",
            Preset::Octic => "l8-quadrics",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown preset {name}")))
    }

    /// Looks up the preset for level `l`; `family` selects between the two sextic pencils.
    pub fn for_level(l: i64, family: u8) -> Result<Self> {
        match (l, family) {
            (2, 1) => Ok(Preset::DoublePlane),
            (4, 1) => Ok(Preset::Quartic),
            (6, 1) => Ok(Preset::SexticCubicPencil),
            (6, 2) => Ok(Preset::SexticQuadricPencil),
            (8, 1) => Ok(Preset::Octic),
            _ => Err(Error::InvalidArgument(format!("no preset for l = {l}, family {family}"))),
        }
    }

    /// Number of nodal fibers, the coefficient of `q^1` in component 0. The quartic
    /// pencil is fixed by vanishings instead.
    pub fn nodal_fibers(self) -> Option<i64> {
        match self {
            Preset::DoublePlane => Some(150),
            Preset::Quartic => None,
            Preset::SexticCubicPencil => Some(98),
            Preset::SexticQuadricPencil => Some(78),
            Preset::Octic => Some(80),
        }
    }

    pub fn constraints(self) -> Vec<Constraint> {
        let l = self.level();
        let mut out = vec![Constraint::new(Exponent::zero(), 0, int(-1))];
        if let Some(n) = self.nodal_fibers() {
            out.push(Constraint::new(Exponent::one(), 0, int(n)));
        }
        for (e, r) in vanishing_constraints(l).expect("preset level") {
            out.push(Constraint::new(e, r as i64, BigRational::zero()));
        }
        out
    }

    pub fn fit(self, trunc: i64) -> Result<FittedForm> {
        fit(self.level(), &self.constraints(), trunc)
    }
}

pub fn describe_constraint(c: &Constraint) -> String {
    format!("q^{} v_{} = {}", fmt_exponent(c.exponent), c.component, c.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::eta24;
    use crate::rational::rat;

    fn series(denom: i64, t: Exponent, terms: &[(i64, i64, i64)]) -> FracSeries {
        FracSeries::from_terms(denom, t, terms.iter().map(|(p, q, c)| (exponent(*p, *q), int(*c)))).unwrap()
    }

    #[test]
    fn theta_expansions() {
        let t = exponent(5, 2);
        let a = theta_a(t);
        assert_eq!(
            a,
            series(8, t, &[(0, 1, 1), (1, 8, 2), (1, 2, 2), (9, 8, 2), (2, 1, 2)])
        );
        let b = theta_b(t);
        assert_eq!(
            b,
            series(8, t, &[(0, 1, 1), (1, 8, -2), (1, 2, 2), (9, 8, -2), (2, 1, 2)])
        );
        assert_eq!(a.sub(&b), series(8, t, &[(1, 8, 4), (9, 8, 4)]));
    }

    #[test]
    fn uv_product_matches_convolution() {
        let t = Exponent::from_integer(3);
        let (u, v) = theta_uv(t);
        assert_eq!(u, series(4, t, &[(0, 1, 1), (1, 4, 2), (1, 1, 2), (9, 4, 2)]));
        let uv = u.mul(&v);
        for k in 0..12 {
            let mut expect = 0i64;
            for n in -4i64..=4 {
                for m in -4i64..=4 {
                    if n * n + m * m == k {
                        expect += if m % 2 == 0 { 1 } else { -1 };
                    }
                }
            }
            assert_eq!(uv.coeff(exponent(k, 4)).unwrap(), int(expect), "k = {k}");
        }
    }

    #[test]
    fn eisenstein_coefficients() {
        let e4 = eisenstein(4, 3).unwrap();
        assert_eq!(e4.coeff(Exponent::from_integer(1)).unwrap(), int(240));
        assert_eq!(e4.coeff(Exponent::from_integer(2)).unwrap(), int(2160));
        let e6 = eisenstein(6, 3).unwrap();
        assert_eq!(e6.coeff(Exponent::from_integer(2)).unwrap(), int(-16632));
        let e10 = eisenstein(10, 3).unwrap();
        assert_eq!(e10.coeff(Exponent::from_integer(1)).unwrap(), int(-264));
        assert_eq!(e10.coeff(Exponent::from_integer(2)).unwrap(), int(-135432));
        assert!(eisenstein(5, 3).is_err());
        // E_8 = E_4^2
        assert_eq!(eisenstein(8, 12).unwrap(), eisenstein(4, 12).unwrap().pow(2));
    }

    #[test]
    fn bracket_of_e4_e6_is_delta() {
        let e4 = eisenstein(4, 20).unwrap();
        let e6 = eisenstein(6, 20).unwrap();
        let b = rc_bracket(&e4, &int(4), &e6, &int(6), 1);
        assert_eq!(b, eta24(20).scale(&int(-3456)));
        assert_eq!(rc_bracket(&e4, &int(4), &e6, &int(6), 0), e4.mul(&e6));
        let one = FracSeries::one(1, Exponent::from_integer(20));
        assert_eq!(rc_bracket(&e4, &int(4), &one, &int(0), 0), e4);
    }

    #[test]
    fn siegel_theta_components() {
        let th = siegel_theta(8, Exponent::from_integer(6)).unwrap();
        assert_eq!(th.components()[0], series(16, Exponent::from_integer(6), &[(0, 1, 1), (4, 1, 2)]));
        assert_eq!(
            th.components()[1],
            series(16, Exponent::from_integer(6), &[(1, 16, 1), (49, 16, 1), (81, 16, 1)])
        );
        assert!(th.satisfies_grading());
        assert_eq!(th.weight(), rat(1, 2));
    }

    #[test]
    fn basis_sizes_and_weights() {
        for (l, n) in [(2, 2), (4, 3), (6, 4), (8, 4)] {
            let b = basis_forms(l, 3).unwrap();
            assert_eq!(b.len(), n);
            for f in &b {
                assert_eq!(f.weight2(), 21);
                assert!(f.satisfies_grading());
                assert!(f.is_holomorphic());
            }
        }
        assert!(basis_forms(10, 3).is_err());
    }

    #[test]
    fn quartic_fit() {
        let fitted = Preset::Quartic.fit(3).unwrap();
        assert_eq!(fitted.coefficients, vec![int(-1), rat(-5, 4), rat(-16, 21)]);
        let s = scalarize(&fitted.form);
        for (p, q, c) in [(0, 1, -1), (1, 1, 108), (9, 8, 320), (3, 2, 5016), (2, 1, 76950)] {
            assert_eq!(s.coeff(exponent(p, q)).unwrap(), int(c));
        }
        assert_eq!(nl_lookup(&fitted.form, 2, 4).unwrap().value, int(108));
        assert_eq!(nl_lookup(&fitted.form, 1, 0).unwrap().value, int(-1));
        let neg = nl_lookup(&fitted.form, 5, 1).unwrap();
        assert!(neg.hodge_vanishing && neg.value.is_zero());
    }

    #[test]
    fn singular_and_inconsistent_fits() {
        let only = [Constraint::new(Exponent::zero(), 0, int(-1))];
        assert!(matches!(fit(4, &only, 2), Err(Error::RankDeficient { .. })));
        let mut over = Preset::DoublePlane.constraints();
        over.push(Constraint::new(Exponent::from_integer(2), 0, int(1)));
        assert!(matches!(fit(2, &over, 3), Err(Error::Inconsistent { .. })));
    }

    #[test]
    fn weil_matrices_are_unitary() {
        for l in [2, 4, 6, 8] {
            let w = weil_rep(l);
            assert!(unitarity_defect(&w.s) < 1e-12);
            assert!(unitarity_defect(&w.s_dual) < 1e-12);
            assert!(unitarity_defect(&w.t) < 1e-12);
        }
    }

    #[test]
    fn theta_two_inverts() {
        let th = siegel_theta(2, Exponent::from_integer(12)).unwrap();
        let r = numeric_modularity_check(&th, &[Complex64::new(0.0, 2.0), Complex64::new(0.3, 1.5)]);
        assert!(r < 1e-8, "residual {r}");
    }
}
