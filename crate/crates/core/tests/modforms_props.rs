use k3nl::linalg::rank;
use k3nl::modforms::{
    basis_forms, nl_lookup, numeric_modularity_check, rc_bracket, scalarize, siegel_theta, weil_rep,
    Preset,
};
use k3nl::rational::{exponent, int, rat};
use k3nl::FracSeries;
use num_complex::Complex64;
use num_rational::{BigRational, Ratio};
use num_traits::Zero;
use proptest::prelude::*;

fn small_series(denom: i64) -> impl Strategy<Value = FracSeries> {
    prop::collection::vec((0i64..16, -20i64..20), 0..8).prop_map(move |terms| {
        FracSeries::from_keys(
            denom,
            Ratio::from_integer(4),
            terms.into_iter().map(|(k, c)| (k, BigRational::from_integer(c.into()))),
        )
    })
}

/// Equal wherever both sides are known.
fn agree(a: &FracSeries, b: &FracSeries) -> bool {
    a.agrees_below(b, a.truncation().min(b.truncation()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_bilinear(f in small_series(8), g in small_series(4), h in small_series(8), n in 0u32..4) {
        let k1 = rat(1, 2);
        let k2 = int(6);
        let lhs = rc_bracket(&f.add(&h), &k1, &g, &k2, n);
        let rhs = rc_bracket(&f, &k1, &g, &k2, n).add(&rc_bracket(&h, &k1, &g, &k2, n));
        prop_assert!(agree(&lhs, &rhs));
        let c = rat(-3, 7);
        prop_assert!(agree(
            &rc_bracket(&f, &k1, &g.scale(&c), &k2, n),
            &rc_bracket(&f, &k1, &g, &k2, n).scale(&c)
        ));
    }

    #[test]
    fn bracket_zero_is_product(f in small_series(8), g in small_series(4)) {
        prop_assert_eq!(rc_bracket(&f, &rat(1, 2), &g, &int(10), 0), f.mul(&g));
    }
}

#[test]
fn basis_is_linearly_independent() {
    for (l, expected) in [(2, 2), (4, 3), (6, 4), (8, 4)] {
        let forms = basis_forms(l, 4).unwrap();
        let mut matrix = Vec::new();
        for f in &forms {
            let mut row = Vec::new();
            for comp in f.components() {
                let key_limit = 4 * 2 * l;
                for k in 0..key_limit {
                    row.push(comp.coeff(exponent(k, 2 * l)).unwrap());
                }
            }
            matrix.push(row);
        }
        assert_eq!(rank(&matrix), expected, "l = {l}");
    }
}

#[test]
fn every_constructed_form_is_graded() {
    for l in [2, 4, 6, 8] {
        assert!(siegel_theta(l, Ratio::from_integer(5)).unwrap().satisfies_grading());
        for f in basis_forms(l, 5).unwrap() {
            assert!(f.satisfies_grading());
        }
    }
    for p in Preset::ALL {
        let fitted = p.fit(4).unwrap();
        assert!(fitted.form.satisfies_grading(), "{}", p.name());
        assert!(fitted.form.is_holomorphic(), "{}", p.name());
        for c in p.constraints() {
            assert_eq!(fitted.form.coeff(c.exponent, c.component).unwrap(), c.value);
        }
    }
}

#[test]
fn t_phases_match_grading() {
    for l in [2usize, 4, 6, 8] {
        let w = weil_rep(l);
        for r in 0..l {
            let phase = w.t_dual[r][r];
            let expect = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (r * r) as f64 / (2 * l) as f64);
            assert!((phase - expect).norm() < 1e-12);
        }
    }
}

#[test]
fn fitted_forms_are_modular() {
    let tau = [Complex64::new(0.0, 1.5), Complex64::new(0.25, 1.6)];
    for p in Preset::ALL {
        let f = p.fit(10).unwrap().form;
        let r = numeric_modularity_check(&f, &tau);
        assert!(r < 1e-6, "{}: residual {r}", p.name());
    }
}

#[test]
fn zero_form_scalarizes_to_zero() {
    let f = basis_forms(4, 2).unwrap()[0].scale(&BigRational::zero());
    assert!(scalarize(&f).is_zero());
    let q = Preset::Quartic.fit(3).unwrap().form;
    assert!(nl_lookup(&q, 10, 0).unwrap().hodge_vanishing);
}
