use k3nl::bpsk3::{genus1, gv_invert, gv_transform, kkv_table, yau_zaslow, GenusDegreeTable};
use k3nl::rational::{factorial, int};
use k3nl::FracSeries;
use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Expands `n lambda^{2g'-2} (1/k) (sin(k lambda/2)/(lambda/2))^{2g'-2}` directly for every
/// entry and cover degree and collects the `lambda^{2g-2} v^d` coefficients.
fn oracle(bps: &GenusDegreeTable, gmax: usize, dmax: usize) -> GenusDegreeTable {
    let mut out = GenusDegreeTable::zeros(gmax, dmax);
    for gp in 0..=gmax {
        for d0 in 1..=dmax {
            let n = bps.get(gp, d0).clone();
            if n.is_zero() {
                continue;
            }
            for k in (1..=dmax / d0).map(|k| k as i64) {
                let kk = BigInt::from(k);
                let s = FracSeries::from_keys(
                    1,
                    Ratio::from_integer(gmax as i64 + 1),
                    (0..=gmax).map(|j| {
                        let num = kk.pow(2 * j as u32 + 1);
                        let den = BigInt::from(4).pow(j as u32) * factorial(2 * j as u64 + 1);
                        let v = BigRational::new(num, den);
                        (j as i64, if j % 2 == 1 { -v } else { v })
                    }),
                );
                let m = 2 * gp as i64 - 2;
                let p = if m < 0 { s.invert().unwrap().pow((-m) as u32) } else { s.pow(m as u32) };
                for g in gp..=gmax {
                    let c = p.coeff(Ratio::from_integer((g - gp) as i64)).unwrap();
                    let d = d0 * k as usize;
                    let v = out.get(g, d) + &n * c / BigRational::from_integer(kk.clone());
                    out.set(g, d, v);
                }
            }
        }
    }
    out
}

fn table(gmax: usize, dmax: usize) -> impl Strategy<Value = GenusDegreeTable> {
    prop::collection::vec(-1000i64..1000, (gmax + 1) * dmax).prop_map(move |v| {
        let mut t = GenusDegreeTable::zeros(gmax, dmax);
        for g in 0..=gmax {
            for d in 1..=dmax {
                t.set(g, d, int(v[g * dmax + d - 1]));
            }
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn transform_matches_direct_expansion(bps in table(3, 6)) {
        prop_assert_eq!(gv_transform(&bps, 3, 6), oracle(&bps, 3, 6));
    }

    #[test]
    fn transform_and_invert_round_trip(bps in table(3, 8)) {
        let gw = gv_transform(&bps, 3, 8);
        let back = gv_invert(&gw, 3, 8);
        prop_assert!(back.warnings.is_empty());
        prop_assert_eq!(back.bps, bps);
    }
}

#[test]
fn degree_one_is_identity() {
    let mut t = GenusDegreeTable::zeros(3, 1);
    for g in 0..=3 {
        t.set(g, 1, int(10 + g as i64));
    }
    let gw = gv_transform(&t, 3, 1);
    // only k = 1 contributes; lower genera still feed higher ones through the sin expansion
    assert_eq!(gw.get(0, 1), &int(10));
    assert_eq!(gw.get(1, 1), &(int(11) + BigRational::new(10.into(), 12.into())));
}

#[test]
fn kkv_structure() {
    let t = kkv_table(8, 12).unwrap();
    let yz = yau_zaslow(12);
    assert_eq!(t.values[0], yz);
    for h in 0..=12 {
        assert_eq!(t.values[1][h], genus1(h).unwrap());
    }
    for g in 0..=8 {
        let sign = if g % 2 == 0 { 1 } else { -1 };
        assert_eq!(t.values[g][g], BigInt::from(sign * (g as i64 + 1)), "g = {g}");
        for h in 0..g {
            assert!(t.values[g][h].is_zero(), "r_{{{g},{h}}} should vanish");
        }
    }
    assert!(t.values[0][0].is_one());
}
