//! Rank-2 polarized lattices: discriminants, cosets and multiplicity counts.
//!
//! A lattice is given by its Gram matrix `[[l, b], [b, c]]` in a basis `(v, e)`
//! whose first vector is the polarization, `<v, v> = l`. The multiplicity
//! `mu(h, d)` counts the vectors `beta = x v + y e` with `<beta, beta> = 2h - 2`
//! and `<beta, v> = d`.

use num_integer::{Integer, Roots};
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::rational::Exponent;

/// `Delta_l(h, d) = d^2 - 2 l h + 2 l`, minus the determinant of `[[l, d], [d, 2h - 2]]`.
pub fn disc(l: i64, h: i64, d: i64) -> i64 {
    d * d - 2 * l * h + 2 * l
}

/// Representative of `d` in `(Z / l Z) / +-`, namely `min(d mod l, l - d mod l)`.
pub fn coset(l: i64, d: i64) -> i64 {
    let r = d.rem_euclid(l);
    r.min(l - r)
}

/// The shift `(h, d) -> (h + d + l/2, d + l)`, which preserves discriminant and coset.
pub fn periodic_shift(l: i64, h: i64, d: i64) -> (i64, i64) {
    (h + d + l / 2, d + l)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticePair {
    pub l: i64,
    pub h: i64,
    pub d: i64,
}

impl LatticePair {
    pub fn new(l: i64, h: i64, d: i64) -> Result<Self> {
        if l <= 0 || l % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "polarization degree must be even and positive, got {l}"
            )));
        }
        Ok(LatticePair { l, h, d })
    }

    pub fn disc(&self) -> i64 {
        disc(self.l, self.h, self.d)
    }

    pub fn coset(&self) -> i64 {
        coset(self.l, self.d)
    }

    /// The Gram matrix `[[l, d], [d, 2h - 2]]` of the lattice spanned by `v` and `beta`.
    pub fn gram(&self) -> Gram {
        Gram::new(self.l, self.d, 2 * self.h - 2)
    }

    /// Exponent `Delta / (2l)` at which this pair is read off a vector-valued form.
    pub fn exponent(&self) -> Exponent {
        Ratio::new(self.disc(), 2 * self.l)
    }
}

/// Symmetric Gram matrix `[[a, b], [b, c]]`; the first basis vector is the polarization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gram {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Gram {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Gram { a, b, c }
    }

    /// `-det = b^2 - a c`.
    pub fn disc(&self) -> i64 {
        self.b * self.b - self.a * self.c
    }

    fn pair(&self, u: (i128, i128), w: (i128, i128)) -> i128 {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        a * u.0 * w.0 + b * (u.0 * w.1 + u.1 * w.0) + c * u.1 * w.1
    }
}

/// All `(x, y)` with `<x v + y e, v> = d` and `<x v + y e, x v + y e> = 2h - 2`.
///
/// The linear condition cuts out `beta_0 + t w` with `w` orthogonal to `v`; the
/// quadratic condition is then a quadratic in `t` whose integer roots are listed.
pub fn solutions(l: i64, h: i64, d: i64, gram: &Gram) -> Result<Vec<(i64, i64)>> {
    if gram.a != l {
        return Err(Error::InvalidArgument(format!(
            "Gram matrix has <v,v> = {}, expected {l}",
            gram.a
        )));
    }
    if l <= 0 {
        return Err(Error::InvalidArgument("polarization must be positive".into()));
    }
    let (a, b) = (gram.a as i128, gram.b as i128);
    let eg = a.extended_gcd(&b);
    let g = eg.gcd;
    let d = d as i128;
    if d % g != 0 {
        return Ok(Vec::new());
    }
    let base = (eg.x * (d / g), eg.y * (d / g));
    let dir = (b / g, -a / g);
    let alpha = gram.pair(dir, dir);
    let beta = 2 * gram.pair(base, dir);
    let gamma = gram.pair(base, base) - (2 * h as i128 - 2);

    let mut ts: Vec<i128> = Vec::new();
    if alpha == 0 {
        if beta == 0 {
            if gamma == 0 {
                return Err(Error::DegenerateLattice);
            }
        } else if gamma % beta == 0 {
            ts.push(-gamma / beta);
        }
    } else {
        let delta = beta * beta - 4 * alpha * gamma;
        if delta >= 0 {
            let s = delta.sqrt();
            if s * s == delta {
                for root in [-beta + s, -beta - s] {
                    if root % (2 * alpha) == 0 {
                        ts.push(root / (2 * alpha));
                    }
                }
            }
        }
        ts.sort_unstable();
        ts.dedup();
    }
    Ok(ts
        .into_iter()
        .map(|t| ((base.0 + t * dir.0) as i64, (base.1 + t * dir.1) as i64))
        .collect())
}

/// Multiplicity `mu(h, d | gram)`: the number of lattice vectors realizing `(h, d)`.
pub fn mu(l: i64, h: i64, d: i64, gram: &Gram) -> Result<u32> {
    Ok(solutions(l, h, d, gram)?.len() as u32)
}

/// Number of realizing vectors of divisibility exactly `m` (the zero vector has none).
pub fn mu_refined(m: i64, l: i64, h: i64, d: i64, gram: &Gram) -> Result<u32> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!("divisibility must be >= 1, got {m}")));
    }
    Ok(solutions(l, h, d, gram)?
        .into_iter()
        .filter(|(x, y)| x.gcd(y) == m)
        .count() as u32)
}

/// Largest `<beta, beta>` allowed for a primitive class of degree `deg` against a
/// very ample polarization: `2 C(deg - 1, 2) - 2`.
pub fn castelnuovo_max_square(deg: i64) -> Result<i64> {
    if deg < 1 {
        return Err(Error::InvalidArgument(format!("degree must be >= 1, got {deg}")));
    }
    let n = deg - 1;
    Ok(n * (n - 1) - 2)
}

/// Slots `(Delta/(2l), component)` forced to vanish because a square-zero class of
/// degree 1 or 2 would violate the Castelnuovo bound. Degree 2 (double planes) has
/// no very ample polarization and gets none.
pub fn vanishing_constraints(l: i64) -> Result<Vec<(Exponent, usize)>> {
    match l {
        2 => Ok(Vec::new()),
        4 | 6 | 8 => {
            let mut out = Vec::new();
            for deg in 1..=2 {
                let pair = LatticePair::new(l, 1, deg)?;
                if 2 * pair.h - 2 > castelnuovo_max_square(deg)? {
                    out.push((pair.exponent(), pair.coset() as usize));
                }
            }
            Ok(out)
        }
        _ => Err(Error::InvalidArgument(format!(
            "vanishing constraints are tabulated for l in {{2,4,6,8}}, got {l}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::exponent;

    #[test]
    fn discriminant_values() {
        assert_eq!(disc(4, 1, 0), 0);
        assert_eq!(disc(4, 2, 4), 8);
        assert_eq!(LatticePair::new(4, 0, 1).unwrap().disc(), 9);
        assert!(LatticePair::new(3, 0, 1).is_err());
        for (h, d) in [(0, 1), (3, -2), (-4, 7)] {
            let (h2, d2) = periodic_shift(4, h, d);
            assert_eq!(disc(4, h, d), disc(4, h2, d2));
            assert_eq!(coset(4, d), coset(4, d2));
        }
    }

    #[test]
    fn coset_folds_sign() {
        assert_eq!(coset(6, 5), 1);
        assert_eq!(coset(6, -1), 1);
        assert_eq!(coset(6, 3), 3);
        assert_eq!(coset(8, 12), 4);
    }

    #[test]
    fn nodal_lattice_counts() {
        let nodal = Gram::new(4, 0, -2);
        for d in [1, 2, 3, 5, 6, 7] {
            for h in -5..5 {
                assert_eq!(mu(4, h, d, &nodal).unwrap(), 0, "d={d} h={h}");
            }
        }
        // 2h - 2 = 4 - 2 n^2 at d = 4
        for n in 1..4 {
            let two_h_minus_2 = 4 - 2 * n * n;
            assert_eq!(two_h_minus_2 % 2, 0);
            let h = two_h_minus_2 / 2 + 1;
            assert_eq!(mu(4, h, 4, &nodal).unwrap(), 2);
            assert_eq!(disc(4, h, 4), 8 * n * n);
        }
    }

    #[test]
    fn line_lattice_single_solution() {
        let g = Gram::new(6, 1, -2);
        assert_eq!(solutions(6, 0, 1, &g).unwrap(), vec![(0, 1)]);
        // the elliptic-plane-curve lattice has two realizing vectors
        assert_eq!(mu(6, 1, 3, &Gram::new(6, 3, 0)).unwrap(), 2);
    }

    #[test]
    fn refined_counts() {
        let nodal = Gram::new(4, 0, -2);
        // 2h - 2 = -8 at d = 4: beta = v + y e with content 1
        assert_eq!(mu_refined(2, 4, -3, 4, &nodal).unwrap(), 0);
        assert_eq!(mu_refined(1, 4, -3, 4, &nodal).unwrap(), mu(4, -3, 4, &nodal).unwrap());
        // beta = 2 v in [[4,0],[0,-2]]: d = 8, 2h - 2 = 16
        assert_eq!(mu_refined(2, 4, 9, 8, &nodal).unwrap(), 1);
        assert!(mu_refined(0, 4, 9, 8, &nodal).is_err());
    }

    #[test]
    fn degenerate_lattice_errors() {
        // [[4, 2], [2, 1]] has determinant 0; e - v/2 is isotropic and orthogonal to v
        let g = Gram::new(4, 2, 1);
        assert_eq!(mu(4, 1, 0, &g), Err(Error::DegenerateLattice));
        assert!(mu(4, 1, 2, &Gram::new(6, 0, 0)).is_err());
    }

    #[test]
    fn castelnuovo_values() {
        assert_eq!(castelnuovo_max_square(1).unwrap(), -2);
        assert_eq!(castelnuovo_max_square(2).unwrap(), -2);
        assert_eq!(castelnuovo_max_square(3).unwrap(), 0);
        assert_eq!(castelnuovo_max_square(4).unwrap(), 4);
        assert!(castelnuovo_max_square(0).is_err());
    }

    #[test]
    fn vanishing_slots() {
        assert_eq!(
            vanishing_constraints(4).unwrap(),
            vec![(exponent(1, 8), 1), (exponent(1, 2), 2)]
        );
        assert_eq!(
            vanishing_constraints(6).unwrap(),
            vec![(exponent(1, 12), 1), (exponent(1, 3), 2)]
        );
        assert_eq!(
            vanishing_constraints(8).unwrap(),
            vec![(exponent(1, 16), 1), (exponent(1, 4), 2)]
        );
        assert!(vanishing_constraints(2).unwrap().is_empty());
        assert!(vanishing_constraints(10).is_err());
    }
}
