use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fan::PointConfig;
use crate::linalg::IntVector;

/// Denominators below this multiple of `|a_0|` are rejected.
pub const NEAR_ZERO_TOLERANCE: f64 = 1e-12;

/// Finite sum `sum c_μ X^μ` over `μ in N`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPolynomial {
    pub monomials: BTreeMap<IntVector, Complex64>,
}

impl LaurentPolynomial {
    /// `f_𝒜(X, a) = sum_μ a_μ X^μ` over the configuration.
    pub fn from_config(config: &PointConfig, a: &[Complex64]) -> Result<Self> {
        if a.len() != config.len() {
            return Err(Error::DimensionMismatch {
                expected: config.len(),
                found: a.len(),
            });
        }
        let mut monomials = BTreeMap::new();
        for (mu, c) in config.lattice_points().into_iter().zip(a) {
            *monomials.entry(mu).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        Ok(LaurentPolynomial { monomials })
    }

    pub fn evaluate(&self, x: &[Complex64]) -> Complex64 {
        self.monomials
            .iter()
            .map(|(mu, c)| {
                let mut m = *c;
                for (xi, e) in x.iter().zip(mu.iter()) {
                    m *= xi.powi(e.to_i32().expect("exponent fits in i32"));
                }
                m
            })
            .sum()
    }
}

/// Periodic trapezoid rule on the unit torus: the mean of `a_0 / f_𝒜`
/// over the `K^n` grid of roots of unity.
///
/// Blocks indexed by the first grid coordinate are summed in parallel,
/// each in lexicographic order, and then combined in block order, so the
/// result does not depend on the thread count.
pub fn numeric_period(config: &PointConfig, a: &[Complex64], grid: usize) -> Result<Complex64> {
    if a.len() != config.len() {
        return Err(Error::DimensionMismatch {
            expected: config.len(),
            found: a.len(),
        });
    }
    if grid == 0 {
        return Err(Error::Precondition("grid size must be positive".into()));
    }
    let a0 = a[0].norm();
    let rest: f64 = a[1..].iter().map(|x| x.norm()).sum();
    if a0 <= rest {
        return Err(Error::ConvergenceRegime { a0, rest });
    }
    let n = config.n;
    let exponents: Vec<Vec<i64>> = config.lattice_points()[1..]
        .iter()
        .map(|mu| mu.iter().map(|x| x.to_i64().expect("ray entry fits in i64")).collect())
        .collect();
    let k = i64::try_from(grid).expect("grid fits in i64");
    let roots: Vec<Complex64> = (0..grid)
        .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / grid as f64))
        .collect();

    let evaluate = |point: &[usize]| -> Result<Complex64> {
        let mut f = a[0];
        for (mu, coeff) in exponents.iter().zip(&a[1..]) {
            let phase: i64 = mu.iter().zip(point).map(|(&e, &p)| e * p as i64).sum();
            f += coeff * roots[phase.mod_floor(&k) as usize];
        }
        if f.norm() < NEAR_ZERO_TOLERANCE * a0 {
            return Err(Error::NearZeroDenominator {
                value: f.norm(),
                point: point.to_vec(),
            });
        }
        Ok(a[0] / f)
    };

    if n == 0 {
        return evaluate(&[]);
    }
    let total_points = (grid as f64).powi(i32::try_from(n).expect("dimension fits in i32"));
    let block_sums: Vec<Result<Complex64>> = (0..grid)
        .into_par_iter()
        .map(|first| {
            let mut point = vec![0usize; n];
            point[0] = first;
            let mut sum = Complex64::new(0.0, 0.0);
            loop {
                sum += evaluate(&point)?;
                // advance the trailing coordinates like an odometer
                let mut i = n;
                loop {
                    i -= 1;
                    if i == 0 {
                        return Ok(sum);
                    }
                    point[i] += 1;
                    if point[i] < grid {
                        break;
                    }
                    point[i] = 0;
                }
            }
        })
        .collect();
    let mut total = Complex64::new(0.0, 0.0);
    for s in block_sums {
        total += s?;
    }
    Ok(total / total_points)
}

/// `x_k = (-1)^{l⁽ᵏ⁾₀} prod_μ a_μ^{l⁽ᵏ⁾_μ}`.
pub fn coordinates_x(basis: &[IntVector], a: &[Complex64]) -> Result<Vec<Complex64>> {
    if let Some(i) = a.iter().position(|x| x.norm() == 0.0) {
        return Err(Error::ZeroCoordinate(i));
    }
    basis
        .iter()
        .map(|l| {
            if l.len() != a.len() {
                return Err(Error::DimensionMismatch {
                    expected: l.len(),
                    found: a.len(),
                });
            }
            let mut x = Complex64::new(1.0, 0.0);
            for (ai, e) in a.iter().zip(l.iter()) {
                let e = e.to_i32().ok_or_else(|| Error::ExponentOverflow(l.clone()))?;
                if e != 0 {
                    x *= ai.powi(e);
                }
            }
            if l[0].is_odd() {
                x = -x;
            }
            Ok(x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{fixtures::*, point_config};

    fn real(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }

    #[test]
    fn projective_line_period() {
        let config = point_config(&projective_line());
        let v = numeric_period(&config, &real(&[1.0, 0.1, 0.1]), 256).unwrap();
        assert!((v.re - 1.0 / 0.96f64.sqrt()).abs() < 1e-12);
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn constant_integrand() {
        let config = point_config(&hirzebruch_f1());
        let v = numeric_period(&config, &real(&[1.0, 0.0, 0.0, 0.0, 0.0]), 4).unwrap();
        assert_eq!(v, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn regime_guard() {
        let config = point_config(&projective_line());
        let r = numeric_period(&config, &real(&[1.0, 0.5, 0.5]), 16);
        assert!(matches!(r, Err(Error::ConvergenceRegime { .. })));
    }

    #[test]
    fn x_coordinates() {
        let x = coordinates_x(&[IntVector::from_i64s(&[-2, 1, 1])], &real(&[1.0, 0.1, 0.1])).unwrap();
        assert!((x[0].re - 0.01).abs() < 1e-15);
        let t = 0.3;
        let x = coordinates_x(
            &[IntVector::from_i64s(&[-5, 1, 1, 1, 1, 1])],
            &real(&[1.0, t, t, t, t, t]),
        )
        .unwrap();
        assert!((x[0].re + t.powi(5)).abs() < 1e-15);
        let x = coordinates_x(
            &[IntVector::from_i64s(&[-1, 1, -1, 1, 0]), IntVector::from_i64s(&[-2, 0, 1, 0, 1])],
            &real(&[1.0; 5]),
        )
        .unwrap();
        assert_eq!(x, real(&[-1.0, 1.0]));
        assert!(matches!(
            coordinates_x(&[IntVector::from_i64s(&[-2, 1, 1])], &real(&[1.0, 0.0, 0.1])),
            Err(Error::ZeroCoordinate(1))
        ));
    }

    #[test]
    fn laurent_evaluation() {
        let config = point_config(&projective_line());
        let f = LaurentPolynomial::from_config(&config, &real(&[1.0, 2.0, 3.0])).unwrap();
        let v = f.evaluate(&real(&[2.0]));
        assert!((v.re - (1.0 + 4.0 + 1.5)).abs() < 1e-15);
    }
}
