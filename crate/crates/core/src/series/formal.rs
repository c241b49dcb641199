use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::system::GkzSystem;
use crate::linalg::{IntVector, LatticeCoordinates, RatVector};

/// Which normalization the stored coefficients use.
///
/// In `A` coordinates the coefficient of `l` multiplies `a^{γ+l}`; in `X`
/// coordinates it multiplies `x^m` with `x_k = (-1)^{l⁽ᵏ⁾₀} a^{l⁽ᵏ⁾}`, so the
/// two differ by the sign `(-1)^{l_0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coordinates {
    A,
    X,
}

/// Generators `l⁽¹⁾..l⁽ʳ⁾` and a bound on `sum m_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationSpec {
    pub basis: Vec<IntVector>,
    pub max_total_degree: u32,
}

/// Region of relation vectors a truncated series enumerates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Truncation {
    /// `l_i >= 0` for `i >= 1` and `sum_{i>=1} l_i <= N`.
    TotalDegree(u32),
    /// `l = sum m_k l⁽ᵏ⁾` with `m >= 0` and `sum m_k <= N`.
    Basis(TruncationSpec),
}

/// Membership oracle for a truncation region.
pub struct Region {
    truncation: Truncation,
    coords: Option<LatticeCoordinates>,
}

impl Region {
    pub fn new(truncation: &Truncation) -> Self {
        let coords = match truncation {
            Truncation::TotalDegree(_) => None,
            Truncation::Basis(spec) => Some(
                LatticeCoordinates::new(&spec.basis).expect("truncation basis is independent"),
            ),
        };
        Region {
            truncation: truncation.clone(),
            coords,
        }
    }

    /// Basis coordinates `m` of `l`, when the region is basis-defined and
    /// `l` lies in the lattice the basis spans.
    pub fn basis_coordinates(&self, l: &IntVector) -> Option<IntVector> {
        self.coords.as_ref()?.integer_coordinates(l)
    }

    pub fn contains(&self, l: &IntVector) -> bool {
        match &self.truncation {
            Truncation::TotalDegree(n) => {
                let tail = &l.entries()[1..];
                tail.iter().all(|x| !x.is_negative())
                    && tail.iter().sum::<BigInt>() <= BigInt::from(*n)
            }
            Truncation::Basis(spec) => match self.basis_coordinates(l) {
                Some(m) => {
                    m.iter().all(|x| !x.is_negative())
                        && m.sum() <= BigInt::from(spec.max_total_degree)
                }
                None => false,
            },
        }
    }
}

/// Truncated series `sum_l c(l) a^{γ+l}` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries {
    pub gamma: RatVector,
    pub terms: BTreeMap<IntVector, BigRational>,
    pub truncation: Truncation,
    pub coordinates: Coordinates,
}

fn sign_of_l0(l: &IntVector) -> BigRational {
    if l[0].is_odd() {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

impl FormalSeries {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `a^{γ+l}`.
    pub fn a_coefficient(&self, l: &IntVector) -> BigRational {
        let Some(c) = self.terms.get(l) else {
            return BigRational::zero();
        };
        match self.coordinates {
            Coordinates::A => c.clone(),
            Coordinates::X => c * sign_of_l0(l),
        }
    }

    /// Coefficient in `x` coordinates.
    pub fn x_coefficient(&self, l: &IntVector) -> BigRational {
        let Some(c) = self.terms.get(l) else {
            return BigRational::zero();
        };
        match self.coordinates {
            Coordinates::X => c.clone(),
            Coordinates::A => c * sign_of_l0(l),
        }
    }

    /// Same series with coefficients stored in the requested coordinates.
    pub fn in_coordinates(&self, coordinates: Coordinates) -> FormalSeries {
        let terms = self
            .terms
            .keys()
            .map(|l| {
                let c = match coordinates {
                    Coordinates::A => self.a_coefficient(l),
                    Coordinates::X => self.x_coefficient(l),
                };
                (l.clone(), c)
            })
            .collect();
        FormalSeries {
            gamma: self.gamma.clone(),
            terms,
            truncation: self.truncation.clone(),
            coordinates,
        }
    }

    /// `sum c_a(l) a^l`, i.e. `a^{-γ}` times the series; with the canonical
    /// exponent this is `a_0 Π(a)`, whose constant term is 1.
    pub fn evaluate(&self, a: &[Complex64]) -> Complex64 {
        self.terms
            .keys()
            .map(|l| {
                let c = self.a_coefficient(l).to_f64().unwrap_or(f64::NAN);
                let mut m = Complex64::new(c, 0.0);
                for (x, e) in a.iter().zip(l.iter()) {
                    let e = e.to_i32().expect("exponent fits in i32");
                    if e != 0 {
                        m *= x.powi(e);
                    }
                }
                m
            })
            .sum()
    }

    /// `sum c_x(l) x^m` for a basis-truncated series.
    pub fn evaluate_x(&self, x: &[Complex64]) -> Option<Complex64> {
        let region = Region::new(&self.truncation);
        let mut total = Complex64::new(0.0, 0.0);
        for l in self.terms.keys() {
            let m = region.basis_coordinates(l)?;
            let c = self.x_coefficient(l).to_f64().unwrap_or(f64::NAN);
            let mut term = Complex64::new(c, 0.0);
            for (xk, mk) in x.iter().zip(m.iter()) {
                term *= xk.powi(mk.to_i32()?);
            }
            total += term;
        }
        Some(total)
    }
}

/// `x (x - 1) ... (x - k + 1)`.
pub fn falling_factorial(x: &BigRational, k: &BigInt) -> BigRational {
    let k = k.to_u64().expect("falling factorial order fits in u64");
    let mut value = BigRational::one();
    for j in 0..k {
        value *= x - BigRational::from_integer(BigInt::from(j));
        if value.is_zero() {
            break;
        }
    }
    value
}

/// Exact `□_l` applied term by term.
///
/// The result has exponent `γ - l⁺`; the `∂^{l⁺}` image of the term at `v`
/// keeps key `v`, the `∂^{l⁻}` image lands at key `v + l`. Coefficients are
/// in `A` coordinates.
pub fn box_apply(l: &IntVector, series: &FormalSeries) -> FormalSeries {
    let plus = l.positive_part();
    let minus = l.negative_part();
    let gamma_out = RatVector(
        series
            .gamma
            .iter()
            .zip(plus.iter())
            .map(|(g, p)| g - BigRational::from_integer(p.clone()))
            .collect(),
    );
    let mut out: BTreeMap<IntVector, BigRational> = BTreeMap::new();
    for v in series.terms.keys() {
        let c = series.a_coefficient(v);
        let exponent: Vec<BigRational> = series
            .gamma
            .iter()
            .zip(v.iter())
            .map(|(g, x)| g + BigRational::from_integer(x.clone()))
            .collect();
        let product = |powers: &IntVector| -> BigRational {
            let mut value = BigRational::one();
            for (e, k) in exponent.iter().zip(powers.iter()) {
                if !k.is_zero() {
                    value *= falling_factorial(e, k);
                }
            }
            value
        };
        let fp = product(&plus);
        if !fp.is_zero() {
            *out.entry(v.clone()).or_insert_with(BigRational::zero) += &c * fp;
        }
        let fm = product(&minus);
        if !fm.is_zero() {
            *out.entry(v.add(l)).or_insert_with(BigRational::zero) -= &c * fm;
        }
    }
    out.retain(|_, c| !c.is_zero());
    FormalSeries {
        gamma: gamma_out,
        terms: out,
        truncation: series.truncation.clone(),
        coordinates: Coordinates::A,
    }
}

/// Residual of one term under every Euler operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerResidual {
    pub key: IntVector,
    pub values: Vec<BigRational>,
}

impl EulerResidual {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

/// `(sum_i M_ji θ_i - β_j)` applied to each term `c a^{γ+v}`.
pub fn euler_residual(system: &GkzSystem, series: &FormalSeries) -> Vec<EulerResidual> {
    let m = &system.euler_matrix;
    series
        .terms
        .keys()
        .map(|v| {
            let c = series.a_coefficient(v);
            let values = (0..m.rows())
                .map(|j| {
                    let mut s = -BigRational::from_integer(system.beta[j].clone());
                    for i in 0..m.cols() {
                        let e = &series.gamma[i] + BigRational::from_integer(v[i].clone());
                        s += BigRational::from_integer(m.get(j, i).clone()) * e;
                    }
                    &c * s
                })
                .collect();
            EulerResidual {
                key: v.clone(),
                values,
            }
        })
        .collect()
}
