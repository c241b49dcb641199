use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fan::{kahler_cone, point_config, property_star, Fan};
use crate::linalg::{rank_of, IntVector, RatVector};

/// `I_l(γ) = prod_μ γ_μ (γ_μ - 1) ... (γ_μ - l⁺_μ + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicialPolynomial {
    pub exponent: IntVector,
}

impl IndicialPolynomial {
    /// Indicial polynomial of the relation `l` (uses `l⁺`).
    pub fn of_relation(l: &IntVector) -> Self {
        IndicialPolynomial {
            exponent: l.positive_part(),
        }
    }

    pub fn evaluate(&self, gamma: &RatVector) -> BigRational {
        assert_eq!(self.exponent.len(), gamma.len(), "length mismatch");
        let mut value = BigRational::one();
        for (e, g) in self.exponent.iter().zip(gamma.iter()) {
            let k = e.to_u64().expect("exponent fits in u64");
            for j in 0..k {
                value *= g - BigRational::from_integer(BigInt::from(j));
                if value.is_zero() {
                    return value;
                }
            }
        }
        value
    }
}

/// Exact value of the indicial polynomial of `l` at `γ`.
pub fn indicial_value(l: &IntVector, gamma: &RatVector) -> BigRational {
    IndicialPolynomial::of_relation(l).evaluate(gamma)
}

/// `(-1, 0, ..., 0)` of length `len`.
pub fn canonical_gamma(len: usize) -> RatVector {
    let mut g = vec![BigRational::zero(); len];
    g[0] = -BigRational::one();
    RatVector(g)
}

/// Pieces of the uniqueness argument for the exponent `γ = (-1, 0, ..., 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub gamma: RatVector,
    /// Every maximal cone is spanned by independent rays.
    pub cones_independent: bool,
    /// `sum γ_i μ̄_i = β = (-1, 0, ..., 0)`.
    pub euler_constraint: bool,
    /// `I_{l(P)}(γ) = 0`, one entry per primitive relation.
    pub vanishing: Vec<bool>,
    /// `l(P)_i > 0` for some `i > 0`, one entry per primitive relation.
    pub positive_entry: Vec<bool>,
    pub relations: Vec<IntVector>,
}

impl IndexReport {
    pub fn passes(&self) -> bool {
        self.cones_independent
            && self.euler_constraint
            && self.vanishing.iter().all(|&v| v)
            && self.positive_entry.iter().all(|&v| v)
    }
}

/// Certificate that `(-1, 0, ..., 0)` is the only admissible exponent.
pub fn unique_index_certificate(fan: &Fan) -> Result<IndexReport> {
    let star = property_star(fan)?;
    if !star.holds() {
        return Err(Error::Precondition("property (*) fails".into()));
    }
    if !kahler_cone(fan)?.is_large {
        return Err(Error::Precondition("Kähler cone is not full-dimensional".into()));
    }
    let config = point_config(fan);
    let gamma = canonical_gamma(config.len());

    let cones_independent = fan
        .max_cones()
        .iter()
        .all(|c| rank_of(&fan.cone_rays(c)) == c.len());

    let image = config.matrix().mul_rat_vec(&gamma);
    let beta = canonical_gamma(fan.dim() + 1);
    let euler_constraint = image == beta;

    let relations: Vec<IntVector> = star.relations.iter().map(|r| r.relation.clone()).collect();
    let vanishing = relations
        .iter()
        .map(|l| indicial_value(l, &gamma).is_zero())
        .collect();
    let positive_entry = relations
        .iter()
        .map(|l| l.iter().skip(1).any(|x| x.is_positive()))
        .collect();

    Ok(IndexReport {
        gamma,
        cones_independent,
        euler_constraint,
        vanishing,
        positive_entry,
        relations,
    })
}

/// Rank of the cohomology of the smooth complete toric variety: the
/// number of maximal cones.
pub fn chow_ring_dimension(fan: &Fan) -> usize {
    fan.max_cones().len()
}
