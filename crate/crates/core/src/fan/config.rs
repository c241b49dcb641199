use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Fan;
use crate::linalg::{integer_kernel_basis, IntMatrix, IntVector, LatticeCoordinates};

/// The configuration `{1x0} ∪ {1xμ}` in `Z x N` with a Z-basis of its
/// relation lattice `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    pub n: usize,
    pub points: Vec<IntVector>,
    pub relation_basis: Vec<IntVector>,
}

impl PointConfig {
    /// Builds the configuration from raw points (each of length `n + 1`
    /// with leading coordinate 1); the relation basis is the canonical
    /// kernel basis.
    pub fn from_points(n: usize, points: Vec<IntVector>) -> Self {
        let matrix = IntMatrix::from_columns(&points, n + 1);
        let relation_basis = integer_kernel_basis(&matrix);
        PointConfig {
            n,
            points,
            relation_basis,
        }
    }

    /// Number of points, `p + 1`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `(n+1) x (p+1)` matrix with the points as columns.
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(&self.points, self.n + 1)
    }

    /// True iff `sum l_i point_i = 0`.
    pub fn is_relation(&self, l: &IntVector) -> bool {
        l.len() == self.points.len() && self.matrix().mul_vec(l).is_zero()
    }

    /// Points with the leading 1 dropped, i.e. `0` followed by the rays.
    pub fn lattice_points(&self) -> Vec<IntVector> {
        self.points
            .iter()
            .map(|p| IntVector(p.0[1..].to_vec()))
            .collect()
    }

    /// Coordinate map for `L` in the fixed relation basis.
    pub fn relation_coordinates(&self) -> LatticeCoordinates {
        LatticeCoordinates::new(&self.relation_basis).expect("kernel basis is independent")
    }

    /// `<ω, l>` for a weight on the points.
    pub fn pairing(weight: &[BigInt], l: &IntVector) -> BigInt {
        weight.iter().zip(l.iter()).map(|(a, b)| a * b).sum()
    }
}

/// `𝒜` for a fan: index 0 is `1x0`, index `i + 1` is `1 x ray_i`.
pub fn point_config(fan: &Fan) -> PointConfig {
    let n = fan.dim();
    let mut points = Vec::with_capacity(fan.ray_count() + 1);
    let mut origin = vec![BigInt::zero(); n + 1];
    origin[0] = BigInt::one();
    points.push(IntVector(origin));
    for r in fan.rays() {
        let mut v = Vec::with_capacity(n + 1);
        v.push(BigInt::one());
        v.extend(r.iter().cloned());
        points.push(IntVector(v));
    }
    PointConfig::from_points(n, points)
}
