use crate::error::{Error, Result};
use crate::fan::{point_config, primitive_relations, Fan, PointConfig};
use crate::groebner::canonical_gamma;
use crate::linalg::{IntMatrix, IntVector};

/// Box operators `□_l` for the listed relations plus the Euler operators
/// with exponent `β = (-1, 0, ..., 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkzSystem {
    pub config: PointConfig,
    pub beta: IntVector,
    pub box_generators: Vec<IntVector>,
    /// Row `j` holds `<e_j, μ̄_i>` over the points.
    pub euler_matrix: IntMatrix,
}

impl GkzSystem {
    pub fn new(config: PointConfig, box_generators: Vec<IntVector>) -> Result<Self> {
        for l in &box_generators {
            if !config.is_relation(l) {
                return Err(Error::NotARelation(l.clone()));
            }
        }
        let beta = canonical_gamma(config.n + 1)
            .to_int()
            .expect("canonical exponent is integral");
        let euler_matrix = config.matrix();
        Ok(GkzSystem {
            config,
            beta,
            box_generators,
            euler_matrix,
        })
    }

    /// System whose box generators are the primitive relations of the fan.
    pub fn for_fan(fan: &Fan) -> Result<Self> {
        let relations = primitive_relations(fan)?
            .into_iter()
            .map(|r| r.relation)
            .collect();
        GkzSystem::new(point_config(fan), relations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::fixtures::*;

    #[test]
    fn hirzebruch_system() {
        let s = GkzSystem::for_fan(&hirzebruch_f1()).unwrap();
        assert_eq!(s.beta, IntVector::from_i64s(&[-1, 0, 0]));
        assert_eq!(s.box_generators.len(), 2);
        assert_eq!(s.euler_matrix.rows(), 3);
        assert_eq!(s.euler_matrix.cols(), 5);
    }

    #[test]
    fn rejects_non_relations() {
        let config = point_config(&projective_line());
        let r = GkzSystem::new(config, vec![IntVector::from_i64s(&[1, 0, 0])]);
        assert!(matches!(r, Err(Error::NotARelation(_))));
    }
}
