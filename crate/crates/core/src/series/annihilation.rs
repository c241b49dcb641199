use num_rational::BigRational;

use super::formal::{box_apply, FormalSeries, Region};
use super::system::GkzSystem;
use crate::error::{Error, Result};
use crate::linalg::IntVector;

/// Residual of one box operator on a truncated series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorResidual {
    pub operator: IntVector,
    /// Result terms whose two preimages both lie in the truncation region.
    pub interior_terms: usize,
    /// Nonzero result terms with a preimage outside the region.
    pub boundary_terms: usize,
    /// Interior keys with a nonzero coefficient; empty on success.
    pub interior_failures: Vec<(IntVector, BigRational)>,
}

impl OperatorResidual {
    pub fn passes(&self) -> bool {
        self.interior_failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilationReport {
    pub operators: Vec<OperatorResidual>,
}

impl AnnihilationReport {
    pub fn passes(&self) -> bool {
        self.operators.iter().all(|o| o.passes())
    }
}

/// Applies each `□_l` exactly and checks that every interior coefficient
/// of the result vanishes.
///
/// A result key `w` collects the `∂^{l⁺}` image of the term at `w` and the
/// `∂^{l⁻}` image of the term at `w - l`; it is interior when both of
/// those lie in the region, so both contributions were enumerated.
pub fn verify_annihilation(
    system: &GkzSystem,
    series: &FormalSeries,
    operators: &[IntVector],
) -> Result<AnnihilationReport> {
    let region = Region::new(&series.truncation);
    let mut out = Vec::with_capacity(operators.len());
    for l in operators {
        if l.is_zero() {
            return Err(Error::ZeroBinomial);
        }
        if !system.config.is_relation(l) {
            return Err(Error::NotARelation(l.clone()));
        }
        let image = box_apply(l, series);
        let mut interior_terms = 0;
        let mut boundary_terms = 0;
        let mut interior_failures = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        let keys = series
            .terms
            .keys()
            .flat_map(|v| [v.clone(), v.add(l)])
            .collect::<Vec<_>>();
        for w in keys {
            if !seen.insert(w.clone()) {
                continue;
            }
            let interior = region.contains(&w) && region.contains(&w.sub(l));
            let value = image.terms.get(&w);
            if interior {
                interior_terms += 1;
                if let Some(c) = value {
                    interior_failures.push((w, c.clone()));
                }
            } else if value.is_some() {
                boundary_terms += 1;
            }
        }
        out.push(OperatorResidual {
            operator: l.clone(),
            interior_terms,
            boundary_terms,
            interior_failures,
        });
    }
    Ok(AnnihilationReport { operators: out })
}
