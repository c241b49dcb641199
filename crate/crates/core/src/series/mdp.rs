use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::annihilation::{verify_annihilation, AnnihilationReport};
use super::formal::{euler_residual, FormalSeries};
use super::generate::local_series;
use super::system::GkzSystem;
use crate::error::{Error, Result};
use crate::fan::{kahler_cone, point_config, property_star, require_valid, Fan, KahlerCone};
use crate::groebner::{unique_index_certificate, IndexReport};
use crate::linalg::{is_unimodular_extension, rank_of, solve_rational, IntVector};

/// Checks that `τ` (generators in coordinates dual to the relation basis)
/// is regular, full-dimensional and inside the Kähler cone.
pub fn check_tau(kahler: &KahlerCone, tau: &[IntVector]) -> Result<()> {
    let rank = kahler.cone.ambient_dim();
    if let Some(g) = tau.iter().find(|g| g.len() != rank) {
        return Err(Error::TauInvalid(format!(
            "generator {g} has length {}, expected {rank}",
            g.len()
        )));
    }
    if tau.len() != rank || rank_of(tau) != rank {
        return Err(Error::TauInvalid(format!(
            "{} generators spanning rank {}, expected a full-dimensional simplicial cone of rank {rank}",
            tau.len(),
            rank_of(tau)
        )));
    }
    if !is_unimodular_extension(tau) {
        return Err(Error::TauInvalid("generators do not form a lattice basis".into()));
    }
    for g in tau {
        if let Some(r) = kahler.relation_coords.iter().find(|r| g.dot(r).is_negative()) {
            return Err(Error::TauInvalid(format!(
                "generator {g} pairs negatively with the primitive relation {r}"
            )));
        }
    }
    Ok(())
}

/// Relation vectors `l⁽ᵏ⁾` forming the basis dual to `τ`'s generators.
pub fn tau_dual_basis(fan: &Fan, tau: &[IntVector]) -> Result<Vec<IntVector>> {
    let config = point_config(fan);
    let rank = config.relation_basis.len();
    let rows: Vec<Vec<BigRational>> = tau.iter().map(|g| g.to_rat().0).collect();
    let mut out = Vec::with_capacity(rank);
    for k in 0..rank {
        let e: Vec<BigRational> = (0..rank)
            .map(|j| if j == k { BigRational::one() } else { BigRational::zero() })
            .collect();
        let c = solve_rational(&rows, &e)
            .ok_or_else(|| Error::TauInvalid("generators are dependent".into()))?;
        let mut l = IntVector::zeros(config.len());
        for (ci, b) in c.iter().zip(&config.relation_basis) {
            if !ci.is_integer() {
                return Err(Error::TauInvalid("dual basis is not integral".into()));
            }
            l = l.combine(&BigInt::one(), b, &ci.to_integer());
        }
        out.push(l);
    }
    Ok(out)
}

/// Generators of `K̄` when it is regular, the default choice of `τ`.
pub fn default_tau(kahler: &KahlerCone) -> Result<Vec<IntVector>> {
    if !kahler.is_regular {
        return Err(Error::TauInvalid(
            "the Kähler cone is not regular; choose a regular subcone".into(),
        ));
    }
    Ok(kahler.cone.generators().to_vec())
}

/// Existence half: the local series and its checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceReport {
    pub series: FormalSeries,
    pub annihilation: AnnihilationReport,
    pub euler_zero: bool,
    pub constant_term_one: bool,
}

impl ExistenceReport {
    pub fn passes(&self) -> bool {
        self.annihilation.passes() && self.euler_zero && self.constant_term_one
    }
}

/// Stages of the maximal-degeneracy certificate; later stages are absent
/// when an earlier one fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdpReport {
    pub property_star: bool,
    pub kahler_large: bool,
    pub tau: Vec<IntVector>,
    pub dual_basis: Vec<IntVector>,
    pub index: Option<IndexReport>,
    pub existence: Option<ExistenceReport>,
}

impl MdpReport {
    pub fn hypotheses(&self) -> bool {
        self.property_star && self.kahler_large
    }

    pub fn certified(&self) -> bool {
        self.hypotheses()
            && self.index.as_ref().is_some_and(|r| r.passes())
            && self.existence.as_ref().is_some_and(|r| r.passes())
    }
}

/// Runs the full certificate at truncation order `N`. `tau = None`
/// selects the Kähler cone itself, which must then be regular.
pub fn verify_max_degeneracy(fan: &Fan, tau: Option<&[IntVector]>, order: u32) -> Result<MdpReport> {
    require_valid(fan)?;
    let star = property_star(fan)?;
    let kahler = kahler_cone(fan)?;
    let mut report = MdpReport {
        property_star: star.holds(),
        kahler_large: kahler.is_large,
        tau: Vec::new(),
        dual_basis: Vec::new(),
        index: None,
        existence: None,
    };
    if !report.hypotheses() {
        return Ok(report);
    }

    let tau = match tau {
        Some(t) => t.to_vec(),
        None => default_tau(&kahler)?,
    };
    check_tau(&kahler, &tau)?;
    let dual_basis = tau_dual_basis(fan, &tau)?;
    report.tau = tau;
    report.dual_basis = dual_basis.clone();

    let index = unique_index_certificate(fan)?;
    let index_ok = index.passes();
    report.index = Some(index);
    if !index_ok {
        return Ok(report);
    }

    let system = GkzSystem::for_fan(fan)?;
    let series = local_series(fan, &dual_basis, order)?;
    let annihilation = verify_annihilation(&system, &series, &system.box_generators)?;
    let euler_zero = euler_residual(&system, &series).iter().all(|r| r.is_zero());
    let constant_term_one = series.a_coefficient(&IntVector::zeros(series.gamma.len())).is_one();
    report.existence = Some(ExistenceReport {
        series,
        annihilation,
        euler_zero,
        constant_term_one,
    });
    Ok(report)
}
