use std::fmt;

use super::binomial::{binomial_from_relation, Binomial, Monomial};
use super::buchberger::{buchberger_verify, VerifyReport};
use super::order::TermOrder;
use crate::error::{Error, Result};
use crate::fan::{
    in_secondary_cone, kahler_cone, maximal_triangulation, point_config, property_star, Fan,
    SimplicialComplex, Triangulation,
};
use crate::linalg::RatVector;

/// Monomial ideal by its minimal generators, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(generators: Vec<Monomial>) -> Self {
        let mut gens = generators;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        MonomialIdeal { generators: minimal }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Squarefree monomials of the minimal non-faces of `T` on `p + 1` vertices.
pub fn stanley_reisner(t: &Triangulation, p: usize) -> MonomialIdeal {
    let complex = SimplicialComplex::from_facets(&t.simplices, p + 1);
    MonomialIdeal::new(
        complex
            .minimal_non_faces()
            .iter()
            .map(|f| Monomial::squarefree(p + 1, f))
            .collect(),
    )
}

/// Binomials of the primitive relations; requires property (*) and a
/// full-dimensional Kähler cone.
pub fn candidate_groebner_basis(fan: &Fan) -> Result<Vec<Binomial>> {
    let star = property_star(fan)?;
    if !star.holds() {
        return Err(Error::Precondition("property (*) fails".into()));
    }
    if !kahler_cone(fan)?.is_large {
        return Err(Error::Precondition("Kähler cone is not full-dimensional".into()));
    }
    let config = point_config(fan);
    star.relations
        .iter()
        .map(|r| binomial_from_relation(&config, &r.relation))
        .collect()
}

/// Comparison of the leading-term ideal with the Stanley–Reisner ideal of `T⁰`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtComparison {
    pub verify: VerifyReport,
    pub leading_ideal: MonomialIdeal,
    pub stanley_reisner: MonomialIdeal,
}

impl LtComparison {
    pub fn equal(&self) -> bool {
        self.leading_ideal == self.stanley_reisner
    }
}

/// Verifies the candidate basis under `ω` and compares ideals.
pub fn compare_lt_with_sr(fan: &Fan, omega: &RatVector) -> Result<LtComparison> {
    if !in_secondary_cone(fan, omega, true)? {
        return Err(Error::NotInterior);
    }
    let basis = candidate_groebner_basis(fan)?;
    let order = TermOrder::new(omega.clone());
    let verify = buchberger_verify(&basis, &order)?;
    if !verify.verified {
        return Err(Error::VerificationFailed);
    }
    let leading_ideal = MonomialIdeal::new(verify.leading_terms());
    let sr = stanley_reisner(&maximal_triangulation(fan), fan.ray_count());
    Ok(LtComparison {
        verify,
        leading_ideal,
        stanley_reisner: sr,
    })
}

/// True iff `LT_ω` of the toric ideal equals `SR_{T⁰}`.
pub fn check_lt_equals_sr(fan: &Fan, omega: &RatVector) -> Result<bool> {
    Ok(compare_lt_with_sr(fan, omega)?.equal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::fixtures::*;
    use crate::groebner::buchberger::{buchberger_complete, default_degree_cap};

    #[test]
    fn minimalization() {
        let i = MonomialIdeal::new(vec![
            Monomial(vec![1, 1, 0]),
            Monomial(vec![1, 0, 0]),
            Monomial(vec![0, 2, 0]),
            Monomial(vec![1, 0, 0]),
        ]);
        assert_eq!(i.to_string(), "<y1^2, y0>");
    }

    #[test]
    fn stanley_reisner_of_fixtures() {
        let cases = [
            (projective_line(), "<y1*y2>"),
            (hirzebruch_f1(), "<y2*y4, y1*y3>"),
            (projective_four_space(), "<y1*y2*y3*y4*y5>"),
        ];
        for (fan, expected) in cases {
            let sr = stanley_reisner(&maximal_triangulation(&fan), fan.ray_count());
            assert_eq!(sr.to_string(), expected);
        }
    }

    #[test]
    fn candidate_bases() {
        let b: Vec<String> = candidate_groebner_basis(&hirzebruch_f1())
            .unwrap()
            .iter()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(b, vec!["y1*y3 - y0*y2", "y2*y4 - y0^2"]);
        assert!(matches!(
            candidate_groebner_basis(&non_nef_surface()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lt_equals_sr_on_fixtures() {
        let cases = [
            (projective_line(), vec![0, 1, 1]),
            (hirzebruch_f1(), vec![0, 1, 1, 1, 1]),
            (projective_four_space(), vec![0, 1, 1, 1, 1, 1]),
        ];
        for (fan, w) in cases {
            assert!(check_lt_equals_sr(&fan, &RatVector::from_i64s(&w)).unwrap());
        }
    }

    #[test]
    fn other_groebner_cone_differs() {
        let fan = hirzebruch_f1();
        let omega = RatVector::from_i64s(&[1, 0, 0, 0, 0]);
        let order = TermOrder::new(omega);
        let gens = candidate_groebner_basis(&fan).unwrap();
        let gb = buchberger_complete(&gens, &order, default_degree_cap(&gens)).unwrap();
        let lt = MonomialIdeal::new(gb.iter().map(|b| b.plus.clone()).collect());
        let sr = stanley_reisner(&maximal_triangulation(&fan), 4);
        assert_ne!(lt, sr);
        assert!(buchberger_verify(&gb, &order).unwrap().verified);
    }
}
