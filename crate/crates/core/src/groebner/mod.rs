//! The binomial toric ideal: term orders, Buchberger verification and
//! completion, Stanley–Reisner comparison, and indicial polynomials.

mod binomial;
mod buchberger;
mod ideal;
mod indicial;
mod order;

pub use binomial::{binomial_from_relation, Binomial, Monomial};
pub use buchberger::{
    buchberger_complete, buchberger_verify, default_degree_cap, normal_form, reduce_monomial_with,
    PairDisposition, PairRecord, VerifyReport, REDUCTION_STEP_LIMIT,
};
pub use ideal::{
    candidate_groebner_basis, check_lt_equals_sr, compare_lt_with_sr, stanley_reisner,
    LtComparison, MonomialIdeal,
};
pub use indicial::{
    canonical_gamma, chow_ring_dimension, indicial_value, unique_index_certificate,
    IndexReport, IndicialPolynomial,
};
pub use order::{leading_term, TermOrder};
