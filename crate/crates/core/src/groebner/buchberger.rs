use std::cmp::Ordering;
use std::collections::VecDeque;

use super::binomial::{Binomial, Monomial};
use super::order::TermOrder;
use crate::error::{Error, Result};

/// Bound on single-step rewrites during one normal-form computation.
pub const REDUCTION_STEP_LIMIT: usize = 1_000_000;

/// Rewrites `m` by `lead -> trail` steps until no leading monomial divides it.
///
/// `basis` must be oriented (leading monomial in `plus`). When several
/// elements apply, `choose` picks one among their indices.
pub fn reduce_monomial_with(
    m: &Monomial,
    basis: &[Binomial],
    choose: &mut dyn FnMut(&[usize]) -> usize,
) -> Result<Monomial> {
    let mut current = m.clone();
    for _ in 0..REDUCTION_STEP_LIMIT {
        let candidates: Vec<usize> = (0..basis.len())
            .filter(|&i| basis[i].plus.divides(&current))
            .collect();
        if candidates.is_empty() {
            return Ok(current);
        }
        let g = &basis[choose(&candidates)];
        current = current.div(&g.plus).mul(&g.minus);
    }
    Err(Error::ReductionGuard(REDUCTION_STEP_LIMIT))
}

/// Normal form with the first applicable reducer at each step.
pub fn normal_form(m: &Monomial, basis: &[Binomial]) -> Result<Monomial> {
    reduce_monomial_with(m, basis, &mut |c: &[usize]| c[0])
}

/// Outcome of one S-pair check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairDisposition {
    /// Leading monomials coprime; skipped by the first criterion.
    Coprime,
    ReducedToZero,
    /// Nonzero remainder, oriented.
    Remainder(Binomial),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRecord {
    pub first: usize,
    pub second: usize,
    pub disposition: PairDisposition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    /// Input basis with each leading monomial moved to `plus`.
    pub basis: Vec<Binomial>,
    pub pairs: Vec<PairRecord>,
    pub verified: bool,
}

impl VerifyReport {
    pub fn leading_terms(&self) -> Vec<Monomial> {
        self.basis.iter().map(|b| b.plus.clone()).collect()
    }
}

/// The two monomials of the S-binomial of oriented `f` and `g`.
fn s_pair(f: &Binomial, g: &Binomial) -> (Monomial, Monomial) {
    let l = f.plus.lcm(&g.plus);
    (l.div(&f.plus).mul(&f.minus), l.div(&g.plus).mul(&g.minus))
}

fn pair_disposition(
    f: &Binomial,
    g: &Binomial,
    basis: &[Binomial],
    order: &TermOrder,
) -> Result<PairDisposition> {
    if f.plus.is_coprime(&g.plus) {
        return Ok(PairDisposition::Coprime);
    }
    let (a, b) = s_pair(f, g);
    let na = normal_form(&a, basis)?;
    let nb = normal_form(&b, basis)?;
    if na == nb {
        return Ok(PairDisposition::ReducedToZero);
    }
    Ok(PairDisposition::Remainder(
        order.orient(&Binomial::from_monomials(&na, &nb)?),
    ))
}

/// Checks every S-pair of `basis` under `order`.
pub fn buchberger_verify(basis: &[Binomial], order: &TermOrder) -> Result<VerifyReport> {
    if basis.is_empty() {
        return Err(Error::Precondition("empty basis".into()));
    }
    let oriented: Vec<Binomial> = basis.iter().map(|b| order.orient(b)).collect();
    let mut pairs = Vec::new();
    for i in 0..oriented.len() {
        for j in i + 1..oriented.len() {
            let disposition = pair_disposition(&oriented[i], &oriented[j], &oriented, order)?;
            pairs.push(PairRecord {
                first: i,
                second: j,
                disposition,
            });
        }
    }
    let verified = pairs
        .iter()
        .all(|p| !matches!(p.disposition, PairDisposition::Remainder(_)));
    Ok(VerifyReport {
        basis: oriented,
        pairs,
        verified,
    })
}

/// Four times the largest generator degree.
pub fn default_degree_cap(generators: &[Binomial]) -> u32 {
    let max = generators
        .iter()
        .map(|b| b.plus.degree().max(b.minus.degree()))
        .max()
        .unwrap_or(0);
    u32::try_from(4 * max).unwrap_or(u32::MAX)
}

/// Buchberger completion within binomials, returning the reduced minimal
/// basis sorted by leading monomial.
pub fn buchberger_complete(
    generators: &[Binomial],
    order: &TermOrder,
    degree_cap: u32,
) -> Result<Vec<Binomial>> {
    let mut basis: Vec<Binomial> = Vec::new();
    for g in generators {
        let b = order.orient(&Binomial::from_monomials(&g.plus, &g.minus)?);
        if !basis.contains(&b) {
            basis.push(b);
        }
    }
    if basis.is_empty() {
        return Err(Error::Precondition("no generators".into()));
    }
    let mut queue: VecDeque<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = queue.pop_front() {
        let disposition = pair_disposition(&basis[i], &basis[j], &basis, order)?;
        if let PairDisposition::Remainder(r) = disposition {
            if r.plus.degree() > u64::from(degree_cap) {
                return Err(Error::DegreeCapExceeded { cap: degree_cap });
            }
            let k = basis.len();
            queue.extend((0..k).map(|i| (i, k)));
            basis.push(r);
        }
    }
    reduce_basis(basis, order)
}

/// Drops elements with redundant leading monomials and fully reduces tails.
fn reduce_basis(mut basis: Vec<Binomial>, order: &TermOrder) -> Result<Vec<Binomial>> {
    basis.sort_by(|a, b| order.compare(&a.plus, &b.plus));
    let mut minimal: Vec<Binomial> = Vec::new();
    for b in basis {
        if !minimal.iter().any(|m| m.plus.divides(&b.plus)) {
            minimal.push(b);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, b) in minimal.iter().enumerate() {
        let others: Vec<Binomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, x)| x.clone())
            .collect();
        let tail = normal_form(&b.minus, &others)?;
        reduced.push(order.orient(&Binomial::from_monomials(&b.plus, &tail)?));
    }
    reduced.sort_by(|a, b| match order.compare(&a.plus, &b.plus) {
        Ordering::Equal => a.minus.cmp(&b.minus),
        o => o,
    });
    Ok(reduced)
}
