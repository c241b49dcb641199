use std::cmp::Ordering;

use num_bigint::BigInt;

use super::binomial::{Binomial, Monomial};
use crate::linalg::RatVector;

/// Weight order refined by lex with `y_0` the smallest variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    weight: RatVector,
    scaled: Vec<BigInt>,
}

impl TermOrder {
    pub fn new(weight: RatVector) -> Self {
        let scaled = weight.clear_denominators().0;
        TermOrder { weight, scaled }
    }

    pub fn from_i64s(weight: &[i64]) -> Self {
        TermOrder::new(RatVector::from_i64s(weight))
    }

    pub fn weight(&self) -> &RatVector {
        &self.weight
    }

    pub fn vars(&self) -> usize {
        self.scaled.len()
    }

    /// Scaled weight of a monomial (a positive multiple of the true weight).
    pub fn weight_of(&self, m: &Monomial) -> BigInt {
        self.scaled
            .iter()
            .zip(&m.0)
            .map(|(w, &e)| w * BigInt::from(e))
            .sum()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.weight_of(a)
            .cmp(&self.weight_of(b))
            .then_with(|| a.0.iter().rev().cmp(b.0.iter().rev()))
    }

    /// Returns the binomial with its leading monomial in `plus`.
    pub fn orient(&self, b: &Binomial) -> Binomial {
        if self.compare(&b.plus, &b.minus) == Ordering::Less {
            b.swapped()
        } else {
            b.clone()
        }
    }

    /// True when the weight alone separates the two monomials.
    pub fn weight_separates(&self, b: &Binomial) -> bool {
        self.weight_of(&b.plus) != self.weight_of(&b.minus)
    }
}

/// The larger of the two monomials.
pub fn leading_term<'a>(b: &'a Binomial, order: &TermOrder) -> &'a Monomial {
    if order.compare(&b.plus, &b.minus) == Ordering::Less {
        &b.minus
    } else {
        &b.plus
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntVector;

    fn bin(l: &[i64]) -> Binomial {
        Binomial::from_exponents(&IntVector::from_i64s(l)).unwrap()
    }

    #[test]
    fn weight_decides() {
        let w = TermOrder::from_i64s(&[0, 1, 1, 1, 1]);
        assert_eq!(leading_term(&bin(&[-1, 1, -1, 1, 0]), &w).to_string(), "y1*y3");
        assert_eq!(leading_term(&bin(&[-2, 0, 1, 0, 1]), &w).to_string(), "y2*y4");
        assert_eq!(leading_term(&bin(&[2, 0, -1, 0, -1]), &w).to_string(), "y2*y4");
    }

    #[test]
    fn lex_breaks_ties() {
        let w = TermOrder::from_i64s(&[0, 0, 0]);
        // y1 y2 vs y0^2: highest variable present wins
        assert_eq!(leading_term(&bin(&[-2, 1, 1]), &w).to_string(), "y1*y2");
        let b = bin(&[0, 1, -1]);
        assert_eq!(leading_term(&b, &w).to_string(), "y2");
        assert!(!w.weight_separates(&b));
    }

    #[test]
    fn rational_weights_scale() {
        let w = TermOrder::new(RatVector::from_fractions(&[(0, 1), (1, 2), (1, 3)]));
        assert_eq!(
            w.compare(&Monomial(vec![0, 1, 0]), &Monomial(vec![0, 0, 1])),
            Ordering::Greater
        );
    }
}
