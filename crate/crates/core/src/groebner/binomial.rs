use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::fan::PointConfig;
use crate::linalg::IntVector;

/// Exponent vector of a monomial in `y_0, ..., y_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    /// Squarefree monomial on the given variables.
    pub fn squarefree(vars: usize, support: &[usize]) -> Self {
        let mut e = vec![0; vars];
        for &i in support {
            e[i] = 1;
        }
        Monomial(e)
    }

    pub fn vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn to_int_vector(&self) -> IntVector {
        IntVector(self.0.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn from_int_vector(v: &IntVector) -> Result<Monomial> {
        v.iter()
            .map(|x| x.to_u32())
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
            .ok_or_else(|| Error::ExponentOverflow(v.clone()))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "y{i}")?;
            } else {
                write!(f, "y{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// `y^plus - y^minus` with coprime monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    /// Splits `l` by sign; no relation check.
    pub fn from_exponents(l: &IntVector) -> Result<Binomial> {
        if l.is_zero() {
            return Err(Error::ZeroBinomial);
        }
        let plus = Monomial::from_int_vector(&l.positive_part())?;
        let minus = Monomial::from_int_vector(&l.negative_part())?;
        Ok(Binomial { plus, minus })
    }

    /// `y^a - y^b` with the common factor removed.
    pub fn from_monomials(a: &Monomial, b: &Monomial) -> Result<Binomial> {
        if a == b {
            return Err(Error::ZeroBinomial);
        }
        let g = a.gcd(b);
        Ok(Binomial {
            plus: a.div(&g),
            minus: b.div(&g),
        })
    }

    /// `plus - minus` as an exponent vector.
    pub fn exponent(&self) -> IntVector {
        self.plus.to_int_vector().sub(&self.minus.to_int_vector())
    }

    pub fn vars(&self) -> usize {
        self.plus.vars()
    }

    /// Same binomial up to sign.
    pub fn swapped(&self) -> Binomial {
        Binomial {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

/// `y^{l+} - y^{l-}` for a relation `l` of the configuration.
pub fn binomial_from_relation(config: &PointConfig, l: &IntVector) -> Result<Binomial> {
    if !config.is_relation(l) {
        return Err(Error::NotARelation(l.clone()));
    }
    Binomial::from_exponents(l)
}
