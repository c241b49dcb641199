use std::fmt;
use std::ops::{Deref, Index};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer vector with arbitrary-precision entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(pub Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        IntVector(vec![BigInt::zero(); len])
    }

    /// Unit vector `e_i` of length `len`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = BigInt::one();
        v
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Nonnegative gcd of the entries; zero for the zero vector.
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divides out the content. The zero vector is returned unchanged.
    pub fn primitive(&self) -> IntVector {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntVector(self.0.iter().map(|x| x / &g).collect())
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        assert_eq!(self.len(), other.len(), "dot product of vectors with different lengths");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_rat(&self, other: &RatVector) -> BigRational {
        assert_eq!(self.len(), other.len(), "dot product of vectors with different lengths");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| b * BigRational::from_integer(a.clone()))
            .sum()
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        assert_eq!(self.len(), other.len());
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        assert_eq!(self.len(), other.len());
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|a| a * k).collect())
    }

    /// `a*self + b*other`.
    pub fn combine(&self, a: &BigInt, other: &IntVector, b: &BigInt) -> IntVector {
        assert_eq!(self.len(), other.len());
        IntVector(self.0.iter().zip(&other.0).map(|(x, y)| a * x + b * y).collect())
    }

    /// Positive part `max(v, 0)`.
    pub fn positive_part(&self) -> IntVector {
        IntVector(
            self.0
                .iter()
                .map(|x| if x.is_positive() { x.clone() } else { BigInt::zero() })
                .collect(),
        )
    }

    /// Negative part `max(-v, 0)`.
    pub fn negative_part(&self) -> IntVector {
        IntVector(
            self.0
                .iter()
                .map(|x| if x.is_negative() { -x } else { BigInt::zero() })
                .collect(),
        )
    }

    pub fn to_rat(&self) -> RatVector {
        RatVector(self.0.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }
}

impl Deref for IntVector {
    type Target = [BigInt];
    fn deref(&self) -> &[BigInt] {
        &self.0
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector::from_i64s(&v)
    }
}

impl From<Vec<BigInt>> for IntVector {
    fn from(v: Vec<BigInt>) -> Self {
        IntVector(v)
    }
}

impl FromIterator<BigInt> for IntVector {
    fn from_iter<T: IntoIterator<Item = BigInt>>(iter: T) -> Self {
        IntVector(iter.into_iter().collect())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Vector of exact rationals. `BigRational` keeps every entry in lowest
/// terms with a positive denominator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector(pub Vec<BigRational>);

impl RatVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        RatVector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        RatVector(vec![BigRational::zero(); len])
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        RatVector(entries.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    /// Builds from `(numerator, denominator)` pairs. Panics on a zero denominator.
    pub fn from_fractions(entries: &[(i64, i64)]) -> Self {
        RatVector(
            entries
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// Integer vector if every entry is integral.
    pub fn to_int(&self) -> Option<IntVector> {
        if !self.is_integral() {
            return None;
        }
        Some(IntVector(self.0.iter().map(|x| x.to_integer()).collect()))
    }

    /// Smallest positive integer multiple that is integral.
    pub fn clear_denominators(&self) -> IntVector {
        let lcm = self.0.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        IntVector(
            self.0
                .iter()
                .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
    }

    pub fn dot(&self, other: &RatVector) -> BigRational {
        assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

impl Deref for RatVector {
    type Target = [BigRational];
    fn deref(&self) -> &[BigRational] {
        &self.0
    }
}

impl From<Vec<BigRational>> for RatVector {
    fn from(v: Vec<BigRational>) -> Self {
        RatVector(v)
    }
}

impl From<&IntVector> for RatVector {
    fn from(v: &IntVector) -> Self {
        v.to_rat()
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
