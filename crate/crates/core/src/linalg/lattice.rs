//! Hermite normal form and the lattice computations built on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::vector::{IntVector, RatVector};

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `U` unimodular and `H = U * M`. Pivots of `H` are
/// positive and the entries above each pivot lie in `[0, pivot)`. Zero rows
/// are at the bottom.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let (rows, cols) = (m.rows(), m.cols());

    let mut r = 0;
    let mut c = 0;
    while r < rows && c < cols {
        let pivot = (r..rows)
            .filter(|&i| !h.get(i, c).is_zero())
            .min_by(|&a, &b| h.get(a, c).magnitude().cmp(h.get(b, c).magnitude()));
        let Some(pivot) = pivot else {
            c += 1;
            continue;
        };
        h.swap_rows(r, pivot);
        u.swap_rows(r, pivot);

        for k in r + 1..rows {
            if !h.get(k, c).is_zero() {
                let q = -(h.get(k, c) / h.get(r, c));
                h.add_row_multiple(k, r, &q);
                u.add_row_multiple(k, r, &q);
            }
        }
        // Remainders may still be nonzero; sweep the column again with the
        // smaller pivot they produced.
        if (r + 1..rows).any(|k| !h.get(k, c).is_zero()) {
            continue;
        }

        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let p = h.get(r, c).clone();
        for k in 0..r {
            let q = -h.get(k, c).div_floor(&p);
            h.add_row_multiple(k, r, &q);
            u.add_row_multiple(k, r, &q);
        }
        r += 1;
        c += 1;
    }
    (h, u)
}

/// Number of nonzero rows of the Hermite form.
pub fn rank(m: &IntMatrix) -> usize {
    let (h, _) = hermite_normal_form(m);
    (0..h.rows()).filter(|&r| !h.row(r).is_zero()).count()
}

pub fn rank_of(vectors: &[IntVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&IntMatrix::from_rows(vectors, vectors[0].len()))
}

/// Z-basis of `{v : M v = 0}`, canonicalized by the Hermite form of the
/// stacked basis.
pub fn integer_kernel_basis(m: &IntMatrix) -> Vec<IntVector> {
    let (h, u) = hermite_normal_form(&m.transpose());
    let kernel: Vec<IntVector> = (0..h.rows())
        .filter(|&r| h.row(r).is_zero())
        .map(|r| u.row(r))
        .collect();
    canonical_lattice_basis(&kernel, m.cols())
}

/// Hermite-reduced basis of the lattice spanned by `vectors` (zero rows dropped).
pub fn canonical_lattice_basis(vectors: &[IntVector], len: usize) -> Vec<IntVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (h, _) = hermite_normal_form(&IntMatrix::from_rows(vectors, len));
    h.row_vectors().into_iter().filter(|v| !v.is_zero()).collect()
}

/// True iff the vectors extend to a Z-basis of the ambient lattice, i.e.
/// they are independent and every Smith invariant factor equals 1.
pub fn is_unimodular_extension(vectors: &[IntVector]) -> bool {
    let Some(first) = vectors.first() else {
        return true;
    };
    let k = vectors.len();
    let d = first.len();
    if k > d {
        return false;
    }
    // gcd of the maximal minors is preserved by U, and H has a single
    // nonzero maximal minor: the product of its pivots.
    let (h, _) = hermite_normal_form(&IntMatrix::from_rows(vectors, d).transpose());
    let mut product = BigInt::one();
    for i in 0..k {
        product *= h.get(i, i);
    }
    product.is_one()
}

/// Solves `A x = b` over the rationals, returning one solution (free
/// variables set to zero) or `None` when inconsistent.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][c].recip();
        for x in aug[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in c..=cols {
                    let v = &aug[r][j] * &f;
                    aug[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if aug[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// Coefficients `c` with `sum c_i basis_i = target`, or `None` off the span.
pub fn express_in_basis(basis: &[IntVector], target: &IntVector) -> Option<RatVector> {
    if basis.is_empty() {
        return target.is_zero().then(|| RatVector(Vec::new()));
    }
    let a = IntMatrix::from_columns(basis, target.len()).to_rational_rows();
    let b: Vec<BigRational> = target.to_rat().0;
    let x = solve_rational(&a, &b)?;
    Some(RatVector(x))
}

/// Precomputed coordinate map for a fixed set of independent vectors.
///
/// Picks pivot columns once and stores the inverse of that square block,
/// so repeated coordinate queries cost one small matrix product.
#[derive(Clone, Debug)]
pub struct LatticeCoordinates {
    basis: Vec<IntVector>,
    pivots: Vec<usize>,
    inverse: Vec<Vec<BigRational>>,
}

impl LatticeCoordinates {
    /// Returns `None` when the vectors are dependent.
    pub fn new(basis: &[IntVector]) -> Option<Self> {
        let k = basis.len();
        if k == 0 {
            return Some(LatticeCoordinates {
                basis: Vec::new(),
                pivots: Vec::new(),
                inverse: Vec::new(),
            });
        }
        let d = basis[0].len();
        // Pivot columns of the row echelon form of the stacked basis.
        let (h, _) = hermite_normal_form(&IntMatrix::from_rows(basis, d));
        let mut pivots = Vec::with_capacity(k);
        for r in 0..k {
            let row = h.row(r);
            pivots.push(row.iter().position(|x| !x.is_zero())?);
        }
        // Square block B[i][j] = basis_j[pivots[i]]; invert column by column.
        let block: Vec<Vec<BigRational>> = pivots
            .iter()
            .map(|&p| basis.iter().map(|b| BigRational::from_integer(b[p].clone())).collect())
            .collect();
        let mut inverse = vec![vec![BigRational::zero(); k]; k];
        for j in 0..k {
            let e: Vec<BigRational> = (0..k)
                .map(|i| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect();
            let col = solve_rational(&block, &e)?;
            for i in 0..k {
                inverse[i][j] = col[i].clone();
            }
        }
        Some(LatticeCoordinates {
            basis: basis.to_vec(),
            pivots,
            inverse,
        })
    }

    pub fn basis(&self) -> &[IntVector] {
        &self.basis
    }

    /// Rational coordinates of `v`, or `None` if `v` is off the span.
    pub fn coordinates(&self, v: &IntVector) -> Option<RatVector> {
        let picked: Vec<BigRational> = self
            .pivots
            .iter()
            .map(|&p| BigRational::from_integer(v[p].clone()))
            .collect();
        let coords: Vec<BigRational> = self
            .inverse
            .iter()
            .map(|row| row.iter().zip(&picked).map(|(a, b)| a * b).sum())
            .collect();
        let mut back = vec![BigRational::zero(); v.len()];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (acc, x) in back.iter_mut().zip(b.iter()) {
                *acc += c * BigRational::from_integer(x.clone());
            }
        }
        let matches = back
            .iter()
            .zip(v.iter())
            .all(|(a, b)| *a == BigRational::from_integer(b.clone()));
        matches.then_some(RatVector(coords))
    }

    /// Integer coordinates, or `None` if `v` is not in the lattice spanned.
    pub fn integer_coordinates(&self, v: &IntVector) -> Option<IntVector> {
        self.coordinates(v)?.to_int()
    }

    pub fn combine(&self, coords: &[BigInt]) -> IntVector {
        assert_eq!(coords.len(), self.basis.len());
        let d = self.basis.first().map_or(0, |b| b.len());
        let mut out = IntVector::zeros(d);
        for (c, b) in coords.iter().zip(&self.basis) {
            out = out.combine(&BigInt::one(), b, c);
        }
        out
    }
}
