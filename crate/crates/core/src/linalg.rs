//! Exact linear algebra over the rationals.
//!
//! Everything here is dense. Elimination runs fraction-free on integer rows
//! (each rational row is first scaled by the lcm of its denominators), so
//! intermediate entries are minors of the input and never need gcd
//! normalisation. Subspaces are kept in reduced row echelon form, which makes
//! them canonical: two spanning sets of the same space produce equal values.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a rational. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            entries,
        })
    }

    /// Convenience constructor for small integer matrices.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&v| rat(v)).collect()
            })
            .collect();
        Self::from_rows(cols, data).expect("checked above")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(&self.row_vectors(), self.cols)
    }

    /// Two-sided inverse, or `None` when singular or not square.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        let (rref, pivots) = rref_rows(&rows, 2 * n);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let data = rref.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Self::from_rows(n, data).expect("square block"))
    }
}

/// Inner product of two equal-length vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Scales a rational vector to a primitive-free integer vector spanning the
/// same line (multiplies by the lcm of the denominators).
pub fn integer_row(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Fraction-free row echelon form of integer rows, in place. Returns the pivot
/// columns; rows past `pivots.len()` are zero afterwards.
fn bareiss_echelon(rows: &mut [Vec<BigInt>], ncols: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let piv = &pivot_row[col];
        for row in tail.iter_mut() {
            let factor = core::mem::take(&mut row[col]);
            for j in col + 1..ncols {
                let mut v = piv * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v -= &factor * &pivot_row[j];
                }
                if v.is_zero() {
                    row[j] = v;
                } else {
                    debug_assert!((&v % &prev).is_zero(), "Bareiss division not exact");
                    row[j] = v / &prev;
                }
            }
        }
        prev = rows[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Rank of a list of rational rows of length `ncols`.
pub fn rank_of_rows(rows: &[Vec<Rational>], ncols: usize) -> usize {
    let mut ints: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| integer_row(r))
        .collect();
    bareiss_echelon(&mut ints, ncols).len()
}

/// Rank of integer rows; avoids the rational round trip on hot paths.
pub fn rank_of_integer_rows(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    bareiss_echelon(&mut rows, ncols).len()
}

/// Reduced row echelon form of rational rows. Returns the nonzero RREF rows and
/// their pivot columns (strictly increasing).
pub fn rref_rows(rows: &[Vec<Rational>], ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut ints: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| integer_row(r))
        .collect();
    let pivots = bareiss_echelon(&mut ints, ncols);
    ints.truncate(pivots.len());
    let mut out: Vec<Vec<Rational>> = ints
        .into_iter()
        .map(|r| r.into_iter().map(Rational::from_integer).collect())
        .collect();
    for i in (0..out.len()).rev() {
        let p = pivots[i];
        let inv = out[i][p].recip();
        for x in out[i].iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let (above, rest) = out.split_at_mut(i);
        let pivot_row = &rest[0];
        for row in above.iter_mut() {
            let f = core::mem::take(&mut row[p]);
            if f.is_zero() {
                continue;
            }
            for j in p + 1..ncols {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
    }
    (out, pivots)
}

/// Row-span subspace of `Q^n`, stored in canonical reduced row echelon form.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{})", self.dim(), self.ambient_dim)
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect();
        Self {
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient_dim`.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
        }
        let (basis, pivots) = rref_rows(vectors, ambient_dim);
        Ok(Self {
            ambient_dim,
            basis,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after reduction by the echelon basis; zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let f = r[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, b) in r.iter_mut().zip(row).skip(p) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in
    /// the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *o += c * b;
                }
            }
        }
        out
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        if self.contains_vector(v) {
            return false;
        }
        let mut all = core::mem::take(&mut self.basis);
        all.push(v.to_vec());
        let (basis, pivots) = rref_rows(&all, self.ambient_dim);
        self.basis = basis;
        self.pivots = pivots;
        true
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        other.ambient_dim == self.ambient_dim && other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // Kernel of [U^T | -V^T] pairs coefficient vectors with equal images.
        let n = self.ambient_dim;
        let du = self.dim();
        let mut columns = self.basis.clone();
        columns.extend(other.basis.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        let m = RationalMatrix::from_columns(n, &columns)?;
        let (_, ker) = rank_and_kernel(&m);
        let vecs: Vec<Vec<Rational>> = ker
            .basis()
            .iter()
            .map(|k| {
                let mut out = vec![Rational::zero(); n];
                for (c, row) in k[..du].iter().zip(&self.basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (o, b) in out.iter_mut().zip(row) {
                        *o += c * b;
                    }
                }
                out
            })
            .collect();
        Subspace::span(n, &vecs)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// Rank and canonical kernel of `m`. `rank + dim(kernel) == m.cols()`.
pub fn rank_and_kernel(m: &RationalMatrix) -> (usize, Subspace) {
    let n = m.cols();
    let (rref, pivots) = rref_rows(&m.row_vectors(), n);
    let rank = pivots.len();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut kernel_vectors = Vec::with_capacity(n - rank);
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (row, &p) in rref.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[p] = -row[free].clone();
            }
        }
        kernel_vectors.push(v);
    }
    let kernel = Subspace::span(n, &kernel_vectors).expect("kernel vectors have length cols");
    (rank, kernel)
}

/// Solves `a x = b`. Returns the canonical particular solution (free variables
/// set to zero) or `None` when the system is inconsistent.
pub fn solve_linear(a: &RationalMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.cols();
    let rows: Vec<Vec<Rational>> = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let (rref, pivots) = rref_rows(&rows, n + 1);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &p) in rref.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Ok(Some(x))
}

/// Sum, intersection and containment of two subspaces of the same ambient
/// space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceOps {
    pub sum: Subspace,
    pub intersection: Subspace,
    /// Whether `v ⊆ u`.
    pub contains: bool,
}

pub fn subspace_ops(u: &Subspace, v: &Subspace) -> Result<SubspaceOps> {
    Ok(SubspaceOps {
        sum: u.sum(v)?,
        intersection: u.intersection(v)?,
        contains: u.contains(v),
    })
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> alloc::string::String {
    use alloc::string::ToString;
    if r.is_integer() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` (optional sign on `p`).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Absolute value bound on numerators and denominators, used in tests and
/// diagnostics.
pub fn height(v: &[Rational]) -> BigInt {
    v.iter()
        .map(|x| core::cmp::max(x.numer().abs(), x.denom().clone()))
        .max()
        .unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rank_and_kernel_of_zero_matrix() {
        let (r, k) = rank_and_kernel(&RationalMatrix::zeros(3, 3));
        assert_eq!(r, 0);
        assert_eq!(k, Subspace::full(3));
    }

    #[test]
    fn rank_and_kernel_of_identity() {
        let (r, k) = rank_and_kernel(&RationalMatrix::identity(3));
        assert_eq!(r, 3);
        assert!(k.is_zero());
    }

    #[test]
    fn rank_and_kernel_of_proportional_rows() {
        let m = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, k) = rank_and_kernel(&m);
        assert_eq!(r, 1);
        assert_eq!(k, Subspace::span(2, &[v(&[2, -1])]).unwrap());
        for b in k.basis() {
            assert!(m.mul_vec(b).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_identity() {
        let x = solve_linear(&RationalMatrix::identity(2), &v(&[3, 5])).unwrap();
        assert_eq!(x, Some(v(&[3, 5])));
    }

    #[test]
    fn solve_underdetermined_sets_free_variables_to_zero() {
        let a = RationalMatrix::from_i64(&[&[1, 1]]);
        assert_eq!(solve_linear(&a, &v(&[2])).unwrap(), Some(v(&[2, 0])));
    }

    #[test]
    fn solve_inconsistent() {
        let a = RationalMatrix::from_i64(&[&[1], &[1]]);
        assert_eq!(solve_linear(&a, &v(&[0, 1])).unwrap(), None);
    }

    #[test]
    fn solve_rejects_wrong_rhs_length() {
        let a = RationalMatrix::identity(2);
        assert!(matches!(
            solve_linear(&a, &v(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn subspace_ops_coordinate_axes() {
        let u = Subspace::span(3, &[v(&[1, 0, 0])]).unwrap();
        let w = Subspace::span(3, &[v(&[0, 1, 0])]).unwrap();
        let ops = subspace_ops(&u, &w).unwrap();
        assert_eq!(ops.sum.dim(), 2);
        assert_eq!(ops.intersection.dim(), 0);
        assert!(!ops.contains);
    }

    #[test]
    fn subspace_ops_idempotent() {
        let u = Subspace::span(3, &[v(&[1, 2, 0]), v(&[0, 1, 1])]).unwrap();
        let ops = subspace_ops(&u, &u).unwrap();
        assert_eq!(ops.sum, u);
        assert_eq!(ops.intersection, u);
        assert!(ops.contains);
    }

    #[test]
    fn subspace_ops_diagonal_line_in_plane() {
        let line = Subspace::span(3, &[v(&[1, 1, 0])]).unwrap();
        let plane = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let ops = subspace_ops(&plane, &line).unwrap();
        assert_eq!(ops.intersection, line);
        assert!(ops.contains);
    }

    #[test]
    fn subspace_ops_rejects_mismatched_ambient() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(subspace_ops(&a, &b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = RationalMatrix::from_i64(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(3));
        assert!(RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn rational_text_roundtrip() {
        let r = ratio(-6, 4);
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(parse_rational("-3/2"), Some(r));
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
