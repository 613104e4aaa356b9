//! Classical reductive Lie algebras in their defining representations.
//!
//! Conventions (split forms, diagonal maximal torus):
//! * `sl_N`: off-diagonal `E_ij` in lexicographic order, then
//!   `H_k = E_kk - E_{k+1,k+1}`.
//! * `so_N`: skew with respect to the antidiagonal form `J_{i,N-1-i} = 1`.
//!   Basis `E_ij - E_{j'i'}` for `i + j < N - 1`, where `i' = N - 1 - i`.
//! * `sp_2n`: skew with respect to `J_{i,i'} = ε_i` (`ε_i = 1` for `i < n`,
//!   `-1` otherwise). Basis `E_ij - ε_i ε_j E_{j'i'}` for `i + j < N - 1`, and
//!   `E_{ii'}` on the antidiagonal.
//!
//! In every case the basis element labelled `(i, j)` is the only one with a
//! nonzero `(i, j)` entry, so coordinates are read straight off a matrix.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Deref, Range};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rank_and_kernel, Rational, RationalMatrix, Subspace};
use crate::modp;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    /// Parses a family letter; `E`, `F`, `G` give an unsupported-type error.
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" | "F" | "f" | "G" | "g" => Err(Error::UnsupportedType(s.trim().into())),
            other => Err(Error::InvalidFactor(format!("unknown family `{other}`"))),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

/// `(row, column, value)` entries of an integer matrix.
type SparseEntries = Vec<(usize, usize, i64)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleFactor {
    pub family: Family,
    pub rank: usize,
}

impl SimpleFactor {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = if family == Family::D { 3 } else { 1 };
        if rank < min {
            return Err(Error::InvalidFactor(format!(
                "{}{rank}: rank must be at least {min}",
                family.letter()
            )));
        }
        Ok(Self { family, rank })
    }

    /// `sl_n`, `n >= 2`.
    pub fn sl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidFactor(format!("sl{n}")));
        }
        Self::new(Family::A, n - 1)
    }

    /// `so_m`, `m = 3` or `m >= 5`.
    pub fn so(m: usize) -> Result<Self> {
        if m % 2 == 1 {
            Self::new(Family::B, m / 2)
        } else {
            Self::new(Family::D, m / 2)
        }
    }

    /// `sp_m` for even `m >= 2`.
    pub fn sp(m: usize) -> Result<Self> {
        if m % 2 == 1 || m == 0 {
            return Err(Error::InvalidFactor(format!("sp{m}")));
        }
        Self::new(Family::C, m / 2)
    }

    /// Size of the defining representation.
    pub fn matrix_size(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B => 2 * self.rank + 1,
            Family::C | Family::D => 2 * self.rank,
        }
    }

    pub fn dim(&self) -> usize {
        let n = self.matrix_size();
        match self.family {
            Family::A => n * n - 1,
            Family::B | Family::D => n * (n - 1) / 2,
            Family::C => n * (n + 1) / 2,
        }
    }

    /// Killing form divided by the trace form of the defining representation.
    pub fn killing_scale(&self) -> i64 {
        let n = self.matrix_size() as i64;
        match self.family {
            Family::A => 2 * n,
            Family::B | Family::D => n - 2,
            Family::C => n + 2,
        }
    }

    /// Matrix-style name such as `sl4`, `so5`, `sp6`.
    pub fn name(&self) -> String {
        let n = self.matrix_size();
        match self.family {
            Family::A => format!("sl{n}"),
            Family::B | Family::D => format!("so{n}"),
            Family::C => format!("sp{n}"),
        }
    }

    /// Basis as `(label, sparse integer entries)` in the module conventions.
    fn basis(&self) -> Vec<((usize, usize), SparseEntries)> {
        let n = self.matrix_size();
        let mut out = Vec::with_capacity(self.dim());
        match self.family {
            Family::A => {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            out.push(((i, j), vec![(i, j, 1)]));
                        }
                    }
                }
                for k in 0..n - 1 {
                    out.push(((k, k), vec![(k, k, 1), (k + 1, k + 1, -1)]));
                }
            }
            Family::B | Family::D => {
                for i in 0..n {
                    for j in 0..n {
                        if i + j < n - 1 {
                            out.push(((i, j), vec![(i, j, 1), (n - 1 - j, n - 1 - i, -1)]));
                        }
                    }
                }
            }
            Family::C => {
                let half = n / 2;
                let eps = |i: usize| if i < half { 1i64 } else { -1 };
                for i in 0..n {
                    for j in 0..n {
                        if i + j == n - 1 {
                            out.push(((i, j), vec![(i, j, 1)]));
                        } else if i + j < n - 1 {
                            let s = -eps(i) * eps(j);
                            out.push(((i, j), vec![(i, j, 1), (n - 1 - j, n - 1 - i, s)]));
                        }
                    }
                }
            }
        }
        debug_assert_eq!(out.len(), self.dim());
        out
    }

    /// Gram matrix `J` of the invariant bilinear form (identity-free for `sl`).
    pub fn gram(&self) -> Option<RationalMatrix> {
        let n = self.matrix_size();
        let mut j = RationalMatrix::zeros(n, n);
        match self.family {
            Family::A => return None,
            Family::B | Family::D => {
                for i in 0..n {
                    j[(i, n - 1 - i)] = Rational::one();
                }
            }
            Family::C => {
                for i in 0..n {
                    j[(i, n - 1 - i)] = if i < n / 2 { Rational::one() } else { -Rational::one() };
                }
            }
        }
        Some(j)
    }
}

impl core::fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Coordinates of an element of a `LieAlgebra` in its ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element(Vec<Rational>);

impl Element {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![Rational::zero(); dim])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }
}

impl Deref for Element {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl From<Vec<Rational>> for Element {
    fn from(v: Vec<Rational>) -> Self {
        Self(v)
    }
}

/// `[b_i, b_j] = Σ c b_k`, stored per `i` as `(j, k, c)`.
type AdTable = Vec<Vec<(usize, usize, i64)>>;

/// A reductive Lie algebra: a direct sum of classical simple factors plus an
/// abelian summand of dimension `center_dim` (basis vectors placed last).
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    factors: Vec<SimpleFactor>,
    center_dim: usize,
    offsets: Vec<usize>,
    labels: Vec<(usize, usize)>,
    basis: Vec<Vec<(usize, usize, i64)>>,
    ad_table: AdTable,
    form: RationalMatrix,
    cartan: Vec<usize>,
    dim: usize,
    rank: usize,
}

/// Builds `⊕ factors ⊕ C^center_dim`.
pub fn build_algebra(factors: &[SimpleFactor], center_dim: usize) -> Result<LieAlgebra> {
    LieAlgebra::new(factors, center_dim)
}

impl LieAlgebra {
    pub fn new(factors: &[SimpleFactor], center_dim: usize) -> Result<Self> {
        for f in factors {
            SimpleFactor::new(f.family, f.rank)?;
        }
        let mut offsets = Vec::with_capacity(factors.len() + 1);
        let mut labels = Vec::new();
        let mut basis = Vec::new();
        let mut cartan = Vec::new();
        for f in factors {
            offsets.push(basis.len());
            for (label, entries) in f.basis() {
                if label.0 == label.1 {
                    cartan.push(basis.len());
                }
                labels.push(label);
                basis.push(entries);
            }
        }
        offsets.push(basis.len());
        for _ in 0..center_dim {
            cartan.push(basis.len());
            labels.push((0, 0));
            basis.push(Vec::new());
        }
        let dim = basis.len();
        let rank = factors.iter().map(|f| f.rank).sum::<usize>() + center_dim;
        let mut alg = Self {
            factors: factors.to_vec(),
            center_dim,
            offsets,
            labels,
            basis,
            ad_table: Vec::new(),
            form: RationalMatrix::zeros(dim, dim),
            cartan,
            dim,
            rank,
        };
        alg.ad_table = alg.compute_ad_table();
        alg.form = alg.compute_form();
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn center_dim(&self) -> usize {
        self.center_dim
    }

    pub fn is_semisimple(&self) -> bool {
        self.center_dim == 0
    }

    /// Basis indices of the fixed maximal torus.
    pub fn cartan_indices(&self) -> &[usize] {
        &self.cartan
    }

    /// Gram matrix of the invariant form on the basis.
    pub fn form(&self) -> &RationalMatrix {
        &self.form
    }

    pub fn factor_range(&self, f: usize) -> Range<usize> {
        self.offsets[f]..self.offsets[f + 1]
    }

    pub fn center_range(&self) -> Range<usize> {
        self.offsets[self.factors.len()]..self.dim
    }

    /// Factor owning a basis index, or `None` for the center.
    pub fn factor_of(&self, idx: usize) -> Option<usize> {
        (0..self.factors.len()).find(|&f| self.factor_range(f).contains(&idx))
    }

    /// Matrix position labelling a factor basis element.
    pub fn label(&self, idx: usize) -> (usize, usize) {
        self.labels[idx]
    }

    /// Sparse integer entries of a basis matrix (empty for center vectors).
    pub fn basis_entries(&self, idx: usize) -> &[(usize, usize, i64)] {
        &self.basis[idx]
    }

    /// Index of the basis element labelled `(i, j)` in factor `f`, if any.
    pub fn index_of(&self, f: usize, i: usize, j: usize) -> Option<usize> {
        self.factor_range(f).find(|&k| self.labels[k] == (i, j))
    }

    pub fn unit(&self, idx: usize) -> Element {
        let mut v = vec![Rational::zero(); self.dim];
        v[idx] = Rational::one();
        Element(v)
    }

    /// Reads local coordinates of a matrix in factor `f` without checking
    /// membership.
    fn extract<T>(&self, f: usize, get: impl Fn(usize, usize) -> T) -> Vec<T>
    where
        T: Clone + Zero + core::ops::Add<Output = T>,
    {
        let fam = self.factors[f].family;
        self.factor_range(f)
            .map(|k| {
                let (i, j) = self.labels[k];
                if fam == Family::A && i == j {
                    (0..=i).fold(T::zero(), |acc, l| acc + get(l, l))
                } else {
                    get(i, j)
                }
            })
            .collect()
    }

    fn compute_ad_table(&self) -> AdTable {
        let mut table: AdTable = vec![Vec::new(); self.dim];
        for f in 0..self.factors.len() {
            let range = self.factor_range(f);
            for a in range.clone() {
                for b in range.clone() {
                    if a == b {
                        continue;
                    }
                    let mut prod: BTreeMap<(usize, usize), i64> = BTreeMap::new();
                    for &(i, j, v) in &self.basis[a] {
                        for &(j2, k, w) in &self.basis[b] {
                            if j == j2 {
                                *prod.entry((i, k)).or_insert(0) += v * w;
                            }
                        }
                    }
                    for &(i, j, v) in &self.basis[b] {
                        for &(j2, k, w) in &self.basis[a] {
                            if j == j2 {
                                *prod.entry((i, k)).or_insert(0) -= v * w;
                            }
                        }
                    }
                    let coords = self.extract(f, |i, j| prod.get(&(i, j)).copied().unwrap_or(0));
                    for (off, c) in coords.into_iter().enumerate() {
                        if c != 0 {
                            table[a].push((b, range.start + off, c));
                        }
                    }
                }
            }
        }
        table
    }

    fn compute_form(&self) -> RationalMatrix {
        let mut g = RationalMatrix::zeros(self.dim, self.dim);
        for (f, factor) in self.factors.iter().enumerate() {
            let scale = factor.killing_scale();
            let range = self.factor_range(f);
            for a in range.clone() {
                for b in range.clone() {
                    let mut tr = 0i64;
                    for &(i, j, v) in &self.basis[a] {
                        for &(j2, i2, w) in &self.basis[b] {
                            if j == j2 && i == i2 {
                                tr += v * w;
                            }
                        }
                    }
                    if tr != 0 {
                        g[(a, b)] = Rational::from_integer(BigInt::from(scale * tr));
                    }
                }
            }
        }
        g
    }

    /// Structure constants `[b_i, b_j] = Σ_k c_{ij}^k b_k` as `(j, k, c)`.
    pub fn structure_constants(&self, i: usize) -> &[(usize, usize, i64)] {
        &self.ad_table[i]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &(j, k, c) in &self.ad_table[i] {
                let yj = &y[j];
                if yj.is_zero() {
                    continue;
                }
                out[k] += xi * yj * Rational::from_integer(BigInt::from(c));
            }
        }
        out
    }

    /// Matrix of `ad_x`: column `j` is `[x, b_j]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &(j, k, c) in &self.ad_table[i] {
                m[(k, j)] += xi * Rational::from_integer(BigInt::from(c));
            }
        }
        m
    }

    pub fn killing_form(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                let g = &self.form[(a, b)];
                if !g.is_zero() && !yb.is_zero() {
                    acc += xa * g * yb;
                }
            }
        }
        acc
    }

    /// `trace(ad_x ad_y)`, the textbook definition (slow; used for checks).
    pub fn trace_form(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.ad_matrix(x)
            .mul(&self.ad_matrix(y))
            .expect("square matrices")
            .trace()
    }

    /// Row `κ(x, b_j)` for all `j`.
    pub fn form_row(&self, x: &[Rational]) -> Vec<Rational> {
        (0..self.dim)
            .map(|b| {
                let mut acc = Rational::zero();
                for (a, xa) in x.iter().enumerate() {
                    let g = &self.form[(a, b)];
                    if !xa.is_zero() && !g.is_zero() {
                        acc += xa * g;
                    }
                }
                acc
            })
            .collect()
    }

    /// Dimension of the centralizer of `x`. Tries a modular rank first: if it
    /// already gives `dim - rank`, the centralizer is exactly `rank`-dimensional.
    pub fn centralizer_dim(&self, x: &[Rational]) -> usize {
        let ad = self.ad_matrix(x);
        let rows = ad.row_vectors();
        if let Some(r) = modp::rank_of_rows(&rows, self.dim) {
            if self.dim - r == self.rank {
                return self.rank;
            }
        }
        self.dim - crate::linalg::rank_of_rows(&rows, self.dim)
    }

    /// `(regular, centralizer dimension)`.
    pub fn is_regular(&self, x: &[Rational]) -> (bool, usize) {
        let c = self.centralizer_dim(x);
        (c == self.rank, c)
    }

    /// Centralizer of `x` as a subspace.
    pub fn centralizer(&self, x: &[Rational]) -> Subspace {
        rank_and_kernel(&self.ad_matrix(x)).1
    }

    /// Dimension of a Borel subalgebra.
    pub fn borel_dim(&self) -> usize {
        let ss_dim = self.dim - self.center_dim;
        let ss_rank = self.rank - self.center_dim;
        (ss_dim + ss_rank) / 2 + self.center_dim
    }

    /// Defining-representation matrix of the factor-`f` component of `x`.
    pub fn factor_matrix(&self, f: usize, x: &[Rational]) -> RationalMatrix {
        let n = self.factors[f].matrix_size();
        let mut m = RationalMatrix::zeros(n, n);
        for k in self.factor_range(f) {
            if x[k].is_zero() {
                continue;
            }
            for &(i, j, v) in &self.basis[k] {
                m[(i, j)] += &x[k] * Rational::from_integer(BigInt::from(v));
            }
        }
        m
    }

    /// One matrix per simple factor (center coordinates are dropped).
    pub fn to_matrices(&self, x: &[Rational]) -> Vec<RationalMatrix> {
        (0..self.factors.len()).map(|f| self.factor_matrix(f, x)).collect()
    }

    /// Inverse of `to_matrices`; center coordinates are set to zero. Fails if
    /// a matrix has the wrong size or lies outside its factor.
    pub fn from_matrices(&self, ms: &[RationalMatrix]) -> Result<Element> {
        if ms.len() != self.factors.len() {
            return Err(Error::DimensionMismatch {
                expected: self.factors.len(),
                found: ms.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (f, m) in ms.iter().enumerate() {
            let n = self.factors[f].matrix_size();
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.rows(),
                });
            }
            let local = self.extract(f, |i, j| m[(i, j)].clone());
            let start = self.factor_range(f).start;
            for (off, c) in local.into_iter().enumerate() {
                out[start + off] = c;
            }
            if &self.factor_matrix(f, &out) != m {
                return Err(Error::NotInAlgebra(format!(
                    "matrix for factor {} is not in {}",
                    f,
                    self.factors[f].name()
                )));
            }
        }
        Ok(Element(out))
    }

    /// Checks the Jacobi identity on all basis triples (`dim <= limit`) or on
    /// `samples` seeded random triples. Returns the first failing triple.
    pub fn check_jacobi(&self, limit: usize, samples: usize, seed: u64) -> Option<(usize, usize, usize)> {
        let jac = |a: usize, b: usize, c: usize| {
            let (x, y, z) = (self.unit(a), self.unit(b), self.unit(c));
            let t1 = self.bracket(&x, &self.bracket(&y, &z));
            let t2 = self.bracket(&y, &self.bracket(&z, &x));
            let t3 = self.bracket(&z, &self.bracket(&x, &y));
            t1.iter().zip(&t2).zip(&t3).all(|((p, q), r)| (p + q + r).is_zero())
        };
        if self.dim <= limit {
            for a in 0..self.dim {
                for b in a + 1..self.dim {
                    for c in b + 1..self.dim {
                        if !jac(a, b, c) {
                            return Some((a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut s = crate::sampling::Sampler::new(seed, 1);
            for _ in 0..samples {
                let (a, b, c) = (s.index(self.dim), s.index(self.dim), s.index(self.dim));
                if !jac(a, b, c) {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    /// Short name such as `sl4+sp4+C1`.
    pub fn name(&self) -> String {
        let mut parts: Vec<String> = self.factors.iter().map(|f| f.name()).collect();
        if self.center_dim > 0 {
            parts.push(format!("C{}", self.center_dim));
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts.join("+")
    }
}

pub fn ad_matrix(l: &LieAlgebra, x: &Element) -> RationalMatrix {
    l.ad_matrix(x)
}

pub fn killing_form(l: &LieAlgebra, x: &Element, y: &Element) -> Rational {
    l.killing_form(x, y)
}

pub fn is_regular(l: &LieAlgebra, x: &Element) -> (bool, usize) {
    l.is_regular(x)
}

pub fn borel_dim(l: &LieAlgebra) -> usize {
    l.borel_dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn sl(n: usize) -> LieAlgebra {
        build_algebra(&[SimpleFactor::sl(n).unwrap()], 0).unwrap()
    }

    #[test]
    fn dimensions_and_ranks() {
        let cases = [
            (SimpleFactor::sl(2).unwrap(), 3, 1),
            (SimpleFactor::sl(3).unwrap(), 8, 2),
            (SimpleFactor::sp(4).unwrap(), 10, 2),
            (SimpleFactor::so(5).unwrap(), 10, 2),
            (SimpleFactor::so(6).unwrap(), 15, 3),
        ];
        for (f, d, r) in cases {
            let l = build_algebra(&[f], 0).unwrap();
            assert_eq!((l.dim(), l.rank()), (d, r), "{f}");
        }
        let two = build_algebra(&[SimpleFactor::sl(2).unwrap(); 2], 0).unwrap();
        assert_eq!(two.dim(), 6);
        assert_eq!(two.factors().len(), 2);
    }

    #[test]
    fn exceptional_is_unsupported() {
        assert!(matches!(Family::parse("E"), Err(Error::UnsupportedType(_))));
        assert!(SimpleFactor::new(Family::D, 2).is_err());
    }

    #[test]
    fn sl2_ad_h() {
        let l = sl(2);
        let h = l.unit(2);
        let ad = l.ad_matrix(&h);
        let expected = RationalMatrix::from_i64(&[&[2, 0, 0], &[0, -2, 0], &[0, 0, 0]]);
        assert_eq!(ad, expected);
        assert!(l.ad_matrix(&Element::zero(3)).is_zero());
    }

    #[test]
    fn sl2_killing() {
        let l = sl(2);
        let (e, h) = (l.unit(0), l.unit(2));
        assert_eq!(l.killing_form(&h, &h), rat(8));
        assert_eq!(l.killing_form(&e, &e), rat(0));
        assert_eq!(l.trace_form(&h, &h), rat(8));
    }

    #[test]
    fn regularity_examples() {
        let l = sl(2);
        assert_eq!(l.is_regular(&Element::zero(3)), (false, 3));
        assert_eq!(l.is_regular(&l.unit(0)), (true, 1));
        let l3 = sl(3);
        let m = RationalMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -2]]);
        let x = l3.from_matrices(&[m]).unwrap();
        assert_eq!(l3.is_regular(&x), (false, 4));
    }

    #[test]
    fn borel_dimensions() {
        assert_eq!(sl(3).borel_dim(), 5);
        assert_eq!(sl(2).borel_dim(), 2);
        let sp4 = build_algebra(&[SimpleFactor::sp(4).unwrap()], 0).unwrap();
        assert_eq!(sp4.borel_dim(), 6);
    }

    #[test]
    fn matrices_roundtrip_and_membership() {
        let so5 = build_algebra(&[SimpleFactor::so(5).unwrap()], 0).unwrap();
        let x: Vec<Rational> = (0..so5.dim()).map(|i| rat(i as i64 - 3)).collect();
        let ms = so5.to_matrices(&x);
        assert_eq!(so5.from_matrices(&ms).unwrap().coords(), &x[..]);
        assert!(so5.from_matrices(&[RationalMatrix::identity(5)]).is_err());
    }
}
