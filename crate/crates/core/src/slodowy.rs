//! Principal `sl_2`-triples, the regular Slodowy slice `e + ker ad_f`, and
//! the type-A section map through characteristic polynomials.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::criteria::decide_regular_element;
use crate::error::{Error, Result};
use crate::lie::{Family, LieAlgebra};
use crate::linalg::{rank_and_kernel, rat, solve_linear, Rational, RationalMatrix, Subspace};
use crate::poly::char_poly;
use crate::sampling::{Config, Sampler};
use crate::subalgebra::Embedding;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: Vec<Rational>,
    pub h: Vec<Rational>,
    pub f: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct SlodowySlice {
    pub base: Vec<Rational>,
    pub directions: Subspace,
    /// Basis of the directions by `ad_h`-eigenvalue, highest first.
    pub graded: Vec<(i64, Vec<Rational>)>,
}

impl SlodowySlice {
    pub fn dim(&self) -> usize {
        self.directions.dim()
    }

    /// `base + Σ a_k graded_k`.
    pub fn point(&self, coeffs: &[Rational]) -> Vec<Rational> {
        let mut p = self.base.clone();
        for (c, (_, d)) in coeffs.iter().zip(&self.graded) {
            if c.is_zero() {
                continue;
            }
            for (a, b) in p.iter_mut().zip(d) {
                *a += c * b;
            }
        }
        p
    }
}

/// Weight of a root vector under the fixed torus, read off from `[H_k, b]`.
fn weight(l: &LieAlgebra, idx: usize) -> Vec<Rational> {
    let b = l.unit(idx);
    l.cartan_indices()
        .iter()
        .map(|&k| l.bracket(&l.unit(k), &b)[idx].clone())
        .collect()
}

/// Root vectors as `(basis index, weight)`, split into positive (upper
/// triangular) and negative.
type Roots = Vec<(usize, Vec<Rational>)>;

fn roots(l: &LieAlgebra) -> (Roots, Roots) {
    let cartan = l.cartan_indices();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for f in 0..l.factors().len() {
        for idx in l.factor_range(f) {
            if cartan.contains(&idx) {
                continue;
            }
            let (i, j) = l.label(idx);
            let w = weight(l, idx);
            if i < j {
                pos.push((idx, w));
            } else {
                neg.push((idx, w));
            }
        }
    }
    (pos, neg)
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn check_triple(l: &LieAlgebra, t: &Sl2Triple) -> bool {
    let two = rat(2);
    let scaled = |v: &[Rational], s: &Rational| -> Vec<Rational> { v.iter().map(|x| x * s).collect() };
    l.bracket(&t.e, &t.f) == t.h
        && l.bracket(&t.h, &t.e) == scaled(&t.e, &two)
        && l.bracket(&t.h, &t.f) == scaled(&t.f, &-two)
}

/// The principal triple: `e` is the sum of simple root vectors, `h` the torus
/// element with every simple root equal to 2, and `f` a combination of
/// negative simple root vectors with `[e, f] = h`.
pub fn principal_sl2(l: &LieAlgebra) -> Result<Sl2Triple> {
    if !l.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let n = l.dim();
    let (pos, neg) = roots(l);
    let sums: Vec<Vec<Rational>> = pos
        .iter()
        .enumerate()
        .flat_map(|(a, (_, wa))| pos[a..].iter().map(move |(_, wb)| add(wa, wb)))
        .collect();
    let simple: Vec<&(usize, Vec<Rational>)> = pos.iter().filter(|(_, w)| !sums.contains(w)).collect();
    if simple.len() != l.rank() {
        return Err(Error::Internal("simple roots do not match the rank".into()));
    }
    let mut e = vec_zero(n);
    for (idx, _) in &simple {
        e[*idx] = Rational::one();
    }
    // α_i(Σ c_k H_k) = Σ c_k w_i[k] = 2.
    let rows: Vec<Vec<Rational>> = simple.iter().map(|(_, w)| w.clone()).collect();
    let a = RationalMatrix::from_rows(l.rank(), rows)?;
    let coeffs = solve_linear(&a, &alloc::vec![rat(2); simple.len()])?
        .ok_or_else(|| Error::Internal("no torus element with all simple roots 2".into()))?;
    let mut h = vec_zero(n);
    for (c, &k) in coeffs.iter().zip(l.cartan_indices()) {
        h[k] = c.clone();
    }
    let neg_simple: Vec<usize> = simple
        .iter()
        .map(|(_, w)| {
            let minus: Vec<Rational> = w.iter().map(|x| -x).collect();
            neg.iter()
                .find(|(_, v)| *v == minus)
                .map(|(idx, _)| *idx)
                .ok_or_else(|| Error::Internal("missing negative root".into()))
        })
        .collect::<Result<_>>()?;
    let cols: Vec<Vec<Rational>> = neg_simple.iter().map(|&i| l.bracket(&e, &l.unit(i))).collect();
    let m = RationalMatrix::from_columns(n, &cols)?;
    let fc = solve_linear(&m, &h)?.ok_or_else(|| Error::Internal("[e, f] = h has no solution".into()))?;
    let mut f = vec_zero(n);
    for (c, &i) in fc.iter().zip(&neg_simple) {
        f[i] = c.clone();
    }
    let t = Sl2Triple { e, h, f };
    if !check_triple(l, &t) {
        return Err(Error::Internal("principal triple fails the bracket relations".into()));
    }
    Ok(t)
}

fn vec_zero(n: usize) -> Vec<Rational> {
    alloc::vec![Rational::zero(); n]
}

/// `e + ker ad_f`, with a basis graded by `ad_h`.
pub fn slodowy_slice(l: &LieAlgebra, t: &Sl2Triple) -> Result<SlodowySlice> {
    if !check_triple(l, t) {
        return Err(Error::Internal("not an sl2-triple".into()));
    }
    let n = l.dim();
    let ad_f = l.ad_matrix(&t.f);
    let directions = rank_and_kernel(&ad_f).1;
    let ad_h = l.ad_matrix(&t.h);
    let mut graded = Vec::with_capacity(directions.dim());
    // ad_h acts on ker ad_f with eigenvalues 0, -2, -4, ...
    let mut eig = 0i64;
    while graded.len() < directions.dim() && eig >= -2 * n as i64 {
        let mut rows = ad_f.row_vectors();
        let mut shifted = ad_h.clone();
        for i in 0..n {
            shifted[(i, i)] -= rat(eig);
        }
        rows.extend(shifted.row_vectors());
        let k = rank_and_kernel(&RationalMatrix::from_rows(n, rows)?).1;
        for v in k.basis() {
            graded.push((eig, v.clone()));
        }
        eig -= 1;
    }
    if graded.len() != directions.dim() {
        return Err(Error::Internal("ad_h is not diagonalizable on the slice".into()));
    }
    Ok(SlodowySlice {
        base: t.e.clone(),
        directions,
        graded,
    })
}

/// Checks that `samples` random points of the slice are regular.
pub fn slice_regularity_check(l: &LieAlgebra, s: &SlodowySlice, samples: usize, seed: u64) -> bool {
    let mut rng = Sampler::new(seed, Config::default().coeff_bound);
    (0..samples).all(|_| {
        let coeffs = rng.coefficients(s.graded.len());
        l.is_regular(&s.point(&coeffs)).0
    })
}

fn sl_char_poly(l: &LieAlgebra, x: &[Rational]) -> Vec<Rational> {
    char_poly(&l.factor_matrix(0, x))
}

/// For `sl_n`: the unique slice point with the characteristic polynomial of
/// a regular `x`, or `None` when `x` is not regular.
///
/// Coordinates along the graded basis are solved one at a time: the
/// coefficient of `t^(n-m-1)` is affine in the coordinate of ad_h-degree
/// `-2m` once the lower ones are fixed, and independent of the higher ones.
pub fn slice_representative_sl(l: &LieAlgebra, s: &SlodowySlice, x: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if l.factors().len() != 1 || l.factors()[0].family != Family::A || !l.is_semisimple() {
        return Err(Error::UnsupportedType("slice representatives are implemented for sl_n".into()));
    }
    if x.len() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: x.len(),
        });
    }
    if !l.is_regular(x).0 {
        return Ok(None);
    }
    let n = l.factors()[0].matrix_size();
    let target = sl_char_poly(l, x);
    let mut coeffs = vec_zero(s.graded.len());
    for (m, (eig, _)) in s.graded.iter().enumerate() {
        let degree = (-eig / 2) as usize + 1;
        let slot = n - degree;
        coeffs[m] = Rational::zero();
        let c0 = sl_char_poly(l, &s.point(&coeffs))[slot].clone();
        coeffs[m] = Rational::one();
        let c1 = sl_char_poly(l, &s.point(&coeffs))[slot].clone();
        let slope = &c1 - &c0;
        if slope.is_zero() {
            return Err(Error::Internal("slice coordinate does not move its coefficient".into()));
        }
        coeffs[m] = (&target[slot] - &c0) / slope;
    }
    let y = s.point(&coeffs);
    if sl_char_poly(l, &y) != target {
        return Err(Error::Internal("slice point has the wrong characteristic polynomial".into()));
    }
    Ok(Some(y))
}

/// The hyperkähler slice for `T*(G/H)` is non-empty exactly when `h^⊥`
/// meets the regular elements.
pub fn slice_nonempty(e: &Embedding, cfg: &Config) -> Result<bool> {
    Ok(decide_regular_element(e, cfg)?.a_regular)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SimpleFactor;
    use alloc::vec;

    fn alg(f: SimpleFactor) -> LieAlgebra {
        LieAlgebra::new(&[f], 0).unwrap()
    }

    #[test]
    fn sl3_principal_h() {
        let l = alg(SimpleFactor::sl(3).unwrap());
        let t = principal_sl2(&l).unwrap();
        let hm = l.factor_matrix(0, &t.h);
        let d: Vec<Rational> = (0..3).map(|i| hm[(i, i)].clone()).collect();
        assert_eq!(d, vec![rat(2), rat(0), rat(-2)]);
        assert_eq!(slodowy_slice(&l, &t).unwrap().dim(), 2);
    }

    #[test]
    fn sp4_triple_and_slice() {
        let l = alg(SimpleFactor::sp(4).unwrap());
        let t = principal_sl2(&l).unwrap();
        assert!(check_triple(&l, &t));
        let s = slodowy_slice(&l, &t).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(l.is_regular(&s.base).0);
        assert!(slice_regularity_check(&l, &s, 20, 1));
    }

    #[test]
    fn sl2_representative() {
        let l = alg(SimpleFactor::sl(2).unwrap());
        let t = principal_sl2(&l).unwrap();
        let s = slodowy_slice(&l, &t).unwrap();
        let x = l
            .from_matrices(&[RationalMatrix::from_i64(&[&[1, 0], &[0, -1]])])
            .unwrap();
        let y = slice_representative_sl(&l, &s, &x).unwrap().unwrap();
        assert_eq!(sl_char_poly(&l, &y), vec![rat(-1), rat(0), rat(1)]);
        let base = slice_representative_sl(&l, &s, &t.e).unwrap().unwrap();
        assert_eq!(base, t.e);
        let l3 = alg(SimpleFactor::sl(3).unwrap());
        let s3 = slodowy_slice(&l3, &principal_sl2(&l3).unwrap()).unwrap();
        assert_eq!(slice_representative_sl(&l3, &s3, &vec_zero(8)).unwrap(), None);
    }
}
