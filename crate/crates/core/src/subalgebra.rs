//! Subalgebras `h ⊆ g`: named embeddings, annihilators, stabilizers, generic
//! stabilizers and splitting into center plus simple ideals.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::lie::{Family, LieAlgebra, SimpleFactor};
use crate::linalg::{rank_and_kernel, rat, Rational, RationalMatrix, Subspace};
use crate::poly;
use crate::sampling::Config;

/// Constructor parameter: an integer, a list of integers, or a simple type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Int(i64),
    List(Vec<i64>),
    Factor(SimpleFactor),
}

/// Named constructor and canonical parameters an embedding was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Origin {
    pub constructor: String,
    pub params: Vec<Param>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Symmetric,
    Spherical,
    Levi,
}

/// Center and simple ideals of a reductive `h`, in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDecomposition {
    pub center: Subspace,
    pub simple_ideals: Vec<Subspace>,
}

#[derive(Clone, Debug)]
pub struct Embedding {
    ambient: Arc<LieAlgebra>,
    h: Subspace,
    ideals: Option<IdealDecomposition>,
    tags: BTreeSet<Tag>,
    involution: Option<RationalMatrix>,
    origin: Option<Origin>,
    label: String,
}

/// Result of sampling the stabilizer of generic points of `h^⊥`.
#[derive(Clone, Debug)]
pub struct GenericStabilizerReport {
    pub stab_basis: Subspace,
    pub dim: usize,
    pub is_abelian: bool,
    pub reductive_rank: usize,
    pub trials: u32,
    pub coefficient_bound: u64,
    pub failure_bound: Rational,
    /// Sample of `h^⊥` whose stabilizer is reported.
    pub sample: Vec<Rational>,
}

impl Embedding {
    /// Validates closure (and the involution, when given) and wraps the data.
    pub fn new(
        ambient: Arc<LieAlgebra>,
        vectors: &[Vec<Rational>],
        involution: Option<RationalMatrix>,
    ) -> Result<Self> {
        let h = Subspace::span(ambient.dim(), vectors)?;
        let e = Self {
            ambient,
            h,
            ideals: None,
            tags: BTreeSet::new(),
            involution,
            origin: None,
            label: "custom".into(),
        };
        e.check_closed()?;
        if let Some(theta) = &e.involution {
            check_involution(&e.ambient, theta)?;
            if fixed_space(theta) != e.h {
                return Err(Error::InvalidInvolution("h is not the fixed subalgebra".into()));
            }
        }
        Ok(e)
    }

    /// Embedding given by explicit basis vectors; rejects non-subalgebras.
    pub fn custom(ambient: Arc<LieAlgebra>, vectors: &[Vec<Rational>]) -> Result<Self> {
        let mut e = Self::new(ambient, vectors, None)?;
        e.origin = Some(Origin {
            constructor: "custom".into(),
            params: Vec::new(),
        });
        Ok(e)
    }

    /// The fixed subalgebra of an involution of `ambient`.
    pub fn from_involution(ambient: Arc<LieAlgebra>, theta: RationalMatrix) -> Result<Self> {
        if theta.rows() != ambient.dim() || !theta.is_square() {
            return Err(Error::DimensionMismatch {
                expected: ambient.dim(),
                found: theta.rows(),
            });
        }
        check_involution(&ambient, &theta)?;
        let h = fixed_space(&theta);
        let mut e = Self::new(ambient, h.basis(), Some(theta))?;
        e.tags.insert(Tag::Symmetric);
        e.tags.insert(Tag::Spherical);
        Ok(e)
    }

    fn check_closed(&self) -> Result<()> {
        let b = self.h.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !self.h.contains_vector(&self.ambient.bracket(&b[i], &b[j])) {
                    return Err(Error::NotClosed);
                }
            }
        }
        Ok(())
    }

    pub fn ambient(&self) -> &LieAlgebra {
        &self.ambient
    }

    pub fn ambient_arc(&self) -> &Arc<LieAlgebra> {
        &self.ambient
    }

    pub fn h(&self) -> &Subspace {
        &self.h
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    pub fn involution(&self) -> Option<&RationalMatrix> {
        self.involution.as_ref()
    }

    pub fn tags(&self) -> &BTreeSet<Tag> {
        &self.tags
    }

    pub fn origin(&self) -> Option<&Origin> {
        self.origin.as_ref()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Stored ideal decomposition, when the constructor provides one.
    pub fn known_ideals(&self) -> Option<&IdealDecomposition> {
        self.ideals.as_ref()
    }

    /// Stored decomposition, or one computed by `decompose_reductive`.
    pub fn ideal_decomposition(&self, cfg: &Config) -> Result<IdealDecomposition> {
        match &self.ideals {
            Some(d) => Ok(d.clone()),
            None => decompose_reductive(self, cfg),
        }
    }

    fn named(
        mut self,
        constructor: &str,
        params: Vec<Param>,
        label: String,
        tags: &[Tag],
    ) -> Self {
        self.origin = Some(Origin {
            constructor: constructor.into(),
            params,
        });
        self.label = label;
        self.tags.extend(tags.iter().copied());
        if self.involution.is_some() {
            self.tags.insert(Tag::Symmetric);
            self.tags.insert(Tag::Spherical);
        }
        self
    }

    fn with_ideals(mut self, center: &[Vec<Rational>], ideals: &[Vec<Vec<Rational>>]) -> Result<Self> {
        let n = self.ambient.dim();
        self.ideals = Some(IdealDecomposition {
            center: Subspace::span(n, center)?,
            simple_ideals: ideals
                .iter()
                .filter(|v| !v.is_empty())
                .map(|v| Subspace::span(n, v))
                .collect::<Result<_>>()?,
        });
        Ok(self)
    }

    /// Same subalgebra viewed inside another copy of the ambient algebra; used
    /// by `embed` to attach a caller-supplied ambient.
    fn rebase(mut self, ambient: Arc<LieAlgebra>) -> Self {
        self.ambient = ambient;
        self
    }

    /// Annihilator of `h` under the Killing form.
    pub fn perp(&self) -> Result<Subspace> {
        perp(self)
    }

    pub fn stabilizer(&self, x: &[Rational]) -> Subspace {
        stabilizer(self, x)
    }

    /// Derived algebra `[h, h]`.
    pub fn derived(&self) -> Subspace {
        let b = self.h.basis();
        let mut s = Subspace::zero(self.ambient.dim());
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                s.insert(&self.ambient.bracket(&b[i], &b[j]));
            }
        }
        s
    }
}

/// Checks `θ² = 1` and `θ[x, y] = [θx, θy]` (exhaustively on basis pairs when
/// `dim <= 60`, otherwise on 500 seeded pairs).
pub fn check_involution(alg: &LieAlgebra, theta: &RationalMatrix) -> Result<()> {
    let n = alg.dim();
    if theta.mul(theta)? != RationalMatrix::identity(n) {
        return Err(Error::InvalidInvolution("θ² ≠ 1".into()));
    }
    let cols: Vec<Vec<Rational>> = (0..n).map(|j| theta.column(j)).collect();
    let check = |a: usize, b: usize| -> bool {
        let lhs = theta
            .mul_vec(&alg.bracket(&alg.unit(a), &alg.unit(b)))
            .expect("square");
        lhs == alg.bracket(&cols[a], &cols[b])
    };
    if n <= 60 {
        for a in 0..n {
            for b in a + 1..n {
                if !check(a, b) {
                    return Err(Error::InvalidInvolution(format!(
                        "not a homomorphism on basis pair ({a}, {b})"
                    )));
                }
            }
        }
    } else {
        let mut s = crate::sampling::Sampler::new(0x5eed, 1);
        for _ in 0..500 {
            let (a, b) = (s.index(n), s.index(n));
            if !check(a, b) {
                return Err(Error::InvalidInvolution(format!(
                    "not a homomorphism on basis pair ({a}, {b})"
                )));
            }
        }
    }
    Ok(())
}

/// `ker(θ - 1)`.
pub fn fixed_space(theta: &RationalMatrix) -> Subspace {
    let n = theta.rows();
    rank_and_kernel(&theta.sub(&RationalMatrix::identity(n)).expect("square")).1
}

/// `ker(θ + 1)`.
pub fn minus_one_space(theta: &RationalMatrix) -> Subspace {
    let n = theta.rows();
    rank_and_kernel(&theta.add(&RationalMatrix::identity(n)).expect("square")).1
}

pub fn perp(e: &Embedding) -> Result<Subspace> {
    let alg = e.ambient();
    if !alg.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let rows: Vec<Vec<Rational>> = e.h.basis().iter().map(|v| alg.form_row(v)).collect();
    let m = RationalMatrix::from_rows(alg.dim(), rows)?;
    let (rank, ker) = rank_and_kernel(&m);
    if rank != e.dim() {
        return Err(Error::DegenerateForm);
    }
    Ok(ker)
}

/// `{v ∈ sub : [v, x] = 0 for all x in xs}`.
pub fn centralizer_in(alg: &LieAlgebra, sub: &Subspace, xs: &[&[Rational]]) -> Subspace {
    let n = alg.dim();
    if sub.is_zero() {
        return Subspace::zero(n);
    }
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(sub.dim());
    for b in sub.basis() {
        let mut col = Vec::with_capacity(n * xs.len());
        for x in xs {
            col.extend(alg.bracket(b, x));
        }
        columns.push(col);
    }
    let m = RationalMatrix::from_columns(n * xs.len(), &columns).expect("uniform columns");
    let (_, ker) = rank_and_kernel(&m);
    let vecs: Vec<Vec<Rational>> = ker.basis().iter().map(|c| sub.combine(c)).collect();
    Subspace::span(n, &vecs).expect("ambient vectors")
}

/// `{h ∈ h : [h, x] = 0}`.
pub fn stabilizer(e: &Embedding, x: &[Rational]) -> Subspace {
    centralizer_in(e.ambient(), &e.h, &[x])
}

pub fn is_abelian(alg: &LieAlgebra, s: &Subspace) -> bool {
    let b = s.basis();
    (0..b.len()).all(|i| {
        (i + 1..b.len()).all(|j| alg.bracket(&b[i], &b[j]).iter().all(Zero::is_zero))
    })
}

/// Minimum over `cfg.trials` samples of `dim z_s(y)` for `y ∈ s`; the rank
/// of a reductive `s`.
pub fn sampled_rank(alg: &LieAlgebra, s: &Subspace, cfg: &Config) -> usize {
    if s.is_zero() {
        return 0;
    }
    let mut rng = cfg.rng();
    let mut best = s.dim();
    for _ in 0..cfg.trials.max(1) {
        let y = rng.point_in(s);
        best = best.min(centralizer_in(alg, s, &[&y]).dim());
    }
    best
}

pub fn generic_stabilizer(e: &Embedding, cfg: &Config) -> Result<GenericStabilizerReport> {
    if cfg.trials == 0 {
        return Err(Error::GenericityFailure("trials must be at least 1".into()));
    }
    let perp = e.perp()?;
    let mut rng = cfg.rng();
    let mut best: Option<(Subspace, Vec<Rational>)> = None;
    for _ in 0..cfg.trials {
        let x = rng.point_in(&perp);
        let stab = e.stabilizer(&x);
        if best.as_ref().is_none_or(|(b, _)| stab.dim() < b.dim()) {
            best = Some((stab, x));
        }
    }
    let (stab, sample) = best.expect("at least one trial");
    let alg = e.ambient();
    let is_abelian = is_abelian(alg, &stab);
    let reductive_rank = if is_abelian {
        stab.dim()
    } else {
        sampled_rank(alg, &stab, &cfg.fork(1))
    };
    let single = cfg.failure_bound(alg.dim());
    let failure_bound = if is_abelian { single } else { &single + &single };
    Ok(GenericStabilizerReport {
        dim: stab.dim(),
        stab_basis: stab,
        is_abelian,
        reductive_rank,
        trials: cfg.trials,
        coefficient_bound: cfg.coeff_bound,
        failure_bound,
        sample,
    })
}

/// Splits a reductive `h` into its center and simple ideals.
///
/// The semisimple part `s = [h, h]` is split with its centroid: the
/// endomorphisms of `s` commuting with `ad(s)`, which act by one scalar per
/// simple ideal. A centroid element is pinned down by its restriction `N` to a
/// Cartan subalgebra `c = z_s(x)`, because `c` generates `s` as an
/// `ad(s)`-module; the linear conditions on `N` come from commuting with
/// `ad_y` and `ad_w` for random `y, w`. The eigenspaces of a random `N`
/// generate the ideals.
pub fn decompose_reductive(e: &Embedding, cfg: &Config) -> Result<IdealDecomposition> {
    let alg = e.ambient();
    let n = alg.dim();
    let h = e.h();
    let s = e.derived();
    let mut rng = cfg.rng();
    let (y0, w0) = (rng.point_in(h), rng.point_in(h));
    let center = centralizer_in(alg, h, &[&y0, &w0]);
    for z in center.basis() {
        for b in h.basis() {
            if !alg.bracket(z, b).iter().all(Zero::is_zero) {
                return Err(Error::GenericityFailure("sampled center is too large".into()));
            }
        }
    }
    if !center.intersection(&s)?.is_zero() || center.dim() + s.dim() != h.dim() {
        return Err(Error::NotReductive(format!(
            "center dim {}, derived dim {}, total {}",
            center.dim(),
            s.dim(),
            h.dim()
        )));
    }
    if s.is_zero() {
        return Ok(IdealDecomposition {
            center,
            simple_ideals: Vec::new(),
        });
    }
    for attempt in 0..5u64 {
        if let Some(ideals) = split_semisimple(alg, &s, &cfg.fork(100 + attempt))? {
            return Ok(IdealDecomposition {
                center,
                simple_ideals: ideals,
            });
        }
    }
    let _ = n;
    Err(Error::GenericityFailure("could not split the semisimple part".into()))
}

/// Matrix of `ad_x` on `s` in the canonical basis of `s`.
fn ad_on(alg: &LieAlgebra, s: &Subspace, x: &[Rational]) -> Result<RationalMatrix> {
    let cols: Vec<Vec<Rational>> = s
        .basis()
        .iter()
        .map(|b| s.coordinates(&alg.bracket(x, b)).ok_or(Error::NotClosed))
        .collect::<Result<_>>()?;
    RationalMatrix::from_columns(s.dim(), &cols)
}

fn split_semisimple(alg: &LieAlgebra, s: &Subspace, cfg: &Config) -> Result<Option<Vec<Subspace>>> {
    let ns = s.dim();
    let mut rng = cfg.rng();
    let x = rng.point_in(s);
    let gens_g = [rng.point_in(s), rng.point_in(s)];
    let gens: Vec<RationalMatrix> = gens_g
        .iter()
        .map(|g| ad_on(alg, s, g))
        .collect::<Result<_>>()?;
    let cartan = rank_and_kernel(&ad_on(alg, s, &x)?).1;
    let c_basis = cartan.basis().to_vec();
    let r = c_basis.len();

    // Words in the generators applied to the Cartan basis until they span s.
    // Each kept basis vector is W(c_j); we store (images of all c_k under W, j).
    let mut span = Subspace::zero(ns);
    let mut kept: Vec<(Vec<Vec<Rational>>, usize)> = Vec::new();
    let mut queue: Vec<Vec<Vec<Rational>>> = Vec::new();
    for (j, c) in c_basis.iter().enumerate() {
        if span.insert(c) {
            kept.push((c_basis.clone(), j));
        }
    }
    queue.push(c_basis.clone());
    let mut head = 0;
    while span.dim() < ns && head < queue.len() {
        let images = queue[head].clone();
        head += 1;
        for g in &gens {
            let next: Vec<Vec<Rational>> = images.iter().map(|v| g.mul_vec(v).expect("dims")).collect();
            let mut useful = false;
            for (j, v) in next.iter().enumerate() {
                if span.insert(v) {
                    kept.push((next.clone(), j));
                    useful = true;
                }
            }
            if useful {
                queue.push(next);
            }
        }
    }
    if span.dim() < ns {
        return Ok(None);
    }

    // Columns v_b of P; coefficients of any vector in this basis via P^-1.
    let p_cols: Vec<Vec<Rational>> = kept.iter().map(|(imgs, j)| imgs[*j].clone()).collect();
    let p_inv = RationalMatrix::from_columns(ns, &p_cols)?
        .inverse()
        .ok_or_else(|| Error::Internal("word basis is singular".into()))?;

    // Unknown N[k][j] at column k * r + j.  M v_b = Σ_k N[k][j_b] U_{b,k}.
    let unknowns = r * r;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (imgs, jb) in &kept {
        let vb = &imgs[*jb];
        for g in &gens {
            let gvb = g.mul_vec(vb)?;
            let a = p_inv.mul_vec(&gvb)?;
            // Block of ns rows, one per coordinate.
            let mut block = vec![vec![Rational::zero(); unknowns]; ns];
            for (bp, coeff) in a.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (imgs_p, jp) = &kept[bp];
                for (k, u) in imgs_p.iter().enumerate() {
                    for (row, ui) in block.iter_mut().zip(u) {
                        if !ui.is_zero() {
                            row[k * r + jp] += coeff * ui;
                        }
                    }
                }
            }
            for (k, u) in imgs.iter().enumerate() {
                let gu = g.mul_vec(u)?;
                for (row, gi) in block.iter_mut().zip(&gu) {
                    if !gi.is_zero() {
                        row[k * r + jb] -= gi;
                    }
                }
            }
            rows.extend(block.into_iter().filter(|row| row.iter().any(|v| !v.is_zero())));
        }
    }
    let eq = RationalMatrix::from_rows(unknowns, rows)?;
    let solutions = rank_and_kernel(&eq).1;
    let k = solutions.dim();
    if k == 0 {
        return Err(Error::Internal("centroid is empty".into()));
    }
    if k == 1 {
        return Ok(Some(vec![s.clone()]));
    }
    for _ in 0..4 {
        let coeffs = rng.coefficients(k);
        let nvec = solutions.combine(&coeffs);
        let mut nmat = RationalMatrix::zeros(r, r);
        for kk in 0..r {
            for j in 0..r {
                nmat[(kk, j)] = nvec[kk * r + j].clone();
            }
        }
        let Some(roots) = poly::rational_roots(&poly::char_poly(&nmat)) else {
            return Err(Error::NotReductive("centroid has irrational eigenvalues".into()));
        };
        if roots.len() != k {
            continue;
        }
        let mut pieces = Vec::with_capacity(k);
        for lambda in roots {
            let mut shifted = nmat.clone();
            for i in 0..r {
                shifted[(i, i)] -= &lambda;
            }
            let eig = rank_and_kernel(&shifted).1;
            let mut ideal = Subspace::zero(ns);
            let mut frontier: Vec<Vec<Rational>> = Vec::new();
            for c in eig.basis() {
                let v = c
                    .iter()
                    .zip(&c_basis)
                    .fold(vec![Rational::zero(); ns], |mut acc, (ci, cb)| {
                        for (a, b) in acc.iter_mut().zip(cb) {
                            *a += ci * b;
                        }
                        acc
                    });
                if ideal.insert(&v) {
                    frontier.push(v);
                }
            }
            while let Some(v) = frontier.pop() {
                for g in &gens {
                    let w = g.mul_vec(&v)?;
                    if ideal.insert(&w) {
                        frontier.push(w);
                    }
                }
            }
            let in_g: Vec<Vec<Rational>> = ideal.basis().iter().map(|c| s.combine(c)).collect();
            pieces.push(Subspace::span(alg.dim(), &in_g)?);
        }
        if pieces.iter().map(Subspace::dim).sum::<usize>() != ns {
            continue;
        }
        let all_ideals = pieces.iter().all(|p| {
            s.basis().iter().all(|a| {
                p.basis()
                    .iter()
                    .all(|b| p.contains_vector(&alg.bracket(a, b)))
            })
        });
        if all_ideals {
            return Ok(Some(pieces));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Named constructors.

fn unit_matrix(n: usize, i: usize, j: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n, n);
    m[(i, j)] = Rational::one();
    m
}

fn diag_matrix(entries: &[Rational]) -> RationalMatrix {
    let n = entries.len();
    let mut m = RationalMatrix::zeros(n, n);
    for (i, v) in entries.iter().enumerate() {
        m[(i, i)] = v.clone();
    }
    m
}

/// `m` placed as the block starting at `(offset, offset)` of an `n × n` zero
/// matrix.
fn place(m: &RationalMatrix, n: usize, offset: usize) -> RationalMatrix {
    let mut out = RationalMatrix::zeros(n, n);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out[(offset + i, offset + j)] = m[(i, j)].clone();
        }
    }
    out
}

/// Element of `alg` with the given per-factor matrices (missing ones zero).
fn element(alg: &LieAlgebra, parts: &[(usize, RationalMatrix)]) -> Result<Vec<Rational>> {
    let mut ms: Vec<RationalMatrix> = alg
        .factors()
        .iter()
        .map(|f| RationalMatrix::zeros(f.matrix_size(), f.matrix_size()))
        .collect();
    for (f, m) in parts {
        ms[*f] = ms[*f].add(m)?;
    }
    Ok(alg.from_matrices(&ms)?.into_coords())
}

/// Basis vectors of factor `f` whose label satisfies `pred`.
fn labelled(alg: &LieAlgebra, f: usize, pred: impl Fn(usize, usize) -> bool) -> Vec<Vec<Rational>> {
    alg.factor_range(f)
        .filter(|&k| {
            let (i, j) = alg.label(k);
            pred(i, j)
        })
        .map(|k| alg.unit(k).into_coords())
        .collect()
}

/// Coordinate matrix of the automorphism induced by a per-factor matrix map.
fn involution_from_map(
    alg: &LieAlgebra,
    map: impl Fn(&[RationalMatrix]) -> Vec<RationalMatrix>,
) -> Result<RationalMatrix> {
    let n = alg.dim();
    let mut theta = RationalMatrix::zeros(n, n);
    for j in 0..n {
        let img = alg.from_matrices(&map(&alg.to_matrices(&alg.unit(j))))?;
        for (i, v) in img.iter().enumerate() {
            theta[(i, j)] = v.clone();
        }
    }
    Ok(theta)
}

/// `X ↦ g X g^{-1}` on factor `f`, identity elsewhere.
fn conjugation(alg: &LieAlgebra, f: usize, g: &RationalMatrix) -> Result<RationalMatrix> {
    let g_inv = g
        .inverse()
        .ok_or_else(|| Error::InvalidInvolution("conjugating matrix is singular".into()))?;
    involution_from_map(alg, |ms| {
        let mut out = ms.to_vec();
        out[f] = g.mul(&ms[f]).and_then(|m| m.mul(&g_inv)).expect("square");
        out
    })
}

fn signs(n: usize, minus: impl Fn(usize) -> bool) -> RationalMatrix {
    let d: Vec<Rational> = (0..n)
        .map(|i| if minus(i) { -Rational::one() } else { Rational::one() })
        .collect();
    diag_matrix(&d)
}

fn algebra(factors: &[SimpleFactor]) -> Result<Arc<LieAlgebra>> {
    Ok(Arc::new(LieAlgebra::new(factors, 0)?))
}

fn ints(params: &[Param], name: &str, count: usize) -> Result<Vec<usize>> {
    if params.len() != count {
        return Err(invalid(name, format!("expected {count} integer parameters, got {}", params.len())));
    }
    params
        .iter()
        .map(|p| match p {
            Param::Int(v) if *v >= 0 => Ok(*v as usize),
            other => Err(invalid(name, format!("expected a nonnegative integer, got {other:?}"))),
        })
        .collect()
}

fn list(p: &Param, name: &str) -> Result<Vec<usize>> {
    match p {
        Param::List(v) if v.iter().all(|&x| x > 0) => Ok(v.iter().map(|&x| x as usize).collect()),
        other => Err(invalid(name, format!("expected a list of positive integers, got {other:?}"))),
    }
}

fn p_int(v: usize) -> Param {
    Param::Int(v as i64)
}

/// Names of the supported constructors.
pub const CONSTRUCTORS: &[&str] = &[
    "block_sgl",
    "block_sl",
    "sl_upper",
    "so_in_sl",
    "sp_in_sl",
    "sp_in_sl_odd",
    "sp_c_in_sl_odd",
    "gl_in_sp",
    "gl_in_so",
    "so_block",
    "diagonal",
    "levi",
    "sp_block",
    "sp_torus_split",
    "sp_pair_diag",
    "sp_pair_diag4",
    "sp_triple_diag",
    "sp_chain",
    "sl_sp_gl",
    "sl_sp_sl",
    "sl_pair_diag",
    "so_pair_diag",
    "example_516",
];

/// Builds a named embedding together with its ambient algebra.
pub fn construct(name: &str, params: &[Param]) -> Result<Embedding> {
    match name {
        "block_sgl" => {
            let v = ints(params, name, 2)?;
            block_sgl(v[0], v[1])
        }
        "block_sl" => {
            let v = ints(params, name, 2)?;
            block_sl(v[0], v[1])
        }
        "sl_upper" => {
            let v = ints(params, name, 2)?;
            sl_upper(v[0], v[1])
        }
        "so_in_sl" => so_in_sl(ints(params, name, 1)?[0]),
        "sp_in_sl" => sp_in_sl(ints(params, name, 1)?[0]),
        "sp_in_sl_odd" => sp_in_sl_odd(ints(params, name, 1)?[0], false),
        "sp_c_in_sl_odd" => sp_in_sl_odd(ints(params, name, 1)?[0], true),
        "gl_in_sp" => gl_in_sp(ints(params, name, 1)?[0]),
        "gl_in_so" => gl_in_so(ints(params, name, 1)?[0]),
        "so_block" => {
            let v = ints(params, name, 2)?;
            so_block(v[0], v[1])
        }
        "diagonal" => match params {
            [Param::Factor(f)] => diagonal(*f),
            _ => Err(invalid(name, "expected one simple type {family, rank}")),
        },
        "levi" => match params {
            [n, comp] => {
                let n = ints(core::slice::from_ref(n), name, 1)?[0];
                levi(n, &list(comp, name)?)
            }
            _ => Err(invalid(name, "expected n and a composition list")),
        },
        "sp_block" => match params {
            [n, sizes] => {
                let n = ints(core::slice::from_ref(n), name, 1)?[0];
                sp_block(n, &list(sizes, name)?)
            }
            _ => Err(invalid(name, "expected n and a list of block sizes")),
        },
        "sp_torus_split" => sp_torus_split(ints(params, name, 1)?[0]),
        "sp_pair_diag" => {
            let v = ints(params, name, 2)?;
            sp_pair_diag(v[0], v[1])
        }
        "sp_pair_diag4" => sp_pair_diag4(ints(params, name, 1)?[0]),
        "sp_triple_diag" => {
            let v = ints(params, name, 3)?;
            sp_triple_diag(v[0], v[1], v[2])
        }
        "sp_chain" => {
            let v = ints(params, name, 2)?;
            sp_chain(v[0], v[1])
        }
        "sl_sp_gl" => {
            let v = ints(params, name, 2)?;
            sl_sp(v[0], v[1], true)
        }
        "sl_sp_sl" => {
            let v = ints(params, name, 2)?;
            sl_sp(v[0], v[1], false)
        }
        "sl_pair_diag" => sl_pair_diag(ints(params, name, 1)?[0]),
        "so_pair_diag" => so_pair_diag(ints(params, name, 1)?[0]),
        "example_516" => example_516(ints(params, name, 1)?[0]),
        other => Err(Error::UnknownConstructor(other.into())),
    }
}

/// Normal form of a constructor call: the same `(name, params)` the
/// constructor records as its origin.
pub fn canonical_origin(name: &str, params: &[Param]) -> Origin {
    let sorted = |a: i64, b: i64, ascending: bool| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if ascending {
            vec![Param::Int(lo), Param::Int(hi)]
        } else {
            vec![Param::Int(hi), Param::Int(lo)]
        }
    };
    let (name, params) = match (name, params) {
        ("block_sgl" | "block_sl", [Param::Int(a), Param::Int(b)]) => (name, sorted(*a, *b, true)),
        ("so_block", [Param::Int(a), Param::Int(b)]) => (name, sorted(*a, *b, false)),
        ("levi", [_, Param::List(c)]) if c.len() == 2 => ("block_sgl", sorted(c[0], c[1], true)),
        _ => (name, params.to_vec()),
    };
    Origin {
        constructor: name.into(),
        params,
    }
}

/// Builds a named embedding and checks it lives in `ambient`.
pub fn embed(ambient: &Arc<LieAlgebra>, name: &str, params: &[Param]) -> Result<Embedding> {
    let e = construct(name, params)?;
    if e.ambient().factors() != ambient.factors() || ambient.center_dim() != 0 {
        return Err(invalid(
            name,
            format!(
                "constructor builds inside {}, but the ambient is {}",
                e.ambient().name(),
                ambient.name()
            ),
        ));
    }
    Ok(e.rebase(ambient.clone()))
}

/// `s(gl_p ⊕ gl_q) ⊂ sl_{p+q}`, fixed points of `Ad diag(I_p, -I_q)`.
pub fn block_sgl(p: usize, q: usize) -> Result<Embedding> {
    let (p, q) = if p <= q { (p, q) } else { (q, p) };
    if p == 0 {
        return Err(invalid("block_sgl", "block sizes must be positive"));
    }
    let n = p + q;
    let alg = algebra(&[SimpleFactor::sl(n)?])?;
    let theta = conjugation(&alg, 0, &signs(n, |i| i >= p))?;
    let h = fixed_space(&theta);
    let e = Embedding::new(alg.clone(), h.basis(), Some(theta))?;
    let first = labelled(&alg, 0, |i, j| i < p && j < p && !(i == j && i + 1 >= p));
    let second = labelled(&alg, 0, |i, j| i >= p && j >= p && !(i == j && i + 1 >= n));
    let mut center = vec![rat(q as i64); p];
    center.extend(vec![rat(-(p as i64)); q]);
    let z = element(&alg, &[(0, diag_matrix(&center))])?;
    e.named(
        "block_sgl",
        vec![p_int(p), p_int(q)],
        format!("s(gl{p}+gl{q}) in sl{n}"),
        &[Tag::Levi],
    )
    .with_ideals(&[z], &[first, second])
}

/// `sl_p ⊕ sl_q ⊂ sl_{p+q}` as diagonal blocks (no center).
pub fn block_sl(p: usize, q: usize) -> Result<Embedding> {
    let (p, q) = if p <= q { (p, q) } else { (q, p) };
    if p == 0 {
        return Err(invalid("block_sl", "block sizes must be positive"));
    }
    let n = p + q;
    let alg = algebra(&[SimpleFactor::sl(n)?])?;
    let first = labelled(&alg, 0, |i, j| i < p && j < p && !(i == j && i + 1 >= p));
    let second = labelled(&alg, 0, |i, j| i >= p && j >= p && !(i == j && i + 1 >= n));
    let mut vecs = first.clone();
    vecs.extend(second.iter().cloned());
    Embedding::new(alg, &vecs, None)?
        .named("block_sl", vec![p_int(p), p_int(q)], format!("sl{p}+sl{q} in sl{n}"), &[])
        .with_ideals(&[], &[first, second])
}

/// `sl_k ⊂ sl_n` as the upper-left block.
pub fn sl_upper(k: usize, n: usize) -> Result<Embedding> {
    if k < 2 || k > n {
        return Err(invalid("sl_upper", "need 2 <= k <= n"));
    }
    let alg = algebra(&[SimpleFactor::sl(n)?])?;
    let vecs = labelled(&alg, 0, |i, j| i < k && j < k && !(i == j && i + 1 >= k));
    Embedding::new(alg, &vecs, None)?
        .named("sl_upper", vec![p_int(k), p_int(n)], format!("sl{k} in sl{n}"), &[])
        .with_ideals(&[], core::slice::from_ref(&vecs))
}

/// `so_n ⊂ sl_n` as skew-symmetric matrices, fixed points of `X ↦ -Xᵀ`.
pub fn so_in_sl(n: usize) -> Result<Embedding> {
    if n < 2 {
        return Err(invalid("so_in_sl", "need n >= 2"));
    }
    let alg = algebra(&[SimpleFactor::sl(n)?])?;
    let theta = involution_from_map(&alg, |ms| ms.iter().map(|m| m.transpose().scale(&rat(-1))).collect())?;
    Ok(Embedding::from_involution(alg, theta)?.named(
        "so_in_sl",
        vec![p_int(n)],
        format!("so{n} in sl{n}"),
        &[],
    ))
}

/// `sp_2n ⊂ sl_2n`, fixed points of `X ↦ -J⁻¹ Xᵀ J`.
pub fn sp_in_sl(n: usize) -> Result<Embedding> {
    let sp = SimpleFactor::sp(2 * n).map_err(|_| invalid("sp_in_sl", "need n >= 1"))?;
    let j = sp.gram().expect("sp has a form");
    let j_inv = j.inverse().expect("nondegenerate");
    let alg = algebra(&[SimpleFactor::sl(2 * n)?])?;
    let theta = involution_from_map(&alg, |ms| {
        ms.iter()
            .map(|m| j_inv.mul(&m.transpose()).and_then(|x| x.mul(&j)).expect("square").scale(&rat(-1)))
            .collect()
    })?;
    Ok(Embedding::from_involution(alg, theta)?.named(
        "sp_in_sl",
        vec![p_int(n)],
        format!("sp{} in sl{}", 2 * n, 2 * n),
        &[],
    ))
}

/// Basis matrices of `sp_2n` in its defining representation.
fn sp_matrices(n: usize) -> Result<Vec<RationalMatrix>> {
    let sp = algebra(&[SimpleFactor::sp(2 * n)?])?;
    Ok((0..sp.dim()).map(|k| sp.factor_matrix(0, &sp.unit(k))).collect())
}

/// `sp_2n ⊂ sl_{2n+1}` in the upper-left block, optionally with the center
/// `diag(1, ..., 1, -2n)`.
pub fn sp_in_sl_odd(n: usize, with_center: bool) -> Result<Embedding> {
    let name = if with_center { "sp_c_in_sl_odd" } else { "sp_in_sl_odd" };
    if n == 0 {
        return Err(invalid(name, "need n >= 1"));
    }
    let m = 2 * n + 1;
    let alg = algebra(&[SimpleFactor::sl(m)?])?;
    let sp: Vec<Vec<Rational>> = sp_matrices(n)?
        .iter()
        .map(|x| element(&alg, &[(0, place(x, m, 0))]))
        .collect::<Result<_>>()?;
    let mut vecs = sp.clone();
    let mut center = Vec::new();
    if with_center {
        let mut d = vec![rat(1); m];
        d[m - 1] = rat(-(2 * n as i64));
        center.push(element(&alg, &[(0, diag_matrix(&d))])?);
        vecs.extend(center.iter().cloned());
    }
    let label = if with_center {
        format!("sp{}+C in sl{m}", 2 * n)
    } else {
        format!("sp{} in sl{m}", 2 * n)
    };
    Embedding::new(alg, &vecs, None)?
        .named(name, vec![p_int(n)], label, &[Tag::Spherical])
        .with_ideals(&center, &[sp])
}

/// `gl_n ⊂ sp_2n` (Levi), fixed points of `Ad diag(I_n, -I_n)`.
pub fn gl_in_sp(n: usize) -> Result<Embedding> {
    let alg = algebra(&[SimpleFactor::sp(2 * n).map_err(|_| invalid("gl_in_sp", "need n >= 1"))?])?;
    let theta = conjugation(&alg, 0, &signs(2 * n, |i| i >= n))?;
    let e = Embedding::from_involution(alg.clone(), theta)?;
    let sl = labelled(&alg, 0, |i, j| i < n && j < n && i != j);
    let mut sl_full = sl;
    // Traceless diagonal part of gl_n: E_ii - E_{i+1,i+1} in the first block.
    for i in 0..n.saturating_sub(1) {
        let mut d = vec![Rational::zero(); 2 * n];
        d[i] = rat(1);
        d[i + 1] = rat(-1);
        d[2 * n - 1 - i] = rat(-1);
        d[2 * n - 2 - i] = rat(1);
        sl_full.push(element(&alg, &[(0, diag_matrix(&d))])?);
    }
    let z = element(&alg, &[(0, signs(2 * n, |i| i >= n))])?;
    e.named("gl_in_sp", vec![p_int(n)], format!("gl{n} in sp{}", 2 * n), &[Tag::Levi])
        .with_ideals(&[z], &[sl_full])
}

/// `gl_{⌊m/2⌋} ⊂ so_m`: the Levi `gl_n ⊂ so_2n` (symmetric) or
/// `gl_n ⊂ so_{2n+1}` (spherical, not symmetric).
pub fn gl_in_so(m: usize) -> Result<Embedding> {
    let so = SimpleFactor::so(m).map_err(|_| invalid("gl_in_so", "need m = 3 or m >= 5"))?;
    let n = m / 2;
    let alg = algebra(&[so])?;
    let vecs = labelled(&alg, 0, |i, j| i < n && j < n);
    let label = format!("gl{n} in so{m}");
    if m.is_multiple_of(2) {
        let theta = conjugation(&alg, 0, &signs(m, |i| i >= n))?;
        Ok(Embedding::new(alg, &vecs, Some(theta))?.named("gl_in_so", vec![p_int(m)], label, &[Tag::Levi]))
    } else {
        Ok(Embedding::new(alg, &vecs, None)?.named("gl_in_so", vec![p_int(m)], label, &[Tag::Spherical]))
    }
}

/// `so_p ⊕ so_q ⊂ so_{p+q}` (`p >= q >= 1`), fixed points of conjugation by
/// an involution of the antidiagonal form with `-1`-eigenspace of dimension
/// `q`.
pub fn so_block(p: usize, q: usize) -> Result<Embedding> {
    let (p, q) = if p >= q { (p, q) } else { (q, p) };
    if q == 0 {
        return Err(invalid("so_block", "both blocks must be nonempty"));
    }
    let n = p + q;
    let so = SimpleFactor::so(n).map_err(|_| invalid("so_block", "p + q must be 3 or at least 5"))?;
    let alg = algebra(&[so])?;
    let mut g = RationalMatrix::identity(n);
    let mut remaining = q;
    if q % 2 == 1 {
        if n % 2 == 1 {
            g[(n / 2, n / 2)] = rat(-1);
        } else {
            // Swap the innermost pair: e_s - e_s' spans the odd part.
            let s = n / 2 - 1;
            g[(s, s)] = Rational::zero();
            g[(s + 1, s + 1)] = Rational::zero();
            g[(s, s + 1)] = Rational::one();
            g[(s + 1, s)] = Rational::one();
        }
        remaining -= 1;
    }
    for k in 0..remaining / 2 {
        g[(k, k)] = rat(-1);
        g[(n - 1 - k, n - 1 - k)] = rat(-1);
    }
    let theta = conjugation(&alg, 0, &g)?;
    Ok(Embedding::from_involution(alg, theta)?.named(
        "so_block",
        vec![p_int(p), p_int(q)],
        format!("so{p}+so{q} in so{n}"),
        &[],
    ))
}

/// `diag(s) ⊂ s ⊕ s`, fixed points of the factor swap.
pub fn diagonal(s: SimpleFactor) -> Result<Embedding> {
    let s = SimpleFactor::new(s.family, s.rank)?;
    let alg = algebra(&[s, s])?;
    let d = s.dim();
    let vecs: Vec<Vec<Rational>> = (0..d)
        .map(|k| {
            let mut v = vec![Rational::zero(); 2 * d];
            v[k] = Rational::one();
            v[d + k] = Rational::one();
            v
        })
        .collect();
    let theta = involution_from_map(&alg, |ms| vec![ms[1].clone(), ms[0].clone()])?;
    Embedding::new(alg, &vecs, Some(theta))?
        .named("diagonal", vec![Param::Factor(s)], format!("diag({}) in {0}+{0}", s.name()), &[])
        .with_ideals(&[], core::slice::from_ref(&vecs))
}

/// Block-diagonal Levi `s(gl_{n_1} ⊕ ... ⊕ gl_{n_k}) ⊂ sl_n`. Two blocks give
/// `block_sgl`.
pub fn levi(n: usize, composition: &[usize]) -> Result<Embedding> {
    if composition.iter().sum::<usize>() != n || composition.contains(&0) {
        return Err(invalid("levi", format!("{composition:?} is not a composition of {n}")));
    }
    if composition.len() == 2 {
        return block_sgl(composition[0], composition[1]);
    }
    let alg = algebra(&[SimpleFactor::sl(n)?])?;
    let mut block_of = Vec::with_capacity(n);
    for (b, &size) in composition.iter().enumerate() {
        block_of.extend(core::iter::repeat_n(b, size));
    }
    let vecs = labelled(&alg, 0, |i, j| {
        if i == j {
            true
        } else {
            block_of[i] == block_of[j]
        }
    });
    let mut ideals = Vec::new();
    for b in 0..composition.len() {
        ideals.push(labelled(&alg, 0, |i, j| {
            block_of[i] == b && block_of[j] == b && !(i == j && (i + 1 >= n || block_of[i + 1] != b))
        }));
    }
    let last = composition.len() - 1;
    let mut center = Vec::new();
    for b in 0..last {
        let d: Vec<Rational> = (0..n)
            .map(|i| {
                if block_of[i] == b {
                    rat(composition[last] as i64)
                } else if block_of[i] == last {
                    rat(-(composition[b] as i64))
                } else {
                    Rational::zero()
                }
            })
            .collect();
        center.push(element(&alg, &[(0, diag_matrix(&d))])?);
    }
    let parts: Vec<String> = composition.iter().map(|c| format!("gl{c}")).collect();
    let params = vec![p_int(n), Param::List(composition.iter().map(|&c| c as i64).collect())];
    let label = format!("s({}) in sl{n}", parts.join("+"));
    Embedding::new(alg, &vecs, None)?
        .named("levi", params, label, &[Tag::Levi])
        .with_ideals(&center, &ideals)
}

/// Index set of the given pairs `(k, 2n-1-k)` in `sp_2n`.
fn pair_indices(n: usize, pairs: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = pairs.iter().flat_map(|&k| [k, 2 * n - 1 - k]).collect();
    idx.sort_unstable();
    idx
}

/// Basis of `sp` on the span of the given pairs, inside factor `f`.
fn sp_on_pairs(alg: &LieAlgebra, f: usize, pairs: &[usize]) -> Vec<Vec<Rational>> {
    let n = alg.factors()[f].matrix_size() / 2;
    let idx = pair_indices(n, pairs);
    labelled(alg, f, |i, j| idx.contains(&i) && idx.contains(&j))
}

/// `(e, f, h)` of the `sp_2` on pair `k` of an `sp_2n` factor, as matrices.
fn sp2_on_pair(n: usize, k: usize) -> [RationalMatrix; 3] {
    let m = 2 * n;
    let kp = m - 1 - k;
    let mut h = unit_matrix(m, k, k);
    h[(kp, kp)] = rat(-1);
    [unit_matrix(m, k, kp), unit_matrix(m, kp, k), h]
}

/// `(e, f, h)` of the `sl_2` on indices `a, a+1` of `sl_m`.
fn sl2_on_block(m: usize, a: usize) -> [RationalMatrix; 3] {
    let mut h = unit_matrix(m, a, a);
    h[(a + 1, a + 1)] = rat(-1);
    [unit_matrix(m, a, a + 1), unit_matrix(m, a + 1, a), h]
}

/// Diagonal `sl_2` given by corresponding triples in several factors.
fn diagonal_sl2(alg: &LieAlgebra, copies: &[(usize, [RationalMatrix; 3])]) -> Result<Vec<Vec<Rational>>> {
    (0..3)
        .map(|t| {
            let parts: Vec<(usize, RationalMatrix)> =
                copies.iter().map(|(f, ms)| (*f, ms[t].clone())).collect();
            element(alg, &parts)
        })
        .collect()
}

/// `sp_{2a_1} ⊕ ... ⊕ sp_{2a_k} ⊂ sp_2n` on consecutive pairs.
pub fn sp_block(n: usize, sizes: &[usize]) -> Result<Embedding> {
    if sizes.iter().sum::<usize>() != n || sizes.contains(&0) || sizes.is_empty() {
        return Err(invalid("sp_block", format!("{sizes:?} does not partition {n}")));
    }
    let alg = algebra(&[SimpleFactor::sp(2 * n)?])?;
    let mut vecs = Vec::new();
    let mut ideals = Vec::new();
    let mut start = 0;
    for &a in sizes {
        let pairs: Vec<usize> = (start..start + a).collect();
        let piece = sp_on_pairs(&alg, 0, &pairs);
        vecs.extend(piece.iter().cloned());
        ideals.push(piece);
        start += a;
    }
    let parts: Vec<String> = sizes.iter().map(|a| format!("sp{}", 2 * a)).collect();
    let params = vec![p_int(n), Param::List(sizes.iter().map(|&a| a as i64).collect())];
    Embedding::new(alg, &vecs, None)?
        .named("sp_block", params, format!("{} in sp{}", parts.join("+"), 2 * n), &[])
        .with_ideals(&[], &ideals)
}

/// `sp_{2n-2} ⊕ C ⊂ sp_2n`, the `C` being the torus of the complementary
/// `sp_2`.
pub fn sp_torus_split(n: usize) -> Result<Embedding> {
    if n < 2 {
        return Err(invalid("sp_torus_split", "need n >= 2"));
    }
    let alg = algebra(&[SimpleFactor::sp(2 * n)?])?;
    let pairs: Vec<usize> = (0..n - 1).collect();
    let sp = sp_on_pairs(&alg, 0, &pairs);
    let z = vec![element(&alg, &[(0, sp2_on_pair(n, n - 1)[2].clone())])?];
    let mut vecs = sp.clone();
    vecs.extend(z.iter().cloned());
    Embedding::new(alg, &vecs, None)?
        .named(
            "sp_torus_split",
            vec![p_int(n)],
            format!("sp{}+C in sp{}", 2 * n - 2, 2 * n),
            &[Tag::Spherical],
        )
        .with_ideals(&z, &[sp])
}

/// `sp_{2m-2} ⊕ sp_2 ⊕ sp_{2n-2} ⊂ sp_2m ⊕ sp_2n` with the `sp_2` diagonal.
pub fn sp_pair_diag(m: usize, n: usize) -> Result<Embedding> {
    if m == 0 || n == 0 {
        return Err(invalid("sp_pair_diag", "need m, n >= 1"));
    }
    let alg = algebra(&[SimpleFactor::sp(2 * m)?, SimpleFactor::sp(2 * n)?])?;
    let a = sp_on_pairs(&alg, 0, &(0..m - 1).collect::<Vec<_>>());
    let b = sp_on_pairs(&alg, 1, &(1..n).collect::<Vec<_>>());
    let d = diagonal_sl2(&alg, &[(0, sp2_on_pair(m, m - 1)), (1, sp2_on_pair(n, 0))])?;
    let vecs: Vec<Vec<Rational>> = a.iter().chain(&b).chain(&d).cloned().collect();
    Embedding::new(alg, &vecs, None)?
        .named(
            "sp_pair_diag",
            vec![p_int(m), p_int(n)],
            format!("sp{}+sp2+sp{} in sp{}+sp{}", 2 * m - 2, 2 * n - 2, 2 * m, 2 * n),
            &[Tag::Spherical],
        )
        .with_ideals(&[], &[a, b, d])
}

/// `sp_{2n-4} ⊕ sp_4 ⊂ sp_2n ⊕ sp_4` with the `sp_4` diagonal.
pub fn sp_pair_diag4(n: usize) -> Result<Embedding> {
    if n < 2 {
        return Err(invalid("sp_pair_diag4", "need n >= 2"));
    }
    let alg = algebra(&[SimpleFactor::sp(2 * n)?, SimpleFactor::sp(4)?])?;
    let a = sp_on_pairs(&alg, 0, &(0..n - 2).collect::<Vec<_>>());
    let d: Vec<Vec<Rational>> = sp_matrices(2)?
        .iter()
        .map(|x| element(&alg, &[(0, place(x, 2 * n, n - 2)), (1, x.clone())]))
        .collect::<Result<_>>()?;
    let vecs: Vec<Vec<Rational>> = a.iter().chain(&d).cloned().collect();
    Embedding::new(alg, &vecs, None)?
        .named(
            "sp_pair_diag4",
            vec![p_int(n)],
            format!("sp{}+sp4 in sp{}+sp4", 2 * n - 4, 2 * n),
            &[Tag::Spherical],
        )
        .with_ideals(&[], &[a, d])
}

/// `sp_{2l-2} ⊕ sp_{2m-2} ⊕ sp_{2n-2} ⊕ sp_2 ⊂ sp_2l ⊕ sp_2m ⊕ sp_2n` with the
/// `sp_2` diagonal in all three factors.
pub fn sp_triple_diag(l: usize, m: usize, n: usize) -> Result<Embedding> {
    if l == 0 || m == 0 || n == 0 {
        return Err(invalid("sp_triple_diag", "need l, m, n >= 1"));
    }
    let sizes = [l, m, n];
    let alg = algebra(&[SimpleFactor::sp(2 * l)?, SimpleFactor::sp(2 * m)?, SimpleFactor::sp(2 * n)?])?;
    let mut ideals = Vec::new();
    for (f, &s) in sizes.iter().enumerate() {
        ideals.push(sp_on_pairs(&alg, f, &(0..s - 1).collect::<Vec<_>>()));
    }
    let copies: Vec<(usize, [RationalMatrix; 3])> =
        sizes.iter().enumerate().map(|(f, &s)| (f, sp2_on_pair(s, s - 1))).collect();
    ideals.push(diagonal_sl2(&alg, &copies)?);
    let vecs: Vec<Vec<Rational>> = ideals.iter().flatten().cloned().collect();
    Embedding::new(alg, &vecs, None)?
        .named(
            "sp_triple_diag",
            vec![p_int(l), p_int(m), p_int(n)],
            format!(
                "sp{}+sp{}+sp{}+sp2 in sp{}+sp{}+sp{}",
                2 * l - 2,
                2 * m - 2,
                2 * n - 2,
                2 * l,
                2 * m,
                2 * n
            ),
            &[Tag::Spherical],
        )
        .with_ideals(&[], &ideals)
}

/// `sp_{2n-2} ⊕ sp_2 ⊕ sp_2 ⊕ sp_{2m-2} ⊂ sp_2n ⊕ sp_4 ⊕ sp_2m`: one `sp_2`
/// diagonal in the first two factors, the other in the last two.
pub fn sp_chain(n: usize, m: usize) -> Result<Embedding> {
    if n == 0 || m == 0 {
        return Err(invalid("sp_chain", "need n, m >= 1"));
    }
    let alg = algebra(&[SimpleFactor::sp(2 * n)?, SimpleFactor::sp(4)?, SimpleFactor::sp(2 * m)?])?;
    let a = sp_on_pairs(&alg, 0, &(0..n - 1).collect::<Vec<_>>());
    let b = sp_on_pairs(&alg, 2, &(1..m).collect::<Vec<_>>());
    let d1 = diagonal_sl2(&alg, &[(0, sp2_on_pair(n, n - 1)), (1, sp2_on_pair(2, 0))])?;
    let d2 = diagonal_sl2(&alg, &[(1, sp2_on_pair(2, 1)), (2, sp2_on_pair(m, 0))])?;
    let vecs: Vec<Vec<Rational>> = a.iter().chain(&d1).chain(&d2).chain(&b).cloned().collect();
    Embedding::new(alg, &vecs, None)?
        .named(
            "sp_chain",
            vec![p_int(n), p_int(m)],
            format!("sp{}+sp2+sp2+sp{} in sp{}+sp4+sp{}", 2 * n - 2, 2 * m - 2, 2 * n, 2 * m),
            &[Tag::Spherical],
        )
        .with_ideals(&[], &[a, d1, d2, b])
}

/// `(s)l_{n-2} ⊕ sl_2 ⊕ sp_{2m-2} ⊂ sl_n ⊕ sp_2m` with the `sl_2` diagonal in
/// the lower-right block of `sl_n` and the outer pair of `sp_2m`; with
/// `with_center` the `gl_{n-2}` version.
pub fn sl_sp(n: usize, m: usize, with_center: bool) -> Result<Embedding> {
    let name = if with_center { "sl_sp_gl" } else { "sl_sp_sl" };
    if n < 3 || m == 0 {
        return Err(invalid(name, "need n >= 3, m >= 1"));
    }
    let alg = algebra(&[SimpleFactor::sl(n)?, SimpleFactor::sp(2 * m)?])?;
    let k = n - 2;
    let a = labelled(&alg, 0, |i, j| i < k && j < k && !(i == j && i + 1 >= k));
    let b = sp_on_pairs(&alg, 1, &(1..m).collect::<Vec<_>>());
    let d = diagonal_sl2(&alg, &[(0, sl2_on_block(n, k)), (1, sp2_on_pair(m, 0))])?;
    let mut center = Vec::new();
    if with_center {
        let diag: Vec<Rational> = (0..n).map(|i| if i < k { rat(2) } else { rat(-(k as i64)) }).collect();
        center.push(element(&alg, &[(0, diag_matrix(&diag))])?);
    }
    let vecs: Vec<Vec<Rational>> = a.iter().chain(&b).chain(&d).chain(&center).cloned().collect();
    let first = if with_center { format!("gl{k}") } else { format!("sl{k}") };
    Embedding::new(alg, &vecs, None)?
        .named(
            name,
            vec![p_int(n), p_int(m)],
            format!("{first}+sl2+sp{} in sl{n}+sp{}", 2 * m - 2, 2 * m),
            &[Tag::Spherical],
        )
        .with_ideals(&center, &[a, d, b])
}

/// `sl_n ⊕ C ⊂ sl_{n+1} ⊕ sl_n`: `A ↦ (diag(A, 0), A)` plus the center
/// `diag(I_n, -n)` of the first factor.
pub fn sl_pair_diag(n: usize) -> Result<Embedding> {
    if n < 2 {
        return Err(invalid("sl_pair_diag", "need n >= 2"));
    }
    let alg = algebra(&[SimpleFactor::sl(n + 1)?, SimpleFactor::sl(n)?])?;
    let sl = algebra(&[SimpleFactor::sl(n)?])?;
    let d: Vec<Vec<Rational>> = (0..sl.dim())
        .map(|k| {
            let x = sl.factor_matrix(0, &sl.unit(k));
            element(&alg, &[(0, place(&x, n + 1, 0)), (1, x)])
        })
        .collect::<Result<_>>()?;
    let mut diag = vec![rat(1); n + 1];
    diag[n] = rat(-(n as i64));
    let z = vec![element(&alg, &[(0, diag_matrix(&diag))])?];
    let vecs: Vec<Vec<Rational>> = d.iter().chain(&z).cloned().collect();
    Embedding::new(alg, &vecs, None)?
        .named(
            "sl_pair_diag",
            vec![p_int(n)],
            format!("sl{n}+C in sl{}+sl{n}", n + 1),
            &[Tag::Spherical],
        )
        .with_ideals(&z, &[d])
}

/// Isometric inclusion `P: C^n → C^{n+1}` for the antidiagonal forms.
fn so_inclusion(n: usize) -> RationalMatrix {
    let mut p = RationalMatrix::zeros(n + 1, n);
    let k = n / 2;
    for i in 0..n {
        if n % 2 == 1 && i == k {
            p[(k, k)] = Rational::one();
            p[(k + 1, k)] = Rational::new(1.into(), 2.into());
        } else if i < k {
            p[(i, i)] = Rational::one();
        } else {
            p[(i + 1, i)] = Rational::one();
        }
    }
    p
}

/// `so_n ⊂ so_{n+1} ⊕ so_n`, the diagonal through an isometric inclusion.
pub fn so_pair_diag(n: usize) -> Result<Embedding> {
    let big = SimpleFactor::so(n + 1).map_err(|_| invalid("so_pair_diag", "so_{n+1} is not buildable"))?;
    let small = SimpleFactor::so(n).map_err(|_| invalid("so_pair_diag", "so_n is not buildable"))?;
    let alg = algebra(&[big, small])?;
    let p = so_inclusion(n);
    let j_small = small.gram().expect("so has a form");
    let j_big = big.gram().expect("so has a form");
    let q = j_small.inverse().expect("nondegenerate").mul(&p.transpose())?.mul(&j_big)?;
    let so = algebra(&[small])?;
    let vecs: Vec<Vec<Rational>> = (0..so.dim())
        .map(|k| {
            let x = so.factor_matrix(0, &so.unit(k));
            element(&alg, &[(0, p.mul(&x)?.mul(&q)?), (1, x)])
        })
        .collect::<Result<_>>()?;
    Ok(Embedding::new(alg, &vecs, None)?.named(
        "so_pair_diag",
        vec![p_int(n)],
        format!("so{n} in so{}+so{n}", n + 1),
        &[Tag::Spherical],
    ))
}

/// `sl_n ⊕ C ⊂ sl_{n+1} ⊕ sl_2` via
/// `(A, t) ↦ (diag(A + t I_n, -n t), diag(t, -t))`.
pub fn example_516(n: usize) -> Result<Embedding> {
    if n < 2 {
        return Err(invalid("example_516", "need n >= 2"));
    }
    let alg = algebra(&[SimpleFactor::sl(n + 1)?, SimpleFactor::sl(2)?])?;
    let sl = labelled(&alg, 0, |i, j| i < n && j < n && !(i == j && i + 1 >= n));
    let mut diag = vec![rat(1); n + 1];
    diag[n] = rat(-(n as i64));
    let z = vec![element(
        &alg,
        &[(0, diag_matrix(&diag)), (1, diag_matrix(&[rat(1), rat(-1)]))],
    )?];
    let vecs: Vec<Vec<Rational>> = sl.iter().chain(&z).cloned().collect();
    Embedding::new(alg, &vecs, None)?
        .named(
            "example_516",
            vec![p_int(n)],
            format!("sl{n}+C in sl{}+sl2", n + 1),
            &[Tag::Spherical],
        )
        .with_ideals(&z, &[sl])
}

/// Abstract type of `so_m` as simple factors plus center dimension.
pub fn so_type(m: usize) -> (Vec<SimpleFactor>, usize) {
    match m {
        0 | 1 => (Vec::new(), 0),
        2 => (Vec::new(), 1),
        4 => (vec![SimpleFactor { family: Family::A, rank: 1 }; 2], 0),
        _ => (vec![SimpleFactor::so(m).expect("m = 3 or m >= 5")], 0),
    }
}

impl core::fmt::Display for Param {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::List(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
            Param::Factor(s) => write!(f, "{s}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_sgl_2_2_shape() {
        let e = block_sgl(2, 2).unwrap();
        assert_eq!(e.dim(), 7);
        let d = e.known_ideals().unwrap();
        assert_eq!(d.center.dim(), 1);
        assert_eq!(d.simple_ideals.len(), 2);
        assert!(d.simple_ideals.iter().all(|s| s.dim() == 3));
        assert_eq!(e.perp().unwrap().dim(), 8);
    }

    #[test]
    fn so3_in_sl3_is_simple() {
        let e = so_in_sl(3).unwrap();
        assert_eq!(e.dim(), 3);
        let d = decompose_reductive(&e, &Config::default()).unwrap();
        assert!(d.center.is_zero());
        assert_eq!(d.simple_ideals.len(), 1);
    }

    #[test]
    fn diagonal_sl2() {
        let e = diagonal(SimpleFactor::sl(2).unwrap()).unwrap();
        assert_eq!(e.dim(), 3);
    }

    #[test]
    fn dimensions_of_named_constructors() {
        let cases: Vec<(Embedding, usize)> = vec![
            (block_sgl(2, 3).unwrap(), 12),
            (so_block(3, 2).unwrap(), 4),
            (so_block(4, 2).unwrap(), 7),
            (so_block(5, 3).unwrap(), 13),
            (gl_in_sp(2).unwrap(), 4),
            (gl_in_so(6).unwrap(), 9),
            (gl_in_so(5).unwrap(), 4),
            (sp_in_sl(2).unwrap(), 10),
            (sp_in_sl_odd(2, true).unwrap(), 11),
            (sp_pair_diag(2, 2).unwrap(), 9),
            (sp_pair_diag4(3).unwrap(), 13),
            (sp_triple_diag(2, 2, 1).unwrap(), 9),
            (sp_chain(2, 2).unwrap(), 12),
            (sl_sp(4, 2, true).unwrap(), 10),
            (sl_pair_diag(2).unwrap(), 4),
            (so_pair_diag(5).unwrap(), 10),
            (example_516(2).unwrap(), 4),
            (levi(5, &[2, 2, 1]).unwrap(), 8),
            (sp_block(4, &[2, 1, 1]).unwrap(), 16),
            (sp_torus_split(3).unwrap(), 11),
        ];
        for (e, d) in cases {
            assert_eq!(e.dim(), d, "{}", e.label());
        }
    }

    #[test]
    fn stabilizer_examples() {
        let e = so_in_sl(3).unwrap();
        let alg = e.ambient();
        assert_eq!(e.stabilizer(&vec![Rational::zero(); alg.dim()]), *e.h());
        let m = RationalMatrix::from_i64(&[&[1, 2, 3], &[2, 5, 7], &[3, 7, -6]]);
        let x = alg.from_matrices(&[m]).unwrap();
        assert!(e.stabilizer(&x).is_zero());

        let d = diagonal(SimpleFactor::sl(2).unwrap()).unwrap();
        let alg = d.ambient();
        let mut x = vec![Rational::zero(); 6];
        x[0] = rat(1);
        x[3] = rat(-1);
        let stab = d.stabilizer(&x);
        let mut diag_e = vec![Rational::zero(); 6];
        diag_e[0] = rat(1);
        diag_e[3] = rat(1);
        assert_eq!(stab, Subspace::span(alg.dim(), &[diag_e]).unwrap());
    }

    #[test]
    fn perp_extremes() {
        let alg = algebra(&[SimpleFactor::sl(3).unwrap()]).unwrap();
        let all: Vec<Vec<Rational>> = (0..8).map(|k| alg.unit(k).into_coords()).collect();
        let full = Embedding::custom(alg.clone(), &all).unwrap();
        assert!(full.perp().unwrap().is_zero());
        let zero = Embedding::custom(alg.clone(), &[]).unwrap();
        assert_eq!(zero.perp().unwrap(), Subspace::full(8));
    }

    #[test]
    fn custom_rejects_non_subalgebra() {
        let alg = algebra(&[SimpleFactor::sl(2).unwrap()]).unwrap();
        let e = alg.unit(0).into_coords();
        let f = alg.unit(1).into_coords();
        assert!(matches!(Embedding::custom(alg, &[e, f]), Err(Error::NotClosed)));
    }

    #[test]
    fn unknown_constructor() {
        assert!(matches!(construct("nope", &[]), Err(Error::UnknownConstructor(_))));
    }
}
