//! Splitting a pair `(g, h)` along the simple factors of `g` and combining
//! per-factor verdicts.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::criteria::{decide, Certificate, Invariants, Verdict};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Rational, RationalMatrix, Subspace};
use crate::sampling::Config;
use crate::subalgebra::Embedding;

/// Most simple factors `split_pair` accepts.
pub const MAX_FACTORS: usize = 8;

#[derive(Clone, Debug)]
pub struct PairFactor {
    /// Indices of the simple factors of `g` in this block.
    pub factor_indices: Vec<usize>,
    /// Ambient coordinate of each basis vector of the block algebra.
    pub coords: Vec<usize>,
    /// `h ∩ g_A` in ambient coordinates.
    pub h_part: Subspace,
    /// The pair `(g_A, h ∩ g_A)` on its own.
    pub embedding: Embedding,
    pub strict: bool,
}

#[derive(Clone, Debug)]
pub struct PairFactorization {
    pub factors: Vec<PairFactor>,
}

impl PairFactorization {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

fn block_coords(alg: &LieAlgebra, set: &[usize]) -> Vec<usize> {
    set.iter().flat_map(|&f| alg.factor_range(f)).collect()
}

/// `h ∩ g_A`, where `g_A` is the sum of the factors in `set`.
fn restrict(alg: &LieAlgebra, h: &Subspace, set: &[usize]) -> Subspace {
    let inside: BTreeSet<usize> = block_coords(alg, set).into_iter().collect();
    let outside: Vec<usize> = (0..alg.dim()).filter(|i| !inside.contains(i)).collect();
    if h.is_zero() {
        return Subspace::zero(alg.dim());
    }
    if outside.is_empty() {
        return h.clone();
    }
    let cols: Vec<Vec<Rational>> = h
        .basis()
        .iter()
        .map(|v| outside.iter().map(|&i| v[i].clone()).collect())
        .collect();
    let m = RationalMatrix::from_columns(outside.len(), &cols).expect("uniform columns");
    let ker = crate::linalg::rank_and_kernel(&m).1;
    let vecs: Vec<Vec<Rational>> = ker.basis().iter().map(|c| h.combine(c)).collect();
    Subspace::span(alg.dim(), &vecs).expect("ambient vectors")
}

/// Bipartitions `{A, B}` of `set` with the first element in `A`.
fn bipartitions(set: &[usize]) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> + '_ {
    let m = set.len();
    let count = if m < 2 { 0 } else { (1u32 << (m - 1)) - 1 };
    (0..count).map(move |mask| {
        // Nonzero bit patterns over set[1..] pick B; A keeps set[0].
        let mut a = alloc::vec![set[0]];
        let mut b = Vec::new();
        for (i, &f) in set.iter().enumerate().skip(1) {
            if (mask + 1) >> (i - 1) & 1 == 1 {
                b.push(f);
            } else {
                a.push(f);
            }
        }
        (a, b)
    })
}

/// Whether `(g_set, h_set)` splits across some bipartition; returns the first.
fn find_split(alg: &LieAlgebra, h: &Subspace, set: &[usize]) -> Option<(Vec<usize>, Vec<usize>, Subspace, Subspace)> {
    for (a, b) in bipartitions(set) {
        let ha = restrict(alg, h, &a);
        let hb = restrict(alg, h, &b);
        if ha.dim() + hb.dim() == h.dim() {
            return Some((a, b, ha, hb));
        }
    }
    None
}

fn indecomposable_blocks(alg: &LieAlgebra, h: &Subspace) -> Vec<(Vec<usize>, Subspace)> {
    let all: Vec<usize> = (0..alg.factors().len()).collect();
    let mut out = Vec::new();
    let mut stack = alloc::vec![(all, h.clone())];
    while let Some((set, hs)) = stack.pop() {
        match find_split(alg, &hs, &set) {
            Some((a, b, ha, hb)) => {
                stack.push((b, hb));
                stack.push((a, ha));
            }
            None => out.push((set, hs)),
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

fn check_factor_count(alg: &LieAlgebra) -> Result<()> {
    if alg.factors().len() > MAX_FACTORS {
        return Err(Error::TooManyFactors(alg.factors().len()));
    }
    Ok(())
}

/// The pair `(g_A, h_A)` as a standalone embedding, keeping the involution
/// when it preserves `g_A`.
fn block_embedding(e: &Embedding, set: &[usize], h_part: &Subspace) -> Result<Embedding> {
    let alg = e.ambient();
    let coords = block_coords(alg, set);
    let factors: Vec<_> = set.iter().map(|&f| alg.factors()[f]).collect();
    let sub = Arc::new(LieAlgebra::new(&factors, 0)?);
    let vecs: Vec<Vec<Rational>> = h_part
        .basis()
        .iter()
        .map(|v| coords.iter().map(|&i| v[i].clone()).collect())
        .collect();
    let theta = e.involution().and_then(|t| {
        let inside: BTreeSet<usize> = coords.iter().copied().collect();
        let preserved = coords
            .iter()
            .all(|&j| (0..alg.dim()).all(|i| inside.contains(&i) || t[(i, j)].is_zero()));
        preserved.then(|| {
            let mut r = RationalMatrix::zeros(coords.len(), coords.len());
            for (a, &i) in coords.iter().enumerate() {
                for (b, &j) in coords.iter().enumerate() {
                    r[(a, b)] = t[(i, j)].clone();
                }
            }
            r
        })
    });
    // A restricted involution only describes the block pair when its fixed
    // points are exactly h_A.
    match theta {
        Some(t) if crate::subalgebra::fixed_space(&t).dim() == vecs.len() => {
            Embedding::new(sub, &vecs, Some(t))
        }
        _ => Embedding::custom(sub, &vecs),
    }
}

/// Splits `(g, h)` into indecomposable pairs by testing every bipartition of
/// the simple factors: a bipartition `{A, B}` splits the pair exactly when
/// `dim(h ∩ g_A) + dim(h ∩ g_B) = dim h`.
pub fn split_pair(e: &Embedding) -> Result<PairFactorization> {
    let alg = e.ambient();
    check_factor_count(alg)?;
    let blocks = indecomposable_blocks(alg, e.h());
    let single = blocks.len() == 1;
    let mut factors = Vec::with_capacity(blocks.len());
    for (set, h_part) in blocks {
        let embedding = if single {
            e.clone()
        } else {
            block_embedding(e, &set, &h_part)?
        };
        let strict = is_strictly_indecomposable(&embedding)?;
        factors.push(PairFactor {
            coords: block_coords(alg, &set),
            factor_indices: set,
            h_part,
            embedding,
            strict,
        });
    }
    Ok(PairFactorization { factors })
}

/// Whether the pair admits no splitting along the factors of `g`.
pub fn is_indecomposable(e: &Embedding) -> Result<bool> {
    let alg = e.ambient();
    check_factor_count(alg)?;
    let all: Vec<usize> = (0..alg.factors().len()).collect();
    Ok(find_split(alg, e.h(), &all).is_none())
}

/// Whether `(g, [h, h])` is indecomposable.
pub fn is_strictly_indecomposable(e: &Embedding) -> Result<bool> {
    let alg = e.ambient();
    check_factor_count(alg)?;
    let derived = e.derived();
    let all: Vec<usize> = (0..alg.factors().len()).collect();
    Ok(find_split(alg, &derived, &all).is_none())
}

/// YES iff every factor is YES. Exact witnesses of the factors are assembled
/// into one witness for the whole pair.
pub fn combined_verdict(f: &PairFactorization, per_factor: &[Verdict]) -> Result<Verdict> {
    if f.factors.len() != per_factor.len() {
        return Err(Error::LengthMismatch {
            expected: f.factors.len(),
            found: per_factor.len(),
        });
    }
    let Some(first) = per_factor.first() else {
        return Err(Error::Internal("empty factorization".into()));
    };
    let a_regular = per_factor.iter().all(|v| v.a_regular);
    let mut routes: BTreeSet<String> = first.routes_agreed.iter().cloned().collect();
    for v in per_factor {
        let r: BTreeSet<String> = v.routes_agreed.iter().cloned().collect();
        routes = routes.intersection(&r).cloned().collect();
    }
    let invariants = per_factor
        .iter()
        .map(|v| v.invariants)
        .try_fold(
            Invariants {
                c: 0,
                rk: 0,
                dim_h_star: 0,
                rank_h_star: 0,
                dim_borel: 0,
            },
            |acc, inv| {
                inv.map(|i| Invariants {
                    c: acc.c + i.c,
                    rk: acc.rk + i.rk,
                    dim_h_star: acc.dim_h_star + i.dim_h_star,
                    rank_h_star: acc.rank_h_star + i.rank_h_star,
                    dim_borel: acc.dim_borel + i.dim_borel,
                })
            },
        );
    let failure_bound = per_factor
        .iter()
        .fold(Rational::zero(), |acc, v| acc + &v.failure_bound);
    let certificate = if a_regular {
        let total: usize = f.factors.iter().map(|p| p.coords.len()).sum();
        let mut witness = alloc::vec![Rational::zero(); total];
        let mut exact = true;
        let mut centralizer_dim = 0;
        for (p, v) in f.factors.iter().zip(per_factor) {
            match &v.certificate {
                Certificate::ExactRegularElement { witness: w, centralizer_dim: d } => {
                    for (k, &i) in p.coords.iter().enumerate() {
                        witness[i] = w[k].clone();
                    }
                    centralizer_dim += d;
                }
                _ => exact = false,
            }
        }
        if exact {
            Certificate::ExactRegularElement {
                witness,
                centralizer_dim,
            }
        } else {
            first.certificate.clone()
        }
    } else {
        let no = per_factor.iter().find(|v| !v.a_regular).expect("some factor is NO");
        no.certificate.clone()
    };
    Ok(Verdict {
        a_regular,
        certificate,
        routes_agreed: routes.into_iter().collect(),
        invariants,
        failure_bound: if a_regular { Rational::zero() } else { failure_bound },
    })
}

/// Splits the pair, decides each factor, and combines.
pub fn decide_by_factors(e: &Embedding, cfg: &Config) -> Result<(PairFactorization, Vec<Verdict>, Verdict)> {
    let f = split_pair(e)?;
    let verdicts: Vec<Verdict> = f
        .factors
        .iter()
        .enumerate()
        .map(|(i, p)| decide(&p.embedding, &cfg.fork(1000 + i as u64)))
        .collect::<Result<_>>()?;
    let combined = combined_verdict(&f, &verdicts)?;
    Ok((f, verdicts, combined))
}

/// Direct sum of two pairs: `(g_1 ⊕ g_2, h_1 ⊕ h_2)`.
pub fn direct_sum(a: &Embedding, b: &Embedding) -> Result<Embedding> {
    let (ga, gb) = (a.ambient(), b.ambient());
    if !ga.is_semisimple() || !gb.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let factors: Vec<_> = ga.factors().iter().chain(gb.factors()).copied().collect();
    let alg = Arc::new(LieAlgebra::new(&factors, 0)?);
    let (da, db) = (ga.dim(), gb.dim());
    let mut vecs: Vec<Vec<Rational>> = Vec::with_capacity(a.dim() + b.dim());
    for v in a.h().basis() {
        let mut w = v.clone();
        w.resize(da + db, Rational::zero());
        vecs.push(w);
    }
    for v in b.h().basis() {
        let mut w = alloc::vec![Rational::zero(); da];
        w.extend(v.iter().cloned());
        vecs.push(w);
    }
    let theta = match (a.involution(), b.involution()) {
        (Some(ta), Some(tb)) => {
            let mut t = RationalMatrix::zeros(da + db, da + db);
            for i in 0..da {
                for j in 0..da {
                    t[(i, j)] = ta[(i, j)].clone();
                }
            }
            for i in 0..db {
                for j in 0..db {
                    t[(da + i, da + j)] = tb[(i, j)].clone();
                }
            }
            Some(t)
        }
        _ => None,
    };
    Embedding::new(alg, &vecs, theta)
}
