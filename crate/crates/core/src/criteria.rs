//! Decision procedures for a-regularity and Knop's invariants.
//!
//! Four routes answer the same question: a sampled regular element of `h^⊥`,
//! an abelian generic stabilizer, the identity `c + rk + dim h = dim B`, and,
//! for symmetric pairs, abelian-ness of `z_h(c)` for a generic Cartan subspace
//! `c` of the `-1` eigenspace. `decide` runs all that apply and insists on
//! agreement.

use alloc::string::String;
use alloc::vec::Vec;

use crate::catalog::Catalog;
use crate::error::{Error, Result, RouteOutcome};
use crate::linalg::Rational;
use crate::sampling::Config;
use crate::subalgebra::{
    centralizer_in, generic_stabilizer, is_abelian, minus_one_space, Embedding,
    GenericStabilizerReport,
};

pub const ROUTE_REGULAR_ELEMENT: &str = "regular_element";
pub const ROUTE_ABELIAN_STABILIZER: &str = "abelian_stabilizer";
pub const ROUTE_NUMERICAL: &str = "numerical";
pub const ROUTE_SATAKE: &str = "satake";
pub const ROUTE_TABLE: &str = "table";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnopInvariants {
    /// Complexity `c`.
    pub c: usize,
    /// Rank `rk`.
    pub rk: usize,
    pub dim_h_star: usize,
    pub rank_h_star: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub c: usize,
    pub rk: usize,
    pub dim_h_star: usize,
    pub rank_h_star: usize,
    pub dim_borel: usize,
}

#[derive(Clone, Debug)]
pub struct SatakeData {
    /// Dimension of the generic Cartan subspace `c ⊆ q`.
    pub cartan_dim: usize,
    /// Dimension of `z_h(c)`.
    pub centralizer_dim: usize,
    pub abelian: bool,
}

#[derive(Clone, Debug)]
pub enum Certificate {
    ExactRegularElement { witness: Vec<Rational>, centralizer_dim: usize },
    AbelianStabilizer(GenericStabilizerReport),
    Numerical { c: usize, rk: usize, dim_h: usize, dim_borel: usize },
    Satake(SatakeData),
    Table { row_id: String },
    RandomizedNegative { failure_bound: Rational },
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub a_regular: bool,
    pub certificate: Certificate,
    pub routes_agreed: Vec<String>,
    pub invariants: Option<Invariants>,
    /// Probability bound that a randomized step misled the verdict; zero for
    /// verdicts carried by an exact witness.
    pub failure_bound: Rational,
}

impl Verdict {
    fn single(route: &str, a_regular: bool, certificate: Certificate, failure_bound: Rational) -> Self {
        Self {
            a_regular,
            certificate,
            routes_agreed: alloc::vec![route.into()],
            invariants: None,
            failure_bound,
        }
    }

    pub fn witness(&self) -> Option<&[Rational]> {
        match &self.certificate {
            Certificate::ExactRegularElement { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

fn zero() -> Rational {
    Rational::from_integer(0.into())
}

/// YES as soon as a sample of `h^⊥` is regular; NO with a failure bound when
/// none of `cfg.trials` samples is.
pub fn decide_regular_element(e: &Embedding, cfg: &Config) -> Result<Verdict> {
    let perp = e.perp()?;
    let alg = e.ambient();
    let mut rng = cfg.fork(0x7265).rng();
    for _ in 0..cfg.trials.max(1) {
        let x = rng.point_in(&perp);
        let (regular, dim) = alg.is_regular(&x);
        if regular {
            let certificate = Certificate::ExactRegularElement {
                witness: x,
                centralizer_dim: dim,
            };
            return Ok(Verdict::single(ROUTE_REGULAR_ELEMENT, true, certificate, zero()));
        }
    }
    let failure_bound = cfg.failure_bound(alg.dim());
    Ok(Verdict::single(
        ROUTE_REGULAR_ELEMENT,
        false,
        Certificate::RandomizedNegative {
            failure_bound: failure_bound.clone(),
        },
        failure_bound,
    ))
}

pub fn decide_abelian_stabilizer(e: &Embedding, cfg: &Config) -> Result<Verdict> {
    let report = generic_stabilizer(e, cfg)?;
    let bound = report.failure_bound.clone();
    Ok(Verdict::single(
        ROUTE_ABELIAN_STABILIZER,
        report.is_abelian,
        Certificate::AbelianStabilizer(report),
        bound,
    ))
}

/// `c` and `rk` from a generic stabilizer report.
pub fn knop_from_report(e: &Embedding, report: &GenericStabilizerReport) -> Result<KnopInvariants> {
    let alg = e.ambient();
    let rk = alg
        .rank()
        .checked_sub(report.reductive_rank)
        .ok_or_else(|| Error::GenericityFailure("rank of h_* exceeds rank of g".into()))?;
    let top = (alg.dim() + report.dim)
        .checked_sub(2 * e.dim() + rk)
        .ok_or_else(|| Error::GenericityFailure("2c + rk would be negative".into()))?;
    if top % 2 != 0 {
        return Err(Error::GenericityFailure("2c is odd; resample with another seed".into()));
    }
    Ok(KnopInvariants {
        c: top / 2,
        rk,
        dim_h_star: report.dim,
        rank_h_star: report.reductive_rank,
    })
}

pub fn knop_invariants(e: &Embedding, cfg: &Config) -> Result<KnopInvariants> {
    knop_from_report(e, &generic_stabilizer(e, cfg)?)
}

fn numerical_verdict(e: &Embedding, k: &KnopInvariants, bound: Rational) -> Verdict {
    let dim_borel = e.ambient().borel_dim();
    let a_regular = k.c + k.rk + e.dim() == dim_borel;
    Verdict::single(
        ROUTE_NUMERICAL,
        a_regular,
        Certificate::Numerical {
            c: k.c,
            rk: k.rk,
            dim_h: e.dim(),
            dim_borel,
        },
        bound,
    )
}

pub fn decide_numerical(e: &Embedding, cfg: &Config) -> Result<Verdict> {
    let report = generic_stabilizer(e, cfg)?;
    let k = knop_from_report(e, &report)?;
    Ok(numerical_verdict(e, &k, report.failure_bound))
}

/// YES iff `z_h(c)` is abelian, `c = z_q(x)` for generic `x` in the `-1`
/// eigenspace `q` of the involution.
pub fn satake_route(e: &Embedding, cfg: &Config) -> Result<Verdict> {
    let theta = e
        .involution()
        .ok_or_else(|| Error::InvalidInvolution("embedding carries no involution".into()))?;
    crate::subalgebra::check_involution(e.ambient(), theta)?;
    let alg = e.ambient();
    let q = minus_one_space(theta);
    let mut rng = cfg.fork(0x5a7a).rng();
    let mut best = None;
    for _ in 0..cfg.trials.clamp(1, 4) {
        let x = rng.point_in(&q);
        let c = centralizer_in(alg, &q, &[&x]);
        if best.as_ref().is_none_or(|b: &crate::linalg::Subspace| c.dim() < b.dim()) {
            best = Some(c);
        }
    }
    let c = best.expect("at least one sample");
    let xs: Vec<&[Rational]> = c.basis().iter().map(Vec::as_slice).collect();
    let z = centralizer_in(alg, e.h(), &xs);
    let abelian = is_abelian(alg, &z);
    let data = SatakeData {
        cartan_dim: c.dim(),
        centralizer_dim: z.dim(),
        abelian,
    };
    Ok(Verdict::single(
        ROUTE_SATAKE,
        abelian,
        Certificate::Satake(data),
        cfg.failure_bound(alg.dim()),
    ))
}

/// Runs every applicable route against the built-in catalog.
pub fn decide(e: &Embedding, cfg: &Config) -> Result<Verdict> {
    decide_with_catalog(e, cfg, Some(&Catalog::builtin()?))
}

/// Runs every applicable route; errors if any two disagree.
pub fn decide_with_catalog(e: &Embedding, cfg: &Config, catalog: Option<&Catalog>) -> Result<Verdict> {
    let regular = decide_regular_element(e, cfg)?;
    let report = generic_stabilizer(e, cfg)?;
    let knop = knop_from_report(e, &report)?;
    let numerical = numerical_verdict(e, &knop, report.failure_bound.clone());
    let stab_bound = report.failure_bound.clone();
    let abelian = Verdict::single(
        ROUTE_ABELIAN_STABILIZER,
        report.is_abelian,
        Certificate::AbelianStabilizer(report),
        stab_bound,
    );
    let mut routes = alloc::vec![regular, abelian, numerical];
    if e.involution().is_some() {
        routes.push(satake_route(e, cfg)?);
    }
    if let Some(cat) = catalog {
        if let Some(hit) = cat.lookup(e)? {
            if let Some(a_regular) = hit.row.verdict {
                routes.push(Verdict::single(
                    ROUTE_TABLE,
                    a_regular,
                    Certificate::Table { row_id: hit.row.id.clone() },
                    zero(),
                ));
            }
        }
    }
    let answer = routes[0].a_regular;
    if routes.iter().any(|v| v.a_regular != answer) {
        return Err(Error::RouteDisagreement(
            routes
                .iter()
                .map(|v| RouteOutcome {
                    route: v.routes_agreed[0].clone(),
                    a_regular: v.a_regular,
                })
                .collect(),
        ));
    }
    let names: Vec<String> = routes.iter().map(|v| v.routes_agreed[0].clone()).collect();
    let failure_bound = routes
        .iter()
        .map(|v| v.failure_bound.clone())
        .max()
        .unwrap_or_else(zero);
    let invariants = Invariants {
        c: knop.c,
        rk: knop.rk,
        dim_h_star: knop.dim_h_star,
        rank_h_star: knop.rank_h_star,
        dim_borel: e.ambient().borel_dim(),
    };
    let first = routes.swap_remove(0);
    let failure_bound = if answer { zero() } else { failure_bound };
    Ok(Verdict {
        a_regular: answer,
        certificate: first.certificate,
        routes_agreed: names,
        invariants: Some(invariants),
        failure_bound,
    })
}

/// Exact re-check of a YES certificate: the witness lies in `h^⊥` and is
/// regular.
pub fn verify_witness(e: &Embedding, witness: &[Rational]) -> Result<bool> {
    let alg = e.ambient();
    if witness.len() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: witness.len(),
        });
    }
    let orthogonal = e
        .h()
        .basis()
        .iter()
        .all(|h| num_traits::Zero::is_zero(&alg.killing_form(h, witness)));
    Ok(orthogonal && alg.centralizer(witness).dim() == alg.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subalgebra::{block_sgl, diagonal, gl_in_so, gl_in_sp, so_in_sl, sp_torus_split};
    use crate::SimpleFactor;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn so3_in_sl3() {
        let e = so_in_sl(3).unwrap();
        let v = decide_regular_element(&e, &cfg()).unwrap();
        assert!(v.a_regular);
        assert!(verify_witness(&e, v.witness().unwrap()).unwrap());
        let k = knop_invariants(&e, &cfg()).unwrap();
        assert_eq!((k.c, k.rk, k.dim_h_star), (0, 2, 0));
        assert!(decide_numerical(&e, &cfg()).unwrap().a_regular);
        let s = satake_route(&e, &cfg()).unwrap();
        assert!(s.a_regular);
        match s.certificate {
            Certificate::Satake(d) => assert_eq!(d.centralizer_dim, 0),
            _ => panic!("expected satake data"),
        }
    }

    #[test]
    fn block_levis_in_sl() {
        let e = block_sgl(2, 2).unwrap();
        let k = knop_invariants(&e, &cfg()).unwrap();
        assert_eq!((k.c, k.rk, k.dim_h_star, k.rank_h_star), (0, 2, 1, 1));
        assert!(decide(&e, &cfg()).unwrap().a_regular);
        assert!(decide_abelian_stabilizer(&block_sgl(2, 3).unwrap(), &cfg()).unwrap().a_regular);

        let e = block_sgl(2, 4).unwrap();
        let k = knop_invariants(&e, &cfg()).unwrap();
        assert_eq!((k.c, k.rk, k.dim_h_star, k.rank_h_star), (0, 2, 5, 3));
        let v = decide(&e, &cfg()).unwrap();
        assert!(!v.a_regular);
        assert!(v.failure_bound < crate::sampling::two_pow_neg(40));
    }

    #[test]
    fn diagonal_sl2_invariants() {
        let e = diagonal(SimpleFactor::sl(2).unwrap()).unwrap();
        let k = knop_invariants(&e, &cfg()).unwrap();
        assert_eq!((k.c, k.rk, k.dim_h_star), (0, 1, 1));
        assert!(decide(&e, &cfg()).unwrap().a_regular);
    }

    #[test]
    fn negatives_from_the_tables() {
        assert!(!decide(&gl_in_so(6).unwrap(), &cfg()).unwrap().a_regular);
        assert!(!satake_route(&gl_in_so(6).unwrap(), &cfg()).unwrap().a_regular);
        assert!(!decide(&sp_torus_split(3).unwrap(), &cfg()).unwrap().a_regular);
        assert!(decide_numerical(&gl_in_sp(2).unwrap(), &cfg()).unwrap().a_regular);
    }
}
