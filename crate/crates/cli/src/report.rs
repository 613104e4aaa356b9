//! Serializable reports. Everything but `timing_ms` is a function of the
//! input and the sampling configuration.

use std::collections::BTreeMap;

use areg_core::catalog::{BindingValue, CheckStatus, Match, RowCheck, TableSummary};
use areg_core::criteria::{Certificate, Invariants, Verdict};
use areg_core::decomposition::PairFactorization;
use areg_core::sampling::Config;
use areg_core::subalgebra::GenericStabilizerReport;
use areg_core::{LieAlgebra, Rational, RationalMatrix, RouteOutcome};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::descriptor::PairDescriptorFile;

pub const SCHEMA_VERSION: u32 = 1;

pub fn rational(r: &Rational) -> String {
    r.to_string()
}

pub fn vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational).collect()
}

pub fn matrix(m: &RationalMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| vector(m.row(i))).collect()
}

/// `ceil(log2 r)` for a positive rational; `None` for zero.
pub fn log2_upper(r: &Rational) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    let pow = |k: i64| {
        let two = Rational::from_integer(2.into());
        if k >= 0 {
            num_traits::pow(two, k as usize)
        } else {
            num_traits::pow(two.recip(), k.unsigned_abs() as usize)
        }
    };
    let mut k = r.numer().bits() as i64 - r.denom().bits() as i64 + 1;
    while *r <= pow(k - 1) {
        k -= 1;
    }
    Some(k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingReport {
    pub seed: u64,
    pub trials: u32,
    pub coeff_bound: u64,
}

impl From<&Config> for SamplingReport {
    fn from(c: &Config) -> Self {
        Self {
            seed: c.seed,
            trials: c.trials,
            coeff_bound: c.coeff_bound,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateSummary {
    ExactRegularElement {
        /// Witness as one matrix per simple factor of `g`.
        witness: Vec<Vec<Vec<String>>>,
        centralizer_dim: usize,
    },
    AbelianStabilizer {
        dim: usize,
        is_abelian: bool,
        reductive_rank: usize,
    },
    Numerical {
        c: usize,
        rk: usize,
        dim_h: usize,
        dim_borel: usize,
    },
    Satake {
        cartan_dim: usize,
        centralizer_dim: usize,
        abelian: bool,
    },
    Table {
        row_id: String,
    },
    RandomizedNegative {
        failure_bound: String,
    },
}

impl CertificateSummary {
    pub fn new(alg: &LieAlgebra, c: &Certificate) -> Self {
        match c {
            Certificate::ExactRegularElement {
                witness,
                centralizer_dim,
            } => Self::ExactRegularElement {
                witness: alg.to_matrices(witness).iter().map(matrix).collect(),
                centralizer_dim: *centralizer_dim,
            },
            Certificate::AbelianStabilizer(r) => Self::AbelianStabilizer {
                dim: r.dim,
                is_abelian: r.is_abelian,
                reductive_rank: r.reductive_rank,
            },
            Certificate::Numerical { c, rk, dim_h, dim_borel } => Self::Numerical {
                c: *c,
                rk: *rk,
                dim_h: *dim_h,
                dim_borel: *dim_borel,
            },
            Certificate::Satake(s) => Self::Satake {
                cartan_dim: s.cartan_dim,
                centralizer_dim: s.centralizer_dim,
                abelian: s.abelian,
            },
            Certificate::Table { row_id } => Self::Table { row_id: row_id.clone() },
            Certificate::RandomizedNegative { failure_bound } => Self::RandomizedNegative {
                failure_bound: rational(failure_bound),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub c: usize,
    pub rk: usize,
    pub dim_h_star: usize,
    pub rank_h_star: usize,
    pub dim_borel: usize,
}

impl From<Invariants> for InvariantsReport {
    fn from(i: Invariants) -> Self {
        Self {
            c: i.c,
            rk: i.rk,
            dim_h_star: i.dim_h_star,
            rank_h_star: i.rank_h_star,
            dim_borel: i.dim_borel,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogMatchReport {
    pub row_id: String,
    pub table: String,
    pub line: u32,
    pub params: BTreeMap<String, BindingValue>,
    pub verdict: Option<bool>,
}

impl From<&Match> for CatalogMatchReport {
    fn from(m: &Match) -> Self {
        Self {
            row_id: m.row.id.clone(),
            table: m.row.table.as_str().into(),
            line: m.row.line,
            params: m.binding.clone(),
            verdict: m.row.verdict,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    /// Simple factors of `g` in this block, e.g. `["sl3"]`.
    pub g: Vec<String>,
    pub dim_h: usize,
    pub strictly_indecomposable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_regular: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub routes: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure_bound: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationReport {
    pub indecomposable: bool,
    pub factors: Vec<FactorReport>,
}

impl FactorizationReport {
    pub fn new(alg: &LieAlgebra, f: &PairFactorization, verdicts: Option<&[Verdict]>) -> Self {
        let factors = f
            .factors
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let v = verdicts.and_then(|vs| vs.get(i));
                FactorReport {
                    g: p.factor_indices.iter().map(|&k| alg.factors()[k].name()).collect(),
                    dim_h: p.h_part.dim(),
                    strictly_indecomposable: p.strict,
                    a_regular: v.map(|v| v.a_regular),
                    routes: v.map(|v| v.routes_agreed.clone()),
                    failure_bound: v.map(|v| rational(&v.failure_bound)),
                }
            })
            .collect();
        Self {
            indecomposable: f.len() == 1,
            factors,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteReport {
    pub route: String,
    pub a_regular: bool,
}

impl From<&RouteOutcome> for RouteReport {
    fn from(r: &RouteOutcome) -> Self {
        Self {
            route: r.route.clone(),
            a_regular: r.a_regular,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub schema_version: u32,
    pub input: PairDescriptorFile,
    pub g: String,
    pub dim_g: usize,
    pub dim_h: usize,
    pub a_regular: bool,
    pub certificate: CertificateSummary,
    pub invariants: Option<InvariantsReport>,
    pub routes: Vec<String>,
    /// Exact bound on the probability that sampling produced a wrong NO.
    pub failure_bound: String,
    pub failure_bound_log2_max: Option<i64>,
    pub catalog_match: Option<CatalogMatchReport>,
    pub factorization: FactorizationReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matches_expected: Option<bool>,
    pub sampling: SamplingReport,
    pub timing_ms: u64,
}

/// Emitted instead of a verdict when routes disagree (exit code 2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisagreementReport {
    pub schema_version: u32,
    pub input: PairDescriptorFile,
    /// Factor of the split pair in which the routes disagreed, if any.
    pub factor: Option<usize>,
    pub routes: Vec<RouteReport>,
    pub sampling: SamplingReport,
    pub timing_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub row_id: String,
    pub params: BTreeMap<String, BindingValue>,
    pub status: CheckStatus,
    pub expected: bool,
    pub computed: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub routes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl From<&RowCheck> for CheckReport {
    fn from(c: &RowCheck) -> Self {
        Self {
            row_id: c.row_id.clone(),
            params: c.binding.clone(),
            status: c.status.clone(),
            expected: c.expected,
            computed: c.computed.as_ref().map(|v| v.a_regular),
            routes: c.computed.as_ref().map(|v| v.routes_agreed.clone()).unwrap_or_default(),
            message: c.message.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesReport {
    pub schema_version: u32,
    pub max_rank: usize,
    pub catalog_sha256: String,
    pub instances_checked: usize,
    pub rows_verified: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub errors: usize,
    /// Rows without a constructor (exceptional and spin rows).
    pub skipped_rows: Vec<String>,
    /// Constructible rows with no instance up to `max_rank`.
    pub empty_rows: Vec<String>,
    pub checks: Vec<CheckReport>,
    pub sampling: SamplingReport,
    pub timing_ms: u64,
}

impl TablesReport {
    pub fn new(max_rank: usize, sha256: &str, s: &TableSummary, cfg: &Config, timing_ms: u64) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            max_rank,
            catalog_sha256: sha256.into(),
            instances_checked: s.checks.len(),
            rows_verified: s.rows_verified(),
            matches: s.count(&CheckStatus::Match),
            mismatches: s.count(&CheckStatus::Mismatch),
            errors: s.count(&CheckStatus::Error),
            skipped_rows: s.skipped_rows.clone(),
            empty_rows: s.empty_rows.clone(),
            checks: s.checks.iter().map(CheckReport::from).collect(),
            sampling: cfg.into(),
            timing_ms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub e: Vec<Vec<Vec<String>>>,
    pub h: Vec<Vec<Vec<String>>>,
    pub f: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSliceReport {
    pub input: PairDescriptorFile,
    /// Whether the hyperkähler slice of `T*(G/H)` is non-empty.
    pub nonempty: bool,
    pub failure_bound: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceReport {
    pub schema_version: u32,
    pub g: String,
    pub rank: usize,
    pub triple: TripleReport,
    pub slice_dim: usize,
    /// `ad_h`-degrees of the graded slice basis.
    pub degrees: Vec<i64>,
    pub regularity_samples: usize,
    pub samples_regular: bool,
    pub pair: Option<PairSliceReport>,
    pub sampling: SamplingReport,
    pub timing_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub schema_version: u32,
    pub input: PairDescriptorFile,
    pub g: String,
    pub dim_h: usize,
    pub center_dim: usize,
    pub simple_ideal_dims: Vec<usize>,
    pub derived_dim: usize,
    pub factorization: FactorizationReport,
    pub strictly_indecomposable: bool,
    pub sampling: SamplingReport,
    pub timing_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerReport {
    pub schema_version: u32,
    pub input: PairDescriptorFile,
    pub g: String,
    pub dim_h: usize,
    pub dim_perp: usize,
    pub dim_h_star: usize,
    pub is_abelian: bool,
    pub rank_h_star: usize,
    pub sample: Vec<Vec<Vec<String>>>,
    pub c: usize,
    pub rk: usize,
    pub failure_bound: String,
    pub sampling: SamplingReport,
    pub timing_ms: u64,
}

impl StabilizerReport {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        input: PairDescriptorFile,
        alg: &LieAlgebra,
        dim_h: usize,
        dim_perp: usize,
        r: &GenericStabilizerReport,
        c: usize,
        rk: usize,
        cfg: &Config,
        timing_ms: u64,
    ) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            input,
            g: alg.name(),
            dim_h,
            dim_perp,
            dim_h_star: r.dim,
            is_abelian: r.is_abelian,
            rank_h_star: r.reductive_rank,
            sample: alg.to_matrices(&r.sample).iter().map(matrix).collect(),
            c,
            rk,
            failure_bound: rational(&r.failure_bound),
            sampling: cfg.into(),
            timing_ms,
        }
    }
}
