//! Command implementations. Each returns the report text for stdout, an
//! optional human summary for stderr, and the process exit code.

use std::thread;
use std::time::Instant;

use areg_core::catalog::{Catalog, CheckStatus};
use areg_core::criteria::{decide_regular_element, decide_with_catalog, knop_from_report, Verdict};
use areg_core::decomposition::{combined_verdict, is_strictly_indecomposable, split_pair};
use areg_core::sampling::Config;
use areg_core::slodowy::{principal_sl2, slice_regularity_check, slodowy_slice};
use areg_core::subalgebra::generic_stabilizer;
use areg_core::{Error, Family, LieAlgebra, RouteOutcome, SimpleFactor};
use serde::Serialize;

use crate::descriptor::PairDescriptorFile;
use crate::report::{
    log2_upper, matrix, rational, CatalogMatchReport, CertificateSummary, DecomposeReport, DisagreementReport,
    FactorizationReport, PairSliceReport, RouteReport, SliceReport, StabilizerReport, TablesReport, TripleReport,
    VerdictReport, SCHEMA_VERSION,
};
use crate::CliError;

pub const EXIT_YES: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;
pub const EXIT_NO: i32 = 3;

pub struct Options {
    pub cfg: Config,
    pub pretty: bool,
    pub catalog: Catalog,
}

#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub summary: String,
    pub exit_code: i32,
}

fn render<T: Serialize>(report: &T, pretty: bool) -> Result<String, CliError> {
    Ok(if pretty {
        serde_json::to_string_pretty(report)?
    } else {
        serde_json::to_string(report)?
    })
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn disagreement(
    input: PairDescriptorFile,
    factor: Option<usize>,
    routes: &[RouteOutcome],
    opts: &Options,
    start: Instant,
) -> Result<Outcome, CliError> {
    let report = DisagreementReport {
        schema_version: SCHEMA_VERSION,
        input,
        factor,
        routes: routes.iter().map(RouteReport::from).collect(),
        sampling: (&opts.cfg).into(),
        timing_ms: elapsed_ms(start),
    };
    let summary = routes
        .iter()
        .map(|r| format!("{}={}", r.route, yes_no(r.a_regular)))
        .collect::<Vec<_>>()
        .join(", ");
    Ok(Outcome {
        stdout: render(&report, opts.pretty)?,
        summary: format!("routes disagree: {summary}"),
        exit_code: EXIT_DISAGREEMENT,
    })
}

/// Splits the pair, decides every factor (concurrently), combines the
/// verdicts and looks the whole pair up in the catalog.
pub fn decide(input: PairDescriptorFile, opts: &Options) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let e = input.embedding()?;
    let alg = e.ambient();
    let factorization = split_pair(&e)?;
    let results: Vec<areg_core::Result<Verdict>> = thread::scope(|s| {
        let handles: Vec<_> = factorization
            .factors
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let cfg = opts.cfg.fork(1000 + i as u64);
                let catalog = &opts.catalog;
                s.spawn(move || decide_with_catalog(&p.embedding, &cfg, Some(catalog)))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("factor decision panicked"))
            .collect()
    });
    let mut verdicts = Vec::with_capacity(results.len());
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(v) => verdicts.push(v),
            Err(Error::RouteDisagreement(routes)) => return disagreement(input, Some(i), &routes, opts, start),
            Err(err) => return Err(err.into()),
        }
    }
    let verdict = combined_verdict(&factorization, &verdicts)?;
    let hit = opts.catalog.lookup(&e)?;
    if let Some(tabled) = hit.as_ref().and_then(|m| m.row.verdict) {
        if tabled != verdict.a_regular {
            let mut routes: Vec<RouteOutcome> = verdict
                .routes_agreed
                .iter()
                .map(|r| RouteOutcome {
                    route: r.clone(),
                    a_regular: verdict.a_regular,
                })
                .collect();
            routes.push(RouteOutcome {
                route: areg_core::criteria::ROUTE_TABLE.into(),
                a_regular: tabled,
            });
            return disagreement(input, None, &routes, opts, start);
        }
    }
    let matches_expected = input.expected_verdict.map(|x| x == verdict.a_regular);
    let report = VerdictReport {
        schema_version: SCHEMA_VERSION,
        g: alg.name(),
        dim_g: alg.dim(),
        dim_h: e.dim(),
        a_regular: verdict.a_regular,
        certificate: CertificateSummary::new(alg, &verdict.certificate),
        invariants: verdict.invariants.map(Into::into),
        routes: verdict.routes_agreed.clone(),
        failure_bound: rational(&verdict.failure_bound),
        failure_bound_log2_max: log2_upper(&verdict.failure_bound),
        catalog_match: hit.as_ref().map(CatalogMatchReport::from),
        factorization: FactorizationReport::new(alg, &factorization, Some(&verdicts)),
        matches_expected,
        sampling: (&opts.cfg).into(),
        timing_ms: elapsed_ms(start),
        input,
    };
    let mut summary = format!(
        "({}, {}) dim h = {}: a-regular {} [{}]",
        report.g,
        e.label(),
        report.dim_h,
        yes_no(report.a_regular),
        report.routes.join(", ")
    );
    if let Some(i) = &report.invariants {
        summary += &format!("; c = {}, rk = {}, dim h_* = {}, dim B = {}", i.c, i.rk, i.dim_h_star, i.dim_borel);
    }
    if let Some(k) = report.failure_bound_log2_max {
        summary += &format!("; failure bound <= 2^{k}");
    }
    if let Some(m) = &report.catalog_match {
        summary += &format!("; catalog row {}", m.row_id);
    }
    if matches_expected == Some(false) {
        summary += "; differs from expected_verdict";
    }
    let exit_code = match (matches_expected, report.a_regular) {
        (Some(false), _) => EXIT_DISAGREEMENT,
        (_, true) => EXIT_YES,
        (_, false) => EXIT_NO,
    };
    Ok(Outcome {
        stdout: render(&report, opts.pretty)?,
        summary,
        exit_code,
    })
}

pub fn verify_tables(max_rank: usize, opts: &Options) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let pretty = opts.pretty;
    let summary = opts.catalog.verify_tables_with(max_rank, &opts.cfg, |c| {
        if pretty {
            eprintln!("  {:<7} {:?} {:?}", c.row_id, c.status, c.binding);
        }
    })?;
    let report = TablesReport::new(max_rank, opts.catalog.sha256(), &summary, &opts.cfg, elapsed_ms(start));
    let mut text = format!(
        "max_rank {}: {} instances, {} rows verified, {} mismatches, {} errors, {} rows skipped ({}), {} rows empty",
        max_rank,
        report.instances_checked,
        report.rows_verified,
        report.mismatches,
        report.errors,
        report.skipped_rows.len(),
        report.skipped_rows.join(" "),
        report.empty_rows.len()
    );
    for c in summary.checks.iter().filter(|c| c.status != CheckStatus::Match) {
        text += &format!("\n  {} {:?}: {:?} {}", c.row_id, c.binding, c.status, c.message.as_deref().unwrap_or(""));
    }
    let exit_code = if report.mismatches > 0 {
        EXIT_DISAGREEMENT
    } else if report.errors > 0 {
        EXIT_ERROR
    } else {
        EXIT_YES
    };
    Ok(Outcome {
        stdout: render(&report, opts.pretty)?,
        summary: text,
        exit_code,
    })
}

/// Parses `A2`, `B3+C2` or `A1,A1`.
pub fn parse_algebra(spec: &str) -> Result<Vec<SimpleFactor>, CliError> {
    spec.split(['+', ','])
        .map(|part| {
            let part = part.trim();
            let mut chars = part.chars();
            let letter = chars.next().ok_or_else(|| CliError::Usage(format!("empty factor in `{spec}`")))?;
            let family = Family::parse(&letter.to_string())?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad rank in `{part}`")))?;
            Ok(SimpleFactor::new(family, rank)?)
        })
        .collect()
}

pub enum SliceInput {
    Algebra(Vec<SimpleFactor>),
    Pair(PairDescriptorFile),
}

pub fn slice(input: SliceInput, samples: usize, opts: &Options) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let (alg, pair) = match input {
        SliceInput::Algebra(g) => (LieAlgebra::new(&g, 0)?, None),
        SliceInput::Pair(d) => {
            let e = d.embedding()?;
            (e.ambient().clone(), Some((d, e)))
        }
    };
    let t = principal_sl2(&alg)?;
    let s = slodowy_slice(&alg, &t)?;
    let samples_regular = slice_regularity_check(&alg, &s, samples, opts.cfg.seed);
    let pair = match pair {
        Some((d, e)) => {
            let v = decide_regular_element(&e, &opts.cfg)?;
            Some(PairSliceReport {
                input: d,
                nonempty: v.a_regular,
                failure_bound: rational(&v.failure_bound),
            })
        }
        None => None,
    };
    let mats = |x: &[areg_core::Rational]| alg.to_matrices(x).iter().map(matrix).collect();
    let report = SliceReport {
        schema_version: SCHEMA_VERSION,
        g: alg.name(),
        rank: alg.rank(),
        triple: TripleReport {
            e: mats(&t.e),
            h: mats(&t.h),
            f: mats(&t.f),
        },
        slice_dim: s.dim(),
        degrees: s.graded.iter().map(|(d, _)| *d).collect(),
        regularity_samples: samples,
        samples_regular,
        pair,
        sampling: (&opts.cfg).into(),
        timing_ms: elapsed_ms(start),
    };
    let mut summary = format!(
        "{}: principal triple ok, dim slice = {} (rank {}), {} samples regular: {}",
        report.g, report.slice_dim, report.rank, samples, samples_regular
    );
    if let Some(p) = &report.pair {
        summary += &format!("; hyperkahler slice non-empty: {}", yes_no(p.nonempty));
    }
    Ok(Outcome {
        stdout: render(&report, opts.pretty)?,
        summary,
        exit_code: if samples_regular { EXIT_YES } else { EXIT_ERROR },
    })
}

pub fn decompose(input: PairDescriptorFile, opts: &Options) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let e = input.embedding()?;
    let alg = e.ambient();
    let factorization = split_pair(&e)?;
    let ideals = e.ideal_decomposition(&opts.cfg)?;
    let report = DecomposeReport {
        schema_version: SCHEMA_VERSION,
        g: alg.name(),
        dim_h: e.dim(),
        center_dim: ideals.center.dim(),
        simple_ideal_dims: ideals.simple_ideals.iter().map(|s| s.dim()).collect(),
        derived_dim: e.derived().dim(),
        factorization: FactorizationReport::new(alg, &factorization, None),
        strictly_indecomposable: is_strictly_indecomposable(&e)?,
        sampling: (&opts.cfg).into(),
        timing_ms: elapsed_ms(start),
        input,
    };
    let summary = format!(
        "({}, {}): h = center of dim {} + simple ideals of dims {:?}; {} factor(s), strictly indecomposable: {}",
        report.g,
        e.label(),
        report.center_dim,
        report.simple_ideal_dims,
        report.factorization.factors.len(),
        report.strictly_indecomposable
    );
    Ok(Outcome {
        stdout: render(&report, opts.pretty)?,
        summary,
        exit_code: EXIT_YES,
    })
}

pub fn stabilizer(input: PairDescriptorFile, opts: &Options) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let e = input.embedding()?;
    let alg = e.ambient();
    let r = generic_stabilizer(&e, &opts.cfg)?;
    let k = knop_from_report(&e, &r)?;
    let report = StabilizerReport::new(
        input.clone(),
        alg,
        e.dim(),
        e.perp()?.dim(),
        &r,
        k.c,
        k.rk,
        &opts.cfg,
        elapsed_ms(start),
    );
    let summary = format!(
        "({}, {}): dim h_* = {}, abelian: {}, rank h_* = {}, c = {}, rk = {}",
        report.g,
        e.label(),
        report.dim_h_star,
        report.is_abelian,
        report.rank_h_star,
        report.c,
        report.rk
    );
    Ok(Outcome {
        stdout: render(&report, opts.pretty)?,
        summary,
        exit_code: EXIT_YES,
    })
}
