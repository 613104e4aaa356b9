//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Run alone with `cargo test -p areg-core --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use areg_core::catalog::{Catalog, CheckStatus, TableId};
use areg_core::criteria::{
    decide, verify_witness, Verdict, ROUTE_ABELIAN_STABILIZER, ROUTE_NUMERICAL, ROUTE_REGULAR_ELEMENT,
    ROUTE_SATAKE,
};
use areg_core::decomposition::{
    combined_verdict, direct_sum, is_indecomposable, is_strictly_indecomposable, split_pair,
};
use areg_core::linalg::rat;
use areg_core::poly::char_poly;
use areg_core::sampling::{two_pow_neg, Config, Sampler};
use areg_core::slodowy::{
    check_triple, principal_sl2, slice_nonempty, slice_regularity_check, slice_representative_sl, slodowy_slice,
};
use areg_core::subalgebra::{construct, generic_stabilizer, Embedding, Param};
use areg_core::{LieAlgebra, RationalMatrix, SimpleFactor};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn cfg() -> Config {
    Config::with_seed(2024)
}

fn build(name: &str, params: &[i64]) -> Result<Embedding, String> {
    let params: Vec<Param> = params.iter().map(|&p| Param::Int(p)).collect();
    construct(name, &params).map_err(|e| format!("{name}{params:?}: {e}"))
}

fn run_decide(label: &str, e: &Embedding) -> Result<Verdict, String> {
    decide(e, &cfg()).map_err(|err| format!("{label}: {err}"))
}

struct Instance {
    label: String,
    e: Embedding,
    expected: bool,
}

fn instance(name: &str, params: &[i64], expected: bool) -> Result<Instance, String> {
    Ok(Instance {
        label: format!("{name}{params:?}"),
        e: build(name, params)?,
        expected,
    })
}

fn criterion_1() -> Result<Vec<Instance>, String> {
    let mut out = Vec::new();
    for p in 1..=5 {
        for q in p..=5 {
            out.push(instance("block_sgl", &[p, q], q - p <= 1)?);
        }
    }
    Ok(out)
}

fn criterion_3() -> Result<Vec<Instance>, String> {
    let mut out = vec![
        instance("so_in_sl", &[3], true)?,
        instance("so_in_sl", &[4], true)?,
        instance("block_sgl", &[2, 2], true)?,
        instance("block_sgl", &[2, 3], true)?,
        instance("so_block", &[3, 2], true)?,
        instance("so_block", &[3, 3], true)?,
        instance("so_block", &[4, 2], true)?,
        instance("gl_in_sp", &[2], true)?,
    ];
    for s in [
        SimpleFactor::sl(2).unwrap(),
        SimpleFactor::sl(3).unwrap(),
        SimpleFactor::sp(4).unwrap(),
    ] {
        out.push(Instance {
            label: format!("diagonal[{}]", s.name()),
            e: construct("diagonal", &[Param::Factor(s)]).map_err(|e| e.to_string())?,
            expected: true,
        });
    }
    Ok(out)
}

fn criterion_4() -> Result<Vec<Instance>, String> {
    Ok(vec![
        instance("block_sgl", &[2, 5], false)?,
        instance("gl_in_so", &[6], false)?,
        instance("gl_in_so", &[8], false)?,
        instance("sp_torus_split", &[3], false)?,
        instance("sp_torus_split", &[4], false)?,
    ])
}

fn criterion_5() -> Result<Vec<Instance>, String> {
    Ok(vec![
        instance("block_sl", &[2, 3], true)?,
        instance("sp_c_in_sl_odd", &[1], true)?,
        instance("sp_in_sl_odd", &[2], true)?,
        instance("gl_in_so", &[5], true)?,
        instance("sl_pair_diag", &[2], true)?,
        instance("so_pair_diag", &[5], true)?,
        instance("sp_pair_diag", &[1, 1], true)?,
        instance("sp_triple_diag", &[1, 1, 1], true)?,
        instance("sp_chain", &[1, 1], true)?,
    ])
}

/// Decides every instance and checks the expected verdict; YES needs an
/// exact witness.
fn decide_all(instances: &[Instance], verdicts: &mut Vec<(String, Verdict)>) -> Check {
    for inst in instances {
        let v = run_decide(&inst.label, &inst.e)?;
        ensure!(
            v.a_regular == inst.expected,
            "{}: computed {}, expected {}",
            inst.label,
            v.a_regular,
            inst.expected
        );
        if v.a_regular {
            let w = v.witness().ok_or_else(|| format!("{}: YES without an exact witness", inst.label))?;
            ensure!(
                verify_witness(&inst.e, w).map_err(|e| e.to_string())?,
                "{}: witness fails the exact re-check",
                inst.label
            );
        }
        verdicts.push((inst.label.clone(), v));
    }
    Ok(())
}

fn check_2() -> Check {
    for (p, q, dim) in [(2, 2, 1), (2, 3, 2), (2, 4, 5), (3, 3, 2)] {
        let e = build("block_sgl", &[p, q])?;
        let r = generic_stabilizer(&e, &cfg()).map_err(|e| e.to_string())?;
        ensure!(r.dim == dim, "({p},{q}): dim h_* = {}, expected {dim}", r.dim);
        ensure!(r.is_abelian == (q - p <= 1), "({p},{q}): abelian = {}", r.is_abelian);
    }
    Ok(())
}

fn check_4_bounds(verdicts: &[(String, Verdict)]) -> Check {
    for (label, v) in verdicts {
        ensure!(
            v.failure_bound < two_pow_neg(40),
            "{label}: failure bound {} is not below 2^-40",
            v.failure_bound
        );
    }
    Ok(())
}

fn check_6(instances: &[&Instance], verdicts: &[(String, Verdict)]) -> Check {
    for (inst, (label, v)) in instances.iter().zip(verdicts) {
        let routes: BTreeSet<&str> = v.routes_agreed.iter().map(String::as_str).collect();
        for r in [ROUTE_REGULAR_ELEMENT, ROUTE_ABELIAN_STABILIZER, ROUTE_NUMERICAL] {
            ensure!(routes.contains(r), "{label}: route {r} missing from {routes:?}");
        }
        if inst.e.involution().is_some() {
            ensure!(routes.contains(ROUTE_SATAKE), "{label}: symmetric pair without the Satake route");
        }
    }
    Ok(())
}

fn check_7(instances: &[&Instance], verdicts: &[(String, Verdict)]) -> Check {
    for (inst, (label, v)) in instances.iter().zip(verdicts) {
        let i = v.invariants.ok_or_else(|| format!("{label}: no invariants"))?;
        let lhs = i.c + i.rk + inst.e.dim();
        ensure!(i.dim_borel == inst.e.ambient().borel_dim(), "{label}: wrong dim B");
        ensure!(
            (lhs == i.dim_borel) == v.a_regular,
            "{label}: c + rk + dim h = {lhs}, dim B = {}, verdict {}",
            i.dim_borel,
            v.a_regular
        );
        let g = inst.e.ambient();
        ensure!(
            2 * i.c + i.rk + 2 * inst.e.dim() == g.dim() + i.dim_h_star,
            "{label}: 2c + rk does not match dim g - 2 dim h + dim h_*"
        );
        ensure!(i.rk + i.rank_h_star == g.rank(), "{label}: rk + rank h_* != rank g");
    }
    Ok(())
}

fn check_8() -> Check {
    for n in [2, 3] {
        let e = build("example_516", &[n])?;
        ensure!(is_indecomposable(&e).map_err(|e| e.to_string())?, "n = {n}: not indecomposable");
        ensure!(
            !is_strictly_indecomposable(&e).map_err(|e| e.to_string())?,
            "n = {n}: strictly indecomposable"
        );
    }
    let e = direct_sum(&build("so_in_sl", &[3])?, &build("block_sgl", &[2, 4])?).map_err(|e| e.to_string())?;
    let f = split_pair(&e).map_err(|e| e.to_string())?;
    ensure!(f.len() == 2, "composite pair splits into {} factors", f.len());
    let per: Vec<Verdict> = f
        .factors
        .iter()
        .map(|p| run_decide("factor", &p.embedding))
        .collect::<Result<_, _>>()?;
    let combined = combined_verdict(&f, &per).map_err(|e| e.to_string())?;
    let whole = run_decide("composite", &e)?;
    ensure!(!combined.a_regular, "combined verdict is YES");
    ensure!(combined.a_regular == whole.a_regular, "combined and whole-pair verdicts differ");
    Ok(())
}

fn check_9() -> Check {
    let factors = [
        SimpleFactor::sl(2),
        SimpleFactor::sl(3),
        SimpleFactor::sl(4),
        SimpleFactor::sl(5),
        SimpleFactor::so(5),
        SimpleFactor::sp(4),
        SimpleFactor::sp(6),
    ];
    for (k, f) in factors.into_iter().enumerate() {
        let f = f.map_err(|e| e.to_string())?;
        let l = LieAlgebra::new(&[f], 0).map_err(|e| e.to_string())?;
        let t = principal_sl2(&l).map_err(|e| e.to_string())?;
        ensure!(check_triple(&l, &t), "{}: bracket relations fail", f.name());
        let s = slodowy_slice(&l, &t).map_err(|e| e.to_string())?;
        ensure!(s.dim() == l.rank(), "{}: dim slice {} != rank {}", f.name(), s.dim(), l.rank());
        ensure!(slice_regularity_check(&l, &s, 20, 77 + k as u64), "{}: singular slice sample", f.name());
    }

    // 20 regular inputs, five in each of sl2..sl5.
    let mut rng = Sampler::new(99, 6);
    for n in 2..=5 {
        let l = LieAlgebra::new(&[SimpleFactor::sl(n).unwrap()], 0).unwrap();
        let s = slodowy_slice(&l, &principal_sl2(&l).unwrap()).unwrap();
        let mut done = 0;
        while done < 5 {
            let x = rng.coefficients(l.dim());
            if !l.is_regular(&x).0 {
                continue;
            }
            let y = slice_representative_sl(&l, &s, &x)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("sl{n}: regular input rejected"))?;
            ensure!(
                char_poly(&l.factor_matrix(0, &y)) == char_poly(&l.factor_matrix(0, &x)),
                "sl{n}: characteristic polynomial changed"
            );
            let on_slice: Vec<_> = y.iter().zip(&s.base).map(|(a, b)| a - b).collect();
            ensure!(s.directions.contains_vector(&on_slice), "sl{n}: representative is off the slice");
            done += 1;
        }
    }

    let sl3 = LieAlgebra::new(&[SimpleFactor::sl(3).unwrap()], 0).unwrap();
    let sl4 = LieAlgebra::new(&[SimpleFactor::sl(4).unwrap()], 0).unwrap();
    let mat = |l: &LieAlgebra, rows: &[&[i64]]| l.from_matrices(&[RationalMatrix::from_i64(rows)]).unwrap().into_coords();
    let singular = [
        (&sl3, vec![rat(0); 8]),
        (&sl3, mat(&sl3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, -2]])),
        (&sl3, mat(&sl3, &[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]])),
        (&sl4, vec![rat(0); 15]),
        (&sl4, mat(&sl4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -1]])),
    ];
    for (i, (l, x)) in singular.iter().enumerate() {
        let s = slodowy_slice(l, &principal_sl2(l).unwrap()).unwrap();
        ensure!(
            slice_representative_sl(l, &s, x).map_err(|e| e.to_string())?.is_none(),
            "singular input {i} got a representative"
        );
    }
    Ok(())
}

fn check_10(instances: &[&Instance], verdicts: &[(String, Verdict)]) -> Check {
    for (inst, (label, v)) in instances.iter().zip(verdicts) {
        let s = slice_nonempty(&inst.e, &cfg()).map_err(|e| e.to_string())?;
        ensure!(s == v.a_regular, "{label}: slice non-empty = {s}, decide = {}", v.a_regular);
    }
    Ok(())
}

fn check_11() -> Check {
    let catalog = Catalog::builtin().map_err(|e| e.to_string())?;
    let summary = catalog.verify_tables(4, &cfg()).map_err(|e| e.to_string())?;
    let bad: Vec<String> = summary
        .checks
        .iter()
        .filter(|c| c.status != CheckStatus::Match)
        .map(|c| format!("{} {:?}: {:?} {:?}", c.row_id, c.binding, c.status, c.message))
        .collect();
    ensure!(bad.is_empty(), "non-matching checks: {bad:?}");
    let skipped: BTreeSet<&str> = summary.skipped_rows.iter().map(String::as_str).collect();
    let documented: BTreeSet<&str> = catalog
        .rows()
        .iter()
        .filter(|r| r.constructor.is_none())
        .map(|r| r.id.as_str())
        .collect();
    ensure!(skipped == documented, "skipped {skipped:?}, documented {documented:?}");
    for id in &skipped {
        let row = catalog.row(id).unwrap();
        let notes = row.notes.to_lowercase();
        let exceptional = notes.contains("exceptional") && row.g.starts_with(['e', 'f', 'g']);
        let spin = row.table == TableId::NotRegular && notes.contains("spin");
        ensure!(exceptional || spin, "{id} is skipped but neither exceptional nor spin");
    }
    ensure!(summary.rows_verified() >= 25, "only {} rows verified", summary.rows_verified());
    Ok(())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut results: Vec<(u32, &str, Check)> = Vec::new();

    let built = (|| Ok::<_, String>((criterion_1()?, criterion_3()?, criterion_4()?, criterion_5()?)))();
    let (c1, c3, c4, c5) = match built {
        Ok(b) => b,
        Err(e) => {
            println!("acceptance: cannot build instances: {e}");
            return ExitCode::FAILURE;
        }
    };

    let mut v1 = Vec::new();
    let r1 = decide_all(&c1, &mut v1);
    results.push((1, "SL(p+q) sweep, 1 <= p <= q <= 5", r1.clone()));
    results.push((2, "generic stabilizer dimensions", check_2()));
    let mut v3 = Vec::new();
    let r3 = decide_all(&c3, &mut v3);
    results.push((3, "symmetric-table positives with exact witnesses", r3.clone()));
    let mut v4 = Vec::new();
    let r4 = decide_all(&c4, &mut v4).and_then(|_| check_4_bounds(&v4));
    results.push((4, "not-regular-table negatives, failure bound < 2^-40", r4.clone()));
    let mut v5 = Vec::new();
    let r5 = decide_all(&c5, &mut v5);
    results.push((5, "spherical-table positives at minimal parameters", r5.clone()));

    let all: Vec<&Instance> = c1.iter().chain(&c3).chain(&c4).chain(&c5).collect();
    let verdicts: Vec<(String, Verdict)> = v1.into_iter().chain(v3).chain(v4).chain(v5).collect();
    let complete = r1.is_ok() && r3.is_ok() && r4.is_ok() && r5.is_ok();
    let gate = |f: &dyn Fn() -> Check| {
        if complete {
            f()
        } else {
            Err("criteria 1-5 did not all decide".into())
        }
    };
    results.push((6, "route consensus", gate(&|| check_6(&all, &verdicts))));
    results.push((7, "numerical criterion identity", gate(&|| check_7(&all, &verdicts))));
    results.push((8, "decomposition", check_8()));
    results.push((9, "Slodowy slices", check_9()));
    results.push((10, "slice non-emptiness agrees with decide", gate(&|| check_10(&all, &verdicts))));
    results.push((11, "verify-tables at max_rank 4", check_11()));

    let mut failed = 0;
    for (n, name, r) in &results {
        match r {
            Ok(()) => println!("criterion {n:>2}: PASS  {name}"),
            Err(e) => {
                failed += 1;
                println!("criterion {n:>2}: FAIL  {name}: {e}");
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        results.len() - failed,
        results.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
