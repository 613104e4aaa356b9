use std::collections::BTreeSet;

use areg_core::criteria::{decide, knop_invariants, satake_route};
use areg_core::linalg::{rat, rank_and_kernel, Rational, RationalMatrix, Subspace};
use areg_core::sampling::Config;
use areg_core::slodowy::slice_nonempty;
use areg_core::subalgebra::{construct, generic_stabilizer, Embedding, Param};
use areg_core::{LieAlgebra, SimpleFactor};
use proptest::prelude::*;

fn algebras() -> Vec<LieAlgebra> {
    let fs = [
        vec![SimpleFactor::sl(2).unwrap()],
        vec![SimpleFactor::sl(3).unwrap()],
        vec![SimpleFactor::sl(4).unwrap()],
        vec![SimpleFactor::so(5).unwrap()],
        vec![SimpleFactor::sp(4).unwrap()],
        vec![SimpleFactor::so(6).unwrap()],
        vec![SimpleFactor::sl(2).unwrap(), SimpleFactor::sp(4).unwrap()],
    ];
    fs.iter().map(|f| LieAlgebra::new(f, 0).unwrap()).collect()
}

/// Small pairs covering symmetric, spherical and non-spherical cases.
fn pairs() -> Vec<Embedding> {
    let ints = |v: &[i64]| v.iter().map(|&x| Param::Int(x)).collect::<Vec<_>>();
    [
        ("block_sgl", ints(&[1, 2])),
        ("block_sgl", ints(&[2, 2])),
        ("block_sgl", ints(&[1, 3])),
        ("so_in_sl", ints(&[3])),
        ("so_in_sl", ints(&[4])),
        ("gl_in_sp", ints(&[2])),
        ("so_block", ints(&[3, 2])),
        ("gl_in_so", ints(&[5])),
        ("gl_in_so", ints(&[6])),
        ("sp_torus_split", ints(&[3])),
        ("sp_in_sl_odd", ints(&[2])),
        ("sl_upper", ints(&[2, 3])),
        ("diagonal", vec![Param::Factor(SimpleFactor::sl(3).unwrap())]),
        ("sl_pair_diag", ints(&[2])),
        ("example_516", ints(&[2])),
    ]
    .iter()
    .map(|(n, p)| construct(n, p).unwrap())
    .collect()
}

fn vec_of(entries: Vec<i64>) -> Vec<Rational> {
    entries.into_iter().map(rat).collect()
}

fn element(alg: &LieAlgebra, coeffs: &[i64]) -> Vec<Rational> {
    (0..alg.dim()).map(|i| rat(coeffs[i % coeffs.len()] * (1 + (i as i64 % 3)) - (i as i64 % 2))).collect()
}

fn matrix_strategy() -> impl Strategy<Value = RationalMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |e| {
            let rows = e.chunks(c).map(|row| vec_of(row.to_vec())).collect();
            RationalMatrix::from_rows(c, rows).unwrap()
        })
    })
}

fn subspace_strategy(n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=n)
        .prop_map(move |vs| Subspace::span(n, &vs.into_iter().map(vec_of).collect::<Vec<_>>()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_transpose_invariant(m in matrix_strategy()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let (rank, kernel) = rank_and_kernel(&m);
        prop_assert_eq!(rank + kernel.dim(), m.cols());
        for v in kernel.basis() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn subspace_basis_is_canonical(
        vs in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..5),
        mix in prop::collection::vec(-2i64..=2, 4),
    ) {
        let vs: Vec<Vec<Rational>> = vs.into_iter().map(vec_of).collect();
        let a = Subspace::span(5, &vs).unwrap();
        // Same span written with extra combinations and in reverse order.
        let mut other: Vec<Vec<Rational>> = vs.iter().rev().cloned().collect();
        let combo: Vec<Rational> = (0..5)
            .map(|j| vs.iter().zip(&mix).map(|(v, c)| &v[j] * rat(*c)).sum())
            .collect();
        other.push(combo);
        let b = Subspace::span(5, &other).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn grassmann_identity(u in subspace_strategy(5), w in subspace_strategy(5)) {
        let s = u.sum(&w).unwrap();
        let i = u.intersection(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains(&u) && s.contains(&w));
        prop_assert!(u.contains(&i) && w.contains(&i));
    }

    #[test]
    fn jacobi_and_form_invariance(
        k in 0usize..7,
        a in prop::collection::vec(-4i64..=4, 1..6),
        b in prop::collection::vec(-4i64..=4, 1..6),
        c in prop::collection::vec(-4i64..=4, 1..6),
    ) {
        let alg = &algebras()[k];
        let (x, y, z) = (element(alg, &a), element(alg, &b), element(alg, &c));
        let br = |p: &[Rational], q: &[Rational]| alg.bracket(p, q);
        let add = |p: Vec<Rational>, q: Vec<Rational>| p.into_iter().zip(q).map(|(s, t)| s + t).collect::<Vec<_>>();
        let jac = add(add(br(&x, &br(&y, &z)), br(&y, &br(&z, &x))), br(&z, &br(&x, &y)));
        prop_assert!(jac.iter().all(|v| *v == rat(0)));
        prop_assert_eq!(alg.killing_form(&br(&x, &y), &z), alg.killing_form(&x, &br(&y, &z)));
        let ad = alg.ad_matrix(&x).mul(&alg.ad_matrix(&y)).unwrap();
        prop_assert_eq!(alg.killing_form(&x, &y), ad.trace());
        prop_assert_eq!(alg.killing_form(&x, &y), alg.killing_form(&y, &x));
    }

    #[test]
    fn centralizers_are_at_least_rank(k in 0usize..7, a in prop::collection::vec(-4i64..=4, 1..6)) {
        let alg = &algebras()[k];
        let x = element(alg, &a);
        let (regular, dim) = alg.is_regular(&x);
        prop_assert!(dim >= alg.rank());
        prop_assert_eq!(regular, dim == alg.rank());
        prop_assert_eq!(dim, alg.centralizer(&x).dim());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn perp_is_h_stable(k in 0usize..15) {
        let e = &pairs()[k];
        let alg = e.ambient();
        let perp = e.perp().unwrap();
        prop_assert_eq!(perp.dim() + e.dim(), alg.dim());
        for h in e.h().basis() {
            for p in perp.basis() {
                prop_assert!(perp.contains_vector(&alg.bracket(h, p)));
            }
        }
    }

    #[test]
    fn generic_stabilizer_is_minimal(k in 0usize..15, seed in 0u64..1000, c in prop::collection::vec(-5i64..=5, 1..8)) {
        let e = &pairs()[k];
        let r = generic_stabilizer(e, &Config::with_seed(seed)).unwrap();
        let perp = e.perp().unwrap();
        let coeffs: Vec<Rational> = (0..perp.dim()).map(|i| rat(c[i % c.len()])).collect();
        let x = perp.combine(&coeffs);
        prop_assert!(e.stabilizer(&x).dim() >= r.dim);
        prop_assert!(e.h().contains(&r.stab_basis));
    }

    #[test]
    fn ideal_decomposition_is_a_direct_sum(k in 0usize..15, seed in 0u64..1000) {
        let e = &pairs()[k];
        let alg = e.ambient();
        let d = e.ideal_decomposition(&Config::with_seed(seed)).unwrap();
        let total: usize = d.center.dim() + d.simple_ideals.iter().map(Subspace::dim).sum::<usize>();
        prop_assert_eq!(total, e.dim());
        let mut sum = d.center.clone();
        for s in &d.simple_ideals {
            sum = sum.sum(s).unwrap();
        }
        prop_assert_eq!(&sum, e.h());
        for (i, a) in d.simple_ideals.iter().enumerate() {
            for b in d.simple_ideals.iter().skip(i + 1).chain(std::iter::once(&d.center)) {
                for x in a.basis() {
                    for y in b.basis() {
                        prop_assert!(alg.bracket(x, y).iter().all(|v| *v == rat(0)));
                    }
                }
            }
        }
    }

    #[test]
    fn satake_agrees_with_sampled_stabilizer(k in 0usize..15, seed in 0u64..1000) {
        let e = &pairs()[k];
        prop_assume!(e.involution().is_some());
        let cfg = Config::with_seed(seed);
        let s = satake_route(e, &cfg).unwrap();
        let r = generic_stabilizer(e, &cfg).unwrap();
        prop_assert_eq!(s.a_regular, r.is_abelian);
    }

    #[test]
    fn bridge_and_numerical_identity(k in 0usize..15, seed in 0u64..200) {
        let e = &pairs()[k];
        let cfg = Config::with_seed(seed);
        let v = decide(e, &cfg).unwrap();
        prop_assert_eq!(slice_nonempty(e, &cfg).unwrap(), v.a_regular);
        let kn = knop_invariants(e, &cfg).unwrap();
        let dim_b = e.ambient().borel_dim();
        prop_assert_eq!(kn.c + kn.rk + e.dim() == dim_b, v.a_regular);
        let routes: BTreeSet<&str> = v.routes_agreed.iter().map(String::as_str).collect();
        prop_assert!(routes.len() >= 3);
    }
}
