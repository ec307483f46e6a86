mod common;

use common::*;
use cubeforge_core::cfinite::RationalGF;
use cubeforge_core::cubic::{verify_param, WeightedQuadruple};
use cubeforge_core::forge::{certify_theorem, forge, render, CubicTheorem, ForgeError, ForgeOptions, TextFormat};
use cubeforge_core::quadform::{certify_orbit, OrbitKind};
use num_bigint::BigInt;
use num_traits::Signed;

fn small_opts() -> ForgeOptions {
    ForgeOptions { search_bound: 9, max_theorems: 4, ..ForgeOptions::default() }
}

fn check_bookkeeping(thm: &CubicTheorem) {
    assert!(thm.a.is_positive(), "a = {}", thm.a);
    let prov = thm.provenance.as_ref().expect("forged theorems carry provenance");
    let e = &prov.orbit.target;
    assert_eq!(thm.c, -&thm.b * cube(e), "c = -b·e³");
    assert_eq!(prov.param.weight(prov.solved_index).abs(), thm.b.abs());
    assert!(verify_param(&prov.param));
    assert!(certify_orbit(&prov.orbit.form, &prov.orbit.gf_m, &prov.orbit.gf_n, e, prov.orbit.kind)
        .unwrap()
        .is_certified());
    let seed = &prov.seed;
    let [x, y, z, w] = seed.coords();
    assert!((seed.a() * (cube(x) + cube(y)) + seed.b() * (cube(z) + cube(w))) == BigInt::from(0));
    assert_eq!(thm.rhs_kind, prov.orbit.kind);
}

#[test]
fn forge_is_deterministic_and_bookkept() {
    for (a, b) in [(1, -1), (1, 2)] {
        let first = forge(&bi(a), &bi(b), &small_opts()).unwrap();
        let second = forge(&bi(a), &bi(b), &small_opts()).unwrap();
        assert_eq!(first.theorems, second.theorems, "forge({a}, {b}) not deterministic");
        assert!(first.theorems.len() <= 4);
        let mut last: Option<(BigInt, BigInt)> = None;
        for thm in &first.theorems {
            check_bookkeeping(thm);
            assert!(certify_theorem(thm).unwrap().is_certified());
            let key = (thm.c.abs(), thm.c.clone());
            assert!(last.as_ref().is_none_or(|l| l <= &key), "theorems not sorted by |c|");
            last = Some(key);
            for n in 0..thm.certificate.bound + 5 {
                assert_eq!(thm.residual_at(n).unwrap(), BigInt::from(0));
            }
        }
        let shown: std::collections::BTreeSet<String> =
            first.theorems.iter().map(|t| render(t, TextFormat::Text)).collect();
        assert_eq!(shown.len(), first.theorems.len(), "duplicate theorems");
    }
}

#[test]
fn negative_weights_are_flipped() {
    let report = forge(&bi(-1), &bi(1), &small_opts()).unwrap();
    assert!(!report.theorems.is_empty(), "{:?}", report.diagnostics);
    for thm in &report.theorems {
        assert_eq!(thm.a, bi(1));
        assert_eq!(thm.b, bi(-1));
        check_bookkeeping(thm);
    }
}

#[test]
fn extra_seeds_are_used() {
    let opts = ForgeOptions {
        search_bound: 1,
        max_theorems: 2,
        extra_seeds: vec![WeightedQuadruple::from_i64(1, -1, [1, 12, 9, 10]).unwrap()],
        ..ForgeOptions::default()
    };
    let report = forge(&bi(1), &bi(-1), &opts).unwrap();
    assert!(!report.theorems.is_empty(), "{:?}", report.diagnostics);
    for thm in &report.theorems {
        let seed = &thm.provenance.as_ref().unwrap().seed;
        assert_eq!(seed.coords().clone().map(|v| i64::try_from(v).unwrap()), [1, 12, 9, 10]);
    }
}

#[test]
fn invalid_inputs() {
    assert_eq!(forge(&bi(0), &bi(1), &small_opts()).unwrap_err(), ForgeError::ZeroWeight);
    let none = ForgeOptions { search_bound: 2, ..ForgeOptions::default() };
    assert_eq!(forge(&bi(1), &bi(-1), &none).unwrap_err(), ForgeError::EmptySeedSet);
}

#[test]
fn statement_only_theorem_matches_oracle() {
    let den = [1, -82, -82, 1];
    let gf = |num: &[i64]| RationalGF::from_i64(num, &den).unwrap();
    let thm = CubicTheorem::new(
        bi(1),
        bi(-1),
        bi(1),
        OrbitKind::Alternating,
        [gf(&[1, 53, 9]), gf(&[2, -26, -12]), gf(&[2, 8, -10])],
    )
    .unwrap();
    assert!(thm.provenance.is_none());
    let a = expand_i64(&[1, 53, 9], &den, 60);
    for (n, an) in a.iter().enumerate() {
        assert_eq!(&terms(&thm.gfs[0], 60)[n], an);
        assert_eq!(thm.residual_at(n).unwrap(), BigInt::from(0));
    }
}
