//! Randomized invariants over small spaces.

mod common;

use common::pm;
use pbent_core::cayley::component_graphs;
use pbent_core::pfunc::Anf;
use pbent_core::scheme::{constants_bent_witness, scheme_check};
use pbent_core::spectral::{
    component_eigenvalues, fourier_indicator, fourier_transform, is_bent_by_derivatives, walsh_from_eigenvalues,
    walsh_transform,
};
use pbent_core::{CycInt, PAryFunction, Space, TransformMethod};
use proptest::prelude::*;

fn space(p: u32, n: u32) -> Space {
    Space::new(pm(p), n).unwrap()
}

/// Arbitrary table on `GF(p)^n`.
fn any_function(p: u32, n: u32) -> impl Strategy<Value = PAryFunction> {
    let s = space(p, n);
    prop::collection::vec(0..p, s.size()).prop_map(move |v| PAryFunction::new(s.clone(), v).unwrap())
}

/// Even table with `f(0) = 0`: each value is copied from the smaller of
/// `x` and `-x`.
fn even_function(p: u32, n: u32) -> impl Strategy<Value = PAryFunction> {
    let s = space(p, n);
    prop::collection::vec(0..p, s.size()).prop_map(move |mut v| {
        v[0] = 0;
        for x in 1..s.size() {
            let nx = s.neg(x);
            if nx < x {
                v[x] = v[nx];
            }
        }
        PAryFunction::new(s.clone(), v).unwrap()
    })
}

fn small_case() -> impl Strategy<Value = (u32, u32)> {
    prop_oneof![Just((3u32, 2u32)), Just((3, 4)), Just((5, 2))]
}

fn p_pow(p: u32, e: u32) -> CycInt {
    CycInt::from_int(pm(p), (p as i64).pow(e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn parseval(f in small_case().prop_flat_map(|(p, n)| any_function(p, n))) {
        let w = walsh_transform(&f, TransformMethod::Fast);
        prop_assert_eq!(w.energy(), p_pow(f.p().get(), 2 * f.n()));
    }

    #[test]
    fn fast_and_naive_walsh_agree(f in small_case().prop_flat_map(|(p, n)| any_function(p, n))) {
        prop_assert_eq!(walsh_transform(&f, TransformMethod::Fast), walsh_transform(&f, TransformMethod::Naive));
    }

    #[test]
    fn eigenvalue_sum_identity(f in small_case().prop_flat_map(|(p, n)| even_function(p, n))) {
        let lambdas = component_eigenvalues(&f).unwrap();
        let p = f.p();
        for x in 1..f.space().size() {
            let sum = lambdas.iter().fold(CycInt::one(p), |acc, l| &acc + l.value(x));
            prop_assert!(sum.is_zero());
        }
    }

    #[test]
    fn walsh_from_eigenvalues_matches(f in small_case().prop_flat_map(|(p, n)| even_function(p, n))) {
        prop_assert_eq!(walsh_from_eigenvalues(&f).unwrap(), walsh_transform(&f, TransformMethod::Naive));
    }

    #[test]
    fn bent_verdicts_agree(f in small_case().prop_flat_map(|(p, n)| even_function(p, n))) {
        let walsh = walsh_transform(&f, TransformMethod::Fast).bent_witness().is_none();
        prop_assert_eq!(walsh, is_bent_by_derivatives(&f).is_bent());
        if let Some(c) = scheme_check(&f).unwrap().constants() {
            prop_assert_eq!(walsh, constants_bent_witness(c, f.n()).is_none());
        }
    }

    #[test]
    fn fourier_inversion_on_symmetric_sets(f in small_case().prop_flat_map(|(p, n)| even_function(p, n)), class in 1u32..6) {
        let p = f.p().get();
        let class = class % p;
        let s = f.space().clone();
        let d: Vec<usize> = (0..s.size()).filter(|&x| f.value(x) == class).collect();
        let once = fourier_indicator(&s, &d, TransformMethod::Fast).unwrap();
        let twice = fourier_transform(&s, once.values()).unwrap();
        for x in 0..s.size() {
            let expect = CycInt::from_int(f.p(), if d.contains(&x) { s.size() as i64 } else { 0 });
            prop_assert_eq!(twice.value(x), &expect);
        }
    }

    #[test]
    fn indicator_transform_paths_agree(f in small_case().prop_flat_map(|(p, n)| even_function(p, n))) {
        let s = f.space().clone();
        let d: Vec<usize> = (1..s.size()).filter(|&x| f.value(x) == 1).collect();
        let fast = fourier_indicator(&s, &d, TransformMethod::Fast).unwrap();
        prop_assert_eq!(fast.value(0), &CycInt::from_int(f.p(), d.len() as i64));
        prop_assert_eq!(fast, fourier_indicator(&s, &d, TransformMethod::Naive).unwrap());
    }

    #[test]
    fn graph_spectrum_is_complete_census(f in small_case().prop_flat_map(|(p, n)| even_function(p, n))) {
        for g in component_graphs(&f).unwrap() {
            let report = g.spectrum();
            prop_assert_eq!(report.total_multiplicity(), g.order());
            prop_assert!(report.multiplicity(&CycInt::from_int(f.p(), g.degree() as i64)) >= 1);
        }
    }

    #[test]
    fn scheme_row_sums(f in small_case().prop_flat_map(|(p, n)| even_function(p, n))) {
        if let Some(c) = scheme_check(&f).unwrap().constants() {
            for k in c.active_classes() {
                for i in 0..c.dim() {
                    let row: i64 = (0..c.dim()).map(|j| c.get(i, j, k)).sum();
                    prop_assert_eq!(row, c.class_sizes()[i] as i64);
                    for j in 0..c.dim() {
                        prop_assert_eq!(c.get(i, j, k), c.get(j, i, k));
                    }
                }
            }
        }
    }

    #[test]
    fn anf_round_trip(f in small_case().prop_flat_map(|(p, n)| any_function(p, n))) {
        prop_assert_eq!(Anf::interpolate(&f).evaluate(), f);
    }
}
