use std::f64::consts::PI;

use bergfock::hypergeo::{eval_pfq, gamma_ratio};
use bergfock::{
    BargmannDirichletSpace, BergmanDirichletSpace, CVector, HypergeometricSpec, KernelSpace,
};
use nalgebra::{Complex, DMatrix};
use num_complex::Complex64;
use proptest::prelude::*;

fn point(coords: &[(f64, f64)], radius: f64) -> CVector {
    let v = CVector::new(coords.iter().map(|&(a, b)| Complex64::new(a, b)).collect()).unwrap();
    let norm = v.norm().max(1e-12);
    v.scale(radius / norm)
}

fn coords(n: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n)
}

fn min_gram_eigenvalue(space: &dyn KernelSpace, pts: &[CVector]) -> f64 {
    let k = pts.len();
    let gram = DMatrix::from_fn(k, k, |i, j| {
        let v = space.kernel_closed(&pts[i], &pts[j]).unwrap();
        Complex::new(v.re, v.im)
    });
    let scale = gram.diagonal().iter().map(|c| c.re).fold(0.0, f64::max);
    gram.symmetric_eigenvalues().min() / scale
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ball_kernel_is_hermitian(a in coords(2), b in coords(2), ra in 0.0..0.9f64, rb in 0.0..0.9f64,
                                alpha in 0.0..3.0f64, m in 0u32..4) {
        let s = BergmanDirichletSpace::new(2, alpha, m).unwrap();
        let (z, w) = (point(&a, ra), point(&b, rb));
        let kzw = s.kernel_closed(&z, &w).unwrap();
        let kwz = s.kernel_closed(&w, &z).unwrap();
        prop_assert!((kzw - kwz.conj()).norm() <= 1e-13 * kzw.norm().max(1e-300));
    }

    #[test]
    fn fock_diagonal_is_positive_and_radially_increasing(a in coords(3), nu in 0.2..3.0f64,
                                                         m in 0u32..4, r in 0.0..2.0f64) {
        let s = BargmannDirichletSpace::new(3, nu, m).unwrap();
        let z = point(&a, r);
        let inner = s.kernel_closed(&z, &z).unwrap();
        let outer = s.kernel_closed(&z.scale(1.1), &z.scale(1.1)).unwrap();
        prop_assert!(inner.re > 0.0 && inner.im.abs() <= 1e-15 * inner.re);
        prop_assert!(outer.re > inner.re || r == 0.0);
    }

    #[test]
    fn ball_scaling_law(t_re in -0.7..0.7f64, t_im in -0.7..0.7f64, radius in 0.5..4.0f64,
                        alpha in 0.0..2.0f64) {
        // Weighted Bergman kernels scale as K_R(z, w) = R^{-2n} K_1(z/R, w/R).
        let n = 2;
        let t = Complex64::new(t_re, t_im);
        prop_assume!(t.norm() < 0.8);
        let big = BergmanDirichletSpace::with_radius(n, alpha, 0, radius).unwrap();
        let unit = BergmanDirichletSpace::new(n, alpha, 0).unwrap();
        let lhs = big.kernel_at(t * radius * radius).unwrap().value;
        let rhs = unit.kernel_at(t).unwrap().value / radius.powi(2 * n as i32);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm());
    }

    #[test]
    fn enumerated_sum_matches_degree_collapse(a in coords(2), b in coords(2), nu in 0.5..2.0f64,
                                              m in 0u32..4) {
        let s = BargmannDirichletSpace::new(2, nu, m).unwrap();
        let (z, w) = (point(&a, 0.8), point(&b, 0.6));
        let e = s.kernel_enumerated(&z, &w, 30).unwrap();
        let c = s.kernel_series(&z, &w, 30).unwrap();
        prop_assert!((e - c).norm() <= 1e-13 * c.norm());
    }
}

#[test]
fn gram_matrices_are_positive_semidefinite() {
    let pts: Vec<CVector> = (0..8)
        .map(|j| {
            let th = j as f64 * 0.7;
            CVector::new(vec![
                Complex64::from_polar(0.1 + 0.08 * j as f64, th),
                Complex64::from_polar(0.3, -1.3 * th),
            ])
            .unwrap()
        })
        .collect();
    for m in 0..=3 {
        let ball = BergmanDirichletSpace::new(2, 0.5, m).unwrap();
        assert!(min_gram_eigenvalue(&ball, &pts) > -1e-13, "ball m={m}");
        let fock = BargmannDirichletSpace::new(2, 1.5, m).unwrap();
        assert!(min_gram_eigenvalue(&fock, &pts) > -1e-13, "fock m={m}");
    }
}

#[test]
fn pfq_matches_elementary_closed_forms() {
    let z = Complex64::new(0.3, -0.4);
    // 1F0(a;;z) = (1-z)^{-a}
    let spec = HypergeometricSpec::new(vec![2.5], vec![]).unwrap();
    let got = eval_pfq(&spec, z, 1e-17, 10_000).unwrap().value;
    let want = (1.0 - z).powf(-2.5);
    assert!((got - want).norm() < 1e-15 * want.norm());
    // 2F1(1,1;2;z) = -ln(1-z)/z
    let spec = HypergeometricSpec::new(vec![1.0, 1.0], vec![2.0]).unwrap();
    let got = eval_pfq(&spec, z, 1e-17, 10_000).unwrap().value;
    let want = -(1.0 - z).ln() / z;
    assert!((got - want).norm() < 1e-15 * want.norm());
    // Terminating: 2F1(-3,b;c;1) = (c-b)_3/(c)_3 (Chu-Vandermonde)
    let spec = HypergeometricSpec::new(vec![-3.0, 1.5], vec![4.0]).unwrap();
    let got = eval_pfq(&spec, Complex64::new(1.0, 0.0), 1e-17, 10)
        .unwrap()
        .value;
    let want = (2.5 * 3.5 * 4.5) / (4.0 * 5.0 * 6.0);
    assert!((got.re - want).abs() < 1e-15);
}

#[test]
fn origin_value_is_the_prefactor() {
    for n in 1..=3 {
        let s = BergmanDirichletSpace::new(n, 1.5, 2).unwrap();
        let want = gamma_ratio(n as f64 + 2.5, 2.5).unwrap() / PI.powi(n as i32);
        let got = s.kernel_at(Complex64::new(0.0, 0.0)).unwrap().value.re;
        assert!((got - want).abs() < 1e-15 * want);
    }
}
