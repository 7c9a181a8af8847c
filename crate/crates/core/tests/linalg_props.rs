use num_complex::Complex64;
use proptest::prelude::*;

use tridm::linalg::{
    expm_hermitian_times_minus_i_t, general_eigvals, hermitian_eig, kron, partial_trace,
    partial_transpose, ComplexMatrix, Subsystem,
};

fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn matrix(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(complex(), dim * dim)
        .prop_map(move |v| ComplexMatrix::from_row_major(dim, v).unwrap())
}

fn hermitian(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    matrix(dim).prop_map(|m| m.hermitian_part())
}

/// Random density matrix M M† / tr.
fn density(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    matrix(dim).prop_map(|m| {
        let p = m.matmul(&m.adjoint()).unwrap();
        let tr = p.trace().re;
        p.scale_real(1.0 / tr)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_is_associative(a in matrix(2), b in matrix(2), c in matrix(2)) {
        let left = kron(&kron(&a, &b), &c);
        let right = kron(&a, &kron(&b, &c));
        prop_assert!(left.approx_eq(&right, 1e-12));
    }

    #[test]
    fn kron_mixed_product(a in matrix(2), b in matrix(2), c in matrix(2), d in matrix(2)) {
        let lhs = kron(&a, &b).matmul(&kron(&c, &d)).unwrap();
        let rhs = kron(&a.matmul(&c).unwrap(), &b.matmul(&d).unwrap());
        prop_assert!(lhs.approx_eq(&rhs, 1e-10));
    }

    #[test]
    fn hermitian_eigenvalues_sum_to_trace(h in hermitian(8)) {
        let eig = hermitian_eig(&h).unwrap();
        let sum: f64 = eig.eigenvalues.iter().sum();
        prop_assert!((sum - h.trace().re).abs() < 1e-9);
        prop_assert!(eig.reconstruct().approx_eq(&h, 1e-9));
        prop_assert!(eig.eigenvectors.is_unitary(1e-9));
        for w in eig.eigenvalues.windows(2) {
            prop_assert!(w[0] >= w[1]);
        }
    }

    #[test]
    fn general_eigenvalues_match_hermitian_route(h in hermitian(4)) {
        let eig = hermitian_eig(&h).unwrap();
        let mut general: Vec<f64> = general_eigvals(&h).unwrap().iter().map(|z| z.re).collect();
        general.sort_by(|a, b| b.total_cmp(a));
        for (g, e) in general.iter().zip(&eig.eigenvalues) {
            prop_assert!((g - e).abs() < 1e-8);
        }
    }

    #[test]
    fn general_eigenvalues_sum_to_trace(m in matrix(4)) {
        let vals = general_eigvals(&m).unwrap();
        let sum: Complex64 = vals.iter().sum();
        prop_assert!((sum - m.trace()).norm() < 1e-9);
        let prod: Complex64 = vals.iter().product();
        let tr2: Complex64 = vals.iter().map(|z| z * z).sum();
        let m2 = m.matmul(&m).unwrap();
        prop_assert!((tr2 - m2.trace()).norm() < 1e-8);
        prop_assert!(prod.is_finite());
    }

    #[test]
    fn expm_group_property(h in hermitian(8), s in -2.0..2.0f64, t in -2.0..2.0f64) {
        let us = expm_hermitian_times_minus_i_t(&h, s).unwrap();
        let ut = expm_hermitian_times_minus_i_t(&h, t).unwrap();
        let ust = expm_hermitian_times_minus_i_t(&h, s + t).unwrap();
        prop_assert!(us.matmul(&ut).unwrap().approx_eq(&ust, 1e-9));
        prop_assert!(us.is_unitary(1e-10));
    }

    #[test]
    fn nested_partial_traces_agree(rho in density(8)) {
        let direct = partial_trace(&rho, &[2, 2, 2], &[0]).unwrap();
        let ab = partial_trace(&rho, &[2, 2, 2], &[0, 1]).unwrap();
        let nested = partial_trace(&ab, &[2, 2], &[0]).unwrap();
        prop_assert!(direct.approx_eq(&nested, 1e-12));
        prop_assert!((ab.trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn partial_transpose_is_an_involution(rho in density(4)) {
        for sub in [Subsystem::First, Subsystem::Second] {
            let once = partial_transpose(&rho, (2, 2), sub).unwrap();
            let twice = partial_transpose(&once, (2, 2), sub).unwrap();
            prop_assert!(twice.approx_eq(&rho, 0.0));
            prop_assert!((once.trace() - rho.trace()).norm() < 1e-12);
        }
        let both = partial_transpose(
            &partial_transpose(&rho, (2, 2), Subsystem::First).unwrap(),
            (2, 2),
            Subsystem::Second,
        )
        .unwrap();
        prop_assert!(both.approx_eq(&rho.transpose(), 1e-15));
    }
}

#[test]
fn defective_matrix_eigenvalues() {
    // Jordan block with eigenvalue 2.
    let one = Complex64::new(1.0, 0.0);
    let two = Complex64::new(2.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let m = ComplexMatrix::from_row_major(2, vec![two, one, zero, two]).unwrap();
    for z in general_eigvals(&m).unwrap() {
        assert!((z - two).norm() < 1e-7);
    }
}
