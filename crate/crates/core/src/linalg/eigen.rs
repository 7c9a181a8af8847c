//! Eigensolvers sized for 2, 4 and 8 dimensional operators.
//!
//! Hermitian input goes through cyclic complex Jacobi rotations. The general
//! case reduces to upper Hessenberg form with Householder reflections and runs
//! a single-shift complex QR iteration with Wilkinson shifts. Both are fully
//! deterministic: no randomized restarts, fixed sweep order.

use num_complex::Complex64;

use super::matrix::{ComplexMatrix, ZERO};
use super::LinalgError;

/// Hermiticity tolerance accepted by [`hermitian_eig`].
pub const HERMITIAN_TOL: f64 = 1e-9;

const MAX_JACOBI_SWEEPS: usize = 100;
const QR_ITERATIONS_PER_EIGENVALUE: usize = 60;

#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    /// Sorted descending.
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the eigenvector for `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    /// V·diag(λ)·V†
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_spectrum(|l| Complex64::new(l, 0.0))
    }

    /// V·diag(f(λ))·V†
    pub fn map_spectrum(&self, f: impl Fn(f64) -> Complex64) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let n = v.dim();
        let fl: Vec<Complex64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = ZERO;
                for k in 0..n {
                    acc += v[(i, k)] * fl[k] * v[(j, k)].conj();
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn min_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("nonempty spectrum")
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<EigenDecomposition, LinalgError> {
    let deviation = m.hermiticity_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(LinalgError::NotHermitian { deviation });
    }
    let n = m.dim();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    let target = f64::EPSILON * scale;

    for _ in 0..MAX_JACOBI_SWEEPS {
        if off_diagonal_norm(&a) <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if off_diagonal_norm(&a) > 1e3 * target {
        return Err(LinalgError::NoConvergence {
            what: "hermitian jacobi",
            residual: off_diagonal_norm(&a),
            scale,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let eigenvalues = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n);
    for (col, &k) in order.iter().enumerate() {
        for row in 0..n {
            eigenvectors[(row, col)] = v[(row, k)];
        }
    }
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

// Zeroes a[p][q] with J = diag(1, e^{-iφ})·R(θ) applied as A ← J†AJ, V ← VJ.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.norm();
    if b == 0.0 {
        return;
    }
    let phase = apq / b;
    let theta = 0.5 * (2.0 * b).atan2(a[(q, q)].re - a[(p, p)].re);
    let (s, c) = theta.sin_cos();
    // Columns of J: j_p = (c, -s e^{-iφ}), j_q = (s, c e^{-iφ}) on rows (p, q).
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
}

/// All eigenvalues of a general complex matrix (dimension ≤ 8), unordered.
pub fn general_eigvals(m: &ComplexMatrix) -> Result<Vec<Complex64>, LinalgError> {
    let n = m.dim();
    if n > 8 {
        return Err(LinalgError::DimensionTooLarge { dim: n, max: 8 });
    }
    if n == 1 {
        return Ok(vec![m[(0, 0)]]);
    }
    let scale = m.frobenius_norm();
    if scale == 0.0 {
        return Ok(vec![ZERO; n]);
    }
    let mut h = hessenberg(m);
    let tiny = f64::EPSILON * scale;
    let mut eigenvalues = vec![ZERO; n];
    let mut hi = n - 1;
    let mut iterations = 0usize;

    loop {
        if hi == 0 {
            eigenvalues[0] = h[(0, 0)];
            break;
        }
        // Find the start of the unreduced trailing block.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let diag = h[(lo, lo)].norm() + h[(lo - 1, lo - 1)].norm();
            if sub <= f64::EPSILON * diag || sub <= tiny {
                h[(lo, lo - 1)] = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eigenvalues[hi] = h[(hi, hi)];
            hi -= 1;
            iterations = 0;
            continue;
        }
        iterations += 1;
        if iterations > QR_ITERATIONS_PER_EIGENVALUE {
            return Err(LinalgError::NoConvergence {
                what: "hessenberg qr",
                residual: h[(hi, hi - 1)].norm(),
                scale,
            });
        }
        let shift = if iterations.is_multiple_of(11) {
            // Exceptional shift to break cycles.
            h[(hi, hi)] + Complex64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(&h, hi)
        };
        qr_step(&mut h, lo, hi, shift);
    }
    Ok(eigenvalues)
}

fn wilkinson_shift(h: &ComplexMatrix, hi: usize) -> Complex64 {
    let a = h[(hi - 1, hi - 1)];
    let b = h[(hi - 1, hi)];
    let c = h[(hi, hi - 1)];
    let d = h[(hi, hi)];
    let half_tr = (a + d) * 0.5;
    let disc = ((a - d) * 0.5 * ((a - d) * 0.5) + b * c).sqrt();
    let l1 = half_tr + disc;
    let l2 = half_tr - disc;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

fn qr_step(h: &mut ComplexMatrix, lo: usize, hi: usize, shift: Complex64) {
    for i in lo..=hi {
        h[(i, i)] -= shift;
    }
    let mut rotations = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let a = h[(k, k)];
        let b = h[(k + 1, k)];
        let r = (a.norm_sqr() + b.norm_sqr()).sqrt();
        let (c, s) = if r == 0.0 {
            (Complex64::new(1.0, 0.0), ZERO)
        } else {
            (a / r, b / r)
        };
        // G = [[c̄, s̄], [-s, c]] on rows k, k+1.
        for j in k..=hi {
            let x = h[(k, j)];
            let y = h[(k + 1, j)];
            h[(k, j)] = c.conj() * x + s.conj() * y;
            h[(k + 1, j)] = -s * x + c * y;
        }
        rotations.push((c, s));
    }
    for (offset, &(c, s)) in rotations.iter().enumerate() {
        let k = lo + offset;
        let last_row = (k + 2).min(hi);
        for i in lo..=last_row {
            let x = h[(i, k)];
            let y = h[(i, k + 1)];
            h[(i, k)] = x * c + y * s;
            h[(i, k + 1)] = -x * s.conj() + y * c.conj();
        }
    }
    for i in lo..=hi {
        h[(i, i)] += shift;
    }
}

fn hessenberg(m: &ComplexMatrix) -> ComplexMatrix {
    let n = m.dim();
    let mut h = m.clone();
    for k in 0..n.saturating_sub(2) {
        let x: Vec<Complex64> = ((k + 1)..n).map(|i| h[(i, k)]).collect();
        let xnorm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if xnorm == 0.0 {
            continue;
        }
        let phase = if x[0].norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x[0] / x[0].norm()
        };
        let mut v = x;
        v[0] += phase * xnorm;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= vnorm;
        }
        // H ← P H with P = I − 2vv† acting on rows k+1..n.
        for j in 0..n {
            let dot: Complex64 = v
                .iter()
                .enumerate()
                .map(|(r, vr)| vr.conj() * h[(k + 1 + r, j)])
                .sum();
            for (r, vr) in v.iter().enumerate() {
                h[(k + 1 + r, j)] -= vr * dot * 2.0;
            }
        }
        // H ← H P on columns k+1..n.
        for i in 0..n {
            let dot: Complex64 = v
                .iter()
                .enumerate()
                .map(|(c, vc)| h[(i, k + 1 + c)] * vc)
                .sum();
            for (c, vc) in v.iter().enumerate() {
                h[(i, k + 1 + c)] -= dot * vc.conj() * 2.0;
            }
        }
        for i in (k + 2)..n {
            h[(i, k)] = ZERO;
        }
    }
    h
}

/// Singular values, descending, by one-sided (Hestenes) Jacobi.
///
/// Column norms are read off directly instead of square-rooting the
/// eigenvalues of `m†m`, so small singular values keep absolute accuracy
/// near `ε·‖m‖`.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>, LinalgError> {
    let n = m.dim();
    let mut a = m.clone();
    let tol = f64::EPSILON;
    let col_dot = |a: &ComplexMatrix, p: usize, q: usize| -> Complex64 {
        (0..n).map(|k| a[(k, p)].conj() * a[(k, q)]).sum()
    };
    let norm_sqr =
        |a: &ComplexMatrix, p: usize| -> f64 { (0..n).map(|k| a[(k, p)].norm_sqr()).sum() };

    let mut converged = false;
    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let (alpha, beta, g) = (norm_sqr(&a, p), norm_sqr(&a, q), col_dot(&a, p, q));
                let gamma = g.norm();
                if gamma <= tol * (alpha * beta).sqrt() || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                let phase = g / gamma;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for k in 0..n {
                    let ap = a[(k, p)];
                    let aq = a[(k, q)] * phase.conj();
                    a[(k, p)] = ap * c - aq * s;
                    a[(k, q)] = ap * s + aq * c;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(LinalgError::NoConvergence {
            what: "one-sided jacobi",
            residual: f64::NAN,
            scale: m.frobenius_norm(),
        });
    }
    let mut out: Vec<f64> = (0..n).map(|p| norm_sqr(&a, p).sqrt()).collect();
    out.sort_by(|x, y| y.total_cmp(x));
    Ok(out)
}

/// exp(−i·h·t) for Hermitian `h`, via its eigendecomposition.
pub fn expm_hermitian_times_minus_i_t(
    h: &ComplexMatrix,
    t: f64,
) -> Result<ComplexMatrix, LinalgError> {
    let eig = hermitian_eig(h)?;
    Ok(exp_minus_i_t(&eig, t))
}

/// exp(−i·H·t) from a precomputed decomposition of H.
pub fn exp_minus_i_t(eig: &EigenDecomposition, t: f64) -> ComplexMatrix {
    eig.map_spectrum(|l| Complex64::from_polar(1.0, -l * t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{pauli, Axis};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn singular_values_of_known_matrices() {
        let m = ComplexMatrix::from_row_major(
            2,
            vec![c(3.0, 0.0), c(0.0, 0.0), c(4.0, 0.0), c(5.0, 0.0)],
        )
        .unwrap();
        // AᵀA = [[25, 20], [20, 25]] has eigenvalues 45 and 5.
        let sv = singular_values(&m).unwrap();
        assert!((sv[0] - 45f64.sqrt()).abs() < 1e-12);
        assert!((sv[1] - 5f64.sqrt()).abs() < 1e-12);

        let rank_one =
            ComplexMatrix::outer(&[c(1.0, 1.0), c(0.0, 2.0)], &[c(1.0, 0.0), c(0.0, -1.0)])
                .unwrap();
        let sv = singular_values(&rank_one).unwrap();
        assert!((sv[0] - 6f64.sqrt() * 2f64.sqrt()).abs() < 1e-12);
        assert!(sv[1] < 1e-15);
    }

    #[test]
    fn identity_spectrum() {
        let eig = hermitian_eig(&ComplexMatrix::identity(4)).unwrap();
        assert_eq!(eig.eigenvalues, vec![1.0; 4]);
    }

    #[test]
    fn pauli_z_spectrum_descending() {
        let eig = hermitian_eig(&pauli(Axis::Z)).unwrap();
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = c(1.0, 0.0);
        assert!(matches!(
            hermitian_eig(&m),
            Err(LinalgError::NotHermitian { .. })
        ));
    }

    #[test]
    fn pauli_y_eigenvectors_orthonormal() {
        let eig = hermitian_eig(&pauli(Axis::Y)).unwrap();
        let v = &eig.eigenvectors;
        assert!(v
            .adjoint()
            .matmul(v)
            .unwrap()
            .approx_eq(&ComplexMatrix::identity(2), 1e-12));
        assert!(eig.reconstruct().approx_eq(&pauli(Axis::Y), 1e-12));
    }

    #[test]
    fn diagonal_general_eigvals() {
        let m = ComplexMatrix::from_real_diagonal(&[3.0, 1.0, 4.0, 1.0]);
        let mut ev: Vec<f64> = general_eigvals(&m).unwrap().iter().map(|z| z.re).collect();
        ev.sort_by(f64::total_cmp);
        assert_eq!(ev, vec![1.0, 1.0, 3.0, 4.0]);
    }

    #[test]
    fn jordan_block_and_rotation() {
        // [[0, 1], [-1, 0]] has eigenvalues ±i.
        let m = ComplexMatrix::from_row_major(2, vec![c(0., 0.), c(1., 0.), c(-1., 0.), c(0., 0.)])
            .unwrap();
        let mut ev = general_eigvals(&m).unwrap();
        ev.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((ev[0] - c(0.0, -1.0)).norm() < 1e-12);
        assert!((ev[1] - c(0.0, 1.0)).norm() < 1e-12);

        let mut jordan = ComplexMatrix::zeros(3);
        jordan[(0, 1)] = c(1.0, 0.0);
        jordan[(1, 2)] = c(1.0, 0.0);
        for z in general_eigvals(&jordan).unwrap() {
            assert!(z.norm() < 1e-12);
        }
    }

    #[test]
    fn too_large_rejected() {
        assert!(matches!(
            general_eigvals(&ComplexMatrix::identity(9)),
            Err(LinalgError::DimensionTooLarge { .. })
        ));
    }

    #[test]
    fn expm_zero_time_is_identity() {
        let u = expm_hermitian_times_minus_i_t(&pauli(Axis::X), 0.0).unwrap();
        assert!(u.approx_eq(&ComplexMatrix::identity(2), 1e-14));
    }

    #[test]
    fn expm_pauli_z_quarter_turn() {
        let half_pi = std::f64::consts::FRAC_PI_2;
        let u = expm_hermitian_times_minus_i_t(&pauli(Axis::Z), half_pi).unwrap();
        let expected = ComplexMatrix::from_diagonal(&[
            Complex64::from_polar(1.0, -half_pi),
            Complex64::from_polar(1.0, half_pi),
        ]);
        assert!(u.approx_eq(&expected, 1e-14));
    }
}
