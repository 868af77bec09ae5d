//! Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.

/// Sweeps allowed before giving up on the convergence target.
const MAX_SWEEPS: usize = 100;

/// Off-diagonal Frobenius norm at which iteration stops.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct JacobiResult {
    /// Diagonal after the final sweep, in matrix order (unsorted).
    pub eigenvalues: Vec<f64>,
    pub off_norm: f64,
    pub sweeps: usize,
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * s).sqrt()
}

/// Diagonalize the symmetric row-major `n x n` matrix `a` in place.
///
/// Only the eigenvalues are tracked. Rotations that would change nothing at
/// machine precision are replaced by zeroing the entry.
pub fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize) -> JacobiResult {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    let mut sweeps = 0;
    let mut off = off_norm(&a, n);
    while off >= OFF_DIAGONAL_TOLERANCE && sweeps < MAX_SWEEPS {
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let g = 100.0 * apq.abs();
                if sweeps > 4 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
        off = off_norm(&a, n);
    }
    JacobiResult {
        eigenvalues: (0..n).map(|i| a[i * n + i]).collect(),
        off_norm: off,
        sweeps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input_is_untouched() {
        let r = jacobi_eigenvalues(vec![3.0, 0.0, 0.0, -1.0], 2);
        assert_eq!(r.eigenvalues, vec![3.0, -1.0]);
        assert_eq!(r.sweeps, 0);
    }

    #[test]
    fn two_by_two_closed_form() {
        // [[2, 1], [1, 2]] has eigenvalues 3 and 1
        let mut r = jacobi_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2);
        r.eigenvalues.sort_by(|a, b| b.total_cmp(a));
        assert!((r.eigenvalues[0] - 3.0).abs() < 1e-14);
        assert!((r.eigenvalues[1] - 1.0).abs() < 1e-14);
        assert!(r.off_norm < OFF_DIAGONAL_TOLERANCE);
    }

    #[test]
    fn tridiagonal_path_spectrum() {
        // path P_n has eigenvalues 2 cos(pi j / (n+1))
        let n = 12;
        let mut a = vec![0.0; n * n];
        for i in 1..n {
            a[i * n + i - 1] = 1.0;
            a[(i - 1) * n + i] = 1.0;
        }
        let mut got = jacobi_eigenvalues(a, n).eigenvalues;
        got.sort_by(|a, b| b.total_cmp(a));
        for (j, v) in got.iter().enumerate() {
            let want = 2.0 * (std::f64::consts::PI * (j + 1) as f64 / (n + 1) as f64).cos();
            assert!((v - want).abs() < 1e-12, "{v} vs {want}");
        }
    }
}
