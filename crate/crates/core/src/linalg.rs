//! Small dense solver for the least-squares normal equations.

/// The system matrix was not positive definite, i.e. the underlying
/// least-squares problem is rank-deficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct SingularMatrix;

/// Solve `A x = b` for a symmetric positive-definite `A` by Cholesky
/// factorization. `a` is consumed as scratch space.
///
/// A pivot at or below `1e-12` times the largest initial diagonal entry is
/// treated as a singular system.
pub(crate) fn solve_spd(mut a: Vec<Vec<f64>>, b: &[f64]) -> Result<Vec<f64>, SingularMatrix> {
    let n = b.len();
    debug_assert!(a.len() == n && a.iter().all(|row| row.len() == n));

    let scale = (0..n).map(|i| a[i][i].abs()).fold(0.0, f64::max);
    let tol = (scale * 1e-12).max(f64::MIN_POSITIVE);

    // In-place lower-triangular factor L with A = L L^T.
    for j in 0..n {
        let mut d = a[j][j];
        for k in 0..j {
            d -= a[j][k] * a[j][k];
        }
        if !(d > tol) {
            return Err(SingularMatrix);
        }
        let d = d.sqrt();
        a[j][j] = d;
        for i in (j + 1)..n {
            let mut s = a[i][j];
            for k in 0..j {
                s -= a[i][k] * a[j][k];
            }
            a[i][j] = s / d;
        }
    }

    // Forward solve L y = b.
    let mut x = b.to_vec();
    for i in 0..n {
        for k in 0..i {
            x[i] -= a[i][k] * x[k];
        }
        x[i] /= a[i][i];
    }
    // Back solve L^T x = y.
    for i in (0..n).rev() {
        for k in (i + 1)..n {
            x[i] -= a[k][i] * x[k];
        }
        x[i] /= a[i][i];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_known_system() {
        // A = [[4,2],[2,3]], b = [10, 9] -> x = [1.5, 2]
        let a = vec![vec![4.0, 2.0], vec![2.0, 3.0]];
        let x = solve_spd(a, &[10.0, 9.0]).unwrap();
        assert!((x[0] - 1.5).abs() < 1e-12);
        assert!((x[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_singular_matrix() {
        let a = vec![vec![1.0, 1.0], vec![1.0, 1.0]];
        assert_eq!(solve_spd(a, &[1.0, 1.0]), Err(SingularMatrix));
    }

    #[test]
    fn residual_is_small_on_random_spd() {
        // Deterministic pseudo-random A^T A + I system.
        let n = 12;
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let m: Vec<Vec<f64>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    a[i][j] += m[k][i] * m[k][j];
                }
            }
            a[i][i] += 1.0;
        }
        let b: Vec<f64> = (0..n).map(|_| next()).collect();
        let x = solve_spd(a.clone(), &b).unwrap();
        for i in 0..n {
            let ax: f64 = (0..n).map(|j| a[i][j] * x[j]).sum();
            assert!((ax - b[i]).abs() < 1e-9, "row {i} residual too large");
        }
    }
}
