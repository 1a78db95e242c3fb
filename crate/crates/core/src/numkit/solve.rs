use num_complex::Complex64;

use super::{singular_values, CMatrix};
use crate::error::{Error, Result};

/// Solves `A X = B` by LU with partial pivoting.
pub fn solve(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    let n = a.require_square()?;
    if b.rows() != n {
        return Err(Error::Dimension {
            expected: format!("{n} right-hand-side rows"),
            found: format!("{}", b.rows()),
        });
    }
    let mut lu = a.clone();
    let mut x = b.clone();
    let m = b.cols();
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&i, &j| lu[(i, k)].norm().total_cmp(&lu[(j, k)].norm()))
            .unwrap_or(k);
        let pv = lu[(pivot, k)];
        if pv.norm() == 0.0 || !pv.norm().is_finite() {
            return Err(Error::Range("singular matrix in LU solve".into()));
        }
        if pivot != k {
            for j in 0..n {
                let tmp = lu[(k, j)];
                lu[(k, j)] = lu[(pivot, j)];
                lu[(pivot, j)] = tmp;
            }
            for j in 0..m {
                let tmp = x[(k, j)];
                x[(k, j)] = x[(pivot, j)];
                x[(pivot, j)] = tmp;
            }
        }
        for i in (k + 1)..n {
            let f = lu[(i, k)] / pv;
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            lu[(i, k)] = f;
            for j in (k + 1)..n {
                let u = lu[(k, j)];
                lu[(i, j)] -= f * u;
            }
            for j in 0..m {
                let u = x[(k, j)];
                x[(i, j)] -= f * u;
            }
        }
    }
    for j in 0..m {
        for i in (0..n).rev() {
            let mut acc = x[(i, j)];
            for k in (i + 1)..n {
                acc -= lu[(i, k)] * x[(k, j)];
            }
            x[(i, j)] = acc / lu[(i, i)];
        }
    }
    Ok(x)
}

/// Least-squares solution of an overdetermined system by Householder QR.
pub fn lstsq(a: &CMatrix, b: &[Complex64]) -> Result<Vec<Complex64>> {
    let (m, n) = (a.rows(), a.cols());
    if m < n || b.len() != m {
        return Err(Error::Dimension {
            expected: format!("tall system with {m} right-hand-side entries"),
            found: format!("{m}x{n}, rhs {}", b.len()),
        });
    }
    let mut r = a.clone();
    let mut y = b.to_vec();
    for k in 0..n {
        let norm_x = (k..m).map(|i| r[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if norm_x == 0.0 {
            continue;
        }
        let x0 = r[(k, k)];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let mut v: Vec<Complex64> = (k..m).map(|i| r[(i, k)]).collect();
        v[0] += phase * norm_x;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        for j in k..n {
            let dot: Complex64 = v.iter().enumerate().map(|(i, vi)| vi.conj() * r[(k + i, j)]).sum();
            let f = dot * (2.0 / vnorm2);
            for (i, vi) in v.iter().enumerate() {
                r[(k + i, j)] -= vi * f;
            }
        }
        let dot: Complex64 = v.iter().enumerate().map(|(i, vi)| vi.conj() * y[k + i]).sum();
        let f = dot * (2.0 / vnorm2);
        for (i, vi) in v.iter().enumerate() {
            y[k + i] -= vi * f;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for i in (0..n).rev() {
        let mut acc = y[i];
        for k in (i + 1)..n {
            acc -= r[(i, k)] * x[k];
        }
        let d = r[(i, i)];
        if d.norm() == 0.0 {
            return Err(Error::Range("rank-deficient least-squares system".into()));
        }
        x[i] = acc / d;
    }
    Ok(x)
}

/// Singular values at or below this fraction of the largest count toward the kernel.
pub const KERNEL_TOL: f64 = 1e-9;

/// Returns `x` with `M x = 0` and `constraint · x = target`.
///
/// The kernel must be one-dimensional (judged from the singular values of
/// `M`); `x` is then the least-squares solution of the bordered system
/// `[M; constraint] x = [0; target]`.
pub fn null_vector(m: &CMatrix, constraint: &[Complex64], target: Complex64) -> Result<Vec<Complex64>> {
    let n = m.require_square()?;
    if constraint.len() != n {
        return Err(Error::Dimension {
            expected: format!("constraint of length {n}"),
            found: format!("length {}", constraint.len()),
        });
    }
    let sv = singular_values(m)?;
    let largest = sv.first().copied().unwrap_or(0.0);
    let cutoff = KERNEL_TOL * largest;
    let kernel_dim = sv.iter().filter(|&&s| s <= cutoff).count();
    if kernel_dim == 0 {
        return Err(Error::NoSteadyState {
            smallest_relative: sv.last().copied().unwrap_or(0.0) / largest,
        });
    }
    if kernel_dim > 1 {
        let tail = sv[sv.len().saturating_sub(kernel_dim + 1)..].to_vec();
        return Err(Error::AmbiguousSteadyState {
            kernel_dim,
            singular_values: tail,
        });
    }

    let mut bordered = CMatrix::zeros(n + 1, n);
    for i in 0..n {
        for j in 0..n {
            bordered[(i, j)] = m[(i, j)];
        }
    }
    for (j, c) in constraint.iter().enumerate() {
        bordered[(n, j)] = *c;
    }
    let mut rhs = vec![Complex64::new(0.0, 0.0); n + 1];
    rhs[n] = target;
    let x = lstsq(&bordered, &rhs)?;

    let achieved: Complex64 = constraint.iter().zip(&x).map(|(c, xi)| c * xi).sum();
    if (achieved - target).norm() > 1e-8 * target.norm().max(1.0) {
        return Err(Error::Range(format!(
            "constraint is degenerate on the kernel (achieved {achieved})"
        )));
    }
    Ok(x)
}
