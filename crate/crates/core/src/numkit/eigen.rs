use num_complex::Complex64;

use super::CMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;
/// Jacobi stops once the off-diagonal Frobenius mass is below this fraction of `‖H‖_max`.
const OFF_DIAGONAL_TOL: f64 = 1e-14;
const HERMITIAN_TOL: f64 = 1e-10;

/// Spectral decomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermEig {
    /// Ascending.
    pub values: Vec<f64>,
    /// Unitary; column `k` is the eigenvector for `values[k]`.
    pub vectors: CMatrix,
}

impl HermEig {
    /// `V f(Λ) V†`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let n = self.values.len();
        let mut out = CMatrix::zeros(n, n);
        for (k, &lambda) in self.values.iter().enumerate() {
            let w = f(lambda);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vi = self.vectors[(i, k)] * w;
                for j in 0..n {
                    out[(i, j)] += vi * self.vectors[(j, k)].conj();
                }
            }
        }
        out
    }
}

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// The input is symmetrised as `(H + H†)/2` before iterating.
pub fn herm_eigs(h: &CMatrix) -> Result<HermEig> {
    let n = h.require_square()?;
    let scale = h.max_abs();
    let defect = h.hermiticity_defect();
    if defect > HERMITIAN_TOL * scale.max(1.0) {
        return Err(Error::Parameter(format!(
            "matrix is not Hermitian (defect {defect:e})"
        )));
    }
    let mut a = h.hermitian_part();
    let mut v = CMatrix::identity(n);
    let threshold = OFF_DIAGONAL_TOL * scale;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_mass(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_mass(&a) > threshold {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = CMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(HermEig { values, vectors })
}

fn off_diagonal_mass(a: &CMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// One Jacobi step annihilating `a[p][q]`: `A <- G† A G`, `V <- V G`
/// with `G = diag(1, e^{-iφ}) · [[c, s], [-s, c]]`.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.norm();
    if b == 0.0 {
        return;
    }
    let phase = apq / b;
    let zeta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * b);
    let t = if zeta >= 0.0 {
        1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
    } else {
        -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let pc = phase.conj();
    let n = a.rows();

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * pc * s;
        a[(k, q)] = akp * s + akq * pc * c;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * phase * s;
        a[(q, k)] = apk * s + aqk * phase * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * pc * s;
        v[(k, q)] = vkp * s + vkq * pc * c;
    }
}

/// Eigenvalues in `[CLAMP_FLOOR, 0)` are treated as round-off and clamped to zero.
pub const PSD_CLAMP_FLOOR: f64 = -1e-10;
/// Eigenvalues below this are a genuine PSD violation.
pub const PSD_REJECT_FLOOR: f64 = -1e-8;

/// Principal square root of a Hermitian positive-semidefinite matrix.
pub fn herm_sqrt(h: &CMatrix) -> Result<CMatrix> {
    let eig = herm_eigs(h)?;
    let min = eig.values.first().copied().unwrap_or(0.0);
    if min < PSD_REJECT_FLOOR {
        return Err(Error::NotPsd {
            min_eigenvalue: min,
        });
    }
    Ok(eig.reconstruct_with(|lambda| lambda.max(0.0).sqrt()))
}

/// Singular values, descending, by one-sided (Hestenes) Jacobi.
///
/// Singular values come out as column norms, so zero singular values are
/// resolved to `O(ε‖A‖)` rather than `O(√ε‖A‖)` as via `eig(A†A)`.
pub fn singular_values(a: &CMatrix) -> Result<Vec<f64>> {
    let m = a.rows();
    let n = a.cols();
    // Work on columns stored contiguously.
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| a.column(j)).collect();
    let eps = 1e-15;

    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let (alpha, beta, gamma) = {
                    let (cp, cq) = (&cols[p], &cols[q]);
                    let alpha: f64 = cp.iter().map(|z| z.norm_sqr()).sum();
                    let beta: f64 = cq.iter().map(|z| z.norm_sqr()).sum();
                    let gamma: Complex64 = cp.iter().zip(cq).map(|(x, y)| x.conj() * y).sum();
                    (alpha, beta, gamma)
                };
                let g = gamma.norm();
                if g == 0.0 || g <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = (gamma / g).conj();
                let zeta = (beta - alpha) / (2.0 * g);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..m {
                    let u = cols[p][i];
                    let w = cols[q][i] * phase;
                    cols[p][i] = u * c - w * s;
                    cols[q][i] = u * s + w * c;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }
    let mut sv: Vec<f64> = cols
        .iter()
        .map(|c| c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    Ok(sv)
}

/// All eigenvalues of a general square complex matrix (Hessenberg reduction
/// followed by Wilkinson-shifted complex QR). Order is unspecified.
pub fn eigenvalues(m: &CMatrix) -> Result<Vec<Complex64>> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(Vec::new());
    }
    if !m.is_finite() {
        return Err(Error::Range("non-finite matrix entries".into()));
    }
    let mut h = hessenberg(m);
    let mut values = vec![Complex64::new(0.0, 0.0); n];
    let zero = Complex64::new(0.0, 0.0);
    let max_iter = 60 * n;

    let mut hi = n - 1;
    let mut iter = 0usize;
    let mut iter_this = 0usize;
    loop {
        if hi == 0 {
            values[0] = h[(0, 0)];
            break;
        }
        // Find the start of the active unreduced block.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let diag = h[(lo, lo)].norm() + h[(lo - 1, lo - 1)].norm();
            let scale = if diag == 0.0 { 1.0 } else { diag };
            if sub <= f64::EPSILON * scale {
                h[(lo, lo - 1)] = zero;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            values[hi] = h[(hi, hi)];
            hi -= 1;
            iter_this = 0;
            continue;
        }
        iter += 1;
        iter_this += 1;
        if iter > max_iter {
            return Err(Error::NoConvergence { sweeps: iter });
        }

        let shift = if iter_this % 11 == 10 {
            // Exceptional shift to break cycles.
            h[(hi, hi)] + Complex64::new(h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            )
        };

        for k in lo..=hi {
            h[(k, k)] -= shift;
        }
        let mut rotations = Vec::with_capacity(hi - lo);
        for k in lo..hi {
            let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
            for j in k..=hi {
                let x = h[(k, j)];
                let y = h[(k + 1, j)];
                h[(k, j)] = x * c + s * y;
                h[(k + 1, j)] = -s.conj() * x + y * c;
            }
            rotations.push((c, s));
        }
        for (offset, &(c, s)) in rotations.iter().enumerate() {
            let k = lo + offset;
            let top = (k + 2).min(hi);
            for i in lo..=top {
                let x = h[(i, k)];
                let y = h[(i, k + 1)];
                h[(i, k)] = x * c + s.conj() * y;
                h[(i, k + 1)] = -s * x + y * c;
            }
        }
        for k in lo..=hi {
            h[(k, k)] += shift;
        }
    }
    Ok(values)
}

/// Rotation `[[c, s], [-s̄, c]]` (c real) sending `(a, b)` to `(r, 0)`.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, Complex64::new(0.0, 0.0));
    }
    let an = a.norm();
    if an == 0.0 {
        return (0.0, b.conj() / bn);
    }
    let r = an.hypot(bn);
    let c = an / r;
    let s = (a / an) * b.conj() / r;
    (c, s)
}

fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let half_tr = (a + d) * 0.5;
    let disc = ((a - d) * 0.5).powi(2) + b * c;
    let root = disc.sqrt();
    let l1 = half_tr + root;
    let l2 = half_tr - root;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Upper Hessenberg form by Householder similarity transforms.
fn hessenberg(m: &CMatrix) -> CMatrix {
    let n = m.rows();
    let mut h = m.clone();
    for k in 0..n.saturating_sub(2) {
        let x: Vec<Complex64> = ((k + 1)..n).map(|i| h[(i, k)]).collect();
        let norm_x = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm_x == 0.0 {
            continue;
        }
        let x0 = x[0];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let mut v = x;
        v[0] += phase * norm_x;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        // H <- P H P with P = I - 2 v v† / (v†v) acting on rows/cols k+1..n.
        for j in 0..n {
            let dot: Complex64 = v
                .iter()
                .enumerate()
                .map(|(i, vi)| vi.conj() * h[(k + 1 + i, j)])
                .sum();
            let f = dot * (2.0 / vnorm2);
            for (i, vi) in v.iter().enumerate() {
                h[(k + 1 + i, j)] -= vi * f;
            }
        }
        for i in 0..n {
            let dot: Complex64 = v
                .iter()
                .enumerate()
                .map(|(j, vj)| h[(i, k + 1 + j)] * vj)
                .sum();
            let f = dot * (2.0 / vnorm2);
            for (j, vj) in v.iter().enumerate() {
                h[(i, k + 1 + j)] -= f * vj.conj();
            }
        }
        for i in (k + 2)..n {
            h[(i, k)] = Complex64::new(0.0, 0.0);
        }
    }
    h
}
