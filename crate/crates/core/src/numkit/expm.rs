use super::{solve, CMatrix};
use crate::error::{Error, Result};

/// Padé [13/13] coefficients.
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

/// 1-norm bound below which the degree-13 approximant is accurate to unit round-off.
const THETA13: f64 = 5.371920351148152;

/// More squarings than this means `‖M s‖` is far outside anything physical here.
const MAX_SQUARINGS: i32 = 64;

/// `exp(M s)` by scaling and squaring with a Padé [13/13] kernel.
pub fn expm(m: &CMatrix, s: f64) -> Result<CMatrix> {
    let n = m.require_square()?;
    if !s.is_finite() {
        return Err(Error::Range(format!("time step {s} is not finite")));
    }
    let a = m.scale_real(s);
    let norm = a.norm1();
    if !norm.is_finite() {
        return Err(Error::Range("generator has non-finite entries".into()));
    }
    if norm == 0.0 {
        return Ok(CMatrix::identity(n));
    }
    let squarings = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as i32
    } else {
        0
    };
    if squarings > MAX_SQUARINGS {
        return Err(Error::Range(format!("‖M s‖₁ = {norm:e} is too large to exponentiate")));
    }
    let a = a.scale_real(0.5f64.powi(squarings));

    let id = CMatrix::identity(n);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let b = &PADE13;
    let lincomb = |terms: &[(f64, &CMatrix)]| {
        let mut acc = CMatrix::zeros(n, n);
        for (w, m) in terms {
            acc += &m.scale_real(*w);
        }
        acc
    };

    let u_inner = &a6 * &lincomb(&[(b[13], &a6), (b[11], &a4), (b[9], &a2)]);
    let u_tail = lincomb(&[(b[7], &a6), (b[5], &a4), (b[3], &a2), (b[1], &id)]);
    let u = &a * &(&u_inner + &u_tail);
    let v_inner = &a6 * &lincomb(&[(b[12], &a6), (b[10], &a4), (b[8], &a2)]);
    let v_tail = lincomb(&[(b[6], &a6), (b[4], &a4), (b[2], &a2), (b[0], &id)]);
    let v = &v_inner + &v_tail;

    let mut r = solve(&(&v - &u), &(&v + &u))?;
    for _ in 0..squarings {
        r = &r * &r;
    }
    if !r.is_finite() {
        return Err(Error::Range("matrix exponential overflowed".into()));
    }
    Ok(r)
}
