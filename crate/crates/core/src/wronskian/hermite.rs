use num_rational::BigRational;

use super::{phi_tilde, StrictVector};
use crate::error::Result;
use crate::exactalg::{ff_determinant, int, rat, rat_int, vandermonde, Poly, PolyQ, Ring};

/// Monic Hermite polynomial `Ĥ_n(x) = 2^{-n} H_n(x)`.
pub fn hermite_monic(n: usize) -> PolyQ {
    let mut prev = PolyQ::zero();
    let mut cur = PolyQ::one();
    for k in 0..n {
        let next = &cur.shl(1) - &prev.scale(&rat(k as i64, 2));
        prev = cur;
        cur = next;
    }
    cur
}

/// Checks that the Wronskian of `Ĥ_{2m_i}, Ĥ_{2n_j+1}` divided by
/// `Δ(2m, 2n+1)` equals `x^{C(r-s,2)} Φ̃_{m,n}(x²)` at β = -1/2.
pub fn hermite_reduce_check(m: &StrictVector, n: &StrictVector) -> Result<bool> {
    let degrees: Vec<usize> = m
        .as_slice()
        .iter()
        .map(|&k| 2 * k)
        .chain(n.as_slice().iter().map(|&k| 2 * k + 1))
        .collect();
    let size = degrees.len();
    let mut rows: Vec<Vec<PolyQ>> = Vec::with_capacity(size);
    if size > 0 {
        rows.push(degrees.iter().map(|&k| hermite_monic(k)).collect());
    }
    for k in 1..size {
        let next = rows[k - 1].iter().map(Poly::derivative).collect();
        rows.push(next);
    }
    let wr = ff_determinant(rows)?;
    let delta: BigRational = rat_int(&vandermonde(
        &degrees.iter().map(|&k| int(k as i64)).collect::<Vec<_>>(),
    ));
    let lhs = wr.scale(&(BigRational::from_integer(1.into()) / delta));

    let t = m.len() as i64 - n.len() as i64;
    let shift = (t * (t - 1) / 2) as usize;
    let at_half = phi_tilde(m, n)?.at_beta(&rat(-1, 2));
    let mut coeffs = vec![BigRational::from_integer(0.into()); shift + 2 * at_half.coeffs().len()];
    for (k, c) in at_half.coeffs().iter().enumerate() {
        coeffs[shift + 2 * k] = c.clone();
    }
    Ok(lhs == Poly::new(coeffs))
}
