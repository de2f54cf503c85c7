//! Laguerre Wronskians `Φ̃_{m,n}(y)` and `Φ_{λ,μ}(y)` with β kept symbolic,
//! plus the closed forms for their leading and constant coefficients.
//!
//! The determinant is taken in the variable `y = x²` after stripping the
//! common factor `x^{1/2} e^{-x²/2}` from every column. Column `j` then reads
//! `y^{±β/2} q_j(y)` and two times its derivative is `y^{±β/2-1}` times
//! `(±β) q_j + 2y q_j'`. Collecting powers of `y` gives
//! `det P = κ · y^{C(r,2)+C(s,2)} · Φ̃`, where row `k+1` of `P` is
//! `(±β - 2k) p + 2y p'` applied to row `k`.

mod formulas;
mod hermite;

pub use formulas::{
    constant_term_hooks, constant_term_hooks_core, constant_term_pochhammer, subleading,
};
pub use hermite::{hermite_monic, hermite_reduce_check};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{
    ff_determinant, int, integral, interpolate, laguerre_monic, laguerre_monic_at, rat_int,
    shift_yb, vandermonde, Poly, PolyB, PolyQ, PolyYB, Ring,
};
use crate::par::{self, Exec};
use crate::partitions::Partition;

/// Strictly decreasing vector of nonnegative integers, `m = λ + δ_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictVector(Vec<usize>);

impl StrictVector {
    pub fn new(v: Vec<usize>) -> Result<Self> {
        if v.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Domain(format!("{v:?} is not strictly decreasing")));
        }
        Ok(StrictVector(v))
    }

    /// `λ + δ_len`.
    pub fn from_partition(lambda: &Partition, len: usize) -> Self {
        StrictVector(
            lambda
                .beta_vector(len)
                .into_iter()
                .map(|x| x as usize)
                .collect(),
        )
    }

    pub fn partition(&self) -> Partition {
        let len = self.0.len();
        Partition::new(
            self.0
                .iter()
                .enumerate()
                .map(|(k, &x)| x - (len - 1 - k))
                .collect(),
        )
        .expect("strict vectors unshift to partitions")
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// `Σ m_i^k` as an integer.
    pub fn power_sum(&self, k: u32) -> BigInt {
        self.0.iter().map(|&x| BigInt::from(x).pow(k)).sum()
    }
}

impl TryFrom<Vec<usize>> for StrictVector {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        StrictVector::new(v)
    }
}

impl From<StrictVector> for Vec<usize> {
    fn from(v: StrictVector) -> Self {
        v.0
    }
}

/// A Wronskian polynomial in `y` with coefficients in ℤ[β].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiPoly {
    poly: PolyYB,
}

impl PhiPoly {
    pub fn poly(&self) -> &PolyYB {
        &self.poly
    }

    pub fn into_poly(self) -> PolyYB {
        self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    /// Coefficient of `y^k`.
    pub fn coeff(&self, k: usize) -> PolyB {
        self.poly.coeff(k)
    }

    pub fn constant_term(&self) -> PolyB {
        self.coeff(0)
    }

    pub fn at_beta(&self, beta: &BigRational) -> PolyQ {
        crate::exactalg::eval_yb(&self.poly, beta)
    }

    pub fn is_even(&self) -> bool {
        self.poly
            .coeffs()
            .iter()
            .skip(1)
            .step_by(2)
            .all(Ring::is_zero)
    }

    /// True when every `y^k` coefficient has β-degree at most `degree - k`.
    pub fn respects_beta_degree_bound(&self) -> bool {
        let d = self.degree();
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .all(|(k, c)| c.degree().is_none_or(|e| e + k <= d))
    }
}

impl std::fmt::Display for PhiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.poly.render("y"))
    }
}

/// `2^{C(r+s,2)} Δ(m) Δ(n) Π_{i,j} (n_j - m_i - β)` with `Δ(v) = Π_{i<j}(v_j - v_i)`.
pub fn kappa(m: &StrictVector, n: &StrictVector) -> PolyB {
    let big = |v: &StrictVector| {
        v.as_slice()
            .iter()
            .map(|&x| int(x as i64))
            .collect::<Vec<_>>()
    };
    let size = m.len() + n.len();
    let scalar = BigInt::from(2).pow((size * size.saturating_sub(1) / 2) as u32)
        * vandermonde(&big(m))
        * vandermonde(&big(n));
    let mut acc = PolyB::constant(scalar);
    for &mi in m.as_slice() {
        for &nj in n.as_slice() {
            acc = &acc * &Poly::new(vec![int(nj as i64 - mi as i64), int(-1)]);
        }
    }
    acc
}

/// Degree of `Φ̃_{m,n}` in `y`.
pub fn degree(m: &StrictVector, n: &StrictVector) -> usize {
    let c2 = |k: usize| k * k.saturating_sub(1) / 2;
    m.sum() + n.sum() - c2(m.len()) - c2(n.len())
}

fn strip_power(m: &StrictVector, n: &StrictVector) -> usize {
    let c2 = |k: usize| k * k.saturating_sub(1) / 2;
    c2(m.len()) + c2(n.len())
}

/// Rows of the factored determinant for one column: `p_0 = L̂`, then
/// `p_{k+1} = (a - 2k) p_k + 2y p_k'` where `a = ±β`.
fn column<T: Ring>(start: Poly<T>, a: &T, rows: usize) -> Vec<Poly<T>> {
    let two = T::from_i64(2);
    let mut out = Vec::with_capacity(rows);
    let mut p = start;
    for k in 0..rows {
        let next = if k + 1 < rows {
            let lin = a.sub_ref(&T::from_i64(2 * k as i64));
            Some(&p.scale(&lin) + &p.derivative().shl(1).scale(&two))
        } else {
            None
        };
        match next {
            Some(q) => out.push(std::mem::replace(&mut p, q)),
            None => {
                out.push(p);
                break;
            }
        }
    }
    out
}

fn transpose<T: Clone>(cols: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let n = cols.len();
    (0..n)
        .map(|k| cols.iter().map(|c| c[k].clone()).collect())
        .collect()
}

/// `Φ̃_{m,n}` at an integer value of β, given `κ(b) ≠ 0`.
fn phi_tilde_at(m: &StrictVector, n: &StrictVector, b: i64) -> Result<Poly<BigInt>> {
    let size = m.len() + n.len();
    let bb = int(b);
    let nb = int(-b);
    let cols: Vec<Vec<Poly<BigInt>>> = m
        .as_slice()
        .iter()
        .map(|&k| column(laguerre_monic_at(k, &bb), &bb, size))
        .chain(
            n.as_slice()
                .iter()
                .map(|&k| column(laguerre_monic_at(k, &nb), &nb, size)),
        )
        .collect();
    let det = ff_determinant(transpose(cols))?;
    let kap = kappa(m, n).eval(&bb);
    det.shr_exact(strip_power(m, n))?.exact_div_scalar(&kap)
}

/// Integer β values avoiding the zeros `n_j - m_i` of κ.
fn sample_points(m: &StrictVector, n: &StrictVector, count: usize) -> Vec<i64> {
    let bad: Vec<i64> = m
        .as_slice()
        .iter()
        .flat_map(|&a| n.as_slice().iter().map(move |&b| b as i64 - a as i64))
        .collect();
    (0i64..)
        .flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
        .filter(|b| !bad.contains(b))
        .take(count)
        .collect()
}

/// `Φ̃_{m,n}(y)`, monic of degree `|m| + |n| - C(r,2) - C(s,2)`.
pub fn phi_tilde(m: &StrictVector, n: &StrictVector) -> Result<PhiPoly> {
    phi_tilde_with(Exec::default(), m, n)
}

/// Same as [`phi_tilde`], evaluating the determinant at enough integer β to
/// pin down every coefficient and interpolating.
pub fn phi_tilde_with(exec: Exec, m: &StrictVector, n: &StrictVector) -> Result<PhiPoly> {
    let d = degree(m, n);
    let size = m.len() + n.len();
    // β-degree of det P is at most Σm + Σn + C(N,2); κ has β-degree exactly rs.
    let bound = m.sum() + n.sum() + size * size.saturating_sub(1) / 2 - m.len() * n.len();
    let points = sample_points(m, n, bound + 1);
    let values = par::map(exec, &points, |&b| phi_tilde_at(m, n, b))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = values.iter().find(|v| v.degree() != Some(d)) {
        return Err(Error::InexactDivision(format!(
            "Wronskian degree {:?} differs from the predicted {d}",
            bad.degree()
        )));
    }
    let nodes: Vec<BigRational> = points.iter().map(|&b| rat_int(&int(b))).collect();
    let coeffs = (0..=d)
        .map(|k| {
            let ys: Vec<BigRational> = values.iter().map(|v| rat_int(&v.coeff(k))).collect();
            integral(&interpolate(&nodes, &ys))
        })
        .collect::<Result<Vec<_>>>()?;
    let poly = Poly::new(coeffs);
    if !poly.is_monic() {
        return Err(Error::InexactDivision(format!(
            "Wronskian is not monic: leading {:?}",
            poly.leading()
        )));
    }
    Ok(PhiPoly { poly })
}

/// Direct fraction-free determinant over ℤ[β][y]; slow, kept as an oracle.
pub fn phi_tilde_symbolic(m: &StrictVector, n: &StrictVector) -> Result<PhiPoly> {
    let size = m.len() + n.len();
    let plus = crate::exactalg::beta();
    let minus = plus.neg_ref();
    let cols: Vec<Vec<PolyYB>> = m
        .as_slice()
        .iter()
        .map(|&k| column(laguerre_monic(k), &plus, size))
        .chain(n.as_slice().iter().map(|&k| {
            column(
                crate::exactalg::reflect_beta(&laguerre_monic(k)),
                &minus,
                size,
            )
        }))
        .collect();
    let det = ff_determinant(transpose(cols))?;
    let poly = det
        .shr_exact(strip_power(m, n))?
        .exact_div_scalar(&kappa(m, n))?;
    if !poly.is_monic() || poly.degree() != Some(degree(m, n)) {
        return Err(Error::InexactDivision(
            "symbolic Wronskian is not monic of the predicted degree".into(),
        ));
    }
    Ok(PhiPoly { poly })
}

/// `Φ_{λ,μ}` with the minimal paddings `r = ℓ(λ)`, `s = ℓ(μ)`.
pub fn phi(lambda: &Partition, mu: &Partition) -> Result<PhiPoly> {
    phi_padded(Exec::default(), lambda, mu, lambda.len(), mu.len())
}

/// `Φ̃_{λ+δ_r, μ+δ_s}` with β shifted by `s - r`.
pub fn phi_padded(
    exec: Exec,
    lambda: &Partition,
    mu: &Partition,
    r: usize,
    s: usize,
) -> Result<PhiPoly> {
    let m = StrictVector::from_partition(lambda, r);
    let n = StrictVector::from_partition(mu, s);
    let tilde = phi_tilde_with(exec, &m, &n)?;
    Ok(PhiPoly {
        poly: shift_yb(&tilde.poly, s as i64 - r as i64),
    })
}

/// `P_λ(z)` with `P_λ(y²) = Φ_{λ,λ'}(y)`.
pub fn p_poly(lambda: &Partition) -> Result<PolyYB> {
    let phi = phi(lambda, &lambda.conjugate())?;
    if !phi.is_even() {
        return Err(Error::Domain(format!(
            "Φ for [{lambda}] and its conjugate is not even in y"
        )));
    }
    Ok(Poly::new(
        phi.poly.coeffs().iter().step_by(2).cloned().collect(),
    ))
}
