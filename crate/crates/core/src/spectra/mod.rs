//! Spectral data of the rational extensions `H_{λ,μ}`: the ± spectra, the
//! spectral determinants `Q±`, the Stokes multiplier `T`, QQ residuals, and
//! the counting of BLZ polynomials.
//!
//! With `z = (1 ± β)/2 - E/4 - r` every pole factor `1/(E - E_±(k - r))`
//! equals `-1/(4(z + k))`, so `Q` collapses to a finite product times
//! `1/Γ(z + K + 1)` and stays entire in `E`. That is the form evaluated here.

pub mod gamma;

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::eval_b;
use crate::par::{self, Exec};
use crate::partitions::{partitions_of, Partition};
use crate::wronskian::constant_term_hooks;
use gamma::{gamma, rgamma};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn sign(self) -> f64 {
        match self {
            Side::Plus => 1.0,
            Side::Minus => -1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectralFlag {
    Finite,
    /// A reciprocal-Γ factor or a product factor vanished exactly.
    ZeroOfReciprocal,
    Pole,
    Overflow,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpectralValue {
    pub re: f64,
    pub im: f64,
    pub flag: SpectralFlag,
}

impl SpectralValue {
    fn from_parts(value: Complex64, exact_zero: bool) -> Self {
        let flag = if exact_zero {
            SpectralFlag::ZeroOfReciprocal
        } else if !value.re.is_finite() || !value.im.is_finite() {
            SpectralFlag::Overflow
        } else {
            SpectralFlag::Finite
        };
        let value = if exact_zero { Complex64::zero() } else { value };
        SpectralValue {
            re: value.re,
            im: value.im,
            flag,
        }
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

fn is_integer(x: f64) -> bool {
    x.fract() == 0.0
}

fn excluded(side: Side, beta: f64) -> bool {
    // ∓β a positive integer
    let b = -side.sign() * beta;
    b > 0.0 && is_integer(b)
}

fn check_momentum(side: Side, beta: f64) -> Result<()> {
    if excluded(side, beta) {
        let which = if side == Side::Plus { "+" } else { "-" };
        return Err(Error::MomentumExcluded(format!(
            "β = {beta} for the {which} spectrum"
        )));
    }
    Ok(())
}

/// `{4(k - λ'_{k+1}) + 2 + 2β : k ≤ kmax}` for `+`; `μ = λ'` and `-β` for `-`.
/// The symmetric case takes `μ = λ'`, so the `-` spectrum reads `λ` itself.
pub fn spectrum_general(
    lambda: &Partition,
    mu: &Partition,
    side: Side,
    beta: &BigRational,
    kmax: usize,
) -> Result<Vec<BigRational>> {
    check_momentum(side, beta.to_f64().unwrap_or(f64::NAN))?;
    let (p, b) = match side {
        Side::Plus => (lambda.conjugate(), beta.clone()),
        Side::Minus => (mu.conjugate(), -beta.clone()),
    };
    Ok((0..=kmax)
        .map(|k| {
            let base = 4 * (k as i64 - p.part(k + 1) as i64) + 2;
            BigRational::from_integer(BigInt::from(base)) + &b * BigInt::from(2)
        })
        .collect())
}

pub fn spectrum(
    lambda: &Partition,
    side: Side,
    beta: &BigRational,
    kmax: usize,
) -> Result<Vec<BigRational>> {
    spectrum_general(lambda, &lambda.conjugate(), side, beta, kmax)
}

/// `Π_{j ∈ [0,K] \ S} (z + j) · 1/Γ(z + K + 1)` with `S = λ + δ_r`, `K = max S`.
/// Second component reports an exact zero.
fn pole_collapsed(lambda: &Partition, z: Complex64) -> (Complex64, bool) {
    let r = lambda.len();
    let strict: Vec<usize> = lambda
        .beta_vector(r)
        .into_iter()
        .map(|x| x as usize)
        .collect();
    let top = strict.first().map_or(0, |&k| k + 1);
    let mut acc = Complex64::new(1.0, 0.0);
    let mut zero = false;
    for j in (0..top).filter(|j| !strict.contains(j)) {
        let f = z + j as f64;
        zero |= f == Complex64::zero();
        acc *= f;
    }
    let tail = z + top as f64;
    zero |= gamma::nonpositive_integer(tail).is_some();
    (acc * rgamma(tail), zero)
}

/// `Γ(1+β-t)Γ(t-β) / (Γ(-β)Γ(1+β))`, which equals `(-1)^t` wherever the
/// Γ's are finite; integer β uses that limit.
fn prefactor(beta: f64, t: i64) -> Complex64 {
    let parity = if t.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    if is_integer(beta) {
        return Complex64::new(parity, 0.0);
    }
    let c = |x: f64| Complex64::new(x, 0.0);
    gamma(c(1.0 + beta - t as f64)) * gamma(c(t as f64 - beta))
        / (gamma(c(-beta)) * gamma(c(1.0 + beta)))
}

/// Spectral determinant `Q±` of `H_{λ,μ}` (λ, μ with lengths r, s).
pub fn q_general(
    lambda: &Partition,
    mu: &Partition,
    side: Side,
    e: Complex64,
    beta: f64,
) -> Result<SpectralValue> {
    check_momentum(side, beta)?;
    let (r, s) = (lambda.len() as i64, mu.len() as i64);
    let c = |x: f64| Complex64::new(x, 0.0);
    let (value, zero) = match side {
        Side::Plus => {
            let z = c((1.0 + beta) / 2.0 - r as f64) - e / 4.0;
            let (p, zero) = pole_collapsed(lambda, z);
            (prefactor(beta, r - s) * gamma(c(1.0 + beta)) * p, zero)
        }
        Side::Minus => {
            let z = c((1.0 - beta) / 2.0 - s as f64) - e / 4.0;
            let (p, zero) = pole_collapsed(mu, z);
            let sign = if (r + s) % 2 == 0 { 1.0 } else { -1.0 };
            (
                prefactor(-beta, s - r) * gamma(c(1.0 - beta)) * p * sign,
                zero,
            )
        }
    };
    Ok(SpectralValue::from_parts(value, zero))
}

/// `Q±^λ = Q±` of `H_{λ,λ'}`.
pub fn q_eval(lambda: &Partition, side: Side, e: Complex64, beta: f64) -> Result<SpectralValue> {
    q_general(lambda, &lambda.conjugate(), side, e, beta)
}

/// Stokes multiplier of `H_{λ,μ}`, entire in `E` and β. Normalized by the
/// quarter-Wronskian of the subdominant solutions, which puts a factor π in
/// front of the Γ-product.
pub fn stokes_t_general(
    lambda: &Partition,
    mu: &Partition,
    e: Complex64,
    beta: f64,
) -> SpectralValue {
    let (r, s) = (lambda.len(), mu.len());
    let c = |x: f64| Complex64::new(x, 0.0);
    let zp = c((1.0 + beta) / 2.0 - r as f64) - e / 4.0;
    let zm = c((1.0 - beta) / 2.0 - s as f64) - e / 4.0;
    let (pp, zero_p) = pole_collapsed(lambda, zp);
    let (pm, zero_m) = pole_collapsed(mu, zm);
    let sign = if (r + s) % 2 == 0 { 1.0 } else { -1.0 };
    SpectralValue::from_parts(pp * pm * (PI * sign), zero_p || zero_m)
}

pub fn stokes_t(lambda: &Partition, e: Complex64, beta: f64) -> SpectralValue {
    stokes_t_general(lambda, &lambda.conjugate(), e, beta)
}

/// Left side of the QQ relation,
/// `e^{iβπ/2} Q+(iE) Q-(-iE) - e^{-iβπ/2} Q+(-iE) Q-(iE)`.
pub fn qq_lhs(lambda: &Partition, beta: f64, e: Complex64) -> Result<Complex64> {
    if is_integer(beta) {
        return Err(Error::MomentumExcluded(format!(
            "QQ relation needs non-integer β, got {beta}"
        )));
    }
    let i = Complex64::i();
    let q = |side, arg| q_eval(lambda, side, arg, beta).map(|v| v.value());
    let phase = (i * (beta * PI / 2.0)).exp();
    Ok(phase * q(Side::Plus, i * e)? * q(Side::Minus, -i * e)?
        - q(Side::Plus, -i * e)? * q(Side::Minus, i * e)? / phase)
}

/// Constant `c` with `qq_lhs = c · i e^{Eπ/4}`: `(-1)^{ℓ(λ)+ℓ(λ')} β` under
/// the normalization of [`q_eval`].
pub fn qq_constant(lambda: &Partition, beta: f64) -> f64 {
    let sign = if (lambda.len() + lambda.part(1)).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    };
    sign * beta
}

/// `|qq_lhs - c · i e^{Eπ/4}|`.
pub fn qq_residual(lambda: &Partition, beta: f64, e: Complex64) -> Result<f64> {
    let lhs = qq_lhs(lambda, beta, e)?;
    let rhs = Complex64::i() * (e * (PI / 4.0)).exp() * qq_constant(lambda, beta);
    Ok((lhs - rhs).norm())
}

/// Number of `λ ⊢ n` whose symmetric Wronskian has nonzero constant term at β.
pub fn count_blz(n: usize, beta: &BigRational) -> usize {
    count_blz_with(Exec::default(), n, beta)
}

pub fn count_blz_with(exec: Exec, n: usize, beta: &BigRational) -> usize {
    let parts: Vec<Partition> = partitions_of(n).collect();
    par::map(exec, &parts, |l| {
        !eval_b(&constant_term_hooks(l, &l.conjugate()), beta).is_zero()
    })
    .into_iter()
    .filter(|&b| b)
    .count()
}

/// Integers β with `(β² - 1)/8 = h_{r,s}` for some `r, s ≥ 1`, `rs ≤ n`,
/// where `h_{r,s} = ((r - 2s)² - 1)/8` at `c = -2`.
pub fn a_set(n: usize) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    for r in 1..=n as i64 {
        for s in 1..=n as i64 / r {
            out.insert(r - 2 * s);
            out.insert(2 * s - r);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VermaReport {
    pub n: usize,
    pub partitions: usize,
    pub in_a_n: bool,
    pub irreducible_in_degree: bool,
    pub blz_count: usize,
}

impl VermaReport {
    /// Equality of the BLZ count with `p(n)` exactly when the module is
    /// irreducible in degree `n`.
    pub fn consistent(&self) -> bool {
        (self.blz_count == self.partitions) == self.irreducible_in_degree
    }
}

pub fn verma_report(n: usize, beta: &BigRational) -> VermaReport {
    let h =
        (beta * beta - BigRational::from_integer(1.into())) / BigRational::from_integer(8.into());
    let in_a_n = (1..=n as i64).any(|r| {
        (1..=n as i64 / r).any(|s| {
            let w = BigRational::from_integer(BigInt::from((r - 2 * s).pow(2) - 1))
                / BigRational::from_integer(8.into());
            w == h
        })
    });
    VermaReport {
        n,
        partitions: partitions_of(n).count(),
        in_a_n,
        irreducible_in_degree: !in_a_n,
        blz_count: count_blz(n, beta),
    }
}

#[cfg(test)]
mod tests;
