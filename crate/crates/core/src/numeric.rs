//! Floating-point layer: roots of `P_λ` at a fixed β, the BLZ system and
//! the Calogero–Moser equilibrium they satisfy, and Newton-sum cross-checks
//! against the exact closed forms.

use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{eval_yb, rat_to_f64, PolyQ};
use crate::partitions::Partition;
use crate::shiftsym::{qkdv_eigenvalues, root_sum, root_sum_sq, Conjectural};
use crate::wronskian::p_poly;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    /// Relative size of the last Aberth correction that counts as converged.
    pub root: f64,
    pub max_iterations: usize,
    /// Smallest admissible distance between two roots.
    pub separation: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            root: 1e-12,
            max_iterations: 500,
            separation: 1e-8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// `|P(z_i)| / Σ|a_k||z_i|^k`, the backward error at each root.
    pub residuals: Vec<f64>,
    pub degree: usize,
}

impl RootSet {
    pub fn sum(&self) -> Complex64 {
        self.roots.iter().sum()
    }

    pub fn power_sum(&self, k: i32) -> Complex64 {
        self.roots.iter().map(|z| z.powi(k)).sum()
    }

    /// Coefficients of `Π (z - z_i)`, constant term first.
    pub fn expand(&self) -> Vec<Complex64> {
        let mut c = vec![Complex64::new(1.0, 0.0)];
        for &z in &self.roots {
            let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
            for (k, &a) in c.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * z;
            }
            c = next;
        }
        c
    }

    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (i, a) in self.roots.iter().enumerate() {
            for b in &self.roots[i + 1..] {
                best = best.min((a - b).norm());
            }
        }
        best
    }
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All complex roots of a polynomial given constant-term-first, by
/// Aberth–Ehrlich iteration on the rescaled polynomial.
pub fn roots_f64(coeffs: &[Complex64], tol: &Tolerances) -> Result<RootSet> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|a| a.norm() == 0.0) {
        c.pop();
    }
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Err(Error::Domain("root finding needs degree at least 1".into()));
    }
    let lead = c[n];
    for a in &mut c {
        *a /= lead;
    }
    // z = s w with s the geometric mean of the root moduli
    let s = if c[0].norm() > 0.0 {
        c[0].norm().powf(1.0 / n as f64)
    } else {
        1.0
    };
    let scaled: Vec<Complex64> = c
        .iter()
        .enumerate()
        .map(|(k, &a)| a / s.powi((n - k) as i32))
        .collect();
    let shift = -scaled[n - 1] / n as f64;
    let mut w: Vec<Complex64> = (0..n)
        .map(|k| {
            shift
                + Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4)
        })
        .collect();
    let mut trace = Vec::new();
    let mut converged = false;
    for _ in 0..tol.max_iterations {
        let mut worst = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(&scaled, w[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| 1.0 / (w[i] - w[j]))
                .sum();
            let step = ratio / (1.0 - ratio * repulsion);
            w[i] -= step;
            worst = worst.max(step.norm() / w[i].norm().max(1e-300));
        }
        trace.push(worst);
        if worst <= tol.root {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NumericFailure {
            iterations: trace.len(),
            last_step: trace.last().copied().unwrap_or(f64::NAN),
            trace,
        });
    }
    let mut roots: Vec<Complex64> = w.iter().map(|&x| x * s).collect();
    // two Newton polishing steps in the original scale
    for z in &mut roots {
        for _ in 0..2 {
            let (p, dp) = horner(&c, *z);
            if dp.norm() > 0.0 {
                *z -= p / dp;
            }
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let residuals = roots
        .iter()
        .map(|&z| {
            let scale: f64 = c
                .iter()
                .enumerate()
                .map(|(k, a)| a.norm() * z.norm().powi(k as i32))
                .sum();
            horner(&c, z).0.norm() / scale
        })
        .collect();
    Ok(RootSet {
        roots,
        residuals,
        degree: n,
    })
}

/// Roots of a rational polynomial (not necessarily monic).
pub fn poly_roots(p: &PolyQ) -> Result<RootSet> {
    poly_roots_with(p, &Tolerances::default())
}

pub fn poly_roots_with(p: &PolyQ, tol: &Tolerances) -> Result<RootSet> {
    let c: Vec<Complex64> = p
        .coeffs()
        .iter()
        .map(|a| Complex64::new(rat_to_f64(a), 0.0))
        .collect();
    roots_f64(&c, tol)
}

/// Roots of `P_λ` at a rational β.
pub fn p_roots(lambda: &Partition, beta: &BigRational) -> Result<RootSet> {
    if lambda.is_empty() {
        return Ok(RootSet {
            roots: Vec::new(),
            residuals: Vec::new(),
            degree: 0,
        });
    }
    poly_roots(&eval_yb(&p_poly(lambda)?, beta))
}

fn check_separation(points: &[Complex64], min: f64) -> Result<()> {
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let d = (a - b).norm();
            if d < min {
                return Err(Error::DegenerateRoots(d));
            }
        }
    }
    Ok(())
}

/// Largest violation of
/// `Σ_{j≠k} z_k (z_k² + 12 z_k z_j + 3 z_j²)/(z_k - z_j)³ - z_k/8 + (β² - 1)/8 = 0`.
pub fn blz_residual(roots: &RootSet, beta: &BigRational) -> Result<f64> {
    blz_residual_with(roots, beta, &Tolerances::default())
}

pub fn blz_residual_with(roots: &RootSet, beta: &BigRational, tol: &Tolerances) -> Result<f64> {
    let z = &roots.roots;
    check_separation(z, tol.separation)?;
    let b = rat_to_f64(beta);
    let h = (b * b - 1.0) / 8.0;
    Ok(z.iter()
        .enumerate()
        .map(|(k, &zk)| {
            let pair: Complex64 = z
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &zj)| zk * (zk * zk + 12.0 * zk * zj + 3.0 * zj * zj) / (zk - zj).powi(3))
                .sum();
            (pair - zk / 8.0 + h).norm()
        })
        .fold(0.0, f64::max))
}

/// Largest violation of `-x_k + (β² - ¼)/x_k³ + Σ_{j≠k} 2/(x_k - x_j)³ = 0`.
pub fn calogero_residual(x: &[Complex64], beta: &BigRational) -> Result<f64> {
    check_separation(x, Tolerances::default().separation)?;
    if let Some(z) = x
        .iter()
        .find(|z| z.norm() < Tolerances::default().separation)
    {
        return Err(Error::DegenerateRoots(z.norm()));
    }
    let b = rat_to_f64(beta);
    let g = b * b - 0.25;
    Ok(x.iter()
        .enumerate()
        .map(|(k, &xk)| {
            let pair: Complex64 = x
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &xj)| 2.0 / (xk - xj).powi(3))
                .sum();
            (-xk + g / xk.powi(3) + pair).norm()
        })
        .fold(0.0, f64::max))
}

/// The four fourth roots of each `z_i`: the poles of the potential in `x`.
pub fn fourth_roots(roots: &RootSet) -> Vec<Complex64> {
    let i = Complex64::i();
    roots
        .roots
        .iter()
        .flat_map(|z| {
            let r = z.powf(0.25);
            [r, r * i, -r, -r * i]
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NewtonReport {
    pub lambda: Partition,
    pub beta: f64,
    pub sum_numeric: f64,
    /// Root-sum closed form at β.
    pub sum_exact: f64,
    /// `2I₃ - 2I₁²` at β.
    pub sum_from_hamiltonians: f64,
    pub sum_diff: f64,
    pub sum_hamiltonian_diff: f64,
    pub sum_sq_numeric: f64,
    pub sum_sq_formula: f64,
    pub sum_sq_diff: f64,
    pub sum_sq_conjectural: bool,
    /// Largest imaginary part of the numeric sums; zero up to rounding.
    pub imaginary: f64,
}

pub fn newton_check(lambda: &Partition, beta: &BigRational) -> Result<NewtonReport> {
    let roots = p_roots(lambda, beta)?;
    let at = |p: &PolyQ| rat_to_f64(&p.eval(beta));
    let e = qkdv_eigenvalues(lambda);
    let two = crate::exactalg::rat(2, 1);
    let from_i = &e.i3.scale(&two) - &(&e.i1 * &e.i1).scale(&two);
    let s1 = roots.sum();
    let s2 = roots.power_sum(2);
    let sum_exact = at(&root_sum(lambda));
    let sum_from_hamiltonians = at(&from_i);
    let sq: Conjectural<PolyQ> = root_sum_sq(lambda);
    let sum_sq_formula = at(&sq.0);
    Ok(NewtonReport {
        lambda: lambda.clone(),
        beta: rat_to_f64(beta),
        sum_numeric: s1.re,
        sum_exact,
        sum_from_hamiltonians,
        sum_diff: (s1.re - sum_exact).abs(),
        sum_hamiltonian_diff: (s1.re - sum_from_hamiltonians).abs(),
        sum_sq_numeric: s2.re,
        sum_sq_formula,
        sum_sq_diff: (s2.re - sum_sq_formula).abs(),
        sum_sq_conjectural: Conjectural::<PolyQ>::CONJECTURAL,
        imaginary: s1.im.abs().max(s2.im.abs()),
    })
}
