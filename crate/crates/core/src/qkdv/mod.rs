//! Free-field realization of the Virasoro algebra at `c = -2` on the Fock
//! space, the quantum KdV hamiltonians `I₁, I₃, I₅`, and the operators
//! `A_k` whose common eigenbasis is the Schur basis.

mod fock;
mod modes;

pub use fock::{complete_h, schur_vector, FockVector};
pub use modes::{Beta, DiffPoly, ModeOp};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{rat, Poly, PolyQ, Ring};
use crate::par::{self, Exec};
use crate::partitions::{partitions_of, Partition};
use crate::shiftsym::{pk, qkdv_eigenvalues};

pub const DEFAULT_DEGREE: usize = 8;

fn c(p: i64, q: i64) -> PolyQ {
    Poly::constant(rat(p, q))
}

/// `c · β^k`.
fn cb(p: i64, q: i64, k: usize) -> PolyQ {
    Poly::monomial(rat(p, q), k)
}

/// Stress tensor `(β² - 1)/8 + (β/2) u + ½ :u²: + ½ u₁`.
pub fn stress_tensor(beta: &Beta) -> DiffPoly {
    let b = beta.as_poly();
    DiffPoly::constant(beta.weight())
        .plus(b.scale(&rat(1, 2)), &[0])
        .plus(c(1, 2), &[0, 0])
        .plus(c(1, 2), &[1])
}

pub fn virasoro_l(m: i64, beta: &Beta) -> ModeOp {
    ModeOp::new(stress_tensor(beta), m)
}

/// Applies `I_k` (`k ∈ {1, 3, 5}`) written through the `L_m`. Sums stop once
/// `L_n` annihilates every monomial of `v`.
pub fn apply_i(k: usize, beta: &Beta, v: &FockVector<PolyQ>) -> Result<FockVector<PolyQ>> {
    let l = |m: i64, w: &FockVector<PolyQ>| virasoro_l(m, beta).apply(w);
    let d = v.degree().unwrap_or(0) as i64;
    let sum = |acc: &mut FockVector<PolyQ>, w: FockVector<PolyQ>, k: i64| {
        acc.add_scaled(&w, &Poly::constant(rat(k, 1)))
    };
    match k {
        1 => Ok(l(0, v)),
        3 => {
            let mut out = l(0, &l(0, v));
            for n in 1..=d {
                sum(&mut out, l(-n, &l(n, v)), 2);
            }
            Ok(out)
        }
        5 => {
            let mut out = l(0, &l(0, &l(0, v)));
            for n in 1..=d {
                let ln = l(n, v);
                if ln.is_zero() {
                    continue;
                }
                sum(&mut out, l(0, &l(-n, &ln)), 3);
                sum(&mut out, l(-n, &l(0, &ln)), 3);
                for m in 1..=d - n {
                    sum(&mut out, l(-m - n, &l(m, &ln)), 3);
                }
            }
            for s in 2..=d {
                let top = l(s, v);
                if top.is_zero() {
                    continue;
                }
                for m in 1..s {
                    sum(&mut out, l(-m, &l(-(s - m), &top)), 3);
                }
            }
            Ok(out)
        }
        _ => Err(Error::Domain(format!(
            "I_{k} is not implemented; use 1, 3 or 5"
        ))),
    }
}

/// Operator restricted to the degree-`n` monomial basis (partitions of `n`,
/// reverse-lex); `entries[row][col]` is the coefficient of `basis[row]` in
/// the image of `basis[col]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub degree: usize,
    pub basis: Vec<Partition>,
    pub entries: Vec<Vec<PolyQ>>,
}

impl Block {
    fn build(
        exec: Exec,
        n: usize,
        f: impl Fn(&FockVector<PolyQ>) -> Result<FockVector<PolyQ>> + Sync + Send,
    ) -> Result<Block> {
        let basis: Vec<Partition> = partitions_of(n).collect();
        let images = par::map(exec, &basis, |m| {
            f(&FockVector::monomial(m.clone(), PolyQ::one()))
        });
        let mut entries = vec![vec![PolyQ::zero(); basis.len()]; basis.len()];
        for (col, img) in images.into_iter().enumerate() {
            let img = img?;
            if !img.is_homogeneous(n) {
                return Err(Error::Domain(format!(
                    "operator does not preserve degree {n}"
                )));
            }
            for (row, m) in basis.iter().enumerate() {
                entries[row][col] = img.coeff(m);
            }
        }
        Ok(Block {
            degree: n,
            basis,
            entries,
        })
    }

    pub fn commutator(&self, other: &Block) -> Block {
        let mul = |a: &Block, b: &Block| -> Vec<Vec<PolyQ>> {
            let n = a.basis.len();
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            (0..n).fold(PolyQ::zero(), |acc, k| {
                                &acc + &(&a.entries[i][k] * &b.entries[k][j])
                            })
                        })
                        .collect()
                })
                .collect()
        };
        let (ab, ba) = (mul(self, other), mul(other, self));
        let entries = ab
            .iter()
            .zip(&ba)
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
            .collect();
        Block {
            degree: self.degree,
            basis: self.basis.clone(),
            entries,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(PolyQ::is_zero)
    }
}

/// `I_k` per degree block, degrees `0..=max_degree`.
pub fn i_operator(k: usize, beta: &Beta, max_degree: usize) -> Result<Vec<Block>> {
    i_operator_with(Exec::default(), k, beta, max_degree)
}

pub fn i_operator_with(exec: Exec, k: usize, beta: &Beta, max_degree: usize) -> Result<Vec<Block>> {
    (0..=max_degree)
        .map(|n| Block::build(exec, n, |v| apply_i(k, beta, v)))
        .collect()
}

/// `res :density: dz/z` per degree block.
pub fn residue_operator(density: &DiffPoly, max_degree: usize) -> Result<Vec<Block>> {
    residue_operator_with(Exec::default(), density, max_degree)
}

pub fn residue_operator_with(
    exec: Exec,
    density: &DiffPoly,
    max_degree: usize,
) -> Result<Vec<Block>> {
    let op = ModeOp::residue(density.clone());
    (0..=max_degree)
        .map(|n| Block::build(exec, n, |v| Ok(op.apply(v))))
        .collect()
}

/// Density of `A_k` for `1 ≤ k ≤ 6`.
pub fn a_density(k: usize) -> Result<DiffPoly> {
    let d = DiffPoly::new();
    Ok(match k {
        1 => d.plus(c(1, 1), &[0]),
        2 => d.plus(c(1, 2), &[0, 0]),
        3 => d.plus(c(1, 3), &[0, 0, 0]),
        4 => d
            .plus(c(1, 4), &[0, 0, 0, 0])
            .plus(c(-1, 4), &[1, 1])
            .plus(c(-1, 8), &[0, 0]),
        5 => d
            .plus(c(1, 5), &[0; 5])
            .plus(c(1, 2), &[0, 0, 2])
            .plus(c(-1, 6), &[0, 0, 0]),
        6 => d
            .plus(c(1, 6), &[0; 6])
            .plus(c(-5, 24), &[0; 4])
            .plus(c(-5, 2), &[0, 0, 1, 1])
            .plus(c(7, 96), &[0, 0])
            .plus(c(5, 24), &[1, 1])
            .plus(c(1, 6), &[2, 2]),
        _ => {
            return Err(Error::Domain(format!(
                "A_{k} density is only tabulated for 1 ≤ k ≤ 6"
            )))
        }
    })
}

/// Which differential-polynomial form of a hamiltonian to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DensityForm {
    /// Commonly quoted coefficients.
    Printed,
    /// β² terms of `I₃` and `I₅` halved, which is what the mode sums give.
    Derived,
}

/// Differential-polynomial density of `I_k`.
pub fn hamiltonian_density(k: usize, form: DensityForm) -> Result<DiffPoly> {
    let h = Beta::Symbolic.weight();
    let half = matches!(form, DensityForm::Derived);
    Ok(match k {
        1 => DiffPoly::constant(h).plus(c(1, 2), &[0, 0]),
        3 => DiffPoly::constant(&h * &h)
            .plus(cb(3, if half { 8 } else { 4 }, 2), &[0, 0])
            .plus(cb(1, 2, 1), &[0, 0, 0])
            .plus(c(1, 4), &[0; 4])
            .plus(c(1, 4), &[0, 2])
            .plus(c(-1, 8), &[0, 0]),
        5 => {
            let q2 = if half { 64 } else { 32 };
            DiffPoly::constant(&(&h * &h) * &h)
                .plus(cb(15, 128, 4), &[0, 0])
                .plus(cb(5, 16, 3), &[0, 0, 0])
                .plus(cb(30, q2, 2), &[0; 4])
                .plus(cb(30, q2, 2), &[0, 2])
                .plus(cb(-9, q2, 2), &[0, 0])
                .plus(cb(6, 16, 1), &[0; 5])
                .plus(cb(15, 16, 1), &[0, 0, 2])
                .plus(cb(-3, 16, 1), &[0, 0, 0])
                .plus(c(16, 128), &[0; 6])
                .plus(c(-12, 128), &[0; 4])
                .plus(c(-240, 128), &[0, 0, 1, 1])
                .plus(c(3, 128), &[0, 0])
                .plus(c(12, 128), &[1, 1])
                .plus(c(16, 128), &[2, 2])
        }
        _ => {
            return Err(Error::Domain(format!(
                "I_{k} is not implemented; use 1, 3 or 5"
            )))
        }
    })
}

/// `I_k` as a combination of `A_2 … A_6` read off the shifted-symmetric
/// eigenvalue formulas: pairs `(coefficient, k)` with `k = 0` the identity.
pub fn i_in_a_basis(k: usize) -> Result<Vec<(PolyQ, usize)>> {
    let h = Beta::Symbolic.weight();
    Ok(match k {
        1 => vec![(h, 0), (c(1, 1), 2)],
        3 => vec![
            (&h * &h, 0),
            (c(1, 1), 4),
            (cb(3, 2, 1), 3),
            (cb(3, 4, 2), 2),
        ],
        5 => vec![
            (&(&h * &h) * &h, 0),
            (c(3, 4), 6),
            (c(1, 4), 4),
            (cb(15, 8, 1), 5),
            (cb(3, 8, 1), 3),
            (cb(15, 8, 2), 4),
            (cb(3, 16, 2), 2),
            (cb(15, 16, 3), 3),
            (cb(15, 64, 4), 2),
        ],
        _ => {
            return Err(Error::Domain(format!(
                "I_{k} is not implemented; use 1, 3 or 5"
            )))
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub k: usize,
    pub form: DensityForm,
    pub max_degree: usize,
    /// First degree block where the mode-sum operator and the residue differ.
    pub first_mismatch: Option<usize>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    /// `I_k` equals its `A`-combination on every block, per `k`.
    pub a_algebra: Vec<(usize, bool)>,
}

/// Compares `I_k` built from the `L_m` with the residue of its density, for
/// both density forms, and with the polynomial in the `A_j`; β symbolic.
pub fn hamiltonian_identity_check(ks: &[usize], max_degree: usize) -> Result<IdentityReport> {
    let beta = Beta::Symbolic;
    let mut checks = Vec::new();
    let mut a_algebra = Vec::new();
    let a_blocks: Vec<Vec<Block>> = (2..=6)
        .map(|j| residue_operator(&a_density(j)?, max_degree))
        .collect::<Result<_>>()?;
    for &k in ks {
        let modes = i_operator(k, &beta, max_degree)?;
        for form in [DensityForm::Printed, DensityForm::Derived] {
            let res = residue_operator(&hamiltonian_density(k, form)?, max_degree)?;
            let first_mismatch = modes
                .iter()
                .zip(&res)
                .find(|(a, b)| a != b)
                .map(|(a, _)| a.degree);
            checks.push(IdentityCheck {
                k,
                form,
                max_degree,
                first_mismatch,
            });
        }
        let combo = i_in_a_basis(k)?;
        let agrees = modes.iter().all(|blk| {
            let n = blk.basis.len();
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let mut want = PolyQ::zero();
                    for (coef, a) in &combo {
                        let entry = if *a == 0 {
                            if i == j {
                                PolyQ::one()
                            } else {
                                PolyQ::zero()
                            }
                        } else {
                            a_blocks[a - 2][blk.degree].entries[i][j].clone()
                        };
                        want = &want + &(coef * &entry);
                    }
                    want == blk.entries[i][j]
                })
            })
        });
        a_algebra.push((k, agrees));
    }
    Ok(IdentityReport { checks, a_algebra })
}

/// Schur vector with coefficients lifted to `ℚ[β]`.
pub fn schur_vector_poly(lambda: &Partition, max_degree: usize) -> Result<FockVector<PolyQ>> {
    Ok(schur_vector(lambda, max_degree)?.map(|x| Poly::constant(x.clone())))
}

/// `Some(eigenvalue)` when `v` is an eigenvector of `op`; the eigenvalue is
/// read from the leading monomial.
pub fn eigenvalue_of(v: &FockVector<PolyQ>, image: &FockVector<PolyQ>) -> Option<PolyQ> {
    let (m, a) = v.terms().next()?;
    let lead = a
        .coeffs()
        .first()
        .filter(|_| a.degree() == Some(0))?
        .clone();
    let eig = image.coeff(m).scale(&(rat(1, 1) / lead));
    (v.scale(&eig) == *image).then_some(eig)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalCheck {
    pub degree: usize,
    pub operator: String,
    /// First Schur function that is not an eigenvector with the expected eigenvalue.
    pub counterexample: Option<Partition>,
}

/// Schur functions of degree `n` as eigenvectors of `I₁, I₃, I₅` (β symbolic)
/// and of `A₂ … A₆`, with the shifted-symmetric eigenvalues.
pub fn diagonal_check(n: usize) -> Result<Vec<DiagonalCheck>> {
    let parts: Vec<Partition> = partitions_of(n).collect();
    let beta = Beta::Symbolic;
    let mut out = Vec::new();
    for k in [1, 3, 5] {
        let bad = par::map(Exec::default(), &parts, |l| -> Result<bool> {
            let s = schur_vector_poly(l, n)?;
            let e = qkdv_eigenvalues(l);
            let want = match k {
                1 => e.i1,
                3 => e.i3,
                _ => e.i5,
            };
            Ok(apply_i(k, &beta, &s)? == s.scale(&want))
        });
        out.push(first_failure(n, format!("I{k}"), &parts, bad)?);
    }
    for j in 2..=6 {
        let op = ModeOp::residue(a_density(j)?);
        let bad = par::map(Exec::default(), &parts, |l| -> Result<bool> {
            let s = schur_vector_poly(l, n)?;
            Ok(op.apply(&s) == s.scale(&Poly::constant(pk(l, j))))
        });
        out.push(first_failure(n, format!("A{j}"), &parts, bad)?);
    }
    Ok(out)
}

fn first_failure(
    degree: usize,
    operator: String,
    parts: &[Partition],
    ok: Vec<Result<bool>>,
) -> Result<DiagonalCheck> {
    let mut counterexample = None;
    for (l, r) in parts.iter().zip(ok) {
        if !r? {
            counterexample = Some(l.clone());
            break;
        }
    }
    Ok(DiagonalCheck {
        degree,
        operator,
        counterexample,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VirasoroCheck {
    pub m: i64,
    pub n: i64,
    pub degree: usize,
    pub holds: bool,
}

/// `[L_m, L_n] = (m - n) L_{m+n} - δ_{m+n,0} (m³ - m)/6` on every monomial of
/// degree `d ≤ max_degree - max(|m|, |n|)`.
pub fn virasoro_check(m: i64, n: i64, beta: &Beta, max_degree: usize) -> Vec<VirasoroCheck> {
    let top = max_degree.saturating_sub(m.unsigned_abs().max(n.unsigned_abs()) as usize);
    let (lm, ln, lmn) = (
        virasoro_l(m, beta),
        virasoro_l(n, beta),
        virasoro_l(m + n, beta),
    );
    let central = if m + n == 0 {
        rat(m * m * m - m, 6)
    } else {
        rat(0, 1)
    };
    (0..=top)
        .map(|d| {
            let holds = partitions_of(d).all(|mono| {
                let v = FockVector::monomial(mono, PolyQ::one());
                let lhs = lm.apply(&ln.apply(&v)).sub_ref(&ln.apply(&lm.apply(&v)));
                let mut rhs = lmn.apply(&v).scale(&Poly::constant(rat(m - n, 1)));
                rhs.add_scaled(&v, &Poly::constant(-central.clone()));
                lhs == rhs
            });
            VirasoroCheck {
                m,
                n,
                degree: d,
                holds,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests;
