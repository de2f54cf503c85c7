//! Shifted symmetric power sums `p_k(λ)` and the closed forms built from them:
//! the first three quantum KdV eigenvalues on `s_λ` and the sums of roots of
//! the symmetric-case polynomial `P_λ`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;

use crate::exactalg::{rat, Poly, PolyQ, Ring};
use crate::partitions::Partition;

/// Largest `k` served by [`ShiftedEval`].
pub const MAX_K: usize = 6;

/// `p_k(λ)` summed over the first `len ≥ ℓ(λ)` rows; rows past `ℓ(λ)` cancel.
pub fn pk_padded(lambda: &Partition, k: usize, len: usize) -> BigRational {
    if k == 0 {
        return rat(1, 1);
    }
    let half = rat(1, 2);
    let e = (k - 1) as i32;
    (1..=len)
        .map(|i| {
            let row = rat(lambda.part(i) as i64 - i as i64, 1) + &half;
            let empty = rat(-(i as i64), 1) + &half;
            Pow::pow(&row, e) - Pow::pow(&empty, e)
        })
        .sum()
}

pub fn pk(lambda: &Partition, k: usize) -> BigRational {
    pk_padded(lambda, k, lambda.len())
}

/// `p_0 … p_6` of one partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedEval {
    values: [BigRational; MAX_K + 1],
}

impl ShiftedEval {
    pub fn new(lambda: &Partition) -> Self {
        ShiftedEval {
            values: std::array::from_fn(|k| pk(lambda, k)),
        }
    }

    pub fn p(&self, k: usize) -> &BigRational {
        &self.values[k]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

/// Value that rests on an unproven identity; consumers must surface the flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjectural<T>(pub T);

impl<T> Conjectural<T> {
    pub const CONJECTURAL: bool = true;

    pub fn into_inner(self) -> T {
        self.0
    }
}

/// Eigenvalues of `I_1, I_3, I_5` on `s_λ` as polynomials in β.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvalues {
    pub i1: PolyQ,
    pub i3: PolyQ,
    pub i5: PolyQ,
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn poly(cs: Vec<BigRational>) -> PolyQ {
    Poly::new(cs)
}

/// `(β² - 1)/8`, the conformal weight of the vacuum.
pub fn vacuum_weight() -> PolyQ {
    poly(vec![rat(-1, 8), q(0), rat(1, 8)])
}

pub fn qkdv_eigenvalues(lambda: &Partition) -> Eigenvalues {
    let s = ShiftedEval::new(lambda);
    let p = |k| s.p(k).clone();
    let h = vacuum_weight();
    let i1 = &h + &poly(vec![p(2)]);
    let i3 = &(&h * &h) + &poly(vec![p(4), rat(3, 2) * p(3), rat(3, 4) * p(2)]);
    let i5 = &(&(&h * &h) * &h)
        + &poly(vec![
            rat(3, 4) * p(6) + rat(1, 4) * p(4),
            rat(15, 8) * p(5) + rat(3, 8) * p(3),
            rat(15, 8) * p(4) + rat(3, 16) * p(2),
            rat(15, 16) * p(3),
            rat(15, 64) * p(2),
        ]);
    Eigenvalues { i1, i3, i5 }
}

/// Sum of the roots of `P_λ`.
pub fn root_sum(lambda: &Partition) -> PolyQ {
    let s = ShiftedEval::new(lambda);
    let p = |k| s.p(k).clone();
    poly(vec![
        q(2) * p(4) - q(2) * p(2) * p(2) + rat(1, 2) * p(2),
        q(3) * p(3),
        p(2),
    ])
}

/// Sum of the squared roots of `P_λ` according to the conjectured closed form.
pub fn root_sum_sq(lambda: &Partition) -> Conjectural<PolyQ> {
    let s = ShiftedEval::new(lambda);
    let p = |k| s.p(k).clone();
    let (p2, p3, p4, p5, p6) = (p(2), p(3), p(4), p(5), p(6));
    Conjectural(poly(vec![
        q(14) * &p6 - q(40) * &p4 * &p2 + rat(64, 3) * &p2 * &p2 * &p2 + rat(65, 3) * &p4
            - q(20) * &p2 * &p2
            + rat(27, 8) * &p2,
        q(35) * &p5 - q(60) * &p3 * &p2 + rat(65, 2) * &p3,
        q(30) * &p4 - q(22) * &p2 * &p2 + rat(25, 2) * &p2,
        q(10) * &p3,
        p2,
    ]))
}

/// Power sums of the roots of a monic polynomial, read off its coefficients
/// through Newton's identities. Entry `k - 1` is `Σ z_i^k` for `k = 1..=count`.
pub fn root_power_sums<T: Ring>(coeffs: &[T], count: usize) -> Vec<T> {
    let d = coeffs.len().saturating_sub(1);
    // elementary symmetric e_j = (-1)^j a_{d-j}
    let e = |j: usize| match j {
        j if j > d => T::zero(),
        j if j % 2 == 0 => coeffs[d - j].clone(),
        j => coeffs[d - j].neg_ref(),
    };
    let mut sums: Vec<T> = Vec::with_capacity(count);
    for k in 1..=count {
        let lead = T::from_i64(k as i64).mul_ref(&e(k));
        let mut acc = if k % 2 == 1 { lead } else { lead.neg_ref() };
        for i in 1..k {
            let term = e(i).mul_ref(&sums[k - i - 1]);
            acc = if i % 2 == 1 {
                acc.add_ref(&term)
            } else {
                acc.sub_ref(&term)
            };
        }
        sums.push(acc);
    }
    sums
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::to_rational;
    use crate::partitions::{part, partitions_of, partitions_up_to};
    use crate::wronskian::{p_poly, subleading, StrictVector};

    #[test]
    fn small_values() {
        assert_eq!(pk(&part(&[2, 1]), 3), q(0));
        assert_eq!(pk(&part(&[1]), 4), rat(1, 4));
        assert_eq!(pk(&Partition::empty(), 0), q(1));
        for n in 0..=10 {
            for l in partitions_of(n) {
                assert_eq!(pk(&l, 2), q(n as i64));
            }
        }
    }

    #[test]
    fn conjugation_and_padding() {
        for l in partitions_up_to(10) {
            let c = l.conjugate();
            for k in 0..=MAX_K {
                let sign = if k % 2 == 0 { q(1) } else { q(-1) };
                assert_eq!(pk(&c, k), sign * pk(&l, k), "[{l}] k={k}");
                assert_eq!(pk_padded(&l, k, l.len() + 5), pk(&l, k));
            }
        }
    }

    #[test]
    fn eigenvalue_examples() {
        let h = vacuum_weight();
        let e = qkdv_eigenvalues(&Partition::empty());
        assert_eq!(e.i1, h);
        assert_eq!(e.i3, &h * &h);
        assert_eq!(e.i5, &(&h * &h) * &h);
        let e = qkdv_eigenvalues(&part(&[1]));
        assert_eq!(e.i1, &h + &Poly::constant(q(1)));
        assert_eq!(e.i3, &(&h * &h) + &poly(vec![rat(1, 4), q(0), rat(3, 4)]));
    }

    #[test]
    fn root_sum_examples() {
        assert!(root_sum(&Partition::empty()).is_zero());
        assert_eq!(root_sum(&part(&[1])), poly(vec![q(-1), q(0), q(1)]));
        assert!(root_sum_sq(&Partition::empty()).0.is_zero());
    }

    #[test]
    fn root_sum_from_wronskian() {
        for l in partitions_up_to(6) {
            let c = l.conjugate();
            let (r, s) = (l.len(), c.len());
            let m = StrictVector::from_partition(&l, r);
            let n = StrictVector::from_partition(&c, s);
            let shift = s as i64 - r as i64;
            let formula = root_sum(&l);
            if l.size() >= 1 {
                let (_, second) = subleading(&m, &n).unwrap();
                let sub = crate::exactalg::substitute_beta_shift(&second.unwrap(), shift);
                assert_eq!(formula, to_rational(&sub).neg_ref(), "[{l}]");
            }
            let p = p_poly(&l).unwrap();
            let coeffs: Vec<PolyQ> = p.coeffs().iter().map(to_rational).collect();
            let sums = root_power_sums(&coeffs, 2);
            if l.size() >= 1 {
                assert_eq!(sums[0], formula, "[{l}]");
            }
        }
    }

    #[test]
    fn eigenvalue_relations() {
        for l in partitions_up_to(8) {
            let e = qkdv_eigenvalues(&l);
            let two = Poly::constant(q(2));
            assert_eq!(
                root_sum(&l),
                &(&two * &e.i3) - &(&two * &(&e.i1 * &e.i1)),
                "[{l}]"
            );
            let c = |a: i64, b: i64| Poly::constant(rat(a, b));
            let rhs = &(&(&(&c(56, 3) * &e.i5) - &(&c(40, 1) * &(&e.i3 * &e.i1)))
                + &(&c(64, 3) * &(&(&e.i1 * &e.i1) * &e.i1)))
                + &(&(&c(12, 1) * &e.i3) - &(&c(12, 1) * &(&e.i1 * &e.i1)));
            assert_eq!(root_sum_sq(&l).0, rhs, "[{l}]");
        }
    }

    /// The squared-root formula checked exactly through Newton's identities.
    #[test]
    fn squared_root_sum_exact() {
        for l in partitions_up_to(6) {
            let p = p_poly(&l).unwrap();
            let coeffs: Vec<PolyQ> = p.coeffs().iter().map(to_rational).collect();
            let sums = root_power_sums(&coeffs, 2);
            assert_eq!(sums[1], root_sum_sq(&l).0, "[{l}]");
        }
    }

    #[test]
    fn newton_identities_on_integers() {
        // (z-1)(z-2)(z-3)
        let sums = root_power_sums(&[q(-6), q(11), q(-6), q(1)], 3);
        assert_eq!(sums, vec![q(6), q(14), q(36)]);
    }
}
