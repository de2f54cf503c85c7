use num_bigint::BigInt;
use num_rational::BigRational;

use super::{degree, StrictVector};
use crate::error::{Error, Result};
use crate::exactalg::{integral, rat, rat_int, ExactDiv, Poly, PolyB, PolyQ, Ring};
use crate::partitions::Partition;

fn neg_one_pow(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Constant term of `Φ_{λ,μ}` from odd hooks of the partition with empty
/// 2-core and 2-quotient `(λ, μ)`. Each factor `h/2 + ±(1/2 + β)` is integral.
pub fn constant_term_hooks(lambda: &Partition, mu: &Partition) -> PolyB {
    let big = Partition::from_core_quotient(0, lambda, mu);
    let v = big.two_core_quotient().v_odd as usize;
    let sign = neg_one_pow(lambda.size() + mu.size() + v);
    big.odd_hook_cells()
        .iter()
        .fold(PolyB::constant(BigInt::from(sign)), |acc, oh| {
            let s = oh.sign as i64;
            let factor = Poly::new(vec![
                BigInt::from((oh.hook as i64 + s) / 2),
                BigInt::from(s),
            ]);
            &acc * &factor
        })
}

/// Same constant term read off the partition with 2-core `(c, …, 1)`; the
/// result does not depend on `c`.
pub fn constant_term_hooks_core(lambda: &Partition, mu: &Partition, c: usize) -> Result<PolyB> {
    let big = Partition::from_core_quotient(c, lambda, mu);
    let v = big.two_core_quotient().v_odd as usize;
    let offset = rat(neg_one_pow(c) * (1 + 2 * c as i64), 2);
    let product = |p: &Partition, odd_only: bool| {
        let conj = p.conjugate();
        p.cells()
            .filter_map(|cell| {
                let h = p.part(cell.i) + conj.part(cell.j) + 1 - cell.i - cell.j;
                if odd_only && h.is_multiple_of(2) {
                    return None;
                }
                let s = neg_one_pow(p.part(cell.i) + cell.i);
                Some(Poly::new(vec![
                    rat(h as i64, 2) + &offset * BigInt::from(s),
                    rat(s, 1),
                ]))
            })
            .fold(PolyQ::one(), |acc, f| &acc * &f)
    };
    let num = product(&big, true);
    let den = product(&Partition::staircase(c), false);
    let sign = neg_one_pow(lambda.size() + mu.size() + v);
    integral(&num.exact_div_poly(&den)?.scale(&rat(sign, 1)))
}

/// `(±β + a)_k` for any integer `k`, as a fraction `num / den`.
fn pochhammer_fraction(sign: i64, a: i64, k: i64) -> (PolyB, PolyB) {
    let lin = |c: i64| Poly::new(vec![BigInt::from(c), BigInt::from(sign)]);
    if k >= 0 {
        (
            (0..k).fold(PolyB::one(), |acc, j| &acc * &lin(a + j)),
            PolyB::one(),
        )
    } else {
        (
            PolyB::one(),
            (1..=-k).fold(PolyB::one(), |acc, j| &acc * &lin(a - j)),
        )
    }
}

/// Constant term of `Φ̃_{m,n}` from the Pochhammer product, checked to be a
/// polynomial in β.
pub fn constant_term_pochhammer(m: &StrictVector, n: &StrictVector) -> Result<PolyB> {
    let mut num = PolyB::constant(BigInt::from(neg_one_pow(degree(m, n))));
    let mut den = PolyB::one();
    let mut absorb = |(p, q): (PolyB, PolyB)| {
        num = &num * &p;
        den = &den * &q;
    };
    for (i, &mi) in m.as_slice().iter().enumerate() {
        let i = i as i64 + 1;
        absorb(pochhammer_fraction(1, i, mi as i64 + 1 - i));
    }
    for (j, &nj) in n.as_slice().iter().enumerate() {
        let j = j as i64 + 1;
        absorb(pochhammer_fraction(-1, j, nj as i64 + 1 - j));
    }
    for (i, &mi) in m.as_slice().iter().enumerate() {
        for (j, &nj) in n.as_slice().iter().enumerate() {
            let (i, j) = (i as i64 + 1, j as i64 + 1);
            absorb((
                Poly::new(vec![BigInt::from(j - i), BigInt::from(-1)]),
                Poly::new(vec![BigInt::from(nj as i64 - mi as i64), BigInt::from(-1)]),
            ));
        }
    }
    num.exact_div(&den)
}

/// The coefficients of `y^{d-1}` and `y^{d-2}` in `Φ̃_{m,n}` from their closed
/// forms in the power sums of `m` and `n`. The second is `None` when `d < 2`.
pub fn subleading(m: &StrictVector, n: &StrictVector) -> Result<(PolyB, Option<PolyB>)> {
    let d = degree(m, n);
    if d == 0 {
        return Err(Error::Domain(
            "degree 0 Wronskian has no subleading coefficient".into(),
        ));
    }
    let q = |x: i64| rat(x, 1);
    let (r, s) = (m.len() as i64, n.len() as i64);
    let nn = q(r + s);
    let big_r = q(r * (r - 1) / 2);
    let big_s = q(s * (s - 1) / 2);
    let rho = |k: u32, sign: i64| {
        rat_int(&m.power_sum(k)) + rat_int(&n.power_sum(k)) * BigInt::from(sign)
    };
    let (p1, p2, p3) = (rho(1, 1), rho(2, 1), rho(3, 1));
    let (m1, m2) = (rho(1, -1), rho(2, -1));
    let one = q(1);
    let n1 = &nn - &one;
    let c3 = &nn * &n1 * (&nn - q(2)) / q(6);
    let rs = q(r - s);

    let first = Poly::new(vec![-&p2 + &n1 * &p1 - &c3, -(&m1 - &big_r + &big_s)]);
    if d < 2 {
        return Ok((integral(&first)?, None));
    }

    let quad = &nn * &nn - q(2) * &nn;
    let a9 = &quad + q(9);
    let a6 = &quad + q(6);
    let a2 = &quad + q(2);
    let c0: BigRational =
        &p2 * &p2 / q(2) - &p3 - &n1 * &p2 * &p1 + &n1 * &a9 / q(6) * &p2 + &a2 / q(2) * &p1 * &p1
            - &n1 * &n1 * &a6 / q(6) * &p1
            + &nn * &n1 * &n1 * (&nn - q(2)) * &a9 / q(72);
    let c1: BigRational = &p2 * &m1 - q(3) / q(2) * &m2 - &n1 * (&p1 * &m1 + &rs / q(2) * &p2)
        + &a2 * &rs / q(2) * &p1
        + &n1 * &a9 / q(6) * &m1
        - &a6 * &n1 * &n1 * &rs / q(12);
    let c2: BigRational = &m1 * &m1 / q(2) - &p1 / q(2) - (&big_r - &big_s) * &m1
        + (&big_r * (&big_r + &one) + &big_s * (&big_s + &one)) / q(2)
        - &big_r * &big_s;
    let second = Poly::new(vec![c0, c1, c2]);
    Ok((integral(&first)?, Some(integral(&second)?)))
}
