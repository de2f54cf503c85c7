//! Exact arithmetic kernel: polynomial rings over big integers and rationals,
//! monic Laguerre polynomials, Bareiss determinants and interpolation.

mod det;
mod poly;

pub use det::{cofactor_determinant, ff_determinant};
pub use poly::{Coefficient, ExactDiv, Poly, Ring, Signed0};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};

/// ℤ[β].
pub type PolyB = Poly<BigInt>;
/// ℚ[β] (also used for ℚ[y] and ℚ[x]).
pub type PolyQ = Poly<BigRational>;
/// ℤ[β][y].
pub type PolyYB = Poly<PolyB>;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// The indeterminate β as a `PolyB`.
pub fn beta() -> PolyB {
    Poly::var()
}

/// `±β + a`.
pub fn beta_affine(sign: i64, a: i64) -> PolyB {
    Poly::new(vec![int(a), int(sign)])
}

/// Rising factorial `(±β + a)_k`.
pub fn pochhammer(sign: i64, a: i64, k: usize) -> PolyB {
    (0..k as i64).fold(PolyB::one(), |acc, j| &acc * &beta_affine(sign, a + j))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// Monic generalized Laguerre polynomial: coefficient of `y^i` is
/// `(-1)^(n+i) C(n,i) (β+i+1)_(n-i)`.
pub fn laguerre_monic(n: usize) -> PolyYB {
    Poly::new(
        (0..=n)
            .map(|i| {
                let sign = if (n + i).is_multiple_of(2) { 1 } else { -1 };
                pochhammer(1, i as i64 + 1, n - i).scale(&(binomial(n as u64, i as u64) * sign))
            })
            .collect(),
    )
}

/// Same polynomial with β replaced by the integer `b`.
pub fn laguerre_monic_at(n: usize, b: &BigInt) -> Poly<BigInt> {
    laguerre_monic(n).map(|c| c.eval(b))
}

pub fn to_rational(p: &PolyB) -> PolyQ {
    p.map(rat_int)
}

/// Evaluates a β-polynomial at a rational point.
pub fn eval_b(p: &PolyB, b: &BigRational) -> BigRational {
    to_rational(p).eval(b)
}

/// Substitutes a rational β into every coefficient of a ℤ[β][y] polynomial.
pub fn eval_yb(p: &PolyYB, b: &BigRational) -> PolyQ {
    p.map(|c| eval_b(c, b))
}

/// `p(β) ↦ p(β + k)`.
pub fn substitute_beta_shift(p: &PolyB, k: i64) -> PolyB {
    p.taylor_shift(&int(k))
}

/// Applies the β shift to every y-coefficient.
pub fn shift_yb(p: &PolyYB, k: i64) -> PolyYB {
    p.map(|c| substitute_beta_shift(c, k))
}

/// `p(β) ↦ p(-β)` on every y-coefficient.
pub fn reflect_beta(p: &PolyYB) -> PolyYB {
    p.map(|c| c.reflect())
}

/// Converts a rational polynomial with integral coefficients back to ℤ.
pub fn integral(p: &PolyQ) -> Result<PolyB> {
    p.coeffs()
        .iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::InexactDivision(format!(
                    "non-integral coefficient {c}"
                )))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(Poly::new)
}

/// Newton interpolation through `(x_k, y_k)` with distinct nodes.
pub fn interpolate(nodes: &[BigRational], values: &[BigRational]) -> PolyQ {
    assert_eq!(nodes.len(), values.len());
    let n = nodes.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / (&nodes[k] - &nodes[k - level]);
        }
    }
    let mut acc = PolyQ::zero();
    for k in (0..n).rev() {
        acc = &(&acc * &Poly::linear(-nodes[k].clone())) + &Poly::constant(dd[k].clone());
    }
    acc
}

/// Vandermonde product `Δ(v) = Π_{i<j} (v_j - v_i)`.
pub fn vandermonde<T: Ring>(v: &[T]) -> T {
    let mut acc = T::one();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            acc = acc.mul_ref(&v[j].sub_ref(&v[i]));
        }
    }
    acc
}

pub fn rat_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Sign of a nonzero rational as ±1, zero for zero.
pub fn sign_of(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
