//! Dense univariate polynomials over any exact ring, including other
//! polynomial rings (so `Poly<Poly<BigInt>>` is ℤ[β][y]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Commutative ring with exact arithmetic. Methods take references so big
/// coefficients are never cloned just to be combined.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_i64(n: i64) -> Self;

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, k: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = out.mul_ref(self);
        }
        out
    }
}

/// Division that is only defined when the quotient exists in the ring.
pub trait ExactDiv: Ring {
    fn exact_div(&self, divisor: &Self) -> Result<Self>;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

impl ExactDiv for BigInt {
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if Zero::is_zero(divisor) {
            return Err(Error::InexactDivision(format!("{self} / 0")));
        }
        let (q, r) = self.div_rem(divisor);
        if Zero::is_zero(&r) {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!(
                "{self} / {divisor} leaves {r}"
            )))
        }
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

impl ExactDiv for BigRational {
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if Zero::is_zero(divisor) {
            return Err(Error::InexactDivision(format!("{self} / 0")));
        }
        Ok(self / divisor)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    /// Builds from ascending coefficients, trimming high zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Poly {
            coeffs: vec![T::zero(), T::one()],
        }
    }

    /// `c · x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// `x + a`.
    pub fn linear(a: T) -> Self {
        Poly::new(vec![a, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_ref(&T::from_i64(k as i64)))
                .collect(),
        )
    }

    /// Multiplies by `x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `x^k`, failing if a low coefficient is nonzero.
    pub fn shr_exact(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!(
                "polynomial not divisible by x^{k}"
            )));
        }
        Ok(Poly::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Exponent of the largest power of `x` dividing `self` (zero polynomial: `None`).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `p(x) ↦ p(x + a)`.
    pub fn taylor_shift(&self, a: &T) -> Self {
        let lin = Poly::linear(a.clone());
        let mut acc = Poly::new(Vec::new());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `p(x) ↦ p(-x)`.
    pub fn reflect(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.neg_ref() } else { c.clone() })
                .collect(),
        )
    }

    /// Composition `p(q(x))`.
    pub fn compose(&self, q: &Poly<T>) -> Self {
        let mut acc = Poly::new(Vec::new());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }
}

impl<T: ExactDiv> Poly<T> {
    /// Long division that must leave no remainder.
    pub fn exact_div_poly(&self, d: &Poly<T>) -> Result<Poly<T>> {
        let dlead = d
            .leading()
            .ok_or_else(|| Error::InexactDivision("division by the zero polynomial".into()))?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return if self.coeffs.is_empty() {
                Ok(self.clone())
            } else {
                Err(Error::InexactDivision(
                    "divisor has higher degree than dividend".into(),
                ))
            };
        }
        let mut q = vec![T::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let f = top.exact_div(dlead)?;
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub_ref(&f.mul_ref(c));
            }
            q[k] = f;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(
                "nonzero polynomial remainder".into(),
            ));
        }
        Ok(Poly::new(q))
    }

    /// Divides every coefficient by a scalar.
    pub fn exact_div_scalar(&self, c: &T) -> Result<Poly<T>> {
        Ok(Poly::new(
            self.coeffs
                .iter()
                .map(|a| a.exact_div(c))
                .collect::<Result<_>>()?,
        ))
    }
}

impl<T: Ring> Ring for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Poly {
            coeffs: vec![T::one()],
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        Poly::constant(T::from_i64(n))
    }
}

impl<T: ExactDiv> ExactDiv for Poly<T> {
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.exact_div_poly(divisor)
    }
}

impl<T: Ring> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, other: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            a.add_assign_ref(b);
        }
        Poly::new(coeffs)
    }
}

impl<T: Ring> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, other: &Poly<T>) -> Poly<T> {
        self + &(-other)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }
}

impl<T: Ring> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, other: &Poly<T>) -> Poly<T> {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly { coeffs: Vec::new() };
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_assign_ref(&a.mul_ref(b));
            }
        }
        Poly::new(out)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Ring> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, other: Poly<T>) -> Poly<T> {
                (&self).$m(&other)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

/// Formats a coefficient as a signed term; nested polynomials are parenthesized.
pub trait Coefficient {
    fn render(&self) -> String;
    fn is_atomic(&self) -> bool;
}

impl Coefficient for BigInt {
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_atomic(&self) -> bool {
        true
    }
}

impl Coefficient for BigRational {
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_atomic(&self) -> bool {
        self.is_integer()
    }
}

impl<T: Ring + Coefficient + Signed0> Poly<T> {
    pub fn render(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_atom();
            let body = if neg { c.neg_ref() } else { c.clone() };
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let coef = if k > 0 && body.is_one() {
                String::new()
            } else if body.is_atomic() || (k == 0 && out.is_empty()) {
                body.render()
            } else {
                format!("({})", body.render())
            };
            let term = match (coef.is_empty(), mono.is_empty()) {
                (true, _) => mono,
                (false, true) => coef,
                (false, false) => format!("{coef}*{mono}"),
            };
            if out.is_empty() {
                out = if neg { format!("-{term}") } else { term };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        out
    }
}

/// Sign test used only for pretty-printing.
pub trait Signed0 {
    fn is_negative_atom(&self) -> bool;
}

impl Signed0 for BigInt {
    fn is_negative_atom(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Signed0 for BigRational {
    fn is_negative_atom(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl<T> Signed0 for Poly<T> {
    fn is_negative_atom(&self) -> bool {
        false
    }
}

impl<T: Ring + Coefficient + Signed0> Coefficient for Poly<T> {
    fn render(&self) -> String {
        self.render("β")
    }
    fn is_atomic(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() <= 1
            && self.coeffs.iter().all(|c| c.is_zero() || c.is_atomic())
            && !self.coeffs.last().is_some_and(|c| c.is_negative_atom())
    }
}

impl<T: Ring + Coefficient + Signed0> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}
