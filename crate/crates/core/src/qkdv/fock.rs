//! Truncated bosonic Fock space `ℚ[q₁, q₂, …]` with `deg q_n = n`. A monomial
//! `q_{a₁}⋯q_{a_k}` is stored as the partition `(a₁ ≥ … ≥ a_k)`, so the
//! monomial basis in degree `n` is indexed by the partitions of `n`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactalg::{cofactor_determinant, Ring};
use crate::partitions::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector<T> {
    terms: BTreeMap<Partition, T>,
}

impl<T: Ring> FockVector<T> {
    pub fn zero() -> Self {
        FockVector {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: Partition, c: T) -> Self {
        let mut v = Self::zero();
        v.add_term(m, c);
        v
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(Partition::empty(), c)
    }

    /// `q_k`.
    pub fn q(k: usize) -> Self {
        Self::monomial(Partition::from_unsorted(vec![k]), T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Partition) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    /// Largest monomial degree, `None` for the zero vector.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn is_homogeneous(&self, n: usize) -> bool {
        self.terms.keys().all(|m| m.size() == n)
    }

    pub fn add_term(&mut self, m: Partition, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &T) {
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a.mul_ref(c));
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> FockVector<U> {
        let mut out = FockVector::zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), f(a));
        }
        out
    }
}

impl<T: Ring> Ring for FockVector<T> {
    fn zero() -> Self {
        FockVector::zero()
    }
    fn one() -> Self {
        FockVector::constant(T::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &T::one());
        out
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &T::one().neg_ref());
        out
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, a) in &self.terms {
            for (m2, b) in &other.terms {
                let mut parts = m1.parts().to_vec();
                parts.extend_from_slice(m2.parts());
                out.add_term(Partition::from_unsorted(parts), a.mul_ref(b));
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        self.map(T::neg_ref)
    }
    fn from_i64(n: i64) -> Self {
        FockVector::constant(T::from_i64(n))
    }
}

fn z_factor(m: &Partition) -> BigInt {
    // z_μ = Π k^{m_k} m_k!
    let mut z = BigInt::from(1);
    let parts = m.parts();
    let mut i = 0;
    while i < parts.len() {
        let k = parts[i];
        let mult = parts[i..].iter().take_while(|&&p| p == k).count();
        for j in 1..=mult {
            z *= BigInt::from(k) * BigInt::from(j);
        }
        i += mult;
    }
    z
}

/// `h_k = Σ_{μ ⊢ k} q_μ / z_μ`, the coefficient of `y^k` in `exp(Σ q_j y^j / j)`.
pub fn complete_h(k: usize) -> FockVector<BigRational> {
    let mut out = FockVector::zero();
    for m in crate::partitions::partitions_of(k) {
        let z = z_factor(&m);
        out.add_term(m, BigRational::new(BigInt::from(1), z));
    }
    out
}

/// Schur function `s_λ` by Jacobi–Trudi, `det(h_{λ_i - i + j})`.
pub fn schur_vector(lambda: &Partition, max_degree: usize) -> Result<FockVector<BigRational>> {
    if lambda.size() > max_degree {
        return Err(Error::Domain(format!(
            "[{lambda}] has degree {} beyond the truncation {max_degree}",
            lambda.size()
        )));
    }
    let r = lambda.len();
    let hs: Vec<FockVector<BigRational>> = (0..=lambda.part(1) + r).map(complete_h).collect();
    let matrix: Vec<Vec<FockVector<BigRational>>> = (1..=r)
        .map(|i| {
            (1..=r)
                .map(|j| {
                    let k = lambda.part(i) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        FockVector::zero()
                    } else {
                        hs[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    Ok(cofactor_determinant(&matrix))
}
