//! Normally ordered mode sums of differential polynomials in the free field.
//!
//! `u(z) = Σ_a J_a z^{-a}` with `J_a = q_{-a}·` for `a < 0`, `J_a = a ∂/∂q_a`
//! for `a > 0` and `J_0 = 0`; `u_l = D_z^l u` has mode `(-a)^l J_a`. The
//! coefficient of `z^{-m}` in `:u_{l₁}⋯u_{l_j}:` is the sum over ordered
//! `(a₁, …, a_j)` with `Σ a_i = m`, annihilators acting first.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::fock::FockVector;
use crate::error::{Error, Result};
use crate::exactalg::{rat, Poly, PolyQ, Ring};
use crate::partitions::Partition;

/// Momentum carried either as the polynomial variable or as a number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Beta {
    Symbolic,
    Value(BigRational),
}

impl Beta {
    pub fn as_poly(&self) -> PolyQ {
        match self {
            Beta::Symbolic => Poly::var(),
            Beta::Value(b) => Poly::constant(b.clone()),
        }
    }

    /// `(β² - 1)/8`.
    pub fn weight(&self) -> PolyQ {
        let b = self.as_poly();
        (&(&b * &b) - &PolyQ::one()).scale(&rat(1, 8))
    }
}

/// Polynomial in `u, u₁, u₂, …` with coefficients in `ℚ[β]`. Each term keeps
/// its factor indices `l` sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffPoly {
    terms: Vec<(PolyQ, Vec<usize>)>,
}

impl DiffPoly {
    pub fn new() -> Self {
        DiffPoly::default()
    }

    pub fn constant(c: PolyQ) -> Self {
        DiffPoly::new().plus(c, &[])
    }

    /// Adds `c · u_{l₁} ⋯ u_{l_j}`, merging with an existing term of the same shape.
    pub fn plus(mut self, c: PolyQ, factors: &[usize]) -> Self {
        let mut f = factors.to_vec();
        f.sort_unstable();
        match self.terms.iter_mut().find(|(_, g)| *g == f) {
            Some((a, _)) => *a = &*a + &c,
            None => self.terms.push((c, f)),
        }
        self.terms.retain(|(a, _)| !a.is_zero());
        self
    }

    pub fn terms(&self) -> &[(PolyQ, Vec<usize>)] {
        &self.terms
    }

    pub fn add(&self, other: &DiffPoly) -> DiffPoly {
        other
            .terms
            .iter()
            .fold(self.clone(), |acc, (c, f)| acc.plus(c.clone(), f))
    }

    pub fn scale(&self, c: &PolyQ) -> DiffPoly {
        self.terms
            .iter()
            .fold(DiffPoly::new(), |acc, (a, f)| acc.plus(a * c, f))
    }

    /// Substitutes a value for β in every coefficient.
    pub fn at(&self, beta: &Beta) -> DiffPoly {
        match beta {
            Beta::Symbolic => self.clone(),
            Beta::Value(b) => self.terms.iter().fold(DiffPoly::new(), |acc, (a, f)| {
                acc.plus(Poly::constant(a.eval(b)), f)
            }),
        }
    }
}

impl fmt::Display for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, fs)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})", c.render("b"))?;
            for l in fs {
                match l {
                    0 => f.write_str(" u")?,
                    l => write!(f, " u{l}")?,
                }
            }
        }
        Ok(())
    }
}

/// Grammar: signed terms, each a product of rational literals, `b` (β) and
/// `u`, `u1`, `u2`, … with optional `^k`; factors are separated by
/// whitespace or `*`. Example: `1/4 u^4 - 1/4 u1^2 + 3/8 b^2 u^2`.
impl FromStr for DiffPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<DiffPoly> {
        let bad =
            |why: &str| Error::Domain(format!("malformed differential polynomial {s:?}: {why}"));
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        let mut out = DiffPoly::new();
        let skip_ws = |i: &mut usize| {
            while *i < chars.len() && (chars[*i].is_whitespace() || chars[*i] == '*') {
                *i += 1;
            }
        };
        let read_int = |i: &mut usize| -> Option<u64> {
            let start = *i;
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            chars[start..*i].iter().collect::<String>().parse().ok()
        };
        let read_exp = |i: &mut usize| -> Result<u64> {
            if *i < chars.len() && chars[*i] == '^' {
                *i += 1;
                read_int(i).ok_or_else(|| bad("exponent expected after '^'"))
            } else {
                Ok(1)
            }
        };
        skip_ws(&mut i);
        if i == chars.len() {
            return Err(bad("empty"));
        }
        let mut first = true;
        while i < chars.len() {
            let mut sign = 1;
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if !first {
                return Err(bad("expected '+' or '-' between terms"));
            }
            first = false;
            let mut coeff = PolyQ::constant(rat(sign, 1));
            let mut factors = Vec::new();
            let mut any = false;
            loop {
                skip_ws(&mut i);
                if i == chars.len() || chars[i] == '+' || chars[i] == '-' {
                    break;
                }
                let c = chars[i];
                if c.is_ascii_digit() {
                    let p = read_int(&mut i).ok_or_else(|| bad("number too large"))?;
                    let q = if i < chars.len() && chars[i] == '/' {
                        i += 1;
                        read_int(&mut i)
                            .filter(|&q| q != 0)
                            .ok_or_else(|| bad("bad denominator"))?
                    } else {
                        1
                    };
                    let r = BigRational::new(BigInt::from(p), BigInt::from(q));
                    coeff = coeff.scale(&r);
                } else if c == 'b' || c == 'β' {
                    i += 1;
                    let e = read_exp(&mut i)?;
                    coeff = &coeff * &Ring::pow(&Poly::var(), e as usize);
                } else if c == 'u' {
                    i += 1;
                    let l = if i < chars.len() && chars[i].is_ascii_digit() {
                        read_int(&mut i).ok_or_else(|| bad("derivative order too large"))? as usize
                    } else {
                        0
                    };
                    let e = read_exp(&mut i)?;
                    factors.extend(std::iter::repeat_n(l, e as usize));
                } else {
                    return Err(bad(&format!("unexpected character {c:?}")));
                }
                any = true;
            }
            if !any {
                return Err(bad("empty term"));
            }
            out = out.plus(coeff, &factors);
        }
        Ok(out)
    }
}

/// Coefficient of `z^{-mode}` in `:density:`; for `mode = 0` this is the
/// residue `res :density: dz/z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeOp {
    pub density: DiffPoly,
    pub mode: i64,
}

impl ModeOp {
    pub fn new(density: DiffPoly, mode: i64) -> Self {
        ModeOp { density, mode }
    }

    pub fn residue(density: DiffPoly) -> Self {
        ModeOp { density, mode: 0 }
    }

    pub fn apply(&self, v: &FockVector<PolyQ>) -> FockVector<PolyQ> {
        let mut out = FockVector::zero();
        for (mono, a) in v.terms() {
            for (c, ls) in self.density.terms() {
                let w = apply_monomial(ls, self.mode, mono);
                let scale = a * c;
                for (m, x) in w.terms() {
                    out.add_term(m.clone(), scale.scale(x));
                }
            }
        }
        out
    }
}

/// Ordered compositions of `k` into `parts` positive summands.
fn compositions(k: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if k == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if k < parts {
        return Vec::new();
    }
    (1..=k - parts + 1)
        .flat_map(|first| {
            compositions(k - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

fn signed_pow(base: i64, e: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(base).pow(e as u32))
}

/// `:u_{l₁}⋯u_{l_j}:` at `z^{-mode}` applied to one monomial.
fn apply_monomial(ls: &[usize], mode: i64, mono: &Partition) -> FockVector<BigRational> {
    let mut out = FockVector::zero();
    let d = mono.size();
    let j = ls.len();
    if j == 0 {
        if mode == 0 {
            out.add_term(mono.clone(), rat(1, 1));
        }
        return out;
    }
    for mask in 0u32..(1 << j) {
        let pos: Vec<usize> = (0..j)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| ls[i])
            .collect();
        let neg: Vec<usize> = (0..j)
            .filter(|&i| mask >> i & 1 == 0)
            .map(|i| ls[i])
            .collect();
        let kp_range = if pos.is_empty() { 0..=0 } else { pos.len()..=d };
        for kp in kp_range {
            let kq = kp as i64 - mode;
            if kq < neg.len() as i64 || (neg.is_empty() && kq != 0) {
                continue;
            }
            // annihilators: a > 0 contributes (-a)^l · a ∂/∂q_a
            let mut lowered: Vec<(Vec<usize>, BigRational)> = Vec::new();
            for comp in compositions(kp, pos.len()) {
                let mut parts = mono.parts().to_vec();
                let mut w = rat(1, 1);
                for (&a, &l) in comp.iter().zip(&pos) {
                    let Some(idx) = parts.iter().position(|&p| p == a) else {
                        w = rat(0, 1);
                        break;
                    };
                    let count = parts.iter().filter(|&&p| p == a).count();
                    parts.remove(idx);
                    w *= signed_pow(-(a as i64), l) * BigInt::from(a) * BigInt::from(count);
                }
                if !w.is_zero() {
                    lowered.push((parts, w));
                }
            }
            if lowered.is_empty() {
                continue;
            }
            // creators: a = -b < 0 contributes b^l q_b
            for comp in compositions(kq as usize, neg.len()) {
                let w: BigRational = comp
                    .iter()
                    .zip(&neg)
                    .map(|(&b, &l)| signed_pow(b as i64, l))
                    .product();
                for (parts, x) in &lowered {
                    let mut p = parts.clone();
                    p.extend_from_slice(&comp);
                    out.add_term(Partition::from_unsorted(p), &w * x);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    #[test]
    fn parse_and_render() {
        let d: DiffPoly = "1/4 u^4 - 1/4 u1^2 - 1/8 u^2".parse().unwrap();
        assert_eq!(d.terms().len(), 3);
        assert_eq!(d.terms()[1], (Poly::constant(rat(-1, 4)), vec![1, 1]));
        let e: DiffPoly = "3/8*b^2*u^2 + b u u2 - 2".parse().unwrap();
        assert_eq!(e.terms()[1].1, vec![0, 2]);
        assert_eq!(e.terms()[2], (Poly::constant(rat(-2, 1)), vec![]));
        for bad in ["", "u^", "2 x", "u + + u", "1/0 u"] {
            assert!(
                matches!(bad.parse::<DiffPoly>(), Err(Error::Domain(_))),
                "{bad:?}"
            );
        }
        let f: DiffPoly = "u - u".parse().unwrap();
        assert!(f.terms().is_empty());
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(5, 2).len(), 4);
        assert_eq!(compositions(6, 3).len(), 10);
        assert!(compositions(2, 3).is_empty());
        assert_eq!(compositions(0, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn single_modes() {
        let u = DiffPoly::new().plus(PolyQ::one(), &[0]);
        let q1 = FockVector::monomial(part(&[1]), PolyQ::one());
        // J_{-2} q_1 = q_2 q_1, J_1 q_1 = 1, J_0 = 0
        assert_eq!(
            ModeOp::new(u.clone(), -2).apply(&q1),
            FockVector::monomial(part(&[2, 1]), PolyQ::one())
        );
        assert_eq!(
            ModeOp::new(u.clone(), 1).apply(&q1),
            FockVector::constant(PolyQ::one())
        );
        assert!(ModeOp::residue(u).apply(&q1).is_zero());
        // u_1 at z^{-2} on q_2² is (-2)·2·2 q_2 = -8 q_2
        let u1 = DiffPoly::new().plus(PolyQ::one(), &[1]);
        let v = FockVector::monomial(part(&[2, 2]), PolyQ::one());
        assert_eq!(
            ModeOp::new(u1, 2).apply(&v),
            FockVector::monomial(part(&[2]), PolyQ::constant(rat(-8, 1)))
        );
    }
}
