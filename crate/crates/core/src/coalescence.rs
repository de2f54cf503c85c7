//! Reduction of triples `(β, λ, μ)`: when the constant term of `Φ_{λ,μ}`
//! vanishes at β, the Wronskian factors as a power of `y` times a smaller one.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exactalg::eval_b;
use crate::par::{self, Exec};
use crate::partitions::{partitions_of, Cell, Partition};
use crate::wronskian::constant_term_hooks;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub beta: BigRational,
    pub lambda: Partition,
    pub mu: Partition,
}

impl Triple {
    pub fn new(beta: BigRational, lambda: Partition, mu: Partition) -> Self {
        Triple { beta, lambda, mu }
    }

    pub fn integer(beta: i64, lambda: Partition, mu: Partition) -> Self {
        Triple::new(BigRational::from_integer(BigInt::from(beta)), lambda, mu)
    }

    pub fn size(&self) -> usize {
        self.lambda.size() + self.mu.size()
    }

    fn integer_beta(&self) -> Option<i64> {
        if self.beta.is_integer() {
            self.beta.to_integer().to_i64()
        } else {
            None
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, [{}], [{}])", self.beta, self.lambda, self.mu)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub cell: Cell,
    pub target: Triple,
}

pub fn is_reduced(t: &Triple) -> bool {
    !eval_b(&constant_term_hooks(&t.lambda, &t.mu), &t.beta).is_zero()
}

/// Outgoing arrows from `t`, one per odd-hook cell whose root equals β.
pub fn coalescence_edges(t: &Triple) -> Vec<Edge> {
    let Some(beta) = t.integer_beta() else {
        return Vec::new();
    };
    let big = Partition::from_core_quotient(0, &t.lambda, &t.mu);
    big.odd_hook_cells()
        .into_iter()
        .filter(|oh| -(1 + oh.sign as i64 * oh.hook as i64) / 2 == beta)
        .map(|oh| {
            let smaller = big
                .remove_border_strip(oh.cell)
                .expect("odd-hook cells lie inside the diagram");
            let cq = smaller.two_core_quotient();
            let shifted = if beta >= 0 { beta + 2 } else { beta - 2 };
            Edge {
                cell: oh.cell,
                target: Triple::integer(shifted, cq.lambda, cq.mu),
            }
        })
        .collect()
}

/// Follows edges to the reduced representative; returns it together with the
/// exponent `e` in `Φ_{λ,μ}^{(β)} = y^e Φ_{λ̃,μ̃}^{(β̃)}`.
pub fn reduce(t: &Triple) -> (Triple, usize) {
    let mut cur = t.clone();
    while let Some(edge) = coalescence_edges(&cur).into_iter().next() {
        cur = edge.target;
    }
    let e = t.size() - cur.size();
    (cur, e)
}

/// Integer roots of the constant term of `Φ_{λ,λ'}` over all `λ ⊢ n`, found
/// by evaluating at every integer that could be a root.
pub fn b_set(n: usize) -> BTreeSet<i64> {
    b_set_with(Exec::default(), n)
}

pub fn b_set_with(exec: Exec, n: usize) -> BTreeSet<i64> {
    let parts: Vec<Partition> = partitions_of(n).collect();
    // roots are (-1 ± h)/2 with h below 4n
    let bound = 2 * n as i64 + 1;
    par::map(exec, &parts, |l| {
        let c = constant_term_hooks(l, &l.conjugate());
        (-bound..=bound)
            .filter(|&b| c.eval(&BigInt::from(b)).is_zero())
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Odd integers up to `2n - 1` in absolute value and even ones up to `n - 2`.
pub fn c_set(n: usize) -> BTreeSet<i64> {
    let n = n as i64;
    let odd = (-(2 * n - 1)..=2 * n - 1).filter(|b| b.rem_euclid(2) == 1);
    let even = (-(n - 2)..=n - 2).filter(|b| b.rem_euclid(2) == 0);
    odd.chain(even).collect()
}

/// `β² + 4e = β̃²` for a single edge with `e = |β| + 1`: the Schrödinger
/// potentials built from source and target agree.
pub fn potential_matches(source: &Triple, target: &Triple, exponent: usize) -> bool {
    let four_e = BigRational::from_integer(BigInt::from(4 * exponent));
    &source.beta * &source.beta + four_e == &target.beta * &target.beta
        && target.beta.abs() > source.beta.abs()
}
