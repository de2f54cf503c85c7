//! Integer partitions and the combinatorics used throughout: conjugation,
//! hooks, border strips, 2-cores and 2-quotients.
//!
//! Cells are 1-based `(row, column)` pairs. The "beta vector" of a partition
//! padded to length `L` is `Λ + δ_L` with `δ_L = (L-1, …, 1, 0)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub fn new(i: usize, j: usize) -> Self {
        Cell { i, j }
    }
}

/// A cell with odd hook length, together with its row sign `(-1)^(Λ_i - i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OddHook {
    pub cell: Cell,
    pub hook: usize,
    pub sign: i8,
}

/// 2-core (the staircase `(c, c-1, …, 1)`) and ordered 2-quotient of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreQuotient {
    pub c: usize,
    pub lambda: Partition,
    pub mu: Partition,
    /// Parity of the number of vertical dominoes removed to reach the core.
    pub v_odd: bool,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Domain(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The staircase `(c, c-1, …, 1)`.
    pub fn staircase(c: usize) -> Self {
        Partition {
            parts: (1..=c).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `Λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|k| self.parts.iter().take_while(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.i >= 1 && c.j >= 1 && c.j <= self.part(c.i)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |j| Cell::new(r + 1, j)))
    }

    fn check_cell(&self, c: Cell) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::InvalidCell {
                partition: self.to_string(),
                i: c.i,
                j: c.j,
            })
        }
    }

    pub fn hook_length(&self, c: Cell) -> Result<usize> {
        self.check_cell(c)?;
        let conj = self.conjugate();
        Ok(self.hook_unchecked(&conj, c))
    }

    fn hook_unchecked(&self, conj: &Partition, c: Cell) -> usize {
        self.part(c.i) + conj.part(c.j) + 1 - c.i - c.j
    }

    /// All hook lengths, row-major.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| self.hook_unchecked(&conj, c))
            .collect()
    }

    pub fn odd_hook_cells(&self) -> Vec<OddHook> {
        let conj = self.conjugate();
        self.cells()
            .filter_map(|c| {
                let hook = self.hook_unchecked(&conj, c);
                if hook.is_multiple_of(2) {
                    return None;
                }
                let sign = if (self.part(c.i) + c.i).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                Some(OddHook {
                    cell: c,
                    hook,
                    sign,
                })
            })
            .collect()
    }

    /// `Λ + δ_L` as a strictly decreasing vector; `len` must be at least `ℓ(Λ)`.
    pub fn beta_vector(&self, len: usize) -> Vec<i64> {
        assert!(len >= self.len(), "padding shorter than the partition");
        (1..=len).map(|i| (self.part(i) + len - i) as i64).collect()
    }

    /// Inverse of [`Partition::beta_vector`]; `n` must consist of distinct nonnegative entries.
    pub fn from_beta_vector(n: &[i64]) -> Result<Partition> {
        let mut sorted = n.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.last().is_some_and(|&x| x < 0) {
            return Err(Error::Domain(format!("{n:?} is not a beta vector")));
        }
        let len = sorted.len() as i64;
        let parts = sorted
            .iter()
            .enumerate()
            .map(|(k, &x)| (x - (len - 1 - k as i64)) as usize)
            .collect();
        Partition::new(parts)
    }

    /// Removes the border strip attached to `c`: subtract the hook from the
    /// matching entry of the beta vector and re-sort.
    pub fn remove_border_strip(&self, c: Cell) -> Result<Partition> {
        let h = self.hook_length(c)? as i64;
        let mut n = self.beta_vector(self.len());
        n[c.i - 1] -= h;
        Partition::from_beta_vector(&n)
    }

    pub fn two_core_quotient(&self) -> CoreQuotient {
        let width = self.len().max(self.part(1));
        self.core_quotient_padded(2 * width.div_ceil(2) + 2)
    }

    /// 2-core/2-quotient read off a beta vector of the given even length.
    pub fn core_quotient_padded(&self, len: usize) -> CoreQuotient {
        assert!(
            len.is_multiple_of(2) && len >= self.len(),
            "padding must be even and long enough"
        );
        let n = self.beta_vector(len);
        let evens: Vec<i64> = n.iter().filter(|&&x| x % 2 == 0).map(|&x| x / 2).collect();
        let odds: Vec<i64> = n
            .iter()
            .filter(|&&x| x % 2 == 1)
            .map(|&x| (x - 1) / 2)
            .collect();
        let (r, s) = (evens.len(), odds.len());
        let lambda = unshift(&evens);
        let mu = unshift(&odds);
        let c = if r > s { r - s - 1 } else { s - r };

        // sign of the permutation sorting (2n+1, 2m) into N
        let v: Vec<i64> = odds
            .iter()
            .map(|&x| 2 * x + 1)
            .chain(evens.iter().map(|&x| 2 * x))
            .collect();
        let inversions: usize = (0..v.len())
            .map(|a| (a + 1..v.len()).filter(|&b| v[a] < v[b]).count())
            .sum();
        let twist = if r > s {
            s * (s + 1) / 2 + s * r
        } else {
            r * (r.saturating_sub(1)) / 2
        };
        CoreQuotient {
            c,
            lambda,
            mu,
            v_odd: (inversions + twist) % 2 == 1,
        }
    }

    /// The unique partition with 2-core `(c, …, 1)` and 2-quotient `(λ, μ)`.
    pub fn from_core_quotient(c: usize, lambda: &Partition, mu: &Partition) -> Partition {
        let (r, s) = if c.is_multiple_of(2) {
            let r = lambda.len().max(mu.len().saturating_sub(c));
            (r, r + c)
        } else {
            let s = mu.len().max(lambda.len().saturating_sub(c + 1));
            (s + c + 1, s)
        };
        let n: Vec<i64> = lambda
            .beta_vector(r)
            .into_iter()
            .map(|x| 2 * x)
            .chain(mu.beta_vector(s).into_iter().map(|x| 2 * x + 1))
            .collect();
        Partition::from_beta_vector(&n).expect("even and odd entries are distinct")
    }
}

fn unshift(strict: &[i64]) -> Partition {
    let len = strict.len() as i64;
    let parts = strict
        .iter()
        .enumerate()
        .map(|(k, &x)| (x - (len - 1 - k as i64)) as usize)
        .collect();
    Partition::new(parts).expect("strictly decreasing input")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parse_err = || Error::Parse {
            what: "partition",
            input: s.to_string(),
        };
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| parse_err()))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| parse_err())
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Shorthand for literal partitions in code and tests; panics on bad input.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

/// Partitions of `n` in reverse-lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> PartitionsOf {
    PartitionsOf {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct PartitionsOf {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        // successor: lower the last part exceeding 1, refill greedily below it
        if let Some(k) = cur.iter().rposition(|&p| p > 1) {
            let mut nxt = cur[..k].to_vec();
            let v = cur[k] - 1;
            let mut rest = cur[k..].iter().sum::<usize>();
            while rest > 0 {
                let take = v.min(rest);
                nxt.push(take);
                rest -= take;
            }
            self.next = Some(nxt);
        }
        Some(Partition { parts: cur })
    }
}

/// All partitions of size at most `n`, by size then reverse-lex.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Ordered pairs `(λ, μ)` with `|λ| + |μ| = n`, deterministic order.
pub fn pairs_of(n: usize) -> Vec<(Partition, Partition)> {
    (0..=n)
        .flat_map(|a| {
            let mus: Vec<Partition> = partitions_of(n - a).collect();
            partitions_of(a).flat_map(move |l| mus.clone().into_iter().map(move |m| (l.clone(), m)))
        })
        .collect()
}

pub fn pairs_up_to(n: usize) -> Vec<(Partition, Partition)> {
    (0..=n).flat_map(pairs_of).collect()
}

pub fn is_self_conjugate(p: &Partition) -> bool {
    *p == p.conjugate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Euler's pentagonal recurrence, independent of the enumerator.
    fn partition_count(n: usize) -> usize {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p[n] as usize
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part(&[4, 3, 1, 1]).conjugate(), part(&[4, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part(&[1, 1, 1, 1, 1]).conjugate(), part(&[5]));
    }

    #[test]
    fn hook_examples() {
        let l = part(&[4, 3, 1, 1]);
        assert_eq!(l.hook_length(Cell::new(1, 1)).unwrap(), 7);
        assert_eq!(l.hook_length(Cell::new(1, 2)).unwrap(), 4);
        assert_eq!(part(&[1]).hook_length(Cell::new(1, 1)).unwrap(), 1);
        assert!(l.hook_length(Cell::new(2, 4)).is_err());
        assert_eq!(l.hooks().iter().filter(|&&h| h == 4).count(), 1);
    }

    #[test]
    fn odd_hooks_of_5511() {
        let cells = part(&[5, 5, 1, 1]).odd_hook_cells();
        let mut hooks: Vec<usize> = cells.iter().map(|c| c.hook).collect();
        hooks.sort_unstable();
        assert_eq!(hooks, vec![1, 1, 3, 3, 5, 7]);
        for c in &cells {
            let expect = match c.cell.i {
                1 => 1,
                2 | 4 => -1,
                _ => unreachable!(),
            };
            assert_eq!(c.sign, expect);
        }
        assert!(Partition::empty().odd_hook_cells().is_empty());
        let two = part(&[2, 2]).odd_hook_cells();
        assert_eq!(
            two,
            vec![
                OddHook {
                    cell: Cell::new(1, 1),
                    hook: 3,
                    sign: -1
                },
                OddHook {
                    cell: Cell::new(2, 2),
                    hook: 1,
                    sign: 1
                }
            ]
        );
    }

    #[test]
    fn border_strips() {
        assert_eq!(
            part(&[4, 3, 1, 1])
                .remove_border_strip(Cell::new(1, 2))
                .unwrap(),
            part(&[2, 1, 1, 1])
        );
        assert_eq!(
            part(&[6]).remove_border_strip(Cell::new(1, 1)).unwrap(),
            Partition::empty()
        );
        assert_eq!(
            part(&[2, 2]).remove_border_strip(Cell::new(2, 1)).unwrap(),
            part(&[2])
        );
        assert_eq!(
            part(&[5, 5, 1, 1])
                .remove_border_strip(Cell::new(2, 3))
                .unwrap(),
            part(&[5, 2, 1, 1])
        );
    }

    #[test]
    fn core_quotient_examples() {
        let cq = part(&[4, 3, 1, 1]).two_core_quotient();
        assert_eq!(
            (cq.c, cq.lambda, cq.mu, cq.v_odd),
            (2, part(&[1]), part(&[1, 1]), true)
        );
        let cq = part(&[5, 5, 1, 1]).two_core_quotient();
        assert_eq!((cq.c, cq.lambda, cq.mu), (0, part(&[3, 1]), part(&[2])));
        let cq = Partition::empty().two_core_quotient();
        assert_eq!(
            (cq.c, cq.lambda, cq.mu, cq.v_odd),
            (0, Partition::empty(), Partition::empty(), false)
        );
    }

    #[test]
    fn reconstruction_examples() {
        assert_eq!(
            Partition::from_core_quotient(0, &part(&[3, 1]), &part(&[2])),
            part(&[5, 5, 1, 1])
        );
        assert_eq!(
            Partition::from_core_quotient(0, &Partition::empty(), &Partition::empty()),
            Partition::empty()
        );
        assert_eq!(
            Partition::from_core_quotient(2, &part(&[1]), &part(&[1, 1])),
            part(&[4, 3, 1, 1])
        );
    }

    #[test]
    fn enumeration() {
        assert_eq!(
            partitions_of(0).collect::<Vec<_>>(),
            vec![Partition::empty()]
        );
        let four: Vec<String> = partitions_of(4).map(|p| p.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        for n in 0..=16 {
            assert_eq!(partitions_of(n).count(), partition_count(n), "n = {n}");
        }
        assert_eq!(partitions_of(10).count(), 42);
    }

    #[test]
    fn exhaustive_invariants_up_to_12() {
        for lam in partitions_up_to(12) {
            let conj = lam.conjugate();
            assert_eq!(conj.conjugate(), lam);
            assert_eq!(conj.size(), lam.size());

            let mut h1 = lam.hooks();
            let mut h2 = conj.hooks();
            h1.sort_unstable();
            h2.sort_unstable();
            assert_eq!(h1, h2);

            for c in lam.cells() {
                let h = lam.hook_length(c).unwrap();
                assert_eq!(lam.remove_border_strip(c).unwrap().size(), lam.size() - h);
            }

            let cq = lam.two_core_quotient();
            assert_eq!(
                lam.size(),
                cq.c * (cq.c + 1) / 2 + 2 * (cq.lambda.size() + cq.mu.size())
            );
            assert_eq!(Partition::from_core_quotient(cq.c, &cq.lambda, &cq.mu), lam);

            let len = 2 * lam.len().max(lam.part(1)).div_ceil(2) + 2;
            assert_eq!(lam.core_quotient_padded(len + 2), cq);
            if lam.len() % 2 == 0 {
                assert_eq!(lam.core_quotient_padded(lam.len()), cq);
            }
        }
    }

    #[test]
    fn v_parity_counts_vertical_dominoes() {
        // Oracle: peel dominoes greedily from the beta vector and count the
        // vertical ones (those whose removal swaps two entries).
        fn vertical_count(lam: &Partition) -> usize {
            let len = 2 * lam.len().div_ceil(2) + 2;
            let mut n = lam.beta_vector(len);
            let mut vertical = 0;
            while let Some(k) = (0..n.len()).find(|&k| n[k] >= 2 && !n.contains(&(n[k] - 2))) {
                if n.contains(&(n[k] - 1)) {
                    vertical += 1;
                }
                n[k] -= 2;
            }
            vertical
        }
        for lam in partitions_up_to(10) {
            let cq = lam.two_core_quotient();
            if cq.lambda.is_empty() && cq.mu.is_empty() {
                continue;
            }
            let v = vertical_count(&lam);
            assert_eq!(cq.v_odd, v % 2 == 1, "{lam}");
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("4,3,1,1".parse::<Partition>().unwrap(), part(&[4, 3, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("1,3".parse::<Partition>().is_err());
        assert_eq!(part(&[4, 3, 1, 1]).to_string(), "4,3,1,1");
    }

    fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..=max, 0..=max).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn conjugation_is_involutive(lam in arb_partition(9)) {
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().size(), lam.size());
        }

        #[test]
        fn strip_removal_drops_the_hook(lam in arb_partition(9), pick in 0usize..100) {
            prop_assume!(!lam.is_empty());
            let cells: Vec<Cell> = lam.cells().collect();
            let c = cells[pick % cells.len()];
            let h = lam.hook_length(c).unwrap();
            let rest = lam.remove_border_strip(c).unwrap();
            prop_assert_eq!(rest.size() + h, lam.size());
            // the strip lies inside the diagram
            prop_assert!(rest.cells().all(|x| lam.contains(x)));
        }

        #[test]
        fn core_quotient_round_trip(lam in arb_partition(10)) {
            let cq = lam.two_core_quotient();
            prop_assert_eq!(Partition::from_core_quotient(cq.c, &cq.lambda, &cq.mu), lam);
        }
    }
}
