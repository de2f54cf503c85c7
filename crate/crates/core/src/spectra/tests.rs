use super::*;
use crate::coalescence::c_set;
use crate::exactalg::rat;
use crate::partitions::{is_self_conjugate, part, partitions_up_to};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

fn spec_f64(l: &Partition, side: Side, beta: f64, kmax: usize) -> Vec<f64> {
    let b = BigRational::from_float(beta).unwrap();
    spectrum(l, side, &b, kmax)
        .unwrap()
        .iter()
        .map(|x| x.to_f64().unwrap())
        .collect()
}

#[test]
fn spectrum_examples() {
    let b = rat(3, 10);
    let two_b = &b * BigInt::from(2);
    let empty = spectrum(&Partition::empty(), Side::Plus, &b, 3).unwrap();
    let want: Vec<BigRational> = [2, 6, 10, 14].iter().map(|&k| rat(k, 1) + &two_b).collect();
    assert_eq!(empty, want);
    let one = spectrum(&part(&[1]), Side::Plus, &b, 2).unwrap();
    let want: Vec<BigRational> = [-2, 6, 10].iter().map(|&k| rat(k, 1) + &two_b).collect();
    assert_eq!(one, want);
    for l in partitions_up_to(5) {
        let minus = spectrum(&l, Side::Minus, &b, 6).unwrap();
        let plus = spectrum(&l.conjugate(), Side::Plus, &-b.clone(), 6).unwrap();
        assert_eq!(minus, plus, "[{l}]");
    }
}

#[test]
fn excluded_momenta() {
    let l = part(&[2, 1]);
    assert!(matches!(
        spectrum(&l, Side::Plus, &rat(-2, 1), 3),
        Err(Error::MomentumExcluded(_))
    ));
    assert!(matches!(
        spectrum(&l, Side::Minus, &rat(3, 1), 3),
        Err(Error::MomentumExcluded(_))
    ));
    assert!(spectrum(&l, Side::Plus, &rat(2, 1), 3).is_ok());
    assert!(spectrum(&l, Side::Minus, &rat(0, 1), 3).is_ok());
    assert!(q_eval(&l, Side::Plus, c(1.0, 0.0), -1.0).is_err());
    assert!(matches!(
        qq_residual(&l, 2.0, c(1.0, 0.0)),
        Err(Error::MomentumExcluded(_))
    ));
}

#[test]
fn harmonic_values() {
    let e = Partition::empty();
    for &(beta, re, im) in &[(0.3, 1.7, 0.0), (-0.45, -3.2, 1.1), (1.6, 0.4, -2.0)] {
        let en = c(re, im);
        for side in [Side::Plus, Side::Minus] {
            let s = side.sign();
            let want =
                gamma(c(1.0 + s * beta, 0.0)) / gamma((c(2.0 + 2.0 * s * beta, 0.0) - en) / 4.0);
            let got = q_eval(&e, side, en, beta).unwrap().value();
            assert!(rel(got, want) < 1e-12, "{side:?} {beta} {en}");
        }
    }
    // the denominator argument becomes 1; Γ(1.3) by independent tabulation
    let v = q_eval(&e, Side::Plus, c(2.0 + 0.6 - 4.0, 0.0), 0.3).unwrap();
    assert!((v.re - 0.897_470_696_306_277_2).abs() < 1e-13);
    assert_eq!(v.flag, SpectralFlag::Finite);
}

#[test]
fn zeros_sit_on_the_spectrum() {
    let l = part(&[2, 1]);
    for e in spec_f64(&l, Side::Plus, 0.3, 8) {
        let v = q_eval(&l, Side::Plus, c(e, 0.0), 0.3).unwrap();
        assert!(v.value().norm() < 1e-10, "E = {e}");
        assert_eq!(v.flag, SpectralFlag::ZeroOfReciprocal);
    }
}

/// Sign changes of Q on a real grid, refined by bisection, against spectrum().
#[test]
fn real_zeros_match_spectrum() {
    let window = (-30.0, 30.0);
    for &beta in &[0.3, -0.7, 5.0 / 3.0] {
        for l in partitions_up_to(4) {
            for side in [Side::Plus, Side::Minus] {
                let f = |e: f64| q_eval(&l, side, c(e, 0.0), beta).unwrap().re;
                let mut found = Vec::new();
                let step = 0.0137;
                let mut a = window.0;
                while a < window.1 {
                    let b = a + step;
                    let (fa, fb) = (f(a), f(b));
                    if fa == 0.0 {
                        found.push(a);
                    } else if fa * fb < 0.0 {
                        let (mut lo, mut hi) = (a, b);
                        for _ in 0..80 {
                            let mid = 0.5 * (lo + hi);
                            if f(lo) * f(mid) <= 0.0 {
                                hi = mid;
                            } else {
                                lo = mid;
                            }
                        }
                        found.push(0.5 * (lo + hi));
                    }
                    a = b;
                }
                let mut want: Vec<f64> = spec_f64(&l, side, beta, 20)
                    .into_iter()
                    .filter(|&e| e > window.0 && e < window.1)
                    .collect();
                want.sort_by(f64::total_cmp);
                assert_eq!(
                    found.len(),
                    want.len(),
                    "[{l}] {side:?} β={beta}: {found:?} vs {want:?}"
                );
                for (x, y) in found.iter().zip(&want) {
                    assert!((x - y).abs() < 1e-8, "[{l}] {side:?} β={beta}: {x} vs {y}");
                }
            }
        }
    }
}

#[test]
fn stokes_examples() {
    let e = Partition::empty();
    for &(beta, en) in &[(0.37, c(1.3, 0.2)), (0.0, c(-2.0, 1.0))] {
        let want = PI
            * rgamma((c(2.0 + 2.0 * beta, 0.0) - en) / 4.0)
            * rgamma((c(2.0 - 2.0 * beta, 0.0) - en) / 4.0);
        assert!(rel(stokes_t(&e, en, beta).value(), want) < 1e-12);
    }
    // finite through β = 0 and at integer β
    for beta in [-1.0, 0.0, 1e-9, 2.0] {
        let v = stokes_t(&part(&[2, 1]), c(0.7, 0.1), beta);
        assert_eq!(v.flag, SpectralFlag::Finite);
    }
}

#[test]
fn stokes_factorizes_into_q() {
    let beta = 0.37;
    let grid = [c(0.3, 0.0), c(-1.7, 2.2), c(5.1, -0.6), c(11.0, 3.0)];
    for l in partitions_up_to(4) {
        for &en in &grid {
            let qp = q_eval(&l, Side::Plus, en, beta).unwrap().value();
            let qm = q_eval(&l, Side::Minus, en, beta).unwrap().value();
            let rhs = qp * qm * ((PI * beta).sin() / beta);
            assert!(
                rel(stokes_t(&l, en, beta).value(), rhs) < 1e-9,
                "[{l}] {en}"
            );
        }
    }
}

#[test]
fn stokes_conjugation_symmetry() {
    for l in partitions_up_to(5) {
        for &beta in &[0.37, -1.2, 2.0] {
            for en in [c(0.3, 0.4), c(-6.0, 1.0)] {
                let a = stokes_t(&l, en, beta).value();
                let b = stokes_t(&l.conjugate(), en, -beta).value();
                assert!(
                    (a - b).norm() <= 1e-10 * a.norm().max(1.0),
                    "[{l}] β={beta}"
                );
            }
        }
    }
}

#[test]
fn qq_relation_holds() {
    assert!(qq_residual(&Partition::empty(), 0.3, c(1.7, 0.0)).unwrap() < 1e-10);
    let l = part(&[2, 1]);
    for k in 0..9 {
        let en = c(-4.0 + k as f64, 0.5 * (k % 3) as f64);
        let r = qq_residual(&l, 0.3, en).unwrap();
        let scale = (en * (PI / 4.0)).exp().norm();
        assert!(r < 1e-9 * scale.max(1.0), "E={en}: {r}");
    }
    for l in partitions_up_to(4) {
        for &beta in &[0.3, -0.45, 1.7] {
            for en in [c(-1.0, 0.0), c(0.6, 0.2), c(2.5, -1.0)] {
                let r = qq_residual(&l, beta, en).unwrap();
                let scale = (en * (PI / 4.0)).exp().norm();
                assert!(r < 1e-9 * scale.max(1.0), "[{l}] β={beta} E={en}: {r}");
            }
        }
    }
}

/// With constant `i` alone on the right, the relation fails by the factor β.
#[test]
fn qq_constant_is_not_one() {
    let (beta, en) = (0.3, c(1.7, 0.0));
    let lhs = qq_lhs(&Partition::empty(), beta, en).unwrap();
    let bare = Complex64::i() * (en * (PI / 4.0)).exp();
    assert!(rel(lhs / bare, c(beta, 0.0)) < 1e-12);
    assert!((lhs - bare).norm() > 0.1);
    assert_eq!(qq_constant(&part(&[1]), 0.5), 0.5);
    assert_eq!(qq_constant(&part(&[2]), 0.5), -0.5);
}

#[test]
fn blz_counts() {
    let p = |n| partitions_of(n).count();
    for n in 0..=10 {
        assert_eq!(count_blz(n, &rat(1, 2)), p(n), "n = {n}");
        let selfconj = partitions_of(n).filter(is_self_conjugate).count();
        assert_eq!(count_blz(n, &rat(0, 1)), selfconj, "n = {n}");
        for b in -(2 * n as i64 + 2)..=(2 * n as i64 + 2) {
            let full = count_blz(n, &rat(b, 1)) == p(n);
            assert_eq!(full, !c_set(n).contains(&b), "n = {n}, β = {b}");
        }
    }
    for n in 11..=12 {
        let selfconj = partitions_of(n).filter(is_self_conjugate).count();
        assert_eq!(count_blz_with(Exec::Sequential, n, &rat(0, 1)), selfconj);
    }
    // brute force at n = 3, β = 1
    let brute = partitions_of(3)
        .filter(|l| !eval_b(&constant_term_hooks(l, &l.conjugate()), &rat(1, 1)).is_zero())
        .count();
    assert_eq!(count_blz(3, &rat(1, 1)), brute);
}

#[test]
fn critical_sets_coincide() {
    for n in 0..=12 {
        assert_eq!(a_set(n), c_set(n), "n = {n}");
    }
}

#[test]
fn verma_reports() {
    for n in 0..=8 {
        let r = verma_report(n, &rat(1, 2));
        assert!(r.irreducible_in_degree && r.blz_count == r.partitions);
        for b in -8..=8 {
            let r = verma_report(n, &rat(b, 1));
            assert_eq!(r.in_a_n, a_set(n).contains(&b));
            assert!(r.consistent(), "n = {n}, β = {b}: {r:?}");
        }
    }
}
