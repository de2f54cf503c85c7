use num_rational::BigRational;

use super::*;
use crate::exactalg::ff_determinant;
use crate::partitions::part;

fn qv(m: &[usize], p: i64, q: i64) -> FockVector<BigRational> {
    FockVector::monomial(part(m), rat(p, q))
}

#[test]
fn schur_examples() {
    assert_eq!(
        schur_vector(&Partition::empty(), 8).unwrap(),
        FockVector::constant(rat(1, 1))
    );
    assert_eq!(schur_vector(&part(&[1]), 8).unwrap(), qv(&[1], 1, 1));
    let two = schur_vector(&part(&[2]), 8).unwrap();
    assert_eq!(two, qv(&[1, 1], 1, 2).add_ref(&qv(&[2], 1, 2)));
    let eleven = schur_vector(&part(&[1, 1]), 8).unwrap();
    assert_eq!(eleven, qv(&[1, 1], 1, 2).sub_ref(&qv(&[2], 1, 2)));
    assert!(matches!(
        schur_vector(&part(&[3, 2]), 4),
        Err(Error::Domain(_))
    ));
}

/// Change of basis from monomials to Schur functions is invertible per degree.
#[test]
fn schur_basis_is_independent() {
    for n in 0..=8 {
        let basis: Vec<Partition> = partitions_of(n).collect();
        let rows: Vec<Vec<BigRational>> = basis
            .iter()
            .map(|l| {
                let s = schur_vector(l, n).unwrap();
                assert!(s.is_homogeneous(n));
                basis.iter().map(|m| s.coeff(m)).collect()
            })
            .collect();
        assert_eq!(rows.len(), partitions_of(n).count());
        assert!(!ff_determinant(rows).unwrap().is_zero(), "n = {n}");
    }
}

#[test]
fn l0_is_weight_plus_degree() {
    let beta = Beta::Symbolic;
    for l in crate::partitions::partitions_up_to(6) {
        let s = schur_vector_poly(&l, 6).unwrap();
        let want = &beta.weight() + &Poly::constant(rat(l.size() as i64, 1));
        assert_eq!(virasoro_l(0, &beta).apply(&s), s.scale(&want), "[{l}]");
    }
}

#[test]
fn virasoro_relations() {
    let beta = Beta::Symbolic;
    for (m, n) in [(1, -1), (2, -2)] {
        assert!(
            virasoro_check(m, n, &beta, 8).iter().all(|c| c.holds),
            "[L{m}, L{n}]"
        );
    }
    for m in -3..=3 {
        for n in -3..=3 {
            for c in virasoro_check(m, n, &Beta::Value(rat(3, 7)), 8) {
                assert!(c.holds, "[L{m}, L{n}] degree {}", c.degree);
            }
        }
    }
}

/// A wrong central term must be caught.
#[test]
fn virasoro_check_detects_errors() {
    let beta = Beta::Symbolic;
    let l2 = virasoro_l(2, &beta);
    let lm2 = virasoro_l(-2, &beta);
    let v = FockVector::monomial(part(&[1, 1]), PolyQ::one());
    let lhs = l2.apply(&lm2.apply(&v)).sub_ref(&lm2.apply(&l2.apply(&v)));
    let four_l0 = virasoro_l(0, &beta).apply(&v).scale(&c(4, 1));
    assert_eq!(lhs, four_l0.sub_ref(&v));
    assert_ne!(lhs, four_l0);
}

#[test]
fn a_operators_diagonal() {
    // A_1 vanishes identically
    for blk in residue_operator(&a_density(1).unwrap(), 6).unwrap() {
        assert!(blk.is_zero());
    }
    for n in 0..=7 {
        for check in diagonal_check(n).unwrap() {
            assert_eq!(
                check.counterexample, None,
                "{} in degree {n}",
                check.operator
            );
        }
    }
}

#[test]
fn vacuum_eigenvalues() {
    let beta = Beta::Symbolic;
    let one = FockVector::constant(PolyQ::one());
    let h = beta.weight();
    assert_eq!(apply_i(1, &beta, &one).unwrap(), one.scale(&h));
    assert_eq!(apply_i(3, &beta, &one).unwrap(), one.scale(&(&h * &h)));
    assert_eq!(
        apply_i(5, &beta, &one).unwrap(),
        one.scale(&(&(&h * &h) * &h))
    );
    assert!(apply_i(7, &beta, &one).is_err());
}

#[test]
fn hamiltonians_commute() {
    let beta = Beta::Symbolic;
    let ops: Vec<Vec<Block>> = [1, 3, 5]
        .iter()
        .map(|&k| i_operator(k, &beta, 6).unwrap())
        .collect();
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        for (n, (x, y)) in ops[a].iter().zip(&ops[b]).enumerate() {
            assert!(x.commutator(y).is_zero(), "degree {n}");
        }
    }
}

#[test]
fn eigenvalue_reader() {
    let s = schur_vector_poly(&part(&[2, 1]), 3).unwrap();
    let image = apply_i(3, &Beta::Symbolic, &s).unwrap();
    assert_eq!(
        eigenvalue_of(&s, &image),
        Some(qkdv_eigenvalues(&part(&[2, 1])).i3)
    );
    let q1 = FockVector::monomial(part(&[2, 1]), PolyQ::one());
    assert_eq!(
        eigenvalue_of(&q1, &apply_i(3, &Beta::Symbolic, &q1).unwrap()),
        None
    );
}

/// The mode sums agree with the residue of the derived densities, not with
/// the β² coefficients as published, and with the A-polynomials throughout.
#[test]
fn density_identities() {
    let report = hamiltonian_identity_check(&[1, 3], 6).unwrap();
    let five = hamiltonian_identity_check(&[5], 5).unwrap();
    let get = |r: &IdentityReport, k, form| {
        r.checks
            .iter()
            .find(|c| c.k == k && c.form == form)
            .unwrap()
            .clone()
    };
    assert!(get(&report, 1, DensityForm::Printed).holds());
    assert!(get(&report, 1, DensityForm::Derived).holds());
    assert!(get(&report, 3, DensityForm::Derived).holds());
    assert!(get(&five, 5, DensityForm::Derived).holds());
    assert_eq!(
        get(&report, 3, DensityForm::Printed).first_mismatch,
        Some(1)
    );
    assert_eq!(get(&five, 5, DensityForm::Printed).first_mismatch, Some(1));
    assert!(report
        .a_algebra
        .iter()
        .chain(&five.a_algebra)
        .all(|&(_, ok)| ok));
}

/// The published and derived densities differ only by a multiple of `u²`,
/// whose residue is twice the degree operator.
#[test]
fn printed_discrepancy_is_a_beta_squared_number_operator() {
    for (k, diff) in [(3, cb(3, 8, 2)), (5, cb(-9, 64, 2))] {
        let p = hamiltonian_density(k, DensityForm::Printed).unwrap();
        let d = hamiltonian_density(k, DensityForm::Derived).unwrap();
        let delta = p.add(&d.scale(&c(-1, 1)));
        let rest = delta.add(&DiffPoly::new().plus(-diff.clone(), &[0, 0]));
        if k == 3 {
            assert!(rest.terms().is_empty(), "{rest}");
        } else {
            // the u⁴ and u u₂ terms carry the same halving
            assert_eq!(rest.terms().len(), 2, "{rest}");
        }
    }
}

#[test]
fn rational_beta_agrees_with_symbolic() {
    let b = rat(5, 3);
    let sym = i_operator(3, &Beta::Symbolic, 4).unwrap();
    let num = i_operator(3, &Beta::Value(b.clone()), 4).unwrap();
    for (s, v) in sym.iter().zip(&num) {
        for (rs, rv) in s.entries.iter().zip(&v.entries) {
            for (x, y) in rs.iter().zip(rv) {
                assert_eq!(Poly::constant(x.eval(&b)), y.clone());
            }
        }
    }
    let d = hamiltonian_density(3, DensityForm::Derived)
        .unwrap()
        .at(&Beta::Value(b.clone()));
    assert!(d.terms().iter().all(|(a, _)| a.degree().unwrap_or(0) == 0));
}

#[test]
fn exec_modes_agree() {
    let a = i_operator_with(Exec::Sequential, 5, &Beta::Symbolic, 4).unwrap();
    let b = i_operator_with(Exec::Parallel, 5, &Beta::Symbolic, 4).unwrap();
    assert_eq!(a, b);
}
