//! Property tests for the kernel rings: exact ring axioms at small orders,
//! including the noncommutative (matrix-coefficient) case, plus the
//! homomorphism and inversion laws the rest of the crate leans on.

use proptest::prelude::*;

use paraq::bitheta::BiTheta;
use paraq::matrix::Matrix;
use paraq::rational::Rational;
use paraq::ring::Ring;
use paraq::theta::{ts_to_matrix, ThetaSeries};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(p, q)| Rational::new(p, q))
}

fn series(order: usize) -> impl Strategy<Value = ThetaSeries<Rational>> {
    proptest::collection::vec(rational(), order + 1).prop_map(ThetaSeries::from_coeffs)
}

fn series_any_order() -> impl Strategy<Value = ThetaSeries<Rational>> {
    (0usize..=5).prop_flat_map(series)
}

fn matrix2() -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(rational(), 4).prop_map(|v| {
        Matrix::from_rows(vec![
            vec![v[0].clone(), v[1].clone()],
            vec![v[2].clone(), v[3].clone()],
        ])
    })
}

fn matrix_series(order: usize) -> impl Strategy<Value = ThetaSeries<Matrix<Rational>>> {
    proptest::collection::vec(matrix2(), order + 1).prop_map(ThetaSeries::from_coeffs)
}

fn rep_matrix(order: usize) -> impl Strategy<Value = Matrix<ThetaSeries<Rational>>> {
    proptest::collection::vec(series(order), 4).prop_map(|v| {
        Matrix::from_rows(vec![
            vec![v[0].clone(), v[1].clone()],
            vec![v[2].clone(), v[3].clone()],
        ])
    })
}

fn bitheta(r1: usize, r2: usize) -> impl Strategy<Value = BiTheta<Rational>> {
    proptest::collection::vec(rational(), (r1 + 1) * (r2 + 1)).prop_map(move |v| {
        let mut out = BiTheta::constant(Rational::zero(), r1, r2);
        let mut it = v.into_iter();
        for a in 0..=r1 {
            for b in 0..=r2 {
                *out.coeff_mut(a, b) = it.next().unwrap();
            }
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theta_ring_axioms((a, b, c) in (0usize..=5).prop_flat_map(|r| (series(r), series(r), series(r)))) {
        let assoc_l = (a.clone() * b.clone()) * c.clone();
        let assoc_r = a.clone() * (b.clone() * c.clone());
        prop_assert_eq!(assoc_l, assoc_r);
        let dist_l = a.clone() * (b.clone() + c.clone());
        let dist_r = a.clone() * b.clone() + a.clone() * c.clone();
        prop_assert_eq!(dist_l, dist_r);
        let dist_l2 = (a.clone() + b.clone()) * c.clone();
        let dist_r2 = a.clone() * c.clone() + b * c.clone();
        prop_assert_eq!(dist_l2, dist_r2);
        // commutative coefficients make the series ring commutative
        prop_assert_eq!(a.clone() * c.clone(), c * a);
    }

    #[test]
    fn theta_ring_axioms_noncommutative_coefficients(
        (a, b, c) in (0usize..=3).prop_flat_map(|r| (matrix_series(r), matrix_series(r), matrix_series(r)))
    ) {
        let assoc_l = (a.clone() * b.clone()) * c.clone();
        let assoc_r = a.clone() * (b.clone() * c.clone());
        prop_assert_eq!(assoc_l, assoc_r);
        let dist_l = a.clone() * (b.clone() + c.clone());
        let dist_r = a.clone() * b.clone() + a * c;
        prop_assert_eq!(dist_l, dist_r);
    }

    #[test]
    fn bitheta_ring_axioms(
        (a, b, c) in (0usize..=3, 0usize..=3).prop_flat_map(|(r1, r2)| {
            (bitheta(r1, r2), bitheta(r1, r2), bitheta(r1, r2))
        })
    ) {
        let assoc_l = (a.clone() * b.clone()) * c.clone();
        let assoc_r = a.clone() * (b.clone() * c.clone());
        prop_assert_eq!(assoc_l, assoc_r);
        let dist_l = a.clone() * (b.clone() + c.clone());
        let dist_r = a.clone() * b.clone() + a * c;
        prop_assert_eq!(dist_l, dist_r);
    }

    #[test]
    fn exp_is_additive_on_commuting_arguments((a, b, r) in (rational(), rational(), 0usize..=5)) {
        let lhs = ThetaSeries::exp(&a, r) * ThetaSeries::exp(&b, r);
        let rhs = ThetaSeries::exp(&(&a + &b), r);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inversion_is_exact(s in series_any_order(), unit in (-20i64..=20).prop_filter("nonzero", |p| *p != 0)) {
        // force a unit constant term
        let order = s.order();
        let mut coeffs: Vec<Rational> = s.coeffs().to_vec();
        coeffs[0] = Rational::new(unit, 1);
        let s = ThetaSeries::from_coeffs(coeffs);
        let inv = s.invert().unwrap();
        prop_assert_eq!(inv.clone() * s.clone(), s.one_like());
        prop_assert_eq!(s.clone() * inv, s.one_like());
        let _ = order;
    }

    #[test]
    fn nonunits_are_rejected(s in series_any_order()) {
        let mut coeffs: Vec<Rational> = s.coeffs().to_vec();
        coeffs[0] = Rational::zero();
        let s = ThetaSeries::from_coeffs(coeffs);
        prop_assert!(s.invert().is_err());
    }

    #[test]
    fn shift_matrix_realization_is_a_ring_homomorphism(
        (a, b) in (0usize..=5).prop_flat_map(|r| (series(r), series(r)))
    ) {
        prop_assert_eq!(
            ts_to_matrix(&a.try_mul(&b).unwrap()),
            ts_to_matrix(&a) * ts_to_matrix(&b)
        );
        prop_assert_eq!(
            ts_to_matrix(&(a.clone() + b.clone())),
            ts_to_matrix(&a) + ts_to_matrix(&b)
        );
        // injectivity on distinct inputs
        if a != b {
            prop_assert_ne!(ts_to_matrix(&a), ts_to_matrix(&b));
        }
    }

    #[test]
    fn bar_tensor_is_factor_wise(
        (a, b, c, d) in (0usize..=3).prop_flat_map(|r| {
            (rep_matrix(r), rep_matrix(r), rep_matrix(r), rep_matrix(r))
        })
    ) {
        // (a ⊗̄ b)(c ⊗̄ d) = ac ⊗̄ bd, both sides evaluated independently
        let lhs = paraq::hopf::bar_tensor(&a, &b).unwrap()
            * paraq::hopf::bar_tensor(&c, &d).unwrap();
        let rhs = paraq::hopf::bar_tensor(&(a * c), &(b * d)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bitheta_exp_inverts_negation(x in (1usize..=3, 1usize..=3).prop_flat_map(|(r1, r2)| bitheta(r1, r2))) {
        // kill the constant term so the exponential is defined; x commutes
        // with -x, so the exponentials must cancel exactly
        let mut x = x;
        *x.coeff_mut(0, 0) = Rational::zero();
        let e = x.clone().exp().unwrap();
        let e_neg = (-x).exp().unwrap();
        prop_assert_eq!(e.clone() * e_neg, e.one_like());
    }
}
