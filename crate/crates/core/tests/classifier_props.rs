use proptest::prelude::*;

use solfour::classifier::{self, ConstraintViolation};
use solfour::gl2z::{self, ElementOrder};
use solfour::{Error, IntMatrix};

/// Products of elementary generators of GL(2,Z).
fn gl2() -> impl Strategy<Value = IntMatrix> {
    let gens = [
        [[1, 1], [0, 1]],
        [[1, -1], [0, 1]],
        [[1, 0], [1, 1]],
        [[1, 0], [-1, 1]],
        [[0, 1], [1, 0]],
        [[-1, 0], [0, 1]],
    ];
    prop::collection::vec(0usize..gens.len(), 0..6).prop_map(move |idx| {
        idx.iter()
            .fold(IntMatrix::identity(2), |acc, &i| &acc * &IntMatrix::from_2x2(gens[i]))
    })
}

fn gl3() -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 0..6).prop_map(|ops| {
        let mut m = IntMatrix::identity(3);
        for (i, j, k) in ops {
            let mut e = IntMatrix::identity(3);
            if i != j {
                e[(i, j)] = k.into();
            } else if k < 0 {
                e[(i, i)] = (-1).into();
            }
            m = &m * &e;
        }
        m
    })
}

fn invariant_index() -> impl Strategy<Value = usize> {
    0usize..classifier::enumerate(20).len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalize_ignores_inversion(i in invariant_index()) {
        let inv = &classifier::enumerate(20)[i];
        prop_assert_eq!(&classifier::normalize(&inv.inverse_matrix()).unwrap(), inv);
        prop_assert_eq!(&classifier::validate(&inv.matrix()).unwrap(), inv);
        prop_assert!(classifier::isomorphic_matrices(&inv.matrix(), &inv.inverse_matrix()).unwrap());
    }

    #[test]
    fn validate_accepts_exactly_the_constraints(p in -9i64..=9, q in -9i64..=9, r in -9i64..=9, s in -9i64..=9) {
        let m = IntMatrix::from_2x2([[p, q], [r, s]]);
        let ok = p == s && p % 2 != 0 && p.abs() > 1 && q % 2 == 0 && r % 2 == 0 && q > 0 && p * p - q * r == 1;
        match classifier::validate(&m) {
            Ok(_) => prop_assert!(ok),
            Err(Error::Constraint(_)) => prop_assert!(!ok),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn invariant_survives_basis_change(i in invariant_index(), c in gl3()) {
        let inv = &classifier::enumerate(20)[i];
        let (_, g) = classifier::presentation_from_invariant(inv).unwrap();
        let h = g.conjugated_by(&c).unwrap();
        let got = classifier::from_extension(h.action(0), h.action(1), h.square_of(0).unwrap(), h.square_of(1).unwrap());
        prop_assert_eq!(&got.unwrap(), inv);
    }

    #[test]
    fn exchanging_the_involutions_gives_the_swap_partner(i in invariant_index()) {
        let inv = &classifier::enumerate(20)[i];
        let (_, g) = classifier::presentation_from_invariant(inv).unwrap();
        let got = classifier::from_extension(g.action(1), g.action(0), g.square_of(1).unwrap(), g.square_of(0).unwrap());
        let partner = classifier::swap_partner(inv);
        prop_assert_eq!(&got.unwrap(), &partner);
        prop_assert_eq!(&classifier::swap_partner(&partner), inv);
        let h1 = |x| classifier::homology_report(x).unwrap().h1;
        prop_assert_eq!(h1(inv), h1(&partner));
    }

    #[test]
    fn order_and_class_are_conjugation_invariant(m in gl2(), c in gl2()) {
        let n = &(&c * &m) * &c.inverse().unwrap();
        let order = gl2z::element_order(&m).unwrap();
        prop_assert_eq!(gl2z::element_order(&n).unwrap(), order);
        if order.is_finite() {
            prop_assert_eq!(gl2z::finite_order_class(&m).unwrap(), gl2z::finite_order_class(&n).unwrap());
        }
    }

    #[test]
    fn conjugator_found_is_a_conjugator(m in gl2(), c in gl2()) {
        let n = &(&c * &m) * &c.inverse().unwrap();
        if let Some(k) = gl2z::conjugate_in_gl2z(&m, &n, 4).unwrap() {
            prop_assert_eq!(&(&k * &m) * &k.inverse().unwrap(), n);
        }
    }

    #[test]
    fn two_ended_typing_is_conjugation_invariant(c in gl2()) {
        let a = IntMatrix::from_2x2([[3, 2], [-4, -3]]);
        let d = IntMatrix::from_2x2([[1, 0], [0, -1]]);
        let ci = c.inverse().unwrap();
        let conj = |m: &IntMatrix| &(&c * m) * &ci;
        let before = gl2z::two_ended_type(&[a.clone(), d.clone()]).unwrap();
        let after = gl2z::two_ended_type(&[conj(&a), conj(&d)]).unwrap();
        prop_assert_eq!(before.case, 3);
        prop_assert_eq!(after.case, 3);
        prop_assert_eq!(after.has_minus_identity, before.has_minus_identity);
    }
}

#[test]
fn hyperbolic_products_have_infinite_order() {
    for inv in classifier::enumerate(12) {
        assert_eq!(gl2z::element_order(&inv.matrix()).unwrap(), ElementOrder::Infinite);
    }
}

#[test]
fn known_swap_partners() {
    let inv = |p: i64, q: i64, r: i64| classifier::validate(&IntMatrix::from_2x2([[p, q], [r, p]])).unwrap();
    assert_eq!(classifier::swap_partner(&inv(3, 2, 4)), inv(3, 4, 2));
    assert_eq!(classifier::swap_partner(&inv(7, 6, 8)), inv(7, 24, 2));
    assert_eq!(classifier::swap_partner(&inv(-3, 2, 4)), inv(-3, 2, 4));
    assert!(!classifier::isomorphic(&inv(3, 2, 4), &inv(3, 4, 2)));
}

#[test]
fn constraint_codes_are_specific() {
    let code = |s: &str| match classifier::validate(&s.parse().unwrap()) {
        Err(Error::Constraint(v)) => v.code(),
        other => panic!("{s}: {other:?}"),
    };
    assert_eq!(code("2,1;3,2"), "even-p");
    assert_eq!(code("3,2;4,5"), "distinct-diagonal");
    assert_eq!(code("1,0;0,1"), "not-hyperbolic");
    assert_eq!(code("3,1;8,3"), "odd-off-diagonal");
    assert_eq!(code("3,2;2,3"), "determinant");
    assert_eq!(code("3,-2;-4,3"), "non-positive-q");
    assert!(matches!(
        classifier::validate(&IntMatrix::identity(3)),
        Err(Error::Constraint(ConstraintViolation::NotTwoByTwo))
    ));
}
