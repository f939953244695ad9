use kjacobsthal::matrices::{assemble_jacobsthal, jacobsthal_power, lucas_power};
use kjacobsthal::sequences::{jac3_binet, jac3_term, lucas3_term};
use kjacobsthal::{Laurent, Omega, Param, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn positive_k() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=5).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-4i64..=4, rational()), 0..5).prop_map(Laurent::from_terms)
}

fn omega() -> impl Strategy<Value = Omega<Rational>> {
    (rational(), rational()).prop_map(|(a, b)| Omega::new(a, b))
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        prop_assert_eq!(a.clone() - a.clone(), Laurent::zero());
        prop_assert_eq!(a.clone() * Laurent::one(), a);
    }

    #[test]
    fn laurent_division_undoes_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        let product = a.clone() * b.clone();
        prop_assert_eq!(product.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in laurent(), b in laurent(), at in positive_k()) {
        let ea = a.eval(&at).unwrap();
        let eb = b.eval(&at).unwrap();
        prop_assert_eq!((a.clone() * b.clone()).eval(&at).unwrap(), ea.clone() * eb.clone());
        prop_assert_eq!((a + b).eval(&at).unwrap(), ea + eb);
    }

    #[test]
    fn canonical_rendering_round_trips(r in rational()) {
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn root_difference_division(x in omega()) {
        prop_assert_eq!(x.div_root_diff() * Omega::root_diff(), x);
    }

    #[test]
    fn omega_multiplication_commutes(x in omega(), y in omega()) {
        prop_assert_eq!(x.clone() * y.clone(), y * x);
    }

    #[test]
    fn recurrence_matches_binet(k in positive_k(), n in -30i64..=40) {
        let p = Param::new(k).unwrap();
        prop_assert_eq!(jac3_binet(&p, n).unwrap(), jac3_term(&p, n));
    }

    #[test]
    fn matrix_powers_add(k in positive_k(), m in -12i64..=12, n in -12i64..=12) {
        let p = Param::new(k).unwrap();
        let product = jacobsthal_power(&p, m).mul_ref(&jacobsthal_power(&p, n));
        prop_assert_eq!(&product, &jacobsthal_power(&p, m + n));
        prop_assert_eq!(product, assemble_jacobsthal(&p, m + n));
    }

    #[test]
    fn symbolic_terms_specialize(k in positive_k(), n in -8i64..=12) {
        let sym = Param::symbolic();
        let fixed = Param::new(k.clone()).unwrap();
        prop_assert_eq!(jac3_term(&sym, n).eval(&k).unwrap(), jac3_term(&fixed, n));
        prop_assert_eq!(lucas3_term(&sym, n).eval(&k).unwrap(), lucas3_term(&fixed, n));
    }

    #[test]
    fn lucas_matrix_carries_the_lucas_term(k in positive_k(), n in -6i64..=10) {
        let p = Param::new(k).unwrap();
        let j = lucas_power(&p, n);
        prop_assert_eq!(j[(1, 0)].clone(), lucas3_term(&p, n));
        prop_assert!(!j.det().is_zero());
    }
}
