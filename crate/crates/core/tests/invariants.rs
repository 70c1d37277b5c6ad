use kncurves::inversion::{intermediates, is_realizable};
use kncurves::{coordinatize, invert, profile, DynnikovCoordinates, Error};
use proptest::prelude::*;

fn coords() -> impl Strategy<Value = DynnikovCoordinates> {
    (2usize..=5).prop_flat_map(|n| {
        (
            prop::collection::vec(-6i64..=6, n - 1),
            prop::collection::vec(-6i64..=6, n),
            -6i64..=6,
            [0i64..=6, 0i64..=6],
        )
            .prop_map(move |(a, b, t, c)| DynnikovCoordinates::new(n, a, b, t, c))
            .prop_filter("nonzero", |v| !v.is_zero())
    })
}

/// Flips the parity of `t` where needed; `psi` does not depend on `t`.
fn realizable() -> impl Strategy<Value = DynnikovCoordinates> {
    coords()
        .prop_map(|mut v| {
            if !is_realizable(&v).unwrap() {
                v.t += if v.t < 0 { 1 } else { -1 };
            }
            v
        })
        .prop_filter("nonzero", |v| !v.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn realizability_is_the_parity_of_t_and_psi(v in coords()) {
        let psi = intermediates(&v).unwrap().psi;
        let expect = (v.t - psi) % 2 == 0;
        prop_assert_eq!(is_realizable(&v).unwrap(), expect);
        match invert(&v) {
            Ok(_) => prop_assert!(expect),
            Err(Error::Unrealizable(_)) => prop_assert!(!expect),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn round_trips(v in realizable()) {
        let tri = invert(&v).unwrap();
        let back = coordinatize(&tri).unwrap();
        prop_assert_eq!(&back, &v);
        prop_assert_eq!(invert(&back).unwrap(), tri);
    }

    #[test]
    fn triangle_shape_and_profile(v in realizable()) {
        let tri = invert(&v).unwrap();
        prop_assert!(tri.beta.iter().all(|b| b % 2 == 0 && *b >= 0));
        prop_assert!(tri.gamma % 2 == 0);
        for i in 1..v.n {
            prop_assert_eq!((tri.alpha_at(2 * i - 1) - tri.alpha_at(2 * i)) % 2, 0);
        }
        let p = profile(&tri).unwrap();
        p.check().unwrap();
        p.check_conservation().unwrap();
        prop_assert_eq!(p.crosscap1.above - p.crosscap1.below, v.t);
        for i in 1..v.n {
            prop_assert_eq!(p.region(i).above - p.region(i).below, -2 * v.a_at(i));
        }
    }

    #[test]
    fn beta_is_a_shift_of_beta_star(v in realizable()) {
        let im = intermediates(&v).unwrap();
        let tri = invert(&v).unwrap();
        for (b, s) in tri.beta.iter().zip(&im.beta_star) {
            prop_assert_eq!(b - s, im.r);
        }
        prop_assert!(tri.beta_at(v.n + 1) >= 2 * v.c[1]);
    }
}
