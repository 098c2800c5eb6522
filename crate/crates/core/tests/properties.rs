use albert_kit::deg3::Deg3Algebra;
use albert_kit::linalg::Matrix;
use albert_kit::quadforms::{diagonalize, isotropic_vector, witt_invariants, QuadraticForm};
use albert_kit::scalars::{square_class, Field, Fp, GroundField, Scalar};
use proptest::prelude::*;

const P: u64 = 1009;

fn fp() -> impl Strategy<Value = Fp> {
    (0..P).prop_map(|v| Fp::new(v, P))
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| GroundField::Rationals.from_ratio(n, d).unwrap())
}

fn symmetric(n: usize) -> impl Strategy<Value = QuadraticForm<Fp>> {
    proptest::collection::vec(fp(), n * n).prop_map(move |v| {
        let mut m = Matrix::zeros(n, n, &Fp::new(0, P));
        for i in 0..n {
            for j in i..n {
                m.set(i, j, v[i * n + j]);
                m.set(j, i, v[i * n + j]);
            }
        }
        QuadraticForm::new(m).unwrap()
    })
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix<Fp>> {
    proptest::collection::vec(fp(), n * n)
        .prop_map(move |v| Matrix::from_rows(v.chunks(n).map(<[Fp]>::to_vec).collect()))
        .prop_filter("invertible", |m| !m.det().is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prime_field_axioms(a in fp(), b in fp(), c in fp()) {
        prop_assert_eq!((a + b) * c, a * c + b * c);
        prop_assert_eq!((a * b) * c, a * (b * c));
        if !a.is_zero() {
            prop_assert!((a * a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn rational_display_round_trip(x in rational()) {
        let back = GroundField::Rationals.parse_element(&x.to_string()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn square_class_ignores_square_factors(x in rational(), y in rational()) {
        prop_assume!(!x.is_zero() && !y.is_zero());
        let scaled = &x * &(&y * &y);
        prop_assert_eq!(square_class(&scaled).unwrap(), square_class(&x).unwrap());
    }

    #[test]
    fn cubic_norm_is_multiplicative(a in proptest::collection::vec(-20i64..20, 3),
                                    b in proptest::collection::vec(-20i64..20, 3)) {
        let q = GroundField::Rationals;
        for alg in [Deg3Algebra::split(q), Deg3Algebra::cubic(q, [q.from_i64(-2), q.zero(), q.one()]).unwrap()] {
            let (x, y) = (alg.element_from_ints(&a).unwrap(), alg.element_from_ints(&b).unwrap());
            let xy = alg.mul(&x, &y).unwrap();
            prop_assert_eq!(alg.norm(&xy).unwrap(), alg.norm(&x).unwrap() * alg.norm(&y).unwrap());
            let n = alg.norm(&x).unwrap();
            prop_assert_eq!(alg.mul(&x, &alg.sharp(&x).unwrap()).unwrap(), alg.scalar(&n));
        }
    }

    #[test]
    fn diagonalization_is_a_congruence(form in symmetric(5)) {
        let d = diagonalize(&form);
        prop_assert!(d.verify(&form));
        prop_assert_eq!(d.rank(), form.gram().rank());
    }

    #[test]
    fn invariants_survive_change_of_basis(form in symmetric(6),
                                          bases in proptest::collection::vec(invertible(6), 20)) {
        let w = witt_invariants(&form, 1);
        for p in &bases {
            prop_assert_eq!(&witt_invariants(&form.change_basis(p), 2), &w);
        }
    }

    #[test]
    fn adding_a_hyperbolic_plane_raises_the_index(form in symmetric(4), seed in any::<u64>()) {
        let h = QuadraticForm::hyperbolic(1, &Fp::new(0, P));
        let before = witt_invariants(&form, seed);
        let after = witt_invariants(&form.orthogonal_sum(&h), seed);
        prop_assert_eq!(after.witt_index, before.witt_index + 1);
        prop_assert_eq!(after.rank, before.rank + 2);
    }

    #[test]
    fn isotropic_vectors_are_verified(form in symmetric(4), seed in any::<u64>()) {
        if let Some(v) = isotropic_vector(&form, seed) {
            prop_assert!(form.eval(&v).is_zero());
            prop_assert!(v.iter().any(|c| !c.is_zero()));
        } else {
            prop_assert!(diagonalize(&form).rank() <= 2);
        }
    }
}
