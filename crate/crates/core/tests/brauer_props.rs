use num_bigint::BigInt;
use pgl6_core::brauer::{
    corestriction, decompose_degree6, hilbert_symbol, quaternion_class, restriction, Place, QuadField,
};
use pgl6_core::field::Rational;
use pgl6_core::numtheory::factor;
use pgl6_core::selftest::{padic_solvable, random_class};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn nonzero() -> impl Strategy<Value = i64> {
    (-500i64..=500).prop_filter("nonzero", |x| *x != 0)
}

fn places(a: i64, b: i64) -> Vec<Place> {
    let mut v = vec![Place::Real, Place::Prime(2)];
    v.extend(factor((a * b).unsigned_abs()).into_iter().map(|(p, _)| Place::Prime(p)));
    v.sort();
    v.dedup();
    v
}

fn q(x: i64) -> Rational {
    Rational::from_int(x)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn product_formula(a in nonzero(), b in nonzero()) {
        let minus = places(a, b).into_iter().filter(|&v| hilbert_symbol(&q(a), &q(b), v).unwrap() == -1).count();
        prop_assert_eq!(minus % 2, 0);
        let c = quaternion_class(&q(a), &q(b)).unwrap();
        prop_assert!(c.period() <= BigInt::from(2));
    }

    #[test]
    fn symbol_is_symmetric_and_bimultiplicative(a in nonzero(), b in nonzero(), c in nonzero()) {
        for v in places(a * c, b) {
            let ab = hilbert_symbol(&q(a), &q(b), v).unwrap();
            prop_assert_eq!(ab, hilbert_symbol(&q(b), &q(a), v).unwrap());
            let cb = hilbert_symbol(&q(c), &q(b), v).unwrap();
            prop_assert_eq!(ab * cb, hilbert_symbol(&q(a * c), &q(b), v).unwrap());
        }
        prop_assert_eq!(hilbert_symbol(&q(a), &q(-a), Place::Real).unwrap(), 1);
    }

    #[test]
    fn cor_res_is_doubling(seed in any::<u64>(), d in prop::sample::select(vec![-1i64, 2, -3, 5, -7, 6, 10])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dens: Vec<i64> = (2..=12).collect();
        let u = random_class(&mut rng, &dens, 4);
        let k = QuadField::new(d).unwrap();
        prop_assert_eq!(corestriction(&restriction(&u, k)), u.scale(2));
    }

    #[test]
    fn degree6_decomposition(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_class(&mut rng, &[2, 3, 6], 4);
        let (c, d) = decompose_degree6(&u).unwrap();
        prop_assert_eq!(c.tensor(&d), u);
        prop_assert!(c.scale(2).is_split());
        prop_assert!(d.scale(3).is_split());
    }
}

#[test]
fn hilbert_matches_padic_search() {
    for p in [2i64, 3, 5, 7, 11, 13] {
        for a in -10i64..=10 {
            for b in -10i64..=10 {
                if a == 0 || b == 0 {
                    continue;
                }
                let want = if padic_solvable(a, b, p) { 1 } else { -1 };
                assert_eq!(hilbert_symbol(&q(a), &q(b), Place::Prime(p as u64)).unwrap(), want, "({a},{b})_{p}");
            }
        }
    }
}

#[test]
fn real_symbol() {
    for a in [-3i64, -1, 1, 2] {
        for b in [-5i64, -1, 1, 7] {
            let want = if a < 0 && b < 0 { -1 } else { 1 };
            assert_eq!(hilbert_symbol(&q(a), &q(b), Place::Real).unwrap(), want);
        }
    }
}
