use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use pgl6_core::lattice::{hnf_rows, kernel_basis, rank, smith_normal_form, IntMatrix};
use proptest::prelude::*;

fn matrices() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_round_trip(rows in matrices()) {
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        prop_assert!(s.u.is_unimodular());
        prop_assert!(s.v.is_unimodular());
        prop_assert_eq!(s.u.dot(&m).dot(&s.v), s.s.clone());
        for i in 0..s.s.rows() {
            for j in 0..s.s.cols() {
                if i != j {
                    prop_assert!(s.s[(i, j)].is_zero());
                }
            }
        }
        let d = s.diagonal();
        for w in d.windows(2) {
            prop_assert!(!w[0].is_negative());
            if !w[0].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero());
            } else {
                prop_assert!(w[1].is_zero());
            }
        }
        prop_assert_eq!(s.rank(), rank(&m));
    }

    #[test]
    fn hnf_is_idempotent(rows in matrices()) {
        let h = hnf_rows(&IntMatrix::from_rows(&rows));
        prop_assert_eq!(hnf_rows(&h), h);
    }

    #[test]
    fn kernel_is_saturated_and_complete(rows in matrices()) {
        let m = IntMatrix::from_rows(&rows);
        let k = kernel_basis(&m);
        prop_assert_eq!(k.cols() + rank(&m), m.cols());
        prop_assert!(m.dot(&k).is_zero());
        // saturated: the elementary divisors of a basis are all 1
        let d = smith_normal_form(&k).diagonal();
        prop_assert!(d.iter().all(|x| *x == BigInt::from(1)));
    }
}
