use pgl6_core::field::{find_irreducible_coeffs, Field, FiniteField};
use proptest::prelude::*;

/// Remainder of `a` modulo the monic `m`, coefficients low to high mod `p`.
fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap() % p;
        let shift = r.len() - dm;
        for (i, &c) in m[..dm].iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
        }
    }
    r
}

/// No monic factor of degree 1..=k/2, by trying them all.
fn irreducible_by_search(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    for d in 1..=k / 2 {
        for m in 0..p.pow(d as u32) {
            let mut g: Vec<u64> = (0..d).map(|i| m / p.pow(i as u32) % p).collect();
            g.push(1);
            if rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[test]
fn chosen_moduli_are_irreducible() {
    for (p, kmax) in [(2u64, 10u32), (3, 6), (5, 4), (7, 3), (11, 2), (13, 2)] {
        for k in 1..=kmax {
            let f = find_irreducible_coeffs(p, k);
            assert_eq!(f.len(), k as usize + 1);
            assert_eq!(f[k as usize], 1);
            assert!(irreducible_by_search(&f, p), "{f:?} over F_{p}");
        }
    }
}

fn fields() -> impl Strategy<Value = FiniteField> {
    prop::sample::select(vec![(2u64, 1u32), (2, 3), (2, 4), (3, 2), (5, 1), (7, 2)])
        .prop_map(|(p, k)| FiniteField::new(p, k).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn field_axioms(f in fields(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let n = f.order();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
        prop_assert_eq!(f.fast_mul(a, b), f.mul(&a, &b));
        if a != f.zero() {
            prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            prop_assert_eq!(f.pow(&a, n as u64 - 1), f.one());
        }
        // Frobenius is additive and multiplicative
        prop_assert_eq!(f.frobenius(f.add(&a, &b)), f.add(&f.frobenius(a), &f.frobenius(b)));
        prop_assert_eq!(f.frobenius(f.mul(&a, &b)), f.mul(&f.frobenius(a), &f.frobenius(b)));
    }
}
