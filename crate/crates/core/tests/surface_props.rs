use pgl6_core::algebra3::CubicType;
use pgl6_core::dp6::{count_surface_points, projective_points, SurfaceModel, DEFAULT_POINT_BUDGET};
use pgl6_core::field::{Field, FiniteField};
use pgl6_core::hexagon::{hex_action, hex_group, trace_table, HexAut, CLASS_NAMES};

#[test]
fn parallel_count_matches_sequential() {
    for model in pgl6_core::dp6::standard_corpus() {
        let s = model.build().unwrap();
        for k in 1..=2 {
            if model.p == 3 && k == 2 {
                continue;
            }
            let e = FiniteField::new(model.p, k).unwrap();
            // prime-field coefficients keep their encoding in every extension
            let on = |x: &Vec<u32>| {
                s.quadrics.iter().all(|q| {
                    q.terms.iter().fold(e.zero(), |acc, (i, j, c)| e.add(&acc, &e.mul(c, &e.mul(&x[*i], &x[*j]))))
                        == e.zero()
                })
            };
            let seq = projective_points(&e, 6).iter().filter(|x| on(x)).count() as u64;
            assert_eq!(count_surface_points(&s, k, DEFAULT_POINT_BUDGET).unwrap(), seq, "{}", model.id());
        }
    }
}

#[test]
fn trace_table_matches_matrices() {
    let table = trace_table();
    let mut seen = vec![0usize; CLASS_NAMES.len()];
    for p in hex_group().elements() {
        let h = HexAut::from_perm(p).unwrap();
        let i = h.class_index();
        seen[i] += 1;
        assert_eq!(hex_action(&h).trace(), table[i].2.into());
    }
    let sizes: Vec<usize> = table.iter().map(|t| t.1).collect();
    assert_eq!(seen, sizes);
    // the rank of Pic and the dimension of the invariants
    let total: i64 = table.iter().map(|t| t.1 as i64 * t.2).sum();
    assert_eq!(table[0].2, 4);
    assert_eq!(total, 12);
}

#[test]
fn split_counts_are_polynomial() {
    let s = SurfaceModel { p: 2, k_inert: false, l: CubicType::Split }.build().unwrap();
    for k in 1..=3 {
        let qk = 2u64.pow(k);
        assert_eq!(count_surface_points(&s, k, DEFAULT_POINT_BUDGET).unwrap(), qk * qk + 4 * qk + 1);
    }
}
