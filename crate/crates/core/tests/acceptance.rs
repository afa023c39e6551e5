use pgl6_core::selftest::{run, run_criterion, Fault, Options, CRITERIA, DEFAULT_SEED};

fn check(id: u32) {
    let r = run_criterion(id, &Options::new(DEFAULT_SEED));
    println!("{}", r.line());
    assert!(r.passed, "{}", r.details);
}

macro_rules! criteria {
    ($($name:ident = $id:literal),* $(,)?) => {$(
        #[test]
        fn $name() {
            check($id);
        }
    )*};
}

criteria!(
    criterion_01_hilbert_symbol_oracle = 1,
    criterion_02_reciprocity = 2,
    criterion_03_projection_formula = 3,
    criterion_04_hexagon_lattice_suite = 4,
    criterion_05_stable_isomorphism_witness = 5,
    criterion_06_split_model_counts = 6,
    criterion_07_segre_equivalence = 7,
    criterion_08_twisted_zeta_checks = 8,
    criterion_09_line_configuration = 9,
    criterion_10_torus_orbit_counts = 10,
    criterion_11_kernel_shape_conformance = 11,
    criterion_12_proof_replays = 12,
    criterion_13_determinism = 13,
);

#[test]
fn full_suite_summary() {
    let report = run(&Options::new(DEFAULT_SEED));
    for r in &report.results {
        println!("{}", r.line());
    }
    assert_eq!(report.results.len(), CRITERIA.len());
    assert!(report.passed());
}

#[test]
fn corrupted_trace_table_is_caught() {
    let opts = Options { fault: Some(Fault::TraceTable), ..Options::new(DEFAULT_SEED) };
    let r = run_criterion(8, &opts);
    assert!(!r.passed);
    let failed = r.details["failed_surfaces"].as_array().unwrap();
    assert!(failed.iter().any(|s| s == "F2-Ksplit-Lsplit"), "{failed:?}");
}
