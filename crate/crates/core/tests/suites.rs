use semicat::verify::{run_all, run_suite, VerifyConfig, SUITES};

#[test]
fn auxiliary_suites_pass() {
    let cfg = VerifyConfig::default();
    for s in ["jrelpasses", "maxsubgroups", "unionofH", "comp", "mpq-factor"] {
        let r = run_suite(s, &cfg).unwrap();
        assert!(r.checked > 0, "{s} checked nothing");
        assert!(r.passed(), "{s}: {:?}", r.failures);
    }
}

#[test]
fn other_seed_passes() {
    let cfg = VerifyConfig {
        seed: 17,
        random_monoids: 60,
        categories: 20,
        ..Default::default()
    };
    let reports = run_all(&cfg);
    assert_eq!(reports.len(), SUITES.len());
    for r in reports {
        assert!(r.passed(), "{}: {:?}", r.suite, r.failures);
    }
}
