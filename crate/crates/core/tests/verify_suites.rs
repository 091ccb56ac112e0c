use akregev::verify::{run_suite, Suite};

#[test]
fn all_suites_pass_with_default_bounds() {
    for suite in Suite::ALL {
        let t = std::time::Instant::now();
        let r = run_suite(suite, &suite.default_bounds());
        eprintln!("{suite}: {}/{} in {:?}", r.passed, r.checked, t.elapsed());
        assert!(r.ok(), "{}", r.to_json());
        assert!(r.checked > 0);
    }
}
