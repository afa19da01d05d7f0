use sheun::verify::{render, run_suite, Format, Suite, VerifyConfig};

fn cfg(seed: u64) -> VerifyConfig {
    VerifyConfig {
        trials: 3,
        seed,
        n_max: Some(4),
        big_n: None,
    }
}

fn rendered(suite: Suite, seed: u64) -> String {
    render(&run_suite(suite, &cfg(seed)), Format::Json)
}

#[test]
fn repeated_runs_are_byte_identical() {
    for suite in Suite::CONCRETE {
        assert_eq!(rendered(suite, 11), rendered(suite, 11), "{suite}");
    }
}

#[test]
fn thread_count_does_not_change_the_report() {
    let serial = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let wide = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    for suite in [Suite::Universal, Suite::Wilson, Suite::ParaRacah, Suite::Appendix] {
        let a = serial.install(|| rendered(suite, 5));
        let b = wide.install(|| rendered(suite, 5));
        assert_eq!(a, b, "{suite}");
    }
}

#[test]
fn all_concatenates_the_suites_in_order() {
    let all = run_suite(Suite::All, &cfg(2));
    let parts: Vec<_> = Suite::CONCRETE.iter().flat_map(|s| run_suite(*s, &cfg(2))).collect();
    assert_eq!(all, parts);
    let mut seen: Vec<&str> = all.iter().map(|r| r.suite.as_str()).collect();
    seen.dedup();
    let names: Vec<&str> = Suite::CONCRETE.iter().map(|s| s.name()).collect();
    assert_eq!(seen, names);
}

#[test]
fn seeds_change_sampled_parameters_only() {
    let a = run_suite(Suite::Casimir, &cfg(1));
    let b = run_suite(Suite::Casimir, &cfg(2));
    assert_eq!(a.len(), b.len());
    assert!(a.iter().zip(&b).any(|(x, y)| x.params != y.params));
    assert_eq!(rendered(Suite::Stab, 1), rendered(Suite::Stab, 2));
}

#[test]
fn sampled_entries_record_their_tuple() {
    for suite in [
        Suite::Universal,
        Suite::Sklyanin,
        Suite::Rains,
        Suite::Wilson,
        Suite::ParaRacah,
    ] {
        for r in run_suite(suite, &cfg(9)) {
            assert!(!r.params.is_empty(), "{suite}: {}", r.relation_id);
        }
    }
}
