use eds_harness::stress::{jobs, run_job, stress, Decision, MixMode, StressConfig};

fn planted(count: usize) -> StressConfig {
    let mut cfg = StressConfig::new(count, 11);
    cfg.mode = MixMode::Planted;
    cfg.include_corpus = false;
    cfg
}

#[test]
fn planted_instances_all_match() {
    let rep = stress(&planted(100));
    assert_eq!(rep.instances, 100);
    assert_eq!(rep.decision_matches, 100);
    assert_eq!(rep.eds_found, 100);
    assert_eq!(rep.lemma_violations, 0);
    assert!(rep.passed());
}

#[test]
fn c4_is_no_eds_for_both() {
    let mut cfg = StressConfig::new(0, 1);
    cfg.lemmas = false;
    let rep = stress(&cfg);
    let c4 = rep.results.iter().find(|r| r.name == "c4").unwrap();
    assert_eq!((c4.oracle, c4.solver), (Some(Decision::NoEds), Some(Decision::NoEds)));
    let c6 = rep.results.iter().find(|r| r.name == "c6").unwrap();
    assert!(!c6.in_class);
    assert_eq!(rep.out_of_class, rep.forced_compared);
    assert!(rep.passed());
}

#[test]
fn tiny_oracle_budget_is_counted_apart() {
    let mut cfg = planted(40);
    cfg.oracle_budget = 1;
    let rep = stress(&cfg);
    assert!(rep.oracle_budget_exceeded > 0);
    let skipped: Vec<_> = rep.results.iter().filter(|r| !r.compared()).collect();
    assert_eq!(rep.compared + skipped.len(), 40);
    assert!(skipped.iter().all(|r| r.oracle == Some(Decision::Budget) || r.solver == Some(Decision::Budget)));
    assert_eq!(rep.mismatches, 0);
}

#[test]
fn results_come_back_sorted() {
    let mut cfg = StressConfig::new(60, 3);
    cfg.threads = 4;
    let rep = stress(&cfg);
    assert!(rep.results.windows(2).all(|w| w[0].id + 1 == w[1].id));
    let serial: Vec<_> = jobs(&cfg).iter().map(|j| run_job(j, &cfg).solver).collect();
    let pooled: Vec<_> = rep.results.iter().map(|r| r.solver).collect();
    assert_eq!(serial, pooled);
}

#[test]
fn report_rendering() {
    let rep = stress(&planted(10));
    let text = rep.render();
    assert!(text.lines().any(|l| l == "mismatches=0"));
    assert!(text.lines().any(|l| l.starts_with("solve_us.p50=")));
    let summary = text.lines().last().unwrap().strip_prefix("summary=").unwrap();
    let json: serde_json::Value = serde_json::from_str(summary).unwrap();
    assert_eq!(json["instances"], 10);
}

#[test]
fn config_parsing() {
    let cfg = StressConfig::parse("# comment\ninstance_count = 7\nseed = 9\nsize_range = [2, 12]\nmode = \"rejection\"\n").unwrap();
    assert_eq!((cfg.instance_count, cfg.seed, cfg.size_range, cfg.mode), (7, 9, (2, 12), MixMode::Rejection));
    assert!(StressConfig::parse("instance_count = 7\nseed = 9\nbogus = 1\n").is_err());
    assert!(StressConfig::parse("instance_count = 7\nseed = 9\nsize_range = [1, 20]\n").is_err());
    assert!(StressConfig::parse("instance_count = 7\nseed = 9\nsize_range = [1, 20]\nsize_cap = 20\n").is_ok());
    assert!(StressConfig::parse("instance_count = 7\n").is_err());
    assert!(StressConfig::parse("instance_count = 7\nseed = 1\nplanted_edge_prob = 2.0\n").is_err());
}

#[test]
fn specs_are_reproducible() {
    let cfg = StressConfig::new(50, 42);
    assert_eq!(cfg.specs(), cfg.specs());
    assert!(cfg.specs().iter().all(|s| (1..=16).contains(&s.n)));
}
