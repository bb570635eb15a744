use std::collections::HashSet;
use std::fs;
use std::path::Path;

use gazelle_bench::{derive_seed, parse_config_str, run_campaign, Overrides, RunOptions};

const SMALL: &str = r#"{
    "algorithms": [{"name": "msigoa"}, {"name": "goa"}],
    "problems": [{"name": "sphere", "dim": 2}],
    "iterations": 5,
    "runs": 2,
    "seed": 11
}"#;

fn read(dir: &Path, name: &str) -> String {
    fs::read_to_string(dir.join(name)).unwrap()
}

fn untimed(workers: usize) -> RunOptions {
    RunOptions {
        workers: Some(workers),
        timing: false,
    }
}

#[test]
fn two_algorithms_two_runs_give_four_rows() {
    let campaign = parse_config_str(SMALL, &Overrides::default()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let results = run_campaign(&campaign, dir.path(), &RunOptions::default()).unwrap();
    assert_eq!(results.len(), 4);

    let csv = read(dir.path(), "results.csv");
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(
        lines[0],
        "algorithm,problem,dim,run_index,seed,best_fitness,best_position,wall_ms"
    );
    assert!(!csv.contains('\r'));
    let row: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(row[..4], ["msigoa", "sphere", "2", "0"]);
    assert_eq!(
        row[4],
        derive_seed(11, "msigoa", "sphere-d2", 0).to_string()
    );
    let best: f64 = row[5].parse().unwrap();
    assert_eq!(best.to_bits(), results[0].record.best_fitness.to_bits());
    let position: Vec<f64> = row[6].split(';').map(|v| v.parse().unwrap()).collect();
    assert_eq!(position, results[0].record.best_position);

    let summary = read(dir.path(), "summary.csv");
    assert_eq!(summary.lines().count(), 3);
    assert!(summary.starts_with("algorithm,problem,dim,runs,mean,std,best,median\n"));

    let trace = read(dir.path(), "traces/goa_sphere-d2_1.csv");
    let tl: Vec<&str> = trace.lines().collect();
    assert_eq!(tl[0], "iteration,best_so_far");
    assert_eq!(tl.len(), 6);
    assert!(tl[5].starts_with("5,"));
    assert_eq!(fs::read_dir(dir.path().join("traces")).unwrap().count(), 4);

    let stats = read(dir.path(), "stats.csv");
    assert!(stats
        .lines()
        .any(|l| l.starts_with("wilcoxon,sphere-d2,msigoa,goa,")));
    assert!(stats
        .lines()
        .any(|l| l.starts_with("win_tie_loss,,msigoa,goa,")));
}

#[test]
fn output_does_not_depend_on_worker_count() {
    let text = r#"{
        "algorithms": [{"name": "goa"}, {"name": "goa-13"}, {"name": "msigoa"}],
        "problems": [{"name": "rastrigin", "dim": 3}, {"name": "spring"}],
        "iterations": 15,
        "runs": 4
    }"#;
    let campaign = parse_config_str(text, &Overrides::default()).unwrap();
    let one = tempfile::tempdir().unwrap();
    let four = tempfile::tempdir().unwrap();
    run_campaign(&campaign, one.path(), &untimed(1)).unwrap();
    run_campaign(&campaign, four.path(), &untimed(4)).unwrap();
    for name in [
        "results.csv",
        "summary.csv",
        "stats.csv",
        "traces/msigoa_spring_3.csv",
    ] {
        assert_eq!(
            fs::read(one.path().join(name)).unwrap(),
            fs::read(four.path().join(name)).unwrap()
        );
    }
    assert!(!read(one.path(), "results.csv").contains("wall_ms"));
    assert!(read(one.path(), "stats.csv").contains("friedman,,goa-13,"));
}

#[test]
fn seeds_are_stable_when_the_campaign_grows() {
    let small = parse_config_str(SMALL, &Overrides::default()).unwrap();
    let grown_text = SMALL.replace(
        r#"[{"name": "msigoa"}, {"name": "goa"}]"#,
        r#"[{"name": "goa-2"}, {"name": "goa"}, {"name": "msigoa"}]"#,
    );
    let grown = parse_config_str(&grown_text, &Overrides::default()).unwrap();
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let ra = run_campaign(&small, a.path(), &untimed(1)).unwrap();
    let rb = run_campaign(&grown, b.path(), &untimed(1)).unwrap();
    for name in ["msigoa", "goa"] {
        let pick =
            |rs: &[gazelle_bench::RunResult], c: &gazelle_bench::Campaign| -> Vec<(u64, u64)> {
                rs.iter()
                    .filter(|r| c.algorithms[r.algorithm].name == name)
                    .map(|r| (r.seed, r.record.best_fitness.to_bits()))
                    .collect()
            };
        assert_eq!(pick(&ra, &small), pick(&rb, &grown));
    }
}

#[test]
fn derived_seeds_are_distinct() {
    let mut seen = HashSet::new();
    for a in [
        "goa", "goa-1", "goa-2", "goa-3", "goa-12", "goa-13", "goa-23", "msigoa",
    ] {
        for p in ["sphere-d10", "sphere-d30", "spring", "welded-beam"] {
            for r in 0..51 {
                assert!(seen.insert(derive_seed(0, a, p, r)));
            }
        }
    }
}

#[test]
fn unwritable_output_fails_before_running() {
    let campaign = parse_config_str(SMALL, &Overrides::default()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let err = run_campaign(&campaign, &blocker.join("out"), &RunOptions::default()).unwrap_err();
    assert!(matches!(err, gazelle_bench::BenchError::Io { .. }), "{err}");
}

#[test]
fn spring_ablation_campaign_reaches_target() {
    let text = r#"{
        "algorithms": [
            {"name": "goa"}, {"name": "goa-1"}, {"name": "goa-2"}, {"name": "goa-3"},
            {"name": "goa-12"}, {"name": "goa-13"}, {"name": "goa-23"}, {"name": "msigoa"}
        ],
        "problems": [{"name": "spring"}],
        "runs": 51,
        "iterations": 500
    }"#;
    let campaign = parse_config_str(text, &Overrides::default()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    run_campaign(&campaign, dir.path(), &untimed(2)).unwrap();
    let summary = read(dir.path(), "summary.csv");
    let row = summary.lines().find(|l| l.starts_with("msigoa,")).unwrap();
    let best: f64 = row.split(',').nth(6).unwrap().parse().unwrap();
    assert!(best <= 0.012_700, "best {best}");
    assert_eq!(read(dir.path(), "results.csv").lines().count(), 1 + 8 * 51);
}
