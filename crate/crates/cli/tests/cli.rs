use std::collections::BTreeSet;
use std::path::PathBuf;

use cyclori::oracle::brute_force_enumerate;
use cyclori::parse_edge_list;
use cyclori_cli::run_cli;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_with_stdin(args, "")
}

fn run_with_stdin(args: &[&str], input: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cyclori").chain(args.iter().copied());
    let code = run_cli(argv, &mut input.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn path(name: &str) -> String {
    golden(name).to_string_lossy().into_owned()
}

#[test]
fn outputs_match_golden_files() {
    for graph in ["triangle", "k4"] {
        let input = path(&format!("{graph}.edges"));
        let mut cases: Vec<(Vec<&str>, String)> = Vec::new();
        for algorithm in ["fast", "absorbed"] {
            for strategy in ["exact", "fast", "amortized"] {
                cases.push((
                    vec!["--algorithm", algorithm, "--hole-strategy", strategy],
                    format!("{graph}_{algorithm}_{strategy}.bits"),
                ));
            }
        }
        cases.push((vec!["--algorithm", "naive"], format!("{graph}_naive.bits")));
        cases.push((vec!["--output", "arcs"], format!("{graph}_fast_fast.arcs")));
        for (flags, file) in cases {
            let mut args = vec!["enumerate", input.as_str()];
            args.extend(flags);
            let (code, out, _) = run(&args);
            assert_eq!(code, 0);
            let expected = std::fs::read_to_string(golden(&file)).unwrap();
            assert_eq!(out, expected, "{file}");
        }
    }
}

#[test]
fn golden_files_hold_the_oracle_set() {
    for graph in ["triangle", "k4"] {
        let g = parse_edge_list(
            &std::fs::read_to_string(golden(&format!("{graph}.edges"))).unwrap(),
            false,
        )
        .unwrap();
        let oracle: BTreeSet<String> = brute_force_enumerate(&g)
            .unwrap()
            .map(|b| b.to_string())
            .collect();
        for entry in std::fs::read_dir(golden("")).unwrap() {
            let name = entry.unwrap().file_name().into_string().unwrap();
            if name.starts_with(&format!("{graph}_")) && name.ends_with(".bits") {
                let text = std::fs::read_to_string(golden(&name)).unwrap();
                let lines: Vec<String> = text.lines().map(String::from).collect();
                let set: BTreeSet<String> = lines.iter().cloned().collect();
                assert_eq!(set.len(), lines.len(), "{name}");
                assert_eq!(set, oracle, "{name}");
            }
        }
    }
}

#[test]
fn count_prints_forty_for_k4() {
    let (code, out, _) = run(&["count", &path("k4.edges")]);
    assert_eq!((code, out.as_str()), (0, "40\n"));
}

#[test]
fn limit_one_arc_line_is_a_directed_triangle() {
    let (code, out, _) = run(&[
        "enumerate",
        &path("triangle.edges"),
        "--output",
        "arcs",
        "--limit",
        "1",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1);
    let arcs: Vec<(u64, u64)> = lines[0]
        .split(' ')
        .map(|a| {
            let (u, v) = a.split_once('>').unwrap();
            (u.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert_eq!(arcs.len(), 3);
    let tails: BTreeSet<u64> = arcs.iter().map(|a| a.0).collect();
    let heads: BTreeSet<u64> = arcs.iter().map(|a| a.1).collect();
    assert_eq!(tails.len(), 3);
    assert_eq!(heads.len(), 3);
}

#[test]
fn verify_reports_the_oracle_count() {
    let theta = "0 2\n2 1\n0 3\n3 1\n0 4\n4 1\n";
    let g = parse_edge_list(theta, false).unwrap();
    let expected = brute_force_enumerate(&g).unwrap().count();
    for algorithm in ["fast", "absorbed"] {
        let (code, out, _) = run_with_stdin(&["verify", "-", "--algorithm", algorithm], theta);
        assert_eq!(code, 0);
        assert_eq!(out, format!("OK: {expected} solutions\n"));
    }
}

#[test]
fn verify_refuses_large_graphs() {
    let mut k8 = String::new();
    for u in 0..8 {
        for v in u + 1..8 {
            k8.push_str(&format!("{u} {v}\n"));
        }
    }
    let (code, _, err) = run_with_stdin(&["verify", "-"], &k8);
    assert_eq!(code, 1);
    assert!(err.contains("24"), "{err}");
}

#[test]
fn limit_and_count_agree_with_enumeration() {
    let input = path("k4.edges");
    for limit in ["0", "7", "40", "1000"] {
        let (_, out, _) = run(&["enumerate", &input, "--limit", limit]);
        let n: usize = limit.parse().unwrap();
        assert_eq!(out.lines().count(), n.min(40));
    }
    let (_, out, _) = run(&["enumerate", &input]);
    let unique: BTreeSet<&str> = out.lines().collect();
    assert_eq!(unique.len(), 40);
    assert!(out
        .lines()
        .all(|l| l.len() == 6 && l.chars().all(|c| c == '0' || c == '1')));
    let (_, none, _) = run(&["enumerate", &input, "--output", "none"]);
    assert!(none.is_empty());
}

#[test]
fn stats_and_bench_are_key_value_lines() {
    let input = path("k4.edges");
    let (code, out, err) = run(&["count", &input, "--stats", "--algorithm", "absorbed"]);
    assert_eq!((code, out.as_str()), (0, "40\n"));
    assert!(err.lines().any(|l| l == "dead_calls=0"));
    assert!(err.lines().any(|l| l.starts_with("first_solution_steps=")));
    let (code, out, _) = run(&["bench", &input]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.split_once('=').is_some()));
    for key in [
        "setup_steps",
        "first_solution_steps",
        "max_gap_steps",
        "median_gap_steps",
        "dead_calls",
    ] {
        assert!(
            out.lines().any(|l| l.starts_with(&format!("{key}="))),
            "{key}"
        );
    }
}

#[test]
fn input_and_usage_errors_exit_one() {
    assert_eq!(run(&["count", "/definitely/not/here.edges"]).0, 1);
    assert_eq!(run_with_stdin(&["count", "-"], "0 1\n1 x\n").0, 1);
    assert_eq!(run_with_stdin(&["count", "-"], "0 0\n").0, 1);
    assert_eq!(
        run_with_stdin(&["count", "-", "--strict-connected"], "0 1\n2 3\n").0,
        1
    );
    assert_eq!(run_with_stdin(&["count", "-"], "0 1\n2 3\n").1, "0\n");
    let (code, _, err) = run(&["count"]);
    assert_eq!(code, 1);
    assert!(err.contains("Usage"));
    assert_eq!(run(&["frobnicate", "x"]).0, 1);
    assert_eq!(run(&["count", "-", "--output", "xml"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn dump_multigraph_lists_compressed_edges() {
    let theta = "0 2\n2 1\n0 3\n3 1\n0 4\n4 1\n";
    let (code, out, _) = run_with_stdin(&["enumerate", "-", "--dump-multigraph"], theta);
    assert_eq!(code, 0);
    assert_eq!(out, "0 1 chain 2\n".repeat(3));
}
