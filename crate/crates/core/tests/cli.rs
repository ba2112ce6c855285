use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn cubicity(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubicity"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_extremes_and_determinism() {
    let o = cubicity(&["gen", "3", "5", "0.0", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "p bipartite 3 5 0\n");

    let o = cubicity(&["gen", "3", "5", "1.0", "--seed", "1"]);
    assert!(stdout(&o).starts_with("p bipartite 3 5 15\n"));
    assert_eq!(stdout(&o).lines().count(), 16);

    let dir = tempfile::tempdir().unwrap();
    let (f1, f2) = (dir.path().join("g1"), dir.path().join("g2"));
    for f in [&f1, &f2] {
        assert_eq!(
            code(&cubicity(&[
                "gen",
                "20",
                "30",
                "0.2",
                "--seed",
                "77",
                "--out",
                p(f)
            ])),
            0
        );
    }
    assert_eq!(fs::read(&f1).unwrap(), fs::read(&f2).unwrap());

    let o = cubicity(&["gen", "3", "5", "1.5"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("outside [0, 1]"));
}

#[test]
fn seed_is_always_logged() {
    let o = cubicity(&["gen", "2", "2", "0.5"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).starts_with("seed: "));
}

#[test]
fn build_single_edge() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k11");
    fs::write(&g, "p bipartite 1 1 1\ne 1 1\n").unwrap();
    let o = cubicity(&[
        "build",
        p(&g),
        "--seed",
        "4",
        "--format",
        "machine",
        "--out",
        p(&dir.path().join("d")),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["report"]["k"], 1);
    assert_eq!(v["report"]["t"], 1);
    assert_eq!(v["report"]["bits_a"], 0);
    assert!(v["timings"]["construction_ms"].is_number());
}

#[test]
fn build_with_zero_t_names_the_pair() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g");
    fs::write(&g, "p bipartite 2 2 1\ne 1 1\n").unwrap();
    let o = cubicity(&["build", p(&g), "--t", "0", "--seed", "1"]);
    assert_eq!(code(&o), 1);
    let err = stderr(&o);
    assert!(
        err.contains("(a1, b2)") && err.contains("(a2, b1)") && err.contains("(a2, b2)"),
        "{err}"
    );
}

#[test]
fn build_is_byte_reproducible_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g");
    assert_eq!(
        code(&cubicity(&[
            "gen",
            "10",
            "20",
            "0.3",
            "--seed",
            "5",
            "--out",
            p(&g)
        ])),
        0
    );
    let (d1, d2, d3) = (
        dir.path().join("d1"),
        dir.path().join("d2"),
        dir.path().join("d3"),
    );
    for (d, extra) in [(&d1, None), (&d2, None), (&d3, Some("--serial"))] {
        let mut args = vec!["build", p(&g), "--seed", "99", "--out", p(d)];
        args.extend(extra);
        let o = cubicity(&args);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        assert!(stdout(&o).contains("verification: pass"));
    }
    let bytes = fs::read(&d1).unwrap();
    assert_eq!(bytes, fs::read(&d2).unwrap());
    assert_eq!(bytes, fs::read(&d3).unwrap());

    let o = cubicity(&["verify", p(&g), p(&d1)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).starts_with("pass"));

    // Against a different graph on the same vertex set.
    let other = dir.path().join("other");
    assert_eq!(
        code(&cubicity(&[
            "gen",
            "10",
            "20",
            "0.3",
            "--seed",
            "6",
            "--out",
            p(&other)
        ])),
        0
    );
    let o = cubicity(&["verify", p(&other), p(&d1), "--format", "machine"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["passed"], false);
    assert!(!v["violations"].as_array().unwrap().is_empty());

    // Different vertex counts: format-level mismatch.
    let small = dir.path().join("small");
    fs::write(&small, "p bipartite 1 1 0\n").unwrap();
    assert_eq!(code(&cubicity(&["verify", p(&small), p(&d1)])), 2);

    // Truncated dump.
    let trunc = dir.path().join("trunc");
    fs::write(&trunc, &bytes[..bytes.len() / 2]).unwrap();
    let o = cubicity(&["verify", p(&g), p(&trunc)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("malformed dump"));
}

#[test]
fn build_machine_dump_to_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g");
    fs::write(&g, "p bipartite 2 3 2\ne 1 1\ne 2 3\n").unwrap();
    let o = cubicity(&["build", p(&g), "--seed", "3", "--format", "machine"]);
    assert_eq!(code(&o), 0);
    let (rep, report) = cubicity::dump::read_dump(&stdout(&o)).unwrap();
    assert_eq!(rep.dimension(), report.unwrap().k);
    assert!(stderr(&o).contains("timings"));
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g");
    fs::write(&g, "p bipartite 2 2 2\ne 1 1\ne 1 1\n").unwrap();
    let o = cubicity(&["build", p(&g)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 3"));
    assert_eq!(code(&cubicity(&["build", "/nonexistent/graph"])), 2);
    assert_eq!(code(&cubicity(&["frobnicate"])), 2);
}

#[test]
fn probe_tables() {
    let dir = tempfile::tempdir().unwrap();
    let k = dir.path().join("k");
    fs::write(&k, "p bipartite 2 2 4\ne 1 1\ne 1 2\ne 2 1\ne 2 2\n").unwrap();
    let o = cubicity(&[
        "probe",
        p(&k),
        "--trials",
        "100",
        "--seed",
        "1",
        "--format",
        "machine",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["survival"]["rows"].as_array().unwrap().is_empty());
    assert_eq!(v["failure"]["failures"], 0);

    let g = dir.path().join("g");
    fs::write(&g, "p bipartite 2 1 1\ne 1 1\n").unwrap();
    let o = cubicity(&[
        "probe",
        p(&g),
        "--trials",
        "10000",
        "--seed",
        "2",
        "--format",
        "machine",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let rows = v["survival"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["exact"], "1/2");
    let f = rows[0]["frequency"].as_f64().unwrap();
    assert!((f - 0.5).abs() <= 0.02, "{f}");

    let o = cubicity(&["probe", p(&g), "--trials", "500", "--seed", "2"]);
    assert!(stdout(&o).contains("0 above bound + 3 sigma"));
    assert_eq!(code(&cubicity(&["probe", p(&g), "--trials", "0"])), 2);
}

#[test]
fn bench_small() {
    let o = cubicity(&[
        "bench",
        "--n-min",
        "100",
        "--n-max",
        "400",
        "--reps",
        "3",
        "--verify-max-n",
        "200",
        "--seed",
        "1",
        "--format",
        "machine",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows[0]["build_verification_ms"].is_number());
    assert!(rows[2]["build_verification_ms"].is_null());
}
