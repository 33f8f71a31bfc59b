//! End-to-end checks of the binary: exit codes, JSON envelope, and the
//! subcommand payloads on known inputs.

use std::io::Write;
use std::process::Command;

fn pmc() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pmc"))
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

fn c6_file() -> tempfile::NamedTempFile {
    write_temp("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")
}

fn run_json(mut cmd: Command) -> (serde_json::Value, i32) {
    let out = cmd.output().unwrap();
    let code = out.status.code().unwrap_or(-1);
    let value: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("stdout must be one JSON object");
    (value, code)
}

#[test]
fn recognize_c6() {
    let input = c6_file();
    let (v, code) = run_json({
        let mut c = pmc();
        c.arg("recognize").arg("--input").arg(input.path());
        c
    });
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["subcommand"], "recognize");
    let r = &v["result"];
    assert_eq!(r["p7_free"], true);
    assert_eq!(r["chordal"], false);
    assert_eq!(r["bipartite"], true);
    assert_eq!(r["chordal_bipartite"], false);
    assert_eq!(r["c6_count"], 1);
}

#[test]
fn solve_mwis_on_c6_returns_three() {
    let input = c6_file();
    let (v, code) = run_json({
        let mut c = pmc();
        c.args(["solve", "--problem", "mwis", "--certify", "--input"]).arg(input.path());
        c
    });
    assert_eq!(code, 0);
    assert_eq!(v["result"]["optimum"], "3");
    assert_eq!(v["result"]["certified"], true);
    assert_eq!(v["result"]["witness"], serde_json::json!([0, 2, 4]));
}

#[test]
fn solve_via_completed_bags() {
    let input = c6_file();
    let (v, code) = run_json({
        let mut c = pmc();
        c.args(["solve", "--problem", "forest", "--bags", "completed", "--input"])
            .arg(input.path());
        c
    });
    assert_eq!(code, 0);
    assert_eq!(v["result"]["optimum"], "5");
    assert_eq!(v["result"]["completion"]["steps"], 1);
}

#[test]
fn malformed_input_exits_one_with_location() {
    let input = write_temp("3 2\n0 1\nnonsense here\n");
    let (v, code) = run_json({
        let mut c = pmc();
        c.arg("recognize").arg("--input").arg(input.path());
        c
    });
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "domain");
    let msg = v["error"]["message"].as_str().unwrap();
    assert!(msg.contains("line 3"), "message should carry the location: {}", msg);
}

#[test]
fn completion_requires_p7_free() {
    let input = write_temp("8 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n");
    let (v, code) = run_json({
        let mut c = pmc();
        c.args(["complete-bipartite", "--input"]).arg(input.path());
        c
    });
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "domain");
}

#[test]
fn gen_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fixture.txt");
    let (_, code) = run_json({
        let mut c = pmc();
        c.args(["gen", "--kind", "p7free-bipartite", "--n", "14", "--seed", "5", "-o"])
            .arg(&path);
        c
    });
    assert_eq!(code, 0);

    let (v, code) = run_json({
        let mut c = pmc();
        c.arg("verify").arg("--input").arg(&path);
        c
    });
    assert_eq!(code, 0, "verify failed: {}", v);
    assert_eq!(v["result"]["all_passed"], true);

    // Determinism: regenerating with the same seed gives the same bytes.
    let path2 = dir.path().join("fixture2.txt");
    let (_, _) = run_json({
        let mut c = pmc();
        c.args(["gen", "--kind", "p7free-bipartite", "--n", "14", "--seed", "5", "-o"])
            .arg(&path2);
        c
    });
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        std::fs::read_to_string(&path2).unwrap()
    );
}

#[test]
fn enumerate_pmcs_reports_bounds() {
    let input = c6_file();
    let (v, code) = run_json({
        let mut c = pmc();
        c.args(["enumerate", "--what", "pmcs", "--input"]).arg(input.path());
        c
    });
    assert_eq!(code, 0);
    assert_eq!(v["result"]["count"], 20);
    assert_eq!(v["result"]["minsep_count"], 9);
    assert_eq!(v["result"]["bounds"]["b_le_n_a2_a_1"], true);
}

#[test]
fn params_on_path() {
    let input = write_temp("8 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n");
    let (v, code) = run_json({
        let mut c = pmc();
        c.arg("params").arg("--input").arg(input.path());
        c
    });
    assert_eq!(code, 0);
    assert_eq!(v["result"]["treedepth"], 4);
    assert_eq!(v["result"]["treewidth"], 1);
    assert_eq!(v["result"]["degeneracy"], 1);
}

#[test]
fn bench_on_a_tiny_corpus() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("a.txt"), "4 3\n0 1\n1 2\n2 3\n").unwrap();
    std::fs::write(dir.path().join("b.txt"), "3 3\n0 1\n1 2\n2 0\n").unwrap();
    std::fs::write(dir.path().join("broken.txt"), "not a graph\n").unwrap();
    let csv_path = dir.path().join("out.csv");
    let (v, code) = run_json({
        let mut c = pmc();
        c.args(["bench", "--corpus"]).arg(dir.path()).arg("--csv").arg(&csv_path);
        c
    });
    assert_eq!(code, 0);
    let instances = v["result"]["instances"].as_array().unwrap();
    assert_eq!(instances.len(), 3);
    // Ordering is canonical by filename; the broken file records an error
    // without failing the run.
    assert_eq!(instances[0]["file"], "a.txt");
    assert_eq!(instances[1]["file"], "b.txt");
    assert_eq!(instances[2]["ok"], false);
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.lines().count() >= 4);
}

#[test]
fn dimacs_input_is_accepted() {
    let input = write_temp("c comment\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    let (v, code) = run_json({
        let mut c = pmc();
        c.args(["recognize", "--format", "dimacs", "--input"]).arg(input.path());
        c
    });
    assert_eq!(code, 0);
    assert_eq!(v["result"]["chordal_bipartite"], true);
    assert_eq!(v["result"]["n"], 4);
}
