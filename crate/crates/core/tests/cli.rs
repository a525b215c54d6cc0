// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::fs;
use std::process::{Command, Output};

use tempfile::TempDir;

fn hitwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hitwalk"))
        .args(args)
        .output()
        .expect("binary should start")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn generated(dir: &TempDir, name: &str, family: &[&str]) -> String {
    let path = dir.path().join(name);
    let path = path.to_str().unwrap();
    let mut args = vec!["generate", "-o", path];
    args.extend_from_slice(family);
    let out = hitwalk(&args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path.to_owned()
}

fn header(text: &str) -> (usize, usize) {
    let mut it = text.lines().next().unwrap().split_whitespace();
    let n = it.next().unwrap().parse().unwrap();
    let m = it.next().unwrap().parse().unwrap();
    (n, m)
}

#[test]
fn generate_prints_family_sizes() {
    for (family, n, m) in [
        (&["hypercube", "--d", "3"][..], 8, 12),
        (&["grid", "--d", "2", "--m", "3"][..], 9, 12),
        (&["tadpole", "--k", "3", "--l", "2"][..], 5, 5),
        (&["dary", "--d", "2", "--h", "2"][..], 7, 6),
        (&["tree", "--parents", "-,0,0,1"][..], 4, 3),
    ] {
        let mut args = vec!["generate"];
        args.extend_from_slice(family);
        let out = hitwalk(&args);
        assert_eq!(code(&out), 0);
        assert_eq!(header(&stdout(&out)), (n, m), "{family:?}");
    }
}

#[test]
fn tadpole_junction_is_vertex_zero() {
    let out = hitwalk(&["generate", "tadpole", "--k", "3", "--l", "2"]);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "0 3"), "{text}");
    assert!(text.lines().any(|l| l == "3 4"), "{text}");
}

#[test]
fn generate_output_file_matches_stdout() {
    let dir = TempDir::new().unwrap();
    let path = generated(&dir, "q3.txt", &["hypercube", "--d", "3"]);
    let out = hitwalk(&["generate", "hypercube", "--d", "3"]);
    assert_eq!(fs::read_to_string(path).unwrap(), stdout(&out));
}

#[test]
fn unwritable_output_is_an_io_error() {
    let out = hitwalk(&["generate", "-o", "/nonexistent/dir/g.txt", "path", "--n", "3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn invalid_family_parameters_are_usage_errors() {
    assert_eq!(code(&hitwalk(&["generate", "cycle", "--n", "2"])), 1);
    assert_eq!(code(&hitwalk(&["formula", "grid", "--d", "0", "--m", "3"])), 1);
    assert_eq!(code(&hitwalk(&["solve"])), 1);
}

#[test]
fn solve_single_edge() {
    let dir = TempDir::new().unwrap();
    let p2 = write(&dir, "p2.txt", "2 1\n0 1\n");
    let out = hitwalk(&["solve", &p2, "--source", "0", "--target", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn solve_cube_neighbor_both_backends() {
    let dir = TempDir::new().unwrap();
    let q3 = generated(&dir, "q3.txt", &["hypercube", "--d", "3"]);
    let out = hitwalk(&["solve", &q3, "--source", "1", "--target", "0"]);
    assert_eq!(stdout(&out).trim(), "7");

    let out = hitwalk(&["solve", &q3, "--source", "1", "--target", "0", "--backend", "float"]);
    let value: f64 = stdout(&out).trim().parse().unwrap();
    assert!((value - 7.0).abs() < 1e-12);

    let out = hitwalk(&["solve", &q3, "--source", "1", "--target", "0", "--json"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["method"], "exact");
    assert_eq!(report["value"]["kind"], "exact");
    assert_eq!(report["value"]["value"], "7");
    assert_eq!(report["inputs"]["source"], "1");
}

#[test]
fn solve_exit_codes() {
    let dir = TempDir::new().unwrap();
    let split = write(&dir, "split.txt", "4 2\n0 1\n2 3\n");
    let out = hitwalk(&["solve", &split, "--source", "0", "--target", "3"]);
    assert_eq!(code(&out), 3);
    assert_eq!(stdout(&out).trim(), "unreachable");

    let out = hitwalk(&["solve", &split, "--source", "9", "--target", "0"]);
    assert_eq!(code(&out), 1);

    let bad = write(&dir, "bad.txt", "3 2\n0 1\n");
    assert_eq!(code(&hitwalk(&["solve", &bad, "--source", "0", "--target", "1"])), 2);
    let looped = write(&dir, "loop.txt", "2 1\n1 1\n");
    assert_eq!(code(&hitwalk(&["solve", &looped, "--source", "0", "--target", "1"])), 2);
    let missing = dir.path().join("missing.txt");
    let missing = missing.to_str().unwrap();
    assert_eq!(code(&hitwalk(&["solve", missing, "--source", "0", "--target", "1"])), 2);
}

#[test]
fn formula_matches_solver_on_generated_tree() {
    let dir = TempDir::new().unwrap();
    let tree = generated(&dir, "t.txt", &["dary", "--d", "2", "--h", "2"]);
    let formula = hitwalk(&["formula", "dary", "--d", "2", "--h", "2", "--u", "3", "--v", "6"]);
    let solved = hitwalk(&["solve", &tree, "--source", "3", "--target", "6"]);
    assert_eq!(code(&formula), 0);
    assert_eq!(stdout(&formula), stdout(&solved));
    assert_eq!(stdout(&formula).trim(), "24");
}

#[test]
fn formula_on_tree_file() {
    let dir = TempDir::new().unwrap();
    let tree = generated(&dir, "t.txt", &["tree", "--parents", "-,0,0,1"]);
    let out = hitwalk(&["formula", "tree", &tree, "--v", "1", "--u", "0"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let solved = hitwalk(&["solve", &tree, "--source", "1", "--target", "0"]);
    assert_eq!(stdout(&out), stdout(&solved));

    let cycle = generated(&dir, "c.txt", &["cycle", "--n", "4"]);
    let out = hitwalk(&["formula", "tree", &cycle, "--v", "1", "--u", "0"]);
    assert_ne!(code(&out), 0);
}

#[test]
fn simulate_single_edge_is_exact() {
    let dir = TempDir::new().unwrap();
    let p2 = write(&dir, "p2.txt", "2 1\n0 1\n");
    let out = hitwalk(&["simulate", &p2, "--source", "0", "--target", "1", "--trials", "500", "--json"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["value"]["kind"], "estimate");
    let number = |key: &str| report["value"][key].as_str().unwrap().parse::<f64>().unwrap();
    assert_eq!(number("mean"), 1.0);
    assert_eq!(number("std_error"), 0.0);
    assert_eq!(report["value"]["trials_completed"].as_u64(), Some(500));
}

#[test]
fn simulate_truncation_and_return() {
    let dir = TempDir::new().unwrap();
    let q3 = generated(&dir, "q3.txt", &["hypercube", "--d", "3"]);
    let out = hitwalk(&[
        "simulate", &q3, "--source", "0", "--target", "7", "--trials", "200", "--max-steps", "3",
    ]);
    assert_eq!(code(&out), 5);
    assert!(stdout(&out).contains("truncated="));

    let out = hitwalk(&["simulate", &q3, "--source", "0", "--return", "--trials", "2000"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("return=true"));
}

#[test]
fn compare_families_agree() {
    for family in [
        &["tadpole", "--k", "5", "--l", "3"][..],
        &["hypercube", "--d", "5"][..],
        &["grid", "--d", "3", "--m", "3"][..],
        &["tree", "--parents", "-,0,0,1,1,2"][..],
    ] {
        let mut args = vec!["compare"];
        args.extend_from_slice(family);
        let out = hitwalk(&args);
        assert_eq!(code(&out), 0, "{family:?}: {}", stdout(&out));
        assert!(stdout(&out).contains("mismatches=0"));
    }
}

#[test]
fn compare_dary_all_pairs_json() {
    let out = hitwalk(&["compare", "--all-pairs", "--json", "dary", "--d", "2", "--h", "3"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let agreement = &report["agreement"];
    assert_eq!(agreement["pairs"].as_u64(), Some(15 * 15));
    assert_eq!(agreement["mismatches"].as_u64(), Some(0));
}

#[test]
fn compare_with_simulation() {
    let out = hitwalk(&["compare", "--mc-trials", "5000", "--seed", "3", "cycle", "--n", "6"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn all_pairs_csv() {
    let dir = TempDir::new().unwrap();
    let p2 = write(&dir, "p2.txt", "2 1\n0 1\n");
    let out = hitwalk(&["all-pairs", &p2]);
    assert_eq!(stdout(&out), "hitwalk all-pairs n=2\n0,1\n1,0\n");

    let c4 = generated(&dir, "c4.txt", &["cycle", "--n", "4"]);
    let out = hitwalk(&["all-pairs", &c4]);
    assert_eq!(stdout(&out).lines().nth(1), Some("0,3,4,3"));

    let edgeless = write(&dir, "e.txt", "2 0\n");
    let out = hitwalk(&["all-pairs", &edgeless]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "hitwalk all-pairs n=2\n0,inf\ninf,0\n");
}

#[test]
fn all_pairs_quotes_fractions() {
    let dir = TempDir::new().unwrap();
    let g = generated(&dir, "g.txt", &["grid", "--d", "2", "--m", "4"]);
    let out = hitwalk(&["all-pairs", &g]);
    let text = stdout(&out);
    assert!(text.contains("\"312/7\""), "{text}");
}

#[test]
fn all_pairs_json_and_float() {
    let dir = TempDir::new().unwrap();
    let p3 = generated(&dir, "p3.txt", &["path", "--n", "3"]);
    let out = hitwalk(&["all-pairs", &p3, "--format", "json"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["n"].as_u64(), Some(3));
    assert_eq!(report["matrix"][0][2], "4");
    assert_eq!(report["matrix"][1][0], "3");

    let out = hitwalk(&["all-pairs", &p3, "--backend", "float"]);
    let text = stdout(&out);
    let cell: f64 = text.lines().nth(1).unwrap().split(',').nth(2).unwrap().parse().unwrap();
    assert!((cell - 4.0).abs() < 1e-12);
}

#[test]
fn unordered_edge_list_is_accepted() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "c3.txt", "3 3\n1 2\n\n0 2\n1 0\n");
    let out = hitwalk(&["solve", &path, "--source", "0", "--target", "1"]);
    assert_eq!(stdout(&out).trim(), "2");
}
