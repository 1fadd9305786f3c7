use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ordplane(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordplane")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

const CUBE: &str = "# unit cube\n0 0 0 1\n1 0 0 1\n0 1 0 1\n1 1 0 1\n0 0 1 1\n1 0 1 1\n0 1 1 1\n1 1 1 1\n";

#[test]
fn generate_coset_model() {
    let v = json(&ordplane(&["generate", "--family", "coset:16:0"]));
    assert_eq!(v["kind"], "cyclic");
    assert_eq!(v["n"], 16);
    assert_eq!(v["offset"], 0);
}

#[test]
fn generate_prism_writes_points_and_twin() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("prism.txt");
    let o = ordplane(&["generate", "--family", "prism", "--n", "6", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    let rows = text.lines().filter(|l| !l.starts_with('#') && !l.is_empty()).count();
    assert_eq!(rows, 12);
    let twin: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("prism.txt.model.json")).unwrap()).unwrap();
    assert_eq!(twin["kind"], "circle_pair");
}

#[test]
fn random_generation_is_reproducible() {
    let a = ordplane(&["generate", "--family", "random:30:7:1000"]);
    let b = ordplane(&["generate", "--family", "random", "--n", "30", "--seed", "7", "--bound", "1000"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let rows = stdout(&a).lines().filter(|l| !l.starts_with('#')).count();
    assert_eq!(rows, 30);
    assert_ne!(a.stdout, ordplane(&["generate", "--family", "random:30:8:1000"]).stdout);
}

#[test]
fn random_family_needs_seed() {
    let o = ordplane(&["generate", "--family", "random", "--n", "30"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn count_cube() {
    let dir = tempfile::tempdir().unwrap();
    let cube = write(dir.path(), "cube.txt", CUBE);
    let v = json(&ordplane(&["count", &cube, "--no-timing"]));
    assert_eq!(v["n"], 8);
    assert_eq!(v["ordinary_planes"], 8);
    assert_eq!(v["four_point_planes"], 12);
    assert_eq!(v["coplanar_quadruples"], 12);
    assert_eq!(v["backend"], "exact_geometric");
    assert!(v["runtime_ms"].is_null());
}

#[test]
fn count_output_is_byte_stable_across_widths() {
    let gen = ordplane(&["generate", "--family", "random:40:3:200"]);
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "pts.txt", &stdout(&gen));
    let one = ordplane(&["count", &file, "--no-timing", "--jobs", "1"]);
    let three = ordplane(&["count", &file, "--no-timing", "--jobs", "3"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, three.stdout);
    let csv1 = ordplane(&["count", &file, "--format", "csv", "--jobs", "1"]);
    let csv3 = ordplane(&["count", &file, "--format", "csv", "--jobs", "3"]);
    assert_eq!(csv1.stdout, csv3.stdout);
    assert!(stdout(&csv1).starts_with("plane_key,count\n"));
}

#[test]
fn count_coset_model_matches_enumeration() {
    let v = json(&ordplane(&["count", "--family", "coset:8:0", "--no-timing"]));
    let mut four_sums = 0;
    for a in 0..8 {
        for b in a + 1..8 {
            for c in b + 1..8 {
                for d in c + 1..8 {
                    four_sums += u64::from((a + b + c + d) % 8 == 0);
                }
            }
        }
    }
    assert_eq!(v["coplanar_quadruples"], four_sums);
    assert_eq!(v["four_point_planes"], four_sums);
    assert_eq!(v["backend"], "group_model");
}

#[test]
fn count_model_file() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(dir.path(), "m.json", &stdout(&ordplane(&["generate", "--family", "coset2:12:1:0"])));
    let from_file = json(&ordplane(&["count", &model, "--no-timing"]));
    let direct = json(&ordplane(&["count", "--family", "coset2:12:1:0", "--no-timing"]));
    assert_eq!(from_file, direct);
}

#[test]
fn float_prism_agrees_with_twin_model() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("anti.txt");
    assert!(ordplane(&["generate", "--family", "antiprism:7", "--out", out.to_str().unwrap()]).status.success());
    let float = json(&ordplane(&["count", out.to_str().unwrap(), "--no-timing"]));
    let model = json(&ordplane(&["count", dir.path().join("anti.txt.model.json").to_str().unwrap(), "--no-timing"]));
    assert_eq!(float["backend"], "float_geometric");
    for key in ["n", "ordinary_planes", "four_point_planes", "coplanar_quadruples", "max_plane_size"] {
        assert_eq!(float[key], model[key], "{key}");
    }
}

#[test]
fn collinear_input_is_a_precondition_failure() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "bad.txt", "0 0 0 1\n1 0 0 1\n2 0 0 1\n0 1 0 1\n");
    let o = ordplane(&["count", &file]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("collinear"));
}

#[test]
fn malformed_input_is_a_precondition_failure() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "bad.txt", "0 0 0 1\n1 0 x 1\n");
    assert_eq!(ordplane(&["count", &file]).status.code(), Some(2));
    assert_eq!(ordplane(&["count", "--family", "prism:2"]).status.code(), Some(2));
}

#[test]
fn classify_species() {
    let dir = tempfile::tempdir().unwrap();
    let first = write(dir.path(), "a.curve", "-1 0 0 0\n");
    let second = write(dir.path(), "b.curve", "2 3 5 7\n");
    let a = json(&ordplane(&["classify", &first]));
    assert_eq!(a["species"], "first");
    assert_eq!(a["nullity"], 2);
    let b = json(&ordplane(&["classify", &second]));
    assert_eq!(b["species"], "second");
    assert_eq!(b["catalecticant"], "-12");
}

#[test]
fn decompose_curves() {
    let dir = tempfile::tempdir().unwrap();
    let nodal = write(dir.path(), "a.curve", "-1 0 0 0\n");
    let cusp = write(dir.path(), "b.curve", "0 0 0 1\n");
    let second = write(dir.path(), "c.curve", "2 3 5 7\n");
    let a = json(&ordplane(&["decompose", &nodal]));
    assert_eq!(a["form"], "power_sum");
    assert_eq!(a["group_model"]["kind"], "nodal_product");
    let b = json(&ordplane(&["decompose", &cusp]));
    assert_eq!(b["form"], "linear_times_cube");
    assert_eq!(b["group_model"]["kind"], "cuspidal_sum");
    assert!(b["residual"].as_f64().unwrap() < 1e-9);
    let c = ordplane(&["decompose", &second]);
    assert_eq!(c.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let o = ordplane(&["verify", "coplanar"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "suite,passed,total,status\ncoplanar,1000,1000,pass\n");
    let all = ordplane(&["verify", "all", "--seed", "3"]);
    assert!(all.status.success());
    assert_eq!(stdout(&all).lines().count(), 7);
    assert!(stdout(&all).lines().skip(1).all(|l| l.ends_with(",pass")));
    assert_eq!(ordplane(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn max4pt_table() {
    let o = ordplane(&["max4pt", "--from", "8", "--to", "16"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,formula,search,witness,agree"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r[4] == "true" && r[1] == r[2]));
    assert_eq!(rows[0][1], "12");
    assert_eq!(rows[4][1], "45");
}

#[test]
fn growth_table() {
    let o = ordplane(&["growth", "--family", "coset:*:0", "--n", "32,64,128"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<Vec<f64>> =
        text.lines().skip(1).map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.iter().map(|r| r[0]).collect::<Vec<_>>(), [32.0, 64.0, 128.0]);
    for r in &rows {
        assert!((r[2] - r[1] / (r[0] * r[0])).abs() < 1e-9);
    }
    // Ordinary planes of a coset grow quadratically: the per-n² column stays put.
    assert!((rows[2][2] / rows[1][2] - 1.0).abs() < 0.1);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = ordplane(&["count", "--family", "cusp-ints:12", "--no-timing", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["n"], 12);
}
