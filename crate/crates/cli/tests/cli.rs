use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indpoly")).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indpoly")).args(args).env(key, value).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn coeffs(v: &Value) -> Vec<String> {
    v["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn compute_examples() {
    let out = run(&["compute", "path:4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(coeffs(&v["poly"]), ["1", "4", "3"]);
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["report"]["real_rooted"], true);

    // (1+x)^2 + (1+x)^3 - 1
    assert_eq!(coeffs(&json(&run(&["compute", "kbip:2,3"]))["poly"]), ["1", "5", "4", "1"]);
    assert_eq!(coeffs(&json(&run(&["compute", "complete:5"]))["poly"]), ["1", "5"]);
}

#[test]
fn compute_cross_check() {
    let out = run(&["compute", "lm:6", "--method", "formula", "--cross-check", "brute"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["cross_check"]["match"], true);
    assert_eq!(code(&run(&["compute", "path:4", "--method", "formula"])), 2);
    assert_eq!(code(&run(&["compute", "path:4", "--method", "nope"])), 2);
}

#[test]
fn product_examples() {
    let out = run(&["product", "corona", "path:2", "complete:1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["match"], true);
    assert_eq!(v["graph"]["n"], 4);
    assert_eq!(coeffs(&v["oracle"]), ["1", "4", "3"]);

    let dir = std::env::temp_dir().join(format!("indpoly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cover = dir.join("cover.json");
    std::fs::write(&cover, r#"{"cliques": [[0, 1], [2]]}"#).unwrap();
    let out = run(&["product", "ccp", "path:3", "--cover", cover.to_str().unwrap(), "2K1", "--u", "all"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["match"], true);

    let out = run(&["product", "cycle", "complete:1", "--cover", "vertex", "complete:1", "--u", "all"]);
    let v = json(&out);
    assert_eq!(v["match"], true);
    assert_eq!(coeffs(&v["formula"]), ["1", "3", "1"]);

    let out = run(&["product", "ccp", "cycle:5", "--cover", "random:3", "P3", "--u", "0,2"]);
    assert_eq!(json(&out)["match"], true);
    let out = run(&["product", "rooted", "path:3", "P3", "--root", "1"]);
    assert_eq!(json(&out)["match"], true);

    // a product recipe replays through compute
    let recipe = dir.join("recipe.json");
    std::fs::write(&recipe, serde_json::to_string(&v["recipe"]).unwrap()).unwrap();
    let out = run(&["compute", recipe.to_str().unwrap(), "--method", "formula", "--cross-check", "brute"]);
    assert_eq!(code(&out), 0);
    assert_eq!(coeffs(&json(&out)["poly"]), ["1", "3", "1"]);

    std::fs::write(&cover, r#"{"cliques": [[0, 2], [1]]}"#).unwrap();
    let out = run(&["product", "ccp", "path:3", "--cover", cover.to_str().unwrap(), "2K1"]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn check_examples() {
    assert_eq!(code(&run(&["check", "--poly", "1,1,1", "--props", "real-rooted"])), 1);
    assert_eq!(code(&run(&["check", "caterpillar:6", "--props", "symmetric,unimodal"])), 0);
    let out = run(&["check", "--poly", "1,4,3,1", "--props", "real-rooted"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["props"]["real-rooted"], false);
    assert_eq!(code(&run(&["check", "--poly", "1,1,2", "--props", "unimodal"])), 0);
    assert_eq!(code(&run(&["check", "--poly", "1,1,2", "--props", "log-concave"])), 1);
    assert_eq!(code(&run(&["check", "--poly", "1,x", "--props", "unimodal"])), 2);
    assert_eq!(code(&run(&["check", "path:3", "--props", "pretty"])), 2);
}

#[test]
fn verify_and_families() {
    let out = run(&["verify", "ccp", "--trials", "0"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["trials"], 0);

    let out = run(&["verify", "ccp", "--trials", "200", "--seed", "42"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["checks"]["formula"]["run"], 200);

    let out = run(&["verify", "families", "--spec", "caterpillar:1..12"]);
    assert_eq!(code(&out), 0);
    let rows = json(&out)["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 12);
    for r in rows {
        assert_eq!(r["report"]["symmetric"], true);
        assert_eq!(r["report"]["unimodal"], true);
        assert_eq!(r["report"]["real_rooted"], true);
    }

    assert_eq!(code(&run(&["verify", "nope"])), 2);
    assert_eq!(code(&run(&["verify", "families"])), 2);
}

#[test]
fn verify_is_deterministic() {
    let strip = |out: Output| {
        let mut v = json(&out);
        v.as_object_mut().unwrap().remove("elapsed_ms");
        serde_json::to_string(&v).unwrap()
    };
    for campaign in ["cycle", "stevanovic", "rooted-real"] {
        let args = ["verify", campaign, "--trials", "20", "--seed", "11"];
        assert_eq!(strip(run(&args)), strip(run(&args)), "{campaign}");
    }
}

#[test]
fn family_and_list() {
    let v = json(&run(&["family", "ktpath:3,2"]));
    assert_eq!(v["n"], 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 5);
    assert_eq!(v["name"], "ktpath:3,2");
    let v = json(&run(&["list"]));
    assert!(v["campaigns"].as_array().unwrap().iter().any(|c| c["name"] == "ccp"));
    assert_eq!(code(&run(&["family", "cycle:2"])), 2);
}

#[test]
fn oracle_bound_from_environment() {
    let out = run_env(&["compute", "path:8", "--method", "brute"], "INDPOLY_ORACLE_BOUND", "5");
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("oracle bound"));
    let out = run_env(&["compute", "path:8", "--method", "brute"], "INDPOLY_ORACLE_BOUND", "10");
    assert_eq!(code(&out), 0);
}
