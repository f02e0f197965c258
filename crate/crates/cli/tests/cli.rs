use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthocount")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn column(out: &Output) -> Vec<String> {
    stdout(out).lines().skip(1).map(|l| l.split('\t').nth(1).unwrap().to_string()).collect()
}

#[test]
fn expand_examples() {
    let g = run(&["expand", "--series", "G", "--q", "3", "--order", "4"]);
    assert!(g.status.success());
    let g = column(&g);
    assert_eq!(&g[..4], ["1", "0", "3/64", "0"]);
    assert_eq!(g.len(), 5);
    assert_eq!(column(&run(&["expand", "--series", "T", "--q", "2", "--order", "1"])), ["1", "4/3"]);
    assert_eq!(column(&run(&["expand", "--series", "W", "--q", "2", "--order", "1"])), ["1", "1"]);
}

#[test]
fn expand_json_and_graded() {
    let out = run(&["expand", "--series", "fgs-O", "--q", "2", "--order", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["plus"][0], "1");
    assert_eq!(v["minus"][0], "0");
    // I(O+(2,2)) = 2 = 2 |O| / q
    assert_eq!(v["plus"][1], "2");
    let out = run(&["expand", "--series", "euler-rhs", "--q", "3", "--order", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["coefficients"][1], "3/2");
}

#[test]
fn brute_examples() {
    let out = run(&["brute", "count-involutions", "--kind", "O", "--type", "+", "--dim", "4", "--q", "2"]);
    assert!(out.status.success());
    let expected = orthocount::degree_sums::involution_count(
        orthocount::degree_sums::InvolutionKind::OEvenQ,
        orthocount::Sign::Plus,
        2,
        2,
    )
    .unwrap();
    assert_eq!(stdout(&out).trim(), expected.to_string());
    let out = run(&["brute", "twisted-sp", "--dim", "2", "--q", "3"]);
    assert_eq!(stdout(&out).trim(), "12");
    let out = run(&["brute", "sigma-real", "--dim", "2", "--q", "3", "--type", "-"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next(), Some("pass"));
}

#[test]
fn sigma_real_six_two() {
    let out = run(&["brute", "sigma-real", "--dim", "6", "--q", "2", "--type", "-", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["checked"], 25920);
}

#[test]
fn verify_examples() {
    let out = run(&["verify", "--id", "euler", "--q", "2", "--order", "20"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("identity/euler\tq=02 order=20\tpass"));
    let out = run(&["verify", "--id", "T-product", "--q", "7", "--order", "12"]);
    assert!(out.status.success());
    let out = run(&["verify", "--all", "--q", "2,3,5", "--order", "10", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    // sp-chain is skipped at q = 2
    assert_eq!(v["records"].as_array().unwrap().len(), 32);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--id", "nope"][..],
        &["verify", "--all", "--q", "6"],
        &["verify"],
        &["expand", "--series", "X", "--q", "2"],
        &["expand", "--series", "T", "--q", "2", "--order", "99"],
        &["brute", "count-involutions", "--type", "+", "--dim", "8", "--q", "3"],
        &["brute", "twisted-sp", "--dim", "2", "--q", "4"],
        &["brute", "sigma-real", "--dim", "4", "--q", "2", "--type", "+"],
        &["report", "--max-n", "0"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn report_is_deterministic() {
    let a = run(&["report", "--max-n", "1", "--q", "2", "--json", "--threads", "1"]);
    let b = run(&["report", "--max-n", "1", "--q", "2", "--json", "--threads", "3"]);
    assert!(a.status.success());
    let va: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let vb: serde_json::Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(va["digest"], vb["digest"]);
    assert_eq!(va["passed"], true);
    let names: Vec<_> = va["records"].as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"sigma-vs-brute"));
    assert!(names.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn report_without_brute() {
    let out = Command::new(env!("CARGO_BIN_EXE_orthocount"))
        .args(["report", "--max-n", "2", "--q", "3", "--skip-brute"])
        .env("ORTHOCOUNT_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.contains("brute"));
    assert!(text.contains("sigma-sp-vs-index"));
    assert!(text.lines().last().unwrap().contains("0 failed"));
}
