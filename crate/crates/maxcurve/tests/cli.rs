use maxcurve::cli::{parse_baseline, run};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["maxcurve"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json_of(args: &[&str]) -> (i32, Value) {
    let (code, out, _) = call(args);
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn genus_command() {
    for (fam, g) in [
        ("suzuki-cover", "196"),
        ("ree-cover", "246051"),
        ("suzuki-base", "14"),
    ] {
        let (code, out, _) = call(&["genus", "--family", fam, "--s", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next().unwrap(), g);
    }
    let (code, v) = json_of(&["genus", "--family", "ree-base", "--s", "1", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["genus"], 3627);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        [
            "command",
            "inputs",
            "results",
            "timing_ms",
            "version",
            "modulus"
        ]
    );
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["genus", "--family", "hermitian", "--s", "1"]).0, 2);
    assert_eq!(call(&["genus", "--family", "suzuki-cover"]).0, 2);
    assert_eq!(
        call(&["genus", "--family", "suzuki-cover", "--s", "0"]).0,
        2
    );
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(
        call(&[
            "--threads",
            "0",
            "genus",
            "--family",
            "suzuki-cover",
            "--s",
            "1"
        ])
        .0,
        2
    );
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn count_command() {
    let (code, v) = json_of(&[
        "count",
        "--family",
        "suzuki-cover",
        "--s",
        "1",
        "--ext",
        "4",
        "--verify-maximal",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["points"], 29185);
    assert_eq!(v["results"]["is_maximal"], true);
    assert_eq!(v["modulus"], "x^12 + x^3 + 1");

    let (code, v) = json_of(&[
        "--threads",
        "2",
        "count",
        "--family",
        "ree-cover",
        "--s",
        "1",
        "--ext",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["points"], 19684);

    let (code, _, err) = call(&["count", "--family", "ree-cover", "--s", "1", "--ext", "6"]);
    assert_eq!(code, 2);
    assert!(err.contains("--long"));

    let (code, v) = json_of(&[
        "count",
        "--family",
        "suzuki-cover",
        "--s",
        "1",
        "--ext",
        "2",
        "--verify-maximal",
    ]);
    assert_eq!(code, 3);
    assert_eq!(v["results"]["is_maximal"], false);
}

#[test]
fn spectrum_json_and_table_check() {
    let (code, v) = json_of(&["spectrum", "--family", "suzuki-cover", "--s", "1"]);
    assert_eq!(code, 0);
    let genera: Vec<i64> = v["results"]["genera"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    assert_eq!(genera, [0, 1, 2, 3, 6, 8, 14, 16, 19, 28, 40, 45, 92, 196]);

    let (code, v) = json_of(&[
        "spectrum",
        "--family",
        "suzuki-cover",
        "--s",
        "1",
        "--check-table1",
    ]);
    assert_eq!(code, 3);
    assert_eq!(v["results"]["table1"]["contained"], false);
    assert_eq!(v["results"]["table1"]["missing"], serde_json::json!([13]));

    let (code, v) = json_of(&[
        "spectrum",
        "--family",
        "ree-cover",
        "--s",
        "1",
        "--check-table1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["table1"]["contained"], true);
    assert!(!v["results"]["mismatches"].as_array().unwrap().is_empty());
}

#[test]
fn spectrum_csv() {
    let (code, out, _) = call(&[
        "spectrum",
        "--family",
        "ree-cover",
        "--s",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(
        rdr.headers().unwrap(),
        vec!["kind", "params", "order", "delta", "genus"]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert!(rows.iter().any(|r| &r[0] == "RE-P1" && &r[4] == "3627"));
    let genera: Vec<u64> = rows.iter().map(|r| r[4].parse().unwrap()).collect();
    assert!(genera.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn spectrum_baseline_difference() {
    let dir = std::env::temp_dir().join(format!("maxcurve-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("known.txt");
    std::fs::write(&path, "# known genera\n0\n1 # trivial\n\n196\n").unwrap();
    let p = path.to_str().unwrap();
    let (code, v) = json_of(&[
        "spectrum",
        "--family",
        "suzuki-cover",
        "--s",
        "1",
        "--baseline",
        p,
    ]);
    assert_eq!(code, 0);
    let fresh: Vec<i64> = v["results"]["not_in_baseline"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    assert_eq!(fresh, [2, 3, 6, 8, 14, 16, 19, 28, 40, 45, 92]);

    std::fs::write(&path, "12\nabc\n").unwrap();
    assert_eq!(
        call(&[
            "spectrum",
            "--family",
            "suzuki-cover",
            "--s",
            "1",
            "--baseline",
            p
        ])
        .0,
        2
    );
    assert_eq!(
        call(&[
            "spectrum",
            "--family",
            "suzuki-cover",
            "--s",
            "1",
            "--baseline",
            "/nonexistent/x"
        ])
        .0,
        2
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn baseline_parser() {
    let set = parse_baseline("# c\n 5 \n7#x\n\n5\n").unwrap();
    assert_eq!(set.len(), 2);
    assert!(parse_baseline("-3\n").is_err());
    assert!(parse_baseline("1.5\n").is_err());
}

#[test]
fn verify_group_command() {
    let (code, _, err) = call(&["verify-group", "--s", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("s = 1"));

    let (code, v) = json_of(&["verify-group", "--s", "1", "--json"]);
    assert_eq!(v["results"]["orbit_sizes"], serde_json::json!([65, 29120]));
    let failing: Vec<&str> = v["results"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["pass"] == false)
        .map(|r| r["check"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["div_m_twisted_fixed_sorted"]);
    assert_eq!(code, 3);

    let (code, out, _) = call(&["verify-group", "--s", "1"]);
    assert_eq!(code, 3);
    assert!(out.starts_with("q=8 places=29185 orbits=[65, 29120]"));
}

#[test]
fn deterministic_output() {
    let strip = |mut v: Value| {
        v["timing_ms"] = Value::Null;
        v
    };
    let a = strip(json_of(&["spectrum", "--family", "suzuki-cover", "--s", "2"]).1);
    let b = strip(
        json_of(&[
            "--threads",
            "1",
            "spectrum",
            "--family",
            "suzuki-cover",
            "--s",
            "2",
        ])
        .1,
    );
    assert_eq!(a["results"], b["results"]);
}
