use std::process::{Command, Output};

fn formarea(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_formarea"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn poly_examples() {
    let o = formarea(&["poly", "psi", "7"]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "poly"), "x^3 + x^2 - 2x - 1");
    assert_eq!(
        field(&stdout(&formarea(&["poly", "chebyshev-t", "3"])), "poly"),
        "4x^3 - 3x"
    );
    let pi4 = stdout(&formarea(&["poly", "pi", "4"]));
    assert_eq!(field(&pi4, "poly"), "x - 2");
    assert_eq!(field(&pi4, "form_degree"), "1");
    let b = stdout(&formarea(&["poly", "binomial", "4", "-2", "3"]));
    assert_eq!(field(&b, "coefficients"), "3 0 0 0 -2");
}

#[test]
fn area_examples() {
    let s4 = stdout(&formarea(&["area", "s", "4"]));
    let v: f64 = field(&s4, "area").parse().unwrap();
    assert!((v - 10.4882).abs() < 1e-4);
    let psi8 = formarea(&["area", "psi", "8"]);
    assert!(psi8.status.success());
    assert_eq!(field(&stdout(&psi8), "area"), "inf");
    assert_eq!(field(&stdout(&psi8), "status"), "divergent");
    let u6 = stdout(&formarea(&["area", "chebyshev-u", "6", "--tol", "1e-12"]));
    let v: f64 = field(&u6, "area").parse().unwrap();
    assert!((v - 3.04985).abs() < 1e-5);
}

#[test]
fn json_records_round_trip() {
    let o = formarea(&["area", "s", "4", "--json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["command"], "area");
    assert_eq!(j["n"], 4);
    let text = stdout(&formarea(&["area", "s", "4"]));
    // the JSON number and the text both carry the same 12 digits
    assert_eq!(j["area"].to_string(), field(&text, "area"));
    let j: serde_json::Value =
        serde_json::from_slice(&formarea(&["area", "psi", "8", "--json"]).stdout).unwrap();
    assert_eq!(j["area"], "inf");
}

#[test]
fn bounds_examples() {
    let o = formarea(&["bounds", "chebyshev-t", "6"]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "verdict"), "PASS");
    let o = formarea(&["bounds", "psi", "7"]);
    let out = stdout(&o);
    assert_eq!(field(&out, "verdict"), "PASS");
    assert!(field(&out, "margin_lower").parse::<f64>().unwrap() > 0.0);
    let o = formarea(&["bounds", "chebyshev-u", "5", "--alpha", "0.5"]);
    assert_eq!(field(&stdout(&o), "verdict"), "PASS");
    assert_eq!(formarea(&["bounds", "psi", "8"]).status.code(), Some(1));
    assert_eq!(formarea(&["bounds", "s", "5"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["bogus"][..],
        &["poly", "nope", "3"],
        &["poly", "psi", "0"],
        &["area", "psi", "x"],
        &["area", "s", "5", "--tol", "0"],
        &["curve", "s", "6", "--samples", "4"],
        &["verify", "--only", "nothing"],
        &["verify", "--perturb", "bogus=2"],
        &["limits", "psi", "--n-list", "7", "--q"],
    ] {
        assert_eq!(formarea(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(formarea(&["--help"]).status.code(), Some(0));
}

#[test]
fn tables_csv() {
    let o = formarea(&["tables", "--which", "1", "--factored"]);
    assert!(o.status.success());
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(
        r.headers().unwrap().iter().collect::<Vec<_>>(),
        ["n", "family", "discriminant", "factored", "area"]
    );
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 35);
    let pi5 = rows.iter().find(|r| &r[0] == "5" && &r[1] == "pi").unwrap();
    assert_eq!(&pi5[2], "2000");
    assert_eq!(&pi5[3], "2^4*5^3");
    assert!((pi5[4].parse::<f64>().unwrap() - 5.78302).abs() < 1e-5);
    let u9 = rows
        .iter()
        .find(|r| &r[0] == "9" && &r[1] == "chebyshev-u")
        .unwrap();
    assert_eq!(&u9[2], "24178516392292583494123520000000");
    assert_eq!(&u9[3], "2^88*5^7");

    let o = formarea(&["tables", "--which", "2"]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("4,s,11.7726")));
    assert!(text.lines().any(|l| l.starts_with("7,psi,15.8997")));
    assert!(text.lines().any(|l| l == "8,psi,inf"));
}

#[test]
fn output_is_independent_of_thread_count() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_formarea"))
            .args(["tables"])
            .env("FORMAREA_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(run("0").status.code(), Some(1));
}

#[test]
fn curve_output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s6.csv");
    let o = formarea(&[
        "curve",
        "s",
        "6",
        "--samples",
        "720",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let mut r = csv::Reader::from_path(&path).unwrap();
    // radius per sample, None along the directions where the form vanishes
    let pts: Vec<Option<f64>> = r
        .records()
        .map(|rec| {
            let rec = rec.unwrap();
            match &rec[3] {
                "ray" => None,
                _ => Some(
                    rec[1]
                        .parse::<f64>()
                        .unwrap()
                        .hypot(rec[2].parse().unwrap()),
                ),
            }
        })
        .collect();
    assert_eq!(pts.len(), 720);
    // S6 is a product of six real linear forms: one ray per π/6
    assert_eq!(pts.iter().filter(|p| p.is_none()).count(), 12);
    // rotating by π/6 maps the sample set to itself
    for i in 0..720 {
        match (pts[i], pts[(i + 60) % 720]) {
            (Some(a), Some(b)) => assert!((a - b).abs() < 1e-9 * a, "sample {i}"),
            (a, b) => assert_eq!(a.is_none(), b.is_none()),
        }
    }

    let psi = stdout(&formarea(&["curve", "psi", "13", "--samples", "720"]));
    assert!(psi.lines().filter(|l| l.ends_with(",ray")).count() > 0);
    let t = stdout(&formarea(&["curve", "chebyshev-t", "6", "--samples", "8"]));
    assert_eq!(t.lines().count(), 9);

    let bad = formarea(&["curve", "s", "6", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("/nonexistent-dir/x.csv"));
}

fn gaps(args: &[&str]) -> Vec<f64> {
    let o = formarea(args);
    assert!(o.status.success(), "{args:?}");
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    r.records()
        .map(|rec| rec.unwrap()[3].parse().unwrap())
        .collect()
}

#[test]
fn limit_studies() {
    let g = gaps(&["limits", "binomial", "1", "1", "--n-list", "10,50,200"]);
    assert!(g[0] > g[1] && g[1] > g[2]);
    let g = gaps(&["limits", "chebyshev-t", "--n-list", "10,20,40"]);
    assert!(g[0] > g[1] && g[1] > g[2]);
    let g = gaps(&["limits", "s", "--q", "--n-list", "10,100,1000"]);
    assert!(g[0] > g[1] && g[1] > g[2]);
    let o = formarea(&["limits", "psi", "--n-list", "7,9,13", "--json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j[2]["n"], 13);
    assert_eq!(j[2]["method"], "quadrature");
}

#[test]
fn verify_subsets_and_fault_injection() {
    let o = formarea(&["verify", "--only", "2,3,q-comparison"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(
        stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(),
        3
    );
    let o = formarea(&[
        "verify",
        "--only",
        "q-comparison",
        "--perturb",
        "u_lead=1.01",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("FAIL"));
    let o = formarea(&["verify", "--only", "tables", "--json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j.as_array().unwrap().len(), 3);
}
