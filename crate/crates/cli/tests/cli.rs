use std::fs;
use std::process::{Command, Output};

fn hyperlag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperlag")).args(args).output().expect("run hyperlag")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value_line(text: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix("value "))
        .expect("value line")
        .parse()
        .unwrap()
}

#[test]
fn colex_round_trips_through_lambda() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c9.txt");
    let o = hyperlag(&["colex", "--r", "3", "--m", "9", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 10);

    let from_file = value_line(&stdout(&hyperlag(&["lambda", "--input", path.to_str().unwrap()])));
    let direct = value_line(&stdout(&hyperlag(&["lambda", "--r", "3", "--m", "9"])));
    assert!((from_file - direct).abs() < 1e-9);
    assert!(from_file > 1.0 / 16.0 && from_file < 0.08);
}

#[test]
fn complete_graph_value() {
    let o = hyperlag(&["lambda", "--r", "3", "--m", "10"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("value 0.0800000000000"));
}

#[test]
fn grid_method_is_a_lower_bound() {
    let grid = value_line(&stdout(&hyperlag(&["lambda", "--r", "3", "--m", "9", "--method", "grid", "--k", "30"])));
    let opt = value_line(&stdout(&hyperlag(&["lambda", "--r", "3", "--m", "9"])));
    assert!(grid <= opt + 1e-12);
    assert!(opt - grid < 5e-3);
}

#[test]
fn compress_keeps_edge_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    fs::write(&path, "3 5 3\n1 2 5\n3 4 5\n1 4 5\n").unwrap();
    let o = hyperlag(&["compress", "--input", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("3 5 3"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn figure_csv_header_and_rows() {
    let o = hyperlag(&["figure", "--t-max", "6", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,t,lambda_conjectured,smooth_bound"));
    assert_eq!(lines.count(), 20);
}

#[test]
fn figure_svg_is_well_formed() {
    let o = hyperlag(&["figure", "--t-max", "5", "--format", "svg"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("<svg"));
    assert!(text.trim_end().ends_with("</svg>"));
    assert_eq!(text.matches("<polyline").count(), 2);
}

#[test]
fn verify_small_range() {
    let o = hyperlag(&["verify", "--conjecture", "--m-max", "12", "--jobs", "2", "--seed", "7", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(text.lines().next(), Some("m,t,lambda3,lambda_colex,pass,candidates,seconds"));
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r.split(',').nth(4) == Some("true")));
}

#[test]
fn verify_all_modes() {
    let o = hyperlag(&["verify", "--m", "13"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("PASS"));
    assert!(text.contains("# m=13 maximizer"));
}

#[test]
fn exit_codes() {
    assert_eq!(hyperlag(&["verify", "--m", "0"]).status.code(), Some(2));
    assert_eq!(hyperlag(&["colex", "--r", "3", "--m", "0"]).status.code(), Some(2));
    assert_eq!(hyperlag(&["lambda", "--input", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(hyperlag(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(hyperlag(&["figure", "--t-max", "17"]).status.code(), Some(2));
    assert_eq!(hyperlag(&["bounds", "--m", "56"]).status.code(), Some(0));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "3 4 1\n1 1 2\n").unwrap();
    let o = hyperlag(&["lambda", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().starts_with("hyperlag:"));
}

proptest::proptest! {
    #![proptest_config(proptest::test_runner::Config::with_cases(24))]

    #[test]
    fn exit_status_contract(r in 0usize..6, m in 0u64..40, tol in -1.0f64..1.0) {
        let colex = hyperlag(&["colex", "--r", &r.to_string(), "--m", &m.to_string()]);
        let colex_ok = r >= 1 && m >= 1;
        proptest::prop_assert_eq!(colex.status.code(), Some(if colex_ok { 0 } else { 2 }));

        let lambda = hyperlag(&["lambda", "--r", "3", "--m", &m.to_string(), "--tol", &tol.to_string()]);
        let lambda_ok = m >= 1 && tol > 0.0;
        proptest::prop_assert_eq!(lambda.status.code(), Some(if lambda_ok { 0 } else { 2 }));
    }
}
