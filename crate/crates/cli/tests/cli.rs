use std::path::PathBuf;
use std::process::{Command, Output};

use octahedral::Config;
use octahedral_cli::table::{parse_row, parse_table, parse_table_str, verify_row};
use octahedral_cli::CliError;
use serde_json::Value;

fn octa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octa")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/tables.txt")
}

fn fixture_line(d: &str) -> String {
    std::fs::read_to_string(fixture())
        .unwrap()
        .lines()
        .find(|l| l.split(';').nth(1).map(str::trim) == Some(d))
        .unwrap()
        .to_string()
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("octa-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn analyze_first_table_row() {
    let out = octa(&["analyze", "x^4+x-1"]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["disc_class"], "-283");
    assert_eq!(r["embedding"]["2S4+"], true);
    assert_eq!(r["embedding"]["table"], 1);
    assert_eq!(r["qcurve"]["t"], "283/27");
    assert!(r["endo"]["algebras"].as_array().unwrap().iter().any(|a| a == "Q(sqrt(-2))"));
    assert_eq!(r["principal_form"]["verified"], true);
}

#[test]
fn reports_are_byte_reproducible() {
    let a = octa(&["analyze", "-2,-3,1,-1,1"]);
    let b = octa(&["analyze", "x^4 - x^3 + x^2 - 3x - 2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn not_octahedral() {
    let out = octa(&["analyze", "x^4+1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "NotOctahedral");
}

#[test]
fn table_five_row() {
    let out = octa(&["analyze", "-3,0,0,-1,1"]);
    let r = json(&out);
    let e = &r["embedding"];
    assert_eq!((e["2S4+"].clone(), e["4S4+"].clone(), e["4S4-"].clone()), (false.into(), false.into(), false.into()));
    assert_eq!(e["8S4-"], true);
    assert_eq!(e["table"], 5);
    assert!(r["endo"]["algebras"].as_array().unwrap().iter().any(|a| a == "Q(i)"));
}

#[test]
fn cyclotomic_case() {
    let out = octa(&["qcurve", "from-quartic", "x^4+4x-6"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "CyclotomicExcluded");
    let r = json(&octa(&["analyze", "x^4+4x-6"]));
    assert_eq!(r["disc_class"], "-3");
    assert!(r["qcurve"].is_null() && r["endo"].is_null());
}

#[test]
fn qcurve_commands() {
    let r = json(&octa(&["qcurve", "from-t", "-1"]));
    assert_eq!(r["curve"]["g_t"], serde_json::json!(["24", "16", "0", "0", "1"]));
    assert_eq!(r["curve"]["h_t_divides_resultant"], true);
    let r = json(&octa(&["qcurve", "from-quartic", "x^4+x-1"]));
    assert_eq!(r["curve"]["t"], "283/27");
    assert_eq!(r["transform_matches_f_t"], true);
    let out = octa(&["qcurve", "from-t", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "DegenerateParameter");
}

#[test]
fn principalize_and_classify() {
    let r = json(&octa(&["principalize", "2,-1,1,-1,1"]));
    assert_eq!(r["principal_form"]["verified"], true);
    let r = json(&octa(&["classify", "1,-2,-1,0,1"]));
    assert_eq!(r["embedding"]["table"], 4);
    assert_eq!(r["embedding"]["type_8s4_minus"], "[53, -1]");
    let out = octa(&["principalize", "x^4-4x^2+x+1"]);
    assert_eq!(json(&out)["error"]["kind"], "NotPrincipal");
}

#[test]
fn limits_give_exit_code_three() {
    // 2021 = 43 · 47 is out of reach of trial division up to 10
    let out = Command::new(env!("CARGO_BIN_EXE_octa"))
        .args(["classify", "2,-1,0,0,1"])
        .env("OCTA_FACTOR_BOUND", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["error"]["kind"], "FactorizationIncomplete");
}

#[test]
fn bad_input() {
    let out = octa(&["analyze", "x^4+y"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "ParseError");
    let out = octa(&["analyze", "x^3+x+1"]);
    assert_eq!(json(&out)["error"]["kind"], "WrongDegree");
    let out = octa(&["analyze", "x^4-1"]);
    assert_eq!(json(&out)["error"]["kind"], "Reducible");
}

#[test]
fn suites() {
    let out = octa(&["symbolic"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["passed"], true);
    let out = octa(&["gl2f9", "--conjugacy"]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["conjugacy"]["classes"], 1);
    let orders: Vec<(u64, u64)> = r["groups"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| (g["order"].as_u64().unwrap(), g["sl2_order"].as_u64().unwrap()))
        .collect();
    assert_eq!(orders, [(48, 24), (96, 24), (48, 48), (96, 48), (192, 48)]);
}

#[test]
fn fixture_parses() {
    let rows = parse_table(&fixture(), octahedral::DEFAULT_FACTOR_BOUND).unwrap();
    assert_eq!(rows.len(), 85);
    let per_table: Vec<usize> = (1..=5).map(|t| rows.iter().filter(|r| r.table_id == t).count()).collect();
    assert_eq!(per_table, [20, 20, 20, 20, 5]);
    let starred: Vec<String> = rows.iter().filter(|r| r.star).map(|r| r.expected_disc.to_string()).collect();
    assert_eq!(starred, ["-1107", "-2619", "-2787", "3024", "3261", "5076", "5373", "5853"]);
}

#[test]
fn printed_principal_form_for_1396_is_rejected() {
    let e = parse_table_str("3 ; 1396 ; 2,-1,1,-1,1 ; 46,73 ; 0\n", octahedral::DEFAULT_FACTOR_BOUND).unwrap_err();
    assert!(matches!(e, CliError::Validation { line: 1, .. }), "{e}");
}

#[test]
fn row_in_the_wrong_table_fails() {
    let line = fixture_line("-283").replacen("1 ;", "3 ;", 1);
    let row = parse_row(&line, 1).unwrap();
    let r = verify_row(&row, &Config::default());
    assert!(!r.passed);
    assert_eq!(r.classified_table, Some(1));
    assert!(r.failures.iter().any(|f| f.contains("classified into table 1")), "{:?}", r.failures);
}

#[test]
fn toggled_star_fails() {
    let line = fixture_line("-1107");
    assert!(line.trim_end().ends_with('1'));
    let toggled = format!("{}0", line.trim_end().strip_suffix('1').unwrap());
    let r = verify_row(&parse_row(&toggled, 1).unwrap(), &Config::default());
    assert!(!r.passed);
    assert!(r.failures.iter().any(|f| f.starts_with("star mismatch")), "{:?}", r.failures);
}

#[test]
fn mutated_fixture_fails_loudly() {
    let good = fixture_line("229");
    let moved = fixture_line("-848").replacen("4 ;", "2 ;", 1);
    let path = temp_file("mutated.txt", &format!("{good}\n{moved}\n"));
    let out = octa(&["verify-tables", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(r["passed"], 1);
    assert_eq!(r["failed"], serde_json::json!([2]));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn malformed_fixture_reports_line() {
    let path = temp_file("malformed.txt", "# header\n1 ; -283 ; -1,-1,0,0,1 ; 1,-1 ; 0\n1 ; -331 ; -1,1,1 ; 37,-43 ; 0\n");
    let out = octa(&["verify-tables", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(r["error"]["kind"], "ParseError");
    assert_eq!(r["error"]["line"], 3);
}
