use std::path::PathBuf;
use std::process::{Command, Output};

use osculate_cli::report::{CensusReport, HilbertReport, IdealReport, ProjectionReport, ReproReport, VerdictReport};

fn osculate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osculate")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_tmp(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

const OSCNODE: &str = "y^2*z^2 - 2*x^2*y*z + x^4 + x^2*y^2";

#[test]
fn classify_text_and_trace() {
    let o = osculate(&["classify", "--curve", OSCNODE, "--point", "0,0,1", "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("A_5\ntangent: y\n"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("step ")).count(), 3);
    assert_eq!(text.lines().filter(|l| l.starts_with("witness:")).count(), 2);
}

#[test]
fn classify_json_is_one_document() {
    let o = osculate(&["--json", "classify", "--curve", OSCNODE, "--point", "0,0,1", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let r: VerdictReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.kind.as_str(), r.s), ("double-point", Some(5)));
    assert_eq!(r.trace.len(), 3);
    let oracle = r.oracle.unwrap();
    assert!(oracle.agree);
    assert_eq!(oracle.checks.len(), 4);
    // Round trip through the report type keeps every field.
    let again = serde_json::to_string(&serde_json::from_str::<VerdictReport>(&stdout(&o)).unwrap()).unwrap();
    assert_eq!(serde_json::from_str::<VerdictReport>(&again).unwrap().trace, r.trace);
}

#[test]
fn classify_at_point_over_quadratic_field() {
    // (x^2 - 2 z^2)^2 + y^2 z^2 has conjugate nodes at [+-sqrt(2), 0, 1].
    let curve = "x^4 - 4*x^2*z^2 + 4*z^4 + y^2*z^2";
    let o = osculate(&["--json", "classify", "--curve", curve, "--point", "sqrt(2), 0, 1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r: VerdictReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.s, Some(1));
}

#[test]
fn refusals_and_input_errors() {
    let triple = osculate(&["classify", "--curve", "x^3 + y^3", "--point", "0,0,1"]);
    assert_eq!(triple.status.code(), Some(0));
    assert_eq!(stdout(&triple), "point of multiplicity 3\n");
    let not_on = osculate(&["classify", "--curve", "y^2*z - x^3", "--point", "1,2,1"]);
    assert_eq!(not_on.status.code(), Some(1));
    assert!(not_on.stdout.is_empty());
    for bad in [
        vec!["classify", "--curve", "y^2 - x^3", "--point", "0,0,1"],
        vec!["classify", "--curve", "y^2*z - x^3 +", "--point", "0,0,1"],
        vec!["classify", "--curve", "y^2*z - x^3", "--point", "0,1"],
        vec!["repro", "no-such-case"],
        vec!["frobnicate"],
    ] {
        let o = osculate(&bad);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(o.stdout.is_empty(), "{bad:?}");
    }
    let base = osculate(&["implicitize", "--param", "s^2; s*t; s^2"]);
    assert_eq!(base.status.code(), Some(1));
}

#[test]
fn ideal_commands() {
    let file = write_tmp("cusp_pair.txt", "ring: QQ[x,y,z]\n# two fat points\nx^2 - y*z\nx*y\n");
    let gb = osculate(&["gb", file.to_str().unwrap()]);
    assert_eq!(stdout(&gb), "ring: QQ[x,y,z]\nx*y\nx^2 - y*z\ny^2*z\n");
    let h = osculate(&["--json", "hilbert", file.to_str().unwrap(), "--up-to", "4"]);
    let h: HilbertReport = serde_json::from_str(&stdout(&h)).unwrap();
    assert_eq!(h.data.values, vec![1, 3, 4, 4, 4]);
    assert_eq!(h.data.stable_value, Some(4));
    let rad = osculate(&["--json", "radical", file.to_str().unwrap()]);
    let rad: IdealReport = serde_json::from_str(&stdout(&rad)).unwrap();
    assert_eq!(rad.generators, vec!["x", "y*z"]);
    let el = osculate(&["eliminate", file.to_str().unwrap(), "--vars", "x"]);
    assert_eq!(stdout(&el), "ring: QQ[y,z]\ny^2*z\n");
    let sat = osculate(&["saturate", file.to_str().unwrap()]);
    assert_eq!(sat.status.code(), Some(0));
    let line = write_tmp("line.txt", "ring: QQ[x,y,z]\nx\n");
    assert_eq!(osculate(&["radical", line.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(osculate(&["gb", "/nonexistent/ideal.txt"]).status.code(), Some(2));
}

#[test]
fn project_triple_point_of_sextic() {
    let scheme = write_tmp("three_a.txt", "ring: QQ[a,b,c,d,e,f,g]\nb^2 - a*c\nb*c\nc^2\nd\ne\nf\ng\n");
    let s = scheme.to_str().unwrap();
    let o = osculate(&["--json", "project", "--n", "6", "--center", "a+g; 3f-b-d; 9e+c-d", "--scheme", s]);
    assert_eq!(o.status.code(), Some(0));
    let r: ProjectionReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.ideal.generators, vec!["w^2", "v*w", "-u*w + v^2"]);
    assert_eq!((r.length, r.curvilinear), (Some(3), Some(true)));
    let meets = osculate(&["project", "--n", "6", "--center", "b; c; d", "--scheme", s]);
    assert_eq!(meets.status.code(), Some(1));
    let wrong_n = osculate(&["project", "--n", "5", "--center", "a; b; c", "--scheme", s]);
    assert_eq!(wrong_n.status.code(), Some(2));
}

#[test]
fn analyze_param_census() {
    let o =
        osculate(&["--json", "analyze-param", "--param", "s^3*t - s*t^3; s^4 - 2*s^2*t^2 + t^4; s^4", "--classify"]);
    assert_eq!(o.status.code(), Some(0));
    let r: CensusReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.census.x2_length, 3);
    assert_eq!(r.census.points.len(), 1);
    assert_eq!(r.census.points[0].s, Some(5));
}

#[test]
fn repro_cases() {
    let list = osculate(&["repro", "--list"]);
    assert_eq!(stdout(&list).lines().count(), 17);
    let all = osculate(&["repro", "all"]);
    assert_eq!(all.status.code(), Some(0), "{}", stdout(&all));
    assert!(stdout(&all).ends_with("17 of 17 cases reproduced\n"));
    let sweep = osculate(&["--json", "repro", "normal-forms"]);
    let sweep: Vec<ReproReport> = serde_json::from_str(&stdout(&sweep)).unwrap();
    assert_eq!(sweep.len(), 12);
    let o = osculate(&["--json", "repro", "example-4.1"]);
    let r: ReproReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.pass);
    assert!(r.artifacts.iter().any(|a| a.label == "i(D1, D2)" && a.actual == "3"));
}
