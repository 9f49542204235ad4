use std::path::PathBuf;
use std::process::Command as Process;

use fusion_burnside::group::from_cycles;
use fusion_burnside::named::{self, D8_LABELS};
use fusion_burnside_cli::report::{AlphaReport, CheckReport, FusionReport, IdealEntry, MarksReport, SubgroupsReport};
use fusion_burnside_cli::{compute, Command, Format, JobSpec, Report};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_fusion-burnside"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn spec(command: Command, input: &str) -> JobSpec {
    JobSpec {
        input: Some(data(input)),
        ..JobSpec::new(command)
    }
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fusion-burnside-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["marks", "d8.json"],
        vec!["subgroups", "d8.json"],
        vec!["fusion", "a6-d8.json"],
        vec!["ideals", "s4-d8.json", "--primes", "3,5", "--format", "json"],
    ] {
        let file = data(args[1]);
        let mut full: Vec<&str> = args.clone();
        full[1] = file.to_str().unwrap();
        let first = bin(&full);
        assert_eq!(first.0, 0, "{}", first.2);
        assert!(first.1.ends_with('\n'));
        assert_eq!(bin(&full), first);
    }
}

#[test]
fn json_round_trips() {
    let json = |s: &JobSpec| {
        let mut s = s.clone();
        s.format = Format::Json;
        let report = compute(&s).unwrap();
        (fusion_burnside_cli::emit_report(&report, Format::Json), report)
    };

    let (text, report) = json(&spec(Command::Marks, "d8.json"));
    let Report::Marks(r) = report else { panic!() };
    assert_eq!(serde_json::from_str::<MarksReport>(&text).unwrap(), r);

    let (text, report) = json(&spec(Command::Subgroups, "d8.json"));
    let Report::Subgroups(r) = report else { panic!() };
    assert_eq!(serde_json::from_str::<SubgroupsReport>(&text).unwrap(), r);

    let (text, report) = json(&spec(Command::Fusion, "s4-d8.json"));
    let Report::Fusion(r) = report else { panic!() };
    assert_eq!(serde_json::from_str::<FusionReport>(&text).unwrap(), r);

    let (text, report) = json(&spec(Command::Alpha, "a6-d8.json"));
    let Report::Alpha(r) = report else { panic!() };
    assert_eq!(serde_json::from_str::<AlphaReport>(&text).unwrap(), r);

    let mut ideals = spec(Command::Ideals, "a6-d8.json");
    ideals.primes = vec![3];
    let (text, report) = json(&ideals);
    let Report::Ideals(r) = report else { panic!() };
    assert_eq!(serde_json::from_str::<Vec<IdealEntry>>(&text).unwrap(), r.ideals);
    assert_eq!(r.ideals.len(), 1 + 6 + 6);
}

#[test]
fn ideal_json_schema() {
    let f = data("a6-d8.json");
    let (code, out, _) = bin(&["ideals", "--localized", f.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    let first = &value[0];
    assert_eq!(first["ideal"]["class"], "<r,s>");
    assert_eq!(first["ideal"]["q"], 2);
    assert_eq!(first["ideal"]["ring"], "Z_(2)");
    assert_eq!(first["generators"][5], serde_json::json!([[2, "<r,s>"]]));
    assert_eq!(value.as_array().unwrap().len(), 7);
}

#[test]
fn marks_json_layout() {
    let f = data("d8.json");
    let (_, out, _) = bin(&["marks", f.to_str().unwrap(), "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["classes"][1], "<r^2>");
    assert_eq!(value["matrix"][2], serde_json::json!([4, 0, 2, 0, 0, 0, 0, 0]));
}

#[test]
fn ambient_with_sylow_and_labels_flags() {
    let a6 = named::a6().unwrap();
    let members: Vec<String> = named::a6_d8_embedding()
        .iter()
        .map(|p| a6.index_of_permutation(p).unwrap().to_string())
        .collect();
    let labels = scratch("labels.json", &serde_json::to_string(&D8_LABELS).unwrap());
    let ambient = data("a6.json");
    let sylow = members.join(",");
    let args = [
        "alpha",
        "--ambient",
        ambient.to_str().unwrap(),
        "--p",
        "2",
        "--sylow",
        &sylow,
        "--labels",
        labels.to_str().unwrap(),
    ];
    let (code, out, err) = bin(&args);
    assert_eq!(code, 0, "{err}");
    let spec_file = data("a6-d8.json");
    let (_, expected, _) = bin(&["alpha", spec_file.to_str().unwrap()]);
    assert_eq!(out, expected);

    // without a pin the Sylow copy and its labels are chosen automatically
    let (code, out, _) = bin(&["fusion", "--ambient", ambient.to_str().unwrap(), "--p", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let report: FusionReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.classes.len(), 6);
}

#[test]
fn label_maps_rename_elements() {
    let map = scratch("map.json", r#"{"1": "a", "4": "b"}"#);
    let d8 = data("d8.json");
    let (code, out, err) = bin(&["marks", d8.to_str().unwrap(), "--labels", map.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0, "{err}");
    let report: MarksReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.classes[4], "<a>");
    assert_eq!(report.classes[2], "<b>");
}

#[test]
fn inner_system_of_a_group_file() {
    let d8 = data("d8.json");
    let (code, out, _) = bin(&["fusion", d8.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let report: FusionReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.classes.len(), 8);
    assert_eq!(report.p, 2);
}

#[test]
fn validation_errors_exit_with_one() {
    let missing = data("missing.json");
    let (code, out, err) = bin(&["marks", missing.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (1, ""));
    assert!(err.contains("missing.json"));

    let loop_table = scratch("loop.json", r#"{"cayley": [[0,1,2],[1,0,2],[2,2,0]]}"#);
    assert_eq!(bin(&["marks", loop_table.to_str().unwrap()]).0, 1);

    let s4 = data("s4.json");
    assert_eq!(bin(&["alpha", "--ambient", s4.to_str().unwrap()]).0, 1);
    assert_eq!(bin(&["alpha", "--ambient", s4.to_str().unwrap(), "--p", "4"]).0, 1);
    // not a Sylow subgroup
    assert_eq!(bin(&["alpha", "--ambient", s4.to_str().unwrap(), "--p", "2", "--sylow", "0"]).0, 1);

    let spec = data("s4-d8.json");
    assert_eq!(bin(&["ideals", "--localized", spec.to_str().unwrap(), "--primes", "3"]).0, 0);
    assert_eq!(bin(&["ideals", spec.to_str().unwrap(), "--primes", "4"]).0, 1);
    assert_eq!(bin(&["ideals", spec.to_str().unwrap(), "--p", "3"]).0, 1);
    assert_eq!(bin(&["check", "no-such-suite"]).0, 1);
    assert_eq!(bin(&["frobnicate"]).0, 1);
    assert_eq!(bin(&["--help"]).0, 0);
}

#[test]
fn check_reports_every_property() {
    let (code, out, _) = bin(&["check", "d8-suite", "--format", "json"]);
    assert_eq!(code, 0);
    let report: CheckReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.checks.len(), 8);
    assert!(report.passed());
}

#[test]
fn permutation_inputs_match_named_groups() {
    let s4 = fusion_burnside::io::load_group(&data("s4.json")).unwrap();
    assert_eq!(s4.order(), 24);
    assert!(s4.index_of_permutation(&from_cycles(4, &[&[0, 1, 2, 3]])).is_some());
    let d8 = fusion_burnside::io::load_group(&data("d8.json")).unwrap();
    let named = named::d8();
    for a in d8.elements() {
        for b in d8.elements() {
            assert_eq!(d8.mul(a, b), named.mul(a, b));
        }
    }
}
