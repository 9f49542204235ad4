//! Acceptance criteria, one line each. Runs the real binary on the bundled
//! inputs and compares against hand-written golden files.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fusion_burnside_cli::checks::{self, Suite};
use fusion_burnside_cli::report::{AlphaReport, FusionReport, Number};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn data(name: &str) -> PathBuf {
    root().join("data").join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(root().join("tests/golden").join(name)).expect("golden file")
}

/// Runs the binary, returning stdout and the wall time.
fn cli(args: &[&str]) -> Result<(String, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_fusion-burnside"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr).trim()
        ));
    }
    Ok((String::from_utf8(out.stdout).map_err(|e| e.to_string())?, elapsed))
}

fn path(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

fn byte_exact(got: &str, want: &str) -> Result<(), String> {
    if got == want {
        return Ok(());
    }
    let line = got
        .lines()
        .zip(want.lines())
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| got.lines().count().min(want.lines().count()));
    Err(format!("output differs from golden at line {}", line + 1))
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn class_count(spec: &str) -> Result<usize, String> {
    let (json, _) = cli(&["fusion", path(&data(spec)), "--format", "json"])?;
    let report: FusionReport = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    Ok(report.classes.len())
}

fn criterion_1() -> Result<(), String> {
    let (out, elapsed) = cli(&["marks", path(&data("d8.json"))])?;
    byte_exact(&out, &golden("marks_d8.txt"))?;
    within(elapsed, Duration::from_secs(1))
}

fn criterion_2() -> Result<(), String> {
    let n = class_count("s4-d8.json")?;
    if n != 7 {
        return Err(format!("{n} fusion classes"));
    }
    let (out, elapsed) = cli(&["alpha", path(&data("s4-d8.json"))])?;
    byte_exact(&out, &golden("alpha_s4.txt"))?;
    within(elapsed, Duration::from_secs(5))
}

fn criterion_3() -> Result<(), String> {
    let n = class_count("a6-d8.json")?;
    if n != 6 {
        return Err(format!("{n} fusion classes"));
    }
    let (out, elapsed) = cli(&["alpha", path(&data("a6-d8.json"))])?;
    byte_exact(&out, &golden("alpha_a6.txt"))?;
    within(elapsed, Duration::from_secs(30))?;
    let (json, _) = cli(&["alpha", path(&data("a6-d8.json")), "--format", "json"])?;
    let report: AlphaReport = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    let alpha_z = report
        .alphas
        .iter()
        .find(|a| a.class == "<r^2>")
        .ok_or("no alpha_Z")?;
    let expected = vec![
        (Number::Int(1), "<r^2>".to_string()),
        (Number::Int(2), "<rs>".to_string()),
        (Number::Int(2), "<s>".to_string()),
    ];
    if alpha_z.transitive != expected {
        return Err(format!("alpha_Z = {:?}", alpha_z.transitive));
    }
    Ok(())
}

fn criterion_4() -> Result<(), String> {
    for (spec, file) in [("s4-d8.json", "ideals_s4_local.txt"), ("a6-d8.json", "ideals_a6_local.txt")] {
        let (out, _) = cli(&["ideals", "--localized", path(&data(spec))])?;
        byte_exact(&out, &golden(file)).map_err(|e| format!("{file}: {e}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let mut failures = 0;
    let mut report = |label: &str, result: Result<(), String>| match result {
        Ok(()) => println!("PASS {label}"),
        Err(e) => {
            failures += 1;
            println!("FAIL {label}: {e}");
        }
    };
    println!("acceptance criteria");
    report("1 table of marks of D8 matches the golden table (byte-exact, < 1 s)", criterion_1());
    report("2 F_D8(S4): 7 classes, alpha ghosts match the golden listing (< 5 s)", criterion_2());
    report(
        "3 F_D8(A6): 6 classes, alpha ghosts and alpha_Z decomposition match the golden listing (< 30 s)",
        criterion_3(),
    );
    report("4 prime ideal listings of A(F)_(2) for S4 and A6 match the golden listings", criterion_4());

    let start = Instant::now();
    match Suite::load() {
        Ok(suite) => {
            let mut all_passed = true;
            for (name, _) in checks::CORE {
                let result = checks::run_check(&suite, name).expect("listed check");
                all_passed &= result.is_ok();
                report(&format!("5 property: {name}"), result);
            }
            let elapsed = start.elapsed();
            let timing = within(elapsed, Duration::from_secs(120));
            let summary = if all_passed { timing } else { Err("see failed properties".into()) };
            report("5 property suite (< 2 min)", summary);
        }
        Err(e) => report("5 property suite", Err(e.to_string())),
    }
    if failures == 0 {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failures} failed");
        ExitCode::FAILURE
    }
}
