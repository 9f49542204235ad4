//! Report values and their two renderings.
//!
//! JSON is the serde form of the report structs. Tables are plain aligned
//! text whose header lines start with `#`. Both end with a newline.

use std::fmt::Write;

use fusion_burnside::{BigInt, BigRational};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

/// An exact number in JSON: a plain integer when it fits, `"n/d"` (or a long
/// integer) as a string otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl From<&BigInt> for Number {
    fn from(n: &BigInt) -> Self {
        n.to_i64().map_or_else(|| Number::Text(n.to_string()), Number::Int)
    }
}

impl From<&BigRational> for Number {
    fn from(r: &BigRational) -> Self {
        if r.is_integer() {
            Number::from(&r.to_integer())
        } else {
            Number::Text(format!("{}/{}", r.numer(), r.denom()))
        }
    }
}

impl From<u64> for Number {
    fn from(n: u64) -> Self {
        Number::from(&BigInt::from(n))
    }
}

impl std::fmt::Display for Number {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Number::Int(n) => write!(f, "{n}"),
            Number::Text(s) => write!(f, "{s}"),
        }
    }
}

/// `[coefficient, label]`.
pub type Term = (Number, String);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MarksReport {
    pub group: String,
    pub classes: Vec<String>,
    pub matrix: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubgroupClass {
    pub label: String,
    pub order: usize,
    pub size: usize,
    pub normalizer_order: usize,
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubgroupsReport {
    pub group: String,
    pub classes: Vec<SubgroupClass>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FusionClass {
    pub label: String,
    pub order: usize,
    pub s_classes: Vec<String>,
    pub below: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FusionReport {
    pub ambient: String,
    pub p: u64,
    pub sylow_order: usize,
    pub classes: Vec<FusionClass>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaEntry {
    pub class: String,
    pub transitive: Vec<Term>,
    pub ghost: Vec<Number>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaReport {
    pub ambient: String,
    pub p: u64,
    pub s_classes: Vec<String>,
    pub alphas: Vec<AlphaEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdealName {
    pub class: String,
    pub q: u64,
    pub ring: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdealEntry {
    pub ideal: IdealName,
    pub generators: Vec<Vec<Term>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdealsReport {
    pub ambient: String,
    pub p: u64,
    pub localized: bool,
    pub ideals: Vec<IdealEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub checks: Vec<CheckLine>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Report {
    Marks(MarksReport),
    Subgroups(SubgroupsReport),
    Fusion(FusionReport),
    Alpha(AlphaReport),
    Ideals(IdealsReport),
    Check(CheckReport),
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let value = match report {
                Report::Marks(r) => serde_json::to_value(r),
                Report::Subgroups(r) => serde_json::to_value(r),
                Report::Fusion(r) => serde_json::to_value(r),
                Report::Alpha(r) => serde_json::to_value(r),
                Report::Ideals(r) => serde_json::to_value(&r.ideals),
                Report::Check(r) => serde_json::to_value(r),
            }
            .expect("reports serialize");
            let mut out = serde_json::to_string_pretty(&value).expect("reports serialize");
            out.push('\n');
            out
        }
        Format::Table => match report {
            Report::Marks(r) => marks_table(r),
            Report::Subgroups(r) => subgroups_table(r),
            Report::Fusion(r) => fusion_table(r),
            Report::Alpha(r) => alpha_table(r),
            Report::Ideals(r) => ideals_table(r),
            Report::Check(r) => check_table(r),
        },
    }
}

/// Pads every column to its widest cell, single spaces between. Columns for
/// which `right` holds are right-aligned.
fn aligned(rows: &[Vec<String>], right: impl Fn(usize) -> bool) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push(' ');
            }
            if right(c) {
                let _ = write!(line, "{cell:>w$}", w = widths[c]);
            } else {
                let _ = write!(line, "{cell:<w$}", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn marks_table(r: &MarksReport) -> String {
    let mut out = format!(
        "# table of marks of {}\n# row Q, column P: number of P-fixed points of {}/Q\n",
        r.group, r.group
    );
    let mut rows = vec![std::iter::once("Q \\ P".to_string()).chain(r.classes.iter().cloned()).collect()];
    for (label, row) in r.classes.iter().zip(&r.matrix) {
        rows.push(
            std::iter::once(label.clone())
                .chain(row.iter().map(u64::to_string))
                .collect(),
        );
    }
    out.push_str(&aligned(&rows, |c| c > 0));
    out
}

fn subgroups_table(r: &SubgroupsReport) -> String {
    let mut out = format!("# conjugacy classes of subgroups of {}\n", r.group);
    let mut rows = vec![vec![
        "class".to_string(),
        "order".into(),
        "size".into(),
        "normalizer".into(),
        "members".into(),
    ]];
    for c in &r.classes {
        rows.push(vec![
            c.label.clone(),
            c.order.to_string(),
            c.size.to_string(),
            c.normalizer_order.to_string(),
            format!("{{{}}}", c.members.join(", ")),
        ]);
    }
    out.push_str(&aligned(&rows, |c| (1..=3).contains(&c)));
    out
}

fn fusion_table(r: &FusionReport) -> String {
    let mut out = format!(
        "# fusion system of {} on a Sylow {}-subgroup of order {}\n",
        r.ambient, r.p, r.sylow_order
    );
    let mut rows = vec![vec![
        "class".to_string(),
        "order".into(),
        "S-classes".into(),
        "below".into(),
    ]];
    for c in &r.classes {
        rows.push(vec![
            c.label.clone(),
            c.order.to_string(),
            c.s_classes.join(" "),
            c.below.join(" "),
        ]);
    }
    out.push_str(&aligned(&rows, |c| c == 1));
    out
}

/// `a + 2b - c`, with unit coefficients omitted.
pub fn render_combination(terms: &[Term], name: impl Fn(&str) -> String) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (coeff, label)) in terms.iter().enumerate() {
        let text = coeff.to_string();
        let (negative, magnitude) = match text.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, text),
        };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if magnitude != "1" {
            out.push_str(&magnitude);
            out.push('*');
        }
        out.push_str(&name(label));
    }
    out
}

fn alpha_table(r: &AlphaReport) -> String {
    let mut out = format!(
        "# alpha basis for the fusion system of {} at p = {}\n# ghost coordinates: {}\n",
        r.ambient,
        r.p,
        r.s_classes.join(" ")
    );
    for a in &r.alphas {
        let ghost: Vec<String> = a.ghost.iter().map(Number::to_string).collect();
        let _ = writeln!(
            out,
            "alpha_{} = {}",
            a.class,
            render_combination(&a.transitive, |l| format!("[S/{l}]"))
        );
        let _ = writeln!(out, "  ghost ({})", ghost.join(", "));
    }
    out
}

fn ideal_name(i: &IdealName, localized: bool) -> String {
    let letter = if localized { "J" } else { "I" };
    format!("{letter}_{{{},{}}}", i.class, i.q)
}

fn ideals_table(r: &IdealsReport) -> String {
    if r.ideals.is_empty() {
        return "no ideals\n".into();
    }
    let ring = if r.localized {
        format!("A(F)_({})", r.p)
    } else {
        "A(F)".to_string()
    };
    let mut out = format!(
        "# prime ideals of {ring} for the fusion system of {} at p = {}\n",
        r.ambient, r.p
    );
    let mut last_q = None;
    for entry in &r.ideals {
        let q = entry.ideal.q;
        if last_q != Some(q) {
            let kind = match q {
                0 => "minimal".to_string(),
                _ => "maximal".to_string(),
            };
            let _ = writeln!(out, "# type {q} ({kind})");
            last_q = Some(q);
        }
        let gens: Vec<String> = entry
            .generators
            .iter()
            .map(|g| render_combination(g, |l| format!("alpha_{l}")))
            .collect();
        let _ = writeln!(out, "{} = <{}>", ideal_name(&entry.ideal, r.localized), gens.join(", "));
    }
    out
}

fn check_table(r: &CheckReport) -> String {
    let mut out = format!("# invariant suite {}\n", r.suite);
    for c in &r.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            let _ = writeln!(out, "{status} {}", c.name);
        } else {
            let _ = writeln!(out, "{status} {}: {}", c.name, c.detail);
        }
    }
    let failed = r.checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(out, "{} checks, {} failed", r.checks.len(), failed);
    out
}
