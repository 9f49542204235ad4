//! One CLI invocation: load inputs, compute, render.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use fusion_burnside::ideals::{enumerate_primes, generators};
use fusion_burnside::io::{self, Input};
use fusion_burnside::{
    compute_alpha_basis, BigInt, BurnsideElement, BurnsideRing, Error, FiniteGroup, FusionSystem, PLocal, RingKind,
    Scalar, SylowPin,
};
use serde::Deserialize;

use crate::checks;
use crate::report::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Marks,
    Subgroups,
    Fusion,
    Alpha,
    Ideals,
    Check,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JobSpec {
    pub command: Command,
    /// Group file or fusion spec; the suite name for `check`.
    pub input: Option<PathBuf>,
    pub ambient: Option<PathBuf>,
    pub p: Option<u64>,
    pub primes: Vec<u64>,
    pub localized: bool,
    pub format: Format,
    pub sylow: Option<Vec<usize>>,
    pub labels: Option<PathBuf>,
    pub all: bool,
}

impl JobSpec {
    pub fn new(command: Command) -> Self {
        JobSpec {
            command,
            input: None,
            ambient: None,
            p: None,
            primes: Vec::new(),
            localized: false,
            format: Format::Table,
            sylow: None,
            labels: None,
            all: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub enum JobError {
    /// Bad input or flags; exit code 1.
    Validation(String),
    /// A computed result failed its own consistency checks; exit code 2.
    Internal(String),
}

impl From<Error> for JobError {
    fn from(e: Error) -> Self {
        match e {
            Error::NoSolution { .. } => JobError::Internal(e.to_string()),
            other => JobError::Validation(other.to_string()),
        }
    }
}

type JobResult<T> = std::result::Result<T, JobError>;

pub fn run(spec: &JobSpec) -> Outcome {
    match compute(spec) {
        Ok(report) => {
            let code = match &report {
                Report::Check(c) if !c.passed() => 2,
                _ => 0,
            };
            Outcome {
                code,
                stdout: emit_report(&report, spec.format),
                stderr: String::new(),
            }
        }
        Err(JobError::Validation(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(JobError::Internal(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("internal error: {msg}\n"),
        },
    }
}

pub fn compute(spec: &JobSpec) -> JobResult<Report> {
    match spec.command {
        Command::Marks => {
            let ring = BurnsideRing::new(load_group(spec)?)?;
            Ok(Report::Marks(marks_report(&ring)))
        }
        Command::Subgroups => {
            let ring = BurnsideRing::new(load_group(spec)?)?;
            Ok(Report::Subgroups(subgroups_report(&ring)))
        }
        Command::Fusion => Ok(Report::Fusion(fusion_report(&load_fusion(spec)?))),
        Command::Alpha => Ok(Report::Alpha(alpha_report(&load_fusion(spec)?)?)),
        Command::Ideals => Ok(Report::Ideals(ideals_report(
            &load_fusion(spec)?,
            spec.localized,
            &spec.primes,
        )?)),
        Command::Check => {
            let suite = spec
                .input
                .as_ref()
                .map_or_else(|| "d8-suite".to_string(), |p| p.display().to_string());
            Ok(Report::Check(checks::run_suite(&suite, spec.all)?))
        }
    }
}

/// Labels given as a list (in element or pin order) or as a map from
/// element index to label.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum LabelFile {
    List(Vec<String>),
    Map(BTreeMap<String, String>),
}

fn with_context(path: &Path, e: impl std::fmt::Display) -> JobError {
    JobError::Validation(format!("{}: {e}", path.display()))
}

fn read_labels(path: &Path) -> JobResult<LabelFile> {
    let text = fs::read_to_string(path).map_err(|e| with_context(path, e))?;
    serde_json::from_str(&text).map_err(|e| with_context(path, e))
}

/// Labels for the elements `members` (indices into `group`).
fn resolve_labels(file: &LabelFile, group: &FiniteGroup, members: &[usize]) -> JobResult<Vec<String>> {
    match file {
        LabelFile::List(list) if list.len() == members.len() => Ok(list.clone()),
        LabelFile::List(list) => Err(JobError::Validation(format!(
            "{} labels for {} elements",
            list.len(),
            members.len()
        ))),
        LabelFile::Map(map) => Ok(members
            .iter()
            .map(|&m| map.get(&m.to_string()).cloned().unwrap_or_else(|| group.label(m)))
            .collect()),
    }
}

fn require_input(spec: &JobSpec) -> JobResult<&Path> {
    spec.input
        .as_deref()
        .ok_or_else(|| JobError::Validation("missing input file".into()))
}

fn base_dir(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

/// The group for `marks` and `subgroups`: a group file (optionally
/// restricted to `--sylow` members) or the Sylow subgroup of a fusion spec.
fn load_group(spec: &JobSpec) -> JobResult<FiniteGroup> {
    let path = require_input(spec)?;
    let labels = spec.labels.as_deref().map(read_labels).transpose()?;
    match io::read_input(path)? {
        Input::Fusion(_) => {
            let f = load_fusion(spec)?;
            Ok(f.sylow().clone())
        }
        Input::Group(file) => {
            let g = file.build().map_err(|e| with_context(path, e))?;
            match &spec.sylow {
                Some(members) => {
                    let mut sorted = members.clone();
                    sorted.sort_unstable();
                    let sub = g.subgroup(&sorted)?;
                    let (h, _) = g.subgroup_as_group(&sub, Some(members))?;
                    match labels {
                        Some(l) => Ok(h.with_labels(resolve_labels(&l, &g, members)?)?),
                        None => Ok(h),
                    }
                }
                None => match labels {
                    Some(l) => {
                        let all: Vec<usize> = g.elements().collect();
                        let names = resolve_labels(&l, &g, &all)?;
                        Ok(g.with_labels(names)?)
                    }
                    None => Ok(g),
                },
            }
        }
    }
}

fn prime_power_base(n: usize) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p as u64)
}

fn pin_from_flags(spec: &JobSpec, ambient: &FiniteGroup) -> JobResult<Option<SylowPin>> {
    let labels = spec.labels.as_deref().map(read_labels).transpose()?;
    match (&spec.sylow, labels) {
        (Some(members), labels) => {
            if let Some(&bad) = members.iter().find(|&&m| m >= ambient.order()) {
                return Err(JobError::Validation(format!("element {bad} out of range")));
            }
            let labels = labels.map(|l| resolve_labels(&l, ambient, members)).transpose()?;
            Ok(Some(SylowPin {
                members: members.clone(),
                labels,
            }))
        }
        (None, Some(_)) => Err(JobError::Validation("--labels requires --sylow".into())),
        (None, None) => Ok(None),
    }
}

/// The fusion system for `fusion`, `alpha` and `ideals`: `--ambient` with
/// `--p`, a fusion spec, or the inner system of a group file.
fn load_fusion(spec: &JobSpec) -> JobResult<FusionSystem> {
    if let Some(path) = &spec.ambient {
        let g = io::load_group(path)?;
        let p = spec
            .p
            .ok_or_else(|| JobError::Validation("--ambient needs --p".into()))?;
        let pin = pin_from_flags(spec, &g)?;
        return Ok(FusionSystem::from_ambient(g, p, pin.as_ref())?);
    }
    let path = require_input(spec)?;
    match io::read_input(path)? {
        Input::Fusion(mut fs) => {
            if let Some(p) = spec.p {
                if p != fs.p {
                    return Err(with_context(path, format!("--p {p} conflicts with p = {}", fs.p)));
                }
            }
            let ambient = fs.ambient_group(base_dir(path)).map_err(|e| with_context(path, e))?;
            if spec.sylow.is_some() || spec.labels.is_some() {
                fs.sylow = None;
                fs.labels = None;
                let pin = pin_from_flags(spec, &ambient)?;
                return Ok(FusionSystem::from_ambient(ambient, fs.p, pin.as_ref())?);
            }
            let pin = fs.pin(&ambient).map_err(|e| with_context(path, e))?;
            Ok(FusionSystem::from_ambient(ambient, fs.p, pin.as_ref()).map_err(|e| with_context(path, e))?)
        }
        Input::Group(file) => {
            let g = file.build().map_err(|e| with_context(path, e))?;
            let p = match spec.p {
                Some(p) => p,
                None => prime_power_base(g.order()).ok_or_else(|| {
                    JobError::Validation(format!(
                        "{}: order {} is not a prime power; pass --ambient or --p",
                        path.display(),
                        g.order()
                    ))
                })?,
            };
            if spec.sylow.is_some() || spec.labels.is_some() {
                let pin = pin_from_flags(spec, &g)?;
                return Ok(FusionSystem::from_ambient(g, p, pin.as_ref())?);
            }
            Ok(FusionSystem::inner(g, p)?)
        }
    }
}

pub fn marks_report(ring: &BurnsideRing) -> MarksReport {
    MarksReport {
        group: ring.group().name().unwrap_or("G").to_string(),
        classes: ring.labels(),
        matrix: ring.table_of_marks().rows().to_vec(),
    }
}

pub fn subgroups_report(ring: &BurnsideRing) -> SubgroupsReport {
    let g = ring.group();
    let classes = (0..ring.rank())
        .map(|c| {
            let rep = ring.classes().rep(c);
            SubgroupClass {
                label: ring.label(c),
                order: rep.order(),
                size: ring.classes().class_size(c),
                normalizer_order: g.normalizer(rep).order(),
                members: rep.members().iter().map(|&x| g.label(x)).collect(),
            }
        })
        .collect();
    SubgroupsReport {
        group: g.name().unwrap_or("G").to_string(),
        classes,
    }
}

pub fn fusion_report(f: &FusionSystem) -> FusionReport {
    let n = f.class_count();
    let ring = f.ring();
    let strictly_below = |d: usize, c: usize| d != c && f.f_subconj(d, c);
    let classes = (0..n)
        .map(|c| {
            let covers = (0..n)
                .filter(|&d| strictly_below(d, c) && !(0..n).any(|e| strictly_below(d, e) && strictly_below(e, c)))
                .map(|d| f.label(d))
                .collect();
            FusionClass {
                label: f.label(c),
                order: ring.classes().rep(f.fully_normalized(c)).order(),
                s_classes: f.s_classes(c).iter().map(|&j| ring.label(j)).collect(),
                below: covers,
            }
        })
        .collect();
    FusionReport {
        ambient: f.ambient_name().to_string(),
        p: f.p(),
        sylow_order: f.sylow().order(),
        classes,
    }
}

pub fn alpha_report(f: &FusionSystem) -> JobResult<AlphaReport> {
    let b = compute_alpha_basis(f)?;
    let ring = f.ring();
    let alphas = (0..f.class_count())
        .map(|c| AlphaEntry {
            class: f.label(c),
            transitive: b.alpha(c).terms().map(|(j, v)| (Number::from(v), ring.label(j))).collect(),
            ghost: b.marks()[c].iter().map(Number::from).collect(),
        })
        .collect();
    Ok(AlphaReport {
        ambient: f.ambient_name().to_string(),
        p: f.p(),
        s_classes: ring.labels(),
        alphas,
    })
}

fn terms<T: Scalar>(f: &FusionSystem, x: &BurnsideElement<T>) -> Vec<Term> {
    x.terms()
        .map(|(c, v)| (Number::from(&v.to_rational()), f.label(c)))
        .collect()
}

pub fn ideals_report(f: &FusionSystem, localized: bool, primes: &[u64]) -> JobResult<IdealsReport> {
    let b = compute_alpha_basis(f)?;
    let (ring, ring_name) = if localized {
        (RingKind::PLocal, format!("Z_({})", f.p()))
    } else {
        (RingKind::Integral, "Z".to_string())
    };
    let ideals = enumerate_primes(f, ring, primes)?
        .into_iter()
        .map(|ideal| {
            let generators = if localized {
                generators::<PLocal>(f, &b, &ideal).gens.iter().map(|g| terms(f, g)).collect()
            } else {
                generators::<BigInt>(f, &b, &ideal).gens.iter().map(|g| terms(f, g)).collect()
            };
            IdealEntry {
                ideal: IdealName {
                    class: f.label(ideal.f_class()),
                    q: ideal.q(),
                    ring: ring_name.clone(),
                },
                generators,
            }
        })
        .collect();
    Ok(IdealsReport {
        ambient: f.ambient_name().to_string(),
        p: f.p(),
        localized,
        ideals,
    })
}
