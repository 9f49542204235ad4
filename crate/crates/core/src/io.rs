//! JSON input formats.
//!
//! Group file: either `{"cayley": [[...]], "labels": [...]}` or
//! `{"degree": d, "perm_generators": [[...], ...], "name": "..."}`, with
//! 0-based indices and permutations given as image lists.
//!
//! Fusion spec: `{"ambient": <group file path or inline group>, "p": 2,
//! "sylow": [...], "labels": [...]}`. `sylow` is optional; its entries are
//! ambient element indices or, for permutation groups, permutations. Their
//! order fixes the element numbering of `S`, and `labels` names those
//! elements.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fusion::{FusionSystem, SylowPin};
use crate::group::{FiniteGroup, Permutation, DEFAULT_ORDER_CAP};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Cayley {
        cayley: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
    Permutations {
        degree: usize,
        perm_generators: Vec<Permutation>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
}

impl GroupFile {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupFile::Cayley { cayley, labels, name } => {
                let g = FiniteGroup::from_cayley(cayley, labels.clone())?;
                Ok(match name {
                    Some(n) => g.with_name(n.clone()),
                    None => g,
                })
            }
            GroupFile::Permutations {
                degree,
                perm_generators,
                name,
            } => {
                let g = FiniteGroup::from_permutations(*degree, perm_generators, DEFAULT_ORDER_CAP)?;
                Ok(match name {
                    Some(n) => g.with_name(n.clone()),
                    None => g,
                })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AmbientRef {
    Inline(GroupFile),
    Path(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Permutation(Permutation),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FusionSpec {
    pub ambient: AmbientRef,
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sylow: Option<Vec<ElementRef>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn parse_error(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Invalid(format!("{}: {e}", path.display()))
}

pub fn read_group_file(path: &Path) -> Result<GroupFile> {
    let text = fs::read_to_string(path).map_err(|e| parse_error(path, e))?;
    serde_json::from_str(&text).map_err(|e| parse_error(path, e))
}

pub fn load_group(path: &Path) -> Result<FiniteGroup> {
    read_group_file(path)?.build().map_err(|e| parse_error(path, e))
}

/// Either kind of input file.
#[derive(Clone, Debug)]
pub enum Input {
    Group(GroupFile),
    Fusion(FusionSpec),
}

pub fn read_input(path: &Path) -> Result<Input> {
    let text = fs::read_to_string(path).map_err(|e| parse_error(path, e))?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
    if value.get("ambient").is_some() {
        Ok(Input::Fusion(serde_json::from_value(value).map_err(|e| parse_error(path, e))?))
    } else {
        Ok(Input::Group(serde_json::from_value(value).map_err(|e| parse_error(path, e))?))
    }
}

impl FusionSpec {
    /// Loads the ambient group, resolving relative paths against `base`.
    pub fn ambient_group(&self, base: &Path) -> Result<FiniteGroup> {
        match &self.ambient {
            AmbientRef::Inline(g) => g.build(),
            AmbientRef::Path(p) => {
                let path: PathBuf = base.join(p);
                load_group(&path)
            }
        }
    }

    pub fn pin(&self, ambient: &FiniteGroup) -> Result<Option<SylowPin>> {
        let Some(members) = &self.sylow else {
            if self.labels.is_some() {
                return Err(Error::Invalid("labels require an explicit sylow member list".into()));
            }
            return Ok(None);
        };
        let members = members
            .iter()
            .map(|m| match m {
                ElementRef::Index(i) if *i < ambient.order() => Ok(*i),
                ElementRef::Index(i) => Err(Error::Invalid(format!("element {i} out of range"))),
                ElementRef::Permutation(p) => ambient
                    .index_of_permutation(p)
                    .ok_or_else(|| Error::Invalid(format!("permutation {p:?} is not in the ambient group"))),
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(Some(SylowPin {
            members,
            labels: self.labels.clone(),
        }))
    }

    pub fn build(&self, base: &Path) -> Result<FusionSystem> {
        let ambient = self.ambient_group(base)?;
        let pin = self.pin(&ambient)?;
        FusionSystem::from_ambient(ambient, self.p, pin.as_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_group_formats() {
        let c: GroupFile = serde_json::from_str(r#"{"cayley": [[0,1],[1,0]], "labels": ["e","a"]}"#).unwrap();
        assert_eq!(c.build().unwrap().label(1), "a");
        let p: GroupFile =
            serde_json::from_str(r#"{"degree": 3, "perm_generators": [[1,2,0]], "name": "C3"}"#).unwrap();
        let g = p.build().unwrap();
        assert_eq!((g.order(), g.name()), (3, Some("C3")));
    }

    #[test]
    fn fusion_spec_with_inline_ambient_and_permutation_pin() {
        let spec: FusionSpec = serde_json::from_str(
            r#"{"ambient": {"degree": 3, "perm_generators": [[1,0,2],[1,2,0]]},
                "p": 2, "sylow": [[0,1,2],[1,0,2]], "labels": ["1","t"]}"#,
        )
        .unwrap();
        let f = spec.build(Path::new(".")).unwrap();
        assert_eq!(f.sylow().order(), 2);
        assert_eq!(f.sylow().label(1), "t");
        assert_eq!(f.class_count(), 2);
    }

    #[test]
    fn labels_without_pin_rejected() {
        let spec: FusionSpec =
            serde_json::from_str(r#"{"ambient": {"cayley": [[0]]}, "p": 2, "labels": ["1"]}"#).unwrap();
        assert!(spec.build(Path::new(".")).is_err());
    }
}
