//! The example inputs shipped in `data/`, embedded so the self-test suite
//! runs from any working directory.

use fusion_burnside::io::{AmbientRef, FusionSpec, GroupFile};
use fusion_burnside::{Error, FiniteGroup, FusionSystem, Result};

pub const FILES: [(&str, &str); 6] = [
    ("d8.json", include_str!("../data/d8.json")),
    ("s4.json", include_str!("../data/s4.json")),
    ("a6.json", include_str!("../data/a6.json")),
    ("d8-inner.json", include_str!("../data/d8-inner.json")),
    ("s4-d8.json", include_str!("../data/s4-d8.json")),
    ("a6-d8.json", include_str!("../data/a6-d8.json")),
];

fn text(name: &str) -> Result<&'static str> {
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Invalid(format!("no bundled file {name}")))
}

pub fn group(name: &str) -> Result<FiniteGroup> {
    let file: GroupFile = serde_json::from_str(text(name)?).map_err(|e| Error::Invalid(format!("{name}: {e}")))?;
    file.build()
}

pub fn fusion(name: &str) -> Result<FusionSystem> {
    let spec: FusionSpec = serde_json::from_str(text(name)?).map_err(|e| Error::Invalid(format!("{name}: {e}")))?;
    let ambient = match &spec.ambient {
        AmbientRef::Inline(g) => g.build()?,
        AmbientRef::Path(p) => group(p)?,
    };
    let pin = spec.pin(&ambient)?;
    FusionSystem::from_ambient(ambient, spec.p, pin.as_ref())
}

/// The three fusion systems on the bundled `D8`: inner, from `S4`, from `A6`.
pub fn d8_systems() -> Result<Vec<(&'static str, FusionSystem)>> {
    Ok(vec![
        ("inner", fusion("d8-inner.json")?),
        ("S4", fusion("s4-d8.json")?),
        ("A6", fusion("a6-d8.json")?),
    ])
}
