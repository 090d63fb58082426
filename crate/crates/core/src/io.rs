//! Flat-file formats for spaces, maps and PL circle maps.
//!
//! A space file lists point names and a generating relation:
//!
//! ```json
//! { "points": ["a", "b", "c", "d"], "le": [["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"]] }
//! ```
//!
//! Loading takes the reflexive-transitive closure. Saving writes the points in
//! stored order and every strict relation of the closure, sorted by name, so
//! load-then-save is a fixed point.
//!
//! A map file names its spaces (a path relative to the map file, or an inline
//! space object) and gives the assignment by point name:
//!
//! ```json
//! { "domain": "C4.space", "codomain": "C4.space", "assignment": { "a": "a", "b": "a", "c": "a", "d": "a" } }
//! ```
//!
//! A PL circle map file is `{ "subdivision": 4, "images": [0, 1, 2, 3] }`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::circle::PlCircleMap;
use crate::error::{Error, Result};
use crate::maps::ContinuousMap;
use crate::space::FiniteSpace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub points: Vec<String>,
    #[serde(default)]
    pub le: Vec<(String, String)>,
}

impl SpaceFile {
    pub fn to_space(&self) -> Result<FiniteSpace> {
        FiniteSpace::build(&self.points, &self.le)
    }

    pub fn from_space(space: &FiniteSpace) -> Self {
        let mut le: Vec<(String, String)> = space
            .strict_pairs()
            .into_iter()
            .map(|(x, y)| (space.name(x).to_string(), space.name(y).to_string()))
            .collect();
        le.sort();
        SpaceFile { points: space.names().to_vec(), le }
    }
}

/// A space given by path or inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    Path(String),
    Inline(SpaceFile),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<SpaceRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codomain: Option<SpaceRef>,
    pub assignment: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlMapFile {
    pub subdivision: usize,
    pub images: Vec<i64>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read(path)?).map_err(|source| Error::Json { path: path.to_path_buf(), source })
}

pub fn space_from_str(text: &str) -> Result<FiniteSpace> {
    let file: SpaceFile =
        serde_json::from_str(text).map_err(|e| Error::Parse("space file".into(), e.to_string()))?;
    file.to_space()
}

/// Canonical text of a space file: one relation pair per line, newline-terminated.
pub fn space_to_string(space: &FiniteSpace) -> String {
    let file = SpaceFile::from_space(space);
    let quote = |s: &str| serde_json::to_string(s).expect("string");
    let points: Vec<String> = file.points.iter().map(|p| quote(p)).collect();
    let le: Vec<String> = file.le.iter().map(|(a, b)| format!("    [{}, {}]", quote(a), quote(b))).collect();
    let le = if le.is_empty() { "[]".to_string() } else { format!("[\n{}\n  ]", le.join(",\n")) };
    format!("{{\n  \"points\": [{}],\n  \"le\": {}\n}}\n", points.join(", "), le)
}

pub fn load_space(path: impl AsRef<Path>) -> Result<FiniteSpace> {
    let path = path.as_ref();
    parse::<SpaceFile>(path)?.to_space()
}

pub fn save_space(space: &FiniteSpace, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, space_to_string(space)).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

fn resolve(reference: &SpaceRef, base: &Path) -> Result<FiniteSpace> {
    match reference {
        SpaceRef::Path(p) => load_space(base.join(p)),
        SpaceRef::Inline(file) => file.to_space(),
    }
}

/// Loads a map between the given spaces. Spaces named in the file must
/// match the given ones.
pub fn load_map(path: impl AsRef<Path>, domain: &Arc<FiniteSpace>, codomain: &Arc<FiniteSpace>) -> Result<ContinuousMap> {
    let path = path.as_ref();
    let file: MapFile = parse(path)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
    for (named, given) in [(&file.domain, domain), (&file.codomain, codomain)] {
        if let Some(r) = named {
            if resolve(r, &base)? != **given {
                return Err(Error::SpaceMismatch);
            }
        }
    }
    map_from_assignment(&file.assignment, domain, codomain)
}

/// Loads a map whose file names both of its spaces.
pub fn load_map_standalone(path: impl AsRef<Path>) -> Result<ContinuousMap> {
    let path = path.as_ref();
    let file: MapFile = parse(path)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
    let missing = |what: &str| Error::Parse(path.display().to_string(), format!("no {what} given"));
    let domain = Arc::new(resolve(file.domain.as_ref().ok_or_else(|| missing("domain"))?, &base)?);
    let codomain = Arc::new(resolve(file.codomain.as_ref().ok_or_else(|| missing("codomain"))?, &base)?);
    map_from_assignment(&file.assignment, &domain, &codomain)
}

fn map_from_assignment(
    assignment: &BTreeMap<String, String>,
    domain: &Arc<FiniteSpace>,
    codomain: &Arc<FiniteSpace>,
) -> Result<ContinuousMap> {
    let pairs: Vec<(&str, &str)> = assignment.iter().map(|(x, y)| (x.as_str(), y.as_str())).collect();
    ContinuousMap::from_names(domain.clone(), codomain.clone(), &pairs)
}

pub fn map_to_file(map: &ContinuousMap) -> MapFile {
    MapFile {
        domain: Some(SpaceRef::Inline(SpaceFile::from_space(map.domain()))),
        codomain: Some(SpaceRef::Inline(SpaceFile::from_space(map.codomain()))),
        assignment: map.assignment().into_iter().collect(),
    }
}

pub fn load_pl_map(path: impl AsRef<Path>) -> Result<PlCircleMap> {
    let file: PlMapFile = parse(path.as_ref())?;
    PlCircleMap::new(file.subdivision, file.images)
}
