//! JSON interchange documents.
//!
//! Every document rejects unknown fields. Maps are `BTreeMap`s and arrays are
//! emitted in canonical order, so serializing the same value twice yields the
//! same bytes.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellRecord {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

impl CellRecord {
    pub fn new(id: impl Into<String>, src: impl Into<String>, tgt: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            src: src.into(),
            tgt: tgt.into(),
        }
    }
}

/// One entry of a 1-cell composition table: `result = g ∘ f` (f first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Comp1Entry {
    pub f: String,
    pub g: String,
    pub result: String,
}

/// One entry of a 2-cell composition table. For `vcomp` the result is
/// `beta · alpha` (alpha first); for `hcomp` it is `beta ∗ alpha` where
/// alpha lies over `A → B` and beta over `B → C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Comp2Entry {
    pub alpha: String,
    pub beta: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoCatFile {
    pub objects: Vec<String>,
    pub one_cells: Vec<CellRecord>,
    pub id1: BTreeMap<String, String>,
    pub comp1: Vec<Comp1Entry>,
    pub two_cells: Vec<CellRecord>,
    pub id2: BTreeMap<String, String>,
    pub vcomp: Vec<Comp2Entry>,
    pub hcomp: Vec<Comp2Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub objects: Vec<String>,
    pub arrows: Vec<CellRecord>,
    pub identities: BTreeMap<String, String>,
    pub comp: Vec<Comp1Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorEntry {
    pub level: usize,
    pub index: usize,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SSetFile {
    pub simplices: Vec<Vec<String>>,
    pub faces: Vec<OperatorEntry>,
    pub degens: Vec<OperatorEntry>,
    pub coskeletal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub elements: Vec<String>,
    pub unit: String,
    pub mult: Vec<(String, String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inv: Option<BTreeMap<String, String>>,
}

/// Either a path to another document (relative to the referring file) or the
/// document itself, inline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FileRef<T> {
    Path(String),
    Inline(Box<T>),
}

impl<T: DeserializeOwned + Clone> FileRef<T> {
    /// Loads the referenced document. Returns it together with the directory
    /// that relative references inside it resolve against.
    pub fn load(&self, base: &Path) -> Result<(T, PathBuf), LoadError> {
        match self {
            FileRef::Inline(v) => Ok(((**v).clone(), base.to_path_buf())),
            FileRef::Path(p) => {
                let path = base.join(p);
                let doc = read_json(&path)?;
                let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
                Ok((doc, dir))
            }
        }
    }
}

pub type FamilyFile = BTreeMap<String, FileRef<GroupFile>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SigmaEntry {
    pub f: String,
    pub g: String,
    pub two_cell: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaxFunctorFile {
    pub dom: FileRef<TwoCatFile>,
    pub cod: FileRef<TwoCatFile>,
    #[serde(rename = "F0")]
    pub f0: BTreeMap<String, String>,
    #[serde(rename = "F1")]
    pub f1: BTreeMap<String, String>,
    #[serde(rename = "F2")]
    pub f2: BTreeMap<String, String>,
    pub sigma: Vec<SigmaEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaxFunctorListFile {
    pub count: usize,
    pub functors: Vec<LaxFunctorFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SMapFile {
    pub dom: FileRef<SSetFile>,
    pub cod: FileRef<SSetFile>,
    pub phi0: BTreeMap<String, String>,
    pub phi1: BTreeMap<String, String>,
    pub phi2: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi3: Option<BTreeMap<String, String>>,
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| LoadError::Json {
        path: path.to_path_buf(),
        source,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("interchange documents serialize");
    s.push('\n');
    s
}
