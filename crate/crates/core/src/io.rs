//! Lattice and diagram files, catalog manifests, and multiplicity strings.
//!
//! Lattice files list vertex labels and proper faces as sorted index arrays:
//!
//! ```json
//! {"vertices": ["a", "b", "c"], "faces": [[0], [0, 1], [1], [1, 2], [2], [0, 2]]}
//! ```
//!
//! A `"facets"` key may replace `"faces"` for simplicial lattices; every subset
//! of a facet is then a face.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::classification::{ClassificationItem, Family};
use crate::error::Error;
use crate::gale::{GaleDiagram, Position};
use crate::lattice::{FaceLattice, ValidationReport};
use crate::shadow::{Shadow, MAX_VERTICES};
use crate::symmetry::{is_primitive, is_proper, is_reducible};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Lattice(#[from] Error),
    #[error("lattice fails validation ({} violations, first: {})", .0.violations.len(), first_violation(.0))]
    Invalid(ValidationReport),
}

fn first_violation(report: &ValidationReport) -> String {
    report
        .violations
        .first()
        .map(|v| format!("{} at {:?}", v.check, v.witnesses))
        .unwrap_or_default()
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeFile {
    vertices: Vec<String>,
    faces: Option<Vec<Vec<usize>>>,
    facets: Option<Vec<Vec<usize>>>,
}

fn check_labels(labels: &[String]) -> Result<(), IoError> {
    if labels.is_empty() {
        return Err(IoError::Parse("\"vertices\" is empty".into()));
    }
    if labels.len() > MAX_VERTICES {
        return Err(IoError::Lattice(Error::Capacity(labels.len())));
    }
    let mut seen = HashSet::new();
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() {
            return Err(IoError::Parse(format!("vertices[{i}] is empty")));
        }
        if !seen.insert(l) {
            return Err(IoError::Parse(format!(
                "vertices[{i}]: duplicate label {l:?}"
            )));
        }
    }
    Ok(())
}

fn parse_sets(key: &str, sets: &[Vec<usize>], n: usize) -> Result<Vec<Shadow>, IoError> {
    let mut seen: IndexMap<Shadow, usize> = IndexMap::new();
    for (i, set) in sets.iter().enumerate() {
        if set.is_empty() {
            return Err(IoError::Parse(format!("{key}[{i}] is empty")));
        }
        if let Some(&v) = set.iter().find(|&&v| v >= n) {
            return Err(IoError::Parse(format!(
                "{key}[{i}]: vertex index {v} out of range 0..{n}"
            )));
        }
        if set.windows(2).any(|w| w[0] >= w[1]) {
            return Err(IoError::Parse(format!(
                "{key}[{i}] is not strictly ascending"
            )));
        }
        let s = Shadow::from_indices(set.iter().copied());
        if s == Shadow::full(n) {
            return Err(IoError::Parse(format!("{key}[{i}] is the full vertex set")));
        }
        if let Some(j) = seen.insert(s, i) {
            return Err(IoError::Parse(format!("{key}[{i}] duplicates {key}[{j}]")));
        }
    }
    Ok(seen.into_keys().collect())
}

/// Parse lattice text. With `raw`, the lattice is built but not validated.
pub fn parse_lattice(text: &str, raw: bool) -> Result<FaceLattice, IoError> {
    let file: LatticeFile =
        serde_json::from_str(text).map_err(|e| IoError::Parse(e.to_string()))?;
    check_labels(&file.vertices)?;
    let n = file.vertices.len();
    let lattice = match (file.faces, file.facets) {
        (Some(faces), None) => {
            FaceLattice::from_shadows(file.vertices, parse_sets("faces", &faces, n)?)?
        }
        (None, Some(facets)) => {
            FaceLattice::from_simplicial_facets(file.vertices, parse_sets("facets", &facets, n)?)?
        }
        _ => {
            return Err(IoError::Parse(
                "exactly one of \"faces\" and \"facets\" is required".into(),
            ))
        }
    };
    if !raw {
        let report = lattice.validate();
        if !report.verdict {
            return Err(IoError::Invalid(report));
        }
    }
    Ok(lattice)
}

pub fn load_lattice(path: &Path, raw: bool) -> Result<FaceLattice, IoError> {
    parse_lattice(&read(path)?, raw).map_err(|e| match e {
        IoError::Parse(msg) => IoError::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn index_array(s: Shadow) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(", "))
}

/// Canonical text: proper faces in lexicographic shadow order, one per line.
pub fn lattice_to_json(l: &FaceLattice) -> String {
    let labels: Vec<String> = l.labels().iter().map(|s| json_string(s)).collect();
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"vertices\": [{}],", labels.join(", ")).unwrap();
    let faces = l.proper_shadows_sorted();
    if faces.is_empty() {
        writeln!(out, "  \"faces\": []").unwrap();
    } else {
        writeln!(out, "  \"faces\": [").unwrap();
        for (i, f) in faces.iter().enumerate() {
            let sep = if i + 1 < faces.len() { "," } else { "" };
            writeln!(out, "    {}{sep}", index_array(*f)).unwrap();
        }
        writeln!(out, "  ]").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

pub fn save_lattice(l: &FaceLattice, path: &Path) -> Result<(), IoError> {
    write(path, &lattice_to_json(l))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramFile {
    order: u32,
    points: IndexMap<String, serde_json::Value>,
}

/// Parse `{"order": 10, "points": {"v1": 0, "v2": "C", ...}}`. Key order is
/// vertex order.
pub fn parse_diagram(text: &str) -> Result<GaleDiagram, IoError> {
    let file: DiagramFile =
        serde_json::from_str(text).map_err(|e| IoError::Parse(e.to_string()))?;
    let mut labels = Vec::with_capacity(file.points.len());
    let mut points = Vec::with_capacity(file.points.len());
    for (label, value) in file.points {
        let p = match &value {
            serde_json::Value::String(s) if s == "C" => Position::Center,
            serde_json::Value::Number(num) => {
                match num.as_u64().and_then(|r| u32::try_from(r).ok()) {
                    Some(r) => Position::Ray(r),
                    None => {
                        return Err(IoError::Parse(format!(
                            "points.{label}: {num} is not a ray index"
                        )))
                    }
                }
            }
            other => {
                return Err(IoError::Parse(format!(
                    "points.{label}: expected a ray index or \"C\", found {other}"
                )))
            }
        };
        labels.push(label);
        points.push(p);
    }
    Ok(GaleDiagram::new(file.order, labels, points)?)
}

pub fn load_diagram(path: &Path) -> Result<GaleDiagram, IoError> {
    parse_diagram(&read(path)?)
}

pub fn diagram_to_json(g: &GaleDiagram) -> String {
    let points: Vec<String> = g
        .labels()
        .iter()
        .zip(g.points())
        .map(|(l, p)| {
            let value = match p {
                Position::Ray(r) => r.to_string(),
                Position::Center => "\"C\"".to_string(),
            };
            format!("{}: {value}", json_string(l))
        })
        .collect();
    format!(
        "{{\"order\": {}, \"points\": {{{}}}}}\n",
        g.order(),
        points.join(", ")
    )
}

pub fn save_diagram(g: &GaleDiagram, path: &Path) -> Result<(), IoError> {
    write(path, &diagram_to_json(g))
}

/// Parse `"a=2,b=1"` into per-vertex multiplicities; unnamed vertices get 1.
pub fn parse_multiplicities(spec: &str, labels: &[String]) -> Result<Vec<usize>, IoError> {
    let mut mult = vec![1usize; labels.len()];
    let mut seen = HashSet::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| IoError::Parse(format!("{part:?}: expected label=count")))?;
        let (name, value) = (name.trim(), value.trim());
        let v = labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| IoError::Parse(format!("unknown vertex {name:?}")))?;
        if !seen.insert(v) {
            return Err(IoError::Parse(format!("vertex {name:?} given twice")));
        }
        mult[v] = value
            .parse()
            .ok()
            .filter(|&k: &usize| k >= 1)
            .ok_or_else(|| {
                IoError::Parse(format!("{name}: {value:?} is not a positive integer"))
            })?;
    }
    Ok(mult)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub file: String,
    #[serde(flatten)]
    pub family: Family,
    pub n: usize,
    pub dim: i32,
    pub excess: usize,
    pub f_vector: Vec<usize>,
    pub simplicial: bool,
    pub neighbourly: bool,
    pub reducible: bool,
    pub proper: bool,
    pub primitive: bool,
}

impl ManifestEntry {
    pub fn describe(file: String, family: Family, l: &FaceLattice) -> ManifestEntry {
        ManifestEntry {
            file,
            family,
            n: l.n(),
            dim: l.dim(),
            excess: l.excess(),
            f_vector: l.f_vector(),
            simplicial: l.is_simplicial(),
            neighbourly: l.is_neighbourly(),
            reducible: is_reducible(l),
            proper: is_proper(l),
            primitive: is_primitive(l),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema: u32,
    pub entries: Vec<ManifestEntry>,
}

/// `JoinTensor(0,0,-1)` becomes `JoinTensor_0_0_m1.json`.
pub fn catalog_file_name(family: &Family) -> String {
    let params: Vec<String> = family
        .params()
        .iter()
        .map(|p| {
            if *p < 0 {
                format!("m{}", -p)
            } else {
                p.to_string()
            }
        })
        .collect();
    format!("{}_{}.json", family.tag(), params.join("_"))
}

/// Write each item as a lattice file plus `manifest.json` into `dir`.
pub fn write_catalog(items: &[ClassificationItem], dir: &Path) -> Result<Manifest, IoError> {
    fs::create_dir_all(dir).map_err(|source| IoError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut manifest = Manifest {
        schema: 1,
        entries: Vec::new(),
    };
    for item in items {
        let file = catalog_file_name(&item.family);
        save_lattice(&item.lattice, &dir.join(&file))?;
        manifest
            .entries
            .push(ManifestEntry::describe(file, item.family, &item.lattice));
    }
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
    write(&dir.join("manifest.json"), &text)?;
    Ok(manifest)
}

pub fn load_manifest(path: &Path) -> Result<Manifest, IoError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| IoError::Parse(format!("{}: {e}", path.display())))
}
