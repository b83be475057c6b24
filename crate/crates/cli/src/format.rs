//! JSON file formats: morphisms (`.mmor`), complexes, and relabeling maps.
//!
//! Coefficients are always strings (`"3"`, `"-1/2"`, or a residue mod `p`).
//! Rows and columns are 1-based. Canonical output has sorted keys.

use brt_core::{Field, Generator, GradedComplex, Matrix, Morphism, Multidegree, RawEntry, RawMorphism, RelabelMap};
use serde::{Deserialize, Serialize};

use crate::Failure;

pub const FORMAT_VERSION: u32 = 1;

fn current_version() -> u32 {
    FORMAT_VERSION
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryRecord {
    pub row: usize,
    pub col: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    #[serde(default = "current_version")]
    pub format_version: u32,
    pub field: String,
    pub n: usize,
    #[serde(default)]
    pub vars: Vec<String>,
    pub source_degrees: Vec<Vec<u32>>,
    pub target_degrees: Vec<Vec<u32>>,
    pub entries: Vec<EntryRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorRecord {
    pub degree: Vec<u32>,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiffEntryRecord {
    pub row: usize,
    pub col: usize,
    pub coeff: String,
    pub shift: Vec<u32>,
}

/// `differentials[i]` lists the nonzero entries of the map from level
/// `i + 1` to level `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    #[serde(default = "current_version")]
    pub format_version: u32,
    pub field: String,
    pub n: usize,
    #[serde(default)]
    pub vars: Vec<String>,
    pub levels: Vec<Vec<GeneratorRecord>>,
    pub differentials: Vec<Vec<DiffEntryRecord>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapPair {
    pub from: Vec<u32>,
    pub to: Vec<u32>,
}

fn check_version(v: u32) -> Result<(), Failure> {
    if v != FORMAT_VERSION {
        return Err(Failure::parse(format!("unsupported format_version {v}")));
    }
    Ok(())
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::parse(format!("invalid JSON: {e}")))
}

/// Pretty JSON with keys in sorted order and a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

impl MorphismFile {
    pub fn parse(text: &str) -> Result<Self, Failure> {
        parse_json(text)
    }

    pub fn to_morphism(&self) -> Result<Morphism, Failure> {
        check_version(self.format_version)?;
        let field = Field::parse_name(&self.field).map_err(Failure::from_core_input)?;
        let entries = self
            .entries
            .iter()
            .map(|e| Ok(RawEntry { row: e.row, col: e.col, coeff: field.parse(&e.coeff)? }))
            .collect::<brt_core::Result<Vec<_>>>()
            .map_err(Failure::from_core_input)?;
        let raw = RawMorphism {
            field,
            n: self.n,
            vars: self.vars.clone(),
            source_degrees: self.source_degrees.iter().cloned().map(Multidegree::new).collect(),
            target_degrees: self.target_degrees.iter().cloned().map(Multidegree::new).collect(),
            entries,
        };
        Morphism::validate(raw).map_err(Failure::from_core_input)
    }

    pub fn from_morphism(phi: &Morphism) -> Self {
        let raw = phi.to_raw();
        MorphismFile {
            format_version: FORMAT_VERSION,
            field: raw.field.name(),
            n: raw.n,
            vars: raw.vars,
            source_degrees: raw.source_degrees.iter().map(|d| d.coords().to_vec()).collect(),
            target_degrees: raw.target_degrees.iter().map(|d| d.coords().to_vec()).collect(),
            entries: raw.entries.iter().map(|e| EntryRecord { row: e.row, col: e.col, coeff: e.coeff.to_string() }).collect(),
        }
    }
}

impl ComplexFile {
    pub fn parse(text: &str) -> Result<Self, Failure> {
        parse_json(text)
    }

    /// Rebuilds the complex, checking every stored shift against the
    /// difference of the generator degrees.
    pub fn to_complex(&self) -> Result<GradedComplex, Failure> {
        check_version(self.format_version)?;
        let field = Field::parse_name(&self.field).map_err(Failure::from_core_input)?;
        if self.differentials.len() + 1 != self.levels.len().max(1) {
            return Err(Failure::parse(format!(
                "{} levels need {} differentials, found {}",
                self.levels.len(),
                self.levels.len().saturating_sub(1),
                self.differentials.len()
            )));
        }
        let levels: Vec<Vec<Generator>> = self
            .levels
            .iter()
            .map(|l| l.iter().map(|g| Generator::new(Multidegree::new(g.degree.clone()), g.label.clone())).collect())
            .collect();
        let mut diffs = Vec::with_capacity(self.differentials.len());
        for (k, entries) in self.differentials.iter().enumerate() {
            let level = k + 1;
            let (rows, cols) = (&levels[k], &levels[level]);
            let mut m = Matrix::zeros(field, rows.len(), cols.len());
            let mut seen = std::collections::BTreeSet::new();
            for e in entries {
                if e.row == 0 || e.col == 0 || e.row > rows.len() || e.col > cols.len() {
                    return Err(Failure::parse(format!("differential {level}: entry ({}, {}) is out of range", e.row, e.col)));
                }
                if !seen.insert((e.row, e.col)) {
                    return Err(Failure::parse(format!("differential {level}: entry ({}, {}) is given twice", e.row, e.col)));
                }
                let coeff = field.parse(&e.coeff).map_err(Failure::from_core_input)?;
                let shift = cols[e.col - 1].degree.checked_sub(&rows[e.row - 1].degree);
                if shift.as_ref().map(Multidegree::coords) != Some(e.shift.as_slice()) {
                    return Err(Failure::parse(format!(
                        "differential {level}: entry ({}, {}) has shift {:?}, but the degrees force {}",
                        e.row,
                        e.col,
                        e.shift,
                        shift.map_or_else(|| "a negative shift".to_string(), |s| s.to_string())
                    )));
                }
                m.set(e.row - 1, e.col - 1, coeff);
            }
            diffs.push(m);
        }
        GradedComplex::new(field, self.n, levels, diffs).map_err(Failure::from_core_input)
    }

    pub fn from_complex(x: &GradedComplex, vars: &[String]) -> Self {
        let levels = x
            .levels()
            .iter()
            .map(|l| l.iter().map(|g| GeneratorRecord { degree: g.degree.coords().to_vec(), label: g.label.clone() }).collect())
            .collect();
        let differentials = x
            .differentials()
            .iter()
            .enumerate()
            .map(|(k, d)| {
                d.nonzero_entries()
                    .map(|(row, col, c)| DiffEntryRecord {
                        row: row + 1,
                        col: col + 1,
                        coeff: c.to_string(),
                        shift: x.shift(k + 1, row, col).expect("homogeneous").coords().to_vec(),
                    })
                    .collect()
            })
            .collect();
        ComplexFile {
            format_version: FORMAT_VERSION,
            field: x.field().name(),
            n: x.n(),
            vars: vars.to_vec(),
            levels,
            differentials,
        }
    }
}

pub fn parse_map(text: &str) -> Result<RelabelMap, Failure> {
    let pairs: Vec<MapPair> = parse_json(text)?;
    RelabelMap::new(pairs.into_iter().map(|p| (Multidegree::new(p.from), Multidegree::new(p.to)))).map_err(Failure::from_core_input)
}

pub fn map_to_pairs(f: &RelabelMap) -> Vec<MapPair> {
    f.pairs().map(|(a, b)| MapPair { from: a.coords().to_vec(), to: b.coords().to_vec() }).collect()
}
