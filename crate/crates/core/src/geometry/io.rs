//! JSON schema for [`VarietyData`].
//!
//! ```json
//! {"name": "p1", "dim": 1, "omega_order": 0,
//!  "omega_tables": {"0": [[1, 0], [0, 1]]},
//!  "line_bundles": {"O": {"1": [[1, 0], [0, 1]]}}}
//! ```
//!
//! Tables are dense `(d+1) × (d+1)` matrices with rows `p` and columns `q`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{hodge_table_from_rows, hodge_table_rows, HodgeTable, VarietyData};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VarietyFile {
    name: String,
    dim: usize,
    omega_order: usize,
    omega_tables: BTreeMap<String, Vec<Vec<u64>>>,
    #[serde(default)]
    line_bundles: BTreeMap<String, BTreeMap<String, Vec<Vec<u64>>>>,
}

fn parse_rows(rows: &[Vec<u64>], dim: usize, what: &str) -> Result<HodgeTable> {
    if rows.len() != dim + 1 || rows.iter().any(|r| r.len() != dim + 1) {
        return Err(Error::InvalidVariety(format!("{what}: expected a {0}x{0} matrix", dim + 1)));
    }
    Ok(hodge_table_from_rows(rows))
}

fn parse_key<T: std::str::FromStr>(key: &str, what: &str) -> Result<T> {
    key.parse().map_err(|_| Error::InvalidVariety(format!("{what}: bad key `{key}`")))
}

pub fn variety_from_json(text: &str) -> Result<VarietyData> {
    let file: VarietyFile = serde_json::from_str(text)?;
    let mut omega = BTreeMap::new();
    for (key, rows) in &file.omega_tables {
        let m: i64 = parse_key(key, "omega_tables")?;
        omega.insert(m, parse_rows(rows, file.dim, &format!("omega_tables[{key}]"))?);
    }
    let mut bundles = BTreeMap::new();
    for (label, tables) in &file.line_bundles {
        let mut parsed = BTreeMap::new();
        for (key, rows) in tables {
            let k: usize = parse_key(key, &format!("line_bundles[{label}]"))?;
            parsed.insert(k, parse_rows(rows, file.dim, &format!("line_bundles[{label}][{key}]"))?);
        }
        bundles.insert(label.clone(), parsed);
    }
    VarietyData::new(file.name, file.dim, file.omega_order, omega, bundles)
}

pub fn variety_to_json(x: &VarietyData) -> Result<String> {
    let mut omega_tables = BTreeMap::new();
    for (m, t) in x.omega_tables() {
        omega_tables.insert(m.to_string(), hodge_table_rows(t, x.dim())?);
    }
    let mut line_bundles = BTreeMap::new();
    for (label, tables) in x.line_bundles() {
        let mut out = BTreeMap::new();
        for (k, t) in tables {
            out.insert(k.to_string(), hodge_table_rows(t, x.dim())?);
        }
        line_bundles.insert(label.clone(), out);
    }
    let file = VarietyFile {
        name: x.name().to_string(),
        dim: x.dim(),
        omega_order: x.omega_order(),
        omega_tables,
        line_bundles,
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

pub fn load_variety(path: impl AsRef<Path>) -> Result<VarietyData> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    variety_from_json(&text)
}

pub fn save_variety(x: &VarietyData, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, variety_to_json(x)?).map_err(|source| Error::Io { path: path.display().to_string(), source })
}
