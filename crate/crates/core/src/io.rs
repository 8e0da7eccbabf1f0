//! Reading and writing unitaries as JSON.
//!
//! The format is `{"dim": d, "entries": [[re, im], ...]}` with `d²` row-major
//! entries. Loading enforces the usual unitarity tolerance, so a file that
//! fails the check never becomes a [`DenseUnitary`].

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::DenseUnitary;

#[derive(Serialize, Deserialize)]
struct UnitaryFile {
    dim: usize,
    entries: Vec<[f64; 2]>,
}

/// Parses a unitary from its JSON encoding.
pub fn unitary_from_json(json: &str) -> Result<DenseUnitary> {
    let file: UnitaryFile =
        serde_json::from_str(json).map_err(|e| Error::MalformedJson(e.to_string()))?;
    if file.entries.len() != file.dim * file.dim {
        return Err(Error::MalformedJson(format!(
            "expected {} entries for dim {}, found {}",
            file.dim * file.dim,
            file.dim,
            file.entries.len()
        )));
    }
    let entries = file
        .entries
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    DenseUnitary::new(file.dim, entries)
}

/// Serializes a unitary into the JSON file format.
pub fn unitary_to_json(u: &DenseUnitary) -> String {
    let file = UnitaryFile {
        dim: u.dim(),
        entries: u.entries().iter().map(|z| [z.re, z.im]).collect(),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

/// Loads a unitary from a JSON file on disk.
pub fn load_unitary(path: impl AsRef<Path>) -> Result<DenseUnitary> {
    unitary_from_json(&std::fs::read_to_string(path)?)
}

/// Writes a unitary to a JSON file on disk.
pub fn save_unitary(path: impl AsRef<Path>, u: &DenseUnitary) -> Result<()> {
    Ok(std::fs::write(path, unitary_to_json(u))?)
}
