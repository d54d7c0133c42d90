//! Canonical structure files: UTF-8 JSON with sparse 1-based structure
//! constants and scalars in their exact text form. Writing is canonical, so
//! read-write round trips are byte-identical.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{Matrix, Scalar, Tensor3, Vector};
use crate::structure::{AlgebraStruct, CoalgebraStruct, WeakStructure};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid structure file: {0}")]
    Validation(String),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MultEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Scalar,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComultEntry {
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub c: Scalar,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct StructureFile {
    pub dim: usize,
    pub conductor: u32,
    pub unit: Vec<Scalar>,
    pub mult: Vec<MultEntry>,
    pub comult: Vec<ComultEntry>,
    pub counit: Vec<Scalar>,
    pub antipode: Option<Vec<Scalar>>,
    pub label: String,
}

impl StructureFile {
    pub fn from_structure(h: &WeakStructure) -> StructureFile {
        let n = h.dim();
        let mut mult: Vec<MultEntry> = h
            .algebra
            .mult
            .iter_nonzero()
            .map(|([i, j, k], c)| MultEntry {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                c: c.clone(),
            })
            .collect();
        mult.sort_by_key(|e| (e.i, e.j, e.k));
        let mut comult: Vec<ComultEntry> = h
            .coalgebra
            .comult
            .iter_nonzero()
            .map(|([k, i, j], c)| ComultEntry {
                k: k + 1,
                i: i + 1,
                j: j + 1,
                c: c.clone(),
            })
            .collect();
        comult.sort_by_key(|e| (e.k, e.i, e.j));
        let antipode = h.antipode.as_ref().map(|s| {
            let mut out = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    out.push(s.get(i, j).clone());
                }
            }
            out
        });
        StructureFile {
            dim: n,
            conductor: h.conductor(),
            unit: h.algebra.unit.entries().to_vec(),
            mult,
            comult,
            counit: h.coalgebra.counit.entries().to_vec(),
            antipode,
            label: h.label.clone(),
        }
    }

    pub fn into_structure(self) -> Result<WeakStructure, IoError> {
        let n = self.dim;
        if n == 0 {
            return Err(IoError::Validation("dimension must be positive".into()));
        }
        let check_scalar = |s: &Scalar| -> Result<(), IoError> {
            if s.conductor() != 1 && s.conductor() != self.conductor {
                return Err(IoError::Validation(format!(
                    "scalar {} has conductor {} but the file declares {}",
                    s,
                    s.conductor(),
                    self.conductor
                )));
            }
            Ok(())
        };
        let check_idx = |name: &str, v: usize| -> Result<(), IoError> {
            if v == 0 || v > n {
                return Err(IoError::Validation(format!(
                    "{} index {} out of range 1..={}",
                    name, v, n
                )));
            }
            Ok(())
        };
        if self.unit.len() != n {
            return Err(IoError::Validation(
                "unit vector length must equal dim".into(),
            ));
        }
        if self.counit.len() != n {
            return Err(IoError::Validation(
                "counit vector length must equal dim".into(),
            ));
        }
        let mut mult = Tensor3::zeros(n);
        let mut seen = std::collections::BTreeSet::new();
        for e in &self.mult {
            check_idx("mult", e.i)?;
            check_idx("mult", e.j)?;
            check_idx("mult", e.k)?;
            check_scalar(&e.c)?;
            if !seen.insert((e.i, e.j, e.k)) {
                return Err(IoError::Validation(format!(
                    "duplicate mult entry ({}, {}, {})",
                    e.i, e.j, e.k
                )));
            }
            mult.set(e.i - 1, e.j - 1, e.k - 1, e.c.clone());
        }
        let mut comult = Tensor3::zeros(n);
        let mut seen = std::collections::BTreeSet::new();
        for e in &self.comult {
            check_idx("comult", e.k)?;
            check_idx("comult", e.i)?;
            check_idx("comult", e.j)?;
            check_scalar(&e.c)?;
            if !seen.insert((e.k, e.i, e.j)) {
                return Err(IoError::Validation(format!(
                    "duplicate comult entry ({}, {}, {})",
                    e.k, e.i, e.j
                )));
            }
            comult.set(e.k - 1, e.i - 1, e.j - 1, e.c.clone());
        }
        for s in self.unit.iter().chain(self.counit.iter()) {
            check_scalar(s)?;
        }
        let antipode = match self.antipode {
            None => None,
            Some(flat) => {
                if flat.len() != n * n {
                    return Err(IoError::Validation(format!(
                        "antipode must have {} entries, got {}",
                        n * n,
                        flat.len()
                    )));
                }
                let mut m = Matrix::zeros(n, n);
                for (idx, s) in flat.into_iter().enumerate() {
                    check_scalar(&s)?;
                    m.set(idx / n, idx % n, s);
                }
                Some(m)
            }
        };
        Ok(WeakStructure::new(
            AlgebraStruct::new(mult, Vector::from_entries(self.unit)),
            CoalgebraStruct::new(comult, Vector::from_entries(self.counit)),
            antipode,
            self.label,
        ))
    }
}

/// Canonical JSON text of a structure.
pub fn to_json(h: &WeakStructure) -> String {
    let mut s = serde_json::to_string_pretty(&StructureFile::from_structure(h))
        .expect("structure files always serialize");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<WeakStructure, IoError> {
    let file: StructureFile = serde_json::from_str(text)?;
    file.into_structure()
}

pub fn read_structure(path: &std::path::Path) -> Result<WeakStructure, IoError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| IoError::Validation(format!("{}: {}", path.display(), e)))?;
    from_json(&text)
}

pub fn write_structure(path: &std::path::Path, h: &WeakStructure) -> Result<(), IoError> {
    std::fs::write(path, to_json(h))
        .map_err(|e| IoError::Validation(format!("{}: {}", path.display(), e)))
}

/// Square matrix from a JSON array of rows of scalar strings.
pub fn matrix_from_json(text: &str) -> Result<Matrix, IoError> {
    let rows: Vec<Vec<Scalar>> = serde_json::from_str(text)?;
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(IoError::Validation(
            "matrix must be square and nonempty".into(),
        ));
    }
    Ok(Matrix::from_rows(rows))
}
