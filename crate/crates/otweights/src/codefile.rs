//! The on-disk code format: a small JSON document giving the field, a
//! matrix, whether it generates the code or checks it, and an optional
//! variable order.
//!
//! ```json
//! {
//!   "name": "ternary-733",
//!   "field": 3,
//!   "kind": "generator",
//!   "matrix": [[1, 0, 0, 1, 1, 1, 1], [0, 1, 0, 0, 1, 1, 0], [0, 0, 1, 0, 0, 2, 1]],
//!   "order": [1, 2, 3, 4, 5, 6, 7]
//! }
//! ```
//!
//! Entries are arbitrary integers reduced mod `field`; `order` lists the
//! variable indices from greatest to least priority and defaults to 1..n.

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::DenseMatrix;
use crate::poly::TermOrder;
use serde::{Deserialize, Serialize};

/// Hard bounds on accepted files; everything downstream enumerates subsets
/// of the columns, so absurd shapes are rejected at the door.
const MAX_SIDE: usize = 64;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: u64,
    pub kind: CodeFileKind,
    pub matrix: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeFileKind {
    Generator,
    ParityCheck,
}

/// A parsed file: the code plus the requested variable order.
#[derive(Debug, Clone)]
pub struct LoadedCode {
    pub code: LinearCode,
    pub order: TermOrder,
}

pub fn load(path: &std::path::Path) -> Result<LoadedCode> {
    let bytes = std::fs::read(path)?;
    load_from_slice(&bytes)
}

/// Parses and validates a code file from raw bytes. Never panics on
/// malformed input; every defect maps to a descriptive error.
pub fn load_from_slice(bytes: &[u8]) -> Result<LoadedCode> {
    let file: CodeFile = serde_json::from_slice(bytes)?;
    realize(&file)
}

pub fn realize(file: &CodeFile) -> Result<LoadedCode> {
    let field = PrimeField::new(file.field)?;
    let rows = file.matrix.len();
    if rows == 0 || file.matrix[0].is_empty() {
        return Err(Error::BadCodeFile("matrix must be nonempty".into()));
    }
    let cols = file.matrix[0].len();
    if file.matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::BadCodeFile("matrix rows have unequal lengths".into()));
    }
    if rows > MAX_SIDE || cols > MAX_SIDE {
        return Err(Error::BadCodeFile(format!(
            "matrix exceeds the {MAX_SIDE}x{MAX_SIDE} limit"
        )));
    }
    let matrix = DenseMatrix::from_rows(field, &file.matrix);
    if matrix.rank() != rows {
        return Err(Error::BadCodeFile(
            "matrix must have full row rank after reduction mod the field".into(),
        ));
    }
    let code = match file.kind {
        CodeFileKind::Generator => LinearCode::new(matrix)?,
        CodeFileKind::ParityCheck => {
            // The code is the kernel of the check matrix; the canonical
            // kernel basis serves as its generator matrix.
            let kernel = matrix.kernel_basis();
            if kernel.is_empty() {
                return Err(Error::BadCodeFile(
                    "parity-check matrix has a zero kernel: the code is trivial".into(),
                ));
            }
            LinearCode::new(DenseMatrix::from_residue_rows(field, &kernel))?
        }
    };
    let n = code.length();
    let order = match &file.order {
        None => TermOrder::standard(n),
        Some(listed) => {
            if listed.len() != n {
                return Err(Error::BadCodeFile(format!(
                    "order must list all {n} variables"
                )));
            }
            TermOrder::from_one_based(listed)?
        }
    };
    let code = match &file.name {
        Some(name) => code.with_name(name.clone()),
        None => code,
    };
    Ok(LoadedCode { code, order })
}
