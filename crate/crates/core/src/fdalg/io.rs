//! JSON formats for algebras and operators.
//!
//! Algebra file:
//! `{"dim": d, "context": "omega"|"omega2"|"omega3", "nops": k,
//!   "ops": [{"family": "...", "index": i, "table": [[a, b, c, "p/q"], ...]}]}`
//! with 1-based indices and rationals as strings, so nothing is rounded.
//!
//! Operator file: `{"dim": d, "matrix": [["p/q", ...], ...]}`, row-major;
//! the operator acts on columns, R(e_j) = sum_i M[i][j] e_i.
//!
//! Both accept and emit an optional `meta` object for provenance.

use super::{FDAlgebra, LinearOperator};
use crate::doubling::BarQuotient;
use crate::error::Error;
use crate::parse_rational;
use crate::terms::{Context, OpFamily, OpSymbol, Signature};
use crate::Q;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

/// Provenance header carried by output files.
pub type Meta = BTreeMap<String, serde_json::Value>;

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    dim: usize,
    context: String,
    nops: usize,
    ops: Vec<OpEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bar_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    projection: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<Meta>,
}

#[derive(Serialize, Deserialize)]
struct OpEntry {
    family: String,
    index: usize,
    table: Vec<(usize, usize, usize, String)>,
}

#[derive(Serialize, Deserialize)]
struct OperatorFile {
    dim: usize,
    matrix: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<Meta>,
}

fn algebra_to_file(a: &FDAlgebra, meta: Option<Meta>) -> AlgebraFile {
    let sig = a.signature();
    let mut ops = Vec::new();
    for op in sig.ops() {
        let table = a.table(op).expect("declared operation");
        let rows: Vec<(usize, usize, usize, String)> = table
            .iter()
            .map(|(x, y, c, v)| (x + 1, y + 1, c + 1, v.to_string()))
            .collect();
        ops.push(OpEntry {
            family: op.family.name().to_string(),
            index: op.index,
            table: rows,
        });
    }
    AlgebraFile {
        dim: a.dim(),
        context: sig.context.name().to_string(),
        nops: sig.nops,
        ops,
        bar_dim: None,
        projection: None,
        meta,
    }
}

fn algebra_from_file(file: AlgebraFile) -> Result<FDAlgebra, Error> {
    let context = Context::from_name(&file.context)
        .ok_or_else(|| Error::invalid(format!("unknown context `{}`", file.context)))?;
    let sig = Signature::new(file.nops, context);
    let mut a = FDAlgebra::new(file.dim, sig);
    for entry in file.ops {
        let family = OpFamily::from_name(&entry.family)
            .ok_or_else(|| Error::invalid(format!("unknown family `{}`", entry.family)))?;
        let op = OpSymbol::new(family, entry.index);
        if !sig.allows(op) {
            return Err(Error::invalid(format!(
                "operation {op} not allowed by signature {sig}"
            )));
        }
        for (x, y, c, v) in entry.table {
            if x < 1 || y < 1 || c < 1 || x > file.dim || y > file.dim || c > file.dim {
                return Err(Error::invalid(format!(
                    "structure constant index out of range in {op}: ({x},{y},{c})"
                )));
            }
            let value = parse_rational(&v)?;
            if value.is_zero() {
                return Err(Error::invalid(format!(
                    "explicit zero entry in table of {op} at ({x},{y},{c})"
                )));
            }
            a.set(op, x, y, c, value);
        }
    }
    Ok(a)
}

pub fn write_algebra(path: impl AsRef<Path>, a: &FDAlgebra, meta: Option<Meta>) -> Result<(), Error> {
    let file = algebra_to_file(a, meta);
    std::fs::write(path, serde_json::to_string_pretty(&file)? + "\n")?;
    Ok(())
}

pub fn read_algebra(path: impl AsRef<Path>) -> Result<FDAlgebra, Error> {
    let text = std::fs::read_to_string(path)?;
    let file: AlgebraFile = serde_json::from_str(&text)?;
    algebra_from_file(file)
}

/// Writes the hat algebra of a bar quotient together with the quotient data.
pub fn write_bar_quotient(
    path: impl AsRef<Path>,
    bq: &BarQuotient,
    meta: Option<Meta>,
) -> Result<(), Error> {
    let mut file = algebra_to_file(&bq.hat, meta);
    file.bar_dim = Some(bq.bar_dim);
    file.projection = Some(
        bq.projection
            .iter()
            .map(|row| row.iter().map(Q::to_string).collect())
            .collect(),
    );
    std::fs::write(path, serde_json::to_string_pretty(&file)? + "\n")?;
    Ok(())
}

pub fn write_operator(
    path: impl AsRef<Path>,
    r: &LinearOperator,
    meta: Option<Meta>,
) -> Result<(), Error> {
    let file = OperatorFile {
        dim: r.dim(),
        matrix: r
            .matrix()
            .iter()
            .map(|row| row.iter().map(Q::to_string).collect())
            .collect(),
        meta,
    };
    std::fs::write(path, serde_json::to_string_pretty(&file)? + "\n")?;
    Ok(())
}

pub fn read_operator(path: impl AsRef<Path>) -> Result<LinearOperator, Error> {
    let text = std::fs::read_to_string(path)?;
    let file: OperatorFile = serde_json::from_str(&text)?;
    if file.matrix.len() != file.dim {
        return Err(Error::invalid("operator matrix does not match declared dim"));
    }
    let mut rows = Vec::with_capacity(file.dim);
    for row in &file.matrix {
        if row.len() != file.dim {
            return Err(Error::invalid("operator matrix is not square"));
        }
        rows.push(row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<Q>, _>>()?);
    }
    LinearOperator::from_matrix(rows)
}
