//! CSV row types and their readers.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};
use tensile_domain::{DomainBoundary, Regime};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowKind {
    Curve,
    Vertex,
    Asymptote,
}

/// One row of the long-format boundary CSV. Empty cells stand for values
/// that do not apply to the row kind.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryRow {
    pub kind: RowKind,
    pub k_v: f64,
    pub lambda1: f64,
    pub lambda2: Option<f64>,
    pub t1: Option<f64>,
    pub t2_residual: Option<f64>,
}

/// Flattens a boundary into rows: curve samples, then vertices, then the
/// asymptote if any.
pub fn boundary_rows(b: &DomainBoundary, vertex_stress: &[(f64, f64)]) -> Vec<BoundaryRow> {
    let curve = b.samples.iter().map(|s| BoundaryRow {
        kind: RowKind::Curve,
        k_v: b.k_v,
        lambda1: s.lambda1,
        lambda2: Some(s.lambda2),
        t1: Some(s.t1),
        t2_residual: Some(s.t2_residual),
    });
    let verts = b
        .vertices
        .iter()
        .zip(vertex_stress)
        .map(|(&v, &(t1, t2))| BoundaryRow {
            kind: RowKind::Vertex,
            k_v: b.k_v,
            lambda1: v,
            lambda2: Some(v),
            t1: Some(t1),
            t2_residual: Some(t2),
        });
    let asym = b.asymptote.map(|a| BoundaryRow {
        kind: RowKind::Asymptote,
        k_v: b.k_v,
        lambda1: a,
        lambda2: None,
        t1: None,
        t2_residual: None,
    });
    curve.chain(verts).chain(asym).collect()
}

/// Parameter-sweep row: raw and relaxed stresses at one grid point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub lambda1: f64,
    pub lambda2: f64,
    pub k_v: f64,
    pub c1: f64,
    pub c2: f64,
    pub regime: Regime,
    pub on_boundary: bool,
    pub t1: f64,
    pub t2: f64,
    pub t1_relaxed: f64,
    pub t2_relaxed: f64,
}

pub fn write_csv<W: Write, T: Serialize>(out: W, rows: &[T]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

fn read_csv<R: Read, T: for<'de> Deserialize<'de>>(input: R) -> Result<Vec<T>, CliError> {
    csv::Reader::from_reader(input)
        .deserialize()
        .collect::<Result<Vec<T>, _>>()
        .map_err(CliError::from)
}

pub fn read_boundary_csv<R: Read>(input: R) -> Result<Vec<BoundaryRow>, CliError> {
    read_csv(input)
}

pub fn read_sweep_csv<R: Read>(input: R) -> Result<Vec<SweepRecord>, CliError> {
    read_csv(input)
}

/// JSON documents are read back as untyped values.
pub fn read_json<R: Read>(input: R) -> Result<serde_json::Value, CliError> {
    serde_json::from_reader(input).map_err(CliError::from)
}
