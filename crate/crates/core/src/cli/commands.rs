use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use crate::albert::{idempotent_from_point, point_from_idempotent, AlbertAlgebra};
use crate::derivations::{derivation_report, AlgebraPresentation, DerivationReport};
use crate::error::Result;
use crate::exactfield::F3;
use crate::geometry::{plane_decode, plane_embed};
use crate::hurwitz::{self, OctonionProduct};
use crate::okubo::{self, Flavor};

use super::payload::{parse_albert, parse_plane_point, plane_point_json};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableAlgebra {
    Okubo,
    SplitOkubo,
    SplitOctonion,
    Petersson,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DerivationAlgebra {
    Okubo,
    SplitOkubo,
    Petersson,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VeroneseAction {
    Embed,
    Decode,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub algebra: String,
    pub labels: Vec<String>,
    /// `tensor[a][b][k]`, the coefficient of basis vector `k` in `b_a · b_b`.
    pub tensor: Vec<Vec<Vec<F3>>>,
}

impl Table {
    pub fn rows(&self) -> impl Iterator<Item = (usize, usize, usize, &F3)> {
        self.tensor.iter().enumerate().flat_map(|(a, plane)| {
            plane.iter().enumerate().flat_map(move |(b, row)| row.iter().enumerate().map(move |(k, v)| (a, b, k, v)))
        })
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| crate::Error::Parse(e.to_string());
        w.write_record(["a", "b", "k", "value_a", "value_b"]).map_err(io)?;
        for (a, b, k, v) in self.rows() {
            w.write_record([a.to_string(), b.to_string(), k.to_string(), v.a.to_string(), v.b.to_string()])
                .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| crate::Error::Parse(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

pub fn table(algebra: TableAlgebra) -> Table {
    let (name, labels, dense): (&str, Vec<&str>, Vec<F3>) = match algebra {
        TableAlgebra::Okubo => ("okubo", okubo::LABELS.to_vec(), okubo::structure_constants(Flavor::Compact).dense().to_vec()),
        TableAlgebra::SplitOkubo => {
            ("split-okubo", okubo::LABELS.to_vec(), okubo::structure_constants(Flavor::Split).dense().to_vec())
        }
        TableAlgebra::SplitOctonion => {
            ("split-octonion", hurwitz::LABELS.to_vec(), OctonionProduct::Hurwitz.structure_constants())
        }
        TableAlgebra::Petersson => ("petersson", hurwitz::LABELS.to_vec(), OctonionProduct::Petersson.structure_constants()),
    };
    let n = labels.len();
    let tensor = (0..n)
        .map(|a| (0..n).map(|b| dense[(a * n + b) * n..(a * n + b + 1) * n].to_vec()).collect())
        .collect();
    Table { algebra: name.to_string(), labels: labels.into_iter().map(String::from).collect(), tensor }
}

pub fn veronese(action: VeroneseAction, payload: &Value) -> Result<Value> {
    match action {
        VeroneseAction::Embed => {
            let p = parse_plane_point(payload)?;
            let q = plane_embed(&p)?;
            let eps = idempotent_from_point(&q)?;
            Ok(json!({"patch": p.patch(), "representative": q.representative(), "idempotent": eps}))
        }
        VeroneseAction::Decode => {
            let eps = parse_albert(payload)?;
            let p = plane_decode(&point_from_idempotent(&eps)?);
            Ok(plane_point_json(&p))
        }
    }
}

pub fn kernel(payload: &Value, q: &F3) -> Result<Value> {
    let a = parse_albert(payload)?;
    a.check_compact()?;
    Ok(serde_json::to_value(AlbertAlgebra::new(q.clone()).kernel(&a)).expect("plain struct"))
}

pub fn derivations(algebra: DerivationAlgebra) -> DerivationReport {
    let presentation = match algebra {
        DerivationAlgebra::Okubo => AlgebraPresentation::okubo(Flavor::Compact),
        DerivationAlgebra::SplitOkubo => AlgebraPresentation::okubo(Flavor::Split),
        DerivationAlgebra::Petersson => AlgebraPresentation::octonion(OctonionProduct::Petersson),
    };
    derivation_report(&presentation)
}
