//! JSON encodings of the core types.
//!
//! - partition: `[3,2]`
//! - tableau: `[[1,2],[3]]`
//! - poset: `{"elements":["a","b"],"covers":[["a","b"]]}`
//! - reverse plane partition: row arrays `[[0,2],[1]]` over a shape,
//!   `{"values":{"a":0,"b":1}}` over a general poset
//! - linear extension: a tableau over a shape, a label array otherwise
//! - series: `{"n":3,"truncation":2,"terms":[{"indices":[0,0,0],"coeff":1}]}`
//! - polynomial: `{"coeffs":[1,1,1]}`, ascending degree

use std::collections::BTreeMap;

use pedestal_core::{
    LinearExtension, Monomial, Partition, Pedestal, Poset, ReversePlanePartition, Series,
    StandardTableau, UniPoly,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::FormatError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDoc {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub indices: Vec<u32>,
    pub coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub n: usize,
    pub truncation: Option<u64>,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniPolyDoc {
    pub coeffs: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PedestalDoc {
    pub rpp: Value,
    #[serde(rename = "P")]
    pub p: Value,
    #[serde(rename = "Q")]
    pub q: Value,
    pub disagreement: Vec<String>,
}

/// Input of the inverse bijection: a target extension `Q` and a partition.
#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
pub struct InverseInput {
    #[serde(rename = "Q")]
    pub q: Value,
    pub partition: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForwardOutput {
    pub pedestal: PedestalDoc,
    pub partition: Vec<usize>,
}

/// Comma-separated parts as given on the command line, e.g. `3,2`.
pub fn parse_shape(text: &str) -> Result<Partition, FormatError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| FormatError::Invalid(format!("bad part `{p}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::from_signed(&parts)?)
}

pub fn partition_from_value(value: &Value) -> Result<Partition, FormatError> {
    let parts: Vec<i64> = serde_json::from_value(value.clone())?;
    Ok(Partition::from_signed(&parts)?)
}

pub fn partition_to_value(partition: &Partition) -> Value {
    Value::from(partition.parts().to_vec())
}

pub fn tableau_from_value(value: &Value) -> Result<StandardTableau, FormatError> {
    let rows: Vec<Vec<usize>> = serde_json::from_value(value.clone())?;
    Ok(StandardTableau::new(rows)?)
}

pub fn tableau_to_value(tableau: &StandardTableau) -> Value {
    Value::from(tableau.rows().to_vec())
}

pub fn poset_from_str(text: &str) -> Result<Poset, FormatError> {
    let doc: PosetDoc = serde_json::from_str(text)?;
    Ok(Poset::from_covers(doc.elements, &doc.covers)?)
}

pub fn poset_to_doc(poset: &Poset) -> PosetDoc {
    PosetDoc {
        elements: poset.labels().to_vec(),
        covers: poset
            .covers()
            .iter()
            .map(|&(a, b)| (poset.label(a).to_string(), poset.label(b).to_string()))
            .collect(),
    }
}

pub fn extension_from_value<'p>(
    poset: &'p Poset,
    value: &Value,
) -> Result<LinearExtension<'p>, FormatError> {
    if poset.shape().is_some() && value.get(0).is_some_and(Value::is_array) {
        let tableau = tableau_from_value(value)?;
        return Ok(LinearExtension::from_tableau(poset, &tableau)?);
    }
    let labels: Vec<String> = serde_json::from_value(value.clone())?;
    Ok(LinearExtension::from_labels(poset, &labels)?)
}

pub fn extension_to_value(extension: &LinearExtension<'_>) -> Value {
    let poset = extension.poset();
    match poset.shape() {
        Some(shape) => tableau_to_value(
            &extension
                .to_tableau(shape)
                .expect("poset carries this shape"),
        ),
        None => Value::from(
            extension
                .order()
                .iter()
                .map(|&e| poset.label(e).to_string())
                .collect::<Vec<_>>(),
        ),
    }
}

pub fn rpp_from_value<'p>(
    poset: &'p Poset,
    value: &Value,
) -> Result<ReversePlanePartition<'p>, FormatError> {
    if let Some(values) = value.get("values") {
        let map: BTreeMap<String, i64> = serde_json::from_value(values.clone())?;
        let entries = map
            .iter()
            .map(|(label, &v)| {
                u32::try_from(v).map(|v| (label.as_str(), v)).map_err(|_| {
                    FormatError::Invalid(format!("entry {v} at `{label}` is negative"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(ReversePlanePartition::from_labeled(poset, entries)?);
    }
    let rows: Vec<Vec<i64>> = serde_json::from_value(value.clone())?;
    let rows = rows
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    u32::try_from(v)
                        .map_err(|_| FormatError::Invalid(format!("entry {v} is negative")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ReversePlanePartition::from_rows(poset, &rows)?)
}

pub fn rpp_to_value(rpp: &ReversePlanePartition<'_>) -> Value {
    match rpp.to_rows() {
        Some(rows) => Value::from(rows),
        None => {
            let poset = rpp.poset();
            let values: serde_json::Map<String, Value> = rpp
                .values()
                .iter()
                .enumerate()
                .map(|(e, &v)| (poset.label(e).to_string(), Value::from(v)))
                .collect();
            serde_json::json!({ "values": values })
        }
    }
}

pub fn pedestal_to_doc(pedestal: &Pedestal<'_>, disagreement: &[usize]) -> PedestalDoc {
    let poset = pedestal.rpp().poset();
    PedestalDoc {
        rpp: rpp_to_value(pedestal.rpp()),
        p: extension_to_value(pedestal.p()),
        q: extension_to_value(pedestal.q()),
        disagreement: disagreement
            .iter()
            .map(|&e| poset.label(e).to_string())
            .collect(),
    }
}

pub fn series_to_doc(series: &Series) -> SeriesDoc {
    SeriesDoc {
        n: series.degree(),
        truncation: series.truncation(),
        terms: series
            .terms()
            .map(|(m, &coeff)| TermDoc {
                indices: m.indices().to_vec(),
                coeff,
            })
            .collect(),
    }
}

/// Rebuilds a series, rejecting terms that break its invariants.
pub fn series_from_doc(doc: &SeriesDoc) -> Result<Series, FormatError> {
    let mut series = Series::zero(doc.n, doc.truncation);
    for term in &doc.terms {
        if term.coeff == 0 {
            return Err(FormatError::Invalid("zero coefficient stored".into()));
        }
        if !term.indices.windows(2).all(|w| w[0] <= w[1]) {
            return Err(FormatError::Invalid("monomial indices not sorted".into()));
        }
        let m = Monomial::new(term.indices.clone());
        if doc.truncation.is_some_and(|v| m.volume() > v) {
            return Err(FormatError::Invalid("term above truncation".into()));
        }
        if series.coefficient(&m) != 0 {
            return Err(FormatError::Invalid("repeated monomial".into()));
        }
        series.add_term(m, term.coeff)?;
    }
    Ok(series)
}

pub fn unipoly_to_doc(poly: &UniPoly) -> UniPolyDoc {
    UniPolyDoc {
        coeffs: poly.coeffs().to_vec(),
    }
}

pub fn unipoly_from_doc(doc: &UniPolyDoc) -> Result<UniPoly, FormatError> {
    if doc.coeffs.last() == Some(&0) {
        return Err(FormatError::Invalid("trailing zero coefficient".into()));
    }
    Ok(UniPoly::new(doc.coeffs.clone()))
}
