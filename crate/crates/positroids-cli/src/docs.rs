//! The JSON exchange format: one matroid per document with exactly one
//! representation (bases, cyclic flats, transversal presentation, or a
//! named family), plus report documents with replayable certificates.

use std::collections::BTreeMap;

use positroids::construct::{
    from_cyclic_flats, transversal, CyclicFlatsPresentation, TransversalPresentation,
};
use positroids::error::{Error, Result};
use positroids::exmin::generate_family;
use positroids::matroid::Matroid;
use positroids::report::Certificate;
use serde::{Deserialize, Serialize};

pub const MATROID_FORMAT: &str = "matroid/1";
pub const REPORT_FORMAT: &str = "report/1";

/// The separator used internally to derive auxiliary bonding labels; it
/// is banned in document labels.
pub const RESERVED_SEPARATOR: char = '#';

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FlatEntry {
    pub set: Vec<String>,
    pub rank: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FamilySpec {
    pub id: String,
    pub params: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
pub struct MatroidDocument {
    pub format: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ground: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cyclic_flats: Option<Vec<FlatEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transversal: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    /// Named orders for reuse with --order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orders: Option<BTreeMap<String, Vec<String>>>,
}

impl MatroidDocument {
    pub fn parse(text: &str) -> Result<MatroidDocument> {
        let doc: MatroidDocument = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("invalid matroid document: {e}")))?;
        if doc.format != MATROID_FORMAT {
            return Err(Error::Input(format!(
                "unsupported format '{}'; expected '{MATROID_FORMAT}'",
                doc.format
            )));
        }
        Ok(doc)
    }

    /// Builds and validates the matroid the document describes.
    pub fn build(&self) -> Result<Matroid> {
        let mut present = 0;
        for has in [
            self.bases.is_some(),
            self.cyclic_flats.is_some(),
            self.transversal.is_some(),
            self.family.is_some(),
        ] {
            present += has as usize;
        }
        if present != 1 {
            return Err(Error::Input(
                "exactly one of bases, cyclic_flats, transversal, family must be present".into(),
            ));
        }
        if let Some(family) = &self.family {
            if self.ground.is_some() {
                return Err(Error::Input(
                    "family documents must omit 'ground'; the generator names its own elements"
                        .into(),
                ));
            }
            return generate_family(&family.id, &family.params);
        }
        let ground = self
            .ground
            .as_ref()
            .ok_or_else(|| Error::Input("missing 'ground'".into()))?;
        for l in ground {
            if l.is_empty() {
                return Err(Error::Input("empty label".into()));
            }
            if l.contains(RESERVED_SEPARATOR) {
                return Err(Error::Input(format!(
                    "label '{l}' uses the reserved character '{RESERVED_SEPARATOR}'"
                )));
            }
        }
        let refs: Vec<&str> = ground.iter().map(|s| s.as_str()).collect();
        if let Some(bases) = &self.bases {
            let base_refs: Vec<Vec<&str>> = bases
                .iter()
                .map(|b| b.iter().map(|s| s.as_str()).collect())
                .collect();
            let slices: Vec<&[&str]> = base_refs.iter().map(|v| v.as_slice()).collect();
            return positroids::construct::from_bases(&refs, &slices);
        }
        if let Some(flats) = &self.cyclic_flats {
            let flat_refs: Vec<(Vec<&str>, usize)> = flats
                .iter()
                .map(|f| (f.set.iter().map(|s| s.as_str()).collect(), f.rank))
                .collect();
            let pairs: Vec<(&[&str], usize)> =
                flat_refs.iter().map(|(v, r)| (v.as_slice(), *r)).collect();
            let p = CyclicFlatsPresentation::from_labels(&refs, &pairs)?;
            return from_cyclic_flats(&p);
        }
        if let Some(sets) = &self.transversal {
            let set_refs: Vec<Vec<&str>> = sets
                .iter()
                .map(|s| s.iter().map(|x| x.as_str()).collect())
                .collect();
            let slices: Vec<&[&str]> = set_refs.iter().map(|v| v.as_slice()).collect();
            let p = TransversalPresentation::from_labels(&refs, &slices)?;
            return Ok(transversal(&p));
        }
        unreachable!("one representation is present");
    }

    /// Canonical document for a matroid: the basis representation, with
    /// elements in storage order.
    pub fn from_matroid(name: Option<String>, m: &Matroid) -> MatroidDocument {
        MatroidDocument {
            format: MATROID_FORMAT.to_string(),
            name,
            ground: Some(m.labels().to_vec()),
            bases: Some(m.bases().iter().map(|&b| m.label_list(b)).collect()),
            cyclic_flats: None,
            transversal: None,
            family: None,
            orders: None,
        }
    }

    /// Resolves an order argument: either a comma-separated label list or
    /// the name of an order embedded in the document.
    pub fn resolve_order(&self, arg: &str) -> Result<Vec<String>> {
        if let Some(orders) = &self.orders {
            if let Some(seq) = orders.get(arg) {
                return Ok(seq.clone());
            }
        }
        if arg.contains(',') {
            return Ok(arg.split(',').map(|s| s.trim().to_string()).collect());
        }
        if self.orders.is_some() {
            return Err(Error::Input(format!(
                "'{arg}' is neither a comma-separated order nor a named order in the document"
            )));
        }
        Ok(vec![arg.to_string()])
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDocument {
    pub format: String,
    /// The invocation that produced the report.
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matroid: Option<MatroidDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_matroid: Option<MatroidDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    pub verdict: String,
    pub certificate: Certificate,
    /// Method-specific payload (info fields, per-method verdicts, theorem
    /// hypothesis trails, necklace entries, ...).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
    /// Wall-clock milliseconds; the only non-deterministic field.
    pub timing_ms: u64,
}

impl ReportDocument {
    pub fn parse(text: &str) -> Result<ReportDocument> {
        let doc: ReportDocument = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("invalid report document: {e}")))?;
        if doc.format != REPORT_FORMAT {
            return Err(Error::Input(format!(
                "unsupported format '{}'; expected '{REPORT_FORMAT}'",
                doc.format
            )));
        }
        Ok(doc)
    }
}
