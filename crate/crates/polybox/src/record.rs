//! Canonical JSON problem documents.
//!
//! The on-disk schema is
//! `{"powers": [[int,...],...], "coefs": [num,...], "xmin": [num,...], "xmax": [num,...]}`
//! where `xmin`/`xmax` are optional. The derived attributes `nx`, `ncoefs`
//! and `deg` are written on output and ignored on input; any other key is
//! rejected. Numbers are interchanged as IEEE binary64.

use crate::poly::{PolyError, Polynomial};
use crate::Real;
use serde::{Deserialize, Serialize};

/// Serialized form of a polynomial, optionally bundled with box bounds.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ProblemDoc {
    pub powers: Vec<Vec<i64>>,
    pub coefs: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xmin: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xmax: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nx: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ncoefs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deg: Option<u32>,
}

impl ProblemDoc {
    /// Parses a document from JSON, mapping parse errors to schema violations.
    pub fn from_json(text: &str) -> Result<Self, PolyError> {
        serde_json::from_str(text).map_err(|e| PolyError::SchemaViolation {
            path: "$".to_string(),
            reason: e.to_string(),
        })
    }

    /// Renders the document as pretty-printed JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// Builds the canonical document for a polynomial (derived fields filled,
/// no bounds).
pub fn to_record<T: Real>(p: &Polynomial<T>) -> ProblemDoc {
    ProblemDoc {
        powers: p
            .powers()
            .iter()
            .map(|row| row.iter().map(|&e| i64::from(e)).collect())
            .collect(),
        coefs: p
            .coefs()
            .iter()
            .map(|c| c.to_f64().expect("finite coefficient"))
            .collect(),
        xmin: None,
        xmax: None,
        nx: Some(p.nx()),
        ncoefs: Some(p.ncoefs()),
        deg: Some(p.deg()),
    }
}

/// Validates a document and builds the polynomial it describes. Derived
/// fields in the document are ignored; errors carry the offending path.
pub fn from_record<T: Real>(doc: &ProblemDoc) -> Result<Polynomial<T>, PolyError> {
    if doc.powers.is_empty() {
        return Err(PolyError::SchemaViolation {
            path: "powers".into(),
            reason: "must contain at least one monomial row".into(),
        });
    }
    let nx = doc.powers[0].len();
    if nx == 0 {
        return Err(PolyError::SchemaViolation {
            path: "powers[0]".into(),
            reason: "monomial rows must have at least one entry".into(),
        });
    }
    for (r, row) in doc.powers.iter().enumerate() {
        if row.len() != nx {
            return Err(PolyError::SchemaViolation {
                path: format!("powers[{r}]"),
                reason: format!("row has {} entries, expected {nx}", row.len()),
            });
        }
        for (c, &e) in row.iter().enumerate() {
            if e < 0 {
                return Err(PolyError::SchemaViolation {
                    path: format!("powers[{r}][{c}]"),
                    reason: format!("exponent {e} is negative"),
                });
            }
        }
    }
    if doc.coefs.len() != doc.powers.len() {
        return Err(PolyError::SchemaViolation {
            path: "coefs".into(),
            reason: format!(
                "{} coefficients but {} monomial rows",
                doc.coefs.len(),
                doc.powers.len()
            ),
        });
    }
    for (i, c) in doc.coefs.iter().enumerate() {
        if !c.is_finite() {
            return Err(PolyError::SchemaViolation {
                path: format!("coefs[{i}]"),
                reason: "coefficient is not finite".into(),
            });
        }
    }
    let coefs = doc
        .coefs
        .iter()
        .map(|&c| T::from_f64(c).expect("finite f64 converts"))
        .collect();
    Polynomial::new(doc.powers.clone(), coefs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn demo_poly() -> Polynomial<f64> {
        Polynomial::new(vec![vec![1, 0, 2], vec![0, 3, 0]], vec![1.0, 2.0]).unwrap()
    }

    #[test]
    fn record_carries_derived_attributes() {
        let doc = to_record(&demo_poly());
        assert_eq!(doc.nx, Some(3));
        assert_eq!(doc.ncoefs, Some(2));
        assert_eq!(doc.deg, Some(3));
    }

    #[test]
    fn round_trip_is_identity() {
        let p = demo_poly();
        let back: Polynomial<f64> = from_record(&to_record(&p)).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn ragged_rows_rejected_with_path() {
        let doc = ProblemDoc {
            powers: vec![vec![1, 0], vec![1, 0, 2]],
            coefs: vec![1.0, 2.0],
            xmin: None,
            xmax: None,
            nx: None,
            ncoefs: None,
            deg: None,
        };
        match from_record::<f64>(&doc) {
            Err(PolyError::SchemaViolation { path, .. }) => assert_eq!(path, "powers[1]"),
            other => panic!("expected schema violation, got {other:?}"),
        }
    }

    #[test]
    fn unknown_keys_rejected() {
        let err = ProblemDoc::from_json(r#"{"powers": [[1]], "coefs": [1.0], "foo": 3}"#);
        assert!(matches!(err, Err(PolyError::SchemaViolation { .. })));
    }

    #[test]
    fn derived_fields_ignored_on_input() {
        // Wrong derived values parse fine; the polynomial recomputes them.
        let doc = ProblemDoc::from_json(
            r#"{"powers": [[1, 0, 2], [0, 3, 0]], "coefs": [1.0, 2.0], "nx": 99, "deg": 0}"#,
        )
        .unwrap();
        let p: Polynomial<f64> = from_record(&doc).unwrap();
        assert_eq!(p.nx(), 3);
        assert_eq!(p.deg(), 3);
    }

    #[test]
    fn negative_exponent_rejected_with_path() {
        let doc = ProblemDoc::from_json(r#"{"powers": [[1, -2]], "coefs": [1.0]}"#).unwrap();
        match from_record::<f64>(&doc) {
            Err(PolyError::SchemaViolation { path, .. }) => assert_eq!(path, "powers[0][1]"),
            other => panic!("expected schema violation, got {other:?}"),
        }
    }

    #[test]
    fn coef_count_mismatch_rejected() {
        let doc = ProblemDoc::from_json(r#"{"powers": [[1]], "coefs": [1.0, 2.0]}"#).unwrap();
        match from_record::<f64>(&doc) {
            Err(PolyError::SchemaViolation { path, .. }) => assert_eq!(path, "coefs"),
            other => panic!("expected schema violation, got {other:?}"),
        }
    }
}
