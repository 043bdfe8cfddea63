//! JSON interchange for factorizations and homotopies. Matrix entries are
//! polynomial strings in the parser's grammar.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::MfError;
use crate::parse::{parse_polynomial, parse_ring_spec};
use crate::poly::PolyRing;

use super::{Homotopy, MatrixFactorization, PolyMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MfDocument {
    pub field: String,
    pub variables: Vec<String>,
    pub potential: String,
    pub rank: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<String>>,
}

fn matrix_strings(m: &PolyMatrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(|p| p.to_string()).collect())
        .collect()
}

fn parse_matrix(
    ring: &Arc<PolyRing>,
    rows: &[Vec<String>],
    shape: (usize, usize),
    name: &str,
) -> Result<PolyMatrix, MfError> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(MfError::Format(format!(
            "{name} must be {}x{}",
            shape.0, shape.1
        )));
    }
    let parsed = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    parse_polynomial(e, ring)
                        .map_err(|err| MfError::Format(format!("{name} entry `{e}`: {err}")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if shape.1 == 0 {
        return Ok(PolyMatrix::zero(ring, shape.0, 0));
    }
    PolyMatrix::from_rows(ring, parsed)
}

impl MfDocument {
    pub fn from_factorization(x: &MatrixFactorization) -> Self {
        let ring = x.ring();
        MfDocument {
            field: ring.field().to_string(),
            variables: ring.vars().to_vec(),
            potential: x.potential().to_string(),
            rank: x.rank(),
            a: matrix_strings(x.a()),
            b: matrix_strings(x.b()),
        }
    }

    pub fn ring(&self) -> Result<Arc<PolyRing>, MfError> {
        let spec = format!("{}[{}]", self.field, self.variables.join(", "));
        parse_ring_spec(&spec)
            .map(|s| s.ring)
            .map_err(|e| MfError::Format(format!("ring `{spec}`: {e}")))
    }

    /// Parses and validates the factorization.
    pub fn to_factorization(&self) -> Result<MatrixFactorization, MfError> {
        let ring = self.ring()?;
        let f = parse_polynomial(&self.potential, &ring)
            .map_err(|e| MfError::Format(format!("potential: {e}")))?;
        let shape = (self.rank, self.rank);
        let a = parse_matrix(&ring, &self.a, shape, "A")?;
        let b = parse_matrix(&ring, &self.b, shape, "B")?;
        MatrixFactorization::checked(f, a, b)
    }

    pub fn from_json(text: &str) -> Result<Self, MfError> {
        serde_json::from_str(text).map_err(|e| MfError::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// A homotopy `(s, t)` in the same entry grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyDocument {
    pub s: Vec<Vec<String>>,
    pub t: Vec<Vec<String>>,
}

impl HomotopyDocument {
    pub fn from_homotopy(h: &Homotopy) -> Self {
        HomotopyDocument {
            s: matrix_strings(&h.s),
            t: matrix_strings(&h.t),
        }
    }

    pub fn to_homotopy(
        &self,
        ring: &Arc<PolyRing>,
        rows: usize,
        cols: usize,
    ) -> Result<Homotopy, MfError> {
        Ok(Homotopy {
            s: parse_matrix(ring, &self.s, (rows, cols), "s")?,
            t: parse_matrix(ring, &self.t, (rows, cols), "t")?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mf::{direct_sum, koszul_tensor, mult_morphism};
    use crate::poly::Polynomial;

    const A2: &str = r#"{
  "field": "QQ",
  "variables": ["x"],
  "potential": "x^3",
  "rank": 1,
  "A": [["x^2"]],
  "B": [["x"]]
}"#;

    #[test]
    fn round_trip_is_bit_exact() {
        let doc = MfDocument::from_json(A2).unwrap();
        let x = doc.to_factorization().unwrap();
        let k = koszul_tensor(&direct_sum(&x, &x).unwrap(), &Polynomial::var(x.ring(), 0));
        let text = MfDocument::from_factorization(&k).to_json();
        let back = MfDocument::from_json(&text)
            .unwrap()
            .to_factorization()
            .unwrap();
        assert_eq!(back, k);
        assert_eq!(MfDocument::from_factorization(&back).to_json(), text);
    }

    #[test]
    fn malformed_documents() {
        let bad_shape = A2.replace(r#"[["x"]]"#, r#"[["x", "1"]]"#);
        assert!(matches!(
            MfDocument::from_json(&bad_shape)
                .unwrap()
                .to_factorization(),
            Err(MfError::Format(_))
        ));
        let not_mf = A2.replace(r#"[["x"]]"#, r#"[["x^5"]]"#);
        assert!(matches!(
            MfDocument::from_json(&not_mf).unwrap().to_factorization(),
            Err(MfError::Invalid(_))
        ));
        assert!(MfDocument::from_json(&A2.replace("x^2", "z"))
            .unwrap()
            .to_factorization()
            .is_err());
        assert!(MfDocument::from_json("{").is_err());
    }

    #[test]
    fn homotopy_documents() {
        let x = MfDocument::from_json(A2)
            .unwrap()
            .to_factorization()
            .unwrap();
        let phi = mult_morphism(&x, x.potential());
        let h = Homotopy {
            s: x.b().clone(),
            t: PolyMatrix::zero(x.ring(), 1, 1),
        };
        let doc = HomotopyDocument::from_homotopy(&h);
        assert_eq!(doc.to_homotopy(x.ring(), 1, 1).unwrap(), h);
        assert!(h.verify(&phi));
    }
}
