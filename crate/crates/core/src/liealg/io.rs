//! JSON algebra files:
//! `{"dim": n, "basis": [names], "brackets": [{"lhs": i, "rhs": j, "value": {"k": "p/q"}}]}`
//! with 0-based indices and `lhs < rhs`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{LieAlgebra, LieError, StructureConstants};
use crate::exactnum::{Rational, Ring};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub lhs: usize,
    pub rhs: usize,
    /// Sparse coordinates keyed by the decimal basis index.
    pub value: BTreeMap<String, Rational>,
}

impl AlgebraFile {
    pub fn from_algebra(g: &LieAlgebra<Rational>) -> Self {
        let brackets = g
            .structure()
            .brackets()
            .iter()
            .map(|(&(lhs, rhs), v)| BracketEntry {
                lhs,
                rhs,
                value: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k.to_string(), c.clone()))
                    .collect(),
            })
            .collect();
        AlgebraFile {
            dim: g.dim(),
            basis: g.labels().to_vec(),
            brackets,
        }
    }

    pub fn into_algebra(self) -> Result<LieAlgebra<Rational>, LieError> {
        if self.basis.len() != self.dim {
            return Err(LieError::LengthMismatch {
                expected: self.dim,
                found: self.basis.len(),
            });
        }
        let mut sc = StructureConstants::new(self.basis);
        let mut seen = std::collections::BTreeSet::new();
        for entry in self.brackets {
            if entry.lhs >= entry.rhs {
                return Err(LieError::UnorderedPair {
                    i: entry.lhs,
                    j: entry.rhs,
                });
            }
            if !seen.insert((entry.lhs, entry.rhs)) {
                return Err(LieError::Format(format!(
                    "duplicate bracket ({}, {})",
                    entry.lhs, entry.rhs
                )));
            }
            let mut v = vec![Rational::zero(); self.dim];
            for (k, c) in entry.value {
                let idx: usize = k
                    .parse()
                    .map_err(|_| LieError::Format(format!("bad coordinate key {k:?}")))?;
                if idx >= self.dim {
                    return Err(LieError::IndexOutOfRange {
                        index: idx,
                        dim: self.dim,
                    });
                }
                v[idx] = c;
            }
            sc.set_bracket(entry.lhs, entry.rhs, v)?;
        }
        LieAlgebra::new(sc)
    }
}

pub fn algebra_from_json(text: &str) -> Result<LieAlgebra<Rational>, LieError> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| LieError::Format(e.to_string()))?;
    file.into_algebra()
}

pub fn algebra_to_json(g: &LieAlgebra<Rational>) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(g))
        .expect("algebra files always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEISENBERG: &str = r#"{"dim": 3, "basis": ["X1", "X2", "Z1"],
        "brackets": [{"lhs": 0, "rhs": 1, "value": {"2": "1"}}]}"#;

    #[test]
    fn load_and_round_trip() {
        let g = algebra_from_json(HEISENBERG).unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(g.center().dim(), 1);
        let back = algebra_from_json(&algebra_to_json(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn rejects_reversed_pairs() {
        let text = HEISENBERG.replace(r#""lhs": 0, "rhs": 1"#, r#""lhs": 1, "rhs": 0"#);
        assert!(matches!(
            algebra_from_json(&text),
            Err(LieError::UnorderedPair { i: 1, j: 0 })
        ));
        let text = HEISENBERG.replace(r#""lhs": 0, "rhs": 1"#, r#""lhs": 1, "rhs": 1"#);
        assert!(matches!(
            algebra_from_json(&text),
            Err(LieError::UnorderedPair { .. })
        ));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(algebra_from_json("{"), Err(LieError::Format(_))));
        let text = HEISENBERG.replace(r#"{"2": "1"}"#, r#"{"7": "1"}"#);
        assert!(matches!(
            algebra_from_json(&text),
            Err(LieError::IndexOutOfRange { .. })
        ));
        let text = HEISENBERG.replace(r#""dim": 3"#, r#""dim": 4"#);
        assert!(algebra_from_json(&text).is_err());
    }
}
