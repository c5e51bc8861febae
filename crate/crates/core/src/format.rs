//! The JSON instance file: `{"n": 4, "I": [[1], [3]], "J": [[1, 4]]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{validate_pair, QuotientInstance};
use crate::monomial::SquareFreeMonomial;

/// Raw instance with 1-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub n: usize,
    #[serde(rename = "I")]
    pub gens_i: Vec<Vec<usize>>,
    #[serde(rename = "J", default)]
    pub gens_j: Vec<Vec<usize>>,
}

impl InstanceFile {
    /// Canonical form: minimal generators in canonical order, supports ascending.
    pub fn from_instance(inst: &QuotientInstance) -> Self {
        let supports = |gens: &[SquareFreeMonomial]| gens.iter().map(|g| g.support()).collect();
        InstanceFile {
            n: inst.n(),
            gens_i: supports(inst.ideal_i().generators()),
            gens_j: supports(inst.ideal_j().generators()),
        }
    }

    pub fn validate(&self) -> Result<QuotientInstance> {
        let convert = |name: &str, gens: &[Vec<usize>]| -> Result<Vec<SquareFreeMonomial>> {
            gens.iter()
                .enumerate()
                .map(|(k, s)| {
                    SquareFreeMonomial::from_support(self.n, s).map_err(|e| e.at(format!("{name}[{k}]")))
                })
                .collect()
        };
        let i = convert("I", &self.gens_i)?;
        let j = convert("J", &self.gens_j)?;
        validate_pair(self.n, &i, &j)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instance serialization")
    }
}

/// Parse and validate an instance document.
pub fn parse_instance(text: &str) -> Result<QuotientInstance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.validate()
}

pub fn serialize_instance(inst: &QuotientInstance) -> String {
    InstanceFile::from_instance(inst).to_json()
}
