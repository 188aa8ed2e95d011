//! Problem files.
//!
//! A 2-stage problem is `{"n": 5, "k": 3, "A_n": "Z", "A_nk": "Z/4", "eta": [[1, 0]]}`,
//! with `eta` one row per generator of `A_nk` and one column per generator
//! of `Γ̃ₙᵏ(A_n)` (see `pialg gamma-tilde`). A 3-stage problem carries
//! `n`, `A_n`, `A_n1`, `A_n2`, `eta1`, `eta2` instead. Groups are written
//! either in the table syntax (`"Z/4 + Z/3"`) or as `{"rank": r, "torsion": [..]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgab::FgAbGroup;
use crate::matrix::IntMatrix;
use crate::realizability::{ThreeStageInput, TwoStagePiAlgebra};
use crate::tables::{parse_group, StableTables};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupField {
    Text(String),
    Literal(FgAbGroup),
}

impl GroupField {
    pub fn to_group(&self) -> Result<FgAbGroup> {
        match self {
            GroupField::Text(s) => parse_group(s).map_err(Error::InvalidGroup),
            GroupField::Literal(g) => Ok(g.clone()),
        }
    }
}

impl From<&FgAbGroup> for GroupField {
    fn from(g: &FgAbGroup) -> Self {
        GroupField::Text(crate::tables::format_group(g))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoStageFile {
    pub n: u32,
    pub k: u32,
    #[serde(rename = "A_n")]
    pub a_n: GroupField,
    #[serde(rename = "A_nk")]
    pub a_nk: GroupField,
    pub eta: IntMatrix,
}

impl TwoStageFile {
    pub fn to_algebra(&self, tables: &StableTables) -> Result<TwoStagePiAlgebra> {
        TwoStagePiAlgebra::new(self.n, self.k, self.a_n.to_group()?, self.a_nk.to_group()?, self.eta.clone(), tables)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreeStageFile {
    pub n: u32,
    #[serde(rename = "A_n")]
    pub a_n: GroupField,
    #[serde(rename = "A_n1")]
    pub a_n1: GroupField,
    #[serde(rename = "A_n2")]
    pub a_n2: GroupField,
    pub eta1: IntMatrix,
    pub eta2: IntMatrix,
}

impl ThreeStageFile {
    pub fn to_input(&self) -> Result<ThreeStageInput> {
        Ok(ThreeStageInput {
            n: self.n,
            a_n: self.a_n.to_group()?,
            a_n1: self.a_n1.to_group()?,
            a_n2: self.a_n2.to_group()?,
            eta1: self.eta1.clone(),
            eta2: self.eta2.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Problem {
    TwoStage(TwoStageFile),
    ThreeStage(ThreeStageFile),
}

impl Problem {
    /// Errors report the line and column of the offending JSON.
    pub fn parse(text: &str) -> Result<Problem> {
        let probe: serde_json::Value = serde_json::from_str(text)?;
        if probe.get("eta1").is_some() {
            Ok(Problem::ThreeStage(serde_json::from_str(text)?))
        } else {
            Ok(Problem::TwoStage(serde_json::from_str(text)?))
        }
    }

    pub fn load(path: &Path) -> Result<Problem> {
        Problem::parse(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_group_notations() {
        let p = Problem::parse(r#"{"n": 5, "k": 3, "A_n": {"rank": 1, "torsion": []}, "A_nk": "Z/4", "eta": [[1, 0]]}"#)
            .unwrap();
        let Problem::TwoStage(p) = p else { panic!() };
        let pa = p.to_algebra(&StableTables::defaults()).unwrap();
        assert_eq!(pa.a_n, FgAbGroup::free(1));
        assert_eq!(pa.a_nk, FgAbGroup::cyclic(4));
    }

    #[test]
    fn three_stage_detected() {
        let text = r#"{"n": 4, "A_n": "Z/2", "A_n1": "Z/2", "A_n2": "Z/2", "eta1": [[1]], "eta2": [[1]]}"#;
        assert!(matches!(Problem::parse(text).unwrap(), Problem::ThreeStage(_)));
    }

    #[test]
    fn errors_have_positions() {
        let err = Problem::parse("{\"n\": 5,\n \"k\": \"three\"}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let bad_group = r#"{"n": 5, "k": 3, "A_n": "Q", "A_nk": "Z/4", "eta": [[1, 0]]}"#;
        let Problem::TwoStage(p) = Problem::parse(bad_group).unwrap() else { panic!() };
        assert!(matches!(p.to_algebra(&StableTables::defaults()), Err(Error::InvalidGroup(_))));
    }
}
