//! Machine-readable run records.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fgab::{FgAbGroup, GroupHom};
use crate::pi_functors::{GammaTildeResult, Regime};
use crate::realizability::{StemVerdict, SurveyReport, Verdict};
use crate::selftest::SelftestCase;
use crate::tables::Coverage;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaTildeRecord {
    pub n: u32,
    pub k: u32,
    pub group: FgAbGroup,
    pub regime: Regime,
    pub coverage: Coverage,
    pub labels: Vec<String>,
}

impl From<&GammaTildeResult> for GammaTildeRecord {
    fn from(g: &GammaTildeResult) -> Self {
        GammaTildeRecord {
            n: g.n,
            k: g.k,
            group: g.group.clone(),
            regime: g.regime,
            coverage: g.coverage,
            labels: g.labels(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// The command line that produced the report.
    pub command: Vec<String>,
    /// Table provenance: `defaults` and overlay paths, in application order.
    pub tables: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
    /// `O` for 3-stage problems.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction_map: Option<GroupHom>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_tilde: Option<GammaTildeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<FgAbGroup>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub stems: Vec<StemVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub survey: Option<SurveyReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub selftest: Vec<SelftestCase>,
    pub elapsed_us: u64,
}

impl Report {
    pub fn new(command: Vec<String>, tables: Vec<String>) -> Self {
        Report { command, tables, ..Default::default() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> Result<Report> {
        Ok(serde_json::from_str(s)?)
    }
}
