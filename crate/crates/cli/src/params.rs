use serde::{Deserialize, Serialize};
use strgraph::ParamSet;

use crate::error::CliResult;

/// Optional overrides of the bound constants, from flags or a config file.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamOverrides {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    #[serde(default, rename = "C", skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_case_n: Option<usize>,
}

impl ParamOverrides {
    /// Fields set in `self` win over those in `below`.
    pub fn over(self, below: ParamOverrides) -> ParamOverrides {
        ParamOverrides {
            d: self.d.or(below.d),
            b: self.b.or(below.b),
            c: self.c.or(below.c),
            base_case_n: self.base_case_n.or(below.base_case_n),
        }
    }

    /// Unset `C` follows `d` and `b` (`max(8d, 6b + 1)`).
    pub fn resolve(self) -> CliResult<ParamSet> {
        let def = ParamSet::default();
        Ok(ParamSet::new(
            self.d.unwrap_or(def.d),
            self.b.unwrap_or(def.b),
            self.c,
            self.base_case_n.unwrap_or(def.base_case_n),
        )?)
    }
}

/// Effective constants as written into report metadata.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParamsRecord {
    pub d: f64,
    pub b: f64,
    #[serde(rename = "C")]
    pub c: f64,
    pub base_case_n: usize,
}

impl From<ParamSet> for ParamsRecord {
    fn from(p: ParamSet) -> Self {
        ParamsRecord {
            d: p.d,
            b: p.b,
            c: p.c,
            base_case_n: p.base_case_n,
        }
    }
}
