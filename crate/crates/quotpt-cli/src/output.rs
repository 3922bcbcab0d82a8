//! Serializable output shapes and deterministic renderers.
//!
//! Rational coefficients are carried as decimal strings so no integer-width
//! assumption leaks into the JSON surface.

use serde::{Deserialize, Serialize};

use quotpt::scalars::{QSeries, TPoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TTermJson {
    pub exp: i64,
    pub num: String,
    pub den: String,
}

pub fn tpoly_terms(p: &TPoly) -> Vec<TTermJson> {
    p.iter()
        .map(|(exp, c)| TTermJson {
            exp,
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub t_terms: Vec<TTermJson>,
}

impl ScalarJson {
    pub fn of(p: &TPoly) -> Self {
        ScalarJson {
            t_terms: tpoly_terms(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTermJson {
    pub q: i64,
    pub t_terms: Vec<TTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesMetaJson {
    pub chi_min: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub genus: i64,
    pub degree: i64,
    pub series: Vec<SeriesTermJson>,
    pub meta: SeriesMetaJson,
}

pub fn series_terms(s: &QSeries) -> Vec<SeriesTermJson> {
    s.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(q, c)| SeriesTermJson {
            q,
            t_terms: tpoly_terms(c),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContributionJson {
    pub genus: i64,
    pub degree: i64,
    pub e: i64,
    pub n: i64,
    pub value: ScalarJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantJson {
    pub genus: i64,
    pub degree: i64,
    pub chi: i64,
    pub value: ScalarJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalJson {
    pub genus: i64,
    pub degree: i64,
    pub chi_min: i64,
    pub value: ScalarJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRowJson {
    pub genus: i64,
    pub j: i64,
    pub k: i64,
    pub l: i64,
    pub oracle: String,
    pub closed_form: String,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReportJson {
    pub gmax: i64,
    pub rank: i64,
    pub all_match: bool,
    pub rows: Vec<OracleRowJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GwPtJson {
    pub genus: i64,
    pub degree: i64,
    pub matches: bool,
    pub gw_side: String,
    pub pt_side: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountJson {
    pub genus: i64,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacmahonJson {
    pub order: i64,
    pub series: Vec<SeriesTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DtZeroJson {
    pub genus: i64,
    pub degree: i64,
    pub order: i64,
    pub exponent: i64,
    pub series: Vec<SeriesTermJson>,
}
