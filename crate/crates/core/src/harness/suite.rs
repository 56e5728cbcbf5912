use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{extremal_params, rho_bound};
use crate::error::{Error, Result};

use super::enumerate::{family, DEFAULT_TIE_TOL};
use super::verify::{verify_against, Interpretation, Tolerances, VerificationReport, DEFAULT_BOUND_TOL};

/// Every `k` from 1 to `m` for each `m` in `m_min..=m_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeSpec {
    pub r: usize,
    #[serde(default = "one")]
    pub m_min: usize,
    pub m_max: usize,
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub m: usize,
    pub k: usize,
    pub r: usize,
}

fn default_bound_tol() -> f64 {
    DEFAULT_BOUND_TOL
}

fn default_tie_tol() -> f64 {
    DEFAULT_TIE_TOL
}

/// Suite configuration, read from JSON. Missing fields mean "nothing", so an
/// empty object runs an empty suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub ranges: Vec<RangeSpec>,
    #[serde(default)]
    pub triples: Vec<Triple>,
    #[serde(default)]
    pub at_least: bool,
    #[serde(default = "default_bound_tol")]
    pub bound_tol: f64,
    #[serde(default = "default_tie_tol")]
    pub tie_tol: f64,
    #[serde(default)]
    pub csv: Option<PathBuf>,
    #[serde(default)]
    pub json: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            ranges: Vec::new(),
            triples: Vec::new(),
            at_least: false,
            bound_tol: DEFAULT_BOUND_TOL,
            tie_tol: DEFAULT_TIE_TOL,
            csv: None,
            json: None,
        }
    }
}

impl SuiteConfig {
    /// r = 2 up to 8 edges, r = 3 up to 6, r = 4 up to 5.
    pub fn desk_scale() -> Self {
        SuiteConfig {
            ranges: vec![
                RangeSpec { r: 2, m_min: 1, m_max: 8 },
                RangeSpec { r: 3, m_min: 1, m_max: 6 },
                RangeSpec { r: 4, m_min: 1, m_max: 5 },
            ],
            ..Self::default()
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        Self::from_json_str(&fs::read_to_string(path)?)
    }

    /// Explicit triples first, then ranges, without duplicates.
    pub fn triples(&self) -> Vec<Triple> {
        let mut out = self.triples.clone();
        for range in &self.ranges {
            for m in range.m_min..=range.m_max {
                for k in 1..=m {
                    out.push(Triple { m, k, r: range.r });
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        out.retain(|t| seen.insert(*t));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub rows: Vec<VerificationReport>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "m", "k", "r", "q", "s", "l", "classes", "winner_code", "winner_rho", "bound_rho", "unique",
            "matches_bound",
        ])
        .map_err(csv_err)?;
        for row in &self.rows {
            let mut rec = vec![
                row.m.to_string(),
                row.k.to_string(),
                row.r.to_string(),
                row.q.to_string(),
                row.s.to_string(),
                row.l.to_string(),
            ];
            if row.feasible {
                rec.extend([
                    row.class_count.to_string(),
                    row.winner_code.clone().unwrap_or_default(),
                    row.winner_rho.map(fmt_float).unwrap_or_default(),
                    row.bound_rho.map(fmt_float).unwrap_or_default(),
                    row.unique.to_string(),
                    row.matches_bound.to_string(),
                ]);
            } else {
                rec.extend(["".into(), "infeasible".into(), "".into(), "".into(), "".into(), "".into()]);
            }
            w.write_record(&rec).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

fn fmt_float(x: f64) -> String {
    format!("{x:.12}")
}

/// Runs every configured verification and writes the requested reports.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let triples = config.triples();
    let interpretation = Interpretation::from_flag(config.at_least);
    let tol = Tolerances { bound: config.bound_tol, tie: config.tie_tol };

    let mut needed: Vec<(usize, usize)> = Vec::new();
    for t in &triples {
        if extremal_params(t.m, t.k, t.r)?.feasible && !needed.contains(&(t.m, t.r)) {
            needed.push((t.m, t.r));
        }
    }
    let families: BTreeMap<(usize, usize), _> = needed
        .par_iter()
        .map(|&(m, r)| family(m, r).map(|f| ((m, r), f)))
        .collect::<Result<_>>()?;

    let rows = triples
        .par_iter()
        .map(|t| {
            let params = extremal_params(t.m, t.k, t.r)?;
            if !params.feasible {
                return VerificationReport::infeasible(t.m, t.k, t.r, interpretation);
            }
            let bound = rho_bound(t.m, t.k, t.r)?;
            verify_against(&families[&(t.m, t.r)], t.k, interpretation, &bound, &tol)
        })
        .collect::<Result<Vec<_>>>()?;
    let passed = rows.iter().all(VerificationReport::passed);
    let report = SuiteReport { rows, passed };

    if let Some(path) = &config.csv {
        fs::write(path, report.to_csv()?)?;
    }
    if let Some(path) = &config.json {
        fs::write(path, report.to_json()?)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config() {
        let cfg = SuiteConfig::from_json_str("{}").unwrap();
        let rep = run_suite(&cfg).unwrap();
        assert!(rep.rows.is_empty());
        assert_eq!(rep.exit_code(), 0);
        assert_eq!(rep.to_csv().unwrap().lines().count(), 1);
    }

    #[test]
    fn infeasible_row() {
        let cfg = SuiteConfig::from_json_str(r#"{"triples":[{"m":5,"k":4,"r":3},{"m":3,"k":2,"r":3}]}"#).unwrap();
        let rep = run_suite(&cfg).unwrap();
        assert_eq!(rep.exit_code(), 0);
        let csv = rep.to_csv().unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "m,k,r,q,s,l,classes,winner_code,winner_rho,bound_rho,unique,matches_bound");
        assert_eq!(lines[1], "5,4,3,1,1,0,,infeasible,,,,");
        assert!(lines[2].starts_with("3,2,3,0,1,1,1,"));
        assert!(lines[2].ends_with(",true,true"));
    }

    #[test]
    fn unknown_field_rejected() {
        assert!(SuiteConfig::from_json_str(r#"{"rangez":[]}"#).is_err());
    }

    #[test]
    fn expands_ranges() {
        let cfg = SuiteConfig { ranges: vec![RangeSpec { r: 3, m_min: 2, m_max: 3 }], ..SuiteConfig::default() };
        assert_eq!(cfg.triples().len(), 5);
    }
}
