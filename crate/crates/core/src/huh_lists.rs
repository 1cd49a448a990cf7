//! Huh's lists of hypersurfaces with polar degree one and two.
//!
//! The bundled data holds the three configurations of polar degree 1 (keys
//! `i`, `ii`, `iii`) and the twelve conjectured configurations of polar degree
//! 2 (keys `1` to `12`). A smooth quadric is recorded in the plane; every other
//! dimension behaves the same way.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polar::Configuration;
use crate::search::SearchCache;
use crate::semicontinuity::check_configuration;

const DATA: &str = include_str!("../data/huh_lists.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HuhEntry {
    pub id: String,
    pub pol: u64,
    pub config: Configuration,
}

#[derive(Deserialize)]
struct RawEntry {
    pol: u64,
    n: u32,
    d: u32,
    germs: Vec<String>,
}

fn sort_key(id: &str) -> (u8, u32) {
    match id {
        "i" => (0, 1),
        "ii" => (0, 2),
        "iii" => (0, 3),
        _ => (1, id.parse().unwrap_or(u32::MAX)),
    }
}

/// Entries of the bundled lists, polar degree 1 first.
pub fn huh_entries() -> Result<Vec<HuhEntry>> {
    let raw: BTreeMap<String, RawEntry> =
        serde_json::from_str(DATA).map_err(|e| Error::Parse(format!("huh_lists.json: {e}")))?;
    let mut out = raw
        .into_iter()
        .map(|(id, e)| {
            let names: Vec<&str> = e.germs.iter().map(String::as_str).collect();
            Ok(HuhEntry { config: Configuration::parse(e.n, e.d, &names)?, id, pol: e.pol })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|e| sort_key(&e.id));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryVerdict {
    pub id: String,
    pub config: Configuration,
    pub expected_pol: u64,
    pub polar_degree: Option<u64>,
    pub semicontinuity_holds: bool,
    pub in_survivors: bool,
    pub passed: bool,
    pub diagnosis: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HuhVerification {
    pub passed: usize,
    pub total: usize,
    pub entries: Vec<EntryVerdict>,
}

impl HuhVerification {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

/// Checks every entry's polar degree, its semicontinuity and its presence among
/// the search survivors for `(n, d, pol)`.
pub fn verify_huh_lists() -> Result<HuhVerification> {
    let mut cache = SearchCache::default();
    let mut entries = Vec::new();
    for HuhEntry { id, pol, config } in huh_entries()? {
        let mut diagnosis = Vec::new();
        let polar_degree = match config.polar_degree() {
            Ok(p) => {
                if p != pol {
                    diagnosis.push(format!("polar degree is {p}, expected {pol}"));
                }
                Some(p)
            }
            Err(e) => {
                diagnosis.push(e.to_string());
                None
            }
        };
        let report = check_configuration::<BigInt>(&config, true)?;
        if !report.holds {
            let v = &report.violations[0];
            diagnosis.push(format!(
                "semicontinuity fails on the {} window at a = {}: {} > {}",
                v.kind.label(),
                v.a,
                v.lhs,
                v.rhs
            ));
        }
        let in_survivors = cache.get(config.n(), config.d(), pol)?.survivors.contains(&config);
        if !in_survivors {
            diagnosis.push(format!(
                "not among the search survivors for (n, d, k) = ({}, {}, {pol})",
                config.n(),
                config.d()
            ));
        }
        entries.push(EntryVerdict {
            id,
            config,
            expected_pol: pol,
            polar_degree,
            semicontinuity_holds: report.holds,
            in_survivors,
            passed: diagnosis.is_empty(),
            diagnosis,
        });
    }
    Ok(HuhVerification { passed: entries.iter().filter(|e| e.passed).count(), total: entries.len(), entries })
}
