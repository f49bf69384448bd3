//! Serializable run reports: code metadata, configuration echo, the
//! `(a, b)` class table, optional member lists and per-round statistics.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::expansion::{RoundStats, SearchResult, SeedReport, TrapSetStore};
use crate::graph::{degree_profile, girth, DegreeProfile, Girth, TannerGraph};

/// Facts about the code a report was produced from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CodeMeta {
    pub n: usize,
    pub m: usize,
    pub girth: Girth,
    pub profile: DegreeProfile,
    /// SHA-256 of the input file, or of the generator name for built-in
    /// codes.
    pub input_sha256: String,
}

impl CodeMeta {
    pub fn new(graph: &TannerGraph, input_sha256: impl Into<String>) -> Self {
        CodeMeta {
            n: graph.n(),
            m: graph.m(),
            girth: girth(graph),
            profile: degree_profile(graph),
            input_sha256: input_sha256.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub a: usize,
    pub b: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RoundRow {
    pub round: usize,
    pub inputs: usize,
    pub candidates: usize,
    pub accepted: usize,
}

impl From<&RoundStats> for RoundRow {
    fn from(r: &RoundStats) -> Self {
        RoundRow {
            round: r.round,
            inputs: r.inputs,
            candidates: r.candidates,
            accepted: r.accepted,
        }
    }
}

/// Everything a scan or oracle run produces. Without timings the JSON form
/// depends only on the input and the configuration.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub meta: CodeMeta,
    pub config: serde_json::Value,
    pub classes: Vec<ClassRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Vec<usize>>>,
    pub rounds: Vec<RoundRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seeds: Option<SeedReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<String, u64>>,
}

impl RunReport {
    /// Report over a bare store, as produced by the oracle.
    pub fn from_store<C: Serialize>(meta: CodeMeta, config: &C, store: &TrapSetStore, emit_sets: bool) -> Self {
        RunReport {
            meta,
            config: serde_json::to_value(config).expect("config serializes"),
            classes: store
                .class_counts()
                .into_iter()
                .map(|(a, b, count)| ClassRow { a, b, count })
                .collect(),
            members: emit_sets.then(|| store.iter().map(|t| t.vars.clone()).collect()),
            rounds: Vec::new(),
            seeds: None,
            timing_ms: None,
        }
    }

    pub fn from_search<C: Serialize>(meta: CodeMeta, config: &C, result: &SearchResult, emit_sets: bool) -> Self {
        let mut report = Self::from_store(meta, config, &result.store, emit_sets);
        report.rounds = result.rounds.iter().map(RoundRow::from).collect();
        report.seeds = Some(result.seeds.clone());
        report
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per `(a, b)` class.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("a,b,count\n");
        for row in &self.classes {
            let _ = writeln!(s, "{},{},{}", row.a, row.b, row.count);
        }
        s
    }
}
