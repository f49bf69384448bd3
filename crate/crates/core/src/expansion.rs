//! Recursive expansion of small trapping sets into larger ones: the
//! elementary and general single-step expansions, degree-2 growth, the
//! combined pipeline, threshold policies and the deduplicating store.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::cycles::{
    connections_at_depth, enumerate_cycles, low_ace_cycles, CycleStructure, PrunedView,
    SearchMode,
};
use crate::error::{Error, Result};
use crate::graph::{girth, Girth, TannerGraph};
use crate::trapset::{canonical, is_in_t, neighborhood_split, ClassifyMode, SetKey, TrappingSet};

/// Which candidate sets survive a round, judged on their number `b` of
/// unsatisfied checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ThresholdPolicy {
    /// Keep sets with `b <= T`.
    FixedT(usize),
    /// For each size, keep sets whose `b` is among the `s` smallest distinct
    /// values seen at that size.
    SmallestB(usize),
    /// Keep everything.
    Unbounded,
}

impl ThresholdPolicy {
    /// Largest admissible `b`, given every `b` known at this size.
    fn cutoff(self, known: impl Iterator<Item = usize>) -> usize {
        match self {
            ThresholdPolicy::FixedT(t) => t,
            ThresholdPolicy::Unbounded => usize::MAX,
            ThresholdPolicy::SmallestB(s) => {
                let distinct: BTreeSet<usize> = known.collect();
                distinct
                    .into_iter()
                    .nth(s.saturating_sub(1))
                    .unwrap_or(usize::MAX)
            }
        }
    }

    /// Upper bound on `b` usable for pruning, if the policy has one.
    pub fn b_cap(self) -> Option<usize> {
        match self {
            ThresholdPolicy::FixedT(t) => Some(t),
            _ => None,
        }
    }
}

/// Search parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionConfig {
    /// Maximum trapping-set size.
    pub k: usize,
    pub policy: ThresholdPolicy,
    pub mode: SearchMode,
    /// Concrete cycle lengths used as seeds.
    pub init_cycle_lengths: Vec<usize>,
    /// Also seed with cycles of length `<= ace_len` whose ACE is below this.
    pub ace_max: Option<usize>,
    pub ace_len: usize,
    /// Seed the degree-2 phase with single variables of degree in
    /// `2..=cap`.
    pub include_low_degree_vars: Option<usize>,
    /// Remove variables that cannot belong to any `(a, b)` set with
    /// `a <= k` and `b <=` this cap.
    pub prune_b_cap: Option<usize>,
    /// Run degree-2 growth after the cycle-seeded expansion.
    pub degree2_phase: bool,
    /// Exempt degree-2 variables from the two-satisfied-checks rule when
    /// classifying and filtering.
    pub relax_degree2: bool,
    /// Maximum variables added per step in general mode.
    pub general_step_cap: usize,
    /// Error out once the store holds more sets than this.
    pub max_store: Option<usize>,
}

impl ExpansionConfig {
    pub fn new(k: usize, policy: ThresholdPolicy) -> Self {
        ExpansionConfig {
            k,
            policy,
            mode: SearchMode::Elementary,
            init_cycle_lengths: Vec::new(),
            ace_max: None,
            ace_len: 0,
            include_low_degree_vars: None,
            prune_b_cap: None,
            degree2_phase: false,
            relax_degree2: false,
            general_step_cap: 3,
            max_store: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::Config("k must be at least 1".into()));
        }
        if self.policy == ThresholdPolicy::SmallestB(0) {
            return Err(Error::Config("smallest-b count must be at least 1".into()));
        }
        if self.ace_len % 2 != 0 {
            return Err(Error::Config("ACE cycle length must be even".into()));
        }
        if let Some(&l) = self.init_cycle_lengths.iter().find(|&&l| l % 2 != 0 || l < 4) {
            return Err(Error::Config(format!("cycle length {l} is not an even length >= 4")));
        }
        if self.general_step_cap == 0 {
            return Err(Error::Config("general step cap must be at least 1".into()));
        }
        Ok(())
    }

    fn classify_mode(&self) -> ClassifyMode {
        ClassifyMode {
            relax_degree2: self.relax_degree2,
        }
    }
}

/// Deduplicating collection of trapping sets, indexed by `(a, b)` class.
#[derive(Debug, Clone, Default)]
pub struct TrapSetStore {
    sets: HashMap<SetKey, TrappingSet>,
    classes: BTreeMap<(usize, usize), BTreeSet<SetKey>>,
    cap: Option<usize>,
}

impl TrapSetStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(cap: Option<usize>) -> Self {
        TrapSetStore {
            cap,
            ..Self::default()
        }
    }

    /// Inserts `set`; returns false if an equal variable set is present.
    pub fn insert(&mut self, set: TrappingSet) -> Result<bool> {
        let key = set.key();
        if self.sets.contains_key(&key) {
            return Ok(false);
        }
        if let Some(cap) = self.cap {
            if self.sets.len() >= cap {
                return Err(Error::StoreOverflow { cap });
            }
        }
        self.classes.entry(set.class()).or_default().insert(key.clone());
        self.sets.insert(key, set);
        Ok(true)
    }

    pub fn contains(&self, key: &SetKey) -> bool {
        self.sets.contains_key(key)
    }

    pub fn get(&self, key: &SetKey) -> Option<&TrappingSet> {
        self.sets.get(key)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `(a, b, count)` sorted by `a` then `b`.
    pub fn class_counts(&self) -> Vec<(usize, usize, usize)> {
        self.classes
            .iter()
            .map(|(&(a, b), members)| (a, b, members.len()))
            .collect()
    }

    pub fn count(&self, a: usize, b: usize) -> usize {
        self.classes.get(&(a, b)).map_or(0, BTreeSet::len)
    }

    /// Members of one class in lexicographic order.
    pub fn class_members(&self, a: usize, b: usize) -> impl Iterator<Item = &TrappingSet> {
        self.classes
            .get(&(a, b))
            .into_iter()
            .flatten()
            .map(|k| &self.sets[k])
    }

    /// All sets sorted by `a`, `b`, then variables.
    pub fn iter(&self) -> impl Iterator<Item = &TrappingSet> {
        self.classes.values().flatten().map(|k| &self.sets[k])
    }

    /// b values of the sets of size `a`.
    fn b_values_of_size(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.classes.range((a, 0)..=(a, usize::MAX)).map(|(&(_, b), _)| b)
    }
}

/// Counters for one size level of a search phase.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundStats {
    pub round: usize,
    pub phase: Phase,
    pub size: usize,
    /// Sets of this size fed to the next expansion step.
    pub inputs: usize,
    /// Distinct new candidate sets of this size.
    pub candidates: usize,
    /// Candidates stored.
    pub accepted: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    CycleExpansion,
    Degree2,
}

/// What the seeds were made of.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SeedReport {
    /// Cycle length → cycles found at that length.
    pub cycles_by_length: BTreeMap<usize, usize>,
    pub low_ace_cycles: usize,
    /// Distinct variable sets among all seed cycles.
    pub distinct_sets: usize,
    /// Seed sets admitted although they fail the membership test.
    pub not_in_t: usize,
    /// Seed sets larger than `k`, dropped.
    pub oversized: usize,
    /// Single-variable seeds of the degree-2 phase.
    pub low_degree_vars: usize,
    /// Variables removed by high-degree pruning.
    pub pruned_vars: usize,
}

/// Outcome of [`search`].
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub store: TrapSetStore,
    pub rounds: Vec<RoundStats>,
    pub seeds: SeedReport,
}

fn pruned_for_elementary<'g>(graph: &'g TannerGraph, t: &TrappingSet) -> PrunedView<'g> {
    let mut view = PrunedView::new(graph);
    for &c in &t.gamma_even {
        view.remove_chk(c);
        for &v in graph.chk_neighbors(c) {
            view.remove_var(v);
        }
    }
    for &v in &t.vars {
        view.remove_var(v);
    }
    view
}

/// All minimal-`i` structures over the start checks, searched layer by
/// layer up to `i_max`: equivalent to scanning the start checks in order
/// with a shrinking `i_max`, keeping every structure at the final minimum.
fn minimal_structures(
    view: &PrunedView<'_>,
    starts: &[usize],
    targets: &[usize],
    i_max: usize,
    mode: SearchMode,
) -> Vec<CycleStructure> {
    for depth in 1..=i_max {
        let found: Vec<CycleStructure> = starts
            .iter()
            .flat_map(|&c| connections_at_depth(view, c, targets, depth, mode))
            .collect();
        if !found.is_empty() {
            return found;
        }
    }
    Vec::new()
}

fn unions(t: &TrappingSet, structures: &[CycleStructure]) -> Vec<SetKey> {
    let out: BTreeSet<SetKey> = structures
        .iter()
        .map(|s| {
            let mut vars = t.vars.clone();
            vars.extend_from_slice(&s.var_set);
            canonical(&vars)
        })
        .collect();
    out.into_iter().collect()
}

/// One elementary expansion step of `t`: every smallest elementary
/// superset reachable through a path between two unsatisfied checks or a
/// lollipop walk from one, of size at most `k`.
pub fn expand_elementary(graph: &TannerGraph, t: &TrappingSet, k: usize) -> Vec<TrappingSet> {
    expand_elementary_keys(graph, t, k)
        .into_iter()
        .map(|key| TrappingSet::new(graph, key.as_slice(), ClassifyMode::STRICT))
        .filter(|s| s.flags.elementary)
        .collect()
}

fn expand_elementary_keys(graph: &TannerGraph, t: &TrappingSet, k: usize) -> Vec<SetKey> {
    if t.gamma_odd.is_empty() || t.a >= k {
        return Vec::new();
    }
    let view = pruned_for_elementary(graph, t);
    let found = minimal_structures(
        &view,
        &t.gamma_odd,
        &t.gamma_odd,
        k - t.a,
        SearchMode::Elementary,
    );
    unions(t, &found)
}

/// One general (possibly non-elementary) expansion step of `t`, adding at
/// most `step_cap` variables; candidates must pass the membership test.
pub fn expand_general(
    graph: &TannerGraph,
    t: &TrappingSet,
    k: usize,
    step_cap: usize,
    mode: ClassifyMode,
) -> Vec<TrappingSet> {
    expand_general_keys(graph, t, k, step_cap)
        .into_iter()
        .map(|key| TrappingSet::new(graph, key.as_slice(), mode))
        .filter(|s| s.flags.in_t)
        .collect()
}

fn expand_general_keys(graph: &TannerGraph, t: &TrappingSet, k: usize, step_cap: usize) -> Vec<SetKey> {
    if t.a >= k {
        return Vec::new();
    }
    let mut view = PrunedView::new(graph);
    for &v in &t.vars {
        view.remove_var(v);
    }
    let mut all: Vec<usize> = t.gamma_odd.iter().chain(&t.gamma_even).copied().collect();
    all.sort_unstable();
    let i_max = (k - t.a).min(step_cap);
    let found = minimal_structures(&view, &all, &all, i_max, SearchMode::General);
    unions(t, &found)
}

/// Context shared by the phases of one search: the graph searched over,
/// the graph sets are classified against, and the configuration.
struct Engine<'a> {
    search_graph: &'a TannerGraph,
    graph: &'a TannerGraph,
    config: &'a ExpansionConfig,
}

impl Engine<'_> {
    fn classify(&self, key: &SetKey) -> TrappingSet {
        TrappingSet::new(self.graph, key.as_slice(), self.config.classify_mode())
    }

    /// Candidate keys produced by one expansion step of `t`.
    fn expand(&self, t: &TrappingSet) -> Vec<SetKey> {
        match self.config.mode {
            SearchMode::Elementary => expand_elementary_keys(self.search_graph, t, self.config.k),
            SearchMode::General => {
                expand_general_keys(self.search_graph, t, self.config.k, self.config.general_step_cap)
            }
        }
    }

    /// Whether a classified candidate may be stored, before thresholds.
    fn admissible(&self, s: &TrappingSet) -> bool {
        match self.config.mode {
            SearchMode::Elementary => s.flags.elementary,
            SearchMode::General => s.flags.in_t,
        }
    }

    /// Applies the threshold round-wise to `candidates`, all of one size,
    /// inserting survivors into `store`.
    fn accept(&self, store: &mut TrapSetStore, size: usize, candidates: Vec<TrappingSet>) -> Result<Vec<TrappingSet>> {
        let known: Vec<usize> = candidates
            .iter()
            .map(|s| s.b)
            .chain(store.b_values_of_size(size))
            .collect();
        let cutoff = self.config.policy.cutoff(known.into_iter());
        let mut accepted = Vec::new();
        for s in candidates.into_iter().filter(|s| s.b <= cutoff) {
            if store.insert(s.clone())? {
                accepted.push(s);
            }
        }
        Ok(accepted)
    }

    /// Cycle-seeded expansion, processed one size level at a time so that
    /// every candidate of a size is known before thresholds apply.
    fn cycle_phase(
        &self,
        seeds: BTreeSet<SetKey>,
        store: &mut TrapSetStore,
        rounds: &mut Vec<RoundStats>,
    ) -> Result<()> {
        let mut pending: BTreeMap<usize, BTreeSet<SetKey>> = BTreeMap::new();
        let mut seed_sizes: BTreeMap<usize, BTreeSet<SetKey>> = BTreeMap::new();
        for key in seeds {
            seed_sizes.entry(key.as_slice().len()).or_default().insert(key.clone());
            pending.entry(key.as_slice().len()).or_default().insert(key);
        }
        while let Some((size, keys)) = pending.pop_first() {
            let fresh: Vec<SetKey> = keys.into_iter().filter(|k| !store.contains(k)).collect();
            let is_seed = seed_sizes.get(&size);
            let candidates: Vec<TrappingSet> = fresh
                .par_iter()
                .map(|k| self.classify(k))
                .collect::<Vec<_>>()
                .into_iter()
                .zip(&fresh)
                .filter(|(s, k)| is_seed.is_some_and(|seeds| seeds.contains(*k)) || self.admissible(s))
                .map(|(s, _)| s)
                .collect();
            let n_candidates = candidates.len();
            let accepted = self.accept(store, size, candidates)?;
            let inputs = if size < self.config.k { accepted.len() } else { 0 };
            rounds.push(RoundStats {
                round: rounds.len(),
                phase: Phase::CycleExpansion,
                size,
                inputs,
                candidates: n_candidates,
                accepted: accepted.len(),
            });
            if inputs == 0 {
                continue;
            }
            let produced: Vec<Vec<SetKey>> = accepted.par_iter().map(|t| self.expand(t)).collect();
            for key in produced.into_iter().flatten() {
                pending.entry(key.as_slice().len()).or_default().insert(key);
            }
        }
        Ok(())
    }

    /// Degree-2 growth to a fixpoint. `inputs` are expanded but not stored
    /// themselves; every accepted output is both stored and expanded.
    fn degree2_phase(
        &self,
        inputs: Vec<SetKey>,
        store: &mut TrapSetStore,
        rounds: &mut Vec<RoundStats>,
    ) -> Result<()> {
        let relaxed = ClassifyMode::RELAXED;
        let mut frontier: BTreeMap<usize, BTreeSet<SetKey>> = BTreeMap::new();
        for key in inputs {
            frontier.entry(key.as_slice().len()).or_default().insert(key);
        }
        let mut pending: BTreeMap<usize, BTreeSet<SetKey>> = BTreeMap::new();
        loop {
            let next = match (frontier.first_key_value(), pending.first_key_value()) {
                (None, None) => break,
                (Some((&a, _)), None) | (None, Some((&a, _))) => a,
                (Some((&a, _)), Some((&b, _))) => a.min(b),
            };
            let mut to_expand: Vec<SetKey> = frontier.remove(&next).unwrap_or_default().into_iter().collect();
            let keys = pending.remove(&next).unwrap_or_default();
            let fresh: Vec<SetKey> = keys.into_iter().filter(|k| !store.contains(k)).collect();
            let candidates: Vec<TrappingSet> = fresh
                .par_iter()
                .filter_map(|k| {
                    let split = neighborhood_split(self.graph, k.as_slice());
                    is_in_t(self.graph, k.as_slice(), &split, relaxed).then(|| self.classify(k))
                })
                .collect();
            let n_candidates = candidates.len();
            let accepted = self.accept(store, next, candidates)?;
            to_expand.extend(accepted.iter().map(TrappingSet::key));
            to_expand.sort_unstable();
            to_expand.dedup();
            let inputs = if next < self.config.k { to_expand.len() } else { 0 };
            rounds.push(RoundStats {
                round: rounds.len(),
                phase: Phase::Degree2,
                size: next,
                inputs,
                candidates: n_candidates,
                accepted: accepted.len(),
            });
            if inputs == 0 {
                continue;
            }
            let produced: Vec<Vec<SetKey>> = to_expand
                .par_iter()
                .map(|k| degree2_children(self.search_graph, k.as_slice()))
                .collect();
            for key in produced.into_iter().flatten() {
                pending.entry(key.as_slice().len()).or_default().insert(key);
            }
        }
        Ok(())
    }
}

/// `t ∪ {v}` for every degree-2 variable `v ∉ t` adjacent to an unsatisfied
/// check of `t`.
fn degree2_children(graph: &TannerGraph, t: &[usize]) -> Vec<SetKey> {
    let split = neighborhood_split(graph, t);
    let mut n2: Vec<usize> = split
        .gamma_odd
        .iter()
        .flat_map(|&c| graph.chk_neighbors(c).iter().copied())
        .filter(|&v| graph.var_degree(v) == 2 && t.binary_search(&v).is_err())
        .collect();
    n2.sort_unstable();
    n2.dedup();
    n2.into_iter()
        .map(|v| {
            let mut vars = t.to_vec();
            vars.push(v);
            canonical(&vars)
        })
        .collect()
}

/// One expansion step over every input, with round-wise thresholds applied
/// per output size.
pub fn algorithm1(graph: &TannerGraph, inputs: &[TrappingSet], config: &ExpansionConfig) -> Result<TrapSetStore> {
    config.validate()?;
    let engine = Engine {
        search_graph: graph,
        graph,
        config,
    };
    let produced: Vec<Vec<SetKey>> = inputs.par_iter().map(|t| engine.expand(t)).collect();
    let mut by_size: BTreeMap<usize, BTreeSet<SetKey>> = BTreeMap::new();
    for key in produced.into_iter().flatten() {
        by_size.entry(key.as_slice().len()).or_default().insert(key);
    }
    let mut store = TrapSetStore::with_cap(config.max_store);
    for (size, keys) in by_size {
        let candidates: Vec<TrappingSet> = keys
            .iter()
            .map(|k| engine.classify(k))
            .filter(|s| engine.admissible(s))
            .collect();
        engine.accept(&mut store, size, candidates)?;
    }
    Ok(store)
}

/// Degree-2 growth of `inputs` to a fixpoint; only grown sets are returned.
pub fn algorithm2(graph: &TannerGraph, inputs: &[TrappingSet], config: &ExpansionConfig) -> Result<TrapSetStore> {
    config.validate()?;
    let engine = Engine {
        search_graph: graph,
        graph,
        config,
    };
    let mut store = TrapSetStore::with_cap(config.max_store);
    let mut rounds = Vec::new();
    engine.degree2_phase(inputs.iter().map(TrappingSet::key).collect(), &mut store, &mut rounds)?;
    Ok(store)
}

/// Cycle-seeded expansion followed by degree-2 growth of its outputs and
/// of the low-degree single variables.
pub fn algorithm3(graph: &TannerGraph, config: &ExpansionConfig) -> Result<SearchResult> {
    let mut config = config.clone();
    config.degree2_phase = true;
    search(graph, &config)
}

/// Removes the edges of every variable whose degree rules it out of all
/// sets with `a <= k` and `b <= b_cap`. Indices are preserved.
pub fn prune_high_degree(graph: &TannerGraph, k: usize, b_cap: usize) -> TannerGraph {
    let removed: Vec<bool> = (0..graph.n())
        .map(|v| (graph.var_degree(v) + 1).saturating_sub(b_cap) > k)
        .collect();
    graph.without_vars(&removed)
}

fn collect_seeds(graph: &TannerGraph, config: &ExpansionConfig, report: &mut SeedReport) -> Vec<CycleStructure> {
    let lengths: BTreeSet<usize> = config.init_cycle_lengths.iter().copied().collect();
    let mut cycles = Vec::new();
    if let Some(&max_len) = lengths.last() {
        for c in enumerate_cycles(graph, max_len) {
            if lengths.contains(&c.len()) {
                *report.cycles_by_length.entry(c.len()).or_default() += 1;
                cycles.push(c);
            }
        }
    }
    if let Some(ace_max) = config.ace_max {
        let low = low_ace_cycles(graph, config.ace_len, ace_max);
        report.low_ace_cycles = low.len();
        cycles.extend(low);
    }
    cycles
}

/// Top-level driver: seeds from the configured cycles, repeated expansion
/// up to size `k`, then the optional degree-2 phase.
pub fn search(graph: &TannerGraph, config: &ExpansionConfig) -> Result<SearchResult> {
    config.validate()?;
    if matches!(girth(graph), Girth::Finite(g) if g <= 4) {
        return Err(Error::UnsupportedGirth);
    }
    if graph.min_var_degree() < 2 {
        return Err(Error::InvalidGraph("search requires every variable to have degree >= 2".into()));
    }
    let mut seeds = SeedReport::default();
    let pruned;
    let search_graph = match config.prune_b_cap {
        Some(cap) => {
            pruned = prune_high_degree(graph, config.k, cap);
            seeds.pruned_vars = (0..graph.n())
                .filter(|&v| pruned.var_degree(v) == 0)
                .count();
            &pruned
        }
        None => graph,
    };
    let engine = Engine {
        search_graph,
        graph,
        config,
    };

    let cycles = collect_seeds(search_graph, config, &mut seeds);
    let mut seed_keys: BTreeSet<SetKey> = cycles.iter().map(|c| canonical(&c.var_set)).collect();
    seeds.distinct_sets = seed_keys.len();
    seed_keys.retain(|k| k.as_slice().len() <= config.k);
    seeds.oversized = seeds.distinct_sets - seed_keys.len();
    seeds.not_in_t = seed_keys
        .iter()
        .filter(|k| {
            let split = neighborhood_split(graph, k.as_slice());
            !is_in_t(graph, k.as_slice(), &split, config.classify_mode())
        })
        .count();

    let mut store = TrapSetStore::with_cap(config.max_store);
    let mut rounds = Vec::new();
    engine.cycle_phase(seed_keys, &mut store, &mut rounds)?;

    if config.degree2_phase {
        let mut inputs: Vec<SetKey> = store.iter().map(TrappingSet::key).collect();
        if let Some(cap) = config.include_low_degree_vars {
            let singles: Vec<SetKey> = (0..graph.n())
                .filter(|&v| (2..=cap).contains(&search_graph.var_degree(v)))
                .map(|v| canonical(&[v]))
                .collect();
            seeds.low_degree_vars = singles.len();
            inputs.extend(singles);
        }
        engine.degree2_phase(inputs, &mut store, &mut rounds)?;
    }
    Ok(SearchResult { store, rounds, seeds })
}

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::graph::TannerGraph;

    /// F2 with a pendant 2-chain of three degree-2 variables joining the
    /// unsatisfied checks of `{v0, v1, v2}`' neighbors c03 and c13 through
    /// two extra checks: v4 on (c03, x0), v5 on (x0, x1), v6 on (x1, c13).
    pub fn f2_with_chain() -> TannerGraph {
        let mut edges = vec![
            (0, 0),
            (1, 0),
            (0, 1),
            (2, 1),
            (0, 2),
            (3, 2),
            (1, 3),
            (2, 3),
            (1, 4),
            (3, 4),
            (2, 5),
            (3, 5),
        ];
        edges.extend([(4, 2), (4, 6), (5, 6), (5, 7), (6, 7), (6, 4)]);
        TannerGraph::from_edges(7, 8, edges).unwrap()
    }
}
