//! Exhaustive reference enumerator for small graphs.
//!
//! The default mode grows connected variable subsets (every connected
//! subset is visited exactly once, rooted at its smallest variable) and
//! prunes branches that provably cannot reach the query. A raw mode visits
//! every subset of each size, for auditing the pruned mode.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansion::TrapSetStore;
use crate::graph::{girth, Girth, TannerGraph};
use crate::trapset::{ClassifyMode, TrappingSet};

/// A family predicate; a query keeps sets satisfying all of its filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassFilter {
    Any,
    InT,
    Elementary,
    Absorbing,
    FullyAbsorbing,
    Zp,
}

impl ClassFilter {
    fn accepts(self, t: &TrappingSet) -> bool {
        let f = &t.flags;
        match self {
            ClassFilter::Any => true,
            ClassFilter::InT => f.in_t,
            ClassFilter::Elementary => f.elementary,
            ClassFilter::Absorbing => f.absorbing,
            ClassFilter::FullyAbsorbing => f.fully_absorbing,
            ClassFilter::Zp => f.zp == Some(true),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleQuery {
    pub a_max: usize,
    pub b_max: usize,
    pub class_filter: Vec<ClassFilter>,
    /// Only connected subsets. Required by the pruned mode; without it the
    /// raw mode is used.
    pub connectivity_required: bool,
    pub classify_mode: ClassifyMode,
    /// Visit every subset instead of growing connected ones.
    pub raw: bool,
    /// Maximum number of subsets visited before giving up.
    pub budget: u64,
}

impl OracleQuery {
    pub fn new(a_max: usize, b_max: usize, class_filter: &[ClassFilter]) -> Self {
        OracleQuery {
            a_max,
            b_max,
            class_filter: class_filter.to_vec(),
            connectivity_required: true,
            classify_mode: ClassifyMode::STRICT,
            raw: false,
            budget: 1 << 32,
        }
    }

    fn elementary_only(&self) -> bool {
        self.class_filter.contains(&ClassFilter::Elementary)
    }
}

/// Incrementally maintained induced check degrees of the current subset.
struct State<'g> {
    graph: &'g TannerGraph,
    chk_deg: Vec<usize>,
    members: Vec<usize>,
    in_set: Vec<bool>,
    b: usize,
}

impl<'g> State<'g> {
    fn new(graph: &'g TannerGraph) -> Self {
        State {
            graph,
            chk_deg: vec![0; graph.m()],
            members: Vec::new(),
            in_set: vec![false; graph.n()],
            b: 0,
        }
    }

    fn push(&mut self, v: usize) {
        for &c in self.graph.var_neighbors(v) {
            self.chk_deg[c] += 1;
            let d = self.chk_deg[c];
            if d % 2 == 1 {
                self.b += 1;
            } else {
                self.b -= 1;
            }
        }
        self.members.push(v);
        self.in_set[v] = true;
    }

    fn pop(&mut self) {
        let v = self.members.pop().expect("pop on empty state");
        self.in_set[v] = false;
        for &c in self.graph.var_neighbors(v) {
            let d = self.chk_deg[c];
            if d % 2 == 1 {
                self.b -= 1;
            } else {
                self.b += 1;
            }
            self.chk_deg[c] -= 1;
        }
    }

    /// Whether adding `v` would give some check induced degree >= 3.
    fn breaks_elementary(&self, v: usize) -> bool {
        self.graph.var_neighbors(v).iter().any(|&c| self.chk_deg[c] >= 2)
    }

    /// Lower bound on `b` over supersets adding at most `extra` variables.
    ///
    /// Odd checks of the current set stay odd unless one of the added
    /// variables touches them, so `b' >= b - X` where `X` bounds the odd
    /// checks touched. For elementary supersets in a graph of girth > 4,
    /// `r` added variables touch at most `r` odd checks of each member, and
    /// they bring `Σ(d_w - x_w)` fresh checks of which at most `r(r-1)/2`
    /// can be shared; both bound `b'` from below further.
    fn reachable_b(&self, extra: usize, prune: &Pruning, scratch: &mut Scratch) -> usize {
        if extra == 0 || self.b <= prune.b_max {
            return self.b;
        }
        scratch.touched.clear();
        scratch.odd.clear();
        for &v in &self.members {
            for &c in self.graph.var_neighbors(v) {
                if self.chk_deg[c] % 2 == 1 && !scratch.odd_mark[c] {
                    scratch.odd_mark[c] = true;
                    scratch.odd.push(c);
                }
            }
        }
        for &c in &scratch.odd {
            // From here on the mark means "some admissible variable can
            // still touch this check".
            scratch.odd_mark[c] = false;
            for &u in self.graph.chk_neighbors(c) {
                if self.in_set[u] {
                    continue;
                }
                if !scratch.visited[u] {
                    scratch.visited[u] = true;
                    scratch.admissible[u] = !(prune.elementary && self.breaks_elementary(u));
                    scratch.touched.push(u);
                }
                if scratch.admissible[u] {
                    scratch.odd_mark[c] = true;
                    scratch.hits[u] += 1;
                }
            }
        }
        // buckets[x] = number of admissible candidates touching x odd checks.
        scratch.buckets.iter_mut().for_each(|b| *b = 0);
        for &u in &scratch.touched {
            if scratch.admissible[u] {
                scratch.buckets[scratch.hits[u]] += 1;
            }
            scratch.hits[u] = 0;
            scratch.visited[u] = false;
        }
        // Per member: (odd checks, odd checks some candidate can touch).
        // Without 4-cycles one added variable touches at most one odd check
        // of each member.
        scratch.per_member.clear();
        if prune.tight {
            for &v in &self.members {
                let (mut odd, mut reachable) = (0, 0);
                for &c in self.graph.var_neighbors(v) {
                    if self.chk_deg[c] % 2 == 1 {
                        odd += 1;
                        reachable += scratch.odd_mark[c] as usize;
                    }
                }
                if odd > 0 {
                    scratch.per_member.push((odd, reachable));
                }
            }
        }
        for &c in &scratch.odd {
            scratch.odd_mark[c] = false;
        }
        let mut best = self.b;
        let mut x_sum = 0;
        let mut level = scratch.buckets.len();
        for r in 1..=extra {
            // Add the r-th largest hit count; variables touching no odd
            // check (count 0) are always available.
            while level > 0 && scratch.buckets[level - 1] == 0 {
                level -= 1;
            }
            if level > 0 {
                scratch.buckets[level - 1] -= 1;
                x_sum += level - 1;
            }
            let x = x_sum.min(self.b);
            let mut bound = self.b - x;
            if prune.tight {
                let per_member: usize = scratch.per_member.iter().map(|&(odd, reach)| odd - reach.min(r)).sum();
                bound = bound.max(per_member);
                let fresh = (r * prune.d_min).saturating_sub(x);
                bound += fresh.saturating_sub(r * (r - 1));
            }
            best = best.min(bound);
            if best <= prune.b_max {
                break;
            }
        }
        best
    }
}

/// Parameters of the branch-and-bound test, fixed per query.
struct Pruning {
    b_max: usize,
    elementary: bool,
    /// Elementary targets in a graph of girth > 4.
    tight: bool,
    d_min: usize,
}

struct Scratch {
    per_member: Vec<(usize, usize)>,
    odd: Vec<usize>,
    odd_mark: Vec<bool>,
    visited: Vec<bool>,
    admissible: Vec<bool>,
    hits: Vec<usize>,
    touched: Vec<usize>,
    buckets: Vec<usize>,
}

struct Budget<'a> {
    used: &'a AtomicU64,
    limit: u64,
}

impl Budget<'_> {
    fn tick(&self) -> Result<()> {
        if self.used.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(Error::BudgetExceeded { budget: self.limit });
        }
        Ok(())
    }
}

struct Esu<'a> {
    graph: &'a TannerGraph,
    adj: &'a [Vec<usize>],
    query: &'a OracleQuery,
    budget: Budget<'a>,
    prune: &'a Pruning,
    found: Vec<TrappingSet>,
    scratch: Scratch,
    /// Number of current members equal to or adjacent to each variable.
    near: Vec<usize>,
    /// Reusable extension-set buffers, one per depth.
    buffers: Vec<Vec<usize>>,
}

impl Esu<'_> {
    fn visit(&mut self, state: &State<'_>) {
        if state.b > self.query.b_max {
            return;
        }
        let t = TrappingSet::new(self.graph, &state.members, self.query.classify_mode);
        if self.query.class_filter.iter().all(|f| f.accepts(&t)) {
            self.found.push(t);
        }
    }

    fn mark(&mut self, v: usize, delta: isize) {
        let apply = |x: &mut usize| *x = (*x as isize + delta) as usize;
        apply(&mut self.near[v]);
        for &u in &self.adj[v] {
            apply(&mut self.near[u]);
        }
    }

    fn extend(&mut self, state: &mut State<'_>, ext: &mut Vec<usize>, root: usize) -> Result<()> {
        self.budget.tick()?;
        self.visit(state);
        let extra = self.query.a_max - state.members.len();
        if extra == 0 {
            return Ok(());
        }
        if state.reachable_b(extra, self.prune, &mut self.scratch) > self.query.b_max {
            return Ok(());
        }
        let elementary = self.prune.elementary;
        if extra == 1 {
            // Children are leaves: no extension sets needed, and `b` of
            // each child follows from the parities of its checks.
            for &w in ext.iter() {
                self.budget.tick()?;
                if elementary && state.breaks_elementary(w) {
                    continue;
                }
                let flips = self.graph.var_neighbors(w).iter().filter(|&&c| state.chk_deg[c] % 2 == 1).count();
                if state.b + self.graph.var_degree(w) - 2 * flips <= self.query.b_max {
                    state.push(w);
                    self.visit(state);
                    state.pop();
                }
            }
            return Ok(());
        }
        let depth = state.members.len();
        let mut next = std::mem::take(&mut self.buffers[depth]);
        let mut result = Ok(());
        while let Some(w) = ext.pop() {
            if elementary && state.breaks_elementary(w) {
                continue;
            }
            next.clear();
            next.extend_from_slice(ext);
            next.extend(
                self.adj[w]
                    .iter()
                    .copied()
                    .filter(|&u| u > root && self.near[u] == 0),
            );
            state.push(w);
            self.mark(w, 1);
            result = self.extend(state, &mut next, root);
            self.mark(w, -1);
            state.pop();
            if result.is_err() {
                break;
            }
        }
        self.buffers[depth] = next;
        result
    }
}

fn connected_subsets(graph: &TannerGraph, query: &OracleQuery, used: &AtomicU64) -> Result<Vec<TrappingSet>> {
    let adj = graph.var_var_adjacency();
    let elementary = query.elementary_only();
    let max_degree = (0..graph.n()).map(|v| graph.var_degree(v)).max().unwrap_or(0);
    let prune = Pruning {
        b_max: query.b_max,
        elementary,
        tight: elementary && !matches!(girth(graph), Girth::Finite(g) if g <= 4),
        d_min: graph.min_var_degree(),
    };
    let per_root: Vec<Result<Vec<TrappingSet>>> = (0..graph.n())
        .into_par_iter()
        .map(|root| {
            let mut esu = Esu {
                graph,
                adj: &adj,
                query,
                budget: Budget {
                    used,
                    limit: query.budget,
                },
                prune: &prune,
                found: Vec::new(),
                scratch: Scratch {
                    per_member: Vec::new(),
                    odd: Vec::new(),
                    odd_mark: vec![false; graph.m()],
                    visited: vec![false; graph.n()],
                    admissible: vec![false; graph.n()],
                    hits: vec![0; graph.n()],
                    touched: Vec::new(),
                    buckets: vec![0; max_degree + 1],
                },
                near: vec![0; graph.n()],
                buffers: vec![Vec::new(); query.a_max + 1],
            };
            let mut state = State::new(graph);
            state.push(root);
            esu.mark(root, 1);
            let mut ext: Vec<usize> = adj[root].iter().copied().filter(|&u| u > root).collect();
            esu.extend(&mut state, &mut ext, root)?;
            Ok(esu.found)
        })
        .collect();
    let mut out = Vec::new();
    for r in per_root {
        out.extend(r?);
    }
    Ok(out)
}

fn all_subsets(graph: &TannerGraph, query: &OracleQuery, used: &AtomicU64) -> Result<Vec<TrappingSet>> {
    fn rec(
        graph: &TannerGraph,
        query: &OracleQuery,
        budget: &Budget<'_>,
        state: &mut State<'_>,
        next: usize,
        out: &mut Vec<TrappingSet>,
    ) -> Result<()> {
        if !state.members.is_empty() {
            budget.tick()?;
            if state.b <= query.b_max {
                let t = TrappingSet::new(graph, &state.members, query.classify_mode);
                let keep = (!query.connectivity_required || t.flags.connected)
                    && query.class_filter.iter().all(|f| f.accepts(&t));
                if keep {
                    out.push(t);
                }
            }
        }
        if state.members.len() == query.a_max {
            return Ok(());
        }
        for v in next..graph.n() {
            state.push(v);
            let r = rec(graph, query, budget, state, v + 1, out);
            state.pop();
            r?;
        }
        Ok(())
    }
    let budget = Budget {
        used,
        limit: query.budget,
    };
    let mut out = Vec::new();
    rec(graph, query, &budget, &mut State::new(graph), 0, &mut out)?;
    Ok(out)
}

/// Every variable subset of size `1..=a_max` with `b <= b_max` passing
/// all filters of the query.
pub fn brute_force(graph: &TannerGraph, query: &OracleQuery) -> Result<TrapSetStore> {
    let mut store = TrapSetStore::new();
    if query.a_max == 0 || graph.n() == 0 {
        return Ok(store);
    }
    let used = AtomicU64::new(0);
    let found = if query.raw || !query.connectivity_required {
        all_subsets(graph, query, &used)?
    } else {
        connected_subsets(graph, query, &used)?
    };
    for t in found {
        store.insert(t)?;
    }
    Ok(store)
}
