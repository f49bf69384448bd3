//! Tanner graphs: construction, validation, alist I/O, generators and girth.
//!
//! Variable nodes are indexed `0..n` and check nodes `0..m`. The alist
//! boundary is the only place where 1-based indices appear.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Bipartite graph of an LDPC code with adjacency in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TannerGraph {
    n: usize,
    m: usize,
    var_adj: Vec<Vec<usize>>,
    chk_adj: Vec<Vec<usize>>,
    left_degree: Option<usize>,
    min_var_degree: usize,
}

impl TannerGraph {
    /// Builds a graph from `(variable, check)` edges. Adjacency lists are
    /// sorted ascending. Parallel edges and out-of-range indices are errors.
    pub fn from_edges<I>(n: usize, m: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut var_adj = vec![Vec::new(); n];
        let mut chk_adj = vec![Vec::new(); m];
        for (v, c) in edges {
            if v >= n || c >= m {
                return Err(Error::InvalidGraph(format!(
                    "edge ({v}, {c}) out of range for n={n}, m={m}"
                )));
            }
            var_adj[v].push(c);
            chk_adj[c].push(v);
        }
        for (v, adj) in var_adj.iter_mut().enumerate() {
            adj.sort_unstable();
            if let Some(w) = adj.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!(
                    "parallel edge between variable {v} and check {}",
                    w[0]
                )));
            }
        }
        for adj in chk_adj.iter_mut() {
            adj.sort_unstable();
        }
        let min_var_degree = var_adj.iter().map(Vec::len).min().unwrap_or(0);
        let max_var_degree = var_adj.iter().map(Vec::len).max().unwrap_or(0);
        let left_degree = (n > 0 && min_var_degree == max_var_degree).then_some(max_var_degree);
        Ok(TannerGraph {
            n,
            m,
            var_adj,
            chk_adj,
            left_degree,
            min_var_degree,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn var_neighbors(&self, v: usize) -> &[usize] {
        &self.var_adj[v]
    }

    pub fn chk_neighbors(&self, c: usize) -> &[usize] {
        &self.chk_adj[c]
    }

    pub fn var_degree(&self, v: usize) -> usize {
        self.var_adj[v].len()
    }

    pub fn chk_degree(&self, c: usize) -> usize {
        self.chk_adj[c].len()
    }

    /// Common variable degree if the graph is left-regular.
    pub fn left_degree(&self) -> Option<usize> {
        self.left_degree
    }

    pub fn min_var_degree(&self) -> usize {
        self.min_var_degree
    }

    pub fn num_edges(&self) -> usize {
        self.var_adj.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.var_adj
            .iter()
            .enumerate()
            .flat_map(|(v, adj)| adj.iter().map(move |&c| (v, c)))
    }

    /// Copy of the graph with every edge of the flagged variables dropped.
    /// Indices are preserved; removed variables become isolated.
    pub fn without_vars(&self, removed: &[bool]) -> TannerGraph {
        let edges = self.edges().filter(|&(v, _)| !removed[v]);
        TannerGraph::from_edges(self.n, self.m, edges).expect("subgraph of a valid graph")
    }

    /// Variable-node adjacency: for each variable, the sorted list of other
    /// variables sharing at least one check with it.
    pub fn var_var_adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|v| {
                let mut out: Vec<usize> = self.var_adj[v]
                    .iter()
                    .flat_map(|&c| self.chk_adj[c].iter().copied())
                    .filter(|&u| u != v)
                    .collect();
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect()
    }
}

// ****
// alist
// ****

fn alist_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Alist {
        line,
        msg: msg.into(),
    }
}

fn parse_line(line_no: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| alist_err(line_no, format!("not a non-negative integer: {tok:?}")))
        })
        .collect()
}

/// Parses an alist document. Zero entries in neighbor lists are padding
/// and are skipped. Neighbor lists of the result are sorted ascending.
pub fn parse_alist(text: &str) -> Result<TannerGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let mut next = |what: &str| -> Result<(usize, Vec<usize>)> {
        let last = text.lines().count().max(1);
        let (no, l) = lines
            .next()
            .ok_or_else(|| alist_err(last, format!("unexpected end of input, expected {what}")))?;
        Ok((no, parse_line(no, l)?))
    };

    let (no, header) = next("header \"n m\"")?;
    let (n, m) = match header[..] {
        [n, m] => (n, m),
        _ => return Err(alist_err(no, "header must contain exactly two integers \"n m\"")),
    };
    let (no, maxw) = next("max weights")?;
    let (max_col, max_row) = match maxw[..] {
        [a, b] => (a, b),
        _ => return Err(alist_err(no, "expected \"max_col_weight max_row_weight\"")),
    };
    let (no, col_w) = next("column weights")?;
    if col_w.len() != n {
        return Err(alist_err(no, format!("expected {n} column weights, found {}", col_w.len())));
    }
    if col_w.iter().any(|&w| w > max_col) {
        return Err(alist_err(no, "column weight exceeds declared maximum"));
    }
    let (no, row_w) = next("row weights")?;
    if row_w.len() != m {
        return Err(alist_err(no, format!("expected {m} row weights, found {}", row_w.len())));
    }
    if row_w.iter().any(|&w| w > max_row) {
        return Err(alist_err(no, "row weight exceeds declared maximum"));
    }

    let mut read_lists = |count: usize, weights: &[usize], bound: usize, side: &str| {
        let mut lists = Vec::with_capacity(count);
        let mut line_nos = Vec::with_capacity(count);
        for (idx, &w) in weights.iter().enumerate() {
            let (no, entries) = next(&format!("{side} list {}", idx + 1))?;
            let mut list = Vec::with_capacity(w);
            for e in entries.into_iter().filter(|&e| e != 0) {
                if e > bound {
                    return Err(alist_err(no, format!("index {e} out of range 1..={bound}")));
                }
                if list.contains(&(e - 1)) {
                    return Err(alist_err(no, format!("duplicate neighbor {e} (parallel edge)")));
                }
                list.push(e - 1);
            }
            if list.len() != w {
                return Err(alist_err(
                    no,
                    format!("{side} {} lists {} neighbors but weight is {w}", idx + 1, list.len()),
                ));
            }
            lists.push(list);
            line_nos.push(no);
        }
        Ok((lists, line_nos))
    };
    let (var_adj, _) = read_lists(n, &col_w, m, "column")?;
    let (chk_adj, row_lines) = read_lists(m, &row_w, n, "row")?;

    // Each row list must be exactly the set of columns that name it.
    let mut expected: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (v, adj) in var_adj.iter().enumerate() {
        for &c in adj {
            expected[c].push(v);
        }
    }
    for (c, adj) in chk_adj.iter().enumerate() {
        let mut got = adj.clone();
        got.sort_unstable();
        if got != expected[c] {
            return Err(alist_err(
                row_lines[c],
                format!("row {} does not match the column lists", c + 1),
            ));
        }
    }
    let edges = var_adj
        .iter()
        .enumerate()
        .flat_map(|(v, adj)| adj.iter().map(move |&c| (v, c)));
    TannerGraph::from_edges(n, m, edges)
}

fn join(xs: impl IntoIterator<Item = usize>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Serializes a graph as an alist document with a trailing newline. Lists
/// are unpadded, except that a node without edges gets a single `0` so its
/// line is not blank.
pub fn write_alist(graph: &TannerGraph) -> String {
    let col_w: Vec<usize> = graph.var_adj.iter().map(Vec::len).collect();
    let row_w: Vec<usize> = graph.chk_adj.iter().map(Vec::len).collect();
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", graph.n, graph.m));
    out.push_str(&format!(
        "{} {}\n",
        col_w.iter().max().copied().unwrap_or(0),
        row_w.iter().max().copied().unwrap_or(0)
    ));
    out.push_str(&join(col_w));
    out.push('\n');
    out.push_str(&join(row_w));
    out.push('\n');
    for adj in graph.var_adj.iter().chain(graph.chk_adj.iter()) {
        if adj.is_empty() {
            out.push('0');
        }
        out.push_str(&join(adj.iter().map(|&x| x + 1)));
        out.push('\n');
    }
    out
}

// **********
// Validation
// **********

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    /// A node has degree below 2 (strict mode only).
    MinDegree {
        side: Side,
        index: usize,
        degree: usize,
    },
    ParallelEdge { var: usize, chk: usize },
    Inconsistent { var: usize, chk: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Variable,
    Check,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::MinDegree {
                side,
                index,
                degree,
            } => {
                let s = match side {
                    Side::Variable => "variable",
                    Side::Check => "check",
                };
                write!(f, "{s} node {index} has degree {degree} < 2")
            }
            Diagnostic::ParallelEdge { var, chk } => {
                write!(f, "parallel edge between variable {var} and check {chk}")
            }
            Diagnostic::Inconsistent { var, chk } => {
                write!(f, "edge ({var}, {chk}) is not present on both sides")
            }
        }
    }
}

/// Checks the structural assumptions on a Tanner graph. The minimum-degree
/// check is only applied when `strict` is set.
pub fn validate(graph: &TannerGraph, strict: bool) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    for (v, adj) in graph.var_adj.iter().enumerate() {
        let mut sorted = adj.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2).filter(|w| w[0] == w[1]) {
            out.push(Diagnostic::ParallelEdge { var: v, chk: w[0] });
        }
        for &c in adj {
            if !graph.chk_adj[c].contains(&v) {
                out.push(Diagnostic::Inconsistent { var: v, chk: c });
            }
        }
    }
    for (c, adj) in graph.chk_adj.iter().enumerate() {
        for &v in adj {
            if !graph.var_adj[v].contains(&c) {
                out.push(Diagnostic::Inconsistent { var: v, chk: c });
            }
        }
    }
    if strict {
        for (v, adj) in graph.var_adj.iter().enumerate() {
            if adj.len() < 2 {
                out.push(Diagnostic::MinDegree {
                    side: Side::Variable,
                    index: v,
                    degree: adj.len(),
                });
            }
        }
        for (c, adj) in graph.chk_adj.iter().enumerate() {
            if adj.len() < 2 {
                out.push(Diagnostic::MinDegree {
                    side: Side::Check,
                    index: c,
                    degree: adj.len(),
                });
            }
        }
    }
    out
}

// *****
// Girth
// *****

/// Length of the shortest cycle, or `Infinite` for a forest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Girth by breadth-first search from every variable node. Each search stops
/// once its depth cannot improve on the best cycle found so far.
pub fn girth(graph: &TannerGraph) -> Girth {
    let n = graph.n;
    let total = n + graph.m;
    let neighbors = |x: usize| -> Box<dyn Iterator<Item = usize> + '_> {
        if x < n {
            Box::new(graph.var_adj[x].iter().map(move |&c| c + n))
        } else {
            Box::new(graph.chk_adj[x - n].iter().copied())
        }
    };
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; total];
    let mut parent = vec![usize::MAX; total];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        for &x in &touched {
            dist[x] = usize::MAX;
            parent[x] = usize::MAX;
        }
        touched.clear();
        queue.clear();
        dist[root] = 0;
        touched.push(root);
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for w in neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                    if best == 4 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 4 {
            break;
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

// **********
// Generators
// **********

/// Quasi-cyclic graph from a table of circulant shifts (`None` is a zero
/// block). Block `(j, i)` with shift `s` joins variable `i*p + t` to check
/// `j*p + (t + s) mod p`.
pub fn gen_qc(shifts: &[Vec<Option<usize>>], p: usize) -> Result<TannerGraph> {
    let rows = shifts.len();
    let cols = shifts.first().map_or(0, Vec::len);
    if shifts.iter().any(|r| r.len() != cols) {
        return Err(Error::Config("shift table rows have different lengths".into()));
    }
    let mut edges = Vec::new();
    for (j, row) in shifts.iter().enumerate() {
        for (i, s) in row.iter().enumerate() {
            let Some(s) = *s else { continue };
            if s >= p {
                return Err(Error::ShiftOutOfRange {
                    row: j,
                    col: i,
                    shift: s,
                    p,
                });
            }
            edges.extend((0..p).map(|t| (i * p + t, j * p + (t + s) % p)));
        }
    }
    TannerGraph::from_edges(cols * p, rows * p, edges)
}

/// Shift table of the (155,64) Tanner code: `(2^i * 5^j) mod 31` for block
/// row `j` in `0..3` and block column `i` in `0..5`.
pub fn tanner_155_shifts() -> Vec<Vec<Option<usize>>> {
    (0..3u32)
        .map(|j| {
            (0..5u32)
                .map(|i| Some((2usize.pow(i) * 5usize.pow(j)) % 31))
                .collect()
        })
        .collect()
}

/// The (155,64) Tanner code: (3,5)-regular, girth 8.
pub fn gen_tanner_155() -> TannerGraph {
    gen_qc(&tanner_155_shifts(), 31).expect("fixed shift table is valid")
}

/// Random left-regular graph grown edge by edge in the manner of
/// progressive edge growth: each new edge goes to a lowest-degree check
/// that keeps every cycle through it at least `min_girth` long.
///
/// Returns an error if the construction gets stuck on every attempt.
pub fn gen_random_left_regular(
    n: usize,
    m: usize,
    d_l: usize,
    min_girth: usize,
    seed: u64,
) -> Result<TannerGraph> {
    if d_l == 0 || d_l > m {
        return Err(Error::Config(format!("left degree {d_l} impossible with m={m}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..64 {
        let mut var_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut chk_adj: Vec<Vec<usize>> = vec![Vec::new(); m];
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        for &v in &order {
            for _ in 0..d_l {
                let dist = check_distances(&var_adj, &chk_adj, v);
                let mut allowed: Vec<usize> = (0..m)
                    .filter(|&c| dist[c].map_or(true, |d| d + 1 >= min_girth))
                    .collect();
                if allowed.is_empty() {
                    continue 'attempt;
                }
                let min_deg = allowed.iter().map(|&c| chk_adj[c].len()).min().unwrap();
                allowed.retain(|&c| chk_adj[c].len() == min_deg);
                let &c = allowed.choose(&mut rng).unwrap();
                var_adj[v].push(c);
                chk_adj[c].push(v);
            }
        }
        let edges = var_adj
            .iter()
            .enumerate()
            .flat_map(|(v, adj)| adj.iter().map(move |&c| (v, c)));
        return TannerGraph::from_edges(n, m, edges);
    }
    Err(Error::Config(format!(
        "could not build a left-regular graph with n={n}, m={m}, d_l={d_l}, girth >= {min_girth}"
    )))
}

/// Edge distance from variable `v` to every check (None if unreachable).
fn check_distances(
    var_adj: &[Vec<usize>],
    chk_adj: &[Vec<usize>],
    v: usize,
) -> Vec<Option<usize>> {
    let mut dv = vec![None; var_adj.len()];
    let mut dc = vec![None; chk_adj.len()];
    dv[v] = Some(0);
    let mut queue = VecDeque::from([(true, v)]);
    while let Some((is_var, x)) = queue.pop_front() {
        if is_var {
            let d = dv[x].unwrap();
            for &c in &var_adj[x] {
                if dc[c].is_none() {
                    dc[c] = Some(d + 1);
                    queue.push_back((false, c));
                }
            }
        } else {
            let d = dc[x].unwrap();
            for &u in &chk_adj[x] {
                if dv[u].is_none() {
                    dv[u] = Some(d + 1);
                    queue.push_back((true, u));
                }
            }
        }
    }
    dc
}

// **************
// Degree profile
// **************

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeProfile {
    pub var_hist: BTreeMap<usize, usize>,
    pub chk_hist: BTreeMap<usize, usize>,
    pub var_min: usize,
    pub var_max: usize,
    pub var_mean: f64,
    pub chk_min: usize,
    pub chk_max: usize,
    pub chk_mean: f64,
    /// Number of degree-2 variable nodes.
    pub n_v2: usize,
    pub is_left_regular: bool,
    pub is_right_regular: bool,
}

impl DegreeProfile {
    /// Left degree if the graph is left-regular.
    pub fn left_degree(&self) -> Option<usize> {
        self.is_left_regular.then_some(self.var_max)
    }
}

pub fn degree_profile(graph: &TannerGraph) -> DegreeProfile {
    fn hist(adj: &[Vec<usize>]) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for a in adj {
            *h.entry(a.len()).or_insert(0) += 1;
        }
        h
    }
    let var_hist = hist(&graph.var_adj);
    let chk_hist = hist(&graph.chk_adj);
    let edges = graph.num_edges() as f64;
    let mean = |count: usize| if count == 0 { 0.0 } else { edges / count as f64 };
    DegreeProfile {
        var_min: var_hist.keys().next().copied().unwrap_or(0),
        var_max: var_hist.keys().next_back().copied().unwrap_or(0),
        var_mean: mean(graph.n),
        chk_min: chk_hist.keys().next().copied().unwrap_or(0),
        chk_max: chk_hist.keys().next_back().copied().unwrap_or(0),
        chk_mean: mean(graph.m),
        n_v2: var_hist.get(&2).copied().unwrap_or(0),
        is_left_regular: var_hist.len() == 1,
        is_right_regular: chk_hist.len() == 1,
        var_hist,
        chk_hist,
    }
}
