//! Closed-form structural bounds on trapping-set sizes and degree-2 chain
//! components.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A non-negative rational kept exactly as evaluated (not reduced), so the
/// printed value shows how it arose, e.g. `11000/12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: u128,
    pub den: u128,
}

impl Fraction {
    pub fn new(num: u128, den: u128) -> Self {
        assert!(den > 0, "zero denominator");
        Fraction { num, den }
    }

    pub fn integer(v: u128) -> Self {
        Fraction { num: v, den: 1 }
    }

    pub fn floor(self) -> u128 {
        self.num / self.den
    }

    pub fn ceil(self) -> u128 {
        self.num.div_ceil(self.den)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// An integer bound together with the exact value it was rounded from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: u128,
    pub exact: Fraction,
}

impl Bound {
    fn ceil_of(exact: Fraction) -> Self {
        Bound {
            value: exact.ceil(),
            exact,
        }
    }

    fn floor_of(exact: Fraction) -> Self {
        Bound {
            value: exact.floor(),
            exact,
        }
    }
}

/// Smallest `b` of an `(a, b)` set with cycle-free induced subgraph on a
/// left-regular graph of left degree `d_l`; attained by elementary sets.
pub fn cycle_free_bound(a: usize, d_l: usize) -> usize {
    assert!(a >= 1 && d_l >= 2, "cycle_free_bound needs a >= 1 and d_l >= 2");
    a * (d_l - 2) + 2
}

/// Smallest size of an `(a, b)` set containing a variable of degree `d_v`
/// in a graph of girth > 4. Only meaningful when `d_v > b`.
pub fn min_size_high_degree(d_v: usize, b: usize) -> Result<usize> {
    if d_v <= b {
        return Err(Error::NotApplicable(format!(
            "degree {d_v} does not exceed b = {b}; the size bound needs d(v) > b"
        )));
    }
    Ok(d_v + 1 - b)
}

/// Lower bounds on the size of `(a, b)` sets with `b < a` in a left-regular
/// graph. `None` marks a bound whose applicability guard fails (or whose
/// check degree was not supplied).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NonelementaryBounds {
    /// Elementary sets; requires `d_l(d_l-1) > b`.
    pub elementary: Option<Bound>,
    /// Non-elementary sets with a satisfied check of induced degree `d_e`;
    /// requires `d_e(d_l-1) > b`.
    pub via_satisfied: Option<Bound>,
    /// Non-elementary sets with an unsatisfied check of induced degree
    /// `d_o`; requires `d_o(d_l-1) > b`.
    pub via_unsatisfied: Option<Bound>,
}

/// `Σ_{i=0}^{terms-1} q^i`; an empty sum is 0.
fn geometric(q: u128, terms: usize) -> u128 {
    (0..terms).map(|i| q.pow(i as u32)).sum()
}

/// Tree-growth bound rooted at a node contributing `root` variables whose
/// first full layer has `width` branches. `tail_terms` counts complete
/// variable layers below; `partial` adds the fractional last layer of
/// checks, which need at least one variable per `d_l` of them.
fn layered(root: u128, width: u128, q: u128, tail_terms: usize, partial: Option<u32>, d_l: u128) -> Fraction {
    let whole = root + width * geometric(q, tail_terms);
    match partial {
        None => Fraction::integer(whole),
        Some(exp) => Fraction::new(whole * d_l + width * q.pow(exp), d_l),
    }
}

/// Size lower bounds for girth `g` (even, > 4) in a left-regular graph of
/// left degree `d_l >= 3`. `d_e` (even, >= 4) and `d_o` (odd, >= 3) are the
/// induced degrees of the exceptional satisfied/unsatisfied check.
pub fn nonelementary_lower_bounds(
    d_l: usize,
    g: usize,
    b: usize,
    d_e: Option<usize>,
    d_o: Option<usize>,
) -> Result<NonelementaryBounds> {
    if d_l < 3 {
        return Err(Error::Config("size bounds need left degree >= 3".into()));
    }
    if g <= 4 || g % 2 == 1 {
        return Err(Error::Config(format!("girth must be even and > 4, got {g}")));
    }
    if let Some(d) = d_e {
        if d < 4 || d % 2 == 1 {
            return Err(Error::Config(format!("d_e must be even and >= 4, got {d}")));
        }
    }
    if let Some(d) = d_o {
        if d < 3 || d % 2 == 0 {
            return Err(Error::Config(format!("d_o must be odd and >= 3, got {d}")));
        }
    }
    let (dl, q, b) = (d_l as u128, (d_l - 1) as u128, b as u128);
    let k = g / 4;
    let quarter = g % 4 == 0;

    let elementary = (dl * q > b).then(|| {
        let width = dl * q - b;
        let exact = if quarter {
            layered(1 + dl, width, q, k - 2, Some((k - 2) as u32), dl)
        } else {
            layered(1 + dl, width, q, k - 1, None, dl)
        };
        Bound::ceil_of(exact)
    });
    let rooted = |d: u128, width: u128| {
        let partial = (!quarter).then_some((k - 1) as u32);
        Bound::ceil_of(layered(d, width, q, k - 1, partial, dl))
    };
    let via_satisfied = d_e
        .map(|d| d as u128)
        .filter(|&d| d * q > b)
        .map(|d| rooted(d, d * q - b));
    let via_unsatisfied = d_o
        .map(|d| d as u128)
        .filter(|&d| d * q > b)
        .map(|d| rooted(d, d * q - b + 1));
    Ok(NonelementaryBounds {
        elementary,
        via_satisfied,
        via_unsatisfied,
    })
}

fn check_chain_args(k: usize, d_cmax: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Config(format!("chain parameter k must be >= 2, got {k}")));
    }
    if d_cmax < 2 {
        return Err(Error::Config(format!("d_cmax must be >= 2, got {d_cmax}")));
    }
    Ok(())
}

/// `Σ_{i=0}^{k-2} (d_cmax-1)^{⌊(i+1)/2⌋}`, saturating on overflow.
fn chain_sum(k: usize, d_cmax: usize) -> u128 {
    let q = (d_cmax - 1) as u128;
    (0..=k - 2).fold(0u128, |acc, i| {
        acc.saturating_add(q.saturating_pow(((i + 1) / 2) as u32))
    })
}

/// Largest number of degree-2 variables in a tree-shaped induced subgraph
/// whose longest path has `2k-2` edges, with check degrees at most `d_cmax`.
pub fn max_2chain_component(k: usize, d_cmax: usize) -> Result<u128> {
    check_chain_args(k, d_cmax)?;
    Ok(chain_sum(k, d_cmax))
}

/// Largest number of degree-2 variables compatible with having no 2-chains
/// of length `2k` or more: `⌊m·Σ/(Σ+1)⌋`.
pub fn theorem1_max_nv2(m: usize, k: usize, d_cmax: usize) -> Result<Bound> {
    check_chain_args(k, d_cmax)?;
    let sum = chain_sum(k, d_cmax);
    Ok(Bound::floor_of(Fraction::new((m as u128).saturating_mul(sum), sum.saturating_add(1))))
}

/// Smallest `k >= 2` for which `m >= n_v2·(1 + 1/Σ_k)` holds, searching up
/// to `k_cap`; `None` when no such `k` exists within the cap.
pub fn theorem1_min_k(m: usize, n_v2: usize, d_cmax: usize, k_cap: usize) -> Result<Option<usize>> {
    check_chain_args(2, d_cmax)?;
    let (m, n) = (m as u128, n_v2 as u128);
    if n > 0 && n >= m {
        return Ok(None);
    }
    Ok((2..=k_cap).find(|&k| {
        let sum = chain_sum(k, d_cmax);
        m.saturating_mul(sum) >= n.saturating_mul(sum.saturating_add(1))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::TannerGraph;
    use crate::trapset::{classify, induced_has_cycle, neighborhood_split, ClassifyMode};

    #[test]
    fn cycle_free_examples() {
        assert_eq!(cycle_free_bound(3, 4), 8);
        assert_eq!(cycle_free_bound(1, 3), 3);
        for a in 1..10 {
            assert_eq!(cycle_free_bound(a, 2), 2);
            assert_eq!(cycle_free_bound(a, 4), 2 * (a + 1));
        }
    }

    #[test]
    fn high_degree_examples() {
        assert_eq!(min_size_high_degree(15, 3).unwrap(), 13);
        assert_eq!(min_size_high_degree(4, 3).unwrap(), 2);
        assert_eq!(min_size_high_degree(5, 2).unwrap(), 4);
        assert!(matches!(min_size_high_degree(3, 3), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn nonelementary_values_for_left_degree_four() {
        let sat: Vec<u128> = [6, 8, 10]
            .iter()
            .map(|&g| nonelementary_lower_bounds(4, g, 2, Some(4), None).unwrap().via_satisfied.unwrap().value)
            .collect();
        assert_eq!(sat, vec![7, 14, 22]);
        let unsat: Vec<u128> = [6, 8, 10]
            .iter()
            .map(|&g| nonelementary_lower_bounds(4, g, 2, None, Some(3)).unwrap().via_unsatisfied.unwrap().value)
            .collect();
        assert_eq!(unsat, vec![5, 11, 17]);

        let g6 = nonelementary_lower_bounds(4, 6, 2, Some(4), None).unwrap();
        assert_eq!(g6.via_satisfied.unwrap().exact, Fraction::new(26, 4));
        let g8 = nonelementary_lower_bounds(4, 8, 2, None, Some(3)).unwrap();
        assert_eq!(g8.via_unsatisfied.unwrap().exact, Fraction::integer(11));
        assert_eq!(g8.elementary.unwrap().value, 8);
        assert_eq!(g8.elementary.unwrap().exact, Fraction::new(30, 4));
        assert_eq!(g6.elementary.unwrap().value, 5);
    }

    #[test]
    fn nonelementary_guards() {
        // d_l(d_l-1) = 6 <= b: elementary bound not applicable.
        let r = nonelementary_lower_bounds(3, 8, 6, Some(4), Some(3)).unwrap();
        assert!(r.elementary.is_none());
        assert!(r.via_unsatisfied.is_none());
        assert!(r.via_satisfied.is_some());
        assert!(nonelementary_lower_bounds(4, 4, 2, None, None).is_err());
        assert!(nonelementary_lower_bounds(4, 7, 2, None, None).is_err());
        assert!(nonelementary_lower_bounds(2, 8, 0, None, None).is_err());
        assert!(nonelementary_lower_bounds(4, 8, 2, Some(3), None).is_err());
        assert!(nonelementary_lower_bounds(4, 8, 2, None, Some(4)).is_err());
        assert!(nonelementary_lower_bounds(4, 8, 2, None, None).unwrap().via_satisfied.is_none());
    }

    #[test]
    fn chain_component_examples() {
        for d in 2..8 {
            assert_eq!(max_2chain_component(2, d).unwrap(), 1);
        }
        assert_eq!(max_2chain_component(4, 6).unwrap(), 11);
        assert_eq!(max_2chain_component(3, 3).unwrap(), 3);
        assert!(max_2chain_component(1, 3).is_err());
        assert!(max_2chain_component(3, 1).is_err());
    }

    /// Longest path (in edges) of the induced subgraph of `vars`, assumed
    /// to be a tree; computed by double BFS.
    fn induced_tree_diameter(graph: &TannerGraph, vars: &[usize]) -> usize {
        let split = neighborhood_split(graph, vars);
        let checks: Vec<usize> = split.induced_degree.iter().map(|&(c, _)| c).collect();
        // Nodes: variables then checks, by position.
        let nv = vars.len();
        let idx_chk = |c: usize| nv + checks.binary_search(&c).unwrap();
        let mut adj = vec![Vec::new(); nv + checks.len()];
        for (i, &v) in vars.iter().enumerate() {
            for &c in graph.var_neighbors(v) {
                adj[i].push(idx_chk(c));
                adj[idx_chk(c)].push(i);
            }
        }
        let bfs = |s: usize| {
            let mut dist = vec![usize::MAX; adj.len()];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            let far = (0..adj.len()).max_by_key(|&i| dist[i]).unwrap();
            (far, dist[far])
        };
        let (far, _) = bfs(0);
        bfs(far).1
    }

    #[test]
    fn chain_component_bound_is_attained() {
        // Centre variable on two degree-6 checks, five more variables on
        // each; every outer variable closes on its own leaf check.
        let mut edges = vec![(0, 0), (0, 1)];
        let mut leaf = 2;
        for (branch, hub) in [(1usize, 0usize), (6, 1)] {
            for v in branch..branch + 5 {
                edges.push((v, hub));
                edges.push((v, leaf));
                leaf += 1;
            }
        }
        let graph = TannerGraph::from_edges(11, leaf, edges).unwrap();
        let vars: Vec<usize> = (0..11).collect();
        assert!(!induced_has_cycle(&graph, &vars));
        assert_eq!(induced_tree_diameter(&graph, &vars), 2 * 4 - 2);
        assert_eq!(graph.chk_degree(0), 6);
        let flags = classify(&graph, &vars, ClassifyMode::STRICT);
        assert!(flags.connected);
        assert_eq!(vars.len() as u128, max_2chain_component(4, 6).unwrap());
    }

    /// With every variable of degree 2, a tree-shaped induced subgraph is a
    /// tree on the checks whose edges are the variables; a `2k-2` longest
    /// path is a check-tree of diameter `k-1`. Grows every labelled tree of
    /// bounded degree and diameter and returns the largest edge count among
    /// those of diameter exactly `diam`.
    fn largest_tree(max_deg: usize, diam: usize) -> usize {
        fn diameter(adj: &[Vec<usize>]) -> usize {
            let bfs = |s: usize| {
                let mut dist = vec![usize::MAX; adj.len()];
                dist[s] = 0;
                let mut stack = vec![s];
                while let Some(x) = stack.pop() {
                    for &y in &adj[x] {
                        if dist[y] == usize::MAX {
                            dist[y] = dist[x] + 1;
                            stack.push(y);
                        }
                    }
                }
                (0..adj.len()).max_by_key(|&i| dist[i]).map(|i| (i, dist[i])).unwrap()
            };
            bfs(bfs(0).0).1
        }
        fn grow(adj: &mut Vec<Vec<usize>>, max_deg: usize, diam: usize, best: &mut usize) {
            let d = diameter(adj);
            if d > diam {
                return;
            }
            if d == diam {
                *best = (*best).max(adj.len() - 1);
            }
            for x in 0..adj.len() {
                if adj[x].len() < max_deg {
                    let y = adj.len();
                    adj[x].push(y);
                    adj.push(vec![x]);
                    grow(adj, max_deg, diam, best);
                    adj.pop();
                    adj[x].pop();
                }
            }
        }
        let mut best = 0;
        grow(&mut vec![Vec::new()], max_deg, diam, &mut best);
        best
    }

    #[test]
    fn chain_component_bound_is_tight_on_small_trees() {
        for d_cmax in 2..=3 {
            for k in 2..=4 {
                assert_eq!(
                    largest_tree(d_cmax, k - 1) as u128,
                    max_2chain_component(k, d_cmax).unwrap(),
                    "d_cmax={d_cmax} k={k}"
                );
            }
        }
    }

    #[test]
    fn theorem1_examples() {
        let b = theorem1_max_nv2(1000, 4, 6).unwrap();
        assert_eq!(b.value, 916);
        assert_eq!(b.exact.to_string(), "11000/12");
        assert_eq!(theorem1_min_k(1000, 999, 6, 64).unwrap(), Some(10));
        assert_eq!(theorem1_min_k(1000, 0, 6, 64).unwrap(), Some(2));
        assert_eq!(theorem1_min_k(1000, 1000, 6, 64).unwrap(), None);
        // d_cmax = 2 gives Σ = k-1, so the cap can bind.
        assert_eq!(theorem1_min_k(10, 9, 2, 5).unwrap(), None);
        assert_eq!(theorem1_min_k(10, 9, 2, 64).unwrap(), Some(10));
    }

    #[test]
    fn theorem1_monotone() {
        for d in 2..6 {
            for m in [10usize, 100, 1000] {
                let mut last = 0;
                for k in 2..12 {
                    let v = theorem1_max_nv2(m, k, d).unwrap().value;
                    assert!(v >= last);
                    assert!(theorem1_max_nv2(m + 1, k, d).unwrap().value >= v);
                    last = v;
                }
            }
        }
    }
}
