//! Variable-node subsets, their satisfied/unsatisfied check split, and
//! classification into the trapping-set families.

use std::fmt;

use serde::Serialize;

use crate::graph::TannerGraph;

/// Canonical deduplication key of a variable set: its sorted, distinct
/// elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SetKey(Box<[usize]>);

impl SetKey {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for SetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub fn canonical(vars: &[usize]) -> SetKey {
    let mut v = vars.to_vec();
    v.sort_unstable();
    v.dedup();
    SetKey(v.into_boxed_slice())
}

/// Parity split of the check neighborhood of a variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodSplit {
    /// Checks of even degree in the induced subgraph (satisfied), sorted.
    pub gamma_even: Vec<usize>,
    /// Checks of odd degree in the induced subgraph (unsatisfied), sorted.
    pub gamma_odd: Vec<usize>,
    /// `(check, induced degree)` for every check in the neighborhood, sorted.
    pub induced_degree: Vec<(usize, usize)>,
}

pub fn neighborhood_split(graph: &TannerGraph, vars: &[usize]) -> NeighborhoodSplit {
    let mut checks: Vec<usize> = vars
        .iter()
        .flat_map(|&v| graph.var_neighbors(v).iter().copied())
        .collect();
    checks.sort_unstable();
    let mut induced_degree: Vec<(usize, usize)> = Vec::new();
    for c in checks {
        match induced_degree.last_mut() {
            Some((last, d)) if *last == c => *d += 1,
            _ => induced_degree.push((c, 1)),
        }
    }
    let (odd, even): (Vec<_>, Vec<_>) = induced_degree.iter().partition(|(_, d)| d % 2 == 1);
    NeighborhoodSplit {
        gamma_even: even.into_iter().map(|(c, _)| c).collect(),
        gamma_odd: odd.into_iter().map(|(c, _)| c).collect(),
        induced_degree,
    }
}

/// Membership flags for every trapping-set family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub connected: bool,
    /// Connected, and every variable has at least two satisfied checks
    /// (degree-2 variables exempt under the relaxed mode).
    pub in_t: bool,
    pub elementary: bool,
    pub absorbing: bool,
    pub fully_absorbing: bool,
    /// Zyablov-Pinsker trapping set; `None` unless the graph is left-regular.
    pub zp: Option<bool>,
    /// Number of degree-1 checks in the induced subgraph.
    pub k_out: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClassifyMode {
    /// Degree-2 variables need not have two satisfied checks for `in_t`,
    /// and need only as many satisfied as unsatisfied checks for the
    /// absorbing conditions.
    pub relax_degree2: bool,
}

impl ClassifyMode {
    pub const STRICT: ClassifyMode = ClassifyMode {
        relax_degree2: false,
    };
    pub const RELAXED: ClassifyMode = ClassifyMode {
        relax_degree2: true,
    };
}

/// Per-variable satisfied / unsatisfied neighbor counts plus induced
/// connectivity, shared by the classification predicates.
struct Profile {
    sat: Vec<usize>,
    unsat: Vec<usize>,
    connected: bool,
}

fn profile(graph: &TannerGraph, vars: &[usize], split: &NeighborhoodSplit) -> Profile {
    let odd = |c: usize| split.gamma_odd.binary_search(&c).is_ok();
    let mut sat = vec![0; vars.len()];
    let mut unsat = vec![0; vars.len()];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, &v) in vars.iter().enumerate() {
        for &c in graph.var_neighbors(v) {
            if odd(c) {
                unsat[i] += 1;
            } else {
                sat[i] += 1;
            }
            edges.push((c, i));
        }
    }
    edges.sort_unstable();
    let mut parent: Vec<usize> = (0..vars.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut components = vars.len();
    for w in edges.windows(2) {
        if w[0].0 == w[1].0 {
            let (a, b) = (find(&mut parent, w[0].1), find(&mut parent, w[1].1));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
    }
    Profile {
        sat,
        unsat,
        connected: components <= 1,
    }
}

fn majority_ok(degree: usize, sat: usize, unsat: usize, mode: ClassifyMode) -> bool {
    if mode.relax_degree2 && degree == 2 {
        sat >= unsat
    } else {
        sat > unsat
    }
}

/// Membership in the search space: connected, and each variable has at
/// least two satisfied checks (degree-2 variables exempt when relaxed).
pub fn is_in_t(
    graph: &TannerGraph,
    vars: &[usize],
    split: &NeighborhoodSplit,
    mode: ClassifyMode,
) -> bool {
    let p = profile(graph, vars, split);
    p.connected
        && vars.iter().zip(&p.sat).all(|(&v, &s)| {
            s >= 2 || (mode.relax_degree2 && graph.var_degree(v) == 2)
        })
}

/// Classifies `vars` (need not be sorted) against every family.
pub fn classify(graph: &TannerGraph, vars: &[usize], mode: ClassifyMode) -> ClassFlags {
    let split = neighborhood_split(graph, vars);
    classify_with(graph, vars, &split, mode)
}

fn classify_with(
    graph: &TannerGraph,
    vars: &[usize],
    split: &NeighborhoodSplit,
    mode: ClassifyMode,
) -> ClassFlags {
    let p = profile(graph, vars, split);
    let in_t = p.connected
        && vars.iter().zip(&p.sat).all(|(&v, &s)| {
            s >= 2 || (mode.relax_degree2 && graph.var_degree(v) == 2)
        });
    let elementary = split.induced_degree.iter().all(|&(_, d)| d <= 2);
    let absorbing = vars
        .iter()
        .enumerate()
        .all(|(i, &v)| majority_ok(graph.var_degree(v), p.sat[i], p.unsat[i], mode));
    let fully_absorbing = absorbing && outside_majority(graph, vars, split, mode);
    let zp = graph.left_degree().map(|l| {
        let limit = l - (l.saturating_sub(1)) / 2;
        p.unsat.iter().all(|&u| u < limit)
    });
    let k_out = split.induced_degree.iter().filter(|&&(_, d)| d == 1).count();
    ClassFlags {
        connected: p.connected,
        in_t,
        elementary,
        absorbing,
        fully_absorbing,
        zp,
        k_out,
    }
}

/// Every variable outside `vars` has strictly more neighbors outside
/// `gamma_odd` than inside it.
fn outside_majority(
    graph: &TannerGraph,
    vars: &[usize],
    split: &NeighborhoodSplit,
    mode: ClassifyMode,
) -> bool {
    let inside = |v: usize| vars.contains(&v);
    if graph.min_var_degree() == 0 && (0..graph.n()).any(|v| graph.var_degree(v) == 0 && !inside(v)) {
        return false;
    }
    let mut touched: Vec<usize> = split
        .gamma_odd
        .iter()
        .flat_map(|&c| graph.chk_neighbors(c).iter().copied())
        .filter(|&v| !inside(v))
        .collect();
    touched.sort_unstable();
    touched.dedup();
    touched.into_iter().all(|v| {
        let in_odd = graph
            .var_neighbors(v)
            .iter()
            .filter(|c| split.gamma_odd.binary_search(c).is_ok())
            .count();
        let d = graph.var_degree(v);
        majority_ok(d, d - in_odd, in_odd, mode)
    })
}

/// A classified variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrappingSet {
    pub vars: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub gamma_odd: Vec<usize>,
    pub gamma_even: Vec<usize>,
    pub flags: ClassFlags,
}

impl TrappingSet {
    pub fn new(graph: &TannerGraph, vars: &[usize], mode: ClassifyMode) -> Self {
        let key = canonical(vars);
        let vars = key.as_slice().to_vec();
        let split = neighborhood_split(graph, &vars);
        let flags = classify_with(graph, &vars, &split, mode);
        TrappingSet {
            a: vars.len(),
            b: split.gamma_odd.len(),
            vars,
            gamma_odd: split.gamma_odd,
            gamma_even: split.gamma_even,
            flags,
        }
    }

    pub fn key(&self) -> SetKey {
        SetKey(self.vars.clone().into_boxed_slice())
    }

    pub fn class(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn record(&self) -> ClassificationRecord {
        ClassificationRecord {
            vars: self.vars.clone(),
            a: self.a,
            b: self.b,
            flags: self.flags,
            kout: self.flags.k_out,
        }
    }
}

/// JSON form of a classification.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationRecord {
    pub vars: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub flags: ClassFlags,
    pub kout: usize,
}

/// Whether the induced subgraph of `vars` contains a cycle.
pub fn induced_has_cycle(graph: &TannerGraph, vars: &[usize]) -> bool {
    // A connected-or-not graph is a forest iff edges = nodes - components.
    let split = neighborhood_split(graph, vars);
    let edges: usize = split.induced_degree.iter().map(|&(_, d)| d).sum();
    let nodes = vars.len() + split.induced_degree.len();
    let mut parent: Vec<usize> = (0..nodes).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut components = nodes;
    for (i, &v) in vars.iter().enumerate() {
        for &c in graph.var_neighbors(v) {
            let j = vars.len() + split.induced_degree.binary_search_by_key(&c, |&(c, _)| c).unwrap();
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
    }
    edges > nodes - components
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::enumerate_cycles;
    use crate::graph::fixtures::{f2, f3};
    use crate::graph::{gen_random_left_regular, gen_tanner_155};
    use proptest::prelude::*;

    #[test]
    fn single_variable_is_one_d_set() {
        let g = gen_tanner_155();
        let s = TrappingSet::new(&g, &[7], ClassifyMode::STRICT);
        assert_eq!(s.class(), (1, 3));
        assert_eq!(s.gamma_odd, g.var_neighbors(7));
        assert!(s.gamma_even.is_empty());
        assert!(s.flags.elementary);
        assert!(!s.flags.absorbing);
        assert!(!s.flags.in_t);
    }

    #[test]
    fn f2_three_variables() {
        let g = f2();
        let split = neighborhood_split(&g, &[0, 1, 2]);
        assert_eq!(split.gamma_even, vec![0, 1, 3]);
        assert_eq!(split.gamma_odd, vec![2, 4, 5]);
        let f = classify(&g, &[2, 0, 1], ClassifyMode::STRICT);
        assert!(f.elementary && f.absorbing && f.in_t && f.connected);
        assert_eq!(f.k_out, 3);
        assert_eq!(f.zp, Some(true));
    }

    #[test]
    fn f3_ring_is_four_zero() {
        let s = TrappingSet::new(&f3(), &[0, 1, 2, 3], ClassifyMode::STRICT);
        assert_eq!(s.class(), (4, 0));
        assert!(s.flags.fully_absorbing);
    }

    #[test]
    fn shortest_cycles_are_elementary() {
        let g = gen_tanner_155();
        for c in enumerate_cycles(&g, 8).iter().take(50) {
            let f = classify(&g, &c.var_set, ClassifyMode::STRICT);
            assert!(f.elementary);
            assert_eq!(TrappingSet::new(&g, &c.var_set, ClassifyMode::STRICT).class(), (4, 4));
        }
    }

    #[test]
    fn disconnected_sets_are_not_in_t() {
        let g = f3();
        let f = classify(&g, &[0, 2], ClassifyMode::STRICT);
        assert!(!f.connected && !f.in_t);
    }

    #[test]
    fn relaxed_mode_exempts_degree_two_variables() {
        // Open 2-chain of three degree-2 variables: (3, 2).
        let g = f3();
        let strict = classify(&g, &[0, 1, 2], ClassifyMode::STRICT);
        let relaxed = classify(&g, &[0, 1, 2], ClassifyMode::RELAXED);
        assert!(!strict.in_t && !strict.absorbing);
        assert!(relaxed.in_t && relaxed.absorbing);
    }

    #[test]
    fn canonical_keys() {
        assert_eq!(canonical(&[3, 1, 2]), canonical(&[1, 2, 3]));
        assert_ne!(canonical(&[1, 2]), canonical(&[1, 2, 3]));
    }

    proptest! {
        #[test]
        fn canonical_is_permutation_invariant(mut v in prop::collection::vec(0usize..50, 0..12), seed in any::<u64>()) {
            let k = canonical(&v);
            let n = v.len();
            if n > 1 {
                let (a, b) = ((seed as usize) % n, (seed as usize / 7) % n);
                v.swap(a, b);
                v.reverse();
            }
            prop_assert_eq!(canonical(&v), k);
        }

        #[test]
        fn split_invariants(seed in 0u64..40, picks in prop::collection::vec(0usize..60, 1..10)) {
            let g = gen_random_left_regular(60, 40, 3, 6, seed).unwrap();
            let s = TrappingSet::new(&g, &picks, ClassifyMode::STRICT);
            let split = neighborhood_split(&g, &s.vars);
            // disjoint and covering
            let mut all: Vec<usize> = s.gamma_odd.iter().chain(&s.gamma_even).copied().collect();
            all.sort_unstable();
            let mut gamma: Vec<usize> = split.induced_degree.iter().map(|&(c, _)| c).collect();
            gamma.sort_unstable();
            prop_assert_eq!(all, gamma);
            let deg_sum: usize = split.induced_degree.iter().map(|&(_, d)| d).sum();
            let var_sum: usize = s.vars.iter().map(|&v| g.var_degree(v)).sum();
            prop_assert_eq!(deg_sum, var_sum);
            prop_assert_eq!(s.b % 2, var_sum % 2);
            if s.flags.elementary {
                prop_assert_eq!(s.flags.k_out, s.b);
            }
            if s.flags.fully_absorbing {
                prop_assert!(s.flags.absorbing);
            }
            // odd left degree: ZP and absorbing coincide
            prop_assert_eq!(s.flags.zp, Some(s.flags.absorbing));
        }
    }
}
