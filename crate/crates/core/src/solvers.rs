//! Exact exponential solvers used as ground truth, plus the polynomial tree
//! domination DP and the half-size dominating set.
//!
//! All minimum-set solvers return the smallest witness in the integer order
//! of [`VertexSet`] among sets of optimal size.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{find_violation, is_f_free, Certificate, PatternFamily};
use crate::vertex_set::VertexSet;

/// Smallest set `S` (by size, then integer order) such that
/// `violation(V - N[S])` is `None`.
///
/// `violation` must be hereditary: if it reports nothing for a region, it
/// reports nothing for any subregion, and any reported occurrence lies in
/// the region it was given. The search fixes the largest element first,
/// ascending, so the first hit at the optimal size is the smallest witness.
pub fn min_isolating_set<V>(g: &Graph, violation: V) -> VertexSet
where
    V: Fn(&VertexSet) -> Option<VertexSet>,
{
    let n = g.n();
    let all = g.vertices();
    if violation(&all).is_none() {
        return VertexSet::new();
    }
    let lower = packing_bound(g, &violation, &all, &all).expect("N[V] hits every occurrence");
    for k in lower.max(1)..=n {
        let mut search = Search {
            g,
            violation: &violation,
        };
        if let Some(s) = search.dfs(VertexSet::new(), all, k, n) {
            return s;
        }
    }
    unreachable!("the full vertex set always isolates")
}

struct Search<'a, V> {
    g: &'a Graph,
    violation: &'a V,
}

impl<V> Search<'_, V>
where
    V: Fn(&VertexSet) -> Option<VertexSet>,
{
    /// Picks `r` more vertices, all below `limit`, to isolate `rem`.
    fn dfs(
        &mut self,
        chosen: VertexSet,
        rem: VertexSet,
        r: usize,
        limit: usize,
    ) -> Option<VertexSet> {
        let Some(occ) = (self.violation)(&rem) else {
            // With iterative deepening a smaller solution would have been
            // found first, so this only happens with r == 0.
            debug_assert_eq!(r, 0);
            return Some(chosen);
        };
        if r == 0 || limit < r {
            return None;
        }
        let allowed = VertexSet::full(limit);
        let need = packing_bound(self.g, self.violation, &rem, &allowed)?;
        if need > r {
            return None;
        }
        let hit = self.g.closed_neighborhood(&occ) & allowed;
        let lo = hit.first()?.max(r - 1);
        for x in lo..limit {
            let nx = self.g.closed_neighborhood(&VertexSet::singleton(x));
            // A vertex dominating nothing new could be dropped from an
            // optimal set, contradicting minimality.
            if !nx.intersects(&rem) {
                continue;
            }
            let mut next = chosen;
            next.insert(x);
            if let Some(s) = self.dfs(next, rem - nx, r - 1, x) {
                return Some(s);
            }
        }
        None
    }
}

/// Number of occurrences found greedily whose hitting sets
/// `N[W] ∩ allowed` are pairwise disjoint: a lower bound on how many more
/// vertices from `allowed` are needed. `None` when some occurrence cannot
/// be hit at all.
fn packing_bound<V>(g: &Graph, violation: &V, rem: &VertexSet, allowed: &VertexSet) -> Option<usize>
where
    V: Fn(&VertexSet) -> Option<VertexSet>,
{
    let mut rest = *rem;
    let mut count = 0;
    while let Some(occ) = violation(&rest) {
        let hit = g.closed_neighborhood(&occ) & *allowed;
        if hit.is_empty() {
            return None;
        }
        count += 1;
        rest -= g.closed_neighborhood(&hit);
    }
    Some(count)
}

/// `ι(G, F)` with the smallest minimum witness.
pub fn exact_isolation(g: &Graph, family: &PatternFamily) -> (usize, Certificate) {
    let set = min_isolating_set(g, |r| find_violation(g, r, family));
    (set.len(), Certificate::new(set, family.clone(), "exact"))
}

pub fn isolation_number(g: &Graph, family: &PatternFamily) -> usize {
    exact_isolation(g, family).0
}

/// `γ(G)` with the smallest minimum dominating set.
pub fn exact_domination(g: &Graph) -> (usize, VertexSet) {
    let set = min_isolating_set(g, |r| {
        // The undominated vertex whose closed neighborhood starts highest
        // constrains the branching the most.
        r.iter()
            .max_by_key(|&v| (g.closed_neighborhood(&VertexSet::singleton(v)).first(), v))
            .map(VertexSet::singleton)
    });
    (set.len(), set)
}

pub fn domination_number(g: &Graph) -> usize {
    exact_domination(g).0
}

/// `α(G, F)`: maximum order of an induced F-free subgraph, with the
/// smallest maximum witness.
pub fn max_f_free_induced(g: &Graph, family: &PatternFamily) -> (usize, VertexSet) {
    let n = g.n();
    let mut best = 0;
    grow_max(g, family, VertexSet::new(), n, &mut best);
    let set = smallest_of_size(g, family, VertexSet::new(), n, best)
        .expect("a set of the maximum size exists");
    (best, set)
}

/// `α_k(G)`: maximum size of a set inducing maximum degree at most `k`.
pub fn exact_k_independence(g: &Graph, k: usize) -> (usize, VertexSet) {
    max_f_free_induced(g, &PatternFamily::Star(k))
}

/// Branch and bound on vertices `0..undecided`, highest first, including
/// first so good incumbents appear early.
fn grow_max(
    g: &Graph,
    family: &PatternFamily,
    chosen: VertexSet,
    undecided: usize,
    best: &mut usize,
) {
    if chosen.len() + undecided <= *best {
        return;
    }
    if undecided == 0 {
        *best = chosen.len();
        return;
    }
    let v = undecided - 1;
    let mut with = chosen;
    with.insert(v);
    if is_f_free(g, &with, family) {
        grow_max(g, family, with, v, best);
    }
    grow_max(g, family, chosen, v, best);
}

/// First set of size `target` in the integer order, excluding high vertices
/// first.
fn smallest_of_size(
    g: &Graph,
    family: &PatternFamily,
    chosen: VertexSet,
    undecided: usize,
    target: usize,
) -> Option<VertexSet> {
    if chosen.len() == target {
        return Some(chosen);
    }
    if chosen.len() + undecided < target {
        return None;
    }
    let v = undecided - 1;
    if let Some(s) = smallest_of_size(g, family, chosen, v, target) {
        return Some(s);
    }
    let mut with = chosen;
    with.insert(v);
    if is_f_free(g, &with, family) {
        return smallest_of_size(g, family, with, v, target);
    }
    None
}

const INF: usize = usize::MAX / 4;

#[derive(Clone, Copy, PartialEq, Eq)]
enum TreeState {
    In,
    Dominated,
    Free,
}

/// Exact `γ` of a forest by the three-state leaf-up DP: a vertex is in the
/// set, dominated by a child, or left for its parent to dominate.
pub fn tree_domination(g: &Graph) -> Result<(usize, VertexSet)> {
    if !g.is_forest() {
        return Err(Error::Structure("tree_domination needs a forest".into()));
    }
    let n = g.n();
    let mut set = VertexSet::new();
    let mut cost = vec![[INF; 3]; n];
    for comp in g.components() {
        let root = comp.first().expect("nonempty component");
        let tree = g.bfs_tree_within(&comp, root)?;
        for &v in tree.order.iter().rev() {
            let kids = tree.children(v);
            let mut c_in: usize = 1;
            let mut c_dom: usize = 0;
            let mut c_free: usize = 0;
            let mut penalty = INF;
            for c in kids.iter() {
                let [i, d, f] = cost[c];
                c_in = c_in.saturating_add(i.min(d).min(f));
                c_dom = c_dom.saturating_add(i.min(d));
                penalty = penalty.min(i.saturating_sub(d));
                c_free = c_free.saturating_add(d);
            }
            c_dom = if kids.is_empty() {
                INF
            } else {
                c_dom.saturating_add(penalty)
            };
            cost[v] = [c_in.min(INF), c_dom.min(INF), c_free.min(INF)];
        }
        let mut state = vec![TreeState::Free; n];
        state[root] = if cost[root][0] <= cost[root][1] {
            TreeState::In
        } else {
            TreeState::Dominated
        };
        for &v in &tree.order {
            let kids = tree.children(v);
            match state[v] {
                TreeState::In => {
                    set.insert(v);
                    for c in kids.iter() {
                        let [i, d, f] = cost[c];
                        state[c] = if f <= i.min(d) {
                            TreeState::Free
                        } else if d <= i {
                            TreeState::Dominated
                        } else {
                            TreeState::In
                        };
                    }
                }
                TreeState::Dominated => {
                    let mut any_in = false;
                    for c in kids.iter() {
                        let [i, d, _] = cost[c];
                        state[c] = if i < d {
                            any_in = true;
                            TreeState::In
                        } else {
                            TreeState::Dominated
                        };
                    }
                    if !any_in {
                        let c = kids
                            .iter()
                            .min_by_key(|&c| (cost[c][0] - cost[c][1], c))
                            .expect("a dominated vertex has children");
                        state[c] = TreeState::In;
                    }
                }
                TreeState::Free => {
                    for c in kids.iter() {
                        state[c] = TreeState::Dominated;
                    }
                }
            }
        }
    }
    Ok((set.len(), set))
}

/// Dominating set of size at most `⌊n/2⌋` for a graph without isolated
/// vertices: in each component, the smaller level-parity class of a BFS
/// tree (ties go to the class of the root).
pub fn half_dominating_set(g: &Graph) -> Result<VertexSet> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Precondition(format!("vertex {v} is isolated")));
    }
    let mut out = VertexSet::new();
    for comp in g.components() {
        let root = comp.first().expect("nonempty component");
        let tree = g.bfs_tree_within(&comp, root)?;
        let even: VertexSet = comp.iter().filter(|&v| tree.level[v] % 2 == 0).collect();
        let odd = comp - even;
        out |= if even.len() <= odd.len() { even } else { odd };
    }
    Ok(out)
}
