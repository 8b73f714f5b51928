//! Immutable simple undirected graphs with bitset adjacency.

use std::collections::VecDeque;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simple undirected graph on vertices `0..n`.
///
/// `adj[v]` is the open neighborhood of `v`. The type is immutable: every
/// derived graph is a new value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Breadth-first spanning tree of a connected graph or region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsTree {
    pub root: usize,
    /// `parent[v]` for reached vertices other than the root.
    pub parent: Vec<Option<usize>>,
    pub level: Vec<usize>,
    /// Vertices in visiting order.
    pub order: Vec<usize>,
}

impl BfsTree {
    pub fn depth(&self) -> usize {
        self.order.iter().map(|&v| self.level[v]).max().unwrap_or(0)
    }

    pub fn children(&self, v: usize) -> VertexSet {
        self.order
            .iter()
            .copied()
            .filter(|&c| self.parent[c] == Some(v))
            .collect()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Size(format!(
                "{n} vertices exceed the supported maximum of {MAX_VERTICES}"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(); n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Structure(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Structure(format!("loop at vertex {u}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from an arbitrary adjacency table, symmetrising it and
    /// dropping loops and out-of-range bits.
    pub(crate) fn from_adjacency(n: usize, mut adj: Vec<VertexSet>) -> Graph {
        debug_assert!(n <= MAX_VERTICES && adj.len() == n);
        let all = VertexSet::full(n);
        for v in 0..n {
            adj[v] &= all;
            adj[v].remove(v);
        }
        for v in 0..n {
            for u in adj[v].iter() {
                adj[u].insert(v);
            }
        }
        Graph { n, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degree of `v` inside the induced subgraph on `region`.
    #[inline]
    pub fn degree_in(&self, v: usize, region: &VertexSet) -> usize {
        (self.adj[v] & *region).len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Average degree `2m/n`; zero for the null graph.
    pub fn average_degree(&self) -> Ratio<i64> {
        if self.n == 0 {
            return Ratio::from_integer(0);
        }
        Ratio::new(2 * self.m() as i64, self.n as i64)
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.min_degree();
        (d == self.max_degree()).then_some(d)
    }

    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = *s;
        for v in s.iter() {
            out |= self.adj[v];
        }
        out
    }

    /// `N(S)`: vertices outside `s` with a neighbor in `s`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        self.closed_neighborhood(s) - *s
    }

    /// `V \ N[S]`, the vertices left undominated by `s`.
    pub fn remainder(&self, s: &VertexSet) -> VertexSet {
        self.vertices() - self.closed_neighborhood(s)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| {
                let mut a = all - self.adj[v];
                a.remove(v);
                a
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Cartesian product; vertex `(i, j)` becomes `i * h.n() + j`.
    pub fn cartesian_product(&self, h: &Graph) -> Result<Graph> {
        let n = self.n * h.n;
        let mut out = Graph::empty(n)?;
        for i in 0..self.n {
            for j in 0..h.n {
                let v = i * h.n + j;
                for jj in h.adj[j].iter() {
                    out.adj[v].insert(i * h.n + jj);
                }
                for ii in self.adj[i].iter() {
                    out.adj[v].insert(ii * h.n + j);
                }
            }
        }
        Ok(out)
    }

    /// `G²`: vertices at distance one or two become adjacent.
    pub fn square(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| {
                let mut a = self.closed_neighborhood(&self.adj[v]);
                a.remove(v);
                a
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Bipartite double `B(G)`: side one is `0..n`, side two is `n..2n`, and
    /// `i ~ n + j` iff `i == j` or `ij` is an edge.
    pub fn bipartite_double(&self) -> Result<Graph> {
        let n = self.n;
        let mut out = Graph::empty(2 * n)?;
        for i in 0..n {
            let mut side = self.adj[i];
            side.insert(i);
            for j in side.iter() {
                out.adj[i].insert(n + j);
                out.adj[n + j].insert(i);
            }
        }
        debug_assert!(n == 0 || out.min_degree() == self.min_degree() + 1);
        Ok(out)
    }

    /// Disjoint union; the vertices of `h` follow those of `self`.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph> {
        let n = self.n + h.n;
        let mut out = Graph::empty(n)?;
        for v in 0..self.n {
            out.adj[v] = self.adj[v];
        }
        for v in 0..h.n {
            out.adj[self.n + v] = h.adj[v].iter().map(|u| u + self.n).collect();
        }
        Ok(out)
    }

    /// Induced subgraph on `region`, relabelled in increasing order. The
    /// second component maps new indices to old.
    pub fn induced_subgraph(&self, region: &VertexSet) -> (Graph, Vec<usize>) {
        let map = region.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & *region).iter().map(|u| index[u]).collect())
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// Connected components of the induced subgraph on `region`, ordered by
    /// smallest member.
    pub fn components_within(&self, region: &VertexSet) -> Vec<VertexSet> {
        let mut left = *region;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in frontier.iter() {
                    next |= self.adj[v];
                }
                next &= *region;
                next -= comp;
                comp |= next;
                frontier = next;
            }
            left -= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    pub fn is_connected_within(&self, region: &VertexSet) -> bool {
        self.components_within(region).len() <= 1
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(&self.vertices())
    }

    pub fn edges_within(&self, region: &VertexSet) -> usize {
        region
            .iter()
            .map(|v| self.degree_in(v, region))
            .sum::<usize>()
            / 2
    }

    pub fn is_forest_within(&self, region: &VertexSet) -> bool {
        self.edges_within(region) + self.components_within(region).len() == region.len()
    }

    pub fn is_forest(&self) -> bool {
        self.is_forest_within(&self.vertices())
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// True iff `g[region]` is a cycle on exactly `k` vertices.
    pub fn is_cycle_within(&self, region: &VertexSet, k: usize) -> bool {
        k >= 3
            && region.len() == k
            && region.iter().all(|v| self.degree_in(v, region) == 2)
            && self.is_connected_within(region)
    }

    pub fn is_cycle_of_length(&self, k: usize) -> bool {
        self.n == k && self.is_cycle_within(&self.vertices(), k)
    }

    /// BFS tree of `g[region]` from `root`, scanning neighbors in increasing
    /// order so parents are the smallest-index discoverers.
    pub fn bfs_tree_within(&self, region: &VertexSet, root: usize) -> Result<BfsTree> {
        if !region.contains(root) {
            return Err(Error::Precondition(format!("root {root} not in region")));
        }
        let mut parent = vec![None; self.n];
        let mut level = vec![usize::MAX; self.n];
        let mut order = Vec::with_capacity(region.len());
        let mut queue = VecDeque::new();
        level[root] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in (self.adj[v] & *region).iter() {
                if level[u] == usize::MAX {
                    level[u] = level[v] + 1;
                    parent[u] = Some(v);
                    queue.push_back(u);
                }
            }
        }
        if order.len() != region.len() {
            return Err(Error::Structure(
                "BFS tree requires a connected graph".into(),
            ));
        }
        Ok(BfsTree {
            root,
            parent,
            level,
            order,
        })
    }

    pub fn bfs_tree(&self, root: usize) -> Result<BfsTree> {
        if root >= self.n {
            return Err(Error::Precondition(format!(
                "root {root} out of range for {} vertices",
                self.n
            )));
        }
        self.bfs_tree_within(&self.vertices(), root)
    }

    /// Proper 2-colouring with the smallest vertex of every component on
    /// side 0, or `None` if an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for comp in self.components() {
            let root = comp.first().expect("components are nonempty");
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for u in self.adj[v].iter() {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, empty, path};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn closed_neighborhood_examples() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.closed_neighborhood(&set(&[0])), set(&[4, 0, 1]));
        assert!(c5.closed_neighborhood(&VertexSet::new()).is_empty());
        let k5 = complete(5).unwrap();
        assert_eq!(k5.closed_neighborhood(&set(&[2])), k5.vertices());
    }

    #[test]
    fn remainder_examples() {
        assert_eq!(cycle(5).unwrap().remainder(&set(&[0])), set(&[2, 3]));
        assert_eq!(path(4).unwrap().remainder(&set(&[1])), set(&[3]));
        assert!(complete(5).unwrap().remainder(&set(&[0])).is_empty());
        let g = path(6).unwrap();
        assert_eq!(g.remainder(&VertexSet::new()), g.vertices());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(4).unwrap().complement().m(), 0);
        let c5c = cycle(5).unwrap().complement();
        assert!(c5c.is_cycle_of_length(5));
        let p4c = path(4).unwrap().complement();
        // P4 complement is the path 2-0-3-1.
        assert_eq!(p4c.edges(), vec![(0, 2), (0, 3), (1, 3)]);
        assert!(p4c.is_tree() && p4c.max_degree() == 2);
    }

    #[test]
    fn products() {
        let k2 = complete(2).unwrap();
        assert!(k2.cartesian_product(&k2).unwrap().is_cycle_of_length(4));
        let prism = complete(3).unwrap().cartesian_product(&k2).unwrap();
        assert_eq!((prism.n(), prism.m()), (6, 9));
        let p3 = path(3).unwrap();
        assert_eq!(p3.cartesian_product(&p3).unwrap().m(), 12);
        let big = path(17).unwrap().cartesian_product(&path(17).unwrap());
        assert!(matches!(big, Err(Error::Size(_))));
    }

    #[test]
    fn square_examples() {
        let sq = path(4).unwrap().square();
        assert_eq!(sq.edges(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(cycle(5).unwrap().square(), complete(5).unwrap());
        assert_eq!(empty(4).unwrap().square().m(), 0);
    }

    #[test]
    fn bipartite_double_examples() {
        let b = complete(2).unwrap().bipartite_double().unwrap();
        assert!(b.is_cycle_of_length(4));
        let m = empty(3).unwrap().bipartite_double().unwrap();
        assert_eq!(m.edges(), vec![(0, 3), (1, 4), (2, 5)]);
        let b5 = cycle(5).unwrap().bipartite_double().unwrap();
        assert_eq!(b5.min_degree(), 3);
        assert!(b5.is_bipartite());
    }

    #[test]
    fn components_and_trees() {
        let g = complete(3)
            .unwrap()
            .disjoint_union(&complete(2).unwrap())
            .unwrap();
        let sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![3, 2]);
        assert!(cycle(5).unwrap().is_cycle_of_length(5));
        assert!(!path(5).unwrap().is_cycle_of_length(5));
        let t = path(4).unwrap().bfs_tree(0).unwrap();
        assert_eq!(&t.level[..4], &[0, 1, 2, 3]);
        assert_eq!(t.parent[3], Some(2));
        assert!(matches!(g.bfs_tree(0), Err(Error::Structure(_))));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c6 = cycle(6).unwrap();
        let (h, map) = c6.induced_subgraph(&set(&[1, 2, 3, 5]));
        assert_eq!(map, vec![1, 2, 3, 5]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }
}
