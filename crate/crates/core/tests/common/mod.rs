//! Brute-force reference implementations used as oracles by the
//! integration tests. They share nothing with the library beyond reading a
//! `Graph`'s adjacency, and trade speed for obviousness.

#![allow(dead_code)]

use isolate_core::{Graph, VertexSet};

/// Adjacency rows as `u64` masks; graphs up to 64 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adj {
    pub n: usize,
    pub rows: Vec<u64>,
}

impl Adj {
    pub fn from_graph(g: &Graph) -> Adj {
        assert!(g.n() <= 64);
        let rows = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u))
            .collect();
        Adj { n: g.n(), rows }
    }

    /// Graph on `n` vertices from the pair mask, bit `j(j-1)/2 + i` for
    /// the pair `i < j`.
    pub fn from_mask(n: usize, mask: u64) -> Adj {
        let mut rows = vec![0u64; n];
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        Adj { n, rows }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Adj {
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Adj { n, rows }
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| {
                (u + 1..self.n)
                    .filter(move |&v| self.rows[u] >> v & 1 == 1)
                    .map(move |v| (u, v))
            })
            .collect();
        Graph::from_edges(self.n, edges).unwrap()
    }

    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn complement(&self) -> Adj {
        let all = self.all();
        let rows = (0..self.n)
            .map(|v| all & !self.rows[v] & !(1 << v))
            .collect();
        Adj { n: self.n, rows }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edges(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn closed(&self, set: u64) -> u64 {
        let mut out = set;
        for v in bits(set) {
            out |= self.rows[v];
        }
        out
    }

    /// Every vertex of `region` has at most `k` neighbors inside it.
    pub fn max_degree_within_at_most(&self, region: u64, k: usize) -> bool {
        bits(region).all(|v| (self.rows[v] & region).count_ones() as usize <= k)
    }

    pub fn isolates(&self, set: u64, k: usize) -> bool {
        let rest = self.all() & !self.closed(set);
        self.max_degree_within_at_most(rest, k)
    }

    pub fn connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        loop {
            let next = self.closed(seen);
            if next == seen {
                return seen == self.all();
            }
            seen = next;
        }
    }
}

pub fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// All `k`-subsets of `0..n` as masks, by Gosper's hack.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n == 64 { u64::MAX } else { 1u64 << n };
    let mut cur = if k == 0 {
        Some(0u64)
    } else if k > n {
        None
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 {
            None
        } else {
            let low = c & c.wrapping_neg();
            let r = c + low;
            let next = (((r ^ c) >> 2) / low) | r;
            (r != 0 && next < limit && next > c).then_some(next)
        };
        Some(c)
    })
}

/// Smallest `s` such that some `s`-set passes `ok`.
fn min_size(n: usize, ok: impl Fn(u64) -> bool) -> (usize, u64) {
    for s in 0..=n {
        if let Some(m) = subsets_of_size(n, s).find(|&m| ok(m)) {
            return (s, m);
        }
    }
    unreachable!("the full vertex set always passes")
}

/// `ι_k` by trying sets in order of size.
pub fn iota(a: &Adj, k: usize) -> usize {
    min_size(a.n, |m| a.isolates(m, k)).0
}

/// Whether some set of at most `s` vertices is `k`-isolating.
pub fn iota_at_most(a: &Adj, k: usize, s: usize) -> bool {
    (0..=s.min(a.n)).any(|size| subsets_of_size(a.n, size).any(|m| a.isolates(m, k)))
}

pub fn gamma(a: &Adj) -> usize {
    let all = a.all();
    min_size(a.n, |m| a.closed(m) == all).0
}

/// Largest induced subgraph of maximum degree at most `k`.
pub fn alpha_k(a: &Adj, k: usize) -> usize {
    (0..=a.n)
        .rev()
        .find(|&s| subsets_of_size(a.n, s).any(|m| a.max_degree_within_at_most(m, k)))
        .unwrap()
}

pub fn mask_of(set: &VertexSet) -> u64 {
    set.iter().fold(0, |m, v| m | 1 << v)
}

pub fn choose(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn gosper_counts() {
    for n in 0..8 {
        for k in 0..=n {
            assert_eq!(
                subsets_of_size(n, k).count() as u64,
                choose(n as u64, k as u64),
                "n={n} k={k}"
            );
        }
    }
    assert_eq!(subsets_of_size(36, 2).count(), 630);
}

#[test]
fn oracle_sanity() {
    let c5 = Adj::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
    assert_eq!(iota(&c5, 0), 2);
    assert_eq!(gamma(&c5), 2);
    assert_eq!(alpha_k(&c5, 0), 2);
    assert!(c5.connected());
    assert_eq!(c5.complement().edges(), 5);
}
