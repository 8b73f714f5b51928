//! Generators for named graphs and extremal constructions.
//!
//! Vertex orders are part of each generator's contract and are documented
//! per function, since tests and certificates refer to specific indices.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// The PRNG behind every seeded generator and randomized algorithm.
pub type SeededRng = Xoshiro256PlusPlus;

pub fn seeded_rng(seed: u64) -> SeededRng {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

/// `P_n`: `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n`: the path plus the edge `(n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    let g = Graph::empty(n)?;
    Ok(g.complement())
}

pub fn empty(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

/// `K_{p,q}` with sides `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    Graph::from_edges(p + q, (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))))
}

/// `K_{1,r}` with center 0.
pub fn star(r: usize) -> Result<Graph> {
    complete_bipartite(1, r)
}

/// Petersen graph: outer cycle `0..5`, spokes `i ~ i+5`, inner pentagram
/// `5+i ~ 5+(i+2)%5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("Petersen graph is valid")
}

/// `Q_d` on bitmasks, adjacent when they differ in one bit.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d > 8 {
        return Err(param(format!("hypercube dimension {d} too large")));
    }
    let n = 1usize << d;
    Graph::from_edges(
        n,
        (0..n).flat_map(|v| {
            (0..d)
                .map(move |b| (v, v ^ (1 << b)))
                .filter(|&(v, u)| v < u)
        }),
    )
}

/// Uniform labelled tree on `n >= 1` vertices from a random Prüfer
/// sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(param("random tree needs n >= 1"));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = seeded_rng(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Graph::from_edges(n, prufer_edges(n, &code))
}

/// Decodes a Prüfer sequence of length `n - 2`.
pub fn prufer_edges(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}

/// Random `d`-regular graph from the pairing model, rejecting loops and
/// multi-edges. Gives up after `MAX_PAIRING_TRIES` attempts.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    const MAX_PAIRING_TRIES: usize = 10_000;
    if d >= n.max(1) || (n * d) % 2 == 1 {
        return Err(param(format!("no {d}-regular graph on {n} vertices")));
    }
    let mut rng = seeded_rng(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..MAX_PAIRING_TRIES {
        points.shuffle(&mut rng);
        let mut adj = vec![VertexSet::new(); n];
        for pair in points.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u].contains(v) {
                continue 'attempt;
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let edges = (0..n).flat_map(|u| adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)));
        return Graph::from_edges(n, edges.collect::<Vec<_>>());
    }
    Err(param(format!(
        "pairing model failed {MAX_PAIRING_TRIES} times for n = {n}, d = {d}"
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoronaMode {
    /// Vertex `i` joined to one end of its `K_2`.
    OneEdge,
    /// Vertex `i` joined to both ends, hanging a triangle.
    TwoEdges,
}

/// A `K_2` hung on every vertex of `h`. Base vertices keep their indices;
/// the `K_2` of vertex `i` is `n + 2i, n + 2i + 1`.
pub fn corona_k2(h: &Graph, mode: CoronaMode) -> Result<Graph> {
    if h.n() == 0 || !h.is_connected() {
        return Err(param("corona base must be connected and nonempty"));
    }
    let n = h.n();
    let mut edges = h.edges();
    for i in 0..n {
        let (a, b) = (n + 2 * i, n + 2 * i + 1);
        edges.push((a, b));
        edges.push((i, a));
        if mode == CoronaMode::TwoEdges {
            edges.push((i, b));
        }
    }
    Graph::from_edges(3 * n, edges)
}

/// Disjoint union of graphs in order.
pub fn disjoint_union_all(parts: &[Graph]) -> Result<Graph> {
    parts
        .iter()
        .try_fold(Graph::empty(0)?, |acc, p| acc.disjoint_union(p))
}

/// `r K_3 ∪ s P_3 ∪ t C_6`, in that order.
pub fn f_rst(r: usize, s: usize, t: usize) -> Result<Graph> {
    if r + s + t == 0 {
        return Err(param("f_rst needs r + s + t >= 1"));
    }
    let mut parts = Vec::new();
    parts.extend(std::iter::repeat_n(complete(3)?, r));
    parts.extend(std::iter::repeat_n(path(3)?, s));
    parts.extend(std::iter::repeat_n(cycle(6)?, t));
    disjoint_union_all(&parts)
}

/// `K_r` minus the Hamiltonian cycle `0 - 1 - ... - (r-1) - 0`.
pub fn kr_minus_hamiltonian(r: usize) -> Result<Graph> {
    if r < 4 {
        return Err(param(format!(
            "K_r minus a Hamiltonian cycle needs r >= 4, got {r}"
        )));
    }
    let cyc = cycle(r)?;
    let g = cyc.complement();
    debug_assert_eq!(g.regular_degree(), Some(r - 3));
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComposeMode {
    Delta1,
    DeltaGe2,
}

/// `t = n(gstar)` copies of `h`, copy `i` occupying `i*n(h)..(i+1)*n(h)`,
/// followed by the vertices of `gstar`; the hook of copy `i` is joined to
/// vertex `i` of `gstar`.
pub fn compose_general(h: &Graph, hook: usize, gstar: &Graph, mode: ComposeMode) -> Result<Graph> {
    if h.n() == 0 || !h.is_connected() {
        return Err(param("h must be connected and nonempty"));
    }
    if hook >= h.n() {
        return Err(param(format!("hook {hook} out of range")));
    }
    if gstar.n() == 0 || !gstar.is_connected() {
        return Err(param("gstar must be connected and nonempty"));
    }
    match mode {
        ComposeMode::Delta1 => {
            if h.min_degree() != 1 {
                return Err(param("delta1 mode needs min degree of h equal to 1"));
            }
            if !(0..h.n()).any(|v| v != hook && h.degree(v) == 1) {
                return Err(param("delta1 mode needs a leaf of h other than the hook"));
            }
        }
        ComposeMode::DeltaGe2 => {
            if gstar.min_degree() < 1 {
                return Err(param("delta_ge2 mode needs min degree of gstar >= 1"));
            }
            if h.min_degree() < gstar.min_degree() + 1 {
                return Err(param(
                    "delta_ge2 mode needs min degree of h > min degree of gstar",
                ));
            }
        }
    }
    let (hn, t) = (h.n(), gstar.n());
    let mut edges = Vec::new();
    for i in 0..t {
        edges.extend(h.edges().into_iter().map(|(u, v)| (i * hn + u, i * hn + v)));
        edges.push((i * hn + hook, t * hn + i));
    }
    edges.extend(
        gstar
            .edges()
            .into_iter()
            .map(|(u, v)| (t * hn + u, t * hn + v)),
    );
    Graph::from_edges(t * (hn + 1), edges)
}

/// Path `0..t`, then for each `i` a block of `k + 2` vertices: the star
/// center followed by its `k + 1` leaves. Path vertex `i` is joined to the
/// first leaf of block `i`. Order `t (k + 3)`.
pub fn path_of_stars(t: usize, k: usize) -> Result<Graph> {
    if t == 0 {
        return Err(param("path_of_stars needs t >= 1"));
    }
    let n = t * (k + 3);
    let mut edges: Vec<(usize, usize)> = (1..t).map(|i| (i - 1, i)).collect();
    for i in 0..t {
        let c = t + i * (k + 2);
        for l in 1..=k + 1 {
            edges.push((c, c + l));
        }
        edges.push((i, c + 1));
    }
    Graph::from_edges(n, edges)
}

/// Caterpillar whose inner vertices all have degree `r`: spine
/// `x_1..x_t` at `0..t`; each inner `x_i` gets a pendant `v_i` carrying
/// `r - 1` leaves, then `r - 3` leaves of its own. Order
/// `t + (t - 2)(2r - 3)`.
pub fn equal_degree_caterpillar(t: usize, r: usize) -> Result<Graph> {
    if t < 3 || r < 3 {
        return Err(param("equal_degree_caterpillar needs t >= 3 and r >= 3"));
    }
    let n = t + (t - 2) * (2 * r - 3);
    let mut edges: Vec<(usize, usize)> = (1..t).map(|i| (i - 1, i)).collect();
    let mut next = t;
    for x in 1..t - 1 {
        let v = next;
        edges.push((x, v));
        for l in 1..r {
            edges.push((v, v + l));
        }
        next = v + r;
        for l in 0..r - 3 {
            edges.push((x, next + l));
        }
        next += r - 3;
    }
    debug_assert_eq!(next, n);
    let g = Graph::from_edges(n, edges)?;
    debug_assert!((0..n).all(|v| g.degree(v) == 1 || g.degree(v) == r));
    Ok(g)
}

/// Maximal outerplanar fan: vertex 0 joined to the path `1..n`. The outer
/// cycle is `0, 1, ..., n-1`.
pub fn fan_triangulation(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param("fan triangulation needs n >= 3"));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    edges.extend((2..n).map(|i| (i - 1, i)));
    Graph::from_edges(n, edges)
}

/// Random triangulation of the polygon `0, 1, ..., n-1`: split the polygon
/// on the edge between its ends at a uniformly chosen apex, recursively.
pub fn random_polygon_triangulation(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(param("polygon triangulation needs n >= 3"));
    }
    let mut rng = seeded_rng(seed);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut stack = vec![(0usize, n - 1)];
    while let Some((a, b)) = stack.pop() {
        if b - a < 2 {
            continue;
        }
        let apex = rng.random_range(a + 1..b);
        if apex - a >= 2 {
            edges.push((a, apex));
        }
        if b - apex >= 2 {
            edges.push((apex, b));
        }
        stack.push((a, apex));
        stack.push((apex, b));
    }
    Graph::from_edges(n, edges)
}

/// True iff `g` has `2n - 3` edges, the outer cycle `0..n` and an
/// outerplanar embedding with that cycle as boundary. Uses leaf-ear
/// peeling: a maximal outerplanar graph always has a degree-2 vertex whose
/// neighbors are adjacent.
pub fn is_maximal_outerplanar(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || g.m() != 2 * n - 3 {
        return false;
    }
    if (0..n).any(|i| !g.has_edge(i, (i + 1) % n)) {
        return false;
    }
    // Peel ears along the boundary order.
    let mut boundary: Vec<usize> = (0..n).collect();
    let mut alive = g.vertices();
    while boundary.len() > 3 {
        let len = boundary.len();
        let ear = (0..len).find(|&i| {
            let v = boundary[i];
            let (p, q) = (boundary[(i + len - 1) % len], boundary[(i + 1) % len]);
            g.degree_in(v, &alive) == 2 && g.has_edge(p, q)
        });
        match ear {
            Some(i) => {
                alive.remove(boundary[i]);
                boundary.remove(i);
            }
            None => return false,
        }
    }
    g.edges_within(&alive) == 3
}

/// Sharpness graph for the outerplanar bound. `base` must be maximal
/// outerplanar on `2p` vertices with outer cycle `0..2p`; the new vertex
/// `w_i` is `2p + i`. Pair `j` gets edges `v_{2j} w_{2j}`,
/// `v_{2j+1} w_{2j+1}`, `v_{2j} w_{2j+1}`, `w_{2j} w_{2j+1}`.
pub fn outerplanar_sharp(p: usize, base: Option<&Graph>) -> Result<Graph> {
    if p < 2 {
        return Err(param("outerplanar_sharp needs p >= 2"));
    }
    let fan;
    let base = match base {
        Some(b) => b,
        None => {
            fan = fan_triangulation(2 * p)?;
            &fan
        }
    };
    if base.n() != 2 * p || !is_maximal_outerplanar(base) {
        return Err(param("base must be maximal outerplanar on 2p vertices"));
    }
    let m = 2 * p;
    let mut edges = base.edges();
    for j in 0..p {
        let (a, b) = (2 * j, 2 * j + 1);
        edges.extend([(a, m + a), (b, m + b), (a, m + b), (m + a, m + b)]);
    }
    Graph::from_edges(2 * m, edges)
}

/// Bipartite graph meeting the average-degree lower bound with equality.
/// Hubs `s_i` are `0..t`; `a_{i,j}` is `t + iΔ + j`; each `a` then gets
/// `Δ - 1` private pendant vertices, numbered consecutively after all of
/// `A`. Order `t + tΔ²`; `Δ = 1` gives `t K_2`.
pub fn lb_equality_bipartite(t: usize, delta: usize) -> Result<Graph> {
    if t == 0 || delta == 0 {
        return Err(param("lb_equality_bipartite needs t >= 1 and delta >= 1"));
    }
    let a0 = t;
    let p0 = t + t * delta;
    let n = t + t * delta * delta;
    let mut edges = Vec::new();
    for i in 0..t {
        for j in 0..delta {
            let a = a0 + i * delta + j;
            edges.push((i, a));
            for l in 0..delta - 1 {
                edges.push((a, p0 + (i * delta + j) * (delta - 1) + l));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Hub `0` joined to the first vertex of each of `delta` cliques `K_{k+1}`;
/// clique `i` occupies `1 + i(k+1) .. 1 + (i+1)(k+1)`.
pub fn star_lower_sharp(delta: usize, k: usize) -> Result<Graph> {
    if delta == 0 {
        return Err(param("star_lower_sharp needs delta >= 1"));
    }
    let n = delta * (k + 1) + 1;
    let mut edges = Vec::new();
    for i in 0..delta {
        let base = 1 + i * (k + 1);
        edges.push((0, base));
        for a in 0..=k {
            for b in a + 1..=k {
                edges.push((base + a, base + b));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// `K_{1,2p+q}` with `2p` of its edges subdivided and the `2p` outer ends
/// joined in pairs: center `0`, subdivision vertices `1..=2p`, outer ends
/// `2p+1..=4p` and plain leaves after them.
pub fn subdivided_star_sharp(p: usize, q: usize) -> Result<Graph> {
    let n = 1 + 4 * p + q;
    let mut edges = Vec::new();
    for i in 0..2 * p {
        edges.push((0, 1 + i));
        edges.push((1 + i, 1 + 2 * p + i));
    }
    for j in 0..p {
        edges.push((1 + 2 * p + 2 * j, 2 + 2 * p + 2 * j));
    }
    for l in 0..q {
        edges.push((0, 1 + 4 * p + l));
    }
    Graph::from_edges(n, edges)
}

/// Line graph; vertex `i` is the `i`-th edge of `g.edges()`.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let es = g.edges();
    let mut edges = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let (a, b) = es[i];
            let (c, d) = es[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(es.len(), edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GridKind {
    /// `C_s × C_t`.
    Torus,
    /// `P_s × C_t`.
    Cylinder,
    /// `P_s × P_t`.
    Grid,
}

impl std::str::FromStr for GridKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<GridKind> {
        match s {
            "torus" => Ok(GridKind::Torus),
            "cylinder" => Ok(GridKind::Cylinder),
            "grid" => Ok(GridKind::Grid),
            _ => Err(param(format!("unknown grid kind {s:?}"))),
        }
    }
}

impl std::fmt::Display for GridKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GridKind::Torus => "torus",
            GridKind::Cylinder => "cylinder",
            GridKind::Grid => "grid",
        })
    }
}

/// Product graph for `kind`; row `i`, column `j` (both 0-based) is vertex
/// `i * t + j`.
pub fn grid_graph(kind: GridKind, s: usize, t: usize) -> Result<Graph> {
    if s < 3 || t < 3 {
        return Err(Error::Precondition(format!(
            "grid dimensions must be >= 3, got {s}x{t}"
        )));
    }
    let (x, y) = match kind {
        GridKind::Torus => (cycle(s)?, cycle(t)?),
        GridKind::Cylinder => (path(s)?, cycle(t)?),
        GridKind::Grid => (path(s)?, path(t)?),
    };
    x.cartesian_product(&y)
}
