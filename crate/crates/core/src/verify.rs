//! Exhaustive small-graph sweeps, sampled checks on larger families and the
//! minimum-degree probe.
//!
//! Graphs on `n` vertices are indexed by an adjacency mask: bit
//! `j(j-1)/2 + i` is the pair `i < j`, the same column-major order graph6
//! uses. Sweeps split the mask range into fixed chunks, run them in
//! parallel and merge in chunk order, so results do not depend on the
//! number of workers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand::Rng;
use rayon::prelude::*;

use crate::bounds::{bound_report, product_report, BoundValue, Side};
use crate::constructive::{
    grid_isolating, grid_lower_bound, grid_upper_bound, isolating_third, tree_k_isolating,
};
use crate::error::{Error, Result};
use crate::families::{
    grid_graph, is_maximal_outerplanar, line_graph, prufer_edges, random_polygon_triangulation,
    random_tree, seeded_rng, GridKind,
};
use crate::graph::Graph;
use crate::io::emit_graph6;
use crate::patterns::{check_certificate, is_claw_free, is_f_free, PatternFamily};
use crate::solvers::{domination_number, isolation_number};
use crate::vertex_set::VertexSet;

/// Largest order for exhaustive enumeration.
pub const ENUM_MAX: usize = 7;

/// Masks per parallel work unit.
const CHUNK: u64 = 1 << 12;

/// Violating graphs kept per check.
pub const MAX_LISTED: usize = 100;

pub fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut adj = vec![VertexSet::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Graph::from_adjacency(n, adj)
}

/// Adjacency mask of a graph on at most 11 vertices.
pub fn graph_mask(g: &Graph) -> u64 {
    let mut mask = 0u64;
    let mut k = 0;
    for j in 1..g.n() {
        for i in 0..j {
            if g.has_edge(i, j) {
                mask |= 1 << k;
            }
            k += 1;
        }
    }
    mask
}

fn permuted_mask(g: &Graph, pos: &[usize]) -> u64 {
    let mut mask = 0u64;
    for (u, v) in g.edges() {
        let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        mask |= 1 << (b * (b - 1) / 2 + a);
    }
    mask
}

/// Whether `g` is the canonical representative of its isomorphism class:
/// degrees are nondecreasing along the labels and no relabeling that keeps
/// them so gives a smaller mask. Degree classes are an isomorphism
/// invariant, so each class has exactly one canonical labeled graph.
pub fn is_canonical(g: &Graph) -> bool {
    let n = g.n();
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    if deg.windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    let mask = graph_mask(g);
    let mut pos = vec![0; n];
    let mut used = vec![false; n];
    fn place(
        g: &Graph,
        deg: &[usize],
        p: usize,
        pos: &mut [usize],
        used: &mut [bool],
        mask: u64,
    ) -> bool {
        let n = deg.len();
        if p == n {
            return permuted_mask(g, pos) >= mask;
        }
        // Position p may take any unused vertex of the degree found there.
        for v in 0..n {
            if !used[v] && deg[v] == deg[p] {
                used[v] = true;
                pos[v] = p;
                let ok = place(g, deg, p + 1, pos, used, mask);
                used[v] = false;
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    place(g, &deg, 0, &mut pos, &mut used, mask)
}

/// All labeled graphs on `n` vertices in mask order, optionally restricted
/// to connected graphs and to one representative per isomorphism class.
pub fn enumerate_graphs(
    n: usize,
    connected_only: bool,
    dedup: bool,
) -> Result<impl Iterator<Item = Graph>> {
    if n > ENUM_MAX {
        return Err(Error::Size(format!(
            "exhaustive enumeration supports n <= {ENUM_MAX}, got {n}; use sampling"
        )));
    }
    Ok((0..1u64 << pair_count(n))
        .map(move |mask| graph_from_mask(n, mask))
        .filter(move |g| !connected_only || g.is_connected())
        .filter(move |g| !dedup || is_canonical(g)))
}

/// One output row of a sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckRow {
    pub graphs_tested: u64,
    pub violations: u64,
    pub equality_count: u64,
    /// First violating graph in enumeration order.
    pub first_violation: Option<String>,
    /// First graph meeting the bound with equality.
    pub first_equality: Option<String>,
}

impl CheckRow {
    /// The violating example if there is one, otherwise the equality one.
    pub fn example(&self) -> &str {
        self.first_violation
            .as_deref()
            .or(self.first_equality.as_deref())
            .unwrap_or("-")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepResult {
    /// Rows keyed and sorted by check name.
    pub rows: BTreeMap<String, CheckRow>,
    /// Up to [`MAX_LISTED`] violating graphs (graph6) per check.
    pub violating: BTreeMap<String, Vec<String>>,
}

impl SweepResult {
    pub fn total_violations(&self) -> u64 {
        self.rows.values().map(|r| r.violations).sum()
    }

    pub fn row(&self, check: &str) -> Option<&CheckRow> {
        self.rows.get(check)
    }

    /// Violations over all rows whose name starts with `prefix`.
    pub fn violations_with_prefix(&self, prefix: &str) -> u64 {
        self.rows
            .iter()
            .filter(|(k, _)| k.starts_with(prefix))
            .map(|(_, r)| r.violations)
            .sum()
    }

    pub fn to_tsv(&self) -> String {
        let mut out =
            String::from("check\tgraphs_tested\tviolations\tequality_count\texample_g6\n");
        for (name, r) in &self.rows {
            out.push_str(&format!(
                "{name}\t{}\t{}\t{}\t{}\n",
                r.graphs_tested,
                r.violations,
                r.equality_count,
                r.example()
            ));
        }
        out
    }

    /// Appends `other`, which must come later in enumeration order.
    fn absorb(&mut self, other: SweepResult) {
        for (name, r) in other.rows {
            let row = self.rows.entry(name).or_default();
            row.graphs_tested += r.graphs_tested;
            row.violations += r.violations;
            row.equality_count += r.equality_count;
            if row.first_violation.is_none() {
                row.first_violation = r.first_violation;
            }
            if row.first_equality.is_none() {
                row.first_equality = r.first_equality;
            }
        }
        for (name, list) in other.violating {
            let kept = self.violating.entry(name).or_default();
            let room = MAX_LISTED.saturating_sub(kept.len());
            kept.extend(list.into_iter().take(room));
        }
    }

    fn record(&mut self, check: &str, g: &Graph, holds: bool, equal: bool) {
        let row = match self.rows.get_mut(check) {
            Some(r) => r,
            None => self.rows.entry(check.to_string()).or_default(),
        };
        row.graphs_tested += 1;
        if !holds {
            row.violations += 1;
            let id = g6(g);
            if row.first_violation.is_none() {
                row.first_violation = Some(id.clone());
            }
            let list = self.violating.entry(check.to_string()).or_default();
            if list.len() < MAX_LISTED {
                list.push(id);
            }
        } else if equal {
            row.equality_count += 1;
            if row.first_equality.is_none() {
                row.first_equality = Some(g6(g));
            }
        }
    }
}

fn g6(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| format!("n{}m{}", g.n(), g.m()))
}

/// Check groups of [`sweep_theorems`] with the largest order each runs on.
pub const CHECK_GROUPS: [(&str, usize); 7] = [
    ("la-dom-sum", 5),
    ("la-family", 6),
    ("la-dom-quot", 6),
    ("thm-dom", 5),
    ("thm-n3", 7),
    ("ng", 7),
    ("bounds-sandwich", 6),
];

/// Parses `all` or a comma-separated list of group names.
pub fn parse_checks(spec: &str) -> Result<Vec<&'static str>> {
    if spec == "all" {
        return Ok(CHECK_GROUPS.iter().map(|(c, _)| *c).collect());
    }
    spec.split(',')
        .map(|s| {
            let s = s.trim();
            CHECK_GROUPS
                .iter()
                .map(|(c, _)| *c)
                .find(|c| *c == s || (s.starts_with("ng-") && *c == "ng"))
                .ok_or_else(|| Error::Parameter(format!("unknown check {s:?}")))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub n_max: usize,
    pub checks: Vec<&'static str>,
    pub connected_only: bool,
    pub dedup: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl SweepOptions {
    pub fn all(n_max: usize) -> SweepOptions {
        SweepOptions {
            n_max,
            checks: CHECK_GROUPS.iter().map(|(c, _)| *c).collect(),
            connected_only: false,
            dedup: false,
            jobs: None,
        }
    }
}

/// Families used by the sweep, built once.
struct Fixtures {
    k2: PatternFamily,
    p3: PatternFamily,
    k3: PatternFamily,
    p3_k3: PatternFamily,
    quot_patterns: Vec<(Graph, usize)>,
    quot_families: Vec<(PatternFamily, Ratio<i64>)>,
}

fn small(edges: &[(usize, usize)], n: usize) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("fixture")
}

/// `max γ(T)/k` over labeled trees on `k` vertices.
fn tree_quotient(k: usize) -> Ratio<i64> {
    if k == 2 {
        return Ratio::new(1, 2);
    }
    let mut best = Ratio::new(0, 1);
    let mut code = vec![0; k - 2];
    loop {
        let t = Graph::from_edges(k, prufer_edges(k, &code)).expect("tree");
        best = best.max(Ratio::new(domination_number(&t) as i64, k as i64));
        let mut i = 0;
        while i < code.len() && code[i] == k - 1 {
            code[i] = 0;
            i += 1;
        }
        if i == code.len() {
            return best;
        }
        code[i] += 1;
    }
}

impl Fixtures {
    fn new() -> Fixtures {
        let k2 = small(&[(0, 1)], 2);
        let p3 = small(&[(0, 1), (1, 2)], 3);
        let k3 = small(&[(0, 1), (1, 2), (0, 2)], 3);
        let claw = small(&[(0, 1), (0, 2), (0, 3)], 4);
        let c4 = small(&[(0, 1), (1, 2), (2, 3), (0, 3)], 4);
        let ex = |gs: Vec<Graph>| PatternFamily::explicit_unnormalized(gs).expect("fixture");
        let quot_patterns = [k2.clone(), p3.clone(), k3.clone(), claw, c4]
            .into_iter()
            .map(|h| {
                let gamma = domination_number(&h);
                (h, gamma)
            })
            .collect();
        let quot_families = vec![
            (PatternFamily::Star(0), Ratio::new(1, 2)),
            (PatternFamily::Star(1), Ratio::new(1, 3)),
            (PatternFamily::Clique(3), Ratio::new(1, 3)),
            // sup over cycles of ⌈m/3⌉/m is attained by C_4.
            (PatternFamily::AllCycles, Ratio::new(1, 2)),
            (PatternFamily::AllTrees(3), tree_quotient(3)),
            (PatternFamily::AllTrees(4), tree_quotient(4)),
        ];
        Fixtures {
            k2: ex(vec![k2]),
            p3: ex(vec![p3.clone()]),
            k3: ex(vec![k3.clone()]),
            p3_k3: ex(vec![p3, k3]),
            quot_patterns,
            quot_families,
        }
    }
}

/// Lazily computed exact values for one graph.
struct Ctx<'a> {
    g: &'a Graph,
    iota: [Option<usize>; 2],
    gamma: Option<usize>,
    co_iota: Option<usize>,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph) -> Ctx<'a> {
        Ctx {
            g,
            iota: [None; 2],
            gamma: None,
            co_iota: None,
        }
    }

    fn iota(&mut self, k: usize) -> usize {
        let g = self.g;
        *self.iota[k].get_or_insert_with(|| isolation_number(g, &PatternFamily::Star(k)))
    }

    fn gamma(&mut self) -> usize {
        let g = self.g;
        *self.gamma.get_or_insert_with(|| domination_number(g))
    }

    fn co_iota(&mut self) -> usize {
        let g = self.g;
        *self
            .co_iota
            .get_or_insert_with(|| isolation_number(&g.complement(), &PatternFamily::Star(0)))
    }
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..1u64 << n).map(VertexSet::from_bits)
}

fn iota_within(g: &Graph, region: &VertexSet, family: &PatternFamily) -> usize {
    isolation_number(&g.induced_subgraph(region).0, family)
}

fn gamma_within(g: &Graph, region: &VertexSet) -> usize {
    if region.is_empty() {
        0
    } else {
        domination_number(&g.induced_subgraph(region).0)
    }
}

fn check_graph(g: &Graph, groups: &[&str], fx: &Fixtures, out: &mut SweepResult) {
    let n = g.n();
    let mut cx = Ctx::new(g);
    let cap = |name: &str| {
        CHECK_GROUPS
            .iter()
            .find(|(c, _)| *c == name)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    };
    for &group in groups {
        if n > cap(group) {
            continue;
        }
        match group {
            "la-dom-sum" => {
                for (k, fam) in [(0, PatternFamily::Star(0)), (1, PatternFamily::Star(1))] {
                    let iota = cx.iota(k);
                    let gamma = cx.gamma();
                    out.record(
                        &format!("la-dom-sum(i):k{k}"),
                        g,
                        iota <= gamma,
                        iota == gamma,
                    );
                    let all = g.vertices();
                    let split = subsets(n)
                        .map(|a| iota_within(g, &a, &fam) + gamma_within(g, &(all - a)))
                        .min()
                        .expect("nonempty range");
                    out.record(&format!("la-dom-sum(ii):k{k}"), g, split == iota, true);
                    let free = subsets(n)
                        .filter(|a| is_f_free(g, a, &fam))
                        .map(|a| gamma_within(g, &(all - a)))
                        .min()
                        .expect("the empty set is F-free");
                    out.record(&format!("la-dom-sum(iii):k{k}"), g, free == iota, true);
                }
            }
            "la-family" => {
                let i_k2 = cx.iota(0);
                let i_p3 = isolation_number(g, &fx.p3);
                let i_k3 = isolation_number(g, &fx.k3);
                let i_both = isolation_number(g, &fx.p3_k3);
                debug_assert_eq!(i_k2, isolation_number(g, &fx.k2));
                out.record("la-family(i)", g, i_k3 <= i_both, i_k3 == i_both);
                out.record("la-family(ii)", g, i_both == i_p3, true);
                out.record("la-family(iii):P3<=K2", g, i_p3 <= i_k2, i_p3 == i_k2);
                out.record("la-family(iii):K3<=P3", g, i_k3 <= i_p3, i_k3 == i_p3);
            }
            "la-dom-quot" => {
                for (i, (h, gamma_h)) in fx.quot_patterns.iter().enumerate() {
                    let fam = PatternFamily::Explicit(vec![h.clone()]);
                    let iota = isolation_number(g, &fam);
                    let bound = gamma_h * (n / h.n());
                    out.record(
                        &format!("la-dom-quot(i):H{i}"),
                        g,
                        iota <= bound,
                        iota == bound,
                    );
                }
                for (fam, q) in &fx.quot_families {
                    let iota = Ratio::from_integer(isolation_number(g, fam) as i64);
                    let bound = *q * Ratio::from_integer(n as i64);
                    out.record(
                        &format!("la-dom-quot(ii):{fam}"),
                        g,
                        iota <= bound,
                        iota == bound,
                    );
                }
            }
            "thm-dom" => {
                let gamma = cx.gamma();
                for r in [2usize, 3] {
                    let fam = PatternFamily::Star(r - 2);
                    let kr =
                        Graph::from_edges(r, (0..r).flat_map(|a| (a + 1..r).map(move |b| (a, b))))
                            .expect("K_r");
                    let h = g.cartesian_product(&kr).expect("small product");
                    let iota_h = isolation_number(&h, &fam);
                    let rep = product_report(g, &fam).expect("valid family");
                    out.record(
                        &format!("thm-dom(i):r{r}:lower"),
                        g,
                        gamma <= iota_h,
                        gamma == iota_h,
                    );
                    out.record(
                        &format!("thm-dom(i):r{r}:upper"),
                        g,
                        iota_h <= rep.upper,
                        iota_h == rep.upper,
                    );
                    out.record(
                        &format!("thm-dom(i):r{r}:chain"),
                        g,
                        rep.upper <= rep.upper_simple,
                        rep.upper == rep.upper_simple,
                    );
                }
                let b = g.bipartite_double().expect("small double");
                let iota_b = isolation_number(&b, &PatternFamily::Star(0));
                let gamma_b = domination_number(&b);
                out.record("thm-dom(ii):lower", g, gamma <= iota_b, gamma == iota_b);
                out.record(
                    "thm-dom(ii):middle",
                    g,
                    iota_b <= gamma_b,
                    iota_b == gamma_b,
                );
                out.record(
                    "thm-dom(ii):upper",
                    g,
                    gamma_b <= 2 * gamma,
                    gamma_b == 2 * gamma,
                );
            }
            "thm-n3" => {
                if n >= 3 && g.is_connected() && !g.is_cycle_of_length(5) {
                    let iota = cx.iota(0);
                    out.record("thm-n3:exact", g, iota <= n / 3, iota == n / 3);
                    let cert = isolating_third(g).expect("preconditions hold");
                    let ok = check_certificate(g, &cert) && cert.size() <= n / 3;
                    out.record("thm-n3:construct", g, ok, cert.size() == n / 3);
                }
            }
            "ng" => {
                let iota = cx.iota(0);
                let co = cx.co_iota();
                let sum = iota + co;
                let delta = g.min_degree();
                if n >= 2 {
                    out.record("ng-sum", g, sum >= 1, sum == 1);
                }
                if co >= 3 {
                    out.record("ng-iota3", g, sum <= delta + 1, sum == delta + 1);
                }
                match delta {
                    0 => out.record("ng-delta0", g, sum <= n.div_ceil(2), sum == n.div_ceil(2)),
                    1 => out.record("ng-delta1", g, sum <= n / 2 + 1, sum == n / 2 + 1),
                    2 => out.record("ng-delta2", g, 5 * sum <= 2 * n + 10, 5 * sum == 2 * n + 10),
                    3 => out.record("ng-delta3", g, 3 * sum <= n + 6, 3 * sum == n + 6),
                    d => {
                        let d = d as f64;
                        let f = ((d + 1.0).ln() + 0.5) / (d + 1.0);
                        if n as f64 >= (d - 1.0) * (d + 1.0) / ((d + 1.0).ln() + 0.5) {
                            let bound = f * n as f64 + 2.0;
                            let s = sum as f64;
                            out.record(
                                "ng-delta-ln",
                                g,
                                s <= bound + 1e-9,
                                (s - bound).abs() <= 1e-9,
                            );
                        }
                    }
                }
            }
            "bounds-sandwich" => {
                for k in 0..2 {
                    let exact = cx.iota(k);
                    let rep = bound_report(g, k, true);
                    let mut all_hold = true;
                    let mut tight = false;
                    for e in rep.entries.iter().filter(|e| e.applicable()) {
                        let holds = e.holds_for(exact);
                        let eq = e.value.is_some_and(|v: BoundValue| v.equals_int(exact));
                        all_hold &= holds;
                        tight |= eq;
                        let side = match e.side {
                            Side::Lower => "lower",
                            Side::Upper => "upper",
                        };
                        out.record(
                            &format!("bounds-sandwich:k{k}:{}:{side}", e.name),
                            g,
                            holds,
                            eq,
                        );
                    }
                    out.record(&format!("bounds-sandwich:k{k}"), g, all_hold, tight);
                }
            }
            other => unreachable!("unknown check group {other}"),
        }
    }
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Mask chunks `(n, lo, hi)` for orders `1..=n_max`, in enumeration order.
fn chunks(n_min: usize, n_max: usize) -> Vec<(usize, u64, u64)> {
    let mut out = Vec::new();
    for n in n_min..=n_max {
        let total = 1u64 << pair_count(n);
        let mut lo = 0;
        while lo < total {
            let hi = (lo + CHUNK).min(total);
            out.push((n, lo, hi));
            lo = hi;
        }
    }
    out
}

fn keep(g: &Graph, connected_only: bool, dedup: bool) -> bool {
    (!connected_only || g.is_connected()) && (!dedup || is_canonical(g))
}

/// Runs the selected checks over every labeled graph on `1..=n_max`
/// vertices. Violations are collected, never raised.
pub fn sweep_theorems(opts: &SweepOptions) -> Result<SweepResult> {
    if opts.n_max > ENUM_MAX {
        return Err(Error::Size(format!(
            "sweeps support n <= {ENUM_MAX}, got {}",
            opts.n_max
        )));
    }
    let fx = Fixtures::new();
    let groups = &opts.checks;
    let top = groups
        .iter()
        .filter_map(|g| CHECK_GROUPS.iter().find(|(c, _)| c == g).map(|(_, m)| *m))
        .max()
        .unwrap_or(0)
        .min(opts.n_max);
    let parts: Vec<SweepResult> = in_pool(opts.jobs, || {
        chunks(1, top)
            .into_par_iter()
            .map(|(n, lo, hi)| {
                let mut out = SweepResult::default();
                for mask in lo..hi {
                    let g = graph_from_mask(n, mask);
                    if keep(&g, opts.connected_only, opts.dedup) {
                        check_graph(&g, groups, &fx, &mut out);
                    }
                }
                out
            })
            .collect()
    })?;
    let mut result = SweepResult::default();
    for p in parts {
        result.absorb(p);
    }
    Ok(result)
}

/// Generators for [`sample_verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampleFamily {
    /// Random trees on `1..=n_max` vertices against the `n/(k+3)` bound;
    /// exact values are computed up to 16 vertices.
    Trees { n_max: usize, k: usize },
    /// Random maximal outerplanar graphs on `n >= 4` vertices against `n/4`.
    Triangulations { n: usize },
    /// Every torus, cylinder and grid with sides in `3..=max_side`.
    Grids { max_side: usize },
    /// Line graphs of random graphs on `n` vertices against the claw-free
    /// lower bounds.
    LineGraphs { n: usize },
}

impl FromStr for SampleFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<SampleFamily> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .ok_or_else(|| {
                    Error::Parameter(format!("sample family {s:?} is missing a parameter"))
                })?
                .parse()
                .map_err(|_| Error::Parameter(format!("bad parameter in {s:?}")))
        };
        match parts[0] {
            "trees" => Ok(SampleFamily::Trees {
                n_max: num(1)?,
                k: num(2)?,
            }),
            "triangulations" => Ok(SampleFamily::Triangulations { n: num(1)? }),
            "grids" => Ok(SampleFamily::Grids { max_side: num(1)? }),
            "line" => Ok(SampleFamily::LineGraphs { n: num(1)? }),
            _ => Err(Error::Parameter(format!("unknown sample family {s:?}"))),
        }
    }
}

impl fmt::Display for SampleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SampleFamily::Trees { n_max, k } => write!(f, "trees:{n_max}:{k}"),
            SampleFamily::Triangulations { n } => write!(f, "triangulations:{n}"),
            SampleFamily::Grids { max_side } => write!(f, "grids:{max_side}"),
            SampleFamily::LineGraphs { n } => write!(f, "line:{n}"),
        }
    }
}

/// Largest tree order for which sampled trees get an exact `ι_k`.
pub const TREE_EXACT_MAX: usize = 16;

fn sample_trial(family: &SampleFamily, seed: u64, out: &mut SweepResult) -> Result<()> {
    let mut rng = seeded_rng(seed);
    match *family {
        SampleFamily::Trees { n_max, k } => {
            let n = rng.random_range(1..=n_max);
            let t = random_tree(n, rng.random())?;
            let star = n == k + 2 && t.max_degree() == k + 1;
            if star {
                return Ok(());
            }
            let bound = n / (k + 3);
            let cert = tree_k_isolating(&t, k)?;
            out.record(
                "tree-k:construct",
                &t,
                check_certificate(&t, &cert),
                cert.size() == bound,
            );
            if n <= TREE_EXACT_MAX {
                let exact = isolation_number(&t, &PatternFamily::Star(k));
                out.record("tree-k:exact", &t, exact <= bound, exact == bound);
            }
        }
        SampleFamily::Triangulations { n } => {
            let g = random_polygon_triangulation(n, rng.random())?;
            let exact = isolation_number(&g, &PatternFamily::Star(0));
            let ok = is_maximal_outerplanar(&g) && 4 * exact <= n;
            out.record("outerplanar-n4", &g, ok, 4 * exact == n);
        }
        SampleFamily::LineGraphs { n } => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random::<bool>() {
                        edges.push((u, v));
                    }
                }
            }
            let base = Graph::from_edges(n, edges)?;
            let l = line_graph(&base)?;
            if l.n() == 0 {
                return Ok(());
            }
            out.record("line-claw-free", &l, is_claw_free(&l), true);
            let exact = isolation_number(&l, &PatternFamily::Star(0));
            let rep = bound_report(&l, 0, false);
            for name in ["L4", "L5"] {
                if let Some(e) = rep.entry(name).filter(|e| e.applicable()) {
                    let eq = e.value.is_some_and(|v| v.equals_int(exact));
                    out.record(&format!("claw-free-{name}"), &l, e.holds_for(exact), eq);
                }
            }
        }
        SampleFamily::Grids { .. } => unreachable!("grids are enumerated, not sampled"),
    }
    Ok(())
}

fn grid_sweep(max_side: usize, out: &mut SweepResult) -> Result<()> {
    let cases: Vec<(GridKind, usize, usize)> =
        [GridKind::Torus, GridKind::Cylinder, GridKind::Grid]
            .into_iter()
            .flat_map(|kind| {
                (3..=max_side).flat_map(move |s| (3..=max_side).map(move |t| (kind, s, t)))
            })
            .collect();
    let results: Vec<Result<SweepResult>> = cases
        .into_par_iter()
        .map(|(kind, s, t)| {
            let mut part = SweepResult::default();
            let g = grid_graph(kind, s, t)?;
            let exact = Ratio::from_integer(isolation_number(&g, &PatternFamily::Star(0)) as i64);
            let lower = grid_lower_bound(kind, s, t);
            let upper = grid_upper_bound(kind, s, t);
            part.record(
                &format!("grid-lower:{kind}"),
                &g,
                lower <= exact,
                lower == exact,
            );
            part.record(
                &format!("grid-upper:{kind}"),
                &g,
                exact <= upper,
                exact == upper,
            );
            let cert = grid_isolating(kind, s, t)?;
            let valid = is_f_free(&g, &g.remainder(&cert.set), &cert.family);
            part.record(&format!("grid-cert-valid:{kind}"), &g, valid, true);
            let size = Ratio::from_integer(cert.size() as i64);
            part.record(
                &format!("grid-cert-bound:{kind}"),
                &g,
                size <= upper,
                size == exact,
            );
            Ok(part)
        })
        .collect();
    for r in results {
        out.absorb(r?);
    }
    Ok(())
}

/// Runs `trials` seeded trials (trial `i` uses seed `seed + i`) of the
/// sampled family. Grids ignore `trials` and `seed` and cover every size.
pub fn sample_verify(family: &SampleFamily, trials: usize, seed: u64) -> Result<SweepResult> {
    let mut result = SweepResult::default();
    match *family {
        SampleFamily::Grids { max_side } => grid_sweep(max_side, &mut result)?,
        SampleFamily::Trees { n_max: 0, .. } => {
            return Err(Error::Parameter("trees need n_max >= 1".into()));
        }
        SampleFamily::Triangulations { n } if n < 4 => {
            return Err(Error::Parameter("triangulations need n >= 4".into()));
        }
        _ => {
            let parts: Vec<Result<SweepResult>> = (0..trials as u64)
                .into_par_iter()
                .map(|i| {
                    let mut part = SweepResult::default();
                    sample_trial(family, seed.wrapping_add(i), &mut part)?;
                    Ok(part)
                })
                .collect();
            for p in parts {
                result.absorb(p?);
            }
        }
    }
    Ok(result)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeRow {
    pub n: usize,
    /// Labeled graphs with the requested minimum degree.
    pub graphs: u64,
    pub max_ratio: Option<Ratio<i64>>,
    /// First graph attaining `max_ratio`.
    pub example_g6: Option<String>,
}

impl fmt::Display for ProbeRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ratio = self
            .max_ratio
            .map(|r| format!("{}/{}", r.numer(), r.denom()));
        write!(
            f,
            "{}\t{}\t{}\t{}",
            self.n,
            self.graphs,
            ratio.as_deref().unwrap_or("-"),
            self.example_g6.as_deref().unwrap_or("-")
        )
    }
}

/// Order, graphs seen and best ratio with its graph for one mask chunk.
type ProbeChunk = (usize, u64, Option<(Ratio<i64>, String)>);

/// Largest `ι/n` among labeled graphs of minimum degree exactly `delta`,
/// per order up to `n_max`. Data only.
pub fn open_problem_probe(delta: usize, n_max: usize) -> Result<Vec<ProbeRow>> {
    if n_max > ENUM_MAX {
        return Err(Error::Size(format!(
            "probe supports n <= {ENUM_MAX}, got {n_max}"
        )));
    }
    let parts: Vec<ProbeChunk> = chunks(delta + 1, n_max)
        .into_par_iter()
        .map(|(n, lo, hi)| {
            let mut count = 0;
            let mut best: Option<(Ratio<i64>, String)> = None;
            for mask in lo..hi {
                if (mask.count_ones() as usize) * 2 < delta * n {
                    continue;
                }
                let g = graph_from_mask(n, mask);
                if g.min_degree() != delta {
                    continue;
                }
                count += 1;
                let r = Ratio::new(
                    isolation_number(&g, &PatternFamily::Star(0)) as i64,
                    n as i64,
                );
                if best.as_ref().is_none_or(|(b, _)| r > *b) {
                    best = Some((r, g6(&g)));
                }
            }
            (n, count, best)
        })
        .collect();
    let mut rows: Vec<ProbeRow> = Vec::new();
    for (n, count, best) in parts {
        if rows.last().is_none_or(|r| r.n != n) {
            rows.push(ProbeRow {
                n,
                graphs: 0,
                max_ratio: None,
                example_g6: None,
            });
        }
        let row = rows.last_mut().expect("just pushed");
        row.graphs += count;
        if let Some((r, id)) = best {
            if row.max_ratio.is_none_or(|b| r > b) {
                row.max_ratio = Some(r);
                row.example_g6 = Some(id);
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, kr_minus_hamiltonian, petersen};

    #[test]
    fn mask_round_trip() {
        let p = cycle(6).unwrap();
        assert_eq!(graph_from_mask(6, graph_mask(&p)), p);
        assert_eq!(graph_from_mask(4, 0b111111).m(), 6);
        assert!(enumerate_graphs(8, false, false).is_err());
    }

    #[test]
    fn classical_counts() {
        let count = |n, c, d| enumerate_graphs(n, c, d).unwrap().count();
        assert_eq!(count(3, false, false), 8);
        let iso: Vec<usize> = (1..=6).map(|n| count(n, false, true)).collect();
        assert_eq!(iso, vec![1, 2, 4, 11, 34, 156]);
        assert_eq!(count(5, true, true), 21);
    }

    #[test]
    fn canonical_is_invariant() {
        assert!(!is_canonical(&petersen()) || is_canonical(&petersen()));
        let g = graph_from_mask(5, 0b1010010110);
        let reps = enumerate_graphs(5, false, false)
            .unwrap()
            .filter(|h| {
                is_canonical(h)
                    && crate::patterns::contains_subgraph(h, &h.vertices(), &g)
                    && h.m() == g.m()
            })
            .count();
        assert_eq!(reps, 1);
    }

    #[test]
    fn sweep_n4_clean_and_deterministic() {
        let mut opts = SweepOptions::all(4);
        let a = sweep_theorems(&opts).unwrap();
        assert_eq!(a.total_violations(), 0, "{}", a.to_tsv());
        opts.jobs = Some(1);
        let b = sweep_theorems(&opts).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.row("thm-n3:exact").unwrap().first_equality.as_deref(),
            Some("Bo")
        );
    }

    #[test]
    fn checks_parse() {
        assert_eq!(parse_checks("thm-n3").unwrap(), vec!["thm-n3"]);
        assert_eq!(
            parse_checks("ng-delta0,thm-dom").unwrap(),
            vec!["ng", "thm-dom"]
        );
        assert_eq!(parse_checks("all").unwrap().len(), CHECK_GROUPS.len());
        assert!(parse_checks("nope").is_err());
    }

    #[test]
    fn samples() {
        let r = sample_verify(&SampleFamily::Trees { n_max: 14, k: 1 }, 100, 3).unwrap();
        assert_eq!(r.total_violations(), 0);
        assert!(r.row("tree-k:exact").unwrap().graphs_tested > 50);
        let r = sample_verify(&SampleFamily::Triangulations { n: 9 }, 20, 1).unwrap();
        assert_eq!(r.total_violations(), 0);
        let r = sample_verify(&SampleFamily::LineGraphs { n: 5 }, 20, 1).unwrap();
        assert_eq!(r.violations_with_prefix("line-claw-free"), 0);
        assert_eq!(
            "trees:30:1".parse::<SampleFamily>().unwrap(),
            SampleFamily::Trees { n_max: 30, k: 1 }
        );
    }

    #[test]
    fn probe_small() {
        let rows = open_problem_probe(3, 5).unwrap();
        assert_eq!(rows[0].n, 4);
        assert_eq!(rows[0].graphs, 1);
        assert_eq!(rows[0].max_ratio, Some(Ratio::new(1, 4)));
        let h = kr_minus_hamiltonian(7).unwrap();
        assert_eq!(isolation_number(&h, &PatternFamily::Star(0)), 2);
    }
}
