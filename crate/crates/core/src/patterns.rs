//! Forbidden pattern families and F-free predicates over vertex regions.
//!
//! Containment is always as a subgraph, not necessarily induced. The only
//! induced notion here is [`is_claw_free`].

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A family `F` of forbidden graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PatternFamily {
    /// `{K_{1,k+1}}`: remainders of maximum degree at most `k`.
    Star(usize),
    /// `{K_k}`, `k >= 1`.
    Clique(usize),
    /// All cycles: remainders must be forests.
    AllCycles,
    /// All trees on `k >= 2` vertices: remainder components have fewer than
    /// `k` vertices.
    AllTrees(usize),
    /// An explicit list of patterns. Build it with [`PatternFamily::explicit`]
    /// to get the normalized form.
    Explicit(Vec<Graph>),
}

impl PatternFamily {
    /// The isolation number's family `{K_2}`.
    pub const ISOLATION: PatternFamily = PatternFamily::Star(0);

    /// Explicit family with every pattern that contains another member
    /// removed. Isomorphic duplicates keep their first occurrence.
    pub fn explicit(patterns: Vec<Graph>) -> Result<PatternFamily> {
        PatternFamily::check_patterns(&patterns)?;
        let keep: Vec<bool> = (0..patterns.len())
            .map(|i| {
                !(0..patterns.len()).any(|j| {
                    j != i
                        && contains_graph(&patterns[i], &patterns[j])
                        && (j < i || !contains_graph(&patterns[j], &patterns[i]))
                })
            })
            .collect();
        let kept = patterns
            .into_iter()
            .zip(keep)
            .filter_map(|(p, k)| k.then_some(p))
            .collect();
        Ok(PatternFamily::Explicit(kept))
    }

    /// Explicit family taken verbatim, for comparing against the normalized
    /// form.
    pub fn explicit_unnormalized(patterns: Vec<Graph>) -> Result<PatternFamily> {
        PatternFamily::check_patterns(&patterns)?;
        Ok(PatternFamily::Explicit(patterns))
    }

    fn check_patterns(patterns: &[Graph]) -> Result<()> {
        if patterns.is_empty() {
            return Err(Error::Parameter("explicit family must be nonempty".into()));
        }
        if patterns.iter().any(|p| p.n() == 0) {
            return Err(Error::Parameter("patterns need at least one vertex".into()));
        }
        Ok(())
    }

    /// `F = {K_1}`: isolation degenerates to domination.
    pub fn domination() -> PatternFamily {
        PatternFamily::Explicit(vec![Graph::empty(1).expect("K_1")])
    }

    /// True for families whose isolating sets are exactly dominating sets.
    pub fn is_degenerate(&self) -> bool {
        match self {
            PatternFamily::Clique(1) => true,
            PatternFamily::Explicit(ps) => ps.iter().any(|p| p.n() == 1),
            _ => false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            PatternFamily::Clique(0) => Err(Error::Parameter("clique order must be >= 1".into())),
            PatternFamily::AllTrees(k) if *k < 2 => {
                Err(Error::Parameter("tree order must be >= 2".into()))
            }
            PatternFamily::Explicit(ps) => PatternFamily::check_patterns(ps),
            _ => Ok(()),
        }
    }

    /// Parses the built-in names `star:k`, `clique:k`, `cycles`, `trees:k`.
    pub fn parse_builtin(s: &str) -> Result<PatternFamily> {
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let num = |arg: Option<&str>| -> Result<usize> {
            let a = arg.ok_or_else(|| Error::Parameter(format!("family {name:?} needs :k")))?;
            a.parse()
                .map_err(|_| Error::Parameter(format!("bad family parameter {a:?}")))
        };
        let fam = match name {
            "star" => PatternFamily::Star(num(arg)?),
            "clique" => PatternFamily::Clique(num(arg)?),
            "trees" => PatternFamily::AllTrees(num(arg)?),
            "cycles" if arg.is_none() => PatternFamily::AllCycles,
            _ => return Err(Error::Parameter(format!("unknown family {s:?}"))),
        };
        fam.validate()?;
        Ok(fam)
    }

    /// Smallest order of a member.
    pub fn min_order(&self) -> usize {
        match self {
            PatternFamily::Star(k) => k + 2,
            PatternFamily::Clique(k) => *k,
            PatternFamily::AllCycles => 3,
            PatternFamily::AllTrees(k) => *k,
            PatternFamily::Explicit(ps) => ps.iter().map(Graph::n).min().unwrap_or(0),
        }
    }
}

impl fmt::Display for PatternFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternFamily::Star(k) => write!(f, "star:{k}"),
            PatternFamily::Clique(k) => write!(f, "clique:{k}"),
            PatternFamily::AllCycles => write!(f, "cycles"),
            PatternFamily::AllTrees(k) => write!(f, "trees:{k}"),
            PatternFamily::Explicit(ps) => {
                write!(f, "explicit[")?;
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "n={} m={}", p.n(), p.m())?;
                }
                write!(f, "]")
            }
        }
    }
}

/// True iff `g[region]` contains no member of `family` as a subgraph.
pub fn is_f_free(g: &Graph, region: &VertexSet, family: &PatternFamily) -> bool {
    match family {
        PatternFamily::Star(k) => region.iter().all(|v| g.degree_in(v, region) <= *k),
        PatternFamily::Clique(k) => find_clique(g, region, *k).is_none(),
        PatternFamily::AllCycles => g.is_forest_within(region),
        PatternFamily::AllTrees(k) => g.components_within(region).iter().all(|c| c.len() < *k),
        PatternFamily::Explicit(ps) => ps.iter().all(|p| !contains_subgraph(g, region, p)),
    }
}

/// Vertex set of some occurrence of a member of `family` inside
/// `g[region]`, or `None` if the region is F-free. Occurrences are kept
/// small where that is cheap, since the exact solver branches on them.
pub fn find_violation(g: &Graph, region: &VertexSet, family: &PatternFamily) -> Option<VertexSet> {
    match family {
        PatternFamily::Star(k) => {
            let v = region.iter().find(|&v| g.degree_in(v, region) > *k)?;
            let mut occ: VertexSet = (g.neighbors(v) & *region).iter().take(k + 1).collect();
            occ.insert(v);
            Some(occ)
        }
        PatternFamily::Clique(k) => find_clique(g, region, *k),
        PatternFamily::AllCycles => shortest_cycle(g, region),
        PatternFamily::AllTrees(k) => {
            let comp = g
                .components_within(region)
                .into_iter()
                .find(|c| c.len() >= *k)?;
            let root = comp.first().expect("nonempty component");
            let tree = g
                .bfs_tree_within(&comp, root)
                .expect("component is connected");
            Some(tree.order.iter().take(*k).copied().collect())
        }
        PatternFamily::Explicit(ps) => ps
            .iter()
            .filter_map(|p| find_embedding(g, region, p))
            .map(|m| m.into_iter().collect::<VertexSet>())
            .min_by_key(|s| s.len()),
    }
}

/// A `k`-clique in `g[region]`, choosing the lexicographically first one
/// found by extending from small vertices.
pub fn find_clique(g: &Graph, region: &VertexSet, k: usize) -> Option<VertexSet> {
    fn extend(g: &Graph, cand: VertexSet, chosen: VertexSet, need: usize) -> Option<VertexSet> {
        if need == 0 {
            return Some(chosen);
        }
        if cand.len() < need {
            return None;
        }
        for v in cand.iter() {
            let mut c = chosen;
            c.insert(v);
            let next = cand & (g.neighbors(v) - VertexSet::full(v + 1));
            if let Some(found) = extend(g, next, c, need - 1) {
                return Some(found);
            }
        }
        None
    }
    extend(g, *region, VertexSet::new(), k)
}

/// Shortest cycle of `g[region]`, or `None` for a forest.
fn shortest_cycle(g: &Graph, region: &VertexSet) -> Option<VertexSet> {
    if g.is_forest_within(region) {
        return None;
    }
    // Peel vertices of degree at most one; every cycle survives.
    let mut core = *region;
    loop {
        let peel: VertexSet = core
            .iter()
            .filter(|&v| g.degree_in(v, &core) <= 1)
            .collect();
        if peel.is_empty() {
            break;
        }
        core -= peel;
    }
    let mut best: Option<VertexSet> = None;
    for u in core.iter() {
        for v in (g.neighbors(u) & core).iter().filter(|&v| v > u) {
            // Shortest u-v path avoiding the edge uv.
            let mut parent = vec![usize::MAX; g.n()];
            let mut seen = VertexSet::singleton(u);
            let mut queue = std::collections::VecDeque::from([u]);
            let mut found = false;
            while let Some(x) = queue.pop_front() {
                for y in (g.neighbors(x) & core).iter() {
                    if seen.contains(y) || (x == u && y == v) {
                        continue;
                    }
                    seen.insert(y);
                    parent[y] = x;
                    if y == v {
                        found = true;
                        break;
                    }
                    queue.push_back(y);
                }
                if found {
                    break;
                }
            }
            if found {
                let mut cyc = VertexSet::singleton(v);
                let mut x = v;
                while x != u {
                    x = parent[x];
                    cyc.insert(x);
                }
                if best.is_none_or(|b| cyc.len() < b.len()) {
                    best = Some(cyc);
                }
            }
        }
    }
    best
}

/// True iff `pattern` embeds into `host[region]` as a subgraph.
pub fn contains_subgraph(host: &Graph, region: &VertexSet, pattern: &Graph) -> bool {
    find_embedding(host, region, pattern).is_some()
}

fn contains_graph(host: &Graph, pattern: &Graph) -> bool {
    pattern.n() <= host.n() && contains_subgraph(host, &host.vertices(), pattern)
}

/// An injective map from pattern vertices into `region` sending pattern
/// edges to host edges. `result[p]` is the image of pattern vertex `p`.
pub fn find_embedding(host: &Graph, region: &VertexSet, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > region.len() || pattern.m() > host.edges_within(region) {
        return None;
    }
    let order = matching_order(pattern);
    // Host vertices able to take each pattern vertex by degree alone.
    let deg_ok: Vec<VertexSet> = (0..k)
        .map(|p| {
            region
                .iter()
                .filter(|&h| host.degree_in(h, region) >= pattern.degree(p))
                .collect()
        })
        .collect();
    if deg_ok.iter().any(|s| s.is_empty()) {
        return None;
    }
    let mut image = vec![usize::MAX; k];
    let mut used = VertexSet::new();
    if extend_embedding(host, pattern, &order, &deg_ok, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

/// Pattern vertices ordered so each one has as many earlier neighbors as
/// possible, starting from a maximum-degree vertex.
fn matching_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.n();
    let mut order = Vec::with_capacity(k);
    let mut placed = VertexSet::new();
    while order.len() < k {
        let next = (0..k)
            .filter(|&p| !placed.contains(p))
            .max_by_key(|&p| {
                (
                    (pattern.neighbors(p) & placed).len(),
                    pattern.degree(p),
                    std::cmp::Reverse(p),
                )
            })
            .expect("vertices remain");
        placed.insert(next);
        order.push(next);
    }
    order
}

fn extend_embedding(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    deg_ok: &[VertexSet],
    depth: usize,
    image: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cand = deg_ok[p] - *used;
    for q in pattern.neighbors(p).iter() {
        if image[q] != usize::MAX {
            cand &= host.neighbors(image[q]);
        }
    }
    for h in cand.iter() {
        image[p] = h;
        used.insert(h);
        if extend_embedding(host, pattern, order, deg_ok, depth + 1, image, used) {
            return true;
        }
        used.remove(h);
        image[p] = usize::MAX;
    }
    false
}

/// True iff no vertex has three pairwise non-adjacent neighbors (no induced
/// `K_{1,3}`).
pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        let nb = g.neighbors(v).to_vec();
        for (a, &x) in nb.iter().enumerate() {
            for (b, &y) in nb.iter().enumerate().skip(a + 1) {
                if g.has_edge(x, y) {
                    continue;
                }
                if nb[b + 1..]
                    .iter()
                    .any(|&z| !g.has_edge(x, z) && !g.has_edge(y, z))
                {
                    return false;
                }
            }
        }
        true
    })
}

/// An isolating or dominating set together with how it was produced and
/// the size it promises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub set: VertexSet,
    pub family: PatternFamily,
    pub producer: String,
    pub promised_bound: Option<Ratio<i64>>,
}

impl Certificate {
    pub fn new(set: VertexSet, family: PatternFamily, producer: impl Into<String>) -> Self {
        Certificate {
            set,
            family,
            producer: producer.into(),
            promised_bound: None,
        }
    }

    pub fn with_bound(mut self, bound: Ratio<i64>) -> Self {
        self.promised_bound = Some(bound);
        self
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }
}

/// Validity of the set plus, when a bound is promised, `|set| <= bound`.
pub fn check_certificate(g: &Graph, cert: &Certificate) -> bool {
    cert.set.is_subset(&g.vertices())
        && is_f_free(g, &g.remainder(&cert.set), &cert.family)
        && cert
            .promised_bound
            .is_none_or(|b| Ratio::from_integer(cert.set.len() as i64) <= b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, path, petersen, star};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn f_free_examples() {
        let c5 = cycle(5).unwrap();
        let star0 = PatternFamily::Star(0);
        assert!(!is_f_free(&c5, &c5.vertices(), &star0));
        assert!(!is_f_free(&c5, &set(&[2, 3]), &star0));
        assert!(is_f_free(&c5, &set(&[2, 4]), &star0));
        let k4 = complete(4).unwrap();
        assert!(!is_f_free(&k4, &k4.vertices(), &PatternFamily::Clique(4)));
        assert!(is_f_free(&k4, &k4.vertices(), &PatternFamily::Clique(5)));
        let c6 = cycle(6).unwrap();
        assert!(!is_f_free(&c6, &c6.vertices(), &PatternFamily::AllCycles));
        assert!(is_f_free(
            &c6,
            &set(&[0, 1, 2, 3, 4]),
            &PatternFamily::AllCycles
        ));
    }

    #[test]
    fn subgraph_examples() {
        let c5 = cycle(5).unwrap();
        assert!(contains_subgraph(&c5, &c5.vertices(), &path(3).unwrap()));
        assert!(!contains_subgraph(
            &c5,
            &c5.vertices(),
            &complete(3).unwrap()
        ));
        let p = petersen();
        assert!(contains_subgraph(&p, &p.vertices(), &star(3).unwrap()));
        assert!(!contains_subgraph(&p, &p.vertices(), &cycle(4).unwrap()));
        assert!(contains_subgraph(&p, &p.vertices(), &cycle(5).unwrap()));
    }

    #[test]
    fn claw_free_examples() {
        assert!(is_claw_free(&cycle(5).unwrap()));
        assert!(!is_claw_free(&star(3).unwrap()));
        assert!(!is_claw_free(&petersen()));
        assert!(is_claw_free(&complete(6).unwrap()));
    }

    #[test]
    fn certificate_examples() {
        let c5 = cycle(5).unwrap();
        let fam = PatternFamily::Star(0);
        assert!(check_certificate(
            &c5,
            &Certificate::new(set(&[0, 2]), fam.clone(), "t")
        ));
        assert!(!check_certificate(
            &c5,
            &Certificate::new(set(&[0]), fam.clone(), "t")
        ));
        let k5 = complete(5).unwrap();
        assert!(check_certificate(
            &k5,
            &Certificate::new(set(&[3]), fam.clone(), "t")
        ));
        let tight = Certificate::new(set(&[0, 2]), fam, "t").with_bound(Ratio::new(3, 2));
        assert!(!check_certificate(&c5, &tight));
    }

    #[test]
    fn normalization_drops_supergraphs() {
        let fam = PatternFamily::explicit(vec![
            complete(3).unwrap(),
            path(3).unwrap(),
            complete(2).unwrap(),
            path(2).unwrap(),
        ])
        .unwrap();
        assert_eq!(fam, PatternFamily::Explicit(vec![complete(2).unwrap()]));
        let two = PatternFamily::explicit(vec![
            complete(3).unwrap(),
            complete_bipartite(1, 3).unwrap(),
        ])
        .unwrap();
        assert!(matches!(two, PatternFamily::Explicit(ref v) if v.len() == 2));
        assert!(PatternFamily::explicit(vec![]).is_err());
        assert!(PatternFamily::domination().is_degenerate());
    }

    #[test]
    fn violations_lie_in_region() {
        let p = petersen();
        for fam in [
            PatternFamily::Star(1),
            PatternFamily::Clique(2),
            PatternFamily::AllCycles,
            PatternFamily::AllTrees(4),
            PatternFamily::explicit(vec![path(4).unwrap()]).unwrap(),
        ] {
            let region = set(&[0, 1, 2, 3, 4, 5, 7]);
            let occ = find_violation(&p, &region, &fam).expect("violation");
            assert!(occ.is_subset(&region));
            assert!(!is_f_free(&p, &occ, &fam), "{fam}");
        }
        assert_eq!(
            find_violation(&p, &p.vertices(), &PatternFamily::AllCycles).map(|c| c.len()),
            Some(5)
        );
    }

    #[test]
    fn builtin_names() {
        assert_eq!(
            PatternFamily::parse_builtin("star:0").unwrap(),
            PatternFamily::Star(0)
        );
        assert_eq!(
            PatternFamily::parse_builtin("cycles").unwrap(),
            PatternFamily::AllCycles
        );
        assert_eq!(
            PatternFamily::parse_builtin("trees:3").unwrap(),
            PatternFamily::AllTrees(3)
        );
        assert!(PatternFamily::parse_builtin("trees:1").is_err());
        assert!(PatternFamily::parse_builtin("wheel:3").is_err());
        assert_eq!(PatternFamily::Star(2).to_string(), "star:2");
    }
}
