//! Closed-form bounds on `ι_k`, each with its applicability predicate.

use std::fmt;

use num_rational::Ratio;

use crate::constructive::{seed_bound, seed_mode_applies, SeedMode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::emit_graph6;
use crate::patterns::{is_claw_free, PatternFamily};
use crate::solvers::{
    domination_number, exact_isolation, exact_k_independence, max_f_free_induced,
};
use crate::vertex_set::VertexSet;

/// Absolute slack used when a real-valued bound is compared.
pub const REAL_SLACK: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundValue {
    Exact(Ratio<i64>),
    Real(f64),
}

impl BoundValue {
    pub fn as_f64(&self) -> f64 {
        match *self {
            BoundValue::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            BoundValue::Real(x) => x,
        }
    }

    /// `self <= x`, exactly for rationals and with [`REAL_SLACK`] otherwise.
    pub fn le_int(&self, x: usize) -> bool {
        match *self {
            BoundValue::Exact(r) => r <= Ratio::from_integer(x as i64),
            BoundValue::Real(v) => v <= x as f64 + REAL_SLACK,
        }
    }

    /// `x <= self`.
    pub fn ge_int(&self, x: usize) -> bool {
        match *self {
            BoundValue::Exact(r) => Ratio::from_integer(x as i64) <= r,
            BoundValue::Real(v) => x as f64 <= v + REAL_SLACK,
        }
    }

    /// Whether `x` meets the bound with equality.
    pub fn equals_int(&self, x: usize) -> bool {
        match *self {
            BoundValue::Exact(r) => r == Ratio::from_integer(x as i64),
            BoundValue::Real(v) => (v - x as f64).abs() <= REAL_SLACK,
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            BoundValue::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            BoundValue::Real(x) => write!(f, "{x:.6}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub side: Side,
    /// `None` when the entry does not apply.
    pub value: Option<BoundValue>,
    pub reason: String,
}

impl BoundEntry {
    pub fn applicable(&self) -> bool {
        self.value.is_some()
    }

    /// Whether an exact value `x` is consistent with this entry.
    pub fn holds_for(&self, x: usize) -> bool {
        match (self.value, self.side) {
            (None, _) => true,
            (Some(v), Side::Lower) => v.le_int(x),
            (Some(v), Side::Upper) => v.ge_int(x),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub graph_id: String,
    pub k: usize,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Applicable entries contradicted by the exact value `x`.
    pub fn violations(&self, x: usize) -> Vec<&BoundEntry> {
        self.entries.iter().filter(|e| !e.holds_for(x)).collect()
    }

    /// Rows `name,side,value,applicable,reason`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let value = e.value.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                e.name,
                e.side,
                value,
                e.applicable(),
                e.reason.replace(',', ";")
            ));
        }
        out
    }
}

fn graph_id(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| format!("n{}m{}", g.n(), g.m()))
}

fn q(num: i64, den: i64) -> Option<BoundValue> {
    Some(BoundValue::Exact(Ratio::new(num, den)))
}

struct Builder {
    entries: Vec<BoundEntry>,
}

impl Builder {
    fn push(
        &mut self,
        name: &'static str,
        side: Side,
        value: Option<BoundValue>,
        reason: impl Into<String>,
    ) {
        self.entries.push(BoundEntry {
            name,
            side,
            value,
            reason: reason.into(),
        });
    }

    /// Entry that applies iff `ok`; `value` is only evaluated then.
    fn when(
        &mut self,
        name: &'static str,
        side: Side,
        ok: std::result::Result<(), String>,
        value: impl FnOnce() -> Option<BoundValue>,
    ) {
        match ok {
            Ok(()) => self.push(name, side, value(), "applies"),
            Err(why) => self.push(name, side, None, why),
        }
    }
}

fn need(cond: bool, why: &str) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why.to_string())
    }
}

fn for_k(k: usize, want: usize) -> std::result::Result<(), String> {
    need(k == want, &format!("stated for k = {want}"))
}

/// Every closed-form bound on `ι_k(g)`. `L1` and `L2` need exact auxiliary
/// values (`γ(G²)` and `α_k`) and are only evaluated with `with_exact_aux`.
pub fn bound_report(g: &Graph, k: usize, with_exact_aux: bool) -> BoundReport {
    bound_report_with_seed(g, k, with_exact_aux, None)
}

/// [`bound_report`] plus the three seed-set entries `U11` for `seed`.
pub fn bound_report_with_seed(
    g: &Graph,
    k: usize,
    with_exact_aux: bool,
    seed: Option<&VertexSet>,
) -> BoundReport {
    let n = g.n() as i64;
    let m = g.m() as i64;
    let delta = g.min_degree() as i64;
    let big = g.max_degree() as i64;
    let k0 = || for_k(k, 0);
    let comps = g.components();
    let c5 = |c: &VertexSet| g.is_cycle_within(c, 5);
    let mut b = Builder {
        entries: Vec::new(),
    };

    b.push("U1", Side::Upper, q(n, k as i64 + 2), "always");
    b.when(
        "U2",
        Side::Upper,
        k0().and(need(
            g.is_connected() && n >= 3 && !g.is_cycle_of_length(5),
            "needs connected, n >= 3, not C_5",
        )),
        || q(n, 3),
    );
    let big_components = comps.iter().all(|c| c.len() >= 3);
    b.when(
        "U3",
        Side::Upper,
        k0().and(need(
            big_components,
            "a component has fewer than 3 vertices",
        )),
        || q(2 * n, 5),
    );
    b.when(
        "U3b",
        Side::Upper,
        k0().and(need(
            big_components,
            "a component has fewer than 3 vertices",
        ))
        .and(need(!comps.iter().any(c5), "has a C_5 component")),
        || q(comps.iter().map(|c| c.len() as i64 / 3).sum(), 1),
    );
    b.when("U4", Side::Upper, k0(), || q(n - big + 1, 2));
    let u5_ok = (0..g.n())
        .filter(|&v| g.degree(v) as i64 == big)
        .any(|v| seed_mode_applies(g, &VertexSet::singleton(v), SeedMode::Third));
    b.when(
        "U5",
        Side::Upper,
        k0().and(need(g.n() > 0, "empty graph")).and(need(
            u5_ok,
            "no maximum-degree vertex leaves components of order >= 3 without C_5",
        )),
        || q(n - big + 2, 3),
    );
    b.when(
        "U6",
        Side::Upper,
        for_k(k, 1).and(need(g.n() > 0, "empty graph")),
        || q(n - big + 2, 3),
    );
    b.when(
        "U7",
        Side::Upper,
        k0().and(need(delta >= 1, "needs delta >= 1")),
        || {
            let d = delta as f64 + 1.0;
            Some(BoundValue::Real((d.ln() + 0.5) / d * n as f64))
        },
    );
    b.when(
        "U8",
        Side::Upper,
        k0().and(need(delta >= 1, "needs delta >= 1")),
        || match delta {
            1 => q(n, 2),
            2 => q(2 * n, 5),
            _ => q(n, 3),
        },
    );
    let u9_ok = need(delta > k as i64, "needs delta >= k + 1");
    b.when("U9", Side::Upper, u9_ok.clone(), || {
        let d = delta as f64;
        Some(BoundValue::Real(
            ((d + 0.5).ln() + 1.0) / (d + 1.0) * n as f64,
        ))
    });
    b.when("U9'", Side::Upper, u9_ok.clone(), || {
        let d = delta as f64 + 1.0;
        Some(BoundValue::Real((d.ln() + 1.0) / d * n as f64))
    });
    b.when(
        "U10",
        Side::Upper,
        k0().and(need(g.is_bipartite(), "not bipartite"))
            .and(need(delta >= 2, "needs delta >= 2")),
        || {
            let d = delta as f64;
            Some(BoundValue::Real((d.ln() + 1.0) / (2.0 * d) * n as f64))
        },
    );
    if let Some(s) = seed {
        for (name, mode) in [
            ("U11(i)", SeedMode::Half),
            ("U11(ii)", SeedMode::TwoFifths),
            ("U11(iii)", SeedMode::Third),
        ] {
            b.when(
                name,
                Side::Upper,
                k0().and(need(
                    seed_mode_applies(g, s, mode),
                    "seed-set condition fails",
                )),
                || Some(BoundValue::Exact(seed_bound(g, s, mode))),
            );
        }
    }
    let aux = need(with_exact_aux, "needs exact auxiliary solvers");
    b.when("L1", Side::Lower, u9_ok.and(aux.clone()), || {
        q(domination_number(&g.square()) as i64, 1)
    });
    b.when(
        "L2",
        Side::Lower,
        need(big > k as i64, "needs Delta >= k + 1").and(aux),
        || q(n + 1 - exact_k_independence(g, k).0 as i64, big + 1),
    );
    b.when(
        "L3",
        Side::Lower,
        k0().and(need(big >= 1, "needs Delta >= 1")),
        || q(m, big * big),
    );
    let claw = need(is_claw_free(g), "not claw-free");
    b.when(
        "L4",
        Side::Lower,
        k0().and(claw.clone())
            .and(need(big >= 1, "needs Delta >= 1")),
        || q(delta * (n + 1) + 2, (delta + 2) * (big + 1)),
    );
    b.when(
        "L5",
        Side::Lower,
        k0().and(claw).and(need(big >= 1, "needs Delta >= 1")),
        || q(4 * m, 3 * big * big + 2 * big),
    );

    BoundReport {
        graph_id: graph_id(g),
        k,
        entries: b.entries,
    }
}

/// Inputs and bounds for `ι(G × K_r, F)` with `r` the smallest order in `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductReport {
    pub r: usize,
    pub n: usize,
    pub gamma: usize,
    pub iota: usize,
    /// Order of a largest induced `F`-free subgraph.
    pub alpha: usize,
    /// `γ(G)`.
    pub lower: usize,
    /// `min{n, (r-1)γ + ι, rι + α}`.
    pub upper: usize,
    /// `min{n, rγ}`.
    pub upper_simple: usize,
}

pub fn product_report(g: &Graph, family: &PatternFamily) -> Result<ProductReport> {
    family.validate()?;
    let r = family.min_order();
    if r == 0 {
        return Err(Error::Parameter(
            "family has no finite minimum order".into(),
        ));
    }
    let n = g.n();
    let gamma = domination_number(g);
    let iota = exact_isolation(g, family).0;
    let alpha = max_f_free_induced(g, family).0;
    Ok(ProductReport {
        r,
        n,
        gamma,
        iota,
        alpha,
        lower: gamma,
        upper: n.min((r - 1) * gamma + iota).min(r * iota + alpha),
        upper_simple: n.min(r * gamma),
    })
}

/// `γ(G) <= ι(B(G)) <= γ(B(G)) <= 2γ(G)`: the outer values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubleReport {
    pub gamma: usize,
    pub lower: usize,
    pub upper: usize,
}

pub fn double_report(g: &Graph) -> DoubleReport {
    let gamma = domination_number(g);
    DoubleReport {
        gamma,
        lower: gamma,
        upper: 2 * gamma,
    }
}

/// `γ/n` next to `ι/n` for a regular graph, with the values `1/(r+1)` and
/// `1/(2r)` expected for regular graphs meeting `L3` with equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapNote {
    pub degree: usize,
    pub gamma_over_n: Ratio<i64>,
    pub iota_over_n: Ratio<i64>,
    pub expected_gamma: Ratio<i64>,
    pub expected_iota: Ratio<i64>,
}

pub fn regular_gap_note(g: &Graph) -> Result<GapNote> {
    let r = g
        .regular_degree()
        .filter(|&r| r >= 1 && g.n() > 0)
        .ok_or_else(|| {
            Error::Precondition("regular_gap_note needs a regular graph with an edge".into())
        })?;
    let n = g.n() as i64;
    let gamma = domination_number(g) as i64;
    let iota = exact_isolation(g, &PatternFamily::Star(0)).0 as i64;
    Ok(GapNote {
        degree: r,
        gamma_over_n: Ratio::new(gamma, n),
        iota_over_n: Ratio::new(iota, n),
        expected_gamma: Ratio::new(1, r as i64 + 1),
        expected_iota: Ratio::new(1, 2 * r as i64),
    })
}
