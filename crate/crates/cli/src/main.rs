mod config;

use std::ffi::OsString;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;

use isolate_core::bounds::bound_report_with_seed;
use isolate_core::constructive::{
    equal_degree_tree_isolating, greedy_pattern_removal, greedy_star_removal, grid_isolating,
    isolating_components, isolating_third, isolating_with_seed_set, one_isolation_via_partition,
    randomized_bipartite_isolating, randomized_isolating, tree_k_isolating, SeedMode,
};
use isolate_core::families::{self, CoronaMode, GridKind};
use isolate_core::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use isolate_core::solvers::{exact_domination, exact_isolation};
use isolate_core::verify::{
    open_problem_probe, parse_checks, sample_verify, sweep_theorems, SampleFamily, SweepOptions,
};
use isolate_core::{check_certificate, Certificate, Graph, PatternFamily, VertexSet};

#[derive(Parser, Debug)]
#[command(
    name = "isolate",
    version,
    about = "Exact and constructive F-isolation numbers"
)]
struct Cli {
    /// key=value file supplying defaults for any long flag.
    #[arg(long, global = true)]
    config: Option<String>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    El,
    G6,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algo {
    Third,
    Components,
    Greedy,
    Random,
    RandomBipartite,
    Tree,
    EqualDegree,
    Grid,
    SeedSet,
    OnePartition,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Exact isolation number and the smallest minimum witness.
    Compute {
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        format: Option<Format>,
        #[arg(long, default_value = "star:0")]
        family: String,
        /// The solver is always exact; accepted so scripts can say so.
        #[arg(long)]
        exact: bool,
    },
    /// Run a constructive algorithm and print its certificate.
    Approx {
        #[arg(long)]
        algo: Option<Algo>,
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        format: Option<Format>,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Pattern edge list for the greedy removal of a graph `H`.
        #[arg(long)]
        pattern: Option<String>,
        /// Common degree of the non-leaf vertices for `equal-degree`.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Comma-separated seed set for `seed-set`.
        #[arg(long)]
        seed_set: Option<String>,
        #[arg(long, default_value = "half")]
        mode: String,
    },
    /// Closed-form bound table as CSV.
    Bounds {
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        format: Option<Format>,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Evaluate the entries that need exact auxiliary invariants.
        #[arg(long)]
        exact_aux: bool,
        #[arg(long)]
        seed_set: Option<String>,
    },
    /// Build a named graph family member.
    Generate {
        family: String,
        params: Vec<String>,
        /// Emit graph6 instead of an edge list.
        #[arg(long)]
        g6: bool,
        #[arg(long)]
        seed: Option<u64>,
        /// Base graph for families built on top of another graph.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Exhaustive theorem sweep, or a sampled one with `--sample`.
    Sweep {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        dedup: bool,
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long)]
        jobs: Option<usize>,
        /// Exit with status 1 if any check is violated.
        #[arg(long)]
        strict: bool,
        /// Sampled family: trees:N:K, triangulations:N, grids:S or line:N.
        #[arg(long)]
        sample: Option<String>,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Largest ι/n among graphs of a given minimum degree.
    Probe {
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 7)]
        n: usize,
    },
    /// Validate a certificate written by `approx`.
    CheckCert {
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        format: Option<Format>,
        #[arg(long)]
        cert: Option<String>,
        /// Overrides the family named in the certificate.
        #[arg(long)]
        family: Option<String>,
        /// Exit with status 1 if the certificate is invalid.
        #[arg(long)]
        strict: bool,
    },
}

/// Result of a subcommand: its output and whether a violation was found.
struct Outcome {
    text: String,
    violation: bool,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome {
            text,
            violation: false,
        }
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| anyhow!("missing --{flag}"))
}

fn read_graph(path: &str, format: Option<Format>) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading graph {path}"))?;
    let format = format.unwrap_or_else(|| {
        if Path::new(path).extension().is_some_and(|e| e == "g6") {
            Format::G6
        } else {
            Format::El
        }
    });
    let g = match format {
        Format::El => parse_edge_list(&text),
        Format::G6 => parse_graph6(text.trim()),
    };
    g.with_context(|| format!("parsing {path}"))
}

fn load(graph: Option<String>, format: Option<Format>) -> Result<Graph> {
    read_graph(&need(graph, "graph")?, format)
}

/// `star:k`, `clique:k`, `cycles`, `trees:k` or `file:a.el[,b.el...]`.
fn parse_family(spec: &str) -> Result<PatternFamily> {
    match spec.strip_prefix("file:") {
        Some(paths) => {
            let patterns = paths
                .split(',')
                .map(|p| read_graph(p, None))
                .collect::<Result<Vec<_>>>()?;
            Ok(PatternFamily::explicit(patterns)?)
        }
        None => Ok(PatternFamily::parse_builtin(spec)?),
    }
}

fn parse_set(spec: &str, n: usize) -> Result<VertexSet> {
    let body = spec.trim().trim_start_matches('{').trim_end_matches('}');
    let mut set = VertexSet::new();
    for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().with_context(|| format!("bad vertex {tok:?}"))?;
        if v >= n {
            bail!("vertex {v} out of range for n = {n}");
        }
        set.insert(v);
    }
    Ok(set)
}

fn fmt_ratio(r: Option<Ratio<i64>>) -> String {
    match r {
        None => "-".into(),
        Some(r) if r.is_integer() => r.numer().to_string(),
        Some(r) => format!("{}/{}", r.numer(), r.denom()),
    }
}

fn cmd_compute(graph: Option<String>, format: Option<Format>, family: &str) -> Result<Outcome> {
    let g = load(graph, format)?;
    let fam = parse_family(family)?;
    let (value, cert) = exact_isolation(&g, &fam);
    Ok(Outcome::ok(format!("{value} {}\n", cert.set)))
}

fn render_cert(g: &Graph, cert: &Certificate, family_spec: &str) -> String {
    format!(
        "producer {}\nfamily {}\nset {}\nsize {}\nbound {}\nvalid {}\n",
        cert.producer,
        family_spec,
        cert.set,
        cert.size(),
        fmt_ratio(cert.promised_bound),
        check_certificate(g, cert)
    )
}

#[allow(clippy::too_many_arguments)]
fn cmd_approx(
    algo: Option<Algo>,
    graph: Option<String>,
    format: Option<Format>,
    k: usize,
    seed: Option<u64>,
    pattern: Option<String>,
    r: Option<usize>,
    kind: Option<String>,
    s: Option<usize>,
    t: Option<usize>,
    seed_set: Option<String>,
    mode: &str,
) -> Result<Outcome> {
    let algo = need(algo, "algo")?;
    if let Algo::Grid = algo {
        let kind: GridKind = need(kind, "kind")?.parse()?;
        let (s, t) = (need(s, "s")?, need(t, "t")?);
        let g = families::grid_graph(kind, s, t)?;
        let cert = grid_isolating(kind, s, t)?;
        return Ok(Outcome::ok(render_cert(
            &g,
            &cert,
            &cert.family.to_string(),
        )));
    }
    let g = load(graph, format)?;
    let (cert, spec) = match algo {
        Algo::Third => (isolating_third(&g)?, None),
        Algo::Components => (isolating_components(&g)?, None),
        Algo::Greedy => match pattern {
            Some(p) => {
                let h = read_graph(&p, None)?;
                let (_, dom) = exact_domination(&h);
                (
                    greedy_pattern_removal(&g, &h, &dom)?,
                    Some(format!("file:{p}")),
                )
            }
            None => (greedy_star_removal(&g, k), None),
        },
        Algo::Random => (randomized_isolating(&g, need(seed, "seed")?)?, None),
        Algo::RandomBipartite => (
            randomized_bipartite_isolating(&g, need(seed, "seed")?)?,
            None,
        ),
        Algo::Tree => (tree_k_isolating(&g, k)?, None),
        Algo::EqualDegree => (equal_degree_tree_isolating(&g, k, need(r, "r")?)?, None),
        Algo::SeedSet => {
            let set = parse_set(&need(seed_set, "seed-set")?, g.n())?;
            let mode: SeedMode = mode.parse()?;
            (isolating_with_seed_set(&g, &set, mode)?, None)
        }
        Algo::OnePartition => (one_isolation_via_partition(&g)?, None),
        Algo::Grid => unreachable!("handled above"),
    };
    let spec = spec.unwrap_or_else(|| cert.family.to_string());
    Ok(Outcome::ok(render_cert(&g, &cert, &spec)))
}

fn cmd_bounds(
    graph: Option<String>,
    format: Option<Format>,
    k: usize,
    exact_aux: bool,
    seed_set: Option<String>,
) -> Result<Outcome> {
    let g = load(graph, format)?;
    let seed = seed_set.map(|s| parse_set(&s, g.n())).transpose()?;
    let report = bound_report_with_seed(&g, k, exact_aux, seed.as_ref());
    Ok(Outcome::ok(format!(
        "name,side,value,applicable,reason\n{}",
        report.to_csv()
    )))
}

fn nums(params: &[String], count: usize, usage: &str) -> Result<Vec<usize>> {
    if params.len() != count {
        bail!("usage: generate {usage}");
    }
    params
        .iter()
        .map(|p| {
            p.parse()
                .with_context(|| format!("bad parameter {p:?}; usage: generate {usage}"))
        })
        .collect()
}

fn generate(
    family: &str,
    params: &[String],
    seed: Option<u64>,
    base: Option<Graph>,
) -> Result<Graph> {
    let p = |count, usage| nums(params, count, usage);
    let g = match family {
        "path" => families::path(p(1, "path N")?[0])?,
        "cycle" => families::cycle(p(1, "cycle N")?[0])?,
        "complete" => families::complete(p(1, "complete N")?[0])?,
        "empty" => families::empty(p(1, "empty N")?[0])?,
        "star" => families::star(p(1, "star R")?[0])?,
        "complete-bipartite" => {
            let v = p(2, "complete-bipartite P Q")?;
            families::complete_bipartite(v[0], v[1])?
        }
        "petersen" => {
            p(0, "petersen")?;
            families::petersen()
        }
        "hypercube" => families::hypercube(p(1, "hypercube D")?[0])?,
        "random-tree" => {
            families::random_tree(p(1, "random-tree N --seed S")?[0], need(seed, "seed")?)?
        }
        "random-regular" => {
            let v = p(2, "random-regular N D --seed S")?;
            families::random_regular(v[0], v[1], need(seed, "seed")?)?
        }
        "triangulation" => families::random_polygon_triangulation(
            p(1, "triangulation N --seed S")?[0],
            need(seed, "seed")?,
        )?,
        "corona-one" | "corona-two" => {
            p(0, "corona-one|corona-two --graph BASE")?;
            let mode = if family == "corona-one" {
                CoronaMode::OneEdge
            } else {
                CoronaMode::TwoEdges
            };
            families::corona_k2(&need(base, "graph")?, mode)?
        }
        "f-rst" => {
            let v = p(3, "f-rst R S T")?;
            families::f_rst(v[0], v[1], v[2])?
        }
        "kr-minus-hamiltonian" => {
            families::kr_minus_hamiltonian(p(1, "kr-minus-hamiltonian R")?[0])?
        }
        "path-of-stars" => {
            let v = p(2, "path-of-stars T K")?;
            families::path_of_stars(v[0], v[1])?
        }
        "caterpillar" => {
            let v = p(2, "caterpillar T R")?;
            families::equal_degree_caterpillar(v[0], v[1])?
        }
        "fan" => families::fan_triangulation(p(1, "fan N")?[0])?,
        "outerplanar-sharp" => {
            families::outerplanar_sharp(p(1, "outerplanar-sharp P")?[0], base.as_ref())?
        }
        "lb-bipartite" => {
            let v = p(2, "lb-bipartite T DELTA")?;
            families::lb_equality_bipartite(v[0], v[1])?
        }
        "star-lower" => {
            let v = p(2, "star-lower DELTA K")?;
            families::star_lower_sharp(v[0], v[1])?
        }
        "subdivided-star" => {
            let v = p(2, "subdivided-star P Q")?;
            families::subdivided_star_sharp(v[0], v[1])?
        }
        "line" => {
            p(0, "line --graph BASE")?;
            families::line_graph(&need(base, "graph")?)?
        }
        "grid" | "torus" | "cylinder" => {
            let v = p(2, "grid|torus|cylinder S T")?;
            families::grid_graph(family.parse()?, v[0], v[1])?
        }
        _ => bail!("unknown family {family:?}"),
    };
    Ok(g)
}

fn cmd_generate(
    family: &str,
    params: &[String],
    g6: bool,
    seed: Option<u64>,
    graph: Option<String>,
    format: Option<Format>,
) -> Result<Outcome> {
    let base = graph.map(|p| read_graph(&p, format)).transpose()?;
    let g = generate(family, params, seed, base)?;
    let text = if g6 {
        format!("{}\n", emit_graph6(&g)?)
    } else {
        emit_edge_list(&g)
    };
    Ok(Outcome::ok(text))
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    n: Option<usize>,
    connected: bool,
    dedup: bool,
    checks: &str,
    jobs: Option<usize>,
    strict: bool,
    sample: Option<String>,
    trials: usize,
    seed: Option<u64>,
) -> Result<Outcome> {
    let result = match sample {
        Some(spec) => {
            let family: SampleFamily = spec.parse()?;
            let seed = match family {
                SampleFamily::Grids { .. } => seed.unwrap_or(0),
                _ => need(seed, "seed")?,
            };
            sample_verify(&family, trials, seed)?
        }
        None => sweep_theorems(&SweepOptions {
            n_max: need(n, "n")?,
            checks: parse_checks(checks)?,
            connected_only: connected,
            dedup,
            jobs,
        })?,
    };
    let violation = strict && result.total_violations() > 0;
    Ok(Outcome {
        text: result.to_tsv(),
        violation,
    })
}

fn cmd_probe(delta: usize, n: usize) -> Result<Outcome> {
    let mut text = String::from("n\tgraphs\tmax_ratio\texample_g6\n");
    for row in open_problem_probe(delta, n)? {
        text.push_str(&format!("{row}\n"));
    }
    Ok(Outcome::ok(text))
}

fn cmd_check_cert(
    graph: Option<String>,
    format: Option<Format>,
    cert: Option<String>,
    family: Option<String>,
    strict: bool,
) -> Result<Outcome> {
    let g = load(graph, format)?;
    let path = need(cert, "cert")?;
    let text = fs::read_to_string(&path).with_context(|| format!("reading certificate {path}"))?;
    let mut fields = std::collections::BTreeMap::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let (k, v) = line.split_once(' ').unwrap_or((line, ""));
        fields.insert(k.to_string(), v.trim().to_string());
    }
    let field = |k: &str| {
        fields
            .get(k)
            .ok_or_else(|| anyhow!("certificate {path} has no {k:?} line"))
    };
    let fam_spec = match family {
        Some(f) => f,
        None => field("family")?.clone(),
    };
    let fam = parse_family(&fam_spec)
        .with_context(|| format!("family {fam_spec:?} is not parseable; pass --family"))?;
    let set = parse_set(field("set")?, g.n())?;
    let mut c = Certificate::new(
        set,
        fam,
        fields.get("producer").cloned().unwrap_or_default(),
    );
    if let Some(b) = fields.get("bound").filter(|b| b.as_str() != "-") {
        let bound = match b.split_once('/') {
            Some((p, q)) => Ratio::new(p.parse()?, q.parse()?),
            None => Ratio::from_integer(b.parse()?),
        };
        c = c.with_bound(bound);
    }
    let ok = check_certificate(&g, &c);
    Ok(Outcome {
        text: format!("{}\n", if ok { "valid" } else { "invalid" }),
        violation: strict && !ok,
    })
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.cmd {
        Cmd::Compute {
            graph,
            format,
            family,
            ..
        } => cmd_compute(graph, format, &family),
        Cmd::Approx {
            algo,
            graph,
            format,
            k,
            seed,
            pattern,
            r,
            kind,
            s,
            t,
            seed_set,
            mode,
        } => cmd_approx(
            algo, graph, format, k, seed, pattern, r, kind, s, t, seed_set, &mode,
        ),
        Cmd::Bounds {
            graph,
            format,
            k,
            exact_aux,
            seed_set,
        } => cmd_bounds(graph, format, k, exact_aux, seed_set),
        Cmd::Generate {
            family,
            params,
            g6,
            seed,
            graph,
            format,
        } => cmd_generate(&family, &params, g6, seed, graph, format),
        Cmd::Sweep {
            n,
            connected,
            dedup,
            checks,
            jobs,
            strict,
            sample,
            trials,
            seed,
        } => cmd_sweep(
            n, connected, dedup, &checks, jobs, strict, sample, trials, seed,
        ),
        Cmd::Probe { delta, n } => cmd_probe(delta, n),
        Cmd::CheckCert {
            graph,
            format,
            cert,
            family,
            strict,
        } => cmd_check_cert(graph, format, cert, family, strict),
    }
}

fn parse_args(argv: Vec<OsString>) -> std::result::Result<Cli, ExitCode> {
    let matches = match Cli::command().try_get_matches_from(&argv) {
        Ok(m) => m,
        Err(e) => {
            let _ = e.print();
            return Err(ExitCode::from(if e.use_stderr() { 2 } else { 0 }));
        }
    };
    let sub = matches
        .subcommand_name()
        .expect("subcommand is required")
        .to_string();
    let argv = match matches.get_one::<String>("config") {
        Some(path) => match config::merge(&Cli::command(), &sub, path, argv) {
            Ok(a) => a,
            Err(e) => {
                eprintln!("error: {e:#}");
                return Err(ExitCode::from(2));
            }
        },
        None => argv,
    };
    Cli::command()
        .try_get_matches_from(argv)
        .and_then(|m| Cli::from_arg_matches(&m))
        .map_err(|e| {
            let _ = e.print();
            ExitCode::from(2)
        })
}

fn main() -> ExitCode {
    let cli = match parse_args(std::env::args_os().collect()) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let out = cli.out.clone();
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, &outcome.text) {
                eprintln!("error: writing {path}: {e}");
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.text),
    }
    if outcome.violation {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
