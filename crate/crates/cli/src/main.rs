mod input;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ordercert::bandwidth::{
    atfree_bandwidth_ordering, cocomp_bandwidth_ordering, exact_bandwidth, find_spanning_caterpillar,
    interval_bandwidth_ordering, lower_bounds, proper_interval_bandwidth_ordering, split_bandwidth_ordering,
    BoundedOrdering,
};
use ordercert::certificate::{verify, Certificate, GraphSummary, Representation};
use ordercert::generators::gen;
use ordercert::recognition::{find_asteroidal_triple, recognize, ClassId, RecognizeOptions};
use ordercert::{check_ordering, rational, Condition, FamilySpec, Graph, Limits};

use input::{load_graph, load_ordering, Format};

const MEMBER: u8 = 0;
const NON_MEMBER: u8 = 1;
const FAILURE: u8 = 2;

/// Certifying recognition of graph classes through vertex orderings.
///
/// Graphs are read from a file (edge list or graph6) or generated from a
/// family spec such as `cycle:5` or `complete-bipartite:3,3`. Exit status is
/// 0 for member / holds, 1 for non-member / fails, 2 on error.
#[derive(Parser)]
#[command(name = "ordercert", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input format for graph files, and output format for `gen`.
    #[arg(long, global = true, value_enum, default_value = "edgelist")]
    format: Format,

    /// Emit JSON instead of a plain-text report.
    #[arg(long, global = true)]
    json: bool,

    /// Largest instance accepted by the exponential searches.
    #[arg(long, global = true, env = "ORDERCERT_MAX_N")]
    max_n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide class membership and print a JSON certificate.
    Recognize {
        #[arg(long)]
        class: ClassId,
        /// Skip the chordal and split fast paths and search orderings directly.
        #[arg(long)]
        exhaustive: bool,
        input: String,
    },
    /// Evaluate triple conditions on a given ordering.
    Check {
        /// Comma-separated condition names, or `all`.
        #[arg(long, value_delimiter = ',', required = true)]
        cond: Vec<String>,
        input: String,
        /// Vertex ids in order, inline ("0 2 1 3") or in a file.
        ordering: String,
    },
    /// Exact bandwidth, or a class-specific ordering with its guarantee.
    Bandwidth {
        #[arg(long, required_unless_present = "bound", conflicts_with = "bound")]
        exact: bool,
        #[arg(long, value_enum)]
        bound: Option<BoundClass>,
        input: String,
    },
    /// Build the certifying representation for a class.
    Repr {
        #[arg(long)]
        class: ClassId,
        input: String,
    },
    /// Print a generated graph.
    Gen {
        spec: String,
        /// Seed for the random families.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Re-check a certificate against the graph it was issued for.
    Verify { certificate: PathBuf, input: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundClass {
    Interval,
    ProperInterval,
    CoComparability,
    Split,
    AtFree,
}

impl BoundClass {
    fn class(self) -> ClassId {
        match self {
            BoundClass::Interval => ClassId::Interval,
            BoundClass::ProperInterval => ClassId::ProperInterval,
            BoundClass::CoComparability => ClassId::CoComparability,
            BoundClass::Split => ClassId::Split,
            BoundClass::AtFree => ClassId::AtFree,
        }
    }
}

struct Ctx {
    format: Format,
    json: bool,
    limits: Limits,
}

impl Ctx {
    fn graph(&self, input: &str) -> Result<Graph> {
        load_graph(input, self.format)
    }

    fn recognize(&self, g: &Graph, class: ClassId, exhaustive: bool) -> Result<Certificate> {
        let opts = RecognizeOptions {
            limits: self.limits,
            fast_paths: !exhaustive,
        };
        Ok(recognize(g, class, &opts)?)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        format: cli.format,
        json: cli.json,
        limits: cli.max_n.map(Limits::uniform).unwrap_or_default(),
    };
    let mut out = String::new();
    let code = match run(&ctx, cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            FAILURE
        }
    };
    // a closed pipe downstream is not an error worth reporting
    let mut stdout = io::stdout().lock();
    match stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            eprintln!("error: writing output: {e}");
            ExitCode::from(FAILURE)
        }
        _ => ExitCode::from(code),
    }
}

fn run(ctx: &Ctx, command: Command, out: &mut String) -> Result<u8> {
    match command {
        Command::Recognize {
            class,
            exhaustive,
            input,
        } => {
            let g = ctx.graph(&input)?;
            let cert = ctx.recognize(&g, class, exhaustive)?;
            writeln!(out, "{}", cert.to_json())?;
            Ok(verdict(cert.member))
        }
        Command::Check { cond, input, ordering } => cmd_check(ctx, &cond, &input, &ordering, out),
        Command::Bandwidth { exact, bound, input } => {
            let g = ctx.graph(&input)?;
            match bound {
                Some(b) => cmd_bound(ctx, &g, b, out),
                None if exact => cmd_exact(ctx, &g, out),
                None => bail!("one of --exact or --bound is required"),
            }
        }
        Command::Repr { class, input } => cmd_repr(ctx, &ctx.graph(&input)?, class, out),
        Command::Gen { spec, seed } => {
            let mut spec: FamilySpec = spec.parse()?;
            if let Some(s) = seed {
                match &mut spec {
                    FamilySpec::RandomInterval { seed, .. } | FamilySpec::RandomSplit { seed, .. } => *seed = s,
                    _ => bail!("--seed only applies to random families"),
                }
            }
            out.push_str(&ctx.format.emit(&gen(&spec)?));
            Ok(MEMBER)
        }
        Command::Verify { certificate, input } => {
            let text =
                fs::read_to_string(&certificate).with_context(|| format!("reading {}", certificate.display()))?;
            let cert = Certificate::from_json(&text)?;
            let g = ctx.graph(&input)?;
            verify(&g, &cert, &ctx.limits)?;
            if ctx.json {
                let report = json!({"verified": true, "class": cert.class, "member": cert.member});
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                let what = if cert.member { "member" } else { "non-member" };
                writeln!(out, "verified: {what} of {}", cert.class)?;
            }
            Ok(verdict(cert.member))
        }
    }
}

fn verdict(ok: bool) -> u8 {
    if ok {
        MEMBER
    } else {
        NON_MEMBER
    }
}

fn parse_conditions(names: &[String]) -> Result<Vec<Condition>> {
    let mut conds: Vec<Condition> = Vec::new();
    for name in names {
        let add: Vec<Condition> = if name.trim().eq_ignore_ascii_case("all") {
            Condition::ALL.to_vec()
        } else {
            vec![name.parse()?]
        };
        for c in add {
            if !conds.contains(&c) {
                conds.push(c);
            }
        }
    }
    Ok(conds)
}

fn cmd_check(ctx: &Ctx, cond: &[String], input: &str, ordering: &str, out: &mut String) -> Result<u8> {
    let conds = parse_conditions(cond)?;
    let g = ctx.graph(input)?;
    let ord = load_ordering(ordering, &g)?;
    let verdicts = conds
        .iter()
        .map(|&c| check_ordering(&g, &ord, c))
        .collect::<ordercert::Result<Vec<_>>>()?;
    let all = verdicts.iter().all(|v| v.holds);
    if ctx.json {
        let report = json!({
            "graph": GraphSummary::of(&g),
            "ordering": ord.as_slice(),
            "holds": all,
            "verdicts": verdicts,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        for v in &verdicts {
            match v.witness {
                None => writeln!(out, "{:<17} holds", v.condition.name())?,
                Some(t) => writeln!(
                    out,
                    "{:<17} fails  positions ({}, {}, {})  vertices ({}, {}, {})",
                    v.condition.name(),
                    t.i,
                    t.j,
                    t.k,
                    ord.at(t.i),
                    ord.at(t.j),
                    ord.at(t.k)
                )?,
            }
        }
    }
    Ok(verdict(all))
}

fn cmd_exact(ctx: &Ctx, g: &Graph, out: &mut String) -> Result<u8> {
    let r = exact_bandwidth(g, ctx.limits.bandwidth_max_n)?;
    if ctx.json {
        let report = json!({
            "mode": "exact",
            "graph": GraphSummary::of(g),
            "value": r.value,
            "ordering": r.ordering.as_slice(),
            "lower_bounds": r.lower_bounds,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        writeln!(out, "bandwidth     {}", r.value)?;
        writeln!(out, "ordering      {}", join(r.ordering.as_slice()))?;
        let lb = r.lower_bounds;
        writeln!(
            out,
            "lower bounds  degree {}, diameter {}, clique {}",
            lb.degree, lb.diameter, lb.clique
        )?;
    }
    Ok(MEMBER)
}

fn cmd_bound(ctx: &Ctx, g: &Graph, b: BoundClass, out: &mut String) -> Result<u8> {
    let max_n = ctx.limits.search_max_n;
    let result = match b {
        BoundClass::Interval => interval_bandwidth_ordering(g, max_n),
        BoundClass::ProperInterval => proper_interval_bandwidth_ordering(g, max_n),
        BoundClass::CoComparability => cocomp_bandwidth_ordering(g, max_n),
        BoundClass::Split => split_bandwidth_ordering(g),
        BoundClass::AtFree => {
            if find_asteroidal_triple(g).is_some() {
                Err(ordercert::Error::NotMember("at-free".into()))
            } else {
                match find_spanning_caterpillar(g, ctx.limits.caterpillar_max_n)? {
                    Some(t) => atfree_bandwidth_ordering(g, &t),
                    None => bail!("no spanning caterpillar with the distance property (is the graph connected?)"),
                }
            }
        }
    };
    let r: BoundedOrdering = match result {
        Ok(r) => r,
        Err(ordercert::Error::NotMember(_)) => {
            let cert = ctx.recognize(g, b.class(), false)?;
            writeln!(out, "{}", cert.to_json())?;
            return Ok(NON_MEMBER);
        }
        Err(e) => return Err(e.into()),
    };
    if ctx.json {
        let report = json!({
            "mode": "bound",
            "class": b.class(),
            "graph": GraphSummary::of(g),
            "width": r.width,
            "guarantee": {"bound": r.bound, "formula": r.bound.formula(), "value": r.guarantee},
            "within_bound": r.within_bound(),
            "ordering": r.ordering.as_slice(),
            "lower_bounds": lower_bounds(g),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        writeln!(out, "width         {}", r.width)?;
        writeln!(out, "guarantee     {} = {}", r.bound.formula(), r.guarantee)?;
        writeln!(out, "ordering      {}", join(r.ordering.as_slice()))?;
    }
    Ok(verdict(r.within_bound()))
}

fn cmd_repr(ctx: &Ctx, g: &Graph, class: ClassId, out: &mut String) -> Result<u8> {
    if matches!(class, ClassId::Chordal | ClassId::AtFree) {
        bail!("class {class} has no representation here; use recognize");
    }
    let cert = ctx.recognize(g, class, false)?;
    let Some(rep) = &cert.representation else {
        writeln!(out, "{}", cert.to_json())?;
        return Ok(NON_MEMBER);
    };
    if ctx.json {
        let report = json!({"class": class, "ordering": cert.ordering, "representation": rep});
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        return Ok(MEMBER);
    }
    match rep {
        Representation::IntervalModel { intervals } => {
            for (v, iv) in intervals.intervals().iter().enumerate() {
                writeln!(
                    out,
                    "{v}\t[{}, {}]",
                    rational::to_string(&iv.left),
                    rational::to_string(&iv.right)
                )?;
            }
        }
        Representation::Orientation { orientation } | Representation::ComplementOrientation { orientation } => {
            for (u, v) in orientation.arcs() {
                writeln!(out, "{u} -> {v}")?;
            }
        }
        Representation::Permutation { permutation } => {
            writeln!(
                out,
                "ordering     {}",
                join(cert.ordering.as_deref().unwrap_or_default())
            )?;
            writeln!(out, "permutation  {}", join(&permutation.one_based()))?;
        }
        Representation::SplitPartition { clique, independent } => {
            writeln!(out, "clique       {}", join(clique))?;
            writeln!(out, "independent  {}", join(independent))?;
        }
    }
    Ok(MEMBER)
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}
