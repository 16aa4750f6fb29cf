//! `listcol`: solve, classify and transform list-colouring instances.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use listcol::choosability::{choosability_peel, is_choosable, Verdict};
use listcol::families::{named_graph, parse_family};
use listcol::io::{parse_instance, write_instance, RunReport};
use listcol::reductions::{
    build_3p1_instance, build_3reg_case1, build_3reg_case2, build_4reg_instance, build_butterfly_safe,
    build_girth_lift, build_pendant_clique, build_pendant_precolour, make_gadget, minimize_counterexample,
    pick_edge, verify_reduction_with_budget, Construction, CounterexamplePair, GadgetSpec, Outcome,
    ReductionCertificate, SyntheticGadget, DEFAULT_VERIFY_BUDGET,
};
use listcol::solvers::{
    classify, classify_and_solve, solve_2list, solve_degree_lists, solve_exact_with_budget, solve_gallai_tree,
    solve_max_degree2, solve_precolouring_extension, SolveResult, Status,
};
use listcol::structure::{structure_report, Pattern};
use listcol::{check_colouring, ColourSet, Error, Graph, Instance};

#[derive(Parser)]
#[command(name = "listcol", version, about = "List colouring solvers, choosability checks and hardness gadgets")]
struct Cli {
    /// Append the report as a JSON block.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Exact,
    #[value(name = "2list")]
    TwoList,
    Deg2,
    Gallai,
    Degree,
    Precol,
}

#[derive(Subcommand)]
enum Command {
    /// Find a colouring respecting the lists.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Node budget for the exact search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Report which polynomial case applies, if any.
    Classify { file: PathBuf },
    /// Decide l-choosability by enumerating canonical list assignments.
    Choosable {
        #[arg(required_unless_present = "family", conflicts_with = "family")]
        file: Option<PathBuf>,
        /// Graph name such as K4, C5, W6, K2,3 or grid3x3.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        ell: usize,
        /// Maximum number of assignments to test.
        #[arg(long)]
        budget: Option<u64>,
        /// Delete vertices of degree below l first.
        #[arg(long)]
        peel: bool,
    },
    /// Apply a hardness construction to a seed instance.
    Reduce {
        builder: String,
        seed: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Certificate path; defaults to the output path plus `.cert`.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Girth bound for girth-lift.
        #[arg(long)]
        p: Option<usize>,
        /// Longest forbidden cycle length.
        #[arg(long)]
        r: Option<usize>,
        /// Palette size for the pendant constructions.
        #[arg(long)]
        k: Option<usize>,
        /// Built-in gadget name.
        #[arg(long, conflicts_with = "counterexample")]
        gadget: Option<String>,
        /// Instance file holding a non-colourable regular pair; it is
        /// minimized and cut into a gadget.
        #[arg(long)]
        counterexample: Option<PathBuf>,
    },
    /// Audit a construction output against its certificate.
    Verify {
        seed: PathBuf,
        output: PathBuf,
        cert: PathBuf,
        #[arg(long, default_value_t = DEFAULT_VERIFY_BUDGET)]
        budget: u64,
    },
    /// Structural facts and forbidden-subgraph tests.
    Check {
        file: PathBuf,
        /// Comma-separated: triangle, c3..c6, butterfly, k1r:R.
        #[arg(long, value_delimiter = ',')]
        patterns: Vec<String>,
    },
    /// Write a named graph as an instance document.
    Gen {
        #[arg(long)]
        family: String,
        /// Integer parameters, e.g. `--params 5,5` for grid.
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        /// Give every vertex the list {1..k}.
        #[arg(long, default_value_t = 3)]
        palette: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Io(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 3,
            Failure::Lib(Error::Parse { .. }) => 4,
            Failure::Lib(Error::Input(_)) => 5,
            Failure::Lib(Error::BudgetExceeded(_)) => 6,
            Failure::Lib(Error::Consistency(_)) => 7,
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> Run<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Run<()> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Run<Instance> {
    parse_instance(&read(path)?).map_err(|e| match e {
        Error::Parse { line, msg } => Failure::Lib(Error::Parse {
            line,
            msg: format!("{}: {msg}", path.display()),
        }),
        other => Failure::Lib(other),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli.command) {
        Ok(mut report) => {
            if cli.timings {
                report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            if cli.json {
                print!("{}", report.to_text_with_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Io(m) => eprintln!("error: {m}"),
                Failure::Lib(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(cmd: &Command) -> Run<RunReport> {
    match cmd {
        Command::Solve { file, method, budget } => solve(&load(file)?, *method, *budget),
        Command::Classify { file } => {
            let inst = load(file)?;
            let d = classify(&inst)?;
            let mut r = RunReport::new("classify", d.classification.cited());
            r.method = Some(d.method.name().into());
            r.cited = Some(d.cited.clone());
            let f = &d.features;
            r.field("n", f.n).field("m", f.m).field("max_degree", f.max_degree);
            r.field("list_sizes", format!("{}..{}", f.min_list, f.max_list));
            r.field("planar", f.planar).field("bipartite", f.bipartite);
            r.field("gallai_components", format!("{}/{}", f.gallai_components, f.components));
            for g in &d.guarantees {
                r.field("guarantee", g);
            }
            for h in &d.hardness {
                r.field("hardness", h);
            }
            r.field("features", serde_json::to_string(f).expect("features serialize"));
            Ok(r)
        }
        Command::Choosable {
            file,
            family,
            ell,
            budget,
            peel,
        } => {
            let g = match (file, family) {
                (Some(f), _) => load(f)?.graph,
                (None, Some(name)) => parse_family(name)?,
                (None, None) => unreachable!("clap requires one of file and family"),
            };
            let g = if *peel { choosability_peel(&g, *ell) } else { g };
            let res = is_choosable(&g, *ell, *budget)?;
            let mut r = RunReport::new(
                "choosable",
                if res.is_choosable() { "choosable" } else { "not-choosable" },
            );
            r.field("n", g.n()).field("ell", ell).field("assignments_tested", res.assignments_tested);
            if let Verdict::NotChoosable(w) = &res.verdict {
                let lists: Vec<String> = w.iter().map(ToString::to_string).collect();
                r.field("witness", lists.join(" "));
            }
            Ok(r)
        }
        Command::Reduce {
            builder,
            seed,
            output,
            cert,
            p,
            r,
            k,
            gadget,
            counterexample,
        } => {
            let construction: Construction = builder.parse()?;
            let seed_inst = load(seed)?;
            let gadget = if construction.needs_gadget() {
                Some(load_gadget(construction, gadget.as_deref(), counterexample.as_deref())?)
            } else {
                None
            };
            let need = |v: Option<usize>, name: &str| {
                v.ok_or_else(|| Failure::Lib(Error::Input(format!("{construction} needs --{name}"))))
            };
            let r_or = |d: usize| r.unwrap_or(d);
            let gd = || gadget.as_ref().expect("gadget loaded");
            let (out, certificate) = match construction {
                Construction::GirthLift => build_girth_lift(&seed_inst, need(*p, "p")?)?,
                Construction::ThreeRegCase1 => build_3reg_case1(&seed_inst.graph, gd(), r_or(3))?,
                Construction::ThreeRegCase2 => build_3reg_case2(&seed_inst, gd(), r_or(3))?,
                Construction::FourReg => build_4reg_instance(&seed_inst, gd(), r_or(3))?,
                Construction::ButterflySafe => build_butterfly_safe(&seed_inst, gd(), r_or(5))?,
                Construction::PendantPrecolour => {
                    let (g, pre, c) = build_pendant_precolour(&seed_inst.graph, k.unwrap_or(4))?;
                    (Instance::precolouring_extension(g, pre)?, c)
                }
                Construction::PendantClique => build_pendant_clique(&seed_inst.graph, k.unwrap_or(4))?,
                Construction::ThreeP1 => build_3p1_instance(&seed_inst)?,
            };
            let cert_path = cert.clone().unwrap_or_else(|| {
                let mut s = output.clone().into_os_string();
                s.push(".cert");
                PathBuf::from(s)
            });
            write(output, &write_instance(&out))?;
            write(&cert_path, &certificate.to_json())?;
            let mut rep = RunReport::new("reduce", "built");
            rep.method = Some(construction.name().into());
            rep.field("seed_n", seed_inst.n()).field("n", out.n()).field("m", out.graph.m());
            for (key, v) in &certificate.params {
                rep.field(format!("param {key}"), v);
            }
            if let Some(g) = &certificate.gadget {
                rep.field("gadget_t", g.t_set.to_string());
            }
            rep.field("copies", certificate.copies.len());
            let claims: Vec<String> = certificate.claims.iter().map(|c| c.name()).collect();
            rep.field("claims", claims.join(", "));
            rep.field("output", output.display()).field("certificate", cert_path.display());
            Ok(rep)
        }
        Command::Verify {
            seed,
            output,
            cert,
            budget,
        } => {
            let seed = load(seed)?;
            let out = load(output)?;
            let certificate = ReductionCertificate::from_json(&read(cert)?)?;
            let report = verify_reduction_with_budget(&seed, &out, &certificate, Some(*budget));
            let mut r = RunReport::new("verify", report.verdict());
            r.method = Some(certificate.construction.name().into());
            for (name, outcome) in &report.items {
                r.check(name.clone(), outcome.to_string());
            }
            let failed = report.items.iter().filter(|(_, o)| matches!(o, Outcome::Fail(_))).count();
            r.field("failed", failed);
            Ok(r)
        }
        Command::Check { file, patterns } => {
            let inst = load(file)?;
            let pats = patterns
                .iter()
                .map(|p| p.parse::<Pattern>())
                .collect::<Result<Vec<_>, _>>()?;
            let s = structure_report(&inst.graph, &pats)?;
            let found = s.forbidden.values().any(|&b| b);
            let mut r = RunReport::new("check", if found { "pattern-found" } else { "clean" });
            r.field("n", inst.n()).field("m", inst.graph.m()).field("max_degree", s.max_degree);
            r.field("girth", s.girth.map_or("infinite".to_string(), |g| g.to_string()));
            r.field("planar", s.planar).field("bipartite", s.bipartite);
            r.field("two_connected", s.two_connected);
            r.field("intersecting_triangles", s.intersecting_triangles);
            for (name, present) in &s.forbidden {
                r.check(name.clone(), if *present { "present" } else { "absent" });
            }
            Ok(r)
        }
        Command::Gen {
            family,
            params,
            palette,
            output,
        } => {
            let g: Graph = if params.is_empty() {
                parse_family(family)?
            } else {
                named_graph(family, params)?
            };
            if *palette == 0 {
                return Err(Failure::Lib(Error::Input("palette must be positive".into())));
            }
            let inst = Instance::uniform(g, ColourSet::palette(*palette))?;
            let text = write_instance(&inst);
            let mut r = RunReport::new("gen", "generated");
            r.field("n", inst.n()).field("m", inst.graph.m());
            match output {
                Some(path) => {
                    write(path, &text)?;
                    r.field("output", path.display());
                }
                None => {
                    r.field("instance", text.trim_end().replace('\n', " / "));
                }
            }
            Ok(r)
        }
    }
}

fn load_gadget(c: Construction, name: Option<&str>, file: Option<&Path>) -> Run<GadgetSpec> {
    if let Some(path) = file {
        let inst = load(path)?;
        let pair = CounterexamplePair::new(inst.graph, inst.lists)?;
        let pair = minimize_counterexample(&pair)?;
        let e = pick_edge(&pair).ok_or_else(|| Error::Input("counterexample has no edges".into()))?;
        return Ok(make_gadget(&pair, e)?);
    }
    let default = match c {
        Construction::ThreeRegCase1 => SyntheticGadget::Diamond,
        Construction::ThreeRegCase2 => SyntheticGadget::ThreeRegT2,
        Construction::FourReg => SyntheticGadget::FourRegT2,
        _ => SyntheticGadget::SparseT2,
    };
    let kind = match name {
        Some(n) => n.parse()?,
        None => default,
    };
    Ok(kind.build()?)
}

fn solve(inst: &Instance, method: MethodArg, budget: Option<u64>) -> Run<RunReport> {
    let mut cited = None;
    let res: SolveResult = match method {
        MethodArg::Auto => {
            let (d, res) = classify_and_solve(inst)?;
            cited = Some(d.cited);
            res
        }
        MethodArg::Exact => solve_exact_with_budget(inst, budget)?,
        MethodArg::TwoList => solve_2list(inst)?,
        MethodArg::Deg2 => solve_max_degree2(inst)?,
        MethodArg::Gallai => solve_gallai_tree(inst)?,
        MethodArg::Degree => solve_degree_lists(inst)?,
        MethodArg::Precol => {
            let Some(pre) = &inst.precolouring else {
                return Err(Error::Input("precol needs `p` lines and a palette k".into()).into());
            };
            if !inst.is_palette_instance() {
                return Err(Error::Input("precol needs every list equal to {1..k}".into()).into());
            }
            solve_precolouring_extension(&inst.graph, pre, pre.k)?
        }
    };
    let verdict = match &res.status {
        Status::Colourable(_) => "colourable",
        Status::Infeasible => "infeasible",
    };
    let mut r = RunReport::new("solve", verdict);
    r.method = Some(res.method.name().into());
    r.cited = cited;
    if let Status::Colourable(c) = &res.status {
        if !check_colouring(inst, c)? {
            return Err(Error::Consistency(format!("{} returned an invalid colouring", res.method)).into());
        }
        r.colouring = Some(c.clone());
    }
    r.field("n", inst.n()).field("m", inst.graph.m());
    r.field("nodes", res.stats.nodes).field("block_solves", res.stats.block_solves);
    r.field("fallback_components", res.stats.fallback_components);
    Ok(r)
}
