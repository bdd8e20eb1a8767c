//! Batch command-line front end: generate instances, solve cuts, build
//! flow-equivalent trees, analyze family redundancy, run the proof
//! certificates, build and query evaluation schemes, and run the
//! weight-recovery attack.
//!
//! Exit codes: 0 success, 1 contract/parse/domain errors (message on
//! stderr), 2 guard refusals (input too large for exact enumeration).

mod literal;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cutlab::attack;
use cutlab::certify::{self, PolyKind};
use cutlab::construct::ConstructionSpec;
use cutlab::error::{Error, Result};
use cutlab::exec::with_jobs;
use cutlab::family::{analyze, FamilyKind, RedundancyReport};
use cutlab::gomory_hu;
use cutlab::io::{graph_to_string, load_graph};
use cutlab::scheme::EvaluationScheme;
use cutlab::solver;
use cutlab::WeightedGraph;

#[derive(Parser)]
#[command(name = "cutlab", version, about = "graph cut redundancy toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a benchmark graph and print it in the graph file format.
    Gen(GenArgs),
    /// Solve one minimum-cut instance on a graph.
    Solve(SolveArgs),
    /// Build the flow-equivalent tree of a graph.
    Ghtree(GhtreeArgs),
    /// Enumerate a demand family, solve every instance, report distinct
    /// values and the redundancy factor as CSV.
    Analyze(AnalyzeArgs),
    /// Run the rank/span/independence certificates.
    #[command(subcommand)]
    Certify(CertifyCmd),
    /// Build or query a cut-evaluation scheme.
    #[command(subcommand)]
    Scheme(SchemeCmd),
    /// Recover the hidden weights of an adversarial instance through
    /// flow-evaluation queries only.
    Attack(AttackArgs),
}

#[derive(Args)]
struct GenArgs {
    /// group | path | matching | directed | adversarial
    kind: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    alpha: usize,
    #[arg(long, default_value_t = 2)]
    beta: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Demand literal: K:{a,..},{b,..} | S:{..} | P:(u,v);(x,y)
    #[arg(long)]
    demands: String,
}

#[derive(Args)]
struct GhtreeArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also print the distinct pairwise min-cut values.
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Family literal: groupcut:A,B | multiway:K | multicut:K
    /// (suffix the kind with `<=` for at-most sizes).
    #[arg(long)]
    family: String,
    /// Comma-separated terminal list; defaults to all vertices.
    #[arg(long)]
    terminals: Option<String>,
    /// Worker pool size; 1 is fully sequential.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CertifyCmd {
    /// Span and rank certificate for the group-cut agreement matrix.
    Group {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
    },
    /// Span and rank certificate for the multiway agreement matrix.
    Multiway {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Independence certificate for polynomial evaluation rows with
    /// strictly increasing optimal values, on a concrete graph.
    Poly {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        family: String,
        #[arg(long)]
        terminals: Option<String>,
    },
}

#[derive(Subcommand)]
enum SchemeCmd {
    /// Preprocess a graph and family into a scheme file.
    Build {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        family: String,
        #[arg(long)]
        terminals: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Answer a query from a scheme file alone.
    Query {
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long)]
        demands: String,
    },
}

#[derive(Args)]
struct AttackArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Guard(_) => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::Gen(args) => gen(args),
        Command::Solve(args) => solve(args),
        Command::Ghtree(args) => ghtree(args),
        Command::Analyze(args) => analyze_cmd(args),
        Command::Certify(cmd) => certify_cmd(cmd),
        Command::Scheme(cmd) => scheme_cmd(cmd),
        Command::Attack(args) => attack_cmd(args),
    }
}

fn read_graph(path: &PathBuf) -> Result<WeightedGraph> {
    load_graph(fs::File::open(path)?)
}

fn emit(text: &str, out: Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text)?;
        }
        None => {
            print!("{text}");
            std::io::stdout().flush()?;
        }
    }
    Ok(())
}

fn terminals_or_all(spec: &Option<String>, n: usize) -> Result<Vec<usize>> {
    match spec {
        Some(text) => literal::parse_vertex_list(text),
        None => Ok((0..n).collect()),
    }
}

fn gen(args: GenArgs) -> Result<()> {
    let (spec, header) = match args.kind.as_str() {
        "group" => (
            ConstructionSpec::GroupLb {
                n: args.n,
                alpha: args.alpha,
                beta: args.beta,
            },
            format!("gen group --n {} --alpha {} --beta {}", args.n, args.alpha, args.beta),
        ),
        "path" => (
            ConstructionSpec::PathLb { n: args.n },
            format!("gen path --n {}", args.n),
        ),
        "matching" => (
            ConstructionSpec::MatchingLb { n: args.n },
            format!("gen matching --n {}", args.n),
        ),
        "directed" => (
            ConstructionSpec::DirectedBipartite { n: args.n },
            format!("gen directed --n {}", args.n),
        ),
        "adversarial" => (
            ConstructionSpec::Adversarial {
                n: args.n,
                seed: args.seed,
            },
            format!("gen adversarial --n {} --seed {}", args.n, args.seed),
        ),
        other => {
            return Err(Error::domain(format!(
                "unknown generator {other:?}; expected group | path | matching | directed | adversarial"
            )))
        }
    };
    let graph = spec.generate()?;
    emit(&graph_to_string(&graph, &[header]), args.out)
}

fn solve(args: SolveArgs) -> Result<()> {
    let g = read_graph(&args.graph)?;
    let demands = literal::parse_demands(&args.demands, g.is_directed())?;
    if g.is_directed() {
        let value = solver::directed_mincut(&g, &demands)?;
        println!("value={value}");
        return Ok(());
    }
    let res = solver::solve(&g, &demands)?;
    println!("value={}", res.value);
    println!("partition={}", res.partition);
    Ok(())
}

fn ghtree(args: GhtreeArgs) -> Result<()> {
    let g = read_graph(&args.graph)?;
    let tree = gomory_hu::build_gh_tree(&g)?;
    emit(
        &graph_to_string(&tree.as_graph(), &["gomory-hu tree".into()]),
        args.out,
    )?;
    if args.stats {
        let d = gomory_hu::distinct_pair_values(&g)?;
        println!("distinct={}", d.count);
        for (value, mult) in &d.values {
            println!("value={value} pairs={mult}");
        }
    }
    Ok(())
}

fn analyze_cmd(args: AnalyzeArgs) -> Result<()> {
    let g = read_graph(&args.graph)?;
    let terminals = terminals_or_all(&args.terminals, g.vertex_count())?;
    let family = literal::parse_family(&args.family, &terminals)?;
    let report = with_jobs(args.jobs, || analyze(&g, &family))?;
    let text = format!("{}\n{}\n", RedundancyReport::CSV_HEADER, report.csv_row());
    emit(&text, args.out)
}

fn certify_cmd(cmd: CertifyCmd) -> Result<()> {
    match cmd {
        CertifyCmd::Group { n, alpha, beta } => {
            let m = certify::build_group_matrix(n, alpha, beta)?;
            let mut all_ok = true;
            for v0 in 0..n {
                let rep = m.check_span(v0);
                report_claim(
                    &format!("span: rows anchored at v0={v0} span the row space"),
                    rep.ok,
                    rep.failing_row.as_deref(),
                );
                all_ok &= rep.ok;
            }
            let rank = m.rank();
            let anchored = m.anchored_rows(0).len();
            report_claim(
                &format!("rank {rank} <= anchored rows {anchored}"),
                rank <= anchored,
                None,
            );
            all_ok &= rank <= anchored;
            all_ok &= feasibility_group(&m);
            if !all_ok {
                return Err(Error::domain("certificate failed"));
            }
            Ok(())
        }
        CertifyCmd::Multiway { n, k } => {
            let m = certify::build_multiway_matrix(n, k)?;
            let mut all_ok = true;
            for v0 in 0..n {
                let rep = m.check_span(v0);
                report_claim(
                    &format!("span: rows anchored at v0={v0} span the row space"),
                    rep.ok,
                    rep.failing_row.as_deref(),
                );
                all_ok &= rep.ok;
            }
            let rank = m.rank();
            let bound = cutlab::combin::binomial(n - 1, k - 1);
            report_claim(
                &format!("rank {rank} <= C(n-1,k-1) = {bound}"),
                rank as u64 <= bound,
                None,
            );
            if !(all_ok && rank as u64 <= bound) {
                return Err(Error::domain("certificate failed"));
            }
            Ok(())
        }
        CertifyCmd::Poly {
            graph,
            family,
            terminals,
        } => {
            let g = read_graph(&graph)?;
            let terminals = terminals_or_all(&terminals, g.vertex_count())?;
            let family = literal::parse_family(&family, &terminals)?;
            let kind = match family.kind() {
                FamilyKind::GroupCut { .. } => PolyKind::Group,
                FamilyKind::Multicut { .. } => PolyKind::Multicut,
                FamilyKind::Multiway { .. } => {
                    return Err(Error::domain(
                        "poly certificates cover groupcut and multicut families",
                    ))
                }
            };
            // One demand per distinct value, sorted by value.
            let mut by_value = std::collections::BTreeMap::new();
            for d in family.enumerate() {
                let v = solver::solve(&g, &d)?.value;
                by_value.entry(v).or_insert(d);
            }
            let demands: Vec<_> = by_value.into_values().collect();
            let m = certify::build_poly_eval_matrix(&g, &demands, kind)?;
            let ok = m.check_independence();
            report_claim(
                &format!(
                    "independence: {} strictly-increasing-value rows have full rank",
                    demands.len()
                ),
                ok,
                None,
            );
            if !ok {
                return Err(Error::domain("certificate failed"));
            }
            Ok(())
        }
    }
}

fn feasibility_group(m: &certify::GroupMatrix) -> bool {
    // Entry = polynomial evaluation = agreement, checked cell by cell.
    let mut bad = None;
    'outer: for (ri, (a, b)) in m.row_labels.iter().enumerate() {
        let d = cutlab::DemandGraph::bipartite(a, b, false).expect("valid demand");
        for (ci, p) in m.columns.iter().enumerate() {
            let entry = m.matrix.row(ri).get(ci);
            let poly = certify::eval_poly(&d, p, PolyKind::Group);
            let agree = cutlab::agrees(p, &d);
            if entry != agree || poly != agree {
                bad = Some(format!("row (A={a:?}, B={b:?}) column {p}"));
                break 'outer;
            }
        }
    }
    report_claim(
        "feasibility: evaluation nonzero iff the partition agrees",
        bad.is_none(),
        bad.as_deref(),
    );
    bad.is_none()
}

fn report_claim(claim: &str, ok: bool, witness: Option<&str>) {
    if ok {
        println!("PASS {claim}");
    } else {
        match witness {
            Some(w) => println!("FAIL {claim} (first counterexample: {w})"),
            None => println!("FAIL {claim}"),
        }
    }
}

fn scheme_cmd(cmd: SchemeCmd) -> Result<()> {
    match cmd {
        SchemeCmd::Build {
            graph,
            family,
            terminals,
            jobs,
            out,
        } => {
            let g = read_graph(&graph)?;
            let terminals = terminals_or_all(&terminals, g.vertex_count())?;
            let family = literal::parse_family(&family, &terminals)?;
            let scheme = with_jobs(jobs, || cutlab::scheme::build_scheme(&g, &family))?;
            fs::write(&out, scheme.serialize())?;
            println!("entries={}", scheme.entries().len());
            println!("storage_bits={}", scheme.storage_bits());
            Ok(())
        }
        SchemeCmd::Query { scheme, demands } => {
            let scheme = EvaluationScheme::deserialize(&fs::read(&scheme)?)?;
            let demands = literal::parse_demands(&demands, false)?;
            let value = scheme.query_value(&demands)?;
            let partition = scheme.query_partition(&demands)?;
            println!("value={value}");
            println!("partition={partition}");
            Ok(())
        }
    }
}

fn attack_cmd(args: AttackArgs) -> Result<()> {
    let inst = attack::gen_adversarial(args.n, args.seed)?;
    let g = inst.to_graph();
    let mut oracle = |a: usize, b: usize, c: usize| Ok(solver::groupcut(&g, &[a, b], &[c])?.value);
    let recovered = attack::recover_weights(&mut oracle, args.n)?;
    println!("queries={}", recovered.queries);
    let diff = recovered.diff(&inst);
    if diff.is_empty() {
        println!("RECOVERED: exact");
        Ok(())
    } else {
        for (i, j, got, want) in diff {
            println!("MISMATCH ({i},{j}): recovered {got}, actual {want}");
        }
        Err(Error::Inconsistent("weight recovery mismatched".into()))
    }
}
