use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cyclesplit::betti::{
    ek_check_with, graded_betti_ideal_with, graded_betti_with, render_paper_table,
    wheel_formula_betti_with, BettiOptions, BettiTable, EkReport, DEFAULT_MAX_VARS,
};
use cyclesplit::graph::{
    induced_chordless_cycles, make_cycle_partition, parse_graph, wheel_graph, CyclePartition, Graph,
};
use cyclesplit::monomial::parse_ideal;
use cyclesplit::report::{analyze, AnalysisOptions, AnalysisReport};
use cyclesplit::splitting::{certify, CertifyOptions, SplitCertificate};
use cyclesplit::Error;

#[derive(Parser)]
#[command(
    name = "cyclesplit",
    version,
    about = "Splitting cycles of edge ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the induced chordless cycles of a graph.
    Cycles {
        /// Graph file (edge list or JSON); `-` reads standard input.
        input: PathBuf,
        #[arg(long, default_value_t = 4)]
        min_k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether a cycle splits the edge ideal.
    Split {
        input: PathBuf,
        /// Cycle vertices in order, comma separated.
        #[arg(long, value_delimiter = ',')]
        cycle: Option<Vec<String>>,
        /// Search all lcm-valid functions when the degree hypothesis fails.
        #[arg(long)]
        search: bool,
        /// Largest J∩K handled by exhaustive subset checks.
        #[arg(long, alias = "max-subsets")]
        max_generators: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Graded Betti numbers of an edge ideal or of a square-free ideal.
    Betti {
        /// Graph file; not needed with --ideal.
        input: Option<PathBuf>,
        /// Generators such as "u1*u2*w1, u2*u3*w1".
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
        /// Maximum number of variables.
        #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
        cap: usize,
    },
    /// Compare total Betti numbers of I with those of J, K and J∩K.
    CheckEk {
        input: PathBuf,
        #[arg(long, value_delimiter = ',')]
        cycle: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
        cap: usize,
    },
    /// Betti numbers of the wheel on 2k+1 vertices from the closed form.
    Wheel {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        k: u64,
        /// Also compute the wheel directly and compare.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
        #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
        cap: usize,
    },
    /// Full report for every induced chordless cycle.
    Analyze {
        input: PathBuf,
        #[arg(long, default_value_t = 4)]
        min_k: usize,
        /// Skip the exhaustive search when the degree hypothesis fails.
        #[arg(long)]
        no_search: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
        cap: usize,
    },
}

enum Failure {
    Input(String),
    Cap(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            Error::AmbiguousAssignment(_) | Error::UnclassifiedGenerator(_) | Error::Json(_) => {
                Failure::Internal(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    let parsed =
        parse_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    for w in &parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed.graph)
}

/// The named cycle, or the only one when none is named.
fn select_cycle(g: &Graph, cycle: &Option<Vec<String>>) -> Result<CyclePartition, Failure> {
    if let Some(names) = cycle {
        return Ok(make_cycle_partition(g, names)?);
    }
    let mut all = induced_chordless_cycles(g, 4);
    match all.len() {
        1 => Ok(all.remove(0)),
        0 => Err(Failure::Input(
            "the graph has no induced chordless cycle of length >= 4".into(),
        )),
        n => Err(Failure::Input(format!(
            "the graph has {n} induced chordless cycles; choose one with --cycle"
        ))),
    }
}

fn json<T: serde::Serialize>(value: &T) -> Outcome {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Internal(e.to_string()))
}

fn betti_options(cap: usize) -> BettiOptions {
    BettiOptions {
        max_vars: cap,
        ..Default::default()
    }
}

fn cmd_cycles(input: &PathBuf, min_k: usize, format: Format) -> Outcome {
    let g = read_graph(input)?;
    let cycles = induced_chordless_cycles(&g, min_k);
    match format {
        Format::Json => json(&cycles.iter().map(|c| c.cycle_names()).collect::<Vec<_>>()),
        Format::Text => Ok(cycles.iter().map(|c| c.label() + "\n").collect()),
    }
}

fn render_certificate(cert: &SplitCertificate) -> String {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut s = String::new();
    let _ = writeln!(s, "cycle: ({})", cert.cycle.join(","));
    match &cert.hypothesis_violation {
        None => s.push_str("degree hypothesis: holds\n"),
        Some([a, b]) => {
            let _ = writeln!(s, "degree hypothesis: fails at {a} {b}");
        }
    }
    let _ = writeln!(s, "J and K nonzero: {}", yes_no(cert.nonzero_parts));
    let _ = writeln!(s, "generators of J∩K: {}", cert.intersection_generators);
    let _ = writeln!(s, "condition (a): {}", yes_no(cert.condition_a));
    let _ = writeln!(s, "condition (b): {}", yes_no(cert.condition_b));
    if let Some(w) = &cert.witness {
        let subset: Vec<String> = w.subset.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "witness: S = {{{}}}", subset.join(", "));
        let _ = writeln!(s, "  lcm(S)      = {}", w.lcm);
        let _ = writeln!(s, "  lcm(phi(S)) = {}", w.lcm_phi);
        let _ = writeln!(s, "  lcm(psi(S)) = {}", w.lcm_psi);
    }
    let _ = writeln!(s, "verdict: {}", cert.verdict.as_str());
    if let Some(sf) = &cert.splitting_function {
        s.push_str("splitting function:\n");
        for a in sf.assignments() {
            let _ = writeln!(s, "  {} -> ({}, {})", a.w, a.phi, a.psi);
        }
    }
    s
}

fn cmd_split(
    input: &PathBuf,
    cycle: &Option<Vec<String>>,
    search: bool,
    max_generators: Option<usize>,
    format: Format,
) -> Outcome {
    let g = read_graph(input)?;
    let cp = select_cycle(&g, cycle)?;
    let mut opts = CertifyOptions {
        search,
        ..Default::default()
    };
    if let Some(n) = max_generators {
        opts.max_verify_generators = n;
        opts.max_search_generators = n;
    }
    let cert = certify(&g, &cp, &opts)?;
    match format {
        Format::Json => json(&cert),
        Format::Text => Ok(render_certificate(&cert)),
    }
}

fn cmd_betti(
    input: &Option<PathBuf>,
    ideal: &Option<String>,
    format: TableFormat,
    cap: usize,
) -> Outcome {
    let opts = betti_options(cap);
    let table = match (input, ideal) {
        (_, Some(text)) => graded_betti_ideal_with(&parse_ideal(text)?, &opts)?,
        (Some(path), None) => graded_betti_with(&read_graph(path)?, &opts)?,
        (None, None) => return Err(Failure::Input("give a graph file or --ideal".into())),
    };
    render_table(&table, format)
}

fn render_table(t: &BettiTable, format: TableFormat) -> Outcome {
    match format {
        TableFormat::Json => serde_json::to_string(t)
            .map(|s| s + "\n")
            .map_err(|e| Failure::Internal(e.to_string())),
        TableFormat::Table => Ok(render_paper_table(t)),
    }
}

fn render_ek(r: &EkReport) -> String {
    let mut s = String::new();
    for (name, t) in [
        ("β(I)", &r.tables.i),
        ("β(J)", &r.tables.j),
        ("β(K)", &r.tables.k),
        ("β(J∩K)", &r.tables.jk),
    ] {
        let _ = writeln!(s, "{name}");
        s.push_str(&render_paper_table(t));
        s.push('\n');
    }
    s.push_str("column  β_i(I)  β_i(J)+β_i(K)+β_{i-1}(J∩K)\n");
    for c in &r.columns {
        let mark = if c.equal { "✓" } else { "✗" };
        let _ = writeln!(s, "{:<7} {:<7} {:<27} {mark}", c.i + 1, c.lhs, c.rhs);
    }
    let _ = writeln!(s, "formula holds: {}", if r.overall { "yes" } else { "no" });
    let _ = writeln!(
        s,
        "graded comparison (informational): {}",
        if r.graded_overall { "equal" } else { "differs" }
    );
    s
}

fn cmd_check_ek(
    input: &PathBuf,
    cycle: &Option<Vec<String>>,
    format: Format,
    cap: usize,
) -> Outcome {
    let g = read_graph(input)?;
    let cp = select_cycle(&g, cycle)?;
    let report = ek_check_with(&g, &cp, &betti_options(cap))?;
    match format {
        Format::Json => json(&report),
        Format::Text => Ok(render_ek(&report)),
    }
}

fn cmd_wheel(k: usize, verify: bool, format: TableFormat, cap: usize) -> Outcome {
    let opts = betti_options(cap);
    let formula = wheel_formula_betti_with(k, &opts)?;
    let direct = if verify {
        Some(graded_betti_with(&wheel_graph(k), &opts)?)
    } else {
        None
    };
    let matched = direct.as_ref().map(|d| *d == formula);
    let out = match format {
        TableFormat::Json => {
            let v = serde_json::json!({
                "k": k,
                "formula": formula,
                "direct": direct,
                "match": matched,
            });
            serde_json::to_string(&v).map_err(|e| Failure::Internal(e.to_string()))? + "\n"
        }
        TableFormat::Table => {
            let mut s = render_paper_table(&formula);
            if let Some(d) = &direct {
                if *d == formula {
                    s.push_str("match\n");
                } else {
                    s.push_str("mismatch; direct computation:\n");
                    s.push_str(&render_paper_table(d));
                }
            }
            s
        }
    };
    match matched {
        Some(false) => {
            print!("{out}");
            Err(Failure::Internal(
                "formula and direct computation differ".into(),
            ))
        }
        _ => Ok(out),
    }
}

fn render_report(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "graph: {} vertices, {} edges; {} induced chordless cycle(s)",
        r.graph.vertex_count,
        r.graph.edge_count,
        r.cycles.len()
    );
    for c in &r.cycles {
        s.push('\n');
        let gens: Vec<String> = c
            .intersection
            .generators()
            .iter()
            .map(ToString::to_string)
            .collect();
        let _ = writeln!(s, "J∩K = <{}>", gens.join(", "));
        s.push_str(&render_certificate(&c.certificate));
        s.push('\n');
        s.push_str(&render_ek(&c.ek));
    }
    s
}

fn cmd_analyze(
    input: &PathBuf,
    min_k: usize,
    no_search: bool,
    format: Format,
    cap: usize,
) -> Outcome {
    let g = read_graph(input)?;
    let opts = AnalysisOptions {
        min_k,
        certify: CertifyOptions {
            search: !no_search,
            ..Default::default()
        },
        betti: betti_options(cap),
    };
    let report = analyze(&g, &opts)?;
    match format {
        Format::Json => json(&report),
        Format::Text => Ok(render_report(&report)),
    }
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Cycles {
            input,
            min_k,
            format,
        } => cmd_cycles(input, *min_k, *format),
        Command::Split {
            input,
            cycle,
            search,
            max_generators,
            format,
        } => cmd_split(input, cycle, *search, *max_generators, *format),
        Command::Betti {
            input,
            ideal,
            format,
            cap,
        } => cmd_betti(input, ideal, *format, *cap),
        Command::CheckEk {
            input,
            cycle,
            format,
            cap,
        } => cmd_check_ek(input, cycle, *format, *cap),
        Command::Wheel {
            k,
            verify,
            format,
            cap,
        } => cmd_wheel(*k as usize, *verify, *format, *cap),
        Command::Analyze {
            input,
            min_k,
            no_search,
            format,
            cap,
        } => cmd_analyze(input, *min_k, *no_search, *format, *cap),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
