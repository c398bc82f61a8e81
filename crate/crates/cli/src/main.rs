//! `tournament`: command-line front end for tournament-solutions.
//!
//! Exit codes: 0 on success, 1 when a verification fails or a scan finds a
//! witness, 2 on usage, input or parse errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tournament_solutions::construction::{
    self, build_t36, build_t36_variant, is_paper_layout, label, random_orientations,
};
use tournament_solutions::io::{export_dot, format_tournament, fraction, parse_tournament, report_to_json};
use tournament_solutions::search::{random_tournament, scan_separation, ScanConfig, ScanMode};
use tournament_solutions::solutions::{banks_member_with_witness, bipartisan_set, dominance_order};
use tournament_solutions::symmetry::orbits;
use tournament_solutions::verify::{verify_theorem, verify_variant, CheckStatus};
use tournament_solutions::{Rule, Tournament};

#[derive(Parser)]
#[command(name = "tournament", version, about = "Tournament solutions with exact equilibria")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a tournament file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Compute a solution concept and print its members.
    Solve {
        /// Tournament file; stdin when omitted or `-`.
        file: Option<PathBuf>,
        #[arg(long, value_parser = parse_rule)]
        rule: Rule,
        /// For `banks`, print a maximal transitive chain topped by each member.
        #[arg(long)]
        witness: bool,
    },
    /// Check every claim about the order-36 construction.
    VerifyPaper {
        /// Tournament file to check instead of the built-in construction.
        file: Option<PathBuf>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Look for tournaments on which two rules choose disjoint sets.
    Scan(ScanArgs),
    /// Graphviz export.
    ExportDot {
        file: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Skip the block/triangle clusters for the order-36 construction.
        #[arg(long)]
        no_clusters: bool,
    },
    /// Orbits of the four construction automorphisms.
    Orbits { file: Option<PathBuf> },
}

#[derive(Subcommand)]
enum GenKind {
    /// The order-36 construction, optionally with seeded random orientations
    /// of the nine outer small triangles.
    Paper36 {
        #[arg(long)]
        variant_seed: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A uniformly random labeled tournament.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

#[derive(Args)]
struct ScanArgs {
    /// Two rules separated by a comma, e.g. `banks,bp`.
    #[arg(long)]
    rules: String,
    #[arg(long)]
    max_order: usize,
    /// Defaults to 1 in exhaustive mode and to `--max-order` in random mode.
    #[arg(long)]
    min_order: Option<usize>,
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write each witness as a tournament file into this directory.
    #[arg(long)]
    witness_dir: Option<PathBuf>,
}

fn parse_rule(s: &str) -> Result<Rule, String> {
    s.parse::<Rule>().map_err(|e| e.to_string())
}

/// Failure with an exit code and a message for stderr.
struct Failure(u8, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

type CliResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Gen { kind } => gen(kind),
        Command::Solve { file, rule, witness } => solve(file.as_deref(), rule, witness),
        Command::VerifyPaper { file, report } => verify_paper(file.as_deref(), report.as_deref()),
        Command::Scan(args) => scan(args),
        Command::ExportDot { file, output, no_clusters } => {
            let t = load(file.as_deref())?;
            emit(output.as_deref(), &export_dot(&t, !no_clusters))?;
            Ok(0)
        }
        Command::Orbits { file } => show_orbits(file.as_deref()),
    }
}

fn load(path: Option<&Path>) -> Result<Tournament, Failure> {
    let (name, text) = match path {
        Some(p) if p != Path::new("-") => (
            p.display().to_string(),
            fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?,
        ),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
            ("<stdin>".to_string(), s)
        }
    };
    parse_tournament(&text).map_err(|e| usage(format!("{name}: {e}")))
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display())))
        }
        _ => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| usage(format!("stdout: {e}"))),
    }
}

fn gen(kind: GenKind) -> CliResult {
    let (t, output) = match kind {
        GenKind::Paper36 { variant_seed, output } => {
            let t = match variant_seed {
                None => build_t36(),
                Some(seed) => build_t36_variant(&random_orientations(seed)).map_err(|e| usage(e.to_string()))?,
            };
            (t, output)
        }
        GenKind::Random { n, seed, output } => {
            (random_tournament(n, seed).map_err(|e| usage(e.to_string()))?, output)
        }
    };
    emit(output.as_deref(), &format_tournament(&t))?;
    Ok(0)
}

fn name_of(t: &Tournament, paper: bool, x: usize) -> String {
    debug_assert!(x < t.order());
    if paper {
        format!("{} {x}", label(x))
    } else {
        x.to_string()
    }
}

fn solve(path: Option<&Path>, rule: Rule, witness: bool) -> CliResult {
    let t = load(path)?;
    let paper = is_paper_layout(&t);
    let mut out = String::new();
    match rule {
        Rule::Bipartisan => {
            let (support, lottery) = bipartisan_set(&t).map_err(|e| Failure(1, e.to_string()))?;
            for x in &support {
                out.push_str(&format!("{} p={}\n", name_of(&t, paper, x), fraction(lottery.weight(x))));
            }
        }
        Rule::Banks if witness => {
            for x in 0..t.order() {
                let outcome = banks_member_with_witness(&t, x).map_err(|e| usage(e.to_string()))?;
                if let Some(b) = outcome.witness {
                    let chain: Vec<String> =
                        dominance_order(&t, &b.with(x)).iter().map(usize::to_string).collect();
                    out.push_str(&format!("{} chain={}\n", name_of(&t, paper, x), chain.join(">")));
                }
            }
        }
        _ => {
            let set = rule.apply(&t).map_err(|e| Failure(1, e.to_string()))?;
            for x in &set {
                out.push_str(&name_of(&t, paper, x));
                out.push('\n');
            }
        }
    }
    emit(None, &out)?;
    Ok(0)
}

fn verify_paper(path: Option<&Path>, report_path: Option<&Path>) -> CliResult {
    let t = match path {
        Some(_) => load(path)?,
        None => build_t36(),
    };
    if t.order() != construction::ORDER {
        return Err(usage(format!("verify-paper needs an order-36 tournament, got order {}", t.order())));
    }
    let variant = t != build_t36() && is_paper_layout(&t);
    let report = if variant { verify_variant(&t) } else { verify_theorem(&t) }.map_err(|e| usage(e.to_string()))?;
    let mut out = String::new();
    for c in &report.checks {
        let tag = match c.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "SKIP",
        };
        out.push_str(&format!("[{tag}] {} {}: {}\n", c.id, c.name, c.summary));
    }
    out.push_str(if report.passed { "all checks passed\n" } else { "verification failed\n" });
    emit(None, &out)?;
    if let Some(p) = report_path {
        emit(Some(p), &(report_to_json(&report) + "\n"))?;
    }
    Ok(if report.passed { 0 } else { 1 })
}

fn scan(args: ScanArgs) -> CliResult {
    let rules: Vec<Rule> = args
        .rules
        .split(',')
        .map(|r| r.parse::<Rule>().map_err(|e| usage(e.to_string())))
        .collect::<Result<_, _>>()?;
    let [a, b] = rules[..] else {
        return Err(usage("--rules takes exactly two rules, e.g. banks,bp"));
    };
    let (mode, default_min) = match args.mode {
        Mode::Exhaustive => (ScanMode::Exhaustive, 1),
        Mode::Random => (ScanMode::Random, args.max_order),
    };
    let cfg = ScanConfig {
        rules: (a, b),
        min_order: args.min_order.unwrap_or(default_min),
        max_order: args.max_order,
        mode,
        samples: args.samples,
        seed: args.seed,
    };
    let outcome = scan_separation(&cfg).map_err(|e| usage(e.to_string()))?;
    let mut out = String::new();
    for o in &outcome.orders {
        let labeled = o.labeled.map_or_else(String::new, |l| format!("labeled {l}, "));
        let unit = if matches!(mode, ScanMode::Exhaustive) { "classes" } else { "samples" };
        out.push_str(&format!("order {}: {labeled}{unit} {}, witnesses {}\n", o.order, o.examined, o.witnesses));
    }
    for (i, w) in outcome.witnesses.iter().enumerate() {
        out.push_str(&format!("witness {i}: order {} {a}={} {b}={}\n", w.tournament.order(), w.first, w.second));
        if let Some(dir) = &args.witness_dir {
            fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
            emit(Some(&dir.join(format!("witness_{i}.txt"))), &format_tournament(&w.tournament))?;
        }
    }
    out.push_str(&format!("{} witnesses for {a} vs {b}\n", outcome.witnesses.len()));
    emit(None, &out)?;
    Ok(if outcome.witnesses.is_empty() { 0 } else { 1 })
}

fn show_orbits(path: Option<&Path>) -> CliResult {
    let t = load(path)?;
    if t.order() != construction::ORDER {
        return Err(usage("orbits is only defined for the order-36 construction"));
    }
    let found = orbits(&t, &construction::generators())
        .map_err(|e| usage(format!("{e}; orbits needs the order-36 construction")))?;
    let mut out = String::new();
    for (i, o) in found.iter().enumerate() {
        let members: Vec<String> = o.iter().map(|x| format!("{}({x})", label(x))).collect();
        out.push_str(&format!("orbit {i} size {}: {}\n", o.len(), members.join(" ")));
    }
    emit(None, &out)?;
    Ok(0)
}
