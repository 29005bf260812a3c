use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kn_plactic::alphabet::{format_letters, parse_word, Kind};
use kn_plactic::column::{split_column, Column};
use kn_plactic::crystal::{explore_component_with, format_elements, GenLetter, DEFAULT_COMPONENT_CAP};
use kn_plactic::generalized::{
    generalized_congruent, generalized_p_symbol_with_derivation, generalized_q_symbol, parse_gen_word, spin_split,
    GenTableau, SpinMap,
};
use kn_plactic::jdt::{rectify_traced, SkewJson, SkewTableau};
use kn_plactic::plactic::p_symbol_with_derivation;
use kn_plactic::schensted::{psi, psi_inverse, OscillatingTableau};
use kn_plactic::tableau::{Shape, TableauJson};
use kn_plactic::verify::{run_suite, suite_number, CheckOptions, SUITES};
use kn_plactic::{Error, Exec, LieKind};

#[derive(Parser)]
#[command(name = "kn-plactic", version, about = "Crystals, orthogonal tableaux and plactic monoids of types B and D")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Root system type.
    #[arg(long = "type", value_enum, global = true)]
    kind: Option<TypeArg>,
    /// Rank n, 2 ≤ n ≤ 32.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(2..=32))]
    rank: Option<u32>,
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the connected component of a highest weight vertex.
    Explore(ExploreArgs),
    /// Same as `explore --dot`.
    Dot(ExploreArgs),
    /// P-symbol of a word (spin columns allowed, written `[1 2 -3]`).
    PSymbol {
        word: Option<String>,
        /// Also print the rewriting chain.
        #[arg(long)]
        derivation: bool,
    },
    /// Q-symbol (oscillating tableau) of a word.
    QSymbol { word: Option<String> },
    /// The pair (P, Q), or the word of a pair with `--invert`.
    Schensted {
        input: Option<String>,
        /// Read `{"p": tableau, "q": [shapes]}` and print the word.
        #[arg(long)]
        invert: bool,
    },
    /// Decide plactic congruence of two words.
    Congruent { first: String, second: String },
    /// Jeu de taquin on skew orthogonal tableaux of type B.
    Jdt {
        #[command(subcommand)]
        action: JdtAction,
    },
    /// Split an admissible column, or map it to a pair of spin columns.
    Split {
        column: Option<String>,
        /// Use the spin map S (type B) or S_n (type D).
        #[arg(long)]
        spin: bool,
        /// With `--spin` in type D, use S_(n-1).
        #[arg(long, requires = "spin")]
        odd: bool,
    },
    /// Run a verification suite by name or number, or `all`.
    Check {
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

#[derive(Args)]
struct ExploreArgs {
    /// Highest weight word.
    #[arg(long)]
    hw: String,
    /// Print a DOT graph.
    #[arg(long)]
    dot: bool,
    /// Maximum number of vertices.
    #[arg(long, default_value_t = DEFAULT_COMPONENT_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum JdtAction {
    /// Rectify a skew tableau given as `{"type","rank","columns","inner"}` JSON.
    Rectify {
        input: Option<String>,
        /// Print every intermediate split grid.
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{0}")]
    Failed(String),
    #[error("reading standard input: {0}")]
    Io(#[from] io::Error),
}

type CliResult = Result<String, CliError>;

impl Global {
    fn lie_kind(&self) -> Result<LieKind, CliError> {
        let (Some(kind), Some(rank)) = (self.kind, self.rank) else {
            return Err(CliError::Usage("--type and --rank are required".into()));
        };
        let kind = match kind {
            TypeArg::B => Kind::B,
            TypeArg::D => Kind::D,
        };
        Ok(LieKind::new(kind, rank as usize)?)
    }

    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        }
    }
}

fn input_or_stdin(arg: Option<String>) -> Result<String, CliError> {
    match arg {
        Some(s) => Ok(s),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn json_line(v: Value) -> String {
    format!("{v}\n")
}

fn tableau_value(t: &GenTableau) -> Result<Value, CliError> {
    Ok(serde_json::to_value(t.to_json()?).map_err(Error::from)?)
}

fn explore(g: &Global, a: &ExploreArgs, dot: bool) -> CliResult {
    let kind = g.lie_kind()?;
    let hw = parse_gen_word(kind, &a.hw)?;
    let comp = explore_component_with(kind, &hw, a.cap, g.exec())?;
    if dot {
        return Ok(comp.to_dot());
    }
    let names: Vec<String> = comp.vertices.iter().map(|v| format_elements(v)).collect();
    if g.json {
        let edges: Vec<Value> =
            comp.edges.iter().map(|&(f, i, t)| json!({"from": names[f], "color": i, "to": names[t]})).collect();
        return Ok(json_line(json!({
            "type": kind.kind().to_string(),
            "rank": kind.rank(),
            "highest_weight": format_elements(&hw),
            "vertices": names,
            "edges": edges,
        })));
    }
    let mut out = format!("{} vertices, {} edges\n", comp.len(), comp.edges.len());
    for &(f, i, t) in &comp.edges {
        out.push_str(&format!("{} -{i}-> {}\n", names[f], names[t]));
    }
    Ok(out)
}

fn p_symbol_cmd(g: &Global, word: Option<String>, derivation: bool) -> CliResult {
    let kind = g.lie_kind()?;
    let w = parse_gen_word(kind, &input_or_stdin(word)?)?;
    let (p, chain): (GenTableau, Vec<String>) = match w.iter().map(|x| x.as_letter()).collect::<Option<Vec<_>>>() {
        Some(letters) => {
            let (p, d) = p_symbol_with_derivation(kind, &letters)?;
            (GenTableau::Plain(p), d.steps.iter().map(|r| r.to_string()).collect())
        }
        None => {
            let (p, d) = generalized_p_symbol_with_derivation(kind, &w)?;
            (p, d.steps.iter().map(|s| s.to_string()).collect())
        }
    };
    let reading = format_elements(&p.reading());
    if g.json {
        let mut v = json!({"tableau": tableau_value(&p)?, "reading": reading});
        if derivation {
            v["derivation"] = json!(chain);
        }
        return Ok(json_line(v));
    }
    let mut out = p.to_string();
    if derivation {
        out.push_str(&format!("reading: {reading}\n"));
        for s in chain {
            out.push_str(&format!("  {s}\n"));
        }
    }
    Ok(out)
}

fn shapes_text(q: &[Shape]) -> String {
    q.iter().map(|s| format!("{s}\n")).collect()
}

fn q_symbol_cmd(g: &Global, word: Option<String>) -> CliResult {
    let kind = g.lie_kind()?;
    let w: Vec<GenLetter> = parse_gen_word(kind, &input_or_stdin(word)?)?;
    let q = generalized_q_symbol(kind, &w)?;
    if g.json {
        return Ok(json_line(serde_json::to_value(&q).map_err(Error::from)?));
    }
    Ok(shapes_text(&q))
}

fn schensted_cmd(g: &Global, input: Option<String>, invert: bool) -> CliResult {
    if invert {
        let text = input_or_stdin(input)?;
        let v: Value = serde_json::from_str(&text).map_err(Error::from)?;
        let (Some(p), Some(q)) = (v.get("p"), v.get("q")) else {
            return Err(Error::Parse("expected an object with keys `p` and `q`".into()).into());
        };
        let p: TableauJson = serde_json::from_value(p.clone()).map_err(Error::from)?;
        let steps: Vec<Shape> = serde_json::from_value(q.clone()).map_err(Error::from)?;
        let w = psi_inverse(&p.tabloid()?, &OscillatingTableau { steps })?;
        return Ok(if g.json { json_line(json!({"word": format_letters(&w)})) } else { format!("{}\n", format_letters(&w)) });
    }
    let kind = g.lie_kind()?;
    let w = parse_word(kind, &input_or_stdin(input)?)?;
    let (p, q) = psi(kind, &w.letters)?;
    let p = GenTableau::Plain(p);
    if g.json {
        let q = serde_json::to_value(&q.steps).map_err(Error::from)?;
        return Ok(json_line(json!({"p": tableau_value(&p)?, "q": q})));
    }
    Ok(format!("P:\n{p}Q:\n{}", shapes_text(&q.steps)))
}

fn congruent_cmd(g: &Global, first: &str, second: &str) -> CliResult {
    let kind = g.lie_kind()?;
    let (a, b) = (parse_gen_word(kind, first)?, parse_gen_word(kind, second)?);
    let same = generalized_congruent(kind, &a, &b)?;
    Ok(if g.json { json_line(json!({"congruent": same})) } else { format!("{same}\n") })
}

fn rectify_cmd(g: &Global, input: Option<String>, trace: bool) -> CliResult {
    let j: SkewJson = serde_json::from_str(&input_or_stdin(input)?).map_err(Error::from)?;
    let t = SkewTableau::from_json(&j)?;
    let r = rectify_traced(&t)?;
    let p = GenTableau::Plain(r.tableau);
    if g.json {
        let mut v = json!({"tableau": tableau_value(&p)?, "non_classical_slides": r.stats.non_classical()});
        if trace {
            v["trace"] = json!(r.trace.iter().map(|grid| grid.render()).collect::<Vec<_>>());
        }
        return Ok(json_line(v));
    }
    let mut out = String::new();
    if trace {
        for grid in &r.trace {
            out.push_str(&grid.to_string());
            out.push('\n');
        }
    }
    out.push_str(&p.to_string());
    Ok(out)
}

fn split_cmd(g: &Global, column: Option<String>, spin: bool, odd: bool) -> CliResult {
    let kind = g.lie_kind()?;
    let c = Column::parse(kind, &input_or_stdin(column)?)?;
    let (right, left) = if spin {
        let map = match (kind.is_b(), odd) {
            (true, false) => SpinMap::B,
            (true, true) => return Err(CliError::Usage("--odd applies to type D only".into())),
            (false, false) => SpinMap::EvenD,
            (false, true) => SpinMap::OddD,
        };
        let pair = spin_split(&c, map)?;
        (pair.right.to_string(), pair.left.to_string())
    } else {
        let pair = split_column(&c)?;
        (pair.r.to_string(), pair.l.to_string())
    };
    if g.json {
        return Ok(json_line(json!({"column": c.to_string(), "l": left, "r": right})));
    }
    Ok(format!("lC: {left}\nrC: {right}\n"))
}

fn check_cmd(g: &Global, suite: &str, seed: u64, samples: usize) -> CliResult {
    let numbers: Vec<u8> = if suite == "all" {
        (1..=10).collect()
    } else {
        let k = suite_number(suite).ok_or_else(|| {
            CliError::Usage(format!("unknown suite `{suite}`; expected 1-10, all, or one of {}", SUITES.join(", ")))
        })?;
        vec![k]
    };
    let opts = CheckOptions { exec: g.exec(), seed, samples };
    let reports: Vec<_> = numbers.iter().filter_map(|&k| run_suite(k, &opts)).collect();
    let out = if g.json {
        json_line(serde_json::to_value(&reports).map_err(Error::from)?)
    } else {
        reports.iter().map(|r| r.to_string()).collect()
    };
    if reports.iter().all(|r| r.passed()) {
        Ok(out)
    } else {
        print!("{out}");
        Err(CliError::Failed("verification failed".into()))
    }
}

fn run(cli: Cli) -> CliResult {
    let g = &cli.global;
    match cli.command {
        Command::Explore(a) => explore(g, &a, a.dot),
        Command::Dot(a) => explore(g, &a, true),
        Command::PSymbol { word, derivation } => p_symbol_cmd(g, word, derivation),
        Command::QSymbol { word } => q_symbol_cmd(g, word),
        Command::Schensted { input, invert } => schensted_cmd(g, input, invert),
        Command::Congruent { first, second } => congruent_cmd(g, &first, &second),
        Command::Jdt { action: JdtAction::Rectify { input, trace } } => rectify_cmd(g, input, trace),
        Command::Split { column, spin, odd } => split_cmd(g, column, spin, odd),
        Command::Check { suite, seed, samples } => check_cmd(g, &suite, seed, samples),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
