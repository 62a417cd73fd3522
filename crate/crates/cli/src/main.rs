mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kneading::dynamics::{find_superstable_mu, QuadMap, SolverOptions, TURNING_POINT};
use kneading::{
    build_matrices, build_orbit, closed_form_a, enumerate_admissible, is_admissible, k_groups,
    parse_word, verify_sweep, Error, KneadingWord, Symbol, TheoremMatrices,
};
use output::{format_real, group_value, matrix_value, Format, OutputDocument};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "kneading",
    version,
    about = "Kneading words, Markov matrices and their K-groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Significant digits for real numbers.
    #[arg(long, global = true, default_value_t = 10)]
    precision: usize,
    /// Proceed with words that are not admissible.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// K0, K1 and the Bowen-Franks group of a word.
    Kgroups {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Print the matrices built from a word.
    Matrices {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Comma separated subset of the matrix names.
        #[arg(long, value_delimiter = ',', value_parser = clap::builder::PossibleValuesParser::new(TheoremMatrices::NAMES))]
        which: Vec<String>,
    },
    /// List the admissible words of period N.
    Enumerate {
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Check every admissible word up to period N_MAX.
    Verify { n_max: usize },
    /// Locate the superstable parameter realising a word.
    FindMu {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value_t = 1e-4)]
        grid_step: f64,
    },
    /// Is the word admissible?
    Admissible {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Numeric itinerary of a point under x -> mu x (1 - x).
    Itinerary {
        #[arg(long)]
        mu: f64,
        /// Starting point; defaults to f(1/2).
        #[arg(long)]
        x0: Option<f64>,
        #[arg(long, default_value_t = 20)]
        depth: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

const EXIT_VERIFY: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_SOLVER: u8 = 4;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_DOMAIN,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::EmptyWord
            | Error::UnknownSymbol { .. }
            | Error::EarlyTurningPoint { .. }
            | Error::MissingTurningPoint => EXIT_PARSE,
            Error::Solver(_) => EXIT_SOLVER,
            Error::TheoremViolation { .. } => EXIT_VERIFY,
            _ => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// A rendered document plus the exit code it should produce.
struct Outcome {
    doc: OutputDocument,
    code: u8,
}

impl From<OutputDocument> for Outcome {
    fn from(doc: OutputDocument) -> Self {
        Outcome { doc, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.doc.render(cli.format));
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Kgroups { word } => kgroups(cli, word).map(Outcome::from),
        Command::Matrices { word, which } => matrices(cli, word, which).map(Outcome::from),
        Command::Enumerate { n, count_only } => enumerate(*n, *count_only).map(Outcome::from),
        Command::Verify { n_max } => verify(*n_max),
        Command::FindMu {
            word,
            tol,
            grid_step,
        } => find_mu(cli, word, *tol, *grid_step).map(Outcome::from),
        Command::Admissible { word } => admissible(word).map(Outcome::from),
        Command::Itinerary { mu, x0, depth, tol } => {
            itinerary(cli, *mu, *x0, *depth, *tol).map(Outcome::from)
        }
    }
}

/// Parses a word of period at least two, rejecting inadmissible words
/// unless `--force` is given.
fn word_arg(text: &str, force: bool) -> Result<KneadingWord, Failure> {
    let w = parse_word(text)?;
    if w.len() < 2 {
        return Err(Failure::domain(format!(
            "{w} has period {}; at least 2 is required",
            w.len()
        )));
    }
    if !force && !is_admissible(&w) {
        return Err(Failure::domain(format!(
            "{w} is not admissible (use --force to proceed)"
        )));
    }
    Ok(w)
}

fn letters(symbols: &[Symbol]) -> String {
    symbols.iter().map(|s| s.letter()).collect()
}

fn key_values(doc: &mut OutputDocument, rows: &[(&str, String)]) {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in rows {
        doc.line(format!("{k:<width$}  {v}"));
    }
}

fn word_inputs(doc: &mut OutputDocument, cli: &Cli, w: &KneadingWord) {
    doc.input("word", w.to_string())
        .input("numeric", w.to_numeric())
        .input("force", cli.force);
}

fn kgroups(cli: &Cli, text: &str) -> Result<OutputDocument, Failure> {
    let w = word_arg(text, cli.force)?;
    let r = k_groups(&w)?;
    let mut doc = OutputDocument::new("kgroups");
    word_inputs(&mut doc, cli, &w);
    doc.result("a", r.a_closed_form)
        .result("K0", group_value(&r.k0))
        .result("K1", group_value(&r.k1))
        .result("BF", group_value(&r.bf))
        .result("admissible", r.admissible)
        .result("irreducible", r.irreducible);
    key_values(
        &mut doc,
        &[
            ("word", w.to_string()),
            ("a", r.a_closed_form.to_string()),
            ("K0", r.k0.to_string()),
            ("K1", r.k1.to_string()),
            ("BF", r.bf.to_string()),
            ("admissible", r.admissible.to_string()),
            ("irreducible", r.irreducible.to_string()),
        ],
    );
    Ok(doc)
}

fn matrices(cli: &Cli, text: &str, which: &[String]) -> Result<OutputDocument, Failure> {
    let w = word_arg(text, cli.force)?;
    let t = build_matrices(&build_orbit(&w)?)?;
    let names: Vec<&str> = if which.is_empty() {
        TheoremMatrices::NAMES.to_vec()
    } else {
        which.iter().map(String::as_str).collect()
    };
    let mut doc = OutputDocument::new("matrices");
    word_inputs(&mut doc, cli, &w);
    doc.input("which", names.clone());
    for (k, name) in names.iter().enumerate() {
        let m = t.get(name).expect("names are validated by the parser");
        doc.result(name, matrix_value(m));
        if k > 0 {
            doc.line("");
        }
        doc.line(format!("{name} ({}x{})", m.rows(), m.cols()));
        doc.text.push_str(&m.to_string());
    }
    Ok(doc)
}

fn enumerate(n: usize, count_only: bool) -> Result<OutputDocument, Failure> {
    if n < 2 {
        return Err(Failure::domain(format!("period {n} is below 2")));
    }
    let words = enumerate_admissible(n);
    let mut doc = OutputDocument::new("enumerate");
    doc.input("n", n).input("count_only", count_only);
    doc.result("count", words.len());
    doc.line(format!("{} admissible words of period {n}", words.len()));
    if !count_only {
        let mut listed = Vec::with_capacity(words.len());
        let width = n.max(4);
        doc.line(format!("{:<width$}  a", "word"));
        for w in &words {
            let a = closed_form_a(w)?;
            listed.push(json!({ "word": w.to_string(), "a": a }));
            doc.line(format!("{:<width$}  {a}", w.to_string()));
        }
        doc.result("words", listed);
    }
    Ok(doc)
}

fn verify(n_max: usize) -> Result<Outcome, Failure> {
    if n_max < 2 {
        return Err(Failure::domain(format!("period {n_max} is below 2")));
    }
    let report = verify_sweep(n_max)?;
    let mut doc = OutputDocument::new("verify");
    doc.input("n_max", n_max);

    let counts: Vec<Value> = report
        .counts
        .iter()
        .map(|&(n, c)| json!({ "n": n, "words": c }))
        .collect();
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|c| json!({ "word": c.word.to_string(), "a": c.a, "failures": c.failures }))
        .collect();
    let irreducible: Vec<String> = report
        .irreducible_zero_a
        .iter()
        .map(|c| c.word.to_string())
        .collect();
    doc.result("counts", counts)
        .result("total", report.total())
        .result("zero_a", report.zero_a)
        .result("theorem_failures", failures)
        .result("irreducible_zero_a", irreducible.clone())
        .result("passed", report.passed());

    doc.line(format!("{:>3}  {:>6}", "n", "words"));
    for &(n, c) in &report.counts {
        doc.line(format!("{n:>3}  {c:>6}"));
    }
    key_values(
        &mut doc,
        &[
            ("total", report.total().to_string()),
            ("a = 0", report.zero_a.to_string()),
            ("check failures", report.failures.len().to_string()),
            ("a = 0 with irreducible A", irreducible.len().to_string()),
        ],
    );
    for c in &report.failures {
        doc.line(format!("FAIL {}: {}", c.word, c.failures.join("; ")));
    }
    if !irreducible.is_empty() {
        doc.line(format!("a = 0 but irreducible: {}", irreducible.join(" ")));
    }
    doc.line(if report.passed() { "PASS" } else { "FAIL" });
    let code = if report.passed() { 0 } else { EXIT_VERIFY };
    Ok(Outcome { doc, code })
}

fn find_mu(cli: &Cli, text: &str, tol: f64, grid_step: f64) -> Result<OutputDocument, Failure> {
    let w = word_arg(text, cli.force)?;
    let options = SolverOptions {
        tol,
        grid_step,
        ..SolverOptions::default()
    };
    let r = find_superstable_mu(&w, &options)?;
    let p = cli.precision;
    let mut doc = OutputDocument::new("find-mu");
    word_inputs(&mut doc, cli, &w);
    doc.input("tol", format_real(tol, p))
        .input("grid_step", format_real(grid_step, p))
        .input("precision", p);
    let others: Vec<String> = r.other_roots.iter().map(|&m| format_real(m, p)).collect();
    doc.result("mu", format_real(r.mu, p))
        .result("residual", format_real(r.residual, 3))
        .result("word_confirmed", r.word_confirmed)
        .result("itinerary", letters(&r.itinerary))
        .result("other_roots", others.clone());
    let mut rows = vec![
        ("mu", format_real(r.mu, p)),
        ("residual", format_real(r.residual, 3)),
        ("confirmed", r.word_confirmed.to_string()),
        ("itinerary", letters(&r.itinerary)),
    ];
    if !others.is_empty() {
        rows.push(("other roots", others.join(" ")));
    }
    key_values(&mut doc, &rows);
    Ok(doc)
}

fn admissible(text: &str) -> Result<OutputDocument, Failure> {
    let w = parse_word(text)?;
    if w.len() < 2 {
        return Err(Failure::domain(format!(
            "{w} has period {}; at least 2 is required",
            w.len()
        )));
    }
    let ok = is_admissible(&w);
    let mut doc = OutputDocument::new("admissible");
    doc.input("word", w.to_string())
        .input("numeric", w.to_numeric());
    doc.result("admissible", ok);
    key_values(
        &mut doc,
        &[("word", w.to_string()), ("admissible", ok.to_string())],
    );
    Ok(doc)
}

fn itinerary(
    cli: &Cli,
    mu: f64,
    x0: Option<f64>,
    depth: usize,
    tol: f64,
) -> Result<OutputDocument, Failure> {
    let map = QuadMap::new(mu)?;
    let x0 = x0.unwrap_or_else(|| map.apply(TURNING_POINT));
    if !(0.0..=1.0).contains(&x0) {
        return Err(Failure::domain(format!("x0 = {x0} is outside [0, 1]")));
    }
    let p = cli.precision;
    let symbols = map.numeric_itinerary(x0, depth, tol);
    let mut doc = OutputDocument::new("itinerary");
    doc.input("mu", format_real(mu, p))
        .input("x0", format_real(x0, p))
        .input("depth", depth)
        .input("tol", format_real(tol, p));
    doc.result("itinerary", letters(&symbols));
    key_values(
        &mut doc,
        &[
            ("mu", format_real(mu, p)),
            ("x0", format_real(x0, p)),
            ("itinerary", letters(&symbols)),
        ],
    );
    Ok(doc)
}
