//! `skewdna`: build theta-skew cyclic codes over F4 + vF4, check their DNA
//! properties and rerun the published examples.
//!
//! Exit codes: 0 success, 1 a checked property or verification failed,
//! 2 bad input, 3 a size cap or search budget was exceeded.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use skewdna::analysis::{self, Metric};
use skewdna::code::{self, CodeDescription, LeadingMode, DEFAULT_BUDGET, DEFAULT_CAP};
use skewdna::dna;
use skewdna::verify;
use skewdna::{CodeSet, Error, RElem, SkewCyclicCode, SkewPoly};

#[derive(Parser)]
#[command(name = "skewdna", version, about = "Theta-skew cyclic codes over F4 + vF4 and their DNA images")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest code (in words) that may be materialized.
    #[arg(long, default_value_t = DEFAULT_CAP, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Leading {
    Unit,
    V,
    V1,
    Any,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    Hamming,
    Lee,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    Reversible,
    Complement,
    ReverseComplement,
    QuasiCyclic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Materialize the code and test every word.
    Exhaustive,
    /// Test F2 basis vectors only (no size cap applies).
    Basis,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Fault {
    Table1,
    Table2,
}

#[derive(clap::Args)]
struct CodeArgs {
    /// Code length.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Generator polynomial, as an expression (`v*(x^4+x^2+1)`) or a
    /// coefficient list (`[1, 0, w+v]`, constant term first). Repeat for
    /// several generators.
    #[arg(long = "gen", required = true)]
    gens: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the ring element / Gray image / DNA pair table.
    Table1,
    /// List right divisors of x^n - 1 of a given degree.
    Divisors {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Divisor degree t, 1 <= t < n.
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Leading::Unit)]
        leading: Leading,
    },
    /// Build a code and describe it.
    Build {
        #[command(flatten)]
        code: CodeArgs,
        /// Also list every codeword.
        #[arg(long)]
        words: bool,
    },
    /// Check DNA properties of a code.
    Check {
        #[command(flatten)]
        code: CodeArgs,
        /// Properties to check (default: all).
        #[arg(long, value_enum)]
        property: Vec<Property>,
        #[arg(long, value_enum, default_value_t = Method::Exhaustive)]
        method: Method,
        /// Exit with status 1 if any checked property fails.
        #[arg(long)]
        assert: bool,
    },
    /// Print the DNA codewords, sorted, one per line.
    Dna {
        #[command(flatten)]
        code: CodeArgs,
        /// FASTA-style output with `>w<index>` headers.
        #[arg(long)]
        fasta: bool,
    },
    /// Minimum distance and property report.
    Distance {
        #[command(flatten)]
        code: CodeArgs,
        /// Metric to report (default: both).
        #[arg(long, value_enum)]
        metric: Option<MetricArg>,
    },
    /// Rerun the published tables, examples and structural results.
    VerifyPaper {
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Random samples per length.
        #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
        samples: usize,
        /// Run only these checks (1-based ids).
        #[arg(long)]
        only: Vec<usize>,
        /// Corrupt an expected table, to exercise the failure path.
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
}

/// Failure carrying the process exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::CapExceeded { .. } | Error::BudgetExceeded { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Table1 => table1(&cli),
        Command::Divisors { n, degree, leading } => divisors(&cli, *n as usize, *degree, *leading),
        Command::Build { code, words } => build(&cli, code, *words),
        Command::Check { code, property, method, assert } => check(&cli, code, property, *method, *assert),
        Command::Dna { code, fasta } => dna_listing(&cli, code, *fasta),
        Command::Distance { code, metric } => distance(&cli, code, *metric),
        Command::VerifyPaper { seed, samples, only, inject_fault } => {
            verify_paper(&cli, *seed, *samples, only, *inject_fault)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Writes the report; a closed stdout (e.g. piped into `head`) is not an
/// error.
fn emit(cli: &Cli, text: String, structured: Value) {
    let out = match cli.format {
        Format::Text => text,
        Format::Structured => serde_json::to_string_pretty(&structured).expect("JSON value") + "\n",
    };
    let _ = std::io::stdout().write_all(out.as_bytes());
}

fn build_code(args: &CodeArgs) -> Result<SkewCyclicCode, Failure> {
    let gens = args
        .gens
        .iter()
        .map(|s| skewdna::parse::parse_poly(s))
        .collect::<skewdna::Result<Vec<SkewPoly>>>()?;
    Ok(SkewCyclicCode::new(args.n as usize, gens)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn table1(cli: &Cli) -> Outcome {
    let mut text = format!("{:<10} {:<12} {}\n", "element", "gray", "dna");
    let mut rows = Vec::new();
    for x in RElem::all() {
        let (g0, g1) = x.gray();
        let [b0, b1] = dna::encode_element(x);
        let bases = format!("{}{}", b0.as_char(), b1.as_char());
        text.push_str(&format!("{:<10} {:<12} {bases}\n", x.to_string(), format!("({g0}, {g1})")));
        rows.push(json!({ "element": x, "gray": [g0, g1], "dna": bases }));
    }
    emit(cli, text, json!({ "rows": rows }));
    Ok(true)
}

fn divisors(cli: &Cli, n: usize, t: usize, leading: Leading) -> Outcome {
    let modes: &[LeadingMode] = match leading {
        Leading::Unit => &[LeadingMode::Unit],
        Leading::V => &[LeadingMode::V],
        Leading::V1 => &[LeadingMode::V1],
        Leading::Any => &LeadingMode::ALL,
    };
    let mut text = String::new();
    let mut items = Vec::new();
    for &mode in modes {
        for g in code::enumerate_right_divisors(n, t, mode, DEFAULT_BUDGET)? {
            let pal = g.is_palindromic()?;
            let tpal = g.is_theta_palindromic()?;
            let mut flags = Vec::new();
            if pal {
                flags.push("palindromic");
            }
            if tpal {
                flags.push("theta-palindromic");
            }
            text.push_str(&format!("{g}  {}", g.to_human()));
            if !flags.is_empty() {
                text.push_str(&format!("  [{}]", flags.join(", ")));
            }
            text.push('\n');
            items.push(json!({
                "coefficients": g,
                "polynomial": g.to_human(),
                "leading": mode,
                "palindromic": pal,
                "theta_palindromic": tpal,
            }));
        }
    }
    text.push_str(&format!("{} divisor(s) of x^{n} - 1 of degree {t}\n", items.len()));
    emit(cli, text, json!({ "n": n, "degree": t, "divisors": items }));
    Ok(true)
}

fn build(cli: &Cli, args: &CodeArgs, list_words: bool) -> Outcome {
    let code = build_code(args)?;
    let desc = CodeDescription::of(&code);
    let mut text = desc.to_text();
    text.push_str(&format!("size: 2^{} = {}\n", code.dimension(), code.size()));
    text.push_str(&format!("unit-leading words: {}\n", yes_no(code.span().has_unit_leading_word())));
    text.push_str(&format!("all-ones word: {}\n", yes_no(code.contains_all_ones())));
    let mut doc = json!({
        "n": desc.n,
        "generators": desc.generators,
        "classification": desc.classification,
        "dimension_f2": code.dimension(),
        "size": code.size().to_string(),
        "unit_leading_words": code.span().has_unit_leading_word(),
        "all_ones": code.contains_all_ones(),
    });
    if code.generators().len() == 1 {
        let c = dna::classify(&code);
        text.push_str(&format!(
            "predicted reversible: {}\npredicted reverse-complement: {}\nbasis: {}\n",
            c.predicted_reversible, c.predicted_reverse_complement, c.basis
        ));
        doc["prediction"] = serde_json::to_value(&c).expect("serializable");
    }
    if list_words {
        let set = code.materialize(cli.cap)?;
        text.push_str(&set.export());
        doc["words"] = json!(set.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    emit(cli, text, doc);
    Ok(true)
}

#[derive(Serialize)]
struct PropertyResult {
    property: &'static str,
    holds: bool,
}

fn property_name(p: Property) -> &'static str {
    match p {
        Property::Reversible => "reversible",
        Property::Complement => "complement",
        Property::ReverseComplement => "reverse-complement",
        Property::QuasiCyclic => "quasi-cyclic",
    }
}

fn evaluate(code: &SkewCyclicCode, set: Option<&CodeSet>, p: Property) -> bool {
    match (p, set) {
        (Property::Reversible, Some(s)) => dna::is_reversible_dna(s),
        (Property::Reversible, None) => dna::is_reversible_by_basis(code),
        (Property::Complement, Some(s)) => dna::is_complement_closed(s),
        // A linear code is complement-closed iff it holds the all-ones word.
        (Property::Complement, None) => code.contains_all_ones(),
        (Property::ReverseComplement, Some(s)) => dna::is_reverse_complement_dna(s),
        (Property::ReverseComplement, None) => dna::is_reverse_complement_by_basis(code),
        (Property::QuasiCyclic, Some(s)) => analysis::verify_quasi_cyclic_equivalence(s),
        (Property::QuasiCyclic, None) => code
            .span()
            .basis()
            .all(|b| analysis::quasi_cyclic_identity_holds(&skewdna::Codeword::unpack(b, code.n()))),
    }
}

fn check(cli: &Cli, args: &CodeArgs, props: &[Property], method: Method, assert: bool) -> Outcome {
    let code = build_code(args)?;
    let set = match method {
        Method::Exhaustive => Some(code.materialize(cli.cap)?),
        Method::Basis => None,
    };
    let props: Vec<Property> = if props.is_empty() {
        vec![Property::Reversible, Property::Complement, Property::ReverseComplement, Property::QuasiCyclic]
    } else {
        props.to_vec()
    };
    let results: Vec<PropertyResult> = props
        .iter()
        .map(|&p| PropertyResult { property: property_name(p), holds: evaluate(&code, set.as_ref(), p) })
        .collect();
    let mut text = String::new();
    for r in &results {
        text.push_str(&format!("{}: {}\n", r.property, yes_no(r.holds)));
    }
    let all = results.iter().all(|r| r.holds);
    emit(
        cli,
        text,
        json!({
            "n": code.n(),
            "generators": code.generators(),
            "method": if set.is_some() { "exhaustive" } else { "basis" },
            "results": results,
        }),
    );
    Ok(!assert || all)
}

fn dna_listing(cli: &Cli, args: &CodeArgs, fasta: bool) -> Outcome {
    let code = build_code(args)?;
    let set = code.materialize(cli.cap)?;
    let mut strings: Vec<String> = set.iter().map(|c| dna::encode_word(&c).to_string()).collect();
    strings.sort();
    let mut text = String::new();
    for (i, s) in strings.iter().enumerate() {
        if fasta {
            text.push_str(&format!(">w{i}\n"));
        }
        text.push_str(s);
        text.push('\n');
    }
    emit(cli, text, json!({ "n": code.n(), "count": strings.len(), "dna": strings }));
    Ok(true)
}

fn distance(cli: &Cli, args: &CodeArgs, metric: Option<MetricArg>) -> Outcome {
    let code = build_code(args)?;
    let set = code.materialize(cli.cap)?;
    let want_h = metric != Some(MetricArg::Lee);
    let want_l = metric != Some(MetricArg::Hamming);
    let hamming = if want_h { Some(analysis::min_distance(&set, Metric::Hamming)?) } else { None };
    let lee = if want_l { Some(analysis::min_distance(&set, Metric::Lee)?) } else { None };
    let rev = dna::is_reversible_dna(&set);
    let rc = dna::is_reverse_complement_dna(&set);
    let qc = analysis::verify_quasi_cyclic_equivalence(&set);
    let gens: Vec<String> = code.generators().iter().map(|g| g.to_string()).collect();
    let mut text = format!("n: {}\nsize: {}\ngenerator: {}\n", code.n(), set.len(), gens.join("; "));
    if let Some(h) = hamming {
        text.push_str(&format!("min hamming distance: {h}\n"));
    }
    if let Some(l) = lee {
        text.push_str(&format!("min lee distance: {l}\nmin dna hamming distance: {l}\n"));
    }
    text.push_str(&format!(
        "reversible: {}\nreverse-complement: {}\nquasi-cyclic: {}\n",
        yes_no(rev),
        yes_no(rc),
        yes_no(qc)
    ));
    emit(
        cli,
        text,
        json!({
            "n": code.n(),
            "size": set.len(),
            "generators": code.generators(),
            "min_hamming": hamming,
            "min_lee": lee,
            "min_dna_hamming": lee,
            "reversible": rev,
            "reverse_complement": rc,
            "quasi_cyclic": qc,
        }),
    );
    Ok(true)
}

fn verify_paper(cli: &Cli, seed: u64, samples: usize, only: &[usize], fault: Option<Fault>) -> Outcome {
    if let Some(&bad) = only.iter().find(|&&id| id == 0 || id > verify::CHECK_COUNT) {
        return Err(Failure { code: 2, message: format!("no check with id {bad} (1..={})", verify::CHECK_COUNT) });
    }
    let mut cfg = verify::Config { seed, samples, cap: cli.cap, ..verify::Config::default() };
    match fault {
        Some(Fault::Table1) => {
            let (a, b) = (cfg.table1[6].bases.clone(), cfg.table1[7].bases.clone());
            cfg.table1[6].bases = b;
            cfg.table1[7].bases = a;
        }
        Some(Fault::Table2) => cfg.table2[0] = "AAAAAAAAAAAT".into(),
        None => {}
    }
    let ids: Vec<usize> = if only.is_empty() { (1..=verify::CHECK_COUNT).collect() } else { only.to_vec() };
    let reports: Vec<verify::CheckReport> = ids.iter().map(|&id| verify::run_check(id, &cfg)).collect();
    let failed: Vec<&verify::CheckReport> = reports.iter().filter(|r| !r.passed).collect();

    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.summary_line());
        text.push('\n');
        for d in &r.details {
            text.push_str(&format!("    {d}\n"));
        }
    }
    text.push_str(&format!("{} of {} checks passed\n", reports.len() - failed.len(), reports.len()));
    for r in &failed {
        text.push_str(&format!("failed: {}\n", r.name));
    }
    emit(
        cli,
        text,
        json!({ "seed": seed, "samples": samples, "checks": reports, "passed": failed.is_empty() }),
    );
    Ok(failed.is_empty())
}
