//! Command line front end for the exact spherical-function and
//! eigenvalue-sum computations, with machine-readable JSON output and a
//! verification mode that replays every closed form against its
//! independent oracle.
//!
//! Exit codes are a stable contract: 0 success, 1 usage or parse error,
//! 2 empty invariant space (m < 0), 3 verification failure.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use hooksph::hookchar::{hook_character, hook_dimension, spherical_bruteforce, HookShape};
use hooksph::invariant::spherical_via_gram;
use hooksph::perm::{BlockStructure, CycleType, SupportSet};
use hooksph::spectrum::{eigenvalue_sum, DegreeProfile, Normalization};
use hooksph::spherical::{invariant_multiplicity, spherical_reciprocal, SphericalQuery};
use hooksph::verify::{run_suite, GridCaps, Suite, SuiteOptions, DEFAULT_SEED};
use hooksph::{Error, Rational};

const EXIT_USAGE: u8 = 1;
const EXIT_NO_INVARIANTS: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;

/// Exact spherical functions of hook isotypes over Young subgroups, and
/// eigenvalue-sum polynomials of the commuting operator family.
#[derive(Parser)]
#[command(name = "hooksph", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spherical function value of the hook isotype [N-b, 1^b] at the cycle
    /// threading the chosen blocks.
    Spherical {
        /// Number of boxes below the first row of the hook.
        #[arg(long)]
        b: usize,
        /// Comma-separated block sizes of the Young subgroup, e.g. 2,3,4.
        #[arg(long)]
        blocks: String,
        /// Comma-separated 1-based indices of the supported blocks, e.g. 1,3.
        #[arg(long)]
        support: String,
        /// closed, bruteforce, gram, or all. The brute-force and Gram
        /// methods enumerate the subgroup; keep the blocks small for them.
        #[arg(long, default_value = "closed")]
        method: String,
        /// text or json.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Character of the hook isotype [N-b, 1^b] on a conjugacy class.
    Character {
        /// Number of points N.
        #[arg(long = "N")]
        n: usize,
        /// Number of boxes below the first row of the hook.
        #[arg(long)]
        b: usize,
        /// Cycle type as a comma-separated partition of N, e.g. 4,1,1.
        #[arg(long)]
        class: String,
        /// text or json.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Sum of k-th powers of the commuting-family eigenvalues over a hook
    /// isotypic component, as a polynomial in the coupling kappa.
    Eigsum {
        /// Degree profile "d1:n1,d2:n2,..." with strictly decreasing
        /// degrees, e.g. 5:2,3:1,0:3.
        #[arg(long)]
        profile: String,
        /// Number of boxes below the first row of the hook.
        #[arg(long)]
        b: usize,
        /// Power of the eigenvalues to sum; k >= 1.
        #[arg(long)]
        k: usize,
        /// Support weight: plain (product of block sizes, the certified
        /// choice) or factorial.
        #[arg(long, default_value = "plain")]
        normalization: String,
        /// text or json.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Run the verification suites that cross-check every closed form
    /// against its independent oracle.
    Verify {
        /// spherical, identities, eigsum, or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest b in the exhaustive grids.
        #[arg(long, default_value_t = 3)]
        max_b: usize,
        /// Largest number of blocks in the exhaustive grids.
        #[arg(long, default_value_t = 4)]
        max_p: usize,
        /// Largest single block size in the exhaustive grids.
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Total-size cap for the Gram-matrix checks.
        #[arg(long, default_value_t = 7)]
        gram_total: usize,
        /// Number of random large instances for the form-equivalence check.
        #[arg(long, default_value_t = 500)]
        random_instances: usize,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// text or json.
        #[arg(long, default_value = "text")]
        format: String,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: String) -> Self {
        Failure { code: EXIT_USAGE, message }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoInvariants { .. } => EXIT_NO_INVARIANTS,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if informational { ExitCode::SUCCESS } else { ExitCode::from(EXIT_USAGE) };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Spherical { b, blocks, support, method, format } => {
            cmd_spherical(b, &blocks, &support, &method, parse_format(&format)?)
        }
        Command::Character { n, b, class, format } => {
            cmd_character(n, b, &class, parse_format(&format)?)
        }
        Command::Eigsum { profile, b, k, normalization, format } => {
            cmd_eigsum(&profile, b, k, &normalization, parse_format(&format)?)
        }
        Command::Verify {
            suite,
            max_b,
            max_p,
            max_n,
            gram_total,
            random_instances,
            seed,
            format,
        } => {
            let caps = GridCaps { max_b, max_p, max_n, gram_total, ..GridCaps::default() };
            let opts = SuiteOptions { caps, random_instances, seed };
            cmd_verify(Suite::parse(&suite)?, &opts, parse_format(&format)?)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

fn parse_format(s: &str) -> Result<Format, Failure> {
    match s {
        "text" => Ok(Format::Text),
        "json" => Ok(Format::Json),
        other => Err(Failure::usage(format!("unknown format '{other}' (expected text or json)"))),
    }
}

fn parse_usize_list(s: &str, what: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>().map_err(|_| Failure::usage(format!("bad {what} '{tok}'")))
        })
        .collect()
}

fn parse_support(s: &str, num_blocks: usize) -> Result<SupportSet, Failure> {
    let one_based = parse_usize_list(s, "support index")?;
    let mut zero_based = Vec::with_capacity(one_based.len());
    for idx in one_based {
        if idx == 0 {
            return Err(Failure::usage(String::from("support indices are 1-based")));
        }
        zero_based.push(idx - 1);
    }
    let support = SupportSet::new(zero_based)?;
    support.check_within(num_blocks)?;
    Ok(support)
}

fn support_one_based(support: &SupportSet) -> Vec<usize> {
    support.members().iter().map(|&j| j + 1).collect()
}

fn cmd_spherical(
    b: usize,
    blocks_arg: &str,
    support_arg: &str,
    method: &str,
    format: Format,
) -> Result<ExitCode, Failure> {
    if !matches!(method, "closed" | "bruteforce" | "gram" | "all") {
        return Err(Failure::usage(format!(
            "unknown method '{method}' (expected closed, bruteforce, gram, or all)"
        )));
    }
    let blocks = BlockStructure::new(parse_usize_list(blocks_arg, "block size")?)?;
    let support = parse_support(support_arg, blocks.num_blocks())?;
    let query = SphericalQuery::new(b, blocks, support)?;

    let mut values: Vec<(&str, Rational)> = Vec::new();
    if matches!(method, "closed" | "all") {
        values.push(("closed", spherical_reciprocal(&query)));
    }
    if matches!(method, "bruteforce" | "all") {
        let shape = HookShape::new(query.blocks().total(), b)?;
        let g = query.group_element();
        values.push(("bruteforce", spherical_bruteforce(&shape, query.blocks(), &g)?));
    }
    if matches!(method, "gram" | "all") {
        let g = query.group_element();
        values.push(("gram", spherical_via_gram(b, query.blocks(), &g)?));
    }
    let agreement = values.windows(2).all(|w| w[0].1 == w[1].1);

    match format {
        Format::Text => {
            if values.len() == 1 {
                println!("{}", values[0].1);
            } else {
                for (name, value) in &values {
                    println!("{name} = {value}");
                }
                println!("agreement = {agreement}");
            }
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (name, value) in &values {
                map.insert((*name).to_string(), Value::String(value.to_string()));
            }
            let mut out = json!({
                "b": b,
                "blocks": query.blocks().sizes(),
                "support": support_one_based(query.support()),
                "method": method,
                "values": Value::Object(map),
                "multiplicity": invariant_multiplicity(&query).to_string(),
            });
            if values.len() > 1 {
                out["agreement"] = Value::Bool(agreement);
            }
            println!("{out}");
        }
    }
    if agreement {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_VERIFICATION))
    }
}

fn cmd_character(n: usize, b: usize, class_arg: &str, format: Format) -> Result<ExitCode, Failure> {
    let class = CycleType::parse(class_arg)?;
    let shape = HookShape::new(n, b)?;
    let value = hook_character(&shape, &class)?;
    match format {
        Format::Text => println!("{value}"),
        Format::Json => println!(
            "{}",
            json!({
                "n": n,
                "b": b,
                "class": class.parts(),
                "value": value.to_string(),
                "dimension": hook_dimension(&shape).to_string(),
            })
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_eigsum(
    profile_arg: &str,
    b: usize,
    k: usize,
    normalization_arg: &str,
    format: Format,
) -> Result<ExitCode, Failure> {
    let profile = DegreeProfile::parse(profile_arg)?;
    let normalization = Normalization::parse(normalization_arg)?;
    let result = eigenvalue_sum(&profile, b, k, normalization)?;
    let coefficients: Vec<String> = if result.value.is_zero() {
        vec![String::from("0")]
    } else {
        result.value.coeffs().iter().map(|c| c.to_string()).collect()
    };
    match format {
        Format::Text => {
            println!("coefficients = [{}]", coefficients.join(", "));
            println!("polynomial = {}", result.value);
            println!("dim_isotype = {}", result.dim_isotype);
            println!("multiplicity = {}", result.multiplicity);
            println!("normalization = {}", result.normalization.as_str());
        }
        Format::Json => println!(
            "{}",
            json!({
                "profile": profile.to_string(),
                "b": b,
                "k": k,
                "normalization": result.normalization.as_str(),
                "coefficients": coefficients,
                "polynomial": result.value.to_string(),
                "dim_isotype": result.dim_isotype.to_string(),
                "multiplicity": result.multiplicity.to_string(),
            })
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: Suite, opts: &SuiteOptions, format: Format) -> Result<ExitCode, Failure> {
    let outcome = run_suite(suite, opts);
    let passed = outcome.passed();
    match format {
        Format::Text => {
            let width = outcome.reports.iter().map(|r| r.name.len()).max().unwrap_or(0);
            for report in &outcome.reports {
                let status = if report.passed() { "pass" } else { "FAIL" };
                println!(
                    "{:width$}  {status}  ({} instances, {} failures)",
                    report.name,
                    report.instances,
                    report.failures.len(),
                );
            }
            if let Some(n) = outcome.certified {
                println!("certified normalization: {}", n.as_str());
            }
            if let Some(first) = outcome.reports.iter().flat_map(|r| r.failures.first()).next() {
                println!("first counterexample: {first}");
            }
            println!("suite {}: {}", suite.as_str(), if passed { "PASS" } else { "FAIL" });
        }
        Format::Json => {
            let checks: Vec<Value> = outcome
                .reports
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "instances": r.instances,
                        "passed": r.passed(),
                        "failures": r.failures,
                    })
                })
                .collect();
            println!(
                "{}",
                json!({
                    "suite": suite.as_str(),
                    "checks": checks,
                    "certified_normalization": outcome.certified.map(|n| n.as_str()),
                    "passed": passed,
                })
            );
        }
    }
    if passed {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_VERIFICATION))
    }
}
