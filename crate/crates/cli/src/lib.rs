//! The `unibranch` command line.
//!
//! [`run`] executes one invocation and returns its streams and exit code
//! instead of touching the process, so every path is testable in-process.
//! Exit codes: 0 success, 2 parse or validation error, 3 verification
//! failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use unibranch::oracle::verify_formula;
use unibranch::{euclid_expand, jumping_numbers_from_tree, qbar_sequence, CurveInvariantsBig};

pub mod input;
pub mod render;
pub mod selftest;

use input::{EncodingKind, InputSpec};
use selftest::{Fault, SelftestConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "unibranch",
    version,
    about = "Jumping numbers below 1 of a plane branch"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Semigroup elements, e.g. "4,6,13"
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    semigroup: Option<String>,
    /// Puiseux characteristic, e.g. "4;6,7"
    #[arg(
        long = "char",
        visible_alias = "characteristic",
        value_name = "M;LIST",
        allow_hyphen_values = true
    )]
    characteristic: Option<String>,
    /// Enriques pairs, e.g. "2,3;5,11"
    #[arg(long, value_name = "P,Q;...", allow_hyphen_values = true)]
    pairs: Option<String>,
}

impl InputArgs {
    fn spec(&self) -> Result<InputSpec, input::ParseError> {
        let (kind, text) = match (&self.semigroup, &self.characteristic, &self.pairs) {
            (Some(s), _, _) => (EncodingKind::Semigroup, s),
            (_, Some(c), _) => (EncodingKind::Characteristic, c),
            (_, _, Some(p)) => (EncodingKind::Pairs, p),
            _ => unreachable!("clap enforces exactly one input"),
        };
        InputSpec::parse(kind, text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Semigroup,
    #[value(alias = "char")]
    Characteristic,
    Pairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FaultArg {
    Rset,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the jumping numbers below 1
    Jump {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Append the contributing relevant vertices
        #[arg(long)]
        contributors: bool,
        /// Cross-check formula, semigroup route and oracle first
        #[arg(long)]
        verify: bool,
    },
    /// Convert between encodings
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Describe the Enriques tree of the resolution
    Tree {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run the invariant grid against the oracle
    Selftest {
        /// Largest genus; the exhaustive part stops at 2
        #[arg(long, default_value_t = 3)]
        max_g: usize,
        #[arg(long, default_value_t = 5)]
        max_p: i64,
        #[arg(long, default_value_t = 13)]
        max_q: i64,
        #[arg(long, default_value_t = 7)]
        random_max_p: i64,
        #[arg(long, default_value_t = 17)]
        random_max_q: i64,
        /// Number of random pair lists
        #[arg(long, default_value_t = 100)]
        seeds: u64,
        #[arg(long, default_value_t = 50)]
        rset_max_q: i64,
        #[arg(long, default_value_t = 4)]
        rset_max_m: i64,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Largest tree `tree` and `jump --verify` will build.
pub const MAX_VERTICES: u64 = 1 << 20;
/// Largest report `jump` will list.
pub const MAX_JUMPING_NUMBERS: u64 = 1 << 24;

/// `Σ_j a_1 + … + a_m` over the pairs, minus the shared junctions.
fn vertex_count(inv: &CurveInvariantsBig) -> BigInt {
    let pairs = inv.pairs().pairs();
    let total: BigInt = pairs
        .iter()
        .flat_map(|(p, q)| {
            euclid_expand(p.clone(), q.clone())
                .expect("validated pair")
                .quotients()
                .to_vec()
        })
        .sum();
    total - BigInt::from(pairs.len().saturating_sub(1))
}

/// `Σ_j m_{j+1} |R(p_j, q̄_j)|` with `|R(p,q)| = (p-1)(q-1)/2`.
fn report_size(inv: &CurveInvariantsBig) -> BigInt {
    let m = inv.gcd_chain();
    let one = BigInt::from(1);
    inv.pairs()
        .pairs()
        .iter()
        .zip(qbar_sequence(inv.pairs()))
        .enumerate()
        .map(|(j, ((p, _), qb))| (p - &one) * (qb - &one) / 2 * &m[j + 1])
        .sum()
}

fn too_large(what: &str, size: BigInt, limit: u64) -> Option<Outcome> {
    (size > BigInt::from(limit))
        .then(|| invalid(format!("input too large: {size} {what} (limit {limit})")))
}

fn invalid(e: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_INVALID, format!("error: {e}\n"))
}

/// Runs the CLI on `args`, where `args[0]` is the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_INVALID, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Jump {
            input,
            format,
            contributors,
            verify,
        } => jump(&input, format, contributors, verify),
        Command::Convert { input, to } => convert(&input, to),
        Command::Tree { input, format } => tree(&input, format),
        Command::Selftest {
            max_g,
            max_p,
            max_q,
            random_max_p,
            random_max_q,
            seeds,
            rset_max_q,
            rset_max_m,
            inject_fault,
        } => {
            if max_g == 0
                || max_p < 2
                || max_q <= max_p.min(2)
                || random_max_q < 3
                || rset_max_m < 1
            {
                return invalid(
                    "selftest bounds need max-g ≥ 1, max-p ≥ 2, q bounds ≥ 3, rset-max-m ≥ 1",
                );
            }
            let cfg = SelftestConfig {
                max_g,
                max_p,
                max_q,
                random_max_p: random_max_p.max(2),
                random_max_q,
                seeds,
                rset_max_q,
                rset_max_m,
                fault: inject_fault.map(|FaultArg::Rset| Fault::RSet),
            };
            selftest_cmd(&cfg)
        }
    }
}

fn jump(input: &InputArgs, format: OutputFormat, contributors: bool, verify: bool) -> Outcome {
    if format == OutputFormat::Dot {
        return invalid("--format dot is only available for the tree subcommand");
    }
    let spec = match input.spec() {
        Ok(s) => s,
        Err(e) => return invalid(e),
    };
    let inv = match spec.invariants() {
        Ok(i) => i,
        Err(e) => return invalid(e),
    };
    if let Some(out) = too_large("jumping numbers", report_size(&inv), MAX_JUMPING_NUMBERS) {
        return out;
    }
    if verify {
        if let Some(out) = too_large("tree vertices", vertex_count(&inv), MAX_VERTICES) {
            return out;
        }
        let v = verify_formula(inv.pairs());
        if !v.passed() {
            return Outcome::fail(EXIT_MISMATCH, format!("verification failed\n{v}"));
        }
    }
    let report = jumping_numbers_from_tree(inv.pairs());
    Outcome::ok(match format {
        OutputFormat::Json => render::jump_json(&spec, &inv, &report),
        _ => render::jump_text(&report, contributors),
    })
}

fn convert(input: &InputArgs, to: Target) -> Outcome {
    let inv = match input
        .spec()
        .map_err(|e| e.to_string())
        .and_then(|s| s.invariants().map_err(|e| e.to_string()))
    {
        Ok(i) => i,
        Err(e) => return invalid(e),
    };
    let text = match to {
        Target::Semigroup => render::semigroup_string(&inv),
        Target::Characteristic => render::characteristic_string(&inv),
        Target::Pairs => render::pairs_string(&inv),
    };
    Outcome::ok(text + "\n")
}

fn tree(input: &InputArgs, format: OutputFormat) -> Outcome {
    if format == OutputFormat::Json {
        return invalid("the tree subcommand supports --format text or dot");
    }
    let inv = match input
        .spec()
        .map_err(|e| e.to_string())
        .and_then(|s| s.invariants().map_err(|e| e.to_string()))
    {
        Ok(i) => i,
        Err(e) => return invalid(e),
    };
    if let Some(out) = too_large("tree vertices", vertex_count(&inv), MAX_VERTICES) {
        return out;
    }
    let tree = render::tree_of(&inv);
    Outcome::ok(match format {
        OutputFormat::Dot => render::tree_dot(&tree),
        _ => render::tree_text(&tree),
    })
}

fn selftest_cmd(cfg: &SelftestConfig) -> Outcome {
    let report = selftest::run_selftest(cfg);
    let table = report.table();
    match report.first_failure() {
        None => Outcome::ok(table),
        Some((property, c)) => Outcome::fail(
            EXIT_MISMATCH,
            format!(
                "{table}first counterexample ({property}): {}\n  {}\n",
                c.input, c.detail
            ),
        ),
    }
}
