//! Command-line front end: ring inspection, ideal enumeration, rough
//! approximations, element-set algebra, and the property auditor.
//!
//! Exit codes: 0 on success, 1 when `--fail-on-counterexample` is set and an
//! audit found one, 2 for parse errors (command line, ring/ideal/set
//! grammar), and 3 for validation errors (a set that is not an ideal, a
//! non-maximal ideal without `--force`, axiom failures in a table file, and
//! the like).

use clap::{Parser, Subcommand, ValueEnum};

use crate::audit::{
    self, AuditMode, Strategy, DEFAULT_MAX_EXHAUSTIVE_UNIVERSE, DEFAULT_SAMPLE_COUNT,
};
use crate::ideal::{parse_ideal_spec, Ideal, IdealSpecError};
use crate::report::{AuditReport, PropertyGroup};
use crate::ring::{parse_ring_spec, RingSpecError};
use crate::rough::{self, SumMode};
use crate::set::{ElementSet, SetParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "rough-rings",
    version,
    about = "Rough-set approximations of subsets of finite commutative rings relative to ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Show a ring's order, identities, and element labels
    RingInfo {
        /// Ring spec: `Z<n>`, a product like `Z4xZ6`, or `table:<path>`
        ring: String,
    },
    /// List all ideals of a ring
    Ideals {
        ring: String,
        /// Also classify each ideal (maximal / prime / principal)
        #[arg(long)]
        classify: bool,
    },
    /// Lower/upper approximation, boundary, and roughness of a subset
    Approx {
        ring: String,
        /// Ideal spec: {0,2,4}, principal(s), gen(s1,..), or maximal#k
        #[arg(long)]
        ideal: String,
        /// Subset literal, e.g. {1,2,3,4,5} or {}
        #[arg(long)]
        set: String,
    },
    /// Element-set sum A+B or product A*B
    Algebra {
        ring: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value_t = OpArg::Sum)]
        op: OpArg,
        /// Reading of A+B: plain pairwise sums, or their additive closure
        #[arg(long, value_enum, default_value_t = SumModeArg::Pairwise)]
        sum_mode: SumModeArg,
    },
    /// Audit the approximation identities, reporting counterexamples
    Audit {
        ring: String,
        #[arg(long)]
        ideal: String,
        /// Comma-separated groups: space, 3-1, 4-1, 4-2 (default: all that
        /// apply to the given ideal)
        #[arg(long)]
        props: Option<String>,
        /// Default: exhaustive when the ring is small enough, else randomized
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, default_value_t = DEFAULT_SAMPLE_COUNT)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Audit the maximal-ideal group even when the ideal is not maximal
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = SumModeArg::Pairwise)]
        sum_mode: SumModeArg,
        /// Exit with status 1 if any counterexample is found
        #[arg(long)]
        fail_on_counterexample: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpArg {
    Sum,
    Product,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumModeArg {
    Pairwise,
    Closure,
}

impl From<SumModeArg> for SumMode {
    fn from(arg: SumModeArg) -> SumMode {
        match arg {
            SumModeArg::Pairwise => SumMode::Pairwise,
            SumModeArg::Closure => SumMode::Closure,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Randomized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Machine,
}

enum CliError {
    Parse(String),
    Validation(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Validation(_) => EXIT_VALIDATION,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Validation(m) => m,
        }
    }
}

impl From<RingSpecError> for CliError {
    fn from(e: RingSpecError) -> Self {
        match e {
            RingSpecError::Syntax(_) => CliError::Parse(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<IdealSpecError> for CliError {
    fn from(e: IdealSpecError) -> Self {
        match &e {
            IdealSpecError::Syntax(_) => CliError::Parse(e.to_string()),
            IdealSpecError::Literal(SetParseError::Syntax(_))
            | IdealSpecError::Literal(SetParseError::BadElement(_)) => {
                CliError::Parse(e.to_string())
            }
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<SetParseError> for CliError {
    fn from(e: SetParseError) -> Self {
        match e {
            SetParseError::Syntax(_) | SetParseError::BadElement(_) => {
                CliError::Parse(e.to_string())
            }
            SetParseError::Set(_) => CliError::Validation(e.to_string()),
        }
    }
}

/// Runs a parsed invocation, printing to stdout and errors to stderr.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

#[derive(Debug)]
struct Outcome {
    output: String,
    exit_code: i32,
}

fn ok(output: String) -> Result<Outcome, CliError> {
    Ok(Outcome { output, exit_code: EXIT_OK })
}

fn dispatch(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::RingInfo { ring } => ring_info(&ring),
        Command::Ideals { ring, classify } => ideals(&ring, classify),
        Command::Approx { ring, ideal, set } => approx(&ring, &ideal, &set),
        Command::Algebra { ring, a, b, op, sum_mode } => algebra(&ring, &a, &b, op, sum_mode),
        Command::Audit {
            ring,
            ideal,
            props,
            mode,
            samples,
            seed,
            format,
            force,
            sum_mode,
            fail_on_counterexample,
        } => run_audit(AuditArgs {
            ring,
            ideal,
            props,
            mode,
            samples,
            seed,
            format,
            force,
            sum_mode: sum_mode.into(),
            fail_on_counterexample,
        }),
    }
}

fn ring_info(spec: &str) -> Result<Outcome, CliError> {
    let ring = parse_ring_spec(spec)?;
    let mut out = String::new();
    out.push_str(&format!("ring: {}\n", ring.name()));
    out.push_str(&format!("order: {}\n", ring.size()));
    out.push_str(&format!("zero: {}\n", ring.format_element(ring.zero())));
    out.push_str(&format!("one: {}\n", ring.format_element(ring.one())));
    if ring.is_zero_ring() {
        out.push_str("note: zero ring (0 = 1)\n");
    }
    if ring.has_distinct_labels() {
        out.push_str("elements:\n");
        for x in ring.elements() {
            out.push_str(&format!("  {} = ({})\n", x, tuple_body(ring.label(x))));
        }
    } else {
        let listed: Vec<String> = ring.elements().map(|x| x.to_string()).collect();
        out.push_str(&format!("elements: {}\n", listed.join(" ")));
    }
    ok(out)
}

fn tuple_body(label: &str) -> &str {
    label.trim_matches(|c| c == '(' || c == ')')
}

fn ideals(spec: &str, classify: bool) -> Result<Outcome, CliError> {
    let ring = parse_ring_spec(spec)?;
    let ideals = Ideal::all(&ring);
    let mut out = format!("ideals of {}: {}\n", ring.name(), ideals.len());
    let width = ideals.iter().map(|i| i.to_string().len()).max().unwrap_or(0);
    for ideal in &ideals {
        if classify {
            let c = ideal.classify();
            let mut flags = Vec::new();
            if !c.is_proper {
                flags.push("whole-ring".to_string());
            }
            if c.is_maximal {
                flags.push("maximal".to_string());
            }
            if c.is_prime {
                flags.push("prime".to_string());
            }
            if let Some(g) = c.principal_generator {
                flags.push(format!("principal<{g}>"));
            }
            out.push_str(&format!("{:<width$}  {}\n", ideal.to_string(), flags.join(" ")));
        } else {
            out.push_str(&format!("{ideal}\n"));
        }
    }
    ok(out)
}

fn approx(ring_spec: &str, ideal_spec: &str, set_literal: &str) -> Result<Outcome, CliError> {
    let ring = parse_ring_spec(ring_spec)?;
    let ideal = parse_ideal_spec(&ring, ideal_spec)?;
    let subset = ElementSet::parse(ring.size(), set_literal)?;
    let apr = rough::approximate(&ideal, &subset);
    let mut out = String::new();
    out.push_str(&format!("ring: {}\n", ring.name()));
    out.push_str(&format!("ideal: {}\n", ideal));
    out.push_str(&format!("set: {}\n", subset));
    out.push_str(&format!("lower = {}\n", apr.lower));
    out.push_str(&format!("upper = {}\n", apr.upper));
    out.push_str(&format!("boundary = {}\n", apr.boundary));
    out.push_str(&format!("rough = {}\n", apr.rough));
    ok(out)
}

fn algebra(
    ring_spec: &str,
    a_literal: &str,
    b_literal: &str,
    op: OpArg,
    sum_mode: SumModeArg,
) -> Result<Outcome, CliError> {
    let ring = parse_ring_spec(ring_spec)?;
    let a = ElementSet::parse(ring.size(), a_literal)?;
    let b = ElementSet::parse(ring.size(), b_literal)?;
    let mut out = String::new();
    out.push_str(&format!("ring: {}\n", ring.name()));
    out.push_str(&format!("A = {a}\n"));
    out.push_str(&format!("B = {b}\n"));
    match op {
        OpArg::Sum => {
            let result = rough::set_sum(&ring, &a, &b, sum_mode.into())
                .map_err(|e| CliError::Validation(e.to_string()))?;
            if sum_mode == SumModeArg::Closure {
                out.push_str("sum mode: closure\n");
            }
            out.push_str(&format!("A+B = {result}\n"));
        }
        OpArg::Product => {
            let result = rough::set_product(&ring, &a, &b)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            out.push_str(&format!("A*B = {result}\n"));
        }
    }
    ok(out)
}

struct AuditArgs {
    ring: String,
    ideal: String,
    props: Option<String>,
    mode: Option<ModeArg>,
    samples: u64,
    seed: u64,
    format: FormatArg,
    force: bool,
    sum_mode: SumMode,
    fail_on_counterexample: bool,
}

fn run_audit(args: AuditArgs) -> Result<Outcome, CliError> {
    let ring = parse_ring_spec(&args.ring)?;
    let ideal = parse_ideal_spec(&ring, &args.ideal)?;

    let groups = match &args.props {
        Some(list) => {
            let mut groups = Vec::new();
            for piece in list.split(',') {
                let group = PropertyGroup::parse_alias(piece).ok_or_else(|| {
                    CliError::Parse(format!(
                        "unknown property group `{piece}`: expected space, 3-1, 4-1, or 4-2"
                    ))
                })?;
                if !groups.contains(&group) {
                    groups.push(group);
                }
            }
            groups
        }
        None => {
            // Everything that applies: the maximal-ideal group is included
            // only when the ideal actually is maximal (or force is given).
            let mut groups = vec![PropertyGroup::SpaceProps];
            if args.force || ideal.is_maximal() {
                groups.push(PropertyGroup::Prop3_1);
            }
            groups.push(PropertyGroup::Prop4_1);
            groups.push(PropertyGroup::Prop4_2);
            groups
        }
    };

    let mode = match args.mode {
        Some(ModeArg::Exhaustive) => AuditMode::Exhaustive,
        Some(ModeArg::Randomized) => AuditMode::Randomized,
        None => {
            if ring.size() <= DEFAULT_MAX_EXHAUSTIVE_UNIVERSE {
                AuditMode::Exhaustive
            } else {
                AuditMode::Randomized
            }
        }
    };
    let strategy = Strategy {
        mode,
        max_universe_for_exhaustive: DEFAULT_MAX_EXHAUSTIVE_UNIVERSE,
        sample_count: args.samples,
        seed: args.seed,
    };

    let mut parts = Vec::new();
    for group in &groups {
        let part = match group {
            PropertyGroup::SpaceProps => {
                audit::audit_space_properties(&ideal.coset_partition(), &strategy)
            }
            PropertyGroup::Prop3_1 => audit::audit_prop_3_1(&ideal, &strategy, args.force),
            PropertyGroup::Prop4_1 => audit::audit_prop_4_1(&ideal, &strategy),
            PropertyGroup::Prop4_2 => audit::audit_prop_4_2(&ideal, &strategy, args.sum_mode),
        }
        .map_err(|e| CliError::Validation(e.to_string()))?;
        parts.push(part);
    }

    let ideal_descriptor = if args.ideal.trim().starts_with('{') {
        ideal.to_string()
    } else {
        format!("{} = {}", args.ideal.trim(), ideal)
    };
    let report = AuditReport::combine(ring.name().to_string(), Some(ideal_descriptor), parts);

    let output = match args.format {
        FormatArg::Text => report.to_text(),
        FormatArg::Machine => format!("{}\n", report.to_json()),
    };
    let exit_code = if args.fail_on_counterexample && report.has_counterexamples() {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    };
    Ok(Outcome { output, exit_code })
}
