//! Command-line front end. [`run`] takes the argument vector and output
//! streams and returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | a check or verification row failed |
//! | 2 | usage or input error |
//! | 3 | computation error |

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use socle_lab::families::{build_family, verify_all, FamilyKind, VerifyConfig};
use socle_lab::groebner::cache::{self, CacheConfig};
use socle_lab::invariants;
use socle_lab::report::SCHEMA;
use socle_lab::script::{parse_script, Interpreter};
use socle_lab::{subalgebra_presentation, Error, Ideal, RingPresentation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "socle-lab", version, about = "Colon ideals, lengths, socles and multiplicities in local rings")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Do not read or write cached Gröbner bases.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Directory for cached Gröbner bases (default: $SOCLE_LAB_CACHE_DIR or the user cache directory).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct RingArg {
    /// Ring such as "F101[x,y] / (x*y)" or "Q[x,y,z] lex".
    #[arg(long)]
    ring: String,
}

#[derive(Args, Debug, Clone)]
struct IdealArgs {
    #[command(flatten)]
    ring: RingArg,
    /// Generators such as "(x^2, x*y + y^2)".
    #[arg(long)]
    ideal: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis of the preimage of an ideal.
    Gb(IdealArgs),
    /// Normal form of a polynomial modulo an ideal.
    Nf {
        #[command(flatten)]
        args: IdealArgs,
        #[arg(long)]
        poly: String,
    },
    /// Colon ideal I : J.
    Colon {
        #[command(flatten)]
        args: IdealArgs,
        #[arg(long, value_name = "IDEAL")]
        by: String,
    },
    /// Intersection of two ideals.
    Intersect {
        #[command(flatten)]
        args: IdealArgs,
        #[arg(long, value_name = "IDEAL")]
        with: String,
    },
    /// Length of R/I at the origin.
    Length(IdealArgs),
    /// Length of the socle (I : m)/I.
    Socle(IdealArgs),
    /// Minimal number of generators.
    Mu(IdealArgs),
    /// Hilbert–Samuel multiplicity of a parameter ideal.
    Mult {
        #[command(flatten)]
        args: IdealArgs,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Length minus multiplicity of a parameter ideal.
    Defect {
        #[command(flatten)]
        args: IdealArgs,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Certified lower bound for the depth.
    Depth {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Least n with I^(n+1) = Q I^n; I defaults to Q : m.
    Stability {
        #[command(flatten)]
        ring: RingArg,
        /// The parameter ideal Q.
        #[arg(long)]
        q: String,
        /// The ideal I (default Q : m).
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
    /// Presentation of the subalgebra generated by polynomials in a target ring.
    Present {
        /// Target ring.
        #[command(flatten)]
        ring: RingArg,
        /// Images of the new variables, such as "(x, u*x)".
        #[arg(long)]
        images: String,
        /// Comma-separated names of the new variables.
        #[arg(long)]
        vars: String,
    },
    /// Rebuild a ring family and check its expected invariants.
    VerifyFamily(VerifyArgs),
    /// Run script files.
    Run {
        #[arg(required = true)]
        scripts: Vec<PathBuf>,
        /// Seed for `depth` in scripts.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// counterexample, fiber, field-ext, regular or semigroup.
    family: String,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Field characteristic; 0 means Q.
    #[arg(long = "char", default_value_t = 101)]
    characteristic: u32,
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    kmax: u32,
    #[arg(long)]
    nmax: Option<usize>,
    /// Minimal polynomial in `u` for the field-extension family.
    #[arg(long)]
    minpoly: Option<String>,
    /// Random attempts for the depth probe.
    #[arg(long, default_value_t = 3)]
    trials: usize,
    /// Record wall time per row.
    #[arg(long)]
    timings: bool,
}

/// JSON form of a single-result command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommandReport {
    pub schema: String,
    pub tool_version: String,
    pub command: String,
    pub ring: String,
    pub inputs: BTreeMap<String, String>,
    pub result: Value,
}

enum Outcome {
    /// Text, JSON result, inputs.
    Single { text: String, result: Value, ring: String, inputs: BTreeMap<String, String> },
    /// Already rendered output with its exit code.
    Rendered { out: String, code: i32 },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidField(_)
        | Error::InvalidRing(_)
        | Error::UnknownVariable(_)
        | Error::RingMismatch { .. } => EXIT_USAGE,
        _ => EXIT_COMPUTATION,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    configure_cache(&cli);
    let json = cli.json;
    let name = command_name(&cli.command);
    match execute(cli.command, json) {
        Ok(Outcome::Single { text, result, ring, inputs }) => {
            let rendered = if json {
                let report = CommandReport {
                    schema: SCHEMA.into(),
                    tool_version: socle_lab::VERSION.into(),
                    command: name.into(),
                    ring,
                    inputs,
                    result,
                };
                serde_json::to_string_pretty(&report).expect("report serializes")
            } else {
                text
            };
            let _ = writeln!(out, "{rendered}");
            EXIT_OK
        }
        Ok(Outcome::Rendered { out: text, code }) => {
            let _ = write!(out, "{text}");
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn configure_cache(cli: &Cli) {
    let config = if cli.no_cache {
        CacheConfig { memory: false, disk_dir: None }
    } else {
        CacheConfig { memory: true, disk_dir: cli.cache_dir.clone().or_else(cache::default_disk_dir) }
    };
    cache::configure(config);
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gb(_) => "gb",
        Command::Nf { .. } => "nf",
        Command::Colon { .. } => "colon",
        Command::Intersect { .. } => "intersect",
        Command::Length(_) => "length",
        Command::Socle(_) => "socle",
        Command::Mu(_) => "mu",
        Command::Mult { .. } => "mult",
        Command::Defect { .. } => "defect",
        Command::Depth { .. } => "depth",
        Command::Stability { .. } => "stability",
        Command::Present { .. } => "present",
        Command::VerifyFamily(_) => "verify-family",
        Command::Run { .. } => "run",
    }
}

fn load(args: &IdealArgs) -> Result<(Arc<RingPresentation>, Ideal), Failure> {
    let ring = RingPresentation::parse(&args.ring.ring)?;
    let ideal = ring.parse_ideal(&args.ideal)?;
    Ok((ring, ideal))
}

fn inputs(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

fn single(ring: &RingPresentation, inputs: BTreeMap<String, String>, text: String, result: Value) -> Outcome {
    Outcome::Single { text, result, ring: ring.to_string(), inputs }
}

fn number(ring: &RingPresentation, args: &IdealArgs, n: u64) -> Outcome {
    single(ring, inputs(&[("ideal", &args.ideal)]), n.to_string(), Value::from(n))
}

fn ideal_outcome(ring: &RingPresentation, inputs: BTreeMap<String, String>, ideal: &Ideal) -> Result<Outcome, Failure> {
    let ideal = ideal.compact()?;
    let gens: Vec<String> = ideal.gens().iter().map(|g| g.to_string()).collect();
    Ok(single(ring, inputs, ideal.to_string(), json!(gens)))
}

fn execute(command: Command, json: bool) -> Result<Outcome, Failure> {
    match command {
        Command::Gb(args) => {
            let (ring, ideal) = load(&args)?;
            let gb = ideal.basis()?;
            let gens: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
            Ok(single(&ring, inputs(&[("ideal", &args.ideal)]), format!("({})", gens.join(", ")), json!(gens)))
        }
        Command::Nf { args, poly } => {
            let (ring, ideal) = load(&args)?;
            let f = ring.parse_poly(&poly)?;
            let nf = ideal.normal_form(&f)?.to_string();
            Ok(single(&ring, inputs(&[("ideal", &args.ideal), ("poly", &poly)]), nf.clone(), Value::from(nf)))
        }
        Command::Colon { args, by } => {
            let (ring, ideal) = load(&args)?;
            let j = ring.parse_ideal(&by)?;
            ideal_outcome(&ring, inputs(&[("ideal", &args.ideal), ("by", &by)]), &ideal.colon(&j)?)
        }
        Command::Intersect { args, with } => {
            let (ring, ideal) = load(&args)?;
            let j = ring.parse_ideal(&with)?;
            ideal_outcome(&ring, inputs(&[("ideal", &args.ideal), ("with", &with)]), &ideal.intersect(&j)?)
        }
        Command::Length(args) => {
            let (ring, ideal) = load(&args)?;
            Ok(number(&ring, &args, invariants::length(&ideal)?))
        }
        Command::Socle(args) => {
            let (ring, ideal) = load(&args)?;
            Ok(number(&ring, &args, invariants::socle(&ideal)?.length))
        }
        Command::Mu(args) => {
            let (ring, ideal) = load(&args)?;
            Ok(number(&ring, &args, invariants::min_generators(&ideal)?))
        }
        Command::Mult { args, nmax } => {
            let (ring, ideal) = load(&args)?;
            let m = invariants::multiplicity_with(&ideal, nmax)?;
            let text = m.value.to_string();
            let result = json!({ "multiplicity": m.value, "colengths": m.colengths });
            Ok(single(&ring, inputs(&[("ideal", &args.ideal)]), text, result))
        }
        Command::Defect { args, nmax } => {
            let (ring, ideal) = load(&args)?;
            let len = invariants::length(&ideal)?;
            let e = invariants::multiplicity_with(&ideal, nmax)?.value;
            let defect = len as i64 - e as i64;
            let result = json!({ "defect": defect, "length": len, "multiplicity": e });
            Ok(single(&ring, inputs(&[("ideal", &args.ideal)]), defect.to_string(), result))
        }
        Command::Depth { ring, trials, seed } => {
            let pres = RingPresentation::parse(&ring.ring)?;
            let probe = invariants::depth_probe(&pres, trials, seed)?;
            let witness: Vec<String> = probe.witness.iter().map(|f| f.to_string()).collect();
            let text = format!("{} (dimension {})", probe.bound, probe.dimension);
            let result = json!({ "lower_bound": probe.bound, "dimension": probe.dimension, "witness": witness });
            let seed = seed.to_string();
            let trials = trials.to_string();
            Ok(single(&pres, inputs(&[("seed", &seed), ("trials", &trials)]), text, result))
        }
        Command::Stability { ring, q, ideal, kmax } => {
            let pres = RingPresentation::parse(&ring.ring)?;
            let qi = pres.parse_ideal(&q)?;
            let i = match &ideal {
                Some(src) => pres.parse_ideal(src)?,
                None => qi.colon(&pres.max_ideal()?)?,
            };
            let st = invariants::stability_index(&i, &qi, kmax)?;
            let text = st.index.map_or("none".to_string(), |n| n.to_string());
            let result = json!({ "index": st.index, "checks": st.checks });
            let mut inp = inputs(&[("q", &q)]);
            if let Some(src) = ideal {
                inp.insert("ideal".into(), src);
            }
            Ok(single(&pres, inp, text, result))
        }
        Command::Present { ring, images, vars } => {
            let target = RingPresentation::parse(&ring.ring)?;
            let imgs = socle_lab::text::parse_polynomial_list(target.poly_ring(), &images)?;
            let names: Vec<&str> = vars.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let kernel = subalgebra_presentation(&target, &imgs, &names)?;
            let pres = kernel.presentation().clone();
            ideal_outcome(&pres, inputs(&[("images", &images), ("vars", &vars)]), &kernel)
        }
        Command::VerifyFamily(args) => verify_family(args, json),
        Command::Run { scripts, seed } => run_scripts(&scripts, seed, json),
    }
}

fn verify_family(args: VerifyArgs, json: bool) -> Result<Outcome, Failure> {
    let usage = |e: Error| Failure { code: EXIT_USAGE, message: e.to_string() };
    let kind: FamilyKind = args.family.parse().map_err(usage)?;
    let instances =
        build_family(kind, args.m, args.d, args.characteristic, args.minpoly.as_deref()).map_err(usage)?;
    let config = VerifyConfig {
        samples: args.samples,
        seed: args.seed,
        kmax: args.kmax,
        nmax: args.nmax,
        depth_trials: args.trials,
        timings: args.timings,
    };
    let report = verify_all(&instances, &config)?;
    let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
    let out = if json { format!("{}\n", report.to_json()) } else { report.to_text() };
    Ok(Outcome::Rendered { out, code })
}

fn run_scripts(paths: &[PathBuf], seed: u64, json: bool) -> Result<Outcome, Failure> {
    let mut text = String::new();
    let mut files = Vec::new();
    let mut all_passed = true;
    for path in paths {
        let src = std::fs::read_to_string(path)
            .map_err(|e| Failure { code: EXIT_USAGE, message: format!("{}: {e}", path.display()) })?;
        let script = parse_script(&src)
            .map_err(|e| Failure { code: EXIT_USAGE, message: format!("{}:{e}", path.display()) })?;
        let mut interp = Interpreter::new();
        interp.seed = seed;
        let outcome = interp
            .run(&script)
            .map_err(|e| Failure { code: EXIT_COMPUTATION, message: format!("{}:{e}", path.display()) })?;
        for line in &outcome.output {
            text.push_str(line);
            text.push('\n');
        }
        let mut checks = Vec::new();
        for c in &outcome.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            text.push_str(&format!("{status} {}:{} {} [{}]\n", path.display(), c.pos, c.statement, c.detail));
            checks.push(json!({
                "position": c.pos.to_string(),
                "statement": c.statement,
                "passed": c.passed,
                "detail": c.detail,
            }));
        }
        all_passed &= outcome.all_passed();
        files.push(json!({ "script": path.display().to_string(), "output": outcome.output, "checks": checks }));
    }
    let code = if all_passed { EXIT_OK } else { EXIT_FAILED };
    let out = if json {
        let doc = json!({ "schema": SCHEMA, "tool_version": socle_lab::VERSION, "command": "run", "scripts": files });
        format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializes"))
    } else {
        text
    };
    Ok(Outcome::Rendered { out, code })
}
