//! Command-line front end: identity generation, verification of algebras and
//! Rota-Baxter operators, doubling, derived dendriform structures, and the
//! arity-3 dimension report.
//!
//! Exit codes: 0 success, 1 verification failure (a counterexample is
//! printed on stderr), 2 input error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};
use splitalg::doubling::{double_dendriform, verify_embedding};
use splitalg::fdalg::{
    derived_dendriform, read_algebra, read_operator, write_algebra, write_operator, FDAlgebra,
    Meta,
};
use splitalg::koszul::verify_koszul_tri;
use splitalg::successor::{
    generate_dendriform_identities, generate_variety_identities, GeneratedIdentitySet, Mode,
};
use splitalg::terms::Polynomial;
use splitalg::varieties::{parse_identity_file, VarietyPresentation};
use splitalg::{parse_rational, Error};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "splitalg", version, about = "identity splitting and exact verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Di,
    Tri,
    Stri,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Di => Mode::Di,
            ModeArg::Tri => Mode::Tri,
            ModeArg::Stri => Mode::STri,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate the identity system of a variety's splitting.
    Identities(IdentitiesArgs),
    /// Check an algebra against identities.
    Verify(VerifyArgs),
    /// Check a Rota-Baxter operator of a given weight.
    RbCheck(RbCheckArgs),
    /// Double a split algebra into an unsplit Rota-Baxter algebra.
    Double(DoubleArgs),
    /// Derive the split operations of a Rota-Baxter operator.
    Split(SplitArgs),
    /// Arity-3 dimension and orthogonality report for a quadratic variety.
    Koszul(KoszulArgs),
}

#[derive(Args)]
struct IdentitiesArgs {
    /// Builtin variety name or path to a variety file.
    #[arg(long)]
    variety: String,
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Generate the dendriform system instead of the plain splitting.
    #[arg(long)]
    dendriform: bool,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Algebra file (JSON).
    #[arg(long)]
    algebra: PathBuf,
    /// Identity file in the identity language.
    #[arg(long, conflicts_with_all = ["variety", "mode", "dendriform"])]
    identities: Option<PathBuf>,
    /// Builtin variety name or path to a variety file.
    #[arg(long)]
    variety: Option<String>,
    /// Splitting to generate; without it the variety's own identities are
    /// checked.
    #[arg(long, value_enum, requires = "variety")]
    mode: Option<ModeArg>,
    #[arg(long, requires = "mode")]
    dendriform: bool,
}

#[derive(Args)]
struct RbCheckArgs {
    #[arg(long)]
    algebra: PathBuf,
    #[arg(long)]
    operator: PathBuf,
    /// Weight as a rational, e.g. 0, -1 or 1/3.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Args)]
struct DoubleArgs {
    #[arg(long)]
    algebra: PathBuf,
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    weight: String,
    /// Output path for the doubled algebra (default: <stem>.double.json).
    #[arg(long)]
    out_algebra: Option<PathBuf>,
    /// Output path for the Rota-Baxter operator (default: <stem>.rb.json).
    #[arg(long)]
    out_operator: Option<PathBuf>,
}

#[derive(Args)]
struct SplitArgs {
    #[arg(long)]
    algebra: PathBuf,
    #[arg(long)]
    operator: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    /// Divide the pointing operations by the weight (needs weight != 0).
    #[arg(long, conflicts_with = "unscaled")]
    scaled: bool,
    #[arg(long)]
    unscaled: bool,
    /// Output path (default: <stem>.split.json).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct KoszulArgs {
    #[arg(long)]
    variety: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Identities(args) => cmd_identities(args),
        Command::Verify(args) => cmd_verify(args),
        Command::RbCheck(args) => cmd_rb_check(args),
        Command::Double(args) => cmd_double(args),
        Command::Split(args) => cmd_split(args),
        Command::Koszul(args) => cmd_koszul(args),
    }
}

/// Loads a builtin by name, or a variety file when the argument names one.
fn load_variety(spec: &str) -> Result<VarietyPresentation, Error> {
    if Path::new(spec).exists() {
        VarietyPresentation::load(spec)
    } else {
        VarietyPresentation::builtin(spec)
    }
}

fn sha256_hex(path: &Path) -> Result<String, Error> {
    let bytes = std::fs::read(path)?;
    Ok(format!("{:x}", Sha256::digest(&bytes)))
}

fn command_line() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn meta_for(inputs: &[&Path]) -> Result<Meta, Error> {
    let mut meta = Meta::new();
    meta.insert(
        "tool".into(),
        serde_json::json!(format!("splitalg {}", env!("CARGO_PKG_VERSION"))),
    );
    meta.insert("command".into(), serde_json::json!(command_line()));
    let mut digests = serde_json::Map::new();
    for path in inputs {
        digests.insert(
            path.display().to_string(),
            serde_json::json!(format!("sha256:{}", sha256_hex(path)?)),
        );
    }
    meta.insert("inputs".into(), serde_json::Value::Object(digests));
    Ok(meta)
}

fn text_header(inputs: &[&Path]) -> Result<String, Error> {
    let mut out = String::new();
    out.push_str(&format!("# splitalg {}\n", env!("CARGO_PKG_VERSION")));
    out.push_str(&format!("# command: {}\n", command_line()));
    for path in inputs {
        out.push_str(&format!(
            "# input: {} sha256={}\n",
            path.display(),
            sha256_hex(path)?
        ));
    }
    Ok(out)
}

fn cmd_identities(args: IdentitiesArgs) -> Result<ExitCode, Error> {
    let v = load_variety(&args.variety)?;
    let mode = Mode::from(args.mode);
    let set: GeneratedIdentitySet = if args.dendriform {
        generate_dendriform_identities(&v, mode)?
    } else {
        generate_variety_identities(&v, mode)?
    };
    let inputs: Vec<&Path> = if Path::new(&args.variety).exists() {
        vec![Path::new(&args.variety)]
    } else {
        vec![]
    };
    let text = format!("{}{}", text_header(&inputs)?, set.to_text());
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let algebra = read_algebra(&args.algebra)?;
    let identities: Vec<(String, Polynomial)> = if let Some(path) = &args.identities {
        let text = std::fs::read_to_string(path)?;
        let (sig, ids) = parse_identity_file(&text, algebra.signature().context)?;
        if sig.context != algebra.signature().context {
            return Err(Error::invalid(format!(
                "identity file context {} does not match algebra context {}",
                sig.context,
                algebra.signature().context
            )));
        }
        ids
    } else if let Some(vspec) = &args.variety {
        let v = load_variety(vspec)?;
        match args.mode {
            Some(mode) => {
                let set = if args.dendriform {
                    generate_dendriform_identities(&v, mode.into())?
                } else {
                    generate_variety_identities(&v, mode.into())?
                };
                set.labeled()
            }
            None => v
                .identities
                .iter()
                .map(|i| (i.id.clone(), i.poly.clone()))
                .collect(),
        }
    } else {
        return Err(Error::invalid("need --identities or --variety"));
    };
    let report = algebra.check_identities(&identities)?;
    if report.passed() {
        println!("{report}");
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{report}");
        Ok(ExitCode::from(1))
    }
}

fn cmd_rb_check(args: RbCheckArgs) -> Result<ExitCode, Error> {
    let algebra = read_algebra(&args.algebra)?;
    let operator = read_operator(&args.operator)?;
    let weight = parse_rational(&args.weight)?;
    let report = algebra.check_rota_baxter(&operator, &weight)?;
    if report.passed() {
        println!("{report}");
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{report}");
        Ok(ExitCode::from(1))
    }
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().unwrap_or_default().to_string_lossy();
    path.with_file_name(format!("{stem}.{suffix}.json"))
}

fn cmd_double(args: DoubleArgs) -> Result<ExitCode, Error> {
    let algebra = read_algebra(&args.algebra)?;
    let weight = parse_rational(&args.weight)?;
    let dd = double_dendriform(&algebra, args.mode.into(), &weight)?;
    // The construction is checked before anything is written.
    let rb = dd.algebra.check_rota_baxter(&dd.operator, &dd.weight)?;
    if !rb.passed() {
        eprintln!("{rb}");
        return Ok(ExitCode::from(1));
    }
    let emb = verify_embedding(&dd, &algebra)?;
    if !emb.passed() {
        eprintln!("{emb}");
        return Ok(ExitCode::from(1));
    }
    let out_algebra = args
        .out_algebra
        .unwrap_or_else(|| with_suffix(&args.algebra, "double"));
    let out_operator = args
        .out_operator
        .unwrap_or_else(|| with_suffix(&args.algebra, "rb"));
    let meta = meta_for(&[&args.algebra])?;
    write_algebra(&out_algebra, &dd.algebra, Some(meta.clone()))?;
    write_operator(&out_operator, &dd.operator, Some(meta))?;
    println!(
        "wrote {} (dim {}) and {} (weight {})",
        out_algebra.display(),
        dd.algebra.dim(),
        out_operator.display(),
        dd.weight
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_split(args: SplitArgs) -> Result<ExitCode, Error> {
    let algebra = read_algebra(&args.algebra)?;
    let operator = read_operator(&args.operator)?;
    let weight = parse_rational(&args.weight)?;
    let derived: FDAlgebra = derived_dendriform(&algebra, &operator, &weight, args.scaled)?;
    let out = args.out.unwrap_or_else(|| with_suffix(&args.algebra, "split"));
    let meta = meta_for(&[&args.algebra, &args.operator])?;
    write_algebra(&out, &derived, Some(meta))?;
    println!("wrote {} ({})", out.display(), derived.signature());
    Ok(ExitCode::SUCCESS)
}

fn cmd_koszul(args: KoszulArgs) -> Result<ExitCode, Error> {
    let v = load_variety(&args.variety)?;
    let report = verify_koszul_tri(&v)?;
    print!("{report}");
    if report.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
