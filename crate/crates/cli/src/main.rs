//! `chow`: Cayley-Chow forms of rational curves from the command line.
//!
//! Exit codes: 0 success, 2 input error, 3 mathematical degeneracy,
//! 4 internal cross-check failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chow_core::degeneration::{find_common_point, normalize_attachment};
use chow_core::io::{biform_json, format_biform, parse_curve_file, parse_plane};
use chow_core::{
    boundary_factor_check, cayley_biform, family_biform, implicitize_plane_curve, in_u, incident,
    incident_oracle, join_family, limit_direction, normalize, plucker_rewrite, CayleyBiform, CurveMap,
    Error, ParamSampler,
};
use clap::{Parser, Subcommand, ValueEnum};

/// Search range for integer parameters of a shared attachment point.
const ATTACH_BOUND: i64 = 6;

#[derive(Parser)]
#[command(name = "chow", version, about = "Cayley-Chow forms of rational curves")]
struct Cli {
    /// Seed for every sampling step.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normalized Cayley biform of a curve.
    Compute {
        file: PathBuf,
        /// Also print a Plücker representative.
        #[arg(long)]
        plucker: bool,
        /// Emit JSON instead of the term listing.
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a curve meets a codimension-2 plane.
    Incident {
        file: PathBuf,
        /// Covectors as "u0,...,un;v0,...,vn".
        #[arg(long, allow_hyphen_values = true)]
        plane: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Report base points, map degree and membership in the good locus.
    Check { file: PathBuf },
    /// Join two curves through a shared point and check the limit factors.
    Degenerate {
        f: PathBuf,
        g: PathBuf,
        /// Find a shared point and move it into attachment position first.
        #[arg(long)]
        normalize_attachment: bool,
        /// Write the family's coefficients by eps-order as CSV.
        #[arg(long, value_name = "PATH")]
        emit_eps_table: Option<PathBuf>,
    },
    /// Implicit equation of a plane curve.
    Implicitize { file: PathBuf },
    /// Rewrite the biform in Plücker coordinates.
    Plucker { file: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Chow,
    Oracle,
    Both,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::DependentCovectors
            | Error::Attachment(_)
            | Error::Dimension(_)
            | Error::InvalidCurve(_)
            | Error::DegreeMismatch(..) => 2,
            Error::DegenerateCayleyForm
            | Error::BaseLocus
            | Error::NotInU(_)
            | Error::Sampling(_)
            | Error::BothZero => 3,
            _ => 4,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read_curve(path: &Path) -> Result<CurveMap, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))?;
    parse_curve_file(&text).map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn normalized(ca: &CayleyBiform) -> Result<CayleyBiform, Failure> {
    if ca.is_zero() {
        return Err(Failure::new(3, "Cayley biform is zero: the components share a root"));
    }
    Ok(normalize(ca)?)
}

fn compute(file: &Path, plucker: bool, json: bool, seed: u64) -> Outcome {
    let f = read_curve(file)?;
    let mut sampler = ParamSampler::new(seed);
    match in_u(&f, &mut sampler) {
        Ok(r) if r.in_u => {}
        Ok(r) => eprintln!(
            "warning: curve is not in the good locus: {}",
            serde_json::to_string(&r).expect("report serializes")
        ),
        Err(e) => eprintln!("warning: {e}"),
    }
    let ca = normalized(&cayley_biform(&f))?;
    let mut out = if json {
        let mut s = serde_json::to_string(&biform_json(&ca)).expect("biform serializes");
        s.push('\n');
        s
    } else {
        format_biform(&ca)
    };
    if plucker {
        let rep = plucker_rewrite(&ca)?;
        let _ = writeln!(out, "plucker: {}", rep.poly());
        let _ = writeln!(out, "canonical: {}", if rep.is_canonical() { "yes" } else { "no" });
    }
    Ok(out)
}

fn verdict(b: bool) -> &'static str {
    if b {
        "INCIDENT"
    } else {
        "DISJOINT"
    }
}

fn incident_cmd(file: &Path, plane: &str, method: Method) -> Outcome {
    let f = read_curve(file)?;
    let plane = parse_plane(plane)?;
    if plane.n() != f.n() {
        return Err(Failure::new(2, format!("plane lives in P^{}, curve in P^{}", plane.n(), f.n())));
    }
    let chow = || -> Result<bool, Failure> { Ok(incident(&normalized(&cayley_biform(&f))?, &plane)?) };
    Ok(match method {
        Method::Chow => format!("{}\n", verdict(chow()?)),
        Method::Oracle => format!("{}\n", verdict(incident_oracle(&f, &plane)?)),
        Method::Both => {
            let (a, b) = (chow()?, incident_oracle(&f, &plane)?);
            let out = format!("chow: {}\noracle: {}\n", verdict(a), verdict(b));
            if a != b {
                return Err(Failure::new(4, format!("{out}DISAGREE")));
            }
            out + "AGREE\n"
        }
    })
}

fn check(file: &Path, seed: u64) -> Outcome {
    let f = read_curve(file)?;
    let report = in_u(&f, &mut ParamSampler::new(seed))?;
    let mut value = serde_json::to_value(&report).expect("report serializes");
    value["seed"] = seed.into();
    Ok(format!("{value}\n"))
}

fn eps_table(family: &CayleyBiform) -> Result<String, Failure> {
    let mut out = String::from("eps_order,u,v,coeff\n");
    for t in family.terms().into_iter().rev() {
        let join = |e: &[u32]| e.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "{},{},{},{}", t.eps, join(&t.alpha), join(&t.beta), t.coeff);
    }
    Ok(out)
}

fn degenerate(f: &Path, g: &Path, attach: bool, table: Option<&Path>) -> Outcome {
    let (mut f, mut g) = (read_curve(f)?, read_curve(g)?);
    if attach {
        let (zf, zg) = find_common_point(&f, &g, ATTACH_BOUND).ok_or_else(|| {
            Failure::new(
                2,
                format!("no shared point with nonzero coordinates at parameters in [-{ATTACH_BOUND}, {ATTACH_BOUND}]"),
            )
        })?;
        (f, g) = normalize_attachment(&f, &g, &zf, &zg)?;
    }
    let family = join_family(&f, &g)?;
    let biform = family_biform(&family);
    if let Some(path) = table {
        std::fs::write(path, eps_table(&biform)?)
            .map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))?;
    }
    let limit = limit_direction(&biform)?;
    let parts = [normalized(&cayley_biform(&f))?, normalized(&cayley_biform(&g))?];
    let product = normalized(&parts[0].mul(&parts[1])?)?;
    let factors = boundary_factor_check(&limit, &parts)?;
    let out = format!(
        "limit:\n{}product:\n{}FACTORS:{}",
        format_biform(&limit),
        format_biform(&product),
        if factors { "yes" } else { "no" }
    );
    if factors {
        Ok(out + "\n")
    } else {
        Err(Failure::new(4, out))
    }
}

fn implicitize(file: &Path, seed: u64) -> Outcome {
    let f = read_curve(file)?;
    if f.n() != 2 {
        return Err(Failure::new(2, format!("implicitization needs a plane curve, got P^{}", f.n())));
    }
    let eq = implicitize_plane_curve(&f, &mut ParamSampler::new(seed))?;
    Ok(format!("{eq}\n"))
}

fn plucker(file: &Path) -> Outcome {
    let f = read_curve(file)?;
    let rep = plucker_rewrite(&normalized(&cayley_biform(&f))?)?;
    Ok(format!(
        "{}\ncanonical: {}\n",
        rep.poly(),
        if rep.is_canonical() { "yes" } else { "no" }
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.seed;
    let result = match &cli.command {
        Command::Compute { file, plucker, json } => compute(file, *plucker, *json, seed),
        Command::Incident { file, plane, method } => incident_cmd(file, plane, *method),
        Command::Check { file } => check(file, seed),
        Command::Degenerate { f, g, normalize_attachment, emit_eps_table } => {
            degenerate(f, g, *normalize_attachment, emit_eps_table.as_deref())
        }
        Command::Implicitize { file } => implicitize(file, seed),
        Command::Plucker { file } => plucker(file),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if f.code == 4 {
                // cross-check failures still print their full report
                println!("{}", f.message);
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
