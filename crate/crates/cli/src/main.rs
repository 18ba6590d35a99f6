use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use jackgl::dunkl::{dunkl_eigenvalue, nonsym_jack, DunklSpec};
use jackgl::fock::fock_eigen_json;
use jackgl::macdonald::{jack_gln_p, macdonald_p, Gamma, JackContext};
use jackgl::partition::{parse_composition, parse_partition};
use jackgl::yangian::*;
use jackgl::{Basis, Composition, Error, Param, ParamRational, Partition, SymFunc};

mod verify;

#[derive(Parser)]
#[command(name = "jackgl", version, about = "Exact Jack(gl_N) functions and Yangian blocks of the Fock space")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    M,
    S,
    P,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::Monomial,
            BasisArg::S => Basis::Schur,
            BasisArg::P => Basis::Power,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleArg {
    Fock,
    Basic,
}

/// β: an exact rational, or `formal` for the symbol `b`.
#[derive(Clone, Debug)]
struct Beta(ParamRational);

fn parse_beta(s: &str) -> Result<Beta, String> {
    if s == "formal" || s == "b" {
        return Ok(Beta(ParamRational::param(Param::B)));
    }
    let v = parse_rational(s)?;
    match v.as_rational() {
        Some(r) if r > jackgl::Rational::from_integer(0.into()) => Ok(Beta(v)),
        _ => Err(format!("β must be a positive rational or `formal`, got {:?}", s)),
    }
}

fn parse_rational(s: &str) -> Result<ParamRational, String> {
    if s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(format!("{:?} is not an exact rational", s));
    }
    let v: ParamRational = s.parse().map_err(|e: Error| e.to_string())?;
    if v.as_rational().is_none() {
        return Err(format!("{:?} is not a number", s));
    }
    Ok(v)
}

fn parse_gamma(s: &str) -> Result<Gamma, String> {
    match s {
        "formal" | "g" => Ok(Gamma::Formal),
        "inf" | "infinity" => Ok(Gamma::Infinity),
        _ => Ok(Gamma::Value(parse_rational(s)?)),
    }
}

fn parse_part(s: &str) -> Result<Partition, String> {
    parse_partition(s).map_err(|e| e.to_string())
}

fn parse_comp(s: &str) -> Result<Composition, String> {
    parse_composition(s).map_err(|e| e.to_string())
}

fn parse_skew(s: &str) -> Result<(Partition, Partition), String> {
    let (a, b) = s.split_once('/').ok_or_else(|| format!("skew shape {:?} needs the form nu/mu", s))?;
    Ok((parse_part(a)?, parse_part(b)?))
}

#[derive(Subcommand)]
enum Cmd {
    /// Macdonald polynomial P_λ(q,t).
    Macdonald {
        #[arg(long, value_parser = parse_part)]
        partition: Partition,
        #[arg(long, value_enum, default_value = "m")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Jack(gl_N) function P_λ^{(γ,N)}.
    Jack {
        #[arg(long, value_parser = parse_part)]
        partition: Partition,
        #[arg(long = "N")]
        big_n: usize,
        /// `formal`, `inf`, `0` or an exact rational.
        #[arg(long, value_parser = parse_gamma, default_value = "formal")]
        gamma: Gamma,
        #[arg(long, value_enum, default_value = "m")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Non-symmetric Jack polynomial E_t in n = len(t) variables.
    Nonsym {
        /// Comma-separated integers, e.g. `--t=-1,2,0`.
        #[arg(long, value_parser = parse_comp, allow_hyphen_values = true)]
        t: Composition,
        #[arg(long, value_parser = parse_beta, default_value = "formal")]
        beta: Beta,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Eigenvector X_{o+λ} of the spin Sutherland Hamiltonian in n-wedges.
    Fock {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_beta)]
        beta: Beta,
        #[arg(long, value_parser = parse_part)]
        partition: Partition,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Yangian block of a coordinate configuration, or all blocks up to a degree.
    Decompose {
        #[arg(long = "N")]
        big_n: usize,
        /// Coordinate configuration such as `0^2,1,2^3`.
        #[arg(long)]
        m: Option<String>,
        #[arg(long = "degree-max")]
        degree_max: Option<usize>,
        #[arg(long, value_enum, default_value = "fock")]
        module: ModuleArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Ribbon and semi-standard tableaux of a configuration in W_N.
    Ribbon {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        m: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Drinfeld polynomials of a skew diagram or of a block.
    Drinfeld {
        #[arg(long = "N")]
        big_n: usize,
        /// Skew diagram `nu/mu`.
        #[arg(long, value_parser = parse_skew, conflicts_with = "m")]
        skew: Option<(Partition, Partition)>,
        #[arg(long)]
        m: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Runs a property suite and reports pass/fail counts.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: verify::Suite,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn config(s: &str, big_n: usize) -> Result<CoordinateConfig, Failure> {
    CoordinateConfig::parse(s, big_n).map_err(|e| match Failure::from(e) {
        Failure::Usage(m) => Failure::Usage(format!("--m: {}", m)),
        Failure::Domain(m) => Failure::Domain(format!("--m: {}", m)),
    })
}

fn check_n(big_n: usize) -> Result<(), Failure> {
    if big_n == 0 {
        return Err(Failure::Usage("--N must be positive".into()));
    }
    Ok(())
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable output")
}

fn symfunc_text(f: &SymFunc, big_n: usize) -> String {
    let mut s = String::new();
    for (l, c) in f.sorted_terms() {
        s.push_str(&format!("{} {} {}\n", f.basis().letter(), l, c));
        s.push_str(&l.diagram(big_n));
    }
    if f.is_zero() {
        s.push_str("0\n");
    }
    s
}

fn block_text(t: &BlockTable, big_n: usize) -> String {
    let m = CoordinateConfig::new(big_n, t.m.clone()).map(|m| m.to_string()).unwrap_or_default();
    let mut s = format!("block m = {}  singular {}\n", m, t.singular);
    if let Ok(d) = DrinfeldSet::from_json(&t.drinfeld) {
        if !t.drinfeld.is_empty() {
            s.push_str(&format!("drinfeld {}\n", d.report().polynomials.join(", ")));
        }
    }
    for l in &t.members {
        s.push_str(&format!("{}\n{}", l, l.diagram(big_n)));
    }
    s
}

fn run(cmd: Cmd) -> Result<String, Failure> {
    Ok(match cmd {
        Cmd::Macdonald { partition, basis, format } => {
            let f = macdonald_p(&partition).to_basis(basis.into());
            match format {
                Format::Json => json(&f.to_json()),
                Format::Text => symfunc_text(&f, 1),
            }
        }
        Cmd::Jack { partition, big_n, gamma, basis, format } => {
            check_n(big_n)?;
            let f = jack_gln_p(&partition, &JackContext::new(big_n, gamma))?.to_basis(basis.into());
            match format {
                Format::Json => json(&f.to_json()),
                Format::Text => symfunc_text(&f, big_n),
            }
        }
        Cmd::Nonsym { t, beta, format } => {
            if t.is_empty() {
                return Err(Failure::Usage("--t must be nonempty".into()));
            }
            let spec = DunklSpec::new(t.len(), beta.0.clone())?;
            let e = nonsym_jack(&t, &spec)?;
            match format {
                Format::Json => json(&e.to_json()),
                Format::Text => {
                    let mut s = format!("E_{:?}\n", t.0);
                    for i in 1..=t.len() {
                        s.push_str(&format!("f_{} = {}\n", i, dunkl_eigenvalue(&t, i, &beta.0)));
                    }
                    for term in e.to_json().terms {
                        s.push_str(&format!("{:?} {}\n", term.exp, term.coeff));
                    }
                    s
                }
            }
        }
        Cmd::Fock { big_n, n, beta, partition, format } => {
            check_n(big_n)?;
            let r = fock_eigen_json(&partition, n, &beta.0, big_n)?;
            match format {
                Format::Json => json(&r),
                Format::Text => {
                    let mut s = format!("X_(o+{}) n = {} energy {}\n{}", partition, n, r.energy, partition.diagram(big_n));
                    for term in &r.vector.terms {
                        s.push_str(&format!("{} {}\n", term.wedge, term.coeff));
                    }
                    s
                }
            }
        }
        Cmd::Decompose { big_n, m, degree_max, module, format } => {
            check_n(big_n)?;
            let kind = match module {
                ModuleArg::Fock => ModuleKind::Fock,
                ModuleArg::Basic => ModuleKind::Basic,
            };
            let configs: Vec<CoordinateConfig> = match (m, degree_max) {
                (Some(m), None) => vec![config(&m, big_n)?],
                (None, Some(d)) => blocks_up_to(d, big_n)
                    .into_iter()
                    .filter(|m| kind == ModuleKind::Fock || m.in_w_n())
                    .collect(),
                _ => return Err(Failure::Usage("give exactly one of --m and --degree-max".into())),
            };
            let tables: Vec<BlockTable> = configs.iter().map(|m| block_table(m, kind)).collect::<Result<_, _>>()?;
            match format {
                Format::Json if tables.len() == 1 && degree_max.is_none() => json(&tables[0]),
                Format::Json => json(&tables),
                Format::Text => tables.iter().map(|t| block_text(t, big_n)).collect::<Vec<_>>().join("\n"),
            }
        }
        Cmd::Ribbon { big_n, m, format } => {
            check_n(big_n)?;
            let r = ribbon_table(&config(&m, big_n)?)?;
            match format {
                Format::Json => json(&r),
                Format::Text => {
                    let mut s = format!("ribbon {} = {}/{}\n", Ribbon(r.ribbon.clone()), r.nu, r.mu);
                    s.push_str(&format!("{} semi-standard tableaux\n", r.tableaux.len()));
                    for t in &r.tableaux {
                        s.push_str(&format!("{:?}\n", t));
                    }
                    s
                }
            }
        }
        Cmd::Drinfeld { big_n, skew, m, format } => {
            check_n(big_n)?;
            let d = match (skew, m) {
                (Some((nu, mu)), None) => drinfeld_skew(&nu, &mu, big_n)?,
                (None, Some(m)) => drinfeld_block(&config(&m, big_n)?)?,
                _ => return Err(Failure::Usage("give exactly one of --skew and --m".into())),
            };
            let r = d.report();
            match format {
                Format::Json => json(&r),
                Format::Text => r
                    .polynomials
                    .iter()
                    .enumerate()
                    .map(|(i, p)| format!("P{} = {}\n", i + 1, p))
                    .collect(),
            }
        }
        Cmd::Verify { suite, format } => {
            let report = verify::run(suite);
            let out = match format {
                Format::Json => json(&report),
                Format::Text => report.text(),
            };
            if report.failed > 0 {
                emit(&out);
                return Err(Failure::Domain(format!("{} checks failed", report.failed)));
            }
            out
        }
    })
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(out: &str) {
    let mut h = std::io::stdout().lock();
    let _ = writeln!(h, "{}", out.trim_end());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}
