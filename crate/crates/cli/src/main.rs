use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cmspace::catalogue::{
    a4_ring, listed_basis, derive_cm4, jacobiator, relations, BracketTable, EqualityMode, SetName,
};
use cmspace::exactmat::{fmt_scalar, int, parse_scalar};
use cmspace::polyring::{parse_polynomial_list, HilbertSeries, TermOrder};
use cmspace::presentation::{
    certification_order, certify_free_basis, certify_gb_of, certify_hilbert_cm4,
    certify_hilbert_com4, derive_com4, discriminant_check, expected_hilbert_series,
    fourier_preserves_ideal, jacobi_failures, random_triples, verify_brackets, verify_variety,
    PresentationReport,
};
use cmspace::varieties::Variety;

/// Exact verification of the fourth Calogero-Moser space and the invariant
/// commuting variety.
#[derive(Parser, Debug)]
#[command(name = "cmspace", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    run: RunFlags,
}

#[derive(Args, Debug, Clone)]
struct RunFlags {
    /// Matrix dimension.
    #[arg(long, global = true, default_value_t = 4)]
    n: usize,
    /// Number of random points.
    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Directory for output files when --output is not given.
    #[arg(long, global = true, env = "CMSPACE_OUTPUT_DIR")]
    output_dir: Option<PathBuf>,
    /// `cert` (a1, a2, a14, ..., a3), `default` (a1, ..., a14), or a
    /// comma-separated precedence of all fourteen generators.
    #[arg(long, global = true, default_value = "cert")]
    order: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate relations and identities at points of a variety.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
    },
    /// Rederive the relation catalogues from brackets and top components.
    Derive {
        #[arg(value_enum)]
        what: DeriveTarget,
    },
    /// Gröbner basis certification of the fifteen CM4 relations.
    Groebner {
        #[arg(value_enum)]
        action: GroebnerAction,
        /// Candidate polynomials, one per line, instead of the built-in list.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Hilbert series of the coordinate rings of CM4 and COM4.
    Hilbert,
    /// Free-module basis over the spectral subring.
    Basis,
    /// Discriminant identity for w1.
    Discriminant,
    /// Print a relation catalogue or the bracket table.
    Export {
        #[command(subcommand)]
        what: ExportTarget,
    },
    /// Run every suite.
    Report {
        #[arg(value_enum)]
        what: ReportTarget,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyTarget {
    Cm,
    Com,
    Brackets,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DeriveTarget {
    Relations,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GroebnerAction {
    Check,
    Complete,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportTarget {
    All,
}

#[derive(Subcommand, Debug)]
enum ExportTarget {
    Relations {
        /// CM2, CM3, CM4, CM4_EXTRA or COM4.
        #[arg(long, default_value = "CM4")]
        set: String,
        /// Parameter of the CM3 family.
        #[arg(long, default_value = "1")]
        v: String,
    },
    Table,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn parse_order(spec: &str) -> Result<TermOrder, Failure> {
    let ring = a4_ring();
    match spec {
        "cert" => Ok(certification_order()),
        "default" => Ok(ring.default_order()),
        list => {
            let names: Vec<&str> = list.split(',').map(str::trim).collect();
            Ok(TermOrder::with_precedence(&ring, &names)?)
        }
    }
}

fn command_name(cmd: &Command) -> String {
    match cmd {
        Command::Verify { target } => format!("verify {}", name_of(target)),
        Command::Derive { what } => format!("derive {}", name_of(what)),
        Command::Groebner { action, .. } => format!("groebner {}", name_of(action)),
        Command::Hilbert => "hilbert".into(),
        Command::Basis => "basis".into(),
        Command::Discriminant => "discriminant".into(),
        Command::Export { what } => match what {
            ExportTarget::Relations { .. } => "export relations".into(),
            ExportTarget::Table => "export table".into(),
        },
        Command::Report { what } => format!("report {}", name_of(what)),
    }
}

fn name_of<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

fn config_json(cli: &Cli, order: &TermOrder) -> Value {
    json!({
        "command": command_name(&cli.command),
        "seed": cli.run.seed,
        "trials": cli.run.trials,
        "n": cli.run.n,
        "order": order.describe(&a4_ring()),
        "format": name_of(&cli.run.format),
    })
}

fn groebner_report(
    ord: &TermOrder,
    complete: bool,
    input: Option<&Path>,
) -> Result<PresentationReport, Failure> {
    let ring = a4_ring();
    let mut candidates = listed_basis();
    if let Some(path) = input {
        let text = std::fs::read_to_string(path)?;
        let polys = parse_polynomial_list(&ring, &text)?;
        candidates.entries = polys
            .into_iter()
            .enumerate()
            .map(|(k, p)| (format!("g{}", k + 1), p))
            .collect();
    }
    let mut report = PresentationReport::new(
        if complete { "groebner complete" } else { "groebner check" },
        Some(Variety::Cm),
    );
    report.order = Some(ord.describe(&ring));
    let cert = certify_gb_of(&candidates, ord, complete);
    report.run("Buchberger criterion", || {
        let f = &cert.criterion.failures;
        if f.is_empty() {
            Ok(Some(format!("{} polynomials", candidates.len())))
        } else {
            let shown: Vec<String> = f
                .iter()
                .take(5)
                .map(|pf| {
                    format!(
                        "({}, {}) leaves {}",
                        candidates.entries[pf.i].0,
                        candidates.entries[pf.j].0,
                        pf.remainder.to_text()
                    )
                })
                .collect();
            Err(format!("{} S-pairs do not reduce to 0; {}", f.len(), shown.join("; ")))
        }
    });
    if complete {
        report.run("completion of the twelve generators", || {
            let size = cert.completion.as_ref().map_or(0, Vec::len);
            let names: Vec<String> = cert
                .matches
                .iter()
                .map(|m| m.clone().unwrap_or_else(|| "-".into()))
                .collect();
            let w = format!("{size} elements, matching [{}]", names.join(", "));
            if cert.completion_matches() {
                Ok(Some(w))
            } else {
                Err(w)
            }
        });
    }
    Ok(report)
}

fn derive_report(seed: u64) -> PresentationReport {
    let mut report = PresentationReport::new("derive relations", Some(Variety::Cm));
    let ord = certification_order();
    report.order = Some(ord.describe(&a4_ring()));
    let r1 = listed_basis().get("r1").cloned().expect("r1");
    let table = BracketTable::standard();
    report.run("bracket recipe reproduces the CM4 list up to scalars", || {
        let d = derive_cm4(&table, &r1, None).map_err(|e| e.to_string())?;
        let parts: Vec<String> = d
            .comparisons
            .iter()
            .map(|c| match &c.mode {
                EqualityMode::Literal(r) => format!("{} x{}", c.name, fmt_scalar(r)),
                EqualityMode::ModuloEarlier(r) => format!("{} x{} mod earlier", c.name, fmt_scalar(r)),
                EqualityMode::Neither => format!("{} differs", c.name),
            })
            .collect();
        if d.all_match() {
            Ok(Some(parts.join(", ")))
        } else {
            Err(parts.join(", "))
        }
    });
    let com = derive_com4();
    let names = |v: &[(String, bool)]| -> Vec<String> {
        v.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.clone()).collect()
    };
    report.run("CM4 list lies in I", || {
        let bad = names(&com.in_ideal);
        if bad.is_empty() { Ok(None) } else { Err(format!("outside I: {bad:?}")) }
    });
    report.run("top components equal the COM4 list", || {
        let bad = names(&com.literal);
        if bad.is_empty() { Ok(None) } else { Err(format!("differ: {bad:?}")) }
    });
    report.run("top components vanish on commuting pairs", || {
        let bad = names(&com.vanishing);
        if bad.is_empty() { Ok(None) } else { Err(format!("nonzero: {bad:?}")) }
    });
    report.run("Jacobiator of (a5, a10, a12) is 8 r1", || {
        let jac = jacobiator(&table, 5, 10, 12).map_err(|e| e.to_string())?;
        match jac.scalar_ratio(&r1) {
            Some(c) if c == int(8) => Ok(None),
            Some(c) => Err(format!("it is {} r1", fmt_scalar(&c))),
            None => Err(format!("not a multiple of r1: {}", jac.to_text())),
        }
    });
    report.run("Jacobi identity modulo I", || {
        let fails = jacobi_failures(&table, &random_triples(50, seed)).map_err(|e| e.to_string())?;
        if fails.is_empty() {
            Ok(Some("50 triples".into()))
        } else {
            Err(format!("{fails:?}"))
        }
    });
    report.run("Fourier map preserves I", || {
        let bad = names(&fourier_preserves_ideal());
        if bad.is_empty() { Ok(None) } else { Err(format!("{bad:?}")) }
    });
    report
}

fn hilbert_report() -> PresentationReport {
    let mut report = PresentationReport::new("hilbert", None);
    report.order = Some(certification_order().describe(&a4_ring()));
    let expected = expected_hilbert_series();
    for (name, cert) in [("CM4", certify_hilbert_cm4()), ("COM4", certify_hilbert_com4())] {
        report.run(&format!("{name} Hilbert series"), || {
            let rank = cert.rank.clone().map(|r| r.to_string()).unwrap_or("-".into());
            let shown = match &cert.numerator {
                Some(num) => HilbertSeries {
                    numerator: num.clone(),
                    denominator: expected.denominator.clone(),
                }
                .to_string(),
                None => cert.series.to_string(),
            };
            let w = format!("{shown} (rank {rank})");
            if cert.matches && cert.rank == Some(24.into()) {
                Ok(Some(w))
            } else {
                Err(format!("{w}, expected {expected}"))
            }
        });
    }
    report
}

fn basis_report() -> PresentationReport {
    let mut report = PresentationReport::new("basis", None);
    report.order = Some(certification_order().describe(&a4_ring()));
    let c = certify_free_basis();
    report.run("24 monomials are normal forms", || {
        let bad: Vec<&str> = c.irreducible.iter().filter(|(_, ok)| !ok).map(|(s, _)| s.as_str()).collect();
        if bad.is_empty() {
            Ok(Some(format!("basis of {} elements", c.basis_size)))
        } else {
            Err(format!("reducible {bad:?}"))
        }
    });
    report.run("standard monomials are exactly these", || {
        if c.complete { Ok(None) } else { Err("the quotient has other standard monomials".into()) }
    });
    report.run("weighted degrees give the Hilbert numerator", || {
        let w = c.degree_polynomial.to_string();
        if c.degrees_match { Ok(Some(w)) } else { Err(w) }
    });
    report
}

fn discriminant_report() -> PresentationReport {
    let mut report = PresentationReport::new("discriminant", None);
    let d = discriminant_check();
    report.run("w1 is a multiple of the discriminant with |c| = 72", || {
        let w = match &d.constant {
            Some(c) => format!("c = {}", fmt_scalar(c)),
            None => "not proportional".into(),
        };
        if d.passed() { Ok(Some(w)) } else { Err(w) }
    });
    report
}

fn render(report: &PresentationReport, cli: &Cli, order: &TermOrder) -> String {
    match cli.run.format {
        Format::Json => {
            let v = report.to_json(config_json(cli, order));
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
        Format::Text => report.to_text(),
    }
}

fn emit(text: &str, cli: &Cli) -> Result<(), Failure> {
    let slug = command_name(&cli.command).replace(' ', "-");
    let ext = match cli.run.format {
        Format::Json => "json",
        Format::Text => "txt",
    };
    let path = match (&cli.run.output, &cli.run.output_dir) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(dir)) => {
            std::fs::create_dir_all(dir)?;
            Some(dir.join(format!("{slug}.{ext}")))
        }
        (None, None) => None,
    };
    match path {
        Some(p) => {
            std::fs::write(&p, text)?;
            eprintln!("wrote {}", p.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let order = parse_order(&cli.run.order)?;
    let (seed, trials, n) = (cli.run.seed, cli.run.trials, cli.run.n);
    let needs_four = !matches!(cli.command, Command::Verify { target: VerifyTarget::Cm | VerifyTarget::Com } | Command::Export { .. });
    if needs_four && n != 4 {
        return Err(cmspace::Error::UnsupportedDimension(n).into());
    }
    let report = match &cli.command {
        Command::Verify { target } => match target {
            VerifyTarget::Cm => verify_variety(Variety::Cm, n, trials, seed)?,
            VerifyTarget::Com => verify_variety(Variety::Com, n, trials, seed)?,
            VerifyTarget::Brackets => verify_brackets(trials.min(20), seed),
        },
        Command::Derive { .. } => derive_report(seed),
        Command::Groebner { action, input } => {
            groebner_report(&order, matches!(action, GroebnerAction::Complete), input.as_deref())?
        }
        Command::Hilbert => hilbert_report(),
        Command::Basis => basis_report(),
        Command::Discriminant => discriminant_report(),
        Command::Export { what } => {
            let value = match what {
                ExportTarget::Relations { set, v } => {
                    let name = SetName::parse(set, parse_scalar(v)?)?;
                    let rel = relations(&name);
                    match cli.run.format {
                        Format::Json => serde_json::to_string_pretty(&rel.to_json())? + "\n",
                        Format::Text => rel.to_text(),
                    }
                }
                ExportTarget::Table => {
                    let t = BracketTable::standard();
                    let js = t.to_json();
                    match cli.run.format {
                        Format::Json => serde_json::to_string_pretty(&js)? + "\n",
                        Format::Text => {
                            let mut out = String::new();
                            for ((i, j), p, src) in t.entries() {
                                out += &format!("{{a{i},a{j}}} = {}  [{}]\n", p.to_text(), src.label());
                            }
                            out
                        }
                    }
                }
            };
            emit(&value, cli)?;
            return Ok(true);
        }
        Command::Report { .. } => {
            let mut all = PresentationReport::new("report all", None);
            all.order = Some(order.describe(&a4_ring()));
            for v in [Variety::Cm, Variety::Com] {
                for dim in 2..=4 {
                    all.extend(verify_variety(v, dim, trials, seed)?);
                }
            }
            all.extend(verify_brackets(trials.min(20), seed));
            all.extend(derive_report(seed));
            all.extend(groebner_report(&order, true, None)?);
            all.extend(hilbert_report());
            all.extend(basis_report());
            all.extend(discriminant_report());
            all
        }
    };
    emit(&render(&report, cli, &order), cli)?;
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
