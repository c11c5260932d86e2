use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfkit::catalog::{self, CatalogEntry};
use hopfkit::suite::{self, QChoice, SuiteFlags};
use hopfkit::{Report, Result};
use serde_json::json;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hopfkit", version, about = "Exact verification of Hopf algebras and Hopf Galois extensions")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Truncation degree for infinite-dimensional checks
    #[arg(long, global = true, default_value_t = 6)]
    degree: usize,
    /// Seed for sampled characters and spot checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Base for q: formal or cyclotomic:<d>
    #[arg(long, global = true, default_value = "formal", value_parser = parse_q)]
    q: QChoice,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
        }
    }
}

fn parse_q(s: &str) -> std::result::Result<QChoice, String> {
    s.parse().map_err(|e: hopfkit::Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Catalog entries, suites and mutations
    Catalog {
        #[command(subcommand)]
        what: CatalogCmd,
    },
    /// Run a suite on a catalog entry
    Verify {
        entry: String,
        #[arg(long)]
        suite: String,
        /// Run the named mutation of this entry and suite instead
        #[arg(long)]
        mutate: Option<String>,
    },
    /// Coinvariants of a coaction, up to --degree when infinite
    Coinv { entry: String },
    /// Galois map of a comodule algebra
    Beta { entry: String },
    /// Group grading data
    Grading { entry: String },
    /// Second cohomology of a finite abelian group: cyclic:n, product:[..], sym:n or a table
    H2 { group: String },
    /// Galois object A_s of the Taft algebra of dimension N^2
    Taft {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        s: i64,
    },
    /// Generic Galois extension A_H
    Generic {
        #[command(subcommand)]
        what: GenericCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Suites,
    Mutations,
}

#[derive(Subcommand)]
enum GenericCmd {
    /// t^-1 and the cocycle sigma
    Sigma { algebra: String },
    /// Associativity over all basis triples
    Assoc { algebra: String },
    /// Relations of the generic extension of U_q
    Thm812,
    /// Power relations of the generic extension of u_d
    Thm813 {
        #[arg(long)]
        d: u32,
    },
    /// Fiber at a seeded random character
    Fiber { algebra: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let g = &cli.global;
    let flags = SuiteFlags { degree: g.degree, seed: g.seed, q: g.q };
    let report = match &cli.command {
        Command::Catalog { what } => {
            print_catalog(what, g.format)?;
            return Ok(true);
        }
        Command::Verify { entry, suite: s, mutate: Some(m) } => {
            let mu = suite::mutation(m)?;
            if mu.entry != entry || mu.suite != s {
                return Err(hopfkit::Error::InvalidArgument(format!(
                    "mutation {m} applies to {} with suite {}",
                    mu.entry, mu.suite
                )));
            }
            suite::run_mutation(m, &flags)?
        }
        Command::Verify { entry, suite: s, mutate: None } => suite::run_suite(entry, s, &flags)?,
        Command::Coinv { entry } => suite::run_suite(entry, "coinvariants", &flags)?,
        Command::Beta { entry } => suite::run_suite(entry, "galois", &flags)?,
        Command::Grading { entry } => suite::run_suite(entry, "grading", &flags)?,
        Command::H2 { group } => suite::h2_report(group)?,
        Command::Taft { n, s } => suite::taft_report(*n, *s)?,
        Command::Generic { what } => match what {
            GenericCmd::Sigma { algebra } => suite::sigma_report(algebra)?,
            GenericCmd::Assoc { algebra } => suite::assoc_report(algebra)?,
            GenericCmd::Thm812 => suite::run_suite("Uq", "generic", &flags)?,
            GenericCmd::Thm813 { d } => suite::run_suite(&format!("u{d}"), "generic", &flags)?,
            GenericCmd::Fiber { algebra } => suite::fiber_report(algebra, g.seed)?,
        },
    };
    emit(&report, g.format)?;
    Ok(report.passed())
}

/// Writes a line to stdout; a closed pipe is not an error.
fn out(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn emit(r: &Report, f: Format) -> Result<()> {
    out(&r.emit(f.name())?);
    Ok(())
}

fn print_catalog(what: &CatalogCmd, f: Format) -> Result<()> {
    let rows: Vec<(String, String, String)> = match what {
        CatalogCmd::List => {
            let mut v: Vec<CatalogEntry> = catalog::list();
            v.extend(catalog::user_entries()?);
            if let Format::Json = f {
                out(&serde_json::to_string_pretty(&v).expect("entries serialize"));
                return Ok(());
            }
            v.into_iter().map(|e| (e.name, format!("{:?}", e.kind).to_lowercase(), e.description)).collect()
        }
        CatalogCmd::Suites => suite::SUITES.iter().map(|(n, d)| (n.to_string(), String::new(), d.to_string())).collect(),
        CatalogCmd::Mutations => suite::MUTATIONS
            .iter()
            .map(|m| (m.name.to_string(), format!("{} / {}", m.entry, m.suite), m.description.to_string()))
            .collect(),
    };
    match f {
        Format::Json => {
            let v: Vec<_> = rows.iter().map(|(n, k, d)| json!({"name": n, "target": k, "description": d})).collect();
            out(&serde_json::to_string_pretty(&v).expect("rows serialize"));
        }
        Format::Text => {
            let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
            let w2 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0);
            for (n, k, d) in rows {
                out(&format!("{n:w$}  {k:w2$}  {d}"));
            }
        }
    }
    Ok(())
}
