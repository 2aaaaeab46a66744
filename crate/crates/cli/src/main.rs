mod cache;
mod output;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qrep::counting;
use qrep::oracle::Bounds;
use qrep::verify::{self, Scope, Status, Suite};
use qrep::{rigid, subcat, DynkinType, Error, IndecTable, PrimeField, Quiver};

const EXIT_FAIL: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_NOT_DYNKIN: u8 = 4;

#[derive(Parser)]
#[command(name = "qrep", version, about = "Rigid modules and ICE-closed subcategories of Dynkin quivers")]
struct Cli {
    /// Cache file for indecomposable tables, read and updated in place.
    #[arg(long, global = true, value_name = "FILE")]
    seed_table: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the indecomposables with their Hom and Ext dimensions.
    Indec { quiver: PathBuf },
    /// List basic rigid modules, or count them by number of summands.
    Rigid {
        quiver: PathBuf,
        #[arg(long)]
        profile: bool,
        /// Print the profile as CSV instead of JSON.
        #[arg(long, requires = "profile")]
        csv: bool,
    },
    /// Count ICE-closed subcategories, or list them with --list.
    Ice {
        quiver: PathBuf,
        #[arg(long)]
        list: bool,
    },
    /// Reverse every arrow at a sink or source.
    Mutate {
        quiver: PathBuf,
        #[arg(long)]
        vertex: usize,
    },
    /// Run a verification suite and print its report.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        rank_bound: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u32>,
        /// Largest total number of summands in oracle searches.
        #[arg(long, default_value_t = Bounds::default().mult_bound)]
        mult_bound: usize,
        /// Largest morphism or extension space enumerated elementwise.
        #[arg(long, default_value_t = Bounds::default().map_budget)]
        map_budget: u64,
    },
    /// Compare enumerated counts with the closed forms, as CSV.
    Count {
        #[arg(long = "type")]
        ty: DynkinType,
        /// Restrict to one orientation; all of them by default.
        #[arg(long)]
        orientation: Option<u64>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    NotDynkin(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotDynkin(_) => Failure::NotDynkin(e.to_string()),
            Error::NoSolution(_) | Error::CycleFound(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn default_prime() -> Result<PrimeField, Failure> {
    match std::env::var("QREP_PRIME") {
        Ok(s) => {
            let p: u32 = s.trim().parse().map_err(|_| Failure::Input(format!("QREP_PRIME={s:?} is not a number")))?;
            Ok(PrimeField::new(p)?)
        }
        Err(_) => Ok(PrimeField::DEFAULT),
    }
}

fn read_quiver(path: &Path) -> Result<Quiver, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

struct Context {
    seed_table: Option<PathBuf>,
}

impl Context {
    fn table(&self, q: &Quiver) -> Result<IndecTable, Failure> {
        let field = default_prime()?;
        match &self.seed_table {
            Some(path) => cache::load_or_build(path, q, field),
            None => Ok(IndecTable::build_with_field(q, field)?),
        }
    }
}

/// Writes to stdout; a reader that went away early is not an error.
fn emit(bytes: &[u8]) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match out.write_all(bytes).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::Internal(e.to_string())),
        _ => Ok(()),
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_vec(value).expect("serializable output");
    text.push(b'\n');
    emit(&text)
}

fn print_csv<R: serde::Serialize>(header: Option<&[&str]>, rows: &[R]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(h) = header {
        w.write_record(h).map_err(csv_failure)?;
    }
    for row in rows {
        w.serialize(row).map_err(csv_failure)?;
    }
    emit(&w.into_inner().map_err(|e| Failure::Internal(e.to_string()))?)
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let ctx = Context { seed_table: cli.seed_table };
    match cli.command {
        Command::Indec { quiver } => {
            let t = ctx.table(&read_quiver(&quiver)?)?;
            print_json(&output::IndecReport::new(&t))?;
        }
        Command::Rigid { quiver, profile, csv } => {
            let t = ctx.table(&read_quiver(&quiver)?)?;
            if profile {
                let counts = rigid::rigid_profile(&t);
                if csv {
                    let rows: Vec<(usize, u64)> = counts.into_iter().enumerate().collect();
                    print_csv(Some(&["i", "count"]), &rows)?;
                } else {
                    print_json(&output::Profile::new(&t, counts))?;
                }
            } else {
                let all: Vec<output::DimList> =
                    rigid::enumerate_rigid(&t).iter().map(|u| output::dim_list(&t, u.summands())).collect();
                print_json(&all)?;
            }
        }
        Command::Ice { quiver, list } => {
            let t = ctx.table(&read_quiver(&quiver)?)?;
            let ice = subcat::enumerate_ice(&t);
            if list {
                let entries: Vec<output::IceEntry> = ice.iter().map(|&(u, c)| output::IceEntry::new(&t, u, c)).collect();
                print_json(&entries)?;
            } else {
                print_json(&output::IceCount { count: ice.len() })?;
            }
        }
        Command::Mutate { quiver, vertex } => {
            let q = read_quiver(&quiver)?;
            if vertex >= q.vertex_count() {
                return Err(Error::NoSuchVertex(vertex).into());
            }
            let mutated = if q.is_sink(vertex) {
                q.sink_mutation(vertex)?
            } else if q.is_source(vertex) {
                q.source_mutation_with_map(vertex)?.0
            } else {
                return Err(Error::NotSinkOrSource(vertex).into());
            };
            print_json(&mutated)?;
        }
        Command::Verify { suite, rank_bound, primes, mult_bound, map_budget } => {
            let scope = Scope { rank_bound, primes, bounds: Bounds { mult_bound, map_budget } };
            let report = verify::run(suite, &scope)?;
            print_json(&report)?;
            return Ok(match report.outcome() {
                Status::Pass => ExitCode::SUCCESS,
                Status::BudgetExceeded => ExitCode::from(EXIT_BUDGET),
                Status::Fail => ExitCode::from(EXIT_FAIL),
            });
        }
        Command::Count { ty, orientation } => {
            let field = default_prime()?;
            let orientations: Vec<u64> = match orientation {
                Some(bits) if bits < 1 << ty.edges().len() => vec![bits],
                Some(bits) => return Err(Failure::Input(format!("{ty} has no orientation {bits}"))),
                None => (0..1u64 << ty.edges().len()).collect(),
            };
            let rows = counting::count_rows(ty, &orientations, field)?;
            print_csv(None, &rows)?;
            if rows.iter().any(|r| !r.matches) {
                return Ok(ExitCode::from(EXIT_FAIL));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn csv_failure(e: csv::Error) -> Failure {
    Failure::Internal(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Input(m) => (EXIT_INPUT, m),
                Failure::NotDynkin(m) => (EXIT_NOT_DYNKIN, m),
                Failure::Internal(m) => (EXIT_FAIL, m),
            };
            eprintln!("qrep: {msg}");
            ExitCode::from(code)
        }
    }
}
