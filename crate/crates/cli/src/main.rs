use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spinkron::sweep::{self, events_path, format_matrix, parse_spec, SweepSpec};
use spinkron::{check, Error};

const EXIT_FAILURE: u8 = 1;
const EXIT_SPEC: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "spinkron",
    version,
    about = "Spin Hamiltonians via Kronecker products: field sweeps and level crossings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sweep the field, write the level table and the crossing events as CSV.
    Sweep {
        #[arg(long)]
        spec: PathBuf,
        /// Overrides the spec's "output" path.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the Hamiltonian matrix at one field value.
    Build {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long = "at-field", allow_hyphen_values = true)]
        at_field: f64,
    },
    /// Run the built-in invariant checks.
    Check,
}

fn load_spec(path: &Path) -> Result<SweepSpec, Error> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_spec(&text)
}

fn exit_code(err: &Error, reading_spec: bool) -> u8 {
    if err.is_numerical() {
        EXIT_NUMERICAL
    } else if reading_spec || matches!(err, Error::Spec { .. } | Error::NonFinite(_)) {
        EXIT_SPEC
    } else {
        EXIT_FAILURE
    }
}

fn run_sweep(spec_path: &Path, output: Option<PathBuf>) -> Result<(), u8> {
    let spec = load_spec(spec_path).map_err(|e| {
        eprintln!("error: {e}");
        exit_code(&e, true)
    })?;
    let Some(out) = output.or_else(|| spec.output.clone()) else {
        eprintln!("error: no output path (set \"output\" in the spec or pass --output)");
        return Err(EXIT_SPEC);
    };
    let result = sweep::run_sweep(&spec).map_err(|e| {
        eprintln!("error: {e}");
        exit_code(&e, false)
    })?;
    sweep::write_csv(&result, &out).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_FAILURE
    })?;
    println!(
        "{} field points x {} levels -> {}",
        result.field_values.len(),
        result.levels.first().map_or(0, Vec::len),
        out.display()
    );
    println!(
        "{} events -> {}",
        result.events.len(),
        events_path(&out).display()
    );
    Ok(())
}

fn run_build(spec_path: &Path, field: f64) -> Result<(), u8> {
    let spec = load_spec(spec_path).map_err(|e| {
        eprintln!("error: {e}");
        exit_code(&e, true)
    })?;
    if !field.is_finite() {
        eprintln!("error: --at-field must be finite");
        return Err(EXIT_SPEC);
    }
    let h = spec.model.hamiltonian(field).map_err(|e| {
        eprintln!("error: {e}");
        exit_code(&e, false)
    })?;
    print!("{}", format_matrix(&h));
    Ok(())
}

fn run_check() -> Result<(), u8> {
    let outcomes = check::run_all();
    let mut failed = 0;
    for c in &outcomes {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {}: {}", c.name, c.detail);
        failed += usize::from(!c.passed);
    }
    if failed > 0 {
        eprintln!("{failed} of {} checks failed", outcomes.len());
        return Err(EXIT_NUMERICAL);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep { spec, output } => run_sweep(&spec, output),
        Command::Build { spec, at_field } => run_build(&spec, at_field),
        Command::Check => run_check(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
