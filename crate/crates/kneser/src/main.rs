use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kneser::commands::{self, AnalyzeOptions};

#[derive(Parser)]
#[command(name = "kneser", version, about = "Eigenmatrices and Kneser-type equalities of distance-regular graphs")]
struct Cli {
    /// Catalog file replacing the built-in one.
    #[arg(long, global = true, env = "KNESER_CATALOG")]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse an intersection array, catalog name or family such as GO(2,4).
    Analyze {
        /// `{b0,...,b_{d-1};c1,...,cd}` or a name.
        input: String,
        #[arg(long)]
        json: bool,
        /// Relative comparison tolerance.
        #[arg(long)]
        tol: Option<f64>,
        /// Also check the bordered-matrix spectra.
        #[arg(long)]
        deep: bool,
    },
    /// Check catalog entries against their expected values.
    Verify {
        /// `all` or an entry name.
        scope: String,
        /// Print every claim, not only failures.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        deep: bool,
    },
    /// Browse the catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let catalog = match commands::load_catalog(cli.catalog.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(commands::EXIT_INPUT as u8);
        }
    };
    let (code, out) = match cli.command {
        Command::Analyze { input, json, tol, deep } => {
            commands::analyze(&catalog, &input, &AnalyzeOptions { json, tol, deep })
        }
        Command::Verify { scope, list, deep } => commands::verify(&catalog, &scope, list, deep),
        Command::Catalog { action: CatalogAction::List } => (commands::EXIT_OK, commands::catalog_list(&catalog)),
        Command::Catalog { action: CatalogAction::Show { name } } => commands::catalog_show(&catalog, &name),
    };
    if code == commands::EXIT_INPUT && out.starts_with("error:") {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(code as u8)
}
