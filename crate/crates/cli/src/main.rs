mod commands;
mod failure;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use failure::Failure;

#[derive(Parser, Debug)]
#[command(name = "geonerve", version, about = "Geometric nerves, lax functors and non-abelian 2-cohomology on finite inputs")]
struct Cli {
    /// Report errors on standard error as JSON.
    #[arg(long, global = true)]
    json_errors: bool,

    /// Size guard: the most candidate branches a search may explore.
    #[arg(long, global = true, env = "GEONERVE_MAX_BRANCHES", default_value_t = geonerve::search::DEFAULT_MAX_BRANCHES)]
    max_branches: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(name = "2cat")]
    TwoCat,
    Cat,
    Sset,
    Group,
    Fam,
    Laxfun,
    Laxfuns,
    Smap,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate an interchange file; the kind is taken from the file suffix
    /// unless given.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Geometric nerve of a 2-category.
    Nerve {
        two_cat: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Simplicial map induced by a lax functor.
    NerveMap {
        laxfun: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Lax functor read off a simplicial map between nerves.
    Reconstruct {
        smap: PathBuf,
        #[arg(long)]
        dom: PathBuf,
        #[arg(long)]
        cod: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate normal lax functors between two 2-categories.
    EnumLax {
        dom: PathBuf,
        cod: PathBuf,
        /// Only functors sending each object to the object of the same name.
        #[arg(long)]
        fix_objects: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Second non-abelian cohomology of a groupoid with coefficients in a
    /// group family.
    H2 {
        #[arg(long)]
        groupoid: PathBuf,
        #[arg(long)]
        family: PathBuf,
        /// Connect functors only through transformations with identity
        /// components.
        #[arg(long)]
        strict_components: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare H² with homotopy classes of maps between nerves.
    RepCheck {
        #[arg(long)]
        groupoid: PathBuf,
        #[arg(long)]
        family: PathBuf,
        /// Also write the full report as JSON.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Homotopy classes of simplicial maps between two truncated simplicial
    /// sets.
    HomotopyClasses {
        dom: PathBuf,
        cod: PathBuf,
        /// Only maps fixing vertices by name.
        #[arg(long)]
        fix_vertices: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let mut budget = geonerve::search::Budget::limited(cli.max_branches);
    match &cli.command {
        Command::Validate { file, kind } => commands::validate(file, *kind),
        Command::Nerve { two_cat, output } => commands::nerve(two_cat, output.as_deref()),
        Command::NerveMap { laxfun, output } => commands::nerve_map(laxfun, output.as_deref()),
        Command::Reconstruct { smap, dom, cod, output } => commands::reconstruct(smap, dom, cod, output.as_deref()),
        Command::EnumLax {
            dom,
            cod,
            fix_objects,
            output,
        } => commands::enum_lax(dom, cod, *fix_objects, output.as_deref(), &mut budget),
        Command::H2 {
            groupoid,
            family,
            strict_components,
            output,
        } => commands::h2(groupoid, family, *strict_components, output.as_deref(), &mut budget),
        Command::RepCheck { groupoid, family, output } => {
            commands::rep_check(groupoid, family, output.as_deref(), &mut budget)
        }
        Command::HomotopyClasses {
            dom,
            cod,
            fix_vertices,
            output,
        } => commands::homotopy_classes(dom, cod, *fix_vertices, output.as_deref(), &mut budget),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            f.report(cli.json_errors);
            ExitCode::from(f.exit_code())
        }
    }
}
