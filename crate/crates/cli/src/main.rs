use clap::{Parser, Subcommand};

use gvcurves_cli::{
    check_report, contrib_report, degeneracy_report, full_report, gw_report, higgs_report,
    homfly_report, strata_report, CliError,
};
use gvcurves_core::partitions::Partition;

/// Exact degree-two Gopakumar–Vafa invariants of local curves.
#[derive(Parser)]
#[command(name = "gvcurves", version, about)]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// HOMFLY polynomial of the (2,n) torus link and its a = 0 slice
    Homfly {
        /// Number of half-twists (n >= 1)
        #[arg(long)]
        n: u32,
    },
    /// Local invariants of one spectral-curve singularity profile
    Contrib {
        /// Zero multiplicities, e.g. 3,2,1 (must sum to 4g-2)
        #[arg(long, value_name = "PARTS")]
        partition: Partition,
        /// Genus of the base curve
        #[arg(long, default_value_t = 2)]
        base_genus: u32,
    },
    /// Stratified Euler numbers of the nearby hyperplane
    Strata {
        /// Genus of the base curve
        #[arg(long, default_value_t = 2)]
        base_genus: u32,
    },
    /// Euler characteristic of a jet degeneracy locus on a product of curves
    Degeneracy {
        /// Vanishing orders imposed at the moving points, e.g. 3,2,1
        #[arg(long, value_delimiter = ',')]
        weights: Vec<u32>,
        /// Genus of the curve
        #[arg(long)]
        genus: u32,
        /// Degree of the square of the twisting bundle
        #[arg(long = "degL2")]
        deg_l2: i64,
    },
    /// The twisted-Higgs side of the degree-two decomposition
    Higgs {
        /// Genus of the base curve
        #[arg(long, default_value_t = 2)]
        base_genus: u32,
    },
    /// The degree-two Gromov-Witten correlator and extracted invariants
    Gw {
        /// Genus of the base curve
        #[arg(long, default_value_t = 2)]
        base_genus: u32,
    },
    /// Assemble both sides and cross-check against the Gromov-Witten series
    Full {
        /// Genus of the base curve
        #[arg(long, default_value_t = 2)]
        base_genus: u32,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Run every acceptance check and report pass/fail per criterion
    Check,
}

fn main() {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            // Exit code 2 is reserved for failed mathematical checks, so
            // usage errors exit 1; --help and --version exit 0.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };

    let result = match args.cmd {
        Cmd::Homfly { n } => homfly_report(n),
        Cmd::Contrib {
            partition,
            base_genus,
        } => contrib_report(&partition, base_genus),
        Cmd::Strata { base_genus } => strata_report(base_genus),
        Cmd::Degeneracy {
            weights,
            genus,
            deg_l2,
        } => degeneracy_report(&weights, genus, deg_l2),
        Cmd::Higgs { base_genus } => higgs_report(base_genus),
        Cmd::Gw { base_genus } => gw_report(base_genus),
        Cmd::Full { base_genus, json } => full_report(base_genus, json),
        Cmd::Check => {
            let (text, all_passed) = check_report();
            print!("{text}");
            std::process::exit(if all_passed { 0 } else { 2 });
        }
    };

    match result {
        Ok(text) => print!("{text}"),
        Err(CliError::Mismatch(msg)) => {
            eprint!("{msg}");
            std::process::exit(2);
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}
