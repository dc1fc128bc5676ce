use std::path::PathBuf;

use clap::{Parser, Subcommand};

/// Check identities and compute cohomology of structures given as JSON files.
#[derive(Debug, Parser)]
#[command(name = "dendri", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for randomized property checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the produced structure file here instead of embedding it in the report.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the invariant checks of any structure file.
    Check {
        file: PathBuf,
        /// Highest arity of homotopy identities to check.
        #[arg(long)]
        max_arity: Option<usize>,
    },
    /// Cohomology dimensions of a coalgebra, dendriform coalgebra, dendriform algebra or operator.
    Cohomology {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Coefficient bicomodule (defaults to the structure itself).
        #[arg(long)]
        module: Option<PathBuf>,
        /// Add the coHochschild table of the total structure and the comparison map.
        #[arg(long)]
        compare_hochschild: bool,
    },
    /// Relative Rota-Baxter operators.
    Rbo {
        #[command(subcommand)]
        action: RboCommand,
    },
    /// Formal deformations of dendriform coalgebras.
    Deform {
        #[command(subcommand)]
        action: DeformCommand,
    },
    /// Graded A_∞ and Dend_∞ structures.
    Homotopy {
        #[command(subcommand)]
        action: HomotopyCommand,
    },
    /// Dual dendriform coalgebra of a dendriform algebra.
    Dual {
        file: PathBuf,
        /// Compare the cohomology of the algebra and of its dual.
        #[arg(long)]
        compare_cohomology: bool,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum RboCommand {
    /// Check the operator identity and the bicomodule axioms.
    Check { file: PathBuf },
    /// Write the induced dendriform coalgebra.
    Induce { file: PathBuf },
    /// Dimensions of the operator complex and the comparison verdicts.
    Cohomology {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum DeformCommand {
    /// Check the deformation equations up to the stored order.
    Check {
        file: PathBuf,
        /// Formal isomorphism expected to carry FILE to the `--against` deformation.
        #[arg(long, requires = "against")]
        iso: Option<PathBuf>,
        #[arg(long, requires = "iso")]
        against: Option<PathBuf>,
    },
    /// The first-order term as a 2-cochain, with its coboundary.
    Infinitesimal { file: PathBuf },
    /// The obstruction to the next order, with its coboundary.
    Obstruct { file: PathBuf },
    /// Write the deformation extended by one order.
    Extend { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum HomotopyCommand {
    /// Check the A_∞ identities of an A_∞ file or an ordinary coalgebra.
    CheckAinf {
        file: PathBuf,
        #[arg(long)]
        max_arity: Option<usize>,
    },
    /// Check the Dend_∞ identities of a Dend_∞ file or a dendriform coalgebra.
    CheckDendinf {
        file: PathBuf,
        #[arg(long)]
        max_arity: Option<usize>,
    },
    /// Write the A_∞ structure of label sums.
    Split { file: PathBuf },
    /// Write the Dend_∞ structure induced by an operator file.
    Induce { file: PathBuf },
    /// Check that the derivation of the free diassociative algebra squares to zero.
    Diass {
        file: PathBuf,
        /// Word-length truncation.
        #[arg(long, default_value_t = 4)]
        trunc: usize,
        #[arg(long)]
        max_arity: Option<usize>,
    },
}
