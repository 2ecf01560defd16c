//! One binary, one subcommand per job.
//!
//! Exit codes: 0 on success, 1 on domain errors with the error name leading
//! the first output line, 2 on parse errors with the message on stderr and
//! nothing on stdout. Identical invocations produce byte-identical output;
//! `--parallel` only fans out work whose results are merged back in input
//! order.

mod corpus;
mod gen;
mod jobs;
mod suites;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use neutro_algebra::NError;

/// A finished report plus whether it contains failures that warrant a
/// nonzero exit (corpus mismatches, failed verification suites).
pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    pub fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecomposeKind {
    /// Commuting diagonalizable + nilpotent summands.
    Dn,
    /// Projections onto the primary components.
    Primary,
    /// Block-companion form of the invariant factors.
    Rational,
    /// Elementary Jordan blocks, when every slot splits.
    Jordan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanOp {
    /// Addition mod n on the whole set.
    Add,
    /// Multiplication mod n on the nonzero elements.
    Mul,
}

#[derive(Parser)]
#[command(name = "neutro", version, about = "Exact linear algebra over a+bI scalar rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial det(x·Id - A) of a square matrix.
    Charpoly { matrix: String },
    /// Minimal annihilating polynomial; non-principal cases are flagged.
    Minpoly { matrix: String },
    /// Determinant of a square matrix.
    Det { matrix: String },
    /// Inverse, when every evaluation image is invertible.
    Inverse { matrix: String },
    /// Characteristic values: charpoly, the full root set, completeness.
    Spectrum { matrix: String },
    /// Eigenvectors for one characteristic value.
    Eigvecs {
        matrix: String,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Kernel basis of a linear map, per component.
    Kernel { map: String },
    /// Rank and nullity of a linear map, per component and slot.
    Ranknullity { map: String },
    /// Extract a basis and dimensions from a spanning set.
    Basis { vectors: String },
    /// Dual-basis functionals; the listed vectors form the basis.
    Dualbasis { vectors: String },
    /// Annihilator functionals of the span of the listed vectors.
    Annihilator { vectors: String },
    /// Orthogonalize an independent list.
    Gramschmidt { vectors: String },
    /// Best approximation of the first listed vector from the span of the
    /// rest, which must be pairwise orthogonal.
    Project { vectors: String },
    /// Orthogonal complement of the span of the listed vectors.
    Complement { vectors: String },
    /// Coefficient-sum inequality for the first listed vector against the
    /// rest, which must be pairwise orthogonal.
    Bessel { vectors: String },
    /// Canonical-form decompositions, computed per evaluation slot.
    Decompose { kind: DecomposeKind, matrix: String },
    /// Minimal polynomial driving a vector into the span of the given
    /// tuples; no tuples means the zero subspace.
    Conductor {
        matrix: String,
        #[arg(allow_hyphen_values = true)]
        vector: String,
        #[arg(allow_hyphen_values = true)]
        subspace: Vec<String>,
    },
    /// Subspace taxonomy of a span, optionally over scalar subfields.
    Classify {
        vectors: String,
        /// Comma-separated scalar field tags, one per component.
        #[arg(long)]
        context: Option<String>,
    },
    /// Scan Z_n adjoined I under one operation: group check plus labeled
    /// subgroups.
    Groupscan { modulus: u64, operation: ScanOp },
    /// Seeded randomized verification suites.
    Verify {
        suite: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Comma-separated field tags under test; each suite has defaults.
        #[arg(long)]
        fields: Option<String>,
        #[arg(long)]
        parallel: bool,
    },
    /// Regression fixtures with pinned expected values.
    Corpus {
        #[arg(long)]
        parallel: bool,
    },
}

/// Evaluate index 0..n in input order, optionally fanning out over threads.
/// The output order never depends on `parallel`.
pub fn run_ordered<T: Send>(parallel: bool, n: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    if !parallel || n < 2 {
        return (0..n).map(f).collect();
    }
    let threads = std::thread::available_parallelism()
        .map(|t| t.get())
        .unwrap_or(4)
        .min(8)
        .min(n);
    let chunk = n.div_ceil(threads);
    let mut slots: Vec<Option<T>> = Vec::new();
    slots.resize_with(n, || None);
    std::thread::scope(|s| {
        for (ci, piece) in slots.chunks_mut(chunk).enumerate() {
            let f = &f;
            s.spawn(move || {
                for (k, slot) in piece.iter_mut().enumerate() {
                    *slot = Some(f(ci * chunk + k));
                }
            });
        }
    });
    slots.into_iter().map(|t| t.expect("every index filled")).collect()
}

fn run(command: Command) -> neutro_algebra::Result<Output> {
    match command {
        Command::Charpoly { matrix } => jobs::charpoly(&matrix),
        Command::Minpoly { matrix } => jobs::minpoly(&matrix),
        Command::Det { matrix } => jobs::det(&matrix),
        Command::Inverse { matrix } => jobs::inverse(&matrix),
        Command::Spectrum { matrix } => jobs::spectrum(&matrix),
        Command::Eigvecs { matrix, value } => jobs::eigvecs(&matrix, &value),
        Command::Kernel { map } => jobs::kernel(&map),
        Command::Ranknullity { map } => jobs::ranknullity(&map),
        Command::Basis { vectors } => jobs::basis(&vectors),
        Command::Dualbasis { vectors } => jobs::dualbasis(&vectors),
        Command::Annihilator { vectors } => jobs::annihilator(&vectors),
        Command::Gramschmidt { vectors } => jobs::gramschmidt(&vectors),
        Command::Project { vectors } => jobs::project(&vectors),
        Command::Complement { vectors } => jobs::complement(&vectors),
        Command::Bessel { vectors } => jobs::bessel(&vectors),
        Command::Decompose { kind, matrix } => jobs::decompose(kind, &matrix),
        Command::Conductor { matrix, vector, subspace } => {
            jobs::conductor(&matrix, &vector, &subspace)
        }
        Command::Classify { vectors, context } => jobs::classify(&vectors, context.as_deref()),
        Command::Groupscan { modulus, operation } => jobs::groupscan(modulus, operation),
        Command::Verify { suite, seed, trials, fields, parallel } => {
            suites::verify(&suite, seed, trials, fields.as_deref(), parallel)
        }
        Command::Corpus { parallel } => corpus::run(parallel),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e @ NError::ParseError { .. }) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
        Err(e) => {
            println!("{e}");
            ExitCode::from(1)
        }
    }
}
