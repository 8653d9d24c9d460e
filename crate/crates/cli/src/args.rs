use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

/// Parses a comma-separated list of base-10 integers, each with an
/// optional leading '-', and no whitespace.
pub fn parse_vector(s: &str) -> Result<Vec<BigInt>, String> {
    if s.is_empty() {
        return Err("empty vector".into());
    }
    s.split(',')
        .map(|tok| {
            let digits = tok.strip_prefix('-').unwrap_or(tok);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("'{tok}' is not an integer"));
            }
            tok.parse::<BigInt>().map_err(|e| format!("'{tok}': {e}"))
        })
        .collect()
}

/// A parsed `--h`/`--vector`/`--poly` value. Wrapped so clap treats the
/// whole comma list as one value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntVector(pub Vec<BigInt>);

fn int_vector(s: &str) -> Result<IntVector, String> {
    parse_vector(s).map(IntVector)
}

#[derive(Debug, Parser)]
#[command(name = "veronese", version, about = "Exact Veronese transforms and simplicial-complex tools")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MatrixFormat {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Symmetry,
    Recursion,
    Signs,
    Growth,
    Oracle,
    MainTheorem,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the coefficient matrix of the transform.
    Cmatrix {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value = "tsv")]
        format: MatrixFormat,
    },
    /// Count compositions of i into d parts, each at most r.
    Count {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
    },
    /// Numerator (or, with --g, g-vector) of the r-th Veronese series.
    Transform {
        #[arg(long, value_parser = int_vector, allow_hyphen_values = true)]
        h: IntVector,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        g: bool,
    },
    /// Print the first coefficients of h(t)/(1-t)^d, one per line.
    Expand {
        #[arg(long, value_parser = int_vector, allow_hyphen_values = true)]
        h: IntVector,
        #[arg(long)]
        d: usize,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Constant term of the polynomial part of h(t)/(1-t)^d.
    Characteristic {
        #[arg(long, value_parser = int_vector, allow_hyphen_values = true)]
        h: IntVector,
        #[arg(long)]
        d: usize,
    },
    /// Decide whether a polynomial has only real roots.
    Sturm {
        #[arg(long, value_parser = int_vector, allow_hyphen_values = true)]
        poly: IntVector,
    },
    /// Decide whether a vector is the f-vector of a simplicial complex.
    Kk {
        #[arg(long, value_parser = int_vector, allow_hyphen_values = true)]
        vector: IntVector,
    },
    /// Decide whether a vector is an M-sequence.
    Msequence {
        #[arg(long, value_parser = int_vector, allow_hyphen_values = true)]
        vector: IntVector,
    },
    /// Print the compressed complex with the given f-vector.
    Realize {
        #[arg(long, value_parser = int_vector, allow_hyphen_values = true)]
        vector: IntVector,
    },
    /// Print the r-th edgewise subdivision of a complex read from a file.
    Edgewise {
        #[arg(long)]
        facets: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        check_hilbert: bool,
    },
    /// Smallest R such that the Veronese numerators for R..=max-r are positive.
    Threshold {
        #[arg(long, value_parser = int_vector, allow_hyphen_values = true)]
        h: IntVector,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        max_r: usize,
    },
    /// Run property suites over 1 <= d <= r <= rmax, d <= dmax.
    Verify {
        #[arg(long)]
        rmax: usize,
        #[arg(long)]
        dmax: usize,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
}
