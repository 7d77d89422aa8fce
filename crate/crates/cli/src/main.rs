//! `chernpos`: command-line access to the chernpos engines.
//!
//! Output is compact JSON by default (`--pretty` switches to plain text).
//! Exit codes: 0 success, 1 a negative positivity verdict, 2 bad input.

mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use chernpos::partition::{Partition, StrictPartition};

#[derive(Parser, Debug)]
#[command(name = "chernpos", version, about = "Exact Schur and Q-tilde expansions of Chern-class polynomials")]
pub struct Cli {
    /// Emit compact JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Emit plain text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Ordering policy. Only `fixed` exists; every listing is sorted.
    #[arg(long, global = true, value_parser = ["fixed"], default_value = "fixed")]
    seed_order: String,

    /// Read the expression argument from this file instead.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Run batch computations on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the polynomial an expression evaluates to and its canonical form.
    Expand { expr: Option<String> },

    /// Expand a c-polynomial over the Schur basis.
    ToSchur {
        expr: Option<String>,
        #[arg(long)]
        length_bound: Option<usize>,
    },

    /// Schur-positivity certificate (exit 1 when a coefficient is negative).
    Certify {
        expr: Option<String>,
        #[arg(long)]
        length_bound: Option<usize>,
    },

    /// Littlewood-Richardson product s_λ · s_μ.
    Lr {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        /// Also compute the product with the explicit-variable oracle.
        #[arg(long)]
        oracle: bool,
    },

    /// Compare lr with the oracle on every pair with |λ| + |μ| ≤ BOUND.
    LrCheck {
        #[arg(long, default_value_t = 6)]
        bound: u32,
    },

    /// The polynomial Q̃_μ in c_1, c_2, ….
    Qtilde {
        #[arg(value_parser = parse_strict)]
        mu: StrictPartition,
    },

    /// Supersymmetric s_λ(E - F) with optional ranks, and its hook status.
    Supersymmetric {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        rank_e: Option<u32>,
        #[arg(long)]
        rank_f: Option<u32>,
    },

    /// Split s_λ(E - F), or an expression in c_i(E - F), over s_α(E) s_β(F*).
    SuperSplit {
        #[arg(value_parser = parse_partition, required_unless_present = "expr")]
        lambda: Option<Partition>,
        /// Split this polynomial in c_i(E - F) instead.
        #[arg(long, conflicts_with = "lambda")]
        expr: Option<String>,
        #[arg(long)]
        rank_e: Option<u32>,
        #[arg(long)]
        rank_f: Option<u32>,
    },

    /// Cohomology of the Grassmannian Gr(r, n).
    Gr {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[command(subcommand)]
        op: GrOp,
    },

    /// Cohomology of the Lagrangian Grassmannian LG(n).
    Lg {
        #[arg(long)]
        n: u32,
        #[command(subcommand)]
        op: LgOp,
    },

    /// Verify a built-in Thom-polynomial table.
    ThomVerify {
        #[arg(long, value_enum)]
        table: TableArg,
    },

    /// s_μ(S^λ E) for E of rank N, over the Schur basis of E.
    SchurBundle {
        #[arg(long)]
        rank: u32,
        #[arg(long, value_parser = parse_partition)]
        functor: Partition,
        #[arg(long = "class", value_parser = parse_partition)]
        class: Partition,
    },

    /// Parse a Legendrian class and check its positivity (exit 1 when negative).
    Legendrian {
        expr: Option<String>,
        #[arg(long, default_value_t = 4)]
        n: u32,
    },

    /// Partitions of D, optionally bounded.
    Partitions {
        d: u32,
        #[arg(long)]
        max_part: Option<u32>,
        #[arg(long)]
        max_length: Option<usize>,
    },

    /// Conjugate partition.
    Conjugate {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },

    /// Whether λ fits the (n, m)-hook, i.e. λ_{n+1} ≤ m.
    Hook {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
    },

    /// Semistandard tableaux of a shape with entries ≤ N.
    Ssyt {
        #[arg(value_parser = parse_partition)]
        shape: Partition,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum GrOp {
    /// Expand a polynomial in c_1..c_r over the Schubert basis.
    Reduce { expr: Option<String> },
    /// Degree of a top-degree polynomial.
    Integrate { expr: Option<String> },
    /// Poincaré dual partition.
    Dual {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Schubert class product via Littlewood-Richardson.
    Product {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
    },
    /// Full intersection pairing and whether it is the duality permutation.
    Pairing,
}

#[derive(Subcommand, Debug)]
pub enum LgOp {
    /// Expand a polynomial in c_1..c_n over the Q̃ basis.
    Reduce { expr: Option<String> },
    /// Degree of a top-degree polynomial.
    Integrate { expr: Option<String> },
    /// Poincaré dual strict partition.
    Dual {
        #[arg(value_parser = parse_strict)]
        mu: StrictPartition,
    },
    /// Restriction of the Grassmannian class X^λ.
    Restrict {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Full intersection pairing and whether it is the duality permutation.
    Pairing,
    /// Per-degree dimension counts of the presentation.
    Certificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableArg {
    Classical,
    Lagrangian,
    Legendrian,
}

/// Accepts `2,1`, `[2,1]`, `(2,1)`, and the empty forms `[]`, `()`, `0`, ``.
fn parse_parts(s: &str) -> Result<Vec<u32>, String> {
    let t = s.trim();
    let t = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
        .unwrap_or(t)
        .trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let parts = t
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| format!("bad part {x:?}: {e}")))
        .collect::<Result<Vec<u32>, String>>()?;
    if parts == [0] {
        return Ok(Vec::new());
    }
    Ok(parts)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::new(parse_parts(s)?).map_err(|e| e.to_string())
}

fn parse_strict(s: &str) -> Result<StrictPartition, String> {
    StrictPartition::new(parse_parts(s)?).map_err(|e| e.to_string())
}

/// Shared flags every command sees.
#[derive(Debug, Clone)]
pub struct Context {
    pub pretty: bool,
    pub input: Option<PathBuf>,
    pub mode: chernpos::Mode,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let ctx = Context {
        pretty: cli.pretty,
        input: cli.input.clone(),
        mode: if cli.sequential { chernpos::Mode::Sequential } else { chernpos::Mode::Parallel },
    };
    match commands::run(&cli.command, &ctx) {
        Ok(out) => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{}", out.render(ctx.pretty));
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_arguments() {
        assert_eq!(parse_parts("2,1").unwrap(), vec![2, 1]);
        assert_eq!(parse_parts("[3, 1]").unwrap(), vec![3, 1]);
        assert_eq!(parse_parts("(2)").unwrap(), vec![2]);
        assert!(parse_parts("[]").unwrap().is_empty());
        assert!(parse_parts("0").unwrap().is_empty());
        assert!(parse_parts("2;1").is_err());
        assert!(parse_partition("1,2").is_err());
        assert!(parse_strict("2,2").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
