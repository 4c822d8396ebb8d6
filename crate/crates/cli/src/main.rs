use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

mod commands;

use commands::Output;

#[derive(Parser, Debug)]
#[command(name = "hilbcalc", version, about = "Exact finite algebra, Hilbert scheme and Chern class computations")]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Built-in checks.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Chern classes of a bundle expression.
    Chern {
        #[arg(long)]
        expr: String,
        /// Generator declarations such as V:2 (repeatable).
        #[arg(long = "gen", default_value = "V:2")]
        gens: Vec<String>,
        /// Only this degree; all degrees when omitted.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Split a GL2 character into irreducibles.
    DecomposeGl2 {
        /// Laurent polynomial in a, b, e.g. "2*a + 2*b + a^2*b^-1 + b^2*a^-1".
        #[arg(long = "char")]
        character: Option<String>,
        /// Alternatively, a bundle expression in one rank 2 generator V.
        #[arg(long, conflicts_with = "character")]
        expr: Option<String>,
    },
    /// Tangent space dimension at a point of the Hilbert scheme.
    Tangent {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        vars: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, default_value = "degrevlex")]
        order: String,
    },
    /// Reduced Groebner basis and colength.
    Groebner {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        vars: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, default_value = "degrevlex")]
        order: String,
    },
    /// Local factors and isotype of an algebra over a field.
    Classify {
        /// Algebra JSON (file path or inline).
        #[arg(long)]
        algebra: String,
        /// Reduce an integral algebra modulo this prime first.
        #[arg(long)]
        p: Option<u64>,
    },
    /// Rees family over the t-line.
    Rees {
        #[arg(long)]
        algebra: String,
    },
    /// A / R.1 and lifts of its basis.
    QuotientByUnit {
        #[arg(long)]
        algebra: String,
    },
    /// Fiber of a family at t = T.
    Specialize {
        #[arg(long)]
        family: String,
        #[arg(long)]
        t: String,
    },
    /// Fiber product of B -> D <- C.
    FiberProduct {
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        /// JSON {"d": algebra, "f": matrix, "g": matrix}; matrices are rank(D) rows.
        #[arg(long = "d-maps")]
        d_maps: String,
    },
    /// Codimension and connectivity bounds.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Count non-surjective maps over F_p by enumeration.
    CountNonsurj {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long)]
        p: u64,
        /// Count algebra maps to F_p[x, y]/(x, y)^2 instead of linear maps.
        #[arg(long)]
        algebra_homs: bool,
    },
    /// Chain of lines from a point of the Hilbert scheme to the basepoint.
    PathToBasepoint {
        #[arg(long)]
        algebra: String,
        /// JSON list of coordinate vectors (file path or inline).
        #[arg(long)]
        images: String,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyWhat {
    /// Chow ring presentation of degree 3 points.
    #[command(name = "hilb3", alias = "thm7-1")]
    Hilb3,
    /// Families over the line with a cyclic symmetry and a non-constant marking.
    Witnesses,
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    match &cli.command {
        Command::Verify { what } => match what {
            VerifyWhat::Hilb3 => commands::verify_hilb3(),
            VerifyWhat::Witnesses => commands::verify_witnesses(),
        },
        Command::Chern { expr, gens, k } => commands::chern(expr, gens, *k),
        Command::DecomposeGl2 { character, expr } => commands::decompose_gl2(character.as_deref(), expr.as_deref()),
        Command::Tangent {
            ideal,
            vars,
            field,
            order,
        } => commands::tangent(ideal, vars, field, order),
        Command::Groebner {
            ideal,
            vars,
            field,
            order,
        } => commands::groebner(ideal, vars, field, order),
        Command::Classify { algebra, p } => commands::classify(algebra, *p),
        Command::Rees { algebra } => commands::rees(algebra),
        Command::QuotientByUnit { algebra } => commands::quotient_by_unit(algebra),
        Command::Specialize { family, t } => commands::specialize(family, t),
        Command::FiberProduct { b, c, d_maps } => commands::fiber_product(b, c, d_maps),
        Command::Bounds { n, d } => commands::bounds(*n, *d),
        Command::CountNonsurj {
            n,
            r,
            p,
            algebra_homs,
        } => commands::count_nonsurj(*n, *r, *p, *algebra_homs),
        Command::PathToBasepoint { algebra, images } => commands::path_to_basepoint(algebra, images),
    }
}

// A closed pipe is not an error worth reporting.
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                let doc = json!({"status": "ok", "payload": out.payload});
                emit(&serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                emit(out.text.trim_end());
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                let doc = json!({"status": "error", "error": format!("{e:#}")});
                emit(&serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(1)
        }
    }
}
