//! Command-line surface for the hypercross library.

mod bench;
mod output;
mod parse;
mod verify;

use clap::{Parser, Subcommand};
use hypercross::{
    admissible_dimensions, cross, cross_matrix, hurwitz_matrix, hurwitz_transform, inertia_tensor,
    rotate, BasisTable, Hypercomplex, TransformKind, VecN,
};
use output::{fmt_matrix, fmt_sig, fmt_vector, matrix_json};
use parse::parse_vector;
use serde_json::json;

/// Cross-product and basis-product conventions, printed by `table` and
/// echoed in JSON output so results are unambiguous.
const CONVENTION: &str =
    "e_i * e_j = sign * e_k (row i, column j); cross(omega, r) = V_n(r) * omega = omega x r";

#[derive(Parser)]
#[command(
    name = "hypercross",
    version,
    about = "Hypercomplex algebra, 3-D/7-D cross products, Hurwitz matrices and transforms"
)]
struct Cli {
    /// Emit a single JSON object instead of plain text
    #[arg(long, global = true)]
    json: bool,

    /// Significant digits for plain-text numeric output
    #[arg(long, global = true, default_value_t = 12)]
    precision: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two hypercomplex numbers of level k
    Mul {
        /// Cayley-Dickson level (0..=5); elements have 2^k coefficients
        #[arg(short = 'k', long = "level")]
        level: usize,
        /// Left operand, comma-separated coefficients
        a: String,
        /// Right operand, comma-separated coefficients
        b: String,
    },
    /// Print the basis multiplication table at level k as a signed index grid
    Table {
        #[arg(short = 'k', long = "level")]
        level: usize,
    },
    /// Cross product omega x r (dimensions 3 and 7)
    Cross {
        #[arg(short)]
        n: usize,
        omega: String,
        r: String,
    },
    /// The antisymmetric cross-product matrix V_n(r)
    Crossmat {
        #[arg(short)]
        n: usize,
        r: String,
    },
    /// Inertia matrix |r|^2 I - r r^T (any dimension)
    Inertia { r: String },
    /// The Hurwitz matrix H_m(u) for m in {2, 4, 8, 16}
    Hurwitz {
        #[arg(short)]
        m: usize,
        u: String,
    },
    /// Apply a norm-squaring transform (|z| = |u|^2)
    Transform {
        /// One of: lc (R2->R2), ks (R4->R3), r8r5 (R8->R5), r16r9 (R16->R9)
        #[arg(long)]
        kind: String,
        u: String,
    },
    /// Rotate v by theta radians about an axis (dimensions 3 and 7)
    Rotate {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        axis: String,
        #[arg(long)]
        theta: f64,
        v: String,
    },
    /// Dimensions up to a bound that admit a vector cross product
    Dims {
        #[arg(long)]
        max: usize,
    },
    /// Run the verification suites and report residuals
    Verify {
        /// Run a single named suite (default: all)
        #[arg(long)]
        suite: Option<String>,
        /// Random samples per identity variant
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Override every suite's default tolerance
        #[arg(long)]
        tol: Option<f64>,
        /// RNG seed (default: HYPERCROSS_SEED env var, else 0)
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Time table-driven vs recursive multiplication
    Bench {
        #[arg(long, default_value_t = 3)]
        level: usize,
        #[arg(long, default_value_t = 100_000)]
        iters: usize,
    },
}

fn main() {
    // die quietly when the downstream end of a pipe closes early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

fn default_seed() -> Result<u64, String> {
    match std::env::var("HYPERCROSS_SEED") {
        Ok(text) => text
            .parse::<u64>()
            .map_err(|_| format!("HYPERCROSS_SEED ('{text}') is not a valid u64 seed")),
        Err(_) => Ok(0),
    }
}

fn run(cli: &Cli) -> Result<i32, String> {
    let sig = cli.precision.max(1);
    match &cli.command {
        Command::Mul { level, a, b } => {
            let a = parse_element(*level, "a", a)?;
            let b = parse_element(*level, "b", b)?;
            let product = a.cd_mul(&b).map_err(|e| e.to_string())?;
            let result = VecN::from(product.coeffs());
            if cli.json {
                println!(
                    "{}",
                    json!({"command": "mul", "level": level, "result": result.coords()})
                );
            } else {
                println!("{}", fmt_vector(&result, sig));
            }
            Ok(0)
        }
        Command::Table { level } => {
            let table = BasisTable::new(*level).map_err(|e| e.to_string())?;
            if cli.json {
                let dim = table.dim();
                let signs: Vec<Vec<i8>> = (0..dim)
                    .map(|i| (0..dim).map(|j| table.get(i, j).sign).collect())
                    .collect();
                let indices: Vec<Vec<usize>> = (0..dim)
                    .map(|i| (0..dim).map(|j| table.get(i, j).index).collect())
                    .collect();
                println!(
                    "{}",
                    json!({
                        "command": "table",
                        "level": level,
                        "convention": CONVENTION,
                        "sign": signs,
                        "index": indices,
                    })
                );
            } else {
                println!("# {CONVENTION}");
                let dim = table.dim();
                let width = if dim > 10 { 3 } else { 2 };
                for i in 0..dim {
                    let row: Vec<String> = (0..dim)
                        .map(|j| {
                            let p = table.get(i, j);
                            let sign = if p.sign >= 0 { '+' } else { '-' };
                            format!("{sign}{:<width$}", p.index)
                        })
                        .collect();
                    println!("{}", row.join(" "));
                }
            }
            Ok(0)
        }
        Command::Cross { n, omega, r } => {
            let omega = parse_dim_vector(*n, "omega", omega)?;
            let r = parse_dim_vector(*n, "r", r)?;
            let result = cross(&omega, &r).map_err(|e| e.to_string())?;
            if cli.json {
                println!(
                    "{}",
                    json!({"command": "cross", "n": n, "result": result.coords()})
                );
            } else {
                println!("{}", fmt_vector(&result, sig));
            }
            Ok(0)
        }
        Command::Crossmat { n, r } => {
            let r = parse_dim_vector(*n, "r", r)?;
            let v = cross_matrix(&r).map_err(|e| e.to_string())?;
            if cli.json {
                println!(
                    "{}",
                    json!({"command": "crossmat", "n": n, "convention": CONVENTION, "matrix": matrix_json(v.matrix())})
                );
            } else {
                println!("{}", fmt_matrix(v.matrix(), sig));
            }
            Ok(0)
        }
        Command::Inertia { r } => {
            let r = parse_vector("r", r)?;
            let m = inertia_tensor(&r);
            if cli.json {
                println!(
                    "{}",
                    json!({"command": "inertia", "n": r.dim(), "matrix": matrix_json(m.matrix())})
                );
            } else {
                println!("{}", fmt_matrix(m.matrix(), sig));
            }
            Ok(0)
        }
        Command::Hurwitz { m, u } => {
            let u = parse_dim_vector(*m, "u", u)?;
            let h = hurwitz_matrix(&u).map_err(|e| e.to_string())?;
            if cli.json {
                println!(
                    "{}",
                    json!({"command": "hurwitz", "m": m, "matrix": matrix_json(h.matrix())})
                );
            } else {
                println!("{}", fmt_matrix(h.matrix(), sig));
            }
            Ok(0)
        }
        Command::Transform { kind, u } => {
            let kind_parsed = parse_kind(kind)?;
            let u = parse_dim_vector(kind_parsed.input_dim(), "u", u)?;
            let result = hurwitz_transform(kind_parsed, &u).map_err(|e| e.to_string())?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "command": "transform",
                        "kind": kind,
                        "result": result.z.coords(),
                        "structural_zeros": result.structural_zeros,
                    })
                );
            } else {
                println!("{}", fmt_vector(&result.z, sig));
            }
            Ok(0)
        }
        Command::Rotate { n, axis, theta, v } => {
            let axis = parse_dim_vector(*n, "axis", axis)?;
            let v = parse_dim_vector(*n, "v", v)?;
            let result = rotate(&v, &axis, *theta).map_err(|e| e.to_string())?;
            if cli.json {
                println!(
                    "{}",
                    json!({"command": "rotate", "n": n, "theta": theta, "result": result.coords()})
                );
            } else {
                println!("{}", fmt_vector(&result, sig));
            }
            Ok(0)
        }
        Command::Dims { max } => {
            let dims = admissible_dimensions(*max);
            if cli.json {
                println!("{}", json!({"command": "dims", "max": max, "result": dims}));
            } else {
                let text: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
                println!("{}", text.join(" "));
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            samples,
            tol,
            seed,
        } => {
            let seed = match seed {
                Some(s) => *s,
                None => default_seed()?,
            };
            let reports = verify::run_suites(suite.as_deref(), *samples, *tol, seed)?;
            let all_passed = reports.iter().all(|r| r.passed);
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "command": "verify",
                        "seed": seed,
                        "samples": samples,
                        "reports": reports,
                        "passed": all_passed,
                    })
                );
            } else {
                for r in &reports {
                    println!(
                        "{} {} samples={} max_residual={} tolerance={}",
                        if r.passed { "PASS" } else { "FAIL" },
                        r.identity_name,
                        r.samples,
                        fmt_sig(r.max_residual, 6),
                        fmt_sig(r.tolerance, 6),
                    );
                }
            }
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::Bench { level, iters } => {
            let seed = default_seed()?;
            let result = bench::run_bench(*level, *iters, seed)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "command": "bench",
                        "level": result.level,
                        "iters": result.iters,
                        "recursive_ns_per_mul": result.recursive_ns_per_mul,
                        "table_ns_per_mul": result.table_ns_per_mul,
                        "checksum": result.checksum,
                    })
                );
            } else {
                println!(
                    "recursive: {} ns/mul",
                    fmt_sig(result.recursive_ns_per_mul, 4)
                );
                println!("table:     {} ns/mul", fmt_sig(result.table_ns_per_mul, 4));
                println!("checksum:  {}", fmt_sig(result.checksum, sig));
            }
            Ok(0)
        }
    }
}

fn parse_element(level: usize, name: &str, text: &str) -> Result<Hypercomplex, String> {
    let v = parse_vector(name, text)?;
    Hypercomplex::new(level, v.coords().to_vec()).map_err(|e| e.to_string())
}

fn parse_dim_vector(dim: usize, name: &str, text: &str) -> Result<VecN, String> {
    let v = parse_vector(name, text)?;
    if v.dim() != dim {
        return Err(format!(
            "vector '{name}' has {} components, expected {dim}",
            v.dim()
        ));
    }
    Ok(v)
}

fn parse_kind(kind: &str) -> Result<TransformKind, String> {
    match kind {
        "lc" => Ok(TransformKind::LeviCivita),
        "ks" => Ok(TransformKind::KustaanheimoStiefel),
        "r8r5" => Ok(TransformKind::R8ToR5),
        "r16r9" => Ok(TransformKind::R16ToR9),
        other => Err(format!(
            "unknown transform kind '{other}'; expected lc, ks, r8r5 or r16r9"
        )),
    }
}
