//! Command-line front end. [`run`] does all the work and returns the exit code
//! together with buffered output, so the binary is a thin wrapper.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::center::{
    class_product, polynomiality_report, proper_coefficient, structure_coefficient,
};
use crate::conjugacy::{class_elements, class_size, enumerate_class_types, ProperClassFamily};
use crate::error::Error;
use crate::perm::Perm;
use crate::wreath::{enumerate_group, BlockPermutation, ClassType};

#[derive(Parser, Debug)]
#[command(
    name = "wreath",
    version,
    about = "Conjugacy classes and class algebra of S_k wr S_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Maximum number of group elements any single enumeration may visit.
    #[arg(long, global = true, value_name = "VISITS")]
    budget: Option<u64>,

    /// Cycle notation and aligned tables instead of machine output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Report domain errors as JSON.
    #[arg(long, global = true)]
    json_errors: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Class type of a block permutation.
    Type {
        #[arg(long, value_parser = positive)]
        k: usize,
        /// One-line notation, 1-based.
        #[arg(long)]
        perm: String,
    },
    /// Wreath coordinates ((σ_1, .., σ_n); p).
    Psi {
        #[arg(long, value_parser = positive)]
        k: usize,
        #[arg(long)]
        perm: String,
    },
    /// The composition a∘b.
    Multiply {
        #[arg(long, value_parser = positive)]
        k: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Size of a conjugacy class.
    ClassSize {
        #[arg(long, value_parser = positive)]
        k: usize,
        #[arg(long = "type", value_name = "TYPE")]
        class_type: String,
    },
    /// All class types of B_kn^k with their sizes.
    Classes {
        #[arg(long, value_parser = positive)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Expansion of the product of two class sums.
    Product {
        #[arg(long, value_parser = positive)]
        k: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// One structure coefficient: either --z, or proper families --h with --n.
    Coeff {
        #[arg(long, value_parser = positive)]
        k: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, required_unless_present = "h", conflicts_with_all = ["h", "n"])]
        z: Option<String>,
        #[arg(long, requires = "n")]
        h: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Fits c_xy^h(n) for proper families and checks polynomiality.
    Polyfit {
        #[arg(long, value_parser = positive)]
        k: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        h: String,
        #[arg(long, requires = "n_to")]
        n_from: Option<usize>,
        #[arg(long, requires = "n_from")]
        n_to: Option<usize>,
    },
    /// Recomputes the worked examples and known product identities.
    VerifyPaper,
    /// Lists the whole group, or a single class with --type.
    Enumerate {
        #[arg(long, value_parser = positive)]
        k: usize,
        #[arg(
            long,
            required_unless_present = "class_type",
            conflicts_with = "class_type"
        )]
        n: Option<usize>,
        #[arg(long = "type", value_name = "TYPE")]
        class_type: Option<String>,
    },
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    flag: Option<&'static str>,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { flag: None, error }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn flagged<T>(flag: &'static str, r: crate::Result<T>) -> CliResult<T> {
    r.map_err(|error| Failure {
        flag: Some(flag),
        error,
    })
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let budget = cli.budget.map(Budget::new).unwrap_or_default();
    let mut stderr = String::new();
    match execute(&cli.command, &budget, cli.pretty, &mut stderr) {
        Ok((code, mut stdout)) => {
            if !stdout.is_empty() && !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome {
                code,
                stdout,
                stderr,
            }
        }
        Err(f) => {
            let message = match f.flag {
                Some(flag) => format!("{flag}: {}", f.error),
                None => f.error.to_string(),
            };
            if cli.json_errors {
                let v = json!({ "error": { "kind": f.error.kind(), "flag": f.flag, "message": message } });
                stderr.push_str(&format!("{v}\n"));
            } else {
                stderr.push_str(&format!("error: {message}\n"));
            }
            Outcome {
                code: 1,
                stdout: String::new(),
                stderr,
            }
        }
    }
}

fn execute(
    command: &Command,
    budget: &Budget,
    pretty: bool,
    stderr: &mut String,
) -> CliResult<(i32, String)> {
    let out = match command {
        Command::Type { k, perm } => {
            let omega = flagged("--perm", BlockPermutation::parse(*k, perm))?;
            let x = omega.class_type();
            if pretty {
                format!(
                    "type:   {x}\nblocks: {}\ncycles: {}",
                    omega.blocks_permutation().cycle_notation(),
                    omega.cycle_notation()
                )
            } else {
                x.to_string()
            }
        }
        Command::Psi { k, perm } => {
            let w = flagged("--perm", BlockPermutation::parse(*k, perm))?.to_wreath();
            if pretty {
                w.pretty()
            } else {
                let locals: Vec<String> = w.locals().iter().map(Perm::one_line).collect();
                json!({ "locals": locals, "outer": w.outer().one_line() }).to_string()
            }
        }
        Command::Multiply { k, a, b } => {
            let a = flagged("--a", BlockPermutation::parse(*k, a))?;
            let b = flagged("--b", BlockPermutation::parse(*k, b))?;
            let ab = a.compose(&b)?;
            if pretty {
                ab.cycle_notation()
            } else {
                ab.one_line()
            }
        }
        Command::ClassSize { k, class_type } => {
            class_size(&flagged("--type", ClassType::parse(*k, class_type))?).to_string()
        }
        Command::Classes { k, n } => {
            let rows: Vec<(ClassType, BigUint)> = enumerate_class_types(*k, *n)
                .into_iter()
                .map(|x| {
                    let size = class_size(&x);
                    (x, size)
                })
                .collect();
            if pretty {
                let total: BigUint = rows.iter().map(|(_, s)| s).sum();
                let mut table: Vec<[String; 2]> = rows
                    .iter()
                    .map(|(x, s)| [x.to_string(), s.to_string()])
                    .collect();
                table.push(["total".into(), total.to_string()]);
                render_table(["type", "size"], &table)
            } else {
                let v: Vec<Value> = rows
                    .iter()
                    .map(|(x, s)| json!({ "type": x.to_string(), "size": s.to_string() }))
                    .collect();
                Value::Array(v).to_string()
            }
        }
        Command::Product { k, x, y } => {
            let x = flagged("--x", ClassType::parse(*k, x))?;
            let y = flagged("--y", ClassType::parse(*k, y))?;
            let product = class_product(&x, &y, budget)?;
            if pretty {
                let table: Vec<[String; 2]> = product
                    .terms
                    .iter()
                    .map(|(z, c)| [c.to_string(), z.to_string()])
                    .collect();
                render_table(["coeff", "class"], &table)
            } else {
                product.to_json(&x, &y).to_string()
            }
        }
        Command::Coeff { k, x, y, z, h, n } => match (z, h, n) {
            (Some(z), _, _) => {
                let x = flagged("--x", ClassType::parse(*k, x))?;
                let y = flagged("--y", ClassType::parse(*k, y))?;
                let z = flagged("--z", ClassType::parse(*k, z))?;
                structure_coefficient(&x, &y, &z, budget)?.to_string()
            }
            (None, Some(h), Some(n)) => {
                let x = flagged("--x", ProperClassFamily::parse(*k, x))?;
                let y = flagged("--y", ProperClassFamily::parse(*k, y))?;
                let h = flagged("--h", ProperClassFamily::parse(*k, h))?;
                let c = proper_coefficient(&x, &y, &h, *n, budget)?;
                if c.at_boundary {
                    stderr.push_str(
                        "warning: n equals the largest family size; polynomiality is only claimed above it\n",
                    );
                }
                c.value.to_string()
            }
            _ => unreachable!("clap enforces --z or --h with --n"),
        },
        Command::Polyfit {
            k,
            x,
            y,
            h,
            n_from,
            n_to,
        } => {
            let x = flagged("--x", ProperClassFamily::parse(*k, x))?;
            let y = flagged("--y", ProperClassFamily::parse(*k, y))?;
            let h = flagged("--h", ProperClassFamily::parse(*k, h))?;
            let range = n_from.zip(*n_to).map(|(a, b)| a..=b);
            let report = polynomiality_report(&x, &y, &h, range, budget)?;
            if pretty {
                let mut s = String::new();
                let table: Vec<[String; 2]> = report
                    .points
                    .iter()
                    .map(|(n, c)| [n.to_string(), c.to_string()])
                    .collect();
                s.push_str(&render_table(["n", "c"], &table));
                let degree = report.degree().map_or("-".to_string(), |d| d.to_string());
                let _ = writeln!(s, "\npolynomial:       {}", report.polynomial);
                let _ = writeln!(
                    s,
                    "degree:           {degree} (|x|+|y|-|h| = {})",
                    report.bound
                );
                let _ = writeln!(s, "holdout exact:    {}", report.predicts_holdout);
                let _ = writeln!(s, "nonnegative:      {}", report.nonnegative);
                let _ = writeln!(s, "degree <= bound:  {}", report.weak_bound);
                let _ = write!(s, "degree <  bound:  {}", report.strict_bound);
                s
            } else {
                report.to_json().to_string()
            }
        }
        Command::VerifyPaper => {
            let mut s = String::new();
            let checks = golden_checks();
            let mut failed = 0;
            for (name, check) in &checks {
                match check() {
                    Ok(()) => {
                        let _ = writeln!(s, "ok    {name}");
                    }
                    Err(why) => {
                        failed += 1;
                        let _ = writeln!(s, "FAIL  {name}: {why}");
                    }
                }
            }
            if failed == 0 {
                let _ = write!(s, "all {} golden identities passed", checks.len());
                return Ok((0, s));
            }
            let _ = write!(s, "{failed} of {} golden identities failed", checks.len());
            return Ok((1, s));
        }
        Command::Enumerate { k, n, class_type } => {
            let elements: Vec<BlockPermutation> = match (n, class_type) {
                (_, Some(t)) => {
                    class_elements(&flagged("--type", ClassType::parse(*k, t))?, budget)?
                }
                (Some(n), None) => enumerate_group(*k, *n, budget)?.collect(),
                (None, None) => unreachable!("clap enforces --n or --type"),
            };
            if pretty {
                elements
                    .iter()
                    .map(|g| g.cycle_notation())
                    .collect::<Vec<_>>()
                    .join("\n")
            } else {
                let v: Vec<String> = elements.iter().map(|g| g.one_line()).collect();
                json!(v).to_string()
            }
        }
    };
    Ok((0, out))
}

fn render_table<const C: usize>(header: [&str; C], rows: &[[String; C]]) -> String {
    let mut widths: [usize; C] = header.map(|h| h.chars().count());
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header.to_vec())];
    out.push(line(
        widths
            .map(|w| "-".repeat(w))
            .iter()
            .map(String::as_str)
            .collect(),
    ));
    for row in rows {
        out.push(line(row.iter().map(String::as_str).collect()));
    }
    out.join("\n")
}

type Check = Box<dyn Fn() -> std::result::Result<(), String>>;

fn expect_eq<T: PartialEq + std::fmt::Display>(
    what: &str,
    got: T,
    want: T,
) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn err_string(e: Error) -> String {
    e.to_string()
}

/// A coefficient as a function of `n`.
type Coefficient = fn(u64) -> u64;

/// Checks `C_x(n) C_y(n) = Σ coeff(n) C_z(n)` for proper families and every `n` in `ns`.
fn product_identity(
    k: usize,
    x: &'static str,
    y: &'static str,
    terms: &'static [(&'static str, Coefficient)],
    ns: &'static [usize],
) -> std::result::Result<(), String> {
    let budget = Budget::default();
    let fam = |t: &str| ProperClassFamily::parse(k, t).map_err(err_string);
    for &n in ns {
        let px = fam(x)?.pad(n).map_err(err_string)?;
        let py = fam(y)?.pad(n).map_err(err_string)?;
        let got = class_product(&px, &py, &budget).map_err(err_string)?;
        let mut want = std::collections::BTreeMap::new();
        for (z, coeff) in terms {
            want.insert(
                fam(z)?.pad(n).map_err(err_string)?,
                BigUint::from(coeff(n as u64)),
            );
        }
        if got.terms != want {
            let shown: Vec<String> = got.terms.iter().map(|(z, c)| format!("{c}·{z}")).collect();
            return Err(format!("n={n}: got {}", shown.join(" + ")));
        }
        if got.mass() != class_size(&px) * class_size(&py) {
            return Err(format!("n={n}: mass not conserved"));
        }
    }
    Ok(())
}

fn golden_checks() -> Vec<(&'static str, Check)> {
    const OMEGA_24: &str = "12 10 11 20 21 19 8 7 9 1 2 3 16 18 17 15 14 13 5 4 6 22 23 24";
    const OMEGA_16: &str = "14 13 1 2 16 15 7 8 12 11 10 9 4 3 5 6";
    const ALPHA: &str = "12 10 11 5 6 4 8 7 9 15 13 14 16 18 17 3 2 1";
    const BETA: &str = "4 5 6 18 17 16 8 9 7 1 2 3 12 11 10 15 14 13";
    let bp = |k: usize, s: &str| BlockPermutation::parse(k, s).map_err(err_string);
    vec![
        (
            "type and block permutation of a 24-point element (k=3)",
            Box::new(move || {
                let omega = bp(3, OMEGA_24)?;
                expect_eq(
                    "type",
                    omega.class_type().to_string(),
                    "{[1,1,1]:[1]; [2,1]:[2,1]; [3]:[2,2]}".into(),
                )?;
                expect_eq(
                    "p_ω",
                    omega.blocks_permutation().cycle_notation(),
                    "(1,4)(2,7)(3)(5,6)(8)".into(),
                )
            }) as Check,
        ),
        (
            "type of a 16-point signed permutation (k=2)",
            Box::new(move || {
                expect_eq(
                    "type",
                    bp(2, OMEGA_16)?.class_type().to_string(),
                    "{[1,1]:[3,2,1]; [2]:[2]}".into(),
                )
            }),
        ),
        (
            "normalized restrictions of α",
            Box::new(move || {
                let alpha = bp(3, ALPHA)?;
                let got: Vec<String> = (0..6)
                    .map(|i| crate::wreath::compact_cycles(&alpha.restriction(i)))
                    .collect();
                expect_eq(
                    "restrictions",
                    got.join(","),
                    "(1,3),(1,2,3),(1,2),(1,3,2),(1,3,2),(2,3)".into(),
                )?;
                expect_eq(
                    "p_α",
                    alpha.blocks_permutation().cycle_notation(),
                    "(1,4,5,6)(2)(3)".into(),
                )
            }),
        ),
        (
            "ψ is a homomorphism on α, β",
            Box::new(move || {
                let (a, b) = (bp(3, ALPHA)?, bp(3, BETA)?);
                let ab = a.compose(&b).map_err(err_string)?;
                expect_eq(
                    "αβ",
                    ab.one_line(),
                    "5 6 4 1 2 3 7 9 8 12 10 11 14 13 15 17 18 16".into(),
                )?;
                expect_eq(
                    "ψ(α)",
                    a.to_wreath().pretty(),
                    "(((1,3),(1,2,3),(1,2),(1,3,2),(1,3,2),(2,3));(1,4,5,6)(2)(3))".into(),
                )?;
                expect_eq(
                    "ψ(β)",
                    b.to_wreath().pretty(),
                    "((1,1,(1,2,3),(1,3),(1,3),(1,3));(1,2,6,5,4)(3))".into(),
                )?;
                expect_eq(
                    "ψ(αβ)",
                    ab.to_wreath().pretty(),
                    "((1,(1,2,3),(2,3),(1,3,2),(1,2),(1,2,3));(1,2)(3)(4)(5)(6))".into(),
                )?;
                let product = a.to_wreath().multiply(&b.to_wreath()).map_err(err_string)?;
                expect_eq("ψ(α)ψ(β)", product.pretty(), ab.to_wreath().pretty())?;
                expect_eq(
                    "φψ(α)",
                    a.to_wreath().to_block_permutation().one_line(),
                    a.one_line(),
                )?;
                expect_eq(
                    "φψ(β)",
                    b.to_wreath().to_block_permutation().one_line(),
                    b.one_line(),
                )
            }),
        ),
        (
            "block-preservation check",
            Box::new(move || {
                expect_eq("1 3 2 6 5 4 valid", bp(3, "1 3 2 6 5 4").is_ok(), true)?;
                expect_eq("1 3 6 2 4 6 valid", bp(3, "1 3 6 2 4 6").is_ok(), false)?;
                expect_eq("1 2 4 3 5 6 valid", bp(3, "1 2 4 3 5 6").is_ok(), false)
            }),
        ),
        (
            "k=1: C(2)^2 for n=4..7",
            Box::new(|| {
                product_identity(
                    1,
                    "{[1]:[2]}",
                    "{[1]:[2]}",
                    &[
                        ("{}", |n| n * (n - 1) / 2),
                        ("{[1]:[3]}", |_| 3),
                        ("{[1]:[2,2]}", |_| 2),
                    ],
                    &[4, 5, 6, 7],
                )
            }),
        ),
        (
            "k=1: C(2)C(3) for n=5..7",
            Box::new(|| {
                product_identity(
                    1,
                    "{[1]:[2]}",
                    "{[1]:[3]}",
                    &[
                        ("{[1]:[2]}", |n| 2 * (n - 2)),
                        ("{[1]:[4]}", |_| 4),
                        ("{[1]:[3,2]}", |_| 1),
                    ],
                    &[5, 6, 7],
                )
            }),
        ),
        (
            "k=2: C(∅,(2))^2 for n=4,5",
            Box::new(|| {
                product_identity(
                    2,
                    "{[2]:[2]}",
                    "{[2]:[2]}",
                    &[
                        ("{}", |n| n * (n - 1)),
                        ("{[2]:[2,2]}", |_| 2),
                        ("{[2]:[1,1]}", |_| 2),
                        ("{[1,1]:[3]}", |_| 3),
                    ],
                    &[4, 5],
                )
            }),
        ),
        (
            "k=3: C(∅,(1),(1)) C(∅,∅,(1)) for n=3,4",
            Box::new(|| {
                product_identity(
                    3,
                    "{[2,1]:[1]; [3]:[1]}",
                    "{[3]:[1]}",
                    &[
                        ("{[2,1]:[1]; [3]:[1,1]}", |_| 2),
                        ("{[2,1]:[1]}", |n| 2 * (n - 1)),
                        ("{[2,1]:[1]; [3]:[1]}", |_| 3),
                    ],
                    &[3, 4],
                )
            }),
        ),
        (
            "k=3: C(∅,(1),(1)) C(∅,(1),∅) for n=3,4",
            Box::new(|| {
                product_identity(
                    3,
                    "{[2,1]:[1]; [3]:[1]}",
                    "{[2,1]:[1]}",
                    &[
                        ("{[2,1]:[1,1]; [3]:[1]}", |_| 2),
                        ("{[3]:[1]}", |n| 3 * (n - 1)),
                        ("{[2,1]:[1,1]}", |_| 4),
                        ("{[3]:[1,1]}", |_| 6),
                    ],
                    &[3, 4],
                )
            }),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("wreath").chain(args.iter().copied()))
    }

    #[test]
    fn table_alignment() {
        let t = render_table(["a", "bb"], &[["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\n---  --\nxyz  1");
    }

    #[test]
    fn zero_k_is_a_usage_error() {
        let out = run_args(&["enumerate", "--k", "0", "--n", "2"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("--k"));
    }

    #[test]
    fn golden_check_count() {
        assert_eq!(golden_checks().len(), 10);
    }
}
