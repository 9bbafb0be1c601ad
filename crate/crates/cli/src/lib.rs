//! Command-line front end. Output is line-oriented `key: value` text.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use workbench_core::classical::{
    babylonian_diff_product, babylonian_sum_of_squares, babylonian_sum_product, eliminate,
    false_position, BabylonianPair, EliminationKind, LinearSystem, SquaresSign,
};
use workbench_core::finite::magma::classify_magma;
use workbench_core::finite::mapping::classify_map;
use workbench_core::finite::ring::{characteristic, find_total_order, residue_ring, ring_classify};
use workbench_core::finite::table::{parse_ring, parse_table, render_ring};
use workbench_core::perm::{stabilizer, symmetric_group_table, triangle_group};
use workbench_core::solvers::{solve_binomial, solve_poly, Poly};
use workbench_core::{
    AlgebraError, CayleyTable, ComplexApprox, ExtensionField, FiniteMap, Permutation, Rational,
};

#[derive(Parser, Debug)]
#[command(name = "workbench", version, about = "Exact-arithmetic algebra workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a finite groupoid given by its Cayley table.
    Table {
        #[command(subcommand)]
        action: FileAction,
    },
    /// Check the ring axioms for an add/mul table pair.
    Ring {
        #[command(subcommand)]
        action: FileAction,
    },
    /// The residue ring Z_m. Without a flag, prints its table file.
    Zmod {
        m: u64,
        #[arg(long, group = "what")]
        classify: bool,
        #[arg(long = "char", group = "what")]
        characteristic: bool,
        /// Search for a total order compatible with + and · (m <= 6).
        #[arg(long, group = "what")]
        order: bool,
    },
    /// Permutations in two-row form, e.g. "(1 2 3 / 2 1 3)".
    Perm {
        #[command(subcommand)]
        action: PermAction,
    },
    /// Arithmetic in Q(√d); elements as "x,y" or "x + y*sqrt(d)".
    Ext {
        #[arg(long = "d", allow_hyphen_values = true)]
        d: Rational,
        #[command(subcommand)]
        action: ExtAction,
    },
    /// Roots of a degree 1-4 equation, coefficients highest degree first.
    Solve {
        #[arg(long)]
        degree: usize,
        #[arg(required = true, allow_hyphen_values = true)]
        coeffs: Vec<ComplexApprox>,
    },
    /// The n solutions of z^n = c.
    Roots {
        n: u32,
        #[arg(allow_hyphen_values = true)]
        c: ComplexApprox,
    },
    /// False position, Babylonian recipes and elimination.
    Classical {
        #[command(subcommand)]
        action: ClassicalAction,
    },
    /// Maps between finite sets.
    Map {
        #[command(subcommand)]
        action: MapAction,
    },
}

#[derive(Subcommand, Debug)]
enum FileAction {
    Analyze { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum MapAction {
    /// Injective / surjective / bijective.
    Classify { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum PermAction {
    /// Left-to-right product: the first permutation is applied first.
    Compose {
        #[arg(num_args = 2.., required = true)]
        perms: Vec<Permutation>,
    },
    Inverse { perm: Permutation },
    /// Cayley table of S_n, 1 <= n <= 5.
    Table { n: usize },
    /// Permutations of degree n fixing the listed points.
    Stabilizer { n: usize, points: Vec<usize> },
    /// Cayley table of the six motions of an equilateral triangle.
    Triangle,
}

#[derive(Subcommand, Debug)]
enum ExtAction {
    Add {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Inv {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    Conj {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// The solutions of ξ² = d.
    Sqrt,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Recipe {
    /// x + y = a, xy = b
    SumProduct,
    /// x - y = a, xy = b
    DiffProduct,
    /// x + y = a, x² + y² = b
    SquaresPlus,
    /// x - y = a, x² + y² = b
    SquaresMinus,
}

#[derive(Subcommand, Debug)]
enum ClassicalAction {
    /// Solve x + coeff·x = b from a convenient trial value.
    FalsePosition {
        #[arg(allow_hyphen_values = true)]
        coeff: Rational,
        #[arg(allow_hyphen_values = true)]
        b: Rational,
    },
    Babylonian {
        recipe: Recipe,
        #[arg(allow_hyphen_values = true)]
        a: Rational,
        #[arg(allow_hyphen_values = true)]
        b: Rational,
    },
    /// Solve a system file of rows like "1 2 2 | 9".
    Eliminate {
        file: PathBuf,
        /// Also print the system laid out by columns.
        #[arg(long)]
        columns: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs one invocation; `args` includes the program name. Returns the exit
/// code: 0 on success, 1 on a domain error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn names(t: &CayleyTable, xs: impl IntoIterator<Item = usize>) -> String {
    let v: Vec<&str> = xs.into_iter().map(|x| t.name(x)).collect();
    if v.is_empty() {
        "none".into()
    } else {
        v.join(" ")
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Table {
            action: FileAction::Analyze { file },
        } => {
            let t = parse_table(&read(&file)?).map_err(AlgebraError::from)?;
            table_report(&t, out)
        }
        Command::Ring {
            action: FileAction::Analyze { file },
        } => {
            let (add, mul) = parse_ring(&read(&file)?).map_err(AlgebraError::from)?;
            ring_report(&add, &mul, out)
        }
        Command::Zmod {
            m,
            classify,
            characteristic: char_only,
            order,
        } => {
            let (add, mul) = residue_ring(m)?;
            if classify {
                ring_report(&add, &mul, out)
            } else if char_only {
                writeln!(out, "characteristic: {}", characteristic(&add, 1)?)?;
                Ok(())
            } else if order {
                order_report(&add, &mul, out)
            } else {
                write!(out, "{}", render_ring(&add, &mul))?;
                Ok(())
            }
        }
        Command::Perm { action } => perm(action, out),
        Command::Ext { d, action } => ext(d, action, out),
        Command::Solve { degree, coeffs } => {
            if !(1..=4).contains(&degree) {
                return Err(Failure::Usage(format!("--degree must be 1 to 4, got {degree}")));
            }
            if coeffs.len() != degree + 1 {
                return Err(Failure::Usage(format!(
                    "degree {degree} needs {} coefficients, got {}",
                    degree + 1,
                    coeffs.len()
                )));
            }
            if coeffs[0].is_zero() {
                return Err(AlgebraError::ZeroLeading(degree).into());
            }
            for root in solve_poly(&Poly::from_highest(&coeffs))? {
                writeln!(out, "{root}")?;
            }
            Ok(())
        }
        Command::Roots { n, c } => {
            if n == 0 {
                return Err(Failure::Usage("n must be positive".into()));
            }
            for root in solve_binomial(c, n) {
                writeln!(out, "{root}")?;
            }
            Ok(())
        }
        Command::Classical { action } => classical(action, out),
        Command::Map {
            action: MapAction::Classify { file },
        } => {
            let f = FiniteMap::parse(&read(&file)?)?;
            let k = classify_map(&f);
            writeln!(out, "injective: {}", yes(k.injective))?;
            writeln!(out, "surjective: {}", yes(k.surjective))?;
            writeln!(out, "bijective: {}", yes(k.bijective))?;
            Ok(())
        }
    }
}

fn table_report(t: &CayleyTable, out: &mut dyn Write) -> Outcome {
    let r = classify_magma(t);
    writeln!(out, "elements: {}", t.len())?;
    writeln!(out, "groupoid: {}", yes(r.is_groupoid))?;
    writeln!(out, "semigroup: {}", yes(r.is_semigroup))?;
    writeln!(out, "monoid: {}", yes(r.is_monoid))?;
    writeln!(out, "group: {}", yes(r.is_group))?;
    writeln!(out, "commutative: {}", yes(r.is_commutative))?;
    writeln!(out, "abelian: {}", yes(r.is_abelian))?;
    writeln!(out, "neutral: {}", names(t, r.neutral))?;
    match r.non_associative_witness {
        Some((x, y, z)) => writeln!(
            out,
            "non-associative: ({} {} {})",
            t.name(x),
            t.name(y),
            t.name(z)
        )?,
        None => writeln!(out, "non-associative: none")?,
    }
    match r.non_commutative_witness {
        Some((x, y)) => writeln!(out, "non-commutative: ({} {})", t.name(x), t.name(y))?,
        None => writeln!(out, "non-commutative: none")?,
    }
    writeln!(out, "non-invertible: {}", names(t, r.non_invertible.iter().copied()))?;
    Ok(())
}

fn ring_report(add: &CayleyTable, mul: &CayleyTable, out: &mut dyn Write) -> Outcome {
    let r = ring_classify(add, mul)?;
    let pairs: Vec<String> = r
        .zero_divisors
        .iter()
        .map(|&(x, y)| format!("({},{})", add.name(x), add.name(y)))
        .collect();
    writeln!(out, "elements: {}", add.len())?;
    writeln!(out, "ring: {}", yes(r.is_ring))?;
    writeln!(out, "additive-abelian-group: {}", yes(r.additive_abelian_group))?;
    writeln!(out, "distributive: {}", yes(r.distributive))?;
    if let Some((x, y, z)) = r.distributive_witness {
        writeln!(
            out,
            "distributive-witness: ({} {} {})",
            add.name(x),
            add.name(y),
            add.name(z)
        )?;
    }
    writeln!(out, "zero: {}", names(add, r.zero))?;
    writeln!(out, "unity: {}", names(add, r.unity))?;
    writeln!(out, "associative-mul: {}", yes(r.associative_mul))?;
    writeln!(out, "commutative-mul: {}", yes(r.commutative_mul))?;
    writeln!(
        out,
        "zero-divisors: {}",
        if pairs.is_empty() { "none".into() } else { pairs.join(" ") }
    )?;
    writeln!(out, "units: {}", names(add, r.units.iter().copied()))?;
    writeln!(out, "integral: {}", yes(r.is_integral))?;
    writeln!(out, "skew-field: {}", yes(r.is_skew_field))?;
    writeln!(out, "field: {}", yes(r.is_field))?;
    match r.characteristic {
        Some(p) => writeln!(out, "characteristic: {p}")?,
        None => writeln!(out, "characteristic: none")?,
    }
    Ok(())
}

fn order_report(add: &CayleyTable, mul: &CayleyTable, out: &mut dyn Write) -> Outcome {
    match find_total_order(add, mul)? {
        Some(chain) => {
            let v: Vec<&str> = chain.iter().map(|&x| add.name(x)).collect();
            writeln!(out, "order: {}", v.join(" < "))?;
        }
        None => writeln!(out, "order: none")?,
    }
    Ok(())
}

fn perm(action: PermAction, out: &mut dyn Write) -> Outcome {
    match action {
        PermAction::Compose { perms } => {
            let mut acc = perms[0].clone();
            for p in &perms[1..] {
                acc = acc.compose(p)?;
            }
            writeln!(out, "{acc}")?;
        }
        PermAction::Inverse { perm } => writeln!(out, "{}", perm.inverse())?,
        PermAction::Table { n } => write!(out, "{}", symmetric_group_table(n)?)?,
        PermAction::Stabilizer { n, points } => {
            for p in stabilizer(n, &points)? {
                writeln!(out, "{p}")?;
            }
        }
        PermAction::Triangle => write!(out, "{}", triangle_group().table)?,
    }
    Ok(())
}

fn ext(d: Rational, action: ExtAction, out: &mut dyn Write) -> Outcome {
    let f = ExtensionField::new(d)?;
    let parse = |s: &str| f.parse(s).map_err(|e| Failure::Usage(e.to_string()));
    let value = match action {
        ExtAction::Add { a, b } => f.add(&parse(&a)?, &parse(&b)?),
        ExtAction::Mul { a, b } => f.mul(&parse(&a)?, &parse(&b)?),
        ExtAction::Inv { a } => f.inverse(&parse(&a)?)?,
        ExtAction::Conj { a } => f.conjugate(&parse(&a)?),
        ExtAction::Sqrt => {
            let (r1, r2) = f.solve_sqrt();
            writeln!(out, "{}", f.display(&r1))?;
            writeln!(out, "{}", f.display(&r2))?;
            return Ok(());
        }
    };
    writeln!(out, "{}", f.display(&value))?;
    Ok(())
}

fn pair_report(p: &BabylonianPair, out: &mut dyn Write) -> Outcome {
    match &p.exact {
        Some((x, y)) => {
            writeln!(out, "x: {x}")?;
            writeln!(out, "y: {y}")?;
        }
        None => {
            writeln!(out, "x: {}", p.x)?;
            writeln!(out, "y: {}", p.y)?;
        }
    }
    writeln!(out, "radicand: {}", p.radicand)?;
    writeln!(out, "exact: {}", yes(p.is_exact()))?;
    Ok(())
}

fn classical(action: ClassicalAction, out: &mut dyn Write) -> Outcome {
    match action {
        ClassicalAction::FalsePosition { coeff, b } => {
            let fp = false_position(&coeff, &b)?;
            writeln!(out, "trial: {}", fp.trial)?;
            writeln!(out, "trial-value: {}", fp.trial_value)?;
            writeln!(out, "ratio: {}", fp.ratio)?;
            writeln!(out, "answer: {}", fp.answer)?;
        }
        ClassicalAction::Babylonian { recipe, a, b } => {
            let p = match recipe {
                Recipe::SumProduct => babylonian_sum_product(&a, &b),
                Recipe::DiffProduct => babylonian_diff_product(&a, &b),
                Recipe::SquaresPlus => babylonian_sum_of_squares(SquaresSign::Plus, &a, &b),
                Recipe::SquaresMinus => babylonian_sum_of_squares(SquaresSign::Minus, &a, &b),
            };
            pair_report(&p, out)?;
        }
        ClassicalAction::Eliminate { file, columns } => {
            let sys = LinearSystem::parse(&read(&file)?)?;
            if columns {
                write!(out, "{}", sys.columns())?;
            }
            let r = eliminate(&sys);
            writeln!(out, "kind: {}", r.kind)?;
            writeln!(out, "rank: {}", r.rank)?;
            if let (EliminationKind::Unique, Some(x)) = (r.kind, &r.solution) {
                for (k, v) in x.iter().enumerate() {
                    writeln!(out, "x{}: {v}", k + 1)?;
                }
            }
        }
    }
    Ok(())
}
