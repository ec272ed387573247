use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use twistkit::contraction::{contract_group_table, contract_presentation, contract_twist, reduce_rotations, ContractionSpec};
use twistkit::element::{Element, TensorElement};
use twistkit::error::TwistError;
use twistkit::generator::{Family, Gen};
use twistkit::hopf::HopfPresentation;
use twistkit::parser::{parse_element, parse_expression, Parsed};
use twistkit::poisson::{filter_table, quantize_bracket_table, reduce_orthogonality, CommutatorTable};
use twistkit::presentation::Presentation;
use twistkit::registry::{r_matrix, twist_base, Registry, R_MATRICES};
use twistkit::render::{render_element, render_tensor, structured_element, structured_tensor};
use twistkit::report::{structured_reports, text_reports, Report};
use twistkit::rmatrix::{check_cybe, check_mybe, mybe_rhs, LieAlgebra};
use twistkit::scalar::{Param, TruncationPolicy};
use twistkit::star::{build_star_operator, star_commutator, star_multiply, CoordPolynomial, StarKind};
use twistkit::suite::{run_verify_suite, SuiteConfig};
use twistkit::twist::{check_cocycle, compute_u, twisted_hopf};

const CLI_SCHEMA: &str = "twistkit.cli/1";

#[derive(Parser)]
#[command(name = "twistkit", version, about = "Exact checks of twisted κ-Poincaré and κ-Galilei Hopf structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Truncation order, e.g. `kinv=2`; `PARAM=none` removes the bound.
    #[arg(long = "order", value_name = "PARAM=N", global = true)]
    orders: Vec<String>,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: OutputFormat,
    /// Write output to a file instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Classical and modified Yang–Baxter checks for registered r-matrices.
    CheckYbe {
        /// r-matrices to check; all when omitted.
        #[arg(value_name = "R")]
        r: Vec<String>,
    },
    /// Twisted coproducts and antipodes, with the cocycle check.
    Twist {
        #[arg(long, default_value = "F-xi-kappa")]
        twist: String,
        /// Expression to twist; every generator when omitted.
        #[arg(long)]
        element: Option<String>,
    },
    /// Star products and coordinate commutators.
    Star {
        /// kappa, xi, hat, kappa-xi or kappa-hat.
        #[arg(long, default_value = "kappa")]
        kind: String,
        #[arg(long, default_value_t = 2)]
        gamma_order: u8,
        /// Use the printed second-order γ coefficient.
        #[arg(long)]
        printed_gamma: bool,
        /// Two coordinate polynomials to multiply; the commutator table when omitted.
        #[arg(value_name = "EXPR", num_args = 0..=2)]
        exprs: Vec<String>,
    },
    /// Quantized Poisson–Lie brackets of the group coordinates.
    Poisson {
        #[arg(long, default_value = "r-total")]
        r: String,
        /// Keep only terms of one sector: kappa, xi or hat.
        #[arg(long)]
        sector: Option<String>,
    },
    /// Galilean contraction of an algebra, a twist, or the deformed group.
    Contract {
        #[arg(long, default_value = "kappa-poincare-xi")]
        algebra: String,
        /// Contract this twist's exponent instead.
        #[arg(long)]
        twist: Option<String>,
        /// Contract the quantized group relations.
        #[arg(long)]
        group: bool,
    },
    /// Run every check; exit 1 if any fails.
    VerifySuite {
        /// Restrict to check groups (ybe, cocycle, twist, star, poisson, contraction, hopf).
        #[arg(long = "only", value_name = "GROUP")]
        only: Vec<String>,
    },
    /// Parse an expression and print its normal form.
    Parse {
        expr: String,
        /// Registered algebra, `coordinates`, or `group`.
        #[arg(long, default_value = "kappa-poincare")]
        algebra: String,
    },
}

/// Error carrying its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<TwistError> for Failure {
    fn from(e: TwistError) -> Self {
        let usage = matches!(
            e,
            TwistError::Syntax { .. }
                | TwistError::UnknownGenerator(..)
                | TwistError::UnknownParameter(_)
                | TwistError::IndexOutOfRange(_)
                | TwistError::ZeroGenerator(_)
                | TwistError::Registry(_)
        );
        Failure { code: if usage { 2 } else { 1 }, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

#[derive(Default)]
struct Output {
    entries: Vec<(String, TensorElement)>,
    reports: Vec<Report>,
}

impl Output {
    fn push(&mut self, label: impl Into<String>, e: Element) {
        self.entries.push((label.into(), TensorElement::from_element(e)));
    }

    fn push_tensor(&mut self, label: impl Into<String>, t: TensorElement) {
        self.entries.push((label.into(), t));
    }

    fn text(&self) -> String {
        let mut s = String::new();
        for (label, t) in &self.entries {
            let v = if t.rank() == 1 { render_element(&t.to_element()) } else { render_tensor(t) };
            s.push_str(&format!("{} = {}\n", label, v));
        }
        if !self.reports.is_empty() {
            s.push_str(&text_reports(&self.reports));
        }
        s
    }

    fn structured(&self, command: &str, policy: &TruncationPolicy) -> String {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(label, t)| {
                let v = if t.rank() == 1 { structured_element(&t.to_element()) } else { structured_tensor(t) };
                json!({ "label": label, "value": v })
            })
            .collect();
        let mut doc = json!({
            "schema": CLI_SCHEMA,
            "command": command,
            "orders": policy.describe(),
            "entries": entries,
        });
        if !self.reports.is_empty() {
            doc["report"] = structured_reports(&self.reports);
        }
        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
    }
}

fn parse_policy(orders: &[String]) -> Result<TruncationPolicy, Failure> {
    let mut policy = TruncationPolicy::default();
    for o in orders {
        let (name, value) = o.split_once('=').ok_or_else(|| usage(format!("--order expects PARAM=N, got `{}`", o)))?;
        let p = Param::from_name(name.trim()).ok_or_else(|| usage(format!("unknown parameter `{}`", name)))?;
        let v = match value.trim() {
            "none" => None,
            n => Some(n.parse::<i8>().map_err(|_| usage(format!("bad order `{}` for {}", n, name)))?),
        };
        policy.set(p, v);
    }
    Ok(policy)
}

fn coordinates(policy: &TruncationPolicy) -> Result<Presentation, Failure> {
    Ok(Presentation::new("coordinates", (0..4).map(|m| Gen::new(Family::X, &[m])), vec![], policy.clone())?)
}

fn table_entries(out: &mut Output, t: &CommutatorTable) {
    for ((x, y), v) in t {
        out.push(format!("[{}, {}]", x, y), v.clone());
    }
}

fn hopf_entries(out: &mut Output, h: &HopfPresentation) {
    let gens = h.generators();
    for (n, x) in gens.iter().enumerate() {
        for y in &gens[n + 1..] {
            let b = h.algebra().bracket(*x, *y);
            if !b.is_zero() {
                out.push(format!("[{}, {}]", x, y), b);
            }
        }
    }
    for g in &gens {
        out.push_tensor(format!("Δ({})", g), h.coproduct_table()[g].clone());
        out.push(format!("S({})", g), h.antipode_table()[g].clone());
    }
}

fn sector_param(s: &str) -> Result<Param, Failure> {
    match s {
        "kappa" => Ok(Param::Kinv),
        "xi" => Ok(Param::Xi),
        "hat" => Ok(Param::Khinv),
        _ => Err(usage(format!("unknown sector `{}` (kappa, xi, hat)", s))),
    }
}

fn run(cli: &Cli, policy: &TruncationPolicy) -> Result<Output, Failure> {
    let mut out = Output::default();
    match &cli.command {
        Command::CheckYbe { r } => {
            let names: Vec<String> = if r.is_empty() { R_MATRICES.iter().map(|s| s.to_string()).collect() } else { r.clone() };
            let g = LieAlgebra::poincare();
            for name in names {
                let rm = r_matrix(&name)?;
                let id = format!("ybe.{}", name);
                // r_κ and anything containing it satisfy the modified equation.
                out.reports.push(match name.as_str() {
                    "r-kappa" | "r-total" => check_mybe(&id, &rm, &mybe_rhs(), &g)?,
                    _ => check_cybe(&id, &rm, &g)?,
                });
            }
        }
        Command::Twist { twist, element } => {
            let registry = Registry::new(policy.clone())?;
            let base = registry.algebra(twist_base(twist)?)?;
            let f = registry.twist(twist)?;
            let h = twisted_hopf(base, f, twist)?;
            let c = check_cocycle(base, f)?;
            out.reports.push(Report::from_residual(format!("{}.cocycle", twist), &c.cocycle));
            out.reports.push(Report::from_residual(format!("{}.left-normalization", twist), &c.left_normalization));
            out.reports.push(Report::from_residual(format!("{}.right-normalization", twist), &c.right_normalization));
            out.push("u", compute_u(base, f)?);
            match element {
                Some(text) => {
                    let e = parse_element(text, base.algebra())?;
                    out.push_tensor(format!("Δ({})", text), h.coproduct(&e)?);
                    out.push(format!("S({})", text), h.antipode(&e)?);
                }
                None => {
                    for g in h.generators() {
                        out.push_tensor(format!("Δ({})", g), h.coproduct_table()[&g].clone());
                        out.push(format!("S({})", g), h.antipode_table()[&g].clone());
                    }
                }
            }
        }
        Command::Star { kind, gamma_order, printed_gamma, exprs } => {
            let k = StarKind::from_name(kind).ok_or_else(|| usage(format!("unknown star product `{}`", kind)))?;
            let mut op = build_star_operator(k, *gamma_order).map_err(|e| usage(e.to_string()))?;
            if *printed_gamma {
                op = op.with_printed_second_order();
            }
            match exprs.len() {
                0 => {
                    let x = CoordPolynomial::coord;
                    for i in 1..4u8 {
                        out.push(format!("[x[{}], x[0]]", i), star_commutator(&x(i), &x(0), &op)?.to_element());
                        for j in i + 1..4 {
                            out.push(format!("[x[{}], x[{}]]", i, j), star_commutator(&x(i), &x(j), &op)?.to_element());
                        }
                    }
                }
                2 => {
                    let coords = coordinates(policy)?;
                    let f = CoordPolynomial::from_element(&parse_element(&exprs[0], &coords)?)?;
                    let g = CoordPolynomial::from_element(&parse_element(&exprs[1], &coords)?)?;
                    out.push(format!("({}) * ({})", exprs[0], exprs[1]), star_multiply(&f, &g, &op)?.to_element());
                    out.push(format!("[{}, {}]", exprs[0], exprs[1]), star_commutator(&f, &g, &op)?.to_element());
                }
                _ => return Err(usage("star takes zero or two expressions")),
            }
        }
        Command::Poisson { r, sector } => {
            let table = quantize_bracket_table(&r_matrix(r)?)?;
            let mut reduced: CommutatorTable = table
                .iter()
                .map(|(k, v)| (*k, reduce_orthogonality(v)))
                .filter(|(_, v)| !v.is_zero())
                .collect();
            if let Some(s) = sector {
                let p = sector_param(s)?;
                reduced = filter_table(&reduced, |m| m.exp(p) != 0);
            }
            table_entries(&mut out, &reduced);
        }
        Command::Contract { algebra, twist, group } => {
            if *group {
                let spec = ContractionSpec::galilei_group()?;
                let t = contract_group_table(&quantize_bracket_table(&r_matrix("r-total")?)?, &spec)?;
                let t: CommutatorTable =
                    t.iter().map(|(k, v)| (*k, reduce_rotations(v))).filter(|(_, v)| !v.is_zero()).collect();
                table_entries(&mut out, &t);
            } else {
                let registry = Registry::new(policy.clone())?;
                let spec = registry.contraction(algebra)?;
                let h = contract_presentation(registry.algebra(algebra)?, &spec, spec.target().name())?;
                match twist {
                    Some(name) => {
                        let f = contract_twist(registry.twist(name)?, &spec, &h, name)?;
                        out.push_tensor(format!("log {}", name), f.exponent().clone());
                    }
                    None => hopf_entries(&mut out, &h),
                }
            }
        }
        Command::VerifySuite { only } => {
            let config = SuiteConfig { policy: policy.clone(), groups: only.clone() };
            out.reports = run_verify_suite(&config)?;
        }
        Command::Parse { expr, algebra } => {
            let registry;
            let coords;
            let p: &Presentation = match algebra.as_str() {
                "coordinates" => {
                    coords = coordinates(policy)?;
                    &coords
                }
                "group" => twistkit::poisson::group_algebra(),
                name => {
                    registry = Registry::new(policy.clone())?;
                    registry.algebra(name)?.algebra()
                }
            };
            match parse_expression(expr, p)? {
                Parsed::Element(e) => out.push(expr.clone(), e),
                Parsed::Tensor(t) => out.push_tensor(expr.clone(), t),
            }
        }
    }
    Ok(out)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::CheckYbe { .. } => "check-ybe",
        Command::Twist { .. } => "twist",
        Command::Star { .. } => "star",
        Command::Poisson { .. } => "poisson",
        Command::Contract { .. } => "contract",
        Command::VerifySuite { .. } => "verify-suite",
        Command::Parse { .. } => "parse",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = parse_policy(&cli.orders).and_then(|policy| {
        let out = run(&cli, &policy)?;
        let text = match cli.format {
            OutputFormat::Text => out.text(),
            OutputFormat::Structured => out.structured(command_name(&cli.command), &policy),
        };
        match &cli.out {
            Some(path) => std::fs::write(path, text).map_err(|e| Failure { code: 1, msg: format!("{}: {}", path.display(), e) })?,
            None => print!("{}", text),
        }
        Ok(if out.reports.iter().all(Report::passed) { 0 } else { 1 })
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

