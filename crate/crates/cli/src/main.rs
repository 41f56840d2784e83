//! `pieri`: expand skew Pieri products, trace slides, and run the
//! verification sweeps.
//!
//! Exit status is 0 on success, 1 when a verification finds a failure, and 2
//! on a usage or parse error.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pieri_core::involution::{downward_slide_traced, phi_traced, upward_slide_traced, SlideContext, SlideTrace, Step};
use pieri_core::json::{self, Expansion};
use pieri_core::rules::{skew_lr_pairs, skew_lr_product, skew_pieri};
use pieri_core::symfunc::{e, h, schur_product, skew_to_schur};
use pieri_core::verify::{
    verify_appendix, verify_h_rho, verify_involution, verify_skew_lr, verify_skew_pieri_with, Report,
    SkewPieriLimits,
};
use pieri_core::{SkewShape, Tableau};

#[derive(Parser, Debug)]
#[command(name = "pieri", version, about = "Skew Pieri expansions and verification sweeps")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand s_shape * h_n (or e_n with --dual).
    Expand {
        #[arg(value_parser = parse_shape)]
        shape: SkewShape,
        #[arg(long = "h", value_name = "N")]
        n: usize,
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum, default_value_t = ExpandRule::SkewPieri)]
        rule: ExpandRule,
    },
    /// Expand s_a * s_b.
    Product {
        #[arg(value_parser = parse_shape)]
        a: SkewShape,
        #[arg(value_parser = parse_shape)]
        b: SkewShape,
        #[arg(long, value_enum, default_value_t = ProductRule::SkewLr)]
        rule: ProductRule,
        /// List every contributing pair (skew-lr only).
        #[arg(long)]
        verbose: bool,
    },
    /// Run an exhaustive verification sweep.
    Verify(VerifyArgs),
    /// Print the step log of a slide.
    Trace {
        #[command(subcommand)]
        what: TraceCommand,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ExpandRule {
    SkewPieri,
    Schur,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ProductRule {
    SkewLr,
    Schur,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Harness {
    SkewPieri,
    Involution,
    Appendix,
    SkewLr,
    HRho,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    harness: Harness,
    /// Largest |outer| of the base shape (first factor for skew-lr).
    #[arg(long, default_value_t = 5)]
    max_outer: usize,
    /// Largest n; for h-rho the largest |rho|.
    #[arg(long, default_value_t = 2)]
    max_n: usize,
    /// Largest tableau entry in involution sweeps.
    #[arg(long, default_value_t = 3)]
    max_entry: u32,
    /// Largest |alpha|, |beta| for the appendix sweep.
    #[arg(long, default_value_t = 4)]
    max_deg: usize,
    /// Largest |outer| of the second factor for skew-lr.
    #[arg(long, default_value_t = 4)]
    max_outer_b: usize,
    /// Limits for the monomial comparison in skew-pieri; default to the
    /// main limits.
    #[arg(long)]
    monomial_max_outer: Option<usize>,
    #[arg(long)]
    monomial_max_n: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum TraceCommand {
    Slide {
        #[arg(value_parser = parse_shape)]
        base: SkewShape,
        #[arg(value_parser = parse_tableau)]
        tableau: Tableau,
        #[arg(long, value_enum, default_value_t = SlideChoice::Phi)]
        op: SlideChoice,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SlideChoice {
    #[value(name = "D")]
    D,
    #[value(name = "U")]
    U,
    #[value(name = "phi")]
    Phi,
}

fn parse_shape(s: &str) -> Result<SkewShape, String> {
    s.parse().map_err(|e: pieri_core::Error| e.to_string())
}

fn parse_tableau(s: &str) -> Result<Tableau, String> {
    s.parse().map_err(|e: pieri_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((text, code)) => {
            let mut out = io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            let _ = out.flush();
            ExitCode::from(code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, u8), pieri_core::Error> {
    let json_out = cli.format == Format::Json;
    match &cli.command {
        Command::Expand { shape, n, dual, rule } => {
            let e = match rule {
                ExpandRule::SkewPieri => Expansion::Skew(skew_pieri(shape, *n, *dual)),
                ExpandRule::Schur => {
                    let factor = if *dual { e(*n) } else { h(*n) };
                    Expansion::Schur(schur_product(&skew_to_schur(shape), &factor))
                }
            };
            Ok((render_expansion(&e, json_out), 0))
        }
        Command::Product { a, b, rule, verbose } => {
            let e = match rule {
                ProductRule::SkewLr => Expansion::Skew(skew_lr_product(a, b)),
                ProductRule::Schur => Expansion::Schur(schur_product(&skew_to_schur(a), &skew_to_schur(b))),
            };
            if *verbose && *rule == ProductRule::SkewLr {
                return Ok((render_pairs(a, b, &e, json_out), 0));
            }
            Ok((render_expansion(&e, json_out), 0))
        }
        Command::Verify(args) => {
            let report = run_harness(args);
            let code = if report.passed() { 0 } else { 1 };
            let text = if json_out {
                format!("{}\n", serde_json::to_string_pretty(&report).expect("reports serialize"))
            } else {
                report.to_string()
            };
            Ok((text, code))
        }
        Command::Trace {
            what: TraceCommand::Slide { base, tableau, op },
        } => {
            let ctx = SlideContext::new(base.clone(), tableau.clone())?;
            let trace = match op {
                SlideChoice::D => downward_slide_traced(&ctx),
                SlideChoice::U => upward_slide_traced(&ctx)?,
                SlideChoice::Phi => phi_traced(&ctx),
            };
            let text = if json_out {
                format!("{}\n", serde_json::to_string_pretty(&trace_value(&trace)).expect("values serialize"))
            } else {
                trace.to_string()
            };
            Ok((text, 0))
        }
    }
}

fn render_expansion(e: &Expansion, json_out: bool) -> String {
    if json_out {
        return format!("{}\n", json::to_string(e));
    }
    match e {
        Expansion::Schur(f) => f.to_string(),
        Expansion::Skew(f) => f.to_string(),
    }
}

fn render_pairs(a: &SkewShape, b: &SkewShape, e: &Expansion, json_out: bool) -> String {
    let pairs = skew_lr_pairs(a, b);
    if json_out {
        let list: Vec<Value> = pairs
            .iter()
            .map(|p| {
                json!({
                    "minus": p.minus.to_string(),
                    "plus": p.plus.to_string(),
                    "shape": p.shape.to_string(),
                    "sign": p.sign,
                })
            })
            .collect();
        let v = json!({"pairs": list, "expansion": json::to_value(e)});
        return format!("{}\n", serde_json::to_string_pretty(&v).expect("values serialize"));
    }
    let mut out = String::new();
    for p in &pairs {
        let sign = if p.sign < 0 { '-' } else { '+' };
        out.push_str(&format!("{sign} s[{}] from minus {} plus {}\n", p.shape, p.minus, p.plus));
    }
    out.push_str("total\n");
    out.push_str(&render_expansion(e, false));
    out
}

fn run_harness(args: &VerifyArgs) -> Report {
    match args.harness {
        Harness::SkewPieri => verify_skew_pieri_with(SkewPieriLimits {
            max_outer: args.max_outer,
            max_n: args.max_n,
            monomial_max_outer: args.monomial_max_outer.unwrap_or(args.max_outer),
            monomial_max_n: args.monomial_max_n.unwrap_or(args.max_n),
            max_entry: args.max_entry,
        }),
        Harness::Involution => verify_involution(args.max_outer, args.max_n, args.max_entry),
        Harness::Appendix => verify_appendix(args.max_deg, args.max_n),
        Harness::SkewLr => verify_skew_lr(args.max_outer, args.max_outer_b),
        Harness::HRho => verify_h_rho(args.max_outer, args.max_n),
    }
}

fn trace_value(t: &SlideTrace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| {
            let (kind, arg) = match &s.step {
                Step::Reverse(c) => ("reverse", c.to_string()),
                Step::Internal(r) => ("internal", r.to_string()),
                Step::External(k) => ("external", k.to_string()),
            };
            let path: Vec<[usize; 2]> = s.record.path.iter().map(|c| [c.row, c.col]).collect();
            json!({
                "step": kind,
                "arg": arg,
                "path": path,
                "final_entry": s.record.final_entry,
                "landing_row": s.record.landing_row,
                "result": s.result.to_string(),
            })
        })
        .collect();
    json!({
        "op": t.op.to_string(),
        "input": t.input.tableau().to_string(),
        "base": t.input.base().to_string(),
        "steps": steps,
        "m": t.m,
        "m_prime": t.m_prime,
        "result": t.output.tableau().to_string(),
    })
}
