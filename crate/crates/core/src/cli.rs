//! Command-line front end. [`run`] parses `argv`, dispatches to the library
//! and writes to the given streams; it never touches process state, so it
//! is directly testable.
//!
//! Exit codes: 0 on success, 1 on domain errors, 2 on usage and parse
//! errors.

use std::io::Write;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::binomial::{macaulay_expand, upper};
use crate::character::{
    curve_invariants, gamma_from_h, gamma_from_resolution, h_from_gamma, hilbert_polynomial,
    resolution_char, surface_invariants, Character,
};
use crate::codim3::{analyze_codim3, quadric_check};
use crate::enumerate::enumerate_acm_curves;
use crate::error::{Error, Result};
use crate::growth::{decompose, macaulay_violation, MacaulayFn};
use crate::intfun::IntFun;
use crate::lex::lex_oracle;

#[derive(Debug, Parser)]
#[command(
    name = "postulation",
    version,
    about = "Postulation characters and Macaulay functions"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

fn parse_fun(s: &str) -> std::result::Result<IntFun, String> {
    IntFun::parse(s).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Macaulay i-binomial expansion of ALPHA.
    Expand {
        #[arg(allow_negative_numbers = true)]
        alpha: i64,
        #[arg(allow_negative_numbers = true)]
        i: i64,
    },
    /// The growth bound ALPHA^<I>.
    Upper {
        #[arg(allow_negative_numbers = true)]
        alpha: i64,
        #[arg(allow_negative_numbers = true)]
        i: i64,
    },
    /// Check the Macaulay growth conditions on H.
    Growth {
        #[arg(value_parser = parse_fun)]
        h: IntFun,
    },
    /// Decide whether H is the Hilbert function of a lex-segment quotient.
    LexOracle {
        #[arg(value_parser = parse_fun)]
        h: IntFun,
    },
    /// Decompose a Macaulay function of type a >= 2 into type a-1 parts.
    Decompose {
        #[arg(value_parser = parse_fun)]
        h: IntFun,
    },
    /// Integrate a character into its h-vector.
    GammaToH {
        #[arg(value_parser = parse_fun)]
        gamma: IntFun,
    },
    /// Character of an h-vector.
    HToGamma {
        #[arg(value_parser = parse_fun)]
        h: IntFun,
    },
    /// Full report on a codimension 3 ACM character.
    #[command(name = "analyze-codim3")]
    AnalyzeCodim3 {
        #[arg(value_parser = parse_fun)]
        gamma: IntFun,
    },
    /// Quadric split of a codimension 3 character with s0 = 2.
    QuadricCheck {
        #[arg(value_parser = parse_fun)]
        gamma: IntFun,
    },
    /// Numerical invariants of a character.
    Invariants(InvariantsArgs),
    /// Character after an elementary biliaison of height H on Y.
    Biliaison {
        #[arg(value_parser = parse_fun)]
        x: IntFun,
        #[arg(value_parser = parse_fun)]
        y: IntFun,
        #[arg(long, allow_negative_numbers = true)]
        height: i64,
    },
    /// Resolution character d^(c-1) gamma, or its inverse.
    Resolution {
        #[arg(value_parser = parse_fun)]
        f: IntFun,
        #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
        codim: i64,
        /// Treat the input as a resolution character and recover gamma.
        #[arg(long)]
        inverse: bool,
    },
    /// (d, g) pairs of ACM curves in P^4 up to a degree bound.
    Enumerate {
        #[arg(long, allow_negative_numbers = true)]
        max_degree: i64,
        /// Include degenerate characters (a single positive part).
        #[arg(long)]
        degenerate: bool,
        /// Force the table format.
        #[arg(long, conflicts_with = "json")]
        table: bool,
        /// List witness decompositions under each row.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Debug, Args)]
#[command(group = ArgGroup::new("kind").required(true).multiple(false))]
struct InvariantsArgs {
    #[arg(value_parser = parse_fun)]
    gamma: IntFun,
    /// Degree and genus of a curve.
    #[arg(long, group = "kind")]
    curve: bool,
    /// Degree, delta and arithmetic genus of a surface.
    #[arg(long, group = "kind")]
    surface: bool,
    /// Hilbert polynomial of a subscheme of dimension M.
    #[arg(long, value_name = "M", group = "kind", allow_negative_numbers = true)]
    polynomial: Option<i64>,
}

enum Output {
    Text(String),
    Json(Value),
}

fn terms_json(terms: &[(i64, i64)]) -> Value {
    Value::Array(terms.iter().map(|&(m, k)| json!([m, k])).collect())
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn execute(command: Command, json: bool) -> Result<Output> {
    let out = |text: String, value: Value| {
        Ok(if json {
            Output::Json(value)
        } else {
            Output::Text(text)
        })
    };
    match command {
        Command::Expand { alpha, i } => {
            let e = macaulay_expand(alpha, i)?;
            out(
                format!("{alpha} = {e}"),
                json!({ "alpha": alpha, "i": i, "terms": terms_json(e.terms()) }),
            )
        }
        Command::Upper { alpha, i } => {
            let u = upper(alpha, i)?;
            out(u.to_string(), json!(u))
        }
        Command::Growth { h } => {
            let violation = macaulay_violation(&h);
            let text = match &violation {
                None => format!("macaulay: type {}", h.at(1)),
                Some(why) => format!("not macaulay: {why}"),
            };
            out(
                text,
                json!({ "h": h.to_json(), "macaulay": violation.is_none(), "violation": violation }),
            )
        }
        Command::LexOracle { h } => {
            let ok = lex_oracle(&h)?;
            out(ok.to_string(), json!(ok))
        }
        Command::Decompose { h } => {
            let dec = decompose(&MacaulayFn::new(h)?)?;
            let text = lines(
                dec.parts()
                    .iter()
                    .enumerate()
                    .map(|(i, p)| format!("h_{i} = {}", p.function())),
            );
            let parts: Vec<Value> = dec.parts().iter().map(|p| p.function().to_json()).collect();
            out(
                text,
                json!({ "type": dec.type_a(), "r": dec.r(), "parts": parts }),
            )
        }
        Command::GammaToH { gamma } => {
            let h = h_from_gamma(&Character::new(gamma)?)?;
            out(h.to_string(), h.to_json())
        }
        Command::HToGamma { h } => {
            let gamma = gamma_from_h(&h);
            out(gamma.to_string(), gamma.function().to_json())
        }
        Command::AnalyzeCodim3 { gamma } => {
            let r = analyze_codim3(&Character::new(gamma)?)?;
            let value = serde_json::to_value(&r).expect("report serializes");
            let mut text = vec![
                format!("gamma: {}", r.gamma),
                format!("h: {}", r.h),
                format!("s0: {}", r.s0),
                format!("s1: {}", r.s1),
                format!("degenerate: {}", r.degenerate),
                format!(
                    "decomposition: {}",
                    r.decomposition
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" + ")
                ),
            ];
            if let Some(s1) = r.s1_from_last_part {
                text.push(format!("s1 from last part: {s1}"));
            }
            text.push(format!("bounds: {}", r.bounds_hold));
            text.push(format!("integral screen: {}", r.integral_screen));
            if let Some(q) = &r.quadric {
                text.push(format!("quadric: {}", q.valid));
            }
            if let Some(iq) = r.integral_quadric {
                text.push(format!("integral quadric: {iq}"));
            }
            text.push(r.invariants.to_string());
            out(lines(text), value)
        }
        Command::QuadricCheck { gamma } => {
            let q = quadric_check(&Character::new(gamma)?)?;
            let mut text = vec![format!("valid: {}", q.valid), format!("t: {}", q.t)];
            if let Some(s) = q.s {
                text.push(format!("s: {s}"));
            }
            if let (Some(g0), Some(g1)) = (&q.gamma0, &q.gamma1) {
                text.push(format!("gamma0: {g0}"));
                text.push(format!("gamma1: {g1}"));
            }
            out(
                lines(text),
                serde_json::to_value(&q).expect("report serializes"),
            )
        }
        Command::Invariants(args) => {
            let gamma = Character::new(args.gamma)?;
            if args.surface {
                let s = surface_invariants(&gamma)?;
                out(
                    s.to_string(),
                    serde_json::to_value(s).expect("invariants serialize"),
                )
            } else if let Some(dim) = args.polynomial {
                let p = hilbert_polynomial(&gamma, dim)?;
                let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
                out(p.to_string(), json!({ "coeffs": coeffs }))
            } else {
                let c = curve_invariants(&gamma)?;
                out(
                    c.to_string(),
                    serde_json::to_value(c).expect("invariants serialize"),
                )
            }
        }
        Command::Biliaison { x, y, height } => {
            let g = crate::character::biliaison(&Character::new(x)?, &Character::new(y)?, height);
            out(g.to_string(), g.function().to_json())
        }
        Command::Resolution { f, codim, inverse } => {
            let result = if inverse {
                gamma_from_resolution(&f, codim)?.into_function()
            } else {
                resolution_char(&Character::new(f)?, codim)?
            };
            out(result.to_string(), result.to_json())
        }
        Command::Enumerate {
            max_degree,
            degenerate,
            table: _,
            verbose,
        } => {
            let table = enumerate_acm_curves(max_degree, !degenerate)?;
            out(
                table.to_table(verbose).trim_end().to_string(),
                table.to_json(),
            )
        }
    }
}

/// Runs the tool on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, cli.json) {
        Ok(Output::Text(text)) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Ok(Output::Json(value)) => {
            let _ = writeln!(out, "{value}");
            0
        }
        Err(e @ Error::Parse(_)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("postulation").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn expand_and_upper() {
        assert_eq!(
            call(&["expand", "25", "3"]).1.trim(),
            "25 = C(6,3) + C(3,2) + C(2,1)"
        );
        assert_eq!(call(&["upper", "25", "3"]).1.trim(), "42");
        assert_eq!(call(&["upper", "-3", "2"]).0, 1);
    }

    #[test]
    fn curve_invariants_text() {
        assert_eq!(
            call(&["invariants", "--curve", "(-1,-2,-1,4)"]).1.trim(),
            "d=8 g=4"
        );
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["growth", "(1,2"]).0, 2);
        assert_eq!(call(&["invariants", "(-1,1)"]).0, 2);
        assert_eq!(call(&["invariants", "--curve", "--surface", "(-1,1)"]).0, 2);
    }

    #[test]
    fn domain_errors_exit_1() {
        let (code, _, err) = call(&["gamma-to-h", "(-1,2)"]);
        assert_eq!(code, 1);
        assert!(err.contains("non-character"));
    }
}
