//! Command-line interface of the `rstk` binary.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::asep::{build_generator, cross_validate, sample_trajectory, stationary_exact, AsepParams};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Scalar};
use crate::hecke::{verify_cherednik_commute, verify_hecke_relations, verify_operator_lemmas};
use crate::koornwinder::{
    asep_poly_f, koornwinder_k, koornwinder_k_via_ek, koornwinder_q1, q1_product, verify_eigen, verify_qkz,
    verify_qkz_numeric,
};
use crate::report::Report;
use crate::suite::verify_all;
use crate::tableaux::{count_tableaux, enumerate_tableaux, gen_r, gen_rtilde, partition_z, partition_ztilde, Word};

#[derive(Parser, Debug)]
#[command(name = "rstk", version, about = "Rhombic staircase tableaux, ASEP polynomials and Koornwinder polynomials")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Rhombic staircase tableaux.
    Rst {
        #[command(subcommand)]
        cmd: RstCmd,
    },
    /// Generating polynomials and partition functions.
    Poly {
        #[command(subcommand)]
        cmd: PolyCmd,
    },
    /// ASEP polynomials and Koornwinder polynomials.
    Koorn {
        #[command(subcommand)]
        cmd: KoornCmd,
    },
    /// Relations of the Noumi operators.
    Hecke {
        #[command(subcommand)]
        cmd: HeckeCmd,
    },
    /// The two-species ASEP chain.
    Asep {
        #[command(subcommand)]
        cmd: AsepCmd,
    },
    /// Run every verification suite.
    VerifyAll {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum RstCmd {
    /// Number of tableaux of a type.
    Count {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// All tableaux of a type with their weights.
    List {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
}

#[derive(Subcommand, Debug)]
enum PolyCmd {
    /// R(mu), the sum of tableau weights.
    #[command(name = "R", alias = "r")]
    R {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// R(mu) with the normalizing prefactor.
    #[command(name = "Rtilde", alias = "rtilde")]
    Rtilde {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Z_{N,r}.
    #[command(name = "Z", alias = "z")]
    Z {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Z_{N,r} with the normalizing prefactor.
    #[command(name = "Ztilde", alias = "ztilde")]
    Ztilde {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Subcommand, Debug)]
enum KoornCmd {
    /// The ASEP polynomial F_mu.
    #[command(name = "F", alias = "f")]
    F {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// The symmetric polynomial K_lambda for lambda = (1^{N-r}, 0^r).
    #[command(name = "K", alias = "k")]
    K {
        #[arg(long)]
        lambda: Option<String>,
        /// `orbit` sums F over the orbit; `ek` uses the elementary symmetric expansion.
        #[arg(long, default_value = "orbit")]
        via: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// K_lambda at q = 1 for an arbitrary partition, e.g. --lambda 2,1.
    Q1 {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Check qKZ relations or eigenvalue equations.
    Verify {
        #[command(subcommand)]
        cmd: KoornVerifyCmd,
    },
}

#[derive(Subcommand, Debug)]
enum KoornVerifyCmd {
    /// Every exchange relation on the orbit of lambda.
    Qkz {
        #[arg(long)]
        lambda: String,
        /// Check at this many random rational points instead of symbolically.
        #[arg(long)]
        points: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Y_i F_delta = y_i F_delta for an antidominant delta.
    Eigen {
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
    },
}

#[derive(Subcommand, Debug)]
enum HeckeCmd {
    /// Quadratic, braid and commuting relations, operator lemmas and
    /// commutativity of the Y_i.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        degree_bound: i32,
    },
}

#[derive(Subcommand, Debug)]
enum AsepCmd {
    /// Exact stationary distribution of a sector.
    Stationary {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Comma-separated `key=value` list with keys alpha, beta, gamma, delta, t.
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Compare the exact distribution with the tableaux formula.
    Validate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Empirical visit frequencies of a simulated trajectory.
    Simulate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = 1_000_000)]
        steps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// What a command produced.
enum Output {
    Text(String),
    Json(serde_json::Value),
    /// A verification result; failures set exit code 1.
    Checked { text: String, json: serde_json::Value, passed: bool },
}

fn parse_word(s: &str) -> Result<Word> {
    s.parse()
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::NotAPartition(s.to_string());
    if s.contains([',', ' ']) {
        s.split([',', ' '])
            .filter(|x| !x.is_empty())
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect()
    }
}

fn scalar_out(json: bool, s: &Scalar) -> Output {
    if json {
        Output::Json(s.to_json())
    } else {
        Output::Text(s.to_string())
    }
}

fn laurent_out(json: bool, f: &LaurentPoly) -> Output {
    if json {
        Output::Json(f.to_json())
    } else {
        Output::Text(f.to_string())
    }
}

fn report_out(report: Report) -> Output {
    let passed = report.all_passed();
    let summary = format!("{} of {} checks passed", report.passed(), report.entries.len());
    Output::Checked {
        text: format!("{report}{summary}"),
        json: json!({"passed": passed, "entries": report.to_json()}),
        passed,
    }
}

fn execute(cli: Cli) -> Result<Output> {
    let json = cli.json;
    Ok(match cli.cmd {
        Cmd::Rst { cmd } => match cmd {
            RstCmd::Count { mu } => {
                let w = parse_word(&mu)?;
                let n = count_tableaux(&w);
                if json {
                    Output::Json(json!({"word": w.to_letters(), "count": n}))
                } else {
                    Output::Text(n.to_string())
                }
            }
            RstCmd::List { mu } => {
                let ts = enumerate_tableaux(&parse_word(&mu)?);
                if json {
                    Output::Json(serde_json::Value::Array(ts.iter().map(|t| t.to_json()).collect()))
                } else {
                    let parts: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
                    Output::Text(parts.join("\n"))
                }
            }
        },
        Cmd::Poly { cmd } => match cmd {
            PolyCmd::R { mu } => scalar_out(json, &gen_r(&parse_word(&mu)?)),
            PolyCmd::Rtilde { mu } => scalar_out(json, &gen_rtilde(&parse_word(&mu)?)),
            PolyCmd::Z { n, r } => scalar_out(json, &partition_z(n, r)?),
            PolyCmd::Ztilde { n, r } => scalar_out(json, &partition_ztilde(n, r)?),
        },
        Cmd::Koorn { cmd } => match cmd {
            KoornCmd::F { mu } => laurent_out(json, &asep_poly_f(&parse_word(&mu)?)),
            KoornCmd::K { lambda, via, n, r } => {
                let k = match (via.as_str(), lambda, n, r) {
                    ("orbit", Some(l), None, None) => koornwinder_k(&parse_word(&l)?)?,
                    ("ek", None, Some(n), Some(r)) => koornwinder_k_via_ek(n, r)?,
                    ("ek", Some(l), None, None) => {
                        let l = parse_word(&l)?;
                        crate::koornwinder::orbit_of(&l)?;
                        koornwinder_k_via_ek(l.len(), l.zeros())?
                    }
                    _ => {
                        return Err(Error::Parse(
                            "use --lambda, or --via ek with --n and --r (or --lambda)".into(),
                        ))
                    }
                };
                laurent_out(json, &k)
            }
            KoornCmd::Q1 { lambda, n } => {
                let parts = parse_parts(&lambda)?;
                let sum = koornwinder_q1(&parts, n)?;
                if sum != q1_product(&parts, n)? {
                    let mut report = Report::new();
                    report.push(format!("q=1 expansion lambda={parts:?} N={n} equals the product formula"), false, "");
                    return Ok(report_out(report));
                }
                laurent_out(json, &sum)
            }
            KoornCmd::Verify { cmd } => match cmd {
                KoornVerifyCmd::Qkz { lambda, points, seed } => {
                    let l = parse_word(&lambda)?;
                    report_out(match points {
                        Some(k) => verify_qkz_numeric(&l, k, seed)?,
                        None => verify_qkz(&l)?,
                    })
                }
                KoornVerifyCmd::Eigen { delta } => report_out(verify_eigen(&parse_word(&delta)?)?),
            },
        },
        Cmd::Hecke { cmd: HeckeCmd::Verify { n, trials, seed, degree_bound } } => {
            if n < 2 {
                return Err(Error::Parse("hecke verify needs --n at least 2".into()));
            }
            let mut report = verify_hecke_relations(n, trials, degree_bound, seed);
            report.extend(verify_operator_lemmas(n));
            report.extend(verify_cherednik_commute(n, trials.min(3), degree_bound.min(1), seed));
            report_out(report)
        }
        Cmd::Asep { cmd } => match cmd {
            AsepCmd::Stationary { n, r, params } => {
                let p = AsepParams::parse(&params)?;
                for w in p.validate()? {
                    eprintln!("warning: {w}");
                }
                let pi = stationary_exact(&build_generator(n, r, &p)?)?;
                if json {
                    Output::Json(pi.to_json())
                } else {
                    let lines: Vec<String> =
                        pi.probs.iter().map(|(w, v)| format!("{} {v}", crate::asep::spaced(w))).collect();
                    Output::Text(lines.join("\n"))
                }
            }
            AsepCmd::Validate { n, r, trials, seed } => report_out(cross_validate(n, r, trials, seed)?),
            AsepCmd::Simulate { n, r, params, steps, seed } => {
                let p = AsepParams::parse(&params)?;
                for w in p.validate()? {
                    eprintln!("warning: {w}");
                }
                let sector = build_generator(n, r, &p)?;
                let exact = stationary_exact(&sector)?;
                let freq = sample_trajectory(&sector, steps.max(1), seed);
                if json {
                    let map: serde_json::Map<String, serde_json::Value> = freq
                        .iter()
                        .map(|(w, f)| {
                            let v = json!({"empirical": f, "exact": exact.probs[w].to_string()});
                            (crate::asep::spaced(w), v)
                        })
                        .collect();
                    Output::Json(serde_json::Value::Object(map))
                } else {
                    let lines: Vec<String> = freq
                        .iter()
                        .map(|(w, f)| format!("{} {f:.6} (exact {})", crate::asep::spaced(w), exact.probs[w]))
                        .collect();
                    Output::Text(lines.join("\n"))
                }
            }
        },
        Cmd::VerifyAll { max_n, seed } => {
            let suites = verify_all(max_n, seed);
            let passed = suites.iter().all(|s| s.informational || s.report.all_passed());
            let mut text = String::new();
            for s in &suites {
                let tag = if s.informational { " (informational)" } else { "" };
                let mut body = s.report.to_string();
                if s.informational {
                    body = body.replace("FAIL ", "DIFF ");
                }
                text.push_str(&format!("== {}{tag} ==\n{body}", s.name));
            }
            text.push_str("== summary ==\n");
            for s in &suites {
                let state = if s.report.all_passed() {
                    "ok"
                } else if s.informational {
                    "differs"
                } else {
                    "FAILED"
                };
                text.push_str(&format!(
                    "{}: {} of {} passed, {state}\n",
                    s.name,
                    s.report.passed(),
                    s.report.entries.len()
                ));
            }
            let js: Vec<serde_json::Value> = suites
                .iter()
                .map(|s| {
                    json!({
                        "name": s.name,
                        "informational": s.informational,
                        "passed": s.report.all_passed(),
                        "entries": s.report.to_json(),
                    })
                })
                .collect();
            Output::Checked { text: text.trim_end().to_string(), json: json!({"passed": passed, "suites": js}), passed }
        }
    })
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code: 0 on success, 1 when a verification fails, 2 on usage or input
/// errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let json = cli.json;
    match execute(cli) {
        Ok(Output::Text(s)) => {
            let _ = writeln!(out, "{s}");
            0
        }
        Ok(Output::Json(v)) => {
            let _ = writeln!(out, "{v}");
            0
        }
        Ok(Output::Checked { text, json: v, passed }) => {
            if json {
                let _ = writeln!(out, "{v}");
            } else {
                let _ = writeln!(out, "{text}");
            }
            if passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
