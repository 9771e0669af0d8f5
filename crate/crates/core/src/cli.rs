//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for usage errors, 2 for domain or resource
//! errors. Output is UTF-8 with LF line endings, written to stdout or to
//! `--out`.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arith::ratio_string;
use crate::avoidance::{self, AvoidanceSpec};
use crate::census::{
    self, format_fixed, long_cycle_proportion, structure_bound, Event, Group, Method,
};
use crate::cycle_type::CycleType;
use crate::error::{Error, Result};
use crate::hp;
use crate::perm::Permutation;
use crate::prime::{self, PrimeSieve};
use crate::rng::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(
    name = "permcensus",
    version,
    about = "Cycle statistics of the symmetric group"
)]
pub struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Significant (or fixed) digits for decimal output.
    #[arg(long, global = true, default_value_t = 12)]
    digits: usize,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; does not change results.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    #[value(alias = "exact-partition")]
    Exact,
    #[value(alias = "brute-force")]
    Brute,
    #[value(alias = "monte-carlo")]
    Mc,
}

#[derive(Debug, Args)]
struct Sampling {
    /// Monte Carlo sample count.
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    /// Master seed for random streams.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact proportions p_0..p_n of permutations avoiding cycle lengths in a set.
    Avoid {
        #[arg(long)]
        n: usize,
        /// Lengths to avoid: "1-4,7", "primes", "odd", "even".
        #[arg(long, default_value = "")]
        set: String,
        /// Floating-point recurrence (approximate), for n beyond the exact cap.
        #[arg(long)]
        approx: bool,
        /// Exact-mode degree cap.
        #[arg(long, default_value_t = avoidance::DEFAULT_EXACT_CAP)]
        cap: usize,
    },
    /// Upper bounds on the avoidance proportion.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Power of a permutation that is a prime-length cycle, if any.
    Witness {
        /// Cycle type as lengths, e.g. "3,2" or "5,2^3".
        #[arg(long, conflicts_with_all = ["perm", "one_line"])]
        cycle_type: Option<String>,
        /// Cycle notation, e.g. "(1 2)(3 4 5)"; needs --n.
        #[arg(long, requires = "n")]
        perm: Option<String>,
        /// One-line images, e.g. "2 1 4 5 3".
        #[arg(long)]
        one_line: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_prime: Option<u64>,
        /// Restrict to primes p <= n - 3.
        #[arg(long, conflicts_with = "max_prime")]
        jordan: bool,
    },
    /// Proportion of S_n (or A_n) in an event.
    Census {
        #[arg(long)]
        n: usize,
        /// Event descriptor; repeat for several events.
        #[arg(long, required = true)]
        event: Vec<String>,
        #[arg(long, value_enum, default_value = "exact")]
        method: MethodArg,
        #[command(flatten)]
        sampling: Sampling,
        /// Measure inside the alternating group.
        #[arg(long)]
        alternating: bool,
    },
    /// One event over several degrees, one CSV/JSON row per degree.
    McTable {
        /// Comma-separated degrees.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value = "failure")]
        event: String,
        #[arg(long, value_enum, default_value = "mc")]
        method: MethodArg,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long)]
        alternating: bool,
        /// Add a loglog_over_log column, log(log n)/log n.
        #[arg(long)]
        companion: bool,
    },
    /// Prime reciprocal sums.
    Primes {
        #[command(subcommand)]
        verb: PrimesVerb,
    },
    /// Structure-count bound on U(n, p).
    StructureBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
    /// Proportion with a cycle of length n, n-1 or n-2.
    LongCycle {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
enum PrimesVerb {
    /// Sum of 1/p over p <= x against log log x.
    Mertens {
        #[arg(long)]
        x: f64,
        /// Also report the sum as an exact rational (x <= 10000).
        #[arg(long)]
        rational: bool,
    },
    /// Sum of 1/p over (ln n)^2 < p <= n.
    Window {
        #[arg(long)]
        n: u64,
    },
    /// Sum of 1/p^2 over p > x, truncated at the sieve limit.
    Tail {
        #[arg(long)]
        x: f64,
        /// Sieve limit; defaults to max(10^6, 100 x).
        #[arg(long)]
        limit: Option<u64>,
    },
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let written = match &cli.common.out {
                Some(path) => std::fs::write(path, text.as_bytes()),
                None => stdout.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(stderr, "error: cannot write output: {e}");
                    2
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_usage() {
                1
            } else {
                2
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<String> {
    match cli.common.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::domain(format!("cannot start thread pool: {e}")))?
            .install(|| dispatch(cli)),
        None => dispatch(cli),
    }
}

fn dispatch(cli: &Cli) -> Result<String> {
    let c = &cli.common;
    match &cli.command {
        Command::Avoid {
            n,
            set,
            approx,
            cap,
        } => avoid(c, *n, set, *approx, *cap),
        Command::Bounds { n, set } => bounds(c, *n, set),
        Command::Witness {
            cycle_type,
            perm,
            one_line,
            n,
            max_prime,
            jordan,
        } => witness(c, cycle_type, perm, one_line, *n, *max_prime, *jordan),
        Command::Census {
            n,
            event,
            method,
            sampling,
            alternating,
        } => census_cmd(c, *n, event, *method, sampling, *alternating),
        Command::McTable {
            n,
            event,
            method,
            sampling,
            alternating,
            companion,
        } => mc_table(c, n, event, *method, sampling, *alternating, *companion),
        Command::Primes { verb } => primes(c, verb),
        Command::StructureBound { n, p } => structure(c, *n, *p),
        Command::LongCycle { n } => long_cycle(c, *n),
    }
}

fn csv_string<S: serde::Serialize>(rows: &[S]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for r in rows {
        w.serialize(r)
            .map_err(|e| Error::domain(format!("csv: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::domain(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// CSV from a header and string records.
fn csv_records(header: &[&str], records: &[Vec<String>]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let err = |e: csv::Error| Error::domain(format!("csv: {e}"));
    w.write_record(header).map_err(err)?;
    for r in records {
        w.write_record(r).map_err(err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::domain(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn json_string(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn to_method(m: MethodArg, s: &Sampling) -> Method {
    match m {
        MethodArg::Exact => Method::ExactPartition,
        MethodArg::Brute => Method::BruteForce,
        MethodArg::Mc => Method::MonteCarlo {
            samples: s.samples,
            seed: s.seed,
        },
    }
}

fn avoid(c: &Common, n: usize, set: &str, approx: bool, cap: usize) -> Result<String> {
    let spec = AvoidanceSpec::parse(n, set)?;
    let report = avoidance::bound_report(&spec);
    let digits = c.digits;
    // (k, num, den, decimal)
    let rows: Vec<[String; 4]> = if approx {
        avoidance::approximate_series(&spec)?
            .iter()
            .enumerate()
            .map(|(k, p)| {
                [
                    k.to_string(),
                    String::new(),
                    String::new(),
                    format!("{:.*e}", digits.saturating_sub(1), p),
                ]
            })
            .collect()
    } else {
        let series = avoidance::avoidance_series_capped(&spec, cap)?;
        series
            .proportions()
            .iter()
            .enumerate()
            .map(|(k, p)| {
                [
                    k.to_string(),
                    p.numer().to_string(),
                    p.denom().to_string(),
                    avoidance::proportion_decimal(p, digits),
                ]
            })
            .collect()
    };
    let last = rows.last().expect("series has n + 1 entries");
    Ok(match c.format {
        Format::Csv => csv_records(
            &["k", "p_k_num", "p_k_den", "p_k_decimal"],
            &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        )?,
        Format::Json => json_string(&json!({
            "n": n,
            "set": spec.set_string(),
            "approximate": approx,
            "series": rows.iter().map(|r| json!({
                "k": r[0].parse::<usize>().unwrap(),
                "p_k_num": r[1],
                "p_k_den": r[2],
                "p_k_decimal": r[3],
            })).collect::<Vec<_>>(),
            "bounds": report.to_json(digits),
        })),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "n = {n}, C = {{{}}}", spec.set_string());
            if approx {
                let _ = writeln!(s, "p_{n} ~ {} (approximate)", last[3]);
            } else {
                let _ = writeln!(s, "p_{n} = {}/{} = {}", last[1], last[2], last[3]);
            }
            s.push_str("bounds:\n");
            for (k, v) in report.rows(digits) {
                let _ = writeln!(s, "  {k} = {v}");
            }
            s
        }
    })
}

fn bounds(c: &Common, n: usize, set: &str) -> Result<String> {
    let spec = AvoidanceSpec::parse(n, set)?;
    let report = avoidance::bound_report(&spec);
    let rows = report.rows(c.digits);
    Ok(match c.format {
        Format::Json => json_string(&report.to_json(c.digits)),
        Format::Csv => csv_records(
            &["name", "value"],
            &rows
                .iter()
                .map(|(k, v)| vec![k.to_string(), v.clone()])
                .collect::<Vec<_>>(),
        )?,
        Format::Text => rows.iter().map(|(k, v)| format!("{k} = {v}\n")).collect(),
    })
}

fn witness(
    c: &Common,
    cycle_type: &Option<String>,
    perm: &Option<String>,
    one_line: &Option<String>,
    n: Option<usize>,
    max_prime: Option<u64>,
    jordan: bool,
) -> Result<String> {
    let ct: CycleType = match (cycle_type, perm, one_line) {
        (Some(s), _, _) => s.parse()?,
        (None, Some(s), _) => {
            Permutation::parse_cycle_notation(s, n.expect("clap requires --n"))?.cycle_type()
        }
        (None, None, Some(s)) => {
            let p = Permutation::parse_one_line(s)?;
            if let Some(n) = n {
                if n != p.degree() {
                    return Err(Error::parse(format!(
                        "--n {n} does not match the {} images given",
                        p.degree()
                    )));
                }
            }
            p.cycle_type()
        }
        (None, None, None) => {
            return Err(Error::parse(
                "give one of --cycle-type, --perm (with --n) or --one-line",
            ))
        }
    };
    if let Some(m) = max_prime {
        if m < 2 {
            return Err(Error::parse("--max-prime must be at least 2"));
        }
    }
    let cap = if jordan {
        Some(ct.degree().saturating_sub(3) as u64)
    } else {
        max_prime
    };
    let w = ct.prime_cycle_witness(cap);
    let ct_text = ct.to_string();
    Ok(match c.format {
        Format::Json => json_string(&match &w {
            Some(w) => json!({
                "cycle_type": ct_text,
                "p": w.prime,
                "m": w.exponent.to_string(),
                "moved": w.moved,
            }),
            None => json!({ "cycle_type": ct_text, "p": null, "m": null, "moved": null }),
        }),
        Format::Csv => {
            let rec = match &w {
                Some(w) => vec![
                    ct_text,
                    w.prime.to_string(),
                    w.exponent.to_string(),
                    w.moved.to_string(),
                ],
                None => vec![ct_text, String::new(), String::new(), String::new()],
            };
            csv_records(&["cycle_type", "p", "m", "moved"], &[rec])?
        }
        Format::Text => match &w {
            Some(w) => format!("{{p: {}, m: {}}}\n", w.prime, w.exponent),
            None => "none\n".to_string(),
        },
    })
}

fn census_cmd(
    c: &Common,
    n: usize,
    events: &[String],
    method: MethodArg,
    sampling: &Sampling,
    alternating: bool,
) -> Result<String> {
    let events = events
        .iter()
        .map(|s| s.parse())
        .collect::<Result<Vec<Event>>>()?;
    let group = if alternating {
        Group::Alternating
    } else {
        Group::Symmetric
    };
    let reports = census::census_many(n, &events, to_method(method, sampling), group)?;
    Ok(match c.format {
        Format::Json => {
            let items: Vec<_> = reports.iter().map(|r| r.to_json(c.digits)).collect();
            if items.len() == 1 {
                json_string(&items[0])
            } else {
                json_string(&serde_json::Value::Array(items))
            }
        }
        Format::Csv => csv_string(
            &reports
                .iter()
                .map(|r| r.to_row(c.digits))
                .collect::<Vec<_>>(),
        )?,
        Format::Text => reports
            .iter()
            .map(|r| match r.exact() {
                Some(q) => format!("{} {}_{}: {}\n", r.event, r.group, r.n, ratio_string(q)),
                None => format!(
                    "{} {}_{}: {} +/- {} (samples={}, seed={})\n",
                    r.event,
                    r.group,
                    r.n,
                    format_fixed(r.value(), c.digits),
                    format_fixed(r.stderr(), c.digits),
                    sampling.samples,
                    sampling.seed
                ),
            })
            .collect(),
    })
}

fn mc_table(
    c: &Common,
    degrees: &[usize],
    event: &str,
    method: MethodArg,
    sampling: &Sampling,
    alternating: bool,
    companion: bool,
) -> Result<String> {
    let event: Event = event.parse()?;
    let group = if alternating {
        Group::Alternating
    } else {
        Group::Symmetric
    };
    let method = to_method(method, sampling);
    let reports = degrees
        .iter()
        .map(|&n| census::census(n, &event, method, group))
        .collect::<Result<Vec<_>>>()?;
    let companion_value = |n: usize| {
        let l = (n as f64).ln();
        format_fixed(l.ln() / l, c.digits)
    };
    Ok(match c.format {
        Format::Json => json_string(&serde_json::Value::Array(
            reports
                .iter()
                .map(|r| {
                    let mut v = r.to_json(c.digits);
                    if companion {
                        v["loglog_over_log"] = json!(companion_value(r.n));
                    }
                    v
                })
                .collect(),
        )),
        Format::Csv | Format::Text => {
            let mut header = vec![
                "n", "event", "method", "estimate", "stderr", "samples", "seed",
            ];
            if companion {
                header.push("loglog_over_log");
            }
            let records: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    let row = r.to_mc_row(c.digits);
                    let mut rec = vec![
                        row.n.to_string(),
                        row.event,
                        row.method,
                        row.estimate,
                        row.stderr,
                        row.samples.map(|s| s.to_string()).unwrap_or_default(),
                        row.seed.map(|s| s.to_string()).unwrap_or_default(),
                    ];
                    if companion {
                        rec.push(companion_value(r.n));
                    }
                    rec
                })
                .collect();
            csv_records(&header, &records)?
        }
    })
}

fn primes(c: &Common, verb: &PrimesVerb) -> Result<String> {
    let d = c.digits;
    let fixed = |x: f64| format_fixed(x, d);
    let (header, values, extra): (Vec<&str>, Vec<String>, Option<(&str, String)>) = match verb {
        PrimesVerb::Mertens { x, rational } => {
            if x.is_nan() || *x < 2.0 {
                return Err(Error::domain(format!("x = {x} must be at least 2")));
            }
            let sieve = PrimeSieve::new(x.floor() as u64)?;
            let r = prime::reciprocal_prime_sum(*x, &sieve)?;
            let exact = if *rational {
                if *x > 10_000.0 {
                    return Err(Error::domain("--rational needs x <= 10000"));
                }
                Some((
                    "sum_rational",
                    ratio_string(&prime::reciprocal_prime_sum_exact(
                        x.floor() as u64,
                        &sieve,
                    )?),
                ))
            } else {
                None
            };
            (
                vec!["x", "sum", "loglog_x", "residual"],
                vec![
                    x.to_string(),
                    fixed(r.sum),
                    fixed(r.loglog_x),
                    fixed(r.residual),
                ],
                exact,
            )
        }
        PrimesVerb::Window { n } => {
            if *n <= 10 {
                return Err(Error::domain(format!("window sums need n > 10, got {n}")));
            }
            let sieve = PrimeSieve::new(*n)?;
            let w = prime::window_sum(*n, &sieve)?;
            (
                vec!["n", "f_n", "sum", "prediction"],
                vec![
                    n.to_string(),
                    fixed(w.f_n),
                    fixed(w.sum),
                    fixed(w.prediction),
                ],
                None,
            )
        }
        PrimesVerb::Tail { x, limit } => {
            if x.is_nan() || *x < 2.0 {
                return Err(Error::domain(format!("x = {x} must be at least 2")));
            }
            let limit = limit.unwrap_or_else(|| prime::tail_sieve_limit(*x));
            let sieve = PrimeSieve::new(limit)?;
            let t = prime::tail_inverse_square(*x, &sieve)?;
            (
                vec![
                    "x",
                    "limit",
                    "truncated_sum",
                    "bound",
                    "reference",
                    "truncation_error",
                ],
                vec![
                    x.to_string(),
                    t.limit.to_string(),
                    format!("{:.*e}", d.saturating_sub(1), t.truncated_sum),
                    format!("{:.*e}", d.saturating_sub(1), t.bound),
                    format!("{:.*e}", d.saturating_sub(1), t.reference),
                    format!("{:.*e}", d.saturating_sub(1), t.truncation_error),
                ],
                None,
            )
        }
    };
    let mut header = header;
    let mut values = values;
    if let Some((k, v)) = extra {
        header.push(k);
        values.push(v);
    }
    Ok(match c.format {
        Format::Csv => csv_records(&header, &[values])?,
        Format::Json => {
            let obj: serde_json::Map<String, serde_json::Value> = header
                .iter()
                .zip(values)
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect();
            json_string(&serde_json::Value::Object(obj))
        }
        Format::Text => header
            .iter()
            .zip(values)
            .map(|(k, v)| format!("{k} = {v}\n"))
            .collect(),
    })
}

fn structure(c: &Common, n: usize, p: usize) -> Result<String> {
    let b = structure_bound(n, p)?;
    let log_form = format_fixed(b.log_form, c.digits);
    Ok(match c.format {
        Format::Json => {
            let mut v = b.to_json();
            v["log_form"] = json!(log_form);
            json_string(&v)
        }
        Format::Csv => csv_records(
            &["n", "p", "exact_rhs", "simplified", "log_form"],
            &[vec![
                n.to_string(),
                p.to_string(),
                ratio_string(&b.exact_rhs),
                ratio_string(&b.simplified),
                log_form,
            ]],
        )?,
        Format::Text => format!(
            "n = {n}, p = {p}\nexact_rhs = {}\nsimplified = {}\nlog_form = {log_form}\n",
            ratio_string(&b.exact_rhs),
            ratio_string(&b.simplified)
        ),
    })
}

fn long_cycle(c: &Common, n: usize) -> Result<String> {
    let q = long_cycle_proportion(n)?;
    let dec = hp::format_sig(&hp::from_ratio(&q), c.digits);
    Ok(match c.format {
        Format::Json => json_string(&json!({
            "n": n,
            "proportion": ratio_string(&q),
            "decimal": dec,
        })),
        Format::Csv => csv_records(
            &["n", "proportion", "decimal"],
            &[vec![n.to_string(), ratio_string(&q), dec]],
        )?,
        Format::Text => format!("{}\n", ratio_string(&q)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("permcensus").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn avoid_text() {
        let (code, out, _) = run_str(&["avoid", "--n", "5", "--set", "1-4"]);
        assert_eq!(code, 0);
        assert!(out.contains("p_5 = 1/5"), "{out}");
        assert!(out.contains("bound_thm1 = 0.22176929073"), "{out}");
    }

    #[test]
    fn witness_text() {
        let (code, out, _) = run_str(&["witness", "--cycle-type", "3,2"]);
        assert_eq!((code, out.as_str()), (0, "{p: 2, m: 3}\n"));
        let (_, out, _) = run_str(&["witness", "--cycle-type", "4,2"]);
        assert_eq!(out, "none\n");
        let (_, out, _) = run_str(&["witness", "--perm", "(1 2)(3 4 5)", "--n", "5"]);
        assert_eq!(out, "{p: 2, m: 3}\n");
        let (_, out, _) = run_str(&["witness", "--cycle-type", "5", "--jordan"]);
        assert_eq!(out, "none\n");
    }

    #[test]
    fn census_text() {
        let (code, out, _) = run_str(&[
            "census",
            "--n",
            "4",
            "--event",
            "prime-power-cycle",
            "--method",
            "brute",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "prime-power-cycle S_4: 7/12\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["avoid", "--bogus"]).0, 1);
        assert_eq!(run_str(&[]).0, 1);
        assert_eq!(run_str(&["--help"]).0, 0);
        assert_eq!(run_str(&["avoid", "--n", "5", "--set", "9"]).0, 1);
        assert_eq!(run_str(&["census", "--n", "4", "--event", "nope"]).0, 1);
        let (code, _, err) = run_str(&["census", "--n", "12", "--event", "T", "--method", "brute"]);
        assert_eq!(code, 2);
        assert!(err.contains("cap"), "{err}");
        assert_eq!(run_str(&["structure-bound", "--n", "6", "--p", "4"]).0, 2);
        assert_eq!(run_str(&["long-cycle", "--n", "6"]).0, 2);
        assert_eq!(
            run_str(&[
                "census",
                "--n",
                "4",
                "--event",
                "T",
                "--method",
                "mc",
                "--samples",
                "0"
            ])
            .0,
            2
        );
    }
}
