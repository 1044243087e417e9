//! Argument model and command execution for the `kronbound` binary.
//!
//! Every command renders to a table, JSON or CSV. JSON and CSV carry all
//! numbers as decimal strings.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::json;

use kronbound::bounds::{full_report, kronecker_cost};
use kronbound::character::class_size;
use kronbound::partition::partitions;
use kronbound::qbinomial::{delta, effective_gap_bound, gaussian_binomial};
use kronbound::stability::stability_sequence;
use kronbound::verify::{run_suite, Suite, SuiteReport, VerifyConfig};
use kronbound::{AlternatingGuard, Engine, Error, Partition, Real};

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Cost ceiling for `bounds` when `--budget` is absent.
pub const DEFAULT_BOUNDS_BUDGET: u64 = 1_000_000_000;

/// Exact Kronecker coefficients, their bounds, and q-binomial gaps.
#[derive(Debug, Clone, PartialEq, Eq, Parser, Serialize, Deserialize)]
#[command(name = "kronbound", version)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Worker threads for verification suites (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Work ceiling: cost units for `bounds` and the character route of
    /// `kron`, axis permutations for the alternating route.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Print the parsed configuration as JSON instead of running it.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub print_config: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Character,
    Alternating,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct Triple {
    /// First partition, comma separated ("" for the empty partition).
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Kronecker coefficient g(λ, μ, ν).
    Kron {
        #[command(flatten)]
        #[serde(flatten)]
        triple: Triple,
        #[arg(long, value_enum, default_value_t = Method::Character)]
        method: Method,
    },
    /// Gaussian binomial [l+m choose m]_q and its gaps.
    Qbinom {
        l: usize,
        m: usize,
        /// Print the coefficients (the default).
        #[arg(long)]
        poly: bool,
        /// Print δ_k = p_k − p_{k−1}.
        #[arg(long, conflicts_with_all = ["poly", "gapbound"])]
        delta: Option<usize>,
        /// Print δ_k, the effective lower bound and the margin.
        #[arg(long, conflicts_with = "poly")]
        gapbound: Option<usize>,
    },
    /// G_k(t) = g(λ + (t^k), μ + (t^k), ν + (tk)) for t = 0..=tmax.
    Stability {
        #[command(flatten)]
        #[serde(flatten)]
        triple: Triple,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 5)]
        tmax: usize,
    },
    /// Every bound on g(λ, μ, ν) next to its true value.
    Bounds {
        #[command(flatten)]
        #[serde(flatten)]
        triple: Triple,
    },
    /// Character χ^λ at one class, or at every class.
    Char { shape: Partition, class: Option<Partition> },
    /// Run a verification suite.
    Verify {
        /// symmetry, values, reduction, kstab, bounds, qbin, almkvist,
        /// stanley, lemma14 or all.
        suite: Suite,
        /// Largest n of the suite's range.
        #[arg(long)]
        n: Option<usize>,
        /// Largest rectangle side (lemma14, qbin).
        #[arg(long)]
        lmax: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
    },
}

/// A rendered result: the three output forms and the exit code.
pub struct Output {
    pub table: String,
    pub json: serde_json::Value,
    pub csv_header: Vec<String>,
    pub csv_rows: Vec<Vec<String>>,
    pub code: i32,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.table.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("JSON values always serialize") + "\n",
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.csv_header).expect("in-memory write");
                for row in &self.csv_rows {
                    w.write_record(row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV of UTF-8 fields")
            }
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Domain(_) | Error::SizeMismatch(_) => EXIT_USAGE,
        Error::Resource { .. } => EXIT_RESOURCE,
        Error::Internal(_) => EXIT_FAILED,
    }
}

fn header(cols: &[&str]) -> Vec<String> {
    cols.iter().map(|s| s.to_string()).collect()
}

/// Runs the configured command. Errors carry the exit code to use.
pub fn execute(config: &RunConfig) -> Result<Output, Error> {
    let mut engine = Engine::new();
    match &config.command {
        Command::Kron { triple, method } => {
            if let Some(b) = config.budget {
                engine.guard = AlternatingGuard {
                    max_axis_permutations: u128::from(b),
                };
            }
            kron(&engine, triple, *method, config.budget)
        }
        Command::Qbinom {
            l,
            m,
            delta: d,
            gapbound,
            ..
        } => qbinom(*l, *m, *d, *gapbound),
        Command::Stability { triple, k, tmax } => stability(&engine, triple, *k, *tmax),
        Command::Bounds { triple } => bounds(&engine, triple, config.budget.unwrap_or(DEFAULT_BOUNDS_BUDGET)),
        Command::Char { shape, class } => character(&engine, shape, class.as_ref()),
        Command::Verify {
            suite,
            n,
            lmax,
            seed,
            samples,
        } => {
            let vc = VerifyConfig {
                n: *n,
                lmax: *lmax,
                seed: *seed,
                samples: *samples,
            };
            check_ranges(*suite, &vc)?;
            Ok(verify(&engine, *suite, &vc))
        }
    }
}

fn kron(engine: &Engine, t: &Triple, method: Method, budget: Option<u64>) -> Result<Output, Error> {
    let Triple { lambda, mu, nu } = t;
    let character = || -> Result<BigUint, Error> {
        if let Some(b) = budget {
            let cost = kronecker_cost(lambda.size());
            if cost > BigUint::from(b) {
                return Err(Error::Resource {
                    what: format!("character sum for {lambda:?}, {mu:?}, {nu:?}"),
                    estimate: cost.to_string(),
                    ceiling: b.to_string(),
                });
            }
        }
        engine.kronecker(lambda, mu, nu)
    };
    let (chr, alt) = match method {
        Method::Character => (Some(BigInt::from(character()?)), None),
        Method::Alternating => (None, Some(engine.kronecker_alternating(lambda, mu, nu)?)),
        Method::Both => (
            Some(BigInt::from(character()?)),
            Some(engine.kronecker_alternating(lambda, mu, nu)?),
        ),
    };
    let values: Vec<&BigInt> = chr.iter().chain(alt.iter()).collect();
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    let text = |v: &Option<BigInt>| v.as_ref().map(ToString::to_string);
    Ok(Output {
        table: values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ") + "\n",
        json: json!({
            "lambda": lambda, "mu": mu, "nu": nu,
            "character": text(&chr), "alternating": text(&alt), "agree": agree,
        }),
        csv_header: header(&["lambda", "mu", "nu", "character", "alternating"]),
        csv_rows: vec![vec![
            lambda.to_string(),
            mu.to_string(),
            nu.to_string(),
            text(&chr).unwrap_or_default(),
            text(&alt).unwrap_or_default(),
        ]],
        code: if agree { EXIT_OK } else { EXIT_FAILED },
    })
}

fn qbinom(l: usize, m: usize, d: Option<usize>, gapbound: Option<usize>) -> Result<Output, Error> {
    if let Some(k) = gapbound {
        let gap = delta(l, m, k);
        let bound = effective_gap_bound(l, m, k)?;
        let margin = Real::from_bigint(&gap).sub(&bound);
        let (b, mg) = (bound.to_sci(30), margin.to_sci(30));
        return Ok(Output {
            table: format!("delta {gap}\nbound {b}\nmargin {mg}\n"),
            json: json!({"l": l.to_string(), "m": m.to_string(), "k": k.to_string(),
                         "delta": gap.to_string(), "bound": b, "margin": mg}),
            csv_header: header(&["l", "m", "k", "delta", "bound", "margin"]),
            csv_rows: vec![vec![
                l.to_string(),
                m.to_string(),
                k.to_string(),
                gap.to_string(),
                b,
                mg,
            ]],
            code: EXIT_OK,
        });
    }
    if let Some(k) = d {
        let gap = delta(l, m, k);
        return Ok(Output {
            table: format!("{gap}\n"),
            json: json!({"l": l.to_string(), "m": m.to_string(), "k": k.to_string(), "delta": gap.to_string()}),
            csv_header: header(&["l", "m", "k", "delta"]),
            csv_rows: vec![vec![l.to_string(), m.to_string(), k.to_string(), gap.to_string()]],
            code: EXIT_OK,
        });
    }
    let poly = gaussian_binomial(l, m);
    Ok(Output {
        table: format!("{poly}\n"),
        json: json!({"l": l.to_string(), "m": m.to_string(), "coefficients": poly}),
        csv_header: header(&["k", "coefficient"]),
        csv_rows: poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| vec![k.to_string(), c.to_string()])
            .collect(),
        code: EXIT_OK,
    })
}

fn stability(engine: &Engine, t: &Triple, k: usize, tmax: usize) -> Result<Output, Error> {
    let seq = stability_sequence(&engine.characters, &t.lambda, &t.mu, &t.nu, k, tmax)?;
    let values: Vec<String> = seq.values.iter().map(ToString::to_string).collect();
    let onset = seq.onset.map_or("none".to_string(), |o| o.to_string());
    let stable = seq.stable_value().map_or("unknown".to_string(), ToString::to_string);
    Ok(Output {
        table: format!("{} | onset {onset} | stable {stable}\n", values.join(" ")),
        json: serde_json::to_value(&seq).expect("sequence serializes"),
        csv_header: header(&["t", "value"]),
        csv_rows: values
            .iter()
            .enumerate()
            .map(|(i, v)| vec![i.to_string(), v.clone()])
            .collect(),
        code: EXIT_OK,
    })
}

fn bounds(engine: &Engine, t: &Triple, budget: u64) -> Result<Output, Error> {
    let rep = full_report(&engine.characters, &engine.arrays, &t.lambda, &t.mu, &t.nu, budget)?;
    let g = rep.true_g.as_ref().map_or("unknown".to_string(), ToString::to_string);
    let mut table = format!("g = {g}\n");
    let mut rows = Vec::new();
    for e in &rep.entries {
        let value = e.value.as_ref().map_or("-".to_string(), ToString::to_string);
        let status = match e.satisfied {
            Some(true) => "ok",
            Some(false) => "VIOLATED",
            None if !e.applicable => "n/a",
            None => "-",
        };
        let dir = match e.direction {
            kronbound::Direction::Upper => "upper",
            kronbound::Direction::Lower => "lower",
        };
        let note = e.note.clone().unwrap_or_default();
        table += &format!(
            "{:<20} {dir:<6} {value:<30} {status}{}\n",
            e.name,
            if note.is_empty() {
                String::new()
            } else {
                format!("  ({note})")
            }
        );
        rows.push(vec![
            e.name.clone(),
            dir.to_string(),
            e.value.as_ref().map(ToString::to_string).unwrap_or_default(),
            e.applicable.to_string(),
            e.satisfied.map(|s| s.to_string()).unwrap_or_default(),
        ]);
    }
    let code = if rep.violations().next().is_some() {
        EXIT_FAILED
    } else {
        EXIT_OK
    };
    Ok(Output {
        table,
        json: serde_json::to_value(&rep).expect("report serializes"),
        csv_header: header(&["bound", "direction", "value", "applicable", "satisfied"]),
        csv_rows: rows,
        code,
    })
}

fn character(engine: &Engine, shape: &Partition, class: Option<&Partition>) -> Result<Output, Error> {
    let classes = match class {
        Some(c) => vec![c.clone()],
        None => partitions(shape.size()),
    };
    let values = engine.characters.column(shape, &classes)?;
    let mut table = String::new();
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (c, v) in classes.iter().zip(&values) {
        if class.is_some() {
            table += &format!("{v}\n");
        } else {
            table += &format!("{:<24} {v}\n", format!("{c:?}"));
        }
        rows.push(vec![
            shape.to_string(),
            c.to_string(),
            class_size(c).to_string(),
            v.to_string(),
        ]);
        entries.push(json!({"class": c, "class_size": class_size(c).to_string(), "value": v.to_string()}));
    }
    Ok(Output {
        table,
        json: json!({"shape": shape, "values": entries}),
        csv_header: header(&["shape", "class", "class_size", "value"]),
        csv_rows: rows,
        code: EXIT_OK,
    })
}

/// Desk-scale limits for `verify`; larger ranges are usage errors.
pub fn check_ranges(suite: Suite, vc: &VerifyConfig) -> Result<(), Error> {
    let within = |what: &str, v: Option<usize>, lo: usize, hi: usize| match v {
        Some(x) if x < lo || x > hi => Err(Error::Domain(format!(
            "--{what} {x} is outside {lo}..={hi} for {suite}"
        ))),
        _ => Ok(()),
    };
    match suite {
        Suite::Symmetry | Suite::Reduction | Suite::Bounds => within("n", vc.n, 0, 9),
        Suite::Kstab => within("n", vc.n, 0, 8),
        Suite::Qbin => within("n", vc.n, 8, 16).and(within("lmax", vc.lmax, 0, 16)),
        Suite::Almkvist => within("n", vc.n, 2, 40),
        Suite::Stanley => within("n", vc.n, 1, 16),
        Suite::TwoCoefficients => within("lmax", vc.lmax, 1, 6),
        Suite::Values => Ok(()),
        Suite::All => Suite::EACH.iter().try_for_each(|&s| check_ranges(s, vc)),
    }?;
    within("samples", vc.samples, 1, 100_000)
}

fn verify(engine: &Engine, suite: Suite, vc: &VerifyConfig) -> Output {
    let reports: Vec<SuiteReport> = run_suite(engine, suite, vc);
    let mut table = String::new();
    let mut rows = Vec::new();
    for r in &reports {
        for c in &r.checks {
            let failed = c.failures.len();
            let status = if c.passed() { "PASS" } else { "FAIL" };
            table += &format!(
                "{:<10} {:<22} {status} {failed}/{} failed\n",
                r.suite.name(),
                c.name,
                c.instances
            );
            let witness = c.witness();
            if let Some(w) = witness {
                table += &format!("    minimal witness (size {}): {}: {}\n", w.size, w.instance, w.detail);
            }
            rows.push(vec![
                r.suite.name().to_string(),
                c.name.clone(),
                c.instances.to_string(),
                failed.to_string(),
                witness.map(|w| w.instance.clone()).unwrap_or_default(),
                witness.map(|w| w.detail.clone()).unwrap_or_default(),
            ]);
        }
    }
    let ok = reports.iter().all(SuiteReport::passed);
    Output {
        table,
        json: serde_json::to_value(&reports).expect("reports serialize"),
        csv_header: header(&["suite", "check", "instances", "failures", "witness", "detail"]),
        csv_rows: rows,
        code: if ok { EXIT_OK } else { EXIT_FAILED },
    }
}

/// Parses `args`, runs the command and writes to `out` / `err`. Returns the
/// exit code.
pub fn main_with(args: impl IntoIterator<Item = String>, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    if config.print_config {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&config).expect("config serializes")
        );
        return EXIT_OK;
    }
    if let Some(jobs) = config.jobs {
        if jobs == 0 {
            let _ = writeln!(err, "error: --jobs must be at least 1");
            return EXIT_USAGE;
        }
        // a pool may already exist when called twice in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match execute(&config) {
        Ok(output) => {
            let _ = out.write_all(output.render(config.format).as_bytes());
            output.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
