//! `nsg`: command-line access to the numerical-semigroup composition
//! toolkit. Every subcommand is a thin adapter over the library; output is
//! CSV with a header row or a single JSON object. Exit codes: 0 success,
//! 2 usage error, 3 domain error.

use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nsg_core::error::NsgError;
use nsg_core::kunz::{all_compositions, Composition, NumericalSemigroup};
use nsg_core::sampler::{Sampler, SamplerConfig, Target, RNG_ALGORITHM};
use nsg_core::series::{
    fibonacci_series, i_poly, lower_bound_series_a, w_series, RatSeries, DEFAULT_ORDER,
};
use nsg_core::tildec::{compute_tilde_c, estimate_c_from_table, nu_count};
use nsg_core::transfer::{builtin_model, ModelName};
use nsg_core::tree::count_by_genus;

#[derive(Parser)]
#[command(
    name = "nsg",
    version,
    about = "Numerical semigroups as Kunz compositions: enumeration, series, transfer matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the semigroup inequalities for one composition
    Validate {
        /// Comma-separated parts, e.g. "2,3"
        composition: String,
    },
    /// Genus, multiplicity, Frobenius number, gaps and generators as JSON
    Analyze { composition: String },
    /// Count semigroups by genus, one CSV line per genus
    Count {
        #[arg(long)]
        genus: u32,
        /// Worker threads (default: all CPUs)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// List compositions of a genus, optionally filtered
    Enumerate {
        #[arg(long)]
        genus: u32,
        /// Keep only compositions with all parts at most this value
        #[arg(long)]
        max_part: Option<u32>,
        /// Keep only compositions whose last part is maximal
        #[arg(long)]
        ends_with_max: bool,
    },
    /// Exact coefficients counting maximum-3 compositions ending in a
    /// maximal part
    Tildec {
        #[arg(long)]
        max_genus: u32,
        /// Refine by the number of maximal parts
        #[arg(long)]
        by_k: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Bracket for the growth constant C in n(g) ~ C omega^g
    EstimateC {
        #[arg(long)]
        max_genus: u32,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Expand a named generating series as CSV power,coefficient
    Series {
        #[arg(long, ignore_case = true)]
        name: SeriesName,
        /// Index for the I and W families
        #[arg(long)]
        param: Option<usize>,
        /// Truncation order (default NSG_TRUNCATION_ORDER or 64)
        #[arg(long)]
        order: Option<usize>,
    },
    /// Partition polynomial (or numeric value) of a built-in transfer model
    Transfer {
        /// MAX5_PATH, MAX4_LEFT, LANE, M3, C3_PATH or P_FLAGGED_{00,01,10,11}
        #[arg(long)]
        model: String,
        #[arg(long)]
        n: usize,
        /// Evaluate numerically at this point instead of printing the polynomial
        #[arg(long)]
        at: Option<f64>,
    },
    /// Draw random maximum-3 compositions from the coin-toss generator
    Sample {
        #[arg(long)]
        lambda: f64,
        #[arg(long, conflicts_with = "genus")]
        multiplicity: Option<u32>,
        #[arg(long)]
        genus: Option<u64>,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Count compositions satisfying only the first-line inequalities
    Nu {
        #[arg(long)]
        max_genus: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesName {
    /// Fibonacci series 1/(1-q-q^2)
    Fib,
    /// Pair-count polynomial I_n (needs --param)
    I,
    /// Weakly admissible compositions of maximum mu (needs --param)
    W,
    /// Lower-bound series for ending-with-maximal-3 counts
    A,
}

#[derive(Serialize)]
struct Meta {
    tool_version: &'static str,
    subcommand: &'static str,
    parameters: serde_json::Value,
    wall_time_s: f64,
}

fn meta(subcommand: &'static str, parameters: serde_json::Value, started: Instant) -> Meta {
    Meta {
        tool_version: env!("CARGO_PKG_VERSION"),
        subcommand,
        parameters,
        wall_time_s: started.elapsed().as_secs_f64(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
    }
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn run(cli: Cli) -> Result<(), NsgError> {
    let started = Instant::now();
    match cli.command {
        Command::Validate { composition } => {
            let c = Composition::from_str(&composition)?;
            if c.is_nsg() {
                println!("valid");
            } else {
                println!("invalid");
                return Err(NsgError::InvalidComposition(composition));
            }
        }
        Command::Analyze { composition } => {
            let c = Composition::from_str(&composition)?;
            let s = NumericalSemigroup::from_composition(&c)?;
            #[derive(Serialize)]
            struct Analysis {
                composition: String,
                genus: u64,
                multiplicity: u32,
                frobenius: i64,
                gaps: Vec<u64>,
                generators: Vec<u64>,
                meta: Meta,
            }
            let out = Analysis {
                composition: c.to_string(),
                genus: s.genus(),
                multiplicity: s.multiplicity(),
                frobenius: s.frobenius().map_or(-1, |f| f as i64),
                gaps: s.gaps().to_vec(),
                generators: s.minimal_generators().into_iter().collect(),
                meta: meta(
                    "analyze",
                    serde_json::json!({ "composition": composition }),
                    started,
                ),
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Command::Count { genus, jobs } => {
            let counts = with_pool(jobs, || count_by_genus(genus));
            println!("g,n_g");
            for (g, n) in counts.iter().enumerate() {
                println!("{g},{n}");
            }
        }
        Command::Enumerate { genus, max_part, ends_with_max } => {
            if genus > 30 {
                usage_error("--genus must be at most 30 for enumerate");
            }
            let mut rows: Vec<Composition> = all_compositions(genus as u64)
                .filter_map(|parts| Composition::new(parts).ok())
                .filter(|c| c.is_nsg())
                .filter(|c| max_part.is_none_or(|m| c.max_part().unwrap_or(0) <= m))
                .filter(|c| {
                    !ends_with_max || c.parts().last().copied() == c.max_part()
                })
                .collect();
            rows.sort();
            for c in rows {
                println!("{c}");
            }
        }
        Command::Tildec { max_genus, by_k, jobs } => {
            let table = with_pool(jobs, || compute_tilde_c(max_genus.max(3)));
            if by_k {
                println!("g,c_g,k,c_gk");
                for ((g, k), v) in table.by_k() {
                    println!("{g},{},{k},{v}", table.c(*g));
                }
            } else {
                println!("g,c_g");
                for g in 1..=max_genus {
                    println!("{g},{}", table.c(g));
                }
            }
        }
        Command::EstimateC { max_genus, jobs } => {
            if max_genus < 10 {
                return Err(NsgError::InsufficientData { need: 10, got: max_genus });
            }
            let table = with_pool(jobs, || compute_tilde_c(max_genus));
            let est = estimate_c_from_table(&table);
            #[derive(Serialize)]
            struct EstimateOut {
                lower: f64,
                heuristic_upper: f64,
                estimate: f64,
                #[serde(rename = "G")]
                max_genus: u32,
                meta: Meta,
            }
            let out = EstimateOut {
                lower: est.lower,
                heuristic_upper: est.heuristic_upper,
                estimate: est.estimate,
                max_genus: est.max_genus,
                meta: meta(
                    "estimate-c",
                    serde_json::json!({ "max_genus": max_genus }),
                    started,
                ),
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Command::Series { name, param, order } => {
            let order = order.unwrap_or_else(order_from_env);
            println!("power,coefficient");
            match name {
                SeriesName::Fib => print_series(&fibonacci_series(order)),
                SeriesName::A => print_series(&lower_bound_series_a(order)),
                SeriesName::I => {
                    let n = param.filter(|&n| n >= 1).unwrap_or_else(|| {
                        usage_error("series I needs --param N with N >= 1")
                    });
                    let p = i_poly(n);
                    for (power, c) in p.coeffs().iter().enumerate() {
                        println!("{power},{c}");
                    }
                }
                SeriesName::W => {
                    let mu = param.filter(|&mu| mu >= 2).unwrap_or_else(|| {
                        usage_error("series W needs --param MU with MU >= 2")
                    });
                    print_series(&w_series(mu, order));
                }
            }
        }
        Command::Transfer { model, n, at } => {
            let name = ModelName::from_str(&model)
                .unwrap_or_else(|e| usage_error(&e));
            let m = builtin_model(name);
            match at {
                Some(q) => println!("{}", m.partition_value(n, &q)),
                None => {
                    println!("power,coefficient");
                    let p = m.partition_polynomial(n);
                    for (power, c) in p.coeffs().iter().enumerate() {
                        println!("{power},{c}");
                    }
                }
            }
        }
        Command::Sample { lambda, multiplicity, genus, count, seed } => {
            let target = match (multiplicity, genus) {
                (Some(m), None) => Target::Multiplicity(m),
                (None, Some(g)) => Target::Genus(g),
                _ => usage_error("pass exactly one of --multiplicity or --genus"),
            };
            let cfg = SamplerConfig { lambda, target, seed };
            let mut sampler = Sampler::new(&cfg);
            let mut genus_total = 0u64;
            let mut mult_total = 0u64;
            let mut threes_total = 0u64;
            for _ in 0..count {
                let c = sampler.draw();
                genus_total += c.genus();
                mult_total += c.multiplicity() as u64;
                threes_total += c.parts().iter().filter(|&&p| p == 3).count() as u64;
                println!("{c}");
            }
            #[derive(Serialize)]
            struct SampleStats {
                mean_genus: f64,
                mean_multiplicity: f64,
                mean_three_count: f64,
                rng: &'static str,
                seed: u64,
                count: u64,
                meta: Meta,
            }
            let out = SampleStats {
                mean_genus: genus_total as f64 / count as f64,
                mean_multiplicity: mult_total as f64 / count as f64,
                mean_three_count: threes_total as f64 / count as f64,
                rng: RNG_ALGORITHM,
                seed,
                count,
                meta: meta(
                    "sample",
                    serde_json::json!({
                        "lambda": lambda,
                        "multiplicity": multiplicity,
                        "genus": genus,
                    }),
                    started,
                ),
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Command::Nu { max_genus } => {
            let nu = nu_count(max_genus);
            println!("g,nu_g");
            for (g, v) in nu.iter().enumerate().skip(1) {
                println!("{g},{v}");
            }
        }
    }
    Ok(())
}

fn usage_error(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn order_from_env() -> usize {
    std::env::var("NSG_TRUNCATION_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ORDER)
}

fn print_series(s: &RatSeries) {
    for (power, c) in s.coeffs().iter().enumerate() {
        if c.is_integer() {
            println!("{power},{}", c.to_integer());
        } else {
            println!("{power},{c}");
        }
    }
}
