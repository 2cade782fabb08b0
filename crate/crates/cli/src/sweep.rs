//! Sweep driver: expands a configuration into individual check cells, runs
//! them (optionally on a worker pool), and collects the results in canonical
//! order.

use clap::ValueEnum;
use num_bigint::BigInt;
use partid_core::comb::{partitions_of, pbin, pbin_oracle, Composition, Partition};
use partid_core::identity::{
    int_params, lhs_main, rhs_main_negative_control, verify_binomial_transform,
    verify_chu_vandermonde, verify_genfunc_chain, verify_main, verify_reduced, verify_rewrite,
    verify_single_row_genfunc, CheckResult, MainParams, ParamValue,
};
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

/// The check families a sweep can run. `genfunc` expands into both the
/// chain and the single-row series checks.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, ValueEnum)]
pub enum CheckKind {
    Main,
    Rewrite,
    Transform,
    Chu,
    Reduced,
    Genfunc,
    PbinOracle,
}

impl CheckKind {
    pub fn all() -> Vec<CheckKind> {
        use CheckKind::*;
        vec![Main, Rewrite, Transform, Chu, Reduced, Genfunc, PbinOracle]
    }

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Main => "main",
            CheckKind::Rewrite => "rewrite",
            CheckKind::Transform => "transform",
            CheckKind::Chu => "chu",
            CheckKind::Reduced => "reduced",
            CheckKind::Genfunc => "genfunc",
            CheckKind::PbinOracle => "pbin-oracle",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    pub fn name(&self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
        }
    }
}

/// Worker-pool size: an explicit count or everything rayon finds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Jobs {
    Auto,
    Count(usize),
}

impl FromStr for Jobs {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "auto" {
            return Ok(Jobs::Auto);
        }
        match s.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Jobs::Count(n)),
            _ => Err(format!("expected a positive worker count or \"auto\", got {s:?}")),
        }
    }
}

impl fmt::Display for Jobs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Jobs::Auto => write!(f, "auto"),
            Jobs::Count(n) => write!(f, "{}", n),
        }
    }
}

/// Everything a sweep needs. Grids per family:
///
/// * main / rewrite: 1 ≤ n ≤ max_n, 1 ≤ r ≤ n, s in s_range;
/// * transform: 1 ≤ m, k ≤ max_n, s in s_range;
/// * chu: n ≤ min(max_n, 10), every composition of every r ≤ n into at most
///   4 parts, every row index, s in s_range clamped to 4 (the brute-force
///   side grows quickly with s);
/// * reduced: 1 ≤ r ≤ max_n, s in s_range;
/// * genfunc: s in s_range at `series_order`;
/// * pbin-oracle: every partition with at most min(oracle_cap, 8) cells and
///   every 0 ≤ r ≤ |μ|.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SweepConfig {
    pub max_n: u32,
    /// inclusive
    pub s_range: (u32, u32),
    pub checks: Vec<CheckKind>,
    pub series_order: usize,
    pub oracle_cap: u32,
    pub format: Format,
    pub jobs: Jobs,
    /// Swap in the deliberately wrong right-hand side for the main check;
    /// exists so the failure path of the harness stays honest.
    pub negative_control: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 12,
            s_range: (1, 6),
            checks: CheckKind::all(),
            series_order: 16,
            oracle_cap: 16,
            format: Format::Text,
            jobs: Jobs::Auto,
            negative_control: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.max_n < 1 {
            return Err("max-n must be at least 1".into());
        }
        let (lo, hi) = self.s_range;
        if lo < 1 {
            return Err("the s range must start at 1 or above".into());
        }
        if lo > hi {
            return Err(format!("empty s range {lo}..{hi}"));
        }
        if self.checks.is_empty() {
            return Err("at least one check must be selected".into());
        }
        if self.oracle_cap < 1 {
            return Err("oracle-cap must be at least 1".into());
        }
        Ok(())
    }
}

/// Full outcome of a sweep. `results` are in canonical order (check name,
/// then the lexicographic parameter record); the wall-clock duration is
/// carried alongside but never enters the canonical report bytes.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub config: SweepConfig,
    pub results: Vec<CheckResult>,
    pub pass: usize,
    pub fail: usize,
    pub duration: Duration,
}

/// One parameter cell of one check family.
enum Cell {
    Main(MainParams),
    Rewrite(MainParams),
    Transform { m: u32, k: u32, s: u32 },
    Chu { n: u32, rcomp: Composition, i: usize, s: u32 },
    Reduced { r: u32, s: u32 },
    GenfuncChain { s: u32, order: usize },
    GenfuncRow { s: u32, order: usize },
    PbinOracle { mu: Partition, r: u32, cap: u32 },
}

impl Cell {
    fn run(&self, negative_control: bool) -> CheckResult {
        match self {
            Cell::Main(p) => {
                if negative_control {
                    CheckResult::of_polys(
                        "main",
                        int_params(&[("n", p.n as i64), ("r", p.r as i64), ("s", p.s as i64)]),
                        &lhs_main(p),
                        &rhs_main_negative_control(p),
                    )
                } else {
                    verify_main(p)
                }
            }
            Cell::Rewrite(p) => verify_rewrite(p),
            Cell::Transform { m, k, s } => verify_binomial_transform(*m, *k, *s),
            Cell::Chu { n, rcomp, i, s } => verify_chu_vandermonde(*n, rcomp, *i, *s),
            Cell::Reduced { r, s } => verify_reduced(*r, *s),
            Cell::GenfuncChain { s, order } => verify_genfunc_chain(*s, *order),
            Cell::GenfuncRow { s, order } => verify_single_row_genfunc(*s, *order),
            Cell::PbinOracle { mu, r, cap } => run_pbin_oracle_cell(mu, *r, *cap),
        }
    }
}

fn run_pbin_oracle_cell(mu: &Partition, r: u32, cap: u32) -> CheckResult {
    let mut params = int_params(&[("r", r as i64)]);
    params.insert(
        "mu".to_string(),
        ParamValue::List(mu.parts().iter().map(|&p| p as i64).collect()),
    );
    let fast = pbin(mu, r);
    match pbin_oracle(mu, r, cap) {
        Ok(slow) => CheckResult::of_ints("pbin-oracle", params, &fast, &BigInt::from(slow)),
        Err(e) => CheckResult {
            check: "pbin-oracle".to_string(),
            params,
            status: partid_core::Status::Fail,
            lhs: fast.to_string(),
            rhs: "unavailable".to_string(),
            witness: Some(e.to_string()),
        },
    }
}

fn build_cells(cfg: &SweepConfig) -> Vec<Cell> {
    let mut kinds = cfg.checks.clone();
    kinds.sort();
    kinds.dedup();

    let (s_lo, s_hi) = cfg.s_range;
    let mut cells = Vec::new();
    for kind in kinds {
        match kind {
            CheckKind::Main | CheckKind::Rewrite => {
                for n in 1..=cfg.max_n {
                    for r in 1..=n {
                        for s in s_lo..=s_hi {
                            let p = MainParams::new(n, r, s);
                            cells.push(match kind {
                                CheckKind::Main => Cell::Main(p),
                                _ => Cell::Rewrite(p),
                            });
                        }
                    }
                }
            }
            CheckKind::Transform => {
                for m in 1..=cfg.max_n {
                    for k in 1..=cfg.max_n {
                        for s in s_lo..=s_hi {
                            cells.push(Cell::Transform { m, k, s });
                        }
                    }
                }
            }
            CheckKind::Chu => {
                let s_hi = s_hi.min(4);
                for n in 1..=cfg.max_n.min(10) {
                    for r in 1..=n {
                        for l in 1..=r.min(4) {
                            for rcomp in partid_core::comb::compositions_of(r, l) {
                                for i in 1..=l as usize {
                                    for s in s_lo..=s_hi {
                                        cells.push(Cell::Chu {
                                            n,
                                            rcomp: rcomp.clone(),
                                            i,
                                            s,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
            CheckKind::Reduced => {
                for r in 1..=cfg.max_n {
                    for s in s_lo..=s_hi {
                        cells.push(Cell::Reduced { r, s });
                    }
                }
            }
            CheckKind::Genfunc => {
                for s in s_lo..=s_hi {
                    cells.push(Cell::GenfuncChain { s, order: cfg.series_order });
                    cells.push(Cell::GenfuncRow { s, order: cfg.series_order });
                }
            }
            CheckKind::PbinOracle => {
                for n in 0..=cfg.oracle_cap.min(8) {
                    for mu in partitions_of(n) {
                        for r in 0..=n {
                            cells.push(Cell::PbinOracle {
                                mu: mu.clone(),
                                r,
                                cap: cfg.oracle_cap,
                            });
                        }
                    }
                }
            }
        }
    }
    cells
}

/// Run every selected check over its grid. Cells are independent and may be
/// executed in any order on any number of workers; the report is sorted into
/// canonical order afterwards, so the output is deterministic either way.
pub fn run_sweep(cfg: &SweepConfig) -> RunReport {
    let started = Instant::now();
    let cells = build_cells(cfg);
    let nc = cfg.negative_control;

    let mut results: Vec<CheckResult> = match cfg.jobs {
        Jobs::Count(1) => cells.iter().map(|c| c.run(nc)).collect(),
        Jobs::Auto => cells.par_iter().map(|c| c.run(nc)).collect(),
        Jobs::Count(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("failed to build worker pool");
            pool.install(|| cells.par_iter().map(|c| c.run(nc)).collect())
        }
    };
    results.sort();

    let pass = results.iter().filter(|r| r.passed()).count();
    let fail = results.len() - pass;
    RunReport {
        config: cfg.clone(),
        results,
        pass,
        fail,
        duration: started.elapsed(),
    }
}
