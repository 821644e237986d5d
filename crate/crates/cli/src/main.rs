//! pkl: exact p-Kazhdan-Lusztig bases and decomposition numbers in type A.

mod cache;
mod config;
mod emit;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use config::JobConfig;
use emit::{Format, PcanRow};
use pkl_core::coxeter::{CoxKind, CoxeterSystem};
use pkl_core::fock::crystal::{crystal, signature, CrystalOp, ReadingOrder};
use pkl_core::fock::{Multicharge, Multipartition};
use pkl_core::mult::{hecke_decomposition_number, schur_decomposition_number, MultiplicityQuery};
use pkl_core::poly::Realization;
use pkl_core::soergel::gram::Mode;
use pkl_core::soergel::leaves::LeafCtx;
use pkl_core::soergel::pcan::PCanCtx;
use pkl_core::weights::dots::{verify_dot_properties, DotFamily};
use pkl_core::weights::{Weight, WeightCtx};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "pkl", version, about = "p-canonical bases and decomposition numbers, exactly")]
struct Cli {
    /// JSON config file with defaults (env PKL_CONFIG overrides the path)
    #[arg(long, global = true)]
    config: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Finite,
    Affine,
}

#[derive(Subcommand)]
enum Cmd {
    /// Table of p-canonical basis elements
    Pcan(PcanArgs),
    /// Table of characteristic-zero Kazhdan-Lusztig basis elements
    Klpoly(PcanArgs),
    /// Schur-algebra multiplicity [Delta(lambda) : L(mu)]
    MultSchur(MultArgs),
    /// Cyclotomic Hecke decomposition number (dual Specht : simple)
    MultHecke(MultArgs),
    /// Crystal operator traces on a multipartition
    Crystal(CrystalArgs),
    /// Littelmann chain replays and the dot-family verification report
    Weights(WeightsArgs),
    /// Run the fast self-checks (--full for the slow ones too)
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
struct PcanArgs {
    #[arg(long, value_enum, default_value = "finite")]
    kind: KindArg,
    #[arg(long)]
    rank: Option<usize>,
    /// prime, repeatable; "rational" for characteristic zero
    #[arg(long = "p")]
    primes: Vec<String>,
    #[arg(long)]
    max_length: Option<usize>,
    /// compute a single element given by its reduced word, e.g. "0,1,0"
    #[arg(long)]
    word: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    cache_dir: Option<String>,
    /// disable the rayon pool
    #[arg(long)]
    sequential: bool,
}

#[derive(clap::Args)]
struct MultArgs {
    #[arg(long)]
    e: Option<i64>,
    /// prime or "rational"
    #[arg(long = "p")]
    prime: Option<String>,
    /// residues r_0,..,r_{l-1}, e.g. "0,1"
    #[arg(long)]
    charges: Option<String>,
    /// row counts m_1,..,m_l, e.g. "9,4"
    #[arg(long)]
    m_vector: Option<String>,
    /// partition syntax "2,2|3,1,1,1"; omitted = full table of size n
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    /// table size when lambda/mu are omitted
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    sequential: bool,
}

#[derive(clap::Args)]
struct CrystalArgs {
    #[arg(long)]
    e: Option<i64>,
    #[arg(long)]
    charges: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
    /// box reading order: schur or negative-level
    #[arg(long, default_value = "schur")]
    order: String,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(clap::Args)]
struct WeightsArgs {
    #[arg(long, value_enum, default_value = "finite")]
    kind: KindArg,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    e: Option<i64>,
    /// replay the F_j-chain from this weight, e.g. "0,0,0,2,3,3"
    #[arg(long)]
    chain_from: Option<String>,
    #[arg(long)]
    color: Option<i64>,
    /// run the dot-family verification report
    #[arg(long)]
    dots: bool,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// include the slower acceptance-grade checks
    #[arg(long)]
    full: bool,
}

const EXIT_INVALID_CONFIG: u8 = 2;
const EXIT_CACHE_CORRUPT: u8 = 3;
const EXIT_CONSISTENCY: u8 = 4;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match JobConfig::load(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("config error: {}", e);
            return ExitCode::from(EXIT_INVALID_CONFIG);
        }
    };
    let result = match cli.cmd {
        Cmd::Pcan(args) => cmd_pcan(args, &cfg, false),
        Cmd::Klpoly(args) => cmd_pcan(args, &cfg, true),
        Cmd::MultSchur(args) => cmd_mult(args, &cfg, true),
        Cmd::MultHecke(args) => cmd_mult(args, &cfg, false),
        Cmd::Crystal(args) => cmd_crystal(args, &cfg),
        Cmd::Weights(args) => cmd_weights(args, &cfg),
        Cmd::Verify(args) => verify::run(args.full),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::InvalidConfig(msg)) => {
            eprintln!("invalid configuration: {}", msg);
            ExitCode::from(EXIT_INVALID_CONFIG)
        }
        Err(CmdError::CacheCorrupt(msg)) => {
            eprintln!("cache corruption: {}", msg);
            ExitCode::from(EXIT_CACHE_CORRUPT)
        }
        Err(CmdError::Consistency(msg)) => {
            eprintln!("consistency failure: {}", msg);
            ExitCode::from(EXIT_CONSISTENCY)
        }
    }
}

pub enum CmdError {
    InvalidConfig(String),
    CacheCorrupt(String),
    Consistency(String),
}

fn parse_modes(specs: &[String], cfg: &JobConfig) -> Result<Vec<Mode>, CmdError> {
    let mut specs = specs.to_vec();
    if specs.is_empty() {
        specs = cfg.primes.clone();
    }
    if specs.is_empty() {
        specs.push("rational".into());
    }
    specs
        .iter()
        .map(|s| {
            if s == "rational" || s == "0" {
                Ok(Mode::Rational)
            } else {
                let p: u64 = s
                    .parse()
                    .map_err(|_| CmdError::InvalidConfig(format!("bad prime '{}'", s)))?;
                if !pkl_core::poly::is_prime(p) {
                    return Err(CmdError::InvalidConfig(format!("{} is not prime", p)));
                }
                Ok(Mode::Prime(p))
            }
        })
        .collect()
}

fn parse_i64_list(s: &str) -> Result<Vec<i64>, CmdError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CmdError::InvalidConfig(format!("bad integer list '{}'", s)))
        })
        .collect()
}

fn cmd_pcan(args: PcanArgs, cfg: &JobConfig, rational_only: bool) -> Result<(), CmdError> {
    let kind = match args.kind {
        KindArg::Finite => CoxKind::Finite,
        KindArg::Affine => CoxKind::Affine,
    };
    let rank = args.rank.or(cfg.rank).ok_or_else(|| {
        CmdError::InvalidConfig("--rank is required".into())
    })?;
    let min_rank = if kind == CoxKind::Affine { 2 } else { 1 };
    if rank < min_rank || rank > 8 {
        return Err(CmdError::InvalidConfig(format!("rank {} out of range", rank)));
    }
    let format = args.format.or(cfg.format).unwrap_or(Format::Json);
    let modes = if rational_only {
        vec![Mode::Rational]
    } else {
        parse_modes(&args.primes, cfg)?
    };
    let sys = match kind {
        CoxKind::Finite => CoxeterSystem::finite(rank),
        CoxKind::Affine => CoxeterSystem::affine(rank),
    };
    let real = Realization::new(sys);
    let ctx = PCanCtx::new(LeafCtx::with_parallel(real, !args.sequential));
    let cache_dir = args.cache_dir.or_else(|| cfg.cache_dir.clone());

    let elements = if let Some(word) = &args.word {
        let gens: Vec<u8> = parse_i64_list(word)?
            .into_iter()
            .map(|g| g as u8)
            .collect();
        vec![sys.from_word(&gens)]
    } else {
        let bound = args.max_length.or(cfg.max_length).unwrap_or(0);
        sys.enumerate_up_to_length(bound)
    };

    let mut rows: Vec<PcanRow> = Vec::new();
    for mode in &modes {
        for w in &elements {
            let entry = if let Some(dir) = &cache_dir {
                match cache::lookup(dir, &sys, *mode, w)? {
                    Some(hit) => {
                        ctx.insert_cached(*mode, hit.clone());
                        hit
                    }
                    None => {
                        let fresh = ctx.p_canonical(w, *mode);
                        cache::store(dir, &sys, *mode, &fresh)?;
                        fresh
                    }
                }
            } else {
                ctx.p_canonical(w, *mode)
            };
            rows.push(PcanRow::from_entry(*mode, &entry));
        }
    }
    emit::emit_pcan(&rows, format);
    Ok(())
}

fn cmd_mult(args: MultArgs, cfg: &JobConfig, schur: bool) -> Result<(), CmdError> {
    let e = args.e.or(cfg.e).ok_or_else(|| CmdError::InvalidConfig("--e is required".into()))?;
    if e < 2 {
        return Err(CmdError::InvalidConfig("e must be at least 2".into()));
    }
    let mode = parse_modes(&args.prime.clone().into_iter().collect::<Vec<_>>(), cfg)?[0];
    let charges = match args.charges.as_deref().or(cfg.charges.as_deref()) {
        Some(s) => parse_i64_list(s)?,
        None => vec![0],
    };
    let m: Vec<usize> = match args.m_vector.as_deref().or(cfg.m_vector.as_deref()) {
        Some(s) => parse_i64_list(s)?.into_iter().map(|x| x as usize).collect(),
        None => {
            return Err(CmdError::InvalidConfig("--m-vector is required".into()));
        }
    };
    let format = args.format.or(cfg.format).unwrap_or(Format::Json);
    let level = charges.len();

    let pairs: Vec<(Multipartition, Multipartition)> = match (&args.lambda, &args.mu) {
        (Some(l), Some(u)) => {
            let l = Multipartition::parse(l).map_err(CmdError::InvalidConfig)?;
            let u = Multipartition::parse(u).map_err(CmdError::InvalidConfig)?;
            vec![(l, u)]
        }
        _ => {
            let n = args.n.ok_or_else(|| {
                CmdError::InvalidConfig("--n is required when lambda/mu are omitted".into())
            })?;
            let all = pkl_core::fock::multipartitions(level, n);
            all.iter()
                .flat_map(|l| all.iter().map(move |u| (l.clone(), u.clone())))
                .collect()
        }
    };

    let m_total: usize = m.iter().sum();
    let real = Realization::affine(m_total);
    let ctx = PCanCtx::new(LeafCtx::with_parallel(real, !args.sequential));
    let mut rows = Vec::new();
    for (lambda, mu) in pairs {
        let q = MultiplicityQuery {
            mode,
            e,
            m: m.clone(),
            charges: charges.clone(),
            lambda: lambda.clone(),
            mu: mu.clone(),
        };
        let cell = if schur {
            match schur_decomposition_number(&ctx, &q) {
                Ok(v) => emit::MultCell::Value(v.value, v.conditional),
                Err(err) => {
                    return Err(CmdError::InvalidConfig(format!(
                        "query ({}, {}): {:?}",
                        lambda, mu, err
                    )))
                }
            }
        } else {
            match hecke_decomposition_number(&ctx, &q) {
                Ok(Some(v)) => emit::MultCell::Value(v.value, v.conditional),
                Ok(None) => emit::MultCell::Undefined,
                Err(err) => {
                    return Err(CmdError::InvalidConfig(format!(
                        "query ({}, {}): {:?}",
                        lambda, mu, err
                    )))
                }
            }
        };
        rows.push((lambda, mu, cell));
    }
    emit::emit_mult(&rows, format);
    Ok(())
}

fn cmd_crystal(args: CrystalArgs, cfg: &JobConfig) -> Result<(), CmdError> {
    let e = args.e.or(cfg.e).ok_or_else(|| CmdError::InvalidConfig("--e is required".into()))?;
    let charges = match args.charges.as_deref().or(cfg.charges.as_deref()) {
        Some(s) => parse_i64_list(s)?,
        None => vec![0],
    };
    let lam = args
        .lambda
        .as_deref()
        .ok_or_else(|| CmdError::InvalidConfig("--lambda is required".into()))?;
    let lambda = Multipartition::parse(lam).map_err(CmdError::InvalidConfig)?;
    if lambda.level() != charges.len() {
        return Err(CmdError::InvalidConfig("level mismatch with charges".into()));
    }
    let order = match args.order.as_str() {
        "schur" => ReadingOrder::Schur,
        "negative-level" => ReadingOrder::NegativeLevel,
        o => return Err(CmdError::InvalidConfig(format!("unknown order '{}'", o))),
    };
    let ch = Multicharge::new(e, charges);
    let format = args.format.or(cfg.format).unwrap_or(Format::Json);
    let mut rows = Vec::new();
    for i in 0..e {
        let sig = signature(&lambda, &ch, i, order, false);
        let sig_dual = signature(&lambda, &ch, i, order, true);
        let ops = [
            ("e", CrystalOp::E),
            ("f", CrystalOp::F),
            ("e*", CrystalOp::EStar),
            ("f*", CrystalOp::FStar),
        ];
        let values: Vec<(String, Option<Multipartition>)> = ops
            .iter()
            .map(|(name, op)| (name.to_string(), crystal(*op, &lambda, &ch, i, order)))
            .collect();
        rows.push(emit::CrystalRow {
            residue: i,
            raw: sig.raw_string(),
            reduced: sig.reduced_string(),
            reduced_dual: sig_dual.reduced_string(),
            values,
        });
    }
    emit::emit_crystal(&lambda, &rows, format);
    Ok(())
}

fn cmd_weights(args: WeightsArgs, cfg: &JobConfig) -> Result<(), CmdError> {
    let kind = match args.kind {
        KindArg::Finite => CoxKind::Finite,
        KindArg::Affine => CoxKind::Affine,
    };
    let e = args.e.or(cfg.e).ok_or_else(|| CmdError::InvalidConfig("--e is required".into()))?;
    let rank = args.rank.or(cfg.rank).ok_or_else(|| CmdError::InvalidConfig("--rank is required".into()))?;
    let ctx = match kind {
        CoxKind::Finite => WeightCtx::finite(rank, e),
        CoxKind::Affine => WeightCtx::affine(rank, e),
    };
    if let Some(from) = &args.chain_from {
        let entries = parse_i64_list(from)?;
        let mut w = Weight(entries);
        if !ctx.is_member(&w) {
            return Err(CmdError::InvalidConfig("weight not in the window".into()));
        }
        let j = args.color.unwrap_or(0);
        println!("chain F_{} from {:?}:", j, w.0);
        loop {
            let stab = ctx.stabilizer(&w);
            let gens: Vec<String> = stab.iter().map(|s| format!("s{}", s)).collect();
            println!("  {:?}  stabilizer {{{}}}", w.0, gens.join(","));
            match ctx.littelmann_f(&w, j) {
                Some(next) => w = next,
                None => break,
            }
        }
    }
    if args.dots {
        let real = match kind {
            CoxKind::Finite => Realization::finite(rank),
            CoxKind::Affine => Realization::affine(rank),
        };
        let fam = DotFamily::standard(&real);
        let report = verify_dot_properties(&fam, &ctx, &real);
        println!("dot-family verification (standard family, n={}, e={}):", rank, e);
        for c in &report.checks {
            let status = if c.violations.is_empty() { "ok" } else { "FAIL" };
            println!(
                "  {:<24} {:>5} configurations  {}",
                c.name, c.configurations, status
            );
            for v in &c.violations {
                println!("    violation: {}", v);
            }
        }
        if !report.passed() {
            return Err(CmdError::Consistency("dot-family verification failed".into()));
        }
    }
    Ok(())
}
