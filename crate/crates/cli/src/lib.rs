//! Command-line front end: tables, verification suites, cyclic sieving
//! censuses and the exotic orbit listing.

pub mod commands;
pub mod output;

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxkrew::coxeter::DEFAULT_CHAIN_BUDGET;
use coxkrew::kreweras::CoxeterType;

pub const BUDGET_ENV: &str = "COXKREW_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "coxkrew", version, about = "q-Kreweras numbers of coincidental Coxeter groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kreweras numbers of every irreducible, one row per label
    Tables(Common),
    /// Integrality, positivity, refinement, Catalan-sum and BC cross-checks
    Verify(Common),
    /// Fixed multichains against root-of-unity specializations
    Css(Common),
    /// Type BC parametrization: iota, critical values, orbit counts
    Orbits(Common),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    A,
    Bc,
    H3,
    I2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

/// `N` or `LO..HI`, inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<u32>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}"));
        let span = match s.split_once("..") {
            Some((lo, hi)) => parse(lo)?..=parse(hi.trim_start_matches('='))?,
            None => {
                let v = parse(s)?;
                v..=v
            }
        };
        if span.is_empty() {
            return Err(format!("empty range {s}"));
        }
        Ok(Span(span))
    }
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Coxeter family; without it the built-in grid is used
    #[arg(long = "type", value_enum)]
    pub family: Option<Family>,
    /// Number of letters for type a (A_{N-1}), rank for bc; N or LO..HI
    #[arg(long)]
    pub rank: Option<Span>,
    /// Dihedral parameter for i2; M or LO..HI
    #[arg(long)]
    pub m: Option<Span>,
    /// A single t
    #[arg(long, conflicts_with = "t_range")]
    pub t: Option<u32>,
    /// Inclusive t range LO..HI
    #[arg(long = "t-range")]
    pub t_range: Option<Span>,
    /// Fuss parameter for css; S or LO..HI
    #[arg(long)]
    pub s: Option<Span>,
    /// Affine-in-t tables for h3 and i2
    #[arg(long)]
    pub symbolic: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Largest number of chains enumerated per cell
    #[arg(long)]
    pub budget: Option<u64>,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

/// Failure kinds and their exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// an identity did not hold; the document is still printed
    Identity,
    Config(String),
    SizeLimit(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Identity => 1,
            Failure::Config(_) => 2,
            Failure::SizeLimit(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Identity => f.write_str("identity check failed"),
            Failure::Config(s) => write!(f, "configuration error: {s}"),
            Failure::SizeLimit(s) => write!(f, "size limit: {s}"),
        }
    }
}

impl Common {
    /// The groups selected by `--type` with `--rank`/`--m`, or `None` for
    /// the default grid.
    pub fn types(&self) -> Result<Option<Vec<CoxeterType>>, Failure> {
        let Some(family) = self.family else {
            if self.rank.is_some() || self.m.is_some() {
                return Err(Failure::Config("--rank/--m need --type".into()));
            }
            return Ok(None);
        };
        let need = |span: &Option<Span>, flag: &str| {
            span.clone()
                .map(|s| s.0)
                .ok_or_else(|| Failure::Config(format!("--type {family:?} needs {flag}")))
        };
        let types: Vec<CoxeterType> = match family {
            Family::A => need(&self.rank, "--rank")?.map(CoxeterType::A).collect(),
            Family::Bc => need(&self.rank, "--rank")?.map(CoxeterType::BC).collect(),
            Family::H3 => vec![CoxeterType::H3],
            Family::I2 => need(&self.m, "--m")?.map(CoxeterType::I2).collect(),
        };
        for ty in &types {
            ty.validate().map_err(|e| Failure::Config(e.to_string()))?;
        }
        Ok(Some(types))
    }

    /// Explicit t values, if any were given.
    pub fn t_values(&self) -> Result<Option<Vec<u32>>, Failure> {
        let ts: Option<Vec<u32>> = match (&self.t, &self.t_range) {
            (Some(t), _) => Some(vec![*t]),
            (None, Some(span)) => Some(span.0.clone().collect()),
            (None, None) => None,
        };
        if ts.as_ref().is_some_and(|v| v.contains(&0)) {
            return Err(Failure::Config("t must be positive".into()));
        }
        Ok(ts)
    }

    pub fn s_values(&self) -> Result<Option<Vec<u32>>, Failure> {
        let s = self.s.clone().map(|s| s.0.collect::<Vec<_>>());
        if s.as_ref().is_some_and(|v| v.contains(&0)) {
            return Err(Failure::Config("s must be positive".into()));
        }
        Ok(s)
    }

    /// `--budget`, else `COXKREW_BUDGET`, else the library default.
    pub fn budget(&self) -> Result<u64, Failure> {
        let budget = match self.budget {
            Some(b) => b,
            None => match std::env::var(BUDGET_ENV) {
                Ok(v) => v
                    .trim()
                    .parse()
                    .map_err(|_| Failure::Config(format!("{BUDGET_ENV}={v} is not a number")))?,
                Err(_) => DEFAULT_CHAIN_BUDGET,
            },
        };
        if budget == 0 {
            return Err(Failure::Config("budget must be at least 1".into()));
        }
        Ok(budget)
    }

    pub fn pool(&self) -> Result<rayon::ThreadPool, Failure> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| Failure::Config(e.to_string()))
    }
}

/// Runs a command, returning the rendered document and the failure, if any.
/// A document accompanies `Ok` and `Failure::Identity`.
pub fn run(cli: &Cli) -> (Option<String>, Result<(), Failure>) {
    let (cfg, result) = match &cli.command {
        Command::Tables(c) => (c, commands::tables(c)),
        Command::Verify(c) => (c, commands::verify(c)),
        Command::Css(c) => (c, commands::css(c)),
        Command::Orbits(c) => (c, commands::orbits(c)),
    };
    match result {
        Ok(doc) => {
            let failed = doc.failed;
            let text = output::render(&doc, cfg.format);
            (Some(text), if failed { Err(Failure::Identity) } else { Ok(()) })
        }
        Err(e) => (None, Err(e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("4".parse::<Span>().unwrap(), Span(4..=4));
        assert_eq!("2..5".parse::<Span>().unwrap(), Span(2..=5));
        assert_eq!("2..=5".parse::<Span>().unwrap(), Span(2..=5));
        assert!("5..2".parse::<Span>().is_err());
        assert!("x".parse::<Span>().is_err());
    }

    #[test]
    fn exit_codes_are_stable() {
        assert_eq!(Failure::Identity.exit_code(), 1);
        assert_eq!(Failure::Config(String::new()).exit_code(), 2);
        assert_eq!(Failure::SizeLimit(String::new()).exit_code(), 3);
    }

    #[test]
    fn type_selection() {
        let cli = Cli::try_parse_from(["coxkrew", "tables", "--type", "a", "--rank", "3..4"]).unwrap();
        let Command::Tables(c) = cli.command else { panic!() };
        assert_eq!(c.types().unwrap(), Some(vec![CoxeterType::A(3), CoxeterType::A(4)]));
        let cli = Cli::try_parse_from(["coxkrew", "css", "--rank", "3"]).unwrap();
        let Command::Css(c) = cli.command else { panic!() };
        assert!(matches!(c.types(), Err(Failure::Config(_))));
    }
}
