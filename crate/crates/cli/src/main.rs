//! `r2k`: bracket evaluation, automorphism algebra, derivation tables, and
//! exhaustive window audits over the graded superconformal algebra.

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use r2k_core::algebra::{bracket, Element};
use r2k_core::automorphisms::{
    aut_apply, aut_compose, aut_inverse, compose_paper, inverse_paper, AutParams, Sign,
};
use r2k_core::derivations::{
    decompose_derivation, leibniz_audit, make_derivation, DerivationRecipe,
};
use r2k_core::gamma::{AdditiveHom, GammaElem, GammaEmbedding, MultiplicativeHom};
use r2k_core::parse::{parse_element, parse_index, parse_scalar};
use r2k_core::report::CheckReport;
use r2k_core::suites;
use r2k_core::table::GradedMapTable;
use serde::Deserialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "r2k", version, about = "exact kernel for the graded N=2 superconformal algebra")]
struct Cli {
    /// Configuration file (rank, mode, generators, default window, format)
    #[arg(long, global = true, default_value = "r2k.json")]
    config: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Law {
    Derived,
    Paper,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Structure,
    Derivations,
    Automorphisms,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum DerKind {
    Scaling,
    OddInner,
    EvenInner,
    Ad,
}

#[derive(Args)]
struct AutFlags {
    /// Multiplicative homomorphism values on the generators, comma-separated
    #[arg(long, default_value = "1")]
    f: String,
    /// +1 or -1
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    xi: i64,
    /// +1 or -1
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    eps: i64,
    /// Index-group shift, comma-separated integers
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    a: String,
    /// Nonzero scalar
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    b: String,
}

#[derive(Subcommand)]
enum Command {
    /// Super-bracket of two elements
    Bracket { e1: String, e2: String },
    /// Apply an automorphism to an element
    ApplyAut {
        #[command(flatten)]
        params: AutFlags,
        expr: String,
    },
    /// Compose two automorphisms at the parameter level
    ComposeAut {
        /// Applied second; "f=..;xi=..;eps=..;a=..;b=.." or the JSON mirror
        #[arg(long)]
        left: String,
        /// Applied first
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value = "derived")]
        law: Law,
    },
    /// Invert an automorphism at the parameter level
    InvertAut {
        #[command(flatten)]
        params: AutFlags,
        #[arg(long, value_enum, default_value = "derived")]
        law: Law,
    },
    /// Build a derivation table and write it as JSON
    MakeDer {
        #[arg(long, value_enum)]
        kind: DerKind,
        /// scaling: additive homomorphism values, comma-separated
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
        /// scaling: odd-part shift
        #[arg(long, allow_hyphen_values = true)]
        e0: Option<String>,
        /// odd-inner: G+ coefficient
        #[arg(long, allow_hyphen_values = true)]
        xi0: Option<String>,
        /// odd-inner: G- coefficient
        #[arg(long, allow_hyphen_values = true)]
        xi1: Option<String>,
        /// even-inner: L-diagonal seed
        #[arg(long, allow_hyphen_values = true)]
        h0: Option<String>,
        /// even-inner: H-component seed
        #[arg(long, allow_hyphen_values = true)]
        eta: Option<String>,
        /// inner families: degree, comma-separated integers
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        /// ad: homogeneous element expression
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
        #[arg(long)]
        window: i64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Validate a derivation table: structure + signed Leibniz audit
    CheckDer {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        window: Option<i64>,
    },
    /// Classify a derivation table into a recipe and verify reconstruction
    DecomposeDer {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        window: Option<i64>,
    },
    /// Run a verification suite over the window
    Audit {
        #[arg(long, value_enum)]
        suite: SuiteName,
        #[arg(long)]
        window: Option<i64>,
        /// Write the JSON report here (stdout shows the configured format)
        #[arg(long)]
        report: Option<PathBuf>,
        /// Worker threads (default: all cores); output is identical regardless
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    rank: usize,
    mode: String,
    #[serde(default)]
    generators: Vec<String>,
    #[serde(default = "default_window")]
    window: i64,
    #[serde(default = "default_format")]
    format: String,
}

fn default_window() -> i64 {
    4
}

fn default_format() -> String {
    "text".into()
}

struct Config {
    emb: GammaEmbedding,
    window: i64,
    json_output: bool,
}

fn load_config(path: &PathBuf) -> anyhow::Result<Config> {
    let file = if path.exists() {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str::<ConfigFile>(&text)
            .with_context(|| format!("parsing {}", path.display()))?
    } else {
        // default: integer grading with generator 1
        ConfigFile {
            rank: 1,
            mode: "rational".into(),
            generators: vec!["1".into()],
            window: default_window(),
            format: default_format(),
        }
    };
    if file.rank == 0 {
        bail!("rank must be at least 1");
    }
    let emb = match file.mode.as_str() {
        "rational" => {
            if file.rank != 1 {
                bail!("rational mode requires rank 1");
            }
            let text = file
                .generators
                .first()
                .map(String::as_str)
                .unwrap_or("1");
            let g = parse_scalar(text, 0)?;
            if g.as_rational().is_none() {
                bail!("rational mode requires a rational generator");
            }
            GammaEmbedding::rational(g)?
        }
        "generic" => {
            if !file.generators.is_empty() {
                let expect: Vec<String> = (1..=file.rank).map(|i| format!("u{}", i)).collect();
                if file.generators != expect {
                    bail!("generic mode generators must be exactly {:?}", expect);
                }
            }
            GammaEmbedding::generic(file.rank)
        }
        other => bail!("unknown mode {:?}", other),
    };
    let json_output = match file.format.as_str() {
        "json" => true,
        "text" => false,
        other => bail!("unknown format {:?}", other),
    };
    Ok(Config {
        emb,
        window: file.window,
        json_output,
    })
}

fn parse_sign(v: i64) -> anyhow::Result<Sign> {
    Sign::from_i64(v).ok_or_else(|| anyhow!("sign must be 1 or -1, got {}", v))
}

fn parse_scalar_list(text: &str, nvars: usize) -> anyhow::Result<Vec<r2k_core::scalar::Scalar>> {
    text.split(',')
        .map(|p| parse_scalar(p.trim(), nvars).map_err(Into::into))
        .collect()
}

fn parse_gamma(text: &str, rank: usize) -> anyhow::Result<GammaElem> {
    Ok(parse_index(text.trim(), rank)?)
}

fn aut_from_flags(cfg: &Config, p: &AutFlags) -> anyhow::Result<AutParams> {
    let nv = cfg.emb.nvars();
    let rank = cfg.emb.rank();
    let f = MultiplicativeHom::new(parse_scalar_list(&p.f, nv)?)?;
    if f.rank() != rank {
        bail!("--f expects {} value(s)", rank);
    }
    Ok(AutParams::new(
        f,
        parse_sign(p.xi)?,
        parse_sign(p.eps)?,
        parse_gamma(&p.a, rank)?,
        parse_scalar(&p.b, nv)?,
    )?)
}

#[derive(Deserialize)]
struct AutJson {
    f: Vec<String>,
    xi: i64,
    eps: i64,
    a: Vec<i64>,
    b: String,
}

/// Accepts the JSON mirror {f, xi, eps, a, b} or the text form
/// "f=v1,v2;xi=1;eps=-1;a=m1,m2;b=s".
fn parse_aut_params(cfg: &Config, text: &str) -> anyhow::Result<AutParams> {
    let nv = cfg.emb.nvars();
    let rank = cfg.emb.rank();
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let raw: AutJson = serde_json::from_str(trimmed).context("automorphism JSON")?;
        let f_vals = raw
            .f
            .iter()
            .map(|s| parse_scalar(s, nv))
            .collect::<Result<Vec<_>, _>>()?;
        let f = MultiplicativeHom::new(f_vals)?;
        if f.rank() != rank || raw.a.len() != rank {
            bail!("automorphism parameters expect rank {}", rank);
        }
        return Ok(AutParams::new(
            f,
            parse_sign(raw.xi)?,
            parse_sign(raw.eps)?,
            GammaElem(raw.a),
            parse_scalar(&raw.b, nv)?,
        )?);
    }
    let mut flags = AutFlags {
        f: "1".into(),
        xi: 1,
        eps: 1,
        a: vec!["0"; rank].join(","),
        b: "1".into(),
    };
    for part in trimmed.split(';') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| anyhow!("expected key=value, got {:?}", part))?;
        let value = value.trim().to_string();
        match key.trim() {
            "f" => flags.f = value,
            "xi" => flags.xi = value.parse().context("xi")?,
            "eps" => flags.eps = value.parse().context("eps")?,
            "a" => flags.a = value,
            "b" => flags.b = value,
            other => bail!("unknown automorphism parameter {:?}", other),
        }
    }
    aut_from_flags(cfg, &flags)
}

fn element_line(e: &Element) -> String {
    e.to_string()
}

fn print_report(cfg: &Config, report: &CheckReport) {
    if cfg.json_output {
        println!("{}", report.to_json());
    } else {
        print!("{}", report);
    }
}

fn report_exit(cfg: &Config, report: &CheckReport) -> ExitCode {
    print_report(cfg, report);
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn require_flag<'a, T>(v: &'a Option<T>, name: &str) -> anyhow::Result<&'a T> {
    v.as_ref().ok_or_else(|| anyhow!("missing required flag --{}", name))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let cfg = load_config(&cli.config)?;
    let emb = &cfg.emb;
    let rank = emb.rank();
    let nv = emb.nvars();
    match cli.command {
        Command::Bracket { e1, e2 } => {
            let x = parse_element(&e1, rank, nv)?;
            let y = parse_element(&e2, rank, nv)?;
            println!("{}", element_line(&bracket(emb, &x, &y)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::ApplyAut { params, expr } => {
            let p = aut_from_flags(&cfg, &params)?;
            let x = parse_element(&expr, rank, nv)?;
            println!("{}", element_line(&aut_apply(emb, &p, &x)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::ComposeAut { left, right, law } => {
            let p1 = parse_aut_params(&cfg, &left)?;
            let p2 = parse_aut_params(&cfg, &right)?;
            let derived = aut_compose(&p1, &p2)?;
            match law {
                Law::Derived => println!("derived: {}", derived),
                Law::Paper => println!("paper:   {}", compose_paper(&p1, &p2)?),
                Law::Both => {
                    let paper = compose_paper(&p1, &p2)?;
                    println!("derived: {}", derived);
                    println!("paper:   {}", paper);
                    let verdict = if paper == derived {
                        "agree"
                    } else {
                        "disagree (derived law is the oracle-validated one)"
                    };
                    println!("verdict: {}", verdict);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::InvertAut { params, law } => {
            let p = aut_from_flags(&cfg, &params)?;
            let derived = aut_inverse(&p);
            match law {
                Law::Derived => println!("derived: {}", derived),
                Law::Paper => println!("paper:   {}", inverse_paper(&p)),
                Law::Both => {
                    let paper = inverse_paper(&p);
                    let id = AutParams::identity(rank, nv);
                    println!("derived: {}", derived);
                    println!("paper:   {}", paper);
                    let derived_ok = aut_compose(&p, &derived)? == id
                        && aut_compose(&derived, &p)? == id;
                    let paper_ok =
                        aut_compose(&p, &paper)? == id && aut_compose(&paper, &p)? == id;
                    println!(
                        "verdict: derived {}, paper {}",
                        if derived_ok { "inverts" } else { "FAILS" },
                        if paper_ok { "inverts" } else { "FAILS" }
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::MakeDer {
            kind,
            phi,
            e0,
            xi0,
            xi1,
            h0,
            eta,
            gamma,
            element,
            window,
            out,
        } => {
            let recipe = match kind {
                DerKind::Scaling => {
                    let values = parse_scalar_list(require_flag(&phi, "phi")?, nv)?;
                    if values.len() != rank {
                        bail!("--phi expects {} value(s)", rank);
                    }
                    let e0 = match &e0 {
                        Some(t) => parse_scalar(t, nv)?,
                        None => r2k_core::scalar::Scalar::zero(nv),
                    };
                    DerivationRecipe::Scaling {
                        phi: AdditiveHom::new(values),
                        e0,
                    }
                }
                DerKind::OddInner => DerivationRecipe::OddInner {
                    xi0: parse_scalar(require_flag(&xi0, "xi0")?, nv)?,
                    xi1: parse_scalar(require_flag(&xi1, "xi1")?, nv)?,
                    gamma: parse_gamma(require_flag(&gamma, "gamma")?, rank)?,
                },
                DerKind::EvenInner => DerivationRecipe::EvenInner {
                    h0: parse_scalar(require_flag(&h0, "h0")?, nv)?,
                    eta: parse_scalar(require_flag(&eta, "eta")?, nv)?,
                    gamma: parse_gamma(require_flag(&gamma, "gamma")?, rank)?,
                },
                DerKind::Ad => DerivationRecipe::Ad(parse_element(
                    require_flag(&element, "element")?,
                    rank,
                    nv,
                )?),
            };
            let table = make_derivation(emb, &recipe, window)?;
            std::fs::write(&out, table.to_json())
                .with_context(|| format!("writing {}", out.display()))?;
            println!("wrote table (degree {}, {}) to {}", table.degree, table.parity, out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckDer { table, window } => {
            let text = std::fs::read_to_string(&table)
                .with_context(|| format!("reading {}", table.display()))?;
            let t = GradedMapTable::from_json(&text, nv)?;
            let n = window.unwrap_or(t.window);
            let mut report = t.validate(emb);
            report.merge(leibniz_audit(emb, &t, n)?);
            Ok(report_exit(&cfg, &report))
        }
        Command::DecomposeDer { table, window } => {
            let text = std::fs::read_to_string(&table)
                .with_context(|| format!("reading {}", table.display()))?;
            let mut t = GradedMapTable::from_json(&text, nv)?;
            if let Some(n) = window {
                t.window = t.window.min(n);
            }
            match decompose_derivation(emb, &t) {
                Ok(DerivationRecipe::Scaling { phi, e0 }) => {
                    let vals: Vec<String> =
                        phi.values.iter().map(|v| v.to_string()).collect();
                    println!("scaling: phi = [{}], e0 = {}", vals.join(","), e0);
                    Ok(ExitCode::SUCCESS)
                }
                Ok(DerivationRecipe::OddInner { xi0, xi1, gamma }) => {
                    println!("odd-inner: xi0 = {}, xi1 = {}, gamma = {}", xi0, xi1, gamma);
                    Ok(ExitCode::SUCCESS)
                }
                Ok(DerivationRecipe::EvenInner { h0, eta, gamma }) => {
                    println!("even-inner: h0 = {}, eta = {}, gamma = {}", h0, eta, gamma);
                    Ok(ExitCode::SUCCESS)
                }
                Ok(DerivationRecipe::Ad(x)) => {
                    println!("ad: {}", x);
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("not classifiable: {}", e);
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Audit {
            suite,
            window,
            report,
            threads,
        } => {
            if let Some(t) = threads {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build_global()
                    .context("thread pool")?;
            }
            let n = window.unwrap_or(cfg.window);
            let r = match suite {
                SuiteName::Structure => suites::suite_structure(emb, n),
                SuiteName::Derivations => suites::suite_derivations(emb, n)?,
                SuiteName::Automorphisms => suites::suite_automorphisms(emb, n)?,
                SuiteName::All => suites::suite_all(emb, n)?,
            };
            if let Some(path) = report {
                std::fs::write(&path, r.to_json())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(report_exit(&cfg, &r))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
