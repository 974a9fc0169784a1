use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tqi::cobweight::{MaslovConvention, TorusCobordism};
use tqi::cyclotome::{CycNum, EtaSign, RingContext};
use tqi::skein::{Evaluator, FramedColoredDiagram};
use tqi::torusrep::{bowen_franks, bowen_franks_localized, TorusRep, TorusSpace, Word};
use tqi::veritas::{
    check_almost_integrality, check_betti_integrality, check_cover_congruence, check_cover_pair,
    check_parity_subring, check_parity_subring_at, default_corpus, divisibility_order, find_preset,
    run_suite, surgery_crosscheck, Engine, ManifoldPreset, SuiteConfig, VerificationReport,
};
use tqi::{Error, Result};

/// `println!` that ignores a closed stdout.
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "tqi",
    version,
    about = "Exact SO(3) quantum invariants at odd primes"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Closed-manifold invariant of a surgery diagram or preset.
    Invariant {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        source: Source,
    },
    /// Run one integrality, parity or congruence check.
    Verify {
        #[arg(value_enum)]
        check: VerifyKind,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        source: Source,
        /// Evaluate the parity check at this weight instead of the natural one.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<i64>,
        /// Cover degree, a prime power.
        #[arg(long, short = 'd', default_value_t = 2)]
        degree: u64,
        /// Surgery diagram of a user-supplied cover of `--input`.
        #[arg(long)]
        cover: Option<PathBuf>,
        /// Defect of the user-supplied cover.
        #[arg(long, allow_hyphen_values = true)]
        defect: Option<i64>,
    },
    /// Bowen-Franks invariant factors of a transfer matrix.
    Bf {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        word: String,
    },
    /// Transfer matrix and mapping-torus invariant of a torus cylinder.
    Torus {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        weight: i64,
        /// Compare against a surgery presentation (parabolic monodromies only).
        #[arg(long)]
        surgery_crosscheck: bool,
    },
    /// Largest power of D dividing the normalized invariant.
    Divisibility {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        source: Source,
    },
    /// Every check over a corpus and list of primes.
    Suite {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in manifold presets.
    Presets,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 5)]
    p: u64,
    #[arg(long)]
    json: bool,
    #[arg(long, value_enum, default_value_t = Convention::Walker)]
    maslov: Convention,
    #[arg(long, value_enum, default_value_t = Sign::PositiveReal)]
    eta_sign: Sign,
}

#[derive(Args)]
struct Source {
    /// Diagram JSON file.
    #[arg(long, conflicts_with = "preset")]
    input: Option<PathBuf>,
    /// Preset name, e.g. S3, L(3,1), trefoil(+1), bundle(TS).
    #[arg(long)]
    preset: Option<String>,
    /// Cut-number lower bound for a diagram input.
    #[arg(long)]
    cut_number: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Integrality,
    Betti,
    Parity,
    Congruence,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    Walker,
    Turaev,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sign {
    PositiveReal,
    NegativeReal,
}

impl Common {
    fn engine(&self) -> Result<Engine> {
        let conv = match self.maslov {
            Convention::Walker => MaslovConvention::Walker,
            Convention::Turaev => MaslovConvention::Turaev,
        };
        Engine::with_options(self.p, conv, self.sign(), None)
    }

    fn sign(&self) -> EtaSign {
        match self.eta_sign {
            Sign::PositiveReal => EtaSign::PositiveReal,
            Sign::NegativeReal => EtaSign::NegativeReal,
        }
    }
}

fn read_diagram(path: &Path) -> Result<FramedColoredDiagram> {
    FramedColoredDiagram::from_json_str(&std::fs::read_to_string(path)?)
}

fn load(source: &Source) -> Result<ManifoldPreset> {
    match (&source.input, &source.preset) {
        (Some(path), _) => ManifoldPreset::surgery(
            &path.display().to_string(),
            read_diagram(path)?,
            source.cut_number,
        ),
        (None, Some(name)) => find_preset(name),
        (None, None) => Err(Error::InvalidInput(
            "one of --input or --preset is required".into(),
        )),
    }
}

fn cyc_json(v: &CycNum) -> serde_json::Value {
    json!({ "value": v.to_json(), "display": v.to_string() })
}

fn emit_report(r: &VerificationReport, as_json: bool) -> bool {
    if as_json {
        out!("{}", r.to_json_string());
    } else {
        out!("{}", r.summary());
        for (k, w) in &r.witnesses {
            out!("  {k}: {}", witness_display(r.p, w));
        }
        for n in &r.notes {
            out!("  note: {n}");
        }
    }
    r.verdict
}

fn witness_display(p: u64, w: &tqi::cyclotome::CycJson) -> String {
    RingContext::new(p)
        .and_then(|ctx| CycNum::from_json(&ctx, w))
        .map(|v| v.to_string())
        .unwrap_or_else(|e| format!("<{e}>"))
}

fn invariant(common: &Common, source: &Source) -> Result<bool> {
    let mut eng = common.engine()?;
    let (name, value, weight) = match &source.input {
        Some(path) if source.preset.is_none() => {
            let d = read_diagram(path)?;
            let mut ev = Evaluator::with_options(eng.context(), common.sign(), None)?;
            let v = ev.closed_invariant(&d)?;
            (path.display().to_string(), v, d.weight)
        }
        _ => {
            let m = load(source)?;
            let (v, w) = eng.invariant(&m)?;
            (m.name, v, w)
        }
    };
    if common.json {
        let out = json!({
            "manifold": name,
            "p": common.p,
            "weight": weight,
            "invariant": cyc_json(&value),
        });
        out!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        out!("{name} p={} weight={weight}", common.p);
        out!("  {value}");
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    check: VerifyKind,
    common: &Common,
    source: &Source,
    weight: Option<i64>,
    degree: u64,
    cover: Option<&Path>,
    defect: Option<i64>,
) -> Result<bool> {
    let mut eng = common.engine()?;
    let m = load(source)?;
    let r = match check {
        VerifyKind::Integrality => check_almost_integrality(&mut eng, &m)?,
        VerifyKind::Betti => check_betti_integrality(&mut eng, &m)?,
        VerifyKind::Parity => match weight {
            Some(w) => check_parity_subring_at(&mut eng, &m, w)?,
            None => check_parity_subring(&mut eng, &m)?,
        },
        VerifyKind::Congruence => match cover {
            None => check_cover_congruence(&mut eng, &m, degree)?,
            Some(path) => {
                let def = defect
                    .ok_or_else(|| Error::InvalidInput("--cover requires --defect".into()))?;
                let c = ManifoldPreset::surgery(
                    &path.display().to_string(),
                    read_diagram(path)?,
                    None,
                )?;
                let base = eng.invariant(&m)?;
                let cov = eng.invariant(&c)?;
                check_cover_pair(&mut eng, &m, base, cov, c.beta1, degree, def)?
            }
        },
    };
    Ok(emit_report(&r, common.json))
}

fn bf(common: &Common, word: &str) -> Result<bool> {
    let w = Word::parse(word)?;
    let space = TorusSpace::with_sign(&RingContext::new(common.p)?, common.sign())?;
    let rep = TorusRep::new(&space);
    let m = rep.word_product(&w);
    let (ring, factors) = if m.is_integral() {
        ("Z".to_string(), bowen_franks(&m)?)
    } else {
        (
            format!("Z[1/{}]", common.p),
            bowen_franks_localized(&m.entries)?,
        )
    };
    let nontrivial: Vec<String> = factors
        .iter()
        .filter(|f| **f != 1.into())
        .map(|f| f.to_string())
        .collect();
    if common.json {
        let out = json!({
            "p": common.p,
            "word": w.to_string(),
            "ring": ring,
            "rank": factors.len(),
            "invariant_factors": factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        });
        out!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        out!(
            "word {w} p={} over {ring}, rank {}",
            common.p,
            factors.len()
        );
        if nontrivial.is_empty() {
            out!("  coker(M - 1) = 0");
        } else {
            let parts: Vec<String> = nontrivial
                .iter()
                .map(|f| {
                    if f == "0" {
                        ring.clone()
                    } else {
                        format!("{ring}/{f}")
                    }
                })
                .collect();
            out!("  coker(M - 1) = {}", parts.join(" + "));
        }
    }
    Ok(true)
}

fn torus(common: &Common, word: &str, weight: i64, crosscheck: bool) -> Result<bool> {
    let mut eng = common.engine()?;
    let w = Word::parse(word)?;
    let cob = TorusCobordism::cylinder(w.matrix(), weight)?;
    let z = eng.rep().evaluate(&w, &cob)?;
    let trace = eng.rep().mapping_torus_invariant(&cob)?;
    let cw = eng.rep().closure_weight(&cob)?;
    let check = if crosscheck {
        Some(surgery_crosscheck(&mut eng, &cob)?)
    } else {
        None
    };
    let agree = check.as_ref().map(|(a, b)| a == b);
    if common.json {
        let entries: Vec<Vec<_>> = z
            .entries
            .iter()
            .map(|row| row.iter().map(|x| x.to_json()).collect())
            .collect();
        let mut out = json!({
            "p": common.p,
            "word": w.to_string(),
            "monodromy": cob.monodromy,
            "weight": weight,
            "closure_weight": cw,
            "transfer_matrix": entries,
            "mapping_torus_invariant": cyc_json(&trace),
        });
        if let Some((_, s)) = &check {
            out["surgery_invariant"] = cyc_json(s);
            out["agree"] = json!(agree);
        }
        out!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        out!(
            "word {w} p={} monodromy {:?} weight {weight}",
            common.p,
            cob.monodromy
        );
        for (i, row) in z.entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                out!("  Z[{i}][{j}] = {x}");
            }
        }
        out!("closure weight {cw}");
        out!("trace  {trace}");
        if let Some((_, s)) = &check {
            out!("surgery {s}");
            out!(
                "{}",
                if agree == Some(true) {
                    "agree"
                } else {
                    "DISAGREE"
                }
            );
        }
    }
    Ok(agree.unwrap_or(true))
}

fn divisibility(common: &Common, source: &Source) -> Result<bool> {
    let mut eng = common.engine()?;
    let m = load(source)?;
    let (k, r) = divisibility_order(&mut eng, &m)?;
    if !common.json {
        match k {
            Some(k) => out!("k = {k}"),
            None => out!("k = infinity (invariant vanishes)"),
        }
    }
    Ok(emit_report(&r, common.json))
}

fn suite(config: Option<&Path>, as_json: bool) -> Result<bool> {
    let cfg = match config {
        Some(path) => SuiteConfig::from_file(path)?,
        None => SuiteConfig::default(),
    };
    let s = run_suite(&cfg)?;
    if as_json {
        out!("{}", s.to_json_string());
    } else {
        for r in &s.reports {
            out!("{}", r.summary());
        }
        for k in &s.skipped {
            out!("[SKIP] {} p={} {}: {}", k.check, k.p, k.manifold, k.reason);
        }
        out!(
            "{} passed, {} failed, {} skipped",
            s.passed,
            s.failed,
            s.skipped.len()
        );
    }
    Ok(s.all_pass)
}

fn presets() -> Result<bool> {
    for m in default_corpus() {
        let cut = m
            .cut_number
            .map(|c| c.to_string())
            .unwrap_or_else(|| "?".into());
        out!(
            "{:<16} b1={} cut>={} cover={:?}",
            m.name,
            m.beta1,
            cut,
            m.cover
        );
    }
    out!("also: L(n,1), bundle(WORD), borromean(0,0,a)");
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Invariant { common, source } => invariant(common, source),
        Cmd::Verify {
            check,
            common,
            source,
            weight,
            degree,
            cover,
            defect,
        } => verify(
            *check,
            common,
            source,
            *weight,
            *degree,
            cover.as_deref(),
            *defect,
        ),
        Cmd::Bf { common, word } => bf(common, word),
        Cmd::Torus {
            common,
            word,
            weight,
            surgery_crosscheck,
        } => torus(common, word, *weight, *surgery_crosscheck),
        Cmd::Divisibility { common, source } => divisibility(common, source),
        Cmd::Suite { config, json } => suite(config.as_deref(), *json),
        Cmd::Presets => presets(),
    };
    match res {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
