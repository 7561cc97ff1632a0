//! Batch front end: argument parsing, dispatch to the checks, and JSON
//! reports with a fixed schema `{verb, inputs, verdict, data, elapsed_ms}`.

use std::time::Instant;

use bent_ice::asm::{bijection_check, state_to_matrix};
use bent_ice::character::{
    character_theorem_check, family_character, mu_of, tokuyama_check, weyl_bijection_check,
};
use bent_ice::identities::{
    bent_indices, divisibility_check, okada_partition, okada_product, quotient_symmetry_check, rho_check,
};
use bent_ice::relations::{
    bend_ybe_check, caduceus_check, fish_check, jellyfish_check, ybe_check, FishVariant, JellyfishVariant,
    Verdict as RelationVerdict,
};
use bent_ice::state::state_weights;
use bent_ice::weights::Regime;
use bent_ice::{build_model, enumerate_states, partition_function, tikz, Caps, Family, IceError, RowLabel};
use bent_ice::{StrictPartition, WeightScheme};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_CAP: i32 = 4;
/// Unknown verbs and malformed flags.
pub const EXIT_USAGE: i32 = 5;

#[derive(Parser, Debug, Clone)]
#[command(name = "bent-ice", version, about = "Exact checks on bent six-vertex lattice models")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    /// Largest number of parts to enumerate (default from BENT_ICE_CAPS, else 4).
    #[arg(long, global = true)]
    pub max_n: Option<u8>,
    /// Largest part to enumerate (default from BENT_ICE_CAPS, else 8).
    #[arg(long, global = true)]
    pub max_cols: Option<u32>,
    /// Worker threads; the global pool when absent.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Seed for randomized probes.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ModelArgs {
    /// A, B, Bstar, C, Cstar, D or BC.
    #[arg(long)]
    pub family: Option<String>,
    /// Comma-separated strictly decreasing parts, e.g. 3,1.
    #[arg(long)]
    pub lambda: Option<String>,
    /// Rank, for checks that run at λ = ρ or on local diagrams.
    #[arg(long)]
    pub n: Option<u8>,
    /// generic, deformation, okada, character, tokuyama or ones.
    #[arg(long)]
    pub scheme: Option<String>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Verb {
    /// List the admissible states of a model.
    Enumerate(ModelArgs),
    /// Partition function under a weight scheme.
    Partition(ModelArgs),
    /// Check one relation or identity.
    Verify {
        #[arg(value_enum)]
        relation: Relation,
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Sign matrices of all states.
    Asm(ModelArgs),
    /// Weyl character for `μ = λ − ρ` with the state bijection.
    Character(ModelArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Ybe,
    Bend,
    Fish,
    Jellyfish,
    Caduceus,
    Divisibility,
    Rho,
    Okada,
    Bijection,
    Character,
    Tokuyama,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Emit {
    Json,
    Latex,
    Tikz,
    Count,
}

/// Fully resolved run settings.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub verb: String,
    pub relation: Option<Relation>,
    pub family: Option<String>,
    pub lambda: Option<String>,
    pub n: Option<u8>,
    pub scheme: Option<String>,
    pub emit: Emit,
    pub caps: Caps,
    pub workers: Option<usize>,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Self {
        let (verb, relation, model) = match &cli.verb {
            Verb::Enumerate(m) => ("enumerate", None, m),
            Verb::Partition(m) => ("partition", None, m),
            Verb::Verify { relation, model } => ("verify", Some(*relation), model),
            Verb::Asm(m) => ("asm", None, m),
            Verb::Character(m) => ("character", None, m),
        };
        let g = &cli.global;
        let mut caps = Caps::from_env();
        if let Some(n) = g.max_n {
            caps.max_n = n;
        }
        if let Some(c) = g.max_cols {
            caps.max_cols = c;
        }
        RunConfig {
            verb: verb.into(),
            relation,
            family: model.family.clone(),
            lambda: model.lambda.clone(),
            n: model.n,
            scheme: model.scheme.clone(),
            emit: g.emit,
            caps,
            workers: g.workers,
            seed: g.seed,
        }
    }

    fn family_or(&self, default: Family) -> Result<Family, IceError> {
        self.family.as_deref().map_or(Ok(default), str::parse)
    }

    fn family(&self) -> Result<Family, IceError> {
        self.family.as_deref().ok_or_else(|| IceError::Input("--family is required".into()))?.parse()
    }

    fn lambda(&self) -> Result<StrictPartition, IceError> {
        let s = self.lambda.as_deref().ok_or_else(|| IceError::Input("--lambda is required".into()))?;
        s.parse().map_err(|e| match e {
            IceError::Input(m) => IceError::Input(format!(
                "--lambda takes comma-separated strictly decreasing positive integers: {m}"
            )),
            other => other,
        })
    }

    /// `--n`, else the length of `--lambda`, else `default`.
    fn rank(&self, default: u8) -> Result<u8, IceError> {
        let n = match (self.n, &self.lambda) {
            (Some(n), _) => n,
            (None, Some(_)) => self.lambda()?.n(),
            (None, None) => default,
        };
        if n == 0 {
            return Err(IceError::Input("--n must be at least 1".into()));
        }
        if n > self.caps.max_n {
            return Err(IceError::CapExceeded(format!("n = {n} exceeds n <= {}", self.caps.max_n)));
        }
        Ok(n)
    }

    fn scheme(&self, family: Family, n: u8, default: &str) -> Result<WeightScheme, IceError> {
        WeightScheme::by_name(self.scheme.as_deref().unwrap_or(default), family, n)
    }

    fn inputs(&self) -> Value {
        json!({
            "relation": self.relation,
            "family": self.family,
            "lambda": self.lambda,
            "n": self.n,
            "scheme": self.scheme,
            "emit": self.emit,
            "caps": self.caps,
            "workers": self.workers,
            "seed": self.seed,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub verb: String,
    pub inputs: Value,
    pub verdict: Verdict,
    pub data: Value,
    pub elapsed_ms: u64,
}

impl Report {
    /// The report without its timing, for reproducibility comparisons.
    pub fn canonical(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("report is an object").remove("elapsed_ms");
        serde_json::to_string(&v).expect("report serializes")
    }
}

/// Result of one run: the report, the text payload for non-JSON formats, and
/// the process exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub text: Option<String>,
    pub exit_code: i32,
}

impl Outcome {
    /// What goes to standard output.
    pub fn stdout(&self) -> String {
        match &self.text {
            Some(t) => t.clone(),
            None => serde_json::to_string_pretty(&self.report).expect("report serializes"),
        }
    }
}

struct Payload {
    pass: bool,
    data: Value,
    latex: Option<String>,
    tikz: Option<String>,
    count: Option<usize>,
}

impl Payload {
    fn new(pass: bool, data: Value) -> Self {
        Payload { pass, data, latex: None, tikz: None, count: None }
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let start = Instant::now();
    let result = match cfg.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| IceError::Input(format!("cannot start {w} workers: {e}")))
            .and_then(|pool| pool.install(|| dispatch(cfg))),
        None => dispatch(cfg),
    };
    let result = result.and_then(|p| {
        let text = match cfg.emit {
            Emit::Json => None,
            Emit::Latex => Some(p.latex.clone()),
            Emit::Tikz => Some(p.tikz.clone()),
            Emit::Count => Some(p.count.map(|c| c.to_string())),
        };
        match text {
            Some(None) => {
                Err(IceError::Input(format!("--emit {:?} is not available here", cfg.emit).to_lowercase()))
            }
            Some(Some(t)) => Ok((p, Some(t))),
            None => Ok((p, None)),
        }
    });
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let (verdict, data, text, exit_code) = match result {
        Ok((p, text)) => {
            let (v, code) = if p.pass { (Verdict::Pass, EXIT_PASS) } else { (Verdict::Fail, EXIT_FAIL) };
            (v, p.data, text, code)
        }
        Err(e) => {
            let code = match e {
                IceError::CapExceeded(_) => EXIT_CAP,
                IceError::Verification(_) => EXIT_FAIL,
                _ => EXIT_INPUT,
            };
            let v = if code == EXIT_FAIL { Verdict::Fail } else { Verdict::Error };
            (v, json!({ "error": e.to_string() }), None, code)
        }
    };
    let report = Report { verb: cfg.verb.clone(), inputs: cfg.inputs(), verdict, data, elapsed_ms };
    Outcome { report, text, exit_code }
}

/// Parses arguments and runs; clap failures become usage errors.
pub fn run_args<I, T>(args: I) -> Result<Outcome, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    Ok(run(&RunConfig::from_cli(&cli)))
}

fn dispatch(cfg: &RunConfig) -> Result<Payload, IceError> {
    match (cfg.verb.as_str(), cfg.relation) {
        ("enumerate", _) => enumerate(cfg),
        ("partition", _) => partition(cfg),
        ("asm", _) => asm(cfg),
        ("character", _) => character(cfg),
        ("verify", Some(r)) => verify(cfg, r),
        (v, _) => Err(IceError::Input(format!("unknown verb `{v}`"))),
    }
}

fn enumerate(cfg: &RunConfig) -> Result<Payload, IceError> {
    let family = cfg.family()?;
    let lambda = cfg.lambda()?;
    let spec = build_model(family, &lambda);
    let states = enumerate_states(&spec, &cfg.caps)?;
    let scheme = cfg.scheme(family, lambda.n(), "generic")?;
    let weights = state_weights(&spec.lattice, &states, &scheme)?;
    let data = json!({
        "count": states.len(),
        "boundary": spec.boundary_json(),
        "states": states.iter().map(|s| s.to_json(&spec)).collect::<Vec<_>>(),
    });
    let mut p = Payload::new(true, data);
    p.count = Some(states.len());
    p.tikz = Some(states.iter().map(|s| tikz::emit(&spec, s)).collect::<Vec<_>>().join("\n"));
    p.latex = Some(weights.iter().map(|w| w.to_latex()).collect::<Vec<_>>().join("\n"));
    Ok(p)
}

fn partition(cfg: &RunConfig) -> Result<Payload, IceError> {
    let family = cfg.family()?;
    let lambda = cfg.lambda()?;
    let spec = build_model(family, &lambda);
    let states = enumerate_states(&spec, &cfg.caps)?;
    let scheme = cfg.scheme(family, lambda.n(), "generic")?;
    let z = partition_function(&spec, &scheme, &cfg.caps)?;
    let data = json!({
        "states": states.len(),
        "z": z.to_json(),
        "text": z.to_string(),
        "latex": z.to_latex(),
    });
    let mut p = Payload::new(true, data);
    p.count = Some(states.len());
    p.latex = Some(z.to_latex());
    Ok(p)
}

fn asm(cfg: &RunConfig) -> Result<Payload, IceError> {
    let family = cfg.family()?;
    let lambda = cfg.lambda()?;
    let spec = build_model(family, &lambda);
    let states = enumerate_states(&spec, &cfg.caps)?;
    let matrices = states.iter().map(|s| state_to_matrix(&spec, s)).collect::<Result<Vec<_>, _>>()?;
    let data = json!({
        "count": matrices.len(),
        "matrices": matrices.iter().map(|m| m.to_json()).collect::<Vec<_>>(),
    });
    let mut p = Payload::new(true, data);
    p.count = Some(matrices.len());
    Ok(p)
}

fn character(cfg: &RunConfig) -> Result<Payload, IceError> {
    let family = cfg.family()?;
    let lambda = cfg.lambda()?;
    let n = lambda.n();
    let mu = mu_of(&lambda);
    let chi = family_character(family, n as usize, &mu)?;
    let weyl = weyl_bijection_check(family, &lambda, &cfg.caps)?;
    let theorem = character_theorem_check(family, &lambda, &cfg.caps)?;
    let pass = theorem.pass && weyl.bijective && weyl.weights_match && weyl.phi_parity;
    let data = json!({
        "mu": mu,
        "character": chi.to_json(),
        "character_text": chi.to_string(),
        "weyl": weyl,
        "theorem": theorem,
    });
    let mut p = Payload::new(pass, data);
    p.latex = Some(chi.to_latex());
    Ok(p)
}

fn relation_holds(v: &RelationVerdict) -> bool {
    v.pass && v.closed_form != Some(false)
}

fn relation_payload(verdicts: Vec<RelationVerdict>) -> Payload {
    let pass = !verdicts.is_empty() && verdicts.iter().all(relation_holds);
    let count = verdicts.iter().filter(|v| relation_holds(v)).count();
    let mut p = Payload::new(pass, json!({ "checks": verdicts }));
    p.count = Some(count);
    p
}

fn require(family: Family, allowed: &[Family], what: &str) -> Result<(), IceError> {
    if allowed.contains(&family) {
        Ok(())
    } else {
        Err(IceError::Input(format!("{what} is defined for {allowed:?}, not {family}")))
    }
}

fn regimes(cfg: &RunConfig) -> Result<Vec<Regime>, IceError> {
    match cfg.scheme.as_deref() {
        None => Ok(vec![Regime::Generic, Regime::Deformation]),
        Some("generic") => Ok(vec![Regime::Generic]),
        Some("deformation") => Ok(vec![Regime::Deformation]),
        Some(s) => Err(IceError::Input(format!("scheme `{s}` is not generic or deformation"))),
    }
}

fn verify(cfg: &RunConfig, relation: Relation) -> Result<Payload, IceError> {
    match relation {
        Relation::Ybe => {
            let family = cfg.family_or(Family::B)?;
            let n = cfg.rank(2)?.max(2);
            let s = cfg.scheme(family, n, "generic")?;
            let v = ybe_check(s.row(RowLabel::plain(1))?, s.row(RowLabel::plain(2))?)?;
            Ok(relation_payload(vec![v]))
        }
        Relation::Bend => {
            let family = cfg.family_or(Family::B)?;
            require(family, &Family::BENT, "the bend relation")?;
            let n = cfg.rank(2)?.max(2);
            let s = cfg.scheme(family, n, "generic")?;
            let idx = bent_indices(family, n);
            let mut out = Vec::new();
            for (a, &j) in idx.iter().enumerate() {
                for &k in &idx[a + 1..] {
                    out.push(bend_ybe_check(&s, j, k)?);
                }
            }
            Ok(relation_payload(out))
        }
        Relation::Fish => {
            let family = cfg.family_or(Family::B)?;
            let variants = match family {
                Family::B => vec![FishVariant::B],
                Family::Cstar => vec![FishVariant::CstarD],
                Family::D => match &cfg.lambda {
                    Some(_) if cfg.lambda()?.contains(1) => vec![FishVariant::DWithOne],
                    Some(_) => vec![FishVariant::CstarD],
                    None => vec![FishVariant::DWithOne, FishVariant::CstarD],
                },
                _ => return Err(IceError::Input(format!("no fish relation for {family}"))),
            };
            let n = cfg.rank(1)?;
            let s = cfg.scheme(family, n, "generic")?;
            let mut out = Vec::new();
            for j in bent_indices(family, n) {
                for &v in &variants {
                    out.push(fish_check(&s, j, v)?);
                }
            }
            Ok(relation_payload(out))
        }
        Relation::Jellyfish | Relation::Caduceus => {
            let family = cfg.family_or(Family::C)?;
            let variant = match family {
                Family::C => JellyfishVariant::C,
                Family::Bstar => JellyfishVariant::Bstar,
                Family::BC => JellyfishVariant::BC,
                _ => return Err(IceError::Input(format!("{family} has no central row"))),
            };
            let n = cfg.rank(if family == Family::BC { 2 } else { 1 })?;
            if family == Family::BC && n < 2 {
                return Err(IceError::Input("BC needs n >= 2 for a bent row".into()));
            }
            let s = cfg.scheme(family, n, "generic")?;
            let mut out = Vec::new();
            for j in bent_indices(family, n) {
                out.push(match relation {
                    Relation::Jellyfish => jellyfish_check(&s, j, variant)?,
                    _ => caduceus_check(&s, j)?,
                });
            }
            Ok(relation_payload(out))
        }
        Relation::Divisibility => {
            let family = cfg.family()?;
            let lambda = cfg.lambda()?;
            let mut pass = true;
            let mut rows = Vec::new();
            for regime in regimes(cfg)? {
                let d = divisibility_check(family, &lambda, regime, &cfg.caps, cfg.seed)?;
                let broken = quotient_symmetry_check(&d.quotient, family, lambda.n(), regime)?;
                pass &= broken.is_empty();
                rows.push(json!({
                    "regime": regime.name(),
                    "factors": d.factors,
                    "probes": d.probes,
                    "quotient": d.quotient.to_string(),
                    "broken_symmetries": broken,
                }));
            }
            Ok(Payload::new(pass, json!({ "regimes": rows })))
        }
        Relation::Rho => {
            let family = cfg.family_or(Family::B)?;
            let n = cfg.rank(2)?;
            let rs = if family == Family::A { vec![Regime::Tokuyama] } else { regimes(cfg)? };
            let mut checks = Vec::new();
            for r in rs {
                checks.push(rho_check(family, n, r, &cfg.caps)?);
            }
            let pass = checks.iter().all(|c| c.pass);
            Ok(Payload::new(pass, json!({ "checks": checks })))
        }
        Relation::Okada => {
            let family = cfg.family_or(Family::B)?;
            require(family, &Family::BENT, "the Okada product")?;
            let n = cfg.rank(2)?;
            let z = okada_partition(family, n, &cfg.caps)?;
            let product = okada_product(family, n);
            let diff = &z - &product;
            let data =
                json!({ "z": z.to_string(), "product": product.to_string(), "difference": diff.to_string() });
            let mut p = Payload::new(diff.is_zero(), data);
            p.latex = Some(z.to_latex());
            Ok(p)
        }
        Relation::Bijection => {
            let n = cfg.rank(2)?;
            let scheme = WeightScheme::okada(Family::B, n);
            let r = bijection_check(n, &scheme, &cfg.caps)?;
            let pass = r.pass && r.lemmas && r.matrices == r.states;
            let mut p = Payload::new(pass, serde_json::to_value(&r).expect("report serializes"));
            p.count = Some(r.states);
            Ok(p)
        }
        Relation::Character => {
            let family = cfg.family()?;
            let lambda = cfg.lambda()?;
            let weyl = weyl_bijection_check(family, &lambda, &cfg.caps)?;
            let theorem = character_theorem_check(family, &lambda, &cfg.caps)?;
            let pass = theorem.pass && weyl.bijective && weyl.weights_match && weyl.phi_parity;
            Ok(Payload::new(pass, json!({ "weyl": weyl, "theorem": theorem })))
        }
        Relation::Tokuyama => {
            let lambda = cfg.lambda()?;
            let v = tokuyama_check(&lambda, &cfg.caps)?;
            let pass = v.pass && v.pass_at_minus_one;
            Ok(Payload::new(pass, serde_json::to_value(&v).expect("verdict serializes")))
        }
    }
}
