//! Command-line front end. Every command produces an [`Envelope`]; input
//! errors exit with code 2, computed results (including "unknown") with 0.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::cosets::{todd_coxeter, CayleyTable, EnumOptions, EnumStatus, Strategy};
use crate::coxeter::{classify_triangle, maximal_finite_parabolics, parity, CoxeterSystem, TriangleType};
use crate::garside;
use crate::maps::{self, finite_toric, toric_presentation};
use crate::presentations::{build, Family, FamilyParams, Presentation};
use crate::reps::{self, parent_alphabet, QrPreset};
use crate::schreier::derive_toric;
use crate::words::{Alphabet, Word};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Internal(String),
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn internal<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Internal(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Coset bound for enumerations.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub max_cosets: usize,
    /// Step budget for Tietze simplification.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub budget: usize,
    /// Bound on element orders searched by normal forms.
    #[arg(long, global = true, default_value_t = 50)]
    pub order_bound: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Named (q, r) choice for the representation.
    #[arg(long, global = true)]
    pub qr: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_cosets: 1_000_000,
            budget: 100_000,
            order_bound: 50,
            format: Format::Text,
            seed: 0,
            qr: None,
        }
    }
}

impl RunConfig {
    fn enum_options(&self) -> EnumOptions {
        EnumOptions::bounded(self.max_cosets)
    }

    fn bounds(&self) -> Value {
        json!({
            "max_cosets": self.max_cosets,
            "budget": self.budget,
            "order_bound": self.order_bound,
            "seed": self.seed,
        })
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "toric",
    version,
    about = "Toric reflection groups, J-groups and rank-3 Coxeter groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print a presentation from one of the built-in families.
    Present { family: String, params: Vec<u32> },
    /// Coset enumeration over the trivial or a given subgroup.
    Enumerate {
        family: String,
        params: Vec<u32>,
        /// Subgroup generator (repeatable), in word syntax.
        #[arg(long = "subgroup")]
        subgroup: Vec<String>,
        #[arg(long)]
        felsch: bool,
    },
    /// Finiteness, names and classification invariants of W(k,n,m).
    Classify { k: u32, n: u32, m: u32 },
    /// Word problem: `coxeter k,n,m`, `alt-plus k,n,m`, `garside n,m`,
    /// `toric k,n,m` or `j-parent a,b,c`.
    Wp {
        system: String,
        params: String,
        word: String,
    },
    /// Presentation of the normal closure of s in the parent J-group.
    Derive { k: u32, n: u32, m: u32 },
    /// `rep a b c [--word w]` or `rep witness`.
    Rep {
        args: Vec<String>,
        #[arg(long)]
        word: Option<String>,
    },
    /// Classification over a parameter grid, checking that invariants
    /// separate all triples.
    Sweep {
        #[arg(long, default_value_t = 6)]
        k_max: u32,
        #[arg(long, default_value_t = 7)]
        m_max: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Unknown,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub command: String,
    pub params: Value,
    pub bounds: Value,
    pub result: Value,
    pub status: Status,
    pub evidence: Vec<String>,
}

impl Envelope {
    fn new(command: &str, params: Value, cfg: &RunConfig) -> Self {
        Envelope {
            command: command.to_string(),
            params,
            bounds: cfg.bounds(),
            result: Value::Null,
            status: Status::Ok,
            evidence: Vec::new(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("envelope serializes") + "\n",
            Format::Text => {
                let mut out = String::new();
                if let Some(text) = self.result.get("text").and_then(Value::as_str) {
                    out.push_str(text);
                } else {
                    render_text(&self.result, "", &mut out);
                }
                if self.status != Status::Ok {
                    let _ = writeln!(out, "status: {}", json!(self.status).as_str().unwrap_or("?"));
                }
                for e in &self.evidence {
                    let _ = writeln!(out, "# {e}");
                }
                out
            }
        }
    }
}

fn render_text(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                match val {
                    Value::Object(_) => render_text(val, &key, out),
                    _ => {
                        let _ = writeln!(out, "{key}: {}", scalar_text(val));
                    }
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{}", scalar_text(v));
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn family_params(family: &str, params: &[u32]) -> Result<FamilyParams, CliError> {
    let f = Family::from_tag(family).ok_or_else(|| {
        let tags: Vec<&str> = Family::ALL.iter().map(|f| f.tag()).collect();
        CliError::Input(format!(
            "unknown family {family:?}; expected one of {}",
            tags.join(", ")
        ))
    })?;
    FamilyParams::new(f, params).map_err(input)
}

fn parse_triple(params: &str) -> Result<Vec<u32>, CliError> {
    params
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Input(format!("bad parameter {s:?} in {params:?}")))
        })
        .collect()
}

fn expect_len(v: &[u32], n: usize, what: &str) -> Result<(), CliError> {
    if v.len() != n {
        return Err(CliError::Input(format!("{what} takes {n} parameters, got {}", v.len())));
    }
    Ok(())
}

fn require_coprime(n: u32, m: u32) -> Result<(), CliError> {
    if n < 2 || m < 2 || n.gcd(&m) != 1 {
        return Err(CliError::Input(format!(
            "need gcd(n, m) = 1 with n, m >= 2, got ({n}, {m})"
        )));
    }
    Ok(())
}

pub fn cmd_present(family: &str, params: &[u32], cfg: &RunConfig) -> Result<Envelope, CliError> {
    let fp = family_params(family, params)?;
    let p = build(&fp).map_err(input)?;
    let mut env = Envelope::new("present", json!({"family": family, "values": params}), cfg);
    env.result = json!({
        "text": p.serialize(),
        "generators": p.alphabet.names(),
        "relators": p.relators.iter().map(|r| p.alphabet.render(r)).collect::<Vec<_>>(),
    });
    Ok(env)
}

pub fn cmd_enumerate(
    family: &str,
    params: &[u32],
    subgroup: &[String],
    felsch: bool,
    cfg: &RunConfig,
) -> Result<Envelope, CliError> {
    let fp = family_params(family, params)?;
    let p = build(&fp).map_err(input)?;
    let subgens: Vec<Word> = subgroup
        .iter()
        .map(|s| p.parse_word(s).map_err(input))
        .collect::<Result<_, _>>()?;
    let mut opts = cfg.enum_options();
    if felsch {
        opts.strategy = Strategy::Felsch;
    }
    let table = todd_coxeter(&p, &subgens, opts).map_err(input)?;
    let mut env = Envelope::new(
        "enumerate",
        json!({"family": family, "values": params, "subgroup": subgroup, "strategy": if felsch {"felsch"} else {"hlt"}}),
        cfg,
    );
    match table.status() {
        EnumStatus::Complete => {
            env.result = json!({"complete": true, "index": table.rows()});
            env.evidence
                .push(format!("coset table complete with {} rows", table.rows()));
            if subgens.is_empty() {
                let ct = CayleyTable::new(table).map_err(internal)?;
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                let ok = ct.verify_axioms(200, &mut rng);
                env.result["order"] = json!(ct.order());
                env.result["axioms_sampled"] = json!(ok);
                env.evidence
                    .push(format!("group axioms sampled on 200 triples with seed {}", cfg.seed));
            }
        }
        EnumStatus::Overflow { bound } => {
            env.status = Status::Unknown;
            env.result = json!({"complete": false, "index": null, "order": null});
            env.evidence.push(format!("enumeration overflowed at {bound} cosets"));
        }
    }
    Ok(env)
}

/// Invariants separating toric reflection groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Invariants {
    pub k: u32,
    /// Group order when finite.
    pub order: Option<usize>,
    /// Orders of the rotation subgroups of the maximal finite standard
    /// parabolics of the triangle group (when that group is infinite).
    pub parabolic_orders: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub k: u32,
    pub n: u32,
    pub m: u32,
    pub swapped: bool,
    pub finite: Option<bool>,
    pub in_finite_list: bool,
    pub order: Option<usize>,
    pub shephard_todd: Option<String>,
    pub center_quotient: Option<String>,
    pub w_plus_order: Option<u64>,
    pub triangle: TriangleType,
    pub reflection_classes: Option<usize>,
    pub k_source: String,
    pub maximal_finite_cyclic_orders: Vec<u64>,
    pub braid_group: String,
    pub word_problem: String,
    pub invariants: Invariants,
    pub evidence: Vec<String>,
}

pub fn classify(k: u32, n: u32, m: u32, cfg: &RunConfig) -> Result<Classification, CliError> {
    require_coprime(n, m)?;
    if k < 2 {
        return Err(CliError::Input(format!("k must be at least 2, got {k}")));
    }
    let swapped = n > m;
    let (n, m) = (n.min(m), n.max(m));
    let mut evidence = Vec::new();
    let row = finite_toric(k, n, m);
    let p = toric_presentation(k, n, m).map_err(input)?;
    let table = todd_coxeter(&p, &[], cfg.enum_options()).map_err(internal)?;
    let (finite, order, cayley) = match table.status() {
        EnumStatus::Complete => {
            evidence.push(format!(
                "coset enumeration of toric({k},{n},{m}) complete: order {}",
                table.rows()
            ));
            let ct = CayleyTable::new(table).map_err(internal)?;
            (Some(true), Some(ct.order()), Some(ct))
        }
        EnumStatus::Overflow { bound } => {
            evidence.push(format!(
                "coset enumeration of toric({k},{n},{m}) overflowed at {bound} cosets"
            ));
            if row.is_none() {
                evidence.push("not among the finite toric reflection groups, hence infinite".to_string());
                (Some(false), None, None)
            } else {
                (None, None, None)
            }
        }
    };
    let triangle = classify_triangle(k, n, m);
    let reflection_classes = cayley
        .as_ref()
        .map(|ct| ct.reflection_class_count(&(0..n as usize).collect::<Vec<_>>()));
    let sys = CoxeterSystem::triangle(k, n, m).map_err(internal)?;
    let (k_inv, k_source) = match reflection_classes {
        Some(c) => (c as u32 + 1, format!("{c} conjugacy classes of reflections")),
        None => {
            // x1^k = 1 and phi(x1) = r1 r2 has order exactly k
            let ord = sys
                .element_order(&Word::product_of([0, 1]), cfg.order_bound)
                .map_err(internal)?
                .ok_or_else(|| CliError::Internal(format!("order of r1 r2 exceeds {}", cfg.order_bound)))?;
            (ord as u32, format!("x1^{k} = 1 and its image r1 r2 has order {ord}"))
        }
    };
    evidence.push(format!("k = {k_inv} from {k_source}"));
    let parabolics = maximal_finite_parabolics(&sys).map_err(internal)?;
    let maximal_finite_cyclic_orders = if parabolics.maximal_finite.iter().all(|j| j.len() == 2) {
        evidence.push("maximal finite standard parabolics are the three pairs".to_string());
        parabolics.sorted_orders()
    } else {
        Vec::new()
    };
    let word_problem = if finite == Some(true) {
        "solvable (finite group)".to_string()
    } else {
        "unknown".to_string()
    };
    Ok(Classification {
        k,
        n,
        m,
        swapped,
        finite,
        in_finite_list: row.is_some(),
        order,
        shephard_todd: row.as_ref().map(|r| r.name.clone()),
        center_quotient: row.as_ref().map(|r| r.center_quotient.clone()),
        w_plus_order: row.as_ref().map(|r| r.w_plus_order),
        triangle,
        reflection_classes,
        k_source,
        invariants: Invariants {
            k: k_inv,
            order,
            parabolic_orders: maximal_finite_cyclic_orders.clone(),
        },
        maximal_finite_cyclic_orders,
        braid_group: format!("G({n},{m}) = <x, y | x^{n} = y^{m}>"),
        word_problem,
        evidence,
    })
}

pub fn cmd_classify(k: u32, n: u32, m: u32, cfg: &RunConfig) -> Result<Envelope, CliError> {
    let c = classify(k, n, m, cfg)?;
    let mut env = Envelope::new("classify", json!({"k": k, "n": n, "m": m}), cfg);
    if c.finite.is_none() {
        env.status = Status::Unknown;
    }
    env.evidence = c.evidence.clone();
    let mut result = serde_json::to_value(&c).map_err(internal)?;
    result.as_object_mut().expect("object").remove("evidence");
    env.result = result;
    Ok(env)
}

pub fn cmd_wp(system: &str, params: &str, word: &str, cfg: &RunConfig) -> Result<Envelope, CliError> {
    let v = parse_triple(params)?;
    let mut env = Envelope::new("wp", json!({"system": system, "values": v, "word": word}), cfg);
    match system {
        "coxeter" | "alt-plus" => {
            expect_len(&v, 3, system)?;
            let sys = CoxeterSystem::triangle(v[0], v[1], v[2]).map_err(input)?;
            let r = Alphabet::numbered("r", 1, 3);
            let w = if system == "coxeter" {
                r.parse(word).map_err(input)?
            } else {
                let ab = Alphabet::new(["a", "b"]).expect("valid names");
                let w = ab.parse(word).map_err(input)?;
                let map = crate::words::GenMap::new(ab, r.clone(), vec![maps::rotation_a(), maps::rotation_b()])
                    .expect("images over r1..r3");
                map.apply(&w).map_err(input)?
            };
            let nf = sys.nf(&w).map_err(internal)?;
            env.result = json!({
                "normal_form": r.render(&nf),
                "length": nf.len(),
                "parity": parity(&nf),
                "identity": nf.is_empty(),
            });
            env.evidence.push(format!(
                "minimal-root automaton with {} roots",
                sys.minimal_root_count()
            ));
        }
        "garside" => {
            expect_len(&v, 2, system)?;
            let w = garside::alphabet().parse(word).map_err(input)?;
            let nf = garside::gnf(v[0], v[1], &w).map_err(input)?;
            env.result = json!({
                "normal_form": nf.to_string(),
                "identity": nf == garside::NormalForm::identity(),
                "abelianization": garside::abelianization(v[0], v[1], &w),
            });
        }
        "toric" => {
            expect_len(&v, 3, system)?;
            let (k, n, m) = (v[0], v[1], v[2]);
            require_coprime(n, m)?;
            let p = toric_presentation(k, n, m).map_err(input)?;
            let w = p.parse_word(word).map_err(input)?;
            toric_word_problem(k, n, m, &p, &w, cfg, &mut env)?;
        }
        "j-parent" => {
            expect_len(&v, 3, system)?;
            let (a, b, c) = (v[0], v[1], v[2]);
            let p = build(&FamilyParams::new(Family::JParent, &v).map_err(input)?).map_err(input)?;
            let w = p.parse_word(word).map_err(input)?;
            let table = todd_coxeter(&p, &[], cfg.enum_options()).map_err(internal)?;
            if table.is_complete() {
                let ct = CayleyTable::new(table).map_err(internal)?;
                env.result = json!({"identity": ct.element(&w) == ct.identity()});
                env.evidence.push(format!("cayley table of order {}", ct.order()));
            } else {
                let rep = reps::build_preset(a, b, c, QrPreset::Canonical).map_err(internal)?;
                let img = rep.eval(&w).map_err(internal)?;
                if img.is_identity() {
                    env.status = Status::Unknown;
                    env.result = json!({"identity": null});
                    env.evidence.push(
                        "enumeration overflowed and the word lies in the kernel of the 2x2 representation".into(),
                    );
                } else {
                    env.result = json!({"identity": false});
                    env.evidence
                        .push(format!("image under the 2x2 representation is {img}, not the identity"));
                }
            }
        }
        other => return Err(CliError::Input(format!("unknown system {other:?}"))),
    }
    Ok(env)
}

fn toric_word_problem(
    k: u32,
    n: u32,
    m: u32,
    p: &Presentation,
    w: &Word,
    cfg: &RunConfig,
    env: &mut Envelope,
) -> Result<(), CliError> {
    if finite_toric(k, n, m).is_some() {
        let table = todd_coxeter(p, &[], cfg.enum_options()).map_err(internal)?;
        if table.is_complete() {
            let ct = CayleyTable::new(table).map_err(internal)?;
            env.result = json!({"identity": ct.element(w) == ct.identity()});
            env.evidence.push(format!("cayley table of order {}", ct.order()));
            return Ok(());
        }
    }
    let phi = maps::build_phi(k, n, m).map_err(internal)?;
    let image = phi.apply(w).map_err(internal)?;
    if !phi.target.is_identity(&image).map_err(internal)? {
        env.result = json!({"identity": false});
        env.evidence
            .push("image in the rotation subgroup of the triangle group is nontrivial".into());
    } else {
        env.status = Status::Unknown;
        env.result = json!({"identity": null});
        env.evidence
            .push("image in the rotation subgroup is trivial, so the word lies in the cyclic group generated by c; whether it is trivial is not decided".into());
    }
    Ok(())
}

pub fn cmd_derive(k: u32, n: u32, m: u32, cfg: &RunConfig) -> Result<Envelope, CliError> {
    require_coprime(n, m)?;
    let d = derive_toric(k, n, m, cfg.enum_options(), cfg.budget).map_err(input)?;
    let p = &d.simplified.presentation;
    let mut env = Envelope::new("derive", json!({"k": k, "n": n, "m": m}), cfg);
    env.result = json!({
        "index": d.index(),
        "schreier_generators": d.rs.presentation.gen_count(),
        "schreier_relators": d.rs.presentation.relators.len(),
        "text": p.serialize(),
        "generators": p.alphabet.names(),
        "relators": p.relators.iter().map(|r| p.alphabet.render(r)).collect::<Vec<_>>(),
    });
    env.evidence.push(format!(
        "normal closure of s has index {} = {n}*{m} in the parent J-group",
        d.index()
    ));
    env.evidence
        .push(format!("Tietze simplification took {} steps", d.simplified.steps));
    Ok(env)
}

pub fn cmd_rep(args: &[String], word: Option<&str>, cfg: &RunConfig) -> Result<Envelope, CliError> {
    if args.first().map(String::as_str) == Some("witness") {
        let w = reps::unfaithfulness_witness().map_err(internal)?;
        let mut env = Envelope::new("rep", json!({"mode": "witness"}), cfg);
        env.evidence = w.evidence.clone();
        env.result = serde_json::to_value(&w).map_err(internal)?;
        env.result.as_object_mut().expect("object").remove("evidence");
        return Ok(env);
    }
    let v: Vec<u32> = args
        .iter()
        .map(|s| {
            s.parse::<u32>()
                .map_err(|_| CliError::Input(format!("bad label {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    expect_len(&v, 3, "rep")?;
    let preset: QrPreset = cfg.qr.as_deref().unwrap_or("canonical").parse().map_err(input)?;
    let rep = reps::build_preset(v[0], v[1], v[2], preset).map_err(input)?;
    let report = rep.verify_relations().map_err(internal)?;
    let mut env = Envelope::new(
        "rep",
        json!({"a": v[0], "b": v[1], "c": v[2], "qr": preset.name()}),
        cfg,
    );
    env.result = json!({
        "modulus": rep.modulus(),
        "q": rep.q.to_string(),
        "r": rep.r.to_string(),
        "rho_s": rep.ms.to_string(),
        "rho_t": rep.mt.to_string(),
        "rho_u": rep.mu.to_string(),
        "relations": report,
        "relations_hold": report.passed(),
    });
    if let Some(text) = word {
        let img = match parent_alphabet().parse(text) {
            Ok(w) => rep.eval(&w),
            Err(_) => {
                let w = Alphabet::numbered("x", 1, v[1] as usize).parse(text).map_err(input)?;
                rep.eval_toric(&w)
            }
        }
        .map_err(internal)?;
        env.result["image"] = json!(img.to_string());
        env.result["image_is_identity"] = json!(img.is_identity());
    }
    env.evidence.push(format!(
        "entries in Q(zeta_{}), z = zeta_{}",
        rep.modulus(),
        rep.modulus()
    ));
    Ok(env)
}

/// Triples `(k, n, m)` with `2 <= k <= k_max`, `2 <= n < m <= m_max`,
/// `gcd(n, m) = 1`, in lexicographic order.
pub fn sweep_grid(k_max: u32, m_max: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for k in 2..=k_max {
        for n in 2..=m_max {
            for m in n + 1..=m_max {
                if n.gcd(&m) == 1 {
                    out.push((k, n, m));
                }
            }
        }
    }
    out
}

pub fn cmd_sweep(k_max: u32, m_max: u32, cfg: &RunConfig) -> Result<Envelope, CliError> {
    let grid = sweep_grid(k_max, m_max);
    let rows: Vec<Classification> = grid
        .par_iter()
        .map(|&(k, n, m)| classify(k, n, m, cfg))
        .collect::<Result<_, _>>()?;
    let distinct: std::collections::HashSet<&Invariants> = rows.iter().map(|c| &c.invariants).collect();
    let mut env = Envelope::new("sweep", json!({"k_max": k_max, "m_max": m_max}), cfg);
    env.result = json!({
        "count": rows.len(),
        "distinct_invariants": distinct.len(),
        "separated": distinct.len() == rows.len(),
        "rows": rows.iter().map(|c| json!({
            "k": c.k, "n": c.n, "m": c.m,
            "finite": c.finite,
            "name": c.shephard_todd,
            "invariants": c.invariants,
        })).collect::<Vec<_>>(),
    });
    if rows.iter().any(|c| c.finite.is_none()) {
        env.status = Status::Unknown;
    }
    Ok(env)
}

pub fn execute(cli: &Cli) -> Result<Envelope, CliError> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Present { family, params } => cmd_present(family, params, cfg),
        Command::Enumerate {
            family,
            params,
            subgroup,
            felsch,
        } => cmd_enumerate(family, params, subgroup, *felsch, cfg),
        Command::Classify { k, n, m } => cmd_classify(*k, *n, *m, cfg),
        Command::Wp { system, params, word } => cmd_wp(system, params, word, cfg),
        Command::Derive { k, n, m } => cmd_derive(*k, *n, *m, cfg),
        Command::Rep { args, word } => cmd_rep(args, word.as_deref(), cfg),
        Command::Sweep { k_max, m_max } => cmd_sweep(*k_max, *m_max, cfg),
    }
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(env) => Outcome {
            code: 0,
            stdout: env.render(cli.config.format),
            stderr: String::new(),
        },
        Err(e) => {
            let code = match e {
                CliError::Input(_) => 2,
                CliError::Internal(_) => 1,
            };
            let stdout = if cli.config.format == Format::Json {
                let mut env = Envelope::new(&command_name(&cli.command), Value::Null, &cli.config);
                env.status = Status::Error;
                env.evidence.push(e.to_string());
                env.render(Format::Json)
            } else {
                String::new()
            };
            Outcome {
                code,
                stdout,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Present { .. } => "present",
        Command::Enumerate { .. } => "enumerate",
        Command::Classify { .. } => "classify",
        Command::Wp { .. } => "wp",
        Command::Derive { .. } => "derive",
        Command::Rep { .. } => "rep",
        Command::Sweep { .. } => "sweep",
    }
    .to_string()
}
