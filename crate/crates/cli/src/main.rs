//! `qlab`: compute in Rel, V-Rel and qRel and run the law suites.
//!
//! Exit status: 0 on success, 1 when a law suite fails, 2 on input errors.

mod codec;
mod expr;

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use codec::{Codec, QRelCodec, RelCodec, VRelCodec};
use qlab::biproduct::quote_morphism;
use qlab::finrel::{powerset_adjoint, rel_kernel, BoolRelation};
use qlab::lawcheck::{self, builtin_suites, find_suite, Config, Instance, Suite};
use qlab::order::{omega_inverse, omega_order};
use qlab::qrel::{dagger_kernel, QuantumSet};
use qlab::quantale::{builtin_quantale, builtin_quantales, FiniteQuantale, QuantaleTables};
use qlab::serial::{QRelationJson, RelationJson, SetJson, VRelationJson};
use qlab::vrel::{circ_embed, v_power_adjoint};
use qlab::{Error, Orthocomplemented, Quantaloid};

#[derive(Parser)]
#[command(name = "qlab", version, about = "Exact computation in Rel, V-Rel and qRel")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct Common {
    /// rel, qrel, vrel (with --quantale) or vrel:NAME for a built-in quantale.
    #[arg(long, global = true)]
    instance: Option<String>,
    /// Quantale tables for vrel, as a JSON file.
    #[arg(long, global = true, value_name = "FILE")]
    quantale: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the result here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run law suites: `check [INSTANCE] [SUITE...]`.
    Check {
        /// An instance (rel, qrel, vrel:NAME, all) followed by suite names.
        args: Vec<String>,
        /// List the suites and their anchors instead of running them.
        #[arg(long)]
        list: bool,
        /// With --list, check that every anchor occurs verbatim in the text of FILE.
        #[arg(long, value_name = "FILE", requires = "list")]
        against: Option<PathBuf>,
        /// Cases per sampled law.
        #[arg(long)]
        samples: Option<usize>,
        /// Record elapsed times in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Evaluate an expression over the morphisms of a definitions file.
    Compute {
        expression: String,
        /// Definitions: JSON file or inline JSON with `objects` and `morphisms`.
        #[arg(long)]
        defs: String,
    },
    /// The dagger kernel `(K, E)` of a named relation.
    Kernel {
        name: String,
        #[arg(long)]
        defs: String,
    },
    /// The orthocomplement `¬R` of a named relation.
    Neg {
        name: String,
        #[arg(long)]
        defs: String,
    },
    /// Power object data of an object: P(X) in Rel, V^X in V-Rel, Ω in qRel.
    Power { instance: String, object: String },
    /// Embed a plain relation: `r into qRel, r∘ into V-Rel.
    Embed { relation: String },
}

/// A user-facing failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::LawViolation(_)) { 1 } else { 2 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Inline JSON if the argument starts like JSON, otherwise a file path.
fn read_source(arg: &str) -> Result<String, Failure> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| input(format!("cannot read {arg}: {e}")))
}

fn read_json(arg: &str) -> Result<Value, Failure> {
    Ok(qlab::serial::parse(&read_source(arg)?)?)
}

enum Inst {
    Rel,
    VRel(String, FiniteQuantale),
    QRel,
}

fn load_quantale(path: &Path) -> Result<FiniteQuantale, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    let tables: QuantaleTables = qlab::serial::parse(&text)?;
    Ok(FiniteQuantale::from_tables(&tables)?)
}

fn parse_instance(spec: &str, common: &Common) -> Result<Inst, Failure> {
    match spec {
        "rel" => Ok(Inst::Rel),
        "qrel" => Ok(Inst::QRel),
        "vrel" => {
            let path = common
                .quantale
                .as_ref()
                .ok_or_else(|| input("vrel needs --quantale FILE or the form vrel:NAME"))?;
            let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok(Inst::VRel(name, load_quantale(path)?))
        }
        s if s.starts_with("vrel:") => {
            let name = &s[5..];
            let q = builtin_quantale(name).ok_or_else(|| {
                let known: Vec<_> = builtin_quantales().into_iter().map(|(n, _)| n).collect();
                input(format!("no built-in quantale {name:?}; known: {}", known.join(", ")))
            })?;
            Ok(Inst::VRel(name.to_string(), q))
        }
        other => Err(input(format!("unknown instance {other:?}"))),
    }
}

fn instance_flag(common: &Common) -> Result<Inst, Failure> {
    let spec = common.instance.as_deref().ok_or_else(|| input("this command needs --instance"))?;
    parse_instance(spec, common)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Named {
    name: String,
    value: Value,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct Defs {
    #[serde(default)]
    objects: Vec<Named>,
    #[serde(default)]
    morphisms: Vec<Named>,
}

fn load_env<K: Codec>(k: &K, defs: &str) -> Result<expr::Env<K::C>, Failure> {
    let defs: Defs = qlab::serial::parse(&read_source(defs)?)?;
    let mut env = expr::Env {
        objects: HashMap::new(),
        morphisms: HashMap::new(),
    };
    for n in &defs.objects {
        let x = k.parse_object(&n.value).map_err(|e| input(format!("object {:?}: {e}", n.name)))?;
        if env.objects.insert(n.name.clone(), x).is_some() {
            return Err(input(format!("duplicate name {:?}", n.name)));
        }
    }
    for n in &defs.morphisms {
        let f = k.parse_morphism(&n.value).map_err(|e| input(format!("morphism {:?}: {e}", n.name)))?;
        if env.objects.contains_key(&n.name) || env.morphisms.insert(n.name.clone(), f).is_some() {
            return Err(input(format!("duplicate name {:?}", n.name)));
        }
    }
    Ok(env)
}

fn lookup<'e, K: Codec>(env: &'e expr::Env<K::C>, name: &str) -> Result<&'e <K::C as Quantaloid>::Mor, Failure> {
    env.morphisms.get(name).ok_or_else(|| input(format!("unknown morphism {name:?}")))
}

/// Runs `$body` with `$k` bound to the codec of `$inst`.
macro_rules! with_codec {
    ($inst:expr, |$k:ident| $body:expr) => {
        match $inst {
            Inst::Rel => {
                let $k = RelCodec(qlab::finrel::rel_instance());
                $body
            }
            Inst::VRel(_, q) => {
                let $k = VRelCodec::new(q);
                $body
            }
            Inst::QRel => {
                let $k = QRelCodec::new();
                $body
            }
        }
    };
}

fn compute<K: Codec>(k: &K, defs: &str, src: &str) -> Result<Value, Failure> {
    let env = load_env(k, defs)?;
    let e = expr::parse(src)?;
    let f = expr::eval(k.instance(), &env, &e)?;
    Ok(k.show_morphism(&f))
}

fn negate<K: Codec>(k: &K, defs: &str, name: &str) -> Result<Value, Failure>
where
    K::C: Orthocomplemented,
{
    let env = load_env(k, defs)?;
    Ok(k.show_morphism(&k.instance().negate(lookup::<K>(&env, name)?)?))
}

fn kernel(inst: Inst, defs: &str, name: &str) -> Result<Value, Failure> {
    match inst {
        Inst::Rel => {
            let k = RelCodec(qlab::finrel::rel_instance());
            let env = load_env(&k, defs)?;
            let r = qlab::finrel::matr_to_relation(lookup::<RelCodec>(&env, name)?);
            let (obj, e) = rel_kernel(&r);
            Ok(json!({"kernel": SetJson::from_set(&obj), "E": RelationJson::from_relation(&e)}))
        }
        Inst::QRel => {
            let k = QRelCodec::new();
            let env = load_env(&k, defs)?;
            let (obj, e) = dagger_kernel(&k.0, lookup::<QRelCodec>(&env, name)?)?;
            Ok(json!({"kernel": QuantumSet::from_object(&obj), "E": QRelationJson::from_morphism(&e)}))
        }
        Inst::VRel(..) => Err(input("dagger kernels are available for rel and qrel only")),
    }
}

fn power(inst: Inst, object: &str) -> Result<Value, Failure> {
    let v = read_json(object)?;
    match inst {
        Inst::Rel => {
            let x = serde_json::from_value::<SetJson>(v).map_err(|e| input(e.to_string()))?.to_set()?;
            let p = powerset_adjoint(&x);
            let members: Vec<Vec<_>> =
                p.members.iter().map(|m| m.iter().map(|&i| x.label(i).clone()).collect()).collect();
            let singleton: Vec<_> = (0..x.len())
                .map(|i| json!([x.label(i), p.object.label(p.singleton.apply(i))]))
                .collect();
            Ok(json!({
                "object": SetJson::from_set(&p.object),
                "members": members,
                "ni": RelationJson::from_relation(&p.ni),
                "singleton": singleton,
            }))
        }
        Inst::VRel(_, q) => {
            let x = serde_json::from_value::<SetJson>(v).map_err(|e| input(e.to_string()))?.to_set()?;
            let p = v_power_adjoint(&q, &x);
            Ok(json!({
                "object": SetJson::from_set(&p.object),
                "omega": VRelationJson::from_vrelation(&q, &p.omega),
                "ni": VRelationJson::from_vrelation(&q, &p.counit),
            }))
        }
        Inst::QRel => {
            let k = QRelCodec::new();
            let x = k.parse_object(&v)?;
            let c = &k.0;
            let omega = omega_order(c)?;
            let one = qlab::MonoidalQuantaloid::unit_object(c);
            let table: Vec<Value> = [c.top(&x, &one), c.bottom(&x, &one)]
                .iter()
                .map(|r| Ok(json!({"effect": k.show_morphism(r), "map": k.show_morphism(&omega_inverse(c, &omega, r)?)})))
                .collect::<Result<_, Failure>>()?;
            Ok(json!({
                "omega": k.show_object(omega.object()),
                "p0": k.show_morphism(omega.p0()),
                "p1": k.show_morphism(omega.p1()),
                "bijection": table,
            }))
        }
    }
}

fn embed(inst: Inst, relation: &str) -> Result<Value, Failure> {
    let r: RelationJson = qlab::serial::parse(&read_source(relation)?)?;
    let r: BoolRelation = r.to_relation()?;
    match inst {
        Inst::Rel => Ok(serde_json::to_value(RelationJson::from_relation(&r)).expect("serializable")),
        Inst::VRel(_, q) => Ok(serde_json::to_value(VRelationJson::from_vrelation(&q, &circ_embed(&q, &r)?))
            .expect("serializable")),
        Inst::QRel => {
            let k = QRelCodec::new();
            Ok(k.show_morphism(&quote_morphism(&k.0, &r)?))
        }
    }
}

fn all_instances() -> Vec<Instance> {
    let mut out = vec![Instance::Rel];
    for (name, _) in builtin_quantales() {
        out.push(Instance::vrel(name).expect("built-in"));
    }
    out.push(Instance::QRel);
    out
}

fn to_lawcheck(inst: Inst) -> Instance {
    match inst {
        Inst::Rel => Instance::Rel,
        Inst::VRel(name, quantale) => Instance::VRel { name, quantale },
        Inst::QRel => Instance::QRel,
    }
}

fn list(against: Option<&Path>) -> Result<(String, bool), Failure> {
    let text = match against {
        Some(p) => Some(std::fs::read_to_string(p).map_err(|e| input(format!("cannot read {}: {e}", p.display())))?),
        None => None,
    };
    let mut out = String::new();
    let mut missing = 0;
    for s in builtin_suites() {
        let kinds: Vec<String> = s.kinds.iter().map(|k| format!("{k:?}").to_lowercase()).collect();
        let mark = match &text {
            Some(t) if t.contains(s.anchor) => "found   ",
            Some(_) => {
                missing += 1;
                "MISSING "
            }
            None => "",
        };
        out.push_str(&format!("{mark}{:<20} [{}] {}\n", s.name, kinds.join(","), s.anchor));
    }
    if text.is_some() {
        out.push_str(&format!("{} suites, {missing} unanchored\n", builtin_suites().len()));
    }
    Ok((out, missing == 0))
}

fn check(common: &Common, args: &[String], samples: Option<usize>, timings: bool) -> Result<(String, bool), Failure> {
    let (instances, names) = match args.first().map(String::as_str) {
        Some("all") => (all_instances(), &args[1..]),
        Some(first) if find_suite(first).is_none() => {
            (vec![to_lawcheck(parse_instance(first, common)?)], &args[1..])
        }
        _ => match &common.instance {
            Some(spec) if spec != "all" => (vec![to_lawcheck(parse_instance(spec, common)?)], args),
            _ => (all_instances(), args),
        },
    };
    let suites: Vec<Suite> = if names.is_empty() || names.iter().any(|n| n == "all") {
        builtin_suites().to_vec()
    } else {
        names
            .iter()
            .map(|n| find_suite(n).ok_or_else(|| input(format!("unknown suite {n:?}; see check --list"))))
            .collect::<Result<_, _>>()?
    };
    let mut cfg = Config::with_seed(common.seed);
    cfg.timings = timings;
    if let Some(n) = samples {
        cfg.samples = n;
    }
    let jobs: Vec<(Suite, Instance)> = suites
        .iter()
        .flat_map(|s| instances.iter().map(move |i| (*s, i.clone())))
        .collect();
    let reports = lawcheck::run_suites(&jobs, &cfg);
    let ok = reports.iter().all(|r| r.passed());
    let text = match common.format {
        Format::Json => lawcheck::render_json(&reports),
        Format::Text => lawcheck::render_text(&reports),
    };
    Ok((text, ok))
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => qlab::serial::render(v),
        Format::Text => format!("{v}\n"),
    }
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let common = cli.common.clone();
    let value = match cli.command {
        Command::Check {
            args,
            list: true,
            against,
            ..
        } => {
            if !args.is_empty() {
                return Err(input("--list takes no instance or suites"));
            }
            return list(against.as_deref());
        }
        Command::Check {
            args, samples, timings, ..
        } => return check(&common, &args, samples, timings),
        Command::Compute { expression, defs } => {
            with_codec!(instance_flag(&common)?, |k| compute(&k, &defs, &expression)?)
        }
        Command::Kernel { name, defs } => kernel(instance_flag(&common)?, &defs, &name)?,
        Command::Neg { name, defs } => match instance_flag(&common)? {
            Inst::Rel => negate(&RelCodec(qlab::finrel::rel_instance()), &defs, &name)?,
            Inst::QRel => negate(&QRelCodec::new(), &defs, &name)?,
            Inst::VRel(..) => return Err(input("orthocomplements are available for rel and qrel only")),
        },
        Command::Power { instance, object } => power(parse_instance(&instance, &common)?, &object)?,
        Command::Embed { relation } => embed(instance_flag(&common)?, &relation)?,
    };
    Ok((render(&value, common.format), true))
}

fn configure_threads() {
    if let Some(n) = std::env::var("QLAB_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let out = cli.common.out.clone();
    match run(cli) {
        Ok((text, ok)) => {
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &text) {
                        eprintln!("qlab: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("qlab: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
