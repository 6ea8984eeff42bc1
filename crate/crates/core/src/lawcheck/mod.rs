//! Seeded law suites over Rel, V-Rel and qRel.
//!
//! Every suite is a list of named laws; each law runs over generated cases
//! and stops at its first counterexample. Case generation depends only on
//! `(seed, suite, instance, law)`, so reports are reproducible and suites may
//! run concurrently.

pub mod gen;
pub mod laws;
pub mod mutants;
pub mod specific;
mod suites;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::quantale::{builtin_quantale, FiniteQuantale};

pub use gen::{Generator, QRelGen, QuantaleGen, Rng8};
pub use suites::{builtin_suites, find_suite, Suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        }
    }
}

/// The first failing case of a law.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    /// Index of the case within the law's enumeration.
    pub case: usize,
    pub detail: String,
    pub inputs: Vec<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<(String, Value)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawResult {
    pub law: String,
    pub verdict: Verdict,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub anchor: String,
    pub instance: String,
    pub seed: u64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub laws: Vec<LawResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

/// Sampling parameters. Timings are off by default so that reports are
/// byte-identical across runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    /// Cases per law when objects are sampled.
    pub samples: usize,
    /// Largest case product enumerated exhaustively for one object tuple.
    pub exhaustive_limit: usize,
    /// Cases per object tuple when the product exceeds the limit.
    pub tuple_samples: usize,
    pub timings: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            samples: 100,
            exhaustive_limit: 4096,
            tuple_samples: 32,
            timings: false,
        }
    }
}

impl Config {
    pub fn with_seed(seed: u64) -> Self {
        Config {
            seed,
            ..Config::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Rel,
    VRel,
    QRel,
}

/// An instance a suite can run on, with its default exhaustive bounds.
#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    /// Rel on sets of at most 3 elements.
    Rel,
    /// V-Rel on sets of at most 2 elements.
    VRel { name: String, quantale: FiniteQuantale },
    /// qRel with at most 2 atoms of dimension at most 2.
    QRel,
}

impl Instance {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::Rel => Kind::Rel,
            Instance::VRel { .. } => Kind::VRel,
            Instance::QRel => Kind::QRel,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Instance::Rel => "rel".into(),
            Instance::VRel { name, .. } => format!("vrel:{name}"),
            Instance::QRel => "qrel".into(),
        }
    }

    pub fn vrel(name: &str) -> Result<Self> {
        let quantale =
            builtin_quantale(name).ok_or_else(|| Error::Precondition(format!("no built-in quantale {name:?}")))?;
        Ok(Instance::VRel {
            name: name.to_string(),
            quantale,
        })
    }
}

/// 64-bit FNV-1a, used to split the seed per law.
fn fnv(parts: &[&str], seed: u64) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325 ^ seed;
    for p in parts {
        for b in p.bytes().chain([0xff]) {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

/// Outcome of one case: `None` passes.
pub type Outcome = Option<Fail>;

#[derive(Clone, Debug, PartialEq)]
pub struct Fail {
    pub detail: String,
    pub values: Vec<(String, Value)>,
}

pub fn fail(detail: impl Into<String>) -> Outcome {
    Some(Fail {
        detail: detail.into(),
        values: Vec::new(),
    })
}

/// Fails with both sides shown unless `lhs == rhs`.
pub fn expect_eq<G: Generator>(g: &G, what: &str, lhs: &G::Mor, rhs: &G::Mor) -> Outcome {
    (lhs != rhs).then(|| Fail {
        detail: format!("{what}: sides differ"),
        values: vec![("lhs".into(), g.show(lhs)), ("rhs".into(), g.show(rhs))],
    })
}

/// Fails with both sides shown unless `lhs ≤ rhs`.
pub fn expect_leq<Q, G>(q: &Q, g: &G, what: &str, lhs: &G::Mor, rhs: &G::Mor) -> Result<Outcome>
where
    Q: crate::Quantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    Ok((!q.leq(lhs, rhs)?).then(|| Fail {
        detail: format!("{what}: lhs is not below rhs"),
        values: vec![("lhs".into(), g.show(lhs)), ("rhs".into(), g.show(rhs))],
    }))
}

/// Fails unless every flag holds; `names` labels the flags.
pub fn expect_all(what: &str, names: &[&str], flags: &[bool]) -> Outcome {
    let bad: Vec<&str> = names.iter().zip(flags).filter(|(_, &b)| !b).map(|(n, _)| *n).collect();
    (!bad.is_empty()).then(|| Fail {
        detail: format!("{what}: {} failed", bad.join(", ")),
        values: Vec::new(),
    })
}

/// Collects law results for one suite run.
pub struct Cx<'a> {
    cfg: &'a Config,
    scope: String,
    results: Vec<LawResult>,
}

impl<'a> Cx<'a> {
    pub fn new(cfg: &'a Config, scope: &str) -> Self {
        Cx {
            cfg,
            scope: scope.to_string(),
            results: Vec::new(),
        }
    }

    pub fn config(&self) -> &Config {
        self.cfg
    }

    /// The generator stream of one law.
    pub fn rng(&self, law: &str) -> Rng8 {
        Rng8::seed_from_u64(fnv(&[&self.scope, law], self.cfg.seed))
    }

    pub fn finish(self) -> Vec<LawResult> {
        self.results
    }

    pub fn results(&self) -> &[LawResult] {
        &self.results
    }

    fn push(&mut self, law: &str, cases: usize, counterexample: Option<Counterexample>, start: Instant) {
        self.results.push(LawResult {
            law: law.to_string(),
            verdict: if counterexample.is_some() { Verdict::Fail } else { Verdict::Pass },
            cases,
            counterexample,
            elapsed_ms: self.cfg.timings.then(|| start.elapsed().as_millis() as u64),
        });
    }

    /// Runs `check` over explicit items; `show` renders an item as inputs.
    pub fn each<T>(
        &mut self,
        law: &str,
        items: impl IntoIterator<Item = T>,
        show: impl Fn(&T) -> Vec<Value>,
        mut check: impl FnMut(&T) -> Result<Outcome>,
    ) {
        let start = Instant::now();
        let mut cases = 0;
        let mut cex = None;
        for item in items {
            let outcome = check(&item).unwrap_or_else(|e| fail(format!("error: {e}")));
            if let Some(f) = outcome {
                cex = Some(Counterexample {
                    case: cases,
                    detail: f.detail,
                    inputs: show(&item),
                    values: f.values,
                });
                cases += 1;
                break;
            }
            cases += 1;
        }
        self.push(law, cases, cex, start);
    }

    /// Like [`Cx::each`], with items produced lazily from the law's stream.
    pub fn each_with<T>(
        &mut self,
        law: &str,
        make: impl FnOnce(&mut Rng8) -> Result<Vec<T>>,
        show: impl Fn(&T) -> Vec<Value>,
        check: impl FnMut(&T) -> Result<Outcome>,
    ) {
        let mut rng = self.rng(law);
        match make(&mut rng) {
            Ok(items) => self.each(law, items, show, check),
            Err(e) => self.push(
                law,
                0,
                Some(Counterexample {
                    case: 0,
                    detail: format!("error while generating cases: {e}"),
                    inputs: Vec::new(),
                    values: Vec::new(),
                }),
                Instant::now(),
            ),
        }
    }

    /// Runs `check` over tuples of `objects` objects and morphisms typed by
    /// `shape` (pairs of object positions). Exhaustive objects with small
    /// homsets are enumerated in full; otherwise cases are sampled.
    pub fn cases<G: Generator>(
        &mut self,
        g: &G,
        law: &str,
        objects: usize,
        shape: &[(usize, usize)],
        mut check: impl FnMut(&[G::Obj], &[G::Mor]) -> Result<Outcome>,
    ) {
        let start = Instant::now();
        let mut rng = self.rng(law);
        let cfg = self.cfg.clone();
        let mut count = 0usize;
        let mut cex: Option<Counterexample> = None;
        let mut visit = |os: &[G::Obj], ms: &[G::Mor]| -> bool {
            let outcome = check(os, ms).unwrap_or_else(|e| fail(format!("error: {e}")));
            count += 1;
            if let Some(f) = outcome {
                let mut inputs: Vec<Value> = os.iter().map(|o| g.show_object(o)).collect();
                inputs.extend(ms.iter().map(|m| g.show(m)));
                cex = Some(Counterexample {
                    case: count - 1,
                    detail: f.detail,
                    inputs,
                    values: f.values,
                });
                return false;
            }
            true
        };
        match g.exhaustive_objects() {
            Some(all) => {
                'tuples: for idx in odometer(&vec![all.len(); objects]) {
                    let os: Vec<G::Obj> = idx.iter().map(|&k| all[k].clone()).collect();
                    let homs: Vec<Option<Vec<G::Mor>>> =
                        shape.iter().map(|&(s, t)| g.homset(&os[s], &os[t])).collect();
                    let total = homs
                        .iter()
                        .try_fold(1usize, |acc, h| h.as_ref().and_then(|h| acc.checked_mul(h.len())));
                    match total {
                        Some(n) if n <= cfg.exhaustive_limit => {
                            let homs: Vec<Vec<G::Mor>> = homs.into_iter().map(Option::unwrap).collect();
                            let sizes: Vec<usize> = homs.iter().map(Vec::len).collect();
                            for pick in odometer(&sizes) {
                                let ms: Vec<G::Mor> = pick.iter().zip(&homs).map(|(&k, h)| h[k].clone()).collect();
                                if !visit(&os, &ms) {
                                    break 'tuples;
                                }
                            }
                        }
                        _ => {
                            for _ in 0..cfg.tuple_samples {
                                let ms: Vec<G::Mor> = shape
                                    .iter()
                                    .zip(&homs)
                                    .map(|(&(s, t), h)| match h {
                                        Some(h) if !h.is_empty() => h[rng.gen_range(0..h.len())].clone(),
                                        _ => g.random_morphism(&os[s], &os[t], &mut rng),
                                    })
                                    .collect();
                                if !visit(&os, &ms) {
                                    break 'tuples;
                                }
                            }
                        }
                    }
                }
            }
            None => {
                for _ in 0..cfg.samples {
                    let os: Vec<G::Obj> = (0..objects).map(|_| g.random_object(&mut rng)).collect();
                    let ms: Vec<G::Mor> =
                        shape.iter().map(|&(s, t)| g.random_morphism(&os[s], &os[t], &mut rng)).collect();
                    if !visit(&os, &ms) {
                        break;
                    }
                }
            }
        }
        self.push(law, count, cex, start);
    }
}

/// All index vectors below `sizes`, first coordinate fastest.
pub fn odometer(sizes: &[usize]) -> impl Iterator<Item = Vec<usize>> {
    let sizes = sizes.to_vec();
    let empty = sizes.contains(&0);
    let mut next = (!empty).then(|| vec![0usize; sizes.len()]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        let mut k = 0;
        while k < sizes.len() {
            succ[k] += 1;
            if succ[k] < sizes[k] {
                next = Some(succ);
                break;
            }
            succ[k] = 0;
            k += 1;
        }
        Some(cur)
    })
}

/// Runs one suite on one instance.
pub fn run_suite(suite: &Suite, instance: &Instance, cfg: &Config) -> SuiteReport {
    let start = Instant::now();
    let mut report = SuiteReport {
        suite: suite.name.to_string(),
        anchor: suite.anchor.to_string(),
        instance: instance.name(),
        seed: cfg.seed,
        verdict: Verdict::Pass,
        skipped: None,
        laws: Vec::new(),
        elapsed_ms: None,
    };
    if !suite.kinds.contains(&instance.kind()) {
        report.verdict = Verdict::Skipped;
        report.skipped = Some(format!("{} does not supply {}", instance.name(), suite.needs));
    } else {
        let mut cx = Cx::new(cfg, &format!("{}/{}", suite.name, instance.name()));
        let skipped = (suite.run)(instance, &mut cx);
        report.laws = cx.finish();
        if let Some(why) = skipped {
            report.verdict = Verdict::Skipped;
            report.skipped = Some(why);
        } else if report.laws.iter().any(|l| l.verdict == Verdict::Fail) {
            report.verdict = Verdict::Fail;
        }
    }
    report.elapsed_ms = cfg.timings.then(|| start.elapsed().as_millis() as u64);
    report
}

/// Runs suite/instance pairs concurrently; the output order is the input order.
pub fn run_suites(jobs: &[(Suite, Instance)], cfg: &Config) -> Vec<SuiteReport> {
    jobs.par_iter().map(|(s, i)| run_suite(s, i, cfg)).collect()
}

pub fn render_json(reports: &[SuiteReport]) -> String {
    crate::serial::render(&reports)
}

pub fn render_text(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("{} on {} (seed {}): {}", r.suite, r.instance, r.seed, r.verdict.as_str()));
        if let Some(ms) = r.elapsed_ms {
            out.push_str(&format!(" [{ms} ms]"));
        }
        out.push('\n');
        if let Some(why) = &r.skipped {
            out.push_str(&format!("  {why}\n"));
        }
        for l in &r.laws {
            out.push_str(&format!("  {:<7} {} ({} cases)", l.verdict.as_str(), l.law, l.cases));
            if let Some(ms) = l.elapsed_ms {
                out.push_str(&format!(" [{ms} ms]"));
            }
            out.push('\n');
            if let Some(c) = &l.counterexample {
                out.push_str(&format!("    case {}: {}\n", c.case, c.detail));
                for v in &c.inputs {
                    out.push_str(&format!("    input {v}\n"));
                }
                for (k, v) in &c.values {
                    out.push_str(&format!("    {k} = {v}\n"));
                }
            }
        }
    }
    out
}
