//! Budgeted property runs, counterexample minimization and the full suite.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::algebra::{AxiomMode, HyperVectorSpace};
use crate::bipolar::BipolarFuzzySet;
use crate::io;
use crate::rational::Rational;
use crate::soft::BipolarFuzzySoftSet;
use crate::transform::{classify_map, FuzzySoftFunction};

use super::generate::{arbitrary_bfs, constructive_family, generate_hvs, soft_set, subhyperspace_bfs, GenerationStats};
use super::property::{evaluate, Instance, Outcome, PropertyId};
use super::{derive_seed, rng_for, FieldChoice, InstanceSpec, Strategy};

pub(crate) fn hex_digest(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

/// A fixed list of hypervector spaces instances are drawn from.
#[derive(Debug, Clone)]
pub struct Pool {
    pub label: String,
    pub mode: AxiomMode,
    pub spaces: Vec<HyperVectorSpace>,
    pub descriptions: Vec<String>,
    pub stats: BTreeMap<String, GenerationStats>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PoolSummary {
    pub label: String,
    pub mode: String,
    pub members: Vec<String>,
    pub generation: BTreeMap<String, GenerationStats>,
}

fn describe(strategy: Strategy, field: FieldChoice, v: &HyperVectorSpace) -> String {
    let text = io::print(&{
        let mut d = io::Document::default();
        d.push_hvs("V", v);
        d
    });
    format!("{strategy} |V|={} K=Z{} {}", v.dim(), field.order(), &hex_digest(&text)[..12])
}

impl Pool {
    pub fn new(label: impl Into<String>, mode: AxiomMode) -> Self {
        Pool { label: label.into(), mode, spaces: Vec::new(), descriptions: Vec::new(), stats: BTreeMap::new() }
    }

    pub fn push(&mut self, description: impl Into<String>, v: HyperVectorSpace) {
        self.descriptions.push(description.into());
        self.spaces.push(v);
    }

    /// Up to `count` instances from the spec's stream; constructive
    /// families contribute each member once.
    pub fn extend_from_spec(&mut self, spec: &InstanceSpec, count: usize) {
        let mut stream = generate_hvs(spec);
        let limit = match spec.strategy {
            Strategy::FilteredRandom => count,
            s => constructive_family(s, spec.field, spec.max_carrier).len().min(count),
        };
        for v in stream.by_ref().take(limit) {
            self.push(describe(spec.strategy, spec.field, &v), v);
        }
        let key = format!("{}/Z{}", spec.strategy, spec.field.order());
        self.stats.insert(key, stream.stats());
    }

    pub fn from_spec(spec: &InstanceSpec, count: usize) -> Self {
        let mut pool = Pool::new(format!("{}-Z{}", spec.strategy, spec.field.order()), spec.mode);
        pool.extend_from_spec(spec, count);
        pool
    }

    /// Every constructive family over ℤ₂ and ℤ₃ up to nine elements plus
    /// `random` filtered-random tables per field.
    pub fn strict(seed: u64, random: usize) -> Self {
        let mut pool = Pool::new("strict", AxiomMode::STRICT);
        for field in [FieldChoice::Z2, FieldChoice::Z3] {
            for strategy in [Strategy::Total, Strategy::Classical, Strategy::Inflated] {
                let spec = InstanceSpec { max_carrier: 9, field, strategy, mode: AxiomMode::STRICT, seed };
                pool.extend_from_spec(&spec, usize::MAX);
            }
        }
        for (i, field) in [FieldChoice::Z2, FieldChoice::Z3].into_iter().enumerate() {
            let spec = InstanceSpec {
                max_carrier: 4,
                field,
                strategy: Strategy::FilteredRandom,
                mode: AxiomMode::STRICT,
                seed: derive_seed(seed, i as u64),
            };
            pool.extend_from_spec(&spec, random);
        }
        pool
    }

    pub fn fixture(mode: AxiomMode) -> Self {
        let mut pool = Pool::new(format!("fixture-{}", mode.name()), mode);
        let v = HyperVectorSpace::z4_over_z2();
        pool.push(describe(Strategy::Fixture, FieldChoice::Z2, &v), v);
        pool
    }

    pub fn with_fixture(mut self) -> Self {
        let v = HyperVectorSpace::z4_over_z2();
        self.push(describe(Strategy::Fixture, FieldChoice::Z2, &v), v);
        self.label.push_str("+fixture");
        self
    }

    pub fn summary(&self) -> PoolSummary {
        PoolSummary {
            label: self.label.clone(),
            mode: self.mode.name(),
            members: self.descriptions.clone(),
            generation: self.stats.clone(),
        }
    }
}

// ---------------------------------------------------------------------------
// Instance drawing

const PARAMS: [&str; 3] = ["c", "d", "e"];
const TARGET_PARAMS: [&str; 3] = ["u", "v", "w"];
/// Exhaustive map enumeration is used when `|W|^|V|` stays below this.
const MAP_ENUMERATION_LIMIT: usize = 65_536;

fn pick_params<'a>(rng: &mut ChaCha8Rng, names: &[&'a str]) -> Vec<&'a str> {
    loop {
        let chosen: Vec<&str> = names.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if !chosen.is_empty() {
            return chosen;
        }
    }
}

fn mixed_set(v: &HyperVectorSpace, params: &[&str], rng: &mut ChaCha8Rng) -> BipolarFuzzySoftSet {
    soft_set(
        v.dim(),
        params,
        || if rng.gen_bool(0.5) { arbitrary_bfs(v.dim(), rng) } else { subhyperspace_bfs(v, rng) },
    )
}

fn structured_set(v: &HyperVectorSpace, params: &[&str], rng: &mut ChaCha8Rng) -> BipolarFuzzySoftSet {
    soft_set(v.dim(), params, || subhyperspace_bfs(v, rng))
}

/// Candidate carrier maps `V → W`, each paired with its classification.
#[derive(Debug, Default, Clone)]
struct MapCandidates {
    good: Vec<Vec<usize>>,
    linear: Vec<Vec<usize>>,
}

fn map_candidates(v: &HyperVectorSpace, w: &HyperVectorSpace) -> MapCandidates {
    let (n, m) = (v.dim(), w.dim());
    let mut phis: Vec<Vec<usize>> = Vec::new();
    let mut add = |phi: Vec<usize>| {
        if !phis.contains(&phi) {
            phis.push(phi);
        }
    };
    if v == w {
        add((0..n).collect());
        for k in 0..n {
            add((0..n).map(|x| v.group().multiple(k, x)).collect());
        }
    }
    add(vec![w.group().zero(); n]);
    if (m as f64).powi(n as i32) <= MAP_ENUMERATION_LIMIT as f64 {
        let (gv, gw) = (v.group(), w.group());
        let mut phi = vec![0usize; n];
        loop {
            if (0..n).all(|x| (0..n).all(|y| phi[gv.add(x, y)] == gw.add(phi[x], phi[y]))) {
                add(phi.clone());
            }
            let mut i = 0;
            while i < n && phi[i] + 1 == m {
                phi[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            phi[i] += 1;
        }
    }
    let mut out = MapCandidates::default();
    if v.field() != w.field() {
        return out;
    }
    for phi in phis {
        let report = classify_map(&phi, v, w).expect("shared field and matching carriers");
        if report.good {
            out.good.push(phi.clone());
        }
        if report.linear {
            out.linear.push(phi);
        }
    }
    out
}

struct Drawer<'a> {
    pool: &'a Pool,
    seed: u64,
    maps: HashMap<(usize, usize), MapCandidates>,
}

impl<'a> Drawer<'a> {
    fn new(pool: &'a Pool, seed: u64) -> Self {
        Drawer { pool, seed, maps: HashMap::new() }
    }

    fn draw(&mut self, pid: PropertyId, index: u64) -> Instance {
        let mut rng = rng_for(self.seed, index);
        let iv = rng.gen_range(0..self.pool.spaces.len());
        let v = &self.pool.spaces[iv];
        use PropertyId::*;
        let mut sets = Vec::new();
        let mut target = None;
        match pid {
            P1 => {
                let (a, b) = (pick_params(&mut rng, &PARAMS), pick_params(&mut rng, &PARAMS));
                sets.push(("F".to_string(), mixed_set(v, &a, &mut rng)));
                sets.push(("G".to_string(), mixed_set(v, &b, &mut rng)));
            }
            P2 | P7 | P7NonStrong => {
                let a = pick_params(&mut rng, &PARAMS);
                let f = if pid == P2 { mixed_set(v, &a, &mut rng) } else { structured_set(v, &a, &mut rng) };
                sets.push(("F".to_string(), f));
            }
            P3 => {
                let (a, b) = (pick_params(&mut rng, &PARAMS), pick_params(&mut rng, &PARAMS));
                for i in 0..rng.gen_range(1..=3) {
                    sets.push((format!("F{i}"), mixed_set(v, &a, &mut rng)));
                }
                for j in 0..rng.gen_range(1..=3) {
                    sets.push((format!("G{j}"), mixed_set(v, &b, &mut rng)));
                }
            }
            P4DisjointUnion => {
                let a = pick_params(&mut rng, &["c", "d"]);
                let b = pick_params(&mut rng, &["e", "f"]);
                sets.push(("F".to_string(), structured_set(v, &a, &mut rng)));
                sets.push(("G".to_string(), structured_set(v, &b, &mut rng)));
            }
            P4UnionOverlap => {
                let mut a = pick_params(&mut rng, &["d", "e"]);
                let mut b = pick_params(&mut rng, &["d", "e"]);
                a.insert(0, "c");
                b.insert(0, "c");
                sets.push(("F".to_string(), structured_set(v, &a, &mut rng)));
                sets.push(("G".to_string(), structured_set(v, &b, &mut rng)));
            }
            P4Meet | P4ExtendedMeet | P4RestrictedUnion | P4And | P5 | P6 | P8 => {
                let (a, b) = (pick_params(&mut rng, &PARAMS), pick_params(&mut rng, &PARAMS));
                sets.push(("F".to_string(), structured_set(v, &a, &mut rng)));
                sets.push(("G".to_string(), structured_set(v, &b, &mut rng)));
            }
            P9 | P9Collapse | P10 => {
                let same_field: Vec<usize> =
                    (0..self.pool.spaces.len()).filter(|&j| self.pool.spaces[j].field() == v.field()).collect();
                let iw = if rng.gen_bool(0.5) { iv } else { *same_field.choose(&mut rng).expect("V itself qualifies") };
                let w = &self.pool.spaces[iw];
                let cands = self.maps.entry((iv, iw)).or_insert_with(|| map_candidates(v, w));
                let list = if pid == P10 { &cands.linear } else { &cands.good };
                let phi = list.choose(&mut rng).cloned();
                let a = if pid == P9Collapse {
                    let mut a = pick_params(&mut rng, &["d", "e"]);
                    a.insert(0, "c");
                    a
                } else {
                    pick_params(&mut rng, &PARAMS)
                };
                let mut f = BTreeMap::new();
                match pid {
                    P9 => {
                        let mut names = TARGET_PARAMS.to_vec();
                        names.shuffle(&mut rng);
                        for (p, u) in a.iter().zip(names) {
                            f.insert(p.to_string(), u.to_string());
                        }
                        sets.push(("F".to_string(), structured_set(v, &a, &mut rng)));
                    }
                    P9Collapse => {
                        for p in &a {
                            f.insert(p.to_string(), "u".to_string());
                        }
                        sets.push(("F".to_string(), structured_set(v, &a, &mut rng)));
                    }
                    _ => {
                        let b = pick_params(&mut rng, &TARGET_PARAMS);
                        for p in &a {
                            f.insert(p.to_string(), b.choose(&mut rng).expect("nonempty").to_string());
                        }
                        sets.push(("G".to_string(), structured_set(w, &b, &mut rng)));
                    }
                }
                if let Some(phi) = phi {
                    let t = FuzzySoftFunction::new(phi, w.dim(), f).expect("candidate maps land in W");
                    target = Some((w.clone(), t));
                }
            }
        }
        Instance { space: v.clone(), sets, target }
    }
}

// ---------------------------------------------------------------------------
// Minimization

fn crisp_cuts(b: &BipolarFuzzySet) -> Vec<BipolarFuzzySet> {
    let n = b.len();
    let mut out = Vec::new();
    let zero = Rational::ZERO;
    if b.neg_values().iter().any(|v| !v.is_zero()) {
        out.push(BipolarFuzzySet::from_fn(n, |x| (b.pos(x), zero)));
    }
    if b.neg_values().iter().any(|&v| v != zero && v != Rational::MINUS_ONE) {
        let levels: BTreeSet<Rational> = b.neg_values().iter().copied().filter(|v| v.is_negative()).collect();
        for s in levels {
            out.push(BipolarFuzzySet::from_fn(n, |x| {
                (b.pos(x), if b.neg(x) <= s { Rational::MINUS_ONE } else { zero })
            }));
        }
    }
    if b.pos_values().iter().any(|&v| v != zero && v != Rational::ONE) {
        let levels: BTreeSet<Rational> = b.pos_values().iter().copied().filter(|v| !v.is_zero()).collect();
        for t in levels {
            out.push(BipolarFuzzySet::from_fn(n, |x| (if b.pos(x) >= t { Rational::ONE } else { zero }, b.neg(x))));
        }
    }
    out
}

fn shrink_candidates(inst: &Instance) -> Vec<Instance> {
    let mut out = Vec::new();
    for (i, (name, set)) in inst.sets.iter().enumerate() {
        for p in set.params() {
            let mut c = inst.clone();
            c.sets[i].1 = set.without(p);
            if name == "F" {
                if let Some((w, t)) = &inst.target {
                    let mut params = t.param_map().clone();
                    params.remove(p);
                    let t = FuzzySoftFunction::new(t.phi().to_vec(), t.codomain(), params).expect("same carrier map");
                    c.target = Some((w.clone(), t));
                }
            }
            out.push(c);
        }
    }
    if let Some((w, t)) = &inst.target {
        if inst.set("G").is_some() {
            for p in t.param_map().keys() {
                let mut params = t.param_map().clone();
                params.remove(p);
                let t = FuzzySoftFunction::new(t.phi().to_vec(), t.codomain(), params).expect("same carrier map");
                out.push(Instance { target: Some((w.clone(), t)), ..inst.clone() });
            }
        }
    }
    for (i, (_, set)) in inst.sets.iter().enumerate() {
        for (p, b) in set.iter() {
            for cut in crisp_cuts(b) {
                let mut c = inst.clone();
                let mut s = set.without(p);
                s.insert(p, cut).expect("same carrier");
                c.sets[i].1 = s;
                out.push(c);
            }
        }
    }
    out
}

/// Greedy single-step shrinking: drop parameters, then replace degrees by
/// crisp level cuts, keeping each step only while the property still fails.
pub fn minimize(pid: PropertyId, mode: AxiomMode, inst: Instance) -> (Instance, String) {
    let mut cur = inst;
    let mut witness = match evaluate(pid, mode, &cur) {
        Outcome::Fails(w) => w,
        other => panic!("minimize called on a non-failing instance: {other:?}"),
    };
    'outer: loop {
        for cand in shrink_candidates(&cur) {
            if let Outcome::Fails(w) = evaluate(pid, mode, &cand) {
                cur = cand;
                witness = w;
                continue 'outer;
            }
        }
        return (cur, witness);
    }
}

// ---------------------------------------------------------------------------
// Results

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// No counterexample among `budget` qualifying instances.
    Pass,
    /// A counterexample was found.
    Fail,
    /// Too few instances met the hypotheses; no counterexample found.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Index of the instance in the run.
    pub index: u64,
    /// Digest of the instance before minimization.
    pub original_digest: String,
    /// Canonical text of the minimized instance.
    pub document: String,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyResult {
    pub id: PropertyId,
    pub probe: bool,
    pub pool: String,
    pub mode: String,
    pub seed: u64,
    pub verdict: Verdict,
    pub budget: usize,
    pub tried: usize,
    pub accepted: usize,
    pub rejected: usize,
    /// SHA-256 over the canonical text of every instance tried, in order.
    pub digest: String,
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PropertyResult {
    /// For theorems, a pass; for probes, a found counterexample.
    pub fn as_expected(&self) -> bool {
        if self.probe {
            self.verdict == Verdict::Fail
        } else {
            self.verdict == Verdict::Pass
        }
    }
}

/// Runs `pid` over `instances` until `budget` of them satisfy the
/// hypotheses or one fails. Rejected instances count towards `tried` only.
pub fn run_property(
    pid: PropertyId,
    mode: AxiomMode,
    instances: impl IntoIterator<Item = Instance>,
    budget: usize,
) -> PropertyResult {
    let start = Instant::now();
    let mut hasher = Sha256::new();
    let (mut tried, mut accepted, mut rejected) = (0, 0, 0);
    let mut counterexample = None;
    for (index, inst) in instances.into_iter().enumerate() {
        if accepted >= budget {
            break;
        }
        tried += 1;
        let text = io::print(&inst.to_document());
        hasher.update(text.as_bytes());
        match evaluate(pid, mode, &inst) {
            Outcome::Holds => accepted += 1,
            Outcome::Rejected(_) => rejected += 1,
            Outcome::Fails(_) => {
                accepted += 1;
                let (small, witness) = minimize(pid, mode, inst);
                counterexample = Some(Counterexample {
                    index: index as u64,
                    original_digest: hex_digest(&text),
                    document: io::print(&small.to_document()),
                    witness,
                });
                break;
            }
        }
    }
    let verdict = match (&counterexample, accepted >= budget) {
        (Some(_), _) => Verdict::Fail,
        (None, true) => Verdict::Pass,
        (None, false) => Verdict::Exhausted,
    };
    PropertyResult {
        id: pid,
        probe: pid.is_probe(),
        pool: String::new(),
        mode: mode.name(),
        seed: 0,
        verdict,
        budget,
        tried,
        accepted,
        rejected,
        digest: hasher.finalize().iter().map(|b| format!("{b:02x}")).collect(),
        counterexample,
        elapsed: start.elapsed(),
    }
}

/// Draws seeded instances from `pool`; gives up after `20 · budget + 100`
/// draws if the hypotheses keep rejecting.
pub fn run_in_pool(pid: PropertyId, pool: &Pool, seed: u64, budget: usize) -> PropertyResult {
    let mut drawer = Drawer::new(pool, derive_seed(seed, pid as u64));
    let cap = budget.saturating_mul(20).saturating_add(100) as u64;
    let instances = (0..cap).map(move |i| drawer.draw(pid, i));
    let mut result = run_property(pid, pool.mode, instances, budget);
    result.pool = pool.label.clone();
    result.seed = seed;
    result
}

/// Counterexample search over the pool the spec describes.
pub fn search_counterexamples(pid: PropertyId, spec: &InstanceSpec, budget: usize) -> PropertyResult {
    let pool = Pool::from_spec(spec, 8);
    if pool.spaces.is_empty() {
        return PropertyResult {
            id: pid,
            probe: pid.is_probe(),
            pool: pool.label,
            mode: spec.mode.name(),
            seed: spec.seed,
            verdict: Verdict::Exhausted,
            budget,
            tried: 0,
            accepted: 0,
            rejected: 0,
            digest: hex_digest(""),
            counterexample: None,
            elapsed: Duration::ZERO,
        };
    }
    run_in_pool(pid, &pool, spec.seed, budget)
}

/// Re-runs a reported counterexample from its document alone.
pub fn reverify(pid: PropertyId, mode: AxiomMode, cx: &Counterexample) -> Result<Outcome, String> {
    let doc = io::parse(&cx.document).map_err(|e| e.to_string())?;
    let inst = Instance::from_document(&doc)?;
    Ok(evaluate(pid, mode, &inst))
}

// ---------------------------------------------------------------------------
// Suite

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Instances for P1–P3.
    pub basic_budget: usize,
    /// Instances for the closure properties, P9/P10 and the fixture runs.
    pub closure_budget: usize,
    /// Instances for the union-overlap probe.
    pub probe_budget: usize,
    /// Filtered-random tables per field in the strict pool.
    pub random_spaces: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, basic_budget: 200, closure_budget: 100, probe_budget: 10_000, random_spaces: 6 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub pools: Vec<PoolSummary>,
    /// Theorems on strict-mode instances (P1–P3 also include the fixture).
    pub theorems: Vec<PropertyResult>,
    /// P4–P10 on the fixture under compat mode, kept apart from the above.
    pub fixture_compat: Vec<PropertyResult>,
    /// Negated-hypothesis probes.
    pub probes: Vec<PropertyResult>,
    /// Theorems whose run found a counterexample.
    pub failing_theorems: Vec<PropertyId>,
}

pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let strict = Pool::strict(config.seed, config.random_spaces);
    let basic = strict.clone().with_fixture();
    let compat = Pool::fixture(AxiomMode::COMPAT);
    let mut theorems = Vec::new();
    for pid in PropertyId::THEOREMS {
        let (pool, budget) =
            if pid.needs_axioms() { (&strict, config.closure_budget) } else { (&basic, config.basic_budget) };
        theorems.push(run_in_pool(pid, pool, config.seed, budget));
    }
    let fixture_compat = PropertyId::THEOREMS
        .into_iter()
        .filter(|p| p.needs_axioms())
        .map(|pid| run_in_pool(pid, &compat, config.seed, config.closure_budget))
        .collect();
    let probes = PropertyId::PROBES
        .into_iter()
        .map(|pid| {
            let budget = if pid == PropertyId::P4UnionOverlap { config.probe_budget } else { config.closure_budget };
            run_in_pool(pid, &strict, config.seed, budget)
        })
        .collect();
    let failing_theorems = theorems.iter().filter(|r| r.verdict == Verdict::Fail).map(|r| r.id).collect();
    SuiteReport {
        seed: config.seed,
        pools: vec![strict.summary(), basic.summary(), compat.summary()],
        theorems,
        fixture_compat,
        probes,
        failing_theorems,
    }
}
