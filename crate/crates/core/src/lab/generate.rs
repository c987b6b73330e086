//! Seeded instance generators: hypervector spaces and soft sets that pass
//! the structure checks.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{check_axioms, AbelianGroup, AxiomMode, FiniteField, HyperVectorSpace, Subset};
use crate::bipolar::BipolarFuzzySet;
use crate::rational::Rational;
use crate::soft::BipolarFuzzySoftSet;
use crate::structure::is_bfs_hypervector_space;

use super::{rng_for, FieldChoice, InstanceSpec, Strategy};

/// Largest carrier the filtered-random strategy draws over. Valid tables
/// are already rare at four elements (44 of 15⁸ over ℤ₄ with ℤ₂).
pub const RANDOM_CARRIER_LIMIT: usize = 4;

/// Row draws allowed for one row before the partial table is discarded.
const ROW_BUDGET: u64 = 200_000;
/// Full restarts allowed per emitted instance.
const RESTART_BUDGET: u64 = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct GenerationStats {
    pub emitted: u64,
    pub rows_drawn: u64,
    pub rows_accepted: u64,
    pub restarts: u64,
    pub exhausted: bool,
}

impl GenerationStats {
    /// Fraction of drawn rows consistent with the rows before them.
    pub fn acceptance_rate(&self) -> f64 {
        if self.rows_drawn == 0 {
            1.0
        } else {
            self.rows_accepted as f64 / self.rows_drawn as f64
        }
    }
}

/// The constructive members of a family for one field, in a fixed order.
pub fn constructive_family(strategy: Strategy, field: FieldChoice, max_carrier: usize) -> Vec<HyperVectorSpace> {
    let p = field.order();
    let k_max = (1..=6u32).take_while(|&k| p.pow(k) <= max_carrier).last().unwrap_or(0);
    let mut out = Vec::new();
    match strategy {
        Strategy::Fixture => {
            if field == FieldChoice::Z2 && max_carrier >= 4 {
                out.push(HyperVectorSpace::z4_over_z2());
            }
        }
        Strategy::Total => {
            let k = field.field();
            for n in 2..=max_carrier.min(5) {
                out.push(HyperVectorSpace::total(k.clone(), AbelianGroup::cyclic(n)));
            }
            if 4 <= max_carrier {
                out.push(HyperVectorSpace::total(k.clone(), AbelianGroup::elementary(2, 2)));
            }
            if p != 2 && p * p <= max_carrier {
                out.push(HyperVectorSpace::total(k, AbelianGroup::elementary(p, 2)));
            }
        }
        Strategy::Classical => {
            for k in 1..=k_max {
                out.push(HyperVectorSpace::classical(p, k).expect("prime field"));
            }
        }
        Strategy::Inflated => {
            for k in 2..=k_max {
                // Spans of leading basis vectors e₁, …, eⱼ for 1 ≤ j < k.
                for j in 1..k {
                    let span: Subset = (0..p.pow(j)).collect();
                    out.push(HyperVectorSpace::inflated(p, k, span).expect("coordinate span is a subspace"));
                }
            }
        }
        Strategy::FilteredRandom => {}
    }
    out
}

/// Random groups the filtered-random strategy chooses among.
fn random_groups(max_carrier: usize) -> Vec<AbelianGroup> {
    let bound = max_carrier.min(RANDOM_CARRIER_LIMIT);
    let mut groups: Vec<AbelianGroup> = (2..=bound).map(AbelianGroup::cyclic).collect();
    if bound >= 4 {
        groups.push(AbelianGroup::elementary(2, 2));
    }
    groups
}

/// Checks every axiom instance whose scalars all index assigned rows.
fn prefix_consistent(k: &FiniteField, g: &AbelianGroup, rows: &[Vec<Subset>], mode: AxiomMode) -> bool {
    let r = rows.len();
    let n = g.order();
    let extend = |a: usize, s: Subset| s.iter().fold(Subset::EMPTY, |acc, t| acc.union(rows[a][t]));
    // Only instances involving the newest row need checking; older ones
    // passed when their rows were assigned.
    let last = r - 1;
    for x in 0..n {
        for y in 0..n {
            let left = rows[last][g.add(x, y)];
            if !mode.h1.holds(left, g.set_sum(rows[last][x], rows[last][y])) {
                return false;
            }
        }
    }
    #[allow(clippy::needless_range_loop)]
    for a in 0..r {
        for b in 0..r {
            let s = k.add(a, b);
            let m = k.mul(a, b);
            let involves_last = a == last || b == last;
            for x in 0..n {
                if s < r && (involves_last || s == last) {
                    let right = g.set_sum(rows[a][x], rows[b][x]);
                    if !mode.h2.holds(rows[s][x], right) {
                        return false;
                    }
                }
                if m < r && (involves_last || m == last) && !mode.h3.holds(extend(a, rows[b][x]), rows[m][x]) {
                    return false;
                }
            }
        }
    }
    for a in 0..r {
        let na = k.neg(a);
        if a != last && na != last {
            continue;
        }
        for x in 0..n {
            let target = g.set_negate(rows[a][x]);
            if rows[a][g.neg(x)] != target || (na < r && rows[na][x] != target) {
                return false;
            }
        }
    }
    let one = k.one();
    if one == last && (0..n).any(|x| !rows[one][x].contains(x)) {
        return false;
    }
    true
}

/// A seeded, reproducible stream of hypervector spaces passing
/// `check_axioms` under `spec.mode`.
#[derive(Debug, Clone)]
pub struct HvsStream {
    spec: InstanceSpec,
    family: Vec<HyperVectorSpace>,
    groups: Vec<AbelianGroup>,
    next: usize,
    rng: ChaCha8Rng,
    stats: GenerationStats,
}

pub fn generate_hvs(spec: &InstanceSpec) -> HvsStream {
    let family = constructive_family(spec.strategy, spec.field, spec.max_carrier)
        .into_iter()
        .filter(|v| check_axioms(v, spec.mode).passed())
        .collect();
    HvsStream {
        spec: spec.clone(),
        family,
        groups: random_groups(spec.max_carrier),
        next: 0,
        rng: rng_for(spec.seed, 0),
        stats: GenerationStats::default(),
    }
}

impl HvsStream {
    pub fn stats(&self) -> GenerationStats {
        self.stats
    }

    fn draw_random(&mut self) -> Option<HyperVectorSpace> {
        let k = self.spec.field.field();
        let q = k.order();
        for _ in 0..RESTART_BUDGET {
            let g = self.groups.choose(&mut self.rng)?.clone();
            let n = g.order();
            let mut rows: Vec<Vec<Subset>> = Vec::with_capacity(q);
            let mut stuck = false;
            while rows.len() < q && !stuck {
                stuck = true;
                for _ in 0..ROW_BUDGET {
                    self.stats.rows_drawn += 1;
                    let row: Vec<Subset> =
                        (0..n).map(|_| Subset::from_bits(self.rng.gen_range(1..(1u64 << n)))).collect();
                    rows.push(row);
                    if prefix_consistent(&k, &g, &rows, self.spec.mode) {
                        self.stats.rows_accepted += 1;
                        stuck = false;
                        break;
                    }
                    rows.pop();
                }
            }
            if stuck {
                self.stats.restarts += 1;
                continue;
            }
            let v = HyperVectorSpace::new(k.clone(), g, rows).expect("cells drawn nonempty within the carrier");
            if check_axioms(&v, self.spec.mode).passed() {
                return Some(v);
            }
            self.stats.restarts += 1;
        }
        None
    }
}

impl Iterator for HvsStream {
    type Item = HyperVectorSpace;

    fn next(&mut self) -> Option<HyperVectorSpace> {
        if self.stats.exhausted {
            return None;
        }
        let item = if self.spec.strategy == Strategy::FilteredRandom {
            self.draw_random()
        } else if self.family.is_empty() {
            None
        } else {
            let v = self.family[self.next % self.family.len()].clone();
            self.next += 1;
            Some(v)
        };
        match item {
            Some(v) => {
                self.stats.emitted += 1;
                Some(v)
            }
            None => {
                self.stats.exhausted = true;
                None
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Soft sets

/// Degrees are drawn from the grid `k/10`.
const GRID: i64 = 10;

fn grid_pos(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(0..=GRID), GRID)
}

fn grid_neg(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(-rng.gen_range(0..=GRID), GRID)
}

/// Any bipolar fuzzy set on the grid, with no structural constraint.
pub fn arbitrary_bfs(n: usize, rng: &mut ChaCha8Rng) -> BipolarFuzzySet {
    BipolarFuzzySet::from_fn(n, |_| (grid_pos(rng), grid_neg(rng)))
}

/// Class-constant subhyperspace over a random chain of closed hulls:
/// degrees weaken from one layer to the next.
pub fn chain_bfs(v: &HyperVectorSpace, rng: &mut ChaCha8Rng) -> BipolarFuzzySet {
    let n = v.dim();
    let mut layer = vec![0usize; n];
    let mut hull = v.closed_hull(Subset::EMPTY);
    let mut depth = 0;
    loop {
        let outside: Vec<usize> = (0..n).filter(|&x| !hull.contains(x)).collect();
        let Some(&pick) = outside.choose(rng) else { break };
        depth += 1;
        let mut gens = hull;
        gens.insert(pick);
        let next = v.closed_hull(gens);
        for x in next.iter().filter(|&x| !hull.contains(x)) {
            layer[x] = depth;
        }
        hull = next;
    }
    let mut pos: Vec<Rational> = (0..=depth).map(|_| grid_pos(rng)).collect();
    let mut neg: Vec<Rational> = (0..=depth).map(|_| grid_neg(rng)).collect();
    pos.sort_by(|a, b| b.cmp(a));
    neg.sort();
    BipolarFuzzySet::from_fn(n, |x| (pos[layer[x]], neg[layer[x]]))
}

/// Raises positive degrees (lowers negative ones) until both
/// subhyperspace conditions hold. Values only move towards the extremes
/// already present, so the loop reaches a fixpoint.
pub fn repair(b: &BipolarFuzzySet, v: &HyperVectorSpace) -> BipolarFuzzySet {
    let g = v.group();
    let n = v.dim();
    let mut pos = b.pos_values().to_vec();
    let mut neg = b.neg_values().to_vec();
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                let d = g.sub(x, y);
                let lo = pos[x].min(pos[y]);
                if pos[d] < lo {
                    pos[d] = lo;
                    changed = true;
                }
                let hi = neg[x].max(neg[y]);
                if neg[d] > hi {
                    neg[d] = hi;
                    changed = true;
                }
            }
        }
        for a in 0..v.scalars() {
            for x in 0..n {
                for t in v.cell(a, x) {
                    if pos[t] < pos[x] {
                        pos[t] = pos[x];
                        changed = true;
                    }
                    if neg[t] > neg[x] {
                        neg[t] = neg[x];
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    BipolarFuzzySet::new(pos, neg).expect("repair stays within the degree ranges")
}

/// Draws one subhyperspace of `v`: class-constant over a hull chain,
/// perturbed-then-repaired, or constant.
pub fn subhyperspace_bfs(v: &HyperVectorSpace, rng: &mut ChaCha8Rng) -> BipolarFuzzySet {
    match rng.gen_range(0..10) {
        0 => BipolarFuzzySet::constant(v.dim(), grid_pos(rng), grid_neg(rng)).expect("grid degrees"),
        1..=5 => chain_bfs(v, rng),
        _ => repair(&arbitrary_bfs(v.dim(), rng), v),
    }
}

/// Builds a soft set over the given parameters from `draw`.
pub fn soft_set(n: usize, params: &[&str], mut draw: impl FnMut() -> BipolarFuzzySet) -> BipolarFuzzySoftSet {
    let mut out = BipolarFuzzySoftSet::empty(n);
    for p in params {
        out.insert(*p, draw()).expect("drawn sets match the carrier");
    }
    out
}

/// An endless seeded stream of soft sets over `v`, each passing
/// `is_bfs_hypervector_space`.
#[derive(Debug, Clone)]
pub struct BfssStream<'a> {
    space: &'a HyperVectorSpace,
    params: Vec<String>,
    rng: ChaCha8Rng,
}

pub fn generate_bfshvs<'a>(v: &'a HyperVectorSpace, params: &[&str], seed: u64) -> BfssStream<'a> {
    BfssStream { space: v, params: params.iter().map(|p| p.to_string()).collect(), rng: rng_for(seed, 0) }
}

impl Iterator for BfssStream<'_> {
    type Item = BipolarFuzzySoftSet;

    fn next(&mut self) -> Option<BipolarFuzzySoftSet> {
        let params: Vec<&str> = self.params.iter().map(String::as_str).collect();
        let (v, rng) = (self.space, &mut self.rng);
        let f = soft_set(v.dim(), &params, || subhyperspace_bfs(v, rng));
        let verdict = is_bfs_hypervector_space(&f, v).map(|r| r.verdict).unwrap_or(false);
        assert!(verdict, "generated soft set failed the structure check");
        Some(f)
    }
}

/// The three-parameter class-constant soft set over ℤ₄ used as the
/// worked example alongside the fixture space.
pub fn example46() -> BipolarFuzzySoftSet {
    let r = Rational::new;
    let class =
        |t1, t2, s1, s2| BipolarFuzzySet::new(vec![t1, t2, t1, t2], vec![s1, s2, s1, s2]).expect("preset degrees");
    let mut f = BipolarFuzzySoftSet::empty(4);
    f.insert("c", class(r(1, 2), r(3, 10), r(-2, 5), r(-1, 5))).expect("carrier");
    f.insert("d", class(r(7, 10), r(1, 5), r(-3, 5), r(-3, 10))).expect("carrier");
    f.insert("e", class(r(4, 5), r(2, 5), r(-7, 10), r(-1, 2))).expect("carrier");
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(strategy: Strategy, field: FieldChoice, mode: AxiomMode) -> InstanceSpec {
        InstanceSpec { max_carrier: 9, field, strategy, mode, seed: 7 }
    }

    #[test]
    fn constructive_families_are_strong() {
        for strategy in [Strategy::Total, Strategy::Classical, Strategy::Inflated] {
            for field in [FieldChoice::Z2, FieldChoice::Z3] {
                let fam = constructive_family(strategy, field, 9);
                assert!(!fam.is_empty(), "{strategy:?} {field:?}");
                for v in fam {
                    let r = check_axioms(&v, AxiomMode::STRICT);
                    assert!(r.passed() && r.strongly_right_distributive && r.strongly_left_distributive);
                }
            }
        }
    }

    #[test]
    fn fixture_only_under_compat() {
        assert_eq!(generate_hvs(&spec(Strategy::Fixture, FieldChoice::Z2, AxiomMode::COMPAT)).take(3).count(), 3);
        let mut strict = generate_hvs(&spec(Strategy::Fixture, FieldChoice::Z2, AxiomMode::STRICT));
        assert!(strict.next().is_none());
        assert!(strict.stats().exhausted);
    }

    #[test]
    fn filtered_random_is_deterministic_and_valid() {
        let s = spec(Strategy::FilteredRandom, FieldChoice::Z2, AxiomMode::STRICT);
        let a: Vec<_> = generate_hvs(&s).take(4).collect();
        let b: Vec<_> = generate_hvs(&s).take(4).collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
        for v in &a {
            assert!(check_axioms(v, AxiomMode::STRICT).passed());
        }
        let mut stream = generate_hvs(&s);
        stream.next();
        let stats = stream.stats();
        assert!(stats.acceptance_rate() > 0.0 && stats.acceptance_rate() <= 1.0);
    }

    #[test]
    fn filtered_random_over_z3() {
        let s = InstanceSpec { max_carrier: 3, ..spec(Strategy::FilteredRandom, FieldChoice::Z3, AxiomMode::STRICT) };
        for v in generate_hvs(&s).take(2) {
            assert!(check_axioms(&v, AxiomMode::STRICT).passed());
        }
    }

    #[test]
    fn generated_soft_sets_validate() {
        let mut pool = constructive_family(Strategy::Inflated, FieldChoice::Z2, 8);
        pool.push(HyperVectorSpace::z4_over_z2());
        for (i, v) in pool.iter().enumerate() {
            for f in generate_bfshvs(v, &["c", "d"], i as u64).take(20) {
                assert!(is_bfs_hypervector_space(&f, v).unwrap().verdict);
            }
        }
    }

    #[test]
    fn preset_validates_on_fixture() {
        let v = HyperVectorSpace::z4_over_z2();
        assert!(is_bfs_hypervector_space(&example46(), &v).unwrap().verdict);
    }
}
