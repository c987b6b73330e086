//! Decision procedures for bipolar fuzzy subhyperspaces and bipolar fuzzy
//! soft hypervector spaces. Reports list every violation, not just the
//! first.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::HyperVectorSpace;
use crate::bipolar::BipolarFuzzySet;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::soft::BipolarFuzzySoftSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// `A⁺(x-y) >= A⁺(x) ∧ A⁺(y)`
    SubPos,
    /// `A⁻(x-y) <= A⁻(x) ∨ A⁻(y)`
    SubNeg,
    /// `⋀_{t∈a∘x} A⁺(t) >= A⁺(x)`
    ScalPos,
    /// `⋁_{t∈a∘x} A⁻(t) <= A⁻(x)`
    ScalNeg,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::SubPos => "sub-pos",
            Condition::SubNeg => "sub-neg",
            Condition::ScalPos => "scal-pos",
            Condition::ScalNeg => "scal-neg",
        })
    }
}

/// A violated inequality. `tuple` is `(x, y)` for the subtraction
/// conditions and `(a, x)` for the scaling conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureWitness {
    pub condition: Condition,
    pub param: Option<String>,
    pub tuple: (usize, usize),
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for StructureWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (names, rel) = match self.condition {
            Condition::SubPos | Condition::SubNeg => (("x", "y"), self.condition),
            Condition::ScalPos | Condition::ScalNeg => (("a", "x"), self.condition),
        };
        write!(f, "{rel}")?;
        if let Some(p) = &self.param {
            write!(f, " [{p}]")?;
        }
        let op = match self.condition {
            Condition::SubPos | Condition::ScalPos => "<",
            Condition::SubNeg | Condition::ScalNeg => ">",
        };
        write!(
            f,
            " at {}={}, {}={}: lhs {} {op} rhs {}",
            names.0, self.tuple.0, names.1, self.tuple.1, self.lhs, self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CheckReport {
    pub verdict: bool,
    pub witnesses: Vec<StructureWitness>,
}

impl CheckReport {
    fn from_witnesses(witnesses: Vec<StructureWitness>) -> Self {
        CheckReport { verdict: witnesses.is_empty(), witnesses }
    }
}

fn subhyperspace_witnesses(b: &BipolarFuzzySet, v: &HyperVectorSpace, param: Option<&str>) -> Vec<StructureWitness> {
    let g = v.group();
    let n = v.dim();
    let mut out = Vec::new();
    let wit =
        |condition, tuple, lhs, rhs| StructureWitness { condition, param: param.map(str::to_string), tuple, lhs, rhs };
    for x in 0..n {
        for y in 0..n {
            let d = g.sub(x, y);
            let rhs = b.pos(x).min(b.pos(y));
            if b.pos(d) < rhs {
                out.push(wit(Condition::SubPos, (x, y), b.pos(d), rhs));
            }
            let rhs = b.neg(x).max(b.neg(y));
            if b.neg(d) > rhs {
                out.push(wit(Condition::SubNeg, (x, y), b.neg(d), rhs));
            }
        }
    }
    for a in 0..v.scalars() {
        for x in 0..n {
            let cell = v.cell(a, x);
            let inf = cell.iter().map(|t| b.pos(t)).min().expect("cells are nonempty");
            if inf < b.pos(x) {
                out.push(wit(Condition::ScalPos, (a, x), inf, b.pos(x)));
            }
            let sup = cell.iter().map(|t| b.neg(t)).max().expect("cells are nonempty");
            if sup > b.neg(x) {
                out.push(wit(Condition::ScalNeg, (a, x), sup, b.neg(x)));
            }
        }
    }
    out
}

pub fn is_subhyperspace(b: &BipolarFuzzySet, v: &HyperVectorSpace) -> Result<CheckReport> {
    if b.len() != v.dim() {
        return Err(Error::CarrierMismatch { left: b.len(), right: v.dim() });
    }
    Ok(CheckReport::from_witnesses(subhyperspace_witnesses(b, v, None)))
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SoftCheckReport {
    pub verdict: bool,
    pub per_param: BTreeMap<String, CheckReport>,
}

impl SoftCheckReport {
    pub fn witnesses(&self) -> impl Iterator<Item = &StructureWitness> {
        self.per_param.values().flat_map(|r| r.witnesses.iter())
    }

    pub fn failing_params(&self) -> impl Iterator<Item = &str> {
        self.per_param.iter().filter(|(_, r)| !r.verdict).map(|(p, _)| p.as_str())
    }
}

/// Checks every parameter's set; an empty parameter set passes vacuously.
pub fn is_bfs_hypervector_space(f: &BipolarFuzzySoftSet, v: &HyperVectorSpace) -> Result<SoftCheckReport> {
    if f.carrier() != v.dim() {
        return Err(Error::CarrierMismatch { left: f.carrier(), right: v.dim() });
    }
    let per_param: BTreeMap<_, _> = f
        .iter()
        .map(|(p, b)| (p.to_string(), CheckReport::from_witnesses(subhyperspace_witnesses(b, v, Some(p)))))
        .collect();
    Ok(SoftCheckReport { verdict: per_param.values().all(|r| r.verdict), per_param })
}
