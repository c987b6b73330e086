//! Fuzzy soft functions between hypervector spaces: linearity checks,
//! images and preimages.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{HyperVectorSpace, Subset};
use crate::bipolar::BipolarFuzzySet;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::soft::BipolarFuzzySoftSet;

/// A carrier map `φ : V → W` paired with a parameter map `f : A → B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FuzzySoftFunction {
    phi: Vec<usize>,
    codomain: usize,
    params: BTreeMap<String, String>,
}

impl FuzzySoftFunction {
    pub fn new(phi: Vec<usize>, codomain: usize, params: BTreeMap<String, String>) -> Result<Self> {
        if phi.is_empty() || codomain == 0 {
            return Err(Error::EmptyCarrier);
        }
        if let Some((x, &y)) = phi.iter().enumerate().find(|(_, &y)| y >= codomain) {
            return Err(Error::EntryOutOfRange { row: 0, col: x, value: y, size: codomain });
        }
        Ok(FuzzySoftFunction { phi, codomain, params })
    }

    /// Identity on both the carrier and the listed parameters.
    pub fn identity<'a>(n: usize, params: impl IntoIterator<Item = &'a str>) -> Self {
        let params = params.into_iter().map(|p| (p.to_string(), p.to_string())).collect();
        FuzzySoftFunction { phi: (0..n).collect(), codomain: n, params }
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn apply(&self, x: usize) -> usize {
        self.phi[x]
    }

    pub fn domain(&self) -> usize {
        self.phi.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn param_map(&self) -> &BTreeMap<String, String> {
        &self.params
    }

    pub fn map_param(&self, p: &str) -> Option<&str> {
        self.params.get(p).map(String::as_str)
    }

    pub fn params_injective(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.params.values().all(|u| seen.insert(u))
    }

    pub fn image_set(&self, s: Subset) -> Subset {
        s.iter().map(|x| self.phi[x]).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdditivityWitness {
    pub x: usize,
    pub y: usize,
    pub image_of_sum: usize,
    pub sum_of_images: usize,
}

/// `T(a∘x)` against `a∘T(x)` at one `(a, x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScalingWitness {
    pub a: usize,
    pub x: usize,
    pub image: Subset,
    pub target: Subset,
}

/// Linear means additive with `T(a∘x) ⊆ a∘T(x)` everywhere; good
/// additionally requires equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearityReport {
    pub additive: bool,
    pub additive_witness: Option<AdditivityWitness>,
    pub linear: bool,
    pub linear_witness: Option<ScalingWitness>,
    pub good: bool,
    pub good_witness: Option<ScalingWitness>,
}

/// Exhaustively classifies `phi : V → W` over all `(x, y)` and `(a, x)`.
pub fn classify_map(phi: &[usize], v: &HyperVectorSpace, w: &HyperVectorSpace) -> Result<LinearityReport> {
    if v.field() != w.field() {
        return Err(Error::FieldMismatch);
    }
    if phi.len() != v.dim() {
        return Err(Error::CarrierMismatch { left: phi.len(), right: v.dim() });
    }
    if let Some((x, &y)) = phi.iter().enumerate().find(|(_, &y)| y >= w.dim()) {
        return Err(Error::EntryOutOfRange { row: 0, col: x, value: y, size: w.dim() });
    }
    let (gv, gw) = (v.group(), w.group());
    let mut additive_witness = None;
    'add: for x in 0..v.dim() {
        for y in 0..v.dim() {
            let lhs = phi[gv.add(x, y)];
            let rhs = gw.add(phi[x], phi[y]);
            if lhs != rhs {
                additive_witness = Some(AdditivityWitness { x, y, image_of_sum: lhs, sum_of_images: rhs });
                break 'add;
            }
        }
    }
    let mut inclusion_witness = None;
    let mut equality_witness = None;
    for a in 0..v.scalars() {
        for x in 0..v.dim() {
            let image: Subset = v.cell(a, x).iter().map(|t| phi[t]).collect();
            let target = w.cell(a, phi[x]);
            if inclusion_witness.is_none() && !image.is_subset(target) {
                inclusion_witness = Some(ScalingWitness { a, x, image, target });
            }
            if equality_witness.is_none() && image != target {
                equality_witness = Some(ScalingWitness { a, x, image, target });
            }
        }
    }
    let additive = additive_witness.is_none();
    let linear = additive && inclusion_witness.is_none();
    let good = linear && equality_witness.is_none();
    Ok(LinearityReport {
        additive,
        additive_witness,
        linear,
        linear_witness: inclusion_witness,
        good,
        good_witness: equality_witness,
    })
}

/// Image of `F` under `(φ, f)`, on the parameter set `f(A)`.
///
/// An element of `W` with no preimage gets `(0, 0)`.
pub fn image(ff: &FuzzySoftFunction, f: &BipolarFuzzySoftSet) -> Result<BipolarFuzzySoftSet> {
    if f.carrier() != ff.domain() {
        return Err(Error::CarrierMismatch { left: f.carrier(), right: ff.domain() });
    }
    // u ↦ sets of all e ∈ A with f(e) = u
    let mut fibres: BTreeMap<&str, Vec<&BipolarFuzzySet>> = BTreeMap::new();
    for (e, b) in f.iter() {
        let u = ff.map_param(e).ok_or_else(|| Error::UnknownParameter(e.to_string()))?;
        fibres.entry(u).or_default().push(b);
    }
    let mut out = BipolarFuzzySoftSet::empty(ff.codomain());
    for (u, sets) in fibres {
        let mut pos: Vec<Option<Rational>> = vec![None; ff.codomain()];
        let mut neg: Vec<Option<Rational>> = vec![None; ff.codomain()];
        for x in 0..ff.domain() {
            let y = ff.apply(x);
            for b in &sets {
                pos[y] = Some(pos[y].map_or(b.pos(x), |p| p.max(b.pos(x))));
                neg[y] = Some(neg[y].map_or(b.neg(x), |q| q.min(b.neg(x))));
            }
        }
        let b = BipolarFuzzySet::from_fn(ff.codomain(), |y| {
            (pos[y].unwrap_or(Rational::ZERO), neg[y].unwrap_or(Rational::ZERO))
        });
        out.insert(u, b)?;
    }
    Ok(out)
}

/// Preimage of `G` under `(φ, f)`: `x ↦ G_{f(e)}(φ(x))` for every `e` in
/// the domain of `f`.
pub fn preimage(ff: &FuzzySoftFunction, g: &BipolarFuzzySoftSet) -> Result<BipolarFuzzySoftSet> {
    if g.carrier() != ff.codomain() {
        return Err(Error::CarrierMismatch { left: g.carrier(), right: ff.codomain() });
    }
    let mut out = BipolarFuzzySoftSet::empty(ff.domain());
    for (e, u) in ff.param_map() {
        let gb = g.get(u).ok_or_else(|| Error::UnknownParameter(u.clone()))?;
        let b = BipolarFuzzySet::from_fn(ff.domain(), |x| {
            let y = ff.apply(x);
            (gb.pos(y), gb.neg(y))
        });
        out.insert(e.clone(), b)?;
    }
    Ok(out)
}
