//! The registered properties and their per-instance evaluation.
//!
//! Each property states its hypotheses; `evaluate` checks them on the
//! instance before checking the conclusion, so an instance that does not
//! qualify is rejected rather than counted.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{check_axioms, AxiomMode, AxiomReport, HyperVectorSpace};
use crate::hvs_ops::{scalar_product, soft_extended_sum, soft_negate, soft_sum};
use crate::io::{Document, Section};
use crate::soft::{
    and_product, extended_intersection, family_union, intersection, is_subset, restricted_union, union,
    BipolarFuzzySoftSet,
};
use crate::structure::{is_bfs_hypervector_space, SoftCheckReport};
use crate::transform::{classify_map, image, preimage, FuzzySoftFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropertyId {
    /// Sum lower bound: `(F+G)(x+y) ≥ F(x) ∧ G(y)`.
    P1,
    /// `F ⊑ 1∘F` and `-F ⊑ (-1)∘F`.
    P2,
    /// Sums and scalar products distribute over family unions.
    P3,
    P4Meet,
    P4ExtendedMeet,
    P4DisjointUnion,
    P4RestrictedUnion,
    P4And,
    /// Sum closure.
    P5,
    /// Extended sum closure.
    P6,
    /// Scalar product closure on strongly right distributive spaces.
    P7,
    /// AND closure.
    P8,
    /// Images under good maps with injective parameter maps.
    P9,
    /// Preimages under linear maps.
    P10,
    /// Union with overlapping parameter sets.
    P4UnionOverlap,
    /// P7 without strong right distributivity.
    P7NonStrong,
    /// P9 with a parameter map identifying parameters.
    P9Collapse,
}

impl PropertyId {
    pub const THEOREMS: [PropertyId; 14] = [
        PropertyId::P1,
        PropertyId::P2,
        PropertyId::P3,
        PropertyId::P4Meet,
        PropertyId::P4ExtendedMeet,
        PropertyId::P4DisjointUnion,
        PropertyId::P4RestrictedUnion,
        PropertyId::P4And,
        PropertyId::P5,
        PropertyId::P6,
        PropertyId::P7,
        PropertyId::P8,
        PropertyId::P9,
        PropertyId::P10,
    ];

    pub const PROBES: [PropertyId; 3] = [PropertyId::P4UnionOverlap, PropertyId::P7NonStrong, PropertyId::P9Collapse];

    pub const P4: [PropertyId; 5] = [
        PropertyId::P4Meet,
        PropertyId::P4ExtendedMeet,
        PropertyId::P4DisjointUnion,
        PropertyId::P4RestrictedUnion,
        PropertyId::P4And,
    ];

    pub fn all() -> impl Iterator<Item = PropertyId> {
        Self::THEOREMS.into_iter().chain(Self::PROBES)
    }

    pub fn id(self) -> &'static str {
        match self {
            PropertyId::P1 => "P1",
            PropertyId::P2 => "P2",
            PropertyId::P3 => "P3",
            PropertyId::P4Meet => "P4-meet",
            PropertyId::P4ExtendedMeet => "P4-emeet",
            PropertyId::P4DisjointUnion => "P4-union-disjoint",
            PropertyId::P4RestrictedUnion => "P4-rjoin",
            PropertyId::P4And => "P4-and",
            PropertyId::P5 => "P5",
            PropertyId::P6 => "P6",
            PropertyId::P7 => "P7",
            PropertyId::P8 => "P8",
            PropertyId::P9 => "P9",
            PropertyId::P10 => "P10",
            PropertyId::P4UnionOverlap => "P4-union-overlap",
            PropertyId::P7NonStrong => "P7-nonstrong",
            PropertyId::P9Collapse => "P9-collapse",
        }
    }

    /// Probes negate a hypothesis; a counterexample is the expected find.
    pub fn is_probe(self) -> bool {
        Self::PROBES.contains(&self)
    }

    /// Whether the property takes its hypotheses from the axioms. P1–P3
    /// hold on every instance and also run on the fixture in strict mode.
    pub fn needs_axioms(self) -> bool {
        !matches!(self, PropertyId::P1 | PropertyId::P2 | PropertyId::P3)
    }

    pub fn uses_map(self) -> bool {
        matches!(self, PropertyId::P9 | PropertyId::P10 | PropertyId::P9Collapse)
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for PropertyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        PropertyId::all().find(|p| p.id().eq_ignore_ascii_case(s)).ok_or_else(|| format!("unknown property `{s}`"))
    }
}

impl Serialize for PropertyId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// A hypervector space, the soft sets a property is stated for, and for
/// P9/P10 a target space with a fuzzy soft function into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub space: HyperVectorSpace,
    pub sets: Vec<(String, BipolarFuzzySoftSet)>,
    pub target: Option<(HyperVectorSpace, FuzzySoftFunction)>,
}

impl Instance {
    pub fn set(&self, name: &str) -> Option<&BipolarFuzzySoftSet> {
        self.sets.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    fn family(&self, prefix: char) -> Vec<BipolarFuzzySoftSet> {
        self.sets
            .iter()
            .filter(|(n, _)| n.starts_with(prefix) && n[1..].parse::<usize>().is_ok())
            .map(|(_, s)| s.clone())
            .collect()
    }

    /// Sections `V` (with `V.K`, `V.V`), optionally `W` and map `T`, then
    /// the soft sets in order.
    pub fn to_document(&self) -> Document {
        let mut doc = Document::default();
        doc.push_hvs("V", &self.space);
        if let Some((w, t)) = &self.target {
            doc.push_hvs("W", w);
            doc.sections.push(Section::Map { name: "T".into(), from: "V".into(), to: "W".into(), function: t.clone() });
        }
        for (name, set) in &self.sets {
            doc.push_bfss(name, set);
        }
        doc
    }

    pub fn from_document(doc: &Document) -> Result<Self, String> {
        let space = doc.hvs("V").ok_or("document has no hvs section `V`")?.clone();
        let target = match (doc.hvs("W"), doc.get("T")) {
            (Some(w), Some(Section::Map { function, .. })) => Some((w.clone(), function.clone())),
            (None, None) => None,
            _ => return Err("a target needs both hvs `W` and map `T`".into()),
        };
        let sets = doc
            .of_kind("bfss")
            .map(|s| match s {
                Section::Bfss { name, set } => (name.clone(), set.clone()),
                _ => unreachable!("filtered by kind"),
            })
            .collect();
        Ok(Instance { space, sets, target })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "kebab-case")]
pub enum Outcome {
    Holds,
    Rejected(String),
    Fails(String),
}

fn need<'a>(inst: &'a Instance, name: &str) -> Result<&'a BipolarFuzzySoftSet, Outcome> {
    inst.set(name).ok_or_else(|| Outcome::Rejected(format!("instance has no soft set `{name}`")))
}

fn axioms(v: &HyperVectorSpace, mode: AxiomMode, label: &str) -> Result<AxiomReport, Outcome> {
    let report = check_axioms(v, mode);
    if report.passed() {
        Ok(report)
    } else {
        Err(Outcome::Rejected(format!("{label} fails the {} axioms", mode.name())))
    }
}

fn bfshvs(f: &BipolarFuzzySoftSet, v: &HyperVectorSpace, name: &str) -> Result<(), Outcome> {
    match is_bfs_hypervector_space(f, v) {
        Ok(r) if r.verdict => Ok(()),
        Ok(_) => Err(Outcome::Rejected(format!("{name} is not a bipolar fuzzy soft hypervector space"))),
        Err(e) => Err(Outcome::Rejected(format!("{name}: {e}"))),
    }
}

fn conclusion(label: &str, report: crate::Result<SoftCheckReport>) -> Outcome {
    match report {
        Ok(r) if r.verdict => Outcome::Holds,
        Ok(r) => {
            let w = r.witnesses().next().expect("failing report has a witness");
            Outcome::Fails(format!("{label} is not a bipolar fuzzy soft hypervector space: {w}"))
        }
        Err(e) => Outcome::Rejected(format!("{label}: {e}")),
    }
}

fn lift(r: crate::Result<BipolarFuzzySoftSet>) -> Result<BipolarFuzzySoftSet, Outcome> {
    r.map_err(|e| Outcome::Rejected(e.to_string()))
}

/// Evaluates one property on one instance under `mode`.
pub fn evaluate(pid: PropertyId, mode: AxiomMode, inst: &Instance) -> Outcome {
    match eval(pid, mode, inst) {
        Ok(o) | Err(o) => o,
    }
}

fn eval(pid: PropertyId, mode: AxiomMode, inst: &Instance) -> Result<Outcome, Outcome> {
    let v = &inst.space;
    use PropertyId::*;
    match pid {
        P1 => {
            let (f, g) = (need(inst, "F")?, need(inst, "G")?);
            let s = lift(soft_sum(f, g, v))?;
            let grp = v.group();
            for (e, sb) in s.iter() {
                let (fb, gb) = (f.get(e).unwrap(), g.get(e).unwrap());
                for x in 0..v.dim() {
                    for y in 0..v.dim() {
                        let z = grp.add(x, y);
                        let lo = fb.pos(x).min(gb.pos(y));
                        let hi = fb.neg(x).max(gb.neg(y));
                        if sb.pos(z) < lo || sb.neg(z) > hi {
                            return Ok(Outcome::Fails(format!(
                                "e={e} x={x} y={y}: (F+G)(x+y) = ({}, {}) against bound ({lo}, {hi})",
                                sb.pos(z),
                                sb.neg(z)
                            )));
                        }
                    }
                }
            }
            Ok(Outcome::Holds)
        }
        P2 => {
            let f = need(inst, "F")?;
            let report = check_axioms(v, mode);
            if !(report.h4 && report.h5) {
                return Err(Outcome::Rejected("H4 or H5 fails".into()));
            }
            let k = v.field();
            let one_f = lift(scalar_product(k.one(), f, v))?;
            if let Err(w) = is_subset(f, &one_f).map_err(|e| Outcome::Rejected(e.to_string()))? {
                return Ok(Outcome::Fails(format!("F ⊑ 1∘F fails at {w:?}")));
            }
            let neg_f = lift(soft_negate(f, v))?;
            let minus_one_f = lift(scalar_product(k.neg(k.one()), f, v))?;
            if let Err(w) = is_subset(&neg_f, &minus_one_f).map_err(|e| Outcome::Rejected(e.to_string()))? {
                return Ok(Outcome::Fails(format!("-F ⊑ (-1)∘F fails at {w:?}")));
            }
            Ok(Outcome::Holds)
        }
        P3 => {
            let (fs, gs) = (inst.family('F'), inst.family('G'));
            if fs.is_empty() || gs.is_empty() {
                return Err(Outcome::Rejected("P3 needs nonempty families F0.. and G0..".into()));
            }
            let uf = lift(family_union(&fs))?;
            let ug = lift(family_union(&gs))?;
            let lhs = lift(soft_sum(&uf, &ug, v))?;
            let mut sums = Vec::new();
            for fi in &fs {
                for gj in &gs {
                    sums.push(lift(soft_sum(fi, gj, v))?);
                }
            }
            let rhs = lift(family_union(&sums))?;
            if let Some(d) = first_difference(&lhs, &rhs) {
                return Ok(Outcome::Fails(format!("∪F + ∪G ≠ ∪(Fi+Gj) {d}")));
            }
            for a in 0..v.scalars() {
                let lhs = lift(scalar_product(a, &uf, v))?;
                let scaled = fs.iter().map(|fi| scalar_product(a, fi, v)).collect::<crate::Result<Vec<_>>>();
                let rhs = lift(scaled.and_then(|s| family_union(&s)))?;
                if let Some(d) = first_difference(&lhs, &rhs) {
                    return Ok(Outcome::Fails(format!("{a}∘∪F ≠ ∪({a}∘Fi) {d}")));
                }
            }
            Ok(Outcome::Holds)
        }
        P4Meet | P4ExtendedMeet | P4DisjointUnion | P4RestrictedUnion | P4And | P5 | P6 | P8 | P4UnionOverlap => {
            axioms(v, mode, "V")?;
            let (f, g) = (need(inst, "F")?, need(inst, "G")?);
            bfshvs(f, v, "F")?;
            bfshvs(g, v, "G")?;
            let overlap = f.params().any(|p| g.contains(p));
            let (label, result) = match pid {
                P4Meet => ("F ⊓ G", intersection(f, g)),
                P4ExtendedMeet => ("F ⊓ε G", extended_intersection(f, g)),
                P4DisjointUnion | P4UnionOverlap => {
                    if overlap != (pid == P4UnionOverlap) {
                        let want = if overlap { "disjoint" } else { "overlapping" };
                        return Err(Outcome::Rejected(format!("parameter sets are not {want}")));
                    }
                    ("F ⊔ G", union(f, g))
                }
                P4RestrictedUnion => ("F ⊔ᵣ G", restricted_union(f, g)),
                P4And | P8 => ("F ∧ G", and_product(f, g)),
                P5 => ("F + G", soft_sum(f, g, v)),
                P6 => ("F +ε G", soft_extended_sum(f, g, v)),
                _ => unreachable!("outer match"),
            };
            let out = lift(result)?;
            Ok(conclusion(label, is_bfs_hypervector_space(&out, v)))
        }
        P7 | P7NonStrong => {
            let report = axioms(v, mode, "V")?;
            if report.strongly_right_distributive != (pid == P7) {
                return Err(Outcome::Rejected(format!(
                    "strong right distributivity is {}",
                    report.strongly_right_distributive
                )));
            }
            let f = need(inst, "F")?;
            bfshvs(f, v, "F")?;
            for a in 0..v.scalars() {
                let out = lift(scalar_product(a, f, v))?;
                let o = conclusion(&format!("{a}∘F"), is_bfs_hypervector_space(&out, v));
                if o != Outcome::Holds {
                    return Ok(o);
                }
            }
            Ok(Outcome::Holds)
        }
        P9 | P9Collapse => {
            let (w, t) = inst.target.as_ref().ok_or_else(|| Outcome::Rejected("no target map".into()))?;
            axioms(v, mode, "V")?;
            axioms(w, mode, "W")?;
            let lin = classify_map(t.phi(), v, w).map_err(|e| Outcome::Rejected(e.to_string()))?;
            if !lin.good {
                return Err(Outcome::Rejected("φ is not good".into()));
            }
            if t.params_injective() != (pid == P9) {
                return Err(Outcome::Rejected(format!("parameter map injective: {}", t.params_injective())));
            }
            let f = need(inst, "F")?;
            bfshvs(f, v, "F")?;
            let out = lift(image(t, f))?;
            Ok(conclusion("(φ,f)(F)", is_bfs_hypervector_space(&out, w)))
        }
        P10 => {
            let (w, t) = inst.target.as_ref().ok_or_else(|| Outcome::Rejected("no target map".into()))?;
            axioms(v, mode, "V")?;
            axioms(w, mode, "W")?;
            let lin = classify_map(t.phi(), v, w).map_err(|e| Outcome::Rejected(e.to_string()))?;
            if !lin.linear {
                return Err(Outcome::Rejected("φ is not linear".into()));
            }
            let g = need(inst, "G")?;
            bfshvs(g, w, "G")?;
            let out = lift(preimage(t, g))?;
            Ok(conclusion("(φ,f)⁻¹(G)", is_bfs_hypervector_space(&out, v)))
        }
    }
}

fn first_difference(a: &BipolarFuzzySoftSet, b: &BipolarFuzzySoftSet) -> Option<String> {
    if a.param_set() != b.param_set() {
        return Some(format!("(parameters {:?} vs {:?})", a.param_set(), b.param_set()));
    }
    for (p, ab) in a.iter() {
        let bb = b.get(p).unwrap();
        for x in 0..a.carrier() {
            if ab.pos(x) != bb.pos(x) || ab.neg(x) != bb.neg(x) {
                return Some(format!(
                    "at e={p} x={x}: ({}, {}) vs ({}, {})",
                    ab.pos(x),
                    ab.neg(x),
                    bb.pos(x),
                    bb.neg(x)
                ));
            }
        }
    }
    None
}
