//! Exhaustive H1–H5 audit of a hypervector space.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::hvs::HyperVectorSpace;
use super::subset::Subset;

/// How the two sides of a set axiom are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetRelation {
    Equal,
    Subset,
    Superset,
    NonemptyIntersection,
}

impl SetRelation {
    pub fn holds(self, left: Subset, right: Subset) -> bool {
        match self {
            SetRelation::Equal => left == right,
            SetRelation::Subset => left.is_subset(right),
            SetRelation::Superset => left.is_superset(right),
            SetRelation::NonemptyIntersection => left.meets(right),
        }
    }
}

/// Comparison semantics for H1–H3. H4 and H5 are always checked as
/// stated (set equality and membership).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AxiomMode {
    pub h1: SetRelation,
    pub h2: SetRelation,
    pub h3: SetRelation,
}

impl AxiomMode {
    /// Inclusion in H1/H2, equality in H3.
    pub const STRICT: AxiomMode =
        AxiomMode { h1: SetRelation::Subset, h2: SetRelation::Subset, h3: SetRelation::Equal };

    /// Relaxed H1 (nonempty intersection) and H3 (superset), under which
    /// the ℤ₄ over ℤ₂ example passes.
    pub const COMPAT: AxiomMode =
        AxiomMode { h1: SetRelation::NonemptyIntersection, h2: SetRelation::Subset, h3: SetRelation::Superset };

    pub fn name(&self) -> String {
        match *self {
            m if m == Self::STRICT => "strict".into(),
            m if m == Self::COMPAT => "compat".into(),
            m => format!("custom(h1={:?},h2={:?},h3={:?})", m.h1, m.h2, m.h3),
        }
    }
}

impl Default for AxiomMode {
    fn default() -> Self {
        Self::STRICT
    }
}

impl FromStr for AxiomMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "strict" => Ok(Self::STRICT),
            "compat" => Ok(Self::COMPAT),
            other => Err(format!("unknown axiom mode `{other}` (expected strict or compat)")),
        }
    }
}

impl fmt::Display for AxiomMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    H1,
    H2,
    H3,
    H4,
    H5,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [Axiom::H1, Axiom::H2, Axiom::H3, Axiom::H4, Axiom::H5];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One violated axiom instance. Unused tuple slots are `None`.
///
/// Sides per axiom: H1 `a∘(x+y)` vs `a∘x + a∘y`; H2 `(a+b)∘x` vs
/// `a∘x + b∘x`; H3 `a∘(b∘x)` vs `(ab)∘x`; H4 either `a∘(-x)` or
/// `(-a)∘x` (see `side`) vs `-(a∘x)`; H5 `{x}` vs `1∘x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AxiomWitness {
    pub axiom: Axiom,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub x: Option<usize>,
    pub y: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<&'static str>,
    pub left: Subset,
    pub right: Subset,
}

impl fmt::Display for AxiomWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.axiom)?;
        let slots = [("a", self.a), ("b", self.b), ("x", self.x), ("y", self.y)];
        let parts: Vec<String> = slots.iter().filter_map(|(n, v)| v.map(|v| format!("{n}={v}"))).collect();
        write!(f, " ({})", parts.join(", "))?;
        if let Some(side) = self.side {
            write!(f, " [{side}]")?;
        }
        write!(f, ": left {} right {}", self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub mode: String,
    pub h1: bool,
    pub h2: bool,
    pub h3: bool,
    pub h4: bool,
    pub h5: bool,
    pub strongly_right_distributive: bool,
    pub strongly_left_distributive: bool,
    pub witnesses: Vec<AxiomWitness>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn verdict(&self, axiom: Axiom) -> bool {
        match axiom {
            Axiom::H1 => self.h1,
            Axiom::H2 => self.h2,
            Axiom::H3 => self.h3,
            Axiom::H4 => self.h4,
            Axiom::H5 => self.h5,
        }
    }

    pub fn witnesses_for(&self, axiom: Axiom) -> impl Iterator<Item = &AxiomWitness> {
        self.witnesses.iter().filter(move |w| w.axiom == axiom)
    }
}

/// Enumerates every `(a, b, x, y)` and records all violations under `mode`.
/// The strong-distributivity flags use equality regardless of mode.
pub fn check_axioms(v: &HyperVectorSpace, mode: AxiomMode) -> AxiomReport {
    let k = v.field();
    let g = v.group();
    let (q, n) = (v.scalars(), v.dim());
    let mut witnesses = Vec::new();
    let mut strong_right = true;
    let mut strong_left = true;

    let w = |axiom, a, b, x, y, left, right| AxiomWitness { axiom, a, b, x, y, side: None, left, right };

    for a in 0..q {
        for x in 0..n {
            for y in 0..n {
                let left = v.cell(a, g.add(x, y));
                let right = g.set_sum(v.cell(a, x), v.cell(a, y));
                strong_right &= left == right;
                if !mode.h1.holds(left, right) {
                    witnesses.push(w(Axiom::H1, Some(a), None, Some(x), Some(y), left, right));
                }
            }
        }
    }
    for a in 0..q {
        for b in 0..q {
            for x in 0..n {
                let left = v.cell(k.add(a, b), x);
                let right = g.set_sum(v.cell(a, x), v.cell(b, x));
                strong_left &= left == right;
                if !mode.h2.holds(left, right) {
                    witnesses.push(w(Axiom::H2, Some(a), Some(b), Some(x), None, left, right));
                }
            }
        }
    }
    for a in 0..q {
        for b in 0..q {
            for x in 0..n {
                let left = v.extend_unchecked(a, v.cell(b, x));
                let right = v.cell(k.mul(a, b), x);
                if !mode.h3.holds(left, right) {
                    witnesses.push(w(Axiom::H3, Some(a), Some(b), Some(x), None, left, right));
                }
            }
        }
    }
    for a in 0..q {
        for x in 0..n {
            let target = g.set_negate(v.cell(a, x));
            let by_element = v.cell(a, g.neg(x));
            let by_scalar = v.cell(k.neg(a), x);
            if by_element != target {
                let mut wit = w(Axiom::H4, Some(a), None, Some(x), None, by_element, target);
                wit.side = Some("a∘(-x)");
                witnesses.push(wit);
            }
            if by_scalar != target {
                let mut wit = w(Axiom::H4, Some(a), None, Some(x), None, by_scalar, target);
                wit.side = Some("(-a)∘x");
                witnesses.push(wit);
            }
        }
    }
    let one = k.one();
    for x in 0..n {
        if !v.cell(one, x).contains(x) {
            witnesses.push(w(Axiom::H5, None, None, Some(x), None, Subset::singleton(x), v.cell(one, x)));
        }
    }

    let ok = |ax: Axiom| !witnesses.iter().any(|w| w.axiom == ax);
    AxiomReport {
        mode: mode.name(),
        h1: ok(Axiom::H1),
        h2: ok(Axiom::H2),
        h3: ok(Axiom::H3),
        h4: ok(Axiom::H4),
        h5: ok(Axiom::H5),
        strongly_right_distributive: strong_right,
        strongly_left_distributive: strong_left,
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AbelianGroup, FiniteField};

    #[test]
    fn fixture_strict_fails_h1_and_h3_only() {
        let r = check_axioms(&HyperVectorSpace::z4_over_z2(), AxiomMode::STRICT);
        assert!(!r.h1 && r.h2 && !r.h3 && r.h4 && r.h5);
        let h1: Vec<_> = r.witnesses_for(Axiom::H1).map(|w| (w.a, w.x, w.y)).collect();
        assert_eq!(h1, vec![(Some(0), Some(1), Some(3)), (Some(0), Some(2), Some(2)), (Some(0), Some(3), Some(1))]);
        assert!(!r.strongly_left_distributive && !r.strongly_right_distributive);
    }

    #[test]
    fn fixture_compat_passes() {
        let r = check_axioms(&HyperVectorSpace::z4_over_z2(), AxiomMode::COMPAT);
        assert!(r.passed(), "{:?}", r.witnesses);
        assert!(!r.strongly_left_distributive && !r.strongly_right_distributive);
    }

    #[test]
    fn total_hyperoperation_is_strongly_distributive() {
        for g in [AbelianGroup::cyclic(4), AbelianGroup::elementary(2, 2), AbelianGroup::cyclic(1)] {
            let v = HyperVectorSpace::total(FiniteField::prime(2).unwrap(), g);
            let r = check_axioms(&v, AxiomMode::STRICT);
            assert!(r.passed() && r.strongly_left_distributive && r.strongly_right_distributive);
        }
    }

    #[test]
    fn classical_space_is_a_hypervector_space() {
        for (p, k) in [(2, 2), (3, 1), (3, 2), (2, 3)] {
            let r = check_axioms(&HyperVectorSpace::classical(p, k).unwrap(), AxiomMode::STRICT);
            assert!(r.passed() && r.strongly_left_distributive && r.strongly_right_distributive, "{p}^{k}");
        }
    }

    #[test]
    fn missing_h5_is_witnessed() {
        let f = FiniteField::prime(2).unwrap();
        let g = AbelianGroup::cyclic(2);
        let zero = Subset::singleton(0);
        let v = HyperVectorSpace::new(f, g, vec![vec![zero, zero], vec![zero, zero]]).unwrap();
        let r = check_axioms(&v, AxiomMode::STRICT);
        assert!(!r.h5);
        assert_eq!(r.witnesses_for(Axiom::H5).count(), 1);
    }
}
