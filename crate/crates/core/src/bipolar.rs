//! Bipolar fuzzy sets over a finite carrier.

use serde::Serialize;

use crate::algebra::AbelianGroup;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    Pos,
    Neg,
}

impl Component {
    pub fn name(self) -> &'static str {
        match self {
            Component::Pos => "pos",
            Component::Neg => "neg",
        }
    }
}

/// Binary lattice operation on degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lattice {
    Min,
    Max,
}

impl Lattice {
    #[inline]
    pub fn apply(self, a: Rational, b: Rational) -> Rational {
        match self {
            Lattice::Min => a.min(b),
            Lattice::Max => a.max(b),
        }
    }
}

/// Positive degrees in `[0, 1]`, negative degrees in `[-1, 0]`, one of each
/// per carrier element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BipolarFuzzySet {
    pos: Vec<Rational>,
    neg: Vec<Rational>,
}

/// An out-of-range degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeViolation {
    pub element: usize,
    pub component: Component,
    pub value: Rational,
}

impl BipolarFuzzySet {
    pub fn new(pos: Vec<Rational>, neg: Vec<Rational>) -> Result<Self> {
        let b = Self::new_unchecked(pos, neg)?;
        if let Some(v) = validate_bfs(&b).into_iter().next() {
            return Err(Error::DegreeOutOfRange { component: v.component.name(), value: v.value.to_string() });
        }
        Ok(b)
    }

    /// Skips the range check; the lengths must still agree.
    pub fn new_unchecked(pos: Vec<Rational>, neg: Vec<Rational>) -> Result<Self> {
        if pos.len() != neg.len() {
            return Err(Error::CarrierMismatch { left: pos.len(), right: neg.len() });
        }
        if pos.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        Ok(BipolarFuzzySet { pos, neg })
    }

    pub fn constant(n: usize, pos: Rational, neg: Rational) -> Result<Self> {
        Self::new(vec![pos; n], vec![neg; n])
    }

    pub fn len(&self) -> usize {
        self.pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pos.is_empty()
    }

    #[inline]
    pub fn pos(&self, x: usize) -> Rational {
        self.pos[x]
    }

    #[inline]
    pub fn neg(&self, x: usize) -> Rational {
        self.neg[x]
    }

    pub fn get(&self, c: Component, x: usize) -> Rational {
        match c {
            Component::Pos => self.pos[x],
            Component::Neg => self.neg[x],
        }
    }

    pub fn pos_values(&self) -> &[Rational] {
        &self.pos
    }

    pub fn neg_values(&self) -> &[Rational] {
        &self.neg
    }

    pub(crate) fn from_fn(n: usize, mut f: impl FnMut(usize) -> (Rational, Rational)) -> Self {
        let (pos, neg) = (0..n).map(&mut f).unzip();
        BipolarFuzzySet { pos, neg }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::CarrierMismatch { left: self.len(), right: other.len() });
        }
        Ok(())
    }
}

/// All out-of-range degrees, positive component first, in element order.
pub fn validate_bfs(b: &BipolarFuzzySet) -> Vec<DegreeViolation> {
    let mut out = Vec::new();
    for (x, v) in b.pos.iter().enumerate() {
        if !v.in_unit() {
            out.push(DegreeViolation { element: x, component: Component::Pos, value: *v });
        }
    }
    for (x, v) in b.neg.iter().enumerate() {
        if !v.in_neg_unit() {
            out.push(DegreeViolation { element: x, component: Component::Neg, value: *v });
        }
    }
    out
}

/// `x ↦ b(-x)` on both components.
pub fn bfs_negate(b: &BipolarFuzzySet, g: &AbelianGroup) -> Result<BipolarFuzzySet> {
    if b.len() != g.order() {
        return Err(Error::CarrierMismatch { left: b.len(), right: g.order() });
    }
    Ok(BipolarFuzzySet::from_fn(b.len(), |x| {
        let nx = g.neg(x);
        (b.pos[nx], b.neg[nx])
    }))
}

/// Combines the positive parts with `pos_op` and the negative parts with
/// `neg_op`, pointwise.
pub fn bfs_pointwise(
    pos_op: Lattice,
    neg_op: Lattice,
    b1: &BipolarFuzzySet,
    b2: &BipolarFuzzySet,
) -> Result<BipolarFuzzySet> {
    b1.check_same(b2)?;
    Ok(BipolarFuzzySet::from_fn(b1.len(), |x| (pos_op.apply(b1.pos[x], b2.pos[x]), neg_op.apply(b1.neg[x], b2.neg[x]))))
}

/// Intersection-style combination: `min` on positives, `max` on negatives.
pub fn meet(b1: &BipolarFuzzySet, b2: &BipolarFuzzySet) -> Result<BipolarFuzzySet> {
    bfs_pointwise(Lattice::Min, Lattice::Max, b1, b2)
}

/// Union-style combination: `max` on positives, `min` on negatives.
pub fn join(b1: &BipolarFuzzySet, b2: &BipolarFuzzySet) -> Result<BipolarFuzzySet> {
    bfs_pointwise(Lattice::Max, Lattice::Min, b1, b2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    /// Class-constant set on ℤ₄: `(t1, s1)` on {0,2}, `(t2, s2)` on {1,3}.
    fn classes(t1: Rational, t2: Rational, s1: Rational, s2: Rational) -> BipolarFuzzySet {
        BipolarFuzzySet::new(vec![t1, t2, t1, t2], vec![s1, s2, s1, s2]).unwrap()
    }

    #[test]
    fn extremes_and_example_values_validate() {
        let b = BipolarFuzzySet::constant(4, Rational::ONE, Rational::MINUS_ONE).unwrap();
        assert!(validate_bfs(&b).is_empty());
        let ex = classes(r(1, 2), r(3, 10), r(-2, 5), r(-1, 5));
        assert!(validate_bfs(&ex).is_empty());
    }

    #[test]
    fn out_of_range_has_witness() {
        let b = BipolarFuzzySet::new_unchecked(vec![r(3, 2), Rational::ZERO], vec![Rational::ZERO; 2]).unwrap();
        assert_eq!(validate_bfs(&b), vec![DegreeViolation { element: 0, component: Component::Pos, value: r(3, 2) }]);
        assert!(BipolarFuzzySet::new(vec![r(3, 2)], vec![Rational::ZERO]).is_err());
        assert!(BipolarFuzzySet::new(vec![Rational::ZERO], vec![r(1, 5)]).is_err());
    }

    #[test]
    fn negate_on_z4() {
        let g = AbelianGroup::cyclic(4);
        let ex = classes(r(1, 2), r(3, 10), r(-2, 5), r(-1, 5));
        assert_eq!(bfs_negate(&ex, &g).unwrap(), ex);

        let z = Rational::ZERO;
        let delta1 = BipolarFuzzySet::new(vec![z, Rational::ONE, z, z], vec![z; 4]).unwrap();
        let negated = bfs_negate(&delta1, &g).unwrap();
        assert_eq!(negated.pos_values(), &[z, z, z, Rational::ONE]);
        assert_eq!(bfs_negate(&negated, &g).unwrap(), delta1);
        assert!(bfs_negate(&delta1, &AbelianGroup::cyclic(3)).is_err());
    }

    #[test]
    fn pointwise_examples() {
        let a = BipolarFuzzySet::constant(3, r(1, 2), r(-2, 5)).unwrap();
        let b = BipolarFuzzySet::constant(3, r(3, 10), r(-1, 5)).unwrap();
        assert_eq!(meet(&a, &a).unwrap(), a);
        let m = bfs_pointwise(Lattice::Min, Lattice::Max, &a, &b).unwrap();
        assert!(m.pos_values().iter().all(|&v| v == r(3, 10)));
        assert!(m.neg_values().iter().all(|&v| v == r(-1, 5)));
        let short = BipolarFuzzySet::constant(2, r(1, 2), r(-2, 5)).unwrap();
        assert!(meet(&a, &short).is_err());
    }
}
