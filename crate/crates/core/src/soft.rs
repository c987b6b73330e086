//! Bipolar fuzzy soft sets and their lattice-style operations.
//!
//! Intersection-style operations take `min` on positive degrees and `max`
//! on negative degrees; union-style operations do the opposite.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bipolar::{join, meet, BipolarFuzzySet, Component};
use crate::error::{Error, Result};

/// A parameter-indexed family of bipolar fuzzy sets over one carrier.
/// Parameters are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BipolarFuzzySoftSet {
    carrier: usize,
    params: BTreeMap<String, BipolarFuzzySet>,
}

/// Separator used for the parameters of `A × B`.
pub const PAIR_SEPARATOR: char = '|';

pub fn pair_name(first: &str, second: &str) -> String {
    format!("{first}{PAIR_SEPARATOR}{second}")
}

impl BipolarFuzzySoftSet {
    pub fn empty(carrier: usize) -> Self {
        BipolarFuzzySoftSet { carrier, params: BTreeMap::new() }
    }

    pub fn new(carrier: usize, entries: impl IntoIterator<Item = (String, BipolarFuzzySet)>) -> Result<Self> {
        let mut s = Self::empty(carrier);
        for (name, b) in entries {
            s.insert(name, b)?;
        }
        Ok(s)
    }

    /// Adds or replaces the set for `name`.
    pub fn insert(&mut self, name: impl Into<String>, b: BipolarFuzzySet) -> Result<()> {
        if b.len() != self.carrier {
            return Err(Error::CarrierMismatch { left: b.len(), right: self.carrier });
        }
        self.params.insert(name.into(), b);
        Ok(())
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn get(&self, param: &str) -> Option<&BipolarFuzzySet> {
        self.params.get(param)
    }

    pub fn params(&self) -> impl Iterator<Item = &str> {
        self.params.keys().map(String::as_str)
    }

    pub fn param_set(&self) -> BTreeSet<String> {
        self.params.keys().cloned().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &BipolarFuzzySet)> {
        self.params.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn contains(&self, param: &str) -> bool {
        self.params.contains_key(param)
    }

    /// Keeps only the listed parameters that are present.
    pub fn restrict<'a>(&self, keep: impl IntoIterator<Item = &'a str>) -> Self {
        let mut out = Self::empty(self.carrier);
        for p in keep {
            if let Some(b) = self.params.get(p) {
                out.params.insert(p.to_string(), b.clone());
            }
        }
        out
    }

    pub fn without(&self, param: &str) -> Self {
        let mut out = self.clone();
        out.params.remove(param);
        out
    }

    pub(crate) fn map_sets(&self, mut f: impl FnMut(&BipolarFuzzySet) -> Result<BipolarFuzzySet>) -> Result<Self> {
        let mut out = Self::empty(self.carrier);
        for (p, b) in &self.params {
            out.params.insert(p.clone(), f(b)?);
        }
        Ok(out)
    }

    pub(crate) fn check_carrier(&self, other: &Self) -> Result<()> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch { left: self.carrier, right: other.carrier });
        }
        Ok(())
    }
}

/// Why `F ⊑ G` failed: a parameter of `F` missing from `G`, or a degree of
/// `F` exceeding `G`'s on the positive side (or below it on the negative).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetWitness {
    pub param: String,
    pub element: Option<usize>,
    pub component: Option<Component>,
}

pub fn is_subset(f: &BipolarFuzzySoftSet, g: &BipolarFuzzySoftSet) -> Result<std::result::Result<(), SubsetWitness>> {
    f.check_carrier(g)?;
    for (p, fb) in f.iter() {
        let Some(gb) = g.get(p) else {
            return Ok(Err(SubsetWitness { param: p.to_string(), element: None, component: None }));
        };
        for x in 0..f.carrier() {
            if fb.pos(x) > gb.pos(x) {
                return Ok(Err(SubsetWitness { param: p.into(), element: Some(x), component: Some(Component::Pos) }));
            }
            if fb.neg(x) < gb.neg(x) {
                return Ok(Err(SubsetWitness { param: p.into(), element: Some(x), component: Some(Component::Neg) }));
            }
        }
    }
    Ok(Ok(()))
}

type Combine = fn(&BipolarFuzzySet, &BipolarFuzzySet) -> Result<BipolarFuzzySet>;

/// Combines on `A ∩ B`; with `extend`, copies `F` on `A ∖ B` and `G` on
/// `B ∖ A` as well.
fn merge(
    f: &BipolarFuzzySoftSet,
    g: &BipolarFuzzySoftSet,
    combine: Combine,
    extend: bool,
) -> Result<BipolarFuzzySoftSet> {
    f.check_carrier(g)?;
    let mut out = BipolarFuzzySoftSet::empty(f.carrier());
    for (p, fb) in f.iter() {
        match g.get(p) {
            Some(gb) => out.insert(p, combine(fb, gb)?)?,
            None if extend => out.insert(p, fb.clone())?,
            None => {}
        }
    }
    if extend {
        for (p, gb) in g.iter() {
            if !f.contains(p) {
                out.insert(p, gb.clone())?;
            }
        }
    }
    Ok(out)
}

/// `F ⊓ G` on `A ∩ B`.
pub fn intersection(f: &BipolarFuzzySoftSet, g: &BipolarFuzzySoftSet) -> Result<BipolarFuzzySoftSet> {
    merge(f, g, meet, false)
}

/// `F ⊓ε G` on `A ∪ B`.
pub fn extended_intersection(f: &BipolarFuzzySoftSet, g: &BipolarFuzzySoftSet) -> Result<BipolarFuzzySoftSet> {
    merge(f, g, meet, true)
}

/// `F ⊔ G` on `A ∪ B`.
pub fn union(f: &BipolarFuzzySoftSet, g: &BipolarFuzzySoftSet) -> Result<BipolarFuzzySoftSet> {
    merge(f, g, join, true)
}

/// `F ⊔ᵣ G` on `A ∩ B`.
pub fn restricted_union(f: &BipolarFuzzySoftSet, g: &BipolarFuzzySoftSet) -> Result<BipolarFuzzySoftSet> {
    merge(f, g, join, false)
}

fn product(f: &BipolarFuzzySoftSet, g: &BipolarFuzzySoftSet, combine: Combine) -> Result<BipolarFuzzySoftSet> {
    f.check_carrier(g)?;
    let mut out = BipolarFuzzySoftSet::empty(f.carrier());
    for (p, fb) in f.iter() {
        for (q, gb) in g.iter() {
            out.insert(pair_name(p, q), combine(fb, gb)?)?;
        }
    }
    Ok(out)
}

/// `F ∧ G` on `A × B`.
pub fn and_product(f: &BipolarFuzzySoftSet, g: &BipolarFuzzySoftSet) -> Result<BipolarFuzzySoftSet> {
    product(f, g, meet)
}

/// `F ∨ G` on `A × B`.
pub fn or_product(f: &BipolarFuzzySoftSet, g: &BipolarFuzzySoftSet) -> Result<BipolarFuzzySoftSet> {
    product(f, g, join)
}

/// Union of a family sharing one parameter set: pointwise sup of positive
/// degrees, inf of negative degrees.
pub fn family_union(family: &[BipolarFuzzySoftSet]) -> Result<BipolarFuzzySoftSet> {
    let (first, rest) =
        family.split_first().ok_or_else(|| Error::Precondition("family union of an empty family".into()))?;
    let mut acc = first.clone();
    for f in rest {
        first.check_carrier(f)?;
        if f.param_set() != first.param_set() {
            return Err(Error::ParameterMismatch);
        }
        acc = union(&acc, f)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn class_set(t1: Rational, t2: Rational, s1: Rational, s2: Rational) -> BipolarFuzzySet {
        BipolarFuzzySet::new(vec![t1, t2, t1, t2], vec![s1, s2, s1, s2]).unwrap()
    }

    /// The three-parameter example on ℤ₄.
    fn example() -> BipolarFuzzySoftSet {
        BipolarFuzzySoftSet::new(
            4,
            [
                ("c".to_string(), class_set(r(1, 2), r(3, 10), r(-2, 5), r(-1, 5))),
                ("d".to_string(), class_set(r(7, 10), r(1, 5), r(-3, 5), r(-3, 10))),
                ("e".to_string(), class_set(r(4, 5), r(2, 5), r(-7, 10), r(-1, 2))),
            ],
        )
        .unwrap()
    }

    #[test]
    fn subset_examples() {
        let f = example();
        assert_eq!(is_subset(&f, &f).unwrap(), Ok(()));
        let c = f.restrict(["c"]);
        assert_eq!(is_subset(&c, &f.restrict(["c", "d"])).unwrap(), Ok(()));
        let mut hi = BipolarFuzzySoftSet::empty(4);
        hi.insert("c", BipolarFuzzySet::new(vec![Rational::ONE; 4], vec![Rational::ZERO; 4]).unwrap()).unwrap();
        let mut lo = BipolarFuzzySoftSet::empty(4);
        lo.insert("c", BipolarFuzzySet::new(vec![r(1, 2); 4], vec![Rational::ZERO; 4]).unwrap()).unwrap();
        let w = is_subset(&hi, &lo).unwrap().unwrap_err();
        assert_eq!((w.param.as_str(), w.element, w.component), ("c", Some(0), Some(Component::Pos)));
        let w = is_subset(&f, &c).unwrap().unwrap_err();
        assert_eq!((w.param.as_str(), w.element), ("d", None));
    }

    #[test]
    fn intersection_examples() {
        let f = example();
        assert_eq!(intersection(&f, &f).unwrap(), f);
        let cd = f.restrict(["c", "d"]);
        let de = f.restrict(["d", "e"]);
        assert_eq!(intersection(&cd, &de).unwrap(), f.restrict(["d"]));
        // F_c ⊓ F_d, both lifted to parameter c.
        let fc = f.restrict(["c"]);
        let mut fd_as_c = BipolarFuzzySoftSet::empty(4);
        fd_as_c.insert("c", f.get("d").unwrap().clone()).unwrap();
        let m = intersection(&fc, &fd_as_c).unwrap();
        assert_eq!(m.get("c").unwrap().pos(0), r(1, 2));
        assert_eq!(m.get("c").unwrap().neg(0), r(-2, 5));
        let u = union(&fc, &fd_as_c).unwrap();
        assert_eq!(u.get("c").unwrap().pos(0), r(7, 10));
        assert_eq!(u.get("c").unwrap().neg(0), r(-3, 5));
    }

    #[test]
    fn extended_and_restricted() {
        let f = example();
        let c = f.restrict(["c"]);
        let cd = f.restrict(["c", "d"]);
        assert_eq!(extended_intersection(&c, &cd).unwrap(), cd);
        assert_eq!(extended_intersection(&f, &f).unwrap(), f);
        let e = f.restrict(["e"]);
        assert_eq!(extended_intersection(&cd, &e).unwrap(), f);
        assert_eq!(union(&cd, &e).unwrap(), f);
        assert_eq!(union(&f, &f).unwrap(), f);
        assert_eq!(restricted_union(&f, &f).unwrap(), f);
        assert!(restricted_union(&cd, &e).unwrap().is_empty());
        assert_eq!(restricted_union(&cd, &f.restrict(["d", "e"])).unwrap(), f.restrict(["d"]));
    }

    #[test]
    fn products() {
        let f = example();
        let ab = and_product(&f.restrict(["c", "d"]), &f).unwrap();
        assert_eq!(ab.len(), 6);
        let ff = and_product(&f, &f).unwrap();
        assert_eq!(ff.get("c|c"), f.get("c"));
        assert_eq!(ff.get("c|d").unwrap().pos(0), r(1, 2));
        assert_eq!(ff.get("c|d").unwrap().neg(0), r(-2, 5));
        let oo = or_product(&f, &f).unwrap();
        assert_eq!(oo.get("c|c"), f.get("c"));
        assert_eq!(oo.get("c|d").unwrap().pos(0), r(7, 10));
        assert_eq!(oo.get("c|d").unwrap().neg(0), r(-3, 5));
        assert_eq!(or_product(&f.restrict(["c", "d"]), &f.restrict(["e"])).unwrap().len(), 2);
    }

    #[test]
    fn family_examples() {
        let f = example();
        assert_eq!(family_union(std::slice::from_ref(&f)).unwrap(), f);
        assert_eq!(family_union(&[f.clone(), f.clone(), f.clone()]).unwrap(), f);
        let fc = f.restrict(["c"]);
        let mut fd_as_c = BipolarFuzzySoftSet::empty(4);
        fd_as_c.insert("c", f.get("d").unwrap().clone()).unwrap();
        let u = family_union(&[fc, fd_as_c]).unwrap();
        let b = u.get("c").unwrap();
        assert_eq!(b.pos_values(), &[r(7, 10), r(3, 10), r(7, 10), r(3, 10)]);
        assert_eq!(b.neg_values(), &[r(-3, 5), r(-3, 10), r(-3, 5), r(-3, 10)]);
        assert!(family_union(&[]).is_err());
        assert!(matches!(family_union(&[f.clone(), f.restrict(["c"])]), Err(Error::ParameterMismatch)));
    }

    #[test]
    fn carrier_mismatch() {
        let f = example();
        let g = BipolarFuzzySoftSet::empty(3);
        assert!(intersection(&f, &g).is_err());
        assert!(is_subset(&f, &g).is_err());
    }
}
