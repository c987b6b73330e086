//! Operations on bipolar fuzzy soft sets induced by the addition and the
//! external hyperoperation of a hypervector space.

use crate::algebra::HyperVectorSpace;
use crate::bipolar::{bfs_negate, BipolarFuzzySet};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::soft::BipolarFuzzySoftSet;

fn check(f: &BipolarFuzzySoftSet, v: &HyperVectorSpace) -> Result<()> {
    if f.carrier() != v.dim() {
        return Err(Error::CarrierMismatch { left: f.carrier(), right: v.dim() });
    }
    Ok(())
}

/// Sup-min convolution of two sets over the group. Every `x` has exactly
/// `|V|` decompositions `x = y + (x - y)`, so both extrema are over
/// nonempty sets.
pub fn convolve(f: &BipolarFuzzySet, g: &BipolarFuzzySet, v: &HyperVectorSpace) -> BipolarFuzzySet {
    let grp = v.group();
    BipolarFuzzySet::from_fn(v.dim(), |x| {
        let mut pos = f.pos(0).min(g.pos(x));
        let mut neg = f.neg(0).max(g.neg(x));
        for y in 1..v.dim() {
            let z = grp.sub(x, y);
            pos = pos.max(f.pos(y).min(g.pos(z)));
            neg = neg.min(f.neg(y).max(g.neg(z)));
        }
        (pos, neg)
    })
}

/// `F + G` on `A ∩ B`.
pub fn soft_sum(f: &BipolarFuzzySoftSet, g: &BipolarFuzzySoftSet, v: &HyperVectorSpace) -> Result<BipolarFuzzySoftSet> {
    check(f, v)?;
    check(g, v)?;
    let mut out = BipolarFuzzySoftSet::empty(v.dim());
    for (p, fb) in f.iter() {
        if let Some(gb) = g.get(p) {
            out.insert(p, convolve(fb, gb, v))?;
        }
    }
    Ok(out)
}

/// `F +ε G` on `A ∪ B`: `F` on `A ∖ B`, `G` on `B ∖ A`, the sum on `A ∩ B`.
pub fn soft_extended_sum(
    f: &BipolarFuzzySoftSet,
    g: &BipolarFuzzySoftSet,
    v: &HyperVectorSpace,
) -> Result<BipolarFuzzySoftSet> {
    let mut out = soft_sum(f, g, v)?;
    for (p, b) in f.iter().chain(g.iter()) {
        if !out.contains(p) {
            out.insert(p, b.clone())?;
        }
    }
    Ok(out)
}

/// Scalar image of one set: the sup (inf) of degrees over all `t` with
/// `x ∈ a∘t`, and `(0, 0)` when no such `t` exists.
pub fn scale(a: usize, b: &BipolarFuzzySet, v: &HyperVectorSpace) -> BipolarFuzzySet {
    let n = v.dim();
    let mut pos: Vec<Option<Rational>> = vec![None; n];
    let mut neg: Vec<Option<Rational>> = vec![None; n];
    for t in 0..n {
        for x in v.cell(a, t) {
            pos[x] = Some(pos[x].map_or(b.pos(t), |p| p.max(b.pos(t))));
            neg[x] = Some(neg[x].map_or(b.neg(t), |q| q.min(b.neg(t))));
        }
    }
    BipolarFuzzySet::from_fn(n, |x| (pos[x].unwrap_or(Rational::ZERO), neg[x].unwrap_or(Rational::ZERO)))
}

/// `a∘F` on `A`.
pub fn scalar_product(a: usize, f: &BipolarFuzzySoftSet, v: &HyperVectorSpace) -> Result<BipolarFuzzySoftSet> {
    check(f, v)?;
    if a >= v.scalars() {
        return Err(Error::Precondition(format!("scalar {a} is not a field element")));
    }
    f.map_sets(|b| Ok(scale(a, b, v)))
}

/// `-F`: every parameter's set composed with group negation.
pub fn soft_negate(f: &BipolarFuzzySoftSet, v: &HyperVectorSpace) -> Result<BipolarFuzzySoftSet> {
    check(f, v)?;
    f.map_sets(|b| bfs_negate(b, v.group()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn class_set(t1: Rational, t2: Rational, s1: Rational, s2: Rational) -> BipolarFuzzySet {
        BipolarFuzzySet::new(vec![t1, t2, t1, t2], vec![s1, s2, s1, s2]).unwrap()
    }

    fn fc() -> BipolarFuzzySoftSet {
        BipolarFuzzySoftSet::new(4, [("c".to_string(), class_set(r(1, 2), r(3, 10), r(-2, 5), r(-1, 5)))]).unwrap()
    }

    fn fd() -> BipolarFuzzySet {
        class_set(r(7, 10), r(1, 5), r(-3, 5), r(-3, 10))
    }

    #[test]
    fn sum_at_zero() {
        let v = HyperVectorSpace::z4_over_z2();
        let s = soft_sum(&fc(), &fc(), &v).unwrap();
        assert_eq!(s.get("c").unwrap().pos(0), r(1, 2));
        assert_eq!(s.get("c").unwrap().neg(0), r(-2, 5));
    }

    #[test]
    fn sum_with_crisp_zero() {
        let v = HyperVectorSpace::z4_over_z2();
        let z = Rational::ZERO;
        let zero_set = BipolarFuzzySet::new(vec![Rational::ONE, z, z, z], vec![Rational::MINUS_ONE, z, z, z]).unwrap();
        let g = BipolarFuzzySoftSet::new(4, [("c".to_string(), zero_set)]).unwrap();
        let s = soft_sum(&fc(), &g, &v).unwrap();
        // Decomposition x = x + 0 dominates: F's values are reproduced.
        assert_eq!(s.get("c"), fc().get("c"));
    }

    #[test]
    fn extended_sum_branches() {
        let v = HyperVectorSpace::z4_over_z2();
        let mut cd = fc();
        cd.insert("d", fd()).unwrap();
        let out = soft_extended_sum(&fc(), &cd, &v).unwrap();
        let sum = soft_sum(&fc(), &fc(), &v).unwrap();
        assert_eq!(out.get("c"), sum.get("c"));
        assert_eq!(out.get("d"), Some(&fd()));
        assert_eq!(soft_extended_sum(&cd, &cd, &v).unwrap(), soft_sum(&cd, &cd, &v).unwrap());
        let e = BipolarFuzzySoftSet::new(4, [("e".to_string(), fd())]).unwrap();
        let disjoint = soft_extended_sum(&fc(), &e, &v).unwrap();
        assert_eq!(disjoint.len(), 2);
        assert!(soft_sum(&fc(), &e, &v).unwrap().is_empty());
    }

    #[test]
    fn scalar_product_on_fixture() {
        let v = HyperVectorSpace::z4_over_z2();
        let one = scalar_product(1, &fc(), &v).unwrap();
        let b = one.get("c").unwrap();
        assert_eq!((b.pos(0), b.pos(1), b.pos(2)), (r(1, 2), r(3, 10), r(1, 2)));
        assert_eq!(b.neg(2), r(-2, 5));
        let zero = scalar_product(0, &fc(), &v).unwrap();
        let b0 = zero.get("c").unwrap();
        assert_eq!((b0.pos(1), b0.neg(1)), (Rational::ZERO, Rational::ZERO));
        assert!(scalar_product(2, &fc(), &v).is_err());
    }

    #[test]
    fn negation() {
        let v = HyperVectorSpace::z4_over_z2();
        assert_eq!(soft_negate(&fc(), &v).unwrap(), fc());
        let z = Rational::ZERO;
        let delta = BipolarFuzzySet::new(vec![z, Rational::ONE, z, z], vec![z; 4]).unwrap();
        let d = BipolarFuzzySoftSet::new(4, [("p".to_string(), delta)]).unwrap();
        let nd = soft_negate(&d, &v).unwrap();
        assert_eq!(nd.get("p").unwrap().pos(3), Rational::ONE);
        assert_eq!(soft_negate(&nd, &v).unwrap(), d);
    }
}
