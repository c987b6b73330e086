use crate::error::{Error, Result};

use super::field::FiniteField;
use super::group::AbelianGroup;
use super::subset::Subset;

/// An abelian group `V` with a field `K` acting through the external
/// hyperoperation `∘ : K × V → P*(V)`.
///
/// Only structural validity is enforced here (every cell is a nonempty
/// subset of the carrier); the H1–H5 laws are checked separately by
/// [`check_axioms`](super::check_axioms) so that non-conforming tables can
/// still be loaded and audited.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperVectorSpace {
    field: FiniteField,
    group: AbelianGroup,
    cells: Vec<Subset>,
}

impl HyperVectorSpace {
    /// `rows[a][x]` is the cell `a∘x`.
    pub fn new(field: FiniteField, group: AbelianGroup, rows: Vec<Vec<Subset>>) -> Result<Self> {
        let (q, n) = (field.order(), group.order());
        if rows.len() != q {
            return Err(Error::DimensionMismatch { left: rows.len(), right: q });
        }
        let mut cells = Vec::with_capacity(q * n);
        for (a, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: row.len(), right: n });
            }
            for (x, cell) in row.into_iter().enumerate() {
                if cell.is_empty() {
                    return Err(Error::EmptyCell { scalar: a, element: x });
                }
                if !cell.within(n) {
                    let value = cell.iter().last().unwrap_or(0);
                    return Err(Error::EntryOutOfRange { row: a, col: x, value, size: n });
                }
                cells.push(cell);
            }
        }
        Ok(HyperVectorSpace { field, group, cells })
    }

    pub(crate) fn from_fn(field: FiniteField, group: AbelianGroup, f: impl Fn(usize, usize) -> Subset) -> Result<Self> {
        let rows = (0..field.order()).map(|a| (0..group.order()).map(|x| f(a, x)).collect()).collect();
        Self::new(field, group, rows)
    }

    /// `a∘x = V` for every `a, x`.
    pub fn total(field: FiniteField, group: AbelianGroup) -> Self {
        let all = group.carrier();
        Self::from_fn(field, group, |_, _| all).expect("total hyperoperation")
    }

    /// The vector space `ℤₚᵏ` over `ℤₚ` with `a∘x = {a·x}`.
    pub fn classical(p: usize, k: u32) -> Result<Self> {
        Self::inflated(p, k, Subset::singleton(0))
    }

    /// `a∘x = a·x + W` on `ℤₚᵏ` over `ℤₚ` for a subspace `W`.
    pub fn inflated(p: usize, k: u32, subspace: Subset) -> Result<Self> {
        let field = FiniteField::prime(p)?;
        let group = AbelianGroup::elementary(p, k);
        if !subspace.within(group.order()) || !subspace.contains(0) {
            return Err(Error::Precondition("inflation set must contain 0 and lie in the carrier".into()));
        }
        let closed_add = subspace.iter().all(|x| subspace.iter().all(|y| subspace.contains(group.add(x, y))));
        let closed_scale = subspace.iter().all(|x| (0..p).all(|a| subspace.contains(scale_digits(p, k, a, x))));
        if !closed_add || !closed_scale {
            return Err(Error::Precondition(format!("{subspace} is not a subspace")));
        }
        let g = group.clone();
        Self::from_fn(field, group, |a, x| g.set_sum(Subset::singleton(scale_digits(p, k, a, x)), subspace))
    }

    /// The ℤ₄ over ℤ₂ example space, which is not strongly distributive on
    /// either side and fails H1 and H3 as written.
    pub fn z4_over_z2() -> Self {
        let field = FiniteField::prime(2).expect("prime");
        let group = AbelianGroup::cyclic(4);
        let s = |xs: &[usize]| xs.iter().copied().collect::<Subset>();
        let rows = vec![
            vec![s(&[0, 2]), s(&[0]), s(&[0]), s(&[0])],
            vec![s(&[0, 2]), s(&[1, 2, 3]), s(&[0, 2]), s(&[1, 2, 3])],
        ];
        Self::new(field, group, rows).expect("fixture tables")
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn scalars(&self) -> usize {
        self.field.order()
    }

    /// The cell `a∘x`.
    #[inline]
    pub fn cell(&self, a: usize, x: usize) -> Subset {
        self.cells[a * self.group.order() + x]
    }

    pub fn rows(&self) -> Vec<Vec<Subset>> {
        self.cells.chunks(self.group.order()).map(<[Subset]>::to_vec).collect()
    }

    /// `a∘S = ⋃_{t ∈ S} a∘t`; `S` must be nonempty.
    pub fn hyper_extend(&self, a: usize, set: Subset) -> Result<Subset> {
        if set.is_empty() {
            return Err(Error::Precondition("hyper_extend over an empty set".into()));
        }
        Ok(self.extend_unchecked(a, set))
    }

    #[inline]
    pub(crate) fn extend_unchecked(&self, a: usize, set: Subset) -> Subset {
        set.iter().fold(Subset::EMPTY, |acc, t| acc.union(self.cell(a, t)))
    }

    /// Smallest set containing `gens ∪ {0}` that is closed under
    /// subtraction and under every `a∘`.
    pub fn closed_hull(&self, gens: Subset) -> Subset {
        let mut s = gens.union(Subset::singleton(0));
        loop {
            let mut next = self.group.subgroup_closure(s);
            for a in 0..self.scalars() {
                next = next.union(self.extend_unchecked(a, next));
            }
            if next == s {
                return s;
            }
            s = next;
        }
    }
}

/// Coordinatewise scalar multiple on ℤₚᵏ with base-`p` digit encoding.
pub(crate) fn scale_digits(p: usize, k: u32, a: usize, x: usize) -> usize {
    let (mut x, mut out, mut place) = (x, 0, 1);
    for _ in 0..k {
        out += (a * (x % p) % p) * place;
        x /= p;
        place *= p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extend_on_fixture() {
        let v = HyperVectorSpace::z4_over_z2();
        let s: Subset = [1, 2, 3].into_iter().collect();
        assert_eq!(v.hyper_extend(1, s).unwrap(), Subset::full(4));
        let e: Subset = [0, 2].into_iter().collect();
        assert_eq!(v.hyper_extend(0, e).unwrap(), e);
        for a in 0..2 {
            for x in 0..4 {
                assert_eq!(v.hyper_extend(a, Subset::singleton(x)).unwrap(), v.cell(a, x));
            }
        }
        assert!(v.hyper_extend(0, Subset::EMPTY).is_err());
    }

    #[test]
    fn empty_cell_rejected() {
        let f = FiniteField::prime(2).unwrap();
        let g = AbelianGroup::cyclic(2);
        let rows = vec![vec![Subset::singleton(0), Subset::EMPTY], vec![Subset::singleton(0), Subset::singleton(1)]];
        assert!(matches!(HyperVectorSpace::new(f, g, rows), Err(Error::EmptyCell { scalar: 0, element: 1 })));
    }

    #[test]
    fn inflation_requires_subspace() {
        // {0, 1} is a line in ℤ₃ only if closed under scaling, which it is not.
        assert!(HyperVectorSpace::inflated(3, 1, [0, 1].into_iter().collect()).is_err());
        let v = HyperVectorSpace::inflated(2, 2, [0, 1].into_iter().collect()).unwrap();
        assert_eq!(v.cell(1, 2), [2, 3].into_iter().collect());
        assert_eq!(v.cell(0, 3), [0, 1].into_iter().collect());
    }

    #[test]
    fn closed_hull_on_fixture() {
        let v = HyperVectorSpace::z4_over_z2();
        assert_eq!(v.closed_hull(Subset::EMPTY), [0, 2].into_iter().collect());
        assert_eq!(v.closed_hull(Subset::singleton(1)), Subset::full(4));
    }
}
