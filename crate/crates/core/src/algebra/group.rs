use crate::error::{Error, Result};

use super::subset::{Subset, MAX_ELEMENTS};
use super::table::{check_abelian, LawNames, Table, ValidationReport};

const GROUP_LAWS: LawNames = ["associative", "commutative", "identity", "inverse"];

/// Validates an abelian group table with element 0 as identity.
pub fn validate_abelian_group(add: &[Vec<usize>]) -> Result<ValidationReport> {
    let table = Table::from_rows(add)?;
    Ok(group_report(&table))
}

fn group_report(table: &Table) -> ValidationReport {
    let mut report = ValidationReport::default();
    check_abelian(table, 0, GROUP_LAWS, &mut report);
    report
}

/// A finite abelian group on `{0, .., n-1}` with identity 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    add: Table,
    neg: Vec<usize>,
}

impl AbelianGroup {
    pub fn from_table(add: Table) -> Result<Self> {
        if add.size() > MAX_ELEMENTS {
            return Err(Error::CarrierTooLarge { size: add.size(), limit: MAX_ELEMENTS });
        }
        let report = group_report(&add);
        if let Some(f) = report.failures.first() {
            return Err(Error::NotAStructure {
                what: "abelian group",
                detail: format!("{} fails at {:?}", f.law, f.witness),
            });
        }
        let n = add.size();
        let neg = (0..n).map(|x| (0..n).find(|&y| add.get(x, y) == 0).expect("inverse checked")).collect();
        Ok(AbelianGroup { add, neg })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_table(Table::from_rows(rows)?)
    }

    /// ℤₙ with the usual residues as ids.
    pub fn cyclic(n: usize) -> Self {
        Self::from_table(Table::from_fn(n, |x, y| (x + y) % n)).expect("cyclic group")
    }

    /// ℤₚᵏ; element id `x` encodes the coordinates as base-`p` digits,
    /// least significant first.
    pub fn elementary(p: usize, k: u32) -> Self {
        let n = p.pow(k);
        Self::from_table(Table::from_fn(n, |x, y| {
            let (mut x, mut y, mut out, mut place) = (x, y, 0, 1);
            for _ in 0..k {
                out += ((x % p + y % p) % p) * place;
                x /= p;
                y /= p;
                place *= p;
            }
            out
        }))
        .expect("elementary abelian group")
    }

    pub fn order(&self) -> usize {
        self.add.size()
    }

    pub fn zero(&self) -> usize {
        0
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add.get(x, y)
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    pub fn table(&self) -> &Table {
        &self.add
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.order())
    }

    /// `{p + q : p ∈ s, q ∈ t}`.
    pub fn set_sum(&self, s: Subset, t: Subset) -> Subset {
        let mut out = Subset::EMPTY;
        for p in s {
            for q in t {
                out.insert(self.add(p, q));
            }
        }
        out
    }

    /// `{-s : s ∈ set}`.
    pub fn set_negate(&self, set: Subset) -> Subset {
        set.iter().map(|s| self.neg(s)).collect()
    }

    /// `k·x` as `x + .. + x`.
    pub fn multiple(&self, k: usize, x: usize) -> usize {
        (0..k).fold(0, |acc, _| self.add(acc, x))
    }

    /// Closes `gens ∪ {0}` under subtraction.
    pub fn subgroup_closure(&self, gens: Subset) -> Subset {
        let mut s = gens.union(Subset::singleton(0));
        loop {
            let mut next = s;
            for x in s {
                for y in s {
                    next.insert(self.sub(x, y));
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4_rows() -> Vec<Vec<usize>> {
        vec![vec![0, 1, 2, 3], vec![1, 2, 3, 0], vec![2, 3, 0, 1], vec![3, 0, 1, 2]]
    }

    #[test]
    fn z4_is_a_group() {
        assert!(validate_abelian_group(&z4_rows()).unwrap().passed());
        assert!(validate_abelian_group(&[vec![0]]).unwrap().passed());
    }

    #[test]
    fn corrupted_z4_has_associativity_witness() {
        let mut rows = z4_rows();
        rows[1][1] = 3;
        let report = validate_abelian_group(&rows).unwrap();
        assert!(!report.passed());
        let f = report.failures.iter().find(|f| f.law == "associative").unwrap();
        let (x, y, z) = (f.witness[0], f.witness[1], f.witness[2]);
        assert_ne!(rows[rows[x][y]][z], rows[x][rows[y][z]]);
    }

    #[test]
    fn malformed_tables_are_errors() {
        assert!(matches!(validate_abelian_group(&[vec![0, 1], vec![1]]), Err(Error::NotSquare { row: 1, .. })));
        assert!(matches!(
            validate_abelian_group(&[vec![0, 2], vec![1, 0]]),
            Err(Error::EntryOutOfRange { value: 2, .. })
        ));
    }

    #[test]
    fn set_arithmetic_on_z4() {
        let g = AbelianGroup::cyclic(4);
        let s: Subset = [1, 2, 3].into_iter().collect();
        assert_eq!(g.set_sum(s, s), Subset::full(4));
        let e: Subset = [0, 2].into_iter().collect();
        assert_eq!(g.set_sum(e, e), e);
        assert_eq!(g.set_sum(s, Subset::singleton(0)), s);
        assert_eq!(g.set_negate(s), s);
        assert_eq!(g.set_negate(Subset::singleton(1)), Subset::singleton(3));
        assert_eq!(g.set_negate(Subset::singleton(0)), Subset::singleton(0));
        assert!(g.set_sum(s, Subset::EMPTY).is_empty());
    }

    #[test]
    fn elementary_group_is_coordinatewise() {
        let g = AbelianGroup::elementary(2, 2);
        assert_eq!(g.add(1, 2), 3);
        assert_eq!(g.add(3, 3), 0);
        let g3 = AbelianGroup::elementary(3, 2);
        assert_eq!(g3.add(2, 2), 1);
        assert_eq!(g3.neg(1 + 3 * 2), 2 + 3);
    }
}
