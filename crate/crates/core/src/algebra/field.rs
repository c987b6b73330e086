use crate::error::{Error, Result};

use super::table::{check_abelian, LawNames, Table, ValidationReport};

const ADD_LAWS: LawNames = ["add-associative", "add-commutative", "add-identity", "add-inverse"];
const MUL_LAWS: LawNames = ["mul-associative", "mul-commutative", "mul-identity", "mul-inverse"];

/// Validates field tables; element 0 must be the additive identity.
///
/// Shape problems are errors. Law failures are listed in the report with
/// the first witness found for each law.
pub fn validate_finite_field(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<ValidationReport> {
    let add = Table::from_rows(add)?;
    let mul = Table::from_rows(mul)?;
    if add.size() != mul.size() {
        return Err(Error::DimensionMismatch { left: add.size(), right: mul.size() });
    }
    Ok(field_report(&add, &mul).0)
}

fn field_report(add: &Table, mul: &Table) -> (ValidationReport, Option<usize>) {
    let n = add.size();
    let mut report = ValidationReport::default();
    check_abelian(add, 0, ADD_LAWS, &mut report);

    // The multiplicative group lives on the nonzero elements.
    let one = (1..n).find(|&e| (0..n).all(|x| mul.get(e, x) == x && mul.get(x, e) == x));
    match one {
        None => report.fail("mul-identity", vec![]),
        Some(one) => {
            if let Some(x) = (1..n).find(|&x| !(1..n).any(|y| mul.get(x, y) == one)) {
                report.fail("mul-inverse", vec![x]);
            }
        }
    }
    'assoc: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if mul.get(mul.get(x, y), z) != mul.get(x, mul.get(y, z)) {
                    report.fail(MUL_LAWS[0], vec![x, y, z]);
                    break 'assoc;
                }
            }
        }
    }
    'comm: for x in 0..n {
        for y in x + 1..n {
            if mul.get(x, y) != mul.get(y, x) {
                report.fail(MUL_LAWS[1], vec![x, y]);
                break 'comm;
            }
        }
    }
    'dist: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if mul.get(x, add.get(y, z)) != add.get(mul.get(x, y), mul.get(x, z)) {
                    report.fail("distributive", vec![x, y, z]);
                    break 'dist;
                }
            }
        }
    }
    (report, one)
}

/// A finite field on `{0, .., q-1}` with 0 as zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteField {
    add: Table,
    mul: Table,
    one: usize,
    neg: Vec<usize>,
}

impl FiniteField {
    pub fn from_rows(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<Self> {
        let add = Table::from_rows(add)?;
        let mul = Table::from_rows(mul)?;
        if add.size() != mul.size() {
            return Err(Error::DimensionMismatch { left: add.size(), right: mul.size() });
        }
        let (report, one) = field_report(&add, &mul);
        if let Some(f) = report.failures.first() {
            return Err(Error::NotAStructure { what: "field", detail: format!("{} fails at {:?}", f.law, f.witness) });
        }
        let n = add.size();
        let neg = (0..n).map(|x| (0..n).find(|&y| add.get(x, y) == 0).expect("checked")).collect();
        Ok(FiniteField { add, mul, one: one.expect("checked"), neg })
    }

    /// The prime field ℤₚ.
    pub fn prime(p: usize) -> Result<Self> {
        if p < 2 || (2..p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        let add = Table::from_fn(p, |x, y| (x + y) % p).rows();
        let mul = Table::from_fn(p, |x, y| (x * y) % p).rows();
        Self::from_rows(&add, &mul)
    }

    pub fn order(&self) -> usize {
        self.add.size()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.get(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn add_table(&self) -> &Table {
        &self.add
    }

    pub fn mul_table(&self) -> &Table {
        &self.mul
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_from_the_tables() {
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![0, 1]];
        assert!(validate_finite_field(&add, &mul).unwrap().passed());
        let f = FiniteField::from_rows(&add, &mul).unwrap();
        assert_eq!(f.one(), 1);
        assert_eq!(f.neg(1), 1);
    }

    #[test]
    fn trivial_ring_is_not_a_field() {
        let report = validate_finite_field(&[vec![0]], &[vec![0]]).unwrap();
        assert!(report.has("mul-identity"));
    }

    #[test]
    fn z4_addition_as_both_tables_fails() {
        let z4: Vec<Vec<usize>> = (0..4).map(|x| (0..4).map(|y| (x + y) % 4).collect()).collect();
        let report = validate_finite_field(&z4, &z4).unwrap();
        assert!(!report.passed());
        // No element acts as a multiplicative identity on all of ℤ₄ under +.
        assert!(report.has("mul-identity"));
        assert!(report.has("distributive"));
    }

    #[test]
    fn shape_errors() {
        let add = vec![vec![0, 1], vec![1, 0]];
        assert!(matches!(validate_finite_field(&add, &[vec![0]]), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(validate_finite_field(&add, &[vec![0, 0], vec![0, 7]]), Err(Error::EntryOutOfRange { .. })));
    }

    #[test]
    fn prime_fields() {
        let f3 = FiniteField::prime(3).unwrap();
        assert_eq!(f3.neg(1), 2);
        assert_eq!(f3.mul(2, 2), 1);
        assert!(FiniteField::prime(4).is_err());
    }
}
