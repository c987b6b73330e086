use serde::Serialize;

use crate::error::{Error, Result};

/// A square operation table over `{0, .., n-1}`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table {
    n: usize,
    cells: Vec<usize>,
}

impl Table {
    /// Checks shape and ranges; law checks live with the structures.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: i, found: row.len(), expected: n });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange { row: i, col: j, value: v, size: n });
                }
                cells.push(v);
            }
        }
        Ok(Table { n, cells })
    }

    pub(crate) fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                cells.push(f(i, j));
            }
        }
        Table { n, cells }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n).map(<[usize]>::to_vec).collect()
    }
}

/// A violated law together with the first tuple found violating it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawFailure {
    pub law: &'static str,
    pub witness: Vec<usize>,
}

/// Outcome of validating group or field tables.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<LawFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn has(&self, law: &str) -> bool {
        self.failures.iter().any(|f| f.law == law)
    }

    pub(crate) fn fail(&mut self, law: &'static str, witness: Vec<usize>) {
        self.failures.push(LawFailure { law, witness });
    }
}

/// Law names reported by [`check_abelian`]: associativity, commutativity,
/// identity, inverses.
pub(crate) type LawNames = [&'static str; 4];

/// Checks the abelian-group laws of `op` with `identity` as the neutral
/// element, recording the first witness for each failed law.
pub(crate) fn check_abelian(op: &Table, identity: usize, laws: LawNames, report: &mut ValidationReport) {
    let n = op.size();
    'assoc: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op.get(op.get(x, y), z) != op.get(x, op.get(y, z)) {
                    report.fail(laws[0], vec![x, y, z]);
                    break 'assoc;
                }
            }
        }
    }
    'comm: for x in 0..n {
        for y in x + 1..n {
            if op.get(x, y) != op.get(y, x) {
                report.fail(laws[1], vec![x, y]);
                break 'comm;
            }
        }
    }
    if let Some(x) = (0..n).find(|&x| op.get(identity, x) != x || op.get(x, identity) != x) {
        report.fail(laws[2], vec![identity, x]);
    }
    if let Some(x) = (0..n).find(|&x| !(0..n).any(|y| op.get(x, y) == identity)) {
        report.fail(laws[3], vec![x]);
    }
}
