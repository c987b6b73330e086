//! Brute-force reference implementations used by the integration tests.
//!
//! They work on plain tables copied out of a space and share no code with
//! the library beyond reading those tables.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use hypersoft::algebra::HyperVectorSpace;
use hypersoft::bipolar::BipolarFuzzySet;
use hypersoft::soft::BipolarFuzzySoftSet;
use hypersoft::Rational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Cell = BTreeSet<usize>;

/// A hypervector space as raw tables.
pub struct Plain {
    pub n: usize,
    pub k: usize,
    pub add: Vec<Vec<usize>>,
    pub fadd: Vec<Vec<usize>>,
    pub fmul: Vec<Vec<usize>>,
    pub hyp: Vec<Vec<Cell>>,
}

impl Plain {
    pub fn of(v: &HyperVectorSpace) -> Self {
        let (n, k) = (v.dim(), v.scalars());
        let g = v.group();
        let f = v.field();
        Plain {
            n,
            k,
            add: (0..n).map(|x| (0..n).map(|y| g.add(x, y)).collect()).collect(),
            fadd: (0..k).map(|a| (0..k).map(|b| f.add(a, b)).collect()).collect(),
            fmul: (0..k).map(|a| (0..k).map(|b| f.mul(a, b)).collect()).collect(),
            hyp: (0..k).map(|a| (0..n).map(|x| v.cell(a, x).iter().collect()).collect()).collect(),
        }
    }

    pub fn zero(&self) -> usize {
        (0..self.n).find(|&z| (0..self.n).all(|x| self.add[z][x] == x)).unwrap()
    }

    pub fn neg(&self, x: usize) -> usize {
        let z = self.zero();
        (0..self.n).find(|&y| self.add[x][y] == z).unwrap()
    }

    pub fn fzero(&self) -> usize {
        (0..self.k).find(|&z| (0..self.k).all(|a| self.fadd[z][a] == a)).unwrap()
    }

    pub fn fone(&self) -> usize {
        let z = self.fzero();
        (0..self.k).find(|&u| u != z && (0..self.k).all(|a| self.fmul[u][a] == a)).unwrap()
    }

    pub fn fneg(&self, a: usize) -> usize {
        let z = self.fzero();
        (0..self.k).find(|&b| self.fadd[a][b] == z).unwrap()
    }

    pub fn sum_sets(&self, s: &Cell, t: &Cell) -> Cell {
        s.iter().flat_map(|&p| t.iter().map(move |&q| (p, q))).map(|(p, q)| self.add[p][q]).collect()
    }

    pub fn hyper(&self, a: usize, s: &Cell) -> Cell {
        s.iter().flat_map(|&t| self.hyp[a][t].iter().copied()).collect()
    }
}

/// Violations of each axiom as tuples, plus the two strong flags.
#[derive(Debug, Default)]
pub struct AxiomOracle {
    /// `(a, x, y)` with the H1 sides failing the relation.
    pub h1: BTreeSet<(usize, usize, usize)>,
    /// `(a, b, x)`.
    pub h2: BTreeSet<(usize, usize, usize)>,
    /// `(a, b, x)`.
    pub h3: BTreeSet<(usize, usize, usize)>,
    pub h4: bool,
    pub h5: bool,
    pub strong_right: bool,
    pub strong_left: bool,
}

#[derive(Clone, Copy)]
pub enum Rel {
    Equal,
    Subset,
    Superset,
    Meets,
}

fn rel(r: Rel, l: &Cell, rt: &Cell) -> bool {
    match r {
        Rel::Equal => l == rt,
        Rel::Subset => l.is_subset(rt),
        Rel::Superset => l.is_superset(rt),
        Rel::Meets => !l.is_disjoint(rt),
    }
}

pub fn axiom_oracle(p: &Plain, r1: Rel, r2: Rel, r3: Rel) -> AxiomOracle {
    let mut o = AxiomOracle { h4: true, h5: true, strong_right: true, strong_left: true, ..Default::default() };
    for a in 0..p.k {
        for x in 0..p.n {
            for y in 0..p.n {
                let l = p.hyp[a][p.add[x][y]].clone();
                let r = p.sum_sets(&p.hyp[a][x], &p.hyp[a][y]);
                if !rel(r1, &l, &r) {
                    o.h1.insert((a, x, y));
                }
                o.strong_right &= l == r;
            }
            for b in 0..p.k {
                let l = p.hyp[p.fadd[a][b]][x].clone();
                let r = p.sum_sets(&p.hyp[a][x], &p.hyp[b][x]);
                if !rel(r2, &l, &r) {
                    o.h2.insert((a, b, x));
                }
                o.strong_left &= l == r;
                let l3 = p.hyper(a, &p.hyp[b][x]);
                if !rel(r3, &l3, &p.hyp[p.fmul[a][b]][x]) {
                    o.h3.insert((a, b, x));
                }
            }
            let negated: Cell = p.hyp[a][x].iter().map(|&t| p.neg(t)).collect();
            o.h4 &= p.hyp[a][p.neg(x)] == negated && p.hyp[p.fneg(a)][x] == negated;
        }
    }
    let one = p.fone();
    o.h5 = (0..p.n).all(|x| p.hyp[one][x].contains(&x));
    o
}

/// One parameter slice as `(pos, neg)` vectors.
pub type Slice = (Vec<Rational>, Vec<Rational>);

pub fn slices(f: &BipolarFuzzySoftSet) -> BTreeMap<String, Slice> {
    f.iter().map(|(p, b)| (p.to_string(), (b.pos_values().to_vec(), b.neg_values().to_vec()))).collect()
}

/// `(F+G)` on the common parameters by enumerating every decomposition.
pub fn sum_oracle(p: &Plain, f: &BTreeMap<String, Slice>, g: &BTreeMap<String, Slice>) -> BTreeMap<String, Slice> {
    let mut out = BTreeMap::new();
    for (e, (fp, fn_)) in f {
        let Some((gp, gn)) = g.get(e) else { continue };
        let mut pos = vec![None::<Rational>; p.n];
        let mut neg = vec![None::<Rational>; p.n];
        for y in 0..p.n {
            for z in 0..p.n {
                let x = p.add[y][z];
                let lo = if fp[y] < gp[z] { fp[y] } else { gp[z] };
                let hi = if fn_[y] > gn[z] { fn_[y] } else { gn[z] };
                pos[x] = Some(match pos[x] {
                    Some(c) if c >= lo => c,
                    _ => lo,
                });
                neg[x] = Some(match neg[x] {
                    Some(c) if c <= hi => c,
                    _ => hi,
                });
            }
        }
        out.insert(
            e.clone(),
            (pos.into_iter().map(Option::unwrap).collect(), neg.into_iter().map(Option::unwrap).collect()),
        );
    }
    out
}

/// `a∘F`: sup/inf over the `t` whose image under `a` contains `x`, zero
/// when no such `t` exists.
pub fn scale_oracle(p: &Plain, a: usize, f: &BTreeMap<String, Slice>) -> BTreeMap<String, Slice> {
    let zero = Rational::from_integer(0);
    f.iter()
        .map(|(e, (fp, fn_))| {
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            for x in 0..p.n {
                let ts: Vec<usize> = (0..p.n).filter(|&t| p.hyp[a][t].contains(&x)).collect();
                if ts.is_empty() {
                    pos.push(zero);
                    neg.push(zero);
                } else {
                    pos.push(ts.iter().map(|&t| fp[t]).max().unwrap());
                    neg.push(ts.iter().map(|&t| fn_[t]).min().unwrap());
                }
            }
            (e.clone(), (pos, neg))
        })
        .collect()
}

/// Both subhyperspace conditions for one slice.
pub fn subhyperspace_oracle(p: &Plain, (pos, neg): &Slice) -> bool {
    for x in 0..p.n {
        for y in 0..p.n {
            let d = p.add[x][p.neg(y)];
            if pos[d] < pos[x].min(pos[y]) || neg[d] > neg[x].max(neg[y]) {
                return false;
            }
        }
        for a in 0..p.k {
            let cell = &p.hyp[a][x];
            if cell.iter().map(|&t| pos[t]).min().unwrap() < pos[x]
                || cell.iter().map(|&t| neg[t]).max().unwrap() > neg[x]
            {
                return false;
            }
        }
    }
    true
}

/// Degrees on the grid `{0, 1/10, .., 1}`.
pub fn random_slice(n: usize, rng: &mut ChaCha8Rng) -> BipolarFuzzySet {
    let pos = (0..n).map(|_| Rational::new(rng.gen_range(0..=10), 10)).collect();
    let neg = (0..n).map(|_| Rational::new(-rng.gen_range(0..=10), 10)).collect();
    BipolarFuzzySet::new(pos, neg).unwrap()
}

pub fn random_soft_set(n: usize, params: &[&str], rng: &mut ChaCha8Rng) -> BipolarFuzzySoftSet {
    BipolarFuzzySoftSet::new(n, params.iter().map(|p| (p.to_string(), random_slice(n, rng)))).unwrap()
}

/// A random nonempty subset of `pool`.
pub fn random_params<'a>(pool: &[&'a str], rng: &mut ChaCha8Rng) -> Vec<&'a str> {
    loop {
        let picked: Vec<&str> = pool.iter().copied().filter(|_| rng.gen_bool(0.6)).collect();
        if !picked.is_empty() {
            return picked;
        }
    }
}
