//! Library results against brute-force enumeration.

mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use common::*;
use hypersoft::algebra::{check_axioms, Axiom, AxiomMode, HyperVectorSpace};
use hypersoft::hvs_ops::{scalar_product, soft_sum};
use hypersoft::lab::{constructive_family, generate_hvs, subhyperspace_bfs, FieldChoice, InstanceSpec, Strategy};
use hypersoft::structure::{is_bfs_hypervector_space, is_subhyperspace};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn spaces() -> &'static [HyperVectorSpace] {
    static SPACES: OnceLock<Vec<HyperVectorSpace>> = OnceLock::new();
    SPACES.get_or_init(build_spaces)
}

fn build_spaces() -> Vec<HyperVectorSpace> {
    let mut out = vec![HyperVectorSpace::z4_over_z2()];
    for field in [FieldChoice::Z2, FieldChoice::Z3] {
        for st in [Strategy::Total, Strategy::Classical, Strategy::Inflated] {
            out.extend(constructive_family(st, field, 9));
        }
        let spec = InstanceSpec {
            max_carrier: 4,
            field,
            strategy: Strategy::FilteredRandom,
            mode: AxiomMode::STRICT,
            seed: 3,
        };
        out.extend(generate_hvs(&spec).take(2));
    }
    out
}

fn triples(report: &hypersoft::algebra::AxiomReport, ax: Axiom) -> BTreeSet<(usize, usize, usize)> {
    report
        .witnesses_for(ax)
        .map(|w| match ax {
            Axiom::H1 => (w.a.unwrap(), w.x.unwrap(), w.y.unwrap()),
            _ => (w.a.unwrap(), w.b.unwrap(), w.x.unwrap()),
        })
        .collect()
}

#[test]
fn axiom_audit_matches_enumeration() {
    let modes = [
        (AxiomMode::STRICT, Rel::Subset, Rel::Subset, Rel::Equal),
        (AxiomMode::COMPAT, Rel::Meets, Rel::Subset, Rel::Superset),
    ];
    for v in spaces() {
        let p = Plain::of(v);
        for (mode, r1, r2, r3) in modes {
            let report = check_axioms(v, mode);
            let o = axiom_oracle(&p, r1, r2, r3);
            assert_eq!(triples(&report, Axiom::H1), o.h1);
            assert_eq!(triples(&report, Axiom::H2), o.h2);
            assert_eq!(triples(&report, Axiom::H3), o.h3);
            assert_eq!(report.h1, o.h1.is_empty());
            assert_eq!(report.h4, o.h4);
            assert_eq!(report.h5, o.h5);
            assert_eq!(report.strongly_right_distributive, o.strong_right);
            assert_eq!(report.strongly_left_distributive, o.strong_left);
        }
    }
}

#[test]
fn fixture_violations_are_the_expected_tuples() {
    let p = Plain::of(&HyperVectorSpace::z4_over_z2());
    let o = axiom_oracle(&p, Rel::Subset, Rel::Subset, Rel::Equal);
    assert_eq!(o.h1, BTreeSet::from([(0, 1, 3), (0, 2, 2), (0, 3, 1)]));
    assert!(o.h2.is_empty() && o.h4 && o.h5);
    assert_eq!(o.h3.len(), 9);
    assert!(!o.strong_left && !o.strong_right);
}

#[test]
fn sum_and_scale_match_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pool = ["c", "d", "e"];
    for v in spaces() {
        let p = Plain::of(v);
        for _ in 0..8 {
            let f = random_soft_set(v.dim(), &random_params(&pool, &mut rng), &mut rng);
            let g = random_soft_set(v.dim(), &random_params(&pool, &mut rng), &mut rng);
            let got = soft_sum(&f, &g, v).unwrap();
            assert_eq!(slices(&got), sum_oracle(&p, &slices(&f), &slices(&g)));
            for a in 0..v.scalars() {
                let got = scalar_product(a, &f, v).unwrap();
                assert_eq!(slices(&got), scale_oracle(&p, a, &slices(&f)));
            }
        }
    }
}

#[test]
fn structure_checks_match_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for v in spaces() {
        let p = Plain::of(v);
        for i in 0..20 {
            // Half arbitrary, half drawn to satisfy the conditions.
            let b = if i % 2 == 0 { random_slice(v.dim(), &mut rng) } else { subhyperspace_bfs(v, &mut rng) };
            let expected = subhyperspace_oracle(&p, &(b.pos_values().to_vec(), b.neg_values().to_vec()));
            let report = is_subhyperspace(&b, v).unwrap();
            assert_eq!(report.verdict, expected);
            assert_eq!(report.witnesses.is_empty(), expected);
        }
        let f = random_soft_set(v.dim(), &["u", "w"], &mut rng);
        let expected = slices(&f).values().all(|s| subhyperspace_oracle(&p, s));
        assert_eq!(is_bfs_hypervector_space(&f, v).unwrap().verdict, expected);
    }
}
