mod common;

use std::sync::OnceLock;

use common::*;
use hypersoft::algebra::{check_axioms, AxiomMode, HyperVectorSpace};
use hypersoft::hvs_ops::{scalar_product, soft_extended_sum, soft_sum};
use hypersoft::io::{parse, print, Document};
use hypersoft::lab::{constructive_family, generate_bfshvs, FieldChoice, Strategy};
use hypersoft::soft::{
    and_product, extended_intersection, intersection, is_subset, or_product, restricted_union, union,
    BipolarFuzzySoftSet,
};
use hypersoft::structure::is_bfs_hypervector_space;
use hypersoft::transform::{image, preimage, FuzzySoftFunction};
use hypersoft::Rational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn spaces() -> &'static [HyperVectorSpace] {
    static SPACES: OnceLock<Vec<HyperVectorSpace>> = OnceLock::new();
    SPACES.get_or_init(|| {
        let mut out = vec![HyperVectorSpace::z4_over_z2()];
        for field in [FieldChoice::Z2, FieldChoice::Z3] {
            for st in [Strategy::Total, Strategy::Classical, Strategy::Inflated] {
                out.extend(constructive_family(st, field, 9));
            }
        }
        out
    })
}

/// Strict-mode spaces only (the fixture is compat-only).
fn strict_spaces() -> Vec<&'static HyperVectorSpace> {
    spaces().iter().filter(|v| check_axioms(v, AxiomMode::STRICT).passed()).collect()
}

fn pair(seed: u64, n: usize) -> (BipolarFuzzySoftSet, BipolarFuzzySoftSet) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = ["c", "d", "e"];
    let f = random_soft_set(n, &random_params(&pool, &mut rng), &mut rng);
    let g = random_soft_set(n, &random_params(&pool, &mut rng), &mut rng);
    (f, g)
}

fn subset(f: &BipolarFuzzySoftSet, g: &BipolarFuzzySoftSet) -> bool {
    is_subset(f, g).unwrap().is_ok()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn rational_text_round_trips(n in -1000i64..1000, d in 1i64..1000) {
        let r = Rational::new(n, d);
        prop_assert_eq!(Rational::parse(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn decimal_literals_are_exact(int in 0i64..2, frac in 0u32..1000) {
        let text = format!("{int}.{frac:03}");
        prop_assert_eq!(Rational::parse(&text).unwrap(), Rational::new(int * 1000 + i64::from(frac), 1000));
    }

    #[test]
    fn documents_round_trip(idx in 0usize..64, seed in any::<u64>()) {
        let v = &spaces()[idx % spaces().len()];
        let (f, g) = pair(seed, v.dim());
        let mut doc = Document::default();
        doc.push_hvs("V", v);
        doc.push_bfss("F", &f);
        doc.push_bfss("G", &g);
        let text = print(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(print(&back), text);
    }

    #[test]
    fn lattice_laws(idx in 0usize..64, seed in any::<u64>()) {
        let v = &spaces()[idx % spaces().len()];
        let (f, g) = pair(seed, v.dim());
        let meet = intersection(&f, &g).unwrap();
        prop_assert_eq!(&meet, &intersection(&g, &f).unwrap());
        prop_assert_eq!(&intersection(&f, &f).unwrap(), &f);
        prop_assert!(subset(&f, &f));
        prop_assert!(subset(&meet, &f.restrict(meet.params())));
        let join = union(&f, &g).unwrap();
        prop_assert_eq!(&join, &union(&g, &f).unwrap());
        prop_assert!(subset(&f, &join) && subset(&g, &join));
        prop_assert!(subset(&extended_intersection(&f, &g).unwrap(), &join));
        let rjoin = restricted_union(&f, &g).unwrap();
        prop_assert!(subset(&meet, &rjoin));
        let and = and_product(&f, &g).unwrap();
        let or = or_product(&f, &g).unwrap();
        prop_assert_eq!(and.len(), f.len() * g.len());
        prop_assert_eq!(or.len(), f.len() * g.len());
        prop_assert!(subset(&and, &or));
    }

    #[test]
    fn sum_is_commutative_and_bounded(idx in 0usize..64, seed in any::<u64>()) {
        let v = &spaces()[idx % spaces().len()];
        let (f, g) = pair(seed, v.dim());
        let s = soft_sum(&f, &g, v).unwrap();
        prop_assert_eq!(&s, &soft_sum(&g, &f, v).unwrap());
        prop_assert_eq!(&soft_extended_sum(&f, &g, v).unwrap(), &soft_extended_sum(&g, &f, v).unwrap());
        let grp = v.group();
        for (e, sb) in s.iter() {
            let (fb, gb) = (f.get(e).unwrap(), g.get(e).unwrap());
            for x in 0..v.dim() {
                for y in 0..v.dim() {
                    prop_assert!(sb.pos(grp.add(x, y)) >= fb.pos(x).min(gb.pos(y)));
                    prop_assert!(sb.neg(grp.add(x, y)) <= fb.neg(x).max(gb.neg(y)));
                }
            }
        }
    }

    #[test]
    fn closure_under_sum_and_meet(idx in 0usize..64, seed in any::<u64>()) {
        let vs = strict_spaces();
        let v = vs[idx % vs.len()];
        let mut stream = generate_bfshvs(v, &["c", "d"], seed);
        let (f, g) = (stream.next().unwrap(), stream.next().unwrap());
        for out in [soft_sum(&f, &g, v).unwrap(), intersection(&f, &g).unwrap(), and_product(&f, &g).unwrap()] {
            prop_assert!(is_bfs_hypervector_space(&out, v).unwrap().verdict);
        }
    }

    #[test]
    fn scaling_keeps_structure_on_strongly_right_distributive_spaces(idx in 0usize..64, seed in any::<u64>()) {
        let vs: Vec<_> = strict_spaces()
            .into_iter()
            .filter(|v| check_axioms(v, AxiomMode::STRICT).strongly_right_distributive)
            .collect();
        let v = vs[idx % vs.len()];
        let f = generate_bfshvs(v, &["c"], seed).next().unwrap();
        for a in 0..v.scalars() {
            prop_assert!(is_bfs_hypervector_space(&scalar_product(a, &f, v).unwrap(), v).unwrap().verdict);
        }
    }

    #[test]
    fn identity_map_round_trips(idx in 0usize..64, seed in any::<u64>()) {
        let v = &spaces()[idx % spaces().len()];
        let (f, _) = pair(seed, v.dim());
        let id = FuzzySoftFunction::identity(v.dim(), f.params());
        let img = image(&id, &f).unwrap();
        prop_assert_eq!(&img, &f);
        prop_assert_eq!(&preimage(&id, &img).unwrap(), &f);
    }

    #[test]
    fn image_then_preimage_contains_the_original(idx in 0usize..64, seed in any::<u64>(), phi_seed in any::<u64>()) {
        use rand::Rng;
        let v = &spaces()[idx % spaces().len()];
        let (f, _) = pair(seed, v.dim());
        let mut rng = ChaCha8Rng::seed_from_u64(phi_seed);
        let phi: Vec<usize> = (0..v.dim()).map(|_| rng.gen_range(0..v.dim())).collect();
        let params = f.params().map(|p| (p.to_string(), p.to_uppercase())).collect();
        let t = FuzzySoftFunction::new(phi, v.dim(), params).unwrap();
        let back = preimage(&t, &image(&t, &f).unwrap()).unwrap();
        prop_assert!(subset(&f, &back));
    }
}
