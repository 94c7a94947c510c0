use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use actreedy::fincat::check_action_morphism;
use actreedy::fincat::json::{action_to_json, parse_action};
use actreedy::nerve::{cell_of, extend, nerve_cell, restrict};
use actreedy::ordinal::{self, OrdinalMap};
use actreedy::ptree::{self, OmegaPMap, PlanarTree};
use actreedy::symact::{self, embed, normalize, SymMap};
use actreedy::{dad, dao, DadMorphism, DadObject, DaoMorphism, DaoObject};

/// Composable triples, drawn from a fixed pool by index.
fn triples<M: Clone>(pool: &[M], src: impl Fn(&M) -> usize, tgt: impl Fn(&M) -> usize) -> Vec<(M, M, M)> {
    let mut out = Vec::new();
    for f in pool {
        for g in pool.iter().filter(|g| src(g) == tgt(f)) {
            for h in pool.iter().filter(|h| src(h) == tgt(g)) {
                out.push((f.clone(), g.clone(), h.clone()));
            }
        }
    }
    out
}

fn ordinal_pool() -> &'static Vec<OrdinalMap> {
    static POOL: OnceLock<Vec<OrdinalMap>> = OnceLock::new();
    POOL.get_or_init(|| (-1..=3).flat_map(|n| (-1..=3).flat_map(move |m| ordinal::enumerate_maps(n, m))).collect())
}

fn tree_pool() -> &'static Vec<Arc<PlanarTree>> {
    static POOL: OnceLock<Vec<Arc<PlanarTree>>> = OnceLock::new();
    POOL.get_or_init(|| {
        std::iter::once(PlanarTree::empty()).chain(ptree::enumerate_trees(3, 2)).map(Arc::new).collect()
    })
}

fn omega_pool() -> &'static Vec<OmegaPMap> {
    static POOL: OnceLock<Vec<OmegaPMap>> = OnceLock::new();
    POOL.get_or_init(|| {
        let trees = tree_pool();
        trees.iter().flat_map(|s| trees.iter().flat_map(move |t| ptree::hom(s, t))).collect()
    })
}

fn dad_objects() -> Vec<Arc<DadObject>> {
    (0..=2).flat_map(|n| (-1..=2).map(move |k| DadObject::get(n, k))).collect()
}

fn dad_pool() -> &'static Vec<DadMorphism> {
    static POOL: OnceLock<Vec<DadMorphism>> = OnceLock::new();
    POOL.get_or_init(|| {
        let objs = dad_objects();
        objs.iter().flat_map(|a| objs.iter().flat_map(move |b| dad::hom(a, b))).collect()
    })
}

fn dao_objects() -> Vec<Arc<DaoObject>> {
    dao::window_objects(1, 2, 2)
}

fn dao_pool() -> &'static Vec<DaoMorphism> {
    static POOL: OnceLock<Vec<DaoMorphism>> = OnceLock::new();
    POOL.get_or_init(|| {
        let objs = dao_objects();
        objs.iter().flat_map(|a| objs.iter().flat_map(move |b| dao::hom(a, b))).collect()
    })
}

fn sym_pool() -> &'static Vec<SymMap> {
    static POOL: OnceLock<Vec<SymMap>> = OnceLock::new();
    POOL.get_or_init(|| {
        let objs = dao::window_objects(1, 2, 2);
        objs.iter().flat_map(|a| objs.iter().flat_map(move |b| symact::sym_hom(a, b))).collect()
    })
}

fn dad_key(o: &Arc<DadObject>) -> usize {
    (o.n() as usize) * 8 + (o.k() + 1) as usize
}

fn dao_key(o: &Arc<DaoObject>) -> usize {
    Arc::as_ptr(o) as usize
}

fn tree_key(t: &Arc<PlanarTree>) -> usize {
    tree_pool().iter().position(|x| x == t).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ordinal_composition_is_associative(i in any::<prop::sample::Index>()) {
        static T: OnceLock<Vec<(OrdinalMap, OrdinalMap, OrdinalMap)>> = OnceLock::new();
        let t = T.get_or_init(|| triples(ordinal_pool(), |f| (f.src() + 1) as usize, |f| (f.tgt() + 1) as usize));
        let (f, g, h) = i.get(t);
        let left = ordinal::compose(&ordinal::compose(f, g).unwrap(), h).unwrap();
        let right = ordinal::compose(f, &ordinal::compose(g, h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn ordinal_factorization_recomposes(i in any::<prop::sample::Index>()) {
        let f = i.get(ordinal_pool());
        let (e, m) = ordinal::epi_mono_factorize(f);
        prop_assert!(e.is_epi() && m.is_mono());
        prop_assert_eq!(&ordinal::compose(&e, &m).unwrap(), f);
    }

    #[test]
    fn tree_maps_compose_associatively(i in any::<prop::sample::Index>()) {
        static T: OnceLock<Vec<(OmegaPMap, OmegaPMap, OmegaPMap)>> = OnceLock::new();
        let t = T.get_or_init(|| {
            let pool: Vec<OmegaPMap> = omega_pool().iter().step_by(7).cloned().collect();
            triples(&pool, |f| tree_key(f.src()), |f| tree_key(f.tgt()))
        });
        let (f, g, h) = i.get(t);
        let left = ptree::compose(&ptree::compose(f, g).unwrap(), h).unwrap();
        let right = ptree::compose(f, &ptree::compose(g, h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tree_factorization_recomposes(i in any::<prop::sample::Index>()) {
        let f = i.get(omega_pool());
        let (minus, plus) = ptree::factorize(f);
        prop_assert!(minus.is_minus() && plus.is_plus());
        prop_assert_eq!(&ptree::compose(&minus, &plus).unwrap(), f);
    }

    #[test]
    fn dad_composition_is_associative(i in any::<prop::sample::Index>()) {
        static T: OnceLock<Vec<(DadMorphism, DadMorphism, DadMorphism)>> = OnceLock::new();
        let t = T.get_or_init(|| {
            let pool: Vec<DadMorphism> = dad_pool().iter().step_by(11).cloned().collect();
            triples(&pool, |f| dad_key(f.src()), |f| dad_key(f.tgt()))
        });
        let (f, g, h) = i.get(t);
        let left = dad::compose(&dad::compose(f, g).unwrap(), h).unwrap();
        let right = dad::compose(f, &dad::compose(g, h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn dad_identities_are_units(i in any::<prop::sample::Index>()) {
        let f = i.get(dad_pool());
        prop_assert_eq!(&dad::compose(&DadMorphism::identity(f.src()), f).unwrap(), f);
        prop_assert_eq!(&dad::compose(f, &DadMorphism::identity(f.tgt())).unwrap(), f);
    }

    #[test]
    fn dad_factorization_recomposes(i in any::<prop::sample::Index>()) {
        let f = i.get(dad_pool());
        let (minus, plus) = dad::reedy_factorize(f);
        prop_assert!(minus.is_minus() && plus.is_plus());
        prop_assert_eq!(&dad::compose(&minus, &plus).unwrap(), f);
    }

    #[test]
    fn dao_composition_is_associative(i in any::<prop::sample::Index>()) {
        static T: OnceLock<Vec<(DaoMorphism, DaoMorphism, DaoMorphism)>> = OnceLock::new();
        let t = T.get_or_init(|| {
            let pool: Vec<DaoMorphism> = dao_pool().iter().step_by(13).cloned().collect();
            triples(&pool, |f| dao_key(f.src()), |f| dao_key(f.tgt()))
        });
        let (f, g, h) = i.get(t);
        let left = dao::compose(&dao::compose(f, g).unwrap(), h).unwrap();
        let right = dao::compose(f, &dao::compose(g, h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn dao_identities_are_units(i in any::<prop::sample::Index>()) {
        let f = i.get(dao_pool());
        prop_assert_eq!(&dao::compose(&DaoMorphism::identity(f.src()), f).unwrap(), f);
        prop_assert_eq!(&dao::compose(f, &DaoMorphism::identity(f.tgt())).unwrap(), f);
    }

    #[test]
    fn dao_factorization_recomposes(i in any::<prop::sample::Index>()) {
        let f = i.get(dao_pool());
        let (minus, plus) = dao::reedy_factorize(f);
        prop_assert!(minus.is_minus() && plus.is_plus());
        prop_assert_eq!(&dao::compose(&minus, &plus).unwrap(), f);
    }

    #[test]
    fn normal_forms_reassemble_and_are_stable(i in any::<prop::sample::Index>()) {
        let r = i.get(sym_pool());
        if let Some((g, h)) = normalize(r) {
            prop_assert_eq!(&embed(&h, &g), r);
            let again = normalize(&SymMap::from_planar(&h)).unwrap();
            prop_assert!(again.0.iter().enumerate().all(|(i, &x)| i == x));
            prop_assert_eq!(again.1, h);
        }
    }

    #[test]
    fn dad_actions_roundtrip_through_json(n in 0u32..=2, k in -1i32..=2) {
        let a = DadObject::get(n, k).to_cat_action();
        let back = parse_action(&action_to_json(&a)).unwrap();
        prop_assert_eq!(action_to_json(&back), action_to_json(&a));
        prop_assert_eq!(back.acted.num_arrows(), a.acted.num_arrows());
    }

    #[test]
    fn restriction_is_functorial(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        static P: OnceLock<Vec<(DadMorphism, DadMorphism)>> = OnceLock::new();
        let pairs = P.get_or_init(|| {
            let small: Vec<&DadMorphism> = dad_pool().iter().filter(|m| m.src().n() <= 1 && m.tgt().n() <= 1).collect();
            let mut out = Vec::new();
            for f in &small {
                for g in small.iter().filter(|g| dad_key(g.src()) == dad_key(f.tgt())) {
                    out.push(((*f).clone(), (*g).clone()));
                }
            }
            out
        });
        let target = DadObject::get(1, 1).to_cat_action();
        let (f, g) = i.get(pairs);
        let cells = nerve_cell(&target, g.tgt().n(), g.tgt().k());
        prop_assume!(!cells.is_empty());
        let cell = j.get(&cells);
        let stepwise = restrict(&target, &restrict(&target, cell, g).unwrap(), f).unwrap();
        let direct = restrict(&target, cell, &dad::compose(f, g).unwrap()).unwrap();
        prop_assert_eq!(&stepwise, &direct);
        let ext = extend(&target, &direct).unwrap();
        prop_assert!(check_action_morphism(&ext, &f.src().to_cat_action(), &target).is_ok());
        prop_assert_eq!(cell_of(f.src(), &ext), direct);
    }
}
