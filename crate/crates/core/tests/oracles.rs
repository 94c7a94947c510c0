mod common;

use actreedy::dad::{self, DadObject};
use actreedy::dao::DaoObject;
use actreedy::ptree::{enumerate_trees, PlanarTree};
use common::{action_maps, dad_object_count, dao_counts};

#[test]
fn dad_object_counts_match_the_stage_simulation() {
    for n in 0..=3 {
        for k in -1..=3 {
            let o = DadObject::get(n, k);
            let expected = dad_object_count(n, k);
            assert_eq!(o.num_objects(), expected, "<{n},{k}>");
            assert_eq!(o.degree(), n as usize + expected, "<{n},{k}>");
        }
    }
}

#[test]
fn dao_color_counts_match_the_stage_simulation() {
    let trees = std::iter::once(PlanarTree::empty()).chain(enumerate_trees(3, 2));
    for s in trees {
        for n in 0..=2 {
            let o = DaoObject::get(n, &s);
            let (colors, generators) = dao_counts(n, &s);
            assert_eq!(o.num_colors(), colors, "<{n},{s}>");
            assert_eq!(o.degree(), n as usize + generators, "<{n},{s}>");
        }
    }
}

#[test]
fn unary_corolla_literal_counts() {
    let s: PlanarTree = "(*)".parse().unwrap();
    assert_eq!(s, PlanarTree::corolla(1));
    assert_eq!(dao_counts(2, &s), (9, 8));
    assert_eq!(dao_counts(2, &PlanarTree::eta()), (4, 3));
}

#[test]
fn small_hom_sets_match_brute_force_action_maps() {
    let objs: Vec<_> = (0..=1).flat_map(|n| (-1..=1).map(move |k| DadObject::get(n, k))).collect();
    for a in &objs {
        for b in &objs {
            let brute = action_maps(&a.to_cat_action(), &b.to_cat_action());
            assert_eq!(dad::hom(a, b).len(), brute, "{} -> {}", a.literal(), b.literal());
        }
    }
}
