//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line. Run with `cargo test --test acceptance -- --nocapture`.

use std::sync::Arc;
use std::time::{Duration, Instant};

use actreedy::dad::DadObject;
use actreedy::dao::DaoObject;
use actreedy::fincat::search::{search_actions_on_discrete, small_categories};
use actreedy::nerve::{check_c11_bijection, interval_on_itself, trivial_action, z2_conjugation};
use actreedy::ptree::{self, OmegaPMap, PlanarTree};
use actreedy::reedyver::{
    verify_elegance, verify_reedy, DadCandidate, DaoCandidate, DeltaCandidate, OmegaCandidate, ReedyCandidate, Report,
    VerifyOptions,
};
use actreedy::symact::check_generalized_reedy;

mod common;
use common::{action_maps, dad_object_count, dao_counts};

fn line(n: u32, title: &str, pass: bool, detail: &str) {
    println!("criterion {n} [{title}]: {} {detail}", if pass { "PASS" } else { "FAIL" });
}

fn summary(r: &Report) -> String {
    let mut s = format!("({})", r.window);
    if let Some(w) = r.minimal_witness() {
        s.push_str(&format!("; {} failures, smallest [{}] {}", r.total_failures(), w.kind, w.detail));
    }
    s
}

fn tree(s: &str) -> PlanarTree {
    s.parse().unwrap()
}

#[test]
fn criterion_1_strict_reedy_dad() {
    let start = Instant::now();
    let r = verify_reedy(&DadCandidate { max_n: 3, max_k: 3 }, &VerifyOptions::default());
    let elapsed = start.elapsed();
    let pass =
        r.passed() && elapsed <= Duration::from_secs(300) && r.counts["unique factorizations"] == r.counts["morphisms"];
    line(
        1,
        "strict Reedy, dad",
        pass,
        &format!("{} morphisms in {:.1?} {}", r.counts["morphisms"], elapsed, summary(&r)),
    );
    assert!(pass, "{r}");
}

#[test]
fn criterion_2_strict_reedy_dao() {
    let start = Instant::now();
    let c = DaoCandidate::new(2, 3, 2);
    let objs = c.objects();
    assert!(objs.iter().any(|o| o.1.is_empty()) && objs.iter().any(|o| o.1 == PlanarTree::eta()));
    let r = verify_reedy(&c, &VerifyOptions::default());
    let elapsed = start.elapsed();
    let pass = r.passed() && elapsed <= Duration::from_secs(600);
    line(
        2,
        "strict Reedy, dao",
        pass,
        &format!("{} morphisms in {:.1?} {}", r.counts["morphisms"], elapsed, summary(&r)),
    );
    assert!(pass, "{r}");
}

#[test]
fn criterion_3_elegance() {
    let o = VerifyOptions::default();
    let reports = [
        verify_elegance(&DeltaCandidate { max_n: 4, augmented: true }, &o),
        verify_elegance(&OmegaCandidate { max_vertices: 3, max_arity: 2, broken_minus: false }, &o),
        verify_elegance(&DadCandidate { max_n: 3, max_k: 3 }, &o),
        verify_elegance(&DaoCandidate::new(2, 3, 2), &o),
    ];
    let pass = reports.iter().all(|r| r.passed() && r.counts["probe evaluations"] > 0);
    let detail: Vec<String> = reports
        .iter()
        .map(|r| {
            format!(
                "{}: {} spans x {} probes{}",
                r.family,
                r.counts["spans"],
                r.counts["probe objects"],
                if r.passed() { "" } else { " FAILED" }
            )
        })
        .collect();
    line(3, "elegance, probe degree <= 10", pass, &detail.join("; "));
    for r in &reports {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn criterion_4_generalized_reedy_symmetric() {
    let bin = tree("(**)");
    assert_eq!(ptree::automorphisms(&bin).order(), 2);
    let r = check_generalized_reedy(1, 3, 2, true, &VerifyOptions::default());
    let conditions =
        ["group action does not preserve the class", "nontrivial element fixes a minus map", "normal form not unique"];
    let held: Vec<&str> = conditions.iter().copied().filter(|k| !r.failures.contains_key(*k)).collect();
    line(
        4,
        "generalized Reedy, dao-symmetric",
        r.passed(),
        &format!(
            "{} total morphisms, {} of 3 conditions clean {}",
            r.counts["total morphisms"],
            held.len(),
            summary(&r)
        ),
    );
    assert!(r.passed(), "{r}");
}

#[test]
fn criterion_5_derived_counts() {
    let d12 = DadObject::get(1, 2);
    let d22 = DadObject::get(2, 2);
    let o2eta = DaoObject::get(2, &PlanarTree::eta());
    let hom01 = actreedy::dad::hom(&DadObject::get(0, 1), &DadObject::get(0, 1)).len();
    let values = [
        ("|Ob D_{1,2}|", d12.num_objects(), dad_object_count(1, 2), 6),
        ("|Ob D_{2,2}|", d22.num_objects(), dad_object_count(2, 2), 15),
        ("d<2,2>", d22.degree(), 2 + dad_object_count(2, 2), 17),
        ("|Col O_{2,eta}|", o2eta.num_colors(), dao_counts(2, &PlanarTree::eta()).0, 4),
        ("d<2,eta>", o2eta.degree(), 2 + dao_counts(2, &PlanarTree::eta()).1, 5),
        (
            "|Hom(<0,1>,<0,1>)|",
            hom01,
            action_maps(&DadObject::get(0, 1).to_cat_action(), &DadObject::get(0, 1).to_cat_action()),
            3,
        ),
    ];
    let pass = values.iter().all(|&(_, lib, oracle, expected)| lib == expected && oracle == expected);
    let detail: Vec<String> =
        values.iter().map(|(name, lib, oracle, _)| format!("{name}={lib} (oracle {oracle})")).collect();
    line(5, "derived counts", pass, &detail.join(", "));
    assert!(pass);
}

#[test]
fn criterion_6_fundamental_example() {
    let cases = [
        ("[1] on itself", interval_on_itself(), 4),
        ("Z/2 conjugation", z2_conjugation(), 4),
        ("trivial", trivial_action(), 1),
    ];
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, a, expected) in cases {
        let r = check_c11_bijection(&a).unwrap();
        pass &= r.bijective && r.action_maps == expected && r.fibre_product == expected;
        detail.push(format!("{name}: {}={}", r.action_maps, r.fibre_product));
    }
    line(6, "maps out of <1,1>", pass, &detail.join(", "));
    assert!(pass);
}

#[test]
fn criterion_7_no_actions_on_discrete() {
    let cats = small_categories(2, 4);
    let r = search_actions_on_discrete(&cats, 3);
    let pass = r.nontrivial == 0 && r.lawful > 0;
    line(
        7,
        "actions on discrete categories",
        pass,
        &format!(
            "{} acting categories, {} tables, {} lawful, {} nontrivial",
            r.acting_categories, r.tables_examined, r.lawful, r.nontrivial
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_8_edge_surjective_is_not_minus() {
    let s = Arc::new(tree("(*)"));
    let t = Arc::new(tree("(())"));
    let f = OmegaPMap::new(s.clone(), t.clone(), vec![0, 1]).unwrap();
    let (ds, dt) = (ptree::degree(&s), ptree::degree(&t));
    let pass = f.is_surjective() && !f.is_minus() && ds < dt;
    line(
        8,
        "edge-surjective map",
        pass,
        &format!("surjective={}, minus={}, d(src)={ds} < d(tgt)={dt}", f.is_surjective(), f.is_minus()),
    );
    assert!(pass);
}

#[test]
fn criterion_9_determinism() {
    let run = |jobs| {
        let o = VerifyOptions { jobs, ..VerifyOptions::default() };
        let mut s = verify_reedy(&DadCandidate { max_n: 2, max_k: 2 }, &o).to_json();
        s.push_str(&verify_reedy(&OmegaCandidate { max_vertices: 2, max_arity: 2, broken_minus: true }, &o).to_json());
        s.push_str(&verify_elegance(&DaoCandidate::new(1, 2, 2), &o).to_json());
        s
    };
    let first = run(1);
    let second = run(1);
    let threaded = run(3);
    let pass = first == second && first == threaded;
    line(9, "determinism", pass, &format!("{} bytes, sequential and threaded runs identical: {pass}", first.len()));
    assert!(pass);
}
