//! Exhaustive search over small categories and action tables.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{check_cat_action, check_category_axioms, Arrow, CatAction, FinCategory};

/// Every lawful category with at most `max_objects` objects and at most
/// `max_arrows` arrows (identities included), up to the order in which
/// non-identity arrows are listed.
pub fn small_categories(max_objects: usize, max_arrows: usize) -> Vec<FinCategory> {
    let mut out = Vec::new();
    for n in 0..=max_objects {
        if n > max_arrows {
            break;
        }
        let homs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        for extra in 0..=(max_arrows - n) {
            for placement in multisets(homs.len(), extra) {
                let objects: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
                let mut arrows: Vec<Arrow> =
                    (0..n).map(|i| Arrow { name: format!("id_o{i}"), src: i, tgt: i }).collect();
                for (j, &h) in placement.iter().enumerate() {
                    let (s, t) = homs[h];
                    arrows.push(Arrow { name: format!("a{j}"), src: s, tgt: t });
                }
                let identity: Vec<usize> = (0..n).collect();
                let mut base = BTreeMap::new();
                for (i, a) in arrows.iter().enumerate() {
                    base.insert((identity[a.src], i), i);
                    base.insert((i, identity[a.tgt]), i);
                }
                let cat = FinCategory { objects, arrows, identity, compose: base };
                let pairs: Vec<(usize, usize)> = (n..cat.num_arrows())
                    .flat_map(|f| (n..cat.num_arrows()).map(move |g| (f, g)))
                    .filter(|&(f, g)| cat.tgt(f) == cat.src(g))
                    .collect();
                fill_tables(&cat, &pairs, 0, &mut cat.clone(), &mut out);
            }
        }
    }
    out
}

fn multisets(kinds: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(kinds: usize, size: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for k in lo..kinds {
            cur.push(k);
            rec(kinds, size, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if kinds > 0 || size == 0 {
        rec(kinds, size, 0, &mut Vec::new(), &mut out);
    }
    out
}

fn fill_tables(
    proto: &FinCategory,
    pairs: &[(usize, usize)],
    i: usize,
    cur: &mut FinCategory,
    out: &mut Vec<FinCategory>,
) {
    if i == pairs.len() {
        if check_category_axioms(cur).is_ok() {
            out.push(cur.clone());
        }
        return;
    }
    let (f, g) = pairs[i];
    for h in 0..proto.num_arrows() {
        if proto.src(h) == proto.src(f) && proto.tgt(h) == proto.tgt(g) {
            cur.compose.insert((f, g), h);
            fill_tables(proto, pairs, i + 1, cur, out);
        }
    }
    cur.compose.remove(&(f, g));
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialActionReport {
    pub acting_categories: usize,
    pub discrete_sizes: Vec<usize>,
    /// Complete action tables reached by the search.
    pub tables_examined: usize,
    /// Tables satisfying every axiom.
    pub lawful: usize,
    /// Lawful tables in which some arrow acts non-identically.
    pub nontrivial: usize,
}

/// Searches every action table of each category in `acting` on each discrete
/// category with at most `max_discrete` objects, keeping the lawful ones and
/// counting those that are not trivial.
///
/// Partial tables are abandoned as soon as a single entry violates an axiom
/// that only involves that entry, so the search is complete.
pub fn search_actions_on_discrete(acting: &[FinCategory], max_discrete: usize) -> TrivialActionReport {
    let mut report = TrivialActionReport {
        acting_categories: acting.len(),
        discrete_sizes: (0..=max_discrete).collect(),
        tables_examined: 0,
        lawful: 0,
        nontrivial: 0,
    };
    for c in acting {
        for q in 0..=max_discrete {
            let d = FinCategory::discrete(q);
            let mut moment = vec![0usize; q];
            let total = c.num_objects().pow(q as u32);
            if c.num_objects() == 0 && q > 0 {
                continue;
            }
            for code in 0..total.max(1) {
                let mut x = code;
                for m in moment.iter_mut() {
                    *m = x % c.num_objects().max(1);
                    x /= c.num_objects().max(1);
                }
                let entries: Vec<(usize, usize)> = (0..c.num_arrows())
                    .flat_map(|f| (0..q).map(move |a| (f, a)))
                    .filter(|&(f, a)| c.src(f) == moment[a])
                    .collect();
                let mut act = CatAction {
                    acting: c.clone(),
                    acted: d.clone(),
                    moment: moment.clone(),
                    arrow_moment: BTreeMap::new(),
                    action: BTreeMap::new(),
                };
                search_tables(&mut act, &entries, 0, &mut report);
            }
        }
    }
    report
}

fn search_tables(act: &mut CatAction, entries: &[(usize, usize)], i: usize, report: &mut TrivialActionReport) {
    if i == entries.len() {
        report.tables_examined += 1;
        if check_cat_action(act).is_ok() {
            report.lawful += 1;
            if act.action.iter().any(|(&(_, g), &r)| r != g) {
                report.nontrivial += 1;
            }
        }
        return;
    }
    let (f, a) = entries[i];
    for r in 0..act.acted.num_arrows() {
        let local_ok = act.moment[act.acted.tgt(r)] == act.acting.tgt(f)
            && act.acted.src(r) == act.acted.src(a)
            && (!act.acting.is_identity(f) || r == a);
        if local_ok {
            act.action.insert((f, a), r);
            search_tables(act, entries, i + 1, report);
        }
    }
    act.action.remove(&(f, a));
}
