//! Nerves of finite category actions.
//!
//! An `(n, k)`-cell of A↻B is a string of `n` composable arrows of A and a
//! string of `k` composable arrows of B whose last object has moment equal
//! to the first object of the A-string. Cells are exactly the maps of
//! actions ⟨n↻k⟩ → A↻B; [`extend`] produces that map.

use std::collections::HashMap;

use serde::Serialize;

use crate::dad::{ActingObject, DadMorphism, DadObject};
use crate::error::{Error, Result};
use crate::fincat::{check_action_morphism, check_cat_action, ActionMorphism, CatAction, FinCategory};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    /// Objects `α(0), ..., α(n)` of the acting category.
    pub acting_objects: Vec<usize>,
    /// Arrows `α(i-1 → i)`.
    pub acting_arrows: Vec<usize>,
    /// Objects `β(0), ..., β(k)`; empty when `k = -1`.
    pub acted_objects: Vec<usize>,
    pub acted_arrows: Vec<usize>,
}

impl Cell {
    pub fn n(&self) -> u32 {
        self.acting_arrows.len() as u32
    }

    pub fn k(&self) -> i32 {
        self.acted_objects.len() as i32 - 1
    }

    pub fn describe(&self, a: &CatAction) -> String {
        let names = |c: &FinCategory, start: &[usize], arrows: &[usize]| -> String {
            if arrows.is_empty() {
                return start.first().map(|&o| c.objects[o].clone()).unwrap_or_else(|| "-".into());
            }
            arrows.iter().map(|&f| c.arrows[f].name.clone()).collect::<Vec<_>>().join(" ; ")
        };
        format!(
            "acting [{}] acted [{}]",
            names(&a.acting, &self.acting_objects, &self.acting_arrows),
            names(&a.acted, &self.acted_objects, &self.acted_arrows)
        )
    }
}

fn string_cells(c: &FinCategory, n: i32) -> Vec<(Vec<usize>, Vec<usize>)> {
    if n < 0 {
        return vec![(Vec::new(), Vec::new())];
    }
    c.strings(n as usize)
        .into_iter()
        .map(|s| {
            if n == 0 {
                (vec![c.src(s[0])], Vec::new())
            } else {
                let mut objs = vec![c.src(s[0])];
                objs.extend(s.iter().map(|&f| c.tgt(f)));
                (objs, s)
            }
        })
        .collect()
}

/// All `(n, k)`-cells, acting strings outermost.
pub fn nerve_cell(a: &CatAction, n: u32, k: i32) -> Vec<Cell> {
    let mut out = Vec::new();
    let acted = string_cells(&a.acted, k);
    for (ao, aa) in string_cells(&a.acting, n as i32) {
        for (bo, ba) in &acted {
            if bo.last().is_none_or(|&b| a.moment[b] == ao[0]) {
                out.push(Cell {
                    acting_objects: ao.clone(),
                    acting_arrows: aa.clone(),
                    acted_objects: bo.clone(),
                    acted_arrows: ba.clone(),
                });
            }
        }
    }
    out
}

fn arrow_between(c: &FinCategory, s: usize, t: usize) -> usize {
    (0..c.num_arrows()).find(|&f| c.src(f) == s && c.tgt(f) == t).expect("poset arrow")
}

fn composite(c: &FinCategory, start: usize, arrows: impl IntoIterator<Item = usize>) -> Result<usize> {
    let mut cur = c.identity[start];
    for f in arrows {
        cur = c.then(cur, f).ok_or_else(|| Error::Composition("string does not compose".into()))?;
    }
    Ok(cur)
}

/// The map of actions ⟨n↻k⟩ → A↻B determined by a cell, on every object and
/// arrow of C_{n,k} and D_{n,k} (indexed as in [`DadObject::to_cat_action`]).
pub fn extend(a: &CatAction, cell: &Cell) -> Result<ActionMorphism> {
    let o = DadObject::get(cell.n(), cell.k());
    let src = o.to_cat_action();
    let alpha_arrow = |i: u32, j: u32| {
        composite(&a.acting, cell.acting_objects[i as usize], (i..j).map(|t| cell.acting_arrows[t as usize]))
    };
    let acted_count = o.num_objects();
    let mut obj = vec![usize::MAX; acted_count];
    // image of the arrow parent(w) -> w
    let mut up = vec![usize::MAX; acted_count];
    let chain = |obj: &[usize], up: &[usize], from: usize, to: usize| -> Result<usize> {
        let anc = o.ancestors(to);
        let pos =
            anc.iter().position(|&x| x == from).ok_or_else(|| Error::InvalidMorphism("not an ancestor".into()))?;
        composite(&a.acted, obj[from], anc[pos + 1..].iter().map(|&w| up[w]))
    };
    for w in 0..acted_count {
        match *o.raw_name(w) {
            crate::dad::ActedName::Base(j) => {
                obj[w] = cell.acted_objects[j as usize];
                if j > 0 {
                    up[w] = cell.acted_arrows[j as usize - 1];
                }
            }
            crate::dad::ActedName::Stage { stage, source, target } => {
                let g = chain(&obj, &up, source, target)?;
                let f = alpha_arrow(stage - 1, stage)?;
                let h = a.act(f, g).ok_or_else(|| Error::InvalidMorphism("action undefined on a cell".into()))?;
                obj[w] = a.acted.tgt(h);
                up[w] = h;
            }
        }
    }
    let acted_arrows = (0..src.acted.num_arrows())
        .map(|g| {
            let (s, t) = (src.acted.src(g), src.acted.tgt(g));
            if s == t {
                Ok(a.acted.identity[obj[s]])
            } else {
                chain(&obj, &up, s, t)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let acting_objects: Vec<usize> = o
        .acting_objects()
        .iter()
        .map(|&x| match x {
            ActingObject::Level(i) => cell.acting_objects[i as usize],
            ActingObject::Star(j) => a.moment[cell.acted_objects[j as usize]],
        })
        .collect();
    let levels = |x: usize| o.acting_objects()[x].level();
    let acting_arrows = (0..src.acting.num_arrows())
        .map(|f| {
            let (s, t) = (src.acting.src(f), src.acting.tgt(f));
            match (levels(s), levels(t)) {
                (Some(i), Some(j)) if i < j => alpha_arrow(i, j),
                _ => Ok(a.acting.identity[acting_objects[s]]),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ActionMorphism { acting_objects, acting_arrows, acted_objects: obj, acted_arrows })
}

/// The cell underlying a map of actions out of ⟨n↻k⟩.
pub fn cell_of(o: &DadObject, x: &ActionMorphism) -> Cell {
    let src = o.to_cat_action();
    let level = |i: u32| o.acting_index(ActingObject::Level(i));
    let acting_objects = (0..=o.n()).map(|i| x.acting_objects[level(i)]).collect();
    let acting_arrows =
        (1..=o.n()).map(|i| x.acting_arrows[arrow_between(&src.acting, level(i - 1), level(i))]).collect();
    let k = o.k().max(-1);
    let acted_objects = (0..=k).map(|j| x.acted_objects[j as usize]).collect();
    let acted_arrows = (1..=k).map(|j| x.acted_arrows[arrow_between(&src.acted, j as usize - 1, j as usize)]).collect();
    Cell { acting_objects, acting_arrows, acted_objects, acted_arrows }
}

/// Precomposition of a cell at the target of `m` with `m`.
pub fn restrict(a: &CatAction, cell: &Cell, m: &DadMorphism) -> Result<Cell> {
    if (cell.n(), cell.k()) != (m.tgt().n(), m.tgt().k()) {
        return Err(Error::Composition("cell and morphism do not meet".into()));
    }
    let x = extend(a, cell)?;
    let tgt = m.tgt().to_cat_action();
    let acting_objects: Vec<usize> = m.alpha().iter().map(|&o| x.acting_objects[m.tgt().acting_index(o)]).collect();
    let acting_arrows = m
        .alpha()
        .windows(2)
        .map(|w| {
            let (s, t) = (m.tgt().acting_index(w[0]), m.tgt().acting_index(w[1]));
            x.acting_arrows[arrow_between(&tgt.acting, s, t)]
        })
        .collect();
    let acted_objects: Vec<usize> = m.beta().iter().map(|&b| x.acted_objects[b]).collect();
    let acted_arrows = m.beta().windows(2).map(|w| x.acted_arrows[arrow_between(&tgt.acted, w[0], w[1])]).collect();
    Ok(Cell { acting_objects, acting_arrows, acted_objects, acted_arrows })
}

/// All functors between finite categories, as (object map, arrow map).
pub fn functors(c: &FinCategory, d: &FinCategory) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    let nc = c.num_objects();
    let total = d.num_objects().checked_pow(nc as u32).unwrap_or(0);
    for code in 0..if nc == 0 { 1 } else { total } {
        let mut rest = code;
        let obj: Vec<usize> = (0..nc)
            .map(|_| {
                let v = rest % d.num_objects();
                rest /= d.num_objects();
                v
            })
            .collect();
        let mut arr = vec![usize::MAX; c.num_arrows()];
        assign_arrows(c, d, &obj, 0, &mut arr, &mut out);
    }
    out
}

fn assign_arrows(
    c: &FinCategory,
    d: &FinCategory,
    obj: &[usize],
    f: usize,
    arr: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, Vec<usize>)>,
) {
    if f == c.num_arrows() {
        let ok = c.compose.iter().all(|(&(g, h), &gh)| d.then(arr[g], arr[h]) == Some(arr[gh]));
        if ok {
            out.push((obj.to_vec(), arr.clone()));
        }
        return;
    }
    let (s, t) = (obj[c.src(f)], obj[c.tgt(f)]);
    if c.is_identity(f) {
        arr[f] = d.identity[s];
        assign_arrows(c, d, obj, f + 1, arr, out);
        return;
    }
    for g in (0..d.num_arrows()).filter(|&g| d.src(g) == s && d.tgt(g) == t) {
        arr[f] = g;
        assign_arrows(c, d, obj, f + 1, arr, out);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct C11Report {
    /// Maps of actions ⟨1↻1⟩ → A↻B found by enumerating functor pairs.
    pub action_maps: usize,
    /// Pairs `(f, g)` of arrows with `s(f) = μ(t(g))`.
    pub fibre_product: usize,
    /// The bijection, as `(f, g)` arrow-name pairs in enumeration order.
    pub pairs: Vec<(String, String)>,
    pub bijective: bool,
}

/// Compares the maps of actions ⟨1↻1⟩ → A↻B, enumerated as raw functor
/// pairs, with pairs of arrows in `A_1 ×_{s,μ} B_1`.
pub fn check_c11_bijection(a: &CatAction) -> Result<C11Report> {
    let laws = check_cat_action(a);
    if !laws.is_ok() {
        return Err(Error::InvalidAction(laws.violations.first().map(|v| format!("{v:?}")).unwrap_or_default()));
    }
    let o = DadObject::get(1, 1);
    let src = o.to_cat_action();
    let acting = functors(&src.acting, &a.acting);
    let acted = functors(&src.acted, &a.acted);
    let mut maps = Vec::new();
    for (ao, aa) in &acting {
        for (bo, ba) in &acted {
            let x = ActionMorphism {
                acting_objects: ao.clone(),
                acting_arrows: aa.clone(),
                acted_objects: bo.clone(),
                acted_arrows: ba.clone(),
            };
            if check_action_morphism(&x, &src, a).is_ok() {
                maps.push(x);
            }
        }
    }
    let fibre: Vec<(usize, usize)> = (0..a.acting.num_arrows())
        .flat_map(|f| (0..a.acted.num_arrows()).map(move |g| (f, g)))
        .filter(|&(f, g)| a.acting.src(f) == a.moment[a.acted.tgt(g)])
        .collect();
    let mut hit: HashMap<(usize, usize), usize> = HashMap::new();
    let mut pairs = Vec::new();
    let mut bijective = true;
    for x in &maps {
        let cell = cell_of(&o, x);
        let key = (cell.acting_arrows[0], cell.acted_arrows[0]);
        *hit.entry(key).or_default() += 1;
        pairs.push((a.acting.arrows[key.0].name.clone(), a.acted.arrows[key.1].name.clone()));
        if extend(a, &cell).as_ref() != Ok(x) {
            bijective = false;
        }
    }
    bijective &= maps.len() == fibre.len() && fibre.iter().all(|p| hit.get(p) == Some(&1));
    Ok(C11Report { action_maps: maps.len(), fibre_product: fibre.len(), pairs, bijective })
}

/// `[1]` acting on itself by composition.
pub fn interval_on_itself() -> CatAction {
    CatAction::self_composition(FinCategory::ordinal(1))
}

/// The group Z/2 acting on itself by conjugation.
pub fn z2_conjugation() -> CatAction {
    CatAction::conjugation(FinCategory::cyclic_group(2))
}

/// The terminal category acting trivially on the terminal category.
pub fn trivial_action() -> CatAction {
    CatAction::trivial(FinCategory::discrete(1), FinCategory::discrete(1), 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dad;

    #[test]
    fn cell_counts() {
        assert_eq!(nerve_cell(&trivial_action(), 2, 3).len(), 1);
        assert_eq!(nerve_cell(&interval_on_itself(), 1, 1).len(), 4);
        assert_eq!(nerve_cell(&z2_conjugation(), 1, 1).len(), 4);
    }

    #[test]
    fn c11_examples() {
        for (a, expected) in [(interval_on_itself(), 4), (z2_conjugation(), 4), (trivial_action(), 1)] {
            let r = check_c11_bijection(&a).unwrap();
            assert_eq!((r.action_maps, r.fibre_product), (expected, expected));
            assert!(r.bijective);
        }
    }

    #[test]
    fn cells_in_a_representable_are_morphisms() {
        // cells of ⟨n↻k⟩ viewed as a finite action count its incoming maps
        for (n, k) in [(1, 1), (1, 0), (0, 2), (2, 1)] {
            let target = DadObject::get(n, k);
            let action = target.to_cat_action();
            for (n2, k2) in [(0, -1), (0, 0), (1, 0), (0, 1), (1, 1), (2, 0)] {
                let cells = nerve_cell(&action, n2, k2).len();
                let homs = dad::hom(&DadObject::get(n2, k2), &target).len();
                assert_eq!(cells, homs, "{n2}:{k2} into {n}:{k}");
            }
        }
    }

    #[test]
    fn extension_is_a_map_of_actions() {
        let a = interval_on_itself();
        for (n, k) in [(0, 0), (1, 1), (2, 1), (1, 2), (2, -1)] {
            let src = DadObject::get(n, k).to_cat_action();
            for cell in nerve_cell(&a, n, k) {
                let x = extend(&a, &cell).unwrap();
                assert!(check_action_morphism(&x, &src, &a).is_ok(), "{cell:?}");
                assert_eq!(cell_of(&DadObject::get(n, k), &x), cell);
            }
        }
    }

    #[test]
    fn restriction_is_functorial() {
        let a = z2_conjugation();
        let b = interval_on_itself();
        let objs: Vec<_> = [(0, 0), (1, 0), (0, 1), (1, 1)].iter().map(|&(n, k)| DadObject::get(n, k)).collect();
        for act in [&a, &b] {
            for x in &objs {
                for y in &objs {
                    for z in &objs {
                        for m1 in dad::hom(y, z) {
                            for m2 in dad::hom(x, y) {
                                let both = dad::compose(&m2, &m1).unwrap();
                                for cell in nerve_cell(act, z.n(), z.k()) {
                                    let step = restrict(act, &restrict(act, &cell, &m1).unwrap(), &m2).unwrap();
                                    assert_eq!(step, restrict(act, &cell, &both).unwrap());
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_along_identity_and_degeneracy() {
        let a = interval_on_itself();
        let o = DadObject::get(1, 1);
        for cell in nerve_cell(&a, 1, 1) {
            assert_eq!(restrict(&a, &cell, &DadMorphism::identity(&o)).unwrap(), cell);
        }
        // ⟨1↻0⟩ → ⟨0↻0⟩ collapsing the level string inserts an identity
        let s = DadObject::get(0, 0);
        let t = DadObject::get(1, 0);
        let degeneracy = dad::hom(&t, &s).into_iter().find(|m| m.is_minus()).unwrap();
        for cell in nerve_cell(&a, 0, 0) {
            let r = restrict(&a, &cell, &degeneracy).unwrap();
            assert!(a.acting.is_identity(r.acting_arrows[0]));
        }
    }
}
