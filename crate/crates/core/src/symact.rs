//! The symmetric extension Δ↻Ω, presented as a crossed group on Δ↻Ω_p.
//!
//! Objects are the symmetrizations Σ⟨n↻S⟩. A morphism Σ⟨n↻S⟩ → Σ⟨m↻R⟩ is a
//! pair of a level map and a map of symmetric operads Ω(S) → ΣO_{m,R}. Since
//! every operation of ΣO_{m,R} is a reordering of a cut with distinct colors,
//! such a map is determined by its colors: a vertex may send its inputs to
//! any ordering of a cut. The group at ⟨n↻S⟩ is the automorphism group of
//! the underlying nonplanar tree of S.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::dad::ActingObject;
use crate::dao::{self, DaoMorphism, DaoObject};
use crate::error::{Error, Result};
use crate::fincat::{permute, FinOperad, OpAction, Operation};
use crate::ordinal;
use crate::ptree::{self, PlanarTree};
use crate::reedyver::{CrossedGroupCandidate, DaoCandidate, ReedyCandidate, Report, VerifyOptions};

/// The action on the symmetrization of ⟨n↻S⟩, with its symmetric table.
///
/// Operations are ordered source tuples that reorder a cut; composition
/// concatenates and the acting category only changes targets.
pub fn symmetrize(o: &DaoObject) -> OpAction {
    let planar = o.to_op_action();
    let mut ops: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut planar_of: Vec<usize> = Vec::new();
    for (g, op) in planar.acted.operations.iter().enumerate() {
        for sigma in ptree::permutations(op.sources.len()) {
            ops.push((op.target, permute(&sigma, &op.sources)));
            planar_of.push(g);
        }
    }
    let index: BTreeMap<&(usize, Vec<usize>), usize> = ops.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let operations: Vec<Operation> = ops
        .iter()
        .map(|(t, s)| {
            let names: Vec<String> = s.iter().map(|&c| o.name(c)).collect();
            Operation { name: format!("{}<-({})", o.name(*t), names.join(",")), sources: s.clone(), target: *t }
        })
        .collect();
    let identity = (0..o.num_colors()).map(|c| index[&(c, vec![c])]).collect();
    let mut by_target: Vec<Vec<usize>> = vec![Vec::new(); o.num_colors()];
    for (i, (t, _)) in ops.iter().enumerate() {
        by_target[*t].push(i);
    }
    let mut gamma = BTreeMap::new();
    for (g, (t, sources)) in ops.iter().enumerate() {
        let mut tuples: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), Vec::new())];
        for &c in sources {
            let mut next = Vec::new();
            for (gs, cat) in &tuples {
                for &i in &by_target[c] {
                    let mut gs = gs.clone();
                    gs.push(i);
                    let mut cat = cat.clone();
                    cat.extend_from_slice(&ops[i].1);
                    next.push((gs, cat));
                }
            }
            tuples = next;
        }
        for (gs, cat) in tuples {
            gamma.insert((g, gs), index[&(*t, cat)]);
        }
    }
    let mut symmetric = BTreeMap::new();
    for (g, (t, sources)) in ops.iter().enumerate() {
        for sigma in ptree::permutations(sources.len()) {
            symmetric.insert((sigma.clone(), g), index[&(*t, permute(&sigma, sources))]);
        }
    }
    let mut action = BTreeMap::new();
    for (&(f, p), &q) in &planar.action {
        let new_target = planar.acted.operations[q].target;
        for (g, (_, sources)) in ops.iter().enumerate().filter(|(g, _)| planar_of[*g] == p) {
            action.insert((f, g), index[&(new_target, sources.clone())]);
        }
    }
    let acted =
        FinOperad { colors: planar.acted.colors.clone(), operations, identity, gamma, symmetric: Some(symmetric) };
    OpAction { acting: planar.acting, acted, moment: planar.moment, action }
}

/// A morphism of Δ↻Ω between symmetrized objects, stored like a planar
/// morphism but validated up to reordering at each vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SymMap(DaoMorphism);

fn is_symmetric_image(src: &DaoObject, tgt: &DaoObject, beta: &[usize]) -> bool {
    src.tree().vertices().all(|v| {
        let mut ins: Vec<usize> = src.tree().inputs(v).unwrap().iter().map(|&i| beta[i]).collect();
        ins.sort_unstable();
        tgt.is_operation(&ptree::TreeOp { target: beta[v], sources: ins })
    })
}

impl SymMap {
    pub fn new(src: Arc<DaoObject>, tgt: Arc<DaoObject>, alpha: Vec<ActingObject>, beta: Vec<usize>) -> Result<Self> {
        // validate everything but the vertex condition through the planar constructor on S with no vertices checked
        if beta.len() != src.num_edges() || beta.iter().any(|&c| c >= tgt.num_colors()) {
            return Err(Error::InvalidMorphism("beta has the wrong shape".into()));
        }
        if !is_symmetric_image(&src, &tgt, &beta) {
            return Err(Error::InvalidMorphism("a vertex has no image operation up to reordering".into()));
        }
        let level_ok = alpha.len() == src.n() as usize + 1
            && alpha.iter().all(|o| tgt.has_acting_object(*o))
            && (alpha.windows(2).all(|w| w[0] == w[1])
                || alpha.iter().all(|o| o.level().is_some()) && alpha.windows(2).all(|w| w[0] <= w[1]));
        if !level_ok {
            return Err(Error::InvalidMorphism("alpha is not a functor into the acting category".into()));
        }
        if let Some(&r) = beta.first() {
            if tgt.moment(r) != alpha[0] {
                return Err(Error::InvalidMorphism("moment of beta(root) differs from alpha(0)".into()));
            }
        }
        Ok(SymMap(DaoMorphism::new_unchecked(src, tgt, alpha, beta)))
    }

    /// The image of a planar morphism.
    pub fn from_planar(f: &DaoMorphism) -> Self {
        SymMap(f.clone())
    }

    pub fn as_raw(&self) -> &DaoMorphism {
        &self.0
    }

    pub fn src(&self) -> &Arc<DaoObject> {
        self.0.src()
    }

    pub fn tgt(&self) -> &Arc<DaoObject> {
        self.0.tgt()
    }

    /// Whether some vertex is sent out of planar order.
    pub fn is_planar(&self) -> bool {
        DaoMorphism::new(self.src().clone(), self.tgt().clone(), self.0.alpha().to_vec(), self.0.beta().to_vec())
            .is_ok()
    }
}

impl fmt::Display for SymMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sym {}", self.0)
    }
}

impl fmt::Debug for SymMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymMap({})", self.0)
    }
}

/// All morphisms Σ`src` → Σ`tgt`, by trying every ordering of every cut at
/// each vertex.
pub fn sym_hom(src: &Arc<DaoObject>, tgt: &Arc<DaoObject>) -> Vec<SymMap> {
    let s = src.tree();
    if s.is_empty() {
        return dao::hom(src, tgt).iter().map(SymMap::from_planar).collect();
    }
    let (n, m) = (src.n() as i32, tgt.n() as i32);
    let level_maps = ordinal::enumerate_maps(n, m);
    let verts: Vec<usize> = s.vertices().collect();
    fn rec(s: &PlanarTree, tgt: &DaoObject, verts: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&v, rest)) = verts.split_first() else {
            out.push(cur.clone());
            return;
        };
        let ins = s.inputs(v).unwrap();
        for cut in tgt.operations_with_arity(cur[v], ins.len()) {
            for sigma in ptree::permutations(ins.len()) {
                for (&i, c) in ins.iter().zip(permute(&sigma, cut)) {
                    cur[i] = c;
                }
                rec(s, tgt, rest, cur, out);
            }
        }
    }
    let mut out = Vec::new();
    for root in 0..tgt.num_colors() {
        let alphas: Vec<Vec<ActingObject>> = match tgt.moment(root) {
            ActingObject::Star(e) => vec![vec![ActingObject::Star(e); n as usize + 1]],
            ActingObject::Level(u) => level_maps
                .iter()
                .filter(|f| f.values()[0] == u)
                .map(|f| f.values().iter().map(|&v| ActingObject::Level(v)).collect())
                .collect(),
        };
        if alphas.is_empty() {
            continue;
        }
        let mut cur = vec![usize::MAX; s.num_edges()];
        cur[0] = root;
        let mut betas = Vec::new();
        rec(s, tgt, &verts, &mut cur, &mut betas);
        for beta in betas {
            for a in &alphas {
                out.push(SymMap(DaoMorphism::new_unchecked(src.clone(), tgt.clone(), a.clone(), beta.clone())));
            }
        }
    }
    out
}

/// `g ∘ f`.
pub fn sym_compose(f: &SymMap, g: &SymMap) -> Result<SymMap> {
    if f.tgt().n() != g.src().n() || f.tgt().tree() != g.src().tree() {
        return Err(Error::Composition(format!("{f} then {g}")));
    }
    Ok(SymMap(dao::Postcompose::symmetric(&g.0).apply(&f.0)))
}

/// The automorphisms of the underlying nonplanar tree of S, as edge
/// permutations, identity first.
pub fn group(o: &DaoObject) -> Vec<Vec<usize>> {
    ptree::automorphisms(o.tree()).perms
}

/// The automorphism `g` of Σ⟨n↻S⟩.
pub fn automorphism(o: &Arc<DaoObject>, g: &[usize]) -> SymMap {
    let alpha = (0..=o.n()).map(ActingObject::Level).collect();
    SymMap(DaoMorphism::new_unchecked(o.clone(), o.clone(), alpha, g.to_vec()))
}

/// `h ∘ g` for planar `h` and `g` in the group at its source.
pub fn embed(h: &DaoMorphism, g: &[usize]) -> SymMap {
    let beta = g.iter().map(|&e| h.beta()[e]).collect();
    SymMap(DaoMorphism::new_unchecked(h.src().clone(), h.tgt().clone(), h.alpha().to_vec(), beta))
}

/// Splits a morphism as a planar morphism after an automorphism of its
/// source: `r = h ∘ g`.
///
/// Walking down from the root, the inputs of each vertex are matched, in
/// planar order, with the inputs of the corresponding vertex sorted by image
/// color. With `canonicalize` off the sorting is skipped and `r` itself is
/// returned as the planar part.
pub fn normalize_with(r: &SymMap, canonicalize: bool) -> Option<(Vec<usize>, DaoMorphism)> {
    let (src, tgt) = (r.src(), r.tgt());
    let s = src.tree();
    let id: Vec<usize> = s.edges().collect();
    if !canonicalize {
        return Some((id, r.0.clone()));
    }
    // sigma = g^{-1}, built so that beta ∘ sigma is planar
    let mut sigma = vec![usize::MAX; s.num_edges()];
    let mut stack: Vec<usize> = s.root().into_iter().collect();
    if let Some(root) = s.root() {
        sigma[root] = root;
    }
    while let Some(w) = stack.pop() {
        let image = sigma[w];
        match (s.inputs(w), s.inputs(image)) {
            (None, None) => {}
            (Some(ins), Some(targets)) if ins.len() == targets.len() => {
                let mut sorted = targets.to_vec();
                sorted.sort_by_key(|&e| r.0.beta()[e]);
                for (&j, &l) in ins.iter().zip(&sorted) {
                    sigma[j] = l;
                    stack.push(j);
                }
            }
            _ => return None,
        }
    }
    let g = {
        let mut inv = vec![0; sigma.len()];
        for (e, &x) in sigma.iter().enumerate() {
            inv[x] = e;
        }
        inv
    };
    if !group(src).contains(&g) {
        return None;
    }
    let beta = sigma.iter().map(|&e| r.0.beta()[e]).collect();
    let h = DaoMorphism::new(src.clone(), tgt.clone(), r.0.alpha().to_vec(), beta).ok()?;
    Some((g, h))
}

pub fn normalize(r: &SymMap) -> Option<(Vec<usize>, DaoMorphism)> {
    normalize_with(r, true)
}

/// `g_*(f)` and `f^*(g)`: the normal form of `g ∘ f`.
pub fn crossed(g: &[usize], f: &DaoMorphism) -> Option<(DaoMorphism, Vec<usize>)> {
    let composite = sym_compose(&SymMap::from_planar(f), &automorphism(f.tgt(), g)).ok()?;
    normalize(&composite).map(|(pulled, pushed)| (pushed, pulled))
}

/// Δ↻Ω on a window of Δ↻Ω_p, as a crossed group candidate.
///
/// `canonicalize: false` and `skew_classifier: true` inject violations: the
/// first skips the reordering step of normalization, the second declares a
/// plus map whose root lands on the last edge of a tree with several edges to
/// be not plus, which no group action respects.
pub struct SymCandidate {
    pub base: DaoCandidate,
    pub canonicalize: bool,
    pub skew_classifier: bool,
}

impl SymCandidate {
    pub fn new(max_n: u32, max_vertices: usize, max_arity: usize) -> Self {
        SymCandidate {
            base: DaoCandidate::new(max_n, max_vertices, max_arity),
            canonicalize: true,
            skew_classifier: false,
        }
    }
}

fn obj(o: &(u32, PlanarTree)) -> Arc<DaoObject> {
    DaoObject::get(o.0, &o.1)
}

impl ReedyCandidate for SymCandidate {
    type Obj = (u32, PlanarTree);
    type Mor = DaoMorphism;

    fn family(&self) -> String {
        let mut name = String::from("dao-symmetric");
        if !self.canonicalize {
            name.push_str(" (no reordering)");
        }
        if self.skew_classifier {
            name.push_str(" (skewed classifier)");
        }
        name
    }
    fn window(&self) -> String {
        self.base.window()
    }
    fn objects(&self) -> Vec<Self::Obj> {
        self.base.objects()
    }
    fn label(&self, o: &Self::Obj) -> String {
        self.base.label(o)
    }
    fn degree(&self, o: &Self::Obj) -> usize {
        self.base.degree(o)
    }
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<DaoMorphism> {
        self.base.hom(a, b)
    }
    fn src(&self, f: &DaoMorphism) -> Self::Obj {
        self.base.src(f)
    }
    fn tgt(&self, f: &DaoMorphism) -> Self::Obj {
        self.base.tgt(f)
    }
    fn compose(&self, f: &DaoMorphism, g: &DaoMorphism) -> DaoMorphism {
        self.base.compose(f, g)
    }
    fn compose_all(&self, fs: &[DaoMorphism], g: &DaoMorphism) -> Vec<DaoMorphism> {
        self.base.compose_all(fs, g)
    }
    fn is_plus(&self, f: &DaoMorphism) -> bool {
        let skewed =
            self.skew_classifier && f.tgt().num_edges() > 1 && f.beta().first() == Some(&(f.tgt().num_edges() - 1));
        f.is_plus() && !skewed
    }
    fn is_minus(&self, f: &DaoMorphism) -> bool {
        self.base.is_minus(f)
    }
    fn is_iso(&self, f: &DaoMorphism) -> bool {
        self.base.is_iso(f)
    }
    fn factorize(&self, f: &DaoMorphism) -> (DaoMorphism, DaoMorphism) {
        self.base.factorize(f)
    }
    fn intermediates(&self, a: &Self::Obj) -> Vec<Self::Obj> {
        self.base.intermediates(a)
    }
    fn pushout(&self, f: &DaoMorphism, g: &DaoMorphism) -> Result<(DaoMorphism, DaoMorphism)> {
        self.base.pushout(f, g)
    }
    fn extra_checks(&self, f: &DaoMorphism) -> Vec<(&'static str, String)> {
        self.base.extra_checks(f)
    }
}

impl CrossedGroupCandidate for SymCandidate {
    type Elem = Vec<usize>;
    type Raw = SymMap;

    fn group(&self, o: &Self::Obj) -> Vec<Vec<usize>> {
        group(&obj(o))
    }
    fn is_unit(&self, g: &Vec<usize>) -> bool {
        g.iter().enumerate().all(|(i, &x)| i == x)
    }
    fn push(&self, g: &Vec<usize>, f: &DaoMorphism) -> Option<DaoMorphism> {
        let composite = sym_compose(&SymMap::from_planar(f), &automorphism(f.tgt(), g)).ok()?;
        normalize_with(&composite, self.canonicalize).map(|(_, h)| h)
    }
    fn pull(&self, f: &DaoMorphism, g: &Vec<usize>) -> Option<Vec<usize>> {
        let composite = sym_compose(&SymMap::from_planar(f), &automorphism(f.tgt(), g)).ok()?;
        normalize_with(&composite, self.canonicalize).map(|(p, _)| p)
    }
    fn multiply(&self, _o: &Self::Obj, a: &Vec<usize>, b: &Vec<usize>) -> Vec<usize> {
        b.iter().map(|&x| a[x]).collect()
    }
    fn total_hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<SymMap> {
        sym_hom(&obj(a), &obj(b))
    }
    fn embed(&self, f: &DaoMorphism, g: &Vec<usize>) -> SymMap {
        embed(f, g)
    }
    fn normalize(&self, r: &SymMap) -> Option<(Vec<usize>, DaoMorphism)> {
        normalize_with(r, self.canonicalize)
    }
    fn total_compose(&self, r: &SymMap, s: &SymMap) -> SymMap {
        sym_compose(r, s).expect("composable")
    }
}

/// The generalized Reedy report for Δ↻Ω over the window `n <= max_n`, trees
/// with at most `max_vertices` vertices of arity at most `max_arity`.
pub fn check_generalized_reedy(
    max_n: u32,
    max_vertices: usize,
    max_arity: usize,
    canonicalize: bool,
    opts: &VerifyOptions,
) -> Report {
    let mut c = SymCandidate::new(max_n, max_vertices, max_arity);
    c.canonicalize = canonicalize;
    crate::reedyver::verify_generalized(&c, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::check_op_action;

    fn tree(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    #[test]
    fn symmetrization_satisfies_the_axioms() {
        for (n, t) in [(0, "(**)"), (1, "(**)"), (1, "(*)"), (0, "((*)*)")] {
            let a = symmetrize(&DaoObject::get(n, &tree(t)));
            let r = check_op_action(&a);
            assert!(r.is_ok(), "{n}:{t}: {r:?}");
            assert!(a.acted.symmetric.is_some());
        }
    }

    #[test]
    fn leaf_swap_normalizes_to_the_swap() {
        let o = DaoObject::get(0, &tree("(**)"));
        let swap = automorphism(&o, &[0, 2, 1]);
        let (g, h) = normalize(&swap).unwrap();
        assert_eq!(g, vec![0, 2, 1]);
        assert!(h.is_identity());
    }

    #[test]
    fn swap_moves_a_leaf_inclusion() {
        let eta = DaoObject::get(0, &PlanarTree::eta());
        let o = DaoObject::get(0, &tree("(**)"));
        let left = DaoMorphism::new(eta, o.clone(), vec![ActingObject::Star(1)], vec![1]).unwrap();
        let (pushed, pulled) = crossed(&[0, 2, 1], &left).unwrap();
        assert_eq!(pushed.beta(), &[2]);
        assert_eq!(pushed.alpha(), &[ActingObject::Star(2)]);
        assert_eq!(pulled, vec![0]);
    }

    #[test]
    fn raw_maps_of_the_corolla() {
        let o = DaoObject::get(0, &tree("(**)"));
        let raw = sym_hom(&o, &o);
        let planar = dao::hom(&o, &o);
        assert_eq!(raw.len(), 2 * planar.len());
        for r in &raw {
            let (g, h) = normalize(r).unwrap();
            assert_eq!(embed(&h, &g), *r);
        }
    }

    #[test]
    fn reordering_a_vertex_with_unlike_inputs() {
        // the root inputs carry a unary vertex and a leaf, so no automorphism
        // can exchange them, yet collapsing the unary vertex lets them swap
        let s = DaoObject::get(0, &tree("((*)*)"));
        let r = DaoObject::get(0, &tree("(**)"));
        let swapped = SymMap::new(s, r, vec![ActingObject::Level(0)], vec![0, 2, 2, 1]).unwrap();
        assert!(!swapped.is_planar());
        assert!(normalize(&swapped).is_none());
    }

    #[test]
    fn skipping_the_reordering_breaks_normal_forms() {
        let r = check_generalized_reedy(0, 1, 2, false, &VerifyOptions { jobs: 1, probe_degree: 0, law_degree: 2 });
        assert!(!r.passed());
    }
}
