//! The category Δ↻Ω_p: formal actions ⟨n↻S⟩ of `[n]` on the free planar
//! operad Ω_p(S), and the maps between them.
//!
//! Every color of O_{n,S} is the target of at most one generating operation,
//! so an operation is determined by its target and the ordered cut through the
//! expansion tree above it. Operations are stored as [`TreeOp`] values.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::cache::BuildOnce;
use crate::dad::ActingObject;
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinOperad, OpAction, Operation};
use crate::ordinal::{self, OrdinalMap};
use crate::ptree::{self, OmegaPMap, PlanarTree, Shape, TreeOp};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ColorName {
    Edge(usize),
    /// The color `(stage, op)` added for an operation of moment `stage - 1`.
    Stage {
        stage: u32,
        op: TreeOp,
    },
}

#[derive(Debug, Clone)]
pub struct DaoObject {
    n: u32,
    tree: Arc<PlanarTree>,
    moment: Vec<ActingObject>,
    /// Sources of the unique generator with this target, if any.
    gen_sources: Vec<Option<Vec<usize>>>,
    names: Vec<ColorName>,
    /// Cuts of every operation with this target, identity first.
    ops: Vec<Vec<Vec<usize>>>,
    ops_by_arity: Vec<BTreeMap<usize, Vec<Vec<usize>>>>,
    step: HashMap<TreeOp, usize>,
}

fn registry() -> &'static BuildOnce<(u32, PlanarTree), DaoObject> {
    static R: OnceLock<BuildOnce<(u32, PlanarTree), DaoObject>> = OnceLock::new();
    R.get_or_init(BuildOnce::new)
}

impl DaoObject {
    /// The shared instance of ⟨n↻S⟩.
    pub fn get(n: u32, tree: &PlanarTree) -> Arc<DaoObject> {
        registry().get_or_build(&(n, tree.clone()), || DaoObject::build(n, tree.clone()))
    }

    pub fn build(n: u32, tree: PlanarTree) -> DaoObject {
        let mut o = DaoObject {
            n,
            tree: Arc::new(tree),
            moment: Vec::new(),
            gen_sources: Vec::new(),
            names: Vec::new(),
            ops: Vec::new(),
            ops_by_arity: Vec::new(),
            step: HashMap::new(),
        };
        let t = o.tree.clone();
        for e in t.edges() {
            let m = if e == 0 { ActingObject::Level(0) } else { ActingObject::Star(e as u32) };
            o.moment.push(m);
            o.gen_sources.push(t.inputs(e).map(<[usize]>::to_vec));
            o.names.push(ColorName::Edge(e));
        }
        // Inputs of an edge come later in preorder, so fill cuts from the top down.
        o.ops = vec![Vec::new(); t.num_edges()];
        for e in t.edges().rev() {
            o.ops[e] = o.expand(e);
        }
        for i in 1..=n {
            let tops: Vec<usize> = (0..o.num_colors()).filter(|&c| o.moment[c] == ActingObject::Level(i - 1)).collect();
            for c in tops {
                for cut in o.ops[c].clone() {
                    let op = TreeOp { target: c, sources: cut.clone() };
                    let new = o.num_colors();
                    o.moment.push(ActingObject::Level(i));
                    o.gen_sources.push(Some(cut));
                    o.names.push(ColorName::Stage { stage: i, op: op.clone() });
                    o.ops.push(Vec::new());
                    o.ops[new] = o.expand(new);
                    o.step.insert(op, new);
                }
            }
        }
        o.ops_by_arity = o
            .ops
            .iter()
            .map(|cuts| {
                let mut m: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
                for c in cuts {
                    m.entry(c.len()).or_default().push(c.clone());
                }
                m
            })
            .collect();
        o
    }

    /// Cuts with target `c`, assuming those of its generator sources are known.
    fn expand(&self, c: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![c]];
        if let Some(ins) = &self.gen_sources[c] {
            let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
            for &i in ins {
                let mut next = Vec::with_capacity(acc.len() * self.ops[i].len());
                for a in &acc {
                    for b in &self.ops[i] {
                        let mut v = a.clone();
                        v.extend_from_slice(b);
                        next.push(v);
                    }
                }
                acc = next;
            }
            out.extend(acc);
        }
        out
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn tree(&self) -> &Arc<PlanarTree> {
        &self.tree
    }

    pub fn num_colors(&self) -> usize {
        self.moment.len()
    }

    pub fn num_edges(&self) -> usize {
        self.tree.num_edges()
    }

    pub fn moment(&self, c: usize) -> ActingObject {
        self.moment[c]
    }

    pub fn generator_sources(&self, c: usize) -> Option<&[usize]> {
        self.gen_sources[c].as_deref()
    }

    pub fn color_name(&self, c: usize) -> &ColorName {
        &self.names[c]
    }

    /// Whether `c` is a leaf of S (the colors without a generator).
    pub fn is_leaf(&self, c: usize) -> bool {
        c < self.num_edges() && self.tree.is_leaf(c)
    }

    /// The generating operations: the vertices of S followed by one
    /// `p_{i-1,i}•h` per stage color.
    pub fn generators(&self) -> Vec<TreeOp> {
        (0..self.num_colors())
            .filter_map(|c| self.gen_sources[c].as_ref().map(|s| TreeOp { target: c, sources: s.clone() }))
            .collect()
    }

    pub fn num_generators(&self) -> usize {
        self.gen_sources.iter().filter(|g| g.is_some()).count()
    }

    pub fn degree(&self) -> usize {
        self.n as usize + self.num_generators()
    }

    pub fn num_stars(&self) -> u32 {
        self.num_edges().saturating_sub(1) as u32
    }

    /// Acting objects in the order `*_e` (non-root edges in preorder), then `0, ..., n`.
    pub fn acting_objects(&self) -> Vec<ActingObject> {
        (1..=self.num_stars()).map(ActingObject::Star).chain((0..=self.n).map(ActingObject::Level)).collect()
    }

    pub fn acting_index(&self, o: ActingObject) -> usize {
        match o {
            ActingObject::Star(e) => e as usize - 1,
            ActingObject::Level(i) => (self.num_stars() + i) as usize,
        }
    }

    pub fn has_acting_object(&self, o: ActingObject) -> bool {
        match o {
            ActingObject::Star(e) => e >= 1 && e <= self.num_stars(),
            ActingObject::Level(i) => i <= self.n,
        }
    }

    /// Cuts of all operations with target `c`, identity first.
    pub fn operations_at(&self, c: usize) -> &[Vec<usize>] {
        &self.ops[c]
    }

    pub fn operations_with_arity(&self, c: usize, arity: usize) -> &[Vec<usize>] {
        self.ops_by_arity[c].get(&arity).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn operations(&self) -> Vec<TreeOp> {
        (0..self.num_colors())
            .flat_map(|c| self.ops[c].iter().map(move |s| TreeOp { target: c, sources: s.clone() }))
            .collect()
    }

    pub fn is_operation(&self, op: &TreeOp) -> bool {
        op.target < self.num_colors() && self.ops[op.target].contains(&op.sources)
    }

    /// Whether `a` is an input of some nontrivial operation with target `c`.
    pub fn lies_over(&self, a: usize, c: usize) -> bool {
        match &self.gen_sources[c] {
            None => false,
            Some(ins) => ins.iter().any(|&i| i == a || self.lies_over(a, i)),
        }
    }

    /// `p_{u,v} • op` for an operation of moment `u`.
    pub fn act(&self, u: u32, v: u32, op: &TreeOp) -> Option<TreeOp> {
        if self.moment[op.target] != ActingObject::Level(u) || v < u {
            return None;
        }
        let mut cur = op.clone();
        for _ in u..v {
            cur = TreeOp { target: *self.step.get(&cur)?, sources: cur.sources };
        }
        Some(cur)
    }

    pub fn name(&self, c: usize) -> String {
        match &self.names[c] {
            ColorName::Edge(e) => format!("e{e}"),
            ColorName::Stage { stage, op } => format!("({stage},{})", self.op_name(op)),
        }
    }

    pub fn op_name(&self, op: &TreeOp) -> String {
        if op.is_identity() {
            return format!("id_{}", self.name(op.target));
        }
        let s: Vec<String> = op.sources.iter().map(|&c| self.name(c)).collect();
        format!("{}<-[{}]", self.name(op.target), s.join(","))
    }

    pub fn literal(&self) -> String {
        format!("{}:{}", self.n, self.tree)
    }

    /// The expansion tree of `c`: colors lying over `c` as edges and their
    /// generators as vertices, with the color of each edge in preorder.
    pub fn extract_tree_over(&self, c: usize) -> (PlanarTree, Vec<usize>) {
        fn rec(o: &DaoObject, c: usize, colors: &mut Vec<usize>) -> Shape {
            colors.push(c);
            match &o.gen_sources[c] {
                None => Shape::Leaf,
                Some(ins) => Shape::Vertex(ins.iter().map(|&i| rec(o, i, colors)).collect()),
            }
        }
        let mut colors = Vec::new();
        let shape = rec(self, c, &mut colors);
        (PlanarTree::from_shape(&shape), colors)
    }

    /// Graphviz rendering of colors (with moments) and generating operations.
    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph \"O_{{{},{}}}\" {{\n  rankdir=BT;\n", self.n, self.tree);
        for c in 0..self.num_colors() {
            s.push_str(&format!("  c{c} [label=\"{}\\nμ={}\"];\n", self.name(c), self.moment[c]));
        }
        for (g, op) in self.generators().iter().enumerate() {
            s.push_str(&format!("  g{g} [shape=point];\n  g{g} -> c{};\n", op.target));
            for &i in &op.sources {
                s.push_str(&format!("  c{i} -> g{g} [arrowhead=none];\n"));
            }
        }
        s.push_str("}\n");
        s
    }

    /// The acting category C_{n,S} as an explicit finite category.
    pub fn acting_category(&self) -> FinCategory {
        let objs = self.acting_objects();
        let names: Vec<String> = objs.iter().map(|o| o.to_string()).collect();
        let mut arrows = Vec::new();
        let mut index = BTreeMap::new();
        for i in 0..=self.n {
            for j in i + 1..=self.n {
                index.insert((i, j), arrows.len());
                let (a, b) = (self.acting_index(ActingObject::Level(i)), self.acting_index(ActingObject::Level(j)));
                arrows.push((format!("p{i},{j}"), a, b));
            }
        }
        let mut table = Vec::new();
        for (&(i, j), &a) in &index {
            for (&(j2, k), &b) in &index {
                if j == j2 {
                    table.push((a, b, index[&(i, k)]));
                }
            }
        }
        FinCategory::from_generators(names, arrows, &table)
    }

    /// ⟨n↻S⟩ as an explicit finite action of C_{n,S} on O_{n,S}.
    pub fn to_op_action(&self) -> OpAction {
        let acting = self.acting_category();
        let ops = self.operations();
        let index: HashMap<&TreeOp, usize> = ops.iter().enumerate().map(|(i, o)| (o, i)).collect();
        let operations = ops
            .iter()
            .map(|o| Operation { name: self.op_name(o), sources: o.sources.clone(), target: o.target })
            .collect();
        let identity = (0..self.num_colors()).map(|c| index[&TreeOp { target: c, sources: vec![c] }]).collect();
        let mut gamma = BTreeMap::new();
        for (g, op) in ops.iter().enumerate() {
            let mut tuples: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), Vec::new())];
            for &c in &op.sources {
                let mut next = Vec::new();
                for (gs, cut) in &tuples {
                    for sub in &self.ops[c] {
                        let mut gs = gs.clone();
                        gs.push(index[&TreeOp { target: c, sources: sub.clone() }]);
                        let mut cut = cut.clone();
                        cut.extend_from_slice(sub);
                        next.push((gs, cut));
                    }
                }
                tuples = next;
            }
            for (gs, cut) in tuples {
                gamma.insert((g, gs), index[&TreeOp { target: op.target, sources: cut }]);
            }
        }
        let acted = FinOperad {
            colors: (0..self.num_colors()).map(|c| self.name(c)).collect(),
            operations,
            identity,
            gamma,
            symmetric: None,
        };
        let moment: Vec<usize> = (0..self.num_colors()).map(|c| self.acting_index(self.moment[c])).collect();
        let mut action = BTreeMap::new();
        for f in 0..acting.num_arrows() {
            let (s, t) = (acting.src(f), acting.tgt(f));
            for (g, op) in ops.iter().enumerate() {
                if moment[op.target] != s {
                    continue;
                }
                let result = if s == t {
                    g
                } else {
                    let u = s as u32 - self.num_stars();
                    let v = t as u32 - self.num_stars();
                    index[&self.act(u, v, op).expect("action defined")]
                };
                action.insert((f, g), result);
            }
        }
        OpAction { acting, acted, moment, action }
    }
}

/// Parses an object literal `n:TREE`.
pub fn parse_object(s: &str) -> Result<(u32, PlanarTree)> {
    let bad = || Error::Parse(format!("expected `n:TREE`, got `{s}`"));
    let (n, t) = s.trim().split_once(':').ok_or_else(bad)?;
    let n: u32 = n.trim().parse().map_err(|_| bad())?;
    Ok((n, t.parse()?))
}

/// The objects ⟨n↻S⟩ with `n <= max_n`, S = ∅ or a tree with at most
/// `max_vertices` vertices of arity at most `max_arity`.
pub fn window_objects(max_n: u32, max_vertices: usize, max_arity: usize) -> Vec<Arc<DaoObject>> {
    let trees: Vec<PlanarTree> =
        std::iter::once(PlanarTree::empty()).chain(ptree::enumerate_trees(max_vertices, max_arity)).collect();
    (0..=max_n).flat_map(|n| trees.iter().map(move |t| DaoObject::get(n, t))).collect()
}

/// A map ⟨n↻S⟩ → ⟨m↻R⟩ given by `alpha: [n] → C_{m,R}` and an operad map
/// `beta: Ω_p(S) → O_{m,R}` (stored on edges) with `μ(beta(r)) = alpha(0)`.
#[derive(Clone, Serialize)]
pub struct DaoMorphism {
    #[serde(serialize_with = "ser_obj")]
    src: Arc<DaoObject>,
    #[serde(serialize_with = "ser_obj")]
    tgt: Arc<DaoObject>,
    alpha: Vec<ActingObject>,
    beta: Vec<usize>,
}

fn ser_obj<S: serde::Serializer>(o: &Arc<DaoObject>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&o.literal())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DaoHat {
    /// Indexed by [`DaoObject::acting_index`] of the source.
    pub acting: Vec<ActingObject>,
    pub colors: Vec<usize>,
}

pub use crate::dad::Classification;

fn levels(values: &[u32]) -> Vec<ActingObject> {
    values.iter().map(|&v| ActingObject::Level(v)).collect()
}

impl DaoMorphism {
    pub fn new(src: Arc<DaoObject>, tgt: Arc<DaoObject>, alpha: Vec<ActingObject>, beta: Vec<usize>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidMorphism(m));
        if alpha.len() != src.n as usize + 1 {
            return bad(format!("alpha needs {} values", src.n + 1));
        }
        if beta.len() != src.num_edges() {
            return bad(format!("beta needs {} values", src.num_edges()));
        }
        if let Some(o) = alpha.iter().find(|o| !tgt.has_acting_object(**o)) {
            return bad(format!("{o} is not an acting object of {}", tgt.literal()));
        }
        let all_levels = alpha.iter().all(|o| o.level().is_some());
        let constant = alpha.windows(2).all(|w| w[0] == w[1]);
        if !(all_levels && alpha.windows(2).all(|w| w[0] <= w[1]) || constant) {
            return bad("alpha is not a functor into the acting category".into());
        }
        if let Some(&c) = beta.iter().find(|&&c| c >= tgt.num_colors()) {
            return Err(Error::OutOfRange { index: c, len: tgt.num_colors() });
        }
        for v in src.tree.vertices() {
            let ins: Vec<usize> = src.tree.inputs(v).unwrap().iter().map(|&i| beta[i]).collect();
            if !tgt.is_operation(&TreeOp { target: beta[v], sources: ins }) {
                return bad(format!("vertex at edge {v} has no image operation"));
            }
        }
        if let Some(&r) = beta.first() {
            if tgt.moment(r) != alpha[0] {
                return bad("moment of beta(root) differs from alpha(0)".into());
            }
        }
        Ok(DaoMorphism { src, tgt, alpha, beta })
    }

    pub(crate) fn new_unchecked(
        src: Arc<DaoObject>,
        tgt: Arc<DaoObject>,
        alpha: Vec<ActingObject>,
        beta: Vec<usize>,
    ) -> Self {
        DaoMorphism { src, tgt, alpha, beta }
    }

    pub fn identity(o: &Arc<DaoObject>) -> Self {
        DaoMorphism {
            src: o.clone(),
            tgt: o.clone(),
            alpha: (0..=o.n).map(ActingObject::Level).collect(),
            beta: (0..o.num_edges()).collect(),
        }
    }

    pub fn src(&self) -> &Arc<DaoObject> {
        &self.src
    }

    pub fn tgt(&self) -> &Arc<DaoObject> {
        &self.tgt
    }

    pub fn alpha(&self) -> &[ActingObject] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    fn key(&self) -> (u32, &PlanarTree, u32, &PlanarTree, &[ActingObject], &[usize]) {
        (self.src.n, &self.src.tree, self.tgt.n, &self.tgt.tree, &self.alpha, &self.beta)
    }

    pub fn hat(&self) -> DaoHat {
        self.hat_with(false)
    }

    /// The full pair of functors. With `sort_cuts`, image cuts are put back in
    /// planar order, which extends maps out of the symmetrization.
    pub fn hat_with(&self, sort_cuts: bool) -> DaoHat {
        let (s, t) = (&self.src, &self.tgt);
        let mut acting = Vec::with_capacity(s.acting_objects().len());
        for e in 1..=s.num_stars() {
            acting.push(t.moment(self.beta[e as usize]));
        }
        acting.extend_from_slice(&self.alpha);
        let mut colors = Vec::with_capacity(s.num_colors());
        for c in 0..s.num_colors() {
            let image = match &s.names[c] {
                ColorName::Edge(e) => self.beta[*e],
                ColorName::Stage { stage, op } => {
                    let (from, to) = (self.alpha[*stage as usize - 1], self.alpha[*stage as usize]);
                    if from == to {
                        colors[op.target]
                    } else {
                        let mut sources: Vec<usize> = op.sources.iter().map(|&x| colors[x]).collect();
                        if sort_cuts {
                            sources.sort_unstable();
                        }
                        let image = TreeOp { target: colors[op.target], sources };
                        let (u, v) = (from.level().unwrap(), to.level().unwrap());
                        t.act(u, v, &image).expect("action defined along a functor").target
                    }
                }
            };
            colors.push(image);
        }
        DaoHat { acting, colors }
    }

    pub fn is_identity(&self) -> bool {
        self.src.n == self.tgt.n && self.src.tree == self.tgt.tree && *self == DaoMorphism::identity(&self.src)
    }

    pub fn is_plus(&self) -> bool {
        let distinct_alpha = self.alpha.windows(2).all(|w| w[0] != w[1]);
        let mut seen = vec![false; self.tgt.num_colors()];
        let injective = self.beta.iter().all(|&c| !std::mem::replace(&mut seen[c], true));
        distinct_alpha && injective
    }

    /// `alpha` onto `[m]`, `hat(beta)` onto the colors, and leaves to leaves.
    pub fn is_minus(&self) -> bool {
        self.is_minus_with(true)
    }

    /// The minus condition, optionally without the leaf requirement.
    pub fn is_minus_with(&self, leaves_to_leaves: bool) -> bool {
        let mut seen = vec![false; self.tgt.n as usize + 1];
        for l in self.alpha.iter().filter_map(|o| o.level()) {
            seen[l as usize] = true;
        }
        if !seen.iter().all(|&b| b) {
            return false;
        }
        if leaves_to_leaves && self.src.tree.leaves().iter().any(|&l| !self.tgt.is_leaf(self.beta[l])) {
            return false;
        }
        let mut hit = vec![false; self.tgt.num_colors()];
        for c in self.hat().colors {
            hit[c] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn classify(&self) -> Classification {
        match (self.is_plus(), self.is_minus()) {
            (true, true) => Classification::Identity,
            (true, false) => Classification::Plus,
            (false, true) => Classification::Minus,
            (false, false) => Classification::Neither,
        }
    }

    /// `beta` as a map of trees, when it lands among the edges of R.
    pub fn tree_part(&self) -> Option<OmegaPMap> {
        if self.beta.iter().any(|&c| c >= self.tgt.num_edges()) {
            return None;
        }
        OmegaPMap::new(self.src.tree.clone(), self.tgt.tree.clone(), self.beta.clone()).ok()
    }
}

impl PartialEq for DaoMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for DaoMorphism {}

impl Hash for DaoMorphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl PartialOrd for DaoMorphism {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DaoMorphism {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for DaoMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.alpha.iter().map(|o| o.to_string()).collect();
        let b: Vec<String> = self.beta.iter().map(|&c| self.tgt.name(c)).collect();
        write!(f, "{} -> {} alpha=[{}] beta=[{}]", self.src.literal(), self.tgt.literal(), a.join(","), b.join(","))
    }
}

impl fmt::Debug for DaoMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DaoMorphism({self})")
    }
}

/// Postcomposition by a fixed map, with its extension computed once.
pub struct Postcompose {
    tgt: Arc<DaoObject>,
    mid: Arc<DaoObject>,
    hat: DaoHat,
}

impl Postcompose {
    pub fn new(g: &DaoMorphism) -> Self {
        Postcompose { tgt: g.tgt.clone(), mid: g.src.clone(), hat: g.hat() }
    }

    /// Postcomposition along a map out of a symmetrized object.
    pub fn symmetric(g: &DaoMorphism) -> Self {
        Postcompose { tgt: g.tgt.clone(), mid: g.src.clone(), hat: g.hat_with(true) }
    }

    pub fn apply(&self, f: &DaoMorphism) -> DaoMorphism {
        DaoMorphism {
            src: f.src.clone(),
            tgt: self.tgt.clone(),
            alpha: f.alpha.iter().map(|&o| self.hat.acting[self.mid.acting_index(o)]).collect(),
            beta: f.beta.iter().map(|&c| self.hat.colors[c]).collect(),
        }
    }
}

/// `g ∘ f`.
pub fn compose(f: &DaoMorphism, g: &DaoMorphism) -> Result<DaoMorphism> {
    if f.tgt.n != g.src.n || f.tgt.tree != g.src.tree {
        return Err(Error::Composition(format!("{f} then {g}")));
    }
    Ok(Postcompose::new(g).apply(f))
}

/// All maps `src → tgt` in a deterministic order.
pub fn hom(src: &Arc<DaoObject>, tgt: &Arc<DaoObject>) -> Vec<DaoMorphism> {
    let (n, m) = (src.n as i32, tgt.n as i32);
    let mk =
        |alpha: Vec<ActingObject>, beta: Vec<usize>| DaoMorphism { src: src.clone(), tgt: tgt.clone(), alpha, beta };
    let level_maps = ordinal::enumerate_maps(n, m);
    let mut out = Vec::new();
    if src.tree.is_empty() {
        for e in 1..=tgt.num_stars() {
            out.push(mk(vec![ActingObject::Star(e); n as usize + 1], Vec::new()));
        }
        out.extend(level_maps.iter().map(|f| mk(levels(f.values()), Vec::new())));
        return out;
    }
    let s = &src.tree;
    let verts: Vec<usize> = s.vertices().collect();
    fn rec(s: &PlanarTree, tgt: &DaoObject, verts: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&v, rest)) = verts.split_first() else {
            out.push(cur.clone());
            return;
        };
        let ins = s.inputs(v).unwrap();
        for cut in tgt.operations_with_arity(cur[v], ins.len()) {
            for (&i, &c) in ins.iter().zip(cut) {
                cur[i] = c;
            }
            rec(s, tgt, rest, cur, out);
        }
    }
    for root in 0..tgt.num_colors() {
        let alphas: Vec<Vec<ActingObject>> = match tgt.moment(root) {
            ActingObject::Star(e) => vec![vec![ActingObject::Star(e); n as usize + 1]],
            ActingObject::Level(u) => {
                level_maps.iter().filter(|f| f.values()[0] == u).map(|f| levels(f.values())).collect()
            }
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
                out.push(mk(a.clone(), beta.clone()));
            }
        }
    }
    out
}

fn level_map(f: &DaoMorphism) -> OrdinalMap {
    let vals: Vec<u32> = f.alpha.iter().map(|o| o.level().expect("alpha lands in levels")).collect();
    OrdinalMap::new(f.src.n as i32, f.tgt.n as i32, vals).expect("monotone")
}

/// The unique factorization into a minus map followed by a plus map.
///
/// `beta` factors through the expansion tree `T_0` of `beta(r)`, and then
/// through the image tree `T` of the resulting map of trees. When `beta(r)` is
/// a non-root edge of R, `alpha` is constant at a star and the map factors
/// through ⟨0↻T⟩; otherwise `alpha` factors epi-mono and the map factors
/// through ⟨y↻T⟩. For S = ∅ a constant star factors through ⟨0↻∅⟩.
pub fn reedy_factorize(f: &DaoMorphism) -> (DaoMorphism, DaoMorphism) {
    let n = f.src.n as usize;
    let (minus_beta, plus_beta, t) = if f.src.tree.is_empty() {
        (Vec::new(), Vec::new(), PlanarTree::empty())
    } else {
        let (t0, colors) = f.tgt.extract_tree_over(f.beta[0]);
        let position: HashMap<usize, usize> = colors.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let onto_t0 = f.beta.iter().map(|c| position[c]).collect();
        let to_t0 = OmegaPMap::new(f.src.tree.clone(), Arc::new(t0), onto_t0).expect("beta lies over beta(r)");
        let (minus, plus) = ptree::factorize(&to_t0);
        let plus_beta = plus.edge_map().iter().map(|&e| colors[e]).collect();
        (minus.edge_map().to_vec(), plus_beta, (**minus.tgt()).clone())
    };
    if let ActingObject::Star(_) = f.alpha[0] {
        let mid = DaoObject::get(0, &t);
        let minus =
            DaoMorphism::new_unchecked(f.src.clone(), mid.clone(), vec![ActingObject::Level(0); n + 1], minus_beta);
        let plus = DaoMorphism::new_unchecked(mid, f.tgt.clone(), vec![f.alpha[0]], plus_beta);
        return (minus, plus);
    }
    let (epi, mono) = ordinal::epi_mono_factorize(&level_map(f));
    let mid = DaoObject::get(epi.tgt() as u32, &t);
    let minus = DaoMorphism::new_unchecked(f.src.clone(), mid.clone(), levels(epi.values()), minus_beta);
    let plus = DaoMorphism::new_unchecked(mid, f.tgt.clone(), levels(mono.values()), plus_beta);
    (minus, plus)
}

/// Completes two minus maps out of a common source to a square of minus
/// maps, by pushing out the level parts in Δ and the tree parts in Ω_{p,◇}.
pub fn elegance_pushout(f: &DaoMorphism, g: &DaoMorphism) -> Result<(DaoMorphism, DaoMorphism)> {
    if f.src.n != g.src.n || f.src.tree != g.src.tree {
        return Err(Error::Composition("pushout of maps with different sources".into()));
    }
    if !f.is_minus() || !g.is_minus() {
        return Err(Error::InvalidMorphism("pushout requires two minus maps".into()));
    }
    let (d1, d2) = ordinal::pushout_of_epis(&level_map(f), &level_map(g))?;
    let tree_part = |h: &DaoMorphism| {
        h.tree_part().ok_or_else(|| Error::InvalidMorphism("minus map with beta outside the tree".into()))
    };
    let (t1, t2) = if f.src.tree.is_empty() {
        (OmegaPMap::identity(f.tgt.tree.clone()), OmegaPMap::identity(g.tgt.tree.clone()))
    } else {
        ptree::pushout_of_minus(&tree_part(f)?, &tree_part(g)?)?
    };
    let apex = DaoObject::get(d1.tgt() as u32, t1.tgt());
    let leg = |d: &OrdinalMap, t: &OmegaPMap, from: &Arc<DaoObject>| {
        DaoMorphism::new(from.clone(), apex.clone(), levels(d.values()), t.edge_map().to_vec())
    };
    Ok((leg(&d1, &t1, &f.tgt)?, leg(&d2, &t2, &g.tgt)?))
}
