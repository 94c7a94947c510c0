//! Planar rooted trees and the category Ω_p of free nonsymmetric operads on them,
//! extended by the empty tree.

mod tree;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use tree::{enumerate_trees, PlanarTree, Shape};

/// An operation of Ω_p(S): a target edge together with the ordered boundary
/// edges above a connected region of vertices rooted at the target.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TreeOp {
    pub target: usize,
    pub sources: Vec<usize>,
}

impl TreeOp {
    pub fn is_identity(&self) -> bool {
        self.sources.len() == 1 && self.sources[0] == self.target
    }
}

/// All operations of Ω_p(S) with target `e`, identity first.
pub fn operations_at(s: &PlanarTree, e: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![e]];
    if let Some(ins) = s.inputs(e) {
        let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
        for &i in ins {
            let sub = operations_at(s, i);
            let mut next = Vec::with_capacity(acc.len() * sub.len());
            for a in &acc {
                for b in &sub {
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

/// All operations of Ω_p(S), grouped by target edge in preorder.
pub fn enumerate_operations(s: &PlanarTree) -> Vec<TreeOp> {
    s.edges().flat_map(|e| operations_at(s, e).into_iter().map(move |sources| TreeOp { target: e, sources })).collect()
}

/// Whether `sources` is the source tuple of an operation of Ω_p(S) with target `target`.
///
/// An edge matching the next expected source is consumed; otherwise it is
/// expanded into the inputs of its vertex. Edges of a tree are distinct, so
/// this greedy reading is the only possible one.
pub fn is_operation(s: &PlanarTree, target: usize, sources: &[usize]) -> bool {
    fn walk(s: &PlanarTree, e: usize, src: &[usize], pos: &mut usize) -> bool {
        if src.get(*pos) == Some(&e) {
            *pos += 1;
            return true;
        }
        match s.inputs(e) {
            None => false,
            Some(ins) => ins.iter().all(|&i| walk(s, i, src, pos)),
        }
    }
    let mut pos = 0;
    walk(s, target, sources, &mut pos) && pos == sources.len()
}

/// Degree in Ω_{p,◇}: 0 for ∅, otherwise one more than the number of vertices.
pub fn degree(s: &PlanarTree) -> usize {
    if s.is_empty() {
        0
    } else {
        s.num_vertices() + 1
    }
}

/// A morphism Ω_p(S) → Ω_p(T), stored as its map on edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OmegaPMap {
    src: Arc<PlanarTree>,
    tgt: Arc<PlanarTree>,
    edges: Vec<usize>,
}

impl std::fmt::Display for OmegaPMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} -> {} edges={:?}", self.src, self.tgt, self.edges)
    }
}

impl OmegaPMap {
    pub fn new(src: Arc<PlanarTree>, tgt: Arc<PlanarTree>, edges: Vec<usize>) -> Result<Self> {
        if edges.len() != src.num_edges() {
            return Err(Error::InvalidMorphism(format!(
                "{} edges in {src} but {} images given",
                src.num_edges(),
                edges.len()
            )));
        }
        if let Some(&bad) = edges.iter().find(|&&e| e >= tgt.num_edges()) {
            return Err(Error::OutOfRange { index: bad, len: tgt.num_edges() });
        }
        for v in src.vertices() {
            let ins: Vec<usize> = src.inputs(v).unwrap().iter().map(|&i| edges[i]).collect();
            if !is_operation(&tgt, edges[v], &ins) {
                return Err(Error::InvalidMorphism(format!(
                    "vertex at edge {v} of {src} has no image operation in {tgt}"
                )));
            }
        }
        Ok(OmegaPMap { src, tgt, edges })
    }

    pub(crate) fn new_unchecked(src: Arc<PlanarTree>, tgt: Arc<PlanarTree>, edges: Vec<usize>) -> Self {
        OmegaPMap { src, tgt, edges }
    }

    pub fn identity(s: Arc<PlanarTree>) -> Self {
        let edges = s.edges().collect();
        OmegaPMap { src: s.clone(), tgt: s, edges }
    }

    pub fn from_empty(tgt: Arc<PlanarTree>) -> Self {
        OmegaPMap { src: Arc::new(PlanarTree::empty()), tgt, edges: Vec::new() }
    }

    pub fn src(&self) -> &Arc<PlanarTree> {
        &self.src
    }

    pub fn tgt(&self) -> &Arc<PlanarTree> {
        &self.tgt
    }

    pub fn edge_map(&self) -> &[usize] {
        &self.edges
    }

    pub fn apply(&self, e: usize) -> usize {
        self.edges[e]
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && self.edges.iter().enumerate().all(|(i, &e)| i == e)
    }

    /// Injective on edges.
    pub fn is_plus(&self) -> bool {
        let mut seen = vec![false; self.tgt.num_edges()];
        self.edges.iter().all(|&e| !std::mem::replace(&mut seen[e], true))
    }

    /// Surjective on edges and sends leaves to leaves. Out of ∅ only the
    /// identity qualifies.
    pub fn is_minus(&self) -> bool {
        if self.src.is_empty() {
            return self.tgt.is_empty();
        }
        self.is_surjective() && self.src.leaves().iter().all(|&l| self.tgt.is_leaf(self.edges[l]))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.tgt.num_edges()];
        for &e in &self.edges {
            seen[e] = true;
        }
        seen.into_iter().all(|b| b)
    }

    /// The image operation of the vertex with output `v`.
    pub fn image_of_vertex(&self, v: usize) -> TreeOp {
        TreeOp {
            target: self.edges[v],
            sources: self.src.inputs(v).expect("not a vertex").iter().map(|&i| self.edges[i]).collect(),
        }
    }
}

/// `g ∘ f`.
pub fn compose(f: &OmegaPMap, g: &OmegaPMap) -> Result<OmegaPMap> {
    if f.tgt != g.src {
        return Err(Error::Composition(format!("{} -> {} then {} -> {}", f.src, f.tgt, g.src, g.tgt)));
    }
    Ok(OmegaPMap { src: f.src.clone(), tgt: g.tgt.clone(), edges: f.edges.iter().map(|&e| g.edges[e]).collect() })
}

/// Source tuples of operations of Ω_p(T), indexed by target edge and arity.
#[derive(Debug, Clone)]
pub struct OperationIndex {
    by_target: Vec<BTreeMap<usize, Vec<Vec<usize>>>>,
}

impl OperationIndex {
    pub fn new(t: &PlanarTree) -> Self {
        let by_target = t
            .edges()
            .map(|e| {
                let mut m: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
                for ops in operations_at(t, e) {
                    m.entry(ops.len()).or_default().push(ops);
                }
                m
            })
            .collect();
        OperationIndex { by_target }
    }

    pub fn with_arity(&self, target: usize, arity: usize) -> &[Vec<usize>] {
        self.by_target[target].get(&arity).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// All morphisms Ω_p(S) → Ω_p(T) in a deterministic order.
pub fn hom(s: &Arc<PlanarTree>, t: &Arc<PlanarTree>) -> Vec<OmegaPMap> {
    if s.is_empty() {
        return vec![OmegaPMap::from_empty(t.clone())];
    }
    if t.is_empty() {
        return Vec::new();
    }
    let index = OperationIndex::new(t);
    let verts: Vec<usize> = s.vertices().collect();
    let mut out = Vec::new();
    let mut cur = vec![usize::MAX; s.num_edges()];
    fn rec(s: &PlanarTree, index: &OperationIndex, verts: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&v, rest)) = verts.split_first() else {
            out.push(cur.clone());
            return;
        };
        let ins = s.inputs(v).unwrap();
        for op in index.with_arity(cur[v], ins.len()) {
            for (&i, &c) in ins.iter().zip(op) {
                cur[i] = c;
            }
            rec(s, index, rest, cur, out);
        }
    }
    for root in t.edges() {
        cur[0] = root;
        let mut raw = Vec::new();
        rec(s, &index, &verts, &mut cur, &mut raw);
        out.extend(raw.into_iter().map(|edges| OmegaPMap::new_unchecked(s.clone(), t.clone(), edges)));
    }
    out
}

/// The unique factorization of `f` into a minus map followed by a plus map,
/// through the image tree of `f`.
pub fn factorize(f: &OmegaPMap) -> (OmegaPMap, OmegaPMap) {
    let (s, t) = (&f.src, &f.tgt);
    if s.is_empty() {
        return (OmegaPMap::identity(s.clone()), f.clone());
    }
    // Image vertices: every vertex not sent to an identity operation.
    let mut image_inputs: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in s.vertices() {
        let op = f.image_of_vertex(v);
        if !op.is_identity() {
            let prev = image_inputs.insert(op.target, op.sources);
            debug_assert!(prev.is_none(), "two vertices with the same image target");
        }
    }
    let mut u_to_t = Vec::new();
    fn build(x: usize, image_inputs: &BTreeMap<usize, Vec<usize>>, u_to_t: &mut Vec<usize>) -> Shape {
        u_to_t.push(x);
        match image_inputs.get(&x) {
            None => Shape::Leaf,
            Some(ins) => Shape::Vertex(ins.iter().map(|&i| build(i, image_inputs, u_to_t)).collect()),
        }
    }
    let shape = build(f.edges[0], &image_inputs, &mut u_to_t);
    let u = Arc::new(PlanarTree::from_shape(&shape));
    let mut t_to_u = vec![usize::MAX; t.num_edges()];
    for (ui, &ti) in u_to_t.iter().enumerate() {
        t_to_u[ti] = ui;
    }
    let minus = OmegaPMap::new_unchecked(s.clone(), u.clone(), f.edges.iter().map(|&e| t_to_u[e]).collect());
    let plus = OmegaPMap::new_unchecked(u, t.clone(), u_to_t);
    (minus, plus)
}

/// Pushout of two minus maps with a common source: the quotient of the
/// source tree by the join of the two kernel relations on edges.
pub fn pushout_of_minus(f: &OmegaPMap, g: &OmegaPMap) -> Result<(OmegaPMap, OmegaPMap)> {
    if f.src != g.src {
        return Err(Error::Composition("pushout of maps with different sources".into()));
    }
    if !f.is_minus() || !g.is_minus() {
        return Err(Error::InvalidMorphism("pushout requires two minus maps".into()));
    }
    let s = &f.src;
    if s.is_empty() {
        return Ok((OmegaPMap::identity(f.tgt.clone()), OmegaPMap::identity(g.tgt.clone())));
    }
    let n = s.num_edges();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let nx = p[x];
            p[x] = r;
            x = nx;
        }
        r
    }
    for m in [f, g] {
        let mut first: BTreeMap<usize, usize> = BTreeMap::new();
        for e in 0..n {
            let rep = *first.entry(m.edges[e]).or_insert(e);
            let (a, b) = (find(&mut parent, rep), find(&mut parent, e));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let class: Vec<usize> = (0..n).map(|e| find(&mut parent, e)).collect();
    // Walk the quotient from the root, passing through collapsed unary vertices.
    let mut q_index = vec![usize::MAX; n];
    let mut counter = 0usize;
    fn build(s: &PlanarTree, class: &[usize], e: usize, q_index: &mut [usize], counter: &mut usize) -> Result<Shape> {
        let me = *counter;
        *counter += 1;
        let mut top = e;
        loop {
            q_index[top] = me;
            match s.inputs(top) {
                Some(ins) if ins.iter().any(|&i| class[i] == class[top]) => {
                    if ins.len() != 1 {
                        return Err(Error::InvalidTree("quotient collapses a non-unary vertex".into()));
                    }
                    top = ins[0];
                }
                _ => break,
            }
        }
        match s.inputs(top) {
            None => Ok(Shape::Leaf),
            Some(ins) => {
                let ch = ins.iter().map(|&i| build(s, class, i, q_index, counter)).collect::<Result<Vec<_>>>()?;
                Ok(Shape::Vertex(ch))
            }
        }
    }
    let shape = build(s, &class, 0, &mut q_index, &mut counter)?;
    let q = Arc::new(PlanarTree::from_shape(&shape));
    let leg = |m: &OmegaPMap| -> Result<OmegaPMap> {
        let mut vals = vec![usize::MAX; m.tgt.num_edges()];
        for (&x, &qe) in m.edges.iter().zip(&q_index).take(n) {
            if vals[x] == usize::MAX {
                vals[x] = qe;
            } else if vals[x] != qe {
                return Err(Error::InvalidMorphism("pushout leg is not well defined".into()));
            }
        }
        OmegaPMap::new(m.tgt.clone(), q.clone(), vals)
    };
    Ok((leg(f)?, leg(g)?))
}

/// Automorphisms of the underlying nonplanar tree of `S`, as edge
/// permutations, sorted with the identity first, plus a multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeAutomorphisms {
    pub perms: Vec<Vec<usize>>,
    /// `table[a][b]` is the index of `perms[a] ∘ perms[b]`.
    pub table: Vec<Vec<usize>>,
}

impl TreeAutomorphisms {
    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.table[a].iter().position(|&c| c == 0).expect("group element without inverse")
    }
}

pub fn automorphisms(s: &PlanarTree) -> TreeAutomorphisms {
    let mut perms: Vec<Vec<usize>> = match s.root() {
        None => vec![Vec::new()],
        Some(r) => isomorphisms(s, r, r)
            .into_iter()
            .map(|pairs| {
                let mut p = vec![0; s.num_edges()];
                for (a, b) in pairs {
                    p[a] = b;
                }
                p
            })
            .collect(),
    };
    perms.sort();
    let table = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let c: Vec<usize> = b.iter().map(|&x| a[x]).collect();
                    perms.binary_search(&c).expect("automorphisms not closed")
                })
                .collect()
        })
        .collect();
    TreeAutomorphisms { perms, table }
}

/// All isomorphisms of nonplanar subtrees rooted at `a` and `b`, as edge pairs.
fn isomorphisms(s: &PlanarTree, a: usize, b: usize) -> Vec<Vec<(usize, usize)>> {
    if s.unordered_code(a) != s.unordered_code(b) {
        return Vec::new();
    }
    match (s.inputs(a), s.inputs(b)) {
        (None, None) => vec![vec![(a, b)]],
        (Some(ia), Some(ib)) if ia.len() == ib.len() => {
            let mut out = Vec::new();
            for perm in permutations(ia.len()) {
                let mut acc: Vec<Vec<(usize, usize)>> = vec![vec![(a, b)]];
                for (i, &p) in perm.iter().enumerate() {
                    let sub = isomorphisms(s, ia[i], ib[p]);
                    if sub.is_empty() {
                        acc.clear();
                        break;
                    }
                    acc = acc
                        .iter()
                        .flat_map(|x| {
                            sub.iter().map(move |y| {
                                let mut z = x.clone();
                                z.extend_from_slice(y);
                                z
                            })
                        })
                        .collect();
                }
                out.extend(acc);
            }
            out
        }
        _ => Vec::new(),
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Arc<PlanarTree> {
        Arc::new(s.parse().unwrap())
    }

    #[test]
    fn operation_counts() {
        assert_eq!(enumerate_operations(&t("*")).len(), 1);
        assert_eq!(enumerate_operations(&t("(*)")).len(), 3);
        assert_eq!(enumerate_operations(&t("((*))")).len(), 6);
        let ops = enumerate_operations(&t("(* *)"));
        assert_eq!(ops.len(), 4);
        assert!(ops.contains(&TreeOp { target: 0, sources: vec![1, 2] }));
    }

    #[test]
    fn nullary_vertices_contribute_no_sources() {
        let s = t("(() *)");
        assert!(is_operation(&s, 0, &[2]));
        assert!(is_operation(&s, 0, &[1, 2]));
        assert!(!is_operation(&s, 0, &[2, 1]));
        assert!(is_operation(&s, 1, &[]));
        assert!(!is_operation(&s, 2, &[]));
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&PlanarTree::empty()), 0);
        assert_eq!(degree(&PlanarTree::eta()), 1);
        assert_eq!(degree(&PlanarTree::linear(2)), 3);
    }

    #[test]
    fn classification() {
        let s = t("((*))");
        let e = t("(*)");
        // collapse the upper unary vertex: edges 0,1,2 -> 0,1,1
        let d = OmegaPMap::new(s.clone(), e.clone(), vec![0, 1, 1]).unwrap();
        assert!(d.is_minus() && !d.is_plus());
        let face = OmegaPMap::new(e.clone(), s.clone(), vec![0, 2]).unwrap();
        assert!(face.is_plus() && !face.is_minus());
        assert!(OmegaPMap::new(e.clone(), s.clone(), vec![2, 0]).is_err());
        assert!(OmegaPMap::identity(s.clone()).is_minus());
        let empty = Arc::new(PlanarTree::empty());
        assert!(OmegaPMap::identity(empty.clone()).is_minus());
        assert!(!OmegaPMap::from_empty(s).is_minus());
    }

    #[test]
    fn surjective_on_edges_is_not_enough() {
        // r ↦ r, ℓ ↦ the nullary edge: onto, but a leaf goes to a non-leaf.
        let src = t("(*)");
        let tgt = t("(())");
        let f = OmegaPMap::new(src.clone(), tgt.clone(), vec![0, 1]).unwrap();
        assert!(f.is_surjective());
        assert!(!f.is_minus());
        assert!(degree(&src) < degree(&tgt));
    }

    #[test]
    fn factorize_examples() {
        let s = t("((*))");
        let id = OmegaPMap::identity(s.clone());
        assert_eq!(factorize(&id), (id.clone(), id.clone()));
        let d = OmegaPMap::new(s.clone(), t("(*)"), vec![0, 1, 1]).unwrap();
        let (m, p) = factorize(&d);
        assert_eq!(m, d);
        assert!(p.is_identity());
        let face = OmegaPMap::new(t("(*)"), s, vec![0, 2]).unwrap();
        let (m, p) = factorize(&face);
        assert!(m.is_identity());
        assert_eq!(p, face);
    }

    #[test]
    fn pushout_of_two_collapses() {
        let s = t("((*))");
        let e = t("(*)");
        let lower = OmegaPMap::new(s.clone(), e.clone(), vec![0, 0, 1]).unwrap();
        let upper = OmegaPMap::new(s.clone(), e.clone(), vec![0, 1, 1]).unwrap();
        let (a, b) = pushout_of_minus(&lower, &upper).unwrap();
        assert_eq!(**a.tgt(), PlanarTree::eta());
        assert_eq!(compose(&lower, &a).unwrap(), compose(&upper, &b).unwrap());
        let (a, b) = pushout_of_minus(&lower, &lower).unwrap();
        assert!(a.is_identity() && b.is_identity());
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(automorphisms(&PlanarTree::linear(3)).order(), 1);
        assert_eq!(automorphisms(&PlanarTree::corolla(2)).order(), 2);
        let c3 = automorphisms(&PlanarTree::corolla(3));
        assert_eq!(c3.order(), 6);
        assert_eq!(c3.perms[0], vec![0, 1, 2, 3]);
        assert_eq!(automorphisms(&t("((* *) (* *))")).order(), 8);
        assert_eq!(automorphisms(&t("(() *)")).order(), 1);
        assert_eq!(automorphisms(&PlanarTree::empty()).order(), 1);
    }

    #[test]
    fn hom_counts_match_brute_force() {
        let trees: Vec<Arc<PlanarTree>> = enumerate_trees(2, 2).into_iter().map(Arc::new).collect();
        for s in &trees {
            for u in &trees {
                let fast = hom(s, u).len();
                let mut brute = 0;
                let n = s.num_edges();
                let m = u.num_edges();
                let total = m.pow(n as u32);
                for code in 0..total {
                    let mut c = code;
                    let edges: Vec<usize> = (0..n)
                        .map(|_| {
                            let x = c % m;
                            c /= m;
                            x
                        })
                        .collect();
                    if OmegaPMap::new(s.clone(), u.clone(), edges).is_ok() {
                        brute += 1;
                    }
                }
                assert_eq!(fast, brute, "{s} -> {u}");
            }
        }
    }
}
