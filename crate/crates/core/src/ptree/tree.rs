use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Nested normal form of a planar tree: an edge is either a leaf, or the
/// output of a vertex with ordered input subtrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Shape {
    Leaf,
    Vertex(Vec<Shape>),
}

impl Shape {
    pub fn vertex_count(&self) -> usize {
        match self {
            Shape::Leaf => 0,
            Shape::Vertex(ch) => 1 + ch.iter().map(Shape::vertex_count).sum::<usize>(),
        }
    }
}

/// A finite planar rooted tree, possibly empty.
///
/// Edges are numbered in preorder with the root edge at index 0. A vertex is
/// identified with its (unique) output edge.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlanarTree {
    inputs: Vec<Option<Vec<usize>>>,
    below: Vec<Option<usize>>,
}

impl PlanarTree {
    pub fn empty() -> Self {
        PlanarTree { inputs: Vec::new(), below: Vec::new() }
    }

    /// The tree with a single edge and no vertices.
    pub fn eta() -> Self {
        Self::from_shape(&Shape::Leaf)
    }

    /// A single vertex with `arity` leaves.
    pub fn corolla(arity: usize) -> Self {
        Self::from_shape(&Shape::Vertex(vec![Shape::Leaf; arity]))
    }

    /// A chain of `n` unary vertices.
    pub fn linear(n: usize) -> Self {
        let mut s = Shape::Leaf;
        for _ in 0..n {
            s = Shape::Vertex(vec![s]);
        }
        Self::from_shape(&s)
    }

    pub fn from_shape(shape: &Shape) -> Self {
        let mut t = PlanarTree::empty();
        fn push(t: &mut PlanarTree, s: &Shape, below: Option<usize>) -> usize {
            let e = t.inputs.len();
            t.inputs.push(None);
            t.below.push(below);
            if let Shape::Vertex(ch) = s {
                let ins: Vec<usize> = ch.iter().map(|c| push(t, c, Some(e))).collect();
                t.inputs[e] = Some(ins);
            }
            e
        }
        push(&mut t, shape, None);
        t
    }

    pub fn shape(&self) -> Option<Shape> {
        fn rec(t: &PlanarTree, e: usize) -> Shape {
            match &t.inputs[e] {
                None => Shape::Leaf,
                Some(ins) => Shape::Vertex(ins.iter().map(|&i| rec(t, i)).collect()),
            }
        }
        self.root().map(|r| rec(self, r))
    }

    pub fn is_empty(&self) -> bool {
        self.inputs.is_empty()
    }

    pub fn root(&self) -> Option<usize> {
        (!self.is_empty()).then_some(0)
    }

    pub fn num_edges(&self) -> usize {
        self.inputs.len()
    }

    pub fn edges(&self) -> std::ops::Range<usize> {
        0..self.inputs.len()
    }

    /// Output edges of the vertices, in preorder.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges().filter(|&e| self.inputs[e].is_some())
    }

    pub fn num_vertices(&self) -> usize {
        self.inputs.iter().filter(|i| i.is_some()).count()
    }

    /// Inputs of the vertex whose output is `e`, if there is one.
    pub fn inputs(&self, e: usize) -> Option<&[usize]> {
        self.inputs[e].as_deref()
    }

    /// The edge directly below `e`.
    pub fn below(&self, e: usize) -> Option<usize> {
        self.below[e]
    }

    /// Edges which are not the output of any vertex.
    pub fn is_leaf(&self, e: usize) -> bool {
        self.inputs[e].is_none()
    }

    pub fn leaves(&self) -> Vec<usize> {
        self.edges().filter(|&e| self.is_leaf(e)).collect()
    }

    /// `a` lies strictly above `b`: `b` is on the path from `a` to the root.
    pub fn lies_above(&self, a: usize, b: usize) -> bool {
        let mut cur = self.below[a];
        while let Some(c) = cur {
            if c == b {
                return true;
            }
            cur = self.below[c];
        }
        false
    }

    pub fn max_arity(&self) -> usize {
        self.inputs.iter().flatten().map(Vec::len).max().unwrap_or(0)
    }

    /// The nested literal: `*` for a leaf, `(t1 ... tk)` for a vertex, `empty` for ∅.
    pub fn to_literal(&self) -> String {
        fn rec(t: &PlanarTree, e: usize, out: &mut String) {
            match &t.inputs[e] {
                None => out.push('*'),
                Some(ins) => {
                    out.push('(');
                    for (i, &c) in ins.iter().enumerate() {
                        if i > 0 {
                            out.push(' ');
                        }
                        rec(t, c, out);
                    }
                    out.push(')');
                }
            }
        }
        match self.root() {
            None => "empty".to_string(),
            Some(r) => {
                let mut s = String::new();
                rec(self, r, &mut s);
                s
            }
        }
    }

    /// Unordered canonical code: isomorphism classes of the underlying
    /// nonplanar tree have equal codes.
    pub fn unordered_code(&self, e: usize) -> String {
        match &self.inputs[e] {
            None => "*".into(),
            Some(ins) => {
                let mut ch: Vec<String> = ins.iter().map(|&c| self.unordered_code(c)).collect();
                ch.sort();
                format!("({})", ch.join(" "))
            }
        }
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlanarTree({})", self.to_literal())
    }
}

impl FromStr for PlanarTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "empty" || s == "∅" {
            return Ok(PlanarTree::empty());
        }
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace() || *c == ' ').collect();
        let mut pos = 0;
        let shape = parse_shape(&chars, &mut pos)?;
        skip_ws(&chars, &mut pos);
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in tree literal `{s}`")));
        }
        Ok(PlanarTree::from_shape(&shape))
    }
}

fn skip_ws(c: &[char], pos: &mut usize) {
    while *pos < c.len() && c[*pos].is_whitespace() {
        *pos += 1;
    }
}

fn parse_shape(c: &[char], pos: &mut usize) -> Result<Shape> {
    skip_ws(c, pos);
    match c.get(*pos) {
        Some('*') => {
            *pos += 1;
            Ok(Shape::Leaf)
        }
        Some('(') => {
            *pos += 1;
            let mut ch = Vec::new();
            loop {
                skip_ws(c, pos);
                match c.get(*pos) {
                    Some(')') => {
                        *pos += 1;
                        return Ok(Shape::Vertex(ch));
                    }
                    Some(_) => ch.push(parse_shape(c, pos)?),
                    None => return Err(Error::Parse("unclosed `(` in tree literal".into())),
                }
            }
        }
        Some(x) => Err(Error::Parse(format!("unexpected `{x}` in tree literal"))),
        None => Err(Error::Parse("empty tree literal".into())),
    }
}

/// All planar trees with at most `max_vertices` vertices, each of arity at
/// most `max_arity`, in a deterministic order (by vertex count, then shape).
/// The empty tree is not included.
pub fn enumerate_trees(max_vertices: usize, max_arity: usize) -> Vec<PlanarTree> {
    // shapes[v] = all shapes with exactly v vertices
    let mut shapes: Vec<Vec<Shape>> = vec![vec![Shape::Leaf]];
    for v in 1..=max_vertices {
        let mut out = Vec::new();
        for k in 0..=max_arity {
            for forest in forests(&shapes, v - 1, k) {
                out.push(Shape::Vertex(forest));
            }
        }
        out.sort();
        shapes.push(out);
    }
    shapes.iter().flatten().map(PlanarTree::from_shape).collect()
}

fn forests(shapes: &[Vec<Shape>], total: usize, len: usize) -> Vec<Vec<Shape>> {
    if len == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for head in &shapes[first] {
            for mut rest in forests(shapes, total - first, len - 1) {
                rest.insert(0, head.clone());
                out.push(rest);
            }
        }
    }
    out
}
