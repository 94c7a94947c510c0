//! The category Δ↻Δ: formal actions ⟨n↻k⟩ of `[n]` on `[k]` and the maps
//! between them.
//!
//! The acted category of ⟨n↻k⟩ is free on a forest (every object has at most
//! one incoming generator), so a morphism of it is just a pair
//! `(ancestor, descendant)`. A map ⟨n↻k⟩ → ⟨m↻l⟩ is stored as the pair
//! `(alpha, beta)` of its restrictions to `[n]` and `[k]`; everything else is
//! recovered by [`DadMorphism::hat`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cache::BuildOnce;
use crate::error::{Error, Result};
use crate::fincat::{Arrow, CatAction, FinCategory};
use crate::ordinal::{self, OrdinalMap};

/// An object of the acting category: a free target `*_j` or a level `i` of `[n]`.
///
/// The derived order puts every star below every level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ActingObject {
    Star(u32),
    Level(u32),
}

impl ActingObject {
    pub fn level(self) -> Option<u32> {
        match self {
            ActingObject::Level(i) => Some(i),
            ActingObject::Star(_) => None,
        }
    }
}

impl fmt::Display for ActingObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActingObject::Star(j) => write!(f, "*{j}"),
            ActingObject::Level(i) => write!(f, "{i}"),
        }
    }
}

/// Canonical name of an acted object: a base object `j` of `[k]`, or the
/// object `(i, a->x)` added at stage `i` for the morphism `a -> x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ActedName {
    Base(u32),
    Stage { stage: u32, source: usize, target: usize },
}

#[derive(Debug, Clone)]
pub struct DadObject {
    n: u32,
    k: i32,
    parent: Vec<Option<usize>>,
    moment: Vec<ActingObject>,
    names: Vec<ActedName>,
    /// Chain from the root of the tree down to the object itself.
    ancestors: Vec<Vec<usize>>,
    /// `(a, x) ↦ (i, a->x)` for every morphism `a -> x` of moment `i - 1 < n`.
    step: HashMap<(usize, usize), usize>,
}

fn registry() -> &'static BuildOnce<(u32, i32), DadObject> {
    static R: OnceLock<BuildOnce<(u32, i32), DadObject>> = OnceLock::new();
    R.get_or_init(BuildOnce::new)
}

impl DadObject {
    /// The shared instance of ⟨n↻k⟩.
    pub fn get(n: u32, k: i32) -> Arc<DadObject> {
        registry().get_or_build(&(n, k), || DadObject::build(n, k))
    }

    pub fn build(n: u32, k: i32) -> DadObject {
        assert!(k >= -1, "k must be at least -1");
        let mut o = DadObject {
            n,
            k,
            parent: Vec::new(),
            moment: Vec::new(),
            names: Vec::new(),
            ancestors: Vec::new(),
            step: HashMap::new(),
        };
        if k < 0 {
            return o;
        }
        for j in 0..=k as u32 {
            let m = if (j as i32) < k { ActingObject::Star(j) } else { ActingObject::Level(0) };
            o.push(if j == 0 { None } else { Some(j as usize - 1) }, m, ActedName::Base(j));
        }
        for i in 1..=n {
            let tops: Vec<usize> = (0..o.len()).filter(|&x| o.moment[x] == ActingObject::Level(i - 1)).collect();
            for x in tops {
                for a in o.ancestors[x].clone() {
                    let new = o.len();
                    o.push(Some(a), ActingObject::Level(i), ActedName::Stage { stage: i, source: a, target: x });
                    o.step.insert((a, x), new);
                }
            }
        }
        o
    }

    fn push(&mut self, parent: Option<usize>, moment: ActingObject, name: ActedName) {
        let x = self.parent.len();
        let mut anc = parent.map(|p| self.ancestors[p].clone()).unwrap_or_default();
        anc.push(x);
        self.parent.push(parent);
        self.moment.push(moment);
        self.names.push(name);
        self.ancestors.push(anc);
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> i32 {
        self.k
    }

    pub fn num_objects(&self) -> usize {
        self.parent.len()
    }

    pub fn num_stars(&self) -> u32 {
        self.k.max(0) as u32
    }

    pub fn degree(&self) -> usize {
        self.n as usize + self.num_objects()
    }

    pub fn moment(&self, x: usize) -> ActingObject {
        self.moment[x]
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        self.parent[x]
    }

    pub fn ancestors(&self, x: usize) -> &[usize] {
        &self.ancestors[x]
    }

    pub fn raw_name(&self, x: usize) -> &ActedName {
        &self.names[x]
    }

    /// Whether there is a morphism `a -> x` (hom-sets have at most one element).
    pub fn reaches(&self, a: usize, x: usize) -> bool {
        let d = self.ancestors[a].len() - 1;
        self.ancestors[x].get(d) == Some(&a)
    }

    pub fn name(&self, x: usize) -> String {
        match &self.names[x] {
            ActedName::Base(j) => j.to_string(),
            ActedName::Stage { stage, source, target } => {
                format!("({stage},{}->{})", self.name(*source), self.name(*target))
            }
        }
    }

    /// Acting objects in the order `*_0, ..., *_{k-1}, 0, ..., n`.
    pub fn acting_objects(&self) -> Vec<ActingObject> {
        (0..self.num_stars()).map(ActingObject::Star).chain((0..=self.n).map(ActingObject::Level)).collect()
    }

    pub fn acting_index(&self, o: ActingObject) -> usize {
        match o {
            ActingObject::Star(j) => j as usize,
            ActingObject::Level(i) => (self.num_stars() + i) as usize,
        }
    }

    pub fn has_acting_object(&self, o: ActingObject) -> bool {
        match o {
            ActingObject::Star(j) => j < self.num_stars(),
            ActingObject::Level(i) => i <= self.n,
        }
    }

    /// The target of `p_{u,v} • (a -> b)`, where `b` has moment `u`.
    pub fn act(&self, u: u32, v: u32, a: usize, b: usize) -> Option<usize> {
        if self.moment[b] != ActingObject::Level(u) || v < u || !self.reaches(a, b) {
            return None;
        }
        let mut cur = b;
        for _ in u..v {
            cur = *self.step.get(&(a, cur))?;
        }
        Some(cur)
    }

    /// All morphisms `(a, x)` of the acted category, identities included.
    pub fn morphisms(&self) -> Vec<(usize, usize)> {
        (0..self.num_objects()).flat_map(|x| self.ancestors[x].iter().map(move |&a| (a, x))).collect()
    }

    pub fn literal(&self) -> String {
        format!("{}:{}", self.n, self.k)
    }

    /// The acting category C_{n,k} as an explicit finite category.
    pub fn acting_category(&self) -> FinCategory {
        let names: Vec<String> = self.acting_objects().iter().map(|o| o.to_string()).collect();
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

    /// ⟨n↻k⟩ as an explicit finite action of C_{n,k} on D_{n,k}.
    pub fn to_cat_action(&self) -> CatAction {
        let acting = self.acting_category();
        let morphisms = self.morphisms();
        let index: HashMap<(usize, usize), usize> = morphisms.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let arrows = morphisms
            .iter()
            .map(|&(a, x)| Arrow { name: format!("{}->{}", self.name(a), self.name(x)), src: a, tgt: x })
            .collect();
        let mut compose = BTreeMap::new();
        for &(a, x) in &morphisms {
            for y in (0..self.num_objects()).filter(|&y| self.reaches(x, y)) {
                compose.insert((index[&(a, x)], index[&(x, y)]), index[&(a, y)]);
            }
        }
        let acted = FinCategory {
            objects: (0..self.num_objects()).map(|x| self.name(x)).collect(),
            arrows,
            identity: (0..self.num_objects()).map(|x| index[&(x, x)]).collect(),
            compose,
        };
        let moment: Vec<usize> = (0..self.num_objects()).map(|x| self.acting_index(self.moment[x])).collect();
        let mut action = BTreeMap::new();
        for f in 0..acting.num_arrows() {
            let (s, t) = (acting.src(f), acting.tgt(f));
            for (g, &(a, b)) in morphisms.iter().enumerate() {
                if moment[b] != s {
                    continue;
                }
                let result = if s == t {
                    g
                } else {
                    let u = s as u32 - self.num_stars();
                    let v = t as u32 - self.num_stars();
                    index[&(a, self.act(u, v, a, b).expect("action defined"))]
                };
                action.insert((f, g), result);
            }
        }
        CatAction { acting, acted, moment, arrow_moment: BTreeMap::new(), action }
    }

    /// Graphviz rendering of the generating forest with names and moments.
    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph \"D_{{{},{}}}\" {{\n  rankdir=BT;\n", self.n, self.k);
        for x in 0..self.num_objects() {
            s.push_str(&format!("  n{x} [label=\"{}\\nμ={}\"];\n", self.name(x), self.moment[x]));
        }
        for x in 0..self.num_objects() {
            if let Some(p) = self.parent[x] {
                s.push_str(&format!("  n{p} -> n{x};\n"));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Parses an object literal `n:k`.
pub fn parse_object(s: &str) -> Result<(u32, i32)> {
    let bad = || Error::Parse(format!("expected `n:k`, got `{s}`"));
    let (n, k) = s.trim().split_once(':').ok_or_else(bad)?;
    let n: u32 = n.trim().parse().map_err(|_| bad())?;
    let k: i32 = k.trim().parse().map_err(|_| bad())?;
    if k < -1 {
        return Err(Error::InvalidObject(format!("k = {k} is below -1")));
    }
    Ok((n, k))
}

/// A map ⟨n↻k⟩ → ⟨m↻l⟩ given by functors `alpha: [n] → C_{m,l}` and
/// `beta: [k] → D_{m,l}` with `μ(beta(k)) = alpha(0)`.
#[derive(Clone, Serialize)]
pub struct DadMorphism {
    #[serde(serialize_with = "ser_obj")]
    src: Arc<DadObject>,
    #[serde(serialize_with = "ser_obj")]
    tgt: Arc<DadObject>,
    alpha: Vec<ActingObject>,
    beta: Vec<usize>,
}

fn ser_obj<S: serde::Serializer>(o: &Arc<DadObject>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&o.literal())
}

/// The full functors determined by a map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DadHat {
    /// Indexed by [`DadObject::acting_index`] of the source.
    pub acting: Vec<ActingObject>,
    pub acted: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Identity,
    Plus,
    Minus,
    Neither,
}

impl DadMorphism {
    pub fn new(src: Arc<DadObject>, tgt: Arc<DadObject>, alpha: Vec<ActingObject>, beta: Vec<usize>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidMorphism(m));
        if alpha.len() != src.n as usize + 1 {
            return bad(format!("alpha needs {} values", src.n + 1));
        }
        if beta.len() != (src.k + 1) as usize {
            return bad(format!("beta needs {} values", src.k + 1));
        }
        if let Some(o) = alpha.iter().find(|o| !tgt.has_acting_object(**o)) {
            return bad(format!("{o} is not an acting object of {}", tgt.literal()));
        }
        let all_levels = alpha.iter().all(|o| o.level().is_some());
        let constant = alpha.windows(2).all(|w| w[0] == w[1]);
        if !(all_levels && alpha.windows(2).all(|w| w[0] <= w[1]) || constant) {
            return bad("alpha is not a functor into the acting category".into());
        }
        if let Some(&x) = beta.iter().find(|&&x| x >= tgt.num_objects()) {
            return Err(Error::OutOfRange { index: x, len: tgt.num_objects() });
        }
        if beta.windows(2).any(|w| !tgt.reaches(w[0], w[1])) {
            return bad("beta is not a chain of composable morphisms".into());
        }
        if let Some(&last) = beta.last() {
            if tgt.moment(last) != alpha[0] {
                return bad("moment of beta(k) differs from alpha(0)".into());
            }
        }
        Ok(DadMorphism { src, tgt, alpha, beta })
    }

    pub fn identity(o: &Arc<DadObject>) -> Self {
        DadMorphism {
            src: o.clone(),
            tgt: o.clone(),
            alpha: (0..=o.n).map(ActingObject::Level).collect(),
            beta: (0..=o.k).map(|j| j as usize).collect(),
        }
    }

    pub fn src(&self) -> &Arc<DadObject> {
        &self.src
    }

    pub fn tgt(&self) -> &Arc<DadObject> {
        &self.tgt
    }

    pub fn alpha(&self) -> &[ActingObject] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    fn key(&self) -> (u32, i32, u32, i32, &[ActingObject], &[usize]) {
        (self.src.n, self.src.k, self.tgt.n, self.tgt.k, &self.alpha, &self.beta)
    }

    /// Extends `(alpha, beta)` to the full pair of functors, stage by stage.
    pub fn hat(&self) -> DadHat {
        let (s, t) = (&self.src, &self.tgt);
        let mut acting = Vec::with_capacity(s.acting_objects().len());
        for w in 0..s.num_stars() {
            acting.push(t.moment(self.beta[w as usize]));
        }
        acting.extend_from_slice(&self.alpha);
        let mut acted = Vec::with_capacity(s.num_objects());
        for x in 0..s.num_objects() {
            let image = match s.names[x] {
                ActedName::Base(j) => self.beta[j as usize],
                ActedName::Stage { stage, source, target } => {
                    let (from, to) = (self.alpha[stage as usize - 1], self.alpha[stage as usize]);
                    if from == to {
                        acted[target]
                    } else {
                        let (u, v) = (from.level().unwrap(), to.level().unwrap());
                        t.act(u, v, acted[source], acted[target]).expect("action defined along a functor")
                    }
                }
            };
            acted.push(image);
        }
        DadHat { acting, acted }
    }

    pub fn is_identity(&self) -> bool {
        self.src.n == self.tgt.n && self.src.k == self.tgt.k && *self == DadMorphism::identity(&self.src)
    }

    /// Injective on the objects of `[n]` and of `[k]`.
    pub fn is_plus(&self) -> bool {
        let distinct_alpha = self.alpha.windows(2).all(|w| w[0] != w[1]);
        let distinct_beta = self.beta.windows(2).all(|w| w[0] != w[1]);
        distinct_alpha && distinct_beta
    }

    /// `alpha` hits every level of the target and `hat(beta)` every acted object.
    pub fn is_minus(&self) -> bool {
        let levels: Vec<u32> = self.alpha.iter().filter_map(|o| o.level()).collect();
        let mut seen = vec![false; self.tgt.n as usize + 1];
        for l in levels {
            seen[l as usize] = true;
        }
        if !seen.iter().all(|&b| b) {
            return false;
        }
        let hat = self.hat();
        let mut hit = vec![false; self.tgt.num_objects()];
        for x in hat.acted {
            hit[x] = true;
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
}

impl PartialEq for DadMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for DadMorphism {}

impl Hash for DadMorphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl PartialOrd for DadMorphism {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DadMorphism {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for DadMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.alpha.iter().map(|o| o.to_string()).collect();
        let b: Vec<String> = self.beta.iter().map(|&x| self.tgt.name(x)).collect();
        write!(f, "{} -> {} alpha=[{}] beta=[{}]", self.src.literal(), self.tgt.literal(), a.join(","), b.join(","))
    }
}

impl fmt::Debug for DadMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DadMorphism({self})")
    }
}

/// Postcomposition by a fixed map, with its extension computed once.
pub struct Postcompose {
    tgt: Arc<DadObject>,
    mid: Arc<DadObject>,
    hat: DadHat,
}

impl Postcompose {
    pub fn new(g: &DadMorphism) -> Self {
        Postcompose { tgt: g.tgt.clone(), mid: g.src.clone(), hat: g.hat() }
    }

    /// `g ∘ f`.
    pub fn apply(&self, f: &DadMorphism) -> DadMorphism {
        debug_assert_eq!((f.tgt.n, f.tgt.k), (self.mid.n, self.mid.k));
        DadMorphism {
            src: f.src.clone(),
            tgt: self.tgt.clone(),
            alpha: f.alpha.iter().map(|&o| self.hat.acting[self.mid.acting_index(o)]).collect(),
            beta: f.beta.iter().map(|&x| self.hat.acted[x]).collect(),
        }
    }
}

/// `g ∘ f`.
pub fn compose(f: &DadMorphism, g: &DadMorphism) -> Result<DadMorphism> {
    if (f.tgt.n, f.tgt.k) != (g.src.n, g.src.k) {
        return Err(Error::Composition(format!("{f} then {g}")));
    }
    Ok(Postcompose::new(g).apply(f))
}

fn levels(values: &[u32]) -> Vec<ActingObject> {
    values.iter().map(|&v| ActingObject::Level(v)).collect()
}

/// Weakly increasing sequences of `len` positions in `0..d`.
fn multichains(d: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(d: usize, len: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for p in lo..d {
            cur.push(p);
            rec(d, len, p, cur, out);
            cur.pop();
        }
    }
    rec(d, len, 0, &mut Vec::new(), &mut out);
    out
}

/// All maps `src → tgt` in a deterministic order.
pub fn hom(src: &Arc<DadObject>, tgt: &Arc<DadObject>) -> Vec<DadMorphism> {
    let (n, m) = (src.n as i32, tgt.n as i32);
    let mk =
        |alpha: Vec<ActingObject>, beta: Vec<usize>| DadMorphism { src: src.clone(), tgt: tgt.clone(), alpha, beta };
    let mut out = Vec::new();
    if src.k < 0 {
        for j in 0..tgt.num_stars() {
            out.push(mk(vec![ActingObject::Star(j); n as usize + 1], Vec::new()));
        }
        for f in ordinal::enumerate_maps(n, m) {
            out.push(mk(levels(f.values()), Vec::new()));
        }
        return out;
    }
    let k = src.k as usize;
    let level_maps = ordinal::enumerate_maps(n, m);
    for x in 0..tgt.num_objects() {
        let alphas: Vec<Vec<ActingObject>> = match tgt.moment(x) {
            ActingObject::Star(j) => vec![vec![ActingObject::Star(j); n as usize + 1]],
            ActingObject::Level(u) => {
                level_maps.iter().filter(|f| f.values()[0] == u).map(|f| levels(f.values())).collect()
            }
        };
        if alphas.is_empty() {
            continue;
        }
        let anc = tgt.ancestors(x);
        for chain in multichains(anc.len(), k) {
            let mut beta: Vec<usize> = chain.iter().map(|&p| anc[p]).collect();
            beta.push(x);
            for a in &alphas {
                out.push(mk(a.clone(), beta.clone()));
            }
        }
    }
    out
}

fn level_map(f: &DadMorphism) -> OrdinalMap {
    let vals: Vec<u32> = f.alpha.iter().map(|o| o.level().expect("alpha lands in levels")).collect();
    OrdinalMap::new(f.src.n as i32, f.tgt.n as i32, vals).expect("monotone")
}

/// The unique factorization into a minus map followed by a plus map.
///
/// When `beta(k)` is one of the base objects `0..l-1`, `alpha` is constant at a
/// star and the map factors through ⟨0↻z⟩; otherwise both components factor
/// epi-mono in Δ and the map factors through ⟨y↻z⟩. For `k = -1` there is no
/// `beta`, and a constant star `alpha` factors through ⟨0↻-1⟩.
pub fn reedy_factorize(f: &DadMorphism) -> (DadMorphism, DadMorphism) {
    let n = f.src.n as usize;
    let mut image = f.beta.clone();
    image.dedup();
    let z = image.len() as i32 - 1;
    let mut beta_epi = Vec::with_capacity(f.beta.len());
    let mut idx = 0usize;
    for (i, &b) in f.beta.iter().enumerate() {
        if i > 0 && b != f.beta[i - 1] {
            idx += 1;
        }
        beta_epi.push(idx);
    }
    let through_star = match f.beta.last() {
        Some(&b) => matches!(f.tgt.names[b], ActedName::Base(j) if (j as i32) < f.tgt.k),
        None => matches!(f.alpha[0], ActingObject::Star(_)),
    };
    if through_star {
        let mid = DadObject::get(0, z);
        let minus = DadMorphism {
            src: f.src.clone(),
            tgt: mid.clone(),
            alpha: vec![ActingObject::Level(0); n + 1],
            beta: beta_epi,
        };
        let plus = DadMorphism { src: mid, tgt: f.tgt.clone(), alpha: vec![f.alpha[0]], beta: image };
        return (minus, plus);
    }
    let (epi, mono) = ordinal::epi_mono_factorize(&level_map(f));
    let mid = DadObject::get(epi.tgt() as u32, z);
    let minus = DadMorphism { src: f.src.clone(), tgt: mid.clone(), alpha: levels(epi.values()), beta: beta_epi };
    let plus = DadMorphism { src: mid, tgt: f.tgt.clone(), alpha: levels(mono.values()), beta: image };
    (minus, plus)
}

/// Completes two minus maps out of a common source to a commuting square of
/// minus maps, by pushing out the level parts in Δ and the base parts in Δ_◇.
pub fn elegance_pushout(f: &DadMorphism, g: &DadMorphism) -> Result<(DadMorphism, DadMorphism)> {
    if (f.src.n, f.src.k) != (g.src.n, g.src.k) {
        return Err(Error::Composition("pushout of maps with different sources".into()));
    }
    if !f.is_minus() || !g.is_minus() {
        return Err(Error::InvalidMorphism("pushout requires two minus maps".into()));
    }
    let base = |h: &DadMorphism| -> Result<OrdinalMap> {
        let vals = h
            .beta
            .iter()
            .map(|&x| match h.tgt.names[x] {
                ActedName::Base(j) => Ok(j),
                _ => Err(Error::InvalidMorphism("minus map with beta outside the base".into())),
            })
            .collect::<Result<Vec<u32>>>()?;
        OrdinalMap::new(h.src.k, h.tgt.k, vals)
    };
    let (d1, d2) = ordinal::pushout_of_epis(&level_map(f), &level_map(g))?;
    let (g1, g2) = ordinal::pushout_of_epis(&base(f)?, &base(g)?)?;
    let apex = DadObject::get(d1.tgt() as u32, g1.tgt());
    let leg = |d: &OrdinalMap, b: &OrdinalMap, from: &Arc<DadObject>| {
        DadMorphism::new(
            from.clone(),
            apex.clone(),
            levels(d.values()),
            b.values().iter().map(|&v| v as usize).collect(),
        )
    };
    Ok((leg(&d1, &g1, &f.tgt)?, leg(&d2, &g2, &g.tgt)?))
}

/// Size of the hom-set as described by pairs of ordinal maps
/// `σ: [y] → [a]`, `τ: [z] → [b]` with `σ(0) = μ(τ(z))`.
pub fn split_hom_count(y: u32, z: i32, a: u32, b: i32) -> usize {
    let sigmas = ordinal::enumerate_maps(y as i32, a as i32);
    let taus = ordinal::enumerate_maps(z, b);
    let mut count = 0;
    for s in &sigmas {
        for t in &taus {
            let ok = match t.values().last() {
                None => true,
                // τ(z) = b has moment 0; every other base object has a star moment
                Some(&last) => last as i32 == b && s.values()[0] == 0,
            };
            count += usize::from(ok);
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn obj(n: u32, k: i32) -> Arc<DadObject> {
        DadObject::get(n, k)
    }

    #[test]
    fn small_objects() {
        let o = obj(0, 2);
        assert_eq!(o.num_objects(), 3);
        assert_eq!(
            (0..3).map(|x| o.moment(x)).collect::<Vec<_>>(),
            vec![ActingObject::Star(0), ActingObject::Star(1), ActingObject::Level(0)]
        );
        assert_eq!(o.degree(), 3);
        let o = obj(1, 2);
        assert_eq!(o.num_objects(), 6);
        assert!((3..6).all(|x| o.moment(x) == ActingObject::Level(1)));
        assert_eq!(obj(2, 2).num_objects(), 15);
        assert_eq!(obj(2, 2).degree(), 17);
        assert_eq!(obj(0, -1).degree(), 0);
        assert_eq!(obj(3, -1).num_objects(), 0);
    }

    #[test]
    fn names_are_canonical() {
        let o = obj(1, 1);
        let names: Vec<String> = (0..o.num_objects()).map(|x| o.name(x)).collect();
        assert_eq!(names, vec!["0", "1", "(1,0->1)", "(1,1->1)"]);
    }

    #[test]
    fn action_iterates_generators() {
        let o = obj(2, 0);
        // p_{0,2} • id_0 = p_{1,2} • (p_{0,1} • id_0)
        let once = o.act(0, 1, 0, 0).unwrap();
        let twice = o.act(1, 2, 0, once).unwrap();
        assert_eq!(o.act(0, 2, 0, 0), Some(twice));
        assert_eq!(o.act(0, 0, 0, 0), Some(0));
        assert_eq!(o.act(1, 2, 0, 0), None);
    }

    #[test]
    fn hom_counts() {
        assert_eq!(hom(&obj(0, 1), &obj(0, 1)).len(), 3);
        for (n, k) in [(0, 0), (1, 1), (2, 2), (1, -1)] {
            let t = obj(n, k);
            assert_eq!(hom(&obj(0, 0), &t).len(), t.num_objects(), "{n}:{k}");
        }
        let homs = hom(&obj(1, 1), &obj(1, 1));
        assert_eq!(homs.iter().filter(|f| f.is_identity()).count(), 1);
        // k = -1: stars plus monotone maps
        assert_eq!(hom(&obj(1, -1), &obj(1, 2)).len(), 2 + 3);
    }

    #[test]
    fn hat_of_identity_is_identity() {
        for (n, k) in [(0, 0), (2, 1), (1, 3), (2, -1)] {
            let o = obj(n, k);
            let h = DadMorphism::identity(&o).hat();
            assert_eq!(h.acted, (0..o.num_objects()).collect::<Vec<_>>());
            assert_eq!(h.acting, o.acting_objects());
        }
    }

    #[test]
    fn hat_along_a_face() {
        // α = (0,2): ⟨1↻1⟩ → ⟨2↻1⟩, β = identity on [1]
        let f = DadMorphism::new(obj(1, 1), obj(2, 1), levels(&[0, 2]), vec![0, 1]).unwrap();
        let h = f.hat();
        let t = obj(2, 1);
        // the stage-1 object over 0->1 goes to the stage-2 object over p_{1,2}•(p_{0,1}•(0->1))
        let heart =
            obj(1, 1).names.iter().position(|n| *n == ActedName::Stage { stage: 1, source: 0, target: 1 }).unwrap();
        assert_eq!(t.name(h.acted[heart]), "(2,0->(1,0->1))");
    }

    #[test]
    fn classification_examples() {
        let id = DadMorphism::identity(&obj(1, 1));
        assert_eq!(id.classify(), Classification::Identity);
        let degeneracy = DadMorphism::new(obj(1, 1), obj(0, 1), levels(&[0, 0]), vec![0, 1]).unwrap();
        assert_eq!(degeneracy.classify(), Classification::Minus);
        let face = DadMorphism::new(obj(0, 1), obj(1, 1), levels(&[0]), vec![0, 1]).unwrap();
        assert_eq!(face.classify(), Classification::Plus);
    }

    #[test]
    fn factorization_cases() {
        let face = DadMorphism::new(obj(0, 1), obj(1, 1), levels(&[0]), vec![0, 1]).unwrap();
        let (m, p) = reedy_factorize(&face);
        assert!(m.is_identity());
        assert_eq!(p, face);
        // β(0) = 0 is a base object below the top: case through ⟨0↻0⟩
        let f = DadMorphism::new(obj(1, 0), obj(1, 1), vec![ActingObject::Star(0); 2], vec![0]).unwrap();
        let (m, p) = reedy_factorize(&f);
        assert_eq!((m.tgt().n(), m.tgt().k()), (0, 0));
        assert_eq!(compose(&m, &p).unwrap(), f);
        assert!(m.is_minus() && p.is_plus());
    }

    #[test]
    fn pushouts() {
        let a = obj(2, 0);
        let c1 = DadMorphism::new(a.clone(), obj(1, 0), levels(&[0, 0, 1]), vec![0]).unwrap();
        let c2 = DadMorphism::new(a.clone(), obj(1, 0), levels(&[0, 1, 1]), vec![0]).unwrap();
        let (t1, t2) = elegance_pushout(&c1, &c2).unwrap();
        assert_eq!((t1.tgt().n(), t1.tgt().k()), (0, 0));
        assert_eq!(compose(&c1, &t1).unwrap(), compose(&c2, &t2).unwrap());
        let (t1, t2) = elegance_pushout(&c1, &c1).unwrap();
        assert!(t1.is_identity() && t2.is_identity());
    }

    #[test]
    fn split_description_differs_from_universal_property() {
        assert_eq!(hom(&obj(0, 0), &obj(1, 0)).len(), 2);
        assert_eq!(split_hom_count(0, 0, 1, 0), 1);
    }

    #[test]
    fn action_axioms_hold() {
        for (n, k) in [(0, 0), (1, 1), (2, 1), (1, 2), (2, -1)] {
            let a = obj(n, k).to_cat_action();
            let r = crate::fincat::check_cat_action(&a);
            assert!(r.is_ok(), "{n}:{k}: {r}");
        }
    }

    #[test]
    fn object_literals() {
        assert_eq!(parse_object("2:-1").unwrap(), (2, -1));
        assert!(parse_object("2:-2").is_err());
        assert!(parse_object("x").is_err());
    }
}
