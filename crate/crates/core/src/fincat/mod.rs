//! Explicit finite categories and colored operads, actions of categories on
//! them, and table-scan checkers for every action axiom.
//!
//! Composition is stored in diagrammatic order: `compose(f, g)` is "first `f`,
//! then `g`", defined when `tgt(f) == src(g)`. Moments live on objects (or
//! colors); the moment of a morphism is the moment of its target.

pub mod json;
pub mod search;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub detail: String,
}

/// The outcome of an axiom check: empty iff every law holds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, axiom: &str, detail: String) {
        self.violations.push(Violation { axiom: axiom.to_string(), detail });
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.violations.extend(other.violations);
    }

    pub fn has(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{}: {}", v.axiom, v.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category given by explicit tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinCategory {
    pub objects: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub identity: Vec<usize>,
    /// `(f, g) ↦ f;g`, keyed in diagrammatic order.
    pub compose: BTreeMap<(usize, usize), usize>,
}

impl FinCategory {
    /// A category with the given non-identity arrows and a composition table
    /// for non-identity pairs; identities and unit composites are filled in.
    pub fn from_generators(
        objects: Vec<String>,
        arrows: Vec<(String, usize, usize)>,
        table: &[(usize, usize, usize)],
    ) -> Self {
        let mut all: Vec<Arrow> =
            objects.iter().enumerate().map(|(i, o)| Arrow { name: format!("id_{o}"), src: i, tgt: i }).collect();
        let identity: Vec<usize> = (0..objects.len()).collect();
        let offset = all.len();
        all.extend(arrows.into_iter().map(|(name, src, tgt)| Arrow { name, src, tgt }));
        let mut compose = BTreeMap::new();
        for (i, a) in all.iter().enumerate() {
            compose.insert((identity[a.src], i), i);
            compose.insert((i, identity[a.tgt]), i);
        }
        for &(f, g, h) in table {
            compose.insert((f + offset, g + offset), h + offset);
        }
        FinCategory { objects, arrows: all, identity, compose }
    }

    /// Only identity arrows.
    pub fn discrete(n: usize) -> Self {
        Self::from_generators((0..n).map(|i| format!("q{i}")).collect(), Vec::new(), &[])
    }

    /// The poset `[n]` as a category, with one arrow `i->j` for each `i <= j`.
    pub fn ordinal(n: usize) -> Self {
        let objects: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
        let mut arrows = Vec::new();
        let mut index = BTreeMap::new();
        for i in 0..=n {
            for j in i + 1..=n {
                index.insert((i, j), arrows.len());
                arrows.push((format!("{i}->{j}"), i, j));
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
        Self::from_generators(objects, arrows, &table)
    }

    /// The cyclic group of order `n` as a one-object category; arrow `i` is
    /// the element `i`, with arrow 0 the identity.
    pub fn cyclic_group(n: usize) -> Self {
        let arrows = (1..n).map(|i| (format!("g{i}"), 0, 0)).collect();
        let mut table = Vec::new();
        for a in 1..n {
            for b in 1..n {
                let c = (a + b) % n;
                if c != 0 {
                    table.push((a - 1, b - 1, c - 1));
                }
            }
        }
        let mut cat = Self::from_generators(vec!["*".into()], arrows, &table);
        for a in 1..n {
            let b = n - a;
            cat.compose.insert((a, b), 0);
        }
        cat
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn src(&self, f: usize) -> usize {
        self.arrows[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.arrows[f].tgt
    }

    /// First `f`, then `g`.
    pub fn then(&self, f: usize, g: usize) -> Option<usize> {
        self.compose.get(&(f, g)).copied()
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.arrows[f].src] == f
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects.iter().position(|o| o == name).ok_or_else(|| Error::UnknownName(name.into()))
    }

    /// All composable strings `x_0 -> ... -> x_n` as arrow lists of length `n`
    /// (for `n = 0`, one string per object, encoded as its identity).
    pub fn strings(&self, n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return self.identity.iter().map(|&i| vec![i]).collect();
        }
        let mut out: Vec<Vec<usize>> = (0..self.num_arrows()).map(|f| vec![f]).collect();
        for _ in 1..n {
            let mut next = Vec::new();
            for s in &out {
                let last = *s.last().unwrap();
                for g in 0..self.num_arrows() {
                    if self.src(g) == self.tgt(last) {
                        let mut t = s.clone();
                        t.push(g);
                        next.push(t);
                    }
                }
            }
            out = next;
        }
        out
    }
}

pub fn check_category_axioms(cat: &FinCategory) -> AxiomReport {
    let mut r = AxiomReport::default();
    let name = |f: usize| &cat.arrows[f].name;
    for (o, &i) in cat.identity.iter().enumerate() {
        if cat.src(i) != o || cat.tgt(i) != o {
            r.push("identity", format!("{} is not an endomorphism of {}", name(i), cat.objects[o]));
        }
    }
    let n = cat.num_arrows();
    for f in 0..n {
        for g in 0..n {
            let composable = cat.tgt(f) == cat.src(g);
            match (composable, cat.then(f, g)) {
                (true, None) => r.push("composition", format!("{};{} is undefined", name(f), name(g))),
                (false, Some(_)) => {
                    r.push("composition", format!("{};{} defined on non-composable pair", name(f), name(g)))
                }
                (true, Some(h)) if cat.src(h) != cat.src(f) || cat.tgt(h) != cat.tgt(g) => {
                    r.push("composition", format!("{};{} = {} has wrong endpoints", name(f), name(g), name(h)))
                }
                _ => {}
            }
        }
    }
    for f in 0..n {
        let (s, t) = (cat.identity[cat.src(f)], cat.identity[cat.tgt(f)]);
        if cat.then(s, f) != Some(f) {
            r.push("left unit", format!("id;{} != {}", name(f), name(f)));
        }
        if cat.then(f, t) != Some(f) {
            r.push("right unit", format!("{};id != {}", name(f), name(f)));
        }
    }
    for (&(f, g), &fg) in &cat.compose {
        for h in 0..n {
            if let Some(gh) = cat.then(g, h) {
                let left = cat.then(fg, h);
                let right = cat.then(f, gh);
                if left != right {
                    r.push(
                        "associativity",
                        format!("({};{});{} != {};({};{})", name(f), name(g), name(h), name(f), name(g), name(h)),
                    );
                }
            }
        }
    }
    r
}

/// An action of a category on a finite set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetAction {
    pub acting: FinCategory,
    pub elements: Vec<String>,
    pub moment: Vec<usize>,
    /// `(f, a) ↦ f•a`, defined when `src(f) == moment[a]`.
    pub action: BTreeMap<(usize, usize), usize>,
}

fn check_action_table(
    r: &mut AxiomReport,
    acting: &FinCategory,
    n_elems: usize,
    moment: &dyn Fn(usize) -> usize,
    action: &BTreeMap<(usize, usize), usize>,
    elem_name: &dyn Fn(usize) -> String,
) {
    let an = |f: usize| acting.arrows[f].name.clone();
    for f in 0..acting.num_arrows() {
        for a in 0..n_elems {
            let defined = acting.src(f) == moment(a);
            match (defined, action.get(&(f, a))) {
                (true, None) => r.push("action domain", format!("{}•{} is undefined", an(f), elem_name(a))),
                (false, Some(_)) => {
                    r.push("action domain", format!("{}•{} is defined but s(f) != μ", an(f), elem_name(a)))
                }
                (true, Some(&b)) if moment(b) != acting.tgt(f) => r.push(
                    "moment respects action",
                    format!(
                        "μ({}•{}) = {} but t({}) = {}",
                        an(f),
                        elem_name(a),
                        acting.objects[moment(b)],
                        an(f),
                        acting.objects[acting.tgt(f)]
                    ),
                ),
                _ => {}
            }
        }
    }
    for a in 0..n_elems {
        let id = acting.identity[moment(a)];
        if let Some(&b) = action.get(&(id, a)) {
            if b != a {
                r.push("identity acts trivially", format!("id•{} = {}", elem_name(a), elem_name(b)));
            }
        }
    }
    for (&(f, a), &fa) in action {
        for g in 0..acting.num_arrows() {
            let Some(fg) = acting.then(f, g) else { continue };
            let left = action.get(&(g, fa));
            let right = action.get(&(fg, a));
            if left.is_some() && right.is_some() && left != right {
                r.push(
                    "associativity of action",
                    format!("{}•({}•{}) != ({};{})•{}", an(g), an(f), elem_name(a), an(f), an(g), elem_name(a)),
                );
            }
        }
    }
}

pub fn check_set_action(action: &SetAction) -> AxiomReport {
    let mut r = check_category_axioms(&action.acting);
    check_action_table(&mut r, &action.acting, action.elements.len(), &|a| action.moment[a], &action.action, &|a| {
        action.elements[a].clone()
    });
    r
}

/// An action of a finite category on a finite category. The moment is given
/// on objects; `arrow_moment` may additionally state moments of arrows, which
/// are then checked against the moment of their target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatAction {
    pub acting: FinCategory,
    pub acted: FinCategory,
    pub moment: Vec<usize>,
    pub arrow_moment: BTreeMap<usize, usize>,
    /// `(f, g) ↦ f•g` for arrows `f` of `acting` and `g` of `acted`.
    pub action: BTreeMap<(usize, usize), usize>,
}

impl CatAction {
    pub fn arrow_moment_of(&self, g: usize) -> usize {
        self.moment[self.acted.tgt(g)]
    }

    pub fn act(&self, f: usize, g: usize) -> Option<usize> {
        self.action.get(&(f, g)).copied()
    }

    /// A category acting on itself by composition: `μ(g) = t(g)`, `f•g = g;f`.
    pub fn self_composition(cat: FinCategory) -> Self {
        let mut action = BTreeMap::new();
        for f in 0..cat.num_arrows() {
            for g in 0..cat.num_arrows() {
                if let Some(h) = cat.then(g, f) {
                    action.insert((f, g), h);
                }
            }
        }
        let moment = (0..cat.num_objects()).collect();
        CatAction { acting: cat.clone(), acted: cat, moment, arrow_moment: BTreeMap::new(), action }
    }

    /// A one-object category (a monoid) acting on itself by conjugation.
    /// Only meaningful when every arrow is invertible.
    pub fn conjugation(group: FinCategory) -> Self {
        assert_eq!(group.num_objects(), 1);
        let n = group.num_arrows();
        let inverse = |a: usize| (0..n).find(|&b| group.then(a, b) == Some(group.identity[0])).expect("not a group");
        let mut action = BTreeMap::new();
        for f in 0..n {
            for g in 0..n {
                // f g f^{-1}, i.e. first f^{-1}, then g, then f.
                let h = group.then(group.then(inverse(f), g).unwrap(), f).unwrap();
                action.insert((f, g), h);
            }
        }
        CatAction { acting: group.clone(), acted: group, moment: vec![0], arrow_moment: BTreeMap::new(), action }
    }

    /// `acting` acts on `acted` with every arrow acting as the identity and
    /// every moment at `base`. Lawful only when `acting` has a single object.
    pub fn trivial(acting: FinCategory, acted: FinCategory, base: usize) -> Self {
        let mut action = BTreeMap::new();
        for f in 0..acting.num_arrows() {
            if acting.src(f) != base {
                continue;
            }
            for g in 0..acted.num_arrows() {
                action.insert((f, g), g);
            }
        }
        let moment = vec![base; acted.num_objects()];
        CatAction { acting, acted, moment, arrow_moment: BTreeMap::new(), action }
    }
}

pub fn check_cat_action(a: &CatAction) -> AxiomReport {
    let mut r = check_category_axioms(&a.acting);
    r.merge(check_category_axioms(&a.acted));
    let gn = |g: usize| a.acted.arrows[g].name.clone();
    for (&g, &m) in &a.arrow_moment {
        if m != a.arrow_moment_of(g) {
            r.push(
                "moment of a morphism is the moment of its target",
                format!("μ({}) given as {}", gn(g), a.acting.objects[m]),
            );
        }
    }
    let mom = |g: usize| a.arrow_moment.get(&g).copied().unwrap_or_else(|| a.arrow_moment_of(g));
    check_action_table(&mut r, &a.acting, a.acted.num_arrows(), &mom, &a.action, &gn);
    for (&(g, g2), &h) in &a.acted.compose {
        // μ of "first g, then g2" must equal μ of g2 (the later arrow).
        if mom(h) != mom(g2) {
            r.push("moment of composite", format!("μ({};{}) != μ({})", gn(g), gn(g2), gn(g2)));
        }
    }
    for (&(f, g), &fg) in &a.action {
        if a.acted.src(fg) != a.acted.src(g) {
            r.push("source preserved", format!("s({}•{}) != s({})", a.acting.arrows[f].name, gn(g), gn(g)));
        }
    }
    r
}

/// A morphism of category actions: a functor on the acting side and one on
/// the acted side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionMorphism {
    pub acting_objects: Vec<usize>,
    pub acting_arrows: Vec<usize>,
    pub acted_objects: Vec<usize>,
    pub acted_arrows: Vec<usize>,
}

impl ActionMorphism {
    pub fn identity(a: &CatAction) -> Self {
        ActionMorphism {
            acting_objects: (0..a.acting.num_objects()).collect(),
            acting_arrows: (0..a.acting.num_arrows()).collect(),
            acted_objects: (0..a.acted.num_objects()).collect(),
            acted_arrows: (0..a.acted.num_arrows()).collect(),
        }
    }
}

fn check_functor(r: &mut AxiomReport, label: &str, c: &FinCategory, d: &FinCategory, obj: &[usize], arr: &[usize]) {
    if obj.len() != c.num_objects() || arr.len() != c.num_arrows() {
        r.push("functor", format!("{label}: table sizes do not match the source category"));
        return;
    }
    for f in 0..c.num_arrows() {
        if d.src(arr[f]) != obj[c.src(f)] || d.tgt(arr[f]) != obj[c.tgt(f)] {
            r.push("functor", format!("{label}: {} sent to an arrow with wrong endpoints", c.arrows[f].name));
        }
    }
    for (o, &i) in c.identity.iter().enumerate() {
        if arr[i] != d.identity[obj[o]] {
            r.push("functor", format!("{label}: identity of {} not preserved", c.objects[o]));
        }
    }
    for (&(f, g), &h) in &c.compose {
        if d.then(arr[f], arr[g]) != Some(arr[h]) {
            r.push("functor", format!("{label}: composite {};{} not preserved", c.arrows[f].name, c.arrows[g].name));
        }
    }
}

pub fn check_action_morphism(x: &ActionMorphism, src: &CatAction, tgt: &CatAction) -> AxiomReport {
    let mut r = AxiomReport::default();
    check_functor(&mut r, "acting", &src.acting, &tgt.acting, &x.acting_objects, &x.acting_arrows);
    check_functor(&mut r, "acted", &src.acted, &tgt.acted, &x.acted_objects, &x.acted_arrows);
    if !r.is_ok() {
        return r;
    }
    for o in 0..src.acted.num_objects() {
        if tgt.moment[x.acted_objects[o]] != x.acting_objects[src.moment[o]] {
            r.push("moment intertwined", format!("μ X({}) != X μ({})", src.acted.objects[o], src.acted.objects[o]));
        }
    }
    for (&(f, g), &fg) in &src.action {
        let image = tgt.act(x.acting_arrows[f], x.acted_arrows[g]);
        if image != Some(x.acted_arrows[fg]) {
            r.push(
                "action intertwined",
                format!(
                    "X({}•{}) != X({})•X({})",
                    src.acting.arrows[f].name,
                    src.acted.arrows[g].name,
                    src.acting.arrows[f].name,
                    src.acted.arrows[g].name
                ),
            );
        }
    }
    r
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Operation {
    pub name: String,
    pub sources: Vec<usize>,
    pub target: usize,
}

/// A finite colored operad given by explicit tables. Compositions outside
/// the table are treated as absent (truncated operads are allowed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinOperad {
    pub colors: Vec<String>,
    pub operations: Vec<Operation>,
    pub identity: Vec<usize>,
    /// `(g, [g_1, ..., g_k]) ↦ γ(g; g_1, ..., g_k)`.
    pub gamma: BTreeMap<(usize, Vec<usize>), usize>,
    /// `(σ, g) ↦ σ*g`, whose sources are `s(g)_{σ(i)}`.
    pub symmetric: Option<BTreeMap<(Vec<usize>, usize), usize>>,
}

impl FinOperad {
    /// The one-colored associative operad with one operation of each arity up to `max_arity`.
    pub fn associative(max_arity: usize) -> Self {
        let ops: Vec<Operation> =
            (0..=max_arity).map(|k| Operation { name: format!("m{k}"), sources: vec![0; k], target: 0 }).collect();
        let mut gamma = BTreeMap::new();
        for k in 0..=max_arity {
            let mut inputs: Vec<Vec<usize>> = vec![Vec::new()];
            for _ in 0..k {
                inputs = inputs
                    .into_iter()
                    .flat_map(|v| (0..=max_arity).map(move |a| [v.clone(), vec![a]].concat()))
                    .collect();
            }
            for ins in inputs {
                let total: usize = ins.iter().sum();
                if total <= max_arity {
                    gamma.insert((k, ins), total);
                }
            }
        }
        FinOperad { colors: vec!["c".into()], operations: ops, identity: vec![1], gamma, symmetric: None }
    }

    pub fn arity(&self, g: usize) -> usize {
        self.operations[g].sources.len()
    }
}

/// Apply a permutation to a source tuple: position `i` receives `s[σ(i)]`.
pub fn permute<T: Clone>(sigma: &[usize], s: &[T]) -> Vec<T> {
    sigma.iter().map(|&i| s[i].clone()).collect()
}

pub fn check_operad_axioms(o: &FinOperad) -> AxiomReport {
    let mut r = AxiomReport::default();
    let name = |g: usize| o.operations[g].name.clone();
    for (c, &i) in o.identity.iter().enumerate() {
        let op = &o.operations[i];
        if op.sources != vec![c] || op.target != c {
            r.push("identity", format!("{} is not a unary endo-operation of {}", op.name, o.colors[c]));
        }
    }
    for (&(g, ref ins), &h) in &o.gamma {
        let og = &o.operations[g];
        if ins.len() != og.sources.len() || ins.iter().zip(&og.sources).any(|(&i, &c)| o.operations[i].target != c) {
            r.push("composition", format!("γ({}; ...) defined on a non-composable tuple", name(g)));
            continue;
        }
        let expected: Vec<usize> = ins.iter().flat_map(|&i| o.operations[i].sources.clone()).collect();
        if o.operations[h].sources != expected || o.operations[h].target != og.target {
            r.push("composition", format!("γ({}; ...) = {} has the wrong profile", name(g), name(h)));
        }
    }
    for g in 0..o.operations.len() {
        let op = &o.operations[g];
        let left = o.gamma.get(&(o.identity[op.target], vec![g]));
        if left.is_some() && left != Some(&g) {
            r.push("unit", format!("γ(id; {}) != {}", name(g), name(g)));
        }
        let ids: Vec<usize> = op.sources.iter().map(|&c| o.identity[c]).collect();
        let right = o.gamma.get(&(g, ids));
        if right.is_some() && right != Some(&g) {
            r.push("unit", format!("γ({}; id, ..., id) != {}", name(g), name(g)));
        }
    }
    // Associativity: γ(γ(g; g_i); h_j) = γ(g; γ(g_i; h_{j in block i})).
    for (&(g, ref ins), &gi) in &o.gamma {
        let n_inner = o.operations[gi].sources.len();
        let mut all_hs: Vec<Vec<usize>> = vec![Vec::new()];
        for j in 0..n_inner {
            let c = o.operations[gi].sources[j];
            let choices: Vec<usize> = (0..o.operations.len()).filter(|&h| o.operations[h].target == c).collect();
            all_hs =
                all_hs.into_iter().flat_map(|v| choices.iter().map(move |&h| [v.clone(), vec![h]].concat())).collect();
            if all_hs.len() > 4096 {
                break;
            }
        }
        for hs in all_hs.into_iter().filter(|h| h.len() == n_inner) {
            let Some(&left) = o.gamma.get(&(gi, hs.clone())) else { continue };
            let mut pos = 0;
            let mut inner = Vec::new();
            let mut complete = true;
            for &i in ins {
                let k = o.operations[i].sources.len();
                match o.gamma.get(&(i, hs[pos..pos + k].to_vec())) {
                    Some(&x) => inner.push(x),
                    None => complete = false,
                }
                pos += k;
            }
            if !complete {
                continue;
            }
            if let Some(&right) = o.gamma.get(&(g, inner)) {
                if right != left {
                    r.push("associativity", format!("γ is not associative at {}", name(g)));
                }
            }
        }
    }
    if let Some(sym) = &o.symmetric {
        for (&(ref sigma, g), &h) in sym {
            if o.operations[h].sources != permute(sigma, &o.operations[g].sources)
                || o.operations[h].target != o.operations[g].target
            {
                r.push("symmetric action", format!("σ*{} has the wrong profile", name(g)));
            }
            let id: Vec<usize> = (0..sigma.len()).collect();
            if *sigma == id && h != g {
                r.push("symmetric action", format!("id*{} != {}", name(g), name(g)));
            }
            for (&(ref tau, g2), &h2) in sym {
                if g2 != h || tau.len() != sigma.len() {
                    continue;
                }
                // τ*(σ*g) = (σ∘τ)*g
                let st: Vec<usize> = tau.iter().map(|&i| sigma[i]).collect();
                if let Some(&direct) = sym.get(&(st, g)) {
                    if direct != h2 {
                        r.push("symmetric action", format!("action of permutations on {} is not functorial", name(g)));
                    }
                }
            }
        }
    }
    r
}

/// An action of a finite category on a finite colored operad.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpAction {
    pub acting: FinCategory,
    pub acted: FinOperad,
    pub moment: Vec<usize>,
    /// `(f, g) ↦ f•g` for arrows `f` and operations `g`.
    pub action: BTreeMap<(usize, usize), usize>,
}

impl OpAction {
    pub fn trivial(acting: FinCategory, acted: FinOperad, base: usize) -> Self {
        let mut action = BTreeMap::new();
        for f in (0..acting.num_arrows()).filter(|&f| acting.src(f) == base) {
            for g in 0..acted.operations.len() {
                action.insert((f, g), g);
            }
        }
        let moment = vec![base; acted.colors.len()];
        OpAction { acting, acted, moment, action }
    }
}

pub fn check_op_action(a: &OpAction) -> AxiomReport {
    let mut r = check_category_axioms(&a.acting);
    r.merge(check_operad_axioms(&a.acted));
    let o = &a.acted;
    let gn = |g: usize| o.operations[g].name.clone();
    let mom = |g: usize| a.moment[o.operations[g].target];
    check_action_table(&mut r, &a.acting, o.operations.len(), &mom, &a.action, &gn);
    for (&(g, _), &h) in &o.gamma {
        if mom(h) != mom(g) {
            r.push("moment of composite", format!("μ(γ({}; ...)) != μ({})", gn(g), gn(g)));
        }
    }
    for (&(f, g), &fg) in &a.action {
        if o.operations[fg].sources != o.operations[g].sources {
            r.push("source preserved", format!("s({}•{}) != s({})", a.acting.arrows[f].name, gn(g), gn(g)));
        }
    }
    if let Some(sym) = &o.symmetric {
        for (&(ref sigma, g), &sg) in sym {
            for f in 0..a.acting.num_arrows() {
                let (Some(&fg), Some(&fsg)) = (a.action.get(&(f, g)), a.action.get(&(f, sg))) else { continue };
                if sym.get(&(sigma.clone(), fg)) != Some(&fsg) {
                    r.push(
                        "symmetric action commutes",
                        format!(
                            "σ*({}•{}) != {}•(σ*{})",
                            a.acting.arrows[f].name,
                            gn(g),
                            a.acting.arrows[f].name,
                            gn(g)
                        ),
                    );
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_categories_are_lawful() {
        assert!(check_category_axioms(&FinCategory::discrete(1)).is_ok());
        let one = FinCategory::ordinal(1);
        assert_eq!(one.num_arrows(), 3);
        assert!(check_category_axioms(&one).is_ok());
        assert!(check_category_axioms(&FinCategory::ordinal(3)).is_ok());
        assert!(check_category_axioms(&FinCategory::cyclic_group(2)).is_ok());
        assert!(check_category_axioms(&FinCategory::cyclic_group(3)).is_ok());
    }

    #[test]
    fn injected_unit_violation_is_named() {
        let mut c = FinCategory::ordinal(1);
        let f = c.arrow_index("0->1").unwrap();
        let id1 = c.identity[1];
        c.compose.insert((f, id1), c.identity[0]);
        let r = check_category_axioms(&c);
        assert!(r.has("right unit"));
        assert!(r.violations.iter().any(|v| v.detail.contains("0->1")));
    }

    #[test]
    fn set_actions() {
        let trivial = SetAction {
            acting: FinCategory::discrete(1),
            elements: vec!["pt".into()],
            moment: vec![0],
            action: BTreeMap::from([((0, 0), 0)]),
        };
        assert!(check_set_action(&trivial).is_ok());
        // Z/2 acting on itself by translation.
        let g = FinCategory::cyclic_group(2);
        let mut action = BTreeMap::new();
        for f in 0..2 {
            for a in 0..2 {
                action.insert((f, a), (f + a) % 2);
            }
        }
        let z2 = SetAction { acting: g, elements: vec!["e".into(), "s".into()], moment: vec![0, 0], action };
        assert!(check_set_action(&z2).is_ok());
        // μ(f•a) != t(f)
        let bad = SetAction {
            acting: FinCategory::ordinal(1),
            elements: vec!["a".into(), "b".into()],
            moment: vec![0, 0],
            action: BTreeMap::from([((0, 0), 0), ((0, 1), 1), ((2, 0), 1), ((2, 1), 1)]),
        };
        assert!(check_set_action(&bad).has("moment respects action"));
    }

    #[test]
    fn category_actions() {
        assert!(check_cat_action(&CatAction::self_composition(FinCategory::ordinal(1))).is_ok());
        assert!(check_cat_action(&CatAction::self_composition(FinCategory::ordinal(2))).is_ok());
        assert!(check_cat_action(&CatAction::conjugation(FinCategory::cyclic_group(2))).is_ok());
        assert!(check_cat_action(&CatAction::conjugation(FinCategory::cyclic_group(3))).is_ok());
        // a nontrivial action on a discrete category breaks s(f•g) = s(g)
        let mut a = CatAction::trivial(FinCategory::cyclic_group(2), FinCategory::discrete(2), 0);
        a.action.insert((1, 0), 1);
        a.action.insert((1, 1), 0);
        let r = check_cat_action(&a);
        assert!(r.has("source preserved"));
    }

    #[test]
    fn stated_arrow_moments_are_checked() {
        let mut a = CatAction::self_composition(FinCategory::ordinal(1));
        let f = a.acted.arrow_index("0->1").unwrap();
        a.arrow_moment.insert(f, 0);
        assert!(check_cat_action(&a).has("moment of a morphism is the moment of its target"));
    }

    #[test]
    fn action_morphisms() {
        let conj = CatAction::conjugation(FinCategory::cyclic_group(2));
        assert!(check_action_morphism(&ActionMorphism::identity(&conj), &conj, &conj).is_ok());
        let triv = CatAction::trivial(FinCategory::cyclic_group(2), FinCategory::discrete(1), 0);
        let proj = ActionMorphism {
            acting_objects: vec![0],
            acting_arrows: vec![0, 1],
            acted_objects: vec![0],
            acted_arrows: vec![0, 0],
        };
        assert!(check_action_morphism(&proj, &conj, &triv).is_ok());
        // Z/2 acting trivially on a point, mapped into an action whose moment
        // sits at a different object than the image of the acting object.
        let src = CatAction::trivial(FinCategory::cyclic_group(2), FinCategory::discrete(1), 0);
        let tgt = CatAction::trivial(FinCategory::discrete(2), FinCategory::discrete(1), 1);
        let bad = ActionMorphism {
            acting_objects: vec![0],
            acting_arrows: vec![0, 0],
            acted_objects: vec![0],
            acted_arrows: vec![0],
        };
        assert!(check_action_morphism(&bad, &src, &tgt).has("moment intertwined"));
    }

    #[test]
    fn operad_actions() {
        let assoc = FinOperad::associative(2);
        assert!(check_operad_axioms(&assoc).is_ok());
        let triv = OpAction::trivial(FinCategory::discrete(1), assoc.clone(), 0);
        assert!(check_op_action(&triv).is_ok());
        let mut bad = OpAction::trivial(FinCategory::cyclic_group(2), assoc, 0);
        // the non-identity arrow sends the binary operation to the unary one
        bad.action.insert((1, 2), 1);
        assert!(check_op_action(&bad).has("source preserved"));
    }
}
