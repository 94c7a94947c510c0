//! Windowed verification of strict, elegant and generalized Reedy structures.
//!
//! A category is supplied through [`ReedyCandidate`]: a finite window of
//! objects, hom enumeration, the plus/minus classes, a factorizer and a degree.
//! Every check is exhaustive over the window and the report states the window;
//! nothing is claimed outside it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::dad::{self, DadMorphism, DadObject};
use crate::dao::{self, DaoMorphism, DaoObject};
use crate::error::Result;
use crate::ordinal::{self, OrdinalMap};
use crate::ptree::{self, OmegaPMap, PlanarTree};

const MAX_WITNESSES: usize = 10;

pub trait ReedyCandidate: Sync {
    type Obj: Clone + Eq + Hash + Ord + Send + Sync + fmt::Debug;
    type Mor: Clone + Eq + Hash + fmt::Display + Send + Sync;

    fn family(&self) -> String;
    fn window(&self) -> String;
    /// The window, in a deterministic order.
    fn objects(&self) -> Vec<Self::Obj>;
    fn label(&self, o: &Self::Obj) -> String;
    fn degree(&self, o: &Self::Obj) -> usize;
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Mor>;
    fn src(&self, f: &Self::Mor) -> Self::Obj;
    fn tgt(&self, f: &Self::Mor) -> Self::Obj;
    /// `g ∘ f`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    /// `g ∘ f` for every `f` in `fs`.
    fn compose_all(&self, fs: &[Self::Mor], g: &Self::Mor) -> Vec<Self::Mor> {
        fs.iter().map(|f| self.compose(f, g)).collect()
    }
    fn is_plus(&self, f: &Self::Mor) -> bool;
    fn is_minus(&self, f: &Self::Mor) -> bool;
    fn is_iso(&self, f: &Self::Mor) -> bool;
    fn factorize(&self, f: &Self::Mor) -> (Self::Mor, Self::Mor);
    /// Every object that can be the target of a minus map out of `a`.
    fn intermediates(&self, a: &Self::Obj) -> Vec<Self::Obj>;
    /// Objects against which representable squares are evaluated.
    fn probes(&self, max_degree: usize) -> Vec<Self::Obj> {
        self.objects().into_iter().filter(|o| self.degree(o) <= max_degree).collect()
    }
    fn pushout(&self, f: &Self::Mor, g: &Self::Mor) -> Result<(Self::Mor, Self::Mor)>;
    /// Family-specific structural assertions about a single morphism.
    fn extra_checks(&self, _f: &Self::Mor) -> Vec<(&'static str, String)> {
        Vec::new()
    }
}

/// A crossed group on a candidate, together with the total category it
/// should present.
pub trait CrossedGroupCandidate: ReedyCandidate {
    type Elem: Clone + Eq + Hash + Send + Sync + fmt::Debug;
    /// Morphisms of the total category, enumerated independently.
    type Raw: Clone + Eq + Hash + fmt::Display + Send + Sync;

    /// The group at `o`, unit first.
    fn group(&self, o: &Self::Obj) -> Vec<Self::Elem>;
    fn is_unit(&self, g: &Self::Elem) -> bool;
    /// `g_*(f)` for `g` in the group at the target of `f`; `None` when `g ∘ f`
    /// has no normal form.
    fn push(&self, g: &Self::Elem, f: &Self::Mor) -> Option<Self::Mor>;
    /// `f^*(g)`, with the same domain of definition as `push`.
    fn pull(&self, f: &Self::Mor, g: &Self::Elem) -> Option<Self::Elem>;
    /// `a · b` in the group at `o`.
    fn multiply(&self, o: &Self::Obj, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn total_hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Raw>;
    /// The total morphism `f ∘ g` for `g` in the group at the source of `f`.
    fn embed(&self, f: &Self::Mor, g: &Self::Elem) -> Self::Raw;
    /// The pair `(g, h)` with `embed(h, g) = r`, if one exists.
    fn normalize(&self, r: &Self::Raw) -> Option<(Self::Elem, Self::Mor)>;
    /// `s ∘ r` in the total category.
    fn total_compose(&self, r: &Self::Raw, s: &Self::Raw) -> Self::Raw;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub jobs: usize,
    /// Probe objects of degree at most this are used for pushout checks.
    pub probe_degree: usize,
    /// Composites of the crossed composition law are checked among objects
    /// of degree at most this.
    pub law_degree: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { jobs: 1, probe_degree: 10, law_degree: 4 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    /// Sum of the two degrees, so the smallest witness sorts first.
    pub size: usize,
    pub degrees: (usize, usize),
    pub kind: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub family: String,
    pub check: String,
    pub window: String,
    pub counts: BTreeMap<String, u64>,
    pub failures: BTreeMap<String, u64>,
    /// The smallest failures found, by degree.
    pub witnesses: Vec<Witness>,
}

impl Report {
    pub fn new(family: &str, check: &str, window: &str) -> Self {
        Report {
            family: family.into(),
            check: check.into(),
            window: window.into(),
            counts: BTreeMap::new(),
            failures: BTreeMap::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn count(&mut self, key: &str, n: u64) {
        *self.counts.entry(key.into()).or_default() += n;
    }

    pub fn fail(&mut self, kind: &str, degrees: (usize, usize), detail: String) {
        *self.failures.entry(kind.into()).or_default() += 1;
        self.witnesses.push(Witness { size: degrees.0 + degrees.1, degrees, kind: kind.into(), detail });
        self.witnesses.sort();
        self.witnesses.truncate(MAX_WITNESSES);
    }

    /// Adds the counts and failures of `other`; the result does not depend
    /// on the order of merging.
    pub fn merge(&mut self, other: Report) {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        for (k, v) in other.failures {
            *self.failures.entry(k).or_default() += v;
        }
        self.witnesses.extend(other.witnesses);
        self.witnesses.sort();
        self.witnesses.dedup();
        self.witnesses.truncate(MAX_WITNESSES);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_failures(&self) -> u64 {
        self.failures.values().sum()
    }

    pub fn minimal_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.family)?;
        writeln!(f, "check: {}", self.check)?;
        writeln!(f, "window: {}", self.window)?;
        for (k, v) in &self.counts {
            writeln!(f, "  {k}: {v}")?;
        }
        if self.passed() {
            return writeln!(f, "result: PASS (0 failures)");
        }
        writeln!(f, "result: FAIL ({} failures)", self.total_failures())?;
        for (k, v) in &self.failures {
            writeln!(f, "  {k}: {v}")?;
        }
        for w in &self.witnesses {
            writeln!(f, "  witness [{}] degrees {:?}: {}", w.kind, w.degrees, w.detail)?;
        }
        Ok(())
    }
}

/// Applies `f` to every item, on up to `jobs` threads, keeping input order.
pub fn par_map<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    if jobs <= 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..jobs.min(items.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                slots.lock().expect("poisoned")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("poisoned").into_iter().map(|r| r.expect("every slot filled")).collect()
}

fn merge_all(mut base: Report, parts: Vec<Report>) -> Report {
    for p in parts {
        base.merge(p);
    }
    base
}

/// Factorization, uniqueness of factorizations, and the degree laws, for
/// every morphism between objects of the window.
pub fn verify_reedy<C: ReedyCandidate>(c: &C, opts: &VerifyOptions) -> Report {
    let objects = c.objects();
    let parts = par_map(&objects, opts.jobs, |a| reedy_from(c, a, &objects));
    let mut base = Report::new(&c.family(), "reedy", &c.window());
    base.count("objects", objects.len() as u64);
    merge_all(base, parts)
}

fn reedy_from<C: ReedyCandidate>(c: &C, a: &C::Obj, objects: &[C::Obj]) -> Report {
    let mut r = Report::new("", "", "");
    let da = c.degree(a);
    let minus_out: Vec<(C::Obj, Vec<C::Mor>)> = c
        .intermediates(a)
        .into_iter()
        .map(|m| {
            let ms: Vec<C::Mor> = c.hom(a, &m).into_iter().filter(|f| c.is_minus(f)).collect();
            (m, ms)
        })
        .filter(|(_, ms)| !ms.is_empty())
        .collect();
    for b in objects {
        let db = c.degree(b);
        let homs = c.hom(a, b);
        r.count("morphisms", homs.len() as u64);
        let mut composites: HashMap<C::Mor, u32> = HashMap::new();
        for (m, ms) in &minus_out {
            for p in c.hom(m, b).into_iter().filter(|p| c.is_plus(p)) {
                for h in c.compose_all(ms, &p) {
                    *composites.entry(h).or_default() += 1;
                }
            }
        }
        for f in &homs {
            let degs = (da, db);
            match composites.get(f).copied().unwrap_or(0) {
                1 => r.count("unique factorizations", 1),
                0 => r.fail("no minus-plus factorization", degs, f.to_string()),
                k => r.fail("factorization not unique", degs, format!("{f} has {k} factorizations")),
            }
            let (m, p) = c.factorize(f);
            if c.src(&m) != *a || c.tgt(&p) != *b || c.tgt(&m) != c.src(&p) {
                r.fail("factorizer returned mismatched endpoints", degs, f.to_string());
            } else if c.compose(&m, &p) != *f {
                r.fail("factorizer composite differs", degs, f.to_string());
            }
            if !c.is_minus(&m) || !c.is_plus(&p) {
                r.fail("factorizer components misclassified", degs, format!("{f} = {p} . {m}"));
            }
            let (plus, minus) = (c.is_plus(f), c.is_minus(f));
            r.count("plus maps", plus as u64);
            r.count("minus maps", minus as u64);
            if plus || minus || da == db {
                let iso = c.is_iso(f);
                r.count("isomorphisms", iso as u64);
                if iso && da != db {
                    r.fail("isomorphism changes degree", degs, f.to_string());
                }
                if plus {
                    if da > db {
                        r.fail("plus map lowers degree", degs, f.to_string());
                    } else if da == db && !iso {
                        r.fail("plus map of equal degree is not an isomorphism", degs, f.to_string());
                    }
                }
                if minus {
                    if da < db {
                        r.fail("minus map raises degree", degs, f.to_string());
                    } else if da == db && !iso {
                        r.fail("minus map of equal degree is not an isomorphism", degs, f.to_string());
                    }
                }
                if plus && minus && !iso {
                    r.fail("plus and minus but not an isomorphism", degs, f.to_string());
                }
            }
            for (kind, detail) in c.extra_checks(f) {
                r.fail(kind, (da, db), detail);
            }
        }
    }
    r
}

struct HomTable<M> {
    list: Vec<M>,
    index: HashMap<M, usize>,
}

impl<M: Clone + Eq + Hash> HomTable<M> {
    fn new(list: Vec<M>) -> Self {
        let index = list.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        HomTable { list, index }
    }
}

/// Per-probe caches: hom-sets out of the probe and postcomposition indices.
struct ProbeCache<'a, C: ReedyCandidate> {
    c: &'a C,
    y: C::Obj,
    homs: HashMap<C::Obj, HomTable<C::Mor>>,
    post: HashMap<C::Mor, Vec<usize>>,
}

impl<'a, C: ReedyCandidate> ProbeCache<'a, C> {
    fn new(c: &'a C, y: C::Obj) -> Self {
        ProbeCache { c, y, homs: HashMap::new(), post: HashMap::new() }
    }

    fn table(&mut self, o: &C::Obj) -> &HomTable<C::Mor> {
        if !self.homs.contains_key(o) {
            let t = HomTable::new(self.c.hom(&self.y, o));
            self.homs.insert(o.clone(), t);
        }
        &self.homs[o]
    }

    /// Indices of `g ∘ u` in `Hom(Y, tgt g)` for every `u` in `Hom(Y, src g)`.
    fn post(&mut self, g: &C::Mor) -> Option<&Vec<usize>> {
        if !self.post.contains_key(g) {
            let (s, t) = (self.c.src(g), self.c.tgt(g));
            let from = self.table(&s).list.clone();
            let composites = self.c.compose_all(&from, g);
            let to = self.table(&t);
            let idx: Option<Vec<usize>> = composites.iter().map(|h| to.index.get(h).copied()).collect();
            self.post.insert(g.clone(), idx?);
        }
        self.post.get(g)
    }
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut x = x;
    while p[x] != r {
        let n = p[x];
        p[x] = r;
        x = n;
    }
    r
}

/// Every span of minus maps in the window completes, via the candidate's
/// pushout, to a commuting square of minus maps whose representable square
/// is a pushout of sets at every probe object.
pub fn verify_elegance<C: ReedyCandidate>(c: &C, opts: &VerifyOptions) -> Report {
    let objects = c.objects();
    let probes = c.probes(opts.probe_degree);
    let parts = par_map(&objects, opts.jobs, |a| elegance_from(c, a, &probes));
    let mut base = Report::new(&c.family(), "elegance", &c.window());
    base.count("objects", objects.len() as u64);
    base.count("probe objects", probes.len() as u64);
    base.count("probe degree bound", opts.probe_degree as u64);
    merge_all(base, parts)
}

fn elegance_from<C: ReedyCandidate>(c: &C, a: &C::Obj, probes: &[C::Obj]) -> Report {
    let mut r = Report::new("", "", "");
    let da = c.degree(a);
    let minus: Vec<C::Mor> = c.intermediates(a).iter().flat_map(|m| c.hom(a, m)).filter(|f| c.is_minus(f)).collect();
    let mut squares = Vec::new();
    for i in 0..minus.len() {
        for j in i..minus.len() {
            let (f1, f2) = (&minus[i], &minus[j]);
            let degs = (da, c.degree(&c.tgt(f1)).max(c.degree(&c.tgt(f2))));
            r.count("spans", 1);
            let (t1, t2) = match c.pushout(f1, f2) {
                Ok(t) => t,
                Err(e) => {
                    r.fail("no completing square", degs, format!("{f1} / {f2}: {e}"));
                    continue;
                }
            };
            if !c.is_minus(&t1) || !c.is_minus(&t2) {
                r.fail("completing legs not minus", degs, format!("{f1} / {f2}"));
                continue;
            }
            if c.compose(f1, &t1) != c.compose(f2, &t2) {
                r.fail("square does not commute", degs, format!("{f1} / {f2}"));
                continue;
            }
            squares.push((i, j, t1, t2, degs));
        }
    }
    for y in probes {
        let mut cache = ProbeCache::new(c, y.clone());
        let ha = cache.table(a).list.len();
        for (i, j, t1, t2, degs) in &squares {
            let (f1, f2) = (&minus[*i], &minus[*j]);
            r.count("probe evaluations", 1);
            let p1 = cache.post(f1).cloned();
            let p2 = cache.post(f2).cloned();
            let q1 = cache.post(t1).cloned();
            let q2 = cache.post(t2).cloned();
            let (Some(p1), Some(p2), Some(q1), Some(q2)) = (p1, p2, q1, q2) else {
                r.fail("composite outside enumerated hom-set", *degs, format!("{f1} / {f2} at {}", c.label(y)));
                continue;
            };
            let n1 = cache.table(&c.tgt(f1)).list.len();
            let n2 = cache.table(&c.tgt(f2)).list.len();
            let np = cache.table(&c.tgt(t1)).list.len();
            let mut parent: Vec<usize> = (0..n1 + n2).collect();
            for u in 0..ha {
                let (x, z) = (find(&mut parent, p1[u]), find(&mut parent, n1 + p2[u]));
                if x != z {
                    parent[x.max(z)] = x.min(z);
                }
            }
            let mut image_of_class: HashMap<usize, usize> = HashMap::new();
            let mut class_of_image: Vec<Option<usize>> = vec![None; np];
            let mut ok = true;
            for x in 0..n1 + n2 {
                let cls = find(&mut parent, x);
                let img = if x < n1 { q1[x] } else { q2[x - n1] };
                if *image_of_class.entry(cls).or_insert(img) != img {
                    ok = false;
                }
                match class_of_image[img] {
                    None => class_of_image[img] = Some(cls),
                    Some(k) if k != cls => ok = false,
                    Some(_) => {}
                }
            }
            if !ok || class_of_image.iter().any(Option::is_none) {
                r.fail("representable square is not a pushout", *degs, format!("{f1} / {f2} at probe {}", c.label(y)));
            }
        }
    }
    r
}

/// The strict Reedy report of the underlying candidate together with the
/// crossed group checks: the action preserves both classes, the
/// faithfulness condition on minus maps, unique normal forms in the total
/// category, and the crossed composition law.
pub fn verify_generalized<C: CrossedGroupCandidate>(c: &C, opts: &VerifyOptions) -> Report {
    let mut report = verify_reedy(c, opts);
    report.check = "generalized".into();
    let objects = c.objects();
    let parts = par_map(&objects, opts.jobs, |a| crossed_from(c, a, &objects));
    let small: Vec<C::Obj> = objects.iter().filter(|o| c.degree(o) <= opts.law_degree).cloned().collect();
    let law = par_map(&small, opts.jobs, |a| crossed_law_from(c, a, &small));
    report.count("law degree bound", opts.law_degree as u64);
    merge_all(merge_all(report, parts), law)
}

fn crossed_from<C: CrossedGroupCandidate>(c: &C, a: &C::Obj, objects: &[C::Obj]) -> Report {
    let mut r = Report::new("", "", "");
    let da = c.degree(a);
    let ga = c.group(a);
    r.count("group elements", ga.len() as u64);
    for b in objects {
        let degs = (da, c.degree(b));
        let planar = c.hom(a, b);
        let mut embeds: HashMap<C::Raw, u32> = HashMap::new();
        for h in &planar {
            for g in &ga {
                *embeds.entry(c.embed(h, g)).or_default() += 1;
            }
        }
        let raw = c.total_hom(a, b);
        r.count("total morphisms", raw.len() as u64);
        let raw_set: std::collections::HashSet<&C::Raw> = raw.iter().collect();
        let planar_set: std::collections::HashSet<&C::Mor> = planar.iter().collect();
        for e in embeds.keys() {
            if !raw_set.contains(e) {
                r.fail("normal form outside the total hom-set", degs, e.to_string());
            }
        }
        for x in &raw {
            match embeds.get(x).copied().unwrap_or(0) {
                1 => r.count("unique normal forms", 1),
                0 => r.fail("no normal form", degs, x.to_string()),
                k => r.fail("normal form not unique", degs, format!("{x} has {k} normal forms")),
            }
            if let Some((g, h)) = c.normalize(x) {
                if !planar_set.contains(&h) {
                    r.fail("normal form has a planar part outside the category", degs, x.to_string());
                } else if c.embed(&h, &g) != *x {
                    r.fail("normalize does not reassemble", degs, x.to_string());
                } else if c.normalize(&c.embed(&h, &g)) != Some((g, h)) {
                    r.fail("normalize not idempotent", degs, x.to_string());
                }
            } else if embeds.contains_key(x) {
                r.fail("normalize misses a normal form", degs, x.to_string());
            }
        }
        let gb = c.group(b);
        for f in &planar {
            let (plus, minus) = (c.is_plus(f), c.is_minus(f));
            for g in &gb {
                let (Some(pushed), Some(pulled)) = (c.push(g, f), c.pull(f, g)) else {
                    r.fail("crossed action undefined", degs, format!("{g:?} acting on {f}"));
                    continue;
                };
                r.count("crossed actions", 1);
                if (plus && !c.is_plus(&pushed)) || (minus && !c.is_minus(&pushed)) {
                    r.fail("group action does not preserve the class", degs, format!("{g:?} acting on {f}"));
                }
                if minus && c.is_unit(&pulled) && pushed == *f && !c.is_unit(g) {
                    r.fail("nontrivial element fixes a minus map", degs, format!("{g:?} fixes {f}"));
                }
            }
        }
    }
    r
}

fn crossed_law_from<C: CrossedGroupCandidate>(c: &C, r_obj: &C::Obj, small: &[C::Obj]) -> Report {
    let mut r = Report::new("", "", "");
    let gr = c.group(r_obj);
    for s in small {
        let betas = c.hom(r_obj, s);
        if betas.is_empty() {
            continue;
        }
        let gs = c.group(s);
        for t in small {
            let degs = (c.degree(r_obj), c.degree(t));
            for alpha in c.hom(s, t) {
                for g in &gs {
                    for beta in &betas {
                        let (Some(pushed), Some(pulled)) = (c.push(g, beta), c.pull(beta, g)) else { continue };
                        let planar = c.compose(&pushed, &alpha);
                        for h in &gr {
                            r.count("composition law instances", 1);
                            let lhs = c.total_compose(&c.embed(beta, h), &c.embed(&alpha, g));
                            let rhs = c.embed(&planar, &c.multiply(r_obj, &pulled, h));
                            if lhs != rhs {
                                r.fail(
                                    "crossed composition law",
                                    degs,
                                    format!("({alpha}, {g:?}) after ({beta}, {h:?})"),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    r
}

/// Any candidate with the trivial group; its total category is itself.
pub struct TrivialGroup<C>(pub C);

impl<C: ReedyCandidate> ReedyCandidate for TrivialGroup<C> {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn family(&self) -> String {
        self.0.family()
    }
    fn window(&self) -> String {
        self.0.window()
    }
    fn objects(&self) -> Vec<C::Obj> {
        self.0.objects()
    }
    fn label(&self, o: &C::Obj) -> String {
        self.0.label(o)
    }
    fn degree(&self, o: &C::Obj) -> usize {
        self.0.degree(o)
    }
    fn hom(&self, a: &C::Obj, b: &C::Obj) -> Vec<C::Mor> {
        self.0.hom(a, b)
    }
    fn src(&self, f: &C::Mor) -> C::Obj {
        self.0.src(f)
    }
    fn tgt(&self, f: &C::Mor) -> C::Obj {
        self.0.tgt(f)
    }
    fn compose(&self, f: &C::Mor, g: &C::Mor) -> C::Mor {
        self.0.compose(f, g)
    }
    fn compose_all(&self, fs: &[C::Mor], g: &C::Mor) -> Vec<C::Mor> {
        self.0.compose_all(fs, g)
    }
    fn is_plus(&self, f: &C::Mor) -> bool {
        self.0.is_plus(f)
    }
    fn is_minus(&self, f: &C::Mor) -> bool {
        self.0.is_minus(f)
    }
    fn is_iso(&self, f: &C::Mor) -> bool {
        self.0.is_iso(f)
    }
    fn factorize(&self, f: &C::Mor) -> (C::Mor, C::Mor) {
        self.0.factorize(f)
    }
    fn intermediates(&self, a: &C::Obj) -> Vec<C::Obj> {
        self.0.intermediates(a)
    }
    fn probes(&self, max_degree: usize) -> Vec<C::Obj> {
        self.0.probes(max_degree)
    }
    fn pushout(&self, f: &C::Mor, g: &C::Mor) -> Result<(C::Mor, C::Mor)> {
        self.0.pushout(f, g)
    }
    fn extra_checks(&self, f: &C::Mor) -> Vec<(&'static str, String)> {
        self.0.extra_checks(f)
    }
}

impl<C: ReedyCandidate> CrossedGroupCandidate for TrivialGroup<C> {
    type Elem = ();
    type Raw = C::Mor;

    fn group(&self, _o: &C::Obj) -> Vec<()> {
        vec![()]
    }
    fn is_unit(&self, _g: &()) -> bool {
        true
    }
    fn push(&self, _g: &(), f: &C::Mor) -> Option<C::Mor> {
        Some(f.clone())
    }
    fn pull(&self, _f: &C::Mor, _g: &()) -> Option<()> {
        Some(())
    }
    fn multiply(&self, _o: &C::Obj, _a: &(), _b: &()) {}
    fn total_hom(&self, a: &C::Obj, b: &C::Obj) -> Vec<C::Mor> {
        self.0.hom(a, b)
    }
    fn embed(&self, f: &C::Mor, _g: &()) -> C::Mor {
        f.clone()
    }
    fn normalize(&self, r: &C::Mor) -> Option<((), C::Mor)> {
        Some(((), r.clone()))
    }
    fn total_compose(&self, r: &C::Mor, s: &C::Mor) -> C::Mor {
        self.0.compose(r, s)
    }
}

/// Δ (objects `[0..=max_n]`) or its augmentation Δ_◇ (adding `[-1]`).
pub struct DeltaCandidate {
    pub max_n: i32,
    pub augmented: bool,
}

impl ReedyCandidate for DeltaCandidate {
    type Obj = i32;
    type Mor = OrdinalMap;

    fn family(&self) -> String {
        if self.augmented { "delta-augmented" } else { "delta" }.into()
    }
    fn window(&self) -> String {
        format!("{} <= n <= {}", if self.augmented { -1 } else { 0 }, self.max_n)
    }
    fn objects(&self) -> Vec<i32> {
        (if self.augmented { -1 } else { 0 }..=self.max_n).collect()
    }
    fn label(&self, o: &i32) -> String {
        format!("[{o}]")
    }
    fn degree(&self, o: &i32) -> usize {
        if self.augmented {
            ordinal::augmented_degree(*o)
        } else {
            *o as usize
        }
    }
    fn hom(&self, a: &i32, b: &i32) -> Vec<OrdinalMap> {
        if !self.augmented && *b < 0 {
            return Vec::new();
        }
        ordinal::enumerate_maps(*a, *b)
    }
    fn src(&self, f: &OrdinalMap) -> i32 {
        f.src()
    }
    fn tgt(&self, f: &OrdinalMap) -> i32 {
        f.tgt()
    }
    fn compose(&self, f: &OrdinalMap, g: &OrdinalMap) -> OrdinalMap {
        ordinal::compose(f, g).expect("composable")
    }
    fn is_plus(&self, f: &OrdinalMap) -> bool {
        f.is_mono()
    }
    fn is_minus(&self, f: &OrdinalMap) -> bool {
        f.is_epi()
    }
    fn is_iso(&self, f: &OrdinalMap) -> bool {
        f.is_mono() && f.is_epi()
    }
    fn factorize(&self, f: &OrdinalMap) -> (OrdinalMap, OrdinalMap) {
        ordinal::epi_mono_factorize(f)
    }
    fn intermediates(&self, a: &i32) -> Vec<i32> {
        (if self.augmented { -1 } else { 0 }..=*a).collect()
    }
    fn probes(&self, max_degree: usize) -> Vec<i32> {
        let lo = if self.augmented { -1 } else { 0 };
        (lo..).take_while(|o| self.degree(o) <= max_degree).collect()
    }
    fn pushout(&self, f: &OrdinalMap, g: &OrdinalMap) -> Result<(OrdinalMap, OrdinalMap)> {
        ordinal::pushout_of_epis(f, g)
    }
}

/// Ω_{p,◇}: ∅ and planar trees with bounded vertex count and arity.
///
/// With `broken_minus`, minus maps are only required to be surjective on
/// edges, without sending leaves to leaves.
pub struct OmegaCandidate {
    pub max_vertices: usize,
    pub max_arity: usize,
    pub broken_minus: bool,
}

impl ReedyCandidate for OmegaCandidate {
    type Obj = PlanarTree;
    type Mor = OmegaPMap;

    fn family(&self) -> String {
        if self.broken_minus { "omega-diamond (edge-surjective minus)" } else { "omega-diamond" }.into()
    }
    fn window(&self) -> String {
        format!("empty tree and trees with <= {} vertices of arity <= {}", self.max_vertices, self.max_arity)
    }
    fn objects(&self) -> Vec<PlanarTree> {
        std::iter::once(PlanarTree::empty()).chain(ptree::enumerate_trees(self.max_vertices, self.max_arity)).collect()
    }
    fn label(&self, o: &PlanarTree) -> String {
        o.to_literal()
    }
    fn degree(&self, o: &PlanarTree) -> usize {
        ptree::degree(o)
    }
    fn hom(&self, a: &PlanarTree, b: &PlanarTree) -> Vec<OmegaPMap> {
        ptree::hom(&std::sync::Arc::new(a.clone()), &std::sync::Arc::new(b.clone()))
    }
    fn src(&self, f: &OmegaPMap) -> PlanarTree {
        (**f.src()).clone()
    }
    fn tgt(&self, f: &OmegaPMap) -> PlanarTree {
        (**f.tgt()).clone()
    }
    fn compose(&self, f: &OmegaPMap, g: &OmegaPMap) -> OmegaPMap {
        ptree::compose(f, g).expect("composable")
    }
    fn is_plus(&self, f: &OmegaPMap) -> bool {
        f.is_plus()
    }
    fn is_minus(&self, f: &OmegaPMap) -> bool {
        if self.broken_minus {
            f.is_surjective()
        } else {
            f.is_minus()
        }
    }
    fn is_iso(&self, f: &OmegaPMap) -> bool {
        if !(f.is_plus() && f.is_surjective()) {
            return false;
        }
        let back = ptree::hom(f.tgt(), f.src());
        back.iter().any(|g| {
            ptree::compose(f, g).map(|h| h.is_identity()).unwrap_or(false)
                && ptree::compose(g, f).map(|h| h.is_identity()).unwrap_or(false)
        })
    }
    fn factorize(&self, f: &OmegaPMap) -> (OmegaPMap, OmegaPMap) {
        ptree::factorize(f)
    }
    fn intermediates(&self, a: &PlanarTree) -> Vec<PlanarTree> {
        if a.is_empty() {
            return vec![PlanarTree::empty()];
        }
        if self.broken_minus {
            // edge-surjective maps can add vertices, so use the whole window
            return self.objects();
        }
        ptree::enumerate_trees(a.num_vertices(), a.max_arity())
    }
    fn pushout(&self, f: &OmegaPMap, g: &OmegaPMap) -> Result<(OmegaPMap, OmegaPMap)> {
        ptree::pushout_of_minus(f, g)
    }
}

/// Δ↻Δ with `n <= max_n` and `-1 <= k <= max_k`.
pub struct DadCandidate {
    pub max_n: u32,
    pub max_k: i32,
}

fn dad_obj(o: &(u32, i32)) -> std::sync::Arc<DadObject> {
    DadObject::get(o.0, o.1)
}

impl ReedyCandidate for DadCandidate {
    type Obj = (u32, i32);
    type Mor = DadMorphism;

    fn family(&self) -> String {
        "dad".into()
    }
    fn window(&self) -> String {
        format!("n <= {}, -1 <= k <= {}", self.max_n, self.max_k)
    }
    fn objects(&self) -> Vec<(u32, i32)> {
        (0..=self.max_n).flat_map(|n| (-1..=self.max_k).map(move |k| (n, k))).collect()
    }
    fn label(&self, o: &(u32, i32)) -> String {
        format!("{}:{}", o.0, o.1)
    }
    fn degree(&self, o: &(u32, i32)) -> usize {
        dad_obj(o).degree()
    }
    fn hom(&self, a: &(u32, i32), b: &(u32, i32)) -> Vec<DadMorphism> {
        dad::hom(&dad_obj(a), &dad_obj(b))
    }
    fn src(&self, f: &DadMorphism) -> (u32, i32) {
        (f.src().n(), f.src().k())
    }
    fn tgt(&self, f: &DadMorphism) -> (u32, i32) {
        (f.tgt().n(), f.tgt().k())
    }
    fn compose(&self, f: &DadMorphism, g: &DadMorphism) -> DadMorphism {
        dad::compose(f, g).expect("composable")
    }
    fn compose_all(&self, fs: &[DadMorphism], g: &DadMorphism) -> Vec<DadMorphism> {
        let post = dad::Postcompose::new(g);
        fs.iter().map(|f| post.apply(f)).collect()
    }
    fn is_plus(&self, f: &DadMorphism) -> bool {
        f.is_plus()
    }
    fn is_minus(&self, f: &DadMorphism) -> bool {
        f.is_minus()
    }
    fn is_iso(&self, f: &DadMorphism) -> bool {
        let hat = f.hat();
        if !is_bijection(
            &hat.acting.iter().map(|&o| f.tgt().acting_index(o)).collect::<Vec<_>>(),
            f.tgt().acting_objects().len(),
        ) || !is_bijection(&hat.acted, f.tgt().num_objects())
        {
            return false;
        }
        dad::hom(f.tgt(), f.src()).iter().any(|g| {
            dad::compose(f, g).map(|h| h.is_identity()).unwrap_or(false)
                && dad::compose(g, f).map(|h| h.is_identity()).unwrap_or(false)
        })
    }
    fn factorize(&self, f: &DadMorphism) -> (DadMorphism, DadMorphism) {
        dad::reedy_factorize(f)
    }
    fn intermediates(&self, a: &(u32, i32)) -> Vec<(u32, i32)> {
        // a minus alpha is onto [y], and base objects of star moment are hit only by base objects
        (0..=a.0).flat_map(|y| (-1..=a.1).map(move |z| (y, z))).collect()
    }
    fn probes(&self, max_degree: usize) -> Vec<(u32, i32)> {
        let mut out = Vec::new();
        for k in -1.. {
            if DadObject::get(0, k).degree() > max_degree {
                break;
            }
            for n in 0.. {
                if DadObject::get(n, k).degree() > max_degree {
                    break;
                }
                out.push((n, k));
            }
        }
        out
    }
    fn pushout(&self, f: &DadMorphism, g: &DadMorphism) -> Result<(DadMorphism, DadMorphism)> {
        dad::elegance_pushout(f, g)
    }
    fn extra_checks(&self, f: &DadMorphism) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        let t = f.tgt();
        let base_hit = |j: usize| f.beta().contains(&j);
        let onto_base = t.k() < 0 || (0..=t.k() as usize).all(base_hit);
        let onto_levels = (0..=t.n()).all(|i| f.alpha().contains(&dad::ActingObject::Level(i)));
        if onto_levels && onto_base && !f.is_minus() {
            out.push(("onto [m] and [l] but not minus", f.to_string()));
        }
        if f.is_minus() {
            if !onto_base {
                out.push(("minus map not onto [l]", f.to_string()));
            }
            if f.beta().iter().any(|&x| !matches!(t.raw_name(x), dad::ActedName::Base(_))) {
                out.push(("minus map with beta outside [l]", f.to_string()));
            }
        }
        if f.is_plus() {
            let hat = f.hat();
            let acting: Vec<usize> = hat.acting.iter().map(|&o| t.acting_index(o)).collect();
            if !is_injection(&acting) || !is_injection(&hat.acted) {
                out.push(("plus map with non-injective extension", f.to_string()));
            }
        }
        out
    }
}

fn is_injection(v: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::new();
    v.iter().all(|x| seen.insert(*x))
}

fn is_bijection(v: &[usize], n: usize) -> bool {
    v.len() == n && is_injection(v)
}

/// Δ↻Ω_p with `n <= max_n` and S = ∅ or a tree with at most `max_vertices`
/// vertices of arity at most `max_arity`.
pub struct DaoCandidate {
    pub max_n: u32,
    pub max_vertices: usize,
    pub max_arity: usize,
    /// Drop the leaves-to-leaves requirement from the minus class.
    pub broken_minus: bool,
}

impl DaoCandidate {
    pub fn new(max_n: u32, max_vertices: usize, max_arity: usize) -> Self {
        DaoCandidate { max_n, max_vertices, max_arity, broken_minus: false }
    }
}

fn dao_obj(o: &(u32, PlanarTree)) -> std::sync::Arc<DaoObject> {
    DaoObject::get(o.0, &o.1)
}

impl ReedyCandidate for DaoCandidate {
    type Obj = (u32, PlanarTree);
    type Mor = DaoMorphism;

    fn family(&self) -> String {
        if self.broken_minus { "dao (edge-surjective minus)" } else { "dao" }.into()
    }
    fn window(&self) -> String {
        format!(
            "n <= {}, S empty or a tree with <= {} vertices of arity <= {}",
            self.max_n, self.max_vertices, self.max_arity
        )
    }
    fn objects(&self) -> Vec<(u32, PlanarTree)> {
        dao::window_objects(self.max_n, self.max_vertices, self.max_arity)
            .iter()
            .map(|o| (o.n(), (**o.tree()).clone()))
            .collect()
    }
    fn label(&self, o: &(u32, PlanarTree)) -> String {
        format!("{}:{}", o.0, o.1)
    }
    fn degree(&self, o: &(u32, PlanarTree)) -> usize {
        dao_obj(o).degree()
    }
    fn hom(&self, a: &(u32, PlanarTree), b: &(u32, PlanarTree)) -> Vec<DaoMorphism> {
        dao::hom(&dao_obj(a), &dao_obj(b))
    }
    fn src(&self, f: &DaoMorphism) -> (u32, PlanarTree) {
        (f.src().n(), (**f.src().tree()).clone())
    }
    fn tgt(&self, f: &DaoMorphism) -> (u32, PlanarTree) {
        (f.tgt().n(), (**f.tgt().tree()).clone())
    }
    fn compose(&self, f: &DaoMorphism, g: &DaoMorphism) -> DaoMorphism {
        dao::compose(f, g).expect("composable")
    }
    fn compose_all(&self, fs: &[DaoMorphism], g: &DaoMorphism) -> Vec<DaoMorphism> {
        let post = dao::Postcompose::new(g);
        fs.iter().map(|f| post.apply(f)).collect()
    }
    fn is_plus(&self, f: &DaoMorphism) -> bool {
        f.is_plus()
    }
    fn is_minus(&self, f: &DaoMorphism) -> bool {
        f.is_minus_with(!self.broken_minus)
    }
    fn is_iso(&self, f: &DaoMorphism) -> bool {
        let hat = f.hat();
        if !is_bijection(
            &hat.acting.iter().map(|&o| f.tgt().acting_index(o)).collect::<Vec<_>>(),
            f.tgt().acting_objects().len(),
        ) || !is_bijection(&hat.colors, f.tgt().num_colors())
        {
            return false;
        }
        dao::hom(f.tgt(), f.src()).iter().any(|g| {
            dao::compose(f, g).map(|h| h.is_identity()).unwrap_or(false)
                && dao::compose(g, f).map(|h| h.is_identity()).unwrap_or(false)
        })
    }
    fn factorize(&self, f: &DaoMorphism) -> (DaoMorphism, DaoMorphism) {
        dao::reedy_factorize(f)
    }
    fn intermediates(&self, a: &(u32, PlanarTree)) -> Vec<(u32, PlanarTree)> {
        // A minus map sends each vertex of S to a single vertex or an identity,
        // so its target tree has at most |V(S)| vertices of no larger arity.
        let trees: Vec<PlanarTree> = if a.1.is_empty() {
            vec![PlanarTree::empty()]
        } else if self.broken_minus {
            std::iter::once(PlanarTree::empty())
                .chain(ptree::enumerate_trees(self.max_vertices, self.max_arity))
                .collect()
        } else {
            ptree::enumerate_trees(a.1.num_vertices(), a.1.max_arity())
        };
        (0..=a.0).flat_map(|y| trees.iter().map(move |t| (y, t.clone()))).collect()
    }
    fn pushout(&self, f: &DaoMorphism, g: &DaoMorphism) -> Result<(DaoMorphism, DaoMorphism)> {
        dao::elegance_pushout(f, g)
    }
    fn extra_checks(&self, f: &DaoMorphism) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        let (s, t) = (f.src(), f.tgt());
        let onto_levels = (0..=t.n()).all(|i| f.alpha().contains(&dad::ActingObject::Level(i)));
        let onto_edges = (0..t.num_edges()).all(|e| f.beta().contains(&e));
        let leaves_ok = s.tree().leaves().iter().all(|&l| t.is_leaf(f.beta()[l]));
        if onto_levels && onto_edges && leaves_ok && !f.is_minus() {
            out.push(("onto [m] and E(R), leaves to leaves, but not minus", f.to_string()));
        }
        if f.is_minus() {
            if !onto_edges {
                out.push(("minus map not onto the edges of R", f.to_string()));
            }
            if f.beta().iter().any(|&c| c >= t.num_edges()) {
                out.push(("minus map with beta outside the tree", f.to_string()));
            }
            let leaf_images: Vec<usize> = s.tree().leaves().iter().map(|&l| f.beta()[l]).collect();
            if t.tree().leaves().iter().any(|l| !leaf_images.contains(l)) {
                out.push(("minus map misses a leaf of R", f.to_string()));
            }
        }
        if f.is_plus() {
            let hat = f.hat();
            let acting: Vec<usize> = hat.acting.iter().map(|&o| t.acting_index(o)).collect();
            if !is_injection(&acting) || !is_injection(&hat.colors) {
                out.push(("plus map with non-injective extension", f.to_string()));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions { jobs: 1, probe_degree: 6, law_degree: 2 }
    }

    #[test]
    fn delta_is_reedy_and_augmented_delta_is_elegant() {
        let r = verify_reedy(&DeltaCandidate { max_n: 3, augmented: false }, &quick());
        assert!(r.passed(), "{r}");
        let r = verify_elegance(&DeltaCandidate { max_n: 3, augmented: true }, &quick());
        assert!(r.passed(), "{r}");
        assert!(r.counts["probe evaluations"] > 0);
    }

    #[test]
    fn broken_minus_is_reported_with_small_witness() {
        let c = OmegaCandidate { max_vertices: 2, max_arity: 2, broken_minus: true };
        let r = verify_reedy(&c, &quick());
        assert!(!r.passed());
        assert!(r.failures.contains_key("minus map raises degree"), "{r}");
        let w = r.minimal_witness().unwrap();
        assert!(w.size <= 5, "{w:?}");
    }

    #[test]
    fn small_dad_window() {
        let c = DadCandidate { max_n: 1, max_k: 1 };
        let r = verify_reedy(&c, &quick());
        assert!(r.counts["morphisms"] > 0);
        assert_eq!(r.counts["morphisms"], r.counts.get("unique factorizations").copied().unwrap_or(0));
    }

    #[test]
    fn reports_merge_in_any_order() {
        let mut a = Report::new("x", "y", "z");
        a.fail("k", (3, 1), "late".into());
        let mut b = Report::new("x", "y", "z");
        b.fail("k", (1, 0), "early".into());
        b.count("n", 2);
        let mut ab = a.clone();
        ab.merge(b.clone());
        let mut ba = b;
        ba.merge(a);
        assert_eq!(ab, ba);
        assert_eq!(ab.minimal_witness().unwrap().detail, "early");
    }

    #[test]
    fn parallel_map_keeps_order() {
        let v: Vec<u32> = (0..50).collect();
        assert_eq!(par_map(&v, 4, |x| x * 2), v.iter().map(|x| x * 2).collect::<Vec<_>>());
    }
}
