//! Finite ordinals `[n] = {0 < 1 < ... < n}` and monotone maps between them.
//!
//! The augmented ordinal `[-1]` is the empty set; it is initial, and the only
//! map into it is its own identity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monotone map `[src] -> [tgt]`, with `src, tgt >= -1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrdinalMap {
    src: i32,
    tgt: i32,
    values: Vec<u32>,
}

impl OrdinalMap {
    pub fn new(src: i32, tgt: i32, values: Vec<u32>) -> Result<Self> {
        if src < -1 || tgt < -1 {
            return Err(Error::InvalidOrdinalMap(format!("ordinals start at -1, got [{src}] -> [{tgt}]")));
        }
        if values.len() as i64 != src as i64 + 1 {
            return Err(Error::InvalidOrdinalMap(format!(
                "[{src}] has {} elements but {} values were given",
                src + 1,
                values.len()
            )));
        }
        if src >= 0 && tgt < 0 {
            return Err(Error::InvalidOrdinalMap(format!("no map [{src}] -> [-1]")));
        }
        if let Some(v) = values.iter().find(|&&v| v as i64 > tgt as i64) {
            return Err(Error::InvalidOrdinalMap(format!("value {v} outside [{tgt}]")));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidOrdinalMap(format!("{values:?} is not monotone")));
        }
        Ok(OrdinalMap { src, tgt, values })
    }

    pub fn identity(n: i32) -> Self {
        assert!(n >= -1);
        OrdinalMap { src: n, tgt: n, values: (0..=n).map(|i| i as u32).collect() }
    }

    /// The unique map out of `[-1]`.
    pub fn from_empty(tgt: i32) -> Self {
        assert!(tgt >= -1);
        OrdinalMap { src: -1, tgt, values: Vec::new() }
    }

    pub fn src(&self) -> i32 {
        self.src
    }

    pub fn tgt(&self) -> i32 {
        self.tgt
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.values[i as usize]
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &OrdinalMap) -> Result<OrdinalMap> {
        compose(self, next)
    }

    pub fn image_size(&self) -> usize {
        let mut v = self.values.clone();
        v.dedup();
        v.len()
    }

    pub fn is_mono(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_epi(&self) -> bool {
        self.image_size() as i64 == self.tgt as i64 + 1
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && self.is_mono()
    }
}

impl fmt::Display for OrdinalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]:{}->{}", self.src, self.tgt)
    }
}

impl FromStr for OrdinalMap {
    type Err = Error;

    /// Parses `[a0,a1,...]:n->m`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `[a0,...]:n->m`, got `{s}`"));
        let s = s.trim();
        let (vals, dims) = s.split_once("]:").ok_or_else(bad)?;
        let vals = vals.strip_prefix('[').ok_or_else(bad)?;
        let (n, m) = dims.split_once("->").ok_or_else(bad)?;
        let n: i32 = n.trim().parse().map_err(|_| bad())?;
        let m: i32 = m.trim().parse().map_err(|_| bad())?;
        let values = if vals.trim().is_empty() {
            Vec::new()
        } else {
            vals.split(',').map(|v| v.trim().parse::<u32>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?
        };
        OrdinalMap::new(n, m, values)
    }
}

/// Pointwise composite `g ∘ f` (first `f`, then `g`).
pub fn compose(f: &OrdinalMap, g: &OrdinalMap) -> Result<OrdinalMap> {
    if f.tgt != g.src {
        return Err(Error::Composition(format!("{f} then {g}")));
    }
    Ok(OrdinalMap { src: f.src, tgt: g.tgt, values: f.values.iter().map(|&v| g.apply(v)).collect() })
}

/// The unique factorization `f = mono ∘ epi` with `epi` surjective.
pub fn epi_mono_factorize(f: &OrdinalMap) -> (OrdinalMap, OrdinalMap) {
    let mut image = f.values.clone();
    image.dedup();
    let y = image.len() as i32 - 1;
    let mut epi = Vec::with_capacity(f.values.len());
    let mut idx = 0u32;
    for (i, &v) in f.values.iter().enumerate() {
        if i > 0 && v != f.values[i - 1] {
            idx += 1;
        }
        epi.push(idx);
    }
    (OrdinalMap { src: f.src, tgt: y, values: epi }, OrdinalMap { src: y, tgt: f.tgt, values: image })
}

/// Pushout of two epimorphisms with a common source.
///
/// The result is the quotient of the source by the join of the two kernel
/// relations; both returned legs are epimorphisms and `t1 ∘ f == t2 ∘ g`.
pub fn pushout_of_epis(f: &OrdinalMap, g: &OrdinalMap) -> Result<(OrdinalMap, OrdinalMap)> {
    if f.src != g.src {
        return Err(Error::Composition(format!("pushout of {f} and {g}: sources differ")));
    }
    if !f.is_epi() || !g.is_epi() {
        return Err(Error::InvalidOrdinalMap(format!("pushout of {f} and {g}: not both epi")));
    }
    if f.src == -1 {
        return Ok((OrdinalMap::identity(-1), OrdinalMap::identity(-1)));
    }
    // Kernel classes of a monotone map are intervals, so the join merges
    // neighbours i, i+1 whenever either map identifies them.
    let mut class = vec![0u32; f.values.len()];
    for i in 1..f.values.len() {
        let merged = f.values[i] == f.values[i - 1] || g.values[i] == g.values[i - 1];
        class[i] = class[i - 1] + u32::from(!merged);
    }
    let w = class[class.len() - 1] as i32;
    let leg = |h: &OrdinalMap| {
        let mut vals = vec![0u32; h.tgt as usize + 1];
        for (i, &v) in h.values.iter().enumerate() {
            vals[v as usize] = class[i];
        }
        OrdinalMap { src: h.tgt, tgt: w, values: vals }
    };
    Ok((leg(f), leg(g)))
}

/// All monotone maps `[n] -> [m]`, in lexicographic order.
pub fn enumerate_maps(n: i32, m: i32) -> Vec<OrdinalMap> {
    assert!(n >= -1 && m >= -1);
    if n == -1 {
        return vec![OrdinalMap::from_empty(m)];
    }
    if m == -1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n as usize + 1);
    fn rec(n: usize, m: u32, lo: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in lo..=m {
            cur.push(v);
            rec(n, m, v, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n as usize + 1, m as u32, 0, &mut cur, &mut raw);
    for values in raw {
        out.push(OrdinalMap { src: n, tgt: m, values });
    }
    out
}

/// Monotone maps `[n] -> [m]` with a prescribed value at 0.
pub fn enumerate_maps_from(n: i32, m: i32, first: u32) -> Vec<OrdinalMap> {
    enumerate_maps(n, m).into_iter().filter(|f| f.values.first() == Some(&first)).collect()
}

/// Degree `n + 1` of `[n]` in the augmented simplex category.
pub fn augmented_degree(n: i32) -> usize {
    (n + 1) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> OrdinalMap {
        s.parse().unwrap()
    }

    #[test]
    fn literal_round_trip() {
        let f = m("[0,0,2]:2->2");
        assert_eq!(f.to_string(), "[0,0,2]:2->2");
        assert_eq!(m("[]:-1->3"), OrdinalMap::from_empty(3));
        assert!("[0,1]:1->0".parse::<OrdinalMap>().is_err());
        assert!("[1,0]:1->1".parse::<OrdinalMap>().is_err());
        assert!("[0]:0->-1".parse::<OrdinalMap>().is_err());
    }

    #[test]
    fn composition() {
        let f = m("[0,0,1]:2->1");
        assert_eq!(compose(&f, &m("[0,2]:1->2")).unwrap(), m("[0,0,2]:2->2"));
        assert_eq!(compose(&OrdinalMap::identity(2), &f).unwrap(), f);
        let e = OrdinalMap::identity(-1);
        assert_eq!(compose(&e, &e).unwrap(), e);
        assert!(compose(&f, &f).is_err());
    }

    #[test]
    fn factorization() {
        let id = OrdinalMap::identity(2);
        assert_eq!(epi_mono_factorize(&id), (id.clone(), id.clone()));
        let (e, mo) = epi_mono_factorize(&m("[0,0,2]:2->2"));
        assert_eq!(e, m("[0,0,1]:2->1"));
        assert_eq!(mo, m("[0,2]:1->2"));
        let (e, mo) = epi_mono_factorize(&OrdinalMap::from_empty(4));
        assert_eq!(e, OrdinalMap::identity(-1));
        assert_eq!(mo, OrdinalMap::from_empty(4));
    }

    #[test]
    fn factorization_is_unique_by_brute_force() {
        for n in -1..=3 {
            for t in -1..=3 {
                for f in enumerate_maps(n, t) {
                    let mut found = Vec::new();
                    for y in -1..=3 {
                        for e in enumerate_maps(n, y).into_iter().filter(|e| e.is_epi()) {
                            for mo in enumerate_maps(y, t).into_iter().filter(|mo| mo.is_mono()) {
                                if compose(&e, &mo).unwrap() == f {
                                    found.push((e.clone(), mo));
                                }
                            }
                        }
                    }
                    assert_eq!(found, vec![epi_mono_factorize(&f)], "{f}");
                    assert_eq!(found[0].0.tgt() as i64 + 1, f.image_size() as i64);
                }
            }
        }
    }

    #[test]
    fn pushouts() {
        let f = m("[0,0,1]:2->1");
        let (a, b) = pushout_of_epis(&f, &f).unwrap();
        assert!(a.is_identity() && b.is_identity());
        let g = m("[0,1,1]:2->1");
        let (a, b) = pushout_of_epis(&f, &g).unwrap();
        assert_eq!((a.tgt(), b.tgt()), (0, 0));
        let (a, b) = pushout_of_epis(&OrdinalMap::identity(2), &g).unwrap();
        assert_eq!((a, b), (g.clone(), OrdinalMap::identity(1)));
        assert!(pushout_of_epis(&f, &m("[0,1,2]:2->3")).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_maps(1, 1).len(), 3);
        assert_eq!(enumerate_maps(0, 2).len(), 3);
        assert_eq!(enumerate_maps(-1, 5).len(), 1);
        assert_eq!(enumerate_maps(3, -1).len(), 0);
        // C(n+m+1, n+1)
        assert_eq!(enumerate_maps(2, 3).len(), 20);
    }
}
