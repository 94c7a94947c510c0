//! JSON description of a finite category action.
//!
//! ```json
//! {
//!   "acting": { "objects": ["0", "1"], "arrows": [{"name": "p", "src": "0", "tgt": "1"}], "compose": [] },
//!   "acted":  { "objects": ["x", "y"], "arrows": [{"name": "g", "src": "x", "tgt": "y"}], "compose": [] },
//!   "moment": { "x": "0", "y": "0" },
//!   "action": [{ "f": "p", "g": "g", "result": "g" }]
//! }
//! ```
//!
//! Each object `X` has an implicit identity arrow named `id_X`. Composition
//! triples `[f, g, h]` read "first `f`, then `g`, equals `h`"; composites with
//! an identity are implicit. Identity arrows act trivially unless an explicit
//! entry says otherwise. `arrow_moment` optionally states moments of arrows,
//! which the checker compares with the moment of their target. Unknown fields
//! are rejected.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Arrow, CatAction, FinCategory};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategorySpec {
    pub objects: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub f: String,
    pub g: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub acting: CategorySpec,
    pub acted: CategorySpec,
    pub moment: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub arrow_moment: BTreeMap<String, String>,
    #[serde(default)]
    pub action: Vec<ActionEntry>,
}

impl CategorySpec {
    pub fn build(&self) -> Result<FinCategory> {
        let objects = self.objects.clone();
        let obj = |n: &str| objects.iter().position(|o| o == n).ok_or_else(|| Error::UnknownName(n.into()));
        let mut arrows: Vec<Arrow> =
            objects.iter().enumerate().map(|(i, o)| Arrow { name: format!("id_{o}"), src: i, tgt: i }).collect();
        let identity: Vec<usize> = (0..objects.len()).collect();
        for a in &self.arrows {
            if arrows.iter().any(|b| b.name == a.name) {
                return Err(Error::Parse(format!("duplicate arrow name `{}`", a.name)));
            }
            arrows.push(Arrow { name: a.name.clone(), src: obj(&a.src)?, tgt: obj(&a.tgt)? });
        }
        let mut compose = BTreeMap::new();
        for (i, a) in arrows.iter().enumerate() {
            compose.insert((identity[a.src], i), i);
            compose.insert((i, identity[a.tgt]), i);
        }
        let arr = |n: &str| arrows.iter().position(|a| a.name == n).ok_or_else(|| Error::UnknownName(n.into()));
        for [f, g, h] in &self.compose {
            compose.insert((arr(f)?, arr(g)?), arr(h)?);
        }
        Ok(FinCategory { objects, arrows, identity, compose })
    }

    pub fn from_category(c: &FinCategory) -> Self {
        let arrows = c
            .arrows
            .iter()
            .enumerate()
            .filter(|(i, _)| !c.is_identity(*i))
            .map(|(_, a)| ArrowSpec {
                name: a.name.clone(),
                src: c.objects[a.src].clone(),
                tgt: c.objects[a.tgt].clone(),
            })
            .collect();
        let mut compose: Vec<[String; 3]> = c
            .compose
            .iter()
            .filter(|(&(f, g), _)| !c.is_identity(f) && !c.is_identity(g))
            .map(|(&(f, g), &h)| [arrow_name(c, f), arrow_name(c, g), arrow_name(c, h)])
            .collect();
        compose.sort();
        CategorySpec { objects: c.objects.clone(), arrows, compose }
    }
}

impl ActionSpec {
    pub fn build(&self) -> Result<CatAction> {
        let acting = self.acting.build()?;
        let acted = self.acted.build()?;
        let mut moment = Vec::with_capacity(acted.num_objects());
        for o in &acted.objects {
            let m = self.moment.get(o).ok_or_else(|| Error::Parse(format!("no moment given for `{o}`")))?;
            moment.push(acting.object_index(m)?);
        }
        for k in self.moment.keys() {
            acted.object_index(k)?;
        }
        let mut arrow_moment = BTreeMap::new();
        for (g, m) in &self.arrow_moment {
            arrow_moment.insert(acted.arrow_index(g)?, acting.object_index(m)?);
        }
        let mut action = BTreeMap::new();
        for g in 0..acted.num_arrows() {
            let m = moment[acted.tgt(g)];
            action.insert((acting.identity[m], g), g);
        }
        for e in &self.action {
            action.insert((acting.arrow_index(&e.f)?, acted.arrow_index(&e.g)?), acted.arrow_index(&e.result)?);
        }
        Ok(CatAction { acting, acted, moment, arrow_moment, action })
    }

    pub fn from_action(a: &CatAction) -> Self {
        let moment =
            a.acted.objects.iter().zip(&a.moment).map(|(o, &m)| (o.clone(), a.acting.objects[m].clone())).collect();
        let arrow_moment =
            a.arrow_moment.iter().map(|(&g, &m)| (arrow_name(&a.acted, g), a.acting.objects[m].clone())).collect();
        let mut action: Vec<ActionEntry> = a
            .action
            .iter()
            .filter(|(&(f, g), &r)| !(a.acting.is_identity(f) && r == g))
            .map(|(&(f, g), &r)| ActionEntry {
                f: arrow_name(&a.acting, f),
                g: arrow_name(&a.acted, g),
                result: arrow_name(&a.acted, r),
            })
            .collect();
        action.sort_by(|x, y| (&x.f, &x.g).cmp(&(&y.f, &y.g)));
        ActionSpec {
            acting: CategorySpec::from_category(&a.acting),
            acted: CategorySpec::from_category(&a.acted),
            moment,
            arrow_moment,
            action,
        }
    }
}

/// Identities are implicit in the JSON form and are always called `id_<object>`.
fn arrow_name(c: &FinCategory, f: usize) -> String {
    if c.is_identity(f) {
        format!("id_{}", c.objects[c.src(f)])
    } else {
        c.arrows[f].name.clone()
    }
}

pub fn parse_action(text: &str) -> Result<CatAction> {
    let spec: ActionSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    spec.build()
}

pub fn action_to_json(a: &CatAction) -> String {
    serde_json::to_string_pretty(&ActionSpec::from_action(a)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::check_cat_action;

    const ONE_ON_ITSELF: &str = r#"{
      "acting": {"objects": ["0", "1"], "arrows": [{"name": "0->1", "src": "0", "tgt": "1"}]},
      "acted":  {"objects": ["0", "1"], "arrows": [{"name": "0->1", "src": "0", "tgt": "1"}]},
      "moment": {"0": "0", "1": "1"},
      "action": [{"f": "0->1", "g": "id_0", "result": "0->1"}]
    }"#;

    #[test]
    fn parses_and_checks() {
        let a = parse_action(ONE_ON_ITSELF).unwrap();
        assert!(check_cat_action(&a).is_ok(), "{}", check_cat_action(&a));
        assert_eq!(a, CatAction::self_composition(crate::fincat::FinCategory::ordinal(1)));
    }

    #[test]
    fn round_trip() {
        let a = CatAction::conjugation(crate::fincat::FinCategory::cyclic_group(3));
        let b = parse_action(&action_to_json(&a)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_unknown_fields_and_names() {
        let extra = ONE_ON_ITSELF.replacen("\"moment\"", "\"bogus\": 1, \"moment\"", 1);
        assert!(matches!(parse_action(&extra), Err(Error::Parse(_))));
        let bad = ONE_ON_ITSELF.replace("\"result\": \"0->1\"", "\"result\": \"q\"");
        assert!(matches!(parse_action(&bad), Err(Error::UnknownName(_))));
    }
}
