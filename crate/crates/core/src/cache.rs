//! Build-once memo tables that are safe to read concurrently.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

#[derive(Debug)]
pub struct BuildOnce<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K, V> Default for BuildOnce<K, V> {
    fn default() -> Self {
        BuildOnce { map: RwLock::new(HashMap::new()) }
    }
}

impl<K: Eq + Hash + Clone, V> BuildOnce<K, V> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the cached value for `key`, building it with `build` on first use.
    /// Concurrent callers racing on the same key all receive the first inserted value.
    pub fn get_or_build(&self, key: &K, build: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map.read().expect("poisoned cache").get(key) {
            return v.clone();
        }
        let value = Arc::new(build());
        let mut w = self.map.write().expect("poisoned cache");
        w.entry(key.clone()).or_insert(value).clone()
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("poisoned cache").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
