//! Process-wide memo tables. Values are computed outside the lock.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{LazyLock, Mutex};

use crate::error::Result;

pub(crate) struct Memo<K, V>(LazyLock<Mutex<HashMap<K, V>>>);

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo(LazyLock::new(|| Mutex::new(HashMap::new())))
    }

    pub(crate) fn get(&self, k: &K) -> Option<V> {
        self.0.lock().expect("memo lock").get(k).cloned()
    }

    pub(crate) fn get_or_try<F: FnOnce() -> Result<V>>(&self, k: K, f: F) -> Result<V> {
        if let Some(v) = self.get(&k) {
            return Ok(v);
        }
        let v = f()?;
        self.0.lock().expect("memo lock").entry(k).or_insert_with(|| v.clone());
        Ok(v)
    }

    pub(crate) fn get_or<F: FnOnce() -> V>(&self, k: K, f: F) -> V {
        self.get_or_try(k, || Ok(f())).expect("infallible")
    }
}
