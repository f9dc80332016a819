use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

/// A write-once-per-key cache shared between threads.
///
/// Values are computed outside the lock; if two threads race on the same key
/// the first insertion wins and both observe it.
pub(crate) struct Memo<K, V> {
    map: Mutex<Option<HashMap<K, Arc<V>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo {
            map: Mutex::new(None),
        }
    }

    pub(crate) fn get_or_try_insert<E>(
        &self,
        key: &K,
        make: impl FnOnce() -> Result<V, E>,
    ) -> Result<Arc<V>, E> {
        if let Some(v) = self.lookup(key) {
            return Ok(v);
        }
        let value = Arc::new(make()?);
        let mut guard = self.map.lock().unwrap_or_else(|e| e.into_inner());
        let map = guard.get_or_insert_with(HashMap::new);
        Ok(map.entry(key.clone()).or_insert(value).clone())
    }

    fn lookup(&self, key: &K) -> Option<Arc<V>> {
        let guard = self.map.lock().unwrap_or_else(|e| e.into_inner());
        guard.as_ref().and_then(|m| m.get(key).cloned())
    }
}
