//! Sharded, capacity-bounded memo cache with least-recently-used eviction.
//!
//! Values are idempotent (pure function results), so concurrent inserts for
//! the same key are benign: last writer wins.

use std::collections::{BTreeMap, HashMap};
use std::hash::{DefaultHasher, Hash, Hasher};

use parking_lot::Mutex;

const SHARDS: usize = 16;

pub struct MemoCache<K, V> {
    shards: Vec<Mutex<Shard<K, V>>>,
    per_shard_cap: usize,
}

struct Shard<K, V> {
    map: HashMap<K, (V, u64)>,
    recency: BTreeMap<u64, K>,
    tick: u64,
}

impl<K: Hash + Eq + Clone, V: Clone> MemoCache<K, V> {
    pub fn new(capacity: usize) -> MemoCache<K, V> {
        let per_shard_cap = capacity.div_ceil(SHARDS).max(1);
        MemoCache {
            shards: (0..SHARDS)
                .map(|_| {
                    Mutex::new(Shard {
                        map: HashMap::new(),
                        recency: BTreeMap::new(),
                        tick: 0,
                    })
                })
                .collect(),
            per_shard_cap,
        }
    }

    fn shard_of(&self, key: &K) -> &Mutex<Shard<K, V>> {
        let mut hasher = DefaultHasher::new();
        key.hash(&mut hasher);
        &self.shards[(hasher.finish() as usize) % SHARDS]
    }

    pub fn get(&self, key: &K) -> Option<V> {
        let mut shard = self.shard_of(key).lock();
        shard.tick += 1;
        let tick = shard.tick;
        if let Some((value, stamp)) = shard.map.get_mut(key) {
            let value = value.clone();
            let old = *stamp;
            *stamp = tick;
            shard.recency.remove(&old);
            shard.recency.insert(tick, key.clone());
            Some(value)
        } else {
            None
        }
    }

    pub fn insert(&self, key: K, value: V) {
        let mut shard = self.shard_of(&key).lock();
        shard.tick += 1;
        let tick = shard.tick;
        if let Some((_, old)) = shard.map.remove(&key) {
            shard.recency.remove(&old);
        }
        shard.map.insert(key.clone(), (value, tick));
        shard.recency.insert(tick, key);
        if shard.map.len() > self.per_shard_cap {
            if let Some((&oldest, _)) = shard.recency.iter().next() {
                if let Some(victim) = shard.recency.remove(&oldest) {
                    shard.map.remove(&victim);
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.shards.iter().map(|s| s.lock().map.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        for s in &self.shards {
            let mut s = s.lock();
            s.map.clear();
            s.recency.clear();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn get_and_insert() {
        let cache: MemoCache<u32, String> = MemoCache::new(64);
        assert_eq!(cache.get(&1), None);
        cache.insert(1, "one".into());
        assert_eq!(cache.get(&1), Some("one".into()));
        cache.insert(1, "uno".into());
        assert_eq!(cache.get(&1), Some("uno".into()));
        assert_eq!(cache.len(), 1);
    }

    #[test]
    fn eviction_drops_least_recent() {
        // capacity 16 -> 1 per shard; keys in the same shard contend
        let cache: MemoCache<u32, u32> = MemoCache::new(16);
        for k in 0..1000 {
            cache.insert(k, k);
        }
        assert!(cache.len() <= 16);
    }
}
