//! Order-preserving batch maps with a rayon backend and a sequential fallback.
//!
//! Without the `parallel` feature every mode runs sequentially.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    #[default]
    Parallel,
}

pub fn map<T, R, F>(mode: Mode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// A read-mostly memo table. Values are computed outside the lock, so a
/// racing insert may compute twice but always stores an equal value.
pub(crate) struct Memo<K, V> {
    table: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo { table: RwLock::new(HashMap::new()) }
    }

    pub(crate) fn get_or_insert_with(&self, key: &K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.table.read().unwrap().get(key) {
            return v.clone();
        }
        let v = f();
        self.table.write().unwrap().entry(key.clone()).or_insert(v).clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_keep_order() {
        let items: Vec<u64> = (0..200).collect();
        let seq = map(Mode::Sequential, &items, |x| x * x);
        let par = map(Mode::Parallel, &items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[13], 169);
    }

    #[test]
    fn memo_computes_once_per_key() {
        let memo: Memo<u32, u32> = Memo::new();
        assert_eq!(memo.get_or_insert_with(&3, || 9), 9);
        assert_eq!(memo.get_or_insert_with(&3, || unreachable!()), 9);
    }
}
