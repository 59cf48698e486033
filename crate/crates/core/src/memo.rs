use std::collections::HashMap;
use std::sync::Arc;

use crate::vertex_set::VertexSet;

/// Memo table for recursions over induced subgraphs of one root graph,
/// keyed by the kept vertex set. Once `cap` entries are stored, further
/// results are computed but not retained.
#[derive(Debug)]
pub(crate) struct Memo<V> {
    map: HashMap<VertexSet, Arc<V>>,
    cap: Option<usize>,
}

impl<V> Memo<V> {
    pub(crate) fn new(cap: Option<usize>) -> Self {
        Memo {
            map: HashMap::new(),
            cap,
        }
    }

    pub(crate) fn get(&self, key: VertexSet) -> Option<Arc<V>> {
        self.map.get(&key).cloned()
    }

    pub(crate) fn insert(&mut self, key: VertexSet, value: V) -> Arc<V> {
        let value = Arc::new(value);
        if self.cap.is_none_or(|c| self.map.len() < c) {
            self.map.insert(key, Arc::clone(&value));
        }
        value
    }

    #[cfg(test)]
    pub(crate) fn len(&self) -> usize {
        self.map.len()
    }
}

/// Options shared by the memoized recursions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecursionConfig {
    pub pivot: crate::pivot::PivotRule,
    /// Maximum number of memoized subproblems; `None` is unbounded.
    pub memo_cap: Option<usize>,
}

impl RecursionConfig {
    pub fn with_pivot(pivot: crate::pivot::PivotRule) -> Self {
        RecursionConfig {
            pivot,
            memo_cap: None,
        }
    }
}
