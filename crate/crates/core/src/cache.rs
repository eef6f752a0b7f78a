//! Bounded LRU cache of rectangular distance matrices between two vertex lists.
//!
//! Entries live in a slab-backed doubly linked list ordered by recency, with a
//! hash map from key to slab slot. Matrices are handed out as `Rc`, so an
//! eviction never invalidates a matrix a caller is still using.

use std::collections::HashMap;
use std::rc::Rc;

use serde::Serialize;

use crate::graph::VertexId;
use crate::labeling::HubLabels;

/// Smallest capacity the search can run with: one explore step holds seven
/// matrices at once.
pub const MIN_CAPACITY: usize = 7;
pub const DEFAULT_CAPACITY: usize = 10_000;
pub const DEFAULT_SIDE_LIMIT: usize = 50_000;

/// Exact distances between every row vertex and every column vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectMatrix {
    pub rows: Vec<VertexId>,
    pub cols: Vec<VertexId>,
    data: Vec<u32>,
}

impl RectMatrix {
    pub fn build(rows: &[VertexId], cols: &[VertexId], labels: &HubLabels) -> RectMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &a in rows {
            data.extend(cols.iter().map(|&b| labels.query_distance(a, b)));
        }
        RectMatrix { rows: rows.to_vec(), cols: cols.to_vec(), data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols.len() + j]
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }
}

/// Ordered key; `(level, a, b)` and `(level, b, a)` are distinct entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MatrixKey {
    pub level: u32,
    pub a: u32,
    pub b: u32,
}

/// Result of a cache request.
#[derive(Clone, Debug)]
pub enum Fetched {
    Matrix(Rc<RectMatrix>),
    /// A side exceeds the limit; the caller should query labels directly.
    Bypass,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub bypasses: u64,
    pub evictions: u64,
    /// Label queries spent building matrices.
    pub label_queries: u64,
}

const NIL: usize = usize::MAX;

struct Node {
    key: MatrixKey,
    matrix: Rc<RectMatrix>,
    prev: usize,
    next: usize,
}

pub struct MatrixCache {
    capacity: usize,
    side_limit: usize,
    map: HashMap<MatrixKey, usize>,
    nodes: Vec<Node>,
    free: Vec<usize>,
    // least recent at head, most recent at tail
    head: usize,
    tail: usize,
    stats: CacheStats,
}

impl MatrixCache {
    /// Capacities below [`MIN_CAPACITY`] are raised to it.
    pub fn new(capacity: usize, side_limit: usize) -> Self {
        MatrixCache {
            capacity: capacity.max(MIN_CAPACITY),
            side_limit,
            map: HashMap::new(),
            nodes: Vec::new(),
            free: Vec::new(),
            head: NIL,
            tail: NIL,
            stats: CacheStats::default(),
        }
    }

    /// A cache that never stores anything: every request is a bypass.
    pub fn bypassing() -> Self {
        Self::new(MIN_CAPACITY, 0)
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn side_limit(&self) -> usize {
        self.side_limit
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn stats(&self) -> CacheStats {
        self.stats
    }

    pub fn contains(&self, key: &MatrixKey) -> bool {
        self.map.contains_key(key)
    }

    /// Returns the matrix for `key`, building it from `rows x cols` label
    /// queries on a miss.
    pub fn get_matrix(
        &mut self,
        key: MatrixKey,
        rows: &[VertexId],
        cols: &[VertexId],
        labels: &HubLabels,
    ) -> Fetched {
        if rows.len().max(cols.len()) > self.side_limit {
            self.stats.bypasses += 1;
            return Fetched::Bypass;
        }
        if let Some(&slot) = self.map.get(&key) {
            self.stats.hits += 1;
            self.unlink(slot);
            self.push_back(slot);
            return Fetched::Matrix(Rc::clone(&self.nodes[slot].matrix));
        }
        self.stats.misses += 1;
        self.stats.label_queries += (rows.len() * cols.len()) as u64;
        let matrix = Rc::new(RectMatrix::build(rows, cols, labels));
        if self.map.len() == self.capacity {
            let victim = self.head;
            self.unlink(victim);
            self.map.remove(&self.nodes[victim].key);
            self.free.push(victim);
            self.stats.evictions += 1;
        }
        let node = Node { key, matrix: Rc::clone(&matrix), prev: NIL, next: NIL };
        let slot = match self.free.pop() {
            Some(s) => {
                self.nodes[s] = node;
                s
            }
            None => {
                self.nodes.push(node);
                self.nodes.len() - 1
            }
        };
        self.push_back(slot);
        self.map.insert(key, slot);
        Fetched::Matrix(matrix)
    }

    fn unlink(&mut self, slot: usize) {
        let (prev, next) = (self.nodes[slot].prev, self.nodes[slot].next);
        if prev == NIL {
            self.head = next;
        } else {
            self.nodes[prev].next = next;
        }
        if next == NIL {
            self.tail = prev;
        } else {
            self.nodes[next].prev = prev;
        }
    }

    fn push_back(&mut self, slot: usize) {
        self.nodes[slot].prev = self.tail;
        self.nodes[slot].next = NIL;
        if self.tail == NIL {
            self.head = slot;
        } else {
            self.nodes[self.tail].next = slot;
        }
        self.tail = slot;
    }
}
