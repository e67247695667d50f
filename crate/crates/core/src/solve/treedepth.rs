//! Exact treedepth (= centered chromatic number).
//!
//! `td` of a disconnected set is the maximum over its components, and for a
//! connected set `S` it is `1 + min_v td(S - v)`. The recursion runs with an
//! upper bound so that a candidate root is abandoned as soon as one child
//! component reaches the best value found so far. Results are memoized on the
//! connected-set bitmask, either exactly or as a proven lower bound.

use std::collections::HashMap;

use crate::forest::EliminationForest;
use crate::graph::{Graph, VertexSet};

/// Graphs above this order are solved without the memo table.
pub const MEMO_MAX_ORDER: usize = 30;

#[derive(Clone, Copy)]
enum Memo {
    Exact { value: u8, root: u8 },
    AtLeast(u8),
}

const NO_ROOT: usize = usize::MAX;

pub(crate) struct Treedepth<'a> {
    g: &'a Graph,
    memo: Option<HashMap<u64, Memo>>,
}

impl<'a> Treedepth<'a> {
    pub(crate) fn new(g: &'a Graph) -> Treedepth<'a> {
        let memo = (g.n() <= MEMO_MAX_ORDER).then(HashMap::new);
        Treedepth { g, memo }
    }

    /// Exact value if it is below `ub`, otherwise some value `>= ub`.
    fn of_set(&mut self, s: VertexSet, ub: usize) -> usize {
        let mut worst = 0;
        for comp in self.g.components_within(s) {
            let (t, _) = self.of_connected(comp, ub);
            worst = worst.max(t);
            if worst >= ub {
                break;
            }
        }
        worst
    }

    /// `(value, root)` for a connected set: exact with its lowest-index
    /// optimal root when the value is below `ub`, else `(>= ub, NO_ROOT)`.
    fn of_connected(&mut self, s: VertexSet, ub: usize) -> (usize, usize) {
        let size = s.len();
        if size == 1 {
            return (1, s.first().expect("nonempty"));
        }
        if self.g.is_clique(s) {
            return if size < ub { (size, s.first().expect("nonempty")) } else { (size, NO_ROOT) };
        }
        let mut lb = 2;
        if let Some(memo) = &self.memo {
            match memo.get(&s.0) {
                Some(&Memo::Exact { value, root }) => return (value as usize, root as usize),
                Some(&Memo::AtLeast(at_least)) => {
                    if at_least as usize >= ub {
                        return (at_least as usize, NO_ROOT);
                    }
                    lb = lb.max(at_least as usize);
                }
                None => {}
            }
        }
        if ub <= lb {
            return (lb, NO_ROOT);
        }
        let mut best = ub;
        let mut root = NO_ROOT;
        for v in s {
            if best <= lb {
                break;
            }
            let t = 1 + self.of_set(s.without(v), best - 1);
            if t < best {
                best = t;
                root = v;
            }
        }
        if let Some(memo) = &mut self.memo {
            let entry = if root != NO_ROOT {
                Memo::Exact { value: best as u8, root: root as u8 }
            } else {
                Memo::AtLeast(best.max(lb) as u8)
            };
            memo.insert(s.0, entry);
        }
        (best, root)
    }

    pub(crate) fn value(&mut self) -> usize {
        if self.g.n() == 0 {
            return 0;
        }
        self.of_set(self.g.vertices(), self.g.n() + 1)
    }

    fn build(&mut self, s: VertexSet, above: Option<usize>, parent: &mut [Option<usize>]) {
        for comp in self.g.components_within(s) {
            let (_, root) = self.of_connected(comp, self.g.n() + 1);
            debug_assert_ne!(root, NO_ROOT);
            parent[root] = above;
            self.build(comp.without(root), Some(root), parent);
        }
    }

    /// An elimination forest of minimum depth.
    pub(crate) fn forest(&mut self) -> EliminationForest {
        let mut parent = vec![None; self.g.n()];
        self.build(self.g.vertices(), None, &mut parent);
        EliminationForest::new(parent).expect("reconstructed forest is acyclic")
    }
}

/// Treedepth of `g` with a minimum-depth elimination forest.
pub fn treedepth(g: &Graph) -> (usize, EliminationForest) {
    let mut td = Treedepth::new(g);
    let value = td.value();
    (value, td.forest())
}
