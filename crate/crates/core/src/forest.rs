//! Rooted forests over the vertex set, used as treedepth certificates.

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};

/// `parent[v]` is `None` for roots. Serializes as a JSON array with `null` roots.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EliminationForest {
    parent: Vec<Option<usize>>,
}

impl EliminationForest {
    /// Rejects out-of-range parents and cycles.
    pub fn new(parent: Vec<Option<usize>>) -> Result<EliminationForest> {
        let f = EliminationForest { parent };
        if f.parent.iter().flatten().any(|&p| p >= f.parent.len()) {
            return Err(Error::InvalidArgument("parent index out of range".into()));
        }
        if f.levels().is_none() {
            return Err(Error::InvalidArgument("parent pointers contain a cycle".into()));
        }
        Ok(f)
    }

    /// Builds a forest without checking acyclicity; for verifier tests.
    pub fn from_parents_unchecked(parent: Vec<Option<usize>>) -> EliminationForest {
        EliminationForest { parent }
    }

    /// Every vertex is a root.
    pub fn flat(n: usize) -> EliminationForest {
        EliminationForest { parent: vec![None; n] }
    }

    /// A single chain visiting `order` from the root down.
    pub fn chain(order: &[usize], n: usize) -> Result<EliminationForest> {
        let mut parent = vec![None; n];
        for w in order.windows(2) {
            parent[w[1]] = Some(w[0]);
        }
        EliminationForest::new(parent)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.parent[v].is_none()).collect()
    }

    /// Distance to the root for every vertex (roots are at level 0), or
    /// `None` when parent pointers are out of range or cyclic.
    pub fn levels(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut level = vec![usize::MAX; n];
        for start in 0..n {
            let mut chain = Vec::new();
            let mut v = start;
            loop {
                if level[v] != usize::MAX {
                    break;
                }
                if chain.len() > n {
                    return None;
                }
                chain.push(v);
                match self.parent[v] {
                    Some(p) if p < n => v = p,
                    Some(_) => return None,
                    None => {
                        level[v] = 0;
                        chain.pop();
                        break;
                    }
                }
            }
            let mut base = level[v];
            for &u in chain.iter().rev() {
                base += 1;
                level[u] = base;
            }
        }
        Some(level)
    }

    /// Number of vertices on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        self.levels().map_or(0, |l| l.into_iter().map(|x| x + 1).max().unwrap_or(0))
    }

    pub fn is_ancestor(&self, a: usize, mut v: usize) -> bool {
        let mut steps = 0;
        while let Some(p) = self.parent[v] {
            if p == a {
                return true;
            }
            v = p;
            steps += 1;
            if steps > self.len() {
                return false;
            }
        }
        false
    }

    /// Strict ancestors of `v`, nearest first.
    pub fn ancestors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            if out.len() >= self.len() {
                break;
            }
            out.push(p);
            cur = p;
        }
        out
    }

    /// Colors each vertex by its distance to the root.
    pub fn depth_coloring(&self) -> Coloring {
        let levels = self.levels().expect("forest is acyclic");
        Coloring::new(levels.into_iter().map(|l| l as u32).collect())
    }
}
