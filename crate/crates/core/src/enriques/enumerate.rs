use std::collections::BTreeMap;

use super::{EnriquesDiagram, Vertex};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`enumerate_diagrams`].
pub const MAX_ENUM_VERTICES: usize = 7;

/// Largest weight accepted by [`enumerate_diagrams`].
pub const MAX_ENUM_WEIGHT: u32 = 6;

struct Search {
    max_v: usize,
    max_w: u32,
    vertices: Vec<Vertex>,
    loads: Vec<u32>,
    child_counts: Vec<usize>,
    root_starts: Vec<usize>,
    found: BTreeMap<(usize, String), EnriquesDiagram>,
}

impl Search {
    fn is_free_lone_leaf(&self, v: usize) -> bool {
        let x = &self.vertices[v];
        x.weight == 1 && !x.is_satellite() && self.child_counts[v] == 0
    }

    /// Whether the last two root trees are in key order. Forests are only
    /// kept with their trees sorted, which every isomorphism class admits.
    fn roots_sorted(&self) -> bool {
        let [.., a, b] = self.root_starts[..] else {
            return true;
        };
        let d = EnriquesDiagram::new_unchecked(self.vertices.clone());
        d.subtree_key(a) <= d.subtree_key(b)
    }

    fn record(&mut self) {
        let last = self.vertices.len() - 1;
        if self.is_free_lone_leaf(last) || !self.roots_sorted() {
            return;
        }
        let d = EnriquesDiagram::new_unchecked(self.vertices.clone());
        debug_assert!(super::validate(&d).is_ok(), "{d:?}");
        let key = (d.len(), d.canonical_key());
        self.found.entry(key).or_insert_with(|| d.canonical_form());
    }

    fn push(&mut self, x: Vertex) {
        for t in [x.parent, x.remote].into_iter().flatten() {
            self.loads[t] += x.weight;
        }
        if let Some(p) = x.parent {
            self.child_counts[p] += 1;
        }
        self.vertices.push(x);
        self.loads.push(0);
        self.child_counts.push(0);
    }

    fn pop(&mut self) {
        let x = self.vertices.pop().expect("nonempty");
        self.loads.pop();
        self.child_counts.pop();
        for t in [x.parent, x.remote].into_iter().flatten() {
            self.loads[t] -= x.weight;
        }
        if let Some(p) = x.parent {
            self.child_counts[p] -= 1;
        }
    }

    fn capacity(&self, v: usize) -> u32 {
        self.vertices[v].weight - self.loads[v]
    }

    /// `path` is the rightmost path: the last root down to the last vertex.
    fn extend(&mut self, path: &mut Vec<usize>) {
        if !self.vertices.is_empty() {
            self.record();
        }
        if self.vertices.len() == self.max_v {
            return;
        }
        let new = self.vertices.len();
        // A vertex leaving the rightmost path gets no more children, so it
        // must not be a free weight-1 leaf at that point.
        let last_is_lone = path
            .last()
            .is_some_and(|&last| self.is_free_lone_leaf(last));
        if !last_is_lone && self.roots_sorted() {
            self.root_starts.push(new);
            for w in 1..=self.max_w {
                self.push(Vertex::root(w));
                let saved = std::mem::replace(path, vec![new]);
                self.extend(path);
                *path = saved;
                self.pop();
            }
            self.root_starts.pop();
        }
        for j in 0..path.len() {
            if last_is_lone && j + 1 < path.len() {
                continue;
            }
            let p = path[j];
            let parent = self.vertices[p];
            let mut remotes: Vec<Option<usize>> = vec![None];
            for u in [parent.parent, parent.remote].into_iter().flatten() {
                let taken = (0..new).any(|i| {
                    self.vertices[i].parent == Some(p) && self.vertices[i].remote == Some(u)
                });
                if !taken && !remotes.contains(&Some(u)) {
                    remotes.push(Some(u));
                }
            }
            for remote in remotes {
                let mut cap = self.capacity(p);
                if let Some(u) = remote {
                    cap = cap.min(self.capacity(u));
                }
                for w in 1..=cap.min(self.max_w) {
                    self.push(Vertex {
                        weight: w,
                        parent: Some(p),
                        remote,
                    });
                    let saved = path.split_off(j + 1);
                    path.push(new);
                    self.extend(path);
                    path.pop();
                    path.extend(saved);
                    self.pop();
                }
            }
        }
    }
}

/// All valid minimal diagrams with at most `max_vertices` vertices and
/// weights at most `max_weight`, one per isomorphism class, in canonical
/// form, ordered by vertex count and then canonical key.
pub fn enumerate_diagrams(max_vertices: usize, max_weight: u32) -> Result<Vec<EnriquesDiagram>> {
    if max_vertices > MAX_ENUM_VERTICES || max_weight > MAX_ENUM_WEIGHT {
        return Err(Error::EnumerationLimit);
    }
    let mut search = Search {
        max_v: max_vertices,
        max_w: max_weight,
        vertices: Vec::new(),
        loads: Vec::new(),
        child_counts: Vec::new(),
        root_starts: Vec::new(),
        found: BTreeMap::new(),
    };
    search.extend(&mut Vec::new());
    Ok(search.found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::super::validate;
    use super::*;

    #[test]
    fn single_vertex() {
        let all = enumerate_diagrams(1, 2).unwrap();
        assert_eq!(
            all,
            vec![EnriquesDiagram::new(vec![Vertex::root(2)]).unwrap()]
        );
        assert!(enumerate_diagrams(1, 1).unwrap().is_empty());
        assert!(enumerate_diagrams(0, 3).unwrap().is_empty());
    }

    #[test]
    fn limits() {
        assert_eq!(enumerate_diagrams(8, 2), Err(Error::EnumerationLimit));
        assert_eq!(enumerate_diagrams(2, 7), Err(Error::EnumerationLimit));
    }

    #[test]
    fn all_valid_and_distinct() {
        let all = enumerate_diagrams(5, 3).unwrap();
        let mut keys: Vec<String> = all.iter().map(|d| d.canonical_key()).collect();
        for d in &all {
            assert!(validate(d).is_ok(), "{d:?}");
            assert_eq!(&d.canonical_form(), d);
        }
        let n = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), n);
    }

    #[test]
    fn a2_shape_appears() {
        let a2 = EnriquesDiagram::new(vec![
            Vertex::root(2),
            Vertex::free(1, 0),
            Vertex::satellite(1, 1, 0),
        ])
        .unwrap();
        assert!(enumerate_diagrams(3, 2)
            .unwrap()
            .iter()
            .any(|d| d.is_isomorphic(&a2)));
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            enumerate_diagrams(4, 3).unwrap(),
            enumerate_diagrams(4, 3).unwrap()
        );
    }
}
