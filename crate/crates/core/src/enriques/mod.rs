//! Minimal Enriques diagrams and their numerical invariants.
//!
//! A diagram is a forest of weighted vertices. Every non-root vertex is
//! proximate to its parent, and a vertex may additionally be proximate to
//! one more distant ancestor, its *remote* target; such a vertex is a
//! satellite, all others (roots included) are free. The axioms checked by
//! [`validate`] are:
//!
//! 1. parents precede their children and weights are positive;
//! 2. a remote target is a proper ancestor other than the parent;
//! 3. if `W` is a satellite of `U`, then the parent of `W` is itself
//!    proximate to `U`, and no sibling of `W` is also a satellite of `U`;
//! 4. `m_V >= sum of m_W over the W proximate to V`;
//! 5. no leaf is a free vertex of weight 1.

mod enumerate;
mod named;
mod text;

use std::fmt;

use crate::error::{Error, Result};

pub use enumerate::{enumerate_diagrams, MAX_ENUM_VERTICES, MAX_ENUM_WEIGHT};
pub use named::{identify, named_diagram, named_single_root, DiagramName, NamedKind};
pub use text::{parse_diagram, write_diagram};

/// A vertex: its weight (multiplicity), parent and remote target, as
/// indices into the diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub weight: u32,
    pub parent: Option<usize>,
    pub remote: Option<usize>,
}

impl Vertex {
    pub fn root(weight: u32) -> Self {
        Self {
            weight,
            parent: None,
            remote: None,
        }
    }

    pub fn free(weight: u32, parent: usize) -> Self {
        Self {
            weight,
            parent: Some(parent),
            remote: None,
        }
    }

    pub fn satellite(weight: u32, parent: usize, remote: usize) -> Self {
        Self {
            weight,
            parent: Some(parent),
            remote: Some(remote),
        }
    }

    pub fn is_satellite(&self) -> bool {
        self.remote.is_some()
    }
}

/// A weighted proximity forest, vertices listed parent before child.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EnriquesDiagram {
    vertices: Vec<Vertex>,
}

/// The first axiom a diagram fails, with the offending vertex index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    ZeroWeight {
        vertex: usize,
    },
    ParentOrder {
        vertex: usize,
    },
    RemoteNotAncestor {
        vertex: usize,
    },
    RemoteChain {
        vertex: usize,
    },
    DuplicateRemote {
        vertex: usize,
    },
    ProximityInequality {
        vertex: usize,
        weight: u32,
        load: u32,
    },
    FreeWeightOneLeaf {
        vertex: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "diagram has no vertices"),
            Violation::ZeroWeight { vertex } => write!(f, "vertex {vertex} has weight 0"),
            Violation::ParentOrder { vertex } => {
                write!(f, "vertex {vertex} does not come after its parent")
            }
            Violation::RemoteNotAncestor { vertex } => write!(
                f,
                "remote target of vertex {vertex} is not a proper ancestor other than its parent"
            ),
            Violation::RemoteChain { vertex } => write!(
                f,
                "parent of vertex {vertex} is not proximate to its remote target"
            ),
            Violation::DuplicateRemote { vertex } => write!(
                f,
                "vertex {vertex} shares its parent and remote target with an earlier sibling"
            ),
            Violation::ProximityInequality {
                vertex,
                weight,
                load,
            } => write!(
                f,
                "vertex {vertex} has weight {weight} but proximate vertices of total weight {load}"
            ),
            Violation::FreeWeightOneLeaf { vertex } => {
                write!(f, "vertex {vertex} is a free leaf of weight 1")
            }
        }
    }
}

impl EnriquesDiagram {
    /// Builds a diagram, checking all axioms.
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        let d = Self { vertices };
        validate(&d).map_err(Error::InvalidDiagram)?;
        Ok(d)
    }

    /// Builds a diagram without checking the axioms.
    pub fn new_unchecked(vertices: Vec<Vertex>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.vertices[i].parent.is_none())
            .collect()
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.vertices[i].parent == Some(v))
            .collect()
    }

    /// Whether `a` is a proper ancestor of `v`.
    pub fn is_ancestor(&self, a: usize, v: usize) -> bool {
        let mut cur = self.vertices.get(v).and_then(|x| x.parent);
        while let Some(p) = cur {
            if p == a {
                return true;
            }
            cur = self.vertices[p].parent;
        }
        false
    }

    /// Whether `w` is proximate to `v`.
    pub fn is_proximate(&self, w: usize, v: usize) -> bool {
        let x = &self.vertices[w];
        x.parent == Some(v) || x.remote == Some(v)
    }

    /// Total weight of the vertices proximate to `v`.
    pub fn proximity_load(&self, v: usize) -> u32 {
        (0..self.len())
            .filter(|&w| self.is_proximate(w, v))
            .map(|w| self.vertices[w].weight)
            .sum()
    }

    /// Number of generations from `v` up to its remote target, or 0.
    fn remote_distance(&self, v: usize) -> usize {
        let Some(target) = self.vertices[v].remote else {
            return 0;
        };
        let mut steps = 0;
        let mut cur = Some(v);
        while let Some(c) = cur {
            if c == target {
                return steps;
            }
            steps += 1;
            cur = self.vertices[c].parent;
        }
        0
    }

    fn subtree_key(&self, v: usize) -> String {
        let mut kids: Vec<String> = self
            .children(v)
            .iter()
            .map(|&c| self.subtree_key(c))
            .collect();
        kids.sort();
        let x = &self.vertices[v];
        format!(
            "({}.{}{})",
            x.weight,
            self.remote_distance(v),
            kids.concat()
        )
    }

    /// A string equal for two diagrams exactly when they are isomorphic.
    pub fn canonical_key(&self) -> String {
        let mut keys: Vec<String> = self.roots().iter().map(|&r| self.subtree_key(r)).collect();
        keys.sort();
        keys.concat()
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.canonical_key() == other.canonical_key()
    }

    /// The isomorphic diagram with roots and children in canonical-key
    /// order, numbered in preorder.
    pub fn canonical_form(&self) -> Self {
        let mut order: Vec<usize> = Vec::with_capacity(self.len());
        let mut roots = self.roots();
        roots.sort_by_key(|&r| self.subtree_key(r));
        for r in roots {
            self.preorder(r, &mut order);
        }
        let mut new_index = vec![0; self.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let vertices = order
            .iter()
            .map(|&old| {
                let x = self.vertices[old];
                Vertex {
                    weight: x.weight,
                    parent: x.parent.map(|p| new_index[p]),
                    remote: x.remote.map(|u| new_index[u]),
                }
            })
            .collect();
        Self { vertices }
    }

    fn preorder(&self, v: usize, out: &mut Vec<usize>) {
        out.push(v);
        let mut kids = self.children(v);
        kids.sort_by_key(|&c| self.subtree_key(c));
        for c in kids {
            self.preorder(c, out);
        }
    }
}

/// Checks the axioms, reporting the first violation.
pub fn validate(d: &EnriquesDiagram) -> std::result::Result<(), Violation> {
    let vs = d.vertices();
    if vs.is_empty() {
        return Err(Violation::Empty);
    }
    for (i, x) in vs.iter().enumerate() {
        if x.weight == 0 {
            return Err(Violation::ZeroWeight { vertex: i });
        }
        if let Some(p) = x.parent {
            if p >= i {
                return Err(Violation::ParentOrder { vertex: i });
            }
        } else if x.remote.is_some() {
            return Err(Violation::RemoteNotAncestor { vertex: i });
        }
    }
    for (i, x) in vs.iter().enumerate() {
        let (Some(p), Some(u)) = (x.parent, x.remote) else {
            continue;
        };
        if u == p || !d.is_ancestor(u, i) {
            return Err(Violation::RemoteNotAncestor { vertex: i });
        }
    }
    for (i, x) in vs.iter().enumerate() {
        let (Some(p), Some(u)) = (x.parent, x.remote) else {
            continue;
        };
        if !d.is_proximate(p, u) {
            return Err(Violation::RemoteChain { vertex: i });
        }
        if vs[..i]
            .iter()
            .any(|y| y.parent == Some(p) && y.remote == Some(u))
        {
            return Err(Violation::DuplicateRemote { vertex: i });
        }
    }
    for (i, x) in vs.iter().enumerate() {
        let load = d.proximity_load(i);
        if load > x.weight {
            return Err(Violation::ProximityInequality {
                vertex: i,
                weight: x.weight,
                load,
            });
        }
    }
    for (i, x) in vs.iter().enumerate() {
        if x.weight == 1 && !x.is_satellite() && d.children(i).is_empty() {
            return Err(Violation::FreeWeightOneLeaf { vertex: i });
        }
    }
    Ok(())
}

/// The numerical invariants of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramInvariants {
    pub roots: i64,
    pub free: i64,
    pub dim: i64,
    pub deg: i64,
    pub cod: i64,
    pub delta: i64,
    pub branches: i64,
    pub milnor: i64,
    /// `milnor + m_R - 1`, defined for single-root diagrams.
    pub jacobian_mult: Option<i64>,
}

fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Computes the invariants of a valid diagram.
pub fn invariants(d: &EnriquesDiagram) -> Result<DiagramInvariants> {
    validate(d).map_err(Error::InvalidDiagram)?;
    let vs = d.vertices();
    let roots = d.roots();
    let rts = roots.len() as i64;
    let free = vs.iter().filter(|x| !x.is_satellite()).count() as i64;
    let dim = rts + free;
    let deg: i64 = vs.iter().map(|x| choose2(x.weight as i64 + 1)).sum();
    let delta: i64 = vs.iter().map(|x| choose2(x.weight as i64)).sum();
    let branches: i64 = (0..d.len())
        .map(|i| vs[i].weight as i64 - d.proximity_load(i) as i64)
        .sum();
    let milnor = 2 * delta - branches + rts;
    let jacobian_mult = match roots.as_slice() {
        [r] => Some(milnor + vs[*r].weight as i64 - 1),
        _ => None,
    };
    Ok(DiagramInvariants {
        roots: rts,
        free,
        dim,
        deg,
        cod: deg - dim,
        delta,
        branches,
        milnor,
        jacobian_mult,
    })
}

/// One inequality `lhs <= rhs` (or identity `lhs == rhs` for part (i)).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartResult {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub equality: bool,
}

impl PartResult {
    fn le(lhs: i64, rhs: i64) -> Self {
        Self {
            lhs,
            rhs,
            holds: lhs <= rhs,
            equality: lhs == rhs,
        }
    }

    fn eq(lhs: i64, rhs: i64) -> Self {
        Self {
            lhs,
            rhs,
            holds: lhs == rhs,
            equality: lhs == rhs,
        }
    }
}

/// The eight relations between the invariants of a single-root diagram.
///
/// 1. `m_R = branches + sum of satellite weights`
/// 2. `delta <= cod`
/// 3. `cod <= milnor`
/// 4. `milnor <= 2 delta`
/// 5. `cod <= 2 delta`
/// 6. `2 delta <= e`
/// 7. `e <= cod + delta`
/// 8. `e <= 2 cod`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma35Report {
    pub parts: [PartResult; 8],
}

impl Lemma35Report {
    pub fn all_hold(&self) -> bool {
        self.parts.iter().all(|p| p.holds)
    }

    /// Part `n` for `n` in `1..=8`.
    pub fn part(&self, n: usize) -> &PartResult {
        &self.parts[n - 1]
    }
}

pub fn lemma35_report(d: &EnriquesDiagram) -> Result<Lemma35Report> {
    let inv = invariants(d)?;
    let roots = d.roots();
    let [root] = roots.as_slice() else {
        return Err(Error::NotSingleRoot(roots.len()));
    };
    let m_r = d.vertices()[*root].weight as i64;
    let satellites: i64 = d
        .vertices()
        .iter()
        .filter(|x| x.is_satellite())
        .map(|x| x.weight as i64)
        .sum();
    let e = inv.jacobian_mult.expect("single root");
    let (cod, delta, mu) = (inv.cod, inv.delta, inv.milnor);
    Ok(Lemma35Report {
        parts: [
            PartResult::eq(m_r, inv.branches + satellites),
            PartResult::le(delta, cod),
            PartResult::le(cod, mu),
            PartResult::le(mu, 2 * delta),
            PartResult::le(cod, 2 * delta),
            PartResult::le(2 * delta, e),
            PartResult::le(e, cod + delta),
            PartResult::le(e, 2 * cod),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> EnriquesDiagram {
        EnriquesDiagram::new(vec![Vertex::root(2)]).unwrap()
    }

    fn a2() -> EnriquesDiagram {
        EnriquesDiagram::new(vec![
            Vertex::root(2),
            Vertex::free(1, 0),
            Vertex::satellite(1, 1, 0),
        ])
        .unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(validate(&a1()).is_ok());
        let lone = EnriquesDiagram::new_unchecked(vec![Vertex::root(1)]);
        assert_eq!(
            validate(&lone),
            Err(Violation::FreeWeightOneLeaf { vertex: 0 })
        );
        let crowded = EnriquesDiagram::new_unchecked(vec![
            Vertex::root(2),
            Vertex::free(1, 0),
            Vertex::free(1, 0),
            Vertex::free(1, 0),
        ]);
        assert_eq!(
            validate(&crowded),
            Err(Violation::ProximityInequality {
                vertex: 0,
                weight: 2,
                load: 3
            })
        );
        assert_eq!(
            validate(&EnriquesDiagram::new_unchecked(vec![])),
            Err(Violation::Empty)
        );
    }

    #[test]
    fn structural_violations() {
        let bad_order = EnriquesDiagram::new_unchecked(vec![Vertex::free(2, 1), Vertex::root(2)]);
        assert_eq!(
            validate(&bad_order),
            Err(Violation::ParentOrder { vertex: 0 })
        );
        let remote_is_parent =
            EnriquesDiagram::new_unchecked(vec![Vertex::root(2), Vertex::satellite(1, 0, 0)]);
        assert_eq!(
            validate(&remote_is_parent),
            Err(Violation::RemoteNotAncestor { vertex: 1 })
        );
        // The middle vertex is free, so the leaf cannot reach back to the root.
        let broken_chain = EnriquesDiagram::new_unchecked(vec![
            Vertex::root(2),
            Vertex::free(1, 0),
            Vertex::free(1, 1),
            Vertex::satellite(1, 2, 0),
        ]);
        assert_eq!(
            validate(&broken_chain),
            Err(Violation::RemoteChain { vertex: 3 })
        );
        let twins = EnriquesDiagram::new_unchecked(vec![
            Vertex::root(3),
            Vertex::free(2, 0),
            Vertex::satellite(1, 1, 0),
            Vertex::satellite(1, 1, 0),
        ]);
        assert_eq!(
            validate(&twins),
            Err(Violation::DuplicateRemote { vertex: 3 })
        );
    }

    #[test]
    fn invariants_of_a1_and_a2() {
        let i1 = invariants(&a1()).unwrap();
        assert_eq!(
            (
                i1.dim,
                i1.deg,
                i1.cod,
                i1.delta,
                i1.branches,
                i1.milnor,
                i1.jacobian_mult
            ),
            (2, 3, 1, 1, 2, 1, Some(2))
        );
        let i2 = invariants(&a2()).unwrap();
        assert_eq!(
            (i2.dim, i2.deg, i2.cod, i2.delta, i2.branches, i2.milnor),
            (3, 5, 2, 1, 1, 2)
        );
    }

    #[test]
    fn lemma_on_a1_and_a2() {
        let r1 = lemma35_report(&a1()).unwrap();
        assert!(r1.all_hold());
        let eq1: Vec<usize> = (1..=8).filter(|&n| r1.part(n).equality).collect();
        assert_eq!(eq1, vec![1, 2, 3, 6, 7, 8]);
        let r2 = lemma35_report(&a2()).unwrap();
        assert!(r2.all_hold());
        assert!(r2.part(7).equality && r2.part(3).equality && r2.part(5).equality);
        assert!(!r2.part(2).equality && !r2.part(8).equality);
    }

    #[test]
    fn multi_root_rejected_by_lemma() {
        let two = EnriquesDiagram::new(vec![Vertex::root(2), Vertex::root(2)]).unwrap();
        assert_eq!(lemma35_report(&two), Err(Error::NotSingleRoot(2)));
        assert_eq!(invariants(&two).unwrap().jacobian_mult, None);
    }

    #[test]
    fn canonical_form_is_isomorphic() {
        let d = EnriquesDiagram::new(vec![
            Vertex::root(4),
            Vertex::free(1, 0),
            Vertex::free(2, 0),
            Vertex::satellite(1, 1, 0),
        ])
        .unwrap();
        let c = d.canonical_form();
        assert!(validate(&c).is_ok());
        assert!(c.is_isomorphic(&d));
        assert_eq!(c.canonical_form(), c);
        assert!(!d.is_isomorphic(&a2()));
    }
}
