use std::fmt;
use std::str::FromStr;

use super::{EnriquesDiagram, Vertex};
use crate::error::{Error, Result};

/// Families of diagrams with a name: the simple singularities `A_k`, `D_k`,
/// `E_6`, `E_7`, `E_8`, and `r` ordinary nodes `rA_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NamedKind {
    A,
    D,
    E,
    RA1,
}

/// A named diagram such as `A5`, `D4`, `E8` or `3A1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagramName {
    pub kind: NamedKind,
    pub index: usize,
}

impl fmt::Display for DiagramName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            NamedKind::A => write!(f, "A{}", self.index),
            NamedKind::D => write!(f, "D{}", self.index),
            NamedKind::E => write!(f, "E{}", self.index),
            NamedKind::RA1 => write!(f, "{}A1", self.index),
        }
    }
}

impl FromStr for DiagramName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::NoSuchNamedDiagram(s.to_string());
        let (kind, digits) = if let Some(r) = s.strip_suffix("A1").filter(|r| !r.is_empty()) {
            (NamedKind::RA1, r)
        } else if let Some(rest) = s.strip_prefix('A') {
            (NamedKind::A, rest)
        } else if let Some(rest) = s.strip_prefix('D') {
            (NamedKind::D, rest)
        } else if let Some(rest) = s.strip_prefix('E') {
            (NamedKind::E, rest)
        } else {
            return Err(bad());
        };
        let index = digits.parse().map_err(|_| bad())?;
        Ok(Self { kind, index })
    }
}

impl DiagramName {
    pub fn diagram(&self) -> Result<EnriquesDiagram> {
        named_diagram(self.kind, self.index)
    }
}

/// Appends a chain of `n` free weight-2 vertices below `below`.
fn push_chain(vs: &mut Vec<Vertex>, below: Option<usize>, n: usize) -> Option<usize> {
    let mut last = below;
    for _ in 0..n {
        vs.push(match last {
            Some(p) => Vertex::free(2, p),
            None => Vertex::root(2),
        });
        last = Some(vs.len() - 1);
    }
    last
}

/// Appends a free weight-1 vertex below `p`, then a weight-1 satellite of
/// `p` below it.
fn push_cusp_tail(vs: &mut Vec<Vertex>, p: usize) {
    vs.push(Vertex::free(1, p));
    let f = vs.len() - 1;
    vs.push(Vertex::satellite(1, f, p));
}

/// The diagram of a named singularity type.
///
/// * `A_{2i+1}`: a chain of `i + 1` weight-2 vertices.
/// * `A_{2i}`: a chain of `i` weight-2 vertices, then a free weight-1
///   vertex, then a weight-1 satellite of the last weight-2 vertex.
/// * `D_4`: a single weight-3 root.
/// * `D_{2j+4}`: a weight-3 root followed by a chain of `j` weight-2
///   vertices.
/// * `D_{2j+5}`: a weight-3 root, a chain of `j` weight-2 vertices, then
///   the same weight-1 tail as `A_{2i}`, hung on the last vertex of weight
///   at least 2.
/// * `E_6`, `E_7`, `E_8`: a weight-3 root followed by
///   `1, 1 (sat root), 1 (sat root)`, by `2, 1 (sat root)`, and by
///   `2, 1 (sat root), 1 (sat of the weight-2 vertex)`.
/// * `rA_1`: `r` weight-2 roots.
pub fn named_diagram(kind: NamedKind, index: usize) -> Result<EnriquesDiagram> {
    let name = DiagramName { kind, index };
    let mut vs: Vec<Vertex> = Vec::new();
    match kind {
        NamedKind::A if index >= 1 => {
            if index % 2 == 1 {
                push_chain(&mut vs, None, index.div_ceil(2));
            } else {
                let last = push_chain(&mut vs, None, index / 2).expect("nonempty chain");
                push_cusp_tail(&mut vs, last);
            }
        }
        NamedKind::D if index >= 4 => {
            vs.push(Vertex::root(3));
            if index.is_multiple_of(2) {
                push_chain(&mut vs, Some(0), (index - 4) / 2);
            } else {
                let last = push_chain(&mut vs, Some(0), (index - 5) / 2).expect("root");
                push_cusp_tail(&mut vs, last);
            }
        }
        NamedKind::E if (6..=8).contains(&index) => {
            vs.push(Vertex::root(3));
            match index {
                6 => {
                    vs.push(Vertex::free(1, 0));
                    vs.push(Vertex::satellite(1, 1, 0));
                    vs.push(Vertex::satellite(1, 2, 0));
                }
                7 => {
                    vs.push(Vertex::free(2, 0));
                    vs.push(Vertex::satellite(1, 1, 0));
                }
                _ => {
                    vs.push(Vertex::free(2, 0));
                    vs.push(Vertex::satellite(1, 1, 0));
                    vs.push(Vertex::satellite(1, 2, 1));
                }
            }
        }
        NamedKind::RA1 if index >= 1 => {
            vs.extend(std::iter::repeat_n(Vertex::root(2), index));
        }
        _ => return Err(Error::NoSuchNamedDiagram(name.to_string())),
    }
    EnriquesDiagram::new(vs)
}

/// Every named single-root diagram with at most `max_vertices` vertices
/// and weights at most `max_weight`.
pub fn named_single_root(
    max_vertices: usize,
    max_weight: u32,
) -> Vec<(DiagramName, EnriquesDiagram)> {
    let mut out = Vec::new();
    let mut push_family = |kind: NamedKind, range: std::ops::RangeInclusive<usize>| {
        for index in range {
            let d = named_diagram(kind, index).expect("in range");
            let heavy = d.vertices().iter().any(|v| v.weight > max_weight);
            if d.len() <= max_vertices && !heavy {
                out.push((DiagramName { kind, index }, d));
            }
        }
    };
    // A_k and D_k have at most k/2 + 2 vertices.
    let top = 2 * max_vertices + 2;
    push_family(NamedKind::A, 1..=top);
    push_family(NamedKind::D, 4..=top);
    push_family(NamedKind::E, 6..=8);
    out
}

/// The name of a single-root diagram isomorphic to `d`, if any.
pub fn identify(d: &EnriquesDiagram) -> Option<DiagramName> {
    let key = d.canonical_key();
    let weight = d.vertices().iter().map(|v| v.weight).max().unwrap_or(0);
    named_single_root(d.len(), weight)
        .into_iter()
        .find(|(_, n)| n.canonical_key() == key)
        .map(|(name, _)| name)
}

#[cfg(test)]
mod tests {
    use super::super::invariants;
    use super::*;

    #[test]
    fn codimension_and_milnor_match_index() {
        for (name, d) in named_single_root(12, 3) {
            let inv = invariants(&d).unwrap();
            assert_eq!(inv.cod, name.index as i64, "{name}");
            assert_eq!(inv.milnor, name.index as i64, "{name}");
        }
    }

    #[test]
    fn nodes() {
        for r in 1..=8 {
            let inv = invariants(&named_diagram(NamedKind::RA1, r).unwrap()).unwrap();
            assert_eq!((inv.cod, inv.delta), (r as i64, r as i64));
        }
    }

    #[test]
    fn out_of_range() {
        assert!(named_diagram(NamedKind::A, 0).is_err());
        assert!(named_diagram(NamedKind::D, 3).is_err());
        assert!(named_diagram(NamedKind::E, 9).is_err());
        assert!(named_diagram(NamedKind::RA1, 0).is_err());
    }

    #[test]
    fn names_round_trip() {
        for s in ["A1", "A10", "D4", "D7", "E6", "E8", "3A1", "12A1"] {
            let name: DiagramName = s.parse().unwrap();
            assert_eq!(name.to_string(), s);
        }
        assert!("X3".parse::<DiagramName>().is_err());
        assert!("A".parse::<DiagramName>().is_err());
        assert_eq!("A1".parse::<DiagramName>().unwrap().kind, NamedKind::A);
    }

    #[test]
    fn identification() {
        let d = named_diagram(NamedKind::D, 7).unwrap().canonical_form();
        assert_eq!(identify(&d).unwrap().to_string(), "D7");
        assert_eq!(
            identify(&named_diagram(NamedKind::E, 7).unwrap())
                .unwrap()
                .to_string(),
            "E7"
        );
    }
}
