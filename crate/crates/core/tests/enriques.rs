use std::collections::BTreeSet;

use nodecount_core::enriques::{
    enumerate_diagrams, identify, invariants, lemma35_report, named_diagram, parse_diagram,
    validate, write_diagram, EnriquesDiagram, NamedKind, Vertex,
};

/// Every vertex list with parents and remote targets among earlier
/// vertices, filtered by `validate`, up to isomorphism.
fn brute_force(max_vertices: usize, max_weight: u32) -> BTreeSet<String> {
    fn extend(vs: &mut Vec<Vertex>, max_v: usize, max_w: u32, out: &mut BTreeSet<String>) {
        if !vs.is_empty() {
            let d = EnriquesDiagram::new_unchecked(vs.clone());
            if validate(&d).is_ok() {
                out.insert(d.canonical_key());
            }
        }
        if vs.len() == max_v {
            return;
        }
        let n = vs.len();
        for weight in 1..=max_w {
            for parent in std::iter::once(None).chain((0..n).map(Some)) {
                for remote in std::iter::once(None).chain((0..n).map(Some)) {
                    vs.push(Vertex {
                        weight,
                        parent,
                        remote,
                    });
                    extend(vs, max_v, max_w, out);
                    vs.pop();
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    extend(&mut Vec::new(), max_vertices, max_weight, &mut out);
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for (v, w) in [(1, 4), (2, 3), (3, 3), (4, 3), (4, 4)] {
        let fast: BTreeSet<String> = enumerate_diagrams(v, w)
            .unwrap()
            .iter()
            .map(|d| d.canonical_key())
            .collect();
        assert_eq!(
            fast,
            brute_force(v, w),
            "max_vertices = {v}, max_weight = {w}"
        );
    }
}

#[test]
fn enumerated_diagrams_are_valid_and_distinct() {
    let all = enumerate_diagrams(5, 4).unwrap();
    let keys: BTreeSet<String> = all.iter().map(|d| d.canonical_key()).collect();
    assert_eq!(keys.len(), all.len());
    for d in &all {
        assert_eq!(validate(d), Ok(()));
        assert!(d.len() <= 5 && d.vertices().iter().all(|v| (1..=4).contains(&v.weight)));
    }
}

#[test]
fn text_round_trip() {
    for d in enumerate_diagrams(5, 3).unwrap() {
        let text = write_diagram(&d);
        assert_eq!(parse_diagram(&text).unwrap(), d, "{text}");
    }
}

#[test]
fn parse_accepts_arbitrary_ids() {
    let text = "# E8\nr 3 - -\na 2 r -\nb 1 a r\n\nc 1 b a\n";
    let d = parse_diagram(text).unwrap();
    assert_eq!(identify(&d).unwrap().to_string(), "E8");
    assert!(parse_diagram("x 2 y -\n").is_err());
    assert!(parse_diagram("x 2 -\n").is_err());
    assert!(parse_diagram("x two - -\n").is_err());
}

#[test]
fn every_named_singularity_satisfies_the_inequalities() {
    let names = (1..=12)
        .map(|i| (NamedKind::A, i))
        .chain((4..=12).map(|i| (NamedKind::D, i)))
        .chain((6..=8).map(|i| (NamedKind::E, i)));
    for (kind, index) in names {
        let d = named_diagram(kind, index).unwrap();
        let rep = lemma35_report(&d).unwrap();
        assert!(rep.all_hold(), "{kind:?}{index}");
        assert!(rep.part(3).equality, "{kind:?}{index}");
        let inv = invariants(&d).unwrap();
        let m = d.vertices()[0].weight as i64;
        assert_eq!(inv.jacobian_mult, Some(index as i64 + m - 1));
    }
}

#[test]
fn multi_root_reports_are_rejected() {
    let d = named_diagram(NamedKind::RA1, 3).unwrap();
    assert!(lemma35_report(&d).is_err());
    assert_eq!(invariants(&d).unwrap().cod, 3);
}
