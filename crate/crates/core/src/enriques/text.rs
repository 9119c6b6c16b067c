//! Line-based text format.
//!
//! One vertex per line: `id weight parent remote`, with `-` for an absent
//! parent or remote target. Ids are arbitrary tokens; a vertex may only
//! refer to ids on earlier lines. Blank lines and lines starting with `#`
//! are ignored. Written diagrams use ids `1, 2, ...` in vertex order.

use std::collections::HashMap;
use std::fmt::Write;

use super::{EnriquesDiagram, Vertex};
use crate::error::{Error, Result};

/// Reads a diagram without validating it.
pub fn parse_diagram(input: &str) -> Result<EnriquesDiagram> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut vertices = Vec::new();
    let mut offset = 0;
    for (lineno, line) in input.lines().enumerate() {
        let pos = offset;
        offset += line.len() + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse {
            pos,
            msg: format!("line {}: {msg}", lineno + 1),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [id, weight, parent, remote] = fields[..] else {
            return Err(err(format!("expected 4 fields, found {}", fields.len())));
        };
        let weight: u32 = weight
            .parse()
            .map_err(|_| err(format!("bad weight `{weight}`")))?;
        let lookup = |r: &str| -> Result<Option<usize>> {
            if r == "-" {
                return Ok(None);
            }
            ids.get(r)
                .copied()
                .map(Some)
                .ok_or_else(|| err(format!("unknown or later vertex `{r}`")))
        };
        let vertex = Vertex {
            weight,
            parent: lookup(parent)?,
            remote: lookup(remote)?,
        };
        if id == "-" || ids.insert(id, vertices.len()).is_some() {
            return Err(err(format!("bad or repeated id `{id}`")));
        }
        vertices.push(vertex);
    }
    Ok(EnriquesDiagram::new_unchecked(vertices))
}

/// Writes a diagram, one vertex per line.
pub fn write_diagram(d: &EnriquesDiagram) -> String {
    let id = |x: Option<usize>| x.map_or("-".to_string(), |i| (i + 1).to_string());
    let mut out = String::new();
    for (i, v) in d.vertices().iter().enumerate() {
        writeln!(
            out,
            "{} {} {} {}",
            i + 1,
            v.weight,
            id(v.parent),
            id(v.remote)
        )
        .expect("string write");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{named_diagram, validate, NamedKind};
    use super::*;

    #[test]
    fn round_trip() {
        let e8 = named_diagram(NamedKind::E, 8).unwrap();
        let text = write_diagram(&e8);
        assert_eq!(text, "1 3 - -\n2 2 1 -\n3 1 2 1\n4 1 3 2\n");
        assert_eq!(parse_diagram(&text).unwrap(), e8);
    }

    #[test]
    fn named_ids_and_comments() {
        let d = parse_diagram("# A2\nR 2 - -\n\nP 1 R -\nS 1 P R\n").unwrap();
        assert_eq!(d, named_diagram(NamedKind::A, 2).unwrap());
        assert!(validate(&d).is_ok());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_diagram("1 2 -"), Err(Error::Parse { .. })));
        assert!(matches!(parse_diagram("1 x - -"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_diagram("1 2 2 -\n2 2 - -"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_diagram("1 2 - -\n1 1 1 -"),
            Err(Error::Parse { .. })
        ));
        // Structure is accepted here and checked by validation.
        let lone = parse_diagram("1 1 - -").unwrap();
        assert!(validate(&lone).is_err());
    }
}
