//! The facet-list text format, the single interchange format of the crate.
//!
//! Layout:
//! - first line: `m <ground_size>`;
//! - each following line: one facet as space-separated 1-based vertex
//!   indices; a blank line denotes the empty facet, so `{}` alone encodes
//!   the complex whose only face is the empty face;
//! - the single line `void` in place of facet lines encodes the void
//!   complex (no faces at all), matching the empty-facet-list convention
//!   of the constructors;
//! - lines starting with `#` are comments.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    parse_complex_with_cap(text, crate::complex::DEFAULT_FACE_CAP)
}

pub fn parse_complex_with_cap(text: &str, cap: usize) -> Result<SimplicialComplex> {
    let mut lines = text.lines();
    let header = loop {
        match lines.next() {
            Some(l) if l.trim_start().starts_with('#') => continue,
            Some(l) if !l.trim().is_empty() => break l.trim(),
            Some(_) => continue,
            None => return Err(Error::Parse("missing header line `m <ground_size>`".into())),
        }
    };
    let mut parts = header.split_whitespace();
    match parts.next() {
        Some("m") => {}
        other => {
            return Err(Error::Parse(format!(
                "expected header `m <ground_size>`, found `{}`",
                other.unwrap_or("")
            )))
        }
    }
    let ground: usize = parts
        .next()
        .ok_or_else(|| Error::Parse("header is missing the ground size".into()))?
        .parse()
        .map_err(|_| Error::Parse("ground size is not a number".into()))?;
    if parts.next().is_some() {
        return Err(Error::Parse("trailing tokens after the header".into()));
    }

    let mut facets: Vec<Face> = Vec::new();
    let mut saw_facet_line = false;
    for raw in lines {
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line == "void" {
            if saw_facet_line || !facets.is_empty() {
                return Err(Error::Parse("`void` cannot be mixed with facet lines".into()));
            }
            return Ok(SimplicialComplex::void(ground));
        }
        saw_facet_line = true;
        if line.is_empty() {
            facets.push(Face::EMPTY);
            continue;
        }
        let mut verts = Vec::new();
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex token `{tok}`")))?;
            if v == 0 {
                return Err(Error::Parse("vertex indices are 1-based; found 0".into()));
            }
            if v > ground {
                return Err(Error::VertexOutOfRange {
                    index: v - 1,
                    ground,
                });
            }
            if verts.contains(&(v - 1)) {
                return Err(Error::Parse(format!("duplicate vertex `{tok}` in facet")));
            }
            verts.push(v - 1);
        }
        facets.push(Face::from_vertices(verts)?);
    }
    SimplicialComplex::from_facets_with_cap(ground, facets, cap)
}

/// Canonical serialization: sorted facet lines, void sentinel, trailing
/// newline. Byte-identical across runs for equal complexes.
pub fn write_complex(k: &SimplicialComplex) -> String {
    let mut out = format!("m {}\n", k.ground_size());
    if k.is_void() {
        out.push_str("void\n");
        return out;
    }
    for facet in k.facets() {
        let line: Vec<String> = facet.vertices().map(|v| (v + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn facet_line(face: Face) -> String {
    face.vertices()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
