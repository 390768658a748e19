//! Text and JSON dart codes.
//!
//! Text form, whitespace separated:
//!
//! ```text
//! n
//! theta(0) theta(1) ... theta(4n-1)
//! r(0) r(1) ... r(4n-1)
//! ```
//!
//! where positions `4v..4v+3` of the last line list the darts of vertex `v`
//! in counterclockwise order. Lines starting with `#` are comments; a stream
//! may hold several graphs back to back.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::PlaneGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DartCodeJson {
    pub n: usize,
    pub theta: Vec<usize>,
    pub rotation: Vec<usize>,
}

fn build(n: usize, theta: Vec<usize>, rotation: Vec<usize>) -> Result<PlaneGraph> {
    if theta.len() != 4 * n {
        return Err(Error::Malformed(format!("expected {} pairing entries, got {}", 4 * n, theta.len())));
    }
    if rotation.len() != 4 * n {
        return Err(Error::Malformed(format!(
            "expected {} rotation entries, got {}",
            4 * n,
            rotation.len()
        )));
    }
    let rot = rotation.chunks(4).map(|c| c.to_vec()).collect();
    let g = PlaneGraph::from_rotation(rot, theta)?;
    g.require_quartic()?;
    Ok(g)
}

pub fn from_json(code: &DartCodeJson) -> Result<PlaneGraph> {
    build(code.n, code.theta.clone(), code.rotation.clone())
}

pub fn to_json(g: &PlaneGraph) -> DartCodeJson {
    DartCodeJson {
        n: g.num_vertices(),
        theta: g.theta_vec(),
        rotation: g.rotation_vecs().concat(),
    }
}

fn parse_ints(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::Malformed(format!("bad integer {t:?}"))))
        .collect()
}

/// Decodes one graph from text or JSON.
pub fn decode(text: &str) -> Result<PlaneGraph> {
    let mut all = decode_all(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        0 => Err(Error::Malformed("no graph in input".into())),
        k => Err(Error::Malformed(format!("expected one graph, found {k}"))),
    }
}

/// Decodes a stream: text records, a JSON object per line, or a JSON array.
pub fn decode_all(text: &str) -> Result<Vec<PlaneGraph>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let codes: Vec<DartCodeJson> =
            serde_json::from_str(trimmed).map_err(|e| Error::Malformed(e.to_string()))?;
        return codes.iter().map(from_json).collect();
    }
    if trimmed.starts_with('{') {
        return trimmed
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let code: DartCodeJson =
                    serde_json::from_str(l).map_err(|e| Error::Malformed(e.to_string()))?;
                from_json(&code)
            })
            .collect();
    }
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.len() % 3 != 0 {
        return Err(Error::Malformed(format!(
            "text dart codes come in groups of 3 lines, found {}",
            lines.len()
        )));
    }
    lines
        .chunks(3)
        .map(|c| {
            let n = parse_ints(c[0])?;
            if n.len() != 1 {
                return Err(Error::Malformed("first line must hold n".into()));
            }
            build(n[0], parse_ints(c[1])?, parse_ints(c[2])?)
        })
        .collect()
}

pub fn encode(g: &PlaneGraph) -> String {
    let join = |v: Vec<usize>| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    format!(
        "{}\n{}\n{}\n",
        g.num_vertices(),
        join(g.theta_vec()),
        join(g.rotation_vecs().concat())
    )
}
