//! Central circuits: closed walks that leave every vertex through the edge
//! opposite the one they arrived on.
//!
//! For a 4-valent vertex with counterclockwise darts `d0 d1 d2 d3`, the edge
//! opposite `dj` is `d(j+2)`. A circuit is stored as the sequence of darts it
//! leaves vertices through, so the successor of `d` is
//! `sigma(sigma(theta(d)))`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Dart, PlaneGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralCircuit {
    /// Outgoing darts in traversal order, starting at the least dart of the
    /// circuit (over both directions).
    pub darts: Vec<Dart>,
    pub length: usize,
    pub self_intersections: usize,
}

impl CentralCircuit {
    pub fn is_simple(&self) -> bool {
        self.self_intersections == 0
    }

    /// Vertices in traversal order; a self-intersection vertex appears twice.
    pub fn vertices<'a>(&'a self, g: &'a PlaneGraph) -> impl Iterator<Item = usize> + 'a {
        self.darts.iter().map(move |&d| g.vertex(d))
    }

    /// Edge ids, one per step.
    pub fn edges<'a>(&'a self, g: &'a PlaneGraph) -> impl Iterator<Item = usize> + 'a {
        self.darts.iter().map(move |&d| g.edge_id(d))
    }

    pub fn reversed(&self, g: &PlaneGraph) -> Vec<Dart> {
        self.darts.iter().rev().map(|&d| g.theta(d)).collect()
    }
}

#[inline]
pub(crate) fn next_dart(g: &PlaneGraph, d: Dart) -> Dart {
    g.sigma(g.sigma(g.theta(d)))
}

/// The central-circuit partition of a 4-valent map.
pub fn central_circuits(g: &PlaneGraph) -> Vec<CentralCircuit> {
    assert!(g.is_quartic(), "central circuits need a 4-valent map");
    let nd = g.num_darts();
    let mut used = vec![false; nd];
    let mut out = Vec::new();
    for start in 0..nd {
        if used[start] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = start;
        loop {
            used[d] = true;
            used[g.theta(d)] = true;
            darts.push(d);
            d = next_dart(g, d);
            if d == start {
                break;
            }
        }
        // `start` is the least dart over both directions because every dart
        // below it is already used.
        let length = darts.len();
        let mut visits: BTreeMap<usize, usize> = BTreeMap::new();
        for &d in &darts {
            *visits.entry(g.vertex(d)).or_insert(0) += 1;
        }
        let self_intersections = visits.values().filter(|&&c| c == 2).count();
        out.push(CentralCircuit { darts, length, self_intersections });
    }
    out
}

/// Index of the circuit containing each edge (indexed by `edge_id`).
pub fn circuit_of_edge(g: &PlaneGraph, circuits: &[CentralCircuit]) -> Vec<usize> {
    let mut out = vec![usize::MAX; g.num_darts()];
    for (i, c) in circuits.iter().enumerate() {
        for &d in &c.darts {
            out[d] = i;
            out[g.theta(d)] = i;
        }
    }
    out
}

/// CC-vector: sorted lengths of simple and of self-intersecting circuits.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CcVector {
    pub simple: Vec<usize>,
    pub self_intersecting: Vec<usize>,
}

impl CcVector {
    pub fn total(&self) -> usize {
        self.simple.iter().chain(&self.self_intersecting).sum()
    }

    pub fn count(&self) -> usize {
        self.simple.len() + self.self_intersecting.len()
    }

    /// Parses `a^k,b;c` style text; the semicolon is optional, see
    /// [`crate::catalog`] for how unsplit prints are matched.
    pub fn parse(text: &str) -> Result<CcVector> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')');
        let (left, right) = match t.split_once(';') {
            Some((l, r)) => (l, r),
            None => (t, ""),
        };
        Ok(CcVector { simple: parse_side(left)?, self_intersecting: parse_side(right)? })
    }
}

fn parse_side(s: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim()),
            None => (tok, "1"),
        };
        let bad = || Error::Malformed(format!("bad CC-vector term {tok:?}"));
        let base: usize = base.parse().map_err(|_| bad())?;
        let exp: usize = exp.parse().map_err(|_| bad())?;
        out.extend(std::iter::repeat(base).take(exp));
    }
    out.sort_unstable();
    Ok(out)
}

fn render_side(xs: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut i = 0;
    let mut first = true;
    while i < xs.len() {
        let mut j = i;
        while j < xs.len() && xs[j] == xs[i] {
            j += 1;
        }
        if !first {
            f.write_str(",")?;
        }
        first = false;
        if j - i == 1 {
            write!(f, "{}", xs[i])?;
        } else {
            write!(f, "{}^{}", xs[i], j - i)?;
        }
        i = j;
    }
    Ok(())
}

impl fmt::Display for CcVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_side(&self.simple, f)?;
        f.write_str(";")?;
        render_side(&self.self_intersecting, f)
    }
}

pub fn cc_vector(g: &PlaneGraph) -> CcVector {
    cc_vector_of(&central_circuits(g))
}

pub fn cc_vector_of(circuits: &[CentralCircuit]) -> CcVector {
    let mut simple = Vec::new();
    let mut si = Vec::new();
    for c in circuits {
        if c.is_simple() {
            simple.push(c.length);
        } else {
            si.push(c.length);
        }
    }
    simple.sort_unstable();
    si.sort_unstable();
    CcVector { simple, self_intersecting: si }
}

/// Self-intersection count and the decreasing list of nonzero intersection
/// sizes with the other circuits.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IntersectionVector {
    pub c0: usize,
    pub others: Vec<usize>,
}

impl fmt::Display for IntersectionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.c0)?;
        let mut i = 0;
        let mut first = true;
        while i < self.others.len() {
            let mut j = i;
            while j < self.others.len() && self.others[j] == self.others[i] {
                j += 1;
            }
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if j - i == 1 {
                write!(f, "{}", self.others[i])?;
            } else {
                write!(f, "{}^{}", self.others[i], j - i)?;
            }
            i = j;
        }
        f.write_str(")")
    }
}

/// Passages through each vertex: the circuit index of its two crossing
/// strands, `(d0,d2)` first then `(d1,d3)`.
pub(crate) fn vertex_passages(g: &PlaneGraph, circuits: &[CentralCircuit]) -> Vec<[usize; 2]> {
    let coe = circuit_of_edge(g, circuits);
    (0..g.num_vertices())
        .map(|v| [coe[g.dart_at(v, 0)], coe[g.dart_at(v, 1)]])
        .collect()
}

fn locate(circuits: &[CentralCircuit], c: &CentralCircuit) -> Option<usize> {
    circuits.iter().position(|x| x == c)
}

pub fn intersection_vector(g: &PlaneGraph, c: &CentralCircuit) -> Result<IntersectionVector> {
    let circuits = central_circuits(g);
    let idx = locate(&circuits, c).ok_or(Error::ForeignCircuit)?;
    Ok(intersection_vectors(g, &circuits).swap_remove(idx))
}

/// Intersection vectors of all circuits at once.
pub fn intersection_vectors(g: &PlaneGraph, circuits: &[CentralCircuit]) -> Vec<IntersectionVector> {
    let k = circuits.len();
    let mut meet = vec![vec![0usize; k]; k];
    for [a, b] in vertex_passages(g, circuits) {
        if a != b {
            meet[a][b] += 1;
            meet[b][a] += 1;
        }
    }
    (0..k)
        .map(|a| {
            let mut others: Vec<usize> =
                (0..k).filter(|&b| b != a && meet[a][b] > 0).map(|b| meet[a][b]).collect();
            others.sort_unstable_by(|x, y| y.cmp(x));
            IntersectionVector { c0: circuits[a].self_intersections, others }
        })
        .collect()
}

/// Pairwise intersection sizes.
pub fn intersection_matrix(g: &PlaneGraph, circuits: &[CentralCircuit]) -> Vec<Vec<usize>> {
    let k = circuits.len();
    let mut meet = vec![vec![0usize; k]; k];
    for [a, b] in vertex_passages(g, circuits) {
        if a != b {
            meet[a][b] += 1;
            meet[b][a] += 1;
        }
    }
    meet
}

pub fn is_pure(g: &PlaneGraph) -> bool {
    let pure = central_circuits(g).iter().all(CentralCircuit::is_simple);
    if pure {
        assert!(g.num_vertices() % 2 == 0, "pure maps have an even number of vertices");
    }
    pure
}

pub fn is_balanced(g: &PlaneGraph) -> bool {
    let circuits = central_circuits(g);
    let ivs = intersection_vectors(g, &circuits);
    let mut by_len: BTreeMap<usize, &IntersectionVector> = BTreeMap::new();
    for (c, iv) in circuits.iter().zip(&ivs) {
        match by_len.get(&c.length) {
            Some(prev) if *prev != iv => return false,
            Some(_) => {}
            None => {
                by_len.insert(c.length, iv);
            }
        }
    }
    true
}

/// Proper 2-coloring of the faces of an Eulerian plane map; the face of
/// dart 0 gets color 0.
pub fn chess_coloring(g: &PlaneGraph) -> Vec<u8> {
    let nf = g.num_faces();
    let mut color = vec![u8::MAX; nf];
    let start = g.face_of(0);
    color[start] = 0;
    let mut stack = vec![start];
    while let Some(f) = stack.pop() {
        for &d in g.face(f) {
            let h = g.face_of(g.theta(d as usize));
            if color[h] == u8::MAX {
                color[h] = 1 - color[f];
                stack.push(h);
            }
        }
    }
    color
}

/// Class I / Class II split of the vertices of a one-circuit map:
/// `true` marks Class I.
pub fn class_bipartition(g: &PlaneGraph) -> Result<Vec<bool>> {
    let circuits = central_circuits(g);
    if circuits.len() != 1 {
        return Err(Error::CircuitCount { expected: 1, found: circuits.len() });
    }
    let colors = chess_coloring(g);
    let forward = split(g, &circuits[0].darts, &colors, 0);
    let backward = split(g, &circuits[0].reversed(g), &colors, 0);
    let swapped = split(g, &circuits[0].darts, &colors, 1);
    assert_eq!(forward, backward, "class split depends on orientation");
    assert_eq!(forward, swapped, "class split depends on face class");
    Ok(forward)
}

fn split(g: &PlaneGraph, oriented: &[Dart], colors: &[u8], class: u8) -> Vec<bool> {
    let mut outgoing = vec![false; g.num_darts()];
    for &d in oriented {
        outgoing[d] = true;
    }
    (0..g.num_vertices())
        .map(|v| {
            // the corner between dj and d(j+1) lies in the face of d(j+1)
            let j = (0..4)
                .find(|&j| colors[g.face_of(g.dart_at(v, j + 1))] == class)
                .expect("every vertex touches both face classes");
            outgoing[g.dart_at(v, j)] == outgoing[g.dart_at(v, j + 1)]
        })
        .collect()
}
