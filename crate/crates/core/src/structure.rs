//! Rail-roads, pseudo-roads, patch curvature, connectivity and the special
//! families of non-3-connected maps.
//!
//! Strips of 4-gons are followed face to face: entering a 4-gon through the
//! edge of dart `x` (with `x` in that face), the strip leaves through the
//! opposite edge `phi(phi(x))` and enters the next face through
//! `theta(phi(phi(x)))`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::is_isomorphic;
use crate::circuits::{central_circuits, circuit_of_edge, intersection_matrix, CentralCircuit};
use crate::error::{Error, Result};
use crate::graph::{Dart, PlaneGraph};

/// A closed strip of 4-gons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RailRoad {
    pub faces: Vec<usize>,
    /// Dart through which the strip enters each face.
    pub entries: Vec<Dart>,
    pub self_intersecting: bool,
    /// Indices into `central_circuits(g)` of the two side circuits.
    pub bounding_circuits: [usize; 2],
}

#[inline]
fn strip_step(g: &PlaneGraph, x: Dart) -> Dart {
    g.theta(g.phi(g.phi(x)))
}

pub fn rail_roads(g: &PlaneGraph) -> Vec<RailRoad> {
    let circuits = central_circuits(g);
    let coe = circuit_of_edge(g, &circuits);
    let mut seen = vec![false; g.num_darts()];
    let mut out = Vec::new();
    for start in 0..g.num_darts() {
        if seen[start] || g.face_size(g.face_of(start)) != 4 {
            continue;
        }
        let mut entries = Vec::new();
        let mut x = start;
        let closed = loop {
            if g.face_size(g.face_of(x)) != 4 {
                break false;
            }
            entries.push(x);
            x = strip_step(g, x);
            if x == start {
                break true;
            }
            if entries.len() > g.num_darts() {
                break false;
            }
        };
        for &e in &entries {
            seen[e] = true;
            seen[g.phi(g.phi(e))] = true;
        }
        if !closed {
            continue;
        }
        let faces: Vec<usize> = entries.iter().map(|&e| g.face_of(e)).collect();
        let distinct: BTreeSet<usize> = faces.iter().copied().collect();
        let mut bounding = [coe[g.phi(start)], coe[g.phi(g.phi(g.phi(start)))]];
        bounding.sort_unstable();
        out.push(RailRoad {
            self_intersecting: distinct.len() < faces.len(),
            faces,
            entries,
            bounding_circuits: bounding,
        });
    }
    out
}

pub fn is_irreducible(g: &PlaneGraph) -> bool {
    rail_roads(g).is_empty()
}

/// Curved faces (2- and 3-gons) joined by pseudo-roads.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureGraph {
    /// Face ids of the curved faces.
    pub nodes: Vec<usize>,
    /// `(node, node, number of 4-gons on the road)`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl CurvatureGraph {
    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b, _)| (a == node) as usize + (b == node) as usize)
            .sum()
    }
}

pub fn curvature_graph(g: &PlaneGraph) -> CurvatureGraph {
    let curved = |f: usize| g.face_size(f) < 4;
    let nodes: Vec<usize> = (0..g.num_faces()).filter(|&f| curved(f)).collect();
    let index = |f: usize| nodes.iter().position(|&x| x == f).unwrap();
    let mut edges = Vec::new();
    for x in 0..g.num_darts() {
        if !curved(g.face_of(x)) {
            continue;
        }
        let mut e = g.theta(x);
        let mut len = 0;
        while !curved(g.face_of(e)) {
            e = strip_step(g, e);
            len += 1;
        }
        // every road is found from both ends
        if x < e {
            edges.push((index(g.face_of(x)), index(g.face_of(e)), len));
        }
    }
    CurvatureGraph { nodes, edges }
}

/// Sum of `4 - size` over all faces; 8 on the sphere.
pub fn global_curvature(g: &PlaneGraph) -> i64 {
    (0..g.num_faces()).map(|f| 4 - g.face_size(f) as i64).sum()
}

/// Curvature of a disk made of the given faces.
pub fn patch_curvature(g: &PlaneGraph, region: &[usize]) -> Result<i64> {
    check_disk(g, region)?;
    Ok(region.iter().map(|&f| 4 - g.face_size(f) as i64).sum())
}

fn check_disk(g: &PlaneGraph, region: &[usize]) -> Result<()> {
    if region.is_empty() {
        return Err(Error::NotADisk("empty region".into()));
    }
    let set: BTreeSet<usize> = region.iter().copied().collect();
    if set.len() != region.len() {
        return Err(Error::NotADisk("repeated face".into()));
    }
    if set.iter().any(|&f| f >= g.num_faces()) {
        return Err(Error::NotADisk("unknown face".into()));
    }
    let inside = |f: usize| set.contains(&f);
    // connected through interior edges
    let first = *set.iter().next().unwrap();
    let mut reached = BTreeSet::from([first]);
    let mut stack = vec![first];
    while let Some(f) = stack.pop() {
        for &d in g.face(f) {
            let h = g.face_of(g.theta(d as usize));
            if inside(h) && reached.insert(h) {
                stack.push(h);
            }
        }
    }
    if reached.len() != set.len() {
        return Err(Error::NotADisk("faces are not edge-connected".into()));
    }
    let mut verts = BTreeSet::new();
    let mut edges = BTreeSet::new();
    let mut boundary_deg = vec![0usize; g.num_vertices()];
    for &f in &set {
        for &d in g.face(f) {
            let d = d as usize;
            verts.insert(g.vertex(d));
            edges.insert(g.edge_id(d));
            if !inside(g.face_of(g.theta(d))) {
                boundary_deg[g.vertex(d)] += 1;
                boundary_deg[g.vertex(g.theta(d))] += 1;
            }
        }
    }
    let chi = verts.len() as i64 - edges.len() as i64 + set.len() as i64;
    if chi != 1 {
        return Err(Error::NotADisk(format!("Euler characteristic {chi}")));
    }
    if let Some(v) = boundary_deg.iter().position(|&k| k > 2) {
        return Err(Error::NotADisk(format!("boundary pinched at vertex {v}")));
    }
    Ok(())
}

/// Face sets of the regions cut out by the edges of the given circuits.
pub fn regions_cut_by(g: &PlaneGraph, circuits: &[&CentralCircuit]) -> Vec<Vec<usize>> {
    let mut cut = vec![false; g.num_darts()];
    for c in circuits {
        for &d in &c.darts {
            cut[d] = true;
            cut[g.theta(d)] = true;
        }
    }
    let mut comp = vec![usize::MAX; g.num_faces()];
    let mut out = Vec::new();
    for s in 0..g.num_faces() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut region = vec![s];
        let mut stack = vec![s];
        while let Some(f) = stack.pop() {
            for &d in g.face(f) {
                let d = d as usize;
                if cut[d] {
                    continue;
                }
                let h = g.face_of(g.theta(d));
                if comp[h] == usize::MAX {
                    comp[h] = id;
                    region.push(h);
                    stack.push(h);
                }
            }
        }
        region.sort_unstable();
        out.push(region);
    }
    out
}

/// Ring of faces between two disjoint circuits, if they are disjoint.
pub fn separating_ring(g: &PlaneGraph, c1: &CentralCircuit, c2: &CentralCircuit) -> Option<Vec<usize>> {
    let v1: BTreeSet<usize> = c1.vertices(g).collect();
    if c2.vertices(g).any(|v| v1.contains(&v)) {
        return None;
    }
    assert!(c1.is_simple() && c2.is_simple(), "disjoint circuits must be simple");
    let touches = |region: &[usize], c: &CentralCircuit| {
        let faces: BTreeSet<usize> =
            c.darts.iter().flat_map(|&d| [g.face_of(d), g.face_of(g.theta(d))]).collect();
        region.iter().any(|f| faces.contains(f))
    };
    let ring = regions_cut_by(g, &[c1, c2])
        .into_iter()
        .find(|r| touches(r, c1) && touches(r, c2))
        .expect("two disjoint simple circuits bound an annulus");
    assert!(ring.iter().all(|&f| g.face_size(f) == 4), "separating ring must consist of 4-gons");
    Some(ring)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Connectivity {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
    #[serde(rename = ">=3")]
    AtLeastThree,
}

fn simple_adjacency(g: &PlaneGraph) -> Vec<Vec<usize>> {
    (0..g.num_vertices())
        .map(|v| {
            let set: BTreeSet<usize> = g.vertex_neighbors(v).collect();
            set.into_iter().collect()
        })
        .collect()
}

fn connected_without(adj: &[Vec<usize>], removed: &[usize]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    for &r in removed {
        seen[r] = true;
    }
    let Some(start) = (0..n).find(|&v| !seen[v]) else { return true };
    let mut count = 1;
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count + removed.len() == n
}

/// Vertex connectivity class of the underlying simple graph, by exhaustive
/// search over cut vertices and cut pairs.
pub fn vertex_connectivity_class(g: &PlaneGraph) -> Connectivity {
    let adj = simple_adjacency(g);
    let n = adj.len();
    if (0..n).any(|v| !connected_without(&adj, &[v])) {
        return Connectivity::One;
    }
    for a in 0..n {
        for b in a + 1..n {
            if !connected_without(&adj, &[a, b]) {
                return Connectivity::Two;
            }
        }
    }
    Connectivity::AtLeastThree
}

/// Pairs of edges whose removal disconnects the map.
pub fn two_edge_cuts(g: &PlaneGraph) -> Vec<(usize, usize)> {
    let edges: Vec<Dart> = (0..g.num_darts()).filter(|&d| d < g.theta(d)).collect();
    let mut out = Vec::new();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            let mut seen = vec![false; g.num_vertices()];
            seen[0] = true;
            let mut stack = vec![0];
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for d in g.rotation(v) {
                    let e = g.edge_id(d);
                    if e == a || e == b {
                        continue;
                    }
                    let w = g.vertex(g.theta(d));
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            if count < g.num_vertices() {
                out.push((a, b));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    I6,
    I5,
    I4,
    J4,
    K4,
    #[serde(rename = "none")]
    Other,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyKind::I6 => "I6",
            FamilyKind::I5 => "I5",
            FamilyKind::I4 => "I4",
            FamilyKind::J4 => "J4",
            FamilyKind::K4 => "K4",
            FamilyKind::Other => "none",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyLabel {
    pub kind: FamilyKind,
    pub m: usize,
}

impl FamilyLabel {
    pub const NONE: FamilyLabel = FamilyLabel { kind: FamilyKind::Other, m: 0 };

    pub fn vertex_count(kind: FamilyKind, m: usize) -> usize {
        match kind {
            FamilyKind::I6 | FamilyKind::J4 => 2 * m,
            FamilyKind::I5 => 2 * m + 1,
            FamilyKind::I4 => 2 * m + 2,
            FamilyKind::K4 => 4 * m,
            FamilyKind::Other => 0,
        }
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Other => f.write_str("none"),
            k => write!(f, "{k}(m={})", self.m),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cap {
    Digon,
    Pole,
}

/// Square-lattice tube of `m` two-vertex layers closed by two caps. Layer `k`
/// holds the vertices at angles `k mod 2` and `k mod 2 + 2` (quarter turns);
/// each vertex joins both vertices of the neighbouring layers.
fn tube(m: usize, bottom: Cap, top: Cap) -> PlaneGraph {
    const UR: usize = 0;
    const UL: usize = 1;
    const DL: usize = 2;
    const DR: usize = 3;
    let vid = |k: usize, a: usize| 2 * k + usize::from(a % 4 >= 2);
    let dart = |k: usize, a: usize, j: usize| 4 * vid(k, a) + j;
    let tube_vertices = 2 * m;
    let poles = usize::from(bottom == Cap::Pole) + usize::from(top == Cap::Pole);
    let nd = 4 * (tube_vertices + poles);
    let mut theta = vec![usize::MAX; nd];
    let mut pair = |a: usize, b: usize| {
        theta[a] = b;
        theta[b] = a;
    };
    for k in 0..m - 1 {
        for a in [k % 2, k % 2 + 2] {
            pair(dart(k, a, UR), dart(k + 1, (a + 1) % 4, DL));
            pair(dart(k, a, UL), dart(k + 1, (a + 3) % 4, DR));
        }
    }
    let mut rot: Vec<Vec<usize>> = (0..tube_vertices).map(|v| (4 * v..4 * v + 4).collect()).collect();
    let mut next_pole = 4 * tube_vertices;
    match bottom {
        Cap::Digon => {
            pair(dart(0, 0, DR), dart(0, 2, DL));
            pair(dart(0, 0, DL), dart(0, 2, DR));
        }
        Cap::Pole => {
            // darts towards angles 3.5, 2.5, 1.5, 0.5
            let p = next_pole;
            next_pole += 4;
            pair(p, dart(0, 0, DL));
            pair(p + 1, dart(0, 2, DR));
            pair(p + 2, dart(0, 2, DL));
            pair(p + 3, dart(0, 0, DR));
            rot.push((p..p + 4).collect());
        }
    }
    let k = m - 1;
    let t = k % 2;
    match top {
        Cap::Digon => {
            pair(dart(k, t, UR), dart(k, t + 2, UL));
            pair(dart(k, t, UL), dart(k, t + 2, UR));
        }
        Cap::Pole => {
            // darts towards angles t+0.5, t+1.5, t+2.5, t+3.5
            let p = next_pole;
            pair(p, dart(k, t, UR));
            pair(p + 1, dart(k, t + 2, UL));
            pair(p + 2, dart(k, t + 2, UR));
            pair(p + 3, dart(k, t, UL));
            rot.push((p..p + 4).collect());
        }
    }
    PlaneGraph::from_rotation(rot, theta).expect("tube construction is spherical")
}

/// 4-hedrite with two central circuits (for suitable `j`): an equator of `n`
/// vertices crossed by nested arcs centred at gap `0` in the north and at
/// gap `j` in the south. Other values of `j` give more circuits, e.g. `j = 0`
/// gives the `J4` family and `j = n/4` the `K4` family.
pub fn build_4hedrite(n: usize, j: usize) -> Result<PlaneGraph> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!("n = {n} must be even and >= 2")));
    }
    if j > n / 2 {
        return Err(Error::InvalidParameter(format!("shift {j} exceeds n/2")));
    }
    const E: usize = 0;
    const N: usize = 1;
    const W: usize = 2;
    const S: usize = 3;
    let mut theta = vec![0; 4 * n];
    let mut pair = |a: usize, b: usize| {
        theta[a] = b;
        theta[b] = a;
    };
    for v in 0..n {
        pair(4 * v + E, 4 * ((v + 1) % n) + W);
    }
    let half = n / 2;
    for k in 0..half {
        let a = (n - k) % n;
        let b = (1 + k) % n;
        pair(4 * a + N, 4 * b + N);
        let a = (j + n - k) % n;
        let b = (j + 1 + k) % n;
        pair(4 * a + S, 4 * b + S);
    }
    PlaneGraph::from_quartic_theta(theta)
}

fn build_any(kind: FamilyKind, m: usize) -> Result<PlaneGraph> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    match kind {
        FamilyKind::I6 => Ok(tube(m, Cap::Digon, Cap::Digon)),
        FamilyKind::I5 => Ok(tube(m, Cap::Pole, Cap::Digon)),
        FamilyKind::I4 => Ok(tube(m, Cap::Pole, Cap::Pole)),
        FamilyKind::J4 => build_4hedrite(2 * m, 0),
        FamilyKind::K4 => build_4hedrite(4 * m, m),
        FamilyKind::Other => Err(Error::InvalidParameter("no construction for kind none".into())),
    }
}

/// Member `m >= 2` of a special family.
pub fn build_family(kind: FamilyKind, m: usize) -> Result<PlaneGraph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("family parameter m = {m} must be >= 2")));
    }
    build_any(kind, m)
}

fn member_of(g: &PlaneGraph, kind: FamilyKind, min_m: usize) -> Option<FamilyLabel> {
    let n = g.num_vertices();
    let m = match kind {
        FamilyKind::I6 | FamilyKind::J4 if n % 2 == 0 => n / 2,
        FamilyKind::I5 if n % 2 == 1 => (n - 1) / 2,
        FamilyKind::I4 if n % 2 == 0 && n >= 4 => (n - 2) / 2,
        FamilyKind::K4 if n % 4 == 0 => n / 4,
        _ => return None,
    };
    if m < min_m {
        return None;
    }
    let candidate = build_any(kind, m).ok()?;
    is_isomorphic(g, &candidate).then_some(FamilyLabel { kind, m })
}

fn kinds_for(i: usize) -> &'static [FamilyKind] {
    match i {
        4 => &[FamilyKind::J4, FamilyKind::I4],
        5 => &[FamilyKind::I5],
        6 => &[FamilyKind::I6],
        _ => &[],
    }
}

/// Family of a non-3-connected i-hedrite, or `K4` for the reducible
/// 4-hedrites `K_{4,4m}`; `none` otherwise.
pub fn classify_family(g: &PlaneGraph) -> FamilyLabel {
    let Some(i) = g.is_i_hedrite() else { return FamilyLabel::NONE };
    if vertex_connectivity_class(g) != Connectivity::AtLeastThree {
        for &kind in kinds_for(i) {
            if let Some(label) = member_of(g, kind, 2) {
                return label;
            }
        }
    }
    if i == 4 {
        if let Some(label) = member_of(g, FamilyKind::K4, 2) {
            return label;
        }
    }
    FamilyLabel::NONE
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoGonReport {
    pub adjacent_2gons: bool,
    /// Two 2-gons sharing a vertex but no edge.
    pub vertex_sharing_2gons: bool,
    /// Family member (allowing `m = 1`) the flags force the graph to be.
    pub forced: Option<FamilyLabel>,
}

pub fn two_gon_configuration(g: &PlaneGraph) -> TwoGonReport {
    let digons: Vec<usize> = (0..g.num_faces()).filter(|&f| g.face_size(f) == 2).collect();
    let mut adjacent = false;
    let mut sharing = false;
    for (a, &f) in digons.iter().enumerate() {
        for &h in &digons[a + 1..] {
            let fe: BTreeSet<usize> = g.face(f).iter().map(|&d| g.edge_id(d as usize)).collect();
            if g.face(h).iter().any(|&d| fe.contains(&g.edge_id(d as usize))) {
                adjacent = true;
                continue;
            }
            let fv: BTreeSet<usize> = g.face(f).iter().map(|&d| g.vertex(d as usize)).collect();
            if g.face(h).iter().any(|&d| fv.contains(&g.vertex(d as usize))) {
                sharing = true;
            }
        }
    }
    let forced = if adjacent {
        member_of(g, FamilyKind::J4, 1)
    } else if sharing {
        member_of(g, FamilyKind::I4, 1).or_else(|| member_of(g, FamilyKind::I5, 1))
    } else {
        None
    };
    if adjacent || sharing {
        assert!(forced.is_some(), "2-gon configuration without matching family");
    }
    TwoGonReport { adjacent_2gons: adjacent, vertex_sharing_2gons: sharing, forced }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shift {
    pub n: usize,
    pub j: usize,
}

/// Least shift `j <= n/4` reproducing a two-circuit 4-hedrite.
pub fn shift(g: &PlaneGraph) -> Result<Shift> {
    if g.is_i_hedrite() != Some(4) {
        return Err(Error::NotHedrite);
    }
    let found = central_circuits(g).len();
    if found != 2 {
        return Err(Error::CircuitCount { expected: 2, found });
    }
    let n = g.num_vertices();
    (0..=n / 4)
        .find(|&j| build_4hedrite(n, j).map(|h| is_isomorphic(g, &h)).unwrap_or(false))
        .map(|j| Shift { n, j })
        .ok_or_else(|| Error::InvalidParameter("no shift reproduces this graph".into()))
}

/// Pairs of circuits that do not meet.
pub fn disjoint_circuit_pairs(g: &PlaneGraph) -> Vec<(usize, usize)> {
    let cs = central_circuits(g);
    let meet = intersection_matrix(g, &cs);
    let mut out = Vec::new();
    for a in 0..cs.len() {
        for b in a + 1..cs.len() {
            if meet[a][b] == 0 {
                out.push((a, b));
            }
        }
    }
    out
}
