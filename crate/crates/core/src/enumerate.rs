//! Isomorph-free generation of i-hedrites.
//!
//! Vertices carry the fixed rotation `4v, 4v+1, 4v+2, 4v+3`; the search only
//! chooses the pairing. The smallest unpaired dart is always paired next,
//! either with an unpaired dart of another existing vertex or with the first
//! dart of a fresh vertex. Every labeled map reached this way is the
//! breadth-first relabeling of itself from dart 0, so a completed map is kept
//! exactly when dart 0 is a canonical root.
//!
//! Partially built faces are tracked as open face walks; a walk longer than
//! four darts, or a closed face beyond the remaining budget for its size,
//! cuts the branch.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_code, root_is_canonical, CanonicalCode};
use crate::circuits::{cc_vector, is_balanced, is_pure, CcVector};
use crate::graph::PlaneGraph;
use crate::structure::{classify_family, is_irreducible, vertex_connectivity_class, Connectivity, FamilyLabel};
use crate::symmetry::{point_group, PointGroup};

const UNSET: u8 = u8::MAX;

/// Largest vertex count the generator accepts (darts must fit in a byte).
pub const MAX_VERTICES: usize = 63;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HedriteRecord {
    pub i: usize,
    pub n: usize,
    pub local_id: usize,
    pub canonical_code: String,
    pub point_group: PointGroup,
    pub cc_vector: String,
    pub irreducible: bool,
    pub pure: bool,
    pub balanced: bool,
    pub three_connected: bool,
    pub family: FamilyLabel,
    #[serde(skip)]
    pub graph: Option<PlaneGraph>,
}

impl HedriteRecord {
    pub fn from_graph(g: PlaneGraph, i: usize, local_id: usize) -> HedriteRecord {
        HedriteRecord {
            i,
            n: g.num_vertices(),
            local_id,
            canonical_code: canonical_code(&g).to_hex(),
            point_group: point_group(&g),
            cc_vector: cc_vector(&g).to_string(),
            irreducible: is_irreducible(&g),
            pure: is_pure(&g),
            balanced: is_balanced(&g),
            three_connected: vertex_connectivity_class(&g) == Connectivity::AtLeastThree,
            family: classify_family(&g),
            graph: Some(g),
        }
    }

    pub fn cc(&self) -> CcVector {
        CcVector::parse(&self.cc_vector).expect("stored CC-vector parses")
    }

    pub fn graph(&self) -> &PlaneGraph {
        self.graph.as_ref().expect("record carries its graph")
    }

    /// `key=value` header used by the dart-code stream format.
    pub fn header(&self) -> String {
        format!(
            "# i={} n={} local_id={} canonical_code={} point_group={} cc_vector={} irreducible={} pure={} balanced={} three_connected={} family={}",
            self.i,
            self.n,
            self.local_id,
            self.canonical_code,
            self.point_group,
            self.cc_vector,
            self.irreducible,
            self.pure,
            self.balanced,
            self.three_connected,
            self.family
        )
    }
}

#[derive(Clone)]
struct State {
    n: usize,
    nv: usize,
    theta: Vec<u8>,
    /// For each endpoint of an open face walk, the other endpoint.
    other: Vec<u8>,
    /// Length of the open walk, stored at both endpoints.
    len: Vec<u8>,
    closed: [u8; 5],
    budget: [u8; 5],
}

#[inline]
fn sigma(d: usize) -> usize {
    (d & !3) | ((d + 1) & 3)
}

impl State {
    fn new(i: usize, n: usize) -> State {
        let nd = 4 * n;
        let mut s = State {
            n,
            nv: 1,
            theta: vec![UNSET; nd],
            other: vec![UNSET; nd],
            len: vec![0; nd],
            closed: [0; 5],
            budget: [0, 0, (8 - i) as u8, (2 * i - 8) as u8, (n + 2 - i) as u8],
        };
        s.open_vertex(0);
        s
    }

    fn open_vertex(&mut self, v: usize) {
        for d in 4 * v..4 * v + 4 {
            self.other[d] = d as u8;
            self.len[d] = 1;
        }
    }

    /// Joins the walk ending at `a` to the walk starting at `t`.
    fn link(&mut self, a: usize, t: usize) -> bool {
        let s = self.other[a] as usize;
        let e = self.other[t] as usize;
        if s == t {
            let size = self.len[a] as usize;
            if !(2..=4).contains(&size) {
                return false;
            }
            self.closed[size] += 1;
            self.closed[size] <= self.budget[size]
        } else {
            let l = self.len[a] + self.len[t];
            if l > 4 {
                return false;
            }
            self.other[s] = e as u8;
            self.other[e] = s as u8;
            self.len[s] = l;
            self.len[e] = l;
            true
        }
    }

    fn pair(&mut self, a: usize, b: usize) -> bool {
        self.theta[a] = b as u8;
        self.theta[b] = a as u8;
        self.link(a, sigma(b)) && self.link(b, sigma(a))
    }

    fn first_unpaired(&self, from: usize) -> Option<usize> {
        (from..4 * self.nv).find(|&d| self.theta[d] == UNSET)
    }

    /// Children of this node, as `(next search position, state)`.
    fn children(&self, d: usize) -> Vec<State> {
        let mut out = Vec::new();
        let v = d / 4;
        for e in d + 1..4 * self.nv {
            if e / 4 == v || self.theta[e] != UNSET {
                continue;
            }
            let mut c = self.clone();
            if c.pair(d, e) {
                out.push(c);
            }
        }
        if self.nv < self.n {
            let mut c = self.clone();
            let w = c.nv;
            c.nv += 1;
            c.open_vertex(w);
            if c.pair(d, 4 * w) {
                out.push(c);
            }
        }
        out
    }

    fn finish(&self, i: usize, orderly: bool) -> Option<PlaneGraph> {
        if self.nv != self.n || self.closed != self.budget {
            return None;
        }
        let theta = self.theta.iter().map(|&x| x as usize).collect();
        let g = PlaneGraph::from_quartic_theta(theta).ok()?;
        if (orderly && !root_is_canonical(&g)) || g.is_i_hedrite() != Some(i) {
            return None;
        }
        Some(g)
    }
}

fn search(state: State, from: usize, i: usize, orderly: bool, out: &mut Vec<PlaneGraph>) {
    match state.first_unpaired(from) {
        None => out.extend(state.finish(i, orderly)),
        Some(d) => {
            for c in state.children(d) {
                search(c, d + 1, i, orderly, out);
            }
        }
    }
}

/// Breadth-first expansion until enough independent subtrees exist.
fn frontier(i: usize, n: usize, want: usize, orderly: bool) -> (Vec<(State, usize)>, Vec<PlaneGraph>) {
    let mut level = vec![(State::new(i, n), 0)];
    let mut done = Vec::new();
    for _ in 0..2 * n {
        if level.len() >= want {
            break;
        }
        let mut next = Vec::new();
        for (s, from) in level {
            match s.first_unpaired(from) {
                None => done.extend(s.finish(i, orderly)),
                Some(d) => next.extend(s.children(d).into_iter().map(|c| (c, d + 1))),
            }
        }
        level = next;
    }
    (level, done)
}

/// Raw graphs of all i-hedrites with `n` vertices, sorted by canonical code.
pub fn enumerate_graphs(i: usize, n: usize) -> Vec<PlaneGraph> {
    generate(i, n, true)
}

/// Same result as [`enumerate_graphs`], but every completed labeling is kept
/// and duplicates are removed by canonical code afterwards. Much slower;
/// used to cross-check the canonical-root filter.
pub fn enumerate_graphs_by_dedup(i: usize, n: usize) -> Vec<PlaneGraph> {
    generate(i, n, false)
}

fn generate(i: usize, n: usize, orderly: bool) -> Vec<PlaneGraph> {
    if !(4..=8).contains(&i) || n < 1 || n > MAX_VERTICES || n + 2 < i {
        return Vec::new();
    }
    let (level, mut found) = frontier(i, n, 256, orderly);
    let more: Vec<PlaneGraph> = level
        .into_par_iter()
        .flat_map_iter(|(s, from)| {
            let mut out = Vec::new();
            search(s, from, i, orderly, &mut out);
            out
        })
        .collect();
    found.extend(more);
    let mut keyed: Vec<(CanonicalCode, PlaneGraph)> =
        found.into_iter().map(|g| (canonical_code(&g), g)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, g)| g).collect()
}

pub fn enumerate(i: usize, n: usize) -> Vec<HedriteRecord> {
    let graphs = enumerate_graphs(i, n);
    graphs
        .into_par_iter()
        .enumerate()
        .map(|(k, g)| HedriteRecord::from_graph(g, i, k + 1))
        .collect()
}

/// All i-hedrites with `n <= n_max`, ordered by `i`, then `n`, then code.
pub fn full_census(n_max: usize) -> Vec<HedriteRecord> {
    let mut out = Vec::new();
    census_each(n_max, |recs| out.extend(recs));
    out
}

/// Streams the census one `(i, n)` cell at a time.
pub fn census_each(n_max: usize, mut sink: impl FnMut(Vec<HedriteRecord>)) {
    for i in 4..=8 {
        for n in 1..=n_max {
            let recs = enumerate(i, n);
            if !recs.is_empty() {
                sink(recs);
            }
        }
    }
}
