//! Inflation along central circuits, reduction of rail-roads and the
//! Goldberg-Coxeter construction.

use serde::{Deserialize, Serialize};

use crate::circuits::{central_circuits, circuit_of_edge, vertex_passages, CentralCircuit};
use crate::error::{Error, Result};
use crate::graph::{Dart, PlaneGraph};
use crate::structure::{rail_roads, RailRoad};

/// Replaces every central circuit `C` by `mult[C]` parallel copies.
///
/// A vertex whose two passages lie on circuits with multiplicities `a`
/// (passage through darts 0 and 2) and `b` (darts 1 and 3) becomes an
/// `a x b` grid. Copies are numbered from the left of the direction of
/// travel, which is consistent along every circuit.
pub fn inflate(g: &PlaneGraph, mult: &[usize]) -> Result<PlaneGraph> {
    g.require_quartic()?;
    let circuits = central_circuits(g);
    if mult.len() != circuits.len() {
        return Err(Error::CircuitCount { expected: circuits.len(), found: mult.len() });
    }
    if mult.iter().any(|&t| t == 0) {
        return Err(Error::InvalidParameter("multiplicities must be >= 1".into()));
    }
    let passages = vertex_passages(g, &circuits);
    let n = g.num_vertices();
    // grid size (columns b, rows a) and first new vertex of each old vertex
    let mut dims = Vec::with_capacity(n);
    let mut base = Vec::with_capacity(n);
    let mut total = 0;
    for p in &passages {
        let (a, b) = (mult[p[0]], mult[p[1]]);
        base.push(total);
        dims.push((a, b));
        total += a * b;
    }
    const E: usize = 0;
    const N: usize = 1;
    const W: usize = 2;
    const S: usize = 3;
    let cell = |v: usize, x: usize, y: usize| base[v] + y * dims[v].1 + x;
    let mut theta = vec![usize::MAX; 4 * total];
    for v in 0..n {
        let (a, b) = dims[v];
        for y in 0..a {
            for x in 0..b {
                if x + 1 < b {
                    theta[4 * cell(v, x, y) + E] = 4 * cell(v, x + 1, y) + W;
                    theta[4 * cell(v, x + 1, y) + W] = 4 * cell(v, x, y) + E;
                }
                if y + 1 < a {
                    theta[4 * cell(v, x, y) + N] = 4 * cell(v, x, y + 1) + S;
                    theta[4 * cell(v, x, y + 1) + S] = 4 * cell(v, x, y) + N;
                }
            }
        }
    }
    // outward slots of an old dart, from the left when looking outward
    let slots = |d: Dart| -> Vec<usize> {
        let v = g.vertex(d);
        let (a, b) = dims[v];
        match g.position(d) {
            0 => (0..a).map(|k| 4 * cell(v, b - 1, a - 1 - k) + E).collect(),
            1 => (0..b).map(|k| 4 * cell(v, k, a - 1) + N).collect(),
            2 => (0..a).map(|k| 4 * cell(v, 0, k) + W).collect(),
            _ => (0..b).map(|k| 4 * cell(v, b - 1 - k, 0) + S).collect(),
        }
    };
    for d in 0..g.num_darts() {
        let e = g.theta(d);
        if d > e {
            continue;
        }
        let (sd, se) = (slots(d), slots(e));
        let t = sd.len();
        debug_assert_eq!(t, se.len());
        for k in 0..t {
            theta[sd[k]] = se[t - 1 - k];
            theta[se[t - 1 - k]] = sd[k];
        }
    }
    PlaneGraph::from_quartic_theta(theta)
}

/// `t` parallel copies of one circuit.
pub fn inflate_circuit(g: &PlaneGraph, c: &CentralCircuit, t: usize) -> Result<PlaneGraph> {
    let circuits = central_circuits(g);
    let idx = find_circuit(g, &circuits, c)?;
    let mut mult = vec![1; circuits.len()];
    mult[idx] = t;
    inflate(g, &mult)
}

/// Simultaneous `t`-inflation along all circuits.
pub fn inflate_all(g: &PlaneGraph, t: usize) -> Result<PlaneGraph> {
    inflate(g, &vec![t; central_circuits(g).len()])
}

pub(crate) fn find_circuit(g: &PlaneGraph, circuits: &[CentralCircuit], c: &CentralCircuit) -> Result<usize> {
    let first = *c.darts.first().ok_or(Error::ForeignCircuit)?;
    if first >= g.num_darts() {
        return Err(Error::ForeignCircuit);
    }
    let owner = circuit_of_edge(g, circuits)[first];
    let same = circuits[owner].length == c.length
        && c.darts.iter().all(|&d| d < g.num_darts() && circuit_of_edge(g, circuits)[d] == owner);
    if same {
        Ok(owner)
    } else {
        Err(Error::ForeignCircuit)
    }
}

/// Removes the edges of one circuit. Vertices it crosses once are smoothed;
/// its self-crossings disappear.
pub fn delete_circuit(g: &PlaneGraph, c: &CentralCircuit) -> Result<PlaneGraph> {
    g.require_quartic()?;
    let circuits = central_circuits(g);
    let idx = find_circuit(g, &circuits, c)?;
    let coe = circuit_of_edge(g, &circuits);
    let on_c = |d: Dart| coe[d] == idx;
    let n = g.num_vertices();
    let kept: Vec<bool> = (0..n).map(|v| g.rotation(v).all(|d| !on_c(d))).collect();
    let mut new_id = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        if kept[v] {
            new_id[v] = count;
            count += 1;
        }
    }
    if count == 0 {
        return Err(Error::InvalidParameter("deleting the circuit leaves no vertex".into()));
    }
    let map = |d: Dart| 4 * new_id[g.vertex(d)] + g.position(d);
    let mut theta = vec![usize::MAX; 4 * count];
    for d in 0..g.num_darts() {
        if !kept[g.vertex(d)] {
            continue;
        }
        let mut e = g.theta(d);
        let mut steps = 0;
        while !kept[g.vertex(e)] {
            // smoothed vertex: continue straight through
            e = g.theta(g.sigma(g.sigma(e)));
            steps += 1;
            if steps > g.num_darts() {
                return Err(Error::InvalidParameter("circuit without surviving vertices".into()));
            }
        }
        theta[map(d)] = map(e);
    }
    PlaneGraph::from_quartic_theta(theta)
}

/// Collapses a rail-road by deleting one of its bounding circuits.
pub fn reduce(g: &PlaneGraph, r: &RailRoad) -> Result<PlaneGraph> {
    if !rail_roads(g).contains(r) {
        return Err(Error::ForeignRailRoad);
    }
    let circuits = central_circuits(g);
    delete_circuit(g, &circuits[r.bounding_circuits[1]])
}

/// Reduces rail-roads until none is left.
pub fn reduce_fully(g: &PlaneGraph) -> Result<PlaneGraph> {
    let mut cur = g.clone();
    while let Some(r) = rail_roads(&cur).into_iter().next() {
        cur = reduce(&cur, &r)?;
    }
    Ok(cur)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcParams {
    pub k: usize,
    pub l: usize,
}

impl GcParams {
    pub fn new(k: usize, l: usize) -> Result<GcParams> {
        if k == 0 && l == 0 {
            return Err(Error::InvalidParameter("GC parameters must not both be zero".into()));
        }
        Ok(GcParams { k, l })
    }

    pub fn norm(&self) -> usize {
        self.k * self.k + self.l * self.l
    }
}

/// Gaussian integer arithmetic on doubled coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Gi(i64, i64);

impl Gi {
    fn add(self, o: Gi) -> Gi {
        Gi(self.0 + o.0, self.1 + o.1)
    }
    fn sub(self, o: Gi) -> Gi {
        Gi(self.0 - o.0, self.1 - o.1)
    }
    fn mul(self, o: Gi) -> Gi {
        Gi(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn unit(j: usize) -> Gi {
        [Gi(1, 0), Gi(0, 1), Gi(-1, 0), Gi(0, -1)][j % 4]
    }
    fn direction(self) -> usize {
        match self {
            Gi(1, 0) => 0,
            Gi(0, 1) => 1,
            Gi(-1, 0) => 2,
            Gi(0, -1) => 3,
            _ => unreachable!("not a unit"),
        }
    }
}

/// Square of side `z = k + li` in doubled coordinates; side `j` runs from
/// corner `j` to corner `j + 1` and stands for dart `j` of the old vertex.
struct Square {
    z: Gi,
    n2: i64,
}

impl Square {
    fn corner(&self, j: usize) -> Gi {
        let z2 = Gi(2 * self.z.0, 2 * self.z.1);
        match j % 4 {
            0 => Gi(0, 0),
            1 => z2,
            2 => z2.mul(Gi(1, 1)),
            _ => z2.mul(Gi(0, 1)),
        }
    }

    /// Coordinates `(s, t)` scaled by `2N` along the two side directions.
    fn st(&self, p: Gi) -> (i64, i64) {
        let (k, l) = (self.z.0, self.z.1);
        (p.0 * k + p.1 * l, p.1 * k - p.0 * l)
    }

    /// Constraint values `f_j(p) >= 0` for the four sides.
    fn slack(&self, p: Gi) -> [i64; 4] {
        let (s, t) = self.st(p);
        [t, self.n2 - s, self.n2 - t, s]
    }
}

/// Goldberg-Coxeter construction `GC_{k,l}` of a 4-valent map.
pub fn goldberg_coxeter(g: &PlaneGraph, p: GcParams) -> Result<PlaneGraph> {
    g.require_quartic()?;
    let p = GcParams::new(p.k, p.l)?;
    let sq = Square { z: Gi(p.k as i64, p.l as i64), n2: 2 * p.norm() as i64 };
    let owns = |d: Dart| d < g.theta(d);
    // vertices: (old vertex, doubled point)
    let mut points: Vec<(usize, Gi)> = Vec::new();
    let mut index = std::collections::HashMap::new();
    let (k, l) = (p.k as i64, p.l as i64);
    for v in 0..g.num_vertices() {
        for x in (-2 * l..=2 * k).filter(|x| x.rem_euclid(2) == 1) {
            for y in (0..=2 * (k + l)).filter(|y| y.rem_euclid(2) == 1) {
                let pt = Gi(x, y);
                let sl = sq.slack(pt);
                if sl.iter().any(|&s| s < 0) {
                    continue;
                }
                let on_foreign = (0..4).any(|j| sl[j] == 0 && !owns(g.dart_at(v, j)));
                if on_foreign {
                    continue;
                }
                index.insert((v, pt), points.len());
                points.push((v, pt));
            }
        }
    }
    // map across side j of vertex v's square
    let cross = |v: usize, j: usize, pt: Gi| -> (usize, usize, Gi, Gi) {
        let d = g.dart_at(v, j);
        let e = g.theta(d);
        let (w, m) = (g.vertex(e), g.position(e));
        let u = Gi(-1, 0).mul(Gi::unit((4 + m - j) % 4));
        let image = sq.corner(m + 1).sub(pt.sub(sq.corner(j)).mul(Gi::unit((4 + m - j) % 4)));
        (w, m, image, u)
    };
    let mut theta = vec![usize::MAX; 4 * points.len()];
    for (id, &(v0, p0)) in points.iter().enumerate() {
        for dir in 0..4 {
            let step = Gi::unit(dir);
            let (mut v, mut a, mut b, mut du) = (v0, p0, p0.add(Gi(2 * step.0, 2 * step.1)), step);
            let mut guard = 0;
            let target = loop {
                guard += 1;
                if guard > 16 {
                    return Err(Error::InvalidParameter("GC neighbour search did not settle".into()));
                }
                let sl = sq.slack(b);
                if sl.iter().all(|&s| s >= 0) {
                    match (0..4).find(|&j| sl[j] == 0 && !owns(g.dart_at(v, j))) {
                        None => break (v, b, du),
                        Some(j) => {
                            let (w, _, img, u) = cross(v, j, b);
                            break (w, img, du.mul(u));
                        }
                    }
                }
                // leave through the first side crossed after `a`
                let sa = sq.slack(a);
                let mut best: Option<(usize, i64, i64)> = None;
                for j in 0..4 {
                    if sl[j] >= 0 {
                        continue;
                    }
                    // crossing at lambda = sa / (sa - sb)
                    let (num, den) = (sa[j], sa[j] - sl[j]);
                    let better = match best {
                        None => true,
                        Some((_, bn, bd)) => (num as i128) * (bd as i128) < (bn as i128) * (den as i128),
                    };
                    if better {
                        best = Some((j, num, den));
                    }
                }
                let (j, _, _) = best.expect("point outside the square violates a side");
                let (w, _, img_b, u) = cross(v, j, b);
                let (_, _, img_a, _) = cross(v, j, a);
                v = w;
                a = img_a;
                b = img_b;
                du = du.mul(u);
            };
            let (w, q, dq) = target;
            let other = *index.get(&(w, q)).ok_or_else(|| {
                Error::InvalidParameter("GC neighbour is not a vertex".into())
            })?;
            let back = Gi(-dq.0, -dq.1).direction();
            theta[4 * id + dir] = 4 * other + back;
        }
    }
    PlaneGraph::from_quartic_theta(theta)
}
