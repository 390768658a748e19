//! Dart-based rotation systems for plane maps.
//!
//! A map is stored as two permutations on darts (half-edges): `theta` pairs
//! each dart with the other end of its edge, and `sigma` sends a dart to its
//! counterclockwise successor around the shared vertex. Faces are the orbits
//! of `phi = sigma . theta`, i.e. `phi(d) = sigma(theta(d))`; this convention
//! is used by every module of the crate.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::{vertex_connectivity_class, Connectivity};

pub type Dart = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    theta: Vec<u32>,
    sigma: Vec<u32>,
    sigma_inv: Vec<u32>,
    vertex_of: Vec<u32>,
    pos_in_rot: Vec<u32>,
    rotations: Vec<Vec<u32>>,
    face_of: Vec<u32>,
    faces: Vec<Vec<u32>>,
}

impl PlaneGraph {
    /// Builds and validates a spherical map from per-vertex counterclockwise
    /// dart lists and the edge pairing.
    pub fn from_rotation(rotations: Vec<Vec<usize>>, theta: Vec<usize>) -> Result<Self> {
        let nd = theta.len();
        if nd == 0 {
            return Err(Error::Malformed("empty map".into()));
        }
        let mut vertex_of = vec![u32::MAX; nd];
        let mut sigma = vec![u32::MAX; nd];
        let mut pos_in_rot = vec![0u32; nd];
        for (v, rot) in rotations.iter().enumerate() {
            if rot.is_empty() {
                return Err(Error::Malformed(format!("vertex {v} has no darts")));
            }
            for (j, &d) in rot.iter().enumerate() {
                if d >= nd {
                    return Err(Error::BadPermutation { dart: d, reason: "out of range" });
                }
                if vertex_of[d] != u32::MAX {
                    return Err(Error::BadPermutation { dart: d, reason: "listed twice in rotation" });
                }
                vertex_of[d] = v as u32;
                pos_in_rot[d] = j as u32;
                sigma[d] = rot[(j + 1) % rot.len()] as u32;
            }
        }
        if let Some(d) = vertex_of.iter().position(|&v| v == u32::MAX) {
            return Err(Error::BadPermutation { dart: d, reason: "missing from rotation" });
        }
        for (d, &e) in theta.iter().enumerate() {
            if e >= nd {
                return Err(Error::BadPermutation { dart: d, reason: "pairs out of range" });
            }
            if e == d || theta[e] != d {
                return Err(Error::NonInvolutive { dart: d });
            }
            if vertex_of[d] == vertex_of[e] {
                return Err(Error::Loop { dart: d });
            }
        }
        let mut sigma_inv = vec![0u32; nd];
        for d in 0..nd {
            sigma_inv[sigma[d] as usize] = d as u32;
        }
        let theta: Vec<u32> = theta.iter().map(|&e| e as u32).collect();
        let rotations: Vec<Vec<u32>> = rotations
            .into_iter()
            .map(|r| r.into_iter().map(|d| d as u32).collect())
            .collect();

        // connectivity
        let nv = rotations.len();
        let mut seen = vec![false; nv];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &d in &rotations[v] {
                let w = vertex_of[theta[d as usize] as usize] as usize;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Disconnected { vertex: v });
        }

        let mut face_of = vec![u32::MAX; nd];
        let mut faces = Vec::new();
        for start in 0..nd {
            if face_of[start] != u32::MAX {
                continue;
            }
            let id = faces.len() as u32;
            let mut face = Vec::new();
            let mut d = start;
            while face_of[d] == u32::MAX {
                face_of[d] = id;
                face.push(d as u32);
                d = sigma[theta[d] as usize] as usize;
            }
            faces.push(face);
        }
        let euler = nv as i64 - (nd / 2) as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::Genus { euler });
        }
        Ok(PlaneGraph { theta, sigma, sigma_inv, vertex_of, pos_in_rot, rotations, face_of, faces })
    }

    /// Builds a 4-valent map whose vertex `v` owns darts `4v..4v+3` in
    /// counterclockwise order.
    pub fn from_quartic_theta(theta: Vec<usize>) -> Result<Self> {
        if theta.len() % 4 != 0 {
            return Err(Error::Malformed("dart count is not a multiple of 4".into()));
        }
        let rot = (0..theta.len() / 4).map(|v| (4 * v..4 * v + 4).collect()).collect();
        Self::from_rotation(rot, theta)
    }

    pub fn num_vertices(&self) -> usize {
        self.rotations.len()
    }

    pub fn num_darts(&self) -> usize {
        self.theta.len()
    }

    pub fn num_edges(&self) -> usize {
        self.theta.len() / 2
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    #[inline]
    pub fn theta(&self, d: Dart) -> Dart {
        self.theta[d] as usize
    }

    #[inline]
    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d] as usize
    }

    #[inline]
    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[d] as usize
    }

    /// Face successor `sigma(theta(d))`.
    #[inline]
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma[self.theta[d] as usize] as usize
    }

    #[inline]
    pub fn vertex(&self, d: Dart) -> usize {
        self.vertex_of[d] as usize
    }

    /// Index of `d` in the counterclockwise list of its vertex.
    #[inline]
    pub fn position(&self, d: Dart) -> usize {
        self.pos_in_rot[d] as usize
    }

    /// Dart at index `j` (mod degree) of the rotation of `v`.
    #[inline]
    pub fn dart_at(&self, v: usize, j: usize) -> Dart {
        let r = &self.rotations[v];
        r[j % r.len()] as usize
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn rotation(&self, v: usize) -> impl Iterator<Item = Dart> + '_ {
        self.rotations[v].iter().map(|&d| d as usize)
    }

    pub fn is_quartic(&self) -> bool {
        self.rotations.iter().all(|r| r.len() == 4)
    }

    pub(crate) fn require_quartic(&self) -> Result<()> {
        match self.rotations.iter().position(|r| r.len() != 4) {
            None => Ok(()),
            Some(v) => Err(Error::NotQuartic { vertex: v, degree: self.rotations[v].len() }),
        }
    }

    /// Canonical edge index of a dart: both darts of an edge share it.
    pub fn edge_id(&self, d: Dart) -> usize {
        d.min(self.theta(d))
    }

    #[inline]
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d] as usize
    }

    pub fn face(&self, f: usize) -> &[u32] {
        &self.faces[f]
    }

    /// All faces as cyclic dart sequences (orbits of `phi`).
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        self.faces.iter().map(|f| f.iter().map(|&d| d as usize).collect()).collect()
    }

    pub fn face_size(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    pub fn face_vector(&self) -> FaceVector {
        let mut p = BTreeMap::new();
        for f in &self.faces {
            *p.entry(f.len()).or_insert(0usize) += 1;
        }
        let i_value = if p.keys().all(|k| (2..=4).contains(k)) {
            Some(p.get(&2).copied().unwrap_or(0) + p.get(&3).copied().unwrap_or(0))
        } else {
            None
        };
        FaceVector { p, i_value }
    }

    /// Returns `i` when the map is a 2-connected 4-valent map with only 2-, 3-
    /// and 4-gonal faces.
    pub fn is_i_hedrite(&self) -> Option<usize> {
        if !self.is_quartic() {
            return None;
        }
        let i = self.face_vector().i_value?;
        if !(4..=8).contains(&i) || self.face_vector().count(2) != 8 - i {
            return None;
        }
        match vertex_connectivity_class(self) {
            Connectivity::One => None,
            _ => Some(i),
        }
    }

    /// The same map with every rotation reversed.
    pub fn mirror(&self) -> PlaneGraph {
        let rot = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().map(|&d| d as usize).collect())
            .collect();
        PlaneGraph::from_rotation(rot, self.theta.iter().map(|&d| d as usize).collect())
            .expect("mirror of a valid map is valid")
    }

    /// Renames darts by `perm` (old dart -> new dart) and vertices by `vperm`.
    pub fn relabel(&self, perm: &[usize], vperm: &[usize]) -> PlaneGraph {
        let nd = self.num_darts();
        let mut theta = vec![0; nd];
        for d in 0..nd {
            theta[perm[d]] = perm[self.theta(d)];
        }
        let mut rot = vec![Vec::new(); self.num_vertices()];
        for v in 0..self.num_vertices() {
            rot[vperm[v]] = self.rotations[v].iter().map(|&d| perm[d as usize]).collect();
        }
        PlaneGraph::from_rotation(rot, theta).expect("relabeling preserves validity")
    }

    /// Plane dual: one vertex per face, the rotation at a face lists its darts
    /// in `phi` order.
    pub fn dual(&self) -> PlaneGraph {
        let rot = self.faces();
        PlaneGraph::from_rotation(rot, (0..self.num_darts()).map(|d| self.theta(d)).collect())
            .expect("dual of a bridgeless spherical map is valid")
    }

    /// Medial map: one 4-valent vertex per edge, joined through every face
    /// corner. Dart `2x` leaves the medial vertex of `edge(x)` towards
    /// `edge(sigma(x))`, dart `2x+1` towards `edge(sigma^-1(x))`.
    pub fn medial(&self) -> PlaneGraph {
        let nd = self.num_darts();
        let mut theta = vec![0; 2 * nd];
        for x in 0..nd {
            let y = self.sigma(x);
            theta[2 * x] = 2 * y + 1;
            theta[2 * y + 1] = 2 * x;
        }
        let mut rot = Vec::with_capacity(nd / 2);
        for d in 0..nd {
            let e = self.theta(d);
            if d < e {
                rot.push(vec![2 * e + 1, 2 * d, 2 * d + 1, 2 * e]);
            }
        }
        PlaneGraph::from_rotation(rot, theta).expect("medial of a spherical map is spherical")
    }

    pub fn vertex_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotation(v).map(move |d| self.vertex(self.theta(d)))
    }

    pub(crate) fn theta_vec(&self) -> Vec<usize> {
        self.theta.iter().map(|&d| d as usize).collect()
    }

    pub(crate) fn rotation_vecs(&self) -> Vec<Vec<usize>> {
        self.rotations.iter().map(|r| r.iter().map(|&d| d as usize).collect()).collect()
    }
}

/// Face counts by size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceVector {
    pub p: BTreeMap<usize, usize>,
    pub i_value: Option<usize>,
}

impl FaceVector {
    pub fn count(&self, k: usize) -> usize {
        self.p.get(&k).copied().unwrap_or(0)
    }

    /// `2 p_2 + p_3 - sum_{k >= 5} (k - 4) p_k`, which equals 8 for every
    /// 4-valent spherical map (ignoring 1-gons, which never occur here).
    pub fn euler_excess(&self) -> i64 {
        self.p
            .iter()
            .map(|(&k, &c)| (4 - k as i64) * c as i64)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dartcode;

    fn two_one() -> PlaneGraph {
        PlaneGraph::from_quartic_theta(vec![4, 7, 6, 5, 0, 3, 2, 1]).unwrap()
    }

    #[test]
    fn four_parallel_edges() {
        let g = two_one();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.num_faces(), 4);
        assert!(g.faces().iter().all(|f| f.len() == 2));
        assert_eq!(g.is_i_hedrite(), Some(4));
    }

    #[test]
    fn rejects_fixed_point() {
        let err = PlaneGraph::from_quartic_theta(vec![0, 7, 6, 5, 4, 3, 2, 1]).unwrap_err();
        assert!(err.to_string().contains("non-involutive pairing"));
    }

    #[test]
    fn rejects_torus() {
        // two vertices, pairing 0-4 1-5 2-6 3-7 puts the map on a torus
        let err = PlaneGraph::from_quartic_theta(vec![4, 5, 6, 7, 0, 1, 2, 3]).unwrap_err();
        assert!(matches!(err, Error::Genus { .. }));
    }

    #[test]
    fn rejects_loops_and_disconnected() {
        let err = PlaneGraph::from_quartic_theta(vec![2, 3, 0, 1]).unwrap_err();
        assert!(matches!(err, Error::Loop { .. }));
        let err = PlaneGraph::from_quartic_theta(
            [vec![4, 7, 6, 5, 0, 3, 2, 1], vec![12, 15, 14, 13, 8, 11, 10, 9]].concat(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Disconnected { .. }));
    }

    #[test]
    fn face_sizes_sum_to_darts() {
        let g = two_one().medial().medial();
        let total: usize = g.faces().iter().map(Vec::len).sum();
        assert_eq!(total, g.num_darts());
        assert_eq!(g.face_vector().euler_excess(), 8);
    }

    #[test]
    fn dual_swaps_counts() {
        let g = two_one();
        let d = g.dual();
        assert_eq!(d.num_vertices(), 4);
        assert_eq!(d.num_faces(), 2);
        assert!(!d.is_quartic());
        let text = dartcode::encode(&g);
        assert_eq!(dartcode::decode(&text).unwrap(), g);
    }
}
