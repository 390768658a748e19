//! Canonical codes of spherical maps up to orientation-preserving and
//! orientation-reversing isomorphism.
//!
//! A code is produced by a breadth-first relabeling started at a root dart:
//! vertices are numbered in discovery order, the darts of each vertex are
//! numbered consecutively in rotation order starting from the dart through
//! which the vertex was discovered. The code lists, vertex by vertex, the
//! degree followed by the new label of the partner of every dart. The
//! canonical code is the lexicographic minimum over all roots and both
//! orientations.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{Dart, PlaneGraph};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u32>);

impl CanonicalCode {
    /// Big-endian byte form.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|x| (*x as u16).to_be_bytes()).collect()
    }

    pub fn to_hex(&self) -> String {
        self.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Orientation used for a relabeling walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Preserving,
    Reversing,
}

pub(crate) struct Walker {
    vlabel: Vec<u32>,
    entry: Vec<u32>,
    order: Vec<u32>,
    base: Vec<u32>,
}

impl Walker {
    pub(crate) fn new(g: &PlaneGraph) -> Self {
        let nv = g.num_vertices();
        Walker {
            vlabel: vec![u32::MAX; nv],
            entry: vec![0; nv],
            order: Vec::with_capacity(nv),
            base: Vec::with_capacity(nv + 1),
        }
    }

    #[inline]
    fn step(g: &PlaneGraph, d: Dart, orient: Orientation, j: usize) -> Dart {
        let v = g.vertex(d);
        let deg = g.degree(v);
        let p = g.position(d);
        match orient {
            Orientation::Preserving => g.dart_at(v, p + j),
            Orientation::Reversing => g.dart_at(v, p + deg - j % deg),
        }
    }

    #[inline]
    fn offset(g: &PlaneGraph, d: Dart, entry: Dart, orient: Orientation) -> usize {
        let deg = g.degree(g.vertex(d));
        let (a, b) = (g.position(d), g.position(entry));
        match orient {
            Orientation::Preserving => (a + deg - b) % deg,
            Orientation::Reversing => (b + deg - a) % deg,
        }
    }

    /// Runs the relabeling walk, feeding each code symbol to `emit`; stops
    /// early when `emit` returns false.
    pub(crate) fn walk(
        &mut self,
        g: &PlaneGraph,
        root: Dart,
        orient: Orientation,
        mut emit: impl FnMut(u32) -> bool,
    ) -> bool {
        for &v in &self.order {
            self.vlabel[v as usize] = u32::MAX;
        }
        self.order.clear();
        self.base.clear();
        let r = g.vertex(root);
        self.vlabel[r] = 0;
        self.entry[r] = root as u32;
        self.order.push(r as u32);
        self.base.push(0);
        let mut k = 0;
        while k < self.order.len() {
            let v = self.order[k] as usize;
            let deg = g.degree(v);
            if !emit(deg as u32) {
                return false;
            }
            let e = self.entry[v] as usize;
            for j in 0..deg {
                let x = Self::step(g, e, orient, j);
                let y = g.theta(x);
                let w = g.vertex(y);
                if self.vlabel[w] == u32::MAX {
                    let lbl = self.order.len() as u32;
                    self.vlabel[w] = lbl;
                    self.entry[w] = y as u32;
                    let prev = *self.base.last().unwrap() as usize;
                    let prev_deg = g.degree(self.order[lbl as usize - 1] as usize);
                    self.base.push((prev + prev_deg) as u32);
                    self.order.push(w as u32);
                }
                let lbl = self.vlabel[w] as usize;
                let label = self.base[lbl] as usize + Self::offset(g, y, self.entry[w] as usize, orient);
                if !emit(label as u32) {
                    return false;
                }
            }
            k += 1;
        }
        true
    }

    /// Dart relabeling (old dart -> new label) from the last completed walk.
    pub(crate) fn dart_labels(&self, g: &PlaneGraph, orient: Orientation) -> Vec<usize> {
        let mut out = vec![0; g.num_darts()];
        for d in 0..g.num_darts() {
            let v = g.vertex(d);
            let lbl = self.vlabel[v] as usize;
            out[d] = self.base[lbl] as usize + Self::offset(g, d, self.entry[v] as usize, orient);
        }
        out
    }
}

/// Code of the walk rooted at `root`.
pub fn code_from(g: &PlaneGraph, root: Dart, orient: Orientation) -> Vec<u32> {
    let mut out = Vec::with_capacity(g.num_darts() + g.num_vertices());
    Walker::new(g).walk(g, root, orient, |x| {
        out.push(x);
        true
    });
    out
}

/// Compares the walk from `(root, orient)` against `best` symbol by symbol,
/// replacing `best` when the walk is smaller.
fn challenge(w: &mut Walker, g: &PlaneGraph, root: Dart, orient: Orientation, best: &mut Vec<u32>) -> Ordering {
    let mut i = 0;
    let mut state = Ordering::Equal;
    let mut tail = Vec::new();
    w.walk(g, root, orient, |x| {
        if state == Ordering::Equal {
            match x.cmp(&best[i]) {
                Ordering::Greater => return false,
                Ordering::Less => {
                    state = Ordering::Less;
                    tail.extend_from_slice(&best[..i]);
                    tail.push(x);
                }
                Ordering::Equal => {}
            }
        } else {
            tail.push(x);
        }
        i += 1;
        true
    });
    if state == Ordering::Equal && i < best.len() {
        // aborted on a greater symbol
        return Ordering::Greater;
    }
    if state == Ordering::Less {
        *best = tail;
    }
    state
}

pub fn canonical_code(g: &PlaneGraph) -> CanonicalCode {
    let mut w = Walker::new(g);
    let mut best = code_from(g, 0, Orientation::Preserving);
    for orient in [Orientation::Preserving, Orientation::Reversing] {
        for root in 0..g.num_darts() {
            challenge(&mut w, g, root, orient, &mut best);
        }
    }
    CanonicalCode(best)
}

/// True when the walk from dart 0 with the stored orientation already gives
/// the canonical code.
pub(crate) fn root_is_canonical(g: &PlaneGraph) -> bool {
    let mut w = Walker::new(g);
    let mut best = code_from(g, 0, Orientation::Preserving);
    for orient in [Orientation::Preserving, Orientation::Reversing] {
        for root in 0..g.num_darts() {
            if challenge(&mut w, g, root, orient, &mut best) == Ordering::Less {
                return false;
            }
        }
    }
    true
}

pub fn is_isomorphic(a: &PlaneGraph, b: &PlaneGraph) -> bool {
    a.num_vertices() == b.num_vertices()
        && a.num_darts() == b.num_darts()
        && canonical_code(a) == canonical_code(b)
}
