//! Map automorphisms and Schoenflies labels.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::{code_from, Orientation, Walker};
use crate::graph::{Dart, PlaneGraph};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MapAutomorphism {
    /// Image of each dart.
    pub darts: Vec<Dart>,
    pub orientation_preserving: bool,
}

impl MapAutomorphism {
    pub fn is_identity(&self) -> bool {
        self.darts.iter().enumerate().all(|(d, &e)| d == e)
    }

    pub fn compose(&self, other: &MapAutomorphism) -> MapAutomorphism {
        MapAutomorphism {
            darts: other.darts.iter().map(|&d| self.darts[d]).collect(),
            orientation_preserving: self.orientation_preserving == other.orientation_preserving,
        }
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = self.compose(&p);
            k += 1;
        }
        k
    }

    /// Checks the defining relations against `g`.
    pub fn respects(&self, g: &PlaneGraph) -> bool {
        (0..g.num_darts()).all(|d| {
            let f = &self.darts;
            let rot = if self.orientation_preserving { g.sigma(f[d]) } else { g.sigma_inv(f[d]) };
            f[g.theta(d)] == g.theta(f[d]) && f[g.sigma(d)] == rot
        })
    }
}

/// The full automorphism group; orientation-preserving elements first.
pub fn automorphisms(g: &PlaneGraph) -> Vec<MapAutomorphism> {
    let reference = code_from(g, 0, Orientation::Preserving);
    let mut w = Walker::new(g);
    w.walk(g, 0, Orientation::Preserving, |_| true);
    let base = w.dart_labels(g, Orientation::Preserving);
    let mut out = Vec::new();
    for orient in [Orientation::Preserving, Orientation::Reversing] {
        for root in 0..g.num_darts() {
            let mut i = 0;
            let same = w.walk(g, root, orient, |x| {
                let eq = x == reference[i];
                i += 1;
                eq
            });
            if !same {
                continue;
            }
            let labels = w.dart_labels(g, orient);
            let mut inv = vec![0; g.num_darts()];
            for (d, &l) in labels.iter().enumerate() {
                inv[l] = d;
            }
            out.push(MapAutomorphism {
                darts: base.iter().map(|&l| inv[l]).collect(),
                orientation_preserving: orient == Orientation::Preserving,
            });
        }
    }
    out
}

macro_rules! groups {
    ($($v:ident = $s:literal, $o:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum PointGroup { $($v,)* }

        impl PointGroup {
            pub const ALL: &'static [PointGroup] = &[$(PointGroup::$v,)*];

            pub fn label(self) -> &'static str {
                match self { $(PointGroup::$v => $s,)* }
            }

            pub fn order(self) -> usize {
                match self { $(PointGroup::$v => $o,)* }
            }
        }

        impl FromStr for PointGroup {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($s => Ok(PointGroup::$v),)*
                    _ => Err(format!("unknown point group {s:?}")),
                }
            }
        }
    };
}

groups! {
    C1 = "C1", 1;
    Cs = "Cs", 2;
    Ci = "Ci", 2;
    C2 = "C2", 2;
    C2v = "C2v", 4;
    C2h = "C2h", 4;
    S4 = "S4", 4;
    D2 = "D2", 4;
    D2d = "D2d", 8;
    D2h = "D2h", 8;
    D3 = "D3", 6;
    D3h = "D3h", 12;
    D3d = "D3d", 12;
    D4 = "D4", 8;
    D4d = "D4d", 16;
    D4h = "D4h", 16;
    O = "O", 24;
    Oh = "Oh", 48;
}

impl fmt::Display for PointGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Groups allowed for i-hedrites with the given i.
pub fn allowed_groups(i: usize) -> &'static [PointGroup] {
    use PointGroup::*;
    match i {
        4 => &[D2, D2d, D2h, D4, D4h],
        5 => &[C1, Cs, C2, C2v, D3, D3h],
        6 => &[C1, Cs, Ci, C2, C2v, C2h, D2, D2d, D2h],
        7 => &[C1, Cs, C2, C2v],
        8 => PointGroup::ALL,
        _ => &[],
    }
}

/// An orientation-reversing involution fixing some vertex, edge or face
/// setwise. The antipodal map fixes no cell.
fn is_reflection(g: &PlaneGraph, a: &MapAutomorphism) -> bool {
    if a.orientation_preserving || a.order() != 2 {
        return false;
    }
    (0..g.num_darts()).any(|d| {
        let e = a.darts[d];
        g.vertex(e) == g.vertex(d) || e == g.theta(d) || e == d || g.face_of(g.theta(e)) == g.face_of(d)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rotations {
    Cyclic(usize),
    Dihedral(usize),
    Octahedral,
}

fn rotation_group(group: &[MapAutomorphism]) -> Rotations {
    let proper: Vec<&MapAutomorphism> = group.iter().filter(|a| a.orientation_preserving).collect();
    let h = proper.len();
    let max = proper.iter().map(|a| a.order()).max().unwrap_or(1);
    if max == h {
        Rotations::Cyclic(h)
    } else if h == 2 * max {
        Rotations::Dihedral(max)
    } else if h == 24 && max == 4 {
        Rotations::Octahedral
    } else {
        panic!("rotation group of order {h} with largest element order {max} cannot occur")
    }
}

pub fn point_group_of(g: &PlaneGraph, group: &[MapAutomorphism]) -> PointGroup {
    use PointGroup::*;
    let rot = rotation_group(group);
    let improper = group.iter().any(|a| !a.orientation_preserving);
    let reflections = group.iter().filter(|a| is_reflection(g, a)).count();
    let label = match (rot, improper) {
        (Rotations::Cyclic(1), false) => Some(C1),
        (Rotations::Cyclic(2), false) => Some(C2),
        (Rotations::Dihedral(2), false) => Some(D2),
        (Rotations::Dihedral(3), false) => Some(D3),
        (Rotations::Dihedral(4), false) => Some(D4),
        (Rotations::Octahedral, false) => Some(O),
        (Rotations::Cyclic(1), true) => Some(if reflections > 0 { Cs } else { Ci }),
        (Rotations::Cyclic(2), true) => match reflections {
            0 => Some(S4),
            1 => Some(C2h),
            2 => Some(C2v),
            _ => None,
        },
        (Rotations::Dihedral(k), true) => match (k, reflections == k + 1, reflections == k) {
            (2, true, _) => Some(D2h),
            (2, _, true) => Some(D2d),
            (3, true, _) => Some(D3h),
            (3, _, true) => Some(D3d),
            (4, true, _) => Some(D4h),
            (4, _, true) => Some(D4d),
            _ => None,
        },
        (Rotations::Octahedral, true) => Some(Oh),
        _ => None,
    };
    let label = label.unwrap_or_else(|| {
        panic!("unsupported symmetry: rotations {rot:?}, {reflections} reflections")
    });
    assert_eq!(label.order(), group.len(), "label order disagrees with group order");
    label
}

pub fn point_group(g: &PlaneGraph) -> PointGroup {
    point_group_of(g, &automorphisms(g))
}
