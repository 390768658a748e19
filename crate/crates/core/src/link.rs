//! Alternating link diagrams carried by 4-valent maps.
//!
//! Each vertex is a crossing and each central circuit a component. The over
//! strand at a crossing is fixed by the chess coloring of the faces, which
//! makes every strand alternate. The global mirror is chosen so that the
//! strand through dart 0 passes over.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::circuits::{central_circuits, chess_coloring};
use crate::error::{Error, Result};
use crate::graph::PlaneGraph;
use crate::structure::two_edge_cuts;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pass {
    /// Crossing (vertex) index.
    pub crossing: usize,
    pub over: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDiagram {
    pub crossings: usize,
    /// Passes of each component in traversal order.
    pub components: Vec<Vec<Pass>>,
    pub composite: bool,
}

impl LinkDiagram {
    pub fn is_alternating(&self) -> bool {
        self.components.iter().all(|c| {
            (0..c.len()).all(|k| c[k].over != c[(k + 1) % c.len()].over)
        })
    }

    /// Every crossing is passed exactly once over and once under.
    pub fn is_consistent(&self) -> bool {
        let mut seen = vec![[0usize; 2]; self.crossings];
        for p in self.components.iter().flatten() {
            seen[p.crossing][p.over as usize] += 1;
        }
        seen.iter().all(|s| *s == [1, 1])
    }

    pub fn mirror(&self) -> LinkDiagram {
        let mut out = self.clone();
        for p in out.components.iter_mut().flatten() {
            p.over = !p.over;
        }
        out
    }
}

/// Over/under per dart: true when the passage containing the dart is over.
fn over_passages(g: &PlaneGraph) -> Vec<bool> {
    let color = chess_coloring(g);
    let mut over = vec![false; g.num_darts()];
    for v in 0..g.num_vertices() {
        // corner between darts 0 and 1 lies in the face of dart 1
        let first_over = color[g.face_of(g.dart_at(v, 1))] == 0;
        for j in 0..4 {
            let d = g.dart_at(v, j);
            over[d] = (j % 2 == 0) == first_over;
        }
    }
    if !over[0] {
        over.iter_mut().for_each(|x| *x = !*x);
    }
    over
}

pub fn to_link(g: &PlaneGraph) -> Result<LinkDiagram> {
    g.require_quartic()?;
    let over = over_passages(g);
    let components = central_circuits(g)
        .iter()
        .map(|c| c.darts.iter().map(|&d| Pass { crossing: g.vertex(d), over: over[d] }).collect())
        .collect();
    // a 2-edge cut is a circle meeting the diagram twice with crossings
    // on both sides
    let composite = !two_edge_cuts(g).is_empty();
    Ok(LinkDiagram { crossings: g.num_vertices(), components, composite })
}

/// Signed Gauss code, one sequence per component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussCode(pub Vec<Vec<i64>>);

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|c| c.iter().map(|x| format!("{x:+}")).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&parts.join(" / "))
    }
}

pub fn gauss_code(d: &LinkDiagram) -> GaussCode {
    GaussCode(
        d.components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|p| {
                        let k = p.crossing as i64 + 1;
                        if p.over { k } else { -k }
                    })
                    .collect()
            })
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DtCode(pub Vec<i64>);

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(i64::to_string).collect();
        f.write_str(&s.join(" "))
    }
}

/// DT code of a knot diagram, minimized over start, direction and mirror.
/// Codes compare by absolute values first, then by signs with `+` first.
pub fn dt_code(d: &LinkDiagram) -> Result<DtCode> {
    if d.components.len() != 1 {
        return Err(Error::InvalidParameter(format!(
            "DT codes need one component, found {}",
            d.components.len()
        )));
    }
    let passes = &d.components[0];
    let len = passes.len();
    let key = |c: &[i64]| -> (Vec<i64>, Vec<bool>) {
        (c.iter().map(|x| x.abs()).collect(), c.iter().map(|&x| x < 0).collect())
    };
    let mut best: Option<Vec<i64>> = None;
    for reverse in [false, true] {
        let seq: Vec<&Pass> = if reverse { passes.iter().rev().collect() } else { passes.iter().collect() };
        for start in 0..len {
            for flip in [false, true] {
                let mut even_of = vec![0i64; d.crossings];
                let mut odd_of = vec![0usize; d.crossings];
                for k in 0..len {
                    let p = seq[(start + k) % len];
                    let label = k as i64 + 1;
                    if label % 2 == 0 {
                        let sign = if p.over != flip { -1 } else { 1 };
                        even_of[p.crossing] = sign * label;
                    } else {
                        odd_of[p.crossing] = k;
                    }
                }
                let mut code = vec![0i64; len / 2];
                for c in 0..d.crossings {
                    code[odd_of[c] / 2] = even_of[c];
                }
                if best.as_ref().map_or(true, |b| key(&code) < key(b)) {
                    best = Some(code);
                }
            }
        }
    }
    Ok(DtCode(best.unwrap_or_default()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{build_4hedrite, build_family, FamilyKind};

    #[test]
    fn hopf_and_five_crossing_knot() {
        let hopf = to_link(&build_4hedrite(2, 0).unwrap()).unwrap();
        assert_eq!(hopf.components.len(), 2);
        assert!(hopf.is_alternating() && hopf.is_consistent());
        assert!(!hopf.composite);
        assert!(dt_code(&hopf).is_err());
        let k = to_link(&build_family(FamilyKind::I5, 2).unwrap()).unwrap();
        assert!(k.is_alternating() && k.is_consistent());
        assert_eq!(gauss_code(&k).0[0].len(), 10);
    }

    #[test]
    fn trefoil_dt() {
        let g = crate::enumerate::enumerate_graphs(5, 3).pop().unwrap();
        let k = to_link(&g).unwrap();
        assert_eq!(dt_code(&k).unwrap().to_string(), "4 6 2");
        assert_eq!(dt_code(&k.mirror()).unwrap(), dt_code(&k).unwrap());
    }

    #[test]
    fn chains_are_composite() {
        assert!(to_link(&build_family(FamilyKind::J4, 2).unwrap()).unwrap().composite);
        assert!(!to_link(&build_4hedrite(4, 1).unwrap()).unwrap().composite);
        assert!(!to_link(&build_family(FamilyKind::I4, 2).unwrap()).unwrap().composite);
    }
}
