//! JSON analysis reports.

use serde::Serialize;
use serde_json::{json, Value};

use crate::canon::canonical_code;
use crate::catalog::{match_in, GoldenRow};
use crate::circuits::{cc_vector, central_circuits, intersection_vectors, is_balanced, is_pure};
use crate::enumerate::HedriteRecord;
use crate::graph::PlaneGraph;
use crate::link::{dt_code, gauss_code, to_link};
use crate::structure::{
    classify_family, curvature_graph, is_irreducible, rail_roads, shift, two_gon_configuration,
    vertex_connectivity_class,
};
use crate::symmetry::point_group;

#[derive(Serialize)]
struct RailRoadView {
    faces: Vec<usize>,
    self_intersecting: bool,
    bounding_circuits: [usize; 2],
}

/// Full report for one graph. `golden` enables the catalog lookup.
pub fn analyze(g: &PlaneGraph, golden: Option<&[GoldenRow]>) -> Value {
    let fv = g.face_vector();
    let i = g.is_i_hedrite();
    let circuits = central_circuits(g);
    let ints = intersection_vectors(g, &circuits);
    let circuit_view: Vec<Value> = circuits
        .iter()
        .zip(&ints)
        .map(|(c, int)| {
            json!({
                "length": c.length,
                "simple": c.is_simple(),
                "self_intersections": c.self_intersections,
                "intersection_vector": int.to_string(),
            })
        })
        .collect();
    let faces: serde_json::Map<String, Value> =
        fv.p.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    let mut out = json!({
        "n": g.num_vertices(),
        "face_vector": faces,
        "i": i,
        "canonical_code": canonical_code(g).to_hex(),
        "cc_vector": cc_vector(g).to_string(),
        "circuits": circuit_view,
        "pure": is_pure(g),
        "balanced": is_balanced(g),
        "group": point_group(g).label(),
    });
    let Some(i) = i else { return out };
    let rr: Vec<RailRoadView> = rail_roads(g)
        .into_iter()
        .map(|r| RailRoadView {
            faces: r.faces,
            self_intersecting: r.self_intersecting,
            bounding_circuits: r.bounding_circuits,
        })
        .collect();
    let curv = curvature_graph(g);
    out["structure"] = json!({
        "irreducible": is_irreducible(g),
        "railroads": rr,
        "connectivity": vertex_connectivity_class(g),
        "family": classify_family(g),
        "shift": shift(g).ok(),
        "two_gons": two_gon_configuration(g),
        "curvature_graph": curv,
    });
    if let Ok(link) = to_link(g) {
        out["link"] = json!({
            "components": link.components.len(),
            "composite": link.composite,
            "gauss_code": gauss_code(&link).to_string(),
            "dt_code": dt_code(&link).ok().map(|d| d.to_string()),
        });
    }
    if let Some(rows) = golden {
        let rec = HedriteRecord::from_graph(g.clone(), i, 0);
        out["catalog"] = json!(match_in(rows, &rec));
    }
    out
}
