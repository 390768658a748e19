//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Two criteria fail on the data and are reported as FAIL. The process still
//! exits successfully when, and only when, each failure is exactly the known
//! deviation described next to it; anything else is a hard failure.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::Instant;

use hedrite::canon::{canonical_code, is_isomorphic};
use hedrite::catalog::{compare_census, golden_rows, match_in, CellReport, GoldenRow};
use hedrite::circuits::{cc_vector, central_circuits, intersection_vectors, IntersectionVector};
use hedrite::enumerate::{enumerate, full_census, HedriteRecord};
use hedrite::link::{dt_code, to_link, DtCode};
use hedrite::structure::{
    build_4hedrite, classify_family, rail_roads, vertex_connectivity_class, Connectivity,
    FamilyKind,
};
use hedrite::symmetry::{point_group, PointGroup};
use hedrite::transform::{goldberg_coxeter, inflate_all, inflate_circuit, reduce, reduce_fully, GcParams};
use hedrite::PlaneGraph;

struct Outcome {
    pass: bool,
    detail: String,
    /// Set when the failure was checked to be exactly the documented one.
    known: Option<String>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Outcome {
        Outcome { pass, detail: detail.into(), known: None }
    }
}

struct Census {
    records: Vec<HedriteRecord>,
    labels: HashMap<(usize, String), usize>,
    cells: Vec<CellReport>,
    rows: Vec<GoldenRow>,
    seconds: f64,
}

impl Census {
    fn build() -> Census {
        let t = Instant::now();
        let records = full_census(15);
        let seconds = t.elapsed().as_secs_f64();
        let rows = golden_rows();
        let cells = compare_census(&rows, &records, 15);
        let mut labels = HashMap::new();
        for cell in &cells {
            let idx: Vec<usize> = (0..records.len()).filter(|&k| records[k].i == cell.i && records[k].n == cell.n).collect();
            for (pos, &k) in idx.iter().enumerate() {
                let label = cell.assignment.get(pos).cloned().flatten().or_else(|| match_in(&rows, &records[k]));
                if let Some(l) = label {
                    labels.insert((cell.i, l), k);
                }
            }
        }
        Census { records, labels, cells, rows, seconds }
    }

    fn get(&self, i: usize, label: &str) -> &HedriteRecord {
        let k = self.labels.get(&(i, label.to_string())).unwrap_or_else(|| panic!("no census record for {i}-hedrite {label}"));
        &self.records[*k]
    }

    fn label_of(&self, r: &HedriteRecord) -> String {
        self.labels
            .iter()
            .find(|(_, &k)| self.records[k].canonical_code == r.canonical_code && self.records[k].i == r.i)
            .map(|((i, l), _)| format!("{i}:{l}"))
            .unwrap_or_else(|| format!("{}:n{}#{}", r.i, r.n, r.local_id))
    }
}

/// Automorphism counts (orientation preserving, reversing) by direct
/// extension from dart 0, independent of the canonical code machinery.
fn brute_force_automorphisms(g: &PlaneGraph) -> (usize, usize) {
    let nd = g.num_darts();
    let mut counts = (0, 0);
    for preserve in [true, false] {
        for target in 0..nd {
            let mut f = vec![usize::MAX; nd];
            let mut stack = vec![(0usize, target)];
            let mut ok = true;
            while let Some((d, e)) = stack.pop() {
                if f[d] != usize::MAX {
                    if f[d] != e {
                        ok = false;
                        break;
                    }
                    continue;
                }
                f[d] = e;
                let se = if preserve { g.sigma(e) } else { g.sigma_inv(e) };
                stack.push((g.sigma(d), se));
                stack.push((g.theta(d), g.theta(e)));
            }
            if ok && f.iter().collect::<BTreeSet<_>>().len() == nd {
                if preserve {
                    counts.0 += 1;
                } else {
                    counts.1 += 1;
                }
            }
        }
    }
    counts
}

fn is_chiral(g: PointGroup) -> bool {
    matches!(g, PointGroup::C1 | PointGroup::C2 | PointGroup::D2 | PointGroup::D3 | PointGroup::D4 | PointGroup::O)
}

/// DT code of the standard trefoil word `1 -2 3 -1 2 -3` (positive = over),
/// minimized over start, direction and mirror by brute force.
fn trefoil_oracle() -> DtCode {
    let word: [i64; 6] = [1, -2, 3, -1, 2, -3];
    let mut best: Option<((Vec<i64>, Vec<bool>), Vec<i64>)> = None;
    for rev in [false, true] {
        for start in 0..6 {
            for mirror in [1i64, -1] {
                let seq: Vec<i64> = (0..6)
                    .map(|k| if rev { word[(start + 6 - k) % 6] } else { word[(start + k) % 6] } * mirror)
                    .collect();
                let mut pairs = BTreeMap::new();
                for (pos, &x) in seq.iter().enumerate() {
                    pairs.entry(x.abs()).or_insert_with(Vec::new).push((pos as i64 + 1, x > 0));
                }
                let mut code = vec![0i64; 3];
                for v in pairs.values() {
                    let (odd, even) = if v[0].0 % 2 == 1 { (v[0], v[1]) } else { (v[1], v[0]) };
                    code[(odd.0 as usize - 1) / 2] = if even.1 { -even.0 } else { even.0 };
                }
                let key = (code.iter().map(|x| x.abs()).collect(), code.iter().map(|&x| x < 0).collect());
                if best.as_ref().map_or(true, |(k, _)| key < *k) {
                    best = Some((key, code));
                }
            }
        }
    }
    DtCode(best.unwrap().1)
}

fn lengths(cc: &str) -> Vec<usize> {
    let cc = hedrite::circuits::CcVector::parse(cc).unwrap();
    let mut v: Vec<usize> = cc.simple.iter().chain(&cc.self_intersecting).copied().collect();
    v.sort_unstable();
    v
}

fn criterion_1(c: &Census) -> Outcome {
    let expected: [(usize, &[(usize, usize)]); 5] = [
        (4, &[(2, 1), (4, 2), (6, 2), (8, 4), (10, 3), (12, 5), (14, 3)]),
        (5, &[(3, 1), (5, 1), (6, 2), (7, 3), (8, 1), (9, 2), (10, 3), (11, 5), (12, 3), (13, 4), (14, 7), (15, 10)]),
        (6, &[(4, 1), (5, 1), (6, 2), (7, 1), (8, 5), (9, 5), (10, 9), (11, 7), (12, 14), (13, 14), (14, 23), (15, 17)]),
        (7, &[(7, 1), (8, 1), (9, 1), (10, 3), (11, 4), (12, 5), (13, 7), (14, 9), (15, 12)]),
        (8, &[(6, 1), (7, 0), (8, 1), (9, 1), (10, 2), (11, 1), (12, 5), (13, 2), (14, 8), (15, 5)]),
    ];
    let mut bad = Vec::new();
    for (i, cells) in expected {
        let mut want: BTreeMap<usize, usize> = cells.iter().copied().collect();
        for n in 1..=15 {
            want.entry(n).or_insert(0);
        }
        for (n, w) in want {
            let got = c.records.iter().filter(|r| r.i == i && r.n == n).count();
            if got != w {
                bad.push(format!("{i}-hedrites n={n}: {got} != {w}"));
            }
        }
    }
    let fast = c.seconds < 300.0;
    Outcome::new(
        bad.is_empty() && fast,
        if bad.is_empty() {
            format!("{} graphs, all (i, n <= 15) counts exact, census built in {:.1}s", c.records.len(), c.seconds)
        } else {
            bad.join("; ")
        },
    )
}

fn criterion_2(c: &Census) -> Outcome {
    let failing: Vec<&CellReport> = c.cells.iter().filter(|x| !x.pass).collect();
    let describe = |x: &CellReport| {
        format!(
            "({},{}) golden-only [{}] census-only [{}]",
            x.i,
            x.n,
            x.unmatched_rows.join("; "),
            x.unmatched_records.join("; ")
        )
    };
    let mut out = Outcome::new(
        failing.is_empty(),
        if failing.is_empty() {
            format!("{} cells match exactly", c.cells.len())
        } else {
            format!(
                "{} of {} cells match; mismatch {}",
                c.cells.len() - failing.len(),
                c.cells.len(),
                failing.iter().map(|x| describe(x)).collect::<Vec<_>>().join(" | ")
            )
        },
    );
    // The one known mismatch: the printed C2v for 6-hedrite 15-10 against a
    // computed group of order 2, confirmed by the independent count.
    if let [x] = failing.as_slice() {
        if (x.i, x.n) == (6, 15)
            && x.unmatched_rows == ["15-10 C2v 8;22"]
            && x.unmatched_records == ["C2 8;22"]
        {
            let r = c
                .records
                .iter()
                .filter(|r| r.i == 6 && r.n == 15 && r.cc_vector == "8;22" && r.point_group == PointGroup::C2)
                .collect::<Vec<_>>();
            if r.len() == 1 && brute_force_automorphisms(r[0].graph()) == (2, 0) && r[0].three_connected {
                out.known = Some("6-hedrite 15-10 printed C2v; exactly 2 map automorphisms, both rotations (C2)".into());
            }
        }
    }
    out
}

fn criterion_3(c: &Census) -> Outcome {
    let cases = [((8, "6-1"), (8, "12-4")), ((7, "7-1"), (7, "14-9")), ((6, "4-1"), (6, "8-3")), ((5, "3-1"), (5, "6-2"))];
    let mut bad = Vec::new();
    for ((i, from), (j, to)) in cases {
        let m = c.get(i, from).graph().medial();
        let target = c.get(j, to).graph();
        if !is_isomorphic(&m, target) || canonical_code(&m) != canonical_code(target) {
            bad.push(format!("medial({i}:{from}) != {j}:{to}"));
        }
    }
    Outcome::new(bad.is_empty(), if bad.is_empty() { "4 medial identities hold".to_string() } else { bad.join("; ") })
}

fn table_entry(kind: FamilyKind, m: usize) -> (PointGroup, Vec<usize>) {
    match kind {
        FamilyKind::I6 if m % 2 == 0 => (PointGroup::D2d, vec![4 * m]),
        FamilyKind::I6 => (PointGroup::D2h, vec![2 * m, 2 * m]),
        FamilyKind::I5 => (PointGroup::C2v, vec![4 * m + 2]),
        FamilyKind::I4 if m % 2 == 0 => (PointGroup::D2d, vec![2 * m + 2, 2 * m + 2]),
        FamilyKind::I4 => (PointGroup::D2h, vec![2 * m + 2, 2 * m + 2]),
        FamilyKind::J4 => {
            let mut v = vec![2; m];
            v.push(2 * m);
            v.sort_unstable();
            (PointGroup::D2h, v)
        }
        _ => panic!("no table entry for {kind}"),
    }
}

fn criterion_4(c: &Census) -> Outcome {
    let mut failures: Vec<(String, String)> = Vec::new();
    let mut fail = |item: &str, what: String| failures.push((item.to_string(), what));

    for r in &c.records {
        let g = r.graph();
        let conn = vertex_connectivity_class(g);
        if conn == Connectivity::One {
            fail("2-connected", format!("{} is not 2-connected", c.label_of(r)));
        }
        if conn != Connectivity::AtLeastThree {
            let fam = classify_family(g);
            if !matches!(fam.kind, FamilyKind::I6 | FamilyKind::I5 | FamilyKind::I4 | FamilyKind::J4) {
                fail("families", format!("{} unclassified", c.label_of(r)));
            } else if table_entry(fam.kind, fam.m) != (r.point_group, lengths(&r.cc_vector)) {
                fail("families", format!("{} as {fam} has {} {}", c.label_of(r), r.point_group, r.cc_vector));
            }
        }
        let circuits = central_circuits(g);
        if r.irreducible && circuits.len() > r.i - 2 {
            fail("irreducible circuits", format!("{} has {} circuits", c.label_of(r), circuits.len()));
        }
        if r.pure && r.n % 2 == 1 {
            fail("pure even", format!("{} pure with odd n", c.label_of(r)));
        }
        if circuits.iter().any(|x| x.length % 2 == 1) || circuits.iter().map(|x| x.length).sum::<usize>() != 2 * r.n {
            fail("lengths", format!("{} circuit lengths {}", c.label_of(r), r.cc_vector));
        }
        let self_int = circuits.iter().any(|x| !x.is_simple());
        if (r.i == 7 && !self_int) || (r.i == 4 && self_int) {
            fail("self-intersection", format!("{} {}", c.label_of(r), r.cc_vector));
        }
    }

    let unbalanced: Vec<&HedriteRecord> = c.records.iter().filter(|r| !r.balanced).collect();
    if unbalanced.iter().any(|r| r.i != 6) {
        fail("balanced", "unbalanced graph with i != 6".into());
    }
    let min_n = unbalanced.iter().map(|r| r.n).min();
    let minimal: Vec<String> = unbalanced.iter().filter(|r| Some(r.n) == min_n).map(|r| c.label_of(r)).collect();
    if minimal != ["6:12-12"] {
        fail("balanced", format!("minimal unbalanced graphs {minimal:?}"));
    }

    let found: BTreeSet<String> = c.records.iter().filter(|r| r.pure && r.irreducible).map(|r| c.label_of(r)).collect();
    let mut expected: BTreeSet<String> = c
        .records
        .iter()
        .filter(|r| r.i == 4 && central_circuits(r.graph()).len() == 2)
        .map(|r| c.label_of(r))
        .collect();
    expected.extend(["5:6-2", "6:8-5", "6:14-20", "8:6-1", "8:12-4", "8:12-5", "8:14-7"].map(String::from));
    if found != expected {
        fail("pure irreducible", format!("found {found:?}"));
    }
    let fixtures = [
        (20, PointGroup::D2d, "8^5;"),
        (22, PointGroup::D2h, "8^3,10^2;"),
        (30, PointGroup::O, "10^6;"),
        (32, PointGroup::D4h, "10^4,12^2;"),
    ];
    let mut thirty = None;
    for (n, group, cc) in fixtures {
        let hits: Vec<HedriteRecord> = enumerate(8, n).into_iter().filter(|r| r.pure && r.irreducible).collect();
        if hits.len() != 1 || hits[0].point_group != group || hits[0].cc_vector != cc {
            let got: Vec<String> = hits.iter().map(|r| format!("{} {}", r.point_group, r.cc_vector)).collect();
            fail("pure irreducible", format!("8-hedrites n={n}: {got:?}"));
        } else if n == 30 {
            thirty = hits.into_iter().next();
        }
    }
    let gc = goldberg_coxeter(c.get(8, "6-1").graph(), GcParams::new(2, 1).unwrap()).unwrap();
    if !thirty.is_some_and(|r| is_isomorphic(r.graph(), &gc)) {
        fail("pure irreducible", "30-vertex fixture differs from GC(2,1) of 8:6-1".into());
    }

    let with_si_road: BTreeSet<String> = c
        .records
        .iter()
        .filter(|r| rail_roads(r.graph()).iter().any(|x| x.self_intersecting))
        .map(|r| c.label_of(r))
        .collect();
    let want: BTreeSet<String> = ["5:12-3", "5:14-6", "6:13-11"].map(String::from).into();
    let si_ok = with_si_road == want;
    if !si_ok {
        fail("self-intersecting rail-roads", format!("found {with_si_road:?}"));
    }

    let items: BTreeSet<&str> = failures.iter().map(|(k, _)| k.as_str()).collect();
    let mut out = Outcome::new(
        failures.is_empty(),
        if failures.is_empty() {
            "all structural properties hold on the census and fixtures".to_string()
        } else {
            failures.iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join("; ")
        },
    );
    // Known, 1: 4-hedrite 4-1 has a 2-vertex cut. It is the m = 1 tube of
    // the I4 construction, which the family list starts at m = 2.
    // Known, 2: 6-hedrite 12-12 also owns a self-intersecting rail-road. Its
    // reduction is 6-hedrite 5-1 and inflating back restores it.
    let mut notes = Vec::new();
    let fam: Vec<&String> = failures.iter().filter(|(k, _)| k == "families").map(|(_, v)| v).collect();
    if fam == ["4:4-1 unclassified"] {
        let g = c.get(4, "4-1").graph();
        if vertex_connectivity_class(g) == Connectivity::Two && is_isomorphic(g, &build_4hedrite(4, 1).unwrap()) {
            notes.push("4-hedrite 4-1 is 2-connected only, the excluded m = 1 member of I4 (group D4h)");
        }
    }
    let extra: Vec<&String> = with_si_road.difference(&want).collect();
    if !si_ok && want.is_subset(&with_si_road) && extra == ["6:12-12"] {
        let g = c.get(6, "12-12").graph();
        let road = rail_roads(g).into_iter().find(|x| x.self_intersecting).unwrap();
        let small = reduce(g, &road).unwrap();
        let back_ok = central_circuits(&small).iter().any(|cc| {
            inflate_circuit(&small, cc, 2).map(|h| is_isomorphic(&h, g)).unwrap_or(false)
        });
        if back_ok && is_isomorphic(c.get(6, "5-1").graph(), &small) {
            notes.push("6-hedrite 12-12 is the 2-inflation of 6-hedrite 5-1 along a self-intersecting circuit");
        }
    }
    if items.len() == notes.len() && items.is_subset(&BTreeSet::from(["families", "self-intersecting rail-roads"])) {
        out.known = Some(notes.join("; "));
    }
    out
}

fn criterion_5(c: &Census) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for r in c.records.iter().filter(|r| r.n <= 8) {
        let g = r.graph();
        for (k, l) in [(1, 1), (2, 0), (2, 1)] {
            let h = goldberg_coxeter(g, GcParams::new(k, l).unwrap()).unwrap();
            checked += 1;
            if h.num_vertices() != r.n * (k * k + l * l) || h.is_i_hedrite() != Some(r.i) {
                bad.push(format!("GC({k},{l}) of {}", c.label_of(r)));
            }
            if (k, l) == (1, 1) && !is_isomorphic(&h, &g.medial()) {
                bad.push(format!("GC(1,1) != medial for {}", c.label_of(r)));
            }
        }
    }
    let two_one = build_4hedrite(2, 0).unwrap();
    let mut groups = Vec::new();
    for (k, l) in [(2, 1), (3, 1), (2, 2)] {
        let grp = point_group(&goldberg_coxeter(&two_one, GcParams::new(k, l).unwrap()).unwrap());
        groups.push(format!("({k},{l}):{grp}"));
        if !matches!(grp, PointGroup::D4 | PointGroup::D4h) {
            bad.push(format!("GC({k},{l}) of 2-1 has {grp}"));
        }
    }
    Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{checked} constructions; 4-hedrite 2-1 gives {}", groups.join(" "))
        } else {
            bad.join("; ")
        },
    )
}

fn inflated_vectors(g: &PlaneGraph, t: usize) -> Vec<IntersectionVector> {
    let mut out = Vec::new();
    for v in intersection_vectors(g, &central_circuits(g)) {
        let mut others: Vec<usize> = v.others.iter().flat_map(|&x| std::iter::repeat(x).take(t)).collect();
        if v.c0 > 0 {
            others.extend(std::iter::repeat(2 * v.c0).take(t - 1));
        }
        others.sort_unstable_by(|a, b| b.cmp(a));
        for _ in 0..t {
            out.push(IntersectionVector { c0: v.c0, others: others.clone() });
        }
    }
    out.sort();
    out
}

fn criterion_6(c: &Census) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for r in c.records.iter().filter(|r| r.n <= 8) {
        let g = r.graph();
        let cc = cc_vector(g);
        for t in [2, 3] {
            let h = inflate_all(g, t).unwrap();
            let hc = cc_vector(&h);
            let scale = |v: &[usize]| {
                let mut s: Vec<usize> = v.iter().flat_map(|&x| std::iter::repeat(t * x).take(t)).collect();
                s.sort_unstable();
                s
            };
            if hc.simple != scale(&cc.simple) || hc.self_intersecting != scale(&cc.self_intersecting) {
                bad.push(format!("CC of {}^{t}: {hc}", c.label_of(r)));
            }
            let mut got = intersection_vectors(&h, &central_circuits(&h));
            got.sort();
            if got != inflated_vectors(g, t) {
                bad.push(format!("Int of {}^{t}", c.label_of(r)));
            }
            if !is_isomorphic(&reduce_fully(&h).unwrap(), &reduce_fully(g).unwrap()) {
                bad.push(format!("full reduction of {}^{t}", c.label_of(r)));
            }
            for circuit in central_circuits(g) {
                checked += 1;
                let big = inflate_circuit(g, &circuit, t).unwrap();
                let smaller = inflate_circuit(g, &circuit, t - 1).unwrap();
                let undone = rail_roads(&big)
                    .iter()
                    .any(|road| reduce(&big, road).map(|x| is_isomorphic(&x, &smaller)).unwrap_or(false));
                if !undone {
                    bad.push(format!("reduce after inflating a circuit of {} {t} times", c.label_of(r)));
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!("scaling, Int formula and {checked} reduce-after-inflate checks hold for n <= 8")
        } else {
            bad.join("; ")
        },
    )
}

fn criterion_7(c: &Census) -> Outcome {
    use PointGroup::*;
    let claims: [(usize, &[(PointGroup, usize)]); 3] = [
        (5, &[(D3h, 3), (C2v, 5), (Cs, 7), (C2, 8), (C1, 10), (D3, 15)]),
        (7, &[(C2v, 7), (Cs, 8), (C2, 11), (C1, 11)]),
        (8, &[(Oh, 6), (D4d, 8), (D3h, 9), (D2, 10), (D4h, 10), (C2v, 11), (D3d, 12), (C2, 12), (Cs, 14), (D2d, 14)]),
    ];
    let first = |i: usize, grp: PointGroup| c.records.iter().filter(|r| r.i == i && r.point_group == grp).map(|r| r.n).min();
    let mut bad = Vec::new();
    for (i, list) in claims {
        for &(grp, n) in list {
            if first(i, grp) != Some(n) {
                bad.push(format!("{i}-hedrite {grp}: first at {:?}, expected {n}", first(i, grp)));
            }
        }
    }
    if first(8, C1).is_some() {
        bad.push("C1 8-hedrite inside n <= 15".into());
    }
    for i in 4..=8 {
        for &grp in PointGroup::ALL {
            let golden = c.rows.iter().filter(|r| r.i == i && r.group == grp).map(|r| r.n).min();
            if first(i, grp) != golden {
                bad.push(format!("{i}-hedrite {grp}: first {:?} vs listing {golden:?}", first(i, grp)));
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        if bad.is_empty() { "first occurrences agree with the stated minima and the listings".into() } else { bad.join("; ") },
    )
}

fn criterion_8(c: &Census) -> Outcome {
    let mut bad = Vec::new();
    for r in &c.records {
        let link = to_link(r.graph()).unwrap();
        if link.components.len() != central_circuits(r.graph()).len() {
            bad.push(format!("components of {}", c.label_of(r)));
        }
        if !link.is_alternating() || !link.is_consistent() {
            bad.push(format!("alternation fails for {}", c.label_of(r)));
        }
    }
    let dt = dt_code(&to_link(c.get(5, "3-1").graph()).unwrap()).unwrap();
    let oracle = trefoil_oracle();
    if dt != oracle {
        bad.push(format!("DT {dt} vs oracle {oracle}"));
    }
    Outcome::new(
        bad.is_empty(),
        if bad.is_empty() { format!("{} diagrams alternate; trefoil DT {dt} matches oracle", c.records.len()) } else { bad.join("; ") },
    )
}

/// Not a criterion: the independent automorphism count on every record.
fn symmetry_oracle(c: &Census) -> Vec<String> {
    let mut bad = Vec::new();
    for r in &c.records {
        let (p, q) = brute_force_automorphisms(r.graph());
        let order = r.point_group.order();
        let proper = if is_chiral(r.point_group) { order } else { order / 2 };
        if p + q != order || p != proper {
            bad.push(format!("{} {}: oracle ({p}, {q})", c.label_of(r), r.point_group));
        }
    }
    bad
}

fn main() -> ExitCode {
    let census = Census::build();
    let oracle = symmetry_oracle(&census);
    println!(
        "oracle: automorphism counts {} on {} graphs",
        if oracle.is_empty() { "agree".to_string() } else { format!("DISAGREE {oracle:?}") },
        census.records.len()
    );
    let note = census
        .records
        .iter()
        .filter(|r| r.i == 6 && r.n == 8 && r.pure && r.irreducible)
        .map(|r| format!("{} {}", r.point_group, r.cc_vector))
        .collect::<Vec<_>>();
    println!("note: the pure irreducible 6-hedrite with 8 vertices is 8-5 ({}); the text names it 8-6", note.join(", "));
    let flagged: Vec<String> = census
        .rows
        .iter()
        .filter(|row| {
            let Some(&k) = census.labels.get(&(row.i, row.catalog_id.clone())) else { return false };
            row.reducible != !census.records[k].irreducible
        })
        .map(|row| format!("{}:{}", row.i, row.catalog_id))
        .collect();
    println!("note: reducibility marks differing from computation: {flagged:?}");

    let checks: [(usize, fn(&Census) -> Outcome); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let mut unexpected = !oracle.is_empty();
    for (k, check) in checks {
        let t = Instant::now();
        let o = check(&census);
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {k}: {tag} ({:.1}s) {}", t.elapsed().as_secs_f64(), o.detail);
        match (&o.known, o.pass) {
            (_, true) => {}
            (Some(why), false) => println!("criterion {k}: known deviation, {why}"),
            (None, false) => unexpected = true,
        }
    }
    if unexpected {
        println!("acceptance: unexpected failures");
        ExitCode::FAILURE
    } else {
        println!("acceptance: every failure is a documented deviation");
        ExitCode::SUCCESS
    }
}
