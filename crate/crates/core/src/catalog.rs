//! Embedded golden listings and census comparison.
//!
//! A printed CC-vector containing a semicolon fixes which circuits are simple.
//! One printed without a semicolon only fixes the multiset of lengths.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::circuits::CcVector;
use crate::enumerate::HedriteRecord;
use crate::error::{Error, Result};
use crate::symmetry::PointGroup;

pub const GOLDEN_TSV: &str = include_str!("../data/golden.tsv");
pub const TRANSCRIPTION_NOTES: &str = include_str!("../data/transcription_notes.md");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub i: usize,
    pub n: usize,
    pub catalog_id: String,
    pub group: PointGroup,
    pub cc_printed: String,
    pub starred: bool,
    pub reducible: bool,
}

impl GoldenRow {
    pub fn split_given(&self) -> bool {
        self.cc_printed.contains(';')
    }

    /// Whether a computed `(group, cc)` pair fits this row.
    pub fn accepts(&self, group: PointGroup, cc: &CcVector) -> bool {
        if group != self.group {
            return false;
        }
        let printed = CcVector::parse(&self.cc_printed).expect("golden CC-vectors parse");
        if self.split_given() {
            return &printed == cc;
        }
        let mut lengths: Vec<usize> = cc.simple.iter().chain(&cc.self_intersecting).copied().collect();
        lengths.sort_unstable();
        lengths == printed.simple
    }
}

pub fn parse_golden(text: &str) -> Result<Vec<GoldenRow>> {
    let mut rows = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: &str| Error::Malformed(format!("golden line {}: {what}", k + 1));
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 7 {
            return Err(bad("expected 7 tab-separated fields"));
        }
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad("bad number"));
        let flag = |s: &str| match s {
            "0" => Ok(false),
            "1" => Ok(true),
            _ => Err(bad("bad flag")),
        };
        CcVector::parse(f[4])?;
        rows.push(GoldenRow {
            i: num(f[0])?,
            n: num(f[1])?,
            catalog_id: f[2].to_string(),
            group: f[3].parse().map_err(|e: String| bad(&e))?,
            cc_printed: f[4].to_string(),
            starred: flag(f[5])?,
            reducible: flag(f[6])?,
        });
    }
    Ok(rows)
}

pub fn golden_rows() -> Vec<GoldenRow> {
    parse_golden(GOLDEN_TSV).expect("embedded golden data parses")
}

/// Rows for one `(i, n)` cell.
pub fn golden_cell(rows: &[GoldenRow], i: usize, n: usize) -> Vec<GoldenRow> {
    rows.iter().filter(|r| r.i == i && r.n == n).cloned().collect()
}

/// The catalog label when exactly one row of the cell fits the record.
pub fn match_catalog(record: &HedriteRecord) -> Option<String> {
    match_in(&golden_rows(), record)
}

pub fn match_in(rows: &[GoldenRow], record: &HedriteRecord) -> Option<String> {
    let cc = record.cc();
    let mut fits = rows
        .iter()
        .filter(|r| r.i == record.i && r.n == record.n && r.accepts(record.point_group, &cc));
    let first = fits.next()?;
    fits.next().is_none().then(|| first.catalog_id.clone())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CellReport {
    pub i: usize,
    pub n: usize,
    pub expected: usize,
    pub found: usize,
    pub pass: bool,
    /// Catalog label assigned to each record (by local id order) when a
    /// complete matching exists.
    pub assignment: Vec<Option<String>>,
    /// Rows left over by a maximum matching, as `id group cc`.
    pub unmatched_rows: Vec<String>,
    /// Records left over, as `group cc`.
    pub unmatched_records: Vec<String>,
}

/// Matches records to rows one-to-one, if possible.
pub fn compare_cell(rows: &[GoldenRow], records: &[HedriteRecord]) -> CellReport {
    let (i, n) = rows
        .first()
        .map(|r| (r.i, r.n))
        .or_else(|| records.first().map(|r| (r.i, r.n)))
        .unwrap_or((0, 0));
    let ccs: Vec<CcVector> = records.iter().map(HedriteRecord::cc).collect();
    let fits: Vec<Vec<usize>> = records
        .iter()
        .zip(&ccs)
        .map(|(r, cc)| (0..rows.len()).filter(|&k| rows[k].accepts(r.point_group, cc)).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; rows.len()];
    let mut matched = 0;
    for rec in 0..records.len() {
        let mut seen = vec![false; rows.len()];
        if augment(rec, &fits, &mut owner, &mut seen) {
            matched += 1;
        }
    }
    let pass = rows.len() == records.len() && matched == records.len();
    let mut assignment = vec![None; records.len()];
    for (k, o) in owner.iter().enumerate() {
        if let Some(rec) = o {
            assignment[*rec] = Some(rows[k].catalog_id.clone());
        }
    }
    let unmatched_rows = (0..rows.len())
        .filter(|&k| owner[k].is_none())
        .map(|k| format!("{} {} {}", rows[k].catalog_id, rows[k].group, rows[k].cc_printed))
        .collect();
    let unmatched_records = (0..records.len())
        .filter(|&r| assignment[r].is_none())
        .map(|r| format!("{} {}", records[r].point_group, records[r].cc_vector))
        .collect();
    if !pass {
        assignment.iter_mut().for_each(|a| *a = None);
    }
    CellReport {
        i,
        n,
        expected: rows.len(),
        found: records.len(),
        pass,
        assignment,
        unmatched_rows,
        unmatched_records,
    }
}

fn augment(rec: usize, fits: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &row in &fits[rec] {
        if seen[row] {
            continue;
        }
        seen[row] = true;
        let free = match owner[row] {
            None => true,
            Some(other) => augment(other, fits, owner, seen),
        };
        if free {
            owner[row] = Some(rec);
            return true;
        }
    }
    false
}

/// Compares a census against golden rows for every `(i, n)` cell with
/// `n <= n_max` present on either side.
pub fn compare_census(rows: &[GoldenRow], census: &[HedriteRecord], n_max: usize) -> Vec<CellReport> {
    let mut cells: BTreeMap<(usize, usize), (Vec<GoldenRow>, Vec<HedriteRecord>)> = BTreeMap::new();
    for r in rows.iter().filter(|r| r.n <= n_max) {
        cells.entry((r.i, r.n)).or_default().0.push(r.clone());
    }
    for r in census.iter().filter(|r| r.n <= n_max) {
        cells.entry((r.i, r.n)).or_default().1.push(r.clone());
    }
    cells
        .into_iter()
        .map(|((i, n), (g, c))| {
            let mut rep = compare_cell(&g, &c);
            rep.i = i;
            rep.n = n;
            rep
        })
        .collect()
}
