//! Batch cross-check of enumerations against closed forms over a range of `n`.
//!
//! Each record compares enumerated and closed-form sizes for the sets of the
//! chosen family and runs the structural checks (component disjointness, the
//! sandwich inequality, containment in the outer polytope). Failing records do
//! not stop the run, so a bad residue class shows up as a full pattern.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_form::{residue_decompose, sandwich_bounds_cwdd, size, size_cwdd};
use crate::error::{Error, Result};
use crate::lattice::{
    enumerate, enumerate_c_minus, enumerate_c_plus, enumerate_cwdd_a, enumerate_cwdd_b,
    enumerate_cwdd_c, enumerate_ra_a, enumerate_ra_b, enumerate_ra_c, enumerate_ra_d,
    LatticePoint2, LatticePoint4, NamedSet,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cwdd,
    Ra,
    Bounds,
    All,
}

impl Family {
    pub fn sets(self) -> &'static [NamedSet] {
        use NamedSet::*;
        match self {
            Family::Cwdd => &[CwddA, CwddB, CwddC, Cwdd],
            Family::Ra => &[RaA, RaB, RaC, RaD, Ra],
            Family::Bounds => &[CMinus, CPlus, Beta],
            Family::All => &NamedSet::ALL,
        }
    }

    fn has_cwdd(self) -> bool {
        matches!(self, Family::Cwdd | Family::All)
    }

    fn has_ra(self) -> bool {
        matches!(self, Family::Ra | Family::All)
    }

    fn has_bounds(self) -> bool {
        matches!(self, Family::Bounds | Family::All)
    }

    fn from_sets(sets: &[NamedSet]) -> Option<Family> {
        [Family::Cwdd, Family::Ra, Family::Bounds, Family::All]
            .into_iter()
            .find(|f| f.sets() == sets)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Cwdd => "cwdd",
            Family::Ra => "ra",
            Family::Bounds => "bounds",
            Family::All => "all",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "cwdd" => Ok(Family::Cwdd),
            "ra" => Ok(Family::Ra),
            "bounds" => Ok(Family::Bounds),
            "all" => Ok(Family::All),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

/// Enumerated and closed-form sizes of one set. Both are `None` where the set
/// is undefined at this `n`; a closed form that fails to evaluate leaves only
/// `closed_form` empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCount {
    pub set: NamedSet,
    pub enumerated: Option<u64>,
    pub closed_form: Option<u64>,
}

impl SetCount {
    pub fn matches(&self) -> bool {
        self.enumerated == self.closed_form
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: i64,
    pub k: i64,
    pub i: u8,
    pub counts: Vec<SetCount>,
    pub disjointness_ok: bool,
    pub sandwich_ok: bool,
    pub containment_ok: bool,
    pub pass: bool,
}

impl CensusRecord {
    pub fn count(&self, set: NamedSet) -> Option<&SetCount> {
        self.counts.iter().find(|c| c.set == set)
    }

    fn compute_pass(&self) -> bool {
        self.counts.iter().all(SetCount::matches)
            && self.disjointness_ok
            && self.sandwich_ok
            && self.containment_ok
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub range: [i64; 2],
    pub family: Family,
    pub records: Vec<CensusRecord>,
    pub summary: Summary,
    pub first_failure: Option<i64>,
}

impl CensusReport {
    fn assemble(range: [i64; 2], family: Family, records: Vec<CensusRecord>) -> Self {
        let failed = records.iter().filter(|r| !r.pass).count();
        CensusReport {
            range,
            family,
            summary: Summary {
                passed: records.len() - failed,
                failed,
            },
            first_failure: records.iter().find(|r| !r.pass).map(|r| r.n),
            records,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }

    fn csv_header(&self) -> Vec<String> {
        let mut header: Vec<String> = vec!["n".into(), "k".into(), "i".into()];
        for set in self.family.sets() {
            header.push(format!("{set}_enum"));
            header.push(format!("{set}_closed"));
        }
        header
            .extend(["disjointness_ok", "sandwich_ok", "containment_ok", "pass"].map(String::from));
        header
    }

    /// One row per `n`: `n, k, i`, then enumerated/closed pairs per set in
    /// family order, then the three checks and the overall verdict. Undefined
    /// values are empty fields.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.csv_header()).expect("in-memory write");
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.records {
            let mut row = vec![r.n.to_string(), r.k.to_string(), r.i.to_string()];
            for c in &r.counts {
                row.push(opt(c.enumerated));
                row.push(opt(c.closed_form));
            }
            for b in [r.disjointness_ok, r.sandwich_ok, r.containment_ok, r.pass] {
                row.push(b.to_string());
            }
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        let header = rd
            .headers()
            .map_err(|e| parse_err(1, e.to_string()))?
            .clone();
        let fields: Vec<&str> = header.iter().collect();
        if fields.len() < 7
            || fields[..3] != ["n", "k", "i"]
            || !(fields.len() - 7).is_multiple_of(2)
        {
            return Err(parse_err(1, "unrecognized census header".into()));
        }
        let sets = fields[3..fields.len() - 4]
            .chunks(2)
            .map(|pair| {
                pair[0]
                    .strip_suffix("_enum")
                    .ok_or_else(|| parse_err(1, format!("unexpected column {}", pair[0])))?
                    .parse::<NamedSet>()
            })
            .collect::<Result<Vec<_>>>()?;
        let family = Family::from_sets(&sets)
            .ok_or_else(|| parse_err(1, "column set matches no census family".into()))?;

        let mut records = Vec::new();
        for (idx, row) in rd.records().enumerate() {
            let line = idx + 2;
            let row = row.map_err(|e| parse_err(line, e.to_string()))?;
            let int = |j: usize| -> Result<i64> {
                row[j]
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad integer {:?}", &row[j])))
            };
            let opt = |j: usize| -> Result<Option<u64>> {
                if row[j].is_empty() {
                    return Ok(None);
                }
                row[j]
                    .parse()
                    .map(Some)
                    .map_err(|_| parse_err(line, format!("bad count {:?}", &row[j])))
            };
            let flag = |j: usize| -> Result<bool> {
                row[j]
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad flag {:?}", &row[j])))
            };
            let counts = sets
                .iter()
                .enumerate()
                .map(|(s, &set)| {
                    Ok(SetCount {
                        set,
                        enumerated: opt(3 + 2 * s)?,
                        closed_form: opt(4 + 2 * s)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let tail = 3 + 2 * sets.len();
            records.push(CensusRecord {
                n: int(0)?,
                k: int(1)?,
                i: int(2)? as u8,
                counts,
                disjointness_ok: flag(tail)?,
                sandwich_ok: flag(tail + 1)?,
                containment_ok: flag(tail + 2)?,
                pass: flag(tail + 3)?,
            });
        }
        let range = match (records.first(), records.last()) {
            (Some(a), Some(b)) => [a.n, b.n],
            _ => return Err(parse_err(1, "census has no records".into())),
        };
        Ok(Self::assemble(range, family, records))
    }
}

/// Overlap between two components of the same set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Overlap<P> {
    pub left: NamedSet,
    pub right: NamedSet,
    pub points: Vec<P>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisjointnessReport {
    pub n: i64,
    pub cwdd_overlaps: Vec<Overlap<LatticePoint2>>,
    pub ra_overlaps: Vec<Overlap<LatticePoint4>>,
}

impl DisjointnessReport {
    /// CWdd components meet only in `A ∩ B = {(2,2)}` at `n = 5`; Ra
    /// components never meet.
    pub fn passes(&self) -> bool {
        let cwdd_ok = self.cwdd_overlaps.iter().all(|o| {
            if self.n == 5 && (o.left, o.right) == (NamedSet::CwddA, NamedSet::CwddB) {
                o.points == [LatticePoint2 { depth: 2, dim: 2 }]
            } else {
                o.points.is_empty()
            }
        });
        cwdd_ok && self.ra_overlaps.iter().all(|o| o.points.is_empty())
    }
}

fn pairwise<P: Ord + Copy>(parts: &[(NamedSet, &BTreeSet<P>)]) -> Vec<Overlap<P>> {
    let mut out = Vec::new();
    for (x, &(left, a)) in parts.iter().enumerate() {
        for &(right, b) in &parts[x + 1..] {
            out.push(Overlap {
                left,
                right,
                points: a.intersection(b).copied().collect(),
            });
        }
    }
    out
}

struct Components {
    cwdd: [BTreeSet<LatticePoint2>; 3],
    ra: [BTreeSet<LatticePoint4>; 4],
}

impl Components {
    fn new(n: i64, cwdd: bool, ra: bool) -> Self {
        let cw = |f: fn(i64) -> BTreeSet<LatticePoint2>| if cwdd { f(n) } else { BTreeSet::new() };
        let r = |f: fn(i64) -> BTreeSet<LatticePoint4>| if ra { f(n) } else { BTreeSet::new() };
        Components {
            cwdd: [
                cw(enumerate_cwdd_a),
                cw(enumerate_cwdd_b),
                cw(enumerate_cwdd_c),
            ],
            ra: [
                r(enumerate_ra_a),
                r(enumerate_ra_b),
                r(enumerate_ra_c),
                r(enumerate_ra_d),
            ],
        }
    }

    fn cwdd_union(&self) -> BTreeSet<LatticePoint2> {
        self.cwdd.iter().flatten().copied().collect()
    }

    fn ra_union(&self) -> BTreeSet<LatticePoint4> {
        self.ra.iter().flatten().copied().collect()
    }

    fn disjointness(&self, n: i64) -> DisjointnessReport {
        use NamedSet::*;
        let c = &self.cwdd;
        let r = &self.ra;
        DisjointnessReport {
            n,
            cwdd_overlaps: pairwise(&[(CwddA, &c[0]), (CwddB, &c[1]), (CwddC, &c[2])]),
            ra_overlaps: pairwise(&[(RaA, &r[0]), (RaB, &r[1]), (RaC, &r[2]), (RaD, &r[3])]),
        }
    }
}

/// All pairwise intersections among the CWdd and Ra components.
pub fn check_disjointness(n: i64) -> Result<DisjointnessReport> {
    if n < 5 {
        return Err(Error::Domain {
            what: "disjointness check",
            n,
            requirement: ">= 5",
        });
    }
    Ok(Components::new(n, true, true).disjointness(n))
}

fn cross_projection(
    ra: &[BTreeSet<LatticePoint4>; 4],
    cwdd: &[BTreeSet<LatticePoint2>; 3],
) -> bool {
    let all_cwdd: BTreeSet<LatticePoint2> = cwdd.iter().flatten().copied().collect();
    let a_ok = ra[0].iter().all(|q| cwdd[0].contains(&q.depth_dim()));
    let rest_ok = ra
        .iter()
        .flatten()
        .filter(|q| q.depth >= 3)
        .all(|q| all_cwdd.contains(&q.depth_dim()));
    a_ok && rest_ok
}

/// Every Ra tuple with depth >= 3 projects to a CWdd pair under
/// `(a, r, d, h) -> (a, d)`, and Ra's depth-2 tuples project into CWdd's
/// depth-2 component. Vacuously true below `n = 5`.
pub fn check_cross_projection(n: i64) -> bool {
    let comps = Components::new(n, true, true);
    cross_projection(&comps.ra, &comps.cwdd)
}

fn to_u64(v: num_bigint::BigInt) -> Option<u64> {
    v.to_u64()
}

/// Computes the record for a single `n`.
pub fn census_record(n: i64, family: Family) -> CensusRecord {
    let key = residue_decompose(n.max(0)).expect("non-negative");
    let with_cross = family.has_ra();
    let comps = Components::new(n, family.has_cwdd() || with_cross, family.has_ra());
    let cwdd_union = comps.cwdd_union();
    let c_plus = if family.has_cwdd() || family.has_bounds() {
        enumerate_c_plus(n).ok()
    } else {
        None
    };

    let counts = family
        .sets()
        .iter()
        .map(|&set| {
            let enumerated = match set {
                NamedSet::CwddA => Some(comps.cwdd[0].len()),
                NamedSet::CwddB => Some(comps.cwdd[1].len()),
                NamedSet::CwddC => Some(comps.cwdd[2].len()),
                NamedSet::Cwdd => Some(cwdd_union.len()),
                NamedSet::RaA => Some(comps.ra[0].len()),
                NamedSet::RaB => Some(comps.ra[1].len()),
                NamedSet::RaC => Some(comps.ra[2].len()),
                NamedSet::RaD => Some(comps.ra[3].len()),
                NamedSet::Ra => Some(comps.ra_union().len()),
                NamedSet::CPlus => c_plus.as_ref().map(BTreeSet::len),
                other => enumerate(other, n).ok().map(|s| s.len()),
            }
            .map(|len| len as u64);
            let closed_form = match enumerated {
                Some(_) => size(set, n).ok().and_then(to_u64),
                None => None,
            };
            SetCount {
                set,
                enumerated,
                closed_form,
            }
        })
        .collect();

    let disjointness_ok = if n >= 5 && (family.has_cwdd() || family.has_ra()) {
        let mut report = comps.disjointness(n);
        if !family.has_cwdd() {
            report.cwdd_overlaps.clear();
        }
        report.passes()
    } else {
        true
    };

    let sandwich_ok = if family.has_cwdd() && n > 5 {
        let (lo, hi) = sandwich_bounds_cwdd(n).expect("n > 5");
        let value = BigRational::from_integer(size_cwdd(n));
        lo <= value && value <= hi
    } else {
        true
    };

    let mut containment_ok = true;
    if let Some(plus) = &c_plus {
        if family.has_cwdd() {
            containment_ok &= cwdd_union.is_subset(plus);
        }
        if family.has_bounds() {
            let minus = enumerate_c_minus(n).expect("same domain as C+");
            containment_ok &= minus.is_subset(plus);
        }
    }
    if with_cross && n >= 5 {
        containment_ok &= cross_projection(&comps.ra, &comps.cwdd);
    }

    let mut record = CensusRecord {
        n,
        k: key.k,
        i: key.i,
        counts,
        disjointness_ok,
        sandwich_ok,
        containment_ok,
        pass: false,
    };
    record.pass = record.compute_pass();
    record
}

fn validate_range(lo: i64, hi: i64) -> Result<()> {
    if lo < 3 {
        return Err(Error::Range {
            lo,
            hi,
            reason: "lower end must be at least 3",
        });
    }
    if lo > hi {
        return Err(Error::Range {
            lo,
            hi,
            reason: "lower end exceeds upper end",
        });
    }
    Ok(())
}

/// Runs the census over `lo..=hi` on the global thread pool.
pub fn run_census(lo: i64, hi: i64, family: Family) -> Result<CensusReport> {
    run_census_with_threads(lo, hi, family, None)
}

/// Like [`run_census`], with at most `threads` workers when given. Records are
/// always in ascending `n`.
pub fn run_census_with_threads(
    lo: i64,
    hi: i64,
    family: Family,
    threads: Option<usize>,
) -> Result<CensusReport> {
    validate_range(lo, hi)?;
    let compute = || -> Vec<CensusRecord> {
        (lo..=hi)
            .into_par_iter()
            .map(|n| census_record(n, family))
            .collect()
    };
    let records = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("thread pool")
            .install(compute),
        None => compute(),
    };
    Ok(CensusReport::assemble([lo, hi], family, records))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_record_at_five() {
        let report = run_census(5, 5, Family::Cwdd).unwrap();
        let c = report.records[0].count(NamedSet::Cwdd).unwrap();
        assert_eq!((c.enumerated, c.closed_form), (Some(2), Some(2)));
        assert!(report.all_pass());
    }

    #[test]
    fn below_five_is_all_zero() {
        let report = run_census(3, 4, Family::Cwdd).unwrap();
        assert_eq!(report.records.len(), 2);
        for r in &report.records {
            for c in &r.counts {
                assert_eq!((c.enumerated, c.closed_form), (Some(0), Some(0)));
            }
        }
        assert!(report.all_pass());
    }

    #[test]
    fn range_errors() {
        assert!(matches!(
            run_census(2, 4, Family::All),
            Err(Error::Range { .. })
        ));
        assert!(matches!(
            run_census(9, 8, Family::All),
            Err(Error::Range { .. })
        ));
    }

    #[test]
    fn beta_undefined_at_three() {
        let r = census_record(3, Family::Bounds);
        let beta = r.count(NamedSet::Beta).unwrap();
        assert_eq!((beta.enumerated, beta.closed_form), (None, None));
        assert!(r.pass);
    }

    #[test]
    fn disjointness_examples() {
        let d5 = check_disjointness(5).unwrap();
        let ab = &d5.cwdd_overlaps[0];
        assert_eq!((ab.left, ab.right), (NamedSet::CwddA, NamedSet::CwddB));
        assert_eq!(ab.points, vec![LatticePoint2 { depth: 2, dim: 2 }]);
        assert!(d5.cwdd_overlaps[1..].iter().all(|o| o.points.is_empty()));
        assert!(d5.passes());
        for n in [6, 60] {
            let d = check_disjointness(n).unwrap();
            assert!(d.cwdd_overlaps.iter().all(|o| o.points.is_empty()));
            assert!(d.ra_overlaps.iter().all(|o| o.points.is_empty()));
            assert!(d.passes());
        }
        assert!(check_disjointness(4).is_err());
    }

    #[test]
    fn projection_examples() {
        for n in [3, 5, 7, 12] {
            assert!(check_cross_projection(n), "n = {n}");
        }
    }

    #[test]
    fn ra_c_mismatch_is_recorded_not_fatal() {
        let report = run_census(7, 9, Family::Ra).unwrap();
        assert_eq!(report.records.len(), 3);
        let r8 = &report.records[1];
        let c = r8.count(NamedSet::RaC).unwrap();
        assert_eq!((c.enumerated, c.closed_form), (Some(2), Some(3)));
        assert!(!r8.pass);
        assert_eq!(report.first_failure, Some(8));
        assert!(report.records[0].pass && report.records[2].pass);
    }

    #[test]
    fn csv_round_trip() {
        let report = run_census(3, 20, Family::All).unwrap();
        let again = CensusReport::from_csv(&report.to_csv()).unwrap();
        assert_eq!(again, report);
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let a = run_census_with_threads(5, 40, Family::All, Some(1)).unwrap();
        let b = run_census_with_threads(5, 40, Family::All, Some(4)).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
    }
}
