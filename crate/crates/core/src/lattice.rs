//! Explicit enumeration of the lattice-point sets attached to Cameron-Walker
//! graphs on `n` vertices.
//!
//! Every set is cut out by integer inequalities in `n`. Thresholds such as
//! `n/3 < b` are always compared after clearing the denominator (`n < 3b`),
//! so boundary cases like `n = 3b` are decided exactly.
//!
//! CW-specific sets are empty for `n < 5` (no Cameron-Walker graph has fewer
//! than five vertices). The polytope bounds `C⁻`, `C⁺` are defined for
//! `n >= 3` and the auxiliary set `β` for `n >= 4`; asking for them below
//! those thresholds is a domain error.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A `(depth, dim)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint2 {
    pub depth: i64,
    pub dim: i64,
}

impl LatticePoint2 {
    pub fn new(depth: i64, dim: i64) -> Result<Self> {
        if depth < 1 || dim < 1 {
            return Err(Error::InvalidStructure(format!(
                "lattice point ({depth},{dim}) has a non-positive coordinate"
            )));
        }
        Ok(Self { depth, dim })
    }
}

impl fmt::Display for LatticePoint2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.depth, self.dim)
    }
}

/// A `(depth, reg, dim, deg h)` tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint4 {
    pub depth: i64,
    pub reg: i64,
    pub dim: i64,
    pub deg_h: i64,
}

impl LatticePoint4 {
    pub fn new(depth: i64, reg: i64, dim: i64, deg_h: i64) -> Result<Self> {
        if depth < 1 || reg < 1 || dim < 1 || deg_h < 1 {
            return Err(Error::InvalidStructure(format!(
                "lattice point ({depth},{reg},{dim},{deg_h}) has a non-positive coordinate"
            )));
        }
        Ok(Self {
            depth,
            reg,
            dim,
            deg_h,
        })
    }

    /// Drops regularity and deg h.
    pub fn depth_dim(&self) -> LatticePoint2 {
        LatticePoint2 {
            depth: self.depth,
            dim: self.dim,
        }
    }
}

impl fmt::Display for LatticePoint4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})",
            self.depth, self.reg, self.dim, self.deg_h
        )
    }
}

/// Either arity of lattice point, for APIs that accept any named set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Pair(LatticePoint2),
    Quad(LatticePoint4),
}

impl Point {
    pub fn arity(&self) -> usize {
        match self {
            Point::Pair(_) => 2,
            Point::Quad(_) => 4,
        }
    }

    pub fn coords(&self) -> Vec<i64> {
        match *self {
            Point::Pair(p) => vec![p.depth, p.dim],
            Point::Quad(q) => vec![q.depth, q.reg, q.dim, q.deg_h],
        }
    }
}

impl From<LatticePoint2> for Point {
    fn from(p: LatticePoint2) -> Self {
        Point::Pair(p)
    }
}

impl From<LatticePoint4> for Point {
    fn from(p: LatticePoint4) -> Self {
        Point::Quad(p)
    }
}

/// Identifiers for every lattice set the crate knows how to enumerate and count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum NamedSet {
    CwddA,
    CwddB,
    CwddC,
    Cwdd,
    RaA,
    RaB,
    RaC,
    RaD,
    Ra,
    CMinus,
    CPlus,
    Beta,
}

impl NamedSet {
    pub const ALL: [NamedSet; 12] = [
        NamedSet::CwddA,
        NamedSet::CwddB,
        NamedSet::CwddC,
        NamedSet::Cwdd,
        NamedSet::RaA,
        NamedSet::RaB,
        NamedSet::RaC,
        NamedSet::RaD,
        NamedSet::Ra,
        NamedSet::CMinus,
        NamedSet::CPlus,
        NamedSet::Beta,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            NamedSet::CwddA => "cwdd-a",
            NamedSet::CwddB => "cwdd-b",
            NamedSet::CwddC => "cwdd-c",
            NamedSet::Cwdd => "cwdd",
            NamedSet::RaA => "ra-a",
            NamedSet::RaB => "ra-b",
            NamedSet::RaC => "ra-c",
            NamedSet::RaD => "ra-d",
            NamedSet::Ra => "ra",
            NamedSet::CMinus => "c-minus",
            NamedSet::CPlus => "c-plus",
            NamedSet::Beta => "beta",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            NamedSet::RaA | NamedSet::RaB | NamedSet::RaC | NamedSet::RaD | NamedSet::Ra => 4,
            _ => 2,
        }
    }

    /// True for the sets that describe Cameron-Walker graphs (empty below n = 5).
    pub fn is_cw_specific(self) -> bool {
        !matches!(self, NamedSet::CMinus | NamedSet::CPlus | NamedSet::Beta)
    }

    /// Smallest `n` at which the set is defined at all.
    pub fn min_n(self) -> i64 {
        match self {
            NamedSet::CMinus | NamedSet::CPlus => 3,
            NamedSet::Beta => 4,
            _ => i64::MIN,
        }
    }

    pub(crate) fn check_domain(self, n: i64) -> Result<()> {
        if n < self.min_n() {
            return Err(Error::Domain {
                what: self.tag(),
                n,
                requirement: if self == NamedSet::Beta {
                    ">= 4"
                } else {
                    ">= 3"
                },
            });
        }
        Ok(())
    }
}

impl fmt::Display for NamedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for NamedSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        NamedSet::ALL
            .into_iter()
            .find(|set| set.tag() == norm)
            .ok_or_else(|| Error::UnknownSet(s.to_string()))
    }
}

impl From<NamedSet> for String {
    fn from(set: NamedSet) -> Self {
        set.tag().to_string()
    }
}

impl TryFrom<String> for NamedSet {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Enumerated contents of a named set, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointSet {
    Pairs(BTreeSet<LatticePoint2>),
    Quads(BTreeSet<LatticePoint4>),
}

impl PointSet {
    pub fn len(&self) -> usize {
        match self {
            PointSet::Pairs(s) => s.len(),
            PointSet::Quads(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Vec<Point> {
        match self {
            PointSet::Pairs(s) => s.iter().copied().map(Point::Pair).collect(),
            PointSet::Quads(s) => s.iter().copied().map(Point::Quad).collect(),
        }
    }
}

fn pair(depth: i64, dim: i64) -> LatticePoint2 {
    LatticePoint2 { depth, dim }
}

fn quad(depth: i64, reg: i64, dim: i64, deg_h: i64) -> LatticePoint4 {
    LatticePoint4 {
        depth,
        reg,
        dim,
        deg_h,
    }
}

/// Depth-2 component: `(2, n-2)`, `(2, n-3)`, and `(2, (n-1)/2)` for odd `n`.
pub fn enumerate_cwdd_a(n: i64) -> BTreeSet<LatticePoint2> {
    let mut out = BTreeSet::new();
    if n < 5 {
        return out;
    }
    out.insert(pair(2, n - 2));
    out.insert(pair(2, n - 3));
    if n % 2 == 1 {
        // at n = 5 this coincides with (2, n-3)
        out.insert(pair(2, (n - 1) / 2));
    }
    out
}

/// Cohen-Macaulay diagonal: `(b, b)` with `n/3 < b < n/2`.
pub fn enumerate_cwdd_b(n: i64) -> BTreeSet<LatticePoint2> {
    if n < 5 {
        return BTreeSet::new();
    }
    (n / 3 + 1..)
        .take_while(|&b| 2 * b < n)
        .filter(|&b| 3 * b > n)
        .map(|b| pair(b, b))
        .collect()
}

/// `(a, b)` with `3 <= a <= ⌊(n-1)/2⌋` and `max{a, (n-a)/2} < b <= n - a`.
pub fn enumerate_cwdd_c(n: i64) -> BTreeSet<LatticePoint2> {
    let mut out = BTreeSet::new();
    if n < 5 {
        return out;
    }
    for a in 3..=(n - 1) / 2 {
        for b in a + 1..=n - a {
            if n - a < 2 * b {
                out.insert(pair(a, b));
            }
        }
    }
    out
}

/// All `(depth, dim)` pairs realized by CW graphs on `n` vertices.
pub fn enumerate_cwdd(n: i64) -> BTreeSet<LatticePoint2> {
    let mut out = enumerate_cwdd_a(n);
    out.extend(enumerate_cwdd_b(n));
    out.extend(enumerate_cwdd_c(n));
    out
}

pub fn enumerate_ra_a(n: i64) -> BTreeSet<LatticePoint4> {
    let mut out = BTreeSet::new();
    if n < 5 {
        return out;
    }
    out.insert(quad(2, 2, n - 2, n - 2));
    out.insert(quad(2, 2, n - 3, n - 3));
    if n % 2 == 1 {
        let h = (n - 1) / 2;
        out.insert(quad(2, h, h, h));
    }
    out
}

/// `(a, d, d, d)` with `3 <= a <= d <= ⌊(n-1)/2⌋` and `n < a + 2d`.
pub fn enumerate_ra_b(n: i64) -> BTreeSet<LatticePoint4> {
    let mut out = BTreeSet::new();
    if n < 5 {
        return out;
    }
    let top = (n - 1) / 2;
    for a in 3..=top {
        for d in a..=top {
            if n < a + 2 * d {
                out.insert(quad(a, d, d, d));
            }
        }
    }
    out
}

/// `(a, a, d, d)` with `3 <= a < d <= n - a` and `n <= 2a + d - 1`.
pub fn enumerate_ra_c(n: i64) -> BTreeSet<LatticePoint4> {
    let mut out = BTreeSet::new();
    if n < 5 {
        return out;
    }
    for a in 3..=(n - 1) / 2 {
        for d in a + 1..=n - a {
            if n < 2 * a + d {
                out.insert(quad(a, a, d, d));
            }
        }
    }
    out
}

/// `(a, r, d, d)` with `3 <= a < r < d < n - r` and `n + 2 <= a + r + d`.
///
/// `r < d < n - r` forces `r <= ⌊n/2⌋ - 1`, hence `a <= ⌊n/2⌋ - 2`; `d` then
/// runs over `max{r+1, n-a-r+2} ..= n-r-1`.
pub fn enumerate_ra_d(n: i64) -> BTreeSet<LatticePoint4> {
    let mut out = BTreeSet::new();
    if n < 5 {
        return out;
    }
    let half = n / 2;
    for a in 3..=half - 2 {
        for r in a + 1..=half - 1 {
            let lo = (r + 1).max(n - a - r + 2);
            for d in lo..n - r {
                out.insert(quad(a, r, d, d));
            }
        }
    }
    out
}

fn ra_components(n: i64) -> [BTreeSet<LatticePoint4>; 4] {
    [
        enumerate_ra_a(n),
        enumerate_ra_b(n),
        enumerate_ra_c(n),
        enumerate_ra_d(n),
    ]
}

/// Union of the four Ra components. The components are pairwise disjoint,
/// and a detected overlap is reported as [`Error::Inconsistent`].
pub fn enumerate_ra(n: i64) -> Result<BTreeSet<LatticePoint4>> {
    let parts = ra_components(n);
    let sum: usize = parts.iter().map(BTreeSet::len).sum();
    let union: BTreeSet<LatticePoint4> = parts.into_iter().flatten().collect();
    if union.len() != sum {
        return Err(Error::Inconsistent {
            set: NamedSet::Ra,
            n,
            union: union.len(),
            sum,
        });
    }
    Ok(union)
}

/// Points `(a, b)` with `1 <= a <= ⌊n/2⌋` and `a <= b <= n - 2`.
fn beta_points(n: i64) -> BTreeSet<LatticePoint2> {
    let mut out = BTreeSet::new();
    for a in 1..=n / 2 {
        for b in a..=n - 2 {
            out.insert(pair(a, b));
        }
    }
    out
}

/// Inner polytope: `{(1, n-1)} ∪ {(a, b) : 1 <= a <= b <= n-2, a <= ⌊n/2⌋}`.
pub fn enumerate_c_minus(n: i64) -> Result<BTreeSet<LatticePoint2>> {
    NamedSet::CMinus.check_domain(n)?;
    let mut out = beta_points(n);
    out.insert(pair(1, n - 1));
    Ok(out)
}

/// Outer polytope: `{(a, b) : 1 <= a <= b <= n-1}`.
pub fn enumerate_c_plus(n: i64) -> Result<BTreeSet<LatticePoint2>> {
    NamedSet::CPlus.check_domain(n)?;
    let mut out = BTreeSet::new();
    for a in 1..n {
        for b in a..n {
            out.insert(pair(a, b));
        }
    }
    Ok(out)
}

pub fn enumerate_beta(n: i64) -> Result<BTreeSet<LatticePoint2>> {
    NamedSet::Beta.check_domain(n)?;
    Ok(beta_points(n))
}

/// Enumerates any named set.
pub fn enumerate(set: NamedSet, n: i64) -> Result<PointSet> {
    Ok(match set {
        NamedSet::CwddA => PointSet::Pairs(enumerate_cwdd_a(n)),
        NamedSet::CwddB => PointSet::Pairs(enumerate_cwdd_b(n)),
        NamedSet::CwddC => PointSet::Pairs(enumerate_cwdd_c(n)),
        NamedSet::Cwdd => PointSet::Pairs(enumerate_cwdd(n)),
        NamedSet::RaA => PointSet::Quads(enumerate_ra_a(n)),
        NamedSet::RaB => PointSet::Quads(enumerate_ra_b(n)),
        NamedSet::RaC => PointSet::Quads(enumerate_ra_c(n)),
        NamedSet::RaD => PointSet::Quads(enumerate_ra_d(n)),
        NamedSet::Ra => PointSet::Quads(enumerate_ra(n)?),
        NamedSet::CMinus => PointSet::Pairs(enumerate_c_minus(n)?),
        NamedSet::CPlus => PointSet::Pairs(enumerate_c_plus(n)?),
        NamedSet::Beta => PointSet::Pairs(enumerate_beta(n)?),
    })
}

fn in_cwdd_a(n: i64, p: LatticePoint2) -> bool {
    n >= 5
        && p.depth == 2
        && (p.dim == n - 2 || p.dim == n - 3 || (n % 2 == 1 && 2 * p.dim == n - 1))
}

fn in_cwdd_b(n: i64, p: LatticePoint2) -> bool {
    n >= 5 && p.depth == p.dim && n < 3 * p.dim && 2 * p.dim < n
}

fn in_cwdd_c(n: i64, p: LatticePoint2) -> bool {
    let LatticePoint2 { depth: a, dim: b } = p;
    n >= 5 && 3 <= a && 2 * a < n && a < b && n - a < 2 * b && b <= n - a
}

fn in_ra_a(n: i64, q: LatticePoint4) -> bool {
    if n < 5 || q.depth != 2 {
        return false;
    }
    let plain = |d: i64| q.reg == 2 && q.dim == d && q.deg_h == d;
    let half = n % 2 == 1 && 2 * q.reg == n - 1 && q.dim == q.reg && q.deg_h == q.reg;
    plain(n - 2) || plain(n - 3) || half
}

fn in_ra_b(n: i64, q: LatticePoint4) -> bool {
    let LatticePoint4 {
        depth: a,
        reg: r,
        dim: d,
        deg_h: h,
    } = q;
    n >= 5 && r == d && h == d && 3 <= a && a <= d && 2 * d < n && n < a + 2 * d
}

fn in_ra_c(n: i64, q: LatticePoint4) -> bool {
    let LatticePoint4 {
        depth: a,
        reg: r,
        dim: d,
        deg_h: h,
    } = q;
    n >= 5 && r == a && h == d && 3 <= a && a < d && d <= n - a && n < 2 * a + d
}

fn in_ra_d(n: i64, q: LatticePoint4) -> bool {
    let LatticePoint4 {
        depth: a,
        reg: r,
        dim: d,
        deg_h: h,
    } = q;
    n >= 5 && h == d && 3 <= a && a < r && r < d && d < n - r && n + 2 <= a + r + d
}

fn in_beta(n: i64, p: LatticePoint2) -> bool {
    let LatticePoint2 { depth: a, dim: b } = p;
    1 <= a && 2 * a <= n && a <= b && b <= n - 2
}

fn in_c_minus(n: i64, p: LatticePoint2) -> bool {
    (p.depth == 1 && p.dim == n - 1) || in_beta(n, p)
}

fn in_c_plus(n: i64, p: LatticePoint2) -> bool {
    1 <= p.depth && p.depth <= p.dim && p.dim < n
}

/// Membership test straight from the defining inequalities, without enumerating.
pub fn contains(set: NamedSet, n: i64, point: Point) -> Result<bool> {
    if point.arity() != set.arity() {
        return Err(Error::ArityMismatch {
            set,
            expected: set.arity(),
            found: point.arity(),
        });
    }
    set.check_domain(n)?;
    Ok(match (set, point) {
        (NamedSet::CwddA, Point::Pair(p)) => in_cwdd_a(n, p),
        (NamedSet::CwddB, Point::Pair(p)) => in_cwdd_b(n, p),
        (NamedSet::CwddC, Point::Pair(p)) => in_cwdd_c(n, p),
        (NamedSet::Cwdd, Point::Pair(p)) => in_cwdd_a(n, p) || in_cwdd_b(n, p) || in_cwdd_c(n, p),
        (NamedSet::RaA, Point::Quad(q)) => in_ra_a(n, q),
        (NamedSet::RaB, Point::Quad(q)) => in_ra_b(n, q),
        (NamedSet::RaC, Point::Quad(q)) => in_ra_c(n, q),
        (NamedSet::RaD, Point::Quad(q)) => in_ra_d(n, q),
        (NamedSet::Ra, Point::Quad(q)) => {
            in_ra_a(n, q) || in_ra_b(n, q) || in_ra_c(n, q) || in_ra_d(n, q)
        }
        (NamedSet::CMinus, Point::Pair(p)) => in_c_minus(n, p),
        (NamedSet::CPlus, Point::Pair(p)) => in_c_plus(n, p),
        (NamedSet::Beta, Point::Pair(p)) => in_beta(n, p),
        _ => unreachable!("arity checked above"),
    })
}
