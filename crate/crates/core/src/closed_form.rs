//! Piecewise closed forms for the sizes of the lattice sets.
//!
//! Every formula is a quasi-polynomial in `k` where `n = 6k + i`; the Ra
//! `D` component additionally depends on the parity of `k`. Evaluation is in
//! arbitrary precision, and the halves and eighths appearing in the tables are
//! taken as exact divisions: a remainder means a coefficient is wrong and is
//! reported as [`Error::InexactDivision`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::NamedSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// `n = 6k + i` with `0 <= i <= 5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueKey {
    pub k: i64,
    pub i: u8,
    pub k_parity: Parity,
}

impl ResidueKey {
    pub fn n(&self) -> i64 {
        6 * self.k + i64::from(self.i)
    }
}

pub fn residue_decompose(n: i64) -> Result<ResidueKey> {
    if n < 0 {
        return Err(Error::Domain {
            what: "residue decomposition",
            n,
            requirement: ">= 0",
        });
    }
    let (k, i) = n.div_rem(&6);
    Ok(ResidueKey {
        k,
        i: i as u8,
        k_parity: if k % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        },
    })
}

/// Evaluates `c[0] k^d + c[1] k^(d-1) + ... + c[d]`.
fn horner(k: i64, coeffs: &[i64]) -> BigInt {
    let k = BigInt::from(k);
    coeffs
        .iter()
        .fold(BigInt::zero(), |acc, &c| acc * &k + BigInt::from(c))
}

fn exact_div(set: NamedSet, n: i64, numerator: BigInt, denominator: u32) -> Result<BigInt> {
    let (q, r) = numerator.div_rem(&BigInt::from(denominator));
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            set,
            n,
            numerator: numerator.to_string(),
            denominator,
        });
    }
    Ok(q)
}

fn key(n: i64) -> ResidueKey {
    residue_decompose(n).expect("callers guarantee n >= 0")
}

pub fn size_cwdd_a(n: i64) -> BigInt {
    match n {
        ..=4 => BigInt::zero(),
        5 => BigInt::from(2),
        _ if n % 2 == 0 => BigInt::from(2),
        _ => BigInt::from(3),
    }
}

pub fn size_cwdd_b(n: i64) -> BigInt {
    if n < 5 {
        return BigInt::zero();
    }
    let ResidueKey { k, i, .. } = key(n);
    BigInt::from(match i {
        0 => k - 1,
        1..=4 => k,
        _ => k + 1,
    })
}

const CWDD_C: [[i64; 3]; 6] = [
    [6, -7, 1],
    [6, -5, 0],
    [6, -3, -1],
    [6, -1, -1],
    [6, 1, -1],
    [6, 3, -1],
];

pub fn size_cwdd_c(n: i64) -> BigInt {
    if n <= 5 {
        return BigInt::zero();
    }
    let ResidueKey { k, i, .. } = key(n);
    horner(k, &CWDD_C[usize::from(i)])
}

const CWDD_TOTAL: [[i64; 3]; 6] = [
    [6, -6, 2],
    [6, -4, 3],
    [6, -2, 1],
    [6, 0, 2],
    [6, 2, 1],
    [6, 4, 3],
];

pub fn size_cwdd(n: i64) -> BigInt {
    match n {
        ..=4 => BigInt::zero(),
        5 => BigInt::from(2),
        _ => {
            let ResidueKey { k, i, .. } = key(n);
            horner(k, &CWDD_TOTAL[usize::from(i)])
        }
    }
}

pub fn size_ra_a(n: i64) -> BigInt {
    size_cwdd_a(n)
}

// numerators over 2
const RA_B: [[i64; 3]; 6] = [
    [3, -3, 0],
    [3, 1, -2],
    [3, -1, 0],
    [3, 3, -2],
    [3, 1, 0],
    [3, 5, 0],
];

pub fn size_ra_b(n: i64) -> Result<BigInt> {
    if n < 5 {
        return Ok(BigInt::zero());
    }
    let ResidueKey { k, i, .. } = key(n);
    exact_div(NamedSet::RaB, n, horner(k, &RA_B[usize::from(i)]), 2)
}

const RA_C: [[i64; 3]; 6] = [
    [3, 0, -3],
    [3, 1, -3],
    [3, 2, -2],
    [3, 3, -2],
    [3, 4, -2],
    [3, 5, 0],
];

/// Closed form for the `(a, a, d, d)` component.
///
/// This table overcounts by one whenever `n ≡ 2 (mod 3)`: the case split
/// behind it treats `3a = n + 1` as contributing `a` values of `d` where only
/// `a - 1` exist. [`crate::lattice::enumerate_ra_c`] is authoritative.
pub fn size_ra_c(n: i64) -> BigInt {
    if n < 5 {
        return BigInt::zero();
    }
    let ResidueKey { k, i, .. } = key(n);
    horner(k, &RA_C[usize::from(i)])
}

/// Cubic numerators over 8: `[k³, k², k, const for even k, const for odd k]`.
pub(crate) const RA_D: [[i64; 5]; 6] = [
    [18, -45, 34, -8, -7],
    [18, -27, -14, 24, 23],
    [18, -27, 10, 0, -1],
    [18, -9, -26, 16, 17],
    [18, -9, -2, 0, 1],
    [18, 9, -26, 8, 7],
];

// The i = 5 row carries 45k², the sum of the component forms. With 27k² the
// total is 110/8 at n = 11.
pub(crate) const RA_TOTAL: [[i64; 5]; 6] = [
    [18, -9, 22, -16, -15],
    [18, 9, -2, 16, 15],
    [18, 9, 22, 0, -1],
    [18, 27, 10, 16, 17],
    [18, 27, 34, 0, 1],
    [18, 45, 34, 32, 31],
];

pub(crate) fn parity_numerator(row: &[i64; 5], k: i64, parity: Parity) -> BigInt {
    let constant = match parity {
        Parity::Even => row[3],
        Parity::Odd => row[4],
    };
    horner(k, &[row[0], row[1], row[2], constant])
}

/// Closed form for the `(a, r, d, d)` component.
///
/// Agrees with enumeration only for `n <= 15`. The summation it was derived
/// from lets the first partial sum go negative once `⌊(n-a)/2⌋ < a`.
/// [`crate::lattice::enumerate_ra_d`] is authoritative.
pub fn size_ra_d(n: i64) -> Result<BigInt> {
    if n <= 5 {
        return Ok(BigInt::zero());
    }
    let ResidueKey { k, i, k_parity } = key(n);
    let num = parity_numerator(&RA_D[usize::from(i)], k, k_parity);
    exact_div(NamedSet::RaD, n, num, 8)
}

pub fn size_ra(n: i64) -> Result<BigInt> {
    match n {
        ..=4 => Ok(BigInt::zero()),
        5 => Ok(BigInt::from(2)),
        _ => {
            let ResidueKey { k, i, k_parity } = key(n);
            let num = parity_numerator(&RA_TOTAL[usize::from(i)], k, k_parity);
            exact_div(NamedSet::Ra, n, num, 8)
        }
    }
}

pub fn size_c_plus(n: i64) -> Result<BigInt> {
    NamedSet::CPlus.check_domain(n)?;
    exact_div(NamedSet::CPlus, n, BigInt::from(n) * BigInt::from(n - 1), 2)
}

// numerators over 2, before the +1 for (1, n-1)
const C_MINUS: [[i64; 3]; 6] = [
    [27, -9, 0],
    [27, -3, 0],
    [27, 9, 0],
    [27, 15, 2],
    [27, 27, 6],
    [27, 33, 10],
];

pub fn size_c_minus(n: i64) -> Result<BigInt> {
    NamedSet::CMinus.check_domain(n)?;
    let ResidueKey { k, i, .. } = key(n);
    Ok(exact_div(NamedSet::CMinus, n, horner(k, &C_MINUS[usize::from(i)]), 2)? + 1)
}

pub fn size_beta(n: i64) -> Result<BigInt> {
    NamedSet::Beta.check_domain(n)?;
    let ResidueKey { k, i, .. } = key(n);
    let k2 = |a: i64, b: i64| BigInt::from(a) * BigInt::from(k) + BigInt::from(b);
    let num = match i {
        0 => k2(9, 0) * k2(3, -1),
        1 => k2(3, 0) * k2(9, -1),
        2 => k2(9, 0) * k2(3, 1),
        3 => k2(3, 1) * k2(9, 2),
        4 => BigInt::from(3) * k2(3, 2) * k2(3, 1),
        _ => k2(3, 2) * k2(9, 5),
    };
    exact_div(NamedSet::Beta, n, num, 2)
}

/// Closed-form size of any named set.
pub fn size(set: NamedSet, n: i64) -> Result<BigInt> {
    match set {
        NamedSet::CwddA => Ok(size_cwdd_a(n)),
        NamedSet::CwddB => Ok(size_cwdd_b(n)),
        NamedSet::CwddC => Ok(size_cwdd_c(n)),
        NamedSet::Cwdd => Ok(size_cwdd(n)),
        NamedSet::RaA => Ok(size_ra_a(n)),
        NamedSet::RaB => size_ra_b(n),
        NamedSet::RaC => Ok(size_ra_c(n)),
        NamedSet::RaD => size_ra_d(n),
        NamedSet::Ra => size_ra(n),
        NamedSet::CMinus => size_c_minus(n),
        NamedSet::CPlus => size_c_plus(n),
        NamedSet::Beta => size_beta(n),
    }
}

/// Component sizes and totals at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeBreakdown {
    pub n: i64,
    pub cwdd_a: BigInt,
    pub cwdd_b: BigInt,
    pub cwdd_c: BigInt,
    /// `|A ∩ B|`, one at `n = 5` and zero otherwise.
    pub cwdd_overlap: BigInt,
    pub cwdd: BigInt,
    pub ra_a: BigInt,
    pub ra_b: BigInt,
    pub ra_c: BigInt,
    pub ra_d: BigInt,
    pub ra: BigInt,
}

impl SizeBreakdown {
    pub fn cwdd_components_consistent(&self) -> bool {
        &self.cwdd_a + &self.cwdd_b + &self.cwdd_c - &self.cwdd_overlap == self.cwdd
    }

    pub fn ra_components_consistent(&self) -> bool {
        &self.ra_a + &self.ra_b + &self.ra_c + &self.ra_d == self.ra
    }
}

pub fn size_breakdown(n: i64) -> Result<SizeBreakdown> {
    Ok(SizeBreakdown {
        n,
        cwdd_a: size_cwdd_a(n),
        cwdd_b: size_cwdd_b(n),
        cwdd_c: size_cwdd_c(n),
        cwdd_overlap: BigInt::from(u8::from(n == 5)),
        cwdd: size_cwdd(n),
        ra_a: size_ra_a(n),
        ra_b: size_ra_b(n)?,
        ra_c: size_ra_c(n),
        ra_d: size_ra_d(n)?,
        ra: size_ra(n)?,
    })
}

fn require_past_five(what: &'static str, n: i64) -> Result<()> {
    if n <= 5 {
        return Err(Error::Domain {
            what,
            n,
            requirement: "> 5",
        });
    }
    Ok(())
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `((n-3)²/6 + 1/2, (n-3)²/6 + 7/3)`, which bracket `|CWdd(n)|` for `n > 5`.
pub fn sandwich_bounds_cwdd(n: i64) -> Result<(BigRational, BigRational)> {
    require_past_five("sandwich bounds", n)?;
    let m = BigInt::from(n - 3);
    let base = BigRational::new(&m * &m, BigInt::from(6));
    Ok((&base + ratio(1, 2), base + ratio(7, 3)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioReport {
    pub n: i64,
    pub cwdd_over_cplus: BigRational,
    pub cwdd_over_cminus: BigRational,
    pub cwdd_over_nsq: BigRational,
}

/// `|CWdd(n)|` against `|C⁺(n)|`, `|C⁻(n)|` and `n²`. As `n → ∞` these
/// approach `1/3`, `4/9` and `1/6`.
pub fn ratio_report(n: i64) -> Result<RatioReport> {
    require_past_five("ratio report", n)?;
    let cwdd = size_cwdd(n);
    let nn = BigInt::from(n);
    Ok(RatioReport {
        n,
        cwdd_over_cplus: BigRational::new(cwdd.clone(), size_c_plus(n)?),
        cwdd_over_cminus: BigRational::new(cwdd.clone(), size_c_minus(n)?),
        cwdd_over_nsq: BigRational::new(cwdd, &nn * &nn),
    })
}

/// Asymptotic envelope endpoints as exact rationals.
pub fn limit_cwdd_over_nsq() -> BigRational {
    ratio(1, 6)
}

pub fn envelope_lower() -> BigRational {
    ratio(1, 3)
}

pub fn envelope_upper() -> BigRational {
    ratio(4, 9)
}

/// `|x - target| <= tol` in exact arithmetic.
pub fn within(x: &BigRational, target: &BigRational, tol: &BigRational) -> bool {
    let diff = x - target;
    let abs = if diff < BigRational::zero() {
        -diff
    } else {
        diff
    };
    &abs <= tol
}
