//! Charges, the Kleshchev and standard Kleshchev conditions, and residual
//! segment readings of multipartitions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, SkViolation};
use crate::partitions::Multipartition;
use crate::segments::{SegmentSeq, SegmentZ};

/// A weakly decreasing integer vector `f_1 >= … >= f_m`, `m >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Charge(Vec<i64>);

impl Charge {
    pub fn new(f: Vec<i64>) -> Result<Self> {
        if f.is_empty() || f.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotACharge(f));
        }
        Ok(Charge(f))
    }

    pub fn zero(m: usize) -> Self {
        Charge(vec![0; m.max(1)])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// 1-based entry.
    pub fn get(&self, k: usize) -> i64 {
        self.0[k - 1]
    }

    /// `f_k - f_{k+1}` for 1-based `k < m`.
    pub fn gap(&self, k: usize) -> i64 {
        self.0[k - 1] - self.0[k]
    }

    pub fn translated(&self, c: i64) -> Charge {
        Charge(self.0.iter().map(|x| x + c).collect())
    }

    pub fn f_star(&self) -> Charge {
        f_star(self)
    }

    /// `min_k (f_k - f_{k+1})`, or `None` when `m = 1`.
    pub fn min_gap(&self) -> Option<i64> {
        (1..self.m()).map(|k| self.gap(k)).min()
    }

    /// All charges of length `m` with entries in `lo..=hi`, lexicographic.
    pub fn all_in_range(m: usize, lo: i64, hi: i64) -> Vec<Charge> {
        fn rec(slots: usize, max: i64, lo: i64, cur: &mut Vec<i64>, out: &mut Vec<Charge>) {
            if slots == 0 {
                out.push(Charge(cur.clone()));
                return;
            }
            for v in (lo..=max).rev() {
                cur.push(v);
                rec(slots - 1, v, lo, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if m > 0 {
            rec(m, hi, lo, &mut Vec::new(), &mut out);
        }
        out.sort();
        out
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl<'de> Deserialize<'de> for Charge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Charge::new(Vec::<i64>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// `(f_1,…,f_m) ↦ (-f_m,…,-f_1)`.
pub fn f_star(f: &Charge) -> Charge {
    Charge(f.0.iter().rev().map(|x| -x).collect())
}

fn check_lengths(mp: &Multipartition, f: &Charge) -> Result<()> {
    if mp.m() != f.m() {
        return Err(Error::LengthMismatch {
            components: mp.m(),
            charge: f.m(),
        });
    }
    Ok(())
}

/// `λ^(k)_{j + f_k - f_{k+1}} <= λ^(k+1)_j` for all `j >= 1` and `k < m`.
pub fn is_kleshchev(mp: &Multipartition, f: &Charge) -> Result<bool> {
    check_lengths(mp, f)?;
    for k in 1..mp.m() {
        let (cur, next) = (mp.component(k), mp.component(k + 1));
        let gap = f.gap(k);
        // past j = ℓ(cur) - gap the left side is zero
        let last = cur.len() as i64 - gap;
        for j in 1..=last.max(0) {
            if cur.part_signed(j + gap) > next.part_signed(j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Check the three standard Kleshchev conditions, reporting the first failure.
pub fn check_standard_kleshchev(mp: &Multipartition, f: &Charge) -> Result<()> {
    check_lengths(mp, f)?;
    if let Some(k) = mp.components().iter().position(|p| p.is_empty()) {
        return Err(SkViolation::NotSincere { component: k + 1 }.into());
    }
    for a in 1..mp.m() {
        let (cur, next) = (mp.component(a), mp.component(a + 1));
        let gap = f.gap(a);
        let len = cur.len();
        if len as i64 > gap + 1 {
            return Err(SkViolation::TooManyRows {
                component: a,
                len,
                bound: gap + 1,
            }
            .into());
        }
        let part = cur.part_signed(gap + 1);
        if part > next.first() {
            return Err(SkViolation::PartTooLarge {
                component: a,
                index: gap + 1,
                part,
                next_first: next.first(),
            }
            .into());
        }
        if len as i64 == gap {
            let part = cur.part(len);
            if part + 1 > next.first() {
                return Err(SkViolation::BoundaryNotStrict {
                    component: a,
                    len,
                    part,
                    next_first: next.first(),
                }
                .into());
            }
        }
    }
    Ok(())
}

pub fn is_standard_kleshchev(mp: &Multipartition, f: &Charge) -> Result<bool> {
    match check_standard_kleshchev(mp, f) {
        Ok(()) => Ok(true),
        Err(Error::NotStandardKleshchev(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Kleshchev multipartitions of `r` with `m = |f|` components.
pub fn enumerate_kleshchev(f: &Charge, r: usize) -> Vec<Multipartition> {
    Multipartition::all_of_size(f.m(), r)
        .into_iter()
        .filter(|mp| is_kleshchev(mp, f).unwrap_or(false))
        .collect()
}

pub fn enumerate_standard_kleshchev(f: &Charge, r: usize) -> Vec<Multipartition> {
    Multipartition::all_of_size(f.m(), r)
        .into_iter()
        .filter(|mp| is_standard_kleshchev(mp, f).unwrap_or(false))
        .collect()
}

/// Residues read up each column: components `m` down to `1`, columns left
/// to right, segment `(f_i + j - λ'_j, f_i + j - 1)`.
pub fn column_residual_segments(mp: &Multipartition, f: &Charge) -> Result<SegmentSeq> {
    check_lengths(mp, f)?;
    let mut out = Vec::new();
    for i in (1..=mp.m()).rev() {
        let p = mp.component(i);
        let pc = p.conjugate();
        let fi = f.get(i);
        for j in 1..=p.first() {
            let j = j as i64;
            out.push(SegmentZ::new(
                fi + j - pc.part(j as usize) as i64,
                fi + j - 1,
            )?);
        }
    }
    Ok(SegmentSeq(out))
}

/// Residues read along each row: components `1` to `m`, rows top to bottom,
/// segment `(f_k + 1 - i, f_k + λ_i - i)`.
pub fn row_residual_segments(mp: &Multipartition, f: &Charge) -> Result<SegmentSeq> {
    check_lengths(mp, f)?;
    let mut out = Vec::new();
    for k in 1..=mp.m() {
        let p = mp.component(k);
        let fk = f.get(k);
        for (i, &part) in p.parts().iter().enumerate() {
            let i = i as i64 + 1;
            out.push(SegmentZ::new(fk + 1 - i, fk + part as i64 - i)?);
        }
    }
    Ok(SegmentSeq(out))
}
