//! Integral segments `(q^{2·lo}, …, q^{2·hi})` stored as integer pairs, the
//! two precedence orders on them, and standard words.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Composition;

/// A segment `lo..=hi` of q²-exponents. Serialized as `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "[i64; 2]")]
pub struct SegmentZ {
    lo: i64,
    hi: i64,
}

impl From<SegmentZ> for [i64; 2] {
    fn from(s: SegmentZ) -> Self {
        [s.lo, s.hi]
    }
}

impl<'de> Deserialize<'de> for SegmentZ {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [lo, hi] = <[i64; 2]>::deserialize(d)?;
        SegmentZ::new(lo, hi).map_err(serde::de::Error::custom)
    }
}

impl SegmentZ {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::EmptySegment { lo, hi });
        }
        Ok(SegmentZ { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Exponents from the top down, `hi, hi-1, …, lo`.
    pub fn reversed(&self) -> Vec<i64> {
        (self.lo..=self.hi).rev().collect()
    }

    /// `(lo, hi) ↦ (-hi, -lo)`.
    pub fn inverse(&self) -> SegmentZ {
        SegmentZ {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn shifted(&self, c: i64) -> SegmentZ {
        SegmentZ {
            lo: self.lo + c,
            hi: self.hi + c,
        }
    }

    fn standard_key(&self) -> (i64, i64) {
        (self.hi, -self.lo)
    }

    fn anti_standard_key(&self) -> (i64, i64) {
        (-self.lo, self.hi)
    }

    /// Comparator for the standard order: by top, then by bottom descending.
    pub fn cmp_standard(&self, other: &SegmentZ) -> Ordering {
        self.standard_key().cmp(&other.standard_key())
    }

    /// Comparator for the anti-standard order: by bottom descending, then top.
    pub fn cmp_anti_standard(&self, other: &SegmentZ) -> Ordering {
        self.anti_standard_key().cmp(&other.anti_standard_key())
    }
}

impl fmt::Display for SegmentZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

pub fn seg_length(s: &SegmentZ) -> usize {
    s.len()
}

pub fn seg_reverse(s: &SegmentZ) -> Vec<i64> {
    s.reversed()
}

pub fn seg_inverse(s: &SegmentZ) -> SegmentZ {
    s.inverse()
}

/// `s1 ≼ s2`: `hi1 < hi2`, or equal tops and `lo1 >= lo2`.
pub fn precedes(s1: &SegmentZ, s2: &SegmentZ) -> bool {
    s1.hi < s2.hi || (s1.hi == s2.hi && s1.lo >= s2.lo)
}

/// `s1 ≼′ s2`: `hi1 < hi2`, or equal tops and `lo1 <= lo2`.
pub fn precedes_prime(s1: &SegmentZ, s2: &SegmentZ) -> bool {
    s1.hi < s2.hi || (s1.hi == s2.hi && s1.lo <= s2.lo)
}

/// An ordered list of segments.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SegmentSeq(pub Vec<SegmentZ>);

impl SegmentSeq {
    pub fn segments(&self) -> &[SegmentZ] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total length `Σ |s_k|`.
    pub fn size(&self) -> usize {
        self.0.iter().map(SegmentZ::len).sum()
    }

    /// Segmentwise inverse, keeping positions.
    pub fn inverse(&self) -> SegmentSeq {
        SegmentSeq(self.0.iter().map(SegmentZ::inverse).collect())
    }

    /// Each segment read from the top down, juxtaposed.
    pub fn reversed_exponents(&self) -> Vec<i64> {
        self.0.iter().flat_map(SegmentZ::reversed).collect()
    }
}

impl fmt::Display for SegmentSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

pub fn is_standard_seq(seq: &SegmentSeq) -> bool {
    seq.0.windows(2).all(|w| precedes(&w[0], &w[1]))
}

/// Bottoms weakly decrease; on equal bottoms the tops weakly increase.
pub fn is_anti_standard(seq: &SegmentSeq) -> bool {
    seq.0
        .windows(2)
        .all(|w| w[0].cmp_anti_standard(&w[1]) != Ordering::Greater)
}

/// A multiset of segments, held as its standard-sorted sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MultisegmentZ(Vec<SegmentZ>);

impl PartialOrd for SegmentZ {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SegmentZ {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_standard(other)
    }
}

impl MultisegmentZ {
    pub fn new(mut segments: Vec<SegmentZ>) -> Self {
        segments.sort_by(SegmentZ::cmp_standard);
        MultisegmentZ(segments)
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        let segs = pairs
            .iter()
            .map(|&(lo, hi)| SegmentZ::new(lo, hi))
            .collect::<Result<Vec<_>>>()?;
        Ok(MultisegmentZ::new(segs))
    }

    pub fn segments(&self) -> &[SegmentZ] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(SegmentZ::len).sum()
    }

    pub fn max_segment_len(&self) -> usize {
        self.0.iter().map(SegmentZ::len).max().unwrap_or(0)
    }

    pub fn to_seq(&self) -> SegmentSeq {
        SegmentSeq(self.0.clone())
    }
}

impl From<SegmentSeq> for MultisegmentZ {
    fn from(seq: SegmentSeq) -> Self {
        MultisegmentZ::new(seq.0)
    }
}

impl fmt::Display for MultisegmentZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

impl<'de> Deserialize<'de> for MultisegmentZ {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(MultisegmentZ::new(Vec::<SegmentZ>::deserialize(d)?))
    }
}

pub fn sort_standard(ms: &MultisegmentZ) -> SegmentSeq {
    ms.to_seq()
}

pub fn sort_anti_standard(ms: &MultisegmentZ) -> SegmentSeq {
    let mut v = ms.0.clone();
    v.sort_by(SegmentZ::cmp_anti_standard);
    SegmentSeq(v)
}

/// A two-row array of tops over bottoms.
///
/// Tops weakly increase, and on a run of equal tops the bottoms weakly decrease.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StandardWord {
    tops: Vec<i64>,
    bottoms: Vec<i64>,
}

impl StandardWord {
    pub fn new(tops: Vec<i64>, bottoms: Vec<i64>) -> Result<Self> {
        if tops.len() != bottoms.len() {
            return Err(Error::NonStandardWord(format!(
                "{} tops but {} bottoms",
                tops.len(),
                bottoms.len()
            )));
        }
        for k in 0..tops.len() {
            if bottoms[k] > tops[k] {
                return Err(Error::NonStandardWord(format!(
                    "column {} has bottom {} above top {}",
                    k + 1,
                    bottoms[k],
                    tops[k]
                )));
            }
            if k > 0 {
                if tops[k] < tops[k - 1] {
                    return Err(Error::NonStandardWord(format!(
                        "tops decrease at column {}",
                        k + 1
                    )));
                }
                if tops[k] == tops[k - 1] && bottoms[k] > bottoms[k - 1] {
                    return Err(Error::NonStandardWord(format!(
                        "bottoms increase under equal tops at column {}",
                        k + 1
                    )));
                }
            }
        }
        Ok(StandardWord { tops, bottoms })
    }

    pub fn tops(&self) -> &[i64] {
        &self.tops
    }

    pub fn bottoms(&self) -> &[i64] {
        &self.bottoms
    }

    /// Number of columns.
    pub fn len(&self) -> usize {
        self.tops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tops.is_empty()
    }

    /// `Σ (top - bottom + 1)`.
    pub fn size(&self) -> usize {
        self.tops
            .iter()
            .zip(&self.bottoms)
            .map(|(j, i)| (j - i + 1) as usize)
            .sum()
    }
}

impl fmt::Display for StandardWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tops {:?} bottoms {:?}", self.tops, self.bottoms)
    }
}

impl<'de> Deserialize<'de> for StandardWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            tops: Vec<i64>,
            bottoms: Vec<i64>,
        }
        let raw = Raw::deserialize(d)?;
        StandardWord::new(raw.tops, raw.bottoms).map_err(serde::de::Error::custom)
    }
}

/// Column `(top over bottom)` becomes the segment `(bottom, top)`.
pub fn word_to_seq(w: &StandardWord) -> SegmentSeq {
    SegmentSeq(
        w.tops
            .iter()
            .zip(&w.bottoms)
            .map(|(&hi, &lo)| SegmentZ { lo, hi })
            .collect(),
    )
}

pub fn seq_to_word(seq: &SegmentSeq) -> Result<StandardWord> {
    if let Some(k) = seq.0.windows(2).position(|w| !precedes(&w[0], &w[1])) {
        return Err(Error::NonStandardSequence(k + 1));
    }
    Ok(StandardWord {
        tops: seq.0.iter().map(SegmentZ::hi).collect(),
        bottoms: seq.0.iter().map(SegmentZ::lo).collect(),
    })
}

pub fn word_to_multisegment(w: &StandardWord) -> MultisegmentZ {
    MultisegmentZ(word_to_seq(w).0)
}

pub fn multisegment_to_word(ms: &MultisegmentZ) -> StandardWord {
    StandardWord {
        tops: ms.0.iter().map(SegmentZ::hi).collect(),
        bottoms: ms.0.iter().map(SegmentZ::lo).collect(),
    }
}

pub fn shift(ms: &MultisegmentZ, c: i64) -> MultisegmentZ {
    // a uniform shift preserves the standard order
    MultisegmentZ(ms.0.iter().map(|s| s.shifted(c)).collect())
}

/// Segment lengths in order.
pub fn mu_of(seq: &SegmentSeq) -> Composition {
    Composition(seq.0.iter().map(SegmentZ::len).collect())
}

pub fn multiseg_inverse(ms: &MultisegmentZ) -> MultisegmentZ {
    MultisegmentZ::new(ms.0.iter().map(SegmentZ::inverse).collect())
}

/// All segments with endpoints in `lo..=hi` and length at most `max_len`,
/// in standard order.
pub fn segments_in_window(lo: i64, hi: i64, max_len: usize) -> Vec<SegmentZ> {
    let mut out = Vec::new();
    for top in lo..=hi {
        for bottom in (lo..=top).rev() {
            if (top - bottom + 1) as usize <= max_len {
                out.push(SegmentZ {
                    lo: bottom,
                    hi: top,
                });
            }
        }
    }
    out.sort_by(SegmentZ::cmp_standard);
    out
}

/// All multisegments of total length `r` whose endpoints lie in `lo..=hi`.
///
/// Output is sorted by canonical sequence, so it is deterministic.
pub fn multisegments_in_window(r: usize, lo: i64, hi: i64) -> Vec<MultisegmentZ> {
    multisegments_from(&segments_in_window(lo, hi, r), r)
}

/// All multisets of total length `r` drawn from `segs`, which must be
/// sorted in standard order without repeats.
pub fn multisegments_from(segs: &[SegmentZ], r: usize) -> Vec<MultisegmentZ> {
    let mut out = Vec::new();
    fn rec(
        start: usize,
        rest: usize,
        segs: &[SegmentZ],
        cur: &mut Vec<SegmentZ>,
        out: &mut Vec<MultisegmentZ>,
    ) {
        if rest == 0 {
            out.push(MultisegmentZ(cur.clone()));
            return;
        }
        for k in start..segs.len() {
            let len = segs[k].len();
            if len <= rest {
                cur.push(segs[k]);
                rec(k, rest - len, segs, cur, out);
                cur.pop();
            }
        }
    }
    if r > 0 {
        rec(0, r, segs, &mut Vec::new(), &mut out);
    }
    out
}

/// Standard words of size `r` with all entries in `lo..=hi`.
pub fn standard_words_in_window(r: usize, lo: i64, hi: i64) -> Vec<StandardWord> {
    multisegments_in_window(r, lo, hi)
        .iter()
        .map(multisegment_to_word)
        .collect()
}
