//! Maps between integral multisegments, standard Kleshchev multipartitions
//! and Drinfeld root data.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kleshchev::{check_standard_kleshchev, f_star, Charge};
use crate::partitions::{Multipartition, Partition, SkewShape};
use crate::segments::{MultisegmentZ, SegmentSeq, SegmentZ, StandardWord};

/// Root exponents of `Q_1, …, Q_n`, where `Q_i(x) = ∏_{e} (1 - q^e x)`.
///
/// Exponents are in powers of `q` (not `q²`), each list kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DrinfeldRoots {
    n: usize,
    roots: Vec<Vec<i64>>,
}

impl DrinfeldRoots {
    pub fn new(n: usize, mut roots: Vec<Vec<i64>>) -> Result<Self> {
        if n == 0 || roots.len() != n {
            return Err(Error::BadRootShape);
        }
        for r in &mut roots {
            r.sort_unstable();
        }
        Ok(DrinfeldRoots { n, roots })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// 1-based root list of `Q_i`.
    pub fn roots_of(&self, i: usize) -> &[i64] {
        &self.roots[i - 1]
    }

    /// Total degree `Σ_i deg Q_i`.
    pub fn degree(&self) -> usize {
        self.roots.iter().map(Vec::len).sum()
    }

    pub fn is_integral(&self) -> bool {
        self.roots.iter().flatten().all(|e| e % 2 == 0)
    }
}

impl fmt::Display for DrinfeldRoots {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, r) in self.roots.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (t, e) in r.iter().enumerate() {
                if t > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, ")")
    }
}

impl<'de> Deserialize<'de> for DrinfeldRoots {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            roots: Vec<Vec<i64>>,
        }
        let raw = Raw::deserialize(d)?;
        DrinfeldRoots::new(raw.n, raw.roots).map_err(serde::de::Error::custom)
    }
}

/// Split the standard sequence into maximal runs along which tops step up
/// by one and bottoms strictly rise.
fn groups(ms: &MultisegmentZ) -> Vec<&[SegmentZ]> {
    let segs = ms.segments();
    let mut out = Vec::new();
    let mut start = 0;
    for a in 1..segs.len() {
        let (prev, cur) = (&segs[a - 1], &segs[a]);
        if !(cur.hi() == prev.hi() + 1 && prev.lo() < cur.lo()) {
            out.push(&segs[start..a]);
            start = a;
        }
    }
    if !segs.is_empty() {
        out.push(&segs[start..]);
    }
    out
}

/// The multipartition of group lengths and the charge of group starting tops.
///
/// The `a`-th group contributes the partition of its segment lengths; the
/// charge lists the first top of each group, last group first.
pub fn eta(ms: &MultisegmentZ) -> Result<(Multipartition, Charge)> {
    if ms.is_empty() {
        return Err(Error::EmptyMultisegment);
    }
    let gs = groups(ms);
    let comps = gs
        .iter()
        .map(|g| Partition::new(g.iter().map(SegmentZ::len).collect()))
        .collect::<Result<Vec<_>>>()?;
    let f = gs.iter().rev().map(|g| g[0].hi()).collect();
    Ok((Multipartition::new(comps)?, Charge::new(f)?))
}

/// Inverse of [`eta`]: column `c = k_1+…+k_{a-1}+b` of the word has top
/// `f_{m-a+1} + b - 1` and bottom `f_{m-a+1} - γ^(a)_b + b`.
pub fn theta(gamma: &Multipartition, f: &Charge) -> Result<StandardWord> {
    check_standard_kleshchev(gamma, &f_star(f))?;
    let m = gamma.m();
    let mut tops = Vec::with_capacity(gamma.size());
    let mut bottoms = Vec::with_capacity(gamma.size());
    for a in 1..=m {
        let base = f.get(m - a + 1);
        for (b, &part) in gamma.component(a).parts().iter().enumerate() {
            let b = b as i64 + 1;
            tops.push(base + b - 1);
            bottoms.push(base - part as i64 + b);
        }
    }
    StandardWord::new(tops, bottoms)
}

/// `Q_k` has a root `q^{2(j+1-k)}` for every segment `(i, j)` of length at least `k`.
pub fn partial_map(ms: &MultisegmentZ, n: usize) -> Result<DrinfeldRoots> {
    if let Some(s) = ms.segments().iter().find(|s| s.len() > n) {
        return Err(Error::SegmentTooLong { len: s.len(), n });
    }
    let roots = (1..=n as i64)
        .map(|k| {
            ms.segments()
                .iter()
                .filter(|s| s.len() as i64 >= k)
                .map(|s| 2 * (s.hi() + 1 - k))
                .collect()
        })
        .collect();
    DrinfeldRoots::new(n.max(1), roots)
}

fn counts(xs: impl IntoIterator<Item = i64>) -> BTreeMap<i64, usize> {
    let mut m = BTreeMap::new();
    for x in xs {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

/// Exponents of `P_i = Q_i(xq^{i-1}) / Q_{i+1}(xq^{i+1})`, or `None` if the
/// ratio is not a polynomial. `i` is 1-based.
fn ratio_exponents(q: &DrinfeldRoots, i: usize) -> Option<Vec<i64>> {
    let shift = i as i64;
    let mut num = counts(q.roots_of(i).iter().map(|e| e + shift - 1));
    if i < q.n {
        for e in q.roots_of(i + 1) {
            let c = num.get_mut(&(e + shift + 1))?;
            *c -= 1;
            if *c == 0 {
                num.remove(&(e + shift + 1));
            }
        }
    }
    Some(
        num.into_iter()
            .flat_map(|(e, c)| std::iter::repeat_n(e, c))
            .collect(),
    )
}

/// Every shifted ratio `Q_i(xq^{i-1}) / Q_{i+1}(xq^{i+1})` is a polynomial.
pub fn is_dominant(q: &DrinfeldRoots) -> bool {
    (1..q.n).all(|i| ratio_exponents(q, i).is_some())
}

/// Recover the multisegment: a root `q^p` of `P_i` is a segment of length
/// `i` with top `(p + i - 1) / 2`.
pub fn partial_inverse(q: &DrinfeldRoots) -> Result<MultisegmentZ> {
    if let Some(&e) = q.roots.iter().flatten().find(|e| *e % 2 != 0) {
        return Err(Error::NotIntegral(e));
    }
    let mut segs = Vec::new();
    for i in 1..=q.n {
        let ps = ratio_exponents(q, i).ok_or(Error::NotDominant(i))?;
        for p in ps {
            let hi = (p + i as i64 - 1) / 2;
            segs.push(SegmentZ::new(hi - i as i64 + 1, hi)?);
        }
    }
    Ok(MultisegmentZ::new(segs))
}

/// `Q_i` has a root `q^{2(f_k + j - i)}` for each node `(i, j)` of component `k`.
pub fn drinfeld_from_multipartition(
    mp: &Multipartition,
    f: &Charge,
    n: usize,
) -> Result<DrinfeldRoots> {
    if mp.m() != f.m() {
        return Err(Error::LengthMismatch {
            components: mp.m(),
            charge: f.m(),
        });
    }
    for (k, p) in mp.components().iter().enumerate() {
        if p.len() > n {
            return Err(Error::TooManyRows {
                component: k + 1,
                rows: p.len(),
                n,
            });
        }
    }
    let roots = (1..=n)
        .map(|i| {
            mp.components()
                .iter()
                .enumerate()
                .flat_map(|(k, p)| {
                    let fk = f.get(k + 1);
                    (1..=p.part(i) as i64).map(move |j| 2 * (fk + j - i as i64))
                })
                .collect()
        })
        .collect();
    DrinfeldRoots::new(n.max(1), roots)
}

/// Multiply every root parameter by `q^{2c}`.
pub fn omega_twist(q: &DrinfeldRoots, c: i64) -> DrinfeldRoots {
    DrinfeldRoots {
        n: q.n,
        roots: q
            .roots
            .iter()
            .map(|r| r.iter().map(|e| e + 2 * c).collect())
            .collect(),
    }
}

/// One segment `(j - λ'_j, j - ν'_j - 1)` per nonempty column `j`, left to right.
pub fn skew_multisegment(s: &SkewShape) -> Result<SegmentSeq> {
    if s.is_empty() {
        return Err(Error::EmptySkewShape);
    }
    let lc = s.outer().conjugate();
    let nc = s.inner().conjugate();
    let mut out = Vec::new();
    for j in 1..=s.outer().first() {
        let (top, bottom) = (lc.part(j), nc.part(j));
        if top > bottom {
            let j = j as i64;
            out.push(SegmentZ::new(j - top as i64, j - bottom as i64 - 1)?);
        }
    }
    Ok(SegmentSeq(out))
}

/// `Q_i` has a root `q^{2(j - i - ν'_j)}` for each column `j` with at least `i` boxes.
pub fn skew_drinfeld(s: &SkewShape, n: usize) -> Result<DrinfeldRoots> {
    let lengths = s.column_lengths();
    if let Some((j, &len)) = lengths.iter().enumerate().find(|(_, &l)| l > n) {
        return Err(Error::ColumnTooLong {
            column: j + 1,
            len,
            n,
        });
    }
    let nc = s.inner().conjugate();
    let roots = (1..=n)
        .map(|i| {
            lengths
                .iter()
                .enumerate()
                .filter(|(_, &l)| l >= i)
                .map(|(j, _)| 2 * ((j + 1) as i64 - i as i64 - nc.part(j + 1) as i64))
                .collect()
        })
        .collect();
    DrinfeldRoots::new(n.max(1), roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kleshchev::column_residual_segments;
    use crate::segments::{multisegment_to_word, shift, word_to_multisegment};

    fn mp(v: &[&[usize]]) -> Multipartition {
        Multipartition::from_parts(v.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn ch(v: &[i64]) -> Charge {
        Charge::new(v.to_vec()).unwrap()
    }

    fn ms(pairs: &[(i64, i64)]) -> MultisegmentZ {
        MultisegmentZ::from_pairs(pairs).unwrap()
    }

    fn roots(n: usize, r: &[&[i64]]) -> DrinfeldRoots {
        DrinfeldRoots::new(n, r.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    fn example_word() -> StandardWord {
        StandardWord::new(vec![-1, 0, 1, 2, 2], vec![-4, -5, -2, -1, -2]).unwrap()
    }

    #[test]
    fn eta_on_worked_word() {
        let (gamma, f) = eta(&word_to_multisegment(&example_word())).unwrap();
        assert_eq!(gamma, mp(&[&[4], &[6, 4, 4], &[5]]));
        assert_eq!(f, ch(&[2, 0, -1]));
        assert_eq!(
            gamma.conjugate(),
            mp(&[&[1, 1, 1, 1, 1], &[3, 3, 3, 3, 1, 1], &[1, 1, 1, 1]])
        );
    }

    #[test]
    fn eta_small_cases() {
        assert_eq!(eta(&ms(&[(-2, 3)])).unwrap(), (mp(&[&[6]]), ch(&[3])));
        assert_eq!(
            eta(&ms(&[(0, 0), (0, 0)])).unwrap(),
            (mp(&[&[1], &[1]]), ch(&[0, 0]))
        );
        assert_eq!(eta(&ms(&[])), Err(Error::EmptyMultisegment));
    }

    #[test]
    fn theta_inverts_eta() {
        let word = theta(&mp(&[&[4], &[6, 4, 4], &[5]]), &ch(&[2, 0, -1])).unwrap();
        assert_eq!(word, example_word());
        let single = theta(&mp(&[&[3]]), &ch(&[5])).unwrap();
        assert_eq!(single, StandardWord::new(vec![5], vec![3]).unwrap());
    }

    #[test]
    fn theta_rejects_non_standard_kleshchev() {
        let err = theta(&mp(&[&[2], &[1]]), &ch(&[0, 0])).unwrap_err();
        assert!(matches!(err, Error::NotStandardKleshchev(_)));
    }

    #[test]
    fn column_segments_feed_eta() {
        let lam = mp(&[&[1, 1, 1, 1, 1], &[3, 3, 3, 3, 1, 1], &[1, 1, 1, 1]]);
        let f = ch(&[2, 0, -1]);
        let seq = column_residual_segments(&lam, &f).unwrap();
        let (gamma, g) = eta(&MultisegmentZ::from(seq)).unwrap();
        assert_eq!((gamma, g), (lam.conjugate(), f));
    }

    #[test]
    fn partial_examples() {
        assert_eq!(
            partial_map(&ms(&[(0, 2)]), 3).unwrap(),
            roots(3, &[&[4], &[2], &[0]])
        );
        assert_eq!(
            partial_map(&ms(&[(-1, -1), (0, 1)]), 2).unwrap(),
            roots(2, &[&[-2, 2], &[0]])
        );
        assert_eq!(partial_map(&ms(&[(0, 0)]), 1).unwrap(), roots(1, &[&[0]]));
        assert!(partial_map(&ms(&[(0, 2)]), 2).is_err());
    }

    #[test]
    fn partial_inverse_examples() {
        assert_eq!(
            partial_inverse(&roots(3, &[&[4], &[2], &[0]])).unwrap(),
            ms(&[(0, 2)])
        );
        assert_eq!(partial_inverse(&roots(1, &[&[0]])).unwrap(), ms(&[(0, 0)]));
        assert_eq!(
            partial_inverse(&roots(2, &[&[0], &[0]])),
            Err(Error::NotDominant(1))
        );
        assert_eq!(
            partial_inverse(&roots(1, &[&[1]])),
            Err(Error::NotIntegral(1))
        );
    }

    #[test]
    fn dominance() {
        assert!(is_dominant(&roots(2, &[&[-2, 2], &[0]])));
        assert!(!is_dominant(&roots(2, &[&[0], &[0]])));
        assert!(is_dominant(&roots(1, &[&[]])));
    }

    #[test]
    fn from_multipartition() {
        assert_eq!(
            drinfeld_from_multipartition(&mp(&[&[1]]), &ch(&[0]), 1).unwrap(),
            roots(1, &[&[0]])
        );
        assert_eq!(
            drinfeld_from_multipartition(&mp(&[&[2, 1]]), &ch(&[0]), 2).unwrap(),
            roots(2, &[&[0, 2], &[-2]])
        );
        assert!(drinfeld_from_multipartition(&mp(&[&[1, 1, 1]]), &ch(&[0]), 2).is_err());
    }

    #[test]
    fn twist() {
        assert_eq!(omega_twist(&roots(1, &[&[0]]), 1), roots(1, &[&[2]]));
        let q = roots(2, &[&[-2, 2], &[0]]);
        assert_eq!(omega_twist(&q, 0), q);
        let m = ms(&[(-1, -1), (0, 1)]);
        assert_eq!(
            partial_map(&shift(&m, 3), 2).unwrap(),
            omega_twist(&partial_map(&m, 2).unwrap(), 3)
        );
    }

    #[test]
    fn skew_readings() {
        let s = SkewShape::from_parts(vec![2, 2], vec![1]).unwrap();
        let seq = skew_multisegment(&s).unwrap();
        assert_eq!(seq.segments(), ms(&[(-1, -1), (0, 1)]).segments());
        assert_eq!(skew_drinfeld(&s, 2).unwrap(), roots(2, &[&[-2, 2], &[0]]));
        let one = SkewShape::from_parts(vec![1], vec![]).unwrap();
        assert_eq!(
            skew_multisegment(&one).unwrap().segments(),
            ms(&[(0, 0)]).segments()
        );
        assert_eq!(skew_drinfeld(&one, 1).unwrap(), roots(1, &[&[0]]));
        let s = SkewShape::from_parts(vec![3, 1], vec![1]).unwrap();
        assert_eq!(
            skew_multisegment(&s).unwrap().segments(),
            ms(&[(-1, -1), (1, 1), (2, 2)]).segments()
        );
        let empty = SkewShape::from_parts(vec![2], vec![2]).unwrap();
        assert_eq!(skew_multisegment(&empty), Err(Error::EmptySkewShape));
        assert!(skew_drinfeld(&SkewShape::from_parts(vec![1, 1], vec![]).unwrap(), 1).is_err());
    }

    #[test]
    fn skipped_empty_column() {
        let s = SkewShape::from_parts(vec![2, 1], vec![1, 1]).unwrap();
        assert_eq!(
            skew_multisegment(&s).unwrap().segments(),
            ms(&[(1, 1)]).segments()
        );
        assert_eq!(
            multisegment_to_word(&ms(&[(1, 1)])),
            StandardWord::new(vec![1], vec![1]).unwrap()
        );
    }
}
