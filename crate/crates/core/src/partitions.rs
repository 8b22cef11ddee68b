//! Shapes, tableaux, permutations and the classical counting oracles.
//!
//! Everything here is plain integer data. Nodes are 1-based `(row, col)`
//! pairs tagged with a 1-based component index, and residues are stored as
//! the integer exponent `e` of `q^{2e}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; any increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based part lookup; parts past the length are zero.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Same as [`Partition::part`] but tolerant of non-positive or signed indices.
    pub fn part_signed(&self, i: i64) -> usize {
        if i < 1 {
            0
        } else {
            self.part(i as usize)
        }
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Nodes `(row, col)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

/// A finite sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The conjugate partition `μ'_i = #{k : μ_k >= i}`.
    pub fn conjugate(&self) -> Partition {
        let max = self.0.iter().copied().max().unwrap_or(0);
        Partition(
            (1..=max)
                .map(|i| self.0.iter().filter(|&&m| m >= i).count())
                .collect(),
        )
    }

    /// Compositions of `n` into positive parts, lexicographic.
    pub fn all_positive(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for p in 1..=rest {
                cur.push(p);
                rec(rest - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }

    /// Weak compositions of `n` into exactly `m` parts, lexicographic.
    pub fn all_weak(n: usize, m: usize) -> Vec<Composition> {
        fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if slots == 1 {
                cur.push(rest);
                out.push(Composition(cur.clone()));
                cur.pop();
                return;
            }
            for p in 0..=rest {
                cur.push(p);
                rec(rest - p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if m > 0 {
            rec(n, m, &mut Vec::new(), &mut out);
        }
        out
    }
}

/// An `m`-tuple of partitions, `m >= 1`. Components may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyMultipartition);
        }
        Ok(Multipartition(components))
    }

    pub fn from_parts(components: Vec<Vec<usize>>) -> Result<Self> {
        let comps = components
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>>>()?;
        Multipartition::new(comps)
    }

    pub fn single(p: Partition) -> Self {
        Multipartition(vec![p])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    /// 1-based component access.
    pub fn component(&self, k: usize) -> &Partition {
        &self.0[k - 1]
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn is_sincere(&self) -> bool {
        self.0.iter().all(|p| !p.is_empty())
    }

    pub fn conjugate(&self) -> Multipartition {
        multipartition_conjugate(self)
    }

    /// Concatenation of the components, `λ∨`.
    pub fn concatenation(&self) -> Composition {
        Composition(
            self.0
                .iter()
                .flat_map(|p| p.parts().iter().copied())
                .collect(),
        )
    }

    /// The cut vector `[λ] = [a_0, …, a_m]` of running sizes.
    pub fn cut_vector(&self) -> Vec<usize> {
        let mut out = vec![0];
        let mut acc = 0;
        for p in &self.0 {
            acc += p.size();
            out.push(acc);
        }
        out
    }

    /// All nodes in (component, row, column) order.
    pub fn nodes(&self) -> Vec<Node> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(k, p)| p.cells().map(move |(row, col)| Node::new(k + 1, row, col)))
            .collect()
    }

    /// All `m`-multipartitions of `r`: sizes by weak composition, then
    /// partitions of each size in decreasing lexicographic order.
    pub fn all_of_size(m: usize, r: usize) -> Vec<Multipartition> {
        let mut out = Vec::new();
        for sizes in Composition::all_weak(r, m) {
            let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
            for &s in sizes.parts() {
                let choices = Partition::all_of_size(s);
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        choices.iter().map(move |c| {
                            let mut next = prefix.clone();
                            next.push(c.clone());
                            next
                        })
                    })
                    .collect();
            }
            out.extend(acc.into_iter().map(Multipartition));
        }
        out
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl<'de> Deserialize<'de> for Multipartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let comps = Vec::<Partition>::deserialize(d)?;
        Multipartition::new(comps).map_err(serde::de::Error::custom)
    }
}

/// A node `(row, col)` of component `comp`; all 1-based.
///
/// Field order makes the derived ordering (component, row, column).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(comp: usize, row: usize, col: usize) -> Self {
        Node { comp, row, col }
    }

    pub fn cell(row: usize, col: usize) -> Self {
        Node { comp: 1, row, col }
    }

    /// Content `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// Residue exponent of a node: `f_k + col - row`, so the residue is `q^{2e}`.
///
/// Plain partitions and skew shapes use the zero charge.
pub fn node_residue(node: &Node, charge: Option<&[i64]>) -> i64 {
    let offset = charge.map(|f| f[node.comp - 1]).unwrap_or(0);
    offset + node.content()
}

/// `λ/ν` with `ν ⊆ λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.0,
                inner: inner.0,
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn from_parts(outer: Vec<usize>, inner: Vec<usize>) -> Result<Self> {
        SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)
    }

    pub fn straight(p: Partition) -> Self {
        SkewShape {
            outer: p,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.outer.part(row) && col > self.inner.part(row)
    }

    /// Cells in row-major order, as component-1 nodes.
    pub fn nodes(&self) -> Vec<Node> {
        self.outer
            .cells()
            .filter(|&(i, j)| j > self.inner.part(i))
            .map(|(i, j)| Node::cell(i, j))
            .collect()
    }

    /// `λ'_j - ν'_j` for `j = 1..=λ_1`.
    pub fn column_lengths(&self) -> Vec<usize> {
        let lc = self.outer.conjugate();
        let nc = self.inner.conjugate();
        (1..=self.outer.first())
            .map(|j| lc.part(j) - nc.part(j))
            .collect()
    }

    /// All skew shapes `λ/ν` with `|λ| <= outer_max`, ordered by `λ` size,
    /// then `λ` descending, then `ν` size and `ν` descending.
    pub fn all_with_outer_max(outer_max: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for n in 0..=outer_max {
            for lam in Partition::all_of_size(n) {
                for k in 0..=n {
                    for nu in Partition::all_of_size(k) {
                        if lam.contains(&nu) {
                            out.push(SkewShape {
                                outer: lam.clone(),
                                inner: nu,
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            outer: Partition,
            #[serde(default)]
            inner: Partition,
        }
        let raw = Raw::deserialize(d)?;
        SkewShape::new(raw.outer, raw.inner).map_err(serde::de::Error::custom)
    }
}

/// The three kinds of diagram a tableau can live on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Shape {
    Partition(Partition),
    Multipartition(Multipartition),
    Skew(SkewShape),
}

impl Shape {
    pub fn nodes(&self) -> Vec<Node> {
        match self {
            Shape::Partition(p) => p.cells().map(|(i, j)| Node::cell(i, j)).collect(),
            Shape::Multipartition(mp) => mp.nodes(),
            Shape::Skew(s) => s.nodes(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Shape::Partition(p) => p.size(),
            Shape::Multipartition(mp) => mp.size(),
            Shape::Skew(s) => s.size(),
        }
    }
}

impl From<Partition> for Shape {
    fn from(p: Partition) -> Self {
        Shape::Partition(p)
    }
}

impl From<Multipartition> for Shape {
    fn from(mp: Multipartition) -> Self {
        Shape::Multipartition(mp)
    }
}

impl From<SkewShape> for Shape {
    fn from(s: SkewShape) -> Self {
        Shape::Skew(s)
    }
}

/// A bijective labelling of the nodes of a shape by `1..=r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Shape,
    labels: BTreeMap<Node, usize>,
}

impl Tableau {
    pub fn new(shape: Shape, labels: BTreeMap<Node, usize>) -> Result<Self> {
        let nodes = shape.nodes();
        let r = nodes.len();
        let mut seen = vec![false; r + 1];
        let ok = labels.len() == r
            && nodes.iter().all(|n| labels.contains_key(n))
            && labels
                .values()
                .all(|&l| (1..=r).contains(&l) && !std::mem::replace(&mut seen[l], true));
        if !ok {
            return Err(Error::NotAPermutation(labels.values().copied().collect()));
        }
        Ok(Tableau { shape, labels })
    }

    /// Labels given in the shape's node order.
    pub fn from_sequence(shape: Shape, seq: &[usize]) -> Result<Self> {
        let labels = shape.nodes().into_iter().zip(seq.iter().copied()).collect();
        Tableau::new(shape, labels)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &BTreeMap<Node, usize> {
        &self.labels
    }

    pub fn label_at(&self, node: &Node) -> Option<usize> {
        self.labels.get(node).copied()
    }

    /// Labels in canonical node order.
    pub fn sequence(&self) -> Vec<usize> {
        self.labels.values().copied().collect()
    }

    /// Node occupied by each label; index 0 holds label 1.
    pub fn positions(&self) -> Vec<Node> {
        let mut pos = vec![Node::cell(0, 0); self.labels.len()];
        for (n, &l) in &self.labels {
            pos[l - 1] = *n;
        }
        pos
    }

    pub fn node_of(&self, label: usize) -> Option<Node> {
        self.labels
            .iter()
            .find(|(_, &l)| l == label)
            .map(|(n, _)| *n)
    }

    /// Residue exponents `res_T(1), …, res_T(r)`.
    pub fn residues(&self, charge: Option<&[i64]>) -> Vec<i64> {
        self.positions()
            .iter()
            .map(|n| node_residue(n, charge))
            .collect()
    }

    pub fn residue_of(&self, label: usize, charge: Option<&[i64]>) -> i64 {
        node_residue(&self.positions()[label - 1], charge)
    }

    /// Rows increase left to right and columns increase downwards.
    pub fn is_standard(&self) -> bool {
        self.labels.iter().all(|(n, &l)| {
            let right = Node::new(n.comp, n.row, n.col + 1);
            let below = Node::new(n.comp, n.row + 1, n.col);
            self.labels.get(&right).is_none_or(|&x| x > l)
                && self.labels.get(&below).is_none_or(|&x| x > l)
        })
    }

    /// `σ·T`: every label `k` becomes `σ(k)`.
    pub fn permuted(&self, sigma: &Permutation) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            labels: self
                .labels
                .iter()
                .map(|(n, &l)| (*n, sigma.apply(l)))
                .collect(),
        }
    }

    /// Swap the labels `i` and `i + 1`.
    pub fn swap_adjacent(&self, i: usize) -> Tableau {
        self.permuted(&Permutation::simple(self.size(), i))
    }

    /// JSON form `{"shape": …, "rows": …}` with `null` for inner cells of skew shapes.
    pub fn to_json(&self) -> Value {
        let rows_of = |p: &Partition, comp: usize, inner: Option<&Partition>| -> Value {
            let rows: Vec<Value> = (1..=p.len())
                .map(|i| {
                    let cells: Vec<Value> = (1..=p.part(i))
                        .map(|j| {
                            if inner.is_some_and(|nu| j <= nu.part(i)) {
                                Value::Null
                            } else {
                                json!(self.labels[&Node::new(comp, i, j)])
                            }
                        })
                        .collect();
                    Value::Array(cells)
                })
                .collect();
            Value::Array(rows)
        };
        let rows = match &self.shape {
            Shape::Partition(p) => rows_of(p, 1, None),
            Shape::Multipartition(mp) => Value::Array(
                mp.components()
                    .iter()
                    .enumerate()
                    .map(|(k, p)| rows_of(p, k + 1, None))
                    .collect(),
            ),
            Shape::Skew(s) => rows_of(s.outer(), 1, Some(s.inner())),
        };
        json!({ "shape": self.shape, "rows": rows })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut comp = 0;
        let mut row = 0;
        write!(f, "(")?;
        for (n, l) in &self.labels {
            if n.comp != comp {
                if comp != 0 {
                    write!(f, "),(")?;
                }
                comp = n.comp;
                row = n.row;
            } else if n.row != row {
                write!(f, "/")?;
                row = n.row;
            }
            write!(f, "{l}")?;
            if self.size() >= 10 {
                write!(f, " ")?;
            }
        }
        write!(f, ")")
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(images));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// The transposition `(a, b)` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(a - 1, b - 1);
        Permutation(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (k, &x) in self.0.iter().enumerate() {
            inv[x - 1] = k + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x - 1]).collect())
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.0.len();
        let mut inv = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.0[a] > self.0[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `s_i ∘ self` lengthens `self` iff `i` appears before `i+1` in one-line notation.
    pub fn left_ascent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i) < inv.apply(i + 1)
    }

    /// `self ∘ s_i` lengthens `self` iff `self(i) < self(i+1)`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.0[i - 1] < self.0[i]
    }

    /// `s_i ∘ self`: swap the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        Permutation(
            self.0
                .iter()
                .map(|&x| {
                    if x == i {
                        i + 1
                    } else if x == i + 1 {
                        i
                    } else {
                        x
                    }
                })
                .collect(),
        )
    }

    /// `self ∘ s_i`: swap the positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// The lexicographically smallest reduced word `[i_1, …, i_k]` with
    /// `self = s_{i_1} ∘ ⋯ ∘ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (1..w.degree()).find(|&i| !w.left_ascent(i)) {
            word.push(i);
            w = w.left_mul_simple(i);
        }
        word
    }

    /// All permutations of `1..=n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(k) = (0..n.saturating_sub(1))
                .rev()
                .find(|&k| cur[k] < cur[k + 1])
            else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| cur[l] > cur[k]).unwrap();
            cur.swap(k, l);
            cur[k + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Permutation::new(Vec::<usize>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    let first = p.first();
    Partition(
        (1..=first)
            .map(|i| p.0.iter().filter(|&&x| x >= i).count())
            .collect(),
    )
}

/// `(λ^(1),…,λ^(m))' = (λ^(m)',…,λ^(1)')`.
pub fn multipartition_conjugate(mp: &Multipartition) -> Multipartition {
    Multipartition(mp.0.iter().rev().map(conjugate).collect())
}

/// `t^λ`: labels `1..r` along successive rows of the first component, then the next.
pub fn row_reading_tableau(mp: &Multipartition) -> Tableau {
    let labels = mp
        .nodes()
        .into_iter()
        .enumerate()
        .map(|(k, n)| (n, k + 1))
        .collect();
    Tableau {
        shape: Shape::Multipartition(mp.clone()),
        labels,
    }
}

/// `t_λ`: labels along successive columns of the last component, then the second last.
pub fn column_reading_tableau(mp: &Multipartition) -> Tableau {
    let mut labels = BTreeMap::new();
    let mut next = 1;
    for k in (1..=mp.m()).rev() {
        let p = mp.component(k);
        let pc = p.conjugate();
        for j in 1..=p.first() {
            for i in 1..=pc.part(j) {
                labels.insert(Node::new(k, i, j), next);
                next += 1;
            }
        }
    }
    Tableau {
        shape: Shape::Multipartition(mp.clone()),
        labels,
    }
}

/// Column reading of a single partition, returned on a partition shape.
pub fn column_reading_partition(p: &Partition) -> Tableau {
    let t = column_reading_tableau(&Multipartition::single(p.clone()));
    Tableau {
        shape: Shape::Partition(p.clone()),
        labels: t.labels,
    }
}

/// Row reading of a single partition, returned on a partition shape.
pub fn row_reading_partition(p: &Partition) -> Tableau {
    let t = row_reading_tableau(&Multipartition::single(p.clone()));
    Tableau {
        shape: Shape::Partition(p.clone()),
        labels: t.labels,
    }
}

/// `t_{λ/ν}`: labels `1..r` down successive columns, left to right.
pub fn skew_column_reading_tableau(s: &SkewShape) -> Tableau {
    let mut labels = BTreeMap::new();
    let mut next = 1;
    for j in 1..=s.outer.first() {
        for i in 1..=s.outer.len() {
            if s.contains_cell(i, j) {
                labels.insert(Node::cell(i, j), next);
                next += 1;
            }
        }
    }
    Tableau {
        shape: Shape::Skew(s.clone()),
        labels,
    }
}

/// The permutation `w` with `w·t^λ = t_λ`.
pub fn w_lambda(mp: &Multipartition) -> Permutation {
    let rows = row_reading_tableau(mp);
    let cols = column_reading_tableau(mp);
    let mut img = vec![0; mp.size()];
    for (n, &l) in &rows.labels {
        img[l - 1] = cols.labels[n];
    }
    Permutation(img)
}

pub fn w_partition(p: &Partition) -> Permutation {
    w_lambda(&Multipartition::single(p.clone()))
}

/// The block-reversing permutation `w_a(a_{j-1} + k) = r - a_j + k`.
pub fn w_of_cutpoints(a: &[usize]) -> Result<Permutation> {
    if a.is_empty() || a[0] != 0 || a.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadCutVector(a.to_vec()));
    }
    let r = *a.last().unwrap();
    let mut img = vec![0; r];
    for j in 1..a.len() {
        for k in 1..=a[j] - a[j - 1] {
            img[a[j - 1] + k - 1] = r - a[j] + k;
        }
    }
    Ok(Permutation(img))
}

/// All standard tableaux of a shape, sorted by their label sequence in node order.
///
/// Labels are placed from the largest down, each time on a corner of the
/// cells still unlabelled.
pub fn standard_tableaux(shape: &Shape) -> Vec<Tableau> {
    let nodes = shape.nodes();
    let r = nodes.len();
    let index: BTreeMap<Node, usize> = nodes.iter().enumerate().map(|(k, n)| (*n, k)).collect();
    let right: Vec<Option<usize>> = nodes
        .iter()
        .map(|n| index.get(&Node::new(n.comp, n.row, n.col + 1)).copied())
        .collect();
    let below: Vec<Option<usize>> = nodes
        .iter()
        .map(|n| index.get(&Node::new(n.comp, n.row + 1, n.col)).copied())
        .collect();

    fn rec(
        label: usize,
        filled: &mut Vec<usize>,
        right: &[Option<usize>],
        below: &[Option<usize>],
        out: &mut Vec<Vec<usize>>,
    ) {
        if label == 0 {
            out.push(filled.clone());
            return;
        }
        for c in 0..filled.len() {
            if filled[c] != 0 {
                continue;
            }
            let free = |x: Option<usize>| x.is_none_or(|k| filled[k] != 0);
            if free(right[c]) && free(below[c]) {
                filled[c] = label;
                rec(label - 1, filled, right, below, out);
                filled[c] = 0;
            }
        }
    }

    let mut seqs = Vec::new();
    rec(r, &mut vec![0; r], &right, &below, &mut seqs);
    seqs.sort();
    seqs.into_iter()
        .map(|seq| Tableau {
            shape: shape.clone(),
            labels: nodes.iter().copied().zip(seq).collect(),
        })
        .collect()
}

/// `r! / ∏ hooks`.
pub fn hook_length_count(p: &Partition) -> u128 {
    let pc = p.conjugate();
    let mut num: u128 = (1..=p.size() as u128).product();
    let mut den: u128 = 1;
    for (i, j) in p.cells() {
        let hook = (p.part(i) - j) + (pc.part(j) - i) + 1;
        den *= hook as u128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Number of Littlewood–Richardson tableaux of shape `λ/ν` and content `γ`.
///
/// Cells are filled in reverse reading order (rows top to bottom, each row
/// right to left); the running content must stay a lattice word.
pub fn lr_coefficient(lam: &Partition, nu: &Partition, gam: &Partition) -> u64 {
    if lam.size() != nu.size() + gam.size() || !lam.contains(nu) {
        return 0;
    }
    let Ok(shape) = SkewShape::new(lam.clone(), nu.clone()) else {
        return 0;
    };
    let mut order = Vec::new();
    for i in 1..=lam.len() {
        for j in (nu.part(i) + 1..=lam.part(i)).rev() {
            order.push((i, j));
        }
    }
    let mut fill: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut content = vec![0usize; gam.len() + 1];

    fn rec(
        k: usize,
        order: &[(usize, usize)],
        shape: &SkewShape,
        gam: &Partition,
        fill: &mut BTreeMap<(usize, usize), usize>,
        content: &mut Vec<usize>,
    ) -> u64 {
        if k == order.len() {
            return 1;
        }
        let (i, j) = order[k];
        // rows weakly increase, so the value is at most its right neighbour
        let max = if shape.contains_cell(i, j + 1) {
            fill[&(i, j + 1)]
        } else {
            gam.len()
        };
        // columns strictly increase
        let min = if i > 1 && shape.contains_cell(i - 1, j) {
            fill[&(i - 1, j)] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in min..=max {
            if content[v] >= gam.part(v) || (v > 1 && content[v] + 1 > content[v - 1]) {
                continue;
            }
            content[v] += 1;
            fill.insert((i, j), v);
            total += rec(k + 1, order, shape, gam, fill, content);
            fill.remove(&(i, j));
            content[v] -= 1;
        }
        total
    }

    rec(0, &order, &shape, gam, &mut fill, &mut content)
}

/// `λ^(1) + ⋯ + λ^(m)`, summing padded parts.
pub fn lambda_plus(mp: &Multipartition) -> Partition {
    let len = mp
        .components()
        .iter()
        .map(Partition::len)
        .max()
        .unwrap_or(0);
    Partition(
        (1..=len)
            .map(|i| mp.components().iter().map(|p| p.part(i)).sum())
            .collect(),
    )
}

/// `ρ_i = #{j : λ'_j - ν'_j >= i}`.
pub fn rho_of_skew(s: &SkewShape) -> Partition {
    Composition(s.column_lengths()).conjugate()
}
