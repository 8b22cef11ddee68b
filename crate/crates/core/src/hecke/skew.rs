//! Affine Hecke modules on standard tableaux of a skew shape, with `X_k`
//! acting diagonally by residues.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::matrix::{Matrix, SparseMatrix};
use super::scalar::{format_rational, int, QParam, Scalar};
use super::{ensure_rank, Bounds};
use crate::correspondences::skew_multisegment;
use crate::error::Result;
use crate::partitions::{
    hook_length_count, lr_coefficient, skew_column_reading_tableau, standard_tableaux, Partition,
    Shape, SkewShape, Tableau,
};
use crate::report::Check;
use crate::segments::mu_of;

/// `X_1..X_r` and `T_1..T_{r-1}` on the basis of standard tableaux.
#[derive(Debug, Clone)]
pub struct SkewRepMatrices {
    pub r: usize,
    pub shape: SkewShape,
    pub q: QParam,
    pub basis: Vec<Tableau>,
    pub x: Vec<SparseMatrix>,
    pub t: Vec<SparseMatrix>,
}

impl SkewRepMatrices {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.basis.iter().position(|b| b == t)
    }
}

/// `X_k v_T = q^{2c} v_T` with `c` the content of `k` in `T`, and
/// `T_i v_T = a v_T + (1 + a) v_{s_i T}` with `a = (q²-1)/(1 - q^{2(c_i - c_{i+1})})`;
/// the second term is dropped when `s_i T` is not standard.
pub fn skew_rep_matrices(s: &SkewShape, q: &QParam) -> Result<SkewRepMatrices> {
    let r = s.size();
    ensure_rank(r, Bounds::current().skew)?;
    let basis = standard_tableaux(&Shape::Skew(s.clone()));
    let index: HashMap<Vec<usize>, usize> = basis
        .iter()
        .enumerate()
        .map(|(k, t)| (t.sequence(), k))
        .collect();
    let contents: Vec<Vec<i64>> = basis.iter().map(|t| t.residues(None)).collect();

    let x = (0..r)
        .map(|k| SparseMatrix::diagonal(contents.iter().map(|c| q.res(c[k])).collect()))
        .collect();

    let q2m1 = q.q2() - Scalar::one();
    let mut t = Vec::with_capacity(r.saturating_sub(1));
    for i in 1..r {
        let mut m = SparseMatrix::zeros(basis.len());
        for (col, tab) in basis.iter().enumerate() {
            let d = contents[col][i - 1] - contents[col][i];
            let a = &q2m1 / (Scalar::one() - q.res(d));
            let swapped = tab.swap_adjacent(i);
            if let Some(&row) = index.get(&swapped.sequence()) {
                m.set(row, col, &a + Scalar::one());
            }
            m.set(col, col, a);
        }
        t.push(m);
    }
    Ok(SkewRepMatrices {
        r,
        shape: s.clone(),
        q: q.clone(),
        basis,
        x,
        t,
    })
}

fn describe_nonzero(m: &SparseMatrix) -> String {
    if m.is_zero() {
        String::new()
    } else {
        format!("{} nonzero entries in the difference", m.nnz())
    }
}

fn relation(name: String, lhs: &SparseMatrix, rhs: &SparseMatrix) -> Check {
    let diff = lhs - rhs;
    Check::new(name, diff.is_zero(), describe_nonzero(&diff))
}

/// Every defining relation of the affine Hecke algebra as an exact matrix identity.
pub fn verify_affine_relations(m: &SkewRepMatrices) -> Vec<Check> {
    let r = m.r;
    let n = m.dim();
    let q2 = m.q.q2().clone();
    let id = SparseMatrix::identity(n);
    let mut checks = Vec::new();

    for (i, t) in m.t.iter().enumerate() {
        let prod = &t.shift_diagonal(&-q2.clone()) * &t.shift_diagonal(&int(1));
        checks.push(relation(
            format!("quadratic T{}", i + 1),
            &prod,
            &SparseMatrix::zeros(n),
        ));
    }
    for i in 1..r.saturating_sub(1) {
        let (a, b) = (&m.t[i - 1], &m.t[i]);
        checks.push(relation(
            format!("braid T{} T{}", i, i + 1),
            &(&(a * b) * a),
            &(&(b * a) * b),
        ));
    }
    for i in 1..r {
        for j in i + 2..r {
            let (a, b) = (&m.t[i - 1], &m.t[j - 1]);
            checks.push(relation(format!("commute T{i} T{j}"), &(a * b), &(b * a)));
        }
    }
    for (k, xk) in m.x.iter().enumerate() {
        let inv = match xk.as_diagonal() {
            Some(d) if d.iter().all(|v| !v.is_zero()) => {
                SparseMatrix::diagonal(d.iter().map(|v| v.recip()).collect())
            }
            _ => {
                checks.push(Check::fail(
                    format!("inverse X{}", k + 1),
                    "not an invertible diagonal matrix",
                ));
                continue;
            }
        };
        checks.push(relation(format!("inverse X{}", k + 1), &(xk * &inv), &id));
    }
    for a in 0..r {
        for b in a + 1..r {
            let (xa, xb) = (&m.x[a], &m.x[b]);
            checks.push(relation(
                format!("commute X{} X{}", a + 1, b + 1),
                &(xa * xb),
                &(xb * xa),
            ));
        }
    }
    for i in 1..r {
        let t = &m.t[i - 1];
        checks.push(relation(
            format!("T{i} X{i} T{i} = q^2 X{}", i + 1),
            &(&(t * &m.x[i - 1]) * t),
            &m.x[i].scale(&q2),
        ));
        for j in 1..=r {
            if j != i && j != i + 1 {
                let xj = &m.x[j - 1];
                checks.push(relation(format!("commute X{j} T{i}"), &(xj * t), &(t * xj)));
            }
        }
    }
    if checks.is_empty() {
        checks.push(Check::pass("empty module", "no generators"));
    }
    checks
}

/// At the column reading tableau, the `X`-eigenvalue exponents are the
/// segments of the skew shape read top-down and juxtaposed, and `T_i` acts
/// by `-1` whenever `i, i+1` lie in the same segment.
pub fn skew_weight_check(s: &SkewShape, q: &QParam) -> Result<Vec<Check>> {
    let m = skew_rep_matrices(s, q)?;
    let seq = skew_multisegment(s)?;
    let expected = seq.reversed_exponents();
    let t = skew_column_reading_tableau(s);
    let Some(v) = m.index_of(&t) else {
        return Ok(vec![Check::fail(
            "column reading tableau",
            "not in the basis",
        )]);
    };
    let actual: Vec<i64> = t.residues(None);
    let diag_ok = (0..m.r).all(|k| m.x[k].get(v, v) == q.res(expected[k]));
    let mut checks = vec![Check::new(
        "weight at column reading tableau",
        actual == expected && diag_ok,
        format!("exponents {actual:?}, segments give {expected:?}"),
    )];
    let mut boundary = Vec::new();
    let mut acc = 0;
    for len in mu_of(&seq).parts() {
        acc += len;
        boundary.push(acc);
    }
    let mut bad = Vec::new();
    let mut tested = 0;
    for i in 1..m.r {
        if boundary.contains(&i) {
            continue;
        }
        tested += 1;
        let col = m.t[i - 1].column(v);
        let ok = col.len() == 1 && col.get(&v) == Some(&int(-1));
        if !ok {
            bad.push(i);
        }
    }
    checks.push(Check::new(
        "sign inside segments",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{tested} generators act by -1")
        } else {
            format!("T_i fails for i in {bad:?}")
        },
    ));
    Ok(checks)
}

/// Dimension of the space of matrices commuting with every `X_k` and `T_i`.
///
/// A commuting matrix preserves each joint `X`-eigenspace, so only entries
/// between basis vectors with equal `X`-eigenvalues are unknowns; the
/// `T_i` equations are then solved exactly.
pub fn commutant_dimension(m: &SkewRepMatrices) -> usize {
    let n = m.dim();
    let weights: Vec<Vec<Scalar>> = (0..n)
        .map(|v| m.x.iter().map(|x| x.get(v, v)).collect())
        .collect();
    let mut unknowns: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            if weights[a] == weights[b] {
                let k = unknowns.len();
                unknowns.insert((a, b), k);
            }
        }
    }
    // (C T - T C)_{a,b} = Σ_k C_{a,k} T_{k,b} - Σ_k T_{a,k} C_{k,b}
    let mut rows = Vec::new();
    for t in &m.t {
        let dense = t.to_dense();
        for a in 0..n {
            for b in 0..n {
                let mut eq = vec![Scalar::zero(); unknowns.len()];
                let mut any = false;
                for k in 0..n {
                    if let Some(&u) = unknowns.get(&(a, k)) {
                        let c = dense.get(k, b);
                        if !c.is_zero() {
                            eq[u] += c;
                            any = true;
                        }
                    }
                    if let Some(&u) = unknowns.get(&(k, b)) {
                        let c = dense.get(a, k);
                        if !c.is_zero() {
                            eq[u] -= c;
                            any = true;
                        }
                    }
                }
                if any {
                    rows.push(eq);
                }
            }
        }
    }
    if rows.is_empty() {
        return unknowns.len();
    }
    unknowns.len() - Matrix::from_rows(rows).rank()
}

/// `#SYT(λ/ν) = Σ_γ c^λ_{νγ} f^γ`, with `f^γ` from the hook length formula.
pub fn restriction_dimension_check(s: &SkewShape) -> Vec<Check> {
    let syt = standard_tableaux(&Shape::Skew(s.clone())).len() as u128;
    let mut sum: u128 = 0;
    let mut terms = Vec::new();
    for gam in Partition::all_of_size(s.size()) {
        let c = lr_coefficient(s.outer(), s.inner(), &gam) as u128;
        if c > 0 {
            let f = hook_length_count(&gam);
            sum += c * f;
            terms.push(format!("{c}*f{gam}"));
        }
    }
    vec![Check::new(
        format!("restriction dimension {s}"),
        syt == sum,
        format!("{syt} tableaux, {} = {sum}", terms.join(" + ")),
    )]
}

/// Entries of `X_1, …, X_r` at basis vector `v`, formatted as rationals.
pub fn x_exponents(m: &SkewRepMatrices, v: usize) -> Vec<String> {
    m.x.iter().map(|x| format_rational(&x.get(v, v))).collect()
}
