//! Exhaustive verification drivers over bounded families of inputs.
//!
//! Each driver returns a flat list of [`Check`]s in a deterministic order.
//! Independent cells are evaluated in parallel and reassembled in order.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;

use crate::correspondences::{
    drinfeld_from_multipartition, eta, is_dominant, omega_twist, partial_inverse, partial_map,
    skew_drinfeld, skew_multisegment, theta,
};
use crate::hecke::finite::{jm_identity_checks, parabolic_eigen_checks};
use crate::hecke::scalar::int;
use crate::hecke::{
    commutant_dimension, ideal_dimension, jm_eigenvalue_check, regular_generator_matrices,
    sharp_twist_check, skew_rep_matrices, skew_weight_check, specht_dimension,
    verify_affine_relations, QParam, SparseMatrix,
};
use crate::kleshchev::{
    column_residual_segments, enumerate_kleshchev, enumerate_standard_kleshchev, f_star,
    row_residual_segments, Charge,
};
use crate::partitions::{
    hook_length_count, lr_coefficient, rho_of_skew, standard_tableaux, Composition, Multipartition,
    Partition, Shape, SkewShape,
};
use crate::report::Check;
use crate::segments::{
    is_standard_seq, multisegment_to_word, multisegments_from, multisegments_in_window, shift,
    word_to_multisegment, MultisegmentZ, SegmentZ,
};

fn summarize(name: String, failures: &[String], total: usize) -> Check {
    if failures.is_empty() {
        Check::pass(name, format!("{total} cases"))
    } else {
        let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
        Check::fail(
            name,
            format!(
                "{} of {total} cases fail; first: {}",
                failures.len(),
                shown.join("; ")
            ),
        )
    }
}

/// Quadratic, braid and far-commutation relations of the regular representation.
pub fn relations_suite(r_max: usize, q: &QParam) -> crate::Result<Vec<Check>> {
    let per_rank: Vec<crate::Result<Vec<Check>>> = (1..=r_max)
        .into_par_iter()
        .map(|r| {
            let gens = regular_generator_matrices(r, q)?;
            let q2 = q.q2().clone();
            let mut checks = Vec::new();
            for (i, t) in gens.iter().enumerate() {
                let prod = &t.shift_diagonal(&-q2.clone()) * &t.shift_diagonal(&int(1));
                checks.push(Check::new(
                    format!("regular r={r} quadratic T{}", i + 1),
                    prod.is_zero(),
                    "",
                ));
            }
            for i in 1..r.saturating_sub(1) {
                let (a, b) = (&gens[i - 1], &gens[i]);
                let ok = &(a * b) * a == &(b * a) * b;
                checks.push(Check::new(
                    format!("regular r={r} braid T{i} T{}", i + 1),
                    ok,
                    "",
                ));
            }
            for i in 1..r {
                for j in i + 2..r {
                    let (a, b): (&SparseMatrix, &SparseMatrix) = (&gens[i - 1], &gens[j - 1]);
                    checks.push(Check::new(
                        format!("regular r={r} commute T{i} T{j}"),
                        (a * b) == (b * a),
                        "",
                    ));
                }
            }
            if checks.is_empty() {
                checks.push(Check::pass(format!("regular r={r}"), "no generators"));
            }
            Ok(checks)
        })
        .collect();
    flatten(per_rank)
}

fn flatten(parts: Vec<crate::Result<Vec<Check>>>) -> crate::Result<Vec<Check>> {
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Ideal dimensions, the cell eigen-identities, Specht ranks, and the ♯ twist.
pub fn specht_suite(r_max: usize, sharp_max: usize, q: &QParam) -> crate::Result<Vec<Check>> {
    let comps: Vec<Composition> = (1..=r_max).flat_map(Composition::all_positive).collect();
    let ideal: Vec<crate::Result<Vec<Check>>> = comps
        .par_iter()
        .map(|mu| {
            let r = mu.size();
            let expected =
                factorial(r) / mu.parts().iter().map(|&m| factorial(m)).product::<usize>();
            let dim = ideal_dimension(mu.parts(), q)?;
            let mut checks = vec![Check::new(
                format!("dim I{:?}", mu.parts()),
                dim == expected,
                format!("rank {dim}, expected {expected}"),
            )];
            checks.extend(parabolic_eigen_checks(mu.parts(), q));
            Ok(checks)
        })
        .collect();
    let parts: Vec<Partition> = (1..=r_max).flat_map(Partition::all_of_size).collect();
    let specht: Vec<crate::Result<Vec<Check>>> = parts
        .par_iter()
        .map(|lam| {
            let dim = specht_dimension(lam, q)?;
            let hook = hook_length_count(lam);
            let mut checks = vec![Check::new(
                format!("rank H z{lam}"),
                dim as u128 == hook,
                format!("rank {dim}, hook count {hook}"),
            )];
            if lam.size() <= sharp_max {
                checks.extend(sharp_twist_check(lam, q)?);
            }
            Ok(checks)
        })
        .collect();
    let mut out = flatten(ideal)?;
    out.extend(flatten(specht)?);
    Ok(out)
}

/// Jucys–Murphy identities for `r <= r_max` and eigenvalues on `z_λ`.
pub fn jm_suite(r_max: usize, lambda: Option<&Partition>, q: &QParam) -> crate::Result<Vec<Check>> {
    let mut out: Vec<Check> = (1..=r_max)
        .into_par_iter()
        .map(|r| jm_identity_checks(r, q))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let shapes: Vec<Partition> = match lambda {
        Some(l) => vec![l.clone()],
        None => (1..=r_max).flat_map(Partition::all_of_size).collect(),
    };
    let eig: Vec<crate::Result<Vec<Check>>> = shapes
        .par_iter()
        .map(|lam| {
            Ok(jm_eigenvalue_check(lam, q)?
                .into_iter()
                .map(|mut c| {
                    c.name = format!("{} z{lam}", c.name);
                    c
                })
                .collect())
        })
        .collect();
    out.extend(flatten(eig)?);
    Ok(out)
}

/// Multisegments of size `r` whose smallest top is 0 and whose tops are at
/// most `top_max`.
fn anchored_multisegments(r: usize, top_max: i64) -> Vec<MultisegmentZ> {
    let mut segs = Vec::new();
    for hi in 0..=top_max {
        for len in 1..=r as i64 {
            segs.push(SegmentZ::new(hi - len + 1, hi).expect("len >= 1"));
        }
    }
    segs.sort();
    multisegments_from(&segs, r)
        .into_iter()
        .filter(|ms| ms.segments()[0].hi() == 0)
        .collect()
}

/// For each charge with `m <= m_max` and entries in `lo..=hi`, and each
/// `r <= r_max`: θ lands in words, `η ∘ ♭ ∘ θ = id`, θ is injective, and its
/// image is exactly the set of multisegments whose η-charge is `f`.
///
/// The reference set is found by enumerating every multisegment whose
/// smallest top is 0 (tops bounded by `f_1 - f_m + r - 1`) and bucketing by
/// η-charge; other charges are reached by translation.
pub fn bijection_suite(r_max: usize, m_max: usize, lo: i64, hi: i64) -> crate::Result<Vec<Check>> {
    let spread = hi - lo;
    let per_r: Vec<crate::Result<Vec<Check>>> = (1..=r_max)
        .into_par_iter()
        .map(|r| {
            let mut buckets: BTreeMap<Charge, BTreeSet<MultisegmentZ>> = BTreeMap::new();
            let mut inverse_fail = Vec::new();
            let mut total = 0;
            for ms in anchored_multisegments(r, spread + r as i64 - 1) {
                let (gamma, f) = eta(&ms)?;
                if f.m() > m_max || f.get(1) - f.get(f.m()) > spread {
                    continue;
                }
                total += 1;
                match theta(&gamma, &f) {
                    Ok(w) if w == multisegment_to_word(&ms) => {}
                    other => inverse_fail.push(format!("{ms}: {other:?}")),
                }
                buckets.entry(f).or_default().insert(ms);
            }
            let mut checks = vec![summarize(
                format!("theta o eta = id (r={r})"),
                &inverse_fail,
                total,
            )];

            let mut fails = Vec::new();
            let mut cases = 0;
            for m in 1..=m_max {
                for f in Charge::all_in_range(m, lo, hi) {
                    cases += 1;
                    let base = f.get(m);
                    let normalized = f.translated(-base);
                    let expected: BTreeSet<MultisegmentZ> = buckets
                        .get(&normalized)
                        .map(|b| b.iter().map(|ms| shift(ms, base)).collect())
                        .unwrap_or_default();
                    let mut image = BTreeSet::new();
                    let ks = enumerate_standard_kleshchev(&f_star(&f), r);
                    for gamma in &ks {
                        let word = match theta(gamma, &f) {
                            Ok(w) => w,
                            Err(e) => {
                                fails.push(format!("theta({gamma},{f}): {e}"));
                                continue;
                            }
                        };
                        let ms = word_to_multisegment(&word);
                        match eta(&ms) {
                            Ok((g, g_f)) if g == *gamma && g_f == f => {}
                            other => fails.push(format!("eta(theta({gamma},{f})) = {other:?}")),
                        }
                        image.insert(ms);
                    }
                    if image.len() != ks.len() {
                        fails.push(format!("theta not injective for f={f}"));
                    }
                    if image != expected {
                        fails.push(format!(
                            "f={f}: image has {} elements, reference set {}",
                            image.len(),
                            expected.len()
                        ));
                    }
                }
            }
            checks.push(summarize(
                format!("eta o theta = id and image of theta = reference set (r={r})"),
                &fails,
                cases,
            ));
            Ok(checks)
        })
        .collect();
    flatten(per_r)
}

/// `(s^c_{λ;f})^{-1} = s^r_{λ';f*}` for all multipartitions of `r <= r_max`
/// with `m <= m_max` and charges with entries in `lo..=hi`.
pub fn duality_suite(r_max: usize, m_max: usize, lo: i64, hi: i64) -> crate::Result<Vec<Check>> {
    let mut fails = Vec::new();
    let mut total = 0;
    for m in 1..=m_max {
        for f in Charge::all_in_range(m, lo, hi) {
            for r in 0..=r_max {
                for lam in Multipartition::all_of_size(m, r) {
                    total += 1;
                    let col = column_residual_segments(&lam, &f)?;
                    let row = row_residual_segments(&lam.conjugate(), &f_star(&f))?;
                    if col.inverse() != row {
                        fails.push(format!("{lam} f={f}"));
                    }
                }
            }
        }
    }
    Ok(vec![summarize(
        format!("column/row residual duality (r<={r_max}, m<={m_max})"),
        &fails,
        total,
    )])
}

/// ∂ on every multisegment of size `r <= r_max` with endpoints in
/// `lo..=hi`: dominance, integrality, injectivity, inverse, and
/// compatibility with shifts; plus the multipartition formula on Kleshchev
/// multipartitions for charges with `m <= m_max`, entries in `f_lo..=f_hi`.
pub fn drinfeld_suite(
    r_max: usize,
    n: usize,
    window: (i64, i64),
    m_max: usize,
    charge_range: (i64, i64),
) -> crate::Result<Vec<Check>> {
    let per_r: Vec<crate::Result<Vec<Check>>> = (1..=r_max)
        .into_par_iter()
        .map(|r| {
            let all = multisegments_in_window(r, window.0, window.1);
            let mut seen = HashSet::new();
            let (mut dom, mut inv, mut nat) = (Vec::new(), Vec::new(), Vec::new());
            for ms in &all {
                let q = partial_map(ms, n)?;
                if !is_dominant(&q) || !q.is_integral() || q.degree() != r {
                    dom.push(format!("{ms}"));
                }
                match partial_inverse(&q) {
                    Ok(back) if back == *ms => {}
                    other => inv.push(format!("{ms}: {other:?}")),
                }
                for c in [-2, 1, 3] {
                    if partial_map(&shift(ms, c), n)? != omega_twist(&q, c) {
                        nat.push(format!("{ms} c={c}"));
                    }
                }
                seen.insert(q);
            }
            let injective = seen.len() == all.len();
            Ok(vec![
                summarize(
                    format!("partial: dominant integral image (r={r})"),
                    &dom,
                    all.len(),
                ),
                summarize(
                    format!("partial_inverse o partial = id (r={r})"),
                    &inv,
                    all.len(),
                ),
                Check::new(
                    format!("partial injective (r={r})"),
                    injective,
                    format!("{} images for {} multisegments", seen.len(), all.len()),
                ),
                summarize(
                    format!("partial o shift = omega o partial (r={r})"),
                    &nat,
                    all.len(),
                ),
            ])
        })
        .collect();
    let mut out = flatten(per_r)?;

    let charges: Vec<Charge> = (1..=m_max)
        .flat_map(|m| Charge::all_in_range(m, charge_range.0, charge_range.1))
        .collect();
    let chain: Vec<crate::Result<(Vec<String>, usize)>> = charges
        .par_iter()
        .map(|f| {
            let mut fails = Vec::new();
            let mut total = 0;
            for r in 1..=r_max {
                for lam_conj in enumerate_kleshchev(&f_star(f), r) {
                    let lam = lam_conj.conjugate();
                    total += 1;
                    let seq = column_residual_segments(&lam, f)?;
                    let direct = drinfeld_from_multipartition(&lam, f, n)?;
                    let via = partial_map(&MultisegmentZ::from(seq), n)?;
                    if direct != via {
                        fails.push(format!("{lam} f={f}"));
                    }
                }
            }
            Ok((fails, total))
        })
        .collect();
    let mut fails = Vec::new();
    let mut total = 0;
    for c in chain {
        let (f, t) = c?;
        fails.extend(f);
        total += t;
    }
    out.push(summarize(
        format!("multipartition roots = partial o column segments (r<={r_max}, m<={m_max})"),
        &fails,
        total,
    ));
    Ok(out)
}

/// Skew shapes `λ/ν` with `0 < |λ/ν| <= r_max` and `|λ| <= outer_max`.
pub fn skew_shapes(r_max: usize, outer_max: usize) -> Vec<SkewShape> {
    SkewShape::all_with_outer_max(outer_max)
        .into_iter()
        .filter(|s| s.size() >= 1 && s.size() <= r_max)
        .collect()
}

/// Relations, dimension, weight and sign, and commutant (for
/// `r <= commutant_max`) on every skew module `λ/ν` with `0 < r <= r_max` and
/// `|λ| <= outer_max`; the Drinfeld root formula on every shape with
/// `|λ| <= outer_max`.
pub fn skew_suite(
    r_max: usize,
    outer_max: usize,
    commutant_max: usize,
    q: &QParam,
) -> crate::Result<Vec<Check>> {
    let shapes = skew_shapes(r_max, outer_max);
    let results: Vec<crate::Result<[Option<String>; 4]>> = shapes
        .par_iter()
        .map(|s| {
            let m = skew_rep_matrices(s, q)?;
            let rel_fail = verify_affine_relations(&m)
                .into_iter()
                .find(|c| !c.pass)
                .map(|c| format!("{s}: {} {}", c.name, c.detail));
            let syt = standard_tableaux(&Shape::Skew(s.clone())).len();
            let dim_fail = (m.dim() != syt).then(|| format!("{s}: dim {} vs {syt}", m.dim()));
            let weight_fail = skew_weight_check(s, q)?
                .into_iter()
                .find(|c| !c.pass)
                .map(|c| format!("{s}: {} {}", c.name, c.detail));
            let comm_fail = if s.size() <= commutant_max {
                let d = commutant_dimension(&m);
                (d != 1).then(|| format!("{s}: commutant dimension {d}"))
            } else {
                None
            };
            Ok([rel_fail, dim_fail, weight_fail, comm_fail])
        })
        .collect();
    let mut buckets: [Vec<String>; 4] = Default::default();
    for res in results {
        for (k, f) in res?.into_iter().enumerate() {
            if let Some(f) = f {
                buckets[k].push(f);
            }
        }
    }
    let total = shapes.len();
    let commutant_total = shapes.iter().filter(|s| s.size() <= commutant_max).count();
    let names = [
        "affine relations",
        "dimension = standard tableaux",
        "weight and sign at column reading tableau",
        "commutant dimension 1",
    ];
    let mut out: Vec<Check> = names
        .iter()
        .enumerate()
        .map(|(k, name)| {
            let t = if k == 3 { commutant_total } else { total };
            summarize(
                format!("skew {name} (q0={q}, r<={r_max}, |outer|<={outer_max})"),
                &buckets[k],
                t,
            )
        })
        .collect();

    let all = SkewShape::all_with_outer_max(outer_max);
    let drin: Vec<crate::Result<Option<String>>> = all
        .par_iter()
        .filter(|s| !s.is_empty())
        .map(|s| {
            let n = s.column_lengths().into_iter().max().unwrap_or(1).max(1);
            let seq = skew_multisegment(s)?;
            Ok(
                (skew_drinfeld(s, n)? != partial_map(&MultisegmentZ::from(seq), n)?)
                    .then(|| format!("{s}")),
            )
        })
        .collect();
    let mut fails = Vec::new();
    for d in drin {
        fails.extend(d?);
    }
    let nonempty = all.iter().filter(|s| !s.is_empty()).count();
    out.push(summarize(
        format!("skew roots = partial o skew segments (|outer|<={outer_max})"),
        &fails,
        nonempty,
    ));
    Ok(out)
}

/// `c^λ_{ν,ρ(λ/ν)} = 1` and `#SYT(λ/ν) = Σ_γ c^λ_{νγ} f^γ` for all skew
/// shapes with `|λ| <= outer_max`.
pub fn lr_suite(outer_max: usize) -> Vec<Check> {
    let shapes = SkewShape::all_with_outer_max(outer_max);
    let fails: Vec<(Option<String>, Option<String>)> = shapes
        .par_iter()
        .map(|s| {
            let rho = rho_of_skew(s);
            let c = lr_coefficient(s.outer(), s.inner(), &rho);
            let one = (c != 1).then(|| format!("{s}: c = {c} for rho = {rho}"));
            let syt = standard_tableaux(&Shape::Skew(s.clone())).len() as u128;
            let sum: u128 = Partition::all_of_size(s.size())
                .iter()
                .map(|g| lr_coefficient(s.outer(), s.inner(), g) as u128 * hook_length_count(g))
                .sum();
            let dim = (syt != sum).then(|| format!("{s}: {syt} vs {sum}"));
            (one, dim)
        })
        .collect();
    let ones: Vec<String> = fails.iter().filter_map(|f| f.0.clone()).collect();
    let dims: Vec<String> = fails.iter().filter_map(|f| f.1.clone()).collect();
    vec![
        summarize(
            format!("c(lambda; nu, rho) = 1 (|outer|<={outer_max})"),
            &ones,
            shapes.len(),
        ),
        summarize(
            format!("skew tableaux = sum of LR * hook counts (|outer|<={outer_max})"),
            &dims,
            shapes.len(),
        ),
    ]
}

/// Column residual segments of `λ` are standard whenever `λ'` is standard
/// Kleshchev for `f*`.
pub fn column_standardness_suite(
    r_max: usize,
    m_max: usize,
    lo: i64,
    hi: i64,
) -> crate::Result<Vec<Check>> {
    let mut fails = Vec::new();
    let mut total = 0;
    for m in 1..=m_max {
        for f in Charge::all_in_range(m, lo, hi) {
            for r in 1..=r_max {
                for gamma in enumerate_standard_kleshchev(&f_star(&f), r) {
                    total += 1;
                    let seq = column_residual_segments(&gamma.conjugate(), &f)?;
                    if !is_standard_seq(&seq) {
                        fails.push(format!("{} f={f}", gamma.conjugate()));
                    }
                }
            }
        }
    }
    Ok(vec![summarize(
        format!("column segments standard (r<={r_max}, m<={m_max})"),
        &fails,
        total,
    )])
}
