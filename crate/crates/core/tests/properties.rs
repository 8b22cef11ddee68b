use proptest::prelude::*;

use segkit::correspondences::{eta, is_dominant, omega_twist, partial_inverse, partial_map, theta};
use segkit::hecke::scalar::int;
use segkit::hecke::{skew_rep_matrices, verify_affine_relations, HeckeElement, Matrix, QParam};
use segkit::kleshchev::{
    column_residual_segments, is_kleshchev, is_standard_kleshchev, row_residual_segments, Charge,
};
use segkit::partitions::{Multipartition, Partition, Permutation, SkewShape};
use segkit::report::all_pass;
use segkit::segments::{
    is_standard_seq, multisegment_to_word, seq_to_word, shift, sort_standard, word_to_multisegment,
    word_to_seq, MultisegmentZ, SegmentZ,
};

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=6, 0..=max_size).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn multipartition(m_max: usize) -> impl Strategy<Value = Multipartition> {
    prop::collection::vec(partition(4), 1..=m_max).prop_map(|c| Multipartition::new(c).unwrap())
}

fn charge(m: usize) -> impl Strategy<Value = Charge> {
    prop::collection::vec(-6i64..=6, m).prop_map(|mut f| {
        f.sort_unstable_by(|a, b| b.cmp(a));
        Charge::new(f).unwrap()
    })
}

fn multipartition_with_charge() -> impl Strategy<Value = (Multipartition, Charge)> {
    multipartition(4).prop_flat_map(|mp| {
        let m = mp.m();
        (Just(mp), charge(m))
    })
}

fn multisegment() -> impl Strategy<Value = MultisegmentZ> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 1..=6).prop_map(|v| {
        MultisegmentZ::new(
            v.into_iter()
                .map(|(hi, len)| SegmentZ::new(hi - len + 1, hi).unwrap())
                .collect(),
        )
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn hecke_element(r: usize) -> impl Strategy<Value = HeckeElement> {
    prop::collection::vec((permutation(r), -3i64..=3), 1..=3).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(HeckeElement::zero(r), |acc, (w, c)| {
                acc.add(&HeckeElement::basis(w).scale(&int(c)))
            })
    })
}

fn skew_shape() -> impl Strategy<Value = SkewShape> {
    (partition(4), partition(3)).prop_filter_map("inner must fit", |(outer, inner)| {
        SkewShape::new(outer, inner)
            .ok()
            .filter(|s| (1..=5).contains(&s.size()))
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(mp in multipartition(4)) {
        prop_assert_eq!(mp.conjugate().conjugate(), mp.clone());
        prop_assert_eq!(mp.conjugate().size(), mp.size());
    }

    #[test]
    fn eta_then_theta_recovers_the_word(ms in multisegment()) {
        let (gamma, f) = eta(&ms).unwrap();
        prop_assert!(is_standard_kleshchev(&gamma, &f.f_star()).unwrap());
        prop_assert!(is_kleshchev(&gamma, &f.f_star()).unwrap());
        prop_assert_eq!(theta(&gamma, &f).unwrap(), multisegment_to_word(&ms));
    }

    #[test]
    fn eta_commutes_with_shift(ms in multisegment(), c in -5i64..=5) {
        let (gamma, f) = eta(&ms).unwrap();
        let (gamma2, f2) = eta(&shift(&ms, c)).unwrap();
        prop_assert_eq!(gamma2, gamma);
        prop_assert_eq!(f2, f.translated(c));
    }

    #[test]
    fn word_and_sequence_agree(ms in multisegment()) {
        let w = multisegment_to_word(&ms);
        let seq = word_to_seq(&w);
        prop_assert!(is_standard_seq(&seq));
        prop_assert_eq!(&seq, &sort_standard(&ms));
        prop_assert_eq!(seq_to_word(&seq).unwrap(), w.clone());
        prop_assert_eq!(word_to_multisegment(&w), ms);
    }

    #[test]
    fn drinfeld_map_is_invertible_and_dominant(ms in multisegment(), extra in 0usize..=2, c in -4i64..=4) {
        let n = ms.max_segment_len() + extra;
        let q = partial_map(&ms, n).unwrap();
        prop_assert!(is_dominant(&q));
        prop_assert!(q.is_integral());
        prop_assert_eq!(q.degree(), ms.size());
        prop_assert_eq!(partial_inverse(&q).unwrap(), ms.clone());
        prop_assert_eq!(partial_map(&shift(&ms, c), n).unwrap(), omega_twist(&q, c));
    }

    #[test]
    fn column_and_row_segments_are_dual((mp, f) in multipartition_with_charge()) {
        let col = column_residual_segments(&mp, &f).unwrap();
        let row = row_residual_segments(&mp.conjugate(), &f.f_star()).unwrap();
        prop_assert_eq!(col.inverse(), row);
        prop_assert_eq!(col.size(), mp.size());
    }

    #[test]
    fn permutation_group_laws(a in permutation(5), b in permutation(5)) {
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.reduced_word().len(), a.length());
        prop_assert_eq!(a.inverse().length(), a.length());
        let ab = a.compose(&b);
        prop_assert!(ab.length() <= a.length() + b.length());
    }

    #[test]
    fn hecke_multiplication_is_associative(
        a in hecke_element(3),
        b in hecke_element(3),
        c in hecke_element(3),
    ) {
        let q = QParam::default();
        prop_assert_eq!(a.mul(&b, &q).mul(&c, &q), a.mul(&b.mul(&c, &q), &q));
    }

    #[test]
    fn rank_is_transpose_invariant(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=4)) {
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let (_, pivots) = m.rref();
        prop_assert_eq!(pivots.len(), m.rank());
    }

    #[test]
    fn q_parameter_round_trips(p in -20i64..=20, d in 1i64..=9) {
        prop_assume!(p.abs() != d && p != 0);
        let q: QParam = format!("{p}/{d}").parse().unwrap();
        prop_assert_eq!(q.to_string().parse::<QParam>().unwrap(), q);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn skew_modules_satisfy_affine_relations(s in skew_shape(), q0 in prop::sample::select(vec!["2", "3", "-2", "1/3"])) {
        let q = QParam::parse(q0).unwrap();
        let m = skew_rep_matrices(&s, &q).unwrap();
        prop_assert!(all_pass(&verify_affine_relations(&m)));
    }
}
