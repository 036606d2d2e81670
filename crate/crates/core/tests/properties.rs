use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

use delta_slide::sweep::numeric_labels;
use delta_slide::{
    normalize_checked, parse_bouquet, parse_matrix, parse_set_system, serialize_bouquet,
    serialize_matrix, serialize_set_system, Bouquet, Mask, Parity, SetSystem, SymMatrix,
};

fn set_system(max_n: usize) -> impl Strategy<Value = SetSystem> {
    (2..=max_n).prop_flat_map(|n| {
        btree_set(0u64..1 << n, 1..=(1usize << n).min(24))
            .prop_map(move |fam| SetSystem::new(numeric_labels(n), fam).unwrap())
    })
}

fn matrix(min_n: usize, max_n: usize) -> impl Strategy<Value = SymMatrix> {
    (min_n..=max_n).prop_flat_map(|n| {
        vec(any::<u64>(), n).prop_map(move |raw| {
            let mut rows = vec![0u64; n];
            for i in 0..n {
                for j in i..n {
                    if raw[i] >> j & 1 == 1 {
                        rows[i] |= 1 << j;
                        rows[j] |= 1 << i;
                    }
                }
            }
            SymMatrix::new(numeric_labels(n), rows).unwrap()
        })
    })
}

fn binary_dm(max_n: usize) -> impl Strategy<Value = SetSystem> {
    matrix(2, max_n).prop_flat_map(|m| {
        let n = m.len();
        (Just(m), 0u64..1 << n).prop_map(|(m, t)| m.delta_matroid().twist_mask(t))
    })
}

fn bouquet(max_edges: usize) -> impl Strategy<Value = Bouquet> {
    (1..=max_edges).prop_flat_map(|n| {
        let word: Vec<usize> = (0..n).flat_map(|e| [e, e]).collect();
        (Just(word).prop_shuffle(), 0u64..1 << n)
            .prop_map(move |(w, t)| Bouquet::new(numeric_labels(n), w, t).unwrap())
    })
}

fn distinct(n: usize, seed: (usize, usize)) -> (usize, usize) {
    let a = seed.0 % n;
    (a, (a + 1 + seed.1 % (n - 1)) % n)
}

proptest! {
    #[test]
    fn slide_is_an_involution(d in set_system(6), seed in any::<(usize, usize)>()) {
        let n = d.len();
        let (a, b) = distinct(n, seed);
        prop_assert_eq!(d.slide_indices(a, b).slide_indices(a, b), d);
    }

    #[test]
    fn slides_keep_extreme_sizes(d in binary_dm(6), seed in any::<(usize, usize)>()) {
        let n = d.len();
        let (a, b) = distinct(n, seed);
        let s = d.slide_indices(a, b);
        prop_assert_eq!(s.max_feasible_size().unwrap(), d.max_feasible_size().unwrap());
        prop_assert_eq!(s.min_feasible_size().unwrap(), d.min_feasible_size().unwrap());
        prop_assert!(s.is_delta_matroid());
        prop_assert_eq!(s.parity().unwrap(), d.parity().unwrap());
    }

    #[test]
    fn slides_of_any_system_keep_extreme_sizes(d in set_system(6), seed in any::<(usize, usize)>()) {
        let n = d.len();
        let (a, b) = distinct(n, seed);
        let s = d.slide_indices(a, b);
        prop_assert_eq!(s.max_feasible_size().ok(), d.max_feasible_size().ok());
        prop_assert_eq!(s.min_feasible_size().ok(), d.min_feasible_size().ok());
        if d.is_delta_matroid() && s.is_delta_matroid() {
            prop_assert_eq!(s.parity().unwrap(), d.parity().unwrap());
        }
    }

    #[test]
    fn twist_is_an_involution(d in set_system(6), t in any::<Mask>()) {
        let t = t & ((1 << d.len()) - 1);
        prop_assert_eq!(d.twist_mask(t).twist_mask(t), d);
    }

    #[test]
    fn twist_commutes_with_slides_outside(d in set_system(6), t in any::<Mask>(), seed in any::<(usize, usize)>()) {
        let n = d.len();
        let (a, b) = distinct(n, seed);
        let t = t & ((1 << n) - 1) & !(1 << a) & !(1 << b);
        prop_assert_eq!(d.slide_indices(a, b).twist_mask(t), d.twist_mask(t).slide_indices(a, b));
    }

    #[test]
    fn twist_through_both_ends_swaps_the_slide(d in set_system(6), t in any::<Mask>(), seed in any::<(usize, usize)>()) {
        let n = d.len();
        let (a, b) = distinct(n, seed);
        let t = (t & ((1 << n) - 1)) | 1 << a | 1 << b;
        prop_assert_eq!(d.slide_indices(a, b).twist_mask(t), d.twist_mask(t).slide_indices(b, a));
    }

    #[test]
    fn direct_sum_is_commutative_and_associative(
        x in set_system(2), y in set_system(2), z in set_system(2)
    ) {
        let relabel = |d: &SetSystem, p: &str| {
            let labels: Vec<String> = d.ground().iter().map(|l| format!("{p}{l}")).collect();
            SetSystem::new(labels, d.feasible_masks().iter().copied()).unwrap()
        };
        let (x, y, z) = (relabel(&x, "x"), relabel(&y, "y"), relabel(&z, "z"));
        let xy = x.direct_sum(&y).unwrap();
        prop_assert!(xy.is_isomorphic(&y.direct_sum(&x).unwrap()));
        let left = xy.direct_sum(&z).unwrap();
        let right = x.direct_sum(&y.direct_sum(&z).unwrap()).unwrap();
        prop_assert!(left.is_isomorphic(&right));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn matrix_slides_commute_with_d(m in matrix(2, 7), seed in any::<(usize, usize)>()) {
        let n = m.len();
        let (a, b) = distinct(n, seed);
        prop_assert_eq!(m.slide_indices(a, b).delta_matroid(), m.delta_matroid().slide_indices(a, b));
    }

    #[test]
    fn matrix_delta_matroids_satisfy_exchange(m in matrix(6, 8)) {
        prop_assert!(m.delta_matroid().is_delta_matroid());
    }

    #[test]
    fn normalize_reaches_canonical_form(m in matrix(1, 7)) {
        let d = m.delta_matroid();
        let res = normalize_checked(&d).unwrap();
        let sig = res.signature;
        prop_assert_eq!(sig.i + 2 * sig.j + sig.k + sig.l, d.len());
        prop_assert_eq!(sig.k == 0, d.parity().unwrap() == Parity::Even);
        let replayed = d.apply_sequence(&res.slides).unwrap().reordered(&res.relabeling).unwrap();
        prop_assert_eq!(replayed, res.terminal);
    }

    #[test]
    fn ribbon_slides_commute_with_d(b in bouquet(6), pick in any::<usize>()) {
        let slides = b.legal_slides();
        prop_assume!(!slides.is_empty());
        let (p, side) = slides[pick % slides.len()];
        let (a, over) = b.slide_pair(p, side);
        let s = b.slide_toward(p, side).unwrap();
        prop_assert_eq!(s.delta_matroid(), b.delta_matroid().slide_indices(a, over));
        prop_assert_eq!(s.interlacement_matrix(), b.interlacement_matrix().slide_indices(a, over));
    }

    #[test]
    fn bouquet_classification_matches_normal_form(b in bouquet(6)) {
        let res = delta_slide::normalize(&b.delta_matroid()).unwrap();
        prop_assert_eq!(res.signature, b.classify());
    }

    #[test]
    fn set_system_text_round_trips(d in set_system(5)) {
        let text = serialize_set_system(&d);
        let back = parse_set_system(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(serialize_set_system(&back), text);
    }

    #[test]
    fn matrix_text_round_trips(m in matrix(0, 8)) {
        let text = serialize_matrix(&m);
        let back = parse_matrix(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(serialize_matrix(&back), text);
    }

    #[test]
    fn bouquet_text_round_trips(b in bouquet(6)) {
        let text = serialize_bouquet(&b);
        let back = parse_bouquet(&text).unwrap();
        prop_assert_eq!(&back, &b);
        prop_assert_eq!(serialize_bouquet(&back), text);
    }
}
