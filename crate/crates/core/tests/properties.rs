use proptest::prelude::*;

use weyl_mahonian::algebra::{MultiPoly, TruncSeries};
use weyl_mahonian::flaggeom::{rothe_diagram, standard_flag, FlagType};
use weyl_mahonian::statistics::{q_binomial, q_binomial_product};
use weyl_mahonian::weylgroups::{
    coxeter_word_length, greedy_reduced_word, length, wmaj, Family, GroupFamily, SignedPerm,
};

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3, 0u32..2), 0..5)
        .prop_map(|ts| ts.into_iter().map(|(c, a, b, s)| MultiPoly::term(c, a, b, s)).sum())
}

fn signed_perm(max_d: usize) -> impl Strategy<Value = SignedPerm> {
    (1..=max_d)
        .prop_flat_map(|d| {
            let base: Vec<i32> = (1..=d as i32).collect();
            (Just(base).prop_shuffle(), prop::collection::vec(any::<bool>(), d))
        })
        .prop_map(|(v, signs)| {
            let images = v.into_iter().zip(signs).map(|(x, neg)| if neg { -x } else { x }).collect();
            SignedPerm::new(images).unwrap()
        })
}

fn family_of(p: &SignedPerm) -> Vec<Family> {
    let mut fams = vec![Family::BC];
    if p.is_unsigned() {
        fams.push(Family::A);
    }
    if p.is_even() && p.rank() >= 2 {
        fams.push(Family::D);
    }
    fams
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn json_round_trip(a in poly()) {
        prop_assert_eq!(MultiPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn exact_division_inverts_product(a in poly(), j in 1usize..5) {
        let f = MultiPoly::univariate(weyl_mahonian::algebra::Var::T, &[1, 1, 0, 2][..j]);
        prop_assert_eq!((&a * &f).div_exact(&f).unwrap(), a);
    }

    #[test]
    fn truncated_product_commutes(a in poly(), b in poly()) {
        let (x, y) = (TruncSeries::from_poly(&a, 4), TruncSeries::from_poly(&b, 4));
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap(), TruncSeries::from_poly(&(&a * &b), 4));
    }

    #[test]
    fn length_is_word_length(p in signed_perm(5)) {
        for fam in family_of(&p) {
            let g = GroupFamily::new(fam, p.rank());
            let l = length(&p, &g).unwrap();
            let word = greedy_reduced_word(&p, &g).unwrap();
            prop_assert_eq!(word.len(), l);
            prop_assert_eq!(g.compose_word(&word).unwrap(), p.clone());
            prop_assert_eq!(coxeter_word_length(&p, &g).unwrap(), l);
            prop_assert_eq!(length(&p.inverse(), &g).unwrap(), l);
        }
    }

    #[test]
    fn standard_weight_is_wmaj(p in signed_perm(7)) {
        for kind in FlagType::ALL {
            if family_of(&p).contains(&kind.family()) {
                prop_assert_eq!(standard_flag(&p, kind).unwrap().weight, wmaj(&p));
            }
        }
    }

    #[test]
    fn rothe_free_cells_count_length(p in signed_perm(7)) {
        for kind in FlagType::ALL {
            let fam = kind.family();
            if family_of(&p).contains(&fam) {
                let r = rothe_diagram(&p, kind).unwrap();
                prop_assert_eq!(r.free_count(), length(&p, &GroupFamily::new(fam, p.rank())).unwrap());
            }
        }
    }

    #[test]
    fn gaussian_binomials(d in 0usize..10, k in 0usize..10) {
        prop_assume!(k <= d);
        prop_assert_eq!(q_binomial(d, k), q_binomial(d, d - k));
        prop_assert_eq!(q_binomial(d, k), q_binomial_product(d, k).unwrap());
    }
}
