mod common;

use common::*;
use pialg::fgab::{factor_through, hom_group, is_split_injective, tensor, tor, FgAbGroup, GroupHom};
use pialg::matrix::IntMatrix;
use pialg::snf::snf;
use pialg::Int;
use proptest::prelude::*;

fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(-20i64..=20, r * c).prop_map(move |v| {
            let rows: Vec<Vec<Int>> = v.chunks(c).map(|ch| ch.iter().map(|&x| Int::from(x)).collect()).collect();
            IntMatrix::from_rows(rows, c)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn smith_form_is_a_unimodular_diagonalization(m in arb_matrix()) {
        let r = snf(&m);
        prop_assert_eq!(r.u.mul(&m).mul(&r.v), r.d.clone());
        prop_assert!(r.u.determinant().abs().is_one());
        prop_assert!(r.v.determinant().abs().is_one());
        let diag: Vec<Int> = (0..m.rows().min(m.cols())).map(|i| r.d[(i, i)].clone()).collect();
        for i in 0..r.d.rows() {
            for j in 0..r.d.cols() {
                if i != j {
                    prop_assert!(r.d[(i, j)].is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[0].divides(&w[1]));
            }
        }
    }

    #[test]
    fn hom_group_counts_every_homomorphism(a in arb_finite_group(16), b in arb_finite_group(16)) {
        let listed = all_homs(&a, &b).len();
        let h = hom_group(&a, &b);
        prop_assert_eq!(h.group.cardinality(), Some(Int::from(listed as u64)));
        for f in h.homs().unwrap() {
            prop_assert!(GroupHom::new(a.clone(), b.clone(), f.matrix().clone()).is_ok());
        }
    }

    #[test]
    fn factorization_agrees_with_search(
        a in arb_finite_group(8),
        b in arb_finite_group(16),
        c in arb_finite_group(8),
        s1 in arb_seed(),
        s2 in arb_seed(),
    ) {
        let g = hom_from_seed(&a, &b, &s1);
        let f = hom_from_seed(&a, &c, &s2);
        let found = factor_through(&f, &g);
        prop_assert_eq!(found.is_some(), factors_exhaustively(&f, &g));
        if let Some(h) = found {
            prop_assert_eq!(h.compose(&g), f);
        }
    }

    #[test]
    fn split_injectivity_agrees_with_search(a in arb_finite_group(8), b in arb_finite_group(32), s in arb_seed()) {
        let f = hom_from_seed(&a, &b, &s);
        let retraction = is_split_injective(&f);
        prop_assert_eq!(retraction.is_some(), factors_exhaustively(&GroupHom::identity(&a), &f));
        if let Some(r) = retraction {
            prop_assert_eq!(r.compose(&f), GroupHom::identity(&a));
        }
    }

    #[test]
    fn tensor_matches_symbol_presentation(a in arb_finite_group(12), b in arb_finite_group(12)) {
        let t = tensor(&a, &b);
        let brute = brute_tensor(&a, &b);
        prop_assert!(t.group.is_isomorphic(&brute), "{} vs {}", t.group, brute);
    }

    #[test]
    fn tor_matches_resolution_kernel(a in arb_finite_group(16), b in arb_finite_group(16)) {
        let t = tor(&a, &b);
        prop_assert_eq!(group_profile(&t, 16), brute_tor_profile(&a, &b, 16));
    }

    #[test]
    fn kernel_and_image_have_complementary_sizes(a in arb_finite_group(32), b in arb_finite_group(32), s in arb_seed()) {
        let f = hom_from_seed(&a, &b, &s);
        let images: std::collections::BTreeSet<Vec<Int>> = a.elements().unwrap().map(|x| f.apply(&x)).collect();
        let zeros = a.elements().unwrap().filter(|x| b.is_zero_element(&f.apply(x))).count();
        let (k, _) = f.kernel();
        let (i, _) = f.image();
        prop_assert_eq!(k.cardinality(), Some(Int::from(zeros as u64)));
        prop_assert_eq!(i.cardinality(), Some(Int::from(images.len() as u64)));
        prop_assert_eq!(f.cokernel().0.cardinality().unwrap() * Int::from(images.len() as u64), b.cardinality().unwrap());
    }
}

#[test]
fn groups_of_small_order_are_enumerated() {
    let counts: Vec<usize> = (1..=16).map(|n| groups_of_order(n).len()).collect();
    assert_eq!(counts, [1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]);
    for n in 1..=16u64 {
        for g in groups_of_order(n) {
            assert_eq!(g.cardinality(), Some(Int::from(n)));
            assert!(g.is_canonical(), "{g}");
        }
    }
}

#[test]
fn infinite_pieces_of_tensor_and_tor() {
    let z = FgAbGroup::free(1);
    let a = grp(&[6, 0]);
    assert!(tensor(&z, &a).group.is_isomorphic(&a));
    assert!(tor(&z, &a).is_trivial());
    assert!(tor(&grp(&[4]), &grp(&[6])).is_isomorphic(&grp(&[2])));
}
