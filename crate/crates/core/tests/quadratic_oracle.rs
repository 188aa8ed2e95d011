mod common;

use common::*;
use pialg::fgab::{tensor, GroupHom};
use pialg::quadratic::{
    brute_force_quad_tensor, cross_effect, exterior_square, quad_tensor, whitehead_gamma, QuadraticModule,
    DEFAULT_ORACLE_BOUND,
};
use pialg::Int;
use proptest::prelude::*;

fn modules() -> Vec<QuadraticModule> {
    QuadraticModule::BUILTIN_NAMES.iter().map(|n| QuadraticModule::builtin(n).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_is_the_universal_quadratic_group(a in arb_finite_group(12)) {
        let oracle = universal_quadratic_group(&a);
        prop_assert!(whitehead_gamma(&a).is_isomorphic(&oracle), "Γ({}) vs {}", a, oracle);
    }

    #[test]
    fn lambda_is_the_alternating_square(a in arb_finite_group(16)) {
        let oracle = alternating_square(&a);
        prop_assert!(exterior_square(&a).is_isomorphic(&oracle), "Λ²({}) vs {}", a, oracle);
    }

    #[test]
    fn builtin_modules_match_direct_presentation(a in arb_finite_group(8), which in 0usize..5) {
        let m = &modules()[which];
        let direct = brute_force_quad_tensor(&a, m, DEFAULT_ORACLE_BOUND).unwrap();
        prop_assert!(quad_tensor(&a, m).group.is_isomorphic(&direct));
    }

    #[test]
    fn induced_maps_compose(
        a in arb_finite_group(8),
        b in arb_finite_group(8),
        c in arb_finite_group(8),
        s1 in arb_seed(),
        s2 in arb_seed(),
        which in 0usize..5,
    ) {
        let m = &modules()[which];
        let (f, g) = (hom_from_seed(&a, &b, &s1), hom_from_seed(&b, &c, &s2));
        let (qa, qb, qc) = (quad_tensor(&a, m), quad_tensor(&b, m), quad_tensor(&c, m));
        let whole = qa.induced(&g.compose(&f), &qc);
        let stepwise = qb.induced(&g, &qc).compose(&qa.induced(&f, &qb));
        prop_assert_eq!(whole, stepwise);
        prop_assert_eq!(qa.induced(&GroupHom::identity(&a), &qa), GroupHom::identity(&qa.group));
    }

    #[test]
    fn cross_effects_of_gamma_and_lambda_are_tensor_products(a in arb_finite_group(6), b in arb_finite_group(6)) {
        let t = tensor(&a, &b).group;
        prop_assert!(cross_effect(&a, &b, &QuadraticModule::z_gamma()).is_isomorphic(&t));
        prop_assert!(cross_effect(&a, &b, &QuadraticModule::z_lambda()).is_isomorphic(&t));
    }

    #[test]
    fn gamma_is_homogeneous_of_degree_two(a in arb_finite_group(16), c in -5i64..=5) {
        let q = quad_tensor(&a, &QuadraticModule::z_gamma());
        let induced = q.induced(&GroupHom::multiplication(&a, c), &q);
        prop_assert_eq!(induced, GroupHom::multiplication(&q.group, c * c));
    }
}

#[test]
fn gamma_on_small_cyclic_groups() {
    assert_eq!(whitehead_gamma(&grp(&[2])), grp(&[4]));
    assert_eq!(whitehead_gamma(&grp(&[3])), grp(&[3]));
    assert_eq!(whitehead_gamma(&grp(&[0])), grp(&[0]));
    assert!(whitehead_gamma(&grp(&[2, 2])).is_isomorphic(&grp(&[4, 4, 2])));
    assert!(exterior_square(&grp(&[0, 0])).is_isomorphic(&grp(&[0])));
    for n in 2..10 {
        assert!(exterior_square(&grp(&[n])).is_trivial());
    }
}

#[test]
fn square_of_generator_has_full_order() {
    let q = quad_tensor(&grp(&[2]), &QuadraticModule::z_gamma());
    let g = q.square(&[Int::ONE], 0);
    assert_eq!(q.group.element_order(&g), Int::from(4));
}
