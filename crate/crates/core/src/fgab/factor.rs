use super::GroupHom;
use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::snf::solve;

/// Finds `h : B → C` with `h ∘ g = f` for `f : A → C`, `g : A → B`.
///
/// Each row `hᵢ` of `h` (the `i`-th coordinate of `C`, order `cᵢ`) is an
/// independent integer system with slack variables:
/// `hᵢ·G_{:,j} − cᵢ·tⱼ = F_{i,j}` for every generator `j` of `A`, and
/// `b_l·h_{i,l} − cᵢ·s_l = 0` for every torsion generator `l` of `B`
/// (well-definedness). Any solution is returned; callers must not depend on
/// which one.
pub fn factor_through(f: &GroupHom, g: &GroupHom) -> Option<GroupHom> {
    assert!(f.source() == g.source(), "factor_through needs a common source");
    let (a, b, c) = (f.source(), g.target(), f.target());
    let (na, nb, nc) = (a.ngens(), b.ngens(), c.ngens());
    let bt = b.torsion().len();
    let gm = g.matrix();
    let mut h = IntMatrix::zeros(nc, nb);
    for i in 0..nc {
        let ci = c.order_of(i);
        let neg_ci = -&ci;
        let ncols = nb + na + bt;
        let mut sys = IntMatrix::zeros(na + bt, ncols);
        let mut rhs = Vec::with_capacity(na + bt);
        for j in 0..na {
            for l in 0..nb {
                sys[(j, l)] = gm[(l, j)].clone();
            }
            sys[(j, nb + j)] = neg_ci.clone();
            rhs.push(f.matrix()[(i, j)].clone());
        }
        for l in 0..bt {
            sys[(na + l, l)] = b.order_of(l);
            sys[(na + l, nb + na + l)] = neg_ci.clone();
            rhs.push(Int::ZERO);
        }
        let x = solve(&sys, &rhs)?;
        for l in 0..nb {
            h[(i, l)] = x[l].clone();
        }
    }
    let h = GroupHom::new(b.clone(), c.clone(), h).expect("factorization solution is well defined");
    assert!(h.compose(g) == *f, "factorization witness failed verification");
    Some(h)
}

/// A retraction `r` with `r ∘ f = id`, when one exists.
pub fn is_split_injective(f: &GroupHom) -> Option<GroupHom> {
    factor_through(&GroupHom::identity(f.source()), f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgab::FgAbGroup;

    fn hom(s: &[u64], t: &[u64], m: &[&[i64]]) -> GroupHom {
        GroupHom::new(
            FgAbGroup::from_cyclic_orders(s),
            FgAbGroup::from_cyclic_orders(t),
            IntMatrix::from_i64(m),
        )
        .unwrap()
    }

    #[test]
    fn identity_factors_through_identity() {
        let id = GroupHom::identity(&FgAbGroup::from_cyclic_orders(&[4, 0]));
        assert_eq!(factor_through(&id, &id).unwrap(), id);
    }

    #[test]
    fn reduction_does_not_factor_through_doubling() {
        let f = hom(&[0], &[2], &[&[1]]);
        let g = hom(&[0], &[0], &[&[2]]);
        assert!(factor_through(&f, &g).is_none());
    }

    #[test]
    fn alpha_component_factors() {
        let f = hom(&[12], &[3], &[&[1]]);
        let g = hom(&[12], &[6], &[&[1]]);
        let h = factor_through(&f, &g).unwrap();
        assert_eq!(h.apply(&[Int::ONE]), vec![Int::ONE]);
    }

    #[test]
    fn split_injectivity() {
        let incl = hom(&[0], &[0, 0], &[&[1], &[0]]);
        let r = is_split_injective(&incl).unwrap();
        assert_eq!(r.compose(&incl), GroupHom::identity(incl.source()));
        assert!(is_split_injective(&hom(&[0], &[0], &[&[2]])).is_none());
        assert!(is_split_injective(&hom(&[2], &[4], &[&[2]])).is_none());
    }
}
