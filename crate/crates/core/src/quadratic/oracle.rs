//! Direct presentation of `A ⊗ᑫ M` from its defining relations, used as an
//! independent check on the coequalizer computation.

use super::QuadraticModule;
use crate::error::{Error, Result};
use crate::fgab::{Canonicalized, Element, FgAbGroup};
use crate::int::Int;
use crate::snf::{cokernel_of_sparse, SparseRow};

/// Default cap on the number of symbol generators.
pub const DEFAULT_ORACLE_BOUND: usize = 4096;

/// One generator per `a ⊗ g` (`a ∈ A`, `g` a generator of `Me`) and per
/// `[a, b] ⊗ h` (`a, b ∈ A`, `h` a generator of `Mee`); relations are every
/// instance of the defining identities over all elements, plus the orders
/// of the `Me` and `Mee` generators (which encode linearity in `m` and `n`).
pub fn brute_force_quad_tensor(
    a: &FgAbGroup,
    m: &QuadraticModule,
    bound: usize,
) -> Result<FgAbGroup> {
    let elems: Vec<Element> = a
        .elements()
        .ok_or_else(|| Error::BoundExceeded(format!("{a} is infinite")))?
        .collect();
    let size = elems.len();
    let (me, mee) = (m.me().ngens(), m.mee().ngens());
    let ngens = size * me + size * size * mee;
    if ngens > bound {
        return Err(Error::BoundExceeded(format!(
            "{ngens} symbol generators for {a} exceed the bound {bound}"
        )));
    }

    let pos = |v: &Element| -> usize {
        v.iter().zip(a.torsion()).fold(0, |acc, (x, d)| acc * d.to_usize().unwrap() + x.to_usize().unwrap())
    };
    let add = |x: usize, y: usize| pos(&a.add(&elems[x], &elems[y]));
    let sq = |x: usize, g: usize| x * me + g;
    let br = |x: usize, y: usize, h: usize| size * me + (x * size + y) * mee + h;

    let h_mat = m.h().matrix();
    let p_mat = m.p().matrix();
    let t_mat = m.involution().matrix().clone();

    let mut rels: Vec<SparseRow> = Vec::new();
    let mut push = |terms: Vec<(usize, Int)>| {
        let mut dense: std::collections::BTreeMap<usize, Int> = Default::default();
        for (c, v) in terms {
            *dense.entry(c).or_insert(Int::ZERO) += v;
        }
        let row: SparseRow = dense.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if !row.is_empty() {
            rels.push(row);
        }
    };
    let one = Int::ONE;
    let neg = Int::from(-1);

    for x in 0..size {
        for g in 0..me {
            let d = m.me().order_of(g);
            if !d.is_zero() {
                push(vec![(sq(x, g), d)]);
            }
        }
        for y in 0..size {
            for h in 0..mee {
                let d = m.mee().order_of(h);
                if !d.is_zero() {
                    push(vec![(br(x, y, h), d)]);
                }
            }
        }
    }
    for x in 0..size {
        for y in 0..size {
            let s = add(x, y);
            // (a+b)⊗m = a⊗m + b⊗m + [a,b]⊗H(m)
            for g in 0..me {
                let mut t = vec![(sq(s, g), one.clone()), (sq(x, g), neg.clone()), (sq(y, g), neg.clone())];
                for h in 0..mee {
                    t.push((br(x, y, h), -&h_mat[(h, g)]));
                }
                push(t);
            }
            // [a,b]⊗n = [b,a]⊗T(n)
            for h in 0..mee {
                let mut t = vec![(br(x, y, h), one.clone())];
                for r in 0..mee {
                    t.push((br(y, x, r), -&t_mat[(r, h)]));
                }
                push(t);
            }
            // linearity of [a,b]⊗n in a and in b
            for z in 0..size {
                for h in 0..mee {
                    push(vec![
                        (br(s, z, h), one.clone()),
                        (br(x, z, h), neg.clone()),
                        (br(y, z, h), neg.clone()),
                    ]);
                    push(vec![
                        (br(z, s, h), one.clone()),
                        (br(z, x, h), neg.clone()),
                        (br(z, y, h), neg.clone()),
                    ]);
                }
            }
        }
        // [a,a]⊗n = a⊗P(n)
        for h in 0..mee {
            let mut t = vec![(br(x, x, h), one.clone())];
            for g in 0..me {
                t.push((sq(x, g), -&p_mat[(g, h)]));
            }
            push(t);
        }
    }
    let form = cokernel_of_sparse(ngens, rels);
    Ok(Canonicalized::from_form(ngens, form).group)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(orders: &[u64]) -> FgAbGroup {
        FgAbGroup::from_cyclic_orders(orders)
    }

    #[test]
    fn oracle_examples() {
        let gamma = QuadraticModule::z_gamma();
        let lambda = QuadraticModule::z_lambda();
        let b = DEFAULT_ORACLE_BOUND;
        assert_eq!(brute_force_quad_tensor(&grp(&[2]), &gamma, b).unwrap(), grp(&[4]));
        assert!(brute_force_quad_tensor(&FgAbGroup::trivial(), &gamma, b).unwrap().is_trivial());
        assert_eq!(brute_force_quad_tensor(&grp(&[2, 2]), &lambda, b).unwrap(), grp(&[2]));
        assert!(brute_force_quad_tensor(&grp(&[3]), &lambda, b).unwrap().is_trivial());
    }

    #[test]
    fn oracle_refuses_infinite_or_large_groups() {
        let gamma = QuadraticModule::z_gamma();
        assert!(brute_force_quad_tensor(&grp(&[0]), &gamma, 100).is_err());
        assert!(brute_force_quad_tensor(&grp(&[16]), &gamma, 100).is_err());
    }
}
