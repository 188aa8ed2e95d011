//! Constructions on groups: tensor, Tor, Hom, sums, kernels and cokernels.

use super::{Element, FgAbGroup, GroupHom, Presentation};
use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::snf::nullspace;

/// `A ⊗ B` with the bookkeeping needed to write down `a ⊗ b`.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub group: FgAbGroup,
    left: FgAbGroup,
    right: FgAbGroup,
    /// Generator of `eᵢ ⊗ fⱼ` at `i * right.ngens() + j`; `None` when that
    /// summand is trivial.
    index: Vec<Option<usize>>,
}

impl Tensor {
    pub fn left(&self) -> &FgAbGroup {
        &self.left
    }

    pub fn right(&self) -> &FgAbGroup {
        &self.right
    }

    /// Generator index of `eᵢ ⊗ fⱼ`.
    pub fn generator_of(&self, i: usize, j: usize) -> Option<usize> {
        self.index[i * self.right.ngens() + j]
    }

    /// The element `a ⊗ b`.
    pub fn pure(&self, a: &[Int], b: &[Int]) -> Element {
        let mut v = self.group.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if let (Some(k), false) = (self.generator_of(i, j), y.is_zero()) {
                    v[k] += x * y;
                }
            }
        }
        self.group.reduce(&v)
    }
}

/// `A ⊗ B` as `⊕ ℤ/gcd(aᵢ, bⱼ)` over generator pairs (`gcd(0, x) = x`),
/// labelled `a⊗b`.
pub fn tensor(a: &FgAbGroup, b: &FgAbGroup) -> Tensor {
    let mut orders = Vec::new();
    let mut labels = Vec::new();
    for i in 0..a.ngens() {
        for j in 0..b.ngens() {
            orders.push(a.order_of(i).gcd(&b.order_of(j)));
            labels.push(format!("{}⊗{}", a.label(i), b.label(j)));
        }
    }
    let (group, index) = FgAbGroup::from_orders(&orders, Some(&labels));
    Tensor { group, left: a.clone(), right: b.clone(), index }
}

/// `f ⊗ g : A ⊗ B → A' ⊗ B'` between the groups produced by [`tensor`].
pub fn tensor_hom(f: &GroupHom, g: &GroupHom) -> GroupHom {
    let src = tensor(f.source(), g.source());
    let dst = tensor(f.target(), g.target());
    let mut cols = vec![Vec::new(); src.group.ngens()];
    for i in 0..f.source().ngens() {
        for j in 0..g.source().ngens() {
            if let Some(k) = src.generator_of(i, j) {
                cols[k] = dst.pure(&f.image_of_generator(i), &g.image_of_generator(j));
            }
        }
    }
    GroupHom::new(src.group, dst.group.clone(), IntMatrix::from_columns(&cols, dst.group.ngens()))
        .expect("tensor product of homomorphisms is well defined")
}

/// `Tor₁(A, B) = ⊕ ℤ/gcd(aᵢ, bⱼ)` over pairs of torsion generators.
pub fn tor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let mut orders = Vec::new();
    let mut labels = Vec::new();
    for (i, x) in a.torsion().iter().enumerate() {
        for (j, y) in b.torsion().iter().enumerate() {
            orders.push(x.gcd(y));
            labels.push(format!("Tor({},{})", a.label(i), b.label(j)));
        }
    }
    FgAbGroup::from_orders(&orders, Some(&labels)).0
}

/// `Hom(A, B)` with a dictionary from its elements to matrices.
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub group: FgAbGroup,
    source: FgAbGroup,
    target: FgAbGroup,
    /// `(target row, source column, entry)` for each generator of `group`.
    entries: Vec<(usize, usize, Int)>,
}

impl HomGroup {
    pub fn to_hom(&self, v: &[Int]) -> GroupHom {
        let v = self.group.reduce(v);
        let mut m = IntMatrix::zeros(self.target.ngens(), self.source.ngens());
        for (x, (i, j, e)) in v.iter().zip(&self.entries) {
            m[(*i, *j)] += x * e;
        }
        GroupHom::new_reduced(self.source.clone(), self.target.clone(), m)
    }

    /// Every homomorphism when `Hom(A, B)` is finite.
    pub fn homs(&self) -> Option<impl Iterator<Item = GroupHom> + '_> {
        Some(self.group.elements()?.map(|v| self.to_hom(&v)))
    }
}

/// `Hom(A, B) = ⊕ Hom(⟨aⱼ⟩, ⟨bᵢ⟩)`; the cyclic piece `Hom(ℤ/a, ℤ/b)` is
/// generated by `1 ↦ b/gcd(a, b)`.
pub fn hom_group(a: &FgAbGroup, b: &FgAbGroup) -> HomGroup {
    let mut orders = Vec::new();
    let mut entries = Vec::new();
    let mut labels = Vec::new();
    for j in 0..a.ngens() {
        for i in 0..b.ngens() {
            let (aj, bi) = (a.order_of(j), b.order_of(i));
            let (order, entry) = if aj.is_zero() {
                (bi.clone(), Int::ONE)
            } else if bi.is_zero() {
                continue;
            } else {
                let g = aj.gcd(&bi);
                (g.clone(), bi.div_exact(&g))
            };
            orders.push(order);
            entries.push((i, j, entry));
            labels.push(format!("{}↦{}", a.label(j), b.label(i)));
        }
    }
    let (group, index) = FgAbGroup::from_orders(&orders, Some(&labels));
    let mut placed = vec![(0, 0, Int::ZERO); group.ngens()];
    for (k, e) in index.into_iter().zip(entries) {
        if let Some(k) = k {
            placed[k] = e;
        }
    }
    HomGroup { group, source: a.clone(), target: b.clone(), entries: placed }
}

/// Direct sum with its injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub group: FgAbGroup,
    pub injections: Vec<GroupHom>,
    pub projections: Vec<GroupHom>,
}

pub fn direct_sum(groups: &[FgAbGroup]) -> DirectSum {
    let mut orders = Vec::new();
    let mut labels = Vec::new();
    for g in groups {
        orders.extend(g.orders());
        labels.extend(g.label_list());
    }
    let labelled = groups.iter().any(|g| g.labels().is_some());
    let (group, index) = FgAbGroup::from_orders(&orders, labelled.then_some(&labels[..]));
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offset = 0;
    for g in groups {
        let mut inj = IntMatrix::zeros(group.ngens(), g.ngens());
        for j in 0..g.ngens() {
            let k = index[offset + j].expect("summand generators have order ≠ 1");
            inj[(k, j)] = Int::ONE;
        }
        projections.push(GroupHom::new_reduced(group.clone(), g.clone(), inj.transpose()));
        injections.push(GroupHom::new_reduced(g.clone(), group.clone(), inj));
        offset += g.ngens();
    }
    DirectSum { group, injections, projections }
}

/// Subgroup of `b` generated by the columns of `gens`, canonicalized, with
/// its inclusion.
pub fn subgroup_generated(b: &FgAbGroup, gens: &IntMatrix) -> (FgAbGroup, GroupHom) {
    let s = gens.cols();
    // c ∈ ℤˢ is a relation iff gens·c ∈ diag(b)·ℤⁿ.
    let stacked = gens.hstack(&IntMatrix::diagonal(&b.orders()).scale(&Int::from(-1)));
    let null = nullspace(&stacked);
    let rows: Vec<usize> = (0..s).collect();
    let all: Vec<usize> = (0..null.cols()).collect();
    let relations = null.select(&rows, &all).transpose();
    let c = Presentation::new(s, relations).canonicalize();
    let incl = gens.mul(&c.section);
    (c.group.clone(), GroupHom::new_reduced(c.group, b.clone(), incl))
}

pub fn kernel(f: &GroupHom) -> (FgAbGroup, GroupHom) {
    let a = f.source();
    let b = f.target();
    let na = a.ngens();
    let stacked = f.matrix().hstack(&IntMatrix::diagonal(&b.orders()).scale(&Int::from(-1)));
    let null = nullspace(&stacked);
    let rows: Vec<usize> = (0..na).collect();
    let all: Vec<usize> = (0..null.cols()).collect();
    subgroup_generated(a, &null.select(&rows, &all))
}

pub fn image(f: &GroupHom) -> (FgAbGroup, GroupHom) {
    subgroup_generated(f.target(), f.matrix())
}

pub fn cokernel(f: &GroupHom) -> (FgAbGroup, GroupHom) {
    let b = f.target();
    let nb = b.ngens();
    let mut rel = Vec::new();
    for (i, d) in b.torsion().iter().enumerate() {
        let mut r = vec![Int::ZERO; nb];
        r[i] = d.clone();
        rel.push(r);
    }
    rel.extend(f.matrix().transpose().to_rows());
    let c = Presentation::new(nb, IntMatrix::from_rows(rel, nb)).canonicalize();
    let proj = GroupHom::new_reduced(b.clone(), c.group.clone(), c.quotient.matrix().clone());
    (c.group, proj)
}

/// `{a : 2a = 0}` with its inclusion.
pub fn two_torsion_subgroup(a: &FgAbGroup) -> (FgAbGroup, GroupHom) {
    kernel(&GroupHom::multiplication(a, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(orders: &[u64]) -> FgAbGroup {
        FgAbGroup::from_cyclic_orders(orders)
    }

    #[test]
    fn tensor_examples() {
        let g = grp(&[4, 3]);
        assert_eq!(tensor(&grp(&[0]), &g).group, g);
        assert!(tensor(&grp(&[4]), &grp(&[6])).group.is_isomorphic(&grp(&[2])));
        assert!(tensor(&grp(&[2]), &g).group.is_isomorphic(&grp(&[2])));
    }

    #[test]
    fn tor_examples() {
        assert!(tor(&grp(&[0]), &grp(&[4, 3])).is_trivial());
        assert_eq!(tor(&grp(&[4]), &grp(&[6])), grp(&[2]));
        assert_eq!(tor(&grp(&[2]), &grp(&[2])), grp(&[2]));
    }

    #[test]
    fn two_torsion_examples() {
        assert!(two_torsion_subgroup(&grp(&[0])).0.is_trivial());
        let (t, i) = two_torsion_subgroup(&grp(&[2]));
        assert_eq!(t, grp(&[2]));
        assert_eq!(i.matrix(), &IntMatrix::from_i64(&[&[1]]));
        let (t, i) = two_torsion_subgroup(&grp(&[4, 3]));
        assert_eq!(t, grp(&[2]));
        assert_eq!(i.apply(&[Int::ONE]), vec![Int::from(2), Int::ZERO]);
    }

    #[test]
    fn kernel_image_cokernel_examples() {
        let z = grp(&[0]);
        let (c, _) = cokernel(&GroupHom::multiplication(&z, 2));
        assert_eq!(c, grp(&[2]));

        let red = GroupHom::new(grp(&[12]), grp(&[6]), IntMatrix::from_i64(&[&[1]])).unwrap();
        let (k, incl) = kernel(&red);
        assert_eq!(k, grp(&[2]));
        assert_eq!(incl.apply(&[Int::ONE]), vec![Int::from(6)]);

        let f = GroupHom::new(z, grp(&[4]), IntMatrix::from_i64(&[&[2]])).unwrap();
        assert_eq!(image(&f).0, grp(&[2]));
    }

    #[test]
    fn hom_group_examples() {
        let g = grp(&[4, 3]);
        assert_eq!(hom_group(&grp(&[0]), &g).group, g);
        assert!(hom_group(&grp(&[4]), &grp(&[6])).group.is_isomorphic(&grp(&[2])));
        assert!(hom_group(&grp(&[2]), &grp(&[0])).group.is_trivial());
        let h = hom_group(&grp(&[12]), &grp(&[6]));
        let homs: Vec<_> = h.homs().unwrap().collect();
        assert_eq!(homs.len(), 6);
        assert!(homs.iter().all(|f| GroupHom::new(f.source().clone(), f.target().clone(), f.matrix().clone()).is_ok()));
    }

    #[test]
    fn direct_sum_reorders_torsion_first() {
        let s = direct_sum(&[grp(&[0]), grp(&[2])]);
        assert_eq!(s.group, FgAbGroup::new(1, vec![Int::from(2)]).unwrap());
        for (inj, proj) in s.injections.iter().zip(&s.projections) {
            assert_eq!(proj.compose(inj), GroupHom::identity(inj.source()));
        }
    }
}
