use super::{Notation, QuadraticModule};
use crate::fgab::{direct_sum, subscript, kernel, Canonicalized, Element, FgAbGroup, GroupHom, Presentation};
use crate::int::Int;
use crate::matrix::IntMatrix;

/// `ℤˢ ⊗ᑫ M = Meˢ ⊕ Mee^C(s,2)`.
///
/// Raw coordinates list the blocks `eₖ ⊗ Me` for `k < s`, then
/// `[eₖ, eₗ] ⊗ Mee` for `k < l` in lexicographic order. `group` is the same
/// direct sum with torsion generators moved first; `index` sends raw
/// coordinates to its generators.
#[derive(Clone, Debug)]
pub struct FreeQuadTensor {
    pub group: FgAbGroup,
    pub index: Vec<usize>,
    s: usize,
    module: QuadraticModule,
    ph: IntMatrix,
    t: IntMatrix,
    raw_labels: Vec<String>,
}

pub fn quad_tensor_free(s: usize, m: &QuadraticModule) -> FreeQuadTensor {
    let names: Vec<String> = if s == 1 {
        vec!["1".into()]
    } else {
        (0..s).map(|k| format!("e{}", subscript(k + 1))).collect()
    };
    FreeQuadTensor::with_basis_names(m, &names)
}

impl FreeQuadTensor {
    fn with_basis_names(m: &QuadraticModule, names: &[String]) -> Self {
        let s = names.len();
        let (me, mee) = (m.me(), m.mee());
        let notation = m.notation();
        let mut orders = Vec::new();
        let mut raw_labels = Vec::new();
        for name in names {
            for g in 0..me.ngens() {
                orders.push(me.order_of(g));
                raw_labels.push(match notation {
                    Notation::Gamma => format!("γ({name})"),
                    _ => format!("{name}⊗{}", me.label(g)),
                });
            }
        }
        for k in 0..s {
            for l in k + 1..s {
                for h in 0..mee.ngens() {
                    orders.push(mee.order_of(h));
                    raw_labels.push(match notation {
                        Notation::Gamma => format!("[{},{}]", names[k], names[l]),
                        Notation::Lambda => format!("{}∧{}", names[k], names[l]),
                        Notation::Generic => format!("[{},{}]⊗{}", names[k], names[l], mee.label(h)),
                    });
                }
            }
        }
        let (group, index) = FgAbGroup::from_orders(&orders, Some(&raw_labels));
        let index = index.into_iter().map(|i| i.expect("module generators are nontrivial")).collect();
        FreeQuadTensor {
            group,
            index,
            s,
            ph: m.p().compose(m.h()).matrix().clone(),
            t: m.involution().matrix().clone(),
            module: m.clone(),
            raw_labels,
        }
    }

    pub fn rank_of_base(&self) -> usize {
        self.s
    }

    pub fn raw_dim(&self) -> usize {
        self.raw_labels.len()
    }

    pub fn raw_labels(&self) -> &[String] {
        &self.raw_labels
    }

    /// Order of each raw coordinate (0 for ℤ).
    pub fn raw_orders(&self) -> Vec<Int> {
        self.index.iter().map(|&i| self.group.order_of(i)).collect()
    }

    fn me_offset(&self, k: usize) -> usize {
        k * self.module.me().ngens()
    }

    fn mee_offset(&self, k: usize, l: usize) -> usize {
        debug_assert!(k < l && l < self.s);
        let pair = k * (2 * self.s - k - 1) / 2 + (l - k - 1);
        self.s * self.module.me().ngens() + pair * self.module.mee().ngens()
    }

    /// Raw coordinates of `x ⊗ g` for `x ∈ ℤˢ` and `g` a generator of `Me`.
    ///
    /// Iterating `(a+b)⊗m = a⊗m + b⊗m + [a,b]⊗H(m)` gives
    /// `x⊗g = Σₖ (xₖeₖ)⊗g + Σ_{k<l} xₖxₗ [eₖ,eₗ]⊗H(g)`, and the same relation
    /// with `a = b` gives the scaling rule `(c·e)⊗g = c(e⊗g) + C(c,2) e⊗PH(g)`,
    /// valid for negative `c` as well.
    pub fn expand_square(&self, x: &[Int], g: usize) -> Vec<Int> {
        assert_eq!(x.len(), self.s);
        let mut out = vec![Int::ZERO; self.raw_dim()];
        let me = self.module.me().ngens();
        let h = self.module.h().matrix();
        for (k, xk) in x.iter().enumerate() {
            if xk.is_zero() {
                continue;
            }
            let off = self.me_offset(k);
            out[off + g] += xk.clone();
            let c2 = xk.binomial2();
            if !c2.is_zero() {
                for r in 0..me {
                    let v = &self.ph[(r, g)];
                    if !v.is_zero() {
                        out[off + r] += &c2 * v;
                    }
                }
            }
        }
        for k in 0..self.s {
            for l in k + 1..self.s {
                let c = &x[k] * &x[l];
                if c.is_zero() {
                    continue;
                }
                let off = self.mee_offset(k, l);
                for r in 0..self.module.mee().ngens() {
                    let v = &h[(r, g)];
                    if !v.is_zero() {
                        out[off + r] += &c * v;
                    }
                }
            }
        }
        out
    }

    /// Raw coordinates of `[x, y] ⊗ n` for `n` a generator of `Mee`, using
    /// bilinearity, `[eₖ,eₖ]⊗n = eₖ⊗P(n)` and `[eₗ,eₖ]⊗n = [eₖ,eₗ]⊗T(n)`.
    pub fn expand_bracket(&self, x: &[Int], y: &[Int], n: usize) -> Vec<Int> {
        assert_eq!((x.len(), y.len()), (self.s, self.s));
        let mut out = vec![Int::ZERO; self.raw_dim()];
        let p = self.module.p().matrix();
        let mee = self.module.mee().ngens();
        for (k, xk) in x.iter().enumerate() {
            if xk.is_zero() {
                continue;
            }
            for (l, yl) in y.iter().enumerate() {
                if yl.is_zero() {
                    continue;
                }
                let c = xk * yl;
                if k == l {
                    let off = self.me_offset(k);
                    for r in 0..self.module.me().ngens() {
                        if !p[(r, n)].is_zero() {
                            out[off + r] += &c * &p[(r, n)];
                        }
                    }
                } else if k < l {
                    out[self.mee_offset(k, l) + n] += c;
                } else {
                    let off = self.mee_offset(l, k);
                    for r in 0..mee {
                        if !self.t[(r, n)].is_zero() {
                            out[off + r] += &c * &self.t[(r, n)];
                        }
                    }
                }
            }
        }
        out
    }

    /// Raw matrix of the map `ℤˢ ⊗ᑫ M → ℤᵗ ⊗ᑫ M` induced by `phi` (`t × s`).
    pub fn induced_raw(&self, phi: &IntMatrix, target: &FreeQuadTensor) -> IntMatrix {
        assert_eq!((phi.rows(), phi.cols()), (target.s, self.s));
        let mut cols = Vec::with_capacity(self.raw_dim());
        for k in 0..self.s {
            let x = phi.column(k);
            for g in 0..self.module.me().ngens() {
                cols.push(target.expand_square(&x, g));
            }
        }
        for k in 0..self.s {
            for l in k + 1..self.s {
                let (x, y) = (phi.column(k), phi.column(l));
                for n in 0..self.module.mee().ngens() {
                    cols.push(target.expand_bracket(&x, &y, n));
                }
            }
        }
        IntMatrix::from_columns(&cols, target.raw_dim())
    }

    fn describe_raw(&self, v: &[Int]) -> String {
        let labelled =
            FgAbGroup::from_orders(&vec![Int::ZERO; self.raw_dim()], Some(&self.raw_labels)).0;
        labelled.format_element(v)
    }
}

/// `A ⊗ᑫ M`, presented as the cokernel of `(f,1)⁎ − (0,1)⁎` on
/// `(R ⊕ F) ⊗ᑫ M → F ⊗ᑫ M` for the diagonal presentation `R →f F ↠ A`.
#[derive(Clone, Debug)]
pub struct QuadTensor {
    pub group: FgAbGroup,
    source: FgAbGroup,
    free: FreeQuadTensor,
    /// Canonical coordinates of raw `F ⊗ᑫ M` coordinates.
    quotient: IntMatrix,
    /// Raw lifts of the canonical generators (columns).
    section: IntMatrix,
}

pub fn quad_tensor(a: &FgAbGroup, m: &QuadraticModule) -> QuadTensor {
    let n = a.ngens();
    let t = a.torsion().len();
    let names = a.label_list();
    let free = FreeQuadTensor::with_basis_names(m, &names);
    let big = FreeQuadTensor::with_basis_names(m, &vec![String::new(); t + n]);

    let mut phi1 = IntMatrix::zeros(n, t + n);
    let mut phi0 = IntMatrix::zeros(n, t + n);
    for (r, d) in a.torsion().iter().enumerate() {
        phi1[(r, r)] = d.clone();
    }
    for j in 0..n {
        phi1[(j, t + j)] = Int::ONE;
        phi0[(j, t + j)] = Int::ONE;
    }
    let diff = big.induced_raw(&phi1, &free).sub(&big.induced_raw(&phi0, &free));

    let raw = free.raw_dim();
    let mut rel = Vec::new();
    for (i, d) in free.raw_orders().iter().enumerate() {
        if !d.is_zero() {
            let mut r = vec![Int::ZERO; raw];
            r[i] = d.clone();
            rel.push(r);
        }
    }
    rel.extend(diff.transpose().to_rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
    let Canonicalized { group, quotient, section } =
        Presentation::new(raw, IntMatrix::from_rows(rel, raw)).canonicalize();

    let labels: Vec<String> = (0..group.ngens())
        .map(|i| {
            let col = section.column(i);
            let support: Vec<usize> = (0..raw).filter(|&r| !col[r].is_zero()).collect();
            match support[..] {
                [r] if col[r].is_one() => free.raw_labels[r].clone(),
                _ => free.describe_raw(&col),
            }
        })
        .collect();
    let group = group.with_labels(labels).expect("one label per generator");
    QuadTensor {
        group,
        source: a.clone(),
        free,
        quotient: quotient.matrix().clone(),
        section,
    }
}

impl QuadTensor {
    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn module(&self) -> &QuadraticModule {
        &self.free.module
    }

    fn project(&self, raw: &[Int]) -> Element {
        self.group.reduce(&self.quotient.mul_vec(raw))
    }

    /// The element `a ⊗ g` for `a ∈ A` and `g` a generator of `Me`.
    pub fn square(&self, a: &[Int], g: usize) -> Element {
        self.project(&self.free.expand_square(&self.source.reduce(a), g))
    }

    /// The element `[a, b] ⊗ n` for `n` a generator of `Mee`.
    pub fn bracket(&self, a: &[Int], b: &[Int], n: usize) -> Element {
        let (a, b) = (self.source.reduce(a), self.source.reduce(b));
        self.project(&self.free.expand_bracket(&a, &b, n))
    }

    /// `f ⊗ᑫ M : A ⊗ᑫ M → B ⊗ᑫ M`, where `self` is built on `f`'s source
    /// and `target` on its target. Any integer lift of `f` to the free
    /// presentations induces the same map on the cokernels.
    pub fn induced(&self, f: &GroupHom, target: &QuadTensor) -> GroupHom {
        assert!(f.source() == &self.source && f.target() == &target.source);
        let raw = self.free.induced_raw(f.matrix(), &target.free);
        let m = target.quotient.mul(&raw).mul(&self.section);
        GroupHom::new(self.group.clone(), target.group.clone(), m)
            .expect("induced map on quadratic tensors is well defined")
    }
}

/// Whitehead's `Γ(A) = A ⊗ᑫ ℤ^Γ`.
pub fn whitehead_gamma(a: &FgAbGroup) -> FgAbGroup {
    quad_tensor(a, &QuadraticModule::z_gamma()).group
}

/// `Λ²(A) = A ⊗ᑫ ℤ^Λ`.
pub fn exterior_square(a: &FgAbGroup) -> FgAbGroup {
    quad_tensor(a, &QuadraticModule::z_lambda()).group
}

/// Second cross effect `ker(F(A ⊕ B) → F(A) ⊕ F(B))` of `F = − ⊗ᑫ M`.
pub fn cross_effect(a: &FgAbGroup, b: &FgAbGroup, m: &QuadraticModule) -> FgAbGroup {
    let sum = direct_sum(&[a.clone(), b.clone()]);
    let qs = quad_tensor(&sum.group, m);
    let qa = quad_tensor(a, m);
    let qb = quad_tensor(b, m);
    let pa = qs.induced(&sum.projections[0], &qa);
    let pb = qs.induced(&sum.projections[1], &qb);
    let target = direct_sum(&[qa.group.clone(), qb.group.clone()]);
    let both = target.injections[0].compose(&pa).add(&target.injections[1].compose(&pb));
    kernel(&both).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(orders: &[u64]) -> FgAbGroup {
        FgAbGroup::from_cyclic_orders(orders)
    }

    #[test]
    fn free_quadratic_tensors() {
        let g = quad_tensor_free(1, &QuadraticModule::z_gamma());
        assert_eq!(g.group, grp(&[0]));
        let l = quad_tensor_free(2, &QuadraticModule::z_lambda());
        assert_eq!(l.group, grp(&[0]));
        assert_eq!(l.raw_labels(), ["e₁∧e₂"]);
        assert!(quad_tensor_free(0, &QuadraticModule::pi5_s3()).group.is_trivial());
    }

    #[test]
    fn gamma_and_lambda_of_small_groups() {
        assert_eq!(whitehead_gamma(&grp(&[0])), grp(&[0]));
        assert_eq!(whitehead_gamma(&grp(&[2])), grp(&[4]));
        assert_eq!(whitehead_gamma(&grp(&[3])), grp(&[3]));
        assert!(whitehead_gamma(&FgAbGroup::trivial()).is_trivial());
        assert!(exterior_square(&grp(&[3])).is_trivial());
        assert_eq!(exterior_square(&grp(&[0, 0, 0])), grp(&[0, 0, 0]));
        assert!(exterior_square(&grp(&[2, 2])).is_isomorphic(&grp(&[2])));
    }

    #[test]
    fn gamma_of_z2_is_generated_by_gamma_of_one() {
        let q = quad_tensor(&grp(&[2]), &QuadraticModule::z_gamma());
        assert_eq!(q.group.label_list(), ["γ(1)"]);
        assert_eq!(q.square(&[Int::ONE], 0), vec![Int::ONE]);
        // [1,1] = γ(1)·P(1) = 2γ(1)
        assert_eq!(q.bracket(&[Int::ONE], &[Int::ONE], 0), vec![Int::from(2)]);
    }

    #[test]
    fn gamma_of_doubling_is_multiplication_by_four() {
        let z = grp(&[0]);
        let q = quad_tensor(&z, &QuadraticModule::z_gamma());
        let f = q.induced(&GroupHom::multiplication(&z, 2), &q);
        assert_eq!(f.matrix(), &IntMatrix::from_i64(&[&[4]]));
    }

    #[test]
    fn cross_effect_of_gamma_on_z2() {
        let m = QuadraticModule::z_gamma();
        assert_eq!(cross_effect(&grp(&[2]), &grp(&[2]), &m), grp(&[2]));
        assert!(cross_effect(&grp(&[2]), &grp(&[3]), &m).is_trivial());
    }
}
