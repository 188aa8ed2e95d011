//! Independent oracles shared by the integration tests and the acceptance
//! harness. They enumerate elements and maps directly instead of going
//! through Smith normal form bookkeeping.
#![allow(dead_code)]

use pialg::fgab::{Element, FgAbGroup, GroupHom};
use pialg::matrix::IntMatrix;
use pialg::snf::{cokernel_of_sparse, SparseRow};
use pialg::Int;
use proptest::prelude::*;

pub fn grp(orders: &[u64]) -> FgAbGroup {
    FgAbGroup::from_cyclic_orders(orders)
}

/// Every abelian group of order `n`, as invariant-factor chains.
pub fn groups_of_order(n: u64) -> Vec<FgAbGroup> {
    fn chains(n: u64, max_first: u64, out: &mut Vec<Vec<u64>>, cur: &mut Vec<u64>) {
        if n == 1 {
            out.push(cur.clone());
            return;
        }
        // Largest factor first; each next factor divides the previous one.
        for d in (2..=n.min(max_first)).rev() {
            if n.is_multiple_of(d) && cur.last().is_none_or(|l| l.is_multiple_of(d)) {
                cur.push(d);
                chains(n / d, d, out, cur);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    chains(n, n, &mut out, &mut Vec::new());
    out.into_iter()
        .filter(|c| c.iter().product::<u64>() == n && c.windows(2).all(|w| w[0] % w[1] == 0))
        .map(|mut c| {
            c.reverse();
            grp(&c)
        })
        .collect()
}

/// A finite group with at most three cyclic summands and order at most
/// `max_order`.
pub fn arb_finite_group(max_order: u64) -> impl Strategy<Value = FgAbGroup> {
    prop::collection::vec(2u64..=8, 0..=3).prop_filter_map("order bound", move |orders| {
        (orders.iter().product::<u64>() <= max_order).then(|| grp(&orders))
    })
}

/// Raw images for each source generator; reduced into an actual
/// homomorphism by [`hom_from_seed`].
pub fn arb_seed() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..1000, 9)
}

/// A homomorphism `a → b` chosen by sending generator `i` (of order `aᵢ`)
/// to a multiple of `b_j/gcd(aᵢ, b_j)` in each coordinate.
pub fn hom_from_seed(a: &FgAbGroup, b: &FgAbGroup, seed: &[u64]) -> GroupHom {
    let mut m = IntMatrix::zeros(b.ngens(), a.ngens());
    let mut k = 0;
    for j in 0..a.ngens() {
        for i in 0..b.ngens() {
            let (aj, bi) = (a.order_of(j), b.order_of(i));
            let step = if aj.is_zero() || bi.is_zero() {
                if bi.is_zero() && !aj.is_zero() { Int::ZERO } else { Int::ONE }
            } else {
                bi.div_exact(&aj.gcd(&bi))
            };
            m[(i, j)] = &step * &Int::from(seed[k % seed.len()] % 7);
            k += 1;
        }
    }
    GroupHom::new(a.clone(), b.clone(), m).expect("seeded map is a homomorphism")
}

/// Every homomorphism `b → c`, by trying all images of the generators.
pub fn all_homs(b: &FgAbGroup, c: &FgAbGroup) -> Vec<IntMatrix> {
    let elems: Vec<Element> = c.elements().expect("finite target").collect();
    let per_gen: Vec<Vec<&Element>> = (0..b.ngens())
        .map(|j| {
            let d = b.order_of(j);
            elems.iter().filter(|e| c.is_zero_element(&c.scale(&d, e))).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; per_gen.len()];
    loop {
        let cols: Vec<Element> = idx.iter().zip(&per_gen).map(|(&i, v)| v[i].clone()).collect();
        out.push(IntMatrix::from_columns(&cols, c.ngens()));
        let mut p = per_gen.len();
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < per_gen[p].len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// Whether `h ∘ g = f` for some `h`, searching every `h` generator by
/// generator with word-sized arithmetic in the finite target.
pub fn factors_exhaustively(f: &GroupHom, g: &GroupHom) -> bool {
    let (a, b, c) = (f.source(), g.target(), f.target());
    let cm: Vec<u64> = c.torsion().iter().map(|d| d.to_u64().expect("finite target")).collect();
    assert_eq!(cm.len(), c.ngens(), "finite target");
    let exp = cm.iter().fold(1u64, |acc, &d| num_integer::lcm(acc, d));
    let as_u64 = |x: &Int, m: u64| x.rem_euclid(&Int::from(m)).to_u64().unwrap();
    let elems: Vec<Vec<u64>> = c.elements().unwrap().map(|v| v.iter().map(|x| x.to_u64().unwrap()).collect()).collect();
    let candidates: Vec<Vec<&Vec<u64>>> = (0..b.ngens())
        .map(|l| {
            let d = b.order_of(l).to_u64().unwrap();
            elems.iter().filter(|e| d == 0 || e.iter().zip(&cm).all(|(x, m)| (d * x) % m == 0)).collect()
        })
        .collect();
    let coef: Vec<Vec<u64>> =
        (0..b.ngens()).map(|l| (0..a.ngens()).map(|j| as_u64(&g.matrix()[(l, j)], exp)).collect()).collect();
    let want: Vec<Vec<u64>> =
        (0..a.ngens()).map(|j| (0..c.ngens()).map(|i| as_u64(&f.matrix()[(i, j)], cm[i])).collect()).collect();

    fn search(
        l: usize,
        partial: &mut Vec<Vec<u64>>,
        candidates: &[Vec<&Vec<u64>>],
        coef: &[Vec<u64>],
        cm: &[u64],
        want: &[Vec<u64>],
    ) -> bool {
        if l == candidates.len() {
            return partial == want;
        }
        for e in &candidates[l] {
            let saved = partial.clone();
            for (j, col) in partial.iter_mut().enumerate() {
                for (i, x) in col.iter_mut().enumerate() {
                    *x = (*x + coef[l][j] % cm[i] * e[i]) % cm[i];
                }
            }
            if search(l + 1, partial, candidates, coef, cm, want) {
                return true;
            }
            *partial = saved;
        }
        false
    }
    let mut partial = vec![vec![0u64; c.ngens()]; a.ngens()];
    search(0, &mut partial, &candidates, &coef, &cm, &want)
}

/// `d ↦ #{x : d·x = 0}` for `d = 1..=bound`; determines a finite abelian
/// group up to isomorphism.
pub fn torsion_profile(elements: impl Iterator<Item = Vec<u64>>, moduli: &[u64], bound: u64) -> Vec<usize> {
    let elems: Vec<Vec<u64>> = elements.collect();
    (1..=bound)
        .map(|d| elems.iter().filter(|x| x.iter().zip(moduli).all(|(v, m)| (d * v) % m == 0)).count())
        .collect()
}

pub fn group_profile(g: &FgAbGroup, bound: u64) -> Vec<usize> {
    let moduli: Vec<u64> = g.torsion().iter().map(|d| d.to_u64().unwrap()).collect();
    let elems = g.elements().unwrap().map(|v| v.iter().map(|x| x.to_u64().unwrap()).collect());
    torsion_profile(elems, &moduli, bound)
}

/// `A ⊗ B` from the symbols `x ⊗ y` over all elements, modulo linearity
/// in each slot.
pub fn brute_tensor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let ea: Vec<Element> = a.elements().unwrap().collect();
    let eb: Vec<Element> = b.elements().unwrap().collect();
    let pos = position;
    let sym = |x: usize, y: usize| x * eb.len() + y;
    let ngens = ea.len() * eb.len();
    let mut rels: Vec<SparseRow> = Vec::new();
    let mut push = |terms: [(usize, i64); 3]| {
        let row = sparse(&terms);
        if !row.is_empty() {
            rels.push(row);
        }
    };
    for x in 0..ea.len() {
        push([(sym(x, 0), 1), (0, 0), (0, 0)]);
    }
    for y in 0..eb.len() {
        push([(sym(0, y), 1), (0, 0), (0, 0)]);
    }
    for (x, xv) in ea.iter().enumerate() {
        for (y, yv) in eb.iter().enumerate() {
            for i in 0..a.ngens() {
                let s = pos(a, &a.add(xv, &a.generator(i)));
                let gi = pos(a, &a.generator(i));
                push([(sym(s, y), 1), (sym(x, y), -1), (sym(gi, y), -1)]);
            }
            for j in 0..b.ngens() {
                let s = pos(b, &b.add(yv, &b.generator(j)));
                let gj = pos(b, &b.generator(j));
                push([(sym(x, s), 1), (sym(x, y), -1), (sym(x, gj), -1)]);
            }
        }
    }
    let form = cokernel_of_sparse(ngens, rels);
    FgAbGroup::from_orders(&form.orders, None).0
}

/// Profile of `Tor(A, B) = {x ∈ B^t : aᵢ·xᵢ = 0}` for the torsion orders
/// `aᵢ` of `A`, read off from the free resolution `ℤ^t →diag ℤ^t → A`.
pub fn brute_tor_profile(a: &FgAbGroup, b: &FgAbGroup, bound: u64) -> Vec<usize> {
    let bm: Vec<u64> = b.torsion().iter().map(|d| d.to_u64().unwrap()).collect();
    let belems: Vec<Vec<u64>> = b.elements().unwrap().map(|v| v.iter().map(|x| x.to_u64().unwrap()).collect()).collect();
    let mut tuples: Vec<Vec<u64>> = vec![vec![]];
    let mut moduli = Vec::new();
    for ai in a.torsion() {
        let ai = ai.to_u64().unwrap();
        let killed: Vec<&Vec<u64>> =
            belems.iter().filter(|x| x.iter().zip(&bm).all(|(v, m)| (ai * v) % m == 0)).collect();
        tuples = tuples
            .into_iter()
            .flat_map(|t| killed.iter().map(move |x| [t.clone(), (*x).clone()].concat()))
            .collect();
        moduli.extend(bm.iter().copied());
    }
    torsion_profile(tuples.into_iter(), &moduli, bound)
}

fn position(g: &FgAbGroup, v: &Element) -> usize {
    v.iter().zip(g.torsion()).fold(0, |acc, (x, d)| acc * d.to_usize().unwrap() + x.to_usize().unwrap())
}

fn sparse(terms: &[(usize, i64)]) -> SparseRow {
    let mut row: std::collections::BTreeMap<usize, Int> = Default::default();
    for &(c, v) in terms {
        *row.entry(c).or_insert(Int::ZERO) += Int::from(v);
    }
    row.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Whitehead's universal quadratic group: symbols `γ(x)` with
/// `γ(−x) = γ(x)` and the vanishing of the third deviation.
pub fn universal_quadratic_group(a: &FgAbGroup) -> FgAbGroup {
    let elems: Vec<Element> = a.elements().unwrap().collect();
    let n = elems.len();
    let at = |v: Element| position(a, &v);
    let mut rels = Vec::new();
    for x in 0..n {
        rels.push(sparse(&[(at(a.scale(&Int::from(-1), &elems[x])), 1), (x, -1)]));
        for y in 0..n {
            let xy = at(a.add(&elems[x], &elems[y]));
            for z in 0..n {
                let xz = at(a.add(&elems[x], &elems[z]));
                let yz = at(a.add(&elems[y], &elems[z]));
                let xyz = at(a.add(&elems[xy], &elems[z]));
                rels.push(sparse(&[(xyz, 1), (xy, -1), (xz, -1), (yz, -1), (x, 1), (y, 1), (z, 1)]));
            }
        }
    }
    let rels: Vec<SparseRow> = rels.into_iter().filter(|r| !r.is_empty()).collect();
    FgAbGroup::from_orders(&cokernel_of_sparse(n, rels).orders, None).0
}

/// Symbols `x ∧ y`, linear in each slot, with `x ∧ x = 0`.
pub fn alternating_square(a: &FgAbGroup) -> FgAbGroup {
    let elems: Vec<Element> = a.elements().unwrap().collect();
    let n = elems.len();
    let sym = |x: usize, y: usize| x * n + y;
    let mut rels = Vec::new();
    for x in 0..n {
        rels.push(sparse(&[(sym(x, x), 1)]));
        for y in 0..n {
            for i in 0..a.ngens() {
                let gi = position(a, &a.generator(i));
                let s = position(a, &a.add(&elems[x], &elems[gi]));
                rels.push(sparse(&[(sym(s, y), 1), (sym(x, y), -1), (sym(gi, y), -1)]));
                rels.push(sparse(&[(sym(y, s), 1), (sym(y, x), -1), (sym(y, gi), -1)]));
            }
        }
    }
    let rels: Vec<SparseRow> = rels.into_iter().filter(|r| !r.is_empty()).collect();
    FgAbGroup::from_orders(&cokernel_of_sparse(n * n, rels).orders, None).0
}
