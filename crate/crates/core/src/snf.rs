//! Smith normal form over ℤ with unimodular transformation witnesses, and
//! the lattice routines built on it.
//!
//! Pivoting takes the entry of minimal absolute value in the active block,
//! ties broken by lowest row and then lowest column, so outputs are
//! reproducible for a fixed input.

use crate::int::Int;
use crate::matrix::IntMatrix;

/// `u * m * v == d`, with `u`, `v` unimodular and `d` diagonal with
/// non-negative entries forming a divisibility chain (zeros last).
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Non-zero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<Int> {
        diagonal(&self.d).into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn diagonal(d: &IntMatrix) -> Vec<Int> {
    (0..d.rows().min(d.cols())).map(|i| d[(i, i)].clone()).collect()
}

/// Full Smith normal form with both transformation matrices.
pub fn snf(m: &IntMatrix) -> SnfResult {
    let calc = SnfCalc::run(m.clone(), true, true);
    SnfResult { u: calc.u.unwrap(), d: calc.a, v: calc.v.unwrap() }
}

/// Just the invariant factors (no transforms tracked).
pub fn invariant_factors(m: &IntMatrix) -> Vec<Int> {
    let calc = SnfCalc::run(m.clone(), false, false);
    diagonal(&calc.a).into_iter().filter(|x| !x.is_zero()).collect()
}

pub(crate) struct SnfCalc {
    pub a: IntMatrix,
    pub u: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
}

impl SnfCalc {
    pub fn run(a: IntMatrix, track_left: bool, track_right: bool) -> SnfCalc {
        let (r, c) = (a.rows(), a.cols());
        let mut calc = SnfCalc {
            a,
            u: track_left.then(|| IntMatrix::identity(r)),
            v: track_right.then(|| IntMatrix::identity(c)),
            v_inv: track_right.then(|| IntMatrix::identity(c)),
        };
        calc.process();
        calc
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
        if let Some(w) = &mut self.v_inv {
            w.swap_rows(i, j);
        }
    }

    /// row[dst] += c * row[src]
    fn row_op(&mut self, dst: usize, src: usize, c: &Int) {
        self.a.add_row_multiple(dst, src, c);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, c);
        }
    }

    /// col[dst] += c * col[src]
    fn col_op(&mut self, dst: usize, src: usize, c: &Int) {
        self.a.add_col_multiple(dst, src, c);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, c);
        }
        if let Some(w) = &mut self.v_inv {
            w.add_row_multiple(src, dst, &-c);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, Int)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    best = Some((i, j, ax));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn process(&mut self) {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        for t in 0..rows.min(cols) {
            let Some((pi, pj)) = self.find_pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let p = self.a[(t, t)].clone();
                let mut dirty = false;
                for i in t + 1..rows {
                    if !self.a[(i, t)].is_zero() {
                        let q = self.a[(i, t)].div_floor(&p);
                        self.row_op(i, t, &-q);
                        dirty |= !self.a[(i, t)].is_zero();
                    }
                }
                for j in t + 1..cols {
                    if !self.a[(t, j)].is_zero() {
                        let q = self.a[(t, j)].div_floor(&p);
                        self.col_op(j, t, &-q);
                        dirty |= !self.a[(t, j)].is_zero();
                    }
                }
                if dirty {
                    // Move the smallest remaining entry of the pivot cross to (t, t).
                    let mut best = (t, t, self.a[(t, t)].abs());
                    for i in t + 1..rows {
                        let x = self.a[(i, t)].abs();
                        if !x.is_zero() && x < best.2 {
                            best = (i, t, x);
                        }
                    }
                    for j in t + 1..cols {
                        let x = self.a[(t, j)].abs();
                        if !x.is_zero() && x < best.2 {
                            best = (t, j, x);
                        }
                    }
                    self.swap_rows(t, best.0);
                    self.swap_cols(t, best.1);
                    continue;
                }
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !p.divides(&self.a[(i, j)]));
                match bad {
                    Some((i, _)) => self.row_op(t, i, &Int::ONE),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

/// Solve `a * x = b` over ℤ; `None` when no integer solution exists.
pub fn solve(a: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let calc = SnfCalc::run(a.clone(), true, true);
    let u = calc.u.as_ref().unwrap();
    let v = calc.v.as_ref().unwrap();
    let c = u.mul_vec(b);
    let mut y = vec![Int::ZERO; a.cols()];
    for (i, ci) in c.iter().enumerate() {
        let d = if i < a.cols() { calc.a[(i, i)].clone() } else { Int::ZERO };
        if d.is_zero() {
            if !ci.is_zero() {
                return None;
            }
        } else {
            if !d.divides(ci) {
                return None;
            }
            y[i] = ci.div_exact(&d);
        }
    }
    Some(v.mul_vec(&y))
}

/// Basis (as columns) of the integer nullspace `{x : a * x = 0}`.
pub fn nullspace(a: &IntMatrix) -> IntMatrix {
    let calc = SnfCalc::run(a.clone(), false, true);
    let rank = diagonal(&calc.a).iter().filter(|x| !x.is_zero()).count();
    let v = calc.v.unwrap();
    let cols: Vec<usize> = (rank..a.cols()).collect();
    let rows: Vec<usize> = (0..a.cols()).collect();
    v.select(&rows, &cols)
}

/// Sparse row: `(column, value)` pairs with strictly increasing columns and
/// no zero values.
pub type SparseRow = Vec<(usize, Int)>;

fn sparse_combine(x: &Int, r: &SparseRow, y: &Int, p: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(r.len().max(p.len()));
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let (col, val) = match (r.get(i), p.get(j)) {
            (Some((ci, vi)), Some((cj, vj))) if ci == cj => {
                i += 1;
                j += 1;
                (*ci, &(x * vi) + &(y * vj))
            }
            (Some((ci, vi)), Some((cj, _))) if ci < cj => {
                i += 1;
                (*ci, x * vi)
            }
            (Some((ci, vi)), None) => {
                i += 1;
                (*ci, x * vi)
            }
            (_, Some((cj, vj))) => {
                j += 1;
                (*cj, y * vj)
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

/// Incrementally maintained echelon basis of a row lattice in ℤⁿ.
///
/// Entries of a new pivot row are reduced against the existing pivots to
/// keep coefficients small. Once the lattice has full rank its index `D` is
/// known and `D·ℤⁿ` lies in the lattice, so every stored entry off the pivot
/// is reduced modulo `D` as well.
pub struct RowLattice {
    ncols: usize,
    pivots: Vec<Option<SparseRow>>,
    modulus: Option<Int>,
}

impl RowLattice {
    pub fn new(ncols: usize) -> Self {
        RowLattice { ncols, pivots: vec![None; ncols], modulus: None }
    }

    fn reduce_mod(&self, r: SparseRow) -> SparseRow {
        match &self.modulus {
            None => r,
            Some(m) => r
                .into_iter()
                .enumerate()
                .filter_map(|(k, (c, v))| {
                    // keep the leading entry intact
                    let v = if k == 0 { v } else { v.rem_euclid(m) };
                    (!v.is_zero()).then_some((c, v))
                })
                .collect(),
        }
    }

    /// Replaces each non-leading entry `v` in a column with a pivot `b` by
    /// `v mod b`, subtracting multiples of that pivot row.
    fn reduce_tail(&self, mut r: SparseRow) -> SparseRow {
        let mut k = 1;
        while k < r.len() {
            let c = r[k].0;
            if let Some(p) = &self.pivots[c] {
                let q = r[k].1.div_floor(&p[0].1);
                if !q.is_zero() {
                    r = sparse_combine(&Int::ONE, &r, &-q, p);
                    k = r.partition_point(|(cc, _)| *cc < c);
                    if r.get(k).is_some_and(|(cc, _)| *cc == c) {
                        k += 1;
                    }
                    continue;
                }
            }
            k += 1;
        }
        r
    }

    fn refresh_modulus(&mut self) {
        if self.pivots.iter().all(Option::is_some) && self.ncols > 0 {
            let det: Int =
                self.pivots.iter().map(|p| p.as_ref().unwrap()[0].1.abs()).product();
            if self.modulus.as_ref() != Some(&det) {
                self.modulus = Some(det);
                let rows: Vec<_> = self.pivots.iter_mut().map(|p| p.take()).collect();
                for (c, r) in rows.into_iter().enumerate() {
                    self.pivots[c] = r.map(|r| self.reduce_mod(r));
                }
            }
        }
    }

    pub fn insert(&mut self, row: SparseRow) {
        let mut r = self.reduce_mod(row);
        let mut changed = false;
        while let Some(&(c, ref a)) = r.first() {
            let a = a.clone();
            match &self.pivots[c] {
                None => {
                    if a.is_negative() {
                        r = r.into_iter().map(|(c, v)| (c, -v)).collect();
                    }
                    let r = self.reduce_mod(self.reduce_tail(r));
                    self.pivots[c] = Some(r);
                    changed = true;
                    break;
                }
                Some(p) => {
                    let b = p[0].1.clone();
                    if b.divides(&a) {
                        let q = a.div_exact(&b);
                        r = sparse_combine(&Int::ONE, &r, &-q, p);
                    } else {
                        let (g, s, t) = a.ext_gcd(&b);
                        let new_p = sparse_combine(&s, &r, &t, p);
                        let rest = sparse_combine(&b.div_exact(&g), &r, &-a.div_exact(&g), p);
                        self.pivots[c] = Some(self.reduce_mod(self.reduce_tail(new_p)));
                        changed = true;
                        r = rest;
                    }
                    r = self.reduce_mod(r);
                }
            }
        }
        if changed {
            self.refresh_modulus();
        }
    }

    /// Echelon basis rows as a dense matrix.
    pub fn basis(&self) -> IntMatrix {
        let mut rows = Vec::new();
        for r in self.pivots.iter().flatten() {
            let mut dense = vec![Int::ZERO; self.ncols];
            for (c, v) in r {
                dense[*c] = v.clone();
            }
            rows.push(dense);
        }
        // Full-rank lattices were reduced modulo D; put D·eᵢ back so the
        // basis still generates the same lattice.
        if let Some(m) = &self.modulus {
            for i in 0..self.ncols {
                let mut dense = vec![Int::ZERO; self.ncols];
                dense[i] = m.clone();
                rows.push(dense);
            }
        }
        IntMatrix::from_rows(rows, self.ncols)
    }
}

/// Quotient `ℤⁿ / (row lattice of relations)` in invariant-factor form.
///
/// `quotient` maps free-generator coordinates (columns) to canonical
/// coordinates (rows, reduced); `section` has as column `i` a lift of
/// canonical generator `i` to ℤⁿ. Generators with trivial invariant factor
/// are dropped; torsion generators come first (divisibility chain), then
/// free ones.
#[derive(Clone, Debug)]
pub struct CokernelForm {
    pub orders: Vec<Int>,
    pub quotient: IntMatrix,
    pub section: IntMatrix,
}

pub fn cokernel_of_rows(ngens: usize, relations: &IntMatrix) -> CokernelForm {
    assert_eq!(relations.cols(), ngens);
    let reduced = if relations.rows() > ngens {
        let mut lat = RowLattice::new(ngens);
        for i in 0..relations.rows() {
            let r: SparseRow = relations
                .row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect();
            lat.insert(r);
        }
        lat.basis()
    } else {
        relations.clone()
    };
    cokernel_dense(ngens, reduced)
}

pub fn cokernel_of_sparse(ngens: usize, relations: impl IntoIterator<Item = SparseRow>) -> CokernelForm {
    let mut lat = RowLattice::new(ngens);
    for r in relations {
        lat.insert(r);
    }
    cokernel_dense(ngens, lat.basis())
}

fn cokernel_dense(ngens: usize, rel: IntMatrix) -> CokernelForm {
    let calc = SnfCalc::run(rel, false, true);
    let v = calc.v.unwrap();
    let v_inv = calc.v_inv.unwrap();
    let diag = diagonal(&calc.a);
    let mut keep = Vec::new();
    let mut orders = Vec::new();
    for i in 0..ngens {
        let d = diag.get(i).cloned().unwrap_or(Int::ZERO);
        if !d.is_one() {
            keep.push(i);
            orders.push(d);
        }
    }
    let all: Vec<usize> = (0..ngens).collect();
    // y = x·V, so the coordinate functional of generator i is column i of V.
    let mut quotient = v.transpose().select(&keep, &all);
    let mut section = v_inv.transpose().select(&all, &keep);
    for (k, order) in orders.iter().enumerate() {
        let lead_negative = section
            .column(k)
            .iter()
            .find(|x| !x.is_zero())
            .is_some_and(Int::is_negative);
        if lead_negative {
            section.negate_col(k);
            quotient.negate_row(k);
        }
        for j in 0..ngens {
            let x = quotient[(k, j)].reduce_mod_order(order);
            quotient[(k, j)] = x;
        }
    }
    CokernelForm { orders, quotient, section }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) -> SnfResult {
        let r = snf(m);
        assert_eq!(r.u.mul(m).mul(&r.v), r.d, "U·M·V = D");
        assert_eq!(r.u.determinant().abs(), Int::ONE);
        assert_eq!(r.v.determinant().abs(), Int::ONE);
        let diag = diagonal(&r.d);
        for w in diag.windows(2) {
            assert!(w[0].divides(&w[1]), "divisibility chain {diag:?}");
        }
        for i in 0..r.d.rows() {
            for j in 0..r.d.cols() {
                if i != j {
                    assert!(r.d[(i, j)].is_zero());
                }
            }
        }
        r
    }

    #[test]
    fn zero_one_by_one() {
        let r = check_snf(&IntMatrix::from_i64(&[&[0]]));
        assert_eq!(r.d, IntMatrix::from_i64(&[&[0]]));
        assert_eq!(r.u, IntMatrix::identity(1));
        assert_eq!(r.v, IntMatrix::identity(1));
    }

    #[test]
    fn two_by_two_invariant_factors() {
        let r = check_snf(&IntMatrix::from_i64(&[&[2, 4], &[6, 8]]));
        assert_eq!(r.d, IntMatrix::from_i64(&[&[2, 0], &[0, 4]]));
    }

    #[test]
    fn identity_and_empty() {
        let r = check_snf(&IntMatrix::identity(3));
        assert_eq!(r.d, IntMatrix::identity(3));
        let e = check_snf(&IntMatrix::zeros(0, 0));
        assert_eq!(e.d.rows(), 0);
        let wide = check_snf(&IntMatrix::zeros(0, 3));
        assert_eq!(wide.v, IntMatrix::identity(3));
    }

    #[test]
    fn divisibility_fixup_needed() {
        // diag(2, 3) is not in Smith form; the answer is diag(1, 6).
        let r = check_snf(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(r.invariant_factors(), vec![Int::ONE, Int::from(6)]);
    }

    #[test]
    fn deterministic() {
        let m = IntMatrix::from_i64(&[&[3, 7, -2], &[5, 1, 4], &[6, 14, -4]]);
        let a = snf(&m);
        let b = snf(&m);
        assert_eq!((a.u, a.d, a.v), (b.u, b.d, b.v));
    }

    #[test]
    fn solve_and_nullspace() {
        let a = IntMatrix::from_i64(&[&[2, 4]]);
        assert!(solve(&a, &[Int::from(3)]).is_none());
        let x = solve(&a, &[Int::from(6)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![Int::from(6)]);
        let n = nullspace(&a);
        assert_eq!(n.cols(), 1);
        assert!(a.mul(&n).is_zero());
    }

    #[test]
    fn row_lattice_matches_dense() {
        let rel = IntMatrix::from_i64(&[&[4, 6], &[6, 9], &[2, 0], &[0, 3], &[10, 15]]);
        let c = cokernel_of_rows(2, &rel);
        let d = cokernel_dense(2, rel.clone());
        assert_eq!(c.orders, d.orders);
        assert_eq!(c.orders, vec![Int::from(6)]);
    }

    #[test]
    fn cokernel_drops_unit_factors() {
        // ℤ² / ⟨(2, 0)⟩ = ℤ/2 ⊕ ℤ
        let c = cokernel_of_rows(2, &IntMatrix::from_i64(&[&[2, 0]]));
        assert_eq!(c.orders, vec![Int::from(2), Int::ZERO]);
        let qs = c.quotient.mul(&c.section);
        for (k, order) in c.orders.iter().enumerate() {
            for j in 0..2 {
                let expect = if j == k { Int::ONE } else { Int::ZERO };
                assert_eq!(qs[(k, j)].reduce_mod_order(order), expect);
            }
        }
    }
}
