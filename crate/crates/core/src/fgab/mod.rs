//! Finitely generated abelian groups and their homomorphisms.
//!
//! A group is stored as a direct sum of cyclic groups: torsion summands
//! `ℤ/d₁ ⊕ … ⊕ ℤ/d_t` (each `dᵢ ≥ 2`) followed by `rank` copies of ℤ. The
//! generators are ordered the same way. When the torsion orders form a
//! divisibility chain the group is in canonical invariant-factor form, which
//! is unique; [`FgAbGroup::canonical`] produces it together with an explicit
//! isomorphism. Non-canonical decompositions are kept where generators carry
//! meaning (e.g. `ℤ/4⟨ν⟩ ⊕ ℤ/3⟨α⟩`).
//!
//! Elements are coordinate vectors over the generators, reduced modulo the
//! torsion orders, so element equality is vector equality.

mod factor;
mod hom;
mod ops;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::snf::{cokernel_of_rows, CokernelForm};

pub use factor::{factor_through, is_split_injective};
pub use hom::GroupHom;
pub use ops::{
    cokernel, direct_sum, hom_group, image, kernel, subgroup_generated, tensor, tensor_hom, tor,
    two_torsion_subgroup, DirectSum, HomGroup, Tensor,
};

pub type Element = Vec<Int>;

#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "GroupLiteral", into = "GroupLiteral")]
pub struct FgAbGroup {
    torsion: Vec<Int>,
    rank: usize,
    labels: Option<Vec<String>>,
}

/// JSON literal: `{"rank": r, "torsion": [d1, ...], "labels": [...]}`
/// (labels optional, one per generator, torsion generators first).
#[derive(Clone, Serialize, Deserialize)]
struct GroupLiteral {
    rank: usize,
    torsion: Vec<Int>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl TryFrom<GroupLiteral> for FgAbGroup {
    type Error = Error;
    fn try_from(l: GroupLiteral) -> Result<Self> {
        let g = FgAbGroup::new(l.rank, l.torsion)?;
        match l.labels {
            Some(labels) => g.with_labels(labels),
            None => Ok(g),
        }
    }
}

impl From<FgAbGroup> for GroupLiteral {
    fn from(g: FgAbGroup) -> Self {
        GroupLiteral { rank: g.rank, torsion: g.torsion, labels: g.labels }
    }
}

impl FgAbGroup {
    /// Direct sum of `ℤ/dᵢ` over `torsion` plus ℤ^rank. Every `dᵢ` must be
    /// at least 2; they need not form a divisibility chain.
    pub fn new(rank: usize, torsion: Vec<Int>) -> Result<Self> {
        if let Some(d) = torsion.iter().find(|d| **d < Int::from(2)) {
            return Err(Error::InvalidGroup(format!("torsion coefficient {d} must be at least 2")));
        }
        Ok(FgAbGroup { torsion, rank, labels: None })
    }

    /// Canonical group from invariant factors; rejects broken chains.
    pub fn from_invariants(rank: usize, torsion: Vec<Int>) -> Result<Self> {
        let g = Self::new(rank, torsion)?;
        if !g.is_canonical() {
            return Err(Error::InvalidGroup(format!(
                "torsion {:?} is not a divisibility chain",
                g.torsion
            )));
        }
        Ok(g)
    }

    pub fn trivial() -> Self {
        FgAbGroup { torsion: vec![], rank: 0, labels: None }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup { torsion: vec![], rank, labels: None }
    }

    /// `ℤ/n`, with `n = 0` meaning ℤ and `n = 1` the trivial group.
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => Self::free(1),
            1 => Self::trivial(),
            n => FgAbGroup { torsion: vec![Int::from(n)], rank: 0, labels: None },
        }
    }

    /// Direct sum of small cyclic groups; `0` means ℤ, `1` is skipped.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let orders: Vec<Int> = orders.iter().map(|&o| Int::from(o)).collect();
        Self::from_orders(&orders, None).0
    }

    /// Builds the direct sum of cyclic groups with the given orders (0 for
    /// ℤ, 1 dropped), reordering so torsion comes first. Returns the
    /// generator index of every input summand (`None` when dropped).
    pub fn from_orders(orders: &[Int], labels: Option<&[String]>) -> (Self, Vec<Option<usize>>) {
        let mut torsion = Vec::new();
        let mut tlabels = Vec::new();
        let mut flabels = Vec::new();
        let mut rank = 0;
        let mut placement = Vec::with_capacity(orders.len());
        enum Slot {
            Torsion(usize),
            Free(usize),
            Dropped,
        }
        for (i, o) in orders.iter().enumerate() {
            let o = o.abs();
            let label = labels.map(|l| l[i].clone());
            if o.is_zero() {
                placement.push(Slot::Free(rank));
                rank += 1;
                flabels.extend(label);
            } else if o.is_one() {
                placement.push(Slot::Dropped);
            } else {
                placement.push(Slot::Torsion(torsion.len()));
                torsion.push(o);
                tlabels.extend(label);
            }
        }
        let t = torsion.len();
        let index = placement
            .into_iter()
            .map(|s| match s {
                Slot::Torsion(k) => Some(k),
                Slot::Free(k) => Some(t + k),
                Slot::Dropped => None,
            })
            .collect();
        let labels = labels.map(|_| {
            tlabels.extend(flabels);
            tlabels
        });
        (FgAbGroup { torsion, rank, labels }, index)
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.ngens() {
            return Err(Error::InvalidGroup(format!(
                "{} labels for {} generators",
                labels.len(),
                self.ngens()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[Int] {
        &self.torsion
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn ngens(&self) -> usize {
        self.torsion.len() + self.rank
    }

    /// Order of generator `i`; 0 for a free generator.
    pub fn order_of(&self, i: usize) -> Int {
        self.torsion.get(i).cloned().unwrap_or(Int::ZERO)
    }

    pub fn orders(&self) -> Vec<Int> {
        (0..self.ngens()).map(|i| self.order_of(i)).collect()
    }

    /// Display name of generator `i`.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None if self.ngens() == 1 => "1".to_string(),
            None => format!("e{}", subscript(i + 1)),
        }
    }

    pub fn label_list(&self) -> Vec<String> {
        (0..self.ngens()).map(|i| self.label(i)).collect()
    }

    pub fn generator_index(&self, label: &str) -> Option<usize> {
        (0..self.ngens()).find(|&i| self.label(i) == label)
    }

    pub fn is_trivial(&self) -> bool {
        self.ngens() == 0
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn is_canonical(&self) -> bool {
        self.torsion.windows(2).all(|w| w[0].divides(&w[1]))
    }

    /// Number of elements, `None` when infinite.
    pub fn cardinality(&self) -> Option<Int> {
        self.is_finite().then(|| self.torsion.iter().cloned().product())
    }

    /// Exponent of the torsion subgroup (1 for a torsion-free group).
    pub fn torsion_exponent(&self) -> Int {
        self.torsion.iter().fold(Int::ONE, |acc, d| acc.lcm(d))
    }

    pub fn zero(&self) -> Element {
        vec![Int::ZERO; self.ngens()]
    }

    pub fn generator(&self, i: usize) -> Element {
        let mut v = self.zero();
        v[i] = Int::ONE;
        v
    }

    pub fn reduce(&self, v: &[Int]) -> Element {
        assert_eq!(v.len(), self.ngens(), "element has wrong length");
        v.iter().enumerate().map(|(i, x)| x.reduce_mod_order(&self.order_of(i))).collect()
    }

    pub fn is_zero_element(&self, v: &[Int]) -> bool {
        self.reduce(v).iter().all(Int::is_zero)
    }

    pub fn add(&self, a: &[Int], b: &[Int]) -> Element {
        let s: Vec<Int> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce(&s)
    }

    pub fn scale(&self, c: &Int, a: &[Int]) -> Element {
        let s: Vec<Int> = a.iter().map(|x| x * c).collect();
        self.reduce(&s)
    }

    /// Order of an element; 0 when it has infinite order.
    pub fn element_order(&self, v: &[Int]) -> Int {
        let v = self.reduce(v);
        let mut ord = Int::ONE;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let d = self.order_of(i);
            if d.is_zero() {
                return Int::ZERO;
            }
            ord = ord.lcm(&d.div_exact(&d.gcd(x)));
        }
        ord
    }

    /// All elements of a finite group, in lexicographic coordinate order.
    pub fn elements(&self) -> Option<Elements> {
        if !self.is_finite() {
            return None;
        }
        let bounds: Option<Vec<u64>> = self.torsion.iter().map(Int::to_u64).collect();
        Some(Elements { bounds: bounds?, next: Some(vec![0; self.torsion.len()]) })
    }

    pub fn format_element(&self, v: &[Int]) -> String {
        let v = self.reduce(v);
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let label = self.label(i);
                let compound = label.chars().any(|ch| "⊗∧+-[]· ".contains(ch));
                let label = if compound && !c.is_one() { format!("({label})") } else { label };
                if label == "1" {
                    c.to_string()
                } else if c.is_one() {
                    label
                } else if *c == Int::from(-1) {
                    format!("-{label}")
                } else {
                    format!("{c}{label}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// Invariant-factor form and the isomorphism `self → canonical`.
    pub fn canonical(&self) -> (FgAbGroup, GroupHom) {
        let n = self.ngens();
        let mut rel = Vec::new();
        for (i, d) in self.torsion.iter().enumerate() {
            let mut r = vec![Int::ZERO; n];
            r[i] = d.clone();
            rel.push(r);
        }
        let pres = Presentation::new(n, IntMatrix::from_rows(rel, n));
        let c = pres.canonicalize();
        let iso = GroupHom::new(self.clone(), c.group.clone(), c.quotient.matrix().clone())
            .expect("canonical isomorphism is well defined");
        (c.group, iso)
    }

    /// `(rank, invariant factors)`: a complete isomorphism invariant.
    pub fn invariants(&self) -> (usize, Vec<Int>) {
        let (c, _) = self.canonical();
        (c.rank, c.torsion)
    }

    pub fn is_isomorphic(&self, other: &FgAbGroup) -> bool {
        self.invariants() == other.invariants()
    }

    /// Structural equality including generator labels.
    pub fn same_as(&self, other: &FgAbGroup) -> bool {
        self == other && self.label_list() == other.label_list()
    }
}

/// Equality of decompositions: same torsion list and rank. Labels are
/// ignored. For canonical groups this is exactly isomorphism.
impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.torsion == other.torsion && self.rank == other.rank
    }
}

impl Eq for FgAbGroup {}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for i in 0..self.ngens() {
            let base = match self.torsion.get(i) {
                Some(d) => format!("ℤ/{d}"),
                None => "ℤ".to_string(),
            };
            match &self.labels {
                Some(l) => parts.push(format!("{base}⟨{}⟩", l[i])),
                None => parts.push(base),
            }
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbGroup({self})")
    }
}

/// `n` written with Unicode subscript digits.
pub(crate) fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .filter_map(|c| char::from_u32('₀' as u32 + c.to_digit(10)?))
        .collect()
}

/// Iterator over the elements of a finite group.
pub struct Elements {
    bounds: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl Iterator for Elements {
    type Item = Element;
    fn next(&mut self) -> Option<Element> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut carried = true;
        for (i, b) in self.bounds.iter().enumerate().rev() {
            succ[i] += 1;
            if succ[i] < *b {
                carried = false;
                break;
            }
            succ[i] = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(cur.into_iter().map(Int::from).collect())
    }
}

/// Abelian group presentation: `n_generators` generators modulo the row
/// lattice of `relations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub n_generators: usize,
    pub relations: IntMatrix,
}

/// Result of canonicalizing a presentation.
#[derive(Clone, Debug)]
pub struct Canonicalized {
    pub group: FgAbGroup,
    /// Quotient map from the free group on the presentation generators.
    pub quotient: GroupHom,
    /// Column `i` lifts canonical generator `i` to the free group.
    pub section: IntMatrix,
}

impl Presentation {
    pub fn new(n_generators: usize, relations: IntMatrix) -> Self {
        assert_eq!(relations.cols(), n_generators, "relation width mismatch");
        Presentation { n_generators, relations }
    }

    pub fn free(n: usize) -> Self {
        Self::new(n, IntMatrix::zeros(0, n))
    }

    pub fn canonicalize(&self) -> Canonicalized {
        let form = cokernel_of_rows(self.n_generators, &self.relations);
        Canonicalized::from_form(self.n_generators, form)
    }
}

impl Canonicalized {
    pub(crate) fn from_form(ngens: usize, form: CokernelForm) -> Self {
        let CokernelForm { orders, quotient, section } = form;
        let (group, _) = FgAbGroup::from_orders(&orders, None);
        debug_assert!(group.is_canonical());
        let quotient = GroupHom::new_reduced(FgAbGroup::free(ngens), group.clone(), quotient);
        Canonicalized { group, quotient, section }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn rejects_bad_torsion() {
        assert!(FgAbGroup::new(0, ints(&[1])).is_err());
        assert!(FgAbGroup::new(0, ints(&[0])).is_err());
        assert!(FgAbGroup::from_invariants(0, ints(&[4, 6])).is_err());
        assert!(FgAbGroup::from_invariants(1, ints(&[2, 4])).is_ok());
    }

    #[test]
    fn canonicalize_examples() {
        let p = Presentation::new(2, IntMatrix::from_i64(&[&[2, 0]]));
        let c = p.canonicalize();
        assert_eq!(c.group, FgAbGroup::new(1, ints(&[2])).unwrap());

        let c = Presentation::free(1).canonicalize();
        assert_eq!(c.group, FgAbGroup::free(1));

        let c = Presentation::free(0).canonicalize();
        assert!(c.group.is_trivial());
    }

    #[test]
    fn canonical_form_of_decomposed_group() {
        let g = FgAbGroup::new(0, ints(&[4, 3])).unwrap();
        let (c, iso) = g.canonical();
        assert_eq!(c, FgAbGroup::cyclic(12));
        assert!(iso.is_injective() && iso.is_surjective());
        let (c2, _) = c.canonical();
        assert_eq!(c2, c);
    }

    #[test]
    fn element_orders_and_enumeration() {
        let g = FgAbGroup::new(0, ints(&[2, 4])).unwrap();
        assert_eq!(g.elements().unwrap().count(), 8);
        assert_eq!(g.element_order(&ints(&[1, 2])), Int::from(2));
        assert_eq!(g.element_order(&ints(&[1, 1])), Int::from(4));
        assert_eq!(FgAbGroup::free(1).element_order(&ints(&[3])), Int::ZERO);
        assert_eq!(FgAbGroup::trivial().elements().unwrap().count(), 1);
    }

    #[test]
    fn literal_round_trip() {
        let g = FgAbGroup::new(1, ints(&[4, 3])).unwrap().with_labels(vec!["ν", "α", "x"]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"rank":1,"torsion":[4,3],"labels":["ν","α","x"]}"#);
        let back: FgAbGroup = serde_json::from_str(&s).unwrap();
        assert!(back.same_as(&g));
        assert!(serde_json::from_str::<FgAbGroup>(r#"{"rank":0,"torsion":[1]}"#).is_err());
    }

    #[test]
    fn formatting() {
        let g = FgAbGroup::new(0, ints(&[4, 3])).unwrap().with_labels(vec!["1⊗ν", "1⊗α"]).unwrap();
        assert_eq!(g.format_element(&ints(&[2, 0])), "2(1⊗ν)");
        assert_eq!(g.format_element(&ints(&[1, 1])), "1⊗ν + 1⊗α");
        assert_eq!(g.to_string(), "ℤ/4⟨1⊗ν⟩ ⊕ ℤ/3⟨1⊗α⟩");
        assert_eq!(FgAbGroup::trivial().to_string(), "0");
    }
}
