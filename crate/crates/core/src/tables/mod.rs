//! Tabulated stable homotopy data with partial knowledge of the comparison
//! map `γ : Q_k^S → HZ_{k+1}HZ`.
//!
//! Defaults hold only values that are stated outright in the literature the
//! checker follows; anything else (further stems, Eilenberg–MacLane
//! homology, more γ values) arrives through overlay files, see [`Overlay`].

mod alpha;
mod format;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgab::{is_split_injective, Element, FgAbGroup, GroupHom};
use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::quadratic::QuadraticModule;

pub use alpha::{alpha_generators, alpha_stem, divided_alpha, is_prime, valuation, AlphaGenerator, AlphaPrimes};
pub use format::{format_group, parse_group, Overlay};

/// What is known about `γ` on one generator of `Q_k^S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GammaKnowledge {
    /// The exact image, in coordinates of `HZ_{k+1}HZ`.
    Known(Element),
    Zero,
    /// Nonzero of exactly this order.
    NonzeroOfOrder(Int),
    /// The image is killed by this number.
    Unknown(Int),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaEntry {
    pub knowledge: GammaKnowledge,
    /// `γ` restricted to the cyclic summand of this generator is split
    /// injective.
    pub split: bool,
}

impl GammaEntry {
    pub fn new(knowledge: GammaKnowledge) -> Self {
        GammaEntry { knowledge, split: false }
    }

    pub fn split(knowledge: GammaKnowledge) -> Self {
        GammaEntry { knowledge, split: true }
    }
}

impl fmt::Display for GammaKnowledge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaKnowledge::Known(v) => {
                let parts: Vec<String> = v.iter().map(Int::to_string).collect();
                write!(f, "known [{}]", parts.join(", "))
            }
            GammaKnowledge::Zero => write!(f, "zero"),
            GammaKnowledge::NonzeroOfOrder(q) => write!(f, "nonzero({q})"),
            GammaKnowledge::Unknown(b) => write!(f, "unknown({b})"),
        }
    }
}

impl fmt::Display for GammaEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.knowledge)?;
        if self.split {
            write!(f, " split")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Coverage {
    /// The whole of `Q_k^S` is tabulated.
    Full,
    /// Only a known direct summand (α family generators) is available.
    Fragment,
}

/// Everything the checker needs about one stem.
#[derive(Clone, Debug)]
pub struct StemData {
    pub stem: u32,
    /// `Q_k^S`, or its known fragment; generators carry their names.
    pub group: FgAbGroup,
    pub coverage: Coverage,
    /// Knowledge per generator; `None` means unconstrained.
    pub entries: Vec<Option<GammaEntry>>,
    /// `HZ_{k+1}HZ` when tabulated.
    pub codomain: Option<FgAbGroup>,
    pub torsion_exponent_rule: bool,
}

impl StemData {
    /// Name used to report an unknown entry, e.g. `stem3.ν`.
    pub fn entry_name(&self, g: usize) -> String {
        format!("stem{}.{}", self.stem, self.group.label(g))
    }

    /// A bound `b_g` with `b_g·γ(g) = 0` for every admissible `γ` (0 when
    /// none is known); `None` when `γ(g) = 0` is forced.
    pub fn order_bound(&self, g: usize) -> Option<Int> {
        let ord = self.group.order_of(g);
        let b = match self.entries[g].as_ref().map(|e| &e.knowledge) {
            Some(GammaKnowledge::Zero) => return None,
            Some(GammaKnowledge::Known(v)) => match &self.codomain {
                Some(e) => e.element_order(v),
                None => ord.clone(),
            },
            Some(GammaKnowledge::NonzeroOfOrder(q)) => q.clone(),
            Some(GammaKnowledge::Unknown(b)) => ord.gcd(b),
            None => ord.clone(),
        };
        let b = match &self.codomain {
            Some(e) if e.is_finite() => b.gcd(&e.torsion_exponent()),
            None if self.torsion_exponent_rule && !b.is_zero() => radical(&b),
            _ => b,
        };
        (!b.is_one()).then_some(b)
    }

    /// The universal surrogate `Q → ⊕ ℤ/b_g`, `g ↦ 1`. Every admissible
    /// `γ` factors through it, so an element in its kernel is killed by
    /// every admissible `γ`.
    pub fn surrogate(&self) -> GroupHom {
        let mut orders = Vec::new();
        let mut labels = Vec::new();
        let mut cols = Vec::new();
        for g in 0..self.group.ngens() {
            if let Some(b) = self.order_bound(g) {
                orders.push(b);
                labels.push(format!("γ({})", self.group.label(g)));
                cols.push(g);
            }
        }
        let (target, index) = FgAbGroup::from_orders(&orders, Some(&labels));
        let mut m = IntMatrix::zeros(target.ngens(), self.group.ngens());
        for (k, g) in cols.into_iter().enumerate() {
            if let Some(row) = index[k] {
                m[(row, g)] = Int::ONE;
            }
        }
        GroupHom::new(self.group.clone(), target, m).expect("surrogate map is well defined")
    }

    /// True when `g` is certainly mapped to a nonzero element.
    pub fn certainly_nonzero(&self, g: usize) -> bool {
        match self.entries[g].as_ref().map(|e| &e.knowledge) {
            Some(GammaKnowledge::NonzeroOfOrder(_)) => true,
            Some(GammaKnowledge::Known(v)) => match &self.codomain {
                Some(e) => !e.is_zero_element(v),
                None => v.iter().any(|x| !x.is_zero()),
            },
            _ => false,
        }
    }
}

fn radical(n: &Int) -> Int {
    let mut n = n.abs();
    let mut r = Int::ONE;
    let mut p = Int::from(2);
    while &p * &p <= n {
        if p.divides(&n) {
            r = &r * &p;
            while p.divides(&n) {
                n = n.div_exact(&p);
            }
        }
        p += Int::ONE;
    }
    if n > Int::ONE {
        r = &r * &n;
    }
    r
}

/// One total `γ : Q_k^S → HZ_{k+1}HZ` consistent with the tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaCompletion {
    pub stem: u32,
    pub map: GroupHom,
}

impl GammaCompletion {
    /// `gen ↦ value` per generator, for reports.
    pub fn describe(&self) -> String {
        self.map.to_string()
    }
}

/// Key of a product of two stable generators: `(stem, name) · (stem, name)`.
pub type ProductKey = (u32, String, u32, String);

/// Ring relation stated among stable generators, checked against the
/// stored product table.
pub struct RingRelation {
    pub text: &'static str,
    lhs: (i64, &'static [(u32, &'static str)]),
    /// `None` means the relation reads `lhs = 0`.
    rhs: Option<(i64, &'static [(u32, &'static str)])>,
}

pub const RING_RELATIONS: [RingRelation; 6] = [
    RingRelation { text: "2η = 0", lhs: (2, &[(1, "η")]), rhs: None },
    RingRelation { text: "4ν = η³", lhs: (4, &[(3, "ν")]), rhs: Some((1, &[(1, "η"), (1, "η"), (1, "η")])) },
    RingRelation { text: "ην = 0", lhs: (1, &[(1, "η"), (3, "ν")]), rhs: None },
    RingRelation { text: "2ν² = 0", lhs: (2, &[(3, "ν"), (3, "ν")]), rhs: None },
    RingRelation { text: "3α = 0", lhs: (3, &[(3, "α")]), rhs: None },
    RingRelation { text: "α² = 0", lhs: (1, &[(3, "α"), (3, "α")]), rhs: None },
];

const MAX_COMPLETIONS: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableTables {
    pub pi_stable: BTreeMap<u32, FgAbGroup>,
    pub pi_products: BTreeMap<ProductKey, Element>,
    pub q_stable: BTreeMap<u32, FgAbGroup>,
    /// `Q_{k,n}` keyed by `(k, n)`.
    pub q_unstable: BTreeMap<(u32, u32), FgAbGroup>,
    /// `HZ_m HZ` keyed by `m`.
    pub em_homology: BTreeMap<u32, FgAbGroup>,
    /// `Q_{n−1}{Sⁿ}` keyed by `n`.
    pub metastable_qm: BTreeMap<u32, QuadraticModule>,
    pub gamma: BTreeMap<(u32, String), GammaEntry>,
    pub alpha_primes: AlphaPrimes,
    pub torsion_exponent_rule: bool,
    /// Where the contents came from: `defaults` and overlay paths.
    pub sources: Vec<String>,
}

fn named(torsion: &[(u64, &str)]) -> FgAbGroup {
    let orders: Vec<Int> = torsion.iter().map(|&(d, _)| Int::from(d)).collect();
    let labels: Vec<String> = torsion.iter().map(|&(_, l)| l.to_string()).collect();
    FgAbGroup::from_orders(&orders, Some(&labels)).0
}

impl StableTables {
    pub fn empty() -> Self {
        StableTables {
            pi_stable: BTreeMap::new(),
            pi_products: BTreeMap::new(),
            q_stable: BTreeMap::new(),
            q_unstable: BTreeMap::new(),
            em_homology: BTreeMap::new(),
            metastable_qm: BTreeMap::new(),
            gamma: BTreeMap::new(),
            alpha_primes: AlphaPrimes::All,
            torsion_exponent_rule: true,
            sources: Vec::new(),
        }
    }

    pub fn defaults() -> Self {
        let mut t = Self::empty();
        let pi: [&[(u64, &str)]; 7] = [
            &[(0, "1")],
            &[(2, "η")],
            &[(2, "η²")],
            &[(8, "ν"), (3, "α")],
            &[],
            &[],
            &[(2, "ν²")],
        ];
        let q: [&[(u64, &str)]; 7] =
            [&[(0, "1")], &[(2, "η")], &[], &[(4, "ν"), (3, "α")], &[], &[], &[]];
        for (i, (p, q)) in pi.iter().zip(q).enumerate() {
            t.pi_stable.insert(i as u32, named(p));
            t.q_stable.insert(i as u32, named(q));
        }
        let prod = |a: u32, x: &str, b: u32, y: &str| (a, x.to_string(), b, y.to_string());
        let ints = |v: &[i64]| v.iter().map(|&x| Int::from(x)).collect::<Vec<_>>();
        t.pi_products.insert(prod(1, "η", 1, "η"), ints(&[1]));
        t.pi_products.insert(prod(1, "η", 2, "η²"), ints(&[4, 0]));
        t.pi_products.insert(prod(3, "ν", 3, "ν"), ints(&[1]));
        t.pi_products.insert(prod(3, "α", 3, "α"), ints(&[0]));

        t.q_unstable.insert((2, 2), FgAbGroup::trivial());
        t.em_homology.insert(4, named(&[(2, "g2"), (3, "g3")]));
        t.metastable_qm.insert(2, QuadraticModule::z_gamma());
        t.metastable_qm.insert(3, QuadraticModule::z_lambda());

        let two = Int::from(2);
        t.gamma.insert((1, "η".into()), GammaEntry::split(GammaKnowledge::NonzeroOfOrder(two.clone())));
        t.gamma.insert((3, "α".into()), GammaEntry::new(GammaKnowledge::NonzeroOfOrder(Int::from(3))));
        t.gamma.insert((3, "ν".into()), GammaEntry::new(GammaKnowledge::Unknown(two)));
        t.sources.push("defaults".into());
        t.validate().expect("default tables are consistent");
        t
    }

    /// `Q_{k,n}`: tabulated values, plus `Q_{k,2} = 0` for `k ≥ 2`.
    pub fn q_unstable(&self, k: u32, n: u32) -> Option<FgAbGroup> {
        self.q_unstable
            .get(&(k, n))
            .cloned()
            .or_else(|| (n == 2 && k >= 2).then(FgAbGroup::trivial))
    }

    /// Indecomposables of stem `k` with γ knowledge: the full table when
    /// present, otherwise the α family fragment.
    pub fn stem(&self, k: u32) -> Result<StemData> {
        let codomain = self.em_homology.get(&(k + 1)).cloned();
        if let Some(q) = self.q_stable.get(&k) {
            let entries = (0..q.ngens())
                .map(|g| self.gamma.get(&(k, q.label(g))).cloned())
                .collect();
            return Ok(StemData {
                stem: k,
                group: q.clone(),
                coverage: Coverage::Full,
                entries,
                codomain,
                torsion_exponent_rule: self.torsion_exponent_rule,
            });
        }
        let gens = alpha_generators(k, &self.alpha_primes);
        if gens.is_empty() {
            return Err(Error::MissingTableData(format!("Q_{k}^S is not tabulated")));
        }
        let orders: Vec<Int> = gens.iter().map(|g| g.order.clone()).collect();
        let labels: Vec<String> = gens.iter().map(|g| g.label.clone()).collect();
        let group = FgAbGroup::new(0, orders)?.with_labels(labels)?;
        let entries = gens
            .iter()
            .map(|g| {
                self.gamma
                    .get(&(k, g.label.clone()))
                    .cloned()
                    .or_else(|| g.knowledge(self.torsion_exponent_rule).map(GammaEntry::new))
            })
            .collect();
        Ok(StemData {
            stem: k,
            group,
            coverage: Coverage::Fragment,
            entries,
            codomain,
            torsion_exponent_rule: self.torsion_exponent_rule,
        })
    }

    /// Every `γ : Q_k^S → HZ_{k+1}HZ` consistent with the knowledge states.
    /// A trivial `Q_k^S` has exactly one completion even when the codomain
    /// is not tabulated (it is then represented by the trivial group).
    pub fn admissible_gamma_completions(&self, k: u32) -> Result<Vec<GammaCompletion>> {
        let stem = self.stem(k)?;
        if stem.coverage == Coverage::Fragment {
            return Err(Error::MissingTableData(format!("Q_{k}^S is only partially tabulated")));
        }
        let q = &stem.group;
        let e = match (&stem.codomain, q.is_trivial()) {
            (Some(e), _) => e.clone(),
            (None, true) => FgAbGroup::trivial(),
            (None, false) => {
                return Err(Error::MissingTableData(format!("HZ_{}HZ is not tabulated", k + 1)))
            }
        };
        if !e.is_finite() {
            return Err(Error::MissingTableData(format!("HZ_{}HZ is infinite", k + 1)));
        }
        let mut choices: Vec<Vec<Element>> = Vec::new();
        for g in 0..q.ngens() {
            let ord = q.order_of(g);
            let entry = stem.entries[g].as_ref();
            let cyclic = FgAbGroup::cyclic(ord.to_u64().unwrap_or(0));
            let c: Vec<Element> = e
                .elements()
                .expect("finite codomain")
                .filter(|v| {
                    if !ord.is_zero() && !e.is_zero_element(&e.scale(&ord, v)) {
                        return false;
                    }
                    let Some(entry) = entry else { return true };
                    let ok = match &entry.knowledge {
                        GammaKnowledge::Known(x) => e.reduce(x) == *v,
                        GammaKnowledge::Zero => e.is_zero_element(v),
                        GammaKnowledge::NonzeroOfOrder(q) => e.element_order(v) == *q,
                        GammaKnowledge::Unknown(b) => e.is_zero_element(&e.scale(b, v)),
                    };
                    ok && (!entry.split || {
                        let m = IntMatrix::from_columns(std::slice::from_ref(v), e.ngens());
                        GroupHom::new(cyclic.clone(), e.clone(), m)
                            .ok()
                            .and_then(|h| is_split_injective(&h))
                            .is_some()
                    })
                })
                .collect();
            choices.push(c);
        }
        let total = choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
        match total {
            Some(n) if n <= MAX_COMPLETIONS => {}
            _ => {
                return Err(Error::BoundExceeded(format!(
                    "stem {k} has more than {MAX_COMPLETIONS} admissible γ completions"
                )))
            }
        }
        let mut out = Vec::new();
        let mut idx = vec![0usize; choices.len()];
        if choices.iter().any(Vec::is_empty) {
            return Ok(out);
        }
        loop {
            let cols: Vec<Element> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
            let m = IntMatrix::from_columns(&cols, e.ngens());
            let map = GroupHom::new(q.clone(), e.clone(), m).expect("choices respect generator orders");
            out.push(GammaCompletion { stem: k, map });
            let mut pos = choices.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// Product of two elements of `π_*^S`, using the product table and
    /// graded commutativity. `None` if a needed product is not tabulated.
    pub fn multiply(&self, a: u32, x: &[Int], b: u32, y: &[Int]) -> Option<Element> {
        let (ga, gb) = (self.pi_stable.get(&a)?, self.pi_stable.get(&b)?);
        let target = self.pi_stable.get(&(a + b))?;
        let mut out = target.zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                if xi.is_zero() || yj.is_zero() || target.is_trivial() {
                    continue;
                }
                let (la, lb) = (ga.label(i), gb.label(j));
                let direct = self.pi_products.get(&(a, la.clone(), b, lb.clone()));
                let (v, sign) = match direct {
                    Some(v) => (v, 1),
                    None => {
                        let v = self.pi_products.get(&(b, lb, a, la))?;
                        (v, if a % 2 == 1 && b % 2 == 1 { -1 } else { 1 })
                    }
                };
                let c = xi * yj * Int::from(sign);
                for (o, vi) in out.iter_mut().zip(v) {
                    *o += &c * vi;
                }
            }
        }
        Some(target.reduce(&out))
    }

    fn evaluate(&self, coef: i64, factors: &[(u32, &str)]) -> Option<(u32, Element)> {
        let (&(s0, l0), rest) = factors.split_first()?;
        let g0 = self.pi_stable.get(&s0)?;
        let mut acc = (s0, g0.generator(g0.generator_index(l0)?));
        for &(s, l) in rest {
            let g = self.pi_stable.get(&s)?;
            let y = g.generator(g.generator_index(l)?);
            acc = (acc.0 + s, self.multiply(acc.0, &acc.1, s, &y)?);
        }
        let target = self.pi_stable.get(&acc.0)?;
        Some((acc.0, target.scale(&Int::from(coef), &acc.1)))
    }

    /// Each ring relation with whether it holds; `None` when the tables do
    /// not cover it.
    pub fn check_ring_relations(&self) -> Vec<(&'static str, Option<bool>)> {
        RING_RELATIONS
            .iter()
            .map(|r| {
                let lhs = self.evaluate(r.lhs.0, r.lhs.1);
                let holds = match (&lhs, r.rhs) {
                    (Some((s, v)), None) => Some(self.pi_stable[s].is_zero_element(v)),
                    (Some((s, v)), Some((c, f))) => {
                        self.evaluate(c, f).map(|(s2, w)| s2 == *s && w == *v)
                    }
                    (None, _) => None,
                };
                (r.text, holds)
            })
            .collect()
    }

    /// Consistency of γ entries with the tabulated groups, and the
    /// exponent-`p` rule for `HZ_*HZ`.
    pub fn validate(&self) -> Result<()> {
        if self.torsion_exponent_rule {
            for (m, g) in &self.em_homology {
                if let Some(d) = g.torsion().iter().find(|d| radical(d) != **d) {
                    return Err(Error::Inconsistent(format!(
                        "HZ_{m}HZ has a summand ℤ/{d}, but p-torsion of HZ_*HZ has exponent p"
                    )));
                }
            }
        }
        for (key, prod) in &self.pi_products {
            if let Some(t) = self.pi_stable.get(&(key.0 + key.2)) {
                if prod.len() != t.ngens() {
                    return Err(Error::Inconsistent(format!(
                        "product {}·{} has {} coordinates, π_{}^S has {} generators",
                        key.1,
                        key.3,
                        prod.len(),
                        key.0 + key.2,
                        t.ngens()
                    )));
                }
            }
        }
        for ((k, label), entry) in &self.gamma {
            let stem = self.stem(*k).map_err(|_| {
                Error::Inconsistent(format!("γ entry {k}.{label} refers to an untabulated stem"))
            })?;
            let g = stem.group.generator_index(label).ok_or_else(|| {
                Error::Inconsistent(format!("γ entry {k}.{label}: no generator {label} in stem {k}"))
            })?;
            let ord = stem.group.order_of(g);
            let codomain = stem.codomain.as_ref();
            let exp = codomain.map(|e| if e.is_finite() { e.torsion_exponent() } else { Int::ZERO });
            let fail = |msg: String| Err(Error::Inconsistent(format!("γ entry {k}.{label}: {msg}")));
            match &entry.knowledge {
                GammaKnowledge::Known(v) => {
                    let Some(e) = codomain else {
                        return fail(format!("known value needs HZ_{}HZ", k + 1));
                    };
                    if v.len() != e.ngens() {
                        return fail(format!("value has {} coordinates, HZ_{}HZ has {}", v.len(), k + 1, e.ngens()));
                    }
                    if !ord.is_zero() && !e.is_zero_element(&e.scale(&ord, v)) {
                        return fail(format!("value is not killed by the order {ord}"));
                    }
                }
                GammaKnowledge::Zero => {}
                GammaKnowledge::NonzeroOfOrder(q) => {
                    if *q < Int::from(2) || (!ord.is_zero() && !q.divides(&ord)) {
                        return fail(format!("order {q} is impossible for a generator of order {ord}"));
                    }
                    if let Some(exp) = &exp {
                        if !exp.is_zero() && !q.divides(exp) {
                            return fail(format!("order {q} exceeds the codomain exponent {exp}"));
                        }
                    }
                    if self.torsion_exponent_rule && radical(q) != *q {
                        return fail(format!("order {q} violates the exponent-p rule"));
                    }
                }
                GammaKnowledge::Unknown(b) => {
                    if b.is_zero() || b.is_negative() {
                        return fail("order bound must be positive".into());
                    }
                    if let Some(exp) = &exp {
                        if !exp.is_zero() && !b.divides(exp) {
                            return fail(format!("order bound {b} does not divide the codomain exponent {exp}"));
                        }
                    }
                }
            }
            if entry.split && entry.knowledge != GammaKnowledge::NonzeroOfOrder(ord.clone()) {
                return fail("split entries must be nonzero of the generator's full order".into());
            }
        }
        Ok(())
    }

    /// Applies an overlay on top of these tables and re-validates.
    pub fn apply(&self, overlay: &Overlay, source: &str) -> Result<StableTables> {
        let mut t = self.clone();
        t.pi_stable.extend(overlay.pi_stable.clone());
        t.pi_products.extend(overlay.pi_products.clone());
        t.q_stable.extend(overlay.q_stable.clone());
        t.q_unstable.extend(overlay.q_unstable.clone());
        t.em_homology.extend(overlay.em_homology.clone());
        t.metastable_qm.extend(overlay.metastable_qm.clone());
        t.gamma.extend(overlay.gamma.clone());
        if let Some(p) = &overlay.alpha_primes {
            t.alpha_primes = p.clone();
        }
        if let Some(r) = overlay.torsion_exponent_rule {
            t.torsion_exponent_rule = r;
        }
        t.sources.push(source.to_string());
        t.validate()?;
        Ok(t)
    }

    /// `merge(base, overlay)`.
    pub fn merge(base: &StableTables, overlay: &Overlay) -> Result<StableTables> {
        base.apply(overlay, "overlay")
    }

    /// Reads a complete table file (as written by [`StableTables::dump`]).
    pub fn load_from_file(path: &std::path::Path) -> Result<StableTables> {
        let overlay = Overlay::load(path)?;
        let mut t = StableTables::empty().apply(&overlay, &path.display().to_string())?;
        t.sources = vec![path.display().to_string()];
        Ok(t)
    }

    /// Defaults followed by each overlay file in order.
    pub fn with_overlays<P: AsRef<std::path::Path>>(paths: &[P]) -> Result<StableTables> {
        let mut t = StableTables::defaults();
        for p in paths {
            let p = p.as_ref();
            t = t.apply(&Overlay::load(p)?, &p.display().to_string())?;
        }
        Ok(t)
    }

    /// Human-readable summary of one stem.
    pub fn describe_stem(&self, k: u32) -> String {
        let mut out = String::new();
        let show = |g: Option<&FgAbGroup>| g.map_or("(not tabulated)".to_string(), |g| g.to_string());
        out.push_str(&format!("stem {k}\n"));
        out.push_str(&format!("  π_{k}^S      = {}\n", show(self.pi_stable.get(&k))));
        match self.stem(k) {
            Ok(s) => {
                let cov = match s.coverage {
                    Coverage::Full => "",
                    Coverage::Fragment => "  (α family fragment)",
                };
                out.push_str(&format!("  Q_{k}^S      = {}{cov}\n", s.group));
                out.push_str(&format!("  HZ_{}HZ     = {}\n", k + 1, show(s.codomain.as_ref())));
                for g in 0..s.group.ngens() {
                    let state = s.entries[g].as_ref().map_or("unconstrained".to_string(), |e| e.to_string());
                    out.push_str(&format!("  γ({}) : {state}\n", s.group.label(g)));
                }
            }
            Err(_) => out.push_str("  Q^S        = (not tabulated)\n"),
        }
        out
    }
}
