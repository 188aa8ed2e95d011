//! The odd-primary α family in stems `2i(p−1) − 1`.
//!
//! At a prime `p` the family contributes a cyclic group of order `p^J`,
//! `J = ν_p(i) + 1`, generated by the top divided element `α_{i/J}`; the
//! others are its multiples, `α_{i/j} = p^{J−j}·α_{i/J}`, and `α_i = α_{i/1}`.

use serde::{Deserialize, Serialize};

use super::GammaKnowledge;
use crate::error::{Error, Result};
use crate::int::Int;

/// Which odd primes contribute α generators to otherwise untabulated stems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlphaPrimes {
    All,
    List(Vec<u64>),
}

impl AlphaPrimes {
    pub fn allows(&self, p: u64) -> bool {
        match self {
            AlphaPrimes::All => true,
            AlphaPrimes::List(l) => l.contains(&p),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// p-adic valuation of `i > 0`.
pub fn valuation(p: u64, mut i: u64) -> u32 {
    let mut v = 0;
    while i.is_multiple_of(p) {
        i /= p;
        v += 1;
    }
    v
}

fn index_text(i: u64) -> String {
    if i < 10 { i.to_string() } else { format!("{{{i}}}") }
}

/// The generator a prime `p` contributes to stem `2i(p−1) − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaGenerator {
    pub p: u64,
    pub i: u64,
    /// `J = ν_p(i) + 1`; the generator has order `p^J`.
    pub top: u32,
    pub label: String,
    pub order: Int,
}

impl AlphaGenerator {
    /// Knowledge of `γ` on this generator. `α₁` is detected; `αᵢ` for
    /// `i ≥ 2` is killed; a divided generator (`J ≥ 2`) is only known to
    /// have `γ(p·α) = 0`, which needs the exponent-`p` rule.
    pub fn knowledge(&self, torsion_exponent_rule: bool) -> Option<GammaKnowledge> {
        match (self.i, self.top) {
            (1, _) => Some(GammaKnowledge::NonzeroOfOrder(Int::from(self.p))),
            (_, 1) => Some(GammaKnowledge::Zero),
            _ if torsion_exponent_rule => Some(GammaKnowledge::Unknown(Int::from(self.p))),
            _ => None,
        }
    }
}

pub fn alpha_stem(p: u64, i: u64) -> u64 {
    2 * i * (p - 1) - 1
}

/// Generators contributed to stem `k`, in increasing order of `p`.
pub fn alpha_generators(k: u32, primes: &AlphaPrimes) -> Vec<AlphaGenerator> {
    let k = u64::from(k);
    if k.is_multiple_of(2) {
        return vec![];
    }
    let m = k.div_ceil(2);
    (3..=m + 1)
        .filter(|&p| is_prime(p) && m.is_multiple_of(p - 1) && primes.allows(p))
        .map(|p| {
            let i = m / (p - 1);
            let top = valuation(p, i) + 1;
            let label = if top == 1 {
                format!("α_{}[{p}]", index_text(i))
            } else {
                format!("α_{{{i}/{top}}}[{p}]")
            };
            AlphaGenerator { p, i, top, label, order: Int::from(p).pow(top) }
        })
        .collect()
}

/// Locates `α_{i/j}` at `p`: its stem, the label of the generator it is a
/// multiple of, and the multiplier `p^{J−j}`. Requires `j ≤ ν_p(i) + 1`.
pub fn divided_alpha(p: u64, i: u64, j: u32) -> Result<(u32, String, Int)> {
    if !is_prime(p) || p < 3 {
        return Err(Error::InvalidProblem(format!("α elements need an odd prime, got {p}")));
    }
    if i == 0 || j == 0 {
        return Err(Error::InvalidProblem("α_{i/j} needs i, j ≥ 1".into()));
    }
    let top = valuation(p, i) + 1;
    if j > top {
        return Err(Error::InvalidProblem(format!(
            "α_{{{i}/{j}}} at p = {p} needs j ≤ ν_p(i) + 1 = {top}"
        )));
    }
    let stem = u32::try_from(alpha_stem(p, i))
        .map_err(|_| Error::InvalidProblem("stem out of range".into()))?;
    let gen = alpha_generators(stem, &AlphaPrimes::List(vec![p])).remove(0);
    Ok((stem, gen.label, Int::from(p).pow(top - j)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stems_and_labels() {
        let s7 = alpha_generators(7, &AlphaPrimes::All);
        let labels: Vec<_> = s7.iter().map(|g| g.label.as_str()).collect();
        assert_eq!(labels, ["α_2[3]", "α_1[5]"]);
        let s11 = alpha_generators(11, &AlphaPrimes::All);
        assert_eq!(s11[0].label, "α_{3/2}[3]");
        assert_eq!(s11[0].order, Int::from(9));
        assert_eq!(s11[1].label, "α_1[7]");
        assert!(alpha_generators(4, &AlphaPrimes::All).is_empty());
        assert!(alpha_generators(7, &AlphaPrimes::List(vec![])).is_empty());
    }

    #[test]
    fn knowledge_states() {
        let s11 = alpha_generators(11, &AlphaPrimes::All);
        assert_eq!(s11[0].knowledge(true), Some(GammaKnowledge::Unknown(Int::from(3))));
        assert_eq!(s11[0].knowledge(false), None);
        assert_eq!(s11[1].knowledge(true), Some(GammaKnowledge::NonzeroOfOrder(Int::from(7))));
        let s7 = alpha_generators(7, &AlphaPrimes::All);
        assert_eq!(s7[0].knowledge(true), Some(GammaKnowledge::Zero));
    }

    #[test]
    fn divided_alpha_validity() {
        assert_eq!(divided_alpha(3, 3, 2).unwrap(), (11, "α_{3/2}[3]".to_string(), Int::ONE));
        assert_eq!(divided_alpha(3, 3, 1).unwrap().2, Int::from(3));
        assert!(divided_alpha(3, 3, 3).is_err());
        assert!(divided_alpha(3, 2, 2).is_err());
        assert!(divided_alpha(4, 1, 1).is_err());
    }
}
