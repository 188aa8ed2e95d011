//! Line-oriented text format for table overlays.
//!
//! ```text
//! # comment
//! [q_stable]
//! 3 = Z/4<ν> + Z/3<α>
//! [q_unstable]
//! 2,2 = 0
//! [em_homology]
//! 4 = Z/2<g2> + Z/3<g3>
//! [metastable_qm]
//! 2 = Z_Gamma
//! [pi_products]
//! 1.η * 2.η² = [4, 0]
//! [gamma]
//! 3.ν = unknown(2)
//! 1.η = nonzero(2) split
//! [settings]
//! torsion_exponent_rule = true
//! alpha_primes = all
//! ```
//!
//! Groups are sums of `Z` and `Z/n`, each optionally named with `<label>`
//! (all or none); `0` is the trivial group. `ℤ`, `⊕` and `⟨⟩` are accepted
//! as well.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::path::Path;

use super::{AlphaPrimes, GammaEntry, GammaKnowledge, ProductKey, StableTables};
use crate::error::{Error, Result};
use crate::fgab::{Element, FgAbGroup};
use crate::int::Int;
use crate::quadratic::QuadraticModule;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Overlay {
    pub pi_stable: BTreeMap<u32, FgAbGroup>,
    pub pi_products: BTreeMap<ProductKey, Element>,
    pub q_stable: BTreeMap<u32, FgAbGroup>,
    pub q_unstable: BTreeMap<(u32, u32), FgAbGroup>,
    pub em_homology: BTreeMap<u32, FgAbGroup>,
    pub metastable_qm: BTreeMap<u32, QuadraticModule>,
    pub gamma: BTreeMap<(u32, String), GammaEntry>,
    pub torsion_exponent_rule: Option<bool>,
    pub alpha_primes: Option<AlphaPrimes>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    PiStable,
    QStable,
    QUnstable,
    EmHomology,
    Metastable,
    Products,
    Gamma,
    Settings,
}

fn section(name: &str) -> Option<Section> {
    Some(match name {
        "pi_stable" => Section::PiStable,
        "q_stable" => Section::QStable,
        "q_unstable" => Section::QUnstable,
        "em_homology" => Section::EmHomology,
        "metastable_qm" => Section::Metastable,
        "pi_products" => Section::Products,
        "gamma" => Section::Gamma,
        "settings" => Section::Settings,
        _ => return None,
    })
}

/// Parses `Z/4<ν> + Z/3<α>`, `Z + Z/2`, `0`.
pub fn parse_group(s: &str) -> std::result::Result<FgAbGroup, String> {
    let s = s.trim();
    if s == "0" {
        return Ok(FgAbGroup::trivial());
    }
    let normalized = s.replace('ℤ', "Z").replace('⊕', "+").replace('⟨', "<").replace('⟩', ">");
    let mut terms = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in normalized.chars() {
        match c {
            '<' => depth += 1,
            '>' => depth = depth.checked_sub(1).ok_or("unbalanced '>'")?,
            '+' if depth == 0 => {
                terms.push(std::mem::take(&mut current));
                continue;
            }
            _ => {}
        }
        current.push(c);
    }
    if depth != 0 {
        return Err("unbalanced '<'".into());
    }
    terms.push(current);

    let mut orders = Vec::new();
    let mut labels = Vec::new();
    for term in &terms {
        let term = term.trim();
        let (body, label) = match term.find('<') {
            Some(i) if term.ends_with('>') => (term[..i].trim(), Some(term[i + 1..term.len() - 1].to_string())),
            Some(_) => return Err(format!("bad label in {term:?}")),
            None => (term, None),
        };
        let order = if body == "Z" {
            Int::ZERO
        } else if let Some(n) = body.strip_prefix("Z/") {
            let n: Int = n.trim().parse().map_err(|_| format!("bad order in {term:?}"))?;
            if n < Int::from(2) {
                return Err(format!("cyclic order must be at least 2 in {term:?}"));
            }
            n
        } else {
            return Err(format!("expected Z or Z/n, got {term:?}"));
        };
        orders.push(order);
        labels.push(label);
    }
    let named = labels.iter().filter(|l| l.is_some()).count();
    if named != 0 && named != labels.len() {
        return Err("either every summand is named or none is".into());
    }
    let labels: Option<Vec<String>> = labels.into_iter().collect();
    Ok(FgAbGroup::from_orders(&orders, labels.as_deref()).0)
}

/// Inverse of [`parse_group`].
pub fn format_group(g: &FgAbGroup) -> String {
    if g.is_trivial() {
        return "0".into();
    }
    (0..g.ngens())
        .map(|i| {
            let d = g.order_of(i);
            let base = if d.is_zero() { "Z".to_string() } else { format!("Z/{d}") };
            match g.labels() {
                Some(l) => format!("{base}<{}>", l[i]),
                None => base,
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn parse_vector(s: &str) -> std::result::Result<Element, String> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| format!("expected [c, ...], got {s:?}"))?;
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    inner
        .split(',')
        .map(|c| c.trim().parse::<Int>().map_err(|_| format!("bad integer {c:?}")))
        .collect()
}

fn format_vector(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(Int::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn parse_stem(s: &str) -> std::result::Result<u32, String> {
    s.trim().parse().map_err(|_| format!("bad stem {s:?}"))
}

/// `3.ν` → `(3, "ν")`
fn parse_generator_ref(s: &str) -> std::result::Result<(u32, String), String> {
    let (stem, label) = s.trim().split_once('.').ok_or_else(|| format!("expected stem.generator, got {s:?}"))?;
    Ok((parse_stem(stem)?, label.trim().to_string()))
}

fn call_arg<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    s.strip_prefix(name)?.trim().strip_prefix('(')?.strip_suffix(')')
}

fn parse_gamma_entry(s: &str) -> std::result::Result<GammaEntry, String> {
    let mut s = s.trim();
    let mut split = false;
    if let Some(rest) = s.strip_suffix("split") {
        split = true;
        s = rest.trim();
    }
    let positive = |a: &str| -> std::result::Result<Int, String> {
        match a.trim().parse::<Int>() {
            Ok(n) if n > Int::ZERO => Ok(n),
            _ => Err(format!("expected a positive integer, got {a:?}")),
        }
    };
    let knowledge = if s == "zero" {
        GammaKnowledge::Zero
    } else if let Some(v) = s.strip_prefix("known") {
        GammaKnowledge::Known(parse_vector(v)?)
    } else if let Some(a) = call_arg(s, "nonzero") {
        GammaKnowledge::NonzeroOfOrder(positive(a)?)
    } else if let Some(a) = call_arg(s, "unknown") {
        GammaKnowledge::Unknown(positive(a)?)
    } else {
        return Err(format!("expected known [..], zero, nonzero(q) or unknown(b), got {s:?}"));
    };
    Ok(GammaEntry { knowledge, split })
}

fn parse_alpha_primes(s: &str) -> std::result::Result<AlphaPrimes, String> {
    match s.trim() {
        "all" => Ok(AlphaPrimes::All),
        "none" => Ok(AlphaPrimes::List(vec![])),
        list => list
            .split(',')
            .map(|p| match p.trim().parse::<u64>() {
                Ok(p) if super::is_prime(p) && p > 2 => Ok(p),
                _ => Err(format!("expected an odd prime, got {p:?}")),
            })
            .collect::<std::result::Result<_, _>>()
            .map(AlphaPrimes::List),
    }
}

impl Overlay {
    pub fn parse(text: &str) -> Result<Overlay> {
        let mut o = Overlay::default();
        let mut current: Option<Section> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                current = Some(section(name.trim()).ok_or_else(|| err(format!("unknown section [{name}]")))?);
                continue;
            }
            let sec = current.ok_or_else(|| err("entry before any [section]".into()))?;
            let (key, value) = line.split_once('=').ok_or_else(|| err("expected key = value".into()))?;
            let (key, value) = (key.trim(), value.trim());
            let r: std::result::Result<(), String> = (|| {
                match sec {
                    Section::PiStable => {
                        o.pi_stable.insert(parse_stem(key)?, parse_group(value)?);
                    }
                    Section::QStable => {
                        o.q_stable.insert(parse_stem(key)?, parse_group(value)?);
                    }
                    Section::EmHomology => {
                        o.em_homology.insert(parse_stem(key)?, parse_group(value)?);
                    }
                    Section::QUnstable => {
                        let (k, n) = key.split_once(',').ok_or("expected k,n")?;
                        o.q_unstable.insert((parse_stem(k)?, parse_stem(n)?), parse_group(value)?);
                    }
                    Section::Metastable => {
                        let m = QuadraticModule::parse(value).map_err(|e| e.to_string())?;
                        o.metastable_qm.insert(parse_stem(key)?, m);
                    }
                    Section::Products => {
                        let (a, b) = key.split_once('*').ok_or("expected a.x * b.y")?;
                        let ((sa, la), (sb, lb)) = (parse_generator_ref(a)?, parse_generator_ref(b)?);
                        o.pi_products.insert((sa, la, sb, lb), parse_vector(value)?);
                    }
                    Section::Gamma => {
                        o.gamma.insert(parse_generator_ref(key)?, parse_gamma_entry(value)?);
                    }
                    Section::Settings => match key {
                        "torsion_exponent_rule" => {
                            o.torsion_exponent_rule = Some(match value {
                                "true" => true,
                                "false" => false,
                                _ => return Err(format!("expected true or false, got {value:?}")),
                            });
                        }
                        "alpha_primes" => o.alpha_primes = Some(parse_alpha_primes(value)?),
                        _ => return Err(format!("unknown setting {key:?}")),
                    },
                }
                Ok(())
            })();
            r.map_err(err)?;
        }
        Ok(o)
    }

    pub fn load(path: &Path) -> Result<Overlay> {
        Overlay::parse(&std::fs::read_to_string(path)?)
    }

    /// The overlay that rebuilds `t` when applied to empty tables.
    pub fn from_tables(t: &StableTables) -> Overlay {
        Overlay {
            pi_stable: t.pi_stable.clone(),
            pi_products: t.pi_products.clone(),
            q_stable: t.q_stable.clone(),
            q_unstable: t.q_unstable.clone(),
            em_homology: t.em_homology.clone(),
            metastable_qm: t.metastable_qm.clone(),
            gamma: t.gamma.clone(),
            torsion_exponent_rule: Some(t.torsion_exponent_rule),
            alpha_primes: Some(t.alpha_primes.clone()),
        }
    }
}

impl fmt::Display for Overlay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let groups = |out: &mut String, name: &str, m: &BTreeMap<u32, FgAbGroup>| {
            if !m.is_empty() {
                let _ = writeln!(out, "[{name}]");
                for (k, g) in m {
                    let _ = writeln!(out, "{k} = {}", format_group(g));
                }
                out.push('\n');
            }
        };
        groups(&mut out, "pi_stable", &self.pi_stable);
        groups(&mut out, "q_stable", &self.q_stable);
        if !self.q_unstable.is_empty() {
            out.push_str("[q_unstable]\n");
            for ((k, n), g) in &self.q_unstable {
                let _ = writeln!(out, "{k},{n} = {}", format_group(g));
            }
            out.push('\n');
        }
        groups(&mut out, "em_homology", &self.em_homology);
        if !self.metastable_qm.is_empty() {
            out.push_str("[metastable_qm]\n");
            for (n, m) in &self.metastable_qm {
                let text = match m.builtin_name() {
                    Some(name) => name.to_string(),
                    None => serde_json::to_string(m).map_err(|_| fmt::Error)?,
                };
                let _ = writeln!(out, "{n} = {text}");
            }
            out.push('\n');
        }
        if !self.pi_products.is_empty() {
            out.push_str("[pi_products]\n");
            for ((a, x, b, y), v) in &self.pi_products {
                let _ = writeln!(out, "{a}.{x} * {b}.{y} = {}", format_vector(v));
            }
            out.push('\n');
        }
        if !self.gamma.is_empty() {
            out.push_str("[gamma]\n");
            for ((k, g), e) in &self.gamma {
                let _ = writeln!(out, "{k}.{g} = {e}");
            }
            out.push('\n');
        }
        if self.torsion_exponent_rule.is_some() || self.alpha_primes.is_some() {
            out.push_str("[settings]\n");
            if let Some(r) = self.torsion_exponent_rule {
                let _ = writeln!(out, "torsion_exponent_rule = {r}");
            }
            if let Some(p) = &self.alpha_primes {
                let text = match p {
                    AlphaPrimes::All => "all".to_string(),
                    AlphaPrimes::List(l) if l.is_empty() => "none".to_string(),
                    AlphaPrimes::List(l) => l.iter().map(u64::to_string).collect::<Vec<_>>().join(","),
                };
                let _ = writeln!(out, "alpha_primes = {text}");
            }
        }
        f.write_str(out.trim_end())?;
        f.write_str("\n")
    }
}

impl StableTables {
    /// The tables in overlay syntax; [`StableTables::load_from_file`] reads
    /// this back.
    pub fn dump(&self) -> String {
        Overlay::from_tables(self).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_syntax() {
        let g = parse_group("Z/4<ν> + Z/3<α>").unwrap();
        assert_eq!(g.label_list(), ["ν", "α"]);
        assert_eq!(format_group(&g), "Z/4<ν> + Z/3<α>");
        assert_eq!(parse_group("ℤ/4⟨ν⟩ ⊕ ℤ/3⟨α⟩").unwrap(), g);
        assert_eq!(parse_group("Z + Z/2").unwrap(), FgAbGroup::from_cyclic_orders(&[2, 0]));
        assert!(parse_group("0").unwrap().is_trivial());
        assert!(parse_group("Z/4<ν> + Z/3").is_err());
        assert!(parse_group("Z/1").is_err());
        assert_eq!(parse_group("Z/9<α_{3/2}[3]>").unwrap().label(0), "α_{3/2}[3]");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "[gamma]\n3.ν = unknown(2)\n\n3.α = sometimes\n";
        match Overlay::parse(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(Overlay::parse("1 = Z"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Overlay::parse("[bogus]"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn entries_parse() {
        let o = Overlay::parse(
            "[gamma]\n1.η = nonzero(2) split\n3.ν = known [1, 0]\n[settings]\nalpha_primes = 3,5\n",
        )
        .unwrap();
        assert_eq!(o.gamma[&(1, "η".to_string())], GammaEntry::split(GammaKnowledge::NonzeroOfOrder(Int::from(2))));
        assert_eq!(
            o.gamma[&(3, "ν".to_string())].knowledge,
            GammaKnowledge::Known(vec![Int::ONE, Int::ZERO])
        );
        assert_eq!(o.alpha_primes, Some(AlphaPrimes::List(vec![3, 5])));
    }

    #[test]
    fn defaults_round_trip() {
        let t = StableTables::defaults();
        let back = StableTables::empty().apply(&Overlay::parse(&t.dump()).unwrap(), "defaults").unwrap();
        assert_eq!(back, t);
        for (k, g) in &t.q_stable {
            assert!(back.q_stable[k].same_as(g));
        }
    }
}
