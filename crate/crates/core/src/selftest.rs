//! Regression suite over the worked examples the checker must reproduce.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::fgab::{FgAbGroup, GroupHom};
use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::pi_functors::gamma_tilde;
use crate::realizability::{
    all_realizable_in_stem, check, survey_stem, three_stage_obstruction, Status, StemAnswer, SurveyOptions,
    ThreeStageInput, TwoStagePiAlgebra, Verdict,
};
use crate::tables::{parse_group, StableTables};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestCase {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_us: u64,
}

type Outcome = Result<String, String>;

fn g(s: &str) -> FgAbGroup {
    parse_group(s).expect("literal group")
}

fn expect(cond: bool, ok: String, err: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(ok)
    } else {
        Err(err())
    }
}

fn verdict(t: &StableTables, n: u32, k: u32, a: &str, b: &str, eta: &[&[i64]]) -> Result<Verdict, String> {
    let pa = TwoStagePiAlgebra::new(n, k, g(a), g(b), IntMatrix::from_i64(eta), t).map_err(|e| e.to_string())?;
    check(&pa, t).map_err(|e| e.to_string())
}

fn expect_status(v: &Verdict, status: Status, obstruction: Option<&str>) -> Outcome {
    let text = v.obstruction.as_ref().map(|o| o.text.as_str());
    let ok = v.status == status && (obstruction.is_none() || text == obstruction);
    let shown = match text {
        Some(t) => format!("{}, obstruction {t}", v.status),
        None => v.status.to_string(),
    };
    expect(ok, shown.clone(), || format!("got {shown}: {}", v.reason))
}

fn same_groups(t: &std::collections::BTreeMap<u32, FgAbGroup>, expected: &[&str]) -> Outcome {
    for (i, e) in expected.iter().enumerate() {
        let got = t.get(&(i as u32)).ok_or_else(|| format!("stem {i} missing"))?;
        let want = g(e);
        if !got.is_isomorphic(&want) {
            return Err(format!("stem {i}: {got}, expected {want}"));
        }
    }
    Ok(format!("{} stems match", expected.len()))
}

type Case = (&'static str, fn(&StableTables) -> Outcome);

fn cases() -> Vec<Case> {
    vec![
        ("π_i^S, i ≤ 6", |t| same_groups(&t.pi_stable, &["Z", "Z/2", "Z/2", "Z/24", "0", "0", "Z/2"])),
        ("Q_i^S, i ≤ 6", |t| same_groups(&t.q_stable, &["Z", "Z/2", "0", "Z/4 + Z/3", "0", "0", "0"])),
        ("ring relations of π_*^S", |t| {
            let bad: Vec<&str> =
                t.check_ring_relations().into_iter().filter(|(_, h)| *h != Some(true)).map(|(r, _)| r).collect();
            expect(bad.is_empty(), "all hold".into(), || format!("failing or unchecked: {}", bad.join(", ")))
        }),
        ("Q_{k,2} = 0 for k ≥ 2", |t| {
            let ok = (2..10).all(|k| t.q_unstable(k, 2).is_some_and(|q| q.is_trivial()));
            expect(ok, "0".into(), || "nonzero or missing".into())
        }),
        ("HZ_4HZ ≅ ℤ/6", |t| {
            let e = t.em_homology.get(&4).ok_or("missing")?;
            expect(e.is_isomorphic(&g("Z/6")), e.to_string(), || e.to_string())
        }),
        ("Γ̃ for n = 2, k = 1 on ℤ/2", |t| {
            let r = gamma_tilde(2, 1, &g("Z/2"), t).map_err(|e| e.to_string())?;
            let ok = r.group == g("Z/4") && r.labels()[0].contains('γ');
            expect(ok, r.group.to_string(), || r.group.to_string())
        }),
        ("Γ̃ for n = 3, k = 2 on ℤ²", |t| {
            let r = gamma_tilde(3, 2, &g("Z + Z"), t).map_err(|e| e.to_string())?;
            let ok = r.group == g("Z") && r.labels() == ["e₁∧e₂"];
            expect(ok, r.group.to_string(), || r.group.to_string())
        }),
        ("Γ̃ for n = 5, k = 3 on ℤ", |t| {
            let r = gamma_tilde(5, 3, &g("Z"), t).map_err(|e| e.to_string())?;
            let ok = r.group == g("Z/4 + Z/3") && r.labels() == ["1⊗ν", "1⊗α"];
            expect(ok, r.group.to_string(), || r.group.to_string())
        }),
        ("Γ̃ for n = 4, k = 2 vanishes", |t| {
            let r = gamma_tilde(4, 2, &g("Z + Z/2 + Z/3"), t).map_err(|e| e.to_string())?;
            expect(r.group.is_trivial(), "0".into(), || r.group.to_string())
        }),
        ("k = 1 example is realizable", |t| {
            expect_status(&verdict(t, 2, 1, "Z/2", "Z/4", &[&[1]])?, Status::Realizable, None)
        }),
        ("k = 2 example is realizable", |t| {
            expect_status(&verdict(t, 3, 2, "Z + Z", "Z", &[&[1]])?, Status::Realizable, None)
        }),
        ("η = 0 is realizable", |t| {
            expect_status(&verdict(t, 5, 3, "Z", "Z/4", &[&[0, 0]])?, Status::Realizable, None)
        }),
        ("smallest non-realizable Π-algebra", |t| {
            expect_status(&verdict(t, 5, 3, "Z", "Z/4", &[&[1, 0]])?, Status::NonRealizable, Some("2ν"))
        }),
        ("α is detected by a 2-stage space", |t| {
            expect_status(&verdict(t, 5, 3, "Z", "Z/3", &[&[0, 1]])?, Status::Realizable, None)
        }),
        ("α₂ at p = 3 is not detected", |t| {
            expect_status(&verdict(t, 9, 7, "Z", "Z/3", &[&[1, 0]])?, Status::NonRealizable, None)
        }),
        ("divided α_{3/2} at p = 3", |t| {
            let v = verdict(t, 13, 11, "Z", "Z/9", &[&[1, 0]])?;
            let o = v.obstruction.as_ref().ok_or("no obstruction")?;
            let ok = o.element == [Int::from(3), Int::ZERO] && o.image == [Int::from(3)];
            expect_status(&v, Status::NonRealizable, None).and_then(|s| {
                expect(ok, s, || format!("obstruction {}", o.text))
            })
        }),
        ("3-stage example with identities", |_| {
            let z2 = g("Z/2");
            let input = ThreeStageInput {
                n: 4,
                a_n: z2.clone(),
                a_n1: z2.clone(),
                a_n2: z2.clone(),
                eta1: IntMatrix::from_i64(&[&[1]]),
                eta2: IntMatrix::from_i64(&[&[1]]),
            };
            let (o, v) = three_stage_obstruction(&input).map_err(|e| e.to_string())?;
            let ok = o == GroupHom::identity(&z2);
            expect_status(&v, Status::NonRealizable, None).and_then(|s| expect(ok, s, || format!("O = {o}")))
        }),
        ("stems 1, 2, 3: all realizable?", |t| {
            let answers: Vec<StemAnswer> = (1..=3)
                .map(|k| all_realizable_in_stem(k, t).map(|v| v.answer))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let want = [StemAnswer::Yes, StemAnswer::Yes, StemAnswer::No];
            expect(answers == want, format!("{answers:?}"), || format!("{answers:?}"))
        }),
        ("survey of stem 3 into ℤ/4 finds the smallest example", |t| {
            let opts = SurveyOptions { max_cyclic_order: 1, targets: vec![g("Z/4")], ..Default::default() };
            let r = survey_stem(3, t, &opts).map_err(|e| e.to_string())?;
            let ok = r.totals.non_realizable > 0;
            expect(ok, format!("{} not realizable of {}", r.totals.non_realizable, r.totals.total()), || {
                "no non-realizable entry".into()
            })
        }),
    ]
}

/// Runs every case against `tables`.
pub fn run_selftest(tables: &StableTables) -> Vec<SelftestCase> {
    cases()
        .into_iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let outcome = f(tables);
            let elapsed_us = start.elapsed().as_micros() as u64;
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            SelftestCase { name: name.to_string(), passed, detail, elapsed_us }
        })
        .collect()
}
