use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde_json::{json, Value};

use super::{CheckResult, CheckVerdict, Config};
use crate::ordinal::laws::{law_suite, law_suite_seeded, mutants};
use crate::ordinal::Ordinal;
use crate::scattered::{
    coalescence, cut_types, gap_profile, make_i, rj4_mul_omega, slater_iso,
    spectra_tail_equivalent, spectrum, zsum_iso, zsum_mul_omega, Cut, CutType, IVariant, Rj4Order,
};
use crate::seq::flatten::flatten_check;
use crate::seq::oracle::tail_equiv2_brute;
use crate::seq::{cons, label, odd_period_char, tail_equiv, tail_equiv2, EvPeriodicSeq, Label};
use crate::term::CofClass;

type Family<'a> = &'a (dyn Fn(i64) -> Rj4Order + Sync);
type Outcome = Result<Value, Value>;

pub(super) struct Group {
    id: &'static str,
    claim: &'static str,
    locus: &'static str,
    body: fn(&Config, Family) -> Outcome,
}

pub(super) fn groups() -> Vec<Group> {
    vec![
        Group {
            id: "C1",
            claim: "ordinal arithmetic satisfies the law suite and the identity table; a broken rule is caught",
            locus: "ordinal arithmetic preliminaries",
            body: c1_laws,
        },
        Group {
            id: "C2",
            claim: "L_i * w is isomorphic to L_(i+1)",
            locus: "L-family under right multiplication by w",
            body: c2_product_law,
        },
        Group {
            id: "C3",
            claim: "L_i and L_j are not isomorphic for i != j; Slater's criterion and spectra agree",
            locus: "Slater's criterion and spectrum non-equivalence",
            body: c3_pairwise,
        },
        Group {
            id: "C4",
            claim: "spectra of L_0 and L_1 are (1,2,2,3,3,3,...) and (2,3,3,4,4,4,...) and not tail-equivalent",
            locus: "displayed spectra of L_0 and L_1",
            body: c4_spectra,
        },
        Group {
            id: "C5",
            claim: "any two ladders coalesce",
            locus: "ladders and cut types",
            body: c5_ladders,
        },
        Group {
            id: "C6",
            claim: "L-family cuts are (1,1) or (w,1); (w,w)-gaps of I-variants sit exactly between blocks",
            locus: "cut classification of L_i and the Z-sums",
            body: c6_cuts,
        },
        Group {
            id: "C7",
            claim: "I_even*w = I_odd, I_odd*w = I_even, I*w = I, w^2-invariance, the three are distinct",
            locus: "I-variants under right multiplication by w",
            body: c7_variants,
        },
        Group {
            id: "C8",
            claim: "odd-period characterization of ~2, class split, label parity, flattening and density",
            locus: "tail equivalence and the flattening map",
            body: c8_sequences,
        },
    ]
}

pub(super) fn run(g: &Group, cfg: &Config, family: Family) -> CheckResult {
    let start = Instant::now();
    let outcome = (g.body)(cfg, family);
    let duration_ms = start.elapsed().as_secs_f64() * 1e3;
    let (verdict, witness) = match outcome {
        Ok(w) => (CheckVerdict::Pass, w),
        Err(w) => (CheckVerdict::Fail, w),
    };
    CheckResult {
        id: g.id.to_string(),
        claim: g.claim.to_string(),
        locus: g.locus.to_string(),
        verdict,
        witness: Some(witness),
        duration_ms,
    }
}

fn range(r: (i64, i64)) -> std::ops::RangeInclusive<i64> {
    r.0..=r.1
}

fn c1_laws(cfg: &Config, _: Family) -> Outcome {
    let report = law_suite(cfg.law_samples, cfg.seed);
    if !report.passed() {
        return Err(json!({ "report": report }));
    }
    let mutant = law_suite_seeded(&mutants::BROKEN_ABSORPTION, cfg.law_samples, cfg.seed);
    match mutant.violation {
        Some(v) => Ok(json!({
            "identities": report.identities_checked,
            "samples": report.samples_checked,
            "mutant_caught_by": v.law,
        })),
        None => Err(json!({ "mutant": "not caught" })),
    }
}

fn c2_product_law(cfg: &Config, l: Family) -> Outcome {
    let mut checked = 0;
    for i in range(cfg.range_i) {
        if !slater_iso(&rj4_mul_omega(&l(i)), &l(i + 1)) {
            return Err(
                json!({ "i": i, "lhs": rj4_mul_omega(&l(i)).to_string(), "rhs": l(i + 1).to_string() }),
            );
        }
        checked += 1;
    }
    Ok(json!({ "checked": checked }))
}

fn c3_pairwise(cfg: &Config, l: Family) -> Outcome {
    let mut pairs = 0;
    for i in range(cfg.pair_range) {
        for j in range(cfg.pair_range) {
            if i == j {
                continue;
            }
            let (a, b) = (l(i), l(j));
            let slater = slater_iso(&a, &b);
            let spectra = spectra_tail_equivalent(&spectrum(&a), &spectrum(&b));
            if slater || spectra {
                return Err(
                    json!({ "i": i, "j": j, "slater_iso": slater, "spectra_tail_equivalent": spectra }),
                );
            }
            pairs += 1;
        }
    }
    Ok(json!({ "ordered_pairs": pairs }))
}

/// `start` repeated once, `start + 1` twice, and so on.
fn staircase(start: i64, len: usize) -> Vec<i64> {
    (start..)
        .flat_map(|v| std::iter::repeat_n(v, (v - start + 1) as usize))
        .take(len)
        .collect()
}

fn c4_spectra(_: &Config, l: Family) -> Outcome {
    const LEN: usize = 50;
    let (s0, s1) = (spectrum(&l(0)), spectrum(&l(1)));
    let (p0, p1) = (s0.prefix(LEN), s1.prefix(LEN));
    let (e0, e1) = (staircase(1, LEN), staircase(2, LEN));
    let tail_eq = spectra_tail_equivalent(&s0, &s1);
    if p0 != e0 || p1 != e1 || tail_eq {
        return Err(json!({ "L0": p0, "L1": p1, "tail_equivalent": tail_eq }));
    }
    Ok(json!({ "L0": &p0[..9], "L1": &p1[..9], "entries": LEN }))
}

pub const MAX_LADDER_STARTS: usize = 20;

/// A fixed spread of valid start cuts: boundaries, positions inside the
/// terminal `ω^ω`, and positions inside individual copies.
pub fn ladder_starts(order: &Rj4Order, count: usize) -> Vec<Cut> {
    let mut cuts: Vec<Cut> = (1..=6).map(Cut::Boundary).collect();
    for src in ["1", "2", "w", "w + 1", "w^2*3 + w", "w^5"] {
        cuts.push(Cut::Terminal(src.parse().expect("literal ordinal")));
    }
    for block in 1..=8u64 {
        let e = order.block_exponent(block) as u64;
        // ω^{e-1}·2 + 1 < ω^e
        let position =
            crate::ordinal::ord_add(&Ordinal::monomial(Ordinal::nat(e - 1), 2), &Ordinal::one());
        cuts.push(Cut::Interior { block, position });
    }
    cuts.truncate(count);
    cuts
}

fn c5_ladders(cfg: &Config, l: Family) -> Outcome {
    let mut pairs = 0;
    for i in range(cfg.ladder_range) {
        let order = l(i);
        let starts = ladder_starts(&order, cfg.ladder_starts);
        for (x, a) in starts.iter().enumerate() {
            for b in &starts[x + 1..] {
                match coalescence(&order, a.clone(), b.clone(), cfg.ladder_depth) {
                    Ok(Some(_)) => pairs += 1,
                    Ok(None) => {
                        return Err(json!({ "i": i, "a": a, "b": b, "depth": cfg.ladder_depth }))
                    }
                    Err(e) => return Err(json!({ "i": i, "error": e.to_string() })),
                }
            }
        }
    }
    Ok(json!({ "pairs": pairs, "depth": cfg.ladder_depth }))
}

fn c6_cuts(cfg: &Config, l: Family) -> Outcome {
    let expected: BTreeSet<CutType> = [
        CutType::new(CofClass::One, CofClass::One),
        CutType::new(CofClass::Omega, CofClass::One),
    ]
    .into_iter()
    .collect();
    for i in range(cfg.pair_range) {
        let got = cut_types(&l(i));
        if got != expected {
            return Err(json!({ "i": i, "cut_types": got }));
        }
    }
    let gap = CutType::new(CofClass::Omega, CofClass::Omega);
    let mut profiles = BTreeMap::new();
    for v in IVariant::ALL {
        let p = gap_profile(&make_i(v));
        if p.boundary != gap || !p.gaps_only_at_boundaries {
            return Err(json!({ "variant": v.name(), "profile": p }));
        }
        profiles.insert(v.name(), p.boundary.to_string());
    }
    Ok(json!({ "l_family": expected, "block_boundaries": profiles }))
}

fn c7_variants(_: &Config, _: Family) -> Outcome {
    let (e, o, m) = (
        make_i(IVariant::Even),
        make_i(IVariant::Odd),
        make_i(IVariant::Mid),
    );
    let w = zsum_mul_omega;
    let w2 = |s| zsum_mul_omega(&zsum_mul_omega(s));
    let cases = [
        ("I_even*w ~ I_odd", zsum_iso(&w(&e), &o), true),
        ("I_odd*w ~ I_even", zsum_iso(&w(&o), &e), true),
        ("I*w ~ I", zsum_iso(&w(&m), &m), true),
        ("I_even*w^2 ~ I_even", zsum_iso(&w2(&e), &e), true),
        ("I_odd*w^2 ~ I_odd", zsum_iso(&w2(&o), &o), true),
        ("I*w^2 ~ I", zsum_iso(&w2(&m), &m), true),
        ("I_even ~ I_odd", zsum_iso(&e, &o), false),
        ("I_even ~ I", zsum_iso(&e, &m), false),
        ("I_odd ~ I", zsum_iso(&o, &m), false),
    ];
    let mut verdicts = BTreeMap::new();
    for (name, got, want) in cases {
        match got {
            Ok(g) if g == want => {
                verdicts.insert(name, g);
            }
            other => {
                return Err(json!({ "case": name, "got": format!("{other:?}"), "expected": want }))
            }
        }
    }
    Ok(json!(verdicts))
}

/// Every canonical sequence with preperiod length `≤ max_pre` and period
/// length `≤ max_per` over `alphabet`, deduplicated.
pub fn exhaustive_family(alphabet: &[i64], max_pre: usize, max_per: usize) -> Vec<EvPeriodicSeq> {
    let words = |max: usize| {
        let mut all: Vec<Vec<i64>> = vec![Vec::new()];
        let mut frontier = all.clone();
        for _ in 0..max {
            frontier = frontier
                .iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |&a| {
                        let mut x = w.clone();
                        x.push(a);
                        x
                    })
                })
                .collect();
            all.extend(frontier.iter().cloned());
        }
        all
    };
    let pres = words(max_pre);
    let pers: Vec<Vec<i64>> = words(max_per)
        .into_iter()
        .filter(|w| !w.is_empty())
        .collect();
    let mut out = BTreeSet::new();
    for p in &pres {
        for q in &pers {
            out.insert(EvPeriodicSeq::new(p.clone(), q.clone()).expect("nonzero alphabet"));
        }
    }
    out.into_iter().collect()
}

pub(super) const SEQ_ALPHABET: [i64; 3] = [-1, 1, 2];

fn swapped(l: Label) -> Label {
    match l {
        Label::Even => Label::Odd,
        Label::Odd => Label::Even,
        Label::Full => Label::Full,
    }
}

fn c8_sequences(cfg: &Config, _: Family) -> Outcome {
    let fam = exhaustive_family(&SEQ_ALPHABET, 3, 4);
    let raw = |s: &EvPeriodicSeq| (s.preperiod().to_vec(), s.period().to_vec());

    // odd-period characterization, against shift enumeration
    let mut prop_cases = 0;
    for u in &fam {
        for &a in &SEQ_ALPHABET {
            let au = cons(a, u).expect("nonzero symbol");
            let fast = tail_equiv2(u, &au);
            let (ru, rau) = (raw(u), raw(&au));
            let brute = tail_equiv2_brute((&ru.0, &ru.1), (&rau.0, &rau.1));
            if fast != odd_period_char(u) || brute != fast {
                return Err(json!({ "u": u, "a": a, "tail_equiv2": fast, "brute": brute }));
            }
            if !tail_equiv(u, &au) || label(&au) != swapped(label(u)) {
                return Err(json!({ "u": u, "a": a, "label_u": label(u), "label_au": label(&au) }));
            }
            prop_cases += 1;
        }
    }

    // [u] = [u]_2 ∪ [au]_2, and labels are constant on 2-tail classes
    let mut classes: BTreeMap<Vec<i64>, Vec<&EvPeriodicSeq>> = BTreeMap::new();
    for u in &fam {
        classes
            .entry(crate::seq::class_representative(u).period().to_vec())
            .or_default()
            .push(u);
    }
    let mut split_cases = 0;
    for members in classes.values() {
        for &u in members {
            let au = cons(SEQ_ALPHABET[0], u).expect("nonzero symbol");
            for &v in members {
                if !tail_equiv(v, u) {
                    return Err(json!({ "u": u, "v": v, "grouping": "not tail-equivalent" }));
                }
                if !(tail_equiv2(v, u) || tail_equiv2(v, &au)) {
                    return Err(json!({ "u": u, "v": v, "split": "neither class" }));
                }
                if tail_equiv2(v, u) && label(v) != label(u) {
                    return Err(
                        json!({ "u": u, "v": v, "label_u": label(u), "label_v": label(v) }),
                    );
                }
                split_cases += 1;
            }
        }
    }

    let flat = flatten_check(cfg.flatten_alphabet, cfg.flatten_samples, cfg.seed)
        .map_err(|e| json!({ "flatten": e.to_string() }))?;
    if !flat.passed() {
        return Err(json!({ "flatten": flat }));
    }
    Ok(json!({
        "family_size": fam.len(),
        "odd_period_cases": prop_cases,
        "class_split_pairs": split_cases,
        "tail_classes": classes.len(),
        "flatten": {
            "checked": flat.checked,
            "violations": flat.violations,
            "first_witness": flat.first_witness,
        },
    }))
}
