//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines are always printed; exits nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use lexorder::ordinal::laws::{law_suite, law_suite_seeded, mutants};
use lexorder::scattered::{
    coalescence, cut_types, gap_profile, make_i, make_l, rj4_mul_omega, slater_iso,
    spectra_tail_equivalent, spectrum, zsum_iso, zsum_mul_omega, CutType, IVariant,
};
use lexorder::seq::flatten::flatten_check;
use lexorder::seq::oracle::{least_eventual_period, tail_equiv2_brute, tail_equiv_brute};
use lexorder::seq::{cons, label, odd_period_char, tail_equiv, tail_equiv2, EvPeriodicSeq, Label};
use lexorder::term::CofClass;
use lexorder::verify::{ladder_starts, verify_all, Config};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const SEED: u64 = 0x5eed;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_product_law() -> Outcome {
    let start = Instant::now();
    for i in -32..=32 {
        ensure(
            slater_iso(&rj4_mul_omega(&make_l(i)), &make_l(i + 1)),
            || format!("L_{i}*w not isomorphic to L_{}", i + 1),
        )?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "65 indices in {:.1} ms",
        elapsed.as_secs_f64() * 1e3
    ))
}

fn c2_pairwise() -> Outcome {
    let mut pairs = 0;
    for i in -12..=12 {
        for j in -12..=12 {
            if i == j {
                continue;
            }
            let (a, b) = (make_l(i), make_l(j));
            let slater = slater_iso(&a, &b);
            let spectra = spectra_tail_equivalent(&spectrum(&a), &spectrum(&b));
            ensure(!slater && !spectra && slater == spectra, || {
                format!("({i}, {j}): slater {slater}, spectra {spectra}")
            })?;
            pairs += 1;
        }
    }
    ensure(pairs == 600, || format!("{pairs} pairs"))?;
    Ok("600 ordered pairs, invariants agree".into())
}

/// Value `start + n` repeated `n + 1` times.
fn displayed(start: i64, len: usize) -> Vec<i64> {
    let mut out = Vec::new();
    let mut v = start;
    while out.len() < len {
        for _ in 0..(v - start + 1) {
            out.push(v);
        }
        v += 1;
    }
    out.truncate(len);
    out
}

fn c3_spectra() -> Outcome {
    let p0 = spectrum(&make_l(0)).prefix(50);
    let p1 = spectrum(&make_l(1)).prefix(50);
    ensure(p0 == displayed(1, 50), || format!("L_0: {p0:?}"))?;
    ensure(p1 == displayed(2, 50), || format!("L_1: {p1:?}"))?;
    ensure(p0[..6] == [1, 2, 2, 3, 3, 3], || format!("{p0:?}"))?;
    ensure(p1[..6] == [2, 3, 3, 4, 4, 4], || format!("{p1:?}"))?;
    Ok("50 entries each".into())
}

fn c4_variants() -> Outcome {
    let (e, o, m) = (
        make_i(IVariant::Even),
        make_i(IVariant::Odd),
        make_i(IVariant::Mid),
    );
    let w = zsum_mul_omega;
    let w2 = |s| zsum_mul_omega(&zsum_mul_omega(s));
    let iso = |a, b| zsum_iso(a, b).map_err(|e| e.to_string());
    let cases = [
        ("I_even*w ~ I_odd", iso(&w(&e), &o)?, true),
        ("I_odd*w ~ I_even", iso(&w(&o), &e)?, true),
        ("I*w ~ I", iso(&w(&m), &m)?, true),
        ("I_even*w^2 ~ I_even", iso(&w2(&e), &e)?, true),
        ("I_odd*w^2 ~ I_odd", iso(&w2(&o), &o)?, true),
        ("I*w^2 ~ I", iso(&w2(&m), &m)?, true),
        ("I_even ~ I_odd", iso(&e, &o)?, false),
        ("I_even ~ I", iso(&e, &m)?, false),
        ("I_odd ~ I", iso(&o, &m)?, false),
    ];
    for (name, got, want) in cases {
        ensure(got == want, || format!("{name}: got {got}"))?;
    }
    Ok("9 verdicts".into())
}

fn c5_cuts() -> Outcome {
    let expected: BTreeSet<CutType> = [
        CutType::new(CofClass::One, CofClass::One),
        CutType::new(CofClass::Omega, CofClass::One),
    ]
    .into();
    for i in -12..=12 {
        let got = cut_types(&make_l(i));
        ensure(got == expected, || format!("L_{i}: {got:?}"))?;
    }
    for v in IVariant::ALL {
        let p = gap_profile(&make_i(v));
        ensure(
            p.boundary.to_string() == "(ω, ω)" && p.gaps_only_at_boundaries,
            || format!("{}: {p:?}", v.name()),
        )?;
    }
    Ok("25 L-family orders, 3 Z-sums".into())
}

const ALPHABET: [i64; 3] = [-1, 1, 2];

/// Every raw `(preperiod, period)` pair with lengths `≤ 3` and `1..=4`.
fn raw_family() -> Vec<(Vec<i64>, Vec<i64>)> {
    let words = |max: usize| {
        let mut all = vec![Vec::new()];
        let mut frontier: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 0..max {
            frontier = frontier
                .iter()
                .flat_map(|w| {
                    ALPHABET.iter().map(move |&a| {
                        let mut x = w.clone();
                        x.push(a);
                        x
                    })
                })
                .collect();
            all.extend(frontier.clone());
        }
        all
    };
    let pres = words(3);
    let pers: Vec<Vec<i64>> = words(4).into_iter().filter(|w| !w.is_empty()).collect();
    let mut out = Vec::new();
    for p in &pres {
        for q in &pers {
            out.push((p.clone(), q.clone()));
        }
    }
    out
}

fn c6_odd_period() -> Outcome {
    let raw = raw_family();
    let mut canonical = BTreeSet::new();
    let mut cases = 0;
    for (pre, per) in &raw {
        let u = EvPeriodicSeq::new(pre.clone(), per.clone()).map_err(|e| e.to_string())?;
        let least = least_eventual_period((pre, per), 12).expect("period at most 4");
        ensure(odd_period_char(&u) == (least % 2 == 1), || {
            format!("{u}: least period {least}")
        })?;
        for a in ALPHABET {
            let au = cons(a, &u).map_err(|e| e.to_string())?;
            let mut raw_au = vec![a];
            raw_au.extend(pre);
            let brute = tail_equiv2_brute((pre, per), (&raw_au, per));
            let fast = tail_equiv2(&u, &au);
            ensure(fast == odd_period_char(&u) && fast == brute, || {
                format!("u = {u}, a = {a}: tail_equiv2 {fast}, oracle {brute}")
            })?;
            cases += 1;
        }
        canonical.insert(u);
    }
    Ok(format!(
        "{} raw words ({} canonical), {cases} cons cases, 0 discrepancies",
        raw.len(),
        canonical.len()
    ))
}

fn swapped(l: Label) -> Label {
    match l {
        Label::Even => Label::Odd,
        Label::Odd => Label::Even,
        Label::Full => Label::Full,
    }
}

fn c7_split_and_labels() -> Outcome {
    let family: BTreeSet<EvPeriodicSeq> = raw_family()
        .into_iter()
        .map(|(p, q)| EvPeriodicSeq::new(p, q).unwrap())
        .collect();
    // group by tail class using the oracle against a fixed member
    let mut classes: Vec<Vec<&EvPeriodicSeq>> = Vec::new();
    for u in &family {
        let raw = |s: &EvPeriodicSeq| (s.preperiod().to_vec(), s.period().to_vec());
        let (pu, qu) = raw(u);
        match classes.iter_mut().find(|c| {
            let (pv, qv) = raw(c[0]);
            tail_equiv_brute((&pu, &qu), (&pv, &qv))
        }) {
            Some(c) => c.push(u),
            None => classes.push(vec![u]),
        }
    }
    let mut pairs = 0usize;
    let mut labels = BTreeMap::new();
    for class in &classes {
        for &u in class {
            for a in ALPHABET {
                let au = cons(a, u).unwrap();
                ensure(label(&au) == swapped(label(u)), || {
                    format!("label({u}) = {}, label({a}.u) = {}", label(u), label(&au))
                })?;
                for &v in class {
                    ensure(tail_equiv(v, u), || format!("{u} !~ {v}"))?;
                    ensure(tail_equiv2(v, u) || tail_equiv2(v, &au), || {
                        format!("{v} in neither [{u}]_2 nor [{a}.{u}]_2")
                    })?;
                    if tail_equiv2(v, u) {
                        ensure(label(v) == label(u), || {
                            format!("labels differ on {u} ~2 {v}")
                        })?;
                    }
                    pairs += 1;
                }
            }
            *labels.entry(label(u).to_string()).or_insert(0) += 1;
        }
    }
    Ok(format!(
        "{} classes, {pairs} (u, a, v) triples, labels {labels:?}",
        classes.len()
    ))
}

fn c8_ladders() -> Outcome {
    let mut pairs = 0;
    for i in -5..=5 {
        let l = make_l(i);
        let starts = ladder_starts(&l, 20);
        ensure(starts.len() == 20, || format!("{} starts", starts.len()))?;
        for (x, a) in starts.iter().enumerate() {
            for b in &starts[x + 1..] {
                let r = coalescence(&l, a.clone(), b.clone(), 100).map_err(|e| e.to_string())?;
                ensure(r.is_some(), || {
                    format!("L_{i}: {a:?} and {b:?} do not meet")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ladder pairs within depth 100"))
}

fn c9_flatten() -> Outcome {
    let r = flatten_check(5, 10_000, SEED).map_err(|e| e.to_string())?;
    ensure(r.order_violations == 0 && r.density_failures == 0, || {
        format!("{r:?}")
    })?;
    Ok(format!(
        "{} order pairs, {} density pairs, 0 violations",
        r.order_checked, r.density_checked
    ))
}

fn c10_laws_and_verify() -> Outcome {
    let r = law_suite(10_000, SEED);
    ensure(
        r.passed() && r.samples_checked == 10_000 && r.identities_checked > 0,
        || format!("{r:?}"),
    )?;
    let m = law_suite_seeded(&mutants::BROKEN_ABSORPTION, 10_000, SEED);
    let caught = m.violation.ok_or("mutant not caught")?;
    let start = Instant::now();
    let report = verify_all(&Config::default()).map_err(|e| e.to_string())?;
    let wall = start.elapsed();
    ensure(report.passed, || report.to_string())?;
    ensure(wall < Duration::from_secs(5), || {
        format!("verify took {wall:?}")
    })?;
    Ok(format!(
        "{} identities, 10000 samples, mutant caught by '{}', verify {:.0} ms",
        r.identities_checked,
        caught.law,
        wall.as_secs_f64() * 1e3
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("L-family product law", c1_product_law),
        ("pairwise non-isomorphism", c2_pairwise),
        ("spectrum reproduction", c3_spectra),
        ("I-variant relations", c4_variants),
        ("cut/gap profiles", c5_cuts),
        ("odd-period equivalence", c6_odd_period),
        ("class split and label parity", c7_split_and_labels),
        ("ladder coalescence", c8_ladders),
        ("flattening check", c9_flatten),
        (
            "ordinal law suite and verify wall time",
            c10_laws_and_verify,
        ),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({why})", n + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
