//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or overruns its time budget.
//!
//! Run with `cargo test -p qleft-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qleft_core::comodule::{check_comodule_relations, rho_word_raw, LambdaTensor, ZWord};
use qleft_core::freealg::{enumerate_irreducible, enumerate_irreducible_upto, random_irreducible_word, random_poly};
use qleft_core::hopf::{
    antimorphism_discrepancy, antimorphism_witness, check_coideal, check_grouplike_d, check_left_antipode,
    check_star_words, coalgebra_antimorphism_check, left_adjoint_product, right_antipode_witness, Antipode,
};
use qleft_core::qcomb::quantum_det;
use qleft_core::rewrite::{build_rules, confluence_probe, normal_form, overlap_check};
use qleft_core::{LaurentPoly, Mode, NcPoly, Report, RewriteSystem, Strategy, Word};

type Outcome = Result<String, String>;

fn lp(c: i64, e: i64) -> LaurentPoly {
    LaurentPoly::monomial(c, e)
}

fn w(pairs: &[(usize, usize)]) -> Word {
    Word::from_pairs(pairs)
}

/// `Σ c q^e · word` from `(c, e, word)` triples.
fn poly(terms: &[(i64, i64, &[(usize, usize)])]) -> NcPoly {
    terms.iter().map(|&(c, e, pairs)| (w(pairs), lp(c, e))).collect()
}

fn sl(n: usize) -> RewriteSystem {
    build_rules(n, Mode::SlTilde).expect("rules")
}

fn mt(n: usize) -> RewriteSystem {
    build_rules(n, Mode::MTilde).expect("rules")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Ok if every item passed, otherwise the first failure prefixed by `ctx`.
fn all_passed(report: &Report, ctx: &str) -> Result<(), String> {
    match report.failures().next() {
        Some(item) => Err(format!("{ctx}{}: expected {}, got {}", item.input, item.expected, item.got)),
        None => Ok(()),
    }
}

fn expect_rule(rs: &RewriteSystem, lhs: &[(usize, usize)], rhs: &NcPoly) -> Result<(), String> {
    let lhs = w(lhs);
    let rule = rs
        .rule_for(lhs.letters())
        .ok_or_else(|| format!("no rule with left side {lhs}"))?;
    ensure(rule.rhs() == rhs, || format!("{lhs}: expected {rhs}, got {}", rule.rhs()))
}

fn rules_n2() -> Outcome {
    let rs = sl(2);
    ensure(rs.len() == 4, || format!("{} rules", rs.len()))?;
    expect_rule(&rs, &[(2, 1), (1, 1)], &poly(&[(1, 1, &[(1, 1), (2, 1)])]))?;
    expect_rule(&rs, &[(2, 2), (1, 2)], &poly(&[(1, 1, &[(1, 2), (2, 2)])]))?;
    expect_rule(&rs, &[(2, 2), (1, 1)], &poly(&[(1, 1, &[(1, 2), (2, 1)]), (1, 0, &[])]))?;
    expect_rule(&rs, &[(2, 1), (1, 2)], &poly(&[(1, 1, &[(1, 1), (2, 2)]), (-1, 1, &[])]))?;
    Ok("four rules, coefficient-exact".into())
}

fn rules_n3() -> Outcome {
    let rs = sl(3);
    let r212 = poly(&[
        (1, 3, &[(1, 2), (2, 1), (3, 2)]),
        (-1, 2, &[(1, 2), (3, 1), (2, 2)]),
        (-1, 2, &[(2, 2), (1, 1), (3, 2)]),
        (1, 1, &[(2, 2), (3, 1), (1, 2)]),
        (1, 1, &[(3, 2), (1, 1), (2, 2)]),
    ]);
    expect_rule(&rs, &[(3, 2), (2, 1), (1, 2)], &r212)?;
    let r132 = poly(&[
        (1, 3, &[(1, 1), (2, 3), (3, 2)]),
        (-1, 2, &[(1, 1), (3, 3), (2, 2)]),
        (-1, 2, &[(2, 1), (1, 3), (3, 2)]),
        (1, 1, &[(2, 1), (3, 3), (1, 2)]),
        (1, 1, &[(3, 1), (1, 3), (2, 2)]),
        (1, 2, &[]),
    ]);
    expect_rule(&rs, &[(3, 1), (2, 3), (1, 2)], &r132)?;
    Ok("rules (2,1,2) and (1,3,2) term-for-term".into())
}

fn diamond() -> Outcome {
    let mut counts = Vec::new();
    for n in 2..=4 {
        for rs in [sl(n), mt(n)] {
            let amb = overlap_check(&rs);
            ensure(amb.is_empty(), || format!("n = {n}: {}", amb[0]))?;
            counts.push(rs.len().to_string());
        }
    }
    Ok(format!("0 ambiguities; rule counts {}", counts.join("/")))
}

fn claim_one() -> Outcome {
    let cases = [(2, Mode::SlTilde), (3, Mode::SlTilde), (4, Mode::SlTilde), (2, Mode::MTilde), (3, Mode::MTilde)];
    for (n, mode) in cases {
        let rs = build_rules(n, mode).map_err(|e| e.to_string())?;
        let diag = match mode {
            Mode::SlTilde => NcPoly::one(),
            Mode::MTilde => normal_form(&quantum_det(n), &rs),
        };
        let m = left_adjoint_product(&rs).map_err(|e| e.to_string())?;
        for (i, row) in m.iter().enumerate() {
            for (k, got) in row.iter().enumerate() {
                let expected = if i == k { diag.clone() } else { NcPoly::zero() };
                ensure(*got == expected, || {
                    format!("n = {n} {}: entry ({}, {}) = {got}", mode.name(), i + 1, k + 1)
                })?;
            }
        }
    }
    Ok("SL n = 2, 3, 4 and M n = 2, 3".into())
}

/// Irreducible words of degree `d` by exhaustive search over all `n^(2d)`
/// words, testing row patterns directly rather than through the rule table.
fn brute_force_irreducible(n: usize, d: usize) -> usize {
    let letters = n * n;
    let descending: Vec<usize> = (1..=n).rev().collect();
    (0..letters.pow(d as u32))
        .filter(|&code| {
            let mut c = code;
            let rows: Vec<usize> = (0..d)
                .map(|_| {
                    let r = c % letters / n + 1;
                    c /= letters;
                    r
                })
                .collect();
            !rows.windows(n).any(|win| win == descending.as_slice())
        })
        .count()
}

fn left_antipode_on_basis() -> Outcome {
    let mut checked = 0;
    let check = |rs: &RewriteSystem, words: &[Word]| -> Result<usize, String> {
        let report = check_left_antipode(rs, words).map_err(|e| e.to_string())?;
        all_passed(&report, "")?;
        Ok(words.len())
    };

    let rs2 = sl(2);
    let words2 = enumerate_irreducible_upto(2, 3, &rs2);
    let oracle: usize = (0..=3).map(|d| brute_force_irreducible(2, d)).sum();
    ensure(words2.len() == oracle, || format!("n = 2: {} words, brute force {oracle}", words2.len()))?;
    checked += check(&rs2, &words2)?;

    let rs3 = sl(3);
    checked += check(&rs3, &enumerate_irreducible_upto(3, 2, &rs3))?;

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let sample: Vec<Word> = (0..100)
        .map(|_| {
            let d = rng.random_range(0..=4);
            random_irreducible_word(&mut rng, &rs3, d)
        })
        .collect();
    checked += check(&rs3, &sample)?;
    Ok(format!("{checked} words (n = 2 degree ≤ 3: {} words)", words2.len()))
}

fn right_antipode_fails() -> Outcome {
    for n in 2..=4 {
        let rs = sl(n);
        let got = right_antipode_witness(&rs).map_err(|e| e.to_string())?;
        ensure(!got.is_one(), || format!("n = {n}: witness is 1"))?;
        ensure(
            got.keys().filter(|w| !w.is_empty()).all(|w| w.len() == n && rs.is_irreducible(w)),
            || format!("n = {n}: witness {got} has a word of the wrong shape"),
        )?;
        if n == 2 {
            let expected = poly(&[(1, 0, &[(1, 1), (2, 2)]), (-1, -1, &[(1, 2), (2, 1)])]);
            ensure(got == expected, || format!("n = 2: got {got}"))?;
        }
    }
    Ok("(I*S)(X[1,1]) ≠ 1 for n = 2, 3, 4".into())
}

fn grouplike() -> Outcome {
    for n in 2..=3 {
        let report = check_grouplike_d(&mt(n));
        ensure(report.passed(), || format!("n = {n}: {}", report.items[0].got))?;
    }
    Ok("Δ(D) = D ⊗ D for n = 2, 3".into())
}

fn coideal() -> Outcome {
    let mut items = 0;
    for n in 2..=3 {
        let report = check_coideal(&mt(n)).map_err(|e| e.to_string())?;
        all_passed(&report, &format!("n = {n}: "))?;
        items += report.items.len();
    }
    Ok(format!("{items} items"))
}

fn comodule() -> Outcome {
    for n in 2..=3 {
        for rs in [sl(n), mt(n)] {
            let report = check_comodule_relations(&rs).map_err(|e| e.to_string())?;
            ensure(report.items.len() == n.pow(n as u32), || "wrong tuple count".into())?;
            all_passed(&report, &format!("n = {n}: "))?;
        }
    }
    // the four n = 2 tuples give the primed relations, written out by hand
    let primed: [(&[usize], NcPoly); 4] = [
        (&[1, 1], poly(&[(1, 0, &[(1, 1), (2, 1)]), (-1, -1, &[(2, 1), (1, 1)])])),
        (&[2, 2], poly(&[(1, 0, &[(1, 2), (2, 2)]), (-1, -1, &[(2, 2), (1, 2)])])),
        (&[2, 1], poly(&[(1, 0, &[(1, 2), (2, 1)]), (-1, -1, &[(2, 2), (1, 1)])])),
        (&[1, 2], poly(&[(1, 0, &[(1, 1), (2, 2)]), (-1, -1, &[(2, 1), (1, 2)])])),
    ];
    let top = ZWord::identity(2);
    for (tuple, rel) in primed {
        let z = ZWord::new(tuple.to_vec());
        let got = rho_word_raw(&z, 2).map_err(|e| e.to_string())?;
        let expected: LambdaTensor = rel.iter().map(|(w, c)| ((top.clone(), w.clone()), c.clone())).collect();
        ensure(got == expected, || format!("ρ({z}) = {got}"))?;
    }
    Ok("all n^n tuples, both modes; n = 2 matches the primed relations".into())
}

fn star() -> Outcome {
    let mut total = 0;
    for n in 2..=3 {
        let rs = sl(n);
        let words = enumerate_irreducible_upto(n, 3, &rs);
        let report = check_star_words(&rs, &words);
        all_passed(&report, &format!("n = {n}: "))?;
        total += words.len();
    }
    Ok(format!("{total} words"))
}

fn confluence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 2..=3 {
        let rs = sl(n);
        for k in 0..100 {
            let p = random_poly(&mut rng, n, 5, 4);
            ensure(confluence_probe(&rs, &p, &Strategy::DEFAULT_SET), || {
                format!("n = {n}, sample {k}: strategies disagree on {p}")
            })?;
        }
    }
    Ok("3 strategies, 100 samples each at n = 2, 3".into())
}

fn witnesses() -> Outcome {
    let rs = sl(2);
    let antipode = Antipode::new(&rs).map_err(|e| e.to_string())?;
    let named = antimorphism_discrepancy(&w(&[(2, 1)]), &w(&[(1, 2)]), &antipode, &rs);
    let s_product = poly(&[(1, 1, &[(1, 1), (2, 2)]), (-1, 1, &[])]);
    let reversed = poly(&[(1, 0, &[(1, 2), (2, 1)])]);
    ensure(named.antipode_of_product == s_product, || {
        format!("S(X[2,1] X[1,2]) = {}", named.antipode_of_product)
    })?;
    ensure(named.reversed_product == reversed, || {
        format!("S(X[1,2]) S(X[2,1]) = {}", named.reversed_product)
    })?;
    let first = antimorphism_witness(&rs).map_err(|e| e.to_string())?;
    ensure(first.is_discrepancy(), || "first witness is not a discrepancy".into())?;

    let square = coalgebra_antimorphism_check(&w(&[(1, 1), (1, 1)]), &rs).map_err(|e| e.to_string())?;
    ensure(square.fails(), || "coalgebra antimorphism holds on X[1,1]^2".into())?;
    Ok(format!(
        "S(X[2,1] X[1,2]) ≠ S(X[1,2]) S(X[2,1]); first witness ({}, {}); fails on X[1,1]^2",
        first.u, first.v
    ))
}

fn non_standard() -> Outcome {
    let rs = sl(3);
    let x = NcPoly::generator;
    let qq = lp(1, -1) - lp(1, 1);
    let relations = [
        &(&x(1, 1) * &x(1, 2)) - &(&x(1, 2) * &x(1, 1)).scale(&lp(1, -1)),
        &(&x(1, 1) * &x(2, 1)) - &(&x(2, 1) * &x(1, 1)).scale(&lp(1, -1)),
        &(&x(1, 2) * &x(2, 1)) - &(&x(2, 1) * &x(1, 2)),
        &(&(&x(1, 1) * &x(2, 2)) - &(&x(2, 2) * &x(1, 1))) - &(&x(1, 2) * &x(2, 1)).scale(&qq),
        &(&(&x(2, 2) * &x(3, 3)) - &(&x(3, 3) * &x(2, 2))) - &(&x(2, 3) * &x(3, 2)).scale(&qq),
    ];
    for rel in &relations {
        ensure(!normal_form(rel, &rs).is_zero(), || format!("{rel} reduces to 0"))?;
    }
    Ok(format!("{} relations survive", relations.len()))
}

fn basis_counts() -> Outcome {
    for (n, d, expected) in [(2, 2, 12), (3, 3, 702)] {
        let got = enumerate_irreducible(n, d, &sl(n)).len();
        let oracle = brute_force_irreducible(n, d);
        ensure(got == expected && oracle == expected, || {
            format!("n = {n}, degree {d}: enumerated {got}, brute force {oracle}")
        })?;
    }
    Ok("12 and 702".into())
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, title: "rules n = 2", budget: secs(1), run: rules_n2 },
        Criterion { id: 2, title: "rules n = 3", budget: secs(1), run: rules_n3 },
        Criterion { id: 3, title: "no ambiguities", budget: secs(10), run: diamond },
        Criterion { id: 4, title: "left antipode on generators", budget: secs(60), run: claim_one },
        Criterion { id: 5, title: "left antipode on the basis", budget: secs(300), run: left_antipode_on_basis },
        Criterion { id: 6, title: "right antipode fails", budget: secs(30), run: right_antipode_fails },
        Criterion { id: 7, title: "D is grouplike", budget: secs(30), run: grouplike },
        Criterion { id: 8, title: "coideal", budget: secs(60), run: coideal },
        Criterion { id: 9, title: "comodule relations", budget: secs(30), run: comodule },
        Criterion { id: 10, title: "property (★)", budget: secs(60), run: star },
        Criterion { id: 11, title: "confluence probe", budget: secs(120), run: confluence },
        Criterion { id: 12, title: "non-Hopf witnesses", budget: secs(5), run: witnesses },
        Criterion { id: 13, title: "standard relations fail", budget: secs(1), run: non_standard },
        Criterion { id: 14, title: "basis counts", budget: secs(10), run: basis_counts },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => Err(format!("{detail}; over budget of {:?}", c.budget)),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} {:>2} {:<28} {:>9.3?}  {detail}", c.id, c.title, elapsed);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
