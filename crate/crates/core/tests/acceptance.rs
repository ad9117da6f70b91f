//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any criterion fails.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{random_pure, random_relator_product, rng};
use singbraid::cli;
use singbraid::normal_form::{center_generator, center_split, equal_sp3, is_trivial_sp3};
use singbraid::oracle::sg3_necessary_trivial;
use singbraid::perm::{pi, schreier_transversal};
use singbraid::schreier::{enumerate_generators, rewrite_tau};
use singbraid::sp3::{parse_sp_word, rewrite_to_sp3, sg3_transversal, sp2_normal_form};
use singbraid::{is_trivial_sg3, BraidWord, SpGen, SpWord};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn b(text: &str, n: usize) -> BraidWord {
    BraidWord::parse(text, n).unwrap()
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn transversals() -> Outcome {
    let expected: [&[&str]; 2] = [
        &["1", "s1"],
        &["1", "s1", "s2", "s1 s2", "s2 s1", "s1 s2 s1"],
    ];
    for (n, want) in [2usize, 3].into_iter().zip(expected) {
        let t = schreier_transversal(n).map_err(|e| e.to_string())?;
        let got: Vec<String> = t.reps().iter().map(|r| r.to_string()).collect();
        if got != want {
            return Err(format!("n={n}: {got:?}"));
        }
    }
    let mut factorial = 1;
    for n in 2..=5 {
        factorial *= n;
        let t = schreier_transversal(n).map_err(|e| e.to_string())?;
        let images: HashSet<_> = t.reps().iter().map(|r| pi(r).images()).collect();
        if t.len() != factorial || images.len() != factorial {
            return Err(format!("n={n}: {} reps, {} images", t.len(), images.len()));
        }
    }
    Ok("Λ2, Λ3 exact; bijective for n = 2..5".into())
}

fn generator_tables() -> Outcome {
    // (rep, letter, ambient) as listed for two and three strands.
    let two = [
        ("1", "s1", "1"),
        ("1", "t1", "t1 s1^-1"),
        ("s1", "s1", "s1^2"),
        ("s1", "t1", "s1 t1"),
    ];
    let three = [
        ("1", "s1", "1"),
        ("1", "s2", "1"),
        ("1", "t1", "t1 s1^-1"),
        ("1", "t2", "t2 s2^-1"),
        ("s1", "s1", "s1^2"),
        ("s1", "s2", "1"),
        ("s1", "t1", "s1 t1"),
        ("s1", "t2", "s1 t2 s2^-1 s1^-1"),
        ("s2", "s1", "1"),
        ("s2", "s2", "s2^2"),
        ("s2", "t1", "s2 t1 s1^-1 s2^-1"),
        ("s2", "t2", "s2 t2"),
        ("s1 s2", "s1", "1"),
        ("s1 s2", "s2", "s1 s2^2 s1^-1"),
        ("s1 s2", "t1", "s1 s2 t1 s1^-1 s2^-1 s1^-1"),
        ("s1 s2", "t2", "s1 s2 t2 s1^-1"),
        ("s2 s1", "s1", "s2 s1^2 s2^-1"),
        ("s2 s1", "s2", "s2 s1 s2 s1^-1 s2^-1 s1^-1"),
        ("s2 s1", "t1", "s2 s1 t1 s2^-1"),
        ("s2 s1", "t2", "s2 s1 t2 s1^-1 s2^-1 s1^-1"),
        ("s1 s2 s1", "s1", "s1 s2 s1^2 s2^-1 s1^-1"),
        ("s1 s2 s1", "s2", "s1 s2 s1 s2 s1^-1 s2^-1"),
        ("s1 s2 s1", "t1", "s1 s2 s1 t1 s2^-1 s1^-1"),
        ("s1 s2 s1", "t2", "s1 s2 s1 t2 s1^-1 s2^-1"),
    ];
    for (n, want) in [(2usize, &two[..]), (3, &three[..])] {
        let got = enumerate_generators(n).map_err(|e| e.to_string())?;
        if got.len() != want.len() {
            return Err(format!("n={n}: {} entries", got.len()));
        }
        let mut remaining: Vec<_> = want.to_vec();
        let mut seen = Vec::new();
        for e in &got {
            let key = (
                e.generator.rep.to_string(),
                e.generator.generator.to_string(),
            );
            let pos = remaining
                .iter()
                .position(|(r, a, _)| (r.to_string(), a.to_string()) == key)
                .ok_or_else(|| format!("unexpected generator {}", e.generator))?;
            let (_, _, amb) = remaining.remove(pos);
            if e.ambient != b(amb, n) {
                return Err(format!("{}: got {}, want {amb}", e.generator, e.ambient));
            }
            if e.trivial != (amb == "1") {
                return Err(format!("{}: wrong trivial flag", e.generator));
            }
            seen.push(e.trivial);
        }
        let trivial = seen.iter().filter(|&&t| t).count();
        let expected_trivial = if n == 2 { 1 } else { 5 };
        if trivial != expected_trivial {
            return Err(format!("n={n}: {trivial} trivial entries"));
        }
    }
    Ok("4 + 24 ambient words exact, 1 + 5 trivial".into())
}

fn rewriting_soundness() -> Outcome {
    let mut r = rng(3);
    let t = sg3_transversal();
    let start = Instant::now();
    for i in 0..1000 {
        let u = random_pure(&mut r, 40);
        if u.letter_count() > 40 {
            return Err(format!("sample {i} too long"));
        }
        let back = rewrite_tau(&u, t)
            .and_then(|w| w.substitute(t))
            .map_err(|e| e.to_string())?;
        if back != u {
            return Err(format!("sample {i}: {u} -> {back}"));
        }
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!(
        "1000 pure words recovered in {:?}",
        start.elapsed()
    ))
}

fn presentation_verification() -> Outcome {
    let start = Instant::now();
    let out = cli::run(["singbraid", "verify", "--all"]);
    let elapsed = start.elapsed();
    let pass_lines = out
        .stdout
        .lines()
        .filter(|l| l.starts_with("PASS "))
        .count();
    let fail_lines = out
        .stdout
        .lines()
        .filter(|l| l.starts_with("FAIL "))
        .count();
    if out.code != 0 || pass_lines != 81 || fail_lines != 0 {
        return Err(format!(
            "exit {}, {pass_lines} PASS, {fail_lines} FAIL",
            out.code
        ));
    }
    for group in [
        "rs-relators: 30/30",
        "presentation: 8/8",
        "conjugation: 24/24",
        "table: 19/19",
    ] {
        if !out.stdout.contains(group) {
            return Err(format!("missing group line {group}"));
        }
    }
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("81/81 in {elapsed:?}"))
}

fn center() -> Outcome {
    let d = center_generator();
    for g in SpGen::ALL {
        let x = SpWord::generator(g, 1);
        let comm = d.concat(&x).concat(&d.inverse()).concat(&x.inverse());
        if !is_trivial_sp3(&comm) {
            return Err(format!("[δ,{g}] = {}", center_split(&comm)));
        }
    }
    let twist = rewrite_to_sp3(&b("s1 s2 s1 s1 s2 s1", 3)).map_err(|e| e.to_string())?;
    if center_split(&twist) != center_split(&d) || !equal_sp3(&twist, &d) {
        return Err(format!("(s1 s2 s1)^2 rewrites to {twist}"));
    }
    Ok("δ central; (s1 s2 s1)^2 has the normal form of δ".into())
}

fn word_problem_consistency() -> Outcome {
    let start = Instant::now();
    let mut r = rng(6);
    for i in 0..1000 {
        let count = 1 + i % 4;
        let w = random_relator_product(&mut r, count, 8);
        if !is_trivial_sg3(&w).map_err(|e| e.to_string())? {
            return Err(format!("relator product decided nontrivial: {w}"));
        }
        if !sg3_necessary_trivial(&w).map_err(|e| e.to_string())? {
            return Err(format!("oracle rejects relator product {w}"));
        }
    }
    let mut refuted = 0;
    let mut pure_refuted = 0;
    let mut attempts = 0;
    while refuted < 1000 {
        attempts += 1;
        if attempts > 100_000 {
            return Err("could not sample enough oracle-refuted words".into());
        }
        let w = if attempts % 2 == 0 {
            random_pure(&mut r, 30)
        } else {
            common::random_braid(&mut r, 3, 1 + attempts % 20)
        };
        let oracle = sg3_necessary_trivial(&w).map_err(|e| e.to_string())?;
        let decided = is_trivial_sg3(&w).map_err(|e| e.to_string())?;
        if decided && !oracle {
            return Err(format!("engine says trivial, oracle refutes: {w}"));
        }
        if !oracle {
            refuted += 1;
            pure_refuted += usize::from(pi(&w).is_identity());
        }
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!(
        "1000 relator products trivial; 1000 refuted words nontrivial ({pure_refuted} pure); {attempts} cross-checked in {:?}",
        start.elapsed()
    ))
}

fn hnn_discrimination() -> Outcome {
    for k in -10i64..=10 {
        let c = SpWord::from_runs([(SpGen::A13, 1), (SpGen::A23, 1)]).pow(k);
        let w = SpWord::generator(SpGen::B12, -1)
            .concat(&c)
            .concat(&SpWord::generator(SpGen::B12, 1))
            .concat(&c.inverse());
        if !is_trivial_sp3(&w) {
            return Err(format!("k={k}: centralized power not trivial"));
        }
        if k != 0 {
            let a = SpWord::generator(SpGen::A13, k);
            let w = SpWord::generator(SpGen::B12, -1)
                .concat(&a)
                .concat(&SpWord::generator(SpGen::B12, 1))
                .concat(&a.inverse());
            if is_trivial_sp3(&w) {
                return Err(format!("k={k}: a13^k pinch accepted"));
            }
        }
    }
    Ok("c^k slides through b12 for |k| <= 10; a13^k does not for 1 <= |k| <= 10".into())
}

fn sp2() -> Outcome {
    let letters = [
        (SpGen::A12, 1i64),
        (SpGen::A12, -1),
        (SpGen::B12, 1),
        (SpGen::B12, -1),
    ];
    let mut checked = 0u64;
    for len in 0..=8u32 {
        for code in 0..4usize.pow(len) {
            let mut w = SpWord::new();
            let (mut a, mut bb) = (0i64, 0i64);
            let mut c = code;
            for _ in 0..len {
                let (g, e) = letters[c % 4];
                c /= 4;
                w.push(g, e);
                if g == SpGen::A12 {
                    a += e;
                } else {
                    bb += e;
                }
            }
            let form = sp2_normal_form(&w).map_err(|e| e.to_string())?;
            if (form.a_exp, form.b_exp) != (a, bb) || form.is_trivial() != (a == 0 && bb == 0) {
                return Err(format!("{w}: got {form:?}, want ({a},{bb})"));
            }
            checked += 1;
        }
    }
    // The general engine agrees on the same subgroup.
    let sample = parse_sp_word("a12 b12 a12^-1 b12^-1").unwrap();
    if !is_trivial_sp3(&sample) {
        return Err("engine disagrees on [a12,b12]".into());
    }
    Ok(format!("{checked} words exhaustive to length 8"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 transversal reproduction", transversals),
        ("2 generator tables", generator_tables),
        ("3 rewriting soundness", rewriting_soundness),
        ("4 presentation verification", presentation_verification),
        ("5 center", center),
        ("6 word-problem consistency", word_problem_consistency),
        ("7 HNN discrimination", hnn_discrimination),
        ("8 SP2 exponent sums", sp2),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {}/8 passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
