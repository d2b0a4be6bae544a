//! Acceptance criteria, one line of output each.
//!
//! Runs without the libtest harness so that every criterion prints its own
//! PASS/FAIL line with timing. Exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use steiner_pasch::constructions::{ag_power, choose_enough_c, direct_product, pg, trivial3};
use steiner_pasch::corpus::{builtin, builtin_up_to, sts13_cyclic, sts13_noncyclic};
use steiner_pasch::field::FieldSpec;
use steiner_pasch::generate::{for_each_labelled, gen_all};
use steiner_pasch::invariants::{
    a_and_b, a_set, binom2, binom3, bounds_hold, brouwer_criterion_check, invariant_report, pasch_count,
    product_formulas, psi_image, third_binom2, InvariantReport,
};
use steiner_pasch::iso::are_isomorphic;
use steiner_pasch::oracle::{a_set_by_definition, pasch_count_by_4subsets, DEFAULT_MAX_BLOCKS};
use steiner_pasch::{validate, Error, Point, SteinerTripleSystem};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn flags_tuple(r: &InvariantReport) -> (bool, bool, bool, bool) {
    (r.flags.projective, r.flags.anti_pasch, r.flags.strongly_anti_pasch, r.flags.enough_pasch)
}

fn ac01_fano() -> Outcome {
    let r = invariant_report(&pg(2).map_err(|e| e.to_string())?);
    ensure!((r.alpha, r.beta, r.gamma, r.pasch_count) == (7, 7, 0, 7), "got {r:?}");
    ensure!(flags_tuple(&r) == (true, false, false, true), "flags {:?}", r.flags);
    let third = third_binom2(7);
    let chain = [third, r.alpha, r.beta, r.alpha + third, binom3(7)];
    ensure!(chain == [7, 7, 7, 14, 35], "chain {chain:?}");
    ensure!(r.bounds_ok, "bounds");
    Ok(format!("chain {chain:?}"))
}

fn ac02_sts9() -> Outcome {
    let r = invariant_report(&ag_power(2).map_err(|e| e.to_string())?);
    ensure!((r.alpha, r.beta, r.gamma, r.pasch_count) == (72, 84, 12, 0), "got {r:?}");
    ensure!(r.beta == binom3(9) && r.gamma == third_binom2(9), "closed forms");
    ensure!(flags_tuple(&r) == (false, true, true, false), "flags {:?}", r.flags);
    Ok("alpha 72, beta 84, gamma 12".into())
}

fn ac03_pg3() -> Outcome {
    let r = invariant_report(&pg(3).map_err(|e| e.to_string())?);
    ensure!(r.beta == 35 && r.beta == third_binom2(15), "beta {}", r.beta);
    ensure!(r.pasch_count == 15 * 14 * 12 / 24, "pasch {}", r.pasch_count);
    ensure!(r.flags.projective, "projective flag");
    Ok("beta 35, pasch 105".into())
}

fn ac04_ag3() -> Outcome {
    let r = invariant_report(&ag_power(3).map_err(|e| e.to_string())?);
    ensure!(r.beta == 2925 && r.beta == binom3(27), "beta {}", r.beta);
    ensure!(r.flags.strongly_anti_pasch && r.pasch_count == 0, "{r:?}");
    Ok("beta 2925".into())
}

fn ac05_netto() -> Outcome {
    let mut done = Vec::new();
    for q in [13u32, 19, 37, 25, 121, 31] {
        let field = FieldSpec::for_order(q).map_err(|e| e.to_string())?;
        let spec = match choose_enough_c(&field) {
            Ok(spec) => spec,
            // 31 is optional
            Err(Error::SDivisibleByT { .. }) if q == 31 => continue,
            Err(e) => return Err(format!("q={q}: {e}")),
        };
        let two = field.from_int(2);
        let half = field.inv(two).expect("2 is invertible");
        ensure!(spec.c.len() as u32 == spec.t, "q={q}: |C| = {}", spec.c.len());
        for &c in &spec.c {
            ensure!(
                spec.c.contains(&field.mul(c, two)) || spec.c.contains(&field.mul(c, half)),
                "q={q}: closure fails at {c}"
            );
        }
        let s = spec.system().map_err(|e| e.to_string())?;
        let r = invariant_report(&s);
        ensure!(r.gamma == 0 && r.flags.enough_pasch, "q={q}: gamma {}", r.gamma);
        ensure!(brouwer_criterion_check(&s, &spec) == Ok(true), "q={q}: criterion");
        done.push(q);
    }
    Ok(format!("q in {done:?}"))
}

fn product_pairs() -> Vec<(&'static str, SteinerTripleSystem, SteinerTripleSystem)> {
    let (s3, fano, s9) = (trivial3(), pg(2).unwrap(), ag_power(2).unwrap());
    vec![
        ("3x3", s3.clone(), s3.clone()),
        ("3x7", s3.clone(), fano.clone()),
        ("7x7", fano.clone(), fano.clone()),
        ("7x9", fano.clone(), s9.clone()),
        ("9x9", s9.clone(), s9.clone()),
        ("9x13c", s9.clone(), sts13_cyclic()),
        ("9x13n", s9.clone(), sts13_noncyclic()),
    ]
}

fn ac06_product_formulas() -> Outcome {
    for (name, s, t) in product_pairs() {
        let predicted = product_formulas(&invariant_report(&s), &invariant_report(&t));
        let (a, b) = a_and_b(&direct_product(&s, &t).map_err(|e| e.to_string())?);
        let measured = (a.len() as u64, b.len() as u64, (b.len() - a.len()) as u64);
        ensure!(
            (predicted.alpha, predicted.beta, predicted.gamma) == measured,
            "{name}: predicted {predicted:?}, measured {measured:?}"
        );
        match name {
            "3x3" => ensure!(measured == (72, 84, 12), "3x3 {measured:?}"),
            "7x7" => ensure!(measured == (3920, 3920, 0), "7x7 {measured:?}"),
            "9x9" => ensure!(measured.2 == 1080, "9x9 {measured:?}"),
            _ => {}
        }
    }
    Ok("7 pairs, exact".into())
}

fn ac07_class_preservation() -> Outcome {
    // (flag true on product, flag false on product) observations per class
    let mut seen = [(false, false); 3];
    for (name, s, t) in product_pairs() {
        let (rs, rt) = (invariant_report(&s), invariant_report(&t));
        let rp = invariant_report(&direct_product(&s, &t).map_err(|e| e.to_string())?);
        let classes = [
            (rs.flags.anti_pasch, rt.flags.anti_pasch, rp.flags.anti_pasch),
            (rs.flags.strongly_anti_pasch, rt.flags.strongly_anti_pasch, rp.flags.strongly_anti_pasch),
            (rs.flags.enough_pasch, rt.flags.enough_pasch, rp.flags.enough_pasch),
        ];
        for (i, (fs, ft, fp)) in classes.into_iter().enumerate() {
            ensure!(fp == (fs && ft), "{name}: class {i}: factors ({fs}, {ft}), product {fp}");
            if fp {
                seen[i].0 = true;
            } else {
                seen[i].1 = true;
            }
        }
    }
    ensure!(seen.iter().all(|&(t, f)| t && f), "not every direction observed: {seen:?}");
    Ok("anti, strongly, enough preserved both ways".into())
}

fn ac08_oracles() -> Outcome {
    let corpus = builtin_up_to(15);
    for entry in &corpus {
        let s = &entry.system;
        ensure!(a_set_by_definition(s) == a_set(s), "{}: A(S) differs", entry.name);
        let brute = pasch_count_by_4subsets(s, DEFAULT_MAX_BLOCKS).map_err(|e| e.to_string())?;
        ensure!(brute == pasch_count(s), "{}: pasch {brute} vs {}", entry.name, pasch_count(s));
    }
    let names: Vec<&str> = corpus.iter().map(|e| e.name).collect();
    Ok(format!("{names:?}"))
}

fn ac09_relabel() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let corpus = builtin();
    for entry in &corpus {
        let base = invariant_report(&entry.system);
        let key = |r: &InvariantReport| (r.alpha, r.beta, r.gamma, r.pasch_count, r.flags);
        for _ in 0..20 {
            let mut perm: Vec<Point> = (0..entry.system.order()).collect();
            perm.shuffle(&mut rng);
            let r = invariant_report(&entry.system.relabel(&perm).map_err(|e| e.to_string())?);
            ensure!(key(&r) == key(&base), "{}: {perm:?}", entry.name);
        }
    }
    Ok(format!("{} systems x 20", corpus.len()))
}

fn gap_and_bounds(n: u32, alpha: u64, beta: u64) -> bool {
    let n = n as u64;
    let third = third_binom2(n);
    let gap_ok = third == 0 || beta - alpha != third - 1;
    gap_ok && (n <= 3 || bounds_hold(n, alpha, beta))
}

fn ac10_gap_scan() -> Outcome {
    for entry in builtin() {
        let r = invariant_report(&entry.system);
        ensure!(gap_and_bounds(r.n, r.alpha, r.beta), "{}: {r:?}", entry.name);
    }
    let mut checked = 0u64;
    let mut failure = None;
    for (n, normalize) in [(7, false), (9, false), (13, true)] {
        for_each_labelled(n, normalize, |blocks| {
            let s = validate(n, blocks).expect("valid");
            let (a, b) = (a_set(&s).len() as u64, psi_image(&s).len() as u64);
            if !gap_and_bounds(n, a, b) && failure.is_none() {
                failure = Some(format!("n={n}: alpha {a}, beta {b}"));
            }
            checked += 1;
        });
    }
    if let Some(f) = failure {
        return Err(f);
    }
    Ok(format!("corpus + {checked} generated systems"))
}

fn ac11_census() -> Outcome {
    let mut counts = Vec::new();
    for n in [7, 9, 13] {
        let census = gen_all(n, n == 13).map_err(|e| e.to_string())?;
        counts.push(census.classes.len());
        if n == 13 {
            for rep in &census.classes {
                let r = invariant_report(rep);
                ensure!(r.pasch_count > 0, "n=13 class without Pasch");
                ensure!(r.gamma < third_binom2(13), "n=13 gamma {}", r.gamma);
            }
            let known = [sts13_cyclic(), sts13_noncyclic()];
            for k in &known {
                ensure!(
                    census.classes.iter().filter(|rep| are_isomorphic(rep, k).is_some()).count() == 1,
                    "corpus STS(13) not matched by exactly one class"
                );
            }
        }
        if n == 7 {
            ensure!(census.labelled_count == 30, "labelled STS(7): {}", census.labelled_count);
        }
    }
    ensure!(counts == [1, 1, 2], "classes {counts:?}");
    Ok(format!("classes {counts:?}"))
}

fn ac12_performance() -> Outcome {
    let s = pg(7).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let beta = psi_image(&s).len() as u64;
    let beta_time = start.elapsed();
    ensure!(beta == 10795 && beta == binom2(255) / 3, "beta {beta}");
    ensure!(beta_time < Duration::from_secs(10), "beta took {beta_time:?}");
    let report = invariant_report(&s);
    ensure!(report.flags.projective, "projective flag");
    let with = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("pool")
            .install(|| (psi_image(&s), invariant_report(&s)))
    };
    let one = with(1);
    for threads in [2, 8] {
        ensure!(with(threads) == one, "result differs with {threads} threads");
    }
    ensure!(one.1 == report, "report differs from global pool");
    Ok(format!("beta 10795 in {:.2}s", beta_time.as_secs_f64()))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("AC-01", "Fano exactness", Duration::from_secs(1), ac01_fano),
        ("AC-02", "STS(9) exactness", Duration::from_secs(1), ac02_sts9),
        ("AC-03", "PG(3,2)", Duration::from_secs(1), ac03_pg3),
        ("AC-04", "AG(3,3)", Duration::from_secs(5), ac04_ag3),
        ("AC-05", "Netto enough-Pasch", Duration::from_secs(30), ac05_netto),
        ("AC-06", "product formulas", Duration::from_secs(30), ac06_product_formulas),
        ("AC-07", "class preservation", Duration::from_secs(60), ac07_class_preservation),
        ("AC-08", "oracle equivalence", Duration::from_secs(300), ac08_oracles),
        ("AC-09", "isomorphism invariance", Duration::from_secs(120), ac09_relabel),
        ("AC-10", "gamma gap and bounds scan", Duration::from_secs(600), ac10_gap_scan),
        ("AC-11", "census", Duration::from_secs(600), ac11_census),
        ("AC-12", "performance PG(7,2)", Duration::from_secs(10), ac12_performance),
    ];
    let mut failed = 0;
    for (id, title, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > budget => Err(format!("{msg}; over budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("[PASS] {id} {title} ({:.2}s): {msg}", elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {id} {title} ({:.2}s): {msg}", elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
