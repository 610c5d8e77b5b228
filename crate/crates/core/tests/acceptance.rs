//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p symchar-core --test acceptance`.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use symchar::cache::table_to_json;
use symchar::class_algebra::{sample_triples, transposition_class};
use symchar::partition::factorial;
use symchar::vanishing::{nonlinear_rows, theorem_pairs};
use symchar::{
    covers_all_nonlinear, find_covering_pairs, hook_char_recursive, merge_lemma_check,
    near_hook_value, partitions_of, predicted_coefficient, structure_constant,
    structure_constant_bruteforce, two_row_char_recursive, CharTable, MnEngine, NearHookShape,
    Partition, Predicted, DEFAULT_BRUTE_FORCE_LIMIT,
};

type Outcome = Result<String, String>;

struct Tables {
    engine: MnEngine,
    built: HashMap<usize, CharTable>,
}

impl Tables {
    fn get(&mut self, n: usize) -> &CharTable {
        let engine = &self.engine;
        self.built
            .entry(n)
            .or_insert_with(|| engine.table(n, workers()).expect("table builds"))
    }
}

fn workers() -> usize {
    std::thread::available_parallelism().map(|w| w.get()).unwrap_or(1)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, budget: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed <= budget, || {
        format!("{what} took {:.1}s, budget {:.0}s", elapsed.as_secs_f64(), budget.as_secs_f64())
    })
}

fn c1_main_theorem(t: &mut Tables) -> Outcome {
    let start = Instant::now();
    for n in 7..=12 {
        let table = t.get(n);
        let report = find_covering_pairs(n, table, true).map_err(|e| e.to_string())?;
        ensure(report.pairs == theorem_pairs(n), || {
            format!("n={n}: covering pairs {:?}", report.pairs)
        })?;
        ensure(report.matches_theorem == Some(true), || format!("n={n}: verdict mismatch"))?;
    }
    within(start.elapsed(), Duration::from_secs(120), "theorem search")?;
    Ok(format!("n=7..12 pairs = {{(n),(n-1,1)}} in {:.2}s", start.elapsed().as_secs_f64()))
}

fn c2_k_equals_two(t: &mut Tables) -> Outcome {
    for n in 7..=12 {
        let table = t.get(n);
        for mu in table.order() {
            let single = covers_all_nonlinear(mu, mu, table).map_err(|e| e.to_string())?;
            ensure(!single, || format!("n={n}: single class {mu} covers"))?;
        }
        let (a, b) = (Partition::row(n), Partition::new(vec![n - 1, 1]).unwrap());
        ensure(covers_all_nonlinear(&a, &b, table).unwrap(), || format!("n={n}: no covering pair"))?;
        let report = find_covering_pairs(n, table, false).map_err(|e| e.to_string())?;
        ensure(report.k_value == Some(2), || format!("n={n}: k = {:?}", report.k_value))?;
    }
    Ok("k(S_n) = 2 for n=7..12".into())
}

fn c3_orthogonality(t: &mut Tables) -> Outcome {
    for n in 1..=12 {
        let table = t.get(n);
        let d = table.dim();
        let order = table.order().to_vec();
        for a in 0..d {
            for b in a..d {
                let col: BigInt = (0..d).map(|i| table.at(i, a) * table.at(i, b)).sum();
                let want = if a == b {
                    BigInt::from(order[a].centralizer_order())
                } else {
                    BigInt::zero()
                };
                ensure(col == want, || format!("n={n} columns {} {}: {col}", order[a], order[b]))?;
                let row: BigInt = (0..d)
                    .map(|j| BigInt::from(order[j].class_size()) * table.at(a, j) * table.at(b, j))
                    .sum();
                let want = if a == b { BigInt::from(factorial(n)) } else { BigInt::zero() };
                ensure(row == want, || format!("n={n} rows {} {}: {row}", order[a], order[b]))?;
            }
        }
    }
    let t3 = t.get(3);
    let j = t3.index_of(&Partition::new(vec![2, 1]).unwrap()).unwrap();
    let z: BigInt = (0..3).map(|i| t3.at(i, j) * t3.at(i, j)).sum();
    ensure(z == BigInt::from(2), || format!("sum of squares at (2,1) is {z}"))?;
    Ok("row and column orthogonality exact for n=1..12; z_(2,1) = 2".into())
}

fn c4_hook_vanishing(t: &mut Tables) -> Outcome {
    for n in 7..=14 {
        let table = t.get(n);
        let long = table.index_of(&Partition::row(n)).unwrap();
        let near = table.index_of(&Partition::new(vec![n - 1, 1]).unwrap()).unwrap();
        for (i, lambda) in table.order().iter().enumerate() {
            let v = table.at(i, long);
            if lambda.is_hook() {
                let k = lambda.len() - 1;
                let want = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                ensure(*v == want, || format!("n={n}: hook {lambda} on (n) = {v}"))?;
                let linear = *lambda == Partition::row(n) || *lambda == Partition::column(n);
                if !linear {
                    ensure(table.at(i, near).is_zero(), || {
                        format!("n={n}: hook {lambda} on (n-1,1) = {}", table.at(i, near))
                    })?;
                }
            } else {
                ensure(v.is_zero(), || format!("n={n}: non-hook {lambda} on (n) = {v}"))?;
            }
        }
    }
    Ok("non-hooks vanish on (n); non-linear hooks vanish on (n-1,1), n=7..14".into())
}

fn c5_formulas(t: &mut Tables) -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 9..=14 {
        let table = t.get(n);
        for shape in NearHookShape::ALL {
            let lambda = shape.partition(n).map_err(|e| e.to_string())?;
            let i = table.index_of(&lambda).unwrap();
            for (j, mu) in table.order().iter().enumerate() {
                let f = near_hook_value(shape, mu).map_err(|e| e.to_string())?;
                ensure(&f == table.at(i, j), || {
                    format!("{shape} at {mu}: formula {f}, MN {}", table.at(i, j))
                })?;
                count += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(60), "formula agreement")?;
    Ok(format!("{count} closed-form values equal MN, n=9..14"))
}

fn c6_recursions(t: &mut Tables) -> Outcome {
    let mut count = 0;
    for n in 1..=13 {
        let table = t.get(n);
        for (j, mu) in table.order().iter().enumerate() {
            for k in 0..n {
                let i = table.index_of(&Partition::hook(n, k).unwrap()).unwrap();
                let r = hook_char_recursive(k, mu).map_err(|e| e.to_string())?;
                ensure(&r == table.at(i, j), || format!("hook k={k} at {mu}: {r}"))?;
                count += 1;
            }
            for k in 0..=n / 2 {
                let i = table.index_of(&Partition::two_row(n, k).unwrap()).unwrap();
                let r = two_row_char_recursive(k, mu).map_err(|e| e.to_string())?;
                ensure(&r == table.at(i, j), || format!("two-row k={k} at {mu}: {r}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} recursive values equal MN, n=1..13"))
}

fn c7_oracle(t: &mut Tables) -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 1..=6 {
        let table = t.get(n).clone();
        let ps = partitions_of(n);
        for mu in &ps {
            for nu in &ps {
                for gamma in &ps {
                    let a = structure_constant(mu, nu, gamma, &table).map_err(|e| e.to_string())?;
                    let b = structure_constant_bruteforce(mu, nu, gamma, DEFAULT_BRUTE_FORCE_LIMIT)
                        .map_err(|e| e.to_string())?;
                    ensure(a == b, || format!("a({mu},{nu};{gamma}): {a} vs {b}"))?;
                    count += 1;
                }
            }
        }
    }
    for n in [7, 8] {
        let table = t.get(n).clone();
        for (mu, nu, gamma) in sample_triples(n, 200, 0x5eed_c1a5) {
            let a = structure_constant(&mu, &nu, &gamma, &table).map_err(|e| e.to_string())?;
            let b = structure_constant_bruteforce(&mu, &nu, &gamma, DEFAULT_BRUTE_FORCE_LIMIT)
                .map_err(|e| e.to_string())?;
            ensure(a == b, || format!("a({mu},{nu};{gamma}): {a} vs {b}"))?;
            count += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(300), "oracle equivalence")?;
    Ok(format!("{count} triples agree in {:.2}s", start.elapsed().as_secs_f64()))
}

fn c8_predicted(t: &mut Tables) -> Outcome {
    let mut count = 0;
    for n in 7..=10 {
        let table = t.get(n).clone();
        let report = find_covering_pairs(n, &table, false).map_err(|e| e.to_string())?;
        ensure(!report.pairs.is_empty(), || format!("n={n}: no covering pair"))?;
        for pair in &report.pairs {
            let (mu, nu) = (&pair.first, &pair.second);
            let odd_value =
                BigUint::from(2u32) * mu.class_size() * nu.class_size() / factorial(n);
            for gamma in table.order() {
                let actual = structure_constant(mu, nu, gamma, &table).map_err(|e| e.to_string())?;
                let want = if gamma.sign() < 0 { odd_value.clone() } else { BigUint::zero() };
                ensure(actual == want, || format!("n={n} {mu},{nu} at {gamma}: {actual} vs {want}"))?;
                let predicted =
                    predicted_coefficient(mu, nu, gamma, &table).map_err(|e| e.to_string())?;
                ensure(predicted == Predicted::Value(want.clone()), || {
                    format!("n={n} {mu},{nu} at {gamma}: predicted {predicted:?}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} coefficients match 2|C_mu||C_nu|/n! on odd classes, 0 on even"))
}

fn c9_merge_lemma(t: &mut Tables) -> Outcome {
    let mut positive = 0;
    for n in 2..=9 {
        let table = t.get(n).clone();
        let tr = transposition_class(n).unwrap();
        let ps = table.order();
        for (i, mu) in ps.iter().enumerate() {
            for nu in &ps[i + 1..] {
                let a = structure_constant(mu, nu, &tr, &table).map_err(|e| e.to_string())?;
                if a.is_zero() {
                    continue;
                }
                positive += 1;
                let ok = merge_lemma_check(mu, nu).unwrap() || merge_lemma_check(nu, mu).unwrap();
                ensure(ok, || format!("n={n}: {mu},{nu} not related by a merge"))?;
            }
        }
    }
    Ok(format!("{positive} pairs with positive transposition coefficient all merge, n<=9"))
}

fn c10_performance(_: &mut Tables) -> Outcome {
    let start = Instant::now();
    let cold = MnEngine::new().table(14, 1).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(cold.dim() == 135, || format!("dimension {}", cold.dim()))?;
    within(elapsed, Duration::from_secs(60), "character_table(14) single-threaded")?;
    let bytes = table_to_json(&cold);
    for workers in [2, 4, 8] {
        let other = MnEngine::new().table(14, workers).map_err(|e| e.to_string())?;
        ensure(table_to_json(&other) == bytes, || format!("{workers} workers differ"))?;
    }
    let rows_ok = nonlinear_rows(&cold).map(|r| r.len() == 133).unwrap_or(false);
    ensure(rows_ok, || "expected 133 non-linear rows".into())?;
    Ok(format!(
        "135x135 table cold in {:.3}s single-threaded; identical for 1/2/4/8 workers",
        elapsed.as_secs_f64()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn(&mut Tables) -> Outcome); 10] = [
        ("1 main theorem reproduction", c1_main_theorem),
        ("2 k(S_n) = 2", c2_k_equals_two),
        ("3 orthogonality", c3_orthogonality),
        ("4 hook vanishing", c4_hook_vanishing),
        ("5 near-hook formula agreement", c5_formulas),
        ("6 recursion agreement", c6_recursions),
        ("7 structure-constant oracle", c7_oracle),
        ("8 predicted coefficient", c8_predicted),
        ("9 merge lemma", c9_merge_lemma),
        ("10 performance and determinism", c10_performance),
    ];
    let mut tables = Tables {
        engine: MnEngine::new(),
        built: HashMap::new(),
    };
    let mut failures = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run(&mut tables);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS  criterion {name}: {msg} [{secs:.2}s]"),
            Err(msg) => {
                failures += 1;
                println!("FAIL  criterion {name}: {msg} [{secs:.2}s]");
            }
        }
    }
    if failures == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}
