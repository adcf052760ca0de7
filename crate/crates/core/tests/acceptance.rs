//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p fibcube --test acceptance` (add `--release` for
//! representative timings).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fibcube::factorization::{
    compare_families, expected_o_cube_prime, grid_params, same_factor_multiset, theorem_grid,
    CellOutcome,
};
use fibcube::graph::{cartesian_product_all, recognize_hypercube, recognize_star};
use fibcube::relations::coordinate_theta_suite;
use fibcube::suites::{check_layers, in_star_range};
use fibcube::words::enumerate_recursive;
use fibcube::{
    build_cube, count_words, enumerate_words, factorize, verify_factorization, CubeParams, Graph,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GRID_P_MAX: usize = 3;
const GRID_R_MAX: usize = 3;
const GRID_N_MAX: usize = 8;
const GRID_VERTEX_CAP: usize = 300;
const GRID_TIME_LIMIT: Duration = Duration::from_secs(60);
const LAYER_VERTEX_CAP: u128 = 200;
const ROUND_TRIP_PAIRS: usize = 20;
const ROUND_TRIP_TRIPLES: usize = 5;
const ROUND_TRIP_TIME_LIMIT: Duration = Duration::from_secs(30);
const ROUND_TRIP_SEED: u64 = 0x5eed_f1bc;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn grid_cubes() -> Vec<(CubeParams, Graph)> {
    grid_params(GRID_P_MAX, GRID_R_MAX, GRID_N_MAX)
        .into_iter()
        .filter(|&params| count_words(params) <= GRID_VERTEX_CAP as u128)
        .map(|params| (params, build_cube(params)))
        .collect()
}

fn check(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Ok(summary)
    } else {
        let shown: Vec<&str> = failures.iter().take(8).map(String::as_str).collect();
        Err(format!("{} failing: {}", failures.len(), shown.join("; ")))
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cells = theorem_grid(GRID_P_MAX, GRID_R_MAX, GRID_N_MAX, GRID_VERTEX_CAP);
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    let mut evaluated = 0;
    let mut composite = 0;
    for cell in &cells {
        let CubeParams { p, r, n, .. } = cell.params;
        match &cell.outcome {
            CellOutcome::Skipped => {}
            CellOutcome::Failed(e) => failures.push(format!("p={p},r={r},n={n}: {e}")),
            CellOutcome::Evaluated {
                prime,
                factor_problem,
                ..
            } => {
                evaluated += 1;
                if *prime != expected_o_cube_prime(p, r, n) {
                    failures.push(format!("p={p},r={r},n={n}: prime={prime}"));
                }
                if !prime {
                    composite += 1;
                }
                if let Some(problem) = factor_problem {
                    failures.push(format!("p={p},r={r},n={n}: {problem}"));
                }
            }
        }
    }
    if elapsed > GRID_TIME_LIMIT {
        failures.push(format!("took {elapsed:?}"));
    }
    check(
        failures,
        format!("{evaluated} cells, {composite} composite, all factor into n copies of K2, {elapsed:.2?}"),
    )
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    let mut compared = 0;
    for p in 1..=4 {
        for r in 1..=4 {
            for n in 0..=12 {
                let recursive = enumerate_recursive(p, r, n).map_err(|e| e.to_string())?;
                let direct = enumerate_words(CubeParams::o(p, r, n).unwrap());
                if recursive != direct {
                    failures.push(format!("p={p},r={r},n={n}"));
                }
                compared += 1;
            }
        }
    }
    check(
        failures,
        format!("{compared} (p,r,n) cells, zero mismatches"),
    )
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let cubes = grid_cubes();
    for (params, g) in &cubes {
        let CubeParams { p, r, n, .. } = *params;
        let hypercube = recognize_hypercube(g) == Some(n);
        if hypercube != (p == 1 && n <= r) {
            failures.push(format!(
                "p={p},r={r},n={n}: recognize_hypercube={:?}",
                recognize_hypercube(g)
            ));
        }
        let star = recognize_star(g) == Some(n);
        if star != in_star_range(p, r, n) {
            failures.push(format!(
                "p={p},r={r},n={n}: recognize_star={:?}",
                recognize_star(g)
            ));
        }
    }
    check(
        failures,
        format!("{} cubes, recognizers exact on both ranges", cubes.len()),
    )
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (params, g) in grid_cubes() {
        if g.vertex_count() as u128 > LAYER_VERTEX_CAP {
            continue;
        }
        let CubeParams { p, r, n, .. } = params;
        for i in 1..=n {
            match check_layers(&g, i) {
                Ok(None) => {}
                Ok(Some(problem)) => failures.push(format!("p={p},r={r},n={n}: {problem}")),
                Err(e) => failures.push(format!("p={p},r={r},n={n}: {e}")),
            }
        }
        match coordinate_theta_suite(&g) {
            Ok(v) if v.is_empty() => {}
            Ok(v) => failures.push(format!(
                "p={p},r={r},n={n}: {} Θ violations, first {}",
                v.len(),
                v[0]
            )),
            Err(e) => failures.push(format!("p={p},r={r},n={n}: {e}")),
        }
        checked += 1;
    }
    check(failures, format!("{checked} cubes, zero violations"))
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let fibonacci = [2u128, 3, 5, 8, 13, 21, 34];
    for (n, &expected) in (1..=7).zip(&fibonacci) {
        let got = count_words(CubeParams::o(1, 1, n).unwrap());
        if got != expected {
            failures.push(format!("(O,1,1,{n}) = {got}, expected {expected}"));
        }
    }
    for n in 1..=GRID_N_MAX {
        for r in n..=GRID_N_MAX + 4 {
            let got = count_words(CubeParams::o(1, r, n).unwrap());
            if got != 1 << n {
                failures.push(format!("(O,1,{r},{n}) = {got}"));
            }
        }
    }
    for p in 1..=6 {
        for r in 1..=4 {
            for n in 1..=8 {
                if in_star_range(p, r, n) {
                    let got = count_words(CubeParams::o(p, r, n).unwrap());
                    if got != n as u128 + 1 {
                        failures.push(format!("(O,{p},{r},{n}) = {got}"));
                    }
                }
            }
        }
    }
    check(
        failures,
        "Fibonacci counts, 2^n and n+1 ranges all match".into(),
    )
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut pool: Vec<(String, Graph)> = Vec::new();
    for k in 2..=6 {
        pool.push((format!("P{k}"), Graph::path(k)));
    }
    for k in 1..=5 {
        pool.push((format!("K1,{k}"), Graph::star(k)));
    }
    pool.push(("C5".into(), Graph::cycle(5)));
    pool.push(("Γ3".into(), build_cube(CubeParams::o(1, 1, 3).unwrap())));
    pool.push(("Γ4".into(), build_cube(CubeParams::o(1, 1, 4).unwrap())));

    // prime factors of each pool member, computed once
    let mut pool_factors = Vec::new();
    for (name, g) in &pool {
        let f = factorize(g).map_err(|e| format!("{name}: {e}"))?;
        pool_factors.push(f.factors);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(ROUND_TRIP_SEED);
    let indices: Vec<usize> = (0..pool.len()).collect();
    let mut failures = Vec::new();
    let draws =
        std::iter::repeat_n(2, ROUND_TRIP_PAIRS).chain(std::iter::repeat_n(3, ROUND_TRIP_TRIPLES));
    for size in draws {
        let picks: Vec<usize> = (0..size)
            .map(|_| *indices.choose(&mut rng).unwrap())
            .collect();
        let names: Vec<&str> = picks.iter().map(|&k| pool[k].0.as_str()).collect();
        let inputs: Vec<Graph> = picks.iter().map(|&k| pool[k].1.clone()).collect();
        let expected: Vec<Graph> = picks
            .iter()
            .flat_map(|&k| pool_factors[k].clone())
            .collect();
        let product = cartesian_product_all(&inputs);
        let label = names.join(" x ");
        match factorize(&product) {
            Err(e) => failures.push(format!("{label}: {e}")),
            Ok(f) => {
                if !verify_factorization(&product, &f) {
                    failures.push(format!("{label}: verification failed"));
                }
                match same_factor_multiset(&f.factors, &expected) {
                    Ok(true) => {}
                    Ok(false) => failures.push(format!("{label}: factor multiset differs")),
                    Err(e) => failures.push(format!("{label}: {e}")),
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > ROUND_TRIP_TIME_LIMIT {
        failures.push(format!("took {elapsed:?}"));
    }
    check(
        failures,
        format!(
            "{ROUND_TRIP_PAIRS} pairs and {ROUND_TRIP_TRIPLES} triples round-trip, {elapsed:.2?}"
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut families: Vec<(usize, usize)> = (1..=4).map(|r| (1, r)).collect();
    families.extend((2..=4).map(|p| (p, 1)));
    for (p, r) in families {
        let report = compare_families(p, r, 10).map_err(|e| e.to_string())?;
        if !report.holds() {
            failures.push(format!("p={p},r={r}: word sets differ"));
        }
    }
    let report = compare_families(2, 2, 2).map_err(|e| e.to_string())?;
    let row = &report.rows[2];
    if (row.o_vertices, row.i_vertices) != (3, 4) {
        failures.push(format!(
            "(2,2) at n=2: {} vs {} vertices",
            row.o_vertices, row.i_vertices
        ));
    }
    check(
        failures,
        "equal word sets for p=1 or r=1 up to n=10; (2,2) differs at n=2 (3 vs 4)".into(),
    )
}

fn criterion_8() -> Outcome {
    let skipped: Vec<String> = grid_params(GRID_P_MAX, GRID_R_MAX, GRID_N_MAX)
        .into_iter()
        .filter(|&params| count_words(params) > GRID_VERTEX_CAP as u128)
        .map(|params| params.to_string())
        .collect();
    check(
        skipped,
        "every grid cell fits the desk-scale cap; nothing substituted".into(),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 theorem grid", criterion_1),
        ("2 recurrence = predicate", criterion_2),
        ("3 hypercube/star recognition", criterion_3),
        ("4 layers and coordinate Θ", criterion_4),
        ("5 word counts", criterion_5),
        ("6 product round trip", criterion_6),
        ("7 O/I family comparison", criterion_7),
        ("8 desk-scale coverage", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(summary) => println!("PASS criterion {name}: {summary}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
