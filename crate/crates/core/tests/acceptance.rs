//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use kneading::dynamics::{find_superstable_mu, QuadMap, SolverOptions};
use kneading::ktheory::{k0_group, k1_group};
use kneading::symbolic::mt_compare_prefix;
use kneading::{
    build_matrices, build_orbit, closed_form_a, cokernel, enumerate_admissible, is_irreducible,
    k_groups, kernel_rank, parse_word, smith_normal_form, AbelianGroup, IntMatrix, KneadingWord,
    Symbol,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn words_up_to(n_max: usize) -> Vec<KneadingWord> {
    (2..=n_max).flat_map(enumerate_admissible).collect()
}

fn example_fixture() -> Outcome {
    let w = parse_word("RLLRRC").unwrap();
    let t = build_matrices(&build_orbit(&w).unwrap()).unwrap();
    let printed = [
        (
            "A",
            IntMatrix::from_rows(&[
                [0, 1, 1, 0, 0],
                [0, 0, 0, 1, 1],
                [0, 0, 0, 0, 1],
                [0, 0, 1, 1, 0],
                [1, 1, 0, 0, 0],
            ]),
        ),
        (
            "theta",
            IntMatrix::from_rows(&[
                [1, -1, 0, 0, 0, 0],
                [-1, 0, 1, 0, 0, 0],
                [-1, 0, 0, 1, 0, 0],
                [1, 0, 0, 0, -1, 0],
                [1, 0, 0, 0, 0, -1],
                [0, 0, 0, 0, 0, 0],
            ]),
        ),
        (
            "omega",
            IntMatrix::from_rows(&[
                [0, 1, 0, 0, 0, 0],
                [0, 0, 1, 0, 0, 0],
                [0, 0, 0, 1, 0, 0],
                [0, 0, 0, 0, 1, 0],
                [0, 0, 0, 0, 0, 1],
                [1, 0, 0, 0, 0, 0],
            ]),
        ),
        (
            "phi",
            IntMatrix::from_rows(&[
                [-1, 1, 0, 0, 0, 0],
                [0, -1, 1, 0, 0, 0],
                [0, 0, -1, 1, 0, 0],
                [0, 0, 0, -1, 1, 0],
                [0, 0, 0, 0, -1, 1],
            ]),
        ),
        (
            "pi",
            IntMatrix::from_rows(&[
                [0, 1, 0, 0, 0, 0],
                [0, 0, 1, 0, 0, 0],
                [0, 0, 0, 0, 0, 1],
                [0, 0, 0, 1, 0, 0],
                [0, 0, 0, 0, 1, 0],
                [1, 0, 0, 0, 0, 0],
            ]),
        ),
    ];
    for (name, expected) in &printed {
        if t.get(name) != Some(expected) {
            return fail(format!("{name} differs from the printed matrix"));
        }
    }
    let report = k_groups(&w).unwrap();
    if report.k0 != AbelianGroup::cyclic(2) || !report.k1.is_trivial() {
        return fail(format!("K0 = {}, K1 = {}", report.k0, report.k1));
    }
    pass("A, theta, omega, phi, pi bit-exact; K0 = Z_2, K1 = 0")
}

fn theorem_sweep() -> Outcome {
    let words = words_up_to(12);
    for w in &words {
        let a = closed_form_a(w).unwrap();
        let m = build_orbit(w).unwrap();
        let matrix = kneading::transition_matrix(&m);
        let k0 = cokernel(&matrix.transpose().identity_minus());
        let rank = kernel_rank(&matrix.transpose().identity_minus());
        if k0 != AbelianGroup::cyclic(a) || rank != usize::from(a == 0) {
            return fail(format!("{w}: a = {a}, K0 = {k0}, kernel rank {rank}"));
        }
    }
    pass(format!("{} admissible words, 2 <= n <= 12", words.len()))
}

fn construction_identities() -> Outcome {
    let words = words_up_to(10);
    for w in &words {
        let t = build_matrices(&build_orbit(w).unwrap()).unwrap();
        let n = w.len();
        let checks = [
            (&t.a * &t.eta == &t.eta * &t.theta, "A·eta = eta·theta"),
            (&t.beta * &t.eta == &t.eta * &t.gamma, "beta·eta = eta·gamma"),
            (&t.alpha * &t.eta == &t.eta * &t.omega, "alpha·eta = eta·omega"),
            (t.theta == &t.gamma * &t.omega, "theta = gamma·omega"),
            (t.a == &t.beta * &t.alpha, "A = beta·alpha"),
            (t.eta.transpose() == &(&t.y * &t.inc) * &t.x, "eta^T = Y·inc·X"),
            (t.y.is_unimodular() && t.x.is_unimodular(), "Y, X unimodular"),
            (
                (0..n).all(|j| t.theta_prime.get(n - 1, j).is_zero()),
                "last row of thetaprime zero",
            ),
            (
                t.theta_prime.block(0, 0, n - 1, n - 1) == t.a_prime,
                "thetaprime block is Aprime",
            ),
        ];
        if let Some((_, name)) = checks.iter().find(|(ok, _)| !ok) {
            return fail(format!("{w}: {name}"));
        }
        let a = closed_form_a(w).unwrap();
        let mut diagonal = smith_normal_form(&t.theta.identity_minus()).diagonal();
        diagonal.sort();
        let mut expected = vec![BigInt::one(); n - 1];
        expected.push(BigInt::from(a));
        expected.sort();
        if diagonal != expected {
            return fail(format!("{w}: SNF of I - theta is {diagonal:?}"));
        }
    }
    pass(format!("{} admissible words, n <= 10", words.len()))
}

fn cokernel_bridge() -> Outcome {
    let words = words_up_to(10);
    for w in &words {
        let t = build_matrices(&build_orbit(w).unwrap()).unwrap();
        let from_a = cokernel(&t.a.identity_minus());
        let from_theta = cokernel(&t.theta.identity_minus());
        if from_a != from_theta {
            return fail(format!("{w}: {from_a} vs {from_theta}"));
        }
    }
    pass(format!("{} admissible words, n <= 10", words.len()))
}

fn zero_a_reducible() -> Outcome {
    let words = words_up_to(12);
    let mut zero_a = 0;
    let mut counterexamples = Vec::new();
    for w in &words {
        if closed_form_a(w).unwrap() != 0 {
            continue;
        }
        zero_a += 1;
        let a = kneading::transition_matrix(&build_orbit(w).unwrap());
        if is_irreducible(&a).unwrap() {
            counterexamples.push(w.to_string());
        }
    }
    if counterexamples.is_empty() {
        pass(format!("{zero_a} words with a = 0, all reducible"))
    } else {
        fail(format!(
            "{} of {zero_a} words with a = 0 have an irreducible A: {}",
            counterexamples.len(),
            counterexamples.join(" ")
        ))
    }
}

fn snf_engine() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    for trial in 0..500 {
        let rows = rng.gen_range(1..=12);
        let cols = rng.gen_range(1..=12);
        let m = IntMatrix::from_fn(rows, cols, |_, _| rng.gen_range(-9i64..=9));
        let f = smith_normal_form(&m);
        if &(&f.u * &m) * &f.v != f.d {
            return fail(format!("trial {trial}: U·M·V != D"));
        }
        if !f.u.is_unimodular() || !f.v.is_unimodular() {
            return fail(format!("trial {trial}: U or V not unimodular"));
        }
        let d = f.diagonal();
        let chain = d.iter().all(|x| !x.is_negative())
            && d.windows(2).all(|p| {
                if p[0].is_zero() {
                    p[1].is_zero()
                } else {
                    p[1].is_multiple_of(&p[0])
                }
            });
        if !chain {
            return fail(format!("trial {trial}: divisibility chain broken: {d:?}"));
        }
        if smith_normal_form(&m.transpose()).diagonal() != d {
            return fail(format!("trial {trial}: transpose changes the diagonal"));
        }
        if m.is_square() {
            let det = m.determinant();
            if !det.is_zero() && det.abs() != d.iter().product::<BigInt>() {
                return fail(format!("trial {trial}: |det| != product of diagonal"));
            }
        }
    }
    pass("500 random matrices up to 12x12, entries in [-9, 9]")
}

fn dynamics_cross_validation() -> Outcome {
    let options = SolverOptions::default();
    let words = words_up_to(8);
    for w in &words {
        let n = w.len();
        let r = match find_superstable_mu(w, &options) {
            Ok(r) => r,
            Err(e) => return fail(format!("{w}: {e}")),
        };
        if !(r.residual < 1e-9) || !r.word_confirmed {
            return fail(format!("{w}: residual {:e}", r.residual));
        }
        let map = QuadMap::new(r.mu).unwrap();
        let itinerary = map.kneading_prefix(2 * n, 1e-9);
        let expected: Vec<Symbol> = (0..2 * n).map(|k| w.symbols()[k % n]).collect();
        if itinerary != expected {
            return fail(format!("{w}: itinerary at mu = {} is wrong", r.mu));
        }
    }
    let rc = find_superstable_mu(&parse_word("RC").unwrap(), &options).unwrap();
    let golden = 1.0 + 5f64.sqrt();
    if (rc.mu - golden).abs() >= 1e-9 {
        return fail(format!("RC: mu = {} vs 1 + sqrt 5 = {golden}", rc.mu));
    }
    pass(format!("{} admissible words, n <= 8; RC at 1 + sqrt 5", words.len()))
}

fn monotonicity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let depth = 30;
    let (mut trials, mut drawn) = (0, 0);
    while trials < 1000 {
        drawn += 1;
        let mu = rng.gen_range(3.0..4.0);
        let mut x: f64 = rng.gen_range(0.0..1.0);
        let mut y: f64 = rng.gen_range(0.0..1.0);
        if x == y {
            continue;
        }
        if x > y {
            std::mem::swap(&mut x, &mut y);
        }
        let map = QuadMap::new(mu).unwrap();
        let ex = map.numeric_itinerary(x, depth, 1e-9);
        let ey = map.numeric_itinerary(y, depth, 1e-9);
        if ex.contains(&Symbol::C) || ey.contains(&Symbol::C) {
            continue;
        }
        trials += 1;
        if mt_compare_prefix(&ex, &ey) == Ordering::Greater {
            return fail(format!("mu = {mu}, x = {x}, y = {y}: itinerary of x is greater"));
        }
    }
    pass(format!("{trials} C-free trials ({drawn} drawn), depth {depth}, no GT"))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, Duration);
    let criteria: [Criterion; 8] = [
        ("1 example fixture", example_fixture, Duration::from_secs(1)),
        ("2 theorem sweep n <= 12", theorem_sweep, Duration::from_secs(60)),
        ("3 construction identities", construction_identities, Duration::from_secs(30)),
        ("4 cokernel bridge", cokernel_bridge, Duration::MAX),
        ("5 a = 0 implies reducible, n <= 12", zero_a_reducible, Duration::MAX),
        ("6 SNF engine properties", snf_engine, Duration::from_secs(30)),
        ("7 dynamics cross-validation", dynamics_cross_validation, Duration::from_secs(120)),
        ("8 monotonicity", monotonicity, Duration::MAX),
    ];

    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if outcome.ok && elapsed > budget {
            outcome = fail(format!("took {elapsed:.2?}, budget {budget:?}"));
        }
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        println!("[{status}] {name} ({elapsed:.2?}): {}", outcome.detail);
        failed += usize::from(!outcome.ok);
    }
    // group helpers used by the CLI agree with the direct cokernel route
    let w = parse_word("RLLRRC").unwrap();
    let a = kneading::transition_matrix(&build_orbit(&w).unwrap());
    assert_eq!(k0_group(&a), AbelianGroup::cyclic(2));
    assert!(k1_group(&a).is_trivial());

    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
