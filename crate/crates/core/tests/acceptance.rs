//! Acceptance run: one line per criterion with its measured time and limit.
//! Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use segkit::correspondences::{eta, theta};
use segkit::hecke::QParam;
use segkit::kleshchev::{column_residual_segments, row_residual_segments, Charge};
use segkit::partitions::{Multipartition, Partition};
use segkit::report::{first_failure, Check};
use segkit::segments::{sort_standard, word_to_multisegment, SegmentSeq, SegmentZ, StandardWord};
use segkit::suites;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_checks(checks: &[Check]) -> Outcome {
        match first_failure(checks) {
            None => Outcome {
                pass: true,
                detail: format!("{} checks", checks.len()),
            },
            Some(c) => Outcome {
                pass: false,
                detail: format!("{}: {}", c.name, c.detail),
            },
        }
    }

    fn fail(detail: impl Into<String>) -> Outcome {
        Outcome {
            pass: false,
            detail: detail.into(),
        }
    }
}

fn mp(parts: &[&[usize]]) -> Multipartition {
    Multipartition::from_parts(parts.iter().map(|p| p.to_vec()).collect()).unwrap()
}

fn example_word() -> StandardWord {
    StandardWord::new(vec![-1, 0, 1, 2, 2], vec![-4, -5, -2, -1, -2]).unwrap()
}

/// Word to Kleshchev data and back, on the worked five-column word.
fn example_conversion(w: &StandardWord) -> Result<(Multipartition, Charge, StandardWord), String> {
    let ms = word_to_multisegment(w);
    let (gamma, f) = eta(&ms).map_err(|e| e.to_string())?;
    let back = theta(&gamma, &f).map_err(|e| e.to_string())?;
    Ok((gamma, f, back))
}

fn criterion_example() -> Outcome {
    let w = example_word();
    // Warm the allocator once; the timed run is the second call.
    let _ = example_conversion(&w);
    let start = Instant::now();
    let res = example_conversion(&w);
    let elapsed = start.elapsed();
    let (gamma, f, back) = match res {
        Ok(x) => x,
        Err(e) => return Outcome::fail(e),
    };
    let want_gamma = mp(&[&[4], &[6, 4, 4], &[5]]);
    let want_lambda = mp(&[&[1, 1, 1, 1, 1], &[3, 3, 3, 3, 1, 1], &[1, 1, 1, 1]]);
    if gamma != want_gamma {
        return Outcome::fail(format!("gamma = {gamma}"));
    }
    if f.entries() != [2, 0, -1] {
        return Outcome::fail(format!("f = {f}"));
    }
    if gamma.conjugate() != want_lambda {
        return Outcome::fail(format!("lambda = {}", gamma.conjugate()));
    }
    if back != w {
        return Outcome::fail(format!("theta gives {back}"));
    }
    let col = column_residual_segments(&want_lambda, &f).unwrap();
    if col != sort_standard(&word_to_multisegment(&w)) {
        return Outcome::fail(format!(
            "column segments {col} are not the standard sequence"
        ));
    }
    if elapsed >= Duration::from_millis(1) {
        return Outcome::fail(format!("took {elapsed:?}"));
    }
    Outcome {
        pass: true,
        detail: format!("conversion {elapsed:?}"),
    }
}

fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> Partition {
    let mut parts = Vec::new();
    let mut rest = n;
    let mut cap = n;
    while rest > 0 {
        let p = rng.gen_range(1..=rest.min(cap));
        parts.push(p);
        rest -= p;
        cap = p;
    }
    Partition::new(parts).unwrap()
}

fn random_multipartition(rng: &mut ChaCha8Rng, m: usize, r: usize) -> Multipartition {
    let mut sizes = vec![0; m];
    for _ in 0..r {
        sizes[rng.gen_range(0..m)] += 1;
    }
    Multipartition::new(
        sizes
            .into_iter()
            .map(|s| random_partition(rng, s))
            .collect(),
    )
    .unwrap()
}

fn random_charge(rng: &mut ChaCha8Rng, m: usize) -> Charge {
    let mut f: Vec<i64> = (0..m).map(|_| rng.gen_range(-5..=5)).collect();
    f.sort_unstable_by(|a, b| b.cmp(a));
    Charge::new(f).unwrap()
}

/// Column segments straight from the box contents: component `m` first,
/// each column read bottom to top.
fn column_segments_oracle(lam: &[Vec<usize>], f: &[i64]) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for k in (0..lam.len()).rev() {
        let rows = &lam[k];
        let width = rows.first().copied().unwrap_or(0);
        for j in 1..=width {
            let height = rows.iter().filter(|&&p| p >= j).count();
            let contents: Vec<i64> = (1..=height).map(|i| f[k] + j as i64 - i as i64).collect();
            out.push((
                *contents.iter().min().unwrap(),
                *contents.iter().max().unwrap(),
            ));
        }
    }
    out
}

fn criterion_duality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e9_c0de);
    for case in 0..500 {
        let m = rng.gen_range(1..=4);
        let r = rng.gen_range(0..=10);
        let lam = random_multipartition(&mut rng, m, r);
        let f = random_charge(&mut rng, m);
        let col = column_residual_segments(&lam, &f).unwrap();
        let raw: Vec<Vec<usize>> = lam
            .components()
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        let oracle: Vec<(i64, i64)> = column_segments_oracle(&raw, f.entries());
        let got: Vec<(i64, i64)> = col.0.iter().map(|s| (s.lo(), s.hi())).collect();
        if got != oracle {
            return Outcome::fail(format!(
                "case {case}: column segments of {lam} f={f}: {got:?} vs {oracle:?}"
            ));
        }
        let row = row_residual_segments(&lam.conjugate(), &f.f_star()).unwrap();
        let inverted = SegmentSeq(
            oracle
                .iter()
                .map(|&(lo, hi)| SegmentZ::new(-hi, -lo).unwrap())
                .collect(),
        );
        if col.inverse() != row || inverted != row {
            return Outcome::fail(format!("case {case}: {lam} f={f}"));
        }
    }
    Outcome {
        pass: true,
        detail: "500 random cases".into(),
    }
}

fn run(id: usize, title: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let pass = out.pass && elapsed <= limit;
    println!(
        "criterion {id} {:<4} {title}: {} [{:.3}s, limit {}s]",
        if pass { "PASS" } else { "FAIL" },
        out.detail,
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    pass
}

fn main() -> ExitCode {
    let q2 = QParam::from_int(2).unwrap();
    let q3 = QParam::from_int(3).unwrap();
    let secs = Duration::from_secs;
    let results = [
        run(
            1,
            "worked word round trip (exact, conversion < 1 ms)",
            secs(1),
            criterion_example,
        ),
        run(
            2,
            "bijection suite, m<=3, charges in [-3,3], r<=6",
            secs(30),
            || Outcome::from_checks(&suites::bijection_suite(6, 3, -3, 3).unwrap()),
        ),
        run(
            3,
            "column/row duality on 500 random cases, r<=10, m<=4",
            secs(5),
            criterion_duality,
        ),
        run(
            4,
            "Drinfeld suite, r<=6, n=6, endpoints in [-4,4]",
            secs(60),
            || Outcome::from_checks(&suites::drinfeld_suite(6, 6, (-4, 4), 3, (-3, 3)).unwrap()),
        ),
        run(
            5,
            "skew module suite, r<=6, |outer|<=10, q0=2 and q0=3",
            secs(300),
            || {
                let mut checks = suites::skew_suite(6, 10, 5, &q2).unwrap();
                checks.extend(suites::skew_suite(6, 10, 5, &q3).unwrap());
                Outcome::from_checks(&checks)
            },
        ),
        run(6, "finite Hecke suite, r<=5", secs(180), || {
            let mut checks = suites::specht_suite(5, 4, &q2).unwrap();
            checks.extend(suites::jm_suite(5, None, &q2).unwrap());
            checks.extend(suites::relations_suite(5, &q2).unwrap());
            Outcome::from_checks(&checks)
        }),
        run(
            7,
            "Littlewood-Richardson suite, |outer|<=8",
            secs(120),
            || Outcome::from_checks(&suites::lr_suite(8)),
        ),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
