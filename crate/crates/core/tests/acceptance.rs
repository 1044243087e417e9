//! Acceptance criteria 1–13. Runs without the libtest harness so that every
//! criterion prints its `criterion N: PASS|FAIL` line, with the minimal
//! failing witness of each failed check. Exits nonzero if any fails.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use kronbound::verify::{self, Check};
use kronbound::Engine;

fn engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(Engine::new)
}

fn report(criterion: u32, checks: &[Check], elapsed: Duration, limit: Option<Duration>) -> bool {
    let slow = limit.is_some_and(|l| elapsed > l);
    let ok = checks.iter().all(Check::passed) && !slow;
    let summary: Vec<String> = checks
        .iter()
        .map(|c| {
            format!(
                "{} {}/{}",
                c.name,
                c.instances.clone() - c.failures.len() as u64,
                c.instances
            )
        })
        .collect();
    println!(
        "criterion {criterion}: {} [{}] in {:.1}s",
        if ok { "PASS" } else { "FAIL" },
        summary.join(", "),
        elapsed.as_secs_f64()
    );
    for c in checks.iter().filter(|c| !c.passed()) {
        let w = c.witness().unwrap();
        println!(
            "  {}: {} failures, minimal {}: {}",
            c.name,
            c.failures.len(),
            w.instance,
            w.detail
        );
    }
    if slow {
        println!("  over the {:?} runtime target", limit.unwrap());
    }
    ok
}

fn timed<F: FnOnce() -> Vec<Check>>(f: F) -> (Vec<Check>, Duration) {
    let start = Instant::now();
    let checks = f();
    (checks, start.elapsed())
}

fn criterion_01_cross_algorithm() -> bool {
    let (checks, t) = timed(|| vec![verify::check_cross_algorithm(engine(), 7)]);
    // sum of P(n)^3 over n <= 7, ending with the 3,375 triples of n = 7
    assert_eq!(checks[0].instances, 5211u32.into());
    report(1, &checks, t, Some(Duration::from_secs(60)))
}

fn criterion_02_two_coefficients() -> bool {
    let (checks, t) = timed(|| vec![verify::check_two_coefficients(engine(), 5)]);
    report(2, &checks, t, Some(Duration::from_secs(120)))
}

fn criterion_03_known_values() -> bool {
    let (checks, t) = timed(|| vec![verify::check_known_values(engine())]);
    report(3, &checks, t, None)
}

fn criterion_04_reduction() -> bool {
    let (checks, t) = timed(|| verify::check_reduction(engine(), 7));
    report(4, &checks, t, None)
}

fn criterion_05_k_stability() -> bool {
    let (checks, t) = timed(|| {
        vec![
            verify::check_kstab(engine(), 7, 3, 3),
            verify::check_monotone(engine(), 8, 200, 5, verify::MONOTONE_SIZE_CAP),
        ]
    });
    report(5, &checks, t, None)
}

fn criterion_06_bounds_sandwich() -> bool {
    let (checks, t) = timed(|| {
        vec![
            verify::check_sandwich(engine(), 7),
            verify::check_character_lower(engine(), 10),
        ]
    });
    report(6, &checks, t, None)
}

fn criterion_07_stanley() -> bool {
    let (checks, t) = timed(|| vec![verify::check_stanley(10)]);
    report(7, &checks, t, Some(Duration::from_secs(5)))
}

fn criterion_08_almkvist() -> bool {
    let (mut checks, t) = timed(|| verify::check_almkvist_recurrences(30));
    checks.push(verify::check_almkvist_window(30));
    report(8, &checks, t, None)
}

fn criterion_09_effective_bounds() -> bool {
    let (checks, t) = timed(|| {
        vec![
            verify::check_almkvist_gap(31, 40, 26),
            verify::check_effective_gap(8, 12),
        ]
    });
    report(9, &checks, t, Some(Duration::from_secs(120)))
}

fn criterion_10_strict_unimodality() -> bool {
    let (checks, t) = timed(|| vec![verify::check_strict_unimodality(8, 12)]);
    report(10, &checks, t, None)
}

fn criterion_11_manivel() -> bool {
    let (checks, t) = timed(|| vec![verify::check_manivel_samples(engine(), 100, 6, 11)]);
    assert_eq!(checks[0].instances, 100u32.into());
    report(11, &checks, t, None)
}

fn criterion_12_littlewood_richardson() -> bool {
    let (checks, t) = timed(|| vec![verify::check_lr_bound(6), verify::check_lr_stable(engine(), 5)]);
    report(12, &checks, t, None)
}

fn criterion_13_four_row_growth() -> bool {
    let (checks, t) = timed(|| vec![verify::check_square_family_growth(4, 12)]);
    report(13, &checks, t, None)
}

fn main() {
    let criteria: [fn() -> bool; 13] = [
        criterion_01_cross_algorithm,
        criterion_02_two_coefficients,
        criterion_03_known_values,
        criterion_04_reduction,
        criterion_05_k_stability,
        criterion_06_bounds_sandwich,
        criterion_07_stanley,
        criterion_08_almkvist,
        criterion_09_effective_bounds,
        criterion_10_strict_unimodality,
        criterion_11_manivel,
        criterion_12_littlewood_richardson,
        criterion_13_four_row_growth,
    ];
    let failed: Vec<usize> = criteria
        .iter()
        .enumerate()
        .filter(|(_, c)| !c())
        .map(|(i, _)| i + 1)
        .collect();
    if failed.is_empty() {
        println!("acceptance: all 13 criteria pass");
    } else {
        println!("acceptance: {} of 13 criteria fail: {failed:?}", failed.len());
        std::process::exit(1);
    }
}
