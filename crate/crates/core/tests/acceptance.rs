//! End-to-end acceptance criteria. One PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use pertspec::oracle::report::{discrepancy_report, Item, ReportConfig, ROUTE_TOLERANCE};
use pertspec::oracle::{solve_radial, Extrapolation, RadialGrid};
use pertspec::perturbation::Variant;
use pertspec::spectra::Family;
use pertspec::tables::{build_table, TableConfig};
use pertspec::verify::{
    explicit_sum_checks, gauge_checks, hellmann_feynman_checks, morse_checks, offdiag_checks, orthogonality_checks,
    y_recursion_checks, Check, ORTHOGONALITY_ORDERS,
};

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_checks(checks: &[Check]) -> Outcome {
    let worst = checks.iter().max_by(|a, b| (a.deviation / a.tolerance.max(1e-300)).total_cmp(&(b.deviation / b.tolerance.max(1e-300))));
    let failed = checks.iter().filter(|c| !c.passed()).count();
    Outcome {
        ok: !checks.is_empty() && failed == 0,
        detail: match worst {
            Some(w) => format!("{} checks, {failed} failed, worst {} = {:.3e} (tol {:.0e})", checks.len(), w.name, w.deviation, w.tolerance),
            None => "no checks ran".into(),
        },
    }
}

fn table_checks(cfg: &TableConfig) -> Vec<Check> {
    let mut cfg = cfg.clone();
    cfg.skip_reference = true;
    let table = build_table(&cfg).expect("table builds");
    let mut out = Vec::new();
    for r in &table.rows {
        for (name, got, want) in [("E_pure", r.e_pure, r.published_e_pure), ("E_n", r.e_n, r.published_e_n)] {
            let w = want.expect("every row has published values");
            out.push(Check {
                name: format!("s={} Omega={} n={} l={} {name}", r.s, r.omega2, r.n, r.l),
                deviation: (got - w).abs() / w.abs(),
                tolerance: 1e-12,
            });
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let mut checks = table_checks(&TableConfig::oscillator());
    let mut printed = TableConfig::oscillator();
    printed.variant = Variant::AsPrinted;
    printed.s = Some(0.5);
    let half = table_checks(&printed);
    // two values per row: 24 pairs, then the 12 pairs at s = 0.5
    let ok = checks.len() == 48 && half.len() == 24;
    checks.extend(half);
    let mut o = from_checks(&checks);
    o.ok &= ok;
    o
}

fn criterion_2() -> Outcome {
    let checks = table_checks(&TableConfig::coulomb());
    let mut o = from_checks(&checks);
    o.ok &= checks.len() == 20;
    o
}

/// Unextrapolated error and its ratio under grid halving.
fn halving<F: Fn(f64) -> f64 + Copy>(v: F, grid: RadialGrid<f64>, level: usize, exact: f64) -> f64 {
    let coarse = solve_radial(v, 0, &grid, level + 1, Extrapolation::None).unwrap()[level];
    let fine = solve_radial(v, 0, &grid.refined(), level + 1, Extrapolation::None).unwrap()[level];
    (coarse - exact).abs() / (fine - exact).abs()
}

fn criterion_3() -> Outcome {
    let mut checks = Vec::new();
    let ho_grid = pertspec::tables::GridSettings::for_family(Family::HarmonicOscillator).grid().unwrap();
    let ho = solve_radial(|r: f64| 0.5 * r * r, 0, &ho_grid, 3, Extrapolation::Richardson).unwrap();
    for (i, (got, want)) in ho.iter().zip([1.5, 3.5, 5.5]).enumerate() {
        checks.push(Check { name: format!("oscillator level {i}"), deviation: (got - want).abs(), tolerance: 1e-6 });
    }
    let h_grid = pertspec::tables::GridSettings::for_family(Family::Coulomb).grid().unwrap();
    let h = solve_radial(|r: f64| -1.0 / r, 0, &h_grid, 3, Extrapolation::Richardson).unwrap();
    for (i, (got, want)) in h.iter().zip([-0.5, -0.125, -1.0 / 18.0]).enumerate() {
        checks.push(Check { name: format!("hydrogen level {i}"), deviation: ((got - want) / want).abs(), tolerance: 1e-4 });
    }
    // ratios within 4 ± 0.5 count as second order
    let ratios = [
        ("oscillator", halving(|r: f64| 0.5 * r * r, RadialGrid::new(1e-9, 12.0, 1500).unwrap(), 0, 1.5)),
        ("hydrogen", halving(|r: f64| -1.0 / r, RadialGrid::new(1e-8, 60.0, 6000).unwrap(), 0, -0.5)),
    ];
    for (name, ratio) in ratios {
        checks.push(Check { name: format!("{name} halving ratio {ratio:.3}"), deviation: (ratio - 4.0).abs(), tolerance: 0.5 });
    }
    from_checks(&checks)
}

fn criterion_4() -> Outcome {
    let mut checks = orthogonality_checks(20, &ORTHOGONALITY_ORDERS, 1e-10).unwrap();
    checks.extend(y_recursion_checks(20, &ORTHOGONALITY_ORDERS, 1e-11).unwrap());
    checks.extend(explicit_sum_checks(15, &ORTHOGONALITY_ORDERS, 1e-10).unwrap());
    from_checks(&checks)
}

fn criterion_5() -> Outcome {
    from_checks(&morse_checks(16000, 1e-5).unwrap())
}

fn criterion_6() -> Outcome {
    from_checks(&gauge_checks(1e-12).unwrap())
}

fn criterion_7() -> Outcome {
    from_checks(&offdiag_checks(8, 3, 1e-12).unwrap())
}

fn criterion_8() -> Outcome {
    from_checks(&hellmann_feynman_checks(4, 2, 1e-7).unwrap())
}

fn criterion_9() -> Outcome {
    let rep = discrepancy_report(&ReportConfig::default()).unwrap();
    let mut checks = Vec::new();
    for item in Item::ALL {
        let records: Vec<_> = rep.of(item).collect();
        let spread = records.iter().map(|r| if r.confirmed() { r.route_spread() } else { f64::INFINITY }).fold(0.0, f64::max);
        let spread = if records.is_empty() { f64::INFINITY } else { spread };
        checks.push(Check {
            name: format!("item ({}) {} records route spread", item.letter(), records.len()),
            deviation: spread,
            tolerance: ROUTE_TOLERANCE,
        });
    }
    let anchor_ok = rep
        .find("km1_product[m=0,n=0,k=1]")
        .is_some_and(|r| r.printed_value == 2.0 && (r.oracle_value - 1.0).abs() < 1e-12);
    checks.push(Check {
        name: "(m=n=0, k=1) printed 2 vs oracle 1".into(),
        deviation: if anchor_ok { 0.0 } else { 1.0 },
        tolerance: 0.0,
    });
    from_checks(&checks)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 9] = [
        ("1 oscillator table reproduction", criterion_1, Some(Duration::from_secs(1))),
        ("2 Coulomb table reproduction", criterion_2, Some(Duration::from_secs(1))),
        ("3 reference columns from the grid oracle", criterion_3, Some(Duration::from_secs(60))),
        ("4 Laguerre identities", criterion_4, Some(Duration::from_secs(5))),
        ("5 Morse levels and bound-state count", criterion_5, Some(Duration::from_secs(30))),
        ("6 gauge invariance of the Morse route", criterion_6, None),
        ("7 second-order closed form vs explicit sum", criterion_7, None),
        ("8 Hellmann-Feynman identities", criterion_8, None),
        ("9 discrepancy report", criterion_9, None),
    ];
    let mut all = true;
    for (name, run, limit) in criteria {
        let t = Instant::now();
        let mut o = run();
        let elapsed = t.elapsed();
        if let Some(limit) = limit {
            if elapsed > limit {
                o.ok = false;
                o.detail.push_str(&format!("; over the {limit:?} limit"));
            }
        }
        all &= o.ok;
        let limit = limit.map_or(String::new(), |l| format!(" < {l:?}"));
        println!("{} criterion {name}: {} [{:.3?}{limit}]", if o.ok { "PASS" } else { "FAIL" }, o.detail, elapsed);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
