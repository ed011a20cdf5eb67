use pertspec::format::sig;
use pertspec::laguerre::{gauss_laguerre_rule, laguerre_eval, laguerre_eval_explicit, LaguerreIndex};
use pertspec::perturbation::{ho_offdiag_explicit_sum, ho_offdiag_second_order, ho_total_energy, Variant};
use pertspec::spectra::{
    coulomb_energy_via_morse, coulomb_unperturbed_energy, ho_energy_via_morse, ho_unperturbed_energy, AMode,
    CoulombEnergyMode, LangerMap, MorseParams, PotentialSpec, QuantumNumbers,
};
use pertspec::tridiag::SymTridiagonal;
use proptest::prelude::*;
use statrs::function::gamma::gamma;

fn close(a: f64, b: f64, rel: f64, floor: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(floor)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn explicit_sum_tracks_recurrence(n in 0usize..=15, k in 0.1f64..5.0, z in 0.0f64..20.0) {
        let i = LaguerreIndex::new(n, k).unwrap();
        let a = laguerre_eval_explicit(i, z).unwrap();
        let b = laguerre_eval(i, z).unwrap();
        prop_assert!(close(a, b, 1e-10, 1.0), "{a} vs {b}");
    }

    #[test]
    fn gauss_rule_integrates_monomials(order in 1usize..30, exponent in 0.0f64..3.0, frac in 0.0f64..1.0) {
        let rule = gauss_laguerre_rule(order, exponent).unwrap();
        let p = ((2 * order - 1) as f64 * frac).floor().min(12.0) as i32;
        let got = rule.integrate(|z| z.powi(p));
        let want = gamma(exponent + p as f64 + 1.0);
        prop_assert!(close(got, want, 1e-10, 1e-300), "p={p}: {got} vs {want}");
        prop_assert!(rule.nodes().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sturm_count_is_monotone_and_matches_eigenvalues(
        diag in prop::collection::vec(-5.0f64..5.0, 2..40),
        seed in prop::collection::vec(0.1f64..2.0, 40),
        x in -8.0f64..8.0,
    ) {
        let off = seed[..diag.len() - 1].to_vec();
        let t = SymTridiagonal::new(diag, off).unwrap();
        let ev = t.eigenvalues().unwrap();
        prop_assert!(ev.windows(2).all(|w| w[0] <= w[1]));
        let below = ev.iter().filter(|e| **e < x).count();
        let near = ev.iter().any(|e| (e - x).abs() < 1e-9);
        if !near {
            prop_assert_eq!(t.count_below(x), below);
        }
        prop_assert!(t.count_below(x) <= t.count_below(x + 1.0));
        let trace: f64 = t.diag().iter().sum();
        prop_assert!(close(ev.iter().sum::<f64>(), trace, 1e-9, 1.0));
    }

    #[test]
    fn sig_rounds_to_nearest(x in -1e6f64..1e6, digits in 6usize..=17) {
        let s = sig(x, digits);
        let back: f64 = s.parse().unwrap();
        let ulp_room = 10f64.powi(1 - digits as i32) * 0.5 + 1e-16;
        prop_assert!(close(back, x, ulp_room, 1e-300), "{s} from {x}");
        prop_assert_eq!(sig(x, 17).parse::<f64>().unwrap(), x);
    }

    #[test]
    fn gauge_never_changes_levels(alpha in 0.1f64..5.0, r0 in 0.1f64..5.0, n in 0u32..6, l in 0u32..4, nu in 0.0f64..2.0) {
        let qn = QuantumNumbers::new(n, l);
        let ho = PotentialSpec::harmonic(0.5, 0.5, nu, 0.0).unwrap();
        let e = ho_energy_via_morse(&ho, qn, &LangerMap::ho(alpha, r0).unwrap(), AMode::Printed).unwrap();
        prop_assert!(close(e, ho_unperturbed_energy(&ho, qn, AMode::Printed).unwrap(), 1e-12, 1e-300));
        let cou = PotentialSpec::coulomb(-1.0, -1.0, nu, 0.0).unwrap();
        let e = coulomb_energy_via_morse(&cou, qn, &LangerMap::coulomb(alpha, r0).unwrap(), AMode::Printed).unwrap();
        let closed = coulomb_unperturbed_energy(&cou, qn, CoulombEnergyMode::LangerDerived).unwrap();
        prop_assert!(close(e, closed, 1e-12, 1e-300));
    }

    #[test]
    fn offdiag_sum_matches_closed_form(z in 0.05f64..3.0, s in 0.05f64..3.0, nu in 0.0f64..2.0, n in 0u32..12, l in 0u32..5) {
        let spec = PotentialSpec::harmonic(z, s, nu, 0.0).unwrap();
        let qn = QuantumNumbers::new(n, l);
        let a = ho_offdiag_second_order(&spec, qn).unwrap();
        let b = ho_offdiag_explicit_sum(&spec, qn).unwrap();
        prop_assert!(close(b, a, 1e-11, 1e-300) || a == 0.0 && b.abs() < 1e-15);
    }

    #[test]
    fn variants_agree_at_half(z in 0.05f64..3.0, omega2 in 0.0f64..0.1, n in 0u32..6, l in 0u32..4) {
        let spec = PotentialSpec::harmonic(z, 0.5, 0.8, omega2).unwrap();
        let qn = QuantumNumbers::new(n, l);
        let a = ho_total_energy(&spec, qn, Variant::AsPrinted).unwrap();
        let b = ho_total_energy(&spec, qn, Variant::TableI4s).unwrap();
        prop_assert!(close(a, b, 1e-15, 1e-300));
    }

    #[test]
    fn morse_levels_are_ordered_and_bound(v1 in -40.0f64..-1.0, v2 in 0.5f64..20.0, alpha in 0.3f64..3.0) {
        let p = MorseParams::new(v1, v2, alpha).unwrap();
        let count = p.level_count();
        let levels: Vec<f64> = (0..count).map(|n| p.energy(n).unwrap()).collect();
        prop_assert!(levels.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(levels.iter().all(|e| *e < 0.0 && *e >= p.well_depth() - 1e-12));
        prop_assert!(p.energy(count).is_err());
    }
}
