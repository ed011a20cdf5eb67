use pertspec::oracle::{exact_full_coulomb, solve_line, Extrapolation, LineGrid};
use pertspec::perturbation::{breakdown, ho_total_energy, Variant};
use pertspec::spectra::{
    a_coefficient, coulomb_unperturbed_energy, delta_n, ho_energy_via_morse, AMode, CoulombEnergyMode, LangerMap,
    QuantumNumbers,
};
use pertspec::tables::{build_table, TableConfig};
use pertspec::{Morse, Spec};

#[test]
fn spectrum_examples_through_the_public_api() {
    let ho = Spec::harmonic(0.5, 0.5, 0.8, 0.0001).unwrap();
    let b = breakdown(&ho, QuantumNumbers::new(0, 0), Variant::TableI4s).unwrap();
    assert!((b.total - 2.024_892_666_6).abs() < 1e-10);
    assert!((b.e0 + b.e1 + b.e2_diag + b.e2_offdiag - b.total).abs() < 1e-14);

    let cou = Spec::coulomb(-1.0, 0.001, 0.1, 1.0).unwrap();
    let b = breakdown(&cou, QuantumNumbers::new(0, 0), Variant::AsPrinted).unwrap();
    assert!((b.total + 0.418_761_882_3).abs() < 1e-10);

    let err = Spec::harmonic(0.5, -1.0, 0.8, 0.0).unwrap_err().to_string();
    assert!(err.contains("s > 0"), "{err}");
}

#[test]
fn unperturbed_examples() {
    assert!((a_coefficient(0.8f64, 0, AMode::Printed).unwrap().value() - 1.05).abs() < 1e-15);
    assert!((a_coefficient(0.0f64, 2, AMode::Printed).unwrap().value() - 6.25).abs() < 1e-15);
    assert!((a_coefficient(0.8f64, 0, AMode::LangerConsistent).unwrap().value() - 1.85).abs() < 1e-15);

    let bare = Spec::harmonic(0.5, 0.5, 0.0, 0.0).unwrap();
    let e = ho_energy_via_morse(&bare, QuantumNumbers::new(1, 0), &LangerMap::ho(1.0, 1.0).unwrap(), AMode::Printed);
    assert!((e.unwrap() - 3.5).abs() < 1e-13);

    let hydrogen = Spec::coulomb(-1.0, -1.0, 0.0, 0.0).unwrap();
    let qn = QuantumNumbers::new(1, 0);
    let e = coulomb_unperturbed_energy(&hydrogen, qn, CoulombEnergyMode::LangerDerived).unwrap();
    assert!((e + 0.125).abs() < 1e-15);
    assert!((e - exact_full_coulomb(&hydrogen, qn).unwrap()).abs() < 1e-15);

    let d = delta_n(&Spec::coulomb(-1.0, -1.0, 0.1, 0.0).unwrap(), QuantumNumbers::new(0, 0)).unwrap();
    assert!((d + 1.832_159_566_2).abs() < 1e-9);
}

#[test]
fn morse_levels_match_the_line_grid() {
    let p = Morse::new(-16.0, 8.0, 1.0).unwrap();
    assert_eq!(p.level_count(), 4);
    assert_eq!(Morse::new(-1.0, 8.0, 1.0).unwrap().level_count(), 0);
    assert_eq!(Morse::new(-2.0, 2.0, 1.0).unwrap().level_count(), 1);
    let grid = LineGrid::new(-2.0, 30.0, 8000).unwrap();
    let levels = solve_line(&p, &grid, 4, Extrapolation::Richardson).unwrap();
    for (n, got) in levels.iter().enumerate() {
        assert!((got - p.energy(n as u32).unwrap()).abs() < 1e-6);
    }
}

#[test]
fn table_rows_agree_with_direct_evaluation() {
    let mut cfg = TableConfig::oscillator();
    cfg.skip_reference = true;
    let table = build_table(&cfg).unwrap();
    assert_eq!(table.rows.len(), 24);
    for r in &table.rows {
        let spec = Spec::harmonic(0.5, r.s, 0.8, r.omega2).unwrap();
        let direct = ho_total_energy(&spec, QuantumNumbers::new(r.n, r.l), Variant::TableI4s).unwrap();
        assert_eq!(direct, r.e_n);
    }
    let row = table.rows.iter().find(|r| r.s == 0.25 && r.omega2 == 0.01 && r.n == 2 && r.l == 0).unwrap();
    assert!((row.e_n - 5.394_427_871_436_937_1).abs() < 1e-14);
}
