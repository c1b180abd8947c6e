use nalgebra::DVector;
use num_complex::Complex64;
use proptest::prelude::*;

use wedge_entropy::entropy::{
    boundary_decomposition, entropy_closed_form, mass_slope, relative_entropy_between, wedge_monotonicity_scan,
};
use wedge_entropy::fock::coherent_araki_entropy;
use wedge_entropy::modular::{
    modular_operator, paired_entropy_closed_form, paired_vector, random_standard_subspace, random_unitary,
    random_vector_in, subspace_from_modular_data, vector_entropy, vector_entropy_with,
};
use wedge_entropy::momentum::inner_product;
use wedge_entropy::{GaussianTerm, MomentumGrid, TimeZeroCharge, TruncationMode};

fn term(d: usize) -> impl Strategy<Value = GaussianTerm> {
    (-2.0..2.0f64, prop::collection::vec(-1.5..4.0f64, d), 0.4..1.6f64)
        .prop_map(|(c, a, s)| GaussianTerm::new(c, a, s).unwrap())
}

fn charge(d: usize) -> impl Strategy<Value = TimeZeroCharge> {
    (prop::collection::vec(term(d), 0..3), prop::collection::vec(term(d), 0..3))
        .prop_map(move |(h, k)| TimeZeroCharge::new(d, h, k).unwrap())
}

fn any_charge() -> impl Strategy<Value = (TimeZeroCharge, f64)> {
    (1usize..=3).prop_flat_map(|d| (charge(d), if d == 1 { 0.2..2.0f64 } else { 0.0..2.0f64 }))
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_form_is_quadratic((c, m) in any_charge(), lambda in -3.0..3.0f64) {
        let s = entropy_closed_form(&c, m, 0.0).unwrap().total;
        let t = entropy_closed_form(&c.scaled(lambda), m, 0.0).unwrap().total;
        prop_assert!(rel(t, lambda * lambda * s) <= 1e-12, "{t} vs {}", lambda * lambda * s);
    }

    #[test]
    fn closed_form_is_nonnegative((c, m) in any_charge(), a in -1.0..2.0f64) {
        let r = entropy_closed_form(&c, m, a).unwrap();
        prop_assert!(r.total >= 0.0);
        prop_assert!(r.field_term.unwrap() >= 0.0);
        prop_assert!(r.momentum_total.unwrap() >= 0.0);
        prop_assert!(r.invariant_violations(1e-8).is_empty(), "{:?}", r.invariant_violations(1e-8));
    }

    #[test]
    fn field_and_momentum_parts_add((c, m) in any_charge()) {
        let s = entropy_closed_form(&c, m, 0.0).unwrap().total;
        let sh = entropy_closed_form(&c.field_part(), m, 0.0).unwrap().total;
        let sk = entropy_closed_form(&c.momentum_part(), m, 0.0).unwrap().total;
        prop_assert!((s - sh - sk).abs() <= 1e-12 * s.max(1.0));
    }

    #[test]
    fn boundary_identity_holds(k in prop::collection::vec(term(1), 1..3), m in 0.2..2.0f64) {
        let c = TimeZeroCharge::momentum(1, k).unwrap();
        let (bulk, edge) = boundary_decomposition(&c, m).unwrap();
        let total = entropy_closed_form(&c, m, 0.0).unwrap().momentum_total.unwrap();
        prop_assert!(edge >= 0.0);
        prop_assert!((total - bulk - 0.5 * edge).abs() <= 1e-8 * total.max(1e-3));
    }

    #[test]
    fn entropy_is_affine_in_mass_squared(k in prop::collection::vec(term(2), 1..3), m in 0.0..1.5f64) {
        let c = TimeZeroCharge::momentum(2, k).unwrap();
        let s0 = entropy_closed_form(&c, m, 0.0).unwrap().total;
        let s1 = entropy_closed_form(&c, (m * m + 1.0).sqrt(), 0.0).unwrap().total;
        let slope = mass_slope(&c, 0.0);
        prop_assert!(slope >= 0.0);
        prop_assert!((s1 - s0 - slope).abs() <= 1e-9 * s1.max(1.0));
    }

    #[test]
    fn smaller_wedges_carry_less_entropy((c, m) in any_charge()) {
        let scan = wedge_monotonicity_scan(&c, m, &[0.0, 0.25, 0.5, 1.0, 2.0]).unwrap();
        for w in scan.windows(2) {
            prop_assert!(w[1].1 <= w[0].1 + 1e-12 * w[0].1.max(1.0), "{:?}", scan);
        }
    }

    #[test]
    fn relative_entropy_depends_on_difference((a, m) in any_charge(), shift in 0.1..1.0f64) {
        let b = a.shifted_along_x1(shift);
        let s = relative_entropy_between(&a, &b, m).unwrap();
        let d = entropy_closed_form(&a.difference(&b).unwrap(), m, 0.0).unwrap().total;
        prop_assert!(rel(s, d) <= 1e-12);
        prop_assert!(relative_entropy_between(&a, &a, m).unwrap().abs() <= 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn onshell_data_symmetry(c in charge(1), m in 0.3..1.5f64) {
        let grid = MomentumGrid::new(1, m, 12.0, 256).unwrap();
        for mode in [TruncationMode::Full, TruncationMode::WedgeHalfSpace] {
            let f = c.field_part().to_onshell(&grid, mode).unwrap();
            let g = c.momentum_part().to_onshell(&grid, mode).unwrap();
            let scale = f.samples().iter().chain(g.samples()).map(|z| z.norm()).fold(1.0, f64::max);
            prop_assert!(f.conjugate_symmetry_defect() <= 1e-12 * scale);
            prop_assert!(g.conjugate_antisymmetry_defect() <= 1e-12 * scale);
        }
    }

    #[test]
    fn inner_product_is_hermitian(a in charge(2), b in charge(2)) {
        let grid = MomentumGrid::new(2, 1.0, 6.0, 24).unwrap();
        let f = a.to_onshell(&grid, TruncationMode::WedgeHalfSpace).unwrap();
        let g = b.to_onshell(&grid, TruncationMode::Full).unwrap();
        let fg = inner_product(&f, &g).unwrap();
        let gf = inner_product(&g, &f).unwrap();
        prop_assert!((fg - gf.conj()).norm() <= 1e-12 * fg.norm().max(1.0));
        prop_assert!(inner_product(&f, &f).unwrap().re >= 0.0);
        prop_assert!(inner_product(&f, &f).unwrap().im.abs() <= 1e-12 * inner_product(&f, &f).unwrap().re.max(1.0));
    }

    #[test]
    fn tomita_relations(n in 1usize..=4, seed in any::<u64>()) {
        let k = random_standard_subspace(n, seed).unwrap();
        let data = modular_operator(&k).unwrap();
        let r = data.residuals(k.space());
        let bound = 1e-8f64.max(64.0 * f64::EPSILON * data.condition_number());
        prop_assert!(r.max() <= bound, "{r:?}, κ(Δ) = {:e}", data.condition_number());
        prop_assert!(data.spectrum().iter().all(|&l| l > 0.0));
        let v = random_vector_in(&k, seed ^ 0x5eed);
        prop_assert!(vector_entropy_with(&k, &data, &v).unwrap() >= -1e-12);
    }

    #[test]
    fn unitary_covariance(n in 2usize..=4, seed in 0u64..1000) {
        let k = random_standard_subspace(n, seed).unwrap();
        let u = random_unitary(k.space(), seed + 1);
        let uk = k.transformed(&u).unwrap();
        let v = random_vector_in(&k, seed + 2);
        let s = vector_entropy(&k, &v).unwrap();
        let t = vector_entropy(&uk, &(&u * &v)).unwrap();
        prop_assert!((s - t).abs() <= 1e-8 * s.abs().max(1.0), "{s} vs {t}");
    }

    #[test]
    fn paired_modes_match_closed_form(
        lambdas in prop::collection::vec(0.05..0.95f64, 1..4),
        zs in prop::collection::vec((-1.5..1.5f64, -1.5..1.5f64), 3),
    ) {
        let zs: Vec<Complex64> = zs[..lambdas.len()].iter().map(|&(a, b)| Complex64::new(a, b)).collect();
        let k = subspace_from_modular_data(&lambdas).unwrap();
        let h: DVector<f64> = paired_vector(&lambdas, &zs).unwrap();
        let expected: f64 = lambdas.iter().zip(&zs).map(|(&l, &z)| paired_entropy_closed_form(l, z)).sum();
        let got = vector_entropy(&k, &h).unwrap();
        prop_assert!((got - expected).abs() <= 1e-10 * expected.max(1.0), "{got} vs {expected}");
    }

    #[test]
    fn fock_oracle_matches_closed_form(lambda in 0.05..0.5f64, re in -1.5..1.5f64, im in -1.5..1.5f64) {
        let z = Complex64::new(re, im);
        let araki = coherent_araki_entropy(lambda, z, 40).unwrap();
        let closed = paired_entropy_closed_form(lambda, z);
        prop_assert!((araki - closed).abs() <= 1e-6, "{araki} vs {closed}");
    }
}
