use dressed::analytic::{
    crossing_point, crossing_points, dressed_levels, level_shift, minus_energy, wn_eigensystem, xi0,
};
use dressed::linalg::{dot, Matrix};
use dressed::model::{block_partition, hamiltonian_matrix, total_spin_squared, BlockId};
use dressed::numeric::{eigensolve_symmetric, DEFAULT_TOL};
use dressed::transitions::{damping_ratio, rabi_splitting, BathModel, SpectralDensity};
use dressed::{BasisKet, ModelParams64};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_symmetric(n: usize, seed: u64) -> Matrix<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let x: f64 = rng.gen_range(-1.0..1.0);
            a[(i, j)] = x;
            a[(j, i)] = x;
        }
    }
    a
}

fn params() -> impl Strategy<Value = ModelParams64> {
    (
        0.1f64..8.0,
        0.1f64..8.0,
        -4.0f64..4.0,
        0.0f64..3.0,
        2usize..9,
    )
        .prop_map(|(wa, w, j, g, n)| ModelParams64::new(wa, w, j, g, n).unwrap())
}

#[test]
fn jacobi_reconstructs_seeded_50x50() {
    let a = random_symmetric(50, 0x5eed);
    let d = eigensolve_symmetric(&a, DEFAULT_TOL).unwrap();
    assert!(d.reconstruct().sub(&a).frobenius() <= 1e-10 * a.frobenius());
    assert!(d.orthogonality_error() <= 1e-11);
    assert!(d.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn crossings_get_more_compact_as_g_shrinks() {
    let spread = |g: f64| {
        let pts = crossing_points::<f64>(g, 0..=18).unwrap();
        let xs: Vec<f64> = pts.iter().map(|c| c.xi_star).collect();
        xs.iter().cloned().fold(f64::MIN, f64::max) - xs.iter().cloned().fold(f64::MAX, f64::min)
    };
    let s: Vec<f64> = [0.7, 0.5, 0.16].into_iter().map(spread).collect();
    assert!(s[0] > s[1] && s[1] > s[2], "{s:?}");
    let tiny = crossing_points(1e-4f64, 0..=18).unwrap();
    assert!(tiny.iter().all(|c| (c.xi_star - 1e-8).abs() <= 1e-8));
}

#[test]
fn half_shift_coefficient_fails_the_quartic_bound() {
    // half of δ(n) leaves a g² residual
    let g = 1e-2;
    let p = ModelParams64::resonant(1.0, 1.0, g, 12).unwrap();
    let n = 3;
    let exact = (1.0 + (2 * n + 1) as f64 * g * g).sqrt() - 1.0;
    let printed = level_shift(&p, n).unwrap() / 2.0;
    let bound = ((2 * n + 1) as f64).powi(2) / 4.0 * g.powi(4);
    assert!((exact - printed).abs() > 100.0 * bound);
    assert!((exact - level_shift(&p, n).unwrap()).abs() <= bound);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi_reconstructs_random_symmetric(n in 1usize..30, seed in any::<u64>()) {
        let a = random_symmetric(n, seed);
        let d = eigensolve_symmetric(&a, DEFAULT_TOL).unwrap();
        prop_assert!(d.residual(&a) <= 1e-10 * a.frobenius().max(1.0));
        prop_assert!(d.reconstruct().sub(&a).frobenius() <= 1e-10 * a.frobenius().max(1.0));
        prop_assert!(d.orthogonality_error() <= 1e-11);
        let trace: f64 = d.eigenvalues.iter().sum();
        prop_assert!((trace - a.trace()).abs() <= 1e-9 * a.frobenius().max(1.0));
    }

    #[test]
    fn hamiltonian_commutes_with_total_spin(p in params()) {
        let h = hamiltonian_matrix(&p);
        let s2 = total_spin_squared::<f64>(p.n_max);
        let comm = h.matmul(&s2).sub(&s2.matmul(&h));
        prop_assert!(comm.max_abs() <= 1e-12);
        prop_assert_eq!(h.asymmetry(), 0.0);
    }

    #[test]
    fn hamiltonian_is_block_diagonal(p in params()) {
        let h = hamiltonian_matrix(&p);
        for i in 0..h.rows() {
            for j in 0..h.cols() {
                if BlockId::of(BasisKet::from_index(i)) != BlockId::of(BasisKet::from_index(j)) {
                    prop_assert_eq!(h[(i, j)], 0.0);
                }
            }
        }
    }

    #[test]
    fn analytic_states_are_eigenvectors(p in params()) {
        let h = hamiltonian_matrix(&p);
        let levels = dressed_levels(&p);
        for s in &levels {
            prop_assert!(s.residual(&h, p.n_max) <= 1e-10 * s.energy.abs().max(1.0), "{}", s.label());
        }
        prop_assert_eq!(levels.len(), block_partition(p.n_max).complete_blocks().iter().map(|b| b.indices.len()).sum::<usize>());
    }

    #[test]
    fn triplet_blocks_are_orthonormal(p in params(), n in 1usize..8) {
        prop_assume!(n < p.n_max);
        let w = wn_eigensystem(&p, n).unwrap();
        let v: Vec<Vec<f64>> = w.states().iter().map(|s| s.to_dense(p.n_max)).collect();
        for a in 0..3 {
            for b in 0..3 {
                let expected = if a == b { 1.0 } else { 0.0 };
                prop_assert!((dot(&v[a], &v[b]) - expected).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn shift_is_second_order(n in 0usize..=10, k in -3.0f64..-1.0, j in 0.5f64..5.0) {
        let g = 10f64.powf(k) * j;
        let p = ModelParams64::resonant(1.0, j, g, 12).unwrap();
        let exact = (j * j + (2 * n + 1) as f64 * g * g).sqrt();
        let c = ((2 * n + 1) as f64).powi(2) / 8.0 * 1.05;
        let err = (exact - j - level_shift(&p, n).unwrap()).abs();
        // the floor covers rounding in the square root
        prop_assert!(err <= c * g.powi(4) / j.powi(3) + 8.0 * f64::EPSILON * j);
    }

    #[test]
    fn crossings_sit_below_the_critical_point(g in 1e-3f64..2.0, n in 0usize..25) {
        let c = crossing_point(g, n).unwrap();
        let next = crossing_point(g, n + 1).unwrap();
        prop_assert!(c.xi_star > 0.0 && c.xi_star <= g * g);
        prop_assert!(next.xi_star < c.xi_star);
    }

    #[test]
    fn minus_branch_falls_below_every_checked_crossing(g in 0.05f64..1.5, frac in 0.01f64..0.99) {
        // ξ*_n shrinks with n, so the smallest crossing in range is the binding one
        let p = ModelParams64::scaled(1.0, g, 30).unwrap();
        let lowest = crossing_point(g, 28).unwrap().xi_star;
        let q = p.at_xi(frac * lowest).unwrap();
        let e: Vec<f64> = (0..30).map(|n| minus_energy(&q, n).unwrap()).collect();
        prop_assert!(e.windows(2).all(|w| w[1] < w[0]));
        prop_assert!(frac * lowest < xi0(&q).unwrap());

        // between the lowest and highest crossing the sequence turns around
        let highest = crossing_point(g, 0).unwrap().xi_star;
        let mid = p.at_xi(0.5 * (lowest + highest)).unwrap();
        let e: Vec<f64> = (0..30).map(|n| minus_energy(&mid, n).unwrap()).collect();
        prop_assert!(!e.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn gap_closes_at_each_crossing(g in 0.05f64..1.5, n in 0usize..15, h in 1e-8f64..1e-2) {
        let star = crossing_point(g, n).unwrap().xi_star;
        let p = ModelParams64::scaled(1.0, g, n + 3).unwrap();
        for xi in [star + h, star] {
            let q = p.at_xi(xi).unwrap();
            let gap = minus_energy(&q, n + 1).unwrap() - minus_energy(&q, n).unwrap();
            prop_assert!((gap - (xi - star)).abs() <= 1e-12 * (1.0 + xi));
        }
    }

    #[test]
    fn rabi_splitting_grows_with_g(j in 0.5f64..8.0, g in 0.0f64..4.0, dg in 1e-4f64..1.0) {
        let a = ModelParams64::resonant(1.0, j, g, 4).unwrap();
        let b = ModelParams64::resonant(1.0, j, g + dg, 4).unwrap();
        prop_assert!(rabi_splitting(&b) > rabi_splitting(&a));
        prop_assert!(rabi_splitting(&a) <= g * g / (2.0 * j) * (1.0 + 1e-12));
    }

    #[test]
    fn damping_ratio_is_scale_invariant(g1 in 0.1f64..3.0, g2 in 0.1f64..3.0, lambda in 0.01f64..100.0) {
        prop_assume!((g1 - g2).abs() > 1e-3);
        let p = ModelParams64::resonant(12.0, 4.0, 2.0, 4).unwrap();
        let bath = |s: f64| BathModel {
            g1: g1 * s,
            g2: g2 * s,
            rho1: SpectralDensity::Flat { rho0: 0.7 },
            rho2: SpectralDensity::Ohmic { eta: 0.3 },
        };
        let a = damping_ratio(&p, &bath(1.0), None).unwrap().0.value().unwrap();
        let b = damping_ratio(&p, &bath(lambda), None).unwrap().0.value().unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a.max(1.0));
    }
}
