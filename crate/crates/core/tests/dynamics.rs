use dressed::numeric::{evolve, singlet_population, Propagator, QuantumState};
use dressed::transitions::{kick, LadderOp};
use dressed::{BasisKet, ModelParams64, SpinLabel};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_state(n_max: usize, rng: &mut ChaCha8Rng) -> QuantumState<f64> {
    let amps = (0..4 * (n_max + 1))
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    QuantumState::normalized(amps).unwrap()
}

#[test]
fn singlet_population_is_trapped() {
    let p = ModelParams64::resonant(4.0, 4.0, 2.0, 20).unwrap();
    let prop = Propagator::new(&p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let psi = random_state(20, &mut rng);
        let before = singlet_population(&psi);
        for t in [0.1, 1.0, 10.0, 100.0] {
            let out = prop.evolve(&psi, t / p.g).unwrap();
            assert!((singlet_population(&out) - before).abs() <= 1e-9);
        }
    }
}

#[test]
fn mixed_initial_state_stays_half_singlet() {
    let p = ModelParams64::new(3.0, 4.0, 4.0, 2.0, 10).unwrap();
    let mut v = vec![0.0; 44];
    v[BasisKet::new(0, SpinLabel::PsiMinus).index()] = 1.0;
    v[BasisKet::new(0, SpinLabel::PsiPlus).index()] = 1.0;
    let psi = QuantumState::from_real(&v).unwrap();
    for t in [0.0, 0.3, 7.0, 50.0] {
        let out = evolve(&psi, &p, t).unwrap();
        assert!((singlet_population(&out) - 0.5).abs() <= 1e-9);
    }
}

#[test]
fn evolution_is_unitary_for_long_times() {
    let p = ModelParams64::resonant(4.0, 4.0, 2.0, 15).unwrap();
    let prop = Propagator::new(&p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let psi = random_state(15, &mut rng);
    for t in [1.0, 1e2, 1e3, 1e4] {
        let out = prop.evolve(&psi, t).unwrap();
        assert!((out.norm() - 1.0).abs() <= 1e-12, "t = {t}");
    }
}

#[test]
fn zero_time_is_identity() {
    let p = ModelParams64::resonant(4.0, 4.0, 2.0, 6).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let psi = random_state(6, &mut rng);
    let out = evolve(&psi, &p, 0.0).unwrap();
    for (a, b) in psi.amplitudes().iter().zip(out.amplitudes()) {
        assert!((a - b).norm() <= 1e-12);
    }
}

#[test]
fn eigenstates_only_pick_up_a_phase() {
    let p = ModelParams64::resonant(4.0, 4.0, 2.0, 8).unwrap();
    let prop = Propagator::new(&p).unwrap();
    let v = prop.decomposition().eigenvector(5);
    let psi = QuantumState::from_real(&v).unwrap();
    let out = prop.evolve(&psi, 3.7).unwrap();
    for (a, b) in psi.amplitudes().iter().zip(out.amplitudes()) {
        assert!((a.norm_sqr() - b.norm_sqr()).abs() <= 1e-12);
    }
}

#[test]
fn asymmetric_kick_breaks_trapping() {
    let p = ModelParams64::resonant(4.0, 4.0, 2.0, 20).unwrap();
    let prop = Propagator::new(&p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..20 {
        let psi = random_state(20, &mut rng);
        let before = singlet_population(&psi);
        let kicked = kick(&psi, LadderOp::SigmaMinus1).unwrap();
        let after = singlet_population(&kicked);
        assert!((after - before).abs() > 1e-6);
        // the kicked state is trapped again under H
        let later = prop.evolve(&kicked, 10.0).unwrap();
        assert!((singlet_population(&later) - after).abs() <= 1e-9);
    }
}

#[test]
fn bad_inputs_are_rejected() {
    let p = ModelParams64::resonant(4.0, 4.0, 2.0, 4).unwrap();
    let psi = QuantumState::basis(4, BasisKet::new(0, SpinLabel::UpUp));
    assert!(evolve(&psi, &p, -1.0).is_err());
    let other = QuantumState::basis(5, BasisKet::new(0, SpinLabel::UpUp));
    assert!(evolve(&other, &p, 1.0).is_err());
    assert!(QuantumState::new(vec![Complex64::new(0.5, 0.0); 20]).is_err());
}
