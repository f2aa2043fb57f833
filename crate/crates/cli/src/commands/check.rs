use dressed::linalg::Matrix;
use dressed::model::BasisKet;
use dressed::numeric::{
    compare_with_analytic, eigensolve_symmetric, oracle_spectrum, singlet_population, Propagator,
    QuantumState, DEFAULT_TOL,
};
use dressed::transitions::{kick, LadderOp};
use dressed::SpinLabel;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{echo_model, seed, Ctx, Report, SEED_VAR};
use crate::cli::{EvolveArgs, ModelArgs};
use crate::config::{pick, Initial, KickOp};
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Table};

/// Largest tolerated analytic-versus-oracle deviation.
pub const VERIFY_TOL: f64 = 1e-9;
const SELF_TEST_DIM: usize = 50;
const SELF_TEST_TOL: f64 = 1e-10;

fn random_symmetric(n: usize, rng: &mut ChaCha8Rng) -> Matrix<f64> {
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

pub fn verify(ctx: &Ctx, a: &ModelArgs) -> CliResult<Report> {
    let p = ctx.model(a)?;
    let seed = seed()?;
    let oracle = oracle_spectrum(&p)?;
    let report = compare_with_analytic(&oracle);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = random_symmetric(SELF_TEST_DIM, &mut rng);
    let d = eigensolve_symmetric(&m, DEFAULT_TOL)?;
    let self_test = d.reconstruct().sub(&m).frobenius() / m.frobenius();
    let self_ok = self_test <= SELF_TEST_TOL;
    let blocks_ok = report.passes(VERIFY_TOL);

    let mut t = Table::new(
        "verify",
        &[
            "block",
            "analytic_count",
            "oracle_count",
            "max_energy_dev",
            "min_overlap",
            "max_residual",
            "status",
        ],
    );
    echo_model(&mut t, &p);
    t.meta("tolerance", VERIFY_TOL)
        .meta("seed", seed)
        .meta("seed_var", SEED_VAR)
        .meta("oracle_sweeps", oracle.decomposition.sweeps)
        .meta("max_energy_dev", report.max_energy_dev())
        .meta("min_overlap", report.min_overlap())
        .meta("self_test_dim", SELF_TEST_DIM)
        .meta("self_test_residual", self_test)
        .meta("self_test", if self_ok { "PASS" } else { "FAIL" })
        .meta(
            "verdict",
            if blocks_ok && self_ok { "PASS" } else { "FAIL" },
        );
    for b in &report.blocks {
        t.push(vec![
            b.block.to_string().into(),
            b.analytic_count.into(),
            b.oracle_count.into(),
            b.max_energy_dev.into(),
            b.min_overlap.into(),
            b.max_residual.into(),
            if b.passes(VERIFY_TOL) { "PASS" } else { "FAIL" }.into(),
        ]);
    }
    Ok(Report {
        table: t,
        failed: !(blocks_ok && self_ok),
    })
}

fn initial_state(kind: Initial, n_max: usize, seed: u64) -> CliResult<QuantumState<f64>> {
    let dim = 4 * (n_max + 1);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut v = vec![0.0; dim];
    let state = match kind {
        Initial::Mixed => {
            v[BasisKet::new(0, SpinLabel::PsiMinus).index()] = h;
            v[BasisKet::new(0, SpinLabel::PsiPlus).index()] = h;
            QuantumState::from_real(&v)?
        }
        Initial::Singlet => QuantumState::basis(n_max, BasisKet::new(0, SpinLabel::PsiMinus)),
        Initial::UpDown => {
            // |↑↓⟩ = (|ψ⁺⟩ + |ψ⁻⟩)/√2 with one photon
            v[BasisKet::new(1, SpinLabel::PsiMinus).index()] = h;
            v[BasisKet::new(1, SpinLabel::PsiPlus).index()] = h;
            QuantumState::from_real(&v)?
        }
        Initial::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let amps = (0..dim)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            QuantumState::normalized(amps)?
        }
    };
    Ok(state)
}

fn ladder(k: KickOp) -> LadderOp {
    match k {
        KickOp::SigmaMinus1 => LadderOp::SigmaMinus1,
        KickOp::SigmaMinus2 => LadderOp::SigmaMinus2,
        KickOp::Collective => LadderOp::Collective,
        KickOp::Antisymmetric => LadderOp::Antisymmetric,
    }
}

fn initial_name(k: Initial) -> &'static str {
    match k {
        Initial::Mixed => "mixed",
        Initial::Singlet => "singlet",
        Initial::UpDown => "up-down",
        Initial::Random => "random",
    }
}

pub fn evolve(ctx: &Ctx, a: &EvolveArgs) -> CliResult<Table> {
    let p = ctx.model(&a.model)?;
    let e = &ctx.file.evolve;
    let kind = pick(a.initial, e.initial, Initial::Mixed);
    let default_stop = if p.g > 0.0 { 100.0 / p.g } else { 100.0 };
    let t_stop = pick(a.t_stop, e.t_stop, default_stop);
    let t_count = pick(a.t_count, e.t_count, 101);
    if !(t_stop > 0.0 && t_stop.is_finite()) || t_count < 2 {
        return Err(CliError::usage(format!(
            "need t_stop > 0 and t_count >= 2, got {t_stop} and {t_count}"
        )));
    }
    let seed = seed()?;
    let mut psi = initial_state(kind, p.n_max, seed)?;

    let mut t = Table::new("evolve", &["t", "singlet_population", "norm"]);
    echo_model(&mut t, &p);
    t.meta("initial", initial_name(kind))
        .meta("t_stop", t_stop)
        .meta("t_count", t_count)
        .meta("time_unit", "1/GHz");
    if kind == Initial::Random {
        t.meta("seed", seed);
    }
    if let Some(k) = a.kick.or(e.kick) {
        let op = ladder(k);
        t.meta("kick", op.name())
            .meta("singlet_population_before_kick", singlet_population(&psi));
        psi = kick(&psi, op)?;
    }

    let prop = Propagator::new(&p)?;
    let steps = (t_count - 1) as f64;
    for i in 0..t_count {
        let time = t_stop * i as f64 / steps;
        let out = prop.evolve(&psi, time)?;
        t.push(vec![
            time.into(),
            singlet_population(&out).into(),
            Cell::Num(out.norm()),
        ]);
    }
    Ok(t)
}
