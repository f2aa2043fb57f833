use super::small::{eigen2, tridiag3_eigen};
use super::{Branch, DressedState, Sector};
use crate::model::{BasisKet, ModelParams, SpinLabel};
use crate::{Error, Result, Scalar};

fn check_photon(what: &'static str, photon: usize, n_max: usize) -> Result<()> {
    if photon > n_max {
        return Err(Error::OutOfRange {
            what,
            index: photon,
            n_max,
        });
    }
    Ok(())
}

/// Singlet level E_n^(s) = nω − J.
pub fn singlet_level<T: Scalar>(p: &ModelParams<T>, n: usize) -> Result<T> {
    check_photon("singlet level", n, p.n_max)?;
    Ok(T::from_usize_lossy(n) * p.omega - p.j)
}

/// |n,ψ⁻⟩ with its energy.
pub fn singlet_state<T: Scalar>(p: &ModelParams<T>, n: usize) -> Result<DressedState<T>> {
    Ok(DressedState {
        sector: Sector::Singlet,
        n,
        branch: Branch::Singlet,
        energy: singlet_level(p, n)?,
        amplitudes: vec![(BasisKet::new(n, SpinLabel::PsiMinus), T::one())],
    })
}

/// E_0^(0) = J − ω_a.
pub fn w0_level<T: Scalar>(p: &ModelParams<T>) -> T {
    p.j - p.omega_a
}

pub fn w0_state<T: Scalar>(p: &ModelParams<T>) -> DressedState<T> {
    DressedState {
        sector: Sector::Triplet,
        n: 0,
        branch: Branch::Zero,
        energy: w0_level(p),
        amplitudes: vec![(BasisKet::new(0, SpinLabel::DownDown), T::one())],
    }
}

/// The two dressed states of {|0,ψ⁺⟩, |1,↓↓⟩}.
#[derive(Debug, Clone, PartialEq)]
pub struct W1Eigensystem<T> {
    pub minus: DressedState<T>,
    pub plus: DressedState<T>,
    /// Mixing angle, tan θ = g/J at resonance.
    pub theta: T,
}

/// Block W⁽¹⁾. At resonance E_0^(±) = ±√(J² + g²) and
/// |φ₀⁽⁻⁾⟩ = cos(θ/2)|0,ψ⁺⟩ − sin(θ/2)|1,↓↓⟩,
/// |φ₀⁽⁺⁾⟩ = sin(θ/2)|0,ψ⁺⟩ + cos(θ/2)|1,↓↓⟩.
/// Off resonance the same form holds with the general 2×2 angle.
pub fn w1_eigensystem<T: Scalar>(p: &ModelParams<T>) -> W1Eigensystem<T> {
    let (lower, upper, theta) = if p.is_resonant() {
        let r = p.j.hypot(p.g);
        (-r, r, p.g.atan2(p.j))
    } else {
        eigen2(-p.j, p.g, p.omega + p.j - p.omega_a)
    };
    let half = theta / T::lit(2.0);
    let (s, c) = half.sin_cos();
    let a = BasisKet::new(0, SpinLabel::PsiPlus);
    let b = BasisKet::new(1, SpinLabel::DownDown);
    let state = |branch, energy, ca, cb| DressedState {
        sector: Sector::Triplet,
        n: 0,
        branch,
        energy,
        amplitudes: vec![(a, ca), (b, cb)],
    };
    W1Eigensystem {
        minus: state(Branch::Minus, lower, c, -s),
        plus: state(Branch::Plus, upper, s, c),
        theta,
    }
}

/// The three dressed states of W⁽ⁿ⁺¹⁾ = {|n−1,↑↑⟩, |n,ψ⁺⟩, |n+1,↓↓⟩}.
#[derive(Debug, Clone, PartialEq)]
pub struct WnEigensystem<T> {
    pub minus: DressedState<T>,
    pub zero: DressedState<T>,
    pub plus: DressedState<T>,
}

impl<T: Scalar> WnEigensystem<T> {
    pub fn states(&self) -> [&DressedState<T>; 3] {
        [&self.minus, &self.zero, &self.plus]
    }
}

/// N_n(g) = √(J² + (2n+1)g²).
pub(crate) fn dressed_frequency<T: Scalar>(j: T, g: T, n: usize) -> T {
    let k = T::from_usize_lossy(2 * n + 1);
    (j * j + k * g * g).sqrt()
}

/// Block W⁽ⁿ⁺¹⁾ for n ≥ 1.
///
/// At resonance E_n^(0) = nω + J and E_n^(±) = nω ± N_n(g), with
/// |φ_n^(0)⟩ = √((n+1)/(2n+1))|n−1,↑↑⟩ − √(n/(2n+1))|n+1,↓↓⟩. The ± states
/// use Ω_n± = N_n(N_n ∓ J) rewritten through g² = (N_n² − J²)/(2n+1) so
/// that no amplitude divides by g. Off resonance the block is solved
/// directly.
pub fn wn_eigensystem<T: Scalar>(p: &ModelParams<T>, n: usize) -> Result<WnEigensystem<T>> {
    if n == 0 {
        return Err(Error::Argument(
            "three-level blocks start at n = 1; use w1_eigensystem".into(),
        ));
    }
    check_photon("block W(n+1)", n + 1, p.n_max)?;
    let kets = [
        BasisKet::new(n - 1, SpinLabel::UpUp),
        BasisKet::new(n, SpinLabel::PsiPlus),
        BasisKet::new(n + 1, SpinLabel::DownDown),
    ];
    let nf = T::from_usize_lossy(n);
    let base = nf * p.omega;
    let make = |branch, energy, c: [T; 3]| DressedState {
        sector: Sector::Triplet,
        n,
        branch,
        energy,
        amplitudes: kets.iter().copied().zip(c).collect(),
    };

    if p.is_resonant() {
        let two = T::lit(2.0);
        let k = T::from_usize_lossy(2 * n + 1);
        let np1 = nf + T::one();
        let big_n = dressed_frequency(p.j, p.g, n);
        let zero = [(np1 / k).sqrt(), T::zero(), -(nf / k).sqrt()];
        let (plus, minus) = if big_n == T::zero() {
            // J = g = 0: fully degenerate block, any orthonormal completion
            (
                [(nf / k).sqrt(), T::zero(), (np1 / k).sqrt()],
                [T::zero(), -T::one(), T::zero()],
            )
        } else {
            // N ± J without cancellation
            let kg2 = k * p.g * p.g;
            let (n_plus_j, n_minus_j) = if p.j >= T::zero() {
                let s = big_n + p.j;
                (s, kg2 / s)
            } else {
                let d = big_n - p.j;
                (kg2 / d, d)
            };
            let denom = two * big_n * k;
            (
                [
                    (nf * n_plus_j / denom).sqrt(),
                    (n_minus_j / (two * big_n)).sqrt(),
                    (np1 * n_plus_j / denom).sqrt(),
                ],
                [
                    (nf * n_minus_j / denom).sqrt(),
                    -(n_plus_j / (two * big_n)).sqrt(),
                    (np1 * n_minus_j / denom).sqrt(),
                ],
            )
        };
        return Ok(WnEigensystem {
            minus: make(Branch::Minus, base - big_n, minus),
            zero: make(Branch::Zero, base + p.j, zero),
            plus: make(Branch::Plus, base + big_n, plus),
        });
    }

    // energies relative to nω keep the bisection well scaled
    let diag = [p.omega_a + p.j - p.omega, -p.j, p.omega + p.j - p.omega_a];
    let off = [p.g * nf.sqrt(), p.g * (nf + T::one()).sqrt()];
    let (vals, vecs) = tridiag3_eigen(diag, off);
    let fix = |v: [T; 3]| {
        let tiny = T::epsilon() * T::lit(16.0);
        let lead = [v[0], v[2], v[1]]
            .into_iter()
            .find(|x| x.abs() > tiny)
            .unwrap_or(T::one());
        if lead < T::zero() {
            [-v[0], -v[1], -v[2]]
        } else {
            v
        }
    };
    Ok(WnEigensystem {
        minus: make(Branch::Minus, base + vals[0], fix(vecs[0])),
        zero: make(Branch::Zero, base + vals[1], fix(vecs[1])),
        plus: make(Branch::Plus, base + vals[2], fix(vecs[2])),
    })
}

/// Energy of level (n, branch).
pub fn level_energy<T: Scalar>(p: &ModelParams<T>, n: usize, branch: Branch) -> Result<T> {
    match (branch, n) {
        (Branch::Singlet, n) => singlet_level(p, n),
        (Branch::Zero, 0) => Ok(w0_level(p)),
        (Branch::Plus, 0) => Ok(w1_eigensystem(p).plus.energy),
        (Branch::Minus, 0) => Ok(w1_eigensystem(p).minus.energy),
        (b, n) => {
            let w = wn_eigensystem(p, n)?;
            Ok(match b {
                Branch::Zero => w.zero.energy,
                Branch::Plus => w.plus.energy,
                _ => w.minus.energy,
            })
        }
    }
}

/// E_n^(−), the branch whose crossings define the critical structure.
pub fn minus_energy<T: Scalar>(p: &ModelParams<T>, n: usize) -> Result<T> {
    level_energy(p, n, Branch::Minus)
}

/// Every dressed state of every block that fits under the photon cutoff.
pub fn dressed_levels<T: Scalar>(p: &ModelParams<T>) -> Vec<DressedState<T>> {
    let mut out = Vec::with_capacity(4 * (p.n_max + 1));
    for n in 0..=p.n_max {
        out.push(singlet_state(p, n).expect("n <= n_max"));
    }
    out.push(w0_state(p));
    let w1 = w1_eigensystem(p);
    out.push(w1.minus);
    out.push(w1.plus);
    for n in 1..p.n_max {
        let w = wn_eigensystem(p, n).expect("n + 1 <= n_max");
        out.push(w.minus);
        out.push(w.zero);
        out.push(w.plus);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::hamiltonian_matrix;

    fn p(omega: f64, j: f64, g: f64) -> ModelParams<f64> {
        ModelParams::resonant(omega, j, g, 12).unwrap()
    }

    #[test]
    fn singlet_examples() {
        assert_eq!(singlet_level(&p(2.0, 1.0, 0.3), 0).unwrap(), -1.0);
        assert_eq!(singlet_level(&p(4.0, 4.0, 0.3), 3).unwrap(), 8.0);
        assert!(matches!(
            singlet_level(&p(4.0, 4.0, 0.3), 13),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn w0_examples() {
        assert_eq!(w0_level(&p(1.0, 1.0, 0.5)), 0.0);
        assert_eq!(w0_level(&p(8.0, 4.0, 0.5)), -4.0);
    }

    #[test]
    fn w1_decoupled() {
        let w = w1_eigensystem(&p(3.0, 1.0, 0.0));
        assert_eq!(w.minus.energy, -1.0);
        assert_eq!(w.plus.energy, 1.0);
        assert_eq!(w.theta, 0.0);
        assert_eq!(
            w.minus.coefficient(BasisKet::new(0, SpinLabel::PsiPlus)),
            1.0
        );
        assert_eq!(
            w.plus.coefficient(BasisKet::new(1, SpinLabel::DownDown)),
            1.0
        );
    }

    #[test]
    fn w1_reference_values() {
        let params = p(4.0, 4.0, 2.0);
        let w = w1_eigensystem(&params);
        assert!((w.plus.energy - 4.472_135_955).abs() < 1e-9);
        assert!((w.minus.energy + 4.472_135_955).abs() < 1e-9);
        assert!((w.theta - 0.463_647_609).abs() < 1e-9);
        let h = hamiltonian_matrix(&params);
        assert!(w.plus.residual(&h, 12) < 1e-12);
        assert!(w.minus.residual(&h, 12) < 1e-12);
    }

    #[test]
    fn wn_decoupled() {
        let w = wn_eigensystem(&p(2.5, 1.0, 0.0), 1).unwrap();
        assert_eq!(w.zero.energy, 3.5);
        assert_eq!(w.plus.energy, 3.5);
        assert_eq!(w.minus.energy, 1.5);
    }

    #[test]
    fn wn_reference_values() {
        let params = p(4.0, 4.0, 2.0);
        let w = wn_eigensystem(&params, 1).unwrap();
        let root = 28f64.sqrt();
        assert!((w.plus.energy - (4.0 + root)).abs() < 1e-12);
        assert!((w.minus.energy - (4.0 - root)).abs() < 1e-12);
        assert!((w.zero.energy - 8.0).abs() < 1e-12);
        let c: Vec<f64> = w.zero.amplitudes.iter().map(|a| a.1).collect();
        assert!((c[0] - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert_eq!(c[1], 0.0);
        assert!((c[2] + (1.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn amplitudes_match_rabi_frequency_form() {
        // √(n g²/(2Ω)), ±√((N∓J)/(2N)), √((n+1)g²/(2Ω)) with Ω = N² ∓ JN
        let (j, g) = (1.3, 0.7);
        for n in 1..6 {
            let w = wn_eigensystem(&p(2.0, j, g), n).unwrap();
            let nf = n as f64;
            let big = (j * j + (2.0 * nf + 1.0) * g * g).sqrt();
            for (state, sign) in [(&w.plus, 1.0), (&w.minus, -1.0)] {
                let omega = big * big - sign * j * big;
                let expect = [
                    (nf * g * g / (2.0 * omega)).sqrt(),
                    sign * ((big - sign * j) / (2.0 * big)).sqrt(),
                    ((nf + 1.0) * g * g / (2.0 * omega)).sqrt(),
                ];
                for (a, e) in state.amplitudes.iter().zip(expect) {
                    assert!((a.1 - e).abs() < 1e-14, "n={n} {a:?} vs {e}");
                }
            }
        }
    }

    #[test]
    fn truncated_block_is_an_error() {
        let params = p(4.0, 4.0, 2.0);
        assert!(wn_eigensystem(&params, 11).is_ok());
        assert!(matches!(
            wn_eigensystem(&params, 12),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn off_resonant_blocks_solve_the_matrix() {
        let params = ModelParams::<f64>::new(3.7, 4.2, 1.1, 0.8, 10).unwrap();
        let h = hamiltonian_matrix(&params);
        for s in dressed_levels(&params) {
            assert!(s.residual(&h, 10) < 1e-12, "{} residual", s.label());
            assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn negative_coupling_sign() {
        let params = ModelParams::resonant(2.0, -1.5, 0.4, 8).unwrap();
        let h = hamiltonian_matrix(&params);
        for s in dressed_levels(&params) {
            assert!(s.residual(&h, 8) < 1e-12, "{}", s.label());
        }
    }

    #[test]
    fn level_count() {
        let params = p(4.0, 4.0, 2.0);
        // 13 singlets, W0, W1 pair, 11 three-level blocks
        assert_eq!(dressed_levels(&params).len(), 13 + 1 + 2 + 33);
    }
}
