use serde::{Deserialize, Serialize};

use super::levels::{dressed_frequency, minus_energy, w0_state, w1_eigensystem};
use super::DressedState;
use crate::model::ModelParams;
use crate::{Error, Result, Scalar};

fn require_j<T: Scalar>(p: &ModelParams<T>, what: &'static str) -> Result<()> {
    if p.j == T::zero() {
        return Err(Error::Singular(what));
    }
    Ok(())
}

/// δ(n) = (2n+1)g²/(2J), the second-order term of N_n(g) − J.
pub fn level_shift<T: Scalar>(p: &ModelParams<T>, n: usize) -> Result<T> {
    require_j(p, "level shift")?;
    let k = T::from_usize_lossy(2 * n + 1);
    Ok(k * p.g * p.g / (T::lit(2.0) * p.j))
}

/// Weak-coupling levels `(E_n^(−), E_n^(+)) ≈ nω ∓ (J + δ(n))`.
pub fn perturbative_levels<T: Scalar>(p: &ModelParams<T>, n: usize) -> Result<(T, T)> {
    let shift = p.j + level_shift(p, n)?;
    let base = T::from_usize_lossy(n) * p.omega;
    Ok((base - shift, base + shift))
}

/// Intrinsic critical point ξ₀ = g²/J².
pub fn xi0<T: Scalar>(p: &ModelParams<T>) -> Result<T> {
    require_j(p, "xi0")?;
    let r = p.g / p.j;
    Ok(r * r)
}

/// ξ₁ = 1 + √(1 + ξ₀), where E_0^(0) meets E_0^(−) on the resonant line.
pub fn xi1<T: Scalar>(p: &ModelParams<T>) -> Result<T> {
    Ok(T::one() + (T::one() + xi0(p)?).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Region {
    /// 0 < ξ ≤ ξ₀
    I,
    /// ξ₀ < ξ ≤ ξ₁
    II,
    /// ξ > ξ₁
    III,
}

impl Region {
    pub fn name(self) -> &'static str {
        match self {
            Region::I => "I",
            Region::II => "II",
            Region::III => "III",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GroundState<T> {
    /// No ground state: E_n^(−) keeps falling with n. `strictly_decreasing`
    /// records whether that held for every complete block checked.
    Unbounded {
        strictly_decreasing: bool,
        levels_checked: usize,
    },
    /// |φ₀^(−)⟩.
    DressedMinus(DressedState<T>),
    /// |φ₀^(0)⟩ = |0,↓↓⟩.
    BareDownDown(DressedState<T>),
}

impl<T> GroundState<T> {
    pub fn name(&self) -> &'static str {
        match self {
            GroundState::Unbounded { .. } => "none",
            GroundState::DressedMinus(_) => "phi0_minus",
            GroundState::BareDownDown(_) => "0_down_down",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegionReport<T> {
    pub xi: T,
    pub region: Region,
    pub xi0: T,
    pub xi1: T,
    pub ground: GroundState<T>,
}

/// Place ξ in region I, II or III for the J, g and cutoff of `p`, moving
/// onto the resonant line ω = ω_a = ξJ.
pub fn classify_region<T: Scalar>(xi: T, p: &ModelParams<T>) -> Result<RegionReport<T>> {
    if !(xi > T::zero()) {
        return Err(Error::Argument(format!("xi must be positive, got {xi}")));
    }
    let at = p.at_xi(xi)?;
    let x0 = xi0(&at)?;
    let x1 = xi1(&at)?;
    let region = if xi <= x0 {
        Region::I
    } else if xi <= x1 {
        Region::II
    } else {
        Region::III
    };
    let ground = match region {
        Region::I => {
            // complete blocks carry E_n^(−) for n < n_max
            let energies: Vec<T> = (0..at.n_max)
                .map(|n| minus_energy(&at, n))
                .collect::<Result<_>>()?;
            GroundState::Unbounded {
                strictly_decreasing: energies.windows(2).all(|w| w[1] < w[0]),
                levels_checked: energies.len(),
            }
        }
        Region::II => GroundState::DressedMinus(w1_eigensystem(&at).minus),
        Region::III => GroundState::BareDownDown(w0_state(&at)),
    };
    Ok(RegionReport {
        xi,
        region,
        xi0: x0,
        xi1: x1,
        ground,
    })
}

/// Crossing of E_n^(−) and E_{n+1}^(−) on the resonant line, in units of J.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossingPoint<T> {
    pub n: usize,
    pub xi_star: T,
    pub energy_over_j: T,
}

const CROSSING_AGREEMENT: f64 = 1e-10;

/// Crossing point of neighbouring minus-branch levels for coupling g/J.
///
/// Closed form: ξ*_n = (N_{n+1} − N_n)/J = 2(g/J)² / (N_{n+1}/J + N_n/J).
/// The value is confirmed by bisection on E_{n+1}^(−) − E_n^(−) over
/// [0, ξ₀], which brackets every crossing.
pub fn crossing_point<T: Scalar>(g_over_j: T, n: usize) -> Result<CrossingPoint<T>> {
    if !(g_over_j >= T::zero()) || !g_over_j.is_finite() {
        return Err(Error::Argument(format!(
            "g/J must be finite and non-negative, got {g_over_j}"
        )));
    }
    let x = g_over_j * g_over_j;
    let lower = dressed_frequency(T::one(), g_over_j, n);
    let upper = dressed_frequency(T::one(), g_over_j, n + 1);
    let closed = T::lit(2.0) * x / (lower + upper);

    if x > T::zero() {
        let p = ModelParams::scaled(T::one(), g_over_j, n + 2)?;
        let gap = |xi: T| -> Result<T> {
            let q = p.at_xi(xi)?;
            Ok(minus_energy(&q, n + 1)? - minus_energy(&q, n)?)
        };
        // ω = 0 is outside the model, so the bracket starts just above ξ = 0
        let bisected = bisect(gap, T::epsilon() * x, x)?;
        let tol = T::clamp_tol(CROSSING_AGREEMENT);
        if (bisected - closed).abs() > tol * closed.max(T::one()) {
            return Err(Error::CrossingMismatch {
                closed: closed.to_f64_lossy(),
                bisected: bisected.to_f64_lossy(),
            });
        }
    }

    Ok(CrossingPoint {
        n,
        xi_star: closed,
        energy_over_j: T::from_usize_lossy(n) * closed - lower,
    })
}

/// Crossings for n in `range`, in order.
pub fn crossing_points<T: Scalar>(
    g_over_j: T,
    range: std::ops::RangeInclusive<usize>,
) -> Result<Vec<CrossingPoint<T>>> {
    range.map(|n| crossing_point(g_over_j, n)).collect()
}

/// Root of an increasing function on [a, b].
fn bisect<T: Scalar>(f: impl Fn(T) -> Result<T>, mut a: T, mut b: T) -> Result<T> {
    let two = T::lit(2.0);
    if f(a)? > T::zero() {
        return Ok(a);
    }
    if f(b)? < T::zero() {
        return Ok(b);
    }
    for _ in 0..300 {
        let mid = (a + b) / two;
        if mid <= a || mid >= b {
            break;
        }
        if f(mid)? < T::zero() {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok((a + b) / two)
}
