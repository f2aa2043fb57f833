use rayon::prelude::*;
use serde::Serialize;

use super::operators::{transition_amplitude, LadderOp};
use crate::analytic::{Branch, DressedState, Sector};
use crate::Scalar;

/// Amplitudes at or below this magnitude count as forbidden.
pub const ALLOWED_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LevelId {
    pub sector: Sector,
    pub n: usize,
    pub branch: Branch,
}

impl<T: Scalar> From<&DressedState<T>> for LevelId {
    fn from(s: &DressedState<T>) -> Self {
        Self {
            sector: s.sector,
            n: s.n,
            branch: s.branch,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransitionRecord<T> {
    pub from: LevelId,
    pub to: LevelId,
    pub operator: LadderOp,
    pub amplitude: T,
    pub allowed: bool,
}

impl<T> TransitionRecord<T> {
    pub fn crosses_sectors(&self) -> bool {
        self.from.sector != self.to.sector
    }
}

/// Matrix elements between every ordered pair of distinct levels.
///
/// A symmetric bath acts through S₋ only. An asymmetric bath
/// g₁σ₋⁽¹⁾ + g₂σ₋⁽²⁾ = ½(g₁+g₂)S₋ + ½(g₁−g₂)(σ₋⁽¹⁾ − σ₋⁽²⁾) adds the
/// antisymmetric channel and the two single-qubit lowering operators.
pub fn selection_rules<T: Scalar>(
    levels: &[DressedState<T>],
    symmetric: bool,
) -> Vec<TransitionRecord<T>> {
    let ops: &[LadderOp] = if symmetric {
        &[LadderOp::Collective]
    } else {
        &[
            LadderOp::Collective,
            LadderOp::Antisymmetric,
            LadderOp::SigmaMinus1,
            LadderOp::SigmaMinus2,
        ]
    };
    let tol = T::lit(ALLOWED_TOL);
    (0..levels.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let from = &levels[i];
            levels
                .iter()
                .enumerate()
                .filter(move |&(j, _)| j != i)
                .flat_map(move |(_, to)| {
                    ops.iter().map(move |&op| {
                        let amplitude = transition_amplitude(from, to, op);
                        TransitionRecord {
                            from: from.into(),
                            to: to.into(),
                            operator: op,
                            amplitude,
                            allowed: amplitude.abs() > tol,
                        }
                    })
                })
        })
        .collect()
}

/// Largest |amplitude| among singlet↔triplet records.
pub fn cross_sector_max<T: Scalar>(records: &[TransitionRecord<T>]) -> T {
    records
        .iter()
        .filter(|r| r.crosses_sectors())
        .fold(T::zero(), |m, r| m.max(r.amplitude.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{dressed_levels, w1_eigensystem, wn_eigensystem};
    use crate::model::ModelParams;

    #[test]
    fn symmetric_bath_keeps_singlets_dark() {
        let p = ModelParams::resonant(4.0, 4.0, 2.0, 8).unwrap();
        let levels = dressed_levels(&p);
        let records = selection_rules(&levels, true);
        assert_eq!(records.len(), levels.len() * (levels.len() - 1));
        assert!(records
            .iter()
            .filter(|r| r.crosses_sectors())
            .all(|r| !r.allowed));
        assert!(cross_sector_max(&records) <= 1e-12);
    }

    #[test]
    fn asymmetric_bath_opens_singlet_channel() {
        let p = ModelParams::resonant(4.0, 4.0, 2.0, 8).unwrap();
        let records = selection_rules(&dressed_levels(&p), false);
        let hit = records
            .iter()
            .find(|r| {
                r.from.branch == Branch::Singlet
                    && r.from.n == 0
                    && r.to.branch == Branch::Zero
                    && r.to.n == 0
                    && r.operator == LadderOp::Antisymmetric
            })
            .unwrap();
        assert!(hit.allowed);
        // (σ₋¹ − σ₋²)|ψ⁻⟩ = √2 |↓↓⟩
        assert!((hit.amplitude - 2f64.sqrt()).abs() < 1e-14);
        let single = records
            .iter()
            .find(|r| {
                r.from.branch == Branch::Singlet
                    && r.from.n == 0
                    && r.to.branch == Branch::Zero
                    && r.to.n == 0
                    && r.operator == LadderOp::SigmaMinus1
            })
            .unwrap();
        assert!((single.amplitude - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn within_triplet_transition_allowed() {
        let p = ModelParams::resonant(4.0, 4.0, 2.0, 8).unwrap();
        let from = wn_eigensystem(&p, 1).unwrap().minus;
        let to = w1_eigensystem(&p).minus;
        let records = selection_rules(&[from, to], true);
        let r = &records[0];
        assert_eq!(r.from.n, 1);
        assert!(r.allowed, "{r:?}");
    }

    #[test]
    fn deterministic_order() {
        let p = ModelParams::resonant(4.0, 4.0, 2.0, 5).unwrap();
        let levels = dressed_levels(&p);
        assert_eq!(
            selection_rules(&levels, false),
            selection_rules(&levels, false)
        );
    }
}
