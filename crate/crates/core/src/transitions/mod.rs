//! Bath-induced transitions between dressed states.
//!
//! The bath couples to each qubit through `g_k⁽ʲ⁾ σ₊⁽ʲ⁾ a_k + h.c.`, so a
//! dressed-state matrix element is that of a bare qubit ladder operator with
//! the resonator photon number left untouched.

mod damping;
mod operators;
mod selection;

pub use damping::{
    damping_ratio, golden_rule_rate, golden_rule_ratio, rabi_splitting, BathModel, DampingOutcome,
    ForbiddenReason, GoldenRuleRatio, SpectralDensity,
};
pub use operators::{bath_amplitude, kick, matrix_element_dense, transition_amplitude, LadderOp};
pub use selection::{cross_sector_max, selection_rules, LevelId, TransitionRecord, ALLOWED_TOL};
