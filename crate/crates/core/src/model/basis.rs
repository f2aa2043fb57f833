use serde::{Deserialize, Serialize};

/// Two-qubit state in the coupled (total-spin) basis.
///
/// The discriminant is the position inside a photon shell:
/// (↑↑, ψ⁺, ψ⁻, ↓↓) = (0, 1, 2, 3), with ψ± = (↑↓ ± ↓↑)/√2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpinLabel {
    UpUp = 0,
    PsiPlus = 1,
    PsiMinus = 2,
    DownDown = 3,
}

impl SpinLabel {
    pub const ALL: [SpinLabel; 4] = [
        SpinLabel::UpUp,
        SpinLabel::PsiPlus,
        SpinLabel::PsiMinus,
        SpinLabel::DownDown,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    pub fn is_singlet(self) -> bool {
        self == SpinLabel::PsiMinus
    }

    pub fn name(self) -> &'static str {
        match self {
            SpinLabel::UpUp => "up_up",
            SpinLabel::PsiPlus => "psi_plus",
            SpinLabel::PsiMinus => "psi_minus",
            SpinLabel::DownDown => "down_down",
        }
    }
}

/// Two-qubit state in the product (charge) basis, qubit 1 written first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductSpin {
    UpUp = 0,
    UpDown = 1,
    DownUp = 2,
    DownDown = 3,
}

impl ProductSpin {
    pub const ALL: [ProductSpin; 4] = [
        ProductSpin::UpUp,
        ProductSpin::UpDown,
        ProductSpin::DownUp,
        ProductSpin::DownDown,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Whether qubit `q` (1 or 2) is in |↑⟩.
    pub fn is_up(self, q: usize) -> bool {
        let (a, b) = match self {
            ProductSpin::UpUp => (true, true),
            ProductSpin::UpDown => (true, false),
            ProductSpin::DownUp => (false, true),
            ProductSpin::DownDown => (false, false),
        };
        if q == 1 {
            a
        } else {
            b
        }
    }

    pub fn from_bits(q1_up: bool, q2_up: bool) -> Self {
        match (q1_up, q2_up) {
            (true, true) => ProductSpin::UpUp,
            (true, false) => ProductSpin::UpDown,
            (false, true) => ProductSpin::DownUp,
            (false, false) => ProductSpin::DownDown,
        }
    }
}

/// |photon⟩ ⊗ |spin⟩ in the coupled basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisKet {
    pub photon: usize,
    pub spin: SpinLabel,
}

impl BasisKet {
    pub fn new(photon: usize, spin: SpinLabel) -> Self {
        Self { photon, spin }
    }

    /// Linear index `4·photon + spin`.
    pub fn index(self) -> usize {
        4 * self.photon + self.spin.index()
    }

    pub fn from_index(i: usize) -> Self {
        Self {
            photon: i / 4,
            spin: SpinLabel::from_index(i % 4).expect("i % 4 < 4"),
        }
    }
}

impl std::fmt::Display for BasisKet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "|{},{}>", self.photon, self.spin.name())
    }
}

pub fn basis_dimension(n_max: usize) -> usize {
    4 * (n_max + 1)
}

/// All kets up to `n_max` photons in index order.
pub fn build_basis(n_max: usize) -> Vec<BasisKet> {
    (0..basis_dimension(n_max))
        .map(BasisKet::from_index)
        .collect()
}
