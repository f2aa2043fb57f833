//! Single-qubit operators on the two-qubit space as 4×4 matrices.
//!
//! Product-basis matrices are indexed by [`ProductSpin`]; the `coupled_*`
//! variants are conjugated into the [`SpinLabel`] ordering.

use super::basis::{ProductSpin, SpinLabel};
use crate::linalg::Matrix;
use crate::Scalar;

/// σ₋ on qubit `q` (1 or 2), product basis.
pub fn sigma_minus<T: Scalar>(q: usize) -> Matrix<T> {
    assert!(q == 1 || q == 2, "qubit index must be 1 or 2");
    let mut m = Matrix::zeros(4, 4);
    for from in ProductSpin::ALL {
        if from.is_up(q) {
            let to = if q == 1 {
                ProductSpin::from_bits(false, from.is_up(2))
            } else {
                ProductSpin::from_bits(from.is_up(1), false)
            };
            m[(to.index(), from.index())] = T::one();
        }
    }
    m
}

pub fn sigma_plus<T: Scalar>(q: usize) -> Matrix<T> {
    sigma_minus::<T>(q).transpose()
}

pub fn sigma_z<T: Scalar>(q: usize) -> Matrix<T> {
    assert!(q == 1 || q == 2, "qubit index must be 1 or 2");
    let mut m = Matrix::zeros(4, 4);
    for s in ProductSpin::ALL {
        m[(s.index(), s.index())] = if s.is_up(q) { T::one() } else { -T::one() };
    }
    m
}

/// Columns are the coupled kets (↑↑, ψ⁺, ψ⁻, ↓↓) written in the product
/// basis (↑↑, ↑↓, ↓↑, ↓↓).
pub fn coupled_to_product_spin<T: Scalar>() -> Matrix<T> {
    let h = T::FRAC_1_SQRT_2();
    let mut u = Matrix::zeros(4, 4);
    u[(ProductSpin::UpUp.index(), SpinLabel::UpUp.index())] = T::one();
    u[(ProductSpin::UpDown.index(), SpinLabel::PsiPlus.index())] = h;
    u[(ProductSpin::DownUp.index(), SpinLabel::PsiPlus.index())] = h;
    u[(ProductSpin::UpDown.index(), SpinLabel::PsiMinus.index())] = h;
    u[(ProductSpin::DownUp.index(), SpinLabel::PsiMinus.index())] = -h;
    u[(ProductSpin::DownDown.index(), SpinLabel::DownDown.index())] = T::one();
    u
}

/// Conjugate a product-basis operator into the coupled basis.
pub fn to_coupled<T: Scalar>(op: &Matrix<T>) -> Matrix<T> {
    let u = coupled_to_product_spin::<T>();
    u.transpose().matmul(op).matmul(&u)
}

pub fn coupled_sigma_minus<T: Scalar>(q: usize) -> Matrix<T> {
    to_coupled(&sigma_minus::<T>(q))
}
