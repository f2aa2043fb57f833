use super::basis::{basis_dimension, BasisKet, SpinLabel};
use super::params::ModelParams;
use super::spin;
use crate::linalg::Matrix;
use crate::Scalar;

/// Ising energy of a coupled spin label.
pub(crate) fn ising_energy<T: Scalar>(spin: SpinLabel, p: &ModelParams<T>) -> T {
    match spin {
        SpinLabel::UpUp => p.omega_a + p.j,
        SpinLabel::PsiPlus | SpinLabel::PsiMinus => -p.j,
        SpinLabel::DownDown => p.j - p.omega_a,
    }
}

/// Hamiltonian in the coupled basis, written down element by element.
///
/// Diagonal: `nω + E_Q(spin)`. Off-diagonal: `g√n` between |n,ψ⁺⟩ and
/// |n−1,↑↑⟩, `g√(n+1)` between |n,ψ⁺⟩ and |n+1,↓↓⟩. The singlet chain
/// has no off-diagonal entries.
pub fn hamiltonian_matrix<T: Scalar>(p: &ModelParams<T>) -> Matrix<T> {
    let dim = basis_dimension(p.n_max);
    let mut h = Matrix::zeros(dim, dim);
    for n in 0..=p.n_max {
        let nf = T::from_usize_lossy(n);
        for s in SpinLabel::ALL {
            let i = BasisKet::new(n, s).index();
            h[(i, i)] = nf * p.omega + ising_energy(s, p);
        }
        let psi = BasisKet::new(n, SpinLabel::PsiPlus).index();
        if n >= 1 {
            let up = BasisKet::new(n - 1, SpinLabel::UpUp).index();
            let v = p.g * nf.sqrt();
            h[(psi, up)] = v;
            h[(up, psi)] = v;
        }
        if n < p.n_max {
            let down = BasisKet::new(n + 1, SpinLabel::DownDown).index();
            let v = p.g * (nf + T::one()).sqrt();
            h[(psi, down)] = v;
            h[(down, psi)] = v;
        }
    }
    h
}

/// Hamiltonian in the product basis `4·n + ProductSpin`, assembled from
/// Pauli matrices and ladder operators.
pub fn hamiltonian_matrix_product<T: Scalar>(p: &ModelParams<T>) -> Matrix<T> {
    let dim = basis_dimension(p.n_max);
    let half = T::lit(0.5);
    let z1 = spin::sigma_z::<T>(1);
    let z2 = spin::sigma_z::<T>(2);
    let zz = z1.matmul(&z2);
    let hq = Matrix::from_fn(4, 4, |a, b| {
        half * p.omega_a * (z1[(a, b)] + z2[(a, b)]) + p.j * zz[(a, b)]
    });
    let mut raise = spin::sigma_plus::<T>(1);
    let r2 = spin::sigma_plus::<T>(2);
    raise = Matrix::from_fn(4, 4, |a, b| raise[(a, b)] + r2[(a, b)]);
    let coupling = p.g * T::FRAC_1_SQRT_2();

    let mut h = Matrix::zeros(dim, dim);
    for n in 0..=p.n_max {
        let nf = T::from_usize_lossy(n);
        for a in 0..4 {
            for b in 0..4 {
                let mut v = hq[(a, b)];
                if a == b {
                    v = v + nf * p.omega;
                }
                h[(4 * n + a, 4 * n + b)] = v;
            }
        }
        // (σ₊¹ + σ₊²) a : |n⟩ → √n |n−1⟩
        if n >= 1 {
            let amp = coupling * nf.sqrt();
            for a in 0..4 {
                for b in 0..4 {
                    let v = amp * raise[(a, b)];
                    if v != T::zero() {
                        h[(4 * (n - 1) + a, 4 * n + b)] = v;
                        h[(4 * n + b, 4 * (n - 1) + a)] = v;
                    }
                }
            }
        }
    }
    h
}

/// Block-diagonal change of basis: column `i` is coupled ket `i` written in
/// the product basis.
pub fn coupled_to_product<T: Scalar>(n_max: usize) -> Matrix<T> {
    let u = spin::coupled_to_product_spin::<T>();
    let dim = basis_dimension(n_max);
    let mut full = Matrix::zeros(dim, dim);
    for n in 0..=n_max {
        for a in 0..4 {
            for b in 0..4 {
                full[(4 * n + a, 4 * n + b)] = u[(a, b)];
            }
        }
    }
    full
}

/// Total spin S² in the coupled basis, built from the product-basis Pauli
/// matrices (S = (σ¹ + σ²)/2).
pub fn total_spin_squared<T: Scalar>(n_max: usize) -> Matrix<T> {
    let half = T::lit(0.5);
    let z1 = spin::sigma_z::<T>(1);
    let z2 = spin::sigma_z::<T>(2);
    let sz = Matrix::from_fn(4, 4, |a, b| half * (z1[(a, b)] + z2[(a, b)]));
    let p1 = spin::sigma_plus::<T>(1);
    let p2 = spin::sigma_plus::<T>(2);
    let sp = Matrix::from_fn(4, 4, |a, b| p1[(a, b)] + p2[(a, b)]);
    let sm = sp.transpose();
    let smsp = sm.matmul(&sp);
    let sz2 = sz.matmul(&sz);
    let s2 = Matrix::from_fn(4, 4, |a, b| smsp[(a, b)] + sz2[(a, b)] + sz[(a, b)]);
    let s2c = spin::to_coupled(&s2);
    let dim = basis_dimension(n_max);
    let mut full = Matrix::zeros(dim, dim);
    for n in 0..=n_max {
        for a in 0..4 {
            for b in 0..4 {
                full[(4 * n + a, 4 * n + b)] = s2c[(a, b)];
            }
        }
    }
    full
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decoupled_limit_is_diagonal() {
        let p = ModelParams::new(1.5, 2.0, 0.7, 0.0, 4).unwrap();
        let h = hamiltonian_matrix(&p);
        for i in 0..h.rows() {
            for j in 0..h.cols() {
                if i != j {
                    assert_eq!(h[(i, j)], 0.0);
                }
            }
            let k = BasisKet::from_index(i);
            let n = k.photon as f64;
            let expected = match k.spin {
                SpinLabel::UpUp => n * 2.0 + 1.5 + 0.7,
                SpinLabel::DownDown => n * 2.0 - 1.5 + 0.7,
                _ => n * 2.0 - 0.7,
            };
            assert_eq!(h[(i, i)], expected);
        }
    }

    #[test]
    fn w1_block_by_hand() {
        let p = ModelParams::resonant(1.0, 1.0, 1.0, 4).unwrap();
        let h = hamiltonian_matrix(&p);
        let a = BasisKet::new(0, SpinLabel::PsiPlus).index();
        let b = BasisKet::new(1, SpinLabel::DownDown).index();
        let block = h.submatrix(&[a, b]);
        assert_eq!(block, Matrix::from_rows(&[vec![-1.0, 1.0], vec![1.0, 1.0]]));
    }

    #[test]
    fn exactly_symmetric() {
        let p = ModelParams::new(3.3, 4.1, 4.0, 2.0, 12).unwrap();
        assert_eq!(hamiltonian_matrix(&p).asymmetry(), 0.0);
        assert_eq!(hamiltonian_matrix_product(&p).asymmetry(), 0.0);
    }

    #[test]
    fn singlet_chain_is_isolated() {
        let p = ModelParams::new(3.3, 4.1, 4.0, 2.0, 8).unwrap();
        let h = hamiltonian_matrix(&p);
        for n in 0..=8 {
            let i = BasisKet::new(n, SpinLabel::PsiMinus).index();
            for j in 0..h.cols() {
                if j != i {
                    assert_eq!(h[(i, j)], 0.0);
                }
            }
        }
    }

    #[test]
    fn product_and_coupled_agree() {
        let p = ModelParams::new(3.3, 4.1, -1.2, 0.9, 10).unwrap();
        let u = coupled_to_product::<f64>(10);
        let conj = u
            .transpose()
            .matmul(&hamiltonian_matrix_product(&p))
            .matmul(&u);
        assert!(conj.sub(&hamiltonian_matrix(&p)).max_abs() < 1e-13);
    }

    #[test]
    fn spin_squared_eigenvalues() {
        let s2 = total_spin_squared::<f64>(1);
        for i in 0..s2.rows() {
            let k = BasisKet::from_index(i);
            let expected = if k.spin.is_singlet() { 0.0 } else { 2.0 };
            assert!((s2[(i, i)] - expected).abs() < 1e-14);
        }
    }
}
