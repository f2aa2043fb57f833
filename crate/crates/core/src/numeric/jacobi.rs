//! Cyclic Jacobi diagonalization of dense real symmetric matrices.

use crate::linalg::{dot, Matrix};
use crate::{Error, Result, Scalar};

/// Relative off-diagonal tolerance used when callers have no preference.
pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Eigenpairs in ascending eigenvalue order; column `k` of `eigenvectors`
/// belongs to `eigenvalues[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition<T> {
    pub eigenvalues: Vec<T>,
    pub eigenvectors: Matrix<T>,
    pub sweeps: usize,
}

impl<T: Scalar> EigenDecomposition<T> {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn eigenvector(&self, k: usize) -> Vec<T> {
        self.eigenvectors.column(k)
    }

    /// ‖A·V − V·diag(E)‖_F.
    pub fn residual(&self, a: &Matrix<T>) -> T {
        let av = a.matmul(&self.eigenvectors);
        let mut acc = T::zero();
        for i in 0..av.rows() {
            for k in 0..av.cols() {
                let d = av[(i, k)] - self.eigenvectors[(i, k)] * self.eigenvalues[k];
                acc = acc + d * d;
            }
        }
        acc.sqrt()
    }

    /// max |VᵀV − I|.
    pub fn orthogonality_error(&self) -> T {
        let n = self.len();
        let cols: Vec<Vec<T>> = (0..n).map(|k| self.eigenvector(k)).collect();
        let mut worst = T::zero();
        for a in 0..n {
            for b in a..n {
                let target = if a == b { T::one() } else { T::zero() };
                worst = worst.max((dot(&cols[a], &cols[b]) - target).abs());
            }
        }
        worst
    }

    /// Rebuild V·diag(E)·Vᵀ.
    pub fn reconstruct(&self) -> Matrix<T> {
        let n = self.len();
        let v = &self.eigenvectors;
        Matrix::from_fn(v.rows(), v.rows(), |i, j| {
            (0..n)
                .map(|k| v[(i, k)] * self.eigenvalues[k] * v[(j, k)])
                .sum()
        })
    }
}

/// Diagonalize a real symmetric matrix. Sweeps continue until every
/// off-diagonal entry is at most `tol·‖A‖_F`; `tol` is clamped to a few
/// ulps of `T`.
pub fn eigensolve_symmetric<T: Scalar>(a: &Matrix<T>, tol: f64) -> Result<EigenDecomposition<T>> {
    eigensolve_symmetric_with(a, tol, MAX_SWEEPS)
}

pub fn eigensolve_symmetric_with<T: Scalar>(
    a: &Matrix<T>,
    tol: f64,
    max_sweeps: usize,
) -> Result<EigenDecomposition<T>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let scale = a.frobenius();
    let asym = a.asymmetry();
    if asym > T::epsilon() * T::lit(64.0) * scale.max(T::one()) {
        return Err(Error::NotSymmetric(asym.to_f64_lossy()));
    }

    let mut m = a.clone();
    let mut v = Matrix::identity(n);
    let threshold = T::clamp_tol(tol) * scale;
    let hundred = T::lit(100.0);
    let mut sweeps = 0;

    loop {
        let off = max_off_diagonal(&m);
        if off <= threshold {
            break;
        }
        if sweeps == max_sweeps {
            return Err(Error::NotConverged {
                sweeps,
                off: off.to_f64_lossy(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let app = m[(p, p)];
                let aqq = m[(q, q)];
                // negligible next to both diagonal entries
                let g = hundred * apq.abs();
                if g + app.abs() == app.abs() && g + aqq.abs() == aqq.abs() {
                    m[(p, q)] = T::zero();
                    m[(q, p)] = T::zero();
                    continue;
                }
                rotate(&mut m, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| {
        m[(x, x)]
            .partial_cmp(&m[(y, y)])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(x.cmp(&y))
    });
    let eigenvalues = order.iter().map(|&k| m[(k, k)]).collect();
    let eigenvectors = Matrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
        sweeps,
    })
}

fn max_off_diagonal<T: Scalar>(m: &Matrix<T>) -> T {
    let mut worst = T::zero();
    for i in 0..m.rows() {
        for j in (i + 1)..m.cols() {
            worst = worst.max(m[(i, j)].abs());
        }
    }
    worst
}

/// Annihilate m[p][q] with a plane rotation and accumulate it into `v`.
fn rotate<T: Scalar>(m: &mut Matrix<T>, v: &mut Matrix<T>, p: usize, q: usize) {
    let n = m.rows();
    let apq = m[(p, q)];
    let theta = (m[(q, q)] - m[(p, p)]) / (T::lit(2.0) * apq);
    let t = if theta.abs() > T::lit(1e150).min(T::max_value().sqrt()) {
        T::one() / (T::lit(2.0) * theta)
    } else {
        let sign = if theta < T::zero() {
            -T::one()
        } else {
            T::one()
        };
        sign / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;
    let tau = s / (T::one() + c);

    m[(p, p)] = m[(p, p)] - t * apq;
    m[(q, q)] = m[(q, q)] + t * apq;
    m[(p, q)] = T::zero();
    m[(q, p)] = T::zero();
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let g = m[(r, p)];
        let h = m[(r, q)];
        let rp = g - s * (h + g * tau);
        let rq = h + s * (g - h * tau);
        m[(r, p)] = rp;
        m[(p, r)] = rp;
        m[(r, q)] = rq;
        m[(q, r)] = rq;
    }
    for r in 0..n {
        let g = v[(r, p)];
        let h = v[(r, q)];
        v[(r, p)] = g - s * (h + g * tau);
        v[(r, q)] = h + s * (g - h * tau);
    }
}
