//! Direct eigensolvers for the 2×2 and tridiagonal 3×3 blocks.

use crate::Scalar;

/// Eigensystem of [[a, b], [b, d]].
///
/// Returns `(lower, upper, theta)` with mixing angle θ = atan2(b, (d−a)/2);
/// the eigenvectors are (cos θ/2, −sin θ/2) for `lower` and
/// (sin θ/2, cos θ/2) for `upper`.
pub fn eigen2<T: Scalar>(a: T, b: T, d: T) -> (T, T, T) {
    let two = T::lit(2.0);
    let mean = (a + d) / two;
    let half_gap = (d - a) / two;
    let r = half_gap.hypot(b);
    (mean - r, mean + r, b.atan2(half_gap))
}

/// Ascending eigenvalues and unit eigenvectors of the symmetric tridiagonal
/// matrix with diagonal `diag` and off-diagonal `off`.
///
/// Eigenvalues come from Sturm-sequence bisection; eigenvectors from cross
/// products of rows of (A − λI), with the middle one completed as the cross
/// product of the outer two.
pub fn tridiag3_eigen<T: Scalar>(diag: [T; 3], off: [T; 2]) -> ([T; 3], [[T; 3]; 3]) {
    if off[0] == T::zero() && off[1] == T::zero() {
        let mut order = [0usize, 1, 2];
        order.sort_by(|&x, &y| diag[x].partial_cmp(&diag[y]).unwrap().then(x.cmp(&y)));
        let mut vals = [T::zero(); 3];
        let mut vecs = [[T::zero(); 3]; 3];
        for (k, &i) in order.iter().enumerate() {
            vals[k] = diag[i];
            vecs[k][i] = T::one();
        }
        return (vals, vecs);
    }

    let radius = off[0].abs() + off[1].abs();
    let lo = diag.iter().fold(T::infinity(), |m, &x| m.min(x)) - radius;
    let hi = diag.iter().fold(T::neg_infinity(), |m, &x| m.max(x)) + radius;
    let vals = [
        bisect_eigenvalue(diag, off, 0, lo, hi),
        bisect_eigenvalue(diag, off, 1, lo, hi),
        bisect_eigenvalue(diag, off, 2, lo, hi),
    ];

    let low = null_vector(diag, off, vals[0]);
    let high = null_vector(diag, off, vals[2]);
    let mid = normalize(cross(high, low));
    (vals, [low, mid, high])
}

/// Number of eigenvalues strictly below `x`.
fn sturm_count<T: Scalar>(diag: [T; 3], off: [T; 2], x: T) -> usize {
    let tiny = T::min_positive_value();
    let mut count = 0;
    let mut pivot = diag[0] - x;
    for k in 0..3 {
        if k > 0 {
            let prev = if pivot == T::zero() { tiny } else { pivot };
            pivot = diag[k] - x - off[k - 1] * off[k - 1] / prev;
        }
        if pivot < T::zero() {
            count += 1;
        }
    }
    count
}

fn bisect_eigenvalue<T: Scalar>(diag: [T; 3], off: [T; 2], k: usize, lo: T, hi: T) -> T {
    let (mut a, mut b) = (lo, hi);
    let two = T::lit(2.0);
    for _ in 0..256 {
        let mid = (a + b) / two;
        if mid <= a || mid >= b {
            break;
        }
        if sturm_count(diag, off, mid) > k {
            b = mid;
        } else {
            a = mid;
        }
    }
    (a + b) / two
}

fn null_vector<T: Scalar>(diag: [T; 3], off: [T; 2], lambda: T) -> [T; 3] {
    let r0 = [diag[0] - lambda, off[0], T::zero()];
    let r1 = [off[0], diag[1] - lambda, off[1]];
    let r2 = [T::zero(), off[1], diag[2] - lambda];
    let candidates = [cross(r0, r1), cross(r0, r2), cross(r1, r2)];
    let best = candidates
        .iter()
        .copied()
        .max_by(|x, y| norm3(*x).partial_cmp(&norm3(*y)).unwrap())
        .unwrap();
    normalize(best)
}

fn cross<T: Scalar>(a: [T; 3], b: [T; 3]) -> [T; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm3<T: Scalar>(a: [T; 3]) -> T {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}

fn normalize<T: Scalar>(a: [T; 3]) -> [T; 3] {
    let n = norm3(a);
    [a[0] / n, a[1] / n, a[2] / n]
}
