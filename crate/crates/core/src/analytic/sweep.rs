use rayon::prelude::*;
use serde::Serialize;

use super::levels::level_energy;
use super::Branch;
use crate::model::ModelParams;
use crate::{Error, Result, Scalar};

/// Which levels a sweep tabulates: every n in `min_n..=max_n` for each branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSelection {
    pub min_n: usize,
    pub max_n: usize,
    pub branches: Vec<Branch>,
}

impl LevelSelection {
    pub fn all(max_n: usize) -> Self {
        Self {
            min_n: 0,
            max_n,
            branches: Branch::ALL.to_vec(),
        }
    }

    /// (n, branch) pairs in table order, always including the (0, −) and
    /// (0, 0) reference rows.
    fn pairs(&self) -> Vec<(usize, Branch)> {
        let mut v: Vec<(usize, Branch)> = (self.min_n..=self.max_n)
            .flat_map(|n| self.branches.iter().map(move |&b| (n, b)))
            .chain([(0, Branch::Minus), (0, Branch::Zero)])
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRow<T> {
    pub n: usize,
    pub branch: Branch,
    /// E/J at each grid point.
    pub values: Vec<T>,
}

/// Rescaled energies E/J over a ξ = ω/J grid on the resonant line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumTable<T> {
    pub xi_grid: Vec<T>,
    pub rows: Vec<SpectrumRow<T>>,
    pub g_over_j: T,
    pub resonant: bool,
}

impl<T: Scalar> SpectrumTable<T> {
    pub fn row(&self, n: usize, branch: Branch) -> Option<&SpectrumRow<T>> {
        self.rows.iter().find(|r| r.n == n && r.branch == branch)
    }
}

/// `count` evenly spaced points from `start` to `stop` inclusive.
pub fn linspace<T: Scalar>(start: T, stop: T, count: usize) -> Result<Vec<T>> {
    if count < 2 {
        return Err(Error::Argument(format!(
            "grid needs at least 2 points, got {count}"
        )));
    }
    let steps = T::from_usize_lossy(count - 1);
    Ok((0..count)
        .map(|i| start + (stop - start) * T::from_usize_lossy(i) / steps)
        .collect())
}

/// Tabulate the selected levels with J = 1, g = g/J and ω = ω_a = ξ.
/// Grid points are evaluated in parallel; output order follows the grid.
pub fn spectrum_sweep<T: Scalar>(
    g_over_j: T,
    xi_grid: &[T],
    selection: &LevelSelection,
) -> Result<SpectrumTable<T>> {
    if selection.min_n > selection.max_n {
        return Err(Error::Argument(format!(
            "empty level range {}..={}",
            selection.min_n, selection.max_n
        )));
    }
    if xi_grid.is_empty() {
        return Err(Error::Argument("empty xi grid".into()));
    }
    if xi_grid.iter().any(|&x| !(x > T::zero()) || !x.is_finite()) {
        return Err(Error::Argument(
            "xi grid must be positive and finite".into(),
        ));
    }
    if xi_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Argument(
            "xi grid must be strictly increasing".into(),
        ));
    }
    let pairs = selection.pairs();
    // W⁽ⁿ⁺¹⁾ needs photon number n + 1
    let n_max = (selection.max_n + 1).max(2);

    let columns: Vec<Vec<T>> = xi_grid
        .par_iter()
        .map(|&xi| {
            let p = ModelParams::scaled(xi, g_over_j, n_max)?;
            pairs
                .iter()
                .map(|&(n, b)| level_energy(&p, n, b))
                .collect::<Result<Vec<T>>>()
        })
        .collect::<Result<_>>()?;

    let rows = pairs
        .iter()
        .enumerate()
        .map(|(k, &(n, branch))| SpectrumRow {
            n,
            branch,
            values: columns.iter().map(|c| c[k]).collect(),
        })
        .collect();
    Ok(SpectrumTable {
        xi_grid: xi_grid.to_vec(),
        rows,
        g_over_j,
        resonant: true,
    })
}
