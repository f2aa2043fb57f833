use dressed::analytic::{
    classify_region, crossing_points, hq_phase, linspace, spectrum_sweep, LevelSelection,
};
use dressed::ModelParams64;

use super::{parse_branches, Ctx};
use crate::cli::{CrossingsArgs, PhaseArgs, SpectrumArgs};
use crate::config::{parse_levels, pick};
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Table};

pub fn spectrum(ctx: &Ctx, a: &SpectrumArgs) -> CliResult<Table> {
    let s = &ctx.file.sweep;
    let g = ctx.g_over_j(&a.grid)?;
    let (start, stop, count) = ctx.grid(&a.grid)?;
    let levels = pick(a.levels.clone(), s.levels.clone(), "0-2".into());
    let (min_n, max_n) = parse_levels(&levels)?;
    let branches = parse_branches(&pick(
        a.branches.clone(),
        s.branches.clone(),
        "s,0,+,-".into(),
    ))?;
    let grid = linspace(start, stop, count)?;
    let names: Vec<&str> = branches.iter().map(|b| b.symbol()).collect();
    let sweep = spectrum_sweep(
        g,
        &grid,
        &LevelSelection {
            min_n,
            max_n,
            branches,
        },
    )?;

    let mut t = Table::new("spectrum", &["xi", "branch", "n", "E_over_J"]);
    t.meta("g_over_J", g)
        .meta("xi_start", start)
        .meta("xi_stop", stop)
        .meta("xi_count", count)
        .meta("levels", format!("{min_n}-{max_n}"))
        .meta("branches", names.join(" "))
        .meta("line", "omega = omega_a = xi*J")
        .meta("reference_rows", "(0,-) (0,0)");
    for (i, &xi) in sweep.xi_grid.iter().enumerate() {
        for row in &sweep.rows {
            t.push(vec![
                xi.into(),
                row.branch.symbol().into(),
                row.n.into(),
                row.values[i].into(),
            ]);
        }
    }
    Ok(t)
}

pub fn crossings(ctx: &Ctx, a: &CrossingsArgs) -> CliResult<Table> {
    let s = &ctx.file.sweep;
    let list = if a.g_over_j.is_empty() {
        s.g_over_j_list
            .clone()
            .unwrap_or_else(|| vec![0.7, 0.5, 0.16])
    } else {
        a.g_over_j.clone()
    };
    if list.is_empty() {
        return Err(CliError::usage("no g/J values given"));
    }
    let levels = pick(a.levels.clone(), s.levels.clone(), "0-18".into());
    let (lo, hi) = parse_levels(&levels)?;

    let mut t = Table::new("crossings", &["g_over_J", "n", "xi_star", "E_over_J"]);
    t.meta("g_over_J", list.as_slice())
        .meta("levels", format!("{lo}-{hi}"))
        .meta(
            "xi0",
            list.iter().map(|g| g * g).collect::<Vec<_>>().as_slice(),
        );
    for &g in &list {
        for c in crossing_points(g, lo..=hi)? {
            t.push(vec![
                g.into(),
                c.n.into(),
                c.xi_star.into(),
                c.energy_over_j.into(),
            ]);
        }
    }
    Ok(t)
}

pub fn phase(ctx: &Ctx, a: &PhaseArgs) -> CliResult<Table> {
    let g = ctx.g_over_j(&a.grid)?;
    let (start, stop, count) = ctx.grid(&a.grid)?;
    let p = ModelParams64::scaled(1.0, g, ctx.n_max(40))?;
    let grid = linspace(start, stop, count)?;

    let mut t = Table::new("phase", &["xi", "hq_phase", "region", "ground_state"]);
    let first = classify_region(grid[0], &p)?;
    t.meta("g_over_J", g)
        .meta("n_max", p.n_max)
        .meta("xi0", first.xi0)
        .meta("xi1", first.xi1)
        .meta("xi_start", start)
        .meta("xi_stop", stop)
        .meta("xi_count", count);
    for &xi in &grid {
        let r = classify_region(xi, &p)?;
        t.push(vec![
            xi.into(),
            hq_phase(xi).name().into(),
            r.region.name().into(),
            Cell::from(r.ground.name()),
        ]);
    }
    Ok(t)
}
