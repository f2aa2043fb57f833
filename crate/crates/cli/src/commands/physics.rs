use dressed::model::{device_to_model, DeviceParams, PhysicalConstants};
use dressed::transitions::{
    damping_ratio, golden_rule_ratio, rabi_splitting, BathModel, DampingOutcome, SpectralDensity,
};

use super::{echo_model, Ctx};
use crate::cli::{DampingArgs, DeviceArgs, ModelArgs};
use crate::config::{pick, RhoShape};
use crate::error::CliResult;
use crate::output::{Cell, Table};

pub fn rabi(ctx: &Ctx, a: &ModelArgs) -> CliResult<Table> {
    let p = ctx.model(a)?;
    let r = rabi_splitting(&p);
    let mut t = Table::new(
        "rabi",
        &["J", "g", "rabi_splitting_GHz", "rabi_splitting_MHz"],
    );
    echo_model(&mut t, &p);
    t.push(vec![p.j.into(), p.g.into(), r.into(), (r * 1e3).into()]);
    Ok(t)
}

fn density(shape: RhoShape, coeff: f64) -> SpectralDensity<f64> {
    match shape {
        RhoShape::Flat => SpectralDensity::Flat { rho0: coeff },
        RhoShape::Ohmic => SpectralDensity::Ohmic { eta: coeff },
    }
}

fn outcome_cells(o: DampingOutcome<f64>) -> (Cell, String) {
    match o {
        DampingOutcome::Ratio(v) => (v.into(), "ok".into()),
        DampingOutcome::Forbidden(r) => (Cell::Null, format!("forbidden:{}", r.name())),
    }
}

pub fn damping(ctx: &Ctx, a: &DampingArgs) -> CliResult<Table> {
    let p = ctx.model(&a.model)?;
    let b = &ctx.file.bath;
    let shape = pick(a.rho, b.rho, RhoShape::Flat);
    let bath = BathModel {
        g1: pick(a.g1, b.g1, 1.0),
        g2: pick(a.g2, b.g2, 0.0),
        rho1: density(shape, pick(a.rho1, b.rho1, 1.0)),
        rho2: density(shape, pick(a.rho2, b.rho2, 1.0)),
    };
    let omega_ref = pick(a.omega_ref, b.omega_ref, p.omega);

    let mut t = Table::new(
        "damping",
        &["formula", "omega1", "omega2", "ratio", "status"],
    );
    echo_model(&mut t, &p);
    t.meta("g1", bath.g1)
        .meta("g2", bath.g2)
        .meta("rho", shape_name(shape))
        .meta("rho1", coeff(&bath.rho1))
        .meta("rho2", coeff(&bath.rho2))
        .meta("omega_ref", omega_ref);

    let (out, w1, w2) = damping_ratio(&p, &bath, Some(omega_ref))?;
    let (ratio, status) = outcome_cells(out);
    t.push(vec![
        "closed_form".into(),
        w1.into(),
        w2.into(),
        ratio,
        status.into(),
    ]);

    match golden_rule_ratio(&p, &bath) {
        Ok(gr) => {
            let (ratio, status) = outcome_cells(gr.outcome);
            t.meta("golden_rule_gamma1", gr.gamma1)
                .meta("golden_rule_gamma2", gr.gamma2);
            t.push(vec![
                "golden_rule".into(),
                gr.omega1.into(),
                gr.omega2.into(),
                ratio,
                status.into(),
            ]);
        }
        Err(dressed::Error::Domain(msg)) => {
            t.push(vec![
                "golden_rule".into(),
                Cell::Null,
                Cell::Null,
                Cell::Null,
                format!("domain_error:{msg}").into(),
            ]);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(t)
}

fn shape_name(s: RhoShape) -> &'static str {
    match s {
        RhoShape::Flat => "flat",
        RhoShape::Ohmic => "ohmic",
    }
}

fn coeff(d: &SpectralDensity<f64>) -> f64 {
    match *d {
        SpectralDensity::Flat { rho0 } => rho0,
        SpectralDensity::Ohmic { eta } => eta,
    }
}

pub fn device(ctx: &Ctx, a: &DeviceArgs) -> CliResult<Table> {
    let d = &ctx.file.device;
    let dev = DeviceParams {
        c_m: pick(a.c_m, d.c_m, 100e-18),
        c_sigma: pick(a.c_sigma, d.c_sigma, 600e-18),
        c_g: pick(a.c_g, d.c_g, 20e-18),
        v_g: pick(a.v_g, d.v_g, 5e-3),
        e_j: pick(a.e_j, d.e_j, 5.0),
        loop_area: pick(a.loop_area, d.loop_area, 1e-12),
        distance: pick(a.distance, d.distance, 1e-6),
        length: pick(a.length, d.length, 0.01),
        inductance_per_length: pick(a.inductance_per_length, d.inductance_per_length, 4.1e-7),
        capacitance_per_length: pick(a.capacitance_per_length, d.capacitance_per_length, 1.6e-10),
        mode: pick(a.mode, d.mode, 1),
    };
    let mut k = PhysicalConstants::default();
    if let Some(phi0) = a.flux_quantum.or(d.flux_quantum) {
        k.flux_quantum = phi0;
    }
    let m = device_to_model(&dev, &k)?;

    let mut t = Table::new("device", &["quantity", "value", "unit"]);
    t.meta("C_m", dev.c_m)
        .meta("C_Sigma", dev.c_sigma)
        .meta("C_g", dev.c_g)
        .meta("V_g", dev.v_g)
        .meta("E_J", dev.e_j)
        .meta("S", dev.loop_area)
        .meta("d", dev.distance)
        .meta("L", dev.length)
        .meta("l", dev.inductance_per_length)
        .meta("c", dev.capacitance_per_length)
        .meta("mode", dev.mode as u64)
        .meta("flux_quantum", k.flux_quantum)
        .meta("units", "SI in, E/h in GHz out");
    let ratio = |x: f64| {
        if m.j != 0.0 {
            Cell::Num(x / m.j)
        } else {
            Cell::Null
        }
    };
    let rows: [(&str, Cell, &str); 8] = [
        ("J", m.j.into(), "GHz"),
        ("E_C", m.e_c.into(), "GHz"),
        ("gate_charge", m.gate_charge.into(), "1"),
        ("omega_a", m.omega_a.into(), "GHz"),
        ("omega", m.omega.into(), "GHz"),
        ("g", m.g.into(), "GHz"),
        ("xi", ratio(m.omega), "1"),
        ("g_over_J", ratio(m.g), "1"),
    ];
    for (q, v, u) in rows {
        t.push(vec![q.into(), v, u.into()]);
    }
    Ok(t)
}
