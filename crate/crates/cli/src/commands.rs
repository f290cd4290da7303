use nalgebra::DMatrix;
use nmode_squeeze::fock::{self, FockSpace};
use nmode_squeeze::gaussian::{self, GaussianWigner, PhasePoint, VariancePair};
use nmode_squeeze::normalform::{self, NormalOrderedForm, TwoPhotonState};
use nmode_squeeze::verify::{self, Tolerances, DEFAULT_SEED};
use nmode_squeeze::{CouplingMatrix, Error, SqueezeKernel};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{Command, Quadrature, RunConfig};
use crate::output::{Cell, Output, Table};

/// Largest number of phase points a single `wigner` run evaluates.
pub const MAX_POINTS: usize = 1_000_000;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Resource(String),
    Numeric(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => Failure::Resource(e.to_string()),
            Error::UnsupportedModeCount { .. }
            | Error::ParameterOutOfRange { .. }
            | Error::Shape { .. }
            | Error::ContractViolation(_) => Failure::Usage(e.to_string()),
            Error::NumericFailure(_) | Error::Truncation { .. } | Error::InvariantViolation(_) => {
                Failure::Numeric(e.to_string())
            }
        }
    }
}

type Outcome = Result<Output, Failure>;

fn json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    m.row_iter().map(|r| r.iter().copied().collect()).collect()
}

fn push_matrix(t: &mut Table, name: &str, m: &DMatrix<f64>) {
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            t.push(vec![name.into(), i.into(), j.into(), m[(i, j)].into()]);
        }
    }
}

fn push_scalar(t: &mut Table, name: &str, v: f64) {
    t.push(vec![name.into(), Cell::Empty, Cell::Empty, v.into()]);
}

fn long_table() -> Table {
    Table::new(&["quantity", "row", "col", "value"])
}

pub fn run(cfg: &RunConfig) -> Outcome {
    cfg.validate().map_err(Failure::Usage)?;
    match cfg.command {
        Command::Coupling => coupling(cfg),
        Command::Variances => variances(cfg),
        Command::NormalForm => normal_form(cfg),
        Command::State => state(cfg),
        Command::Wigner => wigner(cfg),
        Command::Baseline => baseline(cfg),
        Command::Verify => run_verify(cfg),
    }
}

fn kernel(cfg: &RunConfig) -> Result<SqueezeKernel, Failure> {
    let n = cfg.require_n().map_err(Failure::Usage)?;
    let lambda = cfg.require_lambda().map_err(Failure::Usage)?;
    Ok(SqueezeKernel::cyclic(n, lambda)?)
}

fn coupling(cfg: &RunConfig) -> Outcome {
    let k = kernel(cfg)?;
    let a: &CouplingMatrix = &k.coupling;
    let (eigenvalues, _) = a.spectrum();
    let a_f = a.to_f64();
    let mut table = long_table();
    push_matrix(&mut table, "a", &a_f);
    for (i, v) in eigenvalues.iter().enumerate() {
        table.push(vec!["eigenvalue".into(), i.into(), Cell::Empty, (*v).into()]);
    }
    push_matrix(&mut table, "lambda_matrix", &k.lambda_mat);
    push_matrix(&mut table, "gram", &k.gram);
    push_matrix(&mut table, "gram_inverse", &k.gram_inv);
    let entries: Vec<Vec<u32>> = a.entries().row_iter().map(|r| r.iter().copied().collect()).collect();
    Ok(Output {
        results: json!({
            "a": entries,
            "eigenvalues": eigenvalues.iter().copied().collect::<Vec<_>>(),
            "lambda_matrix": rows(&k.lambda_mat),
            "gram": rows(&k.gram),
            "gram_inverse": rows(&k.gram_inv),
            "det_lambda": k.det_lambda,
        }),
        checks: Vec::new(),
        table,
    })
}

fn variance_json(v: &VariancePair) -> Value {
    json!({ "var_x1": v.var_x1, "var_x2": v.var_x2, "product": v.product() })
}

fn push_variances(t: &mut Table, method: &str, v: &VariancePair) {
    t.push(vec![method.into(), v.var_x1.into(), v.var_x2.into(), v.product().into()]);
}

fn variances(cfg: &RunConfig) -> Outcome {
    let k = kernel(cfg)?;
    let sum = gaussian::variances_matrix_sum(&k);
    let closed = gaussian::variances_closed(k.lambda)?;
    let mut table = Table::new(&["method", "var_x1", "var_x2", "product"]);
    push_variances(&mut table, "matrix_sum", &sum);
    push_variances(&mut table, "closed_form", &closed);
    Ok(Output {
        results: json!({ "matrix_sum": variance_json(&sum), "closed_form": variance_json(&closed) }),
        checks: Vec::new(),
        table,
    })
}

fn normal_form(cfg: &RunConfig) -> Outcome {
    let form = NormalOrderedForm::from_kernel(&kernel(cfg)?)?;
    let mut table = long_table();
    push_scalar(&mut table, "prefactor", form.prefactor);
    push_matrix(&mut table, "creation", &form.cre_mat);
    push_matrix(&mut table, "cross", &form.cross_mat);
    push_matrix(&mut table, "annihilation", &form.ann_mat);
    Ok(Output {
        results: json!({
            "prefactor": form.prefactor,
            "creation": rows(&form.cre_mat),
            "cross": rows(&form.cross_mat),
            "annihilation": rows(&form.ann_mat),
        }),
        checks: Vec::new(),
        table,
    })
}

fn state_json(st: &TwoPhotonState) -> Value {
    json!({ "norm": st.norm, "two_photon": rows(&st.f) })
}

fn state(cfg: &RunConfig) -> Outcome {
    let st = normalform::squeezed_vacuum(&kernel(cfg)?)?;
    let mut table = long_table();
    push_scalar(&mut table, "norm", st.norm);
    push_matrix(&mut table, "two_photon", &st.f);
    let mut results = state_json(&st);
    if let Some(cutoff) = cfg.cutoff {
        let space = FockSpace::new(st.n, cutoff)?;
        let psi = fock::two_photon_expand(&st, &space)?;
        let mut amps = Vec::new();
        for (idx, a) in psi.amps.iter().enumerate() {
            if a.norm() == 0.0 {
                continue;
            }
            let occ = space.occupations(idx);
            let label = occ.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ");
            table.push(vec![format!("amplitude_re[{label}]").into(), Cell::Empty, Cell::Empty, a.re.into()]);
            table.push(vec![format!("amplitude_im[{label}]").into(), Cell::Empty, Cell::Empty, a.im.into()]);
            amps.push(json!({ "occupations": occ, "re": a.re, "im": a.im }));
        }
        push_scalar(&mut table, "tail_mass", psi.tail_mass());
        results["cutoff"] = json!(cutoff);
        results["tail_mass"] = json!(psi.tail_mass());
        results["amplitudes"] = Value::Array(amps);
    }
    Ok(Output {
        results,
        checks: Vec::new(),
        table,
    })
}

fn phase_points(cfg: &RunConfig, n: usize) -> Result<Vec<PhasePoint>, Failure> {
    let mut points = Vec::new();
    for spec in &cfg.points {
        points.push(PhasePoint::new(spec.q.clone(), spec.p.clone())?);
    }
    if !cfg.grid.is_empty() {
        let total = cfg.grid.iter().try_fold(1usize, |acc, g| acc.checked_mul(g.steps));
        match total {
            Some(t) if t + points.len() <= MAX_POINTS => {}
            _ => {
                return Err(Failure::Resource(format!(
                    "grid exceeds {MAX_POINTS} points"
                )))
            }
        }
        let axes: Vec<Vec<f64>> = cfg.grid.iter().map(|g| g.nodes()).collect();
        let mut idx = vec![0usize; axes.len()];
        'grid: loop {
            let mut q = vec![0.0; n];
            let mut p = vec![0.0; n];
            for (g, (&k, nodes)) in cfg.grid.iter().zip(idx.iter().zip(&axes)) {
                let slot = match g.axis.quadrature {
                    Quadrature::Q => &mut q,
                    Quadrature::P => &mut p,
                };
                slot[g.axis.mode] = nodes[k];
            }
            points.push(PhasePoint::new(q, p)?);
            for d in (0..idx.len()).rev() {
                idx[d] += 1;
                if idx[d] < axes[d].len() {
                    continue 'grid;
                }
                idx[d] = 0;
            }
            break;
        }
    }
    if points.is_empty() {
        points.push(PhasePoint::origin(n)?);
    }
    Ok(points)
}

fn wigner(cfg: &RunConfig) -> Outcome {
    let k = kernel(cfg)?;
    let n = k.n();
    let w = GaussianWigner::from_kernel(&k);
    let points = phase_points(cfg, n)?;
    let mut header: Vec<String> = (1..=n).map(|i| format!("q{i}")).collect();
    header.extend((1..=n).map(|i| format!("p{i}")));
    header.extend(["generic", "log_generic", "closed"].map(String::from));
    let mut table = Table {
        header,
        rows: Vec::new(),
    };
    let mut values = Vec::with_capacity(points.len());
    for pt in &points {
        let sample = w.eval(pt)?;
        let alpha = pt.to_alpha();
        let closed = match n {
            3 => Some(normalform::wigner3_closed(k.lambda, &alpha)?),
            4 => Some(normalform::wigner4_closed(k.lambda, &alpha)?),
            _ => None,
        };
        let mut row: Vec<Cell> = pt.q().iter().chain(pt.p().iter()).map(|&x| x.into()).collect();
        row.extend([sample.value.into(), sample.log_value.into(), closed.into()]);
        table.push(row);
        let mut entry = json!({
            "q": pt.q().iter().copied().collect::<Vec<_>>(),
            "p": pt.p().iter().copied().collect::<Vec<_>>(),
            "generic": sample.value,
            "log_generic": sample.log_value,
            "underflow": sample.underflow,
        });
        if let Some(c) = closed {
            entry["closed"] = json!(c);
        }
        values.push(entry);
    }
    Ok(Output {
        results: json!({ "points": values }),
        checks: Vec::new(),
        table,
    })
}

fn baseline(cfg: &RunConfig) -> Outcome {
    let lambda = cfg.require_lambda().map_err(Failure::Usage)?;
    let standard = normalform::baseline_two_mode(lambda)?;
    let enhanced = normalform::squeezed_vacuum(&SqueezeKernel::cyclic(2, lambda)?)?;
    let reference = VariancePair {
        var_x1: (-2.0 * lambda).exp() / 4.0,
        var_x2: (2.0 * lambda).exp() / 4.0,
    };
    let from_state = |st: &TwoPhotonState| -> Result<VariancePair, Failure> {
        let (qq, pp) = st.quadrature_covariances()?;
        let scale = 2.0 * st.n as f64;
        Ok(VariancePair {
            var_x1: qq.sum() / scale,
            var_x2: pp.sum() / scale,
        })
    };
    let standard_var = from_state(&standard)?;
    let enhanced_var = from_state(&enhanced)?;
    let mut table = long_table();
    for (prefix, st, var) in [("standard", &standard, &standard_var), ("enhanced", &enhanced, &enhanced_var)] {
        push_scalar(&mut table, &format!("{prefix}_norm"), st.norm);
        push_matrix(&mut table, &format!("{prefix}_two_photon"), &st.f);
        push_scalar(&mut table, &format!("{prefix}_var_x1"), var.var_x1);
        push_scalar(&mut table, &format!("{prefix}_var_x2"), var.var_x2);
    }
    push_scalar(&mut table, "reference_var_x1", reference.var_x1);
    push_scalar(&mut table, "reference_var_x2", reference.var_x2);
    let with_var = |st: &TwoPhotonState, v: &VariancePair| {
        let mut s = state_json(st);
        s["variances"] = variance_json(v);
        s
    };
    Ok(Output {
        results: json!({
            "standard": with_var(&standard, &standard_var),
            "enhanced": with_var(&enhanced, &enhanced_var),
            "reference_variances": variance_json(&reference),
        }),
        checks: Vec::new(),
        table,
    })
}

fn run_verify(cfg: &RunConfig) -> Outcome {
    let mut tol = Tolerances::default();
    for (name, value) in &cfg.tolerance {
        tol.set(name, *value)?;
    }
    let report = verify::run(cfg.seed.unwrap_or(DEFAULT_SEED), &tol);
    let mut table = Table::new(&[
        "name", "criterion", "paper_ref", "inputs", "relation", "expected", "actual", "tol", "pass",
        "status", "tail_mass", "note",
    ]);
    let mut checks = Vec::new();
    for c in &report.checks {
        table.push(vec![
            c.name.into(),
            usize::from(c.criterion).into(),
            c.paper_ref.into(),
            c.inputs.clone().into(),
            json(&c.relation).as_str().unwrap_or_default().into(),
            c.expected.into(),
            c.actual.into(),
            c.tol.into(),
            c.pass().to_string().into(),
            json(&c.status).as_str().unwrap_or_default().into(),
            c.tail_mass.into(),
            c.note.clone().into(),
        ]);
        let mut v = json(c);
        v["pass"] = json!(c.pass());
        checks.push(v);
    }
    Ok(Output {
        results: json!({
            "overall": report.overall(),
            "seed": report.seed,
            "failed": report.failed(),
            "skipped": report.skipped(),
            "tolerances": json(&report.tolerances),
            "probe": json(&report.probe),
        }),
        checks,
        table,
    })
}
