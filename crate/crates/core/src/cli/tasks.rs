use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::config::{RunConfig, Task};
use super::report::{formula_table, NumericCheck, TaskOutput};
use super::CliError;
use crate::catalog::{
    constraint_residual, on_shell_residual, random_events, random_jets, AnalyticSolution, DualityRotation, FieldSample,
    SolutionKind, SolutionSpec,
};
use crate::minkowski::MetricConvention;
use crate::noether::verify::form_status;
use crate::noether::{identity_suite, Coefficients, ZilchForm};
use crate::numeric::{
    contraction_decomposition, divergence_residuals_analytic, divergence_residual_grid, divergence_residual_sample,
    eval_decomposition, eval_zilch, eval_zilch_equivalent, modification_term, optical_chirality, write_convergence_csv,
    write_rank3_csv, zi0j_rewritten, zilch_scale, DecompositionVariant, GridSpec, NumericError,
};
use crate::ring::q;

/// Directory name for a convention, safe on every file system.
pub fn convention_dir(conv: &MetricConvention) -> String {
    let sig = match conv.g(0) {
        1 => "mostly-minus",
        _ => "mostly-plus",
    };
    if conv.epsilon0123 == 1 {
        sig.to_string()
    } else {
        format!("{sig}-eps-minus")
    }
}

pub struct Context<'a> {
    pub cfg: &'a RunConfig,
    pub conv: MetricConvention,
}

struct Solution<'a> {
    name: String,
    spec: &'a SolutionSpec,
    sol: AnalyticSolution,
    events: Vec<[f64; 4]>,
}

impl Context<'_> {
    /// Built solutions with their seeded events; entry `i` draws from
    /// `seed + i`, so adding a solution does not move the others' events.
    fn solutions(&self) -> Result<Vec<Solution<'_>>, CliError> {
        let names = self.cfg.solution_names();
        let mut out = Vec::with_capacity(names.len());
        for (i, (spec, name)) in self.cfg.solutions.iter().zip(names).enumerate() {
            let sol = spec.build(&self.conv).map_err(|e| CliError::Config(e.to_string()))?;
            let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed.wrapping_add(i as u64));
            let events = random_events(&mut rng, self.cfg.events, sol.omega);
            out.push(Solution { name, spec, sol, events });
        }
        Ok(out)
    }

    pub fn run(&self, task: Task) -> Result<TaskOutput, CliError> {
        log::info!("{} under {}", task.name(), self.conv);
        match task {
            Task::VerifyIdentities => Ok(self.verify()),
            Task::EvalZilch => self.eval_zilch(),
            Task::Decompose => self.decompose(),
            Task::Divergence => self.divergence(),
            Task::Convergence => self.convergence(),
        }
    }

    fn coefficients(&self) -> Coefficients {
        match self.cfg.mutate {
            Some(m) => m.apply(Coefficients::default()),
            None => Coefficients::default(),
        }
    }

    fn verify(&self) -> TaskOutput {
        let identities = identity_suite(&self.conv, &self.coefficients());
        let mut out = TaskOutput::new(Task::VerifyIdentities);
        out.formula_table = formula_table(&identities);
        out.form_status = form_status(&self.conv);
        out.identities = identities;
        out
    }

    fn check(&self, out: &mut TaskOutput, solution: &str, check: impl Into<String>, value: f64, at_most: f64) {
        out.numeric.push(NumericCheck::at_most(out.task, solution, check, value, at_most));
    }

    fn samples(s: &Solution<'_>) -> Vec<FieldSample<f64>> {
        s.events.par_iter().map(|&x| s.sol.sample(x)).collect()
    }

    fn eval_zilch(&self) -> Result<TaskOutput, CliError> {
        let conv = self.conv;
        let mut out = TaskOutput::new(Task::EvalZilch);
        let rotations = [q(1, 1), q(2, 1), q(1, 3)].map(DualityRotation::Parameter);
        for s in self.solutions()? {
            let samples = Self::samples(&s);
            let worst = |f: &(dyn Fn(&FieldSample<f64>) -> f64 + Sync)| samples.par_iter().map(f).reduce(|| 0.0, f64::max);
            self.check(&mut out, &s.name, "constraint G = *F", worst(&|x| constraint_residual(x, &conv)), 1e-13);
            self.check(&mut out, &s.name, "field equations M = N = 0", worst(&|x| on_shell_residual(x, &conv)), 1e-12);

            let reference: Vec<_> = samples.par_iter().map(|x| eval_zilch(x, ZilchForm::Kibble1, &conv)).collect::<Result<_, _>>()?;
            let scale = samples.par_iter().map(zilch_scale).reduce(|| 0.0, f64::max).max(f64::MIN_POSITIVE);
            let per_sample = |f: &(dyn Fn(usize) -> Result<f64, NumericError> + Sync)| -> Result<f64, NumericError> {
                let v: Vec<f64> = (0..samples.len()).into_par_iter().map(f).collect::<Result<_, _>>()?;
                Ok(v.into_iter().fold(0.0, f64::max) / scale)
            };
            for &form in &self.cfg.forms {
                let d = per_sample(&|i| Ok(eval_zilch_equivalent(&samples[i], form, &conv)?.max_abs_diff(&reference[i])))?;
                self.check(&mut out, &s.name, format!("{} agrees with kibble-1", form.name()), d, 1e-11);
                let rot = per_sample(&|i| {
                    let z = eval_zilch(&samples[i], form, &conv)?;
                    let mut m: f64 = 0.0;
                    for r in &rotations {
                        m = m.max(eval_zilch(&r.apply(&samples[i]), form, &conv)?.max_abs_diff(&z));
                    }
                    Ok(m)
                })?;
                self.check(&mut out, &s.name, format!("{} duality invariant, t in {{1, 2, 1/3}}", form.name()), rot, 1e-12);
                if matches!(form, ZilchForm::Kibble1 | ZilchForm::Kibble2 | ZilchForm::Kibble3) {
                    let asym = per_sample(&|i| {
                        let z = eval_zilch(&samples[i], form, &conv)?;
                        let tr = z.trace_first_pair(&conv).iter().fold(0.0f64, |m, x| m.max(x.abs()));
                        let mut m = tr;
                        for a in 0..4 {
                            for b in 0..4 {
                                for c in 0..4 {
                                    m = m.max((z.t[a][b][c] - z.t[b][a][c]).abs());
                                }
                            }
                        }
                        Ok(m)
                    })?;
                    self.check(&mut out, &s.name, format!("{} symmetric and traceless", form.name()), asym, 1e-12);
                }
            }
            let modification = per_sample(&|i| Ok(modification_term(&samples[i], &conv)?.max_abs()))?;
            self.check(&mut out, &s.name, "modification term vanishes", modification, 1e-11);

            for &form in &self.cfg.csv_forms {
                let rows: Vec<_> = samples
                    .par_iter()
                    .map(|x| eval_zilch(x, form, &conv).map(|z| (x.event, z)))
                    .collect::<Result<_, _>>()?;
                let mut buf = Vec::new();
                write_rank3_csv(&mut buf, &rows).map_err(|e| CliError::Io(e.to_string()))?;
                out.files.push((format!("eval-zilch/{}/{}-{}.csv", convention_dir(&conv), s.name, form.name()), buf));
            }
        }
        Ok(out)
    }

    fn decompose(&self) -> Result<TaskOutput, CliError> {
        let conv = self.conv;
        let mut out = TaskOutput::new(Task::Decompose);
        for s in self.solutions()? {
            let samples = Self::samples(&s);
            let rows: Vec<DecomposeRow> = samples
                .par_iter()
                .map(|x| -> Result<DecomposeRow, NumericError> {
                    let c = contraction_decomposition(x, &conv)?;
                    let off = eval_decomposition(x, &conv, DecompositionVariant::OffShell)?;
                    let on = eval_decomposition(x, &conv, DecompositionVariant::OnShellForm)?;
                    let rw = zi0j_rewritten(x, &conv)?;
                    let mut zi0j_forms: f64 = 0.0;
                    for i in 0..3 {
                        for j in 0..3 {
                            zi0j_forms = zi0j_forms.max((rw[i][j] - off.zi0j[i][j]).abs());
                        }
                    }
                    Ok(DecomposeRow {
                        event: x.event,
                        zi0j_forms,
                        scale: zilch_scale(x),
                        contraction_vs_formula: c.max_abs_diff(&off),
                        off_vs_on: off.max_abs_diff(&on),
                        chirality: optical_chirality(x, &conv)?,
                        z000: c.z000,
                        z000_on_shell: on.z000,
                    })
                })
                .collect::<Result<_, _>>()?;
            let scale = rows.iter().map(|r| r.scale).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
            let worst = |f: fn(&DecomposeRow) -> f64| rows.iter().map(f).fold(0.0, f64::max);
            self.check(&mut out, &s.name, "contraction vs formula", worst(|r| r.contraction_vs_formula) / scale, 1e-11);
            self.check(&mut out, &s.name, "off-shell vs on-shell formulas", worst(|r| r.off_vs_on) / scale, 1e-10);
            self.check(&mut out, &s.name, "both Z_i0j expressions agree", worst(|r| r.zi0j_forms) / scale, 1e-11);
            let sign = conv.zilch_sign();
            let z000_vs_chirality = rows.iter().map(|r| (r.z000 + sign * r.chirality).abs()).fold(0.0, f64::max);
            self.check(&mut out, &s.name, "Z_000 vs optical chirality", z000_vs_chirality / scale, 1e-12);
            let (a, w) = (s.spec.amplitude, s.spec.omega);
            let natural = a * a * w * w * w;
            match s.spec.kind {
                SolutionKind::CircularPlaneWave => {
                    let want = 2.0 * s.spec.helicity as f64 * natural;
                    let d = rows.iter().map(|r| (r.chirality - want).abs()).fold(0.0, f64::max);
                    self.check(&mut out, &s.name, "chirality equals 2 sigma a^2 omega^3", d / natural, 1e-12);
                }
                SolutionKind::LinearPlaneWave => {
                    let c = rows.iter().map(|r| r.chirality.abs()).fold(0.0, f64::max);
                    self.check(&mut out, &s.name, "linear polarization carries no chirality", c / natural.max(f64::MIN_POSITIVE), 1e-12);
                }
                _ => {}
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| CliError::Io(e.to_string());
            w.write_record(["t", "x", "y", "z", "chirality", "z000", "z000_on_shell"]).map_err(io)?;
            for r in &rows {
                let mut rec: Vec<String> = r.event.iter().map(|v| format!("{v:e}")).collect();
                rec.extend([r.chirality, r.z000, r.z000_on_shell].map(|v| format!("{v:e}")));
                w.write_record(&rec).map_err(io)?;
            }
            let buf = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
            out.files.push((format!("decompose/{}/{}.csv", convention_dir(&conv), s.name), buf));
        }
        Ok(out)
    }

    fn divergence(&self) -> Result<TaskOutput, CliError> {
        let conv = self.conv;
        let mut out = TaskOutput::new(Task::Divergence);
        for s in self.solutions()? {
            let residuals = divergence_residuals_analytic(&s.sol, &self.cfg.forms, &s.events)?;
            for (&form, r) in self.cfg.forms.iter().zip(residuals) {
                self.check(&mut out, &s.name, format!("{} divergence", form.name()), r, 1e-10);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed ^ 0x9e37_79b9);
        let jets: Vec<_> = (0..10).map(|_| random_jets(&mut rng, [0.0; 4])).collect();
        for &form in &self.cfg.forms {
            let least = jets
                .iter()
                .map(|j| divergence_residual_sample(j, form, &conv))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .fold(f64::INFINITY, f64::min);
            out.numeric.push(NumericCheck::at_least(
                Task::Divergence,
                "random-jets",
                format!("{} divergence off shell (negative control)", form.name()),
                least,
                1e-2,
            ));
        }
        Ok(out)
    }

    fn convergence(&self) -> Result<TaskOutput, CliError> {
        let conv = self.conv;
        let mut out = TaskOutput::new(Task::Convergence);
        for s in self.solutions()? {
            let grid = self.cfg.grid.clone().unwrap_or_else(|| GridSpec::for_frequency(s.sol.omega, 4));
            let form = ZilchForm::Kibble3;
            let rows = divergence_residual_grid(&s.sol, form, &grid).map_err(|e| match e {
                NumericError::Unresolved { .. } | NumericError::BadGrid(_) => CliError::Config(format!("solution `{}`: {e}", s.name)),
                other => CliError::Numeric(other),
            })?;
            let finest = rows.iter().map(|r| r.relative).fold(0.0, f64::max);
            if finest <= 1e-12 {
                // the current is constant over the region, so differences are exact
                self.check(&mut out, &s.name, format!("{} grid residual at rounding level", form.name()), finest, 1e-12);
            } else {
                let least = rows.iter().filter_map(|r| r.observed_order).fold(f64::INFINITY, f64::min);
                let want = grid.stencil_order as f64 - 0.5;
                out.numeric.push(NumericCheck::at_least(
                    Task::Convergence,
                    &s.name,
                    format!("{} observed order, stencil {}", form.name(), grid.stencil_order),
                    least,
                    want,
                ));
            }
            let mut buf = Vec::new();
            write_convergence_csv(&mut buf, &rows).map_err(|e| CliError::Io(e.to_string()))?;
            out.files.push((format!("convergence/{}/{}.csv", convention_dir(&conv), s.name), buf));
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Serialize)]
struct DecomposeRow {
    event: [f64; 4],
    scale: f64,
    contraction_vs_formula: f64,
    off_vs_on: f64,
    zi0j_forms: f64,
    chirality: f64,
    z000: f64,
    z000_on_shell: f64,
}
