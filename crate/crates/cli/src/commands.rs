use rayon::prelude::*;
use serde_json::{json, Value};
use tensile_domain::solve::log_space;
use tensile_domain::{
    boundary, classify, critical_activation_closed_form, critical_activation_numeric,
    free_actuation, max_activation_for_prestretch, optimal_prestretch, plane_stress,
    prestretched_actuation, pull_in, relaxed_stress, MaterialModel, StretchState,
};

use crate::config::{get_count, get_number, get_numbers, get_str, require_number, RunConfig};
use crate::error::CliError;
use crate::output::{boundary_rows, write_csv, BoundaryRow, SweepRecord};

/// Environment variable capping the sweep worker count; 0 or unset is automatic.
pub const THREADS_ENV: &str = "TENSILE_DOMAIN_THREADS";

/// What a command produced: a main document, optional per-`k_v` files and
/// warnings destined for stderr.
#[derive(Debug, Default)]
pub struct Report {
    pub body: Vec<u8>,
    pub files: Vec<(String, Vec<u8>)>,
    pub warnings: Vec<String>,
}

impl Report {
    fn json(value: &Value) -> Result<Self, CliError> {
        let mut body = serde_json::to_vec_pretty(value)?;
        body.push(b'\n');
        Ok(Self {
            body,
            ..Self::default()
        })
    }
}

fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn material_json(m: &MaterialModel) -> Value {
    serde_json::to_value(m.kind()).unwrap_or(Value::Null)
}

pub fn cmd_classify(cfg: &RunConfig) -> Result<Report, CliError> {
    let model = cfg.material()?;
    let k_v = cfg.single_activation("classify")?;
    let sec = cfg
        .section("classify")
        .ok_or_else(|| config_err("missing [classify] section"))?;
    let lambda1 = require_number(sec, "classify", "lambda1")?;
    let lambda2 = require_number(sec, "classify", "lambda2")?;
    let s = StretchState::new(lambda1, lambda2)?;
    let class = classify(&model, &s, k_v)?;
    let raw = plane_stress(&model, &s, k_v)?;
    let relaxed = relaxed_stress(&model, &s, k_v)?;
    Report::json(&json!({
        "command": "classify",
        "material": material_json(&model),
        "k_v": k_v,
        "lambda1": lambda1,
        "lambda2": lambda2,
        "regime": class.regime,
        "on_boundary": class.on_boundary,
        "natural_width": { "direction1": class.width1, "direction2": class.width2 },
        "stress": raw,
        "relaxed": relaxed,
    }))
}

/// `split` asks for one CSV per activation instead of the long-format file.
pub fn cmd_boundary(cfg: &RunConfig, split: bool) -> Result<Report, CliError> {
    let model = cfg.material()?;
    let activations = cfg.activations("boundary")?;
    let empty = toml::Table::new();
    let sec = cfg.section("boundary").unwrap_or(&empty);
    let lo = get_number(sec, "boundary", "lambda1_min")?.unwrap_or(0.5);
    let hi = get_number(sec, "boundary", "lambda1_max")?.unwrap_or(5.0);
    let n = get_count(sec, "boundary", "n")?.unwrap_or(200);
    let format = get_str(sec, "boundary", "format")?.unwrap_or("csv");
    if n < 2 {
        return Err(config_err(format!(
            "[boundary] n must be at least 2, got {n}"
        )));
    }
    if !matches!(format, "csv" | "json") {
        return Err(config_err(format!(
            "[boundary] format must be \"csv\" or \"json\", got {format:?}"
        )));
    }
    if split && format == "json" {
        return Err(config_err("--split applies to CSV output only"));
    }

    let mut report = Report::default();
    let mut boundaries = Vec::with_capacity(activations.len());
    for &k_v in &activations {
        let b = boundary(&model, k_v, (lo, hi), n)?;
        for w in &b.warnings {
            report.warnings.push(format!("k_v={k_v}: {w}"));
        }
        boundaries.push(b);
    }

    if format == "json" {
        let warnings = std::mem::take(&mut report.warnings);
        return Report::json(&json!({
            "command": "boundary",
            "material": material_json(&model),
            "boundaries": boundaries,
        }))
        .map(|r| Report { warnings, ..r });
    }

    let mut per_k: Vec<Vec<BoundaryRow>> = Vec::with_capacity(boundaries.len());
    for b in &boundaries {
        let stress = b
            .vertices
            .iter()
            .map(|&v| {
                let p = plane_stress(&model, &StretchState::equibiaxial(v)?, b.k_v)?;
                Ok((p.t1, p.t2))
            })
            .collect::<Result<Vec<_>, tensile_domain::Error>>()?;
        per_k.push(boundary_rows(b, &stress));
    }
    if split {
        for (i, rows) in per_k.iter().enumerate() {
            let mut buf = Vec::new();
            write_csv(&mut buf, rows)?;
            report.files.push((format!("boundary_kv_{i:03}.csv"), buf));
        }
    } else {
        let rows: Vec<BoundaryRow> = per_k.into_iter().flatten().collect();
        write_csv(&mut report.body, &rows)?;
    }
    Ok(report)
}

pub fn cmd_critical(cfg: &RunConfig) -> Result<Report, CliError> {
    let model = cfg.material()?;
    let numerical = critical_activation_numeric(&model)?;
    let closed = critical_activation_closed_form(&model);
    let best = pull_in(&model)?;
    let discrepancy = closed.map(|c| {
        let dk = (numerical.k_v_crit - c.k_v_crit).abs() / c.k_v_crit;
        let dl = (numerical.lambda_crit - c.lambda_crit).abs() / c.lambda_crit;
        dk.max(dl)
    });
    let optimal = optimal_prestretch(&model)?;
    Report::json(&json!({
        "command": "critical",
        "material": material_json(&model),
        "k_v_crit": best.k_v_crit,
        "lambda_crit": best.lambda_crit,
        "method": best.method,
        "numerical": { "k_v_crit": numerical.k_v_crit, "lambda_crit": numerical.lambda_crit },
        "closed_form": closed.map(|c| json!({ "k_v_crit": c.k_v_crit, "lambda_crit": c.lambda_crit })),
        "discrepancy": discrepancy,
        "optimal_prestretch": optimal,
    }))
}

fn axis(sec: &toml::Table, name: &str, n: usize, log: bool) -> Result<Vec<f64>, CliError> {
    if let Some(list) = get_numbers(sec, "sweep", name)? {
        return Ok(list);
    }
    let lo = get_number(sec, "sweep", &format!("{name}_min"))?.unwrap_or(0.3);
    let hi = get_number(sec, "sweep", &format!("{name}_max"))?.unwrap_or(3.0);
    if n < 2 {
        return Ok(Vec::new());
    }
    if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && hi > lo) {
        return Err(config_err(format!(
            "[sweep] invalid {name} range [{lo}, {hi}]"
        )));
    }
    Ok(if log {
        log_space(lo, hi, n)
    } else {
        (0..n)
            .map(|i| {
                if i + 1 == n {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (n - 1) as f64
                }
            })
            .collect()
    })
}

fn worker_count() -> Result<usize, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(0),
        Ok(v) => v.trim().parse::<usize>().map_err(|_| {
            config_err(format!(
                "{THREADS_ENV} must be a non-negative integer, got {v:?}"
            ))
        }),
    }
}

pub fn cmd_sweep(cfg: &RunConfig) -> Result<Report, CliError> {
    let base = cfg.material()?;
    let (c1_base, c2_base) = base
        .moduli()
        .ok_or_else(|| config_err("sweep needs a Mooney-Rivlin or Neo-Hookean material"))?;
    let activations = cfg.activations("sweep")?;
    let empty = toml::Table::new();
    let sec = cfg.section("sweep").unwrap_or(&empty);
    let n = get_count(sec, "sweep", "n")?.unwrap_or(64);
    let log = match get_str(sec, "sweep", "spacing")?.unwrap_or("linear") {
        "linear" => false,
        "log" => true,
        other => {
            return Err(config_err(format!(
                "[sweep] spacing must be \"linear\" or \"log\", got {other:?}"
            )))
        }
    };
    let l1s = axis(sec, "lambda1", n, log)?;
    let l2s = axis(sec, "lambda2", n, log)?;
    let c1s = get_numbers(sec, "sweep", "c1")?.unwrap_or_else(|| vec![c1_base]);
    let c2s = get_numbers(sec, "sweep", "c2")?.unwrap_or_else(|| vec![c2_base]);
    if l1s.is_empty() || l2s.is_empty() || c1s.is_empty() || c2s.is_empty() {
        return Err(config_err("[sweep] grid is empty"));
    }
    let models = c1s
        .iter()
        .flat_map(|&c1| c2s.iter().map(move |&c2| (c1, c2)))
        .map(|(c1, c2)| MaterialModel::mooney_rivlin(c1, c2).map(|m| (c1, c2, m)))
        .collect::<Result<Vec<_>, _>>()?;

    let mut points = Vec::with_capacity(l1s.len() * l2s.len() * activations.len() * models.len());
    for &l1 in &l1s {
        for &l2 in &l2s {
            for &k in &activations {
                for m in &models {
                    points.push((l1, l2, k, m));
                }
            }
        }
    }

    let eval = |&(l1, l2, k_v, (c1, c2, m)): &(f64, f64, f64, &(f64, f64, MaterialModel))| {
        let s = StretchState::new(l1, l2)?;
        let class = classify(m, &s, k_v)?;
        let raw = plane_stress(m, &s, k_v)?;
        let relaxed = relaxed_stress(m, &s, k_v)?;
        Ok(SweepRecord {
            lambda1: l1,
            lambda2: l2,
            k_v,
            c1: *c1,
            c2: *c2,
            regime: class.regime,
            on_boundary: class.on_boundary,
            t1: raw.t1,
            t2: raw.t2,
            t1_relaxed: relaxed.t1,
            t2_relaxed: relaxed.t2,
        })
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count()?)
        .build()
        .map_err(|e| config_err(format!("cannot start sweep workers: {e}")))?;
    let rows = pool.install(|| {
        points
            .par_iter()
            .map(eval)
            .collect::<Result<Vec<_>, tensile_domain::Error>>()
    })?;

    let mut report = Report::default();
    write_csv(&mut report.body, &rows)?;
    Ok(report)
}

pub fn cmd_scenario(cfg: &RunConfig) -> Result<Report, CliError> {
    let model = cfg.material()?;
    let sec = cfg
        .section("scenario")
        .ok_or_else(|| config_err("missing [scenario] section"))?;
    let kind =
        get_str(sec, "scenario", "kind")?.ok_or_else(|| config_err("[scenario] needs a kind"))?;
    let activations = cfg.activations("scenario")?;
    match kind {
        "free" => {
            let results = activations
                .iter()
                .map(|&k| free_actuation(&model, k))
                .collect::<Result<Vec<_>, _>>()?;
            let p = pull_in(&model)?;
            Report::json(&json!({
                "command": "scenario",
                "scenario": "free",
                "material": material_json(&model),
                "results": results,
                "pull_in": p,
            }))
        }
        "prestretch" => {
            let prestretch = require_number(sec, "scenario", "prestretch")?;
            if !(prestretch.is_finite() && prestretch > 0.0) {
                return Err(config_err(format!(
                    "[scenario] prestretch must be positive, got {prestretch}"
                )));
            }
            let results = activations
                .iter()
                .map(|&k| prestretched_actuation(&model, prestretch, k))
                .collect::<Result<Vec<_>, _>>()?;
            let max_activation = max_activation_for_prestretch(&model, prestretch)?;
            Report::json(&json!({
                "command": "scenario",
                "scenario": "prestretch",
                "material": material_json(&model),
                "prestretch": prestretch,
                "max_activation": max_activation,
                "results": results,
            }))
        }
        other => Err(config_err(format!(
            "[scenario] kind must be \"free\" or \"prestretch\", got {other:?}"
        ))),
    }
}
