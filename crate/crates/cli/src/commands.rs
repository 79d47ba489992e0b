use std::fs;
use std::path::Path;

use motionfact::dispatch::{factor as dispatch_factor, FactorOutcome, FactorRequest};
use motionfact::exactalg::{parse_rat, rat, Mode, Rat};
use motionfact::linkage::{
    coupler_trajectory, geometric_report, sample_parameters, straight_line_test,
};
use motionfact::synthesis::{classify_case, synthesize, Synthesis};
use motionfact::wire::{self, trajectory_csv, Render};
use motionfact::Error;
use serde_json::{json, Value};

use crate::render::{self, print_json};
use crate::{Config, Failure, Output};

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())).into())
}

pub fn factor(
    cfg: &Config,
    file: &Path,
    order: Option<Vec<usize>>,
    all: bool,
) -> Result<(), Failure> {
    let c = wire::parse_motion(&read(file)?)?;
    let report = dispatch_factor(
        &c,
        &FactorRequest {
            order,
            all,
            mode: cfg.mode,
        },
    )?;
    let exists = report.factorization_exists();
    let mut text = vec![format!("path: {}", report.path.join("; "))];
    let body: Value = match &report.outcome {
        FactorOutcome::Generic(g) => {
            text.push(format!(
                "norm factors: {}",
                g.norm_factors
                    .iter()
                    .map(|m| format!("[{m}]"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            for f in &g.factorizations {
                text.push(format!("{}  {f}", f.signature()));
            }
            for (order, e) in &g.failures {
                text.push(format!(
                    "order {} failed: {e}",
                    order
                        .iter()
                        .map(|m| format!("[{m}]"))
                        .collect::<Vec<_>>()
                        .join(" ")
                ));
            }
            json!({
                "norm_factors": g.norm_factors.iter().map(wire::rpoly_to_wire).collect::<Vec<_>>(),
                "factorizations": g.factorizations.iter().map(render::factorization).collect::<Vec<_>>(),
                "failures": g.failures.len(),
            })
        }
        FactorOutcome::Approximate {
            norm_factors,
            results,
        } => {
            for r in results {
                let hs: Vec<String> = r
                    .factors
                    .iter()
                    .map(|h| render::dq_decimal(h, cfg.digits))
                    .collect();
                text.push(format!(
                    "factors h: {}  (residual {:e})",
                    hs.join("; "),
                    r.residual
                ));
            }
            json!({
                "norm_factors": norm_factors.iter().map(|m| m.coeffs().iter().map(|c| motionfact::exactalg::fmt_decimal(c, cfg.digits)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "results": results.iter().map(|r| json!({
                    "factors": r.factors.iter().map(|h| h.components().iter().map(|c| motionfact::exactalg::fmt_decimal(c, cfg.digits)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "residual": r.residual,
                })).collect::<Vec<_>>(),
            })
        }
        FactorOutcome::CircularTranslation(f) | FactorOutcome::TranslationFamily(f) => {
            text.push(render::family_text(f));
            text.push(format!("particular: {}", f.realize_particular()?));
            json!({ "family": render::family(f) })
        }
        FactorOutcome::TranslationOrderings(f, g) => {
            text.push(format!("{f}"));
            text.push(format!("{g}"));
            json!({ "factorizations": [render::factorization(f), render::factorization(g)] })
        }
        FactorOutcome::Darboux(d) => {
            text.push(format!("right factor: {}", d.right.factor));
            text.push(render::family_text(&d.family));
            text.push(format!("particular: {}", d.chain_a));
            json!({
                "right_factor": wire::dq_to_wire(d.right.factor.h()),
                "family": render::family(&d.family),
                "linkage": render::linkage(&d.linkage),
            })
        }
        FactorOutcome::NoFactorization { reason, trick } => {
            text.push(format!("no factorization: {reason}"));
            if let Some(t) = trick {
                text.push(format!(
                    "after multiplying by the primal part: {}",
                    render::family_text(t)
                ));
            }
            json!({ "reason": reason, "trick": trick.as_ref().map(render::family) })
        }
        FactorOutcome::Unresolved(g) => {
            for (order, e) in &g.failures {
                text.push(format!(
                    "order {} failed: {e}",
                    order
                        .iter()
                        .map(|m| format!("[{m}]"))
                        .collect::<Vec<_>>()
                        .join(" ")
                ));
            }
            json!({ "unresolved": true, "failures": g.failures.len() })
        }
    };
    match cfg.output {
        Output::Json => {
            print_json(&json!({ "path": report.path, "exists": exists, "result": body }))
        }
        _ => out!("{}", text.join("\n")),
    }
    if exists {
        Ok(())
    } else {
        Err(Failure::NonExistence)
    }
}

pub fn classify(cfg: &Config, file: &Path) -> Result<(), Failure> {
    let input = wire::parse_constraint(&read(file)?)?;
    let case = classify_case(&input).name();
    match cfg.output {
        Output::Json => print_json(&json!({ "case": case })),
        _ => out!("{case}"),
    }
    Ok(())
}

pub fn synth(cfg: &Config, file: &Path) -> Result<(), Failure> {
    let input = wire::parse_constraint(&read(file)?)?;
    let case = classify_case(&input).name();
    let outcome = match synthesize(&input) {
        Ok(o) => o,
        Err(Error::NoFactorization(reason)) => {
            match cfg.output {
                Output::Json => {
                    print_json(&json!({ "case": case, "exists": false, "reason": reason }))
                }
                _ => out!("case: {case}\nno factorization: {reason}"),
            }
            return Err(Failure::NonExistence);
        }
        Err(e) => return Err(e.into()),
    };
    let mut text = vec![format!("case: {case}")];
    let body = match &outcome {
        Synthesis::DegP2 { six, linkages } => {
            for (label, f) in six.labeled() {
                text.push(format!("{label:<2} {}  {f}", f.signature()));
            }
            for p in linkages {
                text.push(format!("linkage {}: {}", p.label, p.linkage.signature()));
                for a in p.linkage.annotations() {
                    text.push(format!("  note: {a}"));
                }
            }
            json!({
                "factorizations": six.labeled().iter().map(|(l, f)| json!({ "label": l, "factorization": render::factorization(f) })).collect::<Vec<_>>(),
                "linkages": linkages.iter().map(|p| json!({ "label": p.label, "linkage": render::linkage(&p.linkage) })).collect::<Vec<_>>(),
            })
        }
        Synthesis::DegP1Linear(d) => {
            text.push(format!("trivial: {}", d.trivial));
            for f in &d.generic.factorizations {
                text.push(format!("generic: {f}"));
            }
            if let Some(l) = &d.linkage {
                text.push(format!("linkage: {}", l.signature()));
            }
            json!({
                "trivial": render::factorization(&d.trivial),
                "generic": d.generic.factorizations.iter().map(render::factorization).collect::<Vec<_>>(),
                "linkage": d.linkage.as_ref().map(render::linkage),
            })
        }
        Synthesis::DegP1Reducible(d) => {
            text.push(d.diagnostic.clone());
            text.push(format!("rotation factor: {}", d.rotation));
            json!({ "diagnostic": d.diagnostic, "rotation": wire::dq_to_wire(d.rotation.h()) })
        }
        Synthesis::Darboux(d) => {
            for (k, q) in d.joints().iter().enumerate() {
                text.push(format!("Q{} = {q}", k + 1));
            }
            text.push(render::geometry_text(&geometric_report(&d.linkage)));
            json!({
                "right_factor": wire::dq_to_wire(d.right.factor.h()),
                "family": render::family(&d.family),
                "linkage": render::linkage(&d.linkage),
            })
        }
    };
    match cfg.output {
        Output::Json => print_json(&json!({ "case": case, "exists": true, "result": body })),
        _ => out!("{}", text.join("\n")),
    }
    Ok(())
}

/// Sample parameters away from small integers, where joints tend to be singular.
pub fn verification_samples(n: usize) -> Vec<Rat> {
    (0..n)
        .map(|k| rat(2 * k as i64 - n as i64, 3) + rat(1, 7))
        .collect()
}

pub fn verify(cfg: &Config, file: &Path, samples: usize) -> Result<(), Failure> {
    let l = wire::parse_linkage(&read(file)?)?;
    let closure = l.closure_check(&verification_samples(samples));
    let geo = geometric_report(&l);
    match cfg.output {
        Output::Json => print_json(
            &json!({ "closure": render::closure(&closure), "geometry": render::geometry(&geo) }),
        ),
        _ => out!(
            "{}\n{}",
            render::closure_text(&closure),
            render::geometry_text(&geo)
        ),
    }
    if closure.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn parse_point(s: &str) -> Result<[Rat; 3], Failure> {
    let v: Vec<Rat> = s
        .split(',')
        .map(|c| parse_rat(c.trim()))
        .collect::<Result<_, _>>()?;
    <[Rat; 3]>::try_from(v)
        .map_err(|_| Failure::Usage(format!("point must have three coordinates: {s}")))
}

fn parse_range(s: &str) -> Result<(Rat, Rat), Failure> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("range must be lo:hi: {s}")))?;
    Ok((parse_rat(lo.trim())?, parse_rat(hi.trim())?))
}

pub fn traj(
    cfg: &Config,
    file: &Path,
    point: &str,
    range: &str,
    steps: usize,
) -> Result<(), Failure> {
    let c = wire::parse_motion(&read(file)?)?;
    let p = parse_point(point)?;
    let (lo, hi) = parse_range(range)?;
    let ts = sample_parameters(&lo, &hi, steps);
    let pts = coupler_trajectory(c.poly(), &p, &ts)?;
    let render = match cfg.mode {
        Mode::Exact => Render::Rational,
        Mode::Float(_) => Render::Decimal(cfg.digits),
    };
    match cfg.output {
        Output::Json => print_json(&json!({
            "straight_line": straight_line_test(&pts),
            "points": ts.iter().zip(&pts).map(|(t, q)| json!({ "t": render.rat(t), "p": q.iter().map(|x| render.rat(x)).collect::<Vec<_>>() })).collect::<Vec<_>>(),
        })),
        _ => out!("{}", trajectory_csv(&ts, &pts, render).trim_end()),
    }
    Ok(())
}
