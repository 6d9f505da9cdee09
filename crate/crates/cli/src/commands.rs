use clifford_quartic::classify::classify;
use clifford_quartic::quartic::{
    check_32_identity, eval_rep, expand_coeffs, expected_square, grad, homaloidal_check, is_degenerate, square_detect,
};
use clifford_quartic::repkit::{canonicalize, rep_build, rep_to_text, verify_relations, RepFile};
use clifford_quartic::symlie::{g_kernel_dim, h_kernel, min_g_samples, predict, sharp_check, sharp_expected, Mode};
use clifford_quartic::zetafe::{
    closed_form_matches_pullback, fe_involution_check, fe_quadratic_numeric_check, gamma_pullback, gamma_quadratic,
    gamma_quartic, max_relative_difference, quartic_applicable, rep_with_degree, sample_s, squared_oracle,
    zeta_quartic_mc, GammaMatrix,
};
use clifford_quartic::{Error, Result};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::args::{ClassifyArgs, Formula, PqmArgs, QuarticCmd, RepCmd, SymCmd, ZetaCmd};
use crate::input::{load_rep, mode, parse_complex, parse_ints};
use crate::output::Report;

fn cplx(z: Complex64) -> Value {
    json!({"re": z.re, "im": z.im})
}

pub fn rep(cmd: &RepCmd) -> Result<Report> {
    match cmd {
        RepCmd::Build { pq, text } => {
            let rep = rep_build(pq.p, pq.q, &pq.mults)?;
            let mut report = Report::value(&RepFile::from(&rep));
            if *text {
                report.raw = Some(rep_to_text(&rep));
            }
            Ok(report)
        }
        RepCmd::Verify { rep } => {
            let r = verify_relations(&load_rep(rep)?);
            Ok(Report::check(&r, r.all_passed()))
        }
        RepCmd::Canonical { rep } => Ok(Report::value(&canonicalize(&load_rep(rep)?)?)),
    }
}

pub fn quartic(cmd: &QuarticCmd, seed: u64) -> Result<Report> {
    match cmd {
        QuarticCmd::Coeffs { rep } => {
            let form = expand_coeffs(&load_rep(rep)?);
            let terms: Vec<Value> = form
                .coeffs()
                .iter()
                .map(|(k, c)| json!({"index": k, "coefficient": c.to_string()}))
                .collect();
            let result = json!({"m": form.rep().m(), "terms": terms.len(), "coefficients": terms});
            Ok(Report {
                result,
                passed: None,
                csv: None,
                raw: None,
            }
            .with_csv(format!("i,j,k,l,coefficient\n{}", form.to_csv())))
        }
        QuarticCmd::Eval { rep, w } => {
            let value = eval_rep(&load_rep(rep)?, &parse_ints(w)?)?;
            Ok(Report::value(&json!({"value": value.to_string()})))
        }
        QuarticCmd::Grad { rep, w } => {
            let g = grad(&load_rep(rep)?, &parse_ints(w)?)?;
            Ok(Report::value(
                &json!({"gradient": g.iter().map(ToString::to_string).collect::<Vec<_>>()}),
            ))
        }
        QuarticCmd::Homaloidal { rep, trials } => {
            let r = homaloidal_check(&load_rep(rep)?, *trials, seed)?;
            Ok(Report::check(&r, r.passed))
        }
        QuarticCmd::SquareDetect { rep } => {
            let rep = load_rep(rep)?;
            let form = expand_coeffs(&rep);
            let witness = if form.is_zero() { None } else { square_detect(&form) };
            let degenerate = is_degenerate(&rep).degenerate;
            let expected = !degenerate && expected_square(rep.p(), rep.q(), rep.m());
            let matches = witness.is_some() == expected;
            let result = json!({
                "square": witness.is_some(),
                "expected": expected,
                "match": matches,
                "witness": witness,
            });
            Ok(Report::check(&result, matches))
        }
        QuarticCmd::Check32 { k, trials } => {
            let r = check_32_identity(*k, *trials, seed)?;
            Ok(Report::check(&r, r.passed))
        }
    }
}

fn dim_report(computed: usize, predicted: Option<usize>, method: &str, residual: Option<f64>) -> Report {
    let matches = predicted == Some(computed);
    let result = json!({
        "computed_dim": computed,
        "predicted_dim": predicted,
        "match": matches,
        "method": method,
        "residual": residual,
    });
    Report::check(&result, matches)
}

pub fn sym(cmd: &SymCmd, seed: u64) -> Result<Report> {
    match cmd {
        SymCmd::H { rep, mode: m } => {
            let rep = load_rep(rep)?;
            let k = h_kernel(&rep, mode(*m))?;
            let pr = predict(rep.p(), rep.q(), rep.mults())?;
            Ok(dim_report(k.dimension, Some(pr.h_dim), k.method, k.residual))
        }
        SymCmd::G { rep, samples, mode: m } => {
            let rep = load_rep(rep)?;
            let mode = mode(*m);
            let samples = if mode == Mode::Float && *samples == 0 {
                min_g_samples(rep.m())
            } else {
                *samples
            };
            let k = g_kernel_dim(&rep, samples, seed, mode)?;
            let pr = predict(rep.p(), rep.q(), rep.mults())?;
            Ok(dim_report(k.dimension, pr.g_dim, k.method, k.residual))
        }
        SymCmd::Sharp { rep, mode: m } => {
            let rep = load_rep(rep)?;
            let r = sharp_check(&rep, seed, mode(*m))?;
            let expected = sharp_expected(rep.p(), rep.q(), rep.mults(), rep.m());
            let result = json!({
                "holds": r.holds,
                "expected": expected,
                "match": r.holds == expected,
                "nullity": r.nullity,
                "forced": r.forced,
                "unknowns": r.unknowns,
                "method": r.method,
                "residual": r.residual,
            });
            Ok(Report::check(&result, r.holds == expected))
        }
        SymCmd::Predict { pq } => Ok(Report::value(&predict(pq.p, pq.q, &pq.mults)?)),
    }
}

fn matrix_csv(g: &GammaMatrix) -> String {
    let mut s = String::from("row,col,row_label,col_label,re,im\n");
    for (i, row) in g.entries.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            s += &format!("{i},{j},{},{},{},{}\n", g.labels[i], g.labels[j], z.re, z.im);
        }
    }
    s
}

fn need_m(m: Option<usize>) -> Result<usize> {
    m.ok_or_else(|| Error::invalid("this formula needs --m"))
}

fn pullback_for(p: usize, q: usize, m: usize, s: Complex64) -> Result<GammaMatrix> {
    gamma_pullback(&rep_with_degree(p, q, m)?, s)
}

pub fn zeta(cmd: &ZetaCmd, seed: u64) -> Result<Report> {
    match cmd {
        ZetaCmd::Gamma { p, q, m, s, formula } => {
            let s = parse_complex(s)?;
            let g = match formula {
                Formula::Quartic => gamma_quartic(*p, *q, need_m(*m)?, s)?,
                Formula::Pullback => pullback_for(*p, *q, need_m(*m)?, s)?,
                Formula::Quadratic => gamma_quadratic(*p, *q, s)?,
            };
            let csv = matrix_csv(&g);
            Ok(Report::value(&g).with_csv(csv))
        }
        ZetaCmd::CheckInvolution {
            pqm: PqmArgs { p, q, m },
            count,
            tol,
        } => {
            quartic_applicable(*p, *q, *m)?;
            let mut worst = (0.0_f64, Complex64::new(0.0, 0.0));
            for s in sample_s(seed, *count) {
                let r = fe_involution_check(*p, *q, *m, s, *tol)?;
                if r.max_error >= worst.0 {
                    worst = (r.max_error, s);
                }
            }
            let passed = worst.0 < *tol;
            let result =
                json!({"points": count, "tol": tol, "max_error": worst.0, "worst_s": cplx(worst.1), "passed": passed});
            Ok(Report::check(&result, passed))
        }
        ZetaCmd::CheckPullback {
            pqm: PqmArgs { p, q, m },
            count,
            tol,
        } => {
            quartic_applicable(*p, *q, *m)?;
            let rep = rep_with_degree(*p, *q, *m)?;
            let mut worst = (0.0_f64, Complex64::new(0.0, 0.0));
            for s in sample_s(seed, *count) {
                let err = max_relative_difference(&gamma_quartic(*p, *q, *m, s)?, &gamma_pullback(&rep, s)?);
                if err >= worst.0 {
                    worst = (err, s);
                }
            }
            let passed = worst.0 < *tol;
            let note = (!closed_form_matches_pullback(*m))
                .then_some("the closed form is known to differ from the pullback when 8 does not divide m");
            let result = json!({
                "points": count,
                "tol": tol,
                "max_relative_error": worst.0,
                "worst_s": cplx(worst.1),
                "passed": passed,
                "note": note,
            });
            Ok(Report::check(&result, passed))
        }
        ZetaCmd::CheckFeQuadratic { p, q, s, tol } => {
            let r = fe_quadratic_numeric_check(*p, *q, parse_complex(s)?, *tol)?;
            Ok(Report::check(&r, r.passed))
        }
        ZetaCmd::Mc {
            rep,
            component,
            s,
            samples,
        } => {
            let rep = load_rep(rep)?;
            let s = parse_complex(s)?;
            let est = zeta_quartic_mc(&rep, component.as_deref(), s, *samples, seed)?;
            let oracle = if component.is_none() && s.im == 0.0 {
                squared_oracle(&rep, s.re).ok()
            } else {
                None
            };
            let mut result = serde_json::to_value(&est).expect("estimate serializes");
            if let Some(o) = oracle {
                result["oracle"] = json!(o);
                result["oracle_sigmas"] = json!((est.value.re - o).abs() / est.stderr);
            }
            Ok(Report::value(&result))
        }
    }
}

pub fn classify_cmd(a: &ClassifyArgs) -> Result<Report> {
    let r = classify(a.pq.p, a.pq.q, &a.pq.mults)?;
    let mut result = serde_json::to_value(&r).expect("report serializes");
    if !a.explain {
        if let Value::Object(map) = &mut result {
            map.remove("reasons");
        }
    }
    Ok(Report::value(&result))
}
