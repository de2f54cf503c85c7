//! One function per subcommand. Each returns a report and whether the checks
//! it ran held.

use anyhow::Result;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::json;

use lagwron::coalescence::{b_set, c_set, coalescence_edges, reduce, Triple};
use lagwron::exactalg::PolyQ;
use lagwron::numeric::{blz_residual, newton_check, p_roots};
use lagwron::par::Exec;
use lagwron::partitions::{is_self_conjugate, partitions_of, Partition};
use lagwron::qkdv::{
    diagonal_check, hamiltonian_identity_check, virasoro_check, Beta, DensityForm,
};
use lagwron::shiftsym::{qkdv_eigenvalues, root_sum, root_sum_sq, ShiftedEval};
use lagwron::spectra::{
    count_blz_with, q_eval, qq_residual, spectrum, stokes_t, verma_report, Side,
};
use lagwron::verify::{energy_grid, run_all, run_suite, SuiteReport, VerifyConfig};
use lagwron::wronskian::phi;

use crate::output::{f17, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
    /// Only conjectural checks failed.
    Conjecture,
}

pub struct Outcome {
    pub report: Report,
    pub status: Status,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome {
            report,
            status: Status::Ok,
        }
    }

    fn checked(report: Report, passed: bool) -> Self {
        Outcome {
            report,
            status: if passed { Status::Ok } else { Status::Failed },
        }
    }
}

fn to_f64(b: &BigRational) -> f64 {
    b.to_f64().unwrap_or(f64::NAN)
}

fn poly_beta(p: &PolyQ) -> String {
    p.render("β")
}

pub fn phi_cmd(lambda: &Partition, mu: &Partition, beta: Option<&BigRational>) -> Result<Outcome> {
    let p = phi(lambda, mu)?;
    let (coeffs, poly): (Vec<String>, String) = match beta {
        Some(b) => {
            let at = p.at_beta(b);
            (
                (0..=p.degree()).map(|k| at.coeff(k).to_string()).collect(),
                at.render("y"),
            )
        }
        None => (
            (0..=p.degree()).map(|k| p.coeff(k).render("β")).collect(),
            p.to_string(),
        ),
    };
    let json = json!({
        "lambda": lambda,
        "mu": mu,
        "beta": beta.map(|b| b.to_string()),
        "degree": p.degree(),
        "coefficients": coeffs,
        "polynomial": poly,
    });
    let mut r = Report::new(&json, &["power", "coefficient"]);
    for (k, c) in coeffs.iter().enumerate() {
        r.row(vec![k.to_string(), c.clone()]);
    }
    r.text = Some(poly);
    Ok(Outcome::ok(r))
}

fn triple_json(t: &Triple) -> serde_json::Value {
    json!({"beta": t.beta.to_string(), "lambda": t.lambda, "mu": t.mu})
}

pub fn reduce_cmd(beta: &BigRational, lambda: &Partition, mu: &Partition) -> Result<Outcome> {
    let t = Triple::new(beta.clone(), lambda.clone(), mu.clone());
    let (red, exponent) = reduce(&t);
    let edges: Vec<_> = coalescence_edges(&t)
        .into_iter()
        .map(|e| json!({"cell": [e.cell.i, e.cell.j], "target": triple_json(&e.target)}))
        .collect();
    let json = json!({"input": triple_json(&t), "reduced": triple_json(&red), "exponent": exponent, "edges": edges});
    let mut r = Report::new(&json, &["beta", "lambda", "mu", "exponent"]);
    r.row(vec![
        red.beta.to_string(),
        red.lambda.to_string(),
        red.mu.to_string(),
        exponent.to_string(),
    ]);
    r.text = Some(format!("{t} -> {red}, exponent {exponent}"));
    Ok(Outcome::ok(r))
}

pub fn bset_cmd(n: usize) -> Result<Outcome> {
    let (b, c) = (b_set(n), c_set(n));
    let equal = b == c;
    let json = json!({"n": n, "b_set": b, "c_set": c, "equal": equal});
    let mut r = Report::new(&json, &["set", "members"]);
    let join = |s: &std::collections::BTreeSet<i64>| {
        s.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    r.row(vec!["B".into(), join(&b)]);
    r.row(vec!["C".into(), join(&c)]);
    Ok(Outcome::checked(r, equal))
}

pub fn sseval_cmd(lambda: &Partition, beta: Option<&BigRational>) -> Result<Outcome> {
    let p = ShiftedEval::new(lambda);
    let e = qkdv_eigenvalues(lambda);
    let named = [
        ("I1", e.i1),
        ("I3", e.i3),
        ("I5", e.i5),
        ("root_sum", root_sum(lambda)),
        ("root_sum_sq", root_sum_sq(lambda).into_inner()),
    ];
    let value = |q: &PolyQ| match beta {
        Some(b) => q.eval(b).to_string(),
        None => poly_beta(q),
    };
    let mut json = json!({
        "lambda": lambda,
        "beta": beta.map(|b| b.to_string()),
        "p": p.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "root_sum_sq_conjectural": true,
    });
    let mut r = Report::new(&json!(null), &["quantity", "value"]);
    for (k, v) in p.values().iter().enumerate() {
        r.row(vec![format!("p{k}"), v.to_string()]);
    }
    for (name, q) in &named {
        json[*name] = json!(value(q));
        let label = if *name == "root_sum_sq" {
            "root_sum_sq (conjectural)".to_string()
        } else {
            name.to_string()
        };
        r.row(vec![label, value(q)]);
    }
    r.json = json;
    Ok(Outcome::ok(r))
}

pub fn spectrum_cmd(lambda: &Partition, beta: &BigRational, kmax: usize) -> Result<Outcome> {
    let mut json = json!({"lambda": lambda, "beta": beta.to_string(), "kmax": kmax});
    let mut r = Report::new(&json!(null), &["side", "k", "energy"]);
    for (side, name) in [(Side::Plus, "plus"), (Side::Minus, "minus")] {
        match spectrum(lambda, side, beta, kmax) {
            Ok(es) => {
                for (k, e) in es.iter().enumerate() {
                    r.row(vec![name.into(), k.to_string(), e.to_string()]);
                }
                json[name] = json!(es.iter().map(|e| e.to_string()).collect::<Vec<_>>());
            }
            Err(err) => json[name] = json!({"excluded": err.to_string()}),
        }
    }
    r.json = json;
    Ok(Outcome::ok(r))
}

pub fn qq_check_cmd(lambda: &Partition, beta: &BigRational, tol: f64) -> Result<Outcome> {
    let b = to_f64(beta);
    let mut points = Vec::new();
    let mut r = Report::new(
        &json!(null),
        &["re_e", "im_e", "qq_residual", "t_relative_error"],
    );
    let mut passed = true;
    for en in energy_grid() {
        let qq = qq_residual(lambda, b, en)?;
        let qp = q_eval(lambda, Side::Plus, en, b)?.value();
        let qm = q_eval(lambda, Side::Minus, en, b)?.value();
        let want = qp * qm * ((std::f64::consts::PI * b).sin() / b);
        let t_err = (stokes_t(lambda, en, b).value() - want).norm() / want.norm();
        passed &= qq < tol && t_err < tol;
        r.row(vec![f17(en.re), f17(en.im), f17(qq), f17(t_err)]);
        points.push(json!({"e": en, "qq_residual": qq, "t_relative_error": t_err}));
    }
    r.json = json!({"lambda": lambda, "beta": beta.to_string(), "tol": tol, "passed": passed, "points": points});
    Ok(Outcome::checked(r, passed))
}

pub fn blz_count_cmd(n: usize, beta: &BigRational, exec: Exec) -> Result<Outcome> {
    let count = count_blz_with(exec, n, beta);
    let partitions = partitions_of(n).count();
    let self_conjugate = partitions_of(n).filter(is_self_conjugate).count();
    let json = json!({"n": n, "beta": beta.to_string(), "count": count, "partitions": partitions, "self_conjugate": self_conjugate});
    let mut r = Report::new(&json, &["n", "beta", "count", "partitions"]);
    r.row(vec![
        n.to_string(),
        beta.to_string(),
        count.to_string(),
        partitions.to_string(),
    ]);
    Ok(Outcome::ok(r))
}

pub fn verma_report_cmd(n: usize, beta: &BigRational) -> Result<Outcome> {
    let v = verma_report(n, beta);
    let consistent = v.consistent();
    let mut json = serde_json::to_value(&v)?;
    json["beta"] = json!(beta.to_string());
    json["consistent"] = json!(consistent);
    let mut r = Report::new(
        &json,
        &[
            "n",
            "beta",
            "in_a_n",
            "blz_count",
            "partitions",
            "consistent",
        ],
    );
    r.row(vec![
        n.to_string(),
        beta.to_string(),
        v.in_a_n.to_string(),
        v.blz_count.to_string(),
        v.partitions.to_string(),
        consistent.to_string(),
    ]);
    Ok(Outcome::checked(r, consistent))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum QkdvCheck {
    Virasoro,
    Diag,
    Identity,
}

pub fn qkdv_cmd(degree: usize, beta: Option<&BigRational>, check: QkdvCheck) -> Result<Outcome> {
    let mut blocks = Vec::new();
    let mut notes = Vec::new();
    let mut r = Report::new(
        &json!(null),
        &["check", "degree", "holds", "counterexample"],
    );
    let mut passed = true;
    let mut push = |r: &mut Report, name: String, d: usize, holds: bool, cex: Option<String>| {
        passed &= holds;
        r.row(vec![
            name.clone(),
            d.to_string(),
            holds.to_string(),
            cex.clone().unwrap_or_default(),
        ]);
        blocks.push(json!({"check": name, "degree": d, "holds": holds, "counterexample": cex}));
    };
    match check {
        QkdvCheck::Virasoro => {
            let b = beta.map_or(Beta::Symbolic, |b| Beta::Value(b.clone()));
            for m in -3i64..=3 {
                for n in -3i64..=3 {
                    for c in virasoro_check(m, n, &b, degree) {
                        push(&mut r, format!("[L{m},L{n}]"), c.degree, c.holds, None);
                    }
                }
            }
        }
        QkdvCheck::Diag => {
            if beta.is_some() {
                notes.push("diagonality is checked with β symbolic; --beta is ignored".to_string());
            }
            for d in 0..=degree {
                for c in diagonal_check(d)? {
                    let cex = c.counterexample.as_ref().map(|l| format!("s_[{l}]"));
                    push(&mut r, c.operator, d, cex.is_none(), cex);
                }
            }
        }
        QkdvCheck::Identity => {
            let mut report = hamiltonian_identity_check(&[1, 3], degree)?;
            // I₅ blocks stop at degree 5
            let five = hamiltonian_identity_check(&[5], degree.min(5))?;
            report.checks.extend(five.checks);
            report.a_algebra.extend(five.a_algebra);
            for c in &report.checks {
                match c.form {
                    DensityForm::Derived => push(
                        &mut r,
                        format!("I{} density", c.k),
                        c.max_degree,
                        c.holds(),
                        c.first_mismatch.map(|d| format!("degree {d}")),
                    ),
                    DensityForm::Printed => {
                        if let Some(d) = c.first_mismatch {
                            notes.push(format!(
                                "printed-form I{} density differs from the mode sum from degree {d} (β² terms)",
                                c.k
                            ));
                        }
                    }
                }
            }
            for (k, ok) in report.a_algebra {
                push(&mut r, format!("I{k} via A2..A6"), degree, ok, None);
            }
        }
    }
    r.json = json!({"degree": degree, "passed": passed, "blocks": blocks, "notes": notes});
    Ok(Outcome::checked(r, passed))
}

pub fn roots_cmd(lambda: &Partition, beta: &BigRational) -> Result<Outcome> {
    let roots = p_roots(lambda, beta)?;
    let mut json = serde_json::to_value(&roots)?;
    json["lambda"] = json!(lambda);
    json["beta"] = json!(beta.to_string());
    json["min_separation"] = json!(roots.min_separation());
    let mut r = Report::new(&json, &["re", "im", "backward_error"]);
    for (z, e) in roots.roots.iter().zip(&roots.residuals) {
        r.row(vec![f17(z.re), f17(z.im), f17(*e)]);
    }
    Ok(Outcome::ok(r))
}

pub fn blz_residual_cmd(lambda: &Partition, beta: &BigRational, tol: f64) -> Result<Outcome> {
    let residual = blz_residual(&p_roots(lambda, beta)?, beta)?;
    let passed = residual < tol;
    let json = json!({"lambda": lambda, "beta": beta.to_string(), "residual": residual, "tol": tol, "passed": passed});
    let mut r = Report::new(&json, &["lambda", "beta", "residual", "passed"]);
    r.row(vec![
        lambda.to_string(),
        beta.to_string(),
        f17(residual),
        passed.to_string(),
    ]);
    Ok(Outcome::checked(r, passed))
}

pub fn newton_check_cmd(lambda: &Partition, beta: &BigRational, tol: f64) -> Result<Outcome> {
    let n = newton_check(lambda, beta)?;
    let scale = n.sum_exact.abs().max(1.0);
    let passed = n.sum_diff / scale < tol && n.sum_hamiltonian_diff / scale < tol;
    let sq_ok = n.sum_sq_diff / n.sum_sq_formula.abs().max(1.0) < tol.max(1e-6);
    let mut json = serde_json::to_value(&n)?;
    json["beta"] = json!(beta.to_string());
    json["tol"] = json!(tol);
    json["passed"] = json!(passed);
    if !sq_ok {
        json["conjecture"] = json!({"warning": "Σz² closed form not confirmed at this tolerance", "sum_sq_diff": n.sum_sq_diff});
    }
    let mut r = Report::new(&json, &["quantity", "numeric", "closed_form", "difference"]);
    r.row(vec![
        "sum".into(),
        f17(n.sum_numeric),
        f17(n.sum_exact),
        f17(n.sum_diff),
    ]);
    r.row(vec![
        "sum via 2I3-2I1^2".into(),
        f17(n.sum_numeric),
        f17(n.sum_from_hamiltonians),
        f17(n.sum_hamiltonian_diff),
    ]);
    r.row(vec![
        "sum of squares (conjectural)".into(),
        f17(n.sum_sq_numeric),
        f17(n.sum_sq_formula),
        f17(n.sum_sq_diff),
    ]);
    let status = match (passed, sq_ok) {
        (false, _) => Status::Failed,
        (true, false) => Status::Conjecture,
        (true, true) => Status::Ok,
    };
    Ok(Outcome { report: r, status })
}

pub fn verify_cmd(suite: &str, cfg: &VerifyConfig) -> Result<Outcome> {
    let reports: Vec<SuiteReport> = if suite == "all" {
        run_all(cfg)?
    } else {
        vec![run_suite(suite, cfg)?]
    };
    let failed: Vec<&SuiteReport> = reports
        .iter()
        .filter(|s| !s.passed && !s.conjectural)
        .collect();
    let conjecture: Vec<&SuiteReport> = reports
        .iter()
        .filter(|s| !s.passed && s.conjectural)
        .collect();
    let status = if !failed.is_empty() {
        Status::Failed
    } else if !conjecture.is_empty() {
        Status::Conjecture
    } else {
        Status::Ok
    };
    let json = json!({
        "max_size": cfg.max_size,
        "tol": cfg.tol,
        "passed": failed.is_empty(),
        "suites": reports,
        "failures": failed,
        "conjecture": conjecture,
    });
    let mut r = Report::new(
        &json,
        &["suite", "status", "cases", "max_error", "first_failure"],
    );
    for s in &reports {
        let status = match (s.passed, s.conjectural) {
            (true, _) => "pass",
            (false, false) => "FAIL",
            (false, true) => "conjecture not confirmed",
        };
        r.row(vec![
            s.name.clone(),
            status.into(),
            s.cases.to_string(),
            s.max_error.map(f17).unwrap_or_default(),
            s.failures.first().cloned().unwrap_or_default(),
        ]);
    }
    Ok(Outcome { report: r, status })
}
