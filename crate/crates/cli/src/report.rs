//! Stability report rows: one classified parameter point per row, carrying
//! both the closed-form verdict and its agreement with the direct cone
//! test.

use chenlee::{
    classify_e0, classify_e2m, discriminant, eigenvalues3, jacobian, matignon_classify,
    Complex64, Error, FractionalOrder, PairRegime, State, SystemSpec, VerdictKind,
    DEFAULT_BOUNDARY_TOL,
};

pub const REPORT_HEADER: &str = "a,c,k,m,q,delta,q2,re1,im1,re2,im2,re3,im3,verdict,clause,agree";

/// 17 significant digits: round-trips f64 exactly.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone)]
pub struct ReportRow {
    pub a: f64,
    pub c: f64,
    pub k: f64,
    pub m: f64,
    pub q: f64,
    pub delta: f64,
    pub q2: Option<f64>,
    pub eigenvalues: [Complex64; 3],
    pub verdict: String,
    pub clause: String,
    pub agree: bool,
}

fn clause_for(a: f64, c: f64, k: f64, m: f64, q: f64) -> String {
    if m == 0.0 {
        if k > 0.0 {
            "origin:gain-positive".to_string()
        } else if a < 0.0 && c > 0.0 {
            "origin:all-negative".to_string()
        } else {
            "origin:positive-eigenvalue".to_string()
        }
    } else if k > 0.0 {
        "line:gain-positive".to_string()
    } else {
        let report = discriminant(a, c, m);
        match report.regime {
            PairRegime::ComplexStable => "line:complex-stable".to_string(),
            PairRegime::ComplexNeutral => "line:complex-neutral".to_string(),
            PairRegime::RealNegative => "line:real-negative".to_string(),
            PairRegime::RealNonNegative => "line:real-nonnegative".to_string(),
            PairRegime::ComplexCritical => {
                let q2 = report.q2.expect("critical regime carries q2");
                let margin = (q2 - q) * std::f64::consts::FRAC_PI_2;
                if margin.abs() <= DEFAULT_BOUNDARY_TOL {
                    "line:complex-critical(q=q2)".to_string()
                } else if margin > 0.0 {
                    "line:complex-critical(q<q2)".to_string()
                } else {
                    "line:complex-critical(q>q2)".to_string()
                }
            }
        }
    }
}

/// Classifies one parameter point through both routes. m = 0 targets the
/// origin, any other m the equilibrium line point (0, m, 0).
pub fn analyze_point(a: f64, c: f64, k: f64, m: f64, q: f64) -> Result<ReportRow, Error> {
    let order = FractionalOrder::new(q)?;
    let closed_form = if m == 0.0 {
        classify_e0(a, c, k, order)?
    } else {
        classify_e2m(a, c, k, m, order)?
    };

    let anchor = State::new(0.0, m, 0.0);
    let spec = SystemSpec::controlled(a, c, k, anchor)?;
    let eigs = eigenvalues3(&jacobian(&anchor, &spec));
    let cone = matignon_classify(&eigs, order, DEFAULT_BOUNDARY_TOL);

    let report = discriminant(a, c, m);
    Ok(ReportRow {
        a,
        c,
        k,
        m,
        q,
        delta: report.delta,
        q2: report.q2,
        eigenvalues: eigs.sorted_by_re(),
        verdict: closed_form.kind.to_string(),
        clause: clause_for(a, c, k, m, q),
        agree: closed_form.kind == cone.kind,
    })
}

/// A grid point that violates a precondition; kept in the output, never
/// silently dropped.
pub fn invalid_row(a: f64, c: f64, k: f64, m: f64, q: f64, reason: &str) -> ReportRow {
    let report = discriminant(a, c, m);
    let nan = Complex64::new(f64::NAN, f64::NAN);
    ReportRow {
        a,
        c,
        k,
        m,
        q,
        delta: report.delta,
        q2: report.q2,
        eigenvalues: [nan; 3],
        verdict: "invalid".to_string(),
        clause: format!("invalid:{reason}"),
        agree: true,
    }
}

impl ReportRow {
    pub fn is_invalid(&self) -> bool {
        self.verdict == "invalid"
    }

    pub fn to_csv(&self) -> String {
        let q2 = self.q2.map(fmt_f64).unwrap_or_default();
        let mut fields = vec![
            fmt_f64(self.a),
            fmt_f64(self.c),
            fmt_f64(self.k),
            fmt_f64(self.m),
            fmt_f64(self.q),
            fmt_f64(self.delta),
            q2,
        ];
        for lambda in &self.eigenvalues {
            fields.push(fmt_f64(lambda.re));
            fields.push(fmt_f64(lambda.im));
        }
        fields.push(self.verdict.clone());
        fields.push(self.clause.clone());
        fields.push(self.agree.to_string());
        fields.join(",")
    }

    pub fn to_json(&self) -> String {
        let q2 = self
            .q2
            .map(fmt_f64)
            .unwrap_or_else(|| "null".to_string());
        let eigen: Vec<String> = self
            .eigenvalues
            .iter()
            .map(|l| format!("{{\"re\":{},\"im\":{}}}", fmt_f64(l.re), fmt_f64(l.im)))
            .collect();
        format!(
            "{{\"a\":{},\"c\":{},\"k\":{},\"m\":{},\"q\":{},\"delta\":{},\"q2\":{},\"eigenvalues\":[{}],\"verdict\":\"{}\",\"clause\":\"{}\",\"agree\":{}}}",
            fmt_f64(self.a),
            fmt_f64(self.c),
            fmt_f64(self.k),
            fmt_f64(self.m),
            fmt_f64(self.q),
            fmt_f64(self.delta),
            q2,
            eigen.join(","),
            self.verdict,
            self.clause,
            self.agree
        )
    }

    pub fn to_text(&self) -> String {
        let eig = |l: &Complex64| {
            if l.im == 0.0 {
                format!("{}", l.re)
            } else if l.im > 0.0 {
                format!("{} + {}i", l.re, l.im)
            } else {
                format!("{} - {}i", l.re, -l.im)
            }
        };
        let mut out = String::new();
        let mut push = |name: &str, value: String| {
            out.push_str(&format!("{name:<9} {value}\n"));
        };
        push("a", self.a.to_string());
        push("c", self.c.to_string());
        push("k", self.k.to_string());
        push("m", self.m.to_string());
        push("q", self.q.to_string());
        push("delta", self.delta.to_string());
        push("q2", self.q2.map(|v| v.to_string()).unwrap_or_else(|| "-".to_string()));
        push("lambda1", eig(&self.eigenvalues[0]));
        push("lambda2", eig(&self.eigenvalues[1]));
        push("lambda3", eig(&self.eigenvalues[2]));
        push("verdict", self.verdict.clone());
        push("clause", self.clause.clone());
        push("agree", self.agree.to_string());
        out
    }
}

/// Which verdict the cone test alone assigns; used for strict-mode
/// diagnostics.
pub fn cone_only_verdict(a: f64, c: f64, k: f64, m: f64, q: f64) -> Result<VerdictKind, Error> {
    let order = FractionalOrder::new(q)?;
    let anchor = State::new(0.0, m, 0.0);
    let spec = SystemSpec::controlled(a, c, k, anchor)?;
    let eigs = eigenvalues3(&jacobian(&anchor, &spec));
    Ok(matignon_classify(&eigs, order, DEFAULT_BOUNDARY_TOL).kind)
}
