//! Plain-text tables.

use std::fmt::Write;

use conifold_core::{CheckReport, MultiClassSeries, PotentialSeries};

fn table(header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(&header);
    out.push('\n');
    for row in &rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

/// One row per `q`-degree, one column per even `λ` power.
pub fn potential_table(p: &PotentialSeries) -> String {
    let exps: Vec<i32> = (-2..=p.lambda_order()).step_by(2).collect();
    let mut header = vec!["n".to_string()];
    header.extend(exps.iter().map(|e| format!("λ^{e}")));
    let rows = p
        .iter()
        .map(|(n, f)| {
            let mut row = vec![n.to_string()];
            row.extend(exps.iter().map(|e| f.coeff(*e).unwrap_or_default().to_string()));
            row
        })
        .collect();
    table(header, rows)
}

/// One block per class, one row per multi-cover degree.
pub fn multiclass_table(s: &MultiClassSeries, lambda_order: i32) -> String {
    let exps: Vec<i32> = (-2..=lambda_order).step_by(2).collect();
    let mut out = String::new();
    for (label, series) in s.iter() {
        let _ = writeln!(out, "class {label}");
        let mut header = vec!["k".to_string()];
        header.extend(exps.iter().map(|e| format!("λ^{e}")));
        let rows = series
            .iter()
            .map(|(k, f)| {
                let mut row = vec![k.to_string()];
                row.extend(exps.iter().map(|e| f.coeff(*e).unwrap_or_default().to_string()));
                row
            })
            .collect();
        out.push_str(&table(header, rows));
    }
    out
}

pub fn report_text(r: &CheckReport) -> String {
    let verdict = if r.passed { "PASS" } else { "FAIL" };
    let mut out = format!("{}: {verdict} (λ order {}, q order {})\n", r.check_name, r.trunc_lambda, r.trunc_q);
    if let Some(m) = &r.first_failure {
        let _ = write!(out, "  first failure at λ^{}", m.lambda_exp);
        if let Some(n) = m.q_degree {
            let _ = write!(out, ", q-degree {n}");
        }
        if let Some(c) = &m.class {
            let _ = write!(out, ", class {c}");
        }
        let _ = writeln!(out, ": expected {}, got {}", m.expected, m.actual);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use conifold_core::potential;

    #[test]
    fn potential_single_row() {
        let t = potential_table(&potential(1, 1).unwrap());
        assert_eq!(t, "n  λ^-2  λ^0\n1  1     1/12\n");
    }
}
