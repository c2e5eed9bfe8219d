//! Report rows and the CSV / text renderings shared by all subcommands.

use dqeig::eigen::IterationTrace;
use dqeig::DualNumber;

/// One reported eigenpair (or one bench cell result).
#[derive(Debug, Clone)]
pub struct ReportRow {
    pub method: &'static str,
    pub n: usize,
    /// Seed that produced the instance or start vector; empty in the CSV
    /// when the input came from a file or the bundled example.
    pub seed: Option<u64>,
    /// 1-based index of the eigenpair within its run.
    pub eigen_index: usize,
    pub lambda: DualNumber,
    pub iterations: usize,
    /// Wall-clock seconds around the solver call only.
    pub cpu_seconds: f64,
    /// Always recomputed from `(A, v, λ)` at report time.
    pub residual_2r: f64,
    pub converged: bool,
}

pub const CSV_HEADER: &str =
    "method,n,seed,eigen_index,lambda_st,lambda_du,iterations,cpu_seconds,residual_2R,converged";

fn csv_line(row: &ReportRow) -> String {
    let seed = row.seed.map(|s| s.to_string()).unwrap_or_default();
    format!(
        "{},{},{},{},{:.16e},{:.16e},{},{:.4},{:.16e},{}",
        row.method,
        row.n,
        seed,
        row.eigen_index,
        row.lambda.st,
        row.lambda.du,
        row.iterations,
        row.cpu_seconds,
        row.residual_2r,
        row.converged
    )
}

/// Render rows as CSV with the fixed header, LF line endings.
pub fn render_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&csv_line(row));
        out.push('\n');
    }
    out
}

/// Render rows as a human-readable table.  When reference eigenvalues are
/// known (the bundled example), a relative-error column is appended, with
/// each row matched to the nearest reference value.
pub fn render_text(rows: &[ReportRow], reference: Option<&[DualNumber]>) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<6} {:>4} {:>10} {:>5} {:>14} {:>14} {:>7} {:>9} {:>12} {:>5}",
        "method", "n", "seed", "idx", "lambda_st", "lambda_du", "iter", "cpu_s", "residual", "conv"
    ));
    if reference.is_some() {
        out.push_str(&format!(" {:>10}", "rel_err"));
    }
    out.push('\n');
    for row in rows {
        let seed = row
            .seed
            .map(|s| s.to_string())
            .unwrap_or_else(|| "-".to_string());
        out.push_str(&format!(
            "{:<6} {:>4} {:>10} {:>5} {:>14.6} {:>14.6} {:>7} {:>9.4} {:>12.4e} {:>5}",
            row.method,
            row.n,
            seed,
            row.eigen_index,
            row.lambda.st,
            row.lambda.du,
            row.iterations,
            row.cpu_seconds,
            row.residual_2r,
            row.converged
        ));
        if let Some(reference) = reference {
            out.push_str(&format!(
                " {:>10.4e}",
                relative_error(&row.lambda, reference)
            ));
        }
        out.push('\n');
    }
    out
}

/// Relative distance from `lambda` to the nearest reference value, using
/// the Euclidean norm on (standard, dual) coefficient pairs.
fn relative_error(lambda: &DualNumber, reference: &[DualNumber]) -> f64 {
    reference
        .iter()
        .map(|want| {
            let diff = ((lambda.st - want.st).powi(2) + (lambda.du - want.du).powi(2)).sqrt();
            let scale = (want.st.powi(2) + want.du.powi(2)).sqrt();
            if scale > 0.0 {
                diff / scale
            } else {
                diff
            }
        })
        .fold(f64::INFINITY, f64::min)
}

pub const TRACE_HEADER: &str = "k,theta_st,theta_du,residual_2R";

/// Render a per-iteration trace as CSV.
pub fn render_trace(trace: &IterationTrace) -> String {
    let mut out = String::from(TRACE_HEADER);
    out.push('\n');
    for step in &trace.steps {
        out.push_str(&format!(
            "{},{:.16e},{:.16e},{:.16e}\n",
            step.k, step.theta.st, step.theta.du, step.residual_2r
        ));
    }
    out
}

/// A minimal gnuplot script plotting the residual column of a trace CSV.
pub fn gnuplot_script(trace_path: &str) -> String {
    format!(
        "set datafile separator ','\n\
         set key top right\n\
         set logscale y\n\
         set xlabel 'iteration k'\n\
         set ylabel 'residual'\n\
         plot '{trace_path}' skip 1 using 1:4 with linespoints title 'residual'\n"
    )
}
