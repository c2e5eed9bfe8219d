//! The DQMAT v1 text format for dual quaternion matrices.
//!
//! Layout: line 1 is the literal header `DQMAT 1`; line 2 holds the row
//! and column counts `m n`; the remaining `m·n` lines carry one entry
//! each in row-major order as eight whitespace-separated decimals
//! `st.w st.x st.y st.z du.w du.x du.y du.z`.  Values are written with
//! 17 significant digits, so a write→read round trip is lossless.

use std::fmt;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use dqeig::{DQMatrix, DQVector, DualQuaternion, Quaternion};

/// Parse failure with the 1-based line it occurred on.
#[derive(Debug)]
pub struct FormatError {
    pub origin: String,
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.origin, self.line, self.message)
    }
}

impl std::error::Error for FormatError {}

fn fail(origin: &str, line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        origin: origin.to_string(),
        line,
        message: message.into(),
    }
}

/// Parse DQMAT text.  `origin` names the source (usually a path) for
/// diagnostics.
pub fn parse_dqmat(text: &str, origin: &str) -> Result<DQMatrix, FormatError> {
    // Pair each non-blank line with its 1-based position in the file.
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| fail(origin, 1, "empty file, expected header `DQMAT 1`"))?;
    if header != "DQMAT 1" {
        return Err(fail(
            origin,
            line_no,
            format!("expected header `DQMAT 1`, found `{header}`"),
        ));
    }

    let (line_no, dims) = lines
        .next()
        .ok_or_else(|| fail(origin, line_no + 1, "missing dimension line `m n`"))?;
    let mut parts = dims.split_whitespace();
    let mut dim = |name: &str| -> Result<usize, FormatError> {
        parts
            .next()
            .ok_or_else(|| fail(origin, line_no, format!("missing {name} count")))?
            .parse::<usize>()
            .map_err(|e| fail(origin, line_no, format!("bad {name} count: {e}")))
    };
    let m = dim("row")?;
    let n = dim("column")?;
    if parts.next().is_some() {
        return Err(fail(origin, line_no, "trailing tokens after `m n`"));
    }
    if m == 0 || n == 0 {
        return Err(fail(
            origin,
            line_no,
            format!("dimensions must be at least 1, found {m} x {n}"),
        ));
    }

    let mut a = DQMatrix::zeros(m, n);
    let mut last_line = line_no;
    for i in 0..m {
        for j in 0..n {
            let (line_no, entry) = lines.next().ok_or_else(|| {
                fail(
                    origin,
                    last_line + 1,
                    format!("unexpected end of file, expected entry ({i}, {j})"),
                )
            })?;
            last_line = line_no;
            let mut vals = [0.0f64; 8];
            let mut fields = entry.split_whitespace();
            for (k, slot) in vals.iter_mut().enumerate() {
                let field = fields.next().ok_or_else(|| {
                    fail(
                        origin,
                        line_no,
                        format!("entry ({i}, {j}) has {k} fields, expected 8"),
                    )
                })?;
                *slot = field.parse::<f64>().map_err(|e| {
                    fail(
                        origin,
                        line_no,
                        format!("entry ({i}, {j}) field {k}: bad number `{field}`: {e}"),
                    )
                })?;
            }
            if fields.next().is_some() {
                return Err(fail(
                    origin,
                    line_no,
                    format!("entry ({i}, {j}) has more than 8 fields"),
                ));
            }
            a[(i, j)] = DualQuaternion::new(
                Quaternion::new(vals[0], vals[1], vals[2], vals[3]),
                Quaternion::new(vals[4], vals[5], vals[6], vals[7]),
            );
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(fail(
            origin,
            line_no,
            format!("trailing data after {m} x {n} = {} entries", m * n),
        ));
    }
    Ok(a)
}

/// Read a DQMAT file.
pub fn read_dqmat(path: &Path) -> anyhow::Result<DQMatrix> {
    let text = fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    Ok(parse_dqmat(&text, &path.display().to_string())?)
}

/// Read a DQMAT file holding an `n x 1` column and return it as a vector.
pub fn read_dqvec(path: &Path) -> anyhow::Result<DQVector> {
    let a = read_dqmat(path)?;
    if a.cols() != 1 {
        anyhow::bail!(
            "{}: expected a single-column matrix for a vector, found {} columns",
            path.display(),
            a.cols()
        );
    }
    Ok(DQVector::from_fn(a.rows(), |i| a[(i, 0)]))
}

/// Serialize a matrix as DQMAT text.
pub fn format_dqmat(a: &DQMatrix) -> String {
    let mut out = String::new();
    out.push_str("DQMAT 1\n");
    out.push_str(&format!("{} {}\n", a.rows(), a.cols()));
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let q = &a[(i, j)];
            out.push_str(&format!(
                "{:.16e} {:.16e} {:.16e} {:.16e} {:.16e} {:.16e} {:.16e} {:.16e}\n",
                q.st.w, q.st.x, q.st.y, q.st.z, q.du.w, q.du.x, q.du.y, q.du.z
            ));
        }
    }
    out
}

/// Write a matrix to a DQMAT file.
pub fn write_dqmat(path: &Path, a: &DQMatrix) -> anyhow::Result<()> {
    let file = fs::File::create(path)
        .map_err(|e| anyhow::anyhow!("cannot create {}: {e}", path.display()))?;
    let mut w = BufWriter::new(file);
    w.write_all(format_dqmat(a).as_bytes())?;
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use dqeig::random::{random_hermitian, rng_from_seed};

    #[test]
    fn round_trip_is_bit_exact() {
        let mut rng = rng_from_seed(11);
        let a = random_hermitian(5, &mut rng);
        let text = format_dqmat(&a);
        let b = parse_dqmat(&text, "mem").unwrap();
        assert_eq!(a.rows(), b.rows());
        assert_eq!(a.cols(), b.cols());
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(a[(i, j)], b[(i, j)], "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn empty_file_is_rejected() {
        let err = parse_dqmat("", "mem").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("empty file"), "{err}");
    }

    #[test]
    fn zero_dimension_is_rejected() {
        let err = parse_dqmat("DQMAT 1\n0 0\n", "mem").unwrap_err();
        assert!(err.message.contains("at least 1"), "{err}");
    }

    #[test]
    fn wrong_header_is_rejected() {
        let err = parse_dqmat("DQMAT 2\n1 1\n0 0 0 0 0 0 0 0\n", "mem").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("DQMAT 1"), "{err}");
    }

    #[test]
    fn short_entry_line_is_diagnosed_with_its_line_number() {
        let err = parse_dqmat("DQMAT 1\n1 2\n1 0 0 0 0 0 0 0\n1 2 3\n", "mem").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.message.contains("expected 8"), "{err}");
    }

    #[test]
    fn missing_entries_are_diagnosed() {
        let err = parse_dqmat("DQMAT 1\n2 2\n1 0 0 0 0 0 0 0\n", "mem").unwrap_err();
        assert!(err.message.contains("unexpected end of file"), "{err}");
    }

    #[test]
    fn trailing_entries_are_diagnosed() {
        let text = "DQMAT 1\n1 1\n1 0 0 0 0 0 0 0\n2 0 0 0 0 0 0 0\n";
        let err = parse_dqmat(text, "mem").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.message.contains("trailing data"), "{err}");
    }

    #[test]
    fn bad_number_is_diagnosed_with_field_index() {
        let err = parse_dqmat("DQMAT 1\n1 1\n1 0 0 nope 0 0 0 0\n", "mem").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("field 3"), "{err}");
    }

    #[test]
    fn blank_lines_are_tolerated() {
        let text = "DQMAT 1\n\n1 1\n\n1 0 0 0 0 0 0 0\n\n";
        let a = parse_dqmat(text, "mem").unwrap();
        assert_eq!(a[(0, 0)].st.w, 1.0);
    }
}
