//! Numeric checks on premodular S-matrix data.
//!
//! SMT text format:
//!
//! ```text
//! smat 2
//! 1 1
//! 1 -1
//! dims 1 1
//! unit 0
//! ```
//!
//! Entries are real `a` or complex `a+bi`; `#` starts a comment.

use num_complex::Complex64;
use thiserror::Error;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Distance to an integer accepted by [`divisibility_test`].
pub const INTEGER_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct SMatrixData {
    pub entries: Vec<Vec<Complex64>>,
    pub dims: Vec<f64>,
    pub unit: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModularError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("index {index} is out of range or not allowed here")]
    BadIndex { index: usize },
    #[error("entry s[{x0}][{x1}] = {value} is not a rational integer")]
    NonIntegralEntry {
        x0: usize,
        x1: usize,
        value: Complex64,
    },
}

impl SMatrixData {
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn global_dimension(&self) -> f64 {
        self.dims.iter().map(|d| d * d).sum()
    }

    /// `s_{jk} = exp(2 pi i jk / n)`: the pointed modular datum of `Z_n`.
    pub fn cyclic(n: usize) -> Self {
        let entries = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| {
                        Complex64::from_polar(
                            1.0,
                            2.0 * std::f64::consts::PI * ((j * k) % n) as f64 / n as f64,
                        )
                    })
                    .collect()
            })
            .collect();
        SMatrixData {
            entries,
            dims: vec![1.0; n],
            unit: 0,
        }
    }

    /// Same datum with indices relabelled: new index `a` is old `perm[a]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        SMatrixData {
            entries: perm
                .iter()
                .map(|&a| perm.iter().map(|&b| self.entries[a][b]).collect())
                .collect(),
            dims: perm.iter().map(|&a| self.dims[a]).collect(),
            unit: perm
                .iter()
                .position(|&a| a == self.unit)
                .expect("perm is a permutation"),
        }
    }

    /// Symmetry and unit-row violations, as `(row, column, description)`.
    pub fn invariant_violations(&self, tol: f64) -> Vec<(usize, usize, String)> {
        let n = self.order();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if (self.entries[a][b] - self.entries[b][a]).norm() > tol {
                    out.push((a, b, "not symmetric".to_string()));
                }
            }
        }
        for b in 0..n {
            if (self.entries[self.unit][b] - self.dims[b]).norm() > tol {
                out.push((self.unit, b, "unit row differs from dims".to_string()));
            }
        }
        out
    }
}

pub fn parse_smatrix(text: &str) -> Result<SMatrixData, ModularError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: String| ModularError::Parse { line, message };
    let eof = || err(0, "unexpected end of input".into());

    let (line, head) = lines.next().ok_or_else(eof)?;
    let n: usize = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["smat", n] => n
            .parse()
            .map_err(|_| err(line, format!("invalid order {n:?}")))?,
        _ => return Err(err(line, "expected `smat <order>`".into())),
    };
    if n == 0 {
        return Err(err(line, "order must be positive".into()));
    }
    let mut entries = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, row) = lines.next().ok_or_else(eof)?;
        let values = row
            .split_whitespace()
            .map(|w| parse_complex(w).ok_or_else(|| err(line, format!("invalid number {w:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if values.len() != n {
            return Err(err(
                line,
                format!("expected {n} entries, found {}", values.len()),
            ));
        }
        entries.push(values);
    }
    let (line, dims_line) = lines.next().ok_or_else(eof)?;
    let dims = match dims_line
        .split_whitespace()
        .collect::<Vec<_>>()
        .split_first()
    {
        Some((&"dims", rest)) if rest.len() == n => rest
            .iter()
            .map(|w| match w.parse::<f64>() {
                Ok(d) if d > 0.0 && d.is_finite() => Ok(d),
                _ => Err(err(line, format!("invalid dimension {w:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?,
        _ => {
            return Err(err(
                line,
                format!("expected `dims` with {n} positive values"),
            ))
        }
    };
    let (line, unit_line) = lines.next().ok_or_else(eof)?;
    let unit = match unit_line.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["unit", u] => match u.parse::<usize>() {
            Ok(u) if u < n => u,
            _ => return Err(err(line, format!("invalid unit {u:?}"))),
        },
        _ => return Err(err(line, "expected `unit <index>`".into())),
    };
    if let Some((line, _)) = lines.next() {
        return Err(err(line, "unexpected trailing content".into()));
    }
    Ok(SMatrixData {
        entries,
        dims,
        unit,
    })
}

/// `a`, `bi`, `a+bi` or `a-bi`.
fn parse_complex(w: &str) -> Option<Complex64> {
    let Some(body) = w.strip_suffix('i') else {
        return w
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .map(|x| Complex64::new(x, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&p| matches!(bytes[p], b'+' | b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    let imag = |s: &str| -> Option<f64> {
        match s {
            "" | "+" => Some(1.0),
            "-" => Some(-1.0),
            _ => s.parse().ok(),
        }
    };
    let (re, im) = match split {
        Some(p) => (body[..p].parse::<f64>().ok()?, imag(&body[p..])?),
        None => (0.0, imag(body)?),
    };
    (re.is_finite() && im.is_finite()).then(|| Complex64::new(re, im))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub x0: usize,
    /// Column-orthogonality sum, or `|lhs - rhs|` for the norm identity.
    pub value: Complex64,
    pub bound: f64,
    pub pass: bool,
}

fn check_index(m: &SMatrixData, x0: usize) -> Result<(), ModularError> {
    if x0 >= m.order() || x0 == m.unit {
        return Err(ModularError::BadIndex { index: x0 });
    }
    Ok(())
}

/// `sum_X (s_{x0,X} / d(x0)) d(X)`, which vanishes for a column orthogonal to the unit column.
pub fn check_column_orthogonality(
    m: &SMatrixData,
    x0: usize,
    tol: f64,
) -> Result<CheckReport, ModularError> {
    check_index(m, x0)?;
    let d0 = m.dims[x0];
    let sum: Complex64 = (0..m.order())
        .map(|x| m.entries[x0][x] / d0 * m.dims[x])
        .sum();
    let bound = tol * m.dims.iter().sum::<f64>();
    Ok(CheckReport {
        x0,
        value: sum,
        bound,
        pass: sum.norm() <= bound,
    })
}

/// `sum_X |s_{x0,X} / d(x0)|^2 = dim / d(x0)^2`.
pub fn check_norm_identity(
    m: &SMatrixData,
    x0: usize,
    global_dim: f64,
    tol: f64,
) -> Result<CheckReport, ModularError> {
    check_index(m, x0)?;
    let d0 = m.dims[x0];
    let lhs: f64 = (0..m.order())
        .map(|x| (m.entries[x0][x] / d0).norm_sqr())
        .sum();
    let diff = (lhs - global_dim / (d0 * d0)).abs();
    Ok(CheckReport {
        x0,
        value: Complex64::new(diff, 0.0),
        bound: tol,
        pass: diff <= tol,
    })
}

/// `d` divides the integer entry `s_{x0,x1}`.
pub fn divisibility_test(
    m: &SMatrixData,
    x0: usize,
    x1: usize,
    d: u64,
) -> Result<bool, ModularError> {
    if x0 >= m.order() || x1 >= m.order() || d == 0 {
        return Err(ModularError::BadIndex { index: x0.max(x1) });
    }
    let value = m.entries[x0][x1];
    let rounded = value.re.round();
    if (value.re - rounded).abs() > INTEGER_SLACK || value.im.abs() > INTEGER_SLACK {
        return Err(ModularError::NonIntegralEntry { x0, x1, value });
    }
    Ok((rounded.abs() as u64).is_multiple_of(d))
}

/// Invariants plus both checks for every non-unit column.
#[derive(Debug, Clone, PartialEq)]
pub struct ModularSummary {
    pub invariant_violations: Vec<(usize, usize, String)>,
    pub orthogonality: Vec<CheckReport>,
    pub norm: Vec<CheckReport>,
}

impl ModularSummary {
    pub fn pass(&self) -> bool {
        self.invariant_violations.is_empty()
            && self.orthogonality.iter().all(|r| r.pass)
            && self.norm.iter().all(|r| r.pass)
    }
}

/// Runs every check; `columns` defaults to all non-unit indices.
pub fn check_all(
    m: &SMatrixData,
    columns: Option<&[usize]>,
    tol: f64,
) -> Result<ModularSummary, ModularError> {
    let all: Vec<usize> = (0..m.order()).filter(|&x| x != m.unit).collect();
    let columns = columns.unwrap_or(&all);
    let global = m.global_dimension();
    Ok(ModularSummary {
        invariant_violations: m.invariant_violations(tol),
        orthogonality: columns
            .iter()
            .map(|&x| check_column_orthogonality(m, x, tol))
            .collect::<Result<_, _>>()?,
        norm: columns
            .iter()
            .map(|&x| check_norm_identity(m, x, global, tol))
            .collect::<Result<_, _>>()?,
    })
}
