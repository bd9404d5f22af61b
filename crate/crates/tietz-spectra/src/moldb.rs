//! Molecule parameter records.
//!
//! The builtin set carries the published (b_h, r_e) pairs for eleven
//! diatomics; the derived quantity e^{-b_h r_e} is the smallest deformation
//! c_h for which the Case1 closed form applies. Well depths and reduced
//! masses are deliberately not shipped - energy computations in molecular
//! units need user-supplied D (eV) and mu (amu).
//!
//! User files are line-oriented key/value blocks separated by blank lines:
//!
//! ```text
//! # hydrogen, X state
//! name: H2(X1Sigma_g+)
//! b_h: 1.618 90
//! r_e: 0.741
//! D: 4.7446
//! mu: 0.503 91
//! ```
//!
//! Numbers tolerate `.` or `,` as the decimal mark and embedded spaces as
//! digit-group separators, matching how spectroscopic tables are printed.

use std::fmt;
use std::path::Path;

#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeRecord {
    pub name: String,
    /// Exponential range parameter in 1/Angstrom.
    pub b_h: f64,
    /// Equilibrium bond length in Angstrom.
    pub r_e: f64,
    /// Optional well depth in eV (user supplied).
    pub well_depth: Option<f64>,
    /// Optional reduced mass in amu (user supplied).
    pub mu: Option<f64>,
    /// Optional preferred deformation (user supplied).
    pub c_h: Option<f64>,
}

impl MoleculeRecord {
    /// The Case1 threshold e^{-b_h r_e}: the minimal c_h that keeps the
    /// closed-form spectrum applicable.
    pub fn c_h_min(&self) -> f64 {
        (-self.b_h * self.r_e).exp()
    }
}

#[derive(Debug)]
pub enum MoldbError {
    Io(std::io::Error),
    Parse { line: usize, message: String },
}

impl fmt::Display for MoldbError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoldbError::Io(e) => write!(f, "cannot read molecule file: {e}"),
            MoldbError::Parse { line, message } => write!(f, "line {line}: {message}"),
        }
    }
}

impl std::error::Error for MoldbError {}

impl From<std::io::Error> for MoldbError {
    fn from(e: std::io::Error) -> Self {
        MoldbError::Io(e)
    }
}

/// The eleven builtin molecules (ground electronic states), with b_h in
/// 1/Angstrom and r_e in Angstrom.
pub fn builtin_molecules() -> Vec<MoleculeRecord> {
    const ROWS: [(&str, f64, f64); 11] = [
        ("HF(X1Sigma+)", 1.94207, 0.917),
        ("Cl2(X1Sigma_g+)", 2.200354, 1.987),
        ("I2(X(O_g+))", 2.12343, 2.666),
        ("H2(X1Sigma_g+)", 1.61890, 0.741),
        ("O2(X3Sigma_g+)", 2.59103, 1.207),
        ("N2(X1Sigma_g+)", 2.78585, 1.097),
        ("CO(X1Sigma+)", 2.20481, 1.128),
        ("NO(X2Pi_r)", 2.71559, 1.151),
        ("O2+(X2Pi_g+)", 2.86987, 1.116),
        ("NO+(X1Sigma+)", 2.73349, 1.063),
        ("N2+(X2Sigma_g+)", 2.70830, 1.116),
    ];
    ROWS.iter()
        .map(|&(name, b_h, r_e)| MoleculeRecord {
            name: name.to_string(),
            b_h,
            r_e,
            well_depth: None,
            mu: None,
            c_h: None,
        })
        .collect()
}

/// Parse a number that may use `,` as the decimal mark and spaces (plain or
/// thin) as digit-group separators.
pub(crate) fn parse_number(raw: &str) -> Result<f64, String> {
    let mut cleaned = String::with_capacity(raw.len());
    for ch in raw.chars() {
        match ch {
            ' ' | '\t' | '\u{2009}' | '\u{202f}' | '\u{00a0}' => {}
            other => cleaned.push(other),
        }
    }
    if cleaned.contains(',') {
        if cleaned.contains('.') {
            return Err(format!("number '{raw}' mixes ',' and '.'"));
        }
        cleaned = cleaned.replace(',', ".");
        if cleaned.matches('.').count() > 1 {
            return Err(format!("number '{raw}' has more than one decimal mark"));
        }
    }
    cleaned
        .parse::<f64>()
        .map_err(|_| format!("cannot parse number '{raw}'"))
}

/// Parse molecule records from text. Line numbers are 1-based.
pub fn parse_molecules(text: &str) -> Result<Vec<MoleculeRecord>, MoldbError> {
    struct Partial {
        first_line: usize,
        name: Option<String>,
        b_h: Option<f64>,
        r_e: Option<f64>,
        well_depth: Option<f64>,
        mu: Option<f64>,
        c_h: Option<f64>,
    }

    fn finish(partial: Partial) -> Result<MoleculeRecord, MoldbError> {
        let missing = |field: &str| MoldbError::Parse {
            line: partial.first_line,
            message: format!("record is missing required field '{field}'"),
        };
        let record = MoleculeRecord {
            name: partial.name.clone().ok_or_else(|| missing("name"))?,
            b_h: partial.b_h.ok_or_else(|| missing("b_h"))?,
            r_e: partial.r_e.ok_or_else(|| missing("r_e"))?,
            well_depth: partial.well_depth,
            mu: partial.mu,
            c_h: partial.c_h,
        };
        let invalid = |message: String| MoldbError::Parse {
            line: partial.first_line,
            message,
        };
        if !(record.b_h > 0.0) {
            return Err(invalid("b_h must be positive".into()));
        }
        if !(record.r_e > 0.0) {
            return Err(invalid("r_e must be positive".into()));
        }
        if let Some(c_h) = record.c_h {
            if !(c_h.abs() < 1.0) {
                return Err(invalid("|c_h| must be < 1".into()));
            }
        }
        if let Some(d) = record.well_depth {
            if !(d > 0.0) {
                return Err(invalid("D must be positive".into()));
            }
        }
        if let Some(mu) = record.mu {
            if !(mu > 0.0) {
                return Err(invalid("mu must be positive".into()));
            }
        }
        Ok(record)
    }

    let mut records = Vec::new();
    let mut current: Option<Partial> = None;
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            if let Some(partial) = current.take() {
                records.push(finish(partial)?);
            }
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| MoldbError::Parse {
            line: line_no,
            message: format!("expected 'key: value', got '{line}'"),
        })?;
        let key = key.trim();
        let value = value.trim();
        let partial = current.get_or_insert(Partial {
            first_line: line_no,
            name: None,
            b_h: None,
            r_e: None,
            well_depth: None,
            mu: None,
            c_h: None,
        });
        let number = |value: &str| {
            parse_number(value).map_err(|message| MoldbError::Parse {
                line: line_no,
                message,
            })
        };
        match key {
            "name" => partial.name = Some(value.to_string()),
            "b_h" => partial.b_h = Some(number(value)?),
            "r_e" => partial.r_e = Some(number(value)?),
            "D" => partial.well_depth = Some(number(value)?),
            "mu" => partial.mu = Some(number(value)?),
            "c_h" => partial.c_h = Some(number(value)?),
            other => {
                return Err(MoldbError::Parse {
                    line: line_no,
                    message: format!("unknown field '{other}'"),
                })
            }
        }
    }
    if let Some(partial) = current.take() {
        records.push(finish(partial)?);
    }
    Ok(records)
}

/// Load molecule records from a file.
pub fn load_molecules<P: AsRef<Path>>(path: P) -> Result<Vec<MoleculeRecord>, MoldbError> {
    let text = std::fs::read_to_string(path)?;
    parse_molecules(&text)
}
