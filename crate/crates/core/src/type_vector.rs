//! Dimension types `(d_0, n_0; d_1, n_1; ...)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Integer type vector: ascending degrees with positive counts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeVector {
    entries: Vec<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeParseError {
    #[error("type vector must be written as (d,n;d,n;...)")]
    Syntax,
    #[error("invalid number {0:?}")]
    Number(String),
    #[error("degrees must be strictly increasing and counts positive")]
    Order,
}

impl TypeVector {
    /// Sorts by degree and merges repeated degrees; zero counts are dropped.
    pub fn new(pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut entries: Vec<(u64, u64)> = pairs.into_iter().filter(|&(_, n)| n > 0).collect();
        entries.sort_unstable();
        let mut merged: Vec<(u64, u64)> = Vec::with_capacity(entries.len());
        for (d, n) in entries {
            match merged.last_mut() {
                Some((last, count)) if *last == d => *count += n,
                _ => merged.push((d, n)),
            }
        }
        TypeVector { entries: merged }
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    /// `sum n_i d_i^2`.
    pub fn dimension(&self) -> u64 {
        self.entries.iter().map(|&(d, n)| n * d * d).sum()
    }

    pub fn rank(&self) -> u64 {
        self.entries.iter().map(|&(_, n)| n).sum()
    }

    /// Number of degree-1 elements.
    pub fn pointed_count(&self) -> u64 {
        match self.entries.first() {
            Some(&(1, n)) => n,
            _ => 0,
        }
    }

    pub fn count_of(&self, degree: u64) -> u64 {
        self.entries
            .iter()
            .find(|&&(d, _)| d == degree)
            .map_or(0, |&(_, n)| n)
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(d, n)| format!("{d},{n}"))
            .collect();
        write!(f, "({})", parts.join(";"))
    }
}

impl FromStr for TypeVector {
    type Err = TypeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or(TypeParseError::Syntax)?;
        let mut entries = Vec::new();
        for part in inner.split(';') {
            let (d, n) = part.split_once(',').ok_or(TypeParseError::Syntax)?;
            let num = |w: &str| {
                w.parse::<u64>()
                    .map_err(|_| TypeParseError::Number(w.to_string()))
            };
            entries.push((num(d)?, num(n)?));
        }
        let ordered = entries.windows(2).all(|w| w[0].0 < w[1].0);
        if !ordered || entries.iter().any(|&(d, n)| d == 0 || n == 0) {
            return Err(TypeParseError::Order);
        }
        Ok(TypeVector { entries })
    }
}

/// Type with real degrees, as computed from floating-point dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct RealType {
    pub entries: Vec<(f64, u64)>,
}

impl RealType {
    /// `Some` when every degree is within `slack` of a positive integer.
    pub fn to_integral(&self, slack: f64) -> Option<TypeVector> {
        let mut pairs = Vec::with_capacity(self.entries.len());
        for &(d, n) in &self.entries {
            let r = d.round();
            if r < 1.0 || (d - r).abs() > slack {
                return None;
            }
            pairs.push((r as u64, n));
        }
        Some(TypeVector::new(pairs))
    }
}

impl fmt::Display for RealType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(d, n)| {
                if (d - d.round()).abs() < 1e-9 {
                    format!("{},{n}", d.round() as u64)
                } else {
                    format!("{},{n}", crate::fmt_real(*d))
                }
            })
            .collect();
        write!(f, "({})", parts.join(";"))
    }
}
