//! Bounded linear Diophantine solving and enumeration of dimension types.
//!
//! Everything here is exact integer arithmetic.

use std::collections::BTreeSet;

use num::integer::gcd;
use thiserror::Error;

use crate::type_vector::TypeVector;

pub const MAX_DIOPHANTINE_TARGET: u64 = 1_000_000_000;
pub const MAX_ENUMERATION_DIMENSION: u64 = 1_000_000;
/// Default cap on search nodes for both solvers.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

const GOLDEN_90: &str = include_str!("../golden/types-90.golden");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("search exceeded its budget of {budget} nodes")]
    BudgetExceeded { budget: u64 },
    #[error("target {target} exceeds the maximum {max}")]
    TargetTooLarge { target: u64, max: u64 },
    #[error("coefficients must be a nonempty list of positive integers")]
    InvalidCoefficients,
    #[error("invalid constraints: {0}")]
    InvalidConstraints(String),
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
}

struct Budget {
    left: u64,
    total: u64,
}

impl Budget {
    fn new(total: u64) -> Self {
        Budget { left: total, total }
    }

    fn spend(&mut self) -> Result<(), EnumError> {
        if self.left == 0 {
            return Err(EnumError::BudgetExceeded { budget: self.total });
        }
        self.left -= 1;
        Ok(())
    }
}

/// All nonnegative `a` with `sum a_i c_i = target`, in lexicographic order.
pub fn solve_diophantine(
    target: u64,
    coefficients: &[u64],
    budget: u64,
) -> Result<Vec<Vec<u64>>, EnumError> {
    if target > MAX_DIOPHANTINE_TARGET {
        return Err(EnumError::TargetTooLarge {
            target,
            max: MAX_DIOPHANTINE_TARGET,
        });
    }
    if coefficients.is_empty() || coefficients.contains(&0) {
        return Err(EnumError::InvalidCoefficients);
    }
    // suffix_gcd[i] = gcd(c_i, ..., c_m)
    let mut suffix_gcd = coefficients.to_vec();
    for i in (0..coefficients.len().saturating_sub(1)).rev() {
        suffix_gcd[i] = gcd(suffix_gcd[i], suffix_gcd[i + 1]);
    }
    let mut out = Vec::new();
    let mut current = vec![0u64; coefficients.len()];
    let mut budget = Budget::new(budget);
    diophantine_rec(
        coefficients,
        &suffix_gcd,
        0,
        target,
        &mut current,
        &mut out,
        &mut budget,
    )?;
    Ok(out)
}

fn diophantine_rec(
    c: &[u64],
    suffix_gcd: &[u64],
    pos: usize,
    rem: u64,
    current: &mut [u64],
    out: &mut Vec<Vec<u64>>,
    budget: &mut Budget,
) -> Result<(), EnumError> {
    budget.spend()?;
    if !rem.is_multiple_of(suffix_gcd[pos]) {
        return Ok(());
    }
    if pos + 1 == c.len() {
        current[pos] = rem / c[pos];
        out.push(current.to_vec());
        current[pos] = 0;
        return Ok(());
    }
    for a in 0..=rem / c[pos] {
        current[pos] = a;
        diophantine_rec(
            c,
            suffix_gcd,
            pos + 1,
            rem - a * c[pos],
            current,
            out,
            budget,
        )?;
    }
    current[pos] = 0;
    Ok(())
}

/// Arithmetic constraints on a type `(1,n_0; d_1,n_1; ...)` of dimension `N`.
/// `sum n_i d_i^2 = N` is always imposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSet {
    pub n0_divides_n: bool,
    /// `n_0 | n_i d_i^2` for every degree.
    pub n0_divides_class: bool,
    pub d_divides_n: bool,
    pub dsq_divides_n: bool,
    pub n0_min: u64,
    pub max_degree: Option<u64>,
}

impl Default for ConstraintSet {
    fn default() -> Self {
        ConstraintSet {
            n0_divides_n: false,
            n0_divides_class: false,
            d_divides_n: false,
            dsq_divides_n: false,
            n0_min: 1,
            max_degree: None,
        }
    }
}

pub const PRESETS: [&str; 3] = ["base", "center", "strict"];

impl ConstraintSet {
    /// Named presets:
    ///
    /// * `base`: `n_0 | N`, every `d | N`, `n_0 >= 2`;
    /// * `center`: `n_0 | N`, every `d^2 | N`, `n_0 >= 2`;
    /// * `strict`: `base` plus `n_0 | n_i d_i^2`.
    pub fn preset(name: &str) -> Option<Self> {
        let base = ConstraintSet {
            n0_divides_n: true,
            d_divides_n: true,
            n0_min: 2,
            ..ConstraintSet::default()
        };
        match name {
            "base" => Some(base),
            "center" => Some(ConstraintSet {
                d_divides_n: false,
                dsq_divides_n: true,
                ..base
            }),
            "strict" => Some(ConstraintSet {
                n0_divides_class: true,
                ..base
            }),
            _ => None,
        }
    }

    /// Whether `t`, of dimension `n`, meets every enabled constraint.
    pub fn admits(&self, n: u64, t: &TypeVector) -> bool {
        let n0 = t.pointed_count();
        if t.dimension() != n || n0 < self.n0_min.max(1) {
            return false;
        }
        if self.n0_divides_n && !n.is_multiple_of(n0) {
            return false;
        }
        t.entries().iter().all(|&(d, count)| {
            (!self.d_divides_n || n.is_multiple_of(d))
                && (!self.dsq_divides_n || n.is_multiple_of(d * d))
                && (!self.n0_divides_class || (count * d * d) % n0 == 0)
                && self.max_degree.is_none_or(|m| d <= m)
        })
    }

    fn degree_allowed(&self, n: u64, d: u64) -> bool {
        (!self.d_divides_n || n.is_multiple_of(d))
            && (!self.dsq_divides_n || n.is_multiple_of(d * d))
            && self.max_degree.is_none_or(|m| d <= m)
    }
}

/// Every type of dimension `n` satisfying `c`, sorted, without repeats.
pub fn enumerate_types(
    n: u64,
    c: &ConstraintSet,
    budget: u64,
) -> Result<Vec<TypeVector>, EnumError> {
    if n == 0 {
        return Err(EnumError::InvalidConstraints(
            "dimension must be positive".into(),
        ));
    }
    if n > MAX_ENUMERATION_DIMENSION {
        return Err(EnumError::TargetTooLarge {
            target: n,
            max: MAX_ENUMERATION_DIMENSION,
        });
    }
    if c.max_degree == Some(0) {
        return Err(EnumError::InvalidConstraints(
            "max_degree must be positive".into(),
        ));
    }
    let mut budget = Budget::new(budget);
    let mut out = Vec::new();
    for n0 in c.n0_min.max(1)..=n {
        if c.n0_divides_n && !n.is_multiple_of(n0) {
            continue;
        }
        let mut entries = vec![(1, n0)];
        types_rec(n, c, n0, 2, n - n0, &mut entries, &mut out, &mut budget)?;
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn types_rec(
    n: u64,
    c: &ConstraintSet,
    n0: u64,
    start: u64,
    rem: u64,
    entries: &mut Vec<(u64, u64)>,
    out: &mut Vec<TypeVector>,
    budget: &mut Budget,
) -> Result<(), EnumError> {
    budget.spend()?;
    if rem == 0 {
        out.push(TypeVector::new(entries.iter().copied()));
        return Ok(());
    }
    if c.n0_divides_class && !rem.is_multiple_of(n0) {
        return Ok(());
    }
    let mut d = start;
    while d * d <= rem {
        if c.degree_allowed(n, d) {
            let sq = d * d;
            for count in 1..=rem / sq {
                if c.n0_divides_class && !(count * sq).is_multiple_of(n0) {
                    continue;
                }
                entries.push((d, count));
                types_rec(n, c, n0, d + 1, rem - count * sq, entries, out, budget)?;
                entries.pop();
            }
        }
        d += 1;
    }
    Ok(())
}

/// The twenty admissible types of dimension 90 used as a regression target.
pub fn golden_types_90() -> Vec<TypeVector> {
    parse_type_lines(GOLDEN_90).expect("embedded golden file is well formed")
}

/// One type per nonblank line; `#` starts a comment.
pub fn parse_type_lines(
    text: &str,
) -> Result<Vec<TypeVector>, (usize, crate::type_vector::TypeParseError)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| l.parse().map_err(|e| (i, e)))
        .collect()
}

/// Named pruning predicates; a type is kept when the predicate holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predicate {
    /// Drop types whose non-unit degrees all share a prime `p` (or the given
    /// `p`) while `n_0` is prime to `p`.
    CommonFactor(Option<u64>),
    /// Keep types with `n_0 | n_i d_i^2` for every degree.
    N0DividesClass,
    /// Keep types with at least two invertibles.
    NontrivialPointed,
    /// Keep types in the given set.
    InSet(BTreeSet<TypeVector>),
}

impl Predicate {
    /// `common-factor`, `common-factor:<p>`, `n0-divides-class`,
    /// `nontrivial-pointed` or `in-golden-90`.
    pub fn parse(name: &str) -> Result<Self, EnumError> {
        let unknown = || EnumError::UnknownPredicate(name.to_string());
        match name {
            "common-factor" => Ok(Predicate::CommonFactor(None)),
            "n0-divides-class" => Ok(Predicate::N0DividesClass),
            "nontrivial-pointed" => Ok(Predicate::NontrivialPointed),
            "in-golden-90" => Ok(Predicate::InSet(golden_types_90().into_iter().collect())),
            _ => {
                let p = name.strip_prefix("common-factor:").ok_or_else(unknown)?;
                let p: u64 = p.parse().map_err(|_| unknown())?;
                if p < 2 {
                    return Err(unknown());
                }
                Ok(Predicate::CommonFactor(Some(p)))
            }
        }
    }

    pub fn keeps(&self, t: &TypeVector) -> bool {
        let n0 = t.pointed_count();
        match self {
            Predicate::CommonFactor(p) => {
                let g = t
                    .entries()
                    .iter()
                    .filter(|&&(d, _)| d > 1)
                    .fold(0, |acc, &(d, _)| gcd(acc, d));
                if g <= 1 {
                    return true;
                }
                match p {
                    Some(p) => g % p != 0 || n0.is_multiple_of(*p),
                    None => crate::classify::factorize_u64(g)
                        .iter()
                        .all(|&(q, _)| n0.is_multiple_of(q)),
                }
            }
            Predicate::N0DividesClass => {
                n0 > 0 && t.entries().iter().all(|&(d, n)| (n * d * d) % n0 == 0)
            }
            Predicate::NontrivialPointed => n0 >= 2,
            Predicate::InSet(set) => set.contains(t),
        }
    }
}

/// Stable subsequence of `types` kept by every predicate.
pub fn filter_types(types: &[TypeVector], predicates: &[Predicate]) -> Vec<TypeVector> {
    types
        .iter()
        .filter(|t| predicates.iter().all(|p| p.keeps(t)))
        .cloned()
        .collect()
}
