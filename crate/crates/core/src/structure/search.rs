use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::fpdim::DimVector;
use crate::ring::FusionRing;
use crate::type_vector::{RealType, TypeVector};

use super::{closure, stabilizer, StructureError};

pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;
/// Relative tolerance under which two dimensions count as the same degree.
pub const TYPE_COLLAPSE_TOLERANCE: f64 = 1e-6;

/// Type of the given members: dimensions grouped into degrees, ascending.
pub fn type_of(dims: &DimVector, members: &[usize]) -> RealType {
    let mut values: Vec<f64> = members.iter().map(|&i| dims.values[i]).collect();
    values.sort_by(f64::total_cmp);
    let mut entries: Vec<(f64, u64)> = Vec::new();
    for v in values {
        match entries.last_mut() {
            Some((d, n)) if (v - *d).abs() <= TYPE_COLLAPSE_TOLERANCE * *d => *n += 1,
            _ => entries.push((v, 1)),
        }
    }
    RealType { entries }
}

pub fn ring_type(dims: &DimVector) -> RealType {
    type_of(dims, &(0..dims.values.len()).collect::<Vec<_>>())
}

/// Degree of every basis element when the ring is integral.
fn integer_degrees(dims: &DimVector) -> Option<Vec<u64>> {
    dims.values
        .iter()
        .map(|&v| {
            let r = v.round();
            ((v - r).abs() <= TYPE_COLLAPSE_TOLERANCE * r).then_some(r as u64)
        })
        .collect()
}

/// All subrings whose type is `t`, in ascending order of their member lists.
///
/// Explores the lattice of subrings from `{unit}` by adjoining one element at
/// a time. A subring already holding more elements of some degree than `t`
/// allows (or a degree `t` lacks) is not extended, since every larger
/// subring inherits the excess.
pub fn find_subrings_of_type(
    r: &FusionRing,
    dims: &DimVector,
    t: &TypeVector,
    budget: u64,
) -> Result<Vec<Vec<usize>>, StructureError> {
    let Some(degrees) = integer_degrees(dims) else {
        // Non-integral elements can never belong to a subring of integer type,
        // but they may still be absent from some subring; fall back to real comparison.
        return find_by_real_type(r, dims, t, budget);
    };
    let allowed: BTreeMap<u64, u64> = t.entries().iter().copied().collect();
    let fits = |members: &[usize]| {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for &i in members {
            *counts.entry(degrees[i]).or_default() += 1;
        }
        counts
            .iter()
            .all(|(d, n)| allowed.get(d).is_some_and(|cap| n <= cap))
    };
    let exact = |members: &[usize]| TypeVector::new(members.iter().map(|&i| (degrees[i], 1))) == *t;
    search(r, budget, fits, exact)
}

fn find_by_real_type(
    r: &FusionRing,
    dims: &DimVector,
    t: &TypeVector,
    budget: u64,
) -> Result<Vec<Vec<usize>>, StructureError> {
    let target_dim = t.dimension() as f64;
    let fits = |members: &[usize]| {
        dims.dimension_of(members) <= target_dim * (1.0 + TYPE_COLLAPSE_TOLERANCE)
    };
    let exact = |members: &[usize]| {
        type_of(dims, members)
            .to_integral(TYPE_COLLAPSE_TOLERANCE)
            .as_ref()
            == Some(t)
    };
    search(r, budget, fits, exact)
}

fn search(
    r: &FusionRing,
    budget: u64,
    fits: impl Fn(&[usize]) -> bool,
    exact: impl Fn(&[usize]) -> bool,
) -> Result<Vec<Vec<usize>>, StructureError> {
    let mut spent = 0u64;
    let start = closure(r, &[]);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut found = Vec::new();
    while let Some(s) = queue.pop_front() {
        if !fits(&s) {
            continue;
        }
        if exact(&s) {
            found.push(s.clone());
        }
        for x in 0..r.rank() {
            if s.binary_search(&x).is_ok() {
                continue;
            }
            spent += 1;
            if spent > budget {
                return Err(StructureError::SearchBudgetExceeded { budget });
            }
            let mut seed = s.clone();
            seed.push(x);
            let next = closure(r, &seed);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    found.sort();
    Ok(found)
}

/// One witnessed alternative for a 2-dimensional basis element `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NrCase {
    /// `G[X]` is nontrivial.
    NontrivialStabilizer { stabilizer: Vec<usize> },
    /// A subring of type `(1,3;3,1)` or `(1,1;3,2;4,1;5,1)`.
    ExceptionalSubring {
        members: Vec<usize>,
        kind: TypeVector,
    },
    /// A subring of type `(1,2;2,1;3,2)` avoiding `X` whose order-2
    /// invertible `g` moves `X`.
    OctahedralSubring { members: Vec<usize>, g: usize },
}

impl NrCase {
    /// Case number in the usual numbering of the trichotomy.
    pub fn number(&self) -> u8 {
        match self {
            NrCase::NontrivialStabilizer { .. } => 1,
            NrCase::OctahedralSubring { .. } => 2,
            NrCase::ExceptionalSubring { .. } => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NicholsRichmondReport {
    pub object: usize,
    pub stabilizer: Vec<usize>,
    /// Every case that holds, found in the order 1, 3, 2.
    pub cases: Vec<NrCase>,
}

impl NicholsRichmondReport {
    /// No alternative holds, so the ring cannot come from a fusion category.
    pub fn theorem_violated(&self) -> bool {
        self.cases.is_empty()
    }
}

/// Case analysis for a basis element of dimension 2 in an integral ring.
pub fn nichols_richmond(
    r: &FusionRing,
    dims: &DimVector,
    x: usize,
    budget: u64,
) -> Result<NicholsRichmondReport, StructureError> {
    if x >= r.rank() {
        return Err(StructureError::PreconditionUnmet(format!(
            "no basis element {x}"
        )));
    }
    if dims.certified_integers.iter().any(Option::is_none) {
        return Err(StructureError::PreconditionUnmet(
            "ring is not integral".into(),
        ));
    }
    if dims.certified_integers[x] != Some(2) {
        return Err(StructureError::PreconditionUnmet(format!(
            "{} does not have dimension 2",
            r.label(x)
        )));
    }
    let stab = stabilizer(r, x);
    let mut cases = Vec::new();
    if stab.len() > 1 {
        cases.push(NrCase::NontrivialStabilizer {
            stabilizer: stab.clone(),
        });
    }
    for kind in ["(1,3;3,1)", "(1,1;3,2;4,1;5,1)"] {
        let kind: TypeVector = kind.parse().expect("literal type");
        for members in find_subrings_of_type(r, dims, &kind, budget)? {
            cases.push(NrCase::ExceptionalSubring {
                members,
                kind: kind.clone(),
            });
        }
    }
    let octahedral: TypeVector = "(1,2;2,1;3,2)".parse().expect("literal type");
    for members in find_subrings_of_type(r, dims, &octahedral, budget)? {
        if members.binary_search(&x).is_ok() {
            continue;
        }
        let g = members
            .iter()
            .copied()
            .find(|&g| g != r.unit() && dims.certified_integers[g] == Some(1));
        if let Some(g) = g {
            if r.product(g, x) != [(x, 1)] {
                cases.push(NrCase::OctahedralSubring { members, g });
            }
        }
    }
    Ok(NicholsRichmondReport {
        object: x,
        stabilizer: stab,
        cases,
    })
}
