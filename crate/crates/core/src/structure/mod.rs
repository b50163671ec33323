//! Structural invariants of a fusion ring: invertibles, stabilizers, subring
//! closure, the adjoint subring, universal grading, nilpotency and types.

mod grading;
mod search;

pub use grading::{
    nilpotency_chain, universal_grading, ChainStep, GradingPartition, NilpotencyChain,
};
pub use search::{
    find_subrings_of_type, nichols_richmond, ring_type, type_of, NicholsRichmondReport, NrCase,
    DEFAULT_SEARCH_BUDGET, TYPE_COLLAPSE_TOLERANCE,
};

use std::collections::BTreeSet;

use thiserror::Error;

use crate::group::FiniteGroup;
use crate::ring::{is_invertible, FusionRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("{element} occurs in X⊗X* for X = {object} with multiplicity {multiplicity} outside the expected invertible part")]
    DecompositionMismatch {
        object: usize,
        element: usize,
        multiplicity: u32,
    },
    #[error("universal grading is not well defined at ({i}, {j}): {detail}")]
    GradingInconsistent { i: usize, j: usize, detail: String },
    #[error("subring search exceeded its budget of {budget} closure computations")]
    SearchBudgetExceeded { budget: u64 },
    #[error("precondition not met: {0}")]
    PreconditionUnmet(String),
}

/// A unit-containing, dual-closed, product-closed set of basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subring<'a> {
    parent: &'a FusionRing,
    members: Vec<usize>,
}

impl<'a> Subring<'a> {
    pub fn parent(&self) -> &'a FusionRing {
        self.parent
    }

    /// Sorted basis indices of the parent ring.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.rank()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// The subring as a standalone ring, relabelled in ascending order.
    pub fn to_ring(&self) -> FusionRing {
        self.parent.restrict(&self.members)
    }

    pub fn labels(&self) -> Vec<&'a str> {
        self.members.iter().map(|&i| self.parent.label(i)).collect()
    }
}

/// Least subring containing `seed` and the unit.
pub fn subring_generated<'a>(r: &'a FusionRing, seed: &[usize]) -> Subring<'a> {
    Subring {
        parent: r,
        members: closure(r, seed),
    }
}

pub(crate) fn closure(r: &FusionRing, seed: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; r.rank()];
    let mut members = Vec::new();
    let mut queue = Vec::new();
    let push = |x: usize, inside: &mut Vec<bool>, queue: &mut Vec<usize>| {
        if !inside[x] {
            inside[x] = true;
            queue.push(x);
        }
    };
    push(r.unit(), &mut inside, &mut queue);
    for &s in seed {
        push(s, &mut inside, &mut queue);
    }
    while let Some(x) = queue.pop() {
        members.push(x);
        push(r.dual(x), &mut inside, &mut queue);
        for yi in 0..members.len() {
            let y = members[yi];
            for (a, b) in [(x, y), (y, x)] {
                for &(k, _) in r.product(a, b) {
                    push(k, &mut inside, &mut queue);
                }
            }
        }
    }
    members.sort_unstable();
    members
}

/// Subring generated by every constituent of every `i ⊗ i*`.
pub fn adjoint_subring(r: &FusionRing) -> Subring<'_> {
    let seed: BTreeSet<usize> = (0..r.rank())
        .flat_map(|i| r.product(i, r.dual(i)).iter().map(|&(k, _)| k))
        .collect();
    subring_generated(r, &seed.into_iter().collect::<Vec<_>>())
}

/// Invertible basis elements with their group law.
#[derive(Debug, Clone)]
pub struct PointedPart<'a> {
    pub subring: Subring<'a>,
    /// Element `a` of the group is `subring.members()[a]`.
    pub group: FiniteGroup,
}

/// All `g` with `g ⊗ g* = 1`, which are exactly the basis elements of dimension 1.
pub fn invertibles(r: &FusionRing) -> PointedPart<'_> {
    let members: Vec<usize> = (0..r.rank()).filter(|&g| is_invertible(r, g)).collect();
    let position = |x: usize| {
        members
            .binary_search(&x)
            .expect("product of invertibles is invertible")
    };
    let table = members
        .iter()
        .map(|&g| {
            members
                .iter()
                .map(|&h| match r.product(g, h) {
                    [(k, 1)] => position(*k),
                    other => {
                        panic!("product of invertibles {g}, {h} is not a basis element: {other:?}")
                    }
                })
                .collect()
        })
        .collect();
    let group = FiniteGroup::from_table(table).expect("invertibles of a valid ring form a group");
    PointedPart {
        subring: Subring { parent: r, members },
        group,
    }
}

/// `G[i]`: invertible `g` with `g ⊗ i = i`.
pub fn stabilizer(r: &FusionRing, i: usize) -> Vec<usize> {
    (0..r.rank())
        .filter(|&g| is_invertible(r, g) && r.product(g, i) == [(i, 1)])
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XXStarReport {
    pub object: usize,
    /// Invertible constituents of `i ⊗ i*`; equal to `G[i]`.
    pub invertible_part: Vec<usize>,
    /// Non-invertible constituents with multiplicities.
    pub remainder: Vec<(usize, u32)>,
}

/// Splits `i ⊗ i*` into `G[i]` (each once) and a non-invertible remainder.
pub fn xxstar_check(r: &FusionRing, i: usize) -> Result<XXStarReport, StructureError> {
    let stab = stabilizer(r, i);
    let mut invertible_part = Vec::new();
    let mut remainder = Vec::new();
    for &(k, m) in r.product(i, r.dual(i)) {
        if is_invertible(r, k) {
            if m != 1 || stab.binary_search(&k).is_err() {
                return Err(StructureError::DecompositionMismatch {
                    object: i,
                    element: k,
                    multiplicity: m,
                });
            }
            invertible_part.push(k);
        } else {
            remainder.push((k, m));
        }
    }
    if let Some(&g) = stab
        .iter()
        .find(|g| invertible_part.binary_search(g).is_err())
    {
        return Err(StructureError::DecompositionMismatch {
            object: i,
            element: g,
            multiplicity: 0,
        });
    }
    Ok(XXStarReport {
        object: i,
        invertible_part,
        remainder,
    })
}
