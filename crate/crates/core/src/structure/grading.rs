use crate::fpdim::DimVector;
use crate::group::FiniteGroup;
use crate::ring::FusionRing;

use super::{adjoint_subring, StructureError};

/// Universal grading: components of the basis with the induced group law.
#[derive(Debug, Clone)]
pub struct GradingPartition {
    /// Block 0 is the neutral component; the others are ordered by smallest member.
    pub blocks: Vec<Vec<usize>>,
    /// `block_of[i]` is the block containing basis element `i`.
    pub block_of: Vec<usize>,
    pub group: FiniteGroup,
    /// `sum FPdim(i)^2` over each block.
    pub block_dimensions: Vec<f64>,
}

impl GradingPartition {
    pub fn neutral(&self) -> &[usize] {
        &self.blocks[0]
    }

    pub fn order(&self) -> usize {
        self.blocks.len()
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut y = x;
    while parent[y] != root {
        let next = parent[y];
        parent[y] = root;
        y = next;
    }
    root
}

/// Partition by "some constituent of `i ⊗ j*` lies in the adjoint subring",
/// followed by a check that the partition really is a faithful group grading
/// with components of equal dimension.
pub fn universal_grading(
    r: &FusionRing,
    dims: &DimVector,
) -> Result<GradingPartition, StructureError> {
    let n = r.rank();
    let ad = adjoint_subring(r);
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..n {
            if r.product(i, r.dual(j)).iter().any(|&(k, _)| ad.contains(k)) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    let unit_root = roots[r.unit()];
    let mut order: Vec<usize> = Vec::new();
    for &root in &roots {
        if root != unit_root && !order.contains(&root) {
            order.push(root);
        }
    }
    // roots are block minima, so `order` is already ascending by smallest member
    order.insert(0, unit_root);
    let block_of: Vec<usize> = roots
        .iter()
        .map(|root| order.iter().position(|x| x == root).unwrap())
        .collect();
    let mut blocks = vec![Vec::new(); order.len()];
    for (i, &b) in block_of.iter().enumerate() {
        blocks[b].push(i);
    }

    let inconsistent =
        |i: usize, j: usize, detail: String| StructureError::GradingInconsistent { i, j, detail };
    if blocks[0] != ad.members() {
        let stray = blocks[0]
            .iter()
            .copied()
            .find(|x| !ad.contains(*x))
            .unwrap_or(r.unit());
        return Err(inconsistent(
            stray,
            r.unit(),
            "neutral component differs from the adjoint subring".into(),
        ));
    }

    let m = blocks.len();
    let mut table = vec![vec![usize::MAX; m]; m];
    for i in 0..n {
        for j in 0..n {
            for &(k, _) in r.product(i, j) {
                let slot = &mut table[block_of[i]][block_of[j]];
                if *slot == usize::MAX {
                    *slot = block_of[k];
                } else if *slot != block_of[k] {
                    return Err(inconsistent(
                        i,
                        j,
                        format!("constituents in components {} and {}", *slot, block_of[k]),
                    ));
                }
            }
        }
    }
    for i in 0..n {
        let b = block_of[i];
        if table[b][block_of[r.dual(i)]] != 0 {
            return Err(inconsistent(
                i,
                r.dual(i),
                "dual does not land in the inverse component".into(),
            ));
        }
    }
    if table.iter().flatten().any(|&x| x == usize::MAX) {
        return Err(inconsistent(
            r.unit(),
            r.unit(),
            "component product undefined".into(),
        ));
    }
    let group = FiniteGroup::from_table(table).map_err(|e| {
        inconsistent(
            r.unit(),
            r.unit(),
            format!("component law is not a group: {e}"),
        )
    })?;

    let block_dimensions: Vec<f64> = blocks.iter().map(|b| dims.dimension_of(b)).collect();
    let reference = block_dimensions[0];
    for (b, &d) in block_dimensions.iter().enumerate() {
        if (d - reference).abs() > 1e-6 * reference.max(1.0) {
            return Err(inconsistent(
                blocks[0][0],
                blocks[b][0],
                format!("component dimensions {reference} and {d} differ"),
            ));
        }
    }
    Ok(GradingPartition {
        blocks,
        block_of,
        group,
        block_dimensions,
    })
}

/// One term of the iterated adjoint chain.
#[derive(Debug, Clone)]
pub struct ChainStep {
    /// Basis indices of the parent ring.
    pub members: Vec<usize>,
    /// Universal grading group of this term; its neutral component is the next term.
    pub grading_group: FiniteGroup,
}

#[derive(Debug, Clone)]
pub struct NilpotencyChain {
    pub steps: Vec<ChainStep>,
    pub is_nilpotent: bool,
    pub is_cyclically_nilpotent: bool,
}

/// `R ⊇ R_ad ⊇ (R_ad)_ad ⊇ ...` until the chain stabilizes.
pub fn nilpotency_chain(
    r: &FusionRing,
    dims: &DimVector,
) -> Result<NilpotencyChain, StructureError> {
    let mut steps = Vec::new();
    let mut current: Vec<usize> = (0..r.rank()).collect();
    loop {
        let sub = r.restrict(&current);
        let sub_dims = DimVector {
            values: current.iter().map(|&i| dims.values[i]).collect(),
            tolerance: dims.tolerance,
            certified_integers: current
                .iter()
                .map(|&i| dims.certified_integers[i])
                .collect(),
        };
        let grading = universal_grading(&sub, &sub_dims).map_err(|e| match e {
            StructureError::GradingInconsistent { i, j, detail } => {
                StructureError::GradingInconsistent {
                    i: current[i],
                    j: current[j],
                    detail,
                }
            }
            other => other,
        })?;
        let next: Vec<usize> = grading.neutral().iter().map(|&k| current[k]).collect();
        steps.push(ChainStep {
            members: current.clone(),
            grading_group: grading.group,
        });
        if next.len() == current.len() {
            break;
        }
        current = next;
    }
    let last = steps.last().expect("chain has at least one term");
    let is_nilpotent = last.members.len() == 1;
    let is_cyclically_nilpotent = is_nilpotent && steps.iter().all(|s| s.grading_group.is_cyclic());
    Ok(NilpotencyChain {
        steps,
        is_nilpotent,
        is_cyclically_nilpotent,
    })
}
