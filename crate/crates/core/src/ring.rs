//! Fusion rings: finite based rings with a distinguished unit, a dual
//! involution and nonnegative integer structure constants `N_{ij}^k`.
//!
//! Structure constants are stored sparsely, one sorted list of `(k, N_{ij}^k)`
//! per ordered pair `(i, j)`. Absent entries are zero.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Largest rank accepted unless the caller raises it.
pub const DEFAULT_MAX_RANK: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: duplicate entry N {i} {j} {k}")]
    DuplicateEntry {
        line: usize,
        i: usize,
        j: usize,
        k: usize,
    },
    #[error("line {line}: index {index} out of range for rank {rank}")]
    IndexOutOfRange {
        line: usize,
        index: usize,
        rank: usize,
    },
    #[error("rank {rank} exceeds the configured maximum {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("invalid ring data: {0}")]
    Invalid(String),
}

/// A finite based ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    /// `products[i * rank + j]` lists `(k, N_{ij}^k)` with nonzero multiplicity, ascending in `k`.
    products: Vec<Vec<(usize, u32)>>,
}

impl FusionRing {
    /// Builds a ring from labels, unit, dual map and nonzero structure constants.
    ///
    /// Only structural well-formedness is checked here (lengths, index ranges,
    /// distinct labels, no repeated entries). Ring axioms are checked by
    /// [`validate_ring`].
    pub fn new<I>(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        entries: I,
    ) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = ((usize, usize, usize), u32)>,
    {
        let rank = labels.len();
        if rank == 0 {
            return Err(RingError::Invalid("rank must be positive".into()));
        }
        if dual.len() != rank {
            return Err(RingError::Invalid(format!(
                "dual has {} entries, expected {rank}",
                dual.len()
            )));
        }
        check_labels(&labels).map_err(RingError::Invalid)?;
        for &idx in dual.iter().chain(std::iter::once(&unit)) {
            if idx >= rank {
                return Err(RingError::IndexOutOfRange {
                    line: 0,
                    index: idx,
                    rank,
                });
            }
        }
        let mut ring = FusionRing {
            labels,
            unit,
            dual,
            products: vec![Vec::new(); rank * rank],
        };
        for ((i, j, k), v) in entries {
            for idx in [i, j, k] {
                if idx >= rank {
                    return Err(RingError::IndexOutOfRange {
                        line: 0,
                        index: idx,
                        rank,
                    });
                }
            }
            if v == 0 {
                continue;
            }
            if ring.nconst(i, j, k) != 0 {
                return Err(RingError::DuplicateEntry { line: 0, i, j, k });
            }
            ring.set_nconst(i, j, k, v);
        }
        Ok(ring)
    }

    /// Group ring `Z[G]` of a finite group with the given element labels.
    pub fn group_ring(
        group: &crate::group::FiniteGroup,
        labels: Vec<String>,
    ) -> Result<Self, RingError> {
        let n = group.order();
        let dual = (0..n).map(|g| group.inverse(g)).collect();
        let entries = (0..n)
            .flat_map(|g| (0..n).map(move |h| (g, h)))
            .map(|(g, h)| ((g, h, group.mul(g, h)), 1));
        FusionRing::new(labels, group.identity(), dual, entries)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Index of a basis element by label, or by decimal index as a fallback.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.labels
            .iter()
            .position(|l| l == name)
            .or_else(|| name.parse::<usize>().ok().filter(|&i| i < self.rank()))
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// `N_{ij}^k`.
    pub fn nconst(&self, i: usize, j: usize, k: usize) -> u32 {
        let row = &self.products[i * self.rank() + j];
        match row.binary_search_by_key(&k, |&(kk, _)| kk) {
            Ok(pos) => row[pos].1,
            Err(_) => 0,
        }
    }

    /// Constituents of `i ⊗ j` with multiplicities, ascending by index.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.products[i * self.rank() + j]
    }

    /// Sets `N_{ij}^k`; a value of zero removes the entry.
    pub fn set_nconst(&mut self, i: usize, j: usize, k: usize, v: u32) {
        let rank = self.rank();
        let row = &mut self.products[i * rank + j];
        match row.binary_search_by_key(&k, |&(kk, _)| kk) {
            Ok(pos) if v == 0 => {
                row.remove(pos);
            }
            Ok(pos) => row[pos].1 = v,
            Err(_) if v == 0 => {}
            Err(pos) => row.insert(pos, (k, v)),
        }
    }

    /// Overwrites the dual of `i` without touching any other index.
    pub fn set_dual(&mut self, i: usize, d: usize) {
        self.dual[i] = d;
    }

    /// All nonzero structure constants in lexicographic `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, u32)> + '_ {
        let rank = self.rank();
        self.products
            .iter()
            .enumerate()
            .flat_map(move |(ij, row)| row.iter().map(move |&(k, v)| (ij / rank, ij % rank, k, v)))
    }

    /// Dense left-multiplication matrix of `i`: entry `(k, j)` is `N_{ij}^k`.
    pub fn left_matrix(&self, i: usize) -> Vec<Vec<u64>> {
        let n = self.rank();
        let mut m = vec![vec![0u64; n]; n];
        for j in 0..n {
            for &(k, v) in self.product(i, j) {
                m[k][j] = u64::from(v);
            }
        }
        m
    }

    /// Restriction to a subset of basis indices, relabelled in ascending order.
    ///
    /// Constituents falling outside `members` are dropped, so the result is a
    /// ring only when `members` spans a subring.
    pub fn restrict(&self, members: &[usize]) -> FusionRing {
        let mut sorted: Vec<usize> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let position = |x: usize| sorted.binary_search(&x).ok();
        let labels = sorted.iter().map(|&i| self.labels[i].clone()).collect();
        let unit = position(self.unit).expect("subset must contain the unit");
        let dual = sorted
            .iter()
            .map(|&i| position(self.dual[i]).expect("subset must be closed under duals"))
            .collect();
        let mut entries = Vec::new();
        for (a, &i) in sorted.iter().enumerate() {
            for (b, &j) in sorted.iter().enumerate() {
                for &(k, v) in self.product(i, j) {
                    if let Some(c) = position(k) {
                        entries.push(((a, b, c), v));
                    }
                }
            }
        }
        FusionRing::new(labels, unit, dual, entries)
            .expect("restriction of a well-formed ring is well-formed")
    }

    /// Tensor product of two based rings; basis `a ⊠ b` ordered row-major.
    pub fn tensor(&self, other: &FusionRing) -> FusionRing {
        let m = other.rank();
        let idx = |a: usize, b: usize| a * m + b;
        let mut labels = Vec::with_capacity(self.rank() * m);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}.{b}"));
            }
        }
        let dual = (0..self.rank())
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .map(|(a, b)| idx(self.dual[a], other.dual[b]))
            .collect();
        let mut entries = Vec::new();
        for (a1, a2, a3, v) in self.entries() {
            for (b1, b2, b3, w) in other.entries() {
                entries.push(((idx(a1, b1), idx(a2, b2), idx(a3, b3)), v * w));
            }
        }
        FusionRing::new(labels, idx(self.unit, other.unit), dual, entries)
            .expect("tensor product of well-formed rings is well-formed")
    }
}

fn check_labels(labels: &[String]) -> Result<(), String> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if l.is_empty() || l.chars().any(char::is_whitespace) || l.contains('#') {
            return Err(format!("invalid label {l:?}"));
        }
        if !seen.insert(l.as_str()) {
            return Err(format!("duplicate label {l:?}"));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    UnitAxiom,
    DualAxiom,
    Associativity,
    FrobeniusSymmetry,
    DualNotInvolution,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::UnitAxiom => "UnitAxiom",
            ViolationKind::DualAxiom => "DualAxiom",
            ViolationKind::Associativity => "Associativity",
            ViolationKind::FrobeniusSymmetry => "FrobeniusSymmetry",
            ViolationKind::DualNotInvolution => "DualNotInvolution",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub indices: Vec<usize>,
    pub kind: ViolationKind,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        write!(f, "{} at ({}): {}", self.kind, idx.join(","), self.detail)
    }
}

/// Checks the based-ring axioms and reports every violated instance.
///
/// The result is sorted lexicographically by index tuple (ties broken by
/// kind). Frobenius symmetry is only checked on triples that avoid the unit:
/// on triples containing it the symmetry is implied by the unit axiom, the
/// duality axiom and the involution property, so a corrupted entry there is
/// reported once under the more specific axiom.
pub fn validate_ring(r: &FusionRing) -> Vec<Violation> {
    let n = r.rank();
    let u = r.unit();
    let mut out = Vec::new();

    for i in 0..n {
        let d = r.dual(i);
        if r.dual(d) != i {
            out.push(violation(
                ViolationKind::DualNotInvolution,
                vec![i],
                format!("dual[dual[{i}]] = {} but expected {i}", r.dual(d)),
            ));
        }
    }
    if r.dual(u) != u {
        out.push(violation(
            ViolationKind::DualNotInvolution,
            vec![u],
            format!("dual of the unit is {} instead of {u}", r.dual(u)),
        ));
    }

    for j in 0..n {
        for k in 0..n {
            let expected = u32::from(j == k);
            let left = r.nconst(u, j, k);
            let right = r.nconst(j, u, k);
            if left != expected {
                out.push(violation(
                    ViolationKind::UnitAxiom,
                    vec![u, j, k],
                    format!("N = {left}, expected {expected}"),
                ));
            }
            if j != u && right != expected {
                out.push(violation(
                    ViolationKind::UnitAxiom,
                    vec![j, u, k],
                    format!("N = {right}, expected {expected}"),
                ));
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            let expected = u32::from(j == r.dual(i));
            let got = r.nconst(i, j, u);
            if got != expected {
                out.push(violation(
                    ViolationKind::DualAxiom,
                    vec![i, j, u],
                    format!("N = {got}, expected {expected}"),
                ));
            }
        }
    }

    // (i ⊗ j) ⊗ k against i ⊗ (j ⊗ k), one coefficient vector per triple.
    let mut lhs = vec![0u64; n];
    let mut rhs = vec![0u64; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                lhs.iter_mut().for_each(|x| *x = 0);
                rhs.iter_mut().for_each(|x| *x = 0);
                for &(m, a) in r.product(i, j) {
                    for &(l, b) in r.product(m, k) {
                        lhs[l] += u64::from(a) * u64::from(b);
                    }
                }
                for &(m, a) in r.product(j, k) {
                    for &(l, b) in r.product(i, m) {
                        rhs[l] += u64::from(a) * u64::from(b);
                    }
                }
                for l in 0..n {
                    if lhs[l] != rhs[l] {
                        out.push(violation(
                            ViolationKind::Associativity,
                            vec![i, j, k, l],
                            format!(
                                "((i j) k) has {} copies of l, (i (j k)) has {}",
                                lhs[l], rhs[l]
                            ),
                        ));
                    }
                }
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == u || j == u || k == u {
                    continue;
                }
                let v = r.nconst(i, j, k);
                let a = r.nconst(r.dual(i), k, j);
                let b = r.nconst(k, r.dual(j), i);
                if v != a || v != b {
                    out.push(violation(
                        ViolationKind::FrobeniusSymmetry,
                        vec![i, j, k],
                        format!("N_ij^k = {v}, N_(i*)k^j = {a}, N_k(j*)^i = {b}"),
                    ));
                }
            }
        }
    }

    out.sort();
    out
}

fn violation(kind: ViolationKind, indices: Vec<usize>, detail: String) -> Violation {
    Violation {
        indices,
        kind,
        detail,
    }
}

/// Constituents of `i ⊗ j` with multiplicities, ascending by index.
pub fn tensor_decompose(r: &FusionRing, i: usize, j: usize) -> Vec<(usize, u32)> {
    r.product(i, j).to_vec()
}

/// Multiplicity of `target` in `i ⊗ j`.
pub fn multiplicity(r: &FusionRing, target: usize, i: usize, j: usize) -> u32 {
    r.nconst(i, j, target)
}

/// Whether `g ⊗ g*` is exactly the unit, i.e. `g` is invertible.
pub fn is_invertible(r: &FusionRing, g: usize) -> bool {
    r.product(g, r.dual(g)) == [(r.unit(), 1)]
}

/// Redundant check of the multiplicity identities every based ring satisfies:
///
/// * `m(X, Y⊗Z) = m(Y*, Z⊗X*) = m(Y, X⊗Z*)`,
/// * `m(X, Y⊗Z) = m(X*, Z*⊗Y*)`,
/// * for invertible `g`, `m(g, X⊗Y)` is 1 when `Y = X*⊗g` and 0 otherwise.
pub fn check_frobenius_identities(r: &FusionRing) -> Vec<Violation> {
    let n = r.rank();
    let d = |i: usize| r.dual(i);
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let m = multiplicity(r, x, y, z);
                let rotated = multiplicity(r, d(y), z, d(x));
                let other = multiplicity(r, y, x, d(z));
                let reversed = multiplicity(r, d(x), d(z), d(y));
                if m != rotated || m != other || m != reversed {
                    out.push(violation(
                        ViolationKind::FrobeniusSymmetry,
                        vec![x, y, z],
                        format!(
                            "m(X,Y⊗Z) = {m}, m(Y*,Z⊗X*) = {rotated}, m(Y,X⊗Z*) = {other}, m(X*,Z*⊗Y*) = {reversed}"
                        ),
                    ));
                }
            }
        }
    }
    let invertibles: Vec<usize> = (0..n).filter(|&g| is_invertible(r, g)).collect();
    for &g in &invertibles {
        for x in 0..n {
            // X* ⊗ g is simple because g is invertible.
            let partner = match r.product(d(x), g) {
                [(k, 1)] => Some(*k),
                _ => None,
            };
            for y in 0..n {
                let m = multiplicity(r, g, x, y);
                let expected = u32::from(partner == Some(y));
                if m != expected {
                    out.push(violation(
                        ViolationKind::DualAxiom,
                        vec![g, x, y],
                        format!("m(g, X⊗Y) = {m} but X*⊗g = Y is {}", expected == 1),
                    ));
                }
            }
        }
    }
    out.sort();
    out
}
