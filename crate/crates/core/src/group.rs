//! Finite groups given by multiplication tables.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupTableError {
    Empty,
    NotSquare,
    OutOfRange,
    NoIdentity,
    NoInverse(usize),
    NotAssociative(usize, usize, usize),
}

impl fmt::Display for GroupTableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTableError::Empty => write!(f, "empty table"),
            GroupTableError::NotSquare => write!(f, "table is not square"),
            GroupTableError::OutOfRange => write!(f, "table entry out of range"),
            GroupTableError::NoIdentity => write!(f, "no two-sided identity"),
            GroupTableError::NoInverse(a) => write!(f, "element {a} has no inverse"),
            GroupTableError::NotAssociative(a, b, c) => write!(f, "({a}{b}){c} != {a}({b}{c})"),
        }
    }
}

impl FiniteGroup {
    /// Validates a Cayley table (closure, identity, inverses, associativity).
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupTableError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupTableError::Empty);
        }
        if table.iter().any(|row| row.len() != n) {
            return Err(GroupTableError::NotSquare);
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(GroupTableError::OutOfRange);
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or(GroupTableError::NoIdentity)?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or(GroupTableError::NoInverse(a))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupTableError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            table,
            identity,
            inverses,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::from_table(table).expect("cyclic table")
    }

    /// Direct product; element `(a, b)` has index `a * |other| + b`.
    pub fn product(&self, other: &FiniteGroup) -> Self {
        let m = other.order();
        let n = self.order() * m;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table).expect("product table")
    }

    /// Closure of the given permutations (images of `0..degree`) under composition.
    ///
    /// Element 0 is the identity; the remaining elements appear in
    /// breadth-first order of words in the generators. Also returns the
    /// permutations themselves, index-aligned with the group elements.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> (Self, Vec<Vec<usize>>) {
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for g in generators {
                let next = compose(&elements[e], g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        (
            FiniteGroup::from_table(table).expect("permutation group"),
            elements,
        )
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`; element `2u + s` is `(-1)^s` times unit `u` of `1, i, j, k`.
    pub fn quaternion() -> Self {
        // unit products: (sign, unit) for u * v
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let table = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (s, u) = UNIT[x / 2][y / 2];
                        2 * u + (s + x % 2 + y % 2) % 2
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table).expect("quaternion table")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        (0..n).any(|a| self.element_order(a) == n)
    }

    /// Invariant factors `d_1 | d_2 | ... | d_r` of an abelian group, `None` otherwise.
    pub fn invariant_factors(&self) -> Option<Vec<usize>> {
        if !self.is_abelian() {
            return None;
        }
        let n = self.order();
        // For each prime p, the p-primary part is determined by
        // |{x : x^(p^j) = 1}| = p^(sum_i min(j, e_i)).
        let mut primary: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for (p, e) in crate::classify::factorize_u64(n as u64) {
            let p = p as usize;
            let mut counts = vec![0u32; e as usize + 1];
            for (j, c) in counts.iter_mut().enumerate() {
                let pj = p.pow(j as u32);
                let size = (0..n)
                    .filter(|&x| pj.is_multiple_of(self.element_order(x)))
                    .count();
                *c = size.ilog(p);
            }
            // number of cyclic factors of order >= p^j is counts[j] - counts[j-1]
            let mut exps = Vec::new();
            for j in 1..counts.len() {
                let at_least_j = counts[j] - counts[j - 1];
                let at_least_next = if j + 1 < counts.len() {
                    counts[j + 1] - counts[j]
                } else {
                    0
                };
                for _ in 0..(at_least_j - at_least_next) {
                    exps.push(j as u32);
                }
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            primary.insert(p, exps);
        }
        let rank = primary.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1usize; rank];
        for (p, exps) in &primary {
            for (slot, e) in exps.iter().enumerate() {
                factors[slot] *= p.pow(*e);
            }
        }
        factors.reverse();
        Some(factors)
    }

    /// Short structural name: `1`, `Z_n`, `Z_2 x Z_2`, or a description of a nonabelian group.
    pub fn describe(&self) -> String {
        match self.invariant_factors() {
            Some(f) if f.is_empty() => "1".to_string(),
            Some(f) => f
                .iter()
                .map(|d| format!("Z_{d}"))
                .collect::<Vec<_>>()
                .join(" x "),
            None => format!("nonabelian group of order {}", self.order()),
        }
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a * b)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_products() {
        assert!(FiniteGroup::cyclic(6).is_cyclic());
        let v4 = FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2));
        assert!(!v4.is_cyclic());
        assert_eq!(v4.describe(), "Z_2 x Z_2");
        let z6 = FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(3));
        assert!(z6.is_cyclic());
        assert_eq!(z6.describe(), "Z_6");
        assert_eq!(FiniteGroup::cyclic(1).describe(), "1");
        let g = FiniteGroup::cyclic(4).product(&FiniteGroup::cyclic(6));
        assert_eq!(g.invariant_factors(), Some(vec![2, 12]));
    }

    #[test]
    fn nonabelian_groups() {
        let (s3, _) = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.describe(), "nonabelian group of order 6");
        let q8 = FiniteGroup::quaternion();
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_abelian());
        assert_eq!((0..8).filter(|&x| q8.element_order(x) == 4).count(), 6);
    }

    #[test]
    fn rejects_non_groups() {
        assert_eq!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]),
            Err(GroupTableError::NoInverse(1))
        );
        assert_eq!(FiniteGroup::from_table(vec![]), Err(GroupTableError::Empty));
    }
}
