//! Sample rings: group rings, small categorical examples and character rings
//! `Rep(G)` built from character tables.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::group::FiniteGroup;
use crate::ring::FusionRing;

/// A character table: class sizes and one row of values per irreducible character.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub name: String,
    pub class_sizes: Vec<u64>,
    pub characters: Vec<(String, Vec<Complex64>)>,
}

impl CharacterTable {
    pub fn order(&self) -> u64 {
        self.class_sizes.iter().sum()
    }

    /// Irreducible degrees `chi(1)`, in row order.
    pub fn degrees(&self) -> Vec<u64> {
        self.characters
            .iter()
            .map(|(_, v)| v[0].re.round() as u64)
            .collect()
    }

    /// The character ring: `N_ij^k = <chi_i chi_j, chi_k>`.
    ///
    /// Panics when an inner product is not an integer, which means the table is wrong.
    pub fn ring(&self) -> FusionRing {
        let n = self.characters.len();
        let order = self.order() as f64;
        let inner = |f: &dyn Fn(usize) -> Complex64| -> f64 {
            let s: Complex64 = (0..self.class_sizes.len())
                .map(|c| f(c) * self.class_sizes[c] as f64)
                .sum();
            let v = s / order;
            let rounded = v.re.round();
            assert!(
                (v.re - rounded).abs() < 1e-8 && v.im.abs() < 1e-8,
                "{}: non-integral inner product {v}",
                self.name
            );
            rounded
        };
        let chi = |i: usize, c: usize| self.characters[i].1[c];
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let m = inner(&|c| chi(i, c) * chi(j, c) * chi(k, c).conj());
                    if m > 0.0 {
                        entries.push(((i, j, k), m as u32));
                    }
                }
            }
        }
        let dual = (0..n)
            .map(|i| {
                (0..n)
                    .find(|&j| inner(&|c| chi(i, c) * chi(j, c)) == 1.0)
                    .expect("every character has a dual")
            })
            .collect();
        let labels = self.characters.iter().map(|(l, _)| l.clone()).collect();
        FusionRing::new(labels, 0, dual, entries).expect("character ring")
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn row(values: &[f64]) -> Vec<Complex64> {
    values.iter().copied().map(re).collect()
}

fn root_of_unity(k: i64, n: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)
}

pub fn trivial() -> FusionRing {
    FusionRing::new(vec!["1".into()], 0, vec![0], [((0, 0, 0), 1)]).unwrap()
}

/// `Z[G]` with labels `g0, g1, ...` (the identity is labelled `1`).
pub fn group_ring(group: &FiniteGroup) -> FusionRing {
    let labels = (0..group.order())
        .map(|g| {
            if g == group.identity() {
                "1".to_string()
            } else {
                format!("g{g}")
            }
        })
        .collect();
    FusionRing::group_ring(group, labels).unwrap()
}

pub fn cyclic_group_ring(n: usize) -> FusionRing {
    group_ring(&FiniteGroup::cyclic(n))
}

/// Every group of order at most 8, up to isomorphism.
pub fn groups_up_to_order_8() -> Vec<(&'static str, FiniteGroup)> {
    let c = FiniteGroup::cyclic;
    vec![
        ("1", c(1)),
        ("Z_2", c(2)),
        ("Z_3", c(3)),
        ("Z_4", c(4)),
        ("Z_2 x Z_2", c(2).product(&c(2))),
        ("Z_5", c(5)),
        ("Z_6", c(6)),
        ("S_3", symmetric_group_3()),
        ("Z_7", c(7)),
        ("Z_8", c(8)),
        ("Z_4 x Z_2", c(4).product(&c(2))),
        ("Z_2 x Z_2 x Z_2", c(2).product(&c(2)).product(&c(2))),
        ("D_4", dihedral_group(4)),
        ("Q_8", FiniteGroup::quaternion()),
    ]
}

pub fn symmetric_group_3() -> FiniteGroup {
    FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).0
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral_group(n: usize) -> FiniteGroup {
    let rotation: Vec<usize> = (0..n).map(|k| (k + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|k| (n - k) % n).collect();
    FiniteGroup::from_permutations(n, &[rotation, reflection]).0
}

/// Ising fusion rules: `psi^2 = 1`, `psi sigma = sigma`, `sigma^2 = 1 + psi`.
pub fn ising() -> FusionRing {
    let (one, psi, sigma) = (0, 1, 2);
    let mut entries = unit_entries(3);
    entries.extend([
        ((psi, psi, one), 1),
        ((psi, sigma, sigma), 1),
        ((sigma, psi, sigma), 1),
        ((sigma, sigma, one), 1),
        ((sigma, sigma, psi), 1),
    ]);
    FusionRing::new(
        vec!["1".into(), "psi".into(), "sigma".into()],
        0,
        vec![0, 1, 2],
        entries,
    )
    .unwrap()
}

/// Fibonacci fusion rules: `tau^2 = 1 + tau`.
pub fn fibonacci() -> FusionRing {
    let mut entries = unit_entries(2);
    entries.extend([((1, 1, 0), 1), ((1, 1, 1), 1)]);
    FusionRing::new(vec!["1".into(), "tau".into()], 0, vec![0, 1], entries).unwrap()
}

fn unit_entries(rank: usize) -> Vec<((usize, usize, usize), u32)> {
    let mut e = vec![((0, 0, 0), 1)];
    for j in 1..rank {
        e.push(((0, j, j), 1));
        e.push(((j, 0, j), 1));
    }
    e
}

pub fn s3_table() -> CharacterTable {
    CharacterTable {
        name: "S3".into(),
        class_sizes: vec![1, 3, 2],
        characters: vec![
            ("1".into(), row(&[1.0, 1.0, 1.0])),
            ("s".into(), row(&[1.0, -1.0, 1.0])),
            ("X".into(), row(&[2.0, 0.0, -1.0])),
        ],
    }
}

/// Dihedral group of order `2n`; labels `1, s` (and `b, c` for even `n`), then `X1, X2, ...`.
pub fn dihedral_table(n: usize) -> CharacterTable {
    assert!(n >= 3);
    let half = if n.is_multiple_of(2) {
        n / 2 - 1
    } else {
        (n - 1) / 2
    };
    // classes: e, [r^{n/2}], {r^±k} for k = 1..=half, reflection class(es)
    let mut class_sizes = vec![1u64];
    let mut rotation_powers = vec![0usize];
    if n.is_multiple_of(2) {
        class_sizes.push(1);
        rotation_powers.push(n / 2);
    }
    for k in 1..=half {
        class_sizes.push(2);
        rotation_powers.push(k);
    }
    let rotations = class_sizes.len();
    if n.is_multiple_of(2) {
        class_sizes.extend([n as u64 / 2, n as u64 / 2]);
    } else {
        class_sizes.push(n as u64);
    }
    let linear = |rot: &dyn Fn(usize) -> f64, refl: &[f64]| -> Vec<Complex64> {
        let mut v: Vec<f64> = rotation_powers.iter().map(|&k| rot(k)).collect();
        v.extend_from_slice(refl);
        row(&v)
    };
    let parity = |k: usize| if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut characters = vec![];
    if n.is_multiple_of(2) {
        characters.push(("1".to_string(), linear(&|_| 1.0, &[1.0, 1.0])));
        characters.push(("s".to_string(), linear(&|_| 1.0, &[-1.0, -1.0])));
        characters.push(("b".to_string(), linear(&parity, &[1.0, -1.0])));
        characters.push(("c".to_string(), linear(&parity, &[-1.0, 1.0])));
    } else {
        characters.push(("1".to_string(), linear(&|_| 1.0, &[1.0])));
        characters.push(("s".to_string(), linear(&|_| 1.0, &[-1.0])));
    }
    for h in 1..=half {
        let values = linear(
            &|k| 2.0 * (2.0 * PI * (h * k) as f64 / n as f64).cos(),
            &vec![0.0; class_sizes.len() - rotations],
        );
        characters.push((format!("X{h}"), values));
    }
    CharacterTable {
        name: format!("D{n}"),
        class_sizes,
        characters,
    }
}

pub fn q8_table() -> CharacterTable {
    CharacterTable {
        name: "Q8".into(),
        class_sizes: vec![1, 1, 2, 2, 2],
        characters: vec![
            ("1".into(), row(&[1.0, 1.0, 1.0, 1.0, 1.0])),
            ("a".into(), row(&[1.0, 1.0, 1.0, -1.0, -1.0])),
            ("b".into(), row(&[1.0, 1.0, -1.0, 1.0, -1.0])),
            ("c".into(), row(&[1.0, 1.0, -1.0, -1.0, 1.0])),
            ("X".into(), row(&[2.0, -2.0, 0.0, 0.0, 0.0])),
        ],
    }
}

pub fn a4_table() -> CharacterTable {
    let w = root_of_unity(1, 3);
    let one = re(1.0);
    CharacterTable {
        name: "A4".into(),
        class_sizes: vec![1, 3, 4, 4],
        characters: vec![
            ("1".into(), vec![one, one, one, one]),
            ("w".into(), vec![one, one, w, w * w]),
            ("w2".into(), vec![one, one, w * w, w]),
            ("Y".into(), row(&[3.0, -1.0, 0.0, 0.0])),
        ],
    }
}

pub fn s4_table() -> CharacterTable {
    // classes: e, (12), (12)(34), (123), (1234)
    CharacterTable {
        name: "S4".into(),
        class_sizes: vec![1, 6, 3, 8, 6],
        characters: vec![
            ("1".into(), row(&[1.0, 1.0, 1.0, 1.0, 1.0])),
            ("s".into(), row(&[1.0, -1.0, 1.0, 1.0, -1.0])),
            ("X".into(), row(&[2.0, 0.0, 2.0, -1.0, 0.0])),
            ("Y".into(), row(&[3.0, 1.0, -1.0, 0.0, -1.0])),
            ("Ys".into(), row(&[3.0, -1.0, -1.0, 0.0, 1.0])),
        ],
    }
}

pub fn a5_table() -> CharacterTable {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    // classes: e, (12)(34), (123), (12345), (13524)
    CharacterTable {
        name: "A5".into(),
        class_sizes: vec![1, 15, 20, 12, 12],
        characters: vec![
            ("1".into(), row(&[1.0, 1.0, 1.0, 1.0, 1.0])),
            ("Y".into(), row(&[3.0, -1.0, 0.0, phi, 1.0 - phi])),
            ("Y'".into(), row(&[3.0, -1.0, 0.0, 1.0 - phi, phi])),
            ("Z".into(), row(&[4.0, 0.0, 1.0, -1.0, -1.0])),
            ("V".into(), row(&[5.0, 1.0, -1.0, 0.0, 0.0])),
        ],
    }
}

/// Frobenius group `Z_7 ⋊ Z_3` of order 21.
pub fn f21_table() -> CharacterTable {
    let w = root_of_unity(1, 3);
    let eta = Complex64::new(-0.5, 7f64.sqrt() / 2.0);
    let one = re(1.0);
    let zero = re(0.0);
    // classes: e, r-class (3), r^3-class (3), s-class (7), s^2-class (7)
    CharacterTable {
        name: "F21".into(),
        class_sizes: vec![1, 3, 3, 7, 7],
        characters: vec![
            ("1".into(), vec![one, one, one, one, one]),
            ("w".into(), vec![one, one, one, w, w * w]),
            ("w2".into(), vec![one, one, one, w * w, w]),
            ("Y".into(), vec![re(3.0), eta, eta.conj(), zero, zero]),
            ("Y'".into(), vec![re(3.0), eta.conj(), eta, zero, zero]),
        ],
    }
}

/// `SL(2,3)`, the binary tetrahedral group of order 24.
pub fn sl23_table() -> CharacterTable {
    let w = root_of_unity(1, 3);
    let w2 = w * w;
    let one = re(1.0);
    let zero = re(0.0);
    // classes: 1, -1, order 4 (6), order 3 a (4), order 3 b (4), order 6 a (4), order 6 b (4)
    CharacterTable {
        name: "SL(2,3)".into(),
        class_sizes: vec![1, 1, 6, 4, 4, 4, 4],
        characters: vec![
            ("1".into(), vec![one; 7]),
            ("w".into(), vec![one, one, one, w, w2, w, w2]),
            ("w2".into(), vec![one, one, one, w2, w, w2, w]),
            ("Y".into(), row(&[3.0, 3.0, -1.0, 0.0, 0.0, 0.0, 0.0])),
            ("R".into(), row(&[2.0, -2.0, 0.0, -1.0, -1.0, 1.0, 1.0])),
            ("Rw".into(), vec![re(2.0), re(-2.0), zero, -w, -w2, w, w2]),
            ("Rw2".into(), vec![re(2.0), re(-2.0), zero, -w2, -w, w2, w]),
        ],
    }
}

/// `GL(2,3)` of order 48.
pub fn gl23_table() -> CharacterTable {
    let r2 = Complex64::new(0.0, 2f64.sqrt());
    let one = re(1.0);
    let zero = re(0.0);
    // classes: 1, -1, noncentral involutions (12), order 3 (8), order 4 (6),
    // order 6 (8), order 8 a (6), order 8 b (6)
    CharacterTable {
        name: "GL(2,3)".into(),
        class_sizes: vec![1, 1, 12, 8, 6, 8, 6, 6],
        characters: vec![
            ("1".into(), vec![one; 8]),
            (
                "s".into(),
                row(&[1.0, 1.0, -1.0, 1.0, 1.0, 1.0, -1.0, -1.0]),
            ),
            ("X".into(), row(&[2.0, 2.0, 0.0, -1.0, 2.0, -1.0, 0.0, 0.0])),
            (
                "Y".into(),
                row(&[3.0, 3.0, 1.0, 0.0, -1.0, 0.0, -1.0, -1.0]),
            ),
            (
                "Ys".into(),
                row(&[3.0, 3.0, -1.0, 0.0, -1.0, 0.0, 1.0, 1.0]),
            ),
            (
                "R".into(),
                vec![re(2.0), re(-2.0), zero, re(-1.0), zero, one, r2, -r2],
            ),
            (
                "R'".into(),
                vec![re(2.0), re(-2.0), zero, re(-1.0), zero, one, -r2, r2],
            ),
            ("W".into(), row(&[4.0, -4.0, 0.0, 1.0, 0.0, -1.0, 0.0, 0.0])),
        ],
    }
}

pub fn rep_s3() -> FusionRing {
    s3_table().ring()
}

pub fn rep_a5() -> FusionRing {
    a5_table().ring()
}

/// Character tables of nonabelian groups of order at most 60 used as a test corpus.
pub fn character_tables() -> Vec<CharacterTable> {
    let mut tables = vec![
        s3_table(),
        q8_table(),
        a4_table(),
        s4_table(),
        a5_table(),
        f21_table(),
        sl23_table(),
        gl23_table(),
    ];
    tables.extend((4..=30).map(dihedral_table));
    tables
}
