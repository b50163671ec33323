//! Classification rules driven by dimension arithmetic and structural facts.
//!
//! Every rule that applies fires; the outcome is the join of the fired
//! conclusions in the verdict lattice and the trace lists the rules in
//! catalogue order. See `RULES.md` for the catalogue.

use std::fmt;

use thiserror::Error;

use crate::fpdim::{self, DimVector, FpdimError};
use crate::ring::FusionRing;
use crate::structure::{self, NrCase, StructureError};

pub const MAX_DIMENSION: u64 = 1_000_000_000_000;
/// Weakly integral dimensions below this bound always receive a verdict.
pub const COVERAGE_BOUND: u64 = 120;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassifyError {
    #[error("dimension {0} outside 1..=10^12")]
    OutOfRange(u64),
    #[error(transparent)]
    Fpdim(#[from] FpdimError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Prime factorization, primes ascending. `factorize_u64(1)` is empty.
pub fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut p = 2u64;
    let mut remaining_prime = is_prime(n);
    while !remaining_prime && p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
            remaining_prime = is_prime(n);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in WITNESSES {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A global dimension with what is known about the category behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionProfile {
    pub n: u64,
    pub factorization: Vec<(u64, u32)>,
    pub integral: Option<bool>,
    pub weakly_integral: Option<bool>,
    pub weakly_group_theoretical: Option<bool>,
}

impl DimensionProfile {
    pub fn with_flags(
        mut self,
        integral: Option<bool>,
        weakly_integral: Option<bool>,
        wgt: Option<bool>,
    ) -> Self {
        self.integral = integral;
        self.weakly_integral = if integral == Some(true) {
            Some(true)
        } else {
            weakly_integral
        };
        self.weakly_group_theoretical = wgt;
        self
    }

    fn exponents(&self) -> Vec<u32> {
        self.factorization.iter().map(|&(_, e)| e).collect()
    }
}

/// Profile of `n` with every flag unknown.
pub fn factorize(n: u64) -> Result<DimensionProfile, ClassifyError> {
    if n == 0 || n > MAX_DIMENSION {
        return Err(ClassifyError::OutOfRange(n));
    }
    Ok(DimensionProfile {
        n,
        factorization: factorize_u64(n),
        integral: None,
        weakly_integral: None,
        weakly_group_theoretical: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Solvable,
    GroupTheoretical,
    SolvableOrGroupTheoretical,
    WeaklyGroupTheoretical,
    Unknown,
}

impl Outcome {
    /// `self` is at least as strong as `other`.
    pub fn implies(self, other: Outcome) -> bool {
        use Outcome::*;
        match self {
            Solvable => other != GroupTheoretical,
            GroupTheoretical => other != Solvable,
            SolvableOrGroupTheoretical => matches!(
                other,
                SolvableOrGroupTheoretical | WeaklyGroupTheoretical | Unknown
            ),
            WeaklyGroupTheoretical => matches!(other, WeaklyGroupTheoretical | Unknown),
            Unknown => other == Unknown,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Solvable => "Solvable",
            Outcome::GroupTheoretical => "GroupTheoretical",
            Outcome::SolvableOrGroupTheoretical => "SolvableOrGroupTheoretical",
            Outcome::WeaklyGroupTheoretical => "WeaklyGroupTheoretical",
            Outcome::Unknown => "Unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiredRule {
    pub id: &'static str,
    pub citation: &'static str,
    pub conclusion: Outcome,
    pub bindings: Vec<(&'static str, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    /// Maximal fired conclusions; both `Solvable` and `GroupTheoretical` may appear.
    pub maximal: Vec<Outcome>,
    pub trace: Vec<FiredRule>,
    pub annotations: Vec<String>,
}

/// Rule catalogue: `(id, citation)` in firing order.
pub const RULES: [(&str, &str); 11] = [
    ("S1", "pointed => group-theoretical (definition)"),
    ("S2", "cyclically nilpotent => solvable (definition of solvability via cyclic extensions)"),
    ("S3", "nilpotent => weakly group-theoretical (Etingof-Nikshych-Ostrik 2011)"),
    ("R1", "dim = p^a q^b => solvable (Etingof-Nikshych-Ostrik 2011, Burnside-type theorem)"),
    ("R2", "dim = pqr, p < q < r primes => solvable"),
    ("R3", "dim = 84 => solvable or group-theoretical"),
    ("R4", "dim = 90 => solvable"),
    ("R5", "weakly integral, dim < 120 => solvable or group-theoretical"),
    ("R6", "weakly integral, dim < 120 => weakly group-theoretical"),
    ("R7", "weakly group-theoretical, dim odd or dim = 2m with m odd => solvable"),
    ("R8", "weakly group-theoretical, dim = p^2 qr, p, q, r distinct primes => solvable or group-theoretical"),
];

/// Structural facts established for a concrete ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StructuralFacts {
    pub pointed: bool,
    pub nilpotent: bool,
    pub cyclically_nilpotent: bool,
}

struct Engine {
    trace: Vec<FiredRule>,
    wgt: bool,
}

impl Engine {
    fn fire(&mut self, id: &'static str, conclusion: Outcome, bindings: Vec<(&'static str, u64)>) {
        let citation = RULES
            .iter()
            .find(|(r, _)| *r == id)
            .expect("rule in catalogue")
            .1;
        if conclusion.implies(Outcome::WeaklyGroupTheoretical)
            && matches!(id, "S1" | "S2" | "S3" | "R6")
        {
            self.wgt = true;
        }
        self.trace.push(FiredRule {
            id,
            citation,
            conclusion,
            bindings,
        });
    }
}

pub fn classify_dimension(d: &DimensionProfile) -> Verdict {
    classify_with_facts(Some(d), StructuralFacts::default())
}

fn classify_with_facts(d: Option<&DimensionProfile>, facts: StructuralFacts) -> Verdict {
    let mut e = Engine {
        trace: Vec::new(),
        wgt: d.is_some_and(|d| d.weakly_group_theoretical == Some(true)),
    };
    if facts.pointed {
        e.fire("S1", Outcome::GroupTheoretical, vec![]);
    }
    if facts.cyclically_nilpotent {
        e.fire("S2", Outcome::Solvable, vec![]);
    }
    if facts.nilpotent {
        e.fire("S3", Outcome::WeaklyGroupTheoretical, vec![]);
    }
    if let Some(d) = d {
        dimension_rules(d, &mut e);
    }
    let fired: Vec<Outcome> = e.trace.iter().map(|r| r.conclusion).collect();
    let has = |o: Outcome| fired.contains(&o);
    let mut maximal = Vec::new();
    for o in [Outcome::Solvable, Outcome::GroupTheoretical] {
        if has(o) {
            maximal.push(o);
        }
    }
    if maximal.is_empty() {
        if let Some(o) = [
            Outcome::SolvableOrGroupTheoretical,
            Outcome::WeaklyGroupTheoretical,
        ]
        .into_iter()
        .find(|&o| has(o))
        {
            maximal.push(o);
        }
    }
    Verdict {
        outcome: maximal.first().copied().unwrap_or(Outcome::Unknown),
        maximal,
        trace: e.trace,
        annotations: Vec::new(),
    }
}

fn dimension_rules(d: &DimensionProfile, e: &mut Engine) {
    let n = d.n;
    let primes: Vec<u64> = d.factorization.iter().map(|&(p, _)| p).collect();
    let exps = d.exponents();
    let weakly_integral = d.weakly_integral == Some(true);

    if primes.len() <= 2 {
        let mut b = Vec::new();
        if let Some(&(p, a)) = d.factorization.first() {
            b.extend([("p", p), ("a", u64::from(a))]);
        }
        if let Some(&(q, e2)) = d.factorization.get(1) {
            b.extend([("q", q), ("b", u64::from(e2))]);
        }
        e.fire("R1", Outcome::Solvable, b);
    }
    if exps == [1, 1, 1] {
        e.fire(
            "R2",
            Outcome::Solvable,
            vec![("p", primes[0]), ("q", primes[1]), ("r", primes[2])],
        );
    }
    if n == 84 {
        e.fire("R3", Outcome::SolvableOrGroupTheoretical, vec![("N", n)]);
    }
    if n == 90 {
        e.fire("R4", Outcome::Solvable, vec![("N", n)]);
    }
    if weakly_integral && n < COVERAGE_BOUND {
        e.fire("R5", Outcome::SolvableOrGroupTheoretical, vec![("N", n)]);
        e.fire("R6", Outcome::WeaklyGroupTheoretical, vec![("N", n)]);
    }
    if e.wgt && (n % 2 == 1 || n % 4 == 2) {
        e.fire("R7", Outcome::Solvable, vec![("N", n)]);
    }
    if e.wgt && exps.len() == 3 {
        if let Some(i) = exps.iter().position(|&x| x == 2) {
            if exps.iter().filter(|&&x| x == 1).count() == 2 {
                let others: Vec<u64> = (0..3).filter(|&j| j != i).map(|j| primes[j]).collect();
                e.fire(
                    "R8",
                    Outcome::SolvableOrGroupTheoretical,
                    vec![("p", primes[i]), ("q", others[0]), ("r", others[1])],
                );
            }
        }
    }
}

/// Classification of a concrete ring.
#[derive(Debug, Clone)]
pub struct RingClassification {
    pub fpdim: f64,
    pub dims: DimVector,
    /// Present when the global dimension is a certified integer.
    pub profile: Option<DimensionProfile>,
    pub facts: StructuralFacts,
    pub verdict: Verdict,
}

pub fn classify_ring(r: &FusionRing, tol: f64) -> Result<RingClassification, ClassifyError> {
    let dims = fpdim::fp_dim_vector(r, tol)?;
    let fpdim = dims.global();
    let weakly_integral = fpdim::is_weakly_integral(r, &dims)?;
    let integral = fpdim::is_integral(r, &dims)?;
    let pointed = structure::invertibles(r).subring.is_whole();
    let chain = structure::nilpotency_chain(r, &dims)?;
    let facts = StructuralFacts {
        pointed,
        nilpotent: chain.is_nilpotent,
        cyclically_nilpotent: chain.is_cyclically_nilpotent,
    };
    let profile = if weakly_integral {
        Some(factorize(fpdim.round() as u64)?.with_flags(Some(integral), Some(true), None))
    } else {
        None
    };
    let mut verdict = classify_with_facts(profile.as_ref(), facts);
    if integral {
        for x in (0..r.rank()).filter(|&x| dims.certified_integers[x] == Some(2)) {
            verdict.annotations.extend(nichols_richmond_report(
                r,
                &dims,
                x,
                structure::DEFAULT_SEARCH_BUDGET,
            )?);
        }
    }
    Ok(RingClassification {
        fpdim,
        dims,
        profile,
        facts,
        verdict,
    })
}

/// Annotation lines describing which alternatives hold for a 2-dimensional `x`.
pub fn nichols_richmond_report(
    r: &FusionRing,
    dims: &DimVector,
    x: usize,
    budget: u64,
) -> Result<Vec<String>, ClassifyError> {
    let label = r.label(x);
    let report = match structure::nichols_richmond(r, dims, x, budget) {
        Ok(rep) => rep,
        Err(StructureError::PreconditionUnmet(why)) => {
            return Ok(vec![format!("{label}: not applicable ({why})")])
        }
        Err(e) => return Err(e.into()),
    };
    if report.theorem_violated() {
        return Ok(vec![format!(
            "{label}: no alternative holds; the ring is not the Grothendieck ring of a fusion category"
        )]);
    }
    let names = |members: &[usize]| {
        members
            .iter()
            .map(|&i| r.label(i))
            .collect::<Vec<_>>()
            .join(",")
    };
    Ok(report
        .cases
        .iter()
        .map(|c| match c {
            NrCase::NontrivialStabilizer { stabilizer } => format!(
                "{label}: case (1): G[{label}] = {} {{{}}}",
                describe_subgroup(r, stabilizer),
                names(stabilizer)
            ),
            NrCase::ExceptionalSubring { members, kind } => format!(
                "{label}: case (3): subring {{{}}} of type {kind}, dimension {}",
                names(members),
                kind.dimension()
            ),
            NrCase::OctahedralSubring { members, g } => format!(
                "{label}: case (2): subring {{{}}} of type (1,2;2,1;3,2), dimension 24, {} moves {label}",
                names(members),
                r.label(*g)
            ),
        })
        .collect())
}

/// `Z_n` when the given invertibles form a cyclic group, otherwise its order.
fn describe_subgroup(r: &FusionRing, members: &[usize]) -> String {
    let pointed = structure::invertibles(r);
    let order = members.len();
    let cyclic = members.iter().any(|g| {
        let pos = pointed
            .subring
            .members()
            .binary_search(g)
            .expect("stabilizer elements are invertible");
        pointed.group.element_order(pos) == order
    });
    if cyclic {
        format!("Z_{order}")
    } else {
        format!("noncyclic group of order {order}")
    }
}
