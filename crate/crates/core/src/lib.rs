//! Finite based rings: validation, Frobenius–Perron dimensions, structure,
//! type enumeration, S-matrix checks and classification verdicts.

pub mod classify;
pub mod corpus;
pub mod enumeration;
pub mod exact;
pub mod fpdim;
pub mod frt;
pub mod group;
pub mod modular;
pub mod ring;
pub mod structure;
pub mod type_vector;

pub use frt::{parse_ring, serialize_ring};
pub use ring::{FusionRing, RingError, Violation, ViolationKind};
pub use type_vector::TypeVector;

/// A real with 12 significant digits, the precision used in every report.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() {
            "0".to_string()
        } else {
            x.to_string()
        };
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        "0".to_string()
    } else {
        s
    }
}
