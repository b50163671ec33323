use frw_core::modular::{check_all, parse_smatrix, SMatrixData};
use num_complex::Complex64;

const TOL: f64 = 1e-9;

#[test]
fn cyclic_models_pass() {
    for n in 1..=12 {
        let m = SMatrixData::cyclic(n);
        let s = check_all(&m, None, TOL).unwrap();
        assert!(s.pass(), "Z_{n}: {s:?}");
        assert!((m.global_dimension() - n as f64).abs() < 1e-12);
    }
}

#[test]
fn cyclic_models_pass_under_relabelling() {
    for n in 2..=12 {
        // Reverse every non-unit label.
        let perm: Vec<usize> = std::iter::once(0).chain((1..n).rev()).collect();
        assert!(
            check_all(&SMatrixData::cyclic(n).permuted(&perm), None, TOL)
                .unwrap()
                .pass()
        );
    }
}

#[test]
fn single_entry_perturbations_fail() {
    for n in 2..=12 {
        for eps in [1e-3, -1e-3, 0.5] {
            for a in 0..n {
                for b in 0..n {
                    for delta in [Complex64::new(eps, 0.0), Complex64::new(0.0, eps)] {
                        let mut m = SMatrixData::cyclic(n);
                        m.entries[a][b] += delta;
                        assert!(
                            !check_all(&m, None, TOL).unwrap().pass(),
                            "Z_{n} ({a},{b}) += {delta}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn symmetric_perturbations_fail_the_column_checks() {
    for n in 2..=12 {
        for a in 1..n {
            for b in a..n {
                let mut m = SMatrixData::cyclic(n);
                m.entries[a][b] += Complex64::new(1e-3, 0.0);
                if a != b {
                    m.entries[b][a] += Complex64::new(1e-3, 0.0);
                }
                let s = check_all(&m, None, TOL).unwrap();
                assert!(s.invariant_violations.is_empty());
                assert!(
                    s.orthogonality.iter().chain(&s.norm).any(|c| !c.pass),
                    "Z_{n} ({a},{b})"
                );
            }
        }
    }
}

#[test]
fn text_round_trip_of_z4() {
    let text = "smat 4\n1 1 1 1\n1 i -1 -i\n1 -1 1 -1\n1 -i -1 i\ndims 1 1 1 1\nunit 0\n";
    let m = parse_smatrix(text).unwrap();
    let z4 = SMatrixData::cyclic(4);
    for a in 0..4 {
        for b in 0..4 {
            assert!((m.entries[a][b] - z4.entries[a][b]).norm() < 1e-12);
        }
    }
    assert!(check_all(&m, None, TOL).unwrap().pass());
}
