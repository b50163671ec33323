use frw_core::corpus::{self, CharacterTable};
use frw_core::fpdim::{self, certify_integer_dim, fp_dim_vector, fpdim_ring, DimVector};
use frw_core::group::FiniteGroup;
use frw_core::ring::validate_ring;
use frw_core::structure::{self, adjoint_subring, stabilizer, universal_grading};
use frw_core::FusionRing;

const TOL: f64 = 1e-10;

fn corpus_rings() -> Vec<(String, FusionRing)> {
    let mut out: Vec<(String, FusionRing)> = vec![
        ("trivial".into(), corpus::trivial()),
        ("Ising".into(), corpus::ising()),
        ("Fibonacci".into(), corpus::fibonacci()),
        (
            "Ising x Fibonacci".into(),
            corpus::ising().tensor(&corpus::fibonacci()),
        ),
    ];
    for (name, g) in corpus::groups_up_to_order_8() {
        out.push((format!("Z[{name}]"), corpus::group_ring(&g)));
    }
    for t in corpus::character_tables() {
        out.push((format!("Rep({})", t.name), t.ring()));
    }
    out
}

/// Groups of order at most 60 covered by the generators at hand.
fn groups_up_to_60() -> Vec<(String, FiniteGroup)> {
    let mut out = Vec::new();
    for n in 1..=60 {
        out.push((format!("Z_{n}"), FiniteGroup::cyclic(n)));
    }
    for a in 2..=7 {
        for b in a..=60 / a {
            out.push((
                format!("Z_{a} x Z_{b}"),
                FiniteGroup::cyclic(a).product(&FiniteGroup::cyclic(b)),
            ));
        }
    }
    for n in 3..=30 {
        out.push((format!("D_{n}"), corpus::dihedral_group(n)));
    }
    out.push(("Q_8".into(), FiniteGroup::quaternion()));
    out
}

fn assert_dim_invariants(name: &str, r: &FusionRing, dims: &DimVector) {
    assert_eq!(dims.get(r.unit()), 1.0, "{name}");
    for i in 0..r.rank() {
        assert!(dims.get(i) >= 1.0 - TOL, "{name}");
        assert!(
            (dims.get(i) - dims.get(r.dual(i))).abs() <= TOL * 10.0,
            "{name}"
        );
        for j in 0..r.rank() {
            let lhs = dims.get(i) * dims.get(j);
            let rhs: f64 = r
                .product(i, j)
                .iter()
                .map(|&(k, m)| f64::from(m) * dims.get(k))
                .sum();
            assert!(
                (lhs - rhs).abs() <= 1e-8 * lhs.max(1.0),
                "{name}: d{i} d{j} = {lhs}, sum = {rhs}"
            );
        }
    }
}

#[test]
fn corpus_dimensions_are_characters() {
    for (name, r) in corpus_rings() {
        assert!(validate_ring(&r).is_empty(), "{name}");
        let dims = fp_dim_vector(&r, TOL).unwrap();
        assert_dim_invariants(&name, &r, &dims);
        let sum_sq: f64 = dims.values.iter().map(|d| d * d).sum();
        assert!(
            (fpdim_ring(&r).unwrap() - sum_sq).abs() <= 1e-8 * sum_sq,
            "{name}"
        );
    }
}

#[test]
fn group_rings_up_to_order_60() {
    for (name, g) in groups_up_to_60() {
        let r = corpus::group_ring(&g);
        let dims = fp_dim_vector(&r, TOL).unwrap();
        assert!(dims.values.iter().all(|&d| d == 1.0), "{name}");
        assert_eq!(dims.global(), g.order() as f64, "{name}");
        assert!(fpdim::is_integral(&r, &dims).unwrap(), "{name}");
        assert_eq!(adjoint_subring(&r).members(), &[r.unit()], "{name}");
        let grading = universal_grading(&r, &dims).unwrap();
        assert_eq!(grading.order(), g.order(), "{name}");
        assert_eq!(grading.group.is_abelian(), g.is_abelian(), "{name}");
        assert_eq!(
            grading.group.invariant_factors(),
            g.invariant_factors(),
            "{name}"
        );
    }
}

#[test]
fn character_rings_recover_degrees_and_order() {
    for t in corpus::character_tables() {
        let CharacterTable { name, .. } = &t;
        let r = t.ring();
        let dims = fp_dim_vector(&r, TOL).unwrap();
        for (i, d) in t.degrees().into_iter().enumerate() {
            assert!(
                (dims.get(i) - d as f64).abs() <= 1e-9,
                "Rep({name}) index {i}"
            );
            assert!(certify_integer_dim(&r, i, d), "Rep({name}) index {i}");
            assert!(!certify_integer_dim(&r, i, d + 1), "Rep({name}) index {i}");
            assert_eq!(dims.certified_integers[i], Some(d), "Rep({name}) index {i}");
        }
        assert!(
            (fpdim_ring(&r).unwrap() - t.order() as f64).abs() <= 1e-8,
            "Rep({name})"
        );
    }
}

#[test]
fn stabilizer_order_divides_dimension_squared() {
    for (name, r) in corpus_rings() {
        let dims = fp_dim_vector(&r, TOL).unwrap();
        for i in 0..r.rank() {
            let g = stabilizer(&r, i).len() as u64;
            // Square dimensions are integers even when d_i is not (sigma in Ising).
            let sq = (dims.get(i) * dims.get(i)).round() as u64;
            if (dims.get(i) * dims.get(i) - sq as f64).abs() < 1e-6 {
                assert!(fpdim::certify_square_dim(&r, i, sq), "{name} {i}");
                assert_eq!(sq % g, 0, "{name}: |G[{i}]| = {g}, d^2 = {sq}");
            } else {
                assert!(g as f64 <= dims.get(i) * dims.get(i), "{name} {i}");
            }
        }
    }
}

#[test]
fn grading_components_have_equal_dimension() {
    for (name, r) in corpus_rings() {
        let dims = fp_dim_vector(&r, TOL).unwrap();
        let g = universal_grading(&r, &dims).unwrap();
        let neutral = g.block_dimensions[0];
        assert_eq!(g.blocks[0], adjoint_subring(&r).members(), "{name}");
        for d in &g.block_dimensions {
            assert!((d - neutral).abs() <= 1e-6 * neutral, "{name}");
        }
        assert!(
            (g.order() as f64 * neutral - dims.global()).abs() <= 1e-8 * dims.global(),
            "{name}"
        );
    }
}

#[test]
fn ising_grading() {
    let r = corpus::ising();
    let dims = fp_dim_vector(&r, TOL).unwrap();
    let g = universal_grading(&r, &dims).unwrap();
    assert_eq!(g.blocks.len(), 2);
    for d in &g.block_dimensions {
        assert!((d - 2.0).abs() < 1e-9);
    }
    assert!((g.order() as f64 * g.block_dimensions[0] - 4.0).abs() < 1e-9);
}

#[test]
fn rep_a5_type() {
    let dims = fp_dim_vector(&corpus::rep_a5(), TOL).unwrap();
    assert_eq!(structure::ring_type(&dims).to_string(), "(1,1;3,2;4,1;5,1)");
}
