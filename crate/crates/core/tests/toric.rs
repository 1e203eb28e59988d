mod common;

use common::*;
use num_integer::Integer;
use qfact_core::{
    anticanonical_degree, build_toric_data, lattice_points, monomials_of_degree, normal_fan,
    picard_number, polytope_degree, CoxMonomial, LatticePoint, LatticePolytope, ToricData,
};
use rand::Rng;
use std::collections::BTreeSet;

fn toric(p: &LatticePolytope) -> ToricData {
    build_toric_data(&normal_fan(p)).unwrap()
}

fn offsets(p: &LatticePolytope) -> Vec<i64> {
    p.facets().iter().map(|f| f.offset).collect()
}

/// Exponent vectors `⟨m, vᵢ⟩ + aᵢ` of the lattice points of `p`.
fn homogenized_points(t: &ToricData, p: &LatticePolytope) -> BTreeSet<Vec<u64>> {
    let a = offsets(p);
    lattice_points(p)
        .iter()
        .map(|m| {
            t.rays()
                .iter()
                .zip(&a)
                .map(|(v, ai)| (m.dot(v) + ai) as u64)
                .collect()
        })
        .collect()
}

/// gcd of all maximal minors of the ray matrix, the order of its torsion cokernel.
fn minor_gcd(rays: &[[i64; 3]]) -> i64 {
    let n = rays.len();
    let mut g = 0i64;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                g = g.gcd(&det3(&[rays[i], rays[j], rays[k]]));
            }
        }
    }
    g
}

/// Integer `m` with `⟨m, vᵢ⟩ = eᵢ` for all rays, by Cramer on three of them.
fn integral_preimage(rays: &[[i64; 3]], e: &[i64]) -> Option<[i64; 3]> {
    let n = rays.len();
    let (i, j, k) = (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
        .find(|&(i, j, k)| det3(&[rays[i], rays[j], rays[k]]) != 0)?;
    let a = [rays[i], rays[j], rays[k]];
    let b = [e[i], e[j], e[k]];
    let d = det3(&a);
    let mut m = [0i64; 3];
    for c in 0..3 {
        let mut ac = a;
        for r in 0..3 {
            ac[r][c] = b[r];
        }
        let num = det3(&ac);
        if num % d != 0 {
            return None;
        }
        m[c] = num / d;
    }
    rays.iter()
        .zip(e)
        .all(|(v, &x)| LatticePoint(m).dot(v) == x)
        .then_some(m)
}

fn test_polytopes() -> Vec<LatticePolytope> {
    let mut rng = rng(31);
    let mut out = vec![simplex(1), simplex(2), simplex(3), cube(1), cube(2)];
    for _ in 0..14 {
        out.push(random_simplex(&mut rng, 2));
    }
    for _ in 0..10 {
        out.push(random_simplicial_polytope(&mut rng, 2));
    }
    out
}

#[test]
fn lattice_points_match_monomials_of_polytope_degree() {
    for p in test_polytopes() {
        let t = toric(&p);
        let beta = polytope_degree(&t, &p).unwrap();
        let monos: BTreeSet<Vec<u64>> = monomials_of_degree(&t, &beta)
            .into_iter()
            .map(|m| m.0)
            .collect();
        assert_eq!(monos, homogenized_points(&t, &p), "{p:?}");
        assert_eq!(monos.len(), lattice_points(&p).len());
    }
}

#[test]
fn monomials_are_sorted_and_of_requested_degree() {
    let mut rng = rng(32);
    for p in test_polytopes() {
        let t = toric(&p);
        let n = t.num_variables();
        for _ in 0..4 {
            let e: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
            let gamma = t.degree_of(&e);
            let monos = monomials_of_degree(&t, &gamma);
            let exps: Vec<u64> = e.iter().map(|&x| x as u64).collect();
            assert!(monos.contains(&CoxMonomial(exps)));
            assert!(monos.windows(2).all(|w| w[0] < w[1]));
            for m in &monos {
                assert_eq!(t.degree_of_monomial(m), gamma);
            }
        }
    }
}

#[test]
fn torsion_order_is_the_maximal_minor_gcd() {
    for p in test_polytopes() {
        let t = toric(&p);
        let order: i64 = t.torsion().iter().product();
        assert_eq!(order, minor_gcd(t.rays()).abs(), "{:?}", t.rays());
        assert_eq!(picard_number(&t), t.num_variables() - 3);
        assert_eq!(t.class_rank(), t.num_variables() - 3);
    }
}

#[test]
fn trivial_class_iff_principal() {
    let mut rng = rng(33);
    let mut zeros = 0;
    for p in test_polytopes() {
        let t = toric(&p);
        let n = t.num_variables();
        for _ in 0..30 {
            let e: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            let principal = integral_preimage(t.rays(), &e).is_some();
            assert_eq!(t.degree_of(&e).is_zero(), principal, "{e:?} {:?}", t.rays());
        }
        // pairings of characters are always principal
        for _ in 0..10 {
            let m = [0; 3].map(|_| rng.gen_range(-5..=5));
            let e = t.ray_pairing(&m);
            assert!(t.degree_of(&e).is_zero());
            assert_eq!(integral_preimage(t.rays(), &e), Some(m));
            zeros += 1;
        }
    }
    assert!(zeros > 0);
}

#[test]
fn degree_is_additive() {
    let mut rng = rng(34);
    for p in test_polytopes() {
        let t = toric(&p);
        let n = t.num_variables();
        for _ in 0..10 {
            let a: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
            let b: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
            let (a, b) = (CoxMonomial(a), CoxMonomial(b));
            let lhs = t.degree_of_monomial(&a.mul(&b));
            let rhs = t.degree_of_monomial(&a).add(&t.degree_of_monomial(&b));
            assert_eq!(lhs, rhs);
            let ai: Vec<i64> = a.0.iter().map(|&x| x as i64).collect();
            assert_eq!(
                t.degree_of(&ai).scale(3),
                t.degree_of_monomial(&a.mul(&a).mul(&a))
            );
        }
    }
}

#[test]
fn polytope_degree_is_translation_invariant_and_linear_in_dilation() {
    let mut rng = rng(35);
    for p in test_polytopes() {
        let t = toric(&p);
        let beta = polytope_degree(&t, &p).unwrap();
        let shift = [0; 3].map(|_| rng.gen_range(-4..=4));
        assert_eq!(
            polytope_degree(&t, &p.translate(shift).unwrap()).unwrap(),
            beta
        );
        for k in 2..=3 {
            assert_eq!(
                polytope_degree(&t, &p.dilate(k).unwrap()).unwrap(),
                beta.scale(k)
            );
        }
    }
}

#[test]
fn anticanonical_is_the_all_ones_divisor() {
    for p in test_polytopes() {
        let t = toric(&p);
        let ones = vec![1; t.num_variables()];
        assert_eq!(anticanonical_degree(&t), t.degree_of(&ones));
    }
    // reflexive simplex: facets at offset one realise β₀ as a polytope degree
    let reflexive = qfact_core::convex_hull(&[
        LatticePoint::new(-1, -1, -1),
        LatticePoint::new(3, -1, -1),
        LatticePoint::new(-1, 3, -1),
        LatticePoint::new(-1, -1, 3),
    ])
    .unwrap();
    assert!(offsets(&reflexive).iter().all(|&a| a == 1));
    let t = toric(&reflexive);
    assert_eq!(
        polytope_degree(&t, &reflexive).unwrap(),
        anticanonical_degree(&t)
    );
    assert_eq!(
        anticanonical_degree(&t),
        polytope_degree(&t, &simplex(4)).unwrap()
    );
}

#[test]
fn degrees_outside_effective_cone_have_no_monomials() {
    let t = toric(&simplex(1));
    let beta = polytope_degree(&t, &simplex(1)).unwrap();
    assert!(monomials_of_degree(&t, &beta.scale(-1)).is_empty());
    assert_eq!(
        monomials_of_degree(&t, &t.zero_degree()),
        vec![CoxMonomial::one(4)]
    );
    // counts for projective space: C(k+3, 3)
    for k in 0..8i64 {
        let c = ((k + 1) * (k + 2) * (k + 3) / 6) as usize;
        assert_eq!(monomials_of_degree(&t, &beta.scale(k)).len(), c);
    }
}
