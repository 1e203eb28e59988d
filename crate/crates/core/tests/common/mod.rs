#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use qfact_core::{convex_hull, is_simplicial, normal_fan, LatticePoint, LatticePolytope};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Textbook Gauss–Jordan over ℚ; shares no code with the crate's elimination.
pub fn naive_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..m {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..n {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
        if r == m {
            break;
        }
    }
    r
}

pub fn random_int_rows(rng: &mut impl Rng, m: usize, n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..m)
        .map(|_| (0..n).map(|_| rng.gen_range(lo..=hi)).collect())
        .collect()
}

pub fn to_rat(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| q(v)).collect())
        .collect()
}

/// Random matrix of rank at most `k`: product of `m×k` and `k×n` factors.
pub fn low_rank_rows(rng: &mut impl Rng, m: usize, n: usize, k: usize) -> Vec<Vec<i64>> {
    let a = random_int_rows(rng, m, k, -3, 3);
    let b = random_int_rows(rng, k, n, -3, 3);
    (0..m)
        .map(|i| {
            (0..n)
                .map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum())
                .collect()
        })
        .collect()
}

pub fn big_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn det3(a: &[[i64; 3]; 3]) -> i64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Random element of GL(3, ℤ) with small entries.
pub fn random_unimodular(rng: &mut impl Rng) -> [[i64; 3]; 3] {
    loop {
        let mut a = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        let mut perm = [0usize, 1, 2];
        perm.shuffle(rng);
        a = [a[perm[0]], a[perm[1]], a[perm[2]]];
        for _ in 0..3 {
            let i = rng.gen_range(0..3);
            let j = (i + rng.gen_range(1..3)) % 3;
            let k = rng.gen_range(-1..=1);
            for c in 0..3 {
                a[i][c] += k * a[j][c];
            }
        }
        if rng.gen_bool(0.5) {
            for c in 0..3 {
                a[0][c] = -a[0][c];
            }
        }
        if a.iter().flatten().all(|v: &i64| v.abs() <= 2) {
            assert_eq!(det3(&a).abs(), 1);
            return a;
        }
    }
}

pub fn random_points(rng: &mut impl Rng, count: usize, bound: i64) -> Vec<LatticePoint> {
    (0..count)
        .map(|_| {
            LatticePoint::new(
                rng.gen_range(-bound..=bound),
                rng.gen_range(-bound..=bound),
                rng.gen_range(-bound..=bound),
            )
        })
        .collect()
}

/// Random full-dimensional polytope with vertices in `[-bound, bound]³`.
pub fn random_polytope(rng: &mut impl Rng, bound: i64) -> LatticePolytope {
    loop {
        let n = rng.gen_range(4..=9);
        if let Ok(p) = convex_hull(&random_points(rng, n, bound)) {
            return p;
        }
    }
}

pub fn random_simplicial_polytope(rng: &mut impl Rng, bound: i64) -> LatticePolytope {
    loop {
        let p = random_polytope(rng, bound);
        if is_simplicial(&normal_fan(&p)) {
            return p;
        }
    }
}

pub fn random_simplex(rng: &mut impl Rng, bound: i64) -> LatticePolytope {
    loop {
        if let Ok(p) = convex_hull(&random_points(rng, 4, bound)) {
            if p.vertices().len() == 4 {
                return p;
            }
        }
    }
}

pub fn simplex(k: i64) -> LatticePolytope {
    convex_hull(&[
        LatticePoint::new(0, 0, 0),
        LatticePoint::new(k, 0, 0),
        LatticePoint::new(0, k, 0),
        LatticePoint::new(0, 0, k),
    ])
    .unwrap()
}

pub fn cube(k: i64) -> LatticePolytope {
    let mut v = Vec::new();
    for x in [0, k] {
        for y in [0, k] {
            for z in [0, k] {
                v.push(LatticePoint::new(x, y, z));
            }
        }
    }
    convex_hull(&v).unwrap()
}

pub fn octahedron() -> LatticePolytope {
    convex_hull(&[
        LatticePoint::new(1, 0, 0),
        LatticePoint::new(-1, 0, 0),
        LatticePoint::new(0, 1, 0),
        LatticePoint::new(0, -1, 0),
        LatticePoint::new(0, 0, 1),
        LatticePoint::new(0, 0, -1),
    ])
    .unwrap()
}

pub fn one() -> BigRational {
    BigRational::one()
}
