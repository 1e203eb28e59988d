//! Cox-ring grading of the toric variety of a complete simplicial fan.
//!
//! With rays `v₁..vₙ` the class group is the cokernel of the ray matrix
//! `B: M = ℤ³ → ℤⁿ, m ↦ (⟨m, vᵢ⟩)ᵢ`. A Smith decomposition `U·B·V = D` splits
//! it into torsion (rows of `U` against invariant factors `dᵢ > 1`) and a free
//! part (the last `n − 3` rows of `U`). The free coordinates are then put in
//! Hermite normal form, so degrees do not depend on the choices made by the
//! elimination.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geom::{det3, is_simplicial, normal_fan, LatticePolytope, NormalFan};
use crate::linalg::{hermite_normal_form, smith_normal_form, solve_integer, IntMatrix};

/// An element of `Cl(Σ) ≅ ℤ^r ⊕ ⨁ ℤ/dⱼ`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedDegree {
    free: Vec<i64>,
    torsion: Vec<i64>,
    moduli: Vec<i64>,
}

impl GradedDegree {
    pub fn new(free: Vec<i64>, torsion: Vec<i64>, moduli: Vec<i64>) -> Self {
        assert_eq!(torsion.len(), moduli.len());
        let torsion = torsion
            .iter()
            .zip(&moduli)
            .map(|(t, m)| t.rem_euclid(*m))
            .collect();
        GradedDegree {
            free,
            torsion,
            moduli,
        }
    }

    pub fn free_part(&self) -> &[i64] {
        &self.free
    }

    /// Residues in `[0, dⱼ)`.
    pub fn torsion_part(&self) -> &[i64] {
        &self.torsion
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|&c| c == 0) && self.torsion.iter().all(|&c| c == 0)
    }

    fn combine(&self, other: &GradedDegree, k: i64) -> GradedDegree {
        assert_eq!(
            self.moduli, other.moduli,
            "degrees from different class groups"
        );
        GradedDegree::new(
            self.free
                .iter()
                .zip(&other.free)
                .map(|(a, b)| a + k * b)
                .collect(),
            self.torsion
                .iter()
                .zip(&other.torsion)
                .map(|(a, b)| a + k * b)
                .collect(),
            self.moduli.clone(),
        )
    }

    pub fn add(&self, other: &GradedDegree) -> GradedDegree {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &GradedDegree) -> GradedDegree {
        self.combine(other, -1)
    }

    pub fn scale(&self, k: i64) -> GradedDegree {
        GradedDegree::new(
            self.free.iter().map(|a| k * a).collect(),
            self.torsion.iter().map(|a| k * a).collect(),
            self.moduli.clone(),
        )
    }
}

impl fmt::Debug for GradedDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GradedDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.free.len() == 1 {
            write!(f, "{}", self.free[0])?;
        } else {
            write!(f, "(")?;
            for (i, c) in self.free.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")?;
        }
        for (i, (t, m)) in self.torsion.iter().zip(&self.moduli).enumerate() {
            let sep = if i == 0 { "; " } else { ", " };
            write!(f, "{sep}{t} mod {m}")?;
        }
        Ok(())
    }
}

/// Exponent vector of a monomial of the Cox ring `S(Σ) = ℂ[z₁..zₙ]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoxMonomial(pub Vec<u64>);

impl CoxMonomial {
    pub fn one(n: usize) -> Self {
        CoxMonomial(vec![0; n])
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn mul(&self, other: &CoxMonomial) -> CoxMonomial {
        CoxMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricData {
    rays: Vec<[i64; 3]>,
    maximal_cones: Vec<Vec<usize>>,
    smith_diagonal: Vec<BigInt>,
    moduli: Vec<i64>,
    free_rows: Vec<Vec<i64>>,
    torsion_rows: Vec<Vec<i64>>,
    variable_degrees: Vec<GradedDegree>,
}

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or(Error::Overflow)
}

/// Toric data of a complete simplicial fan.
pub fn build_toric_data(fan: &NormalFan) -> Result<ToricData> {
    if !is_simplicial(fan) {
        return Err(Error::NotSimplicial);
    }
    let n = fan.rays.len();
    let b = IntMatrix::from_rows(&fan.rays)?;
    let snf = smith_normal_form(&b);
    if snf.rank() != 3 {
        return Err(Error::IncompleteFan);
    }
    let diagonal = snf.diagonal();

    let mut moduli = Vec::new();
    let mut torsion_rows = Vec::new();
    for (i, d) in diagonal.iter().enumerate() {
        if d > &BigInt::one() {
            let row = snf
                .u
                .row(i)
                .iter()
                .map(|x| to_i64(&x.mod_floor(d)))
                .collect::<Result<Vec<_>>>()?;
            moduli.push(to_i64(d)?);
            torsion_rows.push(row);
        }
    }

    let free = IntMatrix::from_fn(n - 3, n, |i, j| snf.u[(i + 3, j)].clone());
    let h = hermite_normal_form(&free);
    let free_rows = (0..n - 3)
        .map(|i| h.row(i).iter().map(to_i64).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;

    let mut data = ToricData {
        rays: fan.rays.clone(),
        maximal_cones: fan.maximal_cones.clone(),
        smith_diagonal: diagonal,
        moduli,
        free_rows,
        torsion_rows,
        variable_degrees: Vec::new(),
    };
    data.variable_degrees = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            data.degree_of(&e)
        })
        .collect();
    Ok(data)
}

impl ToricData {
    pub fn rays(&self) -> &[[i64; 3]] {
        &self.rays
    }

    pub fn maximal_cones(&self) -> &[Vec<usize>] {
        &self.maximal_cones
    }

    pub fn num_variables(&self) -> usize {
        self.rays.len()
    }

    /// Rank of the free part of `Cl(Σ)`, `n − 3`.
    pub fn class_rank(&self) -> usize {
        self.free_rows.len()
    }

    /// Invariant factors `> 1` of the torsion subgroup.
    pub fn torsion(&self) -> &[i64] {
        &self.moduli
    }

    /// Diagonal of the Smith form of the `n × 3` ray matrix.
    pub fn smith_diagonal(&self) -> &[BigInt] {
        &self.smith_diagonal
    }

    pub fn variable_degrees(&self) -> &[GradedDegree] {
        &self.variable_degrees
    }

    /// Free coordinates of the degree map, one row per free coordinate.
    pub fn free_degree_rows(&self) -> &[Vec<i64>] {
        &self.free_rows
    }

    /// Torsion coordinates of the degree map, read modulo [`Self::torsion`].
    pub fn torsion_degree_rows(&self) -> &[Vec<i64>] {
        &self.torsion_rows
    }

    pub fn zero_degree(&self) -> GradedDegree {
        GradedDegree::new(
            vec![0; self.class_rank()],
            vec![0; self.moduli.len()],
            self.moduli.clone(),
        )
    }

    /// Class of the divisor `Σ eᵢ Dᵢ`; entries may be negative.
    pub fn degree_of(&self, e: &[i64]) -> GradedDegree {
        assert_eq!(e.len(), self.num_variables());
        let apply = |row: &Vec<i64>| row.iter().zip(e).map(|(a, b)| a * b).sum::<i64>();
        GradedDegree::new(
            self.free_rows.iter().map(apply).collect(),
            self.torsion_rows.iter().map(apply).collect(),
            self.moduli.clone(),
        )
    }

    pub fn degree_of_monomial(&self, m: &CoxMonomial) -> GradedDegree {
        let e: Vec<i64> = m.0.iter().map(|&x| x as i64).collect();
        self.degree_of(&e)
    }

    /// `m ↦ (⟨m, vᵢ⟩)ᵢ`
    pub fn ray_pairing(&self, m: &[i64; 3]) -> Vec<i64> {
        self.rays
            .iter()
            .map(|v| v[0] * m[0] + v[1] * m[1] + v[2] * m[2])
            .collect()
    }
}

/// `β₀ = −deg K`, the sum of all variable degrees.
pub fn anticanonical_degree(t: &ToricData) -> GradedDegree {
    t.variable_degrees
        .iter()
        .fold(t.zero_degree(), |acc, d| acc.add(d))
}

/// Class of `Σ aᵢ Dᵢ` where `aᵢ` is the facet offset of `p` along ray `vᵢ`.
pub fn polytope_degree(t: &ToricData, p: &LatticePolytope) -> Result<GradedDegree> {
    let offsets = facet_offsets(t, p)?;
    Ok(t.degree_of(&offsets))
}

/// Facet offsets of `p` in ray order, checking the rays agree with `t`.
pub(crate) fn facet_offsets(t: &ToricData, p: &LatticePolytope) -> Result<Vec<i64>> {
    if normal_fan(p).rays != t.rays {
        return Err(Error::FanMismatch);
    }
    Ok(p.facets().iter().map(|f| f.offset).collect())
}

pub fn picard_number(t: &ToricData) -> usize {
    t.class_rank()
}

/// Integer exponent vector (possibly with negative entries) of degree `gamma`.
fn representative(t: &ToricData, gamma: &GradedDegree) -> Option<Vec<BigInt>> {
    let n = t.num_variables();
    let r = t.class_rank();
    let k = t.moduli.len();
    // [free 0; torsion diag(moduli)] · (e, s) = (γ_free, γ_torsion)
    let a = IntMatrix::from_fn(r + k, n + k, |i, j| {
        if i < r {
            if j < n {
                t.free_rows[i][j].into()
            } else {
                BigInt::zero()
            }
        } else if j < n {
            t.torsion_rows[i - r][j].into()
        } else if j - n == i - r {
            t.moduli[i - r].into()
        } else {
            BigInt::zero()
        }
    });
    let b: Vec<BigInt> = gamma
        .free
        .iter()
        .chain(&gamma.torsion)
        .map(|&c| c.into())
        .collect();
    let mut x = solve_integer(&a, &b).ok()??;
    x.truncate(n);
    Some(x)
}

/// All monomials of degree `gamma`, ascending lexicographically.
///
/// From one integer representative `e₀` the monomials are exactly the
/// nonnegative vectors `e₀ + B·m`, so this enumerates the lattice points of
/// the bounded polyhedron `{ m : B·m ≥ −e₀ }`.
pub fn monomials_of_degree(t: &ToricData, gamma: &GradedDegree) -> Vec<CoxMonomial> {
    if gamma.moduli != t.moduli || gamma.free.len() != t.class_rank() {
        return Vec::new();
    }
    let Some(e0) = representative(t, gamma) else {
        return Vec::new();
    };
    let Some((lo, hi)) = bounding_box(&t.rays, &e0) else {
        return Vec::new();
    };

    // recentre at the box corner so the scan runs in machine integers
    let shift: Vec<BigInt> = t
        .rays
        .iter()
        .zip(&e0)
        .map(|(v, e)| {
            let (v, lo) = (v.map(i128::from), lo.map(i128::from));
            e + BigInt::from(v[0] * lo[0] + v[1] * lo[1] + v[2] * lo[2])
        })
        .collect();
    let Some(base) = shift
        .iter()
        .map(|s| s.to_i128())
        .collect::<Option<Vec<i128>>>()
    else {
        return Vec::new();
    };

    let rays: Vec<[i128; 3]> = t.rays.iter().map(|v| v.map(i128::from)).collect();
    let mut out = Vec::new();
    let mut exps = vec![0i128; rays.len()];
    for x in 0..=(hi[0] - lo[0]) as i128 {
        for y in 0..=(hi[1] - lo[1]) as i128 {
            'z: for z in 0..=(hi[2] - lo[2]) as i128 {
                for (i, v) in rays.iter().enumerate() {
                    let e = base[i] + v[0] * x + v[1] * y + v[2] * z;
                    if e < 0 {
                        continue 'z;
                    }
                    exps[i] = e;
                }
                out.push(CoxMonomial(exps.iter().map(|&e| e as u64).collect()));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Integer box containing `{ m ∈ ℚ³ : ⟨m, vᵢ⟩ ≥ −e₀ᵢ }`, from its vertices.
/// `None` when the polyhedron is empty.
fn bounding_box(rays: &[[i64; 3]], e0: &[BigInt]) -> Option<([i64; 3], [i64; 3])> {
    let n = rays.len();
    let mut lo: [Option<BigInt>; 3] = Default::default();
    let mut hi: [Option<BigInt>; 3] = Default::default();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (&rays[i], &rays[j], &rays[k]);
                let det = det3(a, b, c);
                if det == 0 {
                    continue;
                }
                // rows a, b, c; m = adj · rhs / det with rhs = −e₀
                let rhs = [-&e0[i], -&e0[j], -&e0[k]];
                let cof = |p: &[i64; 3], q: &[i64; 3]| -> [BigInt; 3] {
                    let (p, q) = (p.map(i128::from), q.map(i128::from));
                    [
                        BigInt::from(p[1] * q[2] - p[2] * q[1]),
                        BigInt::from(p[2] * q[0] - p[0] * q[2]),
                        BigInt::from(p[0] * q[1] - p[1] * q[0]),
                    ]
                };
                // columns of the inverse (times det) are b×c, c×a, a×b
                let cols = [cof(b, c), cof(c, a), cof(a, b)];
                let num: [BigInt; 3] = core::array::from_fn(|r| {
                    &cols[0][r] * &rhs[0] + &cols[1][r] * &rhs[1] + &cols[2][r] * &rhs[2]
                });
                let det = BigInt::from(det);
                let feasible = rays.iter().zip(e0).all(|(v, e)| {
                    let lhs: BigInt = (0..3).map(|r| &num[r] * v[r]).sum();
                    // ⟨num/det, v⟩ ≥ −e
                    if det.is_positive() {
                        lhs >= -(e * &det)
                    } else {
                        lhs <= -(e * &det)
                    }
                });
                if !feasible {
                    continue;
                }
                for r in 0..3 {
                    let fl = num[r].div_floor(&det);
                    let ce = -((-&num[r]).div_floor(&det));
                    if lo[r].as_ref().is_none_or(|l| &fl < l) {
                        lo[r] = Some(fl);
                    }
                    if hi[r].as_ref().is_none_or(|h| &ce > h) {
                        hi[r] = Some(ce);
                    }
                }
            }
        }
    }
    let lo: [i64; 3] = [
        lo[0].as_ref()?.to_i64()?,
        lo[1].as_ref()?.to_i64()?,
        lo[2].as_ref()?.to_i64()?,
    ];
    let hi: [i64; 3] = [
        hi[0].as_ref()?.to_i64()?,
        hi[1].as_ref()?.to_i64()?,
        hi[2].as_ref()?.to_i64()?,
    ];
    Some((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{convex_hull, lattice_points, LatticePoint};

    #[test]
    fn degree_display() {
        use alloc::string::ToString;
        assert_eq!(GradedDegree::new(vec![4], vec![], vec![]).to_string(), "4");
        let g = GradedDegree::new(vec![1, -2], vec![7, 1], vec![6, 18]);
        assert_eq!(g.to_string(), "(1,-2); 1 mod 6, 1 mod 18");
    }

    fn simplex(k: i64) -> LatticePolytope {
        convex_hull(&[
            LatticePoint::new(0, 0, 0),
            LatticePoint::new(k, 0, 0),
            LatticePoint::new(0, k, 0),
            LatticePoint::new(0, 0, k),
        ])
        .unwrap()
    }

    fn cube(k: i64) -> LatticePolytope {
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

    fn deg(t: &ToricData, free: &[i64]) -> GradedDegree {
        GradedDegree::new(free.to_vec(), vec![], t.torsion().to_vec())
    }

    #[test]
    fn projective_space() {
        let t = build_toric_data(&normal_fan(&simplex(4))).unwrap();
        assert_eq!(t.num_variables(), 4);
        assert_eq!(t.class_rank(), 1);
        assert!(t.torsion().is_empty());
        for d in t.variable_degrees() {
            assert_eq!(d, &deg(&t, &[1]));
        }
        assert_eq!(anticanonical_degree(&t), deg(&t, &[4]));
        assert_eq!(polytope_degree(&t, &simplex(4)), Ok(deg(&t, &[4])));
        assert_eq!(picard_number(&t), 1);
    }

    #[test]
    fn product_of_lines() {
        let t = build_toric_data(&normal_fan(&cube(2))).unwrap();
        assert_eq!(t.class_rank(), 3);
        assert!(t.torsion().is_empty());
        // rays: e1, e2, e3, -e3, -e2, -e1
        let expect = [
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [0, 0, 1],
            [0, 1, 0],
            [1, 0, 0],
        ];
        for (d, e) in t.variable_degrees().iter().zip(expect) {
            assert_eq!(d.free_part(), &e);
        }
        let b0 = anticanonical_degree(&t);
        assert_eq!(b0.free_part(), &[2, 2, 2]);
        assert_eq!(polytope_degree(&t, &cube(2)).unwrap(), b0);
        assert_eq!(picard_number(&t), 3);
    }

    #[test]
    fn lattice_basis_has_trivial_class() {
        for p in [simplex(3), cube(1)] {
            let t = build_toric_data(&normal_fan(&p)).unwrap();
            for m in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
                assert!(t.degree_of(&t.ray_pairing(&m)).is_zero());
            }
        }
    }

    #[test]
    fn projective_monomial_counts() {
        let t = build_toric_data(&normal_fan(&simplex(4))).unwrap();
        assert_eq!(monomials_of_degree(&t, &deg(&t, &[4])).len(), 35);
        assert!(monomials_of_degree(&t, &deg(&t, &[-1])).is_empty());
        assert_eq!(
            monomials_of_degree(&t, &deg(&t, &[0])),
            vec![CoxMonomial(vec![0, 0, 0, 0])]
        );
    }

    #[test]
    fn fake_weighted_projective_space_has_torsion() {
        let p = convex_hull(&[
            LatticePoint::new(0, 0, 0),
            LatticePoint::new(2, 0, 0),
            LatticePoint::new(0, 2, 0),
            LatticePoint::new(1, 1, 2),
        ])
        .unwrap();
        let t = build_toric_data(&normal_fan(&p)).unwrap();
        assert_eq!(t.class_rank(), 1);
        // rays generate {x + y even}
        assert_eq!(t.torsion(), &[2]);
        let beta = polytope_degree(&t, &p).unwrap();
        assert_eq!(
            monomials_of_degree(&t, &beta).len(),
            lattice_points(&p).len()
        );
        for m in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
            assert!(t.degree_of(&t.ray_pairing(&m)).is_zero());
        }
    }

    #[test]
    fn non_simplicial_rejected() {
        let oct = convex_hull(&[
            LatticePoint::new(1, 0, 0),
            LatticePoint::new(-1, 0, 0),
            LatticePoint::new(0, 1, 0),
            LatticePoint::new(0, -1, 0),
            LatticePoint::new(0, 0, 1),
            LatticePoint::new(0, 0, -1),
        ])
        .unwrap();
        assert_eq!(
            build_toric_data(&normal_fan(&oct)),
            Err(Error::NotSimplicial)
        );
    }

    #[test]
    fn fan_mismatch() {
        let t = build_toric_data(&normal_fan(&simplex(4))).unwrap();
        assert_eq!(polytope_degree(&t, &cube(1)), Err(Error::FanMismatch));
    }

    #[test]
    fn degree_arithmetic_reduces_torsion() {
        let a = GradedDegree::new(vec![1], vec![1], vec![2]);
        let b = a.add(&a);
        assert_eq!(b.free_part(), &[2]);
        assert_eq!(b.torsion_part(), &[0]);
        assert_eq!(a.sub(&a.scale(2)).torsion_part(), &[1]);
    }
}
