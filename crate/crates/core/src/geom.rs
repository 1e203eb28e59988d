//! Integer convex geometry in ℤ³.
//!
//! Hulls are computed by gift wrapping with exact `i128` predicates. Input
//! coordinates are bounded by [`COORDINATE_LIMIT`], which keeps every
//! orientation test well inside `i128` and every facet offset inside `i64`.

use alloc::collections::{btree_map, BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest absolute coordinate accepted by [`convex_hull`].
pub const COORDINATE_LIMIT: i64 = 1 << 16;

/// A point of the character lattice `M = ℤ³`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticePoint(pub [i64; 3]);

impl LatticePoint {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        LatticePoint([x, y, z])
    }

    #[inline]
    pub fn coords(&self) -> [i64; 3] {
        self.0
    }

    #[inline]
    pub fn dot(&self, n: &[i64; 3]) -> i64 {
        self.0[0] * n[0] + self.0[1] * n[1] + self.0[2] * n[2]
    }

    /// `A · p` for a row-major 3×3 integer matrix.
    pub fn transform(&self, a: &[[i64; 3]; 3]) -> LatticePoint {
        LatticePoint(core::array::from_fn(|i| self.dot(&a[i])))
    }

    fn wide(&self) -> V3 {
        self.0.map(i128::from)
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl From<[i64; 3]> for LatticePoint {
    fn from(c: [i64; 3]) -> Self {
        LatticePoint(c)
    }
}

/// Supporting inequality `⟨m, normal⟩ ≥ -offset`, `normal` primitive and inward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: [i64; 3],
    pub offset: i64,
}

impl Facet {
    /// `⟨m, normal⟩ + offset`; nonnegative exactly on the inner side.
    #[inline]
    pub fn slack(&self, m: &LatticePoint) -> i64 {
        m.dot(&self.normal) + self.offset
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    vertices: Vec<LatticePoint>,
    facets: Vec<Facet>,
}

impl LatticePolytope {
    /// Vertices in ascending lexicographic order.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// Facets ordered by inner normal, descending lexicographically. This is
    /// also the ray order of the normal fan and of the Cox variables.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn contains(&self, m: &LatticePoint) -> bool {
        self.facets.iter().all(|f| f.slack(m) >= 0)
    }

    /// Image under a row-major integer matrix.
    pub fn transform(&self, a: &[[i64; 3]; 3]) -> Result<LatticePolytope> {
        let pts: Vec<_> = self.vertices.iter().map(|v| v.transform(a)).collect();
        convex_hull(&pts)
    }

    pub fn translate(&self, t: [i64; 3]) -> Result<LatticePolytope> {
        let pts: Vec<_> = self
            .vertices
            .iter()
            .map(|v| LatticePoint(core::array::from_fn(|i| v.0[i] + t[i])))
            .collect();
        convex_hull(&pts)
    }

    /// `k·P` for `k ≥ 1`.
    pub fn dilate(&self, k: i64) -> Result<LatticePolytope> {
        let pts: Vec<_> = self
            .vertices
            .iter()
            .map(|v| LatticePoint(v.0.map(|c| c * k)))
            .collect();
        convex_hull(&pts)
    }

    /// Integer bounding box `(min, max)` of the vertices.
    pub fn bounding_box(&self) -> ([i64; 3], [i64; 3]) {
        let mut lo = [i64::MAX; 3];
        let mut hi = [i64::MIN; 3];
        for v in &self.vertices {
            for k in 0..3 {
                lo[k] = lo[k].min(v.0[k]);
                hi[k] = hi[k].max(v.0[k]);
            }
        }
        (lo, hi)
    }
}

type V3 = [i128; 3];

#[inline]
fn sub(a: &V3, b: &V3) -> V3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
fn dot(a: &V3, b: &V3) -> i128 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
fn cross(a: &V3, b: &V3) -> V3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
fn neg(a: &V3) -> V3 {
    [-a[0], -a[1], -a[2]]
}

fn primitive(v: &V3) -> V3 {
    let g = v[0].gcd(&v[1]).gcd(&v[2]);
    debug_assert!(g != 0);
    [v[0] / g, v[1] / g, v[2] / g]
}

/// Affine dimension of a point set (-1 encoded as `None` for the empty set).
fn affine_dimension(pts: &[V3]) -> Option<usize> {
    let p0 = pts.first()?;
    let Some(d1) = pts.iter().map(|p| sub(p, p0)).find(|d| *d != [0; 3]) else {
        return Some(0);
    };
    let Some(n) = pts
        .iter()
        .map(|p| cross(&d1, &sub(p, p0)))
        .find(|c| *c != [0; 3])
    else {
        return Some(1);
    };
    if pts.iter().any(|p| dot(&n, &sub(p, p0)) != 0) {
        Some(3)
    } else {
        Some(2)
    }
}

/// Plane `⟨x, normal⟩ ≥ level`, normal primitive and inward.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Plane {
    normal: V3,
    level: i128,
}

impl Plane {
    fn through(a: &V3, normal: &V3) -> Plane {
        let normal = primitive(normal);
        Plane {
            normal,
            level: dot(a, &normal),
        }
    }

    #[inline]
    fn height(&self, p: &V3) -> i128 {
        dot(p, &self.normal) - self.level
    }
}

/// Rotate the supporting plane `⟨x - a, n0⟩ ≥ 0` about the line `a + t·dir`
/// towards `u` until it touches a point strictly above it.
///
/// Requires `dir ⟂ n0`, `u = ±dir × n0`, and every point either strictly above
/// the plane, on the line, or on the plane on the `+u` side of the line.
fn wrap(points: &[V3], a: &V3, dir: &V3, n0: &V3, u: &V3) -> Plane {
    let level0 = dot(a, n0);
    let oriented = |r: &V3| {
        let n = cross(dir, &sub(r, a));
        if dot(&n, u) < 0 {
            neg(&n)
        } else {
            n
        }
    };
    let mut candidates = points.iter().filter(|p| dot(p, n0) > level0);
    let first = candidates
        .next()
        .expect("full-dimensional point set has a point off every supporting plane");
    let mut normal = oriented(first);
    for s in candidates {
        if dot(&sub(s, a), &normal) < 0 {
            normal = oriented(s);
        }
    }
    Plane::through(a, &normal)
}

/// Vertices of the 2D hull of coplanar points, in cyclic order.
fn polygon(points: &[V3], normal: &V3) -> Vec<V3> {
    // drop the coordinate where the normal is largest
    let drop = (0..3).max_by_key(|&k| normal[k].abs()).unwrap_or(0);
    let (i, j) = match drop {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let mut pts: Vec<V3> = points.to_vec();
    pts.sort_by_key(|p| (p[i], p[j]));
    pts.dedup();
    let turn =
        |o: &V3, a: &V3, b: &V3| (a[i] - o[i]) * (b[j] - o[j]) - (a[j] - o[j]) * (b[i] - o[i]);
    let mut hull: Vec<V3> = Vec::with_capacity(2 * pts.len());
    for p in pts.iter() {
        while hull.len() >= 2 && turn(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(*p);
    }
    let lower = hull.len() + 1;
    for p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && turn(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(*p);
    }
    hull.pop();
    hull
}

fn check_range(points: &[LatticePoint]) -> Result<()> {
    for p in points {
        for &c in &p.0 {
            if c.abs() > COORDINATE_LIMIT {
                return Err(Error::CoordinateRange {
                    value: c,
                    limit: COORDINATE_LIMIT,
                });
            }
        }
    }
    Ok(())
}

fn narrow(v: &V3) -> [i64; 3] {
    // bounded by the coordinate limit
    v.map(|c| c as i64)
}

/// Convex hull of a nonempty set of lattice points, which must span ℤ³ affinely.
pub fn convex_hull(points: &[LatticePoint]) -> Result<LatticePolytope> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    check_range(points)?;
    let mut sorted: Vec<LatticePoint> = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let pts: Vec<V3> = sorted.iter().map(LatticePoint::wide).collect();

    match affine_dimension(&pts) {
        Some(3) => {}
        dim => {
            return Err(Error::DegenerateHull {
                dimension: dim.unwrap_or(0),
            })
        }
    }

    // Lexicographically smallest point: a vertex with `x ≥ p.x` supporting it.
    // Within that face every point lies on the line `p + t·e₃` or has `y > p.y`.
    let p = pts[0];
    let e1 = [1, 0, 0];
    let first = wrap(&pts, &p, &[0, 0, 1], &e1, &[0, 1, 0]);
    let on_first: Vec<V3> = pts
        .iter()
        .filter(|q| first.height(q) == 0)
        .copied()
        .collect();
    let start = if affine_dimension(&on_first) == Some(2) {
        first
    } else {
        // only an edge; wrap once more about it
        let r = *on_first
            .iter()
            .find(|q| **q != p)
            .expect("wrapped plane touches a second point");
        let dir = sub(&r, &p);
        let u = cross(&dir, &first.normal);
        wrap(&pts, &p, &dir, &first.normal, &u)
    };

    let mut found: BTreeMap<V3, Plane> = BTreeMap::new();
    let mut vertices: BTreeSet<V3> = BTreeSet::new();
    let mut queue = VecDeque::new();
    found.insert(start.normal, start);
    queue.push_back(start);
    while let Some(plane) = queue.pop_front() {
        let on: Vec<V3> = pts
            .iter()
            .filter(|q| plane.height(q) == 0)
            .copied()
            .collect();
        let poly = polygon(&on, &plane.normal);
        debug_assert!(poly.len() >= 3);
        vertices.extend(poly.iter().copied());
        for k in 0..poly.len() {
            let a = poly[k];
            let b = poly[(k + 1) % poly.len()];
            let w = poly[(k + 2) % poly.len()];
            let dir = sub(&b, &a);
            let mut u = cross(&dir, &plane.normal);
            if dot(&u, &sub(&w, &a)) < 0 {
                u = neg(&u);
            }
            let next = wrap(&pts, &a, &dir, &plane.normal, &u);
            if let btree_map::Entry::Vacant(slot) = found.entry(next.normal) {
                slot.insert(next);
                queue.push_back(next);
            }
        }
    }

    let mut facets: Vec<Facet> = found
        .values()
        .map(|pl| Facet {
            normal: narrow(&pl.normal),
            offset: -(pl.level as i64),
        })
        .collect();
    facets.sort_unstable_by_key(|f| Reverse(f.normal));
    let vertices = vertices.iter().map(|v| LatticePoint(narrow(v))).collect();
    Ok(LatticePolytope { vertices, facets })
}

/// All points of `P ∩ ℤ³` in ascending lexicographic order.
///
/// Scans the integer bounding box, so the cost is the box volume.
pub fn lattice_points(p: &LatticePolytope) -> Vec<LatticePoint> {
    let (lo, hi) = p.bounding_box();
    let mut out = Vec::new();
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                let m = LatticePoint([x, y, z]);
                if p.contains(&m) {
                    out.push(m);
                }
            }
        }
    }
    out
}

/// A nonempty face, as indices into [`LatticePolytope::vertices`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub dimension: usize,
    pub vertices: Vec<usize>,
}

/// Every nonempty face of dimension 0 through 3, sorted by dimension then
/// vertex set.
pub fn faces(p: &LatticePolytope) -> Vec<Face> {
    let facet_sets: Vec<BTreeSet<usize>> = p
        .facets
        .iter()
        .map(|f| {
            p.vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| f.slack(v) == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    let mut all: BTreeSet<BTreeSet<usize>> = facet_sets.iter().cloned().collect();
    all.insert((0..p.vertices.len()).collect());
    let mut frontier: Vec<BTreeSet<usize>> = facet_sets.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &facet_sets {
                let meet: BTreeSet<usize> = a.intersection(b).copied().collect();
                if !meet.is_empty() && !all.contains(&meet) {
                    all.insert(meet.clone());
                    next.push(meet);
                }
            }
        }
        frontier = next;
    }

    let mut out: Vec<Face> = all
        .into_iter()
        .map(|set| {
            let pts: Vec<V3> = set.iter().map(|&i| p.vertices[i].wide()).collect();
            Face {
                dimension: affine_dimension(&pts).unwrap_or(0),
                vertices: set.into_iter().collect(),
            }
        })
        .collect();
    out.sort();
    out
}

/// Complete fan of inner facet normals; one maximal cone per polytope vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFan {
    pub rays: Vec<[i64; 3]>,
    /// Sorted ray indices; `maximal_cones[i]` belongs to vertex `i`.
    pub maximal_cones: Vec<Vec<usize>>,
}

pub fn normal_fan(p: &LatticePolytope) -> NormalFan {
    let rays = p.facets.iter().map(|f| f.normal).collect();
    let maximal_cones = p
        .vertices
        .iter()
        .map(|v| {
            p.facets
                .iter()
                .enumerate()
                .filter(|(_, f)| f.slack(v) == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    NormalFan {
        rays,
        maximal_cones,
    }
}

pub(crate) fn det3(a: &[i64; 3], b: &[i64; 3], c: &[i64; 3]) -> i128 {
    let w = |v: &[i64; 3]| v.map(i128::from);
    dot(&w(a), &cross(&w(b), &w(c)))
}

/// Every maximal cone has exactly three linearly independent rays.
pub fn is_simplicial(fan: &NormalFan) -> bool {
    fan.maximal_cones.iter().all(|cone| {
        cone.len() == 3 && det3(&fan.rays[cone[0]], &fan.rays[cone[1]], &fan.rays[cone[2]]) != 0
    })
}
