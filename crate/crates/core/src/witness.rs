//! Mixed volumes of a general polytope with segments.
//!
//! Enough to evaluate the constant-2 inequality on the square pyramid, which
//! is not a zonotope. Every formula stays rational: no norms, no projections.

use crate::error::{Error, Result};
use crate::hull::Hull;
use crate::numeric::{Rat, Vec3};
use crate::verify::{AfSquareValues, IneqReport};
use crate::zonotope::Zonotope3;

/// Convex hull of a vertex list. Duplicates and interior points are allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolytopeV {
    vertices: Vec<Vec3>,
}

impl PolytopeV {
    pub fn new(vertices: Vec<Vec3>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        Ok(PolytopeV { vertices })
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    /// `conv(0, e1, e2, e1+e2, e3)`.
    pub fn square_pyramid() -> Self {
        let v = Vec3::from_ints;
        PolytopeV { vertices: vec![v(0, 0, 0), v(1, 0, 0), v(0, 1, 0), v(1, 1, 0), v(0, 0, 1)] }
    }

    pub fn standard_simplex() -> Self {
        PolytopeV { vertices: vec![Vec3::zero(), Vec3::e1(), Vec3::e2(), Vec3::e3()] }
    }

    /// The zonotope as the hull of its subset sums.
    pub fn from_zonotope(z: &Zonotope3) -> Self {
        PolytopeV { vertices: z.vertex_candidates() }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        PolytopeV { vertices: self.vertices.iter().map(|p| p.scale(k)).collect() }
    }

    /// `P + [0, u] = conv(P ∪ (P + u))`.
    pub fn sweep(&self, u: &Vec3) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.extend(self.vertices.iter().map(|p| p + u));
        PolytopeV { vertices }
    }
}

/// Exact volume; zero for flat vertex sets.
pub fn volume_polytope(p: &PolytopeV) -> Rat {
    Hull::build(p.vertices()).map_or_else(Rat::zero, |h| h.volume())
}

/// `V(P, [0,u], [0,v]) = (1/6)·(max⟨u×v, p⟩ − min⟨u×v, p⟩)`.
pub fn mv_seg_seg(p: &PolytopeV, u: &Vec3, v: &Vec3) -> Rat {
    let n = u.cross(v);
    let mut heights = p.vertices().iter().map(|q| n.dot(q));
    let first = heights.next().expect("non-empty polytope");
    let (lo, hi) = heights.fold((first.clone(), first), |(lo, hi), h| {
        if h < lo {
            (h, hi)
        } else if h > hi {
            (lo, h)
        } else {
            (lo, hi)
        }
    });
    (hi - lo) / Rat::from_int(6)
}

/// `V(P, P, [0,u]) = (Vol(P + [0,u]) − Vol(P)) / 3`.
pub fn mv_body_body_seg(p: &PolytopeV, u: &Vec3) -> Rat {
    (volume_polytope(&p.sweep(u)) - volume_polytope(p)) / Rat::from_int(3)
}

/// The four mixed volumes of `V(A,A,D)·V(B,C,D) ≤ 2·V(A,B,D)·V(A,C,D)` with
/// `A = D = P`, `B = [0,u]`, `C = [0,v]`.
pub fn af_square_values_with_segments(p: &PolytopeV, u: &Vec3, v: &Vec3) -> AfSquareValues {
    AfSquareValues {
        aad: volume_polytope(p),
        bcd: mv_seg_seg(p, u, v),
        abd: mv_body_body_seg(p, u),
        acd: mv_body_body_seg(p, v),
    }
}

/// The constant-2 inequality on the square pyramid with the unit segments
/// `[0,e1]`, `[0,e2]`; holds with equality (`1/18 = 1/18`).
pub fn pyramid_equality_report() -> IneqReport {
    af_square_values_with_segments(&PolytopeV::square_pyramid(), &Vec3::e1(), &Vec3::e2()).check()
}
