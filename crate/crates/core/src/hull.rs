//! Incremental 3D convex hull over exact rationals.
//!
//! Faces are triangles oriented so that `orient(a, b, c, p) > 0` exactly
//! when `p` lies strictly outside the supporting plane. Coplanar neighbours
//! are not merged; a facet of the polytope may be split into several
//! triangles.

use std::collections::HashSet;

use crate::numeric::{det3, Rat, Vec3};

/// Six times the signed volume of the tetrahedron `(a, b, c, d)`.
pub fn orient(a: &Vec3, b: &Vec3, c: &Vec3, d: &Vec3) -> Rat {
    det3(&(b - a), &(c - a), &(d - a))
}

#[derive(Clone, Debug)]
pub struct Hull {
    points: Vec<Vec3>,
    faces: Vec<[usize; 3]>,
}

impl Hull {
    /// Hull of `points`, or `None` when they span less than three dimensions.
    pub fn build(points: &[Vec3]) -> Option<Hull> {
        let mut seen = HashSet::new();
        let points: Vec<Vec3> = points.iter().filter(|p| seen.insert((*p).clone())).cloned().collect();

        let p0 = 0;
        let p1 = (1..points.len()).next()?;
        let p2 = (p1 + 1..points.len())
            .find(|&i| !(&points[p1] - &points[p0]).cross(&(&points[i] - &points[p0])).is_zero())?;
        let p3 = (p2 + 1..points.len())
            .find(|&i| !orient(&points[p0], &points[p1], &points[p2], &points[i]).is_zero())?;

        let mut hull = Hull { points, faces: Vec::with_capacity(16) };
        let tet = [p0, p1, p2, p3];
        for skip in 0..4 {
            let mut f = [0; 3];
            let mut k = 0;
            for (i, &v) in tet.iter().enumerate() {
                if i != skip {
                    f[k] = v;
                    k += 1;
                }
            }
            if hull.orient_face(f, tet[skip]).is_positive() {
                f.swap(1, 2);
            }
            hull.faces.push(f);
        }

        for p in 0..hull.points.len() {
            if !tet.contains(&p) {
                hull.insert(p);
            }
        }
        Some(hull)
    }

    fn orient_face(&self, f: [usize; 3], p: usize) -> Rat {
        let pts = &self.points;
        orient(&pts[f[0]], &pts[f[1]], &pts[f[2]], &pts[p])
    }

    fn insert(&mut self, p: usize) {
        let (visible, kept): (Vec<[usize; 3]>, Vec<[usize; 3]>) =
            self.faces.iter().partition(|&&f| self.orient_face(f, p).is_positive());
        if visible.is_empty() {
            return;
        }
        let edges: HashSet<(usize, usize)> =
            visible.iter().flat_map(|f| [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])]).collect();
        self.faces = kept;
        // horizon edges keep the orientation of the visible face they bound
        for &(u, v) in &edges {
            if !edges.contains(&(v, u)) {
                self.faces.push([u, v, p]);
            }
        }
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    /// Indices of points that are corners of some face.
    pub fn vertex_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.faces.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn volume(&self) -> Rat {
        let apex = &self.points[0];
        let six: Rat = self
            .faces
            .iter()
            .map(|f| orient(&self.points[f[0]], &self.points[f[1]], &self.points[f[2]], apex))
            .sum();
        -six / Rat::from_int(6)
    }

    /// Whether `p` lies in the closed hull.
    pub fn contains(&self, p: &Vec3) -> bool {
        self.faces.iter().all(|f| {
            !orient(&self.points[f[0]], &self.points[f[1]], &self.points[f[2]], p).is_positive()
        })
    }
}
