//! Zonotopes in R^3 and their exact mixed volumes.
//!
//! A zonotope `Σ [0, a_i]` is stored as its generator list. Translates are
//! not representable; mixed volumes are translation invariant, so nothing
//! is lost. Minkowski sum of zonotopes is concatenation of generator lists.

use rayon::prelude::*;

use crate::numeric::{det3, Mat3, Rat, Vec3};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Zonotope3 {
    generators: Vec<Vec3>,
}

impl Zonotope3 {
    pub fn new(generators: Vec<Vec3>) -> Self {
        Zonotope3 { generators }
    }

    /// The segment `[0, u]`.
    pub fn segment(u: Vec3) -> Self {
        Zonotope3 { generators: vec![u] }
    }

    /// Unit cube `[0,1]^3`.
    pub fn unit_cube() -> Self {
        Zonotope3::new(vec![Vec3::e1(), Vec3::e2(), Vec3::e3()])
    }

    pub fn generators(&self) -> &[Vec3] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Minkowski sum.
    pub fn minkowski_sum(&self, other: &Zonotope3) -> Zonotope3 {
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Zonotope3 { generators }
    }

    /// `λ·Z`. A negative λ yields a translate of `|λ|·Z`.
    pub fn scale(&self, k: &Rat) -> Zonotope3 {
        Zonotope3::new(self.generators.iter().map(|g| g.scale(k)).collect())
    }

    /// Image under a linear map.
    pub fn apply_linear(&self, m: &Mat3) -> Zonotope3 {
        Zonotope3::new(self.generators.iter().map(|g| m.apply(g)).collect())
    }

    /// Drops zero generators and merges parallel ones.
    ///
    /// Each group of parallel generators `c_i·d` becomes the single
    /// generator `(Σ|c_i|)·d`, where `d` is the group's first member with its
    /// sign flipped so that its first nonzero coordinate is positive. Groups
    /// keep the order of their first appearance.
    pub fn canonicalize(&self) -> Zonotope3 {
        // (direction, accumulated |coefficient|)
        let mut groups: Vec<(Vec3, Rat)> = Vec::new();
        for g in self.generators.iter().filter(|g| !g.is_zero()) {
            match groups.iter_mut().find(|(d, _)| d.cross(g).is_zero()) {
                Some((d, total)) => *total += parallel_coefficient(g, d).abs(),
                None => groups.push((sign_normalized(g), Rat::one())),
            }
        }
        Zonotope3::new(groups.into_iter().map(|(d, total)| d.scale(&total)).collect())
    }

    /// All `2^m` subset sums of the canonical generators; a superset of the
    /// vertex set. Only sensible for small `m`.
    pub fn vertex_candidates(&self) -> Vec<Vec3> {
        let mut pts = vec![Vec3::zero()];
        for g in self.canonicalize().generators() {
            let shifted: Vec<Vec3> = pts.iter().map(|p| p + g).collect();
            pts.extend(shifted);
        }
        pts
    }
}

fn sign_normalized(g: &Vec3) -> Vec3 {
    let lead = g.coords().into_iter().find(|c| !c.is_zero()).expect("nonzero generator");
    if lead.is_negative() {
        -g
    } else {
        g.clone()
    }
}

/// `c` with `g = c·d`; `g` and `d` must be parallel and `d` nonzero.
fn parallel_coefficient(g: &Vec3, d: &Vec3) -> Rat {
    let (gc, dc) = (g.coords(), d.coords());
    let k = (0..3).find(|&k| !dc[k].is_zero()).expect("nonzero direction");
    gc[k] / dc[k]
}

/// `V(A, B, C) = (1/6) Σ_{i,j,k} |det(a_i, b_j, c_k)|`.
pub fn mixed_volume(a: &Zonotope3, b: &Zonotope3, c: &Zonotope3) -> Rat {
    let sum: Rat = a
        .generators()
        .par_iter()
        .map(|ai| {
            let mut acc = Rat::zero();
            for bj in b.generators() {
                for ck in c.generators() {
                    acc += det3(ai, bj, ck).abs();
                }
            }
            acc
        })
        .reduce(Rat::zero, |x, y| x + y);
    sum / Rat::from_int(6)
}

/// `Vol(A) = Σ_{i<j<k} |det(a_i, a_j, a_k)|`.
pub fn volume(a: &Zonotope3) -> Rat {
    let g = a.generators();
    let mut acc = Rat::zero();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            for k in j + 1..g.len() {
                acc += det3(&g[i], &g[j], &g[k]).abs();
            }
        }
    }
    acc
}

/// `V(A, A, [0,u]) = (1/3) Σ_{i<j} |det(a_i, a_j, u)|`.
pub fn mv_zz_segment(a: &Zonotope3, u: &Vec3) -> Rat {
    let g = a.generators();
    let mut acc = Rat::zero();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            acc += det3(&g[i], &g[j], u).abs();
        }
    }
    acc / Rat::from_int(3)
}

/// Floating-point mixed volume. For sampling and throughput experiments
/// only; verification never goes through this path.
pub fn mixed_volume_f64(a: &Zonotope3, b: &Zonotope3, c: &Zonotope3) -> f64 {
    let conv = |z: &Zonotope3| z.generators().iter().map(Vec3::to_f64).collect::<Vec<_>>();
    let (a, b, c) = (conv(a), conv(b), conv(c));
    let mut acc = 0.0;
    for ai in &a {
        for bj in &b {
            for ck in &c {
                acc += det3_f64(ai, bj, ck).abs();
            }
        }
    }
    acc / 6.0
}

pub fn volume_f64(a: &Zonotope3) -> f64 {
    let g: Vec<_> = a.generators().iter().map(Vec3::to_f64).collect();
    let mut acc = 0.0;
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            for k in j + 1..g.len() {
                acc += det3_f64(&g[i], &g[j], &g[k]).abs();
            }
        }
    }
    acc
}

fn det3_f64(a: &[f64; 3], b: &[f64; 3], c: &[f64; 3]) -> f64 {
    a[0] * (b[1] * c[2] - c[1] * b[2]) - b[0] * (a[1] * c[2] - c[1] * a[2])
        + c[0] * (a[1] * b[2] - b[1] * a[2])
}
