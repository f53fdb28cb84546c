//! Mixed volumes recomputed without the determinant formula: polarization
//! over exact hull volumes of vertex sets.
//!
//! `6·V(A,B,C) = Vol(A+B+C) − Vol(A+B) − Vol(A+C) − Vol(B+C) + Vol(A) + Vol(B) + Vol(C)`

use proptest::prelude::*;
use zonobez::witness::{volume_polytope, PolytopeV};
use zonobez::zonotope::{mixed_volume, volume};
use zonobez::{Rat, Vec3, Zonotope3};

fn hull_volume(z: &Zonotope3) -> Rat {
    volume_polytope(&PolytopeV::from_zonotope(z))
}

fn polarized(a: &Zonotope3, b: &Zonotope3, c: &Zonotope3) -> Rat {
    let ab = a.minkowski_sum(b);
    let six = hull_volume(&ab.minkowski_sum(c)) - hull_volume(&ab) - hull_volume(&a.minkowski_sum(c))
        - hull_volume(&b.minkowski_sum(c))
        + hull_volume(a)
        + hull_volume(b)
        + hull_volume(c);
    six / Rat::from_int(6)
}

fn z(gens: &[(i64, i64, i64)]) -> Zonotope3 {
    Zonotope3::new(gens.iter().map(|&(x, y, z)| Vec3::from_ints(x, y, z)).collect())
}

#[test]
fn known_values() {
    let cube = Zonotope3::unit_cube();
    let e1 = z(&[(1, 0, 0)]);
    let e2 = z(&[(0, 1, 0)]);
    let tilted = z(&[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]);
    assert_eq!(polarized(&cube, &cube, &cube), Rat::one());
    assert_eq!(polarized(&cube, &e1, &e2), Rat::new(1, 6));
    assert_eq!(polarized(&tilted, &e1, &e2), Rat::new(2, 3));
    assert_eq!(hull_volume(&tilted), Rat::from_int(4));
    assert_eq!(mixed_volume(&tilted, &e1, &e2), Rat::new(2, 3));
    assert_eq!(volume(&tilted), Rat::from_int(4));
}

fn vec3() -> impl Strategy<Value = Vec3> {
    (-3i64..=3, -3i64..=3, -3i64..=3).prop_map(|(x, y, z)| Vec3::from_ints(x, y, z))
}

fn small_zonotope() -> impl Strategy<Value = Zonotope3> {
    prop::collection::vec(vec3(), 1..=2).prop_map(Zonotope3::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn determinant_formula_matches_polarization(a in small_zonotope(), b in small_zonotope(), c in small_zonotope()) {
        prop_assert_eq!(mixed_volume(&a, &b, &c), polarized(&a, &b, &c));
    }

    #[test]
    fn volume_matches_hull(gens in prop::collection::vec(vec3(), 0..=5)) {
        let a = Zonotope3::new(gens);
        prop_assert_eq!(volume(&a), hull_volume(&a));
    }
}
