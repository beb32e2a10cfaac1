use std::collections::HashMap;

use maxcurve::curve_models::{genus, params_from_s, CurveParams, Family};
use maxcurve::gf::{FieldElement, FieldSpec};
use maxcurve::point_count::{count_points, count_points_in, default_field, CountOptions};
use num_bigint::BigInt;

fn opts() -> CountOptions {
    CountOptions::default()
}

/// Enumerate y (and z) directly and tabulate t^m, no trace or power-residue shortcuts.
fn brute_count(params: &CurveParams, r: u32) -> u64 {
    let f = default_field(params, r).unwrap();
    let q = params.q as u128;
    let mut tpow: HashMap<FieldElement, u64> = HashMap::new();
    for t in f.elements() {
        *tpow.entry(f.pow(t, params.m as u128)).or_insert(0) += 1;
    }
    let mut as_image: HashMap<FieldElement, u64> = HashMap::new();
    for y in f.elements() {
        *as_image.entry(f.sub(f.pow(y, q), y)).or_insert(0) += 1;
    }
    let mut n = 1u64;
    for x in f.elements() {
        let xq = f.pow(x, q);
        let s = if params.is_suzuki() {
            f.add(xq, x)
        } else {
            f.sub(xq, x)
        };
        let cy = f.mul(f.pow(x, params.q0 as u128), s);
        let mut fiber = as_image.get(&cy).copied().unwrap_or(0);
        if !params.is_suzuki() {
            let cz = f.mul(f.pow(x, 2 * params.q0 as u128), s);
            fiber *= as_image.get(&cz).copied().unwrap_or(0);
        }
        if params.family.is_cover() {
            fiber *= tpow.get(&s).copied().unwrap_or(0);
        }
        n += fiber;
    }
    n
}

#[test]
fn suzuki_q8_counts_match_brute_force() {
    let p = params_from_s(Family::SuzukiCover, 1).unwrap();
    for r in [1, 2, 4] {
        assert_eq!(
            count_points(&p, r, &opts()).unwrap().points,
            brute_count(&p, r),
            "r={r}"
        );
    }
    let rep = count_points(&p, 4, &opts()).unwrap();
    assert_eq!(rep.points, 29185);
    assert!(rep.is_maximal);
    assert_eq!(count_points(&p, 1, &opts()).unwrap().points, 65);
    let r1 = count_points(&p, 1, &opts()).unwrap();
    assert!(!r1.is_maximal && r1.note.is_some());
}

#[test]
fn ree_counts_match_brute_force() {
    let p = params_from_s(Family::ReeCover, 1).unwrap();
    for r in [1, 2] {
        assert_eq!(
            count_points(&p, r, &opts()).unwrap().points,
            brute_count(&p, r),
            "r={r}"
        );
    }
}

#[test]
fn ree_has_no_new_places_up_to_degree_three() {
    let p = params_from_s(Family::ReeCover, 1).unwrap();
    for r in [1, 2, 3] {
        assert_eq!(count_points(&p, r, &opts()).unwrap().points, 19684, "r={r}");
    }
}

#[test]
fn suzuki_base_curve_is_maximal() {
    let p = params_from_s(Family::SuzukiBase, 1).unwrap();
    let rep = count_points(&p, 4, &opts()).unwrap();
    assert_eq!(rep.points, 4096 + 1 + 2 * 14 * 64);
    assert_eq!(rep.points, brute_count(&p, 4));
    assert!(rep.is_maximal);
}

#[test]
fn thread_count_does_not_change_result() {
    let p = params_from_s(Family::SuzukiCover, 1).unwrap();
    let counts: Vec<u64> = [1, 2, 3, 8]
        .iter()
        .map(|&t| {
            count_points(
                &p,
                4,
                &CountOptions {
                    threads: Some(t),
                    allow_long: false,
                },
            )
            .unwrap()
            .points
        })
        .collect();
    assert!(counts.iter().all(|&c| c == 29185));
}

#[test]
fn alternative_modulus_same_count() {
    let p = params_from_s(Family::SuzukiCover, 1).unwrap();
    let alt = FieldSpec::new(2, 12, Some(&[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1])).unwrap();
    let rep = count_points_in(&alt, &p, 4, &opts()).unwrap();
    assert_eq!(rep.points, 29185);
    assert_ne!(rep.modulus, default_field(&p, 4).unwrap().modulus_string());
    let wrong = FieldSpec::default_for(2, 10).unwrap();
    assert!(count_points_in(&wrong, &p, 4, &opts()).is_err());
}

/// Affine F_q-points on t = 0 by direct search over F_q.
#[test]
fn affine_points_on_t_zero() {
    for (fam, expected_pow) in [(Family::SuzukiCover, 2u32), (Family::ReeCover, 3)] {
        let p = params_from_s(fam, 1).unwrap();
        let f = default_field(&p, 1).unwrap();
        let q = p.q as u128;
        let eq = |x: FieldElement, y: FieldElement, e: u128| {
            let s = if p.is_suzuki() {
                f.add(f.pow(x, q), x)
            } else {
                f.sub(f.pow(x, q), x)
            };
            let lhs = if p.is_suzuki() {
                f.add(f.pow(y, q), y)
            } else {
                f.sub(f.pow(y, q), y)
            };
            lhs == f.mul(f.pow(x, e), s)
        };
        let mut n = 0u64;
        for x in f.elements() {
            let s = if p.is_suzuki() {
                f.add(f.pow(x, q), x)
            } else {
                f.sub(f.pow(x, q), x)
            };
            if !s.is_zero() {
                continue;
            }
            for y in f.elements() {
                if !eq(x, y, p.q0 as u128) {
                    continue;
                }
                if p.is_suzuki() {
                    n += 1;
                } else {
                    n += f.elements().filter(|&z| eq(x, z, 2 * p.q0 as u128)).count() as u64;
                }
            }
        }
        assert_eq!(n, p.q.pow(expected_pow));
    }
}

#[test]
fn maximal_count_q32() {
    let p = params_from_s(Family::SuzukiCover, 2).unwrap();
    let rep = count_points(&p, 4, &opts()).unwrap();
    assert_eq!(rep.points, (1u64 << 20) + 1 + 2 * 15376 * 1024);
    assert_eq!(rep.hasse_weil_target, Some(BigInt::from(32538625u64)));
    assert!(rep.is_maximal);
    assert_eq!(genus(&p), BigInt::from(15376));
}
