use std::sync::OnceLock;

use maxcurve::curve_models::{params_from_s, Family};
use maxcurve::gf::{FieldElement, FieldSpec};
use maxcurve::group_action::*;
use maxcurve::point_count::{count_points, CountOptions};

fn places() -> &'static PlaceSet {
    static P: OnceLock<PlaceSet> = OnceLock::new();
    P.get_or_init(|| build_places(&params_from_s(Family::SuzukiCover, 1).unwrap()).unwrap())
}

fn gens() -> &'static Generators {
    static G: OnceLock<Generators> = OnceLock::new();
    G.get_or_init(|| generators(places()).unwrap())
}

#[test]
fn place_counts() {
    let p = places();
    let params = params_from_s(Family::SuzukiCover, 1).unwrap();
    assert_eq!(p.len(), 29185);
    assert_eq!(
        p.len() as u64,
        count_points(&params, 4, &CountOptions::default())
            .unwrap()
            .points
    );
    assert_eq!(p.fq_rational(), 65);
    assert_eq!(p.with_t_zero(), 65);
}

#[test]
fn refuses_other_parameters() {
    assert!(build_places(&params_from_s(Family::SuzukiCover, 2).unwrap()).is_err());
    assert!(build_places(&params_from_s(Family::SuzukiBase, 1).unwrap()).is_err());
    let wrong = FieldSpec::default_for(2, 10).unwrap();
    assert!(build_places_in(wrong, &params_from_s(Family::SuzukiCover, 1).unwrap()).is_err());
}

#[test]
fn stabilizer_examples() {
    let p = places();
    let f = p.field();
    let one = f.constant(1);
    let zero = FieldElement::ZERO;
    assert!(gen_stabilizer(p, one, zero, zero, one)
        .unwrap()
        .is_identity());
    for c in fq_elements(p).into_iter().skip(1) {
        let s = gen_stabilizer(p, one, zero, c, one).unwrap();
        assert_eq!(fixed_points(&s), 1);
        assert_eq!(element_order(&s), 2);
    }
    let a = gens().fq_primitive;
    assert_eq!(f.multiplicative_order(a).unwrap(), 7);
    assert_eq!(gens().delta_exponent, 3);
    let s = gen_stabilizer(p, a, zero, zero, f.pow(a, 3)).unwrap();
    assert_eq!(element_order(&s), 7);
    assert_eq!(fixed_points(&s), 2);
    assert!(matches!(
        gen_stabilizer(p, a, zero, zero, a),
        Err(GroupError::BadDelta)
    ));
    assert!(gen_stabilizer(p, zero, zero, zero, zero).is_err());
    assert!(gen_stabilizer(p, one, f.x(), zero, one).is_err());
}

#[test]
fn literal_theta_reading_breaks_equations() {
    let p = places();
    let f = p.field();
    let a = gens().fq_primitive;
    let b = f.constant(1);
    assert!(matches!(
        literal_theta(p, a, b, FieldElement::ZERO),
        Err(GroupError::Equation(_))
    ));
    assert!(literal_theta(p, f.constant(1), b, FieldElement::ZERO).is_ok());
}

#[test]
fn gamma_properties() {
    let g = &gens().gamma;
    assert_eq!(element_order(g), 5);
    for k in 1..5 {
        assert_eq!(fixed_points(&power(g, k)), 65);
    }
    for s in &gens().stabilizer {
        assert_eq!(compose(s, g), compose(g, s));
    }
    assert_eq!(compose(&gens().phi, g), compose(g, &gens().phi));
    assert!(gen_gamma(places(), places().field().constant(1)).is_err());
}

#[test]
fn phi_properties() {
    let p = places();
    let phi = &gens().phi;
    assert!(compose(phi, phi).is_identity());
    let origin = p.id_of(&[FieldElement::ZERO; 3]).unwrap();
    assert_eq!(phi.apply(p.infinity()), origin);
    assert_eq!(phi.apply(origin), p.infinity());
    assert_eq!(fixed_points(phi), 1);
}

#[test]
fn two_orbits() {
    let sizes = orbits(places().len(), &gens().all());
    assert_eq!(sizes, vec![65, 29120]);
    assert_eq!(sizes.iter().sum::<usize>(), 29185);
    assert_eq!(64 * 65 * 7, 29120);
}

#[test]
fn stabilizer_closure_has_order_448() {
    assert_eq!(closure_order(&gens().stabilizer, 10_000), Some(448));
}

#[test]
fn singer_and_m_type_elements() {
    let simple = gens().simple_part();
    let s13 = search_order(&simple, 13, SEARCH_SEED).unwrap();
    assert_eq!(element_order(&s13), 13);
    assert_eq!(fixed_points(&s13), 0);
    let s5 = search_order(&simple, 5, SEARCH_SEED).unwrap();
    assert_eq!(element_order(&s5), 5);
    assert_eq!(fixed_points(&s5), 0);
    let counts: Vec<usize> = (1..5)
        .map(|j| fixed_points(&compose(&s5, &power(&gens().gamma, j))))
        .collect();
    // The normalizer C_5 ⋊ C_4 permutes the four base places fixed by the
    // image of s5 and acts on C_5 by k ↦ 8k mod 5, which has order 4. So the
    // fiber over each of those places is fixed by a different twist.
    assert_eq!(counts, vec![5, 5, 5, 5]);
    assert_eq!(counts.iter().sum::<usize>(), 4 * 5);
}

#[test]
fn identity_and_inverse() {
    let id = Automorphism::identity(places());
    assert_eq!(fixed_points(&id), 29185);
    assert_eq!(element_order(&id), 1);
    for g in gens().all() {
        assert!(compose(&g, &inverse(&g)).is_identity());
        assert_eq!(power(&g, element_order(&g)), id);
    }
}

#[test]
fn full_report_rows() {
    let rep = verify(places()).unwrap();
    let failing: Vec<&str> = rep
        .rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.check.as_str())
        .collect();
    assert_eq!(failing, vec!["div_m_twisted_fixed_sorted"]);
    assert_eq!(rep.orbit_sizes, vec![65, 29120]);
}
