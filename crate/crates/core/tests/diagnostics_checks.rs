use cdop::counting::counting_univalent;
use cdop::diagnostics::{
    b_functional, default_shells, essential_norm_bracket, radial_profile, radial_profile_with_route, univalent_b,
    ProfileRoute, Trend, Verdict,
};
use cdop::{Complex64, SelfMap, SpaceParams};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn params(a: f64) -> SpaceParams {
    SpaceParams::new(a).unwrap()
}

#[test]
fn lens_verdict_flips_at_threshold() {
    // B stays bounded near the boundary iff δ ≤ α / (α + 2)
    let shells = default_shells(14);
    for a in [0.25, 0.5, 0.75] {
        let threshold = a / (a + 2.0);
        for delta in [0.5 * threshold, 2.0 * threshold] {
            let rep = radial_profile(&SelfMap::lens(delta).unwrap(), params(a), &shells, 64).unwrap();
            let compact = rep.verdict == Verdict::CompactEvidence;
            assert_eq!(compact, delta < threshold, "α = {a}, δ = {delta}: {:?}", rep.outer_trend);
        }
    }
}

#[test]
fn automorphisms_are_unbounded() {
    let shells = default_shells(14);
    for beta in [c(0.3, 0.0), c(0.0, -0.5), c(0.2, 0.2)] {
        let m = SelfMap::involution(beta).unwrap();
        let rep = radial_profile(&m, params(0.5), &shells, 64).unwrap();
        assert_eq!(rep.outer_trend, Trend::Diverging, "{m}");
        assert_eq!(rep.verdict, Verdict::UnboundedEvidence);
    }
}

#[test]
fn routes_agree_on_univalent_maps() {
    let shells = default_shells(14);
    let p = params(0.5);
    for m in [SelfMap::dilation(c(0.7, 0.1)).unwrap(), SelfMap::lens(0.05).unwrap()] {
        let z_side = radial_profile_with_route(&m, p, &shells, 32, ProfileRoute::Univalent).unwrap();
        let w_side = radial_profile_with_route(&m, p, &shells, 32, ProfileRoute::Counting).unwrap();
        assert_eq!(z_side.verdict, Verdict::CompactEvidence, "{m}");
        assert_eq!(w_side.verdict, Verdict::CompactEvidence, "{m}");
    }
    let wide = SelfMap::lens(0.6).unwrap();
    for route in [ProfileRoute::Univalent, ProfileRoute::Counting] {
        let rep = radial_profile_with_route(&wide, p, &shells, 32, route).unwrap();
        assert_ne!(rep.verdict, Verdict::CompactEvidence, "{route:?}");
    }
}

#[test]
fn univalent_b_is_b_at_the_image() {
    let p = params(0.75);
    let m = SelfMap::lens(0.2).unwrap();
    for i in 1..10 {
        let z = Complex64::from_polar(0.1 * i as f64, 0.3 * i as f64);
        let w = m.eval(z).unwrap();
        let direct = counting_univalent(&m, p, w).unwrap().value / (1.0 - w.norm_sqr()).powf(2.75);
        let a = univalent_b(&m, p, z).unwrap();
        assert!((a - direct).abs() <= 1e-9 * a, "{z}");
        assert!((a - b_functional(&m, p, w).unwrap()).abs() <= 1e-9 * a);
    }
}

#[test]
fn bracket_orders_and_vanishes_for_small_range() {
    let p = params(0.5);
    let poly = SelfMap::polynomial_real(&[0.1, 0.3, 0.3]).unwrap();
    let b = essential_norm_bracket(&poly, p).unwrap();
    assert_eq!(b.upper, 0.0);
    let first = b.lower_profile[0].1;
    assert!(b.lower <= 1e-3 * first, "{} vs {first}", b.lower);
    let lens = essential_norm_bracket(&SelfMap::lens(0.4).unwrap(), p).unwrap();
    let (upper, lower) = lens.pair();
    // no ordering between the two: they match the essential norm only up to constants
    assert!(upper.is_finite() && upper > 0.0);
    assert!(lower.is_finite() && lower > 0.1);
}
