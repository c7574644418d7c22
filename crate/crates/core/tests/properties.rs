mod common;

use common::*;
use onsager::closed_ideals::{ideal_contains, z_contains, ReciprocalIdeal};
use onsager::elduque::{self, enumerate_ideals, j_from_generators, residual_representative, z_closure};
use onsager::expr::evaluate;
use onsager::lie::jacobi_defect;
use onsager::loop_algebra::{from_loop, to_loop, FixedLoopElement, LoopElement};
use onsager::onsager::{BasisSymbol, OnsagerElement};
use onsager::poly::{antisym_decompose, crt_solve, poly_gcd, ThreePointFraction};
use onsager::scalar::{Field, GaussianRational};
use onsager::tetrahedron::{from_v, phi, phi_v, VElement};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Q> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| frac(n, d))
}

fn laurent(span: i64) -> impl Strategy<Value = L> {
    prop::collection::vec((-span..=span, rational()), 0..5).prop_map(L::from_terms)
}

fn polynomial(max_deg: usize) -> impl Strategy<Value = P> {
    prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(P::from_coeffs)
}

fn onsager_element() -> impl Strategy<Value = OnsagerElement> {
    prop::collection::vec((any::<bool>(), -5i64..=5, rational()), 0..5).prop_map(|terms| {
        OnsagerElement::from_terms(terms.into_iter().filter(|(a, l, _)| *a || *l > 0).map(|(a, i, c)| {
            (if a { BasisSymbol::A(i) } else { BasisSymbol::G(i) }, c)
        }))
    })
}

fn loop_element() -> impl Strategy<Value = LoopElement<Q>> {
    (laurent(4), laurent(4), laurent(4)).prop_map(|(p, q, r)| LoopElement::new(p, q, r))
}

fn fixed_element() -> impl Strategy<Value = FixedLoopElement> {
    onsager_element().prop_map(|x| to_loop(&x))
}

fn v_element() -> impl Strategy<Value = VElement> {
    (polynomial(3), polynomial(3), polynomial(3)).prop_map(|(a, b, c)| VElement::new(a, b, c))
}

fn reciprocal_catalog() -> Vec<P> {
    vec![
        poly(&[-1, 1]),
        poly(&[1, 1]),
        poly(&[1, -2, 1]),
        poly(&[-1, 0, 1]),
        poly(&[1, 3, 1]),
        poly(&[1, 0, -2, 0, 1]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), Q::zero());
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(a.clone() * inv, Q::one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert_eq!(a.to_string().parse::<Q>().unwrap(), a);
    }

    #[test]
    fn gaussian_inverse_and_conjugate(a in rational(), b in rational(), c in rational(), d in rational()) {
        let x = GaussianRational::new(a, b);
        let y = GaussianRational::new(c, d);
        prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
        if !x.is_zero() {
            prop_assert_eq!(x.clone() * x.inverse().unwrap(), GaussianRational::one());
        }
        prop_assert_eq!(x.to_string().parse::<GaussianRational>().unwrap(), x);
    }

    #[test]
    fn substitute_inverse_is_an_involutive_ring_map(a in laurent(6), b in laurent(6)) {
        prop_assert_eq!(a.substitute_inverse().substitute_inverse(), a.clone());
        prop_assert_eq!((&a * &b).substitute_inverse(), &a.substitute_inverse() * &b.substitute_inverse());
    }

    #[test]
    fn antisym_round_trip(coeffs in prop::collection::vec(rational(), 0..6)) {
        let r_plus = P::from_coeffs(coeffs).shift(1);
        let l = r_plus.as_laurent();
        prop_assert_eq!(antisym_decompose(&(l - &l.substitute_inverse())).unwrap(), r_plus);
    }

    #[test]
    fn division_with_remainder(a in polynomial(6), d in polynomial(3)) {
        prop_assume!(!d.is_zero());
        let (quo, rem) = a.div_rem(&d).unwrap();
        prop_assert_eq!(&(&quo * &d) + &rem, a);
        prop_assert!(rem.is_zero() || rem.degree() < d.degree());
    }

    #[test]
    fn bezout(a in polynomial(4), b in polynomial(4)) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let (g, s, t) = P::extended_gcd(&a, &b).unwrap();
        prop_assert_eq!(&(&s * &a) + &(&t * &b), g.clone());
        prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
    }

    #[test]
    fn crt_meets_every_congruence(r1 in polynomial(2), r2 in polynomial(2), r3 in polynomial(1)) {
        let moduli = [poly(&[1, 3, 1]), poly(&[1, -2, 1]), poly(&[1, 1])];
        let x = crt_solve(&[r1.clone(), r2.clone(), r3.clone()], &moduli).unwrap();
        for (r, m) in [r1, r2, r3].iter().zip(&moduli) {
            prop_assert!((&x - r).rem(m).unwrap().is_zero());
        }
        prop_assert!(x.degree().unwrap_or(0) < 5);
    }

    #[test]
    fn three_point_arithmetic_extends_laurent(a in laurent(4), b in laurent(4)) {
        let (fa, fb) = (ThreePointFraction::from_laurent(&a), ThreePointFraction::from_laurent(&b));
        prop_assert_eq!(&fa + &fb, ThreePointFraction::from_laurent(&(&a + &b)));
        prop_assert_eq!(&fa * &fb, ThreePointFraction::from_laurent(&(&a * &b)));
        prop_assert_eq!((&fa * &fb).to_laurent(), Some(&a * &b));
    }

    #[test]
    fn onsager_lie_axioms(x in onsager_element(), y in onsager_element(), z in onsager_element()) {
        prop_assert!((x.bracket(&y) + y.bracket(&x)).is_zero());
        prop_assert!(jacobi_defect(&x, &y, &z).is_zero());
        prop_assert_eq!(evaluate(&x.to_string()).unwrap().to_string(), x.to_string());
    }

    #[test]
    fn gamma_is_a_homomorphism(x in onsager_element(), y in onsager_element()) {
        prop_assert_eq!(to_loop(&x.bracket(&y)), to_loop(&x).bracket(&to_loop(&y)));
        prop_assert_eq!(from_loop(&to_loop(&x)), x.clone());
        let fx = to_loop(&x).into_loop();
        prop_assert_eq!(fx.chevalley(), fx);
    }

    #[test]
    fn involutions(x in loop_element(), y in loop_element()) {
        prop_assert_eq!(x.chevalley().chevalley(), x.clone());
        prop_assert_eq!(x.sigma().sigma(), x.clone());
        prop_assert_eq!(x.is_fixed(), x.chevalley() == x);
        prop_assert_eq!(x.bracket(&y).chevalley(), x.chevalley().bracket(&y.chevalley()));
        prop_assert_eq!(x.bracket(&y), mat_bracket(&x, &y));
        let g = x.to_gaussian();
        prop_assert_eq!(g.sigma().tau(), g.tau().chevalley());
    }

    #[test]
    fn closed_ideal_is_an_ideal(idx in 0usize..6, x in fixed_element(), y in fixed_element()) {
        let p = reciprocal_catalog()[idx].clone();
        let ideal = ReciprocalIdeal::new(p.clone()).unwrap();
        // x·P(t)P(t⁻¹) stays fixed and lies in I_P.
        let sym = &p.as_laurent().clone() * &p.as_laurent().substitute_inverse();
        let member = FixedLoopElement::new(x.as_loop().mul_poly(&sym)).unwrap();
        prop_assert!(ideal_contains(&ideal, &member));
        prop_assert!(ideal_contains(&ideal, &member.bracket(&y)));
        prop_assert!(z_contains(&ideal, &member));
        if ideal_contains(&ideal, &x) {
            prop_assert!(z_contains(&ideal, &x));
        }
    }

    #[test]
    fn v_bracket_matches_three_point_bracket(a in v_element(), b in v_element()) {
        prop_assert_eq!(from_v(&a.bracket(&b)), from_v(&a).bracket(&from_v(&b)));
    }

    #[test]
    fn phi_is_a_homomorphism(x in onsager_element(), y in onsager_element()) {
        prop_assert_eq!(phi(&x.bracket(&y)), phi(&x).bracket(&phi(&y)));
        prop_assert_eq!(phi_v(&x.bracket(&y)), phi_v(&x).bracket(&phi_v(&y)));
        prop_assert_eq!(from_v(&phi_v(&x)), phi(&x));
    }

    #[test]
    fn residual_ideals_are_ideals(
        qi in 0usize..2,
        spec_i in 0usize..16,
        coeffs in prop::collection::vec(rational(), 8),
        tail in v_element(),
        y in v_element(),
    ) {
        let qp = [poly(&[1]), poly(&[1, 3, 1])][qi].clone();
        let spec = enumerate_ideals(&qp).unwrap().flag_specs[spec_i].clone();
        let sub = spec.subspace();
        let mut s = vec![Q::zero(); 6];
        for (b, c) in sub.basis().iter().zip(&coeffs) {
            for (x, v) in s.iter_mut().zip(b) {
                *x = x.clone() + c.clone() * v.clone();
            }
        }
        let deep = tail.mul_poly(&(&qp * &poly(&[0, -1, 1])));
        let x = &residual_representative(&s, &qp) + &deep;
        prop_assert!(elduque::ideal_contains(&spec, &x));
        prop_assert!(elduque::ideal_contains(&spec, &x.bracket(&y)));
        let zc = z_closure(&spec);
        prop_assert!(zc.subspace.contains_subspace(&sub));
        prop_assert_eq!(elduque::is_closed(&spec), zc.subspace.dim() == sub.dim());
    }

    #[test]
    fn j_is_the_gcd_of_components(g in polynomial(2), a in v_element(), b in v_element()) {
        prop_assume!(!g.is_zero());
        let gens = [a.mul_poly(&g), b.mul_poly(&g)];
        prop_assume!(!gens.iter().all(VElement::is_zero));
        let j = j_from_generators(&gens).unwrap();
        prop_assert!(j.is_monic());
        prop_assert!(g.divides(&j).unwrap());
        let mut brute = P::zero();
        for v in &gens {
            for comp in v.components().into_iter().filter(|c| !c.is_zero()) {
                brute = if brute.is_zero() { comp.clone() } else { poly_gcd(&brute, comp).unwrap() };
            }
        }
        prop_assert_eq!(j, brute.monic().unwrap());
    }
}
