mod common;

use proptest::prelude::*;
use scrollcalc::degeneration::{
    aut_eps, dim_ext1_eps_direct, dim_ext1_eps_piecewise, epsilon_config, epsilon_shift,
    pushforward_type, pushforward_type_eps, xi_eta,
};
use scrollcalc::divisor::{
    canonical_class, chi_rr, cohomology, intersect, is_very_ample, pushforward, DivisorClass,
};
use scrollcalc::extension::{
    admissible_strict, admissible_weak, bundle_pair, cohomology_e, dim_ext1_direct, ScrollConfig,
};
use scrollcalc::report::scan;
use scrollcalc::scroll::{
    codim_scroll_locus, dim_component_closed, invariants, tangent_cohomology, CodimKind,
};
use scrollcalc::splitting::{
    specialization_check, specializes, splitting_cohomology, SplittingType,
};

fn box_cfgs() -> Vec<ScrollConfig> {
    common::scan_box()
        .into_iter()
        .map(|(e, b, k)| ScrollConfig::new(e, b, k).unwrap())
        .collect()
}

#[test]
fn codimension_is_e_minus_one() {
    let (mut exact, mut bound) = (0, 0);
    for c in box_cfgs() {
        let r = codim_scroll_locus(&c).unwrap();
        let gap = dim_component_closed(&c).unwrap() - r.dim_y_lower_bound;
        assert_eq!(gap, c.e() - 1, "{c}");
        match r.kind {
            CodimKind::Exact => exact += 1,
            CodimKind::UpperBound => bound += 1,
        }
    }
    assert!(exact > 0 && bound > 0);
}

#[test]
fn tangent_and_degree_identities() {
    for c in box_cfgs() {
        let inv = invariants(&c).unwrap();
        let t = tangent_cohomology(&c).unwrap();
        let dim = dim_component_closed(&c).unwrap();
        assert_eq!(t.chi, (inv.n + 1).pow(2) - 1 - dim, "{c}");
        assert_eq!(t.h0.is_some(), dim_ext1_direct(&c).unwrap() == 0);
        if let (Some(h0), Some(h1)) = (t.h0, t.h1) {
            assert_eq!(h0 - h1, t.chi);
            assert_eq!(h1, c.e() - 1);
        }
        let c1 = bundle_pair(&c).c1;
        assert_eq!(intersect(&c1, &c1).unwrap() - c.k(), inv.d);
        assert!(inv.n >= 12 && inv.d > 0);
    }
}

#[test]
fn pushforward_sections_match_bundle() {
    for c in box_cfgs() {
        let t = pushforward_type(&c).unwrap();
        let h0 = cohomology_e(&c).unwrap().h0;
        assert_eq!(t.degree(), h0 - 5, "{c}");
        assert_eq!(splitting_cohomology(&t, 0).unwrap().h0, h0, "{c}");
        assert_eq!(splitting_cohomology(&t, 0).unwrap().h1, 0, "{c}");
    }
}

#[test]
fn shifted_type_gaps() {
    for c in box_cfgs() {
        let eps = c.e() % 2;
        let (xi, eta) = xi_eta(&c);
        assert_eq!(
            (xi[0] - xi[1], xi[1] - xi[2], eta[0] - eta[1]),
            (eps, eps, eps),
            "{c}"
        );
        let mut parts = xi.to_vec();
        parts.extend(eta);
        assert_eq!(
            SplittingType::new(parts).unwrap(),
            pushforward_type_eps(&c).unwrap(),
            "{c}"
        );
        let te = pushforward_type(&c).unwrap();
        let p = te.parts();
        let pa = bundle_pair(&c);
        let (a_parts, b_parts) = (
            pushforward(&pa.a).unwrap().unwrap(),
            pushforward(&pa.b).unwrap().unwrap(),
        );
        assert!(a_parts.parts().windows(2).all(|w| w[0] - w[1] == c.e()));
        assert!(b_parts.parts().windows(2).all(|w| w[0] - w[1] == c.e()));
        assert_eq!(p.len(), 5);
    }
}

#[test]
fn shifted_ext_and_automorphisms() {
    for c in box_cfgs() {
        let ec = epsilon_config(&c).unwrap();
        assert_eq!(
            dim_ext1_eps_piecewise(&ec),
            dim_ext1_eps_direct(&ec).unwrap(),
            "{c}"
        );
        let (a, b) = common::classes(ec.eps, ec.b_eps, ec.k_eps);
        assert_eq!(common::h1(ec.eps, a), 0, "{c}");
        assert_eq!(common::h1(ec.eps, b), 0, "{c}");
        let aut = aut_eps(&ec).unwrap();
        if dim_ext1_eps_piecewise(&ec) == 0 {
            let amb = (a.0 - b.0, a.1 - b.1);
            assert_eq!(
                aut,
                2 + common::h0(ec.eps, amb) + common::h0(ec.eps, (-amb.0, -amb.1))
            );
        } else {
            assert_eq!(aut, 1);
        }
    }
}

#[test]
fn shift_fixes_small_bases() {
    for c in box_cfgs() {
        let ec = epsilon_config(&c).unwrap();
        assert_eq!(epsilon_shift(ec.eps, ec.b_eps), (ec.eps, ec.b_eps));
    }
}

#[test]
fn sub_and_quotient_in_strict_regime() {
    for c in box_cfgs() {
        let p = bundle_pair(&c);
        assert!(is_very_ample(&p.a) && is_very_ample(&p.b), "{c}");
        assert_eq!(intersect(&p.a, &p.b).unwrap(), c.k());
        let h1a = cohomology(&p.a).unwrap().h1;
        assert_eq!(
            cohomology_e(&c).unwrap().h0,
            chi_rr(&p.a) + chi_rr(&p.b) + h1a,
            "{c}"
        );
    }
}

#[test]
fn strict_implies_weak() {
    for c in box_cfgs() {
        assert!(admissible_strict(&c));
        assert!(admissible_weak(&c).holds, "{c}");
    }
}

#[test]
fn scan_matches_box() {
    for e in 2..=4 {
        let rows = scan(e, 0, 40, Some(2)).unwrap();
        let expected: Vec<_> = common::scan_box()
            .into_iter()
            .filter(|t| t.0 == e)
            .map(|(_, b, k)| (b, k))
            .collect();
        let got: Vec<_> = rows.iter().map(|r| (r.b, r.k)).collect();
        assert_eq!(got, expected);
        assert!(rows.iter().all(|r| r.dominates));
    }
}

fn parts5() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..15, 5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn serre_duality(e in 0i64..12, a in -25i64..25, b in -60i64..60) {
        let d = DivisorClass::new(e, a, b).unwrap();
        let h = cohomology(&d).unwrap();
        let hd = cohomology(&(canonical_class(e) - d)).unwrap();
        prop_assert_eq!((h.h0, h.h1, h.h2), (hd.h2, hd.h1, hd.h0));
        prop_assert_eq!(h.h0 - h.h1 + h.h2, chi_rr(&d));
        prop_assert_eq!(h.h0, common::h0(e, (a, b)));
    }

    #[test]
    fn intersection_is_symmetric_bilinear(e in 0i64..10, x in (-20i64..20, -40i64..40),
                                          y in (-20i64..20, -40i64..40), z in (-20i64..20, -40i64..40)) {
        let mk = |p: (i64, i64)| DivisorClass::new(e, p.0, p.1).unwrap();
        let (x, y, z) = (mk(x), mk(y), mk(z));
        prop_assert_eq!(intersect(&x, &y).unwrap(), intersect(&y, &x).unwrap());
        prop_assert_eq!(
            intersect(&(x + y), &z).unwrap(),
            intersect(&x, &z).unwrap() + intersect(&y, &z).unwrap()
        );
    }

    #[test]
    fn specialization_matches_twists(g in parts5(), s in parts5()) {
        let (tg, ts) = (SplittingType::new(g.clone()).unwrap(), SplittingType::new(s.clone()).unwrap());
        prop_assert_eq!(specializes(&tg, &ts), common::twist_criterion(&g, &s));
        prop_assert_eq!(specializes(&tg, &ts), specialization_check(&tg, &ts).is_ok());
    }

    #[test]
    fn balancing_move_specializes(mut p in parts5(), (i, j) in (0usize..4).prop_flat_map(|i| (Just(i), i + 1..5))) {
        // moving one unit of degree from a smaller part to a larger one unbalances
        p.sort_unstable_by(|a, b| b.cmp(a));
        let mut q = p.clone();
        q[i] += 1;
        q[j] -= 1;
        let (tp, tq) = (SplittingType::new(p).unwrap(), SplittingType::new(q).unwrap());
        prop_assert!(specializes(&tp, &tq));
    }

    #[test]
    fn splitting_type_round_trips(p in prop::collection::vec(-1000i64..1000, 1..12)) {
        let t = SplittingType::new(p).unwrap();
        let back: SplittingType = t.to_string().parse().unwrap();
        prop_assert_eq!(&back, &t);
        let json: SplittingType = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        prop_assert_eq!(json, t);
    }

    #[test]
    fn config_round_trips(e in 2i64..50, b in -500i64..500, k in -500i64..500) {
        let c = ScrollConfig::new(e, b, k).unwrap();
        let back: ScrollConfig = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        prop_assert_eq!(back, c);
    }
}
