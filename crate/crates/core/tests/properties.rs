//! Randomized invariants of the algebra, jets, operators and toric layers.

mod common;

use std::collections::BTreeSet;

use common::{qr, Q};
use jetorder::algebra::{DifferentialOperator, Exponent, Polynomial};
use jetorder::cli::{parse_space, serialize_space};
use jetorder::diffops::{bounding_box_betas, dense_evaluation_image, evaluation_image, preserving_weight_space};
use jetorder::jets::{generic_n_inj, n_inj_at, EvalPoint, SubspaceV};
use jetorder::toric::{
    edge_stats, faces, hirzebruch, n_inj_face, n_inj_hilbert, n_inj_max, n_inj_vertex, n_surj_toric, vertex_chart,
    LatticePolytope,
};
use jetorder::ComputeConfig;
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| qr(n, d))
}

fn exponent2(max: u32) -> impl Strategy<Value = Exponent> {
    prop::collection::vec(0..=max, 2).prop_map(Exponent::new)
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((exponent2(3), rational()), 0..5)
        .prop_map(|terms| Polynomial::from_terms(2, terms).unwrap())
}

fn operator() -> impl Strategy<Value = DifferentialOperator> {
    prop::collection::vec((exponent2(2), exponent2(2), rational()), 0..4)
        .prop_map(|terms| DifferentialOperator::from_terms(2, terms).unwrap())
}

fn point_set(nvars: usize, side: u32, max: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::btree_set(prop::collection::vec(0..=side, nvars), 1..=max)
        .prop_map(|s| s.into_iter().collect())
}

fn space(pts: &[Vec<u32>]) -> SubspaceV {
    SubspaceV::from_monomials(pts[0].len(), pts.iter().cloned().map(Exponent::new).collect()).unwrap()
}

fn smooth_polytope() -> impl Strategy<Value = LatticePolytope> {
    prop_oneof![
        (1u32..=3, 1u32..=2, 0u32..=3).prop_map(|(r, l, extra)| hirzebruch(r, l * r + extra, l).unwrap()),
        (1u32..=4, 1u32..=4).prop_map(|(a, b)| {
            let e = |x, y| Exponent::new(vec![x, y]);
            LatticePolytope::from_vertices(&[e(0, 0), e(a, 0), e(0, b), e(a, b)]).unwrap()
        }),
    ]
    .prop_filter("smooth", |p| jetorder::toric::smooth_check(p).unwrap().smooth)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn polynomial_ring_axioms(p in polynomial(), q in polynomial(), r in polynomial()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_map(p in polynomial(), q in polynomial(), a in rational(), b in rational()) {
        let pt = [a, b];
        prop_assert_eq!((&p * &q).eval(&pt).unwrap(), p.eval(&pt).unwrap() * q.eval(&pt).unwrap());
        prop_assert_eq!((&p + &q).eval(&pt).unwrap(), p.eval(&pt).unwrap() + q.eval(&pt).unwrap());
    }

    #[test]
    fn composition_is_associative_and_acts(a in operator(), b in operator(), c in operator(), p in polynomial()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        let composed = a.compose(&b).unwrap().apply(&p).unwrap();
        prop_assert_eq!(composed, a.apply(&b.apply(&p).unwrap()).unwrap());
    }

    #[test]
    fn weight_split_recombines(a in operator()) {
        let parts = a.weight_split();
        let sum = parts.values().fold(DifferentialOperator::zero(2), |acc, op| &acc + op);
        prop_assert_eq!(sum, a);
        for (w, op) in &parts {
            prop_assert_eq!(op.weight(), Some(w.clone()));
        }
    }

    #[test]
    fn weight_shifts_monomials(a in operator(), m in exponent2(4)) {
        // A weight-w operator sends x^m into the line through x^(m + w).
        for (w, op) in a.weight_split() {
            let image = op.apply(&Polynomial::monomial(m.clone(), qr(1, 1))).unwrap();
            for (e, _) in image.terms() {
                prop_assert_eq!(Some(e.clone()), m.shifted(&w));
            }
        }
    }

    #[test]
    fn serde_round_trips(p in polynomial(), a in operator()) {
        let ps = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Polynomial>(&ps).unwrap(), p);
        let as_ = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<DifferentialOperator>(&as_).unwrap(), a);
    }

    #[test]
    fn space_documents_round_trip(pts in point_set(2, 4, 6), p in polynomial(), q in polynomial()) {
        let v = space(&pts);
        let (back, _) = parse_space(&serialize_space(&v)).unwrap();
        prop_assert_eq!(back.basis(), v.basis());
        if let Ok(w) = SubspaceV::new(2, vec![p, q]) {
            let (back, _) = parse_space(&serialize_space(&w)).unwrap();
            prop_assert_eq!(back.basis(), w.basis());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn pointwise_orders_match_taylor_oracle(pts in point_set(2, 4, 6), a in rational(), b in rational(), zero in 0usize..4) {
        let mut x = vec![a, b];
        if zero < 2 {
            x[zero] = Q::zero();
        }
        let cfg = ComputeConfig::default();
        let r = n_inj_at(&space(&pts), &EvalPoint::At(x.clone()), &cfg).unwrap();
        prop_assert_eq!(r.n_inj, common::n_inj_oracle(&pts, &x));
        prop_assert_eq!(r.n_surj, common::n_surj_oracle(&pts, &x));
        prop_assert!(r.n_inj >= generic_n_inj(&space(&pts), &cfg).unwrap());
        prop_assert!(r.rank_profile.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(*r.rank_profile.last().unwrap(), pts.len());
    }

    #[test]
    fn hilbert_route_equals_generic_jets(pts in point_set(2, 4, 8)) {
        let exps: Vec<Exponent> = pts.iter().cloned().map(Exponent::new).collect();
        let cfg = ComputeConfig::default();
        prop_assert_eq!(n_inj_hilbert(&exps).n_inj, generic_n_inj(&space(&pts), &cfg).unwrap());
    }

    #[test]
    fn weight_space_operators_preserve(pts in point_set(2, 3, 5), n in 0u32..=2) {
        let exps: Vec<Exponent> = pts.iter().cloned().map(Exponent::new).collect();
        let weights: BTreeSet<Vec<i64>> = exps
            .iter()
            .flat_map(|a| exps.iter().map(move |b| a.to_signed().iter().zip(b.to_signed()).map(|(x, y)| x - y).collect()))
            .collect();
        for w in weights {
            let ws = preserving_weight_space(&exps, &w, n).unwrap();
            for op in &ws.basis {
                prop_assert_eq!(op.weight(), Some(w.clone()));
                let terms: Vec<(Vec<u32>, Vec<u32>, Q)> = op
                    .terms()
                    .map(|(b, a, c)| (b.as_slice().to_vec(), a.as_slice().to_vec(), c.clone()))
                    .collect();
                prop_assert!(common::preserves(&terms, &pts));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    #[test]
    fn image_is_monotone_and_method_independent(pts in point_set(2, 2, 4)) {
        let v = space(&pts);
        let exps = v.monomial_points().unwrap().to_vec();
        let mut last = 0;
        for n in 0..=2 {
            let img = evaluation_image(&v, n).unwrap();
            prop_assert!(img.rank >= last);
            last = img.rank;
            let (dense, _) = dense_evaluation_image(&v, n, &bounding_box_betas(&exps, n)).unwrap();
            prop_assert!(img.same_span(&dense));
        }
    }

    #[test]
    fn toric_orders_agree_with_charts(p in smooth_polytope()) {
        let mut vertex_max = 0;
        for i in 0..p.vertices.len() {
            let chart = vertex_chart(&p, i).unwrap();
            let raw: Vec<Vec<u32>> = chart.exponents.iter().map(|e| e.as_slice().to_vec()).collect();
            let formula = n_inj_vertex(&p, i).unwrap();
            prop_assert_eq!(formula, common::n_inj_oracle(&raw, &[Q::zero(), Q::zero()]));
            vertex_max = vertex_max.max(formula);
        }
        let face_max = faces(&p).unwrap().iter().map(|f| n_inj_face(&p, f).unwrap()).max().unwrap();
        prop_assert_eq!(vertex_max, face_max);
        prop_assert_eq!(n_inj_max(&p).unwrap(), vertex_max);
        let stats = edge_stats(&p).unwrap();
        prop_assert_eq!(n_surj_toric(&p).unwrap(), *stats.lengths.iter().min().unwrap());
    }
}
