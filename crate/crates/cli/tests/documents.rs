use hdimp_cli::generate::{generate_random, RandomParams, SideKind};
use hdimp_cli::{run_compute, Algorithm, InstanceDocument, Quantity, Side};
use hdimp_core::{directed_hausdorff, Disc, Point, Tolerance};
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = f64> {
    prop_oneof![
        -1e6..1e6f64,
        -1.0..1.0f64,
        Just(0.0),
        any::<f64>().prop_filter("finite", |x| x.is_finite())
    ]
}

fn side() -> impl Strategy<Value = Side> {
    prop_oneof![
        prop::collection::vec((coord(), coord()), 1..6)
            .prop_map(|v| Side::precise(&v.into_iter().map(|(x, y)| Point::new(x, y)).collect::<Vec<_>>())),
        prop::collection::vec((coord(), coord(), 0.0..1e3f64), 1..6).prop_map(|v| Side::imprecise(
            &v.into_iter()
                .map(|(x, y, r)| Disc::new(Point::new(x, y), r))
                .collect::<Vec<_>>()
        )),
    ]
}

proptest! {
    #[test]
    fn instance_round_trip(p in side(), q in side(), name in proptest::option::of("[a-z0-9-]{1,12}")) {
        let mut doc = InstanceDocument::new(p, q);
        doc.name = name;
        let back = InstanceDocument::parse(&doc.emit()).unwrap();
        prop_assert_eq!(back, doc);
    }

    #[test]
    fn witnesses_recheck(seed in any::<u64>(), m in 1usize..6, n in 1usize..4, p_imprecise in any::<bool>(), q_imprecise in any::<bool>(), quantity in prop_oneof![Just(Quantity::Hmin), Just(Quantity::Hmax)]) {
        let kind = |imp: bool| if imp { SideKind::Imprecise } else { SideKind::Precise };
        if quantity == Quantity::Hmin && p_imprecise && q_imprecise {
            return Ok(());
        }
        let params = RandomParams {
            m,
            n,
            size: 10.0,
            radius: (0.2, 1.5),
            p_kind: kind(p_imprecise),
            q_kind: kind(q_imprecise),
            disjoint: false,
            unit: false,
        };
        let doc = generate_random(&params, seed).unwrap();
        let res = run_compute(&doc, quantity, Algorithm::Auto, &Tolerance::default()).unwrap();
        let w = res.witness.unwrap();
        let (wp, wq) = (w.p_points(), w.q_points());
        prop_assert!((directed_hausdorff(&wp, &wq).unwrap() - res.value).abs() < 1e-9);
        for (x, d) in wp.iter().zip(doc.p.discs()).chain(wq.iter().zip(doc.q.discs())) {
            prop_assert!(x.dist(d.centre) <= d.radius + 1e-9);
        }
    }
}
