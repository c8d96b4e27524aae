use qlskit::decomp::verify::{
    verify_associativity, verify_final_factor, verify_main_theorem, verify_straight_tensor, verify_xi_strategies,
    Options,
};
use qlskit::decomp::{iota_zeta, ThetaMap, XiMap, DEFAULT_DEPTH};
use qlskit::qls::{QlsCrystal, QlsPath, DEFAULT_CAP};
use qlskit::root_system::{CorootVec, Rat, WeightVec};
use qlskit::Context;

fn w(c: &[i64]) -> WeightVec {
    WeightVec::from_slice(c)
}

fn half() -> Rat {
    Rat::new(1, 2)
}

#[test]
fn main_theorem_a2_one_case_per_path_and_element() {
    let ctx = Context::from_label("A2").unwrap();
    for v in ctx.group().elements() {
        let r = verify_main_theorem(&ctx, &w(&[1, 0]), &w(&[0, 1]), &[v], Options::default()).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.cases, 9);
    }
}

#[test]
fn main_theorem_with_search_strategy() {
    let ctx = Context::from_label("A2").unwrap();
    let ws: Vec<_> = ctx.group().elements().collect();
    let r = verify_main_theorem(&ctx, &w(&[1, 0]), &w(&[1, 0]), &ws, Options::search(DEFAULT_DEPTH)).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn theta_on_a1_two_fundamentals() {
    let ctx = Context::from_label("A1").unwrap();
    let g = ctx.group();
    let (e, s1) = (g.identity(), g.simple(1));
    let theta = ThetaMap::new(&ctx, &[w(&[1]), w(&[1])], DEFAULT_CAP).unwrap();
    let mixed = QlsPath::new(vec![e, s1], vec![Rat::from(0), half(), Rat::from(1)]);
    let got = theta.apply(&mixed).unwrap();
    assert_eq!(got.len(), 2);
    assert_eq!(theta.inverse(&got).unwrap(), mixed);
    assert_eq!(theta.apply(&QlsPath::straight(s1)).unwrap(), vec![QlsPath::straight(s1), QlsPath::straight(s1)]);
    assert!(theta.check_morphism().is_ok());
}

#[test]
fn iota_zeta_in_a1() {
    let ctx = Context::from_label("A1").unwrap();
    let g = ctx.group();
    let (e, s1) = (g.identity(), g.simple(1));
    // Seen from s1, reaching e takes the quantum edge s1 -> e.
    let iz = iota_zeta(&ctx, &w(&[1]), &QlsPath::straight(e), s1).unwrap();
    assert_eq!(iz.iota, e);
    assert_eq!(iz.zeta, CorootVec::from_slice(&[1]));
    let iz = iota_zeta(&ctx, &w(&[2]), &QlsPath::new(vec![e, s1], vec![Rat::from(0), half(), Rat::from(1)]), e).unwrap();
    assert_eq!(iz.v_chain, vec![e, s1, e]);
    assert_eq!(iz.iota, e);
    assert_eq!(iz.zeta, CorootVec::from_slice(&[1]));
}

#[test]
fn straight_tensor_chain_in_rank_two() {
    for (label, shapes) in [("A2", vec![w(&[1, 0]), w(&[0, 1]), w(&[1, 0])]), ("B2", vec![w(&[1, 0]), w(&[0, 1])])] {
        let ctx = Context::from_label(label).unwrap();
        let ws: Vec<_> = ctx.group().elements().collect();
        let r = verify_straight_tensor(&ctx, &shapes, &ws, Options::default()).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_final_factor(&ctx, &shapes, Options::default()).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn decomposition_is_associative() {
    let ctx = Context::from_label("A2").unwrap();
    let r = verify_associativity(&ctx, &w(&[1, 0]), &w(&[0, 1]), &w(&[1, 0]), Options::default()).unwrap();
    assert!(r.passed(), "{r}");
    assert!(r.cases > 0);
}

#[test]
fn strategies_agree_on_samples() {
    for (label, lambda, mu) in [("A1", w(&[1]), w(&[2])), ("B2", w(&[0, 1]), w(&[1, 0]))] {
        let ctx = Context::from_label(label).unwrap();
        let r = verify_xi_strategies(&ctx, &lambda, &mu, 40, 9, Options::default()).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn semi_infinite_map_sends_highest_to_highest() {
    let ctx = Context::from_label("G2").unwrap();
    let xi = XiMap::new(&ctx, &[w(&[1, 0]), w(&[0, 1])], DEFAULT_CAP).unwrap();
    assert_eq!(xi.apply(&xi.whole().highest()).unwrap(), xi.highest_image());
}

#[test]
fn theta_size_is_product_of_factor_sizes() {
    let ctx = Context::from_label("B2").unwrap();
    let theta = ThetaMap::new(&ctx, &[w(&[1, 0]), w(&[0, 1])], DEFAULT_CAP).unwrap();
    let sizes: Vec<usize> = [w(&[1, 0]), w(&[0, 1])]
        .iter()
        .map(|l| QlsCrystal::new(&ctx, l.clone()).unwrap().enumerate(DEFAULT_CAP).unwrap().len())
        .collect();
    assert_eq!(sizes, vec![5, 4]);
    assert_eq!(theta.domain().len(), 20);
}
