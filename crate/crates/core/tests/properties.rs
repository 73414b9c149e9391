mod common;

use num_traits::Zero;
use proptest::prelude::*;

use wonderful::classify::Table;
use wonderful::descriptor::Descriptor;
use wonderful::exec::{self, Mode};
use wonderful::picard::{self, LineBundle};
use wonderful::rootsys::{Family, RootSystem, Weight};
use wonderful::strict;
use wonderful::symalg::lie::{derive, Side};
use wonderful::symalg::linalg::Mat;
use wonderful::symalg::{qq, Mono, Poly, Ring, Q};
use wonderful::verify::equation::{self, monomials_of_weight};
use wonderful::verify::jacobian::{random_points, Jacobian};
use wonderful::verify::{cases, suite};

fn small_q() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| qq(n, d))
}

/// Polynomials in three variables with at most five terms of degree ≤ 3.
fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((small_q(), prop::collection::vec(0u32..=3, 3)), 0..5).prop_map(|terms| {
        let mut p = Poly::zero();
        for (c, e) in terms {
            p.add_term(Mono::from_exponents(&e), c);
        }
        p
    })
}

fn ring3() -> Ring {
    let mut r = Ring::new();
    for v in ["x1", "x2", "x3"] {
        r.add_var(v, None);
    }
    r
}

fn any_type() -> impl Strategy<Value = RootSystem> {
    let types: Vec<(Family, usize)> = common::irreducible_types(6).iter().map(|rs| (rs.family, rs.rank)).collect();
    prop::sample::select(types).prop_map(|(f, n)| RootSystem::build(f, n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn render_parse_roundtrip(p in small_poly()) {
        let r = ring3();
        prop_assert_eq!(r.parse(&r.render(&p)).unwrap(), p);
    }

    #[test]
    fn square_roots(p in small_poly()) {
        let sq = &p * &p;
        let (sign, s) = sq.sqrt_up_to_sign().unwrap();
        prop_assert_eq!(sign, 1);
        prop_assert!(s == p || s == -&p);
    }

    #[test]
    fn derivative_is_a_derivation(a in small_poly(), b in small_poly(), v in 0usize..3) {
        let lhs = (&a * &b).derivative(v);
        let rhs = &(&a.derivative(v) * &b) + &(&a * &b.derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn w0_is_an_involution(rs in any_type(), coords in prop::collection::vec(-4i64..=4, 8)) {
        let w = Weight::from_ints(&coords[..rs.rank]);
        prop_assert_eq!(rs.w0_apply(&rs.w0_apply(&w)), w.clone());
        // w0 preserves the form
        prop_assert_eq!(rs.form(&rs.w0_apply(&w), &rs.w0_apply(&w)), rs.form(&w, &w));
    }

    #[test]
    fn lowest_shift_is_a_negative_root_sum(rs in any_type(), i in 0usize..6) {
        let i = i % rs.rank;
        let s = suite::lowest_shift(&rs, i);
        let ints = s.to_ints().expect("root lattice");
        prop_assert!(ints.iter().all(|&c| c <= 0));
        prop_assert!(ints.iter().any(|&c| c < 0));
    }

    #[test]
    fn nilpotent_exp_log(seed in any::<u64>()) {
        prop_assert!(common::exp_log_roundtrip(3, seed).is_ok());
    }

    #[test]
    fn kernel_vectors_are_killed(rows in prop::collection::vec(prop::collection::vec(small_q(), 4), 1..5)) {
        let m = Mat::from_rows(rows);
        let k = m.kernel();
        prop_assert_eq!(k.len() + m.rank(), 4);
        for v in k {
            let col = Mat::from_rows(v.iter().map(|x| vec![x.clone()]).collect());
            prop_assert!(m.mul(&col).is_zero());
        }
    }

    #[test]
    fn one_a_two_is_always_degenerate(np in 1u32..=6, nm in 1u32..=6) {
        prop_assert!(suite::case_1a2_degenerate(np, nm));
    }

    #[test]
    fn modes_agree(n in 0usize..40) {
        let f = |i: usize| i * i + 1;
        prop_assert_eq!(exec::map_range(Mode::Sequential, n, f), exec::map_range(Mode::Parallel, n, f));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Left-invariant derivatives shift T-weights by the direction's weight.
    #[test]
    fn gamma_derivative_shifts_weight(exps in prop::collection::vec(0u32..=2, 8), n in 2usize..=3) {
        let chart = cases::case_9b(n).unwrap();
        let m = Mono::from_exponents(&exps[..chart.dim()]);
        let p = Poly::monomial(m, qq(1, 1));
        let d = equation::gamma_derivative(&chart, &p).unwrap();
        if !d.is_zero() {
            let g = chart.gamma.clone().unwrap();
            prop_assert_eq!(chart.weight(&d).unwrap(), &chart.weight(&p).unwrap() + &g);
        }
    }

    /// Translation along `K` preserves weights, so the invariant space is
    /// still homogeneous.
    #[test]
    fn ansatz_spaces_are_homogeneous_and_invariant(i in 0usize..8) {
        let chart = cases::case_9c(3).unwrap();
        let w = -Weight::from_ints(&chart.roots()[i]);
        let stab = chart.stabilizer_directions(0);
        for p in equation::ansatz_space(&chart, &w, &stab).unwrap() {
            prop_assert_eq!(chart.weight(&p).unwrap(), w.clone());
            for &k in &stab {
                prop_assert!(derive(&p, &chart.rep.field(k, Side::Left).unwrap()).is_zero());
            }
        }
    }

    #[test]
    fn monomials_have_the_requested_weight(coords in prop::collection::vec(0i64..=3, 2)) {
        let rs = RootSystem::build(Family::G, 2).unwrap();
        let roots = rs.chart_coordinates(&Default::default());
        let w = -Weight::from_ints(&coords);
        let mut ring = Ring::new();
        for (i, r) in roots.iter().enumerate() {
            ring.add_var(&format!("x{i}"), Some(-Weight::from_ints(r)));
        }
        for m in monomials_of_weight(&roots, &w) {
            prop_assert_eq!(ring.mono_weight(&m, 2).unwrap(), w.clone());
        }
    }

    #[test]
    fn verdicts_survive_rescaling(c1 in small_q(), c2 in small_q(), l in 1u32..=2, s in 1u32..=2) {
        prop_assume!(!c1.is_zero() && !c2.is_zero());
        let chart = cases::case_9c(3).unwrap();
        let (p1, p2) = cases::colour_equations(&chart).unwrap();
        let sys = equation::final_system(&chart, &p1, &p2, (0, 1)).unwrap();
        let a = sys.verdict(l, s).unwrap().is_infeasible();
        let b = sys.scaled(&c1, &c2).verdict(l, s).unwrap().is_infeasible();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn jacobian_rank_is_bounded(seed in any::<u64>(), k in 1usize..4) {
        let chart = cases::flag_chart(2).unwrap();
        let j = Jacobian::new(&chart, false).unwrap();
        let ex = chart.generic_exp().unwrap();
        let sections = vec![ex.get(0, 2).clone(), ex.upper_right_minor(2)];
        let r = j.rank(&sections, &random_points(chart.dim(), k, seed)).unwrap();
        prop_assert!(r <= (2 * k).min(chart.dim()));
    }

    #[test]
    fn section_weights_contain_chi(seed in any::<u64>()) {
        prop_assert!(common::section_weights_contain_chi(1, seed).is_ok());
    }

    #[test]
    fn group_law_on_9b(seed in any::<u64>()) {
        let c = cases::case_9b(2).unwrap();
        prop_assert!(common::group_law_properties(&c.rep, 3, seed).is_ok());
    }
}

fn table_descriptors() -> Vec<Descriptor> {
    let t = Table::builtin();
    t.entries.iter().flat_map(|e| e.sample_ranks().into_iter().map(move |n| e.to_descriptor(n).unwrap())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn descriptor_json_roundtrip(i in 0usize..52) {
        let ds = table_descriptors();
        let d = &ds[i % ds.len()];
        prop_assert_eq!(&Descriptor::from_json(&d.to_json()).unwrap(), d);
        prop_assert!(d.validate().is_empty());
    }

    /// The canonical weight is additive in the bundle and dominant for
    /// globally generated bundles.
    #[test]
    fn canonical_weights_are_additive(i in 0usize..52, a in prop::collection::vec(0i64..=3, 2), b in prop::collection::vec(0i64..=3, 2)) {
        let ds = table_descriptors();
        let d = &ds[i % ds.len()];
        let k = d.colours.len();
        let la = LineBundle::new(d, &a[..k]).unwrap();
        let lb = LineBundle::new(d, &b[..k]).unwrap();
        let sum = picard::canonical_weight(d, &la.add(&lb)).unwrap();
        let parts = &picard::canonical_weight(d, &la).unwrap() + &picard::canonical_weight(d, &lb).unwrap();
        prop_assert_eq!(sum, parts);
        let rs = d.root_system().unwrap();
        prop_assert!(rs.is_dominant(&picard::canonical_weight(d, &la).unwrap()));
    }

    #[test]
    fn r_prime_is_mode_independent(i in 0usize..52) {
        let t = Table::builtin();
        let ds = table_descriptors();
        let d = &ds[i % ds.len()];
        prop_assert_eq!(
            strict::check_r_prime_with(d, &t, Mode::Sequential).unwrap(),
            strict::check_r_prime_with(d, &t, Mode::Parallel).unwrap()
        );
    }
}
