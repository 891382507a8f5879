use quandle_core::enumeration::{enumerate_group, enumerate_quandle, quotient_consistency, Caps, EnumOutcome};
use quandle_core::groups::{coxeter_quandle, dehn_quandle, symmetric_group, CoxeterMatrix, FiniteGroup};
use quandle_core::presentation::{
    artin_quandle, augment_n, coxeter_quandle_presentation, dehn_presentation_from_group,
    env_presentation, parse, trefoil_quandle, Presentation,
};
use quandle_core::quandle::find_isomorphism;
use quandle_core::{FiniteQuandle, GroupPresentation, GroupWord, Sign};

fn trefoil_n(n: usize) -> EnumOutcome<quandle_core::enumeration::QuandleResult> {
    enumerate_quandle(&augment_n(&trefoil_quandle(), n), Caps::quandle()).unwrap()
}

#[test]
fn trefoil_n_quotients_are_finite_for_small_n() {
    // sizes independently checked below: axioms, relations, n-quandle, connected
    let expected = [(2, 3), (3, 4), (4, 6), (5, 12)];
    for (n, size) in expected {
        let r = trefoil_n(n).finished().unwrap_or_else(|| panic!("n={n} overflowed"));
        let q = &r.quandle;
        q.validate().unwrap();
        assert!(r.satisfies(&augment_n(&trefoil_quandle(), n)), "n={n}");
        assert!(q.is_n_quandle(n), "n={n}");
        assert!(q.is_connected(), "n={n}");
        assert_eq!(q.size(), size, "n={n}");
    }
}

#[test]
fn trefoil_six_overflows() {
    let out = trefoil_n(6);
    assert!(matches!(out, EnumOutcome::Overflow { cap: 100_000, .. }));
}

#[test]
fn trefoil_quotients_match_the_conjugation_model() {
    // the trefoil quandle is D(S^G) for G = B_3, S = {a, b}; its n-quotient maps
    // onto the Dehn quandle of B_3 / <<a^n>> (finite for n <= 5)
    for n in 2..=5 {
        let env = env_presentation(&trefoil_quandle(), None).with_generator_powers(n);
        let g = enumerate_group(&env, Caps::group()).finished().unwrap();
        let q = trefoil_n(n as usize).finished().unwrap().quandle;
        let inn = q.inner_group(1_000_000).unwrap().order();
        assert_eq!(g.order % inn, 0, "n={n}: |G_n| = {}, |Inn| = {inn}", g.order);
    }
}

#[test]
fn artin_involutory_quotients_are_coxeter_quandles() {
    for ty in ["A2", "A3", "I2(4)", "I2(5)", "B2", "B3"] {
        let m: CoxeterMatrix = ty.parse().unwrap();
        let r = enumerate_quandle(&coxeter_quandle_presentation(&m), Caps::quandle())
            .unwrap()
            .finished()
            .unwrap();
        let target = coxeter_quandle(&m).unwrap();
        assert_eq!(r.size(), target.size(), "{ty}");
        assert!(find_isomorphism(&r.quandle, &target).is_some(), "{ty}");
    }
}

#[test]
fn artin_quandle_of_a1_is_a_point() {
    let m: CoxeterMatrix = "A1".parse().unwrap();
    let r = enumerate_quandle(&artin_quandle(&m), Caps::quandle()).unwrap().finished().unwrap();
    assert_eq!(r.size(), 1);
}

#[test]
fn dehn_recipe_presents_transposition_quandles() {
    // Coxeter presentation of S_4; the recipe's candidate quandle presentation
    // must at least hold in D(T^{S_4}) at the simple transpositions
    let m: CoxeterMatrix = "A3".parse().unwrap();
    let gp = quandle_core::presentation::coxeter_group(&m);
    let qp = dehn_presentation_from_group(&gp);
    let q = coxeter_quandle(&m).unwrap();
    let labels = q.labels().unwrap().to_vec();
    let assignment: Vec<usize> = ["(1 2)", "(2 3)", "(3 4)"]
        .iter()
        .map(|s| labels.iter().position(|l| l == s).unwrap())
        .collect();
    assert!(qp.holds_in(&q, &assignment));
    // the candidate maps homomorphically onto D(T^{S_4}) via its words
    let r = enumerate_quandle(&qp, Caps::quandle()).unwrap().finished().unwrap();
    let phi: Vec<usize> = r
        .words
        .iter()
        .map(|w| quandle_core::presentation::evaluate(w, &q, &assignment))
        .collect();
    for x in 0..r.size() {
        for y in 0..r.size() {
            assert_eq!(phi[r.quandle.op(x, y)], q.op(phi[x], phi[y]));
        }
    }
    let mut image = phi.clone();
    image.sort_unstable();
    image.dedup();
    assert_eq!(image.len(), q.size());
    // but it is strictly larger: the relations x * r = x never identify the
    // orbits of distinct generators, and each orbit is S_4 / <s_i> (12 points)
    assert_eq!(r.size(), 36);
    assert_eq!(r.quandle.orbits().len(), 3);
}

#[test]
fn group_orders() {
    let b3 = match parse("group< s, t | s t s t^-1 s^-1 t^-1 >").unwrap() {
        Presentation::Group(g) => g,
        Presentation::Quandle(_) => unreachable!(),
    };
    let order = |g: GroupPresentation| enumerate_group(&g, Caps::group()).finished().unwrap().order;
    assert_eq!(order(b3.clone().with_generator_powers(2)), symmetric_group(3).unwrap().order());
    assert_eq!(order(b3.with_generator_powers(3)), 24);
    // S_4 from its Coxeter presentation
    let s4 = quandle_core::presentation::coxeter_group(&"A3".parse().unwrap());
    assert_eq!(order(s4), 24);
}

#[test]
fn fq_presentations_of_small_quandles_are_finite() {
    let s3 = symmetric_group(3).unwrap();
    let corpus = vec![
        FiniteQuandle::trivial(1),
        FiniteQuandle::trivial(3),
        FiniteQuandle::dihedral(3),
        FiniteQuandle::dihedral(4),
        FiniteQuandle::alexander(4, 3).unwrap(),
        dehn_quandle(&s3, &[s3.elements()[1].clone()], 100).unwrap(),
    ];
    for q in corpus {
        let out = enumerate_group(&q.fq_presentation(), Caps::group());
        let g = out.finished().unwrap_or_else(|| panic!("F(Q) overflow for {q:?}"));
        // F(Q) maps onto Inn(Q)
        assert_eq!(g.order % q.inner_group(1000).unwrap().order(), 0);
    }
}

#[test]
fn consistency_on_trefoil_routes() {
    // the unaugmented trefoil quandle is infinite, so the direct route overflows
    let out = quotient_consistency(&trefoil_quandle(), 2, Caps::rows(2_000)).unwrap();
    assert!(!out.is_finished());
    // a finite presentation: the table presentation of R_5
    let p = table_presentation(&FiniteQuandle::dihedral(5));
    for n in 2..=4 {
        let rep = quotient_consistency(&p, n, Caps::quandle()).unwrap().finished().unwrap();
        assert!(rep.isomorphic, "n={n}: {rep:?}");
    }
}

#[test]
fn single_relator_group_words() {
    let w = GroupWord::from_letters(vec![(0, Sign::Pos), (0, Sign::Neg)]);
    assert!(w.is_empty());
}

/// Every element a generator, relations `x * y = z` from the table.
fn table_presentation(q: &FiniteQuandle) -> quandle_core::QuandlePresentation {
    let names = (0..q.size()).map(|i| format!("x{i}")).collect();
    let mut rels = Vec::new();
    for x in 0..q.size() {
        for y in 0..q.size() {
            rels.push((
                quandle_core::QWord::new(x, vec![(y, Sign::Pos)]),
                quandle_core::QWord::generator(q.op(x, y)),
            ));
        }
    }
    quandle_core::QuandlePresentation::new(names, rels)
}

mod properties {
    use proptest::prelude::*;
    use quandle_core::enumeration::{enumerate_quandle, Caps, EnumOutcome, QuandleResult};
    use quandle_core::presentation::{augment_n, evaluate};
    use quandle_core::{QWord, QuandlePresentation, Sign};

    fn sign() -> impl Strategy<Value = Sign> {
        prop_oneof![Just(Sign::Pos), Just(Sign::Neg)]
    }

    fn presentation() -> impl Strategy<Value = QuandlePresentation> {
        (1usize..=3).prop_flat_map(|gens| {
            let word = move || (0..gens, prop::collection::vec((0..gens, sign()), 0..=3)).prop_map(|(b, t)| QWord::new(b, t));
            (prop::collection::vec((word(), word()), 1..=3), 2usize..=4).prop_map(move |(rels, n)| {
                augment_n(&QuandlePresentation::new((0..gens).map(|i| format!("x{i}")).collect(), rels), n)
            })
        })
    }

    fn run(p: &QuandlePresentation, rows: usize) -> Option<EnumOutcome<QuandleResult>> {
        enumerate_quandle(p, Caps::rows(rows)).ok()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn finished_tables_are_sound(p in presentation()) {
            if let Some(EnumOutcome::Finished(r)) = run(&p, 400) {
                prop_assert!(r.quandle.validate().is_ok());
                prop_assert!(r.satisfies(&p));
                // every element is reached from a generator: each orbit holds a generator image
                let gens: Vec<usize> = (0..p.generators().len())
                    .map(|g| evaluate(&QWord::generator(g), &r.quandle, &r.generators))
                    .collect();
                for orbit in r.quandle.orbits() {
                    prop_assert!(orbit.iter().any(|x| gens.contains(x)));
                }
                for (x, w) in r.words.iter().enumerate() {
                    prop_assert_eq!(evaluate(w, &r.quandle, &r.generators), x);
                }
            }
        }

        #[test]
        fn raising_caps_keeps_answers(p in presentation()) {
            let small = run(&p, 200);
            let large = run(&p, 800);
            if let Some(EnumOutcome::Finished(a)) = small {
                match large {
                    Some(EnumOutcome::Finished(b)) => prop_assert_eq!(a.quandle.rows(), b.quandle.rows()),
                    _ => prop_assert!(false, "finished at the smaller cap only"),
                }
            }
        }

        #[test]
        fn enumeration_is_deterministic(p in presentation()) {
            let a = run(&p, 400);
            let b = run(&p, 400);
            match (a, b) {
                (Some(EnumOutcome::Finished(a)), Some(EnumOutcome::Finished(b))) => {
                    prop_assert_eq!(a.quandle.rows(), b.quandle.rows());
                    prop_assert_eq!(a.words, b.words);
                }
                (Some(EnumOutcome::Overflow { rows: r1, .. }), Some(EnumOutcome::Overflow { rows: r2, .. })) => {
                    prop_assert_eq!(r1, r2)
                }
                (None, None) => {}
                _ => prop_assert!(false, "outcomes differ"),
            }
        }
    }
}
