use seidel_core::harness::{
    recheck, verify, verify_move_sequences, verify_staircase_moves, GraphSpace, Mutation, Property,
    SeidelOperator, VerifyOptions,
};

fn opts(operator: SeidelOperator, parallel: bool) -> VerifyOptions {
    VerifyOptions {
        operator,
        parallel,
        ..VerifyOptions::default()
    }
}

#[test]
fn spec_counts() {
    let r = verify(
        Property::Involution,
        &GraphSpace::Exhaustive { n: 5 },
        VerifyOptions::default(),
    )
    .unwrap();
    assert_eq!((r.graphs_checked, r.violations), (1024, 0));
    let r = verify(
        Property::Thm1Closure,
        &GraphSpace::Exhaustive { n: 6 },
        VerifyOptions::default(),
    )
    .unwrap();
    assert_eq!((r.graphs_checked, r.violations), (32768, 0));
    assert_eq!(r.schema, "v1");
}

#[test]
fn every_property_holds_on_small_spaces() {
    for p in Property::ALL {
        for space in [
            GraphSpace::Exhaustive { n: 5 },
            GraphSpace::Classes { n: 6 },
            GraphSpace::Bipartite { n: 6 },
        ] {
            let r = verify(p, &space, VerifyOptions::default()).unwrap();
            assert!(
                r.passed(),
                "{p} on {space}: {:?}",
                r.counterexamples.first()
            );
        }
    }
}

#[test]
fn sampled_reports_are_deterministic() {
    let space = GraphSpace::Sampled {
        n: 9,
        count: 300,
        seed: 42,
    };
    for p in [
        Property::Thm1Closure,
        Property::Thm3Iff,
        Property::BuoyDichotomy,
    ] {
        let a = verify(p, &space, VerifyOptions::default())
            .unwrap()
            .without_timing();
        let b = verify(p, &space, VerifyOptions::default())
            .unwrap()
            .without_timing();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert!(a.passed());
        assert_eq!(a.graphs_checked, 300);
    }
}

#[test]
fn parallel_matches_serial() {
    let mutant = SeidelOperator::Mutant(Mutation::AsymmetricInside);
    for p in [
        Property::Involution,
        Property::Thm1Closure,
        Property::PrimePreserve,
    ] {
        let space = GraphSpace::Exhaustive { n: 5 };
        let mut a = verify(p, &space, opts(mutant, true))
            .unwrap()
            .without_timing();
        let mut b = verify(p, &space, opts(mutant, false))
            .unwrap()
            .without_timing();
        a.counterexamples.truncate(100);
        b.counterexamples.truncate(100);
        assert_eq!(a, b);
        assert!(a.violations > 0);
    }
}

#[test]
fn operator_dependent_properties_catch_a_mutation() {
    let mutants = [Mutation::DropCreated, Mutation::AsymmetricInside];
    for p in Property::ALL.into_iter().filter(|p| p.uses_operator()) {
        let caught = mutants.iter().any(|&m| {
            let op = SeidelOperator::Mutant(m);
            (2..=6).any(|n| {
                verify(p, &GraphSpace::Exhaustive { n }, opts(op, true))
                    .unwrap()
                    .violations
                    > 0
            })
        });
        assert!(caught, "{p} misses both mutations");
    }
    for m in mutants {
        let r = verify_staircase_moves(8, opts(SeidelOperator::Mutant(m), true));
        assert!(r.violations > 0, "{m:?}");
    }
}

#[test]
fn counterexamples_replay() {
    let op = SeidelOperator::Mutant(Mutation::DropCreated);
    let r = verify(
        Property::Thm1Closure,
        &GraphSpace::Exhaustive { n: 5 },
        opts(op, true),
    )
    .unwrap();
    assert!(!r.counterexamples.is_empty());
    let mut sorted = r.counterexamples.clone();
    sorted.sort();
    assert_eq!(sorted, r.counterexamples);
    for cx in &r.counterexamples {
        assert!(recheck(Property::Thm1Closure, cx, op).unwrap());
        assert!(!recheck(Property::Thm1Closure, cx, SeidelOperator::Bitwise).unwrap());
    }
}

#[test]
fn classified_operator_agrees() {
    let op = SeidelOperator::Classified;
    for p in [
        Property::Involution,
        Property::ComplementCommute,
        Property::Prop2Equiv,
    ] {
        assert!(verify(p, &GraphSpace::Exhaustive { n: 5 }, opts(op, true))
            .unwrap()
            .passed());
    }
    assert!(verify_move_sequences(6, 20, 50, 3, opts(op, true)).passed());
}

#[test]
fn size_limits() {
    assert!(verify(
        Property::Involution,
        &GraphSpace::Exhaustive { n: 8 },
        VerifyOptions::default()
    )
    .is_err());
    assert!(verify(
        Property::Involution,
        &GraphSpace::Classes { n: 9 },
        VerifyOptions::default()
    )
    .is_err());
}
