mod common;

use std::collections::BTreeSet;

use common::*;
use hypertree_core::harness::{enumeration_limit, SuiteConfig};
use hypertree_core::*;

#[test]
fn helly_on_enumerated_hypertrees() {
    for r in 2..=4 {
        for m in 1..=5 {
            for t in enumerate_hypertrees(m, r).unwrap() {
                for mask in 1u32..(1 << m) {
                    let family: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
                    if t.is_intersecting_family(&family).unwrap() {
                        assert!(t.common_vertex(&family).unwrap().is_some(), "{} {family:?}", t.to_json_string());
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_is_sound_up_to_guards() {
    for r in 2..=5 {
        for m in 1..=enumeration_limit(r) {
            let trees = enumerate_hypertrees(m, r).unwrap();
            let codes: BTreeSet<String> = trees.iter().map(|t| canonical_code(t).unwrap().to_string()).collect();
            assert_eq!(codes.len(), trees.len());
            for t in &trees {
                let report = t.validate();
                assert!(report.uniform && report.linear && report.is_hypertree, "{}", t.to_json_string());
                assert_eq!((t.m(), t.n()), (m, m * (r - 1) + 1));
            }
        }
    }
}

#[test]
fn r2_tree_counts_to_nine_edges() {
    // unlabeled trees on 9 and 10 vertices
    assert_eq!(enumerate_hypertrees(8, 2).unwrap().len(), 47);
    assert_eq!(enumerate_hypertrees(9, 2).unwrap().len(), 106);
}

#[test]
fn growth_oracle_agrees_for_r3() {
    for m in 1..=5 {
        let naive = classes_by_petgraph(all_growth_sequences(m, 3));
        assert_eq!(naive.len(), enumerate_hypertrees(m, 3).unwrap().len(), "m={m}");
    }
}

#[test]
fn figure_two_tree() {
    let a = build_a(13, 9, 4).unwrap();
    let s = build_s(&[3, 3, 2, 0, 0], 4).unwrap();
    assert!(is_isomorphic(&a, &s).unwrap());
    assert_eq!(matching_number(&a), 9);
    let bound = rho_bound(13, 9, 4).unwrap();
    assert!((bound.rho - spectral_radius_polyroot(&a).unwrap().rho).abs() < 1e-8);
}

#[test]
fn winners_satisfy_matching_claims() {
    for (m, k, r) in [(5, 3, 2), (6, 4, 3), (5, 3, 4), (8, 4, 2)] {
        let rep = verify_extremal(m, k, r, false).unwrap();
        assert_eq!(rep.pendent_matching, Some(true), "({m},{k},{r})");
        assert_eq!(rep.common_vertex, Some(true), "({m},{k},{r})");
    }
}

#[test]
fn suite_reports_are_deterministic() {
    let dir = std::env::temp_dir().join(format!("hypertree-suite-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut outputs = Vec::new();
    for run in 0..2 {
        let cfg = SuiteConfig {
            csv: Some(dir.join(format!("run{run}.csv"))),
            json: Some(dir.join(format!("run{run}.json"))),
            ..SuiteConfig::desk_scale()
        };
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.exit_code(), 0);
        outputs.push((
            std::fs::read(cfg.csv.as_ref().unwrap()).unwrap(),
            std::fs::read(cfg.json.as_ref().unwrap()).unwrap(),
        ));
    }
    assert_eq!(outputs[0], outputs[1]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn both_interpretations_pick_the_same_winner() {
    for (m, k, r) in [(4, 2, 2), (5, 2, 3), (6, 3, 3), (5, 2, 4)] {
        let exact = verify_extremal(m, k, r, false).unwrap();
        let at_least = verify_extremal(m, k, r, true).unwrap();
        assert_eq!(exact.winner_code, at_least.winner_code);
        assert!(at_least.class_count >= exact.class_count);
    }
}

#[test]
fn infeasible_triples_are_typed() {
    assert!(matches!(rho_bound(5, 4, 3), Err(Error::Infeasible { .. })));
    assert!(matches!(build_a(5, 4, 3), Err(Error::Infeasible { .. })));
    let p = extremal_params(5, 4, 3).unwrap();
    assert!(!p.feasible);
}

#[test]
fn spec_move_examples() {
    let star = move_edges(&p4(), 1, &[(2, 2)]).unwrap();
    assert!(is_isomorphic(&star, &hyperstar(3, 2).unwrap()).unwrap());
    let s3 = move_edges(&path3(), 3, &[(0, 2), (2, 4)]).unwrap();
    assert!(is_isomorphic(&s3, &hyperstar(3, 3).unwrap()).unwrap());
}
