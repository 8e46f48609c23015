//! Acceptance criteria. Runs as a plain binary and prints one PASS/FAIL line
//! per criterion.

use std::process::ExitCode;
use std::time::Instant;

use domgame::corpus::{random_corpus, trees_up_to, tree_canonical_form};
use domgame::graph::family::{complete, cycle, y_corona};
use domgame::verify::{
    check_classical_bounds_suite, check_continuation_suite, check_dual_gap_suite, check_hierarchy_suite,
    check_llbound_suite, check_parity_suite, check_path_formulas, check_special_families, check_theta,
    scan_conjectures, scan_distinct_values, GameValues, DEFAULT_CHAINS,
};
use domgame::{brute_length, game_length, Graph, Player, Report, Variant, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn report_ok(r: &Report) -> Result<(), String> {
    ensure(
        r.passed(),
        format!(
            "{}: violations {:?}, missing {:?}",
            r.suite,
            r.violations.iter().take(3).collect::<Vec<_>>(),
            r.missing_witnesses
        ),
    )
}

fn c5_values() -> Check {
    let c5 = cycle(5).unwrap();
    let d = GameValues::compute(&c5, Player::Dominator, VertexSet::EMPTY).map_err(|e| e.to_string())?;
    ensure(d.to_array() == [3, 3, 3, 3, 5], format!("(z,d,t,l,ll) = {:?}", d.to_array()))?;
    let s = game_length(&c5, Variant::LL, Player::Staller, VertexSet::EMPTY).unwrap().length;
    ensure(s.is_multiple_of(2), format!("ll' = {s} is odd"))?;
    Ok(format!("(z,d,t,l,ll) = (3,3,3,3,5), ll' = {s}"))
}

fn caterpillar() -> Graph {
    let spine = (0..6).map(|i| (i, i + 1));
    let leaves = [(1, 7), (2, 8), (3, 9), (4, 10)];
    Graph::from_edges(11, spine.chain(leaves)).unwrap()
}

fn distinct_values() -> Check {
    let r = scan_distinct_values(11).map_err(|e| e.to_string())?;
    report_ok(&r)?;
    let cat = caterpillar();
    let v = GameValues::compute(&cat, Player::Dominator, VertexSet::EMPTY).unwrap();
    ensure(v.to_array() == [5, 6, 7, 8, 9], format!("caterpillar gives {:?}", v.to_array()))?;
    let canon = tree_canonical_form(&cat);
    let found = r.witnesses.iter().any(|w| {
        tree_canonical_form(&Graph::from_graph6(&w.graph).unwrap()) == canon
    });
    ensure(found, "scan did not re-derive the 11-vertex caterpillar")?;
    ensure(
        r.witnesses.iter().all(|w| w.values["n"] == 11),
        "witness below 11 vertices",
    )?;
    Ok(format!(
        "{} trees scanned, {} witness(es) at n = 11, caterpillar among them",
        r.graphs_examined,
        r.witnesses.len()
    ))
}

fn distinct_values_extended() -> Check {
    let r = scan_distinct_values(14).map_err(|e| e.to_string())?;
    report_ok(&r)?;
    let reversed: Vec<_> = r
        .witnesses
        .iter()
        .filter(|w| w.kind == "z<t<d<l<ll" && w.values["n"] == 14)
        .collect();
    let exact = reversed
        .iter()
        .filter(|w| [("z", 5), ("t", 6), ("d", 7), ("l", 8), ("ll", 9)].iter().all(|&(k, x)| w.values[k] == x))
        .count();
    ensure(exact == 7, format!("{exact} trees with (z,t,d,l,ll) = (5,6,7,8,9) at n = 14, expected 7"))?;
    Ok(format!("{} reversed-pattern trees at n = 14, none below", reversed.len()))
}

fn path_formulas() -> Check {
    let p = check_path_formulas(18).map_err(|e| e.to_string())?;
    report_ok(&p.report)?;
    ensure(p.report.flags.is_empty(), format!("{:?}", p.report.flags))?;
    Ok(p.report.notes.join("; "))
}

fn theta() -> Check {
    let p = check_theta(16).map_err(|e| e.to_string())?;
    report_ok(&p.report)?;
    let printed_off: Vec<usize> = p
        .theta
        .iter()
        .filter(|r| r.p1 as i64 != r.p1_theta_printed)
        .map(|r| r.n)
        .collect();
    ensure(
        printed_off.iter().all(|n| n % 5 == 3 || n % 5 == 4) && !printed_off.is_empty(),
        format!("printed-formula mismatches at {printed_off:?}"),
    )?;
    ensure(
        p.report.notes.iter().any(|n| n.contains("disagrees")),
        "report does not document the printed-formula mismatch",
    )?;
    Ok(format!("floor reading exact for 3..=16; printed reading off at n = {printed_off:?}"))
}

fn property_corpus() -> Vec<Graph> {
    let mut corpus = trees_up_to(10).unwrap();
    corpus.extend(random_corpus(200, 9, 2024).unwrap());
    corpus
}

fn properties() -> Check {
    let corpus = property_corpus();
    let reports = [
        check_hierarchy_suite(&corpus),
        check_dual_gap_suite(&corpus),
        check_parity_suite(&corpus),
        check_llbound_suite(&corpus),
        check_classical_bounds_suite(&corpus),
        check_continuation_suite(&corpus, DEFAULT_CHAINS, 7),
    ];
    let mut names = Vec::new();
    for r in reports {
        let r = r.map_err(|e| e.to_string())?;
        report_ok(&r)?;
        ensure(r.graphs_examined == corpus.len(), "corpus not fully examined")?;
        names.push(r.suite);
    }
    Ok(format!("{} graphs, zero violations in {}", corpus.len(), names.join(", ")))
}

fn llbound() -> Check {
    let k2 = complete(2).unwrap();
    let two = k2.disjoint_union(&k2).unwrap();
    let three = two.disjoint_union(&k2).unwrap();
    let unions = [k2.clone(), two, three];
    let mut corpus: Vec<Graph> = unions.to_vec();
    corpus.extend(property_corpus().into_iter().filter(|g| g.n() > 2));
    let r = check_llbound_suite(&corpus).map_err(|e| e.to_string())?;
    report_ok(&r)?;
    let mut got: Vec<&str> = r.witnesses.iter().map(|w| w.graph.as_str()).collect();
    let mut want: Vec<String> = unions.iter().map(Graph::to_graph6).collect();
    got.sort();
    want.sort();
    ensure(got == want, format!("equality witnesses {got:?}"))?;
    Ok(format!("ll = n + 1 exactly on 1, 2, 3 copies of K2 among {} graphs", corpus.len()))
}

fn special_families() -> Check {
    let r = check_special_families().map_err(|e| e.to_string())?;
    report_ok(&r)?;
    Ok("F_2, F_3, K2 x K1,4, K1^Y as expected".into())
}

fn conjectures() -> Check {
    let r = scan_conjectures(11).map_err(|e| e.to_string())?;
    report_ok(&r)?;
    ensure(r.witnesses.len() == 1, format!("{} equality attainers", r.witnesses.len()))?;
    ensure(
        r.flags.len() == 1 && r.flags[0].starts_with("K2 "),
        format!("expected K2 as the only tree above 6n/7, flags {:?}", r.flags),
    )?;
    let y = y_corona(&complete(1).unwrap()).unwrap();
    let w = Graph::from_graph6(&r.witnesses[0].graph).unwrap();
    ensure(tree_canonical_form(&w) == tree_canonical_form(&y), "attainer is not K1^Y")?;
    Ok(format!(
        "{} trees, z < ll everywhere, 7*l <= 6*n for n >= 3 with equality only at K1^Y; {}",
        r.graphs_examined, r.flags[0]
    ))
}

fn oracle_equivalence() -> Check {
    let mut corpus = trees_up_to(7).unwrap();
    corpus.extend(random_corpus(100, 7, 99).unwrap());
    let mismatches: Vec<String> = corpus
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, g)| {
            let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
            let mut sets = vec![VertexSet::EMPTY];
            sets.extend((0..10).map(|_| VertexSet::from_bits(rng.random::<u64>()) & g.vertices()));
            let mut bad = Vec::new();
            for v in Variant::ALL {
                for starter in [Player::Dominator, Player::Staller] {
                    for &a in &sets {
                        let memo = game_length(g, v, starter, a).unwrap().length;
                        let brute = brute_length(g, v, starter, a).unwrap();
                        if memo != brute {
                            bad.push(format!("{} {v} {starter} A={a}: {memo} vs {brute}", g.to_graph6()));
                        }
                    }
                }
            }
            bad
        })
        .collect();
    ensure(mismatches.is_empty(), format!("{:?}", &mismatches[..mismatches.len().min(3)]))?;
    Ok(format!("{} graphs x 5 variants x 2 starters x 11 sets agree", corpus.len()))
}

fn main() -> ExitCode {
    // `cargo test -- --list` expects no work.
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let criteria: Vec<(&str, fn() -> Check)> = vec![
        ("1 five-cycle values", c5_values),
        ("2 smallest trees with five distinct values", distinct_values),
        ("2 (extended) reversed pattern first at 14 vertices", distinct_values_extended),
        ("3 path formulas", path_formulas),
        ("4 theta on pre-dominated paths", theta),
        ("5 property suites", properties),
        ("6 ll = n + 1 characterization", llbound),
        ("7 special families", special_families),
        ("8 conjecture scans", conjectures),
        ("9 memoized solver vs brute force", oracle_equivalence),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({secs:.1}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name} ({secs:.1}s): {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
