use glweb::verify::catalog::split_cross_scalar;
use glweb::webcat::Sense;
use glweb_cli::suite::*;

#[test]
fn printed_split_scalar_agrees_only_for_over_crossings() {
    for n in 2..=4 {
        for k in 1..=3 {
            for l in 1..=3 {
                assert_eq!(printed_split_scalar(n, k, l, Sense::Over), split_cross_scalar(n, k, l, Sense::Over));
                assert_ne!(printed_split_scalar(n, k, l, Sense::Under), split_cross_scalar(n, k, l, Sense::Under));
                // inverse crossings give reciprocal scalars
                let p = split_cross_scalar(n, k, l, Sense::Over) * split_cross_scalar(n, k, l, Sense::Under);
                assert_eq!(p, glweb::LaurentFraction::from_int(1));
            }
        }
    }
}

#[test]
fn rank_capped_runs_are_ordered_and_small() {
    let which: Vec<_> = criteria().into_iter().filter(|c| [1, 7, 11].contains(&c.id)).collect();
    let limits = Limits { max_n: Some(2) };
    let a = run(&which, &limits, 1);
    let b = run(&which, &limits, 3);
    assert_eq!(a.iter().map(|o| o.id).collect::<Vec<_>>(), vec![1, 7, 11]);
    for (x, y) in a.iter().zip(&b) {
        assert!(x.passed());
        assert_eq!(x.reports, y.reports);
    }
    // circle checks only at n = 2
    assert_eq!(a[0].reports.len(), 2);
    let m = manifest(&a);
    assert_eq!(m["criteria"][2]["checks"].as_array().unwrap().len(), 200);
}
