use normbundle::{
    achievable, enumerate, enumerate_with_jobs, splitting_type, Achievability, MonomialSpace,
};

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

#[test]
fn histogram_totals_match_subset_count() {
    for degree in 6..=13 {
        for s in 3..degree {
            let report = enumerate(degree, s).unwrap();
            let expected = binomial(degree - 3, degree - s);
            assert_eq!(report.total_spaces, expected, "d={degree} s={s}");
            let counted: usize = report.histogram.values().map(|e| e.count).sum();
            assert_eq!(counted, expected, "d={degree} s={s}");
        }
    }
}

#[test]
fn witnesses_reproduce_their_type() {
    for (degree, s) in [(10, 4), (12, 5), (13, 6)] {
        let report = enumerate(degree, s).unwrap();
        for (c, entry) in &report.histogram {
            let space = MonomialSpace::from_center(degree, &entry.witness)
                .and_then(MonomialSpace::validate)
                .unwrap();
            assert_eq!(space.s(), s);
            assert_eq!(&splitting_type(&space.summary()).unwrap(), c);
        }
    }
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let reference = enumerate_with_jobs(14, 6, Some(1)).unwrap();
    for jobs in [Some(2), Some(3), Some(8), None] {
        assert_eq!(enumerate_with_jobs(14, 6, jobs).unwrap(), reference);
    }
    assert_eq!(enumerate_with_jobs(14, 6, Some(1)).unwrap(), reference);
}

#[test]
fn achievability_agrees_with_histogram() {
    let report = enumerate(11, 5).unwrap();
    for (c, entry) in &report.histogram {
        assert_eq!(
            achievable(11, 5, c.values()).unwrap(),
            Achievability::Achievable {
                witness: entry.witness.clone()
            }
        );
    }
    assert_eq!(
        achievable(12, 5, &[6, 4, 2, 2]).unwrap(),
        Achievability::NotAchievable
    );
}
