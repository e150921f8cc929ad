use cwlattice::census::{
    check_cross_projection, check_disjointness, run_census, run_census_with_threads, CensusReport,
    Family,
};
use cwlattice::lattice::NamedSet;
use cwlattice::Error;
use proptest::prelude::*;

#[test]
fn five_to_sixty_covers_every_n_once() {
    let report = run_census(5, 60, Family::All).unwrap();
    assert_eq!(report.records.len(), 56);
    let ns: Vec<i64> = report.records.iter().map(|r| r.n).collect();
    assert_eq!(ns, (5..=60).collect::<Vec<_>>());
    assert_eq!(report.summary.passed + report.summary.failed, 56);
    assert_eq!(report.range, [5, 60]);
    for r in &report.records {
        assert_eq!(r.counts.len(), 12);
        assert!(
            r.disjointness_ok && r.sandwich_ok && r.containment_ok,
            "n = {}",
            r.n
        );
    }
}

#[test]
fn cwdd_and_bounds_families_pass() {
    for family in [Family::Cwdd, Family::Bounds] {
        let report = run_census(5, 60, family).unwrap();
        assert!(report.all_pass(), "{family}");
        assert_eq!(report.first_failure, None);
    }
}

#[test]
fn first_failure_points_at_first_red_record() {
    let report = run_census(5, 30, Family::Ra).unwrap();
    let first = report.records.iter().find(|r| !r.pass).map(|r| r.n);
    assert_eq!(report.first_failure, first);
    assert_eq!(first, Some(8));
    let failed = report.records.iter().filter(|r| !r.pass).count();
    assert_eq!(report.summary.failed, failed);
}

#[test]
fn small_range_has_zero_cw_counts() {
    let report = run_census(3, 4, Family::Cwdd).unwrap();
    for r in &report.records {
        for c in &r.counts {
            assert_eq!(c.enumerated, Some(0));
            assert_eq!(c.closed_form, Some(0));
        }
    }
}

#[test]
fn record_at_five() {
    let r = &run_census(5, 5, Family::Cwdd).unwrap().records[0];
    let c = r.count(NamedSet::Cwdd).unwrap();
    assert_eq!((c.enumerated, c.closed_form), (Some(2), Some(2)));
    assert!(r.pass);
}

#[test]
fn bad_ranges() {
    assert!(matches!(
        run_census(2, 4, Family::Cwdd),
        Err(Error::Range { .. })
    ));
    assert!(matches!(
        run_census(10, 9, Family::Cwdd),
        Err(Error::Range { .. })
    ));
}

#[test]
fn serialized_reports_round_trip() {
    let report = run_census(3, 40, Family::All).unwrap();
    assert_eq!(CensusReport::from_json(&report.to_json()).unwrap(), report);
    assert_eq!(CensusReport::from_csv(&report.to_csv()).unwrap(), report);
    for family in [Family::Cwdd, Family::Ra, Family::Bounds] {
        let r = run_census(5, 12, family).unwrap();
        assert_eq!(CensusReport::from_csv(&r.to_csv()).unwrap(), r);
    }
}

#[test]
fn csv_header_order() {
    let csv = run_census(5, 5, Family::Cwdd).unwrap().to_csv();
    let header = csv.lines().next().unwrap();
    assert_eq!(
        header,
        "n,k,i,cwdd-a_enum,cwdd-a_closed,cwdd-b_enum,cwdd-b_closed,cwdd-c_enum,cwdd-c_closed,\
         cwdd_enum,cwdd_closed,disjointness_ok,sandwich_ok,containment_ok,pass"
    );
    assert_eq!(
        csv.lines().nth(1).unwrap(),
        "5,0,5,2,2,1,1,0,0,2,2,true,true,true,true"
    );
}

#[test]
fn output_is_deterministic() {
    let a = run_census(5, 50, Family::All).unwrap();
    let b = run_census_with_threads(5, 50, Family::All, Some(2)).unwrap();
    assert_eq!(a.to_csv(), b.to_csv());
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn disjointness_and_projection_through_sixty() {
    for n in 5..=60 {
        assert!(check_disjointness(n).unwrap().passes(), "n = {n}");
        assert!(check_cross_projection(n), "n = {n}");
    }
    assert!(check_disjointness(4).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn summary_is_consistent(lo in 3i64..=40, len in 0i64..=10) {
        let report = run_census(lo, lo + len, Family::All).unwrap();
        prop_assert_eq!(report.records.len() as i64, len + 1);
        prop_assert_eq!(
            report.summary.passed,
            report.records.iter().filter(|r| r.pass).count()
        );
        for r in &report.records {
            let expected = r.counts.iter().all(|c| c.enumerated == c.closed_form)
                && r.disjointness_ok && r.sandwich_ok && r.containment_ok;
            prop_assert_eq!(r.pass, expected);
            prop_assert_eq!(6 * r.k + i64::from(r.i), r.n);
        }
    }
}
