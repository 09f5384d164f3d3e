use foliation_core::bott::legendrian_degree_with;
use foliation_core::reference::{verify, Reference, EMBEDDED_REFERENCE};
use foliation_core::{
    interpolate_family, legendrian_degree, pencil_degree, DegreeReport, Error, Family, FiberSelection, PencilReport,
    WeightSystem,
};

#[test]
fn legendrian_report_round_trips_through_json() {
    let report = legendrian_degree(3, &WeightSystem::default()).unwrap();
    let text = serde_json::to_string(&report).unwrap();
    let back: DegreeReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
}

#[test]
fn pencil_report_round_trips_through_json() {
    let report = pencil_degree(4, &WeightSystem::new([1, 3, 9, 20]).unwrap()).unwrap();
    let back: PencilReport = serde_json::from_value(serde_json::to_value(&report).unwrap()).unwrap();
    assert_eq!(back, report);
}

#[test]
fn fiber_routes_give_identical_reports() {
    let w = WeightSystem::new([0, 1, 5, 13]).unwrap();
    for d in [2, 5] {
        let image = legendrian_degree_with(d, &w, FiberSelection::Image).unwrap();
        let kernel = legendrian_degree_with(d, &w, FiberSelection::Kernel).unwrap();
        let both = legendrian_degree_with(d, &w, FiberSelection::Both).unwrap();
        assert_eq!(image, kernel);
        assert_eq!(image, both);
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let w = WeightSystem::default();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| (legendrian_degree(4, &w).unwrap(), pencil_degree(6, &w).unwrap()))
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn weights_permuted_keep_the_degree() {
    let w = WeightSystem::default();
    let p = w.permuted([3, 1, 0, 2]);
    assert_eq!(
        legendrian_degree(3, &w).unwrap().total,
        legendrian_degree(3, &p).unwrap().total
    );
}

#[test]
fn tampered_fraction_is_named() {
    let text = EMBEDDED_REFERENCE.replace("\"7716777/336\"", "\"7716778/336\"");
    let outcomes = verify(&Reference::parse(&text).unwrap()).unwrap();
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name.clone()).collect();
    assert_eq!(failed, ["contributions"]);
}

#[test]
fn tampered_fiber_weight_is_named() {
    let text = EMBEDDED_REFERENCE.replace("[-2, 0, 2, 4, 13,", "[-2, 0, 2, 4, 14,");
    let outcomes = verify(&Reference::parse(&text).unwrap()).unwrap();
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name.clone()).collect();
    assert_eq!(failed, ["fiber-weights"]);
}

#[test]
fn malformed_reference_is_a_parse_error() {
    assert!(matches!(Reference::parse("d = \"two\""), Err(Error::Parse(_))));
}

#[test]
fn interpolation_needs_enough_points() {
    let w = WeightSystem::default();
    assert!(matches!(
        interpolate_family(Family::Legendrian, 2, 10, &w),
        Err(Error::InsufficientPoints { needed: 16, got: 9 })
    ));
}

#[test]
fn inadmissible_weights_are_rejected() {
    assert!(matches!(
        WeightSystem::new([0, 1, 2, 3]),
        Err(Error::InadmissibleWeights { .. })
    ));
    assert!(matches!(
        WeightSystem::new([0, 0, 2, 7]),
        Err(Error::InadmissibleWeights { .. })
    ));
    assert!("0,2,7".parse::<WeightSystem>().is_err());
}
