use orthocount::degree_sums::{default_config, verify_identity, IDENTITY_NAMES};

#[test]
fn registry_passes_at_default_settings() {
    for name in IDENTITY_NAMES {
        let report = verify_identity(name, None, None).unwrap();
        let config = default_config(name).unwrap();
        assert_eq!(report.checks.len(), config.qs.len());
        assert!(report.passed(), "{name}: {:?}", report.first_failure());
    }
}

#[test]
fn t_product_at_nine_to_order_twelve() {
    let report = verify_identity("T-product", Some(&[9]), Some(12)).unwrap();
    assert!(report.passed());
}

#[test]
fn old_result_at_two_to_order_eight() {
    assert!(verify_identity("old-result", Some(&[2]), Some(8)).unwrap().passed());
}

#[test]
fn indicators_hold_for_odd_q_too() {
    for name in ["indicators-O-even", "indicators-SO-even"] {
        assert!(verify_identity(name, Some(&[3, 5]), Some(5)).unwrap().passed(), "{name}");
    }
}
