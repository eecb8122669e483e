use jacobi_moments::verify::{all_checks, checks, Suite};

#[test]
fn every_check_passes() {
    let failures: Vec<String> = all_checks()
        .iter()
        .map(|c| c.run())
        .filter(|r| !r.passed)
        .map(|r| format!("[{}] {}: {}", r.suite, r.name, r.detail))
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn conjecture_suite_covers_the_grid() {
    let names: Vec<String> = checks(Suite::Conjecture).into_iter().map(|c| c.name).collect();
    assert_eq!(names.len(), 12);
    assert!(names.contains(&"product-limit (3,1) a1=0 b1=1".to_string()), "{names:?}");
}
