//! Holds the `acceptance` test target, which prints one PASS/FAIL line per
//! acceptance criterion. Run it with `cargo test -p regfactor-validation`.
