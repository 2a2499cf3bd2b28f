//! Empty; the criteria live in `tests/acceptance.rs`. Kept as its own
//! package so that its expected failures do not stop `cargo test` before
//! the other packages' targets have run.
