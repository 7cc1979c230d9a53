//! Host crate for the `acceptance` test target in `tests/acceptance.rs`.
