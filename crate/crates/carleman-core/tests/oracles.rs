//! Cross-validation of the coefficient engines against independent
//! generating-function oracles, plus the frozen hand-derived values.

mod common;

use carleman_core::coeffs::{b_table, d_table};
use common::{b_oracle, d_oracle, rational};

#[test]
fn b_recursion_matches_generating_function_to_30() {
    let table = b_table(30).unwrap();
    let oracle = b_oracle(30);
    for (k, (engine, expect)) in table.values().iter().zip(&oracle).enumerate() {
        assert_eq!(engine, expect, "b_{}", k + 1);
    }
}

#[test]
fn d_transform_matches_generating_function_to_30() {
    let table = d_table(30).unwrap();
    let oracle = d_oracle(30);
    for (k, (engine, expect)) in table.values().iter().zip(&oracle).enumerate() {
        assert_eq!(engine, expect, "d_{}", k + 1);
    }
}

#[test]
fn oracle_reproduces_frozen_values() {
    // The oracle itself must reproduce the published table prefix and the
    // hand-derived continuations, or it is no oracle.
    let b = b_oracle(5);
    assert_eq!(b[0], rational(1, 2));
    assert_eq!(b[1], rational(1, 24));
    assert_eq!(b[2], rational(1, 48));
    assert_eq!(b[3], rational(73, 5760));
    assert_eq!(b[4], rational(11, 1280));

    let d = d_oracle(5);
    assert_eq!(d[0], rational(1, 2));
    assert_eq!(d[1], rational(0, 1));
    assert_eq!(d[2], rational(5, 288));
    assert_eq!(d[3], rational(139, 17280));
    assert_eq!(d[4], rational(119, 23040));
}
