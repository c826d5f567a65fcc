//! Bundled demo specs: one per solved problem class, plus a deliberately
//! corrupted negative control whose verification must fail.

pub const DEMOS: &[(&str, &str)] = &[
    (
        "dirichlet-e_it",
        include_str!("../demos/dirichlet-e_it.json"),
    ),
    (
        "schwarz-homog-cos",
        include_str!("../demos/schwarz-homog-cos.json"),
    ),
    (
        "schwarz-nonhomog-const",
        include_str!("../demos/schwarz-nonhomog-const.json"),
    ),
    (
        "schwarz-dist-delta",
        include_str!("../demos/schwarz-dist-delta.json"),
    ),
    (
        "schwarz-order2",
        include_str!("../demos/schwarz-order2.json"),
    ),
    (
        "negative-control",
        include_str!("../demos/negative-control.json"),
    ),
];

pub fn demo_json(name: &str) -> Option<&'static str> {
    DEMOS.iter().find(|(n, _)| *n == name).map(|(_, j)| *j)
}

/// Verification exit code each demo is expected to produce.
pub fn expected_exit(name: &str) -> i32 {
    if name == "negative-control" {
        1
    } else {
        0
    }
}
