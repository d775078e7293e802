//! G2 Borel bracket table, every nonzero printed cell as `(row, column, num, den, target)`
//! meaning `[row, column] = num/den * target`.

use super::PrintedEntry;

pub(crate) const G2_PRINTED: &[PrintedEntry] = &[
    ("h1", "x1", -1, 1, "x1"),
    ("h1", "x2", 1, 1, "x2"),
    ("h1", "x4", 2, 1, "x4"),
    ("h1", "x5", -1, 1, "x5"),
    ("h1", "x6", 1, 1, "x6"),
    ("h2", "x2", -1, 1, "x2"),
    ("h2", "x3", -1, 1, "x3"),
    ("h2", "x4", -1, 1, "x4"),
    ("h2", "x5", -1, 1, "x5"),
    ("h2", "x6", -2, 1, "x6"),
    ("x1", "h1", 1, 1, "x1"),
    ("x1", "x2", 2, 1, "x3"),
    ("x1", "x3", 3, 1, "x5"),
    ("x1", "x4", 1, 1, "x2"),
    ("x2", "h1", -1, 1, "x2"),
    ("x2", "h2", 1, 1, "x2"),
    ("x2", "x1", -2, 1, "x3"),
    ("x2", "x3", 3, 1, "x6"),
    ("x3", "h2", 1, 1, "x3"),
    ("x3", "x1", -3, 1, "x5"),
    ("x3", "x2", -3, 1, "x6"),
    ("x4", "h1", -2, 1, "x4"),
    ("x4", "h2", 1, 1, "x4"),
    ("x4", "x1", -1, 1, "x2"),
    ("x4", "x5", -1, 1, "x6"),
    ("x5", "h1", 1, 1, "x5"),
    ("x5", "h2", 1, 1, "x5"),
    ("x5", "x4", 1, 1, "x6"),
    ("x6", "h1", -1, 1, "x6"),
    ("x6", "h2", 2, 1, "x6"),
];
