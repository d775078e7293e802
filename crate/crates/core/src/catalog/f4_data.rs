//! F4 Borel bracket table, every nonzero printed cell as `(row, column, num, den, target)`
//! meaning `[row, column] = num/den * target`. Cartan rows are printed against
//! root-vector columns only.

use super::PrintedEntry;

pub(crate) const F4_PRINTED: &[PrintedEntry] = &[
    ("h1", "x1", 2, 1, "x1"),
    ("h1", "x2", -1, 1, "x2"),
    ("h1", "x5", 1, 1, "x5"),
    ("h1", "x6", -1, 1, "x6"),
    ("h1", "x8", 1, 1, "x8"),
    ("h1", "x9", -1, 1, "x9"),
    ("h1", "x10", -1, 1, "x10"),
    ("h1", "x11", 1, 1, "x11"),
    ("h1", "x12", 1, 1, "x12"),
    ("h2", "x1", -1, 1, "x1"),
    ("h2", "x2", 2, 1, "x2"),
    ("h2", "x3", -1, 1, "x3"),
    ("h2", "x5", 1, 1, "x5"),
    ("h2", "x6", 1, 1, "x6"),
    ("h2", "x7", -1, 1, "x7"),
    ("h2", "x10", 1, 1, "x10"),
    ("h2", "x11", -1, 1, "x11"),
    ("h3", "x2", -2, 1, "x2"),
    ("h3", "x3", 2, 1, "x3"),
    ("h3", "x4", -1, 1, "x4"),
    ("h3", "x5", -2, 1, "x5"),
    ("h3", "x7", 1, 1, "x7"),
    ("h3", "x9", 2, 1, "x9"),
    ("h3", "x10", -1, 1, "x10"),
    ("h3", "x11", 2, 1, "x11"),
    ("h3", "x12", -1, 1, "x12"),
    ("h4", "x3", -1, 1, "x3"),
    ("h4", "x4", 2, 1, "x4"),
    ("h4", "x6", -1, 1, "x6"),
    ("h4", "x7", 1, 1, "x7"),
    ("h4", "x8", -1, 1, "x8"),
    ("h4", "x9", -2, 1, "x9"),
    ("h4", "x10", 1, 1, "x10"),
    ("h4", "x11", -2, 1, "x11"),
    ("h4", "x12", 1, 1, "x12"),
    ("x1", "x2", 1, 1, "x5"),
    ("x1", "x6", 1, 1, "x8"),
    ("x1", "x9", 1, 1, "x11"),
    ("x1", "x10", 1, 1, "x12"),
    ("x2", "x1", -1, 1, "x5"),
    ("x2", "x3", 1, 1, "x6"),
    ("x2", "x7", 1, 1, "x10"),
    ("x2", "x11", 1, 1, "x14"),
    ("x3", "x2", -1, 1, "x6"),
    ("x3", "x4", 1, 1, "x7"),
    ("x3", "x5", -1, 1, "x8"),
    ("x3", "x6", 1, 1, "x9"),
    ("x3", "x8", 1, 1, "x11"),
    ("x3", "x10", 1, 1, "x13"),
    ("x3", "x12", 1, 1, "x15"),
    ("x4", "x3", -1, 1, "x7"),
    ("x4", "x6", -1, 1, "x10"),
    ("x4", "x8", -1, 1, "x12"),
    ("x4", "x9", -2, 1, "x13"),
    ("x4", "x11", -2, 1, "x15"),
    ("x5", "x3", 1, 1, "x8"),
    ("x5", "x7", 1, 1, "x12"),
    ("x5", "x9", -1, 1, "x14"),
    ("x6", "x1", -1, 1, "x8"),
    ("x6", "x3", -1, 1, "x9"),
    ("x6", "x4", 1, 1, "x10"),
    ("x6", "x7", -1, 1, "x13"),
    ("x6", "x8", 1, 1, "x14"),
    ("x6", "x12", -1, 2, "x17"),
    ("x7", "x2", -1, 1, "x10"),
    ("x7", "x5", -1, 1, "x12"),
    ("x7", "x6", 1, 1, "x13"),
    ("x7", "x8", 1, 1, "x15"),
    ("x7", "x10", -1, 1, "x16"),
    ("x7", "x12", -1, 1, "x18"),
    ("x8", "x3", -1, 1, "x11"),
    ("x8", "x4", 1, 1, "x12"),
    ("x8", "x6", -1, 1, "x14"),
    ("x8", "x7", -1, 1, "x15"),
    ("x8", "x10", 1, 2, "x17"),
    ("x9", "x1", -1, 1, "x11"),
    ("x9", "x4", 2, 1, "x13"),
    ("x9", "x5", 1, 1, "x14"),
    ("x9", "x12", -1, 1, "x19"),
    ("x10", "x1", -1, 1, "x12"),
    ("x10", "x3", -1, 1, "x13"),
    ("x10", "x7", 1, 1, "x16"),
    ("x10", "x8", -1, 2, "x17"),
    ("x10", "x11", -1, 1, "x19"),
    ("x10", "x12", 1, 2, "x20"),
    ("x11", "x2", -1, 1, "x14"),
    ("x11", "x4", 2, 1, "x15"),
    ("x11", "x10", 1, 1, "x19"),
    ("x12", "x3", -1, 1, "x15"),
    ("x12", "x6", 1, 2, "x17"),
    ("x12", "x7", 1, 1, "x18"),
    ("x12", "x9", 1, 1, "x19"),
    ("x12", "x10", -1, 2, "x20"),
    ("x13", "x1", -1, 1, "x15"),
    ("x13", "x4", -1, 1, "x16"),
    ("x13", "x5", -1, 2, "x17"),
    ("x13", "x8", 1, 2, "x19"),
    ("x13", "x12", 1, 2, "x21"),
    ("x14", "x4", -1, 1, "x17"),
    ("x14", "x7", -1, 1, "x19"),
    ("x15", "x2", 1, 2, "x17"),
    ("x15", "x4", -1, 1, "x18"),
    ("x15", "x6", -1, 2, "x19"),
    ("x15", "x10", -1, 2, "x21"),
    ("x16", "x1", -1, 1, "x18"),
    ("x16", "x5", -1, 2, "x20"),
    ("x16", "x8", 1, 1, "x21"),
    ("x16", "x11", 1, 1, "x22"),
    ("x17", "x3", -1, 1, "x19"),
    ("x17", "x4", -1, 1, "x20"),
    ("x17", "x7", -1, 1, "x21"),
    ("x18", "x2", 1, 2, "x20"),
    ("x18", "x6", -1, 1, "x21"),
    ("x18", "x9", -1, 1, "x22"),
    ("x19", "x4", -1, 1, "x21"),
    ("x19", "x7", -1, 1, "x22"),
    ("x19", "x10", -1, 1, "x23"),
    ("x19", "x12", -1, 1, "x24"),
    ("x20", "x3", -2, 1, "x21"),
    ("x20", "x9", 2, 1, "x23"),
    ("x20", "x11", 2, 1, "x24"),
    ("x21", "x3", -1, 1, "x22"),
    ("x21", "x6", -1, 1, "x23"),
    ("x21", "x8", -1, 1, "x24"),
    ("x22", "x2", -1, 1, "x23"),
    ("x22", "x5", -1, 1, "x24"),
    ("x23", "x1", -1, 1, "x24"),
    ("h1", "x13", -1, 1, "x13"),
    ("h1", "x15", 1, 1, "x15"),
    ("h1", "x16", -1, 1, "x16"),
    ("h1", "x18", 1, 1, "x18"),
    ("h1", "x23", -1, 1, "x23"),
    ("h1", "x24", 1, 1, "x24"),
    ("h2", "x14", 1, 1, "x14"),
    ("h2", "x15", -1, 1, "x15"),
    ("h2", "x17", 1, 1, "x17"),
    ("h2", "x18", -1, 1, "x18"),
    ("h2", "x20", 1, 1, "x20"),
    ("h2", "x22", -1, 1, "x22"),
    ("h2", "x23", 1, 1, "x23"),
    ("h3", "x13", 1, 1, "x13"),
    ("h3", "x15", 1, 1, "x15"),
    ("h3", "x17", -1, 1, "x17"),
    ("h3", "x19", 1, 1, "x19"),
    ("h3", "x20", -2, 1, "x20"),
    ("h3", "x22", 2, 1, "x22"),
    ("h4", "x14", -2, 1, "x14"),
    ("h4", "x16", 2, 1, "x16"),
    ("h4", "x18", 2, 1, "x18"),
    ("h4", "x19", -1, 1, "x19"),
    ("h4", "x20", 2, 1, "x20"),
    ("h4", "x21", 1, 1, "x21"),
    ("x1", "x13", 1, 1, "x15"),
    ("x1", "x16", 1, 1, "x18"),
    ("x1", "x23", 1, 1, "x24"),
    ("x2", "x15", -1, 2, "x17"),
    ("x2", "x18", -1, 2, "x20"),
    ("x2", "x22", 1, 1, "x23"),
    ("x3", "x17", 1, 1, "x19"),
    ("x3", "x20", 2, 1, "x21"),
    ("x3", "x21", 1, 1, "x22"),
    ("x4", "x13", 1, 1, "x16"),
    ("x4", "x14", 1, 1, "x17"),
    ("x4", "x15", 1, 1, "x18"),
    ("x4", "x17", 1, 1, "x20"),
    ("x4", "x19", 1, 1, "x21"),
    ("x5", "x13", 1, 2, "x17"),
    ("x5", "x16", 1, 2, "x20"),
    ("x5", "x22", 1, 1, "x24"),
    ("x6", "x15", 1, 2, "x19"),
    ("x6", "x18", 1, 1, "x21"),
    ("x6", "x21", 1, 1, "x23"),
    ("x7", "x14", 1, 1, "x19"),
    ("x7", "x17", 1, 1, "x21"),
    ("x7", "x19", 1, 1, "x22"),
    ("x8", "x13", -1, 2, "x19"),
    ("x8", "x16", -1, 1, "x21"),
    ("x8", "x21", 1, 1, "x24"),
    ("x9", "x18", 1, 1, "x22"),
    ("x9", "x20", -2, 1, "x23"),
    ("x10", "x15", 1, 2, "x21"),
    ("x10", "x19", 1, 1, "x23"),
    ("x11", "x16", -1, 1, "x22"),
    ("x11", "x20", -2, 1, "x24"),
    ("x12", "x13", -1, 2, "x21"),
    ("x12", "x19", 1, 1, "x24"),
    ("x13", "x15", 1, 2, "x22"),
    ("x13", "x17", -1, 1, "x23"),
    ("x14", "x16", -1, 1, "x23"),
    ("x14", "x18", -1, 1, "x24"),
    ("x15", "x13", -1, 2, "x22"),
    ("x15", "x17", -1, 1, "x24"),
    ("x16", "x14", 1, 1, "x23"),
    ("x17", "x13", 1, 1, "x23"),
    ("x17", "x15", 1, 1, "x24"),
    ("x18", "x14", 1, 1, "x24"),
];
