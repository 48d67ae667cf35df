//! Embedded golden data: the ten published deformed-product tables for the
//! rank 2 and 3 doubly-laced groups, the explicit facet lists for the six
//! rank 2 and 3 types, and the published facet counts.
//!
//! Sources: the deformed multiplication tables are from Belkale-Kumar,
//! Invent. Math. 166 (2006) sec. 10 and Kumar-Leeb-Millson, Contemp. Math.
//! 332 (2003); the explicit rank 2 facet lists from Kapovich-Leeb-Millson
//! and the rank 3 lists from Kumar-Leeb-Millson; facet counts as collected
//! in the survey literature (with D4 due to Kapovich-Kumar-Millson).
//!
//! Data is transcribed verbatim; the `--diff-golden` comparisons never
//! mutate it. Known defects are logged by the comparator, not silently
//! corrected.

/// One term of a printed table cell: coefficient, tau exponent, target label.
pub type GoldenTerm = (i64, u16, &'static str);

/// One printed cell: row word, column word, expansion (empty = printed zero).
pub type GoldenCell = (&'static str, &'static str, &'static [GoldenTerm]);

pub struct GoldenTable {
    pub label: &'static str,
    /// 1-based maximal parabolic index.
    pub parabolic: usize,
    /// Paper basis labels in print order: (display name, reduced word).
    pub basis: &'static [(&'static str, &'static str)],
    pub cells: &'static [GoldenCell],
}

pub const TABLES: &[GoldenTable] = &[
    // B2, P1
    GoldenTable {
        label: "B2",
        parabolic: 1,
        basis: &[("b1", "r"), ("b2", "sr"), ("b3", "rsr")],
        cells: &[
            ("r", "r", &[(2, 0, "sr")]),
            ("r", "sr", &[(1, 0, "rsr")]),
            ("r", "rsr", &[]),
        ],
    },
    // B2, P2
    GoldenTable {
        label: "B2",
        parabolic: 2,
        basis: &[("b1", "s"), ("b2", "rs"), ("b3", "srs")],
        cells: &[
            ("s", "s", &[(1, 1, "rs")]),
            ("s", "rs", &[(1, 0, "srs")]),
            ("s", "srs", &[]),
        ],
    },
    // G2, P1
    GoldenTable {
        label: "G2",
        parabolic: 1,
        basis: &[
            ("a1", "r"),
            ("a2", "sr"),
            ("a3", "rsr"),
            ("a4", "srsr"),
            ("a5", "rsrsr"),
        ],
        cells: &[
            ("r", "r", &[(1, 2, "sr")]),
            ("r", "sr", &[(5, 1, "rsr")]),
            ("r", "rsr", &[(1, 2, "srsr")]),
            ("r", "srsr", &[(1, 0, "rsrsr")]),
            ("r", "rsrsr", &[]),
            ("sr", "sr", &[(5, 1, "srsr")]),
            ("sr", "rsr", &[(1, 0, "rsrsr")]),
            ("sr", "srsr", &[]),
            ("sr", "rsrsr", &[]),
        ],
    },
    // G2, P2
    GoldenTable {
        label: "G2",
        parabolic: 2,
        basis: &[
            ("a1", "s"),
            ("a2", "rs"),
            ("a3", "srs"),
            ("a4", "rsrs"),
            ("a5", "srsrs"),
        ],
        cells: &[
            ("s", "s", &[(3, 0, "rs")]),
            ("s", "rs", &[(2, 1, "srs")]),
            ("s", "srs", &[(3, 0, "rsrs")]),
            ("s", "rsrs", &[(1, 0, "srsrs")]),
            ("s", "srsrs", &[]),
            ("rs", "rs", &[(2, 1, "rsrs")]),
            ("rs", "srs", &[(1, 0, "srsrs")]),
            ("rs", "rsrs", &[]),
            ("rs", "srsrs", &[]),
        ],
    },
    // B3, P1
    GoldenTable {
        label: "B3",
        parabolic: 1,
        basis: &[
            ("b1", "r"),
            ("b2", "sr"),
            ("b3", "tsr"),
            ("b4", "stsr"),
            ("b5", "rstsr"),
        ],
        cells: &[
            ("r", "r", &[(1, 0, "sr")]),
            ("r", "sr", &[(2, 0, "tsr")]),
            ("r", "tsr", &[(1, 0, "stsr")]),
            ("r", "stsr", &[(1, 0, "rstsr")]),
            ("r", "rstsr", &[]),
            ("sr", "sr", &[(2, 0, "stsr")]),
            ("sr", "tsr", &[(1, 0, "rstsr")]),
            ("sr", "stsr", &[]),
            ("sr", "rstsr", &[]),
        ],
    },
    // B3, P2
    GoldenTable {
        label: "B3",
        parabolic: 2,
        basis: &[
            ("b1", "s"),
            ("b2'", "rs"),
            ("b2''", "ts"),
            ("b3'", "rts"),
            ("b3''", "sts"),
            ("b4'", "srts"),
            ("b4''", "rsts"),
            ("b5'", "tsrts"),
            ("b5''", "rstrs"),
            ("b6", "rtsrts"),
            ("b7", "srtsrts"),
        ],
        cells: &[
            ("s", "s", &[(1, 0, "rs"), (2, 0, "ts")]),
            ("s", "rs", &[(2, 0, "rts")]),
            ("s", "ts", &[(1, 0, "rts"), (1, 0, "sts")]),
            ("s", "rts", &[(2, 1, "srts"), (1, 1, "rsts")]),
            ("s", "sts", &[(1, 1, "srts"), (2, 1, "rsts")]),
            ("s", "srts", &[(2, 0, "tsrts"), (1, 0, "rstrs")]),
            ("s", "rsts", &[(1, 0, "rstrs")]),
            ("s", "tsrts", &[(1, 0, "rtsrts")]),
            ("s", "rstrs", &[(2, 0, "rtsrts")]),
            ("s", "rtsrts", &[(1, 0, "srtsrts")]),
            ("s", "srtsrts", &[]),
            ("rs", "rs", &[(2, 1, "srts")]),
            ("rs", "ts", &[(1, 1, "srts"), (1, 1, "rsts")]),
            ("rs", "rts", &[(2, 1, "tsrts"), (1, 1, "rstrs")]),
            ("rs", "sts", &[(1, 1, "rstrs")]),
            ("rs", "srts", &[(2, 0, "rtsrts")]),
            ("rs", "rsts", &[]),
            ("rs", "tsrts", &[(1, 0, "srtsrts")]),
            ("rs", "rstrs", &[]),
            ("rs", "rtsrts", &[]),
            ("rs", "srtsrts", &[]),
            ("ts", "ts", &[(1, 1, "srts"), (1, 1, "rsts")]),
            ("ts", "rts", &[(1, 1, "tsrts"), (1, 1, "rstrs")]),
            ("ts", "sts", &[(1, 1, "tsrts"), (1, 1, "rstrs")]),
            ("ts", "srts", &[(1, 0, "rtsrts")]),
            ("ts", "rsts", &[(1, 0, "rtsrts")]),
            ("ts", "tsrts", &[]),
            ("ts", "rstrs", &[(1, 0, "srtsrts")]),
            ("ts", "rtsrts", &[]),
            ("ts", "srtsrts", &[]),
            ("rts", "rts", &[(2, 1, "rtsrts")]),
            ("rts", "sts", &[(1, 1, "rtsrts")]),
            ("rts", "srts", &[(1, 0, "srtsrts")]),
            ("rts", "rsts", &[]),
            ("rts", "tsrts", &[]),
            ("rts", "rstrs", &[]),
            ("rts", "rtsrts", &[]),
            ("sts", "sts", &[(2, 1, "rtsrts")]),
            ("sts", "srts", &[]),
            ("sts", "rsts", &[(1, 0, "srtsrts")]),
            ("sts", "tsrts", &[]),
            ("sts", "rstrs", &[]),
            ("sts", "rtsrts", &[]),
        ],
    },
    // B3, P3
    GoldenTable {
        label: "B3",
        parabolic: 3,
        basis: &[
            ("b1", "t"),
            ("b2", "st"),
            ("b3'", "rst"),
            ("b3''", "tst"),
            ("b4", "trst"),
            ("b5", "strst"),
            ("b6", "tstrst"),
        ],
        cells: &[
            ("t", "t", &[(1, 1, "st")]),
            ("t", "st", &[(1, 1, "rst"), (1, 0, "tst")]),
            ("t", "rst", &[(1, 0, "trst")]),
            ("t", "tst", &[(1, 1, "trst")]),
            ("t", "trst", &[(1, 1, "strst")]),
            ("t", "strst", &[(1, 0, "tstrst")]),
            ("t", "tstrst", &[]),
            ("st", "st", &[(2, 0, "trst")]),
            ("st", "rst", &[(1, 0, "strst")]),
            ("st", "tst", &[(1, 1, "strst")]),
            ("st", "trst", &[(1, 0, "tstrst")]),
            ("st", "strst", &[]),
            ("st", "tstrst", &[]),
            ("rst", "rst", &[]),
            ("rst", "tst", &[(1, 0, "tstrst")]),
            ("rst", "trst", &[]),
            ("rst", "strst", &[]),
            ("rst", "tstrst", &[]),
            ("tst", "tst", &[]),
            ("tst", "trst", &[]),
            ("tst", "strst", &[]),
            ("tst", "tstrst", &[]),
        ],
    },
    // C3, P1
    GoldenTable {
        label: "C3",
        parabolic: 1,
        basis: &[
            ("a1", "r"),
            ("a2", "sr"),
            ("a3", "tsr"),
            ("a4", "stsr"),
            ("a5", "rstsr"),
        ],
        cells: &[
            ("r", "r", &[(1, 0, "sr")]),
            ("r", "sr", &[(1, 1, "tsr")]),
            ("r", "tsr", &[(1, 0, "stsr")]),
            ("r", "stsr", &[(1, 0, "rstsr")]),
            ("r", "rstsr", &[]),
            ("sr", "sr", &[(1, 1, "stsr")]),
            ("sr", "tsr", &[(1, 0, "rstsr")]),
            ("sr", "stsr", &[]),
            ("sr", "rstsr", &[]),
        ],
    },
    // C3, P2
    GoldenTable {
        label: "C3",
        parabolic: 2,
        basis: &[
            ("a1", "s"),
            ("a2'", "rs"),
            ("a2''", "ts"),
            ("a3'", "rts"),
            ("a3''", "sts"),
            ("a4'", "srts"),
            ("a4''", "rsts"),
            ("a5'", "tsrts"),
            ("a5''", "rstrs"),
            ("a6", "rtsrts"),
            ("a7", "srtsrts"),
        ],
        cells: &[
            ("s", "s", &[(1, 0, "rs"), (1, 1, "ts")]),
            ("s", "rs", &[(1, 1, "rts")]),
            ("s", "ts", &[(1, 0, "rts"), (1, 0, "sts")]),
            ("s", "rts", &[(2, 1, "srts"), (1, 1, "rsts")]),
            ("s", "sts", &[(1, 1, "srts"), (2, 1, "rsts")]),
            ("s", "srts", &[(1, 1, "tsrts"), (1, 0, "rstrs")]),
            ("s", "rsts", &[(1, 0, "rstrs")]),
            ("s", "tsrts", &[(1, 0, "rtsrts")]),
            ("s", "rstrs", &[(1, 1, "rtsrts")]),
            ("s", "rtsrts", &[(1, 0, "srtsrts")]),
            ("s", "srtsrts", &[]),
            ("rs", "rs", &[(1, 2, "srts")]),
            ("rs", "ts", &[(1, 1, "srts"), (1, 1, "rsts")]),
            ("rs", "rts", &[(1, 2, "tsrts"), (1, 1, "rstrs")]),
            ("rs", "sts", &[(1, 1, "rstrs")]),
            ("rs", "srts", &[(1, 1, "rtsrts")]),
            ("rs", "rsts", &[]),
            ("rs", "tsrts", &[(1, 0, "srtsrts")]),
            ("rs", "rstrs", &[]),
            ("rs", "rtsrts", &[]),
            ("rs", "srtsrts", &[]),
            ("ts", "ts", &[(2, 0, "srts"), (2, 0, "rsts")]),
            ("ts", "rts", &[(1, 1, "tsrts"), (2, 0, "rstrs")]),
            ("ts", "sts", &[(1, 1, "tsrts"), (2, 0, "rstrs")]),
            ("ts", "srts", &[(1, 0, "rtsrts")]),
            ("ts", "rsts", &[(1, 0, "rtsrts")]),
            ("ts", "tsrts", &[]),
            ("ts", "rstrs", &[(1, 0, "srtsrts")]),
            ("ts", "rtsrts", &[]),
            ("ts", "srtsrts", &[]),
            ("rts", "rts", &[(2, 1, "rtsrts")]),
            ("rts", "sts", &[(1, 1, "rtsrts")]),
            ("rts", "srts", &[(1, 0, "srtsrts")]),
            ("rts", "rsts", &[]),
            ("rts", "tsrts", &[]),
            ("rts", "rstrs", &[]),
            ("rts", "rtsrts", &[]),
            ("sts", "sts", &[(2, 1, "rtsrts")]),
            ("sts", "srts", &[]),
            ("sts", "rsts", &[(1, 0, "srtsrts")]),
            ("sts", "tsrts", &[]),
            ("sts", "rstrs", &[]),
            ("sts", "rtsrts", &[]),
        ],
    },
    // C3, P3
    GoldenTable {
        label: "C3",
        parabolic: 3,
        basis: &[
            ("a1", "t"),
            ("a2", "st"),
            ("a3'", "rst"),
            ("a3''", "tst"),
            ("a4", "trst"),
            ("a5", "strst"),
            ("a6", "tstrst"),
        ],
        cells: &[
            ("t", "t", &[(2, 0, "st")]),
            ("t", "st", &[(2, 0, "rst"), (1, 0, "tst")]),
            ("t", "rst", &[(1, 0, "trst")]),
            ("t", "tst", &[(2, 0, "trst")]),
            ("t", "trst", &[(2, 0, "strst")]),
            ("t", "strst", &[(1, 0, "tstrst")]),
            ("t", "tstrst", &[]),
            ("st", "st", &[(2, 0, "trst")]),
            ("st", "rst", &[(1, 0, "strst")]),
            ("st", "tst", &[(2, 0, "strst")]),
            ("st", "trst", &[(1, 0, "tstrst")]),
            ("st", "strst", &[]),
            ("st", "tstrst", &[]),
            ("rst", "rst", &[]),
            ("rst", "tst", &[(1, 0, "tstrst")]),
            ("rst", "trst", &[]),
            ("rst", "strst", &[]),
            ("rst", "tstrst", &[]),
            ("tst", "tst", &[]),
            ("tst", "trst", &[]),
            ("tst", "strst", &[]),
            ("tst", "tstrst", &[]),
        ],
    },
];

/// A seed inequality before S3-symmetrization: one covector per argument
/// slot, in the chart recorded in `GoldenSeeds::chart`, with the relation
/// already normalized to `<= 0`.
pub type Seed = [&'static [i64]; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    /// Bourbaki epsilon coordinates of the printed type.
    Eps,
    /// Values on the simple roots (`x`-basis coordinates); used for G2 where
    /// the printed chamber is `x >= 0, y >= 0`.
    XBasis,
}

pub struct GoldenSeeds {
    pub label: &'static str,
    pub chart: Chart,
    /// (1-based parabolic index, seed list, expected count after
    /// symmetrization).
    pub subsystems: &'static [(usize, &'static [Seed], usize)],
}

pub const SEEDS: &[GoldenSeeds] = &[
    GoldenSeeds {
        label: "A2",
        chart: Chart::Eps,
        subsystems: &[
            (
                1,
                &[
                    [&[1, 0, 0], &[0, 0, 1], &[0, 0, 1]],
                    [&[0, 1, 0], &[0, 1, 0], &[0, 0, 1]],
                ],
                6,
            ),
            // Printed with ">= 0"; stored negated.
            (
                2,
                &[
                    [&[0, 0, -1], &[-1, 0, 0], &[-1, 0, 0]],
                    [&[0, -1, 0], &[0, -1, 0], &[-1, 0, 0]],
                ],
                6,
            ),
        ],
    },
    GoldenSeeds {
        label: "B2",
        chart: Chart::Eps,
        subsystems: &[
            (
                1,
                &[
                    [&[1, 0], &[-1, 0], &[-1, 0]],
                    [&[0, 1], &[0, -1], &[-1, 0]],
                ],
                9,
            ),
            (
                2,
                &[
                    [&[1, 1], &[-1, -1], &[-1, -1]],
                    [&[1, -1], &[-1, 1], &[-1, -1]],
                ],
                9,
            ),
        ],
    },
    GoldenSeeds {
        label: "G2",
        chart: Chart::XBasis,
        subsystems: &[
            (
                1,
                &[
                    [&[2, 1], &[-2, -1], &[-2, -1]],
                    [&[1, 1], &[-1, -1], &[-2, -1]],
                    [&[1, 0], &[-1, 0], &[-2, -1]],
                ],
                15,
            ),
            (
                2,
                &[
                    [&[3, 2], &[-3, -2], &[-3, -2]],
                    [&[3, 1], &[-3, -1], &[-3, -2]],
                    [&[0, 1], &[0, -1], &[-3, -2]],
                ],
                15,
            ),
        ],
    },
    GoldenSeeds {
        label: "A3",
        chart: Chart::Eps,
        subsystems: &[
            (
                1,
                &[
                    [&[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 1]],
                    [&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
                    [&[0, 0, 1, 0], &[0, 0, 1, 0], &[0, 0, 1, 0]],
                ],
                10,
            ),
            (
                2,
                &[
                    [&[1, 1, 0, 0], &[0, 0, 1, 1], &[0, 0, 1, 1]],
                    [&[1, 0, 1, 0], &[0, 1, 0, 1], &[0, 0, 1, 1]],
                    [&[1, 0, 0, 1], &[1, 0, 0, 1], &[0, 0, 1, 1]],
                    [&[0, 1, 1, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]],
                    [&[1, 0, 0, 1], &[0, 1, 0, 1], &[0, 1, 0, 1]],
                    [&[0, 1, 1, 0], &[0, 1, 0, 1], &[0, 1, 0, 1]],
                ],
                21,
            ),
            (
                3,
                &[
                    [&[1, 1, 1, 0], &[0, 1, 1, 1], &[0, 1, 1, 1]],
                    [&[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 1]],
                    [&[1, 0, 1, 1], &[1, 0, 1, 1], &[1, 0, 1, 1]],
                ],
                10,
            ),
        ],
    },
    GoldenSeeds {
        label: "B3",
        chart: Chart::Eps,
        subsystems: &[
            (
                1,
                &[
                    [&[1, 0, 0], &[-1, 0, 0], &[-1, 0, 0]],
                    [&[0, 1, 0], &[0, -1, 0], &[-1, 0, 0]],
                    [&[0, 0, 1], &[0, 0, -1], &[-1, 0, 0]],
                    [&[0, 0, 1], &[0, -1, 0], &[0, -1, 0]],
                ],
                18,
            ),
            (
                2,
                &[
                    [&[1, 1, 0], &[-1, -1, 0], &[-1, -1, 0]],
                    [&[1, 0, 1], &[-1, 0, -1], &[-1, -1, 0]],
                    [&[0, 1, 1], &[0, -1, -1], &[-1, -1, 0]],
                    [&[1, 0, -1], &[-1, 0, 1], &[-1, -1, 0]],
                    [&[0, 1, -1], &[0, -1, 1], &[-1, -1, 0]],
                    [&[1, -1, 0], &[-1, 1, 0], &[-1, -1, 0]],
                    [&[0, 1, 1], &[-1, 0, -1], &[-1, 0, -1]],
                    [&[0, 1, -1], &[-1, 0, 1], &[-1, 0, -1]],
                    [&[1, -1, 0], &[-1, 0, 1], &[-1, 0, -1]],
                ],
                48,
            ),
            (
                3,
                &[
                    [&[1, 1, 1], &[-1, -1, -1], &[-1, -1, -1]],
                    [&[1, 1, -1], &[-1, -1, 1], &[-1, -1, -1]],
                    [&[1, -1, 1], &[-1, 1, -1], &[-1, -1, -1]],
                    [&[1, -1, -1], &[-1, 1, 1], &[-1, -1, -1]],
                    [&[1, -1, -1], &[-1, 1, -1], &[-1, -1, 1]],
                ],
                27,
            ),
        ],
    },
    GoldenSeeds {
        label: "C3",
        chart: Chart::Eps,
        subsystems: &[
            (
                1,
                &[
                    [&[1, 0, 0], &[-1, 0, 0], &[-1, 0, 0]],
                    [&[0, 1, 0], &[0, -1, 0], &[-1, 0, 0]],
                    [&[0, 0, 1], &[0, 0, -1], &[-1, 0, 0]],
                    [&[0, 0, 1], &[0, -1, 0], &[0, -1, 0]],
                ],
                18,
            ),
            (
                2,
                &[
                    [&[1, 1, 0], &[-1, -1, 0], &[-1, -1, 0]],
                    [&[1, 0, 1], &[-1, 0, -1], &[-1, -1, 0]],
                    [&[0, 1, 1], &[0, -1, -1], &[-1, -1, 0]],
                    [&[1, 0, -1], &[-1, 0, 1], &[-1, -1, 0]],
                    [&[0, 1, -1], &[0, -1, 1], &[-1, -1, 0]],
                    [&[1, -1, 0], &[-1, 1, 0], &[-1, -1, 0]],
                    [&[0, 1, 1], &[-1, 0, -1], &[-1, 0, -1]],
                    [&[0, 1, -1], &[-1, 0, 1], &[-1, 0, -1]],
                    [&[1, -1, 0], &[-1, 0, 1], &[-1, 0, -1]],
                ],
                48,
            ),
            (
                3,
                &[
                    [&[1, 1, 1], &[-1, -1, -1], &[-1, -1, -1]],
                    [&[1, 1, -1], &[-1, -1, 1], &[-1, -1, -1]],
                    [&[1, -1, 1], &[-1, 1, -1], &[-1, -1, -1]],
                    [&[1, -1, -1], &[-1, 1, 1], &[-1, -1, -1]],
                    [&[1, -1, -1], &[-1, 1, -1], &[-1, -1, 1]],
                ],
                27,
            ),
        ],
    },
];

/// Published facet counts per maximal parabolic for the BK systems, s = 3.
pub const FACET_COUNTS: &[(&str, &[usize])] = &[
    ("A2", &[6, 6]),
    ("B2", &[9, 9]),
    ("G2", &[15, 15]),
    ("A3", &[10, 21, 10]),
    ("B3", &[18, 48, 27]),
    ("C3", &[18, 48, 27]),
    ("D4", &[36, 186, 36, 36]),
];

/// The weaker cup-product-with-d=1 criterion yields this many inequalities
/// for the rank 3 doubly-laced types.
pub const KLM_COUNTS: &[(&str, usize)] = &[("B3", 126), ("C3", 126)];

pub fn table(label: &str, parabolic: usize) -> Option<&'static GoldenTable> {
    TABLES
        .iter()
        .find(|t| t.label == label && t.parabolic == parabolic)
}

pub fn seeds(label: &str) -> Option<&'static GoldenSeeds> {
    SEEDS.iter().find(|s| s.label == label)
}
