//! Built-in worked examples and reference tables.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::codefile::{CodeFile, FieldSpec, Metadata};

/// A word printed with an example whose printed form has a known misprint.
#[derive(Clone, Debug)]
pub struct Erratum {
    /// 1-based.
    pub position: usize,
    pub printed: &'static str,
    pub corrected: &'static str,
}

#[derive(Clone, Debug)]
pub struct Exhibited {
    pub name: &'static str,
    pub tokens: &'static [&'static str],
    pub erratum: Option<Erratum>,
}

impl Exhibited {
    /// The tokens after applying the erratum, if any.
    pub fn corrected(&self) -> Vec<&'static str> {
        let mut t = self.tokens.to_vec();
        if let Some(e) = &self.erratum {
            t[e.position - 1] = e.corrected;
        }
        t
    }
}

#[derive(Clone, Debug)]
pub enum Checks {
    /// Determinant certificate, expected certified distance, optional list of
    /// expected qualifying meets (1-based, distinct pairs only), and whether
    /// a full brute force is run.
    Certify {
        distance: usize,
        meets: Option<&'static [&'static [usize]]>,
        brute_force: bool,
        lcs: usize,
    },
    /// Pair selection inside the gaps of a given minimum-weight codeword.
    StrictDirect {
        d_h: usize,
        min_weight: &'static str,
        /// 1-based, unordered.
        pairs: &'static [[usize; 2]],
        t: usize,
        bound: usize,
        distance: usize,
        lcs: usize,
    },
    /// A word set with no linear structure.
    Nonlinear { d_h: usize, distance: usize },
}

#[derive(Clone, Debug)]
pub struct Example {
    pub id: &'static str,
    pub description: &'static str,
    pub p: u32,
    pub e: u32,
    /// Generator rows, or the words themselves for a nonlinear set.
    pub rows: &'static [&'static [&'static str]],
    pub exhibited: &'static [Exhibited],
    pub checks: Checks,
}

impl Example {
    pub fn code_file(&self) -> CodeFile {
        CodeFile {
            field: FieldSpec {
                p: self.p,
                e: self.e,
                modulus: None,
            },
            generator: self.rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
            metadata: Some(Metadata {
                name: Some(self.id.to_string()),
                source: Some(self.description.to_string()),
            }),
        }
    }
}

pub const EXAMPLES: &[Example] = &[
    Example {
        id: "ex1-gf49",
        description: "[5,2] code over GF(49) meeting the strict half-Singleton bound",
        p: 7,
        e: 2,
        rows: &[
            &["w^28", "w", "w^39", "w^26", "w^20"],
            &["w^10", "w^13", "2", "w^37", "w"],
        ],
        exhibited: &[
            Exhibited {
                name: "a",
                tokens: &["w^38", "w^14", "w^7", "w^15", "w^21"],
                erratum: None,
            },
            Exhibited {
                name: "b",
                tokens: &["w^2", "w^38", "w^14", "w^7", "w^2"],
                erratum: Some(Erratum {
                    position: 5,
                    printed: "w^2",
                    corrected: "w^12",
                }),
            },
        ],
        checks: Checks::Certify {
            distance: 4,
            meets: Some(&[&[], &[1], &[5]]),
            brute_force: true,
            lcs: 3,
        },
    },
    Example {
        id: "ex2-gf121",
        description: "[8,3] code over GF(121) meeting the strict half-Singleton bound",
        p: 11,
        e: 2,
        rows: &[
            &["w^40", "w^20", "w^22", "w^3", "w^49", "w^55", "w^54", "w^65"],
            &["w^86", "w^27", "w^89", "w^64", "w^73", "w^23", "w^44", "w^79"],
            &["w^88", "w^103", "w^110", "w^97", "w^21", "w^51", "w^47", "w^70"],
        ],
        exhibited: &[
            Exhibited {
                name: "a",
                tokens: &["w^95", "w", "w^2", "w^80", "w^67", "w^40", "w^31", "w^79"],
                erratum: None,
            },
            Exhibited {
                name: "b",
                tokens: &["6", "w^95", "w", "w^2", "w^80", "w^67", "w^6", "w^112"],
                erratum: None,
            },
        ],
        checks: Checks::Certify {
            distance: 6,
            meets: None,
            brute_force: false,
            lcs: 5,
        },
    },
    Example {
        id: "ex3-gf169",
        description: "[9,4] code over GF(169) meeting the strict half-Singleton bound",
        p: 13,
        e: 2,
        rows: &[
            &["w^81", "w^120", "w^4", "w^136", "w^147", "w^71", "w^166", "w^132", "w^103"],
            &["w^83", "w^155", "w^82", "w^163", "w^48", "w^36", "w^88", "w^63", "w^45"],
            &["w^143", "w^85", "w^72", "w^146", "w^117", "w^18", "w^95", "w^12", "w^134"],
            &["w^131", "w^160", "w^27", "w^148", "w^164", "w^7", "w^109", "w^107", "w^32"],
        ],
        exhibited: &[
            Exhibited {
                name: "a",
                tokens: &["w^9", "w^127", "w^13", "w^22", "w^21", "w^11", "w^53", "w^165", "w^110"],
                erratum: None,
            },
            Exhibited {
                name: "b",
                tokens: &["w^120", "w^9", "w^127", "w^13", "w^22", "w^21", "w^11", "w^53", "7"],
                erratum: None,
            },
        ],
        checks: Checks::Certify {
            distance: 4,
            meets: None,
            brute_force: false,
            lcs: 7,
        },
    },
    Example {
        id: "ex-11-4-binary",
        description: "binary [11,4] code meeting the strict direct bound with t = 2",
        p: 2,
        e: 1,
        rows: &[
            &["1", "1", "1", "1", "0", "1", "0", "0", "0", "1", "1"],
            &["1", "1", "1", "0", "1", "0", "1", "0", "0", "0", "0"],
            &["1", "0", "0", "0", "0", "1", "1", "1", "0", "0", "0"],
            &["1", "0", "0", "0", "0", "0", "0", "0", "1", "1", "1"],
        ],
        exhibited: &[
            Exhibited {
                name: "x1",
                tokens: &["0", "1", "1", "1", "0", "0", "1", "1", "0", "1", "1"],
                erratum: None,
            },
            Exhibited {
                name: "x2",
                tokens: &["0", "1", "1", "0", "1", "0", "1", "0", "1", "1", "1"],
                erratum: None,
            },
        ],
        checks: Checks::StrictDirect {
            d_h: 4,
            min_weight: "00011001100",
            pairs: &[[4, 5], [8, 9]],
            t: 2,
            bound: 4,
            distance: 4,
            lcs: 9,
        },
    },
    Example {
        id: "ex-nonlinear",
        description: "four codewords of the binary [11,4] code, as a nonlinear set",
        p: 2,
        e: 1,
        rows: &[
            &["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
            &["1", "1", "1", "1", "0", "1", "0", "0", "0", "1", "1"],
            &["1", "0", "0", "0", "0", "0", "0", "0", "1", "1", "1"],
            &["0", "0", "0", "1", "1", "0", "0", "1", "1", "0", "0"],
        ],
        exhibited: &[],
        checks: Checks::Nonlinear { d_h: 4, distance: 8 },
    },
];

pub fn example(id: &str) -> Option<&'static Example> {
    EXAMPLES.iter().find(|e| e.id == id)
}

pub fn example_ids() -> Vec<&'static str> {
    EXAMPLES.iter().map(|e| e.id).collect()
}

#[derive(Clone, Debug, Deserialize)]
pub struct ReferenceTable {
    pub description: String,
    pub n: usize,
    pub k: usize,
    pub bound: String,
    pub ones_filter: String,
    pub generators: Vec<Vec<String>>,
}

pub const TABLES_JSON: &str = include_str!("../fixtures/tables.json");

pub fn reference_tables() -> BTreeMap<String, ReferenceTable> {
    serde_json::from_str(TABLES_JSON).expect("bundled tables parse")
}
