//! Embedded data tables backing the closed-form bound evaluators and the
//! packing-vector constructions.
//!
//! The numbers live in `data/tables.json`, checked in next to the sources and
//! compiled in via `include_str!`. Loading validates a pinned SHA-256 of the
//! raw bytes and then the shape of every table, so a silently edited or
//! truncated data file fails fast instead of producing wrong bounds.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num::BigRational;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::multipack::parse_rational;

const RAW: &str = include_str!("../../data/tables.json");

/// SHA-256 of `data/tables.json`. Regenerate with `sha256sum` after any
/// deliberate table change; a mismatch aborts loading.
const RAW_SHA256: &str = "0c4c5fe7f779dc40f00e7705745cd20dcb578705671bd6998d1e22c1f41b0885";

/// A per-band linear term: either `coef · ⌊v / div⌋` or `⌈coef · v / div⌉`.
#[derive(Clone, Copy, Debug, Deserialize)]
pub struct LinearForm {
    form: Form,
    coef: u64,
    div: u64,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum Form {
    ScaledFloor,
    CeilFrac,
}

impl LinearForm {
    pub fn eval(&self, v: u64) -> u64 {
        match self.form {
            Form::ScaledFloor => self.coef * (v / self.div),
            Form::CeilFrac => (self.coef * v).div_ceil(self.div),
        }
    }
}

/// One row of a strip constant table: the residue `key`, an optional
/// restriction to a single absolute value (some printed rows split, e.g. a
/// first-period case differing from all later periods), and the per-band
/// constants.
#[derive(Clone, Debug, Deserialize)]
pub struct ConstRow {
    pub key: u32,
    #[serde(default)]
    pub only: Option<u64>,
    pub c: BTreeMap<u32, u64>,
}

/// Tabulated strip bound `linear(band)(v) + c(band, v mod x(band))`.
#[derive(Clone, Debug, Deserialize)]
pub struct StripTable {
    x: BTreeMap<u32, u64>,
    linear: BTreeMap<u32, LinearForm>,
    constant: Vec<ConstRow>,
}

impl StripTable {
    pub fn covers(&self, band: u32) -> bool {
        self.x.contains_key(&band)
    }

    pub fn period(&self, band: u32) -> Option<u64> {
        self.x.get(&band).copied()
    }

    /// Looks up the constant for residue `key` at absolute value `v`,
    /// honoring split rows (a row with `only = Some(v)` shadows the default).
    pub fn constant(&self, band: u32, key: u32, v: u64) -> Option<u64> {
        self.constant
            .iter()
            .find(|row| row.key == key && row.only.is_none_or(|o| o == v))
            .and_then(|row| row.c.get(&band).copied())
    }

    /// Full strip value for the given band at length `v`.
    pub fn value(&self, band: u32, v: u64) -> Option<u64> {
        let x = self.period(band)?;
        let key = (v % x) as u32;
        let lin = self.linear.get(&band)?.eval(v);
        Some(lin + self.constant(band, key, v)?)
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct WideLower {
    slope: String,
    offset: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Tables {
    p4_strip_tail: Vec<u64>,
    lattice_corner_min: Vec<Vec<i64>>,
    lattice_best_class: Vec<Vec<i64>>,
    lattice_constant: Vec<Vec<i64>>,
    pxp_strip: StripTable,
    pxc_strip: StripTable,
    pxc_tall_constant: Vec<Vec<i64>>,
    pxc_small_n: StripTable,
    cxc_strip: StripTable,
    cxc_large_constant: Vec<Vec<i64>>,
    pxc_packing_rate: BTreeMap<u32, String>,
    packing_vectors: BTreeMap<u32, Vec<String>>,
    packing_vector_wide_head: Vec<String>,
    pxc_wide_lower_per_n: String,
    pxp_wide_lower: WideLower,
}

impl Tables {
    /// Tail constant of the `P_4` strip formula, by `n mod 10`.
    pub fn p4_strip_tail(&self, n: u64) -> u64 {
        self.p4_strip_tail[(n % 10) as usize]
    }

    pub fn lattice_corner_min(&self, m13: u32, n13: u32) -> u64 {
        self.lattice_corner_min[m13 as usize][n13 as usize] as u64
    }

    /// Lex-largest minimizing class per residue pair. The stored grid is
    /// indexed `[n13][m13]`: recomputing the minimizers at off-diagonal
    /// residues (e.g. 0,1 vs 1,0) pins that orientation; the other reading
    /// names classes that do not reach the minimum corner sum.
    pub fn lattice_best_class(&self, m13: u32, n13: u32) -> u8 {
        self.lattice_best_class[n13 as usize][m13 as usize] as u8
    }

    pub fn lattice_constant(&self, m13: u32, n13: u32) -> i64 {
        self.lattice_constant[m13 as usize][n13 as usize]
    }

    pub fn pxp_strip(&self) -> &StripTable {
        &self.pxp_strip
    }

    pub fn pxc_strip(&self) -> &StripTable {
        &self.pxc_strip
    }

    pub fn pxc_tall_constant(&self, m13p: u32, n13: u32) -> i64 {
        self.pxc_tall_constant[m13p as usize][n13 as usize]
    }

    pub fn pxc_small_n(&self) -> &StripTable {
        &self.pxc_small_n
    }

    pub fn cxc_strip(&self) -> &StripTable {
        &self.cxc_strip
    }

    pub fn cxc_large_constant(&self, m13: u32, n13: u32) -> i64 {
        self.cxc_large_constant[m13 as usize][n13 as usize]
    }

    /// Per-column packing rate `r` with multipacking cost `r · n` on an
    /// `m`-row cylinder, for 2 ≤ m ≤ 22.
    pub fn pxc_packing_rate(&self, m: u32) -> Option<BigRational> {
        let s = self.pxc_packing_rate.get(&m)?;
        Some(parse_rational(s).expect("validated at load"))
    }

    /// Row-weight vector for the `m`-row packing, 2 ≤ m ≤ 22.
    pub fn packing_vector(&self, m: u32) -> Option<Vec<BigRational>> {
        let v = self.packing_vectors.get(&m)?;
        Some(
            v.iter()
                .map(|s| parse_rational(s).expect("validated at load"))
                .collect(),
        )
    }

    /// Head of the wide (m ≥ 23) packing vector; the full vector is
    /// `head ++ [2/13; m−16] ++ reverse(head)`.
    pub fn packing_vector_wide_head(&self) -> Vec<BigRational> {
        self.packing_vector_wide_head
            .iter()
            .map(|s| parse_rational(s).expect("validated at load"))
            .collect()
    }

    /// Constant `k` in the wide-cylinder lower bound `2mn/13 + k·n`.
    pub fn pxc_wide_lower_per_n(&self) -> BigRational {
        parse_rational(&self.pxc_wide_lower_per_n).expect("validated at load")
    }

    /// `(slope, offset)` of the wide-grid lower bound
    /// `2mn/13 + slope·(m+n) − offset`.
    pub fn pxp_wide_lower(&self) -> (BigRational, BigRational) {
        (
            parse_rational(&self.pxp_wide_lower.slope).expect("validated at load"),
            parse_rational(&self.pxp_wide_lower.offset).expect("validated at load"),
        )
    }

    fn validate(&self) {
        assert_eq!(
            self.p4_strip_tail.len(),
            10,
            "p4 tail must have 10 residues"
        );
        for (name, grid) in [
            ("lattice_corner_min", &self.lattice_corner_min),
            ("lattice_best_class", &self.lattice_best_class),
            ("lattice_constant", &self.lattice_constant),
            ("pxc_tall_constant", &self.pxc_tall_constant),
            ("cxc_large_constant", &self.cxc_large_constant),
        ] {
            assert_eq!(grid.len(), 13, "{name} must have 13 rows");
            assert!(
                grid.iter().all(|row| row.len() == 13),
                "{name} rows must have 13 entries"
            );
        }
        assert!(
            self.lattice_best_class
                .iter()
                .flatten()
                .all(|&v| (0..13).contains(&v)),
            "lattice classes live in 0..13"
        );
        for (m, v) in &self.packing_vectors {
            assert_eq!(v.len(), *m as usize, "packing vector for m={m} has m rows");
            for s in v {
                parse_rational(s).expect("packing vector entries parse");
            }
        }
        assert_eq!(self.packing_vector_wide_head.len(), 8);
        for m in 2..=22u32 {
            assert!(self.pxc_packing_rate.contains_key(&m));
            assert!(self.packing_vectors.contains_key(&m));
        }
        for band in 2..=12u32 {
            assert!(self.pxp_strip.covers(band));
        }
        for band in 2..=22u32 {
            assert!(self.pxc_strip.covers(band));
        }
        for band in 3..=12u32 {
            assert!(self.pxc_small_n.covers(band));
        }
        for band in 3..=25u32 {
            assert!(self.cxc_strip.covers(band));
        }
        parse_rational(&self.pxc_wide_lower_per_n).expect("wide per-n constant parses");
        parse_rational(&self.pxp_wide_lower.slope).expect("wide slope parses");
        parse_rational(&self.pxp_wide_lower.offset).expect("wide offset parses");
    }
}

/// The process-wide table set. Panics on first use if the embedded data file
/// fails its checksum or shape validation.
pub fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let digest = Sha256::digest(RAW.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        assert_eq!(
            hex, RAW_SHA256,
            "embedded table data failed its checksum; data/tables.json was modified \
             without updating RAW_SHA256"
        );
        let t: Tables = serde_json::from_str(RAW).expect("embedded table data parses");
        t.validate();
        t
    })
}
