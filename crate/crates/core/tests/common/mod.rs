#![allow(dead_code)]

pub mod random;

use std::path::PathBuf;

use superquad::kostant::{Decomposition, PairData};
use superquad::liesuper::SuperLie;
use superquad::schema::{CubicFile, LieFile, PairFile};
use superquad::ExtElem;

pub fn catalog_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog").join(name)
}

pub fn read(name: &str) -> String {
    std::fs::read_to_string(catalog_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn lie(name: &str) -> SuperLie {
    LieFile::parse(&read(name)).unwrap().to_lie().unwrap()
}

pub fn pair(name: &str) -> (PairData, Option<Decomposition>) {
    PairFile::parse(&read(name)).unwrap().load().unwrap()
}

pub fn phi(name: &str) -> ExtElem {
    CubicFile::parse(&read(name)).unwrap().to_phi().unwrap()
}

pub const KAPPA_PAIRS: [&str; 5] = [
    "sl2_odd_pair_k1_4.json",
    "sl2_odd_pair_k1_2.json",
    "sl2_odd_pair_k1.json",
    "sl2_odd_pair_k2.json",
    "sl2_odd_pair_k4.json",
];

/// (g, r_span) cases for the Dirac operator.
pub const DIRAC_CASES: [&str; 6] = [
    "abelian_zero_split.json",
    "osp12_even_split.json",
    "gl11_even_split.json",
    "sl2_cartan_split.json",
    "sl2_zero_split.json",
    "osp12_cartan_split.json",
];
