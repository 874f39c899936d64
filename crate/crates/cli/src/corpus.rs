//! Bundled reference matrices, mirroring the files under `corpus/` at the
//! repository root.

use sclcc_core::matrix::SymbolicMatrix;

use crate::textfmt::parse_symbolic;

macro_rules! corpus_entries {
    ($($label:literal),+ $(,)?) => {
        &[$(($label, include_str!(concat!("../../../corpus/", $label, ".mtx")))),+]
    };
}

/// `(label, file contents)` pairs for every bundled matrix.
pub const CORPUS: &[(&str, &str)] = corpus_entries![
    "eq10", "eq11", "eq12", "eq13", "eq15_k4", "eq16_k3", "eq17_k4", "eq18_k4", "eq19_k4",
    "eq20_k3", "eq21_k3", "eq22_k3", "eq24_k3", "eq25", "eq26_a6", "eq26_a9", "eq26_a12",
    "eq26_a15", "eq26_a18", "eq27", "eq28_pc1", "eq29_pc2", "eq30_pc3",
];

/// Parses one bundled matrix by label.
pub fn get(label: &str) -> Option<SymbolicMatrix> {
    let (_, text) = CORPUS.iter().find(|(l, _)| *l == label)?;
    Some(parse_symbolic(text).expect("bundled matrices parse"))
}

pub fn labels() -> impl Iterator<Item = &'static str> {
    CORPUS.iter().map(|(l, _)| *l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses() {
        for (label, text) in CORPUS {
            let h = parse_symbolic(text).unwrap_or_else(|e| panic!("{label}: {e}"));
            assert!(h.a() >= 3, "{label}");
        }
    }

    #[test]
    fn known_shapes() {
        let pc1 = get("eq28_pc1").unwrap();
        assert_eq!((pc1.c(), pc1.a()), (3, 17));
        let pc3 = get("eq30_pc3").unwrap();
        assert_eq!((pc3.c(), pc3.a()), (4, 12));
        assert_eq!(get("eq27").unwrap().a(), 21);
        assert!(get("missing").is_none());
    }
}
