//! JSON forms of the public types: square relations as
//! `{"carrier": [...], "matrix": [[...]]}` with values rendered as
//! `"p/q"`, `"p"` or `"inf"`, profiles as `{"prefix": [...], "cycle":
//! [...]}`, grids as `{"radii": [...]}`, and the completion export.

use serde::{Deserialize, Serialize};

use crate::carrier::Carrier;
use crate::grel::GRel;
use crate::hausdorff::Completion;
use crate::xreal::ExtReal;
use crate::Error;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GRelJson {
    pub carrier: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

pub fn grel_to_json(d: &GRel) -> GRelJson {
    GRelJson {
        carrier: d.source().labels().to_vec(),
        matrix: d
            .source()
            .indices()
            .map(|i| d.target().indices().map(|j| d.at(i, j).to_string()).collect())
            .collect(),
    }
}

pub fn grel_from_json(j: &GRelJson) -> Result<GRel, Error> {
    let carrier = Carrier::new(j.carrier.clone())?;
    let mut rows = Vec::with_capacity(j.matrix.len());
    for row in &j.matrix {
        let mut out = Vec::with_capacity(row.len());
        for cell in row {
            out.push(cell.parse::<ExtReal>()?);
        }
        rows.push(out);
    }
    GRel::square_from_rows(carrier, rows)
}

pub fn grel_to_string(d: &GRel) -> String {
    serde_json::to_string_pretty(&grel_to_json(d)).expect("serializable")
}

pub fn grel_from_str(s: &str) -> Result<GRel, Error> {
    let j: GRelJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad relation JSON: {e}")))?;
    grel_from_json(&j)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CompletionJson {
    pub base: Vec<String>,
    /// Each member of the directed family, as a list of base labels.
    pub family: Vec<Vec<String>>,
    /// The reverse-Hausdorff table over the family, row-major.
    pub matrix: Vec<Vec<String>>,
    /// For each base label, the family index of its principal down-set.
    pub embedding: Vec<usize>,
}

pub fn completion_to_json(c: &Completion) -> CompletionJson {
    let base = &c.completion.base;
    CompletionJson {
        base: base.labels().to_vec(),
        family: c.completion.family.iter().map(|s| s.labels(base)).collect(),
        matrix: (0..c.completion.family.len())
            .map(|i| {
                (0..c.completion.family.len())
                    .map(|j| c.completion.rel.at(i, j).to_string())
                    .collect()
            })
            .collect(),
        embedding: c.embedding.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn relation_round_trip() {
        for d in [gallery::g_grid(3), gallery::q_grid(5), gallery::x3nr()] {
            let s = grel_to_string(&d);
            let back = grel_from_str(&s).unwrap();
            assert_eq!(back, d);
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(grel_from_str("{").is_err());
        // negative entry
        let bad = r#"{"carrier": ["a"], "matrix": [["-1"]]}"#;
        assert!(grel_from_str(bad).is_err());
        // ragged matrix
        let bad = r#"{"carrier": ["a", "b"], "matrix": [["0", "1"], ["0"]]}"#;
        assert!(grel_from_str(bad).is_err());
        // duplicate labels
        let bad = r#"{"carrier": ["a", "a"], "matrix": [["0", "0"], ["0", "0"]]}"#;
        assert!(grel_from_str(bad).is_err());
    }
}
