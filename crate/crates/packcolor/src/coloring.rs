//! The coloring file: `{"spec": [s_1, ..., s_k], "classes": [c_1, ..., c_n]}`
//! with classes numbered from 1.

use packcolor_core::packing::{PackingColoring, PackingSpec};
use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub spec: Vec<usize>,
    pub classes: Vec<usize>,
}

impl ColoringFile {
    /// `coloring` must be total.
    pub fn new(spec: &PackingSpec, coloring: &PackingColoring) -> ColoringFile {
        let classes = coloring.to_total().expect("serialized colorings are total").iter().map(|c| c + 1).collect();
        ColoringFile { spec: spec.thresholds().to_vec(), classes }
    }

    pub fn decode(&self) -> Result<(PackingSpec, PackingColoring), Error> {
        let spec = PackingSpec::new(self.spec.clone()).map_err(Error::domain)?;
        let classes = self
            .classes
            .iter()
            .enumerate()
            .map(|(v, &c)| {
                if c == 0 {
                    Err(Error::Domain(format!("vertex {v} has class 0; classes start at 1")))
                } else {
                    Ok(Some(c - 1))
                }
            })
            .collect::<Result<_, _>>()?;
        Ok((spec, PackingColoring { classes }))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<ColoringFile, Error> {
        Ok(serde_json::from_str(text)?)
    }
}
