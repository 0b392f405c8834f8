//! JSON file formats for maps and rational dilatations.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mappings::{HarmonicMap, MapError};
use crate::polyrat::{PolyError, Polynomial, RationalMap};
use crate::series::{PowerSeries, SeriesError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid map file: {0}")]
    Invalid(String),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub type Pair = [f64; 2];

fn pair(z: Complex64) -> Pair {
    [z.re, z.im]
}

fn complex(p: &Pair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RationalMapJson {
    pub num: Vec<Pair>,
    pub den: Vec<Pair>,
    pub power: u32,
    pub unit: Pair,
}

impl From<&RationalMap<f64>> for RationalMapJson {
    fn from(r: &RationalMap<f64>) -> Self {
        Self {
            num: r.num().coeffs().iter().copied().map(pair).collect(),
            den: r.den().coeffs().iter().copied().map(pair).collect(),
            power: r.power(),
            unit: pair(r.unit()),
        }
    }
}

impl TryFrom<&RationalMapJson> for RationalMap<f64> {
    type Error = PolyError;

    fn try_from(j: &RationalMapJson) -> Result<Self, PolyError> {
        RationalMap::new(
            Polynomial::new(j.num.iter().map(complex).collect())?,
            Polynomial::new(j.den.iter().map(complex).collect())?,
            j.power,
            complex(&j.unit),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MapJson {
    pub gamma: f64,
    pub order: usize,
    pub h: Vec<Pair>,
    pub g: Vec<Pair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<RationalMapJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form_id: Option<u32>,
}

impl MapJson {
    pub fn from_map(f: &HarmonicMap<f64>, closed_form_id: Option<u32>) -> Self {
        Self {
            gamma: f.gamma(),
            order: f.order(),
            h: f.h().coeffs().iter().copied().map(pair).collect(),
            g: f.g().coeffs().iter().copied().map(pair).collect(),
            omega: f.omega().map(RationalMapJson::from),
            closed_form_id,
        }
    }

    pub fn to_map(&self) -> Result<HarmonicMap<f64>, IoError> {
        for (name, v) in [("h", &self.h), ("g", &self.g)] {
            if v.len() != self.order + 1 {
                return Err(IoError::Invalid(format!(
                    "{name} has {} coefficients, expected order + 1 = {}",
                    v.len(),
                    self.order + 1
                )));
            }
        }
        let omega = self
            .omega
            .as_ref()
            .map(RationalMap::try_from)
            .transpose()?;
        Ok(HarmonicMap::from_parts(
            PowerSeries::new(self.h.iter().map(complex).collect())?,
            PowerSeries::new(self.g.iter().map(complex).collect())?,
            self.gamma,
            omega,
        )?)
    }
}

pub fn write_json<S: Serialize>(path: &Path, value: &S) -> Result<(), IoError> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text + "\n").map_err(|source| IoError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_map(path: &Path) -> Result<(HarmonicMap<f64>, MapJson), IoError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let json: MapJson = serde_json::from_str(&text)?;
    Ok((json.to_map()?, json))
}

pub fn write_map(path: &Path, f: &HarmonicMap<f64>, closed_form_id: Option<u32>) -> Result<(), IoError> {
    write_json(path, &MapJson::from_map(f, closed_form_id))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_round_trip() {
        let omega = RationalMap::moebius(Complex64::new(0.3, -0.1));
        let f = HarmonicMap::shear(1.0, &omega, 32).unwrap();
        let json = serde_json::to_string(&MapJson::from_map(&f, Some(2))).unwrap();
        let back: MapJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.closed_form_id, Some(2));
        let g = back.to_map().unwrap();
        assert_eq!(g.omega(), f.omega());
        assert_eq!(g.h(), f.h());
        assert_eq!(g.g(), f.g());
        assert_eq!(g.gamma(), f.gamma());
    }

    #[test]
    fn schema_field_names() {
        let f = HarmonicMap::<f64>::f0(4).unwrap();
        let v: serde_json::Value = serde_json::to_value(MapJson::from_map(&f, None)).unwrap();
        for key in ["gamma", "order", "h", "g", "omega"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert!(v.get("closed_form_id").is_none());
        let omega = &v["omega"];
        for key in ["num", "den", "power", "unit"] {
            assert!(omega.get(key).is_some(), "{key}");
        }
        assert_eq!(v["h"][2], serde_json::json!([1.5, 0.0]));
    }

    #[test]
    fn rejects_inconsistent_order() {
        let f = HarmonicMap::<f64>::f0(4).unwrap();
        let mut j = MapJson::from_map(&f, None);
        j.order = 5;
        assert!(matches!(j.to_map(), Err(IoError::Invalid(_))));
    }
}
