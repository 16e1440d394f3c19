//! JSON point files: `{"points": [[x, y], ...], "label": "optional"}`.
//!
//! Coordinates may be JSON numbers or decimal strings; both are read from
//! their literal text so no binary-float rounding happens on the way in.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use maxangle_core::{GeomError, Point, PointSet};
use serde_json::{Map, Number, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },

    #[error("{path}:{line}:{column}: malformed JSON: {msg}")]
    Json {
        path: String,
        line: usize,
        column: usize,
        msg: String,
    },

    #[error("{path}: {msg}")]
    Schema { path: String, msg: String },

    #[error("{path}: {source}")]
    Invalid { path: String, source: GeomError },
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointSetFile {
    pub points: Vec<Point>,
    pub label: Option<String>,
}

impl PointSetFile {
    pub fn new(points: Vec<Point>, label: Option<String>) -> Self {
        PointSetFile { points, label }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        if let Some(l) = &self.label {
            obj.insert("label".into(), Value::String(l.clone()));
        }
        let pts = self
            .points
            .iter()
            .map(|p| {
                let num = |s: String| Value::Number(Number::from_str(&s).expect("decimal literal"));
                Value::Array(vec![num(p.x_decimal()), num(p.y_decimal())])
            })
            .collect();
        obj.insert("points".into(), Value::Array(pts));
        Value::Object(obj)
    }

    pub fn to_pretty_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        fs::write(path, self.to_pretty_string())
    }

    pub fn parse_str(text: &str, path: &str) -> Result<Self, InputError> {
        let value: Value = serde_json::from_str(text).map_err(|e| InputError::Json {
            path: path.to_string(),
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        })?;
        let schema = |msg: &str| InputError::Schema {
            path: path.to_string(),
            msg: msg.to_string(),
        };
        let obj = value
            .as_object()
            .ok_or_else(|| schema("top level must be an object"))?;
        let label = match obj.get("label") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => return Err(schema("\"label\" must be a string")),
        };
        let arr = obj
            .get("points")
            .and_then(Value::as_array)
            .ok_or_else(|| schema("missing \"points\" array"))?;
        let mut points = Vec::with_capacity(arr.len());
        for (i, item) in arr.iter().enumerate() {
            let pair = item
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| schema(&format!("point {i} must be a pair [x, y]")))?;
            let text = |v: &Value| -> Result<String, InputError> {
                match v {
                    Value::Number(n) => Ok(n.to_string()),
                    Value::String(s) => Ok(s.clone()),
                    _ => Err(schema(&format!(
                        "point {i}: coordinates must be numbers or decimal strings"
                    ))),
                }
            };
            let p = Point::parse(&text(&pair[0])?, &text(&pair[1])?).map_err(|source| {
                InputError::Invalid {
                    path: path.to_string(),
                    source,
                }
            })?;
            points.push(p);
        }
        Ok(PointSetFile { points, label })
    }

    pub fn into_pointset(self, path: &str) -> Result<(PointSet, Option<String>), InputError> {
        let set = PointSet::new(self.points).map_err(|source| InputError::Invalid {
            path: path.to_string(),
            source,
        })?;
        Ok((set, self.label))
    }
}

/// Reads and validates a point file: exact coordinates, `n > 3`, general position.
pub fn parse_pointset(path: &Path) -> Result<(PointSet, Option<String>), InputError> {
    let name = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| InputError::Read {
        path: name.clone(),
        source,
    })?;
    PointSetFile::parse_str(&text, &name)?.into_pointset(&name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> Result<(PointSet, Option<String>), InputError> {
        PointSetFile::parse_str(text, "mem")?.into_pointset("mem")
    }

    #[test]
    fn figure_set() {
        let (s, label) =
            load(r#"{"points": [[0,5],[5,0],[3,-4],[-3,-4],[-4,-1],[-2,3],[2,2],[-1,0]]}"#)
                .unwrap();
        assert_eq!(s.len(), 8);
        assert_eq!(s.x_count(), 6);
        assert!(label.is_none());
    }

    #[test]
    fn collinear_rejected_with_triple() {
        let e = load(r#"{"points": [[0,0],[1,0],[2,0],[0,1]]}"#).unwrap_err();
        assert!(matches!(
            e,
            InputError::Invalid {
                source: GeomError::Collinear(0, 1, 2),
                ..
            }
        ));
        assert!(e.to_string().contains("0, 1 and 2"));
    }

    #[test]
    fn three_points_rejected() {
        let e = load(r#"{"points": [[0,0],[1,0],[0,1]]}"#).unwrap_err();
        assert!(matches!(
            e,
            InputError::Invalid {
                source: GeomError::TooFewPoints(3),
                ..
            }
        ));
    }

    #[test]
    fn malformed_json_reports_position() {
        let e = load("{\"points\": [[0,0],\n [1,0]").unwrap_err();
        match e {
            InputError::Json { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn decimal_strings_are_exact() {
        let (s, label) =
            load(r#"{"label": "mixed", "points": [["0.1","0.2"],[1.000000001,0],["-0.5","3"],[2.25,"1e-3"]]}"#).unwrap();
        assert_eq!(label.as_deref(), Some("mixed"));
        assert_eq!(s.point(0), Point::from_scaled(100_000_000, 200_000_000));
        assert_eq!(s.point(1).x, 1_000_000_001);
        assert_eq!(s.point(3).y, 1_000_000);
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(load(r#"[1,2]"#), Err(InputError::Schema { .. })));
        assert!(matches!(
            load(r#"{"pts": []}"#),
            Err(InputError::Schema { .. })
        ));
        assert!(matches!(
            load(r#"{"points": [[1,2,3]]}"#),
            Err(InputError::Schema { .. })
        ));
        assert!(matches!(
            load(r#"{"points": [[true,2]]}"#),
            Err(InputError::Schema { .. })
        ));
    }

    #[test]
    fn round_trip_preserves_exact_coordinates() {
        let pts = vec![
            Point::from_scaled(123_456_789, -987_654_321_000),
            Point::from_scaled(1, 2),
            Point::from_scaled(-5_000_000_000, 0),
            Point::from_scaled(999_999_999_999_999_999, -3),
        ];
        let f = PointSetFile::new(pts.clone(), Some("rt".into()));
        let back = PointSetFile::parse_str(&f.to_pretty_string(), "mem").unwrap();
        assert_eq!(back, f);
    }
}
