//! Point files and witness files.
//!
//! Points are read from CSV with a header of `x` or `x,y`, or from JSON of the
//! form `{"dim":2,"points":[[x,y],...]}`. Coordinates may be integers,
//! decimals or fractions (`7/3`) and are kept exact.

use serde::{Deserialize, Serialize};

use crate::geometry::{Coordinate, Dim, Point, PointSet};
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
struct PointsJson {
    dim: usize,
    points: Vec<Vec<Coordinate>>,
}

/// Parses either format, choosing JSON when the text starts with `{`.
pub fn parse_points(text: &str) -> Result<PointSet> {
    if text.trim_start().starts_with('{') {
        parse_points_json(text)
    } else {
        parse_points_csv(text)
    }
}

pub fn parse_points_csv(text: &str) -> Result<PointSet> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let header: Vec<String> =
        reader.headers().map_err(|e| Error::Parse(e.to_string()))?.iter().map(str::to_ascii_lowercase).collect();
    let dim = match header.as_slice() {
        [x] if x == "x" => Dim::Line,
        [x, y] if x == "x" && y == "y" => Dim::Plane,
        _ => return Err(Error::Parse(format!("expected header `x` or `x,y`, found {header:?}"))),
    };
    let mut points = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse(e.to_string()))?;
        if record.len() != dim.get() {
            return Err(Error::Parse(format!(
                "row {}: expected {} fields, found {}",
                line + 1,
                dim.get(),
                record.len()
            )));
        }
        let coords = record.iter().map(str::parse).collect::<Result<Vec<Coordinate>>>()?;
        points.push(Point::from_coords(coords)?);
    }
    PointSet::new(points)
}

pub fn parse_points_json(text: &str) -> Result<PointSet> {
    let raw: PointsJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let dim = Dim::from_usize(raw.dim)?;
    let points = raw
        .points
        .into_iter()
        .map(|coords| {
            if coords.len() != dim.get() {
                return Err(Error::Parse(format!("point {coords:?} does not have dimension {}", raw.dim)));
            }
            Point::from_coords(coords)
        })
        .collect::<Result<Vec<_>>>()?;
    PointSet::new(points)
}

pub fn points_to_csv(points: &PointSet) -> String {
    let mut out = String::from(match points.dim() {
        Dim::Line => "x\n",
        Dim::Plane => "x,y\n",
    });
    for p in points.points() {
        let row: Vec<String> = p.coords().iter().map(ToString::to_string).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn points_to_json(points: &PointSet) -> String {
    let raw =
        PointsJson { dim: points.dim().get(), points: points.points().iter().map(|p| p.coords().to_vec()).collect() };
    serde_json::to_string(&raw).expect("points serialize")
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IndexFile {
    Bare(Vec<usize>),
    Object { indices: Vec<usize> },
}

/// Reads a set of point indices: a bare JSON array, or any object with an
/// `indices` field (witness files and solver reports both qualify).
pub fn parse_index_set(text: &str) -> Result<Vec<usize>> {
    let parsed: IndexFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(match parsed {
        IndexFile::Bare(v) => v,
        IndexFile::Object { indices } => indices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip() {
        let p = parse_points("x,y\n-3.25, 7/3\n0,1\n").unwrap();
        assert_eq!(p.dim(), Dim::Plane);
        assert_eq!(p.point(0).x().to_string(), "-13/4");
        assert_eq!(points_to_csv(&p), "x,y\n-13/4,7/3\n0,1\n");
        assert_eq!(parse_points(&points_to_csv(&p)).unwrap(), p);
    }

    #[test]
    fn json_accepts_numbers_and_strings() {
        let p = parse_points(r#"{"dim":2,"points":[[0.1,"1/3"],[2,3]]}"#).unwrap();
        assert_eq!(p.point(0).x(), &"1/10".parse::<Coordinate>().unwrap());
        assert_eq!(parse_points(&points_to_json(&p)).unwrap(), p);
        let line = parse_points(r#"{"dim":1,"points":[[0],[5]]}"#).unwrap();
        assert_eq!(line.dim(), Dim::Line);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_points("a,b\n1,2\n").is_err());
        assert!(parse_points("x\n1,2\n").is_err());
        assert!(parse_points("x\nfoo\n").is_err());
        assert!(parse_points("x\n").is_err());
        assert!(parse_points(r#"{"dim":2,"points":[[1]]}"#).is_err());
        assert!(parse_points(r#"{"dim":3,"points":[[1,2,3]]}"#).is_err());
    }

    #[test]
    fn index_sets() {
        assert_eq!(parse_index_set("[3, 1]").unwrap(), vec![3, 1]);
        assert_eq!(parse_index_set(r#"{"r":2,"indices":[0,4],"size":2}"#).unwrap(), vec![0, 4]);
        assert!(parse_index_set("{}").is_err());
    }
}
