//! Module files: a weight module is stored as JSON with exact string
//! rationals (`"p/q"`), never floats. Corners are bitstrings over the sorted
//! integral coordinates, '1' meaning the -1 side; edge keys are
//! `"<coord>,<t|d>,<source corner>"` with 1-based coordinates.
//!
//! Writing is canonical: sorted keys, all corners listed, every edge with
//! nonzero source and target dimensions present (zero matrices included).
//! Reading rejects floats and shape mismatches with a field path.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::blocks::{BlockId, WeightModule};
use crate::error::{Error, Result};
use crate::exactla::Mat;
use crate::quiver::{corner_string, Arrow, Dir, Rep};
use crate::rat::{rat_from_str, rat_to_string};

#[derive(Serialize, Deserialize)]
struct ModuleFile {
    n: usize,
    frac: Vec<String>,
    vertices: BTreeMap<String, usize>,
    edges: BTreeMap<String, Vec<Vec<String>>>,
}

fn parse_corner(s: &str, k: usize) -> Result<usize> {
    if s.len() != k || !s.chars().all(|c| c == '0' || c == '1') {
        return Err(Error::Parse(format!(
            "corner {s:?} must be a {k}-character bitstring"
        )));
    }
    let mut corner = 0usize;
    for (j, c) in s.chars().enumerate() {
        if c == '1' {
            corner |= 1 << j;
        }
    }
    Ok(corner)
}

pub fn module_to_json(m: &WeightModule) -> serde_json::Value {
    let k = m.block.k();
    let integral = m.block.integral_set();
    let mut vertices = BTreeMap::new();
    for corner in 0..(1usize << k) {
        vertices.insert(corner_string(k, corner), m.rep.dims[corner]);
    }
    let mut edges = BTreeMap::new();
    for a in m.rep.arrows() {
        let mat = m.rep.map(&a);
        if mat.rows() == 0 || mat.cols() == 0 {
            continue;
        }
        let key = format!(
            "{},{},{}",
            integral[a.coord] + 1,
            a.dir.letter(),
            corner_string(k, a.src)
        );
        let rows: Vec<Vec<String>> = (0..mat.rows())
            .map(|r| (0..mat.cols()).map(|c| rat_to_string(&mat[(r, c)])).collect())
            .collect();
        edges.insert(key, rows);
    }
    let file = ModuleFile {
        n: m.n(),
        frac: m.block.frac().iter().map(rat_to_string).collect(),
        vertices,
        edges,
    };
    serde_json::to_value(&file).expect("module serialization cannot fail")
}

pub fn module_to_string(m: &WeightModule) -> String {
    let mut s = serde_json::to_string_pretty(&module_to_json(m)).expect("serialization");
    s.push('\n');
    s
}

pub fn module_from_str(text: &str) -> Result<WeightModule> {
    let file: ModuleFile = serde_json::from_str(text)?;
    if file.frac.len() != file.n {
        return Err(Error::Parse(format!(
            "frac: expected {} entries, found {}",
            file.n,
            file.frac.len()
        )));
    }
    let mut frac = Vec::new();
    for (i, f) in file.frac.iter().enumerate() {
        let v = rat_from_str(f)
            .map_err(|e| Error::Parse(format!("frac[{i}]: {e}")))?;
        frac.push(crate::rat::frac_mod_one(&v));
    }
    let block = BlockId::new(file.n, frac)?;
    let k = block.k();
    let integral = block.integral_set();
    let mut dims = vec![0usize; 1 << k];
    for (s, d) in &file.vertices {
        let corner =
            parse_corner(s, k).map_err(|e| Error::Parse(format!("vertices.{s}: {e}")))?;
        dims[corner] = *d;
    }
    let mut maps: BTreeMap<Arrow, Mat> = BTreeMap::new();
    for (key, rows) in &file.edges {
        let parts: Vec<&str> = key.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "edges.{key}: key must be coord,dir,corner"
            )));
        }
        let coord_1based: usize = parts[0]
            .parse()
            .map_err(|_| Error::Parse(format!("edges.{key}: bad coordinate")))?;
        let coord = integral
            .iter()
            .position(|&i| i + 1 == coord_1based)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "edges.{key}: coordinate {coord_1based} is not integral in this block"
                ))
            })?;
        let dir = match parts[1] {
            "t" => Dir::T,
            "d" => Dir::D,
            other => {
                return Err(Error::Parse(format!(
                    "edges.{key}: direction must be t or d, found {other:?}"
                )))
            }
        };
        let src = parse_corner(parts[2], k)
            .map_err(|e| Error::Parse(format!("edges.{key}: {e}")))?;
        let arrow = Arrow { coord, dir, src };
        if (src >> coord) & 1 != matches!(dir, Dir::T) as usize {
            return Err(Error::Parse(format!(
                "edges.{key}: arrow direction inconsistent with source corner"
            )));
        }
        let tgt = arrow.tgt();
        if rows.len() != dims[tgt] {
            return Err(Error::Parse(format!(
                "edges.{key}: expected {} rows, found {}",
                dims[tgt],
                rows.len()
            )));
        }
        let mut mat = Mat::zeros(dims[tgt], dims[src]);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != dims[src] {
                return Err(Error::Parse(format!(
                    "edges.{key}[{r}]: expected {} columns, found {}",
                    dims[src],
                    row.len()
                )));
            }
            for (c, entry) in row.iter().enumerate() {
                mat[(r, c)] = rat_from_str(entry)
                    .map_err(|e| Error::Parse(format!("edges.{key}[{r}][{c}]: {e}")))?;
            }
        }
        maps.insert(arrow, mat);
    }
    let rep = Rep::new(k, dims, maps)?;
    WeightModule::new(block, rep)
}

pub fn read_module(path: &Path) -> Result<WeightModule> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::ModuleFile {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    module_from_str(&text).map_err(|e| Error::ModuleFile {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

pub fn write_module(m: &WeightModule, path: &Path) -> Result<()> {
    std::fs::write(path, module_to_string(m)).map_err(|e| Error::ModuleFile {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{std_module, StdKind};
    use crate::rat::{rat, ratio};

    #[test]
    fn round_trip_is_canonical() {
        let f0 = std_module(StdKind::F, &[rat(0)]).unwrap();
        let text = module_to_string(&f0);
        let back = module_from_str(&text).unwrap();
        assert_eq!(back, f0);
        assert_eq!(module_to_string(&back), text);
    }

    #[test]
    fn round_trip_mixed_block() {
        let m = std_module(StdKind::P, &[ratio(1, 2), rat(0), rat(-1)]).unwrap();
        let text = module_to_string(&m);
        let back = module_from_str(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn rejects_floats() {
        let text = r#"{
            "n": 1,
            "frac": ["0.5"],
            "vertices": {"0": 1, "1": 1},
            "edges": {}
        }"#;
        let err = module_from_str(text).unwrap_err();
        assert!(err.to_string().contains("floating-point"));
    }

    #[test]
    fn rejects_shape_mismatch() {
        let f0 = std_module(StdKind::F, &[rat(0)]).unwrap();
        let mut v = module_to_json(&f0);
        // drop a row from the t-edge matrix
        let edges = v.get_mut("edges").unwrap().as_object_mut().unwrap();
        let (key, val) = edges.iter_mut().next().unwrap();
        let _ = key;
        *val = serde_json::json!([]);
        let err = module_from_str(&serde_json::to_string(&v).unwrap()).unwrap_err();
        assert!(err.to_string().contains("rows"));
    }

    #[test]
    fn rejects_relation_violation() {
        // dims (1,1) with both V_1 edges nonzero
        let text = r#"{
            "n": 1,
            "frac": ["0"],
            "vertices": {"0": 1, "1": 1},
            "edges": {"1,t,1": [["1"]], "1,d,0": [["1"]]}
        }"#;
        let err = module_from_str(text).unwrap_err();
        assert!(err.to_string().contains("relation"));
    }
}
