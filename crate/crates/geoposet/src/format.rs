//! JSON files: `classes.json`, `witness.json` and `poset.json`.
//!
//! Coordinates are written as exact `"p/q"` strings. Edge labels follow the
//! core crate: `"e3"` for paths and cycles, `"e3-5"` for cliques.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use geoposet_core::geometry::{Drawing, Point2, Rational};
use geoposet_core::graph::{CrossingSet, FamilyKind, GraphFamily, VertexPermutation};
use geoposet_core::poset::{is_graded, is_lattice, minimal_maximal, GeoPoset, RealizationClass};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type PairJson = [String; 2];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointJson {
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    pub family: String,
    pub n: usize,
    pub positions: BTreeMap<String, PointJson>,
    pub crossings: Vec<PairJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub id: String,
    pub crossings: Vec<PairJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, PointJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesFile {
    pub family: String,
    pub n: usize,
    pub classes: Vec<ClassEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unresolved: Vec<Vec<PairJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analyses {
    pub graded: bool,
    pub lattice: bool,
    pub minimal: Vec<String>,
    pub maximal: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub family: String,
    pub n: usize,
    pub classes: Vec<String>,
    pub cr: Vec<usize>,
    pub crossings: Vec<Vec<PairJson>>,
    pub leq: Vec<Vec<bool>>,
    pub hasse: Vec<PairJson>,
    pub witness_maps: BTreeMap<String, Vec<usize>>,
    pub analyses: Analyses,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub id: String,
    pub cr: usize,
    pub hull_size: usize,
    pub witness: WitnessFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainFile {
    pub family: String,
    pub n: usize,
    pub steps: Vec<ChainStep>,
}

pub fn family_from(kind: &str, n: usize) -> Result<GraphFamily> {
    let kind: FamilyKind = kind.parse().map_err(|_| Error::format(format!("unknown family {kind:?}")))?;
    Ok(GraphFamily::new(kind, n)?)
}

pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_from_str(s: &str) -> Result<Rational> {
    let r: Rational = s.trim().parse().map_err(|_| Error::format(format!("bad rational {s:?}")))?;
    Ok(r)
}

pub fn crossings_to_json(f: &GraphFamily, x: &CrossingSet) -> Vec<PairJson> {
    x.iter().map(|p| [f.edge_label(p.0), f.edge_label(p.1)]).collect()
}

pub fn crossings_from_json(f: &GraphFamily, pairs: &[PairJson]) -> Result<CrossingSet> {
    let mut out = Vec::with_capacity(pairs.len());
    for [a, b] in pairs {
        out.push((f.parse_edge(a)?, f.parse_edge(b)?));
    }
    Ok(CrossingSet::new(f, out)?)
}

/// Parses `"e1xe3,e2xe4"` (also accepts `×` and `*` between the edges).
pub fn parse_crossings_arg(f: &GraphFamily, s: &str) -> Result<CrossingSet> {
    let mut pairs = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let norm = item.replace(['×', '*'], "x");
        let (a, b) = norm
            .split_once("xe")
            .map(|(a, b)| (a.to_string(), format!("e{b}")))
            .ok_or_else(|| Error::format(format!("bad crossing {item:?}, expected e.g. e1xe3")))?;
        pairs.push([a.trim().to_string(), b.trim().to_string()]);
    }
    crossings_from_json(f, &pairs)
}

pub fn positions_to_json(d: &Drawing) -> BTreeMap<String, PointJson> {
    d.positions()
        .iter()
        .enumerate()
        .map(|(i, p)| ((i + 1).to_string(), PointJson { x: rational_to_string(&p.x), y: rational_to_string(&p.y) }))
        .collect()
}

pub fn positions_from_json(f: &GraphFamily, pos: &BTreeMap<String, PointJson>) -> Result<Drawing> {
    let mut pts: Vec<Option<Point2>> = vec![None; f.n()];
    for (k, p) in pos {
        let v: usize = k.parse().map_err(|_| Error::format(format!("bad vertex key {k:?}")))?;
        if v == 0 || v > f.n() {
            return Err(Error::format(format!("vertex {v} out of range for {f}")));
        }
        pts[v - 1] = Some(Point2::new(rational_from_str(&p.x)?, rational_from_str(&p.y)?));
    }
    let pts: Option<Vec<Point2>> = pts.into_iter().collect();
    let pts = pts.ok_or_else(|| Error::format(format!("missing vertex positions for {f}")))?;
    Ok(Drawing::new(*f, pts)?)
}

pub fn witness_to_json(d: &Drawing, x: &CrossingSet) -> WitnessFile {
    let f = d.family();
    WitnessFile {
        family: f.kind().to_string(),
        n: f.n(),
        positions: positions_to_json(d),
        crossings: crossings_to_json(&f, x),
    }
}

/// Reads a witness and checks that it realizes the crossings it lists.
pub fn witness_from_json(w: &WitnessFile) -> Result<(Drawing, CrossingSet)> {
    let f = family_from(&w.family, w.n)?;
    let d = positions_from_json(&f, &w.positions)?;
    let x = crossings_from_json(&f, &w.crossings)?;
    let actual = geoposet_core::geometry::crossing_set(&d)?;
    if actual != x {
        return Err(Error::format("witness positions do not realize the listed crossings"));
    }
    Ok((d, x))
}

pub fn classes_to_json(
    family: &GraphFamily,
    ids: &[String],
    classes: &[RealizationClass],
    unresolved: &[CrossingSet],
) -> ClassesFile {
    ClassesFile {
        family: family.kind().to_string(),
        n: family.n(),
        classes: ids
            .iter()
            .zip(classes)
            .map(|(id, c)| ClassEntry {
                id: id.clone(),
                crossings: crossings_to_json(family, c.crossings()),
                witness: c.witness().map(positions_to_json),
            })
            .collect(),
        unresolved: unresolved.iter().map(|x| crossings_to_json(family, x)).collect(),
    }
}

/// Ids and classes of a `classes.json`. Witnesses are re-verified.
pub fn classes_from_json(file: &ClassesFile) -> Result<(GraphFamily, Vec<String>, Vec<RealizationClass>)> {
    let f = family_from(&file.family, file.n)?;
    let mut ids = Vec::with_capacity(file.classes.len());
    let mut classes = Vec::with_capacity(file.classes.len());
    for c in &file.classes {
        let x = crossings_from_json(&f, &c.crossings)?;
        let class = match &c.witness {
            Some(w) => RealizationClass::with_witness(f, x, positions_from_json(&f, w)?)?,
            None => RealizationClass::new(f, x)?,
        };
        ids.push(c.id.clone());
        classes.push(class);
    }
    Ok((f, ids, classes))
}

pub fn poset_to_json(poset: &GeoPoset, ids: &[String]) -> PosetFile {
    let f = poset.family().unwrap_or_else(|| GraphFamily::path(1));
    let m = poset.len();
    let name = |i: usize| ids[i].clone();
    let mut witness_maps = BTreeMap::new();
    for i in 0..m {
        for j in 0..m {
            if i != j {
                if let Some(p) = poset.witness_map(i, j) {
                    witness_maps.insert(format!("{}->{}", ids[i], ids[j]), p.images());
                }
            }
        }
    }
    let (minimal, maximal) = minimal_maximal(poset);
    PosetFile {
        family: f.kind().to_string(),
        n: f.n(),
        classes: ids.to_vec(),
        cr: poset.classes().iter().map(|c| c.crossings().len()).collect(),
        crossings: poset.classes().iter().map(|c| crossings_to_json(&f, c.crossings())).collect(),
        leq: poset.leq_matrix().to_vec(),
        hasse: poset.hasse().iter().map(|&(a, b)| [name(a), name(b)]).collect(),
        witness_maps,
        analyses: Analyses {
            graded: is_graded(poset).graded,
            lattice: is_lattice(poset).lattice,
            minimal: minimal.into_iter().map(name).collect(),
            maximal: maximal.into_iter().map(name).collect(),
        },
    }
}

/// Rebuilds the poset stored in a `poset.json`, checking every listed
/// witness map and that the stored relation is consistent with it.
pub fn poset_from_json(file: &PosetFile) -> Result<(Vec<String>, GeoPoset)> {
    let f = family_from(&file.family, file.n)?;
    let m = file.classes.len();
    if file.crossings.len() != m || file.leq.len() != m || file.leq.iter().any(|r| r.len() != m) {
        return Err(Error::format("poset arrays disagree in length"));
    }
    let classes: Vec<RealizationClass> = file
        .crossings
        .iter()
        .map(|c| Ok(RealizationClass::new(f, crossings_from_json(&f, c)?)?))
        .collect::<Result<_>>()?;
    let mut relation = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let entry = if i == j {
                file.leq[i][j].then(|| VertexPermutation::identity(f.n()))
            } else {
                match file.witness_maps.get(&format!("{}->{}", file.classes[i], file.classes[j])) {
                    Some(images) => {
                        let p = VertexPermutation::from_images(images)?;
                        if !geoposet_core::poset::is_witness_map(&f, classes[i].crossings(), classes[j].crossings(), &p) {
                            return Err(Error::format(format!("map {}->{} is not a witness", file.classes[i], file.classes[j])));
                        }
                        Some(p)
                    }
                    None => None,
                }
            };
            if entry.is_some() != file.leq[i][j] {
                return Err(Error::format(format!("leq[{i}][{j}] disagrees with the witness maps")));
            }
            relation.push(entry);
        }
    }
    let poset = GeoPoset::from_relation(classes, relation)?;
    Ok((file.classes.clone(), poset))
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    Ok(serde_json::from_str(&text)?)
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}
