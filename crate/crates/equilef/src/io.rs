//! JSON file formats and loaders for every input the CLI accepts: groups,
//! complexes, cellular maps, fixed-point data, component presentations and
//! orbit-category sets. Loading always validates.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fingroup::{Elem, FiniteGroup, Subgroup};
use crate::gcw::{Cell, CellId, CellularGMap, GCWComplex};
use crate::linalg::{QMat, Rat};
use crate::localfix::{DegreeMode, FixedPointDatum, OrthogonalRepresentation};
use crate::presented::{ComponentPresentation, ZeroDatum};
use crate::realize::OrbitCategorySet;

/// A group given either by its full multiplication table or by permutation
/// generators to be closed into one.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Table {
        order: usize,
        mul: Vec<Vec<Elem>>,
    },
    Permutations {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

pub fn group_from_value(v: &GroupFile) -> Result<Arc<FiniteGroup>> {
    let g = match v {
        GroupFile::Table { order, mul } => {
            if *order != mul.len() {
                return Err(Error::validation("declared order differs from table size"));
            }
            FiniteGroup::from_mul_table(mul.clone())?
        }
        GroupFile::Permutations { degree, generators } => {
            FiniteGroup::from_permutations(*degree, generators)?
        }
    };
    Ok(Arc::new(g))
}

pub fn load_group(path: &Path) -> Result<Arc<FiniteGroup>> {
    let text = std::fs::read_to_string(path)?;
    let v: GroupFile = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    group_from_value(&v)
}

pub fn group_to_value(g: &FiniteGroup) -> GroupFile {
    GroupFile::Table {
        order: g.order(),
        mul: g.mul_table(),
    }
}

/// Inline group or a path to a group file, resolved against the referencing
/// file's directory.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Path(String),
    Inline(GroupFile),
}

fn resolve_group(r: &GroupRef, base: &Path) -> Result<Arc<FiniteGroup>> {
    match r {
        GroupRef::Inline(v) => group_from_value(v),
        GroupRef::Path(p) => {
            let mut full = PathBuf::from(base);
            full.push(p);
            load_group(&full)
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CellFile {
    pub id: CellId,
    pub dim: usize,
    #[serde(default)]
    pub faces: Vec<CellId>,
    #[serde(default)]
    pub boundary: Vec<(CellId, i64)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexFile {
    pub group: GroupRef,
    pub cells: Vec<CellFile>,
    pub action: Vec<Vec<CellId>>,
}

pub fn load_complex(path: &Path) -> Result<Arc<GCWComplex>> {
    let text = std::fs::read_to_string(path)?;
    let v: ComplexFile = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    let group = resolve_group(&v.group, &base)?;
    let cells = v
        .cells
        .into_iter()
        .map(|c| Cell {
            id: c.id,
            dim: c.dim,
            faces: c.faces.into_iter().collect::<BTreeSet<_>>(),
            boundary: c.boundary,
        })
        .collect();
    Ok(Arc::new(GCWComplex::new(group, cells, v.action)?))
}

pub fn save_complex(path: &Path, x: &GCWComplex) -> Result<()> {
    let v = ComplexFile {
        group: GroupRef::Inline(group_to_value(&x.group)),
        cells: x
            .cells
            .iter()
            .map(|c| CellFile {
                id: c.id,
                dim: c.dim,
                faces: c.faces.iter().cloned().collect(),
                boundary: c.boundary.clone(),
            })
            .collect(),
        action: x.action.clone(),
    };
    let text = serde_json::to_string_pretty(&v).map_err(|e| Error::Parse(e.to_string()))?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapFile {
    /// carrier cell per cell id (keys are cell ids as strings)
    pub carrier: BTreeMap<String, CellId>,
    /// chain image per cell id; omitted cells have empty chains
    pub chain: BTreeMap<String, Vec<(CellId, i64)>>,
}

pub fn load_map(path: &Path, complex: &Arc<GCWComplex>) -> Result<CellularGMap> {
    let text = std::fs::read_to_string(path)?;
    let v: MapFile = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let n = complex.len();
    let mut carrier = vec![usize::MAX; n];
    for (k, t) in &v.carrier {
        let id: usize = k
            .parse()
            .map_err(|_| Error::Parse(format!("bad cell id key {k}")))?;
        if id >= n {
            return Err(Error::validation(format!("carrier key {id} out of range")));
        }
        carrier[id] = *t;
    }
    if carrier.iter().any(|&t| t == usize::MAX) {
        return Err(Error::validation("carrier must cover every cell"));
    }
    let mut chain = vec![Vec::new(); n];
    for (k, img) in &v.chain {
        let id: usize = k
            .parse()
            .map_err(|_| Error::Parse(format!("bad cell id key {k}")))?;
        if id >= n {
            return Err(Error::validation(format!("chain key {id} out of range")));
        }
        chain[id] = img.clone();
    }
    CellularGMap::new(complex.clone(), carrier, chain)
}

/// Parses "p/q" or "p" into an exact rational.
pub fn parse_fraction(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s}")))?;
    if d == BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator in {s}")));
    }
    Ok(Rat::new(n, d))
}

/// Renders a rational as "p" or "p/q", always reduced.
pub fn format_fraction(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_matrix(rows: &[Vec<String>]) -> Result<QMat> {
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        out.push(
            row.iter()
                .map(|s| parse_fraction(s))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Ok(QMat::from_rows(out))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixedPointFile {
    pub vertex: CellId,
    pub stabilizer: Vec<Elem>,
    /// matrices per abstract stabilizer element (keys "0", "1", ...)
    pub rep: BTreeMap<String, Vec<Vec<String>>>,
    pub differential: Vec<Vec<String>>,
    pub mode: String,
}

pub fn load_fixed_points(
    path: &Path,
    complex: &Arc<GCWComplex>,
) -> Result<Vec<(FixedPointDatum, DegreeMode)>> {
    let text = std::fs::read_to_string(path)?;
    let v: Vec<FixedPointFile> =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut out = Vec::with_capacity(v.len());
    for rec in v {
        let stabilizer = Subgroup::new(complex.group.clone(), rec.stabilizer)?;
        let (abs, _) = stabilizer.as_group();
        let abs = Arc::new(abs);
        let dim = rec
            .differential
            .first()
            .map(|r| r.len())
            .unwrap_or_default();
        let mut matrices = Vec::with_capacity(abs.order());
        for e in 0..abs.order() {
            let key = e.to_string();
            let rows = rec
                .rep
                .get(&key)
                .ok_or_else(|| Error::validation(format!("representation misses element {key}")))?;
            matrices.push(parse_matrix(rows)?);
        }
        let rep = OrthogonalRepresentation::new(abs, dim, matrices)?;
        let differential = parse_matrix(&rec.differential)?;
        let mode = match rec.mode.as_str() {
            "map" => DegreeMode::Map,
            "field" => DegreeMode::Field,
            other => return Err(Error::Parse(format!("unknown mode {other}"))),
        };
        let datum = FixedPointDatum {
            vertex: rec.vertex,
            stabilizer,
            rep,
            differential,
        };
        datum.check(complex)?;
        out.push((datum, mode));
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorFile {
    pub from: String,
    pub to: String,
    /// isotropy order of each Weyl orbit of the morphism set
    pub orbits: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ZeroFile {
    pub stabilizer: GroupFile,
    pub signs: Vec<i64>,
    pub localization: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresentationFile {
    /// class labels; their order is the declared one unless `order` is given
    pub classes: Vec<String>,
    /// optional subconjugacy-compatible ordering of the same labels
    #[serde(default)]
    pub order: Option<Vec<String>>,
    pub mor: Vec<MorFile>,
    #[serde(default)]
    pub cells: BTreeMap<String, Vec<i64>>,
    #[serde(default)]
    pub zeros: Vec<ZeroFile>,
}

pub fn load_presentation(path: &Path) -> Result<ComponentPresentation> {
    let text = std::fs::read_to_string(path)?;
    let v: PresentationFile =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    presentation_from_value(&v)
}

pub fn presentation_from_value(v: &PresentationFile) -> Result<ComponentPresentation> {
    let labels = match &v.order {
        None => v.classes.clone(),
        Some(order) => {
            let mut sorted_a = v.classes.clone();
            let mut sorted_b = order.clone();
            sorted_a.sort();
            sorted_b.sort();
            if sorted_a != sorted_b {
                return Err(Error::validation(
                    "order must list exactly the declared class labels",
                ));
            }
            order.clone()
        }
    };
    let index = |l: &str| -> Result<usize> {
        labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| Error::validation(format!("unknown class label {l}")))
    };
    let mut mor = HashMap::new();
    for m in &v.mor {
        mor.insert((index(&m.from)?, index(&m.to)?), m.orbits.clone());
    }
    let mut cell_counts = vec![Vec::new(); labels.len()];
    for (l, counts) in &v.cells {
        cell_counts[index(l)?] = counts.clone();
    }
    let mut zeros = Vec::with_capacity(v.zeros.len());
    for z in &v.zeros {
        zeros.push(ZeroDatum {
            stabilizer: group_from_value(&z.stabilizer)?,
            signs: z.signs.clone(),
            localization: z.localization.clone(),
        });
    }
    let p = ComponentPresentation {
        labels,
        mor,
        cell_counts,
        zeros,
    };
    p.validate()?;
    Ok(p)
}

/// True if the file parses as a presentation rather than a complex; the CLI
/// uses this to dispatch `compute` on either kind of input.
pub fn sniff_presentation(path: &Path) -> Result<bool> {
    let text = std::fs::read_to_string(path)?;
    let v: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(v.get("classes").is_some() && v.get("action").is_none())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitValueFile {
    /// subgroup class index in the deterministic class enumeration
    pub class: usize,
    pub size: usize,
    /// optional Weyl action on the value set, one permutation per Weyl
    /// element; checked against the action derived from the maps
    #[serde(default)]
    pub action: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitMapFile {
    /// domain class index i of the underlying orbit map G/H_i -> G/H_j
    pub dom: usize,
    /// codomain class index j
    pub cod: usize,
    /// a group element g whose coset gH_j represents the morphism
    pub g: Elem,
    /// image in the dom-class value set of each cod-class value (the functor
    /// is contravariant)
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitSetFile {
    pub group: GroupRef,
    pub values: Vec<OrbitValueFile>,
    #[serde(default)]
    pub maps: Vec<OrbitMapFile>,
}

pub fn load_orbit_set(path: &Path) -> Result<OrbitCategorySet> {
    let text = std::fs::read_to_string(path)?;
    let v: OrbitSetFile = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    let group = resolve_group(&v.group, &base)?;
    let classes = crate::fingroup::subgroup_classes(&group);
    let mut sizes = vec![0usize; classes.len()];
    for rec in &v.values {
        if rec.class >= classes.len() {
            return Err(Error::validation(format!(
                "class index {} out of range",
                rec.class
            )));
        }
        sizes[rec.class] = rec.size;
    }
    // group the map records per pair, ordered like fixed_cosets
    let mut maps: HashMap<(usize, usize), Vec<Vec<usize>>> = HashMap::new();
    let mut by_pair: HashMap<(usize, usize), Vec<(usize, Vec<usize>)>> = HashMap::new();
    for rec in &v.maps {
        if rec.dom >= classes.len() || rec.cod >= classes.len() {
            return Err(Error::validation("map record class index out of range"));
        }
        let space = crate::fingroup::CosetSpace::new(&group, &classes[rec.cod].representative);
        by_pair
            .entry((rec.dom, rec.cod))
            .or_default()
            .push((space.coset_index(rec.g), rec.map.clone()));
    }
    for ((i, j), recs) in by_pair {
        let fc = crate::fingroup::fixed_cosets(
            &group,
            &classes[j].representative,
            &classes[i].representative,
        )?;
        let mut tables = vec![None; fc.fixed.len()];
        for (coset, map) in recs {
            let pos = fc
                .fixed
                .iter()
                .position(|&c| c == coset)
                .ok_or_else(|| Error::validation("map record coset is not a morphism"))?;
            tables[pos] = Some(map);
        }
        let tables: Vec<Vec<usize>> = tables.into_iter().collect::<Option<_>>().ok_or_else(|| {
            Error::validation(format!("missing map records for the pair ({i},{j})"))
        })?;
        maps.insert((i, j), tables);
    }
    let s = OrbitCategorySet::new(group, sizes, maps)?;
    // declared Weyl actions, when present, must match the derived ones
    for rec in &v.values {
        if let Some(declared) = &rec.action {
            let derived = s.weyl_action(rec.class)?;
            let matches = declared.len() == derived.action.len()
                && declared.iter().enumerate().all(|(w, perm)| {
                    perm.len() == rec.size
                        && perm
                            .iter()
                            .enumerate()
                            .all(|(p, &q)| derived.apply(w as Elem, p) == q)
                });
            if !matches {
                return Err(Error::validation(format!(
                    "declared Weyl action of class {} disagrees with the maps",
                    rec.class
                )));
            }
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_frac};

    #[test]
    fn fraction_round_trip() {
        assert_eq!(parse_fraction("3").unwrap(), rat(3));
        assert_eq!(parse_fraction("-1/2").unwrap(), rat_frac(-1, 2));
        assert_eq!(parse_fraction("2/4").unwrap(), rat_frac(1, 2));
        assert_eq!(format_fraction(&rat_frac(-1, 2)), "-1/2");
        assert_eq!(format_fraction(&rat(5)), "5");
        assert!(parse_fraction("1/0").is_err());
    }

    #[test]
    fn group_file_variants() {
        let table: GroupFile = serde_json::from_str(r#"{"order":2,"mul":[[0,1],[1,0]]}"#).unwrap();
        let g = group_from_value(&table).unwrap();
        assert_eq!(g.order(), 2);
        let perms: GroupFile =
            serde_json::from_str(r#"{"degree":3,"generators":[[1,0,2],[1,2,0]]}"#).unwrap();
        let g = group_from_value(&perms).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn presentation_order_field_reorders_labels() {
        let text = r#"{
            "classes": ["y", "x"],
            "order": ["x", "y"],
            "mor": [
                {"from": "x", "to": "x", "orbits": [1]},
                {"from": "y", "to": "y", "orbits": [1]},
                {"from": "y", "to": "x", "orbits": [2]}
            ]
        }"#;
        let v: PresentationFile = serde_json::from_str(text).unwrap();
        let p = presentation_from_value(&v).unwrap();
        assert_eq!(p.labels, vec!["x", "y"]);
        // with the declared order the matrix is triangular; without it the
        // same data is rejected
        let mut no_order = v.clone();
        no_order.order = None;
        assert!(presentation_from_value(&no_order).is_err());
    }

    #[test]
    fn orbit_set_action_declaration_is_checked() {
        let dir = std::env::temp_dir().join("equilef-io-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("orset.json");
        let good = r#"{
            "group": { "order": 2, "mul": [[0, 1], [1, 0]] },
            "values": [
                { "class": 0, "size": 0 },
                { "class": 1, "size": 1, "action": [[0], [0]] }
            ],
            "maps": [
                { "dom": 1, "cod": 1, "g": 0, "map": [0] },
                { "dom": 1, "cod": 1, "g": 1, "map": [0] }
            ]
        }"#;
        std::fs::write(&path, good).unwrap();
        assert!(load_orbit_set(&path).is_ok());
        // a wrong permutation count is rejected
        let bad = good.replace("[[0], [0]]", "[[0]]");
        std::fs::write(&path, bad).unwrap();
        assert!(load_orbit_set(&path).is_err());
        std::fs::remove_file(&path).ok();
    }
}
