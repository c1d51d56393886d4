//! Realization of a finite orbit-category set as a 1-dimensional proper
//! G-CW complex, verification of realizations, and the Euler-characteristic
//! identity for multiplicative induction.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::burnside::{from_marks, table_of_marks, BurnsideElement};
use crate::error::{Error, Result};
use crate::fingroup::{
    fixed_cosets, gsets_isomorphic, subgroup_classes, weyl_group, CosetSpace, Elem, FiniteGroup,
    GSet, SubgroupClass,
};
use crate::gcw::{Cell, CellId, GCWComplex};

/// A contravariant set-valued functor on the orbit category of a finite
/// group, stored on the full subcategory of class representatives: per class
/// a finite set, and per morphism between representative orbits the induced
/// map of sets (contravariantly).
#[derive(Debug, Clone)]
pub struct OrbitCategorySet {
    pub group: Arc<FiniteGroup>,
    pub classes: Vec<SubgroupClass>,
    pub sizes: Vec<usize>,
    spaces: Vec<CosetSpace>,
    /// per pair (i, j): the H_i-fixed coset indices of G/H_j, sorted
    mor_cosets: HashMap<(usize, usize), Vec<usize>>,
    /// parallel to `mor_cosets`: for the morphism G/H_i -> G/H_j at that
    /// coset, the induced map S_j -> S_i as an image table
    maps: HashMap<(usize, usize), Vec<Vec<usize>>>,
}

impl OrbitCategorySet {
    /// Builds and validates the functor from raw data. `maps[(i, j)]` must
    /// list one image table per H_i-fixed coset of G/H_j, in the order of
    /// `fixed_cosets`.
    pub fn new(
        group: Arc<FiniteGroup>,
        sizes: Vec<usize>,
        mut maps: HashMap<(usize, usize), Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let classes = subgroup_classes(&group);
        if sizes.len() != classes.len() {
            return Err(Error::validation("one size per subgroup class required"));
        }
        let spaces: Vec<CosetSpace> = classes
            .iter()
            .map(|c| CosetSpace::new(&group, &c.representative))
            .collect();
        let mut mor_cosets = HashMap::new();
        for i in 0..classes.len() {
            for j in 0..classes.len() {
                let fc = fixed_cosets(&group, &classes[j].representative, &classes[i].representative)?;
                if !fc.fixed.is_empty() {
                    // tables over an empty source set need no user data
                    if sizes[j] == 0 {
                        maps.entry((i, j))
                            .or_insert_with(|| vec![vec![]; fc.fixed.len()]);
                    }
                    mor_cosets.insert((i, j), fc.fixed);
                }
            }
        }
        let s = OrbitCategorySet {
            group,
            classes,
            sizes,
            spaces,
            mor_cosets,
            maps,
        };
        s.check()?;
        Ok(s)
    }

    fn check(&self) -> Result<()> {
        let r = self.classes.len();
        for (&(i, j), cosets) in &self.mor_cosets {
            let tables = self
                .maps
                .get(&(i, j))
                .ok_or_else(|| Error::validation(format!("missing morphism maps for ({i},{j})")))?;
            if tables.len() != cosets.len() {
                return Err(Error::validation(format!(
                    "pair ({i},{j}): {} maps for {} morphisms",
                    tables.len(),
                    cosets.len()
                )));
            }
            for t in tables {
                if t.len() != self.sizes[j] || t.iter().any(|&v| v >= self.sizes[i].max(1)) {
                    return Err(Error::validation(format!(
                        "pair ({i},{j}): image table has wrong shape"
                    )));
                }
                if self.sizes[j] > 0 && self.sizes[i] == 0 {
                    return Err(Error::validation(format!(
                        "pair ({i},{j}): morphism exists but the target value set is empty"
                    )));
                }
            }
        }
        // identity morphisms act as identities
        for i in 0..r {
            if self.sizes[i] == 0 {
                continue;
            }
            let id_map = self.map_at(i, i, 0)?;
            if id_map.iter().enumerate().any(|(a, &b)| a != b) {
                return Err(Error::validation(format!(
                    "identity morphism of class {i} does not act as the identity"
                )));
            }
        }
        // contravariant functoriality on all composable pairs
        for i in 0..r {
            for j in 0..r {
                let Some(cos_ij) = self.mor_cosets.get(&(i, j)) else {
                    continue;
                };
                for k in 0..r {
                    if self.sizes[k] == 0 {
                        continue;
                    }
                    let Some(cos_jk) = self.mor_cosets.get(&(j, k)) else {
                        continue;
                    };
                    for &ci in cos_ij {
                        let g = self.spaces[j].reps[ci];
                        for &cj in cos_jk {
                            let gp = self.spaces[k].reps[cj];
                            let composite = self.group.mul(g, gp);
                            let lhs = self.map_at(i, k, composite)?;
                            let via_j = self.map_at(j, k, gp)?;
                            let via_i = self.map_at(i, j, g)?;
                            for s in 0..self.sizes[k] {
                                if lhs[s] != via_i[via_j[s]] {
                                    return Err(Error::validation(format!(
                                        "functoriality fails on ({i},{j},{k})"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The image table of the morphism G/H_i -> G/H_j represented by the
    /// coset of `g` in G/H_j.
    fn map_at(&self, i: usize, j: usize, g: Elem) -> Result<&Vec<usize>> {
        let coset = self.spaces[j].coset_index(g);
        let cosets = self
            .mor_cosets
            .get(&(i, j))
            .ok_or_else(|| Error::validation(format!("no morphisms from class {i} to {j}")))?;
        let pos = cosets
            .iter()
            .position(|&c| c == coset)
            .ok_or_else(|| Error::validation("coset is not fixed; not a morphism"))?;
        Ok(&self.maps[&(i, j)][pos])
    }

    /// The Weyl-group action on the value set of class `i`, read off the
    /// endomorphism morphisms.
    pub fn weyl_action(&self, i: usize) -> Result<GSet> {
        let w = weyl_group(&self.group, &self.classes[i].representative)?;
        let mut action = Vec::with_capacity(w.order());
        for wi in 0..w.order() {
            let table = if self.sizes[i] == 0 {
                vec![]
            } else {
                self.map_at(i, i, w.lift[wi])?
                    .iter()
                    .map(|&v| v as Elem)
                    .collect()
            };
            action.push(table);
        }
        GSet::new(w.group.clone(), self.sizes[i], action)
    }

    /// The fixed-point functor of a finite G-set: class i gets the H_i-fixed
    /// points, morphisms act by translation.
    pub fn from_gset(t: &GSet) -> Result<Self> {
        let group = t.group.clone();
        let classes = subgroup_classes(&group);
        let fixed_pts: Vec<Vec<usize>> = classes
            .iter()
            .map(|c| {
                (0..t.size)
                    .filter(|&p| c.representative.elements().iter().all(|&h| t.apply(h, p) == p))
                    .collect()
            })
            .collect();
        let sizes: Vec<usize> = fixed_pts.iter().map(|f| f.len()).collect();
        let spaces: Vec<CosetSpace> = classes
            .iter()
            .map(|c| CosetSpace::new(&group, &c.representative))
            .collect();
        let mut maps = HashMap::new();
        for i in 0..classes.len() {
            for j in 0..classes.len() {
                let fc = fixed_cosets(&group, &classes[j].representative, &classes[i].representative)?;
                if fc.fixed.is_empty() {
                    continue;
                }
                let mut tables = Vec::with_capacity(fc.fixed.len());
                for &c in &fc.fixed {
                    let g = spaces[j].reps[c];
                    let table: Vec<usize> = fixed_pts[j]
                        .iter()
                        .map(|&p| {
                            let moved = t.apply(g, p);
                            fixed_pts[i].iter().position(|&q| q == moved).expect(
                                "translate of a fixed point is fixed by the conjugated subgroup",
                            )
                        })
                        .collect();
                    tables.push(table);
                }
                maps.insert((i, j), tables);
            }
        }
        OrbitCategorySet::new(group, sizes, maps)
    }

    /// The component functor of a complex: class i gets the components of
    /// X^{H_i}, morphisms act by translating components.
    pub fn from_pi0(x: &Arc<GCWComplex>) -> Result<Self> {
        let group = x.group.clone();
        let classes = subgroup_classes(&group);
        let fixed: Vec<crate::gcw::FixedSubcomplex> = classes
            .iter()
            .map(|c| crate::gcw::fixed_subcomplex(x, &c.representative, false))
            .collect::<Result<_>>()?;
        let sizes: Vec<usize> = fixed.iter().map(|f| f.components.len()).collect();
        let spaces: Vec<CosetSpace> = classes
            .iter()
            .map(|c| CosetSpace::new(&group, &c.representative))
            .collect();
        let mut maps = HashMap::new();
        for i in 0..classes.len() {
            for j in 0..classes.len() {
                let fc = fixed_cosets(&group, &classes[j].representative, &classes[i].representative)?;
                if fc.fixed.is_empty() {
                    continue;
                }
                let mut tables = Vec::with_capacity(fc.fixed.len());
                for &c in &fc.fixed {
                    let g = spaces[j].reps[c];
                    let table: Vec<usize> = fixed[j]
                        .components
                        .iter()
                        .map(|comp| fixed[i].comp_of[&x.apply(g, comp[0])])
                        .collect();
                    tables.push(table);
                }
                maps.insert((i, j), tables);
            }
        }
        OrbitCategorySet::new(group, sizes, maps)
    }
}

/// A realized orbit-category set: the constructed 1-dimensional complex and
/// the class element carried by each component of each fixed subcomplex.
#[derive(Debug)]
pub struct Realization {
    pub complex: Arc<GCWComplex>,
    pub phi: Vec<Vec<usize>>,
}

/// Realizes a finite orbit-category set as a finite proper 1-dimensional
/// G-CW complex with the prescribed component structure: one vertex orbit
/// per Weyl orbit of values, in subconjugacy order, then equivariant
/// one-cells gluing the fibers together, one per stabilizer element and
/// fiber-orbit representative.
pub fn realize_orbit_set(s: &OrbitCategorySet) -> Result<Realization> {
    let group = &s.group;
    let r = s.classes.len();
    let mut cells: Vec<Cell> = Vec::new();
    let mut action: Vec<Vec<CellId>> = vec![Vec::new(); group.order()];
    // vertex bookkeeping: class and value-set element of each vertex orbit
    let mut vertex_class: Vec<usize> = Vec::new();
    let mut vertex_value: Vec<usize> = Vec::new();
    let mut vertex_coset: Vec<usize> = Vec::new();

    // zero-skeleton: one orbit G/H_i per Weyl orbit of S_i
    for i in 0..r {
        if s.sizes[i] == 0 {
            continue;
        }
        let weyl_set = s.weyl_action(i)?;
        for orbit in weyl_set.orbits() {
            let value = orbit.representative;
            let base = cells.len();
            for c in 0..s.spaces[i].len() {
                cells.push(Cell {
                    id: base + c,
                    dim: 0,
                    faces: BTreeSet::new(),
                    boundary: vec![],
                });
                vertex_class.push(i);
                vertex_value.push(value);
                vertex_coset.push(c);
            }
            for g in group.elements() {
                for c in 0..s.spaces[i].len() {
                    let moved = s.spaces[i].coset_index(group.mul(g, s.spaces[i].reps[c]));
                    action[g as usize].push(base + moved);
                }
            }
        }
    }

    // the functor value of a vertex over class i, read through the morphism
    // its coset represents
    let phi_of_vertex = |s: &OrbitCategorySet, i: usize, v: CellId| -> Result<usize> {
        let j = vertex_class[v];
        let g = s.spaces[j].reps[vertex_coset[v]];
        let table = s.map_at(i, j, g)?;
        Ok(table[vertex_value[v]])
    };

    // attach one-cells class by class, from the largest stabilizers down
    for i in 0..r {
        if s.sizes[i] == 0 {
            continue;
        }
        let current = GCWComplex {
            group: group.clone(),
            cells: cells.clone(),
            action: action.clone(),
        };
        let fix = crate::gcw::fixed_subcomplex(&current, &s.classes[i].representative, false)?;
        // the value carried by each component, from any of its vertices
        let mut comp_phi = vec![usize::MAX; fix.components.len()];
        for (ci, comp) in fix.components.iter().enumerate() {
            for &cell in comp {
                if current.cells[cell].dim != 0 {
                    continue;
                }
                let val = phi_of_vertex(s, i, cell)?;
                if comp_phi[ci] == usize::MAX {
                    comp_phi[ci] = val;
                } else if comp_phi[ci] != val {
                    return Err(Error::validation(
                        "inconsistent functor values inside one component",
                    ));
                }
            }
        }
        let least_vertex = |comp: usize| -> CellId {
            *fix.components[comp]
                .iter()
                .find(|&&c| current.cells[c].dim == 0)
                .expect("every component of the fixed set contains a vertex")
        };
        let weyl_set = s.weyl_action(i)?;
        for orbit in weyl_set.orbits() {
            let value = orbit.representative;
            // stabilizer of the value inside the Weyl group
            let stab: Vec<usize> = (0..weyl_set.group.order())
                .filter(|&w| weyl_set.apply(w as Elem, value) == value)
                .collect();
            // fiber components over this value, as stabilizer-orbit reps
            let fiber: Vec<usize> = (0..fix.components.len())
                .filter(|&c| comp_phi[c] == value)
                .collect();
            let mut seen: BTreeSet<usize> = BTreeSet::new();
            let mut reps: Vec<usize> = Vec::new();
            for &c in &fiber {
                if seen.contains(&c) {
                    continue;
                }
                reps.push(c);
                for &w in &stab {
                    seen.insert(fix.comp_action.apply(w as Elem, c));
                }
            }
            if reps.is_empty() {
                return Err(Error::validation(
                    "empty fiber over a declared value; functor data is inconsistent",
                ));
            }
            let anchor = reps[0];
            // one equivariant one-cell per stabilizer element and fiber
            // representative, joining the anchor to the translated component
            for &w in &stab {
                for &cj in &reps {
                    let target = fix.comp_action.apply(w as Elem, cj);
                    let v1 = least_vertex(anchor);
                    let v2 = least_vertex(target);
                    let base = cells.len();
                    for c in 0..s.spaces[i].len() {
                        let g = s.spaces[i].reps[c];
                        let (a, b) = (current.apply(g, v1), current.apply(g, v2));
                        let boundary = if a == b {
                            vec![]
                        } else {
                            vec![(b, 1), (a, -1)]
                        };
                        cells.push(Cell {
                            id: base + c,
                            dim: 1,
                            faces: [a, b].into_iter().collect(),
                            boundary,
                        });
                    }
                    for g in group.elements() {
                        for c in 0..s.spaces[i].len() {
                            let moved =
                                s.spaces[i].coset_index(group.mul(g, s.spaces[i].reps[c]));
                            action[g as usize].push(base + moved);
                        }
                    }
                }
            }
        }
    }

    let complex = Arc::new(GCWComplex::new(group.clone(), cells, action)?);
    // final labeling of components by functor values
    let mut phi = Vec::with_capacity(r);
    for i in 0..r {
        let fix = crate::gcw::fixed_subcomplex(&complex, &s.classes[i].representative, false)?;
        let mut comp_phi = Vec::with_capacity(fix.components.len());
        for comp in &fix.components {
            let v = *comp
                .iter()
                .find(|&&c| complex.cells[c].dim == 0)
                .expect("component without vertex");
            comp_phi.push(phi_of_vertex(s, i, v)?);
        }
        phi.push(comp_phi);
    }
    Ok(Realization { complex, phi })
}

/// Report of a realization check: for each subgroup class, whether the
/// components of the fixed subcomplex match the declared value set as a set
/// with Weyl action.
#[derive(Debug)]
pub struct RealizationReport {
    pub per_class: Vec<bool>,
    pub ok: bool,
}

pub fn verify_realization(x: &Arc<GCWComplex>, s: &OrbitCategorySet) -> Result<RealizationReport> {
    let mut per_class = Vec::with_capacity(s.classes.len());
    for (i, class) in s.classes.iter().enumerate() {
        let fix = crate::gcw::fixed_subcomplex(x, &class.representative, false)?;
        let declared = s.weyl_action(i)?;
        per_class.push(gsets_isomorphic(&fix.comp_action, &declared));
    }
    let ok = per_class.iter().all(|&b| b);
    Ok(RealizationReport { per_class, ok })
}

/// The Burnside element of the multiplicative induction of a space with
/// Euler characteristic `chi_n` along a finite group `h`: its marks are
/// chi_n^{[H:K]} per class (K), the inversion is integral, and the top
/// coefficient equals chi_n.
pub fn multiplicative_induction_euler(
    h: &Arc<FiniteGroup>,
    chi_n: i64,
) -> Result<BurnsideElement> {
    let marks = table_of_marks(h)?;
    let mut v = Vec::with_capacity(marks.size());
    for class in &marks.classes {
        let exp = (h.order() / class.representative.order()) as u32;
        let value = chi_n.checked_pow(exp).ok_or(Error::Overflow)?;
        v.push(value);
    }
    from_marks(&marks, &v)
}
