//! Finite proper G-CW complexes and equivariant cellular self-maps.
//!
//! A complex carries an explicit face (closure) relation separate from the
//! algebraic boundary, because attaching maps of degree zero make boundaries
//! insufficient for component computations. A cellular map carries an
//! explicit per-cell carrier for the same reason: the induced maps on
//! components of fixed sets must be computable even where the chain image
//! vanishes.
//!
//! The requirement that a group element stabilizing a cell fixes it
//! pointwise cannot be expressed fully in cell-level data; validation
//! enforces its checkable shadow (stabilizer monotonicity along faces and
//! boundary-coefficient equivariance) and inputs are trusted beyond that.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fingroup::{weyl_group, Elem, FiniteGroup, GSet, GroupEmbedding, Subgroup, WeylGroup};

pub type CellId = usize;

#[derive(Debug, Clone)]
pub struct Cell {
    pub id: CellId,
    pub dim: usize,
    /// full downward closure: every cell of the closure except the cell itself
    pub faces: BTreeSet<CellId>,
    /// algebraic boundary in dimension dim - 1
    pub boundary: Vec<(CellId, i64)>,
}

#[derive(Debug, Clone)]
pub struct GCWComplex {
    pub group: Arc<FiniteGroup>,
    pub cells: Vec<Cell>,
    /// per group element, a permutation of cell ids
    pub action: Vec<Vec<CellId>>,
}

impl GCWComplex {
    pub fn new(
        group: Arc<FiniteGroup>,
        cells: Vec<Cell>,
        action: Vec<Vec<CellId>>,
    ) -> Result<Self> {
        let x = GCWComplex {
            group,
            cells,
            action,
        };
        let report = x.validate();
        if report.is_empty() {
            Ok(x)
        } else {
            Err(Error::validation(report.join("; ")))
        }
    }

    /// Checks every structural invariant and reports all violations found
    /// instead of stopping at the first.
    pub fn validate(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let n = self.cells.len();
        for (i, c) in self.cells.iter().enumerate() {
            if c.id != i {
                bad.push(format!("cell at position {i} has id {}", c.id));
            }
            for &f in &c.faces {
                if f >= n {
                    bad.push(format!("cell {i}: face {f} out of range"));
                    continue;
                }
                if self.cells[f].dim >= c.dim {
                    bad.push(format!("cell {i}: face {f} does not have lower dimension"));
                }
                for &ff in &self.cells[f].faces {
                    if !c.faces.contains(&ff) {
                        bad.push(format!("cell {i}: faces not downward closed at {f} -> {ff}"));
                    }
                }
            }
            for &(b, _) in &c.boundary {
                if b >= n {
                    bad.push(format!("cell {i}: boundary cell {b} out of range"));
                    continue;
                }
                if c.dim == 0 || self.cells[b].dim + 1 != c.dim {
                    bad.push(format!("cell {i}: boundary cell {b} not one dimension down"));
                }
                if !c.faces.contains(&b) {
                    bad.push(format!("cell {i}: boundary support {b} is not a face"));
                }
            }
            let mut support: Vec<CellId> = c.boundary.iter().map(|&(b, _)| b).collect();
            support.sort_unstable();
            support.dedup();
            if support.len() != c.boundary.len() {
                bad.push(format!("cell {i}: repeated boundary cell"));
            }
        }
        if self.action.len() != self.group.order() {
            bad.push("action table length differs from group order".into());
            return bad;
        }
        for (g, perm) in self.action.iter().enumerate() {
            if perm.len() != n {
                bad.push(format!("action of element {g} has wrong length"));
                return bad;
            }
            let mut seen = vec![false; n];
            for &v in perm {
                if v >= n || seen[v] {
                    bad.push(format!("action of element {g} is not a permutation"));
                    return bad;
                }
                seen[v] = true;
            }
        }
        for e in 0..n {
            if self.action[0][e] != e {
                bad.push("identity does not act trivially on cells".into());
                break;
            }
        }
        'hom: for g in self.group.elements() {
            for h in self.group.elements() {
                let gh = self.group.mul(g, h);
                for e in 0..n {
                    if self.apply(gh, e) != self.apply(g, self.apply(h, e)) {
                        bad.push("cell action is not a group homomorphism".into());
                        break 'hom;
                    }
                }
            }
        }
        for g in self.group.elements() {
            for e in 0..n {
                let ge = self.apply(g, e);
                if self.cells[ge].dim != self.cells[e].dim {
                    bad.push(format!("element {g} changes the dimension of cell {e}"));
                }
                let mapped: BTreeSet<CellId> =
                    self.cells[e].faces.iter().map(|&f| self.apply(g, f)).collect();
                if mapped != self.cells[ge].faces {
                    bad.push(format!("element {g} does not preserve faces of cell {e}"));
                }
                let mapped_boundary: BTreeMap<CellId, i64> = self.cells[e]
                    .boundary
                    .iter()
                    .map(|&(b, c)| (self.apply(g, b), c))
                    .collect();
                let target: BTreeMap<CellId, i64> =
                    self.cells[ge].boundary.iter().cloned().collect();
                if mapped_boundary != target {
                    bad.push(format!(
                        "element {g} does not preserve boundary coefficients of cell {e}"
                    ));
                }
            }
        }
        // del o del = 0
        for c in &self.cells {
            let mut acc: BTreeMap<CellId, i128> = BTreeMap::new();
            for &(b, cb) in &c.boundary {
                for &(bb, cbb) in &self.cells[b].boundary {
                    *acc.entry(bb).or_insert(0) += cb as i128 * cbb as i128;
                }
            }
            if acc.values().any(|&v| v != 0) {
                bad.push(format!("del del != 0 at cell {}", c.id));
            }
        }
        // stabilizer monotonicity
        for c in &self.cells {
            let stab = self.stabilizer_elements(c.id);
            for &f in &c.faces {
                if !stab.iter().all(|&g| self.apply(g, f) == f) {
                    bad.push(format!(
                        "stabilizer of cell {} does not fix its face {f}",
                        c.id
                    ));
                }
            }
        }
        bad
    }

    #[inline]
    pub fn apply(&self, g: Elem, e: CellId) -> CellId {
        self.action[g as usize][e]
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn max_dim(&self) -> usize {
        self.cells.iter().map(|c| c.dim).max().unwrap_or(0)
    }

    pub fn stabilizer_elements(&self, e: CellId) -> Vec<Elem> {
        self.group
            .elements()
            .filter(|&g| self.apply(g, e) == e)
            .collect()
    }

    pub fn cell_stabilizer(&self, e: CellId) -> Subgroup {
        Subgroup::new(self.group.clone(), self.stabilizer_elements(e))
            .expect("cell stabilizers of a valid complex are subgroups")
    }

    /// The cell set as a G-set.
    pub fn cell_gset(&self) -> GSet {
        GSet {
            group: self.group.clone(),
            size: self.cells.len(),
            action: self
                .action
                .iter()
                .map(|perm| perm.iter().map(|&v| v as Elem).collect())
                .collect(),
        }
    }

    /// Cells whose stabilizer contains `h` (the combinatorial fixed set X^H),
    /// or strictly contains it for the strict variant X^{>H}.
    pub fn fixed_cells(&self, h: &Subgroup, strict: bool) -> Vec<CellId> {
        (0..self.cells.len())
            .filter(|&e| {
                let fixed = h.elements().iter().all(|&g| self.apply(g, e) == e);
                if !fixed {
                    return false;
                }
                if strict {
                    self.stabilizer_elements(e).len() > h.order()
                } else {
                    true
                }
            })
            .collect()
    }
}

/// One fixed subcomplex X^H (or X^{>H}) with its decomposition into
/// face-adjacency components and the Weyl-group action on them. Components
/// are numbered by increasing least cell id.
#[derive(Debug, Clone)]
pub struct FixedSubcomplex {
    pub subgroup: Subgroup,
    pub strict: bool,
    pub cells: Vec<CellId>,
    pub components: Vec<Vec<CellId>>,
    pub comp_of: HashMap<CellId, usize>,
    pub weyl: WeylGroup,
    /// action of the Weyl group on component indices
    pub comp_action: GSet,
}

pub fn fixed_subcomplex(x: &GCWComplex, h: &Subgroup, strict: bool) -> Result<FixedSubcomplex> {
    let cells = x.fixed_cells(h, strict);
    let in_set: BTreeSet<CellId> = cells.iter().cloned().collect();
    // union-find over the face relation restricted to the cell set
    let mut parent: HashMap<CellId, CellId> = cells.iter().map(|&c| (c, c)).collect();
    fn find(parent: &mut HashMap<CellId, CellId>, mut a: CellId) -> CellId {
        while parent[&a] != a {
            let p = parent[&a];
            let pp = parent[&p];
            parent.insert(a, pp);
            a = pp;
        }
        a
    }
    for &c in &cells {
        for &f in &x.cells[c].faces {
            if in_set.contains(&f) {
                let (ra, rb) = (find(&mut parent, c), find(&mut parent, f));
                if ra != rb {
                    let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
                    parent.insert(hi, lo);
                }
            }
        }
    }
    let mut comps: BTreeMap<CellId, Vec<CellId>> = BTreeMap::new();
    for &c in &cells {
        let r = find(&mut parent, c);
        comps.entry(r).or_default().push(c);
    }
    let components: Vec<Vec<CellId>> = comps.into_values().collect();
    let comp_of: HashMap<CellId, usize> = components
        .iter()
        .enumerate()
        .flat_map(|(i, cs)| cs.iter().map(move |&c| (c, i)))
        .collect();
    let weyl = weyl_group(&x.group, h)?;
    let mut action = Vec::with_capacity(weyl.order());
    for w in 0..weyl.order() {
        let lift = weyl.lift[w];
        let perm: Vec<Elem> = components
            .iter()
            .map(|cs| comp_of[&x.apply(lift, cs[0])] as Elem)
            .collect();
        action.push(perm);
    }
    let comp_action = GSet {
        group: weyl.group.clone(),
        size: components.len(),
        action,
    };
    Ok(FixedSubcomplex {
        subgroup: h.clone(),
        strict,
        cells,
        components,
        comp_of,
        weyl,
        comp_action,
    })
}

/// One component C of X^H together with its subcomplex C ∩ X^{>H}: the
/// relative pair whose free cells carry the Weyl trace.
#[derive(Debug, Clone)]
pub struct RelativePair {
    pub subgroup: Subgroup,
    pub component: Vec<CellId>,
    pub strict: Vec<CellId>,
    /// cells of the component with stabilizer exactly H
    pub free: Vec<CellId>,
    /// lifts in N H of the elements of W H_x (the stabilizer of the
    /// component under the Weyl action)
    pub weyl_stab_lifts: Vec<Elem>,
}

impl RelativePair {
    pub fn new(x: &GCWComplex, fix: &FixedSubcomplex, comp: usize) -> Result<RelativePair> {
        let component = fix.components[comp].clone();
        let h = &fix.subgroup;
        let strict: Vec<CellId> = component
            .iter()
            .filter(|&&c| x.stabilizer_elements(c).len() > h.order())
            .cloned()
            .collect();
        let free: Vec<CellId> = component
            .iter()
            .filter(|&&c| x.stabilizer_elements(c).len() == h.order())
            .cloned()
            .collect();
        let weyl_stab_lifts: Vec<Elem> = (0..fix.weyl.order())
            .filter(|&w| fix.comp_action.apply(w as Elem, comp) == comp)
            .map(|w| fix.weyl.lift[w])
            .collect();
        // the Weyl stabilizer must act freely on the free cells
        for &lift in &weyl_stab_lifts {
            if h.contains(lift) {
                continue; // identity in the quotient
            }
            for &c in &free {
                if x.apply(lift, c) == c {
                    return Err(Error::validation(format!(
                        "Weyl element lifted by {lift} fixes the free cell {c}"
                    )));
                }
            }
        }
        Ok(RelativePair {
            subgroup: h.clone(),
            component,
            strict,
            free,
            weyl_stab_lifts,
        })
    }

    /// Orbit representatives of the free cells under the Weyl stabilizer
    /// (the action is free, so each orbit has full size).
    pub fn free_orbit_reps(&self, x: &GCWComplex) -> Vec<CellId> {
        let mut seen: BTreeSet<CellId> = BTreeSet::new();
        let mut reps = Vec::new();
        for &c in &self.free {
            if seen.contains(&c) {
                continue;
            }
            reps.push(c);
            for &lift in &self.weyl_stab_lifts {
                seen.insert(x.apply(lift, c));
            }
        }
        reps
    }
}

/// An equivariant cellular self-map: a carrier cell and an integer chain
/// image per cell.
#[derive(Debug, Clone)]
pub struct CellularGMap {
    pub complex: Arc<GCWComplex>,
    pub carrier: Vec<CellId>,
    pub chain: Vec<Vec<(CellId, i64)>>,
}

impl CellularGMap {
    pub fn new(
        complex: Arc<GCWComplex>,
        carrier: Vec<CellId>,
        chain: Vec<Vec<(CellId, i64)>>,
    ) -> Result<Self> {
        let f = CellularGMap {
            complex,
            carrier,
            chain,
        };
        let report = f.validate();
        if report.is_empty() {
            Ok(f)
        } else {
            Err(Error::validation(report.join("; ")))
        }
    }

    pub fn identity(complex: Arc<GCWComplex>) -> Self {
        let carrier = (0..complex.len()).collect();
        let chain = (0..complex.len()).map(|e| vec![(e, 1)]).collect();
        CellularGMap {
            complex,
            carrier,
            chain,
        }
    }

    pub fn validate(&self) -> Vec<String> {
        let x = &self.complex;
        let mut bad = Vec::new();
        if self.carrier.len() != x.len() || self.chain.len() != x.len() {
            return vec!["carrier/chain length differs from cell count".into()];
        }
        for e in 0..x.len() {
            let t = self.carrier[e];
            if t >= x.len() {
                bad.push(format!("carrier of {e} out of range"));
                continue;
            }
            if x.cells[t].dim > x.cells[e].dim {
                bad.push(format!("carrier of {e} has larger dimension"));
            }
            let stab_e = x.stabilizer_elements(e);
            if !stab_e.iter().all(|&g| x.apply(g, t) == t) {
                bad.push(format!("stabilizer of {e} does not fix its carrier {t}"));
            }
            for &f in &x.cells[e].faces {
                let cf = self.carrier[f];
                if cf != t && !x.cells[t].faces.contains(&cf) {
                    bad.push(format!(
                        "carrier of face {f} of {e} escapes the closure of carrier {t}"
                    ));
                }
            }
            for &(s, _) in &self.chain[e] {
                if s >= x.len() || x.cells[s].dim != x.cells[e].dim {
                    bad.push(format!("chain of {e} supported in a different dimension"));
                }
            }
            let mut support: Vec<CellId> = self.chain[e].iter().map(|&(s, _)| s).collect();
            support.sort_unstable();
            support.dedup();
            if support.len() != self.chain[e].len() {
                bad.push(format!("chain of {e} has repeated support"));
            }
        }
        for g in x.group.elements() {
            for e in 0..x.len() {
                let ge = x.apply(g, e);
                if self.carrier[ge] != x.apply(g, self.carrier[e]) {
                    bad.push(format!("carrier not equivariant at ({g},{e})"));
                }
                let moved: BTreeMap<CellId, i64> = self.chain[e]
                    .iter()
                    .map(|&(s, c)| (x.apply(g, s), c))
                    .collect();
                let target: BTreeMap<CellId, i64> = self.chain[ge].iter().cloned().collect();
                if moved != target {
                    bad.push(format!("chain not equivariant at ({g},{e})"));
                }
            }
        }
        // chain map law: del(chain(e)) = chain(del(e))
        for e in 0..x.len() {
            let mut lhs: BTreeMap<CellId, i128> = BTreeMap::new();
            for &(s, c) in &self.chain[e] {
                for &(b, cb) in &x.cells[s].boundary {
                    *lhs.entry(b).or_insert(0) += c as i128 * cb as i128;
                }
            }
            let mut rhs: BTreeMap<CellId, i128> = BTreeMap::new();
            for &(b, cb) in &x.cells[e].boundary {
                for &(s, c) in &self.chain[b] {
                    *rhs.entry(s).or_insert(0) += cb as i128 * c as i128;
                }
            }
            lhs.retain(|_, v| *v != 0);
            rhs.retain(|_, v| *v != 0);
            if lhs != rhs {
                bad.push(format!("chain map law fails at cell {e}"));
            }
        }
        bad
    }

    /// The coefficient of `e` in its own chain image.
    pub fn incidence_number(&self, e: CellId) -> i64 {
        self.chain[e]
            .iter()
            .find(|&&(s, _)| s == e)
            .map_or(0, |&(_, c)| c)
    }

    /// The classical Lefschetz number: alternating sum of the traces of the
    /// chain maps, with no group in sight.
    pub fn nonequivariant_lefschetz(&self) -> i64 {
        let x = &self.complex;
        (0..x.len())
            .map(|e| {
                let sign = if x.cells[e].dim % 2 == 0 { 1 } else { -1 };
                sign * self.incidence_number(e)
            })
            .sum()
    }
}

/// Restriction of the action to a subgroup: same cells, the subgroup's
/// abstract group acting through the embedding.
pub fn restrict_group(
    x: &Arc<GCWComplex>,
    h: &Subgroup,
) -> Result<(Arc<GCWComplex>, GroupEmbedding)> {
    let (abs, emb_elems) = h.as_group();
    let abs = Arc::new(abs);
    let action = emb_elems
        .iter()
        .map(|&g| x.action[g as usize].clone())
        .collect();
    let restricted = GCWComplex::new(abs.clone(), x.cells.clone(), action)?;
    let emb = GroupEmbedding::new(abs, x.group.clone(), emb_elems)?;
    Ok((Arc::new(restricted), emb))
}

pub fn restrict_map(f: &CellularGMap, restricted: &Arc<GCWComplex>) -> Result<CellularGMap> {
    CellularGMap::new(restricted.clone(), f.carrier.clone(), f.chain.clone())
}

/// Induction along an inclusion α: G -> K: [K:α(G)] formal copies of the
/// complex with the induced K-action. Cell (c, e) is copy c of cell e; its
/// id is `c * |cells| + e`.
pub struct InducedComplex {
    pub complex: Arc<GCWComplex>,
    pub copies: usize,
    cells_per_copy: usize,
    /// coset representatives in K, one per copy; copy 0 is the identity coset
    pub coset_reps: Vec<Elem>,
}

impl InducedComplex {
    pub fn cell_in_copy(&self, copy: usize, e: CellId) -> CellId {
        copy * self.cells_per_copy + e
    }
}

pub fn induce_group(x: &Arc<GCWComplex>, alpha: &GroupEmbedding) -> Result<InducedComplex> {
    if alpha.source.order() != x.group.order() {
        return Err(Error::validation(
            "embedding source differs from the complex group",
        ));
    }
    let k = &alpha.target;
    let image = alpha.image();
    let cosets = crate::fingroup::CosetSpace::new(k, &image);
    let copies = cosets.len();
    let n = x.len();
    // inverse of the embedding on its image
    let mut pre: HashMap<Elem, Elem> = HashMap::new();
    for g in x.group.elements() {
        pre.insert(alpha.apply(g), g);
    }
    let mut cells = Vec::with_capacity(copies * n);
    for c in 0..copies {
        for e in 0..n {
            let base = &x.cells[e];
            cells.push(Cell {
                id: c * n + e,
                dim: base.dim,
                faces: base.faces.iter().map(|&f| c * n + f).collect(),
                boundary: base
                    .boundary
                    .iter()
                    .map(|&(b, cf)| (c * n + b, cf))
                    .collect(),
            });
        }
    }
    let mut action = Vec::with_capacity(k.order());
    for kk in k.elements() {
        let mut perm = vec![0usize; copies * n];
        for c in 0..copies {
            let moved = k.mul(kk, cosets.reps[c]);
            let c2 = cosets.coset_index(moved);
            // moved = rep(c2) * image-element
            let g_img = k.mul(k.inv(cosets.reps[c2]), moved);
            let g = pre[&g_img];
            for e in 0..n {
                perm[c * n + e] = c2 * n + x.apply(g, e);
            }
        }
        action.push(perm);
    }
    let complex = GCWComplex::new(k.clone(), cells, action)?;
    Ok(InducedComplex {
        complex: Arc::new(complex),
        copies,
        cells_per_copy: n,
        coset_reps: cosets.reps.clone(),
    })
}

pub fn induce_map(f: &CellularGMap, ind: &InducedComplex) -> Result<CellularGMap> {
    let n = f.complex.len();
    let mut carrier = Vec::with_capacity(ind.copies * n);
    let mut chain = Vec::with_capacity(ind.copies * n);
    for c in 0..ind.copies {
        for e in 0..n {
            carrier.push(c * n + f.carrier[e]);
            chain.push(
                f.chain[e]
                    .iter()
                    .map(|&(s, cf)| (c * n + s, cf))
                    .collect(),
            );
        }
    }
    CellularGMap::new(ind.complex.clone(), carrier, chain)
}

/// Hand-built complexes and maps reused across the test suites.
pub mod fixtures {
    use super::*;

    /// A single G-fixed point.
    pub fn point(group: Arc<FiniteGroup>) -> Arc<GCWComplex> {
        let cells = vec![Cell {
            id: 0,
            dim: 0,
            faces: BTreeSet::new(),
            boundary: vec![],
        }];
        let action = vec![vec![0]; group.order()];
        Arc::new(GCWComplex::new(group, cells, action).unwrap())
    }

    /// The circle with the reflection action of Z/2: two fixed vertices
    /// (cells 0, 1) and two swapped arcs (cells 2, 3), both running from
    /// vertex 0 to vertex 1.
    pub fn reflection_circle() -> Arc<GCWComplex> {
        let group = Arc::new(FiniteGroup::cyclic(2));
        let cells = vec![
            Cell {
                id: 0,
                dim: 0,
                faces: BTreeSet::new(),
                boundary: vec![],
            },
            Cell {
                id: 1,
                dim: 0,
                faces: BTreeSet::new(),
                boundary: vec![],
            },
            Cell {
                id: 2,
                dim: 1,
                faces: [0, 1].into_iter().collect(),
                boundary: vec![(1, 1), (0, -1)],
            },
            Cell {
                id: 3,
                dim: 1,
                faces: [0, 1].into_iter().collect(),
                boundary: vec![(1, 1), (0, -1)],
            },
        ];
        let action = vec![vec![0, 1, 2, 3], vec![0, 1, 3, 2]];
        Arc::new(GCWComplex::new(group, cells, action).unwrap())
    }

    /// Cellular model of the squaring map on the reflection circle: vertex 1
    /// is the fixed point, vertex 0 maps to it, and each arc wraps once
    /// around the whole circle.
    pub fn degree_two_map(x: Arc<GCWComplex>) -> CellularGMap {
        let carrier = vec![1, 1, 2, 3];
        let chain = vec![
            vec![(1, 1)],
            vec![(1, 1)],
            vec![(2, 1), (3, -1)],
            vec![(3, 1), (2, -1)],
        ];
        CellularGMap::new(x, carrier, chain).unwrap()
    }

    /// Two points swapped by Z/2 (a free orbit).
    pub fn free_two_points() -> Arc<GCWComplex> {
        let group = Arc::new(FiniteGroup::cyclic(2));
        let cells = vec![
            Cell {
                id: 0,
                dim: 0,
                faces: BTreeSet::new(),
                boundary: vec![],
            },
            Cell {
                id: 1,
                dim: 0,
                faces: BTreeSet::new(),
                boundary: vec![],
            },
        ];
        let action = vec![vec![0, 1], vec![1, 0]];
        Arc::new(GCWComplex::new(group, cells, action).unwrap())
    }

    /// The 2-sphere with Z/2 acting by the half-turn: fixed poles (0, 1),
    /// swapped meridians (2, 3) and swapped hemispheres (4, 5).
    pub fn rotation_sphere() -> Arc<GCWComplex> {
        let group = Arc::new(FiniteGroup::cyclic(2));
        let cells = vec![
            Cell {
                id: 0,
                dim: 0,
                faces: BTreeSet::new(),
                boundary: vec![],
            },
            Cell {
                id: 1,
                dim: 0,
                faces: BTreeSet::new(),
                boundary: vec![],
            },
            Cell {
                id: 2,
                dim: 1,
                faces: [0, 1].into_iter().collect(),
                boundary: vec![(1, 1), (0, -1)],
            },
            Cell {
                id: 3,
                dim: 1,
                faces: [0, 1].into_iter().collect(),
                boundary: vec![(1, 1), (0, -1)],
            },
            Cell {
                id: 4,
                dim: 2,
                faces: [0, 1, 2, 3].into_iter().collect(),
                boundary: vec![(2, 1), (3, -1)],
            },
            Cell {
                id: 5,
                dim: 2,
                faces: [0, 1, 2, 3].into_iter().collect(),
                boundary: vec![(3, 1), (2, -1)],
            },
        ];
        let action = vec![vec![0, 1, 2, 3, 4, 5], vec![0, 1, 3, 2, 5, 4]];
        Arc::new(GCWComplex::new(group, cells, action).unwrap())
    }
}
