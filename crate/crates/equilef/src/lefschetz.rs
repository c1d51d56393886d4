//! The global invariants: traces over rational group rings, orbifold
//! Lefschetz numbers, the basis of isomorphism classes of the component
//! category, equivariant Lefschetz classes, universal and orbifold Euler
//! characteristics, induction and pushforward, and the character map.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::fingroup::{
    class_of, fixed_cosets, subgroup_classes, Elem, FiniteGroup, GSet, GroupEmbedding, Subgroup,
    SubgroupClass,
};
use crate::gcw::{
    fixed_subcomplex, CellId, CellularGMap, FixedSubcomplex, GCWComplex, InducedComplex,
    RelativePair,
};
use crate::linalg::{rat, QMat, Rat};

/// An equivariant endomorphism of a direct sum of coset modules R[G/H_i],
/// expanded to a full rational matrix in the coset basis. The `gset` records
/// the permutation action of the group on that basis.
#[derive(Debug, Clone)]
pub struct GroupRingEndomorphism {
    pub group: Arc<FiniteGroup>,
    pub modules: Vec<Subgroup>,
    pub gset: GSet,
    /// basepoint position (coset of the identity) of each module in the basis
    pub basepoints: Vec<usize>,
    pub matrix: QMat,
}

impl GroupRingEndomorphism {
    /// Builds the endomorphism from the images of the module basepoints:
    /// `images[j]` is the vector over the whole coset basis that 1·H_j maps
    /// to. Each image must be invariant under H_j, which is exactly the
    /// condition for the extension by translation to be well defined.
    pub fn from_images(
        group: Arc<FiniteGroup>,
        modules: Vec<Subgroup>,
        images: Vec<Vec<Rat>>,
    ) -> Result<Self> {
        let (gset, basepoints, spaces) = coset_sum_gset(&group, &modules);
        let n = gset.size;
        if images.len() != modules.len() || images.iter().any(|v| v.len() != n) {
            return Err(Error::validation("image table has wrong shape"));
        }
        for (j, img) in images.iter().enumerate() {
            for &h in modules[j].elements() {
                for p in 0..n {
                    if images[j][gset.apply(h, p)] != img[p] {
                        return Err(Error::validation(format!(
                            "image of module {j} is not invariant under its subgroup"
                        )));
                    }
                }
            }
        }
        // column of coset g·H_j is g · images[j]
        let mut matrix = QMat::zeros(n, n);
        for (j, space) in spaces.iter().enumerate() {
            for (c, &rep) in space.reps.iter().enumerate() {
                let col = basepoints[j] + c;
                for p in 0..n {
                    // (g·v)[p] = v[g^{-1}·p]
                    let src = gset.apply(group.inv(rep), p);
                    matrix[(p, col)] = images[j][src].clone();
                }
            }
        }
        let endo = GroupRingEndomorphism {
            group,
            modules,
            gset,
            basepoints,
            matrix,
        };
        endo.check()?;
        Ok(endo)
    }

    pub fn identity(group: Arc<FiniteGroup>, modules: Vec<Subgroup>) -> Self {
        let (gset, basepoints, _) = coset_sum_gset(&group, &modules);
        let matrix = QMat::identity(gset.size);
        GroupRingEndomorphism {
            group,
            modules,
            gset,
            basepoints,
            matrix,
        }
    }

    fn check(&self) -> Result<()> {
        let n = self.gset.size;
        for g in self.group.elements() {
            for a in 0..n {
                for b in 0..n {
                    if self.matrix[(self.gset.apply(g, a), self.gset.apply(g, b))]
                        != self.matrix[(a, b)]
                    {
                        return Err(Error::validation("matrix does not commute with the action"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn compose(&self, other: &GroupRingEndomorphism) -> GroupRingEndomorphism {
        GroupRingEndomorphism {
            group: self.group.clone(),
            modules: self.modules.clone(),
            gset: self.gset.clone(),
            basepoints: self.basepoints.clone(),
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn linear_combination(r1: &Rat, u1: &Self, r2: &Rat, u2: &Self) -> GroupRingEndomorphism {
        GroupRingEndomorphism {
            group: u1.group.clone(),
            modules: u1.modules.clone(),
            gset: u1.gset.clone(),
            basepoints: u1.basepoints.clone(),
            matrix: u1.matrix.scale(r1).add(&u2.matrix.scale(r2)),
        }
    }

    pub fn direct_sum(a: &Self, b: &Self) -> GroupRingEndomorphism {
        let modules: Vec<Subgroup> = a.modules.iter().chain(&b.modules).cloned().collect();
        let (gset, basepoints, _) = coset_sum_gset(&a.group, &modules);
        let (na, nb) = (a.gset.size, b.gset.size);
        let matrix = QMat::from_fn(na + nb, na + nb, |i, j| {
            if i < na && j < na {
                a.matrix[(i, j)].clone()
            } else if i >= na && j >= na {
                b.matrix[(i - na, j - na)].clone()
            } else {
                Rat::zero()
            }
        });
        GroupRingEndomorphism {
            group: a.group.clone(),
            modules,
            gset,
            basepoints,
            matrix,
        }
    }

    /// The trace over the rational group ring: per orbit of the permutation
    /// basis, the diagonal entry at a representative weighted by the inverse
    /// isotropy order. For a single coset module this is |H|^{-1} times the
    /// coefficient of the basepoint in its own image.
    pub fn trace(&self) -> Rat {
        permutation_trace(&self.gset, &self.matrix)
    }

    /// Ordinary (non-equivariant) matrix trace.
    pub fn ordinary_trace(&self) -> Rat {
        self.matrix.trace()
    }

    /// Trace of the same linear map viewed over a subgroup. Restriction
    /// regroups the basis into H-orbits; nothing else changes.
    pub fn restricted_trace(&self, h: &Subgroup) -> Rat {
        let (h_abs, emb) = crate::fingroup::subgroup_embedding(h);
        let action = (0..h_abs.order() as Elem)
            .map(|e| self.gset.action[emb.apply(e) as usize].clone())
            .collect();
        let h_set = GSet {
            group: Arc::new(h_abs),
            size: self.gset.size,
            action,
        };
        permutation_trace(&h_set, &self.matrix)
    }

    /// Induction along an inclusion α: G -> K. Each R[G/H] becomes R[K/α(H)]
    /// and the matrix extends K-equivariantly from the same basepoint images.
    pub fn induce(&self, alpha: &GroupEmbedding) -> Result<GroupRingEndomorphism> {
        let k = &alpha.target;
        let new_modules: Vec<Subgroup> = self
            .modules
            .iter()
            .map(|m| {
                let elems: Vec<Elem> = m.elements().iter().map(|&e| alpha.apply(e)).collect();
                Subgroup::new(k.clone(), elems)
            })
            .collect::<Result<_>>()?;
        let (new_gset, new_basepoints, new_spaces) = coset_sum_gset(k, &new_modules);
        // transport the basepoint images through α
        let (_, old_basepoints, old_spaces) = {
            let (g, b, s) = coset_sum_gset(&self.group, &self.modules);
            (g, b, s)
        };
        let mut images = Vec::with_capacity(new_modules.len());
        for j in 0..new_modules.len() {
            let mut img = vec![Rat::zero(); new_gset.size];
            for (i, space) in old_spaces.iter().enumerate() {
                for (c, &rep) in space.reps.iter().enumerate() {
                    let coeff = self.matrix[(old_basepoints[i] + c, old_basepoints[j])].clone();
                    if coeff.is_zero() {
                        continue;
                    }
                    let target = new_spaces[i].coset_index(alpha.apply(rep));
                    img[new_basepoints[i] + target] += coeff;
                }
            }
            images.push(img);
        }
        GroupRingEndomorphism::from_images(k.clone(), new_modules, images)
    }
}

fn coset_sum_gset(
    group: &Arc<FiniteGroup>,
    modules: &[Subgroup],
) -> (GSet, Vec<usize>, Vec<crate::fingroup::CosetSpace>) {
    let spaces: Vec<_> = modules
        .iter()
        .map(|m| crate::fingroup::CosetSpace::new(group, m))
        .collect();
    let mut basepoints = Vec::with_capacity(modules.len());
    let mut offset = 0;
    for s in &spaces {
        // the identity's coset is the one containing element 0
        basepoints.push(offset + s.coset_index(0));
        offset += s.len();
    }
    let size = offset;
    let action = group
        .elements()
        .map(|g| {
            let mut perm = Vec::with_capacity(size);
            let mut base = 0;
            for s in &spaces {
                for &rep in &s.reps {
                    perm.push((base + s.coset_index(group.mul(g, rep))) as Elem);
                }
                base += s.len();
            }
            perm
        })
        .collect();
    (
        GSet {
            group: group.clone(),
            size,
            action,
        },
        basepoints,
        spaces,
    )
}

/// Trace of an equivariant endomorphism of the permutation module R[T]:
/// the diagonal is constant on orbits, and each orbit contributes its
/// diagonal value weighted by the inverse isotropy order.
pub fn permutation_trace(gset: &GSet, matrix: &QMat) -> Rat {
    let mut total = Rat::zero();
    for orbit in gset.orbits() {
        let r = orbit.representative;
        total += &matrix[(r, r)] / rat(orbit.isotropy_order as i64);
    }
    total
}

/// The orbifold Lefschetz number via incidence numbers: the alternating sum
/// over orbits of cells of |G_e|^{-1}·inc(f, e). `excluded` removes the
/// cells of a G-invariant subcomplex for the relative version.
pub fn orbifold_lefschetz_rel(f: &CellularGMap, excluded: &BTreeSet<CellId>) -> Rat {
    let x = &f.complex;
    let mut total = Rat::zero();
    for orbit in x.cell_gset().orbits() {
        let e = orbit.representative;
        if excluded.contains(&e) {
            continue;
        }
        let inc = f.incidence_number(e);
        if inc == 0 {
            continue;
        }
        let sign = if x.cells[e].dim % 2 == 0 { 1 } else { -1 };
        total += rat(sign * inc) / rat(orbit.isotropy_order as i64);
    }
    total
}

pub fn orbifold_lefschetz(f: &CellularGMap) -> Rat {
    orbifold_lefschetz_rel(f, &BTreeSet::new())
}

/// The relative orbifold Lefschetz number of a pair: the sum runs over the
/// Weyl-stabilizer orbits of the cells of the component off the strict
/// subcomplex. Those cells are exactly the free cells, so every isotropy
/// weight is 1 and the value is an integer.
pub fn relative_orbifold_lefschetz(f: &CellularGMap, pair: &RelativePair) -> Rat {
    let x = &f.complex;
    let mut total = 0i64;
    for rep in pair.free_orbit_reps(x) {
        let sign = if x.cells[rep].dim % 2 == 0 { 1 } else { -1 };
        total += sign * f.incidence_number(rep);
    }
    rat(total)
}

/// The same number through the group-ring trace of the cellular chain map,
/// one dimension at a time. Kept as an independent route for cross-checking.
pub fn orbifold_lefschetz_via_traces(f: &CellularGMap) -> Rat {
    let x = &f.complex;
    let mut total = Rat::zero();
    for p in 0..=x.max_dim() {
        let cells: Vec<CellId> = (0..x.len()).filter(|&e| x.cells[e].dim == p).collect();
        if cells.is_empty() {
            continue;
        }
        let pos: std::collections::HashMap<CellId, usize> =
            cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let action = x
            .group
            .elements()
            .map(|g| cells.iter().map(|&c| pos[&x.apply(g, c)] as Elem).collect())
            .collect();
        let gset = GSet {
            group: x.group.clone(),
            size: cells.len(),
            action,
        };
        let mut m = QMat::zeros(cells.len(), cells.len());
        for (j, &c) in cells.iter().enumerate() {
            for &(s, coeff) in &f.chain[c] {
                m[(pos[&s], j)] = rat(coeff);
            }
        }
        let tr = permutation_trace(&gset, &m);
        if p % 2 == 0 {
            total += tr;
        } else {
            total -= tr;
        }
    }
    total
}

/// The orbifold Euler characteristic: alternating sum of inverse stabilizer
/// orders over cell orbits.
pub fn orbifold_euler(x: &GCWComplex) -> Rat {
    let mut total = Rat::zero();
    for orbit in x.cell_gset().orbits() {
        let sign = if x.cells[orbit.representative].dim % 2 == 0 {
            1
        } else {
            -1
        };
        total += rat(sign) / rat(orbit.isotropy_order as i64);
    }
    total
}

/// One basis class: a conjugacy class of subgroups together with a Weyl-orbit
/// representative component of the fixed subcomplex.
#[derive(Debug, Clone)]
pub struct UGClass {
    pub class_idx: usize,
    pub comp: usize,
    pub label: String,
}

/// The basis of U^G(X): one class per (conjugacy class (H) with nonempty
/// fixed set) × (Weyl orbit of components of X^H), ordered by the
/// subconjugacy-compatible class order and then by least cell id.
#[derive(Debug, Clone)]
pub struct UGBasis {
    pub complex: Arc<GCWComplex>,
    pub subgroup_classes: Vec<SubgroupClass>,
    /// per subgroup class: the fixed subcomplex X^H for the representative
    pub fixed: Vec<FixedSubcomplex>,
    pub classes: Vec<UGClass>,
    /// per subgroup class, per component id: basis position of its orbit
    basis_of: Vec<Vec<usize>>,
}

/// An element of U^G(X) in a given basis: exact rational coefficients
/// (integral for Lefschetz classes and Euler characteristics).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGElement {
    pub coeffs: Vec<Rat>,
}

impl UGElement {
    pub fn zero(n: usize) -> Self {
        UGElement {
            coeffs: vec![Rat::zero(); n],
        }
    }

    pub fn add(&self, other: &UGElement) -> UGElement {
        UGElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

pub fn enumerate_classes(x: &Arc<GCWComplex>) -> Result<UGBasis> {
    let sclasses = subgroup_classes(&x.group);
    let mut fixed = Vec::with_capacity(sclasses.len());
    for c in &sclasses {
        fixed.push(fixed_subcomplex(x, &c.representative, false)?);
    }
    let mut classes = Vec::new();
    let mut basis_of: Vec<Vec<usize>> = Vec::with_capacity(sclasses.len());
    for (ci, fix) in fixed.iter().enumerate() {
        let ncomp = fix.components.len();
        let mut of_comp = vec![usize::MAX; ncomp];
        for orbit in fix.comp_action.orbits() {
            let rep = orbit.representative;
            let pos = classes.len();
            classes.push(UGClass {
                class_idx: ci,
                comp: rep,
                label: format!("[H{}:c{}]", ci, fix.components[rep][0]),
            });
            for &member in &orbit.elements {
                of_comp[member] = pos;
            }
        }
        basis_of.push(of_comp);
    }
    Ok(UGBasis {
        complex: x.clone(),
        subgroup_classes: sclasses,
        fixed,
        classes,
        basis_of,
    })
}

impl UGBasis {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Basis position of the class of (subgroup class `ci`, component
    /// `comp` of X^{H_ci}).
    pub fn position(&self, ci: usize, comp: usize) -> usize {
        self.basis_of[ci][comp]
    }

    /// Basis position for an arbitrary subgroup `l` and a cell fixed by it:
    /// conjugates `l` onto its class representative and transports the cell.
    pub fn locate(&self, l: &Subgroup, cell: CellId) -> Result<usize> {
        let x = &self.complex;
        let ci = class_of(&self.subgroup_classes, l)
            .ok_or_else(|| Error::validation("subgroup not found in any class"))?;
        let rep = &self.subgroup_classes[ci].representative;
        let g = x
            .group
            .elements()
            .find(|&g| &l.conjugate(g) == rep)
            .expect("class membership guarantees a conjugator");
        let moved = x.apply(g, cell);
        let comp = *self.fixed[ci]
            .comp_of
            .get(&moved)
            .ok_or_else(|| Error::validation("cell is not fixed by the conjugated subgroup"))?;
        Ok(self.position(ci, comp))
    }

    pub fn labels(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.label.clone()).collect()
    }
}

/// Decides whether f^H maps the component `comp` of X^H into itself, via
/// carriers. Returns the target component; errors if the carriers land in
/// more than one component, which no genuine cellular map can do.
pub fn component_image(
    basis: &UGBasis,
    ci: usize,
    comp: usize,
    f: &CellularGMap,
) -> Result<usize> {
    let fix = &basis.fixed[ci];
    let mut targets = BTreeSet::new();
    for &e in &fix.components[comp] {
        // G_e fixes carrier(e), so carrier(e) lies in X^H as well
        targets.insert(fix.comp_of[&f.carrier[e]]);
    }
    match targets.len() {
        1 => Ok(*targets.iter().next().unwrap()),
        _ => Err(Error::BorderlineComponentMap {
            component: fix.components[comp][0],
        }),
    }
}

/// The equivariant Lefschetz class: for each basis class whose component is
/// preserved, the relative trace over the free cells (where the Weyl
/// stabilizer acts freely, so the trace reduces to incidence numbers over
/// orbits); zero otherwise.
pub fn equivariant_lefschetz_class(basis: &UGBasis, f: &CellularGMap) -> Result<UGElement> {
    let x = &basis.complex;
    let mut out = UGElement::zero(basis.len());
    for (pos, class) in basis.classes.iter().enumerate() {
        let target = component_image(basis, class.class_idx, class.comp, f)?;
        if target != class.comp {
            continue;
        }
        let pair = RelativePair::new(x, &basis.fixed[class.class_idx], class.comp)?;
        out.coeffs[pos] = relative_orbifold_lefschetz(f, &pair);
    }
    Ok(out)
}

/// The universal equivariant Euler characteristic by counting equivariant
/// cells: the coefficient at (H, C) is the alternating count of G-orbits of
/// cells of orbit type G/H meeting C.
pub fn universal_euler(basis: &UGBasis) -> UGElement {
    let x = &basis.complex;
    let orbits = x.cell_gset().orbits();
    let mut out = UGElement::zero(basis.len());
    for (pos, class) in basis.classes.iter().enumerate() {
        let fix = &basis.fixed[class.class_idx];
        let h = &basis.subgroup_classes[class.class_idx].representative;
        let comp_cells: BTreeSet<CellId> =
            fix.components[class.comp].iter().cloned().collect();
        let mut total = 0i64;
        for orbit in &orbits {
            let meets = orbit.elements.iter().any(|&e| {
                comp_cells.contains(&e) && x.stabilizer_elements(e).len() == h.order()
            });
            if meets {
                let dim = x.cells[orbit.representative].dim;
                total += if dim % 2 == 0 { 1 } else { -1 };
            }
        }
        out.coeffs[pos] = rat(total);
    }
    out
}

/// The set of morphisms from class y to class x in the component category:
/// K-fixed cosets gH with g·C_x contained in the component D_y, as a set
/// with an action of the Weyl-group stabilizer of D_y.
#[derive(Debug, Clone)]
pub struct MorSet {
    /// coset representatives g (gH in (G/H)^K)
    pub reps: Vec<Elem>,
    /// action of W K_y on the morphism set
    pub action: GSet,
}

pub fn mor_set(basis: &UGBasis, y: usize, x_class: usize) -> Result<MorSet> {
    let x = &basis.complex;
    let cy = &basis.classes[y];
    let cx = &basis.classes[x_class];
    let k = &basis.subgroup_classes[cy.class_idx].representative;
    let h = &basis.subgroup_classes[cx.class_idx].representative;
    let fix_k = &basis.fixed[cy.class_idx];
    let d = cy.comp;
    let c0 = basis.fixed[cx.class_idx].components[cx.comp][0];
    let fc = fixed_cosets(&x.group, h, k)?;
    let mut reps: Vec<Elem> = Vec::new();
    for &ci in &fc.fixed {
        let g = fc.space.reps[ci];
        // g·C_x lies in X^K since g⁻¹Kg ⊆ H ⊆ G_{c0}; locate its component
        let target = fix_k.comp_of[&x.apply(g, c0)];
        if target == d {
            reps.push(g);
        }
    }
    // W K_y: stabilizer of the component d inside the Weyl group of K
    let wk = &fix_k.weyl;
    let stab_w: Vec<usize> = (0..wk.order())
        .filter(|&w| fix_k.comp_action.apply(w as Elem, d) == d)
        .collect();
    let wy_sub = Subgroup::new(
        wk.group.clone(),
        stab_w.iter().map(|&w| w as Elem).collect(),
    )?;
    let (wy_abs, wy_emb) = crate::fingroup::subgroup_embedding(&wy_sub);
    let pos_of = |g: Elem| -> Option<usize> {
        let target_coset = fc.space.coset_index(g);
        reps.iter()
            .position(|&r| fc.space.coset_index(r) == target_coset)
    };
    let mut action = Vec::with_capacity(wy_abs.order());
    for w_abs in 0..wy_abs.order() as Elem {
        let n = wk.lift[wy_emb.apply(w_abs) as usize];
        let perm: Vec<Elem> = reps
            .iter()
            .map(|&g| {
                pos_of(x.group.mul(n, g)).expect("mor set is closed under the Weyl stabilizer")
                    as Elem
            })
            .collect();
        action.push(perm);
    }
    let action = GSet {
        group: Arc::new(wy_abs),
        size: reps.len(),
        action,
    };
    Ok(MorSet { reps, action })
}

/// The character map as a square matrix over the basis: entry (row y, col x)
/// is the sum over W K_y-orbits of mor(y, x) of the inverse isotropy order.
/// Lower triangular with unit diagonal in the basis order.
pub fn character_map(basis: &UGBasis) -> Result<QMat> {
    let n = basis.len();
    let mut m = QMat::zeros(n, n);
    for y in 0..n {
        for xc in 0..n {
            let mor = mor_set(basis, y, xc)?;
            let mut entry = Rat::zero();
            for orbit in mor.action.orbits() {
                entry += Rat::one() / rat(orbit.isotropy_order as i64);
            }
            m[(y, xc)] = entry;
        }
    }
    Ok(m)
}

/// Applies the character matrix to an element.
pub fn character_values(ch: &QMat, u: &UGElement) -> Vec<Rat> {
    ch.mul_vec(&u.coeffs)
}

/// The orbifold Lefschetz number of f restricted to one component D of X^K,
/// as a W K_y-complex: alternating sum over W K_y-orbits of cells of D of
/// |isotropy|^{-1}·inc(f, e). Only meaningful when f^K preserves D.
pub fn component_orbifold_lefschetz(
    basis: &UGBasis,
    ci: usize,
    comp: usize,
    f: &CellularGMap,
) -> Rat {
    component_weighted_sum(basis, ci, comp, |e| f.incidence_number(e))
}

/// The orbifold Euler characteristic of one component of X^K as a
/// W K_y-complex.
pub fn component_orbifold_euler(basis: &UGBasis, ci: usize, comp: usize) -> Rat {
    component_weighted_sum(basis, ci, comp, |_| 1)
}

fn component_weighted_sum(
    basis: &UGBasis,
    ci: usize,
    comp: usize,
    weight: impl Fn(CellId) -> i64,
) -> Rat {
    let x = &basis.complex;
    let fix = &basis.fixed[ci];
    let cells = &fix.components[comp];
    let lifts: Vec<Elem> = (0..fix.weyl.order())
        .filter(|&w| fix.comp_action.apply(w as Elem, comp) == comp)
        .map(|w| fix.weyl.lift[w])
        .collect();
    let mut seen: BTreeSet<CellId> = BTreeSet::new();
    let mut total = Rat::zero();
    for &c in cells {
        if seen.contains(&c) {
            continue;
        }
        let mut orbit: BTreeSet<CellId> = BTreeSet::new();
        for &n in &lifts {
            orbit.insert(x.apply(n, c));
        }
        let iso = lifts.len() / orbit.len();
        let w = weight(c);
        if w != 0 {
            let sign = if x.cells[c].dim % 2 == 0 { 1 } else { -1 };
            total += rat(sign * w) / rat(iso as i64);
        }
        seen.extend(orbit);
    }
    total
}

/// Pushes a Burnside element over the stabilizer of a vertex into U^G(X):
/// [G_x/L] goes to the class of (the G-conjugacy class of L, the component
/// of X^L containing the vertex).
pub fn ug_induction(
    basis: &UGBasis,
    alpha: &GroupEmbedding,
    a: &BurnsideElement,
    vertex: CellId,
) -> Result<UGElement> {
    let x = &basis.complex;
    let vertex_stab = x.stabilizer_elements(vertex);
    let image = alpha.image();
    if image.elements() != vertex_stab.as_slice() {
        return Err(Error::VertexStabilizerMismatch {
            vertex,
            actual: vertex_stab.len(),
            claimed: image.order(),
        });
    }
    let stab_classes = subgroup_classes(&alpha.source);
    if a.coeffs.len() != stab_classes.len() {
        return Err(Error::validation(
            "burnside element does not match the stabilizer's class count",
        ));
    }
    let mut out = UGElement::zero(basis.len());
    for (l_idx, coeff) in a.coeffs.iter().enumerate() {
        if *coeff == 0 {
            continue;
        }
        let l_abs = &stab_classes[l_idx].representative;
        let l_elems: Vec<Elem> = l_abs.elements().iter().map(|&e| alpha.apply(e)).collect();
        let l = Subgroup::new(x.group.clone(), l_elems)?;
        let pos = basis.locate(&l, vertex)?;
        out.coeffs[pos] += rat(*coeff);
    }
    Ok(out)
}

/// The map induced on U^G by a cellular self-map: each class goes to the
/// class of the component containing its carrier image. Returned as the
/// target basis position per source class.
pub fn ug_pushforward(basis: &UGBasis, f: &CellularGMap) -> Result<Vec<usize>> {
    let mut targets = Vec::with_capacity(basis.len());
    for class in &basis.classes {
        let t = component_image(basis, class.class_idx, class.comp, f)?;
        targets.push(basis.position(class.class_idx, t));
    }
    Ok(targets)
}

pub fn apply_pushforward(targets: &[usize], u: &UGElement, n: usize) -> UGElement {
    let mut out = UGElement::zero(n);
    for (src, t) in targets.iter().enumerate() {
        let v = u.coeffs[src].clone();
        out.coeffs[*t] += v;
    }
    out
}

/// The basis map induced by induction along α: G -> K, identifying each
/// class (H, C) of X with the class of (α(H), copy-0 image of C) in the
/// induced complex.
pub fn induced_basis_map(
    basis_g: &UGBasis,
    alpha: &GroupEmbedding,
    ind: &InducedComplex,
    basis_k: &UGBasis,
) -> Result<Vec<usize>> {
    let mut map = Vec::with_capacity(basis_g.len());
    for class in &basis_g.classes {
        let h = &basis_g.subgroup_classes[class.class_idx].representative;
        let h_elems: Vec<Elem> = h.elements().iter().map(|&e| alpha.apply(e)).collect();
        let h_k = Subgroup::new(alpha.target.clone(), h_elems)?;
        let c0 = basis_g.fixed[class.class_idx].components[class.comp][0];
        map.push(basis_k.locate(&h_k, ind.cell_in_copy(0, c0))?);
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcw::fixtures::*;

    fn z2() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(2))
    }

    #[test]
    fn trace_of_identity_on_coset_module() {
        // tr(id on R[G/H]) = 1/|H|
        let g = Arc::new(FiniteGroup::cyclic(6));
        for sub in crate::fingroup::all_subgroups(&g) {
            let order = sub.order();
            let u = GroupRingEndomorphism::identity(g.clone(), vec![sub]);
            assert_eq!(u.trace(), rat(1) / rat(order as i64));
        }
    }

    #[test]
    fn trace_of_zero_is_zero() {
        let g = z2();
        let h = Subgroup::trivial(g.clone());
        let u = GroupRingEndomorphism::from_images(
            g.clone(),
            vec![h],
            vec![vec![Rat::zero(), Rat::zero()]],
        )
        .unwrap();
        assert!(u.trace().is_zero());
    }

    #[test]
    fn trace_of_right_multiplication() {
        // u = right multiplication by (1 + t) on R[Z/2]: image of basepoint
        // is 1 + t, so the trace is the identity coefficient 1
        let g = z2();
        let h = Subgroup::trivial(g.clone());
        let u = GroupRingEndomorphism::from_images(
            g.clone(),
            vec![h],
            vec![vec![rat(1), rat(1)]],
        )
        .unwrap();
        assert_eq!(u.trace(), rat(1));
        // oracle: ordinary trace / |G|
        assert_eq!(u.trace(), u.ordinary_trace() / rat(2));
    }

    #[test]
    fn orbifold_lefschetz_of_identity_on_circle_is_zero() {
        let x = reflection_circle();
        let id = CellularGMap::identity(x.clone());
        assert!(orbifold_lefschetz(&id).is_zero());
        // oracle: chi(S^1)/|G| via the non-equivariant route
        assert_eq!(
            orbifold_lefschetz(&id),
            rat(id.nonequivariant_lefschetz()) / rat(2)
        );
    }

    #[test]
    fn orbifold_lefschetz_of_identity_on_point() {
        let x = point(Arc::new(FiniteGroup::trivial()));
        let id = CellularGMap::identity(x);
        assert_eq!(orbifold_lefschetz(&id), rat(1));
    }

    #[test]
    fn orbifold_lefschetz_of_degree_two_map() {
        let x = reflection_circle();
        let f = degree_two_map(x);
        let l = orbifold_lefschetz(&f);
        assert_eq!(l, crate::linalg::rat_frac(-1, 2));
        // |G|·L^{QG}(f) equals the non-equivariant Lefschetz number
        assert_eq!(l.clone() * rat(2), rat(f.nonequivariant_lefschetz()));
        // incidence route equals the chain-trace route
        assert_eq!(l, orbifold_lefschetz_via_traces(&f));
    }

    #[test]
    fn enumerate_classes_on_fixtures() {
        let triv = point(Arc::new(FiniteGroup::trivial()));
        assert_eq!(enumerate_classes(&triv).unwrap().len(), 1);

        let circle = reflection_circle();
        let basis = enumerate_classes(&circle).unwrap();
        assert_eq!(basis.len(), 3);
        // order: the two Z/2-classes (components {0} and {1}), then the free
        // class for the whole circle
        assert_eq!(basis.classes[0].class_idx, 0);
        assert_eq!(basis.classes[1].class_idx, 0);
        assert_eq!(basis.classes[2].class_idx, 1);

        let free = free_two_points();
        let basis = enumerate_classes(&free).unwrap();
        // two components of X^{1} in a single Weyl orbit
        assert_eq!(basis.len(), 1);
    }

    #[test]
    fn lefschetz_class_of_degree_two_map() {
        let x = reflection_circle();
        let basis = enumerate_classes(&x).unwrap();
        let f = degree_two_map(x.clone());
        let lambda = equivariant_lefschetz_class(&basis, &f).unwrap();
        // [x1] - [y]: vertex-1 class survives, vertex-0 class is not
        // preserved, the free class contributes -1
        assert_eq!(lambda.coeffs, vec![rat(0), rat(1), rat(-1)]);
    }

    #[test]
    fn lefschetz_class_of_identity_is_euler_class() {
        for x in [
            reflection_circle(),
            free_two_points(),
            rotation_sphere(),
            point(z2()),
        ] {
            let basis = enumerate_classes(&x).unwrap();
            let id = CellularGMap::identity(x);
            let lambda = equivariant_lefschetz_class(&basis, &id).unwrap();
            let chi = universal_euler(&basis);
            assert_eq!(lambda, chi);
        }
    }

    #[test]
    fn universal_euler_of_reflection_circle() {
        let x = reflection_circle();
        let basis = enumerate_classes(&x).unwrap();
        let chi = universal_euler(&basis);
        assert_eq!(chi.coeffs, vec![rat(1), rat(1), rat(-1)]);
        assert!(orbifold_euler(&x).is_zero());
    }

    #[test]
    fn universal_euler_of_point() {
        let x = point(Arc::new(FiniteGroup::trivial()));
        let basis = enumerate_classes(&x).unwrap();
        assert_eq!(universal_euler(&basis).coeffs, vec![rat(1)]);
        assert_eq!(orbifold_euler(&x), rat(1));
    }

    #[test]
    fn mor_sets_of_reflection_circle() {
        let x = reflection_circle();
        let basis = enumerate_classes(&x).unwrap();
        // mor(x, x) always contains the identity coset
        for c in 0..basis.len() {
            let m = mor_set(&basis, c, c).unwrap();
            assert!(!m.reps.is_empty());
            assert!(m.reps.contains(&0));
        }
        // mor([y], [x0]): one coset, full Weyl isotropy
        let m = mor_set(&basis, 2, 0).unwrap();
        assert_eq!(m.reps.len(), 1);
        assert_eq!(m.action.orbits()[0].isotropy_order, 2);
        // mor([x0], [x1]) is empty: component mismatch
        let m = mor_set(&basis, 0, 1).unwrap();
        assert!(m.reps.is_empty());
    }

    #[test]
    fn character_matrix_of_reflection_circle() {
        let x = reflection_circle();
        let basis = enumerate_classes(&x).unwrap();
        let ch = character_map(&basis).unwrap();
        let half = crate::linalg::rat_frac(1, 2);
        let expected = QMat::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![half.clone(), half, rat(1)],
        ]);
        assert_eq!(ch, expected);
    }

    #[test]
    fn character_matrix_of_single_class() {
        let x = point(Arc::new(FiniteGroup::trivial()));
        let basis = enumerate_classes(&x).unwrap();
        let ch = character_map(&basis).unwrap();
        assert_eq!(ch, QMat::identity(1));
    }

    #[test]
    fn character_of_point_matches_burnside_marks() {
        // for X = {*} and finite G: ch0 at (H) equals |W H| times the
        // character-map entry
        for g in [
            z2(),
            Arc::new(FiniteGroup::cyclic(4)),
            Arc::new(FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()),
        ] {
            let x = point(g.clone());
            let basis = enumerate_classes(&x).unwrap();
            let ch = character_map(&basis).unwrap();
            let marks = crate::burnside::table_of_marks(&g).unwrap();
            assert_eq!(basis.len(), marks.size());
            for y in 0..basis.len() {
                let w = crate::fingroup::weyl_group(
                    &g,
                    &marks.classes[y].representative,
                )
                .unwrap();
                for xc in 0..basis.len() {
                    assert_eq!(
                        rat(marks.entries[y][xc]),
                        ch[(y, xc)].clone() * rat(w.order() as i64)
                    );
                }
            }
        }
    }

    #[test]
    fn ug_induction_on_reflection_circle() {
        let x = reflection_circle();
        let basis = enumerate_classes(&x).unwrap();
        let stab = x.cell_stabilizer(1);
        let (stab_abs, emb) = crate::fingroup::subgroup_embedding(&stab);
        let stab_abs = Arc::new(stab_abs);
        let alpha = GroupEmbedding::new(stab_abs.clone(), x.group.clone(), emb.map.clone()).unwrap();
        let n = subgroup_classes(&stab_abs).len();
        // [G_x/G_x] at vertex 1 lands on the vertex-1 class
        let a = BurnsideElement::one(stab_abs.clone(), n);
        let u = ug_induction(&basis, &alpha, &a, 1).unwrap();
        assert_eq!(u.coeffs, vec![rat(0), rat(1), rat(0)]);
        // [G_x/1] at vertex 1 lands on the free class
        let free_idx = subgroup_classes(&stab_abs)
            .iter()
            .position(|c| c.representative.order() == 1)
            .unwrap();
        let a = BurnsideElement::basis(stab_abs.clone(), n, free_idx);
        let u = ug_induction(&basis, &alpha, &a, 1).unwrap();
        assert_eq!(u.coeffs, vec![rat(0), rat(0), rat(1)]);
        // zero maps to zero
        let a = BurnsideElement::zero(stab_abs.clone(), n);
        assert!(ug_induction(&basis, &alpha, &a, 1).unwrap().is_zero());
    }

    #[test]
    fn ug_induction_rejects_wrong_vertex() {
        let x = reflection_circle();
        let basis = enumerate_classes(&x).unwrap();
        let triv = Arc::new(FiniteGroup::trivial());
        let alpha = GroupEmbedding::new(triv.clone(), x.group.clone(), vec![0]).unwrap();
        let a = BurnsideElement::one(triv, 1);
        // vertex 1 has stabilizer Z/2, not the trivial group
        assert!(matches!(
            ug_induction(&basis, &alpha, &a, 1),
            Err(Error::VertexStabilizerMismatch { .. })
        ));
    }

    #[test]
    fn pushforward_on_fixtures() {
        let x = reflection_circle();
        let basis = enumerate_classes(&x).unwrap();
        let id = CellularGMap::identity(x.clone());
        assert_eq!(ug_pushforward(&basis, &id).unwrap(), vec![0, 1, 2]);
        let f = degree_two_map(x);
        // [x0] -> [x1], [x1] -> [x1], [y] -> [y]
        assert_eq!(ug_pushforward(&basis, &f).unwrap(), vec![1, 1, 2]);
    }

    #[test]
    fn lefschetz_class_of_empty_complex_is_zero() {
        let group = z2();
        let x = Arc::new(GCWComplex::new(group.clone(), vec![], vec![vec![], vec![]]).unwrap());
        let basis = enumerate_classes(&x).unwrap();
        assert!(basis.is_empty());
        let id = CellularGMap::identity(x);
        assert!(equivariant_lefschetz_class(&basis, &id)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn trace_properties_on_z2() {
        let g = z2();
        let h = Subgroup::trivial(g.clone());
        let u = GroupRingEndomorphism::from_images(
            g.clone(),
            vec![h.clone()],
            vec![vec![rat(2), rat(3)]],
        )
        .unwrap();
        let v = GroupRingEndomorphism::from_images(
            g.clone(),
            vec![h.clone()],
            vec![vec![rat(-1), rat(5)]],
        )
        .unwrap();
        // tr(uv) = tr(vu)
        assert_eq!(u.compose(&v).trace(), v.compose(&u).trace());
        // linearity
        let lin = GroupRingEndomorphism::linear_combination(&rat(3), &u, &rat(-2), &v);
        assert_eq!(lin.trace(), rat(3) * u.trace() - rat(2) * v.trace());
        // block additivity
        let sum = GroupRingEndomorphism::direct_sum(&u, &v);
        assert_eq!(sum.trace(), u.trace() + v.trace());
        // restriction to the trivial subgroup multiplies by the index
        assert_eq!(u.restricted_trace(&Subgroup::trivial(g.clone())), rat(2) * u.trace());
        // induction into Z/4 preserves the trace
        let z4 = Arc::new(FiniteGroup::cyclic(4));
        let alpha = GroupEmbedding::new(g.clone(), z4, vec![0, 2]).unwrap();
        assert_eq!(u.induce(&alpha).unwrap().trace(), u.trace());
    }
}
