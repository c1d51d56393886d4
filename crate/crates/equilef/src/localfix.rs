//! Local fixed-point data: fixed subspaces of rational representations,
//! determinant signs on them, equivariant degrees in the Burnside ring, the
//! local equivariant Lefschetz class, and the equivariant vector-field index.
//!
//! Differentials are input matrices; nothing here integrates a flow or
//! differentiates a map. Fixed points are anchored at vertices of the
//! complex whose stabilizer matches the datum exactly.

use std::sync::Arc;

use num_traits::Zero;

use crate::burnside::{from_marks, table_of_marks, BurnsideElement, MarkMatrix};
use crate::error::{Error, Result};
use crate::fingroup::{FiniteGroup, GroupEmbedding, Subgroup};
use crate::gcw::{CellId, GCWComplex};
use crate::lefschetz::{ug_induction, UGBasis, UGElement};
use crate::linalg::{det_sign, rat, QMat, Rat};

/// A representation of a finite group by invertible rational matrices.
/// Orthogonality itself is not required; invertibility is all the sign
/// computations need.
#[derive(Debug, Clone)]
pub struct OrthogonalRepresentation {
    pub group: Arc<FiniteGroup>,
    pub dim: usize,
    pub matrices: Vec<QMat>,
}

impl OrthogonalRepresentation {
    pub fn new(group: Arc<FiniteGroup>, dim: usize, matrices: Vec<QMat>) -> Result<Self> {
        let rep = OrthogonalRepresentation {
            group,
            dim,
            matrices,
        };
        rep.check()?;
        Ok(rep)
    }

    fn check(&self) -> Result<()> {
        if self.matrices.len() != self.group.order() {
            return Err(Error::validation("one matrix per group element required"));
        }
        for m in &self.matrices {
            if m.rows != self.dim || m.cols != self.dim {
                return Err(Error::validation("representation matrix has wrong shape"));
            }
        }
        if self.matrices[0] != QMat::identity(self.dim) {
            return Err(Error::validation("identity element must act as the identity"));
        }
        for g in self.group.elements() {
            if det_sign(&self.matrices[g as usize])? == 0 {
                return Err(Error::validation(format!("matrix of element {g} is singular")));
            }
            for h in self.group.elements() {
                let gh = self.group.mul(g, h);
                let prod = self.matrices[g as usize].mul(&self.matrices[h as usize]);
                if prod != self.matrices[gh as usize] {
                    return Err(Error::validation(format!(
                        "representation is not a homomorphism at ({g},{h})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn trivial(group: Arc<FiniteGroup>, dim: usize) -> Self {
        OrthogonalRepresentation {
            matrices: vec![QMat::identity(dim); group.order()],
            group,
            dim,
        }
    }
}

/// Basis (as matrix columns) of the subspace fixed by `h`: the image of the
/// averaging projector |H|^{-1} Σ ρ(h).
pub fn fixed_subspace(rep: &OrthogonalRepresentation, h: &Subgroup) -> QMat {
    let mut p = QMat::zeros(rep.dim, rep.dim);
    for &e in h.elements() {
        p = p.add(&rep.matrices[e as usize]);
    }
    let scale = rat(1) / rat(h.order() as i64);
    p.scale(&scale).column_space()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetSign {
    Plus,
    Minus,
    Degenerate,
}

/// Sign of the determinant of `b` restricted to the span of `basis`. The
/// restriction matrix is solved exactly column by column; a zero-dimensional
/// subspace has sign +1 by the compactified-degree convention.
pub fn sign_det_on_fixed(b: &QMat, basis: &QMat) -> Result<DetSign> {
    if basis.cols == 0 {
        return Ok(DetSign::Plus);
    }
    let mut restricted = QMat::zeros(basis.cols, basis.cols);
    for j in 0..basis.cols {
        let image = b.mul_vec(&basis.col(j));
        let coeffs = basis
            .solve(&image)
            .ok_or_else(|| Error::validation("matrix does not preserve the fixed subspace"))?;
        for i in 0..basis.cols {
            restricted[(i, j)] = coeffs[i].clone();
        }
    }
    Ok(match det_sign(&restricted)? {
        0 => DetSign::Degenerate,
        s if s > 0 => DetSign::Plus,
        _ => DetSign::Minus,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMode {
    /// degrees of (id - A)^c on fixed subspaces, for a fixed point of a map
    Map,
    /// degrees of A^c on fixed subspaces, for a zero of a vector field
    Field,
}

/// A fixed point of a map (or zero of a vector field) anchored at a vertex:
/// the stabilizer, its tangent representation and the differential there.
#[derive(Debug, Clone)]
pub struct FixedPointDatum {
    pub vertex: CellId,
    pub stabilizer: Subgroup,
    pub rep: OrthogonalRepresentation,
    pub differential: QMat,
}

impl FixedPointDatum {
    /// Checks the datum against a complex: the vertex stabilizer must equal
    /// the claimed subgroup, the representation must live on the abstract
    /// stabilizer group, and the differential must commute with it.
    pub fn check(&self, x: &GCWComplex) -> Result<()> {
        let actual = x.stabilizer_elements(self.vertex);
        if actual != self.stabilizer.elements() {
            return Err(Error::VertexStabilizerMismatch {
                vertex: self.vertex,
                actual: actual.len(),
                claimed: self.stabilizer.order(),
            });
        }
        let (abs, _) = self.stabilizer.as_group();
        if abs.mul_table() != self.rep.group.mul_table() {
            return Err(Error::validation(
                "representation group differs from the abstract stabilizer group",
            ));
        }
        self.rep.check()?;
        if self.differential.rows != self.rep.dim || self.differential.cols != self.rep.dim {
            return Err(Error::validation("differential has wrong shape"));
        }
        for g in self.rep.group.elements() {
            let rg = &self.rep.matrices[g as usize];
            if rg.mul(&self.differential) != self.differential.mul(rg) {
                return Err(Error::validation(format!(
                    "differential does not commute with the action of element {g}"
                )));
            }
        }
        Ok(())
    }

    /// The operator whose fixed-subspace determinant signs are the marks of
    /// the equivariant degree.
    pub fn operator(&self, mode: DegreeMode) -> QMat {
        match mode {
            DegreeMode::Map => QMat::identity(self.rep.dim).sub(&self.differential),
            DegreeMode::Field => self.differential.clone(),
        }
    }

    /// Embedding of the abstract stabilizer group into the ambient group.
    pub fn embedding(&self) -> Result<GroupEmbedding> {
        let (abs, elems) = self.stabilizer.as_group();
        GroupEmbedding::new(Arc::new(abs), self.stabilizer.parent().clone(), elems)
    }
}

/// The equivariant degree: the unique Burnside element over the stabilizer
/// whose marks are the determinant signs of the operator on the fixed
/// subspaces, one per conjugacy class of subgroups. Integrality of the mark
/// inversion is guaranteed for genuinely equivariant data, so its failure
/// signals inconsistent input.
pub fn equivariant_degree(datum: &FixedPointDatum, mode: DegreeMode) -> Result<BurnsideElement> {
    let marks = table_of_marks(&datum.rep.group)?;
    equivariant_degree_with(datum, mode, &marks)
}

fn equivariant_degree_with(
    datum: &FixedPointDatum,
    mode: DegreeMode,
    marks: &MarkMatrix,
) -> Result<BurnsideElement> {
    let op = datum.operator(mode);
    let mut signs = Vec::with_capacity(marks.size());
    for (i, class) in marks.classes.iter().enumerate() {
        let basis = fixed_subspace(&datum.rep, &class.representative);
        match sign_det_on_fixed(&op, &basis)? {
            DetSign::Plus => signs.push(1),
            DetSign::Minus => signs.push(-1),
            DetSign::Degenerate => return Err(Error::Degenerate { class: i }),
        }
    }
    from_marks(marks, &signs)
}

fn check_one_datum_per_orbit(x: &GCWComplex, data: &[FixedPointDatum]) -> Result<()> {
    for (i, a) in data.iter().enumerate() {
        for b in data.iter().skip(i + 1) {
            if x.group.elements().any(|g| x.apply(g, a.vertex) == b.vertex) {
                return Err(Error::validation(format!(
                    "vertices {} and {} lie in the same orbit; one datum per orbit",
                    a.vertex, b.vertex
                )));
            }
        }
    }
    Ok(())
}

/// The local equivariant Lefschetz class: the sum over fixed-point orbits of
/// the equivariant degree of (id - differential), pushed into U^G(X) at the
/// vertex.
pub fn local_lefschetz_class(basis: &UGBasis, data: &[FixedPointDatum]) -> Result<UGElement> {
    sum_of_local_degrees(basis, data, DegreeMode::Map)
}

/// The equivariant index of a vector field: the same sum with the degrees of
/// the differentials themselves.
pub fn vector_field_index(basis: &UGBasis, zeros: &[FixedPointDatum]) -> Result<UGElement> {
    sum_of_local_degrees(basis, zeros, DegreeMode::Field)
}

fn sum_of_local_degrees(
    basis: &UGBasis,
    data: &[FixedPointDatum],
    mode: DegreeMode,
) -> Result<UGElement> {
    let x = &basis.complex;
    check_one_datum_per_orbit(x, data)?;
    let mut out = UGElement::zero(basis.len());
    for datum in data {
        datum.check(x)?;
        let deg = equivariant_degree(datum, mode)?;
        let alpha = datum.embedding()?;
        let pushed = ug_induction(basis, &alpha, &deg, datum.vertex)?;
        out = out.add(&pushed);
    }
    Ok(out)
}

/// Independent right-hand side of the character compatibility for local
/// data: for the basis class y = (K, D), sums |(W K_y)_σ|^{-1} times the
/// determinant sign of the operator on the fixed subspace of the conjugated
/// subgroup, over Weyl orbits of morphisms into each datum's object.
pub fn character_of_local_data(
    basis: &UGBasis,
    data: &[FixedPointDatum],
    mode: DegreeMode,
    y: usize,
) -> Result<Rat> {
    let x = &basis.complex;
    let cy = &basis.classes[y];
    let k = &basis.subgroup_classes[cy.class_idx].representative;
    let fix_k = &basis.fixed[cy.class_idx];
    let mut total = Rat::zero();
    for datum in data {
        datum.check(x)?;
        let (_, emb_elems) = datum.stabilizer.as_group();
        let op = datum.operator(mode);
        let fc = crate::fingroup::fixed_cosets(&x.group, &datum.stabilizer, k)?;
        let mor: Vec<crate::fingroup::Elem> = fc
            .fixed
            .iter()
            .map(|&c| fc.space.reps[c])
            .filter(|&g| fix_k.comp_of.get(&x.apply(g, datum.vertex)) == Some(&cy.comp))
            .collect();
        let lifts: Vec<crate::fingroup::Elem> = (0..fix_k.weyl.order())
            .filter(|&w| fix_k.comp_action.apply(w as crate::fingroup::Elem, cy.comp) == cy.comp)
            .map(|w| fix_k.weyl.lift[w])
            .collect();
        let coset_of = |g: crate::fingroup::Elem| fc.space.coset_index(g);
        let mut seen: Vec<usize> = Vec::new();
        for &g in &mor {
            if seen.contains(&coset_of(g)) {
                continue;
            }
            let mut orbit: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
            for &n in &lifts {
                orbit.insert(coset_of(x.group.mul(n, g)));
            }
            seen.extend(orbit.iter());
            let iso = lifts.len() / orbit.len();
            // (K_σ) = g^{-1} K g, transported into abstract stabilizer indices
            let abs_elems: Vec<crate::fingroup::Elem> = k
                .elements()
                .iter()
                .map(|&e| {
                    let conj = x.group.mul(x.group.mul(x.group.inv(g), e), g);
                    emb_elems.iter().position(|&a| a == conj).unwrap() as crate::fingroup::Elem
                })
                .collect();
            let k_sigma = Subgroup::new(datum.rep.group.clone(), abs_elems)?;
            let sub_basis = fixed_subspace(&datum.rep, &k_sigma);
            let sign = match sign_det_on_fixed(&op, &sub_basis)? {
                DetSign::Plus => 1,
                DetSign::Minus => -1,
                DetSign::Degenerate => return Err(Error::Degenerate { class: 0 }),
            };
            total += rat(sign) / rat(iso as i64);
        }
    }
    Ok(total)
}
