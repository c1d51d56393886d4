//! The Burnside ring A(K) of a finite group: table of marks, the mark
//! (character) map, integral mark inversion and multiplication.
//!
//! Basis elements are the transitive K-sets [K/H], indexed by the
//! `subgroup_classes` ordering (maximal subgroups first). All arithmetic is
//! checked 64-bit integer arithmetic.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fingroup::{fixed_cosets, subgroup_classes, FiniteGroup, SubgroupClass};

/// Square table of marks. `entry[i][j] = |(K/H_j)^{H_i}|`, so column `j` is
/// the mark vector of the basis element [K/H_j] and the matrix is lower
/// triangular with diagonal |N H / H| in the class ordering.
#[derive(Debug, Clone)]
pub struct MarkMatrix {
    pub group: Arc<FiniteGroup>,
    pub classes: Vec<SubgroupClass>,
    pub entries: Vec<Vec<i64>>,
}

impl MarkMatrix {
    pub fn size(&self) -> usize {
        self.classes.len()
    }
}

pub fn table_of_marks(group: &Arc<FiniteGroup>) -> Result<MarkMatrix> {
    let classes = subgroup_classes(group);
    let n = classes.len();
    let mut entries = vec![vec![0i64; n]; n];
    for (j, cj) in classes.iter().enumerate() {
        for (i, ci) in classes.iter().enumerate() {
            let fc = fixed_cosets(group, &cj.representative, &ci.representative)?;
            entries[i][j] = fc.fixed.len() as i64;
        }
    }
    Ok(MarkMatrix {
        group: group.clone(),
        classes,
        entries,
    })
}

/// An integer combination of transitive K-set classes [K/H].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideElement {
    pub group: Arc<FiniteGroup>,
    pub coeffs: Vec<i64>,
}

impl BurnsideElement {
    pub fn zero(group: Arc<FiniteGroup>, n_classes: usize) -> Self {
        BurnsideElement {
            group,
            coeffs: vec![0; n_classes],
        }
    }

    /// The basis element [K/H] for the class at `class_idx`.
    pub fn basis(group: Arc<FiniteGroup>, n_classes: usize, class_idx: usize) -> Self {
        let mut e = Self::zero(group, n_classes);
        e.coeffs[class_idx] = 1;
        e
    }

    /// The multiplicative unit [K/K] (class 0 in the maximal-first ordering).
    pub fn one(group: Arc<FiniteGroup>, n_classes: usize) -> Self {
        Self::basis(group, n_classes, 0)
    }

    pub fn add(&self, other: &BurnsideElement) -> Result<BurnsideElement> {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(BurnsideElement {
            group: self.group.clone(),
            coeffs,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// The mark map: fixed-point counts of a virtual K-set at every subgroup
/// class. Linear over the marks of the basis elements, hence integral on
/// integral inputs.
pub fn ch0(marks: &MarkMatrix, a: &BurnsideElement) -> Result<Vec<i64>> {
    let n = marks.size();
    let mut out = vec![0i64; n];
    for i in 0..n {
        for j in 0..n {
            let term = marks.entries[i][j]
                .checked_mul(a.coeffs[j])
                .ok_or(Error::Overflow)?;
            out[i] = out[i].checked_add(term).ok_or(Error::Overflow)?;
        }
    }
    Ok(out)
}

/// Inverts the mark map by forward substitution through the triangular table
/// of marks. Fails with `NonIntegralMarks` at the first class whose
/// coefficient comes out fractional, which certifies that `v` is not the mark
/// vector of any integral Burnside element.
pub fn from_marks(marks: &MarkMatrix, v: &[i64]) -> Result<BurnsideElement> {
    let n = marks.size();
    if v.len() != n {
        return Err(Error::validation("mark vector has wrong length"));
    }
    let mut coeffs = vec![0i64; n];
    for i in 0..n {
        let mut acc: i64 = v[i];
        for j in 0..i {
            let term = marks.entries[i][j]
                .checked_mul(coeffs[j])
                .ok_or(Error::Overflow)?;
            acc = acc.checked_sub(term).ok_or(Error::Overflow)?;
        }
        let d = marks.entries[i][i];
        debug_assert!(d > 0);
        if acc % d != 0 {
            return Err(Error::NonIntegralMarks {
                class: i,
                value: format!("{acc}/{d}"),
            });
        }
        coeffs[i] = acc / d;
    }
    Ok(BurnsideElement {
        group: marks.group.clone(),
        coeffs,
    })
}

/// Ring multiplication via marks: marks multiply pointwise (Cartesian
/// product of K-sets), and the product of integral elements is integral, so
/// the inversion must succeed.
pub fn multiply(
    marks: &MarkMatrix,
    a: &BurnsideElement,
    b: &BurnsideElement,
) -> Result<BurnsideElement> {
    let ma = ch0(marks, a)?;
    let mb = ch0(marks, b)?;
    let prod: Vec<i64> = ma
        .iter()
        .zip(&mb)
        .map(|(x, y)| x.checked_mul(*y).ok_or(Error::Overflow))
        .collect::<Result<_>>()?;
    from_marks(marks, &prod).map_err(|e| match e {
        Error::NonIntegralMarks { class, value } => Error::Validation(format!(
            "burnside multiplication produced non-integral marks at class {class} ({value}); \
             inputs are inconsistent"
        )),
        other => other,
    })
}
