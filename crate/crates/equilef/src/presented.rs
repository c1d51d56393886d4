//! Backend for groups given only through a finite presentation of their
//! component category: the user supplies the class list, morphism-orbit
//! data, equivariant cell counts and localization maps, and the module
//! computes the character matrix, Euler characteristics and the
//! vector-field index in class coordinates.
//!
//! All infinite-group content enters as finite certified data; nothing here
//! does group theory on infinite groups.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::burnside::{from_marks, table_of_marks};
use crate::error::{Error, Result};
use crate::fingroup::FiniteGroup;
use crate::lefschetz::{mor_set, UGBasis};
use crate::linalg::{rat, QMat, Rat};

/// One zero of an equivariant vector field, presented as its finite
/// stabilizer, the determinant signs of the differential on the fixed
/// subspaces (one per conjugacy class of subgroups of the stabilizer, in the
/// `subgroup_classes` order), and where each Burnside basis element of the
/// stabilizer localizes in class coordinates.
#[derive(Debug, Clone)]
pub struct ZeroDatum {
    pub stabilizer: Arc<FiniteGroup>,
    pub signs: Vec<i64>,
    pub localization: Vec<String>,
}

/// A finitely presented component category: classes in a declared
/// subconjugacy-compatible order, morphism orbits with their isotropy
/// orders, equivariant cell counts per dimension, and optional zero data.
#[derive(Debug, Clone, Default)]
pub struct ComponentPresentation {
    pub labels: Vec<String>,
    /// (from-class y, to-class x) -> one record per Weyl orbit of mor(y, x),
    /// each carrying the isotropy order of the orbit
    pub mor: HashMap<(usize, usize), Vec<u64>>,
    /// per class, the count of equivariant cells per dimension
    pub cell_counts: Vec<Vec<i64>>,
    pub zeros: Vec<ZeroDatum>,
}

impl ComponentPresentation {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn class_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::validation(format!("unknown class label {label}")))
    }

    /// Checks the declared data: unique labels, positive isotropy orders,
    /// diagonal character entries exactly 1, triangularity in the declared
    /// order, and well-formed zero data.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        for (i, l) in self.labels.iter().enumerate() {
            if self.labels[..i].contains(l) {
                return Err(Error::validation(format!("duplicate class label {l}")));
            }
        }
        for (&(y, x), orbits) in &self.mor {
            if y >= n || x >= n {
                return Err(Error::validation("morphism record out of range"));
            }
            if orbits.iter().any(|&iso| iso == 0) {
                return Err(Error::validation("isotropy orders must be positive"));
            }
        }
        let ch = self.character_map();
        for y in 0..n {
            if ch[(y, y)] != Rat::one() {
                return Err(Error::validation(format!(
                    "diagonal character entry of class {} is {} instead of 1",
                    self.labels[y],
                    ch[(y, y)]
                )));
            }
            for x in y + 1..n {
                if !ch[(y, x)].is_zero() {
                    return Err(Error::validation(format!(
                        "character entry ({}, {}) breaks triangularity; class order is not \
                         subconjugacy-compatible",
                        self.labels[y], self.labels[x]
                    )));
                }
            }
        }
        if !self.cell_counts.is_empty() && self.cell_counts.len() != n {
            return Err(Error::validation("cell counts must cover every class"));
        }
        for z in &self.zeros {
            let classes = crate::fingroup::subgroup_classes(&z.stabilizer);
            if z.signs.len() != classes.len() || z.localization.len() != classes.len() {
                return Err(Error::validation(
                    "zero datum does not match the stabilizer's class count",
                ));
            }
            if z.signs.iter().any(|&s| s != 1 && s != -1) {
                return Err(Error::validation("zero datum signs must be ±1"));
            }
            for l in &z.localization {
                self.class_index(l)?;
            }
        }
        Ok(())
    }

    /// The character matrix: entry (row y, col x) sums the inverse isotropy
    /// orders over the declared orbits of mor(y, x).
    pub fn character_map(&self) -> QMat {
        let n = self.len();
        QMat::from_fn(n, n, |y, x| {
            self.mor
                .get(&(y, x))
                .map(|orbits| {
                    orbits
                        .iter()
                        .fold(Rat::zero(), |acc, &iso| acc + rat(1) / rat(iso as i64))
                })
                .unwrap_or_else(Rat::zero)
        })
    }

    /// The universal equivariant Euler characteristic in class coordinates:
    /// alternating sums of the equivariant cell counts.
    pub fn euler(&self) -> Vec<Rat> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, _)| {
                self.cell_counts
                    .get(i)
                    .map(|counts| {
                        counts.iter().enumerate().fold(Rat::zero(), |acc, (p, &c)| {
                            if p % 2 == 0 {
                                acc + rat(c)
                            } else {
                                acc - rat(c)
                            }
                        })
                    })
                    .unwrap_or_else(Rat::zero)
            })
            .collect()
    }

    /// Orbifold Euler characteristics of all classes: the character matrix
    /// applied to the Euler vector.
    pub fn orbifold_euler(&self) -> Vec<Rat> {
        self.character_map().mul_vec(&self.euler())
    }

    pub fn orbifold_euler_of(&self, label: &str) -> Result<Rat> {
        Ok(self.orbifold_euler()[self.class_index(label)?].clone())
    }

    /// The equivariant vector-field index in class coordinates: each zero's
    /// sign vector is inverted through the table of marks of its stabilizer
    /// and the resulting Burnside coefficients are pushed along the declared
    /// localization map.
    pub fn index(&self) -> Result<Vec<Rat>> {
        let mut out = vec![Rat::zero(); self.len()];
        for z in &self.zeros {
            let marks = table_of_marks(&z.stabilizer)?;
            let deg = from_marks(&marks, &z.signs)?;
            for (l, coeff) in deg.coeffs.iter().enumerate() {
                if *coeff != 0 {
                    let target = self.class_index(&z.localization[l])?;
                    out[target] += rat(*coeff);
                }
            }
        }
        Ok(out)
    }

    /// Exports a finite-group complex into presentation form: same class
    /// labels, morphism orbits read off the component category, cell counts
    /// read off the orbit decomposition. Used to check the two backends
    /// against each other.
    pub fn from_complex(basis: &UGBasis) -> Result<ComponentPresentation> {
        let x = &basis.complex;
        let n = basis.len();
        let labels = basis.labels();
        let mut mor = HashMap::new();
        for y in 0..n {
            for xc in 0..n {
                let m = mor_set(basis, y, xc)?;
                let orbits: Vec<u64> = m
                    .action
                    .orbits()
                    .iter()
                    .map(|o| o.isotropy_order as u64)
                    .collect();
                if !orbits.is_empty() {
                    mor.insert((y, xc), orbits);
                }
            }
        }
        // equivariant cell counts per class and dimension, matching the
        // cell-counting Euler characteristic
        let orbits = x.cell_gset().orbits();
        let maxdim = x.max_dim();
        let mut cell_counts = vec![vec![0i64; maxdim + 1]; n];
        for (pos, class) in basis.classes.iter().enumerate() {
            let fix = &basis.fixed[class.class_idx];
            let h = &basis.subgroup_classes[class.class_idx].representative;
            for orbit in &orbits {
                let meets = orbit.elements.iter().any(|&e| {
                    fix.comp_of.get(&e) == Some(&class.comp)
                        && x.stabilizer_elements(e).len() == h.order()
                });
                if meets {
                    cell_counts[pos][x.cells[orbit.representative].dim] += 1;
                }
            }
        }
        let p = ComponentPresentation {
            labels,
            mor,
            cell_counts,
            zeros: vec![],
        };
        p.validate()?;
        Ok(p)
    }
}

/// The infinite dihedral group acting on the line, presented: two order-two
/// classes fixing the endpoint vertices of the fundamental interval and one
/// free class for the whole line. `deltas` lists the derivative signs at the
/// zeros of an equivariant vector field on the closed fundamental interval,
/// endpoints included, so it must alternate and have length at least 2.
pub fn dihedral_line_presentation(deltas: &[i64]) -> Result<ComponentPresentation> {
    if deltas.len() < 2 {
        return Err(Error::validation("need zeros at both endpoints"));
    }
    if deltas.iter().any(|&d| d != 1 && d != -1) {
        return Err(Error::validation("derivative signs must be ±1"));
    }
    if deltas.windows(2).any(|w| w[0] != -w[1]) {
        return Err(Error::validation("derivative signs must alternate"));
    }
    let z2 = Arc::new(FiniteGroup::cyclic(2));
    let trivial = Arc::new(FiniteGroup::trivial());
    let labels = vec!["x0".to_string(), "x1".to_string(), "y".to_string()];
    let mut mor = HashMap::new();
    // identity orbits: trivial Weyl groups at the x_i; at y the translations
    // act freely and transitively on the endomorphisms
    mor.insert((0, 0), vec![1]);
    mor.insert((1, 1), vec![1]);
    mor.insert((2, 2), vec![1]);
    // mor(y, x_i) is one orbit with isotropy of order two
    mor.insert((2, 0), vec![2]);
    mor.insert((2, 1), vec![2]);
    let cell_counts = vec![vec![1], vec![1], vec![0, 1]];
    let mut zeros = Vec::new();
    let last = deltas.len() - 1;
    for (i, &d) in deltas.iter().enumerate() {
        if i == 0 || i == last {
            let anchor = if i == 0 { "x0" } else { "x1" };
            zeros.push(ZeroDatum {
                stabilizer: z2.clone(),
                // sign on the zero-dimensional fixed subspace is +1 by the
                // compactification convention; on the full line it is the
                // derivative sign
                signs: vec![1, d],
                localization: vec![anchor.to_string(), "y".to_string()],
            });
        } else {
            zeros.push(ZeroDatum {
                stabilizer: trivial.clone(),
                signs: vec![d],
                localization: vec!["y".to_string()],
            });
        }
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_frac;

    fn alternating(len: usize, first: i64) -> Vec<i64> {
        (0..len)
            .map(|i| if i % 2 == 0 { first } else { -first })
            .collect()
    }

    #[test]
    fn dihedral_character_matrix() {
        let p = dihedral_line_presentation(&alternating(2, 1)).unwrap();
        let ch = p.character_map();
        let expected = QMat::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat_frac(1, 2), rat_frac(1, 2), rat(1)],
        ]);
        assert_eq!(ch, expected);
    }

    #[test]
    fn dihedral_euler_and_orbifold_values() {
        let p = dihedral_line_presentation(&alternating(2, 1)).unwrap();
        assert_eq!(p.euler(), vec![rat(1), rat(1), rat(-1)]);
        assert_eq!(p.orbifold_euler(), vec![rat(1), rat(1), rat(0)]);
        assert_eq!(p.orbifold_euler_of("y").unwrap(), rat(0));
    }

    #[test]
    fn dihedral_index_collapses_for_every_alternating_pattern() {
        let chi = vec![rat(1), rat(1), rat(-1)];
        for len in 2..=10 {
            for first in [1i64, -1] {
                let p = dihedral_line_presentation(&alternating(len, first)).unwrap();
                assert_eq!(
                    p.index().unwrap(),
                    chi,
                    "pattern length {len}, start {first}"
                );
            }
        }
    }

    #[test]
    fn no_zeros_gives_zero_index() {
        let mut p = dihedral_line_presentation(&alternating(2, 1)).unwrap();
        p.zeros.clear();
        assert!(p.index().unwrap().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn single_class_presentation() {
        let p = ComponentPresentation {
            labels: vec!["pt".into()],
            mor: [((0, 0), vec![1])].into_iter().collect(),
            cell_counts: vec![vec![1]],
            zeros: vec![],
        };
        p.validate().unwrap();
        assert_eq!(p.character_map(), QMat::identity(1));
        assert_eq!(p.euler(), vec![rat(1)]);
    }

    #[test]
    fn incomparable_classes_give_identity_matrix() {
        let p = ComponentPresentation {
            labels: vec!["a".into(), "b".into()],
            mor: [((0, 0), vec![1]), ((1, 1), vec![1])].into_iter().collect(),
            cell_counts: vec![vec![1], vec![1]],
            zeros: vec![],
        };
        p.validate().unwrap();
        assert_eq!(p.character_map(), QMat::identity(2));
    }

    #[test]
    fn empty_presentation() {
        let p = ComponentPresentation::default();
        p.validate().unwrap();
        assert!(p.euler().is_empty());
        assert!(p.index().unwrap().is_empty());
    }

    #[test]
    fn bad_diagonal_is_rejected() {
        let p = ComponentPresentation {
            labels: vec!["a".into()],
            mor: [((0, 0), vec![2])].into_iter().collect(),
            cell_counts: vec![],
            zeros: vec![],
        };
        assert!(p.validate().is_err());
    }

    #[test]
    fn non_triangular_order_is_rejected() {
        // declaring y before the x classes breaks triangularity
        let mut mor = HashMap::new();
        mor.insert((0, 0), vec![1u64]);
        mor.insert((1, 1), vec![1]);
        mor.insert((0, 1), vec![2]);
        let p = ComponentPresentation {
            labels: vec!["y".into(), "x0".into()],
            mor,
            cell_counts: vec![],
            zeros: vec![],
        };
        assert!(p.validate().is_err());
    }

    #[test]
    fn cross_backend_consistency_on_fixtures() {
        use crate::gcw::fixtures::*;
        for x in [reflection_circle(), free_two_points(), rotation_sphere()] {
            let basis = crate::lefschetz::enumerate_classes(&x).unwrap();
            let p = ComponentPresentation::from_complex(&basis).unwrap();
            let ch_direct = crate::lefschetz::character_map(&basis).unwrap();
            assert_eq!(p.character_map(), ch_direct);
            let chi_direct = crate::lefschetz::universal_euler(&basis);
            assert_eq!(p.euler(), chi_direct.coeffs);
            let orbifold = p.orbifold_euler();
            for (y, class) in basis.classes.iter().enumerate() {
                let direct = crate::lefschetz::component_orbifold_euler(
                    &basis,
                    class.class_idx,
                    class.comp,
                );
                assert_eq!(orbifold[y], direct);
            }
        }
    }
}
