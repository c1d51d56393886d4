//! Shared generators for the integration suites: the group corpus, random
//! complexes with 0- and 1-dimensional equivariant cells, and random
//! equivariant cellular self-maps. Everything is seeded, so runs are
//! deterministic.
#![allow(dead_code)] // each test binary uses its own slice of this module

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use equilef::fingroup::{subgroup_classes, CosetSpace, FiniteGroup, Subgroup};
use equilef::gcw::{Cell, CellId, CellularGMap, GCWComplex};

pub fn corpus() -> Vec<(&'static str, Arc<FiniteGroup>)> {
    vec![
        ("Z2", Arc::new(FiniteGroup::cyclic(2))),
        ("Z3", Arc::new(FiniteGroup::cyclic(3))),
        ("Z4", Arc::new(FiniteGroup::cyclic(4))),
        (
            "Z2xZ2",
            Arc::new(FiniteGroup::direct_product(
                &FiniteGroup::cyclic(2),
                &FiniteGroup::cyclic(2),
            )),
        ),
        (
            "S3",
            Arc::new(FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()),
        ),
    ]
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random complex over `group` built from vertex orbits (random orbit
/// types) and edge orbits attached to vertices fixed by the edge stabilizer.
pub fn random_complex(group: &Arc<FiniteGroup>, rng: &mut ChaCha8Rng) -> Arc<GCWComplex> {
    let classes = subgroup_classes(group);
    let mut cells: Vec<Cell> = Vec::new();
    let mut action: Vec<Vec<CellId>> = vec![Vec::new(); group.order()];
    let mut vertex_stab: Vec<usize> = Vec::new(); // class index per vertex

    let add_orbit = |cells: &mut Vec<Cell>,
                         action: &mut Vec<Vec<CellId>>,
                         h: &Subgroup,
                         dim: usize,
                         endpoints: Option<(CellId, CellId)>| {
        let space = CosetSpace::new(group, h);
        let base = cells.len();
        for c in 0..space.len() {
            let g = space.reps[c];
            let (faces, boundary) = match endpoints {
                None => (BTreeSet::new(), vec![]),
                Some((v1, v2)) => {
                    let a = action[g as usize][v1];
                    let b = action[g as usize][v2];
                    let faces: BTreeSet<CellId> = [a, b].into_iter().collect();
                    let boundary = if a == b { vec![] } else { vec![(b, 1), (a, -1)] };
                    (faces, boundary)
                }
            };
            cells.push(Cell {
                id: base + c,
                dim,
                faces,
                boundary,
            });
        }
        for g in group.elements() {
            for c in 0..space.len() {
                let moved = space.coset_index(group.mul(g, space.reps[c]));
                action[g as usize].push(base + moved);
            }
        }
        base
    };

    let n_vertex_orbits = rng.gen_range(1..=3);
    for _ in 0..n_vertex_orbits {
        let ci = rng.gen_range(0..classes.len());
        let h = classes[ci].representative.clone();
        let base = add_orbit(&mut cells, &mut action, &h, 0, None);
        for _ in base..cells.len() {
            vertex_stab.push(ci);
        }
    }
    let n_edge_orbits = rng.gen_range(0..=3);
    for _ in 0..n_edge_orbits {
        let ci = rng.gen_range(0..classes.len());
        let h = &classes[ci].representative;
        // endpoints must be fixed by the edge stabilizer
        let candidates: Vec<CellId> = (0..vertex_stab.len())
            .filter(|&v| h.elements().iter().all(|&g| action[g as usize][v] == v))
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let v1 = *candidates.choose(rng).unwrap();
        let v2 = *candidates.choose(rng).unwrap();
        add_orbit(&mut cells, &mut action, h, 1, Some((v1, v2)));
    }
    Arc::new(
        GCWComplex::new(group.clone(), cells, action)
            .expect("generated complexes satisfy the invariants by construction"),
    )
}

/// A pool of complexes per corpus group: hand-built fixtures where they
/// apply plus seeded random ones.
pub fn complex_pool(
    name: &str,
    group: &Arc<FiniteGroup>,
    rng: &mut ChaCha8Rng,
    random_count: usize,
) -> Vec<Arc<GCWComplex>> {
    let mut pool = Vec::new();
    if name == "Z2" {
        pool.push(equilef::gcw::fixtures::reflection_circle());
        pool.push(equilef::gcw::fixtures::rotation_sphere());
        pool.push(equilef::gcw::fixtures::free_two_points());
    }
    pool.push(equilef::gcw::fixtures::point(group.clone()));
    for _ in 0..random_count {
        pool.push(random_complex(group, rng));
    }
    pool
}

fn is_central(group: &FiniteGroup, z: u32) -> bool {
    group.elements().all(|g| group.mul(g, z) == group.mul(z, g))
}

/// Random equivariant cellular self-maps of a complex: the identity, a
/// translation by a central element, a constant map to a globally fixed
/// vertex when one exists, and orbit-wise random carrier maps.
pub fn map_pool(x: &Arc<GCWComplex>, rng: &mut ChaCha8Rng, random_count: usize) -> Vec<CellularGMap> {
    let mut maps = vec![CellularGMap::identity(x.clone())];
    if x.is_empty() {
        return maps;
    }
    let group = &x.group;
    // translations by central elements
    for z in group.elements().filter(|&z| z != 0 && is_central(group, z)) {
        let carrier: Vec<CellId> = (0..x.len()).map(|e| x.apply(z, e)).collect();
        let chain = (0..x.len()).map(|e| vec![(x.apply(z, e), 1)]).collect();
        maps.push(CellularGMap::new(x.clone(), carrier, chain).expect("translation is cellular"));
    }
    // constant maps to globally fixed vertices
    for v in 0..x.len() {
        if x.cells[v].dim != 0 || x.stabilizer_elements(v).len() != group.order() {
            continue;
        }
        let carrier = vec![v; x.len()];
        let chain: Vec<Vec<(CellId, i64)>> = (0..x.len())
            .map(|e| if x.cells[e].dim == 0 { vec![(v, 1)] } else { vec![] })
            .collect();
        maps.push(CellularGMap::new(x.clone(), carrier, chain).expect("constant map is cellular"));
        break;
    }
    for _ in 0..random_count {
        if let Some(f) = random_map(x, rng) {
            maps.push(f);
        }
    }
    maps
}

/// Attempts one random orbit-wise carrier map; gives up (returns None) when
/// an edge orbit has no compatible target. Only handles complexes of
/// dimension at most one; higher-dimensional fixtures get the identity,
/// translation and constant maps from `map_pool`.
fn random_map(x: &Arc<GCWComplex>, rng: &mut ChaCha8Rng) -> Option<CellularGMap> {
    if x.max_dim() > 1 {
        return None;
    }
    let group = &x.group;
    let n = x.len();
    let orbits = x.cell_gset().orbits();
    let mut carrier = vec![usize::MAX; n];
    let mut chain: Vec<Vec<(CellId, i64)>> = vec![Vec::new(); n];
    // vertices first
    for orbit in orbits.iter().filter(|o| x.cells[o.representative].dim == 0) {
        let v = orbit.representative;
        let stab = x.stabilizer_elements(v);
        let candidates: Vec<CellId> = (0..n)
            .filter(|&w| {
                x.cells[w].dim == 0 && stab.iter().all(|&g| x.apply(g, w) == w)
            })
            .collect();
        let w = *candidates.choose(rng)?;
        for g in group.elements() {
            carrier[x.apply(g, v)] = x.apply(g, w);
            chain[x.apply(g, v)] = vec![(x.apply(g, w), 1)];
        }
    }
    // then edges, constrained by the vertex carriers
    for orbit in orbits.iter().filter(|o| x.cells[o.representative].dim == 1) {
        let e = orbit.representative;
        let stab = x.stabilizer_elements(e);
        let faces: Vec<CellId> = x.cells[e].faces.iter().cloned().collect();
        let (v1, v2) = boundary_endpoints(x, e);
        let (c1, c2) = (carrier[v1], carrier[v2]);
        // a collapse to a vertex is possible when both endpoints agree
        let mut options: Vec<(CellId, i64)> = Vec::new();
        if c1 == c2 && faces.iter().all(|&f| carrier[f] == c1) {
            options.push((c1, 0));
        }
        for d in 0..n {
            if x.cells[d].dim != 1 || !stab.iter().all(|&g| x.apply(g, d) == d) {
                continue;
            }
            let (w1, w2) = boundary_endpoints(x, d);
            let closure_ok = faces
                .iter()
                .all(|&f| carrier[f] == d || x.cells[d].faces.contains(&carrier[f]));
            if !closure_ok {
                continue;
            }
            let coeff = if c1 == w1 && c2 == w2 {
                1
            } else if c1 == w2 && c2 == w1 {
                -1
            } else if c1 == c2 {
                0
            } else {
                continue;
            };
            options.push((d, coeff));
        }
        let &(target, coeff) = options.choose(rng)?;
        for g in group.elements() {
            let ge = x.apply(g, e);
            carrier[ge] = x.apply(g, target);
            chain[ge] = if coeff == 0 {
                vec![]
            } else {
                vec![(x.apply(g, target), coeff)]
            };
        }
    }
    CellularGMap::new(x.clone(), carrier, chain).ok()
}

/// Endpoints of a 1-cell read from its boundary, falling back to the face
/// set for loop edges.
fn boundary_endpoints(x: &GCWComplex, e: CellId) -> (CellId, CellId) {
    let mut neg = None;
    let mut pos = None;
    for &(b, c) in &x.cells[e].boundary {
        if c > 0 {
            pos = Some(b);
        } else {
            neg = Some(b);
        }
    }
    match (neg, pos) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            let f = *x.cells[e].faces.iter().next().expect("edge with no faces");
            (f, f)
        }
    }
}
