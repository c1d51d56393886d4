//! Finite groups given by full multiplication tables, with the subgroup,
//! conjugacy-class, normalizer and coset machinery the fixed-point invariants
//! are built on.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Upper bound on accepted group orders. The algorithms here are exhaustive
/// by design; past this size the inputs stop being desk-scale.
pub const MAX_ORDER: usize = 10_000;

pub type Elem = u32;

/// A finite group as a validated multiplication table. Element 0 is the
/// identity. Values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
}

impl FiniteGroup {
    pub fn from_mul_table(table: Vec<Vec<Elem>>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::validation("group must be nonempty"));
        }
        if order > MAX_ORDER {
            return Err(Error::validation(format!(
                "group order {order} exceeds the supported bound {MAX_ORDER}"
            )));
        }
        let mut mul = Vec::with_capacity(order * order);
        for row in &table {
            if row.len() != order {
                return Err(Error::validation("multiplication table is not square"));
            }
            for &v in row {
                if v as usize >= order {
                    return Err(Error::validation("table entry out of range"));
                }
                mul.push(v);
            }
        }
        let g = |a: usize, b: usize| mul[a * order + b] as usize;
        for a in 0..order {
            if g(0, a) != a || g(a, 0) != a {
                return Err(Error::validation("element 0 is not a two-sided identity"));
            }
        }
        let mut inv = vec![None; order];
        for a in 0..order {
            for b in 0..order {
                if g(a, b) == 0 && g(b, a) == 0 {
                    inv[a] = Some(b as Elem);
                }
            }
        }
        let inv: Vec<Elem> = inv
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::validation("some element has no two-sided inverse"))?;
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if g(g(a, b), c) != g(a, g(b, c)) {
                        return Err(Error::validation(format!(
                            "multiplication is not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { order, mul, inv })
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            mul: vec![0],
            inv: vec![0],
        }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1 && n <= MAX_ORDER);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push(((a + b) % n) as Elem);
            }
        }
        let inv = (0..n).map(|a| ((n - a) % n) as Elem).collect();
        FiniteGroup { order: n, mul, inv }
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let order = a.order * b.order;
        assert!(order <= MAX_ORDER);
        let idx = |x: usize, y: usize| x * b.order + y;
        let mut mul = vec![0; order * order];
        for x1 in 0..a.order {
            for y1 in 0..b.order {
                for x2 in 0..a.order {
                    for y2 in 0..b.order {
                        let p = idx(
                            a.mul(x1 as Elem, x2 as Elem) as usize,
                            b.mul(y1 as Elem, y2 as Elem) as usize,
                        );
                        mul[idx(x1, y1) * order + idx(x2, y2)] = p as Elem;
                    }
                }
            }
        }
        let inv = (0..order)
            .map(|e| {
                let (x, y) = (e / b.order, e % b.order);
                idx(a.inv(x as Elem) as usize, b.inv(y as Elem) as usize) as Elem
            })
            .collect();
        FiniteGroup { order, mul, inv }
    }

    /// Builds the permutation group generated by `generators` acting on
    /// `0..degree`, then forgets the action and keeps the table. Elements are
    /// enumerated breadth-first from the identity, so the numbering is
    /// deterministic in the generator order.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        for g in generators {
            let mut seen = vec![false; degree];
            if g.len() != degree {
                return Err(Error::validation("generator length does not match degree"));
            }
            for &v in g {
                if v >= degree || seen[v] {
                    return Err(Error::validation("generator is not a permutation"));
                }
                seen[v] = true;
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elems: Vec<Vec<usize>> = vec![id.clone()];
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        index.insert(id, 0);
        let mut queue = 0;
        while queue < elems.len() {
            let cur = elems[queue].clone();
            queue += 1;
            for g in generators {
                // (cur * g)(x) = cur[g[x]]
                let next: Vec<usize> = (0..degree).map(|x| cur[g[x]]).collect();
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elems.len());
                    elems.push(next);
                    if elems.len() > MAX_ORDER {
                        return Err(Error::validation("generated group exceeds the order bound"));
                    }
                }
            }
        }
        let order = elems.len();
        let mut mul = vec![0; order * order];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let prod: Vec<usize> = (0..degree).map(|x| a[b[x]]).collect();
                mul[i * order + j] = index[&prod] as Elem;
            }
        }
        let mut inv = vec![0; order];
        for (i, a) in elems.iter().enumerate() {
            let mut ainv = vec![0usize; degree];
            for (x, &ax) in a.iter().enumerate() {
                ainv[ax] = x;
            }
            inv[i] = index[&ainv] as Elem;
        }
        Ok(FiniteGroup { order, mul, inv })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        0..self.order as Elem
    }

    pub fn mul_table(&self) -> Vec<Vec<Elem>> {
        (0..self.order)
            .map(|a| self.mul[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }
}

/// A subgroup, stored as the sorted list of its elements in the parent group.
#[derive(Debug, Clone)]
pub struct Subgroup {
    group: Arc<FiniteGroup>,
    elements: Vec<Elem>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}
impl Eq for Subgroup {}

impl Subgroup {
    pub fn new(group: Arc<FiniteGroup>, mut elements: Vec<Elem>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let sub = Subgroup { group, elements };
        sub.check()?;
        Ok(sub)
    }

    fn check(&self) -> Result<()> {
        if self.elements.binary_search(&0).is_err() {
            return Err(Error::validation("subgroup does not contain the identity"));
        }
        for &a in &self.elements {
            if a as usize >= self.group.order() {
                return Err(Error::validation("subgroup element out of range"));
            }
            if !self.contains(self.group.inv(a)) {
                return Err(Error::validation("subgroup not closed under inverses"));
            }
            for &b in &self.elements {
                if !self.contains(self.group.mul(a, b)) {
                    return Err(Error::validation("subgroup not closed under multiplication"));
                }
            }
        }
        Ok(())
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        Subgroup {
            group,
            elements: vec![0],
        }
    }

    pub fn full(group: Arc<FiniteGroup>) -> Self {
        let elements = (0..group.order() as Elem).collect();
        Subgroup { group, elements }
    }

    /// Subgroup generated by a set of elements.
    pub fn generated(group: Arc<FiniteGroup>, gens: &[Elem]) -> Self {
        let elements = closure(&group, gens);
        Subgroup { group, elements }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }

    pub fn conjugate(&self, g: Elem) -> Subgroup {
        let mut elements: Vec<Elem> = self
            .elements
            .iter()
            .map(|&x| self.group.conj(g, x))
            .collect();
        elements.sort_unstable();
        Subgroup {
            group: self.group.clone(),
            elements,
        }
    }

    /// The subgroup as an abstract group, together with the embedding of its
    /// element indices back into the parent. Sorted order puts the identity
    /// at index 0.
    pub fn as_group(&self) -> (FiniteGroup, Vec<Elem>) {
        let n = self.elements.len();
        let pos: HashMap<Elem, usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();
        let mut mul = vec![0; n * n];
        for (i, &a) in self.elements.iter().enumerate() {
            for (j, &b) in self.elements.iter().enumerate() {
                mul[i * n + j] = pos[&self.group.mul(a, b)] as Elem;
            }
        }
        let inv = self
            .elements
            .iter()
            .map(|&a| pos[&self.group.inv(a)] as Elem)
            .collect();
        (
            FiniteGroup {
                order: n,
                mul,
                inv,
            },
            self.elements.clone(),
        )
    }
}

fn closure(group: &FiniteGroup, gens: &[Elem]) -> Vec<Elem> {
    let mut set: BTreeSet<Elem> = BTreeSet::new();
    set.insert(0);
    let mut frontier: Vec<Elem> = vec![0];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            for y in [group.mul(x, g), group.mul(g, x)] {
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
    }
    set.into_iter().collect()
}

/// A conjugacy class of subgroups: canonical representative plus all members.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    pub members: Vec<Subgroup>,
}

impl SubgroupClass {
    pub fn contains(&self, sub: &Subgroup) -> bool {
        self.members.iter().any(|m| m.elements == sub.elements)
    }
}

/// Every subgroup of `group`, by exhaustive closure: cyclic subgroups seed the
/// collection, then known subgroups are extended one generator at a time
/// until nothing new appears.
pub fn all_subgroups(group: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let mut found: BTreeSet<Vec<Elem>> = BTreeSet::new();
    found.insert(vec![0]);
    let mut worklist: Vec<Vec<Elem>> = vec![vec![0]];
    for g in 1..group.order() as Elem {
        let c = closure(group, &[g]);
        if found.insert(c.clone()) {
            worklist.push(c);
        }
    }
    while let Some(h) = worklist.pop() {
        for g in 1..group.order() as Elem {
            if h.binary_search(&g).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(g);
            let k = closure(group, &gens);
            if found.insert(k.clone()) {
                worklist.push(k);
            }
        }
    }
    found
        .into_iter()
        .map(|elements| Subgroup {
            group: group.clone(),
            elements,
        })
        .collect()
}

/// Conjugacy classes of subgroups, ordered so that a class subconjugate to
/// another never comes first: larger orders first, ties broken by the
/// lexicographically least representative. The representative of each class
/// is its lexicographically least member.
pub fn subgroup_classes(group: &Arc<FiniteGroup>) -> Vec<SubgroupClass> {
    let subs = all_subgroups(group);
    let mut remaining: BTreeSet<Vec<Elem>> = subs.iter().map(|s| s.elements.clone()).collect();
    let mut classes = Vec::new();
    while let Some(first) = remaining.iter().next().cloned() {
        let seed = Subgroup {
            group: group.clone(),
            elements: first,
        };
        let mut member_sets: BTreeSet<Vec<Elem>> = BTreeSet::new();
        for g in group.elements() {
            member_sets.insert(seed.conjugate(g).elements);
        }
        for m in &member_sets {
            remaining.remove(m);
        }
        let members: Vec<Subgroup> = member_sets
            .into_iter()
            .map(|elements| Subgroup {
                group: group.clone(),
                elements,
            })
            .collect();
        let representative = members[0].clone();
        classes.push(SubgroupClass {
            representative,
            members,
        });
    }
    classes.sort_by(|a, b| {
        b.representative
            .order()
            .cmp(&a.representative.order())
            .then_with(|| a.representative.elements.cmp(&b.representative.elements))
    });
    classes
}

/// Index of the class containing `sub`, in the `subgroup_classes` ordering.
pub fn class_of(classes: &[SubgroupClass], sub: &Subgroup) -> Option<usize> {
    classes.iter().position(|c| c.contains(sub))
}

/// True iff some conjugate of `h` is contained in `k`.
pub fn is_subconjugate(group: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> bool {
    if h.order() > k.order() {
        return false;
    }
    group
        .elements()
        .any(|g| h.elements().iter().all(|&x| k.contains(group.conj(g, x))))
}

pub fn normalizer(group: &Arc<FiniteGroup>, h: &Subgroup) -> Subgroup {
    let elements: Vec<Elem> = group
        .elements()
        .filter(|&g| {
            h.elements()
                .iter()
                .all(|&x| h.contains(group.conj(g, x)))
        })
        .collect();
    Subgroup {
        group: group.clone(),
        elements,
    }
}

/// The Weyl group N H / H as an abstract group. `lift` picks the least coset
/// representative inside the normalizer for each quotient element; the
/// quotient identity is the coset of the group identity.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub subgroup: Subgroup,
    pub normalizer: Subgroup,
    pub group: Arc<FiniteGroup>,
    pub lift: Vec<Elem>,
    proj: HashMap<Elem, usize>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Quotient index of an element of the normalizer.
    pub fn project(&self, n: Elem) -> usize {
        self.proj[&n]
    }
}

pub fn weyl_group(group: &Arc<FiniteGroup>, h: &Subgroup) -> Result<WeylGroup> {
    h.check()?;
    let norm = normalizer(group, h);
    // left cosets nH inside N H; least member represents
    let mut coset_of: HashMap<Elem, Elem> = HashMap::new();
    let mut reps: Vec<Elem> = Vec::new();
    for &n in norm.elements() {
        if coset_of.contains_key(&n) {
            continue;
        }
        let members: Vec<Elem> = h.elements().iter().map(|&x| group.mul(n, x)).collect();
        let rep = *members.iter().min().unwrap();
        for m in members {
            coset_of.insert(m, rep);
        }
        reps.push(rep);
    }
    reps.sort_unstable();
    debug_assert_eq!(reps[0], 0);
    let rep_index: HashMap<Elem, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let order = reps.len();
    let mut mul = vec![0; order * order];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * order + j] = rep_index[&coset_of[&group.mul(a, b)]] as Elem;
        }
    }
    let inv = reps
        .iter()
        .map(|&a| rep_index[&coset_of[&group.inv(a)]] as Elem)
        .collect();
    let proj = norm
        .elements()
        .iter()
        .map(|&n| (n, rep_index[&coset_of[&n]]))
        .collect();
    Ok(WeylGroup {
        subgroup: h.clone(),
        normalizer: norm,
        group: Arc::new(FiniteGroup { order, mul, inv }),
        lift: reps,
        proj,
    })
}

/// The left coset space G/H: sorted least-element representatives and the
/// coset index of every group element.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    pub subgroup: Subgroup,
    pub reps: Vec<Elem>,
    pub coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn new(group: &Arc<FiniteGroup>, h: &Subgroup) -> Self {
        let mut coset_of = vec![usize::MAX; group.order()];
        let mut reps = Vec::new();
        for g in group.elements() {
            if coset_of[g as usize] != usize::MAX {
                continue;
            }
            let members: Vec<Elem> = h.elements().iter().map(|&x| group.mul(g, x)).collect();
            let rep = *members.iter().min().unwrap();
            reps.push(rep);
            for m in &members {
                coset_of[*m as usize] = usize::MAX - 1; // mark, renumber below
            }
        }
        reps.sort_unstable();
        for (i, &r) in reps.iter().enumerate() {
            for &x in h.elements() {
                coset_of[group.mul(r, x) as usize] = i;
            }
        }
        CosetSpace {
            subgroup: h.clone(),
            reps,
            coset_of,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn coset_index(&self, g: Elem) -> usize {
        self.coset_of[g as usize]
    }

    /// Left-translation action as a `GSet` over the parent group.
    pub fn gset(&self, group: &Arc<FiniteGroup>) -> GSet {
        let action = group
            .elements()
            .map(|g| {
                self.reps
                    .iter()
                    .map(|&r| self.coset_index(group.mul(g, r)) as Elem)
                    .collect()
            })
            .collect();
        GSet {
            group: group.clone(),
            size: self.reps.len(),
            action,
        }
    }
}

/// A finite set with a left action of a finite group, given by one
/// permutation per group element.
#[derive(Debug, Clone)]
pub struct GSet {
    pub group: Arc<FiniteGroup>,
    pub size: usize,
    pub action: Vec<Vec<Elem>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: usize,
    pub elements: Vec<usize>,
    pub isotropy_order: usize,
}

impl GSet {
    pub fn new(group: Arc<FiniteGroup>, size: usize, action: Vec<Vec<Elem>>) -> Result<Self> {
        let s = GSet {
            group,
            size,
            action,
        };
        s.check()?;
        Ok(s)
    }

    pub fn trivial(group: Arc<FiniteGroup>, size: usize) -> Self {
        let id: Vec<Elem> = (0..size as Elem).collect();
        let action = vec![id; group.order()];
        GSet {
            group,
            size,
            action,
        }
    }

    fn check(&self) -> Result<()> {
        if self.action.len() != self.group.order() {
            return Err(Error::validation("action table length differs from group order"));
        }
        for perm in &self.action {
            if perm.len() != self.size {
                return Err(Error::validation("action permutation has wrong length"));
            }
            let mut seen = vec![false; self.size];
            for &v in perm {
                if v as usize >= self.size || seen[v as usize] {
                    return Err(Error::validation("action entry is not a permutation"));
                }
                seen[v as usize] = true;
            }
        }
        for x in 0..self.size {
            if self.action[0][x] as usize != x {
                return Err(Error::validation("identity does not act trivially"));
            }
        }
        for g in self.group.elements() {
            for h in self.group.elements() {
                let gh = self.group.mul(g, h);
                for x in 0..self.size {
                    if self.apply(gh, x) != self.apply(g, self.apply(h, x)) {
                        return Err(Error::validation("action is not a homomorphism"));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn apply(&self, g: Elem, x: usize) -> usize {
        self.action[g as usize][x] as usize
    }

    pub fn orbits(&self) -> Vec<Orbit> {
        let mut seen = vec![false; self.size];
        let mut orbits = Vec::new();
        for x in 0..self.size {
            if seen[x] {
                continue;
            }
            let mut elements: BTreeSet<usize> = BTreeSet::new();
            for g in self.group.elements() {
                elements.insert(self.apply(g, x));
            }
            for &e in &elements {
                seen[e] = true;
            }
            let representative = *elements.iter().next().unwrap();
            let isotropy_order = self
                .group
                .elements()
                .filter(|&g| self.apply(g, representative) == representative)
                .count();
            orbits.push(Orbit {
                representative,
                elements: elements.into_iter().collect(),
                isotropy_order,
            });
        }
        orbits
    }

    pub fn point_stabilizer(&self, x: usize) -> Subgroup {
        let elements: Vec<Elem> = self
            .group
            .elements()
            .filter(|&g| self.apply(g, x) == x)
            .collect();
        Subgroup {
            group: self.group.clone(),
            elements,
        }
    }

    /// Canonical form of a stabilizer up to conjugacy: the lexicographically
    /// least conjugate element list.
    fn stabilizer_signature(&self, x: usize) -> Vec<Elem> {
        let stab = self.point_stabilizer(x);
        self.group
            .elements()
            .map(|g| stab.conjugate(g).elements)
            .min()
            .unwrap()
    }

    /// Multiset of orbit types: (orbit size, canonical stabilizer class).
    pub fn orbit_signature(&self) -> Vec<(usize, Vec<Elem>)> {
        let mut sig: Vec<(usize, Vec<Elem>)> = self
            .orbits()
            .iter()
            .map(|o| (o.elements.len(), self.stabilizer_signature(o.representative)))
            .collect();
        sig.sort();
        sig
    }
}

/// Two G-sets over the same group are equivariantly isomorphic iff their
/// orbit signatures agree.
pub fn gsets_isomorphic(a: &GSet, b: &GSet) -> bool {
    a.group.order() == b.group.order() && a.orbit_signature() == b.orbit_signature()
}

/// The subset of G/H fixed by K (cosets gH with g⁻¹Kg ⊆ H), together with
/// the induced action of the Weyl group of K on it.
#[derive(Debug, Clone)]
pub struct FixedCosets {
    pub space: CosetSpace,
    /// indices into `space.reps` of the K-fixed cosets
    pub fixed: Vec<usize>,
    pub weyl: WeylGroup,
    /// Weyl action of N K / K on `fixed` (positions within `fixed`)
    pub action: GSet,
}

pub fn fixed_cosets(
    group: &Arc<FiniteGroup>,
    h: &Subgroup,
    k: &Subgroup,
) -> Result<FixedCosets> {
    h.check()?;
    k.check()?;
    let space = CosetSpace::new(group, h);
    let fixed: Vec<usize> = (0..space.len())
        .filter(|&c| {
            let rep = space.reps[c];
            k.elements()
                .iter()
                .all(|&x| space.coset_index(group.mul(x, rep)) == c)
        })
        .collect();
    let weyl = weyl_group(group, k)?;
    let pos: HashMap<usize, usize> = fixed.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut action = Vec::with_capacity(weyl.order());
    for w in 0..weyl.order() {
        let n = weyl.lift[w];
        let perm: Vec<Elem> = fixed
            .iter()
            .map(|&c| {
                let target = space.coset_index(group.mul(n, space.reps[c]));
                pos[&target] as Elem
            })
            .collect();
        action.push(perm);
    }
    let action = GSet {
        group: weyl.group.clone(),
        size: fixed.len(),
        action,
    };
    Ok(FixedCosets {
        space,
        fixed,
        weyl,
        action,
    })
}

/// An injective homomorphism between finite groups, given elementwise.
#[derive(Debug, Clone)]
pub struct GroupEmbedding {
    pub source: Arc<FiniteGroup>,
    pub target: Arc<FiniteGroup>,
    pub map: Vec<Elem>,
}

impl GroupEmbedding {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, map: Vec<Elem>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::validation("embedding map has wrong length"));
        }
        let mut seen = vec![false; target.order()];
        for &v in &map {
            if v as usize >= target.order() || seen[v as usize] {
                return Err(Error::validation("embedding is not injective"));
            }
            seen[v as usize] = true;
        }
        if map[0] != 0 {
            return Err(Error::validation("embedding must preserve the identity"));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.mul(a, b) as usize] != target.mul(map[a as usize], map[b as usize]) {
                    return Err(Error::validation("embedding is not a homomorphism"));
                }
            }
        }
        Ok(GroupEmbedding {
            source,
            target,
            map,
        })
    }

    pub fn apply(&self, e: Elem) -> Elem {
        self.map[e as usize]
    }

    /// Image of the source group as a subgroup of the target.
    pub fn image(&self) -> Subgroup {
        let mut elements = self.map.clone();
        elements.sort_unstable();
        Subgroup {
            group: self.target.clone(),
            elements,
        }
    }

    pub fn index(&self) -> usize {
        self.target.order() / self.source.order()
    }

    pub fn identity(group: Arc<FiniteGroup>) -> Self {
        let map = (0..group.order() as Elem).collect();
        GroupEmbedding {
            source: group.clone(),
            target: group,
            map,
        }
    }
}

/// Embedding of a subgroup's abstract group into the parent.
pub fn subgroup_embedding(h: &Subgroup) -> (FiniteGroup, GroupEmbedding) {
    let (abs, elems) = h.as_group();
    let abs = Arc::new(abs);
    let emb = GroupEmbedding {
        source: abs.clone(),
        target: h.parent().clone(),
        map: elems,
    };
    ((*abs).clone(), emb)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap())
    }

    #[test]
    fn trivial_group_has_one_subgroup_class() {
        let g = Arc::new(FiniteGroup::trivial());
        let classes = subgroup_classes(&g);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].representative.order(), 1);
    }

    #[test]
    fn z2_has_two_subgroup_classes() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let classes = subgroup_classes(&g);
        assert_eq!(classes.len(), 2);
        // maximal first
        assert_eq!(classes[0].representative.order(), 2);
        assert_eq!(classes[1].representative.order(), 1);
    }

    #[test]
    fn s3_subgroup_classes_by_exhaustive_subset_closure() {
        let g = s3();
        // oracle: test every subset containing 0 whose size divides 6 for
        // closure, then bucket by conjugacy
        let mut subgroups: BTreeSet<Vec<Elem>> = BTreeSet::new();
        for mask in 0u32..(1 << 6) {
            if mask & 1 == 0 {
                continue;
            }
            let set: Vec<Elem> = (0..6).filter(|&i| mask >> i & 1 == 1).collect();
            if 6 % set.len() != 0 {
                continue;
            }
            let closed = set.iter().all(|&a| {
                set.iter().all(|&b| set.contains(&g.mul(a, b)))
            });
            if closed {
                subgroups.insert(set);
            }
        }
        assert_eq!(all_subgroups(&g).len(), subgroups.len());
        let classes = subgroup_classes(&g);
        assert_eq!(classes.len(), 4);
        let orders: Vec<usize> = classes.iter().map(|c| c.representative.order()).collect();
        assert_eq!(orders, vec![6, 3, 2, 1]);
        // the three order-2 subgroups are conjugate
        assert_eq!(classes[2].members.len(), 3);
    }

    #[test]
    fn all_subgroups_matches_bruteforce_on_small_groups() {
        // oracle: closure test over every identity-containing subset whose
        // size divides the group order
        let d4 = FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]]).unwrap();
        for g in [
            FiniteGroup::cyclic(4),
            FiniteGroup::cyclic(6),
            FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
            d4,
        ] {
            let g = Arc::new(g);
            let n = g.order();
            let mut expected: BTreeSet<Vec<Elem>> = BTreeSet::new();
            for mask in 0u32..(1 << n) {
                if mask & 1 == 0 {
                    continue;
                }
                let set: Vec<Elem> = (0..n as Elem).filter(|&i| mask >> i & 1 == 1).collect();
                if n % set.len() != 0 {
                    continue;
                }
                let closed = set.iter().all(|&a| {
                    set.contains(&g.inv(a))
                        && set.iter().all(|&b| set.contains(&g.mul(a, b)))
                });
                if closed {
                    expected.insert(set);
                }
            }
            let found: BTreeSet<Vec<Elem>> = all_subgroups(&g)
                .into_iter()
                .map(|s| s.elements.clone())
                .collect();
            assert_eq!(found, expected, "order {n}");
        }
    }

    #[test]
    fn classes_partition_all_subgroups() {
        for g in [
            Arc::new(FiniteGroup::cyclic(4)),
            Arc::new(FiniteGroup::direct_product(
                &FiniteGroup::cyclic(2),
                &FiniteGroup::cyclic(2),
            )),
            s3(),
        ] {
            let classes = subgroup_classes(&g);
            for sub in all_subgroups(&g) {
                let hits = classes.iter().filter(|c| c.contains(&sub)).count();
                assert_eq!(hits, 1);
            }
        }
    }

    #[test]
    fn class_order_is_subconjugacy_compatible() {
        for g in [s3(), Arc::new(FiniteGroup::cyclic(4))] {
            let classes = subgroup_classes(&g);
            for (i, ci) in classes.iter().enumerate() {
                for (j, cj) in classes.iter().enumerate() {
                    if is_subconjugate(&g, &ci.representative, &cj.representative) {
                        assert!(i >= j || i == j, "ordering violated at ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_of_full_group_is_trivial() {
        let g = s3();
        let w = weyl_group(&g, &Subgroup::full(g.clone())).unwrap();
        assert_eq!(w.order(), 1);
    }

    #[test]
    fn weyl_of_z2_in_z4_has_order_two() {
        let g = Arc::new(FiniteGroup::cyclic(4));
        let h = Subgroup::generated(g.clone(), &[2]);
        assert_eq!(h.order(), 2);
        let w = weyl_group(&g, &h).unwrap();
        // abelian, so N H = G and W = G/H
        assert_eq!(w.normalizer.order(), 4);
        assert_eq!(w.order(), 2);
    }

    #[test]
    fn weyl_of_transposition_in_s3_is_trivial() {
        let g = s3();
        // element 1 is the transposition (0 1)
        let h = Subgroup::generated(g.clone(), &[1]);
        assert_eq!(h.order(), 2);
        let w = weyl_group(&g, &h).unwrap();
        assert_eq!(w.normalizer.order(), 2);
        assert_eq!(w.order(), 1);
    }

    #[test]
    fn weyl_order_times_subgroup_order_is_normalizer_order() {
        for g in [s3(), Arc::new(FiniteGroup::cyclic(6))] {
            for sub in all_subgroups(&g) {
                let w = weyl_group(&g, &sub).unwrap();
                assert_eq!(w.order() * sub.order(), w.normalizer.order());
            }
        }
    }

    #[test]
    fn fixed_cosets_trivial_k_fixes_everything() {
        let g = s3();
        let h = Subgroup::generated(g.clone(), &[1]);
        let k = Subgroup::trivial(g.clone());
        let fc = fixed_cosets(&g, &h, &k).unwrap();
        assert_eq!(fc.fixed.len(), 3);
    }

    #[test]
    fn fixed_cosets_h_equals_g() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let h = Subgroup::full(g.clone());
        let fc = fixed_cosets(&g, &h, &h).unwrap();
        assert_eq!(fc.fixed.len(), 1);
    }

    #[test]
    fn fixed_cosets_conjugate_transpositions_in_s3() {
        let g = s3();
        // enumerate the three order-2 subgroups; pick two distinct ones
        let twos: Vec<Subgroup> = all_subgroups(&g)
            .into_iter()
            .filter(|s| s.order() == 2)
            .collect();
        assert_eq!(twos.len(), 3);
        let (h, k) = (&twos[0], &twos[1]);
        // oracle: enumerate all 3 cosets gH and test g⁻¹Kg ⊆ H directly
        let space = CosetSpace::new(&g, h);
        let expected: Vec<usize> = (0..space.len())
            .filter(|&c| {
                let rep = space.reps[c];
                k.elements()
                    .iter()
                    .all(|&x| h.contains(g.mul(g.mul(g.inv(rep), x), rep)))
            })
            .collect();
        assert_eq!(expected.len(), 1);
        let fc = fixed_cosets(&g, h, k).unwrap();
        assert_eq!(fc.fixed, expected);
    }

    #[test]
    fn fixed_cosets_invariant_under_normalizer_conjugation() {
        let g = s3();
        let classes = subgroup_classes(&g);
        for ch in &classes {
            for ck in &classes {
                let h = &ch.representative;
                let k = &ck.representative;
                let fc = fixed_cosets(&g, h, k).unwrap();
                let nk = normalizer(&g, k);
                for &n in nk.elements() {
                    let k2 = k.conjugate(n);
                    let fc2 = fixed_cosets(&g, h, &k2).unwrap();
                    assert_eq!(fc.fixed.len(), fc2.fixed.len());
                    assert!(gsets_isomorphic(&fc.action, &fc2.action));
                }
            }
        }
    }

    #[test]
    fn orbit_stabilizer_identity() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        // trivial action on 3 points
        let s = GSet::trivial(z2.clone(), 3);
        let orbits = s.orbits();
        assert_eq!(orbits.len(), 3);
        assert!(orbits.iter().all(|o| o.isotropy_order == 2));

        // regular action of Z/3 on itself
        let z3 = Arc::new(FiniteGroup::cyclic(3));
        let regular = CosetSpace::new(&z3, &Subgroup::trivial(z3.clone())).gset(&z3);
        let orbits = regular.orbits();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].isotropy_order, 1);

        // Z/2 swapping two of three points
        let swap = GSet::new(
            z2.clone(),
            3,
            vec![vec![0, 1, 2], vec![1, 0, 2]],
        )
        .unwrap();
        let mut iso: Vec<usize> = swap.orbits().iter().map(|o| o.isotropy_order).collect();
        iso.sort_unstable();
        assert_eq!(iso, vec![1, 2]);

        // orbit-stabilizer on every coset space of S3
        let g = s3();
        for sub in all_subgroups(&g) {
            let s = CosetSpace::new(&g, &sub).gset(&g);
            for o in s.orbits() {
                assert_eq!(o.elements.len() * o.isotropy_order, g.order());
            }
        }
    }

    #[test]
    fn subconjugacy_examples() {
        let g = s3();
        let trivial = Subgroup::trivial(g.clone());
        let full = Subgroup::full(g.clone());
        let h2 = Subgroup::generated(g.clone(), &[1]);
        let h3 = Subgroup::generated(g.clone(), &[2]);
        assert_eq!(h3.order(), 3);
        assert!(is_subconjugate(&g, &trivial, &h2));
        assert!(is_subconjugate(&g, &trivial, &full));
        assert!(!is_subconjugate(&g, &full, &h2));
        assert!(!is_subconjugate(&g, &h2, &h3));
    }

    #[test]
    fn invalid_tables_rejected() {
        assert!(FiniteGroup::from_mul_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_mul_table(vec![vec![1, 0], vec![0, 1]]).is_err());
        // associativity failure: a "table" where every product is 0 except
        // one asymmetric entry
        assert!(FiniteGroup::from_mul_table(vec![
            vec![0, 1, 2],
            vec![1, 2, 0],
            vec![2, 1, 0]
        ])
        .is_err());
    }

    #[test]
    fn embedding_validation() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let z4 = Arc::new(FiniteGroup::cyclic(4));
        assert!(GroupEmbedding::new(z2.clone(), z4.clone(), vec![0, 2]).is_ok());
        assert!(GroupEmbedding::new(z2.clone(), z4.clone(), vec![0, 1]).is_err());
    }
}
