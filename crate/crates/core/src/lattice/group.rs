//! Finite permutation groups with an explicit multiplication table.

use std::collections::{BTreeSet, HashMap};

use super::LatticeError;

pub type Perm = Vec<usize>;

/// `(a * b)(x) = a(b(x))`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&x| a[x]).collect()
}

pub fn invert(a: &[usize]) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

fn is_permutation(a: &[usize]) -> bool {
    let mut seen = vec![false; a.len()];
    for &x in a {
        if x >= a.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// A finite group of permutations of `0..degree`. Elements are kept in
/// lexicographic order, so the identity is always element 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    degree: usize,
    perms: Vec<Perm>,
    table: Vec<Vec<usize>>,
    generators: Vec<usize>,
    index: HashMap<Perm, usize>,
}

impl FiniteGroup {
    /// Build from a complete element list; closure, identity, inverses and
    /// associativity of the resulting table are checked.
    pub fn new(degree: usize, mut perms: Vec<Perm>, generators: &[Perm]) -> Result<Self, LatticeError> {
        let bad = |m: String| LatticeError::InvalidGroup(m);
        if perms.is_empty() {
            return Err(bad("empty element list".into()));
        }
        for p in perms.iter().chain(generators) {
            if p.len() != degree || !is_permutation(p) {
                return Err(bad(format!("{p:?} is not a permutation of degree {degree}")));
            }
        }
        perms.sort();
        perms.dedup();
        let index: HashMap<Perm, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = perms.len();
        let mut table = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let c = compose(&perms[i], &perms[j]);
                table[i][j] = *index.get(&c).ok_or_else(|| bad(format!("not closed: {c:?}")))?;
            }
        }
        let id: Perm = (0..degree).collect();
        if perms[0] != id {
            return Err(bad("identity missing".into()));
        }
        for i in 0..n {
            if !(0..n).any(|j| table[i][j] == 0 && table[j][i] == 0) {
                return Err(bad(format!("element {i} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad("table is not associative".into()));
                    }
                }
            }
        }
        let mut gens = Vec::new();
        for g in generators {
            let i = *index.get(g).ok_or_else(|| bad(format!("generator {g:?} not in group")))?;
            gens.push(i);
        }
        let g = FiniteGroup { degree, perms, table, generators: gens, index };
        if g.closure_indices(&g.generators).len() != n {
            return Err(bad("generators do not generate the group".into()));
        }
        Ok(g)
    }

    /// The group generated by the given permutations. The stored generator
    /// list is a greedy irredundant subset of the input.
    pub fn generate(degree: usize, gens: &[Perm]) -> Result<Self, LatticeError> {
        for p in gens {
            if p.len() != degree || !is_permutation(p) {
                return Err(LatticeError::InvalidGroup(format!("{p:?} is not a permutation of degree {degree}")));
            }
        }
        let mut elems: BTreeSet<Perm> = BTreeSet::new();
        let id: Perm = (0..degree).collect();
        elems.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for s in gens {
                let y = compose(s, &x);
                if elems.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let mut chosen: Vec<Perm> = Vec::new();
        let mut span: BTreeSet<Perm> = BTreeSet::new();
        span.insert((0..degree).collect());
        for s in gens {
            if !span.contains(s) {
                chosen.push(s.clone());
                span = close(degree, &chosen);
            }
        }
        Self::new(degree, elems.into_iter().collect(), &chosen)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generate(degree, &[]).expect("identity is a group")
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Perm] {
        &self.perms
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.perms[i]
    }

    pub fn index_of(&self, p: &[usize]) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_perms(&self) -> Vec<Perm> {
        self.generators.iter().map(|&i| self.perms[i].clone()).collect()
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == 0).expect("verified on construction")
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.table[a][x];
            k += 1;
        }
        k
    }

    fn closure_indices(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut out = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &s in gens {
                let y = self.table[s][x];
                if out.insert(y) {
                    frontier.push(y);
                }
            }
        }
        out
    }

    /// Whether every element of `sub` lies in this group.
    pub fn contains_group(&self, sub: &FiniteGroup) -> bool {
        sub.degree == self.degree && sub.perms.iter().all(|p| self.index.contains_key(p))
    }

    /// All subgroups, ordered by `(order, sorted element list)`.
    pub fn subgroups(&self) -> Vec<FiniteGroup> {
        let n = self.order();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier: Vec<Vec<usize>> = vec![vec![0]];
        found.insert(vec![0]);
        while let Some(h) = frontier.pop() {
            for g in 0..n {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let c: Vec<usize> = self.closure_indices(&gens).into_iter().collect();
                if found.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        let mut subs: Vec<Vec<usize>> = found.into_iter().collect();
        subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        subs.iter().map(|s| self.subgroup_from_indices(s)).collect()
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup(&self, gens: &[usize]) -> FiniteGroup {
        let elems: Vec<usize> = self.closure_indices(gens).into_iter().collect();
        self.subgroup_from_indices(&elems)
    }

    fn subgroup_from_indices(&self, elems: &[usize]) -> FiniteGroup {
        let mut gens: Vec<usize> = Vec::new();
        let mut span = BTreeSet::from([0]);
        for &e in elems {
            if !span.contains(&e) {
                gens.push(e);
                span = self.closure_indices(&gens);
            }
        }
        let perms: Vec<Perm> = elems.iter().map(|&i| self.perms[i].clone()).collect();
        let gp: Vec<Perm> = gens.iter().map(|&i| self.perms[i].clone()).collect();
        FiniteGroup::new(self.degree, perms, &gp).expect("subgroup of a verified group")
    }

    /// Conjugacy classes as sorted index lists, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let cls: BTreeSet<usize> = (0..n).map(|g| self.mul(self.mul(g, a), self.inverse(g))).collect();
            for &c in &cls {
                seen[c] = true;
            }
            out.push(cls.into_iter().collect());
        }
        out
    }

    /// Left cosets `gH` of a subgroup, each as a sorted index list, ordered
    /// by smallest member.
    pub fn left_cosets(&self, sub: &FiniteGroup) -> Vec<Vec<usize>> {
        let members: Vec<usize> = sub.perms.iter().filter_map(|p| self.index_of(p)).collect();
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for g in 0..self.order() {
            if seen[g] {
                continue;
            }
            let mut c: Vec<usize> = members.iter().map(|&h| self.mul(g, h)).collect();
            c.sort();
            for &x in &c {
                seen[x] = true;
            }
            out.push(c);
        }
        out
    }
}

fn close(degree: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let id: Perm = (0..degree).collect();
    let mut out = BTreeSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for s in gens {
            let y = compose(s, &x);
            if out.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::generate(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    #[test]
    fn s3_structure() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.subgroups().len(), 6);
        assert_eq!(g.conjugacy_classes().len(), 3);
        assert_eq!(g.element(0), &vec![0, 1, 2]);
    }

    #[test]
    fn rejects_non_groups() {
        assert!(FiniteGroup::new(3, vec![vec![0, 1, 2], vec![1, 2, 0]], &[]).is_err());
        assert!(FiniteGroup::generate(2, &[vec![0, 0]]).is_err());
    }

    #[test]
    fn cosets_partition() {
        let g = s3();
        let h = g.subgroup(&[g.index_of(&[1, 0, 2]).unwrap()]);
        let cs = g.left_cosets(&h);
        assert_eq!(cs.len(), 3);
        assert!(cs.iter().all(|c| c.len() == 2));
    }
}
