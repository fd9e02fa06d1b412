//! The sum-closure `C_A` of the dual lines, irreducible decompositions, the
//! minimal building set `ℱ_A` and nested sets.
//!
//! Every element of `C_A` is the span of the dual lines it contains, so it is
//! tracked by the bitset of those lines. Inclusion of closure elements is
//! then inclusion of bitsets, and the sum of a family is the smallest closure
//! element whose bitset covers their union.

mod codec;

pub use codec::{
    codec_label, dn_label_of, dn_label_to_subspace, dn_labels_nested, sn_label_of, sn_label_to_subspace,
    sn_labels_nested, DnLabel, SnLabel,
};

use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::dot;
use crate::arrangement::{Arrangement, ReflectionGroup, Subspace};
use crate::caps::Caps;
use crate::Error;

/// Bitset over the dual lines of an arrangement.
pub type LineMask = u128;

fn is_subset(a: LineMask, b: LineMask) -> bool {
    a & !b == 0
}

/// The closure `C_A` of the dual lines under sum, in canonical order
/// (dimension, then echelon rows).
#[derive(Clone, Debug)]
pub struct Closure {
    lines: Vec<Subspace>,
    elements: Vec<Subspace>,
    masks: Vec<LineMask>,
    by_mask: HashMap<LineMask, usize>,
}

impl Closure {
    pub fn new(arr: &Arrangement, caps: &Caps) -> Result<Self, Error> {
        let lines = arr.dual_lines();
        if lines.len() > LineMask::BITS as usize {
            return Err(Error::Unsupported(format!(
                "{} hyperplanes (at most {} are supported)",
                lines.len(),
                LineMask::BITS
            )));
        }
        let mask_of = |s: &Subspace| -> LineMask {
            lines
                .iter()
                .enumerate()
                .filter(|(_, l)| l.is_subspace_of(s))
                .fold(0, |m, (i, _)| m | (1 << i))
        };

        let mut found: HashMap<LineMask, Subspace> = HashMap::new();
        let mut frontier: Vec<(LineMask, Subspace)> = Vec::new();
        for (i, l) in lines.iter().enumerate() {
            found.insert(1 << i, l.clone());
            frontier.push((1 << i, l.clone()));
        }
        if lines.is_empty() {
            found.insert(0, Subspace::zero(arr.ambient_dim()));
        }
        while let Some((mask, s)) = frontier.pop() {
            for (i, l) in lines.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    continue;
                }
                // a line outside s always raises the dimension
                let t = s.sum(l);
                let m = mask_of(&t);
                if !found.contains_key(&m) {
                    caps.check(found.len() + 1, caps.closure_size, "sum-closure", "closure_size")?;
                    found.insert(m, t.clone());
                    frontier.push((m, t));
                }
            }
        }

        let mut entries: Vec<(Subspace, LineMask)> = found.into_iter().map(|(m, s)| (s, m)).collect();
        entries.sort();
        let by_mask = entries.iter().enumerate().map(|(i, (_, m))| (*m, i)).collect();
        let (elements, masks) = entries.into_iter().unzip();
        Ok(Closure {
            lines,
            elements,
            masks,
            by_mask,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Subspace {
        &self.elements[i]
    }

    /// The dual lines, in hyperplane order.
    pub fn lines(&self) -> &[Subspace] {
        &self.lines
    }

    pub fn mask(&self, i: usize) -> LineMask {
        self.masks[i]
    }

    pub fn dim(&self, i: usize) -> usize {
        self.elements[i].dim()
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        let m = self
            .lines
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_subspace_of(s))
            .fold(0, |m, (i, _)| m | (1 << i));
        self.by_mask
            .get(&m)
            .copied()
            .filter(|&i| self.elements[i] == *s)
    }

    /// Index of the span of the lines in `mask`. `mask` must be nonzero.
    pub fn join(&self, mask: LineMask) -> usize {
        if let Some(&i) = self.by_mask.get(&mask) {
            return i;
        }
        // the span is the lowest-dimensional element covering the lines
        self.masks
            .iter()
            .position(|&m| is_subset(mask, m))
            .expect("the whole span is in the closure")
    }

    /// Dimension of the span of the lines in `mask`.
    pub fn rank(&self, mask: LineMask) -> usize {
        if mask == 0 {
            0
        } else {
            self.dim(self.join(mask))
        }
    }

    /// `U_i ⊆ U_j`.
    pub fn contains(&self, j: usize, i: usize) -> bool {
        is_subset(self.masks[i], self.masks[j])
    }

    /// A splitting `U = U₁ ⊕ U₂` of element `i` into closure elements such
    /// that every line of `U` lies in one of the summands, or `None` when `U`
    /// is irreducible.
    ///
    /// For a splitting every closure element inside `U` is the span of its
    /// lines, so it decomposes along the summands as soon as each line does.
    /// It therefore suffices to try every closure element `U₁ ⊊ U` together
    /// with the span of the remaining lines.
    pub fn split(&self, i: usize) -> Option<(usize, usize)> {
        let mu = self.masks[i];
        let du = self.dim(i);
        if du <= 1 {
            return None;
        }
        (0..self.len())
            .filter(|&j| self.dim(j) < du && is_subset(self.masks[j], mu))
            .find_map(|j| {
                let rest = mu & !self.masks[j];
                let k = self.join(rest);
                (self.dim(j) + self.dim(k) == du).then_some((j, k))
            })
    }

    /// Finest decomposition of element `i` into irreducible closure
    /// elements, in canonical order.
    pub fn decompose_index(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![i];
        while let Some(u) = stack.pop() {
            match self.split(u) {
                Some((a, b)) => {
                    stack.push(a);
                    stack.push(b);
                }
                None => out.push(u),
            }
        }
        out.sort_unstable();
        out
    }

    /// Decompose a subspace that must belong to the closure.
    pub fn decompose(&self, u: &Subspace) -> Result<Vec<Subspace>, Error> {
        let i = self.index_of(u).ok_or(Error::NotInClosure)?;
        Ok(self
            .decompose_index(i)
            .into_iter()
            .map(|k| self.elements[k].clone())
            .collect())
    }

    /// Irreducibility by exhaustive search over all bipartitions of the lines
    /// inside element `i`.
    pub fn is_irreducible_exhaustive(&self, i: usize, caps: &Caps) -> Result<bool, Error> {
        let bits: Vec<u32> = (0..LineMask::BITS).filter(|b| self.masks[i] >> b & 1 == 1).collect();
        caps.check(bits.len(), caps.bipartition_lines, "lines in one subspace", "bipartition_lines")?;
        let du = self.dim(i);
        if bits.len() <= 1 {
            return Ok(true);
        }
        let k = bits.len() - 1;
        // the first line always sits in the first part
        let mut memo: HashMap<LineMask, usize> = HashMap::new();
        let mut rank = |m: LineMask| *memo.entry(m).or_insert_with(|| self.rank(m));
        for sel in 0..(1u64 << k) - 1 {
            let mut p1: LineMask = 1 << bits[0];
            for (t, &b) in bits[1..].iter().enumerate() {
                if sel >> t & 1 == 1 {
                    p1 |= 1 << b;
                }
            }
            let p2 = self.masks[i] & !p1;
            if rank(p1) + rank(p2) == du {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Route used to decide irreducibility when building `ℱ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Search for a splitting as in the definition of a decomposition.
    Definition,
    /// Connected components of the roots inside each subspace, edges joining
    /// non-orthogonal roots.
    Roots,
}

/// Split the roots lying in closure element `i` into the spans of the
/// connected components of their non-orthogonality graph.
pub fn root_components(closure: &Closure, group: &ReflectionGroup, i: usize) -> Vec<Subspace> {
    let u = closure.element(i);
    let roots: Vec<_> = group
        .positive_roots_in(u)
        .into_iter()
        .map(|k| group.root(k))
        .collect();
    let n = roots.len();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while c[r] != r {
            r = c[r];
        }
        c[x] = r;
        r
    }
    for a in 0..n {
        for b in a + 1..n {
            if !dot(&roots[a], &roots[b]).is_zero() {
                let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                comp[ra] = rb;
            }
        }
    }
    let mut groups: HashMap<usize, Vec<Vec<_>>> = HashMap::new();
    for (a, r) in roots.iter().enumerate() {
        let c = find(&mut comp, a);
        groups.entry(c).or_default().push(r.clone());
    }
    let mut out: Vec<Subspace> = groups
        .into_values()
        .map(|rs| Subspace::span(u.ambient_dim(), rs))
        .collect();
    out.sort();
    out
}

/// The minimal building set `ℱ_A`: the irreducible elements of `C_A`.
#[derive(Clone, Debug)]
pub struct BuildingSet {
    closure: Closure,
    irreducible: Vec<bool>,
    elements: Vec<usize>,
    position: HashMap<usize, usize>,
    rank: usize,
    space: Subspace,
    route: Route,
}

/// A nested set, as sorted indices into a [`BuildingSet`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NestedSet {
    pub members: Vec<usize>,
}

impl NestedSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Build `ℱ_A`. With a reflection group the root route decides
/// irreducibility, cross-checked against the definition route up to rank 4;
/// without one the definition route is used.
pub fn minimal_building_set(
    arr: &Arrangement,
    group: Option<&ReflectionGroup>,
    caps: &Caps,
) -> Result<BuildingSet, Error> {
    let closure = Closure::new(arr, caps)?;
    let route = if group.is_some() {
        Route::Roots
    } else {
        Route::Definition
    };
    let irreducible: Vec<bool> = match group {
        Some(g) => (0..closure.len())
            .map(|i| root_components(&closure, g, i).len() == 1)
            .collect(),
        None => (0..closure.len()).map(|i| closure.split(i).is_none()).collect(),
    };
    if let Some(g) = group {
        if g.rank() <= 4 {
            for (i, &irr) in irreducible.iter().enumerate() {
                if closure.split(i).is_none() != irr {
                    return Err(Error::invalid(format!(
                        "root and definition routes disagree on {:?}",
                        closure.element(i)
                    )));
                }
            }
        }
    }
    let set = BuildingSet::from_flags(closure, irreducible, arr, route);
    if set.rank <= 5 {
        set.check_factorization()?;
    }
    Ok(set)
}

impl BuildingSet {
    fn from_flags(closure: Closure, irreducible: Vec<bool>, arr: &Arrangement, route: Route) -> Self {
        let elements: Vec<usize> = (0..closure.len()).filter(|&i| irreducible[i]).collect();
        let position = elements.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        BuildingSet {
            closure,
            irreducible,
            elements,
            position,
            rank: arr.rank(),
            space: arr.space().clone(),
            route,
        }
    }

    /// Every closure element is the direct sum of its irreducible parts.
    fn check_factorization(&self) -> Result<(), Error> {
        for i in 0..self.closure.len() {
            let parts = self.closure.decompose_index(i);
            let dims: usize = parts.iter().map(|&p| self.closure.dim(p)).sum();
            let covered = parts.iter().fold(0, |m, &p| m | self.closure.mask(p));
            if dims != self.closure.dim(i)
                || covered != self.closure.mask(i)
                || parts.iter().any(|&p| !self.irreducible[p])
            {
                return Err(Error::invalid(format!(
                    "{:?} is not the direct sum of its irreducible parts",
                    self.closure.element(i)
                )));
            }
        }
        Ok(())
    }

    pub fn closure(&self) -> &Closure {
        &self.closure
    }

    /// The space `V` of the arrangement.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn route(&self) -> Route {
        self.route
    }

    /// Per closure element, whether it is irreducible.
    pub fn irreducible_flags(&self) -> &[bool] {
        &self.irreducible
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Rank of the arrangement, the size of every maximal nested set.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn element(&self, p: usize) -> &Subspace {
        self.closure.element(self.elements[p])
    }

    pub fn elements(&self) -> Vec<Subspace> {
        (0..self.len()).map(|p| self.element(p).clone()).collect()
    }

    pub fn mask(&self, p: usize) -> LineMask {
        self.closure.mask(self.elements[p])
    }

    pub fn dim(&self, p: usize) -> usize {
        self.element(p).dim()
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.closure
            .index_of(s)
            .and_then(|i| self.position.get(&i).copied())
    }

    /// `F_p ⊆ F_q`.
    pub fn contains(&self, q: usize, p: usize) -> bool {
        is_subset(self.mask(p), self.mask(q))
    }

    fn comparable(&self, p: usize, q: usize) -> bool {
        self.contains(p, q) || self.contains(q, p)
    }

    /// Whether the sum of the given members is again in `ℱ`.
    fn sum_in_f(&self, members: &[usize]) -> bool {
        let m = members.iter().fold(0, |m, &p| m | self.mask(p));
        self.irreducible[self.closure.join(m)]
    }

    /// Nestedness for indices into `ℱ`: every antichain of at least two
    /// members has its sum outside `ℱ`.
    pub fn is_nested(&self, members: &[usize]) -> bool {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut chosen = Vec::new();
        sorted
            .iter()
            .enumerate()
            .all(|(k, &p)| self.antichains_ok(&sorted[..k], p, &mut chosen))
    }

    pub fn is_nested_subspaces(&self, members: &[Subspace]) -> Result<bool, Error> {
        let idx = members
            .iter()
            .map(|s| self.index_of(s).ok_or(Error::NotInBuildingSet))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.is_nested(&idx))
    }

    /// Check every antichain made of `new` and members of `current` that are
    /// incomparable to it.
    fn antichains_ok(&self, current: &[usize], new: usize, chosen: &mut Vec<usize>) -> bool {
        let pool: Vec<usize> = current
            .iter()
            .copied()
            .filter(|&q| q != new && !self.comparable(q, new))
            .collect();
        chosen.clear();
        chosen.push(new);
        self.extend_antichains(&pool, 0, chosen)
    }

    fn extend_antichains(&self, pool: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
        for k in from..pool.len() {
            let q = pool[k];
            if chosen[1..].iter().any(|&c| self.comparable(c, q)) {
                continue;
            }
            chosen.push(q);
            let ok = !self.sum_in_f(chosen) && self.extend_antichains(pool, k + 1, chosen);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    /// Depth-first walk over all nested sets (including the empty one) in
    /// lexicographic order of their sorted members.
    pub fn for_each_nested<E>(
        &self,
        max_size: Option<usize>,
        mut visit: impl FnMut(&[usize]) -> Result<(), E>,
    ) -> Result<(), E> {
        let limit = max_size.unwrap_or(usize::MAX);
        let mut current = Vec::new();
        let mut scratch = Vec::new();
        self.walk(&mut current, 0, limit, &mut scratch, &mut visit)
    }

    fn walk<E>(
        &self,
        current: &mut Vec<usize>,
        from: usize,
        limit: usize,
        scratch: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> Result<(), E>,
    ) -> Result<(), E> {
        visit(current)?;
        if current.len() >= limit {
            return Ok(());
        }
        for p in from..self.len() {
            if self.antichains_ok(current, p, scratch) {
                current.push(p);
                self.walk(current, p + 1, limit, scratch, visit)?;
                current.pop();
            }
        }
        Ok(())
    }

    /// All nested sets of size at most `max_size`, ordered by size and then
    /// lexicographically.
    pub fn enumerate_nested_sets(
        &self,
        max_size: Option<usize>,
        caps: &Caps,
    ) -> Result<Vec<NestedSet>, Error> {
        caps.check(self.len(), caps.building_set_size, "building set", "building_set_size")?;
        let mut out = Vec::new();
        self.for_each_nested(max_size, |s| {
            caps.check(out.len() + 1, caps.nested_sets, "nested-set enumeration", "nested_sets")?;
            out.push(NestedSet { members: s.to_vec() });
            Ok::<_, Error>(())
        })?;
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
        Ok(out)
    }

    /// Number of nested sets of each size `0..=rank`.
    pub fn count_nested_sets(&self, max_size: Option<usize>, caps: &Caps) -> Result<Vec<u64>, Error> {
        caps.check(self.len(), caps.building_set_size, "building set", "building_set_size")?;
        let mut counts = vec![0u64; self.rank + 1];
        let mut total = 0usize;
        self.for_each_nested(max_size, |s| {
            total += 1;
            caps.check(total, caps.nested_sets, "nested-set enumeration", "nested_sets")?;
            if s.len() >= counts.len() {
                counts.resize(s.len() + 1, 0);
            }
            counts[s.len()] += 1;
            Ok::<_, Error>(())
        })?;
        Ok(counts)
    }

    /// Whether some further element of `ℱ` can be added.
    pub fn is_extendable(&self, set: &NestedSet) -> bool {
        let mut scratch = Vec::new();
        (0..self.len())
            .filter(|p| !set.members.contains(p))
            .any(|p| self.antichains_ok(&set.members, p, &mut scratch))
    }

    /// Nested sets that cannot be extended.
    pub fn maximal_nested_sets(&self, caps: &Caps) -> Result<Vec<NestedSet>, Error> {
        Ok(self
            .enumerate_nested_sets(None, caps)?
            .into_iter()
            .filter(|s| !self.is_extendable(s))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qvec;
    use crate::arrangement::{build_reflection_arrangement, load_arrangement, CoxeterFamily};

    fn caps() -> Caps {
        Caps::default()
    }

    fn reflection(f: CoxeterFamily, r: usize) -> (Arrangement, ReflectionGroup, BuildingSet) {
        let (a, g) = build_reflection_arrangement(f, r).unwrap();
        let b = minimal_building_set(&a, Some(&g), &caps()).unwrap();
        (a, g, b)
    }

    /// Distinct spans of all nonempty subsets of lines.
    fn brute_closure(arr: &Arrangement) -> usize {
        let lines = arr.dual_lines();
        let mut seen = std::collections::HashSet::new();
        for sel in 1u32..(1 << lines.len()) {
            let s = Subspace::span(
                arr.ambient_dim(),
                (0..lines.len())
                    .filter(|i| sel >> i & 1 == 1)
                    .map(|i| lines[i].basis()[0].clone()),
            );
            seen.insert(s);
        }
        seen.len()
    }

    #[test]
    fn boolean_closure() {
        let a = load_arrangement(r#"{"dim": 2, "normals": [["1","0"],["0","1"]]}"#, false).unwrap();
        let c = Closure::new(&a, &caps()).unwrap();
        assert_eq!(c.len(), 3);
        let f = minimal_building_set(&a, None, &caps()).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(c.decompose(&Subspace::whole(2)).unwrap().len(), 2);
    }

    #[test]
    fn closure_sizes_match_brute_force() {
        for (f, r) in [(CoxeterFamily::A, 3), (CoxeterFamily::G2, 2), (CoxeterFamily::B, 3)] {
            let (a, _) = build_reflection_arrangement(f, r).unwrap();
            let c = Closure::new(&a, &caps()).unwrap();
            assert_eq!(c.len(), brute_closure(&a), "{f:?}{r}");
        }
        let (g2, _) = build_reflection_arrangement(CoxeterFamily::G2, 2).unwrap();
        assert_eq!(Closure::new(&g2, &caps()).unwrap().len(), 7);
    }

    #[test]
    fn closure_cap() {
        let (a, _) = build_reflection_arrangement(CoxeterFamily::A, 4).unwrap();
        let tiny = Caps {
            closure_size: 10,
            ..Caps::default()
        };
        assert!(matches!(Closure::new(&a, &tiny), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn decompositions() {
        let (a, _) = build_reflection_arrangement(CoxeterFamily::A, 3).unwrap();
        let c = Closure::new(&a, &caps()).unwrap();
        for l in c.lines() {
            assert_eq!(c.decompose(l).unwrap(), vec![l.clone()]);
        }
        let u = Subspace::span(4, [qvec(&[1, -1, 0, 0]), qvec(&[0, 0, 1, -1])]);
        let parts = c.decompose(&u).unwrap();
        assert_eq!(parts.len(), 2);
        let not_in = Subspace::line(qvec(&[1, 1, -2, 0]));
        assert_eq!(c.decompose(&not_in), Err(Error::NotInClosure));

        let (g2, _) = build_reflection_arrangement(CoxeterFamily::G2, 2).unwrap();
        let c = Closure::new(&g2, &caps()).unwrap();
        assert_eq!(c.decompose(g2.space()).unwrap().len(), 1);
    }

    #[test]
    fn exhaustive_search_agrees_with_split() {
        for (f, r) in [(CoxeterFamily::A, 4), (CoxeterFamily::D, 4), (CoxeterFamily::B, 3)] {
            let (a, _) = build_reflection_arrangement(f, r).unwrap();
            let c = Closure::new(&a, &caps()).unwrap();
            for i in 0..c.len() {
                assert_eq!(
                    c.is_irreducible_exhaustive(i, &caps()).unwrap(),
                    c.split(i).is_none()
                );
            }
        }
    }

    #[test]
    fn building_set_sizes() {
        assert_eq!(reflection(CoxeterFamily::A, 3).2.len(), 11);
        assert_eq!(reflection(CoxeterFamily::G2, 2).2.len(), 7);
        let (a, _, d4) = reflection(CoxeterFamily::D, 4);
        assert_eq!(d4.len(), minimal_building_set(&a, None, &caps()).unwrap().len());
        assert_eq!(d4.len(), 41);
    }

    #[test]
    fn nestedness_examples() {
        let (_, _, g2) = reflection(CoxeterFamily::G2, 2);
        let v = g2.index_of(&g2.element(g2.len() - 1).clone()).unwrap();
        assert_eq!(g2.dim(v), 2);
        for p in 0..g2.len() - 1 {
            assert!(g2.is_nested(&[p]));
            assert!(g2.is_nested(&[p, v]));
        }
        // two root lines sum to V
        assert!(!g2.is_nested(&[0, 1]));

        let (_, _, s3) = reflection(CoxeterFamily::A, 2);
        let l12 = Subspace::line(qvec(&[1, -1, 0]));
        let l13 = Subspace::line(qvec(&[1, 0, -1]));
        assert!(!s3.is_nested_subspaces(&[l12, l13]).unwrap());
        assert_eq!(
            s3.is_nested_subspaces(&[Subspace::line(qvec(&[1, 1, -2]))]),
            Err(Error::NotInBuildingSet)
        );
    }

    #[test]
    fn maximal_nested_counts() {
        let (_, _, s3) = reflection(CoxeterFamily::A, 2);
        assert_eq!(s3.maximal_nested_sets(&caps()).unwrap().len(), 3);
        let (_, _, s4) = reflection(CoxeterFamily::A, 3);
        let max = s4.maximal_nested_sets(&caps()).unwrap();
        assert_eq!(max.len(), 15);
        assert!(max.iter().all(|s| s.len() == 3));
        let (_, _, g2) = reflection(CoxeterFamily::G2, 2);
        assert_eq!(g2.maximal_nested_sets(&caps()).unwrap().len(), 6);
        assert_eq!(g2.count_nested_sets(None, &caps()).unwrap(), vec![1, 7, 6]);
    }

    #[test]
    fn subsets_of_nested_sets_are_nested() {
        let (_, _, d4) = reflection(CoxeterFamily::D, 4);
        for s in d4.maximal_nested_sets(&caps()).unwrap().iter().take(50) {
            for sel in 0u32..(1 << s.len()) {
                let sub: Vec<usize> = (0..s.len())
                    .filter(|i| sel >> i & 1 == 1)
                    .map(|i| s.members[i])
                    .collect();
                assert!(d4.is_nested(&sub));
            }
        }
    }
}
