use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Arrangement, Subspace};
use crate::arith::{qvec, Field, Matrix, MatrixQ, Rational};
use crate::caps::Caps;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoxeterFamily {
    A,
    B,
    D,
    G2,
}

impl FromStr for CoxeterFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CoxeterFamily::A),
            "B" | "C" => Ok(CoxeterFamily::B),
            "D" => Ok(CoxeterFamily::D),
            "G" | "G2" => Ok(CoxeterFamily::G2),
            other => Err(Error::Unsupported(format!(
                "Coxeter type {other:?} (supported: A, B, D, G2)"
            ))),
        }
    }
}

/// A supported irreducible Coxeter type together with its rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: CoxeterFamily,
    pub rank: usize,
}

impl CartanType {
    /// Validates the rank against the supported ranges
    /// (A ≤ 7, 2 ≤ B ≤ 6, 4 ≤ D ≤ 6, G₂ of rank 2).
    pub fn new(family: CoxeterFamily, rank: usize) -> Result<Self, Error> {
        let ok = match family {
            CoxeterFamily::A => (1..=7).contains(&rank),
            CoxeterFamily::B => (2..=6).contains(&rank),
            CoxeterFamily::D => (4..=6).contains(&rank),
            CoxeterFamily::G2 => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::Unsupported(format!(
                "rank {rank} for type {family:?} (supported: A1-A7, B2-B6, D4-D6, G2)"
            )))
        }
    }

    /// Degrees of the basic invariants, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let r = self.rank as u32;
        let mut d: Vec<u32> = match self.family {
            CoxeterFamily::A => (2..=r + 1).collect(),
            CoxeterFamily::B => (1..=r).map(|k| 2 * k).collect(),
            CoxeterFamily::D => (1..r).map(|k| 2 * k).chain([r]).collect(),
            CoxeterFamily::G2 => vec![2, 6],
        };
        d.sort_unstable();
        d
    }

    /// Coxeter number, the largest degree.
    pub fn coxeter_number(&self) -> u32 {
        *self.degrees().last().unwrap()
    }

    pub fn group_order(&self) -> u64 {
        self.degrees().iter().map(|&d| d as u64).product()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            CoxeterFamily::G2 => write!(f, "G2"),
            fam => write!(f, "{fam:?}{}", self.rank),
        }
    }
}

/// An element of W, recorded as the permutation it induces on the root
/// system: `perm[k]` is the index of `w(root_k)`.
///
/// W acts faithfully on the roots (they span `V`, and W is the identity on
/// `V^⊥`), so equality of permutations is equality of matrices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    perm: Vec<u16>,
}

impl GroupElement {
    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            perm: other.perm.iter().map(|&k| self.perm[k as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut inv = vec![0u16; self.perm.len()];
        for (k, &img) in self.perm.iter().enumerate() {
            inv[img as usize] = k as u16;
        }
        GroupElement { perm: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &v)| k == v as usize)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement{:?}", self.perm)
    }
}

/// Which stabilizer of a subspace to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StabilizerMode {
    /// `w S = S`.
    Setwise,
    /// `w v = v` for every `v ∈ S`.
    Pointwise,
}

/// A finite real reflection group of type A, B, D or G₂ with an all-integer
/// root system.
#[derive(Clone)]
pub struct ReflectionGroup {
    cartan: CartanType,
    space: Subspace,
    roots: Vec<Vec<i64>>,
    positive: usize,
    simple: Vec<usize>,
    labels: Vec<String>,
    coxeter_matrix: Vec<Vec<u32>>,
    gens: Vec<GroupElement>,
    index: HashMap<Vec<i64>, usize>,
    basis_inv: MatrixQ,
    perp: Vec<Vec<Rational>>,
}

fn idot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn reflect(alpha: &[i64], beta: &[i64]) -> Vec<i64> {
    let num = 2 * idot(alpha, beta);
    let den = idot(alpha, alpha);
    assert_eq!(num % den, 0, "root system is not crystallographic");
    let c = num / den;
    beta.iter().zip(alpha).map(|(b, a)| b - c * a).collect()
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Carrier dimension, simple roots in alphabet order, and their labels.
fn simple_system(t: CartanType) -> (usize, Vec<Vec<i64>>, Vec<String>) {
    let r = t.rank;
    let labels = |n: usize| (1..=n).map(|i| format!("s{i}")).collect::<Vec<_>>();
    match t.family {
        CoxeterFamily::A => {
            let n = r + 1;
            let simple = (0..r).map(|i| sub(&unit(n, i), &unit(n, i + 1))).collect();
            (n, simple, labels(r))
        }
        CoxeterFamily::B => {
            let mut simple: Vec<_> = (0..r - 1).map(|i| sub(&unit(r, i), &unit(r, i + 1))).collect();
            simple.push(unit(r, r - 1));
            (r, simple, labels(r))
        }
        CoxeterFamily::D => {
            // s1 = e_{r-1} - e_r, s1' = e_{r-1} + e_r, s_k = e_{r-k} - e_{r-k+1}
            let e = |i: usize| unit(r, i - 1);
            let mut simple = vec![sub(&e(r - 1), &e(r)), add(&e(r - 1), &e(r))];
            let mut names = vec!["s1".to_string(), "s1'".to_string()];
            for k in 2..r {
                simple.push(sub(&e(r - k), &e(r - k + 1)));
                names.push(format!("s{k}"));
            }
            (r, simple, names)
        }
        CoxeterFamily::G2 => {
            // short root s, long root t at angle 5π/6, inside the sum-zero plane
            let simple = vec![vec![1, -1, 0], vec![-2, 1, 1]];
            (3, simple, labels(2))
        }
    }
}

/// `m(s, t)` from the angle between two simple roots.
fn coxeter_entry(a: &[i64], b: &[i64]) -> u32 {
    if a == b {
        return 1;
    }
    let d = idot(a, b);
    // 4 cos^2 = 4 d^2 / (|a|^2 |b|^2) ∈ {0, 1, 2, 3}
    let num = 4 * d * d;
    let den = idot(a, a) * idot(b, b);
    match (num / den, num % den) {
        (0, 0) => 2,
        (1, 0) => 3,
        (2, 0) => 4,
        (3, 0) => 6,
        _ => panic!("simple roots at a non-crystallographic angle"),
    }
}

impl ReflectionGroup {
    pub fn new(cartan: CartanType) -> Result<Self, Error> {
        let (n, simple_roots, labels) = simple_system(cartan);
        let rank = simple_roots.len();

        // all roots: orbit of the simple roots under the simple reflections
        let mut all: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = simple_roots.iter().cloned().collect();
        while let Some(b) = queue.pop_front() {
            if !seen.insert(b.clone()) {
                continue;
            }
            for a in &simple_roots {
                let img = reflect(a, &b);
                if !seen.contains(&img) {
                    queue.push_back(img);
                }
            }
            all.push(b);
        }

        let space = Subspace::span(n, simple_roots.iter().map(|r| qvec(r)));
        let perp: Vec<Vec<Rational>> = space.orthogonal().basis().to_vec();
        let mut cols: Vec<Vec<Rational>> = simple_roots.iter().map(|r| qvec(r)).collect();
        cols.extend(perp.iter().cloned());
        let basis = Matrix::from_rows(n, cols).transpose();
        let basis_inv = basis
            .inverse()
            .expect("simple roots are linearly independent");

        // positive = nonnegative coordinates in the simple roots
        let coords = |v: &[i64]| -> Vec<Rational> {
            basis_inv.apply(&qvec(v)).into_iter().take(rank).collect()
        };
        let mut positive: Vec<(Vec<Rational>, Vec<i64>)> = all
            .iter()
            .filter_map(|v| {
                let c = coords(v);
                let nonneg = c.iter().all(|x| *x >= Rational::zero());
                nonneg.then(|| (c, v.clone()))
            })
            .collect();
        positive.sort_by(|(ca, _), (cb, _)| {
            let ha: Rational = ca.iter().sum();
            let hb: Rational = cb.iter().sum();
            ha.cmp(&hb).then_with(|| cb.cmp(ca))
        });
        assert_eq!(2 * positive.len(), all.len(), "roots do not split into ±");

        let mut roots: Vec<Vec<i64>> = positive.into_iter().map(|(_, v)| v).collect();
        let np = roots.len();
        for k in 0..np {
            let neg = roots[k].iter().map(|x| -x).collect();
            roots.push(neg);
        }
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(k, v)| (v.clone(), k)).collect();
        let simple: Vec<usize> = simple_roots.iter().map(|r| index[r]).collect();

        let gens = simple_roots
            .iter()
            .map(|a| GroupElement {
                perm: roots.iter().map(|b| index[&reflect(a, b)] as u16).collect(),
            })
            .collect();
        let coxeter_matrix = simple_roots
            .iter()
            .map(|a| simple_roots.iter().map(|b| coxeter_entry(a, b)).collect())
            .collect();

        let group = ReflectionGroup {
            cartan,
            space,
            roots,
            positive: np,
            simple,
            labels,
            coxeter_matrix,
            gens,
            index,
            basis_inv,
            perp,
        };
        group.validate()?;
        Ok(group)
    }

    /// Self-checks on the embedded degree table that do not need a full
    /// enumeration.
    fn validate(&self) -> Result<(), Error> {
        let degrees = self.cartan.degrees();
        let sum_exponents: u32 = degrees.iter().map(|d| d - 1).sum();
        if sum_exponents as usize != self.positive {
            return Err(Error::invalid(format!(
                "degree table of {} disagrees with the number of reflections",
                self.cartan
            )));
        }
        let h = self.element_order(&self.coxeter_element());
        if h != self.cartan.coxeter_number() as usize {
            return Err(Error::invalid(format!(
                "largest degree of {} is not the order of the Coxeter element",
                self.cartan
            )));
        }
        Ok(())
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    /// The space `V` spanned by the roots.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive
    }

    /// All roots: positive roots first (by height), then their negatives in
    /// the same order.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, k: usize) -> Vec<Rational> {
        qvec(&self.roots[k])
    }

    pub fn positive_roots(&self) -> Vec<Vec<Rational>> {
        (0..self.positive).map(|k| self.root(k)).collect()
    }

    /// Indices of the simple roots, in alphabet order.
    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_roots(&self) -> Vec<Vec<Rational>> {
        self.simple.iter().map(|&k| self.root(k)).collect()
    }

    /// Generator names: `s1 … sr`, with `s1'` in type D.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.cartan.degrees()
    }

    pub fn group_order(&self) -> u64 {
        self.cartan.group_order()
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.gens
    }

    pub fn generator_matrices(&self) -> Vec<MatrixQ> {
        self.gens.iter().map(|g| self.matrix(g)).collect()
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.positive
    }

    /// Index of `-root_k`.
    pub fn negate_index(&self, k: usize) -> usize {
        if k < self.positive {
            k + self.positive
        } else {
            k - self.positive
        }
    }

    pub fn arrangement(&self) -> Arrangement {
        Arrangement::new(self.space.clone(), &self.positive_roots())
            .expect("roots lie in their own span")
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            perm: (0..self.roots.len() as u16).collect(),
        }
    }

    pub fn generator(&self, i: usize) -> &GroupElement {
        &self.gens[i]
    }

    /// Product of the generators with the given alphabet indices, left to
    /// right.
    pub fn product(&self, word: &[usize]) -> GroupElement {
        word.iter()
            .fold(self.identity(), |acc, &i| acc.compose(&self.gens[i]))
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &GroupElement) -> usize {
        w.perm[..self.positive]
            .iter()
            .filter(|&&k| k as usize >= self.positive)
            .count()
    }

    /// Generators `s` with `l(ws) < l(w)`.
    pub fn right_descents(&self, w: &GroupElement) -> Vec<bool> {
        self.simple
            .iter()
            .map(|&k| w.perm[k] as usize >= self.positive)
            .collect()
    }

    /// Generators `s` with `l(sw) < l(w)`.
    pub fn left_descents(&self, w: &GroupElement) -> Vec<bool> {
        self.right_descents(&w.inverse())
    }

    /// A reduced word (alphabet indices) for `w`.
    pub fn reduced_word(&self, w: &GroupElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        while !cur.is_identity() {
            let i = self
                .right_descents(&cur)
                .iter()
                .position(|&d| d)
                .expect("nonidentity element has a descent");
            word.push(i);
            cur = cur.compose(&self.gens[i]);
        }
        word.reverse();
        word
    }

    /// Longest element of the standard parabolic subgroup on `subset`.
    pub fn longest_element_of(&self, subset: &[usize]) -> GroupElement {
        let mut w = self.identity();
        loop {
            let desc = self.right_descents(&w);
            match subset.iter().find(|&&i| !desc[i]) {
                Some(&i) => w = w.compose(&self.gens[i]),
                None => return w,
            }
        }
    }

    pub fn longest_element(&self) -> GroupElement {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.longest_element_of(&all)
    }

    /// Product of the simple reflections in alphabet order.
    pub fn coxeter_element(&self) -> GroupElement {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.product(&all)
    }

    pub fn element_order(&self, w: &GroupElement) -> usize {
        let mut p = w.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(w);
            k += 1;
        }
        k
    }

    /// Matrix of `w` on the carrier `Q^n`.
    pub fn matrix(&self, w: &GroupElement) -> MatrixQ {
        let n = self.ambient_dim();
        let mut cols: Vec<Vec<Rational>> =
            self.simple.iter().map(|&k| self.root(w.perm[k] as usize)).collect();
        cols.extend(self.perp.iter().cloned());
        Matrix::from_rows(n, cols).transpose().mul(&self.basis_inv)
    }

    /// `w · v` for a vector over any field containing Q.
    pub fn apply<F: Field>(&self, w: &GroupElement, v: &[F]) -> Vec<F> {
        let n = self.ambient_dim();
        assert_eq!(v.len(), n, "vector length mismatch");
        let coords: Vec<F> = (0..n)
            .map(|i| {
                (0..n).fold(F::zero(), |acc, j| {
                    let b = &self.basis_inv[(i, j)];
                    if b.is_zero() {
                        acc
                    } else {
                        acc + F::from_rational(b) * v[j].clone()
                    }
                })
            })
            .collect();
        let mut out = vec![F::zero(); n];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let img: Vec<Rational> = if i < self.rank() {
                self.root(w.perm[self.simple[i]] as usize)
            } else {
                self.perp[i - self.rank()].clone()
            };
            for (o, x) in out.iter_mut().zip(&img) {
                if !x.is_zero() {
                    *o = o.clone() + c.clone() * F::from_rational(x);
                }
            }
        }
        out
    }

    pub fn apply_subspace(&self, w: &GroupElement, s: &Subspace) -> Subspace {
        Subspace::span(
            s.ambient_dim(),
            s.basis().iter().map(|b| self.apply(w, b)),
        )
    }

    /// `rank − dim Fix(w)`, the minimal number of reflections whose product
    /// is `w`.
    pub fn reflection_length(&self, w: &GroupElement) -> usize {
        let m = self.matrix(w);
        let n = self.ambient_dim();
        let mut d = m;
        for i in 0..n {
            d[(i, i)] = d[(i, i)].clone() - Rational::one();
        }
        d.rank()
    }

    /// `w ≤ c` in the absolute order.
    pub fn absolute_order_below(&self, w: &GroupElement, c: &GroupElement) -> bool {
        self.reflection_length(w) + self.reflection_length(&w.inverse().compose(c))
            == self.reflection_length(c)
    }

    /// Closure of the generators with the given indices, sorted by length
    /// and then by permutation.
    pub fn generate(&self, gens: &[GroupElement], caps: &Caps) -> Result<Vec<GroupElement>, Error> {
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let mut queue = VecDeque::from([self.identity()]);
        seen.insert(self.identity());
        let mut out = Vec::new();
        while let Some(w) = queue.pop_front() {
            for g in gens {
                let x = w.compose(g);
                if seen.insert(x.clone()) {
                    caps.check(seen.len(), caps.group_order, "group enumeration", "group_order")?;
                    queue.push_back(x);
                }
            }
            out.push(w);
        }
        out.sort_by_cached_key(|w| (self.length(w), w.clone()));
        Ok(out)
    }

    /// Every element of W.
    pub fn enumerate(&self, caps: &Caps) -> Result<Vec<GroupElement>, Error> {
        caps.check(
            self.group_order() as usize,
            caps.group_order,
            format!("|W({})| = {}", self.cartan, self.group_order()),
            "group_order",
        )?;
        self.generate(&self.gens, caps)
    }

    /// Elements of W commuting with every generator.
    pub fn center(&self, caps: &Caps) -> Result<Vec<GroupElement>, Error> {
        Ok(self
            .enumerate(caps)?
            .into_iter()
            .filter(|w| self.gens.iter().all(|g| w.compose(g) == g.compose(w)))
            .collect())
    }

    pub fn fixes_pointwise(&self, w: &GroupElement, s: &Subspace) -> bool {
        s.basis().iter().all(|b| self.apply(w, b) == *b)
    }

    pub fn stabilizer_of_subspace(
        &self,
        s: &Subspace,
        mode: StabilizerMode,
        caps: &Caps,
    ) -> Result<Vec<GroupElement>, Error> {
        if s.ambient_dim() != self.ambient_dim() {
            return Err(Error::invalid("subspace lives in a different ambient space"));
        }
        Ok(self
            .enumerate(caps)?
            .into_iter()
            .filter(|w| match mode {
                StabilizerMode::Pointwise => self.fixes_pointwise(w, s),
                StabilizerMode::Setwise => self.apply_subspace(w, s) == *s,
            })
            .collect())
    }

    /// Distinct images `w S`, sorted canonically.
    pub fn orbit_on_subspaces(&self, s: &Subspace, caps: &Caps) -> Result<Vec<Subspace>, Error> {
        // breadth-first over generators: the orbit is generated by them
        let mut seen: HashSet<Subspace> = HashSet::from([s.clone()]);
        let mut queue = VecDeque::from([s.clone()]);
        while let Some(u) = queue.pop_front() {
            for g in &self.gens {
                let img = self.apply_subspace(g, &u);
                if seen.insert(img.clone()) {
                    caps.check(seen.len(), caps.group_order, "orbit size", "group_order")?;
                    queue.push_back(img);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Indices of the positive roots lying in `s`.
    pub fn positive_roots_in(&self, s: &Subspace) -> Vec<usize> {
        (0..self.positive)
            .filter(|&k| s.contains_vector(&self.root(k)))
            .collect()
    }

    /// The parabolic subgroup `W_A` fixing `A^⊥` pointwise, generated by the
    /// reflections in the roots of `A`.
    pub fn parabolic_of(&self, a: &Subspace, caps: &Caps) -> Result<Vec<GroupElement>, Error> {
        let refl: Vec<GroupElement> = self
            .positive_roots_in(a)
            .into_iter()
            .map(|k| self.reflection(k))
            .collect();
        self.generate(&refl, caps)
    }

    /// Reflection in the root with index `k`.
    pub fn reflection(&self, k: usize) -> GroupElement {
        let a = &self.roots[k];
        GroupElement {
            perm: self
                .roots
                .iter()
                .map(|b| self.index[&reflect(a, b)] as u16)
                .collect(),
        }
    }
}

impl fmt::Debug for ReflectionGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReflectionGroup")
            .field("type", &self.cartan.to_string())
            .field("roots", &self.roots.len())
            .finish()
    }
}

/// The essential reflection arrangement of a supported type together with
/// its group.
pub fn build_reflection_arrangement(
    family: CoxeterFamily,
    rank: usize,
) -> Result<(Arrangement, ReflectionGroup), Error> {
    let group = ReflectionGroup::new(CartanType::new(family, rank)?)?;
    Ok((group.arrangement(), group))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(f: CoxeterFamily, r: usize) -> ReflectionGroup {
        ReflectionGroup::new(CartanType::new(f, r).unwrap()).unwrap()
    }

    #[test]
    fn hyperplane_counts() {
        let cases = [
            (CoxeterFamily::A, 3, 6, 3),
            (CoxeterFamily::D, 4, 12, 4),
            (CoxeterFamily::G2, 2, 6, 2),
            (CoxeterFamily::B, 3, 9, 3),
        ];
        for (f, r, hyperplanes, dim) in cases {
            let (arr, g) = build_reflection_arrangement(f, r).unwrap();
            assert_eq!(arr.hyperplanes().len(), hyperplanes, "{f:?}{r}");
            assert_eq!(arr.dim(), dim);
            assert!(arr.is_essential());
            assert_eq!(g.num_positive_roots(), hyperplanes);
        }
    }

    #[test]
    fn g2_root_count_by_brute_force() {
        // every integer vector of the sum-zero plane with squared length 2 or 6
        let mut count = 0;
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                let c = -a - b;
                let n = a * a + b * b + c * c;
                if n == 2 || n == 6 {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 12);
        assert_eq!(group(CoxeterFamily::G2, 2).roots().len(), 12);
    }

    #[test]
    fn unsupported_ranks() {
        assert!(CartanType::new(CoxeterFamily::D, 3).is_err());
        assert!(CartanType::new(CoxeterFamily::A, 8).is_err());
        assert!(CartanType::new(CoxeterFamily::G2, 3).is_err());
        assert!("E".parse::<CoxeterFamily>().is_err());
    }

    #[test]
    fn enumeration_orders() {
        let caps = Caps::default();
        assert_eq!(group(CoxeterFamily::A, 2).enumerate(&caps).unwrap().len(), 6);
        assert_eq!(group(CoxeterFamily::G2, 2).enumerate(&caps).unwrap().len(), 12);
        assert_eq!(group(CoxeterFamily::D, 4).enumerate(&caps).unwrap().len(), 192);
        let tiny = Caps {
            group_order: 10,
            ..Caps::default()
        };
        assert!(matches!(
            group(CoxeterFamily::D, 4).enumerate(&tiny),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn generators_are_reflections() {
        for (f, r) in [(CoxeterFamily::A, 3), (CoxeterFamily::B, 3), (CoxeterFamily::D, 4), (CoxeterFamily::G2, 2)] {
            let g = group(f, r);
            let arr = g.arrangement();
            let n = g.ambient_dim();
            for m in g.generator_matrices() {
                assert_eq!(m.mul(&m), MatrixQ::identity(n));
                // fixes pointwise some hyperplane of the arrangement inside V
                let fixed = arr.hyperplanes().iter().any(|h| {
                    let hyper = h.dual_line().orthogonal_in(g.space());
                    hyper.basis().iter().all(|v| m.apply(v) == *v)
                });
                assert!(fixed);
            }
        }
    }

    #[test]
    fn matrices_agree_with_permutations() {
        let g = group(CoxeterFamily::G2, 2);
        for w in g.enumerate(&Caps::default()).unwrap() {
            let m = g.matrix(&w);
            for (k, r) in g.roots().iter().enumerate() {
                assert_eq!(m.apply(&qvec(r)), g.root(w.perm()[k] as usize));
            }
        }
    }

    #[test]
    fn coxeter_matrices() {
        let g = group(CoxeterFamily::G2, 2);
        assert_eq!(g.coxeter_matrix(), &[vec![1, 6], vec![6, 1]]);
        let d = group(CoxeterFamily::D, 4);
        // s1 and s1' commute, both braid with s2
        assert_eq!(d.coxeter_matrix()[0][1], 2);
        assert_eq!(d.coxeter_matrix()[0][2], 3);
        assert_eq!(d.coxeter_matrix()[1][2], 3);
        assert_eq!(d.coxeter_matrix()[2][3], 3);
        assert_eq!(d.labels()[1], "s1'");
        let b = group(CoxeterFamily::B, 3);
        assert_eq!(b.coxeter_matrix()[1][2], 4);
    }

    #[test]
    fn longest_element_negates_positive_roots() {
        for (f, r) in [(CoxeterFamily::A, 4), (CoxeterFamily::D, 5), (CoxeterFamily::G2, 2), (CoxeterFamily::B, 4)] {
            let g = group(f, r);
            let w0 = g.longest_element();
            assert_eq!(g.length(&w0), g.num_positive_roots());
            assert_eq!(g.reduced_word(&w0).len(), g.num_positive_roots());
            assert_eq!(g.product(&g.reduced_word(&w0)), w0);
        }
    }

    #[test]
    fn parabolic_stabilizer_of_a2_in_a3() {
        let g = group(CoxeterFamily::A, 3);
        let caps = Caps::default();
        let a = Subspace::span(4, [qvec(&[1, -1, 0, 0]), qvec(&[0, 1, -1, 0])]);
        let perp = a.orthogonal_in(g.space());
        let wa = g
            .stabilizer_of_subspace(&perp, StabilizerMode::Pointwise, &caps)
            .unwrap();
        assert_eq!(wa.len(), 6);
        assert_eq!(g.parabolic_of(&a, &caps).unwrap(), wa);
    }

    #[test]
    fn trivial_stabilizers() {
        let g = group(CoxeterFamily::A, 3);
        let caps = Caps::default();
        let whole = g.space().clone();
        let s = g.stabilizer_of_subspace(&whole, StabilizerMode::Pointwise, &caps).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].is_identity());
        let zero = Subspace::zero(4);
        assert_eq!(
            g.stabilizer_of_subspace(&zero, StabilizerMode::Pointwise, &caps).unwrap().len(),
            24
        );
        assert_eq!(
            g.stabilizer_of_subspace(&whole, StabilizerMode::Setwise, &caps).unwrap().len(),
            24
        );
    }

    #[test]
    fn orbits() {
        let caps = Caps::default();
        let a3 = group(CoxeterFamily::A, 3);
        assert_eq!(a3.orbit_on_subspaces(a3.space(), &caps).unwrap().len(), 1);
        let root_line = Subspace::line(qvec(&[1, -1, 0, 0]));
        assert_eq!(a3.orbit_on_subspaces(&root_line, &caps).unwrap().len(), 6);

        let g2 = group(CoxeterFamily::G2, 2);
        let long = Subspace::line(qvec(&[-2, 1, 1]));
        let orbit = g2.orbit_on_subspaces(&long, &caps).unwrap();
        assert_eq!(orbit.len(), 3);
        // brute force over all 12 elements agrees
        let mut brute: Vec<_> = g2
            .enumerate(&caps)
            .unwrap()
            .iter()
            .map(|w| g2.apply_subspace(w, &long))
            .collect();
        brute.sort();
        brute.dedup();
        assert_eq!(brute, orbit);
    }

    #[test]
    fn roots_stable_under_every_element() {
        let caps = Caps::default();
        for (f, r) in [(CoxeterFamily::A, 4), (CoxeterFamily::B, 4), (CoxeterFamily::D, 4), (CoxeterFamily::G2, 2)] {
            let g = group(f, r);
            let roots: HashSet<Vec<Rational>> =
                (0..g.roots().len()).map(|k| g.root(k)).collect();
            for w in g.enumerate(&caps).unwrap() {
                let m = g.matrix(&w);
                for r in &roots {
                    assert!(roots.contains(&m.apply(r)));
                }
            }
        }
    }
}
