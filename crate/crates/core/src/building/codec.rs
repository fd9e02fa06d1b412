//! Set-theoretic labels for the irreducibles of the braid arrangement `S_n`
//! and of type `D_n`.
//!
//! `S_n`: a subset `I ⊆ {1..n}` with `|I| ≥ 2` labels the span of the
//! `e_i − e_j`, `i, j ∈ I`.
//!
//! `D_n`: a strong label `{0} ∪ I` with `|I| ≥ 3` labels the span of the
//! `e_i`, `i ∈ I`; a weak label `{i₁, ε₂i₂, …, ε_k i_k}` with `i₁ < ⋯ < i_k`
//! labels the span of the `e_{i₁} − ε_j e_{i_j}`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::arrangement::{CoxeterFamily, Subspace};
use crate::Error;

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i - 1] = Rational::one();
    v
}

fn combo(n: usize, i: usize, j: usize, sign: i64) -> Vec<Rational> {
    let mut v = unit(n, i);
    v[j - 1] = Rational::from_integer((-sign).into());
    v
}

/// Coordinates (1-based) on which some vector of `s` is nonzero.
fn support(s: &Subspace) -> Vec<usize> {
    (0..s.ambient_dim())
        .filter(|&c| s.basis().iter().any(|r| !r[c].is_zero()))
        .map(|c| c + 1)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SnLabel(pub Vec<usize>);

impl SnLabel {
    /// Sorts and validates `|I| ≥ 2` with entries in `1..=n`.
    pub fn new(n: usize, mut set: Vec<usize>) -> Result<Self, Error> {
        set.sort_unstable();
        set.dedup();
        if set.len() < 2 || set[0] == 0 || *set.last().unwrap() > n {
            return Err(Error::invalid(format!("{set:?} is not a subset of 1..{n} of size ≥ 2")));
        }
        Ok(SnLabel(set))
    }
}

impl fmt::Display for SnLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

pub fn sn_label_to_subspace(n: usize, label: &SnLabel) -> Subspace {
    let first = label.0[0];
    Subspace::span(n, label.0[1..].iter().map(|&j| combo(n, first, j, 1)))
}

pub fn sn_label_of(s: &Subspace) -> Result<SnLabel, Error> {
    let label = SnLabel::new(s.ambient_dim(), support(s)).map_err(|_| Error::NotInBuildingSet)?;
    if sn_label_to_subspace(s.ambient_dim(), &label) == *s {
        Ok(label)
    } else {
        Err(Error::NotInBuildingSet)
    }
}

fn laminar(a: &[usize], b: &[usize]) -> bool {
    let inter = a.iter().filter(|x| b.contains(x)).count();
    inter == 0 || inter == a.len() || inter == b.len()
}

/// Pairwise nested or disjoint.
pub fn sn_labels_nested(labels: &[SnLabel]) -> bool {
    labels
        .iter()
        .enumerate()
        .all(|(k, a)| labels[k + 1..].iter().all(|b| laminar(&a.0, &b.0)))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DnLabel {
    /// `{0} ∪ I`, stored without the 0.
    Strong(Vec<usize>),
    /// Signed entries ordered by absolute value, the first one positive.
    Weak(Vec<i64>),
}

impl DnLabel {
    /// Underlying subset of `{0..n}` once weights are forgotten.
    pub fn set(&self) -> Vec<usize> {
        match self {
            DnLabel::Strong(s) => std::iter::once(0).chain(s.iter().copied()).collect(),
            DnLabel::Weak(w) => w.iter().map(|x| x.unsigned_abs() as usize).collect(),
        }
    }

    pub fn strong(n: usize, mut set: Vec<usize>) -> Result<Self, Error> {
        set.sort_unstable();
        set.dedup();
        if set.len() < 3 || set[0] == 0 || *set.last().unwrap() > n {
            return Err(Error::invalid(format!("{set:?} is not a strong label for D{n}")));
        }
        Ok(DnLabel::Strong(set))
    }

    /// Normalizes so the smallest index carries a positive sign.
    pub fn weak(n: usize, mut entries: Vec<i64>) -> Result<Self, Error> {
        entries.sort_by_key(|x| x.abs());
        let ok = entries.len() >= 2
            && entries.iter().all(|&x| x != 0 && x.unsigned_abs() as usize <= n)
            && entries.windows(2).all(|w| w[0].abs() != w[1].abs());
        if !ok {
            return Err(Error::invalid(format!("{entries:?} is not a weak label for D{n}")));
        }
        if entries[0] < 0 {
            entries.iter_mut().for_each(|x| *x = -*x);
        }
        Ok(DnLabel::Weak(entries))
    }
}

impl fmt::Display for DnLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = match self {
            DnLabel::Strong(s) => std::iter::once(0)
                .chain(s.iter().copied())
                .map(|i| i.to_string())
                .collect(),
            DnLabel::Weak(w) => w.iter().map(|i| i.to_string()).collect(),
        };
        write!(f, "{{{}}}", items.join(","))
    }
}

pub fn dn_label_to_subspace(n: usize, label: &DnLabel) -> Subspace {
    match label {
        DnLabel::Strong(s) => Subspace::span(n, s.iter().map(|&i| unit(n, i))),
        DnLabel::Weak(w) => {
            let first = w[0] as usize;
            Subspace::span(
                n,
                w[1..]
                    .iter()
                    .map(|&j| combo(n, first, j.unsigned_abs() as usize, j.signum())),
            )
        }
    }
}

pub fn dn_label_of(s: &Subspace) -> Result<DnLabel, Error> {
    let n = s.ambient_dim();
    let sup = support(s);
    if sup.len() < 2 {
        return Err(Error::NotInBuildingSet);
    }
    let label = if s.contains_vector(&unit(n, sup[0])) {
        DnLabel::strong(n, sup)
    } else {
        let first = sup[0];
        let mut entries = vec![first as i64];
        for &j in &sup[1..] {
            if s.contains_vector(&combo(n, first, j, 1)) {
                entries.push(j as i64);
            } else if s.contains_vector(&combo(n, first, j, -1)) {
                entries.push(-(j as i64));
            } else {
                return Err(Error::NotInBuildingSet);
            }
        }
        DnLabel::weak(n, entries)
    }
    .map_err(|_| Error::NotInBuildingSet)?;
    if dn_label_to_subspace(n, &label) == *s {
        Ok(label)
    } else {
        Err(Error::NotInBuildingSet)
    }
}

fn sign_of(w: &[i64], i: usize) -> Option<i64> {
    w.iter()
        .find(|x| x.unsigned_abs() as usize == i)
        .map(|x| x.signum())
}

/// Weights of `small` agree with those of `big` on the common indices up to
/// a global sign.
fn weights_compatible(small: &[i64], big: &[i64]) -> bool {
    [1, -1].iter().any(|&flip| {
        small
            .iter()
            .all(|x| sign_of(big, x.unsigned_abs() as usize) == Some(x.signum() * flip))
    })
}

/// Labels `{i, j}` and `{i, −j}`.
fn conflicting(a: &DnLabel, b: &DnLabel) -> bool {
    match (a, b) {
        (DnLabel::Weak(x), DnLabel::Weak(y)) => {
            x.len() == 2 && y.len() == 2 && x[0] == y[0] && x[1] == -y[1]
        }
        _ => false,
    }
}

/// Ignoring weights, nested or disjoint; weak labels in inclusion carry
/// compatible weights.
fn pair_rule(a: &DnLabel, b: &DnLabel) -> bool {
    let (sa, sb) = (a.set(), b.set());
    if !laminar(&sa, &sb) {
        return false;
    }
    match (a, b) {
        (DnLabel::Weak(x), DnLabel::Weak(y)) => {
            let inter = sa.iter().filter(|i| sb.contains(i)).count();
            if inter == 0 {
                true
            } else if x.len() <= y.len() {
                weights_compatible(x, y)
            } else {
                weights_compatible(y, x)
            }
        }
        _ => true,
    }
}

/// Nestedness of a family of `D_n` labels:
///
/// * strong labels form a chain;
/// * at most one pair `{i, j}, {i, −j}` occurs, and then every other label
///   `B` has `B ∩ {i, j} = ∅` or `{0, i, j} ⊊ B`;
/// * every other pair obeys the nested-or-disjoint rule with compatible
///   weights.
pub fn dn_labels_nested(labels: &[DnLabel]) -> bool {
    let mut labels = labels.to_vec();
    labels.sort();
    labels.dedup();
    let strong: Vec<Vec<usize>> = labels
        .iter()
        .filter_map(|l| matches!(l, DnLabel::Strong(_)).then(|| l.set()))
        .collect();
    let chain = strong.iter().enumerate().all(|(k, a)| {
        strong[k + 1..]
            .iter()
            .all(|b| a.iter().all(|x| b.contains(x)) || b.iter().all(|x| a.contains(x)))
    });
    if !chain {
        return false;
    }

    let mut pairs = Vec::new();
    for (k, a) in labels.iter().enumerate() {
        for (m, b) in labels.iter().enumerate().skip(k + 1) {
            if conflicting(a, b) {
                pairs.push((k, m));
            }
        }
    }
    match pairs.as_slice() {
        [] => {}
        [(k, m)] => {
            let ij = labels[*k].set();
            for (t, b) in labels.iter().enumerate() {
                if t == *k || t == *m {
                    continue;
                }
                let sb = b.set();
                let disjoint = ij.iter().all(|x| !sb.contains(x));
                let above = sb.len() > 3 && sb.contains(&0) && ij.iter().all(|x| sb.contains(x));
                if !disjoint && !above {
                    return false;
                }
            }
        }
        _ => return false,
    }

    labels.iter().enumerate().all(|(k, a)| {
        labels[k + 1..]
            .iter()
            .all(|b| conflicting(a, b) || pair_rule(a, b))
    })
}

/// Codec label of an element of `ℱ` for types A and D, if it has one.
pub fn codec_label(family: CoxeterFamily, s: &Subspace) -> Option<String> {
    match family {
        CoxeterFamily::A => sn_label_of(s).ok().map(|l| l.to_string()),
        CoxeterFamily::D => dn_label_of(s).ok().map(|l| l.to_string()),
        _ => None,
    }
}
