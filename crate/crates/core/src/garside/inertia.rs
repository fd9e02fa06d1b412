//! Inertia elements `z_A` and `ζ_A` of standard parabolic subgroups.

use serde::Serialize;

use super::{words_equal, word_of, BraidWord};
use crate::arrangement::{GroupElement, ReflectionGroup, Subspace};
use crate::caps::Caps;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InertiaElement {
    /// Alphabet indices of the standard parabolic.
    pub subset: Vec<usize>,
    /// Its irreducible components.
    pub components: Vec<Vec<usize>>,
    /// Full twist of the parabolic, a generator of the center of its pure
    /// braid group (a product over the components when reducible).
    pub z: BraidWord,
    /// Smallest central power of Δ of the parabolic (product over the
    /// components when reducible).
    pub zeta: BraidWord,
    /// `|Z(W_K)|` for each component `K`.
    pub center_orders: Vec<usize>,
}

#[derive(Serialize)]
struct InertiaJson {
    subset: Vec<String>,
    components: Vec<Vec<String>>,
    z: String,
    zeta: String,
    center_orders: Vec<usize>,
}

impl InertiaElement {
    pub fn to_json(&self, g: &ReflectionGroup) -> serde_json::Value {
        let names = |v: &[usize]| v.iter().map(|&i| g.labels()[i].clone()).collect();
        serde_json::to_value(InertiaJson {
            subset: names(&self.subset),
            components: self.components.iter().map(|c| names(c)).collect(),
            z: self.z.to_string_with(g),
            zeta: self.zeta.to_string_with(g),
            center_orders: self.center_orders.clone(),
        })
        .expect("plain data serializes")
    }
}

/// Connected components of `subset` in the Coxeter graph.
pub fn parabolic_components(g: &ReflectionGroup, subset: &[usize]) -> Vec<Vec<usize>> {
    let mut left: Vec<usize> = subset.to_vec();
    left.sort_unstable();
    left.dedup();
    let mut out = Vec::new();
    while let Some(start) = left.first().copied() {
        let mut comp = vec![start];
        left.retain(|&x| x != start);
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            let (linked, rest): (Vec<usize>, Vec<usize>) =
                left.iter().partition(|&&j| g.coxeter_matrix()[i][j] >= 3);
            comp.extend(linked);
            left = rest;
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// `z_A` and `ζ_A` for the standard parabolic on `subset`.
pub fn inertia_element(g: &ReflectionGroup, subset: &[usize]) -> Result<InertiaElement, Error> {
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    if subset.is_empty() || subset.iter().any(|&i| i >= g.rank()) {
        return Err(Error::invalid(format!(
            "parabolic subset must be a nonempty set of generators 1..{}",
            g.rank()
        )));
    }
    let components = parabolic_components(g, &subset);
    let mut z = BraidWord::empty(g.cartan());
    let mut zeta = BraidWord::empty(g.cartan());
    let mut center_orders = Vec::new();
    for k in &components {
        let w0 = g.longest_element_of(k);
        let delta = word_of(g, g.reduced_word(&w0));
        let central = k.iter().all(|&i| {
            let s = g.generator(i);
            w0.compose(s) == s.compose(&w0)
        });
        center_orders.push(if central { 2 } else { 1 });
        z = z.concat(&delta.pow(2));
        zeta = zeta.concat(&if central { delta } else { delta.pow(2) });
    }
    for &i in &subset {
        let s = word_of(g, [i]);
        for x in [&z, &zeta] {
            if !words_equal(g, &x.concat(&s), &s.concat(x))? {
                return Err(Error::invalid(format!(
                    "inertia element fails to commute with {}",
                    g.labels()[i]
                )));
            }
        }
    }
    Ok(InertiaElement {
        subset,
        components,
        z,
        zeta,
        center_orders,
    })
}

/// Simple roots spanning `b`, if `b` is a standard parabolic subspace.
fn standard_subset(g: &ReflectionGroup, b: &Subspace) -> Option<Vec<usize>> {
    let subset: Vec<usize> = (0..g.rank())
        .filter(|&i| b.contains_vector(&g.root(g.simple_indices()[i])))
        .collect();
    let span = Subspace::span(
        b.ambient_dim(),
        subset.iter().map(|&i| g.root(g.simple_indices()[i])),
    );
    (!subset.is_empty() && span == *b).then_some(subset)
}

/// Inertia elements of a subspace `A` that `conj` carries onto a standard
/// parabolic `A_J`: the words for `A_J` conjugated by the positive lift of
/// `conj`.
pub fn inertia_element_for_subspace(
    g: &ReflectionGroup,
    a: &Subspace,
    conj: &GroupElement,
) -> Result<InertiaElement, Error> {
    let b = g.apply_subspace(conj, a);
    let subset = standard_subset(g, &b).ok_or_else(|| {
        Error::invalid(format!(
            "the given element does not carry {a:?} onto a standard parabolic"
        ))
    })?;
    let base = inertia_element(g, &subset)?;
    let lift = word_of(g, g.reduced_word(conj));
    let conjugate = |x: &BraidWord| lift.inverse().concat(x).concat(&lift);
    Ok(InertiaElement {
        z: conjugate(&base.z),
        zeta: conjugate(&base.zeta),
        ..base
    })
}

/// Shortest `w` carrying `A` onto a standard parabolic, with the subset.
pub fn find_standard_conjugator(
    g: &ReflectionGroup,
    a: &Subspace,
    caps: &Caps,
) -> Result<(GroupElement, Vec<usize>), Error> {
    for w in g.enumerate(caps)? {
        if let Some(subset) = standard_subset(g, &g.apply_subspace(&w, a)) {
            return Ok((w, subset));
        }
    }
    Err(Error::invalid(format!(
        "{a:?} is not conjugate to a standard parabolic"
    )))
}
