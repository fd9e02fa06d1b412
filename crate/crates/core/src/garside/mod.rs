//! Artin-Tits groups of spherical type: braid words, the left-greedy normal
//! form, the Garside elements Δ and Δ*, centers and inertia elements of
//! parabolic subgroups.
//!
//! Simples are the elements of W (lifted to positive braids). Letters are
//! numbered by alphabet position, `+k` for the k-th generator and `-k` for its
//! inverse.

mod inertia;
mod word;

pub use inertia::{
    find_standard_conjugator, inertia_element, inertia_element_for_subspace, parabolic_components,
    InertiaElement,
};
pub use word::BraidWord;

use num_integer::Integer;
use serde::Serialize;

use crate::arrangement::{CoxeterFamily, GroupElement, ReflectionGroup};
use crate::caps::Caps;
use crate::Error;

/// `Δ^p · x₁ ⋯ x_k` with each `xᵢ` a proper nonidentity simple and every
/// consecutive pair left-weighted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    pub delta_power: i64,
    pub simples: Vec<GroupElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalFormJson {
    pub delta_power: i64,
    pub simples: Vec<Vec<String>>,
}

impl GarsideNormalForm {
    /// Reduced words of the simples, as alphabet indices.
    pub fn simple_words(&self, g: &ReflectionGroup) -> Vec<Vec<usize>> {
        self.simples.iter().map(|s| g.reduced_word(s)).collect()
    }

    /// A word representing the same braid.
    pub fn to_word(&self, g: &ReflectionGroup) -> BraidWord {
        let delta = garside_delta(g).pow(self.delta_power);
        let rest: Vec<i32> = self
            .simple_words(g)
            .into_iter()
            .flatten()
            .map(|i| i as i32 + 1)
            .collect();
        delta.concat(&BraidWord::from_letters(g.cartan(), rest))
    }

    pub fn to_json(&self, g: &ReflectionGroup) -> NormalFormJson {
        NormalFormJson {
            delta_power: self.delta_power,
            simples: self
                .simple_words(g)
                .into_iter()
                .map(|w| w.into_iter().map(|i| g.labels()[i].clone()).collect())
                .collect(),
        }
    }

    /// `Δ^p · [s1 s2] [s1]`.
    pub fn describe(&self, g: &ReflectionGroup) -> String {
        let mut out = format!("Δ^{}", self.delta_power);
        for w in self.simple_words(g) {
            let names: Vec<&str> = w.iter().map(|&i| g.labels()[i].as_str()).collect();
            out.push_str(&format!(" · [{}]", names.join(" ")));
        }
        out
    }
}

/// `w₀ x w₀`, the action of conjugation by Δ on simples.
fn tau(w0: &GroupElement, x: &GroupElement) -> GroupElement {
    w0.compose(x).compose(w0)
}

/// Make `(a, b)` left-weighted by moving generators from the front of `b` to
/// the back of `a`. Returns whether anything moved.
fn left_weight(g: &ReflectionGroup, a: &mut GroupElement, b: &mut GroupElement) -> bool {
    let mut moved = false;
    loop {
        let ra = g.right_descents(a);
        let lb = g.left_descents(b);
        match (0..g.rank()).find(|&i| lb[i] && !ra[i]) {
            Some(i) => {
                let s = g.generator(i);
                *a = a.compose(s);
                *b = s.compose(b);
                moved = true;
            }
            None => return moved,
        }
    }
}

/// Canonical form of a braid word.
pub fn left_greedy_nf(g: &ReflectionGroup, w: &BraidWord) -> Result<GarsideNormalForm, Error> {
    check_tag(g, w)?;
    let w0 = g.longest_element();
    let letters = w.letters();
    let negatives = letters.iter().filter(|&&l| l < 0).count();

    // σ⁻¹ = Δ⁻¹·(w₀s); each Δ⁻¹ is pushed left past the simples before it,
    // twisting them by τ.
    let mut positive: Vec<GroupElement> = Vec::with_capacity(letters.len());
    let mut right = negatives;
    for &l in letters {
        let s = g.generator(l.unsigned_abs() as usize - 1);
        let x = if l < 0 {
            right -= 1;
            w0.compose(s)
        } else {
            s.clone()
        };
        positive.push(if right % 2 == 1 { tau(&w0, &x) } else { x });
    }

    let mut nf: Vec<GroupElement> = Vec::new();
    for x in positive {
        if x.is_identity() {
            continue;
        }
        nf.push(x);
        let mut j = nf.len() - 1;
        while j > 0 {
            let (head, tail) = nf.split_at_mut(j);
            if !left_weight(g, &mut head[j - 1], &mut tail[0]) {
                break;
            }
            j -= 1;
        }
        while nf.last().is_some_and(GroupElement::is_identity) {
            nf.pop();
        }
    }

    let mut power = -(negatives as i64);
    let leading = nf.iter().take_while(|x| **x == w0).count();
    power += leading as i64;
    nf.drain(..leading);
    Ok(GarsideNormalForm {
        delta_power: power,
        simples: nf,
    })
}

fn check_tag(g: &ReflectionGroup, w: &BraidWord) -> Result<(), Error> {
    if w.cartan() != g.cartan() {
        return Err(Error::GroupMismatch(
            w.cartan().to_string(),
            g.cartan().to_string(),
        ));
    }
    Ok(())
}

pub fn words_equal(g: &ReflectionGroup, u: &BraidWord, v: &BraidWord) -> Result<bool, Error> {
    if u.cartan() != v.cartan() {
        return Err(Error::GroupMismatch(
            u.cartan().to_string(),
            v.cartan().to_string(),
        ));
    }
    Ok(left_greedy_nf(g, u)? == left_greedy_nf(g, v)?)
}

/// Image in W of a braid word.
pub fn image_in_w(g: &ReflectionGroup, w: &BraidWord) -> GroupElement {
    let word: Vec<usize> = w
        .letters()
        .iter()
        .map(|l| l.unsigned_abs() as usize - 1)
        .collect();
    g.product(&word)
}

fn word_of(g: &ReflectionGroup, idx: impl IntoIterator<Item = usize>) -> BraidWord {
    BraidWord::from_letters(g.cartan(), idx.into_iter().map(|i| i as i32 + 1).collect())
}

/// The positive lift of `w₀`, written as in the classical examples:
/// `σ₁(σ₂σ₁)⋯(σ_r⋯σ₁)` in type A, `(s₁s₁′s₂⋯s_{n−1})^{n−1}` in type D,
/// `(s₁⋯s_r)^r` in type B and `(st)³` for G₂.
pub fn garside_delta(g: &ReflectionGroup) -> BraidWord {
    let r = g.rank();
    match g.cartan().family {
        CoxeterFamily::A => word_of(g, (0..r).flat_map(|k| (0..=k).rev())),
        CoxeterFamily::B => word_of(g, (0..r).flat_map(|_| 0..r)),
        CoxeterFamily::D => word_of(g, (0..r - 1).flat_map(|_| 0..r)),
        CoxeterFamily::G2 => word_of(g, [0, 1, 0, 1, 0, 1]),
    }
}

/// Lift of a Coxeter element: `σ₁⋯σ_r` in types A, B and G₂, and the
/// bipartite `(s₁s₁′s₃s₅⋯)(s₂s₄⋯)` in type D.
pub fn dual_delta(g: &ReflectionGroup) -> BraidWord {
    let r = g.rank();
    match g.cartan().family {
        CoxeterFamily::D => {
            // alphabet: s1 = 0, s1' = 1, s_k = k for k ≥ 2
            let odd = [0, 1].into_iter().chain((3..r).step_by(2));
            let even = (2..r).step_by(2);
            word_of(g, odd.chain(even))
        }
        _ => word_of(g, 0..r),
    }
}

/// Commutes with every generator.
pub fn is_central(g: &ReflectionGroup, w: &BraidWord) -> Result<bool, Error> {
    for i in 0..g.rank() {
        let s = word_of(g, [i]);
        if !words_equal(g, &w.concat(&s), &s.concat(w))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterReport {
    /// Generator of `Z(B(W))`: Δ when central, otherwise Δ².
    pub beta: BraidWord,
    /// Generator of `Z(P(W))`, the full twist Δ².
    pub pi: BraidWord,
    /// `gcd` of the degrees.
    pub z_of_w: usize,
    /// `|Z(W)|` by brute force, when the group is small enough to enumerate.
    pub z_brute_force: Option<usize>,
    /// `β^{|Z(W)|} = π` as braids.
    pub relation_checked: bool,
    pub beta_central: bool,
    pub pi_central: bool,
}

pub fn center_report(g: &ReflectionGroup, caps: &Caps) -> Result<CenterReport, Error> {
    let delta = garside_delta(g);
    let pi = delta.pow(2);
    let beta = if is_central(g, &delta)? { delta } else { pi.clone() };
    let z_of_w = g.degrees().iter().fold(0u32, |a, &d| a.gcd(&d)) as usize;
    let z_brute_force = if g.group_order() as usize <= caps.group_order {
        Some(g.center(caps)?.len())
    } else {
        None
    };
    let relation_checked = words_equal(g, &beta.pow(z_of_w as i64), &pi)?;
    Ok(CenterReport {
        beta_central: is_central(g, &beta)?,
        pi_central: is_central(g, &pi)?,
        beta,
        pi,
        z_of_w,
        z_brute_force,
        relation_checked,
    })
}

/// `rank − dim Fix(w)`.
pub fn reflection_length(g: &ReflectionGroup, w: &GroupElement) -> usize {
    g.reflection_length(w)
}

/// `w ≤ c` in the absolute order.
pub fn absolute_order_below(g: &ReflectionGroup, w: &GroupElement, c: &GroupElement) -> bool {
    g.absolute_order_below(w, c)
}

/// Relators `u v⁻¹` for the braid relations `⟨st⟩^m = ⟨ts⟩^m`.
pub fn braid_relators(g: &ReflectionGroup) -> Vec<BraidWord> {
    let r = g.rank();
    let mut out = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let m = g.coxeter_matrix()[i][j] as usize;
            let alt = |a: usize, b: usize| -> Vec<usize> {
                (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect()
            };
            let u = word_of(g, alt(i, j));
            let v = word_of(g, alt(j, i));
            out.push(u.concat(&v.inverse()));
        }
    }
    out
}
