//! Point encodings `ω = (x, A₁, l₁, …, A_k, l_k)` and their stabilizers.
//!
//! `ℱ` lives on the dual side, so "the smallest element of `ℱ` containing
//! `x`" is read through orthogonals: `A₁` is the largest `F ∈ ℱ` with
//! `F ⊥ x`, and `A_{i+1}` is the largest `F ⊆ A_i` with `F ⊥ l_i`. The chain
//! stops when no such `F` exists. For `x` generic in `A^⊥` this gives
//! `A₁ = A` and `stab x = W_A`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{dot, parse_rational, rational_string_vec, Cyclotomic, Field, Rational};
use crate::arrangement::{GroupElement, ReflectionGroup, Subspace};
use crate::building::BuildingSet;
use crate::caps::Caps;
use crate::Error;

#[derive(Clone, Debug, PartialEq)]
pub struct ChainStep {
    pub subspace: Subspace,
    pub line: Vec<Cyclotomic>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointEncoding {
    pub x: Vec<Rational>,
    pub chain: Vec<ChainStep>,
}

/// A vector with rational coordinates (`["1","-1/2"]`) or cyclotomic ones
/// (`{"order": 4, "coords": [["0","1"], ["1"]]}`, each coordinate given by
/// its coefficients in powers of `ζ_order`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VectorJson {
    Rational(Vec<String>),
    Cyclotomic { order: u32, coords: Vec<Vec<String>> },
}

impl VectorJson {
    pub fn parse(&self) -> Result<Vec<Cyclotomic>, Error> {
        match self {
            VectorJson::Rational(v) => v
                .iter()
                .map(|s| Ok(Cyclotomic::from_rational(1, parse_rational(s)?)))
                .collect(),
            VectorJson::Cyclotomic { order, coords } => {
                if *order == 0 {
                    return Err(Error::Parse("cyclotomic order must be positive".into()));
                }
                coords
                    .iter()
                    .map(|c| {
                        let poly = c.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
                        Ok(if poly.is_empty() {
                            Cyclotomic::from_rational(*order, Rational::zero())
                        } else {
                            Cyclotomic::from_poly(*order, poly)
                        })
                    })
                    .collect()
            }
        }
    }

    pub fn from_vector(v: &[Cyclotomic]) -> Self {
        if let Some(q) = v.iter().map(Cyclotomic::to_rational).collect::<Option<Vec<_>>>() {
            return VectorJson::Rational(rational_string_vec(&q));
        }
        let order = v.iter().fold(1u32, |acc, c| num_integer::lcm(acc, c.order()));
        VectorJson::Cyclotomic {
            order,
            coords: v
                .iter()
                .map(|c| rational_string_vec(c.embed(order).coeffs()))
                .collect(),
        }
    }
}

/// Input of a point: `x` and the lines to attach along the chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointInput {
    pub x: Vec<String>,
    #[serde(default)]
    pub lines: Vec<VectorJson>,
}

/// Serialized normalized encoding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointEncodingJson {
    pub x: Vec<String>,
    pub chain: Vec<ChainStepJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStepJson {
    pub subspace: Vec<Vec<String>>,
    pub line: VectorJson,
}

impl PointEncoding {
    pub fn to_json(&self) -> PointEncodingJson {
        PointEncodingJson {
            x: rational_string_vec(&self.x),
            chain: self
                .chain
                .iter()
                .map(|s| ChainStepJson {
                    subspace: s.subspace.to_strings(),
                    line: VectorJson::from_vector(&s.line),
                })
                .collect(),
        }
    }
}

pub(crate) fn lift(v: &[Rational]) -> Vec<Cyclotomic> {
    v.iter().map(<Cyclotomic as Field>::from_rational).collect()
}

fn orthogonal_to(s: &Subspace, v: &[Cyclotomic]) -> bool {
    s.basis().iter().all(|r| dot(&lift(r), v).is_zero())
}

fn inside(s: &Subspace, v: &[Cyclotomic]) -> bool {
    orthogonal_to(&s.orthogonal(), v)
}

/// The unique inclusion-maximal candidate, an error if there are several.
fn unique_maximum(f: &BuildingSet, cands: &[usize], what: &str) -> Result<Option<usize>, Error> {
    let maximal: Vec<usize> = cands
        .iter()
        .copied()
        .filter(|&p| !cands.iter().any(|&q| q != p && f.contains(q, p)))
        .collect();
    match maximal.as_slice() {
        [] => Ok(None),
        [p] => Ok(Some(*p)),
        _ => Err(Error::NonUniqueMinimum(format!(
            "{what}: {}",
            maximal
                .iter()
                .map(|&p| format!("{:?}", f.element(p)))
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }
}

/// Canonical chain for `x` and the given lines. A line may be omitted when
/// its `A_i` is one-dimensional.
pub fn normalize_point_encoding(
    x: &[Rational],
    lines: &[Vec<Cyclotomic>],
    f: &BuildingSet,
) -> Result<PointEncoding, Error> {
    let space = f.space();
    if x.len() != space.ambient_dim() || !space.contains_vector(x) {
        return Err(Error::invalid("x does not lie in the space of the arrangement"));
    }
    let xs = lift(x);
    let cands: Vec<usize> = (0..f.len())
        .filter(|&p| orthogonal_to(f.element(p), &xs))
        .collect();
    let mut current = unique_maximum(f, &cands, "largest element orthogonal to x")?;
    let mut chain = Vec::new();
    let mut given = lines.iter();
    while let Some(a) = current {
        let sub = f.element(a).clone();
        let line = match given.next() {
            Some(l) => l.clone(),
            None if sub.dim() == 1 => lift(&sub.basis()[0]),
            None => {
                return Err(Error::invalid(format!(
                    "a line in {sub:?} is needed to continue the chain"
                )))
            }
        };
        if line.len() != sub.ambient_dim() || line.iter().all(Zero::is_zero) {
            return Err(Error::invalid("line must be a nonzero vector of the ambient dimension"));
        }
        if !inside(&sub, &line) {
            return Err(Error::invalid(format!("line does not lie in {sub:?}")));
        }
        let cands: Vec<usize> = (0..f.len())
            .filter(|&p| f.contains(a, p) && p != a && orthogonal_to(f.element(p), &line))
            .collect();
        current = unique_maximum(f, &cands, "largest element orthogonal to the line")?;
        chain.push(ChainStep {
            subspace: sub,
            line,
        });
    }
    if given.next().is_some() {
        return Err(Error::invalid("more lines given than the chain has steps"));
    }
    Ok(PointEncoding {
        x: x.to_vec(),
        chain,
    })
}

/// `w·v ∈ span(v)`; returns the ratio.
pub(crate) fn scalar_on_vector(g: &ReflectionGroup, w: &GroupElement, v: &[Cyclotomic]) -> Option<Cyclotomic> {
    let img = g.apply(w, v);
    let k = v.iter().position(|c| !c.is_zero())?;
    let ratio = img[k].clone() * v[k].inverse();
    img.iter()
        .zip(v)
        .all(|(a, b)| *a == ratio.clone() * b.clone())
        .then_some(ratio)
}

/// `w` acts on `s` as a scalar; returns it.
pub(crate) fn scalar_on(g: &ReflectionGroup, w: &GroupElement, s: &Subspace) -> Option<Rational> {
    let mut ratio: Option<Rational> = None;
    for b in s.basis() {
        let img = g.apply(w, b);
        let k = b.iter().position(|c| !c.is_zero())?;
        let r = &img[k] / &b[k];
        if img.iter().zip(b).any(|(a, c)| *a != &r * c) {
            return None;
        }
        match &ratio {
            Some(q) if *q != r => return None,
            _ => ratio = Some(r),
        }
    }
    Some(ratio.unwrap_or_else(num_traits::One::one))
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilizerReport {
    pub elements: Vec<GroupElement>,
    pub order: usize,
    /// Every element acts as a scalar on `A₁` (on `V` for the encoding
    /// `(x)`).
    pub is_cyclic_scalar: bool,
}

/// `stab x ∩ stab l₁ ∩ ⋯ ∩ stab l_k`, lines stabilized setwise.
pub fn stabilizer_of_point(
    omega: &PointEncoding,
    g: &ReflectionGroup,
    caps: &Caps,
) -> Result<StabilizerReport, Error> {
    let elements: Vec<GroupElement> = g
        .enumerate(caps)?
        .into_iter()
        .filter(|w| g.apply(w, &omega.x) == omega.x)
        .filter(|w| {
            omega
                .chain
                .iter()
                .all(|s| scalar_on_vector(g, w, &s.line).is_some())
        })
        .collect();
    let relevant = omega
        .chain
        .first()
        .map(|s| s.subspace.clone())
        .unwrap_or_else(|| g.space().clone());
    let is_cyclic_scalar = elements.iter().all(|w| scalar_on(g, w, &relevant).is_some());
    Ok(StabilizerReport {
        order: elements.len(),
        elements,
        is_cyclic_scalar,
    })
}

/// A point of `A^⊥ ∩ V` lying on exactly the hyperplanes that contain
/// `A^⊥`, so that `stab x = W_A`.
pub fn generic_point_in_orthogonal(a: &Subspace, g: &ReflectionGroup) -> Vec<Rational> {
    let perp = a.orthogonal_in(g.space());
    let n = g.ambient_dim();
    if perp.is_zero() {
        return vec![Rational::zero(); n];
    }
    let others: Vec<Vec<Rational>> = (0..g.num_positive_roots())
        .map(|k| g.root(k))
        .filter(|r| !a.contains_vector(r))
        .collect();
    let mut t = Rational::from_integer(1.into());
    loop {
        let mut x = vec![Rational::zero(); n];
        let mut c = t.clone();
        for b in perp.basis() {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += &c * bi;
            }
            c *= &t;
        }
        if others.iter().all(|r| !dot(r, &x).is_zero()) {
            return x;
        }
        t += Rational::from_integer(1.into());
    }
}
