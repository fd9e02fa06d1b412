//! Regular elements and Springer-generic lines.

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::point::{lift, scalar_on, scalar_on_vector};
use crate::arith::{dot, eigenspace, Cyclotomic, Rational};
use crate::arrangement::{GroupElement, ReflectionGroup, Subspace};
use crate::caps::Caps;
use crate::Error;

#[derive(Clone, Debug, PartialEq)]
pub struct RegularReport {
    pub regular: bool,
    /// `(m, j)` for the eigenvalue `ζ_m^j` of the witness.
    pub eigenvalue: Option<(u32, i64)>,
    /// An eigenvector on no reflecting hyperplane.
    pub witness: Option<Vec<Cyclotomic>>,
}

/// `Σ tⁱ bᵢ` for `t = 1, 2, …` until `accept` holds. Returns `None` after
/// `limit` tries.
fn moment_curve<T: Clone + Zero + std::ops::Add<Output = T> + std::ops::Mul<Output = T>>(
    basis: &[Vec<T>],
    scalar: impl Fn(i64) -> T,
    limit: i64,
    mut accept: impl FnMut(&[T]) -> bool,
) -> Option<Vec<T>> {
    let n = basis.first()?.len();
    for t in 1..=limit {
        let mut v = vec![T::zero(); n];
        let mut c = 1i64;
        for b in basis {
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi = vi.clone() + scalar(c) * bi.clone();
            }
            c *= t;
        }
        if accept(&v) {
            return Some(v);
        }
    }
    None
}

fn off_roots(roots: &[Vec<Cyclotomic>], v: &[Cyclotomic]) -> bool {
    roots.iter().all(|r| !dot(r, v).is_zero())
}

/// Whether `w` has an eigenvector in `V` on none of the reflecting
/// hyperplanes, with such an eigenvector as witness.
pub fn is_regular_element(w: &GroupElement, g: &ReflectionGroup) -> RegularReport {
    let m = g.matrix(w);
    let order = g.element_order(w) as u32;
    let constraints = g.space().orthogonal().basis().to_vec();
    let roots: Vec<Vec<Cyclotomic>> = g.positive_roots().iter().map(|r| lift(r)).collect();
    for d in (1..=order).filter(|d| order % d == 0) {
        for j in (0..d as i64).filter(|&j| j.gcd(&(d as i64)) == 1) {
            let basis = eigenspace(&m, d, j, &constraints);
            if basis.is_empty() {
                continue;
            }
            let covers = roots
                .iter()
                .all(|r| basis.iter().any(|b| !dot(r, b).is_zero()));
            if !covers {
                continue;
            }
            let limit = (basis.len() * roots.len() + 2) as i64;
            let one = |c: i64| Cyclotomic::from_rational(1, Rational::from_integer(c.into()));
            let witness = moment_curve(&basis, one, limit, |v| off_roots(&roots, v))
                .expect("an eigenspace on no hyperplane has a point off all of them");
            return RegularReport {
                regular: true,
                eigenvalue: Some((d, j)),
                witness: Some(witness),
            };
        }
    }
    RegularReport {
        regular: false,
        eigenvalue: None,
        witness: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpringerReport {
    /// Every element of `W_A` stabilizing `l` is a scalar on `A`.
    pub generic: bool,
    pub stabilizer_order: usize,
    /// `|Z(W_A)|`.
    pub center_order: usize,
    /// The stabilizer of `l` in `W_A` is exactly `Z(W_A)`.
    pub stabilizer_is_center: bool,
    /// Order of the scalar by which a generator of the stabilizer acts on
    /// `A`, when generic.
    pub scalar_order: Option<usize>,
    /// The quotient divisor is smooth at the image point.
    pub smooth: bool,
}

fn check_root_subspace(a: &Subspace, g: &ReflectionGroup) -> Result<Vec<usize>, Error> {
    let roots = g.positive_roots_in(a);
    let span = Subspace::span(a.ambient_dim(), roots.iter().map(|&k| g.root(k)));
    if a.is_zero() || span != *a {
        return Err(Error::invalid(format!("{a:?} is not spanned by roots")));
    }
    Ok(roots)
}

/// Decide Springer genericity of the line `l ⊆ A` for the action of `W_A`.
pub fn is_springer_generic(
    a: &Subspace,
    l: &[Cyclotomic],
    g: &ReflectionGroup,
    caps: &Caps,
) -> Result<SpringerReport, Error> {
    let roots = check_root_subspace(a, g)?;
    if l.len() != a.ambient_dim() || l.iter().all(Zero::is_zero) {
        return Err(Error::invalid("line must be a nonzero vector of the ambient dimension"));
    }
    let inside = a
        .orthogonal()
        .basis()
        .iter()
        .all(|r| dot(&lift(r), l).is_zero());
    if !inside {
        return Err(Error::invalid(format!("line does not lie in {a:?}")));
    }
    let lifted: Vec<Vec<Cyclotomic>> = roots.iter().map(|&k| lift(&g.root(k))).collect();
    if !off_roots(&lifted, l) {
        return Err(Error::invalid("line lies on a reflecting hyperplane of W_A"));
    }

    let wa = g.parabolic_of(a, caps)?;
    let refl: Vec<GroupElement> = roots.iter().map(|&k| g.reflection(k)).collect();
    let center: Vec<&GroupElement> = wa
        .iter()
        .filter(|w| refl.iter().all(|r| w.compose(r) == r.compose(w)))
        .collect();
    let stab: Vec<&GroupElement> = wa
        .iter()
        .filter(|w| scalar_on_vector(g, w, l).is_some())
        .collect();
    let scalars: Vec<Rational> = stab.iter().filter_map(|w| scalar_on(g, w, a)).collect();
    let generic = scalars.len() == stab.len();
    let stabilizer_is_center = stab == center;
    let scalar_order = generic.then(|| stab.len());
    Ok(SpringerReport {
        generic,
        stabilizer_order: stab.len(),
        center_order: center.len(),
        stabilizer_is_center,
        scalar_order,
        smooth: generic,
    })
}

/// A rational Springer-generic line in `A`, searched along the moment curve
/// of the echelon basis of `A`.
pub fn springer_generic_line(
    a: &Subspace,
    g: &ReflectionGroup,
    caps: &Caps,
) -> Result<Vec<Rational>, Error> {
    let roots = check_root_subspace(a, g)?;
    let rs: Vec<Vec<Rational>> = roots.iter().map(|&k| g.root(k)).collect();
    let q = |c: i64| Rational::from_integer(c.into());
    let mut found = None;
    let mut err = None;
    moment_curve(a.basis(), q, 256, |v| {
        if rs.iter().any(|r| dot(r, v).is_zero()) {
            return false;
        }
        match is_springer_generic(a, &lift(v), g, caps) {
            Ok(rep) if rep.generic => {
                found = Some(v.to_vec());
                true
            }
            Ok(_) => false,
            Err(e) => {
                err = Some(e);
                true
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    found.ok_or_else(|| Error::invalid(format!("no Springer-generic line found in {a:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{qvec, Field};
    use crate::arrangement::{CartanType, CoxeterFamily};

    fn group(f: CoxeterFamily, r: usize) -> ReflectionGroup {
        ReflectionGroup::new(CartanType::new(f, r).unwrap()).unwrap()
    }

    #[test]
    fn identity_and_coxeter_are_regular() {
        for (f, r) in [(CoxeterFamily::A, 3), (CoxeterFamily::G2, 2), (CoxeterFamily::B, 3)] {
            let g = group(f, r);
            assert!(is_regular_element(&g.identity(), &g).regular);
            let rep = is_regular_element(&g.coxeter_element(), &g);
            assert!(rep.regular, "{f:?}{r}");
            let v = rep.witness.unwrap();
            let (m, j) = rep.eigenvalue.unwrap();
            let zeta = Cyclotomic::root_of_unity(m, j);
            let img = g.apply(&g.coxeter_element(), &v);
            assert!(img.iter().zip(&v).all(|(a, b)| *a == zeta.clone() * b.clone()));
        }
    }

    #[test]
    fn coxeter_eigenvector_in_a3() {
        // proportional to (1, ζ, ζ², ζ³) for a primitive 4th root ζ
        let g = group(CoxeterFamily::A, 3);
        let v = is_regular_element(&g.coxeter_element(), &g).witness.unwrap();
        let ratio = v[1].clone() * v[0].inverse();
        assert_eq!(ratio.order() % 4, 0);
        for k in 1..4 {
            assert_eq!(v[k].clone(), ratio.clone() * v[k - 1].clone());
        }
    }

    #[test]
    fn reflections_in_a3_are_not_regular() {
        let g = group(CoxeterFamily::A, 3);
        assert!(!is_regular_element(g.generator(0), &g).regular);
    }

    #[test]
    fn regular_coxeter_line_is_not_springer_generic() {
        let g = group(CoxeterFamily::A, 3);
        let l = is_regular_element(&g.coxeter_element(), &g).witness.unwrap();
        let rep = is_springer_generic(g.space(), &l, &g, &Caps::default()).unwrap();
        assert!(!rep.generic);
    }

    #[test]
    fn rank_one_parabolic() {
        let g = group(CoxeterFamily::D, 4);
        let a = Subspace::line(g.root(0));
        let rep = is_springer_generic(&a, &lift(&g.root(0)), &g, &Caps::default()).unwrap();
        assert!(rep.generic);
        assert_eq!(rep.stabilizer_order, 2);
        assert_eq!(rep.center_order, 2);
        assert!(rep.stabilizer_is_center);
    }

    #[test]
    fn generic_lines_exist() {
        let g = group(CoxeterFamily::G2, 2);
        let l = springer_generic_line(g.space(), &g, &Caps::default()).unwrap();
        let rep = is_springer_generic(g.space(), &lift(&l), &g, &Caps::default()).unwrap();
        assert!(rep.generic && rep.stabilizer_is_center);
        assert_eq!(rep.center_order, 2);
        assert!(springer_generic_line(&Subspace::line(qvec(&[1, 1, 1])), &g, &Caps::default()).is_err());
    }
}
