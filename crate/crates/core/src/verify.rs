//! Conformance runner: replays the identities and counts the library is
//! expected to reproduce, one named check at a time.

use std::fmt::Write as _;
use std::str::FromStr;
use std::thread;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{cyclotomic_polynomial, euler_phi, Cyclotomic, Field, Rational};
use crate::arrangement::{
    build_reflection_arrangement, CartanType, CoxeterFamily, GroupElement, ReflectionGroup,
    Subspace,
};
use crate::building::{
    dn_label_of, dn_label_to_subspace, dn_labels_nested, minimal_building_set, sn_label_of,
    sn_label_to_subspace, sn_labels_nested, BuildingSet, SnLabel,
};
use crate::caps::Caps;
use crate::garside::{
    braid_relators, center_report, dual_delta, garside_delta, inertia_element, is_central,
    left_greedy_nf, words_equal, BraidWord,
};
use crate::wonderful::{
    generic_point_in_orthogonal, is_regular_element, is_springer_generic,
    normalize_point_encoding, springer_generic_line, stabilizer_of_point,
    stratification,
};
use crate::Error;

/// Module names accepted as a scope.
pub const MODULES: [&str; 5] = ["exact-arith", "arrangement", "building-nested", "wonderful", "garside"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Module(&'static str),
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "all" {
            return Ok(Scope::All);
        }
        MODULES
            .iter()
            .find(|m| **m == s)
            .map(|m| Scope::Module(m))
            .ok_or_else(|| {
                Error::Parse(format!("unknown scope {s:?} (all, {})", MODULES.join(", ")))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub module: &'static str,
    pub name: String,
    /// The identity or count being replayed.
    pub anchor: &'static str,
    pub pass: bool,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationSuite {
    pub checks: Vec<Check>,
}

impl VerificationSuite {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "passed": self.checks.len() - self.failures(),
            "failed": self.failures(),
            "checks": self.checks,
        })
    }

    pub fn to_table(&self) -> String {
        let w_mod = self.checks.iter().map(|c| c.module.len()).max().unwrap_or(6).max(6);
        let w_name = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{:<4}  {:<w_mod$}  {:<w_name$}  details", "", "module", "check");
        for c in &self.checks {
            let pad = w_name - c.name.chars().count();
            let _ = writeln!(
                out,
                "{:<4}  {:<w_mod$}  {}{}  {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.module,
                c.name,
                " ".repeat(pad),
                c.details
            );
        }
        let _ = writeln!(
            out,
            "{} checks, {} failed",
            self.checks.len(),
            self.failures()
        );
        out
    }
}

type Outcome = Result<(bool, String), Error>;
type Job = Box<dyn Fn(&Caps) -> Outcome + Send + Sync>;

struct CheckDef {
    module: &'static str,
    name: String,
    anchor: &'static str,
    run: Job,
}

fn check(
    module: &'static str,
    name: impl Into<String>,
    anchor: &'static str,
    run: impl Fn(&Caps) -> Outcome + Send + Sync + 'static,
) -> CheckDef {
    CheckDef {
        module,
        name: name.into(),
        anchor,
        run: Box::new(run),
    }
}

/// Run every check in `scope`. Checks run on separate threads; the report
/// keeps the canonical order. A failing or panicking check is reported,
/// never propagated.
pub fn run_verify(scope: Scope, caps: &Caps) -> VerificationSuite {
    let defs: Vec<CheckDef> = all_checks()
        .into_iter()
        .filter(|s| match scope {
            Scope::All => true,
            Scope::Module(m) => s.module == m,
        })
        .collect();
    let results: Vec<Outcome> = thread::scope(|sc| {
        let handles: Vec<_> = defs
            .iter()
            .map(|s| sc.spawn(move || (s.run)(caps)))
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Err(Error::invalid("check panicked")))
            })
            .collect()
    });
    let checks = defs
        .into_iter()
        .zip(results)
        .map(|(s, r)| {
            let (pass, details) = match r {
                Ok(x) => x,
                Err(e) => (false, e.to_string()),
            };
            Check {
                module: s.module,
                name: s.name,
                anchor: s.anchor,
                pass,
                details,
            }
        })
        .collect();
    VerificationSuite { checks }
}

fn group(f: CoxeterFamily, r: usize) -> Result<ReflectionGroup, Error> {
    ReflectionGroup::new(CartanType::new(f, r)?)
}

fn building(f: CoxeterFamily, r: usize, caps: &Caps) -> Result<(ReflectionGroup, BuildingSet), Error> {
    let (a, g) = build_reflection_arrangement(f, r)?;
    let b = minimal_building_set(&a, Some(&g), caps)?;
    Ok((g, b))
}

fn lift(v: &[Rational]) -> Vec<Cyclotomic> {
    v.iter().map(<Cyclotomic as Field>::from_rational).collect()
}

fn ok(pass: bool, details: impl Into<String>) -> Outcome {
    Ok((pass, details.into()))
}

fn double_factorial_odd(n: u64) -> u64 {
    (1..=n).filter(|k| k % 2 == 1).product()
}

use CoxeterFamily::{A, B, D, G2};

/// Every supported type of rank at most 4.
pub fn small_types() -> Vec<(CoxeterFamily, usize)> {
    vec![(A, 1), (A, 2), (A, 3), (A, 4), (B, 2), (B, 3), (B, 4), (D, 4), (G2, 2)]
}

fn type_name(f: CoxeterFamily, r: usize) -> String {
    CartanType { family: f, rank: r }.to_string()
}

fn all_checks() -> Vec<CheckDef> {
    let mut v = Vec::new();
    arith_checks(&mut v);
    arrangement_checks(&mut v);
    building_checks(&mut v);
    wonderful_checks(&mut v);
    garside_checks(&mut v);
    v
}

fn arith_checks(v: &mut Vec<CheckDef>) {
    v.push(check("exact-arith", "deg Φ_m = φ(m), m ≤ 60", "deg Φ_m = φ(m)", |_| {
        let bad: Vec<u32> = (1..=60)
            .filter(|&m| cyclotomic_polynomial(m).degree() != euler_phi(m) as usize)
            .collect();
        if bad.is_empty() {
            ok(true, "60 polynomials")
        } else {
            ok(false, format!("mismatches at {bad:?}"))
        }
    }));
    v.push(check("exact-arith", "ζ_m has order m, m ≤ 24", "ζ_m^m = 1", |_| {
        let one = Some(Rational::from_integer(1.into()));
        for m in 1..=24u32 {
            let z = Cyclotomic::root_of_unity(m, 1);
            let mut p = z.clone();
            for k in 1..=m {
                if (p.to_rational() == one) != (k == m) {
                    return ok(false, format!("ζ_{m}^{k}"));
                }
                p = p * z.clone();
            }
        }
        ok(true, "24 orders")
    }));
}

fn arrangement_checks(v: &mut Vec<CheckDef>) {
    for (f, r) in small_types() {
        let name = type_name(f, r);
        v.push(check(
            "arrangement",
            format!("degrees of {name}: ∏dᵢ = |W|, gcd = |Z(W)|"),
            "|Z(W)| = gcd(d₁, …, d_r)",
            move |caps| {
                let g = group(f, r)?;
                let d = g.degrees();
                let order = g.enumerate(caps)?.len() as u64;
                let prod: u64 = d.iter().map(|&x| x as u64).product();
                let gcd = d.iter().fold(0u32, |a, &b| a.gcd(&b)) as usize;
                let center = g.center(caps)?.len();
                let roots = d.iter().map(|&x| x as usize - 1).sum::<usize>();
                ok(
                    prod == order && gcd == center && roots == g.num_positive_roots(),
                    format!("degrees {d:?}, |W| = {order}, |Z(W)| = {center}"),
                )
            },
        ));
    }
}

fn sn_codec_count(n: usize, caps: &Caps) -> Outcome {
    let (_, f) = building(A, n - 1, caps)?;
    let mut hits = vec![false; f.len()];
    for bits in 0u32..(1 << n) {
        if bits.count_ones() < 2 {
            continue;
        }
        let set: Vec<usize> = (1..=n).filter(|i| bits >> (i - 1) & 1 == 1).collect();
        let label = SnLabel::new(n, set)?;
        let s = sn_label_to_subspace(n, &label);
        match f.index_of(&s) {
            Some(p) if !hits[p] => hits[p] = true,
            _ => return ok(false, format!("label {label} is not a fresh element")),
        }
    }
    let expected = (1usize << n) - n - 1;
    ok(
        f.len() == expected && hits.iter().all(|&h| h),
        format!("|ℱ(S{n})| = {}, expected {expected}", f.len()),
    )
}

fn subsets_up_to(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    fn go(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        visit(cur);
        if cur.len() == k {
            return;
        }
        for p in from..n {
            cur.push(p);
            go(n, k, p + 1, cur, visit);
            cur.pop();
        }
    }
    go(n, k, 0, &mut Vec::new(), &mut visit);
}

fn codec_agreement(f: CoxeterFamily, r: usize, caps: &Caps) -> Outcome {
    let (_, b) = building(f, r, caps)?;
    let elements = b.elements();
    let mut total = 0usize;
    let mut bad = 0usize;
    let mut first_bad = None;
    match f {
        A => {
            let labels: Vec<SnLabel> = elements.iter().map(sn_label_of).collect::<Result<_, _>>()?;
            subsets_up_to(b.len(), 4, |s| {
                total += 1;
                let ls: Vec<SnLabel> = s.iter().map(|&p| labels[p].clone()).collect();
                if sn_labels_nested(&ls) != b.is_nested(s) {
                    bad += 1;
                    first_bad.get_or_insert_with(|| s.to_vec());
                }
            });
        }
        D => {
            let labels = elements.iter().map(dn_label_of).collect::<Result<Vec<_>, _>>()?;
            for (l, e) in labels.iter().zip(&elements) {
                if dn_label_to_subspace(r, l) != *e {
                    return ok(false, format!("label {l} does not round-trip"));
                }
            }
            subsets_up_to(b.len(), 4, |s| {
                total += 1;
                let ls: Vec<_> = s.iter().map(|&p| labels[p].clone()).collect();
                if dn_labels_nested(&ls) != b.is_nested(s) {
                    bad += 1;
                    first_bad.get_or_insert_with(|| s.to_vec());
                }
            });
        }
        _ => return Err(Error::Unsupported(format!("no codec for {f:?}"))),
    }
    ok(
        bad == 0,
        match first_bad {
            None => format!("{total} subsets agree"),
            Some(s) => format!("{bad} of {total} disagree, first {s:?}"),
        },
    )
}

fn building_checks(v: &mut Vec<CheckDef>) {
    for n in 3..=6 {
        v.push(check(
            "building-nested",
            format!("|ℱ(S{n})| = 2^{n} − {n} − 1 via the subset codec"),
            "irreducibles of S_n ↔ subsets of size ≥ 2",
            move |caps| sn_codec_count(n, caps),
        ));
    }
    v.push(check("building-nested", "|ℱ(G₂)| = 7", "ℱ(G₂) = six root lines and V", |caps| {
        let (_, f) = building(G2, 2, caps)?;
        ok(f.len() == 7, format!("|ℱ| = {}", f.len()))
    }));
    v.push(check(
        "building-nested",
        "ℱ(D₄) agrees under the root and definition routes",
        "irreducible = no compatible direct-sum splitting",
        |caps| {
            let (a, g) = build_reflection_arrangement(D, 4)?;
            let by_roots = minimal_building_set(&a, Some(&g), caps)?;
            let by_def = minimal_building_set(&a, None, caps)?;
            ok(
                by_roots.elements() == by_def.elements(),
                format!("{} vs {} elements", by_roots.len(), by_def.len()),
            )
        },
    ));
    for (f, r) in small_types() {
        let name = type_name(f, r);
        v.push(check(
            "building-nested",
            format!("maximal nested sets of {name} have size {r}"),
            "maximal nested sets index the points of the deepest strata",
            move |caps| {
                let (_, b) = building(f, r, caps)?;
                let max = b.maximal_nested_sets(caps)?;
                let bad = max.iter().filter(|s| s.len() != r).count();
                ok(bad == 0, format!("{} maximal, {bad} of wrong size", max.len()))
            },
        ));
    }
    for n in 3..=5usize {
        v.push(check(
            "building-nested",
            format!("S{n} has (2·{n}−3)!! maximal nested sets"),
            "maximal nested sets of S_n ↔ rooted binary trees",
            move |caps| {
                let (_, b) = building(A, n - 1, caps)?;
                let got = b.maximal_nested_sets(caps)?.len() as u64;
                let want = double_factorial_odd(2 * n as u64 - 3);
                ok(got == want, format!("{got}, expected {want}"))
            },
        ));
    }
    v.push(check(
        "building-nested",
        "G₂ has 6 maximal nested sets {V, root line}",
        "nested sets of G₂: {V, ⟨α⟩}",
        |caps| {
            let (g, b) = building(G2, 2, caps)?;
            let max = b.maximal_nested_sets(caps)?;
            let shaped = max.iter().all(|s| {
                let dims: Vec<usize> = s.members.iter().map(|&p| b.dim(p)).collect();
                s.members.iter().any(|&p| b.element(p) == g.space())
                    && dims.iter().filter(|&&d| d == 1).count() == 1
            });
            ok(max.len() == 6 && shaped, format!("{} maximal", max.len()))
        },
    ));
    for (f, r, name) in [(A, 3, "S4"), (A, 4, "S5"), (D, 4, "D4")] {
        v.push(check(
            "building-nested",
            format!("codec nestedness matches the subspace predicate on {name}"),
            "label rules ↔ nested sets",
            move |caps| codec_agreement(f, r, caps),
        ));
    }
}

/// Elements of `W_A` acting on `A` as scalars, and `|Z(W_A)|` by brute force.
fn scalar_subgroup_and_center(
    g: &ReflectionGroup,
    a: &Subspace,
    caps: &Caps,
) -> Result<(Vec<GroupElement>, usize), Error> {
    let wa = g.parabolic_of(a, caps)?;
    let refl: Vec<GroupElement> = g.positive_roots_in(a).into_iter().map(|k| g.reflection(k)).collect();
    let center = wa
        .iter()
        .filter(|w| refl.iter().all(|r| w.compose(r) == r.compose(w)))
        .count();
    let scalars = wa
        .into_iter()
        .filter(|w| {
            let m = g.matrix(w);
            let b = &a.basis()[0];
            let img = m.apply(b);
            let k = b.iter().position(|c| !num_traits::Zero::is_zero(c)).unwrap();
            let ratio = &img[k] / &b[k];
            a.basis().iter().all(|v| {
                m.apply(v)
                    .iter()
                    .zip(v)
                    .all(|(x, y)| *x == &ratio * y)
            })
        })
        .collect();
    Ok((scalars, center))
}

fn stabilizer_suite(f: CoxeterFamily, r: usize, caps: &Caps) -> Outcome {
    let (g, b) = building(f, r, caps)?;
    for p in 0..b.len() {
        let a = b.element(p);
        let x = generic_point_in_orthogonal(a, &g);
        let l = springer_generic_line(a, &g, caps)?;
        let rep = is_springer_generic(a, &lift(&l), &g, caps)?;
        if !rep.generic {
            return ok(false, format!("line {l:?} not certified in {a:?}"));
        }
        let omega = normalize_point_encoding(&x, &[lift(&l)], &b)?;
        if omega.chain.len() != 1 || omega.chain[0].subspace != *a {
            return ok(false, format!("chain for {a:?} has {} steps", omega.chain.len()));
        }
        let stab = stabilizer_of_point(&omega, &g, caps)?;
        let (mut scalars, center) = scalar_subgroup_and_center(&g, a, caps)?;
        let mut got = stab.elements.clone();
        got.sort_by(|u, v| u.perm().cmp(v.perm()));
        scalars.sort_by(|u, v| u.perm().cmp(v.perm()));
        if got != scalars || got.len() != center {
            return ok(
                false,
                format!(
                    "{a:?}: |stab| = {}, scalars {}, |Z(W_A)| = {center}",
                    got.len(),
                    scalars.len()
                ),
            );
        }
    }
    ok(true, format!("{} elements of ℱ", b.len()))
}

fn wonderful_checks(v: &mut Vec<CheckDef>) {
    for (f, r) in [(A, 3), (D, 4), (G2, 2)] {
        let name = type_name(f, r);
        v.push(check(
            "wonderful",
            format!("stabilizers of generic boundary points of {name} are Z(W_A)"),
            "stabilizer is cyclic, generated by a multiple of the identity",
            move |caps| stabilizer_suite(f, r, caps),
        ));
    }
    for (f, r) in [(A, 2), (A, 3), (B, 3), (G2, 2)] {
        let name = type_name(f, r);
        v.push(check(
            "wonderful",
            format!("Coxeter element of {name} is regular"),
            "c has a regular eigenvector for e^{2πi/h}",
            move |_| {
                let g = group(f, r)?;
                let rep = is_regular_element(&g.coxeter_element(), &g);
                let h = g.cartan().coxeter_number();
                ok(
                    rep.regular && rep.eigenvalue.is_some_and(|(d, _)| d == h),
                    format!("eigenvalue {:?}, h = {h}", rep.eigenvalue),
                )
            },
        ));
    }
    for (f, r, want) in [(G2, 2, 14usize), (A, 2, 8)] {
        let name = type_name(f, r);
        v.push(check(
            "wonderful",
            format!("{name} has {want} strata"),
            "strata ↔ nested sets",
            move |caps| {
                let (_, b) = building(f, r, caps)?;
                let s = stratification(&b, caps)?;
                ok(s.strata.len() == want, format!("{} strata", s.strata.len()))
            },
        ));
    }
}

fn relator_fuzz(f: CoxeterFamily, r: usize, trials: usize, caps: &Caps) -> Outcome {
    let g = group(f, r)?;
    let mut relators = braid_relators(&g);
    for i in 1..=r as i32 {
        relators.push(BraidWord::new(g.cartan(), vec![i, -i])?);
    }
    let inverses: Vec<BraidWord> = relators.iter().map(|w| w.inverse()).collect();
    relators.extend(inverses);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (r as u64) << 8 ^ f as u64);
    let max_len = caps.fuzz_word_length;
    let mut failures = 0;
    for _ in 0..trials {
        let len = rng.gen_range(0..=max_len);
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let k = rng.gen_range(1..=r as i32);
                if rng.gen_bool(0.5) { k } else { -k }
            })
            .collect();
        let w = BraidWord::new(g.cartan(), letters)?;
        let rel = &relators[rng.gen_range(0..relators.len())];
        let at = rng.gen_range(0..=w.len());
        let u = w.insert(at, rel);
        if left_greedy_nf(&g, &u)? != left_greedy_nf(&g, &w)? {
            failures += 1;
        }
    }
    ok(failures == 0, format!("{trials} insertions, {failures} failures"))
}

fn inertia_suite(f: CoxeterFamily, r: usize) -> Outcome {
    let g = group(f, r)?;
    let mut checked = 0;
    for bits in 1u32..(1 << r) {
        let subset: Vec<usize> = (0..r).filter(|i| bits >> i & 1 == 1).collect();
        let e = inertia_element(&g, &subset)?;
        for &i in &subset {
            let s = BraidWord::new(g.cartan(), vec![i as i32 + 1])?;
            for x in [&e.z, &e.zeta] {
                if !words_equal(&g, &x.concat(&s), &s.concat(x))? {
                    return ok(false, format!("{subset:?} fails to commute with {i}"));
                }
            }
        }
        let order: usize = e.center_orders.iter().product();
        if !words_equal(&g, &e.zeta.pow(order as i64), &e.z)? && e.components.len() == 1 {
            return ok(false, format!("ζ^{order} ≠ z for {subset:?}"));
        }
        if e.components.len() > 1 {
            let parts: Vec<BraidWord> = e
                .components
                .iter()
                .map(|k| inertia_element(&g, k).map(|c| c.z))
                .collect::<Result<_, _>>()?;
            let product = parts
                .iter()
                .fold(BraidWord::empty(g.cartan()), |acc, p| acc.concat(p));
            if !words_equal(&g, &e.z, &product)? {
                return ok(false, format!("z ≠ ∏ z_K for {subset:?}"));
            }
            for a in &parts {
                for b in &parts {
                    if !words_equal(&g, &a.concat(b), &b.concat(a))? {
                        return ok(false, format!("factors of {subset:?} do not commute"));
                    }
                }
            }
        }
        checked += 1;
    }
    let all: Vec<usize> = (0..r).collect();
    let zv = inertia_element(&g, &all)?.z;
    let full_twist = garside_delta(&g).pow(2);
    ok(
        words_equal(&g, &zv, &full_twist)?,
        format!("{checked} parabolic subsets, z_V = Δ²"),
    )
}

fn garside_checks(v: &mut Vec<CheckDef>) {
    for n in 2..=6usize {
        v.push(check(
            "garside",
            format!("Δ² = (σ₁⋯σ_{})^{n} in Br_{n}", n - 1),
            "Δ² = (Δ*)ⁿ",
            move |_| {
                let g = group(A, n - 1)?;
                let lhs = garside_delta(&g).pow(2);
                let rhs = dual_delta(&g).pow(n as i64);
                ok(words_equal(&g, &lhs, &rhs)?, format!("|Δ²| = {}", lhs.len()))
            },
        ));
    }
    for (f, r) in [(A, 2), (A, 3), (A, 4), (A, 5), (D, 4), (D, 5), (G2, 2)] {
        let name = type_name(f, r);
        v.push(check(
            "garside",
            format!("(Δ*)^h = Δ² for {name}"),
            "(Δ*)^h = Δ²",
            move |_| {
                let g = group(f, r)?;
                let h = g.cartan().coxeter_number();
                let eq = words_equal(&g, &dual_delta(&g).pow(h as i64), &garside_delta(&g).pow(2))?;
                ok(eq, format!("h = {h}"))
            },
        ));
    }
    v.push(check(
        "garside",
        "Δ central in B(D₄), B(D₆) but not B(D₅); Δ² always",
        "Z(B(D_n)) generated by Δ for n even, Δ² for n odd",
        |_| {
            let mut got = Vec::new();
            for r in [4, 5, 6] {
                let g = group(D, r)?;
                let d = garside_delta(&g);
                got.push((r, is_central(&g, &d)?, is_central(&g, &d.pow(2))?));
            }
            let want = [(4, true, true), (5, false, true), (6, true, true)];
            ok(got == want, format!("{got:?}"))
        },
    ));
    for (f, r) in [
        (A, 2), (A, 3), (A, 4), (A, 5), (B, 2), (B, 3), (B, 4), (D, 4), (D, 5), (G2, 2),
    ] {
        let name = type_name(f, r);
        v.push(check(
            "garside",
            format!("β^|Z(W)| = π for {name}"),
            "β^{|Z(W)|} = π",
            move |caps| {
                let g = group(f, r)?;
                let rep = center_report(&g, caps)?;
                let z = g.center(caps)?.len();
                let eq = words_equal(&g, &rep.beta.pow(z as i64), &rep.pi)?;
                ok(
                    eq && rep.relation_checked && rep.beta_central && rep.pi_central && rep.z_of_w == z,
                    format!("|Z(W)| = {z}, |β| = {}", rep.beta.len()),
                )
            },
        ));
    }
    for (f, r) in [(A, 4), (D, 4), (G2, 2)] {
        let name = type_name(f, r);
        v.push(check(
            "garside",
            format!("inertia elements of standard parabolics of {name}"),
            "z_A = z_{A₁} z_{A₂} ⋯ z_{A_k}",
            move |_| inertia_suite(f, r),
        ));
    }
    for (f, r) in [(A, 3), (D, 4), (G2, 2)] {
        let name = type_name(f, r);
        v.push(check(
            "garside",
            format!("relator insertions keep normal forms in {name}"),
            "normal forms are canonical",
            move |caps| relator_fuzz(f, r, 1000, caps),
        ));
    }
    for (n, want) in [(3usize, 5usize), (4, 14), (5, 42)] {
        v.push(check(
            "garside",
            format!("|{{w ≤ c}}| = {want} in S{n}"),
            "simples of the dual monoid are the noncrossing partitions",
            move |caps| {
                let g = group(A, n - 1)?;
                let c = g.coxeter_element();
                let got = g
                    .enumerate(caps)?
                    .iter()
                    .filter(|w| g.absolute_order_below(w, &c))
                    .count();
                ok(got == want, format!("{got}"))
            },
        ));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scopes_parse() {
        assert_eq!("all".parse::<Scope>().unwrap(), Scope::All);
        assert_eq!("garside".parse::<Scope>().unwrap(), Scope::Module("garside"));
        assert!("nope".parse::<Scope>().is_err());
    }

    #[test]
    fn module_scopes_partition_the_suite() {
        let total = all_checks().len();
        let per: usize = MODULES
            .iter()
            .map(|m| all_checks().iter().filter(|s| s.module == *m).count())
            .sum();
        assert_eq!(per, total);
    }

    #[test]
    fn arith_scope_passes() {
        let s = run_verify(Scope::Module("exact-arith"), &Caps::default());
        assert!(s.all_pass(), "{}", s.to_table());
    }
}
