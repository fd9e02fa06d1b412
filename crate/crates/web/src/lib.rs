//! Browser bindings. Every function takes plain strings and numbers and
//! returns a JSON document, or an error message.

use serde_json::json;
use wasm_bindgen::prelude::*;

use inertia::arrangement::{build_reflection_arrangement, CartanType, CoxeterFamily, ReflectionGroup};
use inertia::building::{codec_label, minimal_building_set, BuildingSet};
use inertia::caps::Caps;
use inertia::garside::{left_greedy_nf, BraidWord};
use inertia::wonderful::stratification;
use inertia::Error;

/// Building sets above this size are refused, to keep the page responsive.
const WEB_BUILDING_SET_CAP: usize = 60;

fn cartan(family: &str, rank: usize) -> Result<CartanType, Error> {
    let family: CoxeterFamily = family.parse()?;
    let rank = if family == CoxeterFamily::G2 { 2 } else { rank };
    CartanType::new(family, rank)
}

fn building(family: &str, rank: usize) -> Result<(ReflectionGroup, BuildingSet, Caps), Error> {
    let c = cartan(family, rank)?;
    let caps = Caps {
        building_set_size: WEB_BUILDING_SET_CAP,
        ..Caps::default()
    };
    let (a, g) = build_reflection_arrangement(c.family, c.rank)?;
    let f = minimal_building_set(&a, Some(&g), &caps)?;
    Ok((g, f, caps))
}

fn labeler<'a>(g: &'a ReflectionGroup, f: &'a BuildingSet) -> impl Fn(usize) -> String + 'a {
    move |p| codec_label(g.cartan().family, f.element(p)).unwrap_or_else(|| format!("F{p}"))
}

pub fn strata_json(family: &str, rank: usize) -> Result<String, Error> {
    let (g, f, caps) = building(family, rank)?;
    let s = stratification(&f, &caps)?;
    let mut doc = s.to_json(labeler(&g, &f));
    doc["counts_by_codim"] = json!(s.counts_by_codim());
    Ok(doc.to_string())
}

pub fn normal_form_json(family: &str, rank: usize, word: &str) -> Result<String, Error> {
    let g = ReflectionGroup::new(cartan(family, rank)?)?;
    let w = BraidWord::parse(&g, word)?;
    let nf = left_greedy_nf(&g, &w)?;
    Ok(json!({
        "input": w.to_string_with(&g),
        "delta_power": nf.delta_power,
        "simples": nf.to_json(&g).simples,
        "describe": nf.describe(&g),
        "word": nf.to_word(&g).to_string_with(&g),
    })
    .to_string())
}

pub fn nested_sets_json(family: &str, rank: usize, max_size: usize) -> Result<String, Error> {
    let (g, f, caps) = building(family, rank)?;
    let label = labeler(&g, &f);
    let sets = f.enumerate_nested_sets(Some(max_size), &caps)?;
    let elements: Vec<_> = (0..f.len())
        .map(|p| json!({ "label": label(p), "dim": f.dim(p), "basis": f.element(p).to_strings() }))
        .collect();
    let nested: Vec<Vec<String>> = sets
        .iter()
        .map(|s| s.members.iter().map(|&p| label(p)).collect())
        .collect();
    Ok(json!({ "elements": elements, "nested_sets": nested }).to_string())
}

#[wasm_bindgen]
pub fn strata(family: &str, rank: usize) -> Result<String, String> {
    strata_json(family, rank).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn normal_form(family: &str, rank: usize, word: &str) -> Result<String, String> {
    normal_form_json(family, rank, word).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn nested_sets(family: &str, rank: usize, max_size: usize) -> Result<String, String> {
    nested_sets_json(family, rank, max_size).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> serde_json::Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn g2_strata() {
        let doc = parse(&strata_json("G2", 2).unwrap());
        assert_eq!(doc["nodes"].as_array().unwrap().len(), 14);
        assert_eq!(doc["counts_by_codim"], json!([1, 7, 6]));
    }

    #[test]
    fn braid_relation_in_a2() {
        let a = parse(&normal_form_json("A", 2, "s1 s2 s1").unwrap());
        let b = parse(&normal_form_json("A", 2, "2 1 2").unwrap());
        assert_eq!(a["delta_power"], 1);
        assert_eq!(a["word"], b["word"]);
        assert!(normal_form_json("A", 2, "s7").is_err());
    }

    #[test]
    fn s4_labels() {
        let doc = parse(&nested_sets_json("A", 3, 1).unwrap());
        assert_eq!(doc["elements"].as_array().unwrap().len(), 11);
        assert_eq!(doc["nested_sets"].as_array().unwrap().len(), 12);
        assert!(doc["elements"][0]["label"].as_str().unwrap().starts_with('{'));
    }

    #[test]
    fn large_building_sets_are_refused() {
        assert!(strata_json("A", 6).is_err());
    }
}
