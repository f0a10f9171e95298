//! Browser bindings. Every export takes plain text and returns a JSON
//! string; errors surface in JavaScript as thrown strings.

use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

use hatpath::bijections::{phi, psi, simion_schmidt, theta, GeometricRepresentation};
use hatpath::eco::export_tree;
use hatpath::pattern::contains_classical;
use hatpath::{MotzkinWord, Permutation};

/// Deepest tree level served to the page; level 9 already has 835 nodes.
pub const MAX_TREE_DEPTH: usize = 9;

fn err(e: hatpath::Error) -> String {
    e.to_string()
}

/// Both Dyck paths of a 132-avoiding permutation, with step heights for
/// drawing, plus its Simion-Schmidt image.
#[wasm_bindgen]
pub fn permutation_paths(input: &str) -> Result<String, String> {
    let pi: Permutation = input.parse().map_err(err)?;
    let dyck = phi(&pi).map_err(err)?;
    let indexed = theta(&pi);
    let unlabeled = indexed.unlabeled();
    let ss = simion_schmidt(&pi).map_err(err)?;
    let labels: Vec<u32> = indexed.steps().iter().map(|&(_, l)| l).collect();
    Ok(json!({
        "permutation": pi,
        "phi": { "word": dyck.to_string(), "heights": dyck.heights() },
        "theta": {
            "word": unlabeled.to_string(),
            "indexed": indexed.to_string(),
            "labels": labels,
            "heights": unlabeled.heights(),
        },
        "simion_schmidt": ss,
        "avoids_123": !contains_classical(&ss, &Permutation::identity(3)),
    })
    .to_string())
}

/// A Motzkin word's image permutation together with its arc diagram.
#[wasm_bindgen]
pub fn motzkin_permutation(word: &str) -> Result<String, String> {
    let w: MotzkinWord = word.trim().parse().map_err(err)?;
    let pi = psi(&w);
    let geo = GeometricRepresentation::from_permutation(&pi).map_err(err)?;
    Ok(json!({
        "word": w.to_string(),
        "heights": w.heights(),
        "permutation": pi,
        "blocks": geo.blocks(),
        "arcs": geo.arcs(),
        "singles": geo.singles(),
    })
    .to_string())
}

/// Nodes of the generating tree down to `depth`, each with its parent id.
#[wasm_bindgen]
pub fn generating_tree(depth: usize) -> Result<String, String> {
    if depth > MAX_TREE_DEPTH {
        return Err(format!("depth {depth} exceeds {MAX_TREE_DEPTH}"));
    }
    serde_json::to_string(&export_tree(depth)).map_err(|e| e.to_string())
}
