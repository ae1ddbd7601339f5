//! Graphviz export. Cycle edges are drawn bold red, tree edges plain, and
//! colored fixed points carry their color in the label.

use std::fmt::Write;

use super::bijection::{ColoredForestPermutation, ColoredMap};
use super::digraph::{Endofunction, RootedForest};

fn cyclic(image: &[usize]) -> Vec<bool> {
    let m = image.len();
    (1..=m)
        .map(|s| {
            let mut v = s;
            (0..m).any(|_| {
                v = image[v - 1];
                v == s
            })
        })
        .collect()
}

fn node_label(v: usize, color: Option<usize>) -> String {
    match color {
        Some(c) => format!("  {v} [label=\"{v} (c{c})\", style=filled, fillcolor=lightblue];\n"),
        None => format!("  {v};\n"),
    }
}

fn digraph_dot(name: &str, image: &[usize], colors: Option<&[Option<usize>]>) -> String {
    let on_cycle = cyclic(image);
    let mut out = format!("digraph {name} {{\n");
    for v in 1..=image.len() {
        out.push_str(&node_label(v, colors.and_then(|c| c[v - 1])));
    }
    for (i, &t) in image.iter().enumerate() {
        let attr = if on_cycle[i] { " [color=red, penwidth=2]" } else { "" };
        let _ = writeln!(out, "  {} -> {t}{attr};", i + 1);
    }
    out.push_str("}\n");
    out
}

pub fn endofunction_to_dot(name: &str, sigma: &Endofunction) -> String {
    digraph_dot(name, sigma.image(), None)
}

pub fn colored_map_to_dot(name: &str, tau: &ColoredMap) -> String {
    digraph_dot(name, &tau.map, Some(&tau.colors))
}

pub fn forest_to_dot(name: &str, forest: &RootedForest) -> String {
    let mut out = format!("digraph {name} {{\n");
    for v in 1..=forest.len() {
        if forest.is_root(v) {
            let _ = writeln!(out, "  {v} [shape=doublecircle];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (c, p) in forest.edges() {
        let _ = writeln!(out, "  {c} -> {p};");
    }
    out.push_str("}\n");
    out
}

/// The forest with the root permutation drawn as dashed red edges.
pub fn pair_to_dot(name: &str, pair: &ColoredForestPermutation) -> String {
    let mut out = format!("digraph {name} {{\n");
    for v in 1..=pair.forest.len() {
        out.push_str(&node_label(v, pair.colors[v - 1]));
    }
    for (c, p) in pair.forest.edges() {
        let _ = writeln!(out, "  {c} -> {p};");
    }
    for (i, w) in pair.pi.iter().enumerate() {
        if let Some(w) = w {
            let _ = writeln!(out, "  {} -> {w} [color=red, style=dashed];", i + 1);
        }
    }
    out.push_str("}\n");
    out
}
