//! Text and DOT renderings. Both use the ids of the diagram JSON form, so the
//! root is always `0`.

use enriques::diagram::VertexJson;
use enriques::WeightedDiagram;

fn kind(v: &VertexJson) -> &'static str {
    match v.proximate_to.len() {
        0 => "root",
        1 => "free",
        _ => "satellite",
    }
}

/// An indented tree, children in id order:
///
/// ```text
/// 0 [6] root
///   1 [3] free
///     2 [3] satellite, also proximate to 0
/// ```
pub fn text(d: &WeightedDiagram) -> String {
    let j = d.to_json_value();
    let mut out = String::new();
    let mut stack = vec![(0usize, 0usize)];
    while let Some((v, depth)) = stack.pop() {
        let vx = &j.vertices[v];
        out.push_str(&"  ".repeat(depth));
        out.push_str(&format!("{} [{}] {}", vx.id, vx.weight, kind(vx)));
        if vx.proximate_to.len() > 1 {
            let others: Vec<String> = vx.proximate_to[1..].iter().map(|t| t.to_string()).collect();
            out.push_str(&format!(", also proximate to {}", others.join(", ")));
        }
        out.push('\n');
        let children = j
            .vertices
            .iter()
            .filter(|c| c.parent == Some(v))
            .map(|c| c.id);
        let mut children: Vec<usize> = children.collect();
        children.reverse();
        stack.extend(children.into_iter().map(|c| (c, depth + 1)));
    }
    out
}

/// Nodes first, then tree edges tagged `kind="free"` or `kind="satellite"`
/// after the child's kind, then dotted non-tree proximity edges from each
/// satellite to its second target.
pub fn dot(d: &WeightedDiagram) -> String {
    let j = d.to_json_value();
    let mut out = String::from("digraph enriques {\n  node [shape=circle];\n");
    for v in &j.vertices {
        out.push_str(&format!(
            "  v{} [label=\"{}\", kind=\"{}\"];\n",
            v.id,
            v.weight,
            kind(v)
        ));
    }
    for v in &j.vertices {
        if let Some(p) = v.parent {
            out.push_str(&format!("  v{p} -> v{} [kind=\"{}\"];\n", v.id, kind(v)));
        }
    }
    for v in &j.vertices {
        for t in v.proximate_to.iter().skip(1) {
            out.push_str(&format!(
                "  v{} -> v{t} [kind=\"proximity\", style=dotted, constraint=false];\n",
                v.id
            ));
        }
    }
    out.push_str("}\n");
    out
}
