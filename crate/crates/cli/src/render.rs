use std::fmt::Write;

use parabolic::LabeledGraph;

fn quote(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn edge_label(order: Option<i64>, kind: Option<&str>) -> String {
    let o = order.map_or("?".to_string(), |o| o.to_string());
    match kind {
        Some(k) => format!("{o} {k}"),
        None => o,
    }
}

/// Digraph with one node per vertex; edges carry the order and, for BGG
/// graphs, the kind.
pub fn to_dot(g: &LabeledGraph) -> String {
    let mut s = String::new();
    let title = match &g.lambda {
        Some(l) => format!("{} lambda {}", g.spec, g.spec.render(l)),
        None => format!("{} regular", g.spec),
    };
    writeln!(s, "digraph {} {{", quote(&title)).unwrap();
    writeln!(s, "  node [shape=box];").unwrap();
    for (i, v) in g.vertices.iter().enumerate() {
        writeln!(s, "  v{i} [label={}];", quote(&v.label)).unwrap();
    }
    for a in &g.arrows {
        let style = match a.kind.map(|k| k.as_str()) {
            Some("nonstandard") => ", style=bold",
            Some("conjectural") => ", style=dashed",
            _ => "",
        };
        let label = edge_label(a.order, a.kind.map(|k| k.as_str()));
        writeln!(s, "  v{} -> v{} [label={}{style}];", a.from, a.to, quote(&label)).unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn to_text(g: &LabeledGraph) -> String {
    let mut s = String::new();
    match &g.lambda {
        Some(l) => writeln!(s, "{} lambda {}", g.spec, g.spec.render(l)).unwrap(),
        None => writeln!(s, "{} regular", g.spec).unwrap(),
    }
    writeln!(s, "vertices {}", g.vertices.len()).unwrap();
    for (i, v) in g.vertices.iter().enumerate() {
        writeln!(s, "  v{i} {}", v.label).unwrap();
    }
    writeln!(s, "arrows {}", g.arrows.len()).unwrap();
    for a in &g.arrows {
        let o = a.order.map_or("?".to_string(), |o| o.to_string());
        match a.kind {
            Some(k) => writeln!(s, "  v{} -> v{} order {o} {}", a.from, a.to, k.as_str()).unwrap(),
            None => writeln!(s, "  v{} -> v{} order {o}", a.from, a.to).unwrap(),
        }
    }
    s
}
