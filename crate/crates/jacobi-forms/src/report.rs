//! Structured command output rendered as text or JSON.
//!
//! Every value is carried as an exact string (rationals through
//! [`crate::rat::render`]), so both renderings are deterministic and two
//! identical invocations produce byte-identical output.

/// One node of the result tree. Maps keep insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Leaf(String),
    List(Vec<Node>),
    Map(Vec<(String, Node)>),
}

impl Node {
    pub fn leaf(value: impl ToString) -> Node {
        Node::Leaf(value.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub results: Node,
    pub citations: Vec<String>,
}

impl Report {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str("inputs:\n");
        for (k, v) in &self.inputs {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        out.push_str("results:");
        render_text_node(&self.results, 1, &mut out);
        out.push('\n');
        out.push_str("citations:\n");
        for c in &self.citations {
            out.push_str(&format!("  - {c}\n"));
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut out = String::new();
        out.push('{');
        out.push_str(&format!("\"command\":{}", json_string(&self.command)));
        out.push_str(",\"inputs\":{");
        for (i, (k, v)) in self.inputs.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("{}:{}", json_string(k), json_string(v)));
        }
        out.push_str("},\"results\":");
        render_json_node(&self.results, &mut out);
        out.push_str(",\"citations\":[");
        for (i, c) in self.citations.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&json_string(c));
        }
        out.push_str("]}");
        out
    }
}

fn render_text_node(node: &Node, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match node {
        Node::Leaf(v) => out.push_str(&format!(" {v}")),
        Node::List(items) => {
            for item in items {
                out.push_str(&format!("\n{pad}-"));
                match item {
                    Node::Leaf(v) => out.push_str(&format!(" {v}")),
                    _ => render_text_node(item, depth + 1, out),
                }
            }
        }
        Node::Map(entries) => {
            for (k, v) in entries {
                out.push_str(&format!("\n{pad}{k}:"));
                render_text_node(v, depth + 1, out);
            }
        }
    }
}

fn render_json_node(node: &Node, out: &mut String) {
    match node {
        Node::Leaf(v) => out.push_str(&json_string(v)),
        Node::List(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                render_json_node(item, out);
            }
            out.push(']');
        }
        Node::Map(entries) => {
            out.push('{');
            for (i, (k, v)) in entries.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&json_string(k));
                out.push(':');
                render_json_node(v, out);
            }
            out.push('}');
        }
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report {
            command: "demo".into(),
            inputs: vec![("n".into(), "2".into())],
            results: Node::Map(vec![
                ("value".into(), Node::leaf("1884/17")),
                (
                    "rows".into(),
                    Node::List(vec![
                        Node::leaf("a"),
                        Node::Map(vec![("k".into(), Node::leaf("-1/2"))]),
                    ]),
                ),
            ]),
            citations: vec!["q0-identity".into()],
        }
    }

    #[test]
    fn text_layout() {
        let text = sample().render_text();
        let expected = "command: demo\n\
                        inputs:\n  n: 2\n\
                        results:\n  value: 1884/17\n  rows:\n    - a\n    -\n      k: -1/2\n\
                        citations:\n  - q0-identity\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn json_is_exact_and_escaped() {
        let json = sample().render_json();
        assert_eq!(
            json,
            "{\"command\":\"demo\",\"inputs\":{\"n\":\"2\"},\"results\":{\"value\":\"1884/17\",\"rows\":[\"a\",{\"k\":\"-1/2\"}]},\"citations\":[\"q0-identity\"]}"
        );
        assert_eq!(json_string("a\"b\\c\nd"), "\"a\\\"b\\\\c\\nd\"");
    }

    #[test]
    fn renderings_are_deterministic() {
        let a = sample();
        let b = sample();
        assert_eq!(a.render_text(), b.render_text());
        assert_eq!(a.render_json(), b.render_json());
    }
}
