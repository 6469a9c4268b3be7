//! Graphviz rendering of both model kinds.

use std::fmt::Write;

use dualkripke_core::kripke::{ArgumentModel, EpistemicModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DotOptions {
    /// Draw `(s,s)` pairs of the epistemic relations.
    pub loops: bool,
    /// Draw attacks from attacker to attacked instead of the default
    /// attacked-to-attacker orientation.
    pub reverse_arrows: bool,
}

impl Default for DotOptions {
    fn default() -> Self {
        DotOptions {
            loops: true,
            reverse_arrows: false,
        }
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

fn node(out: &mut String, id: &str, extra: &[String], current: bool) {
    let mut label = id.to_owned();
    for e in extra {
        label.push('\n');
        label.push_str(e);
    }
    let shape = if current { ", peripheries=2" } else { "" };
    writeln!(out, "  {} [label={}{shape}];", quote(id), quote(&label)).unwrap();
}

/// Worlds labeled with their true literals; one dashed undirected edge per
/// related pair and agent.
pub fn epistemic_dot(model: &EpistemicModel, current: Option<usize>, opts: DotOptions) -> String {
    let sig = model.signature();
    let mut out = String::from("digraph epistemic {\n  node [shape=box];\n");
    for w in 0..model.world_count() {
        let literals: Vec<String> = (0..sig.propositions().len())
            .map(|p| {
                let name = sig.proposition(p);
                if model.holds(p, w) {
                    name.to_owned()
                } else {
                    format!("~{name}")
                }
            })
            .collect();
        node(&mut out, model.world(w), &[literals.join(",")], current == Some(w));
    }
    for (i, agent) in sig.agents().iter().enumerate() {
        for (u, v) in model.relation(i).pairs() {
            let mirrored = model.relation(i).contains(v, u);
            if u > v && mirrored || u == v && !opts.loops {
                continue;
            }
            let dir = if mirrored { "none" } else { "forward" };
            writeln!(
                out,
                "  {} -> {} [label={}, style=dashed, dir={dir}];",
                quote(model.world(u)),
                quote(model.world(v)),
                quote(agent)
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Arguments labeled with the agents that have them available; one edge
/// per attack, labeled `A(p)`.
pub fn argument_dot(model: &ArgumentModel, current: Option<usize>, opts: DotOptions) -> String {
    let sig = model.signature();
    let mut out = String::from("digraph argument {\n  node [shape=box];\n");
    for u in 0..model.argument_count() {
        let agents: Vec<&str> = (0..sig.agents().len())
            .filter(|&i| model.availability(i).contains(u))
            .map(|i| sig.agent(i))
            .collect();
        let extra = if agents.is_empty() {
            vec![]
        } else {
            vec![agents.join(",")]
        };
        node(&mut out, model.argument(u), &extra, current == Some(u));
    }
    for (p, prop) in sig.propositions().iter().enumerate() {
        for (attacked, attacker) in model.attacks(p).pairs() {
            let (from, to) = if opts.reverse_arrows {
                (attacker, attacked)
            } else {
                (attacked, attacker)
            };
            writeln!(
                out,
                "  {} -> {} [label={}];",
                quote(model.argument(from)),
                quote(model.argument(to)),
                quote(&format!("A({prop})"))
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}
