//! Renders the degree list in the stanza format the main crate loads.

use crate::assemble::Entry;

pub fn render(entries: &[Entry]) -> String {
    let mut out = String::new();
    out.push_str("# Unipotent character degrees for groups of type E6, in factored form.\n");
    out.push_str("# Generated by the weyltab crate; regenerate with `cargo run -p weyltab`.\n");
    out.push_str("# Family-internal labels are bookkeeping; consumers match on degrees.\n");
    for e in entries {
        out.push('\n');
        out.push_str(&format!("e6char {}\n", e.label));
        out.push_str(&format!("degree = {}\n", e.degree));
    }
    out
}
