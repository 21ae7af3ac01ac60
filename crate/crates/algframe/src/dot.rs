//! Graphviz output for Hasse diagrams.

use std::fmt::Write;

use algframe_core::dlat::FinDLat;
use algframe_core::order::Poset;
use algframe_core::priestley::FinPriestley;
use algframe_core::Error as CoreError;

use crate::{Error, Result};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn hasse(name: &str, p: &Poset, label: impl Fn(usize) -> String, extra: impl Fn(usize) -> Option<String>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    out.push_str("  rankdir=BT;\n  node [shape=circle];\n");
    for i in 0..p.size() {
        write!(out, "  p{i} [label=\"{}\"", escape(&label(i))).unwrap();
        if let Some(x) = extra(i) {
            write!(out, ", xlabel=\"{}\", style=filled, fillcolor=lightgray", escape(&x)).unwrap();
        }
        out.push_str("];\n");
    }
    for (a, b) in p.covers() {
        writeln!(out, "  p{a} -> p{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Parses `--focus`: a comma-separated list of points.
pub fn parse_focus(s: &str, size: usize) -> Result<u64> {
    let mut mask = 0u64;
    for part in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i: usize = part
            .parse()
            .map_err(|_| Error::Usage(format!("bad point `{part}` in focus")))?;
        if i >= size {
            return Err(CoreError::Index { index: i, size }.into());
        }
        mask |= 1 << i;
    }
    Ok(mask)
}

/// The point poset of a space. With a focus upset `U`, each point is
/// annotated with the sets among `U`, `ker U`, `core U`, `reg U` and
/// `cen U` that contain it.
pub fn space_dot(x: &FinPriestley, focus: Option<u64>) -> Result<String> {
    let ops = match focus {
        Some(u) => {
            if !x.points().is_upset_mask(u) {
                return Err(CoreError::NotUpset.into());
            }
            Some([
                ("U", u),
                ("ker", x.kernel_mask(u)),
                ("core", x.core_mask(u)),
                ("reg", x.reg_part_mask(u)),
                ("cen", x.center_mask(u)),
            ])
        }
        None => None,
    };
    let p = x.points();
    Ok(hasse(
        "space",
        p,
        |i| p.labels().map_or_else(|| i.to_string(), |l| l[i].clone()),
        |i| {
            let ops = ops.as_ref()?;
            let tags: Vec<&str> = ops.iter().filter(|(_, m)| m >> i & 1 == 1).map(|(n, _)| *n).collect();
            (!tags.is_empty()).then(|| tags.join(" "))
        },
    ))
}

pub fn lattice_dot(l: &FinDLat) -> String {
    hasse("lattice", l.order(), |i| l.name(i).to_owned(), |_| None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_space() {
        let x = FinPriestley::new(Poset::chain(2)).unwrap();
        let d = space_dot(&x, Some(0b10)).unwrap();
        assert!(d.contains("p0 -> p1;"));
        assert!(d.contains("p1 [label=\"1\", xlabel=\"U ker core\""));
        assert!(d.contains("p0 [label=\"0\"];"));
        assert!(space_dot(&x, Some(0b01)).is_err());
    }

    #[test]
    fn focus_parsing() {
        assert_eq!(parse_focus("0, 2", 3).unwrap(), 0b101);
        assert_eq!(parse_focus("", 3).unwrap(), 0);
        assert!(parse_focus("3", 3).is_err());
        assert!(parse_focus("x", 3).is_err());
    }
}
