//! Human-readable rendering of reports.

use std::fmt::Write;

use crate::report::*;

fn grid(out: &mut String, rows: &[Vec<usize>], indent: &str) {
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        let _ = writeln!(out, "{indent}{}", cells.join(" "));
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render(r: &Report) -> String {
    let mut out = String::new();
    let i = &r.input;
    let _ = writeln!(
        out,
        "{}: {} input, degree {}, {} elements",
        r.command,
        i.kind,
        i.degree,
        i.elements.len()
    );
    if let Some(f) = i.faithful {
        let _ = writeln!(out, "  faithful: {}", yes(f));
    }
    for (k, e) in i.elements.iter().enumerate() {
        let label = i
            .labels
            .as_ref()
            .map(|l| format!(" ({})", l[k]))
            .unwrap_or_default();
        let _ = writeln!(out, "  [{k}] {e:?}{label}");
    }

    if let Some(c) = &r.classification {
        let _ = writeln!(out, "\nclassification");
        let _ = writeln!(
            out,
            "  monoid: {}   identity: {:?}",
            yes(c.is_monoid),
            c.identity
        );
        let _ = writeln!(
            out,
            "  group: {}   inverse: {}   clifford: {}   left-zero: {}",
            yes(c.is_group),
            yes(c.is_inverse),
            yes(c.is_clifford),
            yes(c.is_left_zero)
        );
        let _ = writeln!(out, "  idempotents: {:?}", c.idempotents);
        let _ = writeln!(out, "  |S| = |X|: {}", yes(c.size_matches_degree));
    }

    if let Some(u) = &r.unreps {
        let _ = writeln!(out, "\nunrepresentations: {} (route: {})", u.count, u.route);
        for (phi, table) in u.maps.iter().zip(&u.induced) {
            let _ = writeln!(out, "  phi = {phi:?}");
            grid(&mut out, table, "    ");
        }
    }

    if let Some(h) = &r.heap {
        let _ = writeln!(
            out,
            "\nheap: {} elements, axioms {}",
            h.size,
            if h.axioms { "hold" } else { "FAIL" }
        );
        let _ = writeln!(
            out,
            "  group with identity {}: abelian {}, cyclic {}, element orders {:?}",
            h.identity,
            yes(h.abelian),
            yes(h.cyclic),
            h.order_profile
        );
        grid(&mut out, &h.group_table, "    ");
    }

    if let Some(c) = &r.centralizer {
        let _ = writeln!(
            out,
            "\ncentralizer: {} maps, {} invertible",
            c.size,
            c.invertible.len()
        );
        for m in &c.invertible {
            let _ = writeln!(out, "  {m:?}");
        }
        if let Some(iso) = &c.heap_isomorphism {
            let _ = writeln!(out, "  heap group -> invertible centralizer: {iso:?}");
        }
    }

    if let Some(p) = &r.pseudounits {
        let _ = writeln!(out, "\npseudounits: {}", p.count);
        for a in &p.alphas {
            let _ = writeln!(out, "  {a:?}");
        }
        if let (Some(units), Some(images)) = (p.unit_count, &p.duality_images) {
            let _ = writeln!(out, "  units: {units}   alpha(1): {images:?}");
        }
    }

    if let Some(c) = &r.clifford {
        let _ = writeln!(out, "\nclifford decomposition");
        for comp in &c.components {
            let _ = writeln!(out, "  F({}) = {:?}", comp.idempotent, comp.elements);
        }
        for m in c.connecting.iter().filter(|m| m.from != m.to) {
            let pairs: Vec<String> = m.pairs.iter().map(|(x, y)| format!("{x}->{y}")).collect();
            let _ = writeln!(out, "  {} >= {}: {}", m.from, m.to, pairs.join(", "));
        }
        if let Some(t) = &c.theorem_c {
            let how = if t.exhaustive {
                "all".to_string()
            } else {
                format!("sampled (seed {})", t.seed.unwrap_or_default())
            };
            let _ = writeln!(
                out,
                "  theorem C: {} bijections ({how}), {} action homs, {} disagreements",
                t.bijections_checked,
                t.action_homs,
                t.disagreements.len()
            );
        }
        if let Some(e) = &c.existence {
            let _ = writeln!(out, "  unreps by evaluation: {}", e.evaluation_count);
            if let Some(comps) = &e.components {
                for (idem, ok) in comps {
                    let _ = writeln!(
                        out,
                        "    F({idem}) has an underrepresentation: {}",
                        yes(*ok)
                    );
                }
            }
        }
    }

    if !r.verdicts.is_empty() {
        let _ = writeln!(out, "\nverdicts");
        let width = r.verdicts.iter().map(|v| v.name.len()).max().unwrap_or(0);
        for v in &r.verdicts {
            let tag = if v.holds { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  {tag} {:<width$} {}", v.name, v.detail);
        }
    }
    if let Some(ms) = r.timing_ms {
        let _ = writeln!(out, "\n{ms:.2} ms");
    }
    out
}
