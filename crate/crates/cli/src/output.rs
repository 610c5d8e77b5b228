use serde_json::{json, Value};

use symchar::cache::table_to_json;
use symchar::{CharTable, CoveringPairReport, Partition};

/// Partition label safe inside a CSV cell.
fn dotted(p: &Partition) -> String {
    p.join(".")
}

pub fn table_csv(t: &CharTable) -> String {
    let mut out = String::from("lambda\\mu");
    for mu in t.order() {
        out.push(',');
        out.push_str(&dotted(mu));
    }
    out.push('\n');
    for (i, lambda) in t.order().iter().enumerate() {
        out.push_str(&dotted(lambda));
        for v in t.row(i) {
            out.push(',');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn table_pretty(t: &CharTable) -> String {
    let mut cells: Vec<Vec<String>> = Vec::with_capacity(t.dim() + 1);
    let mut header = vec![String::new()];
    header.extend(t.order().iter().map(|mu| mu.to_string()));
    cells.push(header);
    for (i, lambda) in t.order().iter().enumerate() {
        let mut row = vec![lambda.to_string()];
        row.extend(t.row(i).iter().map(|v| v.to_string()));
        cells.push(row);
    }
    let widths: Vec<usize> = (0..=t.dim())
        .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(c, (s, &w))| if c == 0 { format!("{s:<w$}") } else { format!("{s:>w$}") })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn table_json(t: &CharTable) -> String {
    table_to_json(t)
}

pub fn report_value(r: &CoveringPairReport) -> Value {
    let pairs: Vec<Value> = r
        .pairs
        .iter()
        .map(|p| json!([p.first.parts(), p.second.parts()]))
        .collect();
    json!({
        "n": r.n,
        "k_value": r.k_value,
        "pairs": pairs,
        "degenerate_pairs": r.degenerate_count(),
        "matches_theorem": r.matches_theorem,
        "pruning_stats": {
            "examined": r.pruning_stats.examined,
            "pruned_parity": r.pruning_stats.pruned_parity,
            "pruned_merge": r.pruning_stats.pruned_merge,
            "fully_checked": r.pruning_stats.fully_checked,
        },
        "vacuous": r.vacuous,
    })
}

pub fn report_json(r: &CoveringPairReport) -> String {
    let mut s = serde_json::to_string_pretty(&report_value(r)).expect("report serializes");
    s.push('\n');
    s
}

pub fn report_csv(r: &CoveringPairReport) -> String {
    let mut out = String::from("mu,nu,degenerate\n");
    for p in &r.pairs {
        out.push_str(&format!("{},{},{}\n", dotted(&p.first), dotted(&p.second), p.is_degenerate()));
    }
    out
}

pub fn report_pretty(r: &CoveringPairReport) -> String {
    let mut out = format!("S_{}: {} covering pair(s)", r.n, r.pairs.len());
    if r.vacuous {
        out.push_str(" (vacuous: no non-linear characters)");
    }
    out.push('\n');
    for p in &r.pairs {
        let tag = if p.is_degenerate() { "  [same class]" } else { "" };
        out.push_str(&format!("  {{{}, {}}}{tag}\n", p.first, p.second));
    }
    match r.k_value {
        Some(k) => out.push_str(&format!("k = {k}\n")),
        None => out.push_str("k > 2\n"),
    }
    match r.matches_theorem {
        Some(true) => out.push_str("matches {(n), (n-1,1)}: yes\n"),
        Some(false) => out.push_str("matches {(n), (n-1,1)}: NO\n"),
        None => {}
    }
    let s = &r.pruning_stats;
    out.push_str(&format!(
        "pairs examined {}, pruned by parity {}, pruned by merge {}, fully checked {}\n",
        s.examined, s.pruned_parity, s.pruned_merge, s.fully_checked
    ));
    out
}
