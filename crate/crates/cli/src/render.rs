use std::fmt::Write;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};
use unibranch::{
    branch_divisor, canonical_coeffs, from_pairs, proximity, relevant_positions,
    CurveInvariantsBig, EnriquesTreeBig, JumpingReportBig, RationalBig,
};

use crate::input::InputSpec;

pub fn pairs_string(inv: &CurveInvariantsBig) -> String {
    inv.pairs().to_string()
}

pub fn semigroup_string(inv: &CurveInvariantsBig) -> String {
    inv.semigroup()
        .map_or_else(|| "1".to_string(), |s| s.to_string())
}

pub fn characteristic_string(inv: &CurveInvariantsBig) -> String {
    inv.characteristic()
        .map_or_else(|| "1;".to_string(), |c| c.to_string())
}

pub fn tree_of(inv: &CurveInvariantsBig) -> EnriquesTreeBig {
    from_pairs(inv.pairs().pairs()).expect("validated pairs")
}

fn ratio(r: &RationalBig) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn number(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integer literal"))
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn jump_text(report: &JumpingReportBig, contributors: bool) -> String {
    let mut out = String::new();
    for n in report.numbers() {
        if contributors {
            writeln!(
                out,
                "{} {{{}}}",
                ratio(&n.value),
                joined(&n.contributors, ",")
            )
            .unwrap();
        } else {
            writeln!(out, "{}", ratio(&n.value)).unwrap();
        }
    }
    out
}

pub fn jump_json(input: &InputSpec, inv: &CurveInvariantsBig, report: &JumpingReportBig) -> String {
    let numbers: Vec<Value> = report
        .numbers()
        .iter()
        .map(|n| {
            json!({
                "num": number(n.value.numer()),
                "den": number(n.value.denom()),
                "contributors": n.contributors.iter().collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut obj = Map::new();
    obj.insert(
        "input".into(),
        json!({ "kind": input.kind.name(), "text": input.text }),
    );
    obj.insert("pairs".into(), pairs_string(inv).into());
    obj.insert("semigroup".into(), semigroup_string(inv).into());
    obj.insert("characteristic".into(), characteristic_string(inv).into());
    obj.insert("qbar".into(), report.qbar().iter().map(number).collect());
    obj.insert("jumping_numbers".into(), Value::Array(numbers));
    obj.insert(
        "lct".into(),
        report.lct().map_or(Value::Null, |r| ratio(&r).into()),
    );
    let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable");
    s.push('\n');
    s
}

pub fn tree_text(tree: &EnriquesTreeBig) -> String {
    let table = proximity(tree);
    let divisor = branch_divisor(tree);
    let mut out = String::new();
    writeln!(out, "vertices: {}", tree.vertex_count()).unwrap();
    writeln!(out, "weights: {}", joined(divisor.w(), " ")).unwrap();
    let edges = tree
        .edges()
        .iter()
        .enumerate()
        .map(|(i, k)| format!("{}-{}:{}", i + 1, i + 2, k));
    writeln!(out, "edges: {}", joined(edges, " ")).unwrap();
    writeln!(out, "proximity:").unwrap();
    for beta in 2..=tree.vertex_count() {
        writeln!(out, "  P_{beta} -> {}", joined(table.prox(beta), " ")).unwrap();
    }
    writeln!(out, "relevant: {}", joined(relevant_positions(tree), " ")).unwrap();
    writeln!(out, "e: {}", joined(divisor.e(), " ")).unwrap();
    writeln!(out, "w: {}", joined(divisor.w(), " ")).unwrap();
    writeln!(out, "k: {}", joined(canonical_coeffs(tree), " ")).unwrap();
    out
}

pub fn tree_dot(tree: &EnriquesTreeBig) -> String {
    let divisor = branch_divisor(tree);
    let relevant = relevant_positions(tree);
    let mut out = String::from("digraph enriques {\n");
    for (i, w) in divisor.w().iter().enumerate() {
        let alpha = i + 1;
        let mark = if relevant.contains(&alpha) {
            ", relevant=true, shape=doublecircle"
        } else {
            ""
        };
        writeln!(out, "  P{alpha} [label=\"P_{alpha} (w={w})\"{mark}];").unwrap();
    }
    for (i, kind) in tree.edges().iter().enumerate() {
        writeln!(out, "  P{} -> P{} [kind={kind}];", i + 1, i + 2).unwrap();
    }
    out.push_str("}\n");
    out
}
