use glweb::glnmod::{FactorKind, TensorSpace};
use glweb::linalg::Matrix;
use glweb::qalg::LaurentFraction;
use glweb::verify::Report;
use serde_json::{json, Value};

fn factors(s: &TensorSpace) -> Value {
    s.factors
        .iter()
        .map(|f| {
            let kind = match f.kind {
                FactorKind::Sym => "Sym",
                FactorKind::DualSym => "DualSym",
            };
            json!({ "kind": kind, "degree": f.degree })
        })
        .collect()
}

/// `{"domain": [..], "codomain": [..], "entries": [[row, col, "scalar"], ..]}`
pub fn matrix(dom: &TensorSpace, cod: &TensorSpace, m: &Matrix<LaurentFraction>) -> Value {
    let entries: Vec<Value> = m.entries().map(|(r, c, v)| json!([r, c, v.to_string()])).collect();
    json!({ "domain": factors(dom), "codomain": factors(cod), "entries": entries })
}

pub fn report(r: &Report) -> Value {
    let mut v = json!({
        "relation": r.name,
        "params": r.params,
        "status": r.status.to_string(),
        "lhs": r.lhs,
        "rhs": r.rhs,
    });
    if let Some(w) = &r.witness {
        v["witness"] = json!({ "row": w.row, "col": w.col, "lhs": w.lhs, "rhs": w.rhs });
    }
    if !r.note.is_empty() {
        v["note"] = json!(r.note);
    }
    v
}
