//! The integral presentation: relations and generator images over
//! `Z[q^(1/n), q^(-1/n)]`.

use alloc::format;
use alloc::vec::Vec;

use crate::functor::{gamma_integral_audit, GammaContext};
use crate::verify::catalog::instances;
use crate::verify::{check_with, Rel, Report};
use crate::webcat::build::*;
use crate::webcat::{Orient, Sense};

/// Every integral relation for labels at most 2, plus integrality audits of
/// the thick merges, splits and crossings they use.
pub fn int_suite(n: usize) -> Report {
    let ctx = GammaContext::integral(n);
    let mut parts = Vec::new();
    for &rel in Rel::ALL.iter().filter(|r| r.is_integral()) {
        for rid in instances(rel, 3) {
            if rid.params.iter().take(rel.keys().len()).all(|&p| p <= 2) {
                parts.push(check_with(&rid, &ctx));
            }
        }
    }
    for k in 1..=2 {
        for l in 1..=2 {
            for o in [Orient::Up, Orient::Down] {
                parts.push(audit(&ctx, format!("merge({},{}) {:?}", k, l, o), &thick_merge(k, l, o)));
                parts.push(audit(&ctx, format!("split({},{}) {:?}", k, l, o), &thick_split(k, l, o)));
            }
            for s in [Sense::Over, Sense::Under] {
                parts.push(audit(&ctx, format!("cross({},{}) {:?}", k, l, s), &thick_cross_up(k, l, s)));
            }
        }
    }
    Report::all("int-suite", format!("n={}", n), parts)
}

fn audit(ctx: &GammaContext, what: alloc::string::String, w: &crate::webcat::WebExpr) -> Report {
    let mut r = gamma_integral_audit(w, ctx);
    r.params = format!("{} {}", r.params, what);
    r
}
