use gsla_core::abgroup::characters;
use gsla_core::action::Verdict;
use gsla_core::catalog::{build, Built, Params};
use gsla_core::gradedmod::{reconstruct_module, schur_report, verify_module, weyl_decompose, graded_simple_module_check};
use gsla_core::io::{self, algebra_to_json, matrix_to_json, module_to_json, LoopBuildJson};
use gsla_core::liecore::{killing_gram, verify_algebra, GradedLieAlgebra};
use gsla_core::loopalg::{find_proper_ideal, loop_algebra, loop_ideal_decomposition, recognize};
use gsla_core::report::Check;
use gsla_core::{Options, Result};
use serde_json::{json, Value};

use crate::report::{Outcome, Report};

fn witnesses<T: std::fmt::Debug>(w: &[T]) -> String {
    w.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(" ")
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::GradedSimple(c) => json!({"verdict": v.name(), "certificate": format!("{c:?}")}),
        Verdict::NotGradedSimple { witness, reason } => {
            json!({"verdict": v.name(), "reason": reason, "witness_dim": witness.as_ref().map(|s| s.dim())})
        }
        Verdict::ProbablyGradedSimple { probes } => json!({"verdict": v.name(), "probes": probes}),
        Verdict::Inconclusive(r) => json!({"verdict": v.name(), "reason": r}),
    }
}

fn run<T>(r: Report, x: Result<T>, f: impl FnOnce(Report, T) -> Report) -> Report {
    match x {
        Ok(v) => f(r, v),
        Err(e) => r.failed_with(&e),
    }
}

pub fn verify(text: &str) -> Report {
    run(Report::new("verify"), io::parse_algebra(text), |mut r, g| {
        let rep = verify_algebra(&g);
        r.check(Check::from_bool("antisymmetry", rep.antisymmetry.is_empty(), witnesses(&rep.antisymmetry)));
        r.check(Check::from_bool("jacobi", rep.jacobi.is_empty(), witnesses(&rep.jacobi)));
        r.check(Check::from_bool("grading", rep.grading.is_empty(), witnesses(&rep.grading)));
        r.set("dim", g.dim());
        r.set("field", g.field().spec().to_string());
        r.set("group", g.group().to_string());
        r.set("minimal_grading", rep.minimal);
        if rep.passes() {
            r.finish("Verified", Outcome::Positive)
        } else {
            r.finish("NotALieAlgebra", Outcome::Negative)
        }
    })
}

/// `g(Q, P, a)` from a request, as an algebra document.
pub fn loop_build(text: &str) -> std::result::Result<Value, Report> {
    let built = io::parse_loop_build(text).and_then(|(q, p, a)| loop_algebra(&q, &p, &a));
    match built {
        Ok(l) => Ok(serde_json::to_value(algebra_to_json(&l.algebra)).expect("plain data")),
        Err(e) => Err(Report::new("loop-build").failed_with(&e)),
    }
}

fn lower_central_series(g: &GradedLieAlgebra, start: &gsla_core::exactfield::Subspace) -> Vec<usize> {
    let mut dims = vec![start.dim()];
    let mut cur = start.clone();
    while !cur.is_zero() && dims.len() <= g.dim() + 1 {
        let next = g.bracket_subspaces(start, &cur);
        if next == cur {
            break;
        }
        dims.push(next.dim());
        cur = next;
    }
    dims
}

pub fn decompose(text: &str, opts: &Options) -> Report {
    let is_request = serde_json::from_str::<Value>(text).ok().is_some_and(|v| v.get("P").is_some());
    let r = Report::new("decompose");
    if is_request {
        let built = io::parse_loop_build(text).and_then(|(q, p, a)| loop_algebra(&q, &p, &a));
        return run(r, built, |mut r, l| {
            r.check(Check::pass("loop-build"));
            match loop_ideal_decomposition(&l) {
                Ok(members) => {
                    r.check(Check::pass("ideal-decomposition"));
                    r.set("members", members.len());
                    r.set("member_dims", members.iter().map(|m| m.ideal.dim()).collect::<Vec<_>>());
                    r.set("P_order", l.p.order());
                    r.finish("Decomposed", Outcome::Positive)
                }
                Err(e) => {
                    diagnose(&mut r, &l.algebra, opts);
                    r.failed_with(&e)
                }
            }
        });
    }
    run(r, io::parse_algebra(text), |mut r, g| {
        if !verify_algebra(&g).passes() {
            r.check(Check::fail("input-verifies", "the input is not a graded Lie algebra"));
            return r.finish("NotALieAlgebra", Outcome::Negative);
        }
        r.check(Check::pass("input-verifies"));
        if let Err(e) = characters(g.group(), g.field()) {
            diagnose(&mut r, &g, opts);
            return r.failed_with(&e);
        }
        r.check(Check::pass("characters"));
        match recognize(&g, opts) {
            Ok(rec) => {
                // input-verifies was already recorded above
                for c in rec.certificates.iter().filter(|c| c.name != "input-verifies") {
                    r.check(c.clone());
                }
                let members: Vec<usize> = match loop_ideal_decomposition(&rec.loop_algebra) {
                    Ok(m) => m.iter().map(|x| x.ideal.dim()).collect(),
                    Err(e) => return r.failed_with(&e),
                };
                r.check(Check::pass("ideal-decomposition"));
                r.set("members", members.len());
                r.set("member_dims", members);
                r.set("P_order", rec.p.order());
                if rec.certified() {
                    r.finish("Decomposed", Outcome::Positive)
                } else {
                    r.finish("Uncertified", outcome_for_failure(&rec.a_simplicity))
                }
            }
            Err(e) => {
                diagnose(&mut r, &g, opts);
                r.failed_with(&e)
            }
        }
    })
}

fn outcome_for_failure(s: &gsla_core::liecore::Simplicity) -> Outcome {
    if matches!(s, gsla_core::liecore::Simplicity::Unknown) {
        Outcome::Inconclusive
    } else {
        Outcome::Negative
    }
}

/// Why an algebra is not a sum of simple ideals: a proper ideal, its
/// derived and lower central series, and the Killing form.
fn diagnose(r: &mut Report, g: &GradedLieAlgebra, opts: &Options) {
    let (_, nondeg) = killing_gram(g);
    r.set("killing_nondegenerate", nondeg);
    if let Ok(Some((j, route))) = find_proper_ideal(g, opts) {
        r.set("proper_ideal_dim", j.dim());
        r.set("proper_ideal_route", format!("{route:?}"));
        r.set("lower_central_series", lower_central_series(g, &j));
        let jj = g.bracket_subspaces(&j, &j);
        r.set("derived_dim", jj.dim());
    }
}

pub fn recognize_cmd(text: &str, opts: &Options) -> Report {
    run(Report::new("recognize"), io::parse_algebra(text), |r, g| {
        run(r, recognize(&g, opts), |mut r, rec| {
            for c in &rec.certificates {
                r.check(c.clone());
            }
            r.set("P_generators", serde_json::to_value(rec.p.generators()).expect("plain data"));
            r.set("P_order", rec.p.order());
            r.set("tag", if rec.p.is_whole() { "untwisted" } else { "twisted" });
            r.set("route", rec.route.map(|x| format!("{x:?}")).unwrap_or_else(|| "simple".into()));
            r.set("graded", verdict_json(&rec.graded));
            r.set("a", serde_json::to_value(algebra_to_json(&rec.a)).expect("plain data"));
            r.set("phi", serde_json::to_value(matrix_to_json(&rec.phi)).expect("plain data"));
            if rec.certified() {
                r.finish("Recognized", Outcome::Positive)
            } else {
                let o = outcome_for_failure(&rec.a_simplicity);
                r.finish("Uncertified", o)
            }
        })
    })
}

fn simplicity_outcome(v: &Verdict) -> Outcome {
    match v {
        Verdict::GradedSimple(_) => Outcome::Positive,
        Verdict::NotGradedSimple { .. } => Outcome::Negative,
        _ => Outcome::Inconclusive,
    }
}

pub fn schur(text: &str, opts: &Options) -> Report {
    run(Report::new("schur"), io::parse_module(text), |r, w| {
        run(r, schur_report(&w, opts), |mut r, s| {
            r.check(Check::from_bool("end0-scalar", s.scalar_only, format!("dim End_0 = {}", s.end0_dim)));
            r.set("graded", verdict_json(&s.verdict));
            r.set("end0_dim", s.end0_dim);
            r.set("scalar_only", s.scalar_only);
            r.set(
                "per_degree",
                s.per_degree
                    .iter()
                    .map(|d| json!({"degree": d.degree, "dim": d.dim, "invertible": d.invertible}))
                    .collect::<Vec<_>>(),
            );
            let o = if !s.scalar_only { Outcome::Negative } else { simplicity_outcome(&s.verdict) };
            let name = if s.scalar_only { "ScalarEnd0" } else { "NonScalarEnd0" };
            r.finish(name, o)
        })
    })
}

pub fn weyl(text: &str, opts: &Options) -> Report {
    run(Report::new("weyl"), io::parse_module(text), |r, w| {
        run(r, weyl_decompose(&w, opts), |mut r, parts| {
            r.check(Check::pass("direct-sum"));
            r.set("summands", parts.len());
            r.set("summand_dims", parts.iter().map(|s| s.dim()).collect::<Vec<_>>());
            r.finish("Decomposed", Outcome::Positive)
        })
    })
}

pub fn mod_verify(text: &str, opts: &Options) -> Report {
    run(Report::new("mod-verify"), io::parse_module(text), |mut r, w| {
        let rep = verify_module(&w);
        r.check(Check::from_bool("action-law", rep.action_law.is_empty(), witnesses(&rep.action_law)));
        r.check(Check::from_bool("grading", rep.grading.is_empty(), witnesses(&rep.grading)));
        r.set("dim", w.dim());
        r.set("group", w.group().to_string());
        r.set("nontrivial", rep.nontrivial);
        if rep.passes() {
            r.set("graded", verdict_json(&graded_simple_module_check(&w, opts)));
            r.finish("Verified", Outcome::Positive)
        } else {
            r.finish("NotAModule", Outcome::Negative)
        }
    })
}

pub fn mod_recognize(text: &str, opts: &Options) -> Report {
    run(Report::new("mod-recognize"), io::parse_module(text), |r, w| {
        run(r, reconstruct_module(&w, opts), |mut r, rec| {
            for c in &rec.certificates {
                r.check(c.clone());
            }
            r.set("P_generators", serde_json::to_value(rec.choice.p.generators()).expect("plain data"));
            r.set("P_order", rec.choice.p.order());
            r.set("pprime", serde_json::to_value(rec.pprime.degrees()).expect("plain data"));
            r.set("vprime_dim", rec.vprime.dim());
            r.set("V_dim", rec.v.dim());
            r.set("V", serde_json::to_value(module_to_json(&rec.v)).expect("plain data"));
            r.set("iso", serde_json::to_value(matrix_to_json(&rec.iso)).expect("plain data"));
            r.set("graded", verdict_json(&rec.graded));
            r.set("V_graded", verdict_json(&rec.v_graded));
            r.set("V_ungraded", verdict_json(&rec.v_ungraded));
            if rec.certified() {
                r.finish("Reconstructed", Outcome::Positive)
            } else if rec.certificates.iter().all(|c| c.passed || c.name == "v-graded-simple")
                && !matches!(rec.v_graded, Verdict::NotGradedSimple { .. })
            {
                r.finish("Uncertified", Outcome::Inconclusive)
            } else {
                r.finish("Uncertified", Outcome::Negative)
            }
        })
    })
}

/// A catalog document: an algebra, a module, or a loop-build request.
pub fn catalog(name: &str, params: &Params) -> std::result::Result<Value, Report> {
    let doc = build(name, params).map(|b| match b {
        Built::Algebra(g) => serde_json::to_value(algebra_to_json(&g)),
        Built::Module(w) => serde_json::to_value(module_to_json(&w)),
        Built::LoopRequest(q, p, a) => serde_json::to_value(LoopBuildJson {
            format: io::FORMAT,
            group: io::group_to_json(&q),
            p: p.generators().to_vec(),
            a: algebra_to_json(&a),
        }),
    });
    doc.map(|v| v.expect("plain data"))
        .map_err(|e| Report::new("catalog").failed_with(&e))
}
